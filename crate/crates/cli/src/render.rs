//! Triangle renderers. Output is a pure function of the table.

use std::io::Write;

use anyhow::Result;
use clap::ValueEnum;
use genstirling::{GenStirlingTable, NumericTable};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// One bracketed row per line.
    Text,
    /// Nested arrays; polynomials in term-object form, numbers as strings.
    Json,
    /// Columns `n,k,value`.
    Csv,
}

fn rows_as_strings<T: ToString>(rows: &[Vec<T>]) -> Vec<Vec<String>> {
    rows.iter()
        .map(|r| r.iter().map(ToString::to_string).collect())
        .collect()
}

fn write_text_or_csv(rows: &[Vec<String>], format: Format, out: &mut dyn Write) -> Result<()> {
    match format {
        Format::Text => {
            for row in rows {
                writeln!(out, "[{}]", row.join(", "))?;
            }
        }
        Format::Csv => {
            writeln!(out, "n,k,value")?;
            for (n, row) in rows.iter().enumerate() {
                for (k, v) in row.iter().enumerate() {
                    writeln!(out, "{n},{k},{v}")?;
                }
            }
        }
        Format::Json => unreachable!("json handled by the caller"),
    }
    Ok(())
}

pub fn poly_table(table: &GenStirlingTable, format: Format, out: &mut dyn Write) -> Result<()> {
    if format == Format::Json {
        serde_json::to_writer(&mut *out, table.rows())?;
        writeln!(out)?;
        return Ok(());
    }
    write_text_or_csv(&rows_as_strings(table.rows()), format, out)
}

pub fn numeric_table(table: &NumericTable, format: Format, out: &mut dyn Write) -> Result<()> {
    let rows = rows_as_strings(&table.rows);
    if format == Format::Json {
        serde_json::to_writer(&mut *out, &rows)?;
        writeln!(out)?;
        return Ok(());
    }
    write_text_or_csv(&rows, format, out)
}
