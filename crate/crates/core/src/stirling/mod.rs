//! The polynomial triangle and its numeric specializations.

mod profile;
mod routes;

pub(crate) use routes::chain_sum;

pub use profile::{specialize, ClassicalRecurrence, Profile};
pub use routes::{
    connection_check, explicit_polynomial, explicit_value, horizontal_expand, horizontal_expand_with,
    single_list, symmetric_formula, vertical_value, HorizontalStep,
};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::par;
use crate::poly::{linear, Assignment, MultiPoly};

/// Rows `0..=n_max` of `L(n, k)`; row `n` holds `k = 0..=n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenStirlingTable {
    rows: Vec<Vec<MultiPoly>>,
    zero: MultiPoly,
}

/// Builds the triangle with the triangular recurrence. Each row is computed
/// entry-parallel from the previous one.
pub fn build_table(n_max: usize) -> GenStirlingTable {
    let mut rows: Vec<Vec<MultiPoly>> = Vec::with_capacity(n_max + 1);
    rows.push(vec![MultiPoly::one()]);
    for n in 1..=n_max {
        let prev = &rows[n - 1];
        let row = par::map_range(0..n + 1, |k| {
            if k == 0 {
                return MultiPoly::zero();
            }
            let mut v = prev[k - 1].clone();
            if k < n {
                v += &(&linear(n as i64 - 1, k as i64, 0, 0) * &prev[k]);
            }
            v
        });
        rows.push(row);
    }
    GenStirlingTable {
        rows,
        zero: MultiPoly::zero(),
    }
}

impl GenStirlingTable {
    pub fn n_max(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn rows(&self) -> &[Vec<MultiPoly>] {
        &self.rows
    }

    pub fn require(&self, n: usize) -> Result<()> {
        if n > self.n_max() {
            return Err(Error::TableTooSmall {
                n_max: self.n_max(),
                needed: n,
            });
        }
        Ok(())
    }

    /// `L(n, k)`, zero for `k > n`.
    pub fn entry(&self, n: usize, k: usize) -> Result<&MultiPoly> {
        self.require(n)?;
        Ok(self.rows[n].get(k).unwrap_or(&self.zero))
    }

    /// Substitutes `a = alpha`, `b = beta` in every entry.
    pub fn evaluate(&self, alpha: &BigRational, beta: &BigRational) -> NumericTable {
        let at = Assignment::ab(alpha.clone(), beta.clone());
        let rows = par::map_slice(&self.rows, |row| {
            row.iter()
                .map(|p| p.eval(&at).expect("table entries only involve a and b"))
                .collect()
        });
        NumericTable { rows }
    }
}

/// A triangle of exact rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NumericTable {
    pub rows: Vec<Vec<BigRational>>,
}

impl NumericTable {
    /// Runs the triangular recurrence directly at a numeric point, skipping the
    /// polynomial stage. Equivalent to `build_table(n_max).evaluate(..)`.
    ///
    /// Entry `(n, k)` is homogeneous of degree `n - k`, so the recurrence is
    /// run over integers at `(d a, d b)` for a common denominator `d` and each
    /// entry is divided by `d^(n-k)` afterwards.
    pub fn from_recurrence(alpha: &BigRational, beta: &BigRational, n_max: usize) -> NumericTable {
        let d = alpha.denom().lcm(beta.denom());
        let ai = alpha.numer() * (&d / alpha.denom());
        let bi = beta.numer() * (&d / beta.denom());
        let mut int_rows: Vec<Vec<BigInt>> = Vec::with_capacity(n_max + 1);
        int_rows.push(vec![BigInt::one()]);
        for n in 1..=n_max {
            let prev = &int_rows[n - 1];
            let row = par::map_range(0..n + 1, |k| {
                if k == 0 {
                    return BigInt::zero();
                }
                let mut v = prev[k - 1].clone();
                if k < n {
                    v += (&ai * (n - 1) + &bi * k) * &prev[k];
                }
                v
            });
            int_rows.push(row);
        }
        let rows = par::map_range(0..n_max + 1, |n| {
            int_rows[n]
                .iter()
                .enumerate()
                .map(|(k, v)| {
                    if d.is_one() {
                        BigRational::from_integer(v.clone())
                    } else {
                        BigRational::new(v.clone(), num_traits::pow(d.clone(), n - k))
                    }
                })
                .collect()
        });
        NumericTable { rows }
    }

    /// Generic `T(n,k) = T(n-1,k-1) + f(n,k) T(n-1,k)` with `T(0,0) = 1`.
    pub fn with_factor<F>(n_max: usize, factor: F) -> NumericTable
    where
        F: Fn(usize, usize) -> BigRational + Sync + Send,
    {
        let mut rows: Vec<Vec<BigRational>> = Vec::with_capacity(n_max + 1);
        rows.push(vec![BigRational::one()]);
        for n in 1..=n_max {
            let prev = &rows[n - 1];
            let row = par::map_range(0..n + 1, |k| {
                if k == 0 {
                    return BigRational::zero();
                }
                let mut v = prev[k - 1].clone();
                if k < n {
                    v += factor(n, k) * &prev[k];
                }
                v
            });
            rows.push(row);
        }
        NumericTable { rows }
    }

    pub fn n_max(&self) -> usize {
        self.rows.len() - 1
    }

    /// `T(n, k)`, zero for `k > n`; `None` past the last row.
    pub fn get(&self, n: usize, k: usize) -> Option<BigRational> {
        let row = self.rows.get(n)?;
        Some(row.get(k).cloned().unwrap_or_else(BigRational::zero))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{Monomial, Var};

    #[test]
    fn first_rows() {
        let t = build_table(3);
        let s: Vec<Vec<String>> = t
            .rows()
            .iter()
            .map(|r| r.iter().map(|p| p.to_string()).collect())
            .collect();
        assert_eq!(
            s,
            vec![
                vec!["1"],
                vec!["0", "1"],
                vec!["0", "a + b", "1"],
                vec!["0", "2*a^2 + 3*a*b + b^2", "3*a + 3*b", "1"],
            ]
        );
        assert!(t.entry(2, 5).unwrap().is_zero());
        assert_eq!(
            t.entry(4, 1),
            Err(Error::TableTooSmall { n_max: 3, needed: 4 })
        );
    }

    #[test]
    fn table_shape_invariants() {
        let t = build_table(14);
        for n in 0..=14usize {
            assert!(t.entry(n, n).unwrap().is_one());
            if n > 0 {
                assert!(t.entry(n, 0).unwrap().is_zero());
            }
            for k in 1..=n {
                let p = t.entry(n, k).unwrap();
                assert!(p.is_homogeneous((n - k) as u32));
                assert!(p.has_nonnegative_coefficients());
                assert_eq!(p.degree_in(Var::X), 0);
                assert_eq!(p.coeff(&Monomial::ONE).is_zero(), n != k);
            }
        }
    }

    #[test]
    fn subdiagonal_at_lah_point() {
        let t = build_table(12);
        let one = BigRational::one();
        let lah = t.evaluate(&one, &one);
        for n in 1..=12usize {
            assert_eq!(
                lah.get(n, n - 1).unwrap(),
                BigRational::from_integer((n * (n - 1)).into())
            );
        }
    }

    #[test]
    fn numeric_recurrence_matches_evaluation() {
        let t = build_table(16);
        for (a, b) in [(1, 1), (0, 1), (1, 0), (-3, 2), (5, -7)] {
            let alpha = BigRational::from_integer(a.into());
            let beta = BigRational::from_integer(b.into());
            assert_eq!(NumericTable::from_recurrence(&alpha, &beta, 16), t.evaluate(&alpha, &beta));
        }
        let half = BigRational::new(1.into(), 2.into());
        let third = BigRational::new((-1).into(), 3.into());
        assert_eq!(NumericTable::from_recurrence(&half, &third, 16), t.evaluate(&half, &third));
    }

    #[test]
    fn empty_triangle() {
        let t = build_table(0);
        assert_eq!(t.n_max(), 0);
        assert!(t.entry(0, 0).unwrap().is_one());
    }
}
