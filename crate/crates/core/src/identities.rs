//! Identity checks against the recurrence triangle.
//!
//! Every check produces an [`IdentityReport`] whose residual is
//! `computed - expected` as an exact polynomial. A check passes iff the
//! residual is zero.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::factorials::multinomial;
use crate::oracle::{self, OracleConfig};
use crate::par;
use crate::poly::{linear, MultiPoly};
use crate::stirling::{self, GenStirlingTable, HorizontalStep};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum IdentityId {
    /// Inclusion-exclusion closed form, polynomial route.
    Explicit,
    /// Horizontal expansion over the next row, step `b`.
    Horizontal,
    /// Horizontal expansion with step `a`; known to fail.
    HorizontalAlphaStep,
    /// Binomial sum down a column.
    Vertical,
    /// Non-decreasing chain sum for `L(n + k, n)`.
    Symmetric,
    /// Multinomial convolution over colorings of the lists.
    Multinomial,
    /// Splitting off the last `s` elements of `L(k + m, k)`.
    TailConvolution,
    /// Rising factorial in `x` expanded over falling factorials.
    Connection,
    /// Brute-force enumeration equals the triangle.
    Oracle,
}

impl IdentityId {
    pub const ALL: [IdentityId; 9] = [
        IdentityId::Explicit,
        IdentityId::Horizontal,
        IdentityId::HorizontalAlphaStep,
        IdentityId::Vertical,
        IdentityId::Symmetric,
        IdentityId::Multinomial,
        IdentityId::TailConvolution,
        IdentityId::Connection,
        IdentityId::Oracle,
    ];

    /// Everything that is supposed to hold.
    pub const DEFAULT: [IdentityId; 8] = [
        IdentityId::Explicit,
        IdentityId::Horizontal,
        IdentityId::Vertical,
        IdentityId::Symmetric,
        IdentityId::Multinomial,
        IdentityId::TailConvolution,
        IdentityId::Connection,
        IdentityId::Oracle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IdentityId::Explicit => "explicit",
            IdentityId::Horizontal => "horizontal",
            IdentityId::HorizontalAlphaStep => "horizontal-alpha-step",
            IdentityId::Vertical => "vertical",
            IdentityId::Symmetric => "symmetric",
            IdentityId::Multinomial => "multinomial",
            IdentityId::TailConvolution => "tail-convolution",
            IdentityId::Connection => "connection",
            IdentityId::Oracle => "oracle",
        }
    }

    pub fn expected_failure(self) -> bool {
        self == IdentityId::HorizontalAlphaStep
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IdentityId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let id = match s {
            "thm2" => IdentityId::Explicit,
            "thm4" => IdentityId::Horizontal,
            "thm4-as-printed" => IdentityId::HorizontalAlphaStep,
            "thm5" => IdentityId::Vertical,
            "thm6" => IdentityId::Symmetric,
            "thm7" => IdentityId::Multinomial,
            "thm8" => IdentityId::TailConvolution,
            other => *IdentityId::ALL
                .iter()
                .find(|id| id.name() == other)
                .ok_or_else(|| Error::Parse {
                    input: s.to_string(),
                    reason: "unknown identity".into(),
                })?,
        };
        Ok(id)
    }
}

/// Parameters of one check. Unused fields are omitted from JSON.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Params {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub m: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub s: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub parts: Option<Vec<usize>>,
}

impl Params {
    pub fn n(n: usize) -> Self {
        Params {
            n: Some(n),
            ..Params::default()
        }
    }

    pub fn nk(n: usize, k: usize) -> Self {
        Params {
            n: Some(n),
            k: Some(k),
            ..Params::default()
        }
    }

    pub fn parts(n: usize, parts: &[usize]) -> Self {
        Params {
            n: Some(n),
            parts: Some(parts.to_vec()),
            ..Params::default()
        }
    }

    pub fn kms(k: usize, m: usize, s: usize) -> Self {
        Params {
            k: Some(k),
            m: Some(m),
            s: Some(s),
            ..Params::default()
        }
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut fields = Vec::new();
        for (name, v) in [("n", self.n), ("k", self.k), ("m", self.m), ("s", self.s)] {
            if let Some(v) = v {
                fields.push(format!("{name}={v}"));
            }
        }
        if let Some(p) = &self.parts {
            fields.push(format!("parts={p:?}"));
        }
        f.write_str(&fields.join(" "))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub identity: IdentityId,
    pub params: Params,
    pub pass: bool,
    pub expected_failure: bool,
    pub residual: MultiPoly,
    pub counterexample: Option<Params>,
}

impl IdentityReport {
    pub fn new(identity: IdentityId, params: Params, residual: MultiPoly) -> Self {
        let pass = residual.is_zero();
        IdentityReport {
            identity,
            counterexample: (!pass).then(|| params.clone()),
            params,
            pass,
            expected_failure: identity.expected_failure(),
            residual,
        }
    }

    /// A failure that is not registered as expected.
    pub fn is_unexpected_failure(&self) -> bool {
        !self.pass && !self.expected_failure
    }
}

fn against_table(
    id: IdentityId,
    params: Params,
    computed: MultiPoly,
    table: &GenStirlingTable,
    n: usize,
    k: usize,
) -> Result<IdentityReport> {
    Ok(IdentityReport::new(id, params, &computed - table.entry(n, k)?))
}

pub fn check_explicit(n: usize, k: usize, table: &GenStirlingTable) -> Result<IdentityReport> {
    let computed = stirling::explicit_polynomial(n, k)?;
    against_table(IdentityId::Explicit, Params::nk(n, k), computed, table, n, k)
}

pub fn check_horizontal(
    n: usize,
    k: usize,
    step: HorizontalStep,
    table: &GenStirlingTable,
) -> Result<IdentityReport> {
    let id = match step {
        HorizontalStep::Beta => IdentityId::Horizontal,
        HorizontalStep::Alpha => IdentityId::HorizontalAlphaStep,
    };
    let computed = stirling::horizontal_expand_with(n, k, table, step)?;
    against_table(id, Params::nk(n, k), computed, table, n, k)
}

/// Checks the column sum for entry `(n, k)` with `n, k ≥ 1`.
pub fn check_vertical(n: usize, k: usize, table: &GenStirlingTable) -> Result<IdentityReport> {
    if n == 0 || k == 0 {
        return Err(Error::InvalidIndex { n, k });
    }
    let computed = stirling::vertical_value(n - 1, k - 1, table)?;
    against_table(IdentityId::Vertical, Params::nk(n, k), computed, table, n, k)
}

/// Checks the chain sum for entry `(n, k)`, computed as `L(k + (n-k), k)`.
pub fn check_symmetric(n: usize, k: usize, table: &GenStirlingTable) -> Result<IdentityReport> {
    if k > n {
        return Err(Error::InvalidIndex { n, k });
    }
    let computed = stirling::symmetric_formula(k, n - k);
    against_table(IdentityId::Symmetric, Params::nk(n, k), computed, table, n, k)
}

pub fn check_oracle(n: usize, k: usize, cap: usize, table: &GenStirlingTable) -> Result<IdentityReport> {
    let config = OracleConfig {
        cap,
        ..OracleConfig::default()
    };
    let computed = oracle::enumerate_weight_with(n, k, &config)?;
    against_table(IdentityId::Oracle, Params::nk(n, k), computed, table, n, k)
}

/// `C(k; k_1..k_p) L(n,k) = Σ_{l_1+…+l_p = n} C(n; l_1..l_p) ∏ L(l_i, k_i)`
/// with `k = Σ k_i`.
pub fn check_multinomial_convolution(
    n: usize,
    parts: &[usize],
    table: &GenStirlingTable,
) -> Result<IdentityReport> {
    table.require(n)?;
    let k: usize = parts.iter().sum();
    let lhs = table.entry(n, k)?.scale(&multinomial(k, parts)?);
    let mut rhs = MultiPoly::zero();
    let mut split = vec![0usize; parts.len()];
    for_each_composition(n, &mut split, 0, &mut |ls| -> Result<()> {
        let mut prod = MultiPoly::constant(multinomial(n, ls)?);
        for (&l, &ki) in ls.iter().zip(parts) {
            let entry = table.entry(l, ki)?;
            if entry.is_zero() {
                return Ok(());
            }
            prod = &prod * entry;
        }
        rhs += &prod;
        Ok(())
    })?;
    Ok(IdentityReport::new(
        IdentityId::Multinomial,
        Params::parts(n, parts),
        &lhs - &rhs,
    ))
}

/// Calls `f` on every weak composition of `n` into `slots.len()` parts, in
/// lexicographic order.
fn for_each_composition<F>(n: usize, slots: &mut [usize], at: usize, f: &mut F) -> Result<()>
where
    F: FnMut(&[usize]) -> Result<()>,
{
    if slots.is_empty() {
        return if n == 0 { f(slots) } else { Ok(()) };
    }
    if at + 1 == slots.len() {
        slots[at] = n;
        return f(slots);
    }
    for first in 0..=n {
        slots[at] = first;
        for_each_composition(n - first, slots, at + 1, f)?;
    }
    Ok(())
}

/// Weight polynomial attached to `L(k+m-s, k-j)` in the tail expansion of
/// `L(k+m, k)`: a sum over chains `k-j ≤ i_1 ≤ … ≤ i_{s-j} ≤ k` of
/// `∏_l ((a+b) i_{l+1} + a (m - (s-j-l)))`.
pub fn tail_coefficient(k: usize, m: usize, s: usize, j: usize) -> MultiPoly {
    let len = s - j;
    stirling::chain_sum(k - j, k, len, |l, i| {
        let shift = m as i64 - (len - l) as i64;
        linear(i as i64 + shift, i as i64, 0, 0)
    })
}

/// `L(k+m, k) = Σ_{j=0}^{s} tail_coefficient(k,m,s,j) · L(k+m-s, k-j)` for
/// `0 ≤ s ≤ min(k, m)`.
pub fn check_tail_convolution(k: usize, m: usize, s: usize, table: &GenStirlingTable) -> Result<IdentityReport> {
    let max = k.min(m);
    if s > max {
        return Err(Error::BadRange { k, m, s, max });
    }
    table.require(k + m)?;
    let mut rhs = MultiPoly::zero();
    for j in 0..=s {
        let entry = table.entry(k + m - s, k - j)?;
        if entry.is_zero() {
            continue;
        }
        rhs += &(&tail_coefficient(k, m, s, j) * entry);
    }
    Ok(IdentityReport::new(
        IdentityId::TailConvolution,
        Params::kms(k, m, s),
        &rhs - table.entry(k + m, k)?,
    ))
}

/// Parameter ranges for [`run_suite`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteRanges {
    pub identities: Vec<IdentityId>,
    /// Entries `0 ≤ k ≤ n ≤ max_n` for the per-entry routes, the connection
    /// identity and the multinomial convolution.
    pub max_n: usize,
    /// Number of colors `p` in the multinomial convolution, `1..=max_parts`.
    pub max_parts: usize,
    /// `k, m ≤ max_km` for the tail convolution.
    pub max_km: usize,
    /// Oracle comparison covers `n ≤ min(max_n, oracle_max_n)`.
    pub oracle_max_n: usize,
}

impl Default for SuiteRanges {
    fn default() -> Self {
        SuiteRanges {
            identities: IdentityId::DEFAULT.to_vec(),
            max_n: 10,
            max_parts: 3,
            max_km: 5,
            oracle_max_n: 8,
        }
    }
}

impl SuiteRanges {
    pub fn empty() -> Self {
        SuiteRanges {
            identities: Vec::new(),
            ..SuiteRanges::default()
        }
    }

    /// Scales every range from a single `max_n`, the way the CLI does.
    pub fn up_to(max_n: usize) -> Self {
        SuiteRanges {
            max_n,
            max_km: max_n / 2,
            oracle_max_n: max_n.min(8),
            ..SuiteRanges::default()
        }
    }

    /// Largest row any selected check reads.
    pub fn required_rows(&self) -> usize {
        self.identities
            .iter()
            .map(|id| match id {
                IdentityId::Horizontal | IdentityId::HorizontalAlphaStep => self.max_n + 1,
                IdentityId::TailConvolution => 2 * self.max_km,
                _ => self.max_n,
            })
            .max()
            .unwrap_or(0)
    }

    fn jobs(&self) -> Vec<(IdentityId, Params)> {
        let mut jobs = Vec::new();
        let mut ids = self.identities.clone();
        ids.sort();
        ids.dedup();
        for id in ids {
            match id {
                IdentityId::Explicit
                | IdentityId::Horizontal
                | IdentityId::HorizontalAlphaStep
                | IdentityId::Symmetric
                | IdentityId::Oracle => {
                    let top = if id == IdentityId::Oracle {
                        self.max_n.min(self.oracle_max_n)
                    } else {
                        self.max_n
                    };
                    for n in 0..=top {
                        for k in 0..=n {
                            jobs.push((id, Params::nk(n, k)));
                        }
                    }
                }
                IdentityId::Vertical => {
                    for n in 1..=self.max_n {
                        for k in 1..=n {
                            jobs.push((id, Params::nk(n, k)));
                        }
                    }
                }
                IdentityId::Connection => {
                    for n in 0..=self.max_n {
                        jobs.push((id, Params::n(n)));
                    }
                }
                IdentityId::Multinomial => {
                    for n in 0..=self.max_n {
                        for p in 1..=self.max_parts {
                            let mut slots = vec![0; p];
                            for total in 0..=n {
                                let _ = for_each_composition(total, &mut slots, 0, &mut |ks| {
                                    jobs.push((id, Params::parts(n, ks)));
                                    Ok(())
                                });
                            }
                        }
                    }
                }
                IdentityId::TailConvolution => {
                    for k in 0..=self.max_km {
                        for m in 0..=self.max_km {
                            for s in 0..=k.min(m) {
                                jobs.push((id, Params::kms(k, m, s)));
                            }
                        }
                    }
                }
            }
        }
        jobs
    }
}

fn run_one(id: IdentityId, p: &Params, table: &GenStirlingTable, oracle_cap: usize) -> Result<IdentityReport> {
    let n = p.n.unwrap_or(0);
    let k = p.k.unwrap_or(0);
    match id {
        IdentityId::Explicit => check_explicit(n, k, table),
        IdentityId::Horizontal => check_horizontal(n, k, HorizontalStep::Beta, table),
        IdentityId::HorizontalAlphaStep => check_horizontal(n, k, HorizontalStep::Alpha, table),
        IdentityId::Vertical => check_vertical(n, k, table),
        IdentityId::Symmetric => check_symmetric(n, k, table),
        IdentityId::Oracle => check_oracle(n, k, oracle_cap, table),
        IdentityId::Connection => stirling::connection_check(n, table),
        IdentityId::Multinomial => {
            check_multinomial_convolution(n, p.parts.as_deref().unwrap_or(&[]), table)
        }
        IdentityId::TailConvolution => {
            check_tail_convolution(k, p.m.unwrap_or(0), p.s.unwrap_or(0), table)
        }
    }
}

/// Runs every selected identity over its range. Checks run in parallel; the
/// returned list is sorted by identity, then parameters.
pub fn run_suite(ranges: &SuiteRanges, table: &GenStirlingTable) -> Result<Vec<IdentityReport>> {
    if ranges.identities.is_empty() {
        return Ok(Vec::new());
    }
    table.require(ranges.required_rows())?;
    let oracle_cap = ranges.oracle_max_n.max(oracle::DEFAULT_CAP);
    let jobs = ranges.jobs();
    let results = par::map_slice(&jobs, |(id, p)| run_one(*id, p, table, oracle_cap));
    let mut reports = results.into_iter().collect::<Result<Vec<_>>>()?;
    reports.sort_by(|a, b| (a.identity, &a.params).cmp(&(b.identity, &b.params)));
    Ok(reports)
}
