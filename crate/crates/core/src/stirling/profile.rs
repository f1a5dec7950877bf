//! Named numeric specializations of `(a, b)` and the classical recurrences
//! they are checked against.

use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{build_table, NumericTable};
use crate::error::{Error, Result};
use crate::poly::parse_rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Profile {
    /// Unsigned Stirling numbers of the first kind, `(a, b) = (1, 0)`.
    Stirling1,
    /// Stirling numbers of the second kind, `(0, 1)`.
    Stirling2,
    /// Lah numbers, `(1, 1)`.
    Lah,
    /// Translated Whitney numbers of the first kind, `(m, 0)`.
    Whitney1(BigRational),
    /// Translated Whitney numbers of the second kind, `(0, m)`.
    Whitney2(BigRational),
    /// Translated Whitney-Lah numbers, `(m, m)`.
    WhitneyLah(BigRational),
    /// Degenerate Stirling numbers, `(-λ, 1)`.
    Degenerate1(BigRational),
    /// Degenerate family with `(a, b) = (-1, λ)`.
    Degenerate2(BigRational),
}

/// The textbook recurrence a profile is cross-checked against, written in
/// its classical form rather than via `a (n-1) + b k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClassicalRecurrence {
    /// `c(n,k) = c(n-1,k-1) + (n-1) c(n-1,k)`
    CycleCount,
    /// `S(n,k) = S(n-1,k-1) + k S(n-1,k)`
    BlockCount,
    /// `L(n,k) = L(n-1,k-1) + (n+k-1) L(n-1,k)`
    ListCount,
    /// cycle count with every non-leading element colored `m` ways
    ColoredCycles,
    /// block count with `m` colors
    ColoredBlocks,
    /// list count with `m` colors
    ColoredLists,
    /// `S(n,k) = S(n-1,k-1) + (k - λ (n-1)) S(n-1,k)`
    DegenerateBlocks,
    /// `T(n,k) = T(n-1,k-1) + (λ k - (n-1)) T(n-1,k)`
    DegenerateLists,
}

fn int(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

impl Profile {
    pub fn name(&self) -> String {
        match self {
            Profile::Stirling1 => "stirling1".into(),
            Profile::Stirling2 => "stirling2".into(),
            Profile::Lah => "lah".into(),
            Profile::Whitney1(m) => format!("whitney1:{m}"),
            Profile::Whitney2(m) => format!("whitney2:{m}"),
            Profile::WhitneyLah(m) => format!("whitney-lah:{m}"),
            Profile::Degenerate1(l) => format!("degenerate1:{l}"),
            Profile::Degenerate2(l) => format!("degenerate2:{l}"),
        }
    }

    pub fn alpha(&self) -> BigRational {
        match self {
            Profile::Stirling1 | Profile::Lah => int(1),
            Profile::Stirling2 | Profile::Whitney2(_) => int(0),
            Profile::Whitney1(m) | Profile::WhitneyLah(m) => m.clone(),
            Profile::Degenerate1(l) => -l.clone(),
            Profile::Degenerate2(_) => int(-1),
        }
    }

    pub fn beta(&self) -> BigRational {
        match self {
            Profile::Stirling1 | Profile::Whitney1(_) => int(0),
            Profile::Stirling2 | Profile::Lah | Profile::Degenerate1(_) => int(1),
            Profile::Whitney2(m) | Profile::WhitneyLah(m) | Profile::Degenerate2(m) => m.clone(),
        }
    }

    pub fn reference_recurrence(&self) -> ClassicalRecurrence {
        match self {
            Profile::Stirling1 => ClassicalRecurrence::CycleCount,
            Profile::Stirling2 => ClassicalRecurrence::BlockCount,
            Profile::Lah => ClassicalRecurrence::ListCount,
            Profile::Whitney1(_) => ClassicalRecurrence::ColoredCycles,
            Profile::Whitney2(_) => ClassicalRecurrence::ColoredBlocks,
            Profile::WhitneyLah(_) => ClassicalRecurrence::ColoredLists,
            Profile::Degenerate1(_) => ClassicalRecurrence::DegenerateBlocks,
            Profile::Degenerate2(_) => ClassicalRecurrence::DegenerateLists,
        }
    }

    /// Triangle from the profile's classical recurrence.
    pub fn reference_triangle(&self, n_max: usize) -> NumericTable {
        let param = match self {
            Profile::Whitney1(p)
            | Profile::Whitney2(p)
            | Profile::WhitneyLah(p)
            | Profile::Degenerate1(p)
            | Profile::Degenerate2(p) => p.clone(),
            _ => BigRational::one(),
        };
        let rule = self.reference_recurrence();
        NumericTable::with_factor(n_max, move |n, k| {
            let (n, k) = (n as i64, k as i64);
            match rule {
                ClassicalRecurrence::CycleCount => int(n - 1),
                ClassicalRecurrence::BlockCount => int(k),
                ClassicalRecurrence::ListCount => int(n + k - 1),
                ClassicalRecurrence::ColoredCycles => &param * int(n - 1),
                ClassicalRecurrence::ColoredBlocks => &param * int(k),
                ClassicalRecurrence::ColoredLists => &param * int(n + k - 1),
                ClassicalRecurrence::DegenerateBlocks => int(k) - &param * int(n - 1),
                ClassicalRecurrence::DegenerateLists => &param * int(k) - int(n - 1),
            }
        })
    }

    /// Numeric triangle straight from the triangular recurrence at this
    /// profile's point. Suitable for rows far past the polynomial limit.
    pub fn numeric_triangle(&self, n_max: usize) -> NumericTable {
        NumericTable::from_recurrence(&self.alpha(), &self.beta(), n_max)
    }
}

/// Evaluates the polynomial triangle at the profile's `(a, b)`.
pub fn specialize(profile: &Profile, n_max: usize) -> NumericTable {
    build_table(n_max).evaluate(&profile.alpha(), &profile.beta())
}

impl fmt::Display for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl FromStr for Profile {
    type Err = Error;

    /// `stirling1`, `stirling2`, `lah`, or `<family>:<rational>` for
    /// `whitney1`, `whitney2`, `whitney-lah`, `degenerate1`, `degenerate2`.
    fn from_str(s: &str) -> Result<Self> {
        let unknown = || Error::UnknownProfile(s.to_string());
        let (family, param) = match s.split_once(':') {
            Some((f, p)) => (f, Some(parse_rational(p)?)),
            None => (s, None),
        };
        let profile = match (family, param) {
            ("stirling1", None) => Profile::Stirling1,
            ("stirling2", None) => Profile::Stirling2,
            ("lah", None) => Profile::Lah,
            ("whitney1", Some(m)) if !m.is_zero() => Profile::Whitney1(m),
            ("whitney2", Some(m)) if !m.is_zero() => Profile::Whitney2(m),
            ("whitney-lah", Some(m)) if !m.is_zero() => Profile::WhitneyLah(m),
            ("degenerate1", Some(l)) => Profile::Degenerate1(l),
            ("degenerate2", Some(l)) => Profile::Degenerate2(l),
            _ => return Err(unknown()),
        };
        Ok(profile)
    }
}
