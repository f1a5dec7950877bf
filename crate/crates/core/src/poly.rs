//! Sparse polynomials in the three fixed variables `a`, `b`, `x` with
//! arbitrary-precision integer coefficients.
//!
//! Terms live in a `BTreeMap` keyed by [`Monomial`], whose ordering is
//! graded-lexicographic over `(a, b, x)`. Zero coefficients are never stored,
//! so structural equality is polynomial equality. Rendering walks the map in
//! descending order, giving the familiar `2*a^2 + 3*a*b + b^2` layout.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// One of the three indeterminates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    A,
    B,
    X,
}

impl Var {
    pub const ALL: [Var; 3] = [Var::A, Var::B, Var::X];

    pub fn name(self) -> &'static str {
        match self {
            Var::A => "a",
            Var::B => "b",
            Var::X => "x",
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Exponent triple `a^a * b^b * x^x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct Monomial {
    pub a: u32,
    pub b: u32,
    pub x: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { a: 0, b: 0, x: 0 };

    pub fn new(a: u32, b: u32, x: u32) -> Self {
        Monomial { a, b, x }
    }

    pub fn var(v: Var) -> Self {
        let mut m = Monomial::ONE;
        *m.exp_mut(v) = 1;
        m
    }

    pub fn degree(&self) -> u32 {
        self.a + self.b + self.x
    }

    pub fn exp(&self, v: Var) -> u32 {
        match v {
            Var::A => self.a,
            Var::B => self.b,
            Var::X => self.x,
        }
    }

    fn exp_mut(&mut self, v: Var) -> &mut u32 {
        match v {
            Var::A => &mut self.a,
            Var::B => &mut self.b,
            Var::X => &mut self.x,
        }
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            a: self.a + other.a,
            b: self.b + other.b,
            x: self.x + other.x,
        }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then(self.a.cmp(&other.a))
            .then(self.b.cmp(&other.b))
            .then(self.x.cmp(&other.x))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in Var::ALL {
            let e = self.exp(v);
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// Canonical sparse polynomial over the integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly::default()
    }

    pub fn one() -> Self {
        MultiPoly::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        MultiPoly::term(c, Monomial::ONE)
    }

    pub fn var(v: Var) -> Self {
        MultiPoly::term(1, Monomial::var(v))
    }

    pub fn term(c: impl Into<BigInt>, m: Monomial) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MultiPoly { terms }
    }

    /// Builds a polynomial from arbitrary terms, merging duplicates and
    /// dropping zeros.
    pub fn from_terms<I, C>(iter: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, C)>,
        C: Into<BigInt>,
    {
        let mut p = MultiPoly::zero();
        for (m, c) in iter {
            p.add_term(m, c.into());
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&Monomial::ONE).is_some_and(|c| c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical (descending graded-lex) order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigInt)> + '_ {
        self.terms.iter().rev()
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.keys().map(|m| m.exp(v)).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    /// True when every term has total degree `d` (the zero polynomial is
    /// homogeneous of every degree).
    pub fn is_homogeneous(&self, d: u32) -> bool {
        self.terms.keys().all(|m| m.degree() == d)
    }

    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    pub fn scale(&self, c: &BigInt) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly {
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, other: &Monomial) -> MultiPoly {
        MultiPoly {
            terms: self.terms.iter().map(|(m, c)| (m.mul(other), c.clone())).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        (0..e).fold(MultiPoly::one(), |acc, _| &acc * self)
    }

    /// Returns `q` with `q * c == self`.
    pub fn exact_div_int(&self, c: &BigInt) -> Result<MultiPoly> {
        if c.is_zero() {
            return Err(Error::DivisorZero);
        }
        let mut terms = BTreeMap::new();
        for (m, v) in &self.terms {
            let (q, r) = v.div_rem(c);
            if !r.is_zero() {
                return Err(Error::NotDivisible {
                    divisor: c.to_string(),
                });
            }
            terms.insert(*m, q);
        }
        Ok(MultiPoly { terms })
    }

    /// Returns `q` with `q * v^e == self`.
    pub fn exact_div_var_power(&self, v: Var, e: u32) -> Result<MultiPoly> {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut q = *m;
            let slot = q.exp_mut(v);
            if *slot < e {
                return Err(Error::NotDivisible {
                    divisor: Monomial::var(v).to_string() + &format!("^{e}"),
                });
            }
            *slot -= e;
            terms.insert(q, c.clone());
        }
        Ok(MultiPoly { terms })
    }

    pub fn eval(&self, at: &Assignment) -> Result<BigRational> {
        let mut sum = BigRational::zero();
        for (m, c) in &self.terms {
            let mut t = BigRational::from_integer(c.clone());
            for v in Var::ALL {
                let e = m.exp(v);
                if e == 0 {
                    continue;
                }
                let val = at.get(v).ok_or(Error::MissingAssignment(v))?;
                t *= Pow::pow(val, e);
            }
            sum += t;
        }
        Ok(sum)
    }
}

/// Rational values for some subset of the variables.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Assignment {
    values: [Option<BigRational>; 3],
}

impl Assignment {
    pub fn new() -> Self {
        Assignment::default()
    }

    pub fn ab(alpha: BigRational, beta: BigRational) -> Self {
        Assignment::new().with(Var::A, alpha).with(Var::B, beta)
    }

    pub fn with(mut self, v: Var, value: BigRational) -> Self {
        self.values[v as usize] = Some(value);
        self
    }

    pub fn get(&self, v: Var) -> Option<&BigRational> {
        self.values[v as usize].as_ref()
    }
}

/// Parses `p`, `p/q`, `+p/q` or `-p/q` into a reduced rational.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let err = |reason: &str| Error::Parse {
        input: s.to_string(),
        reason: reason.to_string(),
    };
    let t = s.trim();
    let t = t.strip_prefix('+').unwrap_or(t);
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    if den.starts_with(['+', '-']) {
        return Err(err("denominator must be unsigned"));
    }
    let num: BigInt = num.parse().map_err(|_| err("bad numerator"))?;
    let den: BigInt = den.parse().map_err(|_| err("bad denominator"))?;
    if den.is_zero() {
        return Err(err("zero denominator"));
    }
    Ok(BigRational::new(num, den))
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = c.abs();
            if *m == Monomial::ONE {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct JsonTerm {
    a: u32,
    b: u32,
    x: u32,
    c: String,
}

impl Serialize for MultiPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.terms().map(|(m, c)| JsonTerm {
            a: m.a,
            b: m.b,
            x: m.x,
            c: c.to_string(),
        }))
    }
}

impl<'de> Deserialize<'de> for MultiPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = Vec::<JsonTerm>::deserialize(deserializer)?;
        let mut p = MultiPoly::zero();
        for t in raw {
            let c: BigInt = t.c.parse().map_err(serde::de::Error::custom)?;
            p.add_term(Monomial::new(t.a, t.b, t.x), c);
        }
        Ok(p)
    }
}

impl AddAssign<&MultiPoly> for MultiPoly {
    fn add_assign(&mut self, rhs: &MultiPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c.clone());
        }
    }
}

impl SubAssign<&MultiPoly> for MultiPoly {
    fn sub_assign(&mut self, rhs: &MultiPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, -c);
        }
    }
}

impl Add<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr<MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: &MultiPoly) -> MultiPoly {
                (&self).$method(rhs)
            }
        }
        impl $tr<MultiPoly> for &MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: MultiPoly) -> MultiPoly {
                self.$method(&rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

impl Zero for MultiPoly {
    fn zero() -> Self {
        MultiPoly::zero()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for MultiPoly {
    fn one() -> Self {
        MultiPoly::one()
    }
}

impl From<i64> for MultiPoly {
    fn from(c: i64) -> Self {
        MultiPoly::constant(c)
    }
}

impl From<BigInt> for MultiPoly {
    fn from(c: BigInt) -> Self {
        MultiPoly::constant(c)
    }
}

impl From<Var> for MultiPoly {
    fn from(v: Var) -> Self {
        MultiPoly::var(v)
    }
}

/// `c_a * a + c_b * b + c_x * x + c_0` shorthand used throughout the crate.
pub fn linear(ca: i64, cb: i64, cx: i64, c0: i64) -> MultiPoly {
    MultiPoly::from_terms([
        (Monomial::var(Var::A), ca),
        (Monomial::var(Var::B), cb),
        (Monomial::var(Var::X), cx),
        (Monomial::ONE, c0),
    ])
}
