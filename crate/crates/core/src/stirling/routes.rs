//! Independent ways of producing a single entry `L(n, k)`. Each one is
//! checked against the recurrence triangle in the identity harness.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::GenStirlingTable;
use crate::error::{Error, Result};
use crate::factorials::{binomial, factorial, falling, raising};
use crate::identities::{IdentityId, IdentityReport, Params};
use crate::par;
use crate::poly::{linear, MultiPoly, Var};

/// `∏_{j=1}^{n-1} (j a + b)`, the weight of a single list holding `n`
/// elements.
pub fn single_list(n: usize) -> Result<MultiPoly> {
    if n == 0 {
        return Err(Error::InvalidIndex { n, k: 1 });
    }
    Ok((1..n).fold(MultiPoly::one(), |acc, j| &acc * &linear(j as i64, 1, 0, 0)))
}

/// Inclusion-exclusion closed form evaluated at a rational point:
///
/// ```text
/// L(n,k) = 1 / (b^k k!) · Σ_j (-1)^j C(k,j) · (b(k-j) | a)^(rising n)
/// ```
///
/// `beta = 0` is rejected; [`explicit_polynomial`] has no such restriction.
pub fn explicit_value(n: usize, k: usize, alpha: &BigRational, beta: &BigRational) -> Result<BigRational> {
    if k > n {
        return Err(Error::InvalidIndex { n, k });
    }
    if beta.is_zero() {
        return Err(Error::BetaZero);
    }
    let mut sum = BigRational::zero();
    for j in 0..=k {
        let start = beta * BigRational::from_integer(BigInt::from(k - j));
        let term = raising(&start, alpha, n) * BigRational::from_integer(binomial(k, j as i64));
        if j % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    let denom = num_traits::pow(beta.clone(), k) * BigRational::from_integer(factorial(k));
    Ok(sum / denom)
}

/// The same closed form carried out over polynomials. The alternating sum is
/// divided exactly by `k!` and then by `b^k`; a remainder in either step
/// means a bug, reported as [`Error::InternalNotDivisible`].
pub fn explicit_polynomial(n: usize, k: usize) -> Result<MultiPoly> {
    if k > n {
        return Err(Error::InvalidIndex { n, k });
    }
    let step = MultiPoly::var(Var::A);
    let terms = par::map_range(0..k + 1, |j| {
        let start = linear(0, (k - j) as i64, 0, 0);
        let mut c = binomial(k, j as i64);
        if j % 2 == 1 {
            c = -c;
        }
        raising(&start, &step, n).scale(&c)
    });
    let numerator = terms.iter().fold(MultiPoly::zero(), |mut acc, t| {
        acc += t;
        acc
    });
    let internal = |_| Error::InternalNotDivisible { n, k };
    numerator
        .exact_div_int(&factorial(k))
        .map_err(internal)?
        .exact_div_var_power(Var::B, k as u32)
        .map_err(internal)
}

/// `L(n + k, n)` as a sum over non-decreasing chains `1 ≤ i_1 ≤ … ≤ i_k ≤ n`
/// of `∏_j ((a + b) i_j + a (j - 1))`.
///
/// Evaluated by dynamic programming over (chain position, last index) with a
/// running prefix sum, so the cost is `O(n k)` polynomial products.
pub fn symmetric_formula(n: usize, k: usize) -> MultiPoly {
    chain_sum(1, n, k, |pos, i| linear((i + pos) as i64, i as i64, 0, 0))
}

/// Sum over non-decreasing chains `lo ≤ i_0 ≤ … ≤ i_{len-1} ≤ hi` of
/// `∏_pos factor(pos, i_pos)`. The empty chain contributes one.
pub(crate) fn chain_sum<F>(lo: usize, hi: usize, len: usize, factor: F) -> MultiPoly
where
    F: Fn(usize, usize) -> MultiPoly,
{
    if len == 0 {
        return MultiPoly::one();
    }
    if lo > hi {
        return MultiPoly::zero();
    }
    // ending[t] = total over chains of the current length ending at lo + t
    let width = hi - lo + 1;
    let mut ending: Vec<MultiPoly> = (0..width).map(|t| factor(0, lo + t)).collect();
    for pos in 1..len {
        let mut prefix = MultiPoly::zero();
        for (t, slot) in ending.iter_mut().enumerate() {
            prefix += &*slot;
            *slot = &prefix * &factor(pos, lo + t);
        }
    }
    ending.iter().fold(MultiPoly::zero(), |mut acc, p| {
        acc += p;
        acc
    })
}

/// `Σ_{i=k}^{n} (a + b | a)^(rising n-i) · C(n, i) · L(i, k)`, which equals
/// `L(n + 1, k + 1)`.
pub fn vertical_value(n: usize, k: usize, table: &GenStirlingTable) -> Result<MultiPoly> {
    table.require(n)?;
    let base = linear(1, 1, 0, 0);
    let step = MultiPoly::var(Var::A);
    let mut sum = MultiPoly::zero();
    for i in k..=n {
        let weight = raising(&base, &step, n - i).scale(&binomial(n, i as i64));
        sum += &(&weight * table.entry(i, k)?);
    }
    Ok(sum)
}

/// Increment used in the rising factorial of the horizontal expansion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HorizontalStep {
    /// Step `b`: the form obtained by unrolling the triangular recurrence.
    Beta,
    /// Step `a`: an alternative that does not hold once `n - k ≥ 2`. Kept
    /// for the regression suite.
    Alpha,
}

/// `Σ_{j=0}^{n-k} (-1)^j ((k+1) b + n a | b)^(rising j) · L(n+1, k+j+1)`,
/// which equals `L(n, k)`.
pub fn horizontal_expand(n: usize, k: usize, table: &GenStirlingTable) -> Result<MultiPoly> {
    horizontal_expand_with(n, k, table, HorizontalStep::Beta)
}

pub fn horizontal_expand_with(
    n: usize,
    k: usize,
    table: &GenStirlingTable,
    step: HorizontalStep,
) -> Result<MultiPoly> {
    table.require(n + 1)?;
    if k > n {
        return Ok(MultiPoly::zero());
    }
    let start = linear(n as i64, (k + 1) as i64, 0, 0);
    let step = match step {
        HorizontalStep::Beta => MultiPoly::var(Var::B),
        HorizontalStep::Alpha => MultiPoly::var(Var::A),
    };
    let mut sum = MultiPoly::zero();
    for j in 0..=n - k {
        let term = &raising(&start, &step, j) * table.entry(n + 1, k + j + 1)?;
        if j % 2 == 0 {
            sum += &term;
        } else {
            sum -= &term;
        }
    }
    Ok(sum)
}

/// Checks `(x | a)^(rising n) = Σ_k L(n,k) · (x | b)^(falling k)` as a
/// polynomial identity in `a`, `b`, `x`.
pub fn connection_check(n: usize, table: &GenStirlingTable) -> Result<IdentityReport> {
    table.require(n)?;
    let x = MultiPoly::var(Var::X);
    let lhs = raising(&x, &MultiPoly::var(Var::A), n);
    let b = MultiPoly::var(Var::B);
    let mut rhs = MultiPoly::zero();
    for k in 0..=n {
        rhs += &(table.entry(n, k)? * &falling(&x, &b, k));
    }
    Ok(IdentityReport::new(
        IdentityId::Connection,
        Params::n(n),
        &lhs - &rhs,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::stirling::build_table;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn single_list_products() {
        assert!(single_list(1).unwrap().is_one());
        assert_eq!(single_list(3).unwrap().to_string(), "2*a^2 + 3*a*b + b^2");
        let at = crate::poly::Assignment::ab(q(1), q(1));
        assert_eq!(single_list(4).unwrap().eval(&at).unwrap(), q(24));
        assert!(single_list(0).is_err());
        let t = build_table(10);
        for n in 1..=10 {
            assert_eq!(&single_list(n).unwrap(), t.entry(n, 1).unwrap());
        }
    }

    #[test]
    fn explicit_numeric() {
        assert_eq!(explicit_value(4, 2, &q(0), &q(1)).unwrap(), q(7));
        assert_eq!(explicit_value(3, 1, &q(1), &q(1)).unwrap(), q(6));
        for n in 0..6 {
            assert_eq!(explicit_value(n, n, &q(3), &q(-2)).unwrap(), q(1));
        }
        assert_eq!(explicit_value(4, 2, &q(1), &q(0)), Err(Error::BetaZero));
        assert_eq!(explicit_value(2, 3, &q(1), &q(1)), Err(Error::InvalidIndex { n: 2, k: 3 }));
    }

    #[test]
    fn explicit_numeric_matches_table_at_rational_points() {
        let t = build_table(9);
        let pts = [
            (BigRational::new(1.into(), 2.into()), BigRational::new((-2).into(), 3.into())),
            (q(-1), q(3)),
            (q(0), q(5)),
        ];
        for (a, b) in pts {
            let at = crate::poly::Assignment::ab(a.clone(), b.clone());
            for n in 0..=9 {
                for k in 0..=n {
                    let want = t.entry(n, k).unwrap().eval(&at).unwrap();
                    assert_eq!(explicit_value(n, k, &a, &b).unwrap(), want, "({n},{k})");
                }
            }
        }
    }

    #[test]
    fn explicit_polynomial_examples() {
        assert_eq!(explicit_polynomial(3, 1).unwrap().to_string(), "2*a^2 + 3*a*b + b^2");
        assert!(explicit_polynomial(5, 5).unwrap().is_one());
        assert!(explicit_polynomial(0, 0).unwrap().is_one());
        assert!(explicit_polynomial(4, 0).unwrap().is_zero());
        let t = build_table(4);
        assert_eq!(&explicit_polynomial(4, 2).unwrap(), t.entry(4, 2).unwrap());
    }

    #[test]
    fn symmetric_examples() {
        assert_eq!(symmetric_formula(2, 1).to_string(), "3*a + 3*b");
        for n in 0..5 {
            assert!(symmetric_formula(n, 0).is_one());
        }
        assert_eq!(symmetric_formula(1, 2).to_string(), "2*a^2 + 3*a*b + b^2");
        assert!(symmetric_formula(0, 3).is_zero());
    }

    #[test]
    fn vertical_examples() {
        let t = build_table(4);
        assert_eq!(vertical_value(2, 1, &t).unwrap().to_string(), "3*a + 3*b");
        assert!(vertical_value(3, 3, &t).unwrap().is_one());
        assert_eq!(vertical_value(2, 0, &t).unwrap().to_string(), "2*a^2 + 3*a*b + b^2");
        assert!(matches!(vertical_value(5, 0, &t), Err(Error::TableTooSmall { .. })));
    }

    #[test]
    fn horizontal_examples() {
        let t = build_table(4);
        assert_eq!(horizontal_expand(2, 1, &t).unwrap().to_string(), "a + b");
        assert!(horizontal_expand(3, 3, &t).unwrap().is_one());
        assert!(horizontal_expand(2, 0, &t).unwrap().is_zero());
        assert!(matches!(horizontal_expand(4, 0, &t), Err(Error::TableTooSmall { .. })));
    }

    #[test]
    fn horizontal_alpha_step_breaks_at_two_zero() {
        let t = build_table(3);
        let got = horizontal_expand_with(2, 0, &t, HorizontalStep::Alpha).unwrap();
        let want = &linear(2, 1, 0, 0) * &linear(1, -1, 0, 0);
        assert_eq!(got, want);
        // agrees with the beta step while n - k < 2
        assert_eq!(
            horizontal_expand_with(2, 1, &t, HorizontalStep::Alpha).unwrap(),
            horizontal_expand(2, 1, &t).unwrap()
        );
    }

    #[test]
    fn connection_small() {
        let t = build_table(5);
        for n in [0, 2, 5] {
            let r = connection_check(n, &t).unwrap();
            assert!(r.pass, "n={n}: {}", r.residual);
        }
    }
}
