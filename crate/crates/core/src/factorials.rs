//! Generalized rising/falling factorials with an arbitrary increment, plus
//! exact binomial and multinomial coefficients.

use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FactorialKind {
    Raising,
    Falling,
}

/// `x (x ± θ) (x ± 2θ) ⋯` with `n` factors; `n = 0` gives one.
///
/// Works over any ring-like domain, in practice [`crate::MultiPoly`] and
/// `BigRational`.
pub fn gen_factorial<T>(kind: FactorialKind, x: &T, step: &T, n: usize) -> T
where
    T: Clone + One,
    for<'a> &'a T: Add<&'a T, Output = T> + Sub<&'a T, Output = T> + Mul<&'a T, Output = T>,
{
    let mut acc = T::one();
    let mut factor = x.clone();
    for i in 0..n {
        acc = &acc * &factor;
        if i + 1 < n {
            factor = match kind {
                FactorialKind::Raising => &factor + step,
                FactorialKind::Falling => &factor - step,
            };
        }
    }
    acc
}

pub fn raising<T>(x: &T, step: &T, n: usize) -> T
where
    T: Clone + One,
    for<'a> &'a T: Add<&'a T, Output = T> + Sub<&'a T, Output = T> + Mul<&'a T, Output = T>,
{
    gen_factorial(FactorialKind::Raising, x, step, n)
}

pub fn falling<T>(x: &T, step: &T, n: usize) -> T
where
    T: Clone + One,
    for<'a> &'a T: Add<&'a T, Output = T> + Sub<&'a T, Output = T> + Mul<&'a T, Output = T>,
{
    gen_factorial(FactorialKind::Falling, x, step, n)
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// `C(n, k)`, zero outside `0..=n`.
pub fn binomial(n: usize, k: i64) -> BigInt {
    if k < 0 || k as u64 > n as u64 {
        return BigInt::ZERO;
    }
    let k = (k as usize).min(n - k as usize);
    // running product stays integral: C(n-k+i, i) at step i
    (1..=k).fold(BigInt::one(), |acc, i| acc * (n - k + i) / i)
}

/// `n! / ∏ parts_i!`.
pub fn multinomial(n: usize, parts: &[usize]) -> Result<BigInt> {
    let sum: usize = parts.iter().sum();
    if sum != n {
        return Err(Error::PartsMismatch { n, sum });
    }
    let mut acc = BigInt::one();
    let mut filled = 0;
    for &p in parts {
        filled += p;
        acc *= binomial(filled, p as i64);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{linear, MultiPoly, Var};
    use num_rational::BigRational;
    use num_traits::Zero;
    use proptest::prelude::*;

    fn r(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn small_values() {
        assert_eq!(raising(&r(2), &r(1), 3), r(24));
        assert_eq!(falling(&r(5), &r(1), 3), r(60));
        let p = linear(3, -2, 1, 7);
        assert_eq!(falling(&p, &MultiPoly::var(Var::A), 0), MultiPoly::one());
        // B(k-j) with k-j = 1, step A, two factors
        let got = raising(&MultiPoly::var(Var::B), &MultiPoly::var(Var::A), 2);
        assert_eq!(got.to_string(), "a*b + b^2");
    }

    #[test]
    fn zero_step_is_power() {
        let p = linear(1, 1, 0, 2);
        for n in 0..6 {
            assert_eq!(raising(&p, &MultiPoly::zero(), n), p.pow(n as u32));
            assert_eq!(falling(&p, &MultiPoly::zero(), n), p.pow(n as u32));
        }
    }

    #[test]
    fn duality() {
        let x = MultiPoly::var(Var::X);
        let step = linear(1, -2, 0, 0);
        for n in 0..7 {
            assert_eq!(falling(&x, &step, n), raising(&x, &-&step, n));
        }
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(4, 2), BigInt::from(6));
        assert_eq!(binomial(9, 0), BigInt::from(1));
        assert_eq!(binomial(3, 5), BigInt::zero());
        assert_eq!(binomial(3, -1), BigInt::zero());
        assert_eq!(binomial(0, 0), BigInt::from(1));
        assert_eq!(binomial(60, 30).to_string(), "118264581564861424");
    }

    #[test]
    fn multinomials() {
        assert_eq!(multinomial(2, &[1, 1]).unwrap(), BigInt::from(2));
        assert_eq!(multinomial(7, &[7]).unwrap(), BigInt::from(1));
        assert_eq!(multinomial(4, &[2, 1, 1]).unwrap(), BigInt::from(12));
        assert_eq!(multinomial(0, &[]).unwrap(), BigInt::from(1));
        assert_eq!(
            multinomial(4, &[2, 1]),
            Err(Error::PartsMismatch { n: 4, sum: 3 })
        );
    }

    #[test]
    fn pascal_rule() {
        for n in 1..30usize {
            for k in 0..=n as i64 {
                assert_eq!(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
                assert_eq!(multinomial(n, &[k as usize, n - k as usize]).unwrap(), binomial(n, k));
            }
        }
    }

    proptest! {
        #[test]
        fn raising_recursive(xn in -50i64..50, xd in 1i64..9, tn in -50i64..50, td in 1i64..9, n in 1usize..=20) {
            let x = BigRational::new(xn.into(), xd.into());
            let t = BigRational::new(tn.into(), td.into());
            let last = &x + &(&t * &r(n as i64 - 1));
            prop_assert_eq!(raising(&x, &t, n), raising(&x, &t, n - 1) * last);
        }
    }
}
