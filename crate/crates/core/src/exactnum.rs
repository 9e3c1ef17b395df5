//! Exact integer and rational arithmetic.
//!
//! Big integers and reduced rationals come from `num-bigint`/`num-rational`;
//! `BigRational` keeps its denominator positive and coprime to the numerator
//! after every operation, which is the canonical form the counting code relies
//! on. This module adds the Gaussian binomial coefficient, integer powers, and
//! the string forms used by the CLI and the C ABI.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type ExactInt = BigInt;
pub type ExactRat = BigRational;

/// `base^exp` as a big integer.
pub fn int_pow(base: u64, exp: u32) -> ExactInt {
    num_traits::pow(ExactInt::from(base), exp as usize)
}

/// `base^exp` for a possibly negative exponent.
pub fn rat_pow(base: u64, exp: i64) -> ExactRat {
    let mag = int_pow(base, exp.unsigned_abs() as u32);
    if exp >= 0 {
        ExactRat::from_integer(mag)
    } else {
        ExactRat::new(ExactInt::one(), mag)
    }
}

/// `(-1)^e` as an `i64`.
pub fn sign_pow(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

pub fn rat(num: impl Into<ExactInt>, den: impl Into<ExactInt>) -> ExactRat {
    ExactRat::new(num.into(), den.into())
}

pub fn int_to_rat(x: ExactInt) -> ExactRat {
    ExactRat::from_integer(x)
}

/// Converts an integral rational to an integer. Panics if the denominator is
/// not one; callers only use this where integrality is a theorem.
pub fn rat_to_int_exact(x: ExactRat) -> ExactInt {
    assert!(
        x.denom().is_one(),
        "expected an integer, got {}/{}",
        x.numer(),
        x.denom()
    );
    x.to_integer()
}

/// Gaussian binomial coefficient `[n k]_q`, the number of `k`-dimensional
/// subspaces of `F_q^n`. Returns 0 when `k < 0` or `k > n`.
///
/// Evaluated one factor at a time: after step `i` the running value is
/// `[n i+1]_q`, so every division is exact.
pub fn gaussian_binomial(n: i64, k: i64, q: u64) -> ExactInt {
    assert!(q >= 2, "gaussian_binomial needs q >= 2");
    if k < 0 || n < 0 || k > n {
        return ExactInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = ExactInt::one();
    for i in 0..k {
        acc *= int_pow(q, (n - i) as u32) - 1u32;
        let den = int_pow(q, (i + 1) as u32) - 1u32;
        let (quot, rem) = acc.div_rem(&den);
        assert!(rem.is_zero(), "inexact Gaussian binomial step");
        acc = quot;
    }
    acc
}

/// Plain binomial coefficient `C(n, k)` as `u128`.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Splits `q = p^m` with `p` prime, or `None` if `q` is not a prime power.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut rest = q;
    let mut m = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        m += 1;
    }
    (rest == 1).then_some((p, m))
}

/// Like [`prime_power`] but reports [`Error::NotPrimePower`].
pub fn require_prime_power(q: u64) -> Result<(u64, u32)> {
    prime_power(q).ok_or(Error::NotPrimePower(q))
}

/// Always renders as `num/den`, including integers (`3/1`).
pub fn format_rat(x: &ExactRat) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

/// Parses `num/den` or a bare integer.
pub fn parse_rat(s: &str) -> Option<ExactRat> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: ExactInt = n.trim().parse().ok()?;
            let d: ExactInt = d.trim().parse().ok()?;
            (!d.is_zero()).then(|| ExactRat::new(n, d))
        }
        None => s.parse::<ExactInt>().ok().map(ExactRat::from_integer),
    }
}

/// True if `x > 1`.
pub fn exceeds_one(x: &ExactRat) -> bool {
    x > &ExactRat::one()
}

/// Absolute difference of two rationals.
pub fn abs_diff(a: &ExactRat, b: &ExactRat) -> ExactRat {
    (a - b).abs()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Counts k-dimensional subspaces of F_p^n by brute force: every k-subset of
    /// nonzero vectors that is linearly independent spans one subspace, and each
    /// subspace has (p^k - 1)(p^k - p)...(p^k - p^{k-1}) ordered bases.
    #[allow(clippy::needless_range_loop)]
    fn brute_subspaces(n: u32, k: u32, p: u64) -> u64 {
        let total = p.pow(n);
        let vec_of = |mut x: u64| {
            let mut v = vec![0u64; n as usize];
            for c in v.iter_mut() {
                *c = x % p;
                x /= p;
            }
            v
        };
        // rank of a set of vectors over F_p, p prime
        let rank = |vs: &[Vec<u64>]| {
            let mut m: Vec<Vec<u64>> = vs.to_vec();
            let mut r = 0;
            for col in 0..n as usize {
                let Some(piv) = (r..m.len()).find(|&i| m[i][col] != 0) else {
                    continue;
                };
                m.swap(r, piv);
                let inv = (1..p).find(|x| x * m[r][col] % p == 1).unwrap();
                for c in 0..n as usize {
                    m[r][c] = m[r][c] * inv % p;
                }
                for i in 0..m.len() {
                    if i != r && m[i][col] != 0 {
                        let f = m[i][col];
                        for c in 0..n as usize {
                            m[i][c] = (m[i][c] + p * p - f * m[r][c] % p) % p;
                        }
                    }
                }
                r += 1;
            }
            r
        };
        let mut ordered = 0u64;
        let mut stack: Vec<Vec<u64>> = Vec::new();
        fn rec(
            stack: &mut Vec<Vec<u64>>,
            k: usize,
            total: u64,
            vec_of: &dyn Fn(u64) -> Vec<u64>,
            rank: &dyn Fn(&[Vec<u64>]) -> usize,
            ordered: &mut u64,
        ) {
            if stack.len() == k {
                *ordered += 1;
                return;
            }
            for x in 1..total {
                stack.push(vec_of(x));
                if rank(stack) == stack.len() {
                    rec(stack, k, total, vec_of, rank, ordered);
                }
                stack.pop();
            }
        }
        rec(&mut stack, k as usize, total, &vec_of, &rank, &mut ordered);
        let bases: u64 = (0..k).map(|i| p.pow(k) - p.pow(i)).product();
        ordered / bases
    }

    #[test]
    fn gaussian_binomial_examples() {
        assert_eq!(gaussian_binomial(7, 0, 5), ExactInt::from(1));
        assert_eq!(gaussian_binomial(4, 2, 2), ExactInt::from(35));
        assert_eq!(gaussian_binomial(4, 1, 4), ExactInt::from(85));
        assert_eq!(gaussian_binomial(4, 5, 2), ExactInt::zero());
        assert_eq!(gaussian_binomial(4, -1, 2), ExactInt::zero());
    }

    #[test]
    fn gaussian_binomial_matches_brute_force() {
        assert_eq!(brute_subspaces(4, 2, 2), 35);
        for (n, k, p) in [(3, 1, 2), (3, 2, 3), (4, 2, 2), (4, 1, 3), (3, 1, 5)] {
            assert_eq!(
                gaussian_binomial(n as i64, k as i64, p),
                ExactInt::from(brute_subspaces(n, k, p)),
                "[{n} {k}]_{p}"
            );
        }
    }

    #[test]
    fn gaussian_binomial_symmetry_and_pascal() {
        for q in [2u64, 3, 4, 5, 8, 9] {
            for n in 0..=12i64 {
                for k in 0..=n {
                    let g = gaussian_binomial(n, k, q);
                    assert_eq!(g, gaussian_binomial(n, n - k, q));
                    if n >= 1 {
                        let rhs =
                            gaussian_binomial(n - 1, k - 1, q) + int_pow(q, k as u32) * gaussian_binomial(n - 1, k, q);
                        assert_eq!(g, rhs, "pascal n={n} k={k} q={q}");
                    }
                }
            }
        }
    }

    #[test]
    fn prime_power_detection() {
        assert_eq!(prime_power(2), Some((2, 1)));
        assert_eq!(prime_power(16), Some((2, 4)));
        assert_eq!(prime_power(9), Some((3, 2)));
        assert_eq!(prime_power(6), None);
        assert_eq!(prime_power(1), None);
        assert!(matches!(require_prime_power(12), Err(Error::NotPrimePower(12))));
    }

    #[test]
    fn rational_strings() {
        assert_eq!(format_rat(&rat(6, 4)), "3/2");
        assert_eq!(format_rat(&rat(3, 1)), "3/1");
        assert_eq!(parse_rat("-9/12"), Some(rat(-3, 4)));
        assert_eq!(parse_rat("7"), Some(rat(7, 1)));
        assert_eq!(parse_rat("1/0"), None);
    }

    proptest! {
        #[test]
        fn reciprocal_product_is_one(a in 1i64..10_000, b in 1i64..10_000, neg in any::<bool>()) {
            let a = if neg { -a } else { a };
            let x = rat(a, b);
            prop_assert_eq!(&x * &rat(b, a), ExactRat::one());
        }

        #[test]
        fn equal_rationals_share_representation(a in -500i64..500, b in 1i64..500, s in 1i64..50) {
            let x = rat(a, b);
            let y = rat(a * s, b * s);
            prop_assert_eq!(format_rat(&x), format_rat(&y));
            prop_assert!(x.denom() > &ExactInt::zero());
            prop_assert_eq!(parse_rat(&format_rat(&x)), Some(x));
        }

        #[test]
        fn big_integer_decimal_round_trip(digits in "-?[1-9][0-9]{0,60}") {
            let v: ExactInt = digits.parse().unwrap();
            prop_assert_eq!(v.to_string(), digits);
        }
    }
}
