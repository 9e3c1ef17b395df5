//! Closed-form counts of codes with prescribed Hermitian or symplectic hull
//! dimension.
//!
//! All counts are evaluated as exact rationals and converted to integers with
//! an integrality assertion. Parameters outside the valid range give a count of
//! zero so spectra can be summed over every `l` without special cases.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::{gaussian_binomial, int_pow, rat_to_int_exact, sign_pow, ExactInt, ExactRat};

/// An `[n, k]` code over `F_{q^2}` with Hermitian hull dimension `l`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HermitianParams {
    pub n: u32,
    pub k: u32,
    pub l: u32,
    /// Subfield order; the code lives over `F_{q^2}`.
    pub q: u64,
}

impl HermitianParams {
    pub fn new(n: u32, k: u32, l: u32, q: u64) -> Self {
        HermitianParams { n, k, l, q }
    }

    /// Dimension of the LCD part, `k - l`.
    pub fn k0(&self) -> i64 {
        self.k as i64 - self.l as i64
    }

    pub fn s(&self) -> i64 {
        self.n as i64 - self.k0()
    }

    /// `(-1)^(s+1)`.
    pub fn eps(&self) -> i64 {
        sign_pow(self.s() + 1)
    }

    pub fn a(&self) -> i64 {
        self.k as i64 - self.l as i64
    }

    pub fn b(&self) -> i64 {
        self.n as i64 - self.k as i64 - self.l as i64
    }

    /// `l <= min(k, n - k)` and `k <= n`.
    pub fn in_range(&self) -> bool {
        self.k <= self.n && self.l <= self.k.min(self.n - self.k)
    }
}

/// A `[2n, k]` code over `F_q` with symplectic hull dimension `l`. `n` is the
/// half-length; the ambient space is `F_q^{2n}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymplecticParams {
    pub n: u32,
    pub k: u32,
    pub l: u32,
    pub q: u64,
}

impl SymplecticParams {
    /// Parameters from the ambient length `2n`, which must be even.
    pub fn from_ambient(ambient: u32, k: u32, l: u32, q: u64) -> Result<Self> {
        if ambient % 2 == 1 {
            return Err(Error::OddAmbientForSymplectic(ambient as usize));
        }
        Ok(SymplecticParams {
            n: ambient / 2,
            k,
            l,
            q,
        })
    }

    pub fn ambient(&self) -> u32 {
        2 * self.n
    }

    pub fn a(&self) -> i64 {
        self.k as i64 - self.l as i64
    }

    pub fn b(&self) -> i64 {
        self.ambient() as i64 - self.k as i64 - self.l as i64
    }

    pub fn parity_ok(&self) -> bool {
        self.a().rem_euclid(2) == 0
    }

    /// Half of `k - l`; meaningful only when [`Self::parity_ok`].
    pub fn k0(&self) -> i64 {
        self.a() / 2
    }

    pub fn in_range(&self) -> bool {
        self.k <= self.ambient() && self.l <= self.k.min(self.ambient() - self.k)
    }
}

fn pow_minus_sign(q: u64, e: i64) -> ExactInt {
    // q^e - (-1)^e
    int_pow(q, e as u32) - sign_pow(e)
}

/// Number of Hermitian LCD `[n, k0]` codes over `F_{q^2}`.
pub fn hermitian_lcd_count(n: u32, k0: u32, q: u64) -> Result<ExactInt> {
    if k0 > n {
        return Err(Error::BadRange(format!("k0 = {k0} > n = {n}")));
    }
    let (n, k0) = (n as i64, k0 as i64);
    let mut acc = ExactRat::from_integer(int_pow(q, (k0 * (n - k0)) as u32));
    for j in 1..=k0 {
        acc *= ExactRat::new(pow_minus_sign(q, n - k0 + j), pow_minus_sign(q, j));
    }
    Ok(rat_to_int_exact(acc))
}

/// The factor `F_i` of the unified Hermitian mass formula,
/// `(q^{s-2i+2} + eps)(q^{s-2i+1} - eps) / (q^{2 k0} (q^{2i} - 1))`.
pub fn unified_factor(i: u32, params: &HermitianParams) -> Result<ExactRat> {
    if i < 1 || i > params.l {
        return Err(Error::BadIndex {
            index: i,
            max: params.l,
        });
    }
    if !params.in_range() {
        return Err(Error::BadRange(format!("{params:?}")));
    }
    let q = params.q;
    let (s, eps, k0, i) = (params.s(), params.eps(), params.k0(), i as i64);
    let num = (int_pow(q, (s - 2 * i + 2) as u32) + eps) * (int_pow(q, (s - 2 * i + 1) as u32) - eps);
    let den = int_pow(q, (2 * k0) as u32) * (int_pow(q, (2 * i) as u32) - 1u32);
    Ok(ExactRat::new(num, den))
}

/// Number of `[n, k]` codes over `F_{q^2}` with Hermitian hull dimension `l`.
pub fn count_hermitian(params: &HermitianParams) -> ExactInt {
    if !params.in_range() {
        return ExactInt::zero();
    }
    let lcd = hermitian_lcd_count(params.n, params.k0() as u32, params.q).expect("k0 <= n inside the valid range");
    let mut acc = ExactRat::from_integer(lcd);
    for i in 1..=params.l {
        acc *= unified_factor(i, params).expect("index in 1..=l");
    }
    rat_to_int_exact(acc)
}

/// Number of `[2n, k]` codes over `F_q` with symplectic hull dimension `l`.
///
/// `q^{2k0(n-k0-l)} * prod_{m=1}^{l} (q^{2(n-k0-l+m)} - 1) / prod_{m=1}^{l} (q^m - 1) * [n k0]_{q^2}`
/// with `k - l = 2 k0`. Zero when `k - l` is odd.
pub fn count_symplectic(params: &SymplecticParams) -> ExactInt {
    if !params.in_range() || !params.parity_ok() {
        return ExactInt::zero();
    }
    let q = params.q;
    let n = params.n as i64;
    let l = params.l as i64;
    let k0 = params.k0();
    let rest = n - k0 - l;
    let mut acc = ExactRat::from_integer(int_pow(q, (2 * k0 * rest) as u32));
    for m in 1..=l {
        acc *= ExactRat::new(int_pow(q, (2 * (rest + m)) as u32) - 1u32, int_pow(q, m as u32) - 1u32);
    }
    acc *= ExactRat::from_integer(gaussian_binomial(n, k0, q * q));
    rat_to_int_exact(acc)
}

/// Number of symplectic LCD `[2n, 2 k0]` codes over `F_q`.
pub fn symplectic_lcd_count(n: u32, k0: u32, q: u64) -> Result<ExactInt> {
    if k0 > n {
        return Err(Error::BadRange(format!("k0 = {k0} > n = {n}")));
    }
    let (n, k0) = (n as i64, k0 as i64);
    Ok(int_pow(q, (2 * k0 * (n - k0)) as u32) * gaussian_binomial(n, k0, q * q))
}

/// The full Hermitian spectrum `l -> A^H` for `l = 0..=min(k, n-k)`.
pub fn hermitian_spectrum(n: u32, k: u32, q: u64) -> Vec<(u32, ExactInt)> {
    if k > n {
        return Vec::new();
    }
    (0..=k.min(n - k))
        .map(|l| (l, count_hermitian(&HermitianParams::new(n, k, l, q))))
        .collect()
}

/// The symplectic spectrum over `l` with `k - l` even.
pub fn symplectic_spectrum(ambient: u32, k: u32, q: u64) -> Result<Vec<(u32, ExactInt)>> {
    if ambient % 2 == 1 {
        return Err(Error::OddAmbientForSymplectic(ambient as usize));
    }
    if k > ambient {
        return Ok(Vec::new());
    }
    Ok((0..=k.min(ambient - k))
        .filter(|l| (k - l).is_multiple_of(2))
        .map(|l| {
            let p = SymplecticParams::from_ambient(ambient, k, l, q).unwrap();
            (l, count_symplectic(&p))
        })
        .collect())
}

/// True if every term of a rational product is integral; used by tests.
pub fn is_integral(x: &ExactRat) -> bool {
    x.denom().is_one()
}
