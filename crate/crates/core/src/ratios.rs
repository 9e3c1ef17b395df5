//! Ratio factors between counts at consecutive hull dimensions.
//!
//! For each form the count at hull dimension `l` factors as
//! `A_l = alpha * cofactor * A_{l+step}`, with cofactor `q^{l+1} - 1`
//! (Euclidean, Hermitian; step 1) or `(q^{l+1} - 1)(q^{l+2} - 1)` (symplectic;
//! step 2). This module evaluates `alpha` in closed form, classifies where the
//! natural monotonicity inequalities fail, and gives the limiting ratios.

use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::FormKind;
use crate::error::{Error, Result};
use crate::exactnum::{int_pow, prime_power, rat, sign_pow, ExactInt, ExactRat};
use crate::formulas::{count_hermitian, count_symplectic, HermitianParams, SymplecticParams};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Classification {
    /// `alpha > 1` (Euclidean, Hermitian) or `A_l > A_{l+2}` (symplectic).
    StrictlyAboveOne,
    /// Hermitian `l = 0`, `n` even, `k in {1, n-1}`: `alpha = q^{n-1}/(q^{n-1}+1) < 1`.
    HermitianBoundary,
    /// Symplectic `(2n, k, 0, 2)` with `4 <= k <= 2n-4`.
    SymplecticExceptionES,
    /// Euclidean `q` odd, `n` even, `k - l` odd, `eta((-1)^{n/2}) = 1`: `1/2 <= alpha < 1`.
    EuclideanHalfBoundRegime,
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Classification::StrictlyAboveOne => "strictly-above-one",
            Classification::HermitianBoundary => "hermitian-boundary",
            Classification::SymplecticExceptionES => "symplectic-exception-ES",
            Classification::EuclideanHalfBoundRegime => "euclidean-half-bound-regime",
        };
        f.write_str(s)
    }
}

/// One step of a ratio decomposition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatioReport {
    pub form: FormKind,
    pub step: u32,
    pub alpha: ExactRat,
    pub cofactor: ExactInt,
    /// `alpha * cofactor = A_l / A_{l+step}`.
    pub full_ratio: ExactRat,
    pub classification: Classification,
    /// `full_ratio > 1`, i.e. `A_l > A_{l+step}`.
    pub monotone_a: bool,
    /// Euclidean only: `alpha` equals the bound `1/2` (`k = n/2`, `l = k - 1`).
    pub attains_half_bound: bool,
}

impl RatioReport {
    fn new(form: FormKind, alpha: ExactRat, cofactor: ExactInt, classification: Classification) -> Self {
        let full_ratio = &alpha * ExactRat::from_integer(cofactor.clone());
        let attains_half_bound = form == FormKind::Euclidean && alpha == rat(1, 2);
        RatioReport {
            form,
            step: form.step(),
            monotone_a: full_ratio > ExactRat::one(),
            alpha,
            cofactor,
            full_ratio,
            classification,
            attains_half_bound,
        }
    }
}

pub fn hermitian_cofactor(l: u32, q: u64) -> ExactInt {
    int_pow(q, l + 1) - 1u32
}

pub fn symplectic_cofactor(l: u32, q: u64) -> ExactInt {
    (int_pow(q, l + 1) - 1u32) * (int_pow(q, l + 2) - 1u32)
}

fn pow_minus_sign(q: u64, e: i64) -> ExactInt {
    int_pow(q, e as u32) - sign_pow(e)
}

fn check_q(q: u64) -> Result<()> {
    prime_power(q).map(|_| ()).ok_or(Error::NotPrimePower(q))
}

fn hermitian_range(n: u32, k: u32, l: u32) -> Result<()> {
    if l < k && k + l < n {
        Ok(())
    } else {
        Err(Error::OutOfValidRange(format!(
            "need l+1 <= k <= n-l-1, got n={n} k={k} l={l}"
        )))
    }
}

/// `q^{n-2l-1} (q^{l+1} + 1) / ((q^a - (-1)^a)(q^b - (-1)^b))` with
/// `a = k - l`, `b = n - k - l`.
pub fn alpha_hermitian(n: u32, k: u32, l: u32, q: u64) -> Result<ExactRat> {
    check_q(q)?;
    hermitian_range(n, k, l)?;
    let a = k as i64 - l as i64;
    let b = n as i64 - k as i64 - l as i64;
    let num = int_pow(q, n - 2 * l - 1) * (int_pow(q, l + 1) + 1u32);
    let den = pow_minus_sign(q, a) * pow_minus_sign(q, b);
    Ok(ExactRat::new(num, den))
}

fn symplectic_range(ambient: u32, k: u32, l: u32) -> Result<()> {
    if ambient % 2 == 1 {
        return Err(Error::OddAmbientForSymplectic(ambient as usize));
    }
    if (k as i64 - l as i64).rem_euclid(2) == 1 {
        return Err(Error::ParityViolation(k as i64 - l as i64));
    }
    if l + 2 <= k && k + l + 2 <= ambient {
        Ok(())
    } else {
        Err(Error::OutOfValidRange(format!(
            "need l+2 <= k <= 2n-l-2, got 2n={ambient} k={k} l={l}"
        )))
    }
}

/// `q^{a+b-2} / ((q^a - 1)(q^b - 1))` with `a = k - l`, `b = 2n - k - l`.
pub fn alpha_symplectic(ambient: u32, k: u32, l: u32, q: u64) -> Result<ExactRat> {
    check_q(q)?;
    symplectic_range(ambient, k, l)?;
    let a = k - l;
    let b = ambient - k - l;
    Ok(ExactRat::new(
        int_pow(q, a + b - 2),
        (int_pow(q, a) - 1u32) * (int_pow(q, b) - 1u32),
    ))
}

/// `eta(-1)` in `F_q` for odd `q`: `-1` is a square iff `q = 1 mod 4`.
pub fn eta_minus_one(q: u64) -> Result<i8> {
    check_q(q)?;
    if q.is_multiple_of(2) {
        return Err(Error::EvenCharacteristic(q));
    }
    Ok(if q % 4 == 1 { 1 } else { -1 })
}

/// Quadratic character of the integer `x` viewed in `F_q` (`q` odd, at most
/// the default field bound), evaluated as `x^{(q-1)/2}` in the field.
pub fn quadratic_character(x: i64, q: u64) -> Result<i8> {
    if q.is_multiple_of(2) {
        return Err(Error::EvenCharacteristic(q));
    }
    let field = crate::algebra::FiniteField::of_order(q)?;
    field.quadratic_character(field.from_int(x))
}

/// `eta((-1)^e)`.
fn eta_sign_power(e: i64, q: u64) -> Result<i64> {
    let base = eta_minus_one(q)? as i64;
    Ok(if e % 2 == 0 { 1 } else { base })
}

/// Euclidean ratio factor for `k <= n/2`, `0 <= l <= k - 1`, split by the
/// parities of `n` and `k - l` (and by `eta((-1)^{n/2})` when `q` is odd and
/// `n` even).
///
/// Fails with [`Error::OutOfValidRange`] when `A_{l+1} = 0`, which happens for
/// `q` odd, `k = n/2`, `l = k - 1`, `eta((-1)^{n/2}) = -1`.
pub fn alpha_euclidean(n: u32, k: u32, l: u32, q: u64) -> Result<ExactRat> {
    check_q(q)?;
    if k == 0 || 2 * k > n || l + 1 > k {
        return Err(Error::OutOfValidRange(format!(
            "need 1 <= k <= n/2 and l <= k-1, got n={n} k={k} l={l}"
        )));
    }
    let q_odd = q % 2 == 1;
    let n_even = n.is_multiple_of(2);
    let a = k - l;
    let b = n - k - l;
    let p = |e: u32| int_pow(q, e);
    let alpha = match (n_even, a % 2 == 1) {
        (true, true) if q_odd => {
            let eta = eta_sign_power((n / 2) as i64, q)?;
            let den = p(n / 2 - 1) + eta * p(l);
            if den.is_zero() {
                return Err(Error::OutOfValidRange(format!(
                    "no self-orthogonal [{n}, {}] codes over F_{q}",
                    l + 1
                )));
            }
            ExactRat::new(p(n / 2 - 1), den)
        }
        (true, true) => ExactRat::new(p(n - l - 1), p(n - l - 1) - 1u32),
        (false, true) => ExactRat::new(p(b), p(b) - 1u32),
        (false, false) => ExactRat::new(p(a), p(a) - 1u32),
        (true, false) if q_odd => {
            let eta = eta_sign_power((n / 2) as i64, q)?;
            ExactRat::new(p(n / 2 - l) * (p(n / 2 - l) + eta), (p(b) - 1u32) * (p(a) - 1u32))
        }
        (true, false) => ExactRat::new(p(n - l) - 1u32, p(l) * (p(b) - 1u32) * (p(a) - 1u32)),
    };
    Ok(alpha)
}

/// The regime where the Euclidean factor drops to `[1/2, 1)`.
pub fn euclidean_half_bound_regime(n: u32, k: u32, l: u32, q: u64) -> bool {
    q % 2 == 1 && n.is_multiple_of(2) && (k as i64 - l as i64) % 2 != 0 && (eta_sign_power((n / 2) as i64, q) == Ok(1))
}

/// Both stated forms of the Hermitian exception condition. Returns
/// `(odd a and b with min 1, n even with k in {1, n-1})`.
pub fn hermitian_boundary_forms(n: u32, k: u32, l: u32) -> (bool, bool) {
    let a = k as i64 - l as i64;
    let b = n as i64 - k as i64 - l as i64;
    let by_ab = l == 0 && a % 2 == 1 && b % 2 == 1 && a.min(b) == 1;
    let by_nk = l == 0 && n.is_multiple_of(2) && (k == 1 || k + 1 == n);
    (by_ab, by_nk)
}

pub fn is_hermitian_boundary(n: u32, k: u32, l: u32) -> bool {
    let (by_ab, by_nk) = hermitian_boundary_forms(n, k, l);
    debug_assert_eq!(by_ab, by_nk, "exception conditions disagree at n={n} k={k} l={l}");
    by_ab
}

/// Membership in `E_S = {(2n, k, 0, 2) : 4 <= k <= 2n-4, k even}`.
pub fn in_symplectic_exception(ambient: u32, k: u32, l: u32, q: u64) -> bool {
    q == 2 && l == 0 && k.is_multiple_of(2) && k >= 4 && k + 4 <= ambient
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HermitianClass {
    pub classification: Classification,
    /// `alpha * (q^{l+1} - 1) > 1`, from the closed form.
    pub ratio_monotone: bool,
    /// `A_l > A_{l+1}`, from the exact counts.
    pub count_monotone: bool,
}

pub fn classify_hermitian(n: u32, k: u32, l: u32, q: u64) -> Result<HermitianClass> {
    let alpha = alpha_hermitian(n, k, l, q)?;
    let classification = if is_hermitian_boundary(n, k, l) {
        Classification::HermitianBoundary
    } else {
        Classification::StrictlyAboveOne
    };
    let ratio = &alpha * ExactRat::from_integer(hermitian_cofactor(l, q));
    let here = count_hermitian(&HermitianParams::new(n, k, l, q));
    let next = count_hermitian(&HermitianParams::new(n, k, l + 1, q));
    Ok(HermitianClass {
        classification,
        ratio_monotone: ratio > ExactRat::one(),
        count_monotone: here > next,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymplecticClass {
    pub classification: Classification,
    pub in_es: bool,
    /// `A_l > A_{l+2}`, from the exact counts.
    pub count_monotone: bool,
    /// `A_l > (q^{l+1}-1)(q^{l+2}-1) A_{l+2}`, from the exact counts.
    pub cofactor_inequality: bool,
}

pub fn classify_symplectic(ambient: u32, k: u32, l: u32, q: u64) -> Result<SymplecticClass> {
    alpha_symplectic(ambient, k, l, q)?;
    let in_es = in_symplectic_exception(ambient, k, l, q);
    let count = |l| count_symplectic(&SymplecticParams::from_ambient(ambient, k, l, q).unwrap());
    let here = count(l);
    let next = count(l + 2);
    Ok(SymplecticClass {
        classification: if in_es {
            Classification::SymplecticExceptionES
        } else {
            Classification::StrictlyAboveOne
        },
        in_es,
        count_monotone: here > next,
        cofactor_inequality: here > symplectic_cofactor(l, q) * next,
    })
}

pub fn ratio_report_hermitian(n: u32, k: u32, l: u32, q: u64) -> Result<RatioReport> {
    let alpha = alpha_hermitian(n, k, l, q)?;
    let class = if is_hermitian_boundary(n, k, l) {
        Classification::HermitianBoundary
    } else {
        Classification::StrictlyAboveOne
    };
    Ok(RatioReport::new(
        FormKind::Hermitian,
        alpha,
        hermitian_cofactor(l, q),
        class,
    ))
}

pub fn ratio_report_symplectic(ambient: u32, k: u32, l: u32, q: u64) -> Result<RatioReport> {
    let alpha = alpha_symplectic(ambient, k, l, q)?;
    let class = if in_symplectic_exception(ambient, k, l, q) {
        Classification::SymplecticExceptionES
    } else {
        Classification::StrictlyAboveOne
    };
    Ok(RatioReport::new(
        FormKind::Symplectic,
        alpha,
        symplectic_cofactor(l, q),
        class,
    ))
}

pub fn ratio_report_euclidean(n: u32, k: u32, l: u32, q: u64) -> Result<RatioReport> {
    let alpha = alpha_euclidean(n, k, l, q)?;
    let class = if alpha > ExactRat::one() {
        Classification::StrictlyAboveOne
    } else {
        Classification::EuclideanHalfBoundRegime
    };
    Ok(RatioReport::new(
        FormKind::Euclidean,
        alpha,
        hermitian_cofactor(l, q),
        class,
    ))
}

pub fn ratio_report(form: FormKind, n: u32, k: u32, l: u32, q: u64) -> Result<RatioReport> {
    match form {
        FormKind::Euclidean => ratio_report_euclidean(n, k, l, q),
        FormKind::Hermitian => ratio_report_hermitian(n, k, l, q),
        FormKind::Symplectic => ratio_report_symplectic(n, k, l, q),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Regime {
    /// `a` fixed, `b -> infinity`.
    BoundaryFixedA,
    /// `a, b -> infinity` together.
    Joint,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AsymptoticReport {
    pub form: FormKind,
    pub regime: Regime,
    pub a: Option<u32>,
    pub l: u32,
    pub q: u64,
    /// Limit of `A_l / A_{l+step}`.
    pub limit: ExactRat,
}

/// Limit of `A^H_l / A^H_{l+1}`: `q^{a-1}(q^{l+1}+1)(q^{l+1}-1)/(q^a - (-1)^a)`
/// for fixed `a`, `(q^{2(l+1)} - 1)/q` jointly.
pub fn asymptotic_hermitian(regime: Regime, a: Option<u32>, l: u32, q: u64) -> Result<AsymptoticReport> {
    check_q(q)?;
    let limit = match (regime, a) {
        (Regime::Joint, _) => ExactRat::new(int_pow(q, 2 * (l + 1)) - 1u32, ExactInt::from(q)),
        (Regime::BoundaryFixedA, Some(a)) if a >= 1 => ExactRat::new(
            int_pow(q, a - 1) * (int_pow(q, l + 1) + 1u32) * (int_pow(q, l + 1) - 1u32),
            pow_minus_sign(q, a as i64),
        ),
        (Regime::BoundaryFixedA, a) => {
            return Err(Error::BadRegime(format!("boundary regime needs a >= 1, got {a:?}")))
        }
    };
    Ok(AsymptoticReport {
        form: FormKind::Hermitian,
        regime,
        a: a.filter(|_| regime == Regime::BoundaryFixedA),
        l,
        q,
        limit,
    })
}

/// Limit of `A^S_l / A^S_{l+2}`: `q^{a-2}(q^{l+1}-1)(q^{l+2}-1)/(q^a - 1)` for
/// fixed even `a >= 2`, `(q^{l+1}-1)(q^{l+2}-1)/q^2` jointly.
pub fn asymptotic_symplectic(regime: Regime, a: Option<u32>, l: u32, q: u64) -> Result<AsymptoticReport> {
    check_q(q)?;
    let limit = match (regime, a) {
        (Regime::Joint, _) => ExactRat::new(symplectic_cofactor(l, q), int_pow(q, 2)),
        (Regime::BoundaryFixedA, Some(a)) if a >= 2 && a % 2 == 0 => {
            ExactRat::new(int_pow(q, a - 2) * symplectic_cofactor(l, q), int_pow(q, a) - 1u32)
        }
        (Regime::BoundaryFixedA, a) => {
            return Err(Error::BadRegime(format!(
                "boundary regime needs an even a >= 2, got {a:?}"
            )))
        }
    };
    Ok(AsymptoticReport {
        form: FormKind::Symplectic,
        regime,
        a: a.filter(|_| regime == Regime::BoundaryFixedA),
        l,
        q,
        limit,
    })
}

/// One column of the cross-form comparison, evaluated at a list of `q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComparisonRow {
    pub form: FormKind,
    pub step: u32,
    pub alpha_closed_form: &'static str,
    pub alpha_lower_bound: &'static str,
    pub alpha_asymptotic: &'static str,
    pub asymptotic_ratio: &'static str,
    pub exceptions: &'static str,
    /// `(q, alpha lower bound at q, alpha asymptotic at q, asymptotic A_0/A_step at q)`.
    pub values: Vec<ComparisonValue>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComparisonValue {
    pub q: u64,
    pub alpha_lower_bound: Option<ExactRat>,
    pub alpha_asymptotic: ExactRat,
    pub asymptotic_ratio: ExactRat,
}

/// The three ratio decompositions side by side.
pub fn comparison_table(qs: &[u64]) -> Result<Vec<ComparisonRow>> {
    for &q in qs {
        check_q(q)?;
    }
    let qr = |q: u64| ExactInt::from(q);
    let rows = FormKind::ALL
        .iter()
        .map(|&form| {
            let values = qs
                .iter()
                .map(|&q| {
                    let (lb, asym, ratio) = match form {
                        FormKind::Euclidean => (
                            Some(rat(1, 2)),
                            ExactRat::new(qr(q) + 1, qr(q)),
                            ExactRat::new(qr(q) * qr(q) - 1, qr(q)),
                        ),
                        FormKind::Hermitian => (
                            Some(ExactRat::new(qr(q), qr(q) + 1)),
                            ExactRat::new(qr(q) + 1, qr(q)),
                            asymptotic_hermitian(Regime::Joint, None, 0, q).unwrap().limit,
                        ),
                        FormKind::Symplectic => (
                            None,
                            ExactRat::new(ExactInt::one(), qr(q) * qr(q)),
                            asymptotic_symplectic(Regime::Joint, None, 0, q).unwrap().limit,
                        ),
                    };
                    ComparisonValue {
                        q,
                        alpha_lower_bound: lb,
                        alpha_asymptotic: asym,
                        asymptotic_ratio: ratio,
                    }
                })
                .collect();
            let (closed, lb, asym, ratio, exc) = match form {
                FormKind::Euclidean => ("case-split", "1/2", "(q+1)/q", "(q^2-1)/q", "eta-character + mod 4"),
                FormKind::Hermitian => (
                    "q^(n-2l-1)(q^(l+1)+1)/((q^a-(-1)^a)(q^b-(-1)^b))",
                    "q/(q+1) >= 2/3",
                    "(q+1)/q",
                    "(q^2-1)/q",
                    "l=0, n even, k in {1,n-1}",
                ),
                FormKind::Symplectic => (
                    "q^(a+b-2)/((q^a-1)(q^b-1))",
                    "none > 1",
                    "1/q^2",
                    "(q-1)(q^2-1)/q^2",
                    "q=2, l=0, 4<=k<=2n-4",
                ),
            };
            ComparisonRow {
                form,
                step: form.step(),
                alpha_closed_form: closed,
                alpha_lower_bound: lb,
                alpha_asymptotic: asym,
                asymptotic_ratio: ratio,
                exceptions: exc,
                values,
            }
        })
        .collect();
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(n: u32, k: u32, l: u32, q: u64) -> ExactRat {
        ExactRat::from_integer(count_hermitian(&HermitianParams::new(n, k, l, q)))
    }

    fn s(amb: u32, k: u32, l: u32, q: u64) -> ExactRat {
        ExactRat::from_integer(count_symplectic(&SymplecticParams::from_ambient(amb, k, l, q).unwrap()))
    }

    #[test]
    fn hermitian_alpha_examples() {
        assert_eq!(alpha_hermitian(4, 1, 0, 2).unwrap(), rat(8, 9));
        assert_eq!(alpha_hermitian(4, 2, 0, 2).unwrap(), rat(8, 3));
        // exception family value q^max(a,b)/(q^max(a,b)+1)
        assert_eq!(alpha_hermitian(6, 5, 0, 3).unwrap(), rat(243, 244));
        assert!(matches!(alpha_hermitian(4, 2, 2, 2), Err(Error::OutOfValidRange(_))));
        assert!(matches!(alpha_hermitian(4, 2, 0, 6), Err(Error::NotPrimePower(6))));
    }

    #[test]
    fn symplectic_alpha_examples() {
        assert_eq!(alpha_symplectic(4, 2, 0, 2).unwrap(), rat(4, 9));
        assert_eq!(alpha_symplectic(8, 4, 0, 2).unwrap(), rat(64, 225));
        assert_eq!(rat(91392, 3 * 107100), rat(64, 225));
        assert_eq!(alpha_symplectic(4, 2, 0, 3).unwrap(), rat(9, 64));
        assert_eq!(rat(9, 64) * rat(16, 1) * rat(40, 1), rat(90, 1));
        assert!(matches!(alpha_symplectic(8, 3, 0, 2), Err(Error::ParityViolation(3))));
        assert!(matches!(alpha_symplectic(4, 2, 2, 2), Err(Error::OutOfValidRange(_))));
        assert!(matches!(
            alpha_symplectic(7, 2, 0, 2),
            Err(Error::OddAmbientForSymplectic(7))
        ));
    }

    #[test]
    fn euclidean_alpha_examples() {
        assert_eq!(alpha_euclidean(5, 2, 0, 3).unwrap(), rat(9, 8));
        assert_eq!(alpha_euclidean(4, 1, 0, 3).unwrap(), rat(3, 4));
        assert_eq!(alpha_euclidean(4, 1, 0, 2).unwrap(), rat(8, 7));
        // k = n/2, l = k-1 with eta = +1 attains 1/2
        let r = ratio_report_euclidean(4, 2, 1, 5).unwrap();
        assert_eq!(r.alpha, rat(1, 2));
        assert!(r.attains_half_bound);
        // eta = -1 there means no self-dual codes at all
        assert!(matches!(alpha_euclidean(2, 1, 0, 3), Err(Error::OutOfValidRange(_))));
        assert!(alpha_euclidean(5, 3, 0, 3).is_err());
    }

    #[test]
    fn quadratic_character_examples() {
        assert_eq!(quadratic_character(1, 3).unwrap(), 1);
        assert_eq!(quadratic_character(-1, 3).unwrap(), -1);
        assert_eq!(quadratic_character(-1, 5).unwrap(), 1);
        assert_eq!(quadratic_character(0, 7).unwrap(), 0);
        assert!(matches!(quadratic_character(1, 4), Err(Error::EvenCharacteristic(4))));
        assert!(matches!(eta_minus_one(8), Err(Error::EvenCharacteristic(8))));
    }

    #[test]
    fn residue_rule_agrees_with_field_character() {
        for q in (3..=243u64).step_by(2).filter(|&q| prime_power(q).is_some()) {
            assert_eq!(eta_minus_one(q).unwrap(), quadratic_character(-1, q).unwrap(), "q={q}");
        }
    }

    #[test]
    fn hermitian_classification_examples() {
        let c = classify_hermitian(4, 1, 0, 2).unwrap();
        assert_eq!(c.classification, Classification::HermitianBoundary);
        assert!(!c.ratio_monotone && !c.count_monotone);

        let c = classify_hermitian(4, 1, 0, 3).unwrap();
        assert_eq!(c.classification, Classification::HermitianBoundary);
        assert!(alpha_hermitian(4, 1, 0, 3).unwrap() < ExactRat::one());
        assert!(c.ratio_monotone && c.count_monotone);

        let c = classify_hermitian(6, 3, 1, 2).unwrap();
        assert_eq!(c.classification, Classification::StrictlyAboveOne);
    }

    #[test]
    fn boundary_condition_forms_agree() {
        for n in 2..=30u32 {
            for k in 1..n {
                for l in 0..=k.min(n - k) {
                    let (x, y) = hermitian_boundary_forms(n, k, l);
                    if hermitian_range(n, k, l).is_ok() {
                        assert_eq!(x, y, "n={n} k={k} l={l}");
                    }
                }
            }
        }
    }

    #[test]
    fn symplectic_classification_examples() {
        let c = classify_symplectic(8, 4, 0, 2).unwrap();
        assert_eq!(c.classification, Classification::SymplecticExceptionES);
        assert!(!c.count_monotone);

        let c = classify_symplectic(8, 2, 0, 2).unwrap();
        assert!(!c.in_es);
        assert!(c.count_monotone);
        // 5440 < 3 * 5355: the cofactor-weighted comparison fails even off E_S
        assert!(!c.cofactor_inequality);

        let c = classify_symplectic(8, 4, 0, 3).unwrap();
        assert_eq!(c.classification, Classification::StrictlyAboveOne);
        assert!(c.count_monotone);
    }

    #[test]
    fn hermitian_ratio_identity() {
        for q in [2u64, 3, 4] {
            for n in 2..=8u32 {
                for k in 1..n {
                    for l in 0..=k.min(n - k) {
                        let Ok(r) = ratio_report_hermitian(n, k, l, q) else {
                            continue;
                        };
                        assert_eq!(h(n, k, l, q), &r.full_ratio * h(n, k, l + 1, q));
                    }
                }
            }
        }
    }

    #[test]
    fn symplectic_ratio_identity() {
        for q in [2u64, 3] {
            for amb in (2..=12u32).step_by(2) {
                for k in 0..=amb {
                    for l in 0..=k {
                        let Ok(r) = ratio_report_symplectic(amb, k, l, q) else {
                            continue;
                        };
                        assert_eq!(s(amb, k, l, q), &r.full_ratio * s(amb, k, l + 2, q));
                        assert_eq!(r.monotone_a, r.classification == Classification::StrictlyAboveOne);
                    }
                }
            }
        }
    }

    #[test]
    fn asymptotic_examples() {
        let hj = |l, q| asymptotic_hermitian(Regime::Joint, None, l, q).unwrap().limit;
        let sj = |l, q| asymptotic_symplectic(Regime::Joint, None, l, q).unwrap().limit;
        assert_eq!(hj(0, 2), rat(3, 2));
        assert_eq!(hj(0, 3), rat(8, 3));
        assert_eq!(
            asymptotic_hermitian(Regime::BoundaryFixedA, Some(1), 0, 2)
                .unwrap()
                .limit,
            rat(1, 1)
        );
        assert_eq!(sj(0, 2), rat(3, 4));
        assert_eq!(sj(1, 2), rat(21, 4));
        assert_eq!(sj(0, 3), rat(16, 9));
        assert!(matches!(
            asymptotic_hermitian(Regime::BoundaryFixedA, Some(0), 0, 2),
            Err(Error::BadRegime(_))
        ));
        assert!(matches!(
            asymptotic_symplectic(Regime::BoundaryFixedA, Some(3), 0, 2),
            Err(Error::BadRegime(_))
        ));
        assert!(asymptotic_symplectic(Regime::BoundaryFixedA, None, 0, 2).is_err());
    }

    #[test]
    fn boundary_limit_is_approached_for_fixed_a() {
        // a = 1, l = 0, q = 2: A_0/A_1 at b = 1, 3, 5, ... tends to the boundary limit
        let lim = asymptotic_hermitian(Regime::BoundaryFixedA, Some(2), 0, 3)
            .unwrap()
            .limit;
        let mut prev: Option<ExactRat> = None;
        for b in [2u32, 4, 6, 8, 10] {
            let n = 2 + b;
            let d = crate::exactnum::abs_diff(&(h(n, 2, 0, 3) / h(n, 2, 1, 3)), &lim);
            if let Some(p) = &prev {
                assert!(&d < p);
            }
            prev = Some(d);
        }
        let lim = asymptotic_symplectic(Regime::BoundaryFixedA, Some(2), 0, 2)
            .unwrap()
            .limit;
        let mut prev: Option<ExactRat> = None;
        for b in [2u32, 4, 6, 8] {
            let amb = 2 + b;
            let d = crate::exactnum::abs_diff(&(s(amb, 2, 0, 2) / s(amb, 2, 2, 2)), &lim);
            if let Some(p) = &prev {
                assert!(&d < p);
            }
            prev = Some(d);
        }
    }

    #[test]
    fn comparison_values() {
        let rows = comparison_table(&[2, 3]).unwrap();
        let steps: Vec<u32> = rows.iter().map(|r| r.step).collect();
        assert_eq!(steps, vec![1, 1, 2]);
        let at = |i: usize, j: usize| rows[i].values[j].asymptotic_ratio.clone();
        assert_eq!((at(0, 0), at(1, 0), at(2, 0)), (rat(3, 2), rat(3, 2), rat(3, 4)));
        assert_eq!((at(1, 1), at(2, 1)), (rat(8, 3), rat(16, 9)));
        assert!(comparison_table(&[6]).is_err());
    }
}
