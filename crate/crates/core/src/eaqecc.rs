//! Entanglement-assisted quantum codes from hull-graded classical codes.
//!
//! An `[n, k]` code over `F_{q^2}` with Hermitian hull dimension `l` gives
//! `[[n, k-l, d; n-k-l]]_q` and `[[n, n-k-l, d'; k-l]]_q` codes. A `[2n, k]`
//! code over `F_q` with symplectic hull dimension `l` gives
//! `[[n, n-(k+l)/2, d; (k-l)/2]]_q`. Minimum distances are carried through
//! unchanged and never computed.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::{rank_in_place, FieldElem, FormKind, MatrixGF};
use crate::error::{Error, Result};
use crate::exactnum::ExactInt;
use crate::formulas::{hermitian_spectrum, symplectic_spectrum};
use crate::ratios::{in_symplectic_exception, is_hermitian_boundary};

/// Parameters `[[n, k, d; c]]_q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EaqeccParams {
    pub n: u32,
    pub k_logical: u32,
    pub d: Option<u64>,
    /// Pre-shared maximally entangled pairs.
    pub c: u32,
    pub q: u64,
}

impl fmt::Display for EaqeccParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.d {
            Some(d) => write!(f, "[[{}, {}, {}; {}]]_{}", self.n, self.k_logical, d, self.c, self.q),
            None => write!(f, "[[{}, {}, d; {}]]_{}", self.n, self.k_logical, self.c, self.q),
        }
    }
}

/// Both codes obtained from a Hermitian `[n, k]` code with hull dimension `l`.
pub fn gjg_map(
    n: u32,
    k: u32,
    l: u32,
    q: u64,
    d: Option<u64>,
    d_dual: Option<u64>,
) -> Result<(EaqeccParams, EaqeccParams)> {
    if k > n || l > k.min(n - k) {
        return Err(Error::BadRange(format!(
            "need 0 <= l <= min(k, n-k), got n={n} k={k} l={l}"
        )));
    }
    let code = EaqeccParams {
        n,
        k_logical: k - l,
        d,
        c: n - k - l,
        q,
    };
    let dual = EaqeccParams {
        n,
        k_logical: n - k - l,
        d: d_dual,
        c: k - l,
        q,
    };
    Ok((code, dual))
}

/// The code obtained from a symplectic `[2n, k]` code with hull dimension `l`.
pub fn wilde_brun_map(ambient: u32, k: u32, l: u32, q: u64, d: Option<u64>) -> Result<EaqeccParams> {
    if ambient % 2 == 1 {
        return Err(Error::OddAmbientForSymplectic(ambient as usize));
    }
    if l > k || k > ambient || l > ambient - k {
        return Err(Error::BadRange(format!(
            "need 0 <= l <= min(k, 2n-k), got 2n={ambient} k={k} l={l}"
        )));
    }
    if (k - l) % 2 == 1 {
        return Err(Error::ParityViolation((k - l) as i64));
    }
    let n = ambient / 2;
    Ok(EaqeccParams {
        n,
        k_logical: n - (k + l) / 2,
        d,
        c: (k - l) / 2,
        q,
    })
}

/// Optimal ebit count `rank(H_X H_Z^T + H_Z H_X^T) / 2` for a binary check
/// matrix `H = [H_Z | H_X]`.
pub fn ebits_from_check_matrix(h: &MatrixGF) -> Result<u32> {
    let field = h.field();
    if field.order() != 2 {
        return Err(Error::UnsupportedField(format!(
            "check matrices must be binary, got F_{}",
            field.order()
        )));
    }
    if h.cols() % 2 == 1 {
        return Err(Error::OddAmbientForSymplectic(h.cols()));
    }
    let n = h.cols() / 2;
    let hz = h.column_block(0, n);
    let hx = h.column_block(n, 2 * n);
    let m = hx.mul(&hz.transpose())?.add(&hz.mul(&hx.transpose())?)?;
    let mut data: Vec<FieldElem> = m.data().to_vec();
    let rank = rank_in_place(field, &mut data, m.rows(), m.cols());
    if rank % 2 == 1 {
        return Err(Error::OddGramRank(rank));
    }
    Ok((rank / 2) as u32)
}

/// One hull dimension of an entanglement census.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusRow {
    pub l: u32,
    pub c: u32,
    #[serde(serialize_with = "as_string")]
    pub count: ExactInt,
    pub code: EaqeccParams,
    /// The step from this `l` to the next one reverses monotonicity in `c`.
    pub exception: bool,
}

fn as_string<S: serde::Serializer>(x: &ExactInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

/// Exact classical-code counts per entanglement level. For symplectic codes
/// `n` is the ambient length `2n`.
pub fn entanglement_census(form: FormKind, n: u32, k: u32, q: u64) -> Result<Vec<CensusRow>> {
    crate::exactnum::require_prime_power(q)?;
    match form {
        FormKind::Hermitian => {
            if k > n {
                return Err(Error::BadRange(format!("k = {k} > n = {n}")));
            }
            hermitian_spectrum(n, k, q)
                .into_iter()
                .map(|(l, count)| {
                    let (code, _) = gjg_map(n, k, l, q, None, None)?;
                    Ok(CensusRow {
                        l,
                        c: code.c,
                        count,
                        code,
                        exception: q == 2 && is_hermitian_boundary(n, k, l),
                    })
                })
                .collect()
        }
        FormKind::Symplectic => {
            if k > n {
                return Err(Error::BadRange(format!("k = {k} > 2n = {n}")));
            }
            symplectic_spectrum(n, k, q)?
                .into_iter()
                .map(|(l, count)| {
                    let code = wilde_brun_map(n, k, l, q, None)?;
                    Ok(CensusRow {
                        l,
                        c: code.c,
                        count,
                        code,
                        exception: in_symplectic_exception(n, k, l, q),
                    })
                })
                .collect()
        }
        FormKind::Euclidean => Err(Error::BadRange("no entanglement census for the Euclidean form".into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{hull_dim, FiniteField};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use std::sync::Arc;

    fn f2() -> Arc<FiniteField> {
        Arc::new(FiniteField::new(2, 1).unwrap())
    }

    #[test]
    fn gjg_examples() {
        let (a, b) = gjg_map(5, 2, 1, 3, Some(3), Some(2)).unwrap();
        assert_eq!((a.n, a.k_logical, a.d, a.c), (5, 1, Some(3), 2));
        assert_eq!((b.n, b.k_logical, b.d, b.c), (5, 2, Some(2), 1));
        assert_eq!(a.to_string(), "[[5, 1, 3; 2]]_3");

        let (lcd, _) = gjg_map(7, 3, 0, 2, None, None).unwrap();
        assert_eq!((lcd.k_logical, lcd.c), (3, 4));
        let (so, _) = gjg_map(7, 3, 3, 2, None, None).unwrap();
        assert_eq!((so.k_logical, so.c), (0, 1));
        assert!(gjg_map(4, 1, 2, 2, None, None).is_err());
    }

    #[test]
    fn wilde_brun_examples() {
        let e = wilde_brun_map(8, 4, 2, 2, None).unwrap();
        assert_eq!((e.n, e.k_logical, e.c), (4, 1, 1));
        let pure = wilde_brun_map(10, 3, 3, 2, None).unwrap();
        assert_eq!((pure.k_logical, pure.c), (2, 0));
        let max = wilde_brun_map(10, 4, 0, 2, None).unwrap();
        assert_eq!((max.k_logical, max.c), (3, 2));
        assert!(matches!(
            wilde_brun_map(8, 3, 0, 2, None),
            Err(Error::ParityViolation(3))
        ));
        assert!(matches!(wilde_brun_map(8, 4, 5, 2, None), Err(Error::BadRange(_))));
        assert!(wilde_brun_map(7, 2, 0, 2, None).is_err());
    }

    #[test]
    fn ebits_examples() {
        let h = MatrixGF::from_rows(f2(), &[vec![1, 0, 0, 0], vec![0, 0, 1, 0]]).unwrap();
        assert_eq!(ebits_from_check_matrix(&h).unwrap(), 1);
        let single = MatrixGF::from_rows(f2(), &[vec![1, 1, 0, 1]]).unwrap();
        assert_eq!(ebits_from_check_matrix(&single).unwrap(), 0);
        // X X and Z Z on two qubits commute
        let so = MatrixGF::from_rows(f2(), &[vec![1, 1, 0, 0], vec![0, 0, 1, 1]]).unwrap();
        assert_eq!(ebits_from_check_matrix(&so).unwrap(), 0);
        let f3 = Arc::new(FiniteField::new(3, 1).unwrap());
        let t = MatrixGF::from_rows(f3, &[vec![1, 0]]).unwrap();
        assert!(matches!(ebits_from_check_matrix(&t), Err(Error::UnsupportedField(_))));
    }

    #[test]
    fn ebits_agree_with_hull_dimension() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let field = f2();
        let mut checked = 0;
        while checked < 200 {
            let n = rng.gen_range(1..=5usize);
            let m = rng.gen_range(1..=2 * n);
            let data = (0..m * 2 * n).map(|_| FieldElem(rng.gen_range(0..2))).collect();
            let h = MatrixGF::from_elems(field.clone(), m, 2 * n, data).unwrap();
            if h.rank() != m {
                continue;
            }
            let hull = hull_dim(&h, FormKind::Symplectic).unwrap();
            assert_eq!(ebits_from_check_matrix(&h).unwrap() as usize, (m - hull) / 2);
            checked += 1;
        }
    }

    #[test]
    fn census_examples() {
        let rows = entanglement_census(FormKind::Hermitian, 4, 2, 2).unwrap();
        let got: Vec<_> = rows.iter().map(|r| (r.l, r.c, r.count.to_string())).collect();
        assert_eq!(
            got,
            [(0, 2, "240".into()), (1, 1, "90".into()), (2, 0, "27".to_string())]
        );

        let rows = entanglement_census(FormKind::Symplectic, 8, 4, 2).unwrap();
        let got: Vec<_> = rows
            .iter()
            .map(|r| (r.l, r.c, r.count.to_string(), r.exception))
            .collect();
        assert_eq!(
            got,
            [
                (0, 2, "91392".into(), true),
                (2, 1, "107100".into(), false),
                (4, 0, "2295".to_string(), false)
            ]
        );

        let rows = entanglement_census(FormKind::Hermitian, 4, 1, 3).unwrap();
        let got: Vec<_> = rows.iter().map(|r| (r.l, r.c, r.count.to_string())).collect();
        assert_eq!(got, [(0, 3, "540".into()), (1, 2, "280".to_string())]);

        let rows = entanglement_census(FormKind::Hermitian, 4, 1, 2).unwrap();
        assert!(rows[0].exception);
        assert!(entanglement_census(FormKind::Euclidean, 4, 1, 2).is_err());
    }

    #[test]
    fn counts_increase_with_entanglement_off_the_exceptions() {
        for q in [2u64, 3] {
            for n in 2..=8u32 {
                for k in 1..n {
                    let rows = entanglement_census(FormKind::Hermitian, n, k, q).unwrap();
                    for w in rows.windows(2) {
                        assert_eq!(
                            w[0].count > w[1].count,
                            !w[0].exception,
                            "H n={n} k={k} q={q} l={}",
                            w[0].l
                        );
                    }
                }
            }
            for amb in (2..=12u32).step_by(2) {
                for k in 0..=amb {
                    let rows = entanglement_census(FormKind::Symplectic, amb, k, q).unwrap();
                    for w in rows.windows(2) {
                        assert_eq!(
                            w[0].count > w[1].count,
                            !w[0].exception,
                            "S 2n={amb} k={k} q={q} l={}",
                            w[0].l
                        );
                    }
                }
            }
        }
    }
}
