use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::field::{FieldElem, FiniteField};
use super::matrix::{rank_in_place, MatrixGF};
use crate::error::{Error, Result};

/// The inner product a hull is taken with.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FormKind {
    /// `sum x_i y_i`.
    Euclidean,
    /// `sum x_i y_i^q` over `F_{q^2}`.
    Hermitian,
    /// `sum (x_i y_{n+i} - x_{n+i} y_i)` over `F_q^{2n}`.
    Symplectic,
}

impl FormKind {
    pub const ALL: [FormKind; 3] = [FormKind::Euclidean, FormKind::Hermitian, FormKind::Symplectic];

    pub fn name(self) -> &'static str {
        match self {
            FormKind::Euclidean => "euclidean",
            FormKind::Hermitian => "hermitian",
            FormKind::Symplectic => "symplectic",
        }
    }

    /// Step in hull dimension between consecutive nonzero counts.
    pub fn step(self) -> u32 {
        match self {
            FormKind::Symplectic => 2,
            _ => 1,
        }
    }

    /// Checks that the form is defined on `F^cols` for this field.
    pub fn check(self, field: &FiniteField, cols: usize) -> Result<()> {
        match self {
            FormKind::Euclidean => Ok(()),
            FormKind::Hermitian => field
                .hermitian_subfield_order()
                .map(|_| ())
                .ok_or(Error::FieldNotASquareForHermitian(field.order())),
            FormKind::Symplectic if cols % 2 == 1 => Err(Error::OddAmbientForSymplectic(cols)),
            FormKind::Symplectic => Ok(()),
        }
    }
}

impl fmt::Display for FormKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FormKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "euclidean" | "e" => Ok(FormKind::Euclidean),
            "hermitian" | "h" => Ok(FormKind::Hermitian),
            "symplectic" | "s" => Ok(FormKind::Symplectic),
            other => Err(format!("unknown form {other:?}")),
        }
    }
}

/// Value of the form on a pair of vectors.
pub fn pair(field: &FiniteField, form: FormKind, x: &[FieldElem], y: &[FieldElem]) -> FieldElem {
    debug_assert_eq!(x.len(), y.len());
    match form {
        FormKind::Euclidean => dot(field, x, y),
        FormKind::Hermitian => {
            let q = field.hermitian_subfield_order().expect("checked by caller");
            x.iter().zip(y).fold(FieldElem::ZERO, |acc, (&a, &b)| {
                field.add(acc, field.mul(a, field.pow(b, q)))
            })
        }
        FormKind::Symplectic => {
            let n = x.len() / 2;
            (0..n).fold(FieldElem::ZERO, |acc, i| {
                let t = field.sub(field.mul(x[i], y[n + i]), field.mul(x[n + i], y[i]));
                field.add(acc, t)
            })
        }
    }
}

fn dot(field: &FiniteField, x: &[FieldElem], y: &[FieldElem]) -> FieldElem {
    x.iter()
        .zip(y)
        .fold(FieldElem::ZERO, |acc, (&a, &b)| field.add(acc, field.mul(a, b)))
}

/// The symplectic form matrix `[[0, I_n], [-I_n, 0]]`.
pub fn omega(field: std::sync::Arc<FiniteField>, n: usize) -> MatrixGF {
    let minus_one = field.neg(FieldElem::ONE);
    let mut m = MatrixGF::zeros(field, 2 * n, 2 * n);
    for i in 0..n {
        m.set(i, n + i, FieldElem::ONE);
        m.set(n + i, i, minus_one);
    }
    m
}

/// Gram matrix of the rows of `g` under `form`: `G G^T`, `G conj(G)^T` or
/// `G Omega G^T`.
pub fn gram(g: &MatrixGF, form: FormKind) -> Result<MatrixGF> {
    let field = g.field().clone();
    form.check(&field, g.cols())?;
    match form {
        FormKind::Euclidean => g.mul(&g.transpose()),
        FormKind::Hermitian => {
            let q = field.hermitian_subfield_order().unwrap();
            let conj = g.map(|x| field.pow(x, q));
            g.mul(&conj.transpose())
        }
        FormKind::Symplectic => {
            let w = omega(field, g.cols() / 2);
            g.mul(&w)?.mul(&g.transpose())
        }
    }
}

/// Dimension of `C ∩ C^perp` for the code spanned by the rows of `g`, computed
/// as `k - rank(Gram)`. The rows must be linearly independent.
pub fn hull_dim(g: &MatrixGF, form: FormKind) -> Result<usize> {
    let rank = g.rank();
    if rank != g.rows() {
        return Err(Error::RankDeficientGenerator { rows: g.rows(), rank });
    }
    Ok(g.rows() - gram(g, form)?.rank())
}

/// Reusable scratch for computing hull dimensions of many `k x n` generator
/// matrices without allocating.
pub struct GramScratch {
    form: FormKind,
    k: usize,
    n: usize,
    /// Row `r` of the conjugate (Hermitian) or of `G Omega` (symplectic).
    partner: Vec<FieldElem>,
    gram: Vec<FieldElem>,
    frob: Vec<FieldElem>,
}

impl GramScratch {
    pub fn new(field: &FiniteField, form: FormKind, k: usize, n: usize) -> Result<Self> {
        form.check(field, n)?;
        let frob = match form {
            FormKind::Hermitian => {
                let q = field.hermitian_subfield_order().unwrap();
                field.elements().map(|x| field.pow(x, q)).collect()
            }
            _ => Vec::new(),
        };
        Ok(GramScratch {
            form,
            k,
            n,
            partner: vec![FieldElem::ZERO; k * n],
            gram: vec![FieldElem::ZERO; k * k],
            frob,
        })
    }

    /// `k - rank(Gram)` for a row-major `k x n` generator with independent rows.
    pub fn hull_dim(&mut self, field: &FiniteField, g: &[FieldElem]) -> usize {
        let (k, n) = (self.k, self.n);
        debug_assert_eq!(g.len(), k * n);
        match self.form {
            FormKind::Euclidean => self.partner.copy_from_slice(g),
            FormKind::Hermitian => {
                for (d, &s) in self.partner.iter_mut().zip(g) {
                    *d = self.frob[s.index()];
                }
            }
            FormKind::Symplectic => {
                // (x Omega)_j = -x_{h+j} for j < h, x_{j-h} for j >= h
                let h = n / 2;
                for r in 0..k {
                    let row = &g[r * n..(r + 1) * n];
                    let out = &mut self.partner[r * n..(r + 1) * n];
                    for j in 0..h {
                        out[j] = field.neg(row[h + j]);
                        out[h + j] = row[j];
                    }
                }
            }
        }
        // Gram[r][s] = <g_r, partner_s> with the partner already conjugated or rotated
        for r in 0..k {
            for s in 0..k {
                let v = if self.form == FormKind::Symplectic {
                    // <x,y>_S = x Omega y^T = (x Omega) . y
                    dot(field, &self.partner[r * n..(r + 1) * n], &g[s * n..(s + 1) * n])
                } else {
                    dot(field, &g[r * n..(r + 1) * n], &self.partner[s * n..(s + 1) * n])
                };
                self.gram[r * k + s] = v;
            }
        }
        k - rank_in_place(field, &mut self.gram, k, k)
    }
}
