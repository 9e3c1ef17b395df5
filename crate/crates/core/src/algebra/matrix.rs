use std::fmt;
use std::sync::Arc;

use super::field::{FieldElem, FiniteField};
use crate::error::{Error, Result};

/// Dense row-major matrix over a finite field.
#[derive(Clone, PartialEq, Eq)]
pub struct MatrixGF {
    rows: usize,
    cols: usize,
    data: Vec<FieldElem>,
    field: Arc<FiniteField>,
}

/// Result of [`MatrixGF::rref`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub matrix: MatrixGF,
    pub rank: usize,
    /// Pivot columns, increasing.
    pub pivots: Vec<usize>,
}

impl fmt::Debug for MatrixGF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "MatrixGF {}x{} over F_{}", self.rows, self.cols, self.field.order())?;
        for r in 0..self.rows {
            let row: Vec<u16> = self.row(r).iter().map(|e| e.0).collect();
            writeln!(f, "  {row:?}")?;
        }
        Ok(())
    }
}

impl MatrixGF {
    pub fn zeros(field: Arc<FiniteField>, rows: usize, cols: usize) -> Self {
        MatrixGF {
            rows,
            cols,
            data: vec![FieldElem::ZERO; rows * cols],
            field,
        }
    }

    pub fn identity(field: Arc<FiniteField>, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, FieldElem::ONE);
        }
        m
    }

    pub fn from_elems(field: Arc<FiniteField>, rows: usize, cols: usize, data: Vec<FieldElem>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(MatrixGF {
            rows,
            cols,
            data,
            field,
        })
    }

    /// Builds a matrix from element indices (see [`FieldElem`]).
    pub fn from_rows(field: Arc<FiniteField>, rows: &[Vec<u16>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        let order = field.order();
        if rows.iter().flatten().any(|&v| v as u64 >= order) {
            return Err(Error::BadRange(format!("entry outside F_{order}")));
        }
        let data = rows.iter().flatten().map(|&v| FieldElem(v)).collect();
        Self::from_elems(field, rows.len(), cols, data)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> &Arc<FiniteField> {
        &self.field
    }

    pub fn data(&self) -> &[FieldElem] {
        &self.data
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> FieldElem {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: FieldElem) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[FieldElem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> MatrixGF {
        let mut t = MatrixGF::zeros(self.field.clone(), self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    /// Entrywise map, e.g. the Frobenius conjugate.
    pub fn map(&self, f: impl Fn(FieldElem) -> FieldElem) -> MatrixGF {
        MatrixGF {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&x| f(x)).collect(),
            field: self.field.clone(),
        }
    }

    pub fn mul(&self, other: &MatrixGF) -> Result<MatrixGF> {
        if self.cols != other.rows || self.field != other.field {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = &self.field;
        let mut out = MatrixGF::zeros(self.field.clone(), self.rows, other.cols);
        for r in 0..self.rows {
            for c in 0..other.cols {
                let v = (0..self.cols).fold(FieldElem::ZERO, |acc, i| {
                    f.add(acc, f.mul(self.get(r, i), other.get(i, c)))
                });
                out.set(r, c, v);
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &MatrixGF) -> Result<MatrixGF> {
        if self.rows != other.rows || self.cols != other.cols || self.field != other.field {
            return Err(Error::DimensionMismatch("matrix sum".into()));
        }
        let f = &self.field;
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| f.add(a, b)).collect();
        Ok(MatrixGF { data, ..self.clone() })
    }

    /// Columns `start..end` as a new matrix.
    pub fn column_block(&self, start: usize, end: usize) -> MatrixGF {
        assert!(start <= end && end <= self.cols);
        let mut out = MatrixGF::zeros(self.field.clone(), self.rows, end - start);
        for r in 0..self.rows {
            for c in start..end {
                out.set(r, c - start, self.get(r, c));
            }
        }
        out
    }

    /// Reduced row-echelon form, rank and pivot columns.
    pub fn rref(&self) -> Rref {
        let mut matrix = self.clone();
        let pivots = rref_in_place(&self.field, &mut matrix.data, self.rows, self.cols);
        Rref {
            rank: pivots.len(),
            matrix,
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        let mut scratch = self.data.clone();
        rank_in_place(&self.field, &mut scratch, self.rows, self.cols)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|e| e.is_zero())
    }
}

/// Gauss-Jordan elimination on a row-major buffer. Returns the pivot columns.
pub fn rref_in_place(field: &FiniteField, data: &mut [FieldElem], rows: usize, cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !data[i * cols + c].is_zero()) else {
            continue;
        };
        if p != r {
            for j in 0..cols {
                data.swap(p * cols + j, r * cols + j);
            }
        }
        let inv = field.inv(data[r * cols + c]).unwrap();
        for j in c..cols {
            data[r * cols + j] = field.mul(data[r * cols + j], inv);
        }
        for i in 0..rows {
            let factor = data[i * cols + c];
            if i != r && !factor.is_zero() {
                for j in c..cols {
                    let t = field.mul(factor, data[r * cols + j]);
                    data[i * cols + j] = field.sub(data[i * cols + j], t);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Rank by forward elimination only; clobbers `data`.
pub fn rank_in_place(field: &FiniteField, data: &mut [FieldElem], rows: usize, cols: usize) -> usize {
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !data[i * cols + c].is_zero()) else {
            continue;
        };
        if p != r {
            for j in c..cols {
                data.swap(p * cols + j, r * cols + j);
            }
        }
        let inv = field.inv(data[r * cols + c]).unwrap();
        for i in r + 1..rows {
            let x = data[i * cols + c];
            if !x.is_zero() {
                let factor = field.mul(x, inv);
                for j in c..cols {
                    let t = field.mul(factor, data[r * cols + j]);
                    data[i * cols + j] = field.sub(data[i * cols + j], t);
                }
            }
        }
        r += 1;
    }
    r
}
