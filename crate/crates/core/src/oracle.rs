//! Brute-force hull spectra.
//!
//! Every `k`-dimensional subspace of `F_Q^n` has a unique generator matrix in
//! reduced row-echelon form. Enumerating those matrices (pivot columns in
//! colexicographic order, free entries as an odometer) visits each subspace
//! once, and the hull dimension of each is `k - rank(Gram)`. The resulting
//! spectra are the ground truth the closed forms are checked against.

use std::collections::BTreeMap;
use std::io::Write;
use std::sync::Arc;

use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{FieldElem, FiniteField, FormKind, GramScratch, MatrixGF};
use crate::error::{Error, Result};
use crate::exactnum::{binomial, gaussian_binomial, ExactInt};
use crate::formulas::{count_hermitian, count_symplectic, HermitianParams, SymplecticParams};

pub const DEFAULT_WORK_LIMIT: u128 = 100_000_000;

/// Environment variable overriding [`DEFAULT_WORK_LIMIT`].
pub const WORK_LIMIT_ENV: &str = "HULLCOUNT_WORK_LIMIT";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleConfig {
    pub work_limit: u128,
    pub parallel: bool,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            work_limit: DEFAULT_WORK_LIMIT,
            parallel: true,
        }
    }
}

impl OracleConfig {
    /// Default configuration with the work limit taken from
    /// `HULLCOUNT_WORK_LIMIT` when it is set to a positive integer.
    pub fn from_env() -> Self {
        let mut cfg = Self::default();
        if let Some(limit) = std::env::var(WORK_LIMIT_ENV)
            .ok()
            .and_then(|v| v.trim().parse::<u128>().ok())
            .filter(|&v| v > 0)
        {
            cfg.work_limit = limit;
        }
        cfg
    }
}

/// Upper bound `Q^{k(n-k)} * C(n, k)` on the number of RREF matrices visited.
pub fn work_estimate(n: usize, k: usize, order: u64) -> u128 {
    if k > n {
        return 0;
    }
    let free = (k * (n - k)) as u32;
    (order as u128)
        .checked_pow(free)
        .and_then(|p| p.checked_mul(binomial(n as u64, k as u64)))
        .unwrap_or(u128::MAX)
}

/// Fails with [`Error::WorkLimitExceeded`] when the estimate exceeds `limit`.
pub fn check_work(n: usize, k: usize, order: u64, limit: u128) -> Result<()> {
    let estimated = work_estimate(n, k, order);
    if estimated > limit {
        return Err(Error::WorkLimitExceeded { estimated, limit });
    }
    Ok(())
}

/// All `k`-subsets of `0..n` in colexicographic order.
pub fn pivot_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut c: Vec<usize> = (0..k).collect();
    loop {
        out.push(c.clone());
        if !next_colex(&mut c, n) {
            return out;
        }
    }
}

fn next_colex(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    for i in 0..k {
        let limit = if i + 1 < k { c[i + 1] } else { n };
        if c[i] + 1 < limit {
            c[i] += 1;
            for (j, v) in c[..i].iter_mut().enumerate() {
                *v = j;
            }
            return true;
        }
    }
    false
}

/// Generator matrices with a fixed pivot set: the skeleton plus the positions
/// of free entries.
struct PivotCell {
    base: Vec<FieldElem>,
    free: Vec<usize>,
}

impl PivotCell {
    fn new(n: usize, pivots: &[usize]) -> Self {
        let k = pivots.len();
        let mut base = vec![FieldElem::ZERO; k * n];
        let mut free = Vec::new();
        for (r, &p) in pivots.iter().enumerate() {
            base[r * n + p] = FieldElem::ONE;
            for c in p + 1..n {
                if !pivots.contains(&c) {
                    free.push(r * n + c);
                }
            }
        }
        PivotCell { base, free }
    }

    /// Calls `f` on every generator matrix of this cell.
    fn for_each(&self, order: u64, mut f: impl FnMut(&[FieldElem])) {
        let mut g = self.base.clone();
        let top = (order - 1) as u16;
        loop {
            f(&g);
            // odometer, first free position least significant
            let mut carried = true;
            for &pos in &self.free {
                if g[pos].0 < top {
                    g[pos].0 += 1;
                    carried = false;
                    break;
                }
                g[pos] = FieldElem::ZERO;
            }
            if carried {
                return;
            }
        }
    }
}

/// Streams every `k`-dimensional subspace of `F_Q^n` as its RREF generator.
#[derive(Debug)]
pub struct SubspaceIterator {
    field: Arc<FiniteField>,
    n: usize,
    k: usize,
    pivots: Option<Vec<usize>>,
    free: Vec<usize>,
    current: Vec<FieldElem>,
    fresh: bool,
}

impl SubspaceIterator {
    fn load_cell(&mut self) {
        if let Some(p) = &self.pivots {
            let cell = PivotCell::new(self.n, p);
            self.current = cell.base;
            self.free = cell.free;
            self.fresh = true;
        }
    }

    fn advance(&mut self) -> bool {
        let top = (self.field.order() - 1) as u16;
        for &pos in &self.free {
            if self.current[pos].0 < top {
                self.current[pos].0 += 1;
                return true;
            }
            self.current[pos] = FieldElem::ZERO;
        }
        false
    }
}

impl Iterator for SubspaceIterator {
    type Item = MatrixGF;

    fn next(&mut self) -> Option<MatrixGF> {
        self.pivots.as_ref()?;
        if self.fresh {
            self.fresh = false;
        } else if !self.advance() {
            if !next_colex(self.pivots.as_mut().unwrap(), self.n) {
                self.pivots = None;
                return None;
            }
            self.load_cell();
            self.fresh = false;
        }
        Some(MatrixGF::from_elems(self.field.clone(), self.k, self.n, self.current.clone()).unwrap())
    }
}

/// Iterator over the RREF generators of all `k`-dimensional subspaces of
/// `F_Q^n`, refused when the work estimate exceeds `work_limit`.
pub fn enumerate_subspaces(n: usize, k: usize, field: Arc<FiniteField>, work_limit: u128) -> Result<SubspaceIterator> {
    if k > n {
        return Err(Error::BadRange(format!("k = {k} > n = {n}")));
    }
    check_work(n, k, field.order(), work_limit)?;
    let mut it = SubspaceIterator {
        field,
        n,
        k,
        pivots: Some((0..k).collect()),
        free: Vec::new(),
        current: Vec::new(),
        fresh: false,
    };
    it.load_cell();
    Ok(it)
}

/// Map from hull dimension to the exact number of codes with that hull.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HullSpectrum {
    /// Ambient length (`2n` for symplectic).
    pub n: usize,
    pub k: usize,
    /// Order of the field the codes live over.
    pub field_order: u64,
    /// The code parameter `q`: the subfield order for Hermitian codes over
    /// `F_{q^2}`, otherwise the field order.
    pub q: u64,
    pub form: FormKind,
    #[serde(serialize_with = "serialize_counts")]
    pub counts: BTreeMap<u32, ExactInt>,
}

fn serialize_counts<S: serde::Serializer>(
    counts: &BTreeMap<u32, ExactInt>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeMap;
    let mut m = s.serialize_map(Some(counts.len()))?;
    for (l, c) in counts {
        m.serialize_entry(&l.to_string(), &c.to_string())?;
    }
    m.end()
}

impl HullSpectrum {
    pub fn total(&self) -> ExactInt {
        self.counts.values().sum()
    }

    pub fn get(&self, l: u32) -> ExactInt {
        self.counts.get(&l).cloned().unwrap_or_else(ExactInt::zero)
    }
}

/// Counts codes by hull dimension by visiting every `k`-dimensional subspace
/// of `F_Q^n`. Work is split by pivot set and the partial spectra summed.
pub fn hull_spectrum(
    field: &Arc<FiniteField>,
    n: usize,
    k: usize,
    form: FormKind,
    config: &OracleConfig,
) -> Result<HullSpectrum> {
    if k > n {
        return Err(Error::BadRange(format!("k = {k} > n = {n}")));
    }
    form.check(field, n)?;
    check_work(n, k, field.order(), config.work_limit)?;

    let order = field.order();
    let cell_counts = |pivots: &Vec<usize>| -> Vec<u64> {
        let mut scratch = GramScratch::new(field, form, k, n).expect("form checked");
        let mut counts = vec![0u64; k + 1];
        PivotCell::new(n, pivots).for_each(order, |g| {
            counts[scratch.hull_dim(field, g)] += 1;
        });
        counts
    };
    let merge = |mut a: Vec<u64>, b: Vec<u64>| {
        for (x, y) in a.iter_mut().zip(b) {
            *x += y;
        }
        a
    };
    let subsets = pivot_subsets(n, k);
    let totals = if config.parallel {
        subsets.par_iter().map(cell_counts).reduce(|| vec![0u64; k + 1], merge)
    } else {
        subsets.iter().map(cell_counts).fold(vec![0u64; k + 1], merge)
    };
    let counts = totals
        .into_iter()
        .enumerate()
        .filter(|(_, c)| *c > 0)
        .map(|(l, c)| (l as u32, ExactInt::from(c)))
        .collect();
    Ok(HullSpectrum {
        n,
        k,
        field_order: order,
        q: match form {
            FormKind::Hermitian => field.hermitian_subfield_order().unwrap(),
            _ => order,
        },
        form,
        counts,
    })
}

/// One hull dimension in a [`SpectrumCheck`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CellCheck {
    pub l: u32,
    #[serde(serialize_with = "serialize_int")]
    pub oracle: ExactInt,
    /// `None` when no closed form exists (Euclidean).
    #[serde(serialize_with = "serialize_opt_int")]
    pub formula: Option<ExactInt>,
}

fn serialize_int<S: serde::Serializer>(x: &ExactInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

fn serialize_opt_int<S: serde::Serializer>(x: &Option<ExactInt>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match x {
        Some(v) => s.serialize_str(&v.to_string()),
        None => s.serialize_none(),
    }
}

impl CellCheck {
    pub fn matches(&self) -> bool {
        self.formula.as_ref().is_none_or(|f| f == &self.oracle)
    }
}

/// Oracle spectrum set against the closed form, plus the total-count check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpectrumCheck {
    pub n: usize,
    pub k: usize,
    pub q: u64,
    pub form: FormKind,
    pub cells: Vec<CellCheck>,
    #[serde(serialize_with = "serialize_int")]
    pub oracle_total: ExactInt,
    #[serde(serialize_with = "serialize_int")]
    pub gaussian_total: ExactInt,
}

impl SpectrumCheck {
    pub fn sum_ok(&self) -> bool {
        self.oracle_total == self.gaussian_total
    }

    pub fn mismatches(&self) -> Vec<&CellCheck> {
        self.cells.iter().filter(|c| !c.matches()).collect()
    }

    pub fn passed(&self) -> bool {
        self.sum_ok() && self.mismatches().is_empty()
    }
}

/// Closed-form count, or `None` for the Euclidean form. For symplectic
/// parameters `n` is the ambient length.
pub fn closed_form_count(form: FormKind, n: u32, k: u32, l: u32, q: u64) -> Result<Option<ExactInt>> {
    Ok(match form {
        FormKind::Euclidean => None,
        FormKind::Hermitian => Some(count_hermitian(&HermitianParams::new(n, k, l, q))),
        FormKind::Symplectic => Some(count_symplectic(&SymplecticParams::from_ambient(n, k, l, q)?)),
    })
}

/// The field the oracle enumerates over for codes with parameter `q`.
pub fn oracle_field(form: FormKind, q: u64) -> Result<Arc<FiniteField>> {
    let order = match form {
        FormKind::Hermitian => q.checked_mul(q).ok_or(Error::NotPrimePower(q))?,
        _ => q,
    };
    crate::exactnum::require_prime_power(q)?;
    Ok(Arc::new(FiniteField::of_order(order)?))
}

/// Compares the oracle spectrum of `[n, k]` codes (ambient length `n`) with the
/// closed form, cell by cell, and checks the spectrum sums to `[n k]_Q`.
pub fn spectrum_vs_formula(n: u32, k: u32, q: u64, form: FormKind, config: &OracleConfig) -> Result<SpectrumCheck> {
    check_with(n, k, q, form, config, |l| closed_form_count(form, n, k, l, q))
}

/// Like [`spectrum_vs_formula`] with a caller-supplied closed form.
pub fn check_with(
    n: u32,
    k: u32,
    q: u64,
    form: FormKind,
    config: &OracleConfig,
    formula: impl Fn(u32) -> Result<Option<ExactInt>>,
) -> Result<SpectrumCheck> {
    let field = oracle_field(form, q)?;
    let spectrum = hull_spectrum(&field, n as usize, k as usize, form, config)?;
    let max_l = k.min(n.saturating_sub(k));
    let mut cells = Vec::new();
    for l in 0..=max_l {
        let oracle = spectrum.get(l);
        let formula = formula(l)?;
        let interesting = !oracle.is_zero() || formula.as_ref().is_some_and(|f| !f.is_zero());
        if interesting {
            cells.push(CellCheck { l, oracle, formula });
        }
    }
    Ok(SpectrumCheck {
        n: n as usize,
        k: k as usize,
        q,
        form,
        oracle_total: spectrum.total(),
        gaussian_total: gaussian_binomial(n as i64, k as i64, field.order()),
        cells,
    })
}

/// Writes spectra as long-form CSV with columns `n,k,q,form,l,count`.
pub fn write_spectra_csv<W: Write>(out: W, spectra: &[HullSpectrum]) -> std::io::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["n", "k", "q", "form", "l", "count"])?;
    for s in spectra {
        for (l, c) in &s.counts {
            w.write_record([
                s.n.to_string(),
                s.k.to_string(),
                s.q.to_string(),
                s.form.to_string(),
                l.to_string(),
                c.to_string(),
            ])?;
        }
    }
    w.flush()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn f(order: u64) -> Arc<FiniteField> {
        Arc::new(FiniteField::of_order(order).unwrap())
    }

    fn spectrum_pairs(order: u64, n: usize, k: usize, form: FormKind) -> Vec<(u32, u64)> {
        let s = hull_spectrum(&f(order), n, k, form, &OracleConfig::default()).unwrap();
        s.counts.iter().map(|(l, c)| (*l, c.try_into().unwrap())).collect()
    }

    #[test]
    fn enumeration_counts() {
        let count = |n, k, q| enumerate_subspaces(n, k, f(q), DEFAULT_WORK_LIMIT).unwrap().count();
        assert_eq!(count(2, 1, 2), 3);
        assert_eq!(count(4, 2, 2), 35);
        assert_eq!(count(2, 1, 4), 5);
        assert_eq!(count(3, 0, 2), 1);
        assert_eq!(count(3, 3, 3), 1);
    }

    #[test]
    fn yield_count_matches_gaussian_binomial() {
        for q in [2u64, 3, 4] {
            let field = f(q);
            for n in 0..=6usize {
                for k in 0..=n {
                    if work_estimate(n, k, q) > 5_000_000 {
                        continue;
                    }
                    let it = enumerate_subspaces(n, k, field.clone(), DEFAULT_WORK_LIMIT).unwrap();
                    let c = it.count() as u64;
                    assert_eq!(
                        ExactInt::from(c),
                        gaussian_binomial(n as i64, k as i64, q),
                        "n={n} k={k} q={q}"
                    );
                }
            }
        }
    }

    #[test]
    fn enumeration_is_duplicate_free_and_canonical() {
        for (q, n, k) in [(2u64, 5usize, 2usize), (3, 4, 2), (4, 4, 2), (2, 6, 3)] {
            let mut seen = HashSet::new();
            for g in enumerate_subspaces(n, k, f(q), DEFAULT_WORK_LIMIT).unwrap() {
                let r = g.rref();
                assert_eq!(r.rank, k);
                assert_eq!(r.matrix, g, "not in RREF");
                assert!(seen.insert(g.data().to_vec()));
            }
        }
    }

    #[test]
    fn colex_order() {
        assert_eq!(
            pivot_subsets(4, 2),
            vec![vec![0, 1], vec![0, 2], vec![1, 2], vec![0, 3], vec![1, 3], vec![2, 3]]
        );
        assert_eq!(pivot_subsets(3, 0), vec![Vec::<usize>::new()]);
        assert!(pivot_subsets(2, 3).is_empty());
    }

    #[test]
    fn work_limit_is_enforced() {
        let err = enumerate_subspaces(8, 4, f(2), 1000).unwrap_err();
        assert_eq!(
            err,
            Error::WorkLimitExceeded {
                estimated: 65536 * 70,
                limit: 1000
            }
        );
        assert!(err.to_string().contains("4587520"));
        let cfg = OracleConfig {
            work_limit: 10,
            parallel: false,
        };
        assert!(hull_spectrum(&f(2), 8, 4, FormKind::Euclidean, &cfg).is_err());
    }

    #[test]
    fn spectra_examples() {
        assert_eq!(spectrum_pairs(4, 4, 1, FormKind::Hermitian), vec![(0, 40), (1, 45)]);
        assert_eq!(spectrum_pairs(2, 4, 2, FormKind::Symplectic), vec![(0, 20), (2, 15)]);
        for (order, form) in [
            (2, FormKind::Euclidean),
            (4, FormKind::Hermitian),
            (3, FormKind::Symplectic),
        ] {
            assert_eq!(spectrum_pairs(order, 4, 4, form), vec![(0, 1)]);
        }
    }

    #[test]
    fn spectrum_keys_respect_hull_bounds() {
        for (order, n, form) in [
            (2u64, 6usize, FormKind::Symplectic),
            (3, 4, FormKind::Symplectic),
            (4, 4, FormKind::Hermitian),
            (9, 3, FormKind::Hermitian),
        ] {
            for k in 0..=n {
                for (l, _) in spectrum_pairs(order, n, k, form) {
                    assert!(l as usize <= k.min(n - k));
                    if form == FormKind::Symplectic {
                        assert_eq!((k - l as usize) % 2, 0);
                    }
                }
            }
        }
    }

    #[test]
    fn parallel_and_serial_agree() {
        let field = f(3);
        let par = hull_spectrum(&field, 5, 2, FormKind::Euclidean, &OracleConfig::default()).unwrap();
        let ser = hull_spectrum(
            &field,
            5,
            2,
            FormKind::Euclidean,
            &OracleConfig {
                parallel: false,
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(par, ser);
    }

    #[test]
    fn formula_checks() {
        let cfg = OracleConfig::default();
        let c = spectrum_vs_formula(5, 2, 2, FormKind::Hermitian, &cfg).unwrap();
        assert!(c.passed());
        let got: Vec<_> = c.cells.iter().map(|c| c.oracle.to_string()).collect();
        assert_eq!(got, ["3520", "1980", "297"]);

        let c = spectrum_vs_formula(6, 2, 3, FormKind::Symplectic, &cfg).unwrap();
        assert!(c.passed());
        assert_eq!(c.oracle_total, ExactInt::from(7371 + 3640));
        assert_eq!(c.gaussian_total, ExactInt::from(11011));

        let c = spectrum_vs_formula(4, 2, 2, FormKind::Euclidean, &cfg).unwrap();
        assert!(c.passed());
        assert!(c.cells.iter().all(|c| c.formula.is_none()));
        assert_eq!(c.oracle_total, ExactInt::from(35));

        let bad = check_with(4, 1, 2, FormKind::Hermitian, &cfg, |l| {
            Ok(Some(count_hermitian(&HermitianParams::new(4, 1, l, 2)) + 1u32))
        })
        .unwrap();
        assert!(!bad.passed());
        assert_eq!(bad.mismatches().len(), 2);
    }

    #[test]
    fn csv_dump() {
        let s = hull_spectrum(&f(4), 4, 1, FormKind::Hermitian, &OracleConfig::default()).unwrap();
        let mut buf = Vec::new();
        write_spectra_csv(&mut buf, &[s]).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "n,k,q,form,l,count\n4,1,2,hermitian,0,40\n4,1,2,hermitian,1,45\n"
        );
    }
}
