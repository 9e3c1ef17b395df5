//! Command-line front end. [`run`] parses arguments, writes to the supplied
//! streams and returns the process exit code: 0 on success, 1 when a
//! verification finds a mismatch, 2 for invalid or infeasible requests.

use std::fmt::Write as _;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::{One, Zero};
use serde::Serialize;

use crate::algebra::FormKind;
use crate::eaqecc::entanglement_census;
use crate::error::{Error, Result};
use crate::exactnum::{format_rat, require_prime_power, ExactInt, ExactRat};
use crate::oracle::{
    check_work, closed_form_count, hull_spectrum, oracle_field, write_spectra_csv, OracleConfig, SpectrumCheck,
};
use crate::ratios::{euclidean_half_bound_regime, in_symplectic_exception, is_hermitian_boundary, ratio_report};
use crate::tables::{hermitian_table, render_comparison, render_count_table, symplectic_table, Format};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "hullcount", version, about = "Exact hull-dimension counts of linear codes")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Count, ratio factor and classification at one parameter point.
    Eval(EvalArgs),
    /// Reproduce a count table or the form comparison.
    Table(TableArgs),
    /// Check closed forms against exhaustive enumeration over a small grid.
    Verify(SweepConfig),
    /// Entanglement-assisted code parameters per hull dimension.
    Census(CensusArgs),
    /// Dump exhaustive hull spectra as CSV.
    Spectrum(SpectrumArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FormArg {
    Euclidean,
    Hermitian,
    Symplectic,
}

impl From<FormArg> for FormKind {
    fn from(f: FormArg) -> Self {
        match f {
            FormArg::Euclidean => FormKind::Euclidean,
            FormArg::Hermitian => FormKind::Hermitian,
            FormArg::Symplectic => FormKind::Symplectic,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Markdown,
    Csv,
    Json,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Markdown => Format::Markdown,
            FormatArg::Csv => Format::Csv,
            FormatArg::Json => Format::Json,
        }
    }
}

/// Code length: `-n` for Euclidean/Hermitian, `--ambient` (= 2n) for symplectic.
#[derive(Args, Debug, Clone, Copy)]
pub struct Length {
    #[arg(short = 'n', long = "length")]
    pub n: Option<u32>,
    #[arg(long)]
    pub ambient: Option<u32>,
}

impl Length {
    fn resolve(&self, form: FormKind) -> Result<u32> {
        match (form, self.n, self.ambient) {
            (FormKind::Symplectic, _, Some(a)) => {
                if a % 2 == 1 {
                    Err(Error::OddAmbientForSymplectic(a as usize))
                } else {
                    Ok(a)
                }
            }
            (FormKind::Symplectic, Some(_), None) => Err(Error::BadRange(
                "symplectic codes take --ambient (the length 2n), not -n".into(),
            )),
            (_, Some(n), None) => Ok(n),
            (_, None, None) => Err(Error::BadRange("missing code length".into())),
            (_, _, Some(_)) => Err(Error::BadRange("--ambient is only for the symplectic form".into())),
        }
    }
}

#[derive(Args, Debug)]
pub struct EvalArgs {
    #[arg(long, value_enum)]
    pub form: FormArg,
    #[command(flatten)]
    pub length: Length,
    #[arg(short)]
    pub k: u32,
    #[arg(short)]
    pub l: u32,
    #[arg(short)]
    pub q: u64,
    #[arg(long, value_enum, default_value = "markdown")]
    pub format: FormatArg,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TableKind {
    Hermitian,
    Symplectic,
    Comparison,
}

#[derive(Args, Debug)]
pub struct TableArgs {
    #[arg(value_enum)]
    pub which: TableKind,
    #[arg(long, value_enum, default_value = "markdown")]
    pub format: FormatArg,
    /// Field sizes for the numeric rows of the comparison table.
    #[arg(short, long, value_delimiter = ',', default_value = "2,3")]
    pub q: Vec<u64>,
}

#[derive(Args, Debug, Clone)]
pub struct SweepConfig {
    #[arg(
        long,
        value_enum,
        value_delimiter = ',',
        default_value = "hermitian,symplectic,euclidean"
    )]
    pub form: Vec<FormArg>,
    /// Largest length for Euclidean and Hermitian codes.
    #[arg(long, default_value_t = 5)]
    pub n_max: u32,
    /// Largest ambient length 2n for symplectic codes.
    #[arg(long, default_value_t = 8)]
    pub ambient_max: u32,
    #[arg(short, long, value_delimiter = ',', default_value = "2")]
    pub q: Vec<u64>,
    /// Enumeration budget per cell; defaults to HULLCOUNT_WORK_LIMIT or 1e8.
    #[arg(long)]
    pub work_limit: Option<u128>,
    #[arg(long, value_enum, default_value = "markdown")]
    pub format: FormatArg,
    /// Also write the report to this file.
    #[arg(long)]
    pub output: Option<std::path::PathBuf>,
    /// Adds one to every closed-form count before comparing.
    #[arg(long, hide = true)]
    pub inject_fault: bool,
}

#[derive(Args, Debug)]
pub struct CensusArgs {
    #[arg(long, value_enum)]
    pub form: FormArg,
    #[command(flatten)]
    pub length: Length,
    #[arg(short)]
    pub k: u32,
    #[arg(short)]
    pub q: u64,
    #[arg(long, value_enum, default_value = "markdown")]
    pub format: FormatArg,
}

#[derive(Args, Debug)]
pub struct SpectrumArgs {
    #[arg(long, value_enum)]
    pub form: FormArg,
    #[command(flatten)]
    pub length: Length,
    #[arg(short)]
    pub k: u32,
    #[arg(short)]
    pub q: u64,
    #[arg(long)]
    pub work_limit: Option<u128>,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = err.write_all(text.as_bytes());
            } else {
                let _ = out.write_all(text.as_bytes());
            }
            return code;
        }
    };
    let result = match cli.command {
        Command::Eval(a) => eval(&a).map(|s| (s, EXIT_OK)),
        Command::Table(a) => table(&a).map(|s| (s, EXIT_OK)),
        Command::Verify(a) => verify(&a),
        Command::Census(a) => census(&a).map(|s| (s, EXIT_OK)),
        Command::Spectrum(a) => spectrum(&a).map(|s| (s, EXIT_OK)),
    };
    match result {
        Ok((text, code)) => {
            let _ = out.write_all(text.as_bytes());
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn config_with(limit: Option<u128>) -> OracleConfig {
    let mut cfg = OracleConfig::from_env();
    if let Some(l) = limit {
        cfg.work_limit = l;
    }
    cfg
}

#[derive(Serialize)]
struct EvalRecord {
    form: String,
    n: u32,
    k: u32,
    l: u32,
    q: u64,
    count: Option<String>,
    alpha: Option<String>,
    cofactor: Option<String>,
    full_ratio: Option<String>,
    classification: Option<String>,
    note: Option<String>,
}

fn validate_point(form: FormKind, n: u32, k: u32, l: u32, q: u64) -> Result<()> {
    require_prime_power(q)?;
    if k > n {
        return Err(Error::BadRange(format!("k = {k} exceeds length {n}")));
    }
    if l > k.min(n - k) {
        return Err(Error::BadRange(format!(
            "l = {l} exceeds min(k, n-k) = {}",
            k.min(n - k)
        )));
    }
    if form == FormKind::Symplectic && n % 2 == 1 {
        return Err(Error::OddAmbientForSymplectic(n as usize));
    }
    Ok(())
}

fn eval(a: &EvalArgs) -> Result<String> {
    let form: FormKind = a.form.into();
    let n = a.length.resolve(form)?;
    let (k, l, q) = (a.k, a.l, a.q);
    validate_point(form, n, k, l, q)?;

    let mut note = None;
    let count = match closed_form_count(form, n, k, l, q)? {
        Some(c) => Some(c.to_string()),
        None => {
            let field = oracle_field(form, q)?;
            let cfg = OracleConfig::from_env();
            match hull_spectrum(&field, n as usize, k as usize, form, &cfg) {
                Ok(s) => Some(s.get(l).to_string()),
                Err(e @ Error::WorkLimitExceeded { .. }) => {
                    note = Some(format!("count unavailable: {e}"));
                    None
                }
                Err(e) => return Err(e),
            }
        }
    };
    let mut rec = EvalRecord {
        form: form.name().to_string(),
        n,
        k,
        l,
        q,
        count,
        alpha: None,
        cofactor: None,
        full_ratio: None,
        classification: None,
        note,
    };
    match ratio_report(form, n, k, l, q) {
        Ok(r) => {
            rec.alpha = Some(format_rat(&r.alpha));
            rec.cofactor = Some(r.cofactor.to_string());
            rec.full_ratio = Some(format_rat(&r.full_ratio));
            rec.classification = Some(r.classification.to_string());
        }
        Err(e) => {
            let msg = e.to_string();
            rec.note = Some(match rec.note.take() {
                Some(prev) => format!("{prev}; {msg}"),
                None => msg,
            });
        }
    }
    Ok(match Format::from(a.format) {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&rec).unwrap();
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.serialize(&rec).expect("in-memory CSV");
            String::from_utf8(w.into_inner().unwrap()).unwrap()
        }
        Format::Markdown => {
            let len_key = if form == FormKind::Symplectic { "ambient" } else { "n" };
            let dash = |o: &Option<String>| o.clone().unwrap_or_else(|| "-".into());
            let mut s = String::new();
            writeln!(s, "form: {}", rec.form).unwrap();
            writeln!(s, "{len_key}: {n}\nk: {k}\nl: {l}\nq: {q}").unwrap();
            writeln!(s, "count: {}", dash(&rec.count)).unwrap();
            writeln!(s, "alpha: {}", dash(&rec.alpha)).unwrap();
            writeln!(s, "cofactor: {}", dash(&rec.cofactor)).unwrap();
            writeln!(s, "full_ratio: {}", dash(&rec.full_ratio)).unwrap();
            writeln!(s, "classification: {}", dash(&rec.classification)).unwrap();
            if let Some(nt) = &rec.note {
                writeln!(s, "note: {nt}").unwrap();
            }
            s
        }
    })
}

fn table(a: &TableArgs) -> Result<String> {
    let format = a.format.into();
    match a.which {
        TableKind::Hermitian => Ok(render_count_table(&hermitian_table(), format)),
        TableKind::Symplectic => Ok(render_count_table(&symplectic_table(), format)),
        TableKind::Comparison => {
            for &q in &a.q {
                require_prime_power(q)?;
            }
            render_comparison(&a.q, format)
        }
    }
}

/// One `(form, n, k, q)` cell of a verification sweep.
#[derive(Clone, Debug, Serialize)]
pub struct VerifyCell {
    pub form: String,
    pub n: u32,
    pub k: u32,
    pub q: u64,
    pub passed: bool,
    pub detail: String,
}

impl SweepConfig {
    /// Rejects empty ranges and a zero work limit.
    pub fn validate(&self) -> Result<()> {
        if self.form.is_empty() || self.q.is_empty() {
            return Err(Error::BadRange("sweep needs at least one form and one q".into()));
        }
        if self.work_limit == Some(0) {
            return Err(Error::BadRange("work limit must be positive".into()));
        }
        for &q in &self.q {
            require_prime_power(q)?;
        }
        let needs_n = self.form.iter().any(|f| *f != FormArg::Symplectic);
        let needs_ambient = self.form.contains(&FormArg::Symplectic);
        if (needs_n && self.n_max < 2) || (needs_ambient && self.ambient_max < 2) {
            return Err(Error::BadRange("length range is empty".into()));
        }
        Ok(())
    }
}

/// Lengths, dimensions and fields visited by `verify`.
pub fn sweep_cells(args: &SweepConfig) -> Vec<(FormKind, u32, u32, u64)> {
    let mut cells = Vec::new();
    for &f in &args.form {
        let form: FormKind = f.into();
        for &q in &args.q {
            match form {
                FormKind::Symplectic => {
                    for amb in (2..=args.ambient_max).step_by(2) {
                        for k in 0..=amb {
                            cells.push((form, amb, k, q));
                        }
                    }
                }
                FormKind::Hermitian => {
                    for n in 2..=args.n_max {
                        for k in 1..n {
                            cells.push((form, n, k, q));
                        }
                    }
                }
                FormKind::Euclidean => {
                    for n in 2..=args.n_max {
                        for k in 1..=n / 2 {
                            cells.push((form, n, k, q));
                        }
                    }
                }
            }
        }
    }
    cells
}

fn check_ratios(check: &SpectrumCheck) -> std::result::Result<(), String> {
    let (form, n, k, q) = (check.form, check.n as u32, check.k as u32, check.q);
    let oracle = |l: u32| {
        check
            .cells
            .iter()
            .find(|c| c.l == l)
            .map_or_else(ExactInt::zero, |c| c.oracle.clone())
    };
    let step = form.step();
    let max_l = k.min(n - k);
    let mut l = if form == FormKind::Symplectic { k % 2 } else { 0 };
    while l + step <= max_l {
        let here = oracle(l);
        let next = oracle(l + step);
        match ratio_report(form, n, k, l, q) {
            Ok(r) => {
                if ExactRat::from_integer(here.clone()) != ExactRat::from_integer(next.clone()) * &r.full_ratio {
                    return Err(format!("ratio identity fails at l={l}: A_l={here}, A_l+{step}={next}"));
                }
                let above = r.alpha > ExactRat::one();
                let (exceptional, expect_monotone) = match form {
                    FormKind::Hermitian => {
                        let boundary = is_hermitian_boundary(n, k, l);
                        (boundary, !(boundary && q == 2))
                    }
                    FormKind::Symplectic => {
                        let es = in_symplectic_exception(n, k, l, q);
                        (es, !es)
                    }
                    FormKind::Euclidean => (euclidean_half_bound_regime(n, k, l, q), here > next),
                };
                if form != FormKind::Symplectic && above == exceptional {
                    return Err(format!(
                        "l={l}: alpha={} disagrees with the exception predicate",
                        format_rat(&r.alpha)
                    ));
                }
                if (here > next) != expect_monotone {
                    return Err(format!(
                        "monotonicity classification fails at l={l}: A_l={here}, A_l+{step}={next}"
                    ));
                }
            }
            Err(Error::OutOfValidRange(_)) if form == FormKind::Euclidean => {
                if !next.is_zero() {
                    return Err(format!("l={l}: alpha undefined but A_l+1={next} is nonzero"));
                }
            }
            Err(_) => {}
        }
        l += step;
    }
    Ok(())
}

fn verify_cell(form: FormKind, n: u32, k: u32, q: u64, cfg: &OracleConfig, inject_fault: bool) -> Result<VerifyCell> {
    let check = crate::oracle::check_with(n, k, q, form, cfg, |l| {
        let c = closed_form_count(form, n, k, l, q)?;
        Ok(if inject_fault { c.map(|v| v + 1u32) } else { c })
    })?;
    let mut detail = String::new();
    if !check.sum_ok() {
        detail = format!(
            "spectrum sums to {}, expected {}",
            check.oracle_total, check.gaussian_total
        );
    } else if let Some(m) = check.mismatches().first() {
        detail = format!(
            "l={}: oracle {} vs closed form {}",
            m.l,
            m.oracle,
            m.formula.as_ref().map_or_else(|| "-".into(), |f| f.to_string())
        );
    } else if let Err(e) = check_ratios(&check) {
        detail = e;
    }
    Ok(VerifyCell {
        form: form.name().to_string(),
        n,
        k,
        q,
        passed: detail.is_empty(),
        detail: if detail.is_empty() { "ok".into() } else { detail },
    })
}

fn verify(a: &SweepConfig) -> Result<(String, i32)> {
    a.validate()?;
    let cfg = config_with(a.work_limit);
    let cells = sweep_cells(a);
    for &(form, n, k, q) in &cells {
        let field = oracle_field(form, q)?;
        form.check(&field, n as usize)?;
        check_work(n as usize, k as usize, field.order(), cfg.work_limit)?;
    }
    let mut results = Vec::with_capacity(cells.len());
    for &(form, n, k, q) in &cells {
        results.push(verify_cell(form, n, k, q, &cfg, a.inject_fault)?);
    }
    let failed = results.iter().find(|c| !c.passed);
    let mut s = match Format::from(a.format) {
        Format::Json => serde_json::to_string_pretty(&results).unwrap() + "\n",
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            for r in &results {
                w.serialize(r).expect("in-memory CSV");
            }
            String::from_utf8(w.into_inner().unwrap()).unwrap()
        }
        Format::Markdown => {
            let mut s = String::from("| form | n | k | q | result |\n|---|---:|---:|---:|---|\n");
            for r in &results {
                writeln!(s, "| {} | {} | {} | {} | {} |", r.form, r.n, r.k, r.q, r.detail).unwrap();
            }
            s
        }
    };
    if let Some(path) = &a.output {
        std::fs::write(path, &s).map_err(|e| Error::BadRange(format!("cannot write {}: {e}", path.display())))?;
    }
    let code = match failed {
        Some(c) => {
            if a.format == FormatArg::Markdown {
                writeln!(
                    s,
                    "FAIL: first failing cell form={} n={} k={} q={}: {}",
                    c.form, c.n, c.k, c.q, c.detail
                )
                .unwrap();
            }
            EXIT_MISMATCH
        }
        None => {
            if a.format == FormatArg::Markdown {
                writeln!(s, "PASS: {} cells", results.len()).unwrap();
            }
            EXIT_OK
        }
    };
    Ok((s, code))
}

fn census(a: &CensusArgs) -> Result<String> {
    let form: FormKind = a.form.into();
    let n = a.length.resolve(form)?;
    let rows = entanglement_census(form, n, a.k, a.q)?;
    #[derive(Serialize)]
    struct Rec {
        l: u32,
        c: u32,
        count: String,
        code: String,
        exception: bool,
    }
    let recs: Vec<Rec> = rows
        .iter()
        .map(|r| Rec {
            l: r.l,
            c: r.c,
            count: r.count.to_string(),
            code: r.code.to_string(),
            exception: r.exception,
        })
        .collect();
    Ok(match Format::from(a.format) {
        Format::Json => serde_json::to_string_pretty(&recs).unwrap() + "\n",
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            for r in &recs {
                w.serialize(r).expect("in-memory CSV");
            }
            String::from_utf8(w.into_inner().unwrap()).unwrap()
        }
        Format::Markdown => {
            let mut s = String::from("| l | c | count | code | exception |\n|---:|---:|---:|---|---|\n");
            for r in &recs {
                writeln!(s, "| {} | {} | {} | {} | {} |", r.l, r.c, r.count, r.code, r.exception).unwrap();
            }
            s
        }
    })
}

fn spectrum(a: &SpectrumArgs) -> Result<String> {
    let form: FormKind = a.form.into();
    let n = a.length.resolve(form)?;
    let field = oracle_field(form, a.q)?;
    let s = hull_spectrum(&field, n as usize, a.k as usize, form, &config_with(a.work_limit))?;
    let mut buf = Vec::new();
    write_spectra_csv(&mut buf, &[s]).expect("in-memory CSV");
    Ok(String::from_utf8(buf).unwrap())
}
