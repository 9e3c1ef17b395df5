//! Reproduction of the hull-count tables and rendering as Markdown, CSV or
//! JSON. Output is plain decimal and byte-stable.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;

use crate::algebra::FormKind;
use crate::error::Result;
use crate::exactnum::{format_rat, ExactInt};
use crate::formulas::{hermitian_spectrum, symplectic_spectrum};
use crate::ratios::comparison_table;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Markdown,
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "markdown" | "md" => Ok(Format::Markdown),
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(format!("unknown format {other:?}")),
        }
    }
}

/// `(n, k, q)` rows of the Hermitian table; codes over `F_{q^2}`.
pub const HERMITIAN_ROWS: [(u32, u32, u64); 18] = [
    (4, 1, 2),
    (5, 1, 2),
    (6, 1, 2),
    (7, 1, 2),
    (4, 2, 2),
    (5, 2, 2),
    (6, 2, 2),
    (6, 3, 2),
    (7, 2, 2),
    (7, 3, 2),
    (8, 2, 2),
    (4, 1, 3),
    (5, 1, 3),
    (6, 1, 3),
    (4, 2, 3),
    (5, 2, 3),
    (6, 2, 3),
    (6, 3, 3),
];

/// `(2n, k, q)` rows of the symplectic table.
pub const SYMPLECTIC_ROWS: [(u32, u32, u64); 12] = [
    (4, 2, 2),
    (6, 2, 2),
    (8, 2, 2),
    (8, 4, 2),
    (10, 2, 2),
    (10, 4, 2),
    (12, 4, 2),
    (12, 6, 2),
    (4, 2, 3),
    (6, 2, 3),
    (8, 2, 3),
    (8, 4, 3),
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableCell {
    pub l: u32,
    #[serde(serialize_with = "as_string")]
    pub count: ExactInt,
    /// The count exceeds the one at the previous hull dimension.
    pub monotonicity_violation: bool,
}

fn as_string<S: serde::Serializer>(x: &ExactInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub form: FormKind,
    /// Code length (ambient `2n` for symplectic).
    pub n: u32,
    pub k: u32,
    pub q: u64,
    pub cells: Vec<TableCell>,
}

fn flag_cells(spectrum: Vec<(u32, ExactInt)>) -> Vec<TableCell> {
    let mut cells: Vec<TableCell> = Vec::with_capacity(spectrum.len());
    for (l, count) in spectrum {
        let monotonicity_violation = cells.last().is_some_and(|prev| count > prev.count);
        cells.push(TableCell {
            l,
            count,
            monotonicity_violation,
        });
    }
    cells
}

pub fn hermitian_table() -> Vec<TableRow> {
    HERMITIAN_ROWS
        .iter()
        .map(|&(n, k, q)| TableRow {
            form: FormKind::Hermitian,
            n,
            k,
            q,
            cells: flag_cells(hermitian_spectrum(n, k, q)),
        })
        .collect()
}

pub fn symplectic_table() -> Vec<TableRow> {
    SYMPLECTIC_ROWS
        .iter()
        .map(|&(amb, k, q)| TableRow {
            form: FormKind::Symplectic,
            n: amb,
            k,
            q,
            cells: flag_cells(symplectic_spectrum(amb, k, q).expect("even ambient")),
        })
        .collect()
}

/// Long-form record: one per table cell.
#[derive(Serialize)]
struct CellRecord<'a> {
    form: &'a str,
    n: u32,
    k: u32,
    q: u64,
    l: u32,
    count: String,
    monotonicity_violation: bool,
}

fn records(rows: &[TableRow]) -> Vec<CellRecord<'_>> {
    rows.iter()
        .flat_map(|r| {
            r.cells.iter().map(move |c| CellRecord {
                form: r.form.name(),
                n: r.n,
                k: r.k,
                q: r.q,
                l: c.l,
                count: c.count.to_string(),
                monotonicity_violation: c.monotonicity_violation,
            })
        })
        .collect()
}

/// Renders a count table: wide Markdown (one row per `(n, k, q)`, bold marks
/// a violation), long-form CSV or JSON.
pub fn render_count_table(rows: &[TableRow], format: Format) -> String {
    match format {
        Format::Markdown => {
            let form = rows.first().map_or(FormKind::Hermitian, |r| r.form);
            let ls: Vec<u32> = match form {
                FormKind::Symplectic => vec![0, 2, 4, 6],
                _ => vec![0, 1, 2, 3],
            };
            let len_col = if form == FormKind::Symplectic { "2n" } else { "n" };
            let mut s = String::new();
            write!(s, "| {len_col} | k | q |").unwrap();
            for l in &ls {
                write!(s, " A_{l} |").unwrap();
            }
            s.push('\n');
            s.push_str("|---:|---:|---:|");
            for _ in &ls {
                s.push_str("---:|");
            }
            s.push('\n');
            for r in rows {
                write!(s, "| {} | {} | {} |", r.n, r.k, r.q).unwrap();
                for l in &ls {
                    match r.cells.iter().find(|c| c.l == *l) {
                        Some(c) if c.monotonicity_violation => write!(s, " **{}** |", c.count).unwrap(),
                        Some(c) => write!(s, " {} |", c.count).unwrap(),
                        None => s.push_str("  |"),
                    }
                }
                s.push('\n');
            }
            s
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            for rec in records(rows) {
                w.serialize(rec).expect("in-memory CSV");
            }
            String::from_utf8(w.into_inner().expect("in-memory CSV")).unwrap()
        }
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&records(rows)).unwrap();
            s.push('\n');
            s
        }
    }
}

#[derive(Serialize)]
struct ComparisonRecord {
    attribute: String,
    euclidean: String,
    hermitian: String,
    symplectic: String,
}

fn comparison_records(qs: &[u64]) -> Result<Vec<ComparisonRecord>> {
    let rows = comparison_table(qs)?;
    let mut out = Vec::new();
    let mut push = |attribute: String, f: &dyn Fn(usize) -> String| {
        out.push(ComparisonRecord {
            attribute,
            euclidean: f(0),
            hermitian: f(1),
            symplectic: f(2),
        });
    };
    push("step".into(), &|i| rows[i].step.to_string());
    push("alpha closed form".into(), &|i| rows[i].alpha_closed_form.to_string());
    push("alpha lower bound".into(), &|i| rows[i].alpha_lower_bound.to_string());
    push("alpha asymptotic".into(), &|i| rows[i].alpha_asymptotic.to_string());
    push("asymptotic A_0/A_step".into(), &|i| {
        rows[i].asymptotic_ratio.to_string()
    });
    for (j, q) in qs.iter().enumerate() {
        push(format!("asymptotic A_0/A_step at q={q}"), &|i| {
            format_rat(&rows[i].values[j].asymptotic_ratio)
        });
    }
    for (j, q) in qs.iter().enumerate() {
        push(format!("alpha lower bound at q={q}"), &|i| {
            rows[i].values[j]
                .alpha_lower_bound
                .as_ref()
                .map_or_else(|| "none".to_string(), format_rat)
        });
    }
    push("exceptions".into(), &|i| rows[i].exceptions.to_string());
    Ok(out)
}

pub fn render_comparison(qs: &[u64], format: Format) -> Result<String> {
    let recs = comparison_records(qs)?;
    Ok(match format {
        Format::Markdown => {
            let mut s = String::from("| | euclidean | hermitian | symplectic |\n|---|---|---|---|\n");
            for r in &recs {
                writeln!(
                    s,
                    "| {} | {} | {} | {} |",
                    r.attribute, r.euclidean, r.hermitian, r.symplectic
                )
                .unwrap();
            }
            s
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            for r in &recs {
                w.serialize(r).expect("in-memory CSV");
            }
            String::from_utf8(w.into_inner().expect("in-memory CSV")).unwrap()
        }
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&recs).unwrap();
            s.push('\n');
            s
        }
    })
}
