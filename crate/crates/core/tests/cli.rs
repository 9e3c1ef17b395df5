use std::process::Command;

use hullcount::cli::run;

fn call(cmd: &str) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("hullcount").chain(cmd.split_whitespace());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn field(text: &str, key: &str) -> String {
    text.lines()
        .find_map(|l| l.strip_prefix(&format!("{key}: ")))
        .unwrap_or_else(|| panic!("no {key} in {text}"))
        .to_string()
}

#[test]
fn eval_examples() {
    let (code, out, _) = call("eval --form hermitian -n 6 -k 3 -l 3 -q 2");
    assert_eq!(code, 0);
    assert_eq!(field(&out, "count"), "891");

    let (code, out, _) = call("eval --form symplectic --ambient 8 -k 4 -l 0 -q 2");
    assert_eq!(code, 0);
    assert_eq!(field(&out, "count"), "91392");
    assert_eq!(field(&out, "classification"), "symplectic-exception-ES");

    let (code, out, _) = call("eval --form symplectic --ambient 4 -k 3 -l 0 -q 2");
    assert_eq!(code, 0);
    assert_eq!(field(&out, "count"), "0");

    let (code, out, _) = call("eval --form euclidean -n 4 -k 1 -l 0 -q 3");
    assert_eq!(code, 0);
    assert_eq!(field(&out, "alpha"), "3/4");
    assert_eq!(field(&out, "count"), "24");
}

#[test]
fn eval_json() {
    let (code, out, _) = call("eval --form hermitian -n 4 -k 1 -l 0 -q 2 --format json");
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["count"], "40");
    assert_eq!(v["alpha"], "8/9");
    assert_eq!(v["classification"], "hermitian-boundary");
}

#[test]
fn bad_arguments_exit_2() {
    for args in [
        "eval --form symplectic --ambient 7 -k 2 -l 0 -q 2",
        "eval --form symplectic -n 4 -k 2 -l 0 -q 2",
        "eval --form hermitian -n 4 -k 1 -l 0 -q 6",
        "eval --form hermitian -n 4 -k 1 -l 2 -q 2",
        "eval --form hermitian -k 1 -l 0 -q 2",
        "eval --form bogus -n 4 -k 1 -l 0 -q 2",
        "census --form euclidean -n 4 -k 1 -q 2",
    ] {
        let (code, _, err) = call(args);
        assert_eq!(code, 2, "{args:?}");
        assert!(!err.is_empty());
    }
}

#[test]
fn tables_are_byte_stable() {
    for which in ["hermitian", "symplectic", "comparison"] {
        for format in ["markdown", "csv", "json"] {
            let a = call(&format!("table {which} --format {format}"));
            let b = call(&format!("table {which} --format {format}"));
            assert_eq!(a.0, 0);
            assert_eq!(a, b);
        }
    }
    let (_, md, _) = call("table hermitian");
    assert_eq!(md.lines().count(), 20);
    assert_eq!(md.matches("**").count(), 4);
    let (_, csv, _) = call("table symplectic --format csv");
    assert!(csv.starts_with("form,n,k,q,l,count,monotonicity_violation\n"));
    assert_eq!(csv.lines().filter(|l| l.ends_with(",true")).count(), 4);
    assert!(csv.contains("symplectic,12,6,2,6,4922775,false"));
}

#[test]
fn census_examples() {
    let (code, out, _) = call("census --form hermitian -n 4 -k 2 -q 2 --format csv");
    assert_eq!(code, 0);
    assert_eq!(out.lines().last().unwrap(), "2,0,27,\"[[4, 0, d; 0]]_2\",false");

    let (_, out, _) = call("census --form symplectic --ambient 12 -k 6 -q 2 --format json");
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 4);
    assert_eq!(v[3]["l"], 6);
    assert_eq!(v[3]["c"], 0);
    assert_eq!(v[3]["count"], "4922775");
}

#[test]
fn verify_sweeps_pass() {
    let (code, out, _) = call("verify --form hermitian --n-max 5 -q 2");
    assert_eq!(code, 0, "{out}");
    let (code, out, _) = call("verify --form symplectic --ambient-max 8 -q 2");
    assert_eq!(code, 0, "{out}");
    let (code, out, _) = call("verify --form euclidean --n-max 5 -q 3");
    assert_eq!(code, 0, "{out}");
    assert!(out.ends_with("PASS: 6 cells\n"));
}

#[test]
fn corrupted_formula_fails_verification() {
    let (code, out, _) = call("verify --form hermitian --n-max 3 --inject-fault");
    assert_eq!(code, 1);
    assert!(
        out.contains("FAIL: first failing cell form=hermitian n=2 k=1 q=2"),
        "{out}"
    );
}

#[test]
fn infeasible_sweep_exits_2() {
    let (code, _, err) = call("verify --form euclidean --n-max 4 --work-limit 10");
    assert_eq!(code, 2);
    assert!(err.contains("work limit"));
}

#[test]
fn verify_writes_report_file() {
    let path = std::env::temp_dir().join(format!("hullcount-verify-{}.json", std::process::id()));
    let (code, out, _) = call(&format!(
        "verify --form hermitian --n-max 3 --format json --output {}",
        path.display()
    ));
    assert_eq!(code, 0);
    assert_eq!(std::fs::read_to_string(&path).unwrap(), out);
    std::fs::remove_file(path).unwrap();
}

#[test]
fn spectrum_dump() {
    let (code, out, _) = call("spectrum --form hermitian -n 4 -k 2 -q 2");
    assert_eq!(code, 0);
    assert_eq!(
        out,
        "n,k,q,form,l,count\n4,2,2,hermitian,0,240\n4,2,2,hermitian,1,90\n4,2,2,hermitian,2,27\n"
    );
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_hullcount");
    let ok = Command::new(bin).args(["table", "comparison"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&ok.stdout).contains("| step | 1 | 1 | 2 |"));
    let bad = Command::new(bin)
        .args(["eval", "--form", "hermitian"])
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
    let fault = Command::new(bin)
        .args(["verify", "--form", "symplectic", "--ambient-max", "4", "--inject-fault"])
        .output()
        .unwrap();
    assert_eq!(fault.status.code(), Some(1));
    let limited = Command::new(bin)
        .env("HULLCOUNT_WORK_LIMIT", "5")
        .args(["verify", "--form", "symplectic", "--ambient-max", "4"])
        .output()
        .unwrap();
    assert_eq!(limited.status.code(), Some(2));
}

#[test]
fn empty_sweeps_are_rejected() {
    for cmd in [
        "verify --form hermitian --n-max 1",
        "verify --form symplectic --ambient-max 1",
        "verify --form hermitian --work-limit 0",
        "verify --form hermitian -q 6",
    ] {
        assert_eq!(call(cmd).0, 2, "{cmd}");
    }
}
