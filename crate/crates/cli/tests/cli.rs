use std::process::{Command, Output};

fn tautslope(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tautslope"))
        .args(args)
        .env_remove("TAUTSLOPE_WORKERS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("valid JSON on stdout")
}

#[test]
fn petri_pencil_slope() {
    let o = tautslope(&["slope", "--family", "gp", "--r", "1", "--s", "1", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    let row = &v[0];
    assert_eq!(row["slope"], "17/2");
    assert_eq!(row["bound"], "42/5");
    assert_eq!(row["below_bound"], false);
    assert_eq!(row["g"], 4);
}

#[test]
fn genus_21_slope_beats_the_bound() {
    let o = tautslope(&["slope", "--family", "syzygy", "--i", "0", "--s", "2", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("family,r,s,extra,g,d,N,slope,bound,below_bound"));
    assert_eq!(lines.next(), Some("syzygy,6,2,0,21,24,1385670,2459/377,72/11,true"));
}

#[test]
fn genus_10_slope_is_seven() {
    let o = tautslope(&["slope", "--family", "syzygy", "--i", "0", "--s", "1", "--format", "json"]);
    assert_eq!(json(&o)[0]["slope"], "7/1");
}

#[test]
fn csv_and_json_agree() {
    let args = ["slope", "--family", "gp", "--r", "1..3", "--s", "1..3"];
    let c = tautslope(&[&args[..], &["--format", "csv"]].concat());
    let j = tautslope(&[&args[..], &["--format", "json"]].concat());
    let rows = json(&j);
    let mut rdr = csv::Reader::from_reader(c.stdout.as_slice());
    let headers = rdr.headers().unwrap().clone();
    let records: Vec<csv::StringRecord> = rdr.records().map(Result::unwrap).collect();
    assert_eq!(records.len(), 9);
    for (rec, row) in records.iter().zip(rows.as_array().unwrap()) {
        for (h, field) in headers.iter().zip(rec.iter()) {
            let expected = match &row[h] {
                serde_json::Value::String(s) => s.clone(),
                serde_json::Value::Null => String::new(),
                other => other.to_string(),
            };
            assert_eq!(field, expected, "column {h}");
        }
    }
}

#[test]
fn output_is_deterministic_across_worker_counts() {
    let run = |w: &str| {
        let o = tautslope(&["--workers", w, "slope", "--family", "gp", "--r", "1..4", "--s", "1..4", "--format", "csv"]);
        assert!(o.status.success());
        o.stdout
    };
    assert_eq!(run("1"), run("4"));
}

#[test]
fn workers_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_tautslope"))
        .args(["slope", "--family", "gp", "--r", "2", "--s", "1", "--format", "csv"])
        .env("TAUTSLOPE_WORKERS", "2")
        .output()
        .unwrap();
    assert!(o.status.success());
}

#[test]
fn output_file_and_decimal_column() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("slopes.csv");
    let o = tautslope(&[
        "slope", "--family", "syzygy", "--i", "0", "--s", "2", "--format", "csv", "--decimal", "--output",
        path.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("family,r,s,extra,g,d,N,slope,bound,below_bound,slope_approx\n"));
    assert!(text.contains(",2459/377,72/11,true,6.52255\n"));
}

#[test]
fn push_b_at_genus_10() {
    let o = tautslope(&["push", "--g", "10", "--r", "4", "--d", "12", "--class", "b"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["psi"], "-504/1");
    assert_eq!(v["delta"].as_array().unwrap().len(), 10);
}

#[test]
fn push_normalized_genus_21_combination() {
    let o = tautslope(&["push", "--g", "21", "--r", "6", "--d", "24", "--combo", "2,-1,-8,1", "--normalize", "N"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["lambda"], "2459/95");
    assert_eq!(v["delta"][0], "-377/95");
    assert_eq!(v["psi"], "0/1");
}

#[test]
fn push_rejects_nonzero_rho() {
    let o = tautslope(&["push", "--g", "3", "--r", "1", "--d", "2", "--class", "a"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("rho"));
}

#[test]
fn bad_parameters_exit_two() {
    let o = tautslope(&["slope", "--family", "hypersurface", "--r", "4", "--s", "2", "--k", "2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("balance"));
    let o = tautslope(&["slope", "--family", "syzygy", "--r", "4", "--i", "0", "--s", "1"]);
    assert_eq!(o.status.code(), Some(2));
    let o = tautslope(&["slope", "--family", "gp", "--r", "3..1", "--s", "1"]);
    assert_eq!(o.status.code(), Some(2));
    let o = tautslope(&["push", "--g", "10", "--r", "4", "--d", "12", "--combo", "1,2"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_suites_pass() {
    for args in [
        &["verify", "--suite", "castelnuovo", "--max-g", "12"][..],
        &["verify", "--suite", "reconstruct", "--triples", "10,4,12"][..],
        &["verify", "--suite", "schubert-oracle", "--r-max", "3", "--d-max", "15"][..],
        &["verify", "--suite", "weierstrass"][..],
        &["verify", "--suite", "pieri"][..],
        &["verify", "--suite", "aspects"][..],
        &["verify", "--suite", "epsilon"][..],
    ] {
        let o = tautslope(args);
        assert_eq!(o.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    }
}

#[test]
fn verify_json_reports() {
    let o = tautslope(&["verify", "--suite", "reconstruct", "--triples", "10,4,12", "--format", "json"]);
    let text = stdout(&o);
    let reports: Vec<serde_json::Value> = text.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(reports.len(), 4);
    for r in &reports {
        for key in ["check", "params", "lhs", "rhs", "pass"] {
            assert!(r.get(key).is_some(), "missing {key}");
        }
        assert_eq!(r["pass"], true);
    }
}

#[test]
fn symmetry_suite_reports_failures() {
    // δ_i = δ_(g-i) does not hold for every family; the suite says so
    let o = tautslope(&["verify", "--suite", "symmetry"]);
    assert_eq!(o.status.code(), Some(1));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("FAIL symmetry"));
    assert!(stdout(&o).contains("PASS symmetry {\"d\":24,\"g\":21,\"instance\":\"syzygy(i=0, s=2; r=6)\"}"));
}
