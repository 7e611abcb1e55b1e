use std::process::{Command, Output};

use serde_json::Value;

fn p2gle(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_p2gle")).args(args).output().unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = p2gle(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    serde_json::from_str(&stdout(args)).unwrap()
}

fn error(args: &[&str]) -> (i32, Value) {
    let out = p2gle(args);
    let body = serde_json::from_slice(&out.stderr).unwrap();
    (out.status.code().unwrap(), body)
}

#[test]
fn encode_and_decode() {
    assert_eq!(stdout(&["encode", "--x", "5/8", "--digits", "4"]), "1,3,1,1\n39/64,5/8\n");
    assert_eq!(stdout(&["encode", "--x", "0.625", "--digits", "4"]), "1,3,1,1\n39/64,5/8\n");
    assert_eq!(stdout(&["encode", "--x", "1", "--digits", "3"]), "1,1,1\n7/8,1/1\n");
    assert_eq!(stdout(&["decode", "--digits", "2,3"]), "9/32,5/16\n");
    assert_eq!(stdout(&["decode", "--digits", "2,3", "--tail", "all-ones"]), "5/16\n");
    let v = json(&["encode", "--x", "3/5", "--digits", "6", "--format", "json"]);
    assert_eq!(v["digits"], serde_json::json!([1, 3, 1, 3, 1, 3]));
}

#[test]
fn solve_points() {
    let v = json(&["solve", "--potential", "khintchine", "--xi", "2"]);
    assert_eq!(v["t"].as_f64(), Some(1.0));
    assert_eq!(v["method"], "closed_form");

    let v = json(&["solve", "--potential", "khintchine", "--xi", "2", "--newton"]);
    assert_eq!(v["method"], "newton");
    assert!((v["t"].as_f64().unwrap() - 1.0).abs() < 1e-12);

    let v = json(&["solve", "--potential", "logdigit", "--xi", "xi0"]);
    assert!((v["t"].as_f64().unwrap() - 1.0).abs() < 1e-12);
    assert!(v["q"].as_f64().unwrap().abs() < 1e-12);

    let v = json(&["solve", "--potential", "expdigit", "--xi", "inf"]);
    assert_eq!(v["method"], "boundary");
    assert_eq!(v["t"].as_f64(), Some(1.0));
    assert!(v["xi"].is_null());

    let csv = stdout(&["solve", "--potential", "expdigit", "--xi", "3", "--format", "csv"]);
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("xi,t,q,t_prime,residual_P,residual_dPdq,iterations,method"));
    let row: Vec<&str> = lines.next().unwrap().split(',').collect();
    assert!((row[1].parse::<f64>().unwrap() - 0.84958).abs() < 1e-5);
    assert_eq!(row[7], "newton");
}

#[test]
fn khintchine_spectrum_csv_round_trips() {
    let csv = stdout(&["spectrum", "--potential", "khintchine", "--xi-min", "1.1", "--xi-max", "50", "--steps", "200"]);
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("xi,t,q,t_prime"));
    let rows: Vec<Vec<f64>> = lines.map(|l| l.split(',').map(|x| x.parse().unwrap()).collect()).collect();
    assert_eq!(rows.len(), 200);
    for r in &rows {
        let xi = r[0];
        // t(ξ) = ξ log₂ ξ − (ξ − 1) log₂(ξ − 1), all over ξ
        let t = (xi * xi.log2() - (xi - 1.0) * (xi - 1.0).log2()) / xi;
        assert!((r[1] - t).abs() < 1e-9, "xi = {xi}");
    }
    let best = rows.iter().max_by(|a, b| a[1].total_cmp(&b[1])).unwrap();
    assert!((best[0] - 2.0).abs() < 0.25);
}

#[test]
fn lyapunov_spectrum_peaks_near_two_log_two() {
    let v = json(&["spectrum", "--potential", "lyapunov", "--xi-min", "0.75", "--xi-max", "10", "--steps", "400", "--format", "json"]);
    let rows = v["rows"].as_array().unwrap();
    let best = rows.iter().max_by(|a, b| a["t"].as_f64().unwrap().total_cmp(&b["t"].as_f64().unwrap())).unwrap();
    assert!((best["xi"].as_f64().unwrap() - 2.0 * std::f64::consts::LN_2).abs() < 0.03);
}

#[test]
fn inflection_summary() {
    let v = json(&["inflection"]);
    assert_eq!(v["summary"], "1 sign change");
    assert_eq!(v["sign_changes"], 1);
    assert!((v["xi_tilde"].as_f64().unwrap() - 3.0934952365697).abs() < 1e-9);
}

#[test]
fn sampling_is_deterministic() {
    let args = ["sample", "--potential", "khintchine", "--xi", "3", "--n-points", "50", "--depth", "500", "--seed", "7"];
    let a = p2gle(&args);
    let b = p2gle(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["seed"], 7);
    assert!((v["birkhoff_mean"].as_f64().unwrap() - 3.0).abs() < 0.2);

    let mut other = args.to_vec();
    *other.last_mut().unwrap() = "8";
    assert_ne!(p2gle(&other).stdout, a.stdout);
}

#[test]
fn out_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("spec.csv");
    let p = path.to_str().unwrap();
    let out = stdout(&["spectrum", "--potential", "logdigit", "--xi-min", "0.2", "--xi-max", "3", "--steps", "5", "--out", p]);
    assert!(out.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text.lines().count(), 6);
}

#[test]
fn error_exit_codes() {
    let (code, e) = error(&["encode", "--x", "3/2", "--digits", "4"]);
    assert_eq!(code, 1);
    assert_eq!(e["error"], "domain");

    let (code, e) = error(&["encode", "--x", "abc", "--digits", "4"]);
    assert_eq!(code, 1);
    assert_eq!(e["error"], "parse");

    let (code, e) = error(&["solve", "--potential", "khintchine", "--xi", "0.5"]);
    assert_eq!(code, 1);
    assert_eq!(e["error"], "domain");

    let (code, e) = error(&["solve", "--potential", "nosuch", "--xi", "2"]);
    assert_eq!(code, 1);
    assert_eq!(e["error"], "usage");

    let (code, e) = error(&["solve", "--potential", "logdigit", "--xi", "inf"]);
    assert_eq!(code, 1);
    assert_eq!(e["error"], "domain");

    let (code, e) = error(&["solve", "--potential", "expdigit", "--xi", "40", "--newton", "--max-iter", "1"]);
    assert_eq!(code, 2);
    assert_eq!(e["error"], "non_convergence");
}

#[test]
fn help_exits_cleanly() {
    assert!(p2gle(&["--help"]).status.success());
}

#[test]
fn sample_reports_match_solved_parameters() {
    let v = json(&["sample", "--potential", "khintchine", "--xi", "3", "--n-points", "200", "--depth", "2000"]);
    assert!((v["local_dimension_mean"].as_f64().unwrap() - 0.918).abs() < 0.01);

    let v = json(&["sample", "--potential", "logdigit", "--xi", "xi0", "--n-points", "200", "--depth", "2000"]);
    assert!((v["birkhoff_mean"].as_f64().unwrap() - 0.5078).abs() < 0.01);
    assert!((v["t"].as_f64().unwrap() - 1.0).abs() < 1e-8);
}
