//! End-to-end tests against the compiled binary.

use std::path::PathBuf;
use std::process::{Command, Output};

fn energylab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_energylab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn tmp(name: &str) -> PathBuf {
    let mut p = std::env::temp_dir();
    p.push(format!("energylab-test-{}-{name}", std::process::id()));
    p
}

#[test]
fn construct_is_deterministic() {
    let a = energylab(&["construct", "random-regular", "100", "3", "--seed", "7"]);
    let b = energylab(&["construct", "random-regular", "100", "3", "--seed", "7"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let c = energylab(&["construct", "random-regular", "100", "3", "--seed", "8"]);
    assert_ne!(a.stdout, c.stdout);
}

#[test]
fn construct_writes_graph6_and_sidecar() {
    let out = tmp("paley13.g6");
    let res = energylab(&["construct", "paley", "13", "--out", out.to_str().unwrap()]);
    assert!(res.status.success());
    let g6 = std::fs::read_to_string(&out).unwrap();
    assert_eq!(g6.trim().len(), 1 + 13 * 12 / 2 / 6); // header + 13 edge bytes
    let sidecar: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(out.with_extension("g6.json")).unwrap())
            .unwrap();
    assert_eq!(sidecar["n"], 13);
    assert_eq!(sidecar["k"], 6);
    assert_eq!(sidecar["m"], 39);
    assert_eq!(sidecar["family"], "paley");
    std::fs::remove_file(&out).ok();
    std::fs::remove_file(out.with_extension("g6.json")).ok();
}

#[test]
fn construct_family_sidecars() {
    for (args, n, k, m) in [
        (vec!["construct", "matching", "10"], 10, 1, 5),
        (vec!["construct", "cycle", "6"], 6, 2, 6),
        (vec!["construct", "symplectic", "2", "2"], 15, 8, 60),
        (vec!["construct", "ahrens-szekeres", "2"], 16, 6, 48),
    ] {
        let res = energylab(&args);
        assert!(res.status.success(), "{args:?}");
        let sidecar: serde_json::Value = serde_json::from_slice(&res.stderr).unwrap();
        assert_eq!(sidecar["n"], n, "{args:?}");
        assert_eq!(sidecar["k"], k, "{args:?}");
        assert_eq!(sidecar["m"], m, "{args:?}");
    }
}

#[test]
fn energy_report_on_complete_graph() {
    let g6 = tmp("k4.g6");
    let res = energylab(&["construct", "complete", "4", "--out", g6.to_str().unwrap()]);
    assert!(res.status.success());
    let res = energylab(&["energy", "--input", g6.to_str().unwrap()]);
    assert!(res.status.success());
    let report: serde_json::Value = serde_json::from_slice(&res.stdout).unwrap();
    assert_eq!(report["schema"], 1);
    assert!((report["energy"].as_f64().unwrap() - 6.0).abs() < 1e-9);
    assert!((report["km_ratio"].as_f64().unwrap() - 1.0).abs() < 1e-9);
    std::fs::remove_file(&g6).ok();
}

#[test]
fn energy_report_heawood_attains_per_vertex_bound() {
    let g6 = tmp("heawood.g6");
    energylab(&["construct", "pg-incidence", "2", "--out", g6.to_str().unwrap()]);
    let res = energylab(&["energy", "--input", g6.to_str().unwrap(), "--format", "csv"]);
    assert!(res.status.success());
    let body = String::from_utf8(res.stdout).unwrap();
    let mut lines = body.lines();
    assert!(lines.next().unwrap().starts_with("schema,n,m,k,energy"));
    let row: Vec<&str> = lines.next().unwrap().split(',').collect();
    let dhk_ratio: f64 = row[9].parse().unwrap();
    assert!((dhk_ratio - 1.0).abs() < 1e-9);
    std::fs::remove_file(&g6).ok();
}

#[test]
fn energy_reads_graph6_from_stdin() {
    use std::io::Write;
    use std::process::Stdio;
    let mut child = Command::new(env!("CARGO_BIN_EXE_energylab"))
        .arg("energy")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"Bw\n").unwrap(); // K_3
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["n"], 3);
    assert!((report["energy"].as_f64().unwrap() - 4.0).abs() < 1e-9);
}

#[test]
fn exit_codes() {
    // unknown family: usage error
    assert_eq!(energylab(&["construct", "nonsense", "3"]).status.code(), Some(2));
    // malformed parameters
    assert_eq!(energylab(&["construct", "paley", "12"]).status.code(), Some(2));
    // unknown suite
    assert_eq!(energylab(&["verify", "nope"]).status.code(), Some(2));
    // all-pass suite
    assert_eq!(energylab(&["verify", "sandwich"]).status.code(), Some(0));
    // verification failure: an impossible tolerance
    assert_eq!(
        energylab(&["verify", "km-equality", "--tol", "0"]).status.code(),
        Some(1)
    );
}

#[test]
fn verify_json_shape() {
    let res = energylab(&["verify", "prop5", "--format", "json"]);
    assert!(res.status.success());
    let report: serde_json::Value = serde_json::from_slice(&res.stdout).unwrap();
    assert_eq!(report["suite"], "prop5");
    assert_eq!(report["pass"], true);
    assert!(report["checks"].as_array().unwrap().len() >= 4);
}

#[test]
fn esd_smoke_run() {
    let csv_path = tmp("esd.csv");
    let res = energylab(&[
        "esd", "--n", "12", "--k", "2", "--trials", "1", "--seed", "3", "--out",
        csv_path.to_str().unwrap(),
    ]);
    assert!(res.status.success());
    let stats: serde_json::Value = serde_json::from_slice(&res.stdout).unwrap();
    assert_eq!(stats["eigenvalues"], 12);
    assert!(stats["ks_mckay_bulk"].as_f64().unwrap() <= 1.0);
    assert!(stats["ks_semicircle_normalized"].as_f64().unwrap() <= 1.0);
    let csv = std::fs::read_to_string(&csv_path).unwrap();
    assert!(csv.starts_with("bin_lo,bin_hi,count,mckay_cdf,semicircle_cdf"));
    assert_eq!(csv.lines().count(), 65); // header + 64 bins
    std::fs::remove_file(&csv_path).ok();
}

#[test]
fn esd_parallel_matches_serial() {
    let serial = energylab(&["esd", "--n", "40", "--k", "3", "--trials", "4", "--seed", "9"]);
    let parallel = Command::new(env!("CARGO_BIN_EXE_energylab"))
        .args(["esd", "--n", "40", "--k", "3", "--trials", "4", "--seed", "9"])
        .env("ENERGYLAB_THREADS", "3")
        .output()
        .unwrap();
    assert!(serial.status.success() && parallel.status.success());
    assert_eq!(serial.stdout, parallel.stdout);
}
