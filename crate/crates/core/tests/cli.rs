//! Catalog files, report determinism and the binary's exit-code contract.

use std::process::Command;

use symflat::asymquad::{QuadratureConfig, Regime};
use symflat::cli::{
    emit_asymptotic_report, emit_q_report, load_catalog, run_asym, run_flatness, Catalog, Format, EXIT_AGREEMENT,
    EXIT_DISAGREEMENT, EXIT_INPUT_ERROR,
};

fn scratch_file(tag: &str, text: &str) -> std::path::PathBuf {
    let path = std::env::temp_dir().join(format!("symflat-{}-{tag}.txt", std::process::id()));
    std::fs::write(&path, text).unwrap();
    path
}

fn symflat(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_symflat")).args(args).output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn catalog_round_trips_through_a_file() {
    let cat = Catalog::default_catalog();
    let path = scratch_file("roundtrip", &cat.to_text());
    let back = load_catalog(&path).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert_eq!(back, cat);
}

#[test]
fn verdict_matches_classification_on_whole_catalog() {
    let cat = Catalog::default_catalog();
    for space in cat.entries() {
        let report = run_flatness(&cat, &space.name, 5, 1e-6).unwrap();
        assert!(report.agrees(), "{}: spread {}", space.name, report.max_rel_deviation);
    }
}

#[test]
fn reports_are_byte_identical_across_runs() {
    let cat = Catalog::default_catalog();
    let q = |f| emit_q_report(&run_flatness(&cat, "Gr2(C5)", 3, 1e-6).unwrap(), f);
    assert_eq!(q(Format::Json), q(Format::Json));
    assert_eq!(q(Format::Csv), q(Format::Csv));
    let cfg = QuadratureConfig::default();
    let a = |f| emit_asymptotic_report(&run_asym(&cat, "S3", Regime::Zero, 1, &cfg).unwrap(), f);
    assert_eq!(a(Format::Csv), a(Format::Csv));
    assert!(a(Format::Csv).starts_with("tau,log_q,log_predicted\n"));
}

#[test]
fn binary_exit_codes() {
    let (code, out, _) = symflat(&["flatness", "SU3", "--max-coeff", "3"]);
    assert_eq!(code, EXIT_AGREEMENT);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["is_constant"], true);

    let (code, out, _) = symflat(&["flatness", "S2", "--max-coeff", "10", "--format", "csv"]);
    assert_eq!(code, EXIT_AGREEMENT);
    assert_eq!(out.lines().count(), 12);

    // A tolerance loose enough to call S2 flat contradicts its classification.
    let (code, _, _) = symflat(&["flatness", "S2", "--tol", "1.0"]);
    assert_eq!(code, EXIT_DISAGREEMENT);

    let (code, out, err) = symflat(&["space", "show", "E8"]);
    assert_eq!((code, out.as_str()), (EXIT_INPUT_ERROR, ""));
    assert!(err.contains("E8"));

    let (code, _, _) = symflat(&["asym", "SU3", "--regime", "zero", "--weight", "1"]);
    assert_eq!(code, EXIT_INPUT_ERROR);
    let (code, _, _) = symflat(&["flatness"]);
    assert_eq!(code, EXIT_INPUT_ERROR);

    let path = scratch_file("bad", "name = X\nroot_type = A\nrank = 1\nmult.short = 1\ndim = 5\n");
    let (code, _, err) = symflat(&["--catalog", path.to_str().unwrap(), "catalog", "list"]);
    std::fs::remove_file(&path).unwrap();
    assert_eq!(code, EXIT_INPUT_ERROR);
    assert!(err.contains('X'));
}

#[test]
fn binary_side_commands() {
    let (code, out, _) = symflat(&["cfun", "SU3", "--weight", "1,2"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let (c, closed) = (v["c"].as_f64().unwrap(), v["c_closed_form"].as_f64().unwrap());
    assert!((c - closed).abs() < 1e-12 * closed);

    let (code, out, _) = symflat(&["probe-F", "--a", "0.7", "--b", "0.5", "--c", "1.3", "--d", "0", "--zmax", "4"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().next(), Some("z,F,F_over_2_pow_d"));
    assert_eq!(out.lines().count(), 5);

    let (code, out, _) = symflat(&["asym", "S3", "--regime", "infinity", "--weight", "1"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["passed"], true);

    let (code, out, _) = symflat(&["catalog", "list"]);
    assert_eq!(code, 0);
    assert!(out.lines().any(|l| l == "OP2"));
}
