// The small-τ regime on rank-one spaces: q_δ/q_δ₀ = A·e^{Bτ} to first order
// with A = 1 and B = (m/2)·b_δ.

use symflat::asymquad::{b_delta_rank1, verify_tau_zero, QuadratureConfig};
use symflat::cli::Catalog;

pub fn run_example() -> symflat::Result<()> {
    let catalog = Catalog::default_catalog();
    let cfg = QuadratureConfig::default();
    for name in ["S2", "S3", "CP2", "HP2"] {
        let rs = catalog.get(name)?.root_system()?;
        let report = verify_tau_zero(&rs, 1, &cfg)?;
        println!(
            "{name:<4} A = {:.6}  B = {:.6}  expected B = {:.6}  passed = {}",
            report.fitted_a, report.fitted_b, report.expected_b, report.passed
        );
    }
    let (series, weight) = b_delta_rank1(2, 0, 1, 2.0);
    println!("b_delta for S3, n = 1: {series} (series) = {weight} (weights)");
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
