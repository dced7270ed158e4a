// The large-τ regime: log q_δ(τ) approaches c(−iλ−iρ) times the leading term
// of I_λ(τ), and lower weights are exponentially suppressed.

use symflat::asymquad::{leading_infinity, log_i_mu, verify_tau_infinity, QuadratureConfig};
use symflat::cli::Catalog;
use symflat::rootsys::EuclideanVector;

pub fn run_example() -> symflat::Result<()> {
    let catalog = Catalog::default_catalog();
    let cfg = QuadratureConfig::default();
    for name in ["S2", "S3", "CP2"] {
        let rs = catalog.get(name)?.root_system()?;
        let report = verify_tau_infinity(&rs, 1, &cfg)?;
        let gaps: Vec<String> = report.gaps().iter().map(|g| format!("{g:+.2e}")).collect();
        println!("{name:<4} gaps at tau = {:?}: [{}]  passed = {}", report.tau_grid, gaps.join(", "), report.passed);
        println!("     fitted A = {:.6} (predicted {:.6}), B = {:.6}", report.fitted_a, report.expected_a, report.fitted_b);
    }

    let s2 = catalog.get("S2")?.root_system()?;
    let lambda = s2.spherical_weight(&[1])?.vector().clone();
    let (ln_c, power, rate) = leading_infinity(&s2, &lambda)?;
    println!("S2, lambda = beta: I ~ {:.6} tau^{power} e^({rate} tau)", ln_c.exp());
    let tau = 50.0;
    let gap = log_i_mu(&s2, &EuclideanVector::zeros(1), tau, &cfg)? - log_i_mu(&s2, &lambda, tau, &cfg)?;
    println!("log I_0 - log I_lambda at tau = {tau}: {gap:.4}");
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
