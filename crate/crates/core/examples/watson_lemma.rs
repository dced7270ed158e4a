// Watson's lemma on the half line: ∫₀^∞ e^{−h²/τ} h e^{2h} dh against the
// partial sums of its small-τ expansion.

use symflat::asymquad::{integrate_log_1d, watson_expand, watson_partial_sum, QuadratureConfig};

pub fn run_example() -> symflat::Result<()> {
    // Q(h) = h has degree 1; e^{2h} = Σ (2h)^j / j!.
    let mut angular = vec![1.0];
    for j in 1..8 {
        angular.push(angular[j - 1] * 2.0 / j as f64);
    }
    let cfg = QuadratureConfig::default();
    for tau in [1e-3f64, 1e-2, 1e-1] {
        let width = tau.sqrt();
        let exact = integrate_log_1d(|h| -h * h / tau + h.ln() + 2.0 * h, 0.0, 40.0 * width + 4.0 * tau, &cfg)?.exp();
        println!("tau = {tau:e}: integral = {exact:.15e}");
        for n in 0..5 {
            let terms = watson_expand(1, 1.0, &angular, n + 1)?;
            let partial = watson_partial_sum(&terms[..=n], tau);
            let next = watson_partial_sum(&terms[n + 1..], tau);
            println!("  N = {n}: error {:.3e}, next term {:.3e}", (exact - partial).abs(), next);
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
