// Sweeps the invariant Q over the dominant weights of every space in the
// bundled catalog. Q is constant exactly on the group manifolds.

use symflat::cli::{run_flatness, Catalog};
use symflat::hcfun::VERDICT_TOL;

pub fn run_example() -> symflat::Result<()> {
    let catalog = Catalog::default_catalog();
    println!("{:<10} {:>8} {:>10} {:>8} {:>6}", "space", "weights", "spread", "flat", "group");
    for space in catalog.entries() {
        let max_coeff = if space.rank > 2 { 2 } else { 5 };
        let report = run_flatness(&catalog, &space.name, max_coeff, VERDICT_TOL)?;
        println!(
            "{:<10} {:>8} {:>10.3e} {:>8} {:>6}",
            space.name,
            report.weights.len(),
            report.max_rel_deviation,
            report.is_constant,
            report.group_manifold_predicted
        );
        assert!(report.agrees(), "{}", space.name);
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
