// Reading a user catalog and serializing reports as JSON and CSV.

use symflat::asymquad::{QuadratureConfig, Regime};
use symflat::cli::{emit_asymptotic_report, emit_q_report, parse_catalog, run_asym, run_flatness, Format};

const CATALOG: &str = "\
# two spheres, the second with a rescaled metric
name = S4
root_type = A
rank = 1
mult.short = 3
dim = 4

name = S4-wide
root_type = A
rank = 1
mult.short = 3
dim = 4
metric_scale = 0.5
source = S4 with every <a, a> halved
";

pub fn run_example() -> symflat::Result<()> {
    let catalog = parse_catalog(CATALOG)?;
    assert_eq!(parse_catalog(&catalog.to_text())?, catalog);

    let flat = run_flatness(&catalog, "S4", 3, 1e-6)?;
    print!("{}", emit_q_report(&flat, Format::Json));

    let cfg = QuadratureConfig::default();
    for name in ["S4", "S4-wide"] {
        let report = run_asym(&catalog, name, Regime::Zero, 1, &cfg)?;
        println!("{name}: B = {:.6} (expected {:.6})", report.fitted_b, report.expected_b);
        print!("{}", emit_asymptotic_report(&report, Format::Csv));
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
