// The c-function along a ray of weights, computed three ways where possible:
// the reduced Gamma product, the raw product before the duplication formula,
// and the closed form on group manifolds.

use symflat::hcfun::{c_function, c_function_raw_product, group_c_closed_form, predicted_constants};
use symflat::rootsys::{build_root_system, Multiplicities, RootType};

pub fn run_example() -> symflat::Result<()> {
    let s2 = build_root_system(RootType::A, 1, &Multiplicities::uniform(1.0))?;
    let cp2 = build_root_system(
        RootType::BC,
        1,
        &Multiplicities { short: Some(2.0), long: None, double: Some(1.0) },
    )?;
    let su3 = build_root_system(RootType::A, 2, &Multiplicities::uniform(2.0))?;

    println!("{:>6} {:>4} {:>22} {:>22} {:>22}", "space", "n", "c", "raw product", "closed form");
    for (name, rs) in [("S2", &s2), ("CP2", &cp2), ("SU3", &su3)] {
        for n in 0..4 {
            let coeffs = vec![n; rs.rank()];
            let w = rs.spherical_weight(&coeffs)?;
            let c = c_function(rs, &w)?;
            let raw = c_function_raw_product(rs, &w)?;
            assert!((c - raw).abs() <= 1e-10 * c);
            let closed = group_c_closed_form(rs, &w).map(|v| format!("{v:22.16}")).unwrap_or_else(|_| "-".into());
            println!("{name:>6} {n:>4} {c:22.16} {raw:22.16} {closed:>22}");
        }
    }

    let w = s2.spherical_weight(&[1])?;
    let (a, b) = predicted_constants(&s2, &w)?;
    println!("S2, n = 1: predicted A = {a:.12} (sqrt(3)/2), B = {b:.12}");
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
