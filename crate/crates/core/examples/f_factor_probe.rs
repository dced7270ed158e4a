// The single-root factor F(z, a, b, c, d) and the products G_j(n) built from
// it. F ≡ 1 when b = ½ and d = 0; otherwise F → 2^d as z grows.

use symflat::hcfun::{f_factor, g_product_probe, relative_spread};
use symflat::rootsys::{build_root_system, Multiplicities, RootType};

pub fn run_example() -> symflat::Result<()> {
    println!("F(z, 0.7, 1/2, 1.3, 0):");
    for z in [0.5, 5.0, 50.0, 5e3] {
        println!("  z = {z:>7}: {:.16}", f_factor(z, 0.7, 0.5, 1.3, 0.0)?);
    }
    println!("F(z, 0.7, 0.25, 1.3, 1.5) / 2^1.5:");
    for z in [1.0, 1e2, 1e4, 1e6] {
        println!("  z = {z:>7}: {:.10}", f_factor(z, 0.7, 0.25, 1.3, 1.5)? / 2f64.powf(1.5));
    }

    for (name, ty, rank, m) in [
        ("SU3", RootType::A, 2, Multiplicities::uniform(2.0)),
        ("SU3/SO3", RootType::A, 2, Multiplicities::uniform(1.0)),
        ("CP2", RootType::BC, 1, Multiplicities { short: Some(2.0), long: None, double: Some(1.0) }),
    ] {
        let rs = build_root_system(ty, rank, &m)?;
        let g = g_product_probe(&rs, 0, 10)?;
        println!("{name:<8} G_1(1..10) spread {:.3e}", relative_spread(&g));
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
