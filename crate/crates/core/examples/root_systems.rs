// Builds a few restricted root systems and prints the data everything else
// is computed from: simple roots, ρ, fundamental spherical weights and the
// dimension of the space.

use symflat::rootsys::{build_root_system, Multiplicities, RootSystem, RootType};

fn show(label: &str, rs: &RootSystem) -> symflat::Result<()> {
    println!("{label}: rank {}, dim {}, reduced {}", rs.rank(), rs.dimension(), rs.is_reduced());
    for (j, alpha) in rs.simple_roots().iter().enumerate() {
        let (lhs, rhs) = rs.rho_pairing_identity(j)?;
        println!("  simple root {alpha}   <rho, a> = {lhs:.6} = {rhs:.6}");
    }
    println!("  rho = {}", rs.rho());
    for (j, mu) in rs.fundamental_spherical_weights()?.iter().enumerate() {
        println!("  mu_{} = {mu}", j + 1);
    }
    Ok(())
}

pub fn run_example() -> symflat::Result<()> {
    let su3 = build_root_system(RootType::A, 2, &Multiplicities::uniform(2.0))?;
    show("SU(3)", &su3)?;
    assert!(su3.is_group_manifold());

    // Complex Grassmannian of 2-planes in C^5: non-reduced, three root lengths.
    let gr = Multiplicities { short: Some(2.0), long: Some(2.0), double: Some(1.0) };
    let gr = build_root_system(RootType::BC, 2, &gr)?;
    show("Gr2(C5)", &gr)?;
    assert_eq!(gr.dimension(), 12.0);

    let g2 = build_root_system(RootType::G2, 2, &Multiplicities::uniform(1.0))?;
    show("G2/SO(4)", &g2)?;
    println!("dominant weights of G2/SO(4) up to 1: {}", g2.dominant_weights(1)?.len());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
