//! Structural properties of every catalog root system, plus randomized ones.

use proptest::prelude::*;
use symflat::cli::Catalog;
use symflat::rootsys::{build_root_system, EuclideanVector, Multiplicities, RootSystem, RootType};

fn catalog_systems() -> Vec<(String, RootSystem)> {
    Catalog::default_catalog()
        .entries()
        .iter()
        .map(|e| (e.name.clone(), e.root_system().unwrap()))
        .collect()
}

fn parallel(a: &EuclideanVector, b: &EuclideanVector) -> bool {
    let d = a.dot(b);
    (d * d - a.norm_sq() * b.norm_sq()).abs() <= 1e-10 * a.norm_sq() * b.norm_sq()
}

#[test]
fn multiplicities_are_weyl_invariant() {
    for (name, rs) in catalog_systems() {
        rs.check_weyl_invariance().unwrap_or_else(|e| panic!("{name}: {e}"));
        // Independent enumeration: every s_j(α) is ± a root with the same multiplicity.
        for s in rs.simple_roots() {
            for root in rs.positive_roots() {
                let image = root.vector.reflect(&s);
                let m = rs
                    .multiplicity_of(&image)
                    .or_else(|| rs.multiplicity_of(&(&image * -1.0)))
                    .unwrap_or_else(|| panic!("{name}: {image} is not a root"));
                assert_eq!(m, root.multiplicity, "{name}");
            }
        }
    }
}

#[test]
fn rho_is_strictly_dominant() {
    for (name, rs) in catalog_systems() {
        let rho = rs.rho();
        for root in rs.positive_roots() {
            assert!(rho.dot(&root.vector) > 1e-12, "{name}: <rho, {}> not positive", root.vector);
        }
    }
}

#[test]
fn rho_pairing_identity_on_every_simple_root() {
    for (name, rs) in catalog_systems() {
        for j in 0..rs.rank() {
            let (lhs, rhs) = rs.rho_pairing_identity(j).unwrap();
            assert!((lhs - rhs).abs() <= 1e-12 * rhs.abs(), "{name}, j = {j}: {lhs} vs {rhs}");
        }
    }
}

#[test]
fn dominant_weights_pair_nonnegatively() {
    for (name, rs) in catalog_systems() {
        let max = if rs.rank() > 2 { 2 } else { 4 };
        for w in rs.dominant_weights(max).unwrap() {
            for root in rs.positive_roots() {
                assert!(w.vector().dot(&root.vector) >= -1e-12, "{name}: {:?}", w.coeffs());
            }
        }
    }
}

#[test]
fn strict_ratio_gap() {
    for (name, rs) in catalog_systems() {
        let rho = rs.rho();
        let weights = rs.fundamental_spherical_weights().unwrap();
        for (j, alpha_j) in rs.unmultipliable_basis().iter().enumerate() {
            let mu = &weights[j];
            let reference = rho.dot(alpha_j) / mu.dot(alpha_j);
            for root in rs.positive_roots() {
                let pairing = mu.dot(&root.vector);
                if pairing <= 1e-12 || parallel(&root.vector, alpha_j) {
                    continue;
                }
                let ratio = rho.dot(&root.vector) / pairing;
                assert!(reference < ratio * (1.0 - 1e-12), "{name}, j = {j}, {}: {reference} vs {ratio}", root.vector);
            }
        }
    }
}

#[test]
fn pairings_are_scale_invariant() {
    for (name, rs) in catalog_systems() {
        let base = rs.spherical_weight(&vec![1; rs.rank()]).unwrap();
        let shifted = base.vector() + &rs.rho();
        for c in [0.5, 2.0] {
            let scaled = rs.rescaled(c).unwrap();
            let w = scaled.spherical_weight(&vec![1; rs.rank()]).unwrap();
            let s_shifted = w.vector() + &scaled.rho();
            for (r0, r1) in rs.positive_roots().iter().zip(scaled.positive_roots()) {
                let p0 = shifted.dot(&r0.vector) / r0.vector.norm_sq();
                let p1 = s_shifted.dot(&r1.vector) / r1.vector.norm_sq();
                assert!((p0 - p1).abs() <= 1e-12 * p0.abs(), "{name}, c = {c}");
            }
        }
    }
}

#[test]
fn dimensions_of_named_examples() {
    let dim = |ty, rank, m| build_root_system(ty, rank, &Multiplicities::uniform(m)).unwrap().dimension();
    assert_eq!(dim(RootType::A, 1, 2.0), 3.0);
    assert_eq!(dim(RootType::A, 1, 1.0), 2.0);
    assert_eq!(dim(RootType::A, 2, 2.0), 8.0);
}

fn arbitrary_system() -> impl Strategy<Value = RootSystem> {
    let ty = prop_oneof![
        (1usize..=4).prop_map(|r| (RootType::A, r)),
        (2usize..=4).prop_map(|r| (RootType::B, r)),
        (2usize..=4).prop_map(|r| (RootType::C, r)),
        (3usize..=4).prop_map(|r| (RootType::D, r)),
        (1usize..=3).prop_map(|r| (RootType::BC, r)),
        Just((RootType::G2, 2)),
        Just((RootType::F4, 4)),
    ];
    (ty, 0.25f64..9.0, 0.25f64..9.0, 0.25f64..9.0).prop_map(|((ty, rank), s, l, d)| {
        let m = Multiplicities { short: Some(s), long: Some(l), double: Some(d) };
        let m = match ty {
            RootType::BC => m,
            _ => Multiplicities { double: None, ..m },
        };
        let m = match (ty, rank) {
            (RootType::BC, 1) | (RootType::A, _) | (RootType::D, _) => Multiplicities { long: None, ..m },
            _ => m,
        };
        build_root_system(ty, rank, &m).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn random_systems_keep_structure(rs in arbitrary_system(), c in 0.1f64..10.0) {
        prop_assert!(rs.check_weyl_invariance().is_ok());
        let rho = rs.rho();
        for root in rs.positive_roots() {
            prop_assert!(rho.dot(&root.vector) > 0.0);
        }
        for j in 0..rs.rank() {
            let (lhs, rhs) = rs.rho_pairing_identity(j).unwrap();
            prop_assert!((lhs - rhs).abs() <= 1e-12 * rhs.abs());
        }
        let scaled = rs.rescaled(c).unwrap();
        prop_assert!((scaled.rho().norm_sq() - c * rho.norm_sq()).abs() <= 1e-10 * c * rho.norm_sq());
    }

    #[test]
    fn random_weights_are_dominant(rs in arbitrary_system(), coeffs in prop::collection::vec(0i64..20, 4)) {
        let w = rs.spherical_weight(&coeffs[..rs.rank()]).unwrap();
        for root in rs.positive_roots() {
            prop_assert!(w.vector().dot(&root.vector) >= -1e-10 * w.vector().norm().max(1.0));
        }
    }
}
