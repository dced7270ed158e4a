//! Chamber quadrature against brute-force oracles, and the asymptotic laws.

use std::f64::consts::{LN_2, PI};

use proptest::prelude::*;
use symflat::asymquad::{
    b_delta_rank1, gaussian_cone_moment, gaussian_tail_bound, log_i_mu, log_i_mu_direct, log_i_mu_transformed,
    q_tau, watson_expand, watson_partial_sum, ChamberFunction, Exponential, One, QuadratureConfig, Rank1Data,
};
use symflat::cli::Catalog;
use symflat::hcfun::log_gamma;
use symflat::rootsys::{EuclideanVector, RootSystem};

fn space(name: &str) -> RootSystem {
    Catalog::default_catalog().get(name).unwrap().root_system().unwrap()
}

/// Composite Simpson for a log-integrand on `[a, b]` with `panels` panels.
fn ln_simpson(ln_f: impl Fn(f64) -> f64, a: f64, b: f64, panels: usize) -> f64 {
    let panels = panels + panels % 2;
    let step = (b - a) / panels as f64;
    let values: Vec<f64> = (0..=panels).map(|i| ln_f(a + step * i as f64)).collect();
    let top = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let sum: f64 = values
        .iter()
        .enumerate()
        .map(|(i, v)| {
            let w = if i == 0 || i == panels { 1.0 } else if i % 2 == 1 { 4.0 } else { 2.0 };
            w * (v - top).exp()
        })
        .sum();
    top + (sum * step / 3.0).ln()
}

/// `ln q(τ, f)` on a rank-one system: Simpson in `s = √h` along the unit ray.
fn ln_q_oracle(rs: &RootSystem, f: &dyn ChamberFunction, growth: f64, tau: f64) -> f64 {
    let beta = &rs.positive_roots()[rs.simple_root_indices()[0]].vector;
    let u = beta * (1.0 / beta.norm());
    let rho_u = rs.rho().dot(&u);
    let upper = tau * (rho_u + growth) + 14.0 * tau.sqrt() + 1.0;
    let ln_g = |s: f64| {
        if s == 0.0 {
            return f64::NEG_INFINITY;
        }
        let h = s * s;
        let point = [h * u.coords()[0]];
        let weight: f64 = rs
            .positive_roots()
            .iter()
            .map(|r| {
                let t = r.vector.dot(&u) * h;
                0.5 * r.multiplicity * (t.ln() + 2.0 * t + (-(-4.0 * t).exp_m1()).ln() - LN_2)
            })
            .sum();
        -h * h / tau + f.ln_value(&point) + weight + (2.0 * s).ln()
    };
    ln_simpson(ln_g, 0.0, upper.sqrt(), 400_000)
}

#[test]
fn q_tau_matches_simpson_oracle() {
    let cfg = QuadratureConfig::default();
    for name in ["S2", "S3", "CP2", "HP2"] {
        let rs = space(name);
        let data = Rank1Data::from_root_system(&rs).unwrap();
        let beta = data.beta.clone();
        let u = &beta * (1.0 / beta.norm());
        let exp = Exponential { mu: beta.clone() };
        let sph = data.spherical_function(2);
        let cases: [(&dyn ChamberFunction, f64); 3] = [(&One, 0.0), (&exp, beta.dot(&u)), (&sph, 0.0)];
        for (k, (f, growth)) in cases.into_iter().enumerate() {
            for tau in [0.01, 0.1, 1.0, 10.0, 200.0] {
                // The spherical function grows like e^{2n β(H)}.
                let growth = if k == 2 { 2.0 * beta.norm() } else { growth };
                let got = q_tau(&rs, f, tau, &cfg).unwrap();
                let want = ln_q_oracle(&rs, f, growth, tau);
                assert!((got - want).abs() <= 1e-6, "{name} f#{k} τ={tau}: {got} vs {want}");
            }
        }
    }
}

/// Tensor Simpson over `[0, l]²` with `panels` panels per side, linear space.
fn simpson_2d(f: impl Fn(f64, f64) -> f64, l: f64, panels: usize) -> f64 {
    let step = l / panels as f64;
    let w = |i: usize| if i == 0 || i == panels { 1.0 } else if i % 2 == 1 { 4.0 } else { 2.0 };
    let mut total = 0.0;
    for i in 0..=panels {
        let x = step * i as f64;
        let row: f64 = (0..=panels).map(|j| w(j) * f(x, step * j as f64)).sum();
        total += w(i) * row;
    }
    total * step * step / 9.0
}

#[test]
fn cone_moments_are_exact() {
    for tau in [0.1f64, 1.0, 3.0] {
        let l = 8.0 * f64::sqrt(tau);
        let line = ln_simpson(|x| -x * x / tau + 2.0 * x.ln(), 0.0, l, 4000).exp();
        let quarter_xy = simpson_2d(|x, y| (-(x * x + y * y) / tau).exp() * x * y, l, 2000);
        let quadrant = simpson_2d(|x, y| (-(x * x + y * y) / tau).exp(), l, 2000);
        let cases = [
            (gaussian_cone_moment(1, 2.0, 1.0, tau), line, 0.25 * PI.sqrt() * tau.powf(1.5)),
            (gaussian_cone_moment(2, 2.0, 0.5, tau), quarter_xy, 0.25 * tau * tau),
            (gaussian_cone_moment(2, 0.0, 0.5 * PI, tau), quadrant, 0.25 * PI * tau),
        ];
        for (k, (moment, brute, closed)) in cases.into_iter().enumerate() {
            assert!((moment - brute).abs() <= 1e-8 * brute, "case {k} τ={tau}: {moment} vs {brute}");
            assert!((moment - closed).abs() <= 1e-13 * closed, "case {k} τ={tau}");
        }
    }
}

/// `Φ(τ) = ∫₀^∞ e^{−h²/τ} h e^{2h} dh`.
fn phi_oracle(tau: f64) -> f64 {
    ln_simpson(|h| -h * h / tau + h.ln() + 2.0 * h, 0.0, tau + 14.0 * tau.sqrt(), 1_000_000).exp()
}

fn exp_taylor(n: usize) -> Vec<f64> {
    let mut out = vec![1.0];
    for j in 1..n {
        out.push(out[j - 1] * 2.0 / j as f64);
    }
    out
}

#[test]
fn watson_partial_sums_are_within_twice_the_next_term() {
    let angular = exp_taylor(8);
    for tau in [1e-3f64, 3e-3, 1e-2] {
        let phi = phi_oracle(tau);
        let terms = watson_expand(1, 1.0, &angular, 6).unwrap();
        for n in 0..=4 {
            let err = (phi - watson_partial_sum(&terms[..=n], tau)).abs();
            let next = watson_partial_sum(&terms[n + 1..n + 2], tau).abs();
            assert!(err <= 2.0 * next, "τ={tau} N={n}: {err} vs {next}");
        }
    }
    // With f ≡ 1 the expansion is the single cone moment.
    let single = watson_expand(1, 2.0, &[1.0], 0).unwrap();
    assert!((watson_partial_sum(&single, 0.3) - gaussian_cone_moment(1, 2.0, 1.0, 0.3)).abs() < 1e-15);
}

#[test]
fn gaussian_tail_is_bounded() {
    let tail = |tau: f64| ln_simpson(|h| -h * h / tau + h.ln() + 2.0 * h, 1.0, 1.0 + 40.0 * tau.sqrt(), 200_000).exp();
    let (t1, t01) = (tail(1.0), tail(0.1));
    let bound = gaussian_tail_bound(1.0, 1.0, 0.1, t1);
    assert!(t01 <= bound, "{t01} vs {bound}");
    assert!(t01 < t1);
}

#[test]
fn b_delta_forms_agree() {
    for m_beta in 1..=8u32 {
        for m_half in [0u32, 2, 4, 6, 8] {
            for n in 0..=10u32 {
                let (series, weight) = b_delta_rank1(m_beta, m_half, n, 2.0);
                assert!((series - weight).abs() <= 1e-12 * series.abs().max(1e-300), "{m_beta} {m_half} {n}");
            }
        }
    }
    assert_eq!(b_delta_rank1(2, 0, 1, 2.0), (4.0, 4.0));
    assert_eq!(b_delta_rank1(1, 0, 1, 2.0), (4.0, 4.0));
    let cp2 = Rank1Data::from_root_system(&space("CP2")).unwrap();
    assert!((cp2.b_delta(3) - b_delta_rank1(1, 2, 3, cp2.beta.norm_sq()).1).abs() < 1e-12);
}

#[test]
fn direct_and_transformed_paths_agree() {
    let cfg = QuadratureConfig::default();
    for name in ["S2", "CP2", "SU3", "Spin5", "Gr2(C5)"] {
        let rs = space(name);
        let mu = rs.spherical_weight(&vec![1; rs.rank()]).unwrap().vector().clone();
        for tau in [0.5, 0.8, 1.3, 2.0, 3.2, 5.0] {
            let d = log_i_mu_direct(&rs, &mu, tau, &cfg).unwrap();
            let q = q_tau(&rs, &Exponential { mu: mu.clone() }, tau, &cfg).unwrap();
            let t = log_i_mu_transformed(&rs, &mu, tau, &cfg).unwrap();
            assert_eq!(d, q);
            assert!((d - t).abs() <= cfg.rel_tol, "{name} τ={tau}: {d} vs {t}");
        }
    }
}

#[test]
fn highest_weight_dominates() {
    let rs = space("S2");
    let cfg = QuadratureConfig::default();
    let lambda = rs.spherical_weight(&[1]).unwrap().vector().clone();
    for tau in [25.0, 50.0, 100.0] {
        let gap = log_i_mu(&rs, &EuclideanVector::zeros(1), tau, &cfg).unwrap() - log_i_mu(&rs, &lambda, tau, &cfg).unwrap();
        assert!(gap <= -0.9 * 4.0 * tau, "τ={tau}: {gap}");
    }
}

#[test]
fn small_tau_leading_coefficient() {
    // q = ½Γ(m/2) Q(u) τ^{m/2} (1 + (m/2) τ Σ (m_α/3) α(u)² + O(τ²)).
    let cfg = QuadratureConfig::default();
    let tau: f64 = 1e-3;
    for name in ["S2", "S3", "S5", "CP2", "HP2", "OP2"] {
        let rs = space(name);
        let beta = &rs.positive_roots()[rs.simple_root_indices()[0]].vector;
        let u = beta * (1.0 / beta.norm());
        let pairings: Vec<(f64, f64)> = rs.positive_roots().iter().map(|r| (r.vector.dot(&u), r.multiplicity)).collect();
        let ln_q_u: f64 = pairings.iter().map(|&(t, m)| 0.5 * m * (2.0 * t * t).ln()).sum();
        let quadratic: f64 = pairings.iter().map(|&(t, m)| m / 3.0 * t * t).sum();
        let m = rs.dimension();
        let leading = -LN_2 + log_gamma(0.5 * m).unwrap() + ln_q_u + 0.5 * m * tau.ln();
        let got = q_tau(&rs, &One, tau, &cfg).unwrap();
        let first_order = 0.5 * m * tau * quadratic;
        if m <= 4.0 {
            assert!((got - leading).exp_m1().abs() <= 1e-2, "{name}: {got} vs {leading}");
        }
        // The remainder is second order.
        assert!(((got - leading).exp_m1() - first_order).abs() <= first_order * first_order, "{name}");
    }
}

#[test]
fn q_tau_increases_with_tau() {
    let cfg = QuadratureConfig::default();
    for name in ["S2", "CP2", "SU3", "Gr2(C5)"] {
        let rs = space(name);
        let values: Vec<f64> =
            [0.01, 0.05, 0.2, 1.0, 4.0, 20.0].iter().map(|&t| q_tau(&rs, &One, t, &cfg).unwrap()).collect();
        assert!(values.windows(2).all(|w| w[1] > w[0]), "{name}: {values:?}");
    }
}

#[test]
fn rank_two_groups_match_closed_form() {
    let cfg = QuadratureConfig::default();
    for name in ["SU3", "Spin5", "G2"] {
        let rs = space(name);
        let rho = rs.rho();
        let (r, m) = (rs.rank() as f64, rs.dimension());
        let product: f64 = rs.positive_roots().iter().map(|a| rho.dot(&a.vector).ln()).sum();
        for tau in [0.05f64, 0.7, 4.0, 30.0] {
            let want = 0.5 * (r - m) * LN_2 + 0.5 * r * PI.ln() + 0.5 * m * tau.ln() + tau * rho.norm_sq() + product;
            let got = log_i_mu(&rs, &EuclideanVector::zeros(2), tau, &cfg).unwrap();
            assert!((got - want).abs() <= 1e-8, "{name} τ={tau}: {got} vs {want}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn rank_one_paths_agree(m in 0.5f64..9.0, n in 0u32..4, tau in 0.5f64..5.0) {
        let rs = RootSystem::from_roots(1, vec![(EuclideanVector::new(vec![2f64.sqrt()]), m)]).unwrap();
        let mu = rs.spherical_weight(&[n as i64]).unwrap().vector().clone();
        let cfg = QuadratureConfig::default();
        let d = log_i_mu_direct(&rs, &mu, tau, &cfg).unwrap();
        let t = log_i_mu_transformed(&rs, &mu, tau, &cfg).unwrap();
        prop_assert!((d - t).abs() <= 1e-9, "{} vs {}", d, t);
    }
}
