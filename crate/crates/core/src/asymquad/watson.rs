//! Small-`τ` expansions of Gaussian integrals over cones.
//!
//! For a cone `C = ℝ₊·G` in `ℝⁿ`, an `h`-homogeneous `Q` and
//! `f = Σ_j P_j` with `P_j` homogeneous of degree `j`,
//! `∫_C e^{−‖H‖²/τ} Q f dH ~ Σ_j ½Γ((n+h+j)/2) (∫_G Q P_j dξ) τ^{(n+h+j)/2}`.

use super::quad::{integrate_1d, QuadratureConfig};
use crate::error::{Error, Result};
use crate::hcfun::log_gamma;
use crate::rootsys::{EuclideanVector, RootSystem};

/// `½ Γ((n+h)/2) · angular · τ^{(n+h)/2}`, exact for an `h`-homogeneous integrand.
pub fn gaussian_cone_moment(n: usize, h: f64, angular_integral: f64, tau: f64) -> f64 {
    let p = 0.5 * (n as f64 + h);
    0.5 * angular_integral * (log_gamma(p).unwrap_or(f64::NAN) + p * tau.ln()).exp()
}

/// The first `n_terms + 1` terms `(coefficient, power)` of the expansion;
/// `angular_integrals[j]` is `∫_G Q P_j dξ`.
pub fn watson_expand(
    n: usize,
    q_degree: f64,
    angular_integrals: &[f64],
    n_terms: usize,
) -> Result<Vec<(f64, f64)>> {
    if n == 0 || !(q_degree >= 0.0) {
        return Err(Error::InvalidParameter(format!("need n ≥ 1 and degree ≥ 0, got n={n}, d={q_degree}")));
    }
    if angular_integrals.len() <= n_terms {
        return Err(Error::InvalidParameter(format!(
            "{} angular integrals supplied for {} terms",
            angular_integrals.len(),
            n_terms + 1
        )));
    }
    angular_integrals[..=n_terms]
        .iter()
        .enumerate()
        .map(|(j, &ang)| {
            let p = 0.5 * (n as f64 + q_degree + j as f64);
            Ok((0.5 * log_gamma(p)?.exp() * ang, p))
        })
        .collect()
}

/// `Σ coefficient · τ^power`.
pub fn watson_partial_sum(terms: &[(f64, f64)], tau: f64) -> f64 {
    terms.iter().map(|&(c, p)| c * tau.powf(p)).sum()
}

/// `∫_{φ₀}^{φ₁} g(φ) dφ`: the angular factor for two-dimensional cones.
pub fn angular_integral<G>(phi0: f64, phi1: f64, g: G, cfg: &QuadratureConfig) -> Result<f64>
where
    G: Fn(f64) -> f64 + Sync,
{
    integrate_1d(g, phi0, phi1, cfg)
}

/// Upper bound `C e^{δ²(1/τ₀ − 1/τ)}` for the part of a Gaussian integral
/// with `‖H‖ ≥ δ`, where `C` is that part at `τ₀ ≥ τ`.
pub fn gaussian_tail_bound(delta: f64, tau0: f64, tau: f64, c: f64) -> f64 {
    c * (delta * delta * (1.0 / tau0 - 1.0 / tau)).exp()
}

/// `b‖H‖² + Σ_{α∈Σ⁺} (m_α/3) α(H)²`.
pub fn second_order_term(rs: &RootSystem, b_delta: f64, h: &EuclideanVector) -> Result<f64> {
    if h.dim() != rs.rank() {
        return Err(Error::DimensionMismatch { expected: rs.rank(), got: h.dim() });
    }
    let roots: f64 = rs
        .positive_roots()
        .iter()
        .map(|r| {
            let t = r.vector.dot(h);
            r.multiplicity / 3.0 * t * t
        })
        .sum();
    Ok(b_delta * h.norm_sq() + roots)
}
