//! Gaussian-weighted chamber integrals
//! `q(τ, f) = ∫_{𝔞₊} e^{−‖H‖²/τ} f(H) Π(α(H) sinh 2α(H))^{m_α/2} dH`.
//!
//! Two evaluations are available. The direct one integrates the integrand as
//! written. The transformed one pulls out `e^{τ‖A‖²}`, the powers of `τ` and 2
//! and the exponential growth of `f`, leaving a bounded integrand centred at
//! `τA`. With `f = e^{2μ}` and `A = μ + ρ` its integral tends to
//! `π^{r/2} Π⟨A, α⟩^{m_α/2}`.

use std::f64::consts::{LN_2, PI};

use super::chamber::{ln_chamber_integral, ChamberFunction, Exponential, Geometry, WeightTerms};
use super::quad::QuadratureConfig;
use crate::error::{Error, Result};
use crate::rootsys::{dot, EuclideanVector, RootSystem};

/// Below this `τ` the dispatching `log_i_mu` integrates directly.
pub const TRANSFORM_MIN_TAU: f64 = 1.0;

fn check_tau(tau: f64) -> Result<()> {
    if !(tau > 0.0) || !tau.is_finite() {
        return Err(Error::InvalidParameter(format!("τ must be positive and finite, got {tau}")));
    }
    Ok(())
}

fn check_dim(rs: &RootSystem, v: &EuclideanVector) -> Result<()> {
    if v.dim() != rs.rank() {
        return Err(Error::DimensionMismatch { expected: rs.rank(), got: v.dim() });
    }
    Ok(())
}

/// `ln q(τ, f)` by direct quadrature.
pub fn q_tau<F: ChamberFunction + ?Sized>(
    rs: &RootSystem,
    f: &F,
    tau: f64,
    cfg: &QuadratureConfig,
) -> Result<f64> {
    check_tau(tau)?;
    let geometry = Geometry::of(rs)?;
    let weights = WeightTerms::new(rs);
    let ln_g = |h: &[f64]| -> f64 {
        let w = weights.ln_full(h);
        if w == f64::NEG_INFINITY {
            return w;
        }
        -dot(h, h) / tau + f.ln_value(h) + w
    };
    ln_chamber_integral(&geometry, &ln_g, tau.sqrt(), cfg)
}

/// `ln q(τ, f)` through the bounded integrand centred at `τ·shift`.
///
/// `f` should grow like `e^{2⟨shift − ρ, H⟩}` for the integrand to stay
/// bounded, but the identity holds for any `shift`.
pub fn log_q_transformed<F: ChamberFunction + ?Sized>(
    rs: &RootSystem,
    f: &F,
    shift: &EuclideanVector,
    tau: f64,
    cfg: &QuadratureConfig,
) -> Result<f64> {
    check_tau(tau)?;
    check_dim(rs, shift)?;
    let geometry = Geometry::of(rs)?;
    let weights = WeightTerms::new(rs);
    let centre: Vec<f64> = shift.coords().iter().map(|c| c * tau).collect();
    let growth: Vec<f64> = (shift - &rs.rho()).coords().to_vec();
    let ln_g = |h: &[f64]| -> f64 {
        let w = weights.ln_shifted(h, tau);
        if w == f64::NEG_INFINITY {
            return w;
        }
        let d2: f64 = h.iter().zip(&centre).map(|(x, c)| (x - c) * (x - c)).sum();
        -d2 / tau + (f.ln_value(h) - 2.0 * dot(&growth, h)) + w
    };
    let ln_j = ln_chamber_integral(&geometry, &ln_g, tau.sqrt(), cfg)?;
    let excess = 0.5 * (rs.dimension() - rs.rank() as f64);
    Ok(ln_j + tau * shift.norm_sq() + excess * (tau.ln() - LN_2))
}

/// `ln I_μ(τ) = ln q(τ, e^{2μ})` by direct quadrature.
pub fn log_i_mu_direct(rs: &RootSystem, mu: &EuclideanVector, tau: f64, cfg: &QuadratureConfig) -> Result<f64> {
    check_dim(rs, mu)?;
    q_tau(rs, &Exponential { mu: mu.clone() }, tau, cfg)
}

/// `ln I_μ(τ)` through the integrand centred at `τ(μ + ρ)`.
pub fn log_i_mu_transformed(
    rs: &RootSystem,
    mu: &EuclideanVector,
    tau: f64,
    cfg: &QuadratureConfig,
) -> Result<f64> {
    check_dim(rs, mu)?;
    let shift = mu + &rs.rho();
    log_q_transformed(rs, &Exponential { mu: mu.clone() }, &shift, tau, cfg)
}

/// `ln I_μ(τ)`, transformed for `τ ≥ TRANSFORM_MIN_TAU` and direct below.
pub fn log_i_mu(rs: &RootSystem, mu: &EuclideanVector, tau: f64, cfg: &QuadratureConfig) -> Result<f64> {
    if tau >= TRANSFORM_MIN_TAU {
        log_i_mu_transformed(rs, mu, tau, cfg)
    } else {
        log_i_mu_direct(rs, mu, tau, cfg)
    }
}

/// Leading behaviour `I_μ(τ) ~ C τ^p e^{kτ}` as `(ln C, p, k)`, with
/// `C = 2^{(r−m)/2} π^{r/2} Π⟨μ+ρ, α⟩^{m_α/2}`, `p = m/2` and `k = ‖μ+ρ‖²`.
pub fn leading_infinity(rs: &RootSystem, mu: &EuclideanVector) -> Result<(f64, f64, f64)> {
    check_dim(rs, mu)?;
    let shifted = mu + &rs.rho();
    let r = rs.rank() as f64;
    let m = rs.dimension();
    let mut ln_c = 0.5 * (r - m) * LN_2 + 0.5 * r * PI.ln();
    for root in rs.positive_roots() {
        let pairing = shifted.dot(&root.vector);
        if !(pairing > 1e-12 * shifted.norm().max(1.0)) {
            return Err(Error::NotInOpenChamber);
        }
        ln_c += 0.5 * root.multiplicity * pairing.ln();
    }
    Ok((ln_c, 0.5 * m, shifted.norm_sq()))
}
