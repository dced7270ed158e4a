use rayon::prelude::*;

use super::cfun::shifted_pairings;
use super::gamma::ln_gamma_ratio;
use crate::error::{Error, Result};
use crate::rootsys::{EuclideanVector, RootSystem, SphericalWeight};

/// Default relative tolerance for analytic identities.
pub const IDENTITY_TOL: f64 = 1e-8;
/// Default relative tolerance for constancy verdicts.
pub const VERDICT_TOL: f64 = 1e-6;

/// `ln Q(μ)`, the Gamma-product invariant evaluated at `x = ⟨μ+ρ, α₀⟩`.
pub fn ln_q_of_weight(rs: &RootSystem, mu: &SphericalWeight) -> Result<f64> {
    ln_q_at(rs, mu.vector())
}

pub(crate) fn ln_q_at(rs: &RootSystem, mu: &EuclideanVector) -> Result<f64> {
    if mu.dim() != rs.rank() {
        return Err(Error::DimensionMismatch { expected: rs.rank(), got: mu.dim() });
    }
    shifted_pairings(rs, mu)
        .into_iter()
        .map(|(x, m, m2)| {
            if !(x > 0.0) {
                return Err(Error::NonDominant(x));
            }
            Ok(0.5 * (m + m2) * x.ln()
                - ln_gamma_ratio(x, 0.5 * m)?
                - ln_gamma_ratio(0.25 * m + 0.5 * x, 0.5 * m2)?)
        })
        .sum()
}

pub fn q_of_weight(rs: &RootSystem, mu: &SphericalWeight) -> Result<f64> {
    Ok(ln_q_of_weight(rs, mu)?.exp())
}

/// `ln F(z, a, b, c, d)` for
/// `F = Γ(cz+a+b) Γ(2cz+2a) (2cz+2a)^{2b+d} / (Γ(2cz+2a+2b) Γ(cz+a+b+d))`.
pub fn ln_f_factor(z: f64, a: f64, b: f64, c: f64, d: f64) -> Result<f64> {
    let ok = z > 0.0 && a > 0.0 && b >= 0.0 && c >= 0.0 && d >= 0.0;
    if !ok || ![z, a, b, c, d].iter().all(|v| v.is_finite()) {
        return Err(Error::InvalidParameter(format!(
            "F needs z > 0, a > 0 and b, c, d ≥ 0 (got z={z}, a={a}, b={b}, c={c}, d={d})"
        )));
    }
    let w = c * z + a;
    Ok((2.0 * b + d) * (2.0 * w).ln() - ln_gamma_ratio(2.0 * w, 2.0 * b)? - ln_gamma_ratio(w + b, d)?)
}

pub fn f_factor(z: f64, a: f64, b: f64, c: f64, d: f64) -> Result<f64> {
    Ok(ln_f_factor(z, a, b, c, d)?.exp())
}

/// `G_j(n)` for `n = 1..=n_max`: the product of `F` factors over the indivisible
/// positive roots with `⟨μ_j, α₀⟩ > 0`. Equals `Q(n μ_j)` up to a constant.
pub fn g_product_probe(rs: &RootSystem, j: usize, n_max: u32) -> Result<Vec<f64>> {
    if j >= rs.rank() {
        return Err(Error::IndexOutOfRange { index: j, rank: rs.rank() });
    }
    let mu_j = rs.fundamental_spherical_weights()?.swap_remove(j);
    let rho = rs.rho();
    let params: Vec<(f64, f64, f64, f64)> = rs
        .indivisible_positive()
        .into_iter()
        .filter_map(|(alpha, m, m2)| {
            let a0 = alpha.coroot();
            let c = 0.5 * mu_j.dot(&a0);
            (c > 1e-12).then(|| (0.5 * rho.dot(&a0), 0.25 * m, c, 0.5 * m2))
        })
        .collect();
    (1..=n_max)
        .map(|n| {
            let ln: Result<f64> =
                params.iter().map(|&(a, b, c, d)| ln_f_factor(n as f64, a, b, c, d)).sum();
            ln.map(f64::exp)
        })
        .collect()
}

/// True iff the system is reduced and every multiplicity equals 2.
pub fn classify_group_manifold(rs: &RootSystem) -> bool {
    rs.is_group_manifold()
}

/// Q sampled over a weight set, with its spread and a constancy verdict.
#[derive(Debug, Clone, PartialEq)]
pub struct QInvarianceReport {
    pub weights: Vec<SphericalWeight>,
    pub q_values: Vec<f64>,
    pub max_rel_deviation: f64,
    pub tolerance: f64,
    pub is_constant: bool,
    pub group_manifold_predicted: bool,
}

impl QInvarianceReport {
    /// The verdict matches the group-manifold classification.
    pub fn agrees(&self) -> bool {
        self.is_constant == self.group_manifold_predicted
    }
}

/// `(max − min) / min`, reduced in index order.
pub fn relative_spread(values: &[f64]) -> f64 {
    let (lo, hi) = values
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &v| (lo.min(v), hi.max(v)));
    (hi - lo) / lo
}

pub fn q_invariance_test(
    rs: &RootSystem,
    weights: Vec<SphericalWeight>,
    tol: f64,
) -> Result<QInvarianceReport> {
    if weights.is_empty() {
        return Err(Error::InvalidParameter("empty weight set".into()));
    }
    if !(tol > 0.0) {
        return Err(Error::InvalidParameter(format!("tolerance must be positive, got {tol}")));
    }
    let q_values = weights
        .par_iter()
        .map(|w| q_of_weight(rs, w))
        .collect::<Result<Vec<f64>>>()?;
    if let Some(bad) = q_values.iter().find(|q| !(q.is_finite() && **q > 0.0)) {
        return Err(Error::InvalidParameter(format!("Q evaluated to {bad}")));
    }
    let max_rel_deviation = relative_spread(&q_values);
    Ok(QInvarianceReport {
        weights,
        q_values,
        max_rel_deviation,
        tolerance: tol,
        is_constant: max_rel_deviation <= tol,
        group_manifold_predicted: classify_group_manifold(rs),
    })
}
