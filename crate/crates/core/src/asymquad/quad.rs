//! Composite Gauss–Legendre panels with interval doubling.
//!
//! Integrands are handed over as logarithms and panel sums are combined with
//! a log-sum-exp in node order, so results never overflow and do not depend
//! on thread scheduling.

use std::f64::consts::PI;
use std::sync::OnceLock;

use rayon::prelude::*;

use crate::error::{Error, Result};

const GL_ORDER: usize = 16;

/// Stopping rule and truncation width for every integral in this module.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureConfig {
    /// Accepted relative change between two successive refinements.
    pub rel_tol: f64,
    pub max_refinements: u32,
    /// Integrate out to where the log integrand has dropped by `σ²/2` from its peak.
    pub truncation_sigma: f64,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        QuadratureConfig { rel_tol: 1e-10, max_refinements: 10, truncation_sigma: 8.0 }
    }
}

impl QuadratureConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.rel_tol > 0.0 && self.rel_tol <= 1e-2) {
            return Err(Error::InvalidParameter(format!("rel_tol must lie in (0, 1e-2], got {}", self.rel_tol)));
        }
        if self.max_refinements == 0 {
            return Err(Error::InvalidParameter("max_refinements must be positive".into()));
        }
        if !(self.truncation_sigma >= 6.0) || !self.truncation_sigma.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "truncation_sigma must be at least 6, got {}",
                self.truncation_sigma
            )));
        }
        Ok(())
    }

    pub(crate) fn log_drop(&self) -> f64 {
        0.5 * self.truncation_sigma * self.truncation_sigma
    }
}

/// `P_n(x)` and `P_n'(x)`.
fn legendre(n: usize, x: f64) -> (f64, f64) {
    let (mut p0, mut p1) = (1.0, x);
    for k in 1..n {
        let p2 = ((2 * k + 1) as f64 * x * p1 - k as f64 * p0) / (k + 1) as f64;
        p0 = p1;
        p1 = p2;
    }
    (p1, n as f64 * (x * p1 - p0) / (x * x - 1.0))
}

/// Nodes on `(-1, 1)` in increasing order, with weights.
pub(crate) fn gauss_legendre() -> &'static [(f64, f64); GL_ORDER] {
    static RULE: OnceLock<[(f64, f64); GL_ORDER]> = OnceLock::new();
    RULE.get_or_init(|| {
        let n = GL_ORDER;
        let mut rule = [(0.0, 0.0); GL_ORDER];
        for (i, slot) in rule.iter_mut().enumerate() {
            let mut x = -(PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            for _ in 0..100 {
                let (p, dp) = legendre(n, x);
                let dx = p / dp;
                x -= dx;
                if dx.abs() < 1e-16 {
                    break;
                }
            }
            let (_, dp) = legendre(n, x);
            *slot = (x, 2.0 / ((1.0 - x * x) * dp * dp));
        }
        rule
    })
}

/// `ln Σ e^{v}`; `-inf` for an empty or all-zero sum.
pub(crate) fn log_sum_exp(values: &[f64]) -> f64 {
    let max = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    if max == f64::NEG_INFINITY {
        return max;
    }
    max + values.iter().map(|v| (v - max).exp()).sum::<f64>().ln()
}

/// Abscissae and log weights of `panels` equal panels on `[a, b]`.
pub(crate) fn panel_nodes(a: f64, b: f64, panels: usize) -> Vec<(f64, f64)> {
    let width = (b - a) / panels as f64;
    let half = 0.5 * width;
    let mut out = Vec::with_capacity(panels * GL_ORDER);
    for p in 0..panels {
        let mid = a + (p as f64 + 0.5) * width;
        for &(x, w) in gauss_legendre() {
            out.push((mid + half * x, (w * half).ln()));
        }
    }
    out
}

/// Doubles the panel count until the log value settles to `rel_tol`.
pub(crate) fn refine_log(
    start_panels: usize,
    cfg: &QuadratureConfig,
    mut eval: impl FnMut(usize) -> f64,
) -> Result<f64> {
    let mut panels = start_panels;
    let mut prev = eval(panels);
    let mut change = f64::INFINITY;
    for _ in 0..cfg.max_refinements {
        panels *= 2;
        let cur = eval(panels);
        if cur == f64::NEG_INFINITY && prev == f64::NEG_INFINITY {
            return Ok(cur);
        }
        change = (cur - prev).abs();
        if change <= cfg.rel_tol {
            return Ok(cur);
        }
        prev = cur;
    }
    Err(Error::QuadratureNonConvergence { refinements: cfg.max_refinements, last_change: change })
}

/// `ln ∫_a^b e^{ln_f(x)} dx`.
pub fn integrate_log_1d<F>(ln_f: F, a: f64, b: f64, cfg: &QuadratureConfig) -> Result<f64>
where
    F: Fn(f64) -> f64 + Sync,
{
    cfg.validate()?;
    if !(a < b) || !a.is_finite() || !b.is_finite() {
        return Err(Error::InvalidParameter(format!("need a finite interval a < b, got [{a}, {b}]")));
    }
    refine_log(4, cfg, |panels| {
        let terms: Vec<f64> =
            panel_nodes(a, b, panels).par_iter().map(|&(x, lw)| ln_f(x) + lw).collect();
        log_sum_exp(&terms)
    })
}

/// `∫_a^b f(x) dx` for a signed integrand; the stopping rule is relative to the running value.
pub fn integrate_1d<F>(f: F, a: f64, b: f64, cfg: &QuadratureConfig) -> Result<f64>
where
    F: Fn(f64) -> f64 + Sync,
{
    cfg.validate()?;
    if !(a <= b) || !a.is_finite() || !b.is_finite() {
        return Err(Error::InvalidParameter(format!("need a finite interval a ≤ b, got [{a}, {b}]")));
    }
    if a == b {
        return Ok(0.0);
    }
    let eval = |panels: usize| -> f64 {
        let terms: Vec<f64> =
            panel_nodes(a, b, panels).par_iter().map(|&(x, lw)| f(x) * lw.exp()).collect();
        terms.iter().sum()
    };
    let mut panels = 2;
    let mut prev = eval(panels);
    let mut change = f64::INFINITY;
    for _ in 0..cfg.max_refinements {
        panels *= 2;
        let cur = eval(panels);
        change = (cur - prev).abs();
        if change <= cfg.rel_tol * cur.abs() || change == 0.0 {
            return Ok(cur);
        }
        prev = cur;
    }
    Err(Error::QuadratureNonConvergence { refinements: cfg.max_refinements, last_change: change })
}
