//! The positive Weyl chamber of a rank ≤ 2 system, its radial weight, and the
//! log-space integrator over it.
//!
//! Rank 1 is a ray. Rank 2 is an angular sector, integrated in polar
//! coordinates with `φ = φ₀ + Δ sin²(πv/2)` so that the `α(H)^{m/2}` zeros on
//! both walls become smooth in `v`. When the radial window starts at the
//! origin the radius is written as `s²` for the same reason.

use std::f64::consts::{FRAC_PI_2, LN_2, PI};

use rayon::prelude::*;

use super::quad::{log_sum_exp, panel_nodes, refine_log, QuadratureConfig};
use crate::error::{Error, Result};
use crate::rootsys::{dot, EuclideanVector, RootSystem};

/// Grid points per Gaussian width used to locate the integrand's support.
const SCAN_STEPS_PER_WIDTH: f64 = 8.0;
const SCAN_MAX_STEPS: usize = 1_000_000;
const SCAN_RAYS: usize = 48;

/// A function on the open chamber, supplied as its logarithm.
pub trait ChamberFunction: Sync {
    fn ln_value(&self, h: &[f64]) -> f64;
}

impl<F> ChamberFunction for F
where
    F: Fn(&[f64]) -> f64 + Sync,
{
    fn ln_value(&self, h: &[f64]) -> f64 {
        self(h)
    }
}

/// `f ≡ 1`.
#[derive(Debug, Clone, Copy, Default)]
pub struct One;

impl ChamberFunction for One {
    fn ln_value(&self, _h: &[f64]) -> f64 {
        0.0
    }
}

/// `f(H) = e^{2⟨μ, H⟩}`.
#[derive(Debug, Clone)]
pub struct Exponential {
    pub mu: EuclideanVector,
}

impl ChamberFunction for Exponential {
    fn ln_value(&self, h: &[f64]) -> f64 {
        2.0 * dot(self.mu.coords(), h)
    }
}

/// `ln sinh x` for `x > 0`, finite for arguments far beyond `e^{709}`.
pub(crate) fn ln_sinh(x: f64) -> f64 {
    x + (-(-2.0 * x).exp_m1()).ln() - LN_2
}

/// The positive roots with their multiplicities, flattened for the hot loop.
pub(crate) struct WeightTerms {
    roots: Vec<(Vec<f64>, f64)>,
}

impl WeightTerms {
    pub(crate) fn new(rs: &RootSystem) -> Self {
        let roots = rs
            .positive_roots()
            .iter()
            .map(|r| (r.vector.coords().to_vec(), r.multiplicity))
            .collect();
        WeightTerms { roots }
    }

    /// `ln Π (α(H) sinh 2α(H))^{m_α/2}`; `-inf` on or beyond a wall.
    pub(crate) fn ln_full(&self, h: &[f64]) -> f64 {
        let mut acc = 0.0;
        for (alpha, m) in &self.roots {
            let t = dot(alpha, h);
            if !(t > 0.0) {
                return f64::NEG_INFINITY;
            }
            acc += 0.5 * m * (t.ln() + ln_sinh(2.0 * t));
        }
        acc
    }

    /// `ln Π ((α(H)/τ)(1 − e^{−4α(H)}))^{m_α/2}`, the part left after the
    /// exponentials and the powers of `τ` and 2 are taken out.
    pub(crate) fn ln_shifted(&self, h: &[f64], tau: f64) -> f64 {
        let mut acc = 0.0;
        for (alpha, m) in &self.roots {
            let t = dot(alpha, h);
            if !(t > 0.0) {
                return f64::NEG_INFINITY;
            }
            acc += 0.5 * m * ((t / tau).ln() + (-(-4.0 * t).exp_m1()).ln());
        }
        acc
    }
}

/// `ln Π_{α∈Σ⁺} (α(H) sinh 2α(H))^{m_α/2}`.
pub fn ln_chamber_weight(rs: &RootSystem, h: &EuclideanVector) -> Result<f64> {
    if h.dim() != rs.rank() {
        return Err(Error::DimensionMismatch { expected: rs.rank(), got: h.dim() });
    }
    if !h.is_finite() {
        return Err(Error::InvalidParameter(format!("non-finite point {h}")));
    }
    let scale = h.norm().max(1.0);
    for r in rs.positive_roots() {
        if r.vector.dot(h) < -1e-14 * scale * r.vector.norm() {
            return Err(Error::OutsideChamber);
        }
    }
    Ok(WeightTerms::new(rs).ln_full(h.coords()))
}

/// The chamber weight itself; exactly zero on the walls.
pub fn chamber_weight(rs: &RootSystem, h: &EuclideanVector) -> Result<f64> {
    Ok(ln_chamber_weight(rs, h)?.exp())
}

#[derive(Debug, Clone, PartialEq)]
pub(crate) enum Geometry {
    /// `H = h·u`, `h > 0`.
    Ray { u: Vec<f64> },
    /// Polar angles `φ₀ < φ < φ₀ + width`.
    Sector { phi0: f64, width: f64 },
}

impl Geometry {
    pub(crate) fn of(rs: &RootSystem) -> Result<Self> {
        let simple = rs.simple_roots();
        match rs.rank() {
            1 => Ok(Geometry::Ray { u: vec![simple[0].coords()[0].signum()] }),
            2 => {
                let (a1, a2) = (simple[0].coords(), simple[1].coords());
                // Wall of α₁ points into the side where α₂ is positive, and vice versa.
                let wall = |a: &[f64], other: &[f64]| {
                    let w = [-a[1], a[0]];
                    if dot(&w, other) > 0.0 { w } else { [a[1], -a[0]] }
                };
                let (w1, w2) = (wall(a1, a2), wall(a2, a1));
                let turn = (w1[0] * w2[1] - w1[1] * w2[0]).atan2(dot(&w1, &w2));
                if turn > 0.0 {
                    Ok(Geometry::Sector { phi0: w1[1].atan2(w1[0]), width: turn })
                } else {
                    Ok(Geometry::Sector { phi0: w2[1].atan2(w2[0]), width: -turn })
                }
            }
            r => Err(Error::UnsupportedRank(r)),
        }
    }

    /// Point at radius `r` and angular parameter `v ∈ [0, 1]`, with `ln dφ/dv`.
    fn polar(&self, r: f64, v: f64) -> ([f64; 2], f64) {
        match self {
            Geometry::Sector { phi0, width } => {
                let s = (FRAC_PI_2 * v).sin();
                let phi = phi0 + width * s * s;
                ([r * phi.cos(), r * phi.sin()], (width * FRAC_PI_2 * (PI * v).sin()).ln())
            }
            Geometry::Ray { .. } => unreachable!("polar map on a ray"),
        }
    }
}

/// Radial window `[lo, hi]` outside of which `ln_g` stays `drop` below its peak.
/// `None` when the function is `-inf` everywhere it was sampled.
fn scan_ray(ln_g: impl Fn(f64) -> f64, step: f64, drop: f64) -> Result<Option<Vec<f64>>> {
    let mut vals = Vec::new();
    let mut best = f64::NEG_INFINITY;
    let mut best_at = 0;
    for k in 1..=SCAN_MAX_STEPS {
        let v = ln_g(k as f64 * step);
        if v.is_nan() {
            return Err(Error::InvalidParameter(format!("integrand is NaN at radius {}", k as f64 * step)));
        }
        vals.push(v);
        if v > best {
            best = v;
            best_at = k;
        }
        let settled = k >= best_at + 4 && vals[vals.len() - 4..].iter().all(|&x| x < best - drop);
        if best > f64::NEG_INFINITY && settled {
            return Ok(Some(vals));
        }
        if best == f64::NEG_INFINITY && k >= 64 {
            return Ok(None);
        }
    }
    Err(Error::InvalidParameter("integrand does not decay along the chamber".into()))
}

/// First and last grid index (1-based radii `k·step`) with a value above `threshold`.
fn support(vals: &[f64], threshold: f64) -> Option<(usize, usize)> {
    let first = vals.iter().position(|&v| v >= threshold)?;
    let last = vals.iter().rposition(|&v| v >= threshold)?;
    Some((first + 1, last + 1))
}

/// Radial nodes `(r, ln(weight · dr/ds))`, using `r = s²` when the window starts at 0.
fn radial_nodes(lo: f64, hi: f64, panels: usize) -> Vec<(f64, f64)> {
    if lo == 0.0 {
        panel_nodes(0.0, hi.sqrt(), panels)
            .into_iter()
            .map(|(s, lw)| (s * s, lw + (2.0 * s).ln()))
            .collect()
    } else {
        panel_nodes(lo, hi, panels)
    }
}

/// `ln ∫_{chamber} e^{ln_g(H)} dH`. `width` is the length scale of the
/// integrand's peak and sets the scan step.
pub(crate) fn ln_chamber_integral(
    geometry: &Geometry,
    ln_g: &(dyn Fn(&[f64]) -> f64 + Sync),
    width: f64,
    cfg: &QuadratureConfig,
) -> Result<f64> {
    cfg.validate()?;
    let step = width / SCAN_STEPS_PER_WIDTH;
    let drop = cfg.log_drop();
    match geometry {
        Geometry::Ray { u } => {
            let line = |h: f64| -> f64 {
                let point: Vec<f64> = u.iter().map(|c| c * h).collect();
                ln_g(&point)
            };
            let Some(vals) = scan_ray(line, step, drop)? else {
                return Ok(f64::NEG_INFINITY);
            };
            let peak = vals.iter().copied().fold(f64::NEG_INFINITY, f64::max);
            let (first, last) = support(&vals, peak - drop).expect("peak lies above its own threshold");
            let lo = (first - 1) as f64 * step;
            let hi = (last + 1) as f64 * step;
            refine_log(4, cfg, |panels| {
                let terms: Vec<f64> =
                    radial_nodes(lo, hi, panels).par_iter().map(|&(h, lw)| line(h) + lw).collect();
                log_sum_exp(&terms)
            })
        }
        Geometry::Sector { .. } => {
            let at = |r: f64, v: f64| -> f64 {
                let (p, ln_dphi) = geometry.polar(r, v);
                ln_g(&p) + ln_dphi
            };
            let rays: Vec<Option<Vec<f64>>> = (0..SCAN_RAYS)
                .into_par_iter()
                .map(|i| {
                    let v = (i as f64 + 0.5) / SCAN_RAYS as f64;
                    scan_ray(|r| at(r, v) + r.ln(), step, drop)
                })
                .collect::<Result<_>>()?;
            let peak = rays
                .iter()
                .flatten()
                .flat_map(|vals| vals.iter().copied())
                .fold(f64::NEG_INFINITY, f64::max);
            if peak == f64::NEG_INFINITY {
                return Ok(f64::NEG_INFINITY);
            }
            let threshold = peak - drop;
            let (mut first, mut last) = (usize::MAX, 0);
            let (mut ray_lo, mut ray_hi) = (usize::MAX, 0);
            for (i, vals) in rays.iter().enumerate() {
                if let Some((f, l)) = vals.as_deref().and_then(|v| support(v, threshold)) {
                    first = first.min(f);
                    last = last.max(l);
                    ray_lo = ray_lo.min(i);
                    ray_hi = ray_hi.max(i);
                }
            }
            let lo = (first - 1) as f64 * step;
            let hi = (last + 1) as f64 * step;
            let n = SCAN_RAYS as f64;
            let v_lo = ((ray_lo as f64 - 1.5) / n).max(0.0);
            let v_hi = ((ray_hi as f64 + 2.5) / n).min(1.0);
            refine_log(4, cfg, |panels| {
                let angular = panel_nodes(v_lo, v_hi, panels);
                let partial: Vec<f64> = radial_nodes(lo, hi, panels)
                    .par_iter()
                    .map(|&(r, lw_r)| {
                        let row: Vec<f64> =
                            angular.iter().map(|&(v, lw_v)| at(r, v) + r.ln() + lw_r + lw_v).collect();
                        log_sum_exp(&row)
                    })
                    .collect();
                log_sum_exp(&partial)
            })
        }
    }
}
