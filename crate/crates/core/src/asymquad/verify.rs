//! Checks of the two asymptotic regimes for rank-one spaces.
//!
//! Both compare `q_δ(τ)` with `q_{δ₀}(τ)` on a fixed grid and fit
//! `ln(q_δ/q_{δ₀}) ≈ ln A + Bτ` by ordinary least squares.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use super::chamber::One;
use super::integrals::{leading_infinity, log_q_transformed, q_tau};
use super::quad::QuadratureConfig;
use super::rank1::Rank1Data;
use crate::error::{Error, Result};
use crate::hcfun::{ln_c_function, predicted_constants};
use crate::rootsys::RootSystem;

pub const TAU_ZERO_GRID: [f64; 10] = [0.01, 0.02, 0.03, 0.04, 0.05, 0.06, 0.07, 0.08, 0.09, 0.1];
pub const TAU_INFINITY_GRID: [f64; 4] = [25.0, 50.0, 100.0, 200.0];

/// Small-τ pass band for `A`.
pub const ZERO_A_TOL: f64 = 1e-2;
/// Small-τ pass band for `B`, relative to the expected value.
pub const ZERO_B_REL_TOL: f64 = 0.02;
/// Largest accepted `|ln q − ln predicted|` at the end of the large-τ grid.
pub const INFINITY_GAP_TOL: f64 = 0.02;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Regime {
    Zero,
    Infinity,
}

impl Regime {
    pub fn as_str(self) -> &'static str {
        match self {
            Regime::Zero => "zero",
            Regime::Infinity => "infinity",
        }
    }
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Regime {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "zero" | "0" => Ok(Regime::Zero),
            "infinity" | "inf" => Ok(Regime::Infinity),
            _ => Err(Error::InvalidParameter(format!("unknown regime `{s}` (zero|infinity)"))),
        }
    }
}

/// `log_predicted` is the predicted `ln q_δ(τ)`: `ln q_{δ₀} + Bτ` for the
/// small-τ regime, the leading term times `c(−iλ−iρ)` for the large one.
#[derive(Debug, Clone, PartialEq)]
pub struct AsymptoticReport {
    pub regime: Regime,
    pub tau_grid: Vec<f64>,
    pub log_q: Vec<f64>,
    pub log_predicted: Vec<f64>,
    pub fitted_a: f64,
    pub fitted_b: f64,
    pub expected_a: f64,
    pub expected_b: f64,
    pub passed: bool,
}

impl AsymptoticReport {
    pub fn gaps(&self) -> Vec<f64> {
        self.log_q.iter().zip(&self.log_predicted).map(|(q, p)| q - p).collect()
    }
}

/// Least-squares `(intercept, slope)` of `y ≈ intercept + slope·x`.
pub fn fit_line(x: &[f64], y: &[f64]) -> Result<(f64, f64)> {
    if x.len() != y.len() || x.len() < 2 {
        return Err(Error::InvalidParameter("a line fit needs at least two paired points".into()));
    }
    let n = x.len() as f64;
    let mx = x.iter().sum::<f64>() / n;
    let my = y.iter().sum::<f64>() / n;
    let sxx: f64 = x.iter().map(|xi| (xi - mx) * (xi - mx)).sum();
    let sxy: f64 = x.iter().zip(y).map(|(xi, yi)| (xi - mx) * (yi - my)).sum();
    if sxx == 0.0 {
        return Err(Error::InvalidParameter("a line fit needs distinct abscissae".into()));
    }
    let slope = sxy / sxx;
    Ok((my - slope * mx, slope))
}

fn log_ratio_fit(grid: &[f64], log_q: &[f64], log_q0: &[f64]) -> Result<(f64, f64)> {
    let ratio: Vec<f64> = log_q.iter().zip(log_q0).map(|(a, b)| a - b).collect();
    let (ln_a, b) = fit_line(grid, &ratio)?;
    Ok((ln_a.exp(), b))
}

/// Small-τ regime: `q_δ/q_{δ₀} = 1 + (m/2) b_δ τ + O(τ²)`.
pub fn verify_tau_zero(rs: &RootSystem, n: u32, cfg: &QuadratureConfig) -> Result<AsymptoticReport> {
    cfg.validate()?;
    let data = Rank1Data::from_root_system(rs)?;
    let f = data.spherical_function(n);
    let pairs: Vec<(f64, f64)> = TAU_ZERO_GRID
        .par_iter()
        .map(|&tau| Ok((q_tau(rs, &f, tau, cfg)?, q_tau(rs, &One, tau, cfg)?)))
        .collect::<Result<_>>()?;
    let (log_q, log_q0): (Vec<f64>, Vec<f64>) = pairs.into_iter().unzip();
    let (fitted_a, fitted_b) = log_ratio_fit(&TAU_ZERO_GRID, &log_q, &log_q0)?;
    let expected_b = 0.5 * data.dimension() * data.b_delta(n);
    let log_predicted = TAU_ZERO_GRID.iter().zip(&log_q0).map(|(t, q0)| q0 + expected_b * t).collect();
    let passed = (fitted_a - 1.0).abs() <= ZERO_A_TOL
        && (fitted_b - expected_b).abs() <= ZERO_B_REL_TOL * expected_b.abs();
    Ok(AsymptoticReport {
        regime: Regime::Zero,
        tau_grid: TAU_ZERO_GRID.to_vec(),
        log_q,
        log_predicted,
        fitted_a,
        fitted_b,
        expected_a: 1.0,
        expected_b,
        passed,
    })
}

/// Large-τ regime: `q_δ(τ) ~ c(−iλ−iρ) · leading term of I_λ(τ)`.
///
/// Passes when `|gap|` never grows along the grid by more than the
/// quadrature noise and ends within `INFINITY_GAP_TOL`.
pub fn verify_tau_infinity(rs: &RootSystem, n: u32, cfg: &QuadratureConfig) -> Result<AsymptoticReport> {
    cfg.validate()?;
    let data = Rank1Data::from_root_system(rs)?;
    let weight = rs.spherical_weight(&[n as i64])?;
    let lambda = weight.vector();
    let rho = rs.rho();
    let shift = lambda + &rho;
    let f = data.spherical_function(n);
    let (ln_coeff, power, rate) = leading_infinity(rs, lambda)?;
    let ln_c = ln_c_function(rs, &weight)?;
    let pairs: Vec<(f64, f64)> = TAU_INFINITY_GRID
        .par_iter()
        .map(|&tau| {
            Ok((
                log_q_transformed(rs, &f, &shift, tau, cfg)?,
                log_q_transformed(rs, &One, &rho, tau, cfg)?,
            ))
        })
        .collect::<Result<_>>()?;
    let (log_q, log_q0): (Vec<f64>, Vec<f64>) = pairs.into_iter().unzip();
    let log_predicted: Vec<f64> = TAU_INFINITY_GRID
        .iter()
        .map(|&t| ln_c + ln_coeff + power * t.ln() + rate * t)
        .collect();
    let (fitted_a, fitted_b) = log_ratio_fit(&TAU_INFINITY_GRID, &log_q, &log_q0)?;
    let (expected_a, expected_b) = predicted_constants(rs, &weight)?;
    let gaps: Vec<f64> = log_q.iter().zip(&log_predicted).map(|(q, p)| (q - p).abs()).collect();
    let noise = 10.0 * cfg.rel_tol;
    let shrinking = gaps.windows(2).all(|w| w[1] <= w[0] + noise);
    let passed = shrinking && gaps.last().is_some_and(|g| *g <= INFINITY_GAP_TOL);
    Ok(AsymptoticReport {
        regime: Regime::Infinity,
        tau_grid: TAU_INFINITY_GRID.to_vec(),
        log_q,
        log_predicted,
        fitted_a,
        fitted_b,
        expected_a,
        expected_b,
        passed,
    })
}
