//! Harish-Chandra's c-function at `-i(λ+ρ)` through the Gindikin–Karpelevič
//! product over the indivisible positive roots.
//!
//! The overall constant of the product is never formed. Every value is the
//! ratio of the product at `λ` to the product at `λ = 0`, which pins
//! `c(-iρ) = 1`.

use std::f64::consts::LN_2;

use super::gamma::{ln_gamma_pole_checked as lng, ln_gamma_ratio};
use crate::error::{Error, Result};
use crate::rootsys::{EuclideanVector, RootSystem, SphericalWeight};

/// `⟨λ + ρ, α₀⟩` for each indivisible positive root, with `(m_α, m_{2α})`.
pub(crate) fn shifted_pairings(rs: &RootSystem, lambda: &EuclideanVector) -> Vec<(f64, f64, f64)> {
    let shifted = lambda + &rs.rho();
    rs.indivisible_positive()
        .into_iter()
        .map(|(alpha, m, m2)| (shifted.dot(&alpha.coroot()), m, m2))
        .collect()
}

/// Log of one factor of the duplication-reduced product, at pairing `x`.
fn ln_reduced_factor(x: f64, m: f64, m2: f64) -> Result<f64> {
    if !(x > 0.0) {
        return Err(Error::NonDominant(x));
    }
    Ok(-ln_gamma_ratio(x, 0.5 * m)? - ln_gamma_ratio(0.25 * m + 0.5 * x, 0.5 * m2)?)
}

/// Log of one factor of the raw Gindikin–Karpelevič product at `ν = -i(λ+ρ)`.
fn ln_raw_factor(x: f64, m: f64, m2: f64) -> Result<f64> {
    if !(x > 0.0) {
        return Err(Error::NonDominant(x));
    }
    Ok(-x * LN_2 + lng(x)? - lng(0.5 * (0.5 * m + 1.0 + x))? - lng(0.5 * (0.5 * m + m2 + x))?)
}

fn ln_normalized(
    rs: &RootSystem,
    lambda: &EuclideanVector,
    factor: fn(f64, f64, f64) -> Result<f64>,
) -> Result<f64> {
    let at = |v: &EuclideanVector| -> Result<f64> {
        shifted_pairings(rs, v).into_iter().map(|(x, m, m2)| factor(x, m, m2)).sum()
    };
    Ok(at(lambda)? - at(&EuclideanVector::zeros(rs.rank()))?)
}

/// `ln c(-iλ - iρ)`, normalized so that the value at `λ = 0` is exactly zero.
pub fn ln_c_function(rs: &RootSystem, lambda: &SphericalWeight) -> Result<f64> {
    ln_c_at(rs, lambda.vector())
}

pub(crate) fn ln_c_at(rs: &RootSystem, lambda: &EuclideanVector) -> Result<f64> {
    if lambda.dim() != rs.rank() {
        return Err(Error::DimensionMismatch { expected: rs.rank(), got: lambda.dim() });
    }
    ln_normalized(rs, lambda, ln_reduced_factor)
}

pub fn c_function(rs: &RootSystem, lambda: &SphericalWeight) -> Result<f64> {
    Ok(ln_c_function(rs, lambda)?.exp())
}

/// The same value computed from the undoubled product, i.e. before the
/// duplication formula is applied. Kept as an independent route.
pub fn c_function_raw_product(rs: &RootSystem, lambda: &SphericalWeight) -> Result<f64> {
    Ok(ln_normalized(rs, lambda.vector(), ln_raw_factor)?.exp())
}

/// `π(ρ) / π(λ + ρ)` with `π(ν) = Π_{α∈Σ⁺} ⟨ν, α⟩`; only valid on group manifolds.
pub fn group_c_closed_form(rs: &RootSystem, lambda: &SphericalWeight) -> Result<f64> {
    if !rs.is_group_manifold() {
        return Err(Error::NotGroupManifold);
    }
    let rho = rs.rho();
    let shifted = lambda.vector() + &rho;
    let ln_ratio: f64 = rs
        .positive_roots()
        .iter()
        .map(|r| rho.dot(&r.vector).ln() - shifted.dot(&r.vector).ln())
        .sum();
    Ok(ln_ratio.exp())
}

/// The constants `(A, B)` that a projectively flat field would have to show
/// for highest weight `λ` at large `τ`.
///
/// `A = c(-iλ-iρ) Π⟨λ+ρ,α⟩^{m_α/2} / Π⟨ρ,α⟩^{m_α/2}` and
/// `B = ‖λ+ρ‖² − ‖ρ‖²`. `A` is scale invariant, `B` scales with the metric.
pub fn predicted_constants(rs: &RootSystem, lambda: &SphericalWeight) -> Result<(f64, f64)> {
    let rho = rs.rho();
    let shifted = lambda.vector() + &rho;
    let mut ln_a = ln_c_function(rs, lambda)?;
    for r in rs.positive_roots() {
        let num = shifted.dot(&r.vector);
        let den = rho.dot(&r.vector);
        if !(num > 0.0 && den > 0.0) {
            return Err(Error::NonDominant(num.min(den)));
        }
        ln_a += 0.5 * r.multiplicity * (num.ln() - den.ln());
    }
    Ok((ln_a.exp(), shifted.norm_sq() - rho.norm_sq()))
}
