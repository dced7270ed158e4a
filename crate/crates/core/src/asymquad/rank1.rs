//! Rank-one spherical functions as terminating hypergeometric polynomials.
//!
//! With `β` the longest positive root, `m_β` its multiplicity and `m_half`
//! that of `β/2` (zero when `β/2` is not a root), the spherical function of
//! highest weight `nβ` is
//! `f(exp 2H) = F(a, −n; c; −sinh² β(H))`, `a = m_half/2 + m_β + n`, `c = m/2`.

use super::chamber::{ln_sinh, ChamberFunction};
use super::quad::log_sum_exp;
use crate::error::{Error, Result};
use crate::rootsys::{dot, EuclideanVector, RootSystem};

/// `F(a, −n; c; z)` summed term by term. `c` must avoid `0, −1, …, 1 − n`.
pub fn hypergeometric_poly(a: f64, n: u32, c: f64, z: f64) -> f64 {
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 0..n {
        let k = k as f64;
        term *= (a + k) * (k - n as f64) / ((c + k) * (k + 1.0)) * z;
        sum += term;
    }
    sum
}

/// `ln F(a, −n; c; −e^{ln_x})` for `a, c > 0`, where every term is positive.
pub(crate) fn ln_hypergeometric_poly_neg(a: f64, n: u32, c: f64, ln_x: f64) -> f64 {
    let mut terms = Vec::with_capacity(n as usize + 1);
    let mut ln_term = 0.0;
    terms.push(0.0);
    for k in 0..n {
        let k = k as f64;
        ln_term += ((a + k) * (n as f64 - k) / ((c + k) * (k + 1.0))).ln() + ln_x;
        terms.push(ln_term);
    }
    log_sum_exp(&terms)
}

fn ac(m_beta: f64, m_half: f64, n: u32) -> (f64, f64) {
    (0.5 * m_half + m_beta + n as f64, 0.5 * (1.0 + m_beta + m_half))
}

/// `f(exp 2H)` at `u = β(H)`.
pub fn spherical_rank1(m_beta: u32, m_half: u32, n: u32, u: f64) -> f64 {
    let (a, c) = ac(m_beta as f64, m_half as f64, n);
    let s = u.sinh();
    hypergeometric_poly(a, n, c, -s * s)
}

/// `b_δ` two ways: `(a n / c)‖β‖²` and `2(‖λ+ρ‖² − ‖ρ‖²)/m` with `λ = nβ`.
pub fn b_delta_rank1(m_beta: u32, m_half: u32, n: u32, root_norm_sq: f64) -> (f64, f64) {
    let (mb, mh) = (m_beta as f64, m_half as f64);
    let (a, c) = ac(mb, mh, n);
    let series = a * n as f64 / c * root_norm_sq;
    let m = 1.0 + mb + mh;
    let rho = 0.5 * (mb + 0.5 * mh);
    let lam_rho = n as f64 + rho;
    let weight = 2.0 * (lam_rho * lam_rho - rho * rho) * root_norm_sq / m;
    (series, weight)
}

/// The data of a rank-one system that the spherical function depends on.
#[derive(Debug, Clone, PartialEq)]
pub struct Rank1Data {
    /// The longest positive root.
    pub beta: EuclideanVector,
    pub m_beta: f64,
    /// Multiplicity of `β/2`, zero if it is not a root.
    pub m_half: f64,
}

impl Rank1Data {
    pub fn from_root_system(rs: &RootSystem) -> Result<Self> {
        if rs.rank() != 1 {
            return Err(Error::UnsupportedRank(rs.rank()));
        }
        let simple = rs.simple_root_indices()[0];
        let alpha = &rs.positive_roots()[simple];
        let double = rs.double_multiplicity(simple);
        Ok(if double > 0.0 {
            Rank1Data { beta: &alpha.vector * 2.0, m_beta: double, m_half: alpha.multiplicity }
        } else {
            Rank1Data { beta: alpha.vector.clone(), m_beta: alpha.multiplicity, m_half: 0.0 }
        })
    }

    pub fn dimension(&self) -> f64 {
        1.0 + self.m_beta + self.m_half
    }

    /// `(a, c)` of the hypergeometric form at weight `nβ`.
    pub fn parameters(&self, n: u32) -> (f64, f64) {
        ac(self.m_beta, self.m_half, n)
    }

    pub fn highest_weight(&self, n: u32) -> EuclideanVector {
        &self.beta * n as f64
    }

    /// `(a n / c)‖β‖²`.
    pub fn b_delta(&self, n: u32) -> f64 {
        let (a, c) = self.parameters(n);
        a * n as f64 / c * self.beta.norm_sq()
    }

    pub fn spherical_function(&self, n: u32) -> SphericalFunction {
        let (a, c) = self.parameters(n);
        SphericalFunction { beta: self.beta.coords().to_vec(), n, a, c }
    }
}

/// `H ↦ f(exp 2H)` for one rank-one highest weight, evaluated in log space.
#[derive(Debug, Clone, PartialEq)]
pub struct SphericalFunction {
    beta: Vec<f64>,
    n: u32,
    a: f64,
    c: f64,
}

impl ChamberFunction for SphericalFunction {
    fn ln_value(&self, h: &[f64]) -> f64 {
        let u = dot(&self.beta, h).abs();
        if self.n == 0 || u == 0.0 {
            return 0.0;
        }
        ln_hypergeometric_poly_neg(self.a, self.n, self.c, 2.0 * ln_sinh(u))
    }
}
