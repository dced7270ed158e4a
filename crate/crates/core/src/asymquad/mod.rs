//! Chamber integrals, rank-one spherical functions and the two asymptotic
//! regimes of `q_δ(τ)`.
//!
//! Integrals are carried as logarithms throughout.

mod chamber;
mod integrals;
mod quad;
mod rank1;
mod verify;
mod watson;

pub use chamber::{chamber_weight, ln_chamber_weight, ChamberFunction, Exponential, One};
pub use integrals::{
    leading_infinity, log_i_mu, log_i_mu_direct, log_i_mu_transformed, log_q_transformed, q_tau,
    TRANSFORM_MIN_TAU,
};
pub use quad::{integrate_1d, integrate_log_1d, QuadratureConfig};
pub use rank1::{b_delta_rank1, hypergeometric_poly, spherical_rank1, Rank1Data, SphericalFunction};
pub use verify::{
    fit_line, verify_tau_infinity, verify_tau_zero, AsymptoticReport, Regime, INFINITY_GAP_TOL,
    TAU_INFINITY_GRID, TAU_ZERO_GRID, ZERO_A_TOL, ZERO_B_REL_TOL,
};
pub use watson::{
    angular_integral, gaussian_cone_moment, gaussian_tail_bound, second_order_term, watson_expand,
    watson_partial_sum,
};
