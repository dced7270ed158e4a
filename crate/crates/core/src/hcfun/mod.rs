//! Gamma-function machinery, the c-function, the invariant `Q` and the
//! flatness classifier.
//!
//! All Gamma products are accumulated as sums of `ln Γ` and exponentiated
//! once at the end.

mod cfun;
mod gamma;
mod qinv;

pub use cfun::{
    c_function, c_function_raw_product, group_c_closed_form, ln_c_function, predicted_constants,
};
pub use gamma::log_gamma;
pub use qinv::{
    classify_group_manifold, f_factor, g_product_probe, ln_f_factor, ln_q_of_weight, q_invariance_test,
    q_of_weight, relative_spread, QInvarianceReport, IDENTITY_TOL, VERDICT_TOL,
};
