//! Numerical checks of projective flatness for compact symmetric spaces.
//!
//! A compact symmetric space is described by its restricted root system and
//! multiplicities ([`rootsys`]). From that data the crate evaluates the
//! Harish-Chandra c-function and the Gamma-product invariant `Q`, whose
//! constancy over the spherical weights singles out the group manifolds
//! ([`hcfun`]), and integrates Gaussian-weighted chamber integrals to test the
//! small- and large-`τ` asymptotics in rank one ([`asymquad`]). [`cli`] holds
//! the catalog format and report serialization used by the `symflat` binary.
//!
//! ```
//! use symflat::hcfun::{q_invariance_test, VERDICT_TOL};
//! use symflat::rootsys::{build_root_system, Multiplicities, RootType};
//!
//! let su3 = build_root_system(RootType::A, 2, &Multiplicities::uniform(2.0))?;
//! let report = q_invariance_test(&su3, su3.dominant_weights(3)?, VERDICT_TOL)?;
//! assert!(report.is_constant && report.group_manifold_predicted);
//! # Ok::<(), symflat::Error>(())
//! ```

pub mod asymquad;
pub mod cli;
pub mod error;
pub mod hcfun;
pub mod rootsys;

pub use error::{Error, Result};
