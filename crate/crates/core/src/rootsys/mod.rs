//! Restricted root systems with multiplicities.
//!
//! Positive systems are stored in orthonormal coordinates of the rank-r
//! Euclidean space. Everything here is immutable once built.

mod system;
mod vector;
mod weights;

pub use system::{build_root_system, Multiplicities, PositiveRoot, RootClass, RootSystem, RootType};
pub use vector::EuclideanVector;
pub use weights::SphericalWeight;

pub(crate) use vector::dot;
