use nalgebra::DMatrix;

use super::system::RootSystem;
use super::vector::EuclideanVector;
use crate::error::{Error, Result};

/// A dominant element `λ = Σ n_j μ_j` of the spherical weight lattice `P₊`.
#[derive(Debug, Clone, PartialEq)]
pub struct SphericalWeight {
    coeffs: Vec<u32>,
    vector: EuclideanVector,
}

impl SphericalWeight {
    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn vector(&self) -> &EuclideanVector {
        &self.vector
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&n| n == 0)
    }
}

impl RootSystem {
    /// Solve `⟨μ_j, β_{k,0}⟩ = δ_{jk}` against the unmultipliable simple basis.
    pub fn fundamental_spherical_weights(&self) -> Result<Vec<EuclideanVector>> {
        let r = self.rank();
        let basis = self.unmultipliable_basis();
        let m = DMatrix::from_fn(r, r, |k, i| basis[k].coroot().coords()[i]);
        let inv = m.try_inverse().ok_or(Error::SingularBasis)?;
        let weights: Vec<EuclideanVector> = (0..r)
            .map(|j| EuclideanVector::new(inv.column(j).iter().copied().collect()))
            .collect();
        if weights.iter().all(EuclideanVector::is_finite) {
            Ok(weights)
        } else {
            Err(Error::SingularBasis)
        }
    }

    pub fn spherical_weight(&self, coeffs: &[i64]) -> Result<SphericalWeight> {
        if coeffs.len() != self.rank() {
            return Err(Error::DimensionMismatch { expected: self.rank(), got: coeffs.len() });
        }
        let coeffs = coeffs
            .iter()
            .map(|&n| u32::try_from(n).map_err(|_| Error::NegativeCoefficient(n)))
            .collect::<Result<Vec<u32>>>()?;
        let mu = self.fundamental_spherical_weights()?;
        let vector = coeffs
            .iter()
            .zip(&mu)
            .fold(EuclideanVector::zeros(self.rank()), |acc, (&n, m)| &acc + &(m * n as f64));
        Ok(SphericalWeight { coeffs, vector })
    }

    /// `n · μ_j`.
    pub fn ray_weight(&self, j: usize, n: u32) -> Result<SphericalWeight> {
        if j >= self.rank() {
            return Err(Error::IndexOutOfRange { index: j, rank: self.rank() });
        }
        let mut coeffs = vec![0i64; self.rank()];
        coeffs[j] = n as i64;
        self.spherical_weight(&coeffs)
    }

    /// Every weight with all coefficients in `0..=max_coeff`, in lexicographic order.
    pub fn dominant_weights(&self, max_coeff: u32) -> Result<Vec<SphericalWeight>> {
        let r = self.rank();
        let base = max_coeff as u64 + 1;
        let total = base.checked_pow(r as u32).ok_or_else(|| {
            Error::InvalidParameter("weight sweep too large".into())
        })?;
        (0..total)
            .map(|mut idx| {
                let mut coeffs = vec![0i64; r];
                for c in coeffs.iter_mut().rev() {
                    *c = (idx % base) as i64;
                    idx /= base;
                }
                self.spherical_weight(&coeffs)
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::{build_root_system, Multiplicities, RootType};

    fn a(rank: usize, m: f64) -> RootSystem {
        build_root_system(RootType::A, rank, &Multiplicities::uniform(m)).unwrap()
    }

    #[test]
    fn a1_fundamental_weight_is_beta() {
        let rs = a(1, 2.0);
        let mu = rs.fundamental_spherical_weights().unwrap();
        assert!(mu[0].approx_eq(&rs.positive_roots()[0].vector, 1e-15));
    }

    #[test]
    fn a2_fundamental_weights_are_twice_classical() {
        let rs = a(2, 2.0);
        let mu = rs.fundamental_spherical_weights().unwrap();
        let simple = rs.simple_roots();
        for (j, m) in mu.iter().enumerate() {
            for (k, s) in simple.iter().enumerate() {
                let expected = if j == k { 2.0 } else { 0.0 };
                assert!((m.dot(s) - expected).abs() < 1e-14);
            }
        }
    }

    #[test]
    fn bc1_fundamental_weight_is_beta() {
        let m = Multiplicities { short: Some(2.0), long: None, double: Some(1.0) };
        let rs = build_root_system(RootType::BC, 1, &m).unwrap();
        let mu = rs.fundamental_spherical_weights().unwrap();
        assert!(mu[0].approx_eq(&rs.unmultipliable_basis()[0], 1e-15));
    }

    #[test]
    fn spherical_weight_examples() {
        let rs = a(1, 2.0);
        assert!(rs.spherical_weight(&[0]).unwrap().vector().is_zero(0.0));
        let beta = rs.positive_roots()[0].vector.clone();
        assert!(rs.spherical_weight(&[3]).unwrap().vector().approx_eq(&(&beta * 3.0), 1e-14));
        assert!(matches!(rs.spherical_weight(&[-1]), Err(Error::NegativeCoefficient(-1))));
        assert!(matches!(rs.spherical_weight(&[1, 1]), Err(Error::DimensionMismatch { .. })));

        let rs = a(2, 2.0);
        let w = rs.spherical_weight(&[1, 1]).unwrap();
        for s in rs.simple_roots() {
            assert!((w.vector().dot(&s) - 2.0).abs() < 1e-14);
        }
    }

    #[test]
    fn sweep_is_lexicographic_and_complete() {
        let rs = a(2, 1.0);
        let ws = rs.dominant_weights(2).unwrap();
        assert_eq!(ws.len(), 9);
        assert_eq!(ws[0].coeffs(), &[0, 0]);
        assert_eq!(ws[1].coeffs(), &[0, 1]);
        assert_eq!(ws[8].coeffs(), &[2, 2]);
    }
}
