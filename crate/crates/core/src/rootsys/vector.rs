use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// A point of the rank-r Euclidean space, in orthonormal coordinates.
#[derive(Debug, Clone, PartialEq)]
pub struct EuclideanVector {
    coords: Vec<f64>,
}

impl EuclideanVector {
    pub fn new(coords: Vec<f64>) -> Self {
        Self { coords }
    }

    pub fn zeros(dim: usize) -> Self {
        Self { coords: vec![0.0; dim] }
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn is_finite(&self) -> bool {
        self.coords.iter().all(|c| c.is_finite())
    }

    pub fn dot(&self, other: &Self) -> f64 {
        dot(&self.coords, &other.coords)
    }

    pub fn norm_sq(&self) -> f64 {
        self.dot(self)
    }

    pub fn norm(&self) -> f64 {
        self.norm_sq().sqrt()
    }

    pub fn is_zero(&self, tol: f64) -> bool {
        self.coords.iter().all(|c| c.abs() <= tol)
    }

    /// `α₀ = α / ⟨α, α⟩`, the vector whose pairings give coroot values.
    pub fn coroot(&self) -> Self {
        self * (1.0 / self.norm_sq())
    }

    /// Reflection of `self` in the hyperplane orthogonal to `root`.
    pub fn reflect(&self, root: &Self) -> Self {
        let k = 2.0 * self.dot(root) / root.norm_sq();
        self - &(root * k)
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.dim() == other.dim()
            && self
                .coords
                .iter()
                .zip(&other.coords)
                .all(|(a, b)| (a - b).abs() <= tol)
    }
}

pub(crate) fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

impl fmt::Display for EuclideanVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl Add for &EuclideanVector {
    type Output = EuclideanVector;
    fn add(self, rhs: Self) -> EuclideanVector {
        assert_eq!(self.dim(), rhs.dim());
        EuclideanVector::new(self.coords.iter().zip(&rhs.coords).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &EuclideanVector {
    type Output = EuclideanVector;
    fn sub(self, rhs: Self) -> EuclideanVector {
        assert_eq!(self.dim(), rhs.dim());
        EuclideanVector::new(self.coords.iter().zip(&rhs.coords).map(|(a, b)| a - b).collect())
    }
}

impl Mul<f64> for &EuclideanVector {
    type Output = EuclideanVector;
    fn mul(self, k: f64) -> EuclideanVector {
        EuclideanVector::new(self.coords.iter().map(|a| a * k).collect())
    }
}

impl Neg for &EuclideanVector {
    type Output = EuclideanVector;
    fn neg(self) -> EuclideanVector {
        self * -1.0
    }
}

impl From<Vec<f64>> for EuclideanVector {
    fn from(coords: Vec<f64>) -> Self {
        Self::new(coords)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reflection_is_an_involution() {
        let a = EuclideanVector::new(vec![1.0, -1.0]);
        let v = EuclideanVector::new(vec![0.3, 2.0]);
        let back = v.reflect(&a).reflect(&a);
        assert!(back.approx_eq(&v, 1e-15));
        assert!(a.reflect(&a).approx_eq(&-&a, 1e-15));
    }

    #[test]
    fn coroot_pairs_to_one() {
        let a = EuclideanVector::new(vec![3.0, 4.0]);
        assert!((a.dot(&a.coroot()) - 1.0).abs() < 1e-15);
    }
}
