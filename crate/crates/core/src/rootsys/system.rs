use std::fmt;
use std::str::FromStr;

use super::vector::EuclideanVector;
use crate::error::{Error, Result};

/// Relative tolerance used when matching root vectors against each other.
const MATCH_TOL: f64 = 1e-9;

/// Labels of the irreducible (possibly non-reduced) types we can realize.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RootType {
    A,
    B,
    C,
    D,
    BC,
    G2,
    F4,
}

impl RootType {
    pub fn as_str(self) -> &'static str {
        match self {
            RootType::A => "A",
            RootType::B => "B",
            RootType::C => "C",
            RootType::D => "D",
            RootType::BC => "BC",
            RootType::G2 => "G2",
            RootType::F4 => "F4",
        }
    }

    fn rank_ok(self, rank: usize) -> bool {
        match self {
            RootType::A | RootType::BC => rank >= 1,
            RootType::B | RootType::C => rank >= 2,
            RootType::D => rank >= 3,
            RootType::G2 => rank == 2,
            RootType::F4 => rank == 4,
        }
    }

    /// Multiplicity classes (Weyl orbits of roots) present for this type and rank.
    pub fn classes(self, rank: usize) -> &'static [RootClass] {
        use RootClass::*;
        match self {
            RootType::A | RootType::D => &[Short],
            RootType::B | RootType::C | RootType::G2 | RootType::F4 => &[Short, Long],
            RootType::BC if rank == 1 => &[Short, Double],
            RootType::BC => &[Short, Long, Double],
        }
    }
}

impl fmt::Display for RootType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for RootType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(RootType::A),
            "B" => Ok(RootType::B),
            "C" => Ok(RootType::C),
            "D" => Ok(RootType::D),
            "BC" => Ok(RootType::BC),
            "G2" | "G" => Ok(RootType::G2),
            "F4" | "F" => Ok(RootType::F4),
            _ => Err(Error::UnknownRootType(s.to_string())),
        }
    }
}

/// Weyl orbit of a root in the standard realizations.
///
/// Simply laced types only have `Short`. For `BC` the classes are the
/// short roots `e_i`, the long roots `e_i ± e_j` (rank ≥ 2) and the
/// doubled roots `2e_i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RootClass {
    Short,
    Long,
    Double,
}

impl RootClass {
    pub fn as_str(self) -> &'static str {
        match self {
            RootClass::Short => "short",
            RootClass::Long => "long",
            RootClass::Double => "double",
        }
    }
}

impl fmt::Display for RootClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Per-orbit multiplicities handed to [`build_root_system`].
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct Multiplicities {
    pub short: Option<f64>,
    pub long: Option<f64>,
    pub double: Option<f64>,
}

impl Multiplicities {
    /// The same multiplicity on every root (the `all` key of simply laced types).
    pub fn uniform(m: f64) -> Self {
        Self { short: Some(m), long: Some(m), double: None }
    }

    pub fn short_long(short: f64, long: f64) -> Self {
        Self { short: Some(short), long: Some(long), double: None }
    }

    pub fn get(&self, class: RootClass) -> Option<f64> {
        match class {
            RootClass::Short => self.short,
            RootClass::Long => self.long,
            RootClass::Double => self.double,
        }
    }

    /// Resolve to the exact set of classes used by `ty` at `rank`.
    ///
    /// In rank-one `BC` there are no `e_i ± e_j` roots, so a `long` value
    /// names the doubled root.
    fn resolve(&self, ty: RootType, rank: usize) -> Result<Vec<(RootClass, f64)>> {
        let mut given = *self;
        let uniform = matches!(ty, RootType::A | RootType::D)
            && given.double.is_none()
            && given.short.is_some()
            && given.long == given.short;
        if uniform {
            given.long = None;
        }
        if ty == RootType::BC && rank == 1 {
            match (given.long, given.double) {
                (Some(l), Some(d)) if l != d => {
                    return Err(Error::InvalidParameter(
                        "rank-one BC: `long` and `double` both given and different".into(),
                    ))
                }
                (Some(l), _) => {
                    given.double = Some(l);
                    given.long = None;
                }
                _ => {}
            }
        }
        let classes = ty.classes(rank);
        for class in [RootClass::Short, RootClass::Long, RootClass::Double] {
            if given.get(class).is_some() && !classes.contains(&class) {
                return Err(Error::InvalidParameter(format!(
                    "type {ty}{rank} has no {class} roots"
                )));
            }
        }
        classes
            .iter()
            .map(|&class| {
                let m = given
                    .get(class)
                    .ok_or_else(|| Error::MissingMultiplicity(class.to_string()))?;
                if !(m.is_finite() && m > 0.0) {
                    return Err(Error::InvalidMultiplicity { class: class.to_string(), value: m });
                }
                Ok((class, m))
            })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PositiveRoot {
    pub vector: EuclideanVector,
    pub multiplicity: f64,
}

/// A positive system of a (possibly non-reduced) root system together with
/// a Weyl-invariant multiplicity function.
#[derive(Debug, Clone, PartialEq)]
pub struct RootSystem {
    rank: usize,
    roots: Vec<PositiveRoot>,
    geometric: bool,
    label: Option<(RootType, usize)>,
    simple: Vec<usize>,
    double_of: Vec<Option<usize>>,
    half_of: Vec<Option<usize>>,
}

impl RootSystem {
    /// Validate and assemble a positive system given explicitly.
    ///
    /// The list must be closed under the simple reflections (up to sign),
    /// carry a Weyl-invariant multiplicity, and contain no chains `α, 2α, 4α`.
    pub fn from_roots(rank: usize, roots: Vec<(EuclideanVector, f64)>) -> Result<Self> {
        Self::assemble(rank, roots, None)
    }

    fn assemble(
        rank: usize,
        roots: Vec<(EuclideanVector, f64)>,
        label: Option<(RootType, usize)>,
    ) -> Result<Self> {
        if rank == 0 {
            return Err(Error::InvalidRootSystem("rank must be positive".into()));
        }
        if roots.is_empty() {
            return Err(Error::InvalidRootSystem("no positive roots".into()));
        }
        let scale = roots.iter().map(|(v, _)| v.norm()).fold(0.0, f64::max);
        let tol = MATCH_TOL * scale.max(1.0);
        for (v, m) in &roots {
            if v.dim() != rank {
                return Err(Error::DimensionMismatch { expected: rank, got: v.dim() });
            }
            if !v.is_finite() {
                return Err(Error::InvalidRootSystem(format!("non-finite root {v}")));
            }
            if v.is_zero(tol) {
                return Err(Error::InvalidRootSystem("zero vector in root list".into()));
            }
            if !(m.is_finite() && *m > 0.0) {
                return Err(Error::InvalidMultiplicity { class: format!("{v}"), value: *m });
            }
        }
        let roots: Vec<PositiveRoot> = roots
            .into_iter()
            .map(|(vector, multiplicity)| PositiveRoot { vector, multiplicity })
            .collect();
        let find = |target: &EuclideanVector| -> Option<usize> {
            roots.iter().position(|r| r.vector.approx_eq(target, tol))
        };
        for (i, r) in roots.iter().enumerate() {
            if let Some(j) = find(&r.vector) {
                if j != i {
                    return Err(Error::InvalidRootSystem(format!("duplicate root {}", r.vector)));
                }
            }
            if find(&-&r.vector).is_some() {
                return Err(Error::InvalidRootSystem(format!(
                    "both {} and its negative are listed as positive",
                    r.vector
                )));
            }
        }
        let double_of: Vec<Option<usize>> =
            roots.iter().map(|r| find(&(&r.vector * 2.0))).collect();
        let half_of: Vec<Option<usize>> = roots.iter().map(|r| find(&(&r.vector * 0.5))).collect();
        for (i, r) in roots.iter().enumerate() {
            if double_of[i].is_some() && half_of[i].is_some() {
                return Err(Error::InvalidRootSystem(format!(
                    "{} has both its half and its double in the system",
                    r.vector
                )));
            }
        }

        // Simple roots: positive roots that are not a sum of two positive roots
        // (the two summands may coincide, which removes doubled roots).
        let simple: Vec<usize> = (0..roots.len())
            .filter(|&k| {
                !roots.iter().enumerate().any(|(i, a)| {
                    roots[i..].iter().any(|b| (&a.vector + &b.vector).approx_eq(&roots[k].vector, tol))
                })
            })
            .collect();
        if simple.len() != rank {
            return Err(Error::InvalidRootSystem(format!(
                "found {} simple roots, expected {rank}",
                simple.len()
            )));
        }

        let geometric = roots.iter().enumerate().all(|(i, r)| {
            let m = r.multiplicity;
            let integral = m.fract() == 0.0;
            let odd = integral && (m as u64) % 2 == 1;
            integral && !(odd && double_of[i].is_some())
        });

        let rs = RootSystem { rank, roots, geometric, label, simple, double_of, half_of };
        rs.check_weyl_invariance()?;
        // The unmultipliable simple basis must span the space.
        rs.fundamental_spherical_weights()?;
        Ok(rs)
    }

    /// Exhaustive check that every simple reflection permutes the roots up to
    /// sign and preserves multiplicities.
    pub fn check_weyl_invariance(&self) -> Result<()> {
        for &s in &self.simple {
            let sv = &self.roots[s].vector;
            for r in &self.roots {
                let image = r.vector.reflect(sv);
                let m = self
                    .multiplicity_of(&image)
                    .or_else(|| self.multiplicity_of(&-&image))
                    .ok_or_else(|| {
                        Error::InvalidRootSystem(format!(
                            "reflection of {} in {} is not a root",
                            r.vector, sv
                        ))
                    })?;
                if (m - r.multiplicity).abs() > 1e-12 * m.max(1.0) {
                    return Err(Error::InvalidRootSystem(format!(
                        "multiplicity is not Weyl invariant at {}",
                        r.vector
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn positive_roots(&self) -> &[PositiveRoot] {
        &self.roots
    }

    pub fn is_geometric(&self) -> bool {
        self.geometric
    }

    pub fn label(&self) -> Option<(RootType, usize)> {
        self.label
    }

    pub fn is_reduced(&self) -> bool {
        self.double_of.iter().all(Option::is_none)
    }

    fn tol(&self) -> f64 {
        let scale = self.roots.iter().map(|r| r.vector.norm()).fold(0.0, f64::max);
        MATCH_TOL * scale.max(1.0)
    }

    /// Index of a positive root matching `v`, if any.
    pub fn find_root(&self, v: &EuclideanVector) -> Option<usize> {
        let tol = self.tol();
        self.roots.iter().position(|r| r.vector.approx_eq(v, tol))
    }

    /// Multiplicity of the positive root `v`, `None` when `v` is not a positive root.
    pub fn multiplicity_of(&self, v: &EuclideanVector) -> Option<f64> {
        self.find_root(v).map(|i| self.roots[i].multiplicity)
    }

    /// Multiplicity of `2α` for the root at `index` (zero when `2α` is not a root).
    pub fn double_multiplicity(&self, index: usize) -> f64 {
        self.double_of[index].map_or(0.0, |j| self.roots[j].multiplicity)
    }

    pub fn simple_root_indices(&self) -> &[usize] {
        &self.simple
    }

    pub fn simple_roots(&self) -> Vec<EuclideanVector> {
        self.simple.iter().map(|&i| self.roots[i].vector.clone()).collect()
    }

    /// `β_j = 2α_j` when `2α_j` is a root, else `α_j`.
    pub fn unmultipliable_basis(&self) -> Vec<EuclideanVector> {
        self.simple
            .iter()
            .map(|&i| match self.double_of[i] {
                Some(j) => self.roots[j].vector.clone(),
                None => self.roots[i].vector.clone(),
            })
            .collect()
    }

    /// Half the multiplicity-weighted sum of the positive roots.
    pub fn rho(&self) -> EuclideanVector {
        self.roots.iter().fold(EuclideanVector::zeros(self.rank), |acc, r| {
            &acc + &(&r.vector * (0.5 * r.multiplicity))
        })
    }

    /// `r + Σ m_α`.
    pub fn dimension(&self) -> f64 {
        self.rank as f64 + self.roots.iter().map(|r| r.multiplicity).sum::<f64>()
    }

    /// Indivisible positive roots with `(α, m_α, m_{2α})`.
    pub fn indivisible_positive(&self) -> Vec<(EuclideanVector, f64, f64)> {
        self.roots
            .iter()
            .enumerate()
            .filter(|(i, _)| self.half_of[*i].is_none())
            .map(|(i, r)| (r.vector.clone(), r.multiplicity, self.double_multiplicity(i)))
            .collect()
    }

    /// Both sides of `⟨ρ, α_j⟩ = (m_{α_j}/2 + m_{2α_j})⟨α_j, α_j⟩` for simple root `j`.
    pub fn rho_pairing_identity(&self, j: usize) -> Result<(f64, f64)> {
        let &idx = self
            .simple
            .get(j)
            .ok_or(Error::IndexOutOfRange { index: j, rank: self.rank })?;
        let alpha = &self.roots[idx];
        let lhs = self.rho().dot(&alpha.vector);
        let rhs = (alpha.multiplicity / 2.0 + self.double_multiplicity(idx)) * alpha.vector.norm_sq();
        Ok((lhs, rhs))
    }

    /// Rescale the metric on the root space by `c`: every `⟨α, β⟩` is multiplied by `c`.
    pub fn rescaled(&self, c: f64) -> Result<Self> {
        if !(c.is_finite() && c > 0.0) {
            return Err(Error::InvalidParameter(format!("metric scale must be positive, got {c}")));
        }
        let s = c.sqrt();
        let mut out = self.clone();
        for r in &mut out.roots {
            r.vector = &r.vector * s;
        }
        Ok(out)
    }

    /// True iff the system is reduced and every multiplicity equals 2.
    pub fn is_group_manifold(&self) -> bool {
        self.is_reduced() && self.roots.iter().all(|r| r.multiplicity == 2.0)
    }
}

/// Standard realization of `type_label` in rank `rank` with the given
/// per-orbit multiplicities.
///
/// Long indivisible roots have squared length 2, except for `BC` where the
/// doubled roots `2e_i` do (so the rank-one system has `⟨β, β⟩ = 2`).
pub fn build_root_system(ty: RootType, rank: usize, mult: &Multiplicities) -> Result<RootSystem> {
    if !ty.rank_ok(rank) {
        return Err(Error::RankMismatch { root_type: ty.to_string(), rank });
    }
    let classes = mult.resolve(ty, rank)?;
    let m_of = |c: RootClass| classes.iter().find(|(k, _)| *k == c).map(|(_, m)| *m).unwrap();
    let roots = standard_roots(ty, rank)
        .into_iter()
        .map(|(v, class)| (EuclideanVector::new(v), m_of(class)))
        .collect();
    RootSystem::assemble(rank, roots, Some((ty, rank)))
}

fn unit(n: usize, i: usize) -> Vec<f64> {
    let mut v = vec![0.0; n];
    v[i] = 1.0;
    v
}

fn combine(n: usize, terms: &[(usize, f64)]) -> Vec<f64> {
    let mut v = vec![0.0; n];
    for &(i, c) in terms {
        v[i] += c;
    }
    v
}

/// Coordinates of `v ∈ R^{n+1}` (sum zero) in the Helmert orthonormal basis of the hyperplane.
fn helmert(v: &[f64]) -> Vec<f64> {
    let n = v.len() - 1;
    (1..=n)
        .map(|k| {
            let head: f64 = v[..k].iter().sum();
            (head - k as f64 * v[k]) / ((k * (k + 1)) as f64).sqrt()
        })
        .collect()
}

/// Generic positivity functional `(2^{n-1}, …, 2, 1)` on the source coordinates.
fn is_positive(v: &[f64]) -> bool {
    let n = v.len();
    let s: f64 = v.iter().enumerate().map(|(i, x)| x * (1u64 << (n - 1 - i)) as f64).sum();
    s > 0.0
}

fn standard_roots(ty: RootType, rank: usize) -> Vec<(Vec<f64>, RootClass)> {
    use RootClass::*;
    let n = rank;
    let mut out = Vec::new();
    let pairs = |out: &mut Vec<(Vec<f64>, RootClass)>, scale: f64, class: RootClass| {
        for i in 0..n {
            for j in i + 1..n {
                out.push((combine(n, &[(i, scale), (j, -scale)]), class));
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                out.push((combine(n, &[(i, scale), (j, scale)]), class));
            }
        }
    };
    match ty {
        RootType::A => {
            for i in 0..=n {
                for j in i + 1..=n {
                    out.push((helmert(&combine(n + 1, &[(i, 1.0), (j, -1.0)])), Short));
                }
            }
        }
        RootType::B => {
            pairs(&mut out, 1.0, Long);
            out.extend((0..n).map(|i| (unit(n, i), Short)));
        }
        RootType::C => {
            let s = std::f64::consts::FRAC_1_SQRT_2;
            pairs(&mut out, s, Short);
            out.extend((0..n).map(|i| (combine(n, &[(i, 2.0 * s)]), Long)));
        }
        RootType::D => pairs(&mut out, 1.0, Short),
        RootType::BC => {
            let s = std::f64::consts::FRAC_1_SQRT_2;
            pairs(&mut out, s, Long);
            out.extend((0..n).map(|i| (combine(n, &[(i, s)]), Short)));
            out.extend((0..n).map(|i| (combine(n, &[(i, 2.0 * s)]), Double)));
        }
        RootType::G2 => {
            let s = 1.0 / 3f64.sqrt();
            let mut all = Vec::new();
            for i in 0..3 {
                for j in 0..3 {
                    if i != j {
                        all.push((combine(3, &[(i, 1.0), (j, -1.0)]), Short));
                    }
                }
                let (j, k) = ((i + 1) % 3, (i + 2) % 3);
                all.push((combine(3, &[(i, 2.0), (j, -1.0), (k, -1.0)]), Long));
                all.push((combine(3, &[(i, -2.0), (j, 1.0), (k, 1.0)]), Long));
            }
            out.extend(
                all.into_iter()
                    .filter(|(v, _)| is_positive(v))
                    .map(|(v, c)| (helmert(&v).into_iter().map(|x| x * s).collect(), c)),
            );
        }
        RootType::F4 => {
            pairs(&mut out, 1.0, Long);
            out.extend((0..4).map(|i| (unit(4, i), Short)));
            for signs in 0..8u32 {
                let mut v = vec![0.5; 4];
                for (k, item) in v.iter_mut().enumerate().skip(1) {
                    if signs & (1 << (k - 1)) != 0 {
                        *item = -0.5;
                    }
                }
                out.push((v, Short));
            }
        }
    }
    out
}
