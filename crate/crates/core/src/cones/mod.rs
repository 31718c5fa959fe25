//! Rational polyhedral cones and finitely generated lattice monoids.
//!
//! A [`RationalCone`] is always stored in canonical form: primitive integer
//! generators sorted lexicographically, with the lineality space given by
//! `+-` its reduced echelon basis. Two cones are equal iff their generator
//! lists are equal. The halfspace list is the canonical generator list of the
//! dual cone.

mod dd;
mod hilbert;
mod monoid;

use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::linalg::dot;

pub(crate) use monoid::MonoidOracle;

#[derive(Debug, Clone)]
pub struct RationalCone {
    dim: usize,
    generators: Vec<Vec<i64>>,
    halfspaces: OnceLock<Vec<Vec<i64>>>,
}

impl PartialEq for RationalCone {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.generators == other.generators
    }
}

impl Eq for RationalCone {}

#[derive(Serialize, Deserialize)]
struct ConeJson {
    dim: usize,
    generators: Vec<Vec<i64>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    halfspaces: Option<Vec<Vec<i64>>>,
}

impl Serialize for RationalCone {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ConeJson {
            dim: self.dim,
            generators: self.generators.clone(),
            halfspaces: Some(self.halfspaces().to_vec()),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for RationalCone {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let json = ConeJson::deserialize(d)?;
        RationalCone::from_generators(json.dim, json.generators).map_err(serde::de::Error::custom)
    }
}

fn check_vectors(dim: usize, vs: &[Vec<i64>]) -> Result<()> {
    match vs.iter().find(|v| v.len() != dim) {
        Some(v) => Err(Error::DimensionMismatch {
            expected: dim,
            found: v.len(),
        }),
        None => Ok(()),
    }
}

fn check_dim(dim: usize, limits: &Limits) -> Result<()> {
    if dim == 0 || dim > limits.dd_max_dim {
        return Err(Error::DimensionBound {
            dim,
            max: limits.dd_max_dim,
        });
    }
    Ok(())
}

impl RationalCone {
    /// The cone generated by `generators` (V-representation).
    pub fn from_generators(dim: usize, generators: impl IntoIterator<Item = Vec<i64>>) -> Result<Self> {
        RationalCone::from_generators_with(dim, generators, &Limits::default())
    }

    pub fn from_generators_with(
        dim: usize,
        generators: impl IntoIterator<Item = Vec<i64>>,
        limits: &Limits,
    ) -> Result<Self> {
        check_dim(dim, limits)?;
        let generators: Vec<Vec<i64>> = generators.into_iter().collect();
        check_vectors(dim, &generators)?;
        Ok(RationalCone::from_generators_unchecked(dim, &generators))
    }

    pub(crate) fn from_generators_unchecked(dim: usize, generators: &[Vec<i64>]) -> Self {
        let halfspaces = dd::canonical_generators(dim, &dd::double_description(dim, generators));
        let generators = dd::canonical_generators(dim, &dd::double_description(dim, &halfspaces));
        RationalCone {
            dim,
            generators,
            halfspaces: OnceLock::from(halfspaces),
        }
    }

    /// The cone `{x : h . x >= 0 for every h}` (H-representation).
    pub fn from_halfspaces(dim: usize, halfspaces: impl IntoIterator<Item = Vec<i64>>) -> Result<Self> {
        RationalCone::from_halfspaces_with(dim, halfspaces, &Limits::default())
    }

    pub fn from_halfspaces_with(
        dim: usize,
        halfspaces: impl IntoIterator<Item = Vec<i64>>,
        limits: &Limits,
    ) -> Result<Self> {
        check_dim(dim, limits)?;
        let halfspaces: Vec<Vec<i64>> = halfspaces.into_iter().collect();
        check_vectors(dim, &halfspaces)?;
        Ok(RationalCone::from_halfspaces_unchecked(dim, &halfspaces))
    }

    pub(crate) fn from_halfspaces_unchecked(dim: usize, halfspaces: &[Vec<i64>]) -> Self {
        RationalCone {
            dim,
            generators: dd::canonical_generators(dim, &dd::double_description(dim, halfspaces)),
            halfspaces: OnceLock::new(),
        }
    }

    pub fn zero(dim: usize) -> Self {
        RationalCone::from_generators_unchecked(dim, &[])
    }

    pub fn full(dim: usize) -> Self {
        RationalCone::from_halfspaces_unchecked(dim, &[])
    }

    pub fn orthant(dim: usize) -> Self {
        let gens: Vec<Vec<i64>> = (0..dim)
            .map(|i| (0..dim).map(|j| (i == j) as i64).collect())
            .collect();
        RationalCone::from_generators_unchecked(dim, &gens)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[Vec<i64>] {
        &self.generators
    }

    /// Canonical H-representation, computed on first use.
    pub fn halfspaces(&self) -> &[Vec<i64>] {
        self.halfspaces.get_or_init(|| {
            dd::canonical_generators(self.dim, &dd::double_description(self.dim, &self.generators))
        })
    }

    pub fn contains(&self, v: &[i64]) -> bool {
        debug_assert_eq!(v.len(), self.dim);
        self.halfspaces().iter().all(|h| dot(h, v) >= 0)
    }

    /// Generators `g` whose negative is also a generator: `+-` a basis of the
    /// lineality space.
    pub fn lineality_generators(&self) -> Vec<Vec<i64>> {
        self.generators
            .iter()
            .filter(|g| {
                let neg: Vec<i64> = g.iter().map(|x| -x).collect();
                self.generators.binary_search(&neg).is_ok()
            })
            .cloned()
            .collect()
    }

    pub fn is_pointed(&self) -> bool {
        self.lineality_generators().is_empty()
    }

    /// The dual cone; its generators are this cone's halfspaces and vice versa.
    pub fn dual(&self) -> RationalCone {
        RationalCone {
            dim: self.dim,
            generators: self.halfspaces().to_vec(),
            halfspaces: OnceLock::from(self.generators.clone()),
        }
    }

    /// Intersection, by concatenating H-representations.
    pub fn intersect(cones: &[RationalCone]) -> Result<RationalCone> {
        let Some(first) = cones.first() else {
            return Err(Error::Parse("intersection of an empty family".into()));
        };
        let dim = first.dim;
        let mut hs = Vec::new();
        for c in cones {
            if c.dim != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: c.dim,
                });
            }
            hs.extend_from_slice(c.halfspaces());
        }
        hs.sort();
        hs.dedup();
        Ok(RationalCone::from_halfspaces_unchecked(dim, &hs))
    }

    /// Mutual containment of generators.
    pub fn same_set(&self, other: &RationalCone) -> bool {
        self.dim == other.dim
            && self.generators.iter().all(|g| other.contains(g))
            && other.generators.iter().all(|g| self.contains(g))
    }

    pub fn contains_cone(&self, other: &RationalCone) -> bool {
        other.generators.iter().all(|g| self.contains(g))
    }

    /// Every lattice point of the cone with max-norm at most `height`, in
    /// lexicographic order.
    ///
    /// Coordinates are fixed left to right; a branch is cut as soon as some
    /// halfspace cannot be satisfied by any completion inside the box.
    pub fn enumerate_points(&self, height: i64) -> Vec<Vec<i64>> {
        let hs = self.halfspaces();
        let n = self.dim;
        // slack[k][h] = height * sum_{j >= k} |h_j|
        let slack: Vec<Vec<i64>> = (0..=n)
            .map(|k| hs.iter().map(|h| height * h[k..].iter().map(|x| x.abs()).sum::<i64>()).collect())
            .collect();
        let mut out = Vec::new();
        let mut point = vec![0i64; n];
        let mut partial = vec![vec![0i64; hs.len()]; n + 1];
        fn rec(
            k: usize,
            n: usize,
            height: i64,
            hs: &[Vec<i64>],
            slack: &[Vec<i64>],
            point: &mut Vec<i64>,
            partial: &mut Vec<Vec<i64>>,
            out: &mut Vec<Vec<i64>>,
        ) {
            if (0..hs.len()).any(|h| partial[k][h] + slack[k][h] < 0) {
                return;
            }
            if k == n {
                out.push(point.clone());
                return;
            }
            for x in -height..=height {
                point[k] = x;
                for h in 0..hs.len() {
                    partial[k + 1][h] = partial[k][h] + hs[h][k] * x;
                }
                rec(k + 1, n, height, hs, slack, point, partial, out);
            }
        }
        rec(0, n, height, hs, &slack, &mut point, &mut partial, &mut out);
        out
    }

    /// Minimal generating set of the monoid of lattice points of the cone.
    ///
    /// For a cone with lineality the result is `+-` a basis of the lattice
    /// points of the lineality space plus a canonical lift of the Hilbert basis
    /// of the pointed quotient.
    pub fn hilbert_basis(&self, limits: &Limits) -> Result<Vec<Vec<i64>>> {
        hilbert::hilbert_basis(self, limits)
    }
}

/// Which certificate a saturation check achieved.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "level")]
pub enum CertificateLevel {
    /// Every Hilbert basis element of the cone lies in the monoid (or a
    /// concrete non-member lattice point was found).
    Exact,
    /// Every lattice point of the cone up to `height` lies in the monoid.
    Bounded { height: i64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SaturationCertificate {
    pub saturated: bool,
    pub level: CertificateLevel,
    /// A lattice point of the cone that is not in the monoid.
    pub witness: Option<Vec<i64>>,
    pub hilbert_basis: Option<Vec<Vec<i64>>>,
}

/// The monoid of non-negative integer combinations of finitely many lattice vectors.
#[derive(Debug, Clone)]
pub struct LatticeMonoid {
    dim: usize,
    generators: Vec<Vec<i64>>,
    oracle: OnceLock<MonoidOracle>,
}

impl PartialEq for LatticeMonoid {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.generators == other.generators
    }
}

impl Eq for LatticeMonoid {}

impl Serialize for LatticeMonoid {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Json<'a> {
            dim: usize,
            generators: &'a [Vec<i64>],
        }
        Json {
            dim: self.dim,
            generators: &self.generators,
        }
        .serialize(s)
    }
}

impl LatticeMonoid {
    /// Generators are deduplicated and sorted; zero vectors are dropped.
    pub fn new(dim: usize, generators: impl IntoIterator<Item = Vec<i64>>) -> Result<Self> {
        LatticeMonoid::new_with(dim, generators, &Limits::default())
    }

    pub fn new_with(
        dim: usize,
        generators: impl IntoIterator<Item = Vec<i64>>,
        limits: &Limits,
    ) -> Result<Self> {
        check_dim(dim, limits)?;
        let mut generators: Vec<Vec<i64>> = generators
            .into_iter()
            .filter(|g| g.iter().any(|&x| x != 0))
            .collect();
        check_vectors(dim, &generators)?;
        generators.sort();
        generators.dedup();
        Ok(LatticeMonoid {
            dim,
            generators,
            oracle: OnceLock::new(),
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[Vec<i64>] {
        &self.generators
    }

    pub fn cone(&self) -> RationalCone {
        self.oracle().cone().clone()
    }

    fn oracle(&self) -> &MonoidOracle {
        self.oracle
            .get_or_init(|| MonoidOracle::new(self.dim, &self.generators))
    }

    /// Exact membership. A `BudgetExceeded` error means the search was cut
    /// short, which is distinct from a negative answer.
    pub fn contains(&self, v: &[i64], limits: &Limits) -> Result<bool> {
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: v.len(),
            });
        }
        let norm = v.iter().map(|x| x.abs()).max().unwrap_or(0);
        if norm > limits.norm_cap {
            return Err(Error::NormCap {
                norm,
                cap: limits.norm_cap,
            });
        }
        self.oracle().contains(v, limits.search_budget)
    }

    /// Checks `monoid = cone(monoid) ∩ Z^n`, first on the lattice points of the
    /// cone up to `height`, then exactly through the Hilbert basis when it is
    /// affordable.
    pub fn is_saturated(&self, height: i64, limits: &Limits) -> Result<SaturationCertificate> {
        let cone = self.cone();
        for p in cone.enumerate_points(height) {
            if !self.contains(&p, limits)? {
                return Ok(SaturationCertificate {
                    saturated: false,
                    level: CertificateLevel::Exact,
                    witness: Some(p),
                    hilbert_basis: None,
                });
            }
        }
        let hb = match cone.hilbert_basis(limits) {
            Ok(hb) => hb,
            Err(e) if e.is_budget() => {
                return Ok(SaturationCertificate {
                    saturated: true,
                    level: CertificateLevel::Bounded { height },
                    witness: None,
                    hilbert_basis: None,
                })
            }
            Err(e) => return Err(e),
        };
        for h in &hb {
            if !self.contains(h, limits)? {
                return Ok(SaturationCertificate {
                    saturated: false,
                    level: CertificateLevel::Exact,
                    witness: Some(h.clone()),
                    hilbert_basis: Some(hb),
                });
            }
        }
        Ok(SaturationCertificate {
            saturated: true,
            level: CertificateLevel::Exact,
            witness: None,
            hilbert_basis: Some(hb),
        })
    }
}
