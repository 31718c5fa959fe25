//! Split root data in fundamental-weight coordinates, Levi subsets, Weyl
//! group enumeration and dominance orders.
//!
//! Weights are written in the basis dual to the simple coroots, so the simple
//! root `alpha_j` has coordinates `C[.][j]` and `<lambda, alpha_i^vee>` is the
//! `i`-th coordinate of `lambda`. Coweights are written in the simple coroot
//! basis. Central torus coordinates follow the semisimple block in both
//! lattices and pair trivially with every root and coroot.

mod cartan;
mod weyl;

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::ops::{Add, Index, Neg, Sub};

use num_traits::{Signed, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg;

pub use cartan::{CartanType, TypeSpec};
pub use weyl::{WeylElement, WeylModule};

macro_rules! lattice_vector {
    ($name:ident) => {
        #[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
        #[serde(transparent)]
        pub struct $name(pub Vec<i64>);

        impl $name {
            pub fn new(coords: impl Into<Vec<i64>>) -> Self {
                $name(coords.into())
            }

            pub fn zero(dim: usize) -> Self {
                $name(vec![0; dim])
            }

            pub fn basis(dim: usize, i: usize) -> Self {
                let mut v = vec![0; dim];
                v[i] = 1;
                $name(v)
            }

            pub fn coords(&self) -> &[i64] {
                &self.0
            }

            pub fn dim(&self) -> usize {
                self.0.len()
            }

            pub fn is_zero(&self) -> bool {
                self.0.iter().all(|&x| x == 0)
            }

            pub fn scaled(&self, k: i64) -> Self {
                $name(self.0.iter().map(|x| x * k).collect())
            }

            pub fn max_norm(&self) -> i64 {
                self.0.iter().map(|x| x.abs()).max().unwrap_or(0)
            }
        }

        impl Index<usize> for $name {
            type Output = i64;
            fn index(&self, i: usize) -> &i64 {
                &self.0[i]
            }
        }

        impl Add for &$name {
            type Output = $name;
            fn add(self, rhs: &$name) -> $name {
                debug_assert_eq!(self.dim(), rhs.dim());
                $name(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
            }
        }

        impl Sub for &$name {
            type Output = $name;
            fn sub(self, rhs: &$name) -> $name {
                debug_assert_eq!(self.dim(), rhs.dim());
                $name(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
            }
        }

        impl Neg for &$name {
            type Output = $name;
            fn neg(self) -> $name {
                $name(self.0.iter().map(|a| -a).collect())
            }
        }

        impl From<Vec<i64>> for $name {
            fn from(v: Vec<i64>) -> Self {
                $name(v)
            }
        }
    };
}

lattice_vector!(Weight);
lattice_vector!(Coweight);

/// The canonical pairing between weights and coweights.
pub fn pairing(weight: &Weight, coweight: &Coweight) -> i64 {
    debug_assert_eq!(weight.dim(), coweight.dim());
    linalg::dot(weight.coords(), coweight.coords())
}

/// A subset of Dynkin nodes, stored as 0-based indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct LeviSubset {
    nodes: BTreeSet<usize>,
}

impl LeviSubset {
    pub fn empty() -> Self {
        LeviSubset::default()
    }

    pub fn full(datum: &RootDatum) -> Self {
        LeviSubset {
            nodes: (0..datum.rank()).collect(),
        }
    }

    pub fn from_indices(datum: &RootDatum, nodes: impl IntoIterator<Item = usize>) -> Result<Self> {
        let nodes: BTreeSet<usize> = nodes.into_iter().collect();
        if let Some(&bad) = nodes.iter().find(|&&i| i >= datum.rank()) {
            return Err(Error::InvalidNode(bad + 1));
        }
        Ok(LeviSubset { nodes })
    }

    /// Nodes given by their 1-based Bourbaki labels.
    pub fn from_labels(datum: &RootDatum, labels: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut nodes = BTreeSet::new();
        for l in labels {
            if l == 0 || l > datum.rank() {
                return Err(Error::InvalidNode(l));
            }
            nodes.insert(l - 1);
        }
        Ok(LeviSubset { nodes })
    }

    /// Every subset of the Dynkin diagram, ordered by bitmask.
    pub fn all_subsets(datum: &RootDatum) -> Vec<LeviSubset> {
        let n = datum.rank();
        (0u64..1 << n)
            .map(|mask| LeviSubset {
                nodes: (0..n).filter(|i| mask >> i & 1 == 1).collect(),
            })
            .collect()
    }

    pub fn contains(&self, node: usize) -> bool {
        self.nodes.contains(&node)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.nodes.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn is_subset(&self, other: &LeviSubset) -> bool {
        self.nodes.is_subset(&other.nodes)
    }

    pub fn intersection(&self, other: &LeviSubset) -> LeviSubset {
        LeviSubset {
            nodes: self.nodes.intersection(&other.nodes).copied().collect(),
        }
    }

    pub fn labels(&self) -> Vec<usize> {
        self.nodes.iter().map(|i| i + 1).collect()
    }
}

impl fmt::Display for LeviSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<String> = self.labels().iter().map(ToString::to_string).collect();
        write!(f, "{{{}}}", labels.join(","))
    }
}

/// A split root datum: simply connected semisimple part plus a split central torus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootDatum {
    type_name: String,
    components: Vec<CartanType>,
    rank: usize,
    central_rank: usize,
    cartan: Vec<Vec<i64>>,
    det: i64,
    /// adjugate of the Cartan matrix; `C^{-1} = adj / det`
    adj: Vec<Vec<i64>>,
}

#[derive(Serialize, Deserialize)]
struct DatumJson {
    #[serde(rename = "type")]
    type_name: String,
    rank: usize,
    cartan_matrix: Vec<Vec<i64>>,
    central_rank: usize,
}

impl Serialize for RootDatum {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        DatumJson {
            type_name: self.type_name.clone(),
            rank: self.rank,
            cartan_matrix: self.cartan.clone(),
            central_rank: self.central_rank,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for RootDatum {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let json = DatumJson::deserialize(d)?;
        let datum = match TypeSpec::parse(&json.type_name) {
            Ok(spec) => RootDatum::from_spec(&spec),
            Err(_) => RootDatum::from_cartan_matrix(json.cartan_matrix.clone(), json.central_rank),
        }
        .map_err(serde::de::Error::custom)?;
        if datum.cartan != json.cartan_matrix || datum.central_rank != json.central_rank {
            return Err(serde::de::Error::custom("cartan_matrix does not match type"));
        }
        Ok(datum)
    }
}

fn validate_cartan(c: &[Vec<i64>]) -> Result<()> {
    let n = c.len();
    if n == 0 {
        return Ok(());
    }
    for (i, row) in c.iter().enumerate() {
        if row.len() != n {
            return Err(Error::InvalidCartan("matrix is not square".into()));
        }
        if row[i] != 2 {
            return Err(Error::InvalidCartan(format!("diagonal entry {} is not 2", i + 1)));
        }
        for j in 0..n {
            if i != j && (row[j] > 0 || (row[j] == 0) != (c[j][i] == 0)) {
                return Err(Error::InvalidCartan(format!(
                    "off-diagonal pattern violated at ({}, {})",
                    i + 1,
                    j + 1
                )));
            }
        }
    }
    // Every principal minor positive; above 12 nodes only the leading ones are checked.
    let subsets: Box<dyn Iterator<Item = Vec<usize>>> = if n <= 12 {
        Box::new((1u32..1 << n).map(move |m| (0..n).filter(|i| m >> i & 1 == 1).collect()))
    } else {
        Box::new((1..=n).map(|k| (0..k).collect()))
    };
    for s in subsets {
        let minor: Vec<Vec<i64>> = s.iter().map(|&i| s.iter().map(|&j| c[i][j]).collect()).collect();
        if !linalg::det(&minor).is_positive() {
            return Err(Error::InvalidCartan("not of finite type".into()));
        }
    }
    Ok(())
}

impl RootDatum {
    /// Builds the datum named by a type expression, e.g. `A2`, `A1xA1`, `B3xT1`.
    pub fn parse(type_string: &str) -> Result<Self> {
        RootDatum::from_spec(&TypeSpec::parse(type_string)?)
    }

    pub fn from_spec(spec: &TypeSpec) -> Result<Self> {
        let rank: usize = spec.components.iter().map(|c| c.rank).sum();
        let mut cartan = vec![vec![0; rank]; rank];
        let mut offset = 0;
        for comp in &spec.components {
            let block = comp.cartan_matrix();
            for (i, row) in block.iter().enumerate() {
                cartan[offset + i][offset..offset + comp.rank].copy_from_slice(row);
            }
            offset += comp.rank;
        }
        let mut datum = RootDatum::from_cartan_matrix(cartan, spec.torus_rank)?;
        datum.type_name = spec.to_string();
        datum.components = spec.components.clone();
        Ok(datum)
    }

    /// Accepts an explicit Cartan matrix `C[i][j] = <alpha_j, alpha_i^vee>`.
    pub fn from_cartan_matrix(cartan: Vec<Vec<i64>>, central_rank: usize) -> Result<Self> {
        validate_cartan(&cartan)?;
        let rank = cartan.len();
        if rank + central_rank == 0 {
            return Err(Error::InvalidCartan("empty root datum".into()));
        }
        let det = linalg::det(&cartan).to_i64().expect("Cartan determinant fits in i64");
        let adj = linalg::adjugate(&cartan)
            .iter()
            .map(|r| linalg::to_i64(r))
            .collect();
        Ok(RootDatum {
            type_name: "custom".into(),
            components: Vec::new(),
            rank,
            central_rank,
            cartan,
            det,
            adj,
        })
    }

    pub fn type_name(&self) -> &str {
        &self.type_name
    }

    /// Irreducible factors; empty for data built from an explicit matrix.
    pub fn components(&self) -> &[CartanType] {
        &self.components
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn central_rank(&self) -> usize {
        self.central_rank
    }

    /// Length of weight and coweight coordinate vectors.
    pub fn dim(&self) -> usize {
        self.rank + self.central_rank
    }

    pub fn is_semisimple(&self) -> bool {
        self.central_rank == 0
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// 1-based node labels of the Dynkin diagram.
    pub fn weight_basis_labels(&self) -> Vec<usize> {
        (1..=self.rank).collect()
    }

    pub fn simple_root(&self, j: usize) -> Weight {
        let mut v = vec![0; self.dim()];
        for (i, row) in self.cartan.iter().enumerate() {
            v[i] = row[j];
        }
        Weight(v)
    }

    pub fn simple_roots(&self) -> Vec<Weight> {
        (0..self.rank).map(|j| self.simple_root(j)).collect()
    }

    pub fn simple_coroot(&self, i: usize) -> Coweight {
        Coweight::basis(self.dim(), i)
    }

    pub fn simple_coroots(&self) -> Vec<Coweight> {
        (0..self.rank).map(|i| self.simple_coroot(i)).collect()
    }

    pub fn fundamental_weight(&self, i: usize) -> Weight {
        Weight::basis(self.dim(), i)
    }

    /// `det * x` where `x` are the (rational) simple-root coordinates of the
    /// semisimple block of `v`. This is the pairing with `det` times the
    /// fundamental coweights.
    pub(crate) fn scaled_root_coordinates(&self, v: &Weight) -> Vec<i64> {
        self.adj.iter().map(|row| linalg::dot(row, &v.0[..self.rank])).collect()
    }

    /// Integral simple-root coordinates, or `None` when `v` is not in the root lattice.
    pub fn root_coordinates(&self, v: &Weight) -> Option<Vec<i64>> {
        if v.0[self.rank..].iter().any(|&x| x != 0) {
            return None;
        }
        self.scaled_root_coordinates(v)
            .into_iter()
            .map(|x| (x % self.det == 0).then_some(x / self.det))
            .collect()
    }

    /// Membership in the rational cone spanned by the positive roots, tested by
    /// pairing against the fundamental coweights.
    pub fn in_positive_root_cone(&self, v: &Weight) -> bool {
        v.0[self.rank..].iter().all(|&x| x == 0)
            && self.scaled_root_coordinates(v).iter().all(|&x| x >= 0)
    }

    /// Applies the simple reflection `s_i` to a weight.
    pub fn reflect_weight(&self, i: usize, v: &Weight) -> Weight {
        let k = v.0[i];
        let mut out = v.0.clone();
        for (r, row) in self.cartan.iter().enumerate() {
            out[r] -= k * row[i];
        }
        Weight(out)
    }

    /// Applies the simple reflection `s_i` to a coweight.
    pub fn reflect_coweight(&self, i: usize, v: &Coweight) -> Coweight {
        let p: i64 = (0..self.rank).map(|k| self.cartan[k][i] * v.0[k]).sum();
        let mut out = v.0.clone();
        out[i] -= p;
        Coweight(out)
    }

    /// `<alpha_i, lambda>` for a coweight `lambda`.
    pub fn root_pairing(&self, i: usize, v: &Coweight) -> i64 {
        (0..self.rank).map(|k| self.cartan[k][i] * v.0[k]).sum()
    }

    fn reflection_closure<T, F>(&self, seeds: Vec<T>, reflect: F) -> BTreeSet<T>
    where
        T: Ord + Clone,
        F: Fn(usize, &T) -> T,
    {
        let mut seen: BTreeSet<T> = seeds.iter().cloned().collect();
        let mut queue: VecDeque<T> = seeds.into();
        while let Some(v) = queue.pop_front() {
            for i in 0..self.rank {
                let u = reflect(i, &v);
                if seen.insert(u.clone()) {
                    queue.push_back(u);
                }
            }
        }
        seen
    }

    /// The positive coroots, in coroot coordinates, sorted.
    pub fn positive_coroots(&self) -> Vec<Coweight> {
        self.reflection_closure(self.simple_coroots(), |i, v| self.reflect_coweight(i, v))
            .into_iter()
            .filter(|v| v.0.iter().all(|&x| x >= 0))
            .collect()
    }

    /// The positive roots, in fundamental-weight coordinates, sorted.
    pub fn positive_roots(&self) -> Vec<Weight> {
        self.reflection_closure(self.simple_roots(), |i, v| self.reflect_weight(i, v))
            .into_iter()
            .filter(|v| self.in_positive_root_cone(v))
            .collect()
    }

    /// Dominance for the nodes of `levi` (central coordinates are unconstrained).
    pub fn is_dominant(&self, v: &Weight, levi: &LeviSubset) -> bool {
        levi.iter().all(|i| v.0[i] >= 0)
    }

    pub fn is_dominant_coweight(&self, v: &Coweight, levi: &LeviSubset) -> bool {
        levi.iter().all(|i| self.root_pairing(i, v) >= 0)
    }

    /// `a <=_M b`: `b - a` is a non-negative integer combination of the simple
    /// roots of `levi`.
    pub fn dominance_leq(&self, a: &Weight, b: &Weight, levi: &LeviSubset) -> bool {
        let d = b - a;
        match self.root_coordinates(&d) {
            Some(x) => x
                .iter()
                .enumerate()
                .all(|(i, &c)| if levi.contains(i) { c >= 0 } else { c == 0 }),
            None => false,
        }
    }

    /// `a <=_M b` on coweights: `b - a` is a non-negative combination of the
    /// simple coroots of `levi`.
    pub fn coweight_leq(&self, a: &Coweight, b: &Coweight, levi: &LeviSubset) -> bool {
        (b - a)
            .0
            .iter()
            .enumerate()
            .all(|(i, &c)| if levi.contains(i) { c >= 0 } else { c == 0 })
    }

    /// `v` lies in the monoid spanned by the positive coroots.
    pub fn in_positive_coroot_monoid(&self, v: &Coweight) -> bool {
        v.0[..self.rank].iter().all(|&x| x >= 0) && v.0[self.rank..].iter().all(|&x| x == 0)
    }

    /// Sum of the fundamental weights.
    pub fn rho(&self) -> Weight {
        let mut v = vec![0; self.dim()];
        v[..self.rank].fill(1);
        Weight(v)
    }

    /// Rational simple-root coordinates as `(numerators, denominator)`.
    pub fn rational_root_coordinates(&self, v: &Weight) -> (Vec<i64>, i64) {
        (self.scaled_root_coordinates(v), self.det)
    }

    /// Adjugate of the Cartan matrix: row `i` pairs a weight with `det` times
    /// the `i`-th fundamental coweight.
    pub(crate) fn adjugate(&self) -> &[Vec<i64>] {
        &self.adj
    }
}

impl fmt::Display for RootDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.type_name)
    }
}
