use std::collections::{HashSet, VecDeque};

use super::{Coweight, LeviSubset, RootDatum, Weight};
use crate::error::{Error, Result};
use crate::limits::Limits;

/// An element of the Weyl group with its action matrices cached.
///
/// `word = [a, b, c]` denotes `s_a s_b s_c`, so `c` acts first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeylElement {
    word: Vec<usize>,
    dim: usize,
    /// action on weights, row-major
    matrix: Vec<i64>,
    /// action on coweights, row-major
    comatrix: Vec<i64>,
}

fn identity(dim: usize) -> Vec<i64> {
    let mut m = vec![0; dim * dim];
    for i in 0..dim {
        m[i * dim + i] = 1;
    }
    m
}

fn apply(m: &[i64], dim: usize, v: &[i64]) -> Vec<i64> {
    (0..dim)
        .map(|r| m[r * dim..(r + 1) * dim].iter().zip(v).map(|(a, b)| a * b).sum())
        .collect()
}

impl WeylElement {
    pub fn identity(dim: usize) -> Self {
        WeylElement {
            word: Vec::new(),
            dim,
            matrix: identity(dim),
            comatrix: identity(dim),
        }
    }

    pub fn from_word(datum: &RootDatum, word: &[usize]) -> Result<Self> {
        let mut w = WeylElement::identity(datum.dim());
        for &i in word.iter().rev() {
            if i >= datum.rank() {
                return Err(Error::InvalidNode(i + 1));
            }
            w = w.left_mul_simple(datum, i);
        }
        Ok(w)
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_identity(&self) -> bool {
        self.matrix == identity(self.dim)
    }

    /// Action on weights as a dense matrix.
    pub fn matrix(&self) -> Vec<Vec<i64>> {
        self.matrix.chunks(self.dim).map(<[i64]>::to_vec).collect()
    }

    /// Action on coweights as a dense matrix.
    pub fn comatrix(&self) -> Vec<Vec<i64>> {
        self.comatrix.chunks(self.dim).map(<[i64]>::to_vec).collect()
    }

    /// `s_i * self`.
    pub fn left_mul_simple(&self, datum: &RootDatum, i: usize) -> Self {
        let n = self.dim;
        let mut matrix = self.matrix.clone();
        // weights: S_i = I - alpha_i e_i^T
        for r in 0..datum.rank() {
            let c = datum.cartan[r][i];
            if c != 0 {
                for j in 0..n {
                    matrix[r * n + j] -= c * self.matrix[i * n + j];
                }
            }
        }
        // coweights: S_i = I - e_i alpha_i^T, only row i changes
        let mut comatrix = self.comatrix.clone();
        for j in 0..n {
            let p: i64 = (0..datum.rank())
                .map(|k| datum.cartan[k][i] * self.comatrix[k * n + j])
                .sum();
            comatrix[i * n + j] -= p;
        }
        let mut word = Vec::with_capacity(self.word.len() + 1);
        word.push(i);
        word.extend_from_slice(&self.word);
        WeylElement {
            word,
            dim: n,
            matrix,
            comatrix,
        }
    }

    pub fn act_weight(&self, v: &Weight) -> Result<Weight> {
        self.check(v.dim())?;
        Ok(Weight(apply(&self.matrix, self.dim, &v.0)))
    }

    pub fn act_coweight(&self, v: &Coweight) -> Result<Coweight> {
        self.check(v.dim())?;
        Ok(Coweight(apply(&self.comatrix, self.dim, &v.0)))
    }

    /// Generic entry point over both lattices.
    pub fn act<V: WeylModule>(&self, v: &V) -> Result<V> {
        V::act_by(self, v)
    }

    pub(crate) fn weight_unchecked(&self, v: &[i64]) -> Vec<i64> {
        apply(&self.matrix, self.dim, v)
    }

    pub(crate) fn coweight_unchecked(&self, v: &[i64]) -> Vec<i64> {
        apply(&self.comatrix, self.dim, v)
    }

    fn check(&self, found: usize) -> Result<()> {
        if found != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found,
            });
        }
        Ok(())
    }
}

/// Lattices carrying a Weyl group action.
pub trait WeylModule: Sized {
    fn act_by(w: &WeylElement, v: &Self) -> Result<Self>;
}

impl WeylModule for Weight {
    fn act_by(w: &WeylElement, v: &Self) -> Result<Self> {
        w.act_weight(v)
    }
}

impl WeylModule for Coweight {
    fn act_by(w: &WeylElement, v: &Self) -> Result<Self> {
        w.act_coweight(v)
    }
}

impl RootDatum {
    /// All elements of the group generated by `s_i`, `i` in `levi`, in
    /// breadth-first order from the identity (so words are reduced).
    pub fn weyl_group(&self, levi: &LeviSubset, limits: &Limits) -> Result<Vec<WeylElement>> {
        let cap = limits.weyl_cap;
        let id = WeylElement::identity(self.dim());
        let mut seen: HashSet<Vec<i64>> = HashSet::new();
        seen.insert(id.matrix.clone());
        let mut elements = vec![id];
        let mut queue = VecDeque::from([0usize]);
        while let Some(k) = queue.pop_front() {
            for i in levi.iter() {
                let next = elements[k].left_mul_simple(self, i);
                if seen.insert(next.matrix.clone()) {
                    if elements.len() >= cap {
                        return Err(Error::WeylCapExceeded { cap });
                    }
                    elements.push(next);
                    queue.push_back(elements.len() - 1);
                }
            }
        }
        Ok(elements)
    }

    /// The `levi`-dominant element of the `W_M`-orbit of `v`, with a witness
    /// `w` such that `w * v` is that element.
    pub fn dominant_representative(&self, v: &Weight, levi: &LeviSubset) -> (Weight, WeylElement) {
        let mut current = v.clone();
        let mut w = WeylElement::identity(self.dim());
        while let Some(i) = levi.iter().find(|&i| current.0[i] < 0) {
            current = self.reflect_weight(i, &current);
            w = w.left_mul_simple(self, i);
        }
        (current, w)
    }

    /// Dominant representative without the witness.
    pub fn dominant_conjugate(&self, v: &Weight, levi: &LeviSubset) -> Weight {
        let mut current = v.clone();
        while let Some(i) = levi.iter().find(|&i| current.0[i] < 0) {
            current = self.reflect_weight(i, &current);
        }
        current
    }
}
