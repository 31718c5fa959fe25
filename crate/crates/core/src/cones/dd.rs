//! Double description: generators of `{x : a . x >= 0 for every constraint a}`.
//!
//! Constraints are added one at a time to the pair (lines, extreme rays)
//! starting from the whole space. New rays come from adjacent pairs of rays on
//! opposite sides of the hyperplane, adjacency decided combinatorially from
//! the sets of tight constraints.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::linalg::{self, dot_big, primitive};

#[derive(Clone, Debug)]
struct BitSet(Vec<u64>);

impl BitSet {
    fn new(bits: usize) -> Self {
        BitSet(vec![0; bits.div_ceil(64).max(1)])
    }

    fn full(upto: usize, bits: usize) -> Self {
        let mut s = BitSet::new(bits);
        for i in 0..upto {
            s.insert(i);
        }
        s
    }

    fn insert(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn and(&self, other: &BitSet) -> BitSet {
        BitSet(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    fn is_subset(&self, other: &BitSet) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & !b == 0)
    }
}

struct Ray {
    v: Vec<BigInt>,
    zero: BitSet,
}

/// Lines spanning the lineality space and one ray per extreme ray modulo it.
pub(crate) struct DdOutput {
    pub lines: Vec<Vec<BigInt>>,
    pub rays: Vec<Vec<BigInt>>,
}

fn combine(p: &[BigInt], cp: &BigInt, n: &[BigInt], cn: &BigInt) -> Vec<BigInt> {
    // cp * n - cn * p, with cp > 0 and cn < 0 gives a positive combination
    primitive(p.iter().zip(n).map(|(x, y)| cp * y - cn * x).collect())
}

pub(crate) fn double_description(dim: usize, constraints: &[Vec<i64>]) -> DdOutput {
    let m = constraints.len();
    let mut lines: Vec<Vec<BigInt>> = (0..dim)
        .map(|i| (0..dim).map(|j| BigInt::from((i == j) as i64)).collect())
        .collect();
    let mut rays: Vec<Ray> = Vec::new();

    for (k, a) in constraints.iter().enumerate() {
        let a = linalg::to_big(a);
        if let Some(li) = lines.iter().position(|l| !dot_big(&a, l).is_zero()) {
            let mut pivot = lines.swap_remove(li);
            let mut pv = dot_big(&a, &pivot);
            if pv.is_negative() {
                pivot.iter_mut().for_each(|x| *x = -&*x);
                pv = -pv;
            }
            for l in lines.iter_mut() {
                let c = dot_big(&a, l);
                if !c.is_zero() {
                    *l = primitive(l.iter().zip(&pivot).map(|(x, y)| &pv * x - &c * y).collect());
                }
            }
            for r in rays.iter_mut() {
                let c = dot_big(&a, &r.v);
                if !c.is_zero() {
                    r.v = primitive(r.v.iter().zip(&pivot).map(|(x, y)| &pv * x - &c * y).collect());
                }
                r.zero.insert(k);
            }
            rays.push(Ray {
                v: pivot,
                zero: BitSet::full(k, m),
            });
            continue;
        }

        let values: Vec<BigInt> = rays.iter().map(|r| dot_big(&a, &r.v)).collect();
        let pos: Vec<usize> = (0..rays.len()).filter(|&i| values[i].is_positive()).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&i| values[i].is_negative()).collect();
        if neg.is_empty() {
            for (r, v) in rays.iter_mut().zip(&values) {
                if v.is_zero() {
                    r.zero.insert(k);
                }
            }
            continue;
        }

        let mut fresh = Vec::new();
        for &p in &pos {
            for &n in &neg {
                let common = rays[p].zero.and(&rays[n].zero);
                let adjacent = (0..rays.len())
                    .all(|r| r == p || r == n || !common.is_subset(&rays[r].zero));
                if adjacent {
                    let mut zero = common;
                    zero.insert(k);
                    fresh.push(Ray {
                        v: combine(&rays[p].v, &values[p], &rays[n].v, &values[n]),
                        zero,
                    });
                }
            }
        }
        let mut next: Vec<Ray> = Vec::with_capacity(rays.len() + fresh.len());
        for (mut r, v) in rays.into_iter().zip(values) {
            if v.is_negative() {
                continue;
            }
            if v.is_zero() {
                r.zero.insert(k);
            }
            next.push(r);
        }
        next.extend(fresh);
        rays = next;
    }

    DdOutput {
        lines,
        rays: rays.into_iter().map(|r| r.v).collect(),
    }
}

/// Canonical generator list: `+-` the primitive rows of the reduced echelon
/// basis of the lineality space, plus each extreme ray reduced to vanish on
/// the pivot coordinates of that basis, all primitive and sorted.
pub(crate) fn canonical_generators(dim: usize, out: &DdOutput) -> Vec<Vec<i64>> {
    let (basis, pivots) = linalg::rref(&out.lines, dim);
    let mut gens: Vec<Vec<i64>> = Vec::new();
    for row in &basis {
        let l = linalg::to_i64(&linalg::clear_denominators(row));
        gens.push(l.iter().map(|x| -x).collect());
        gens.push(l);
    }
    for r in &out.rays {
        let mut v: Vec<num_rational::BigRational> = r
            .iter()
            .map(|x| num_rational::BigRational::from_integer(x.clone()))
            .collect();
        for (row, &p) in basis.iter().zip(&pivots) {
            let c = v[p].clone();
            if !c.is_zero() {
                for (x, y) in v.iter_mut().zip(row) {
                    *x -= &c * y;
                }
            }
        }
        let v = linalg::clear_denominators(&v);
        if v.iter().any(|x| !x.is_zero()) {
            gens.push(linalg::to_i64(&v));
        }
    }
    gens.sort();
    gens.dedup();
    gens
}
