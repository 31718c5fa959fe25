//! Hilbert bases of rational cones.
//!
//! The cone is moved into its saturated span lattice, the lineality space is
//! split off by a unimodular change of basis, and the pointed part is handled
//! by collecting the lattice points of the fundamental parallelepipeds of all
//! simplicial subcones spanned by extreme rays, then discarding reducible ones.

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::{dd, RationalCone};
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::linalg::{self, dot_big, LatticeBasis};

fn combination(coeffs: &[BigInt], basis: &[Vec<BigInt>], dim: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); dim];
    for (c, b) in coeffs.iter().zip(basis) {
        if !c.is_zero() {
            for (x, y) in out.iter_mut().zip(b) {
                *x += c * y;
            }
        }
    }
    out
}

pub(super) fn hilbert_basis(cone: &RationalCone, limits: &Limits) -> Result<Vec<Vec<i64>>> {
    let n = cone.dim();
    let gens: Vec<Vec<BigInt>> = cone.generators().iter().map(|g| linalg::to_big(g)).collect();
    if gens.is_empty() {
        return Ok(Vec::new());
    }

    // saturated lattice of the linear span
    let orth = linalg::integer_kernel(&gens, n);
    let span = if orth.is_empty() {
        (0..n)
            .map(|i| (0..n).map(|j| BigInt::from((i == j) as i64)).collect())
            .collect()
    } else {
        linalg::integer_kernel(&orth, n)
    };
    let d = span.len();

    // halfspaces in span coordinates
    let hs: Vec<Vec<BigInt>> = cone
        .halfspaces()
        .iter()
        .map(|h| {
            let h = linalg::to_big(h);
            span.iter().map(|b| dot_big(&h, b)).collect()
        })
        .collect();

    // T * hs^T = E: the first `rank` rows of T span a complement of the lineality
    let ech = linalg::echelon(linalg::transpose(&hs, d), hs.len());
    let rank = ech.pivots.len();
    if rank > limits.hilbert_max_dim {
        return Err(Error::DimensionBound {
            dim: rank,
            max: limits.hilbert_max_dim,
        });
    }
    let lift = |z: &[BigInt]| -> Vec<BigInt> {
        let y = combination(z, &ech.transform[..rank], d);
        combination(&y, &span, n)
    };
    let lineality: Vec<Vec<BigInt>> = ech.transform[rank..]
        .iter()
        .map(|t| combination(t, &span, n))
        .collect();

    let constraints: Vec<Vec<i64>> = (0..hs.len())
        .map(|i| linalg::to_i64(&(0..rank).map(|j| ech.rows[j][i].clone()).collect::<Vec<_>>()))
        .collect();
    let pointed = if rank == 0 {
        Vec::new()
    } else {
        pointed_hilbert_basis(rank, &constraints, limits.hilbert_budget)?
    };

    let lin = LatticeBasis::new(&lineality, n);
    let mut out: Vec<Vec<i64>> = Vec::new();
    for row in lin.rows() {
        out.push(linalg::to_i64(&row.iter().map(|x| -x).collect::<Vec<_>>()));
        out.push(linalg::to_i64(row));
    }
    for z in &pointed {
        out.push(linalg::to_i64(&lin.reduce(&lift(&linalg::to_big(z)))));
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// Hilbert basis of the full-dimensional pointed cone `{z : c . z >= 0}`.
fn pointed_hilbert_basis(dim: usize, constraints: &[Vec<i64>], budget: u64) -> Result<Vec<Vec<i64>>> {
    let rays: Vec<Vec<i64>> = dd::canonical_generators(dim, &dd::double_description(dim, constraints));
    let grading: Vec<i64> = (0..dim).map(|j| constraints.iter().map(|c| c[j]).sum()).collect();
    let exceeded = || Error::BudgetExceeded { budget };

    let mut work: u64 = 0;
    let mut candidates: Vec<Vec<i64>> = rays.clone();
    for subset in rays.iter().combinations(dim) {
        let m: Vec<Vec<i64>> = subset.into_iter().cloned().collect();
        let det = linalg::det(&m);
        if det.is_zero() {
            continue;
        }
        let vol = det.abs();
        work = work.saturating_add(u64::try_from(&vol).unwrap_or(u64::MAX));
        if work > budget {
            return Err(exceeded());
        }
        candidates.extend(parallelepiped_points(&m, &det));
    }
    candidates.sort();
    candidates.dedup();
    candidates.retain(|c| c.iter().any(|&x| x != 0));

    let n = candidates.len() as u64;
    if n.saturating_mul(n) > budget.saturating_mul(16) {
        return Err(exceeded());
    }
    let in_cone = |v: &[i64]| constraints.iter().all(|c| linalg::dot(c, v) >= 0);
    let degree: Vec<i64> = candidates.iter().map(|c| linalg::dot(&grading, c)).collect();
    let mut basis = Vec::new();
    for (i, x) in candidates.iter().enumerate() {
        let reducible = candidates.iter().enumerate().any(|(j, y)| {
            j != i && degree[j] < degree[i] && {
                let diff: Vec<i64> = x.iter().zip(y).map(|(a, b)| a - b).collect();
                in_cone(&diff)
            }
        });
        if !reducible {
            basis.push(x.clone());
        }
    }
    Ok(basis)
}

/// Lattice points of `{sum t_j m_j : 0 <= t_j < 1}` for linearly independent rows `m`.
fn parallelepiped_points(m: &[Vec<i64>], det: &BigInt) -> Vec<Vec<i64>> {
    let dim = m.len();
    let big: Vec<Vec<BigInt>> = m.iter().map(|r| linalg::to_big(r)).collect();
    // t = x * adj(M^T)^T / det, i.e. t_j = (adj(M^T) x)_j / det
    let mt: Vec<Vec<i64>> = (0..dim).map(|i| (0..dim).map(|j| m[j][i]).collect()).collect();
    let adj = linalg::adjugate(&mt);
    // coset representatives of Z^dim / (row lattice of m) from its Hermite form
    let hnf = linalg::echelon(big.clone(), dim);
    let box_sizes: Vec<BigInt> = (0..dim).map(|i| hnf.rows[i][i].clone()).collect();
    let mut out = Vec::new();
    let mut x = vec![BigInt::zero(); dim];
    loop {
        let t: Vec<BigInt> = adj.iter().map(|row| dot_big(row, &x).div_floor(det)).collect();
        // det may be negative; div_floor on the signed value still gives floor(t_j)
        let mut p = x.clone();
        for (tj, mj) in t.iter().zip(&big) {
            if !tj.is_zero() {
                for (a, b) in p.iter_mut().zip(mj) {
                    *a -= tj * b;
                }
            }
        }
        out.push(linalg::to_i64(&p));
        // odometer over the box
        let mut k = 0;
        loop {
            if k == dim {
                return out;
            }
            x[k] += 1;
            if x[k] < box_sizes[k] {
                break;
            }
            x[k] = BigInt::zero();
            k += 1;
        }
    }
}
