//! Exact integer and rational linear algebra on small dense matrices.
//!
//! Everything here works over `BigInt` / `BigRational`; callers convert to and
//! from `i64` lattice vectors at the boundary.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub(crate) fn to_big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

pub(crate) fn to_i64(v: &[BigInt]) -> Vec<i64> {
    v.iter()
        .map(|x| x.to_i64().expect("lattice coordinate exceeds i64"))
        .collect()
}

pub(crate) fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub(crate) fn dot_big(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Divides out the content of `v`, keeping its direction.
pub(crate) fn primitive(mut v: Vec<BigInt>) -> Vec<BigInt> {
    let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in &mut v {
            *x /= &g;
        }
    }
    v
}

/// Determinant by fraction-free (Bareiss) elimination.
pub(crate) fn det(m: &[Vec<i64>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a: Vec<Vec<BigInt>> = m.iter().map(|r| to_big(r)).collect();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(i, k);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// Adjugate matrix, so that `m * adj(m) = det(m) * I`.
pub(crate) fn adjugate(m: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
    let n = m.len();
    let mut adj = vec![vec![BigInt::zero(); n]; n];
    if n == 1 {
        adj[0][0] = BigInt::one();
        return adj;
    }
    for i in 0..n {
        for j in 0..n {
            let minor: Vec<Vec<i64>> = (0..n)
                .filter(|&r| r != j)
                .map(|r| (0..n).filter(|&c| c != i).map(|c| m[r][c]).collect())
                .collect();
            let d = det(&minor);
            adj[i][j] = if (i + j) % 2 == 0 { d } else { -d };
        }
    }
    adj
}

/// Row echelon form `transform * input = rows` with a unimodular transform.
///
/// Pivots are positive and entries above each pivot lie in `[0, pivot)`, so the
/// nonzero rows form the Hermite normal form of the row lattice.
pub(crate) struct Echelon {
    pub rows: Vec<Vec<BigInt>>,
    pub transform: Vec<Vec<BigInt>>,
    pub pivots: Vec<usize>,
}

fn axpy_row(rows: &mut [Vec<BigInt>], target: usize, source: usize, q: &BigInt) {
    let (t, s) = if target < source {
        let (a, b) = rows.split_at_mut(source);
        (&mut a[target], &b[0])
    } else {
        let (a, b) = rows.split_at_mut(target);
        (&mut b[0], &a[source])
    };
    for (x, y) in t.iter_mut().zip(s) {
        *x -= q * y;
    }
}

pub(crate) fn echelon(input: Vec<Vec<BigInt>>, ncols: usize) -> Echelon {
    let nrows = input.len();
    let mut rows = input;
    let mut transform: Vec<Vec<BigInt>> = (0..nrows)
        .map(|i| {
            (0..nrows)
                .map(|j| if i == j { BigInt::one() } else { BigInt::zero() })
                .collect()
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        loop {
            let Some(p) = (r..nrows)
                .filter(|&i| !rows[i][c].is_zero())
                .min_by(|&a, &b| rows[a][c].abs().cmp(&rows[b][c].abs()))
            else {
                break;
            };
            rows.swap(r, p);
            transform.swap(r, p);
            let mut cleared = true;
            for i in r + 1..nrows {
                if rows[i][c].is_zero() {
                    continue;
                }
                let q = rows[i][c].div_floor(&rows[r][c]);
                axpy_row(&mut rows, i, r, &q);
                axpy_row(&mut transform, i, r, &q);
                if !rows[i][c].is_zero() {
                    cleared = false;
                }
            }
            if cleared {
                if rows[r][c].is_negative() {
                    for x in rows[r].iter_mut().chain(transform[r].iter_mut()) {
                        *x = -&*x;
                    }
                }
                for i in 0..r {
                    let q = rows[i][c].div_floor(&rows[r][c]);
                    if !q.is_zero() {
                        axpy_row(&mut rows, i, r, &q);
                        axpy_row(&mut transform, i, r, &q);
                    }
                }
                pivots.push(c);
                r += 1;
                break;
            }
        }
    }
    Echelon {
        rows,
        transform,
        pivots,
    }
}

pub(crate) fn transpose(m: &[Vec<BigInt>], ncols: usize) -> Vec<Vec<BigInt>> {
    (0..ncols).map(|j| m.iter().map(|r| r[j].clone()).collect()).collect()
}

/// Saturated basis of `{x in Z^dim : row . x = 0 for every row}`.
pub(crate) fn integer_kernel(rows: &[Vec<BigInt>], dim: usize) -> Vec<Vec<BigInt>> {
    let ech = echelon(transpose(rows, dim), rows.len());
    let rank = ech.pivots.len();
    ech.transform.into_iter().skip(rank).collect()
}

/// A sublattice of `Z^n` in Hermite normal form.
#[derive(Debug, Clone)]
pub(crate) struct LatticeBasis {
    rows: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
}

impl LatticeBasis {
    pub fn new(generators: &[Vec<BigInt>], dim: usize) -> Self {
        let ech = echelon(generators.to_vec(), dim);
        let rank = ech.pivots.len();
        LatticeBasis {
            rows: ech.rows.into_iter().take(rank).collect(),
            pivots: ech.pivots,
        }
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    /// Canonical coset representative of `v` modulo the lattice.
    pub fn reduce(&self, v: &[BigInt]) -> Vec<BigInt> {
        let mut v = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let q = v[p].div_floor(&row[p]);
            if !q.is_zero() {
                for (x, y) in v.iter_mut().zip(row) {
                    *x -= &q * y;
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }
}

fn rat(x: &BigInt) -> BigRational {
    BigRational::from_integer(x.clone())
}

/// Reduced row echelon form over the rationals; returns the nonzero rows and pivots.
pub(crate) fn rref(rows: &[Vec<BigInt>], ncols: usize) -> (Vec<Vec<BigRational>>, Vec<usize>) {
    let mut a: Vec<Vec<BigRational>> = rows.iter().map(|r| r.iter().map(rat).collect()).collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == a.len() {
            break;
        }
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].recip();
        for x in &mut a[r] {
            *x *= &inv;
        }
        for i in 0..a.len() {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in 0..ncols {
                    let delta = &f * &a[r][j];
                    a[i][j] -= delta;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    a.truncate(r);
    (a, pivots)
}

/// Smallest positive integer multiple of a rational vector.
pub(crate) fn clear_denominators(v: &[BigRational]) -> Vec<BigInt> {
    let l = v.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
    primitive(v.iter().map(|x| (x * rat(&l)).to_integer()).collect())
}

/// Every integer vector with `lo <= x_i <= hi`, in lexicographic order.
pub(crate) fn box_points(dim: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::with_capacity(dim)];
    for _ in 0..dim {
        out = out
            .into_iter()
            .flat_map(|p| {
                (lo..=hi).map(move |x| {
                    let mut q = p.clone();
                    q.push(x);
                    q
                })
            })
            .collect();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(m: &[&[i64]]) -> Vec<Vec<BigInt>> {
        m.iter().map(|r| to_big(r)).collect()
    }

    #[test]
    fn determinants() {
        assert_eq!(det(&[vec![2, -1], vec![-1, 2]]), BigInt::from(3));
        assert_eq!(det(&[vec![0, 1], vec![1, 0]]), BigInt::from(-1));
        assert_eq!(
            det(&[vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]]),
            BigInt::from(4)
        );
        assert_eq!(det(&[vec![1, 2], vec![2, 4]]), BigInt::zero());
    }

    #[test]
    fn adjugate_inverts() {
        let m = vec![vec![2, -1, 0], vec![-1, 2, -2], vec![0, -1, 2]];
        let adj = adjugate(&m);
        let d = det(&m);
        for i in 0..3 {
            for j in 0..3 {
                let s: BigInt = (0..3).map(|k| BigInt::from(m[i][k]) * &adj[k][j]).sum();
                let expected = if i == j { d.clone() } else { BigInt::zero() };
                assert_eq!(s, expected);
            }
        }
    }

    #[test]
    fn kernel_is_saturated() {
        // x + 2y + 3z = 0
        let k = integer_kernel(&big(&[&[1, 2, 3]]), 3);
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(dot_big(v, &to_big(&[1, 2, 3])).is_zero());
        }
        // (1,-2,1) = 2 * (1,1,-1) + ... is in the integer kernel; check it is reachable
        let lat = LatticeBasis::new(&k, 3);
        assert!(lat.contains(&to_big(&[1, -2, 1])));
        assert!(lat.contains(&to_big(&[3, 0, -1])));
    }

    #[test]
    fn lattice_reduction_is_canonical() {
        let lat = LatticeBasis::new(&big(&[&[2, 0], &[1, 3]]), 2);
        let a = lat.reduce(&to_big(&[5, 7]));
        let b = lat.reduce(&to_big(&[5 - 2 * 4, 7]));
        let c = lat.reduce(&to_big(&[5 + 1, 7 + 3]));
        assert_eq!(a, b);
        assert_eq!(a, c);
        assert!(!lat.contains(&to_big(&[1, 0])));
        assert!(lat.contains(&to_big(&[3, 3])));
    }
}
