//! Independent oracles shared by the integration tests.
//!
//! Nothing here calls into the library's algorithms beyond constructing
//! inputs: root systems come from explicit Euclidean realizations, cone
//! membership from Cramer's rule over simplicial subcones, and monoids from
//! exhaustive combination.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet, VecDeque};

use itertools::Itertools;
use num_rational::Ratio;
use renner::{LeviSubset, RationalCone, RootDatum};

pub const FLEET: [&str; 8] = ["A1", "A2", "A3", "B2", "B3", "C3", "G2", "A1xA1"];

pub fn bound_for(datum: &RootDatum) -> i64 {
    if datum.rank() <= 2 {
        4
    } else {
        3
    }
}

/// Every (datum, levi) pair of the fleet.
pub fn fleet_instances() -> Vec<(RootDatum, LeviSubset)> {
    FLEET
        .iter()
        .flat_map(|t| {
            let d = RootDatum::parse(t).unwrap();
            LeviSubset::all_subsets(&d).into_iter().map(move |m| (d.clone(), m))
        })
        .collect()
}

fn e(n: usize, i: usize) -> Vec<i64> {
    (0..n).map(|j| (i == j) as i64).collect()
}

fn sub(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn scale(a: &[i64], k: i64) -> Vec<i64> {
    a.iter().map(|x| k * x).collect()
}

pub fn ip(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Simple roots of an irreducible type as integer vectors in Euclidean space,
/// in Bourbaki order (scaled uniformly where the textbook realization has halves).
pub fn euclidean_simple_roots(family: char, rank: usize) -> Vec<Vec<i64>> {
    let n = rank;
    match family {
        'A' => (0..n).map(|i| sub(&e(n + 1, i), &e(n + 1, i + 1))).collect(),
        'B' => {
            let mut r: Vec<_> = (0..n - 1).map(|i| sub(&e(n, i), &e(n, i + 1))).collect();
            r.push(e(n, n - 1));
            r
        }
        'C' => {
            let mut r: Vec<_> = (0..n - 1).map(|i| sub(&e(n, i), &e(n, i + 1))).collect();
            r.push(scale(&e(n, n - 1), 2));
            r
        }
        'D' => {
            let mut r: Vec<_> = (0..n - 1).map(|i| sub(&e(n, i), &e(n, i + 1))).collect();
            r.push(e(n, n - 2).iter().zip(e(n, n - 1)).map(|(a, b)| a + b).collect());
            r
        }
        'G' => vec![vec![1, -1, 0], vec![-2, 1, 1]],
        'F' => vec![
            vec![0, 2, -2, 0],
            vec![0, 0, 2, -2],
            vec![0, 0, 0, 2],
            vec![1, -1, -1, -1],
        ],
        _ => panic!("no Euclidean realization for {family}"),
    }
}

/// `2 (a_i, a_j) / (a_i, a_i)`: the pairing of the coroot `i` with the root `j`.
pub fn euclidean_cartan(roots: &[Vec<i64>]) -> Vec<Vec<i64>> {
    roots
        .iter()
        .map(|ai| {
            roots
                .iter()
                .map(|aj| {
                    let num = 2 * ip(ai, aj);
                    assert_eq!(num % ip(ai, ai), 0);
                    num / ip(ai, ai)
                })
                .collect()
        })
        .collect()
}

fn reflect(x: &[i64], a: &[i64]) -> Vec<i64> {
    let num = 2 * ip(x, a);
    let den = ip(a, a);
    assert_eq!(num % den, 0, "non-integral reflection");
    sub(x, &scale(a, num / den))
}

fn orbit(seed: Vec<i64>, gens: &[Vec<i64>]) -> BTreeSet<Vec<i64>> {
    let mut seen = BTreeSet::from([seed.clone()]);
    let mut q = VecDeque::from([seed]);
    while let Some(x) = q.pop_front() {
        for a in gens {
            let y = reflect(&x, a);
            if seen.insert(y.clone()) {
                q.push_back(y);
            }
        }
    }
    seen
}

/// All roots, by closing the simple roots under simple reflections.
pub fn euclidean_roots(simple: &[Vec<i64>]) -> BTreeSet<Vec<i64>> {
    simple
        .iter()
        .flat_map(|a| orbit(a.clone(), simple))
        .collect()
}

/// The Weyl group order as the orbit size of a vector off every reflecting hyperplane.
pub fn euclidean_weyl_order(simple: &[Vec<i64>]) -> usize {
    let dim = simple[0].len();
    let roots = euclidean_roots(simple);
    let x: Vec<i64> = (0..dim).map(|i| 1 + 37i64.pow(i as u32)).collect();
    let x = scale(&x, 2);
    assert!(roots.iter().all(|r| ip(r, &x) != 0), "not regular");
    orbit(x, simple).len()
}

type Q = Ratio<i128>;

/// Solves `sum c_j cols_j = v` for square, nonsingular systems.
fn cramer(cols: &[&Vec<i64>], v: &[i64]) -> Option<Vec<Q>> {
    let n = v.len();
    let m: Vec<Vec<Q>> = (0..n)
        .map(|i| cols.iter().map(|c| Q::from_integer(c[i] as i128)).collect::<Vec<_>>())
        .collect();
    let mut a: Vec<Vec<Q>> = m
        .into_iter()
        .zip(v)
        .map(|(mut row, &x)| {
            row.push(Q::from_integer(x as i128));
            row
        })
        .collect();
    let k = cols.len();
    for c in 0..k {
        let p = (c..n).find(|&r| a[r][c] != Q::from_integer(0))?;
        a.swap(c, p);
        let inv = Q::from_integer(1) / a[c][c];
        for x in a[c].iter_mut() {
            *x *= inv;
        }
        for r in 0..n {
            if r != c && a[r][c] != Q::from_integer(0) {
                let f = a[r][c];
                for j in 0..=k {
                    let d = f * a[c][j];
                    a[r][j] -= d;
                }
            }
        }
    }
    if (k..n).any(|r| a[r][k] != Q::from_integer(0)) {
        return None;
    }
    Some((0..k).map(|c| a[c][k]).collect())
}

/// `v` is a non-negative rational combination of `gens` (Caratheodory: some
/// linearly independent subset suffices).
pub fn farkas_contains(gens: &[Vec<i64>], v: &[i64]) -> bool {
    if v.iter().all(|&x| x == 0) {
        return true;
    }
    let n = v.len();
    for k in 1..=n.min(gens.len()) {
        for subset in gens.iter().combinations(k) {
            if let Some(c) = cramer(&subset, v) {
                if c.iter().all(|x| *x >= Q::from_integer(0)) {
                    return true;
                }
            }
        }
    }
    false
}

/// All integer points of the box `[-h, h]^n`, in lexicographic order.
pub fn box_scan(n: usize, h: i64) -> Vec<Vec<i64>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    (0..n).map(|_| -h..=h).multi_cartesian_product().collect()
}

/// Naive box scan filtered by cone membership.
pub fn naive_points(cone: &RationalCone, h: i64) -> Vec<Vec<i64>> {
    box_scan(cone.dim(), h)
        .into_iter()
        .filter(|p| cone.contains(p))
        .collect()
}

/// Points reachable as non-negative integer combinations with every partial
/// sum inside the box `[-h, h]^n`.
pub fn monoid_closure(gens: &[Vec<i64>], n: usize, h: i64) -> HashSet<Vec<i64>> {
    let zero = vec![0; n];
    let mut seen = HashSet::from([zero.clone()]);
    let mut q = VecDeque::from([zero]);
    while let Some(x) = q.pop_front() {
        for g in gens {
            let y: Vec<i64> = x.iter().zip(g).map(|(a, b)| a + b).collect();
            if y.iter().all(|c| c.abs() <= h) && seen.insert(y.clone()) {
                q.push_back(y);
            }
        }
    }
    seen
}

/// Irreducible lattice points of a pointed cone among points of norm at most
/// `h`, splitting against points of norm at most `2h`.
pub fn brute_force_hilbert(cone: &RationalCone, h: i64) -> Vec<Vec<i64>> {
    let small = naive_points(cone, h);
    let big = naive_points(cone, 2 * h);
    small
        .iter()
        .filter(|x| x.iter().any(|&c| c != 0))
        .filter(|x| {
            !big.iter().any(|y| {
                y.iter().any(|&c| c != 0) && *y != **x && cone.contains(&sub(x, y))
            })
        })
        .cloned()
        .collect()
}

/// A small deterministic generator, for tests that want reproducible samples
/// without pulling the proptest machinery.
pub fn rng(seed: u64) -> rand_chacha::ChaCha8Rng {
    use rand::SeedableRng;
    rand_chacha::ChaCha8Rng::seed_from_u64(seed)
}
