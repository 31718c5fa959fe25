//! Exact membership in a finitely generated monoid.
//!
//! Generators lying in the lineality space of the cone generate a group, so
//! they are handled by lattice reduction. The remaining generators are tried
//! one at a time with multiplicities in decreasing order, pruning every branch
//! whose remainder leaves the cone of the generators still available.

use std::collections::HashSet;

use super::RationalCone;
use crate::error::{Error, Result};
use crate::linalg::{self, dot, LatticeBasis};

#[derive(Debug, Clone)]
pub(crate) struct MonoidOracle {
    cone: RationalCone,
    pointed: Vec<Vec<i64>>,
    grading: Vec<i64>,
    /// `suffix[i]` is the cone of `pointed[i..]` together with the group part
    suffix: Vec<RationalCone>,
    group: LatticeBasis,
}

struct Search<'a> {
    oracle: &'a MonoidOracle,
    failed: HashSet<(usize, Vec<i64>)>,
    nodes: u64,
    budget: u64,
}

impl MonoidOracle {
    pub fn new(dim: usize, generators: &[Vec<i64>]) -> Self {
        let cone = RationalCone::from_generators_unchecked(dim, generators);
        let hs = cone.halfspaces();
        let grading: Vec<i64> = (0..dim).map(|j| hs.iter().map(|h| h[j]).sum()).collect();
        let (group, mut pointed): (Vec<Vec<i64>>, Vec<Vec<i64>>) = generators
            .iter()
            .cloned()
            .partition(|g| hs.iter().all(|h| dot(h, g) == 0));
        pointed.sort_by_key(|g| std::cmp::Reverse(dot(&grading, g)));
        let suffix = (0..=pointed.len())
            .map(|i| {
                let gens: Vec<Vec<i64>> = pointed[i..].iter().chain(&group).cloned().collect();
                RationalCone::from_generators_unchecked(dim, &gens)
            })
            .collect();
        let group_big: Vec<_> = group.iter().map(|g| linalg::to_big(g)).collect();
        MonoidOracle {
            cone,
            pointed,
            grading,
            suffix,
            group: LatticeBasis::new(&group_big, dim),
        }
    }

    pub fn cone(&self) -> &RationalCone {
        &self.cone
    }

    pub fn contains(&self, v: &[i64], budget: u64) -> Result<bool> {
        if !self.cone.contains(v) {
            return Ok(false);
        }
        let mut search = Search {
            oracle: self,
            failed: HashSet::new(),
            nodes: 0,
            budget,
        };
        search.run(0, v.to_vec())
    }
}

impl Search<'_> {
    fn run(&mut self, i: usize, r: Vec<i64>) -> Result<bool> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::BudgetExceeded { budget: self.budget });
        }
        let o = self.oracle;
        if i == o.pointed.len() {
            return Ok(o.group.contains(&linalg::to_big(&r)));
        }
        if self.failed.contains(&(i, r.clone())) {
            return Ok(false);
        }
        let g = &o.pointed[i];
        let max = dot(&o.grading, &r) / dot(&o.grading, g);
        let mut entered = false;
        for k in (0..=max).rev() {
            let rest: Vec<i64> = r.iter().zip(g).map(|(a, b)| a - k * b).collect();
            if !o.suffix[i + 1].contains(&rest) {
                // admissible multiplicities form an interval
                if entered {
                    break;
                }
                continue;
            }
            entered = true;
            if self.run(i + 1, rest)? {
                return Ok(true);
            }
        }
        self.failed.insert((i, r));
        Ok(false)
    }
}
