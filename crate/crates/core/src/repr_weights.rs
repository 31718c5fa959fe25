//! Weight sets of dual Weyl modules and of their invariants under the
//! unipotent radical of a parabolic.

use std::collections::{BTreeSet, VecDeque};

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::linalg::box_points;
use crate::parabolic::ParabolicData;
use crate::report::Report;
use crate::root_datum::{LeviSubset, RootDatum, Weight};

/// A saturated set of weights with a distinguished highest weight, for the
/// Levi whose Weyl group it is stable under.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightSet {
    datum: RootDatum,
    levi: LeviSubset,
    highest: Weight,
    elements: BTreeSet<Weight>,
}

impl Serialize for WeightSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.elements.iter().map(|w| w.coords()))
    }
}

impl WeightSet {
    pub fn datum(&self) -> &RootDatum {
        &self.datum
    }

    pub fn levi(&self) -> &LeviSubset {
        &self.levi
    }

    pub fn highest(&self) -> &Weight {
        &self.highest
    }

    pub fn elements(&self) -> &BTreeSet<Weight> {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, v: &Weight) -> bool {
        self.elements.contains(v)
    }
}

fn in_hull(datum: &RootDatum, levi: &LeviSubset, hw: &Weight, v: &Weight) -> bool {
    datum.dominance_leq(&datum.dominant_conjugate(v, levi), hw, levi)
}

fn check_highest(datum: &RootDatum, levi: &LeviSubset, hw: &Weight) -> Result<()> {
    if hw.dim() != datum.dim() {
        return Err(Error::DimensionMismatch {
            expected: datum.dim(),
            found: hw.dim(),
        });
    }
    if !datum.is_dominant(hw, levi) {
        return Err(Error::NotDominant(hw.0.clone()));
    }
    Ok(())
}

/// Weights of the dual Weyl module of `levi` with highest weight `hw`: the
/// `v` congruent to `hw` whose dominant conjugate lies below `hw`.
///
/// Computed by descending from `hw` along simple roots of the Levi while the
/// result stays in the set, then closing under the Weyl group of the Levi.
pub fn dual_weyl_weights(datum: &RootDatum, levi: &LeviSubset, hw: &Weight) -> Result<WeightSet> {
    check_highest(datum, levi, hw)?;
    let roots: Vec<Weight> = levi.iter().map(|i| datum.simple_root(i)).collect();
    let mut elements = BTreeSet::from([hw.clone()]);
    let mut queue = VecDeque::from([hw.clone()]);
    while let Some(v) = queue.pop_front() {
        for a in &roots {
            let next = &v - a;
            if !elements.contains(&next) && in_hull(datum, levi, hw, &next) {
                elements.insert(next.clone());
                queue.push_back(next);
            }
        }
    }
    let mut closure: Vec<Weight> = elements.iter().cloned().collect();
    while let Some(v) = closure.pop() {
        for i in levi.iter() {
            let r = datum.reflect_weight(i, &v);
            if elements.insert(r.clone()) {
                closure.push(r);
            }
        }
    }
    Ok(WeightSet {
        datum: datum.clone(),
        levi: levi.clone(),
        highest: hw.clone(),
        elements,
    })
}

/// The same set computed by filtering the bounding box of the `W_M`-orbit
/// of `hw`, which contains the convex hull of the orbit.
pub fn dual_weyl_weights_by_window(
    datum: &RootDatum,
    levi: &LeviSubset,
    hw: &Weight,
    limits: &Limits,
) -> Result<WeightSet> {
    check_highest(datum, levi, hw)?;
    let n = datum.dim();
    let mut lo = hw.0.clone();
    let mut hi = hw.0.clone();
    for w in datum.weyl_group(levi, limits)? {
        let v = w.act_weight(hw)?;
        for k in 0..n {
            lo[k] = lo[k].min(v[k]);
            hi[k] = hi[k].max(v[k]);
        }
    }
    let span = lo.iter().zip(&hi).map(|(a, b)| b - a).max().unwrap_or(0);
    let elements = box_points(n, 0, span)
        .into_iter()
        .filter(|p| p.iter().zip(&lo).zip(&hi).all(|((x, l), h)| l + x <= *h))
        .map(|p| Weight(p.iter().zip(&lo).map(|(x, l)| x + l).collect()))
        .filter(|v| in_hull(datum, levi, hw, v))
        .collect();
    Ok(WeightSet {
        datum: datum.clone(),
        levi: levi.clone(),
        highest: hw.clone(),
        elements,
    })
}

/// The weights `v` of `ws` with `v <=_M highest`: the weights of the invariants
/// under the unipotent radical of the parabolic with Levi `levi`.
pub fn up_invariant_weights(ws: &WeightSet, levi: &LeviSubset) -> WeightSet {
    let datum = &ws.datum;
    WeightSet {
        datum: datum.clone(),
        levi: levi.clone(),
        highest: ws.highest.clone(),
        elements: ws
            .elements
            .iter()
            .filter(|v| datum.dominance_leq(v, &ws.highest, levi))
            .cloned()
            .collect(),
    }
}

fn symmetric_difference(report: &mut Report, lhs: &WeightSet, rhs: &WeightSet, hw: &Weight) {
    for v in lhs.elements.difference(&rhs.elements) {
        report.fail("invariant weight missing from the Levi module", v.0.clone(), Some(hw.0.clone()));
    }
    for v in rhs.elements.difference(&lhs.elements) {
        report.fail("Levi module weight missing from the invariants", v.0.clone(), Some(hw.0.clone()));
    }
}

/// The invariant weights of the dual Weyl module of `G` with highest weight
/// `hw` are the weights of the dual Weyl module of the Levi with the same
/// highest weight.
pub fn check_levi_restriction(datum: &RootDatum, levi: &LeviSubset, hw: &Weight) -> Result<Report> {
    check_highest(datum, &LeviSubset::full(datum), hw)?;
    let instance = format!("{} levi={}", datum.type_name(), levi);
    let mut report = Report::new("levi-restriction", instance, format!("hw:{:?}", hw.coords()));
    let full = dual_weyl_weights(datum, &LeviSubset::full(datum), hw)?;
    let lhs = up_invariant_weights(&full, levi);
    let rhs = dual_weyl_weights(datum, levi, hw)?;
    symmetric_difference(&mut report, &lhs, &rhs, hw);
    Ok(report)
}

/// Dominant weights with semisimple coordinates in `[0, bound]` and central
/// coordinates in `[-bound, bound]`.
pub fn dominant_window(datum: &RootDatum, bound: i64) -> Vec<Weight> {
    let r = datum.rank();
    box_points(datum.dim(), -bound, bound)
        .into_iter()
        .filter(|p| p[..r].iter().all(|&x| x >= 0))
        .map(Weight)
        .collect()
}

/// Invariant weights are `W_M`-conjugates of dominant weights, and every such
/// conjugate of a highest weight in the window occurs among the invariant
/// weights of that module.
pub fn check_cor_uinv(pd: &ParabolicData, window: &[Weight]) -> Result<Report> {
    let datum = pd.datum();
    let full = LeviSubset::full(datum);
    let level = format!("hw-window:{}", window.len());
    let mut report = Report::new("uinv", pd.instance(), level);
    for hw in window {
        let ws = dual_weyl_weights(datum, &full, hw)?;
        let inv = up_invariant_weights(&ws, pd.levi());
        for v in inv.elements() {
            report.check(
                pd.in_wm_dominant(v),
                "invariant weight is not a conjugate of a dominant weight",
                v.coords(),
                Some(hw.coords()),
            );
        }
        for w in pd.weyl_levi() {
            let v = Weight(w.weight_unchecked(hw.coords()));
            report.check(
                inv.contains(&v),
                "conjugate of the highest weight is not an invariant weight",
                v.coords(),
                Some(hw.coords()),
            );
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(v: &[i64]) -> Weight {
        Weight::new(v.to_vec())
    }

    fn set(v: &[&[i64]]) -> BTreeSet<Weight> {
        v.iter().map(|x| w(x)).collect()
    }

    #[test]
    fn dual_weyl_examples() {
        let a2 = RootDatum::parse("A2").unwrap();
        let full = LeviSubset::full(&a2);
        let ws = dual_weyl_weights(&a2, &full, &w(&[1, 0])).unwrap();
        assert_eq!(ws.elements(), &set(&[&[1, 0], &[-1, 1], &[0, -1]]));
        assert_eq!(dual_weyl_weights(&a2, &full, &w(&[0, 0])).unwrap().elements(), &set(&[&[0, 0]]));

        let a1 = RootDatum::parse("A1").unwrap();
        let ws = dual_weyl_weights(&a1, &LeviSubset::full(&a1), &w(&[2])).unwrap();
        assert_eq!(ws.elements(), &set(&[&[2], &[0], &[-2]]));

        assert!(matches!(
            dual_weyl_weights(&a2, &full, &w(&[-1, 0])),
            Err(Error::NotDominant(_))
        ));
    }

    #[test]
    fn adjoint_of_a2_has_seven_weights() {
        let a2 = RootDatum::parse("A2").unwrap();
        let ws = dual_weyl_weights(&a2, &LeviSubset::full(&a2), &w(&[1, 1])).unwrap();
        assert_eq!(ws.len(), 7);
    }

    #[test]
    fn window_variant_agrees() {
        let lim = Limits::default();
        for t in ["A2", "B2", "G2", "A3", "C3"] {
            let d = RootDatum::parse(t).unwrap();
            for levi in LeviSubset::all_subsets(&d) {
                // off-Levi coordinates may be negative
                for hw in dominant_window(&d, 2) {
                    let hw: Weight = (0..d.dim())
                        .map(|i| if levi.contains(i) { hw[i] } else { hw[i] - 1 })
                        .collect::<Vec<_>>()
                        .into();
                    let a = dual_weyl_weights(&d, &levi, &hw).unwrap();
                    let b = dual_weyl_weights_by_window(&d, &levi, &hw, &lim).unwrap();
                    assert_eq!(a.elements(), b.elements(), "{t} {levi} {hw:?}");
                }
            }
        }
    }

    #[test]
    fn invariant_examples() {
        let a2 = RootDatum::parse("A2").unwrap();
        let ws = dual_weyl_weights(&a2, &LeviSubset::full(&a2), &w(&[1, 0])).unwrap();
        let m = LeviSubset::from_labels(&a2, [1]).unwrap();
        assert_eq!(up_invariant_weights(&ws, &m).elements(), &set(&[&[1, 0], &[-1, 1]]));
        assert_eq!(up_invariant_weights(&ws, &LeviSubset::full(&a2)).elements(), ws.elements());
        assert_eq!(up_invariant_weights(&ws, &LeviSubset::empty()).elements(), &set(&[&[1, 0]]));
    }

    #[test]
    fn levi_restriction_examples() {
        let a2 = RootDatum::parse("A2").unwrap();
        let m = LeviSubset::from_labels(&a2, [1]).unwrap();
        assert!(check_levi_restriction(&a2, &m, &w(&[1, 0])).unwrap().pass);
        assert!(check_levi_restriction(&a2, &m, &w(&[0, 0])).unwrap().pass);
        let b2 = RootDatum::parse("B2").unwrap();
        for i in 0..2 {
            for l in 1..=2 {
                let m = LeviSubset::from_labels(&b2, [l]).unwrap();
                assert!(check_levi_restriction(&b2, &m, &b2.fundamental_weight(i)).unwrap().pass);
            }
        }
    }

    #[test]
    fn uinv_examples() {
        let lim = Limits::default();
        let a2 = RootDatum::parse("A2").unwrap();
        let m = LeviSubset::from_labels(&a2, [1]).unwrap();
        let pd = ParabolicData::build(&a2, &m, &lim).unwrap();
        assert!(check_cor_uinv(&pd, &dominant_window(&a2, 2)).unwrap().pass);

        let a1 = RootDatum::parse("A1").unwrap();
        let pd = ParabolicData::build(&a1, &LeviSubset::empty(), &lim).unwrap();
        assert!(check_cor_uinv(&pd, &dominant_window(&a1, 3)).unwrap().pass);
        let ws = dual_weyl_weights(&a1, &LeviSubset::full(&a1), &w(&[3])).unwrap();
        assert_eq!(up_invariant_weights(&ws, &LeviSubset::empty()).elements(), &set(&[&[3]]));
    }

    #[test]
    fn json_is_sorted_array() {
        let a2 = RootDatum::parse("A2").unwrap();
        let ws = dual_weyl_weights(&a2, &LeviSubset::full(&a2), &w(&[1, 0])).unwrap();
        assert_eq!(serde_json::to_string(&ws).unwrap(), "[[-1,1],[0,-1],[1,0]]");
    }
}
