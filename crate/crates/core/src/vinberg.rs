//! The cone of pairs `(l1, l2)` with `l2 - w l1` in the positive root cone for
//! every Weyl group element, and its projection onto the renner cone of a Levi.

use std::collections::BTreeSet;

use serde::{Serialize, Serializer};

use crate::cones::RationalCone;
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::linalg::box_points;
use crate::parabolic::ParabolicData;
use crate::report::Report;
use crate::root_datum::{LeviSubset, RootDatum, Weight, WeylElement};

/// Which lattice points of the rational cone count as points of the monoid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum VinbergLattice {
    /// `l2 - l1` must lie in the root lattice.
    #[default]
    RootCongruent,
    /// Every pair of weights.
    Full,
}

#[derive(Debug, Clone)]
pub struct VinbergCone {
    datum: RootDatum,
    cone: RationalCone,
    weyl: Vec<WeylElement>,
    lattice: VinbergLattice,
}

impl Serialize for VinbergCone {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Json<'a> {
            #[serde(rename = "type")]
            type_name: &'a str,
            weyl_order: usize,
            lattice: VinbergLattice,
            cone: &'a RationalCone,
        }
        Json {
            type_name: self.datum.type_name(),
            weyl_order: self.weyl.len(),
            lattice: self.lattice,
            cone: &self.cone,
        }
        .serialize(s)
    }
}

/// The point `c_P`: value 1 on the simple roots of the Levi and 0 elsewhere.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CpPoint {
    levi: LeviSubset,
}

impl CpPoint {
    pub fn new(levi: LeviSubset) -> Self {
        CpPoint { levi }
    }

    pub fn levi(&self) -> &LeviSubset {
        &self.levi
    }

    /// Values on the simple roots.
    pub fn indicator(&self, rank: usize) -> Vec<u8> {
        (0..rank).map(|i| self.levi.contains(i) as u8).collect()
    }

    /// Coordinatewise product of indicators.
    pub fn compose(&self, other: &CpPoint) -> CpPoint {
        CpPoint {
            levi: self.levi.intersection(&other.levi),
        }
    }
}

impl VinbergCone {
    pub fn new(datum: &RootDatum, limits: &Limits) -> Result<Self> {
        VinbergCone::with_lattice(datum, VinbergLattice::default(), limits)
    }

    pub fn with_lattice(datum: &RootDatum, lattice: VinbergLattice, limits: &Limits) -> Result<Self> {
        if !datum.is_semisimple() {
            return Err(Error::NotSemisimple(datum.central_rank()));
        }
        let n = datum.rank();
        let weyl = datum.weyl_group(&LeviSubset::full(datum), limits)?;
        let adj = datum.adjugate();
        let mut constraints: Vec<Vec<i64>> = Vec::with_capacity(weyl.len() * n);
        for w in &weyl {
            let m = w.matrix();
            for a in adj {
                // a . (l2 - W l1) >= 0
                let mut c: Vec<i64> = (0..n)
                    .map(|j| -(0..n).map(|r| a[r] * m[r][j]).sum::<i64>())
                    .collect();
                c.extend_from_slice(a);
                constraints.push(c);
            }
        }
        constraints.sort();
        constraints.dedup();
        let cone = RationalCone::from_halfspaces_with(2 * n, constraints, limits)?;
        Ok(VinbergCone {
            datum: datum.clone(),
            cone,
            weyl,
            lattice,
        })
    }

    pub fn datum(&self) -> &RootDatum {
        &self.datum
    }

    pub fn cone(&self) -> &RationalCone {
        &self.cone
    }

    pub fn weyl(&self) -> &[WeylElement] {
        &self.weyl
    }

    pub fn lattice(&self) -> VinbergLattice {
        self.lattice
    }

    fn concat(l1: &Weight, l2: &Weight) -> Vec<i64> {
        l1.coords().iter().chain(l2.coords()).copied().collect()
    }

    /// Whether `(l1, l2)` is a lattice point of the monoid.
    pub fn contains(&self, l1: &Weight, l2: &Weight) -> bool {
        let n = self.datum.rank();
        if l1.dim() != n || l2.dim() != n || !self.cone.contains(&VinbergCone::concat(l1, l2)) {
            return false;
        }
        match self.lattice {
            VinbergLattice::RootCongruent => self.datum.root_coordinates(&(l2 - l1)).is_some(),
            VinbergLattice::Full => true,
        }
    }

    /// Monoid points with max-norm at most `height`, as pairs.
    pub fn points(&self, height: i64) -> Vec<(Weight, Weight)> {
        let n = self.datum.rank();
        self.cone
            .enumerate_points(height)
            .into_iter()
            .map(|p| (Weight::new(p[..n].to_vec()), Weight::new(p[n..].to_vec())))
            .filter(|(l1, l2)| self.contains(l1, l2))
            .collect()
    }

    /// `eps(l2 - l1) * l1` where `eps` is evaluation at `c_P`.
    pub fn project_idempotent(&self, cp: &CpPoint, l1: &Weight, l2: &Weight) -> Result<Weight> {
        if !self.contains(l1, l2) {
            return Err(Error::OutsideCone);
        }
        Ok(match eval_at_cp(&self.datum, &(l2 - l1), cp)? {
            1 => l1.clone(),
            _ => Weight::zero(l1.dim()),
        })
    }

    /// Projections of all monoid points of norm at most `height`.
    pub fn image_window(&self, cp: &CpPoint, height: i64) -> Result<BTreeSet<Weight>> {
        self.points(height)
            .iter()
            .map(|(l1, l2)| self.project_idempotent(cp, l1, l2))
            .collect()
    }

    /// The projection maps the monoid onto `W_M` applied to the dominant weights.
    ///
    /// Forward: every monoid point in the window projects into the target and
    /// has non-negative off-Levi root coordinates. Backward: every target
    /// weight `v` in the window is the image of `(v, l)` with `l` its dominant
    /// conjugate.
    pub fn check_image(&self, cp: &CpPoint, pd: &ParabolicData, height: i64) -> Result<Report> {
        if pd.datum() != &self.datum {
            return Err(Error::Inconsistent("parabolic data built on another root datum".into()));
        }
        if pd.levi() != cp.levi() {
            return Err(Error::Inconsistent("c_P and parabolic data use different Levis".into()));
        }
        let mut report = Report::new("vinberg-image", pd.instance(), format!("window:{height}"));
        for (l1, l2) in self.points(height) {
            let pair = VinbergCone::concat(&l1, &l2);
            let diff = &l2 - &l1;
            match pr_off_levi(&self.datum, &diff, cp.levi()) {
                Ok(pr) if pr.iter().all(|&x| x >= 0) => {}
                Ok(pr) => report.fail("negative off-Levi root coordinate", pair.clone(), Some(pr)),
                Err(_) => report.fail("difference outside the root lattice", pair.clone(), None),
            }
            match self.project_idempotent(cp, &l1, &l2) {
                Ok(v) => report.check(pd.in_wm_dominant(&v), "projection leaves the target", &pair, Some(v.coords())),
                Err(_) => report.fail("difference outside the positive root span", pair, None),
            }
        }
        for p in box_points(self.datum.rank(), -height, height) {
            let v = Weight(p);
            if !pd.in_wm_dominant(&v) {
                continue;
            }
            let l = self.datum.dominant_conjugate(&v, cp.levi());
            if !self.contains(&v, &l) {
                report.fail("witness pair outside the cone", v.0.clone(), Some(l.0));
                continue;
            }
            let image = self.project_idempotent(cp, &v, &l)?;
            report.check(image == v, "witness pair projects elsewhere", v.coords(), Some(image.coords()));
        }
        Ok(report)
    }
}

/// Evaluation of the monomial `v` at `c_P`: 1 iff `v` is supported on the Levi.
///
/// Defined only on the non-negative integral span of the simple roots.
pub fn eval_at_cp(datum: &RootDatum, v: &Weight, cp: &CpPoint) -> Result<u8> {
    let coords = datum
        .root_coordinates(v)
        .filter(|c| c.iter().all(|&x| x >= 0))
        .ok_or_else(|| Error::NotInPositiveRootSpan(v.0.clone()))?;
    Ok(coords
        .iter()
        .enumerate()
        .all(|(i, &c)| c == 0 || cp.levi().contains(i)) as u8)
}

/// Simple-root coordinates of `v` at the nodes outside the Levi, in node order.
pub fn pr_off_levi(datum: &RootDatum, v: &Weight, levi: &LeviSubset) -> Result<Vec<i64>> {
    let coords = datum
        .root_coordinates(v)
        .ok_or_else(|| Error::NotInRootLattice(v.0.clone()))?;
    Ok(coords
        .into_iter()
        .enumerate()
        .filter(|(i, _)| !levi.contains(*i))
        .map(|(_, c)| c)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(v: &[i64]) -> Weight {
        Weight::new(v.to_vec())
    }

    fn setup(t: &str, labels: &[usize]) -> (RootDatum, CpPoint) {
        let d = RootDatum::parse(t).unwrap();
        let m = LeviSubset::from_labels(&d, labels.iter().copied()).unwrap();
        (d, CpPoint::new(m))
    }

    #[test]
    fn a1_cone() {
        let (d, _) = setup("A1", &[]);
        let vc = VinbergCone::new(&d, &Limits::default()).unwrap();
        let expected = RationalCone::from_halfspaces(2, [vec![-1, 1], vec![1, 1]]).unwrap();
        assert_eq!(vc.cone(), &expected);
        assert_eq!(vc.cone().halfspaces(), &[vec![-1, 1], vec![1, 1]]);
        assert!(vc.contains(&w(&[1]), &w(&[1])));
        assert!(!vc.contains(&w(&[0]), &w(&[1])));
        assert!(vc.cone().contains(&[0, 1]));
    }

    #[test]
    fn regular_dominant_second_factor() {
        let (d, _) = setup("B2", &[]);
        let vc = VinbergCone::new(&d, &Limits::default()).unwrap();
        assert!(vc.contains(&w(&[0, 0]), &w(&[2, 2])));
    }

    #[test]
    fn rejects_central_torus() {
        let d = RootDatum::parse("A1xT1").unwrap();
        assert_eq!(
            VinbergCone::new(&d, &Limits::default()).unwrap_err(),
            Error::NotSemisimple(1)
        );
    }

    #[test]
    fn evaluation_examples() {
        let (d, cp) = setup("A2", &[1]);
        assert_eq!(eval_at_cp(&d, &w(&[0, 0]), &cp).unwrap(), 1);
        assert_eq!(eval_at_cp(&d, &d.simple_root(0), &cp).unwrap(), 1);
        assert_eq!(eval_at_cp(&d, &(&d.simple_root(0) + &d.simple_root(1)), &cp).unwrap(), 0);
        assert!(matches!(
            eval_at_cp(&d, &(-&d.simple_root(0)), &cp),
            Err(Error::NotInPositiveRootSpan(_))
        ));
        assert!(matches!(eval_at_cp(&d, &w(&[1, 0]), &cp), Err(Error::NotInPositiveRootSpan(_))));
    }

    #[test]
    fn projection_examples() {
        let (d, cp) = setup("A1", &[]);
        let vc = VinbergCone::new(&d, &Limits::default()).unwrap();
        assert_eq!(vc.project_idempotent(&cp, &w(&[2]), &w(&[2])).unwrap(), w(&[2]));
        assert_eq!(vc.project_idempotent(&cp, &w(&[-1]), &w(&[3])).unwrap(), w(&[0]));
        assert_eq!(vc.project_idempotent(&cp, &w(&[0]), &w(&[2])).unwrap(), w(&[0]));
        assert_eq!(
            vc.project_idempotent(&cp, &w(&[3]), &w(&[1])),
            Err(Error::OutsideCone)
        );
    }

    #[test]
    fn off_levi_projection() {
        let (d, cp) = setup("A2", &[1]);
        let a1 = d.simple_root(0);
        let a2 = d.simple_root(1);
        assert_eq!(pr_off_levi(&d, &a2, cp.levi()).unwrap(), vec![1]);
        assert_eq!(pr_off_levi(&d, &a1.scaled(3), cp.levi()).unwrap(), vec![0]);
        assert_eq!(pr_off_levi(&d, &(&a1 + &a2.scaled(2)), cp.levi()).unwrap(), vec![2]);
        assert!(matches!(pr_off_levi(&d, &w(&[1, 0]), cp.levi()), Err(Error::NotInRootLattice(_))));
    }

    #[test]
    fn image_window_examples() {
        let (d, cp) = setup("A1", &[]);
        let vc = VinbergCone::new(&d, &Limits::default()).unwrap();
        let img: Vec<Weight> = vc.image_window(&cp, 4).unwrap().into_iter().collect();
        assert_eq!(img, (0..=4).map(|k| w(&[k])).collect::<Vec<_>>());

        let (d, cp) = setup("A2", &[1, 2]);
        let vc = VinbergCone::new(&d, &Limits::default()).unwrap();
        let img = vc.image_window(&cp, 2).unwrap();
        for p in box_points(2, -2, 2) {
            // every weight has a dominant conjugate, reached by (w l, l)
            let l = d.dominant_conjugate(&Weight(p.clone()), cp.levi());
            if l.max_norm() <= 2 {
                assert!(img.contains(&Weight(p)));
            }
        }
    }

    #[test]
    fn image_checks() {
        let lim = Limits::default();
        for (t, labels) in [("A1", vec![]), ("A1", vec![1]), ("A2", vec![1]), ("B2", vec![2])] {
            let (d, cp) = setup(t, &labels);
            let vc = VinbergCone::new(&d, &lim).unwrap();
            let pd = ParabolicData::build(&d, cp.levi(), &lim).unwrap();
            let r = vc.check_image(&cp, &pd, 3).unwrap();
            assert!(r.pass, "{r}");
        }
    }

    #[test]
    fn indicator_is_idempotent() {
        let (_, cp) = setup("A3", &[1, 3]);
        assert_eq!(cp.compose(&cp), cp);
        assert_eq!(cp.indicator(3), vec![1, 0, 1]);
    }
}
