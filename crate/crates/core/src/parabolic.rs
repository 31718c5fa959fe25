//! The monoid of coroots of the unipotent radical, the Renner cone of the
//! Levi, and the checks relating them.

use serde::Serialize;

use crate::cones::{CertificateLevel, LatticeMonoid, RationalCone};
use crate::error::Result;
use crate::limits::Limits;
use crate::linalg::{box_points, dot};
use crate::report::Report;
use crate::root_datum::{Coweight, LeviSubset, RootDatum, Weight, WeylElement};

/// Data attached to a parabolic with Levi factor given by `levi`.
#[derive(Debug, Clone)]
pub struct ParabolicData {
    datum: RootDatum,
    levi: LeviSubset,
    pos_up: LatticeMonoid,
    renner_generators: Vec<Weight>,
    weyl_levi: Vec<WeylElement>,
    limits: Limits,
}

#[derive(Serialize)]
struct ParabolicJson<'a> {
    levi: Vec<usize>,
    pos_up: &'a [Vec<i64>],
    renner_generators: &'a [Weight],
}

impl Serialize for ParabolicData {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ParabolicJson {
            levi: self.levi.labels(),
            pos_up: self.pos_up.generators(),
            renner_generators: &self.renner_generators,
        }
        .serialize(s)
    }
}

impl ParabolicData {
    pub fn build(datum: &RootDatum, levi: &LeviSubset, limits: &Limits) -> Result<Self> {
        let weyl_levi = datum.weyl_group(levi, limits)?;
        let dim = datum.dim();
        let pos_up = LatticeMonoid::new_with(
            dim,
            datum
                .positive_coroots()
                .into_iter()
                .filter(|c| (0..datum.rank()).any(|i| c[i] != 0 && !levi.contains(i)))
                .map(|c| c.0),
            limits,
        )?;
        let mut gens: Vec<Weight> = Vec::new();
        for w in &weyl_levi {
            for i in 0..datum.rank() {
                gens.push(Weight(w.weight_unchecked(datum.fundamental_weight(i).coords())));
            }
        }
        for k in datum.rank()..dim {
            let e = Weight::basis(dim, k);
            gens.push(-&e);
            gens.push(e);
        }
        gens.sort();
        gens.dedup();
        Ok(ParabolicData {
            datum: datum.clone(),
            levi: levi.clone(),
            pos_up,
            renner_generators: gens,
            weyl_levi,
            limits: *limits,
        })
    }

    /// Replaces the generators of the unipotent monoid; used to check that
    /// the verifications detect a corrupted input.
    pub fn with_pos_up_generators(mut self, generators: Vec<Vec<i64>>) -> Result<Self> {
        self.pos_up = LatticeMonoid::new_with(self.datum.dim(), generators, &self.limits)?;
        Ok(self)
    }

    pub fn datum(&self) -> &RootDatum {
        &self.datum
    }

    pub fn levi(&self) -> &LeviSubset {
        &self.levi
    }

    pub fn limits(&self) -> &Limits {
        &self.limits
    }

    pub fn pos_up(&self) -> &LatticeMonoid {
        &self.pos_up
    }

    pub fn renner_generators(&self) -> &[Weight] {
        &self.renner_generators
    }

    pub fn weyl_levi(&self) -> &[WeylElement] {
        &self.weyl_levi
    }

    /// Label used in reports, e.g. `A2 levi={1}`.
    pub fn instance(&self) -> String {
        format!("{} levi={}", self.datum.type_name(), self.levi)
    }

    pub fn renner_cone(&self) -> RationalCone {
        RationalCone::from_generators_unchecked(
            self.datum.dim(),
            &self.renner_generators.iter().map(|g| g.0.clone()).collect::<Vec<_>>(),
        )
    }

    pub fn pos_up_cone(&self) -> RationalCone {
        self.pos_up.cone()
    }

    pub fn renner_monoid(&self) -> LatticeMonoid {
        LatticeMonoid::new_with(
            self.datum.dim(),
            self.renner_generators.iter().map(|g| g.0.clone()),
            &self.limits,
        )
        .expect("dimension already validated")
    }

    /// Membership in `W_M` applied to the dominant weights.
    pub fn in_wm_dominant(&self, v: &Weight) -> bool {
        let rep = self.datum.dominant_conjugate(v, &self.levi);
        self.datum.is_dominant(&rep, &LeviSubset::full(&self.datum))
    }

    fn pairs_nonnegatively(&self, v: &Weight) -> bool {
        self.pos_up.generators().iter().all(|mu| dot(v.coords(), mu) >= 0)
    }

    /// The renner cone is the dual of the cone of the unipotent monoid, and on
    /// the lattice `W_M`-conjugates of dominant weights are exactly the weights
    /// pairing non-negatively with it.
    pub fn check_duality(&self, height: i64) -> Report {
        let mut report = Report::new("duality", self.instance(), format!("cone+window:{height}"));
        let dual = self.pos_up_cone().dual();
        let renner = self.renner_cone();
        if dual != renner {
            for g in dual.generators().iter().filter(|g| !renner.contains(g)) {
                report.fail("dual generator outside renner cone", g.clone(), None);
            }
            for g in renner.generators().iter().filter(|g| !dual.contains(g)) {
                report.fail("renner generator outside dual cone", g.clone(), None);
            }
            if report.pass {
                report.fail("canonical forms differ", Vec::new(), None);
            }
        }
        for p in box_points(self.datum.dim(), -height, height) {
            let v = Weight(p);
            let lhs = self.in_wm_dominant(&v);
            let rhs = self.pairs_nonnegatively(&v);
            if lhs != rhs {
                let witness = self.datum.dominant_conjugate(&v, &self.levi);
                report.fail(
                    if lhs {
                        "conjugate of dominant pairs negatively"
                    } else {
                        "pairs non-negatively but no dominant conjugate"
                    },
                    v.0,
                    Some(witness.0),
                );
            }
        }
        report
    }

    /// The unipotent monoid is the intersection of the `W_M`-translates of the
    /// positive coroot monoid, both as cones and on lattice points; it also
    /// agrees with the positive coroot monoid on anti-dominant coweights of `M`.
    pub fn check_intersection_lemma(&self, height: i64) -> Result<Report> {
        let mut report = Report::new("posU", self.instance(), format!("cone+window:{height}"));
        let dim = self.datum.dim();
        let translates: Vec<RationalCone> = self
            .weyl_levi
            .iter()
            .map(|w| {
                let gens: Vec<Vec<i64>> = (0..self.datum.rank())
                    .map(|i| w.coweight_unchecked(self.datum.simple_coroot(i).coords()))
                    .collect();
                RationalCone::from_generators_unchecked(dim, &gens)
            })
            .collect();
        let meet = RationalCone::intersect(&translates)?;
        let cone = self.pos_up_cone();
        if meet != cone {
            for g in meet.generators().iter().filter(|g| !cone.contains(g)) {
                report.fail("intersection generator outside unipotent cone", g.clone(), None);
            }
            for g in cone.generators().iter().filter(|g| !meet.contains(g)) {
                report.fail("unipotent generator outside intersection", g.clone(), None);
            }
            if report.pass {
                report.fail("canonical forms differ", Vec::new(), None);
            }
        }
        let anti_dominant = |v: &Coweight| {
            self.levi
                .iter()
                .all(|i| self.datum.root_pairing(i, v) <= 0)
        };
        for p in box_points(dim, -height, height) {
            let v = Coweight(p);
            let in_monoid = self.pos_up.contains(v.coords(), &self.limits)?;
            let offending = self
                .weyl_levi
                .iter()
                .find(|w| !self.datum.in_positive_coroot_monoid(&Coweight(w.coweight_unchecked(v.coords()))));
            if in_monoid != offending.is_none() {
                report.fail(
                    if in_monoid {
                        "monoid element with a translate outside the positive coroots"
                    } else {
                        "in every translate but not in the monoid"
                    },
                    v.0.clone(),
                    offending.map(|w| w.word().iter().map(|&i| i as i64 + 1).collect()),
                );
            }
            if anti_dominant(&v) && in_monoid != self.datum.in_positive_coroot_monoid(&v) {
                report.fail("anti-dominant clause violated", v.0.clone(), None);
            }
        }
        Ok(report)
    }

    /// If `lambda <=_M lambda'` are `M`-dominant and `lambda'` is in the
    /// unipotent monoid, so is `lambda`.
    pub fn check_weight_hull(&self, height: i64) -> Result<Report> {
        let mut report = Report::new("wthull", self.instance(), format!("window:{height}"));
        let dominant: Vec<Coweight> = box_points(self.datum.dim(), -height, height)
            .into_iter()
            .map(Coweight)
            .filter(|v| self.datum.is_dominant_coweight(v, &self.levi))
            .collect();
        let mut member = Vec::with_capacity(dominant.len());
        for v in &dominant {
            member.push(self.pos_up.contains(v.coords(), &self.limits)?);
        }
        for (hi, &hi_in) in dominant.iter().zip(&member) {
            if !hi_in {
                continue;
            }
            for (lo, &lo_in) in dominant.iter().zip(&member) {
                if !lo_in && self.datum.coweight_leq(lo, hi, &self.levi) {
                    report.fail("lower coweight left the monoid", lo.0.clone(), Some(hi.0.clone()));
                }
            }
        }
        Ok(report)
    }

    /// The monoid generated by the `W_M`-conjugates of the fundamental weights
    /// is saturated; every Hilbert basis element of its cone is a conjugate of
    /// a dominant weight.
    pub fn check_saturation(&self, height: i64) -> Result<Report> {
        let cert = self.renner_monoid().is_saturated(height, &self.limits)?;
        let level = match cert.level {
            CertificateLevel::Exact => "hilbert-exact".to_string(),
            CertificateLevel::Bounded { height } => format!("bounded:{height}"),
        };
        let mut report = Report::new("saturation", self.instance(), level);
        if let Some(w) = cert.witness {
            report.fail("lattice point of the cone outside the monoid", w, None);
        }
        for h in cert.hilbert_basis.iter().flatten() {
            report.check(
                self.in_wm_dominant(&Weight(h.clone())),
                "hilbert basis element is not a conjugate of a dominant weight",
                h,
                None,
            );
        }
        Ok(report)
    }

    /// Minimal generators of the lattice points of the renner cone: the
    /// weight semigroup of the toric closure of the torus.
    pub fn cartan_closure_semigroup(&self) -> Result<Vec<Weight>> {
        Ok(self
            .renner_cone()
            .hilbert_basis(&self.limits)?
            .into_iter()
            .map(Weight)
            .collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn build(t: &str, labels: &[usize]) -> ParabolicData {
        let d = RootDatum::parse(t).unwrap();
        let m = LeviSubset::from_labels(&d, labels.iter().copied()).unwrap();
        ParabolicData::build(&d, &m, &Limits::default()).unwrap()
    }

    fn ws(v: &[&[i64]]) -> Vec<Weight> {
        v.iter().map(|x| Weight::new(x.to_vec())).collect()
    }

    #[test]
    fn build_examples() {
        let p = build("A1", &[]);
        assert_eq!(p.pos_up().generators(), &[vec![1]]);
        assert_eq!(p.renner_generators(), ws(&[&[1]]).as_slice());

        let p = build("A1", &[1]);
        assert!(p.pos_up().generators().is_empty());
        assert_eq!(p.renner_cone(), RationalCone::full(1));

        let p = build("A2", &[1]);
        assert_eq!(p.pos_up().generators(), &[vec![0, 1], vec![1, 1]]);
        assert_eq!(p.renner_generators(), ws(&[&[-1, 1], &[0, 1], &[1, 0]]).as_slice());
    }

    #[test]
    fn membership_examples() {
        let p = build("A2", &[1]);
        assert!(p.in_wm_dominant(&Weight::new(vec![-1, 1])));
        assert!(p.in_wm_dominant(&Weight::new(vec![3, 2])));
        assert!(!p.in_wm_dominant(&Weight::new(vec![0, -1])));
    }

    #[test]
    fn duality_examples() {
        assert!(build("A1", &[]).check_duality(5).pass);
        let p = build("A2", &[1]);
        assert_eq!(p.renner_cone().halfspaces(), &[vec![0, 1], vec![1, 1]]);
        assert!(p.check_duality(4).pass);
        assert!(build("A2", &[1, 2]).check_duality(4).pass);
    }

    #[test]
    fn intersection_examples() {
        let p = build("A2", &[1]);
        assert_eq!(
            p.pos_up_cone(),
            RationalCone::from_generators(2, [vec![0, 1], vec![1, 1]]).unwrap()
        );
        assert!(p.check_intersection_lemma(4).unwrap().pass);
        assert!(build("A2", &[]).check_intersection_lemma(3).unwrap().pass);
        assert!(build("B2", &[1]).check_intersection_lemma(4).unwrap().pass);
        assert!(build("B2", &[2]).check_intersection_lemma(4).unwrap().pass);
    }

    #[test]
    fn weight_hull_examples() {
        assert!(build("A2", &[1]).check_weight_hull(4).unwrap().pass);
        assert!(build("A2", &[]).check_weight_hull(3).unwrap().pass);
    }

    #[test]
    fn saturation_examples() {
        let p = build("A2", &[1]);
        let r = p.check_saturation(3).unwrap();
        assert!(r.pass);
        assert_eq!(r.level, "hilbert-exact");
        // the cone is unimodular: omega_2 = omega_1 + (omega_2 - omega_1) is redundant
        let hb = p.cartan_closure_semigroup().unwrap();
        assert_eq!(hb, ws(&[&[-1, 1], &[1, 0]]));
        let monoid = LatticeMonoid::new(2, hb.iter().map(|w| w.0.clone())).unwrap();
        assert!(monoid.contains(&[0, 1], &Limits::default()).unwrap());
        assert_eq!(build("A1", &[]).cartan_closure_semigroup().unwrap(), ws(&[&[1]]));
        assert_eq!(build("A1", &[1]).cartan_closure_semigroup().unwrap(), ws(&[&[-1], &[1]]));
        assert!(build("A2", &[1, 2]).check_saturation(3).unwrap().pass);
    }

    #[test]
    fn central_torus_is_unconstrained() {
        let p = build("A1xT1", &[]);
        assert!(p.in_wm_dominant(&Weight::new(vec![1, -5])));
        assert!(p.renner_cone().contains(&[0, -3]));
        assert!(p.check_duality(2).pass);
        assert!(p.check_intersection_lemma(2).unwrap().pass);
        assert!(p.check_saturation(2).unwrap().pass);
    }

    #[test]
    fn corrupted_generators_are_detected() {
        let p = build("A2", &[1]).with_pos_up_generators(vec![vec![1, 1]]).unwrap();
        let r = p.check_duality(3);
        assert!(!r.pass);
        assert!(r.counterexamples.iter().any(|c| !c.vector.is_empty()));
    }
}
