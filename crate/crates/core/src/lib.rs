//! Exact lattice, Weyl group and rational cone combinatorics for reductive
//! monoids attached to parabolic subgroups.
//!
//! Weights are written in fundamental-weight coordinates and coweights in
//! simple-coroot coordinates, each followed by the coordinates of the central
//! torus. Everything is exact; there is no floating point.

pub mod cli;
pub mod cones;
pub mod error;
pub mod limits;
pub(crate) mod linalg;
pub mod parabolic;
pub mod repr_weights;
pub mod report;
pub mod root_datum;
pub mod vinberg;

pub use cones::{CertificateLevel, LatticeMonoid, RationalCone, SaturationCertificate};
pub use error::{Error, Result};
pub use limits::Limits;
pub use parabolic::ParabolicData;
pub use report::{Counterexample, Report};
pub use root_datum::{pairing, CartanType, Coweight, LeviSubset, RootDatum, TypeSpec, Weight, WeylElement};
pub use vinberg::{CpPoint, VinbergCone};
