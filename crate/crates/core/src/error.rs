use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown Cartan type `{0}`")]
    UnknownType(String),
    #[error("rank {rank} is out of range for type {family}")]
    RankOutOfRange { family: char, rank: usize },
    #[error("invalid Cartan matrix: {0}")]
    InvalidCartan(String),
    #[error("node {0} is not a node of the Dynkin diagram")]
    InvalidNode(usize),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("Weyl group enumeration exceeded the cap of {cap} elements")]
    WeylCapExceeded { cap: usize },
    #[error("ambient dimension {dim} exceeds the configured bound {max}")]
    DimensionBound { dim: usize, max: usize },
    #[error("search budget of {budget} steps exhausted")]
    BudgetExceeded { budget: u64 },
    #[error("coefficient norm {norm} exceeds the configured cap {cap}")]
    NormCap { norm: i64, cap: i64 },
    #[error("weight {0:?} is not dominant for the requested Levi")]
    NotDominant(Vec<i64>),
    #[error("{0:?} is not in the root lattice")]
    NotInRootLattice(Vec<i64>),
    #[error("{0:?} is not in the non-negative span of the simple roots")]
    NotInPositiveRootSpan(Vec<i64>),
    #[error("pair is not a lattice point of the Vinberg cone")]
    OutsideCone,
    #[error("datum must be semisimple, found central rank {0}")]
    NotSemisimple(usize),
    #[error("inconsistent arguments: {0}")]
    Inconsistent(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Budget-type failures: the computation was well posed but too large.
    pub fn is_budget(&self) -> bool {
        matches!(
            self,
            Error::WeylCapExceeded { .. }
                | Error::DimensionBound { .. }
                | Error::BudgetExceeded { .. }
                | Error::NormCap { .. }
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
