/// Enumeration caps shared by every construction and check.
///
/// None of these affect results when they are not hit; exceeding one is
/// reported as an error and never as a negative answer.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Maximum number of Weyl group elements enumerated.
    pub weyl_cap: usize,
    /// Maximum ambient dimension accepted by the double-description method.
    pub dd_max_dim: usize,
    /// Maximum dimension of a cone whose Hilbert basis is computed.
    pub hilbert_max_dim: usize,
    /// Maximum number of parallelepiped points visited by a Hilbert basis computation.
    pub hilbert_budget: u64,
    /// Maximum number of search nodes per monoid membership query.
    pub search_budget: u64,
    /// Maximum max-norm of a vector passed to a monoid membership query.
    pub norm_cap: i64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            weyl_cap: 1_000_000,
            dd_max_dim: 12,
            hilbert_max_dim: 8,
            hilbert_budget: 5_000_000,
            search_budget: 5_000_000,
            norm_cap: 1 << 24,
        }
    }
}

impl Limits {
    /// Overrides every count-type cap with `budget`; dimension bounds are kept.
    pub fn with_budget(mut self, budget: u64) -> Self {
        self.weyl_cap = usize::try_from(budget).unwrap_or(usize::MAX);
        self.hilbert_budget = budget;
        self.search_budget = budget;
        self
    }
}
