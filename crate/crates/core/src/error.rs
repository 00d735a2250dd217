use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("invalid model parameters: {0}")]
    InvalidParams(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("coordinates missing or not aligned with the graph ({coords} coordinates for {vertices} vertices)")]
    MissingCoordinates { coords: usize, vertices: usize },

    #[error("invalid decomposition: {0}")]
    InvalidDecomposition(String),

    #[error("decomposition width {width} exceeds the cap {cap}; increase the cap or use approximation")]
    WidthCapExceeded { width: usize, cap: usize },

    #[error("component with {size} vertices exceeds the exhaustive-search limit {limit}")]
    SizeGuard { size: usize, limit: usize },

    #[error("branching budget of {budget} search nodes exhausted; increase the budget or use approximation")]
    BudgetExhausted { budget: u64 },

    #[error("interrupted by the caller's time budget")]
    Interrupted,
}

impl Error {
    /// Resource exhaustion (caps, budgets, interrupts) as opposed to bad input.
    pub fn is_resource_limit(&self) -> bool {
        matches!(
            self,
            Error::WidthCapExceeded { .. }
                | Error::SizeGuard { .. }
                | Error::BudgetExhausted { .. }
                | Error::Interrupted
        )
    }
}
