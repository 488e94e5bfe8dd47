use alloc::string::String;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// An argument lies outside the mathematical domain of the operation.
    #[error("domain error in {op}: {reason}")]
    Domain { op: &'static str, reason: String },

    /// An iterative method failed to converge.
    #[error("{op} did not converge: {detail}")]
    NoConvergence { op: &'static str, detail: String },

    /// Integer result does not fit the return type.
    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    /// The resonance bracket is non-positive: no weakly bound level on this
    /// side of the Bessel zero.
    #[error("no near-threshold bound state: resonance bracket is {bracket:e} (must be > 0)")]
    NoNearThresholdState { bracket: f64 },

    /// `Y_nu` vanishes at the core argument.
    #[error("singular configuration: {0}")]
    Singular(String),

    /// The numerical spectrum is empty.
    #[error("no bound states found")]
    NoBoundState,

    /// The shooting scan produced an inconsistent state count.
    #[error("insufficient resolution: {0}")]
    Resolution(String),

    /// The radial grid would exceed the point budget.
    #[error("radial grid needs {points} points (limit {limit}); configuration too stiff")]
    Resource { points: usize, limit: usize },

    /// A fit or self-consistency check exceeded its tolerance.
    #[error("accuracy check failed: {0}")]
    Accuracy(String),

    /// A non-finite value appeared during integration.
    #[error("non-finite value: {0}")]
    NonFinite(String),
}

impl Error {
    pub(crate) fn domain(op: &'static str, reason: impl Into<String>) -> Self {
        Error::Domain { op, reason: reason.into() }
    }
}
