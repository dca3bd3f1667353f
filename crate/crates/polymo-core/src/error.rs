//! Error type shared across the crate.

use alloc::string::String;

/// Errors reported by the constraint solver, MPO assembly, and oracles.
///
/// Contract violations that indicate a caller bug (negative ranges, malformed
/// partitions) panic instead; `Error` covers failures that depend on the
/// input data.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// The requested working precision is below IEEE double.
    #[error("precision must be at least 53 bits, got {0}")]
    PrecisionTooLow(usize),

    /// A polynomial was declared degree `k` but its leading coefficient is
    /// zero.
    #[error("polynomial has zero leading coefficient; true degree {0} required")]
    NotTrueDegree(usize),

    /// The exponential decay factor must be non-negative.
    #[error("decay factor beta must be >= 0, got {0}")]
    NegativeBeta(String),

    /// `P(1) = 0`: the interaction amplitude at unit separation vanishes and
    /// the coefficient system cannot be normalized.
    #[error("polynomial vanishes at x = 1; the coupling cannot be realized by this ansatz")]
    ZeroAtUnitSeparation,

    /// The leading constraint value is negative with even degree, so the
    /// first coefficient has no real root.
    #[error("leading constraint value {value} is negative for even degree {k}; a_1 is not real")]
    NonRealRoot { k: usize, value: String },

    /// Substitution left a vanishing linear coefficient for the next unknown
    /// in the equation of order `m`.
    #[error("equation of order m={m} has vanishing linear coefficient for a_{unknown}")]
    UnsolvableStep { m: usize, unknown: usize },

    /// A dense construction would exceed the desk-scale size cap.
    #[error("dense dimension {dim} exceeds cap {cap}")]
    SystemTooLarge { dim: usize, cap: usize },

    /// Open-boundary factor lists need at least two sites.
    #[error("chain length must be at least 2, got {0}")]
    ChainTooShort(usize),
}

pub type Result<T> = core::result::Result<T, Error>;
