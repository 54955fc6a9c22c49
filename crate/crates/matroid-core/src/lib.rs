//! Matroids as ground sets with memoized independence oracles.
//!
//! Subsets are `u64` bitmasks over the ground order. Every derived handle
//! (dual, minors, sums, relabelings) wraps its operands' oracles lazily, so
//! nothing is enumerated unless asked for.

mod build;
mod format;
mod handle;
pub mod sets;

pub use build::{
    enumerate_bases, exchange_check, explicit, free, graphic, linear, matroid_equal, uniform, zero, ExchangeWitness,
    ExplicitBases,
};
pub use format::{parse_matroid, write_bases, MatroidBody, MatroidDoc};
pub use handle::{FnOracle, Matroid, Oracle};
pub use vspace::{GroundSet, Label, Set};

/// Largest ground the enumerating operations accept by default.
pub const DEFAULT_GUARD: usize = 22;

/// Enumeration guard: `MFORGE_GUARD` if set, else [`DEFAULT_GUARD`].
pub fn guard() -> usize {
    std::env::var("MFORGE_GUARD").ok().and_then(|v| v.trim().parse().ok()).unwrap_or(DEFAULT_GUARD)
}

/// Fails with [`MatroidError::Guard`] above the enumeration guard.
pub fn check_guard(n: usize) -> Result<(), MatroidError> {
    build::check_guard(n)
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MatroidError {
    #[error(transparent)]
    Space(#[from] vspace::SpaceError),
    #[error(transparent)]
    Graph(#[from] graphspace::GraphError),
    #[error("ground of {size} elements exceeds the enumeration guard {limit}")]
    Guard { size: usize, limit: usize },
    #[error("not a base family: {0}")]
    BaseAxiom(String),
    #[error("T2 must be contained in T1")]
    Containment,
    #[error("relabeling is not a bijection")]
    NotBijective,
    #[error("ground sets differ: {0}")]
    GroundMismatch(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}
