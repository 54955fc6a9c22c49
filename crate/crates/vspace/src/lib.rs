//! Vector spaces as canonical labeled row spaces over exact fields.
//!
//! A [`VSpace`] on columns `X` supports restriction `∘T`, contraction `×T`,
//! sums and intersections across overlapping column sets, complementary
//! orthogonal spaces, and matched composition.

mod field;
mod format;
mod ground;
mod space;

pub use field::{Field, Scalar};
pub use format::{parse_matrix, write_matrix};
pub use ground::{GroundSet, Label, Set, MAX_GROUND};
pub use space::{rank_of_rows, rref, VSpace};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SpaceError {
    #[error("row has {found} entries, expected {expected}")]
    Dimension { expected: usize, found: usize },
    #[error("mixed fields: {0}")]
    MixedFields(String),
    #[error("unknown label `{0}`")]
    UnknownLabel(String),
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),
    #[error("invalid label `{0}`")]
    BadLabel(String),
    #[error("label `{0}` occurs on both outer sides")]
    Overlap(String),
    #[error("T2 must be contained in T1")]
    Containment,
    #[error("relabeling is not a bijection")]
    NotBijective,
    #[error("{0} is not a supported prime modulus")]
    NotPrime(u64),
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("cannot parse scalar `{0}`")]
    BadScalar(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}
