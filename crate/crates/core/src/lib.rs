//! Additive codes over GF(4) built from circulant graphs.
//!
//! A circulant graph on `n` vertices is described by the first row of its
//! adjacency matrix. Putting ω on the diagonal gives the generator matrix
//! `Γ + ωI` of an additive `(n, 2^n)` code, which is always self-dual under
//! the Hermitian trace inner product. This crate builds those codes, finds
//! their minimum distance, counts their full weight distribution and checks
//! the results against the MacWilliams identity.
//!
//! ```
//! use gf4_circulant::{analysis, GeneratorVector};
//!
//! let code = GeneratorVector::parse("w10100100101").unwrap().expand();
//! let result = analysis::min_distance(&code, None);
//! assert_eq!(result.d, 6);
//! assert!(result.proof_complete);
//! ```
//!
//! Bulk loops run on rayon when the `parallel` feature is enabled (the
//! default). Every parallel path splits its work into a fixed set of blocks
//! and merges them in order, so results do not depend on the thread count.

pub mod analysis;
pub mod circulant;
pub mod combin;
pub mod exec;
pub mod gf4;
pub mod report;
pub mod search;
pub mod word;

pub use circulant::{
    candidate_vector, dense_family_vector, validate_circulant_symmetry, CandidateMode,
    CirculantCode, GeneratorMatrix, GeneratorVector, SymmetryViolation,
};
pub use exec::Execution;
pub use gf4::{herm_trace_ip, Gf4, SymbolVector};
pub use word::BitplaneWord;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid symbol {ch:?} at position {pos}; expected one of 0, 1, w, W")]
    InvalidSymbol { pos: usize, ch: char },
    #[error("symbol {ch:?} at position {pos}: adjacency entries must be 0 or 1")]
    OmegaInAdjacency { pos: usize, ch: char },
    #[error("generator vector must start with w (or 0), found {ch:?}")]
    BadLeadingSymbol { ch: char },
    #[error("generator vector starts with 1: the graph would have a self-loop")]
    SelfLoop,
    #[error("empty input")]
    Empty,
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("length {n} outside the supported range 1..={max}")]
    Capacity { n: usize, max: usize },
    #[error("bits set beyond coordinate {n}")]
    StrayBits { n: usize },
    #[error("not circulant-symmetric: {0}")]
    Asymmetric(SymmetryViolation),
    #[error("neighbour offset {offset} out of range for n = {n}")]
    OffsetOutOfRange { offset: usize, n: usize },
    #[error("candidate vectors need an even length, got {n}")]
    OddLength { n: usize },
    #[error("target distance {target} unsupported in {mode} mode (needs an even value, at least 4 for plus and 6 for minus)")]
    BadTarget { target: usize, mode: &'static str },
    #[error("n = {n} is too small for target distance {target}: neighbour offsets collide")]
    CandidateCollision { n: usize, target: usize },
    #[error("dense family needs n >= 21, got {n}")]
    DenseTooShort { n: usize },
    #[error("unknown mode {0:?}; expected plus or minus")]
    BadMode(String),
    #[error("weight enumeration of length {n} exceeds the guard of {limit}; pass the large-run override")]
    CostGuard { n: usize, limit: usize },
    #[error("generator rows are linearly dependent: zero word reached {zero_count} times")]
    RankDeficient { zero_count: u64 },
    #[error("no lower bound known for n = {n}")]
    MissingBound { n: usize },
    #[error("bounds file line {line}: {msg}")]
    BoundsParse { line: usize, msg: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
