//! Demazure (0-Hecke) products of permutations and signed permutations.
//!
//! The Demazure product `w ⋆ v` is the associative monoid product on a
//! Coxeter group determined by `s ⋆ s = s` for simple generators together
//! with `s ⋆ w = sw` when left multiplication raises length and `s ⋆ w = w`
//! when it drops length.  Computing it by folding a reduced word of `w`
//! over `v` costs one pass per generator; this crate instead starts from
//! the ordinary product `wv` and applies *hopping operators* — rewriting
//! steps that move a tracked value rightward through targets drawn from an
//! ordered list — which needs only the one-line notations of `w` and `v`.
//!
//! * [`perm`] — permutations of `{1, …, n}`: composition, length, Bruhat
//!   order, reduced words, string generators, inversion sequences.
//! * [`hop`] — type-A hopping operators and the hopping formula for `⋆`.
//! * [`signed`] — signed permutations (type B): folding/unfolding into
//!   `S_{2n}`, type-B hopping, string generators, decomposition.
//! * [`oracle`] — independent reduced-word implementation of `⋆` plus
//!   Bruhat-interval utilities, used to validate the hopping algorithm.
//! * [`bench`] — seeded random inputs and a timing harness contrasting the
//!   hopping algorithm with the reduced-word oracle.

pub mod bench;
pub mod hop;
pub mod oracle;
pub mod perm;
pub mod signed;

pub use bench::{random_permutation, random_signed_permutation, run_bench, BenchReport, BenchRow, Kind};
pub use hop::{demazure_star, hop, star_string, HopTrace};
pub use oracle::{
    demazure_oracle, demazure_oracle_b, hyperoctahedral_group, length_by_bfs, length_by_bfs_b,
    lower_interval, star_simple_left, symmetric_group, verify_interval_product,
};
pub use perm::{HopList, InversionSequence, Permutation};
pub use signed::{
    b_less, demazure_star_b, extended_value, hop_b, normalize_generator, star_string_b,
    SignedHopList, SignedHopTrace, SignedPermutation,
};

/// Errors produced by construction, parsing, and the rank-capped oracles.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("rank must be at least 1")]
    ZeroRank,
    #[error("ranks differ: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },
    #[error("value {value} out of range for rank {n}")]
    ValueRange { value: i64, n: usize },
    #[error("duplicate value {0}")]
    DuplicateValue(i64),
    #[error("generator index {i} out of range for rank {n}")]
    GeneratorRange { i: usize, n: usize },
    #[error("string generator ({a}, {b}) out of range for rank {n}")]
    StringRange { a: usize, b: usize, n: usize },
    #[error("mirror symmetry violated at position {0}")]
    MirrorViolation(usize),
    #[error("cannot fold a permutation of odd rank {0}")]
    FoldRank(usize),
    #[error("invalid inversion sequence: {0}")]
    InvalidSequence(String),
    #[error("rank {n} exceeds the cap of {max} for this operation")]
    RankCap { n: usize, max: usize },
    #[error("cannot parse {0:?} as a one-line word")]
    Parse(String),
    #[error("bench configuration: {0}")]
    Bench(String),
    #[error("hopping product and oracle disagree on {0}")]
    Disagreement(String),
}

pub type Result<T> = std::result::Result<T, Error>;
