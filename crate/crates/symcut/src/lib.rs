//! Exact geometry of compact symmetric spaces: cut-locus polytopes,
//! injectivity radii and diameters, all in rational arithmetic.
//!
//! The pipeline runs from restricted root systems ([`roots`]) through the
//! Cartan polytope and its distinguished vertices ([`alcove`]), the deck
//! transformation groups those vertices generate ([`center`]), the cut-locus
//! polytope with exact vertex enumeration ([`polytope`]), the Killing-form
//! normalization that converts polytope units to radians ([`killing`]), and
//! finally the catalog of spaces with the two result tables ([`catalog`]).
//!
//! Quantities are `BigRational` end to end; floating point appears only when
//! rendering decimal approximations for display.

pub mod alcove;
pub mod catalog;
pub mod center;
pub mod golden;
pub mod killing;
pub mod mat;
pub mod polytope;
pub mod report;
pub mod roots;
pub mod verify;

use num_bigint::BigInt;

/// Exact rational scalar used throughout the crate.
pub type Rat = num_rational::BigRational;

/// The integer `n` as a rational.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// The reduced fraction `n/d`.
///
/// Panics if `d == 0`; callers only pass literal denominators.
pub fn frac(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Default bound on the rank accepted by exhaustive vertex enumeration.
///
/// Every space in the bundled tables has restricted rank at most 8. The CLI
/// can raise the cap with `--max-rank` or the `SYMCUT_MAX_RANK` variable.
pub const DEFAULT_RANK_CAP: u32 = 8;

/// Errors shared by the whole pipeline.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// Non-reduced restricted systems have no double-coefficient vertex data
    /// and admit no nontrivial quotients, so every geometric operation
    /// rejects them up front.
    #[error("root system {0} is non-reduced; it has a trivial center and no quotient data")]
    NonReducedType(String),

    #[error("rank {rank} is out of range for family {family}: {reason}")]
    RankOutOfRange {
        family: String,
        rank: u32,
        reason: String,
    },

    #[error("gram matrix of {0} is singular")]
    SingularGram(String),

    #[error("alcove reduction did not terminate within {steps} reflections")]
    NonTerminating { steps: u32 },

    #[error("reduction of a center sum landed at {point}, which is not a center element")]
    ReductionMismatch { point: String },

    #[error("rank {rank} exceeds the enumeration cap {cap}; raise it with --max-rank or SYMCUT_MAX_RANK")]
    RankCapExceeded { rank: u32, cap: u32 },

    /// A label or parameter combination that names no catalog case.
    #[error("unknown case: {0}")]
    UnknownCase(String),

    /// The center is trivial or the restricted system is non-reduced, so the
    /// space admits no proper quotient forms.
    #[error("{0} admits no quotient forms")]
    NoForms(String),

    #[error("Ricci curvature must be positive, got {0}")]
    NonPositiveRicci(String),

    /// Malformed or ambiguous query input (bad subgroup name, bad fraction).
    #[error("{0}")]
    BadQuery(String),
}

pub type Result<T> = std::result::Result<T, Error>;
