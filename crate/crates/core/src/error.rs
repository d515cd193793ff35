// SPDX-License-Identifier: Apache-2.0

use thiserror::Error;

/// Every failure the library reports.
///
/// `TheoremViolation` and the axiom-related variants describe a model that is
/// not a masure; they are expected outcomes for user-built inputs.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("diagonal entry a[{0}][{0}] is not 2")]
    DiagonalNotTwo(usize),
    #[error("off-diagonal entry a[{0}][{1}] is positive")]
    PositiveOffDiagonal(usize, usize),
    #[error("a[{0}][{1}] = 0 but a[{1}][{0}] != 0")]
    AsymmetricZero(usize, usize),
    #[error("matrix is not square")]
    NotSquare,
    #[error("invalid realization: {0}")]
    InvalidRealization(String),
    #[error("index {0} out of range")]
    IndexOutOfRange(usize),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("not in the Tits cone (dominance did not terminate within {bound} steps)")]
    NotInTitsCone { bound: usize },
    #[error("the Kac-Moody matrix is not indecomposable affine")]
    NotAffine,
    #[error("empty input")]
    EmptyInput,
    #[error("empty set")]
    EmptySet,
    #[error("origin is not an interior point")]
    OriginNotInterior,
    #[error("gauge vanishes at this point")]
    ZeroGauge,
    #[error("points are not comparable")]
    NotComparable,
    #[error("lambda is not dominant")]
    NonDominantLambda,
    #[error("linear form is not a real root: {0}")]
    NotARealRoot(String),
    #[error("level {level} is not an admissible wall level for root {root}")]
    LevelNotInLambda { root: String, level: String },
    #[error("inconsistent gluing: {0}")]
    InconsistentGluing(String),
    #[error("closure exceeded {0} pieces")]
    ClosureTooLarge(usize),
    #[error("expected two distinct charts, got {0} twice")]
    SameChart(usize),
    #[error("charts {0} and {1} do not intersect")]
    EmptyIntersection(usize, usize),
    #[error("theorem violation: {0}")]
    TheoremViolation(String),
    #[error("no apartment contains both the point and the germ: {0}")]
    NoApartmentContainsBoth(String),
    #[error("no chart contains both points")]
    NoCommonChart,
    #[error("the line misses the intersection")]
    LineMissesIntersection,
    #[error("direction is not generic for this intersection")]
    NotGenericDirection,
    #[error("charts {0} and {1} are not connected")]
    NotConnected(usize, usize),
    #[error("vector is not in the inessential part")]
    NotInAIn,
    #[error("level {0} does not admit a reflection")]
    LevelNotReflectable(String),
    #[error("defining list is not minimal: constraint {0} is redundant")]
    NotMinimalWriting(usize),
    #[error("set has empty interior")]
    EmptyInterior,
    #[error("catalog of {size} items exceeds the cap {cap}")]
    CatalogTooLarge { size: usize, cap: usize },
    #[error("unknown chart {0}")]
    UnknownChart(usize),
    #[error("{0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
