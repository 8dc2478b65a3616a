use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("empty point set")]
    EmptyPointSet,
    #[error("non-finite coordinate in input point ({0}, {1})")]
    NonFinite(f64, f64),
    #[error("highway speed must be finite and greater than 1, got {0}")]
    InvalidSpeed(f64),
    #[error("operation requires a finite highway speed")]
    InfiniteSpeed,
    #[error("L1 metric requires axis-aligned highway")]
    L1RequiresAxisAligned,
    #[error("rhombus weights must be positive, got ({0}, {1})")]
    NonPositiveWeight(f64, f64),
    #[error("rank {k} out of range for a matrix with {len} entries")]
    RankOutOfRange { k: usize, len: usize },
    #[error("instance too large for exact mode; use approx_cross_1eps (n = {n}, limit {limit})")]
    InstanceTooLarge { n: usize, limit: usize },
    #[error("at least {needed} points required, got {got}")]
    TooFewPoints { needed: usize, got: usize },
    #[error("epsilon must be positive and finite, got {0}")]
    InvalidEpsilon(f64),
    #[error("delta must be non-negative and finite, got {0}")]
    InvalidDelta(f64),
    #[error("generator value {0} must lie strictly inside (-1, 1)")]
    GeneratorValue(f64),
    #[error("generator requires non-empty value sets")]
    EmptyGeneratorSet,
    #[error("at least one pair required")]
    NoPairs,
}

pub type Result<T> = std::result::Result<T, Error>;
