use thiserror::Error;

use crate::game::Strategy;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GameError {
    /// A parameter that must be a finite, non-negative real was not.
    #[error("invalid parameter `{name}`: {value} (must be finite and >= 0)")]
    InvalidParameter { name: &'static str, value: f64 },

    #[error("invalid parameter `{name}`: {value} (must be finite)")]
    NonFiniteParameter { name: &'static str, value: f64 },

    #[error("utility for {strategy} is not finite")]
    NonFiniteUtility { strategy: Strategy },

    #[error("leader objective is not finite")]
    NonFiniteObjective,

    #[error("population must contain at least one member")]
    EmptyPopulation,

    #[error("population member {index}: {source}")]
    Member {
        index: usize,
        #[source]
        source: Box<GameError>,
    },

    #[error("invalid range: [{lo}, {hi}]")]
    InvalidRange { lo: f64, hi: f64 },

    #[error("count must be at least 1")]
    ZeroCount,

    #[error("weight domain must have resolution >= 1")]
    ZeroResolution,

    #[error("weight domain produced no grid points")]
    EmptyDomain,

    #[error("at delta = {delta}: {source}")]
    AtDelta {
        delta: f64,
        #[source]
        source: Box<GameError>,
    },

    #[error("sweep axes must name distinct parameters (both are `{0}`)")]
    DuplicateAxis(&'static str),

    #[error("region boundary requires a single delta axis")]
    NotDeltaSweep,
}

pub type Result<T, E = GameError> = std::result::Result<T, E>;

pub(crate) fn non_negative(name: &'static str, value: f64) -> Result<f64> {
    if value.is_finite() && value >= 0.0 {
        Ok(value)
    } else {
        Err(GameError::InvalidParameter { name, value })
    }
}

pub(crate) fn finite(name: &'static str, value: f64) -> Result<f64> {
    if value.is_finite() {
        Ok(value)
    } else {
        Err(GameError::NonFiniteParameter { name, value })
    }
}
