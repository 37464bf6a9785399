//! Domain types of the algorithm/creator game and the two creator-utility
//! models.
//!
//! The platform algorithm (leader) sets engagement weights `(alpha, beta,
//! gamma)` on clicks, watch time and shares. A creator (follower) picks one
//! of two strategies and is rewarded by those weights, minus a sponsor
//! penalty `delta` applied to the strategy's drama risk.

use std::fmt;
use std::ops::{Index, IndexMut};
use std::str::FromStr;

use crate::error::{non_negative, GameError, Result};

/// A creator's content strategy.
///
/// Ordered with `Collaboration` first; that order drives iteration and every
/// tie-break in the crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Strategy {
    Collaboration,
    Beefing,
}

impl Strategy {
    /// Both strategies in canonical order.
    pub const ALL: [Strategy; 2] = [Strategy::Collaboration, Strategy::Beefing];

    pub fn name(self) -> &'static str {
        match self {
            Strategy::Collaboration => "Collaboration",
            Strategy::Beefing => "Beefing",
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Strategy {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "Collaboration" => Ok(Strategy::Collaboration),
            "Beefing" => Ok(Strategy::Beefing),
            other => Err(format!("unknown strategy `{other}`")),
        }
    }
}

/// One value per strategy. Total by construction, so a lookup can never miss.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct PerStrategy<T> {
    pub collaboration: T,
    pub beefing: T,
}

impl<T> PerStrategy<T> {
    pub fn new(collaboration: T, beefing: T) -> Self {
        Self { collaboration, beefing }
    }

    pub fn from_fn(mut f: impl FnMut(Strategy) -> T) -> Self {
        Self {
            collaboration: f(Strategy::Collaboration),
            beefing: f(Strategy::Beefing),
        }
    }

    pub fn try_from_fn<E>(mut f: impl FnMut(Strategy) -> std::result::Result<T, E>) -> std::result::Result<Self, E> {
        Ok(Self {
            collaboration: f(Strategy::Collaboration)?,
            beefing: f(Strategy::Beefing)?,
        })
    }

    pub fn map<U>(&self, mut f: impl FnMut(&T) -> U) -> PerStrategy<U> {
        PerStrategy {
            collaboration: f(&self.collaboration),
            beefing: f(&self.beefing),
        }
    }

    /// `(strategy, value)` pairs in canonical order.
    pub fn iter(&self) -> impl Iterator<Item = (Strategy, &T)> {
        Strategy::ALL.into_iter().map(move |s| (s, &self[s]))
    }
}

impl<T> Index<Strategy> for PerStrategy<T> {
    type Output = T;

    fn index(&self, s: Strategy) -> &T {
        match s {
            Strategy::Collaboration => &self.collaboration,
            Strategy::Beefing => &self.beefing,
        }
    }
}

impl<T> IndexMut<Strategy> for PerStrategy<T> {
    fn index_mut(&mut self, s: Strategy) -> &mut T {
        match s {
            Strategy::Collaboration => &mut self.collaboration,
            Strategy::Beefing => &mut self.beefing,
        }
    }
}

/// Expected engagement produced by one strategy.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EngagementProfile {
    clicks: f64,
    watch_time: f64,
    shares: f64,
    drama_risk: f64,
}

impl EngagementProfile {
    pub fn new(clicks: f64, watch_time: f64, shares: f64, drama_risk: f64) -> Result<Self> {
        Ok(Self {
            clicks: non_negative("clicks", clicks)?,
            watch_time: non_negative("watch_time", watch_time)?,
            shares: non_negative("shares", shares)?,
            drama_risk: non_negative("drama_risk", drama_risk)?,
        })
    }

    pub fn clicks(&self) -> f64 {
        self.clicks
    }

    pub fn watch_time(&self) -> f64 {
        self.watch_time
    }

    pub fn shares(&self) -> f64 {
        self.shares
    }

    pub fn drama_risk(&self) -> f64 {
        self.drama_risk
    }

    /// The engagement reward the algorithm pays for this profile, with no
    /// sponsor term: `alpha*clicks + beta*watch_time + gamma*shares`.
    pub fn engagement(&self, weights: &AlgorithmWeights) -> f64 {
        weights.alpha * self.clicks + weights.beta * self.watch_time + weights.gamma * self.shares
    }
}

/// Engagement profiles for both strategies.
pub type GameTable = PerStrategy<EngagementProfile>;

impl GameTable {
    /// The illustrative default table: Collaboration `(2, 5, 3, 0)`,
    /// Beefing `(5, 2, 4, 3)` as (clicks, watch time, shares, drama risk).
    pub fn illustrative() -> Self {
        PerStrategy {
            collaboration: EngagementProfile {
                clicks: 2.0,
                watch_time: 5.0,
                shares: 3.0,
                drama_risk: 0.0,
            },
            beefing: EngagementProfile {
                clicks: 5.0,
                watch_time: 2.0,
                shares: 4.0,
                drama_risk: 3.0,
            },
        }
    }
}

impl Default for GameTable {
    fn default() -> Self {
        Self::illustrative()
    }
}

/// The leader's engagement weights.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AlgorithmWeights {
    alpha: f64,
    beta: f64,
    gamma: f64,
}

impl AlgorithmWeights {
    pub fn new(alpha: f64, beta: f64, gamma: f64) -> Result<Self> {
        Ok(Self {
            alpha: non_negative("alpha", alpha)?,
            beta: non_negative("beta", beta)?,
            gamma: non_negative("gamma", gamma)?,
        })
    }

    pub fn zero() -> Self {
        Self {
            alpha: 0.0,
            beta: 0.0,
            gamma: 0.0,
        }
    }

    /// Weight on clicks.
    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// Weight on watch time.
    pub fn beta(&self) -> f64 {
        self.beta
    }

    /// Weight on shares.
    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    pub fn as_array(&self) -> [f64; 3] {
        [self.alpha, self.beta, self.gamma]
    }
}

/// Which creator-utility formula a creator uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum UtilityModel {
    /// `alpha*clicks + beta*watch + gamma*shares - delta*risk`
    #[default]
    Linear,
    /// `alpha*ln(1+clicks) + beta*sqrt(watch) + gamma*shares - delta*risk^2`
    ///
    /// Diminishing returns on clicks and watch time, and a sponsor penalty
    /// that grows quadratically with drama. The logarithm is natural.
    Nonlinear,
}

impl UtilityModel {
    pub fn name(self) -> &'static str {
        match self {
            UtilityModel::Linear => "linear",
            UtilityModel::Nonlinear => "nonlinear",
        }
    }

    /// Transformed `(clicks, watch, shares)` that the weights multiply.
    pub(crate) fn reward_terms(self, p: &EngagementProfile) -> [f64; 3] {
        match self {
            UtilityModel::Linear => [p.clicks, p.watch_time, p.shares],
            UtilityModel::Nonlinear => [p.clicks.ln_1p(), p.watch_time.sqrt(), p.shares],
        }
    }

    /// Transformed drama risk that `delta` multiplies.
    pub(crate) fn penalty_term(self, p: &EngagementProfile) -> f64 {
        match self {
            UtilityModel::Linear => p.drama_risk,
            UtilityModel::Nonlinear => p.drama_risk * p.drama_risk,
        }
    }
}

/// A creator: sponsor sensitivity plus utility model.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CreatorParams {
    delta: f64,
    model: UtilityModel,
}

impl CreatorParams {
    pub fn new(delta: f64, model: UtilityModel) -> Result<Self> {
        Ok(Self {
            delta: non_negative("delta", delta)?,
            model,
        })
    }

    pub fn linear(delta: f64) -> Result<Self> {
        Self::new(delta, UtilityModel::Linear)
    }

    pub fn delta(&self) -> f64 {
        self.delta
    }

    pub fn model(&self) -> UtilityModel {
        self.model
    }

    pub fn with_delta(&self, delta: f64) -> Result<Self> {
        Self::new(delta, self.model)
    }
}

/// Utility a creator with `params` earns from a strategy with `profile`.
///
/// Fails only if the result overflows to a non-finite value.
pub fn creator_utility(weights: &AlgorithmWeights, params: &CreatorParams, profile: &EngagementProfile) -> Result<f64> {
    let [c, w, s] = params.model.reward_terms(profile);
    let u =
        weights.alpha * c + weights.beta * w + weights.gamma * s - params.delta * params.model.penalty_term(profile);
    if u.is_finite() {
        Ok(u)
    } else {
        Err(GameError::NonFiniteParameter {
            name: "utility",
            value: u,
        })
    }
}

/// Utilities of both strategies.
pub fn creator_utilities(
    weights: &AlgorithmWeights,
    params: &CreatorParams,
    table: &GameTable,
) -> Result<PerStrategy<f64>> {
    PerStrategy::try_from_fn(|s| {
        creator_utility(weights, params, &table[s]).map_err(|_| GameError::NonFiniteUtility { strategy: s })
    })
}

/// `U(Beefing) - U(Collaboration)`; positive means Beefing is strictly better.
pub fn utility_gap(weights: &AlgorithmWeights, params: &CreatorParams, table: &GameTable) -> Result<f64> {
    let u = creator_utilities(weights, params, table)?;
    Ok(u.beefing - u.collaboration)
}
