//! Finite creator populations and the strategy shares they induce.

use rayon::prelude::*;

use crate::error::{non_negative, GameError, Result};
use crate::game::{AlgorithmWeights, CreatorParams, GameTable, PerStrategy, Strategy, UtilityModel};
use crate::response::{respond, ResponseRule};

/// A non-empty, ordered list of creators.
#[derive(Debug, Clone, PartialEq)]
pub struct Population {
    members: Vec<CreatorParams>,
}

impl Population {
    pub fn new(members: Vec<CreatorParams>) -> Result<Self> {
        if members.is_empty() {
            return Err(GameError::EmptyPopulation);
        }
        Ok(Self { members })
    }

    pub fn single(params: CreatorParams) -> Self {
        Self { members: vec![params] }
    }

    pub fn members(&self) -> &[CreatorParams] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// Fraction of the population playing each strategy.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StrategyShares(PerStrategy<f64>);

impl StrategyShares {
    pub fn point_mass(s: Strategy) -> Self {
        StrategyShares(PerStrategy::from_fn(|t| if t == s { 1.0 } else { 0.0 }))
    }

    /// Shares from raw values; each must lie in `[0, 1]` and the two must sum
    /// to 1 within `1e-12`.
    pub fn new(collaboration: f64, beefing: f64) -> Result<Self> {
        for (name, v) in [("share_collaboration", collaboration), ("share_beefing", beefing)] {
            if !(0.0..=1.0).contains(&v) {
                return Err(GameError::InvalidParameter { name, value: v });
            }
        }
        if (collaboration + beefing - 1.0).abs() > 1e-12 {
            return Err(GameError::InvalidParameter {
                name: "share_total",
                value: collaboration + beefing,
            });
        }
        Ok(StrategyShares(PerStrategy::new(collaboration, beefing)))
    }

    pub fn share(&self, s: Strategy) -> f64 {
        self.0[s]
    }

    pub fn as_per_strategy(&self) -> &PerStrategy<f64> {
        &self.0
    }
}

/// Strategy shares of `pop` responding to `weights` under `rule`.
///
/// Exact rule: counts of best responses over the member count. Stochastic
/// rules: the mean response distribution (expected shares, no sampling).
/// Members are evaluated in parallel and summed in index order.
pub fn population_shares(
    pop: &Population,
    rule: &ResponseRule,
    weights: &AlgorithmWeights,
    table: &GameTable,
) -> Result<StrategyShares> {
    let dists = pop
        .members
        .par_iter()
        .enumerate()
        .map(|(index, m)| {
            respond(rule, weights, m, table).map_err(|e| GameError::Member {
                index,
                source: Box::new(e),
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let n = pop.members.len() as f64;
    let shares = match rule {
        ResponseRule::Exact => {
            let beefing = dists.iter().filter(|d| d.prob(Strategy::Beefing) == 1.0).count();
            let b = beefing as f64 / n;
            PerStrategy::new((pop.members.len() - beefing) as f64 / n, b)
        }
        _ => {
            let mut sum = PerStrategy::new(0.0, 0.0);
            for d in &dists {
                sum.collaboration += d.prob(Strategy::Collaboration);
                sum.beefing += d.prob(Strategy::Beefing);
            }
            let beefing = (sum.beefing / n).clamp(0.0, 1.0);
            PerStrategy::new(1.0 - beefing, beefing)
        }
    };
    Ok(StrategyShares(shares))
}

/// `count` creators with `delta` evenly spaced over `[delta_min, delta_max]`
/// (both ends included; one member gets `delta_min`).
pub fn make_delta_grid_population(
    delta_min: f64,
    delta_max: f64,
    count: usize,
    model: UtilityModel,
) -> Result<Population> {
    non_negative("delta_min", delta_min)?;
    non_negative("delta_max", delta_max)?;
    if delta_min > delta_max {
        return Err(GameError::InvalidRange {
            lo: delta_min,
            hi: delta_max,
        });
    }
    if count == 0 {
        return Err(GameError::ZeroCount);
    }
    let members = linspace(delta_min, delta_max, count)
        .map(|d| CreatorParams::new(d, model))
        .collect::<Result<Vec<_>>>()?;
    Population::new(members)
}

/// `n` evenly spaced values from `lo` to `hi` inclusive; `n == 1` yields `lo`.
pub(crate) fn linspace(lo: f64, hi: f64, n: usize) -> impl Iterator<Item = f64> {
    (0..n).map(move |i| {
        if i == 0 {
            lo
        } else if i == n - 1 {
            hi
        } else {
            lo + (hi - lo) * i as f64 / (n - 1) as f64
        }
    })
}
