//! Leader side: the platform objective and the Stackelberg weight search.
//!
//! The leader's objective is linear in the weights, so it is unbounded over
//! the non-negative orthant. The search therefore runs over a compact
//! [`WeightDomain`], by default the unit simplex `alpha + beta + gamma = 1`.
//! Scaling all weights and `delta` together never changes a linear
//! creator's best response, so normalising the weights loses nothing as
//! long as `delta` is read on the same scale.

use rayon::prelude::*;

use crate::error::{non_negative, GameError, Result};
use crate::game::{creator_utilities, AlgorithmWeights, CreatorParams, GameTable, PerStrategy, UtilityModel};
use crate::population::{population_shares, Population, StrategyShares};
use crate::response::ResponseRule;

/// Leader values within this distance of the maximum count as ties; the
/// earliest grid point among them wins.
pub const LEADER_TIE_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum DomainShape {
    /// `alpha + beta + gamma = total`, all non-negative.
    Simplex { total: f64 },
    /// `[0, alpha_max] x [0, beta_max] x [0, gamma_max]`.
    Box {
        alpha_max: f64,
        beta_max: f64,
        gamma_max: f64,
    },
}

/// The set of weight vectors the leader searches, discretised with
/// `resolution` subdivisions per axis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WeightDomain {
    shape: DomainShape,
    resolution: usize,
}

fn positive(name: &'static str, v: f64) -> Result<f64> {
    match non_negative(name, v) {
        Ok(v) if v > 0.0 => Ok(v),
        _ => Err(GameError::InvalidParameter { name, value: v }),
    }
}

impl WeightDomain {
    pub fn simplex(total: f64, resolution: usize) -> Result<Self> {
        Self::new(DomainShape::Simplex { total }, resolution)
    }

    pub fn boxed(alpha_max: f64, beta_max: f64, gamma_max: f64, resolution: usize) -> Result<Self> {
        Self::new(
            DomainShape::Box {
                alpha_max,
                beta_max,
                gamma_max,
            },
            resolution,
        )
    }

    pub fn new(shape: DomainShape, resolution: usize) -> Result<Self> {
        match shape {
            DomainShape::Simplex { total } => {
                positive("total", total)?;
            }
            DomainShape::Box {
                alpha_max,
                beta_max,
                gamma_max,
            } => {
                positive("alpha_max", alpha_max)?;
                positive("beta_max", beta_max)?;
                positive("gamma_max", gamma_max)?;
            }
        }
        if resolution == 0 {
            return Err(GameError::ZeroResolution);
        }
        Ok(Self { shape, resolution })
    }

    pub fn shape(&self) -> DomainShape {
        self.shape
    }

    pub fn resolution(&self) -> usize {
        self.resolution
    }

    /// Number of grid points [`enumerate_domain`] yields.
    pub fn len(&self) -> usize {
        let n = self.resolution;
        match self.shape {
            DomainShape::Simplex { .. } => (n + 1) * (n + 2) / 2,
            DomainShape::Box { .. } => (n + 1).pow(3),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

impl Default for WeightDomain {
    /// Unit simplex at resolution 100.
    fn default() -> Self {
        Self {
            shape: DomainShape::Simplex { total: 1.0 },
            resolution: 100,
        }
    }
}

/// Grid points of `domain` in lexicographic `(i, j, k)` order, where `i`,
/// `j`, `k` index alpha, beta and gamma.
pub fn enumerate_domain(domain: &WeightDomain) -> Vec<AlgorithmWeights> {
    let n = domain.resolution;
    let step = |i: usize, max: f64| i as f64 * max / n as f64;
    let mut out = Vec::with_capacity(domain.len());
    match domain.shape {
        DomainShape::Simplex { total } => {
            for i in 0..=n {
                for j in 0..=(n - i) {
                    let k = n - i - j;
                    out.push(weights_unchecked(step(i, total), step(j, total), step(k, total)));
                }
            }
        }
        DomainShape::Box {
            alpha_max,
            beta_max,
            gamma_max,
        } => {
            for i in 0..=n {
                for j in 0..=n {
                    for k in 0..=n {
                        out.push(weights_unchecked(
                            step(i, alpha_max),
                            step(j, beta_max),
                            step(k, gamma_max),
                        ));
                    }
                }
            }
        }
    }
    out
}

fn weights_unchecked(a: f64, b: f64, g: f64) -> AlgorithmWeights {
    AlgorithmWeights::new(a, b, g).expect("grid weights are finite and non-negative")
}

/// Expected platform engagement: `sum_s share(s) * (alpha*clicks_s +
/// beta*watch_s + gamma*shares_s)`. Sponsor risk does not enter.
pub fn algorithm_utility(weights: &AlgorithmWeights, shares: &StrategyShares, table: &GameTable) -> Result<f64> {
    let v: f64 = table
        .iter()
        .map(|(s, profile)| shares.share(s) * profile.engagement(weights))
        .sum();
    if v.is_finite() {
        Ok(v)
    } else {
        Err(GameError::NonFiniteObjective)
    }
}

/// The leader's optimum and the follower behaviour it induces.
#[derive(Debug, Clone, PartialEq)]
pub struct EquilibriumResult {
    pub weights: AlgorithmWeights,
    pub shares: StrategyShares,
    pub leader_value: f64,
    /// Mean creator utility of each strategy across the population, at
    /// the optimal weights.
    pub creator_utilities: PerStrategy<f64>,
    /// Position of `weights` in [`enumerate_domain`] order.
    pub grid_index: usize,
    pub grid_points_evaluated: usize,
}

/// Index of the earliest value within [`LEADER_TIE_TOLERANCE`] of the
/// maximum.
pub(crate) fn select_leader_optimum(values: &[f64]) -> Option<usize> {
    let max = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    values.iter().position(|&v| v >= max - LEADER_TIE_TOLERANCE)
}

/// Searches `domain` for the weights maximising the leader objective, given
/// that the population responds to each candidate under `rule`.
pub fn stackelberg_solve(
    domain: &WeightDomain,
    pop: &Population,
    rule: &ResponseRule,
    table: &GameTable,
) -> Result<EquilibriumResult> {
    rule.validate()?;
    let grid = enumerate_domain(domain);
    let evaluated = grid
        .par_iter()
        .map(|w| {
            let shares = population_shares(pop, rule, w, table)?;
            let value = algorithm_utility(w, &shares, table)?;
            Ok((shares, value))
        })
        .collect::<Result<Vec<_>>>()?;

    let values: Vec<f64> = evaluated.iter().map(|(_, v)| *v).collect();
    let best = select_leader_optimum(&values).ok_or(GameError::EmptyDomain)?;
    let weights = grid[best];
    let (shares, leader_value) = evaluated[best];

    let mut sum = PerStrategy::new(0.0, 0.0);
    for m in pop.members() {
        let u = creator_utilities(&weights, m, table)?;
        sum.collaboration += u.collaboration;
        sum.beefing += u.beefing;
    }
    let n = pop.len() as f64;

    Ok(EquilibriumResult {
        weights,
        shares,
        leader_value,
        creator_utilities: sum.map(|x| x / n),
        grid_index: best,
        grid_points_evaluated: grid.len(),
    })
}

/// Solves the single-creator game once per `delta`, in input order.
pub fn delta_sensitivity(
    domain: &WeightDomain,
    deltas: &[f64],
    model: UtilityModel,
    rule: &ResponseRule,
    table: &GameTable,
) -> Result<Vec<(f64, EquilibriumResult)>> {
    if deltas.is_empty() {
        return Err(GameError::ZeroCount);
    }
    deltas
        .iter()
        .map(|&delta| {
            let tag = |e: GameError| GameError::AtDelta {
                delta,
                source: Box::new(e),
            };
            let params = CreatorParams::new(delta, model).map_err(tag)?;
            let result = stackelberg_solve(domain, &Population::single(params), rule, table).map_err(tag)?;
            Ok((delta, result))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::Strategy;

    fn w(a: f64, b: f64, g: f64) -> AlgorithmWeights {
        AlgorithmWeights::new(a, b, g).unwrap()
    }

    fn single(delta: f64) -> Population {
        Population::single(CreatorParams::linear(delta).unwrap())
    }

    #[test]
    fn algorithm_utility_examples() {
        let t = GameTable::illustrative();
        let v = algorithm_utility(&w(2.5, 0.5, 2.0), &StrategyShares::point_mass(Strategy::Beefing), &t).unwrap();
        assert!((v - 21.5).abs() <= 1e-12);
        let v = algorithm_utility(
            &w(1.0, 2.0, 1.5),
            &StrategyShares::point_mass(Strategy::Collaboration),
            &t,
        )
        .unwrap();
        assert!((v - 16.5).abs() <= 1e-12);
        let half = StrategyShares::new(0.5, 0.5).unwrap();
        assert_eq!(algorithm_utility(&AlgorithmWeights::zero(), &half, &t).unwrap(), 0.0);
    }

    #[test]
    fn enumerate_small_domains() {
        let d = WeightDomain::simplex(1.0, 1).unwrap();
        assert_eq!(
            enumerate_domain(&d),
            vec![w(0.0, 0.0, 1.0), w(0.0, 1.0, 0.0), w(1.0, 0.0, 0.0)]
        );
        assert_eq!(enumerate_domain(&WeightDomain::simplex(1.0, 2).unwrap()).len(), 6);
        let b = enumerate_domain(&WeightDomain::boxed(1.0, 1.0, 1.0, 1).unwrap());
        assert_eq!(b.len(), 8);
        assert_eq!(b[0], AlgorithmWeights::zero());
        assert_eq!(b[1], w(0.0, 0.0, 1.0));
        assert_eq!(b[7], w(1.0, 1.0, 1.0));
    }

    #[test]
    fn domain_counts_match_len() {
        for n in 1..12 {
            let s = WeightDomain::simplex(2.0, n).unwrap();
            assert_eq!(enumerate_domain(&s).len(), (n + 1) * (n + 2) / 2);
            let b = WeightDomain::boxed(1.0, 2.0, 3.0, n).unwrap();
            assert_eq!(enumerate_domain(&b).len(), (n + 1).pow(3));
        }
        for p in enumerate_domain(&WeightDomain::simplex(3.0, 7).unwrap()) {
            assert!((p.alpha() + p.beta() + p.gamma() - 3.0).abs() <= 1e-12);
        }
    }

    #[test]
    fn domain_validation() {
        assert_eq!(WeightDomain::simplex(1.0, 0), Err(GameError::ZeroResolution));
        assert!(WeightDomain::simplex(0.0, 3).is_err());
        assert!(WeightDomain::boxed(1.0, -1.0, 1.0, 3).is_err());
        assert!(WeightDomain::boxed(1.0, 1.0, f64::NAN, 3).is_err());
    }

    #[test]
    fn solve_high_delta_watch_time_corner() {
        let t = GameTable::illustrative();
        let d = WeightDomain::simplex(1.0, 10).unwrap();
        let r = stackelberg_solve(&d, &single(2.5), &ResponseRule::Exact, &t).unwrap();
        assert_eq!(r.weights, w(0.0, 1.0, 0.0));
        assert_eq!(r.shares, StrategyShares::point_mass(Strategy::Collaboration));
        assert!((r.leader_value - 5.0).abs() <= 1e-12);
        assert_eq!(r.grid_points_evaluated, 66);
    }

    #[test]
    fn solve_zero_delta_tie_goes_to_earlier_point() {
        let t = GameTable::illustrative();
        let d = WeightDomain::simplex(1.0, 10).unwrap();
        let grid = enumerate_domain(&d);
        let beta_corner = grid.iter().position(|p| *p == w(0.0, 1.0, 0.0)).unwrap();
        let alpha_corner = grid.iter().position(|p| *p == w(1.0, 0.0, 0.0)).unwrap();
        assert!(beta_corner < alpha_corner);

        let r = stackelberg_solve(&d, &single(0.0), &ResponseRule::Exact, &t).unwrap();
        assert_eq!(r.grid_index, beta_corner);
        assert_eq!(r.weights, w(0.0, 1.0, 0.0));
        assert_eq!(r.shares, StrategyShares::point_mass(Strategy::Collaboration));
        assert!((r.leader_value - 5.0).abs() <= 1e-12);
    }

    #[test]
    fn solve_three_corners() {
        let t = GameTable::illustrative();
        let d = WeightDomain::simplex(1.0, 1).unwrap();
        let r = stackelberg_solve(&d, &single(10.0), &ResponseRule::Exact, &t).unwrap();
        assert_eq!(r.grid_points_evaluated, 3);
        assert_eq!(r.weights, w(0.0, 1.0, 0.0));
        assert!((r.leader_value - 5.0).abs() <= 1e-12);
        assert_eq!(r.creator_utilities, PerStrategy::new(5.0, 2.0 - 30.0));
    }

    #[test]
    fn sensitivity_examples() {
        let t = GameTable::illustrative();
        let d = WeightDomain::simplex(1.0, 10).unwrap();
        let rule = ResponseRule::Exact;
        let out = delta_sensitivity(&d, &[1.0, 2.5], UtilityModel::Linear, &rule, &t).unwrap();
        assert_eq!(out.len(), 2);
        for (_, r) in &out {
            assert!((r.leader_value - 5.0).abs() <= 1e-12);
            assert_eq!(r.shares, StrategyShares::point_mass(Strategy::Collaboration));
        }
        let at_zero = delta_sensitivity(&d, &[0.0], UtilityModel::Linear, &rule, &t).unwrap();
        assert_eq!(at_zero[0].1, stackelberg_solve(&d, &single(0.0), &rule, &t).unwrap());

        let triple = delta_sensitivity(&d, &[5.0, 5.0, 5.0], UtilityModel::Linear, &rule, &t).unwrap();
        assert_eq!(triple[0], triple[1]);
        assert_eq!(triple[1], triple[2]);
    }

    #[test]
    fn sensitivity_tags_bad_delta() {
        let t = GameTable::illustrative();
        let d = WeightDomain::simplex(1.0, 2).unwrap();
        let err = delta_sensitivity(&d, &[1.0, -2.0], UtilityModel::Linear, &ResponseRule::Exact, &t).unwrap_err();
        assert!(matches!(err, GameError::AtDelta { delta, .. } if delta == -2.0));
        assert!(delta_sensitivity(&d, &[], UtilityModel::Linear, &ResponseRule::Exact, &t).is_err());
    }

    #[test]
    fn tie_selection_is_earliest_within_tolerance() {
        assert_eq!(select_leader_optimum(&[1.0, 3.0, 3.0 + 1e-12, 2.0]), Some(1));
        assert_eq!(select_leader_optimum(&[1.0, 3.0, 3.1]), Some(2));
        assert_eq!(select_leader_optimum(&[]), None);
    }
}
