//! Follower side: exact best response, the indifference threshold in
//! `delta`, and bounded-rationality response rules.

use crate::error::{finite, non_negative, Result};
use crate::game::{creator_utilities, AlgorithmWeights, CreatorParams, GameTable, PerStrategy, Strategy, UtilityModel};

/// Gaps with absolute value at or below this are ties, resolved to
/// Collaboration.
pub const TIE_TOLERANCE: f64 = 1e-9;

/// How a creator turns utilities into a choice.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub enum ResponseRule {
    /// Utility maximiser.
    #[default]
    Exact,
    /// Logit choice: `P(s) ∝ exp(lambda * U(s))`. `lambda = 0` is uniform;
    /// large `lambda` approaches `Exact`.
    Quantal { lambda: f64 },
    /// Take the first strategy (canonical order) whose utility reaches the
    /// aspiration level; fall back to the best response if none does.
    Satisficing { aspiration: f64 },
}

impl ResponseRule {
    pub fn quantal(lambda: f64) -> Result<Self> {
        Ok(ResponseRule::Quantal {
            lambda: non_negative("lambda", lambda)?,
        })
    }

    pub fn satisficing(aspiration: f64) -> Result<Self> {
        Ok(ResponseRule::Satisficing {
            aspiration: finite("aspiration", aspiration)?,
        })
    }

    /// Checks the invariants for rules built with struct syntax.
    pub fn validate(&self) -> Result<()> {
        match *self {
            ResponseRule::Exact => Ok(()),
            ResponseRule::Quantal { lambda } => non_negative("lambda", lambda).map(|_| ()),
            ResponseRule::Satisficing { aspiration } => finite("aspiration", aspiration).map(|_| ()),
        }
    }
}

/// A probability for each strategy.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ResponseDistribution(PerStrategy<f64>);

impl ResponseDistribution {
    pub fn point_mass(s: Strategy) -> Self {
        ResponseDistribution(PerStrategy::from_fn(|t| if t == s { 1.0 } else { 0.0 }))
    }

    pub fn prob(&self, s: Strategy) -> f64 {
        self.0[s]
    }

    pub fn as_per_strategy(&self) -> &PerStrategy<f64> {
        &self.0
    }

    /// The most probable strategy; an exact tie goes to Collaboration.
    pub fn mode(&self) -> Strategy {
        if self.0.beefing > self.0.collaboration {
            Strategy::Beefing
        } else {
            Strategy::Collaboration
        }
    }
}

fn pick(utilities: &PerStrategy<f64>, tie_tolerance: f64) -> Strategy {
    let gap = utilities.beefing - utilities.collaboration;
    if gap > tie_tolerance {
        Strategy::Beefing
    } else {
        Strategy::Collaboration
    }
}

/// The strategy maximising the creator's utility. Ties (`|gap| <= 1e-9`)
/// go to Collaboration.
pub fn best_response(weights: &AlgorithmWeights, params: &CreatorParams, table: &GameTable) -> Result<Strategy> {
    best_response_with_tolerance(weights, params, table, TIE_TOLERANCE)
}

pub fn best_response_with_tolerance(
    weights: &AlgorithmWeights,
    params: &CreatorParams,
    table: &GameTable,
    tie_tolerance: f64,
) -> Result<Strategy> {
    let u = creator_utilities(weights, params, table)?;
    Ok(pick(&u, tie_tolerance))
}

/// Response distribution of a creator under `rule`.
pub fn respond(
    rule: &ResponseRule,
    weights: &AlgorithmWeights,
    params: &CreatorParams,
    table: &GameTable,
) -> Result<ResponseDistribution> {
    rule.validate()?;
    let u = creator_utilities(weights, params, table)?;
    Ok(respond_to_utilities(rule, &u))
}

pub(crate) fn respond_to_utilities(rule: &ResponseRule, u: &PerStrategy<f64>) -> ResponseDistribution {
    match *rule {
        ResponseRule::Exact => ResponseDistribution::point_mass(pick(u, TIE_TOLERANCE)),
        ResponseRule::Quantal { lambda } => {
            let scaled = u.map(|x| lambda * x);
            let shift = scaled.collaboration.max(scaled.beefing);
            let e = scaled.map(|x| (x - shift).exp());
            let total = e.collaboration + e.beefing;
            ResponseDistribution(e.map(|x| x / total))
        }
        ResponseRule::Satisficing { aspiration } => {
            let chosen = Strategy::ALL
                .into_iter()
                .find(|&s| u[s] >= aspiration)
                .unwrap_or_else(|| pick(u, TIE_TOLERANCE));
            ResponseDistribution::point_mass(chosen)
        }
    }
}

/// The sponsor sensitivity `delta*` at which the creator is indifferent.
///
/// The gap is affine in `delta`: `gap(delta) = reward_diff - delta * penalty_diff`,
/// so `delta* = reward_diff / penalty_diff`. Returns `None` when the two
/// strategies carry the same (transformed) drama risk, since the gap then
/// does not depend on `delta`. A negative result is returned as is: with
/// Beefing riskier it means Beefing loses for every admissible `delta`.
pub fn switching_delta(weights: &AlgorithmWeights, model: UtilityModel, table: &GameTable) -> Option<f64> {
    let (c, b) = (&table.collaboration, &table.beefing);
    let [c1, c2, c3] = model.reward_terms(c);
    let [b1, b2, b3] = model.reward_terms(b);
    let reward_diff = weights.alpha() * (b1 - c1) + weights.beta() * (b2 - c2) + weights.gamma() * (b3 - c3);
    let penalty_diff = model.penalty_term(b) - model.penalty_term(c);
    if penalty_diff == 0.0 {
        None
    } else {
        Some(reward_diff / penalty_diff)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::utility_gap;

    fn w(a: f64, b: f64, g: f64) -> AlgorithmWeights {
        AlgorithmWeights::new(a, b, g).unwrap()
    }

    fn lin(d: f64) -> CreatorParams {
        CreatorParams::linear(d).unwrap()
    }

    #[test]
    fn best_response_examples() {
        let t = GameTable::illustrative();
        assert_eq!(
            best_response(&w(1.0, 2.0, 1.5), &lin(1.0), &t).unwrap(),
            Strategy::Collaboration
        );
        assert_eq!(
            best_response(&w(2.5, 0.5, 2.0), &lin(1.0), &t).unwrap(),
            Strategy::Beefing
        );
        assert_eq!(
            best_response(&w(1.0, 1.0, 3.0), &lin(1.0), &t).unwrap(),
            Strategy::Collaboration
        );
    }

    #[test]
    fn tie_tolerance_is_configurable() {
        let t = GameTable::illustrative();
        // gap = 3a - 3b + g - 3d = 1e-6
        let weights = w(1.0, 1.0, 3.0 + 1e-6);
        assert_eq!(best_response(&weights, &lin(1.0), &t).unwrap(), Strategy::Beefing);
        assert_eq!(
            best_response_with_tolerance(&weights, &lin(1.0), &t, 1e-3).unwrap(),
            Strategy::Collaboration
        );
    }

    #[test]
    fn quantal_zero_is_uniform() {
        let t = GameTable::illustrative();
        let d = respond(&ResponseRule::quantal(0.0).unwrap(), &w(2.5, 0.5, 2.0), &lin(1.0), &t).unwrap();
        assert_eq!(d.prob(Strategy::Collaboration), 0.5);
        assert_eq!(d.prob(Strategy::Beefing), 0.5);
    }

    #[test]
    fn quantal_example_one() {
        // mpmath: 1 / (1 + e^4.5)
        let expected = 0.010_986_942_630_593_18;
        let t = GameTable::illustrative();
        let d = respond(&ResponseRule::quantal(1.0).unwrap(), &w(1.0, 2.0, 1.5), &lin(1.0), &t).unwrap();
        assert!((d.prob(Strategy::Beefing) - expected).abs() <= 1e-15);
        assert!((d.prob(Strategy::Collaboration) + d.prob(Strategy::Beefing) - 1.0).abs() <= 1e-12);
    }

    #[test]
    fn quantal_survives_huge_lambda() {
        let t = GameTable::illustrative();
        let d = respond(&ResponseRule::quantal(1e6).unwrap(), &w(1.0, 2.0, 1.5), &lin(1.0), &t).unwrap();
        assert_eq!(d.prob(Strategy::Collaboration), 1.0);
        assert_eq!(d.prob(Strategy::Beefing), 0.0);
    }

    #[test]
    fn satisficing_rules() {
        let t = GameTable::illustrative();
        let ex1 = w(1.0, 2.0, 1.5);
        let d = respond(&ResponseRule::satisficing(13.0).unwrap(), &ex1, &lin(1.0), &t).unwrap();
        assert_eq!(d, ResponseDistribution::point_mass(Strategy::Collaboration));
        // Example 3: Collab 13.5, Beef 18.5; aspiration 10 is met by Collaboration first.
        let ex3 = w(2.5, 0.5, 2.0);
        let d = respond(&ResponseRule::satisficing(10.0).unwrap(), &ex3, &lin(1.0), &t).unwrap();
        assert_eq!(d.mode(), Strategy::Collaboration);
        let d = respond(&ResponseRule::satisficing(15.0).unwrap(), &ex3, &lin(1.0), &t).unwrap();
        assert_eq!(d.mode(), Strategy::Beefing);
        // Nobody reaches 100: fall back to the best response.
        let d = respond(&ResponseRule::satisficing(100.0).unwrap(), &ex3, &lin(1.0), &t).unwrap();
        assert_eq!(d.mode(), Strategy::Beefing);
    }

    #[test]
    fn invalid_rules_rejected() {
        assert!(ResponseRule::quantal(-1.0).is_err());
        assert!(ResponseRule::satisficing(f64::NAN).is_err());
        let t = GameTable::illustrative();
        let bad = ResponseRule::Quantal { lambda: f64::INFINITY };
        assert!(respond(&bad, &w(1.0, 1.0, 1.0), &lin(1.0), &t).is_err());
    }

    /// Bisection on the gap over `[lo, hi]`, independent of the closed form.
    fn bisect_gap(weights: &AlgorithmWeights, model: UtilityModel, t: &GameTable, mut lo: f64, mut hi: f64) -> f64 {
        let gap = |d: f64| utility_gap(weights, &CreatorParams::new(d, model).unwrap(), t).unwrap();
        assert!(gap(lo) >= 0.0 && gap(hi) <= 0.0);
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if gap(mid) > 0.0 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        0.5 * (lo + hi)
    }

    #[test]
    fn switching_delta_examples() {
        let t = GameTable::illustrative();
        let ex1 = switching_delta(&w(1.0, 2.0, 1.5), UtilityModel::Linear, &t).unwrap();
        assert!((ex1 + 0.5).abs() <= 1e-12);
        // Sign scan over [0, 10]: Beefing never preferred.
        for i in 0..=1000 {
            let d = i as f64 * 0.01;
            assert!(utility_gap(&w(1.0, 2.0, 1.5), &lin(d), &t).unwrap() < 0.0);
        }

        let ex3 = switching_delta(&w(2.5, 0.5, 2.0), UtilityModel::Linear, &t).unwrap();
        let oracle = bisect_gap(&w(2.5, 0.5, 2.0), UtilityModel::Linear, &t, 0.0, 10.0);
        assert!((ex3 - oracle).abs() <= 1e-9);
        assert!((ex3 - 8.0 / 3.0).abs() <= 1e-12);

        assert_eq!(
            switching_delta(&AlgorithmWeights::zero(), UtilityModel::Linear, &t),
            Some(0.0)
        );
    }

    #[test]
    fn switching_delta_nonlinear_matches_bisection() {
        let t = GameTable::illustrative();
        let weights = w(2.0, 0.5, 3.0);
        let ds = switching_delta(&weights, UtilityModel::Nonlinear, &t).unwrap();
        assert!(ds > 0.0);
        let oracle = bisect_gap(&weights, UtilityModel::Nonlinear, &t, 0.0, 10.0);
        assert!((ds - oracle).abs() <= 1e-9);
    }

    #[test]
    fn switching_delta_absent_without_risk_difference() {
        let p = crate::game::EngagementProfile::new(2.0, 5.0, 3.0, 1.0).unwrap();
        let q = crate::game::EngagementProfile::new(5.0, 2.0, 4.0, 1.0).unwrap();
        let t = GameTable::new(p, q);
        assert_eq!(switching_delta(&w(1.0, 1.0, 1.0), UtilityModel::Linear, &t), None);
        assert_eq!(switching_delta(&w(1.0, 1.0, 1.0), UtilityModel::Nonlinear, &t), None);
    }
}
