//! Solver and simulation toolkit for the platform-algorithm / content-creator
//! Stackelberg game.
//!
//! The algorithm (leader) commits to engagement weights on clicks, watch
//! time and shares. Creators (followers) answer with Collaboration or
//! Beefing, trading engagement rewards against a sponsor penalty on drama.
//!
//! * [`game`]: domain types and the linear / nonlinear creator utilities.
//! * [`response`]: best responses, switching thresholds, quantal and
//!   satisficing rules.
//! * [`population`]: heterogeneous creator populations and strategy shares.
//! * [`leader`]: the platform objective and grid-search Stackelberg solver.
//! * [`sweep`]: parameter sweeps with CSV and SVG output.

pub mod error;
pub mod game;
pub mod leader;
pub mod population;
pub mod response;
pub mod sweep;

pub use error::{GameError, Result};
pub use game::{
    creator_utilities, creator_utility, utility_gap, AlgorithmWeights, CreatorParams, EngagementProfile, GameTable,
    PerStrategy, Strategy, UtilityModel,
};
pub use leader::{
    algorithm_utility, delta_sensitivity, enumerate_domain, stackelberg_solve, DomainShape, EquilibriumResult,
    WeightDomain, LEADER_TIE_TOLERANCE,
};
pub use population::{make_delta_grid_population, population_shares, Population, StrategyShares};
pub use response::{
    best_response, best_response_with_tolerance, respond, switching_delta, ResponseDistribution, ResponseRule,
    TIE_TOLERANCE,
};
pub use sweep::{
    emit_csv, emit_region_svg, format_fixed9, format_sig9, region_boundary, run_sweep, EmitError, Scenario, SweepAxis,
    SweepCell, SweepParam, SweepSpec,
};
