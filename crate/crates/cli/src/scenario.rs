//! Scenario files: strict JSON documents describing one game setup.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use creator_game::{
    make_delta_grid_population, AlgorithmWeights, CreatorParams, EngagementProfile, GameError, GameTable, Population,
    ResponseRule, UtilityModel, WeightDomain,
};

use crate::error::CliError;

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub table: Option<TableSpec>,
    pub weights: WeightsSpec,
    pub creator: CreatorSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub population: Option<PopulationSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rule: Option<RuleSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub domain: Option<DomainSpec>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TableSpec {
    pub collaboration: ProfileSpec,
    pub beefing: ProfileSpec,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProfileSpec {
    pub clicks: f64,
    pub watch_time: f64,
    pub shares: f64,
    pub drama_risk: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WeightsSpec {
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum ModelSpec {
    #[default]
    Linear,
    Nonlinear,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CreatorSpec {
    pub delta: f64,
    #[serde(default)]
    pub model: ModelSpec,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PopulationSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub deltas: Option<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub grid: Option<GridSpec>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GridSpec {
    pub min: f64,
    pub max: f64,
    pub count: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(rename_all = "lowercase", deny_unknown_fields)]
pub enum RuleSpec {
    Exact,
    Quantal { lambda: f64 },
    Satisficing { aspiration: f64 },
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(rename_all = "lowercase", deny_unknown_fields)]
pub enum DomainSpec {
    Simplex {
        total: f64,
        resolution: usize,
    },
    Box {
        alpha_max: f64,
        beta_max: f64,
        gamma_max: f64,
        resolution: usize,
    },
}

/// A validated scenario.
#[derive(Debug, Clone)]
pub struct Scenario {
    pub table: GameTable,
    pub weights: AlgorithmWeights,
    pub creator: CreatorParams,
    /// Explicit population, if the file gave one.
    pub population: Option<Population>,
    pub rule: ResponseRule,
    pub domain: WeightDomain,
}

impl Scenario {
    /// The population the leader solves against: the explicit one, or the
    /// single `creator`.
    pub fn solve_population(&self) -> Population {
        self.population
            .clone()
            .unwrap_or_else(|| Population::single(self.creator))
    }

    pub fn as_core(&self) -> creator_game::Scenario {
        creator_game::Scenario {
            weights: self.weights,
            creator: self.creator,
            table: self.table,
            rule: self.rule,
        }
    }
}

fn at(path: impl Into<String>) -> impl FnOnce(GameError) -> CliError {
    let path = path.into();
    move |e| CliError::Invalid {
        path,
        message: e.to_string(),
    }
}

fn profile(p: &ProfileSpec, path: &str) -> Result<EngagementProfile, CliError> {
    EngagementProfile::new(p.clicks, p.watch_time, p.shares, p.drama_risk).map_err(|e| {
        let field = match e {
            GameError::InvalidParameter { name, .. } => name,
            _ => "",
        };
        at(format!("{path}.{field}"))(e)
    })
}

fn param_path(section: &str, e: &GameError) -> String {
    match e {
        GameError::InvalidParameter { name, .. } | GameError::NonFiniteParameter { name, .. } => {
            format!("{section}.{name}")
        }
        _ => section.to_string(),
    }
}

impl ScenarioFile {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let de = &mut serde_json::Deserializer::from_str(text);
        serde_path_to_error::deserialize(de).map_err(|e| {
            let path = e.path().to_string();
            CliError::Invalid {
                path: if path == "." { "<root>".into() } else { path },
                message: e.into_inner().to_string(),
            }
        })
    }

    pub fn validate(&self) -> Result<Scenario, CliError> {
        let table = match &self.table {
            Some(t) => GameTable::new(
                profile(&t.collaboration, "table.collaboration")?,
                profile(&t.beefing, "table.beefing")?,
            ),
            None => GameTable::illustrative(),
        };
        let w = &self.weights;
        let weights = AlgorithmWeights::new(w.alpha, w.beta, w.gamma).map_err(|e| at(param_path("weights", &e))(e))?;
        let model = match self.creator.model {
            ModelSpec::Linear => UtilityModel::Linear,
            ModelSpec::Nonlinear => UtilityModel::Nonlinear,
        };
        let creator = CreatorParams::new(self.creator.delta, model).map_err(at("creator.delta"))?;

        let population = match &self.population {
            None => None,
            Some(PopulationSpec {
                deltas: Some(_),
                grid: Some(_),
            })
            | Some(PopulationSpec {
                deltas: None,
                grid: None,
            }) => {
                return Err(CliError::Invalid {
                    path: "population".into(),
                    message: "give exactly one of `deltas` or `grid`".into(),
                })
            }
            Some(PopulationSpec { deltas: Some(ds), .. }) => {
                let members = ds
                    .iter()
                    .enumerate()
                    .map(|(i, &d)| CreatorParams::new(d, model).map_err(at(format!("population.deltas[{i}]"))))
                    .collect::<Result<Vec<_>, _>>()?;
                Some(Population::new(members).map_err(at("population.deltas"))?)
            }
            Some(PopulationSpec { grid: Some(g), .. }) => {
                Some(make_delta_grid_population(g.min, g.max, g.count, model).map_err(at("population.grid"))?)
            }
        };

        let rule = match &self.rule {
            None | Some(RuleSpec::Exact) => ResponseRule::Exact,
            Some(RuleSpec::Quantal { lambda }) => ResponseRule::quantal(*lambda).map_err(at("rule.quantal.lambda"))?,
            Some(RuleSpec::Satisficing { aspiration }) => {
                ResponseRule::satisficing(*aspiration).map_err(at("rule.satisficing.aspiration"))?
            }
        };

        let domain = match &self.domain {
            None => WeightDomain::default(),
            Some(DomainSpec::Simplex { total, resolution }) => {
                WeightDomain::simplex(*total, *resolution).map_err(|e| at(param_path("domain.simplex", &e))(e))?
            }
            Some(DomainSpec::Box {
                alpha_max,
                beta_max,
                gamma_max,
                resolution,
            }) => WeightDomain::boxed(*alpha_max, *beta_max, *gamma_max, *resolution)
                .map_err(|e| at(param_path("domain.box", &e))(e))?,
        };

        Ok(Scenario {
            table,
            weights,
            creator,
            population,
            rule,
            domain,
        })
    }
}

pub fn load(path: &Path) -> Result<Scenario, CliError> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })?;
    ScenarioFile::parse(&text)?.validate()
}

/// Parses a stand-alone `table` section (used to override the built-in
/// table when reproducing the worked examples).
pub fn load_table(path: &Path) -> Result<GameTable, CliError> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })?;
    let de = &mut serde_json::Deserializer::from_str(&text);
    let spec: TableSpec = serde_path_to_error::deserialize(de).map_err(|e| CliError::Invalid {
        path: format!("table.{}", e.path()),
        message: e.into_inner().to_string(),
    })?;
    Ok(GameTable::new(
        profile(&spec.collaboration, "table.collaboration")?,
        profile(&spec.beefing, "table.beefing")?,
    ))
}
