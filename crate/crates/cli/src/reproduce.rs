//! Re-runs the three worked examples through the library and compares the
//! results with the published numbers.

use std::io::Write;

use creator_game::{
    best_response, creator_utilities, format_sig9, AlgorithmWeights, CreatorParams, GameTable, Strategy,
};

use crate::error::CliError;

pub const TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

struct Example {
    tag: &'static str,
    weights: [f64; 3],
    delta: f64,
    collaboration: f64,
    beefing: f64,
    choice: Strategy,
}

const EXAMPLES: [Example; 3] = [
    Example {
        tag: "ex1",
        weights: [1.0, 2.0, 1.5],
        delta: 1.0,
        collaboration: 16.5,
        beefing: 12.0,
        choice: Strategy::Collaboration,
    },
    Example {
        tag: "ex2",
        weights: [1.0, 2.0, 1.5],
        delta: 2.5,
        collaboration: 16.5,
        beefing: 7.5,
        choice: Strategy::Collaboration,
    },
    Example {
        tag: "ex3",
        weights: [2.5, 0.5, 2.0],
        delta: 1.0,
        collaboration: 13.5,
        beefing: 18.5,
        choice: Strategy::Beefing,
    },
];

fn pair(a: f64, b: f64) -> String {
    format!("{} / {}", format_sig9(a), format_sig9(b))
}

/// One utilities row and one choice row per example.
pub fn run_checks(table: &GameTable) -> Result<Vec<Check>, CliError> {
    let mut checks = Vec::with_capacity(2 * EXAMPLES.len());
    for ex in &EXAMPLES {
        let [a, b, g] = ex.weights;
        let weights = AlgorithmWeights::new(a, b, g)?;
        let params = CreatorParams::linear(ex.delta)?;
        let u = creator_utilities(&weights, &params, table)?;
        let chosen = best_response(&weights, &params, table)?;
        checks.push(Check {
            name: format!("{}.utilities", ex.tag),
            expected: pair(ex.collaboration, ex.beefing),
            actual: pair(u.collaboration, u.beefing),
            pass: (u.collaboration - ex.collaboration).abs() <= TOLERANCE
                && (u.beefing - ex.beefing).abs() <= TOLERANCE,
        });
        checks.push(Check {
            name: format!("{}.choice", ex.tag),
            expected: ex.choice.to_string(),
            actual: chosen.to_string(),
            pass: chosen == ex.choice,
        });
    }
    Ok(checks)
}

pub fn report(checks: &[Check], out: &mut impl Write) -> std::io::Result<()> {
    writeln!(out, "{:<16}{:<18}{:<18}status", "check", "expected", "actual")?;
    for c in checks {
        let status = if c.pass { "pass" } else { "FAIL" };
        writeln!(out, "{:<16}{:<18}{:<18}{status}", c.name, c.expected, c.actual)?;
    }
    let failed = checks.iter().filter(|c| !c.pass).count();
    writeln!(out, "result={}", if failed == 0 { "pass" } else { "fail" })
}

pub fn reproduce(table: &GameTable, out: &mut impl Write) -> Result<(), CliError> {
    let checks = run_checks(table)?;
    report(&checks, out).map_err(|source| CliError::Io {
        path: "<stdout>".into(),
        source,
    })?;
    let failed = checks.iter().filter(|c| !c.pass).count();
    if failed > 0 {
        return Err(CliError::ChecksFailed {
            failed,
            total: checks.len(),
        });
    }
    Ok(())
}
