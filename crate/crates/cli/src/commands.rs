use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use creator_game::{
    best_response, creator_utilities, delta_sensitivity, emit_csv, emit_region_svg, format_fixed9, format_sig9,
    region_boundary, run_sweep, stackelberg_solve, switching_delta, EquilibriumResult, Strategy, SweepAxis, SweepSpec,
};

use crate::error::CliError;
use crate::scenario::Scenario;

pub type CmdResult = Result<(), CliError>;

fn stdout_err(e: std::io::Error) -> CliError {
    CliError::Io {
        path: "<stdout>".into(),
        source: e,
    }
}

/// Parses `name:lo:hi:steps`.
pub fn parse_axis(s: &str) -> Result<SweepAxis, String> {
    let parts: Vec<&str> = s.split(':').collect();
    let [name, lo, hi, steps] = parts[..] else {
        return Err(format!("expected name:lo:hi:steps, got `{s}`"));
    };
    let param = name.parse()?;
    let lo: f64 = lo.parse().map_err(|_| format!("bad lower bound `{lo}`"))?;
    let hi: f64 = hi.parse().map_err(|_| format!("bad upper bound `{hi}`"))?;
    let steps: usize = steps.parse().map_err(|_| format!("bad step count `{steps}`"))?;
    SweepAxis::new(param, lo, hi, steps).map_err(|e| e.to_string())
}

pub fn eval(s: &Scenario, out: &mut impl Write) -> CmdResult {
    let u = creator_utilities(&s.weights, &s.creator, &s.table)?;
    for (strategy, value) in u.iter() {
        writeln!(out, "{strategy}={}", format_sig9(*value)).map_err(stdout_err)?;
    }
    writeln!(out, "gap={}", format_sig9(u.beefing - u.collaboration)).map_err(stdout_err)?;
    Ok(())
}

pub fn best(s: &Scenario, out: &mut impl Write) -> CmdResult {
    let chosen = best_response(&s.weights, &s.creator, &s.table)?;
    let delta_star = switching_delta(&s.weights, s.creator.model(), &s.table)
        .filter(|d| *d >= 0.0)
        .map_or_else(|| "none".to_string(), format_fixed9);
    writeln!(out, "chosen={chosen}").map_err(stdout_err)?;
    writeln!(out, "delta_star={delta_star}").map_err(stdout_err)?;
    Ok(())
}

fn write_equilibrium(r: &EquilibriumResult, out: &mut impl Write) -> std::io::Result<()> {
    writeln!(out, "alpha={}", format_sig9(r.weights.alpha()))?;
    writeln!(out, "beta={}", format_sig9(r.weights.beta()))?;
    writeln!(out, "gamma={}", format_sig9(r.weights.gamma()))?;
    writeln!(
        out,
        "share_collaboration={}",
        format_sig9(r.shares.share(Strategy::Collaboration))
    )?;
    writeln!(out, "share_beefing={}", format_sig9(r.shares.share(Strategy::Beefing)))?;
    writeln!(out, "leader_value={}", format_sig9(r.leader_value))?;
    writeln!(
        out,
        "u_collaboration={}",
        format_sig9(r.creator_utilities.collaboration)
    )?;
    writeln!(out, "u_beefing={}", format_sig9(r.creator_utilities.beefing))?;
    writeln!(out, "grid_points={}", r.grid_points_evaluated)
}

pub fn equilibrium(s: &Scenario, out: &mut impl Write) -> CmdResult {
    let r = stackelberg_solve(&s.domain, &s.solve_population(), &s.rule, &s.table)?;
    write_equilibrium(&r, out).map_err(stdout_err)
}

pub fn sensitivity(s: &Scenario, deltas: &[f64], out: &mut impl Write) -> CmdResult {
    let results = delta_sensitivity(&s.domain, deltas, s.creator.model(), &s.rule, &s.table)?;
    let mut line = |r: String| writeln!(out, "{r}").map_err(stdout_err);
    line("delta,alpha,beta,gamma,share_beefing,leader_value".to_string())?;
    for (d, r) in results {
        line(format!(
            "{},{},{},{},{},{}",
            format_sig9(d),
            format_sig9(r.weights.alpha()),
            format_sig9(r.weights.beta()),
            format_sig9(r.weights.gamma()),
            format_sig9(r.shares.share(Strategy::Beefing)),
            format_sig9(r.leader_value)
        ))?;
    }
    Ok(())
}

fn create(path: &Path) -> Result<BufWriter<File>, CliError> {
    File::create(path).map(BufWriter::new).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn finish(mut w: BufWriter<File>, path: &Path) -> CmdResult {
    w.flush().map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

pub fn sweep(
    s: &Scenario,
    axis1: SweepAxis,
    axis2: Option<SweepAxis>,
    csv: &Path,
    svg: Option<&Path>,
    out: &mut impl Write,
) -> CmdResult {
    let spec = SweepSpec::new(axis1, axis2, s.as_core()).map_err(|e| CliError::Usage(e.to_string()))?;
    let cells = run_sweep(&spec).map_err(|e| CliError::Usage(format!("sweep: {e}")))?;

    let mut w = create(csv)?;
    emit_csv(&cells, &mut w).map_err(|e| CliError::from_emit(e, &csv.display().to_string()))?;
    finish(w, csv)?;

    if let Some(svg) = svg {
        let mut w = create(svg)?;
        emit_region_svg(&cells, &mut w).map_err(|e| CliError::from_emit(e, &svg.display().to_string()))?;
        finish(w, svg)?;
    }

    writeln!(out, "rows={}", cells.len()).map_err(stdout_err)?;
    if let Ok(boundary) = region_boundary(&spec) {
        let b = boundary.map_or_else(|| "none".to_string(), format_fixed9);
        writeln!(out, "delta_boundary={b}").map_err(stdout_err)?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presets::Preset;
    use crate::scenario::ScenarioFile;

    fn preset(p: Preset) -> Scenario {
        ScenarioFile::parse(p.json()).unwrap().validate().unwrap()
    }

    fn run(f: impl FnOnce(&mut Vec<u8>) -> CmdResult) -> String {
        let mut out = Vec::new();
        f(&mut out).unwrap();
        String::from_utf8(out).unwrap()
    }

    #[test]
    fn eval_lines() {
        let s = run(|o| eval(&preset(Preset::Example1), o));
        assert_eq!(s, "Collaboration=16.5\nBeefing=12\ngap=-4.5\n");
        let s = run(|o| eval(&preset(Preset::Example2), o));
        assert!(s.contains("Beefing=7.5\n"));
    }

    #[test]
    fn best_lines() {
        assert_eq!(
            run(|o| best(&preset(Preset::Example1), o)),
            "chosen=Collaboration\ndelta_star=none\n"
        );
        assert_eq!(
            run(|o| best(&preset(Preset::Example3), o)),
            "chosen=Beefing\ndelta_star=2.666666667\n"
        );
        assert!(run(|o| best(&preset(Preset::TiktokLike), o)).starts_with("chosen=Beefing"));
        assert!(run(|o| best(&preset(Preset::YoutubeLike), o)).starts_with("chosen=Collaboration"));
    }

    #[test]
    fn axis_flags() {
        let a = parse_axis("delta:0:4:5").unwrap();
        assert_eq!(a.steps(), 5);
        assert_eq!(a.hi(), 4.0);
        assert!(parse_axis("delta:0:4").is_err());
        assert!(parse_axis("zeta:0:4:5").is_err());
        assert!(parse_axis("delta:4:0:5").is_err());
        assert!(parse_axis("delta:0:4:0").is_err());
        assert!(parse_axis("delta:0:x:2").is_err());
    }

    #[test]
    fn sensitivity_table() {
        let mut s = preset(Preset::Example1);
        s.domain = creator_game::WeightDomain::simplex(1.0, 10).unwrap();
        let text = run(|o| sensitivity(&s, &[1.0, 2.5], o));
        let lines: Vec<_> = text.lines().collect();
        assert_eq!(lines.len(), 3);
        assert_eq!(lines[1], "1,0,1,0,0,5");
        assert_eq!(lines[2], "2.5,0,1,0,0,5");
    }
}
