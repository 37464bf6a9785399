//! Parameter sweeps over `(alpha, beta, gamma, delta)` and their CSV / SVG
//! renderings.

use std::fmt;
use std::io::{self, Write};
use std::str::FromStr;

use rayon::prelude::*;
use thiserror::Error;

use crate::error::{finite, GameError, Result};
use crate::game::{creator_utilities, AlgorithmWeights, CreatorParams, GameTable, PerStrategy, Strategy};
use crate::population::linspace;
use crate::response::{respond_to_utilities, switching_delta, ResponseRule};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SweepParam {
    Alpha,
    Beta,
    Gamma,
    Delta,
}

impl SweepParam {
    pub fn name(self) -> &'static str {
        match self {
            SweepParam::Alpha => "alpha",
            SweepParam::Beta => "beta",
            SweepParam::Gamma => "gamma",
            SweepParam::Delta => "delta",
        }
    }
}

impl fmt::Display for SweepParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SweepParam {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "alpha" => Ok(SweepParam::Alpha),
            "beta" => Ok(SweepParam::Beta),
            "gamma" => Ok(SweepParam::Gamma),
            "delta" => Ok(SweepParam::Delta),
            other => Err(format!(
                "unknown parameter `{other}` (expected alpha, beta, gamma or delta)"
            )),
        }
    }
}

/// One swept parameter: `steps` evenly spaced values over `[lo, hi]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepAxis {
    param: SweepParam,
    lo: f64,
    hi: f64,
    steps: usize,
}

impl SweepAxis {
    pub fn new(param: SweepParam, lo: f64, hi: f64, steps: usize) -> Result<Self> {
        finite("lo", lo)?;
        finite("hi", hi)?;
        if lo > hi {
            return Err(GameError::InvalidRange { lo, hi });
        }
        if steps == 0 {
            return Err(GameError::ZeroCount);
        }
        Ok(Self { param, lo, hi, steps })
    }

    pub fn param(&self) -> SweepParam {
        self.param
    }

    pub fn lo(&self) -> f64 {
        self.lo
    }

    pub fn hi(&self) -> f64 {
        self.hi
    }

    pub fn steps(&self) -> usize {
        self.steps
    }

    pub fn values(&self) -> Vec<f64> {
        linspace(self.lo, self.hi, self.steps).collect()
    }
}

/// Everything a single creator evaluation needs.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Scenario {
    pub weights: AlgorithmWeights,
    pub creator: CreatorParams,
    pub table: GameTable,
    pub rule: ResponseRule,
}

impl Scenario {
    fn with_param(&self, param: SweepParam, v: f64) -> Result<Scenario> {
        let [a, b, g] = self.weights.as_array();
        let mut out = *self;
        match param {
            SweepParam::Alpha => out.weights = AlgorithmWeights::new(v, b, g)?,
            SweepParam::Beta => out.weights = AlgorithmWeights::new(a, v, g)?,
            SweepParam::Gamma => out.weights = AlgorithmWeights::new(a, b, v)?,
            SweepParam::Delta => out.creator = self.creator.with_delta(v)?,
        }
        Ok(out)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec {
    axis1: SweepAxis,
    axis2: Option<SweepAxis>,
    fixed: Scenario,
}

impl SweepSpec {
    pub fn new(axis1: SweepAxis, axis2: Option<SweepAxis>, fixed: Scenario) -> Result<Self> {
        if let Some(a2) = axis2 {
            if a2.param == axis1.param {
                return Err(GameError::DuplicateAxis(a2.param.name()));
            }
        }
        fixed.rule.validate()?;
        Ok(Self { axis1, axis2, fixed })
    }

    pub fn axis1(&self) -> &SweepAxis {
        &self.axis1
    }

    pub fn axis2(&self) -> Option<&SweepAxis> {
        self.axis2.as_ref()
    }

    pub fn fixed(&self) -> &Scenario {
        &self.fixed
    }

    pub fn cell_count(&self) -> usize {
        self.axis1.steps * self.axis2.map_or(1, |a| a.steps)
    }
}

/// One evaluated lattice point.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepCell {
    /// `(axis1 index, axis2 index)`; the second is 0 for one-axis sweeps.
    pub index: (usize, usize),
    /// Swept values, axis1 first.
    pub param_values: Vec<(SweepParam, f64)>,
    pub utilities: PerStrategy<f64>,
    /// Most probable strategy under the scenario's rule (the best response
    /// for `Exact`).
    pub chosen: Strategy,
    /// `U(Beefing) - U(Collaboration)`.
    pub gap: f64,
}

impl SweepCell {
    pub fn value_of(&self, param: SweepParam) -> Option<f64> {
        self.param_values.iter().find(|(p, _)| *p == param).map(|(_, v)| *v)
    }

    /// The fixed scenario with this cell's swept values applied.
    pub fn scenario(&self, fixed: &Scenario) -> Result<Scenario> {
        self.param_values
            .iter()
            .try_fold(*fixed, |s, &(p, v)| s.with_param(p, v))
    }
}

fn evaluate_cell(fixed: &Scenario, index: (usize, usize), param_values: Vec<(SweepParam, f64)>) -> Result<SweepCell> {
    let s = param_values.iter().try_fold(*fixed, |s, &(p, v)| s.with_param(p, v))?;
    let utilities = creator_utilities(&s.weights, &s.creator, &s.table)?;
    let chosen = respond_to_utilities(&s.rule, &utilities).mode();
    Ok(SweepCell {
        index,
        param_values,
        utilities,
        chosen,
        gap: utilities.beefing - utilities.collaboration,
    })
}

/// Evaluates every lattice point, axis1 outer and axis2 inner, both ascending.
pub fn run_sweep(spec: &SweepSpec) -> Result<Vec<SweepCell>> {
    let v1 = spec.axis1.values();
    let v2 = spec.axis2.map(|a| a.values());
    let mut points = Vec::with_capacity(spec.cell_count());
    for (i, &x) in v1.iter().enumerate() {
        match (&spec.axis2, &v2) {
            (Some(a2), Some(v2)) => {
                for (j, &y) in v2.iter().enumerate() {
                    points.push(((i, j), vec![(spec.axis1.param, x), (a2.param, y)]));
                }
            }
            _ => points.push(((i, 0), vec![(spec.axis1.param, x)])),
        }
    }
    points
        .into_par_iter()
        .map(|(idx, pv)| evaluate_cell(&spec.fixed, idx, pv))
        .collect()
}

/// The switching `delta` of the fixed scenario if it lies inside the swept
/// `delta` range. Requires a one-axis `delta` sweep.
pub fn region_boundary(spec: &SweepSpec) -> Result<Option<f64>> {
    if spec.axis1.param != SweepParam::Delta || spec.axis2.is_some() {
        return Err(GameError::NotDeltaSweep);
    }
    let f = &spec.fixed;
    Ok(
        switching_delta(&f.weights, f.creator.model(), &f.table)
            .filter(|d| (spec.axis1.lo..=spec.axis1.hi).contains(d)),
    )
}

#[derive(Debug, Error)]
pub enum EmitError {
    #[error("no sweep cells to emit")]
    NoCells,
    #[error("malformed lattice: {0}")]
    MalformedLattice(String),
    #[error(transparent)]
    Io(#[from] io::Error),
}

/// Renders a real with 9 significant digits and no trailing zeros, in the
/// style of C's `%.9g`.
pub fn format_sig9(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let sci = format!("{:.8e}", x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-4..9).contains(&exp) {
        let decimals = (8 - exp).max(0) as usize;
        trim_zeros(format!("{:.*}", decimals, x))
    } else {
        let m = trim_zeros(mantissa.to_string());
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{m}e{sign}{:02}", exp.abs())
    }
}

/// Fixed-point with at most 9 decimals, trailing zeros removed.
pub fn format_fixed9(x: f64) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    let s = trim_zeros(format!("{:.9}", x));
    if s == "-0" {
        "0".to_string()
    } else {
        s
    }
}

fn trim_zeros(s: String) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

/// Writes `cells` as CSV: the swept parameter names in sorted order, then
/// `u_collab,u_beef,gap,chosen`.
pub fn emit_csv<W: Write>(cells: &[SweepCell], sink: &mut W) -> std::result::Result<(), EmitError> {
    let first = cells.first().ok_or(EmitError::NoCells)?;
    let mut params: Vec<SweepParam> = first.param_values.iter().map(|(p, _)| *p).collect();
    params.sort_by_key(|p| p.name());

    let mut header: Vec<&str> = params.iter().map(|p| p.name()).collect();
    header.extend(["u_collab", "u_beef", "gap", "chosen"]);
    writeln!(sink, "{}", header.join(","))?;

    for cell in cells {
        let mut row = Vec::with_capacity(params.len() + 4);
        for p in &params {
            let v = cell
                .value_of(*p)
                .ok_or_else(|| EmitError::MalformedLattice(format!("cell {:?} lacks `{p}`", cell.index)))?;
            row.push(format_sig9(v));
        }
        row.push(format_sig9(cell.utilities.collaboration));
        row.push(format_sig9(cell.utilities.beefing));
        row.push(format_sig9(cell.gap));
        row.push(cell.chosen.name().to_string());
        writeln!(sink, "{}", row.join(","))?;
    }
    Ok(())
}

pub const COLLABORATION_COLOR: &str = "#3b8f5c";
pub const BEEFING_COLOR: &str = "#c8423b";

const MARGIN_LEFT: f64 = 90.0;
const MARGIN_TOP: f64 = 40.0;
const MARGIN_BOTTOM: f64 = 70.0;
const MARGIN_RIGHT: f64 = 160.0;
const PLOT_SIZE: f64 = 400.0;

fn color(s: Strategy) -> &'static str {
    match s {
        Strategy::Collaboration => COLLABORATION_COLOR,
        Strategy::Beefing => BEEFING_COLOR,
    }
}

/// Validates that `cells` is a complete row-major lattice and returns its
/// `(steps1, steps2)`.
fn lattice_shape(cells: &[SweepCell]) -> std::result::Result<(usize, usize), EmitError> {
    let steps1 = cells.iter().map(|c| c.index.0).max().ok_or(EmitError::NoCells)? + 1;
    let steps2 = cells.iter().map(|c| c.index.1).max().unwrap_or(0) + 1;
    if cells.len() != steps1 * steps2 {
        return Err(EmitError::MalformedLattice(format!(
            "{} cells for a {steps1}x{steps2} lattice",
            cells.len()
        )));
    }
    for (n, c) in cells.iter().enumerate() {
        if c.index != (n / steps2, n % steps2) {
            return Err(EmitError::MalformedLattice(format!(
                "cell {n} has index {:?}, expected ({}, {})",
                c.index,
                n / steps2,
                n % steps2
            )));
        }
    }
    let arity = cells[0].param_values.len();
    if cells.iter().any(|c| c.param_values.len() != arity) {
        return Err(EmitError::MalformedLattice("cells sweep different parameters".into()));
    }
    Ok((steps1, steps2))
}

fn axis_label(cells: &[SweepCell], k: usize) -> Option<String> {
    let p = cells[0].param_values.get(k)?.0;
    let lo = cells[0].param_values[k].1;
    let hi = cells[cells.len() - 1].param_values[k].1;
    Some(format!("{p} [{}, {}]", format_sig9(lo), format_sig9(hi)))
}

/// Writes a standalone SVG heatmap: one rectangle per cell, colored by the
/// chosen strategy. axis1 runs left to right, axis2 bottom to top.
pub fn emit_region_svg<W: Write>(cells: &[SweepCell], sink: &mut W) -> std::result::Result<(), EmitError> {
    let (steps1, steps2) = lattice_shape(cells)?;
    let width = MARGIN_LEFT + PLOT_SIZE + MARGIN_RIGHT;
    let height = MARGIN_TOP + PLOT_SIZE + MARGIN_BOTTOM;
    let cw = PLOT_SIZE / steps1 as f64;
    let ch = PLOT_SIZE / steps2 as f64;

    writeln!(
        sink,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}" font-family="sans-serif" font-size="14">"#
    )?;
    writeln!(sink, r#"<title>Creator strategy regions</title>"#)?;
    writeln!(sink, r#"<g id="cells">"#)?;
    for c in cells {
        let (i, j) = c.index;
        let x = MARGIN_LEFT + i as f64 * cw;
        let y = MARGIN_TOP + PLOT_SIZE - (j + 1) as f64 * ch;
        writeln!(
            sink,
            r#"<rect class="cell" x="{x:.3}" y="{y:.3}" width="{cw:.3}" height="{ch:.3}" fill="{}" data-chosen="{}"/>"#,
            color(c.chosen),
            c.chosen
        )?;
    }
    writeln!(sink, "</g>")?;

    let x_axis_y = MARGIN_TOP + PLOT_SIZE;
    writeln!(
        sink,
        r#"<line x1="{MARGIN_LEFT}" y1="{x_axis_y}" x2="{}" y2="{x_axis_y}" stroke="black"/>"#,
        MARGIN_LEFT + PLOT_SIZE
    )?;
    writeln!(
        sink,
        r#"<line x1="{MARGIN_LEFT}" y1="{MARGIN_TOP}" x2="{MARGIN_LEFT}" y2="{x_axis_y}" stroke="black"/>"#
    )?;
    if let Some(label) = axis_label(cells, 0) {
        writeln!(
            sink,
            r#"<text class="axis-label" x="{:.3}" y="{:.3}" text-anchor="middle">{label}</text>"#,
            MARGIN_LEFT + PLOT_SIZE / 2.0,
            x_axis_y + 40.0
        )?;
    }
    if let Some(label) = axis_label(cells, 1) {
        let (x, y) = (MARGIN_LEFT - 40.0, MARGIN_TOP + PLOT_SIZE / 2.0);
        writeln!(
            sink,
            r#"<text class="axis-label" x="{x:.3}" y="{y:.3}" text-anchor="middle" transform="rotate(-90 {x:.3} {y:.3})">{label}</text>"#
        )?;
    }
    let legend_x = MARGIN_LEFT + PLOT_SIZE + 20.0;
    for (n, s) in Strategy::ALL.into_iter().enumerate() {
        writeln!(
            sink,
            r#"<text class="legend" x="{legend_x:.3}" y="{:.3}" fill="{}">&#9632; {s}</text>"#,
            MARGIN_TOP + 20.0 + 24.0 * n as f64,
            color(s)
        )?;
    }
    writeln!(sink, "</svg>")?;
    Ok(())
}
