//! Scenario files: what to evaluate, on which measures, over which exponents.

use std::path::Path;

use qmono::bounds::{max_admissible_a, threshold_ratio};
use qmono::measures::build_measure_vector;
use qmono::{presets, BoundFamily, BoundId, MeasureVector, Mode, PureState, C64};
use serde::Deserialize;

use crate::error::{CliError, Result};

/// Names accepted by [`load_scenario`] besides file paths.
pub const PRESETS: [&str; 2] = ["example1", "example2"];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RawMode {
    Monogamy,
    Polygamy,
}

impl From<RawMode> for Mode {
    fn from(m: RawMode) -> Self {
        match m {
            RawMode::Monogamy => Mode::Monogamy,
            RawMode::Polygamy => Mode::Polygamy,
        }
    }
}

/// A number or the name of a rule that derives it.
#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(untagged)]
pub enum Param {
    Value(f64),
    Preset(String),
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawState {
    /// `[re, im]` pairs in big-endian basis order.
    pub amplitudes: Vec<[f64; 2]>,
    /// Subsystem dimensions; qubits when absent.
    #[serde(default)]
    pub dims: Option<Vec<usize>>,
    /// Subsystem playing the role of `A`.
    #[serde(default)]
    pub focus: usize,
    /// Rescale instead of rejecting an unnormalized vector.
    #[serde(default)]
    pub normalize: bool,
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawMeasureVector {
    pub joint: f64,
    pub parts: Vec<f64>,
    #[serde(default)]
    pub labels: Option<Vec<String>>,
    #[serde(default)]
    pub label: Option<String>,
}

/// The scenario file as written, before validation.
#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawScenario {
    #[serde(default)]
    pub name: Option<String>,
    pub mode: RawMode,
    /// γ for monogamy, δ for polygamy.
    pub g: f64,
    #[serde(default)]
    pub state: Option<RawState>,
    #[serde(default)]
    pub measure_vector: Option<RawMeasureVector>,
    pub a: Param,
    pub s: Param,
    /// `[lo, hi, step]`.
    pub exponent_range: [f64; 3],
    #[serde(default)]
    pub comparisons: Option<Vec<String>>,
    #[serde(default)]
    pub zjz_p: Option<f64>,
    #[serde(default)]
    pub output: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExponentRange {
    pub lo: f64,
    pub hi: f64,
    pub step: f64,
}

impl ExponentRange {
    pub fn new(lo: f64, hi: f64, step: f64) -> Result<Self> {
        if !(lo.is_finite() && hi.is_finite() && step.is_finite()) {
            return Err(invalid("exponent_range: values must be finite"));
        }
        if !(step > 0.0) {
            return Err(invalid(format!(
                "exponent_range: step must be positive, got {step}"
            )));
        }
        if lo > hi {
            return Err(invalid(format!("exponent_range: lo {lo} exceeds hi {hi}")));
        }
        Ok(Self { lo, hi, step })
    }

    /// `lo + k·step` for `k = 0, 1, …` up to `hi`. A last point within
    /// round-off of `hi` is snapped to `hi`.
    pub fn grid(&self) -> Vec<f64> {
        let n = ((self.hi - self.lo) / self.step + 1e-9).floor() as usize + 1;
        (0..n)
            .map(|k| {
                let v = self.lo + k as f64 * self.step;
                if (v - self.hi).abs() < 1e-9 * self.step || v > self.hi {
                    self.hi
                } else {
                    v
                }
            })
            .collect()
    }
}

/// A validated scenario.
#[derive(Debug, Clone, PartialEq)]
pub struct Scenario {
    pub name: String,
    pub mode: Mode,
    pub power: f64,
    pub measures: MeasureVector,
    pub a: f64,
    pub s: f64,
    pub exponents: ExponentRange,
    /// Requested comparison series in column order.
    pub comparisons: Vec<BoundId>,
    pub zjz_p: f64,
    /// Stem of the output file names.
    pub output: String,
}

impl Scenario {
    /// `E_1^g / E_2^g` when there are exactly two parts.
    pub fn t(&self) -> Option<f64> {
        let p = self.measures.parts();
        (p.len() == 2).then(|| (p[0] / p[1]).powf(self.power))
    }

    pub fn family(&self, exponent: f64) -> qmono::Result<BoundFamily> {
        BoundFamily::new(self.mode, self.power, exponent, self.a)
    }
}

fn invalid(msg: impl Into<String>) -> CliError {
    CliError::Validation(msg.into())
}

/// Resolves a preset name or reads and validates a JSON file.
pub fn load_scenario(name_or_path: &str) -> Result<Scenario> {
    match name_or_path {
        "example1" => example1(),
        "example2" => example2(),
        path => {
            let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
            parse_scenario(&text, path)
        }
    }
}

/// Parses and validates scenario JSON; `source_name` labels errors.
pub fn parse_scenario(text: &str, source_name: &str) -> Result<Scenario> {
    let raw: RawScenario = serde_json::from_str(text).map_err(|e| CliError::Parse {
        source_name: source_name.to_string(),
        message: e.to_string(),
    })?;
    let default_name = Path::new(source_name)
        .file_stem()
        .and_then(|s| s.to_str())
        .unwrap_or("scenario")
        .to_string();
    validate(raw, &default_name)
}

/// The concurrence example: γ = 3, `a = 1.05^{1.5}`, `s = 0.72^{1.5}`, α ∈ [0, 3].
pub fn example1_raw() -> RawScenario {
    let amps = presets::example1_state(0.0)
        .amplitudes()
        .iter()
        .map(|c| [c.re, c.im])
        .collect();
    RawScenario {
        name: Some("example1".into()),
        mode: RawMode::Monogamy,
        g: presets::EXAMPLE1_GAMMA,
        state: Some(RawState {
            amplitudes: amps,
            dims: Some(vec![2, 2, 2]),
            focus: 0,
            normalize: false,
        }),
        measure_vector: None,
        a: Param::Preset("example1".into()),
        s: Param::Preset("example1".into()),
        exponent_range: [0.0, presets::EXAMPLE1_GAMMA, 0.01],
        comparisons: Some(vec!["ZLJM".into(), "JFQ".into(), "ZJZ".into()]),
        zjz_p: Some(presets::ZJZ_DEFAULT_P),
        output: Some("figure1".into()),
    }
}

/// The W-class SCRENoA example: δ = 0.6, `a = 1.2`, `s = (a+t)/(2t)`, β ∈ [0.6, 3].
pub fn example2_raw() -> RawScenario {
    let mv = presets::example2_measures();
    RawScenario {
        name: Some("example2".into()),
        mode: RawMode::Polygamy,
        g: presets::EXAMPLE2_DELTA,
        state: None,
        measure_vector: Some(RawMeasureVector {
            joint: mv.joint(),
            parts: presets::EXAMPLE2_PAIRWISE_SCRENOA.to_vec(),
            labels: Some(vec!["AB".into(), "AC".into()]),
            label: Some(mv.label().to_string()),
        }),
        a: Param::Value(presets::EXAMPLE2_A),
        s: Param::Preset("window_midpoint".into()),
        exponent_range: [presets::EXAMPLE2_DELTA, 3.0, 0.01],
        comparisons: Some(vec![
            "ZLJM".into(),
            "JFQ".into(),
            "ZJZ".into(),
            "ZLJM-t".into(),
        ]),
        zjz_p: Some(presets::ZJZ_DEFAULT_P),
        output: Some("figure2".into()),
    }
}

pub fn example1() -> Result<Scenario> {
    validate(example1_raw(), "example1")
}

pub fn example2() -> Result<Scenario> {
    validate(example2_raw(), "example2")
}

fn measures_from_state(st: RawState) -> Result<MeasureVector> {
    let amps: Vec<C64> = st
        .amplitudes
        .iter()
        .map(|&[re, im]| C64::new(re, im))
        .collect();
    let dims = match st.dims {
        Some(d) => d,
        None => {
            let n = amps.len();
            if n < 4 || !n.is_power_of_two() {
                return Err(invalid(format!(
                    "state.amplitudes: length {n} is not a power of two of at least 4; give state.dims"
                )));
            }
            vec![2; n.trailing_zeros() as usize]
        }
    };
    let state = if st.normalize {
        PureState::normalized(dims, amps)
    } else {
        PureState::new(dims, amps)
    }
    .map_err(|e| invalid(format!("state: {e}")))?;
    MeasureVector::concurrence_profile(&state, st.focus).map_err(|e| invalid(format!("state: {e}")))
}

fn measures_from_vector(mv: RawMeasureVector) -> Result<MeasureVector> {
    if mv.parts.is_empty() {
        return Err(invalid(
            "measure_vector.parts: at least one value is required",
        ));
    }
    let label = mv.label.as_deref().unwrap_or("E");
    let out = build_measure_vector(mv.joint, &mv.parts, label)
        .map_err(|e| invalid(format!("measure_vector: {e}")))?;
    match mv.labels {
        Some(labels) => {
            let refs: Vec<&str> = labels.iter().map(String::as_str).collect();
            out.with_part_labels(&refs)
                .map_err(|e| invalid(format!("measure_vector.labels: {e}")))
        }
        None => Ok(out),
    }
}

fn resolve_a(a: &Param, mode: Mode, g: f64, mv: &MeasureVector) -> Result<f64> {
    match a {
        Param::Value(v) => Ok(*v),
        Param::Preset(name) => match name.as_str() {
            "example1" if mode == Mode::Monogamy => Ok(presets::example1_a(g)),
            "example2" if mode == Mode::Polygamy => Ok(presets::EXAMPLE2_A),
            "max_admissible" => {
                let m = max_admissible_a(mv, g);
                if m.is_finite() {
                    Ok(m)
                } else {
                    Err(invalid("a: max_admissible is unbounded for these parts"))
                }
            }
            other => Err(invalid(format!(
                "a: unknown preset {other:?} for {mode}; expected a number, \"max_admissible\", or \"example1\" (monogamy) / \"example2\" (polygamy)"
            ))),
        },
    }
}

fn resolve_s(s: &Param, g: f64, a: f64, mv: &MeasureVector) -> Result<f64> {
    let critical = || {
        let p = mv.parts();
        if p.len() == 2 {
            Ok(a / (p[0] / p[1]).powf(g))
        } else {
            Err(invalid("s: \"critical\" needs exactly two parts"))
        }
    };
    match s {
        Param::Value(v) => Ok(*v),
        Param::Preset(name) => match name.as_str() {
            "example1" => Ok(presets::example1_s(g)),
            "critical" => critical(),
            "window_midpoint" => {
                let lower = threshold_ratio(mv, a, g).map_err(|e| invalid(format!("s: {e}")))?;
                Ok((lower + 1.0) / 2.0)
            }
            other => Err(invalid(format!(
                "s: unknown preset {other:?}; expected a number, \"example1\", \"window_midpoint\" or \"critical\""
            ))),
        },
    }
}

fn resolve_comparisons(names: Option<Vec<String>>, two_parts: bool) -> Result<Vec<BoundId>> {
    let names = names.unwrap_or_else(|| {
        let ids: &[&str] = if two_parts {
            &["ZLJM", "JFQ", "ZJZ"]
        } else {
            &["ZLJM"]
        };
        ids.iter().map(|s| s.to_string()).collect()
    });
    let mut out = Vec::with_capacity(names.len());
    for name in names {
        let id = BoundId::from_name(&name)
            .filter(|id| *id != BoundId::Ours)
            .ok_or_else(|| {
                invalid(format!(
                    "comparisons: unknown bound {name:?}; expected ZLJM, JFQ, ZJZ or ZLJM-t"
                ))
            })?;
        if !two_parts && id != BoundId::Zljm {
            return Err(invalid(format!(
                "comparisons: {name} needs exactly two parts"
            )));
        }
        if !out.contains(&id) {
            out.push(id);
        }
    }
    Ok(out)
}

fn validate(raw: RawScenario, default_name: &str) -> Result<Scenario> {
    let mode = Mode::from(raw.mode);
    let g = raw.g;
    let measures = match (raw.state, raw.measure_vector) {
        (Some(st), None) => measures_from_state(st)?,
        (None, Some(mv)) => measures_from_vector(mv)?,
        (Some(_), Some(_)) => {
            return Err(invalid(
                "give exactly one of state and measure_vector, not both",
            ))
        }
        (None, None) => return Err(invalid("give exactly one of state and measure_vector")),
    };
    let [lo, hi, step] = raw.exponent_range;
    let exponents = ExponentRange::new(lo, hi, step)?;
    let a = resolve_a(&raw.a, mode, g, &measures)?;
    // validates g and a for the mode
    BoundFamily::new(mode, g, g, a).map_err(|e| invalid(e.to_string()))?;
    if measures.parts()[0] <= 0.0 {
        return Err(invalid("measure values: the largest part must be positive"));
    }
    let max_a = max_admissible_a(&measures, g);
    if a > max_a * (1.0 + 1e-12) {
        return Err(invalid(format!(
            "a = {a} violates E_i^g >= a E_(i+1)^g; the largest admissible a is {max_a}"
        )));
    }
    let s = resolve_s(&raw.s, g, a, &measures)?;
    if !(s > 0.0 && s.is_finite()) {
        return Err(invalid(format!("s must be positive, got {s}")));
    }
    let two_parts = measures.parts().len() == 2;
    let comparisons = resolve_comparisons(raw.comparisons, two_parts)?;
    let zjz_p = raw.zjz_p.unwrap_or(presets::ZJZ_DEFAULT_P);
    if !(zjz_p > 0.0 && zjz_p <= 1.0) {
        return Err(invalid(format!("zjz_p must lie in (0, 1], got {zjz_p}")));
    }
    let name = raw.name.unwrap_or_else(|| default_name.to_string());
    let output = raw.output.unwrap_or_else(|| name.clone());
    if output.is_empty() || output.contains(['/', '\\']) {
        return Err(invalid(format!(
            "output: {output:?} must be a plain file stem"
        )));
    }
    Ok(Scenario {
        name,
        mode,
        power: g,
        measures,
        a,
        s,
        exponents,
        comparisons,
        zjz_p,
        output,
    })
}
