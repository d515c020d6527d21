use qmono::bounds::comparison_bounds;
use qmono::{BoundId, BoundParams, BoundReport, Mode};

use crate::scenario::Scenario;

/// Slack on the joint-power versus bound check.
pub const SOUNDNESS_SLACK: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq)]
pub struct RowFlags {
    /// Why the bound could not be evaluated at this exponent.
    pub error: Option<String>,
    pub s_in_window: bool,
    pub ratio_condition: bool,
    pub zjz_proven: bool,
    /// `joint_power ≥ bound` (monogamy) or `≤` (polygamy) within slack.
    pub sound: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub exponent: f64,
    /// `E_joint^exponent`.
    pub joint_power: f64,
    pub our_bound: f64,
    /// One value per requested comparison, in scenario order.
    pub comparisons: Vec<f64>,
    pub flags: RowFlags,
}

impl SweepRow {
    /// CSV flag tokens joined by `|`, or `ok`.
    pub fn flag_string(&self, zjz_requested: bool) -> String {
        let f = &self.flags;
        let mut tokens = Vec::new();
        if f.error.is_some() {
            tokens.push("invalid");
        } else {
            if !f.ratio_condition {
                tokens.push("ratio_violated");
            }
            if !f.s_in_window {
                tokens.push("outside_window");
            }
            if zjz_requested && !f.zjz_proven {
                tokens.push("zjz_unproven");
            }
            if !f.sound {
                tokens.push("unsound");
            }
        }
        if tokens.is_empty() {
            "ok".to_string()
        } else {
            tokens.join("|")
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepResult {
    pub name: String,
    pub mode: Mode,
    pub comparisons: Vec<BoundId>,
    pub rows: Vec<SweepRow>,
}

impl SweepResult {
    /// Column name of a series: `Z1`, `Z2_ZLJM`, `W4_ZJZ`, …
    pub fn series_name(&self, id: BoundId) -> String {
        let label = id.series_label(self.mode);
        if id == BoundId::Ours {
            label
        } else {
            format!("{label}_{}", id.name())
        }
    }

    pub fn column(&self, id: BoundId) -> Option<Vec<f64>> {
        if id == BoundId::Ours {
            return Some(self.rows.iter().map(|r| r.our_bound).collect());
        }
        let k = self.comparisons.iter().position(|c| *c == id)?;
        Some(self.rows.iter().map(|r| r.comparisons[k]).collect())
    }

    pub fn exponents(&self) -> Vec<f64> {
        self.rows.iter().map(|r| r.exponent).collect()
    }

    pub fn invalid_rows(&self) -> usize {
        self.rows.iter().filter(|r| r.flags.error.is_some()).count()
    }
}

/// Our bound and every comparison at one exponent.
pub fn evaluate(sc: &Scenario, exponent: f64) -> qmono::Result<BoundReport> {
    let params = BoundParams::new(sc.family(exponent)?, sc.s)?;
    comparison_bounds(&sc.measures, &params, sc.zjz_p)
}

fn row(sc: &Scenario, exponent: f64) -> SweepRow {
    let joint_power = sc.measures.joint().powf(exponent);
    match evaluate(sc, exponent) {
        Ok(rep) => {
            let sound = match sc.mode {
                Mode::Monogamy => joint_power >= rep.our_bound - SOUNDNESS_SLACK,
                Mode::Polygamy => joint_power <= rep.our_bound + SOUNDNESS_SLACK,
            };
            SweepRow {
                exponent,
                joint_power,
                our_bound: rep.our_bound,
                comparisons: sc
                    .comparisons
                    .iter()
                    .map(|id| rep.comparison(*id).unwrap_or(f64::NAN))
                    .collect(),
                flags: RowFlags {
                    error: None,
                    s_in_window: rep.flags.s_in_window,
                    ratio_condition: rep.flags.ratio_condition,
                    zjz_proven: rep.flags.zjz_proven,
                    sound,
                },
            }
        }
        Err(e) => SweepRow {
            exponent,
            joint_power,
            our_bound: f64::NAN,
            comparisons: vec![f64::NAN; sc.comparisons.len()],
            flags: RowFlags {
                error: Some(e.to_string()),
                s_in_window: false,
                ratio_condition: false,
                zjz_proven: false,
                sound: false,
            },
        },
    }
}

/// Evaluates the scenario at every exponent of its grid. Points where the
/// bound is undefined are kept and flagged.
pub fn run_sweep(sc: &Scenario) -> SweepResult {
    SweepResult {
        name: sc.name.clone(),
        mode: sc.mode,
        comparisons: sc.comparisons.clone(),
        rows: sc
            .exponents
            .grid()
            .into_iter()
            .map(|x| row(sc, x))
            .collect(),
    }
}
