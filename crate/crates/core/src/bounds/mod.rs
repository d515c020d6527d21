//! Weighted monogamy and polygamy bounds.
//!
//! All bounds share one kernel. With `x = e/g` (exponent over power) and the
//! pairwise measures sorted descending `E_1 ≥ … ≥ E_n`,
//!
//! ```text
//! n = 2:  (1 + a/s)^{x-1} E_2^e + (1 + s/a)^{x-1} E_1^e
//! n ≥ 1:  (1 + a/s)^{x-1} Σ_i ((1 + s/a)^{x-1})^{n-i} E_i^e
//! ```
//!
//! In monogamy mode (`g = γ ≥ 2`, `0 ≤ e = α ≤ γ`) these are lower bounds on
//! `E_joint^α`; in polygamy mode (`0 < g = δ ≤ 1`, `e = β ≥ δ`) they are
//! upper bounds on `E_joint^β`. Both require the chain condition
//! `E_i^g ≥ a E_{i+1}^g` for the chosen `a ≥ 1`.

mod bound;
mod kernel;
mod sweep;
mod threshold;
mod weights;

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

pub use bound::{
    comparison_bounds, jfq_bound, monogamy_bound_multipartite, monogamy_bound_tripartite,
    polygamy_bound_multipartite, polygamy_bound_tripartite, zjz_bound, zljm_bound,
    zljm_ratio_bound,
};
pub use kernel::{
    check_lemma1, check_lemma2, kernel_h, lemma2_rhs, KernelValue, LemmaCheck, Relation,
};
pub use sweep::{tightness_sweep, SweepPoint, TightnessReport};
pub use threshold::{max_admissible_a, threshold_ratio, threshold_ratio_of_powers};
pub use weights::{intro_weights, IntroWeights};

/// Which side of the joint measure the bound sits on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Mode {
    /// Lower bounds on `E_joint^α`.
    Monogamy,
    /// Upper bounds on `E_joint^β`.
    Polygamy,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Monogamy => "monogamy",
            Mode::Polygamy => "polygamy",
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

fn require_finite(name: &'static str, value: f64) -> Result<()> {
    if value.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidParameter {
            name,
            value,
            reason: "must be finite",
        })
    }
}

/// Everything a bound needs except the weight parameter `s`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundFamily {
    mode: Mode,
    power: f64,
    exponent: f64,
    a: f64,
}

impl BoundFamily {
    /// Monogamy family with power `γ ≥ 2` and exponent `0 ≤ α ≤ γ`.
    pub fn monogamy(gamma: f64, alpha: f64, a: f64) -> Result<Self> {
        Self::new(Mode::Monogamy, gamma, alpha, a)
    }

    /// Polygamy family with power `0 < δ ≤ 1` and exponent `β ≥ δ`.
    pub fn polygamy(delta: f64, beta: f64, a: f64) -> Result<Self> {
        Self::new(Mode::Polygamy, delta, beta, a)
    }

    pub fn new(mode: Mode, power: f64, exponent: f64, a: f64) -> Result<Self> {
        require_finite("power", power)?;
        require_finite("exponent", exponent)?;
        require_finite("a", a)?;
        if a < 1.0 {
            return Err(Error::InvalidParameter {
                name: "a",
                value: a,
                reason: "must be at least 1",
            });
        }
        match mode {
            Mode::Monogamy => {
                if power < 2.0 {
                    return Err(Error::InvalidParameter {
                        name: "gamma",
                        value: power,
                        reason: "monogamy requires gamma >= 2",
                    });
                }
                if !(0.0..=power).contains(&exponent) {
                    return Err(Error::InvalidParameter {
                        name: "alpha",
                        value: exponent,
                        reason: "monogamy requires 0 <= alpha <= gamma",
                    });
                }
            }
            Mode::Polygamy => {
                if !(power > 0.0 && power <= 1.0) {
                    return Err(Error::InvalidParameter {
                        name: "delta",
                        value: power,
                        reason: "polygamy requires 0 < delta <= 1",
                    });
                }
                if exponent < power {
                    return Err(Error::InvalidParameter {
                        name: "beta",
                        value: exponent,
                        reason: "polygamy requires beta >= delta",
                    });
                }
            }
        }
        Ok(Self {
            mode,
            power,
            exponent,
            a,
        })
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    /// `γ` or `δ`.
    pub fn power(&self) -> f64 {
        self.power
    }

    /// `α` or `β`.
    pub fn exponent(&self) -> f64 {
        self.exponent
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    /// `x = exponent / power`.
    pub fn ratio(&self) -> f64 {
        self.exponent / self.power
    }

    pub fn with_s(self, s: f64) -> Result<BoundParams> {
        BoundParams::new(self, s)
    }
}

/// A [`BoundFamily`] plus the weight parameter `s > 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundParams {
    family: BoundFamily,
    s: f64,
}

impl BoundParams {
    pub fn new(family: BoundFamily, s: f64) -> Result<Self> {
        if !(s > 0.0 && s.is_finite()) {
            return Err(Error::InvalidParameter {
                name: "s",
                value: s,
                reason: "must be positive and finite",
            });
        }
        Ok(Self { family, s })
    }

    pub fn monogamy(gamma: f64, alpha: f64, a: f64, s: f64) -> Result<Self> {
        Self::new(BoundFamily::monogamy(gamma, alpha, a)?, s)
    }

    pub fn polygamy(delta: f64, beta: f64, a: f64, s: f64) -> Result<Self> {
        Self::new(BoundFamily::polygamy(delta, beta, a)?, s)
    }

    pub fn family(&self) -> &BoundFamily {
        &self.family
    }

    pub fn mode(&self) -> Mode {
        self.family.mode
    }

    pub fn power(&self) -> f64 {
        self.family.power
    }

    pub fn exponent(&self) -> f64 {
        self.family.exponent
    }

    pub fn a(&self) -> f64 {
        self.family.a
    }

    pub fn s(&self) -> f64 {
        self.s
    }

    pub fn ratio(&self) -> f64 {
        self.family.ratio()
    }
}

/// Identifies a bound series.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BoundId {
    /// The `s`-weighted bound.
    Ours,
    /// Zhang–Li–Jing–Ma form, the `s = 1` specialization.
    Zljm,
    /// ZLJM form with the measure ratio `t` substituted for `a`.
    ZljmRatio,
    /// Jin–Fei–Qiao form.
    Jfq,
    /// Zhang–Jing–Zhao form with parameter `p`.
    Zjz,
}

impl BoundId {
    pub const COMPARISONS: [BoundId; 4] = [
        BoundId::Zljm,
        BoundId::Jfq,
        BoundId::Zjz,
        BoundId::ZljmRatio,
    ];

    /// Short identifier used on the command line and in file headers.
    pub fn name(self) -> &'static str {
        match self {
            BoundId::Ours => "ours",
            BoundId::Zljm => "ZLJM",
            BoundId::ZljmRatio => "ZLJM-t",
            BoundId::Jfq => "JFQ",
            BoundId::Zjz => "ZJZ",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        match name.to_ascii_uppercase().as_str() {
            "OURS" => Some(BoundId::Ours),
            "ZLJM" => Some(BoundId::Zljm),
            "ZLJM-T" | "ZLJM_T" => Some(BoundId::ZljmRatio),
            "JFQ" => Some(BoundId::Jfq),
            "ZJZ" => Some(BoundId::Zjz),
            _ => None,
        }
    }

    /// Series label as drawn in the figures: `Z1`…`Z4` for monogamy,
    /// `W1`…`W4` for polygamy.
    pub fn series_label(self, mode: Mode) -> String {
        let prefix = match mode {
            Mode::Monogamy => 'Z',
            Mode::Polygamy => 'W',
        };
        match self {
            BoundId::Ours => format!("{prefix}1"),
            BoundId::Zljm => format!("{prefix}2"),
            BoundId::Jfq => format!("{prefix}3"),
            BoundId::Zjz => format!("{prefix}4"),
            BoundId::ZljmRatio => format!("{prefix}2t"),
        }
    }
}

impl fmt::Display for BoundId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundFlags {
    /// `E_i^g ≥ a E_{i+1}^g` holds along the chain (`t ≥ a` for two parts).
    pub ratio_condition: bool,
    /// `s` lies in `[threshold, 1]`. For two parts this guarantees dominance
    /// over ZLJM; for the chain form over more parts it does not.
    pub s_in_window: bool,
    /// Exponent lies in the theorem's range for the mode.
    pub exponent_in_range: bool,
    /// ZJZ monogamy is only proven for `α ≤ γ/2`; always true for polygamy.
    pub zjz_proven: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoundReport {
    pub mode: Mode,
    pub our_bound: f64,
    pub comparisons: BTreeMap<BoundId, f64>,
    /// `E_1^g / E_2^g` for two parts.
    pub t: Option<f64>,
    pub s: f64,
    /// `[threshold ratio, 1]`; `[a/t, 1]` for two parts.
    pub s_window: (f64, f64),
    pub flags: BoundFlags,
}

impl BoundReport {
    pub fn comparison(&self, id: BoundId) -> Option<f64> {
        if id == BoundId::Ours {
            Some(self.our_bound)
        } else {
            self.comparisons.get(&id).copied()
        }
    }
}
