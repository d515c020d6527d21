use super::bound::powers;
use crate::error::{Error, Result};
use crate::measures::MeasureVector;

/// `max_k a·p_k / (p_1 + … + p_{k-1})` over the descending powers `p_i = E_i^g`.
///
/// This is the lower end of the `s` window `[threshold, 1]`. For two parts it
/// equals `a/t` and the two-part bound dominates its `s = 1` specialization
/// inside the window. The chain form over more parts is not monotone there
/// in general. Called `p` for monogamy (`g = γ`) and `r` for polygamy
/// (`g = δ`). A single part has no candidate and yields 0.
pub fn threshold_ratio(mv: &MeasureVector, a: f64, power: f64) -> Result<f64> {
    threshold_ratio_of_powers(&powers(mv.parts(), power), a)
}

/// [`threshold_ratio`] on already-raised values.
pub fn threshold_ratio_of_powers(p: &[f64], a: f64) -> Result<f64> {
    match p.first() {
        None => Err(Error::PartCount {
            operation: "threshold_ratio",
            expected: 1,
            got: 0,
        }),
        Some(&lead) if !(lead > 0.0) => Err(Error::InvalidParameter {
            name: "E_1",
            value: lead,
            reason: "leading part must be positive",
        }),
        Some(_) => {
            let mut prefix = 0.0;
            let mut best = 0.0_f64;
            for w in p.windows(2) {
                prefix += w[0];
                best = best.max(a * w[1] / prefix);
            }
            Ok(best)
        }
    }
}

/// Largest `a` satisfying the chain condition: `min_i (E_i / E_{i+1})^g`.
pub fn max_admissible_a(mv: &MeasureVector, power: f64) -> f64 {
    max_admissible_a_of_powers(&powers(mv.parts(), power))
}

pub(crate) fn max_admissible_a_of_powers(p: &[f64]) -> f64 {
    p.windows(2)
        .map(|w| {
            if w[1] > 0.0 {
                w[0] / w[1]
            } else {
                f64::INFINITY
            }
        })
        .fold(f64::INFINITY, f64::min)
}
