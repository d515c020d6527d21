use std::collections::BTreeMap;

use super::threshold::{max_admissible_a_of_powers, threshold_ratio_of_powers};
use super::{BoundFlags, BoundId, BoundParams, BoundReport, Mode};
use crate::error::{Error, Result};
use crate::measures::MeasureVector;

/// Relative slack on the chain condition so that `a` set to exactly the
/// largest admissible value is accepted despite round-off.
const CHAIN_SLACK: f64 = 1e-12;

/// `(1 + a/s)^{x-1} Σ_i ((1 + s/a)^{x-1})^{n-i} E_i^e` over descending `parts`.
pub(crate) fn weighted_sum(parts: &[f64], exponent: f64, x: f64, a: f64, s: f64) -> f64 {
    let lead = (1.0 + a / s).powf(x - 1.0);
    let step = (1.0 + s / a).powf(x - 1.0);
    let n = parts.len();
    let sum: f64 = parts
        .iter()
        .enumerate()
        .map(|(i, e)| step.powi((n - 1 - i) as i32) * e.powf(exponent))
        .sum();
    lead * sum
}

/// `(1 + a/s)^{x-1} E_small^e + (1 + s/a)^{x-1} E_large^e`.
pub(crate) fn two_term(large: f64, small: f64, exponent: f64, x: f64, a: f64, s: f64) -> f64 {
    (1.0 + a / s).powf(x - 1.0) * small.powf(exponent)
        + (1.0 + s / a).powf(x - 1.0) * large.powf(exponent)
}

pub(crate) fn powers(parts: &[f64], power: f64) -> Vec<f64> {
    parts.iter().map(|e| e.powf(power)).collect()
}

/// Verifies `E_i^g ≥ a E_{i+1}^g` along the descending chain.
pub(crate) fn check_chain(parts: &[f64], power: f64, a: f64) -> Result<()> {
    let p = powers(parts, power);
    for (i, w) in p.windows(2).enumerate() {
        if w[0] < a * w[1] * (1.0 - CHAIN_SLACK) {
            return Err(Error::RatioCondition {
                index: i,
                a,
                max_a: max_admissible_a_of_powers(&p),
            });
        }
    }
    Ok(())
}

fn require_mode(params: &BoundParams, expected: Mode, operation: &'static str) -> Result<()> {
    if params.mode() == expected {
        Ok(())
    } else {
        Err(Error::WrongMode {
            operation,
            expected,
        })
    }
}

fn require_two(mv: &MeasureVector, operation: &'static str) -> Result<()> {
    if mv.parts().len() == 2 {
        Ok(())
    } else {
        Err(Error::PartCount {
            operation,
            expected: 2,
            got: mv.parts().len(),
        })
    }
}

fn report(mv: &MeasureVector, params: &BoundParams, our_bound: f64) -> BoundReport {
    let p = powers(mv.parts(), params.power());
    let t = (p.len() == 2 && p[0] > 0.0).then(|| p[0] / p[1]);
    let lower = threshold_ratio_of_powers(&p, params.a()).unwrap_or(0.0);
    let s = params.s();
    let ratio_condition = p
        .windows(2)
        .all(|w| w[0] >= params.a() * w[1] * (1.0 - CHAIN_SLACK));
    let zjz_proven = match params.mode() {
        Mode::Monogamy => params.exponent() <= params.power() / 2.0,
        Mode::Polygamy => true,
    };
    BoundReport {
        mode: params.mode(),
        our_bound,
        comparisons: BTreeMap::new(),
        t,
        s,
        s_window: (lower, 1.0),
        flags: BoundFlags {
            ratio_condition,
            s_in_window: lower <= s && s <= 1.0,
            // BoundFamily construction enforces the range
            exponent_in_range: true,
            zjz_proven,
        },
    }
}

fn tripartite(
    mv: &MeasureVector,
    params: &BoundParams,
    mode: Mode,
    operation: &'static str,
) -> Result<BoundReport> {
    require_mode(params, mode, operation)?;
    require_two(mv, operation)?;
    check_chain(mv.parts(), params.power(), params.a())?;
    let (large, small) = (mv.parts()[0], mv.parts()[1]);
    let value = two_term(
        large,
        small,
        params.exponent(),
        params.ratio(),
        params.a(),
        params.s(),
    );
    Ok(report(mv, params, value))
}

fn multipartite(
    mv: &MeasureVector,
    params: &BoundParams,
    mode: Mode,
    operation: &'static str,
) -> Result<BoundReport> {
    require_mode(params, mode, operation)?;
    check_chain(mv.parts(), params.power(), params.a())?;
    let value = weighted_sum(
        mv.parts(),
        params.exponent(),
        params.ratio(),
        params.a(),
        params.s(),
    );
    Ok(report(mv, params, value))
}

/// Lower bound on `E_{A|BC}^α` from two pairwise measures.
///
/// The smaller measure carries the `(1 + a/s)` factor. At `s = a/t` the
/// bound equals `(E_1^γ + E_2^γ)^{α/γ}`.
pub fn monogamy_bound_tripartite(mv: &MeasureVector, params: &BoundParams) -> Result<BoundReport> {
    tripartite(mv, params, Mode::Monogamy, "monogamy_bound_tripartite")
}

/// Lower bound on `E_{A|B_1…B_{N-1}}^α` from `N-1` pairwise measures.
pub fn monogamy_bound_multipartite(
    mv: &MeasureVector,
    params: &BoundParams,
) -> Result<BoundReport> {
    multipartite(mv, params, Mode::Monogamy, "monogamy_bound_multipartite")
}

/// Upper bound on `E_{A|BC}^β` from two pairwise measures.
pub fn polygamy_bound_tripartite(mv: &MeasureVector, params: &BoundParams) -> Result<BoundReport> {
    tripartite(mv, params, Mode::Polygamy, "polygamy_bound_tripartite")
}

/// Upper bound on `E_{A|B_1…B_{N-1}}^β` from `N-1` pairwise measures.
pub fn polygamy_bound_multipartite(
    mv: &MeasureVector,
    params: &BoundParams,
) -> Result<BoundReport> {
    multipartite(mv, params, Mode::Polygamy, "polygamy_bound_multipartite")
}

/// ZLJM bound: the weighted bound at `s = 1`.
pub fn zljm_bound(large: f64, small: f64, exponent: f64, x: f64, a: f64) -> f64 {
    two_term(large, small, exponent, x, a, 1.0)
}

/// ZLJM form with `t` in place of `a`.
pub fn zljm_ratio_bound(large: f64, small: f64, exponent: f64, x: f64, t: f64) -> f64 {
    two_term(large, small, exponent, x, t, 1.0)
}

/// JFQ bound: `E_small^e + ((1 + a)^x - 1) / a^x · E_large^e`.
pub fn jfq_bound(large: f64, small: f64, exponent: f64, x: f64, a: f64) -> f64 {
    small.powf(exponent) + ((1.0 + a).powf(x) - 1.0) / a.powf(x) * large.powf(exponent)
}

/// ZJZ bound: `p^x E_small^e + ((1 + a)^x - p^x) / a^x · E_large^e`.
pub fn zjz_bound(large: f64, small: f64, exponent: f64, x: f64, a: f64, p: f64) -> f64 {
    let px = p.powf(x);
    px * small.powf(exponent) + ((1.0 + a).powf(x) - px) / a.powf(x) * large.powf(exponent)
}

/// Our bound together with the earlier bound families.
///
/// With two parts the report holds ZLJM, JFQ, ZJZ (with parameter `p`) and
/// the `t`-substituted ZLJM variant. With any other number of parts only the
/// multipartite ZLJM form (our bound at `s = 1`) is defined.
pub fn comparison_bounds(mv: &MeasureVector, params: &BoundParams, p: f64) -> Result<BoundReport> {
    if !(p > 0.0 && p <= 1.0) {
        return Err(Error::InvalidParameter {
            name: "p",
            value: p,
            reason: "must lie in (0, 1]",
        });
    }
    let two = mv.parts().len() == 2;
    let mut rep = match (params.mode(), two) {
        (Mode::Monogamy, true) => monogamy_bound_tripartite(mv, params)?,
        (Mode::Monogamy, false) => monogamy_bound_multipartite(mv, params)?,
        (Mode::Polygamy, true) => polygamy_bound_tripartite(mv, params)?,
        (Mode::Polygamy, false) => polygamy_bound_multipartite(mv, params)?,
    };
    let (e, x, a) = (params.exponent(), params.ratio(), params.a());
    if two {
        let (large, small) = (mv.parts()[0], mv.parts()[1]);
        rep.comparisons
            .insert(BoundId::Zljm, zljm_bound(large, small, e, x, a));
        rep.comparisons
            .insert(BoundId::Jfq, jfq_bound(large, small, e, x, a));
        rep.comparisons
            .insert(BoundId::Zjz, zjz_bound(large, small, e, x, a, p));
        if let Some(t) = rep.t.filter(|t| t.is_finite()) {
            rep.comparisons
                .insert(BoundId::ZljmRatio, zljm_ratio_bound(large, small, e, x, t));
        }
    } else {
        rep.comparisons
            .insert(BoundId::Zljm, weighted_sum(mv.parts(), e, x, a, 1.0));
    }
    Ok(rep)
}
