use super::bound::{check_chain, powers, two_term, weighted_sum};
use super::threshold::threshold_ratio_of_powers;
use super::{BoundFamily, Mode};
use crate::error::{Error, Result};
use crate::measures::MeasureVector;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepPoint {
    pub s: f64,
    pub bound: f64,
    pub in_window: bool,
}

/// Our bound evaluated over a grid of `s` values.
#[derive(Debug, Clone, PartialEq)]
pub struct TightnessReport {
    pub mode: Mode,
    /// One entry per grid value, in grid order.
    pub points: Vec<SweepPoint>,
    /// Index of the largest bound (monogamy) or smallest (polygamy).
    /// Ties resolve to the earliest grid point.
    pub tightest: usize,
    /// `[threshold, 1]`; `[a/t, 1]` for two parts.
    pub window: (f64, f64),
    /// `lim_{s→a/t}` of the two-part bound, `(E_1^g + E_2^g)^{e/g}`.
    pub critical_value: Option<f64>,
}

impl TightnessReport {
    pub fn tightest_point(&self) -> &SweepPoint {
        &self.points[self.tightest]
    }
}

/// Evaluates the two-part form for two parts and the chain form otherwise.
pub fn tightness_sweep(
    mv: &MeasureVector,
    family: &BoundFamily,
    s_grid: &[f64],
) -> Result<TightnessReport> {
    if s_grid.is_empty() {
        return Err(Error::EmptyGrid);
    }
    if let Some(&bad) = s_grid.iter().find(|s| !(**s > 0.0 && s.is_finite())) {
        return Err(Error::InvalidParameter {
            name: "s",
            value: bad,
            reason: "grid values must be positive",
        });
    }
    let (g, e, x, a) = (
        family.power(),
        family.exponent(),
        family.ratio(),
        family.a(),
    );
    check_chain(mv.parts(), g, a)?;
    let p = powers(mv.parts(), g);
    let lower = threshold_ratio_of_powers(&p, a).unwrap_or(0.0);
    let parts = mv.parts();

    let points: Vec<SweepPoint> = s_grid
        .iter()
        .map(|&s| {
            let bound = if parts.len() == 2 {
                two_term(parts[0], parts[1], e, x, a, s)
            } else {
                weighted_sum(parts, e, x, a, s)
            };
            SweepPoint {
                s,
                bound,
                in_window: lower <= s && s <= 1.0,
            }
        })
        .collect();

    let better = |cand: f64, best: f64| match family.mode() {
        Mode::Monogamy => cand > best,
        Mode::Polygamy => cand < best,
    };
    let mut tightest = 0;
    for (i, pt) in points.iter().enumerate().skip(1) {
        if better(pt.bound, points[tightest].bound) {
            tightest = i;
        }
    }

    let critical_value = (p.len() == 2).then(|| (p[0] + p[1]).powf(x));
    Ok(TightnessReport {
        mode: family.mode(),
        points,
        tightest,
        window: (lower, 1.0),
        critical_value,
    })
}
