//! Plain-text summaries printed on stdout.

use std::fmt::Write as _;

use qmono::bounds::{max_admissible_a, threshold_ratio};
use qmono::{BoundId, BoundReport, Mode};

use crate::output::format_number;
use crate::scenario::Scenario;
use crate::sweep::SweepResult;

fn g_symbol(mode: Mode) -> &'static str {
    match mode {
        Mode::Monogamy => "gamma",
        Mode::Polygamy => "delta",
    }
}

pub fn measures_summary(sc: &Scenario) -> String {
    let mv = &sc.measures;
    let mut out = String::new();
    let _ = writeln!(out, "scenario {} ({} measure)", sc.name, mv.label());
    let _ = writeln!(out, "  joint      {}", format_number(mv.joint()));
    for (k, v) in mv.parts().iter().enumerate() {
        let name = mv
            .part_labels()
            .get(k)
            .cloned()
            .unwrap_or_else(|| format!("E{}", k + 1));
        let _ = writeln!(out, "  {name:<10} {}", format_number(*v));
    }
    let _ = writeln!(out, "  {} = {}", g_symbol(sc.mode), sc.power);
    if let Some(t) = sc.t() {
        let _ = writeln!(out, "  t = E_1^g / E_2^g = {}", format_number(t));
    }
    let _ = writeln!(
        out,
        "  max admissible a = {}",
        format_number(max_admissible_a(mv, sc.power))
    );
    if let Ok(th) = threshold_ratio(mv, sc.a, sc.power) {
        let _ = writeln!(
            out,
            "  threshold at a = {}: {}",
            format_number(sc.a),
            format_number(th)
        );
    }
    out
}

pub fn bounds_summary(sc: &Scenario, exponent: f64, rep: &BoundReport) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "scenario {} ({}, {} = {}), exponent {}",
        sc.name,
        sc.mode,
        g_symbol(sc.mode),
        sc.power,
        exponent
    );
    let _ = writeln!(
        out,
        "  a = {}  s = {}",
        format_number(sc.a),
        format_number(rep.s)
    );
    if let Some(t) = rep.t {
        let _ = writeln!(
            out,
            "  t = {}  a/t = {}",
            format_number(t),
            format_number(sc.a / t)
        );
    }
    let _ = writeln!(
        out,
        "  s window [{}, {}]",
        format_number(rep.s_window.0),
        format_number(rep.s_window.1)
    );
    let _ = writeln!(
        out,
        "  joint^exponent  {}",
        format_number(sc.measures.joint().powf(exponent))
    );
    let _ = writeln!(
        out,
        "  {:<14}  {}",
        BoundId::Ours.series_label(sc.mode) + " ours",
        format_number(rep.our_bound)
    );
    for (id, v) in &rep.comparisons {
        let _ = writeln!(
            out,
            "  {:<14}  {}",
            format!("{} {}", id.series_label(sc.mode), id.name()),
            format_number(*v)
        );
    }
    let f = rep.flags;
    let _ = writeln!(
        out,
        "  flags: ratio_condition={} s_in_window={} exponent_in_range={} zjz_proven={}",
        f.ratio_condition, f.s_in_window, f.exponent_in_range, f.zjz_proven
    );
    out
}

/// Counts, per comparison, the points where our bound is at least as tight.
pub fn sweep_summary(res: &SweepResult) -> String {
    let mut out = String::new();
    let unsound = res
        .rows
        .iter()
        .filter(|r| r.flags.error.is_none() && !r.flags.sound)
        .count();
    let _ = writeln!(
        out,
        "sweep {}: {} rows, {} invalid, {} unsound",
        res.name,
        res.rows.len(),
        res.invalid_rows(),
        unsound
    );
    let ours = res.column(BoundId::Ours).unwrap_or_default();
    for id in &res.comparisons {
        let other = res.column(*id).unwrap_or_default();
        let (mut tighter, mut total) = (0, 0);
        for (o, c) in ours.iter().zip(&other) {
            if !(o.is_finite() && c.is_finite()) {
                continue;
            }
            total += 1;
            let ok = match res.mode {
                Mode::Monogamy => o - c >= -1e-12,
                Mode::Polygamy => c - o >= -1e-12,
            };
            tighter += usize::from(ok);
        }
        let _ = writeln!(
            out,
            "  {} vs {}: ours at least as tight at {tighter}/{total} points",
            res.series_name(BoundId::Ours),
            res.series_name(*id)
        );
    }
    out
}
