use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use qmono::{BoundId, Mode};

use crate::error::{CliError, Result};
use crate::sweep::SweepResult;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Svg,
    Both,
}

/// Plain decimal with 15 significant digits; `NaN`, `inf`, `-inf` otherwise.
pub fn format_number(v: f64) -> String {
    if v.is_nan() {
        return "NaN".into();
    }
    if v.is_infinite() {
        return if v > 0.0 { "inf" } else { "-inf" }.into();
    }
    if v == 0.0 {
        return "0".into();
    }
    let sci = format!("{v:.14e}");
    let exp: i32 = sci
        .rsplit_once('e')
        .and_then(|(_, e)| e.parse().ok())
        .unwrap_or(0);
    let decimals = (14 - exp).max(0) as usize;
    format!("{v:.decimals$}")
}

pub fn csv_header(res: &SweepResult) -> String {
    let mut cols = vec![
        "exponent".to_string(),
        "joint_power".to_string(),
        res.series_name(BoundId::Ours),
    ];
    cols.extend(res.comparisons.iter().map(|id| res.series_name(*id)));
    cols.push("flags".into());
    cols.join(",")
}

/// Header plus one line per row, LF-terminated.
pub fn to_csv(res: &SweepResult) -> String {
    let zjz = res.comparisons.contains(&BoundId::Zjz);
    let mut out = csv_header(res);
    out.push('\n');
    for row in &res.rows {
        let mut fields = vec![
            format_number(row.exponent),
            format_number(row.joint_power),
            format_number(row.our_bound),
        ];
        fields.extend(row.comparisons.iter().map(|v| format_number(*v)));
        fields.push(row.flag_string(zjz));
        out.push_str(&fields.join(","));
        out.push('\n');
    }
    out
}

struct Series {
    name: String,
    color: &'static str,
    dash: Option<&'static str>,
    width: f64,
    values: Vec<f64>,
}

fn color(id: BoundId) -> &'static str {
    match id {
        BoundId::Ours => "#1f77b4",
        BoundId::Zljm => "#ff7f0e",
        BoundId::Jfq => "#2ca02c",
        BoundId::Zjz => "#d62728",
        BoundId::ZljmRatio => "#9467bd",
    }
}

/// Round step of roughly `span / 6` from the 1-2-5 sequence.
fn tick_step(span: f64) -> f64 {
    let raw = span / 6.0;
    let mag = 10f64.powf(raw.log10().floor());
    let norm = raw / mag;
    let nice = if norm < 1.5 {
        1.0
    } else if norm < 3.5 {
        2.0
    } else if norm < 7.5 {
        5.0
    } else {
        10.0
    };
    nice * mag
}

fn ticks(lo: f64, hi: f64) -> Vec<f64> {
    let step = tick_step(hi - lo);
    let first = (lo / step).ceil() as i64;
    let last = (hi / step + 1e-9).floor() as i64;
    (first..=last).map(|k| k as f64 * step).collect()
}

fn tick_label(v: f64) -> String {
    let s = format!("{v:.3}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" {
        "0".into()
    } else {
        s.to_string()
    }
}

fn escape(text: &str) -> String {
    text.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}

/// Line chart of every series against the exponent; our bound is dashed.
pub fn to_svg(res: &SweepResult) -> String {
    const W: f64 = 820.0;
    const H: f64 = 520.0;
    const LEFT: f64 = 72.0;
    const RIGHT: f64 = 190.0;
    const TOP: f64 = 44.0;
    const BOTTOM: f64 = 58.0;

    let xs = res.exponents();
    let symbol = match res.mode {
        Mode::Monogamy => "α",
        Mode::Polygamy => "β",
    };
    let mut series = vec![Series {
        name: format!("joint^{symbol}"),
        color: "#555555",
        dash: None,
        width: 1.2,
        values: res.rows.iter().map(|r| r.joint_power).collect(),
    }];
    for id in std::iter::once(BoundId::Ours).chain(res.comparisons.iter().copied()) {
        series.push(Series {
            name: res.series_name(id),
            color: color(id),
            dash: match id {
                BoundId::Ours => Some("9 5"),
                BoundId::ZljmRatio => Some("2 4"),
                _ => None,
            },
            width: if id == BoundId::Ours { 2.4 } else { 1.8 },
            values: res.column(id).unwrap_or_default(),
        });
    }

    let finite = series
        .iter()
        .flat_map(|s| s.values.iter())
        .copied()
        .filter(|v| v.is_finite());
    let (mut ylo, mut yhi) = finite.fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| {
        (lo.min(v), hi.max(v))
    });
    if !ylo.is_finite() {
        (ylo, yhi) = (0.0, 1.0);
    }
    if yhi - ylo < 1e-12 {
        (ylo, yhi) = (ylo - 0.5, yhi + 0.5);
    }
    let pad = 0.05 * (yhi - ylo);
    let (ylo, yhi) = (ylo - pad, yhi + pad);
    let (xlo, mut xhi) = (
        xs.first().copied().unwrap_or(0.0),
        xs.last().copied().unwrap_or(1.0),
    );
    if xhi - xlo < 1e-12 {
        xhi = xlo + 1.0;
    }
    let pw = W - LEFT - RIGHT;
    let ph = H - TOP - BOTTOM;
    let px = |x: f64| LEFT + (x - xlo) / (xhi - xlo) * pw;
    let py = |y: f64| TOP + (yhi - y) / (yhi - ylo) * ph;

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{W}" height="{H}" viewBox="0 0 {W} {H}" font-family="sans-serif" font-size="13">"#
    );
    let _ = writeln!(svg, r#"<rect width="{W}" height="{H}" fill="white"/>"#);
    let _ = writeln!(
        svg,
        r#"<text x="{:.2}" y="26" text-anchor="middle" font-size="15">{}</text>"#,
        LEFT + pw / 2.0,
        escape(&res.name)
    );

    for x in ticks(xlo, xhi) {
        let gx = px(x);
        let _ = writeln!(
            svg,
            r##"<line x1="{gx:.2}" y1="{TOP:.2}" x2="{gx:.2}" y2="{:.2}" stroke="#e6e6e6"/>"##,
            TOP + ph
        );
        let _ = writeln!(
            svg,
            r#"<text x="{gx:.2}" y="{:.2}" text-anchor="middle">{}</text>"#,
            TOP + ph + 18.0,
            tick_label(x)
        );
    }
    for y in ticks(ylo, yhi) {
        let gy = py(y);
        let _ = writeln!(
            svg,
            r##"<line x1="{LEFT:.2}" y1="{gy:.2}" x2="{:.2}" y2="{gy:.2}" stroke="#e6e6e6"/>"##,
            LEFT + pw
        );
        let _ = writeln!(
            svg,
            r#"<text x="{:.2}" y="{:.2}" text-anchor="end">{}</text>"#,
            LEFT - 6.0,
            gy + 4.0,
            tick_label(y)
        );
    }
    let _ = writeln!(
        svg,
        r#"<rect x="{LEFT:.2}" y="{TOP:.2}" width="{pw:.2}" height="{ph:.2}" fill="none" stroke="black"/>"#
    );
    let _ = writeln!(
        svg,
        r#"<text x="{:.2}" y="{:.2}" text-anchor="middle">{symbol}</text>"#,
        LEFT + pw / 2.0,
        H - 14.0
    );

    for s in &series {
        let dash = s
            .dash
            .map(|d| format!(r#" stroke-dasharray="{d}""#))
            .unwrap_or_default();
        // non-finite values split the curve
        let mut segments: Vec<Vec<String>> = vec![Vec::new()];
        for (x, y) in xs.iter().zip(&s.values) {
            if y.is_finite() {
                segments
                    .last_mut()
                    .unwrap()
                    .push(format!("{:.2},{:.2}", px(*x), py(*y)));
            } else if !segments.last().unwrap().is_empty() {
                segments.push(Vec::new());
            }
        }
        for seg in segments.iter().filter(|seg| !seg.is_empty()) {
            let _ = writeln!(
                svg,
                r#"<polyline fill="none" stroke="{}" stroke-width="{}"{dash} points="{}"/>"#,
                s.color,
                s.width,
                seg.join(" ")
            );
        }
    }

    let lx = LEFT + pw + 18.0;
    for (k, s) in series.iter().enumerate() {
        let y = TOP + 12.0 + k as f64 * 22.0;
        let dash = s
            .dash
            .map(|d| format!(r#" stroke-dasharray="{d}""#))
            .unwrap_or_default();
        let _ = writeln!(
            svg,
            r#"<line x1="{lx:.2}" y1="{y:.2}" x2="{:.2}" y2="{y:.2}" stroke="{}" stroke-width="{}"{dash}/>"#,
            lx + 34.0,
            s.color,
            s.width
        );
        let _ = writeln!(
            svg,
            r#"<text x="{:.2}" y="{:.2}">{}</text>"#,
            lx + 42.0,
            y + 4.0,
            escape(&s.name)
        );
    }
    svg.push_str("</svg>\n");
    svg
}

fn write(path: PathBuf, contents: &str) -> Result<PathBuf> {
    std::fs::write(&path, contents).map_err(|e| CliError::io(&path, e))?;
    Ok(path)
}

/// Writes `<stem>.csv` and/or `<stem>.svg` into `dir`, creating it if needed.
pub fn write_outputs(
    res: &SweepResult,
    dir: &Path,
    stem: &str,
    format: Format,
) -> Result<Vec<PathBuf>> {
    std::fs::create_dir_all(dir).map_err(|e| CliError::io(dir, e))?;
    let mut written = Vec::new();
    if matches!(format, Format::Csv | Format::Both) {
        written.push(write(dir.join(format!("{stem}.csv")), &to_csv(res))?);
    }
    if matches!(format, Format::Svg | Format::Both) {
        written.push(write(dir.join(format!("{stem}.svg")), &to_svg(res))?);
    }
    Ok(written)
}
