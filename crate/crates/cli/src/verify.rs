//! Seeded sampling checks of the kernel inequalities.

use std::fmt;

use qmono::bounds::{intro_weights, kernel_h, lemma2_rhs};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Smallest margin accepted as a pass.
pub const MARGIN_TOL: f64 = 1e-12;

/// `h(x, y)` with parameters `a`, `t`, in that argument order.
pub type Kernel = fn(f64, f64, f64, f64) -> f64;

pub fn reference_kernel(x: f64, y: f64, a: f64, t: f64) -> f64 {
    kernel_h(x, y, a, t).map(|k| k.value).unwrap_or(f64::NAN)
}

/// Reference kernel inflated by 0.1%, for checking that the suite catches
/// violations.
pub fn corrupted_kernel(x: f64, y: f64, a: f64, t: f64) -> f64 {
    reference_kernel(x, y, a, t) * 1.001
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuiteConfig {
    pub lemma1: usize,
    pub lemma2: usize,
    pub critical_point: usize,
    pub weights: usize,
}

impl SuiteConfig {
    /// `samples` tuples per Lemma-1 direction, a tenth of that for the chain
    /// and weight checks, a hundredth for the critical point (each at least 1).
    pub fn scaled(samples: usize) -> Self {
        let samples = samples.max(1);
        Self {
            lemma1: samples,
            lemma2: (samples / 10).max(1),
            critical_point: (samples / 100).max(1),
            weights: (samples / 10).max(1),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct InvariantReport {
    pub name: &'static str,
    pub samples: usize,
    pub violations: usize,
    /// Smallest margin seen; negative means the inequality failed.
    pub worst_margin: f64,
    pub worst_case: String,
    pub first_counterexample: Option<String>,
}

impl InvariantReport {
    pub fn passed(&self) -> bool {
        self.violations == 0
    }
}

impl fmt::Display for InvariantReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {:<16} samples={:<7} violations={:<5} worst_margin={:.3e} at {}",
            if self.passed() { "PASS" } else { "FAIL" },
            self.name,
            self.samples,
            self.violations,
            self.worst_margin,
            self.worst_case
        )
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PropertyReport {
    pub seed: u64,
    pub invariants: Vec<InvariantReport>,
}

impl PropertyReport {
    pub fn passed(&self) -> bool {
        self.invariants.iter().all(InvariantReport::passed)
    }

    pub fn get(&self, name: &str) -> Option<&InvariantReport> {
        self.invariants.iter().find(|r| r.name == name)
    }
}

impl fmt::Display for PropertyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "property suite, seed {}", self.seed)?;
        for inv in &self.invariants {
            writeln!(f, "  {inv}")?;
            if let Some(ce) = &inv.first_counterexample {
                writeln!(f, "    counterexample: {ce}")?;
            }
        }
        Ok(())
    }
}

struct Tracker {
    report: InvariantReport,
}

impl Tracker {
    fn new(name: &'static str) -> Self {
        Self {
            report: InvariantReport {
                name,
                samples: 0,
                violations: 0,
                worst_margin: f64::INFINITY,
                worst_case: String::new(),
                first_counterexample: None,
            },
        }
    }

    fn record(&mut self, margin: f64, case: impl FnOnce() -> String) {
        let r = &mut self.report;
        r.samples += 1;
        // NaN counts as both a violation and a new worst case
        let bad = !(margin >= -MARGIN_TOL);
        let worse = r.samples == 1 || !(margin >= r.worst_margin);
        if !(bad || worse) {
            return;
        }
        let text = format!("{} margin={margin:e}", case());
        if bad {
            r.violations += 1;
            r.first_counterexample.get_or_insert_with(|| text.clone());
        }
        if worse {
            r.worst_margin = margin;
            r.worst_case = text;
        }
    }
}

fn stream(seed: u64, id: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(id);
    rng
}

/// Uniform on `(0, hi]`.
fn positive(rng: &mut impl Rng, hi: f64) -> f64 {
    hi - rng.gen_range(0.0..hi)
}

fn lemma1(seed: u64, n: usize, kernel: Kernel, polygamy: bool) -> InvariantReport {
    let (name, id, xr) = if polygamy {
        ("lemma1_polygamy", 1, 1.0..=5.0)
    } else {
        ("lemma1_monogamy", 0, 0.0..=1.0)
    };
    let mut rng = stream(seed, id);
    let mut tr = Tracker::new(name);
    for _ in 0..n {
        let a: f64 = rng.gen_range(1.0..=3.0);
        let t: f64 = rng.gen_range(a..=a + 5.0);
        let s = positive(&mut rng, 2.0);
        let x = rng.gen_range(xr.clone());
        let power = (1.0 + t).powf(x);
        let h = kernel(x, s, a, t);
        let margin = if polygamy { h - power } else { power - h };
        tr.record(margin, || format!("x={x} t={t} a={a} s={s}"));
    }
    tr.report
}

fn lemma2(seed: u64, n: usize) -> InvariantReport {
    let mut rng = stream(seed, 2);
    let mut tr = Tracker::new("lemma2_chain");
    for _ in 0..n {
        let len = rng.gen_range(2..=4);
        let a = rng.gen_range(1.0..=3.0);
        let mut p = vec![positive(&mut rng, 1.0)];
        for _ in 1..len {
            let prev = *p.last().unwrap();
            p.push(prev / (a * rng.gen_range(1.0..=4.0)));
        }
        let x = rng.gen_range(0.0..=1.0);
        let s = positive(&mut rng, 2.0);
        let total: f64 = p.iter().sum();
        let margin = total.powf(x) - lemma2_rhs(&p, x, a, s);
        tr.record(margin, || format!("p={p:?} x={x} a={a} s={s}"));
    }
    tr.report
}

fn critical_point(seed: u64, n: usize, kernel: Kernel) -> InvariantReport {
    let mut rng = stream(seed, 3);
    let mut tr = Tracker::new("critical_point");
    for _ in 0..n {
        let a = rng.gen_range(1.0..=3.0);
        let t = rng.gen_range(a..=a + 5.0);
        let x = rng.gen_range(0.0..=2.0);
        let diff = (kernel(x, a / t, a, t) - (1.0 + t).powf(x)).abs();
        tr.record(-diff, || format!("x={x} t={t} a={a}"));
    }
    tr.report
}

fn weights(seed: u64, n: usize) -> InvariantReport {
    let mut rng = stream(seed, 4);
    let mut tr = Tracker::new("intro_weights");
    for _ in 0..n {
        let a = rng.gen_range(1.0..=5.0);
        let s = positive(&mut rng, 5.0);
        let alpha = positive(&mut rng, 6.0);
        let margin = match intro_weights(a, s, alpha) {
            Ok(w) => -w.normalization_residual().abs(),
            Err(_) => f64::NAN,
        };
        tr.record(margin, || format!("a={a} s={s} alpha={alpha}"));
    }
    tr.report
}

/// Runs every check with the reference kernel. Deterministic in `seed`.
pub fn run_property_suite(seed: u64, samples: usize) -> PropertyReport {
    run_property_suite_with(seed, &SuiteConfig::scaled(samples), reference_kernel)
}

pub fn run_property_suite_with(seed: u64, cfg: &SuiteConfig, kernel: Kernel) -> PropertyReport {
    PropertyReport {
        seed,
        invariants: vec![
            lemma1(seed, cfg.lemma1, kernel, false),
            lemma1(seed, cfg.lemma1, kernel, true),
            lemma2(seed, cfg.lemma2),
            critical_point(seed, cfg.critical_point, kernel),
            weights(seed, cfg.weights),
        ],
    }
}
