//! Acceptance criteria, one PASS/FAIL line each. Exits nonzero on any failure.

use std::time::{Duration, Instant};

use qmono::bounds::{intro_weights, monogamy_bound_tripartite, polygamy_bound_tripartite};
use qmono::measures::{
    build_measure_vector, concurrence_pure, concurrence_two_qubit, negativity,
    negativity_from_spectrum, scren_pure,
};
use qmono::presets::{example1_state, w_class_state};
use qmono::{BoundId, BoundParams, PureState, C64};
use qmono_cli::scenario::{example1, example2};
use qmono_cli::{run_property_suite, run_sweep, write_outputs, Format};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

struct Outcome {
    pass: bool,
    detail: String,
}

fn check(pass: bool, detail: String) -> Outcome {
    Outcome { pass, detail }
}

fn positive(rng: &mut impl Rng, hi: f64) -> f64 {
    hi - rng.gen_range(0.0..hi)
}

fn random_pure(rng: &mut impl Rng, dims: &[usize]) -> PureState {
    let n = dims.iter().product();
    let amps = (0..n)
        .map(|_| C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
        .collect();
    PureState::normalized(dims.to_vec(), amps).unwrap()
}

fn three_qubit_concurrences() -> Outcome {
    let psi = example1_state(0.0);
    let rho = psi.to_density();
    let joint = concurrence_pure(&psi, &[0]).unwrap();
    let tr_c = concurrence_two_qubit(&rho.partial_trace(&[0, 1]).unwrap()).unwrap();
    let tr_b = concurrence_two_qubit(&rho.partial_trace(&[0, 2]).unwrap()).unwrap();
    let errs = [
        (joint - 21f64.sqrt() / 6.0).abs(),
        (tr_b - 6f64.sqrt() / 6.0).abs(),
        (tr_c - 0.5).abs(),
    ];
    let worst = errs.iter().copied().fold(0.0, f64::max);
    check(
        worst < 1e-10,
        format!(
            "C_A|BC={joint:.15} (sqrt21/6), C(Tr_B rho)={tr_b:.15} (sqrt6/6), C(Tr_C rho)={tr_c:.15} (1/2), max err {worst:.1e}; \
             the example names these AB and AC in the opposite order to its ket"
        ),
    )
}

fn w_state_scren() -> Outcome {
    let v = scren_pure(&w_class_state(), &[0]).unwrap();
    let err = (v - 0.75).abs();
    check(err < 1e-10, format!("SCREN(A|BC)={v:.15}, err {err:.1e}"))
}

fn kernel_inequality_sampling() -> Outcome {
    let rep = run_property_suite(42, 100_000);
    let names = ["lemma1_monogamy", "lemma1_polygamy", "lemma2_chain"];
    let mut pass = true;
    let mut parts = Vec::new();
    for name in names {
        let inv = rep.get(name).unwrap();
        pass &= inv.passed() && inv.worst_margin >= -1e-12;
        parts.push(format!(
            "{name}: {} samples, worst margin {:.2e}",
            inv.samples, inv.worst_margin
        ));
    }
    pass &= rep.get("lemma1_monogamy").unwrap().samples == 100_000
        && rep.get("lemma2_chain").unwrap().samples == 10_000;
    check(pass, parts.join("; "))
}

fn critical_point_equality() -> Outcome {
    let rep = run_property_suite(42, 100_000);
    let cp = rep.get("critical_point").unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(4242);
    let mut worst_bound = 0.0_f64;
    for k in 0..1000 {
        let large: f64 = rng.gen_range(0.2..=1.0);
        let small = large * rng.gen_range(0.05..=0.95);
        let mv = build_measure_vector(1.0, &[large, small], "E").unwrap();
        let (g, e, params) = if k % 2 == 0 {
            let g = rng.gen_range(2.0..=4.0);
            let e = rng.gen_range(0.0..=g);
            let t = (large / small).powf(g);
            let a = rng.gen_range(1.0..=t);
            (g, e, BoundParams::monogamy(g, e, a, a / t).unwrap())
        } else {
            // x = e/g in [1, 5], as in the kernel sampling
            let g = rng.gen_range(0.1..=1.0);
            let e = g * rng.gen_range(1.0..=5.0);
            let t = (large / small).powf(g);
            let a = rng.gen_range(1.0..=t);
            (g, e, BoundParams::polygamy(g, e, a, a / t).unwrap())
        };
        let bound = if k % 2 == 0 {
            monogamy_bound_tripartite(&mv, &params)
        } else {
            polygamy_bound_tripartite(&mv, &params)
        }
        .unwrap()
        .our_bound;
        let want = (large.powf(g) + small.powf(g)).powf(e / g);
        worst_bound = worst_bound.max((bound - want).abs());
    }
    check(
        cp.samples == 1000 && -cp.worst_margin < 1e-12 && worst_bound < 1e-12,
        format!(
            "max |h(x,a/t)-(1+t)^x| = {:.1e} over {} tuples; max |bound(a/t) - (E1^g+E2^g)^(e/g)| = {worst_bound:.1e} over 1000",
            -cp.worst_margin, cp.samples
        ),
    )
}

fn concurrence_sweep() -> Outcome {
    let res = run_sweep(&example1().unwrap());
    let dir = tempfile::tempdir().unwrap();
    let written = write_outputs(&res, dir.path(), "figure1", Format::Both).unwrap();
    let z1 = res.column(BoundId::Ours).unwrap();
    let z2 = res.column(BoundId::Zljm).unwrap();
    let z3 = res.column(BoundId::Jfq).unwrap();
    let x = res.exponents();
    let mid = x.iter().position(|v| (v - 1.5).abs() < 1e-12).unwrap();
    let last = x.len() - 1;
    let min_gap = z1
        .iter()
        .zip(&z2)
        .map(|(a, b)| a - b)
        .fold(f64::INFINITY, f64::min);
    let pass = x.len() == 301
        && x[0] == 0.0
        && x[last] == 3.0
        && (z1[mid] - 0.43934).abs() < 1e-4
        && (z2[mid] - 0.43560).abs() < 1e-4
        && min_gap >= -1e-12
        && [z1[last], z2[last], z3[last]]
            .iter()
            .all(|v| (v - 0.193041).abs() < 1e-6)
        && written.len() == 2;
    check(
        pass,
        format!(
            "Z1(1.5)={:.6} Z2(1.5)={:.6}; min(Z1-Z2)={min_gap:.2e} over {} points; at 3: Z1={:.7} Z2={:.7} Z3={:.7}",
            z1[mid],
            z2[mid],
            x.len(),
            z1[last],
            z2[last],
            z3[last]
        ),
    )
}

fn screnoa_sweep() -> Outcome {
    let sc = example2().unwrap();
    let res = run_sweep(&sc);
    let dir = tempfile::tempdir().unwrap();
    let written = write_outputs(&res, dir.path(), "figure2", Format::Both).unwrap();
    let w1 = res.column(BoundId::Ours).unwrap();
    let w2 = res.column(BoundId::Zljm).unwrap();
    let x = res.exponents();
    let at = |b: f64| x.iter().position(|v| (v - b).abs() < 1e-12).unwrap();
    let (i06, i12) = (at(0.6), at(1.2));
    let max_excess = w1
        .iter()
        .zip(&w2)
        .map(|(a, b)| a - b)
        .fold(f64::NEG_INFINITY, f64::max);
    let joint = sc.measures.joint();
    let worst_sound = x
        .iter()
        .zip(&w1)
        .map(|(b, w)| joint.powf(*b) - w)
        .fold(f64::NEG_INFINITY, f64::max);
    let pass = x.len() == 241
        && (sc.s - 0.895852).abs() < 1e-6
        && (w1[i06] - 1.09503).abs() < 1e-4
        && (w1[i12] - 1.20349).abs() < 1e-4
        && max_excess <= 1e-12
        && worst_sound <= 0.0
        && written.len() == 2;
    check(
        pass,
        format!(
            "s={:.6}; W1(0.6)={:.6} W1(1.2)={:.6}; max(W1-W2)={max_excess:.2e}; max(N^beta-W1)={worst_sound:.3} over {} points",
            sc.s,
            w1[i06],
            w1[i12],
            x.len()
        ),
    )
}

fn oracle_equivalence() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let (mut worst_c, mut worst_n) = (0.0_f64, 0.0_f64);
    for _ in 0..200 {
        let psi = random_pure(&mut rng, &[2, 2]);
        let pure = concurrence_pure(&psi, &[0]).unwrap();
        let mixed = concurrence_two_qubit(&psi.to_density()).unwrap();
        worst_c = worst_c.max((pure - mixed).abs());
        let n1 = negativity(&psi, &[0]).unwrap();
        let n2 = negativity_from_spectrum(&psi, &[0]).unwrap();
        worst_n = worst_n.max((n1 - n2).abs());
    }
    for _ in 0..200 {
        let psi = random_pure(&mut rng, &[2, 2, 2]);
        for cut in [vec![0], vec![1], vec![2, 0]] {
            let n1 = negativity(&psi, &cut).unwrap();
            let n2 = negativity_from_spectrum(&psi, &cut).unwrap();
            worst_n = worst_n.max((n1 - n2).abs());
        }
    }
    check(
        worst_c < 1e-9 && worst_n < 1e-9,
        format!("200 two-qubit states: max concurrence gap {worst_c:.1e}; negativity paths max gap {worst_n:.1e}"),
    )
}

fn intro_weight_normalization() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let (mut worst_res, mut worst_pre) = (0.0_f64, 0.0_f64);
    for _ in 0..10_000 {
        let a = rng.gen_range(1.0..=5.0);
        let s = positive(&mut rng, 5.0);
        let gamma = rng.gen_range(2.0..=4.0);
        // the monogamy range 0 < α ≤ γ
        let alpha = positive(&mut rng, gamma);
        let w = intro_weights(a, s, alpha).unwrap();
        worst_res = worst_res.max(w.normalization_residual().abs());
        let (p1, p2) = w.prefactors(gamma);
        let x = alpha / gamma;
        worst_pre = worst_pre
            .max((p1 - (1.0 + s / a).powf(x - 1.0)).abs())
            .max((p2 - (1.0 + a / s).powf(x - 1.0)).abs());
    }
    check(
        worst_res < 1e-12 && worst_pre < 1e-12,
        format!("10000 inputs: max residual {worst_res:.1e}; max prefactor error {worst_pre:.1e}"),
    )
}

type Criterion = (&'static str, Duration, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 8] = [
        (
            "three-qubit concurrences",
            Duration::from_secs(1),
            three_qubit_concurrences,
        ),
        ("W-state SCREN", Duration::from_secs(1), w_state_scren),
        (
            "kernel inequality sampling",
            Duration::from_secs(10),
            kernel_inequality_sampling,
        ),
        (
            "critical-point equality",
            Duration::from_secs(60),
            critical_point_equality,
        ),
        (
            "concurrence sweep (Z1-Z4)",
            Duration::from_secs(5),
            concurrence_sweep,
        ),
        (
            "SCRENoA sweep (W1-W4)",
            Duration::from_secs(5),
            screnoa_sweep,
        ),
        (
            "oracle equivalence",
            Duration::from_secs(60),
            oracle_equivalence,
        ),
        (
            "intro weight normalization",
            Duration::from_secs(60),
            intro_weight_normalization,
        ),
    ];
    let mut failed = 0;
    println!("acceptance criteria");
    for (k, (name, limit, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let out = run();
        let elapsed = start.elapsed();
        let in_time = elapsed <= *limit;
        let pass = out.pass && in_time;
        failed += usize::from(!pass);
        println!(
            "{} [{}] {name}: {} ({} ms{})",
            if pass { "PASS" } else { "FAIL" },
            k + 1,
            out.detail,
            elapsed.as_millis(),
            if in_time {
                String::new()
            } else {
                format!(", limit {} ms", limit.as_millis())
            }
        );
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
