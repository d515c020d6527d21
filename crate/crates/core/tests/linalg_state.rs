mod common;

use common::*;
use nalgebra::DMatrix;
use proptest::prelude::*;
use qmono::linalg::{hermitian_eigen, hermitian_eigenvalues, singular_values, trace_norm};
use qmono::state::partial_transpose_matrix;
use qmono::{ComplexMatrix, DensityMatrix, C64};
use rand::Rng;

fn oracle_eigenvalues(m: &ComplexMatrix) -> Vec<f64> {
    let n = m.rows();
    let nm = DMatrix::from_fn(n, n, |i, j| m[(i, j)]);
    let mut v: Vec<f64> = nm.symmetric_eigen().eigenvalues.iter().copied().collect();
    v.sort_by(|a, b| a.partial_cmp(b).unwrap());
    v
}

#[test]
fn eigenvalues_match_nalgebra() {
    let mut r = rng(1);
    for n in [1, 2, 3, 4, 5, 8, 16] {
        for _ in 0..20 {
            let m = random_hermitian(&mut r, n);
            let ours = hermitian_eigenvalues(&m).unwrap();
            let oracle = oracle_eigenvalues(&m);
            for (a, b) in ours.iter().zip(&oracle) {
                assert!((a - b).abs() < 1e-10, "n={n}: {a} vs {b}");
            }
        }
    }
}

#[test]
fn eigenvectors_reconstruct() {
    let mut r = rng(2);
    for n in [2, 4, 8, 16] {
        let m = random_hermitian(&mut r, n);
        let eig = hermitian_eigen(&m).unwrap();
        let back = eig.map_spectrum(|x| x);
        assert!(back.max_abs_diff(&m) < 1e-12, "n={n}");
        let v = &eig.vectors;
        let gram = v.adjoint().matmul(v).unwrap();
        assert!(gram.max_abs_diff(&ComplexMatrix::identity(n)) < 1e-12);
    }
}

#[test]
fn spectrum_invariant_under_unitary_conjugation() {
    let mut r = rng(3);
    for n in [2, 4, 8] {
        for _ in 0..25 {
            let m = random_hermitian(&mut r, n);
            let u = random_unitary(&mut r, n, 3 * n);
            let conj = m.conjugate_by(&u).unwrap().hermitize();
            let a = hermitian_eigenvalues(&m).unwrap();
            let b = hermitian_eigenvalues(&conj).unwrap();
            for (x, y) in a.iter().zip(&b) {
                assert!((x - y).abs() < 1e-9);
            }
        }
    }
}

#[test]
fn singular_values_match_nalgebra() {
    let mut r = rng(4);
    for (rows, cols) in [(2, 2), (4, 4), (3, 5), (6, 2)] {
        let m = ComplexMatrix::from_fn(rows, cols, |_, _| {
            C64::new(r.gen_range(-1.0..1.0), r.gen_range(-1.0..1.0))
        });
        let ours = singular_values(&m).unwrap();
        let nm = DMatrix::from_fn(rows, cols, |i, j| m[(i, j)]);
        let mut oracle: Vec<f64> = nm.singular_values().iter().copied().collect();
        oracle.sort_by(|a, b| b.partial_cmp(a).unwrap());
        assert_eq!(ours.len(), oracle.len());
        for (a, b) in ours.iter().zip(&oracle) {
            assert!((a - b).abs() < 1e-10);
        }
    }
}

#[test]
fn w_state_reductions() {
    let w = qmono::presets::w_class_state().to_density();
    let a = w.partial_trace(&[0]).unwrap();
    let ev = a.eigenvalues().unwrap();
    assert!((ev[0] - 0.25).abs() < 1e-12 && (ev[1] - 0.75).abs() < 1e-12);
}

#[test]
fn bell_partial_transpose_spectrum() {
    let rho = qmono::presets::bell_state().to_density();
    let pt = rho.partial_transpose(0).unwrap();
    let ev = hermitian_eigenvalues(&pt).unwrap();
    assert!((ev[0] + 0.5).abs() < 1e-12);
    assert!((trace_norm(&pt).unwrap() - 2.0).abs() < 1e-12);
}

#[test]
fn example1_reduced_purity() {
    let rho = qmono::presets::example1_state(0.0).to_density();
    let a = rho.partial_trace(&[0]).unwrap();
    assert!((a.purity() - 17.0 / 24.0).abs() < 1e-12);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn eigenvalue_sum_is_trace(seed in any::<u64>(), n in 1usize..9) {
        let m = random_hermitian(&mut rng(seed), n);
        let sum: f64 = hermitian_eigenvalues(&m).unwrap().iter().sum();
        prop_assert!((sum - m.trace().re).abs() < 1e-10);
    }

    #[test]
    fn trace_norm_dominates_trace(seed in any::<u64>(), n in 1usize..9) {
        let m = random_hermitian(&mut rng(seed), n);
        prop_assert!(trace_norm(&m).unwrap() >= m.trace().norm() - 1e-12);
    }

    #[test]
    fn partial_transpose_is_involution(seed in any::<u64>(), sub in 0usize..3) {
        let rho = random_pure(&mut rng(seed), &[2, 2, 2]).to_density();
        let once = rho.partial_transpose(sub).unwrap();
        let twice = partial_transpose_matrix(&once, rho.dims(), &[sub]).unwrap();
        prop_assert_eq!(twice.as_slice(), rho.matrix().as_slice());
    }

    #[test]
    fn partial_trace_composes(seed in any::<u64>(), drop_first in 0usize..3, drop_second in 0usize..2) {
        let rho = random_pure(&mut rng(seed), &[2, 2, 2]).to_density();
        let keep: Vec<usize> = (0..3).filter(|&k| k != drop_first).collect();
        let two = rho.partial_trace(&keep).unwrap();
        let final_keep = keep[1 - drop_second];
        let via = two.partial_trace(&[1 - drop_second]).unwrap();
        let direct = rho.partial_trace(&[final_keep]).unwrap();
        prop_assert!(via.matrix().max_abs_diff(direct.matrix()) < 1e-12);
        prop_assert!((rho.full_trace().re - 1.0).abs() < 1e-12);
        prop_assert!((via.full_trace().re - 1.0).abs() < 1e-12);
    }

    #[test]
    fn mixed_states_validate(seed in any::<u64>()) {
        let mut r = rng(seed);
        let p: f64 = r.gen_range(0.0..1.0);
        let a = random_pure(&mut r, &[2, 2]).to_density();
        let b = random_pure(&mut r, &[2, 2]).to_density();
        let mix = &a.matrix().scale(C64::new(p, 0.0)) + &b.matrix().scale(C64::new(1.0 - p, 0.0));
        let rho = DensityMatrix::new(vec![2, 2], mix).unwrap();
        prop_assert!(rho.purity() <= 1.0 + 1e-12);
        prop_assert!(rho.eigenvalues().unwrap()[0] >= -1e-10);
    }
}
