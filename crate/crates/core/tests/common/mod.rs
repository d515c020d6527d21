#![allow(dead_code)]

use qmono::{ComplexMatrix, PureState, C64};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_amplitudes(rng: &mut impl Rng, n: usize) -> Vec<C64> {
    (0..n)
        .map(|_| C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
        .collect()
}

pub fn random_pure(rng: &mut impl Rng, dims: &[usize]) -> PureState {
    let n = dims.iter().product();
    PureState::normalized(dims.to_vec(), random_amplitudes(rng, n)).unwrap()
}

pub fn random_hermitian(rng: &mut impl Rng, n: usize) -> ComplexMatrix {
    let m = ComplexMatrix::from_fn(n, n, |_, _| {
        C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
    });
    m.hermitize()
}

/// `[[cos θ, -e^{iφ} sin θ], [e^{-iφ} sin θ, cos θ]]` times a global phase.
pub fn rotation(theta: f64, phi: f64, chi: f64) -> [[C64; 2]; 2] {
    let (s, c) = theta.sin_cos();
    let g = C64::from_polar(1.0, chi);
    [
        [g * c, -g * C64::from_polar(s, phi)],
        [g * C64::from_polar(s, -phi), g * c],
    ]
}

pub fn random_rotation(rng: &mut impl Rng) -> [[C64; 2]; 2] {
    let tau = std::f64::consts::TAU;
    rotation(
        rng.gen_range(0.0..tau),
        rng.gen_range(0.0..tau),
        rng.gen_range(0.0..tau),
    )
}

pub fn single_qubit(rng: &mut impl Rng) -> ComplexMatrix {
    let r = random_rotation(rng);
    ComplexMatrix::from_vec(2, 2, vec![r[0][0], r[0][1], r[1][0], r[1][1]]).unwrap()
}

/// Unitary on `C^n` composed of rotations in random coordinate planes.
pub fn random_unitary(rng: &mut impl Rng, n: usize, rotations: usize) -> ComplexMatrix {
    let mut u = ComplexMatrix::identity(n);
    for _ in 0..rotations {
        let i = rng.gen_range(0..n);
        let mut j = rng.gen_range(0..n - 1);
        if j >= i {
            j += 1;
        }
        let r = random_rotation(rng);
        let mut g = ComplexMatrix::identity(n);
        g[(i, i)] = r[0][0];
        g[(i, j)] = r[0][1];
        g[(j, i)] = r[1][0];
        g[(j, j)] = r[1][1];
        u = g.matmul(&u).unwrap();
    }
    u
}

/// Kronecker product of one matrix per qubit.
pub fn local(ops: &[ComplexMatrix]) -> ComplexMatrix {
    ops.iter()
        .skip(1)
        .fold(ops[0].clone(), |acc, op| acc.kron(op))
}
