//! The two worked three-qubit examples and their parameter choices.

use crate::linalg::C64;
use crate::measures::{build_measure_vector, scren_pure, MeasureVector};
use crate::state::PureState;

/// Power γ used for the concurrence example.
pub const EXAMPLE1_GAMMA: f64 = 3.0;
/// Power δ used for the SCRENoA example.
pub const EXAMPLE2_DELTA: f64 = 0.6;
/// Ratio parameter `a` of the SCRENoA example.
pub const EXAMPLE2_A: f64 = 1.2;
/// Default `p` of the ZJZ comparison bound.
pub const ZJZ_DEFAULT_P: f64 = 0.5;

/// Pairwise SCRENoA values `(AB, AC)` of the W-class state. These are
/// convex-roof quantities on mixed reductions and are taken as given.
pub const EXAMPLE2_PAIRWISE_SCRENOA: [f64; 2] = [0.25, 0.5];

/// `a = 1.05^{γ/2}`.
pub fn example1_a(gamma: f64) -> f64 {
    1.05f64.powf(gamma / 2.0)
}

/// `s = 0.72^{γ/2}`.
pub fn example1_s(gamma: f64) -> f64 {
    0.72f64.powf(gamma / 2.0)
}

/// `s = (a + t) / (2t)`, the midpoint of the window `[a/t, 1]`.
pub fn window_midpoint(a: f64, t: f64) -> f64 {
    (a + t) / (2.0 * t)
}

/// `(|000> + |110>)/2 + (e^{iφ}|100> + |101> + |111>)/√6`.
pub fn example1_state(phi: f64) -> PureState {
    let half = C64::new(0.5, 0.0);
    let k = 1.0 / 6f64.sqrt();
    let mut amps = vec![C64::new(0.0, 0.0); 8];
    amps[0b000] = half;
    amps[0b110] = half;
    amps[0b100] = C64::from_polar(k, phi);
    amps[0b101] = C64::new(k, 0.0);
    amps[0b111] = C64::new(k, 0.0);
    PureState::qubits(3, amps).expect("normalized by construction")
}

/// Generalized W-class state `(|100> + |010>)/2 + |001>/√2`.
pub fn w_class_state() -> PureState {
    let mut amps = vec![C64::new(0.0, 0.0); 8];
    amps[0b100] = C64::new(0.5, 0.0);
    amps[0b010] = C64::new(0.5, 0.0);
    amps[0b001] = C64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
    PureState::qubits(3, amps).expect("normalized by construction")
}

/// `(|00> + |11>)/√2`.
pub fn bell_state() -> PureState {
    let h = C64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
    let z = C64::new(0.0, 0.0);
    PureState::qubits(2, vec![h, z, z, h]).expect("normalized by construction")
}

/// Concurrence vector of the first example: `C_{A|BC}`, `C_AB`, `C_AC`.
pub fn example1_measures() -> MeasureVector {
    MeasureVector::concurrence_profile(&example1_state(0.0), 0).expect("valid three-qubit state")
}

/// SCRENoA vector of the W-class example. The joint value is computed from
/// the state; the pairwise values are the supplied constants.
pub fn example2_measures() -> MeasureVector {
    let joint = scren_pure(&w_class_state(), &[0]).expect("valid bipartition");
    build_measure_vector(joint, &EXAMPLE2_PAIRWISE_SCRENOA, "SCRENoA")
        .and_then(|mv| mv.with_part_labels(&["AB", "AC"]))
        .expect("nonnegative values")
}
