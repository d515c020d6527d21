//! Entanglement measures and the measure vectors fed to the bound formulas.
//!
//! Negativity uses the unnormalized convention `N(ρ) = ||ρ^{T_A}|| - 1`;
//! [`halved_negativity`] gives the variant with the factor 1/2.

use crate::error::{Error, Result};
use crate::linalg::{hermitian_eigen, singular_values, trace_norm, ComplexMatrix, C64};
use crate::state::{
    normalize_subsystems, partial_transpose_matrix, AsDensity, DensityMatrix, PureState,
};

/// Checks that `part` is a nonempty proper subset of `0..count`.
fn bipartition(part: &[usize], count: usize) -> Result<Vec<usize>> {
    let set = normalize_subsystems(part, count)?;
    if set.is_empty() || set.len() == count {
        return Err(Error::TrivialBipartition);
    }
    Ok(set)
}

/// Eigenvalues of ρ below this fraction of the largest are treated as zero
/// when factoring `ρ = W W†`.
const RANK_CUTOFF: f64 = 1e-13;

/// Pure-state concurrence `sqrt(2 (1 - Tr ρ_A²))` across the cut `part | rest`.
///
/// Evaluated from the Schmidt coefficients `σ_i` as
/// `2 sqrt(Σ_{i<j} σ_i² σ_j²)`, which is the same quantity without the
/// cancellation in `1 - Tr ρ_A²` near product states.
pub fn concurrence_pure(state: &PureState, part: &[usize]) -> Result<f64> {
    let part = bipartition(part, state.num_subsystems())?;
    let sq: Vec<f64> = state
        .schmidt_coefficients(&part)?
        .iter()
        .map(|s| s * s)
        .collect();
    let mut pairs = 0.0;
    for i in 0..sq.len() {
        for j in (i + 1)..sq.len() {
            pairs += sq[i] * sq[j];
        }
    }
    Ok(2.0 * pairs.sqrt())
}

/// Two-qubit concurrence `max(0, λ_1 - λ_2 - λ_3 - λ_4)`.
///
/// `λ_i` are the descending square roots of the eigenvalues of
/// `ρ (Y⊗Y) ρ* (Y⊗Y)`. With `ρ = W W†` (columns of `W` are the
/// eigenvectors scaled by `√μ_k`), they are the singular values of the
/// symmetric matrix `τ = Wᵀ (Y⊗Y) W`.
pub fn concurrence_two_qubit(state: &DensityMatrix) -> Result<f64> {
    if state.dims() != [2, 2] {
        return Err(Error::NotTwoQubit {
            dims: state.dims().to_vec(),
        });
    }
    let eig = hermitian_eigen(state.matrix())?;
    let top = eig.values.iter().copied().fold(0.0, f64::max);
    let kept: Vec<usize> = (0..4)
        .filter(|&k| eig.values[k] > RANK_CUTOFF * top)
        .collect();
    let w = ComplexMatrix::from_fn(4, kept.len(), |i, k| {
        eig.vectors[(i, kept[k])] * eig.values[kept[k]].sqrt()
    });
    let tau = w.transpose().matmul(&spin_flip_operator())?.matmul(&w)?;
    let mut lambdas = singular_values(&tau)?;
    lambdas.resize(4, 0.0);
    Ok((lambdas[0] - lambdas[1] - lambdas[2] - lambdas[3]).max(0.0))
}

/// `σ_y ⊗ σ_y`.
fn spin_flip_operator() -> ComplexMatrix {
    let z = C64::new(0.0, 0.0);
    let sigma_y =
        ComplexMatrix::from_vec(2, 2, vec![z, C64::new(0.0, -1.0), C64::new(0.0, 1.0), z])
            .expect("2x2");
    sigma_y.kron(&sigma_y)
}

/// `||ρ^{T_A}|| - 1` with `A = part`.
pub fn negativity<S: AsDensity + ?Sized>(state: &S, part: &[usize]) -> Result<f64> {
    let rho = state.density();
    let part = bipartition(part, rho.num_subsystems())?;
    let pt = partial_transpose_matrix(rho.matrix(), rho.dims(), &part)?;
    Ok(trace_norm(&pt)? - 1.0)
}

/// Negativity with the conventional factor 1/2.
pub fn halved_negativity<S: AsDensity + ?Sized>(state: &S, part: &[usize]) -> Result<f64> {
    negativity(state, part).map(|n| n / 2.0)
}

/// Pure-state negativity from the Schmidt coefficients: `(Σ σ_i)² - 1`,
/// i.e. `(Tr √ρ_A)² - 1`. Taken from singular values rather than square
/// roots of the reduced spectrum, whose near-zero eigenvalues lose half
/// their digits.
pub fn negativity_from_spectrum(state: &PureState, part: &[usize]) -> Result<f64> {
    let part = bipartition(part, state.num_subsystems())?;
    let root_sum: f64 = state.schmidt_coefficients(&part)?.iter().sum();
    Ok(root_sum * root_sum - 1.0)
}

/// Square of the negativity on a pure state. For pure states the convex
/// roof is trivial, so this is both SCREN and SCRENoA.
pub fn scren_pure(state: &PureState, part: &[usize]) -> Result<f64> {
    let n = negativity(state, part)?;
    Ok(n * n)
}

/// The joint measure `E_{A|B1…B_{N-1}}` and the pairwise measures `E_i`.
///
/// `parts` are stored in descending order. Ties keep their original order.
/// `order[k]` is the position the k-th stored part had on input.
#[derive(Debug, Clone, PartialEq)]
pub struct MeasureVector {
    joint: f64,
    parts: Vec<f64>,
    order: Vec<usize>,
    part_labels: Vec<String>,
    label: String,
}

impl MeasureVector {
    pub fn joint(&self) -> f64 {
        self.joint
    }

    /// Pairwise values, descending.
    pub fn parts(&self) -> &[f64] {
        &self.parts
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    /// Pairwise values in the order they were supplied.
    pub fn parts_in_input_order(&self) -> Vec<f64> {
        let mut out = vec![0.0; self.parts.len()];
        for (k, &orig) in self.order.iter().enumerate() {
            out[orig] = self.parts[k];
        }
        out
    }

    /// Label of each stored (sorted) part.
    pub fn part_labels(&self) -> &[String] {
        &self.part_labels
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// Largest part, `E_1`.
    pub fn largest(&self) -> f64 {
        self.parts[0]
    }

    /// Smallest part, `E_{N-1}`.
    pub fn smallest(&self) -> f64 {
        *self.parts.last().expect("at least one part")
    }

    /// Attaches names to the parts, given in input order.
    pub fn with_part_labels(mut self, labels: &[&str]) -> Result<Self> {
        if labels.len() != self.parts.len() {
            return Err(Error::DimensionMismatch {
                expected: self.parts.len(),
                got: labels.len(),
            });
        }
        self.part_labels = self.order.iter().map(|&o| labels[o].to_string()).collect();
        Ok(self)
    }

    /// Concurrence profile of a pure qubit state around `focus`: the joint
    /// value is `C_{focus|rest}`, the parts are the two-qubit concurrences of
    /// `ρ_{focus,j}` for every other qubit `j`.
    pub fn concurrence_profile(state: &PureState, focus: usize) -> Result<Self> {
        let n = state.num_subsystems();
        if state.dims().iter().any(|&d| d != 2) {
            return Err(Error::InvalidState(
                "concurrence profile needs qubits".into(),
            ));
        }
        if focus >= n {
            return Err(Error::SubsystemOutOfRange {
                index: focus,
                count: n,
            });
        }
        if n < 2 {
            return Err(Error::TrivialBipartition);
        }
        let joint = concurrence_pure(state, &[focus])?;
        let rho = state.to_density();
        let mut parts = Vec::with_capacity(n - 1);
        let mut labels = Vec::with_capacity(n - 1);
        for j in (0..n).filter(|&j| j != focus) {
            let pair = rho.partial_trace(&[focus, j])?;
            parts.push(concurrence_two_qubit(&pair)?);
            labels.push(format!("{}{}", subsystem_name(focus), subsystem_name(j)));
        }
        let labels: Vec<&str> = labels.iter().map(String::as_str).collect();
        build_measure_vector(joint, &parts, "concurrence")?.with_part_labels(&labels)
    }
}

/// `A`, `B`, `C`, … for subsystem indices.
pub fn subsystem_name(index: usize) -> String {
    if index < 26 {
        char::from(b'A' + index as u8).to_string()
    } else {
        format!("S{index}")
    }
}

/// Validates and sorts user- or state-supplied measure values.
pub fn build_measure_vector(joint: f64, parts: &[f64], label: &str) -> Result<MeasureVector> {
    if !(joint.is_finite() && joint >= 0.0) {
        return Err(Error::InvalidMeasure {
            index: 0,
            value: joint,
        });
    }
    if parts.is_empty() {
        return Err(Error::PartCount {
            operation: "build_measure_vector",
            expected: 1,
            got: 0,
        });
    }
    if let Some((i, &value)) = parts
        .iter()
        .enumerate()
        .find(|(_, v)| !(v.is_finite() && **v >= 0.0))
    {
        return Err(Error::InvalidMeasure {
            index: i + 1,
            value,
        });
    }
    let mut order: Vec<usize> = (0..parts.len()).collect();
    // stable: ties stay in input order
    order.sort_by(|&i, &j| parts[j].total_cmp(&parts[i]));
    Ok(MeasureVector {
        joint,
        parts: order.iter().map(|&i| parts[i]).collect(),
        part_labels: order.iter().map(|&i| format!("E{}", i + 1)).collect(),
        order,
        label: label.to_string(),
    })
}
