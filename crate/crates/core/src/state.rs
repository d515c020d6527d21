//! Pure states, density matrices, partial trace and partial transposition.
//!
//! Subsystem 0 is the leftmost tensor factor and basis indices are
//! big-endian: for three qubits `|b0 b1 b2>` sits at `4*b0 + 2*b1 + b2`.

use std::borrow::Cow;

use crate::error::{Error, Result};
use crate::linalg::{hermitian_eigenvalues, singular_values, ComplexMatrix, C64};
use crate::tolerance::{Tolerances, TOLERANCES};

fn validate_dims(dims: &[usize]) -> Result<usize> {
    if dims.is_empty() {
        return Err(Error::InvalidState("no subsystems".into()));
    }
    if let Some(&d) = dims.iter().find(|&&d| d < 2) {
        return Err(Error::InvalidState(format!("subsystem dimension {d} < 2")));
    }
    Ok(dims.iter().product())
}

/// Sorted, deduplicated subsystem indices, checked against `count`.
pub(crate) fn normalize_subsystems(subsystems: &[usize], count: usize) -> Result<Vec<usize>> {
    let mut set = subsystems.to_vec();
    set.sort_unstable();
    set.dedup();
    if let Some(&index) = set.iter().find(|&&i| i >= count) {
        return Err(Error::SubsystemOutOfRange { index, count });
    }
    Ok(set)
}

/// Digits of a big-endian mixed-radix index.
fn digits(mut index: usize, dims: &[usize]) -> Vec<usize> {
    let mut out = vec![0; dims.len()];
    for k in (0..dims.len()).rev() {
        out[k] = index % dims[k];
        index /= dims[k];
    }
    out
}

fn compose(digits: impl Iterator<Item = (usize, usize)>) -> usize {
    digits.fold(0, |acc, (d, dim)| acc * dim + d)
}

/// Normalized state vector over a tensor product of subsystems.
#[derive(Debug, Clone, PartialEq)]
pub struct PureState {
    dims: Vec<usize>,
    amplitudes: Vec<C64>,
}

impl PureState {
    /// Accepts amplitudes whose squared norm is 1 within the default tolerance.
    pub fn new(dims: Vec<usize>, amplitudes: Vec<C64>) -> Result<Self> {
        let total = validate_dims(&dims)?;
        if amplitudes.len() != total {
            return Err(Error::DimensionMismatch {
                expected: total,
                got: amplitudes.len(),
            });
        }
        let norm_sqr: f64 = amplitudes.iter().map(|z| z.norm_sqr()).sum();
        if !((norm_sqr - 1.0).abs() <= TOLERANCES.norm) {
            return Err(Error::InvalidState(format!(
                "squared norm {norm_sqr} differs from 1"
            )));
        }
        Ok(Self { dims, amplitudes })
    }

    /// Rescales arbitrary nonzero amplitudes to unit norm.
    pub fn normalized(dims: Vec<usize>, amplitudes: Vec<C64>) -> Result<Self> {
        let norm: f64 = amplitudes.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if !(norm > 0.0 && norm.is_finite()) {
            return Err(Error::InvalidState("amplitude vector has zero norm".into()));
        }
        Self::new(dims, amplitudes.into_iter().map(|z| z / norm).collect())
    }

    /// `n`-qubit state from amplitudes.
    pub fn qubits(n: usize, amplitudes: Vec<C64>) -> Result<Self> {
        Self::new(vec![2; n], amplitudes)
    }

    /// Computational basis state given one digit per subsystem.
    pub fn basis(dims: Vec<usize>, digits: &[usize]) -> Result<Self> {
        let total = validate_dims(&dims)?;
        if digits.len() != dims.len() {
            return Err(Error::DimensionMismatch {
                expected: dims.len(),
                got: digits.len(),
            });
        }
        if digits.iter().zip(&dims).any(|(d, dim)| d >= dim) {
            return Err(Error::InvalidState(format!(
                "basis digits {digits:?} out of range"
            )));
        }
        let mut amplitudes = vec![C64::new(0.0, 0.0); total];
        amplitudes[compose(digits.iter().copied().zip(dims.iter().copied()))] = C64::new(1.0, 0.0);
        Self::new(dims, amplitudes)
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn amplitudes(&self) -> &[C64] {
        &self.amplitudes
    }

    pub fn num_subsystems(&self) -> usize {
        self.dims.len()
    }

    /// `|ψ><ψ|`.
    pub fn to_density(&self) -> DensityMatrix {
        DensityMatrix {
            dims: self.dims.clone(),
            matrix: ComplexMatrix::outer(&self.amplitudes, &self.amplitudes),
        }
    }

    /// Schmidt coefficients across `part | rest`, descending.
    ///
    /// These are the singular values of the amplitudes reshaped into a
    /// `dim(part) x dim(rest)` matrix; their squares are the spectrum of
    /// the reduced state on `part`.
    pub fn schmidt_coefficients(&self, part: &[usize]) -> Result<Vec<f64>> {
        let part = normalize_subsystems(part, self.dims.len())?;
        let rest: Vec<usize> = (0..self.dims.len()).filter(|i| !part.contains(i)).collect();
        let rows: usize = part.iter().map(|&k| self.dims[k]).product();
        let cols: usize = rest.iter().map(|&k| self.dims[k]).product();
        let mut m = ComplexMatrix::zeros(rows, cols);
        for (n, &amp) in self.amplitudes.iter().enumerate() {
            let d = digits(n, &self.dims);
            let i = compose(part.iter().map(|&k| (d[k], self.dims[k])));
            let j = compose(rest.iter().map(|&k| (d[k], self.dims[k])));
            m[(i, j)] = amp;
        }
        singular_values(&m)
    }

    /// Applies a unitary acting on the full space.
    pub fn evolve(&self, unitary: &ComplexMatrix) -> Result<Self> {
        let amplitudes = unitary.mul_vec(&self.amplitudes)?;
        Self::normalized(self.dims.clone(), amplitudes)
    }
}

/// Hermitian, positive semidefinite, unit-trace matrix with subsystem tags.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    dims: Vec<usize>,
    matrix: ComplexMatrix,
}

impl DensityMatrix {
    pub fn new(dims: Vec<usize>, matrix: ComplexMatrix) -> Result<Self> {
        Self::with_tolerances(dims, matrix, &TOLERANCES)
    }

    pub fn with_tolerances(
        dims: Vec<usize>,
        matrix: ComplexMatrix,
        tol: &Tolerances,
    ) -> Result<Self> {
        let total = validate_dims(&dims)?;
        if matrix.rows() != total || matrix.cols() != total {
            return Err(Error::DimensionMismatch {
                expected: total,
                got: matrix.rows().max(matrix.cols()),
            });
        }
        let deviation = matrix.hermitian_deviation();
        if !(deviation <= tol.hermitian) {
            return Err(Error::NotHermitian { deviation });
        }
        let trace = matrix.trace();
        if !((trace.re - 1.0).abs() <= tol.trace && trace.im.abs() <= tol.trace) {
            return Err(Error::InvalidState(format!("trace {trace} differs from 1")));
        }
        let min = hermitian_eigenvalues(&matrix)?[0];
        if min < -tol.psd {
            return Err(Error::InvalidState(format!(
                "not positive semidefinite (min eigenvalue {min:e})"
            )));
        }
        Ok(Self { dims, matrix })
    }

    /// Product state `a ⊗ b`.
    pub fn tensor(&self, other: &Self) -> Self {
        let mut dims = self.dims.clone();
        dims.extend_from_slice(&other.dims);
        Self {
            dims,
            matrix: self.matrix.kron(&other.matrix),
        }
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn num_subsystems(&self) -> usize {
        self.dims.len()
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    /// Reduced state on `keep` (subsystem order preserved ascending).
    pub fn partial_trace(&self, keep: &[usize]) -> Result<Self> {
        if keep.is_empty() {
            return Err(Error::EmptySubsystemSet);
        }
        let keep = normalize_subsystems(keep, self.dims.len())?;
        let (dims, matrix) = reduce(&self.dims, &self.matrix, &keep);
        Ok(Self { dims, matrix })
    }

    /// Tracing out every subsystem; 1 up to round-off.
    pub fn full_trace(&self) -> C64 {
        reduce(&self.dims, &self.matrix, &[]).1[(0, 0)]
    }

    /// Partial transpose with respect to one subsystem.
    pub fn partial_transpose(&self, subsystem: usize) -> Result<ComplexMatrix> {
        partial_transpose_matrix(&self.matrix, &self.dims, &[subsystem])
    }

    /// Purity `Tr(ρ²)`.
    pub fn purity(&self) -> f64 {
        // Tr(ρ²) = Σ_ij |ρ_ij|² for Hermitian ρ
        self.matrix.as_slice().iter().map(|z| z.norm_sqr()).sum()
    }

    /// Ascending spectrum.
    pub fn eigenvalues(&self) -> Result<Vec<f64>> {
        hermitian_eigenvalues(&self.matrix)
    }
}

/// Free-function form of [`DensityMatrix::partial_trace`].
pub fn partial_trace(state: &DensityMatrix, keep: &[usize]) -> Result<DensityMatrix> {
    state.partial_trace(keep)
}

/// Free-function form of [`DensityMatrix::partial_transpose`].
pub fn partial_transpose(state: &DensityMatrix, subsystem: usize) -> Result<ComplexMatrix> {
    state.partial_transpose(subsystem)
}

/// Free-function form of [`DensityMatrix::purity`].
pub fn purity(state: &DensityMatrix) -> f64 {
    state.purity()
}

fn reduce(dims: &[usize], matrix: &ComplexMatrix, keep: &[usize]) -> (Vec<usize>, ComplexMatrix) {
    let total = matrix.rows();
    let kept_dims: Vec<usize> = keep.iter().map(|&k| dims[k]).collect();
    let traced: Vec<usize> = (0..dims.len()).filter(|i| !keep.contains(i)).collect();
    let kept_total: usize = kept_dims.iter().product();

    let mut kept_index = vec![0; total];
    let mut traced_index = vec![0; total];
    for n in 0..total {
        let d = digits(n, dims);
        kept_index[n] = compose(keep.iter().map(|&k| (d[k], dims[k])));
        traced_index[n] = compose(traced.iter().map(|&k| (d[k], dims[k])));
    }

    let mut out = ComplexMatrix::zeros(kept_total, kept_total);
    for n in 0..total {
        for m in 0..total {
            if traced_index[n] == traced_index[m] {
                out[(kept_index[n], kept_index[m])] += matrix[(n, m)];
            }
        }
    }
    (kept_dims, out)
}

/// Transposes the indices of every subsystem in `subsystems`.
///
/// Works on any square matrix of side `∏dims`; applying it twice returns
/// the input exactly.
pub fn partial_transpose_matrix(
    matrix: &ComplexMatrix,
    dims: &[usize],
    subsystems: &[usize],
) -> Result<ComplexMatrix> {
    let total = validate_dims(dims)?;
    if matrix.rows() != total || matrix.cols() != total {
        return Err(Error::DimensionMismatch {
            expected: total,
            got: matrix.rows().max(matrix.cols()),
        });
    }
    let set = normalize_subsystems(subsystems, dims.len())?;
    let all: Vec<Vec<usize>> = (0..total).map(|n| digits(n, dims)).collect();
    let mut out = ComplexMatrix::zeros(total, total);
    for n in 0..total {
        for m in 0..total {
            let (mut dn, mut dm) = (all[n].clone(), all[m].clone());
            for &k in &set {
                std::mem::swap(&mut dn[k], &mut dm[k]);
            }
            let n2 = compose(dn.into_iter().zip(dims.iter().copied()));
            let m2 = compose(dm.into_iter().zip(dims.iter().copied()));
            out[(n2, m2)] = matrix[(n, m)];
        }
    }
    Ok(out)
}

/// Anything that can be viewed as a density matrix.
pub trait AsDensity {
    fn density(&self) -> Cow<'_, DensityMatrix>;
}

impl AsDensity for DensityMatrix {
    fn density(&self) -> Cow<'_, DensityMatrix> {
        Cow::Borrowed(self)
    }
}

impl AsDensity for PureState {
    fn density(&self) -> Cow<'_, DensityMatrix> {
        Cow::Owned(self.to_density())
    }
}
