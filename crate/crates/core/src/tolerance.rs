/// Numerical tolerances shared by the state and linear-algebra layers.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Entrywise Hermiticity check for density matrices.
    pub hermitian: f64,
    /// Hermiticity check for eigensolver input.
    pub eigen_input_hermitian: f64,
    /// |Tr(rho) - 1| for density matrices.
    pub trace: f64,
    /// | ||psi||^2 - 1 | for pure states.
    pub norm: f64,
    /// Smallest eigenvalue accepted for a PSD matrix is `-psd`.
    pub psd: f64,
    /// Jacobi stops once every off-diagonal magnitude is below this.
    pub jacobi_off_diagonal: f64,
    pub jacobi_max_sweeps: usize,
}

pub const TOLERANCES: Tolerances = Tolerances {
    hermitian: 1e-12,
    eigen_input_hermitian: 1e-10,
    trace: 1e-12,
    norm: 1e-12,
    psd: 1e-10,
    jacobi_off_diagonal: 1e-13,
    jacobi_max_sweeps: 100,
};

impl Default for Tolerances {
    fn default() -> Self {
        TOLERANCES
    }
}
