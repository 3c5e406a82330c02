//! Numerical tolerances used across the library.
//!
//! Every threshold that a contract or test depends on lives here under one
//! name, so the value appearing in an error message, a verdict, and a test
//! is the same constant.

/// Max allowed entry of |H - H†| for a matrix treated as Hermitian.
pub const HERMITICITY: f64 = 1e-10;

/// Max allowed entry of |U†U - I| for a matrix treated as unitary.
pub const UNITARITY: f64 = 1e-10;

/// Allowed deviation of a state norm or a density-matrix trace from 1.
pub const NORMALIZATION: f64 = 1e-10;

/// Eigenvalues in [-PSD_CLAMP, 0) are treated as round-off and clamped to 0.
/// Anything below -PSD_CLAMP is genuine negativity and is rejected.
pub const PSD_CLAMP: f64 = 1e-9;

/// Jacobi sweep budget for the Hermitian eigensolver.
pub const JACOBI_SWEEP_CAP: usize = 100;

/// The eigensolver stops once every off-diagonal magnitude is below this.
pub const JACOBI_OFF_DIAGONAL: f64 = 1e-12;

/// Negativity at or below this counts as PPT (separable for two qubits).
pub const PPT: f64 = 1e-9;

/// Eigenvalues of sqrt(rho) rho_tilde sqrt(rho) below this are treated as
/// exact zeros before the square root in the concurrence formula. Forming
/// that product leaves absolute noise near 1e-15 on zero eigenvalues, which
/// the square root would amplify to 3e-8; genuine eigenvalues of the states
/// under study sit at 1e-4 or above.
pub const CONCURRENCE_FLOOR: f64 = 1e-12;

/// Residual at or below this counts as a satisfied masking constraint.
pub const MASKING: f64 = 1e-8;

/// Survivor cut for the brute-force grid oracles.
pub const ORACLE_RESIDUAL: f64 = 1e-6;

/// Two pure states with |overlap| at or above 1 minus this are the same
/// state up to phase; grid oracles skip such degenerate pairs.
pub const IDENTICAL_OVERLAP: f64 = 1e-9;

/// Nelder-Mead stops when the simplex diameter falls below this.
pub const SIMPLEX_DIAMETER: f64 = 1e-10;

/// Nelder-Mead stops when the objective spread over the simplex falls below this.
pub const OBJECTIVE_SPREAD: f64 = 1e-12;
