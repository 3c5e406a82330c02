use thiserror::Error;

/// Errors shared across the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix not Hermitian within {tol:.1e}: max |h - h†| entry is {deviation:.3e}")]
    NotHermitian { deviation: f64, tol: f64 },

    #[error("eigensolver did not converge after {sweeps} sweeps: off-diagonal magnitude {off_diagonal:.3e}")]
    EigenNotConverged { sweeps: usize, off_diagonal: f64 },

    #[error("eigenvalue {value:.3e} below -{tol:.1e}: matrix is not positive semidefinite")]
    NotPositiveSemidefinite { value: f64, tol: f64 },

    #[error("matrix not unitary: max |U†U - I| entry is {deviation:.3e}")]
    NotUnitary { deviation: f64 },

    #[error("{name} = {value} outside {range}")]
    OutOfRange {
        name: &'static str,
        value: f64,
        range: &'static str,
    },

    #[error("state vector norm {norm} deviates from 1 beyond tolerance")]
    NotNormalized { norm: f64 },

    #[error("trace {trace} deviates from 1 beyond tolerance")]
    TraceNotOne { trace: f64 },

    #[error("input states are identical; masking needs at least two distinct states")]
    IdenticalInputs,

    #[error("masking constraint violated: residual {residual:.3e} exceeds tolerance {tol:.1e}")]
    MaskingConstraint { residual: f64, tol: f64 },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
