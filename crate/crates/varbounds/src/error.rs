//! Error type shared across the crate.

use thiserror::Error;

/// Errors produced by validation, evaluation and I/O routines.
#[derive(Debug, Error)]
pub enum Error {
    /// The matrix deviates from `M = M†` by more than the Hermiticity tolerance.
    #[error("matrix is not Hermitian (max deviation {max_dev:.3e})")]
    NotHermitian { max_dev: f64 },

    /// The trace of a candidate density matrix is not 1.
    #[error("matrix trace {trace:.12e} is not 1 within tolerance")]
    NotUnitTrace { trace: f64 },

    /// A candidate density matrix has an eigenvalue below the PSD tolerance.
    #[error("matrix is not positive semidefinite (min eigenvalue {min_eigenvalue:.3e})")]
    NotPsd { min_eigenvalue: f64 },

    /// The iterative eigensolver did not converge.
    #[error("Hermitian eigendecomposition failed to converge")]
    ConvergenceFailure,

    /// Operands have incompatible dimensions.
    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    /// A state vector is not normalized to unit 2-norm.
    #[error("vector is not normalized (norm {norm})")]
    NotNormalized { norm: f64 },

    /// An observable index is outside the set.
    #[error("index {index} out of range for {len} observables")]
    IndexOutOfRange { index: usize, len: usize },

    /// Coefficient and index lists disagree in length.
    #[error("coefficient list has {coeffs} entries but index list has {indices}")]
    LengthMismatch { coeffs: usize, indices: usize },

    /// An observable set needs at least two members.
    #[error("observable set needs at least 2 members, got {n}")]
    TooFewObservables { n: usize },

    /// The weight of the one-parameter bound family must be non-negative.
    #[error("alpha must be non-negative, got {0}")]
    NegativeAlpha(f64),

    /// The weights of the two-parameter bound family must be positive.
    #[error("parameters must be positive, got alpha = {alpha}, beta = {beta}")]
    NonPositiveParameter { alpha: f64, beta: f64 },

    /// Exhaustive permutation search is capped.
    #[error("permutation search supports at most {max} observables, got {n}")]
    TooManyObservables { n: usize, max: usize },

    /// A search grid violates its invariants.
    #[error("invalid grid: {reason}")]
    InvalidGrid { reason: &'static str },

    /// The isotropic-family mixing parameter is outside [0, 1].
    #[error("mixing parameter must lie in [0, 1], got {0}")]
    InvalidTheta(f64),

    /// A Bloch vector must fit inside the unit ball.
    #[error("Bloch vector norm {norm} exceeds 1")]
    BlochVectorTooLong { norm: f64 },

    /// Random instance generation is restricted to small sizes.
    #[error("dim {dim} or observable count {n_obs} outside supported range")]
    OutOfSupportedRange { dim: usize, n_obs: usize },

    /// Worked-example families are numbered 1 to 3.
    #[error("unknown example id {0}")]
    UnknownExample(u8),

    /// A computed variance came out negative beyond rounding tolerance,
    /// which indicates a logic bug rather than floating-point noise.
    #[error("internal consistency: variance {0:.3e} below -1e-12")]
    NegativeVariance(f64),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
