use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("unsupported signature Cl({p},{q}): need 1 <= p + q <= {max}")]
    SignatureOutOfRange { p: usize, q: usize, max: usize },

    #[error("signature mismatch: Cl({}, {}) vs Cl({}, {})", .left.0, .left.1, .right.0, .right.1)]
    SignatureMismatch {
        left: (usize, usize),
        right: (usize, usize),
    },

    #[error("expected {expected} coefficients, got {got}")]
    CoefficientCount { expected: usize, got: usize },

    #[error("blade mask {mask:#b} does not fit in {dim} generators")]
    BladeOutOfRange { mask: u32, dim: usize },

    #[error("grade {grade} out of range for dimension {dim}")]
    GradeOutOfRange { grade: usize, dim: usize },

    /// The operation is only defined for some dimensions.
    #[error("{op} is not available for n = {dim}: {reason}")]
    UnsupportedDimension {
        op: &'static str,
        dim: usize,
        reason: &'static str,
    },

    #[error("element is not invertible: Det = {det}")]
    SingularElement { det: String },

    /// `Q = 0` (or below tolerance): the Sylvester equation has no unique
    /// solution. Carries `Q` and the coefficients of `D` in mask order.
    #[error("singular Sylvester problem: Q = {q}")]
    SingularProblem { q: String, d: String },

    #[error("numerical degradation: non-scalar residue {residue:e} exceeds {bound:e}")]
    NumericalDegradation { residue: f64, bound: f64 },

    /// An identity that holds exactly in theory failed with exact scalars.
    /// Always a bug in this crate, never bad input.
    #[error("internal consistency check failed: {0}")]
    Consistency(String),

    #[error("residual check failed: max |AX - XB - C| = {residual}")]
    ResidualCheckFailed { residual: String },
}
