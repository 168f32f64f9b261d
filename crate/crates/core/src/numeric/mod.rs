//! Evaluation of symbolic answers on concrete matrix blocks.

mod assignment;
mod backsolve;
mod eval;
mod harvest;
mod theorem2;
mod verify;

use crate::classify::VerdictKind;

pub use assignment::{BlockAssignment, Matrix, DEFAULT_TOLERANCE};
pub use backsolve::{backsolve_decoupled, Completion};
pub use eval::{checked_inverse, eval_polynomial, eval_with_scale, normalized, rcond, residual, MIN_RCOND};
pub use harvest::{harvest, Harvest, HARVEST_ATTEMPTS, HARVEST_RCOND};
pub use theorem2::{
    central_names_from_canonical, solve_theorem2, Theorem2Solution, CENTRAL_KNOWN_LABELS, CENTRAL_UNKNOWN_LABELS,
};
pub use verify::{assemble, verify_completion, CompletionResiduals};

#[derive(Debug, thiserror::Error)]
pub enum NumericError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("block `{name}` is not {expected}×{expected}")]
    Dimension { name: String, expected: usize },
    #[error("no value for `{0}`")]
    MissingSymbol(String),
    #[error("`{0}` is numerically singular")]
    Singular(String),
    #[error("the outer corner block has a singular Schur complement")]
    SingularOuter,
    #[error("{condition} fails with residual {residual:e}")]
    Incompatible { condition: String, residual: f64 },
    #[error("cannot solve `{0}` numerically; pass its unknown as presolved")]
    UnsupportedEquationForm(String),
    #[error("report is {0}, not decoupled")]
    NotDecoupled(VerdictKind),
    #[error("harvest failed: {0}")]
    Harvest(String),
}
