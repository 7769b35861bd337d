use num_complex::Complex64;
use thiserror::Error;

/// Errors raised by the numerical routines in this crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("unknown catalog id `{0}`")]
    UnknownId(String),

    #[error("missing parameter `{name}` for `{id}`")]
    MissingParameter { id: String, name: String },

    #[error("parameter `{name}` = {value} outside admissible range {range}")]
    ParameterRange {
        name: String,
        value: f64,
        range: String,
    },

    #[error("{op}: constant term must be {expected}, found {found}")]
    ConstantTerm {
        op: &'static str,
        expected: &'static str,
        found: Complex64,
    },

    #[error("division by a series with zero constant term")]
    Pole,

    #[error("{what} did not converge (order {order})")]
    NonConvergence { what: String, order: usize },

    #[error("radius {r} outside the admissible domain (0, {limit}]")]
    Domain { r: f64, limit: f64 },

    #[error("evaluation at {z} touches a pole or branch cut")]
    BranchContact { z: Complex64 },

    #[error("no sign change of the residual in (0, {hi}]")]
    NoRoot { hi: f64 },

    #[error("hypergeometric parameter c = {0} is a non-positive integer")]
    InvalidHypergeometric(f64),

    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
