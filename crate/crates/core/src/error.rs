use thiserror::Error;

/// Errors shared by every layer of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("the zero polynomial is not allowed here")]
    ZeroPolynomial,
    #[error("polynomial vanishes at interval endpoint {0}")]
    EndpointIsRoot(String),
    #[error("degree {got} exceeds the bound {bound}")]
    DegreeTooHigh { got: usize, bound: usize },
    #[error("value requested inside an unknown region ({0})")]
    UnknownRegion(String),
    #[error("family has unknown segments; this operation needs a complete family")]
    IncompleteFamily,
    #[error("alternating sum differs across intervals: {0}")]
    EulerMismatch(String),
    #[error("b = {b} shares a factor with g! (g = {g})")]
    NotCoprime { b: String, g: usize },
    #[error("divisibility failure: {0}")]
    DivisibilityFailure(String),
    #[error("degree-g coefficients of the two transform polynomials differ at i = {i}")]
    LeadingMismatch { i: usize },
    #[error("transformed segment would exceed degree {bound}")]
    DegreeOverflow { bound: usize },
    #[error("polynomial has a non-real root")]
    NotRealRooted,
    #[error("sign pattern violated near x = {at}: value {value}")]
    SignViolation { at: String, value: String },
    #[error("invalid model parameters: {0}")]
    BadParameters(String),
    #[error("beta = {0} exceeds 1")]
    InvalidBeta(String),
    #[error("h equals beta; the threshold map has a pole")]
    DegenerateDenominator,
    #[error("ideal-of-point function has support past 1: beta = {0}")]
    BetaBoundViolation(String),
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("model validation failed: {0}")]
    Validation(String),
    #[error("{0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
