use thiserror::Error;

/// Errors surfaced by evaluators, transforms and the identity catalog.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("gamma pole at x = {0}")]
    GammaPole(f64),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("precision loss: {0}")]
    Precision(String),
    #[error("transform factor is zero or non-finite at order {0}")]
    BadFactor(usize),
    #[error("polynomial degree {0} exceeds the supported bound")]
    DegreeOverflow(usize),
    #[error("unknown identity id: {0}")]
    UnknownIdentity(String),
    #[error("unknown function name: {0}")]
    UnknownFunction(String),
    #[error("quadrature did not converge: {0}")]
    NonConverged(String),
}

pub type Result<T> = std::result::Result<T, Error>;
