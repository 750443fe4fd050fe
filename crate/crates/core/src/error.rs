use thiserror::Error;

/// Errors raised by the algebra kernels.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("denominator vanishes at the evaluation point")]
    Pole,
    #[error("parameter `{0}` is not assigned")]
    Unassigned(String),
    #[error("matrix is singular over the rational function field")]
    SingularMatrix,
    #[error("matrix dimensions do not match: {0}")]
    Shape(String),
    #[error("operands live in algebras of different size ({0} vs {1})")]
    SizeMismatch(usize, usize),
    #[error("element is not homogeneous")]
    NotHomogeneous,
    #[error("mode index k = 0 is not allowed here")]
    ZeroMode,
    #[error("sequence does not follow the cyclic template: {0}")]
    BadSequence(String),
    #[error("expected at least {needed} values, got {got}")]
    Arity { needed: usize, got: usize },
    #[error("generator {0} has no image under this morphism")]
    IllegalGenerator(String),
}

pub type Result<T> = std::result::Result<T, Error>;
