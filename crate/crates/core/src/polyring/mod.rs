//! Sparse multivariate polynomials over the coefficient field.

mod linalg;
mod map;
mod monomial;
mod order;
mod parse;
mod polynomial;

pub use linalg::{linear_rank_extend, Matrix};
pub use map::{substitute, CoefficientAction, VariableMap};
pub use monomial::Monomial;
pub use order::MonomialOrder;
pub use parse::parse_polynomial;
pub use polynomial::{Polynomial, VarContext};


use thiserror::Error;

use crate::scalars::ScalarError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("polynomials belong to different rings")]
    ContextMismatch,
    #[error("invalid variable name `{0}`")]
    BadVariableName(String),
    #[error("duplicate variable `{0}`")]
    DuplicateVariable(String),
    #[error("map needs {expected} images, got {found}")]
    ImageCount { expected: usize, found: usize },
    #[error("image of {variable} has a nonzero constant term")]
    ImageNotInMaximalIdeal { variable: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("unknown variable `{name}` at {position}")]
    UnknownVariable { position: usize, name: String },
    #[error("bad coefficient at {position}: {source}")]
    Coefficient { position: usize, source: ScalarError },
}
