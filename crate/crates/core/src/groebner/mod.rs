//! Desk-scale Gröbner oracle: reduced bases, ideal dimension, projective
//! closure, and evasion / finiteness verdicts.

mod buchberger;
mod oracle;
mod order;
mod variety;

use thiserror::Error;

use crate::poly::PolyError;

pub use buchberger::{buchberger, buchberger_with_budget, ideal_dimension, GroebnerBasis, DEFAULT_PAIR_BUDGET};
pub use oracle::{
    evades, evades_with_budget, finiteness_check, finiteness_check_with_budget, intersection_dim, projection_is_finite,
    projective_closure, strongly_evades, strongly_evades_with_budget,
};
pub use order::MonomialOrder;
pub use variety::{parse_variety, Ambient, Component, VarietySpec};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroebnerError {
    #[error("pair budget of {budget} S-pairs exceeded")]
    BudgetExceeded { budget: usize },
    #[error("polynomial has {found} variables, expected {expected}")]
    NumVarsMismatch { expected: usize, found: usize },
    #[error("no generators given")]
    NoGenerators,
    #[error("invalid variety: {0}")]
    InvalidVariety(String),
    #[error("invalid linear map: {0}")]
    InvalidMap(String),
    #[error("line {line}: {source}")]
    Parse { line: usize, source: PolyError },
}
