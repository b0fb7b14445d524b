use thiserror::Error;

use crate::exactalg::Variable;

/// Errors raised anywhere in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable not in order: {0}")]
    VariableNotInOrder(Variable),
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("missing assignment for variable {0}")]
    MissingAssignment(Variable),
    #[error("invalid variable: {0}")]
    InvalidVariable(String),
    #[error("invalid monomial order: {0}")]
    InvalidOrder(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("S-pair budget of {limit} reductions exceeded")]
    BudgetExceeded { limit: usize },
    #[error("invalid ideal: {0}")]
    InvalidIdeal(String),
    #[error("empty poset")]
    EmptyPoset,
    #[error("not a lattice: {0}")]
    NotALattice(String),
    #[error("not a perfect compatible sublattice: {0}")]
    NotPerfect(String),
    #[error("not a compatible sublattice: {0}")]
    NotCompatible(String),
    #[error("not an interval graph: {0}")]
    NotInterval(String),
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("invalid clique interval system: {0}")]
    InvalidSystem(String),
    #[error("invalid index tuple: {0}")]
    InvalidIndices(String),
    #[error("graph is not compatible with the elimination order: {0}")]
    NotEliminationCompatible(String),
    #[error("not a maximal allowed arrangement: {0}")]
    NotMaximalArrangement(String),
    #[error("arrangement is not allowed: {0}")]
    NotAllowed(String),
    #[error("arrangement is already maximal")]
    AlreadyMaximal,
    #[error("invalid tree: {0}")]
    InvalidTree(String),
    #[error("n = {n} is outside the supported range {range}")]
    OutOfBudget { n: usize, range: &'static str },
}

pub type Result<T> = std::result::Result<T, Error>;
