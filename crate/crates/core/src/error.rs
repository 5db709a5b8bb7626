use alloc::string::String;

use crate::cnf::{Clause, Var};

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("clause contains a variable with both polarities")]
    Tautology,

    #[error("literal set is inconsistent")]
    InconsistentLiterals,

    #[error("syntax error at offset {offset} in `{token}`: {message}")]
    Syntax {
        token: String,
        offset: usize,
        message: &'static str,
    },

    #[error("clause is not in the formula")]
    ClauseNotInFormula(Clause),

    #[error("clause is not a unit clause")]
    NotAUnitClause(Clause),

    #[error("{stage}: resource limit of {limit} exceeded")]
    ResourceLimit { stage: &'static str, limit: usize },

    /// The minimization search pool exceeded its cap; the bracket bounds the
    /// minimum size.
    #[error("minimization pool of {pool} optional clauses exceeds cap {cap} (minimum size in [{lower}, {upper}])")]
    SearchLimit {
        pool: usize,
        cap: usize,
        lower: usize,
        upper: usize,
    },

    #[error("candidate mentions forgotten variable {0:?}")]
    VariableEscape(Var),

    #[error("enumeration over {vars} variables exceeds cap {cap}")]
    EnumerationCap { vars: usize, cap: usize },

    #[error("fresh variable {0:?} already occurs in the formula")]
    FreshVariableCollision(Var),

    #[error("split parts do not partition the target clause")]
    InvalidPartition,

    #[error("no partition of the clause can be made superirredundant")]
    RepairImpossible(Clause),

    #[error("repair did not converge within {0} splits")]
    IterationCap(usize),

    #[error("invalid quantified formula: {0}")]
    InvalidQbf(&'static str),
}
