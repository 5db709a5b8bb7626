//! Reasoning about the size of propositional CNF formulas after forgetting
//! variables.
//!
//! The crate is `no_std` (it needs `alloc`). Everything here is pure and
//! deterministic: formulas are ordered sets of clauses, every search visits
//! candidates in canonical order, and no global state is kept.
//!
//! Module map:
//!
//! - [`cnf`]: variables, literals, clauses, formulas, size and substitution.
//! - [`syntax`]: the compact clause-token grammar (`da`, `c->d`, `a=bc`) and
//!   its printer.
//! - [`sat`]: DPLL satisfiability with a Horn fast path; entailment and
//!   equivalence.
//! - [`resolution`]: resolution steps, closure and prime implicates.
//! - [`redundancy`]: redundancy and superredundancy checks.
//! - [`forgetting`]: resolve-out forgetting, the express-forgetting check,
//!   necessary literals and minimum size after forgetting.
//! - [`minimization`]: exact minimum-size equivalent formulas.
//! - [`splitting`]: clause splitting on fresh variables.
//! - [`reductions`]: the four hardness-reduction constructions and their
//!   desk-scale verification.

#![no_std]

extern crate alloc;

pub mod cnf;
pub mod error;
pub mod forgetting;
pub mod limits;
pub mod minimization;
pub mod redundancy;
pub mod reductions;
pub mod resolution;
pub mod sat;
pub mod splitting;
pub mod syntax;

pub use cnf::{Clause, Formula, Lit, LiteralSet, Var, Vocabulary};
pub use error::{Error, Result};
pub use limits::Limits;
