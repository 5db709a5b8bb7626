//! Forgetting variables.
//!
//! A formula over the kept variables expresses forgetting the others from
//! `A` when it has exactly the consequences of `A` over the kept variables.
//! Equivalently, for every complete set of literals `S` over the kept
//! variables, `S ∪ A` and `S ∪ B` are equisatisfiable; the checks here
//! enumerate those sets.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::cnf::{Formula, Lit, LiteralSet, Var};
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::minimization::{minimize, MinimizationResult};
use crate::resolution::{prime_implicates, resolve_sets};
use crate::sat::Solver;

/// A formula and the variables to keep; every other variable is forgotten.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForgetSpec {
    pub formula: Formula,
    pub keep: BTreeSet<Var>,
}

impl ForgetSpec {
    pub fn keeping(formula: Formula, keep: impl IntoIterator<Item = Var>) -> ForgetSpec {
        ForgetSpec { formula, keep: keep.into_iter().collect() }
    }

    pub fn forgetting(formula: Formula, forget: impl IntoIterator<Item = Var>) -> ForgetSpec {
        let forget: BTreeSet<Var> = forget.into_iter().collect();
        let keep = formula.vars().into_iter().filter(|v| !forget.contains(v)).collect();
        ForgetSpec { formula, keep }
    }

    /// Variables of the formula that are not kept, ascending.
    pub fn forgotten(&self) -> BTreeSet<Var> {
        self.formula.vars().into_iter().filter(|v| !self.keep.contains(v)).collect()
    }
}

/// Resolves `x` out of `f`: the clauses mentioning `x` are replaced by all
/// their resolvents on `x`.
pub fn forget_one(f: &Formula, x: Var) -> Formula {
    let pos = f.clauses_with_literal(x.pos());
    let neg = f.clauses_with_literal(x.neg());
    let mut out: Formula = f.iter().filter(|c| !c.mentions(x)).cloned().collect();
    out.extend(resolve_sets(&pos, &neg));
    out
}

/// The order in which [`forget_all_ordered`] eliminates variables.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ForgetOrder {
    #[default]
    Ascending,
    /// Next, the variable whose elimination yields the smallest formula;
    /// ties go to the lowest variable.
    Greedy,
}

/// Forgets every non-kept variable one at a time, in ascending order.
pub fn forget_all(spec: &ForgetSpec, limits: &Limits) -> Result<Formula> {
    forget_all_ordered(spec, ForgetOrder::Ascending, limits)
}

pub fn forget_all_ordered(spec: &ForgetSpec, order: ForgetOrder, limits: &Limits) -> Result<Formula> {
    let mut pending = spec.forgotten();
    let mut f = spec.formula.clone();
    while let Some(&first) = pending.iter().next() {
        let (x, next) = match order {
            ForgetOrder::Ascending => (first, forget_one(&f, first)),
            ForgetOrder::Greedy => pending
                .iter()
                .map(|&x| (x, forget_one(&f, x)))
                .min_by_key(|(_, g)| g.size())
                .expect("pending is not empty"),
        };
        if next.len() > limits.closure {
            return Err(Error::ResourceLimit { stage: "forget", limit: limits.closure });
        }
        pending.remove(&x);
        f = next;
    }
    Ok(f)
}

/// The prime implicates of the formula that mention kept variables only.
pub fn forget_by_prime_implicates(spec: &ForgetSpec, limits: &Limits) -> Result<Formula> {
    let prime = prime_implicates(&spec.formula, limits.closure)?;
    Ok(prime.iter().filter(|c| c.vars().all(|v| spec.keep.contains(&v))).cloned().collect())
}

/// Consistency of `f` with every complete literal set over `vars`. Bit `i`
/// of the mask set means `vars[i]` is true.
fn consistency_table(f: &Formula, vars: &[Var]) -> Vec<bool> {
    let solver = Solver::new(f);
    let mut lits = Vec::with_capacity(vars.len());
    (0..1usize << vars.len())
        .map(|mask| {
            lits.clear();
            lits.extend(vars.iter().enumerate().map(|(i, v)| Lit::new(*v, mask >> i & 1 == 1)));
            solver.is_consistent(&lits)
        })
        .collect()
}

fn relevant_keep(spec: &ForgetSpec, other: Option<&Formula>, limits: &Limits) -> Result<Vec<Var>> {
    let mut vars = spec.formula.vars();
    if let Some(g) = other {
        vars.extend(g.vars());
    }
    let vars: Vec<Var> = vars.into_iter().filter(|v| spec.keep.contains(v)).collect();
    if vars.len() > limits.enumeration {
        return Err(Error::EnumerationCap { vars: vars.len(), cap: limits.enumeration });
    }
    Ok(vars)
}

/// Whether `candidate` expresses forgetting all but the kept variables from
/// the formula of `spec`.
pub fn expresses_forgetting(candidate: &Formula, spec: &ForgetSpec, limits: &Limits) -> Result<bool> {
    if let Some(v) = candidate.vars().into_iter().find(|v| !spec.keep.contains(v)) {
        return Err(Error::VariableEscape(v));
    }
    let vars = relevant_keep(spec, Some(candidate), limits)?;
    Ok(consistency_table(&spec.formula, &vars) == consistency_table(candidate, &vars))
}

/// A literal present in every formula that expresses the forgetting.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NecessaryLiteral {
    pub literal: Lit,
    /// A complete literal set over the kept variables of the formula,
    /// containing `literal`, consistent with the formula, and no longer
    /// consistent once `literal` is flipped.
    pub witness: LiteralSet,
}

/// Literals found necessary by flipping one literal of a consistent complete
/// literal set into an inconsistent one. The condition is sufficient only:
/// a literal missing here may still be necessary.
pub fn necessary_literals(spec: &ForgetSpec, limits: &Limits) -> Result<Vec<NecessaryLiteral>> {
    let vars = relevant_keep(spec, None, limits)?;
    let table = consistency_table(&spec.formula, &vars);
    let set_of = |mask: usize| {
        LiteralSet::new(vars.iter().enumerate().map(|(i, v)| Lit::new(*v, mask >> i & 1 == 1)))
            .expect("one literal per variable")
    };
    let mut out = Vec::new();
    for (i, &var) in vars.iter().enumerate() {
        for positive in [true, false] {
            let found = (0..table.len()).find(|&mask| {
                (mask >> i & 1 == 1) == positive && table[mask] && !table[mask ^ 1 << i]
            });
            if let Some(mask) = found {
                out.push(NecessaryLiteral { literal: Lit::new(var, positive), witness: set_of(mask) });
            }
        }
    }
    Ok(out)
}

/// Whether every literal of `lits` occurs in `f`.
pub fn contains_literals(f: &Formula, lits: impl IntoIterator<Item = Lit>) -> bool {
    lits.into_iter().all(|l| f.occurs(l))
}

/// The minimum size of a formula expressing the forgetting, with all
/// formulas of that size.
pub fn min_forget_size(spec: &ForgetSpec, limits: &Limits) -> Result<MinimizationResult> {
    minimize(&forget_all(spec, limits)?, limits)
}
