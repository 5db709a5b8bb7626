//! Redundancy and superredundancy of clauses.
//!
//! A clause is superredundant when the resolution closure of its formula
//! without the clause still entails it. Three independent procedures decide
//! it: the definition itself, a single resolution step followed by an
//! entailment test (the default), and a search of the closure for a strict
//! subclause or a pair resolving exactly into the clause.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::cnf::{Clause, Formula, Lit, Var};
use crate::error::{Error, Result};
use crate::resolution::{resolution_closure, resolve_pair, resolve_with};
use crate::sat::{entails, is_satisfiable};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Method {
    Definition,
    FirstStep,
    OneTwo,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RedundancyReport {
    pub clause: Clause,
    pub redundant: bool,
    pub superredundant: bool,
    pub method: Method,
    /// For `OneTwo`, the derived strict subclause or the derived pair. For the
    /// other methods, the formula found to entail the clause.
    pub witness: Option<Formula>,
}

fn require_member(f: &Formula, c: &Clause) -> Result<()> {
    if f.contains(c) {
        Ok(())
    } else {
        Err(Error::ClauseNotInFormula(c.clone()))
    }
}

/// Whether `f \ {c}` entails `c`.
pub fn is_redundant(f: &Formula, c: &Clause) -> Result<bool> {
    require_member(f, c)?;
    Ok(entails(&f.without(c), c))
}

/// Superredundancy by one resolution step: `F \ {c} ∪ resolve(c, F) ⊨ c`.
pub fn is_superredundant(f: &Formula, c: &Clause) -> Result<RedundancyReport> {
    require_member(f, c)?;
    let rest = f.without(c);
    let redundant = entails(&rest, c);
    let stepped = rest.union(&resolve_with(c, f));
    let superredundant = redundant || entails(&stepped, c);
    Ok(RedundancyReport {
        clause: c.clone(),
        redundant,
        superredundant,
        method: Method::FirstStep,
        witness: superredundant.then_some(stepped),
    })
}

/// Superredundancy straight from the definition: `ResCn(F) \ {c} ⊨ c`.
pub fn superredundant_definition(f: &Formula, c: &Clause, cap: usize) -> Result<RedundancyReport> {
    require_member(f, c)?;
    let redundant = entails(&f.without(c), c);
    let rest = resolution_closure(f, cap)?.closure.without(c);
    let superredundant = entails(&rest, c);
    Ok(RedundancyReport {
        clause: c.clone(),
        redundant,
        superredundant,
        method: Method::Definition,
        witness: superredundant.then_some(rest),
    })
}

/// Superredundancy by searching the closure for a strict subclause of `c`, or
/// for two clauses `c1 ∨ a` and `c2 ∨ ¬a` with `c = c1 ∨ c2` and `a ∉ c`.
pub fn superredundant_one_two(f: &Formula, c: &Clause, cap: usize) -> Result<RedundancyReport> {
    require_member(f, c)?;
    let redundant = entails(&f.without(c), c);
    let closure = resolution_closure(f, cap)?.closure;
    let witness = one_two_witness(&closure, c);
    Ok(RedundancyReport {
        clause: c.clone(),
        redundant,
        superredundant: witness.is_some(),
        method: Method::OneTwo,
        witness,
    })
}

fn one_two_witness(closure: &Formula, c: &Clause) -> Option<Formula> {
    if let Some(sub) = closure.iter().find(|d| d.is_strict_subset_of(c)) {
        return Some(Formula::from_iter([sub.clone()]));
    }
    // a clause c1 ∨ a with c1 ⊆ c and a's variable outside c
    let outside = |d: &Clause| -> Option<Lit> {
        let mut extra = d.iter().filter(|l| !c.contains(*l));
        let a = extra.next()?;
        (extra.next().is_none() && !c.mentions(a.var())).then_some(a)
    };
    let halves: Vec<(&Clause, Lit)> = closure.iter().filter_map(|d| Some((d, outside(d)?))).collect();
    for (i, (d1, a1)) in halves.iter().enumerate() {
        for (d2, a2) in &halves[i + 1..] {
            if *a2 == !*a1 && resolve_pair(d1, d2).as_ref() == Some(c) {
                return Some(Formula::from_iter([(*d1).clone(), (*d2).clone()]));
            }
        }
    }
    None
}

/// Superredundancy check dispatching on `method`.
pub fn superredundant_by(f: &Formula, c: &Clause, method: Method, cap: usize) -> Result<RedundancyReport> {
    match method {
        Method::Definition => superredundant_definition(f, c, cap),
        Method::FirstStep => is_superredundant(f, c),
        Method::OneTwo => superredundant_one_two(f, c, cap),
    }
}

/// Superredundancy of the unit clause `l`: drop it, strip `¬l` from the other
/// clauses, and test whether the result entails `l`.
pub fn superredundant_unit(f: &Formula, l: Lit) -> Result<bool> {
    let unit = Clause::unit(l);
    if !f.contains(&unit) {
        return Err(Error::NotAUnitClause(unit));
    }
    let rest = f.without(&unit);
    if !f.occurs(!l) {
        return Ok(entails(&rest, &unit));
    }
    let transformed: Formula = rest
        .iter()
        .map(|d| if d.contains(!l) { d.without(!l) } else { d.clone() })
        .collect();
    Ok(entails(&transformed, &unit))
}

/// The clauses of `f` that are redundant.
pub fn redundant_clauses(f: &Formula) -> Formula {
    f.iter().filter(|c| entails(&f.without(c), c)).cloned().collect()
}

/// The clauses of `f` that are superredundant.
pub fn superredundant_clauses(f: &Formula) -> Formula {
    f.difference(&superirredundant_clauses(f))
}

/// The clauses of `f` that are superirredundant.
///
/// Before testing a clause, clauses holding a pure literal the clause lacks
/// are dropped, and the variable-disjoint remainder is dropped too when it is
/// satisfiable. Neither changes the verdict.
pub fn superirredundant_clauses(f: &Formula) -> Formula {
    f.iter()
        .filter(|c| {
            let local = relevant_part(f, c);
            let rest = local.without(c);
            let stepped = rest.union(&resolve_with(c, &local));
            !entails(&stepped, c)
        })
        .cloned()
        .collect()
}

fn relevant_part(f: &Formula, c: &Clause) -> Formula {
    let mut g = f.clone();
    loop {
        let pure: Vec<Lit> = g
            .vars()
            .into_iter()
            .flat_map(|v| [v.pos(), v.neg()])
            .filter(|l| !c.contains(*l) && g.occurs(*l) && !g.occurs(!*l))
            .collect();
        let before = g.len();
        for l in pure {
            for d in g.clauses_with_literal(l) {
                g.remove(&d);
            }
        }
        if g.len() == before {
            break;
        }
    }
    let component = connected_to(&g, c);
    let outside = g.difference(&component);
    if is_satisfiable(&outside) {
        component
    } else {
        g
    }
}

fn connected_to(f: &Formula, c: &Clause) -> Formula {
    let mut reached: BTreeSet<Var> = c.vars().collect();
    let mut part = Formula::from_iter([c.clone()]);
    loop {
        let mut grew = false;
        for d in f {
            if !part.contains(d) && d.vars().any(|v| reached.contains(&v)) {
                reached.extend(d.vars());
                part.insert(d.clone());
                grew = true;
            }
        }
        if !grew {
            return part;
        }
    }
}
