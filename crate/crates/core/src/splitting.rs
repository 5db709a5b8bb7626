//! Splitting a clause `c1 ∨ c2` into `c1 ∨ x` and `c2 ∨ ¬x` on a fresh
//! variable `x`. The original formula expresses forgetting `x` from the
//! result, and the parts are usually superirredundant even when the clause
//! was not.

use alloc::collections::VecDeque;
use alloc::vec::Vec;

use crate::cnf::{Clause, Formula, Var, Vocabulary};
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::redundancy::{is_superredundant, superirredundant_clauses};
use crate::resolution::resolve_pair;

/// Name prefix of the variables introduced by [`make_superirredundant`].
pub const FRESH_PREFIX: &str = "_s";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitPlan {
    pub target: Clause,
    pub part1: Clause,
    pub part2: Clause,
    pub fresh: Var,
    pub result: Formula,
}

impl SplitPlan {
    /// Checks that the parts partition `target`, that `target` is in `f`
    /// and that `fresh` does not occur in `f`.
    pub fn new(f: &Formula, target: Clause, part1: Clause, part2: Clause, fresh: Var) -> Result<SplitPlan> {
        if !f.contains(&target) {
            return Err(Error::ClauseNotInFormula(target));
        }
        if f.mentions(fresh) {
            return Err(Error::FreshVariableCollision(fresh));
        }
        let disjoint = part1.iter().all(|l| !part2.contains(l));
        if !disjoint || part1.union(&part2).ok().as_ref() != Some(&target) {
            return Err(Error::InvalidPartition);
        }
        let mut result = f.without(&target);
        result.insert(part1.with(fresh.pos()).expect("fresh variable is new"));
        result.insert(part2.with(fresh.neg()).expect("fresh variable is new"));
        Ok(SplitPlan { target, part1, part2, fresh, result })
    }

    /// `part1 ∨ x`.
    pub fn first(&self) -> Clause {
        self.part1.with(self.fresh.pos()).expect("fresh variable is new")
    }

    /// `part2 ∨ ¬x`.
    pub fn second(&self) -> Clause {
        self.part2.with(self.fresh.neg()).expect("fresh variable is new")
    }
}

/// Applies `plan` to `f`.
pub fn split(f: &Formula, plan: &SplitPlan) -> Result<Formula> {
    let checked = SplitPlan::new(f, plan.target.clone(), plan.part1.clone(), plan.part2.clone(), plan.fresh)?;
    Ok(checked.result)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ViolationKind {
    /// The part is superredundant in `f ∪ {part}`.
    Superredundant,
    /// The part is already a clause of `f`, which makes its split copy
    /// subsumed.
    AlreadyPresent,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartViolation {
    pub part: Clause,
    pub kind: ViolationKind,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SplitSafetyReport {
    /// Parts the split cannot make superirredundant.
    pub violations: Vec<PartViolation>,
    /// Other clauses resolving with both parts; only these may lose their
    /// superirredundancy.
    pub collateral: Formula,
}

impl SplitSafetyReport {
    pub fn is_clear(&self) -> bool {
        self.violations.is_empty() && self.collateral.is_empty()
    }
}

pub fn analyze_split(f: &Formula, plan: &SplitPlan) -> Result<SplitSafetyReport> {
    split(f, plan)?;
    let mut violations = Vec::new();
    for part in [&plan.part1, &plan.part2] {
        let kind = if f.contains(part) {
            Some(ViolationKind::AlreadyPresent)
        } else if is_superredundant(&f.with(part.clone()), part)?.superredundant {
            Some(ViolationKind::Superredundant)
        } else {
            None
        };
        if let Some(kind) = kind {
            violations.push(PartViolation { part: part.clone(), kind });
        }
    }
    let collateral = f
        .iter()
        .filter(|c| **c != plan.target)
        .filter(|c| resolve_pair(c, &plan.part1).is_some() && resolve_pair(c, &plan.part2).is_some())
        .cloned()
        .collect();
    Ok(SplitSafetyReport { violations, collateral })
}

/// The two-part partitions of `c` up to swapping the parts; the first one
/// splits off the first literal.
pub fn partitions(c: &Clause) -> Vec<(Clause, Clause)> {
    let lits = c.lits();
    if lits.len() < 2 {
        return Vec::new();
    }
    let full = (1u64 << lits.len()) - 1;
    (1..full)
        .step_by(2)
        .map(|mask| {
            let pick = |inside: bool| {
                Clause::new(lits.iter().enumerate().filter(|(i, _)| (mask >> i & 1 == 1) == inside).map(|(_, l)| *l))
                    .expect("subset of a clause")
            };
            (pick(true), pick(false))
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Repair {
    pub formula: Formula,
    pub plans: Vec<SplitPlan>,
}

/// Splits `target`, then every clause the split turned superredundant, until
/// none is left. A partition is used only if it has no violations and both
/// its parts come out superirredundant.
pub fn make_superirredundant(
    f: &Formula,
    target: &Clause,
    vocab: &mut Vocabulary,
    limits: &Limits,
) -> Result<Repair> {
    if !f.contains(target) {
        return Err(Error::ClauseNotInFormula(target.clone()));
    }
    let mut current = f.clone();
    let mut plans: Vec<SplitPlan> = Vec::new();
    let mut queue = VecDeque::from([target.clone()]);
    while let Some(c) = queue.pop_front() {
        if !current.contains(&c) || !is_superredundant(&current, &c)?.superredundant {
            continue;
        }
        if plans.len() == limits.splits {
            return Err(Error::IterationCap(limits.splits));
        }
        let before = superirredundant_clauses(&current);
        let fresh = vocab.fresh(FRESH_PREFIX);
        let mut accepted = None;
        for (part1, part2) in partitions(&c) {
            let plan = SplitPlan::new(&current, c.clone(), part1, part2, fresh)?;
            if !analyze_split(&current, &plan)?.violations.is_empty() {
                continue;
            }
            let parts_fine = [plan.first(), plan.second()]
                .iter()
                .all(|p| is_superredundant(&plan.result, p).is_ok_and(|r| !r.superredundant));
            if parts_fine {
                accepted = Some(plan);
                break;
            }
        }
        let Some(plan) = accepted else {
            return Err(Error::RepairImpossible(c));
        };
        let after = superirredundant_clauses(&plan.result);
        queue.extend(before.iter().filter(|d| plan.result.contains(d) && !after.contains(d)).cloned());
        current = plan.result.clone();
        plans.push(plan);
    }
    Ok(Repair { formula: current, plans })
}
