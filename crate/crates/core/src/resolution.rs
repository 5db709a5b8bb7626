//! Resolution steps, resolution closure and prime implicates.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use crate::cnf::{Clause, Formula, Lit};
use crate::error::{Error, Result};

/// Resolves two clauses.
///
/// Two clauses clashing on exactly one variable have one resolvent; clashing
/// on two or more they only resolve into tautologies, which do not count.
/// So the result is a set of at most one clause.
pub fn resolve_pair(c1: &Clause, c2: &Clause) -> Option<Clause> {
    let mut clashes = c1.clashes(c2);
    let var = clashes.next()?;
    if clashes.next().is_some() {
        return None;
    }
    let merged = c1
        .iter()
        .chain(c2.iter())
        .filter(|l| l.var() != var);
    Some(Clause::new(merged).expect("single clash leaves no complementary pair"))
}

/// All resolvents of one clause of `a` with one clause of `b`.
pub fn resolve_sets(a: &Formula, b: &Formula) -> Formula {
    let mut out = Formula::new();
    for c1 in a {
        for c2 in b {
            if let Some(r) = resolve_pair(c1, c2) {
                out.insert(r);
            }
        }
    }
    out
}

/// All resolvents of `c` with the clauses of `f`.
pub fn resolve_with(c: &Clause, f: &Formula) -> Formula {
    f.iter().filter_map(|d| resolve_pair(c, d)).collect()
}

/// The result of saturating a formula under resolution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosureResult {
    pub closure: Formula,
    /// The ⊆-minimal clauses of the closure.
    pub prime: Formula,
    /// Number of rounds that produced new clauses.
    pub rounds: usize,
}

/// Saturates `f` under resolution, failing once more than `cap` clauses
/// have been generated.
pub fn resolution_closure(f: &Formula, cap: usize) -> Result<ClosureResult> {
    let mut all: Vec<Clause> = f.iter().cloned().collect();
    let mut seen: BTreeSet<Clause> = f.clauses().clone();
    if seen.len() > cap {
        return Err(Error::ResourceLimit { stage: "resolution closure", limit: cap });
    }
    let mut generation_start = 0;
    let mut rounds = 0;
    loop {
        let end = all.len();
        let mut fresh = Vec::new();
        for i in generation_start..end {
            for j in 0..i {
                if let Some(r) = resolve_pair(&all[i], &all[j]) {
                    if !seen.contains(&r) {
                        seen.insert(r.clone());
                        fresh.push(r);
                        if seen.len() > cap {
                            return Err(Error::ResourceLimit { stage: "resolution closure", limit: cap });
                        }
                    }
                }
            }
        }
        if fresh.is_empty() {
            break;
        }
        rounds += 1;
        generation_start = end;
        all.extend(fresh);
    }
    let closure: Formula = seen.into_iter().collect();
    let prime = minimal_clauses(&closure);
    Ok(ClosureResult { closure, prime, rounds })
}

/// The prime implicates of `f`: the ⊆-minimal clauses of its closure.
///
/// Saturates under resolution while discarding subsumed clauses, which
/// yields the same set without building the whole closure. `cap` bounds the
/// number of clauses kept at any time.
pub fn prime_implicates(f: &Formula, cap: usize) -> Result<Formula> {
    let mut kept: Vec<Clause> = minimal_clauses(f).into_iter().collect();
    let mut frontier = kept.clone();
    while !frontier.is_empty() {
        let mut fresh = Formula::new();
        for c in &frontier {
            if !kept.contains(c) {
                continue;
            }
            for d in &kept {
                let Some(r) = resolve_pair(c, d) else { continue };
                if !kept.iter().chain(fresh.iter()).any(|k| k.is_subset_of(&r)) {
                    fresh.insert(r);
                }
            }
        }
        let fresh = minimal_clauses(&fresh);
        kept.retain(|k| !fresh.iter().any(|r| r.is_subset_of(k)));
        kept.extend(fresh.iter().cloned());
        if kept.len() > cap {
            return Err(Error::ResourceLimit { stage: "prime implicates", limit: cap });
        }
        frontier = fresh.into_iter().collect();
    }
    Ok(kept.into_iter().collect())
}

/// The clauses of `f` that strictly contain no other clause of `f`.
pub fn minimal_clauses(f: &Formula) -> Formula {
    let mut by_length: Vec<&Clause> = f.iter().collect();
    by_length.sort_by_key(|c| c.len());
    // kept clauses indexed by their first literal: a subset of c must start
    // with one of c's literals
    let mut index: BTreeMap<Option<Lit>, Vec<&Clause>> = BTreeMap::new();
    let mut out = Formula::new();
    for c in by_length {
        let subsumed = index.get(&None).is_some_and(|v| !v.is_empty())
            || c.iter().any(|l| {
                index
                    .get(&Some(l))
                    .is_some_and(|cands| cands.iter().any(|d| d.is_subset_of(c)))
            });
        if !subsumed {
            index.entry(c.lits().first().copied()).or_default().push(c);
            out.insert(c.clone());
        }
    }
    out
}
