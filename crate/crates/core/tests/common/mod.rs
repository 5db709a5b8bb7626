#![allow(dead_code)]

use forgetsize_core::{Clause, Formula, Lit, Var};
use proptest::prelude::*;

/// A clause over the first `vars` variables with up to `width` literals;
/// tautological draws collapse to their first literal per variable.
pub fn clause(vars: u32, width: usize) -> impl Strategy<Value = Clause> {
    prop::collection::vec((0..vars, any::<bool>()), 0..=width).prop_map(|lits| {
        let mut seen = std::collections::BTreeMap::new();
        for (v, pos) in lits {
            seen.entry(v).or_insert(pos);
        }
        Clause::new(seen.into_iter().map(|(v, pos)| Lit::new(Var::new(v), pos))).unwrap()
    })
}

pub fn formula(vars: u32, clauses: usize, width: usize) -> impl Strategy<Value = Formula> {
    prop::collection::vec(clause(vars, width), 0..=clauses).prop_map(Formula::from_iter)
}

/// Formulas without the empty clause.
pub fn proper_formula(vars: u32, clauses: usize, width: usize) -> impl Strategy<Value = Formula> {
    formula(vars, clauses, width).prop_map(|f| f.into_iter().filter(|c| !c.is_empty()).collect())
}

pub fn var_subset(vars: u32) -> impl Strategy<Value = Vec<Var>> {
    prop::collection::vec(any::<bool>(), vars as usize)
        .prop_map(|bits| bits.into_iter().enumerate().filter(|(_, b)| *b).map(|(i, _)| Var::new(i as u32)).collect())
}

/// Every clause over the first `vars` variables, empty one excluded.
pub fn all_clauses(vars: u32) -> Vec<Clause> {
    let mut out = Vec::new();
    for code in 1..3usize.pow(vars) {
        let mut lits = Vec::new();
        let mut rest = code;
        for v in 0..vars {
            match rest % 3 {
                1 => lits.push(Var::new(v).pos()),
                2 => lits.push(Var::new(v).neg()),
                _ => {}
            }
            rest /= 3;
        }
        out.push(Clause::new(lits).unwrap());
    }
    out
}
