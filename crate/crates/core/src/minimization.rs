//! Minimum-size equivalent formulas.
//!
//! A minimum-size formula equivalent to `f` consists of prime implicates of
//! `f` only, and contains every prime implicate that is superirredundant
//! among them. The search is a branch and bound over the remaining prime
//! implicates, taken by increasing length.

use alloc::vec::Vec;

use crate::cnf::{Clause, Formula};
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::redundancy::superirredundant_clauses;
use crate::resolution::prime_implicates;
use crate::sat::Solver;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub nodes: usize,
    /// Optional prime implicates the search chose from.
    pub candidates: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinimizationResult {
    pub min_size: usize,
    /// All minimum-size equivalent formulas, in canonical order.
    pub witnesses: Vec<Formula>,
    /// The superirredundant clauses of the input.
    pub forced_clauses: Formula,
    pub stats: SearchStats,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MinimizeOptions {
    /// Collect every minimum-size formula rather than the first found.
    pub exhaustive: bool,
    /// Only look for formulas of at most this size.
    pub ceiling: Option<usize>,
}

impl Default for MinimizeOptions {
    fn default() -> Self {
        MinimizeOptions { exhaustive: true, ceiling: None }
    }
}

/// All minimum-size formulas equivalent to `f`.
pub fn minimize(f: &Formula, limits: &Limits) -> Result<MinimizationResult> {
    Ok(minimize_with(f, MinimizeOptions::default(), limits)?.expect("no ceiling was set"))
}

/// Like [`minimize`]; `None` when no equivalent formula fits the ceiling.
pub fn minimize_with(f: &Formula, options: MinimizeOptions, limits: &Limits) -> Result<Option<MinimizationResult>> {
    let prime = prime_implicates(f, limits.closure)?;
    let forced = superirredundant_clauses(&prime);
    let mut pool: Vec<Clause> = prime.difference(&forced).into_iter().collect();
    pool.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    if pool.len() > limits.pool {
        return Err(Error::SearchLimit {
            pool: pool.len(),
            cap: limits.pool,
            lower: forced.size(),
            upper: f.size(),
        });
    }
    let mut search = Search {
        base: forced.clone(),
        pool: &pool,
        options,
        chosen: Vec::new(),
        best: None,
        witnesses: Vec::new(),
        nodes: 0,
    };
    search.descend(0, forced.size());
    let Search { best, mut witnesses, nodes, .. } = search;
    let Some(min_size) = best else {
        return Ok(None);
    };
    witnesses.sort();
    Ok(Some(MinimizationResult {
        min_size,
        witnesses,
        forced_clauses: superirredundant_clauses(f),
        stats: SearchStats { nodes, candidates: pool.len() },
    }))
}

struct Search<'a> {
    base: Formula,
    pool: &'a [Clause],
    options: MinimizeOptions,
    chosen: Vec<usize>,
    best: Option<usize>,
    witnesses: Vec<Formula>,
    nodes: usize,
}

impl Search<'_> {
    fn allows(&self, size: usize) -> bool {
        match (self.best, self.options.ceiling) {
            (Some(b), _) if self.options.exhaustive => size <= b,
            (Some(b), _) => size < b,
            (None, Some(c)) => size <= c,
            (None, None) => true,
        }
    }

    fn current(&self) -> Formula {
        let mut g = self.base.clone();
        g.extend(self.chosen.iter().map(|&i| self.pool[i].clone()));
        g
    }

    fn descend(&mut self, idx: usize, size: usize) {
        self.nodes += 1;
        if !self.allows(size) {
            return;
        }
        let current = self.current();
        let solver = Solver::new(&current);
        let covered = self
            .pool
            .iter()
            .enumerate()
            .all(|(i, c)| self.chosen.contains(&i) || solver.entails(c));
        if covered {
            self.record(current, size);
            return;
        }
        if idx == self.pool.len() || !self.allows(size + self.pool[idx].len()) {
            return;
        }
        self.chosen.push(idx);
        self.descend(idx + 1, size + self.pool[idx].len());
        self.chosen.pop();

        let mut without = current;
        without.extend(self.pool[idx + 1..].iter().cloned());
        if Solver::new(&without).entails(&self.pool[idx]) {
            self.descend(idx + 1, size);
        }
    }

    fn record(&mut self, g: Formula, size: usize) {
        if self.best != Some(size) {
            self.witnesses.clear();
        }
        self.best = Some(size);
        self.witnesses.push(g);
    }
}

/// Whether some formula of size at most `bound` is equivalent to `f`.
pub fn has_equivalent_within(f: &Formula, bound: usize, limits: &Limits) -> Result<bool> {
    let options = MinimizeOptions { exhaustive: false, ceiling: Some(bound) };
    Ok(minimize_with(f, options, limits)?.is_some())
}

/// Whether no smaller formula is equivalent to `f`.
pub fn is_minimal(f: &Formula, limits: &Limits) -> Result<bool> {
    if superirredundant_clauses(f).len() == f.len() {
        return Ok(true);
    }
    Ok(minimize(f, limits)?.min_size == f.size())
}
