//! Variables, literals, clauses and CNF formulas.
//!
//! Clauses keep their literals sorted by variable then polarity, and
//! formulas are ordered sets of clauses, so equality, hashing and iteration
//! order are all canonical. Tautological clauses cannot be constructed.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Not;

use crate::error::{Error, Result};

/// An interned propositional variable.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Var(u32);

impl Var {
    pub const fn new(index: u32) -> Var {
        Var(index)
    }

    pub const fn index(self) -> u32 {
        self.0
    }

    pub fn pos(self) -> Lit {
        Lit::new(self, true)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn neg(self) -> Lit {
        Lit::new(self, false)
    }
}

impl fmt::Debug for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}", self.0)
    }
}

/// A variable with a polarity.
///
/// Encoded as `2 * var + negative`, so the derived order sorts by variable
/// first and puts the positive literal before the negative one.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Lit(u32);

impl Lit {
    pub const fn new(var: Var, positive: bool) -> Lit {
        Lit(var.0 << 1 | (!positive) as u32)
    }

    pub const fn var(self) -> Var {
        Var(self.0 >> 1)
    }

    pub const fn is_positive(self) -> bool {
        self.0 & 1 == 0
    }

    pub const fn negate(self) -> Lit {
        Lit(self.0 ^ 1)
    }

    /// Truth value of the literal under a value for its variable.
    pub const fn eval(self, value: bool) -> bool {
        value == self.is_positive()
    }
}

impl Not for Lit {
    type Output = Lit;

    fn not(self) -> Lit {
        self.negate()
    }
}

impl fmt::Debug for Lit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_positive() {
            write!(f, "{:?}", self.var())
        } else {
            write!(f, "-{:?}", self.var())
        }
    }
}

/// A non-tautological disjunction of literals with set semantics.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Clause(Vec<Lit>);

impl Clause {
    /// Builds a clause, dropping duplicate literals. Fails on tautologies.
    pub fn new<I: IntoIterator<Item = Lit>>(lits: I) -> Result<Clause> {
        let mut lits: Vec<Lit> = lits.into_iter().collect();
        lits.sort_unstable();
        lits.dedup();
        if lits.windows(2).any(|w| w[0].var() == w[1].var()) {
            return Err(Error::Tautology);
        }
        Ok(Clause(lits))
    }

    /// The empty clause.
    pub const fn empty() -> Clause {
        Clause(Vec::new())
    }

    pub fn unit(lit: Lit) -> Clause {
        Clause(alloc::vec![lit])
    }

    pub fn lits(&self) -> &[Lit] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = Lit> + '_ {
        self.0.iter().copied()
    }

    /// Number of literal occurrences.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.0.len() == 1
    }

    pub fn contains(&self, lit: Lit) -> bool {
        self.0.binary_search(&lit).is_ok()
    }

    pub fn mentions(&self, var: Var) -> bool {
        self.contains(var.pos()) || self.contains(var.neg())
    }

    pub fn vars(&self) -> impl Iterator<Item = Var> + '_ {
        self.0.iter().map(|l| l.var())
    }

    /// At most one positive literal.
    pub fn is_horn(&self) -> bool {
        self.0.iter().filter(|l| l.is_positive()).count() <= 1
    }

    pub fn is_subset_of(&self, other: &Clause) -> bool {
        if self.len() > other.len() {
            return false;
        }
        let mut rest = other.0.iter();
        'outer: for lit in &self.0 {
            for candidate in rest.by_ref() {
                if candidate == lit {
                    continue 'outer;
                }
                if candidate > lit {
                    return false;
                }
            }
            return false;
        }
        true
    }

    pub fn is_strict_subset_of(&self, other: &Clause) -> bool {
        self.len() < other.len() && self.is_subset_of(other)
    }

    /// The clause without `lit` (unchanged if absent).
    pub fn without(&self, lit: Lit) -> Clause {
        Clause(self.0.iter().copied().filter(|&l| l != lit).collect())
    }

    /// The clause extended with `lit`; fails when `!lit` is present.
    pub fn with(&self, lit: Lit) -> Result<Clause> {
        Clause::new(self.0.iter().copied().chain(core::iter::once(lit)))
    }

    /// Disjunction of two clauses; fails on tautologies.
    pub fn union(&self, other: &Clause) -> Result<Clause> {
        Clause::new(self.0.iter().chain(other.0.iter()).copied())
    }

    /// Variables occurring with opposite polarities in the two clauses.
    pub fn clashes<'a>(&'a self, other: &'a Clause) -> impl Iterator<Item = Var> + 'a {
        self.0
            .iter()
            .filter(move |l| other.contains(l.negate()))
            .map(|l| l.var())
    }

    pub fn is_satisfied_by(&self, assignment: &impl Fn(Var) -> bool) -> bool {
        self.0.iter().any(|l| l.eval(assignment(l.var())))
    }
}

impl fmt::Debug for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.0.iter()).finish()
    }
}

impl<'a> IntoIterator for &'a Clause {
    type Item = &'a Lit;
    type IntoIter = core::slice::Iter<'a, Lit>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

/// A CNF formula: a set of clauses.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Formula(BTreeSet<Clause>);

impl Formula {
    pub fn new() -> Formula {
        Formula(BTreeSet::new())
    }

    pub fn clauses(&self) -> &BTreeSet<Clause> {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = &Clause> + '_ {
        self.0.iter()
    }

    /// Number of clauses.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Total number of literal occurrences.
    pub fn size(&self) -> usize {
        self.0.iter().map(Clause::len).sum()
    }

    pub fn contains(&self, clause: &Clause) -> bool {
        self.0.contains(clause)
    }

    pub fn insert(&mut self, clause: Clause) -> bool {
        self.0.insert(clause)
    }

    pub fn remove(&mut self, clause: &Clause) -> bool {
        self.0.remove(clause)
    }

    pub fn with(&self, clause: Clause) -> Formula {
        let mut out = self.clone();
        out.insert(clause);
        out
    }

    pub fn without(&self, clause: &Clause) -> Formula {
        let mut out = self.clone();
        out.remove(clause);
        out
    }

    pub fn union(&self, other: &Formula) -> Formula {
        Formula(self.0.union(&other.0).cloned().collect())
    }

    pub fn difference(&self, other: &Formula) -> Formula {
        Formula(self.0.difference(&other.0).cloned().collect())
    }

    pub fn is_subset_of(&self, other: &Formula) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn vars(&self) -> BTreeSet<Var> {
        self.0.iter().flat_map(|c| c.vars()).collect()
    }

    pub fn mentions(&self, var: Var) -> bool {
        self.0.iter().any(|c| c.mentions(var))
    }

    pub fn occurs(&self, lit: Lit) -> bool {
        self.0.iter().any(|c| c.contains(lit))
    }

    /// The clauses containing `lit`.
    pub fn clauses_with_literal(&self, lit: Lit) -> Formula {
        self.0.iter().filter(|c| c.contains(lit)).cloned().collect()
    }

    /// Replaces `var` by a truth value: satisfied clauses are dropped and
    /// the falsified literal is removed from the others.
    pub fn substitute(&self, var: Var, value: bool) -> Formula {
        let satisfied = Lit::new(var, value);
        let falsified = !satisfied;
        self.0
            .iter()
            .filter(|c| !c.contains(satisfied))
            .map(|c| c.without(falsified))
            .collect()
    }

    pub fn is_horn(&self) -> bool {
        self.0.iter().all(Clause::is_horn)
    }

    pub fn has_empty_clause(&self) -> bool {
        self.0.first().is_some_and(Clause::is_empty)
    }

    pub fn is_satisfied_by(&self, assignment: &impl Fn(Var) -> bool) -> bool {
        self.0.iter().all(|c| c.is_satisfied_by(assignment))
    }

    /// The clauses mentioning only variables in `vars`.
    pub fn restricted_to(&self, vars: &BTreeSet<Var>) -> Formula {
        self.0
            .iter()
            .filter(|c| c.vars().all(|v| vars.contains(&v)))
            .cloned()
            .collect()
    }
}

impl fmt::Debug for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.0.iter()).finish()
    }
}

impl FromIterator<Clause> for Formula {
    fn from_iter<I: IntoIterator<Item = Clause>>(iter: I) -> Formula {
        Formula(iter.into_iter().collect())
    }
}

impl Extend<Clause> for Formula {
    fn extend<I: IntoIterator<Item = Clause>>(&mut self, iter: I) {
        self.0.extend(iter)
    }
}

impl IntoIterator for Formula {
    type Item = Clause;
    type IntoIter = alloc::collections::btree_set::IntoIter<Clause>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.into_iter()
    }
}

impl<'a> IntoIterator for &'a Formula {
    type Item = &'a Clause;
    type IntoIter = alloc::collections::btree_set::Iter<'a, Clause>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

/// A consistent set of literals (no variable with both polarities).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct LiteralSet(BTreeSet<Lit>);

impl LiteralSet {
    pub fn new<I: IntoIterator<Item = Lit>>(lits: I) -> Result<LiteralSet> {
        let set: BTreeSet<Lit> = lits.into_iter().collect();
        if set.iter().any(|l| set.contains(&l.negate())) {
            return Err(Error::InconsistentLiterals);
        }
        Ok(LiteralSet(set))
    }

    pub fn iter(&self) -> impl Iterator<Item = Lit> + '_ {
        self.0.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, lit: Lit) -> bool {
        self.0.contains(&lit)
    }

    /// The set with `lit` replaced by its negation.
    pub fn flipped(&self, lit: Lit) -> LiteralSet {
        let mut set = self.0.clone();
        if set.remove(&lit) {
            set.insert(!lit);
        }
        LiteralSet(set)
    }

    /// The unit clauses of the set.
    pub fn units(&self) -> Formula {
        self.0.iter().map(|&l| Clause::unit(l)).collect()
    }
}

impl fmt::Debug for LiteralSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.0.iter()).finish()
    }
}

/// Display names for variables.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Vocabulary {
    names: Vec<String>,
    index: BTreeMap<String, Var>,
}

impl Vocabulary {
    pub fn new() -> Vocabulary {
        Vocabulary::default()
    }

    /// Returns the variable named `name`, creating it if needed.
    pub fn intern(&mut self, name: &str) -> Var {
        if let Some(&var) = self.index.get(name) {
            return var;
        }
        let var = Var(self.names.len() as u32);
        self.names.push(String::from(name));
        self.index.insert(String::from(name), var);
        var
    }

    pub fn lookup(&self, name: &str) -> Option<Var> {
        self.index.get(name).copied()
    }

    pub fn name(&self, var: Var) -> Option<&str> {
        self.names.get(var.0 as usize).map(String::as_str)
    }

    /// Name of `var`, or `v<index>` for variables created elsewhere.
    pub fn display(&self, var: Var) -> String {
        match self.name(var) {
            Some(name) => String::from(name),
            None => format!("v{}", var.0),
        }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn vars(&self) -> impl Iterator<Item = Var> + '_ {
        (0..self.names.len() as u32).map(Var)
    }

    /// A new variable named `<prefix><n>` for the smallest unused `n >= 1`.
    pub fn fresh(&mut self, prefix: &str) -> Var {
        let mut n = 1usize;
        loop {
            let name = format!("{prefix}{n}");
            if !self.index.contains_key(&name) {
                return self.intern(&name);
            }
            n += 1;
        }
    }
}
