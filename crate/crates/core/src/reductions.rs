//! The four hardness reductions for the size of forgetting, built exactly
//! as defined, with brute-force evaluation of their source problems and a
//! desk-scale verifier.
//!
//! Every instance gets its own vocabulary. Source variables become `x1..xn`
//! (the inner block of a quantified formula becomes `y1..`), and the fresh
//! families are `e`, `t`, `c`, `o`, `p`, `r`, `s`, `d` indexed from 1, plus
//! the single variables `a`, `b`, `q`, `r`.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::cnf::{Clause, Formula, Lit, LiteralSet, Var, Vocabulary};
use crate::error::{Error, Result};
use crate::forgetting::{expresses_forgetting, forget_all, necessary_literals, ForgetSpec};
use crate::limits::Limits;
use crate::minimization::{has_equivalent_within, is_minimal, minimize, minimize_with, MinimizeOptions};
use crate::redundancy::superirredundant_clauses;
use crate::sat::{is_satisfiable, satisfiable};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ReductionKind {
    HornConp,
    HornNp,
    GeneralP2,
    GeneralS2,
}

impl ReductionKind {
    pub const ALL: [ReductionKind; 4] = [Self::HornConp, Self::HornNp, Self::GeneralP2, Self::GeneralS2];

    pub fn name(self) -> &'static str {
        match self {
            Self::HornConp => "horn_conp",
            Self::HornNp => "horn_np",
            Self::GeneralP2 => "general_p2",
            Self::GeneralS2 => "general_s2",
        }
    }

    pub fn from_name(name: &str) -> Option<ReductionKind> {
        Self::ALL.into_iter().find(|k| k.name() == name)
    }

    /// The source answer for which a formula of size `k` exists.
    pub fn easy_answer(self) -> bool {
        !matches!(self, Self::HornConp)
    }

    /// On the hard branch, no formula of size up to this much above `k`
    /// expresses the forgetting.
    pub fn hard_margin(self) -> usize {
        match self {
            Self::HornConp | Self::GeneralP2 => 1,
            Self::HornNp | Self::GeneralS2 => 0,
        }
    }
}

impl fmt::Display for ReductionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Quantifiers {
    ForallExists,
    ExistsForall,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Matrix {
    Cnf(Formula),
    /// A disjunction of terms.
    Dnf(Vec<LiteralSet>),
}

impl Matrix {
    fn vars(&self) -> BTreeSet<Var> {
        match self {
            Matrix::Cnf(f) => f.vars(),
            Matrix::Dnf(terms) => terms.iter().flat_map(|t| t.iter().map(Lit::var)).collect(),
        }
    }

    fn eval(&self, value: &impl Fn(Var) -> bool) -> bool {
        match self {
            Matrix::Cnf(f) => f.is_satisfied_by(value),
            Matrix::Dnf(terms) => terms.iter().any(|t| t.iter().all(|l| value(l.var()) == l.is_positive())),
        }
    }
}

/// A two-block quantified formula: the outer block is universal for
/// `ForallExists` and existential for `ExistsForall`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QbfInstance {
    pub order: Quantifiers,
    pub outer: Vec<Var>,
    pub inner: Vec<Var>,
    pub matrix: Matrix,
}

impl QbfInstance {
    /// Matrix variables in neither block are added to the inner block.
    pub fn new(order: Quantifiers, outer: impl IntoIterator<Item = Var>, matrix: Matrix) -> Result<QbfInstance> {
        let outer: BTreeSet<Var> = outer.into_iter().collect();
        let inner = matrix.vars().into_iter().filter(|v| !outer.contains(v)).collect();
        Ok(QbfInstance { order, outer: outer.into_iter().collect(), inner, matrix })
    }

    pub fn with_blocks(
        order: Quantifiers,
        outer: impl IntoIterator<Item = Var>,
        inner: impl IntoIterator<Item = Var>,
        matrix: Matrix,
    ) -> Result<QbfInstance> {
        let outer: BTreeSet<Var> = outer.into_iter().collect();
        let inner: BTreeSet<Var> = inner.into_iter().collect();
        if outer.iter().any(|v| inner.contains(v)) {
            return Err(Error::InvalidQbf("quantifier blocks overlap"));
        }
        if matrix.vars().iter().any(|v| !outer.contains(v) && !inner.contains(v)) {
            return Err(Error::InvalidQbf("matrix mentions an unquantified variable"));
        }
        Ok(QbfInstance { order, outer: outer.into_iter().collect(), inner: inner.into_iter().collect(), matrix })
    }

    pub fn universal(&self) -> &[Var] {
        match self.order {
            Quantifiers::ForallExists => &self.outer,
            Quantifiers::ExistsForall => &self.inner,
        }
    }

    pub fn existential(&self) -> &[Var] {
        match self.order {
            Quantifiers::ForallExists => &self.inner,
            Quantifiers::ExistsForall => &self.outer,
        }
    }

    /// An assignment to the outer block under which the matrix holds for
    /// every assignment to the inner block, first in enumeration order.
    fn outer_witness(&self) -> Option<BTreeMap<Var, bool>> {
        masks(&self.outer).find(|outer| masks(&self.inner).all(|inner| self.holds(outer, &inner)))
    }

    fn holds(&self, outer: &BTreeMap<Var, bool>, inner: &BTreeMap<Var, bool>) -> bool {
        self.matrix.eval(&|v| outer.get(&v).or_else(|| inner.get(&v)).copied().unwrap_or(false))
    }
}

fn masks(vars: &[Var]) -> impl Iterator<Item = BTreeMap<Var, bool>> + '_ {
    (0..1usize << vars.len()).map(move |mask| vars.iter().enumerate().map(|(i, v)| (*v, mask >> i & 1 == 1)).collect())
}

/// Truth of the quantified formula by expansion.
pub fn qbf_eval(q: &QbfInstance, limits: &Limits) -> Result<bool> {
    let total = q.outer.len() + q.inner.len();
    if total > limits.enumeration {
        return Err(Error::EnumerationCap { vars: total, cap: limits.enumeration });
    }
    Ok(match q.order {
        Quantifiers::ExistsForall => q.outer_witness().is_some(),
        Quantifiers::ForallExists => {
            masks(&q.outer).all(|outer| masks(&q.inner).any(|inner| q.holds(&outer, &inner)))
        }
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Source {
    Cnf(Formula),
    Qbf(QbfInstance),
}

/// What every formula expressing the forgetting is known to contain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Forced {
    Literals(Vec<Lit>),
    /// Clauses in every minimum-size formula expressing the forgetting.
    Clauses(Formula),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionInstance {
    pub kind: ReductionKind,
    pub formula: Formula,
    pub keep: BTreeSet<Var>,
    pub bound: usize,
    /// The source problem over the instance's own variable names.
    pub source: Source,
    pub source_answer: bool,
    pub vocab: Vocabulary,
    /// Named clause families making up the construction.
    pub families: Vec<(&'static str, Formula)>,
    /// The explicit formula of size `bound` on the easy branch.
    pub candidate: Option<Formula>,
    pub forced: Forced,
}

impl ReductionInstance {
    pub fn spec(&self) -> ForgetSpec {
        ForgetSpec::keeping(self.formula.clone(), self.keep.iter().copied())
    }

    pub fn family(&self, name: &str) -> Option<&Formula> {
        self.families.iter().find(|(n, _)| *n == name).map(|(_, f)| f)
    }

    fn family_size(&self, name: &str) -> usize {
        self.family(name).map_or(0, Formula::size)
    }

    pub fn is_easy(&self) -> bool {
        self.source_answer == self.kind.easy_answer()
    }

    /// `k` recomputed from the clause families rather than the closed form.
    pub fn bound_from_families(&self) -> usize {
        let n = self.source_width();
        match self.kind {
            ReductionKind::HornConp => self.family_size("exclusion") + self.family_size("ab"),
            ReductionKind::HornNp => {
                2 * n + self.family_size("tlinks") + self.family_size("clinks") + self.family_size("blocks")
            }
            ReductionKind::GeneralP2 => self.family_size("pairs") + self.family_size("ab"),
            ReductionKind::GeneralS2 => {
                2 * n + self.family_size("tlinks") + self.family_size("dlinks") + self.family_size("blocks")
            }
        }
    }

    /// The number of source variables indexed by `i`.
    pub fn source_width(&self) -> usize {
        match &self.source {
            Source::Cnf(f) => f.vars().len(),
            Source::Qbf(q) => q.outer.len(),
        }
    }
}

fn clause(lits: impl IntoIterator<Item = Lit>) -> Clause {
    Clause::new(lits).expect("constructions use distinct variables")
}

struct Builder {
    vocab: Vocabulary,
}

impl Builder {
    fn new() -> Builder {
        Builder { vocab: Vocabulary::new() }
    }

    fn family(&mut self, prefix: &str, n: usize) -> Vec<Var> {
        (1..=n).map(|i| self.vocab.intern(&format!("{prefix}{i}"))).collect()
    }

    fn var(&mut self, name: &str) -> Var {
        self.vocab.intern(name)
    }
}

fn rename_formula(f: &Formula, map: &BTreeMap<Var, Var>) -> Formula {
    f.iter().map(|c| clause(c.iter().map(|l| Lit::new(map[&l.var()], l.is_positive())))).collect()
}

fn rename_term(t: &LiteralSet, map: &BTreeMap<Var, Var>) -> LiteralSet {
    LiteralSet::new(t.iter().map(|l| Lit::new(map[&l.var()], l.is_positive()))).expect("renaming is injective")
}

/// Renames the variables of a CNF source to `x1..xn`, ascending.
fn cnf_source(f: &Formula, b: &mut Builder) -> (Formula, Vec<Var>) {
    let old: Vec<Var> = f.vars().into_iter().collect();
    let xs = b.family("x", old.len());
    let map = old.into_iter().zip(xs.iter().copied()).collect();
    (rename_formula(f, &map), xs)
}

/// `¬t1 ∨ … ∨ ¬tn` followed by the negations of `extra`.
fn negations(ts: &[Var], extra: &[Var]) -> Vec<Lit> {
    ts.iter().chain(extra).map(|v| v.neg()).collect()
}

fn x_and_e_links(f: &Formula, xs: &[Var], es: &[Var], cs: &[Var]) -> Formula {
    let index: BTreeMap<Var, usize> = xs.iter().enumerate().map(|(i, v)| (*v, i)).collect();
    let mut out = Formula::new();
    for (j, fj) in f.iter().enumerate() {
        for l in fj.iter() {
            let i = index[&l.var()];
            let from = if l.is_positive() { xs[i] } else { es[i] };
            out.insert(clause([from.neg(), cs[j].pos()]));
        }
    }
    out
}

fn t_links(xs: &[Var], es: &[Var], ts: &[Var]) -> Formula {
    (0..xs.len())
        .flat_map(|i| [clause([xs[i].neg(), ts[i].pos()]), clause([es[i].neg(), ts[i].pos()])])
        .collect()
}

/// The instance for co-NP-hardness in the Horn case: `k` suffices when the
/// source CNF is unsatisfiable, and `k + 2` is needed otherwise.
pub fn build_horn_conp(f: &Formula) -> ReductionInstance {
    let mut b = Builder::new();
    let (f, xs) = cnf_source(f, &mut b);
    let n = xs.len();
    let es = b.family("e", n);
    let ts = b.family("t", n);
    let cs = b.family("c", f.len());
    let (a, bv) = (b.var("a"), b.var("b"));

    let exclusion: Formula = (0..n).map(|i| clause([xs[i].neg(), es[i].neg()])).collect();
    let tlinks = t_links(&xs, &es, &ts);
    let clinks = x_and_e_links(&f, &xs, &es, &cs);
    let mut long_lits = negations(&ts, &cs);
    long_lits.extend([a.neg(), bv.pos()]);
    let long = Formula::from_iter([clause(long_lits)]);
    let ab = Formula::from_iter([clause([a.pos(), bv.neg()])]);

    let formula = exclusion.union(&tlinks).union(&clinks).union(&long).union(&ab);
    let keep = xs.iter().chain(&es).copied().chain([a, bv]).collect();
    let answer = is_satisfiable(&f);
    let mut forced: Vec<Lit> = xs.iter().chain(&es).map(|v| v.neg()).chain([a.pos(), bv.neg()]).collect();
    if answer {
        forced.extend([a.neg(), bv.pos()]);
    }
    forced.sort();
    ReductionInstance {
        kind: ReductionKind::HornConp,
        formula,
        keep,
        bound: 2 * n + 2,
        source: Source::Cnf(f),
        source_answer: answer,
        vocab: b.vocab,
        candidate: (!answer).then(|| exclusion.union(&ab)),
        families: Vec::from([
            ("exclusion", exclusion),
            ("tlinks", tlinks),
            ("clinks", clinks),
            ("long", long),
            ("ab", ab),
        ]),
        forced: Forced::Literals(forced),
    }
}

/// The instance for NP-hardness in the Horn case: `k` suffices when the
/// source CNF is satisfiable, and more is needed otherwise.
pub fn build_horn_np(f: &Formula) -> ReductionInstance {
    let mut b = Builder::new();
    let (f, xs) = cnf_source(f, &mut b);
    let n = xs.len();
    let m = f.len();
    let os = b.family("o", n);
    let es = b.family("e", n);
    let ps = b.family("p", n);
    let ts = b.family("t", n);
    let cs = b.family("c", m);
    let rs = b.family("r", n);
    let ss = b.family("s", n);
    let q = b.var("q");

    let olinks: Formula = (0..n)
        .flat_map(|i| {
            [
                clause([xs[i].pos(), os[i].neg()]),
                clause([os[i].pos(), q.neg()]),
                clause([es[i].pos(), ps[i].neg()]),
                clause([ps[i].pos(), q.neg()]),
            ]
        })
        .collect();
    let tlinks = t_links(&xs, &es, &ts);
    let clinks = x_and_e_links(&f, &xs, &es, &cs);
    let blocks: Formula = (0..n)
        .flat_map(|i| {
            let mut via_x = negations(&ts, &cs);
            via_x.extend([xs[i].pos(), rs[i].neg()]);
            let mut via_e = negations(&ts, &cs);
            via_e.extend([es[i].pos(), ss[i].neg()]);
            [clause(via_x), clause([rs[i].pos(), q.neg()]), clause(via_e), clause([ss[i].pos(), q.neg()])]
        })
        .collect();

    let formula = olinks.union(&tlinks).union(&clinks).union(&blocks);
    let keep = xs.iter().chain(&es).chain(&ts).chain(&cs).chain(&rs).chain(&ss).copied().chain([q]).collect();
    let model = satisfiable(&f);
    let rest = tlinks.union(&clinks).union(&blocks);
    let candidate = model.as_ref().map(|m| {
        let chosen: Formula = (0..n)
            .map(|i| {
                let v = if m.value(xs[i]) { xs[i] } else { es[i] };
                clause([v.pos(), q.neg()])
            })
            .collect();
        chosen.union(&rest)
    });
    let bound = 2 * n + 4 * n + 2 * f.size() + 2 * n * (n + m + 2) + 4 * n;
    ReductionInstance {
        kind: ReductionKind::HornNp,
        formula,
        keep,
        bound,
        source: Source::Cnf(f),
        source_answer: model.is_some(),
        vocab: b.vocab,
        candidate,
        families: Vec::from([("olinks", olinks), ("tlinks", tlinks), ("clinks", clinks), ("blocks", blocks)]),
        forced: Forced::Clauses(rest),
    }
}

/// Renames the blocks of `q` to `x1..xn` (outer) and `y1..` (inner).
fn qbf_source(q: &QbfInstance, b: &mut Builder) -> (QbfInstance, BTreeMap<Var, Var>) {
    let xs = b.family("x", q.outer.len());
    let ys = b.family("y", q.inner.len());
    let map: BTreeMap<Var, Var> = q.outer.iter().zip(&xs).chain(q.inner.iter().zip(&ys)).map(|(o, n)| (*o, *n)).collect();
    let matrix = match &q.matrix {
        Matrix::Cnf(f) => Matrix::Cnf(rename_formula(f, &map)),
        Matrix::Dnf(terms) => Matrix::Dnf(terms.iter().map(|t| rename_term(t, &map)).collect()),
    };
    (QbfInstance { order: q.order, outer: xs, inner: ys, matrix }, map)
}

/// The instance for Π2-hardness in the general case: `k` suffices when
/// `∀X ∃Y . F` is valid, and `k + 2` is needed otherwise. An unsatisfiable
/// matrix is first replaced by `s ∨ F`, with `s` a new universal variable
/// named after the last `x`.
pub fn build_general_p2(q: &QbfInstance, limits: &Limits) -> Result<ReductionInstance> {
    let Matrix::Cnf(matrix) = &q.matrix else {
        return Err(Error::InvalidQbf("expected a CNF matrix"));
    };
    if q.order != Quantifiers::ForallExists {
        return Err(Error::InvalidQbf("expected ∀X ∃Y"));
    }
    let mut q = q.clone();
    if !is_satisfiable(matrix) {
        let mut scratch = q.outer.iter().chain(&q.inner).copied().max().map_or(0, |v| v.index() + 1);
        scratch += matrix.vars().into_iter().map(|v| v.index() + 1).max().unwrap_or(0);
        let s = Var::new(scratch);
        let wrapped = matrix.iter().map(|c| c.with(s.pos()).expect("s is new")).collect();
        q.outer.push(s);
        q.matrix = Matrix::Cnf(wrapped);
    }
    let answer = qbf_eval(&q, limits)?;
    let mut b = Builder::new();
    let (q, _) = qbf_source(&q, &mut b);
    let Matrix::Cnf(f) = &q.matrix else { unreachable!() };
    let xs = q.outer.clone();
    let n = xs.len();
    let es = b.family("e", n);
    let cs = b.family("c", f.len());
    let (a, bv, qv, r) = (b.var("a"), b.var("b"), b.var("q"), b.var("r"));

    let matrix_links: Formula = f
        .iter()
        .zip(&cs)
        .map(|(fj, cj)| clause(fj.iter().chain([cj.pos(), qv.pos()])))
        .collect();
    let rlinks: Formula = cs.iter().map(|cj| clause([cj.neg(), r.pos()])).collect();
    let long = Formula::from_iter([clause([r.neg(), a.neg(), bv.pos(), qv.pos()])]);
    let ab = Formula::from_iter([clause([a.pos(), bv.neg(), qv.pos()])]);
    let pairs: Formula = (0..n).map(|i| clause([xs[i].pos(), es[i].pos()])).collect();

    let formula = matrix_links.union(&rlinks).union(&long).union(&ab).union(&pairs);
    let keep = xs.iter().chain(&es).copied().chain([a, bv, qv]).collect();
    let mut forced: Vec<Lit> = xs.iter().chain(&es).map(|v| v.pos()).chain([a.pos(), bv.neg(), qv.pos()]).collect();
    if !answer {
        forced.extend([a.neg(), bv.pos()]);
    }
    forced.sort();
    Ok(ReductionInstance {
        kind: ReductionKind::GeneralP2,
        formula,
        keep,
        bound: 2 * n + 3,
        source: Source::Qbf(q),
        source_answer: answer,
        vocab: b.vocab,
        candidate: answer.then(|| ab.union(&pairs)),
        families: Vec::from([
            ("matrix", matrix_links),
            ("rlinks", rlinks),
            ("long", long),
            ("ab", ab),
            ("pairs", pairs),
        ]),
        forced: Forced::Literals(forced),
    })
}

/// The negated term with every `¬x_i` first replaced by `e_i`.
fn renamed_negation(term: &LiteralSet, xs: &[Var], es: &[Var]) -> Vec<Lit> {
    term.iter()
        .map(|l| match xs.iter().position(|x| *x == l.var()) {
            Some(i) if !l.is_positive() => es[i].neg(),
            _ => !l,
        })
        .collect()
}

/// The instance for Σ2-hardness in the general case: `k` suffices when
/// `∃X ∀Y . F` is valid for the DNF `F`, and more is needed otherwise. An
/// empty `X` gets one unused variable, without which `A` would already have
/// size `k`.
pub fn build_general_s2(q: &QbfInstance, limits: &Limits) -> Result<ReductionInstance> {
    if !matches!(q.matrix, Matrix::Dnf(_)) {
        return Err(Error::InvalidQbf("expected a DNF matrix"));
    }
    if q.order != Quantifiers::ExistsForall {
        return Err(Error::InvalidQbf("expected ∃X ∀Y"));
    }
    let mut q = q.clone();
    if q.outer.is_empty() {
        let scratch = q.inner.iter().chain(&q.matrix.vars()).map(|v| v.index() + 1).max().unwrap_or(0);
        q.outer.push(Var::new(scratch));
    }
    let answer = qbf_eval(&q, limits)?;
    let mut b = Builder::new();
    let (q, _) = qbf_source(&q, &mut b);
    let Matrix::Dnf(terms) = &q.matrix else { unreachable!() };
    let xs = q.outer.clone();
    let n = xs.len();
    let m = terms.len();
    let os = b.family("o", n);
    let es = b.family("e", n);
    let ps = b.family("p", n);
    let ts = b.family("t", n);
    let ds = b.family("d", m);
    let rs = b.family("r", n);
    let ss = b.family("s", n);
    let qv = b.var("q");

    let olinks: Formula = (0..n)
        .flat_map(|i| {
            [
                clause([xs[i].pos(), os[i].neg()]),
                clause([os[i].pos(), qv.pos()]),
                clause([es[i].pos(), ps[i].neg()]),
                clause([ps[i].pos(), qv.pos()]),
            ]
        })
        .collect();
    let tlinks = t_links(&xs, &es, &ts);
    let dlinks: Formula = terms
        .iter()
        .zip(&ds)
        .map(|(t, dj)| {
            let mut lits = renamed_negation(t, &xs, &es);
            lits.push(dj.pos());
            clause(lits)
        })
        .collect();
    let mut blocks = Formula::new();
    for dj in &ds {
        for i in 0..n {
            let mut via_x = negations(&ts, &[*dj]);
            via_x.extend([xs[i].pos(), rs[i].neg()]);
            let mut via_e = negations(&ts, &[*dj]);
            via_e.extend([es[i].pos(), ss[i].neg()]);
            blocks.extend([clause(via_x), clause([rs[i].pos(), qv.pos()])]);
            blocks.extend([clause(via_e), clause([ss[i].pos(), qv.pos()])]);
        }
    }

    let formula = olinks.union(&tlinks).union(&dlinks).union(&blocks);
    let keep = xs
        .iter()
        .chain(&es)
        .chain(&q.inner)
        .chain(&ts)
        .chain(&ds)
        .chain(&rs)
        .chain(&ss)
        .copied()
        .chain([qv])
        .collect();
    let rest = tlinks.union(&dlinks).union(&blocks);
    let candidate = q.outer_witness().map(|model| {
        let chosen: Formula = (0..n)
            .map(|i| {
                let v = if model[&xs[i]] { xs[i] } else { es[i] };
                clause([v.pos(), qv.pos()])
            })
            .collect();
        chosen.union(&rest)
    });
    let literals: usize = terms.iter().map(LiteralSet::len).sum();
    let block_size = if m == 0 { 0 } else { 2 * n * m * (n + 3) + 4 * n };
    let bound = 2 * n + 4 * n + literals + m + block_size;
    Ok(ReductionInstance {
        kind: ReductionKind::GeneralS2,
        formula,
        keep,
        bound,
        source: Source::Qbf(q),
        source_answer: answer,
        vocab: b.vocab,
        candidate,
        families: Vec::from([("olinks", olinks), ("tlinks", tlinks), ("dlinks", dlinks), ("blocks", blocks)]),
        forced: Forced::Clauses(rest),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CheckOutcome {
    Passed,
    Failed(String),
    /// Not applicable to this instance or not requested.
    Skipped,
    Error(Error),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub outcome: CheckOutcome,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
}

impl VerificationReport {
    /// No check failed or errored.
    pub fn passed(&self) -> bool {
        self.checks
            .iter()
            .all(|c| matches!(c.outcome, CheckOutcome::Passed | CheckOutcome::Skipped))
    }

    pub fn outcome(&self, name: &str) -> Option<&CheckOutcome> {
        self.checks.iter().find(|c| c.name == name).map(|c| &c.outcome)
    }
}

pub const CHECK_MINIMAL: &str = "minimal";
pub const CHECK_CANDIDATE: &str = "candidate";
pub const CHECK_FORCED: &str = "forced";
pub const CHECK_BOUND: &str = "bound";
pub const CHECK_FORCED_CLAUSES: &str = "forced-clauses";

fn outcome(result: Result<core::result::Result<(), String>>) -> CheckOutcome {
    match result {
        Ok(Ok(())) => CheckOutcome::Passed,
        Ok(Err(why)) => CheckOutcome::Failed(why),
        Err(e) => CheckOutcome::Error(e),
    }
}

/// Checks an instance against the claims of its construction:
///
/// 1. the formula is minimal;
/// 2. on the easy branch, the explicit candidate has size `k` and expresses
///    the forgetting;
/// 3. the forced literals are necessary; kinds that force clauses instead
///    get a `forced-clauses` check that they occur in every minimal formula
///    expressing the forgetting;
/// 4. with `exhaustive`, the minimum size after forgetting is exactly `k` on
///    the easy branch, and no formula within the hard margin above `k`
///    expresses the forgetting on the hard branch.
pub fn verify_reduction(inst: &ReductionInstance, exhaustive: bool, limits: &Limits) -> VerificationReport {
    let spec = inst.spec();
    let mut checks = Vec::new();

    let minimal = is_minimal(&inst.formula, limits).map(|ok| {
        if ok {
            Ok(())
        } else {
            Err(String::from("a smaller equivalent formula exists"))
        }
    });
    checks.push(Check { name: CHECK_MINIMAL, outcome: outcome(minimal) });

    let candidate = match (&inst.candidate, inst.is_easy()) {
        (Some(b), true) => outcome(expresses_forgetting(b, &spec, limits).map(|ok| {
            if b.size() != inst.bound {
                Err(format!("candidate has size {} instead of {}", b.size(), inst.bound))
            } else if !ok {
                Err(String::from("candidate does not express forgetting"))
            } else {
                Ok(())
            }
        })),
        _ => CheckOutcome::Skipped,
    };
    checks.push(Check { name: CHECK_CANDIDATE, outcome: candidate });

    let (forced_name, forced) = match &inst.forced {
        Forced::Literals(lits) => (CHECK_FORCED, outcome(necessary_literals(&spec, limits).map(|found| {
            let found: BTreeSet<Lit> = found.iter().map(|r| r.literal).collect();
            match lits.iter().filter(|l| !found.contains(l)).count() {
                0 => Ok(()),
                missing => Err(format!("{missing} forced literals not found necessary")),
            }
        }))),
        Forced::Clauses(clauses) => (CHECK_FORCED_CLAUSES, outcome(forget_all(&spec, limits).and_then(|g| {
            let irredundant = superirredundant_clauses(&g);
            if clauses.iter().all(|c| irredundant.contains(c)) {
                return Ok(Ok(()));
            }
            let witnesses = minimize(&g, limits)?.witnesses;
            Ok(match clauses.iter().filter(|c| witnesses.iter().any(|w| !w.contains(c))).count() {
                0 => Ok(()),
                missing => Err(format!("{missing} forced clauses missing from some minimal formula")),
            })
        }))),
    };
    checks.push(Check { name: forced_name, outcome: forced });

    let bound = if !exhaustive {
        CheckOutcome::Skipped
    } else if inst.is_easy() {
        outcome(forget_all(&spec, limits).and_then(|g| {
            let options = MinimizeOptions { exhaustive: false, ceiling: None };
            let min = minimize_with(&g, options, limits)?.expect("no ceiling").min_size;
            Ok(if min == inst.bound { Ok(()) } else { Err(format!("minimum size {min}, expected {}", inst.bound)) })
        }))
    } else {
        let ceiling = inst.bound + inst.kind.hard_margin();
        outcome(forget_all(&spec, limits).and_then(|g| {
            Ok(if has_equivalent_within(&g, ceiling, limits)? {
                Err(format!("a formula of size at most {ceiling} expresses forgetting"))
            } else {
                Ok(())
            })
        }))
    };
    checks.push(Check { name: CHECK_BOUND, outcome: bound });
    VerificationReport { checks }
}
