//! Satisfiability, entailment and equivalence.
//!
//! General formulas go through DPLL with unit propagation and pure-literal
//! elimination, branching on the lowest unassigned variable with the false
//! branch first. Horn inputs (every clause with at most one positive
//! literal, assumptions included) are decided by counter-based forward
//! chaining in linear time and get the minimal model as witness.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::cnf::{Clause, Formula, Lit, LiteralSet, Var};

/// A truth assignment over a finite set of variables.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Assignment(BTreeMap<Var, bool>);

impl Assignment {
    pub fn new() -> Assignment {
        Assignment::default()
    }

    pub fn set(&mut self, var: Var, value: bool) {
        self.0.insert(var, value);
    }

    pub fn get(&self, var: Var) -> Option<bool> {
        self.0.get(&var).copied()
    }

    /// Value of `var`, false when unassigned.
    pub fn value(&self, var: Var) -> bool {
        self.get(var).unwrap_or(false)
    }

    pub fn iter(&self) -> impl Iterator<Item = (Var, bool)> + '_ {
        self.0.iter().map(|(&v, &b)| (v, b))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn satisfies(&self, f: &Formula) -> bool {
        f.is_satisfied_by(&|v| self.value(v))
    }

    /// The literals made true by the assignment.
    pub fn literals(&self) -> LiteralSet {
        LiteralSet::new(self.iter().map(|(v, b)| Lit::new(v, b))).expect("an assignment is consistent")
    }
}

const UNASSIGNED: u8 = 0;
const TRUE: u8 = 1;
const FALSE: u8 = 2;

/// A formula prepared for repeated satisfiability checks under different
/// sets of assumed literals.
#[derive(Clone, Debug)]
pub struct Solver {
    vars: Vec<Var>,
    index: BTreeMap<Var, u32>,
    clauses: Vec<Vec<u32>>,
    horn: bool,
    has_empty: bool,
}

fn code(var: u32, positive: bool) -> u32 {
    var << 1 | (!positive) as u32
}

impl Solver {
    pub fn new(f: &Formula) -> Solver {
        let vars: Vec<Var> = f.vars().into_iter().collect();
        let index: BTreeMap<Var, u32> = vars.iter().enumerate().map(|(i, &v)| (v, i as u32)).collect();
        let clauses = f
            .iter()
            .map(|c| c.iter().map(|l| code(index[&l.var()], l.is_positive())).collect())
            .collect();
        Solver {
            vars,
            index,
            clauses,
            horn: f.is_horn(),
            has_empty: f.has_empty_clause(),
        }
    }

    /// Variables of the underlying formula, ascending.
    pub fn vars(&self) -> &[Var] {
        &self.vars
    }

    pub fn is_horn(&self) -> bool {
        self.horn
    }

    /// Satisfiable together with the unit clauses `assumptions`?
    pub fn is_consistent(&self, assumptions: &[Lit]) -> bool {
        self.solve(assumptions).is_some()
    }

    /// A model of the formula plus `assumptions`, total over the formula's
    /// variables and the assumed ones.
    pub fn solve(&self, assumptions: &[Lit]) -> Option<Assignment> {
        if self.has_empty {
            return None;
        }
        let mut outside: BTreeMap<Var, bool> = BTreeMap::new();
        let mut units: Vec<u32> = Vec::new();
        for &lit in assumptions {
            match self.index.get(&lit.var()) {
                Some(&i) => units.push(code(i, lit.is_positive())),
                None => {
                    if *outside.entry(lit.var()).or_insert(lit.is_positive()) != lit.is_positive() {
                        return None;
                    }
                }
            }
        }
        let values = if self.horn {
            horn_solve(self.vars.len(), &self.clauses, &units)?
        } else {
            Dpll::new(self.vars.len(), &self.clauses).run(&units)?
        };
        let mut model = Assignment::new();
        for (i, &var) in self.vars.iter().enumerate() {
            model.set(var, values[i] == TRUE);
        }
        for (var, value) in outside {
            model.set(var, value);
        }
        Some(model)
    }

    /// Same as [`Solver::solve`], always using DPLL. Exposed for
    /// cross-checking the Horn path.
    pub fn solve_general(&self, assumptions: &[Lit]) -> Option<Assignment> {
        if self.horn {
            let general = Solver { horn: false, ..self.clone() };
            general.solve(assumptions)
        } else {
            self.solve(assumptions)
        }
    }
}

/// Forward chaining over Horn clauses; returns the minimal model.
fn horn_solve(nvars: usize, clauses: &[Vec<u32>], units: &[u32]) -> Option<Vec<u8>> {
    let total = clauses.len() + units.len();
    let mut remaining = Vec::with_capacity(total);
    let mut head: Vec<Option<u32>> = Vec::with_capacity(total);
    let mut watch: Vec<Vec<usize>> = vec![Vec::new(); nvars];
    let all = clauses.iter().map(Vec::as_slice).chain(units.iter().map(core::slice::from_ref));
    for (ci, clause) in all.enumerate() {
        let mut negatives = 0;
        let mut positive = None;
        for &l in clause {
            if l & 1 == 1 {
                negatives += 1;
                watch[(l >> 1) as usize].push(ci);
            } else {
                positive = Some(l >> 1);
            }
        }
        remaining.push(negatives);
        head.push(positive);
    }
    let mut value = vec![FALSE; nvars];
    let mut queue: Vec<u32> = Vec::new();
    for ci in 0..total {
        if remaining[ci] == 0 {
            match head[ci] {
                None => return None,
                Some(v) if value[v as usize] != TRUE => {
                    value[v as usize] = TRUE;
                    queue.push(v);
                }
                Some(_) => {}
            }
        }
    }
    while let Some(v) = queue.pop() {
        for &ci in &watch[v as usize] {
            remaining[ci] -= 1;
            if remaining[ci] == 0 {
                match head[ci] {
                    None => return None,
                    Some(h) if value[h as usize] != TRUE => {
                        value[h as usize] = TRUE;
                        queue.push(h);
                    }
                    Some(_) => {}
                }
            }
        }
    }
    Some(value)
}

struct Dpll<'a> {
    clauses: &'a [Vec<u32>],
    value: Vec<u8>,
    trail: Vec<u32>,
}

impl<'a> Dpll<'a> {
    fn new(nvars: usize, clauses: &'a [Vec<u32>]) -> Self {
        Dpll {
            clauses,
            value: vec![UNASSIGNED; nvars],
            trail: Vec::new(),
        }
    }

    fn run(mut self, units: &[u32]) -> Option<Vec<u8>> {
        for &u in units {
            match self.lit_value(u) {
                Some(true) => {}
                Some(false) => return None,
                None => self.assign(u),
            }
        }
        if !self.search() {
            return None;
        }
        for v in self.value.iter_mut() {
            if *v == UNASSIGNED {
                *v = FALSE;
            }
        }
        Some(self.value)
    }

    fn lit_value(&self, lit: u32) -> Option<bool> {
        match self.value[(lit >> 1) as usize] {
            UNASSIGNED => None,
            v => Some((v == TRUE) == (lit & 1 == 0)),
        }
    }

    fn assign(&mut self, lit: u32) {
        let var = lit >> 1;
        self.value[var as usize] = if lit & 1 == 0 { TRUE } else { FALSE };
        self.trail.push(var);
    }

    fn undo(&mut self, mark: usize) {
        for var in self.trail.drain(mark..) {
            self.value[var as usize] = UNASSIGNED;
        }
    }

    /// Unit propagation and pure-literal elimination to a fixpoint.
    /// Returns false on conflict.
    fn propagate(&mut self) -> bool {
        loop {
            let mut changed = false;
            for clause in self.clauses {
                let mut open = 0;
                let mut last = 0;
                let mut satisfied = false;
                for &l in clause {
                    match self.lit_value(l) {
                        Some(true) => {
                            satisfied = true;
                            break;
                        }
                        Some(false) => {}
                        None => {
                            open += 1;
                            last = l;
                        }
                    }
                }
                if satisfied {
                    continue;
                }
                match open {
                    0 => return false,
                    1 => {
                        self.assign(last);
                        changed = true;
                    }
                    _ => {}
                }
            }
            if changed {
                continue;
            }
            // bit 0: occurs positively, bit 1: occurs negatively
            let mut polarity = vec![0u8; self.value.len()];
            for clause in self.clauses {
                if clause.iter().any(|&l| self.lit_value(l) == Some(true)) {
                    continue;
                }
                for &l in clause {
                    if self.lit_value(l).is_none() {
                        polarity[(l >> 1) as usize] |= 1 << (l & 1);
                    }
                }
            }
            for (var, &p) in polarity.iter().enumerate() {
                if p == 1 || p == 2 {
                    self.assign(code(var as u32, p == 1));
                    changed = true;
                }
            }
            if !changed {
                return true;
            }
        }
    }

    fn search(&mut self) -> bool {
        if !self.propagate() {
            return false;
        }
        let all_satisfied = self
            .clauses
            .iter()
            .all(|c| c.iter().any(|&l| self.lit_value(l) == Some(true)));
        if all_satisfied {
            return true;
        }
        let Some(var) = self.value.iter().position(|&v| v == UNASSIGNED) else {
            return false;
        };
        let mark = self.trail.len();
        for positive in [false, true] {
            self.assign(code(var as u32, positive));
            if self.search() {
                return true;
            }
            self.undo(mark);
        }
        false
    }
}

/// A model of `f` over its variables, if any.
pub fn satisfiable(f: &Formula) -> Option<Assignment> {
    Solver::new(f).solve(&[])
}

pub fn is_satisfiable(f: &Formula) -> bool {
    satisfiable(f).is_some()
}

/// Every model of `f` satisfies `c`.
pub fn entails(f: &Formula, c: &Clause) -> bool {
    Solver::new(f).entails(c)
}

impl Solver {
    pub fn entails(&self, c: &Clause) -> bool {
        let negated: Vec<Lit> = c.iter().map(Lit::negate).collect();
        !self.is_consistent(&negated)
    }

    pub fn entails_all(&self, g: &Formula) -> bool {
        g.iter().all(|c| self.entails(c))
    }
}

/// `f` entails every clause of `g`.
pub fn entails_all(f: &Formula, g: &Formula) -> bool {
    Solver::new(f).entails_all(g)
}

pub fn equivalent(f: &Formula, g: &Formula) -> bool {
    entails_all(f, g) && entails_all(g, f)
}

/// `f` plus the unit clauses of `s` is satisfiable.
pub fn consistent_with(f: &Formula, s: &LiteralSet) -> bool {
    let lits: Vec<Lit> = s.iter().collect();
    Solver::new(f).is_consistent(&lits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cnf::Vocabulary;
    use crate::syntax::parse_formula_str as parse;

    fn clause(v: &mut Vocabulary, text: &str) -> Clause {
        parse(text, v).unwrap().into_iter().next().unwrap()
    }

    #[test]
    fn satisfiability_examples() {
        let mut v = Vocabulary::new();
        assert!(satisfiable(&parse("a -a", &mut v).unwrap()).is_none());

        let f = parse("ab", &mut v).unwrap();
        let model = satisfiable(&f).unwrap();
        assert!(model.satisfies(&f));

        // DPLL tries false first: a=false forces b=true via the clause
        let f = parse("a -ab a-b", &mut v).unwrap();
        let model = satisfiable(&f).unwrap();
        assert!(model.satisfies(&f));
        assert!(model.value(v.lookup("a").unwrap()));
        assert!(model.value(v.lookup("b").unwrap()));
    }

    #[test]
    fn empty_formula_and_empty_clause() {
        assert!(is_satisfiable(&Formula::new()));
        let f = Formula::from_iter([Clause::empty()]);
        assert!(!is_satisfiable(&f));
        assert!(entails(&f, &Clause::empty()));
        assert!(!entails(&Formula::new(), &Clause::empty()));
    }

    #[test]
    fn entailment_examples() {
        let mut v = Vocabulary::new();
        let a = clause(&mut v, "a");
        assert!(entails(&parse("b a-b", &mut v).unwrap(), &a));
        let abc = clause(&mut v, "abc");
        assert!(entails(&parse("ab", &mut v).unwrap(), &abc));
        assert!(!entails(&parse("ab", &mut v).unwrap(), &a));
    }

    #[test]
    fn equivalence_examples() {
        let mut v = Vocabulary::new();
        let p = |s: &str, v: &mut Vocabulary| parse(s, v).unwrap();
        assert!(equivalent(&p("a -ab a-b", &mut v), &p("a b", &mut v)));
        assert!(!equivalent(&p("a", &mut v), &p("b", &mut v)));
        assert!(equivalent(
            &p("-ab -bc -ca", &mut v),
            &p("-ac -cb -ba", &mut v)
        ));
    }

    #[test]
    fn consistency_examples() {
        let mut v = Vocabulary::new();
        let f = parse("-x-e", &mut v).unwrap();
        let (x, e) = (v.lookup("x").unwrap(), v.lookup("e").unwrap());
        assert!(!consistent_with(&f, &LiteralSet::new([x.pos(), e.pos()]).unwrap()));

        let f = parse("ab", &mut v).unwrap();
        let a = v.lookup("a").unwrap();
        let b = v.lookup("b").unwrap();
        assert!(consistent_with(&f, &LiteralSet::new([a.neg()]).unwrap()));

        let f = parse("a-b", &mut v).unwrap();
        assert!(!consistent_with(&f, &LiteralSet::new([a.neg(), b.pos()]).unwrap()));
    }

    #[test]
    fn assumptions_outside_the_formula() {
        let mut v = Vocabulary::new();
        let f = parse("a", &mut v).unwrap();
        let z = v.intern("z");
        let solver = Solver::new(&f);
        let model = solver.solve(&[z.neg()]).unwrap();
        assert_eq!(model.get(z), Some(false));
        assert!(!solver.is_consistent(&[z.neg(), z.pos()]));
    }

    #[test]
    fn horn_path_is_used_and_agrees() {
        let mut v = Vocabulary::new();
        let f = parse("-a-b c -cd -d-e", &mut v).unwrap();
        let solver = Solver::new(&f);
        assert!(solver.is_horn());
        let e = v.lookup("e").unwrap();
        let d = v.lookup("d").unwrap();
        for assumptions in [vec![], vec![e.pos()], vec![d.neg()], vec![e.neg()]] {
            let horn = solver.solve(&assumptions);
            let general = solver.solve_general(&assumptions);
            assert_eq!(horn.is_some(), general.is_some());
            if let Some(m) = horn {
                assert!(m.satisfies(&f));
            }
        }
    }
}
