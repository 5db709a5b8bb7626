//! Acceptance run: one line per criterion. Exits non-zero when a criterion
//! fails in a way not listed in `KNOWN_FAILURES`, or when a listed failure
//! stops happening.

use std::collections::BTreeSet;
use std::process::Command;
use std::time::Instant;

use forgetsize_core::forgetting::{
    expresses_forgetting, forget_all, forget_all_ordered, forget_by_prime_implicates, forget_one, min_forget_size,
    ForgetOrder, ForgetSpec,
};
use forgetsize_core::minimization::{is_minimal, minimize};
use forgetsize_core::redundancy::{
    is_redundant, is_superredundant, redundant_clauses, superirredundant_clauses, superredundant_by, Method,
};
use forgetsize_core::reductions::{
    build_general_p2, build_general_s2, build_horn_conp, build_horn_np, verify_reduction, CheckOutcome, Matrix,
    QbfInstance, Quantifiers, ReductionInstance, CHECK_BOUND, CHECK_CANDIDATE, CHECK_FORCED, CHECK_FORCED_CLAUSES,
    CHECK_MINIMAL,
};
use forgetsize_core::resolution::{prime_implicates, resolution_closure};
use forgetsize_core::sat::{equivalent, is_satisfiable};
use forgetsize_core::splitting::{analyze_split, partitions, split, SplitPlan};
use forgetsize_core::syntax::{parse_formula_str, parse_term, print_formula, Syntax};
use forgetsize_core::{Clause, Formula, Limits, Lit, LiteralSet, Var, Vocabulary};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 0x5eed_f0e7;
const CAP: usize = 100_000;

/// Criteria expected to fail, with the reason printed next to the verdict.
const KNOWN_FAILURES: [(usize, &str); 1] = [(
    6,
    "general_s2 on ∃x∀y. y ∨ ¬y: A is not minimal (a 26-literal formula is equivalent to the 36-literal A), \
     so check (1) fails as the construction is stated",
)];

const KNOWN_S2_FAILURE: &str = "general_s2 minimal on outer [x] y | -y";

type Verdict = Result<String, String>;
type Criterion = (&'static str, fn() -> Verdict);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn lim() -> Limits {
    Limits { pool: 40, ..Limits::default() }
}

fn random_clause(rng: &mut ChaCha8Rng, vars: u32, max_len: usize) -> Clause {
    let len = rng.gen_range(1..=max_len);
    let mut chosen: Vec<u32> = (0..vars).collect();
    chosen.shuffle(rng);
    Clause::new(chosen[..len.min(vars as usize)].iter().map(|v| Lit::new(Var::new(*v), rng.gen_bool(0.5)))).unwrap()
}

fn random_formula(rng: &mut ChaCha8Rng, vars: u32, max_clauses: usize, max_len: usize) -> Formula {
    let n = rng.gen_range(1..=max_clauses);
    (0..n).map(|_| random_clause(rng, vars, max_len)).collect()
}

fn random_vars(rng: &mut ChaCha8Rng, vars: impl IntoIterator<Item = Var>) -> Vec<Var> {
    vars.into_iter().filter(|_| rng.gen_bool(0.5)).collect()
}

fn superredundant(f: &Formula, c: &Clause) -> bool {
    is_superredundant(f, c).unwrap().superredundant
}

struct Parsed {
    v: Vocabulary,
}

impl Parsed {
    fn f(&mut self, text: &str) -> Formula {
        parse_formula_str(text, &mut self.v).unwrap()
    }

    fn c(&mut self, text: &str) -> Clause {
        self.f(text).into_iter().next().unwrap()
    }

    fn var(&mut self, name: &str) -> Var {
        self.v.intern(name)
    }
}

fn parsed() -> Parsed {
    Parsed { v: Vocabulary::new() }
}

fn example_replay() -> Verdict {
    let mut checks = 0;
    let mut check = |ok: bool, what: &str| -> Result<(), String> {
        checks += 1;
        if ok {
            Ok(())
        } else {
            Err(format!("failed: {what}"))
        }
    };

    let mut p = parsed();
    let f = p.f("a -ab a-b");
    let r = minimize(&f, &lim()).unwrap();
    let a = p.c("a");
    check(f.size() == 5, "(a) size 5")?;
    check(r.witnesses == [p.f("a b")], "(a) unique minimal {a, b}")?;
    check(superredundant(&f, &a) && r.witnesses[0].contains(&a), "(a) a superredundant yet kept")?;

    let mut p = parsed();
    let f = p.f("a -ab -ba");
    let a = p.c("a");
    check(!is_redundant(&f, &a).unwrap() && superredundant(&f, &a), "(b) a irredundant and superredundant")?;

    let mut p = parsed();
    let f = p.f("-ab -bc -ca");
    check(is_minimal(&f, &lim()).unwrap(), "(c) minimal")?;
    check(f.iter().all(|c| superredundant(&f, c)), "(c) all clauses superredundant")?;

    let mut p = parsed();
    let f = p.f("abx -xc ac");
    let x = p.var("x");
    let g = forget_one(&f, x);
    check(is_minimal(&f, &lim()).unwrap(), "(d) minimal")?;
    check(g == p.f("abc ac") && redundant_clauses(&g) == p.f("abc"), "(d) resolving out x leaves abc redundant")?;

    let mut p = parsed();
    let f = p.f("abc -ad -cd -dac");
    let (target, part1, part2) = (p.c("abc"), p.c("a"), p.c("bc"));
    let x = p.var("x");
    check(superredundant(&f, &target), "(e) abc superredundant")?;
    let plan = SplitPlan::new(&f, target, part1, part2, x).unwrap();
    let g = split(&f, &plan).unwrap();
    check(g.len() == 5 && superirredundant_clauses(&g) == g, "(e) all five clauses superirredundant after split")?;

    // not set-value: superredundancy lost when x is set to true
    let mut p = parsed();
    let f = p.f("a-x a x");
    let a = p.c("a");
    let x = p.var("x");
    let g = f.substitute(x, true);
    check(superredundant(&f, &a) && g == p.f("a") && !superredundant(&g, &a), "(f) notsetvalue")?;

    // set value with no resolution left
    let mut p = parsed();
    let f = p.f("ab bc -b-d -cde");
    let ab = p.c("ab");
    let (c, d) = (p.var("c"), p.var("d"));
    let g = f.substitute(c, true).substitute(d, false);
    check(g == p.f("ab e") && !superredundant(&g, &ab) && !superredundant(&f, &ab), "(f) setvaluenoresolution")?;

    // a part already superredundant makes the split useless
    let mut p = parsed();
    let f = p.f("ab -ac a-c");
    let (ab, a, b) = (p.c("ab"), p.c("a"), p.c("b"));
    let x = p.var("x");
    let plan = SplitPlan::new(&f, ab.clone(), a.clone(), b, x).unwrap();
    let report = analyze_split(&f, &plan).unwrap();
    let g = split(&f, &plan).unwrap();
    let ax = p.c("ax");
    check(superredundant(&f, &ab), "(f) alreadybefore: ab superredundant")?;
    check(report.violations.len() == 1 && report.violations[0].part == a, "(f) alreadybefore: part a flagged")?;
    check(superredundant(&g, &ax), "(f) alreadybefore: ax superredundant after split")?;

    // splitting one clause damages another that resolves with both parts
    let mut p = parsed();
    let f = p.f("abcd -ab-cd ae -e-a-c");
    let (target, part1, part2, abcd) = (p.c("-ab-cd"), p.c("-ab"), p.c("-cd"), p.c("abcd"));
    let x = p.var("x");
    let plan = SplitPlan::new(&f, target.clone(), part1, part2, x).unwrap();
    let g = split(&f, &plan).unwrap();
    check(superredundant(&f, &target) && !superredundant(&f, &abcd), "(f) bothparts: before the split")?;
    check(analyze_split(&f, &plan).unwrap().collateral == p.f("abcd"), "(f) bothparts: abcd flagged")?;
    check(superredundant(&g, &abcd), "(f) bothparts: abcd superredundant after the split")?;

    Ok(format!("{checks} checks"))
}

fn criterion_agreement() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let (mut clauses, mut positive) = (0, 0);
    for _ in 0..1000 {
        let f = random_formula(&mut rng, 5, 6, 3);
        for c in &f {
            let verdicts: Vec<bool> = [Method::Definition, Method::FirstStep, Method::OneTwo]
                .into_iter()
                .map(|m| superredundant_by(&f, c, m, CAP).unwrap().superredundant)
                .collect();
            ensure!(verdicts.iter().all(|v| *v == verdicts[0]), "disagreement {verdicts:?} on {f:?} / {c:?}");
            clauses += 1;
            positive += verdicts[0] as usize;
        }
    }
    Ok(format!("1000 formulas, {clauses} clauses, {positive} superredundant"))
}

fn forgetting_correctness() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 1);
    for _ in 0..500 {
        let f = random_formula(&mut rng, 5, 6, 3);
        let keep = random_vars(&mut rng, (0..5).map(Var::new));
        let spec = ForgetSpec::keeping(f.clone(), keep);
        let a = forget_all(&spec, &lim()).unwrap();
        let b = forget_by_prime_implicates(&spec, &lim()).unwrap();
        ensure!(expresses_forgetting(&a, &spec, &lim()).unwrap(), "forget_all on {spec:?}");
        ensure!(expresses_forgetting(&b, &spec, &lim()).unwrap(), "prime implicates on {spec:?}");
        ensure!(equivalent(&a, &b), "routes differ on {spec:?}");
        let greedy = forget_all_ordered(&spec, ForgetOrder::Greedy, &lim()).unwrap();
        let mut order: Vec<Var> = spec.forgotten().into_iter().collect();
        order.shuffle(&mut rng);
        let shuffled = order.iter().fold(f.clone(), |g, x| forget_one(&g, *x));
        ensure!(equivalent(&a, &greedy) && equivalent(&a, &shuffled), "order matters on {spec:?}");
    }
    Ok(String::from("500 formulas, three orders each"))
}

/// Equivalent rewrites of `f`: an added consequence, a weakened copy of a
/// clause, the prime implicates, and `f` without a redundant clause.
fn variants(rng: &mut ChaCha8Rng, f: &Formula) -> Vec<Formula> {
    let mut out = Vec::new();
    let closure: Vec<Clause> = resolution_closure(f, CAP).unwrap().closure.into_iter().collect();
    if let Some(c) = closure.choose(rng) {
        out.push(f.with(c.clone()));
    }
    let clauses: Vec<&Clause> = f.iter().collect();
    if let Some(c) = clauses.choose(rng) {
        let extra = Lit::new(Var::new(rng.gen_range(0..4)), rng.gen_bool(0.5));
        if let Ok(weaker) = c.with(extra) {
            out.push(f.with(weaker));
        }
    }
    out.push(prime_implicates(f, CAP).unwrap());
    if let Some(c) = redundant_clauses(f).iter().next() {
        out.push(f.without(c));
    }
    out
}

fn superirredundancy_and_minimality() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 2);
    let (mut all_superirredundant, mut variants_checked) = (0, 0);
    for _ in 0..300 {
        let f = random_formula(&mut rng, 4, 6, 3);
        let r = minimize(&f, &lim()).unwrap();
        let forced = superirredundant_clauses(&f);
        ensure!(r.witnesses.iter().all(|w| forced.is_subset_of(w)), "forced clause missing on {f:?}");
        if forced == f {
            all_superirredundant += 1;
            ensure!(r.min_size == f.size(), "all superirredundant but not minimal: {f:?}");
        }
        for g in variants(&mut rng, &f) {
            ensure!(equivalent(&f, &g), "variant generator broke equivalence");
            let s = minimize(&g, &lim()).unwrap();
            ensure!((s.min_size, &s.witnesses) == (r.min_size, &r.witnesses), "{f:?} and {g:?} minimize apart");
            variants_checked += 1;
        }
    }
    Ok(format!("300 formulas, {all_superirredundant} all-superirredundant, {variants_checked} variants"))
}

fn split_properties() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 3);
    let (mut plans, mut clear) = (0, 0);
    while plans < 300 {
        let f = random_formula(&mut rng, 5, 6, 3);
        let targets: Vec<&Clause> = f.iter().filter(|c| c.len() >= 2).collect();
        let Some(target) = targets.choose(&mut rng) else { continue };
        let (p1, p2) = partitions(target).choose(&mut rng).unwrap().clone();
        let x = Var::new(9);
        let plan = SplitPlan::new(&f, (*target).clone(), p1, p2, x).unwrap();
        let g = split(&f, &plan).unwrap();
        plans += 1;
        let spec = ForgetSpec::forgetting(g.clone(), [x]);
        ensure!(expresses_forgetting(&f, &spec, &lim()).unwrap(), "original does not express forgetting: {f:?}");
        if analyze_split(&f, &plan).unwrap().is_clear() {
            clear += 1;
            let kept = superirredundant_clauses(&g);
            ensure!(kept.contains(&plan.first()) && kept.contains(&plan.second()), "parts superredundant: {plan:?}");
            for c in superirredundant_clauses(&f).iter().filter(|c| **c != plan.target) {
                ensure!(kept.contains(c), "{c:?} lost superirredundancy in {plan:?}");
            }
        }
    }

    // the three side conditions of splitting
    let mut p = parsed();
    let (abx, ax, a, ab) = (p.c("abx"), p.c("ax"), p.c("a"), p.c("ab"));
    let without_target = p.f("abx a-x");
    ensure!(superredundant(&without_target, &abx) && !superredundant(&p.f("ab"), &ab), "clause-not-in-F case");
    let part_present = p.f("abx a-x");
    ensure!(superredundant(&part_present, &abx) && !superredundant(&p.f("ab"), &ab), "part-in-F case");
    let mentions_x = p.f("x ax b-x");
    ensure!(superredundant(&mentions_x, &ax) && !superredundant(&p.f("ab x a"), &a), "F-mentions-x case");

    Ok(format!("{plans} plans, {clear} without hazards, 3 side-condition counterexamples"))
}

fn failing_checks(inst: &ReductionInstance, exhaustive: bool) -> Result<Vec<&'static str>, String> {
    let report = verify_reduction(inst, exhaustive, &lim());
    let mut failed = Vec::new();
    for check in report.checks.iter().filter(|c| c.name != CHECK_FORCED_CLAUSES) {
        match &check.outcome {
            CheckOutcome::Passed | CheckOutcome::Skipped => {}
            CheckOutcome::Failed(_) => failed.push(check.name),
            CheckOutcome::Error(e) => return Err(format!("{} on {:?}: {} {e}", inst.kind, inst.source, check.name)),
        }
    }
    Ok(failed)
}

fn small_cnfs(vars: &[Var]) -> Vec<Formula> {
    let mut clauses = Vec::new();
    for code in 1..3usize.pow(vars.len() as u32) {
        let lits = vars.iter().enumerate().filter_map(|(i, v)| match code / 3usize.pow(i as u32) % 3 {
            1 => Some(v.pos()),
            2 => Some(v.neg()),
            _ => None,
        });
        clauses.push(Clause::new(lits).unwrap());
    }
    let mut out = vec![Formula::new()];
    for (i, a) in clauses.iter().enumerate() {
        out.push(Formula::from_iter([a.clone()]));
        for b in &clauses[i + 1..] {
            out.push(Formula::from_iter([a.clone(), b.clone()]));
        }
    }
    out
}

fn small_qbfs(order: Quantifiers) -> Vec<QbfInstance> {
    let (x, y) = (Var::new(0), Var::new(1));
    let mut out = Vec::new();
    for (outer, vars) in [(vec![], vec![y]), (vec![x], vec![x, y])] {
        for f in small_cnfs(&vars) {
            let matrix = match order {
                Quantifiers::ForallExists => Matrix::Cnf(f),
                Quantifiers::ExistsForall => Matrix::Dnf(f.iter().map(|c| LiteralSet::new(c.iter()).unwrap()).collect()),
            };
            out.push(QbfInstance::with_blocks(order, outer.clone(), [y], matrix).unwrap());
        }
    }
    out
}

fn qbf(order: Quantifiers, outer: &str, matrix: &[&str]) -> QbfInstance {
    let mut v = Vocabulary::new();
    let outer: Vec<Var> = outer.chars().map(|c| v.intern(&c.to_string())).collect();
    let matrix = match order {
        Quantifiers::ForallExists => Matrix::Cnf(parse_formula_str(&matrix.join(" "), &mut v).unwrap()),
        Quantifiers::ExistsForall => Matrix::Dnf(matrix.iter().map(|t| parse_term(t, &mut v).unwrap()).collect()),
    };
    QbfInstance::new(order, outer, matrix).unwrap()
}

fn reduction_sweep() -> Verdict {
    let mut failures: Vec<String> = Vec::new();
    let mut instances = 0;
    let mut clause_check_failures = 0;
    let mut note = |inst: &ReductionInstance, failed: Vec<&'static str>| {
        instances += 1;
        if !failed.is_empty() {
            failures.push(format!("{} {} on {}", inst.kind, failed.join("+"), describe(inst)));
        }
    };

    let (x, y) = (Var::new(0), Var::new(1));
    for f in small_cnfs(&[x, y]) {
        for inst in [build_horn_conp(&f), build_horn_np(&f)] {
            ensure!(inst.formula.is_horn(), "{} not Horn on {f:?}", inst.kind);
            ensure!(inst.bound == inst.bound_from_families(), "{} bound mismatch", inst.kind);
            note(&inst, failing_checks(&inst, false)?);
        }
    }
    for q in small_qbfs(Quantifiers::ForallExists) {
        let inst = build_general_p2(&q, &lim()).unwrap();
        ensure!(inst.bound == inst.bound_from_families(), "general_p2 bound mismatch");
        note(&inst, failing_checks(&inst, false)?);
    }
    for q in small_qbfs(Quantifiers::ExistsForall) {
        let inst = build_general_s2(&q, &lim()).unwrap();
        ensure!(inst.bound == inst.bound_from_families(), "general_s2 bound mismatch");
        let report = verify_reduction(&inst, false, &lim());
        clause_check_failures += matches!(report.outcome(CHECK_FORCED_CLAUSES), Some(CheckOutcome::Failed(_))) as usize;
        note(&inst, failing_checks(&inst, false)?);
    }

    // check (4) on one source per answer and kind
    let mut p = parsed();
    let (sat, unsat) = (p.f("x"), p.f("x -x"));
    let mut exhaustive = Vec::new();
    for f in [&sat, &unsat] {
        exhaustive.push(build_horn_conp(f));
        exhaustive.push(build_horn_np(f));
    }
    exhaustive.push(build_general_p2(&qbf(Quantifiers::ForallExists, "x", &["xy", "-x-y"]), &lim()).unwrap());
    exhaustive.push(build_general_p2(&qbf(Quantifiers::ForallExists, "x", &["x"]), &lim()).unwrap());
    exhaustive.push(build_general_s2(&qbf(Quantifiers::ExistsForall, "x", &["x"]), &lim()).unwrap());
    exhaustive.push(build_general_s2(&qbf(Quantifiers::ExistsForall, "x", &["xy"]), &lim()).unwrap());
    for inst in &exhaustive {
        let report = verify_reduction(inst, true, &lim());
        let bound = report.outcome(CHECK_BOUND);
        ensure!(bound == Some(&CheckOutcome::Passed), "{} check (4) on {}: {bound:?}", inst.kind, describe(inst));
        for name in [CHECK_MINIMAL, CHECK_CANDIDATE, CHECK_FORCED] {
            let outcome = report.outcome(name);
            ensure!(
                matches!(outcome, None | Some(CheckOutcome::Passed | CheckOutcome::Skipped)),
                "{} {name} on {}: {outcome:?}",
                inst.kind,
                describe(inst)
            );
        }
    }
    let answers: BTreeSet<(String, bool)> = exhaustive.iter().map(|i| (i.kind.to_string(), i.source_answer)).collect();
    ensure!(answers.len() == 8, "check (4) did not cover both answers of every kind: {answers:?}");

    let summary = format!(
        "{instances} instances checked, check (4) on 8; extra clause check failed on {clause_check_failures} general_s2 sources"
    );
    if failures.is_empty() {
        Ok(summary)
    } else {
        Err(format!("{summary}; checks (1)-(3) failed: {}", failures.join("; ")))
    }
}

fn describe(inst: &ReductionInstance) -> String {
    use forgetsize_core::reductions::Source;
    let name = |l: Lit| format!("{}{}", if l.is_positive() { "" } else { "-" }, ["x", "y"][(l.var().index() as usize).min(1)]);
    let join = |ls: Vec<String>, sep: &str| ls.join(sep);
    match &inst.source {
        Source::Cnf(f) => format!("{f:?}"),
        Source::Qbf(q) => {
            let outer: Vec<String> = q.outer.iter().map(|x| name(x.pos())).collect();
            let matrix = match &q.matrix {
                Matrix::Cnf(f) => join(f.iter().map(|c| join(c.iter().map(name).collect(), " | ")).collect(), " & "),
                Matrix::Dnf(t) => join(t.iter().map(|c| join(c.iter().map(name).collect(), " & ")).collect(), " | "),
            };
            format!("outer [{}] {}", outer.join(" "), matrix)
        }
    }
}

fn additivity() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 4);
    let mut pairs = 0;
    while pairs < 25 {
        let f = random_formula(&mut rng, 3, 3, 3);
        let g: Formula = random_formula(&mut rng, 3, 3, 3)
            .iter()
            .map(|c| Clause::new(c.iter().map(|l| Lit::new(Var::new(l.var().index() + 3), l.is_positive()))).unwrap())
            .collect();
        // an unsatisfiable part collapses the union to the empty clause
        if !is_satisfiable(&f) || !is_satisfiable(&g) {
            continue;
        }
        let kf = random_vars(&mut rng, (0..3).map(Var::new));
        let kg = random_vars(&mut rng, (3..6).map(Var::new));
        let a = min_forget_size(&ForgetSpec::keeping(f.clone(), kf.clone()), &lim()).unwrap().min_size;
        let b = min_forget_size(&ForgetSpec::keeping(g.clone(), kg.clone()), &lim()).unwrap().min_size;
        let both = min_forget_size(&ForgetSpec::keeping(f.union(&g), kf.into_iter().chain(kg)), &lim()).unwrap().min_size;
        ensure!(both == a + b, "{both} != {a} + {b} on {f:?} and {g:?}");
        pairs += 1;
    }
    Ok(format!("{pairs} pairs"))
}

fn cli_conformance() -> Verdict {
    let args = ["-f", "-minimal", "-forget", "c", "a=bc", "c->d", "da", "-machine"];
    let mut outputs = Vec::new();
    for _ in 0..3 {
        let o = Command::new(env!("CARGO_BIN_EXE_minimize")).args(args).output().map_err(|e| e.to_string())?;
        ensure!(o.status.code() == Some(0), "exit status {:?}", o.status.code());
        outputs.push(o.stdout);
    }
    ensure!(outputs.windows(2).all(|w| w[0] == w[1]), "outputs differ between runs");
    let text = String::from_utf8(outputs[0].clone()).map_err(|e| e.to_string())?;
    ensure!(text.lines().any(|l| l == "min-forget-size\t3"), "unexpected output:\n{text}");
    let mut v = Vocabulary::new();
    let expected = print_formula(&parse_formula_str("-ab d", &mut v).unwrap(), Syntax::Compact, &v);
    ensure!(text.lines().any(|l| l == format!("forget-minimal\t{expected}")), "unexpected forgetting result");
    Ok(format!("3 runs, {} identical bytes", outputs[0].len()))
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("example replay", example_replay),
        ("superredundancy criteria agree", criterion_agreement),
        ("forgetting correctness", forgetting_correctness),
        ("superirredundancy and minimality", superirredundancy_and_minimality),
        ("clause splitting", split_properties),
        ("reduction verification at desk scale", reduction_sweep),
        ("additivity on disjoint alphabets", additivity),
        ("CLI conformance", cli_conformance),
    ];
    let mut unexpected = 0;
    for (i, (name, criterion)) in criteria.iter().enumerate() {
        let n = i + 1;
        let start = Instant::now();
        let verdict = std::panic::catch_unwind(criterion).unwrap_or_else(|_| Err(String::from("panicked")));
        let secs = start.elapsed().as_secs_f64();
        let known = KNOWN_FAILURES.iter().find(|(k, _)| *k == n).map(|(_, why)| *why);
        match (&verdict, known) {
            (Ok(detail), None) => println!("criterion {n} {name}: PASS ({secs:.2}s) {detail}"),
            (Ok(detail), Some(_)) => {
                unexpected += 1;
                println!("criterion {n} {name}: PASS ({secs:.2}s) {detail}; listed as a known failure, update the list");
            }
            (Err(detail), None) => {
                unexpected += 1;
                println!("criterion {n} {name}: FAIL ({secs:.2}s) {detail}");
            }
            (Err(detail), Some(why)) => {
                println!("criterion {n} {name}: FAIL ({secs:.2}s) {detail}");
                println!("    known failure: {why}");
                let only_known = detail
                    .split_once("checks (1)-(3) failed: ")
                    .is_some_and(|(_, list)| list.split("; ").all(|f| f == KNOWN_S2_FAILURE));
                if !only_known {
                    unexpected += 1;
                    println!("    the failure differs from the known one");
                }
            }
        }
    }
    if unexpected > 0 {
        std::process::exit(1);
    }
}
