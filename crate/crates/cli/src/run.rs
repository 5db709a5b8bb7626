use std::collections::BTreeSet;

use forgetsize_core::forgetting::{forget_by_prime_implicates, min_forget_size, ForgetSpec};
use forgetsize_core::minimization::{minimize, MinimizationResult};
use forgetsize_core::redundancy::{redundant_clauses, superredundant_clauses};
use forgetsize_core::reductions::{
    build_general_p2, build_general_s2, build_horn_conp, build_horn_np, CheckOutcome, Matrix, QbfInstance,
    Quantifiers, ReductionInstance, ReductionKind,
};
use forgetsize_core::resolution::{prime_implicates, resolution_closure};
use forgetsize_core::syntax::{parse_term, print_formula, Syntax};
use forgetsize_core::{Formula, Limits, Var, Vocabulary};

use crate::args::{Input, ReductionConfig, ReportKind, RunConfig};
use crate::error::CliError;
use crate::problem::{load_problem, parse_tokens, Problem};
use crate::report::Report;

/// What a run printed, and why it stopped early if it did.
#[derive(Debug)]
pub struct Outcome {
    pub report: Report,
    pub error: Option<CliError>,
}

impl Outcome {
    pub fn exit_code(&self) -> u8 {
        self.error.as_ref().map_or(0, CliError::exit_code)
    }
}

pub fn run(config: &RunConfig) -> Outcome {
    let mut report = Report::default();
    let result = match &config.reduction {
        Some(r) => run_reduction(config, r, &mut report),
        None => load(config).and_then(|p| analyze(&p, config, &mut report)),
    };
    Outcome { report, error: result.err() }
}

fn core(stage: &'static str) -> impl Fn(forgetsize_core::Error) -> CliError {
    move |e| CliError::from_core(stage, e)
}

fn single_letters(names: &[String]) -> Result<(), CliError> {
    match names.iter().find(|n| !(n.len() == 1 && n.chars().all(|c| c.is_ascii_alphabetic()))) {
        Some(bad) => Err(CliError::Usage(format!("`{bad}` is not a single-letter variable"))),
        None => Ok(()),
    }
}

/// The problem a configuration describes, with flags layered over the file.
pub fn load(config: &RunConfig) -> Result<Problem, CliError> {
    let mut problem = match &config.input {
        Input::File(path) => load_problem(path)?,
        Input::Inline(tokens) => {
            let mut vocab = Vocabulary::new();
            let f = parse_tokens(tokens.iter().map(String::as_str), Syntax::Compact, &mut vocab).map_err(core("parse"))?;
            Problem::new(vocab, Syntax::Compact, f)
        }
    };
    for names in [&config.forget, &config.keep].into_iter().flatten() {
        if problem.syntax == Syntax::Compact {
            single_letters(names)?;
        }
    }
    let mut intern = |names: &Vec<String>| -> Vec<Var> { names.iter().map(|n| problem.vocab.intern(n)).collect() };
    let forget = config.forget.as_ref().map(&mut intern);
    let keep = config.keep.as_ref().map(&mut intern);
    if forget.is_some() || keep.is_some() {
        if (forget.is_some() && problem.keep.is_some()) || (keep.is_some() && problem.forget.is_some()) {
            return Err(CliError::Usage(String::from("-forget and -keep exclude each other")));
        }
        problem.forget = forget.or(problem.forget);
        problem.keep = keep.or(problem.keep);
    }
    problem.minimal |= config.minimal;
    problem.bound = config.bound.or(problem.bound);
    Ok(problem)
}

fn selection(p: &Problem, config: &RunConfig) -> Result<BTreeSet<ReportKind>, CliError> {
    let forgetting = p.forget.is_some() || p.keep.is_some();
    let mut chosen: BTreeSet<ReportKind> = match &config.reports {
        Some(list) => list.iter().copied().collect(),
        None => {
            let mut s = BTreeSet::from([ReportKind::Closure, ReportKind::Prime, ReportKind::Redundant, ReportKind::Superredundant]);
            if p.minimal {
                s.insert(ReportKind::Minimal);
            }
            if forgetting {
                s.extend([ReportKind::Forget, ReportKind::MinForgetSize]);
            }
            s
        }
    };
    chosen.extend(p.expectations.iter().map(|e| e.report));
    if p.bound.is_some() {
        chosen.insert(ReportKind::MinForgetSize);
    }
    let needs_spec = chosen.contains(&ReportKind::Forget) || chosen.contains(&ReportKind::MinForgetSize);
    if needs_spec && !forgetting {
        return Err(CliError::Usage(String::from("forgetting reports need -forget or -keep")));
    }
    Ok(chosen)
}

fn witnesses(p: &Problem, r: &MinimizationResult) -> Vec<String> {
    let mut out: Vec<String> = r.witnesses.iter().map(|w| p.print(w)).collect();
    out.sort();
    out
}

fn analyze(p: &Problem, config: &RunConfig, report: &mut Report) -> Result<(), CliError> {
    let chosen = selection(p, config)?;
    let lim: Limits = config.limits;
    let f = &p.formula;
    report.inline("formula", "formula", p.clauses(f));
    report.inline("size", "size", vec![f.size().to_string()]);

    if chosen.contains(&ReportKind::Closure) {
        let closure = resolution_closure(f, lim.closure).map_err(core("resolution closure"))?.closure;
        report.block("closure", format!("resolution closure ({} clauses)", closure.len()), p.clauses(&closure));
    }
    if chosen.contains(&ReportKind::Prime) {
        let prime = prime_implicates(f, lim.closure).map_err(core("prime implicates"))?;
        report.block("prime", "prime implicates", p.clauses(&prime));
    }
    if chosen.contains(&ReportKind::Redundant) {
        report.block("redundant", "redundant clauses", p.clauses(&redundant_clauses(f)));
    }
    if chosen.contains(&ReportKind::Superredundant) {
        report.block("superredundant", "superredundant clauses", p.clauses(&superredundant_clauses(f)));
    }
    if chosen.contains(&ReportKind::Minimal) {
        let r = minimize(f, &lim).map_err(core("minimization"))?;
        report.inline("minimal-size", "minimal size", vec![r.min_size.to_string()]);
        report.block("minimal", "minimal equivalent formulas", witnesses(p, &r));
    }

    if chosen.contains(&ReportKind::Forget) || chosen.contains(&ReportKind::MinForgetSize) {
        let spec = match (&p.forget, &p.keep) {
            (Some(forget), _) => ForgetSpec::forgetting(f.clone(), forget.iter().copied()),
            (None, Some(keep)) => ForgetSpec::keeping(f.clone(), keep.iter().copied()),
            (None, None) => unreachable!("checked by selection"),
        };
        let forgotten: Vec<Var> = spec.forgotten().into_iter().collect();
        report.inline("forget-vars", "forgotten variables", p.var_names(&forgotten));
        let mut found = None;
        if chosen.contains(&ReportKind::Forget) {
            let g = forget_by_prime_implicates(&spec, &lim).map_err(core("forgetting"))?;
            report.block("forget", "forgetting result", p.clauses(&g));
            let r = minimize(&g, &lim).map_err(core("forgetting"))?;
            report.block("forget-minimal", "its minimal equivalent formulas", witnesses(p, &r));
            found = Some(r.min_size);
        }
        if chosen.contains(&ReportKind::MinForgetSize) {
            let size = match found {
                Some(size) => size,
                None => min_forget_size(&spec, &lim).map_err(core("min-forget-size"))?.min_size,
            };
            report.inline("min-forget-size", "minimum size after forgetting", vec![size.to_string()]);
            if let Some(k) = p.bound {
                let verdict = if size <= k { "met" } else { "exceeded" };
                report.inline("bound", "bound", vec![format!("{k} {verdict}")]);
            }
        }
    }

    check_expectations(p, report)
}

fn check_expectations(p: &Problem, report: &mut Report) -> Result<(), CliError> {
    if p.expectations.is_empty() {
        return Ok(());
    }
    let mut lines = Vec::new();
    let mut failed = 0;
    for e in &p.expectations {
        let mut got = report.section(e.key).map(|s| s.items.clone()).unwrap_or_default();
        got.sort();
        if got == e.items {
            lines.push(format!("{} ok", e.key));
        } else {
            failed += 1;
            lines.push(format!("{} mismatch (line {}): expected [{}], got [{}]", e.key, e.line, e.items.join(", "), got.join(", ")));
        }
    }
    report.block("expect", "expectations", lines);
    if failed > 0 {
        Err(CliError::Mismatch(failed))
    } else {
        Ok(())
    }
}

fn build(config: &RunConfig, r: &ReductionConfig, tokens: &[String]) -> Result<ReductionInstance, CliError> {
    let mut vocab = Vocabulary::new();
    let lim = config.limits;
    let tokens = tokens.iter().map(String::as_str);
    single_letters(&r.outer)?;
    let outer: Vec<Var> = r.outer.iter().map(|n| vocab.intern(n)).collect();
    Ok(match r.kind {
        ReductionKind::HornConp | ReductionKind::HornNp => {
            let f = parse_tokens(tokens, Syntax::Compact, &mut vocab).map_err(core("parse"))?;
            if r.kind == ReductionKind::HornConp {
                build_horn_conp(&f)
            } else {
                build_horn_np(&f)
            }
        }
        ReductionKind::GeneralP2 => {
            let f = parse_tokens(tokens, Syntax::Compact, &mut vocab).map_err(core("parse"))?;
            let q = QbfInstance::new(Quantifiers::ForallExists, outer, Matrix::Cnf(f)).map_err(core("parse"))?;
            build_general_p2(&q, &lim).map_err(core("reduction"))?
        }
        ReductionKind::GeneralS2 => {
            let terms = tokens
                .filter(|t| *t != "{}")
                .map(|t| parse_term(t, &mut vocab))
                .collect::<Result<Vec<_>, _>>()
                .map_err(core("parse"))?;
            let q = QbfInstance::new(Quantifiers::ExistsForall, outer, Matrix::Dnf(terms)).map_err(core("parse"))?;
            build_general_s2(&q, &lim).map_err(core("reduction"))?
        }
    })
}

fn run_reduction(config: &RunConfig, r: &ReductionConfig, report: &mut Report) -> Result<(), CliError> {
    let Input::Inline(tokens) = &config.input else {
        return Err(CliError::Usage(String::from("-reduction reads its source from the command line")));
    };
    if tokens.is_empty() {
        return Err(CliError::Usage(String::from("no source tokens given (use {} for an empty source)")));
    }
    let inst = build(config, r, tokens)?;
    let print = |f: &Formula| print_formula(f, Syntax::Named, &inst.vocab);
    report.comment("reduction", "reduction", vec![inst.kind.name().to_string()]);
    report.comment("source", "source", vec![tokens.join(" ")]);
    if !r.outer.is_empty() {
        report.comment("outer", "outer", vec![r.outer.join("")]);
    }
    report.comment("source-answer", "source answer", vec![inst.source_answer.to_string()]);
    if let Some(c) = &inst.candidate {
        report.comment("candidate", "candidate", vec![print(c)]);
    }
    let families = inst.families.iter().map(|(name, f)| format!("{name} {}", print(f))).collect();
    report.comment("family", "family", families);
    report.inline("syntax", "syntax", vec![String::from("named")]);
    report.inline("formula", "formula", print(&inst.formula).split_whitespace().map(String::from).collect());
    let mut keep: Vec<String> = inst.keep.iter().map(|v| inst.vocab.display(*v)).collect();
    keep.sort();
    report.inline("keep", "keep", keep);
    report.inline("bound", "bound", vec![inst.bound.to_string()]);

    if !r.verify {
        return Ok(());
    }
    let result = forgetsize_core::reductions::verify_reduction(&inst, r.exhaustive, &config.limits);
    let mut failed = 0;
    let mut first_error = None;
    let lines = result
        .checks
        .iter()
        .map(|c| {
            let state = match &c.outcome {
                CheckOutcome::Passed => String::from("passed"),
                CheckOutcome::Skipped => String::from("skipped"),
                CheckOutcome::Failed(why) => {
                    failed += 1;
                    format!("failed: {why}")
                }
                CheckOutcome::Error(e) => {
                    first_error.get_or_insert_with(|| e.clone());
                    format!("error: {e}")
                }
            };
            format!("{} {state}", c.name)
        })
        .collect();
    report.comment("check", "check", lines);
    match first_error {
        Some(e) => Err(CliError::from_core("verify", e)),
        None if failed > 0 => Err(CliError::ChecksFailed(failed)),
        None => Ok(()),
    }
}
