//! Problem files: UTF-8 text, one `key: value` per line, `#` comments.
//!
//! ```text
//! # formula of the outresolve example
//! formula: abx -xc ac
//! forget: x
//! minimal: yes
//! expect-forget: abc ac
//! expect-minimal: abx -xc ac
//! ```
//!
//! `formula:` may repeat and accumulates. `syntax: named` switches every
//! later-parsed value to the `|`-separated grammar. `expect-<section>:`
//! states the items a report section must hold; `expect-minimal` and
//! `expect-forget-minimal` repeat, one formula per line.

use std::collections::BTreeMap;
use std::path::Path;

use forgetsize_core::syntax::{parse_formula, print_formula, Syntax};
use forgetsize_core::{Formula, Var, Vocabulary};

use crate::args::ReportKind;
use crate::error::CliError;

/// Report sections an expectation may name, the report that produces each,
/// and how its value reads.
const EXPECTABLE: [(&str, ReportKind, Shape); 9] = [
    ("closure", ReportKind::Closure, Shape::Clauses),
    ("prime", ReportKind::Prime, Shape::Clauses),
    ("redundant", ReportKind::Redundant, Shape::Clauses),
    ("superredundant", ReportKind::Superredundant, Shape::Clauses),
    ("minimal", ReportKind::Minimal, Shape::Formulas),
    ("minimal-size", ReportKind::Minimal, Shape::Number),
    ("forget", ReportKind::Forget, Shape::Clauses),
    ("forget-minimal", ReportKind::Forget, Shape::Formulas),
    ("min-forget-size", ReportKind::MinForgetSize, Shape::Number),
];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Shape {
    Clauses,
    Formulas,
    Number,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expectation {
    /// Report section compared against.
    pub key: &'static str,
    pub report: ReportKind,
    pub line: usize,
    /// Expected section items in canonical print form, sorted.
    pub items: Vec<String>,
}

#[derive(Clone, Debug)]
pub struct Problem {
    pub vocab: Vocabulary,
    pub syntax: Syntax,
    pub formula: Formula,
    pub forget: Option<Vec<Var>>,
    pub keep: Option<Vec<Var>>,
    pub minimal: bool,
    pub bound: Option<usize>,
    pub expectations: Vec<Expectation>,
}

impl Problem {
    pub fn new(vocab: Vocabulary, syntax: Syntax, formula: Formula) -> Problem {
        Problem {
            vocab,
            syntax,
            formula,
            forget: None,
            keep: None,
            minimal: false,
            bound: None,
            expectations: Vec::new(),
        }
    }

    /// Canonical text of a whole formula; `{}` when it has no clauses.
    pub fn print(&self, f: &Formula) -> String {
        print_formula_or_braces(f, self.syntax, &self.vocab)
    }

    /// Canonical text of each clause, in order.
    pub fn clauses(&self, f: &Formula) -> Vec<String> {
        let text = print_formula(f, self.syntax, &self.vocab);
        text.split_whitespace().map(String::from).collect()
    }

    pub fn var_names(&self, vars: &[Var]) -> Vec<String> {
        let mut names: Vec<String> = vars.iter().map(|v| self.vocab.display(*v)).collect();
        names.sort();
        names
    }
}

fn print_formula_or_braces(f: &Formula, syntax: Syntax, vocab: &Vocabulary) -> String {
    if f.is_empty() {
        String::from("{}")
    } else {
        print_formula(f, syntax, vocab)
    }
}

/// Parses whitespace-separated clause tokens; `{}` alone is the empty formula.
pub fn parse_tokens<'a>(
    tokens: impl IntoIterator<Item = &'a str>,
    syntax: Syntax,
    vocab: &mut Vocabulary,
) -> Result<Formula, forgetsize_core::Error> {
    let tokens: Vec<&str> = tokens.into_iter().collect();
    if tokens == ["{}"] {
        return Ok(Formula::new());
    }
    parse_formula(tokens, syntax, vocab)
}

/// Variable names of a `forget:` or `keep:` value: single letters in the
/// compact syntax, whitespace- or comma-separated names in the named one.
pub fn var_list(text: &str, syntax: Syntax) -> Vec<String> {
    let words = text.split(|c: char| c.is_whitespace() || c == ',').filter(|w| !w.is_empty());
    match syntax {
        Syntax::Compact => words.flat_map(|w| w.chars().map(String::from).collect::<Vec<_>>()).collect(),
        Syntax::Named => words.map(String::from).collect(),
    }
}

pub fn load_problem(path: &Path) -> Result<Problem, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })?;
    parse_problem(&text)
}

fn problem_error(line: usize, message: impl Into<String>) -> CliError {
    CliError::Problem { line, message: message.into() }
}

pub fn parse_problem(text: &str) -> Result<Problem, CliError> {
    let mut entries: Vec<(usize, &str, &str)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let (key, value) = content.split_once(':').ok_or_else(|| problem_error(line, "expected `key: value`"))?;
        entries.push((line, key.trim(), value.trim()));
    }

    let mut seen: BTreeMap<&str, usize> = BTreeMap::new();
    for (line, key, _) in &entries {
        if !key.starts_with("expect-") && *key != "formula" {
            if let Some(first) = seen.insert(key, *line) {
                return Err(problem_error(*line, format!("`{key}` already given on line {first}")));
            }
        }
    }

    let syntax = match entries.iter().find(|(_, k, _)| *k == "syntax") {
        None => Syntax::Compact,
        Some((_, _, "compact")) => Syntax::Compact,
        Some((_, _, "named")) => Syntax::Named,
        Some((line, _, other)) => return Err(problem_error(*line, format!("unknown syntax `{other}`"))),
    };

    let mut vocab = Vocabulary::new();
    let mut formula = None::<Formula>;
    for (line, _, value) in entries.iter().filter(|(_, k, _)| *k == "formula") {
        let part = parse_tokens(value.split_whitespace(), syntax, &mut vocab)
            .map_err(|e| problem_error(*line, e.to_string()))?;
        formula.get_or_insert_with(Formula::new).extend(part);
    }
    let formula = formula.ok_or_else(|| problem_error(entries.last().map_or(1, |e| e.0), "no `formula:` line"))?;
    let mut problem = Problem::new(vocab, syntax, formula);

    let mut grouped: BTreeMap<&str, (usize, Vec<String>)> = BTreeMap::new();
    for (line, key, value) in entries {
        match key {
            "formula" | "syntax" => {}
            "forget" | "keep" => {
                let vars = var_list(value, syntax).iter().map(|n| problem.vocab.intern(n)).collect();
                if key == "forget" {
                    problem.forget = Some(vars);
                } else {
                    problem.keep = Some(vars);
                }
                if problem.forget.is_some() && problem.keep.is_some() {
                    return Err(problem_error(line, "`forget` and `keep` exclude each other"));
                }
            }
            "minimal" => {
                problem.minimal = match value {
                    "yes" | "true" => true,
                    "no" | "false" => false,
                    _ => return Err(problem_error(line, "`minimal` takes yes or no")),
                }
            }
            "bound" => {
                problem.bound = Some(value.parse().map_err(|_| problem_error(line, "`bound` takes a number"))?);
            }
            _ => {
                let Some((name, _, shape)) = key.strip_prefix("expect-").and_then(|n| EXPECTABLE.iter().find(|e| e.0 == n))
                else {
                    return Err(problem_error(line, format!("unknown key `{key}`")));
                };
                let items = expected_items(&mut problem, *shape, value).map_err(|m| problem_error(line, m))?;
                let entry = grouped.entry(name).or_insert((line, Vec::new()));
                if *shape != Shape::Formulas && !entry.1.is_empty() {
                    return Err(problem_error(line, format!("`{key}` already given on line {}", entry.0)));
                }
                entry.1.extend(items);
            }
        }
    }
    for (name, (line, mut items)) in grouped {
        let (key, report, _) = EXPECTABLE.iter().find(|e| e.0 == name).expect("checked above");
        items.sort();
        problem.expectations.push(Expectation { key, report: *report, line, items });
    }
    problem.expectations.sort_by_key(|e| e.line);
    Ok(problem)
}

fn expected_items(problem: &mut Problem, shape: Shape, value: &str) -> Result<Vec<String>, String> {
    match shape {
        Shape::Number => value.parse::<usize>().map(|n| vec![n.to_string()]).map_err(|_| String::from("expected a number")),
        Shape::Clauses | Shape::Formulas => {
            let f = parse_tokens(value.split_whitespace(), problem.syntax, &mut problem.vocab).map_err(|e| e.to_string())?;
            Ok(if shape == Shape::Clauses { problem.clauses(&f) } else { vec![problem.print(&f)] })
        }
    }
}
