//! Textual clause syntax.
//!
//! The compact grammar uses single-letter variables and needs no
//! separators:
//!
//! ```text
//! token    := literals | literals "->" literals | literal "=" literals
//! literals := literal+
//! literal  := "-"? ASCII-letter
//! ```
//!
//! `da` is `d ∨ a`; `c->d` is `¬c ∨ d` (every left literal negated);
//! `a=bc` is the three clauses `¬a ∨ b`, `¬a ∨ c`, `¬b ∨ ¬c ∨ a`.
//!
//! The named grammar carries arbitrary identifiers and separates the
//! literals of a clause with `|`, as in `-x1|-e1`. Both grammars write the
//! empty clause as `[]`.

use alloc::string::String;
use alloc::vec::Vec;

use crate::cnf::{Clause, Formula, Lit, LiteralSet, Vocabulary};
use crate::error::{Error, Result};

pub const EMPTY_CLAUSE: &str = "[]";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Syntax {
    /// Single-letter variables, no separators.
    #[default]
    Compact,
    /// Identifiers, `|` between literals.
    Named,
}

fn syntax_error(token: &str, offset: usize, message: &'static str) -> Error {
    Error::Syntax {
        token: String::from(token),
        offset,
        message,
    }
}

/// Parses a literal string starting at byte `start` of `token`.
fn compact_literals(
    token: &str,
    start: usize,
    part: &str,
    vocab: &mut Vocabulary,
) -> Result<Vec<Lit>> {
    let mut lits = Vec::new();
    let mut negate = false;
    for (i, ch) in part.char_indices() {
        match ch {
            '-' if !negate => negate = true,
            c if c.is_ascii_alphabetic() => {
                let mut buf = [0u8; 4];
                let var = vocab.intern(c.encode_utf8(&mut buf));
                lits.push(Lit::new(var, !negate));
                negate = false;
            }
            '-' => return Err(syntax_error(token, start + i, "double negation")),
            _ => return Err(syntax_error(token, start + i, "expected a letter or '-'")),
        }
    }
    if negate {
        return Err(syntax_error(token, start + part.len(), "dangling '-'"));
    }
    if lits.is_empty() {
        return Err(syntax_error(token, start, "expected at least one literal"));
    }
    Ok(lits)
}

fn clause_or_tautology(lits: impl IntoIterator<Item = Lit>) -> Result<Clause> {
    Clause::new(lits)
}

/// Parses one compact clause token into the clauses it stands for.
pub fn parse_clause_token(token: &str, vocab: &mut Vocabulary) -> Result<Formula> {
    if token == EMPTY_CLAUSE {
        return Ok(Formula::from_iter([Clause::empty()]));
    }
    if let Some(arrow) = token.find("->") {
        let (lhs, rhs) = (&token[..arrow], &token[arrow + 2..]);
        let body = compact_literals(token, 0, lhs, vocab)?;
        let head = compact_literals(token, arrow + 2, rhs, vocab)?;
        let clause = clause_or_tautology(body.into_iter().map(Lit::negate).chain(head))?;
        return Ok(Formula::from_iter([clause]));
    }
    if let Some(eq) = token.find('=') {
        let (lhs, rhs) = (&token[..eq], &token[eq + 1..]);
        let left = compact_literals(token, 0, lhs, vocab)?;
        if left.len() != 1 {
            return Err(syntax_error(token, 0, "'=' needs a single literal on the left"));
        }
        let l = left[0];
        let right = compact_literals(token, eq + 1, rhs, vocab)?;
        let mut out = Formula::new();
        for &r in &right {
            out.insert(clause_or_tautology([!l, r])?);
        }
        out.insert(clause_or_tautology(
            right.iter().map(|&r| !r).chain(core::iter::once(l)),
        )?);
        return Ok(out);
    }
    let lits = compact_literals(token, 0, token, vocab)?;
    Ok(Formula::from_iter([clause_or_tautology(lits)?]))
}

fn is_name_start(c: char) -> bool {
    c.is_ascii_alphabetic() || c == '_'
}

fn is_name_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_' || c == '\''
}

fn named_literal(token: &str, start: usize, text: &str, vocab: &mut Vocabulary) -> Result<Lit> {
    let (positive, name, offset) = match text.strip_prefix('-') {
        Some(rest) => (false, rest, start + 1),
        None => (true, text, start),
    };
    let mut chars = name.char_indices();
    match chars.next() {
        Some((_, c)) if is_name_start(c) => {}
        _ => return Err(syntax_error(token, offset, "expected a variable name")),
    }
    if let Some((i, _)) = chars.find(|&(_, c)| !is_name_char(c)) {
        return Err(syntax_error(token, offset + i, "invalid character in name"));
    }
    Ok(Lit::new(vocab.intern(name), positive))
}

fn named_literals(token: &str, vocab: &mut Vocabulary) -> Result<Vec<Lit>> {
    let mut lits = Vec::new();
    let mut start = 0;
    for part in token.split('|') {
        lits.push(named_literal(token, start, part, vocab)?);
        start += part.len() + 1;
    }
    Ok(lits)
}

/// Parses one clause in the named syntax (`-x1|e2|q`).
pub fn parse_named_clause(token: &str, vocab: &mut Vocabulary) -> Result<Clause> {
    if token == EMPTY_CLAUSE {
        return Ok(Clause::empty());
    }
    Clause::new(named_literals(token, vocab)?)
}

/// Parses a conjunction of literals (a DNF term) in the compact syntax.
pub fn parse_term(token: &str, vocab: &mut Vocabulary) -> Result<LiteralSet> {
    let lits = compact_literals(token, 0, token, vocab)?;
    LiteralSet::new(lits).map_err(|_| syntax_error(token, 0, "term contains a literal and its negation"))
}

/// Parses a conjunction of literals in the named syntax (`x1|-y1`).
pub fn parse_named_term(token: &str, vocab: &mut Vocabulary) -> Result<LiteralSet> {
    let lits = named_literals(token, vocab)?;
    LiteralSet::new(lits).map_err(|_| syntax_error(token, 0, "term contains a literal and its negation"))
}

pub fn parse_formula<'a, I>(tokens: I, syntax: Syntax, vocab: &mut Vocabulary) -> Result<Formula>
where
    I: IntoIterator<Item = &'a str>,
{
    let mut out = Formula::new();
    for token in tokens {
        match syntax {
            Syntax::Compact => out.extend(parse_clause_token(token, vocab)?),
            Syntax::Named => {
                out.insert(parse_named_clause(token, vocab)?);
            }
        }
    }
    Ok(out)
}

/// Parses whitespace-separated compact tokens.
pub fn parse_formula_str(text: &str, vocab: &mut Vocabulary) -> Result<Formula> {
    parse_formula(text.split_whitespace(), Syntax::Compact, vocab)
}

/// Parses whitespace-separated named clauses.
pub fn parse_named_formula_str(text: &str, vocab: &mut Vocabulary) -> Result<Formula> {
    parse_formula(text.split_whitespace(), Syntax::Named, vocab)
}

type SortKey = Vec<(String, bool)>;

fn sort_key(lits: impl Iterator<Item = Lit>, vocab: &Vocabulary) -> SortKey {
    let mut key: SortKey = lits.map(|l| (vocab.display(l.var()), !l.is_positive())).collect();
    key.sort();
    key
}

fn render(key: &SortKey, separator: &str) -> String {
    if key.is_empty() {
        return String::from(EMPTY_CLAUSE);
    }
    let mut out = String::new();
    for (i, (name, negative)) in key.iter().enumerate() {
        if i > 0 {
            out.push_str(separator);
        }
        if *negative {
            out.push('-');
        }
        out.push_str(name);
    }
    out
}

fn sorted_keys(f: &Formula, vocab: &Vocabulary) -> Vec<SortKey> {
    let mut keys: Vec<SortKey> = f.iter().map(|c| sort_key(c.iter(), vocab)).collect();
    keys.sort();
    keys
}

/// Prints a clause as one token, literals in name order.
pub fn print_clause(clause: &Clause, syntax: Syntax, vocab: &Vocabulary) -> String {
    let separator = match syntax {
        Syntax::Compact => "",
        Syntax::Named => "|",
    };
    render(&sort_key(clause.iter(), vocab), separator)
}

/// Prints a formula as space-separated clause tokens in canonical order.
pub fn print_formula(f: &Formula, syntax: Syntax, vocab: &Vocabulary) -> String {
    let separator = match syntax {
        Syntax::Compact => "",
        Syntax::Named => "|",
    };
    let tokens: Vec<String> = sorted_keys(f, vocab).iter().map(|k| render(k, separator)).collect();
    tokens.join(" ")
}

/// Prints a literal set or term in the given syntax.
pub fn print_literals(set: &LiteralSet, syntax: Syntax, vocab: &Vocabulary) -> String {
    let separator = match syntax {
        Syntax::Compact => "",
        Syntax::Named => "|",
    };
    render(&sort_key(set.iter(), vocab), separator)
}

/// Mathematical notation: `¬a ∨ b`.
pub fn print_clause_pretty(clause: &Clause, vocab: &Vocabulary) -> String {
    let key = sort_key(clause.iter(), vocab);
    if key.is_empty() {
        return String::from("⊥");
    }
    let parts: Vec<String> = key
        .iter()
        .map(|(name, negative)| if *negative { alloc::format!("¬{name}") } else { name.clone() })
        .collect();
    parts.join(" ∨ ")
}

/// Mathematical notation: `{a, ¬a ∨ b}`.
pub fn print_formula_pretty(f: &Formula, vocab: &Vocabulary) -> String {
    let mut clauses: Vec<(SortKey, String)> = f
        .iter()
        .map(|c| (sort_key(c.iter(), vocab), print_clause_pretty(c, vocab)))
        .collect();
    clauses.sort();
    let parts: Vec<String> = clauses.into_iter().map(|(_, s)| s).collect();
    alloc::format!("{{{}}}", parts.join(", "))
}

/// True when every variable of `f` prints as a single letter.
pub fn is_compact_printable(f: &Formula, vocab: &Vocabulary) -> bool {
    f.vars().iter().all(|&v| {
        let name = vocab.display(v);
        name.len() == 1 && name.chars().all(|c| c.is_ascii_alphabetic())
    })
}
