//! Command-line flags. Flags take a single dash, as in the original tool;
//! anything that is not a flag is a clause token, and `--` makes every
//! later argument a token (needed for tokens such as `-f` or `-t`).

use std::path::PathBuf;

use forgetsize_core::reductions::ReductionKind;
use forgetsize_core::Limits;

use crate::error::CliError;
use crate::report::Format;

pub const USAGE: &str = "\
usage: minimize [-f] [options] TOKEN...
       minimize -t FILE [options]
       minimize -reduction KIND [-outer VARS] [-verify [-exhaustive]] TOKEN...

  -f               clause tokens on the command line (default)
  -t FILE          read a problem file
  -minimal         list the smallest equivalent formulas
  -forget VARS     forget these variables (letters, or names split by ',')
  -keep VARS       forget every other variable
  -bound K         compare the minimum size after forgetting with K
  -report LIST     sections to print, split by ','
                   (closure, prime, redundant, superredundant, minimal,
                   forget, min-forget-size)
  -reduction KIND  build a hardness instance: horn_conp, horn_np,
                   general_p2 (CNF tokens), general_s2 (DNF terms)
  -outer VARS      outer quantifier block of a general_* source
  -verify          check the instance against its construction
  -exhaustive      with -verify, also search for the minimum size
  -machine         tab-separated output
  -cap-closure N   resolution closure limit in clauses
  -cap-enum N      enumeration limit in variables
  -cap-pool N      minimization pool limit in clauses
  -h, -help        this text

exit status: 0 ok, 2 bad input, 3 resource limit, 4 expectation mismatch";

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum ReportKind {
    Closure,
    Prime,
    Redundant,
    Superredundant,
    Minimal,
    Forget,
    MinForgetSize,
}

impl ReportKind {
    pub const ALL: [ReportKind; 7] = [
        ReportKind::Closure,
        ReportKind::Prime,
        ReportKind::Redundant,
        ReportKind::Superredundant,
        ReportKind::Minimal,
        ReportKind::Forget,
        ReportKind::MinForgetSize,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ReportKind::Closure => "closure",
            ReportKind::Prime => "prime",
            ReportKind::Redundant => "redundant",
            ReportKind::Superredundant => "superredundant",
            ReportKind::Minimal => "minimal",
            ReportKind::Forget => "forget",
            ReportKind::MinForgetSize => "min-forget-size",
        }
    }

    pub fn from_name(name: &str) -> Option<ReportKind> {
        Self::ALL.into_iter().find(|k| k.name() == name)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Input {
    Inline(Vec<String>),
    File(PathBuf),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionConfig {
    pub kind: ReductionKind,
    pub outer: Vec<String>,
    pub verify: bool,
    pub exhaustive: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub input: Input,
    pub minimal: bool,
    pub forget: Option<Vec<String>>,
    pub keep: Option<Vec<String>>,
    pub bound: Option<usize>,
    /// `None` selects the sections the other flags ask for.
    pub reports: Option<Vec<ReportKind>>,
    pub reduction: Option<ReductionConfig>,
    pub limits: Limits,
    pub format: Format,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            input: Input::Inline(Vec::new()),
            minimal: false,
            forget: None,
            keep: None,
            bound: None,
            reports: None,
            reduction: None,
            limits: Limits::default(),
            format: Format::Human,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Command {
    Help,
    Run(RunConfig),
}

/// Splits a variable list: `cd` is `c` and `d`, `x1,e1` is `x1` and `e1`.
pub fn split_vars(text: &str) -> Vec<String> {
    if text.contains(',') {
        text.split(',').map(str::trim).filter(|s| !s.is_empty()).map(String::from).collect()
    } else {
        text.chars().filter(|c| !c.is_whitespace()).map(String::from).collect()
    }
}

fn usage(message: impl Into<String>) -> CliError {
    CliError::Usage(message.into())
}

pub fn parse_args<S: AsRef<str>>(args: &[S]) -> Result<Command, CliError> {
    let mut config = RunConfig::default();
    let mut tokens = Vec::new();
    let mut file = None;
    let mut reduction: Option<ReductionKind> = None;
    let (mut outer, mut verify, mut exhaustive) = (None, false, false);
    let mut iter = args.iter().map(AsRef::as_ref);
    while let Some(arg) = iter.next() {
        let mut value = |flag: &str| iter.next().ok_or_else(|| usage(format!("{flag} needs a value")));
        match arg {
            "--" => {
                tokens.extend(iter.by_ref().map(String::from));
            }
            "-h" | "-help" | "--help" => return Ok(Command::Help),
            "-f" => {}
            "-t" => file = Some(PathBuf::from(value(arg)?)),
            "-minimal" => config.minimal = true,
            "-forget" => config.forget = Some(split_vars(value(arg)?)),
            "-keep" => config.keep = Some(split_vars(value(arg)?)),
            "-bound" => config.bound = Some(number(arg, value(arg)?)?),
            "-report" => {
                let list = value(arg)?;
                let kinds = list
                    .split(',')
                    .map(|name| ReportKind::from_name(name.trim()).ok_or_else(|| usage(format!("unknown report `{name}`"))))
                    .collect::<Result<Vec<_>, _>>()?;
                config.reports = Some(kinds);
            }
            "-reduction" => {
                let name = value(arg)?;
                reduction = Some(ReductionKind::from_name(name).ok_or_else(|| usage(format!("unknown reduction `{name}`")))?);
            }
            "-outer" => outer = Some(split_vars(value(arg)?)),
            "-verify" => verify = true,
            "-exhaustive" => exhaustive = true,
            "-machine" => config.format = Format::Machine,
            "-cap-closure" => config.limits.closure = number(arg, value(arg)?)?,
            "-cap-enum" => config.limits.enumeration = number(arg, value(arg)?)?,
            "-cap-pool" => config.limits.pool = number(arg, value(arg)?)?,
            _ => tokens.push(String::from(arg)),
        }
    }

    if config.forget.is_some() && config.keep.is_some() {
        return Err(usage("-forget and -keep exclude each other"));
    }
    if exhaustive && !verify {
        return Err(usage("-exhaustive needs -verify"));
    }
    match (reduction, file) {
        (Some(kind), None) => {
            if outer.is_some() && matches!(kind, ReductionKind::HornConp | ReductionKind::HornNp) {
                return Err(usage("-outer only applies to general_* reductions"));
            }
            config.reduction = Some(ReductionConfig { kind, outer: outer.unwrap_or_default(), verify, exhaustive });
            config.input = Input::Inline(tokens);
        }
        (Some(_), Some(_)) => return Err(usage("-reduction reads its source from the command line, not -t")),
        (None, _) if outer.is_some() || verify => return Err(usage("-outer and -verify need -reduction")),
        (None, Some(path)) => {
            if !tokens.is_empty() {
                return Err(usage("clause tokens and -t exclude each other"));
            }
            config.input = Input::File(path);
        }
        (None, None) => {
            if tokens.is_empty() {
                return Err(usage("no clause tokens given"));
            }
            config.input = Input::Inline(tokens);
        }
    }
    Ok(Command::Run(config))
}

fn number(flag: &str, text: &str) -> Result<usize, CliError> {
    text.parse().map_err(|_| usage(format!("{flag} expects a number, got `{text}`")))
}
