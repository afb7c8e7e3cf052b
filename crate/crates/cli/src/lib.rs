//! The `gg` command line tool as a library, so that tests can drive it in
//! process.

pub mod commands;
pub mod config;
pub mod report;
pub mod suites;

use gg_constructions::ConstructionError;
use gg_core::builtins::catalog;
use gg_core::structure::is_soluble;
use gg_core::{group_builtin, Caps, FiniteGroup, GroupError};
use gg_recognition::RecognitionError;
use std::collections::BTreeMap;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAP: i32 = 3;

/// Any error a command can end with, classified by exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    Usage(String),
    Cap(String),
    Failure(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Cap(_) => EXIT_CAP,
            CliError::Failure(_) => EXIT_FAIL,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Cap(m) | CliError::Failure(m) => m,
        }
    }

    pub fn is_cap(&self) -> bool {
        matches!(self, CliError::Cap(_))
    }
}

impl From<GroupError> for CliError {
    fn from(e: GroupError) -> Self {
        match e {
            GroupError::OrderCapExceeded { .. } => CliError::Cap(e.to_string()),
            GroupError::UnknownFamily(_)
            | GroupError::ParameterOutOfRange(_)
            | GroupError::Parse(_)
            | GroupError::NotAGroup { .. }
            | GroupError::NotNormal
            | GroupError::ActionNotHomomorphism(_)
            | GroupError::DTooSmall { .. } => CliError::Usage(e.to_string()),
            _ => CliError::Failure(e.to_string()),
        }
    }
}

impl From<RecognitionError> for CliError {
    fn from(e: RecognitionError) -> Self {
        match e {
            RecognitionError::Group(g) => g.into(),
            RecognitionError::WrongKind(_) | RecognitionError::InsufficientTruncation { .. } => {
                CliError::Usage(e.to_string())
            }
            _ => CliError::Failure(e.to_string()),
        }
    }
}

impl From<ConstructionError> for CliError {
    fn from(e: ConstructionError) -> Self {
        match e {
            ConstructionError::Group(g) => g.into(),
            ConstructionError::Recognition(r) => r.into(),
            ConstructionError::NotSimple | ConstructionError::NotUniqueMinimalNormal => CliError::Usage(e.to_string()),
            ConstructionError::PsiSearchExceeded { .. } => CliError::Failure(e.to_string()),
        }
    }
}

/// Builds a group from a builtin spec, or from a JSON file given as `@path`.
pub fn load_group(spec: &str, caps: &Caps) -> Result<FiniteGroup, CliError> {
    if let Some(path) = spec.strip_prefix('@') {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("cannot read {path}: {e}")))?;
        return Ok(FiniteGroup::from_json(&text, caps)?);
    }
    Ok(group_builtin(spec, caps)?)
}

/// A named group, or the reason it could not be built within the caps.
pub struct Selected {
    pub spec: String,
    pub group: Result<FiniteGroup, CliError>,
}

/// Resolves `catalog`, `catalog:soluble` or a comma-separated spec list.
/// Malformed specs are usage errors; groups over the caps are kept so that
/// the suites can report them.
pub fn select_groups(selection: &str, caps: &Caps) -> Result<Vec<Selected>, CliError> {
    let (specs, soluble_only): (Vec<String>, bool) = match selection.trim() {
        "catalog" => (catalog().into_iter().map(String::from).collect(), false),
        "catalog:soluble" => (catalog().into_iter().map(String::from).collect(), true),
        list => (list.split(',').map(|s| s.trim().to_string()).filter(|s| !s.is_empty()).collect(), false),
    };
    if specs.is_empty() {
        return Err(CliError::Usage("empty group selection".into()));
    }
    let mut out = Vec::new();
    for spec in specs {
        let group = match load_group(&spec, caps) {
            Err(e) if !e.is_cap() => return Err(e),
            r => r,
        };
        if soluble_only && group.as_ref().map(|g| !is_soluble(g)).unwrap_or(false) {
            continue;
        }
        out.push(Selected { spec, group });
    }
    Ok(out)
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Runs `gg` with the given arguments (without the program name) and
/// environment.
pub fn run<I, S>(args: I, env: &BTreeMap<String, String>) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    commands::run(args.into_iter().map(Into::into).collect(), env)
}
