//! Reports, errors and atomic output.

use std::io::Write;
use std::path::{Path, PathBuf};

use serde::Serialize;
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ErrorKind {
    Io,
    Usage,
    Parse,
    Invalid,
    Hypothesis,
}

#[derive(Debug, Serialize)]
pub struct CliError {
    pub kind: ErrorKind,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pointer: Option<String>,
    pub message: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
}

impl CliError {
    pub fn io(path: &Path, e: std::io::Error) -> Self {
        CliError { kind: ErrorKind::Io, pointer: None, message: format!("{}: {e}", path.display()), witness: None }
    }

    pub fn usage(message: String) -> Self {
        CliError { kind: ErrorKind::Usage, pointer: None, message, witness: None }
    }

    pub fn parse(pointer: String, message: String) -> Self {
        CliError { kind: ErrorKind::Parse, pointer: Some(pointer), message, witness: None }
    }

    pub fn invalid(pointer: &str, message: String) -> Self {
        CliError { kind: ErrorKind::Invalid, pointer: Some(pointer.to_string()), message, witness: None }
    }

    pub fn hypothesis(pointer: &str, message: String, witness: Option<Value>) -> Self {
        CliError { kind: ErrorKind::Hypothesis, pointer: Some(pointer.to_string()), message, witness }
    }

    /// 1 for I/O and malformed input, 2 for failed validation or hypotheses.
    pub fn exit_code(&self) -> i32 {
        match self.kind {
            ErrorKind::Io | ErrorKind::Usage | ErrorKind::Parse => 1,
            ErrorKind::Invalid | ErrorKind::Hypothesis => 2,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match &self.pointer {
            Some(p) => write!(f, "{}: {}", if p.is_empty() { "/" } else { p }, self.message),
            None => f.write_str(&self.message),
        }
    }
}

/// Result of one command: `passed` is the verdict of every requested check.
pub struct Outcome {
    pub passed: bool,
    pub result: Value,
    pub summary: Vec<String>,
}

#[derive(Serialize)]
pub struct Report<'a> {
    pub tool: &'static str,
    pub version: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generated_at: Option<u64>,
    pub command: &'a str,
    pub order: usize,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub result: Option<&'a Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<&'a CliError>,
}

pub fn timestamp(deterministic: bool) -> Option<u64> {
    if deterministic {
        return None;
    }
    std::time::SystemTime::now().duration_since(std::time::UNIX_EPOCH).ok().map(|d| d.as_secs())
}

pub fn to_json<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("reports serialize")
}

/// Writes through a temporary file in the same directory, then renames.
pub fn write_atomic(dir: &Path, name: &str, body: &str) -> Result<PathBuf, CliError> {
    std::fs::create_dir_all(dir).map_err(|e| CliError::io(dir, e))?;
    let target = dir.join(name);
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(|e| CliError::io(dir, e))?;
    tmp.write_all(body.as_bytes()).map_err(|e| CliError::io(&target, e))?;
    tmp.as_file().sync_all().map_err(|e| CliError::io(&target, e))?;
    tmp.persist(&target).map_err(|e| CliError::io(&target, e.error))?;
    Ok(target)
}
