//! Run reports, their JSON and table renderings, and exit codes.

use std::fmt::Write as _;

use serde::Serialize;
use serde_json::Value;

pub const SCHEMA: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

impl Status {
    pub fn exit_code(self) -> u8 {
        match self {
            Status::Pass => 0,
            Status::Fail => 1,
            Status::Error => 2,
        }
    }
}

#[derive(Debug)]
pub enum CliError {
    Core(kpfaff_core::Error),
    Usage(String),
    Io(String),
}

impl From<kpfaff_core::Error> for CliError {
    fn from(e: kpfaff_core::Error) -> Self {
        CliError::Core(e)
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Core(e) => e.fmt(f),
            CliError::Usage(m) | CliError::Io(m) => f.write_str(m),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ErrorInfo {
    pub kind: &'static str,
    pub message: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub line: Option<usize>,
}

impl From<&CliError> for ErrorInfo {
    fn from(e: &CliError) -> Self {
        use kpfaff_core::Error;
        let (kind, line) = match e {
            CliError::Core(Error::Domain(_)) => ("domain", None),
            CliError::Core(Error::Resource(_)) => ("resource", None),
            CliError::Core(Error::Parse { line, .. }) => ("parse", Some(*line)),
            CliError::Usage(_) => ("usage", None),
            CliError::Io(_) => ("io", None),
        };
        ErrorInfo {
            kind,
            message: e.to_string(),
            line,
        }
    }
}

/// A named failing check and its smallest counterexample.
#[derive(Debug, Clone, Serialize)]
pub struct Failure {
    pub check: String,
    pub counterexample: Value,
}

/// Extra table shown by `--format table`; not part of the JSON.
#[derive(Debug, Clone)]
pub struct Table {
    pub title: String,
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub schema: u32,
    pub command: String,
    pub inputs: Value,
    pub status: Status,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub failures: Vec<Failure>,
    pub results: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<ErrorInfo>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u128>,
    #[serde(skip)]
    pub tables: Vec<Table>,
}

/// What a command hands back before the report is assembled.
pub struct Outcome {
    pub results: Value,
    pub failures: Vec<Failure>,
    pub tables: Vec<Table>,
}

impl Outcome {
    pub fn pass(results: impl Serialize) -> Self {
        Outcome {
            results: to_value(results),
            failures: Vec::new(),
            tables: Vec::new(),
        }
    }
}

pub fn to_value(v: impl Serialize) -> Value {
    serde_json::to_value(v).expect("report values serialise")
}

impl RunReport {
    pub fn new(command: &str, inputs: Value, outcome: Result<Outcome, CliError>) -> Self {
        match outcome {
            Ok(o) => RunReport {
                schema: SCHEMA,
                command: command.into(),
                inputs,
                status: if o.failures.is_empty() { Status::Pass } else { Status::Fail },
                failures: o.failures,
                results: o.results,
                error: None,
                elapsed_ms: None,
                tables: o.tables,
            },
            Err(e) => RunReport {
                schema: SCHEMA,
                command: command.into(),
                inputs,
                status: Status::Error,
                failures: Vec::new(),
                results: Value::Null,
                error: Some(ErrorInfo::from(&e)),
                elapsed_ms: None,
                tables: Vec::new(),
            },
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serialises");
        s.push('\n');
        s
    }

    pub fn to_table(&self) -> String {
        let mut rows = vec![
            ("command".to_string(), self.command.clone()),
            ("status".to_string(), format!("{:?}", self.status).to_uppercase()),
        ];
        flatten("inputs", &self.inputs, &mut rows);
        if let Some(e) = &self.error {
            rows.push(("error".into(), format!("{}: {}", e.kind, e.message)));
        }
        for f in &self.failures {
            rows.push((format!("failure.{}", f.check), scalar(&f.counterexample)));
        }
        if self.tables.is_empty() {
            flatten("results", &self.results, &mut rows);
        }
        if let Some(ms) = self.elapsed_ms {
            rows.push(("elapsed_ms".into(), ms.to_string()));
        }
        let mut out = String::new();
        let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
        for (k, v) in &rows {
            let _ = writeln!(out, "{k:width$}  {v}");
        }
        for t in &self.tables {
            out.push('\n');
            out.push_str(&render_table(t));
        }
        out
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        other => other.to_string(),
    }
}

fn flatten(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                flatten(&format!("{prefix}.{k}"), x, out);
            }
        }
        Value::Array(items) if items.iter().all(|x| !x.is_object() && !x.is_array()) => {
            out.push((prefix.into(), items.iter().map(scalar).collect::<Vec<_>>().join(" ")));
        }
        Value::Array(items) => {
            for (i, x) in items.iter().enumerate() {
                flatten(&format!("{prefix}.{i}"), x, out);
            }
        }
        other => out.push((prefix.into(), scalar(other))),
    }
}

fn render_table(t: &Table) -> String {
    let cols = t.header.len();
    let mut widths: Vec<usize> = t.header.iter().map(String::len).collect();
    for row in &t.rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let line = |cells: &[String]| {
        let mut s = String::new();
        for (i, cell) in cells.iter().enumerate().take(cols) {
            if i + 1 == cols {
                s.push_str(cell);
            } else {
                let _ = write!(s, "{cell:w$}  ", w = widths[i]);
            }
        }
        s.trim_end().to_string()
    };
    let mut out = format!("{}\n{}\n", t.title, line(&t.header));
    let rule: Vec<String> = widths.iter().map(|&w| "-".repeat(w)).collect();
    out.push_str(&line(&rule));
    out.push('\n');
    for row in &t.rows {
        out.push_str(&line(row));
        out.push('\n');
    }
    out
}
