use serde_json::{json, Map, Value};
use symconf::error::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_PRECONDITION: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Debug)]
pub enum CliError {
    Lib(Error),
    Io(String),
    Usage(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Lib(e) if e.is_resource_limit() || matches!(e, Error::Overflow(_)) => EXIT_RESOURCE,
            _ => EXIT_PRECONDITION,
        }
    }

    fn kind(&self) -> &'static str {
        match self {
            CliError::Io(_) => "io",
            CliError::Usage(_) => "usage",
            CliError::Lib(e) => match e {
                Error::Parse { .. } => "parse",
                Error::Invalid(_) => "invalid",
                Error::RankDeficient { .. } => "rank_deficient",
                Error::NotConfiguration => "not_configuration",
                Error::NotBipartite => "not_bipartite",
                Error::PreconditionViolated(_) => "precondition_violated",
                Error::ApexNotUniversalForOddCycles { .. } => "apex_not_universal",
                Error::NotDecomposable { .. } => "not_decomposable",
                Error::SizeLimit { .. } => "size_limit",
                Error::ResourceLimit { .. } => "resource_limit",
                Error::SPairBudget { .. } => "spair_budget",
                Error::Overflow(_) => "overflow",
            },
        }
    }

    pub fn to_json(&self) -> Value {
        let message = match self {
            CliError::Lib(e) => e.to_string(),
            CliError::Io(m) | CliError::Usage(m) => m.clone(),
        };
        json!({ "kind": self.kind(), "message": message })
    }
}

/// One command's output. Keys serialize sorted, so equal reports are equal
/// byte for byte.
pub struct Report {
    pub command: &'static str,
    pub inputs: Value,
    pub results: Value,
    pub limits: Value,
    /// Set when the results are partial or a budget stopped the work.
    pub incomplete: bool,
    pub error: Option<CliError>,
}

impl Report {
    pub fn new(command: &'static str) -> Self {
        Report {
            command,
            inputs: Value::Object(Map::new()),
            results: Value::Object(Map::new()),
            limits: Value::Object(Map::new()),
            incomplete: false,
            error: None,
        }
    }

    pub fn exit_code(&self) -> i32 {
        match &self.error {
            Some(e) => e.exit_code(),
            None if self.incomplete => EXIT_RESOURCE,
            None => EXIT_OK,
        }
    }

    pub fn to_json(&self) -> Value {
        let status = match (&self.error, self.incomplete) {
            (Some(_), _) => "error",
            (None, true) => "partial",
            (None, false) => "ok",
        };
        let mut v = json!({
            "command": self.command,
            "inputs": self.inputs,
            "results": self.results,
            "limits": self.limits,
            "status": status,
            "version": env!("CARGO_PKG_VERSION"),
        });
        if let Some(e) = &self.error {
            v["error"] = e.to_json();
        }
        v
    }

    pub fn render(&self, pretty: bool) -> String {
        let v = self.to_json();
        let s = if pretty {
            serde_json::to_string_pretty(&v)
        } else {
            serde_json::to_string(&v)
        };
        s.expect("JSON values always serialize")
    }
}
