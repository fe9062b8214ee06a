use std::io::Read;
use std::path::PathBuf;

use clap::Args;
use serde_json::{json, Value};
use symconf::configs::{central_symmetrize, graph_config_mu, graph_config_rho, Configuration, CscMatrix};
use symconf::error::Error;
use symconf::graphs::{Family, Graph};
use symconf::intlin::IntMatrix;

use crate::report::CliError;

/// Which configuration to build from the input.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    /// The input matrix as given.
    Plain,
    /// `A±` of the input matrix.
    Pm,
    Rho,
    RhoPm,
    Mu,
    MuPm,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::Plain => "plain",
            Kind::Pm => "pm",
            Kind::Rho => "rho",
            Kind::RhoPm => "rho±",
            Kind::Mu => "mu",
            Kind::MuPm => "mu±",
        }
    }

    pub fn symmetric(self) -> bool {
        matches!(self, Kind::Pm | Kind::RhoPm | Kind::MuPm)
    }

    fn for_graph(self) -> bool {
        matches!(self, Kind::Rho | Kind::RhoPm | Kind::Mu | Kind::MuPm)
    }
}

pub fn parse_kind(s: &str) -> Result<Kind, String> {
    let s = s.trim().to_ascii_lowercase();
    let (base, pm) = match s.strip_suffix('±').or_else(|| s.strip_suffix("-pm")).or_else(|| s.strip_suffix("pm")) {
        Some(b) => (b.trim_end_matches('-'), true),
        None => (s.as_str(), false),
    };
    match (base, pm) {
        ("", true) => Ok(Kind::Pm),
        ("plain", false) => Ok(Kind::Plain),
        ("rho", false) => Ok(Kind::Rho),
        ("rho", true) => Ok(Kind::RhoPm),
        ("mu", false) => Ok(Kind::Mu),
        ("mu", true) => Ok(Kind::MuPm),
        _ => Err(format!("unknown kind {s:?}; expected plain, pm, rho, rho±, mu or mu±")),
    }
}

#[derive(Args, Debug, Clone)]
pub struct InputArgs {
    /// Matrix or graph file; `-` reads standard input.
    pub file: Option<PathBuf>,
    /// Read the file as a graph edge list instead of a matrix.
    #[arg(long)]
    pub graph: bool,
    /// Named graph family: wheel:d, cycle:n, path:n, complete:n, kbip:p:q,
    /// multipartite:a:b:...
    #[arg(long, conflicts_with = "file")]
    pub family: Option<String>,
    /// Configuration to build: plain or pm for matrices; rho, rho±, mu or
    /// mu± for graphs.
    #[arg(long, value_parser = parse_kind)]
    pub kind: Option<Kind>,
}

pub enum Source {
    Matrix(IntMatrix),
    Graph(Graph),
}

/// Parsed input plus the configuration selected by `--kind`.
pub struct Target {
    /// The matrix before symmetrization.
    pub base: IntMatrix,
    pub csc: Option<CscMatrix>,
    pub echo: Value,
}

impl Target {
    /// The matrix the command works on.
    pub fn matrix(&self) -> &IntMatrix {
        match &self.csc {
            Some(c) => &c.matrix,
            None => &self.base,
        }
    }

    pub fn configuration(&self) -> Result<Configuration, CliError> {
        match &self.csc {
            Some(c) => Ok(c.configuration()),
            None => Ok(Configuration::new(self.base.clone())?),
        }
    }
}

fn read_text(file: &PathBuf) -> Result<String, CliError> {
    if file.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| CliError::Io(format!("standard input: {e}")))?;
        Ok(s)
    } else {
        std::fs::read_to_string(file).map_err(|e| CliError::Io(format!("{}: {e}", file.display())))
    }
}

fn graph_json(g: &Graph) -> Value {
    json!({ "vertex_count": g.vertex_count(), "edges": g.edges() })
}

impl InputArgs {
    pub fn load_source(&self) -> Result<(Source, Value), CliError> {
        if let Some(spec) = &self.family {
            let g = spec.parse::<Family>()?.graph();
            let echo = json!({ "family": spec, "graph": graph_json(&g) });
            return Ok((Source::Graph(g), echo));
        }
        let file = self
            .file
            .as_ref()
            .ok_or_else(|| CliError::Usage("an input file or --family is required".into()))?;
        let text = read_text(file)?;
        let name = file.display().to_string();
        if self.graph {
            let g = Graph::parse(&text)?;
            let echo = json!({ "file": name, "graph": graph_json(&g) });
            Ok((Source::Graph(g), echo))
        } else {
            let m = IntMatrix::parse(&text)?;
            let echo = json!({ "file": name, "matrix": m.to_json() });
            Ok((Source::Matrix(m), echo))
        }
    }

    /// Loads a graph, rejecting matrix input.
    pub fn load_graph(&self) -> Result<(Graph, Value), CliError> {
        match self.load_source()? {
            (Source::Graph(g), echo) => Ok((g, echo)),
            (Source::Matrix(_), _) => Err(CliError::Usage(
                "this command needs a graph: pass --graph or --family".into(),
            )),
        }
    }

    /// Loads the input and builds the configuration named by `--kind`,
    /// defaulting to `pm` for matrices and `rho±` for graphs.
    pub fn load(&self) -> Result<Target, CliError> {
        let (source, mut echo) = self.load_source()?;
        let kind = match (&source, self.kind) {
            (Source::Matrix(_), None) => Kind::Pm,
            (Source::Graph(_), None) => Kind::RhoPm,
            (Source::Matrix(_), Some(k)) if k.for_graph() => {
                return Err(CliError::Usage(format!("kind {} needs a graph input", k.name())))
            }
            (Source::Graph(_), Some(k)) if !k.for_graph() => {
                return Err(CliError::Usage(format!("kind {} needs a matrix input", k.name())))
            }
            (_, Some(k)) => k,
        };
        let base = match (&source, kind) {
            (Source::Matrix(m), _) => m.clone(),
            (Source::Graph(g), Kind::Rho | Kind::RhoPm) => graph_config_rho(g)?,
            (Source::Graph(g), _) => graph_config_mu(g)?,
        };
        let csc = kind.symmetric().then(|| central_symmetrize(&base));
        echo["kind"] = json!(kind.name());
        Ok(Target { base, csc, echo })
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}
