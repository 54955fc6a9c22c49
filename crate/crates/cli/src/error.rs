use graphspace::GraphError;
use matroid_core::MatroidError;
use matroid_link::LinkError;
use sq_complete::CompleteError;
use vcompose::ComposeError;
use vspace::SpaceError;

/// A failed run. `code` is the process exit status.
#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub msg: String,
    /// Counterexample dumped with invariant and verification breaches.
    pub witness: Option<String>,
}

pub const PARSE: u8 = 2;
pub const PRECONDITION: u8 = 3;
pub const GUARD: u8 = 4;
pub const INVARIANT: u8 = 5;

impl CliError {
    pub fn new(code: u8, msg: impl Into<String>) -> CliError {
        CliError { code, msg: msg.into(), witness: None }
    }

    pub fn parse(msg: impl Into<String>) -> CliError {
        CliError::new(PARSE, msg)
    }

    pub fn precondition(msg: impl Into<String>) -> CliError {
        CliError::new(PRECONDITION, msg)
    }

    pub fn breach(msg: impl Into<String>, witness: impl Into<String>) -> CliError {
        CliError { code: INVARIANT, msg: msg.into(), witness: Some(witness.into()) }
    }

    /// Anything raised while reading inputs is a parse error, except the guard.
    pub fn in_input(self, path: &str) -> CliError {
        match self.code {
            GUARD | PARSE => CliError { msg: format!("{path}: {}", self.msg), ..self },
            _ => CliError { code: PARSE, msg: format!("{path}: {}", self.msg), witness: self.witness },
        }
    }
}

impl From<MatroidError> for CliError {
    fn from(e: MatroidError) -> CliError {
        let code = match &e {
            MatroidError::Guard { .. } => GUARD,
            MatroidError::Parse { .. } | MatroidError::BaseAxiom(_) => PARSE,
            MatroidError::Space(s) => return s.clone().into(),
            MatroidError::Graph(g) => return g.clone().into(),
            _ => PRECONDITION,
        };
        CliError::new(code, e.to_string())
    }
}

impl From<SpaceError> for CliError {
    fn from(e: SpaceError) -> CliError {
        let code = match &e {
            SpaceError::Parse { .. } | SpaceError::BadScalar(_) | SpaceError::BadLabel(_) => PARSE,
            _ => PRECONDITION,
        };
        CliError::new(code, e.to_string())
    }
}

impl From<GraphError> for CliError {
    fn from(e: GraphError) -> CliError {
        match e {
            GraphError::Space(s) => s.into(),
            GraphError::Parse { .. } => CliError::parse(e.to_string()),
            other => CliError::precondition(other.to_string()),
        }
    }
}

impl From<ComposeError> for CliError {
    fn from(e: ComposeError) -> CliError {
        match e {
            ComposeError::Space(s) => s.into(),
            other => CliError::precondition(other.to_string()),
        }
    }
}

impl From<LinkError> for CliError {
    fn from(e: LinkError) -> CliError {
        match e {
            LinkError::Matroid(m) => m.into(),
            LinkError::Invariant(msg) => CliError::new(INVARIANT, msg),
            other => CliError::precondition(other.to_string()),
        }
    }
}

impl From<CompleteError> for CliError {
    fn from(e: CompleteError) -> CliError {
        match e {
            CompleteError::Matroid(m) => m.into(),
            CompleteError::Link(l) => l.into(),
            CompleteError::Invariant(msg) => CliError::new(INVARIANT, msg),
            other => CliError::precondition(other.to_string()),
        }
    }
}
