use gasylv_core::Error as CoreError;
use serde_json::{json, Value};
use thiserror::Error;

use crate::literal::LiteralError;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    #[error("{name}: {source}")]
    Literal {
        name: &'static str,
        #[source]
        source: LiteralError,
    },

    #[error(transparent)]
    Core(#[from] CoreError),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Literal { .. } => 1,
            CliError::Core(e) => match e {
                CoreError::SingularElement { .. } | CoreError::SingularProblem { .. } => 2,
                CoreError::Consistency(_)
                | CoreError::ResidualCheckFailed { .. }
                | CoreError::NumericalDegradation { .. } => 3,
                _ => 1,
            },
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "usage",
            CliError::Literal { .. } => "parse",
            CliError::Core(e) => match e {
                CoreError::SingularElement { .. } => "singular_element",
                CoreError::SingularProblem { .. } => "singular_problem",
                CoreError::Consistency(_) | CoreError::ResidualCheckFailed { .. } => "consistency",
                CoreError::NumericalDegradation { .. } => "numerical_degradation",
                _ => "usage",
            },
        }
    }

    pub fn to_json(&self) -> Value {
        let mut body = json!({
            "kind": self.kind(),
            "message": self.to_string(),
            "exit_code": self.exit_code(),
        });
        match self {
            CliError::Literal { name, source } => {
                body["argument"] = json!(name);
                if let Some(offset) = source.offset() {
                    body["offset"] = json!(offset);
                }
            }
            CliError::Core(CoreError::SingularProblem { q, d }) => {
                body["Q"] = json!(q);
                body["D"] = json!(d);
            }
            _ => {}
        }
        json!({ "error": body })
    }
}
