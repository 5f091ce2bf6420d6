//! Errors with machine-readable codes.

use std::fmt;

use orbiquint::classify::ClassifyError;
use orbiquint::golden::GoldenError;
use orbiquint::orbiscroll::ScrollError;
use orbiquint::parity::ParityError;
use orbiquint::recillas::RecillasError;
use orbiquint::resolve::ResolveError;
use serde_json::json;

/// Exit status of a failed run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Domain,
    Usage,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub kind: Kind,
    pub code: &'static str,
    pub message: String,
}

impl CliError {
    pub fn domain(code: &'static str, message: impl Into<String>) -> Self {
        CliError {
            kind: Kind::Domain,
            code,
            message: message.into(),
        }
    }

    pub fn usage(code: &'static str, message: impl Into<String>) -> Self {
        CliError {
            kind: Kind::Usage,
            code,
            message: message.into(),
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self.kind {
            Kind::Domain => 1,
            Kind::Usage => 2,
        }
    }

    pub fn to_json(&self) -> String {
        json!({"error": {"code": self.code, "message": self.message}}).to_string()
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "error[{}]: {}", self.code, self.message)
    }
}

impl From<ResolveError> for CliError {
    fn from(e: ResolveError) -> Self {
        CliError::domain("resolve", e.to_string())
    }
}

impl From<ScrollError> for CliError {
    fn from(e: ScrollError) -> Self {
        CliError::domain("scroll", e.to_string())
    }
}

impl From<RecillasError> for CliError {
    fn from(e: RecillasError) -> Self {
        CliError::domain("permutation", e.to_string())
    }
}

impl From<ParityError> for CliError {
    fn from(e: ParityError) -> Self {
        let code = match e {
            ParityError::NotHalfIntegral(_) => "not_half_integral",
            ParityError::NonIntegralSum(_) => "non_integral_sum",
        };
        CliError::domain(code, e.to_string())
    }
}

impl From<ClassifyError> for CliError {
    fn from(e: ClassifyError) -> Self {
        match e {
            ClassifyError::Resolve(r) => r.into(),
            ClassifyError::Parity(p) => p.into(),
            other => CliError::domain("classify", other.to_string()),
        }
    }
}

impl From<GoldenError> for CliError {
    fn from(e: GoldenError) -> Self {
        match e {
            GoldenError::Io { .. } => CliError::domain("io", e.to_string()),
            GoldenError::Classify(c) => c.into(),
            GoldenError::Resolve(r) => r.into(),
        }
    }
}
