use crate::exactlin::Scalar;
use crate::report::CheckReport;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("{what} fails its axioms ({summary})")]
    Precondition { what: String, summary: String },
    #[error("not a cocycle: residual nonzero in {0}")]
    NotCocycle(String),
    #[error("structure is not strict: l3 is nonzero")]
    NotStrict,
    #[error("map is not invertible: {0}")]
    Singular(String),
    #[error("invalid extension: {0}")]
    InvalidExtension(String),
    #[error("extensions induce different representations: {0}")]
    RepresentationMismatch(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("{location}: {message}")]
    Input { location: String, message: String },
}

impl Error {
    /// Errors caused by the input itself rather than by the mathematics:
    /// unreadable or malformed files and dimension mismatches.
    pub fn is_input_error(&self) -> bool {
        matches!(self, Error::Input { .. } | Error::Shape(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn shape_err(msg: impl Into<String>) -> Error {
    Error::Shape(msg.into())
}

/// Ok when `actual == expected`, otherwise a shape error naming `what`.
pub(crate) fn expect_shape(what: &str, actual: &[usize], expected: &[usize]) -> Result<()> {
    if actual == expected {
        Ok(())
    } else {
        Err(shape_err(format!("{what} has shape {actual:?}, expected {expected:?}")))
    }
}

/// Turn a failing report into a precondition error.
pub(crate) fn require<S: Scalar>(what: &str, report: &CheckReport<S>) -> Result<()> {
    if report.passed() {
        return Ok(());
    }
    Err(Error::Precondition {
        what: what.to_string(),
        summary: format!("{} violation(s) in {}", report.violation_count(), report.failed().join(", ")),
    })
}

pub(crate) fn input_err(location: impl Into<String>, message: impl Into<String>) -> Error {
    Error::Input { location: location.into(), message: message.into() }
}
