use std::fmt;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// A value violates the contract of the operation it was passed to.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// An operation-specific precondition failed (e.g. the compact reduction guard).
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// The requested work exceeds a configured search or enumeration cap.
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    #[error(transparent)]
    Parse(#[from] ParseError),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }
}

/// Machine-readable classification of a parse failure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ParseErrorKind {
    MissingHeader,
    InvalidHeader,
    DuplicateHeader,
    UnexpectedLine,
    InvalidInteger,
    ColorOutOfRange,
    WrongPegCount,
    ScoreOutOfRange,
    MissingSeparator,
    VertexOutOfRange,
    SelfLoop,
    DuplicateEdge,
    EdgeCountMismatch,
}

impl ParseErrorKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ParseErrorKind::MissingHeader => "missing-header",
            ParseErrorKind::InvalidHeader => "invalid-header",
            ParseErrorKind::DuplicateHeader => "duplicate-header",
            ParseErrorKind::UnexpectedLine => "unexpected-line",
            ParseErrorKind::InvalidInteger => "invalid-integer",
            ParseErrorKind::ColorOutOfRange => "color-out-of-range",
            ParseErrorKind::WrongPegCount => "wrong-peg-count",
            ParseErrorKind::ScoreOutOfRange => "score-out-of-range",
            ParseErrorKind::MissingSeparator => "missing-separator",
            ParseErrorKind::VertexOutOfRange => "vertex-out-of-range",
            ParseErrorKind::SelfLoop => "self-loop",
            ParseErrorKind::DuplicateEdge => "duplicate-edge",
            ParseErrorKind::EdgeCountMismatch => "edge-count-mismatch",
        }
    }
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A parse failure tied to a 1-based line number.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
    pub message: String,
}

impl ParseError {
    pub fn new(line: usize, kind: ParseErrorKind, message: impl Into<String>) -> Self {
        ParseError {
            line,
            kind,
            message: message.into(),
        }
    }
}
