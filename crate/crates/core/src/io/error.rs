use thiserror::Error;

/// A parse failure with its position in the input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, byte {offset}: expected {expected}, found {found:?}")]
pub struct FormatError {
    pub line: usize,
    pub offset: usize,
    pub expected: String,
    pub found: String,
}
