//! Textual formats for directories.
//!
//! The flat format has one `path = value` binding per line:
//!
//! ```text
//! # comment
//! a.x = 2
//! a.y = 1
//! b   = 3
//! ```
//!
//! The nested format is JSON in which a non-empty object is an internal node
//! and every other value is a leaf. The empty object is allowed only at the
//! top level, where it denotes the empty directory.

use std::fmt;

use crate::error::ErrorCode;

pub mod flat;
pub mod nested;

pub use flat::{emit_flat, parse_flat, parse_flat_document, FlatDocument, FlatEntry};
pub use nested::{emit_nested, flat_to_nested, nested_to_flat, parse_nested, Scalar};

/// One problem found while reading a document. `line` is 1-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagnostic {
    pub code: ErrorCode,
    pub line: usize,
    pub message: String,
}

impl Diagnostic {
    pub fn new(code: ErrorCode, line: usize, message: impl Into<String>) -> Self {
        Diagnostic {
            code,
            line,
            message: message.into(),
        }
    }
}

/// `LINE:CODE:MESSAGE`
impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}:{}", self.line, self.code, self.message)
    }
}

/// The diagnostics of a rejected document, sorted by line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagnostics(pub Vec<Diagnostic>);

impl Diagnostics {
    pub fn iter(&self) -> std::slice::Iter<'_, Diagnostic> {
        self.0.iter()
    }

    pub fn codes(&self) -> Vec<ErrorCode> {
        self.0.iter().map(|d| d.code).collect()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for Diagnostics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, d) in self.0.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

impl std::error::Error for Diagnostics {}

impl<'a> IntoIterator for &'a Diagnostics {
    type Item = &'a Diagnostic;
    type IntoIter = std::slice::Iter<'a, Diagnostic>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}
