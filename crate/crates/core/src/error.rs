use std::fmt;

use thiserror::Error;

use crate::path::Path;

/// Stable diagnostic codes shared by the library, the CLI and the C ABI.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ErrorCode {
    Syntax,
    BadName,
    BadPath,
    DuplicatePath,
    PrefixConflict,
    EmptySubdir,
    NotACategory,
    NotComposable,
}

impl ErrorCode {
    pub fn as_str(self) -> &'static str {
        match self {
            ErrorCode::Syntax => "E_SYNTAX",
            ErrorCode::BadName => "E_BAD_NAME",
            ErrorCode::BadPath => "E_BAD_PATH",
            ErrorCode::DuplicatePath => "E_DUPLICATE_PATH",
            ErrorCode::PrefixConflict => "E_PREFIX_CONFLICT",
            ErrorCode::EmptySubdir => "E_EMPTY_SUBDIR",
            ErrorCode::NotACategory => "E_NOT_A_CATEGORY",
            ErrorCode::NotComposable => "E_NOT_COMPOSABLE",
        }
    }
}

impl fmt::Display for ErrorCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid name {text:?}: {}", describe_name_fault(.text, *.index))]
    BadName { text: String, index: usize },

    #[error("invalid path {text:?}: segment {segment} is not a valid name")]
    BadPath { text: String, segment: usize },

    /// `existing` is already bound and is a prefix of `inserted`, an extension
    /// of it, or equal to it.
    #[error("path `{inserted}` conflicts with existing path `{existing}`")]
    PrefixConflict { existing: Path, inserted: Path },

    #[error("not a category: {0}")]
    NotACategory(String),

    #[error("not composable: {0}")]
    NotComposable(String),
}

fn describe_name_fault(text: &str, index: usize) -> String {
    match text.chars().nth(index) {
        None => "names must be nonempty".to_owned(),
        Some(c) => format!("character {c:?} at index {index} is not in [A-Za-z0-9_]"),
    }
}

impl Error {
    pub fn code(&self) -> ErrorCode {
        match self {
            Error::BadName { .. } => ErrorCode::BadName,
            Error::BadPath { .. } => ErrorCode::BadPath,
            Error::PrefixConflict { .. } => ErrorCode::PrefixConflict,
            Error::NotACategory(_) => ErrorCode::NotACategory,
            Error::NotComposable(_) => ErrorCode::NotComposable,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
