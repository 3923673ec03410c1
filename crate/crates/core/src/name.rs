use std::borrow::Borrow;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A single path segment: a nonempty string over `[A-Za-z0-9_]`.
///
/// Names order by the bytes of their text. That is the fixed linear order on
/// symbols from which the lexicographic order on [`Path`](crate::Path) is built.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Name(String);

pub(crate) fn is_name_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_'
}

impl Name {
    pub fn parse(text: &str) -> Result<Name> {
        if text.is_empty() {
            return Err(Error::BadName {
                text: String::new(),
                index: 0,
            });
        }
        if let Some(index) = text.chars().position(|c| !is_name_char(c)) {
            return Err(Error::BadName {
                text: text.to_owned(),
                index,
            });
        }
        Ok(Name(text.to_owned()))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

/// Parses a single name. Equivalent to [`Name::parse`].
pub fn parse_name(text: &str) -> Result<Name> {
    Name::parse(text)
}

impl FromStr for Name {
    type Err = Error;

    fn from_str(s: &str) -> Result<Name> {
        Name::parse(s)
    }
}

impl TryFrom<&str> for Name {
    type Error = Error;

    fn try_from(s: &str) -> Result<Name> {
        Name::parse(s)
    }
}

impl AsRef<str> for Name {
    fn as_ref(&self) -> &str {
        &self.0
    }
}

impl Borrow<str> for Name {
    fn borrow(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Name {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for Name {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Name({})", self.0)
    }
}
