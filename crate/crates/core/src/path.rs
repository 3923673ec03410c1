use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::name::Name;

/// A finite sequence of names, written with `.` between segments.
///
/// The empty path is the root and is written as the empty string. The derived
/// ordering is lexicographic: segments compare by byte order and a proper
/// prefix precedes its extensions.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Path(Vec<Name>);

/// A finite set of paths, iterated in lexicographic order.
pub type PathSet = BTreeSet<Path>;

impl Path {
    pub fn root() -> Path {
        Path(Vec::new())
    }

    pub fn new(segments: Vec<Name>) -> Path {
        Path(segments)
    }

    pub fn parse(text: &str) -> Result<Path> {
        if text.is_empty() {
            return Ok(Path::root());
        }
        text.split('.')
            .enumerate()
            .map(|(segment, part)| {
                Name::parse(part).map_err(|_| Error::BadPath {
                    text: text.to_owned(),
                    segment,
                })
            })
            .collect::<Result<Vec<_>>>()
            .map(Path)
    }

    pub fn segments(&self) -> &[Name] {
        &self.0
    }

    pub fn into_segments(self) -> Vec<Name> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Same as [`Path::is_root`].
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_root(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first(&self) -> Option<&Name> {
        self.0.first()
    }

    /// `self` followed by `other`.
    pub fn concat(&self, other: &Path) -> Path {
        let mut segments = Vec::with_capacity(self.len() + other.len());
        segments.extend_from_slice(&self.0);
        segments.extend_from_slice(&other.0);
        Path(segments)
    }

    /// `[name]` followed by `self`.
    pub fn prefixed(&self, name: &Name) -> Path {
        let mut segments = Vec::with_capacity(self.len() + 1);
        segments.push(name.clone());
        segments.extend_from_slice(&self.0);
        Path(segments)
    }

    pub fn child(&self, name: &Name) -> Path {
        let mut segments = self.0.clone();
        segments.push(name.clone());
        Path(segments)
    }

    /// The first `len` segments.
    pub fn truncated(&self, len: usize) -> Path {
        Path(self.0[..len.min(self.len())].to_vec())
    }

    /// Reflexive: every path is a prefix of itself.
    pub fn is_prefix_of(&self, other: &Path) -> bool {
        other.0.starts_with(&self.0)
    }

    /// The remainder of `self` after `prefix`, if `prefix` is a prefix of it.
    pub fn strip_prefix(&self, prefix: &Path) -> Option<Path> {
        self.0
            .strip_prefix(prefix.0.as_slice())
            .map(|rest| Path(rest.to_vec()))
    }
}

pub fn parse_path(text: &str) -> Result<Path> {
    Path::parse(text)
}

pub fn concat(p: &Path, q: &Path) -> Path {
    p.concat(q)
}

pub fn is_prefix(p: &Path, q: &Path) -> bool {
    p.is_prefix_of(q)
}

pub fn lex_cmp(p: &Path, q: &Path) -> Ordering {
    p.cmp(q)
}

/// True when no path in `paths` is a proper prefix of another.
///
/// In lexicographic order every path that extends `p` sorts directly after
/// `p` (possibly after other extensions of `p`), so checking neighbours is
/// enough.
pub fn is_prefix_free(paths: &PathSet) -> bool {
    paths
        .iter()
        .zip(paths.iter().skip(1))
        .all(|(p, q)| !p.is_prefix_of(q))
}

/// Every pair `(p, q)` of distinct members with `p` a prefix of `q`, sorted
/// by `q` and then by `p`.
pub fn prefix_conflicts(paths: &PathSet) -> Vec<(Path, Path)> {
    let mut out = Vec::new();
    for q in paths {
        for len in 0..q.len() {
            let p = q.truncated(len);
            if paths.contains(&p) {
                out.push((p, q.clone()));
            }
        }
    }
    out
}

impl FromStr for Path {
    type Err = Error;

    fn from_str(s: &str) -> Result<Path> {
        Path::parse(s)
    }
}

impl FromIterator<Name> for Path {
    fn from_iter<I: IntoIterator<Item = Name>>(iter: I) -> Path {
        Path(iter.into_iter().collect())
    }
}

impl From<Name> for Path {
    fn from(name: Name) -> Path {
        Path(vec![name])
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, name) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(".")?;
            }
            f.write_str(name.as_str())?;
        }
        Ok(())
    }
}

impl fmt::Debug for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Path({self})")
    }
}
