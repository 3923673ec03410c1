use std::collections::btree_map::{BTreeMap, Entry};
use std::fmt::Write as _;

use crate::dtry::{Dtry, PathMap};
use crate::error::{Error, ErrorCode};
use crate::formats::{Diagnostic, Diagnostics};
use crate::path::{prefix_conflicts, Path, PathSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlatEntry {
    pub line: usize,
    pub path: Path,
    /// The text after `=`, trimmed. Never interpreted.
    pub value: String,
}

/// The bindings of a flat document in file order, before any check on the
/// key set.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FlatDocument {
    pub entries: Vec<FlatEntry>,
}

/// Line-level parse. Returns every well-formed binding along with a
/// diagnostic for every malformed line.
pub fn parse_flat_document(text: &str) -> (FlatDocument, Vec<Diagnostic>) {
    let mut entries = Vec::new();
    let mut diagnostics = Vec::new();
    for (index, raw) in text.split('\n').enumerate() {
        let line = index + 1;
        let content = raw.strip_suffix('\r').unwrap_or(raw);
        if content.trim().is_empty() || content.starts_with('#') {
            continue;
        }
        let Some((lhs, rhs)) = content.split_once('=') else {
            diagnostics.push(Diagnostic::new(
                ErrorCode::Syntax,
                line,
                "expected `path = value`",
            ));
            continue;
        };
        let path_text = lhs.trim();
        match Path::parse(path_text) {
            Ok(path) => entries.push(FlatEntry {
                line,
                path,
                value: rhs.trim().to_owned(),
            }),
            Err(Error::BadPath { segment, .. }) => diagnostics.push(Diagnostic::new(
                ErrorCode::BadPath,
                line,
                format!("invalid path {path_text:?}: segment {segment} is not a valid name"),
            )),
            Err(e) => diagnostics.push(Diagnostic::new(e.code(), line, e.to_string())),
        }
    }
    (FlatDocument { entries }, diagnostics)
}

impl FlatDocument {
    /// Duplicate keys and prefix conflicts. Each problem is reported on the
    /// later of the two lines involved. Works on the key list alone.
    pub fn key_diagnostics(&self) -> Vec<Diagnostic> {
        let mut diagnostics = Vec::new();
        let mut first_line: BTreeMap<&Path, usize> = BTreeMap::new();
        for entry in &self.entries {
            match first_line.entry(&entry.path) {
                Entry::Vacant(v) => {
                    v.insert(entry.line);
                }
                Entry::Occupied(o) => diagnostics.push(Diagnostic::new(
                    ErrorCode::DuplicatePath,
                    entry.line,
                    format!("path `{}` already defined on line {}", entry.path, o.get()),
                )),
            }
        }
        let keys: PathSet = first_line.keys().map(|p| (*p).clone()).collect();
        for (short, long) in prefix_conflicts(&keys) {
            let (ls, ll) = (first_line[&short], first_line[&long]);
            let (here, line, other, other_line) = if ll > ls {
                (&long, ll, &short, ls)
            } else {
                (&short, ls, &long, ll)
            };
            diagnostics.push(Diagnostic::new(
                ErrorCode::PrefixConflict,
                line,
                format!("path `{here}` conflicts with `{other}` on line {other_line}"),
            ));
        }
        diagnostics.sort_by_key(|d| d.line);
        diagnostics
    }

    pub fn to_path_map(&self) -> PathMap<String> {
        self.entries
            .iter()
            .map(|e| (e.path.clone(), e.value.clone()))
            .collect()
    }
}

/// Parses a flat document into a directory. Fails with every diagnostic
/// found when any line is malformed or the key set is not duplicate-free and
/// prefix-free.
pub fn parse_flat(text: &str) -> Result<Dtry<String>, Diagnostics> {
    let (doc, mut diagnostics) = parse_flat_document(text);
    diagnostics.extend(doc.key_diagnostics());
    if !diagnostics.is_empty() {
        diagnostics.sort_by_key(|d| d.line);
        return Err(Diagnostics(diagnostics));
    }
    Dtry::from_path_map(doc.to_path_map()).map_err(|e| {
        let line = match &e {
            Error::PrefixConflict { inserted, .. } => doc
                .entries
                .iter()
                .find(|entry| &entry.path == inserted)
                .map_or(1, |entry| entry.line),
            _ => 1,
        };
        Diagnostics(vec![Diagnostic::new(e.code(), line, e.to_string())])
    })
}

/// Canonical flat form: one `path = value` line per complete path in
/// lexicographic order. Values are written verbatim, so they must be single
/// lines without surrounding whitespace to read back unchanged.
pub fn emit_flat(d: &Dtry<String>) -> String {
    let mut out = String::new();
    for (path, value) in d.iter() {
        let _ = writeln!(out, "{path} = {value}");
    }
    out
}
