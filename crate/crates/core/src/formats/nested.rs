use std::fmt;

use serde_json::{Map, Value};

use crate::dtry::{Dtry, NonEmptyDtry};
use crate::error::ErrorCode;
use crate::formats::{Diagnostic, Diagnostics};
use crate::name::Name;
use crate::record::NonEmptyRecord;

/// A JSON value that is not an object, i.e. something that can sit at a leaf
/// of the nested format.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Scalar(Value);

impl Scalar {
    /// `None` for objects.
    pub fn new(value: Value) -> Option<Scalar> {
        if value.is_object() {
            None
        } else {
            Some(Scalar(value))
        }
    }

    pub fn string(s: impl Into<String>) -> Scalar {
        Scalar(Value::String(s.into()))
    }

    pub fn as_value(&self) -> &Value {
        &self.0
    }

    pub fn into_value(self) -> Value {
        self.0
    }

    /// Reads a flat-format value. Text that is the canonical JSON spelling of
    /// a number, boolean, null or array becomes that value; anything else is
    /// a string.
    pub fn from_flat_value(text: &str) -> Scalar {
        match serde_json::from_str::<Value>(text) {
            Ok(v @ (Value::Null | Value::Bool(_) | Value::Number(_) | Value::Array(_)))
                if serde_json::to_string(&v).is_ok_and(|s| s == text) =>
            {
                Scalar(v)
            }
            _ => Scalar(Value::String(text.to_owned())),
        }
    }

    /// Writes a flat-format value. Strings are written raw when they read
    /// back as the same string, otherwise JSON-quoted; other values use
    /// compact JSON.
    pub fn to_flat_value(&self) -> String {
        match &self.0 {
            Value::String(s)
                if s.trim() == s
                    && !s.contains(['\n', '\r'])
                    && Scalar::from_flat_value(s).0.is_string() =>
            {
                s.clone()
            }
            v => v.to_string(),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_flat_value())
    }
}

/// Parses the nested JSON format. Invalid keys and empty objects below the
/// top level are all reported; line numbers for them point at the first
/// occurrence of the offending key in the text.
pub fn parse_nested(text: &str) -> Result<Dtry<Scalar>, Diagnostics> {
    let value: Value = serde_json::from_str(text).map_err(|e| {
        Diagnostics(vec![Diagnostic::new(
            ErrorCode::Syntax,
            e.line().max(1),
            e.to_string(),
        )])
    })?;
    let mut diagnostics = Vec::new();
    let root = match value {
        Value::Object(map) if map.is_empty() => None,
        Value::Object(map) => node_from_object(map, "", text, &mut diagnostics),
        v => Some(NonEmptyDtry::Leaf(Scalar(v))),
    };
    if diagnostics.is_empty() {
        Ok(Dtry::from(root))
    } else {
        diagnostics.sort_by_key(|d| d.line);
        Err(Diagnostics(diagnostics))
    }
}

fn key_line(text: &str, key: &str) -> usize {
    let quoted = Value::String(key.to_owned()).to_string();
    text.find(&quoted)
        .map_or(1, |at| text[..at].matches('\n').count() + 1)
}

fn node_from_object(
    map: Map<String, Value>,
    at: &str,
    text: &str,
    diagnostics: &mut Vec<Diagnostic>,
) -> Option<NonEmptyDtry<Scalar>> {
    let mut children = Vec::with_capacity(map.len());
    for (key, value) in map {
        let shown = if at.is_empty() {
            key.clone()
        } else {
            format!("{at}.{key}")
        };
        let name = match Name::parse(&key) {
            Ok(name) => Some(name),
            Err(e) => {
                diagnostics.push(Diagnostic::new(
                    ErrorCode::BadName,
                    key_line(text, &key),
                    format!("at `{shown}`: {e}"),
                ));
                None
            }
        };
        let child = match value {
            Value::Object(m) if m.is_empty() => {
                diagnostics.push(Diagnostic::new(
                    ErrorCode::EmptySubdir,
                    key_line(text, &key),
                    format!("empty subdirectory at `{shown}`"),
                ));
                None
            }
            Value::Object(m) => node_from_object(m, &shown, text, diagnostics),
            v => Some(NonEmptyDtry::Leaf(Scalar(v))),
        };
        if let (Some(name), Some(child)) = (name, child) {
            children.push((name, child));
        }
    }
    NonEmptyRecord::from_entries(children).map(NonEmptyDtry::Node)
}

fn to_json(d: &NonEmptyDtry<Scalar>) -> Value {
    match d {
        NonEmptyDtry::Leaf(x) => x.0.clone(),
        NonEmptyDtry::Node(r) => Value::Object(
            r.iter()
                .map(|(k, v)| (k.as_str().to_owned(), to_json(v)))
                .collect(),
        ),
    }
}

/// Canonical nested form: pretty-printed JSON with keys in byte order. A
/// root leaf is written as the bare value and the empty directory as `{}`.
pub fn emit_nested(d: &Dtry<Scalar>) -> String {
    let value = d.root().map_or_else(|| Value::Object(Map::new()), to_json);
    serde_json::to_string_pretty(&value).expect("JSON values always serialize")
}

pub fn flat_to_nested(d: &Dtry<String>) -> Dtry<Scalar> {
    d.map_ref(|s| Scalar::from_flat_value(s))
}

pub fn nested_to_flat(d: &Dtry<Scalar>) -> Dtry<String> {
    d.map_ref(Scalar::to_flat_value)
}
