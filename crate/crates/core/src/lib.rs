//! Directories: finite, name-indexed tries with values at their leaves.
//!
//! * [`Name`] and [`Path`] are validated segments and period-separated paths.
//! * [`Dtry`] is the directory monad: [`Dtry::leaf`] is the unit,
//!   [`Dtry::flatten`] the multiplication, and [`Dtry::path_map`] /
//!   [`Dtry::from_path_map`] convert to and from prefix-free [`PathMap`]s.
//! * [`formats`] reads and writes the flat `path = value` format and the
//!   nested JSON format.
//! * [`fincat`] lifts directories to finite categories: directory-indexed
//!   families of objects, their morphisms, and strict algebras.
//!
//! ```
//! use dtry::{Dtry, Path};
//!
//! let d = Dtry::empty()
//!     .insert("a.x".parse::<Path>()?, 2)?
//!     .insert("a.y".parse()?, 1)?
//!     .insert("b".parse()?, 3)?;
//! assert!(d.clone().insert("a".parse()?, 0).is_err()); // `a` is a prefix of `a.x`
//!
//! let nested = Dtry::leaf(d.clone()).prefix("sys".parse()?);
//! assert_eq!(nested.flatten().get(&"sys.a.x".parse()?), Some(&2));
//! # Ok::<(), dtry::Error>(())
//! ```

pub mod cli;
pub mod dtry;
pub mod error;
pub mod fincat;
pub mod formats;
pub mod name;
pub mod path;
pub mod record;

pub use crate::dtry::{Dtry, NonEmptyDtry, PathMap};
pub use crate::error::{Error, ErrorCode, Result};
pub use crate::name::{parse_name, Name};
pub use crate::path::{concat, is_prefix, is_prefix_free, lex_cmp, parse_path, Path, PathSet};
pub use crate::record::{filter_nothings, NonEmptyRecord};
