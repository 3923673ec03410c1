//! The `dtry` command-line tool.
//!
//! Exit codes: 0 success, 1 invalid input, 2 I/O failure, 3 path not found.
//! Documents go to standard output and diagnostics to standard error, one per
//! line as `LINE:CODE:MESSAGE`.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::dtry::Dtry;
use crate::formats::{
    emit_flat, emit_nested, flat_to_nested, nested_to_flat, parse_flat, parse_flat_document,
    parse_nested, Diagnostics, Scalar,
};
use crate::name::Name;
use crate::path::Path;
use crate::record::NonEmptyRecord;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_IO: i32 = 2;
pub const EXIT_NOT_FOUND: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "dtry",
    version,
    about = "Validate, convert, query and merge directory files"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Flat,
    Nested,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check that a file parses to a directory
    Validate {
        /// Input format; by default `.json` files are nested and everything else is flat
        #[arg(long)]
        format: Option<Format>,
        /// Input file, or `-` for standard input
        file: PathBuf,
    },
    /// Convert between the flat and nested formats
    Convert {
        #[arg(long)]
        from: Option<Format>,
        #[arg(long)]
        to: Format,
        file: PathBuf,
    },
    /// Print the subdirectory at a path, or the bare value at a complete path
    Get {
        #[arg(long)]
        format: Option<Format>,
        /// Period-separated path; the empty string is the root
        path: String,
        file: PathBuf,
    },
    /// Place each input under its own name and print the flat result
    Merge {
        /// NAME=FILE; repeat for each input
        #[arg(long = "prefix", value_name = "NAME=FILE", required = true)]
        prefixes: Vec<String>,
        #[arg(long)]
        format: Option<Format>,
    },
    /// Check that the keys of a flat file are duplicate-free and prefix-free
    Check { file: PathBuf },
}

/// A failed command: the exit code and the lines to print on standard error.
#[derive(Debug)]
struct Failure {
    code: i32,
    lines: Vec<String>,
}

impl Failure {
    fn invalid(lines: Vec<String>) -> Self {
        Failure {
            code: EXIT_INVALID,
            lines,
        }
    }
}

impl From<Diagnostics> for Failure {
    fn from(d: Diagnostics) -> Self {
        Failure::invalid(d.iter().map(ToString::to_string).collect())
    }
}

enum Loaded {
    Flat(Dtry<String>),
    Nested(Dtry<Scalar>),
}

impl Loaded {
    fn into_flat(self) -> Dtry<String> {
        match self {
            Loaded::Flat(d) => d,
            Loaded::Nested(d) => nested_to_flat(&d),
        }
    }

    fn into_nested(self) -> Dtry<Scalar> {
        match self {
            Loaded::Flat(d) => flat_to_nested(&d),
            Loaded::Nested(d) => d,
        }
    }
}

struct Io<'a> {
    stdin: &'a mut dyn Read,
    stdout: &'a mut dyn Write,
}

impl Io<'_> {
    fn read(&mut self, file: &std::path::Path) -> Result<String, Failure> {
        let io_failure = |e: std::io::Error| Failure {
            code: EXIT_IO,
            lines: vec![format!("{}: {e}", file.display())],
        };
        if file.as_os_str() == "-" {
            let mut text = String::new();
            self.stdin.read_to_string(&mut text).map_err(io_failure)?;
            Ok(text)
        } else {
            std::fs::read_to_string(file).map_err(io_failure)
        }
    }

    fn load(&mut self, file: &std::path::Path, format: Option<Format>) -> Result<Loaded, Failure> {
        let text = self.read(file)?;
        let format = format.unwrap_or_else(|| detect_format(file));
        Ok(match format {
            Format::Flat => Loaded::Flat(parse_flat(&text)?),
            Format::Nested => Loaded::Nested(parse_nested(&text)?),
        })
    }

    fn write(&mut self, text: &str) -> Result<(), Failure> {
        self.stdout.write_all(text.as_bytes()).map_err(|e| Failure {
            code: EXIT_IO,
            lines: vec![format!("<stdout>: {e}")],
        })
    }
}

fn detect_format(file: &std::path::Path) -> Format {
    match file.extension() {
        Some(ext) if ext.eq_ignore_ascii_case("json") => Format::Nested,
        _ => Format::Flat,
    }
}

fn with_newline(mut s: String) -> String {
    if !s.ends_with('\n') {
        s.push('\n');
    }
    s
}

fn execute(command: Command, io: &mut Io<'_>) -> Result<(), Failure> {
    match command {
        Command::Validate { format, file } => io.load(&file, format).map(|_| ()),
        Command::Convert { from, to, file } => {
            let loaded = io.load(&file, from)?;
            let out = match to {
                Format::Flat => emit_flat(&loaded.into_flat()),
                Format::Nested => with_newline(emit_nested(&loaded.into_nested())),
            };
            io.write(&out)
        }
        Command::Get { format, path, file } => {
            let at = Path::parse(&path).map_err(|e| Failure::invalid(vec![e.to_string()]))?;
            let d = io.load(&file, format)?.into_flat();
            let Some(sub) = d.lookup(&at) else {
                return Err(Failure {
                    code: EXIT_NOT_FOUND,
                    lines: vec![format!("path `{at}` not found")],
                });
            };
            match (at.is_root(), sub.root()) {
                (false, Some(crate::NonEmptyDtry::Leaf(value))) => {
                    io.write(&with_newline(value.clone()))
                }
                _ => io.write(&emit_flat(&sub)),
            }
        }
        Command::Merge { prefixes, format } => {
            let mut parts = BTreeMap::new();
            for spec in &prefixes {
                let Some((name, file)) = spec.split_once('=') else {
                    return Err(Failure::invalid(vec![format!(
                        "--prefix {spec:?}: expected NAME=FILE"
                    )]));
                };
                let name = Name::parse(name)
                    .map_err(|e| Failure::invalid(vec![format!("--prefix {spec:?}: {e}")]))?;
                if parts.contains_key(&name) {
                    return Err(Failure::invalid(vec![format!(
                        "prefix `{name}` given twice"
                    )]));
                }
                let d = io.load(std::path::Path::new(file), format)?.into_flat();
                parts.insert(name, d);
            }
            let parts = NonEmptyRecord::new(parts).expect("clap requires at least one --prefix");
            io.write(&emit_flat(&Dtry::merge_disjoint(parts)))
        }
        Command::Check { file } => {
            let text = io.read(&file)?;
            let (doc, mut diagnostics) = parse_flat_document(&text);
            diagnostics.extend(doc.key_diagnostics());
            diagnostics.sort_by_key(|d| d.line);
            if diagnostics.is_empty() {
                Ok(())
            } else {
                Err(Diagnostics(diagnostics).into())
            }
        }
    }
}

/// Runs the tool on `args` (including the program name) and returns the exit
/// code.
pub fn run<I, T>(
    args: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(stderr, "{e}");
            return if e.use_stderr() {
                EXIT_INVALID
            } else {
                EXIT_OK
            };
        }
    };
    let mut io = Io { stdin, stdout };
    match execute(cli.command, &mut io) {
        Ok(()) => EXIT_OK,
        Err(failure) => {
            for line in failure.lines {
                let _ = writeln!(stderr, "{line}");
            }
            failure.code
        }
    }
}
