//! The `a1kit` command line.
//!
//! Module references are builtin names (`F2`, `A1`, `A1/(Sq1,Sq3)`, each
//! optionally prefixed by `S^n `) or paths to `.a1m` files. Exit status is 0
//! on success, 1 when a verification fails and 2 for usage or input errors.

pub mod modfile;
pub mod render;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::a1modules::A1Module;
use crate::invariants::{margolis_homology, GradedDims, Margolis};
use crate::paperreg::{export_json, find_entry, registry, verify_entry, ModuleSpec, SpecError};
use crate::resolutions::{ext_chart, minimal_resolution};

pub use modfile::{parse_module_file, FileError, ModuleFile};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Default bound on `--max-s` and `--max-t` for `ext` and `resolve`.
pub const DEFAULT_LIMIT: i32 = 60;

#[derive(Debug, Parser)]
#[command(name = "a1kit", version, about = "Computations with modules over A(1)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check the registry of short exact sequences.
    VerifyPaper {
        /// Only this entry, e.g. S6.
        #[arg(long)]
        entry: Option<String>,
        /// Write the registry and verdicts as JSON.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Draw a module's cells.
    Show {
        module: String,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Ext chart over A(1) from a minimal resolution.
    Ext {
        module: String,
        #[command(flatten)]
        bounds: Bounds,
        #[arg(long)]
        svg: Option<PathBuf>,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Margolis homology for Q0 and Q1.
    Margolis {
        module: String,
        #[arg(long)]
        json: bool,
    },
    /// Generator degrees of a minimal resolution.
    Resolve {
        module: String,
        #[command(flatten)]
        bounds: Bounds,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Args)]
struct Bounds {
    #[arg(long)]
    max_s: usize,
    #[arg(long)]
    max_t: i32,
    /// Refuse bounds above this.
    #[arg(long, default_value_t = DEFAULT_LIMIT)]
    limit: i32,
}

impl Bounds {
    fn check(&self) -> Result<(), String> {
        if self.max_s as i64 > self.limit as i64 || self.max_t > self.limit {
            return Err(format!(
                "bounds max_s={} max_t={} exceed the limit {} (raise it with --limit)",
                self.max_s, self.max_t, self.limit
            ));
        }
        if self.max_t < 0 {
            return Err("max_t must be nonnegative".to_string());
        }
        Ok(())
    }
}

#[derive(Debug, thiserror::Error)]
pub enum RefError {
    #[error(transparent)]
    Spec(#[from] SpecError),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{path}: {source}")]
    File { path: String, source: FileError },
}

/// Resolves a builtin name or a module file, with optional `S^n ` prefixes.
pub fn load_module(reference: &str) -> Result<A1Module, RefError> {
    let mut rest = reference.trim();
    let mut shift = 0;
    while let Some(tail) = rest.strip_prefix("S^") {
        match tail.split_once(char::is_whitespace).map(|(n, b)| (n.parse::<i32>(), b)) {
            Some((Ok(n), base)) => {
                shift += n;
                rest = base.trim_start();
            }
            _ => return Err(SpecError::Suspension(reference.to_string()).into()),
        }
    }
    let base = match ModuleSpec::parse(rest) {
        Ok(spec) => {
            let name = spec.to_string();
            spec.build()?.into_module().with_name(name)
        }
        Err(SpecError::Unknown(_)) if Path::new(rest).is_file() => {
            let text = std::fs::read_to_string(rest).map_err(|source| RefError::Io {
                path: rest.to_string(),
                source,
            })?;
            parse_module_file(&text).map_err(|source| RefError::File {
                path: rest.to_string(),
                source,
            })?
        }
        Err(e) => return Err(e.into()),
    };
    Ok(base.suspend(shift))
}

/// Runs the CLI on `args` (including the program name), writing to `out`
/// and `err`, and returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

fn write_file(path: &Path, contents: &str) -> Result<(), String> {
    std::fs::write(path, contents).map_err(|e| format!("{}: {e}", path.display()))
}

fn io(e: std::io::Error) -> String {
    e.to_string()
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32, String> {
    match command {
        Command::VerifyPaper { entry, json } => verify_paper(entry.as_deref(), json.as_deref(), out),
        Command::Show { module, svg } => {
            let m = load_module(&module).map_err(|e| e.to_string())?;
            out.write_all(render::ascii_cells(&m).as_bytes()).map_err(io)?;
            if let Some(path) = svg {
                write_file(&path, &render::svg_cells(&m))?;
            }
            Ok(EXIT_OK)
        }
        Command::Ext {
            module,
            bounds,
            svg,
            json,
        } => {
            bounds.check()?;
            let m = load_module(&module).map_err(|e| e.to_string())?;
            let chart = ext_chart(&minimal_resolution(&m, bounds.max_s, bounds.max_t));
            writeln!(out, "Ext over A(1) of {}", m.name()).map_err(io)?;
            out.write_all(render::ascii_chart(&chart).as_bytes()).map_err(io)?;
            if let Some(path) = svg {
                write_file(&path, &render::svg_chart(&chart))?;
            }
            if let Some(path) = json {
                let mut text = chart.to_json(Some(m.name()));
                text.push('\n');
                write_file(&path, &text)?;
            }
            Ok(EXIT_OK)
        }
        Command::Margolis { module, json } => {
            let m = load_module(&module).map_err(|e| e.to_string())?;
            let q0 = margolis_homology(&m, Margolis::Q0);
            let q1 = margolis_homology(&m, Margolis::Q1);
            if json {
                #[derive(Serialize)]
                struct Doc<'a> {
                    module: &'a str,
                    q0: GradedDims,
                    q1: GradedDims,
                }
                let doc = Doc { module: m.name(), q0, q1 };
                writeln!(out, "{}", serde_json::to_string_pretty(&doc).unwrap()).map_err(io)?;
            } else {
                writeln!(out, "{}\nQ0: {q0}\nQ1: {q1}", m.name()).map_err(io)?;
            }
            Ok(EXIT_OK)
        }
        Command::Resolve { module, bounds, json } => {
            bounds.check()?;
            let m = load_module(&module).map_err(|e| e.to_string())?;
            let r = minimal_resolution(&m, bounds.max_s, bounds.max_t);
            let stages: Vec<Vec<i32>> = r.stages().iter().map(|st| st.generator_degrees().to_vec()).collect();
            if json {
                #[derive(Serialize)]
                struct Doc<'a> {
                    module: &'a str,
                    max_s: usize,
                    max_t: i32,
                    generator_degrees: &'a [Vec<i32>],
                }
                let doc = Doc {
                    module: m.name(),
                    max_s: bounds.max_s,
                    max_t: bounds.max_t,
                    generator_degrees: &stages,
                };
                writeln!(out, "{}", serde_json::to_string_pretty(&doc).unwrap()).map_err(io)?;
            } else {
                writeln!(out, "minimal resolution of {} through t = {}", m.name(), bounds.max_t).map_err(io)?;
                for (s, degs) in stages.iter().enumerate() {
                    let list: Vec<String> = degs.iter().map(i32::to_string).collect();
                    writeln!(out, "F_{s}: [{}]", list.join(", ")).map_err(io)?;
                }
            }
            Ok(EXIT_OK)
        }
    }
}

fn verify_paper(entry: Option<&str>, json: Option<&Path>, out: &mut dyn Write) -> Result<i32, String> {
    let entries = match entry {
        Some(id) => vec![find_entry(id).ok_or_else(|| format!("unknown entry {id}"))?],
        None => registry(),
    };
    let reports: Vec<_> = entries.iter().map(verify_entry).collect();
    for (e, r) in entries.iter().zip(&reports) {
        let verdict = if r.exact { "exact" } else { "NOT EXACT" };
        let pairs = r.exact_pairs.map_or_else(|| "-".to_string(), |n| n.to_string());
        writeln!(
            out,
            "{:<4} {:<9} 0 -> {} -> {} -> {} -> 0   exact pairs: {pairs}",
            e.id, verdict, e.sub, e.mid, e.quot
        )
        .map_err(io)?;
        if let Some(msg) = &r.build_error {
            writeln!(out, "     {msg}").map_err(io)?;
        }
        if let Some(note) = e.notes {
            writeln!(out, "     note: {note}").map_err(io)?;
        }
    }
    let exact = reports.iter().filter(|r| r.exact).count();
    writeln!(out, "{exact}/{} exact", reports.len()).map_err(io)?;
    if let Some(path) = json {
        write_file(path, &export_json(&entries, &reports))?;
    }
    Ok(if exact == reports.len() { EXIT_OK } else { EXIT_FAILED })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("a1kit").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn verify_single_entry() {
        let (code, out, _) = run_args(&["verify-paper", "--entry", "S6"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("1/1 exact"));
    }

    #[test]
    fn unknown_entry() {
        let (code, _, err) = run_args(&["verify-paper", "--entry", "S99"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("unknown entry"));
    }

    #[test]
    fn show_builtins() {
        let (code, out, _) = run_args(&["show", "A1/(Sq1,Sq2)"]);
        assert_eq!(code, EXIT_OK);
        assert_eq!(out.matches('o').count(), 1);
        let (code, _, err) = run_args(&["show", "B7"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("unrecognized module"));
    }

    #[test]
    fn suspension_prefix() {
        let m = load_module("S^2 S^1 A1/(Sq1,Sq3)").unwrap();
        assert_eq!(m.bottom_degree(), Some(3));
        assert_eq!(m.name(), "S^3 A1/(Sq1,Sq3)");
    }

    #[test]
    fn margolis_output() {
        let (_, out, _) = run_args(&["margolis", "F2"]);
        assert!(out.contains("Q0: {0:1}"));
        assert!(out.contains("Q1: {0:1}"));
        let (_, out, _) = run_args(&["margolis", "A1"]);
        assert!(out.contains("Q0: {}"));
        assert!(out.contains("Q1: {}"));
    }

    #[test]
    fn resolve_output() {
        let (code, out, _) = run_args(&["resolve", "F2", "--max-s", "3", "--max-t", "10"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("F_0: [0]"));
        assert!(out.contains("F_1: [1, 2]"));
    }

    #[test]
    fn ext_respects_limit() {
        let (code, _, err) = run_args(&["ext", "F2", "--max-s", "3", "--max-t", "500"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("limit"));
        let (code, out, _) = run_args(&["ext", "A1", "--max-s", "2", "--max-t", "8"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("  0 | 1 . ."));
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(run_args(&["frobnicate"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["ext", "F2"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["--help"]).0, EXIT_OK);
    }
}
