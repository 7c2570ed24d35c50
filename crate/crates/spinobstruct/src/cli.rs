//! Command line front end. [`run`] maps every outcome to an exit code:
//! 0 when a requested structure exists (or a suite passes), 3 when none
//! does, 1 for usage and config errors, 2 when a resource cap is hit.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::Serialize;
use spinobstruct_core::catalog::{gamma_catalog, gauge_catalog, manifold_catalog};
use spinobstruct_core::groups::DEFAULT_MAX_COSETS;

use crate::analyze::{analyze, exit_code, AnalyzeOptions, RunError, EXIT_EXISTS, EXIT_NONE, EXIT_USAGE};
use crate::config::Config;
use crate::suites::{run_suite, SuiteParams};

pub const MAX_COSETS_ENV: &str = "SPINOBSTRUCT_MAX_COSETS";

#[derive(Parser, Debug)]
#[command(name = "spinobstruct", version, about = "Decide spin, Spin^c and Spin^G structures from frame-bundle fundamental groups")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Analyze one manifold against the gauge targets in a TOML or JSON config
    Analyze {
        config: PathBuf,
        /// Write the JSON report to PATH, or to stdout in place of the text report when PATH is omitted or "-"
        #[arg(long, value_name = "PATH", num_args = 0..=1, default_missing_value = "-")]
        json: Option<String>,
        /// Search for largest-image witnesses and print generator image tables
        #[arg(long)]
        witnesses: bool,
        /// Deduplicate homomorphisms up to conjugacy in the target
        #[arg(long, value_name = "BOOL", default_value_t = true, action = clap::ArgAction::Set)]
        conjugacy_dedup: bool,
        /// Todd-Coxeter coset cap
        #[arg(long, env = MAX_COSETS_ENV, default_value_t = DEFAULT_MAX_COSETS)]
        max_cosets: usize,
        /// Include wall-clock timings in the report
        #[arg(long)]
        timings: bool,
    },
    /// Run an algebra verification suite: vec1-ideals, sl-span, jet-jacobi or cocycle
    Algebra {
        suite: String,
        #[arg(short = 'n', long = "n")]
        n: Option<usize>,
        /// Truncation level K (vec1-ideals, sl-span) or jet order k (jet-jacobi)
        #[arg(short = 'k', long = "k")]
        k: Option<u32>,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Number of random samples (jet-jacobi triples, cocycle pairs)
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// List manifold, gamma and gauge tags
    Catalog {
        #[arg(long)]
        json: bool,
    },
}

#[derive(Serialize)]
struct Entry {
    tag: &'static str,
    note: &'static str,
}

#[derive(Serialize)]
struct CatalogListing {
    manifolds: Vec<Entry>,
    gammas: Vec<Entry>,
    gauges: Vec<Entry>,
}

fn entries(v: Vec<(&'static str, &'static str)>) -> Vec<Entry> {
    v.into_iter().map(|(tag, note)| Entry { tag, note }).collect()
}

fn catalog_text() -> String {
    let mut out = String::new();
    for (title, list) in [("manifolds", manifold_catalog()), ("gamma", gamma_catalog()), ("gauge targets", gauge_catalog())] {
        out.push_str(title);
        out.push_str(":\n");
        let width = list.iter().map(|(t, _)| t.len()).max().unwrap_or(0);
        for (tag, note) in list {
            out.push_str(&format!("  {tag:width$}  {note}\n"));
        }
    }
    out
}

fn cmd_analyze(config: &Path, json: Option<&str>, opts: &AnalyzeOptions, out: &mut dyn Write) -> Result<i32, RunError> {
    let cfg = Config::load(config)?;
    let base = config.parent().unwrap_or(Path::new("."));
    let report = analyze(&cfg, base, opts)?;
    match json {
        Some("-") => write!(out, "{}", report.to_json()),
        Some(path) => {
            std::fs::write(path, report.to_json()).map_err(|e| RunError::Usage(format!("cannot write {path}: {e}")))?;
            write!(out, "{}", report.render())
        }
        None => write!(out, "{}", report.render()),
    }
    .map_err(|e| RunError::Usage(e.to_string()))?;
    Ok(exit_code(&report))
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_EXISTS };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let result = match cli.command {
        Command::Analyze { config, json, witnesses, conjugacy_dedup, max_cosets, timings } => {
            let opts = AnalyzeOptions { witnesses, conjugacy_dedup, max_cosets, timings };
            cmd_analyze(&config, json.as_deref(), &opts, out)
        }
        Command::Algebra { suite, n, k, seed, samples, json } => match run_suite(&suite, &SuiteParams { n, k, seed, samples }) {
            Ok(r) => {
                let text = if json { r.to_json() } else { r.render() };
                let _ = write!(out, "{text}");
                Ok(if r.pass { EXIT_EXISTS } else { EXIT_NONE })
            }
            Err(e) => Err(RunError::Usage(e.to_string())),
        },
        Command::Catalog { json } => {
            let text = if json {
                let listing = CatalogListing {
                    manifolds: entries(manifold_catalog()),
                    gammas: entries(gamma_catalog()),
                    gauges: entries(gauge_catalog()),
                };
                serde_json::to_string_pretty(&listing).expect("listing serializes") + "\n"
            } else {
                catalog_text()
            };
            let _ = write!(out, "{text}");
            Ok(EXIT_EXISTS)
        }
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
