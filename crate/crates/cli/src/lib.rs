//! File formats, reports and command implementations for the `nchilbert` binary.

pub mod commands;
pub mod examples;
pub mod formats;

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use nchilbert_core::ErrorKind;

pub use commands::run;

/// Failure of a command, mapped to the process exit code.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error(transparent)]
    Core(#[from] nchilbert_core::Error),
    #[error("verification failed: {0}")]
    Mismatch(String),
}

impl CliError {
    /// 1 for a failed mathematical check, 2 for bad input, 3 for a resource cap.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) | CliError::Io { .. } => 2,
            CliError::Mismatch(_) => 1,
            CliError::Core(e) => match e.kind() {
                ErrorKind::Mathematical => 1,
                ErrorKind::Input => 2,
                ErrorKind::Resource => 3,
            },
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    /// `key: value` lines for reading.
    #[default]
    Text,
    /// `key=value` lines; series as comma-separated exact rationals.
    Structured,
}

/// Ordered key/value lines produced by a command.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    entries: Vec<(String, String)>,
}

impl Report {
    pub fn push(&mut self, key: impl Into<String>, value: impl ToString) {
        self.entries.push((key.into(), value.to_string()));
    }

    pub fn entries(&self) -> &[(String, String)] {
        &self.entries
    }

    /// First value stored under `key`.
    pub fn get(&self, key: &str) -> Option<&str> {
        self.entries
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }

    /// Multi-line values become one line per row: indented in text, repeated keys
    /// in structured output.
    pub fn render(&self, format: OutputFormat) -> String {
        let mut s = String::new();
        for (k, v) in &self.entries {
            match format {
                OutputFormat::Text if v.contains('\n') => {
                    s.push_str(&format!("{k}:\n"));
                    for line in v.lines() {
                        s.push_str(&format!("  {line}\n"));
                    }
                }
                OutputFormat::Text => s.push_str(&format!("{k}: {v}\n")),
                OutputFormat::Structured => {
                    for line in v.lines() {
                        s.push_str(&format!("{k}={line}\n"));
                    }
                    if v.is_empty() {
                        s.push_str(&format!("{k}=\n"));
                    }
                }
            }
        }
        s
    }
}

/// Command-line configuration shared by every subcommand.
#[derive(Clone, Debug, Parser)]
#[command(
    name = "nchilbert",
    version,
    about = "Hilbert series of monomial algebras via unambiguous grammars"
)]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
    /// Degree up to which series, languages and checks are computed.
    #[arg(long, global = true, default_value_t = 12)]
    pub max_deg: usize,
    /// Degree up to which grammars are certified unambiguous.
    #[arg(long, global = true, default_value_t = 12)]
    pub cert_deg: usize,
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,
    /// Cap on words visited by the scanning oracle.
    #[arg(long, global = true, default_value_t = nchilbert_core::homology::DEFAULT_SCAN_CAP, value_parser = clap::value_parser!(u64).range(1..))]
    pub scan_cap: u64,
    /// Cap on the number of completion basis elements.
    #[arg(long, global = true, default_value_t = 10_000, value_parser = clap::value_parser!(u64).range(1..))]
    pub max_basis: u64,
}

#[derive(Clone, Debug, Subcommand)]
pub enum Command {
    /// Algebraic system, eliminant and certified series of a grammar.
    Gamma {
        grammar: PathBuf,
        /// Variable to keep (default: the start variable).
        #[arg(long)]
        keep: Option<String>,
    },
    /// Bounded unambiguity certificate of a grammar.
    Ambiguity { grammar: PathBuf },
    /// Minimal right-linear grammar of a regular language (automaton, finite
    /// language or right-linear grammar file).
    QuotientGrammar { language: PathBuf },
    /// Chain languages of a finite antichain of relations.
    Chains {
        antichain: PathBuf,
        #[arg(long, default_value_t = 4)]
        kmax: usize,
    },
    /// Chain language `L_k` from the closed formulas, for a language or grammar file.
    GovorovChains {
        relations: PathBuf,
        #[arg(long)]
        k: usize,
    },
    /// Hilbert series from a chain specification.
    Hilbert {
        spec: PathBuf,
        /// Check the declared chain languages against computed chains to this degree.
        #[arg(long)]
        verify_chains: Option<usize>,
    },
    /// Hilbert series by counting normal words.
    Oracle { presentation: PathBuf },
    /// Hilbert series of relations `R · L · R'` of infinite global dimension.
    Uchain2 {
        r: PathBuf,
        rp: PathBuf,
        l: PathBuf,
        /// Number of generators.
        #[arg(long)]
        nm: usize,
    },
    /// Degree-truncated Gröbner–Shirshov basis of a presentation.
    Gsb {
        presentation: PathBuf,
        /// Grammar of the predicted infinite part of the leading words.
        #[arg(long)]
        predict: Option<PathBuf>,
        /// Language file of the predicted finite part of the leading words.
        #[arg(long)]
        finite: Option<PathBuf>,
    },
    /// Runs a bundled example and checks it against its known values.
    VerifyExample { id: String },
}
