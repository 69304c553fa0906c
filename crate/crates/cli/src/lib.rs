//! Batch front end for the sentiment workbench.
//!
//! `run` is the whole program minus process plumbing, so tests can drive it
//! with in-memory streams.

pub mod commands;
pub mod config;
pub mod error;

use std::io::{BufRead, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand};

use crate::commands::EXIT_ERROR;
use crate::config::{split_args, RunConfig};
pub use crate::error::{CliError, Stage};

const KEYS_HELP: &str = "Options are `--key value` pairs mirroring the config file keys: \
--config, --train, --test, --test-fraction, --lexicon-dir, --scored-lexicon, --polar-a, --polar-b, \
--negation, --intensifier, --diminisher, --modal, --contrast, --positive-emoticons, \
--negative-emoticons, --level, --features, --c, --tolerance, --max-epochs, --seed, --class-weights, \
--selection-mode, --grouping, --select-on, --dev-fraction, --output-dir, --model, --input, \
--assert-f1, --filter-to-level";

#[derive(Debug, Parser)]
#[command(name = "arasent", version, about = "Lexicon-feature SVM sentiment workbench for Arabic tweets")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Train a model and write it with a training summary.
    #[command(after_help = KEYS_HELP)]
    Train {
        #[arg(trailing_var_arg = true, allow_hyphen_values = true, num_args = 0.., value_name = "--KEY VALUE")]
        options: Vec<String>,
    },
    /// Label a corpus TSV, printing `id<TAB>label` lines.
    #[command(after_help = KEYS_HELP)]
    Predict {
        #[arg(trailing_var_arg = true, allow_hyphen_values = true, num_args = 0.., value_name = "--KEY VALUE")]
        options: Vec<String>,
    },
    /// Evaluate a model on the test corpus.
    #[command(after_help = KEYS_HELP)]
    Evaluate {
        #[arg(trailing_var_arg = true, allow_hyphen_values = true, num_args = 0.., value_name = "--KEY VALUE")]
        options: Vec<String>,
    },
    /// Run backward feature selection and retrain on the selected features.
    #[command(after_help = KEYS_HELP)]
    Ablate {
        #[arg(trailing_var_arg = true, allow_hyphen_values = true, num_args = 0.., value_name = "--KEY VALUE")]
        options: Vec<String>,
    },
    /// Render a CSV file as a text table.
    Report { csv: PathBuf },
}

fn configure(options: &[String]) -> Result<RunConfig, CliError> {
    let (config, overrides) = split_args(options)?;
    RunConfig::load(config.as_deref(), &overrides)
}

/// Run the program on `args` (including the program name) and return the
/// exit code: 0 success, 1 macro-F1 below `--assert-f1`, 2 any error.
pub fn run<I, S>(args: I, stdin: &mut dyn BufRead, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { 0 };
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(stderr, "{rendered}");
            } else {
                let _ = write!(stdout, "{rendered}");
            }
            return code;
        }
    };
    let result = match &cli.command {
        Command::Train { options } => configure(options).and_then(|c| commands::cmd_train(&c, stdout)),
        Command::Predict { options } => configure(options).and_then(|c| commands::cmd_predict(&c, stdin, stdout)),
        Command::Evaluate { options } => configure(options).and_then(|c| commands::cmd_evaluate(&c, stdout, stderr)),
        Command::Ablate { options } => configure(options).and_then(|c| commands::cmd_ablate(&c, stdout)),
        Command::Report { csv } => commands::cmd_report(csv, stdout),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "{e}");
            EXIT_ERROR
        }
    }
}
