use std::fmt;

use thiserror::Error;

/// Pipeline stage an error is attributed to in diagnostics.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Stage {
    Config,
    Load,
    Train,
    Predict,
    Evaluate,
    Select,
    Write,
    Report,
}

impl fmt::Display for Stage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Stage::Config => "config",
            Stage::Load => "load",
            Stage::Train => "train",
            Stage::Predict => "predict",
            Stage::Evaluate => "evaluate",
            Stage::Select => "select",
            Stage::Write => "write",
            Stage::Report => "report",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("error [{stage}]: {message}")]
pub struct CliError {
    pub stage: Stage,
    pub message: String,
}

impl CliError {
    pub fn new(stage: Stage, message: impl Into<String>) -> Self {
        Self { stage, message: message.into() }
    }

    pub fn at<E: fmt::Display>(stage: Stage) -> impl Fn(E) -> Self {
        move |e| Self::new(stage, e.to_string())
    }
}
