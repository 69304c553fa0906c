//! Linear SVMs: hinge-loss dual coordinate descent, one-vs-one multiclass
//! voting, and a versioned JSON model format.

mod multiclass;
mod persist;
mod solver;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::corpus::{ClassificationLevel, CorpusError, Label};
use crate::features::FeatureError;
use crate::lexicon::LexiconError;

pub use multiclass::{featurize, predict, train_multiclass, MulticlassModel, Vote};
pub use persist::{load_model, read_model, save_model, write_model, MODEL_FORMAT_VERSION};
pub use solver::{primal_objective, train_binary, train_binary_traced, SolverTrace};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SvmError {
    #[error("training targets contain a single class")]
    SingleClassInput,
    #[error("no training examples")]
    EmptyInput,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("feature value at row {row}, column {col} is not finite")]
    NonFiniteFeature { row: usize, col: usize },
    #[error("target {0} is not +1 or -1")]
    InvalidTarget(i8),
    #[error("{0} examples but {1} targets")]
    LengthMismatch(usize, usize),
    #[error("invalid training configuration: {0}")]
    InvalidConfig(String),
    #[error("class {0} has no training examples")]
    MissingClass(Label),
    #[error("feature mask is empty")]
    EmptyMask,
    #[error("label {label} is outside the {level} label set")]
    LabelOutOfLevel { label: Label, level: ClassificationLevel },
    #[error("unsupported model format version {0:?}")]
    UnsupportedVersion(String),
    #[error("corrupt model file: {0}")]
    CorruptModel(String),
    #[error("{path}: {message}")]
    Io { path: String, message: String },
    #[error(transparent)]
    Corpus(#[from] CorpusError),
    #[error(transparent)]
    Feature(#[from] FeatureError),
    #[error(transparent)]
    Lexicon(#[from] LexiconError),
}

/// Solver hyperparameters.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrainConfig {
    /// Hinge-loss cost.
    pub c: f64,
    /// Stopping threshold on the largest projected-gradient violation of an epoch.
    pub tolerance: f64,
    pub max_epochs: usize,
    pub seed: u64,
    /// Optional per-class multipliers of `c`; absent classes use 1.
    #[serde(default)]
    pub class_weights: BTreeMap<Label, f64>,
}

impl Default for TrainConfig {
    fn default() -> Self {
        Self { c: 1.0, tolerance: 1e-3, max_epochs: 1000, seed: 0, class_weights: BTreeMap::new() }
    }
}

impl TrainConfig {
    pub fn validate(&self) -> Result<(), SvmError> {
        if !(self.c.is_finite() && self.c > 0.0) {
            return Err(SvmError::InvalidConfig(format!("C must be positive, got {}", self.c)));
        }
        if !(self.tolerance.is_finite() && self.tolerance > 0.0) {
            return Err(SvmError::InvalidConfig(format!("tolerance must be positive, got {}", self.tolerance)));
        }
        if self.max_epochs == 0 {
            return Err(SvmError::InvalidConfig("max_epochs must be positive".into()));
        }
        for (label, w) in &self.class_weights {
            if !(w.is_finite() && *w > 0.0) {
                return Err(SvmError::InvalidConfig(format!("class weight for {label} must be positive")));
            }
        }
        Ok(())
    }

    pub fn cost_for(&self, label: Label) -> f64 {
        self.c * self.class_weights.get(&label).copied().unwrap_or(1.0)
    }
}

/// A trained linear decision function `w·x + b` separating
/// `positive_label` (+1) from `negative_label` (-1).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BinaryLinearModel {
    pub positive_label: Label,
    pub negative_label: Label,
    pub cost: f64,
    pub bias: f64,
    pub weights: Vec<f64>,
    /// Solver epochs used.
    pub epochs: usize,
}

impl BinaryLinearModel {
    pub fn dimension(&self) -> usize {
        self.weights.len()
    }

    pub fn decision(&self, x: &[f64]) -> Result<f64, SvmError> {
        if x.len() != self.weights.len() {
            return Err(SvmError::DimensionMismatch { expected: self.weights.len(), found: x.len() });
        }
        Ok(dot(&self.weights, x) + self.bias)
    }
}

pub fn decision(m: &BinaryLinearModel, x: &[f64]) -> Result<f64, SvmError> {
    m.decision(x)
}

pub(crate) fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}
