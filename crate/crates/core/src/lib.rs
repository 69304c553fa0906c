//! Hybrid lexicon + SVM sentiment classification for Arabic tweets.
//!
//! Pipeline: [`corpus`] loading and splitting, [`text`] normalization and
//! tokenization, [`lexicon`] lookups, [`features`] extraction and scaling,
//! [`svm`] one-vs-one linear SVMs, [`selection`] backward feature
//! elimination and [`eval`] metrics.

pub mod corpus;
pub mod eval;
pub mod features;
pub mod fsutil;
pub mod lexicon;
pub mod rng;
pub mod selection;
pub mod svm;
pub mod synthetic;
pub mod text;

pub use corpus::{
    filter_by_level, load_corpus, read_corpus, stratified_split, ClassificationLevel, CorpusError, Dataset, Label,
    Tweet,
};
pub use eval::{evaluate, ConfusionMatrix, EvalError, EvalReport};
pub use features::{extract, mask_for_level, FeatureId, FeatureMask, FeatureVector, Scaler, NUM_FEATURES};
pub use lexicon::{load_bundle, BundlePaths, LexiconBundle, LexiconError, MarkerKind};
pub use selection::{AblationTrace, FeatureGroup, Grouping, SelectionData, SelectionError, SelectionMode};
pub use svm::{load_model, save_model, train_multiclass, MulticlassModel, SvmError, TrainConfig};
pub use text::{normalize, tokenize, Token, TokenKind, TokenizedTweet};
