use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{solver, BinaryLinearModel, SvmError, TrainConfig};
use crate::corpus::{ClassificationLevel, Dataset, Label};
use crate::features::{extract, fit_scaler, FeatureMask, FeatureVector, Scaler};
use crate::lexicon::LexiconBundle;
use crate::text::TokenizedTweet;

/// One-vs-one ensemble over the labels of a level, sharing one feature mask
/// and scaler.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MulticlassModel {
    pub level: ClassificationLevel,
    pub mask: FeatureMask,
    pub scaler: Scaler,
    /// One model per label pair `(a, b)`, `a < b` in canonical order, `a` as +1.
    pub pairwise: Vec<BinaryLinearModel>,
}

/// Outcome of pairwise voting.
#[derive(Debug, Clone, PartialEq)]
pub struct Vote {
    pub winner: Label,
    /// Votes per label of the level, canonical order.
    pub votes: Vec<usize>,
    /// Sum of `|decision|` over the pairwise wins of each label.
    pub margins: Vec<f64>,
}

/// Normalize, tokenize and extract every tweet of a dataset.
pub fn featurize(d: &Dataset, bundle: &LexiconBundle) -> Vec<FeatureVector> {
    d.tweets()
        .par_iter()
        .map(|t| extract(&bundle.tokenize(&t.id, &t.text), bundle))
        .collect()
}

fn label_pairs(level: ClassificationLevel) -> Vec<(Label, Label)> {
    let labels = level.labels();
    let mut pairs = Vec::new();
    for (i, &a) in labels.iter().enumerate() {
        for &b in &labels[i + 1..] {
            pairs.push((a, b));
        }
    }
    pairs
}

/// Extract features, fit the scaler on `train` and fit one binary model per
/// label pair. Pair `k` is trained with seed `cfg.seed ^ k`.
pub fn train_multiclass(
    train: &Dataset,
    bundle: &LexiconBundle,
    level: ClassificationLevel,
    mask: FeatureMask,
    cfg: &TrainConfig,
) -> Result<MulticlassModel, SvmError> {
    bundle.check_mask(&mask)?;
    let labels = train.labels()?;
    let vectors = featurize(train, bundle);
    MulticlassModel::train_on_features(&vectors, &labels, level, mask, cfg)
}

/// Label of a tokenized tweet.
pub fn predict(m: &MulticlassModel, t: &TokenizedTweet, bundle: &LexiconBundle) -> Result<Label, SvmError> {
    m.predict_vector(&extract(t, bundle))
}

impl MulticlassModel {
    pub fn train_on_features(
        vectors: &[FeatureVector],
        labels: &[Label],
        level: ClassificationLevel,
        mask: FeatureMask,
        cfg: &TrainConfig,
    ) -> Result<Self, SvmError> {
        cfg.validate()?;
        if vectors.len() != labels.len() {
            return Err(SvmError::LengthMismatch(vectors.len(), labels.len()));
        }
        if mask.is_empty() {
            return Err(SvmError::EmptyMask);
        }
        if let Some(&label) = labels.iter().find(|l| !level.contains(**l)) {
            return Err(SvmError::LabelOutOfLevel { label, level });
        }
        if let Some(&missing) = level.labels().iter().find(|l| !labels.contains(l)) {
            return Err(SvmError::MissingClass(missing));
        }
        let scaler = fit_scaler(vectors, mask)?;
        let scaled: Vec<Vec<f64>> = vectors.iter().map(|v| scaler.apply_unchecked(v)).collect();

        let pairwise = label_pairs(level)
            .into_par_iter()
            .enumerate()
            .map(|(k, (pos, neg))| {
                let (x, y): (Vec<Vec<f64>>, Vec<i8>) = scaled
                    .iter()
                    .zip(labels)
                    .filter(|(_, l)| **l == pos || **l == neg)
                    .map(|(x, l)| (x.clone(), if *l == pos { 1 } else { -1 }))
                    .unzip();
                let pair_cfg = TrainConfig { seed: cfg.seed ^ k as u64, ..cfg.clone() };
                let (mut model, _) =
                    solver::train_binary_traced(&x, &y, &pair_cfg, cfg.cost_for(pos), cfg.cost_for(neg))?;
                model.positive_label = pos;
                model.negative_label = neg;
                Ok(model)
            })
            .collect::<Result<Vec<_>, SvmError>>()?;

        Ok(Self { level, mask, scaler, pairwise })
    }

    /// Pairwise vote on an already scaled vector. A zero decision casts no
    /// vote. Ties go to the larger margin sum, then to the canonically
    /// first label.
    pub fn vote(&self, scaled: &[f64]) -> Result<Vote, SvmError> {
        let labels = self.level.labels();
        let mut votes = vec![0usize; labels.len()];
        let mut margins = vec![0.0f64; labels.len()];
        for m in &self.pairwise {
            let d = m.decision(scaled)?;
            let winner = if d > 0.0 {
                m.positive_label
            } else if d < 0.0 {
                m.negative_label
            } else {
                continue;
            };
            let idx = labels
                .iter()
                .position(|l| *l == winner)
                .ok_or(SvmError::LabelOutOfLevel { label: winner, level: self.level })?;
            votes[idx] += 1;
            margins[idx] += d.abs();
        }
        let mut best = 0;
        for i in 1..labels.len() {
            if votes[i] > votes[best] || (votes[i] == votes[best] && margins[i] > margins[best]) {
                best = i;
            }
        }
        Ok(Vote { winner: labels[best], votes, margins })
    }

    pub fn predict_vector(&self, v: &FeatureVector) -> Result<Label, SvmError> {
        Ok(self.vote(&self.scaler.apply_unchecked(v))?.winner)
    }

    pub fn predict_text(&self, id: &str, text: &str, bundle: &LexiconBundle) -> Result<Label, SvmError> {
        predict(self, &bundle.tokenize(id, text), bundle)
    }

    pub fn predict_dataset(&self, d: &Dataset, bundle: &LexiconBundle) -> Result<Vec<Label>, SvmError> {
        featurize(d, bundle).iter().map(|v| self.predict_vector(v)).collect()
    }
}
