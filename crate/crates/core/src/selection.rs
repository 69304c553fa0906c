//! Backward feature elimination over feature groups.
//!
//! Three modes share one building block, a *pass*: retrain once with every
//! group enabled (the baseline) and once per group with that group removed,
//! scoring each model by macro-F1 on an evaluation split.
//!
//! * single pass: one pass, reported as-is (the ablation bar charts)
//! * batch: one pass, then drop every group whose removal helped, all at once
//! * greedy: drop the best-scoring removal while it strictly improves the
//!   metric, re-running a pass on the reduced mask each time

use std::fmt::{self, Write as _};
use std::str::FromStr;

use rayon::prelude::*;
use thiserror::Error;

use crate::corpus::{ClassificationLevel, CorpusError, Dataset, Label};
use crate::eval::{confusion, macro_f1, EvalError};
use crate::features::{FeatureId, FeatureMask, FeatureVector};
use crate::lexicon::LexiconBundle;
use crate::svm::{featurize, MulticlassModel, SvmError, TrainConfig};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SelectionError {
    #[error("removing the last feature group would leave an empty mask")]
    EmptyMask,
    #[error("invalid feature groups: {0}")]
    InvalidGroups(String),
    #[error("evaluation split is empty")]
    EmptyEvalSet,
    #[error(transparent)]
    Svm(#[from] SvmError),
    #[error(transparent)]
    Eval(#[from] EvalError),
    #[error(transparent)]
    Corpus(#[from] CorpusError),
}

/// A named set of features removed together.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FeatureGroup {
    pub name: String,
    pub members: FeatureMask,
}

impl FeatureGroup {
    pub fn new(name: impl Into<String>, members: FeatureMask) -> Self {
        Self { name: name.into(), members }
    }

    pub fn singleton(f: FeatureId) -> Self {
        Self::new(f.name(), FeatureMask::empty().with(f))
    }

    /// Content-based order used to break metric ties: fewer members first,
    /// then lower smallest feature index.
    fn tie_key(&self) -> (usize, usize) {
        (self.members.len(), self.members.first().map_or(usize::MAX, FeatureId::index))
    }
}

/// How features of a mask are bundled into removable groups.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Grouping {
    /// Every feature alone.
    Singleton,
    /// Emoticon flags paired, word counts paired, everything else alone.
    #[default]
    Default,
    /// As `Default`, plus each lexicon's positive/negative flags paired.
    LexiconPairs,
}

impl FromStr for Grouping {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "singleton" | "single" => Ok(Self::Singleton),
            "default" => Ok(Self::Default),
            "lexicon-pairs" | "lexicon_pairs" | "paired" => Ok(Self::LexiconPairs),
            other => Err(format!("unknown grouping {other:?} (expected singleton, default or lexicon-pairs)")),
        }
    }
}

/// Groups covering `mask` under a grouping scheme, ordered by their first
/// feature.
pub fn groups_for(mask: FeatureMask, grouping: Grouping) -> Vec<FeatureGroup> {
    use FeatureId::*;
    let pairs: &[(&str, FeatureId, FeatureId)] = match grouping {
        Grouping::Singleton => &[],
        Grouping::Default => &[
            ("wordCounts", PositiveWordCount, NegativeWordCount),
            ("emoticons", HasPositiveEmoticon, HasNegativeEmoticon),
        ],
        Grouping::LexiconPairs => &[
            ("lexiconAraSenti", HasPositiveWordAraSenti, HasNegativeWordAraSenti),
            ("lexiconMPQA", HasPositiveWordMpqa, HasNegativeWordMpqa),
            ("lexiconLiu", HasPositiveWordLiu, HasNegativeWordLiu),
            ("wordCounts", PositiveWordCount, NegativeWordCount),
            ("emoticons", HasPositiveEmoticon, HasNegativeEmoticon),
        ],
    };
    let mut groups = Vec::new();
    let mut covered = FeatureMask::empty();
    for f in mask.iter() {
        if covered.contains(f) {
            continue;
        }
        let group = match pairs.iter().find(|(_, a, b)| *a == f || *b == f) {
            Some((name, a, b)) => {
                let members = FeatureMask::empty().with(*a).with(*b).intersection(mask);
                if members.len() == 2 {
                    FeatureGroup::new(*name, members)
                } else {
                    FeatureGroup::singleton(f)
                }
            }
            None => FeatureGroup::singleton(f),
        };
        covered = covered.union(group.members);
        groups.push(group);
    }
    groups
}

pub fn default_groups(mask: FeatureMask) -> Vec<FeatureGroup> {
    groups_for(mask, Grouping::Default)
}

/// Check groups are non-empty and pairwise disjoint; returns their union.
pub fn validate_groups(groups: &[FeatureGroup]) -> Result<FeatureMask, SelectionError> {
    let mut union = FeatureMask::empty();
    for g in groups {
        if g.members.is_empty() {
            return Err(SelectionError::InvalidGroups(format!("group {:?} is empty", g.name)));
        }
        if !union.intersection(g.members).is_empty() {
            return Err(SelectionError::InvalidGroups(format!("group {:?} overlaps another group", g.name)));
        }
        union = union.union(g.members);
    }
    if union.is_empty() {
        return Err(SelectionError::EmptyMask);
    }
    Ok(union)
}

/// Pre-extracted train and evaluation features for repeated retraining.
#[derive(Debug, Clone)]
pub struct SelectionData {
    pub level: ClassificationLevel,
    pub train_vectors: Vec<FeatureVector>,
    pub train_labels: Vec<Label>,
    pub eval_vectors: Vec<FeatureVector>,
    pub eval_labels: Vec<Label>,
}

impl SelectionData {
    pub fn prepare(
        train: &Dataset,
        eval: &Dataset,
        bundle: &LexiconBundle,
        level: ClassificationLevel,
    ) -> Result<Self, SelectionError> {
        Self::from_features(
            level,
            featurize(train, bundle),
            train.labels()?,
            featurize(eval, bundle),
            eval.labels()?,
        )
    }

    pub fn from_features(
        level: ClassificationLevel,
        train_vectors: Vec<FeatureVector>,
        train_labels: Vec<Label>,
        eval_vectors: Vec<FeatureVector>,
        eval_labels: Vec<Label>,
    ) -> Result<Self, SelectionError> {
        if eval_vectors.is_empty() {
            return Err(SelectionError::EmptyEvalSet);
        }
        if eval_vectors.len() != eval_labels.len() {
            return Err(SvmError::LengthMismatch(eval_vectors.len(), eval_labels.len()).into());
        }
        if let Some(&label) = eval_labels.iter().find(|l| !level.contains(**l)) {
            return Err(EvalError::LabelOutOfLevel { label, level }.into());
        }
        Ok(Self { level, train_vectors, train_labels, eval_vectors, eval_labels })
    }

    /// Train on `mask` and return the evaluation macro-F1.
    pub fn score(&self, mask: FeatureMask, cfg: &TrainConfig) -> Result<f64, SelectionError> {
        if mask.is_empty() {
            return Err(SelectionError::EmptyMask);
        }
        let model = MulticlassModel::train_on_features(&self.train_vectors, &self.train_labels, self.level, mask, cfg)?;
        let pred = self
            .eval_vectors
            .iter()
            .map(|v| model.predict_vector(v))
            .collect::<Result<Vec<_>, _>>()?;
        let m = confusion(&self.eval_labels, &pred, self.level)?;
        Ok(macro_f1(&m)?)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SelectionMode {
    SinglePass,
    Batch,
    Greedy,
}

impl SelectionMode {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::SinglePass => "single-pass",
            Self::Batch => "batch",
            Self::Greedy => "greedy",
        }
    }
}

impl fmt::Display for SelectionMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SelectionMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().replace('_', "-").as_str() {
            "single-pass" | "singlepass" | "single" => Ok(Self::SinglePass),
            "batch" => Ok(Self::Batch),
            "greedy" => Ok(Self::Greedy),
            other => Err(format!("unknown selection mode {other:?} (expected single-pass, batch or greedy)")),
        }
    }
}

/// One retraining: `removed` is `None` for the baseline of a round.
#[derive(Debug, Clone, PartialEq)]
pub struct AblationStep {
    pub removed: Option<FeatureGroup>,
    pub mask: FeatureMask,
    pub metric: f64,
    /// `metric` minus the round's baseline metric.
    pub delta: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub enum RoundDecision {
    /// Single-pass report, nothing chosen.
    Report,
    /// Greedy removal of one group.
    Remove(FeatureGroup),
    /// No removal improved the metric.
    Stop,
    /// Batch removal of every helpful group, retrained on `mask`.
    Batch { removed: Vec<FeatureGroup>, mask: FeatureMask, metric: f64 },
}

#[derive(Debug, Clone, PartialEq)]
pub struct AblationRound {
    pub baseline: AblationStep,
    pub candidates: Vec<AblationStep>,
    pub decision: RoundDecision,
}

#[derive(Debug, Clone, PartialEq)]
pub struct AblationTrace {
    pub level: ClassificationLevel,
    pub mode: SelectionMode,
    pub initial_mask: FeatureMask,
    pub rounds: Vec<AblationRound>,
    pub final_mask: FeatureMask,
    pub final_metric: f64,
}

fn baseline_step(mask: FeatureMask, metric: f64) -> AblationStep {
    AblationStep { removed: None, mask, metric, delta: 0.0 }
}

/// Score the removal of each group from the union of `groups`. All
/// candidates use the same seed; results come back in group order.
fn candidates(
    data: &SelectionData,
    groups: &[FeatureGroup],
    baseline: f64,
    cfg: &TrainConfig,
) -> Result<Vec<AblationStep>, SelectionError> {
    let mask = validate_groups(groups)?;
    if groups.len() < 2 {
        return Err(SelectionError::EmptyMask);
    }
    groups
        .par_iter()
        .map(|g| {
            let reduced = mask.difference(g.members);
            let metric = data.score(reduced, cfg)?;
            Ok(AblationStep { removed: Some(g.clone()), mask: reduced, metric, delta: metric - baseline })
        })
        .collect()
}

/// Baseline plus one retraining per group removal.
pub fn single_pass(
    data: &SelectionData,
    groups: &[FeatureGroup],
    cfg: &TrainConfig,
) -> Result<Vec<AblationStep>, SelectionError> {
    let mask = validate_groups(groups)?;
    if groups.len() < 2 {
        return Err(SelectionError::EmptyMask);
    }
    let baseline = data.score(mask, cfg)?;
    let mut steps = vec![baseline_step(mask, baseline)];
    steps.extend(candidates(data, groups, baseline, cfg)?);
    Ok(steps)
}

fn best_candidate(steps: &[AblationStep]) -> Option<&AblationStep> {
    steps.iter().filter(|s| s.removed.is_some()).min_by(|a, b| {
        b.metric
            .total_cmp(&a.metric)
            .then_with(|| a.removed.as_ref().unwrap().tie_key().cmp(&b.removed.as_ref().unwrap().tie_key()))
    })
}

/// Single pass wrapped as a trace.
pub fn single_pass_trace(
    data: &SelectionData,
    groups: &[FeatureGroup],
    cfg: &TrainConfig,
) -> Result<AblationTrace, SelectionError> {
    let mut steps = single_pass(data, groups, cfg)?;
    let baseline = steps.remove(0);
    Ok(AblationTrace {
        level: data.level,
        mode: SelectionMode::SinglePass,
        initial_mask: baseline.mask,
        final_mask: baseline.mask,
        final_metric: baseline.metric,
        rounds: vec![AblationRound { baseline, candidates: steps, decision: RoundDecision::Report }],
    })
}

/// Repeatedly remove the group whose removal scores best, as long as that
/// strictly beats the current mask. Ties prefer smaller groups, then the
/// group holding the lowest feature index.
pub fn greedy_backward(
    data: &SelectionData,
    groups: &[FeatureGroup],
    cfg: &TrainConfig,
) -> Result<AblationTrace, SelectionError> {
    let initial_mask = validate_groups(groups)?;
    if groups.len() < 2 {
        return Err(SelectionError::EmptyMask);
    }
    let mut active: Vec<FeatureGroup> = groups.to_vec();
    let mut current = baseline_step(initial_mask, data.score(initial_mask, cfg)?);
    let mut rounds = Vec::new();
    loop {
        if active.len() < 2 {
            rounds.push(AblationRound { baseline: current.clone(), candidates: vec![], decision: RoundDecision::Stop });
            break;
        }
        let steps = candidates(data, &active, current.metric, cfg)?;
        let best = best_candidate(&steps).cloned();
        match best {
            Some(best) if best.metric > current.metric => {
                let removed = best.removed.clone().expect("candidate has a removed group");
                active.retain(|g| g != &removed);
                rounds.push(AblationRound {
                    baseline: current.clone(),
                    candidates: steps,
                    decision: RoundDecision::Remove(removed),
                });
                current = baseline_step(best.mask, best.metric);
            }
            _ => {
                rounds.push(AblationRound { baseline: current.clone(), candidates: steps, decision: RoundDecision::Stop });
                break;
            }
        }
    }
    Ok(AblationTrace {
        level: data.level,
        mode: SelectionMode::Greedy,
        initial_mask,
        final_mask: current.mask,
        final_metric: current.metric,
        rounds,
    })
}

/// One pass, then remove every group with a positive delta at once and
/// retrain. If every group helped, the one that helped least is kept so
/// the mask stays non-empty.
pub fn batch_removal(
    data: &SelectionData,
    groups: &[FeatureGroup],
    cfg: &TrainConfig,
) -> Result<AblationTrace, SelectionError> {
    let mut steps = single_pass(data, groups, cfg)?;
    let baseline = steps.remove(0);
    let mut removed: Vec<FeatureGroup> =
        steps.iter().filter(|s| s.delta > 0.0).filter_map(|s| s.removed.clone()).collect();
    if removed.len() == groups.len() {
        let keep = steps
            .iter()
            .min_by(|a, b| {
                a.delta
                    .total_cmp(&b.delta)
                    .then_with(|| a.removed.as_ref().unwrap().tie_key().cmp(&b.removed.as_ref().unwrap().tie_key()))
            })
            .and_then(|s| s.removed.clone())
            .expect("at least two candidates");
        removed.retain(|g| *g != keep);
    }
    let (final_mask, final_metric, decision) = if removed.is_empty() {
        (baseline.mask, baseline.metric, RoundDecision::Stop)
    } else {
        let mask = removed.iter().fold(baseline.mask, |m, g| m.difference(g.members));
        let metric = data.score(mask, cfg)?;
        (mask, metric, RoundDecision::Batch { removed, mask, metric })
    };
    Ok(AblationTrace {
        level: data.level,
        mode: SelectionMode::Batch,
        initial_mask: baseline.mask,
        rounds: vec![AblationRound { baseline, candidates: steps, decision }],
        final_mask,
        final_metric,
    })
}

pub fn run_selection(
    mode: SelectionMode,
    data: &SelectionData,
    groups: &[FeatureGroup],
    cfg: &TrainConfig,
) -> Result<AblationTrace, SelectionError> {
    match mode {
        SelectionMode::SinglePass => single_pass_trace(data, groups, cfg),
        SelectionMode::Batch => batch_removal(data, groups, cfg),
        SelectionMode::Greedy => greedy_backward(data, groups, cfg),
    }
}

pub const BASELINE_LABEL: &str = "all features";

impl AblationTrace {
    /// Ablation report CSV. The first line is a `#` comment carrying the
    /// protocol (`dev` or `paper` when selecting on the test split), level
    /// and mode; then the header `round,candidate,removed_group,metric,delta,chosen`.
    pub fn to_csv(&self, protocol: &str) -> String {
        let mut out = format!("# protocol={protocol} level={} mode={}\n", self.level, self.mode);
        out.push_str("round,candidate,removed_group,metric,delta,chosen\n");
        for (r, round) in self.rounds.iter().enumerate() {
            let stop = matches!(round.decision, RoundDecision::Stop);
            let _ = writeln!(out, "{r},0,{BASELINE_LABEL},{},0,{stop}", round.baseline.metric);
            for (c, step) in round.candidates.iter().enumerate() {
                let g = step.removed.as_ref().expect("candidates remove a group");
                let chosen = matches!(&round.decision, RoundDecision::Remove(x) if x == g);
                let _ = writeln!(out, "{r},{},{},{},{},{chosen}", c + 1, g.name, step.metric, step.delta);
            }
            if let RoundDecision::Batch { removed, metric, .. } = &round.decision {
                let names: Vec<&str> = removed.iter().map(|g| g.name.as_str()).collect();
                let _ = writeln!(
                    out,
                    "{r},batch,{},{metric},{},true",
                    names.join("+"),
                    metric - round.baseline.metric
                );
            }
        }
        out
    }

    /// Bar-chart data of the first pass: baseline first, then one bar per
    /// removed group.
    pub fn to_plot_csv(&self) -> String {
        let mut out = String::from("label,metric\n");
        if let Some(round) = self.rounds.first() {
            let _ = writeln!(out, "{BASELINE_LABEL},{}", round.baseline.metric);
            for step in &round.candidates {
                let g = step.removed.as_ref().expect("candidates remove a group");
                let _ = writeln!(out, "{},{}", g.name, step.metric);
            }
        }
        out
    }
}
