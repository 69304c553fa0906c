//! Exhaustive retraining over every union of feature groups, the trace
//! checks run against it, and the synthetic feature sets used.

#![allow(dead_code)]

use arasent_core::features::{FeatureId, FeatureMask, FeatureVector};
use arasent_core::selection::{greedy_backward, AblationTrace, FeatureGroup, RoundDecision, SelectionData};
use arasent_core::svm::TrainConfig;
use arasent_core::{ClassificationLevel, Label};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use FeatureId::*;

pub fn singletons(features: &[FeatureId]) -> Vec<FeatureGroup> {
    features.iter().map(|&f| FeatureGroup::singleton(f)).collect()
}

/// Every non-empty union of groups with its retrained metric.
pub fn exhaustive(data: &SelectionData, groups: &[FeatureGroup], cfg: &TrainConfig) -> Vec<(FeatureMask, f64)> {
    (1u32..1 << groups.len())
        .map(|bits| {
            let mask = groups
                .iter()
                .enumerate()
                .filter(|(i, _)| bits >> i & 1 == 1)
                .fold(FeatureMask::empty(), |m, (_, g)| m.union(g.members));
            (mask, data.score(mask, cfg).unwrap())
        })
        .collect()
}

pub fn best_of(all: &[(FeatureMask, f64)]) -> f64 {
    all.iter().map(|(_, m)| *m).fold(f64::MIN, f64::max)
}

pub fn metric_of(all: &[(FeatureMask, f64)], mask: FeatureMask) -> f64 {
    all.iter().find(|(m, _)| *m == mask).expect("mask enumerated").1
}

/// Checks shared by every dataset: trace metrics equal independent
/// retraining, the final mask is a local optimum under single removals,
/// greedy never beats exhaustive search, and group order is irrelevant.
pub fn check_trace(data: &SelectionData, groups: &[FeatureGroup], cfg: &TrainConfig, all: &[(FeatureMask, f64)]) -> AblationTrace {
    let trace = greedy_backward(data, groups, cfg).unwrap();
    for round in &trace.rounds {
        assert_eq!(round.baseline.metric, metric_of(all, round.baseline.mask));
        for step in &round.candidates {
            assert_eq!(step.metric, metric_of(all, step.mask), "candidate {:?}", step.removed);
            assert_eq!(step.delta, step.metric - round.baseline.metric);
        }
    }
    assert_eq!(trace.final_metric, metric_of(all, trace.final_mask));
    assert!(matches!(trace.rounds.last().unwrap().decision, RoundDecision::Stop));

    // no single removal from the final mask does better
    for g in groups.iter().filter(|g| g.members.is_subset(trace.final_mask)) {
        let reduced = trace.final_mask.difference(g.members);
        if !reduced.is_empty() {
            assert!(metric_of(all, reduced) <= trace.final_metric, "removing {} would improve", g.name);
        }
    }
    assert!(trace.final_metric <= best_of(all));

    let mut reversed = groups.to_vec();
    reversed.reverse();
    let mut rotated = groups.to_vec();
    rotated.rotate_left(2);
    for order in [reversed, rotated] {
        let other = greedy_backward(data, &order, cfg).unwrap();
        assert_eq!(other.final_mask, trace.final_mask);
        assert_eq!(other.final_metric, trace.final_metric);
    }
    trace
}

/// Two signal features (score, positive emoticon) and two noise features
/// drawn independently of the label.
pub fn noise_set(n: usize, rng: &mut ChaCha8Rng) -> (Vec<FeatureVector>, Vec<Label>) {
    let mut xs = Vec::new();
    let mut ys = Vec::new();
    for i in 0..n {
        let pos = i % 2 == 0;
        let mut v = FeatureVector::default();
        v.set(TweetScore, if pos { rng.gen_range(0.5..2.0) } else { rng.gen_range(-2.0..-0.5) });
        v.set(HasPositiveEmoticon, f64::from(u8::from(pos && rng.gen_bool(0.5))));
        v.set(TweetLength, f64::from(rng.gen_range(1..40)));
        v.set(HasQuestionMark, f64::from(u8::from(rng.gen_bool(0.5))));
        v.set(HasNegation, f64::from(u8::from(rng.gen_bool(0.5))));
        xs.push(v);
        ys.push(if pos { Label::Positive } else { Label::Negative });
    }
    (xs, ys)
}

/// Score tracks the label index with overlap, the emoticon flag leans
/// positive, four more features are label-independent.
pub fn mixed_set(n: usize, level: ClassificationLevel, rng: &mut ChaCha8Rng) -> (Vec<FeatureVector>, Vec<Label>) {
    let labels = level.labels();
    let mut xs = Vec::new();
    let mut ys = Vec::new();
    for i in 0..n {
        let l = labels[i % labels.len()];
        let mut v = FeatureVector::default();
        v.set(TweetScore, l.index() as f64 + rng.gen_range(-0.9..0.9));
        v.set(HasPositiveEmoticon, f64::from(u8::from(rng.gen_bool(if l == Label::Positive { 0.8 } else { 0.25 }))));
        v.set(TweetLength, f64::from(rng.gen_range(1..30)));
        v.set(HasQuestionMark, f64::from(u8::from(rng.gen_bool(0.5))));
        v.set(HasNegation, f64::from(u8::from(rng.gen_bool(0.5))));
        v.set(HasExclamationMark, f64::from(u8::from(rng.gen_bool(0.5))));
        xs.push(v);
        ys.push(l);
    }
    (xs, ys)
}

pub const SIX: [FeatureId; 6] = [HasNegation, TweetScore, HasQuestionMark, HasExclamationMark, HasPositiveEmoticon, TweetLength];

pub fn mixed_data(level: ClassificationLevel, seed: u64) -> SelectionData {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (tx, ty) = mixed_set(24, level, &mut rng);
    let (ex, ey) = mixed_set(90, level, &mut rng);
    SelectionData::from_features(level, tx, ty, ex, ey).unwrap()
}
