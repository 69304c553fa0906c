//! The 19 tweet features, per-level feature masks and min-max scaling.

use std::fmt;
use std::io::Write;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::corpus::ClassificationLevel;
use crate::lexicon::{LexiconBundle, MarkerKind};
use crate::text::{TokenKind, TokenizedTweet};

pub const NUM_FEATURES: usize = 19;

/// Feature identifiers in their frozen canonical order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FeatureId {
    HasPositiveWordAraSenti,
    HasNegativeWordAraSenti,
    HasPositiveWordMpqa,
    HasNegativeWordMpqa,
    HasPositiveWordLiu,
    HasNegativeWordLiu,
    HasNegation,
    HasIntensifier,
    HasDiminisher,
    HasModalWord,
    HasContrastWord,
    PositiveWordCount,
    NegativeWordCount,
    TweetScore,
    HasQuestionMark,
    HasExclamationMark,
    HasPositiveEmoticon,
    HasNegativeEmoticon,
    TweetLength,
}

impl FeatureId {
    pub const ALL: [FeatureId; NUM_FEATURES] = [
        Self::HasPositiveWordAraSenti,
        Self::HasNegativeWordAraSenti,
        Self::HasPositiveWordMpqa,
        Self::HasNegativeWordMpqa,
        Self::HasPositiveWordLiu,
        Self::HasNegativeWordLiu,
        Self::HasNegation,
        Self::HasIntensifier,
        Self::HasDiminisher,
        Self::HasModalWord,
        Self::HasContrastWord,
        Self::PositiveWordCount,
        Self::NegativeWordCount,
        Self::TweetScore,
        Self::HasQuestionMark,
        Self::HasExclamationMark,
        Self::HasPositiveEmoticon,
        Self::HasNegativeEmoticon,
        Self::TweetLength,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::HasPositiveWordAraSenti => "hasPositiveWordAraSenti",
            Self::HasNegativeWordAraSenti => "hasNegativeWordAraSenti",
            Self::HasPositiveWordMpqa => "hasPositiveWordMPQA",
            Self::HasNegativeWordMpqa => "hasNegativeWordMPQA",
            Self::HasPositiveWordLiu => "hasPositiveWordLiu",
            Self::HasNegativeWordLiu => "hasNegativeWordLiu",
            Self::HasNegation => "hasNegation",
            Self::HasIntensifier => "hasIntensifier",
            Self::HasDiminisher => "hasDiminisher",
            Self::HasModalWord => "hasModalWord",
            Self::HasContrastWord => "hasContrastWord",
            Self::PositiveWordCount => "PositiveWordCount",
            Self::NegativeWordCount => "NegativeWordCount",
            Self::TweetScore => "TweetScore",
            Self::HasQuestionMark => "hasQuestionMark",
            Self::HasExclamationMark => "hasExclamationMark",
            Self::HasPositiveEmoticon => "hasPositiveEmoticon",
            Self::HasNegativeEmoticon => "hasNegativeEmoticon",
            Self::TweetLength => "tweetLength",
        }
    }

    /// Numeric features get min-max scaled; the rest are 0/1 flags.
    pub fn is_numeric(self) -> bool {
        matches!(
            self,
            Self::PositiveWordCount | Self::NegativeWordCount | Self::TweetScore | Self::TweetLength
        )
    }
}

impl fmt::Display for FeatureId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FeatureId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| format!("unknown feature {s:?}"))
    }
}

impl Serialize for FeatureId {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.name())
    }
}

impl<'de> Deserialize<'de> for FeatureId {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Feature values indexed by [`FeatureId`]; flags are encoded as 0/1.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct FeatureVector(pub [f64; NUM_FEATURES]);

impl FeatureVector {
    pub fn get(&self, f: FeatureId) -> f64 {
        self.0[f.index()]
    }

    pub fn set(&mut self, f: FeatureId, value: f64) {
        self.0[f.index()] = value;
    }

    fn flag(&mut self, f: FeatureId, on: bool) {
        self.set(f, if on { 1.0 } else { 0.0 });
    }
}

/// A subset of the 19 features, iterated in canonical order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct FeatureMask(u32);

impl FeatureMask {
    pub const fn empty() -> Self {
        Self(0)
    }

    pub const fn all() -> Self {
        Self((1 << NUM_FEATURES) - 1)
    }

    pub fn contains(self, f: FeatureId) -> bool {
        self.0 & (1 << f.index()) != 0
    }

    pub fn with(self, f: FeatureId) -> Self {
        Self(self.0 | (1 << f.index()))
    }

    pub fn without(self, f: FeatureId) -> Self {
        Self(self.0 & !(1 << f.index()))
    }

    pub fn union(self, other: Self) -> Self {
        Self(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        Self(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        Self(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = FeatureId> {
        FeatureId::ALL.into_iter().filter(move |f| self.contains(*f))
    }

    /// Lowest canonical index in the mask.
    pub fn first(self) -> Option<FeatureId> {
        self.iter().next()
    }
}

impl FromIterator<FeatureId> for FeatureMask {
    fn from_iter<T: IntoIterator<Item = FeatureId>>(iter: T) -> Self {
        iter.into_iter().fold(Self::empty(), Self::with)
    }
}

impl fmt::Debug for FeatureMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter().map(FeatureId::name)).finish()
    }
}

impl Serialize for FeatureMask {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for FeatureMask {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let ids = Vec::<FeatureId>::deserialize(deserializer)?;
        Ok(ids.into_iter().collect())
    }
}

/// Features used at each classification level: two-way drops the modal and
/// contrast flags, three-way drops only the contrast flag, four-way uses all.
pub fn mask_for_level(level: ClassificationLevel) -> FeatureMask {
    match level {
        ClassificationLevel::TwoWay => FeatureMask::all()
            .without(FeatureId::HasModalWord)
            .without(FeatureId::HasContrastWord),
        ClassificationLevel::ThreeWay => FeatureMask::all().without(FeatureId::HasContrastWord),
        ClassificationLevel::FourWay => FeatureMask::all(),
    }
}

/// Compute the full feature vector of a tokenized tweet.
///
/// Lexicon features look at words and hashtag bodies; marker flags look at
/// words only; emoticon flags at emoticon tokens. Mentions and URLs are
/// ignored. TweetScore sums the scored lexicon over words and hashtags,
/// with out-of-vocabulary terms contributing 0.
pub fn extract(tweet: &TokenizedTweet, bundle: &LexiconBundle) -> FeatureVector {
    use FeatureId::*;

    let mut v = FeatureVector::default();
    let (mut n_pos, mut n_neg, mut score) = (0usize, 0usize, 0.0f64);
    let (mut mpqa_pos, mut mpqa_neg, mut liu_pos, mut liu_neg) = (false, false, false, false);
    let mut markers = [false; 5];
    let (mut question, mut exclamation, mut emo_pos, mut emo_neg) = (false, false, false, false);
    let word_markers = [
        MarkerKind::Negation,
        MarkerKind::Intensifier,
        MarkerKind::Diminisher,
        MarkerKind::Modal,
        MarkerKind::Contrast,
    ];

    for tok in &tweet.tokens {
        let term = tok.surface.as_str();
        match tok.kind {
            TokenKind::Word | TokenKind::Hashtag => {
                let s = bundle.scored.score_of(term);
                score += s;
                n_pos += usize::from(s > 0.0);
                n_neg += usize::from(s < 0.0);
                mpqa_pos |= bundle.polar_a.is_positive(term);
                mpqa_neg |= bundle.polar_a.is_negative(term);
                liu_pos |= bundle.polar_b.is_positive(term);
                liu_neg |= bundle.polar_b.is_negative(term);
                if tok.kind == TokenKind::Word {
                    for (hit, kind) in markers.iter_mut().zip(word_markers) {
                        *hit |= bundle.marker(kind).contains(term);
                    }
                }
            }
            TokenKind::Emoticon => {
                emo_pos |= bundle.marker(MarkerKind::PositiveEmoticon).contains(term);
                emo_neg |= bundle.marker(MarkerKind::NegativeEmoticon).contains(term);
            }
            TokenKind::QuestionMark => question = true,
            TokenKind::ExclamationMark => exclamation = true,
            TokenKind::OtherPunct | TokenKind::Mention | TokenKind::Url => {}
        }
    }

    v.flag(HasPositiveWordAraSenti, n_pos > 0);
    v.flag(HasNegativeWordAraSenti, n_neg > 0);
    v.flag(HasPositiveWordMpqa, mpqa_pos);
    v.flag(HasNegativeWordMpqa, mpqa_neg);
    v.flag(HasPositiveWordLiu, liu_pos);
    v.flag(HasNegativeWordLiu, liu_neg);
    v.flag(HasNegation, markers[0]);
    v.flag(HasIntensifier, markers[1]);
    v.flag(HasDiminisher, markers[2]);
    v.flag(HasModalWord, markers[3]);
    v.flag(HasContrastWord, markers[4]);
    v.set(PositiveWordCount, n_pos as f64);
    v.set(NegativeWordCount, n_neg as f64);
    v.set(TweetScore, score);
    v.flag(HasQuestionMark, question);
    v.flag(HasExclamationMark, exclamation);
    v.flag(HasPositiveEmoticon, emo_pos);
    v.flag(HasNegativeEmoticon, emo_neg);
    v.set(TweetLength, tweet.word_count as f64);
    v
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum FeatureError {
    #[error("cannot fit a scaler on an empty training set")]
    EmptyTrainingSet,
    #[error("scaler was fitted with mask {fitted:?} but applied with {requested:?}")]
    MaskMismatch { fitted: FeatureMask, requested: FeatureMask },
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FeatureBounds {
    pub feature: FeatureId,
    pub min: f64,
    pub max: f64,
}

/// Min-max bounds of the numeric features of a mask, fitted on training data.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Scaler {
    pub mask: FeatureMask,
    pub bounds: Vec<FeatureBounds>,
}

pub fn fit_scaler(train: &[FeatureVector], mask: FeatureMask) -> Result<Scaler, FeatureError> {
    if train.is_empty() {
        return Err(FeatureError::EmptyTrainingSet);
    }
    let bounds = mask
        .iter()
        .filter(|f| f.is_numeric())
        .map(|feature| {
            let (min, max) = train.iter().map(|v| v.get(feature)).fold(
                (f64::INFINITY, f64::NEG_INFINITY),
                |(lo, hi), x| (lo.min(x), hi.max(x)),
            );
            FeatureBounds { feature, min, max }
        })
        .collect();
    Ok(Scaler { mask, bounds })
}

impl Scaler {
    fn bounds_of(&self, f: FeatureId) -> Option<&FeatureBounds> {
        self.bounds.iter().find(|b| b.feature == f)
    }

    /// Dense vector of the enabled features in canonical order, numeric
    /// features mapped to `[0, 1]` (clamped; constant features map to 0).
    pub fn apply(&self, v: &FeatureVector, mask: FeatureMask) -> Result<Vec<f64>, FeatureError> {
        if mask != self.mask {
            return Err(FeatureError::MaskMismatch { fitted: self.mask, requested: mask });
        }
        Ok(self.apply_unchecked(v))
    }

    pub(crate) fn apply_unchecked(&self, v: &FeatureVector) -> Vec<f64> {
        self.mask
            .iter()
            .map(|f| {
                let x = v.get(f);
                match self.bounds_of(f) {
                    Some(b) if b.max > b.min => ((x - b.min) / (b.max - b.min)).clamp(0.0, 1.0),
                    Some(_) => 0.0,
                    None => x,
                }
            })
            .collect()
    }
}

pub fn apply_scaler(s: &Scaler, v: &FeatureVector, mask: FeatureMask) -> Result<Vec<f64>, FeatureError> {
    s.apply(v, mask)
}

/// Write the feature dump CSV: header `tweet_id,` plus the 19 names, one
/// row per tweet, flags as 0/1.
pub fn write_feature_csv<W: Write>(out: W, rows: &[(String, FeatureVector)]) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    let mut header = vec!["tweet_id".to_string()];
    header.extend(FeatureId::ALL.iter().map(|f| f.name().to_string()));
    w.write_record(&header)?;
    for (id, v) in rows {
        let mut record = vec![id.clone()];
        record.extend(v.0.iter().map(|x| x.to_string()));
        w.write_record(&record)?;
    }
    w.flush()?;
    Ok(())
}
