//! Sentiment lexicons and marker wordlists.
//!
//! File formats (UTF-8, `#` comment lines and blank lines ignored):
//!
//! * scored lexicon: `term<TAB>score`, score a decimal with `.` radix
//! * polar lexicon: `term<TAB>pos|neg`
//! * marker list: one entry per line
//!
//! Word terms are passed through [`normalize`] at load so lookups agree with
//! tokenized text. Emoticon entries are kept verbatim.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::features::{FeatureId, FeatureMask};
use crate::text::{normalize, tokenize, EmoticonMatcher, TokenizedTweet};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum LexiconError {
    #[error("{source_name}: line {line}: malformed row ({reason})")]
    MalformedRow { source_name: String, line: usize, reason: String },
    #[error("{source_name}: duplicate term {term:?}")]
    DuplicateTerm { source_name: String, term: String },
    #[error("{source_name}: line {line}: zero score for {term:?}")]
    ZeroScore { source_name: String, line: usize, term: String },
    #[error("{source_name}: line {line}: non-finite score for {term:?}")]
    NonFiniteScore { source_name: String, line: usize, term: String },
    #[error("{source_name}: term {term:?} listed as both pos and neg")]
    ConflictingPolarity { source_name: String, term: String },
    #[error("{source_name}: line {line}: unknown polarity {value:?} (expected pos or neg)")]
    UnknownPolarity { source_name: String, line: usize, value: String },
    #[error("marker list {0} is empty but feature {1} is enabled")]
    EmptyList(MarkerKind, FeatureId),
    #[error("no marker list supplied for {0}")]
    MissingMarkerList(MarkerKind),
    #[error("{path}: {message}")]
    Io { path: String, message: String },
}

/// Non-comment, non-blank lines with 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let line = line.strip_suffix('\r').unwrap_or(line);
        (!line.starts_with('#') && !line.trim().is_empty()).then_some((i + 1, line))
    })
}

fn split_pair<'a>(source_name: &str, line_no: usize, line: &'a str) -> Result<(String, &'a str), LexiconError> {
    let malformed = |reason: &str| LexiconError::MalformedRow {
        source_name: source_name.to_string(),
        line: line_no,
        reason: reason.to_string(),
    };
    let mut fields = line.split('\t');
    let (Some(term), Some(value), None) = (fields.next(), fields.next(), fields.next()) else {
        return Err(malformed("expected 2 tab-separated fields"));
    };
    let term = normalize(term);
    if term.is_empty() {
        return Err(malformed("empty term"));
    }
    Ok((term, value.trim()))
}

fn read_file(path: &Path) -> Result<String, LexiconError> {
    fs::read_to_string(path)
        .map_err(|e| LexiconError::Io { path: path.display().to_string(), message: e.to_string() })
}

fn file_name(path: &Path) -> String {
    path.file_name().map_or_else(|| path.display().to_string(), |n| n.to_string_lossy().into_owned())
}

/// Lexicon mapping terms to signed sentiment intensities.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct ScoredLexicon {
    pub name: String,
    entries: HashMap<String, f64>,
}

impl ScoredLexicon {
    pub fn parse(name: &str, text: &str) -> Result<Self, LexiconError> {
        let mut entries = HashMap::new();
        for (line_no, line) in content_lines(text) {
            let (term, value) = split_pair(name, line_no, line)?;
            let score: f64 = value.parse().map_err(|_| LexiconError::MalformedRow {
                source_name: name.to_string(),
                line: line_no,
                reason: format!("score {value:?} is not a decimal"),
            })?;
            if !score.is_finite() {
                return Err(LexiconError::NonFiniteScore { source_name: name.to_string(), line: line_no, term });
            }
            if score == 0.0 {
                return Err(LexiconError::ZeroScore { source_name: name.to_string(), line: line_no, term });
            }
            if entries.insert(term.clone(), score).is_some() {
                return Err(LexiconError::DuplicateTerm { source_name: name.to_string(), term });
            }
        }
        Ok(Self { name: name.to_string(), entries })
    }

    pub fn from_entries<I, S>(name: &str, entries: I) -> Result<Self, LexiconError>
    where
        I: IntoIterator<Item = (S, f64)>,
        S: AsRef<str>,
    {
        let text: String = entries
            .into_iter()
            .map(|(t, s)| format!("{}\t{s}\n", t.as_ref()))
            .collect();
        Self::parse(name, &text)
    }

    /// Score of a normalized term; 0 for out-of-vocabulary terms.
    pub fn score_of(&self, term: &str) -> f64 {
        self.entries.get(term).copied().unwrap_or(0.0)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = &str> {
        self.entries.keys().map(String::as_str)
    }
}

pub fn load_scored_lexicon(path: impl AsRef<Path>) -> Result<ScoredLexicon, LexiconError> {
    let path = path.as_ref();
    ScoredLexicon::parse(&file_name(path), &read_file(path)?)
}

/// Lexicon of prior polarities (no intensities).
#[derive(Debug, Clone, Default, PartialEq)]
pub struct PolarLexicon {
    pub name: String,
    pub positive: BTreeSet<String>,
    pub negative: BTreeSet<String>,
}

impl PolarLexicon {
    pub fn parse(name: &str, text: &str) -> Result<Self, LexiconError> {
        let mut lex = Self { name: name.to_string(), ..Default::default() };
        for (line_no, line) in content_lines(text) {
            let (term, value) = split_pair(name, line_no, line)?;
            let (same, other) = match value.to_ascii_lowercase().as_str() {
                "pos" => (&mut lex.positive, &lex.negative),
                "neg" => (&mut lex.negative, &lex.positive),
                _ => {
                    return Err(LexiconError::UnknownPolarity {
                        source_name: name.to_string(),
                        line: line_no,
                        value: value.to_string(),
                    })
                }
            };
            if other.contains(&term) {
                return Err(LexiconError::ConflictingPolarity { source_name: name.to_string(), term });
            }
            same.insert(term);
        }
        Ok(lex)
    }

    pub fn is_positive(&self, term: &str) -> bool {
        self.positive.contains(term)
    }

    pub fn is_negative(&self, term: &str) -> bool {
        self.negative.contains(term)
    }
}

pub fn load_polar_lexicon(path: impl AsRef<Path>) -> Result<PolarLexicon, LexiconError> {
    let path = path.as_ref();
    PolarLexicon::parse(&file_name(path), &read_file(path)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum MarkerKind {
    Negation,
    Intensifier,
    Diminisher,
    Modal,
    Contrast,
    PositiveEmoticon,
    NegativeEmoticon,
}

impl MarkerKind {
    pub const ALL: [MarkerKind; 7] = [
        Self::Negation,
        Self::Intensifier,
        Self::Diminisher,
        Self::Modal,
        Self::Contrast,
        Self::PositiveEmoticon,
        Self::NegativeEmoticon,
    ];

    pub fn is_emoticon(self) -> bool {
        matches!(self, Self::PositiveEmoticon | Self::NegativeEmoticon)
    }

    /// The feature whose value is read from this list.
    pub fn feature(self) -> FeatureId {
        match self {
            Self::Negation => FeatureId::HasNegation,
            Self::Intensifier => FeatureId::HasIntensifier,
            Self::Diminisher => FeatureId::HasDiminisher,
            Self::Modal => FeatureId::HasModalWord,
            Self::Contrast => FeatureId::HasContrastWord,
            Self::PositiveEmoticon => FeatureId::HasPositiveEmoticon,
            Self::NegativeEmoticon => FeatureId::HasNegativeEmoticon,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Self::Negation => "negation",
            Self::Intensifier => "intensifier",
            Self::Diminisher => "diminisher",
            Self::Modal => "modal",
            Self::Contrast => "contrast",
            Self::PositiveEmoticon => "positive_emoticons",
            Self::NegativeEmoticon => "negative_emoticons",
        }
    }
}

impl fmt::Display for MarkerKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for MarkerKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::ALL
            .into_iter()
            .find(|k| k.as_str() == s)
            .ok_or_else(|| format!("unknown marker kind {s:?}"))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct MarkerList {
    pub kind: MarkerKind,
    pub terms: BTreeSet<String>,
}

impl MarkerList {
    pub fn parse(kind: MarkerKind, text: &str) -> Self {
        let terms = content_lines(text)
            .map(|(_, line)| if kind.is_emoticon() { line.trim().to_string() } else { normalize(line) })
            .filter(|t| !t.is_empty())
            .collect();
        Self { kind, terms }
    }

    pub fn from_terms<I, S>(kind: MarkerKind, terms: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let text: String = terms.into_iter().map(|t| format!("{}\n", t.as_ref())).collect();
        Self::parse(kind, &text)
    }

    pub fn contains(&self, term: &str) -> bool {
        self.terms.contains(term)
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

pub fn load_marker_list(path: impl AsRef<Path>, kind: MarkerKind) -> Result<MarkerList, LexiconError> {
    Ok(MarkerList::parse(kind, &read_file(path.as_ref())?))
}

/// Every lexical resource feature extraction needs.
#[derive(Debug, Clone)]
pub struct LexiconBundle {
    /// Intensity-scored lexicon (AraSenTi role).
    pub scored: ScoredLexicon,
    /// First polarity lexicon (MPQA role).
    pub polar_a: PolarLexicon,
    /// Second polarity lexicon (Bing Liu role).
    pub polar_b: PolarLexicon,
    markers: BTreeMap<MarkerKind, MarkerList>,
    emoticons: EmoticonMatcher,
}

impl LexiconBundle {
    pub fn new(
        scored: ScoredLexicon,
        polar_a: PolarLexicon,
        polar_b: PolarLexicon,
        markers: impl IntoIterator<Item = MarkerList>,
    ) -> Result<Self, LexiconError> {
        let markers: BTreeMap<MarkerKind, MarkerList> = markers.into_iter().map(|m| (m.kind, m)).collect();
        if let Some(missing) = MarkerKind::ALL.into_iter().find(|k| !markers.contains_key(k)) {
            return Err(LexiconError::MissingMarkerList(missing));
        }
        let emoticons = EmoticonMatcher::new(
            markers[&MarkerKind::PositiveEmoticon]
                .terms
                .iter()
                .chain(&markers[&MarkerKind::NegativeEmoticon].terms),
        );
        Ok(Self { scored, polar_a, polar_b, markers, emoticons })
    }

    pub fn marker(&self, kind: MarkerKind) -> &MarkerList {
        &self.markers[&kind]
    }

    pub fn emoticons(&self) -> &EmoticonMatcher {
        &self.emoticons
    }

    /// Fail if a feature enabled in `mask` reads from an empty marker list.
    /// Empty lexicons are legal: their features are constant 0.
    pub fn check_mask(&self, mask: &FeatureMask) -> Result<(), LexiconError> {
        for kind in MarkerKind::ALL {
            if mask.contains(kind.feature()) && self.marker(kind).is_empty() {
                return Err(LexiconError::EmptyList(kind, kind.feature()));
            }
        }
        Ok(())
    }

    /// Normalize and tokenize raw tweet text with this bundle's emoticons.
    pub fn tokenize(&self, tweet_id: &str, raw: &str) -> TokenizedTweet {
        tokenize(tweet_id, &normalize(raw), &self.emoticons)
    }
}

/// Filesystem locations of a bundle's ten resources.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BundlePaths {
    pub scored: PathBuf,
    pub polar_a: PathBuf,
    pub polar_b: PathBuf,
    pub markers: BTreeMap<MarkerKind, PathBuf>,
}

impl BundlePaths {
    /// The conventional layout used by the bundled synthetic resources.
    pub fn in_dir(dir: impl AsRef<Path>) -> Self {
        let dir = dir.as_ref();
        Self {
            scored: dir.join("scored.tsv"),
            polar_a: dir.join("polar_a.tsv"),
            polar_b: dir.join("polar_b.tsv"),
            markers: MarkerKind::ALL
                .into_iter()
                .map(|k| (k, dir.join(format!("{}.txt", k.as_str()))))
                .collect(),
        }
    }

    pub fn all(&self) -> impl Iterator<Item = &Path> {
        [&self.scored, &self.polar_a, &self.polar_b]
            .into_iter()
            .chain(self.markers.values())
            .map(PathBuf::as_path)
    }
}

pub fn load_bundle(paths: &BundlePaths) -> Result<LexiconBundle, LexiconError> {
    let markers = MarkerKind::ALL
        .into_iter()
        .map(|k| {
            let path = paths.markers.get(&k).ok_or(LexiconError::MissingMarkerList(k))?;
            load_marker_list(path, k)
        })
        .collect::<Result<Vec<_>, _>>()?;
    LexiconBundle::new(
        load_scored_lexicon(&paths.scored)?,
        load_polar_lexicon(&paths.polar_a)?,
        load_polar_lexicon(&paths.polar_b)?,
        markers,
    )
}
