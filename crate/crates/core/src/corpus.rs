//! Labeled tweet datasets: TSV loading, level filtering and seeded
//! stratified splitting.
//!
//! Corpus files are UTF-8 with one tweet per line and exactly three
//! tab-separated fields, `id<TAB>label<TAB>text`. Lines starting with `#`
//! and blank lines are skipped. When labels are not expected the label
//! field may be `-`.

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::fs::File;
use std::io::{BufRead, BufReader};
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::rng::SplitMix64;

/// Sentiment label. The derived ordering is the canonical order used for
/// tie-breaking everywhere: Positive < Negative < Neutral < Mixed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Label {
    Positive,
    Negative,
    Neutral,
    Mixed,
}

impl Label {
    pub const ALL: [Label; 4] = [Label::Positive, Label::Negative, Label::Neutral, Label::Mixed];

    pub fn as_str(self) -> &'static str {
        match self {
            Label::Positive => "positive",
            Label::Negative => "negative",
            Label::Neutral => "neutral",
            Label::Mixed => "mixed",
        }
    }

    /// Position in the canonical order.
    pub fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Label {
    type Err = CorpusError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let lower = s.trim().to_ascii_lowercase();
        Label::ALL
            .into_iter()
            .find(|l| l.as_str() == lower)
            .ok_or_else(|| CorpusError::UnknownLabel(s.to_string()))
    }
}

/// Label granularity of a classification task.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ClassificationLevel {
    #[serde(rename = "two-way")]
    TwoWay,
    #[serde(rename = "three-way")]
    ThreeWay,
    #[serde(rename = "four-way")]
    FourWay,
}

impl ClassificationLevel {
    pub const ALL: [ClassificationLevel; 3] = [Self::TwoWay, Self::ThreeWay, Self::FourWay];

    /// Labels of this level in canonical order.
    pub fn labels(self) -> &'static [Label] {
        match self {
            Self::TwoWay => &Label::ALL[..2],
            Self::ThreeWay => &Label::ALL[..3],
            Self::FourWay => &Label::ALL[..],
        }
    }

    pub fn contains(self, label: Label) -> bool {
        self.labels().contains(&label)
    }

    pub fn num_classes(self) -> usize {
        self.labels().len()
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Self::TwoWay => "two-way",
            Self::ThreeWay => "three-way",
            Self::FourWay => "four-way",
        }
    }
}

impl fmt::Display for ClassificationLevel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ClassificationLevel {
    type Err = CorpusError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().replace('_', "-").as_str() {
            "two-way" | "twoway" | "2" => Ok(Self::TwoWay),
            "three-way" | "threeway" | "3" => Ok(Self::ThreeWay),
            "four-way" | "fourway" | "4" => Ok(Self::FourWay),
            _ => Err(CorpusError::UnknownLevel(s.to_string())),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CorpusError {
    #[error("line {line}: malformed row ({reason})")]
    MalformedRow { line: usize, reason: String },
    #[error("unknown label {0:?}")]
    UnknownLabel(String),
    #[error("unknown classification level {0:?}")]
    UnknownLevel(String),
    #[error("duplicate tweet id {0:?}")]
    DuplicateId(String),
    #[error("corpus is empty")]
    EmptyCorpus,
    #[error("tweet {id:?} has label {label} outside the {level} label set")]
    LabelOutOfLevel { id: String, label: Label, level: ClassificationLevel },
    #[error("tweet {0:?} is unlabeled")]
    Unlabeled(String),
    #[error("class {0} has fewer than 2 tweets")]
    ClassTooSmall(Label),
    #[error("test fraction {0} is outside (0, 1)")]
    InvalidFraction(f64),
    #[error("{path}: {message}")]
    Io { path: String, message: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tweet {
    pub id: String,
    pub text: String,
    pub label: Option<Label>,
}

impl Tweet {
    pub fn new(id: impl Into<String>, label: Option<Label>, text: impl Into<String>) -> Self {
        Self { id: id.into(), text: text.into(), label }
    }
}

/// An ordered collection of tweets tagged with a classification level.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dataset {
    tweets: Vec<Tweet>,
    level: ClassificationLevel,
}

impl Dataset {
    /// Build a dataset, checking id uniqueness, non-empty text and that every
    /// label belongs to `level`.
    pub fn new(tweets: Vec<Tweet>, level: ClassificationLevel) -> Result<Self, CorpusError> {
        let mut seen = HashSet::with_capacity(tweets.len());
        for (i, t) in tweets.iter().enumerate() {
            if t.id.is_empty() {
                return Err(CorpusError::MalformedRow { line: i + 1, reason: "empty id".into() });
            }
            if t.text.trim().is_empty() {
                return Err(CorpusError::MalformedRow { line: i + 1, reason: "empty text".into() });
            }
            if !seen.insert(t.id.as_str()) {
                return Err(CorpusError::DuplicateId(t.id.clone()));
            }
            if let Some(label) = t.label {
                if !level.contains(label) {
                    return Err(CorpusError::LabelOutOfLevel { id: t.id.clone(), label, level });
                }
            }
        }
        Ok(Self { tweets, level })
    }

    pub fn tweets(&self) -> &[Tweet] {
        &self.tweets
    }

    pub fn level(&self) -> ClassificationLevel {
        self.level
    }

    pub fn len(&self) -> usize {
        self.tweets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tweets.is_empty()
    }

    pub fn is_labeled(&self) -> bool {
        self.tweets.iter().all(|t| t.label.is_some())
    }

    /// Gold labels in dataset order; fails on the first unlabeled tweet.
    pub fn labels(&self) -> Result<Vec<Label>, CorpusError> {
        self.tweets
            .iter()
            .map(|t| t.label.ok_or_else(|| CorpusError::Unlabeled(t.id.clone())))
            .collect()
    }

    /// Per-class counts over the labeled tweets, including zero entries for
    /// every label of the dataset's level.
    pub fn class_counts(&self) -> BTreeMap<Label, usize> {
        let mut counts: BTreeMap<Label, usize> =
            self.level.labels().iter().map(|&l| (l, 0)).collect();
        for label in self.tweets.iter().filter_map(|t| t.label) {
            *counts.entry(label).or_insert(0) += 1;
        }
        counts
    }
}

/// Load a corpus TSV file at the four-way level.
pub fn load_corpus(path: impl AsRef<Path>, expect_labels: bool) -> Result<Dataset, CorpusError> {
    let path = path.as_ref();
    let file = File::open(path).map_err(|e| io_error(path, e))?;
    read_corpus(BufReader::new(file), expect_labels).map_err(|e| match e {
        CorpusError::Io { message, .. } => CorpusError::Io { path: path.display().to_string(), message },
        other => other,
    })
}

/// Parse corpus TSV from any buffered reader.
pub fn read_corpus<R: BufRead>(reader: R, expect_labels: bool) -> Result<Dataset, CorpusError> {
    let mut tweets = Vec::new();
    let mut seen = HashSet::new();
    for (idx, line) in reader.lines().enumerate() {
        let line_no = idx + 1;
        let line = line
            .map_err(|e| CorpusError::Io { path: "<reader>".into(), message: e.to_string() })?;
        let line = line.strip_suffix('\r').unwrap_or(&line);
        if line.starts_with('#') || line.trim().is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split('\t').collect();
        if fields.len() != 3 {
            return Err(CorpusError::MalformedRow {
                line: line_no,
                reason: format!("expected 3 tab-separated fields, found {}", fields.len()),
            });
        }
        let id = fields[0].trim();
        if id.is_empty() {
            return Err(CorpusError::MalformedRow { line: line_no, reason: "empty id".into() });
        }
        let text = fields[2];
        if text.trim().is_empty() {
            return Err(CorpusError::MalformedRow { line: line_no, reason: "empty text".into() });
        }
        let raw_label = fields[1].trim();
        let label = if !expect_labels && (raw_label == "-" || raw_label.is_empty()) {
            None
        } else {
            Some(raw_label.parse::<Label>()?)
        };
        if !seen.insert(id.to_string()) {
            return Err(CorpusError::DuplicateId(id.to_string()));
        }
        tweets.push(Tweet::new(id, label, text));
    }
    if tweets.is_empty() {
        return Err(CorpusError::EmptyCorpus);
    }
    Ok(Dataset { tweets, level: ClassificationLevel::FourWay })
}

/// Keep only tweets whose label belongs to `level`, preserving order.
/// Unlabeled tweets are dropped.
pub fn filter_by_level(d: &Dataset, level: ClassificationLevel) -> Dataset {
    let tweets = d
        .tweets
        .iter()
        .filter(|t| t.label.is_some_and(|l| level.contains(l)))
        .cloned()
        .collect();
    Dataset { tweets, level }
}

/// Number of test items drawn from a class of `class_count` tweets:
/// `round(class_count * test_fraction)` with halves rounded up.
pub fn stratified_test_count(class_count: usize, test_fraction: f64) -> usize {
    (class_count as f64 * test_fraction + 0.5).floor() as usize
}

/// Seeded stratified split into `(train, test)`.
///
/// Each class is ordered by id, shuffled with a SplitMix64 stream derived
/// from `(seed, label index)`, and its first `round(n * test_fraction)`
/// members go to the test side. Both partitions keep the input order, so the
/// result depends only on the seed and the per-class id sets.
pub fn stratified_split(
    d: &Dataset,
    test_fraction: f64,
    seed: u64,
) -> Result<(Dataset, Dataset), CorpusError> {
    if !(test_fraction > 0.0 && test_fraction < 1.0) {
        return Err(CorpusError::InvalidFraction(test_fraction));
    }
    let mut by_class: BTreeMap<Label, Vec<&str>> = BTreeMap::new();
    for t in &d.tweets {
        let label = t.label.ok_or_else(|| CorpusError::Unlabeled(t.id.clone()))?;
        by_class.entry(label).or_default().push(t.id.as_str());
    }
    let mut test_ids: HashSet<&str> = HashSet::new();
    for (label, mut ids) in by_class {
        if ids.len() < 2 {
            return Err(CorpusError::ClassTooSmall(label));
        }
        ids.sort_unstable();
        let mut rng = SplitMix64::derived(seed, label.index() as u64);
        rng.shuffle(&mut ids);
        let n_test = stratified_test_count(ids.len(), test_fraction);
        test_ids.extend(ids.into_iter().take(n_test));
    }
    let (test, train): (Vec<Tweet>, Vec<Tweet>) =
        d.tweets.iter().cloned().partition(|t| test_ids.contains(t.id.as_str()));
    Ok((
        Dataset { tweets: train, level: d.level },
        Dataset { tweets: test, level: d.level },
    ))
}

fn io_error(path: &Path, e: std::io::Error) -> CorpusError {
    CorpusError::Io { path: path.display().to_string(), message: e.to_string() }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn parse(s: &str) -> Result<Dataset, CorpusError> {
        read_corpus(s.as_bytes(), true)
    }

    fn balanced(n_pos: usize, n_neg: usize) -> Dataset {
        let mut tweets = Vec::new();
        for i in 0..n_pos {
            tweets.push(Tweet::new(format!("p{i:03}"), Some(Label::Positive), "نص"));
        }
        for i in 0..n_neg {
            tweets.push(Tweet::new(format!("n{i:03}"), Some(Label::Negative), "نص"));
        }
        Dataset::new(tweets, ClassificationLevel::FourWay).unwrap()
    }

    #[test]
    fn label_order_is_canonical() {
        let mut labels = vec![Label::Mixed, Label::Neutral, Label::Positive, Label::Negative];
        labels.sort();
        assert_eq!(labels, Label::ALL);
    }

    #[test]
    fn level_label_sets_nest() {
        assert_eq!(ClassificationLevel::TwoWay.labels(), &[Label::Positive, Label::Negative]);
        assert_eq!(
            ClassificationLevel::ThreeWay.labels(),
            &[Label::Positive, Label::Negative, Label::Neutral]
        );
        assert_eq!(ClassificationLevel::FourWay.labels(), &Label::ALL);
        for l in ClassificationLevel::TwoWay.labels() {
            assert!(ClassificationLevel::ThreeWay.contains(*l));
        }
    }

    #[test]
    fn single_row() {
        let d = parse("t1\tpositive\tمرحبا\n").unwrap();
        assert_eq!(d.len(), 1);
        let counts = d.class_counts();
        assert_eq!(counts[&Label::Positive], 1);
        assert_eq!(counts.values().sum::<usize>(), 1);
    }

    #[test]
    fn labels_are_case_insensitive_and_comments_skipped() {
        let d = parse("# header\nt1\tPOSITIVE\ta\nt2\tNeGaTiVe\tb\n\nt3\tmixed\tc\n").unwrap();
        assert_eq!(d.labels().unwrap(), vec![Label::Positive, Label::Negative, Label::Mixed]);
    }

    #[test]
    fn empty_file_is_rejected() {
        assert_eq!(parse(""), Err(CorpusError::EmptyCorpus));
        assert_eq!(parse("# only a comment\n"), Err(CorpusError::EmptyCorpus));
    }

    #[test]
    fn row_errors() {
        assert!(matches!(parse("t1\tpositive\n"), Err(CorpusError::MalformedRow { line: 1, .. })));
        assert!(matches!(
            parse("t1\tpositive\ta\nt2\tpositive\ta\tb\n"),
            Err(CorpusError::MalformedRow { line: 2, .. })
        ));
        assert!(matches!(parse("t1\tpositive\t   \n"), Err(CorpusError::MalformedRow { .. })));
        assert_eq!(parse("t1\thappy\ta\n"), Err(CorpusError::UnknownLabel("happy".into())));
        assert_eq!(parse("t1\tpositive\ta\nt1\tnegative\tb\n"), Err(CorpusError::DuplicateId("t1".into())));
    }

    #[test]
    fn unlabeled_rows_when_labels_not_expected() {
        let d = read_corpus("a\t-\tنص\nb\tpositive\tنص\n".as_bytes(), false).unwrap();
        assert_eq!(d.tweets()[0].label, None);
        assert_eq!(d.tweets()[1].label, Some(Label::Positive));
        assert!(matches!(read_corpus("a\t-\tنص\n".as_bytes(), true), Err(CorpusError::UnknownLabel(_))));
    }

    #[test]
    fn filter_keeps_order_and_is_identity_at_four_way() {
        let d = parse("a\tmixed\tx\nb\tpositive\tx\nc\tneutral\tx\nd\tnegative\tx\n").unwrap();
        let two = filter_by_level(&d, ClassificationLevel::TwoWay);
        let ids: Vec<_> = two.tweets().iter().map(|t| t.id.as_str()).collect();
        assert_eq!(ids, ["b", "d"]);
        assert_eq!(two.level(), ClassificationLevel::TwoWay);
        assert_eq!(filter_by_level(&d, ClassificationLevel::FourWay), d);
    }

    #[test]
    fn filter_of_only_mixed_to_two_way_is_empty() {
        let d = parse("a\tmixed\tx\nb\tmixed\ty\n").unwrap();
        assert!(filter_by_level(&d, ClassificationLevel::TwoWay).is_empty());
    }

    #[test]
    fn split_rounds_half_up_per_class() {
        let d = balanced(50, 50);
        let (train, test) = stratified_split(&d, 0.11, 3).unwrap();
        let counts = test.class_counts();
        assert_eq!(counts[&Label::Positive], 6);
        assert_eq!(counts[&Label::Negative], 6);
        assert_eq!(train.len(), 88);
    }

    #[test]
    fn split_is_deterministic() {
        let d = balanced(50, 50);
        assert_eq!(stratified_split(&d, 0.11, 9).unwrap(), stratified_split(&d, 0.11, 9).unwrap());
        assert_ne!(stratified_split(&d, 0.11, 9).unwrap().1, stratified_split(&d, 0.11, 10).unwrap().1);
    }

    #[test]
    fn smallest_legal_split() {
        let d = balanced(2, 0);
        let (train, test) = stratified_split(&d, 0.5, 1).unwrap();
        assert_eq!((train.len(), test.len()), (1, 1));
    }

    #[test]
    fn split_errors() {
        assert_eq!(stratified_split(&balanced(1, 5), 0.5, 1), Err(CorpusError::ClassTooSmall(Label::Positive)));
        assert_eq!(stratified_split(&balanced(5, 5), 0.0, 1), Err(CorpusError::InvalidFraction(0.0)));
        assert_eq!(stratified_split(&balanced(5, 5), 1.0, 1), Err(CorpusError::InvalidFraction(1.0)));
    }

    fn arb_dataset() -> impl Strategy<Value = Dataset> {
        proptest::collection::vec(0usize..4, 8..60).prop_map(|labels| {
            let mut tweets: Vec<Tweet> = labels
                .iter()
                .enumerate()
                .map(|(i, &l)| Tweet::new(format!("id{i}"), Some(Label::ALL[l]), "x"))
                .collect();
            // every class gets at least two members
            for (k, l) in Label::ALL.iter().enumerate() {
                for j in 0..2 {
                    tweets.push(Tweet::new(format!("pad{k}_{j}"), Some(*l), "x"));
                }
            }
            Dataset::new(tweets, ClassificationLevel::FourWay).unwrap()
        })
    }

    fn id_set(d: &Dataset) -> std::collections::BTreeSet<String> {
        d.tweets().iter().map(|t| t.id.clone()).collect()
    }

    proptest! {
        #[test]
        fn filter_then_split_conserves(d in arb_dataset(), frac in 0.05f64..0.95, seed: u64, lvl in 0usize..3) {
            let level = ClassificationLevel::ALL[lvl];
            let filtered = filter_by_level(&d, level);
            let (train, test) = stratified_split(&filtered, frac, seed).unwrap();
            prop_assert_eq!(train.len() + test.len(), filtered.len());
            let (a, b) = (id_set(&train), id_set(&test));
            prop_assert!(a.is_disjoint(&b));
            prop_assert_eq!(a.union(&b).cloned().collect::<std::collections::BTreeSet<_>>(), id_set(&filtered));
            for (label, n) in filtered.class_counts() {
                prop_assert_eq!(test.class_counts()[&label], stratified_test_count(n, frac));
            }
        }

        #[test]
        fn filter_is_idempotent(d in arb_dataset(), lvl in 0usize..3) {
            let level = ClassificationLevel::ALL[lvl];
            let once = filter_by_level(&d, level);
            prop_assert_eq!(filter_by_level(&once, level), once);
        }

        #[test]
        fn split_membership_ignores_input_order(d in arb_dataset(), seed: u64, rot in 0usize..50) {
            let mut shuffled = d.tweets().to_vec();
            let k = rot % shuffled.len();
            shuffled.rotate_left(k);
            shuffled.reverse();
            let d2 = Dataset::new(shuffled, d.level()).unwrap();
            let (tr1, te1) = stratified_split(&d, 0.3, seed).unwrap();
            let (tr2, te2) = stratified_split(&d2, 0.3, seed).unwrap();
            prop_assert_eq!(id_set(&tr1), id_set(&tr2));
            prop_assert_eq!(id_set(&te1), id_set(&te2));
        }
    }
}
