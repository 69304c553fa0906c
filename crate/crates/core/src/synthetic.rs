//! Toy lexicon resources and generated corpora.
//!
//! The toy bundle has the same file layout as real resources
//! ([`BundlePaths::in_dir`]). The generated corpus is labeled by
//! [`rule_label`], a fixed function of extracted features, so the task is
//! learnable by construction.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io;
use std::path::Path;

use crate::corpus::{ClassificationLevel, Dataset, Label, Tweet};
use crate::features::{extract, FeatureId};
use crate::fsutil::write_atomic;
use crate::lexicon::{BundlePaths, LexiconBundle, MarkerKind, MarkerList, PolarLexicon, ScoredLexicon};
use crate::rng::SplitMix64;

/// Tweets whose absolute TweetScore is below this are neutral.
pub const NEUTRAL_BAND: f64 = 0.5;

pub const DEFAULT_SEED: u64 = 20_170_404;

/// Class sizes of the bundled corpus.
pub const FIXTURE_COUNTS: [(Label, usize); 4] =
    [(Label::Positive, 60), (Label::Negative, 60), (Label::Neutral, 50), (Label::Mixed, 30)];

const POSITIVE_WORDS: [(&str, f64); 8] = [
    ("جميل", 2.5),
    ("رائع", 3.0),
    ("سعيد", 2.0),
    ("ممتاز", 3.2),
    ("حلو", 1.8),
    ("احب", 2.2),
    ("جيد", 1.5),
    ("فرحة", 2.1),
];

const NEGATIVE_WORDS: [(&str, f64); 8] = [
    ("سيء", -2.5),
    ("حزين", -2.0),
    ("فاشل", -3.0),
    ("كريه", -2.7),
    ("مزعج", -1.9),
    ("غاضب", -2.2),
    ("ظلم", -2.4),
    ("تعبان", -1.6),
];

const FILLERS: [&str; 12] = [
    "اليوم", "الجو", "المباراة", "الرياض", "الطريق", "الاجتماع", "الساعة", "الخبر", "الناس", "البيت", "الفريق", "المدرسة",
];

const NEGATIONS: [&str; 5] = ["لا", "ليس", "لم", "لن", "ما"];
const INTENSIFIERS: [&str; 3] = ["جدا", "كثير", "مرة"];
const DIMINISHERS: [&str; 3] = ["قليل", "شوي", "نوعا"];
const MODALS: [&str; 3] = ["ربما", "يمكن", "لعل"];
const CONTRASTS: [&str; 3] = ["لكن", "بس", "بينما"];
const POSITIVE_EMOTICONS: [&str; 5] = [":)", ":-)", ":D", "❤", "😀"];
const NEGATIVE_EMOTICONS: [&str; 4] = [":(", ":-(", "😢", "😡"];

fn scored_text() -> String {
    let mut out = String::from("# term\tscore\n");
    for (w, s) in POSITIVE_WORDS.iter().chain(&NEGATIVE_WORDS) {
        let _ = writeln!(out, "{w}\t{s}");
    }
    out
}

/// The two polarity lexicons cover overlapping halves of the scored terms
/// plus a few words of their own.
fn polar_text(offset: usize, extra: &[(&str, &str)]) -> String {
    let mut out = String::from("# term\tpolarity\n");
    for (i, (w, _)) in POSITIVE_WORDS.iter().enumerate() {
        if (i + offset).is_multiple_of(2) || i < 2 {
            let _ = writeln!(out, "{w}\tpos");
        }
    }
    for (i, (w, _)) in NEGATIVE_WORDS.iter().enumerate() {
        if (i + offset).is_multiple_of(2) || i < 2 {
            let _ = writeln!(out, "{w}\tneg");
        }
    }
    for (w, p) in extra {
        let _ = writeln!(out, "{w}\t{p}");
    }
    out
}

fn list_text(terms: &[&str]) -> String {
    terms.iter().map(|t| format!("{t}\n")).collect()
}

fn marker_terms(kind: MarkerKind) -> &'static [&'static str] {
    match kind {
        MarkerKind::Negation => &NEGATIONS,
        MarkerKind::Intensifier => &INTENSIFIERS,
        MarkerKind::Diminisher => &DIMINISHERS,
        MarkerKind::Modal => &MODALS,
        MarkerKind::Contrast => &CONTRASTS,
        MarkerKind::PositiveEmoticon => &POSITIVE_EMOTICONS,
        MarkerKind::NegativeEmoticon => &NEGATIVE_EMOTICONS,
    }
}

/// File name (relative to the resource directory) and contents of every
/// toy resource, in [`BundlePaths::in_dir`] layout.
pub fn toy_resource_files() -> Vec<(String, String)> {
    let mut files = vec![
        ("scored.tsv".to_string(), scored_text()),
        ("polar_a.tsv".to_string(), polar_text(0, &[("مبهج", "pos"), ("كئيب", "neg")])),
        ("polar_b.tsv".to_string(), polar_text(1, &[("لطيف", "pos"), ("مخيف", "neg")])),
    ];
    for kind in MarkerKind::ALL {
        files.push((format!("{}.txt", kind.as_str()), list_text(marker_terms(kind))));
    }
    files
}

pub fn toy_bundle() -> LexiconBundle {
    let files: BTreeMap<String, String> = toy_resource_files().into_iter().collect();
    let markers = MarkerKind::ALL.map(|k| MarkerList::parse(k, &files[&format!("{}.txt", k.as_str())]));
    LexiconBundle::new(
        ScoredLexicon::parse("scored.tsv", &files["scored.tsv"]).expect("toy scored lexicon"),
        PolarLexicon::parse("polar_a.tsv", &files["polar_a.tsv"]).expect("toy polar lexicon"),
        PolarLexicon::parse("polar_b.tsv", &files["polar_b.tsv"]).expect("toy polar lexicon"),
        markers,
    )
    .expect("toy bundle has every marker list")
}

/// Mixed when both polarity counts are positive and a contrast word is
/// present; otherwise neutral inside the neutral band, else the sign of
/// TweetScore.
pub fn rule_label(text: &str, bundle: &LexiconBundle) -> Label {
    let v = extract(&bundle.tokenize("", text), bundle);
    let score = v.get(FeatureId::TweetScore);
    if v.get(FeatureId::PositiveWordCount) > 0.0
        && v.get(FeatureId::NegativeWordCount) > 0.0
        && v.get(FeatureId::HasContrastWord) > 0.0
    {
        Label::Mixed
    } else if score.abs() < NEUTRAL_BAND {
        Label::Neutral
    } else if score > 0.0 {
        Label::Positive
    } else {
        Label::Negative
    }
}

fn pick<'a>(rng: &mut SplitMix64, items: &[&'a str]) -> &'a str {
    items[rng.below(items.len())]
}

fn pick_word(rng: &mut SplitMix64, items: &[(&'static str, f64)]) -> &'static str {
    items[rng.below(items.len())].0
}

/// Surface noise the normalizer must undo: a diacritic or an elongation.
fn decorate(rng: &mut SplitMix64, word: &str) -> String {
    match rng.below(6) {
        0 => {
            let mut chars: Vec<char> = word.chars().collect();
            let at = 1 + rng.below(chars.len() - 1);
            chars.insert(at, '\u{064E}');
            chars.into_iter().collect()
        }
        1 => {
            let mut chars: Vec<char> = word.chars().collect();
            let last = *chars.last().expect("non-empty word");
            chars.extend([last, last]);
            chars.into_iter().collect()
        }
        _ => word.to_string(),
    }
}

fn draft(rng: &mut SplitMix64, label: Label) -> String {
    let mut parts: Vec<String> = Vec::new();
    parts.push(pick(rng, &FILLERS).to_string());
    if rng.below(3) == 0 {
        parts.push(format!("#{}", pick(rng, &FILLERS)));
    }
    match label {
        Label::Positive | Label::Negative => {
            let words = if label == Label::Positive { &POSITIVE_WORDS } else { &NEGATIVE_WORDS };
            let emoticons: &[&str] = if label == Label::Positive { &POSITIVE_EMOTICONS } else { &NEGATIVE_EMOTICONS };
            if rng.below(3) == 0 {
                parts.push(pick(rng, &INTENSIFIERS).to_string());
            }
            for _ in 0..1 + rng.below(2) {
                let w = pick_word(rng, words);
                parts.push(decorate(rng, w));
            }
            if rng.below(4) == 0 {
                parts.push(pick(rng, &DIMINISHERS).to_string());
            }
            if rng.below(2) == 0 {
                parts.push(pick(rng, emoticons).to_string());
            }
            if rng.below(3) == 0 {
                parts.push("!".to_string());
            }
        }
        Label::Neutral => {
            for _ in 0..rng.below(3) {
                parts.push(pick(rng, &FILLERS).to_string());
            }
            match rng.below(4) {
                0 => parts.push(pick(rng, &MODALS).to_string()),
                1 => parts.push(pick(rng, &NEGATIONS).to_string()),
                _ => {}
            }
            match rng.below(4) {
                0 => parts.push("؟".to_string()),
                1 => parts.push("@user_1".to_string()),
                2 => parts.push("https://t.co/x1".to_string()),
                _ => {}
            }
        }
        Label::Mixed => {
            let w = pick_word(rng, &POSITIVE_WORDS);
            parts.push(decorate(rng, w));
            parts.push(pick(rng, &CONTRASTS).to_string());
            if rng.below(3) == 0 {
                parts.push(pick(rng, &NEGATIONS).to_string());
            }
            let w = pick_word(rng, &NEGATIVE_WORDS);
            parts.push(decorate(rng, w));
            if rng.below(3) == 0 {
                parts.push(pick(rng, &POSITIVE_EMOTICONS).to_string());
            }
        }
    }
    parts.join(" ")
}

/// A labeled four-way corpus with `counts` tweets per class, ids
/// `s0001`, `s0002`, ... in a seeded shuffled order. Every label agrees
/// with [`rule_label`] under [`toy_bundle`].
pub fn generate_corpus(counts: &[(Label, usize)], seed: u64) -> Dataset {
    let bundle = toy_bundle();
    let mut rng = SplitMix64::new(seed);
    let mut pending: Vec<(Label, String)> = Vec::new();
    for &(label, n) in counts {
        for _ in 0..n {
            let text = loop {
                let text = draft(&mut rng, label);
                if rule_label(&text, &bundle) == label {
                    break text;
                }
            };
            pending.push((label, text));
        }
    }
    rng.shuffle(&mut pending);
    let width = pending.len().to_string().len().max(4);
    let tweets = pending
        .into_iter()
        .enumerate()
        .map(|(i, (label, text))| Tweet::new(format!("s{:0width$}", i + 1), Some(label), text))
        .collect();
    Dataset::new(tweets, ClassificationLevel::FourWay).expect("generated ids are unique")
}

/// The bundled 200-tweet corpus.
pub fn fixture_corpus() -> Dataset {
    generate_corpus(&FIXTURE_COUNTS, DEFAULT_SEED)
}

/// Corpus TSV text, `id<TAB>label<TAB>text` per line.
pub fn corpus_tsv(d: &Dataset) -> String {
    let mut out = String::from("# id\tlabel\ttext\n");
    for t in d.tweets() {
        let label = t.label.map_or("-", Label::as_str);
        let _ = writeln!(out, "{}\t{label}\t{}", t.id, t.text);
    }
    out
}

/// Write the toy resources under `dir/lexicons` and the fixture corpus as
/// `dir/corpus.tsv`.
pub fn write_fixture(dir: impl AsRef<Path>) -> io::Result<BundlePaths> {
    let dir = dir.as_ref();
    let lex = dir.join("lexicons");
    std::fs::create_dir_all(&lex)?;
    for (name, text) in toy_resource_files() {
        write_atomic(lex.join(name), text.as_bytes())?;
    }
    write_atomic(dir.join("corpus.tsv"), corpus_tsv(&fixture_corpus()).as_bytes())?;
    Ok(BundlePaths::in_dir(lex))
}
