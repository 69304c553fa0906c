//! Hand-written tweets with hand-derived feature vectors.
//!
//! Column order: AraSenti pos/neg, MPQA pos/neg, Liu pos/neg, negation,
//! intensifier, diminisher, modal, contrast, positive count, negative count,
//! score, question, exclamation, positive emoticon, negative emoticon, length.

#![allow(dead_code)]

use arasent_core::features::NUM_FEATURES;
use arasent_core::lexicon::{LexiconBundle, MarkerKind, MarkerList, PolarLexicon, ScoredLexicon};

pub fn bundle() -> LexiconBundle {
    let scored = ScoredLexicon::parse(
        "scored",
        "جميل\t2.5\nسعيد\t1.5\nسيء\t-2\nحزين\t-1.25\nرائع\t3\nفرحة\t2\n",
    )
    .unwrap();
    let mpqa = PolarLexicon::parse("mpqa", "جميل\tpos\nحلو\tpos\nسيء\tneg\nكريه\tneg\n").unwrap();
    let liu = PolarLexicon::parse("liu", "سعيد\tpos\nممتاز\tpos\nأحب\tpos\nحزين\tneg\nفاشل\tneg\n").unwrap();
    let markers = [
        (MarkerKind::Negation, "لا\nليس\n"),
        (MarkerKind::Intensifier, "جدا\n"),
        (MarkerKind::Diminisher, "قليلا\n"),
        (MarkerKind::Modal, "ربما\n"),
        (MarkerKind::Contrast, "لكن\n"),
        (MarkerKind::PositiveEmoticon, ":)\n😀\n"),
        (MarkerKind::NegativeEmoticon, ":(\n😢\n"),
    ]
    .map(|(k, text)| MarkerList::parse(k, text));
    LexiconBundle::new(scored, mpqa, liu, markers).unwrap()
}

#[rustfmt::skip]
pub const GOLDEN: &[(&str, [f64; NUM_FEATURES])] = &[
    //                          Ap An Mp Mn Lp Ln ng in dm md ct pc nc score   q  e  ep en len
    ("جميل",                   [1., 0., 1., 0., 0., 0., 0., 0., 0., 0., 0., 1., 0., 2.5,   0., 0., 0., 0., 1.]),
    ("سيء جدا",                [0., 1., 0., 1., 0., 0., 0., 1., 0., 0., 0., 0., 1., -2.0,  0., 0., 0., 0., 2.]),
    ("سعيد",                   [1., 0., 0., 0., 1., 0., 0., 0., 0., 0., 0., 1., 0., 1.5,   0., 0., 0., 0., 1.]),
    ("حزين",                   [0., 1., 0., 0., 0., 1., 0., 0., 0., 0., 0., 0., 1., -1.25, 0., 0., 0., 0., 1.]),
    ("حلو",                    [0., 0., 1., 0., 0., 0., 0., 0., 0., 0., 0., 0., 0., 0.0,   0., 0., 0., 0., 1.]),
    ("كريه",                   [0., 0., 0., 1., 0., 0., 0., 0., 0., 0., 0., 0., 0., 0.0,   0., 0., 0., 0., 1.]),
    ("ممتاز",                  [0., 0., 0., 0., 1., 0., 0., 0., 0., 0., 0., 0., 0., 0.0,   0., 0., 0., 0., 1.]),
    ("فاشل",                   [0., 0., 0., 0., 0., 1., 0., 0., 0., 0., 0., 0., 0., 0.0,   0., 0., 0., 0., 1.]),
    ("لا اعرف",                [0., 0., 0., 0., 0., 0., 1., 0., 0., 0., 0., 0., 0., 0.0,   0., 0., 0., 0., 2.]),
    ("قليلا سعيد",             [1., 0., 0., 0., 1., 0., 0., 0., 1., 0., 0., 1., 0., 1.5,   0., 0., 0., 0., 2.]),
    ("ربما غدا",               [0., 0., 0., 0., 0., 0., 0., 0., 0., 1., 0., 0., 0., 0.0,   0., 0., 0., 0., 2.]),
    ("جميل لكن حزين",          [1., 1., 1., 0., 0., 1., 0., 0., 0., 0., 1., 1., 1., 1.25,  0., 0., 0., 0., 3.]),
    ("هل انت بخير؟",           [0., 0., 0., 0., 0., 0., 0., 0., 0., 0., 0., 0., 0., 0.0,   1., 0., 0., 0., 3.]),
    ("ماذا?",                  [0., 0., 0., 0., 0., 0., 0., 0., 0., 0., 0., 0., 0., 0.0,   1., 0., 0., 0., 1.]),
    ("رائع!",                  [1., 0., 0., 0., 0., 0., 0., 0., 0., 0., 0., 1., 0., 3.0,   0., 1., 0., 0., 1.]),
    ("اليوم :)",               [0., 0., 0., 0., 0., 0., 0., 0., 0., 0., 0., 0., 0., 0.0,   0., 0., 1., 0., 1.]),
    ("اليوم :(",               [0., 0., 0., 0., 0., 0., 0., 0., 0., 0., 0., 0., 0., 0.0,   0., 0., 0., 1., 1.]),
    ("😀😢",                   [0., 0., 0., 0., 0., 0., 0., 0., 0., 0., 0., 0., 0., 0.0,   0., 0., 1., 1., 0.]),
    ("#جميل",                  [1., 0., 1., 0., 0., 0., 0., 0., 0., 0., 0., 1., 0., 2.5,   0., 0., 0., 0., 1.]),
    ("@سيء مرحبا",             [0., 0., 0., 0., 0., 0., 0., 0., 0., 0., 0., 0., 0., 0.0,   0., 0., 0., 0., 1.]),
    ("https://t.co/سيء جميل",  [1., 0., 1., 0., 0., 0., 0., 0., 0., 0., 0., 1., 0., 2.5,   0., 0., 0., 0., 1.]),
    // elongation is capped at two letters, which leaves an unknown word
    ("جمييييل",                [0., 0., 0., 0., 0., 0., 0., 0., 0., 0., 0., 0., 0., 0.0,   0., 0., 0., 0., 1.]),
    ("جَمِيل",                   [1., 0., 1., 0., 0., 0., 0., 0., 0., 0., 0., 1., 0., 2.5,   0., 0., 0., 0., 1.]),
    ("جميل جميل سيء",          [1., 1., 1., 1., 0., 0., 0., 0., 0., 0., 0., 2., 1., 3.0,   0., 0., 0., 0., 3.]),
    ("...",                    [0., 0., 0., 0., 0., 0., 0., 0., 0., 0., 0., 0., 0., 0.0,   0., 0., 0., 0., 0.]),
    ("لا ليس جدا جدا",         [0., 0., 0., 0., 0., 0., 1., 1., 0., 0., 0., 0., 0., 0.0,   0., 0., 0., 0., 4.]),
    ("فرحه",                   [1., 0., 0., 0., 0., 0., 0., 0., 0., 0., 0., 1., 0., 2.0,   0., 0., 0., 0., 1.]),
    ("احب",                    [0., 0., 0., 0., 1., 0., 0., 0., 0., 0., 0., 0., 0., 0.0,   0., 0., 0., 0., 1.]),
    ("ربما جميل سعيد لكن سيء حزين جدا قليلا لا ؟ ! :) :(",
                               [1., 1., 1., 1., 1., 1., 1., 1., 1., 1., 1., 2., 2., 0.75,  1., 1., 1., 1., 9.]),
    ("2020 جميل",              [1., 0., 1., 0., 0., 0., 0., 0., 0., 0., 0., 1., 0., 2.5,   0., 0., 0., 0., 2.]),
    ("جميل:)",                 [1., 0., 1., 0., 0., 0., 0., 0., 0., 0., 0., 1., 0., 2.5,   0., 0., 1., 0., 1.]),
];
