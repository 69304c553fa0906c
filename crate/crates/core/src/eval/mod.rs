//! Confusion matrices, precision/recall/F1, accuracy and the Pearson
//! chi-square test of gold vs predicted labels.

pub mod special;

use std::fmt::Write as _;

use thiserror::Error;

use crate::corpus::{ClassificationLevel, Label};

/// Significance threshold used to flag a chi-square result.
pub const SIGNIFICANCE_LEVEL: f64 = 0.05;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum EvalError {
    #[error("{gold} gold labels but {pred} predictions")]
    LengthMismatch { gold: usize, pred: usize },
    #[error("label {label} is outside the {level} label set")]
    LabelOutOfLevel { label: Label, level: ClassificationLevel },
    #[error("nothing to evaluate")]
    EmptyMatrix,
    #[error("confusion matrix must be square over its labels")]
    Shape,
}

/// Square count table, rows = gold, columns = predicted, labels in
/// canonical order restricted to the level.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConfusionMatrix {
    labels: Vec<Label>,
    counts: Vec<Vec<u64>>,
}

impl ConfusionMatrix {
    pub fn from_counts(labels: Vec<Label>, counts: Vec<Vec<u64>>) -> Result<Self, EvalError> {
        if counts.len() != labels.len() || counts.iter().any(|r| r.len() != labels.len()) {
            return Err(EvalError::Shape);
        }
        Ok(Self { labels, counts })
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn counts(&self) -> &[Vec<u64>] {
        &self.counts
    }

    pub fn k(&self) -> usize {
        self.labels.len()
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().flatten().sum()
    }

    pub fn row_sum(&self, i: usize) -> u64 {
        self.counts[i].iter().sum()
    }

    pub fn col_sum(&self, j: usize) -> u64 {
        self.counts.iter().map(|r| r[j]).sum()
    }

    pub fn trace(&self) -> u64 {
        (0..self.k()).map(|i| self.counts[i][i]).sum()
    }

    /// Reorder labels (rows and columns together) by `perm`, where
    /// `perm[new] = old`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        Self {
            labels: perm.iter().map(|&i| self.labels[i]).collect(),
            counts: perm.iter().map(|&i| perm.iter().map(|&j| self.counts[i][j]).collect()).collect(),
        }
    }
}

pub fn confusion(gold: &[Label], pred: &[Label], level: ClassificationLevel) -> Result<ConfusionMatrix, EvalError> {
    if gold.len() != pred.len() {
        return Err(EvalError::LengthMismatch { gold: gold.len(), pred: pred.len() });
    }
    if gold.is_empty() {
        return Err(EvalError::EmptyMatrix);
    }
    let labels = level.labels().to_vec();
    let index = |l: Label| labels.iter().position(|x| *x == l).ok_or(EvalError::LabelOutOfLevel { label: l, level });
    let mut counts = vec![vec![0u64; labels.len()]; labels.len()];
    for (&g, &p) in gold.iter().zip(pred) {
        counts[index(g)?][index(p)?] += 1;
    }
    Ok(ConfusionMatrix { labels, counts })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClassMetrics {
    pub label: Label,
    pub precision: f64,
    pub recall: f64,
    pub f1: f64,
    /// Gold count.
    pub support: u64,
}

fn ratio(num: u64, den: u64) -> f64 {
    if den == 0 {
        0.0
    } else {
        num as f64 / den as f64
    }
}

/// Per-class scores. Empty rows or columns give 0 recall or precision; F1 is
/// 0 when both are 0.
pub fn per_class(m: &ConfusionMatrix) -> Vec<ClassMetrics> {
    (0..m.k())
        .map(|i| {
            let tp = m.counts[i][i];
            let precision = ratio(tp, m.col_sum(i));
            let recall = ratio(tp, m.row_sum(i));
            let f1 = if precision + recall == 0.0 { 0.0 } else { 2.0 * precision * recall / (precision + recall) };
            ClassMetrics { label: m.labels[i], precision, recall, f1, support: m.row_sum(i) }
        })
        .collect()
}

/// Unweighted mean of per-class F1 over every label of the matrix,
/// including labels absent from the gold data.
pub fn macro_f1(m: &ConfusionMatrix) -> Result<f64, EvalError> {
    if m.total() == 0 {
        return Err(EvalError::EmptyMatrix);
    }
    let scores = per_class(m);
    Ok(scores.iter().map(|c| c.f1).sum::<f64>() / scores.len() as f64)
}

/// Support-weighted mean of per-class F1.
pub fn weighted_f1(m: &ConfusionMatrix) -> Result<f64, EvalError> {
    let total = m.total();
    if total == 0 {
        return Err(EvalError::EmptyMatrix);
    }
    Ok(per_class(m).iter().map(|c| c.f1 * c.support as f64).sum::<f64>() / total as f64)
}

pub fn accuracy(m: &ConfusionMatrix) -> Result<f64, EvalError> {
    let total = m.total();
    if total == 0 {
        return Err(EvalError::EmptyMatrix);
    }
    Ok(m.trace() as f64 / total as f64)
}

/// Pearson test of independence between gold and predicted labels.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChiSquareResult {
    pub statistic: f64,
    pub df: usize,
    pub p_value: f64,
    /// Some row or column was all zero and was dropped before testing.
    pub degenerate: bool,
}

impl ChiSquareResult {
    pub fn significant(&self) -> bool {
        self.p_value < SIGNIFICANCE_LEVEL
    }
}

/// Expected counts `E_ij = row_i * col_j / n`, statistic `sum (O - E)^2 / E`,
/// `df = (r - 1)(c - 1)` over the non-empty rows and columns. Tables with
/// empty rows or columns are tested on the remaining sub-table and flagged
/// as degenerate. With no degrees of freedom left the p-value is 1.
pub fn chi_square_test(m: &ConfusionMatrix) -> Result<ChiSquareResult, EvalError> {
    let n = m.total();
    if n == 0 {
        return Err(EvalError::EmptyMatrix);
    }
    let rows: Vec<usize> = (0..m.k()).filter(|&i| m.row_sum(i) > 0).collect();
    let cols: Vec<usize> = (0..m.k()).filter(|&j| m.col_sum(j) > 0).collect();
    let degenerate = rows.len() < m.k() || cols.len() < m.k();
    let n = n as f64;
    let mut statistic = 0.0;
    for &i in &rows {
        for &j in &cols {
            let expected = m.row_sum(i) as f64 * m.col_sum(j) as f64 / n;
            let diff = m.counts[i][j] as f64 - expected;
            statistic += diff * diff / expected;
        }
    }
    let df = rows.len().saturating_sub(1) * cols.len().saturating_sub(1);
    let p_value = if df == 0 { 1.0 } else { special::chi_square_sf(statistic, df as f64).clamp(0.0, 1.0) };
    Ok(ChiSquareResult { statistic, df, p_value, degenerate })
}

/// All metrics of one evaluation run.
#[derive(Debug, Clone, PartialEq)]
pub struct EvalReport {
    pub level: ClassificationLevel,
    pub n: u64,
    pub confusion: ConfusionMatrix,
    pub per_class: Vec<ClassMetrics>,
    pub macro_f1: f64,
    pub weighted_f1: f64,
    pub accuracy: f64,
    pub chi_square: ChiSquareResult,
}

pub fn evaluate(gold: &[Label], pred: &[Label], level: ClassificationLevel) -> Result<EvalReport, EvalError> {
    let m = confusion(gold, pred, level)?;
    Ok(EvalReport {
        level,
        n: m.total(),
        per_class: per_class(&m),
        macro_f1: macro_f1(&m)?,
        weighted_f1: weighted_f1(&m)?,
        accuracy: accuracy(&m)?,
        chi_square: chi_square_test(&m)?,
        confusion: m,
    })
}

impl EvalReport {
    /// Flat `key = value` lines, stable order, suitable for diffing.
    pub fn to_key_values(&self) -> String {
        let mut out = String::new();
        let mut kv = |k: &str, v: String| {
            let _ = writeln!(out, "{k} = {v}");
        };
        kv("level", self.level.to_string());
        kv("n", self.n.to_string());
        kv("macro_f1", self.macro_f1.to_string());
        kv("weighted_f1", self.weighted_f1.to_string());
        kv("accuracy", self.accuracy.to_string());
        for c in &self.per_class {
            kv(&format!("{}.precision", c.label), c.precision.to_string());
            kv(&format!("{}.recall", c.label), c.recall.to_string());
            kv(&format!("{}.f1", c.label), c.f1.to_string());
            kv(&format!("{}.support", c.label), c.support.to_string());
        }
        kv("chi_square.test", "pearson_independence_gold_vs_predicted".into());
        kv("chi_square.statistic", self.chi_square.statistic.to_string());
        kv("chi_square.df", self.chi_square.df.to_string());
        kv("chi_square.p_value", self.chi_square.p_value.to_string());
        kv("chi_square.degenerate", self.chi_square.degenerate.to_string());
        kv("chi_square.significant", self.chi_square.significant().to_string());
        for (i, g) in self.confusion.labels().iter().enumerate() {
            for (j, p) in self.confusion.labels().iter().enumerate() {
                kv(&format!("confusion.{g}.{p}"), self.confusion.counts()[i][j].to_string());
            }
        }
        out
    }

    /// Human-readable report.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "Evaluation ({}, n = {})", self.level, self.n);
        let _ = writeln!(out);
        let _ = writeln!(out, "{:<10} {:>9} {:>9} {:>9} {:>8}", "class", "precision", "recall", "f1", "support");
        for c in &self.per_class {
            let _ = writeln!(
                out,
                "{:<10} {:>9.4} {:>9.4} {:>9.4} {:>8}",
                c.label.as_str(),
                c.precision,
                c.recall,
                c.f1,
                c.support
            );
        }
        let _ = writeln!(out);
        let _ = writeln!(out, "macro-F1     {:.4}", self.macro_f1);
        let _ = writeln!(out, "weighted-F1  {:.4}", self.weighted_f1);
        let _ = writeln!(out, "accuracy     {:.4}", self.accuracy);
        let _ = writeln!(out);
        let _ = writeln!(out, "Pearson chi-square, gold vs predicted (test of independence)");
        let cs = &self.chi_square;
        let _ = writeln!(
            out,
            "  statistic = {:.4}, df = {}, p = {:.4e} -> {}{}",
            cs.statistic,
            cs.df,
            cs.p_value,
            if cs.significant() { "significant at p < 0.05" } else { "not significant at p < 0.05" },
            if cs.degenerate { " (empty rows/columns dropped)" } else { "" }
        );
        let _ = writeln!(out);
        let _ = writeln!(out, "Confusion matrix (rows = gold, columns = predicted)");
        let _ = write!(out, "{:<10}", "");
        for l in self.confusion.labels() {
            let _ = write!(out, " {:>9}", l.as_str());
        }
        let _ = writeln!(out);
        for (i, l) in self.confusion.labels().iter().enumerate() {
            let _ = write!(out, "{:<10}", l.as_str());
            for c in &self.confusion.counts()[i] {
                let _ = write!(out, " {c:>9}");
            }
            let _ = writeln!(out);
        }
        out
    }
}
