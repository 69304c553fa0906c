//! Model files.
//!
//! A model is stored as a JSON object whose first key is `version`:
//!
//! ```json
//! {
//!   "version": "1",
//!   "level": "two-way",
//!   "mask": ["hasPositiveWordAraSenti", ...],
//!   "scaler": {"mask": [...], "bounds": [{"feature": "TweetScore", "min": -2.0, "max": 6.0}, ...]},
//!   "pairwise": [{"positive_label": "positive", "negative_label": "negative",
//!                 "cost": 1.0, "bias": 0.1, "weights": [...], "epochs": 12}]
//! }
//! ```
//!
//! Floats are written in shortest round-trip form and parsed exactly, so a
//! loaded model predicts bit-identically.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::{BinaryLinearModel, MulticlassModel, SvmError};
use crate::corpus::ClassificationLevel;
use crate::features::{FeatureMask, Scaler};
use crate::fsutil::write_atomic;

pub const MODEL_FORMAT_VERSION: &str = "1";

#[derive(Serialize)]
struct ModelFileRef<'a> {
    version: &'static str,
    level: ClassificationLevel,
    mask: FeatureMask,
    scaler: &'a Scaler,
    pairwise: &'a [BinaryLinearModel],
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ModelFile {
    #[allow(dead_code)]
    version: String,
    level: ClassificationLevel,
    mask: FeatureMask,
    scaler: Scaler,
    pairwise: Vec<BinaryLinearModel>,
}

/// Serialize a model to its JSON text.
pub fn write_model(m: &MulticlassModel) -> String {
    let file = ModelFileRef {
        version: MODEL_FORMAT_VERSION,
        level: m.level,
        mask: m.mask,
        scaler: &m.scaler,
        pairwise: &m.pairwise,
    };
    let mut text = serde_json::to_string_pretty(&file).expect("model serialization cannot fail");
    text.push('\n');
    text
}

/// Parse and validate model JSON text.
pub fn read_model(text: &str) -> Result<MulticlassModel, SvmError> {
    let corrupt = |msg: String| SvmError::CorruptModel(msg);
    let value: serde_json::Value = serde_json::from_str(text).map_err(|e| corrupt(e.to_string()))?;
    let version = value
        .get("version")
        .ok_or_else(|| corrupt("missing version field".into()))?;
    let version = match version {
        serde_json::Value::String(s) => s.clone(),
        other => other.to_string(),
    };
    if version != MODEL_FORMAT_VERSION {
        return Err(SvmError::UnsupportedVersion(version));
    }
    let file: ModelFile = serde_json::from_value(value).map_err(|e| corrupt(e.to_string()))?;
    let model = MulticlassModel { level: file.level, mask: file.mask, scaler: file.scaler, pairwise: file.pairwise };
    check_consistency(&model).map_err(corrupt)?;
    Ok(model)
}

fn check_consistency(m: &MulticlassModel) -> Result<(), String> {
    if m.mask.is_empty() {
        return Err("empty feature mask".into());
    }
    if m.scaler.mask != m.mask {
        return Err("scaler mask differs from model mask".into());
    }
    let expected_bounds: Vec<_> = m.mask.iter().filter(|f| f.is_numeric()).collect();
    let bounds: Vec<_> = m.scaler.bounds.iter().map(|b| b.feature).collect();
    if bounds != expected_bounds {
        return Err("scaler bounds do not match the numeric features of the mask".into());
    }
    if m.scaler.bounds.iter().any(|b| !(b.min.is_finite() && b.max.is_finite() && b.min <= b.max)) {
        return Err("invalid scaler bounds".into());
    }
    let k = m.level.num_classes();
    if m.pairwise.len() != k * (k - 1) / 2 {
        return Err(format!("expected {} pairwise models, found {}", k * (k - 1) / 2, m.pairwise.len()));
    }
    let labels = m.level.labels();
    let mut expected_pairs = Vec::new();
    for (i, &a) in labels.iter().enumerate() {
        for &b in &labels[i + 1..] {
            expected_pairs.push((a, b));
        }
    }
    for (pm, (a, b)) in m.pairwise.iter().zip(expected_pairs) {
        if (pm.positive_label, pm.negative_label) != (a, b) {
            return Err(format!("pairwise model for ({a}, {b}) out of order"));
        }
        if pm.weights.len() != m.mask.len() {
            return Err(format!("pairwise model ({a}, {b}) has dimension {}, mask has {}", pm.weights.len(), m.mask.len()));
        }
        if !pm.bias.is_finite() || pm.weights.iter().any(|w| !w.is_finite()) {
            return Err("non-finite model parameters".into());
        }
    }
    Ok(())
}

pub fn save_model(m: &MulticlassModel, path: impl AsRef<Path>) -> Result<(), SvmError> {
    let path = path.as_ref();
    write_atomic(path, write_model(m).as_bytes())
        .map_err(|e| SvmError::Io { path: path.display().to_string(), message: e.to_string() })
}

pub fn load_model(path: impl AsRef<Path>) -> Result<MulticlassModel, SvmError> {
    let path = path.as_ref();
    let text = fs::read_to_string(path)
        .map_err(|e| SvmError::Io { path: path.display().to_string(), message: e.to_string() })?;
    read_model(&text)
}
