//! Run configuration: a flat `key = value` file plus `--key value` overrides.
//!
//! Keys may be written with `-` or `_`. Relative paths in the file resolve
//! against the file's directory; relative paths given on the command line
//! resolve against the working directory.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use arasent_core::selection::{Grouping, SelectionMode};
use arasent_core::{BundlePaths, ClassificationLevel, FeatureId, FeatureMask, Label, MarkerKind, TrainConfig};

use crate::error::{CliError, Stage};

const PATH_KEYS: &[&str] = &[
    "train",
    "test",
    "lexicon_dir",
    "scored_lexicon",
    "polar_a",
    "polar_b",
    "negation",
    "intensifier",
    "diminisher",
    "modal",
    "contrast",
    "positive_emoticons",
    "negative_emoticons",
    "output_dir",
    "model",
    "input",
];

const VALUE_KEYS: &[&str] = &[
    "level",
    "features",
    "test_fraction",
    "c",
    "tolerance",
    "max_epochs",
    "seed",
    "class_weights",
    "selection_mode",
    "grouping",
    "select_on",
    "dev_fraction",
    "assert_f1",
    "filter_to_level",
];

/// Where feature selection is scored.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SelectOn {
    /// A stratified dev split carved from the training data.
    Dev,
    /// The test split itself.
    Test,
}

impl SelectOn {
    pub fn protocol(self) -> &'static str {
        match self {
            SelectOn::Dev => "dev",
            SelectOn::Test => "paper",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub train: Option<PathBuf>,
    pub test: Option<PathBuf>,
    /// Held-out fraction of `train` used as the test split when no `test`
    /// corpus is given.
    pub test_fraction: Option<f64>,
    pub lexicons: BundlePaths,
    pub level: ClassificationLevel,
    /// Explicit feature subset; defaults to the level's mask.
    pub features: Option<FeatureMask>,
    pub train_config: TrainConfig,
    pub selection_mode: SelectionMode,
    pub grouping: Grouping,
    pub select_on: SelectOn,
    pub dev_fraction: f64,
    pub output_dir: PathBuf,
    pub model: Option<PathBuf>,
    pub input: Option<PathBuf>,
    pub assert_f1: Option<f64>,
    /// Drop test tweets whose label lies outside the level instead of failing.
    pub filter_to_level: bool,
    /// Whether `level` was set explicitly (and must then match a loaded model).
    pub level_given: bool,
}

fn canonical_key(raw: &str) -> String {
    raw.trim().trim_start_matches("--").replace('-', "_").to_ascii_lowercase()
}

fn config_error(message: impl Into<String>) -> CliError {
    CliError::new(Stage::Config, message)
}

/// Raw settings: key -> (value, directory relative paths resolve against).
#[derive(Debug, Default, Clone)]
pub struct Settings {
    values: BTreeMap<String, (String, PathBuf)>,
}

impl Settings {
    fn insert(&mut self, key: &str, value: &str, base: &Path, origin: &str) -> Result<(), CliError> {
        let key = canonical_key(key);
        if !PATH_KEYS.contains(&key.as_str()) && !VALUE_KEYS.contains(&key.as_str()) {
            return Err(config_error(format!("{origin}: unknown key {key:?}")));
        }
        let value = value.trim();
        let value = value.strip_prefix('"').and_then(|v| v.strip_suffix('"')).unwrap_or(value);
        self.values.insert(key, (value.to_string(), base.to_path_buf()));
        Ok(())
    }

    /// Parse `key = value` lines; `#` starts a comment line.
    pub fn parse_file_text(&mut self, text: &str, base: &Path, name: &str) -> Result<(), CliError> {
        let mut seen = std::collections::BTreeSet::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let origin = format!("{name}:{}", i + 1);
            let (key, value) =
                line.split_once('=').ok_or_else(|| config_error(format!("{origin}: expected `key = value`")))?;
            if !seen.insert(canonical_key(key)) {
                return Err(config_error(format!("{origin}: duplicate key {:?}", canonical_key(key))));
            }
            self.insert(key, value, base, &origin)?;
        }
        Ok(())
    }

    pub fn load_file(&mut self, path: &Path) -> Result<(), CliError> {
        let text = fs::read_to_string(path)
            .map_err(|e| config_error(format!("cannot read config {}: {e}", path.display())))?;
        let base = path.parent().map(Path::to_path_buf).unwrap_or_default();
        self.parse_file_text(&text, &base, &path.display().to_string())
    }

    /// Apply `--key value` or `--key=value` overrides.
    pub fn apply_overrides(&mut self, pairs: &[(String, String)]) -> Result<(), CliError> {
        let cwd = PathBuf::new();
        for (key, value) in pairs {
            self.insert(key, value, &cwd, "command line")?;
        }
        Ok(())
    }

    fn get(&self, key: &str) -> Option<&str> {
        self.values.get(key).map(|(v, _)| v.as_str())
    }

    fn path(&self, key: &str) -> Option<PathBuf> {
        self.values.get(key).map(|(v, base)| base.join(v))
    }

    fn parse<T: std::str::FromStr>(&self, key: &str) -> Result<Option<T>, CliError>
    where
        T::Err: std::fmt::Display,
    {
        self.get(key)
            .map(|v| v.parse::<T>().map_err(|e| config_error(format!("invalid value {v:?} for {key}: {e}"))))
            .transpose()
    }
}

/// A `--config` path and the remaining `--key value` pairs.
pub type SplitArgs = (Option<PathBuf>, Vec<(String, String)>);

/// Split command-line words into `--config` and key/value overrides.
pub fn split_args(args: &[String]) -> Result<SplitArgs, CliError> {
    let mut config = None;
    let mut pairs = Vec::new();
    let mut iter = args.iter();
    while let Some(arg) = iter.next() {
        let Some(flag) = arg.strip_prefix("--") else {
            return Err(config_error(format!("unexpected argument {arg:?} (expected --key value)")));
        };
        let (key, value) = match flag.split_once('=') {
            Some((k, v)) => (k.to_string(), v.to_string()),
            None => {
                let value = iter.next().ok_or_else(|| config_error(format!("missing value for --{flag}")))?;
                (flag.to_string(), value.clone())
            }
        };
        if canonical_key(&key) == "config" {
            config = Some(PathBuf::from(value));
        } else {
            pairs.push((key, value));
        }
    }
    Ok((config, pairs))
}

fn parse_features(text: &str) -> Result<FeatureMask, CliError> {
    let mut mask = FeatureMask::empty();
    for name in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let f: FeatureId = name.parse().map_err(|e| config_error(format!("features: {e}")))?;
        mask = mask.with(f);
    }
    if mask.is_empty() {
        return Err(config_error("features: empty feature list"));
    }
    Ok(mask)
}

fn parse_class_weights(text: &str) -> Result<BTreeMap<Label, f64>, CliError> {
    let mut weights = BTreeMap::new();
    for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (label, w) =
            item.split_once(':').ok_or_else(|| config_error(format!("class_weights: expected label:weight, got {item:?}")))?;
        let label: Label = label.trim().parse().map_err(|e| config_error(format!("class_weights: {e}")))?;
        let w: f64 = w.trim().parse().map_err(|_| config_error(format!("class_weights: invalid weight {w:?}")))?;
        weights.insert(label, w);
    }
    Ok(weights)
}

fn fraction(key: &str, v: f64) -> Result<f64, CliError> {
    if v > 0.0 && v < 1.0 {
        Ok(v)
    } else {
        Err(config_error(format!("{key} must lie strictly between 0 and 1, got {v}")))
    }
}

impl RunConfig {
    pub fn from_settings(s: &Settings) -> Result<Self, CliError> {
        let mut lexicons = match s.path("lexicon_dir") {
            Some(dir) => BundlePaths::in_dir(dir),
            None => BundlePaths {
                scored: PathBuf::new(),
                polar_a: PathBuf::new(),
                polar_b: PathBuf::new(),
                markers: BTreeMap::new(),
            },
        };
        if let Some(p) = s.path("scored_lexicon") {
            lexicons.scored = p;
        }
        if let Some(p) = s.path("polar_a") {
            lexicons.polar_a = p;
        }
        if let Some(p) = s.path("polar_b") {
            lexicons.polar_b = p;
        }
        for kind in MarkerKind::ALL {
            if let Some(p) = s.path(kind.as_str()) {
                lexicons.markers.insert(kind, p);
            }
        }

        let defaults = TrainConfig::default();
        let train_config = TrainConfig {
            c: s.parse("c")?.unwrap_or(defaults.c),
            tolerance: s.parse("tolerance")?.unwrap_or(defaults.tolerance),
            max_epochs: s.parse("max_epochs")?.unwrap_or(defaults.max_epochs),
            seed: s.parse("seed")?.unwrap_or(defaults.seed),
            class_weights: s.get("class_weights").map(parse_class_weights).transpose()?.unwrap_or_default(),
        };
        train_config.validate().map_err(|e| config_error(e.to_string()))?;

        let select_on = match s.get("select_on").map(|v| v.trim().to_ascii_lowercase()) {
            None => SelectOn::Dev,
            Some(v) if v == "dev" => SelectOn::Dev,
            Some(v) if v == "test" => SelectOn::Test,
            Some(v) => return Err(config_error(format!("select_on must be dev or test, got {v:?}"))),
        };

        let level: Option<ClassificationLevel> = s.parse("level")?;
        Ok(Self {
            train: s.path("train"),
            test: s.path("test"),
            test_fraction: s.parse("test_fraction")?.map(|v| fraction("test_fraction", v)).transpose()?,
            lexicons,
            level: level.unwrap_or(ClassificationLevel::FourWay),
            level_given: level.is_some(),
            features: s.get("features").map(parse_features).transpose()?,
            train_config,
            selection_mode: s.parse("selection_mode")?.unwrap_or(SelectionMode::Greedy),
            grouping: s.parse("grouping")?.unwrap_or_default(),
            select_on,
            dev_fraction: fraction("dev_fraction", s.parse("dev_fraction")?.unwrap_or(0.1))?,
            output_dir: s.path("output_dir").unwrap_or_else(|| PathBuf::from("out")),
            model: s.path("model"),
            input: s.path("input"),
            assert_f1: s.parse("assert_f1")?,
            filter_to_level: s.parse("filter_to_level")?.unwrap_or(false),
        })
    }

    /// Load an optional config file and apply overrides on top.
    pub fn load(config: Option<&Path>, overrides: &[(String, String)]) -> Result<Self, CliError> {
        let mut settings = Settings::default();
        if let Some(path) = config {
            settings.load_file(path)?;
        }
        settings.apply_overrides(overrides)?;
        Self::from_settings(&settings)
    }

    pub fn mask(&self) -> FeatureMask {
        self.features.unwrap_or_else(|| arasent_core::mask_for_level(self.level))
    }

    pub fn model_path(&self) -> PathBuf {
        self.model.clone().unwrap_or_else(|| self.output_dir.join("model.json"))
    }

    /// Check that every lexicon file is configured and exists.
    pub fn require_lexicons(&self) -> Result<(), CliError> {
        let named = [
            ("scored_lexicon", &self.lexicons.scored),
            ("polar_a", &self.lexicons.polar_a),
            ("polar_b", &self.lexicons.polar_b),
        ];
        for (key, path) in named {
            require_file(key, path)?;
        }
        for kind in MarkerKind::ALL {
            match self.lexicons.markers.get(&kind) {
                Some(p) => require_file(kind.as_str(), p)?,
                None => return Err(config_error(format!("no path configured for {}", kind.as_str()))),
            }
        }
        Ok(())
    }

    /// Check the training corpus and, when configured, the test corpus.
    pub fn require_corpora(&self, need_test: bool) -> Result<(), CliError> {
        let train = self.train.as_ref().ok_or_else(|| config_error("no train corpus configured"))?;
        require_file("train", train)?;
        match (&self.test, self.test_fraction) {
            (Some(t), _) => require_file("test", t),
            (None, Some(_)) => Ok(()),
            (None, None) if need_test => Err(config_error("no test corpus configured (set test or test_fraction)")),
            (None, None) => Ok(()),
        }
    }
}

fn require_file(key: &str, path: &Path) -> Result<(), CliError> {
    if path.as_os_str().is_empty() {
        return Err(config_error(format!("no path configured for {key}")));
    }
    if !path.is_file() {
        return Err(config_error(format!("{key}: file not found: {}", path.display())));
    }
    Ok(())
}
