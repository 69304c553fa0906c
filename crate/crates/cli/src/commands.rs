//! The five subcommands. Each returns the process exit code or a staged error.

use std::fmt::Write as _;
use std::fs;
use std::io::{BufRead, Write};
use std::path::Path;

use arasent_core::corpus::stratified_split;
use arasent_core::fsutil::write_atomic;
use arasent_core::selection::{groups_for, run_selection, SelectionData};
use arasent_core::svm::write_model;
use arasent_core::{
    evaluate, filter_by_level, load_bundle, load_corpus, load_model, read_corpus, train_multiclass, CorpusError,
    Dataset, LexiconBundle, MulticlassModel,
};

use crate::config::{RunConfig, SelectOn};
use crate::error::{CliError, Stage};

pub const EXIT_OK: i32 = 0;
pub const EXIT_BELOW_THRESHOLD: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir)
            .map_err(|e| CliError::new(Stage::Write, format!("cannot create {}: {e}", dir.display())))?;
    }
    write_atomic(path, contents.as_bytes())
        .map_err(|e| CliError::new(Stage::Write, format!("cannot write {}: {e}", path.display())))
}

fn emit(out: &mut dyn Write, text: &str) -> Result<(), CliError> {
    out.write_all(text.as_bytes()).map_err(CliError::at(Stage::Write))
}

fn bundle(cfg: &RunConfig) -> Result<LexiconBundle, CliError> {
    cfg.require_lexicons()?;
    load_bundle(&cfg.lexicons).map_err(CliError::at(Stage::Load))
}

fn load_labeled(path: &Path) -> Result<Dataset, CliError> {
    load_corpus(path, true).map_err(|e| CliError::new(Stage::Load, format!("{}: {e}", path.display())))
}

/// Training and test partitions at the configured level. With no `test`
/// corpus the test side is a seeded stratified split of `train`.
fn partitions(cfg: &RunConfig, need_test: bool) -> Result<(Dataset, Option<Dataset>), CliError> {
    cfg.require_corpora(need_test)?;
    let train_path = cfg.train.as_ref().expect("checked by require_corpora");
    let train = filter_by_level(&load_labeled(train_path)?, cfg.level);
    if train.is_empty() {
        return Err(CliError::new(Stage::Load, format!("{}: no tweets at level {}", train_path.display(), cfg.level)));
    }
    match (&cfg.test, cfg.test_fraction) {
        (Some(path), _) => Ok((train, Some(load_labeled(path)?))),
        (None, Some(fraction)) => {
            let (tr, te) = stratified_split(&train, fraction, cfg.train_config.seed).map_err(CliError::at(Stage::Load))?;
            Ok((tr, Some(te)))
        }
        (None, None) => Ok((train, None)),
    }
}

fn train_summary(train: &Dataset, model: &MulticlassModel) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "level = {}", model.level);
    let _ = writeln!(out, "train_size = {}", train.len());
    for (label, n) in train.class_counts() {
        let _ = writeln!(out, "class_count.{label} = {n}");
    }
    let names: Vec<&str> = model.mask.iter().map(|f| f.name()).collect();
    let _ = writeln!(out, "mask_size = {}", model.mask.len());
    let _ = writeln!(out, "mask = {}", names.join(","));
    let _ = writeln!(out, "pairwise_models = {}", model.pairwise.len());
    for m in &model.pairwise {
        let _ = writeln!(out, "epochs.{}-{} = {}", m.positive_label, m.negative_label, m.epochs);
    }
    out
}

pub fn cmd_train(cfg: &RunConfig, stdout: &mut dyn Write) -> Result<i32, CliError> {
    let bundle = bundle(cfg)?;
    let (train, _) = partitions(cfg, false)?;
    let model = train_multiclass(&train, &bundle, cfg.level, cfg.mask(), &cfg.train_config)
        .map_err(CliError::at(Stage::Train))?;
    let summary = train_summary(&train, &model);
    write_file(&cfg.model_path(), &write_model(&model))?;
    write_file(&cfg.output_dir.join("train_summary.txt"), &summary)?;
    emit(stdout, &summary)?;
    Ok(EXIT_OK)
}

pub fn cmd_predict(cfg: &RunConfig, stdin: &mut dyn BufRead, stdout: &mut dyn Write) -> Result<i32, CliError> {
    let model_path = cfg.model.as_ref().ok_or_else(|| CliError::new(Stage::Config, "predict needs --model"))?;
    let bundle = bundle(cfg)?;
    let model = load_model(model_path).map_err(CliError::at(Stage::Load))?;
    let input = match cfg.input.as_deref() {
        None => return Err(CliError::new(Stage::Config, "predict needs --input (use - for standard input)")),
        Some(p) if p == Path::new("-") => read_corpus(stdin, false),
        Some(p) => {
            let file = fs::File::open(p)
                .map_err(|e| CliError::new(Stage::Load, format!("cannot open {}: {e}", p.display())))?;
            read_corpus(std::io::BufReader::new(file), false)
        }
    };
    let input = match input {
        Ok(d) => d,
        Err(CorpusError::EmptyCorpus) => return Ok(EXIT_OK),
        Err(e) => return Err(CliError::new(Stage::Load, format!("input: {e}"))),
    };
    let labels = model.predict_dataset(&input, &bundle).map_err(CliError::at(Stage::Predict))?;
    let mut out = String::new();
    for (t, label) in input.tweets().iter().zip(labels) {
        let _ = writeln!(out, "{}\t{label}", t.id);
    }
    emit(stdout, &out)?;
    Ok(EXIT_OK)
}

pub fn cmd_evaluate(cfg: &RunConfig, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<i32, CliError> {
    let model_path = cfg.model_path();
    let model = load_model(&model_path)
        .map_err(|e| CliError::new(Stage::Load, format!("{}: {e}", model_path.display())))?;
    if cfg.level_given && cfg.level != model.level {
        return Err(CliError::new(
            Stage::Evaluate,
            format!("LevelMismatch: model is {}, configuration requests {}", model.level, cfg.level),
        ));
    }
    // the split must be reproduced at the model's level
    let cfg = RunConfig { level: model.level, ..cfg.clone() };
    let bundle = bundle(&cfg)?;
    let (_, test) = partitions(&cfg, true)?;
    let mut test = test.expect("need_test");
    if let Some(t) = test.tweets().iter().find(|t| t.label.is_some_and(|l| !model.level.contains(l))) {
        if !cfg.filter_to_level {
            return Err(CliError::new(
                Stage::Evaluate,
                format!(
                    "LevelMismatch: test tweet {:?} is labeled {} which the {} model cannot predict",
                    t.id,
                    t.label.expect("checked"),
                    model.level
                ),
            ));
        }
        test = filter_by_level(&test, model.level);
    }
    let gold = test.labels().map_err(CliError::at(Stage::Evaluate))?;
    let pred = model.predict_dataset(&test, &bundle).map_err(CliError::at(Stage::Predict))?;
    let report = evaluate(&gold, &pred, model.level).map_err(CliError::at(Stage::Evaluate))?;
    let text = report.to_text();
    write_file(&cfg.output_dir.join("eval_report.txt"), &text)?;
    write_file(&cfg.output_dir.join("eval_report.kv"), &report.to_key_values())?;
    emit(stdout, &text)?;
    if let Some(threshold) = cfg.assert_f1 {
        if report.macro_f1 < threshold {
            let _ = writeln!(stderr, "macro-F1 {:.4} is below the required {threshold}", report.macro_f1);
            return Ok(EXIT_BELOW_THRESHOLD);
        }
    }
    Ok(EXIT_OK)
}

pub fn cmd_ablate(cfg: &RunConfig, stdout: &mut dyn Write) -> Result<i32, CliError> {
    let bundle = bundle(cfg)?;
    let mask = cfg.mask();
    bundle.check_mask(&mask).map_err(CliError::at(Stage::Config))?;
    let (train, test) = partitions(cfg, cfg.select_on == SelectOn::Test)?;
    let data = match cfg.select_on {
        SelectOn::Dev => {
            let (fit, dev) = stratified_split(&train, cfg.dev_fraction, cfg.train_config.seed)
                .map_err(|e| CliError::new(Stage::Select, format!("dev split: {e}")))?;
            SelectionData::prepare(&fit, &dev, &bundle, cfg.level)
        }
        SelectOn::Test => {
            let test = test.expect("need_test");
            if let Some(t) = test.tweets().iter().find(|t| t.label.is_some_and(|l| !cfg.level.contains(l))) {
                if !cfg.filter_to_level {
                    return Err(CliError::new(
                        Stage::Select,
                        format!("LevelMismatch: test tweet {:?} lies outside the {} label set", t.id, cfg.level),
                    ));
                }
            }
            SelectionData::prepare(&train, &filter_by_level(&test, cfg.level), &bundle, cfg.level)
        }
    }
    .map_err(CliError::at(Stage::Select))?;

    let groups = groups_for(mask, cfg.grouping);
    let trace = run_selection(cfg.selection_mode, &data, &groups, &cfg.train_config).map_err(CliError::at(Stage::Select))?;
    let model = train_multiclass(&train, &bundle, cfg.level, trace.final_mask, &cfg.train_config)
        .map_err(CliError::at(Stage::Train))?;

    let names: Vec<&str> = trace.final_mask.iter().map(|f| f.name()).collect();
    let mut summary = String::new();
    let _ = writeln!(summary, "protocol = {}", cfg.select_on.protocol());
    let _ = writeln!(summary, "level = {}", cfg.level);
    let _ = writeln!(summary, "mode = {}", cfg.selection_mode);
    let _ = writeln!(summary, "groups = {}", groups.len());
    let _ = writeln!(summary, "rounds = {}", trace.rounds.len());
    let _ = writeln!(summary, "final_mask = {}", names.join(","));
    let _ = writeln!(summary, "final_metric = {}", trace.final_metric);

    let dir = &cfg.output_dir;
    write_file(&dir.join("ablation.csv"), &trace.to_csv(cfg.select_on.protocol()))?;
    write_file(&dir.join("ablation_plot.csv"), &trace.to_plot_csv())?;
    write_file(&dir.join("ablation_summary.txt"), &summary)?;
    write_file(&dir.join("ablation_model.json"), &write_model(&model))?;
    emit(stdout, &summary)?;
    Ok(EXIT_OK)
}

/// Render a CSV file as an aligned text table. Leading `#` lines are
/// printed above the table.
pub fn render_csv(text: &str) -> Result<String, CliError> {
    let mut out = String::new();
    for line in text.lines().take_while(|l| l.starts_with('#')) {
        let _ = writeln!(out, "{}", line.trim_start_matches('#').trim());
    }
    let mut reader = csv::ReaderBuilder::new().comment(Some(b'#')).from_reader(text.as_bytes());
    let header: Vec<String> =
        reader.headers().map_err(CliError::at(Stage::Report))?.iter().map(str::to_string).collect();
    let mut rows = vec![header];
    for record in reader.records() {
        let record = record.map_err(CliError::at(Stage::Report))?;
        rows.push(record.iter().map(format_cell).collect());
    }
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> =
        (0..cols).map(|c| rows.iter().filter_map(|r| r.get(c)).map(|s| s.chars().count()).max().unwrap_or(0)).collect();
    for (i, row) in rows.iter().enumerate() {
        let cells: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(cell, &w)| {
                let pad = w - cell.chars().count();
                if cell.parse::<f64>().is_ok() {
                    format!("{}{cell}", " ".repeat(pad))
                } else {
                    format!("{cell}{}", " ".repeat(pad))
                }
            })
            .collect();
        let _ = writeln!(out, "{}", cells.join("  ").trim_end());
        if i == 0 {
            let rule: Vec<String> = widths.iter().map(|&w| "-".repeat(w)).collect();
            let _ = writeln!(out, "{}", rule.join("  "));
        }
    }
    Ok(out)
}

/// Floats with long expansions are shown to four decimals.
fn format_cell(cell: &str) -> String {
    match cell.parse::<f64>() {
        Ok(v) if cell.contains('.') && cell.len() > 8 => format!("{v:.4}"),
        _ => cell.to_string(),
    }
}

pub fn cmd_report(path: &Path, stdout: &mut dyn Write) -> Result<i32, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::new(Stage::Load, format!("cannot read {}: {e}", path.display())))?;
    emit(stdout, &render_csv(&text)?)?;
    Ok(EXIT_OK)
}
