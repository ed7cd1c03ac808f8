//! Scoring the engine against gold syllabification datasets.
//!
//! Dataset rows are tab-separated: word, hyphen-marked syllables,
//! `;`-separated single-break hyphenation variants (may be empty) and the
//! syllable count. Lines starting with `#` are comments.

use std::collections::BTreeSet;
use std::fmt;
use std::fs::File;
use std::io::{self, BufRead, BufReader};
use std::path::Path;

use serde::Serialize;
use thiserror::Error;

use crate::alphabet::{detect_script, normalize_text, Script};
use crate::hyphenator::hyphenate;
use crate::lexicon::ExceptionLexicon;
use crate::syllabifier::{syllabify_text, TextOptions};
use crate::tokenizer::ScriptChoice;

#[derive(Debug, Error)]
pub enum EvalError {
    #[error("cannot read dataset: {0}")]
    Io(#[from] io::Error),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("line {line}: count {stated} but {actual} syllables given")]
    CountMismatch {
        line: usize,
        stated: usize,
        actual: usize,
    },
    #[error("line {line}: syllables {syllables:?} do not spell {word:?}")]
    ConcatMismatch {
        line: usize,
        word: String,
        syllables: String,
    },
}

impl EvalError {
    pub fn line(&self) -> Option<usize> {
        match self {
            EvalError::Io(_) => None,
            EvalError::Parse { line, .. }
            | EvalError::CountMismatch { line, .. }
            | EvalError::ConcatMismatch { line, .. } => Some(*line),
        }
    }
}

/// One gold row. Texts are stored normalized.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvalRecord {
    pub word: String,
    pub gold_syllables: Vec<String>,
    pub gold_hyphenations: BTreeSet<String>,
    pub gold_count: usize,
    pub script: Script,
}

impl EvalRecord {
    /// Character offsets of the internal gold boundaries.
    pub fn gold_boundaries(&self) -> Vec<usize> {
        char_boundaries(&self.gold_syllables)
    }
}

fn char_boundaries(syllables: &[String]) -> Vec<usize> {
    let mut offset = 0;
    let mut out = Vec::with_capacity(syllables.len().saturating_sub(1));
    for s in syllables.iter().take(syllables.len().saturating_sub(1)) {
        offset += s.chars().count();
        out.push(offset);
    }
    out
}

/// Parses one data line (not a comment or blank line).
pub fn parse_record(line: &str, line_no: usize) -> Result<EvalRecord, EvalError> {
    let fields: Vec<&str> = line.split('\t').collect();
    let parse_err = |message: String| EvalError::Parse {
        line: line_no,
        message,
    };
    if fields.len() != 4 {
        return Err(parse_err(format!(
            "expected 4 tab-separated columns, found {}",
            fields.len()
        )));
    }
    let word = normalize_text(fields[0].trim());
    if word.is_empty() {
        return Err(parse_err("empty word".into()));
    }
    let syllable_cell = normalize_text(fields[1].trim());
    let gold_syllables: Vec<String> = syllable_cell.split('-').map(str::to_string).collect();
    if gold_syllables.iter().any(String::is_empty) || gold_syllables.concat() != word {
        return Err(EvalError::ConcatMismatch {
            line: line_no,
            word,
            syllables: syllable_cell,
        });
    }
    let gold_count: usize = fields[3].trim().parse().map_err(|_| {
        parse_err(format!(
            "count {:?} is not a non-negative integer",
            fields[3]
        ))
    })?;
    if gold_count == 0 || gold_count != gold_syllables.len() {
        return Err(EvalError::CountMismatch {
            line: line_no,
            stated: gold_count,
            actual: gold_syllables.len(),
        });
    }
    let script = detect_script(&word)
        .script()
        .ok_or_else(|| parse_err(format!("{word:?} mixes scripts")))?;
    let gold_hyphenations = fields[2]
        .split(';')
        .map(|v| normalize_text(v.trim()))
        .filter(|v| !v.is_empty())
        .collect();
    Ok(EvalRecord {
        word,
        gold_syllables,
        gold_hyphenations,
        gold_count,
        script,
    })
}

/// Records plus the rejected lines (empty in strict mode, which aborts instead).
#[derive(Debug, Default)]
pub struct Dataset {
    pub records: Vec<EvalRecord>,
    pub rejected: Vec<EvalError>,
}

pub fn load_dataset(path: impl AsRef<Path>, strict: bool) -> Result<Dataset, EvalError> {
    read_dataset(BufReader::new(File::open(path)?), strict)
}

pub fn read_dataset(reader: impl BufRead, strict: bool) -> Result<Dataset, EvalError> {
    let mut dataset = Dataset::default();
    for (index, line) in reader.lines().enumerate() {
        let line = line?;
        let line = line.trim_end_matches('\r');
        if line.trim().is_empty() || line.starts_with('#') {
            continue;
        }
        match parse_record(line, index + 1) {
            Ok(record) => dataset.records.push(record),
            Err(e) if strict => return Err(e),
            Err(e) => {
                log::warn!("skipping dataset {e}");
                dataset.rejected.push(e);
            }
        }
    }
    Ok(dataset)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub word: String,
    pub gold: String,
    pub predicted: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EvalReport {
    pub n_records: usize,
    pub word_accuracy: f64,
    pub boundary_precision: f64,
    pub boundary_recall: f64,
    pub boundary_f1: f64,
    pub count_accuracy: f64,
    pub count_micro_f1: f64,
    pub hyphenation_exact_match: f64,
    pub error_listing: Vec<Mismatch>,
}

struct Prediction {
    syllables: Vec<String>,
    hyphenations: BTreeSet<String>,
}

fn predict(record: &EvalRecord, lexicon: Option<&ExceptionLexicon>) -> Prediction {
    let options = TextOptions {
        script: match record.script {
            Script::Latin => ScriptChoice::Latin,
            Script::Cyrillic => ScriptChoice::Cyrillic,
        },
        lexicon,
        ..TextOptions::default()
    };
    let analysis = syllabify_text(&record.word, &options);
    match analysis.tokens.as_slice() {
        [only] if only.division.is_some() => {
            let division = only.division.as_ref().expect("checked");
            Prediction {
                syllables: division.syllable_texts(),
                hyphenations: hyphenate(division).variants.into_iter().collect(),
            }
        }
        // not a single syllabifiable word: the whole text is one unit
        _ => Prediction {
            syllables: vec![record.word.clone()],
            hyphenations: BTreeSet::new(),
        },
    }
}

fn ratio(num: usize, den: usize) -> f64 {
    if den == 0 {
        0.0
    } else {
        num as f64 / den as f64
    }
}

fn harmonic(p: f64, r: f64) -> f64 {
    if p + r == 0.0 {
        0.0
    } else {
        2.0 * p * r / (p + r)
    }
}

#[derive(Default)]
struct Tally {
    exact: usize,
    boundary_tp: usize,
    boundary_fp: usize,
    boundary_fn: usize,
    count_correct: usize,
    hyphenation_exact: usize,
    errors: Vec<Mismatch>,
}

pub fn evaluate(records: &[EvalRecord], lexicon: Option<&ExceptionLexicon>) -> EvalReport {
    let mut t = Tally::default();
    for record in records {
        let predicted = predict(record, lexicon);
        let gold_b: BTreeSet<usize> = record.gold_boundaries().into_iter().collect();
        let pred_b: BTreeSet<usize> = char_boundaries(&predicted.syllables).into_iter().collect();
        t.boundary_tp += gold_b.intersection(&pred_b).count();
        t.boundary_fp += pred_b.difference(&gold_b).count();
        t.boundary_fn += gold_b.difference(&pred_b).count();
        if predicted.syllables.len() == record.gold_count {
            t.count_correct += 1;
        }
        if predicted.hyphenations == record.gold_hyphenations {
            t.hyphenation_exact += 1;
        }
        if predicted.syllables == record.gold_syllables {
            t.exact += 1;
        } else {
            t.errors.push(Mismatch {
                word: record.word.clone(),
                gold: record.gold_syllables.join("-"),
                predicted: predicted.syllables.join("-"),
            });
        }
    }
    let n = records.len();
    // with nothing predicted (or nothing to find) the score is vacuously
    // perfect, so a fully correct monosyllabic set still scores 1.0
    let precision = if t.boundary_tp + t.boundary_fp == 0 {
        if n == 0 {
            0.0
        } else {
            1.0
        }
    } else {
        ratio(t.boundary_tp, t.boundary_tp + t.boundary_fp)
    };
    let recall = if t.boundary_tp + t.boundary_fn == 0 {
        if n == 0 {
            0.0
        } else {
            1.0
        }
    } else {
        ratio(t.boundary_tp, t.boundary_tp + t.boundary_fn)
    };
    EvalReport {
        n_records: n,
        word_accuracy: ratio(t.exact, n),
        boundary_precision: precision,
        boundary_recall: recall,
        boundary_f1: harmonic(precision, recall),
        count_accuracy: ratio(t.count_correct, n),
        count_micro_f1: count_micro_f1(t.count_correct, n),
        hyphenation_exact_match: ratio(t.hyphenation_exact, n),
        error_listing: t.errors,
    }
}

/// Micro-averaged F1 over count labels. Each wrong prediction is one false
/// positive (for the predicted label) and one false negative (for the gold
/// label), so the pooled scores reduce to accuracy.
fn count_micro_f1(correct: usize, n: usize) -> f64 {
    let tp = correct;
    let fp = n - correct;
    let fn_ = n - correct;
    let precision = ratio(tp, tp + fp);
    let recall = ratio(tp, tp + fn_);
    harmonic(precision, recall)
}

pub fn diff_report(records: &[EvalRecord], lexicon: Option<&ExceptionLexicon>) -> Vec<Mismatch> {
    evaluate(records, lexicon).error_listing
}

/// Gold rows produced by the engine itself, in dataset line format.
pub fn generate_gold<'a>(
    words: impl IntoIterator<Item = &'a str>,
    lexicon: Option<&ExceptionLexicon>,
) -> Vec<String> {
    let options = TextOptions {
        lexicon,
        ..TextOptions::default()
    };
    words
        .into_iter()
        .filter_map(|w| {
            let analysis = syllabify_text(w, &options);
            let [only] = analysis.tokens.as_slice() else {
                return None;
            };
            let division = only.division.as_ref()?;
            Some(format!(
                "{}\t{}\t{}\t{}",
                division.text(),
                division.render("-"),
                hyphenate(division).variants.join(";"),
                division.len()
            ))
        })
        .collect()
}

impl fmt::Display for EvalReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "records                  {}", self.n_records)?;
        writeln!(f, "word accuracy            {:.4}", self.word_accuracy)?;
        writeln!(f, "boundary precision       {:.4}", self.boundary_precision)?;
        writeln!(f, "boundary recall          {:.4}", self.boundary_recall)?;
        writeln!(f, "boundary F1              {:.4}", self.boundary_f1)?;
        writeln!(f, "count accuracy           {:.4}", self.count_accuracy)?;
        writeln!(f, "count micro-F1           {:.4}", self.count_micro_f1)?;
        writeln!(
            f,
            "hyphenation exact match  {:.4}",
            self.hyphenation_exact_match
        )?;
        if !self.error_listing.is_empty() {
            writeln!(f)?;
            writeln!(f, "word\tgold\tpredicted")?;
            for m in &self.error_listing {
                writeln!(f, "{}\t{}\t{}", m.word, m.gold, m.predicted)?;
            }
        }
        Ok(())
    }
}
