//! Exact-match exception lexicon for words whose dictionary division does not
//! follow the native rules (mostly loanwords with heavy consonant clusters).
//!
//! File format: one `word<TAB>syl-la-bles` entry per line, `#` comments and
//! blank lines ignored.

use std::collections::HashMap;
use std::fs::File;
use std::io::{self, BufRead, BufReader};
use std::path::Path;

use thiserror::Error;

use crate::alphabet::{detect_script, normalize_text, GraphemeInventory};
use crate::tokenizer::Word;

#[derive(Debug, Error)]
pub enum LexiconError {
    #[error("cannot read lexicon: {0}")]
    Io(#[from] io::Error),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("line {line}: division {division:?} does not spell {word:?}")]
    ConcatMismatch {
        line: usize,
        word: String,
        division: String,
    },
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ExceptionLexicon {
    /// Lowercase normalized word -> character offsets where syllables 2..n start.
    entries: HashMap<String, Vec<usize>>,
}

impl ExceptionLexicon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self, LexiconError> {
        Self::from_reader(BufReader::new(File::open(path)?))
    }

    pub fn from_reader(reader: impl BufRead) -> Result<Self, LexiconError> {
        let mut lexicon = Self::new();
        for (index, line) in reader.lines().enumerate() {
            let line_no = index + 1;
            let line = line?;
            let line = line.trim_end_matches('\r');
            if line.trim().is_empty() || line.starts_with('#') {
                continue;
            }
            let mut fields = line.split('\t');
            let (word, division) = match (fields.next(), fields.next(), fields.next()) {
                (Some(w), Some(d), None) if !w.trim().is_empty() && !d.trim().is_empty() => {
                    (w.trim(), d.trim())
                }
                _ => {
                    return Err(LexiconError::Parse {
                        line: line_no,
                        message: "expected `word<TAB>syl-la-bles`".into(),
                    })
                }
            };
            let key = lexicon
                .insert(word, division)
                .map_err(|e| e.at_line(line_no))?;
            if let Some(key) = key {
                log::warn!("lexicon line {line_no}: duplicate entry {key:?} overrides earlier one");
            }
        }
        Ok(lexicon)
    }

    /// Adds or replaces an entry. Returns the key when it replaced one.
    pub fn insert(&mut self, word: &str, division: &str) -> Result<Option<String>, LexiconError> {
        let key = normalize_text(word).to_lowercase();
        let division = normalize_text(division).to_lowercase();
        let parts: Vec<&str> = division.split('-').collect();
        if parts.iter().any(|p| p.is_empty()) || parts.concat() != key {
            return Err(LexiconError::ConcatMismatch {
                line: 0,
                word: word.to_string(),
                division: division.to_string(),
            });
        }
        let script = detect_script(&key)
            .script()
            .ok_or_else(|| LexiconError::Parse {
                line: 0,
                message: format!("{word:?} is not written in a single script"),
            })?;
        let graphemes = GraphemeInventory::STANDARD
            .segment(&key, script)
            .map_err(|e| LexiconError::Parse {
                line: 0,
                message: e.to_string(),
            })?;
        let mut letter_starts = Vec::with_capacity(graphemes.len());
        let mut offset = 0;
        for g in &graphemes {
            letter_starts.push(offset);
            offset += g.text().chars().count();
        }
        let mut boundaries = Vec::with_capacity(parts.len() - 1);
        let mut offset = 0;
        for part in &parts[..parts.len() - 1] {
            offset += part.chars().count();
            if !letter_starts.contains(&offset) {
                return Err(LexiconError::Parse {
                    line: 0,
                    message: format!("division {division:?} splits a letter"),
                });
            }
            boundaries.push(offset);
        }
        let replaced = self.entries.insert(key.clone(), boundaries).is_some();
        Ok(replaced.then_some(key))
    }

    /// Grapheme boundary indices for `word`, if it has an entry.
    pub fn lookup(&self, word: &Word) -> Option<Vec<usize>> {
        let key = word.text().to_lowercase();
        let offsets = self.entries.get(&key)?;
        let mut starts = HashMap::new();
        let mut offset = 0;
        for (i, g) in word.graphemes().iter().enumerate() {
            starts.insert(offset, i);
            offset += g.text().to_lowercase().chars().count();
        }
        offsets.iter().map(|o| starts.get(o).copied()).collect()
    }

    pub fn contains(&self, word: &str) -> bool {
        self.entries
            .contains_key(&normalize_text(word).to_lowercase())
    }
}

impl LexiconError {
    fn at_line(self, line: usize) -> Self {
        match self {
            LexiconError::Parse { message, .. } => LexiconError::Parse { line, message },
            LexiconError::ConcatMismatch { word, division, .. } => LexiconError::ConcatMismatch {
                line,
                word,
                division,
            },
            other => other,
        }
    }
}
