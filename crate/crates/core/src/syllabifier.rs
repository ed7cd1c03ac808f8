//! The syllable division rules and the text-level pipeline built on them.
//!
//! Every vowel is the nucleus of exactly one syllable. Of the consonants
//! between two nuclei only the last one opens the next syllable; the rest
//! close the previous one. Adjacent vowels split directly (hiatus). Signs
//! (tutuq, ъ, ь) never start a syllable and stay with the grapheme before them.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::alphabet::{normalize_text, Grapheme, GraphemeInventory};
use crate::lexicon::ExceptionLexicon;
use crate::tokenizer::{detokenize, tokenize_with, ScriptChoice, Token, TokenizeOptions, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DivisionSource {
    Rule,
    Lexicon,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SyllabifyError {
    #[error("word has no vowel to carry a syllable")]
    NoVowel,
}

/// A word partitioned into syllables.
///
/// Stored as the grapheme sequence plus the indices at which syllables 2..n
/// start, so concatenation is preserved by construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SyllabifiedWord {
    graphemes: Vec<Grapheme>,
    boundaries: Vec<usize>,
    source: DivisionSource,
}

impl SyllabifiedWord {
    /// Builds a division from explicit boundaries. Returns `None` unless the
    /// boundaries are strictly increasing and inside `1..graphemes.len()`.
    pub fn from_boundaries(
        graphemes: Vec<Grapheme>,
        boundaries: Vec<usize>,
        source: DivisionSource,
    ) -> Option<Self> {
        if graphemes.is_empty() {
            return None;
        }
        let mut prev = 0;
        for &b in &boundaries {
            if b <= prev || b >= graphemes.len() {
                return None;
            }
            prev = b;
        }
        Some(SyllabifiedWord {
            graphemes,
            boundaries,
            source,
        })
    }

    pub fn graphemes(&self) -> &[Grapheme] {
        &self.graphemes
    }

    /// Grapheme indices where a new syllable begins (never 0).
    pub fn boundaries(&self) -> &[usize] {
        &self.boundaries
    }

    pub fn source(&self) -> DivisionSource {
        self.source
    }

    pub fn len(&self) -> usize {
        self.boundaries.len() + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn syllables(&self) -> impl Iterator<Item = &[Grapheme]> + '_ {
        let starts = std::iter::once(0).chain(self.boundaries.iter().copied());
        let ends = self
            .boundaries
            .iter()
            .copied()
            .chain(std::iter::once(self.graphemes.len()));
        starts.zip(ends).map(move |(s, e)| &self.graphemes[s..e])
    }

    pub fn syllable_texts(&self) -> Vec<String> {
        self.syllables()
            .map(|s| s.iter().map(Grapheme::text).collect())
            .collect()
    }

    pub fn text(&self) -> String {
        self.graphemes.iter().map(Grapheme::text).collect()
    }

    pub fn render(&self, mark: &str) -> String {
        self.syllable_texts().join(mark)
    }
}

/// Divides a grapheme sequence into syllables by rule.
pub fn divide(graphemes: &[Grapheme]) -> Result<SyllabifiedWord, SyllabifyError> {
    let nuclei: Vec<usize> = graphemes
        .iter()
        .enumerate()
        .filter(|(_, g)| g.is_vowel())
        .map(|(i, _)| i)
        .collect();
    if nuclei.is_empty() {
        return Err(SyllabifyError::NoVowel);
    }
    let boundaries = nuclei
        .windows(2)
        .map(|pair| {
            let (left, right) = (pair[0], pair[1]);
            // last consonant of the run opens the next syllable; with no
            // consonant the next vowel does, after any signs
            (left + 1..right)
                .rev()
                .find(|&i| graphemes[i].is_consonant())
                .unwrap_or(right)
        })
        .collect();
    Ok(SyllabifiedWord {
        graphemes: graphemes.to_vec(),
        boundaries,
        source: DivisionSource::Rule,
    })
}

/// Divides a word, preferring an exact lexicon entry over the rules.
pub fn syllabify(
    word: &Word,
    lexicon: Option<&ExceptionLexicon>,
) -> Result<SyllabifiedWord, SyllabifyError> {
    if let Some(boundaries) = lexicon.and_then(|lex| lex.lookup(word)) {
        if let Some(division) = SyllabifiedWord::from_boundaries(
            word.graphemes().to_vec(),
            boundaries,
            DivisionSource::Lexicon,
        ) {
            return Ok(division);
        }
    }
    divide(word.graphemes())
}

pub fn count_syllables(
    word: &Word,
    lexicon: Option<&ExceptionLexicon>,
) -> Result<usize, SyllabifyError> {
    syllabify(word, lexicon).map(|d| d.len())
}

#[derive(Debug, Clone, Copy)]
pub struct TextOptions<'a> {
    pub script: ScriptChoice,
    pub lexicon: Option<&'a ExceptionLexicon>,
    pub mark: &'a str,
    pub inventory: GraphemeInventory,
}

impl Default for TextOptions<'_> {
    fn default() -> Self {
        TextOptions {
            script: ScriptChoice::Auto,
            lexicon: None,
            mark: "-",
            inventory: GraphemeInventory::STANDARD,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnalyzedToken {
    pub token: Token,
    /// Present exactly for word tokens.
    pub division: Option<SyllabifiedWord>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TextAnalysis {
    pub tokens: Vec<AnalyzedToken>,
    pub rendered: String,
}

impl TextAnalysis {
    pub fn words(&self) -> impl Iterator<Item = (&Word, &SyllabifiedWord)> + '_ {
        self.tokens
            .iter()
            .filter_map(|t| Some((t.token.as_word()?, t.division.as_ref()?)))
    }
}

/// Full pipeline: normalize, tokenize, divide each word, render with `mark`.
pub fn syllabify_text(text: &str, options: &TextOptions<'_>) -> TextAnalysis {
    let normalized = normalize_text(text);
    let tokenize_options = TokenizeOptions {
        script: options.script,
        inventory: options.inventory,
    };
    let tokens: Vec<AnalyzedToken> = tokenize_with(&normalized, &tokenize_options)
        .into_iter()
        .map(|token| {
            let division = token
                .as_word()
                .map(|w| syllabify(w, options.lexicon).expect("word tokens carry a vowel"));
            AnalyzedToken { token, division }
        })
        .collect();
    let plain: Vec<Token> = tokens.iter().map(|t| t.token.clone()).collect();
    let annotations: Vec<Vec<usize>> = tokens
        .iter()
        .filter_map(|t| t.division.as_ref().map(|d| d.boundaries().to_vec()))
        .collect();
    let rendered = if annotations.is_empty() {
        normalized
    } else {
        detokenize(&plain, &annotations, options.mark).expect("divisions align with their words")
    };
    TextAnalysis { tokens, rendered }
}
