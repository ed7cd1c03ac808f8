//! The structured per-text document shared by the CLI `json` format and the
//! HTTP service.

use serde::{Deserialize, Serialize};

use crate::alphabet::to_ascii_apostrophes;
use crate::hyphenator::hyphenate;
use crate::syllabifier::{DivisionSource, TextAnalysis};
use crate::tokenizer::{PassthroughReason, TokenKind};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TokenDoc {
    pub text: String,
    pub kind: TokenKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<PassthroughReason>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub syllables: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hyphenations: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub count: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub source: Option<DivisionSource>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisDoc {
    pub tokens: Vec<TokenDoc>,
    pub rendered: String,
}

impl AnalysisDoc {
    pub fn new(analysis: &TextAnalysis) -> Self {
        let tokens = analysis
            .tokens
            .iter()
            .map(|t| {
                let division = t.division.as_ref();
                TokenDoc {
                    text: t.token.text().to_string(),
                    kind: t.token.kind(),
                    reason: t.token.reason(),
                    syllables: division.map(|d| d.syllable_texts()),
                    hyphenations: division.map(|d| hyphenate(d).variants),
                    count: division.map(|d| d.len()),
                    source: division.map(|d| d.source()),
                }
            })
            .collect();
        AnalysisDoc {
            tokens,
            rendered: analysis.rendered.clone(),
        }
    }

    /// Same document with both canonical marks rendered as ASCII `'`.
    pub fn ascii_apostrophes(mut self) -> Self {
        let fix = |s: &mut String| *s = to_ascii_apostrophes(s);
        fix(&mut self.rendered);
        for t in &mut self.tokens {
            fix(&mut t.text);
            for list in [&mut t.syllables, &mut t.hyphenations]
                .into_iter()
                .flatten()
            {
                list.iter_mut().for_each(fix);
            }
        }
        self
    }
}
