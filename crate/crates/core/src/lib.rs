//! Rule-based syllabification for Uzbek in both the Latin and Cyrillic
//! scripts: syllable division, line-break hyphenation, syllable counting and
//! an evaluation harness for gold datasets.
//!
//! ```
//! use uzsyllable::{syllabify_text, TextOptions};
//!
//! let out = syllabify_text("bug'latkich ona", &TextOptions::default());
//! assert_eq!(out.rendered, "bugʻ-lat-kich o-na");
//! ```

pub mod alphabet;
pub mod document;
pub mod evaluation;
pub mod hyphenator;
pub mod lexicon;
pub mod syllabifier;
pub mod tokenizer;

pub use alphabet::{
    classify, detect_script, normalize_text, segment_graphemes, DetectedScript, Grapheme,
    GraphemeClass, GraphemeInventory, Script,
};
pub use document::{AnalysisDoc, TokenDoc};
pub use evaluation::{diff_report, evaluate, load_dataset, EvalRecord, EvalReport};
pub use hyphenator::{break_points, hyphenate, render_variants, HyphenationSet};
pub use lexicon::ExceptionLexicon;
pub use syllabifier::{
    count_syllables, divide, syllabify, syllabify_text, DivisionSource, SyllabifiedWord,
    TextAnalysis, TextOptions,
};
pub use tokenizer::{
    detokenize, tokenize, PassthroughReason, ScriptChoice, Token, TokenKind, Word,
};
