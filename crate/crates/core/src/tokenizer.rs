//! Splits normalized text into words, preserved spans and separators, and
//! puts annotated words back together.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::alphabet::{
    detect_script, is_cyrillic, is_latin_letter, DetectedScript, Grapheme, GraphemeInventory,
    Script, DIGRAPH_MODIFIER, TUTUQ,
};

/// Which script to segment words with.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ScriptChoice {
    #[default]
    Auto,
    Latin,
    Cyrillic,
}

impl ScriptChoice {
    pub fn forced(self) -> Option<Script> {
        match self {
            ScriptChoice::Auto => None,
            ScriptChoice::Latin => Some(Script::Latin),
            ScriptChoice::Cyrillic => Some(Script::Cyrillic),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TokenKind {
    Word,
    Passthrough,
    Separator,
}

/// Why a letter run was kept out of syllabification.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PassthroughReason {
    Acronym,
    ContainsDigit,
    Symbol,
    NoVowel,
    MixedScript,
    UnknownCharacter,
}

/// A syllabifiable word: at least one vowel, every character in one script.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Word {
    text: String,
    script: Script,
    graphemes: Vec<Grapheme>,
}

impl Word {
    /// Segments `text` as a word of `script`. Returns `None` when the text is
    /// not made of that script's letters or contains no vowel.
    pub fn new(text: &str, script: Script, inventory: &GraphemeInventory) -> Option<Word> {
        let graphemes = inventory.segment(text, script).ok()?;
        graphemes.iter().any(Grapheme::is_vowel).then(|| Word {
            text: text.to_string(),
            script,
            graphemes,
        })
    }

    pub fn text(&self) -> &str {
        &self.text
    }

    pub fn script(&self) -> Script {
        self.script
    }

    pub fn graphemes(&self) -> &[Grapheme] {
        &self.graphemes
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Token {
    Word(Word),
    Passthrough {
        text: String,
        reason: PassthroughReason,
    },
    Separator(String),
}

impl Token {
    pub fn text(&self) -> &str {
        match self {
            Token::Word(w) => w.text(),
            Token::Passthrough { text, .. } | Token::Separator(text) => text,
        }
    }

    pub fn kind(&self) -> TokenKind {
        match self {
            Token::Word(_) => TokenKind::Word,
            Token::Passthrough { .. } => TokenKind::Passthrough,
            Token::Separator(_) => TokenKind::Separator,
        }
    }

    pub fn as_word(&self) -> Option<&Word> {
        match self {
            Token::Word(w) => Some(w),
            _ => None,
        }
    }

    pub fn reason(&self) -> Option<PassthroughReason> {
        match self {
            Token::Passthrough { reason, .. } => Some(*reason),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct TokenizeOptions {
    pub script: ScriptChoice,
    pub inventory: GraphemeInventory,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TokenizerError {
    #[error("annotation does not fit word {word_index} ({detail})")]
    AnnotationMismatch { word_index: usize, detail: String },
}

fn is_mark(c: char) -> bool {
    c == DIGRAPH_MODIFIER || c == TUTUQ
}

fn is_core_char(c: char) -> bool {
    c.is_alphanumeric() && !is_mark(c)
}

/// Whitespace and punctuation; other non-letters (currency, math, emoji,
/// stray combining marks) form `Symbol` passthrough runs instead.
fn is_separator_char(c: char) -> bool {
    c.is_whitespace()
        || c.is_ascii_punctuation()
        || is_mark(c)
        || matches!(c,
            '\u{00A1}' | '\u{00A7}' | '\u{00AB}' | '\u{00B4}' | '\u{00B6}' | '\u{00B7}'
            | '\u{00BB}' | '\u{00BF}' | '\u{2010}'..='\u{2027}' | '\u{2030}'..='\u{205E}'
            | '\u{3001}'..='\u{3003}' | '\u{300C}'..='\u{300F}')
}

pub fn tokenize(text: &str) -> Vec<Token> {
    tokenize_with(text, &TokenizeOptions::default())
}

/// Splits `text` into tokens whose texts concatenate back to `text`.
///
/// A candidate word is a maximal run of letters and digits. The `oʻ`/`gʻ`
/// modifier belongs to the run when it follows `o`/`g`; the tutuq belongs to
/// it only between two run characters.
pub fn tokenize_with(text: &str, options: &TokenizeOptions) -> Vec<Token> {
    let chars: Vec<char> = text.chars().collect();
    let mut tokens = Vec::new();
    let mut separator = String::new();
    let mut i = 0;
    while i < chars.len() {
        if is_separator_char(chars[i]) {
            separator.push(chars[i]);
            i += 1;
            continue;
        }
        if !is_core_char(chars[i]) {
            let start = i;
            while i < chars.len() && !is_core_char(chars[i]) && !is_separator_char(chars[i]) {
                i += 1;
            }
            if !separator.is_empty() {
                tokens.push(Token::Separator(std::mem::take(&mut separator)));
            }
            tokens.push(Token::Passthrough {
                text: chars[start..i].iter().collect(),
                reason: PassthroughReason::Symbol,
            });
            continue;
        }
        let start = i;
        i += 1;
        while i < chars.len() {
            let c = chars[i];
            let joins = if is_core_char(c) {
                true
            } else if c == DIGRAPH_MODIFIER {
                matches!(chars[i - 1], 'o' | 'O' | 'g' | 'G')
            } else if c == TUTUQ {
                chars.get(i + 1).copied().is_some_and(is_core_char)
            } else {
                false
            };
            if !joins {
                break;
            }
            i += 1;
        }
        if !separator.is_empty() {
            tokens.push(Token::Separator(std::mem::take(&mut separator)));
        }
        let run: String = chars[start..i].iter().collect();
        tokens.push(classify_run(run, options));
    }
    if !separator.is_empty() {
        tokens.push(Token::Separator(separator));
    }
    tokens
}

fn classify_run(run: String, options: &TokenizeOptions) -> Token {
    let passthrough = |text: String, reason| Token::Passthrough { text, reason };
    if run.chars().any(char::is_numeric) {
        return passthrough(run, PassthroughReason::ContainsDigit);
    }
    let detected = detect_script(&run);
    if detected == DetectedScript::Mixed {
        let known = run.chars().any(|c| is_latin_letter(c) || is_cyrillic(c));
        let reason = if known {
            PassthroughReason::MixedScript
        } else {
            PassthroughReason::UnknownCharacter
        };
        return passthrough(run, reason);
    }
    let letters: Vec<char> = run.chars().filter(|&c| is_core_char(c)).collect();
    if letters.len() >= 2 && letters.iter().all(|c| c.is_uppercase()) {
        return passthrough(run, PassthroughReason::Acronym);
    }
    let script = options
        .script
        .forced()
        .or(detected.script())
        .expect("mixed handled above");
    match options.inventory.segment(&run, script) {
        Err(_) => passthrough(run, PassthroughReason::UnknownCharacter),
        Ok(graphemes) if !graphemes.iter().any(Grapheme::is_vowel) => {
            passthrough(run, PassthroughReason::NoVowel)
        }
        Ok(graphemes) => Token::Word(Word {
            text: run,
            script,
            graphemes,
        }),
    }
}

/// Renders tokens with `mark` inserted at each syllable boundary.
///
/// `annotations` holds, per word token in order, the grapheme indices at
/// which a new syllable starts. An empty slice renders every token verbatim.
pub fn detokenize(
    tokens: &[Token],
    annotations: &[Vec<usize>],
    mark: &str,
) -> Result<String, TokenizerError> {
    let word_count = tokens
        .iter()
        .filter(|t| t.kind() == TokenKind::Word)
        .count();
    if !annotations.is_empty() && annotations.len() != word_count {
        return Err(TokenizerError::AnnotationMismatch {
            word_index: annotations.len().min(word_count),
            detail: format!("{} annotations for {} words", annotations.len(), word_count),
        });
    }
    let mut out = String::new();
    let mut word_index = 0;
    for token in tokens {
        match token {
            Token::Word(word) => {
                match annotations.get(word_index) {
                    Some(bounds) => render_word(&mut out, word, bounds, mark, word_index)?,
                    None => out.push_str(word.text()),
                }
                word_index += 1;
            }
            other => out.push_str(other.text()),
        }
    }
    Ok(out)
}

fn render_word(
    out: &mut String,
    word: &Word,
    bounds: &[usize],
    mark: &str,
    word_index: usize,
) -> Result<(), TokenizerError> {
    let len = word.graphemes.len();
    let mut prev = 0;
    for &b in bounds {
        if b <= prev || b >= len {
            return Err(TokenizerError::AnnotationMismatch {
                word_index,
                detail: format!("boundary {b} outside 1..{len} or not increasing"),
            });
        }
        prev = b;
    }
    let mut next = bounds.iter().peekable();
    for (i, g) in word.graphemes.iter().enumerate() {
        if next.peek() == Some(&&i) {
            out.push_str(mark);
            next.next();
        }
        out.push_str(g.text());
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::normalize_text;

    fn shape(tokens: &[Token]) -> Vec<(TokenKind, &str, Option<PassthroughReason>)> {
        tokens
            .iter()
            .map(|t| (t.kind(), t.text(), t.reason()))
            .collect()
    }

    #[test]
    fn splits_on_whitespace() {
        let text = normalize_text("abadiy so\u{2018}z");
        let tokens = tokenize(&text);
        assert_eq!(
            shape(&tokens),
            [
                (TokenKind::Word, "abadiy", None),
                (TokenKind::Separator, " ", None),
                (TokenKind::Word, "so\u{02BB}z", None),
            ]
        );
    }

    #[test]
    fn demotes_acronyms_and_numbers() {
        let tokens = tokenize("AQSH 2024");
        assert_eq!(
            shape(&tokens),
            [
                (
                    TokenKind::Passthrough,
                    "AQSH",
                    Some(PassthroughReason::Acronym)
                ),
                (TokenKind::Separator, " ", None),
                (
                    TokenKind::Passthrough,
                    "2024",
                    Some(PassthroughReason::ContainsDigit)
                ),
            ]
        );
    }

    #[test]
    fn demotes_vowelless_runs() {
        let tokens = tokenize("brr!");
        assert_eq!(
            shape(&tokens),
            [
                (
                    TokenKind::Passthrough,
                    "brr",
                    Some(PassthroughReason::NoVowel)
                ),
                (TokenKind::Separator, "!", None),
            ]
        );
    }

    #[test]
    fn other_demotions() {
        let tokens = tokenize("onaона ça αβγ A b");
        let reasons: Vec<_> = tokens.iter().filter_map(Token::reason).collect();
        assert_eq!(
            reasons,
            [
                PassthroughReason::MixedScript,
                PassthroughReason::UnknownCharacter,
                PassthroughReason::UnknownCharacter,
                PassthroughReason::NoVowel,
            ]
        );
        // a single capital vowel is an ordinary word
        assert!(tokens
            .iter()
            .any(|t| t.kind() == TokenKind::Word && t.text() == "A"));
    }

    #[test]
    fn symbols_are_preserved() {
        let tokens = tokenize("narxi 5€, ©ona");
        assert_eq!(
            shape(&tokens),
            [
                (TokenKind::Word, "narxi", None),
                (TokenKind::Separator, " ", None),
                (
                    TokenKind::Passthrough,
                    "5",
                    Some(PassthroughReason::ContainsDigit)
                ),
                (TokenKind::Passthrough, "€", Some(PassthroughReason::Symbol)),
                (TokenKind::Separator, ", ", None),
                (TokenKind::Passthrough, "©", Some(PassthroughReason::Symbol)),
                (TokenKind::Word, "ona", None),
            ]
        );
    }

    #[test]
    fn hyphenated_compounds_split() {
        let tokens = tokenize("ota-ona");
        assert_eq!(
            shape(&tokens),
            [
                (TokenKind::Word, "ota", None),
                (TokenKind::Separator, "-", None),
                (TokenKind::Word, "ona", None),
            ]
        );
    }

    #[test]
    fn marks_inside_and_at_edges() {
        let text = normalize_text("tog' ma'no 'salom'");
        let tokens = tokenize(&text);
        let words: Vec<&str> = tokens
            .iter()
            .filter_map(Token::as_word)
            .map(Word::text)
            .collect();
        assert_eq!(words, ["tog\u{02BB}", "ma\u{02BC}no", "salom"]);
        assert_eq!(tokens.iter().map(Token::text).collect::<String>(), text);
    }

    #[test]
    fn forced_script_rejects_other_script() {
        let options = TokenizeOptions {
            script: ScriptChoice::Latin,
            ..Default::default()
        };
        let tokens = tokenize_with("она", &options);
        assert_eq!(
            tokens[0].reason(),
            Some(PassthroughReason::UnknownCharacter)
        );
    }

    #[test]
    fn detokenize_marks_boundaries() {
        let tokens = tokenize("abadiy");
        assert_eq!(detokenize(&tokens, &[vec![1, 3]], "-").unwrap(), "a-ba-diy");
        let tokens = tokenize("она, ona");
        assert_eq!(
            detokenize(&tokens, &[vec![1], vec![1]], "·").unwrap(),
            "о·на, o·na"
        );
        assert_eq!(detokenize(&tokens, &[], "-").unwrap(), "она, ona");
    }

    #[test]
    fn detokenize_rejects_bad_annotations() {
        let tokens = tokenize("ona");
        assert!(matches!(
            detokenize(&tokens, &[vec![3]], "-"),
            Err(TokenizerError::AnnotationMismatch { word_index: 0, .. })
        ));
        assert!(detokenize(&tokens, &[vec![0]], "-").is_err());
        assert!(detokenize(&tokens, &[vec![2, 1]], "-").is_err());
        assert!(detokenize(&tokens, &[vec![1], vec![1]], "-").is_err());
    }

    #[test]
    fn empty_input() {
        assert!(tokenize("").is_empty());
        assert_eq!(detokenize(&[], &[], "-").unwrap(), "");
    }
}
