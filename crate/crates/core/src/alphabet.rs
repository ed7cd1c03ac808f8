//! Letter inventories for both Uzbek scripts, apostrophe canonicalization and
//! digraph-aware grapheme segmentation.
//!
//! Every rule in the engine operates on [`Grapheme`]s rather than codepoints:
//! `oʻ`, `gʻ`, `sh` and `ch` are single letters and segmentation never yields
//! them split, so no later stage can place a boundary inside a digraph.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Canonical modifier of the `oʻ` and `gʻ` letters (MODIFIER LETTER TURNED COMMA).
pub const DIGRAPH_MODIFIER: char = '\u{02BB}';

/// Canonical glottal-stop sign, the tutuq belgisi (MODIFIER LETTER APOSTROPHE).
pub const TUTUQ: char = '\u{02BC}';

/// Every codepoint seen in the wild standing in for one of the two marks above.
pub const APOSTROPHE_VARIANTS: [char; 7] = [
    '\u{0027}', '\u{0060}', '\u{00B4}', '\u{2018}', '\u{2019}', '\u{02BB}', '\u{02BC}',
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Script {
    Latin,
    Cyrillic,
}

impl Script {
    pub const ALL: [Script; 2] = [Script::Latin, Script::Cyrillic];
}

impl fmt::Display for Script {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Script::Latin => f.write_str("latin"),
            Script::Cyrillic => f.write_str("cyrillic"),
        }
    }
}

/// Result of [`detect_script`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DetectedScript {
    Latin,
    Cyrillic,
    Mixed,
}

impl DetectedScript {
    pub fn script(self) -> Option<Script> {
        match self {
            DetectedScript::Latin => Some(Script::Latin),
            DetectedScript::Cyrillic => Some(Script::Cyrillic),
            DetectedScript::Mixed => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GraphemeClass {
    Vowel,
    Consonant,
    Sign,
}

/// One orthographic letter. `text` keeps the case it had in the input.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Grapheme {
    text: String,
    class: GraphemeClass,
    script: Script,
}

impl Grapheme {
    pub fn text(&self) -> &str {
        &self.text
    }

    pub fn class(&self) -> GraphemeClass {
        self.class
    }

    pub fn script(&self) -> Script {
        self.script
    }

    pub fn is_vowel(&self) -> bool {
        self.class == GraphemeClass::Vowel
    }

    pub fn is_consonant(&self) -> bool {
        self.class == GraphemeClass::Consonant
    }

    pub fn is_sign(&self) -> bool {
        self.class == GraphemeClass::Sign
    }
}

impl fmt::Display for Grapheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.text)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlphabetError {
    #[error("character {character:?} at position {position} is not a {script} Uzbek letter")]
    UnknownCharacter {
        /// Index in characters, not bytes.
        position: usize,
        character: char,
        script: Script,
    },
}

const LATIN_VOWELS: &[&str] = &["a", "e", "i", "o", "u", "o\u{02BB}"];
const LATIN_CONSONANTS: &[&str] = &[
    "b",
    "c",
    "d",
    "f",
    "g",
    "h",
    "j",
    "k",
    "l",
    "m",
    "n",
    "p",
    "q",
    "r",
    "s",
    "t",
    "v",
    "w",
    "x",
    "y",
    "z",
    "g\u{02BB}",
    "sh",
    "ch",
];
const LATIN_SIGNS: &[&str] = &["\u{02BC}"];
const LATIN_DIGRAPHS: &[&str] = &["o\u{02BB}", "g\u{02BB}", "sh", "ch"];
const LATIN_DIGRAPHS_NG: &[&str] = &["o\u{02BB}", "g\u{02BB}", "sh", "ch", "ng"];

const CYRILLIC_VOWELS: &[&str] = &["а", "е", "ё", "и", "о", "у", "ў", "э", "ю", "я"];
const CYRILLIC_CONSONANTS: &[&str] = &[
    "б", "в", "г", "д", "ж", "з", "й", "к", "л", "м", "н", "п", "р", "с", "т", "ф", "х", "ц", "ч",
    "ш", "қ", "ғ", "ҳ",
];
const CYRILLIC_SIGNS: &[&str] = &["ъ", "ь"];

/// Per-script letter tables.
///
/// The only configurable part is whether `ng` is treated as one letter; it is
/// off by default because an atomic `ng` mis-divides suffix junctions such as
/// `men+ga`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct GraphemeInventory {
    ng_digraph: bool,
}

impl GraphemeInventory {
    pub const STANDARD: GraphemeInventory = GraphemeInventory { ng_digraph: false };

    pub fn new(ng_digraph: bool) -> Self {
        GraphemeInventory { ng_digraph }
    }

    pub fn ng_digraph(&self) -> bool {
        self.ng_digraph
    }

    pub fn vowels(&self, script: Script) -> &'static [&'static str] {
        match script {
            Script::Latin => LATIN_VOWELS,
            Script::Cyrillic => CYRILLIC_VOWELS,
        }
    }

    /// Consonant letters, digraphs included.
    pub fn consonants(&self, script: Script) -> Vec<&'static str> {
        match script {
            Script::Latin => {
                let mut all = LATIN_CONSONANTS.to_vec();
                if self.ng_digraph {
                    all.push("ng");
                }
                all
            }
            Script::Cyrillic => CYRILLIC_CONSONANTS.to_vec(),
        }
    }

    pub fn signs(&self, script: Script) -> &'static [&'static str] {
        match script {
            Script::Latin => LATIN_SIGNS,
            Script::Cyrillic => CYRILLIC_SIGNS,
        }
    }

    /// Multi-codepoint letters in matching order (longest first).
    pub fn digraphs(&self, script: Script) -> &'static [&'static str] {
        match (script, self.ng_digraph) {
            (Script::Latin, false) => LATIN_DIGRAPHS,
            (Script::Latin, true) => LATIN_DIGRAPHS_NG,
            (Script::Cyrillic, _) => &[],
        }
    }

    /// Class of a letter given in any case, or `None` when it is not in the
    /// inventory of `script`.
    pub fn class_of(&self, text: &str, script: Script) -> Option<GraphemeClass> {
        let lower = text.to_lowercase();
        let lower = lower.as_str();
        if self.vowels(script).contains(&lower) {
            Some(GraphemeClass::Vowel)
        } else if self.signs(script).contains(&lower) {
            Some(GraphemeClass::Sign)
        } else if self.consonants(script).contains(&lower) {
            Some(GraphemeClass::Consonant)
        } else {
            None
        }
    }

    /// Splits a normalized word into letters, matching digraphs longest-first
    /// and case-insensitively.
    pub fn segment(&self, word: &str, script: Script) -> Result<Vec<Grapheme>, AlphabetError> {
        let chars: Vec<char> = word.chars().collect();
        let digraphs = self.digraphs(script);
        let mut out = Vec::with_capacity(chars.len());
        let mut i = 0;
        while i < chars.len() {
            let matched = digraphs.iter().find_map(|d| {
                let len = d.chars().count();
                let candidate = chars.get(i..i + len)?;
                let hit = candidate
                    .iter()
                    .zip(d.chars())
                    .all(|(&c, expected)| lower_char(c) == expected);
                hit.then_some(len)
            });
            let len = matched.unwrap_or(1);
            let text: String = chars[i..i + len].iter().collect();
            let class = self
                .class_of(&text, script)
                .ok_or(AlphabetError::UnknownCharacter {
                    position: i,
                    character: chars[i],
                    script,
                })?;
            out.push(Grapheme {
                text,
                class,
                script,
            });
            i += len;
        }
        Ok(out)
    }

    /// Looks a single letter up and builds its grapheme.
    pub fn grapheme(&self, text: &str, script: Script) -> Option<Grapheme> {
        self.class_of(text, script).map(|class| Grapheme {
            text: text.to_string(),
            class,
            script,
        })
    }
}

fn lower_char(c: char) -> char {
    let mut lower = c.to_lowercase();
    match (lower.next(), lower.next()) {
        (Some(l), None) => l,
        _ => c,
    }
}

pub fn segment_graphemes(word: &str, script: Script) -> Result<Vec<Grapheme>, AlphabetError> {
    GraphemeInventory::STANDARD.segment(word, script)
}

/// Inventory class of a grapheme, recomputed case-insensitively.
pub fn classify(g: &Grapheme) -> GraphemeClass {
    GraphemeInventory::STANDARD
        .class_of(g.text(), g.script())
        .unwrap_or(g.class())
}

pub fn is_latin_letter(c: char) -> bool {
    c.is_alphabetic()
        && matches!(c, 'A'..='Z' | 'a'..='z' | '\u{00C0}'..='\u{024F}')
        && c != '\u{00D7}'
        && c != '\u{00F7}'
}

pub fn is_cyrillic(c: char) -> bool {
    ('\u{0400}'..='\u{04FF}').contains(&c)
}

fn is_apostrophe_variant(c: char) -> bool {
    APOSTROPHE_VARIANTS.contains(&c)
}

/// Canonicalizes apostrophe-like characters in Latin Uzbek text.
///
/// After a Latin `o`/`g` an apostrophe is the `oʻ`/`gʻ` modifier; anywhere
/// else next to a Latin letter it is the tutuq sign. Everything else is left
/// untouched, so the function is idempotent.
pub fn normalize_text(raw: &str) -> String {
    let chars: Vec<char> = raw.chars().collect();
    let mut out = String::with_capacity(raw.len());
    for (i, &c) in chars.iter().enumerate() {
        if !is_apostrophe_variant(c) {
            out.push(c);
            continue;
        }
        let prev = i.checked_sub(1).map(|p| chars[p]);
        let next = chars.get(i + 1).copied();
        if matches!(prev, Some('o' | 'O' | 'g' | 'G')) {
            out.push(DIGRAPH_MODIFIER);
        } else if prev.is_some_and(is_latin_letter) || next.is_some_and(is_latin_letter) {
            out.push(TUTUQ);
        } else {
            out.push(c);
        }
    }
    out
}

pub fn detect_script(token_text: &str) -> DetectedScript {
    let has_cyrillic = token_text.chars().any(is_cyrillic);
    let has_latin = token_text.chars().any(is_latin_letter);
    match (has_latin, has_cyrillic) {
        (true, false) => DetectedScript::Latin,
        (false, true) => DetectedScript::Cyrillic,
        _ => DetectedScript::Mixed,
    }
}

/// Renders both canonical marks as ASCII `'` for consumers that expect it.
pub fn to_ascii_apostrophes(text: &str) -> String {
    text.replace([DIGRAPH_MODIFIER, TUTUQ], "'")
}
