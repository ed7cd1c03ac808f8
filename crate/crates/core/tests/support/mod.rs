//! Test-only oracles. Nothing here calls into the rule engine's division
//! code; it only uses the inventory to learn letter classes.

#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;
use uzsyllable::{
    normalize_text, Grapheme, GraphemeClass, GraphemeInventory, Script, SyllabifiedWord,
};

/// Enumerates every way to cut `graphemes` into segments and keeps those that
/// satisfy the syllable structure: one vowel per segment; a segment after a
/// consonant run starts with its single onset consonant; after an empty run
/// it starts with its vowel. Returns every accepted cut set.
pub fn brute_force_partitions(graphemes: &[Grapheme]) -> Vec<Vec<usize>> {
    let n = graphemes.len();
    if n == 0 {
        return Vec::new();
    }
    let class: Vec<GraphemeClass> = graphemes.iter().map(Grapheme::class).collect();
    let mut accepted = Vec::new();
    for mask in 0u64..(1u64 << (n - 1)) {
        let cuts: Vec<usize> = (1..n).filter(|i| mask >> (i - 1) & 1 == 1).collect();
        let mut starts = vec![0];
        starts.extend(&cuts);
        let mut ends = cuts.clone();
        ends.push(n);
        let ok = starts.iter().zip(&ends).enumerate().all(|(k, (&a, &b))| {
            let vowels: Vec<usize> = (a..b)
                .filter(|&i| class[i] == GraphemeClass::Vowel)
                .collect();
            if vowels.len() != 1 {
                return false;
            }
            if k == 0 {
                return true;
            }
            let v = vowels[0];
            let prev_vowel = (0..a)
                .rev()
                .find(|&i| class[i] == GraphemeClass::Vowel)
                .unwrap();
            let run = (prev_vowel + 1..v)
                .filter(|&i| class[i] == GraphemeClass::Consonant)
                .count();
            let onset = (a..v)
                .filter(|&i| class[i] == GraphemeClass::Consonant)
                .count();
            if run == 0 {
                a == v
            } else {
                class[a] == GraphemeClass::Consonant && onset == 1
            }
        });
        if ok {
            accepted.push(cuts);
        }
    }
    accepted
}

/// Checks the structural invariants of a rule division; returns a description
/// of the first violation.
pub fn check_division(division: &SyllabifiedWord) -> Result<(), String> {
    let original: String = division.graphemes().iter().map(Grapheme::text).collect();
    let joined: String = division.syllable_texts().concat();
    if joined != original {
        return Err(format!("concatenation {joined:?} != {original:?}"));
    }
    for (k, syllable) in division.syllables().enumerate() {
        let vowels = syllable.iter().filter(|g| g.is_vowel()).count();
        if vowels != 1 {
            return Err(format!("syllable {k} has {vowels} vowels"));
        }
        if k > 0 {
            if syllable[0].is_sign() {
                return Err(format!("syllable {k} starts with a sign"));
            }
            let onset = syllable
                .iter()
                .take_while(|g| !g.is_vowel())
                .filter(|g| g.is_consonant())
                .count();
            if onset > 1 {
                return Err(format!("syllable {k} has onset of {onset} consonants"));
            }
        }
    }
    Ok(())
}

/// Checks the hyphenation variants of a division.
pub fn check_hyphenation(division: &SyllabifiedWord, variants: &[String]) -> Result<(), String> {
    let word: String = division.graphemes().iter().map(Grapheme::text).collect();
    // grapheme start offsets in chars
    let mut starts = Vec::new();
    let mut offset = 0;
    for g in division.graphemes() {
        starts.push(offset);
        offset += g.text().chars().count();
    }
    let boundary_offsets: Vec<usize> = division.boundaries().iter().map(|&b| starts[b]).collect();
    if variants.len() > division.len() - 1 {
        return Err("more variants than boundaries".into());
    }
    for v in variants {
        let (left, right) = v.split_once('-').ok_or("variant without hyphen")?;
        if right.contains('-') {
            return Err(format!("{v:?} has several hyphens"));
        }
        if format!("{left}{right}") != word {
            return Err(format!("{v:?} does not spell {word:?}"));
        }
        let at = left.chars().count();
        let Some(idx) = boundary_offsets.iter().position(|&o| o == at) else {
            return Err(format!("{v:?} breaks outside a syllable boundary"));
        };
        let b = division.boundaries()[idx];
        if b < 2 || division.graphemes().len() - b < 2 {
            return Err(format!("{v:?} leaves a side shorter than 2 letters"));
        }
    }
    Ok(())
}

/// Letters of `script` as strings, each tagged with its class.
pub fn letters(script: Script) -> Vec<&'static str> {
    let inv = GraphemeInventory::STANDARD;
    let mut all: Vec<&'static str> = inv.vowels(script).to_vec();
    all.extend(inv.consonants(script));
    all.extend(inv.signs(script));
    all
}

/// A random normalized word of 1..=max_letters letters with at least one
/// vowel, upper-casing some letters at random. Consecutive letters may fuse
/// into a digraph when the text is segmented again, which is intended.
pub fn random_word(rng: &mut impl Rng, script: Script, max_letters: usize) -> String {
    let inv = GraphemeInventory::STANDARD;
    let vowels = inv.vowels(script);
    let consonants = inv.consonants(script);
    let signs = inv.signs(script);
    let len = rng.gen_range(1..=max_letters);
    let mut parts: Vec<&str> = (0..len)
        .map(|_| match rng.gen_range(0..100) {
            0..=39 => *vowels.choose(rng).unwrap(),
            40..=92 => *consonants.choose(rng).unwrap(),
            _ => *signs.choose(rng).unwrap(),
        })
        .collect();
    if !parts.iter().any(|p| vowels.contains(p)) {
        let at = rng.gen_range(0..parts.len());
        parts[at] = vowels.choose(rng).unwrap();
    }
    let raw: String = parts
        .into_iter()
        .map(|p| {
            if rng.gen_bool(0.1) {
                p.to_uppercase()
            } else {
                p.to_string()
            }
        })
        .collect();
    normalize_text(&raw)
}

pub const APOSTROPHES: [char; 7] = [
    '\u{0027}', '\u{0060}', '\u{00B4}', '\u{2018}', '\u{2019}', '\u{02BB}', '\u{02BC}',
];

/// Noisy text mixing Latin and Cyrillic words, digits, punctuation and every
/// apostrophe variant.
pub fn random_noisy_text(rng: &mut impl Rng) -> String {
    let pieces = rng.gen_range(0..12);
    let mut out = String::new();
    for _ in 0..pieces {
        match rng.gen_range(0..10) {
            0..=3 => out.push_str(&random_word(rng, Script::Latin, 8)),
            4 => out.push_str(&random_word(rng, Script::Cyrillic, 8)),
            5 | 6 => out.push(*APOSTROPHES.choose(rng).unwrap()),
            7 => out.push(
                *[' ', ' ', '\t', '-', ',', '.', '!', '"', '(', '€']
                    .choose(rng)
                    .unwrap(),
            ),
            8 => out.push_str(&rng.gen_range(0..3000).to_string()),
            _ => out.push_str(
                ["AQSH", "o", "g", "O", "G", "sh", "MDH"]
                    .choose(rng)
                    .unwrap(),
            ),
        }
    }
    out
}
