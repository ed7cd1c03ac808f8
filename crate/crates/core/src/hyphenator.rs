//! Line-break points derived from a syllable division.
//!
//! A syllable boundary is a valid break only when neither line would carry a
//! lone letter: both sides need at least [`MIN_SIDE`] graphemes.

use crate::alphabet::Grapheme;
use crate::syllabifier::SyllabifiedWord;

pub const MIN_SIDE: usize = 2;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HyphenationSet {
    pub valid_breaks: Vec<usize>,
    pub variants: Vec<String>,
}

pub fn break_points(division: &SyllabifiedWord) -> Vec<usize> {
    let len = division.graphemes().len();
    division
        .boundaries()
        .iter()
        .copied()
        .filter(|&b| b >= MIN_SIDE && len - b >= MIN_SIDE)
        .collect()
}

/// One rendering per break, each with a single `-`.
pub fn render_variants(graphemes: &[Grapheme], breaks: &[usize]) -> Vec<String> {
    breaks
        .iter()
        .map(|&b| {
            let (left, right) = graphemes.split_at(b);
            let mut s: String = left.iter().map(Grapheme::text).collect();
            s.push('-');
            s.extend(right.iter().map(Grapheme::text));
            s
        })
        .collect()
}

pub fn hyphenate(division: &SyllabifiedWord) -> HyphenationSet {
    let valid_breaks = break_points(division);
    let variants = render_variants(division.graphemes(), &valid_breaks);
    HyphenationSet {
        valid_breaks,
        variants,
    }
}
