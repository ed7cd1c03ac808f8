//! Gold rows from the Uzbek dictionary sample and the loanword list.

mod support;

use std::path::PathBuf;

use uzsyllable::evaluation::{load_dataset, read_dataset};
use uzsyllable::{
    diff_report, evaluate, hyphenate, syllabify_text, AnalysisDoc, DivisionSource,
    ExceptionLexicon, ScriptChoice, TextOptions,
};

fn path(rel: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join(rel)
}

fn lexicon() -> ExceptionLexicon {
    ExceptionLexicon::load(path("data/loanword_exceptions.tsv")).unwrap()
}

/// (word, correct, rule output)
fn loanwords() -> Vec<(String, String, String)> {
    std::fs::read_to_string(path("tests/fixtures/loanwords.tsv"))
        .unwrap()
        .lines()
        .filter(|l| !l.starts_with('#') && !l.is_empty())
        .map(|l| {
            let f: Vec<&str> = l.split('\t').collect();
            (f[0].to_string(), f[1].to_string(), f[2].to_string())
        })
        .collect()
}

#[test]
fn dictionary_sample_matches_exactly() {
    let data = load_dataset(path("tests/fixtures/dictionary_sample.tsv"), true).unwrap();
    assert_eq!(data.records.len(), 11);
    for record in &data.records {
        let analysis = syllabify_text(&record.word, &TextOptions::default());
        let (_, division) = analysis.words().next().unwrap();
        assert_eq!(
            division.syllable_texts(),
            record.gold_syllables,
            "{}",
            record.word
        );
        assert_eq!(division.len(), record.gold_count, "{}", record.word);
        let variants: std::collections::BTreeSet<String> =
            hyphenate(division).variants.into_iter().collect();
        assert_eq!(variants, record.gold_hyphenations, "{}", record.word);
    }
    let report = evaluate(&data.records, None);
    assert_eq!(report.word_accuracy, 1.0);
    assert_eq!(report.hyphenation_exact_match, 1.0);
    assert_eq!(report.count_micro_f1, 1.0);
}

#[test]
fn loanwords_without_lexicon_follow_the_rules() {
    let rows = loanwords();
    assert_eq!(rows.len(), 18);
    for (word, _, rule) in &rows {
        let out = syllabify_text(word, &TextOptions::default());
        assert_eq!(&out.rendered, rule);
    }
}

#[test]
fn loanwords_with_lexicon_match_the_dictionary() {
    let lex = lexicon();
    assert_eq!(lex.len(), 18);
    let options = TextOptions {
        lexicon: Some(&lex),
        ..TextOptions::default()
    };
    for (word, correct, _) in loanwords() {
        let out = syllabify_text(&word, &options);
        assert_eq!(out.rendered, correct);
        assert_eq!(
            out.tokens[0].division.as_ref().unwrap().source(),
            DivisionSource::Lexicon
        );
    }
}

#[test]
fn lexicon_is_exact_match_only() {
    let lex = lexicon();
    let options = TextOptions {
        lexicon: Some(&lex),
        ..TextOptions::default()
    };
    // the affixed form is not in the lexicon, so the rules apply
    let out = syllabify_text("abstraktlar", &options);
    assert_eq!(out.rendered, "abst-rakt-lar");
    let out = syllabify_text("Kadastrlash", &options);
    assert_eq!(out.rendered, "Ka-da-strlash");
}

#[test]
fn diff_listing_reproduces_rule_output() {
    let text: String = loanwords()
        .iter()
        .map(|(w, correct, _)| {
            let n = correct.split('-').count();
            format!("{w}\t{correct}\t\t{n}\n")
        })
        .collect();
    let data = read_dataset(text.as_bytes(), true).unwrap();
    let listing = diff_report(&data.records, None);
    assert_eq!(listing.len(), 18);
    for (m, (word, correct, rule)) in listing.iter().zip(loanwords()) {
        assert_eq!((&m.word, &m.gold, &m.predicted), (&word, &correct, &rule));
    }
    assert!(diff_report(&data.records, Some(&lexicon())).is_empty());
}

#[test]
fn mother_and_child() {
    let out = syllabify_text("ona bola", &TextOptions::default());
    assert_eq!(out.rendered, "o-na bo-la");
    let hyph: Vec<Vec<String>> = out.words().map(|(_, d)| hyphenate(d).variants).collect();
    assert_eq!(hyph, [vec![], vec!["bo-la".to_string()]]);
}

#[test]
fn cyrillic_words_match_oracle_divisions() {
    // expected values computed with the brute-force partition oracle
    let cases = [
        ("она", "о-на"),
        ("бола", "бо-ла"),
        ("китоб", "ки-тоб"),
        ("мактаб", "мак-таб"),
        ("апрель", "ап-рель"),
        ("дафтар", "даф-тар"),
        ("ўқитувчи", "ў-қи-тув-чи"),
        ("ғалаба", "ға-ла-ба"),
        ("шаҳар", "ша-ҳар"),
        ("қизлар", "қиз-лар"),
        ("юлдуз", "юл-дуз"),
        ("ёмғир", "ём-ғир"),
        ("тарвуз", "тар-вуз"),
        ("дарахт", "да-рахт"),
        ("оила", "о-и-ла"),
        ("талаба", "та-ла-ба"),
        ("объект", "о-бъект"),
        ("мўъжиза", "мўъ-жи-за"),
        ("ҳаракат", "ҳа-ра-кат"),
        ("янги", "ян-ги"),
    ];
    let options = TextOptions {
        script: ScriptChoice::Cyrillic,
        ..TextOptions::default()
    };
    for (word, expected) in cases {
        let out = syllabify_text(word, &options);
        assert_eq!(out.rendered, expected);
        let (w, division) = out.words().next().unwrap();
        assert_eq!(
            support::brute_force_partitions(w.graphemes()),
            [division.boundaries().to_vec()]
        );
        support::check_division(division).unwrap();
        support::check_hyphenation(division, &hyphenate(division).variants).unwrap();
    }
}

#[test]
fn json_document_for_dictionary_row() {
    let doc = AnalysisDoc::new(&syllabify_text("abobil", &TextOptions::default()));
    assert_eq!(
        doc.tokens[0].syllables.as_deref().unwrap(),
        ["a", "bo", "bil"]
    );
    assert_eq!(doc.tokens[0].count, Some(3));
    assert_eq!(doc.tokens[0].hyphenations.as_deref().unwrap(), ["abo-bil"]);
}
