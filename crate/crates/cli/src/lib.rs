//! Command-line and HTTP front ends for the `uzsyllable` engine.

pub mod cli;
pub mod server;

use uzsyllable::{
    syllabify_text, AnalysisDoc, ExceptionLexicon, GraphemeInventory, ScriptChoice, TextOptions,
};

/// Analyzes one document. Both the CLI `json` format and the HTTP endpoints
/// serialize exactly this value.
pub fn analyze(
    text: &str,
    script: ScriptChoice,
    lexicon: Option<&ExceptionLexicon>,
    inventory: GraphemeInventory,
) -> AnalysisDoc {
    let options = TextOptions {
        script,
        lexicon,
        inventory,
        ..TextOptions::default()
    };
    AnalysisDoc::new(&syllabify_text(text, &options))
}
