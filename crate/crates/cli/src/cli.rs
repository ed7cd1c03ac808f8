//! `uzsyllable <command> [options]`
//!
//! Each input line is processed on its own. Exit codes: 0 success, 1 usage
//! error, 2 unreadable input, lexicon or dataset.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::PathBuf;

use clap::{Parser, ValueEnum};
use uzsyllable::alphabet::to_ascii_apostrophes;
use uzsyllable::evaluation::{load_dataset, read_dataset, Dataset, EvalError};
use uzsyllable::{
    evaluate, AnalysisDoc, ExceptionLexicon, GraphemeInventory, ScriptChoice, TokenKind,
};

use crate::analyze;
use crate::server::{self, ServiceConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Command {
    Syllabify,
    Hyphenate,
    Count,
    Evaluate,
    Serve,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ScriptArg {
    Latin,
    Cyrillic,
    Auto,
}

impl From<ScriptArg> for ScriptChoice {
    fn from(s: ScriptArg) -> Self {
        match s {
            ScriptArg::Latin => ScriptChoice::Latin,
            ScriptArg::Cyrillic => ScriptChoice::Cyrillic,
            ScriptArg::Auto => ScriptChoice::Auto,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "uzsyllable",
    version,
    about = "Uzbek syllabification, hyphenation and syllable counting"
)]
pub struct CliConfig {
    #[arg(value_enum)]
    pub command: Command,
    #[arg(long, value_enum, default_value_t = ScriptArg::Auto)]
    pub script: ScriptArg,
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    pub format: Format,
    /// Exception lexicon (`word<TAB>syl-la-bles` per line)
    #[arg(long, value_name = "PATH")]
    pub lexicon: Option<PathBuf>,
    #[arg(long, value_name = "PATH")]
    pub input: Option<PathBuf>,
    #[arg(long, value_name = "PATH")]
    pub output: Option<PathBuf>,
    /// Write U+02BB and U+02BC as ASCII apostrophes
    #[arg(long)]
    pub ascii_apostrophe: bool,
    #[arg(long, default_value_t = 8080)]
    pub port: u16,
    /// Gold dataset for `evaluate` (defaults to --input or stdin)
    #[arg(long, value_name = "PATH")]
    pub dataset: Option<PathBuf>,
    /// Abort `evaluate` on the first malformed dataset line
    #[arg(long)]
    pub strict: bool,
    /// Treat `ng` as a single letter
    #[arg(long)]
    pub ng_digraph: bool,
}

/// Runs the CLI and returns the process exit code.
pub fn run<I, T>(
    args: I,
    stdin: &mut dyn BufRead,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let config = match CliConfig::try_parse_from(args) {
        Ok(config) => config,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(stderr, "{}", e.render());
                    if !matches!(e.kind(), ErrorKind::MissingRequiredArgument) {
                        let usage = <CliConfig as clap::CommandFactory>::command().render_usage();
                        let _ = writeln!(stderr, "\n{usage}");
                    }
                    EXIT_USAGE
                }
            };
        }
    };
    match execute(&config, stdin, stdout, stderr) {
        Ok(()) => EXIT_OK,
        Err(failure) => {
            let _ = writeln!(stderr, "uzsyllable: {}", failure.message);
            failure.code
        }
    }
}

#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn input(message: impl ToString) -> Self {
        Failure {
            code: EXIT_INPUT,
            message: message.to_string(),
        }
    }
}

fn execute(
    config: &CliConfig,
    stdin: &mut dyn BufRead,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<(), Failure> {
    let lexicon = match &config.lexicon {
        Some(path) => Some(
            ExceptionLexicon::load(path)
                .map_err(|e| Failure::input(format!("{}: {e}", path.display())))?,
        ),
        None => None,
    };
    let inventory = GraphemeInventory::new(config.ng_digraph);

    if config.command == Command::Serve {
        let max_body = match std::env::var("UZSYLLABLE_MAX_BODY") {
            Ok(v) => v.parse().map_err(|_| Failure {
                code: EXIT_USAGE,
                message: format!("UZSYLLABLE_MAX_BODY={v:?} is not a byte count"),
            })?,
            Err(_) => server::DEFAULT_MAX_BODY,
        };
        let host = std::env::var("UZSYLLABLE_HOST").unwrap_or_else(|_| "127.0.0.1".into());
        let service = ServiceConfig {
            lexicon,
            max_body,
            inventory,
        };
        return server::run_blocking(&host, config.port, service).map_err(Failure::input);
    }

    let mut file_out;
    let out: &mut dyn Write = match &config.output {
        Some(path) => {
            file_out = BufWriter::new(
                File::create(path)
                    .map_err(|e| Failure::input(format!("{}: {e}", path.display())))?,
            );
            &mut file_out
        }
        None => stdout,
    };

    if config.command == Command::Evaluate {
        return run_evaluate(config, lexicon.as_ref(), stdin, out, stderr);
    }

    let mut file_in;
    let input: &mut dyn BufRead = match &config.input {
        Some(path) => {
            file_in = BufReader::new(
                File::open(path).map_err(|e| Failure::input(format!("{}: {e}", path.display())))?,
            );
            &mut file_in
        }
        None => stdin,
    };

    for line in input.lines() {
        let line = line.map_err(Failure::input)?;
        let line = line.strip_suffix('\r').unwrap_or(&line);
        let doc = analyze(line, config.script.into(), lexicon.as_ref(), inventory);
        let rendered = render_line(config.command, config.format, doc, config.ascii_apostrophe);
        writeln!(out, "{rendered}").map_err(Failure::input)?;
    }
    out.flush().map_err(Failure::input)
}

/// One output line for one input line.
pub fn render_line(command: Command, format: Format, doc: AnalysisDoc, ascii: bool) -> String {
    let doc = if ascii { doc.ascii_apostrophes() } else { doc };
    if format == Format::Json {
        return serde_json::to_string(&doc).expect("document serializes");
    }
    match command {
        Command::Hyphenate => doc
            .tokens
            .iter()
            .map(|t| match &t.hyphenations {
                Some(v) if !v.is_empty() => v.join(";"),
                _ => t.text.clone(),
            })
            .collect(),
        Command::Count => doc
            .tokens
            .iter()
            .filter(|t| t.kind == TokenKind::Word)
            .map(|t| format!("{} {}", t.text, t.count.unwrap_or(0)))
            .collect::<Vec<_>>()
            .join("\t"),
        _ => doc.rendered,
    }
}

fn run_evaluate(
    config: &CliConfig,
    lexicon: Option<&ExceptionLexicon>,
    stdin: &mut dyn BufRead,
    out: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<(), Failure> {
    let source = config.dataset.as_ref().or(config.input.as_ref());
    let loaded: Result<Dataset, EvalError> = match source {
        Some(path) => load_dataset(path, config.strict).map_err(|e| match e {
            EvalError::Io(io) => EvalError::Io(io::Error::new(
                io.kind(),
                format!("{}: {io}", path.display()),
            )),
            other => other,
        }),
        None => read_dataset(stdin, config.strict),
    };
    let dataset = loaded.map_err(Failure::input)?;
    for rejected in &dataset.rejected {
        let _ = writeln!(stderr, "skipped {rejected}");
    }
    let report = evaluate(&dataset.records, lexicon);
    let text = match config.format {
        Format::Json => serde_json::to_string_pretty(&report).expect("report serializes") + "\n",
        Format::Plain => report.to_string(),
    };
    let text = if config.ascii_apostrophe {
        to_ascii_apostrophes(&text)
    } else {
        text
    };
    out.write_all(text.as_bytes()).map_err(Failure::input)?;
    out.flush().map_err(Failure::input)
}
