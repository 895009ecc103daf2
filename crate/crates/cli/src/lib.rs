//! The `hairpin` command line.
//!
//! [`run`] is the whole program minus process plumbing, so tests can drive it
//! with in-memory streams.

pub mod report;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hairpin_core::{
    analyze, compile, decide_analyzed, determinize, enumerate_bounded, left_completions, member,
    one_step, right_completions, to_dot, Alphabet, HairpinError, Primer, VerdictKind, Word,
};

pub use report::{ReductionReport, Report, WitnessReport, TOOL_VERSION};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_NEGATIVE: i32 = 3;
pub const EXIT_USAGE: i32 = 64;

#[derive(Debug, Parser)]
#[command(
    name = "hairpin",
    version,
    about = "Iterated hairpin completion of non-crossing words"
)]
pub struct Cli {
    /// "dna" or a pair list such as "A:T,C:G"
    #[arg(long, global = true, default_value = "dna")]
    pub alphabet: String,

    /// Force JSON output. Reports default to JSON when stdout is not a
    /// terminal; word lists are one per line unless this is set.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Input {
    #[arg(long)]
    pub primer: String,
    #[arg(long)]
    pub word: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SideArg {
    Left,
    Right,
    Both,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify the word and decide regularity (exit 0 regular, 3 non-regular)
    Analyze(Input),
    /// One completion step, identity included
    Complete {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value = "both")]
        side: SideArg,
    },
    /// All words of the iterated completion up to a length bound
    Enumerate {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        max_len: usize,
    },
    /// Membership of a target word (exit 0 member, 3 not a member)
    Member {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        target: String,
    },
    /// Non-regularity and non-context-freeness witnesses
    Witness(Input),
    /// DOT rendering of the automaton for a regular construction
    Render {
        #[command(flatten)]
        input: Input,
        /// Write the DOT file here instead of stdout
        #[arg(long)]
        dot: Option<PathBuf>,
        /// Emit the ε-NFA instead of the subset-construction DFA
        #[arg(long)]
        nfa: bool,
    },
}

enum Failure {
    Input(String),
    Negative(String),
}

impl From<HairpinError> for Failure {
    fn from(e: HairpinError) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

/// Parses `args` (program name first) and runs the command.
///
/// `tty` tells whether stdout is a terminal; it selects text over JSON.
/// Returns the process exit code.
pub fn run<I, T>(args: I, tty: bool, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp
                | ErrorKind::DisplayVersion
                | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let rendered = e.render().to_string();
            let _ = if code == EXIT_OK {
                out.write_all(rendered.as_bytes())
            } else {
                err.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    let json = cli.json || !tty;
    match dispatch(&cli, json, out) {
        Ok(code) => code,
        Err(Failure::Input(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_INPUT
        }
        Err(Failure::Negative(msg)) => {
            let _ = writeln!(err, "{msg}");
            EXIT_NEGATIVE
        }
    }
}

fn parse_input(cli: &Cli, input: &Input) -> Result<(Alphabet, Primer, Word), Failure> {
    let alphabet: Alphabet = cli.alphabet.parse()?;
    let primer = Primer::parse(&input.primer, &alphabet)?;
    let word = alphabet.word(&input.word)?;
    Ok((alphabet, primer, word))
}

fn write_words(out: &mut dyn Write, words: &[Word], json: bool) -> std::io::Result<()> {
    if json {
        let list: Vec<String> = words.iter().map(Word::to_string).collect();
        writeln!(
            out,
            "{}",
            serde_json::to_string(&list).expect("strings serialize")
        )
    } else {
        words.iter().try_for_each(|w| writeln!(out, "{w}"))
    }
}

fn dispatch(cli: &Cli, json: bool, out: &mut dyn Write) -> Result<i32, Failure> {
    match &cli.command {
        Command::Analyze(input) => {
            let (alphabet, primer, word) = parse_input(cli, input)?;
            let h = analyze(&word, &primer)?;
            let verdict = decide_analyzed(&h)?;
            let report = Report::new(&alphabet, &primer, &h, &verdict);
            if json {
                writeln!(out, "{}", report.to_json())?;
            } else {
                write!(out, "{}", report.to_text())?;
            }
            Ok(match verdict.kind {
                VerdictKind::Regular => EXIT_OK,
                VerdictKind::NonRegular => EXIT_NEGATIVE,
            })
        }
        Command::Complete { input, side } => {
            let (_, primer, word) = parse_input(cli, input)?;
            let set = match side {
                SideArg::Left => left_completions(&word, &primer),
                SideArg::Right => right_completions(&word, &primer),
                SideArg::Both => one_step(&word, &primer),
            };
            write_words(out, &set.into_iter().collect::<Vec<_>>(), cli.json)?;
            Ok(EXIT_OK)
        }
        Command::Enumerate { input, max_len } => {
            let (_, primer, word) = parse_input(cli, input)?;
            write_words(out, &enumerate_bounded(&word, &primer, *max_len), cli.json)?;
            Ok(EXIT_OK)
        }
        Command::Member { input, target } => {
            let (alphabet, primer, word) = parse_input(cli, input)?;
            let z = alphabet.word(target)?;
            let found = member(&z, &word, &primer)?;
            if json {
                writeln!(out, "{{\"member\":{found}}}")?;
            } else {
                writeln!(out, "{found}")?;
            }
            Ok(if found { EXIT_OK } else { EXIT_NEGATIVE })
        }
        Command::Witness(input) => {
            let (_, primer, word) = parse_input(cli, input)?;
            let h = analyze(&word, &primer)?;
            let verdict = decide_analyzed(&h)?;
            let Some(witness) = verdict.witness.as_ref() else {
                return Err(Failure::Input(format!(
                    "H*({word}) is regular; non-regularity witnesses do not exist for it"
                )));
            };
            let block = WitnessReport::new(witness);
            if json {
                writeln!(out, "{}", block.to_json())?;
            } else {
                write!(out, "{}", block.to_text())?;
            }
            Ok(EXIT_OK)
        }
        Command::Render { input, dot, nfa } => {
            let (alphabet, primer, word) = parse_input(cli, input)?;
            let h = analyze(&word, &primer)?;
            let verdict = decide_analyzed(&h)?;
            let Some(expr) = verdict.construction.as_ref() else {
                return Err(match verdict.kind {
                    VerdictKind::NonRegular => Failure::Negative(format!(
                        "H*({word}) is not regular; there is no automaton to render"
                    )),
                    VerdictKind::Regular => Failure::Input(format!(
                        "H*({word}) is regular but its construction is external"
                    )),
                });
            };
            let nfa_automaton = compile(expr, &alphabet);
            let automaton = if *nfa {
                nfa_automaton
            } else {
                determinize(&nfa_automaton)
            };
            let text = to_dot(&automaton);
            match dot {
                Some(path) => std::fs::write(path, text)?,
                None => out.write_all(text.as_bytes())?,
            }
            Ok(EXIT_OK)
        }
    }
}
