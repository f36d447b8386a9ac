//! `cutgroups`: analyze permutation groups, export character tables and run
//! the corpus verification suites.
//!
//! Exit status: 0 when every selected check passes or is skipped, 1 when a
//! check fails or a computation errors, 2 for usage and input errors.

use std::fmt::Write as _;
use std::io::Write as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use cutgroups::chartable::{character_table, CharacterTable};
use cutgroups::corpus::io::{load_fixture, load_group};
use cutgroups::corpus::{builtin, builtin_names, default_corpus};
use cutgroups::verify::{analyze, verify_corpus, Suite, VerifyOptions, DEFAULT_TABLE_CAP};
use cutgroups::{Error, PermGroup};

#[derive(Parser, Debug)]
#[command(
    name = "cutgroups",
    version,
    about = "Cut groups of odd order: analysis and verification"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Worker threads for verification (0 picks the number of cores).
    #[arg(long, default_value_t = 0, global = true)]
    jobs: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Cut verdicts and a structure summary for one group.
    Analyze {
        /// A JSON group file, `builtin:NAME` or `fixture:NAME`.
        group: String,
    },
    /// Exact character table export.
    Chartable { group: String },
    /// Run verification suites over the default corpus.
    Verify {
        /// Only groups of at most this order.
        #[arg(long)]
        max_order: Option<u128>,
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        /// Largest order given a full character table.
        #[arg(long, default_value_t = DEFAULT_TABLE_CAP)]
        table_cap: u128,
        /// Record per-group wall-clock times (makes output run-dependent).
        #[arg(long)]
        timings: bool,
    },
    /// Corpus utilities.
    Corpus {
        #[command(subcommand)]
        action: CorpusAction,
    },
}

#[derive(Subcommand, Debug)]
enum CorpusAction {
    /// Names, orders and families of the built-in groups.
    List,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    Theorem,
    Trichotomy,
    Proof,
    Equivalence,
    All,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Suite {
        match s {
            SuiteArg::Theorem => Suite::Theorem,
            SuiteArg::Trichotomy => Suite::Trichotomy,
            SuiteArg::Proof => Suite::Proof,
            SuiteArg::Equivalence => Suite::Equivalence,
            SuiteArg::All => Suite::All,
        }
    }
}

enum Failure {
    Usage(String),
    Computation(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Computation(e)
    }
}

fn resolve(source: &str) -> Result<(String, PermGroup), Failure> {
    let loaded = if let Some(name) = source.strip_prefix("builtin:") {
        builtin(name).map(|e| (e.name, e.group))
    } else if let Some(name) = source.strip_prefix("fixture:") {
        load_fixture(name).map(|g| (g.name, g.group))
    } else {
        load_group(source).map(|g| (g.name, g.group))
    };
    loaded.map_err(|e| Failure::Usage(format!("cannot load {source:?}: {e}")))
}

fn table_text(table: &CharacterTable) -> String {
    let classes = table.classes();
    let mut out = format!(
        "character table: order {}, {} classes, conductor {}, prime {}\n",
        table.group().order(),
        table.len(),
        table.exponent(),
        table.prime()
    );
    let header: Vec<String> = classes
        .classes()
        .iter()
        .map(|c| format!("{}[{}]", c.element_order, c.size))
        .collect();
    let _ = writeln!(out, "classes (order[size]): {}", header.join(" "));
    for (i, chi) in table.characters().iter().enumerate() {
        let _ = writeln!(out, "chi_{i}: {chi}");
    }
    out
}

/// Writes to stdout, treating a closed pipe as success.
fn emit(text: &str) {
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(text.as_bytes()).and_then(|_| out.flush());
}

fn run(cli: Cli) -> Result<bool, Failure> {
    let json = cli.format == Format::Json;
    match cli.command {
        Command::Analyze { group } => {
            let (name, g) = resolve(&group)?;
            let a = analyze(&name, &g)?;
            if json {
                emit(&(serde_json::to_string_pretty(&a).expect("analysis serializes") + "\n"));
            } else {
                emit(&a.to_text());
            }
            Ok(true)
        }
        Command::Chartable { group } => {
            let (_, g) = resolve(&group)?;
            let table = character_table(&g)?;
            if json {
                emit(
                    &(serde_json::to_string_pretty(&table.to_json()).expect("table serializes")
                        + "\n"),
                );
            } else {
                emit(&table_text(&table));
            }
            Ok(true)
        }
        Command::Verify {
            max_order,
            suite,
            table_cap,
            timings,
        } => {
            let corpus = default_corpus(max_order)?;
            let options = VerifyOptions {
                suite: suite.into(),
                table_cap,
                include_timings: timings,
                jobs: cli.jobs,
            };
            let report = verify_corpus(&corpus, &options)?;
            if json {
                emit(&(report.to_json_pretty() + "\n"));
            } else {
                emit(&report.to_text());
            }
            Ok(report.all_passed())
        }
        Command::Corpus {
            action: CorpusAction::List,
        } => {
            let entries: Vec<_> = builtin_names()
                .into_iter()
                .map(builtin)
                .collect::<Result<_, _>>()?;
            if json {
                let list: Vec<_> = entries
                    .iter()
                    .map(|e| {
                        serde_json::json!({
                            "name": e.name,
                            "order": e.group.order() as u64,
                            "degree": e.group.degree(),
                            "family": e.family,
                            "params": e.params,
                        })
                    })
                    .collect();
                emit(&(serde_json::to_string_pretty(&list).expect("list serializes") + "\n"));
            } else {
                let mut text = String::new();
                for e in &entries {
                    let _ = writeln!(
                        text,
                        "{:<24} {:>6}  {:<22} {}",
                        e.name,
                        e.group.order(),
                        e.family,
                        e.params
                    );
                }
                emit(&text);
            }
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Computation(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
