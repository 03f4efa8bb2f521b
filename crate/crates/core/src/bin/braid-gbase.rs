use std::fs;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use braid_gbase::bench::{run_bench, BenchConfig, CSV_HEADER};
use braid_gbase::{is_identity, normal_form, words_equal, ArtinOracle, BraidWord, Error};
use clap::{Args, Parser, Subcommand};

/// Decide equality of braid words by acting on the standard g-base.
#[derive(Parser)]
#[command(name = "braid-gbase", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Strands {
    /// Number of strands n; generators are 1..n-1.
    #[arg(long)]
    strands: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Print the reduced g-base list of a word.
    NormalForm {
        #[command(flatten)]
        strands: Strands,
        #[arg(allow_hyphen_values = true, required_unless_present = "file")]
        word: Option<String>,
        /// Read one word per line.
        #[arg(long, conflicts_with = "word")]
        file: Option<PathBuf>,
    },
    /// Compare two words through their normal forms.
    Equal(PairArgs),
    /// Test whether a word is the identity braid.
    Identity {
        #[command(flatten)]
        strands: Strands,
        #[arg(allow_hyphen_values = true, required_unless_present = "file")]
        word: Option<String>,
        #[arg(long, conflicts_with = "word")]
        file: Option<PathBuf>,
    },
    /// Compare two words through the Artin action on the free group.
    OracleEqual {
        #[command(flatten)]
        pair: PairArgs,
        /// Largest free-group image allowed before giving up.
        #[arg(long, default_value_t = braid_gbase::oracle::DEFAULT_SYLLABLE_LIMIT)]
        syllable_limit: usize,
    },
    /// Process seeded random words and print CSV statistics.
    Bench {
        #[command(flatten)]
        strands: Strands,
        #[arg(long)]
        length: usize,
        #[arg(long)]
        count: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        /// Write 0 for time_ns so output is byte-identical across runs.
        #[arg(long)]
        no_time: bool,
    },
}

#[derive(Args)]
struct PairArgs {
    #[command(flatten)]
    strands: Strands,
    #[arg(allow_hyphen_values = true, required_unless_present = "file")]
    first: Option<String>,
    #[arg(allow_hyphen_values = true, required_unless_present = "file")]
    second: Option<String>,
    /// Read `w1,w2` pairs, one per line.
    #[arg(long, conflicts_with_all = ["first", "second"])]
    file: Option<PathBuf>,
}

#[derive(Debug)]
enum CliError {
    Solver(Error),
    Io(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Solver(e)
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Solver(e) => write!(f, "{e}"),
            CliError::Io(e) => write!(f, "{e}"),
        }
    }
}

fn read_lines(path: &PathBuf) -> Result<Vec<String>, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    Ok(text.lines().map(str::to_string).collect())
}

fn word_inputs(word: Option<String>, file: Option<PathBuf>) -> Result<Vec<String>, CliError> {
    match file {
        Some(path) => read_lines(&path),
        None => Ok(vec![word.unwrap_or_default()]),
    }
}

fn pair_inputs(pair: PairArgs) -> Result<Vec<(String, String)>, CliError> {
    match pair.file {
        Some(path) => read_lines(&path)?
            .into_iter()
            .enumerate()
            .map(|(k, line)| {
                line.split_once(',')
                    .map(|(a, b)| (a.to_string(), b.to_string()))
                    .ok_or_else(|| CliError::Io(format!("line {}: expected `w1,w2`", k + 1)))
            })
            .collect(),
        None => Ok(vec![(
            pair.first.unwrap_or_default(),
            pair.second.unwrap_or_default(),
        )]),
    }
}

fn verdicts(out: &mut impl Write, results: &[bool]) -> Result<ExitCode, CliError> {
    for &v in results {
        writeln!(out, "{v}")?;
    }
    Ok(if results.iter().all(|&v| v) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let code = match cli.command {
        Command::NormalForm { strands, word, file } => {
            for text in word_inputs(word, file)? {
                let w = BraidWord::parse(&text, strands.strands)?;
                writeln!(out, "{}", normal_form(&w)?)?;
            }
            ExitCode::SUCCESS
        }
        Command::Identity { strands, word, file } => {
            let results = word_inputs(word, file)?
                .iter()
                .map(|text| is_identity(&BraidWord::parse(text, strands.strands)?))
                .collect::<Result<Vec<_>, Error>>()?;
            verdicts(&mut out, &results)?
        }
        Command::Equal(pair) => {
            let n = pair.strands.strands;
            let results = pair_inputs(pair)?
                .iter()
                .map(|(a, b)| words_equal(&BraidWord::parse(a, n)?, &BraidWord::parse(b, n)?))
                .collect::<Result<Vec<_>, Error>>()?;
            verdicts(&mut out, &results)?
        }
        Command::OracleEqual { pair, syllable_limit } => {
            let n = pair.strands.strands;
            let oracle = ArtinOracle::new(syllable_limit);
            let results = pair_inputs(pair)?
                .iter()
                .map(|(a, b)| oracle.equal(&BraidWord::parse(a, n)?, &BraidWord::parse(b, n)?))
                .collect::<Result<Vec<_>, Error>>()?;
            verdicts(&mut out, &results)?
        }
        Command::Bench {
            strands,
            length,
            count,
            seed,
            workers,
            no_time,
        } => {
            let rows = run_bench(&BenchConfig {
                strand_count: strands.strands,
                length,
                count,
                seed,
                workers,
            })?;
            writeln!(out, "{CSV_HEADER}")?;
            for row in rows {
                writeln!(out, "{}", row.to_csv(!no_time))?;
            }
            ExitCode::SUCCESS
        }
    };
    out.flush()?;
    Ok(code)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
