//! `dyck`: batch command-line front end for `bilateral-dyck`.
//!
//! Words are read from standard input one per line; a blank line is the
//! empty word. Exit status is 0 on success, 1 for bad input, 2 for an
//! internal error and 3 when verification finds a counterexample.

use std::io::{self, BufRead, BufWriter, Write};
use std::process::ExitCode;

use bilateral_dyck::enumerate::{distribution, WordClass, Words};
use bilateral_dyck::render::render_ascii;
use bilateral_dyck::stats::{stat_record, Statistic};
use bilateral_dyck::trace::trace;
use bilateral_dyck::verify::{verify_randomized, Verifier};
use bilateral_dyck::{Bijection, Error, PathWord};
use clap::{Parser, Subcommand, ValueEnum};

const MAX_N: u64 = 30;

#[derive(Parser)]
#[command(
    name = "dyck",
    version,
    about = "Bijections and statistics on Dyck and bilateral Dyck paths"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Apply a map to each input word.
    Map {
        /// phi, psi, alpha, beta, phi-ext or psi-ext.
        #[arg(long)]
        op: Bijection,
        /// Precede each result with its derivation, as `# ` lines.
        #[arg(long)]
        trace: bool,
    },
    /// Print the statistics of each input word.
    Stats {
        #[arg(long, value_enum, default_value_t = StatsFormat::Text)]
        format: StatsFormat,
    },
    /// Print the class of each input word.
    Classify,
    /// List every word of a class and semilength in lexicographic order.
    Enum {
        #[arg(long, value_parser = clap::value_parser!(u64).range(0..=MAX_N))]
        n: u64,
        #[arg(long, default_value = "dyck")]
        class: WordClass,
    },
    /// Count the words of a class and semilength by one or two statistics.
    Table {
        #[arg(long, value_parser = clap::value_parser!(u64).range(0..=MAX_N))]
        n: u64,
        #[arg(long, default_value = "dyck")]
        class: WordClass,
        #[arg(long)]
        stat: Statistic,
        #[arg(long)]
        stat2: Option<Statistic>,
        #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
        format: TableFormat,
    },
    /// Check the bijections exhaustively, and optionally on random words.
    Verify {
        /// Largest Dyck semilength checked.
        #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u64).range(0..=MAX_N))]
        max_n: u64,
        /// Largest bilateral semilength checked; defaults to `--max-n`.
        #[arg(long, value_parser = clap::value_parser!(u64).range(0..=MAX_N))]
        bilateral_max_n: Option<u64>,
        /// Also check uniformly random words.
        #[arg(long)]
        randomized: bool,
        /// Semilength of the random words.
        #[arg(long, default_value_t = 200)]
        random_n: usize,
        #[arg(long, default_value_t = 10_000)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
        jobs: u64,
        #[arg(long, value_enum, default_value_t = StatsFormat::Text)]
        format: StatsFormat,
    },
    /// Draw each input word as ASCII art.
    Render,
}

#[derive(Clone, Copy, ValueEnum)]
enum StatsFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Csv,
    Json,
}

enum Failure {
    Input(String),
    Internal(String),
    Verification(usize),
    Io(io::Error),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

type Outcome = Result<(), Failure>;

/// Describes a rejected input word.
fn input_error(line: usize, e: &Error) -> Failure {
    Failure::Input(match e {
        Error::NotADyckWord(v) => format!("not a Dyck word (line {line}): {v}"),
        Error::NotBilateral { final_height } => {
            format!("not a bilateral word (line {line}): final height {final_height}")
        }
        Error::InvalidCharacter { position, found } => {
            format!("invalid character {found:?} (line {line}, position {position})")
        }
        other => format!("{other} (line {line})"),
    })
}

fn internal(e: Error) -> Failure {
    Failure::Internal(e.to_string())
}

/// Calls `f` on each input word with its 1-based line number.
fn each_word<F>(mut f: F) -> Outcome
where
    F: FnMut(usize, PathWord) -> Outcome,
{
    let stdin = io::stdin().lock();
    for (i, line) in stdin.lines().enumerate() {
        let line = line?;
        let text = line.strip_suffix('\r').unwrap_or(&line);
        let w = PathWord::parse(text.trim()).map_err(|e| input_error(i + 1, &e))?;
        f(i + 1, w)?;
    }
    Ok(())
}

fn run_map(out: &mut impl Write, op: Bijection, with_trace: bool) -> Outcome {
    each_word(|line, w| {
        let domain = if op.dyck_only() {
            w.require_dyck()
        } else {
            w.require_bilateral()
        };
        domain.map_err(|e| input_error(line, &e))?;
        if with_trace {
            for t in trace(&w, op).map_err(internal)? {
                writeln!(out, "# {t}")?;
            }
        }
        writeln!(out, "{}", op.apply(&w).map_err(internal)?)?;
        Ok(())
    })
}

fn run_stats(out: &mut impl Write, format: StatsFormat) -> Outcome {
    each_word(|line, w| {
        let r = stat_record(&w).map_err(|e| input_error(line, &e))?;
        match format {
            StatsFormat::Text => writeln!(out, "{}", r.to_key_value())?,
            StatsFormat::Json => {
                let json =
                    serde_json::to_string(&r).map_err(|e| Failure::Internal(e.to_string()))?;
                writeln!(out, "{json}")?;
            }
        }
        Ok(())
    })
}

fn run_render(out: &mut impl Write) -> Outcome {
    let mut first = true;
    each_word(|line, w| {
        let rows = render_ascii(&w).map_err(|e| input_error(line, &e))?;
        if !first {
            writeln!(out)?;
        }
        first = false;
        for r in rows {
            writeln!(out, "{r}")?;
        }
        Ok(())
    })
}

#[allow(clippy::too_many_arguments)]
fn run_verify(
    out: &mut impl Write,
    max_n: usize,
    bilateral_max_n: usize,
    randomized: bool,
    random_n: usize,
    trials: usize,
    seed: u64,
    jobs: usize,
    format: StatsFormat,
) -> Outcome {
    let mut report = Verifier::new(jobs).all(max_n, bilateral_max_n);
    if randomized {
        report.extend(verify_randomized(random_n, trials, seed));
    }
    match format {
        StatsFormat::Text => writeln!(out, "{report}")?,
        StatsFormat::Json => {
            let json =
                serde_json::to_string(&report).map_err(|e| Failure::Internal(e.to_string()))?;
            writeln!(out, "{json}")?;
        }
    }
    if report.passed() {
        Ok(())
    } else {
        Err(Failure::Verification(report.failures().count()))
    }
}

fn run(command: Command, out: &mut impl Write) -> Outcome {
    match command {
        Command::Map { op, trace } => run_map(out, op, trace),
        Command::Stats { format } => run_stats(out, format),
        Command::Classify => each_word(|_, w| Ok(writeln!(out, "{}", w.classify())?)),
        Command::Enum { n, class } => {
            for w in Words::new(class, n as usize) {
                writeln!(out, "{w}")?;
            }
            Ok(())
        }
        Command::Table {
            n,
            class,
            stat,
            stat2,
            format,
        } => {
            let table = distribution(class, n as usize, stat, stat2).map_err(internal)?;
            match format {
                TableFormat::Csv => write!(out, "{}", table.to_csv())?,
                TableFormat::Json => {
                    let json = serde_json::to_string(&table)
                        .map_err(|e| Failure::Internal(e.to_string()))?;
                    writeln!(out, "{json}")?;
                }
            }
            Ok(())
        }
        Command::Verify {
            max_n,
            bilateral_max_n,
            randomized,
            random_n,
            trials,
            seed,
            jobs,
            format,
        } => run_verify(
            out,
            max_n as usize,
            bilateral_max_n.unwrap_or(max_n) as usize,
            randomized,
            random_n,
            trials,
            seed,
            jobs as usize,
            format,
        ),
        Command::Render => run_render(out),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            // Bad flags are a validation error like any other bad input.
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let stdout = io::stdout().lock();
    let mut out = BufWriter::new(stdout);
    let result = run(cli.command, &mut out).and_then(|()| out.flush().map_err(Failure::Io));
    // Whatever was produced before a failure still goes out.
    let _ = out.flush();
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Io(e)) => {
            eprintln!("dyck: {e}");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Verification(failed)) => {
            eprintln!("verification failed: {failed} check(s) with counterexamples");
            ExitCode::from(3)
        }
    }
}
