//! Command-line front end. Each subcommand maps one input (an argument, or
//! each line of standard input) to one line of JSON on stdout; failures go
//! to stderr as JSON. Exit codes: 0 success, 1 inconclusive or failing
//! result under `--strict`, 2 input error.

use std::io::{BufRead, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::burau::rho;
use crate::classical::normal_form_c;
use crate::criteria::{classical_criterion_b4, degree_bound_report, dual_criterion_b4, kernel_exclusion};
use crate::dual::normal_form_d;
use crate::error::{Error, Result};
use crate::fixtures::{fixtures, run_fixture};
use crate::laurent::BurauMatrix;
use crate::random::{random_simply_nested, random_word, rng_from_seed};
use crate::recovery::dual_nf_from_matrix;
use crate::words::BraidWord;

#[derive(Debug, Parser)]
#[command(name = "garside-burau", version, about = "Garside normal forms and the reduced Burau representation of braids")]
pub struct Cli {
    /// Pretty-print instead of emitting one JSON object per line.
    #[arg(long, global = true)]
    pub pretty: bool,
    /// Exit with status 1 when a result is inconclusive or a fixture fails.
    #[arg(long, global = true)]
    pub strict: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct WordInput {
    /// Braid word such as `s1 s2^-1 a1,3 d^2 D`; read line by line from
    /// standard input when absent.
    pub word: Option<String>,
    /// Number of strands.
    #[arg(short, long)]
    pub n: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CriterionArg {
    ClassicalB4,
    DualB4,
    KernelExclusion,
    DegreeBound,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Left normal form in the classical or dual Garside structure.
    Nf {
        #[command(flatten)]
        input: WordInput,
        #[arg(long, conflicts_with = "dual")]
        classical: bool,
        /// The default.
        #[arg(long)]
        dual: bool,
    },
    /// Reduced Burau matrix with its degree statistics.
    Burau {
        #[command(flatten)]
        input: WordInput,
    },
    /// Non-vanishing criterion or degree-bound report.
    Check {
        #[command(flatten)]
        input: WordInput,
        #[arg(long, value_enum)]
        criterion: CriterionArg,
    },
    /// Dual normal form recovered from a Burau matrix given as JSON
    /// `{"n":..,"entries":[[{"lo":..,"coeffs":[..]},..],..]}`.
    Recover {
        /// Matrix JSON, or a braid word with `--via-burau`.
        input: Option<String>,
        #[arg(short, long)]
        n: usize,
        /// Treat the input as a word and recover from its Burau matrix.
        #[arg(long)]
        via_burau: bool,
        /// Include the reconstruction trace.
        #[arg(long)]
        trace: bool,
    },
    /// Seeded random braid word.
    Random {
        #[arg(short, long)]
        n: usize,
        /// Letters, or normal-form factors with `--simply-nested`.
        #[arg(short, long)]
        length: usize,
        #[arg(long, env = "GARSIDE_BURAU_SEED", default_value_t = 0)]
        seed: u64,
        /// Sample a simply-nested dual normal form instead of a word.
        #[arg(long)]
        simply_nested: bool,
    },
    /// Built-in braids with stored expectations.
    Fixtures {
        /// Evaluate every fixture instead of listing them.
        #[arg(long)]
        run: bool,
    },
}

/// Result of one input.
#[derive(Debug, Clone)]
pub struct Output {
    pub json: Value,
    pub text: String,
    /// Inconclusive verdict or failing fixture.
    pub negative: bool,
}

impl Output {
    fn new(value: impl Serialize, text: String) -> Output {
        Output { json: serde_json::to_value(value).expect("serializable"), text, negative: false }
    }
}

fn parse_word(text: &str, n: usize) -> Result<BraidWord> {
    BraidWord::parse(text.trim(), n)
}

pub fn cmd_nf(word: &str, n: usize, classical: bool) -> Result<Output> {
    let w = parse_word(word, n)?;
    Ok(if classical {
        let nf = normal_form_c(&w);
        let text = format!(
            "Δ^{} {}",
            nf.p,
            nf.factors.iter().map(|s| format!("({s})")).collect::<Vec<_>>().join(" ")
        );
        Output::new(&nf, text)
    } else {
        let nf = normal_form_d(&w);
        let text = format!(
            "δ^{} {}",
            nf.p,
            nf.factors.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(" ")
        );
        Output::new(&nf, text)
    })
}

pub fn cmd_burau(word: &str, n: usize) -> Result<Output> {
    let w = parse_word(word, n)?;
    let m = rho(&w);
    let stats = m.stats();
    let json = json!({
        "n": n,
        "word": w.to_string(),
        "matrix": m,
        "min_deg": stats.min_deg,
        "max_deg": stats.max_deg,
        "row_max": m.row_maxima(),
        "col_max": m.col_maxima(),
        "det": m.det(),
        "exponent_sum": w.exponent_sum(),
    });
    let text = format!(
        "{m}\nmin_deg {} max_deg {} det {} e {}",
        stats.min_deg,
        stats.max_deg,
        m.det(),
        w.exponent_sum()
    );
    Ok(Output { json, text, negative: false })
}

pub fn cmd_check(word: &str, n: usize, criterion: CriterionArg) -> Result<Output> {
    let w = parse_word(word, n)?;
    let verdict = match criterion {
        CriterionArg::ClassicalB4 => classical_criterion_b4(&w)?,
        CriterionArg::DualB4 => dual_criterion_b4(&w)?,
        CriterionArg::KernelExclusion => kernel_exclusion(&w),
        CriterionArg::DegreeBound => {
            let report = degree_bound_report(&w);
            let text = format!(
                "M(ρ) = {} ≤ sup_d = {}: {}",
                report.max_deg, report.sup_d, report.bound_holds
            );
            let negative = !report.bound_holds;
            return Ok(Output { negative, ..Output::new(&report, text) });
        }
    };
    let text = format!("{:?}: {:?}", verdict.criterion, verdict.conclusion);
    Ok(Output { negative: !verdict.is_guaranteed(), ..Output::new(&verdict, text) })
}

pub fn cmd_recover(input: &str, n: usize, via_burau: bool, trace: bool) -> Result<Output> {
    let m = if via_burau {
        rho(&parse_word(input, n)?)
    } else {
        serde_json::from_str::<BurauMatrix>(input).map_err(|e| Error::Input(e.to_string()))?
    };
    let (nf, tr) = dual_nf_from_matrix(&m, n)?;
    let mut json = json!({ "nf": nf, "sup": nf.sup(), "word": nf.to_word().to_string() });
    if trace {
        json["trace"] = serde_json::to_value(&tr).expect("serializable");
    }
    let text = format!("δ^{} {}", nf.p, nf.factors.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(" "));
    Ok(Output { json, text, negative: false })
}

pub fn cmd_random(n: usize, length: usize, seed: u64, simply_nested: bool) -> Result<Output> {
    let w = if simply_nested {
        random_simply_nested(n, length, seed)?
    } else {
        BraidWord::identity(n)?;
        random_word(n, length, &mut rng_from_seed(seed))
    };
    let text = w.to_string();
    Ok(Output::new(&w, text))
}

pub fn cmd_fixtures(run: bool) -> Vec<Output> {
    fixtures()
        .iter()
        .map(|f| {
            if run {
                let report = run_fixture(f);
                let text = format!(
                    "{} {}{}",
                    if report.passed { "PASS" } else { "FAIL" },
                    report.name,
                    report.checks.iter().map(|c| format!(" {}={}", c.name, c.passed)).collect::<String>()
                );
                Output { negative: !report.passed, ..Output::new(&report, text) }
            } else {
                let json = json!({ "name": f.name, "n": f.n, "word": f.word.to_string() });
                Output { json, text: format!("{} (B_{}): {}", f.name, f.n, f.word), negative: false }
            }
        })
        .collect()
}

fn error_json(e: &Error, line: Option<usize>) -> Value {
    let mut v = json!({ "error": e.kind(), "message": e.to_string() });
    if let Some(l) = line {
        v["line"] = json!(l);
    }
    v
}

/// Runs `f` on the argument, or on every non-blank line of `stdin` in
/// parallel with output in input order.
fn per_input(
    arg: Option<&str>,
    stdin: &mut dyn BufRead,
    f: impl Fn(&str) -> Result<Output> + Sync,
) -> Vec<(Option<usize>, Result<Output>)> {
    match arg {
        Some(a) => vec![(None, f(a))],
        None => {
            let lines: Vec<(usize, String)> = stdin
                .lines()
                .map_while(std::io::Result::ok)
                .enumerate()
                .filter(|(_, l)| !l.trim().is_empty())
                .map(|(i, l)| (i + 1, l))
                .collect();
            lines.par_iter().map(|(i, l)| (Some(*i), f(l))).collect()
        }
    }
}

/// Executes a parsed command line; returns the exit code.
pub fn execute(cli: &Cli, stdin: &mut dyn BufRead, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let results: Vec<(Option<usize>, Result<Output>)> = match &cli.command {
        Command::Nf { input, classical, .. } => {
            per_input(input.word.as_deref(), stdin, |w| cmd_nf(w, input.n, *classical))
        }
        Command::Burau { input } => per_input(input.word.as_deref(), stdin, |w| cmd_burau(w, input.n)),
        Command::Check { input, criterion } => {
            per_input(input.word.as_deref(), stdin, |w| cmd_check(w, input.n, *criterion))
        }
        Command::Recover { input, n, via_burau, trace } => {
            per_input(input.as_deref(), stdin, |s| cmd_recover(s, *n, *via_burau, *trace))
        }
        Command::Random { n, length, seed, simply_nested } => {
            vec![(None, cmd_random(*n, *length, *seed, *simply_nested))]
        }
        Command::Fixtures { run } => cmd_fixtures(*run).into_iter().map(|o| (None, Ok(o))).collect(),
    };
    let (mut failed, mut negative) = (false, false);
    for (line, r) in results {
        let written = match r {
            Ok(o) => {
                negative |= o.negative;
                if cli.pretty {
                    writeln!(out, "{}", o.text)
                } else {
                    writeln!(out, "{}", o.json)
                }
            }
            Err(e) => {
                failed = true;
                writeln!(err, "{}", error_json(&e, line))
            }
        };
        if written.is_err() {
            return 2;
        }
    }
    if failed {
        2
    } else if cli.strict && negative {
        1
    } else {
        0
    }
}

/// Entry point of the binary.
pub fn main() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let stdin = std::io::stdin();
    execute(&cli, &mut stdin.lock(), &mut std::io::stdout().lock(), &mut std::io::stderr().lock())
}
