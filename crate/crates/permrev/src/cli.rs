//! The `permrev` command line.
//!
//! Exit codes: 0 success or pass, 1 usage or I/O error, 2 verification
//! failure, 3 capacity exceeded. A path of `-` means stdin or stdout.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use permrev_core::minimize::{asc, minimize};
use permrev_core::reversal::{reverse_dfa, reverse_step, reverse_word, DEFAULT_MAX_REVERSE_STATES};
use permrev_core::spectrum::{magic_one_probe, spectrum_table, RowOutcome};
use permrev_core::witness::{
    build_witness_capped, classify_reverse_states, relabel_stars, star_subset, subset_star_center, verify_witness_with,
    WitnessCaps, WitnessParams, WitnessReport, DEFAULT_WITNESS_STATE_CAP,
};
use permrev_core::{Dfa, SubsetState, Word};
use thiserror::Error;

use crate::dot::emit_dot;
use crate::report::to_json;
use crate::text::{emit_dfa, parse_dfa, ParseError};

/// Seed used by `probe-magic-one` when `--seed` is not given.
pub const DEFAULT_SEED: u64 = 20_250_101;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_FAIL: i32 = 2;
pub const EXIT_CAPACITY: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "permrev", version, about = "Reversal and accepting-state complexity of permutation automata")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build the witness automaton A(m, alpha)
    Witness {
        m: usize,
        alpha: usize,
        #[arg(long, default_value = "-")]
        out: PathBuf,
        /// Also write a Graphviz rendering
        #[arg(long)]
        dot: Option<PathBuf>,
        /// Emit the reverse automaton with states labeled by stars instead
        #[arg(long)]
        reverse: bool,
        #[arg(long, default_value_t = DEFAULT_WITNESS_STATE_CAP)]
        max_states: usize,
    },
    /// Reverse subset construction, reachable part only
    Reverse {
        input: PathBuf,
        #[arg(long, default_value = "-")]
        out: PathBuf,
        #[arg(long)]
        dot: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_MAX_REVERSE_STATES)]
        max_states: usize,
    },
    /// Canonical minimal DFA
    Minimize {
        input: PathBuf,
        #[arg(long, default_value = "-")]
        out: PathBuf,
    },
    /// Print the accepting-state complexity of the language
    Asc { input: PathBuf },
    /// Check every predicted property of A(m, alpha)
    Verify {
        m: usize,
        alpha: usize,
        #[arg(long)]
        json: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_MAX_REVERSE_STATES)]
        max_states: usize,
    },
    /// Check asc pairs over a grid of witnesses plus the one-state rows
    Spectrum {
        #[arg(long)]
        m_max: usize,
        #[arg(long)]
        alpha_max: usize,
        #[arg(long)]
        json: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_MAX_REVERSE_STATES)]
        max_states: usize,
    },
    /// Sample random binary permutation automata with asc >= 2 and look for reverse asc 1
    ProbeMagicOne {
        #[arg(long, default_value_t = 6)]
        n_max: usize,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Trace the reverse of A(3, 4) star by star
    Example,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io { path: String, source: io::Error },
    #[error("{path}: {source}")]
    Parse { path: String, source: ParseError },
    /// A computed result contradicts the expected structure.
    #[error("{0}")]
    Check(String),
    #[error(transparent)]
    Core(#[from] permrev_core::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(permrev_core::Error::CapacityExceeded { .. }) => EXIT_CAPACITY,
            CliError::Check(_) => EXIT_FAIL,
            _ => EXIT_USAGE,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail,
    /// Some grid rows were skipped at a capacity limit; none failed.
    Partial,
}

impl Outcome {
    pub fn exit_code(self) -> i32 {
        match self {
            Outcome::Pass => EXIT_OK,
            Outcome::Fail => EXIT_FAIL,
            Outcome::Partial => EXIT_CAPACITY,
        }
    }
}

type CliResult<T = Outcome> = Result<T, CliError>;

fn display_path(path: &Path) -> String {
    path.display().to_string()
}

fn read_input(path: &Path) -> CliResult<String> {
    let io_err = |source| CliError::Io { path: display_path(path), source };
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(io_err)?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(io_err)
    }
}

fn read_dfa(path: &Path) -> CliResult<Dfa> {
    parse_dfa(&read_input(path)?).map_err(|source| CliError::Parse { path: display_path(path), source })
}

fn write_output(path: &Path, text: &str, out: &mut dyn Write) -> CliResult<()> {
    let res = if path.as_os_str() == "-" { out.write_all(text.as_bytes()) } else { fs::write(path, text) };
    res.map_err(|source| CliError::Io { path: display_path(path), source })
}

fn print(out: &mut dyn Write, text: std::fmt::Arguments<'_>) -> CliResult<()> {
    out.write_fmt(text).map_err(|source| CliError::Io { path: "-".into(), source })
}

macro_rules! say {
    ($out:expr, $($arg:tt)*) => { print($out, format_args!("{}\n", format_args!($($arg)*)))? };
}

/// Parses `args` (program name first) and runs the command, printing to
/// `out` and `err`. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(outcome) => outcome.exit_code(),
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

pub fn execute(command: Command, out: &mut dyn Write) -> CliResult {
    match command {
        Command::Witness { m, alpha, out: path, dot, reverse, max_states } => {
            let params = WitnessParams::new(m, alpha)?;
            let mut dfa = build_witness_capped(&params, max_states)?;
            if reverse {
                let rev = reverse_dfa(&dfa, DEFAULT_MAX_REVERSE_STATES)?;
                let cls = classify_reverse_states(&dfa, &params, &rev)
                    .map_err(|e| CliError::Check(format!("reverse states are not stars: {e}")))?;
                dfa = relabel_stars(&rev, &cls);
            }
            write_output(&path, &emit_dfa(&dfa), out)?;
            if let Some(dot) = dot {
                write_output(&dot, &emit_dot(&dfa), out)?;
            }
            Ok(Outcome::Pass)
        }
        Command::Reverse { input, out: path, dot, max_states } => {
            let rev = reverse_dfa(&read_dfa(&input)?, max_states)?;
            write_output(&path, &emit_dfa(&rev), out)?;
            if let Some(dot) = dot {
                write_output(&dot, &emit_dot(&rev), out)?;
            }
            Ok(Outcome::Pass)
        }
        Command::Minimize { input, out: path } => {
            write_output(&path, &emit_dfa(&minimize(&read_dfa(&input)?)), out)?;
            Ok(Outcome::Pass)
        }
        Command::Asc { input } => {
            say!(out, "{}", asc(&read_dfa(&input)?));
            Ok(Outcome::Pass)
        }
        Command::Verify { m, alpha, json, max_states } => {
            let params = WitnessParams::new(m, alpha)?;
            let caps = WitnessCaps { max_reverse_states: max_states, ..WitnessCaps::default() };
            let report = verify_witness_with(&params, caps)?;
            print_witness_report(&report, out)?;
            if let Some(json) = json {
                write_output(&json, &to_json("witness", &report), out)?;
            }
            Ok(if report.passed() { Outcome::Pass } else { Outcome::Fail })
        }
        Command::Spectrum { m_max, alpha_max, json, max_states } => {
            if m_max < 2 || alpha_max < 2 {
                return Err(CliError::Usage("spectrum needs --m-max >= 2 and --alpha-max >= 2".into()));
            }
            let caps = WitnessCaps { max_reverse_states: max_states, ..WitnessCaps::default() };
            let report = spectrum_table(2..=m_max, 2..=alpha_max, caps);
            for row in &report.trivial_rows {
                let verdict = if row.pass { "pass" } else { "FAIL" };
                say!(
                    out,
                    "m={} ({}): asc pair ({},{}) {verdict}",
                    row.m,
                    row.language,
                    row.asc_forward,
                    row.asc_reverse
                );
            }
            for row in &report.rows {
                match &row.outcome {
                    RowOutcome::Computed { asc_forward, asc_reverse, pass } => {
                        let verdict = if *pass { "pass" } else { "FAIL" };
                        say!(out, "m={} alpha={}: asc pair ({asc_forward},{asc_reverse}) {verdict}", row.m, row.alpha);
                    }
                    RowOutcome::Skipped { reason } => say!(out, "m={} alpha={}: skipped ({reason})", row.m, row.alpha),
                }
            }
            say!(out, "failed: {}, skipped: {}", report.failed, report.skipped);
            say!(out, "note: {}", report.limitation);
            if let Some(json) = json {
                write_output(&json, &to_json("spectrum", &report), out)?;
            }
            Ok(match (report.failed, report.skipped) {
                (0, 0) => Outcome::Pass,
                (0, _) => Outcome::Partial,
                _ => Outcome::Fail,
            })
        }
        Command::ProbeMagicOne { n_max, samples, seed, json } => {
            let probe = magic_one_probe(n_max, samples, seed)?;
            say!(
                out,
                "examined {} automata with asc >= 2 (n <= {n_max}, seed {seed}, {} draws)",
                probe.examined,
                probe.draws
            );
            if probe.unsatisfied_samples > 0 {
                say!(out, "samples without an asc >= 2 automaton: {}", probe.unsatisfied_samples);
            }
            for ((f, r), count) in &probe.histogram {
                say!(out, "  asc pair ({f},{r}): {count}");
            }
            say!(out, "reverse asc 1 found: {}", probe.counterexamples.len());
            for c in &probe.counterexamples {
                say!(out, "counterexample:");
                print(out, format_args!("{}", emit_dfa(&c.to_dfa()?)))?;
            }
            say!(
                out,
                "asc 1 automata checked: {}, reverse asc != 1: {}",
                probe.asc_one_checked,
                probe.asc_one_violations.len()
            );
            say!(out, "note: {}", probe.limitation);
            if let Some(json) = json {
                write_output(&json, &to_json("magic_one_probe", &probe), out)?;
            }
            Ok(if probe.passed() { Outcome::Pass } else { Outcome::Fail })
        }
        Command::Example => example(out),
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "minimal"
    } else {
        "not minimal"
    }
}

fn print_witness_report(r: &WitnessReport, out: &mut dyn Write) -> CliResult<()> {
    say!(out, "A({},{}) over n = {}", r.params.m, r.params.alpha, r.n);
    say!(out, "forward: {} states, {} finals, {}", r.forward_states, r.forward_finals, yes_no(r.forward_minimal));
    say!(out, "reverse: {} states, {} finals, {}", r.reverse_states, r.reverse_finals, yes_no(r.reverse_minimal));
    say!(out, "asc pair: ({},{})", r.asc_forward, r.asc_reverse);
    say!(out, "accepting stars:");
    for s in &r.accepting_stars {
        say!(out, "  {s}");
    }
    if let Some(detail) = &r.star_mismatch {
        say!(out, "star check: {detail}");
    }
    match r.failure {
        None => say!(out, "result: PASS"),
        Some(check) => say!(out, "result: FAIL ({check})"),
    }
    Ok(())
}

fn star_name(params: &WitnessParams, s: &SubsetState, step: &str) -> CliResult<String> {
    subset_star_center(params, s)
        .map(|c| format!("S({c})"))
        .ok_or_else(|| CliError::Check(format!("{step} does not lead to a star")))
}

fn example(out: &mut dyn Write) -> CliResult {
    let params = WitnessParams::new(3, 4)?;
    let fwd = build_witness_capped(&params, DEFAULT_WITNESS_STATE_CAP)?;
    let start_star = star_subset(&params, &params.final_center())?;
    let start_name = star_name(&params, &start_star, "the final set")?;
    say!(out, "A(3,4): {} states, start {}, finals {}", fwd.num_states(), params.initial_state(), start_name);

    let mut chain = vec![start_name.clone()];
    let mut cur = start_star.clone();
    for _ in 0..5 {
        cur = reverse_step(&fwd, &cur, 0)?;
        chain.push(star_name(&params, &cur, "an a-step")?);
    }
    say!(out, "a-steps: {}", chain.join(" -> "));
    let b_name = star_name(&params, &reverse_step(&fwd, &cur, 1)?, "the b-step")?;
    say!(out, "b-step: {} -> {b_name}", chain[5]);
    let mixed = reverse_word(&fwd, &start_star, &Word::from_letters("aabaaaa")?)?;
    say!(out, "a^2 b a^4: {start_name} -> {}", star_name(&params, &mixed, "a^2 b a^4")?);

    let report = verify_witness_with(&params, WitnessCaps::default())?;
    say!(out, "accepting stars:");
    for s in &report.accepting_stars {
        say!(out, "  {s}");
    }
    say!(out, "reverse: {} states, {} finals", report.reverse_states, report.reverse_finals);
    say!(out, "asc pair: ({},{})", report.asc_forward, report.asc_reverse);
    Ok(if report.passed() { Outcome::Pass } else { Outcome::Fail })
}
