//! `foursq`: construct, verify, prove and search four-square triples.
//!
//! Exit codes: 0 success, 1 verification or proof failure, 2 usage error.

mod render;

use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use foursq::certify::verify_four;
use foursq::family::{make_companion, make_main, TripleCandidate};
use foursq::record::{
    parse_int, GenPayload, OracleCheck, OutputRecord, SearchPayload, SeqPayload, SeqValue,
    TripleRecord, VerifyPayload,
};
use foursq::search::{brute_oracle, search_triples_with, SearchOptions, MAX_ORACLE_BOUND};
use foursq::sequences::{SeqCache, SeqIndex, Sequence};
use foursq::symbolic::{prove_identities_with, transcription, Table};
use foursq::{Int, Rat};

use render::{Format, Renderer};

/// Largest index magnitude accepted on the command line.
const MAX_INDEX: i64 = 10_000;

#[derive(Parser, Debug)]
#[command(name = "foursq", version, about = "Triples with ab+1, ac+1, bc+1 and abc+1 all perfect squares")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum VariantArg {
    Main,
    Companion,
    Both,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate the closed-form families over an index range.
    Gen {
        #[arg(allow_negative_numbers = true)]
        from: i64,
        #[arg(allow_negative_numbers = true)]
        to: i64,
        #[arg(value_enum, default_value_t = VariantArg::Main)]
        variant: VariantArg,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Check the four square conditions for one triple.
    Verify {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
        #[arg(allow_hyphen_values = true)]
        c: String,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Enumerate every admissible triple with entries up to a bound.
    Search {
        #[arg(long)]
        max: u64,
        #[arg(long, env = "FOURSQ_JOBS", default_value_t = 1)]
        jobs: usize,
        /// Cross-check against the brute-force oracle (bounds up to 2000).
        #[arg(long)]
        oracle: bool,
        /// Report chunk progress on stderr.
        #[arg(long)]
        progress: bool,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Machine-check the polynomial identities of the main family.
    Prove {
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        /// Add DELTA to one transcribed coefficient before checking: TABLE:I:J:DELTA,
        /// e.g. `r:3:0:1`. Tables: a, r, b, c, s, f1..f4.
        #[arg(long, value_name = "TABLE:I:J:DELTA")]
        perturb: Vec<String>,
    },
    /// Print values of P, A or R over an index range.
    Seq {
        name: String,
        #[arg(allow_negative_numbers = true)]
        from: i64,
        #[arg(allow_negative_numbers = true)]
        to: i64,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
}

/// Failure modes mapped to exit codes.
enum Fail {
    Usage(String),
    Check(String),
    Io(io::Error),
}

impl From<io::Error> for Fail {
    fn from(e: io::Error) -> Self {
        Fail::Io(e)
    }
}

type CmdResult = Result<(), Fail>;

fn check_range(from: i64, to: i64) -> CmdResult {
    if from > to {
        return Err(Fail::Usage(format!("empty range: {from} > {to}")));
    }
    if from.abs() > MAX_INDEX || to.abs() > MAX_INDEX {
        return Err(Fail::Usage(format!("indices must lie in [-{MAX_INDEX}, {MAX_INDEX}]")));
    }
    Ok(())
}

fn cmd_gen(out: &mut dyn Write, from: i64, to: i64, variant: VariantArg, format: Format) -> CmdResult {
    check_range(from, to)?;
    let mut rows: Vec<TripleCandidate> = Vec::new();
    let mut failures = Vec::new();
    for n in from..=to {
        if variant != VariantArg::Companion {
            rows.push(make_main(n));
        }
        if variant != VariantArg::Main {
            match make_companion(n) {
                Ok(t) => rows.push(t),
                Err(e) => failures.push(e.to_string()),
            }
        }
    }
    let records: Vec<TripleRecord> = rows.iter().map(TripleRecord::from).collect();
    let name = match variant {
        VariantArg::Main => "main",
        VariantArg::Companion => "companion",
        VariantArg::Both => "both",
    };
    let payload =
        GenPayload { from: Int::from(from), to: Int::from(to), variant: name.into(), triples: records };
    Renderer::new(format).gen(out, &OutputRecord::new("gen", payload))?;
    if failures.is_empty() {
        Ok(())
    } else {
        Err(Fail::Check(failures.join("; ")))
    }
}

fn parse_positive(name: &str, s: &str) -> Result<Int, Fail> {
    let v = parse_int(s).map_err(|e| Fail::Usage(format!("{name}: {e}")))?;
    if v < Int::from(1) {
        return Err(Fail::Usage(format!("{name} must be a positive integer, got {v}")));
    }
    Ok(v)
}

fn cmd_verify(out: &mut dyn Write, a: &str, b: &str, c: &str, format: Format) -> CmdResult {
    let (a, b, c) = (parse_positive("a", a)?, parse_positive("b", b)?, parse_positive("c", c)?);
    let outcome = verify_four(&a, &b, &c).map_err(|e| Fail::Usage(e.to_string()))?;
    let payload = VerifyPayload::new(&a, &b, &c, &outcome);
    Renderer::new(format).verify(out, &OutputRecord::new("verify", payload))?;
    match outcome.is_ok() {
        true => Ok(()),
        false => Err(Fail::Check(String::new())),
    }
}

fn cmd_search(
    out: &mut dyn Write,
    max: u64,
    jobs: usize,
    oracle: bool,
    progress: bool,
    format: Format,
) -> CmdResult {
    if jobs == 0 {
        return Err(Fail::Usage("--jobs must be at least 1".into()));
    }
    let report = |k: usize, n: usize| eprintln!("search: chunk {k}/{n}");
    let opts = SearchOptions { jobs, progress: progress.then_some(&report as _) };
    let result = search_triples_with(max, &opts).map_err(|e| Fail::Usage(e.to_string()))?;
    eprintln!(
        "search: {} triples up to {max}; {} pairs, {} candidates, {:.3}s",
        result.triples.len(),
        result.stats.pairs_scanned,
        result.stats.candidates_tested,
        result.stats.elapsed.as_secs_f64()
    );
    let check = if oracle && max <= MAX_ORACLE_BOUND {
        let reference = brute_oracle(max).map_err(|e| Fail::Usage(e.to_string()))?;
        Some(OracleCheck { agrees: reference.keys() == result.keys(), oracle_count: reference.triples.len() })
    } else {
        if oracle {
            eprintln!("search: oracle skipped, bound {max} exceeds its cap {MAX_ORACLE_BOUND}");
        }
        None
    };
    let payload = SearchPayload::new(&result, check.clone());
    Renderer::new(format).search(out, &OutputRecord::new("search", payload))?;
    match check {
        Some(OracleCheck { agrees: false, oracle_count }) => Err(Fail::Check(format!(
            "oracle mismatch: search found {}, oracle found {oracle_count}",
            result.triples.len()
        ))),
        _ => Ok(()),
    }
}

fn parse_perturbation(arg: &str) -> Result<(Table, u32, u32, Rat), Fail> {
    let bad = || Fail::Usage(format!("--perturb expects TABLE:I:J:DELTA, got `{arg}`"));
    let parts: Vec<&str> = arg.split(':').collect();
    let [table, i, j, delta] = parts.as_slice() else { return Err(bad()) };
    let table: Table = table.parse().map_err(|e: foursq::Error| Fail::Usage(e.to_string()))?;
    let i = i.parse().map_err(|_| bad())?;
    let j = j.parse().map_err(|_| bad())?;
    let delta = match delta.split_once('/') {
        Some((n, d)) => {
            let (n, d) = (parse_int(n).map_err(|_| bad())?, parse_int(d).map_err(|_| bad())?);
            if d == Int::from(0) {
                return Err(bad());
            }
            Rat::new(n, d)
        }
        None => Rat::from_integer(parse_int(delta).map_err(|_| bad())?),
    };
    Ok((table, i, j, delta))
}

fn cmd_prove(out: &mut dyn Write, format: Format, perturb: &[String]) -> CmdResult {
    let mut tables = transcription::standard().clone();
    for arg in perturb {
        let (table, i, j, delta) = parse_perturbation(arg)?;
        tables = tables.perturbed(table, i, j, delta);
    }
    let report = prove_identities_with(&tables);
    Renderer::new(format).prove(out, &OutputRecord::new("prove", report.clone()))?;
    if report.core_passed() {
        Ok(())
    } else {
        let (ok, total) = report.core_counts();
        Err(Fail::Check(format!("{ok}/{total} core identities hold")))
    }
}

fn cmd_seq(out: &mut dyn Write, name: &str, from: i64, to: i64, format: Format) -> CmdResult {
    let seq: Sequence = name.parse().map_err(|e: foursq::Error| Fail::Usage(e.to_string()))?;
    check_range(from, to)?;
    let mut cache = SeqCache::new(seq);
    let values = (from..=to)
        .map(|n: SeqIndex| SeqValue { n: Int::from(n), value: cache.get(n).clone() })
        .collect();
    let payload = SeqPayload { sequence: seq.to_string(), values };
    Renderer::new(format).seq(out, &OutputRecord::new("seq", payload))?;
    Ok(())
}

fn run(cli: Cli) -> CmdResult {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match cli.command {
        Command::Gen { from, to, variant, format } => cmd_gen(&mut out, from, to, variant, format),
        Command::Verify { a, b, c, format } => cmd_verify(&mut out, &a, &b, &c, format),
        Command::Search { max, jobs, oracle, progress, format } => {
            cmd_search(&mut out, max, jobs, oracle, progress, format)
        }
        Command::Prove { format, perturb } => cmd_prove(&mut out, format, &perturb),
        Command::Seq { name, from, to, format } => cmd_seq(&mut out, &name, from, to, format),
    }?;
    out.flush()?;
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Fail::Check(msg)) => {
            if !msg.is_empty() {
                eprintln!("foursq: {msg}");
            }
            ExitCode::from(1)
        }
        Err(Fail::Usage(msg)) => {
            eprintln!("foursq: {msg}");
            eprintln!("Run `foursq --help` for usage.");
            ExitCode::from(2)
        }
        Err(Fail::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Fail::Io(e)) => {
            eprintln!("foursq: {e}");
            ExitCode::from(2)
        }
    }
}
