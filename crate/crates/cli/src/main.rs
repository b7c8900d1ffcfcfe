use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Parser};

use pretzel_hfk_cli::render::{failures, render, Format};
use pretzel_hfk_cli::{
    outcome, run_single, run_sweep, CliError, FamilyFilter, Options, OracleChoice, Outcome,
    SweepRanges, Triple, VariantChoice,
};

/// Knot Floer homology of three-strand pretzel knots.
#[derive(Parser, Debug)]
#[command(name = "pretzel-hfk", version, about)]
#[command(group(ArgGroup::new("target").required(true).args(["pretzel", "sweep"])))]
struct Args {
    /// Knot triple P1,P2,P3, e.g. -2,3,5
    #[arg(long, allow_hyphen_values = true, value_name = "P1,P2,P3")]
    pretzel: Option<Triple>,

    /// Parameter ranges, e.g. a=1..3,b=1..3,c=1..3
    #[arg(long, value_name = "RANGES")]
    sweep: Option<SweepRanges>,

    /// Which family a sweep runs over
    #[arg(long, value_enum, default_value_t)]
    family: FamilyFilter,

    /// Marked-point variant used for the state sum
    #[arg(long, value_enum, default_value_t)]
    variant: VariantChoice,

    /// Source of the Alexander polynomial
    #[arg(long, value_enum, default_value_t)]
    oracle: OracleChoice,

    #[arg(long, value_enum, default_value_t)]
    format: Format,

    /// Run the full check suite on every knot
    #[arg(long)]
    verify: bool,

    /// Write output here instead of stdout
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

fn run(args: &Args) -> Result<Outcome, CliError> {
    let opts = Options {
        family: args.family,
        variant: args.variant,
        oracle: args.oracle,
        verify: args.verify,
    };
    let (reports, sweep) = match (&args.pretzel, &args.sweep) {
        (Some(t), _) => (vec![run_single(t.0, &opts)?], false),
        (None, Some(r)) => (run_sweep(r, &opts)?, true),
        (None, None) => unreachable!("clap requires a target"),
    };
    let text = render(&reports, args.format, sweep);
    match &args.out {
        Some(path) => fs::write(path, text)?,
        None => print!("{text}"),
    }
    for f in failures(&reports) {
        eprintln!("check failed: {f}");
    }
    Ok(outcome(&reports))
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(a) => a,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() {
                Outcome::Usage as u8
            } else {
                0
            });
        }
    };
    match run(&args) {
        Ok(o) => ExitCode::from(o as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(Outcome::Usage as u8)
        }
    }
}
