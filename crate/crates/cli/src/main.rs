use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use ppwb::gogmagog::OverlapConvention;
use ppwb::BoxDims;
use ppwb_cli::commands::{
    cmd_bijection, cmd_conjecture, cmd_count, cmd_gf, cmd_verify, max_cells_from_env, parse_box,
    Bijection, CliError, CmdResult, CountMethod, DimsSpec, WeightArg, EXIT_USAGE,
};

/// Exact counting and cross-verification for plane partitions and their
/// symmetry classes.
#[derive(Parser)]
#[command(name = "ppwb", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct DimsArgs {
    /// Box as a,b,c
    #[arg(long = "box", value_parser = parse_box)]
    boxed: Option<BoxDims>,
    /// Formula parameter a
    #[arg(long)]
    a: Option<usize>,
    /// Formula parameter c
    #[arg(long)]
    c: Option<usize>,
}

impl DimsArgs {
    fn spec(&self) -> DimsSpec {
        DimsSpec {
            boxed: self.boxed,
            a: self.a,
            c: self.c,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Number of plane partitions of a symmetry class in a box
    Count {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=10))]
        class: u8,
        #[command(flatten)]
        dims: DimsArgs,
        #[arg(long, value_enum, default_value = "formula")]
        method: MethodArg,
    },
    /// Generating function of a symmetry class (classes 1-4)
    Gf {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=10))]
        class: u8,
        #[command(flatten)]
        dims: DimsArgs,
        #[arg(long, value_enum)]
        weight: Option<WeightOpt>,
        #[arg(long, value_enum, default_value = "formula")]
        method: GfMethod,
        /// Evaluate at this integer instead of printing the polynomial
        #[arg(long)]
        at_q: Option<BigInt>,
    },
    /// Run a verification suite
    Verify {
        #[arg(long, value_enum)]
        suite: SuiteArg,
        #[arg(long)]
        json: bool,
    },
    /// Apply a bijection to an object read from a file
    Bijection {
        #[arg(long, value_enum)]
        name: BijectionArg,
        #[arg(long)]
        input: PathBuf,
        #[arg(long = "box", value_parser = parse_box)]
        boxed: Option<BoxDims>,
        /// Map back and check that the input is recovered
        #[arg(long)]
        roundtrip: bool,
    },
    /// Compare the refined Magog and Gog tables
    Conjecture {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value = "both")]
        convention: ConventionArg,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Formula,
    Brute,
    Lgv,
    Kasteleyn,
}

#[derive(Clone, Copy, ValueEnum)]
enum GfMethod {
    Formula,
    Brute,
}

#[derive(Clone, Copy, ValueEnum)]
enum WeightOpt {
    Size,
    Half,
    Orbit,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Box,
    Classes,
    Trace,
    Schur,
    Dimer,
    Gogmagog,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum BijectionArg {
    PpPaths,
    PpTiling,
    PpSsyt,
    Stanley,
    AsmMt,
}

#[derive(Clone, Copy, ValueEnum)]
enum ConventionArg {
    Both,
    MaxOnly,
    MinOnly,
}

fn run(cli: Cli) -> CmdResult {
    let max_cells = max_cells_from_env()?;
    match cli.command {
        Command::Count { class, dims, method } => {
            let method = match method {
                MethodArg::Formula => CountMethod::Formula,
                MethodArg::Brute => CountMethod::Brute,
                MethodArg::Lgv => CountMethod::Lgv,
                MethodArg::Kasteleyn => CountMethod::Kasteleyn,
            };
            cmd_count(class, dims.spec(), method, max_cells)
        }
        Command::Gf {
            class,
            dims,
            weight,
            method,
            at_q,
        } => {
            let weight = weight.map(|w| match w {
                WeightOpt::Size => WeightArg::Size,
                WeightOpt::Half => WeightArg::Half,
                WeightOpt::Orbit => WeightArg::Orbit,
            });
            let brute = matches!(method, GfMethod::Brute);
            cmd_gf(class, dims.spec(), weight, brute, at_q.as_ref(), max_cells)
        }
        Command::Verify { suite, json } => {
            let name = match suite {
                SuiteArg::Box => "box",
                SuiteArg::Classes => "classes",
                SuiteArg::Trace => "trace",
                SuiteArg::Schur => "schur",
                SuiteArg::Dimer => "dimer",
                SuiteArg::Gogmagog => "gogmagog",
                SuiteArg::All => "all",
            };
            cmd_verify(name, json)
        }
        Command::Bijection {
            name,
            input,
            boxed,
            roundtrip,
        } => {
            let text = std::fs::read_to_string(&input)
                .map_err(|e| CliError::usage(format!("cannot read {}: {e}", input.display())))?;
            let name = match name {
                BijectionArg::PpPaths => Bijection::PpPaths,
                BijectionArg::PpTiling => Bijection::PpTiling,
                BijectionArg::PpSsyt => Bijection::PpSsyt,
                BijectionArg::Stanley => Bijection::Stanley,
                BijectionArg::AsmMt => Bijection::AsmMt,
            };
            cmd_bijection(name, &text, boxed, roundtrip)
        }
        Command::Conjecture {
            m,
            n,
            k,
            convention,
            json,
        } => {
            let convention = match convention {
                ConventionArg::Both => OverlapConvention::Both,
                ConventionArg::MaxOnly => OverlapConvention::MaxOnly,
                ConventionArg::MinOnly => OverlapConvention::MinOnly,
            };
            cmd_conjecture(m, n, k, convention, json, max_cells)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    match run(cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(out.stdout.as_bytes());
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("ppwb: {e}");
            ExitCode::from(e.code)
        }
    }
}
