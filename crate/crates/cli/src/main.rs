use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use involutive::{Division, MonomialOrdering, ProblemFile};

mod commands;
mod harness;

/// Involutive bases of monomial and polynomial ideals.
#[derive(Debug, Parser)]
#[command(name = "involutive", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the multiplicative variables of every input monomial.
    Separate {
        #[command(flatten)]
        input: Input,
        #[arg(long, conflicts_with = "all_divisions")]
        division: Option<Division>,
        /// Print one column per division.
        #[arg(long)]
        all_divisions: bool,
    },
    /// Complete a monomial set to an involutive one.
    CompleteMonomials {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value = "janet")]
        division: Division,
        #[command(flatten)]
        limits: LimitArgs,
        /// Check each prolongation once; only valid for monotone divisions.
        #[arg(long)]
        monotone_fast_path: bool,
        #[arg(long)]
        stats: bool,
    },
    /// Compute the minimal involutive basis of a polynomial ideal.
    InvolutiveBasis {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value = "janet")]
        division: Division,
        #[command(flatten)]
        limits: LimitArgs,
        /// Skip the initial autoreduction of the generators.
        #[arg(long)]
        no_autoreduce: bool,
        /// Disable the involutive chain criterion.
        #[arg(long)]
        no_criterion: bool,
        /// Re-check the result and compare it with a Buchberger basis.
        #[arg(long)]
        verify: bool,
        #[arg(long)]
        stats: bool,
    },
    /// Compute the reduced Gröbner basis with Buchberger's algorithm.
    Groebner {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        limits: LimitArgs,
    },
    /// Check whether the input is already an involutive basis.
    Verify {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value = "janet")]
        division: Division,
    },
    /// Run the randomized invariance checks on a seeded corpus.
    Harness {
        #[command(subcommand)]
        kind: HarnessKind,
    },
}

#[derive(Debug, Subcommand)]
enum HarnessKind {
    /// Completion-ordering invariance and brute-force involutivity of
    /// monomial completions.
    Monomials {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        count: usize,
    },
    /// Stability of polynomial bases under autoreduction, permutation,
    /// rescaling and the chain criterion.
    Polynomials {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 50)]
        count: usize,
    },
}

#[derive(Debug, Args)]
struct Input {
    /// Problem file, or `-` for standard input.
    file: PathBuf,
    /// Main monomial ordering; overrides the file.
    #[arg(long)]
    order: Option<MonomialOrdering>,
    /// Completion ordering; overrides the file.
    #[arg(long)]
    completion_order: Option<MonomialOrdering>,
}

#[derive(Debug, Args)]
struct LimitArgs {
    #[arg(long, default_value_t = 50)]
    max_degree: u32,
    #[arg(long, default_value_t = 100_000)]
    max_iterations: usize,
}

/// Why a command did not succeed; each maps to its own exit code.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Limit(String),
    Verification(String),
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 1,
            Failure::Limit(_) => 2,
            Failure::Verification(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Limit(m) | Failure::Verification(m) => m,
        }
    }
}

impl From<involutive::Error> for Failure {
    fn from(e: involutive::Error) -> Self {
        match e {
            involutive::Error::LimitExceeded(limit) => Failure::Limit(format!("limit exceeded: {limit}")),
            other => Failure::Usage(other.to_string()),
        }
    }
}

fn load(input: &Input) -> Result<ProblemFile, Failure> {
    let text = if input.file.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::Usage(format!("<stdin>: {e}")))?;
        s
    } else {
        std::fs::read_to_string(&input.file).map_err(|e| Failure::Usage(format!("{}: {e}", input.file.display())))?
    };
    let mut problem = ProblemFile::parse(&text).map_err(|e| Failure::Usage(format!("{}:{e}", input.file.display())))?;
    if let Some(order) = input.order {
        problem.order = order;
        for entry in &mut problem.entries {
            entry.poly = entry.poly.with_order(order);
        }
    }
    if let Some(order) = input.completion_order {
        problem.completion_order = Some(order);
    }
    Ok(problem)
}

fn limits(args: &LimitArgs) -> Result<involutive::CompletionLimits, Failure> {
    Ok(involutive::CompletionLimits::new(args.max_degree, args.max_iterations)?)
}

fn run(cli: Cli, out: &mut String) -> Result<(), Failure> {
    match cli.command {
        Command::Separate {
            input,
            division,
            all_divisions,
        } => {
            let problem = load(&input)?;
            let divisions = if all_divisions {
                Division::ALL.to_vec()
            } else {
                vec![division.unwrap_or(Division::Janet)]
            };
            commands::separate(&problem, &divisions, out)
        }
        Command::CompleteMonomials {
            input,
            division,
            limits: l,
            monotone_fast_path,
            stats,
        } => {
            let problem = load(&input)?;
            let options = involutive::CompletionOptions {
                monotone_fast_path,
                cross_check: false,
            };
            commands::complete_monomials(&problem, division, limits(&l)?, options, stats, out)
        }
        Command::InvolutiveBasis {
            input,
            division,
            limits: l,
            no_autoreduce,
            no_criterion,
            verify,
            stats,
        } => {
            let problem = load(&input)?;
            let options = involutive::BasisOptions {
                autoreduce_input: !no_autoreduce,
                use_criterion: !no_criterion,
                cross_check: false,
            };
            commands::involutive_basis(&problem, division, limits(&l)?, options, verify, stats, out)
        }
        Command::Groebner { input, limits: l } => {
            let problem = load(&input)?;
            commands::groebner(&problem, limits(&l)?, out)
        }
        Command::Verify { input, division } => {
            let problem = load(&input)?;
            commands::verify(&problem, division, out)
        }
        Command::Harness { kind } => match kind {
            HarnessKind::Monomials { seed, count } => harness::monomials(seed, count, out),
            HarnessKind::Polynomials { seed, count } => harness::polynomials(seed, count, out),
        },
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let mut out = String::new();
    let result = run(cli, &mut out);
    let mut stdout = io::stdout().lock();
    let _ = stdout.write_all(out.as_bytes());
    let _ = stdout.flush();
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("error: {}", failure.message());
            ExitCode::from(failure.exit_code())
        }
    }
}
