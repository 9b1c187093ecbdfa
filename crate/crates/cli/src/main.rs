use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Result;
use clap::{Parser, Subcommand};

use kh_tripos::tripos::ClopenQuantifiers;
use kh_tripos_cli::{
    cmd_check, cmd_compactify, cmd_delta, cmd_eval, cmd_power, example_model, load_model,
    CheckOptions, Format, InputError, Outcome,
};

/// Check the clopen tripos on finite spaces.
#[derive(Debug, Parser)]
#[command(name = "kh-tripos", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Model file (JSON); the bundled example model is used otherwise.
    #[arg(long, global = true)]
    model: Option<PathBuf>,

    /// Largest generated space size for `check`.
    #[arg(long, global = true, default_value_t = 4)]
    max_size: usize,

    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Also recompute the compact-open topology on 2^A.
    #[arg(long, global = true)]
    verify_compact_open: bool,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run the law suite.
    Check {
        /// Only run laws whose name contains this (repeatable).
        #[arg(long = "law")]
        laws: Vec<String>,
    },
    /// Evaluate a formula or a sequent.
    Eval {
        #[arg(short = 'e', long = "expr", conflicts_with = "sequent")]
        formula: Option<String>,
        #[arg(long)]
        sequent: Option<String>,
        /// Context, e.g. "x : X, s : P(X)".
        #[arg(long, default_value = "")]
        ctx: String,
    },
    /// Build the power object PA.
    Power {
        #[arg(long)]
        space: String,
    },
    /// Build the equality predicate on X from membership.
    Delta {
        #[arg(long)]
        space: String,
    },
    /// Build the one-point compactification of B.
    Compactify {
        #[arg(long)]
        space: String,
    },
}

fn run(cli: Cli) -> Result<Outcome, InputError> {
    let model = match &cli.model {
        Some(path) => load_model(path)?,
        None => example_model(),
    };
    match cli.command {
        Command::Check { laws } => {
            let opts = CheckOptions {
                max_size: cli.max_size,
                seed: cli.seed,
                verify_compact_open: cli.verify_compact_open,
                laws,
            };
            cmd_check(&model, &opts, &ClopenQuantifiers, cli.format)
        }
        Command::Eval {
            formula,
            sequent,
            ctx,
        } => cmd_eval(&model, formula.as_deref(), sequent.as_deref(), &ctx, cli.format),
        Command::Power { space } => cmd_power(&model, &space, cli.verify_compact_open, cli.format),
        Command::Delta { space } => cmd_delta(&model, &space, cli.format),
        Command::Compactify { space } => cmd_compactify(&model, &space, cli.format),
    }
}

fn main() -> Result<ExitCode> {
    let cli = Cli::parse();
    match run(cli) {
        Ok(outcome) => {
            print!("{}", outcome.output);
            Ok(ExitCode::from(outcome.exit_code()))
        }
        Err(e) => {
            eprintln!("error: {}", anyhow::Error::from(e));
            Ok(ExitCode::from(2))
        }
    }
}
