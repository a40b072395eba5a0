use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use dmc_capacity::channel::{make_bsc, make_nonsymmetric_binary, make_wht_sparse_channel};
use dmc_capacity::{ba_capacity, Execution, SolverConfig};
use dmc_capacity_cli::distinguish::{self, DistinguishConfig};
use dmc_capacity_cli::reproduce::{self, Table};
use dmc_capacity_cli::sweep::{self, SweepConfig};
use dmc_capacity_cli::{CliError, DEFAULT_EPSILON};

#[derive(Parser)]
#[command(name = "dmc-capacity", version, about = "Blahut-Arimoto capacity of cryptanalytic channels")]
struct Cli {
    /// Run independent work items on a single thread.
    #[arg(long, global = true)]
    sequential: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ChannelKind {
    /// Binary symmetric channel.
    Bsc,
    /// Biased bit against a fair coin.
    Nonsym,
    /// 2×2ⁿ channel with k Walsh coefficients equal to d against uniform.
    Wht,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the capacity of one channel.
    Capacity {
        #[arg(long, value_enum)]
        channel: ChannelKind,
        #[arg(long)]
        d: f64,
        #[arg(long, default_value_t = 8)]
        n: u32,
        #[arg(long, default_value_t = 1)]
        k: usize,
        /// Explicit masks for the wht channel (default 1..=k).
        #[arg(long, value_delimiter = ',')]
        masks: Option<Vec<usize>>,
        #[arg(long, default_value_t = DEFAULT_EPSILON)]
        epsilon: f64,
        #[arg(long, default_value_t = 1_000_000)]
        max_iterations: usize,
    },
    /// Regenerate a binary-channel capacity table as CSV.
    Reproduce {
        #[arg(long, value_enum)]
        table: Table,
        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Sweep capacity over (k, d) for 2×2ⁿ sparse-spectrum channels.
    Sweep {
        #[arg(long, default_value_t = 8)]
        n: u32,
        #[arg(long, value_delimiter = ',', default_value = "1,2,4")]
        k: Vec<usize>,
        #[arg(long)]
        d_min: Option<f64>,
        #[arg(long)]
        d_max: Option<f64>,
        #[arg(long, default_value_t = 0.01)]
        d_step: f64,
        #[arg(long, default_value_t = DEFAULT_EPSILON)]
        epsilon: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Estimate error rates of the LLR distinguisher.
    Distinguish {
        #[arg(long, default_value_t = 8)]
        n: u32,
        #[arg(long, default_value_t = 1)]
        k: usize,
        #[arg(long)]
        d: f64,
        /// One or more sample counts, comma separated.
        #[arg(long, value_delimiter = ',', required = true)]
        samples: Vec<u64>,
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn output(path: Option<PathBuf>) -> Result<Box<dyn Write>, CliError> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(io::stdout().lock()),
    })
}

fn run(cli: Cli) -> Result<(), CliError> {
    let exec = if cli.sequential { Execution::Sequential } else { Execution::default() };
    match cli.command {
        Command::Capacity { channel, d, n, k, masks, epsilon, max_iterations } => {
            let matrix = match channel {
                ChannelKind::Bsc => make_bsc(d)?,
                ChannelKind::Nonsym => make_nonsymmetric_binary(d)?,
                ChannelKind::Wht => make_wht_sparse_channel(n, k, d, masks.as_deref())?,
            };
            let config = SolverConfig { epsilon, max_iterations, initial_input: None };
            let r = ba_capacity(&matrix, &config)?;
            let inputs: Vec<String> = r.input_dist.probs().iter().map(|p| p.to_string()).collect();
            println!("capacity: {:.4} nats", r.capacity());
            println!("capacity_lower: {}", r.capacity_lower);
            println!("capacity_upper: {}", r.capacity_upper);
            println!("capacity_bits: {}", r.capacity_bits());
            println!("iterations: {}", r.iterations);
            println!("converged: {}", r.converged);
            println!("input_distribution: {}", inputs.join(" "));
            if !r.converged {
                return Err(CliError::Runtime(format!(
                    "no convergence within {max_iterations} iterations (gap {})",
                    r.gap()
                )));
            }
        }
        Command::Reproduce { table, out } => {
            let rows = reproduce::reproduce(table)?;
            reproduce::write_table(table, &rows, output(out)?)?;
        }
        Command::Sweep { n, k, d_min, d_max, d_step, epsilon, out } => {
            let config = SweepConfig { n, ks: k, d_min, d_max, d_step, epsilon };
            let rows = sweep::run_sweep(&config, exec)?;
            sweep::write_rows(&rows, output(out)?)?;
        }
        Command::Distinguish { n, k, d, samples, trials, seed, out } => {
            let config = DistinguishConfig { n, k, d, samples, trials, seed };
            let rows = distinguish::run(&config, exec)?;
            distinguish::write_rows(&rows, output(out)?)?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
