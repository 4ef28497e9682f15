use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use fermap::cli::{self, Command, EncodingChoice, RunConfig};

#[derive(Parser)]
#[command(
    name = "fermap",
    about = "Compile fermionic lattice Hamiltonians to Pauli Hamiltonians and verify the encoding"
)]
struct Cli {
    #[command(subcommand)]
    command: CliCommand,
}

#[derive(Clone, Copy, ValueEnum)]
enum EncodingArg {
    Compact,
    Jw,
    Both,
}

impl From<EncodingArg> for EncodingChoice {
    fn from(e: EncodingArg) -> Self {
        match e {
            EncodingArg::Compact => EncodingChoice::Compact,
            EncodingArg::Jw => EncodingChoice::Jw,
            EncodingArg::Both => EncodingChoice::Both,
        }
    }
}

#[derive(Args)]
struct CommonArgs {
    /// Lattice description JSON
    #[arg(long)]
    lattice: PathBuf,
    /// Output path (stdout when omitted)
    #[arg(short, long)]
    output: Option<PathBuf>,
    /// Numerical tolerance for oracle comparisons
    #[arg(long, default_value_t = 1e-10)]
    tol: f64,
    /// Override the lattice file's checkerboard phase (square lattices)
    #[arg(long, value_parser = clap::value_parser!(u8).range(0..=1))]
    checkerboard_phase: Option<u8>,
}

#[derive(Subcommand)]
enum CliCommand {
    /// Compile a fermionic Hamiltonian to a Pauli Hamiltonian
    Compile {
        #[command(flatten)]
        common: CommonArgs,
        /// Fermionic Hamiltonian JSON
        #[arg(long)]
        hamiltonian: PathBuf,
        #[arg(long, value_enum, default_value = "compact")]
        encoding: EncodingArg,
    },
    /// Run the relation suite (plus oracle checks under the qubit cap)
    Verify {
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Report qubit counts and maximum term weights per encoding
    Stats {
        #[command(flatten)]
        common: CommonArgs,
        #[arg(long, value_enum, default_value = "both")]
        encoding: EncodingArg,
    },
    /// Compare the encoded spectrum against the fermionic reference
    Spectrum {
        #[command(flatten)]
        common: CommonArgs,
        /// Fermionic Hamiltonian JSON
        #[arg(long)]
        hamiltonian: PathBuf,
    },
    /// Write every encoded operator for a lattice
    DumpOperators {
        #[command(flatten)]
        common: CommonArgs,
        #[arg(long, value_enum, default_value = "compact")]
        encoding: EncodingArg,
    },
}

fn to_config(cmd: CliCommand) -> RunConfig {
    let (command, common, hamiltonian, encoding) = match cmd {
        CliCommand::Compile {
            common,
            hamiltonian,
            encoding,
        } => (Command::Compile, common, Some(hamiltonian), encoding.into()),
        CliCommand::Verify { common } => {
            (Command::Verify, common, None, EncodingChoice::Compact)
        }
        CliCommand::Stats { common, encoding } => {
            (Command::Stats, common, None, encoding.into())
        }
        CliCommand::Spectrum { common, hamiltonian } => (
            Command::Spectrum,
            common,
            Some(hamiltonian),
            EncodingChoice::Both,
        ),
        CliCommand::DumpOperators { common, encoding } => {
            (Command::DumpOperators, common, None, encoding.into())
        }
    };
    RunConfig {
        command,
        lattice_path: common.lattice,
        hamiltonian_path: hamiltonian,
        encoding,
        output: common.output,
        tol: common.tol,
        checkerboard_phase: common.checkerboard_phase,
    }
}

fn main() -> ExitCode {
    // pin the BLAS thread count so eigensolve results are bit-reproducible
    if std::env::var_os("OPENBLAS_NUM_THREADS").is_none() {
        std::env::set_var("OPENBLAS_NUM_THREADS", "1");
    }
    let cli = Cli::parse();
    let config = to_config(cli.command);
    match cli::run(&config) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(cli::exit_code_for(&e) as u8)
        }
    }
}
