use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use tropical_lax::{LaxMatrix, Potential};
use tropical_lax_cli::formats::{parse_potential, parse_rational};
use tropical_lax_cli::{
    cmd_classify, cmd_simulate, cmd_spectrum, cmd_undress, cmd_verify, CliError, Output, SimFormat, EXIT_USAGE,
};

/// Exact max-plus Lax matrices, undressing and box-ball dynamics.
///
/// Every subcommand reads a potential as JSON, `{"support_lo": int,
/// "values": ["p/q", ...]}`, from INPUT (`-` for stdin).
#[derive(Parser, Debug)]
#[command(name = "tropical-lax", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Case, v_sup, k and solitons.
    Classify { input: PathBuf },
    /// Eigenvalue, critical graph and eigenvectors of a Lax matrix.
    Spectrum {
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = MatrixArg::Gamma)]
        matrix: MatrixArg,
        /// Report the fundamental eigenvector of this soliton (0-based).
        #[arg(long)]
        soliton: Option<usize>,
        /// Include the matrix itself in the output.
        #[arg(long)]
        emit_matrix: bool,
    },
    /// Undress the potential at one soliton (0-based index).
    Undress {
        input: PathBuf,
        #[arg(long)]
        soliton: usize,
    },
    /// Check the full Lax system for one soliton's fundamental pair.
    Verify {
        input: PathBuf,
        #[arg(long)]
        soliton: usize,
        /// Override mu (defaults to the soliton's own value).
        #[arg(long, value_parser = parse_mu, allow_hyphen_values = true)]
        mu: Option<tropical_lax::Rational>,
    },
    /// Run the box-ball automaton.
    Simulate {
        input: PathBuf,
        #[arg(long)]
        steps: usize,
        #[arg(long, value_enum, default_value_t = FormatArg::Ascii)]
        format: FormatArg,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum MatrixArg {
    Gamma,
    Delta,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Ascii,
    Json,
}

fn parse_mu(s: &str) -> Result<tropical_lax::Rational, String> {
    parse_rational(s).map_err(|e| e.0)
}

fn read_potential(path: &PathBuf) -> Result<Potential, CliError> {
    let mut text = String::new();
    let read = if path.as_os_str() == "-" {
        std::io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| text = t)
    };
    read.map_err(|e| CliError(format!("cannot read {}: {e}", path.display())))?;
    Ok(parse_potential(&text)?)
}

fn run(cli: Cli) -> Result<Output, CliError> {
    match cli.command {
        Command::Classify { input } => Ok(cmd_classify(&read_potential(&input)?)),
        Command::Spectrum { input, matrix, soliton, emit_matrix } => {
            let which = match matrix {
                MatrixArg::Gamma => LaxMatrix::Gamma,
                MatrixArg::Delta => LaxMatrix::Delta,
            };
            cmd_spectrum(&read_potential(&input)?, which, soliton, emit_matrix)
        }
        Command::Undress { input, soliton } => cmd_undress(&read_potential(&input)?, soliton),
        Command::Verify { input, soliton, mu } => cmd_verify(&read_potential(&input)?, soliton, mu),
        Command::Simulate { input, steps, format } => {
            let format = match format {
                FormatArg::Ascii => SimFormat::Ascii,
                FormatArg::Json => SimFormat::Json,
            };
            Ok(cmd_simulate(&read_potential(&input)?, steps, format))
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(out) => {
            for line in &out.stderr {
                eprintln!("{line}");
            }
            print!("{}", out.stdout);
            ExitCode::from(out.code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_USAGE as u8)
        }
    }
}
