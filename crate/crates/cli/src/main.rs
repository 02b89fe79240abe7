use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use leibniz_cli::commands::{self, Outcome, EXIT_BAD_INPUT};
use leibniz_core::exactlin::parse_scalar;
use leibniz_core::Scalar;

#[derive(Parser)]
#[command(name = "leibniz", version, about = "Exact Levi decompositions of finite-dimensional Leibniz algebras")]
struct Cli {
    /// Seed for the randomized oracle checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Append wall-clock time to the report (makes output nondeterministic).
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Check the left Leibniz identity on every basis triple.
    Validate { file: PathBuf },
    /// Leibniz kernel, derived series, soluble radical and semisimplicity.
    Analyze { file: PathBuf },
    /// Compute a Levi complement and verify it.
    Levi { file: PathBuf },
    /// Emit the split extension of a simple algebra by its adjoint module.
    Example {
        /// Simple algebra: sl2, sl3 or so3.
        #[arg(long)]
        simple: String,
        /// Extra diagonal complement {(x, lambda x')}; repeatable.
        #[arg(long, value_parser = lambda, allow_hyphen_values = true)]
        lambda: Vec<Scalar>,
        /// Also write algebra.json, K.json, S.json, S1.json and S_lambda_<i>.json here.
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
    /// Certify that two Levi complements are not conjugate by inner automorphisms.
    Conjugacy {
        file: PathBuf,
        #[arg(long)]
        complement_a: PathBuf,
        #[arg(long)]
        complement_b: PathBuf,
    },
}

fn lambda(s: &str) -> Result<Scalar, String> {
    parse_scalar(s).ok_or_else(|| format!("`{s}` is not a rational p/q"))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_BAD_INPUT as u8 } else { 0 });
        }
    };
    let start = Instant::now();
    let seed = cli.seed;
    let result = match &cli.command {
        Command::Validate { file } => commands::validate(file, seed),
        Command::Analyze { file } => commands::analyze(file, seed),
        Command::Levi { file } => commands::levi(file, seed),
        Command::Example {
            simple,
            lambda,
            out_dir,
        } => commands::example(simple, lambda, out_dir.as_deref(), seed),
        Command::Conjugacy {
            file,
            complement_a,
            complement_b,
        } => commands::conjugacy(file, complement_a, complement_b, seed),
    };
    match result {
        Ok(Outcome { mut report, code }) => {
            if cli.timing {
                report.timing_ms = Some(start.elapsed().as_millis() as u64);
            }
            let text = match cli.format {
                Format::Json => report.to_json(),
                Format::Text => report.to_text(),
            };
            print!("{text}");
            ExitCode::from(code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_BAD_INPUT as u8)
        }
    }
}
