use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use pathcoalg_cli::{dsl, run_text, Command, Options};

#[derive(Parser)]
#[command(
    name = "pathcoalg",
    version,
    about = "Co-Frobenius and Hopf analysis of path and incidence coalgebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,

    /// `.qcf` document; standard input when omitted
    #[arg(long, global = true)]
    input: Option<PathBuf>,

    /// Write the report here instead of standard output
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    /// Seed for randomized checks
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Largest basis for brute-force linear algebra
    #[arg(long, global = true, default_value_t = 40)]
    bound: usize,

    /// Minimum margin kept at the ends of line-family windows
    #[arg(long = "window-margin", global = true, default_value_t = 0)]
    window_margin: usize,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check every declaration and list bases
    Validate { targets: Vec<String> },
    /// Balanced bilinear forms: closed form against the direct solve
    Forms { targets: Vec<String> },
    /// Left and right co-Frobenius verdicts with witnesses
    Frobenius { targets: Vec<String> },
    /// Decompose a co-Frobenius path coalgebra and decide Hopf admissibility
    Classify { targets: Vec<String> },
    /// Embed incidence coalgebras into path coalgebras of Hasse quivers
    Embed { targets: Vec<String> },
    /// Check K[X×Y] ≅ KX ⊗ KY for two posets
    Tensor { targets: Vec<String> },
    /// Build Hopf algebra tables and verify them
    Hopf { targets: Vec<String> },
    /// Verify Hopf algebra tables without printing them
    HopfVerify { targets: Vec<String> },
    /// Print the document in canonical form
    Fmt,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let text = match &cli.input {
        Some(p) => std::fs::read_to_string(p),
        None => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s).map(|_| s)
        }
    };
    let text = match text {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: cannot read input: {e}");
            return ExitCode::from(2);
        }
    };
    let source = cli
        .input
        .as_ref()
        .map_or("<stdin>".to_string(), |p| p.display().to_string());
    let base = cli
        .input
        .as_ref()
        .and_then(|p| p.parent())
        .unwrap_or(Path::new("."));
    let opts = Options {
        seed: cli.seed,
        bound: cli.bound,
        window_margin: cli.window_margin,
    };
    let (cmd, targets) = match cli.command {
        Cmd::Validate { targets } => (Command::Validate, targets),
        Cmd::Forms { targets } => (Command::Forms, targets),
        Cmd::Frobenius { targets } => (Command::Frobenius, targets),
        Cmd::Classify { targets } => (Command::Classify, targets),
        Cmd::Embed { targets } => (Command::Embed, targets),
        Cmd::Tensor { targets } => (Command::Tensor, targets),
        Cmd::Hopf { targets } => (Command::Hopf, targets),
        Cmd::HopfVerify { targets } => (Command::HopfVerify, targets),
        Cmd::Fmt => match dsl::parse(&text) {
            Ok(doc) => return emit(&cli.output, &dsl::print(&doc)),
            Err(d) => {
                eprintln!("{source}:{d}");
                return ExitCode::from(2);
            }
        },
    };
    match run_text(cmd, &text, base, &targets, &opts) {
        Ok(report) => emit(&cli.output, &report),
        Err(e) => {
            eprintln!("{}", e.render(&source));
            ExitCode::from(2)
        }
    }
}

fn emit(output: &Option<PathBuf>, text: &str) -> ExitCode {
    let res = match output {
        Some(p) => std::fs::write(p, text),
        None => std::io::stdout().write_all(text.as_bytes()),
    };
    match res {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: cannot write report: {e}");
            ExitCode::FAILURE
        }
    }
}
