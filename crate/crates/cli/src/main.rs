use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use tymod_cli::{run, Command, Format, RunConfig};
use tymod_core::abelian::DEFAULT_BUDGET;
use tymod_core::Sign;

#[derive(Clone, Copy, ValueEnum)]
enum Cmd {
    Classify,
    Subgroups,
    Forms,
    Lagrangians,
    Sigma,
    Fiber,
    Dual,
    Sweep,
    Selfcheck,
}

/// Module categories over Tambara–Yamagami categories TY(A, chi, tau).
#[derive(Parser)]
#[command(name = "tymod", version)]
struct Cli {
    command: Cmd,
    /// Group as cyclic factors, e.g. Z2xZ4.
    #[arg(long)]
    group: Option<String>,
    /// Bicharacter matrix, rows `;`, entries `,`, e.g. 0,1/2;1/2,0.
    #[arg(long)]
    chi: Option<String>,
    /// Sign of tau.
    #[arg(long, allow_hyphen_values = true)]
    tau: Option<String>,
    /// Generators of H, e.g. "(1,0);(0,2)".
    #[arg(long = "H")]
    h: Option<String>,
    /// Alternating form on H in the basis listed by `subgroups`.
    #[arg(long)]
    xi: Option<String>,
    #[arg(long, default_value = "json")]
    format: String,
    /// Largest accepted |A|; overrides TYMOD_BUDGET.
    #[arg(long)]
    budget: Option<usize>,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// File of `group|chi|tau` lines.
    #[arg(long)]
    sweep: Option<PathBuf>,
    /// Worker threads (0 = all cores).
    #[arg(long, default_value_t = 0)]
    workers: usize,
}

fn config(cli: Cli) -> Result<RunConfig, String> {
    let command = match cli.command {
        Cmd::Classify => Command::Classify,
        Cmd::Subgroups => Command::Subgroups,
        Cmd::Forms => Command::Forms,
        Cmd::Lagrangians => Command::Lagrangians,
        Cmd::Sigma => Command::Sigma,
        Cmd::Fiber => Command::Fiber,
        Cmd::Dual => Command::Dual,
        Cmd::Sweep => Command::Sweep,
        Cmd::Selfcheck => Command::Selfcheck,
    };
    let budget = match (cli.budget, std::env::var("TYMOD_BUDGET")) {
        (Some(b), _) => b,
        (None, Ok(v)) => v.trim().parse().map_err(|_| format!("TYMOD_BUDGET=`{v}` is not a number"))?,
        (None, Err(_)) => DEFAULT_BUDGET,
    };
    let tau = cli
        .tau
        .map(|t| t.parse::<Sign>().map_err(|e| e.to_string()))
        .transpose()?;
    Ok(RunConfig {
        command,
        group_spec: cli.group,
        chi_spec: cli.chi,
        tau,
        h_spec: cli.h,
        xi_spec: cli.xi,
        format: cli.format.parse::<Format>()?,
        budget,
        seed: cli.seed,
        sweep: cli.sweep,
        workers: cli.workers,
    })
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cfg = match config(Cli::parse()) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    };
    let stdout = std::io::stdout();
    let mut out = std::io::BufWriter::new(stdout.lock());
    let code = run(&cfg, &mut out, &mut std::io::stderr());
    let _ = out.flush();
    ExitCode::from(code as u8)
}
