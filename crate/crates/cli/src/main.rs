use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use sextic_cli::commands::{self, RunConfig, TorsionMode};
use sextic_cli::report::Report;
use sextic_cli::{load_config, load_form, parse_member, InputError};

/// Exact verification of nodal plane sextics through six points.
#[derive(Parser)]
#[command(name = "sextic", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    global: Global,
}

#[derive(Args)]
struct Global {
    /// Configuration JSON; defaults to the built-in reference configuration.
    #[arg(long, global = true)]
    input: Option<PathBuf>,
    #[arg(long, global = true, default_value_t = 7)]
    seed: u64,
    /// Random configurations per batch.
    #[arg(long, global = true, default_value_t = 20)]
    trials: usize,
    /// Decide coprimality over Q directly instead of screening modulo primes first.
    #[arg(long, global = true)]
    no_prime_screen: bool,
    /// Write the JSON report here.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Print the JSON report on stdout instead of the summary.
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Test that no three points are collinear and no conic passes through all six.
    CheckPosition,
    /// The six conics through five of the points.
    Conics,
    /// The quintic net and the associated configuration.
    SecondModel,
    /// Lines and double sixes in the Picard lattice.
    Lattice,
    /// Certify the 3-torsion criterion for a nodal sextic.
    Torsion(TorsionArgs),
    /// The Coble vector and its quartic relation.
    Coble,
    /// S6 action on the Coble generators.
    ActionTable,
    /// Run every check.
    VerifyPaper,
}

#[derive(Args)]
#[group(multiple = false)]
struct TorsionArgs {
    /// First member of the conic-product pencil with six ordinary nodes (the default).
    #[arg(long)]
    pencil: bool,
    /// Member lambda f4f5f6 + mu f1f2f3 of the conic-product pencil.
    #[arg(long, value_name = "LAMBDA:MU")]
    member: Option<String>,
    /// Sextic as JSON records [[i, j, k, "p/q"], ...].
    #[arg(long, value_name = "PATH")]
    form: Option<PathBuf>,
    /// Random member of the ten-dimensional nodal system.
    #[arg(long)]
    random_nodal: bool,
}

fn run(cli: &Cli) -> Result<Report, InputError> {
    let g = &cli.global;
    if g.trials == 0 {
        return Err(InputError::Trials);
    }
    let (config, source) = load_config(g.input.as_deref())?;
    let rc = RunConfig { config, source, seed: g.seed, trials: g.trials, prime_screen: !g.no_prime_screen };
    Ok(match &cli.command {
        Command::CheckPosition => commands::check_position(&rc),
        Command::Conics => commands::conics(&rc),
        Command::SecondModel => commands::second_model_cmd(&rc),
        Command::Lattice => commands::lattice(),
        Command::Torsion(t) => {
            let mode = if let Some(m) = &t.member {
                let (l, mu) = parse_member(m)?;
                TorsionMode::Member(l, mu)
            } else if let Some(p) = &t.form {
                TorsionMode::Form(load_form(p)?)
            } else if t.random_nodal {
                TorsionMode::RandomNodal
            } else {
                TorsionMode::Pencil
            };
            commands::torsion(&rc, &mode)
        }
        Command::Coble => commands::coble(&rc),
        Command::ActionTable => commands::action_table(&rc),
        Command::VerifyPaper => commands::verify_paper(&rc),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let report = match run(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let json = report.to_json();
    if let Some(path) = &cli.global.output {
        if let Err(e) = std::fs::write(path, &json) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return ExitCode::from(2);
        }
    }
    if cli.global.json {
        print!("{json}");
    } else {
        print!("{}", report.summary());
    }
    eprintln!("elapsed {:.2?}", start.elapsed());
    ExitCode::from(report.exit_code())
}
