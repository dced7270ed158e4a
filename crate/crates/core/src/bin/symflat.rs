use std::process::ExitCode;

use clap::{Parser, Subcommand};
use symflat::asymquad::{QuadratureConfig, Regime};
use symflat::cli::{self, Catalog, Format, EXIT_INPUT_ERROR};
use symflat::hcfun::VERDICT_TOL;
use symflat::Result;

#[derive(Parser)]
#[command(name = "symflat", version, about = "Flatness checks for compact symmetric spaces")]
struct Args {
    /// Catalog file to use instead of the bundled one.
    #[arg(long, global = true)]
    catalog: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Catalog operations.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Inspect one space.
    Space {
        #[command(subcommand)]
        action: SpaceAction,
    },
    /// Sweep Q over dominant weights and compare with the group-manifold test.
    Flatness {
        name: String,
        #[arg(long, default_value_t = 5)]
        max_coeff: u32,
        #[arg(long, default_value_t = VERDICT_TOL)]
        tol: f64,
        #[arg(long, default_value = "json")]
        format: Format,
    },
    /// Check one asymptotic regime on a rank-one space.
    Asym {
        name: String,
        #[arg(long)]
        regime: Regime,
        #[arg(long)]
        weight: u32,
        #[arg(long, default_value = "json")]
        format: Format,
        #[arg(long, default_value_t = QuadratureConfig::default().rel_tol)]
        rel_tol: f64,
    },
    /// c-function, Q and the predicted constants at one weight.
    Cfun {
        name: String,
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
        weight: Vec<i64>,
    },
    /// Tabulate the factor F(z, a, b, c, d) for z = 1..zmax.
    #[command(name = "probe-F")]
    ProbeF {
        #[arg(long)]
        a: f64,
        #[arg(long)]
        b: f64,
        #[arg(long)]
        c: f64,
        #[arg(long)]
        d: f64,
        #[arg(long, default_value_t = 10)]
        zmax: u32,
        #[arg(long, default_value = "csv")]
        format: Format,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    /// Names of all entries.
    List,
    /// The whole catalog in its text format.
    Dump,
}

#[derive(Subcommand)]
enum SpaceAction {
    Show { name: String },
}

fn run(args: Args) -> Result<(String, i32)> {
    let catalog = match &args.catalog {
        Some(path) => cli::load_catalog(path)?,
        None => Catalog::default_catalog(),
    };
    Ok(match args.command {
        Command::Catalog { action: CatalogAction::List } => {
            let names: Vec<&str> = catalog.entries().iter().map(|e| e.name.as_str()).collect();
            (names.join("\n") + "\n", 0)
        }
        Command::Catalog { action: CatalogAction::Dump } => (catalog.to_text(), 0),
        Command::Space { action: SpaceAction::Show { name } } => (cli::describe_space(catalog.get(&name)?)?, 0),
        Command::Flatness { name, max_coeff, tol, format } => {
            let report = cli::run_flatness(&catalog, &name, max_coeff, tol)?;
            (cli::emit_q_report(&report, format), cli::flatness_exit_code(&report))
        }
        Command::Asym { name, regime, weight, format, rel_tol } => {
            let cfg = QuadratureConfig { rel_tol, ..QuadratureConfig::default() };
            let report = cli::run_asym(&catalog, &name, regime, weight, &cfg)?;
            (cli::emit_asymptotic_report(&report, format), cli::asym_exit_code(&report))
        }
        Command::Cfun { name, weight } => (cli::cfun_report(&catalog, &name, &weight)?, 0),
        Command::ProbeF { a, b, c, d, zmax, format } => (cli::probe_f(a, b, c, d, zmax, format)?, 0),
    })
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(args) => args,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_INPUT_ERROR as u8 } else { 0 });
        }
    };
    match run(args) {
        Ok((out, code)) => {
            print!("{out}");
            ExitCode::from(code as u8)
        }
        Err(e) => {
            eprintln!("symflat: {e}");
            ExitCode::from(EXIT_INPUT_ERROR as u8)
        }
    }
}
