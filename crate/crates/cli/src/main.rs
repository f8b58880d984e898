use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use gysin_cli::input::{parse_json, ArrangementInput, GeometryInput};
use gysin_cli::report::{self, SelfcheckReport};
use gysin_cli::{checks, CliError};
use gysin_core::geometry::{GeometricArrangement, Graph};
use gysin_core::model::{GysinModel, DEFAULT_CAP};

#[derive(Parser)]
#[command(name = "gysin", version, about = "Orlik–Solomon algebras, Gysin models and weight-graded Betti numbers")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Largest model dimension to build.
    #[arg(long, env = "GYSIN_CAP", default_value_t = DEFAULT_CAP, global = true)]
    cap: usize,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Orlik–Solomon algebra of a central arrangement.
    Os(Source),
    /// Weight-graded Betti numbers of an arrangement complement.
    Betti(Source),
    /// Configuration space of points on a curve.
    Config {
        #[arg(long)]
        genus: usize,
        /// Number of points (complete graph).
        #[arg(long, conflicts_with = "graph")]
        n: Option<usize>,
        /// Graph as JSON: {"vertices":3,"edges":[[0,1],[1,2]]}.
        #[arg(long)]
        graph: Option<String>,
        /// Do not compare with the generators-and-relations model.
        #[arg(long)]
        skip_comparison: bool,
    },
    /// Three concurrent lines in the plane and the blow-up of their common point.
    BlowupDemo,
    /// Run the invariant suite on the built-in instances.
    Selfcheck {
        /// Use the broken diagonal class for curves.
        #[arg(long)]
        corrupt_diagonal: bool,
    },
}

#[derive(clap::Args)]
struct Source {
    /// JSON input file, or `-` for standard input.
    file: Option<PathBuf>,
    /// JSON input given directly.
    #[arg(long, conflicts_with = "file")]
    inline: Option<String>,
}

impl Source {
    fn read(&self) -> Result<String, CliError> {
        match (&self.file, &self.inline) {
            (_, Some(s)) => Ok(s.clone()),
            (Some(p), None) if p.as_os_str() == "-" => Ok(std::io::read_to_string(std::io::stdin())?),
            (Some(p), None) => std::fs::read_to_string(p)
                .map_err(|e| CliError::Usage(format!("cannot read {}: {}", p.display(), e))),
            (None, None) => Err(CliError::Usage("give an input file or --inline JSON".into())),
        }
    }
}

fn emit<T: Serialize>(cli: &Cli, value: &T, text: impl FnOnce() -> String) -> Result<(), CliError> {
    let out = match cli.format {
        Format::Text => text(),
        Format::Json => {
            let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
            s.push('\n');
            s
        }
    };
    match &cli.out {
        Some(path) => std::fs::write(path, out)?,
        None => print!("{}", out),
    }
    Ok(())
}

fn run(cli: &Cli) -> Result<(), CliError> {
    let start = Instant::now();
    match &cli.command {
        Command::Os(src) => {
            let input: ArrangementInput = parse_json(&src.read()?, "arrangement")?;
            let r = report::os_report(&input.build()?, cli.cap)?;
            emit(cli, &r, || r.text())?;
        }
        Command::Betti(src) => {
            let input: GeometryInput = parse_json(&src.read()?, "geometry")?;
            let r = report::betti_report(input.build()?, cli.cap)?;
            emit(cli, &r, || r.text())?;
        }
        Command::Config {
            genus,
            n,
            graph,
            skip_comparison,
        } => {
            let graph = match (n, graph) {
                (Some(n), None) => Graph::complete(*n),
                (None, Some(g)) => parse_json(g, "graph")?,
                _ => return Err(CliError::Usage("give exactly one of --n and --graph".into())),
            };
            let r = report::config_report(*genus, &graph, cli.cap, !skip_comparison)?;
            emit(cli, &r, || r.text())?;
        }
        Command::BlowupDemo => {
            let r = report::blowup_report()?;
            emit(cli, &r, || r.text())?;
        }
        Command::Selfcheck { corrupt_diagonal } => {
            // the largest instance of the suite must fit under the cap
            GysinModel::with_cap(GeometricArrangement::curve_power(2, &Graph::complete(4))?, cli.cap)?;
            let r = SelfcheckReport::new(checks::all(*corrupt_diagonal));
            emit(cli, &r, || r.text())?;
            if !r.ok() {
                return Err(CliError::Selfcheck);
            }
        }
    }
    if cli.format == Format::Text {
        eprintln!("finished in {:.1?}", start.elapsed());
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("gysin: {}", e);
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
