mod commands;
mod expr;
mod report;

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use minda_core::catalog::{self, MindaFunction, Params};
use serde_json::Value;

use crate::report::RunReport;

#[derive(Debug, Parser)]
#[command(name = "minda", version, about = "Radii, growth and Bohr computations for Ma-Minda starlike classes")]
struct Cli {
    /// Emit a JSON report instead of a table.
    #[arg(long, global = true)]
    json: bool,

    /// Record wall time in the report.
    #[arg(long, global = true)]
    timing: bool,

    /// Initial truncation order of power series.
    #[arg(long, global = true, env = "MINDA_SERIES_ORDER", default_value_t = 64)]
    order: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args, Clone, Default)]
pub struct ClassArgs {
    /// Catalog key, e.g. `sine`, `order-alpha`, `janowski`.
    #[arg(long)]
    pub class: Option<String>,
    #[arg(long = "D", allow_negative_numbers = true)]
    pub d: Option<f64>,
    #[arg(long = "E", allow_negative_numbers = true)]
    pub e: Option<f64>,
    #[arg(long)]
    pub alpha: Option<f64>,
    #[arg(long)]
    pub eta: Option<f64>,
    #[arg(long)]
    pub a: Option<f64>,
    #[arg(long)]
    pub b: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub beta: Option<f64>,
    /// Any parameter as NAME=VALUE.
    #[arg(long = "param", value_name = "NAME=VALUE", allow_negative_numbers = true)]
    pub params: Vec<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    MajorizeStarlike,
    MajorizeConvex,
    Hallenbeck,
    SqrtVariant,
    ProductMbeta,
    ProductOrder,
    Booth,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CurveObject {
    PsiBoundary,
    F0Image,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Probe {
    Sharpness,
    BohrCoeff,
    Bulboaca,
    Subordination,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List the catalog, or describe one entry.
    Catalog {
        #[arg(long)]
        id: Option<String>,
    },
    /// Majorization and product radii.
    Radius {
        #[command(flatten)]
        class: ClassArgs,
        #[arg(long, value_enum)]
        kind: Kind,
        /// Second class for the product kinds (defaults to the first).
        #[arg(long)]
        class2: Option<String>,
        /// Parameter of the second class as NAME=VALUE.
        #[arg(long = "param2", value_name = "NAME=VALUE", allow_negative_numbers = true)]
        params2: Vec<String>,
        /// Bound β > 1 of the product-mbeta problem.
        #[arg(long)]
        mbeta: Option<f64>,
        /// Order γ ∈ [0, 1) of the product-order problem.
        #[arg(long)]
        gamma: Option<f64>,
    },
    /// Koebe radius, Bohr roots and Bohr radius.
    Bohr {
        #[command(flatten)]
        class: ClassArgs,
    },
    /// Distortion bounds on |z| = r.
    Distort {
        #[command(flatten)]
        class: ClassArgs,
        /// Radii in (0, 1]; repeat or separate by commas.
        #[arg(long = "r", value_delimiter = ',')]
        radii: Vec<f64>,
        /// Lower-bound table for the cardioid.
        #[arg(long)]
        table1: bool,
    },
    /// Sample ψ or f₀ on a circle.
    Curve {
        #[command(flatten)]
        class: ClassArgs,
        #[arg(long, value_enum)]
        object: CurveObject,
        #[arg(long = "r", default_value_t = 1.0)]
        r: f64,
        #[arg(long, default_value_t = 512)]
        n_points: usize,
        /// CSV output (`theta,x,y`).
        #[arg(long)]
        out: Option<PathBuf>,
        /// SVG polyline output.
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Numerical checks of subordination, sharpness and coefficient claims.
    Verify {
        #[command(flatten)]
        class: ClassArgs,
        #[arg(long, value_enum)]
        probe: Probe,
        /// Offset from the radius for the sharpness probe.
        #[arg(long, default_value_t = 0.01)]
        eps: f64,
        /// Radius for the bohr-coeff and subordination probes.
        #[arg(long = "r")]
        r: Option<f64>,
        /// Subordinate for the subordination probe, e.g. `f0(z/2)`.
        #[arg(long)]
        g: Option<String>,
        /// Real Taylor coefficients h_0, h_1, ... for the bulboaca probe.
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
        h: Vec<f64>,
        /// Random Schwarz samples for bohr-coeff.
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = minda_core::verify::DEFAULT_SEED)]
        seed: u64,
        /// Boundary samples for polygon tests.
        #[arg(long, default_value_t = minda_core::verify::DEFAULT_GRID)]
        grid: usize,
    },
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] minda_core::Error),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
}

impl CliError {
    fn exit_code(&self) -> u8 {
        use minda_core::Error as E;
        match self {
            CliError::Usage(_) => 2,
            CliError::Core(
                E::UnknownId(_)
                | E::MissingParameter { .. }
                | E::ParameterRange { .. }
                | E::Domain { .. }
                | E::Precondition(_),
            ) => 2,
            CliError::Core(_) => 3,
            CliError::Io { .. } => 4,
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;

fn parse_pair(s: &str) -> CliResult<(String, f64)> {
    let (k, v) = s
        .split_once('=')
        .ok_or_else(|| CliError::Usage(format!("expected NAME=VALUE, got `{s}`")))?;
    let v = v
        .trim()
        .parse::<f64>()
        .map_err(|_| CliError::Usage(format!("`{v}` is not a number in `{s}`")))?;
    Ok((k.trim().to_string(), v))
}

/// Builds `ψ` from a key and parameters, rejecting parameters the entry
/// does not take.
pub fn build_class(id: &str, params: Params) -> CliResult<MindaFunction> {
    let names: Vec<&str> = catalog::parameter_ranges(id)?.iter().map(|(n, _)| *n).collect();
    if let Some(extra) = params.keys().find(|k| !names.contains(&k.as_str())) {
        return Err(CliError::Usage(format!(
            "`{id}` takes no parameter `{extra}` (parameters: {})",
            if names.is_empty() { "none".to_string() } else { names.join(", ") }
        )));
    }
    Ok(catalog::get(id, &params)?)
}

impl ClassArgs {
    pub fn params(&self) -> CliResult<Params> {
        let mut p = Params::new();
        let named = [
            ("D", self.d),
            ("E", self.e),
            ("alpha", self.alpha),
            ("eta", self.eta),
            ("a", self.a),
            ("b", self.b),
            ("beta", self.beta),
        ];
        for (k, v) in named {
            if let Some(v) = v {
                p.insert(k.to_string(), v);
            }
        }
        for s in &self.params {
            let (k, v) = parse_pair(s)?;
            p.insert(k, v);
        }
        Ok(p)
    }

    pub fn id(&self) -> CliResult<&str> {
        self.class
            .as_deref()
            .ok_or_else(|| CliError::Usage("--class is required".into()))
    }

    pub fn build(&self) -> CliResult<MindaFunction> {
        build_class(self.id()?, self.params()?)
    }

    /// `class` and parameters for the report's `inputs`.
    pub fn echo(&self, inputs: &mut BTreeMap<String, Value>) -> CliResult<()> {
        if let Some(c) = &self.class {
            inputs.insert("class".into(), Value::from(c.replace('-', "_")));
        }
        let params = self.params()?;
        if !params.is_empty() {
            inputs.insert("params".into(), serde_json::to_value(params).expect("finite map"));
        }
        Ok(())
    }
}

fn run(cli: &Cli) -> CliResult<(RunReport, String)> {
    if cli.order < 8 {
        return Err(CliError::Usage(format!(
            "series order must be at least 8, got {}",
            cli.order
        )));
    }
    match &cli.command {
        Command::Catalog { id } => commands::catalog(id.as_deref()),
        Command::Radius {
            class,
            kind,
            class2,
            params2,
            mbeta,
            gamma,
        } => {
            let second = match (kind, class2) {
                (Kind::ProductMbeta | Kind::ProductOrder, _) => {
                    let mut p = Params::new();
                    for s in params2 {
                        let (k, v) = parse_pair(s)?;
                        p.insert(k, v);
                    }
                    let (id, p) = match class2 {
                        Some(id) => (id.as_str(), p),
                        None if params2.is_empty() => (class.id()?, class.params()?),
                        None => (class.id()?, p),
                    };
                    Some((id.replace('-', "_"), build_class(id, p)?))
                }
                (_, Some(_)) => {
                    return Err(CliError::Usage("--class2 only applies to the product kinds".into()))
                }
                _ => None,
            };
            commands::radius(class, *kind, second, *mbeta, *gamma)
        }
        Command::Bohr { class } => commands::bohr(class, cli.order),
        Command::Distort {
            class,
            radii,
            table1,
        } => commands::distort(class, radii, *table1, cli.order),
        Command::Curve {
            class,
            object,
            r,
            n_points,
            out,
            svg,
        } => commands::curve(class, *object, *r, *n_points, out.as_deref(), svg.as_deref(), cli.order),
        Command::Verify {
            class,
            probe,
            eps,
            r,
            g,
            h,
            samples,
            seed,
            grid,
        } => commands::verify(
            class,
            commands::VerifyArgs {
                probe: *probe,
                eps: *eps,
                r: *r,
                g: g.as_deref(),
                h,
                samples: *samples,
                seed: *seed,
                grid: *grid,
                order: cli.order,
            },
        ),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    match run(&cli) {
        Ok((mut report, human)) => {
            report.inputs.insert("order".into(), Value::from(cli.order));
            if cli.timing {
                report.timing_ms = Some(start.elapsed().as_secs_f64() * 1e3);
            }
            if cli.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&report).expect("reports hold finite numbers")
                );
            } else {
                print!("{human}");
                if let Some(ms) = report.timing_ms {
                    println!("time  {ms:.3} ms");
                }
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
