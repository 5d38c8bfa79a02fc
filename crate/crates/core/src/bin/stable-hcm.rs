use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use stable_hcm::cli::{
    density_table, galpha_table, parse_density_method, parse_grid, parse_method, parse_side, CliError, Format,
    OutputSpec, Point, Summary, EXIT_FAIL, EXIT_PASS,
};
use stable_hcm::numerics::QuadConfig;
use stable_hcm::thorin::build_theta;
use stable_hcm::verify::{self, Suite, VerifyOptions};

#[derive(Parser)]
#[command(name = "stable-hcm", version, about = "Stable densities, G_alpha and HCM checks")]
struct Cli {
    /// Worker threads for grid evaluation (output order is unchanged).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Output {
    #[arg(long, default_value = "csv")]
    format: String,
    /// Significant digits, 6 to 17.
    #[arg(long, default_value_t = 17)]
    precision: usize,
    /// Write here instead of standard output.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Density of the strictly stable law on (0, ∞).
    Density {
        #[arg(long)]
        alpha: f64,
        #[arg(long, default_value_t = 1.0)]
        rho: f64,
        /// Evaluation points; repeat or separate with commas.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        x: Vec<f64>,
        /// `a:b:n`, n points from a to b.
        #[arg(long)]
        grid: Option<String>,
        /// Space the grid logarithmically.
        #[arg(long)]
        log: bool,
        #[arg(long, default_value = "auto")]
        method: String,
        #[command(flatten)]
        out: Output,
    },
    /// G_alpha at r e^{iπt}, or its boundary value on the cut.
    Galpha {
        #[arg(long)]
        alpha: f64,
        #[arg(long, value_delimiter = ',')]
        r: Vec<f64>,
        #[arg(long)]
        grid: Option<String>,
        #[arg(long)]
        log: bool,
        #[arg(long, allow_hyphen_values = true)]
        t: Option<f64>,
        /// Boundary side: upper or lower.
        #[arg(long)]
        cut: Option<String>,
        #[arg(long, default_value = "auto")]
        method: String,
        #[command(flatten)]
        out: Output,
    },
    /// Boundary angle table; with --out writes STEM.csv and STEM.json.
    ThetaTable {
        #[arg(long)]
        alpha: f64,
        #[arg(long, default_value_t = 1e-4)]
        t_min: f64,
        #[arg(long, default_value_t = 1e4)]
        t_max: f64,
        #[arg(long, default_value_t = 2000)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run verification suites; exits 1 if any check fails.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        /// Overrides the suite's α list; repeat or separate with commas.
        #[arg(long, value_delimiter = ',')]
        alpha: Vec<f64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

fn sink(path: &Option<PathBuf>) -> Result<Box<dyn Write>, CliError> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn output_spec(out: &Output) -> Result<OutputSpec, CliError> {
    OutputSpec::new(out.format.parse::<Format>()?, out.precision)
}

fn points(list: Vec<f64>, grid: Option<String>, log: bool, what: &str) -> Result<Vec<f64>, CliError> {
    let mut pts = list;
    if let Some(g) = grid {
        pts.extend(parse_grid(&g, log)?);
    }
    if pts.is_empty() {
        return Err(CliError::Usage(format!("give --{what} or --grid")));
    }
    Ok(pts)
}

fn run(cli: Cli) -> Result<i32, CliError> {
    if let Some(n) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| CliError::Usage(e.to_string()))?;
    }
    let quad = QuadConfig::from_env().map_err(|e| CliError::Usage(e.to_string()))?;
    match cli.command {
        Command::Density { alpha, rho, x, grid, log, method, out } => {
            let spec = output_spec(&out)?;
            let xs = points(x, grid, log, "x")?;
            let table = density_table(alpha, rho, &xs, parse_density_method(&method)?, &quad)?;
            let mut w = sink(&out.output)?;
            table.write(&spec, &mut w)?;
            w.flush()?;
        }
        Command::Galpha { alpha, r, grid, log, t, cut, method, out } => {
            let spec = output_spec(&out)?;
            let side = cut.as_deref().map(parse_side).transpose()?;
            let pts = points(r, grid, log, "r")?
                .into_iter()
                .map(|r| Point::parse(r, t, side))
                .collect::<Result<Vec<_>, _>>()?;
            let table = galpha_table(alpha, &pts, parse_method(&method)?, &quad)?;
            let mut w = sink(&out.output)?;
            table.write(&spec, &mut w)?;
            w.flush()?;
        }
        Command::ThetaTable { alpha, t_min, t_max, n, out } => {
            let table = build_theta(alpha, t_min, t_max, n).map_err(|e| match e {
                stable_hcm::Error::Domain(_) | stable_hcm::Error::BadRange(_) | stable_hcm::Error::GridTooSmall { .. } => CliError::Usage(e.to_string()),
                _ => CliError::Numerical(e.to_string()),
            })?;
            match out {
                Some(stem) => table.save(&stem).map_err(|e| CliError::Numerical(e.to_string()))?,
                None => {
                    let mut w = sink(&None)?;
                    table.write_csv(&mut w).map_err(|e| CliError::Numerical(e.to_string()))?;
                    w.flush()?;
                }
            }
        }
        Command::Verify { suite, alpha, seed, output } => {
            let suite: Suite = suite.parse().map_err(|e: stable_hcm::Error| CliError::Usage(e.to_string()))?;
            let opts = VerifyOptions {
                alphas: (!alpha.is_empty()).then_some(alpha),
                seed,
                quad,
            };
            let report = verify::run(suite, &opts).map_err(|e| match e {
                stable_hcm::Error::Domain(_) => CliError::Usage(e.to_string()),
                _ => CliError::Numerical(e.to_string()),
            })?;
            let mut w = sink(&output)?;
            writeln!(w, "{}", report.to_json())?;
            w.flush()?;
            eprintln!("{}", Summary(&report));
            return Ok(if report.pass { EXIT_PASS } else { EXIT_FAIL });
        }
    }
    Ok(EXIT_PASS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("stable-hcm: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
