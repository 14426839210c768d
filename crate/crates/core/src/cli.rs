//! Command-line front end. Exit codes: 0 success, 1 failed verification,
//! 2 usage or runtime error.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::catalog::{self, census_with, plots_csv, read_catalog, verify_catalog, write_svgs};
use crate::enumerate::{default_workers, enumerate_connected_with, enumerate_levels, EnumerationConfig};
use crate::error::{Error, Result};
use crate::planarity::is_planar;
use crate::realize::SolveConfig;

#[derive(Debug, Parser)]
#[command(name = "matchstick", version, about = "Census of small matchstick graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print one line per connected graph with the given edge count.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        workers: Option<usize>,
    },
    /// Run the census and write every artifact into a directory.
    Census {
        #[arg(long = "n-max")]
        n_max: usize,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        workers: Option<usize>,
        #[command(flatten)]
        solve: SolveArgs,
    },
    /// Regenerate the SVG drawings of a catalog.
    Render {
        #[arg(long)]
        catalog: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Re-validate every embedding and recount from the stored graphs.
    Verify {
        #[arg(long)]
        catalog: PathBuf,
        #[command(flatten)]
        solve: SolveArgs,
    },
    /// Write growth data for a catalog; defaults to plots.csv beside it.
    Plots {
        #[arg(long)]
        catalog: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        workers: Option<usize>,
    },
}

/// Solver budget and tolerance overrides.
#[derive(Debug, Clone, Default, Args)]
pub struct SolveArgs {
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long)]
    pub restarts: Option<usize>,
    #[arg(long)]
    pub length_tol: Option<f64>,
    #[arg(long)]
    pub cross_tol: Option<f64>,
    #[arg(long)]
    pub angle_tol: Option<f64>,
    #[arg(long)]
    pub vertex_sep: Option<f64>,
}

impl SolveArgs {
    pub fn config(&self) -> Result<SolveConfig> {
        let mut cfg = SolveConfig::default();
        if let Some(s) = self.seed {
            cfg.rng_seed = s;
        }
        if let Some(r) = self.restarts {
            cfg.restarts = r;
        }
        if let Some(t) = self.length_tol {
            cfg.length_tol = t;
        }
        if let Some(t) = self.cross_tol {
            cfg.cross_tol = t;
        }
        if let Some(t) = self.angle_tol {
            cfg.angle_tol = t;
        }
        if let Some(t) = self.vertex_sep {
            cfg.vertex_sep = t;
        }
        cfg.validate()?;
        Ok(cfg)
    }
}

/// Parses `argv` (program name first) and runs the command.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}

pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn workers(w: Option<usize>) -> usize {
    w.filter(|&w| w > 0).unwrap_or_else(default_workers)
}

fn io(path: &Path) -> impl FnOnce(std::io::Error) -> Error + '_ {
    move |e| Error::io(path, e)
}

fn execute(command: Command, out: &mut dyn Write) -> Result<i32> {
    let stdout = Path::new("<stdout>");
    match command {
        Command::Enumerate { n, workers: w } => {
            for g in enumerate_connected_with(n, workers(w))? {
                writeln!(out, "{g}").map_err(io(stdout))?;
            }
        }
        Command::Census {
            n_max,
            out: dir,
            workers: w,
            solve,
        } => {
            let records = census_with(n_max, &solve.config()?, workers(w))?;
            catalog::write_artifacts(&records, &dir)?;
            for r in &records {
                let exhausted = r.exhausted().count();
                writeln!(out, "n={} q={} p={} exhausted={exhausted}", r.n, r.q(), r.p())
                    .map_err(io(stdout))?;
            }
        }
        Command::Render { catalog, out: dir } => {
            let count = write_svgs(&read_catalog(&catalog)?, &dir)?;
            writeln!(out, "wrote {count} drawings to {}", dir.display()).map_err(io(stdout))?;
        }
        Command::Verify { catalog, solve } => {
            let report = verify_catalog(&read_catalog(&catalog)?, &solve.config()?);
            for p in &report.problems {
                writeln!(out, "FAIL {p}").map_err(io(stdout))?;
            }
            writeln!(
                out,
                "checked {} members, {} problems",
                report.members,
                report.problems.len()
            )
            .map_err(io(stdout))?;
            return Ok(if report.passed() { 0 } else { 1 });
        }
        Command::Plots {
            catalog: path,
            out: target,
            workers: w,
        } => {
            let catalog = read_catalog(&path)?;
            let n_max = catalog.iter().map(|r| r.n).max().unwrap_or(1);
            let levels = enumerate_levels(&EnumerationConfig::new(n_max).with_workers(workers(w)))?;
            let planar: Vec<usize> = catalog
                .iter()
                .map(|r| levels[r.n - 1].iter().filter(|g| is_planar(g)).count())
                .collect();
            let target = target.unwrap_or_else(|| path.with_file_name("plots.csv"));
            std::fs::write(&target, plots_csv(&catalog, &planar)).map_err(io(&target))?;
            writeln!(out, "wrote {}", target.display()).map_err(io(stdout))?;
        }
    }
    Ok(0)
}
