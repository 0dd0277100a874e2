//! `coophunt`: scenario runner and thin per-analysis subcommands.
//!
//! Exit codes: 0 success, 1 invalid configuration or arguments, 2 numeric failure.

mod config;
mod output;
mod tasks;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand};
use coophunt::dynamics::IntegratorOptions;
use coophunt::ParamSet;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use config::{BtConfig, CyclesConfig, Grid, HopfConfig, LabeledParams, Scenario, Task};
use output::{csv_bytes, json_bytes, write_file, Format};

/// Overrides the worker count of the parallel tasks.
const WORKERS_ENV: &str = "COOPHUNT_WORKERS";

#[derive(Parser, Debug)]
#[command(name = "coophunt", version, about = "Bifurcation analysis of a cooperative-hunting predator-prey model")]
struct Cli {
    #[arg(long, value_enum, default_value = "json", global = true)]
    format: Format,
    /// Seed for the order in which randomized fans and grids are evaluated.
    #[arg(long, default_value_t = 0, global = true)]
    seed: u64,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Debug, Clone, Copy)]
struct PointArgs {
    #[arg(long, allow_negative_numbers = true)]
    alpha: f64,
    #[arg(long, allow_negative_numbers = true)]
    kappa: f64,
    #[arg(long, allow_negative_numbers = true)]
    sigma: f64,
    #[arg(long, allow_negative_numbers = true)]
    h: f64,
}

impl PointArgs {
    fn labeled(&self) -> Result<Vec<LabeledParams>, Failure> {
        let params = ParamSet::new(self.alpha, self.kappa, self.sigma, self.h).map_err(|e| Failure::Config(e.into()))?;
        Ok(vec![LabeledParams { label: "cli".into(), params }])
    }
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// All equilibria with their types.
    Equilibria(PointArgs),
    /// Region of parameter space by number of positive equilibria.
    Region(PointArgs),
    /// Cusp anchor, curve coefficients and the local bifurcation curves.
    Bt {
        #[arg(long)]
        xstar: f64,
        #[arg(long)]
        h: f64,
        #[arg(long, default_value_t = 0.1)]
        radius: f64,
        #[arg(long, default_value_t = 41)]
        count: usize,
    },
    /// Hopf point and focal values, from (κ, h, x₁) or nearest to (α, κ, σ, h).
    Hopf {
        #[arg(long)]
        kappa: f64,
        #[arg(long)]
        h: f64,
        #[arg(long, conflicts_with_all = ["alpha", "sigma"])]
        x1: Option<f64>,
        #[arg(long, requires = "sigma")]
        alpha: Option<f64>,
        #[arg(long, requires = "alpha")]
        sigma: Option<f64>,
    },
    /// Integrate one orbit.
    Simulate {
        #[command(flatten)]
        point: PointArgs,
        #[arg(long)]
        x0: f64,
        #[arg(long)]
        y0: f64,
        #[arg(long)]
        t_end: f64,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
    /// Limit cycles around the positive focus.
    Cycles {
        #[command(flatten)]
        point: PointArgs,
        /// Section direction as two components.
        #[arg(long, num_args = 2, allow_negative_numbers = true)]
        direction: Option<Vec<f64>>,
        #[arg(long)]
        r_min: Option<f64>,
        #[arg(long)]
        r_max: Option<f64>,
        /// Starts whose successive crossings are reported, as x,y pairs.
        #[arg(long = "probe", value_parser = parse_pair)]
        probes: Vec<[f64; 2]>,
    },
    /// Region and equilibrium types over a parameter grid file.
    Sweep {
        #[arg(long)]
        grid: PathBuf,
    },
    /// Multiplicity-three witness and the locus samples (exact arithmetic, slow).
    Variety {
        /// Skip sampling the multiplicity-three locus.
        #[arg(long)]
        no_samples: bool,
    },
    /// Row verdicts for the local unfolding at the cusp.
    Table1,
    /// Run a scenario file and write its artifacts.
    Run {
        config: PathBuf,
        /// Output directory; overrides the scenario's `output_dir`.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn parse_pair(s: &str) -> Result<[f64; 2], String> {
    let (a, b) = s.split_once(',').ok_or("expected x,y")?;
    let x = a.trim().parse::<f64>().map_err(|e| e.to_string())?;
    let y = b.trim().parse::<f64>().map_err(|e| e.to_string())?;
    Ok([x, y])
}

#[derive(Debug)]
enum Failure {
    Config(anyhow::Error),
    Numeric(anyhow::Error),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Numeric(e)
    }
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
    if let Some(n) = std::env::var(WORKERS_ENV).ok().and_then(|v| v.parse::<usize>().ok()) {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    match dispatch(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Config(e)) => {
            eprintln!("invalid configuration: {e:#}");
            ExitCode::from(1)
        }
        Err(Failure::Numeric(e)) => {
            eprintln!("numeric failure: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn emit<T: Serialize>(fmt: Format, artifact: &str, rows: &[T], whole: &impl Serialize) -> anyhow::Result<()> {
    let bytes = match fmt {
        Format::Csv => csv_bytes(rows)?,
        Format::Json => json_bytes(artifact, "cli", whole)?,
    };
    output::stdout(&bytes)
}

fn dispatch(cli: &Cli) -> Result<(), Failure> {
    let fmt = cli.format;
    let opts = IntegratorOptions::default();
    match &cli.cmd {
        Cmd::Equilibria(a) => {
            let rows = tasks::equilibria(&a.labeled()?)?;
            emit(fmt, "equilibria", &rows, &rows)?;
        }
        Cmd::Region(a) => {
            let rows = tasks::regions(&a.labeled()?);
            emit(fmt, "region", &rows, &rows)?;
        }
        Cmd::Bt { xstar, h, radius, count } => {
            let cfg = BtConfig { x_star: *xstar, h: *h, radius: *radius, count: *count };
            if !(cfg.radius > 0.0 && cfg.count >= 2) {
                return Err(Failure::Config(anyhow!("radius must be positive and count at least 2")));
            }
            let rep = tasks::bt(&cfg).map_err(Failure::Config)?;
            emit(fmt, "bt", &rep.curves, &rep)?;
        }
        Cmd::Hopf { kappa, h, x1, alpha, sigma } => {
            let entry = match (x1, alpha, sigma) {
                (Some(x1), _, _) => tasks::hopf_at(&HopfConfig { kappa: *kappa, h: *h, x1: *x1 }),
                (None, Some(a), Some(s)) => {
                    let params = ParamSet::new(*a, *kappa, *s, *h).map_err(|e| Failure::Config(e.into()))?;
                    tasks::hopf_near(&[LabeledParams { label: "cli".into(), params }]).map(|mut v| v.remove(0))
                }
                _ => return Err(Failure::Config(anyhow!("give --x1, or --alpha and --sigma"))),
            }?;
            let row = HopfSummary::from(&entry);
            emit(fmt, "hopf", &[row], &entry)?;
        }
        Cmd::Simulate { point, x0, y0, t_end, tol } => {
            let lp = point.labeled()?;
            if !(*t_end > 0.0 && *tol > 0.0) {
                return Err(Failure::Config(anyhow!("t-end and tol must be positive")));
            }
            let rows = tasks::simulate(&lp[0].params, &[[*x0, *y0]], *t_end, IntegratorOptions::with_tol(*tol))?;
            emit(fmt, "trajectory", &rows, &rows)?;
        }
        Cmd::Cycles { point, direction, r_min, r_max, probes } => {
            let cfg = CyclesConfig {
                direction: direction.as_ref().map(|d| [d[0], d[1]]),
                r_min: *r_min,
                r_max: *r_max,
                probes: probes.clone(),
                ..Default::default()
            };
            let entries = tasks::cycles(&point.labeled()?, &cfg, opts)?;
            let rows: Vec<CycleRow> = entries.iter().flat_map(CycleRow::rows).collect();
            emit(fmt, "cycles", &rows, &entries)?;
        }
        Cmd::Sweep { grid } => {
            let text = std::fs::read_to_string(grid).with_context(|| format!("reading {}", grid.display())).map_err(Failure::Config)?;
            let g: Grid = serde_json::from_str(&text).context("parsing grid").map_err(Failure::Config)?;
            let pts = g.points().map_err(Failure::Config)?;
            let rows = sweep(&pts, cli.seed)?;
            emit(fmt, "sweep", &rows, &rows)?;
        }
        Cmd::Variety { no_samples } => {
            let rep = tasks::variety(!no_samples)?;
            emit(fmt, "variety", &rep.candidates, &rep)?;
        }
        Cmd::Table1 => {
            let t = tasks::table1(opts)?;
            let rows: Vec<Table1Row> = t.rows.iter().map(Table1Row::from).collect();
            emit(fmt, "table1", &rows, &t)?;
        }
        Cmd::Run { config, out } => run(config, out.as_deref(), cli.seed)?,
    }
    Ok(())
}

/// Grid points evaluated in a seeded shuffled order, reported in grid order.
fn sweep(pts: &[ParamSet], seed: u64) -> anyhow::Result<Vec<tasks::SweepRow>> {
    let mut order: Vec<usize> = (0..pts.len()).collect();
    order.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    let mut rows: Vec<tasks::SweepRow> =
        order.par_iter().map(|&i| tasks::sweep_row(i, &pts[i])).collect::<anyhow::Result<_>>()?;
    rows.sort_by_key(|r| r.index);
    Ok(rows)
}

#[derive(Serialize)]
struct HopfSummary {
    kappa: f64,
    h: f64,
    x1: f64,
    alpha: f64,
    sigma: f64,
    y1: f64,
    omega: f64,
    in_p: bool,
    l1: f64,
    l2: f64,
    l3: f64,
    multiplicity: u8,
}

impl From<&tasks::HopfEntry> for HopfSummary {
    fn from(e: &tasks::HopfEntry) -> Self {
        let c = &e.critical;
        HopfSummary {
            kappa: c.kappa,
            h: c.h,
            x1: c.x1,
            alpha: c.alpha,
            sigma: c.sigma,
            y1: c.y1,
            omega: c.omega,
            in_p: c.in_p,
            l1: e.focal.l1,
            l2: e.focal.l2,
            l3: e.focal.l3,
            multiplicity: e.focal.multiplicity,
        }
    }
}

#[derive(Serialize)]
struct CycleRow {
    label: String,
    x: f64,
    y: f64,
    radius: f64,
    period: f64,
    stability: String,
    multiplier: f64,
}

impl CycleRow {
    fn rows(e: &tasks::CycleEntry) -> Vec<CycleRow> {
        e.report
            .iter()
            .flat_map(|r| r.cycles.iter())
            .map(|c| CycleRow {
                label: e.label.clone(),
                x: c.point.x,
                y: c.point.y,
                radius: c.radius,
                period: c.period,
                stability: format!("{:?}", c.stability),
                multiplier: c.multiplier,
            })
            .collect()
    }
}

#[derive(Serialize)]
struct Table1Row {
    row: String,
    sigma: f64,
    alpha: f64,
    inventory: String,
    orbits: String,
    matches: bool,
}

impl From<&coophunt::dynamics::RowVerdict> for Table1Row {
    fn from(v: &coophunt::dynamics::RowVerdict) -> Self {
        Table1Row {
            row: format!("{:?}", v.row),
            sigma: v.sigma,
            alpha: v.alpha,
            inventory: format!("{:?}", v.inventory),
            orbits: format!("{:?}", v.orbits),
            matches: v.matches,
        }
    }
}

#[derive(Serialize)]
struct ManifestEntry {
    task: Task,
    files: Vec<String>,
}

#[derive(Serialize)]
struct Manifest<'a> {
    name: &'a str,
    seed: u64,
    artifacts: Vec<ManifestEntry>,
}

#[derive(Serialize)]
struct Diagnostic<'a> {
    task: Task,
    error: String,
    scenario: &'a Scenario,
}

fn run(config: &Path, out: Option<&Path>, seed: u64) -> Result<(), Failure> {
    let sc = Scenario::load(config).map_err(Failure::Config)?;
    let dir = match (out, &sc.output_dir) {
        (Some(o), _) => o.to_path_buf(),
        (None, Some(d)) => d.clone(),
        (None, None) => PathBuf::from("out").join(&sc.name),
    };
    std::fs::create_dir_all(&dir).with_context(|| format!("creating {}", dir.display()))?;
    let points = sc.parameter_sets().map_err(Failure::Config)?;
    let mut tasks_sorted = sc.tasks.clone();
    tasks_sorted.dedup();
    let mut manifest = Manifest { name: &sc.name, seed, artifacts: Vec::new() };
    for &task in &tasks_sorted {
        match run_task(&sc, task, &points, &dir) {
            Ok(files) => manifest.artifacts.push(ManifestEntry { task, files }),
            Err(e) => {
                let diag = Diagnostic { task, error: format!("{e:#}"), scenario: &sc };
                write_file(&dir, "diagnostic.json", &json_bytes("diagnostic", &sc.name, &diag)?)?;
                return Err(Failure::Numeric(e.context(format!("task {task:?}"))));
            }
        }
    }
    write_file(&dir, "manifest.json", &json_bytes("manifest", &sc.name, &manifest)?)?;
    Ok(())
}

fn run_task(sc: &Scenario, task: Task, points: &[LabeledParams], dir: &Path) -> anyhow::Result<Vec<String>> {
    let name = sc.name.as_str();
    let opts: IntegratorOptions = sc.integrator.into();
    let one = |file: &str, bytes: Vec<u8>| -> anyhow::Result<Vec<String>> {
        write_file(dir, file, &bytes)?;
        Ok(vec![file.to_string()])
    };
    match task {
        Task::Equilibria => one("equilibria.csv", csv_bytes(&tasks::equilibria(points)?)?),
        Task::Region => one("region.csv", csv_bytes(&tasks::regions(points))?),
        Task::Bt => one("bt_curves.csv", csv_bytes(&tasks::bt(&sc.bt)?.curves)?),
        Task::Hopf => {
            let entries = match &sc.hopf {
                Some(h) => vec![tasks::hopf_at(h)?],
                None => tasks::hopf_near(points)?,
            };
            one("hopf.json", json_bytes("hopf", name, &entries)?)
        }
        Task::Simulate => {
            let mut files = Vec::new();
            for lp in points {
                let rows = tasks::simulate(&lp.params, &sc.simulate.starts, sc.simulate.t_end, opts)?;
                let file = if points.len() == 1 { "trajectory.csv".to_string() } else { format!("trajectory_{}.csv", lp.label) };
                write_file(dir, &file, &csv_bytes(&rows)?)?;
                files.push(file);
            }
            Ok(files)
        }
        Task::Cycles => one("cycles.json", json_bytes("cycles", name, &tasks::cycles(points, &sc.cycles, opts)?)?),
        Task::Table1 => one("table1.json", json_bytes("table1", name, &tasks::table1(opts)?)?),
        Task::Variety => one("variety.json", json_bytes("variety", name, &tasks::variety(sc.variety.sample)?)?),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sweep_is_seed_independent() {
        let g = Grid {
            alpha: config::Axis::List(vec![6.0, 17.5, 18.0]),
            kappa: config::Axis::Value(1.2),
            sigma: config::Axis::List(vec![0.35, 1.0]),
            h: config::Axis::Value(0.5),
        };
        let pts = g.points().unwrap();
        let a = sweep(&pts, 1).unwrap();
        let b = sweep(&pts, 99).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.len(), 6);
    }
}
