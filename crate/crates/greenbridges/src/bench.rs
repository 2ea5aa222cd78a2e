//! The benchmark harness: a line-based grid configuration, a parallel
//! runner producing one record per (instance, solver) cell, RFC-4180 CSV
//! output with incremental flushing, and a generated gnuplot script.

use std::fmt;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use num_rational::Ratio;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{Graph, Instance};
use crate::io::parse_instance;
use crate::metrics::{compute_ratios, intersection_rate};
use crate::planar::{rotation_system_from_coordinates, Coordinates};
use crate::{approx, generators, solvers};
use solvers::{SolveResult, SolveStatus};

/// Default per-solve time limit (the search, not instance building).
pub const DEFAULT_TIME_LIMIT: Duration = Duration::from_secs(30);

/// Environment variable overriding the configured time limit.
pub const TIME_LIMIT_ENV: &str = "GBP_TIME_LIMIT_MS";

/// Fixed CSV header.
pub const CSV_HEADER: &str = "instance_id,habitat_type,r,q,solver,status,cost,lower_bound,\
wall_time_ms,build_time_ms,lambda,quality_ratio,additive_ratio";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HabitatType {
    Face,
    Cycle,
    Walk,
}

impl HabitatType {
    fn parse(s: &str) -> Option<Self> {
        match s {
            "face" => Some(HabitatType::Face),
            "cycle" => Some(HabitatType::Cycle),
            "walk" => Some(HabitatType::Walk),
            _ => None,
        }
    }

    fn uses_q(self) -> bool {
        !matches!(self, HabitatType::Face)
    }
}

impl fmt::Display for HabitatType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            HabitatType::Face => "face",
            HabitatType::Cycle => "cycle",
            HabitatType::Walk => "walk",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolverKind {
    Mwm,
    Mwhm,
    Generic,
    Apx,
    Brute,
    Auto,
}

impl SolverKind {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "mwm" => Some(SolverKind::Mwm),
            "mwhm" => Some(SolverKind::Mwhm),
            "generic" => Some(SolverKind::Generic),
            "apx" => Some(SolverKind::Apx),
            "brute" => Some(SolverKind::Brute),
            "auto" => Some(SolverKind::Auto),
            _ => None,
        }
    }
}

impl fmt::Display for SolverKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SolverKind::Mwm => "mwm",
            SolverKind::Mwhm => "mwhm",
            SolverKind::Generic => "generic",
            SolverKind::Apx => "apx",
            SolverKind::Brute => "brute",
            SolverKind::Auto => "auto",
        })
    }
}

/// Runs one solver on an instance.
pub fn run_solver(kind: SolverKind, inst: &Instance, limit: Option<Duration>) -> SolveResult {
    match kind {
        SolverKind::Mwm => solvers::solve_mwm(inst),
        SolverKind::Mwhm => solvers::solve_mwhm(inst, limit),
        SolverKind::Generic => solvers::solve_generic(inst, limit),
        SolverKind::Apx => approx::solve_apx(inst),
        SolverKind::Brute => match solvers::solve_brute_force(inst) {
            Ok(res) => res,
            Err(_) => SolveResult {
                solution: None,
                status: SolveStatus::UnsupportedHabitats,
                wall_time: Duration::ZERO,
                lower_bound: None,
            },
        },
        SolverKind::Auto => solvers::solve_auto(inst, limit),
    }
}

/// Grid configuration for the benchmark runner.
#[derive(Debug, Clone, PartialEq)]
pub struct BenchConfig {
    pub graphs: Vec<PathBuf>,
    pub types: Vec<HabitatType>,
    pub r_values: Vec<usize>,
    pub q_values: Vec<usize>,
    pub seeds: Vec<u64>,
    pub solvers: Vec<SolverKind>,
    pub time_limit: Duration,
    pub parallelism: usize,
}

/// Parses the line-based `key=value` configuration. `graph=`, `type=`,
/// `r=`, `q=`, `seed=`, and `solver=` repeat to span the grid;
/// `time_limit_ms=` and `parallelism=` appear at most once.
pub fn parse_config(text: &str) -> Result<BenchConfig> {
    let mut config = BenchConfig {
        graphs: Vec::new(),
        types: Vec::new(),
        r_values: Vec::new(),
        q_values: Vec::new(),
        seeds: Vec::new(),
        solvers: Vec::new(),
        time_limit: DEFAULT_TIME_LIMIT,
        parallelism: rayon::current_num_threads(),
    };
    for (idx, raw) in text.lines().enumerate() {
        let ln = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            return Err(Error::Parse {
                line: ln,
                message: format!("expected key=value, got {line:?}"),
            });
        };
        let (key, value) = (key.trim(), value.trim());
        let bad = |what: &str| Error::Parse {
            line: ln,
            message: format!("invalid {what}: {value:?}"),
        };
        match key {
            "graph" => config.graphs.push(PathBuf::from(value)),
            "type" => config
                .types
                .push(HabitatType::parse(value).ok_or_else(|| bad("habitat type"))?),
            "r" => config
                .r_values
                .push(value.parse().map_err(|_| bad("habitat count r"))?),
            "q" => config
                .q_values
                .push(value.parse().map_err(|_| bad("length parameter q"))?),
            "seed" => config.seeds.push(value.parse().map_err(|_| bad("seed"))?),
            "solver" => config
                .solvers
                .push(SolverKind::parse(value).ok_or_else(|| bad("solver"))?),
            "time_limit_ms" => {
                let ms: u64 = value.parse().map_err(|_| bad("time limit"))?;
                config.time_limit = Duration::from_millis(ms);
            }
            "parallelism" => {
                config.parallelism = value.parse().map_err(|_| bad("parallelism"))?;
            }
            _ => {
                return Err(Error::Parse {
                    line: ln,
                    message: format!("unknown key {key:?}"),
                });
            }
        }
    }
    for (name, empty) in [
        ("graph", config.graphs.is_empty()),
        ("type", config.types.is_empty()),
        ("r", config.r_values.is_empty()),
        ("seed", config.seeds.is_empty()),
        ("solver", config.solvers.is_empty()),
    ] {
        if empty {
            return Err(Error::Input(format!(
                "config needs at least one `{name}=` entry"
            )));
        }
    }
    if config.types.iter().any(|t| t.uses_q()) && config.q_values.is_empty() {
        return Err(Error::Input(
            "cycle/walk types need at least one `q=` entry".into(),
        ));
    }
    Ok(config)
}

/// One benchmark row.
#[derive(Debug, Clone, PartialEq)]
pub struct BenchmarkRecord {
    pub instance_id: String,
    pub habitat_type: HabitatType,
    pub r: usize,
    pub q: Option<usize>,
    pub solver: SolverKind,
    pub status: SolveStatus,
    pub cost: Option<u64>,
    pub lower_bound: Option<u64>,
    pub wall_time: Duration,
    pub build_time: Duration,
    pub lambda: Ratio<u64>,
    pub quality_ratio: Option<Ratio<u64>>,
    pub additive_ratio: Option<Ratio<u64>>,
}

fn status_str(status: SolveStatus) -> &'static str {
    match status {
        SolveStatus::Optimal => "optimal",
        SolveStatus::TimeoutIncumbent => "timeout_incumbent",
        SolveStatus::InfeasibleInput => "infeasible_input",
        SolveStatus::UnsupportedHabitats => "unsupported_habitats",
        SolveStatus::Feasible => "feasible",
    }
}

/// RFC-4180 field quoting.
fn csv_field(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn ratio_str(r: &Ratio<u64>) -> String {
    format!("{:.6}", *r.numer() as f64 / *r.denom() as f64)
}

/// One CSV line (without trailing newline) for a record.
pub fn csv_row(rec: &BenchmarkRecord) -> String {
    let opt_u64 = |v: Option<u64>| v.map(|x| x.to_string()).unwrap_or_default();
    let fields = [
        csv_field(&rec.instance_id),
        rec.habitat_type.to_string(),
        rec.r.to_string(),
        rec.q.map(|q| q.to_string()).unwrap_or_default(),
        rec.solver.to_string(),
        status_str(rec.status).to_string(),
        opt_u64(rec.cost),
        opt_u64(rec.lower_bound),
        rec.wall_time.as_millis().to_string(),
        rec.build_time.as_millis().to_string(),
        ratio_str(&rec.lambda),
        rec.quality_ratio
            .as_ref()
            .map(ratio_str)
            .unwrap_or_default(),
        rec.additive_ratio
            .as_ref()
            .map(ratio_str)
            .unwrap_or_default(),
    ];
    fields.join(",")
}

/// One grid cell: a generated instance to be run by every solver.
struct Cell {
    graph_index: usize,
    habitat_type: HabitatType,
    r: usize,
    q: Option<usize>,
    seed: u64,
}

fn instance_id(graph: &Path, cell: &Cell) -> String {
    let stem = graph
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default();
    match cell.q {
        Some(q) => format!(
            "{stem}-{}-r{}-q{q}-s{}",
            cell.habitat_type, cell.r, cell.seed
        ),
        None => format!("{stem}-{}-r{}-s{}", cell.habitat_type, cell.r, cell.seed),
    }
}

fn build_cell_instance(
    graph: &Graph,
    coords: Option<&Coordinates>,
    cell: &Cell,
) -> Result<Instance> {
    match cell.habitat_type {
        HabitatType::Face => {
            let coords = coords.ok_or_else(|| {
                Error::Input("face habitats need a graph file with coordinates".into())
            })?;
            let emb = rotation_system_from_coordinates(graph, coords)?;
            generators::gen_face_instance(graph, &emb, cell.r, cell.seed)
        }
        HabitatType::Cycle => {
            generators::gen_cycle_instance(graph, cell.r, cell.q.unwrap(), cell.seed)
        }
        HabitatType::Walk => {
            generators::gen_walk_instance(graph, cell.r, cell.q.unwrap(), cell.seed)
        }
    }
}

/// Runs every configured solver on one generated instance.
fn run_cell(
    config: &BenchConfig,
    graphs: &[(PathBuf, Graph, Option<Coordinates>)],
    cell: &Cell,
    limit: Duration,
) -> Result<Vec<BenchmarkRecord>> {
    let (path, graph, coords) = &graphs[cell.graph_index];
    let id = instance_id(path, cell);
    let build_start = Instant::now();
    let inst = build_cell_instance(graph, coords.as_ref(), cell)?;
    let build_time = build_start.elapsed();
    let lambda = intersection_rate(&inst)?;

    let runs: Vec<(SolverKind, SolveResult)> = config
        .solvers
        .iter()
        .map(|&kind| (kind, run_solver(kind, &inst, Some(limit))))
        .collect();
    // Reference optimum for quality/additive ratios of approximation rows.
    let reference = runs
        .iter()
        .filter(|(_, res)| res.status == SolveStatus::Optimal)
        .filter_map(|(_, res)| res.solution.as_ref())
        .map(|sol| (sol.total_cost, sol.edge_indices.len()))
        .next();

    let mut records = Vec::with_capacity(runs.len());
    for (kind, res) in runs {
        let cost = res.solution.as_ref().map(|s| s.total_cost);
        let (mut quality, mut additive) = (None, None);
        if kind == SolverKind::Apx {
            if let (Some(apx), Some((opt, opt_edges))) = (cost, reference) {
                let (q, a) = compute_ratios(apx, opt, inst.habitats.len(), opt_edges)?;
                quality = Some(q);
                additive = Some(a);
            }
        }
        records.push(BenchmarkRecord {
            instance_id: id.clone(),
            habitat_type: cell.habitat_type,
            r: cell.r,
            q: cell.q,
            solver: kind,
            status: res.status,
            cost,
            lower_bound: res.lower_bound,
            wall_time: res.wall_time,
            build_time,
            lambda,
            quality_ratio: quality,
            additive_ratio: additive,
        });
    }
    Ok(records)
}

/// Effective time limit: the environment override wins, then the config.
fn effective_time_limit(config: &BenchConfig) -> Result<Duration> {
    match std::env::var(TIME_LIMIT_ENV) {
        Ok(val) => {
            let ms: u64 = val.parse().map_err(|_| {
                Error::Input(format!("{TIME_LIMIT_ENV} must be an integer, got {val:?}"))
            })?;
            Ok(Duration::from_millis(ms))
        }
        Err(_) => Ok(config.time_limit),
    }
}

/// Runs the whole grid, streaming CSV rows to `csv_path` (flushed after each
/// parallel batch) and returning all records in deterministic grid order:
/// graphs, then types, then r, then q, then seeds, then solvers.
pub fn run_benchmark(config: &BenchConfig, csv_path: &Path) -> Result<Vec<BenchmarkRecord>> {
    let limit = effective_time_limit(config)?;
    let graphs: Vec<(PathBuf, Graph, Option<Coordinates>)> = config
        .graphs
        .iter()
        .map(|path| {
            let (inst, coords) = parse_instance(path)?;
            Ok((path.clone(), inst.graph, coords))
        })
        .collect::<Result<Vec<_>>>()?;

    let mut cells = Vec::new();
    for graph_index in 0..graphs.len() {
        for &habitat_type in &config.types {
            let qs: Vec<Option<usize>> = if habitat_type.uses_q() {
                config.q_values.iter().map(|&q| Some(q)).collect()
            } else {
                vec![None]
            };
            for &r in &config.r_values {
                for &q in &qs {
                    for &seed in &config.seeds {
                        cells.push(Cell {
                            graph_index,
                            habitat_type,
                            r,
                            q,
                            seed,
                        });
                    }
                }
            }
        }
    }

    let mut out = std::io::BufWriter::new(std::fs::File::create(csv_path)?);
    writeln!(out, "{CSV_HEADER}")?;
    let mut all = Vec::new();
    for batch in cells.chunks(config.parallelism.max(1)) {
        let results: Vec<Result<Vec<BenchmarkRecord>>> = batch
            .par_iter()
            .map(|cell| run_cell(config, &graphs, cell, limit))
            .collect();
        for result in results {
            for rec in result? {
                writeln!(out, "{}", csv_row(&rec))?;
                all.push(rec);
            }
        }
        out.flush()?;
    }
    Ok(all)
}

/// Emits a gnuplot script plotting median wall time against r per solver,
/// reading the CSV produced by [`run_benchmark`].
pub fn write_plot_script(path: &Path, csv_path: &Path) -> Result<()> {
    let csv = csv_path.display();
    let script = format!(
        "set datafile separator ','\n\
         set key autotitle columnheader\n\
         set xlabel 'habitats r'\n\
         set ylabel 'wall time [ms]'\n\
         set logscale y\n\
         set terminal pngcairo size 900,600\n\
         set output 'bench.png'\n\
         plot for [s in 'mwm mwhm generic apx auto brute'] \\\n\
         \x20    '< awk -F, -v s='.s.' \"NR>1 && $5==s\" {csv}' \\\n\
         \x20    using 3:9 with points title s\n"
    );
    Ok(std::fs::write(path, script)?)
}
