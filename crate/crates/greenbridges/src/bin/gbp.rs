//! Command-line harness: generate instances, solve them, verify solutions,
//! and run benchmark grids.
//!
//! Exit codes: 0 success, 1 infeasible or decision "no", 2 usage error,
//! 3 I/O or file-format error, 4 timeout without an incumbent.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};

use greenbridges::bench::{self, SolverKind};
use greenbridges::error::Error;
use greenbridges::generators::{self, CVCInstance, DegExtension};
use greenbridges::graph::{verify_solution, Instance};
use greenbridges::io;
use greenbridges::metrics::intersection_rate;
use greenbridges::planar::rotation_system_from_coordinates;
use greenbridges::solvers::SolveStatus;

#[derive(Parser)]
#[command(
    name = "gbp",
    about = "Reserve green bridges placement toolkit",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate an instance file.
    Generate(GenerateArgs),
    /// Solve an instance file.
    Solve(SolveArgs),
    /// Verify a solution file against an instance.
    Verify(VerifyArgs),
    /// Run a benchmark grid from a config file.
    Bench(BenchArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    /// Relative neighborhood graph over random points (no habitats).
    Rng,
    /// Face habitats on a random planar graph.
    Face,
    /// Induced-cycle habitats on a random planar graph.
    Cycle,
    /// Random-walk habitats on a random planar graph.
    Walk,
    /// Vertex-cover reduction: apex construction (habitats P2/C3).
    CvcC3,
    /// Vertex-cover reduction: planar two-apex construction.
    CvcPlanar,
    /// Vertex-cover reduction: mirrored-copy construction (max degree 4).
    CvcDeg,
    /// Vertex-cover reduction: binary-tree construction (max degree 3).
    CvcBintree,
    /// An isolated (p,q)-crowning with unit costs.
    Crown,
}

#[derive(Args)]
struct GenerateArgs {
    #[arg(long, value_enum)]
    kind: Kind,
    /// Number of random points (rng/face/cycle/walk).
    #[arg(long)]
    n: Option<usize>,
    /// Number of habitats to sample.
    #[arg(long)]
    r: Option<usize>,
    /// Habitat length parameter (cycle/walk) or crown path length (crown).
    #[arg(long)]
    q: Option<usize>,
    /// Vertex-cover budget (cvc-*) or base path length (crown).
    #[arg(long)]
    p: Option<usize>,
    /// Cycle length for the C_ℓ extensions of the cvc constructions.
    #[arg(long)]
    ell: Option<usize>,
    /// Use the crowned variant (cvc-deg with --ell, cvc-bintree).
    #[arg(long)]
    crowned: bool,
    #[arg(long)]
    seed: Option<u64>,
    /// Input cubic-graph instance file (cvc-* kinds).
    #[arg(long = "in")]
    input: Option<PathBuf>,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct SolveArgs {
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long, default_value = "auto")]
    solver: String,
    #[arg(long)]
    time_limit_ms: Option<u64>,
    #[arg(long)]
    solution_out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long)]
    solution: PathBuf,
}

#[derive(Args)]
struct BenchArgs {
    #[arg(long)]
    config: PathBuf,
    #[arg(long)]
    out_csv: PathBuf,
    #[arg(long)]
    plot_script: Option<PathBuf>,
}

const EXIT_NO: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_IO: u8 = 3;
const EXIT_TIMEOUT: u8 = 4;

fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::Io(_) | Error::Parse { .. } => EXIT_IO,
        _ => EXIT_USAGE,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Generate(args) => generate(args),
        Command::Solve(args) => solve(args),
        Command::Verify(args) => verify(args),
        Command::Bench(args) => run_bench(args),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code_for(&err))
        }
    }
}

fn require<T>(value: Option<T>, flag: &str, kind: &str) -> Result<T, Error> {
    value.ok_or_else(|| Error::Input(format!("--{flag} is required for --kind {kind}")))
}

fn load_cvc(args: &GenerateArgs, kind: &str) -> Result<CVCInstance, Error> {
    let input = require(args.input.as_ref(), "in", kind)?;
    let p = require(args.p, "p", kind)?;
    let (inst, _) = io::parse_instance(input)?;
    CVCInstance::new(inst.graph, p)
}

fn generate(args: GenerateArgs) -> Result<u8, Error> {
    let random_planar = |args: &GenerateArgs, kind: &str| -> Result<_, Error> {
        let n = require(args.n, "n", kind)?;
        let seed = require(args.seed, "seed", kind)?;
        let points = generators::random_points(n, seed)?;
        let graph = generators::rng_graph(&points)?;
        Ok((points, graph, seed))
    };
    let (inst, coords) = match args.kind {
        Kind::Rng => {
            let (points, graph, seed) = random_planar(&args, "rng")?;
            let costs = generators::assign_costs(&graph, seed);
            (Instance::new(graph, costs, Vec::new(), None), Some(points))
        }
        Kind::Face => {
            let (points, graph, seed) = random_planar(&args, "face")?;
            let r = require(args.r, "r", "face")?;
            let emb = rotation_system_from_coordinates(&graph, &points)?;
            (
                generators::gen_face_instance(&graph, &emb, r, seed)?,
                Some(points),
            )
        }
        Kind::Cycle => {
            let (points, graph, seed) = random_planar(&args, "cycle")?;
            let r = require(args.r, "r", "cycle")?;
            let q = require(args.q, "q", "cycle")?;
            (
                generators::gen_cycle_instance(&graph, r, q, seed)?,
                Some(points),
            )
        }
        Kind::Walk => {
            let (points, graph, seed) = random_planar(&args, "walk")?;
            let r = require(args.r, "r", "walk")?;
            let q = require(args.q, "q", "walk")?;
            (
                generators::gen_walk_instance(&graph, r, q, seed)?,
                Some(points),
            )
        }
        Kind::CvcC3 => (
            generators::construct_c3(&load_cvc(&args, "cvc-c3")?, args.ell)?,
            None,
        ),
        Kind::CvcPlanar => (
            generators::construct_planar(&load_cvc(&args, "cvc-planar")?, args.ell)?,
            None,
        ),
        Kind::CvcDeg => {
            let ext = match (args.ell, args.crowned) {
                (None, false) => DegExtension::None,
                (Some(l), false) => DegExtension::Subdivide(l),
                (Some(l), true) => DegExtension::Crown(l),
                (None, true) => {
                    return Err(Error::Input(
                        "--crowned needs --ell for --kind cvc-deg".into(),
                    ))
                }
            };
            (
                generators::construct_deg(&load_cvc(&args, "cvc-deg")?, ext)?,
                None,
            )
        }
        Kind::CvcBintree => (
            generators::construct_bintree(&load_cvc(&args, "cvc-bintree")?, args.crowned)?,
            None,
        ),
        Kind::Crown => {
            let p = require(args.p, "p", "crown")?;
            let q = require(args.q, "q", "crown")?;
            let base = greenbridges::graph::Graph::new(2, Vec::new())?;
            let (graph, habitats) = generators::crown(&base, 0, 1, p, q)?;
            let costs = greenbridges::graph::EdgeCosts::unit(&graph);
            (Instance::new(graph, costs, habitats, None), None)
        }
    };
    io::write_instance(&args.out, &inst, coords.as_ref())?;
    println!(
        "wrote {} ({} vertices, {} edges, {} habitats)",
        args.out.display(),
        inst.graph.vertex_count(),
        inst.graph.edge_count(),
        inst.habitats.len()
    );
    Ok(0)
}

fn solve(args: SolveArgs) -> Result<u8, Error> {
    let kind = SolverKind::parse(&args.solver)
        .ok_or_else(|| Error::Input(format!("unknown solver {:?}", args.solver)))?;
    let (inst, _) = io::parse_instance(&args.input)?;
    let limit = match args.time_limit_ms {
        Some(ms) => Some(Duration::from_millis(ms)),
        None => std::env::var(bench::TIME_LIMIT_ENV)
            .ok()
            .map(|v| {
                v.parse().map(Duration::from_millis).map_err(|_| {
                    Error::Input(format!("{} must be an integer", bench::TIME_LIMIT_ENV))
                })
            })
            .transpose()?,
    };
    let res = bench::run_solver(kind, &inst, limit);
    println!("status {}", status_name(res.status));
    println!("wall_time_ms {}", res.wall_time.as_millis());
    if let Some(lb) = res.lower_bound {
        println!("lower_bound {lb}");
    }
    let Some(sol) = res.solution else {
        return Ok(match res.status {
            SolveStatus::InfeasibleInput => EXIT_NO,
            SolveStatus::UnsupportedHabitats => EXIT_USAGE,
            _ => EXIT_TIMEOUT,
        });
    };
    println!("cost {}", sol.total_cost);
    if let Some(path) = &args.solution_out {
        io::write_solution(path, &sol)?;
    }
    if let Some(k) = inst.budget {
        let yes = sol.total_cost <= k;
        println!("decision {}", if yes { "yes" } else { "no" });
        // An over-budget incumbent from a timeout is not a "no" answer.
        if !yes {
            return Ok(match res.status {
                SolveStatus::Optimal => EXIT_NO,
                _ => EXIT_TIMEOUT,
            });
        }
    }
    Ok(0)
}

fn status_name(status: SolveStatus) -> &'static str {
    match status {
        SolveStatus::Optimal => "optimal",
        SolveStatus::TimeoutIncumbent => "timeout_incumbent",
        SolveStatus::InfeasibleInput => "infeasible_input",
        SolveStatus::UnsupportedHabitats => "unsupported_habitats",
        SolveStatus::Feasible => "feasible",
    }
}

fn verify(args: VerifyArgs) -> Result<u8, Error> {
    let (inst, _) = io::parse_instance(&args.input)?;
    let sol = io::parse_solution(&args.solution, &inst)?;
    let verdict = verify_solution(&inst, &sol)?;
    println!("feasible {}", verdict.feasible);
    println!("within_budget {}", verdict.within_budget);
    if let Ok(lambda) = intersection_rate(&inst) {
        println!("lambda {}/{}", lambda.numer(), lambda.denom());
    }
    Ok(if verdict.feasible && verdict.within_budget {
        0
    } else {
        EXIT_NO
    })
}

fn run_bench(args: BenchArgs) -> Result<u8, Error> {
    let config = bench::parse_config(&std::fs::read_to_string(&args.config)?)?;
    let records = bench::run_benchmark(&config, &args.out_csv)?;
    println!(
        "wrote {} records to {}",
        records.len(),
        args.out_csv.display()
    );
    if let Some(path) = &args.plot_script {
        bench::write_plot_script(path, &args.out_csv)?;
        println!("wrote plot script {}", path.display());
    }
    Ok(0)
}
