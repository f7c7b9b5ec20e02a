use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::json;
use thiserror::Error;

use lgg_core::convex::{self, Construction, DEFAULT_RADIUS};
use lgg_core::geom::DEFAULT_EPSILON;
use lgg_core::grid::{self, GridParams, SelectionMode, DEFAULT_C1, DEFAULT_THETA0};
use lgg_core::io::{self, GraphFile};
use lgg_core::scaling::{self, ScalingSample};
use lgg_core::{extremal, graph, independence, Graph, ViolationKind};

#[derive(Parser)]
#[command(name = "lgg", version, about = "Build, check and measure locally Gabriel graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a graph and write it as JSON.
    Construct {
        #[command(subcommand)]
        what: Construct,
    },
    /// Check a graph file; exits 1 if any conflict is found.
    Verify { graph: PathBuf },
    /// Exact maximum locally Gabriel graph on at most 14 points.
    Extremal {
        #[arg(long)]
        points: PathBuf,
        #[arg(long, default_value_t = DEFAULT_EPSILON)]
        epsilon: f64,
        /// Write the witness graph here.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Independent set of a graph file.
    Indepset { graph: PathBuf },
    /// Grid edge counts for several sizes, as CSV with a fitted exponent.
    Scaling {
        #[arg(long, value_delimiter = ',', default_values_t = [30, 60, 90, 120, 150, 180, 210])]
        sides: Vec<i64>,
        #[arg(long, value_enum, default_value_t = Mode::Greedy)]
        mode: Mode,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Draw a graph file as SVG.
    EmitSvg {
        graph: PathBuf,
        /// Also draw the diametral disk of the pair `i,j`.
        #[arg(long, value_parser = parse_pair)]
        disk: Option<(usize, usize)>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum Construct {
    /// Dense grid construction.
    Grid {
        #[arg(long)]
        side: i64,
        #[arg(long, value_enum, default_value_t = Mode::Greedy)]
        mode: Mode,
        #[arg(long, default_value_t = DEFAULT_THETA0)]
        theta0: f64,
        #[arg(long, default_value_t = DEFAULT_C1)]
        c1: f64,
        #[command(flatten)]
        out: Out,
    },
    /// Path through a strictly monotonic convex point set.
    Path {
        #[arg(long)]
        points: PathBuf,
        #[arg(long, default_value_t = DEFAULT_EPSILON)]
        epsilon: f64,
        #[command(flatten)]
        out: Out,
    },
    /// Quarter-circle fan with its center.
    Fan {
        #[arg(short)]
        n: usize,
        #[arg(long, default_value_t = DEFAULT_RADIUS)]
        radius: f64,
        #[command(flatten)]
        out: Out,
    },
    /// Cycle on evenly spaced circle points.
    Cycle {
        #[arg(short)]
        n: usize,
        #[arg(long, default_value_t = DEFAULT_RADIUS)]
        radius: f64,
        #[command(flatten)]
        out: Out,
    },
    /// Two-column centrally symmetric ladder.
    Ladder {
        #[arg(short)]
        n: usize,
        #[command(flatten)]
        out: Out,
    },
}

#[derive(Args)]
struct Out {
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Greedy,
    Guided,
}

impl Mode {
    fn selection(self) -> SelectionMode {
        match self {
            Mode::Greedy => SelectionMode::GreedyFeasible,
            Mode::Guided => SelectionMode::AnalysisGuided,
        }
    }

    fn name(self) -> &'static str {
        match self {
            Mode::Greedy => "greedy",
            Mode::Guided => "guided",
        }
    }
}

fn parse_pair(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s.split_once(',').ok_or("expected `i,j`")?;
    let parse = |t: &str| t.trim().parse::<usize>().map_err(|e| e.to_string());
    Ok((parse(a)?, parse(b)?))
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{}: {source}", path.display())]
    Parse {
        path: PathBuf,
        source: io::ParseError,
    },
    #[error("{0}")]
    Invariant(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Invariant(_) => 1,
            _ => 2,
        }
    }
}

fn usage(e: impl std::fmt::Display) -> CliError {
    CliError::Usage(e.to_string())
}

fn read_text(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn load_graph(path: &Path) -> Result<GraphFile, CliError> {
    io::read_graph(&read_text(path)?).map_err(|source| CliError::Parse {
        path: path.to_path_buf(),
        source,
    })
}

fn load_points(path: &Path, epsilon: f64) -> Result<lgg_core::PointSet, CliError> {
    io::parse_points(&read_text(path)?, epsilon).map_err(|source| CliError::Parse {
        path: path.to_path_buf(),
        source,
    })
}

fn emit(output: Option<&Path>, text: &str) -> Result<(), CliError> {
    match output {
        Some(path) => fs::write(path, text).map_err(|source| CliError::Io {
            path: path.to_path_buf(),
            source,
        }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn configure_threads() -> Result<(), CliError> {
    let Ok(value) = std::env::var("LGG_THREADS") else {
        return Ok(());
    };
    let threads: usize = value
        .trim()
        .parse()
        .map_err(|_| usage(format!("LGG_THREADS must be a non-negative integer, got {value:?}")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(usage)
}

fn construction_file(c: Construction, params: serde_json::Value) -> GraphFile {
    GraphFile::new(c.graph)
        .with_meta("generator", c.name)
        .with_meta("parameters", params)
        .with_meta("expected_edges", c.expected_edges)
}

fn construct(what: Construct) -> Result<(), CliError> {
    let (file, out) = match what {
        Construct::Grid {
            side,
            mode,
            theta0,
            c1,
            out,
        } => {
            let params =
                GridParams::with_constants(side, mode.selection(), theta0, c1).map_err(usage)?;
            let (g, stats) = grid::build(&params).map_err(|e| CliError::Invariant(e.to_string()))?;
            let file = GraphFile::new(g)
                .with_meta("generator", "grid")
                .with_meta(
                    "parameters",
                    json!({ "side": side, "mode": mode.name(), "theta0": theta0, "c1": c1 }),
                )
                .with_meta("centers", stats.centers.len());
            (file, out)
        }
        Construct::Path {
            points,
            epsilon,
            out,
        } => {
            let ps = load_points(&points, epsilon)?;
            let c = convex::monotonic_path(&ps).map_err(usage)?;
            (construction_file(c, json!({})), out)
        }
        Construct::Fan { n, radius, out } => {
            let c = convex::half_convex_fan(n, radius).map_err(usage)?;
            (construction_file(c, json!({ "n": n, "radius": radius })), out)
        }
        Construct::Cycle { n, radius, out } => {
            let c = convex::circle_cycle(n, radius).map_err(usage)?;
            (construction_file(c, json!({ "n": n, "radius": radius })), out)
        }
        Construct::Ladder { n, out } => {
            let c = convex::centrally_symmetric_ladder(n).map_err(usage)?;
            (construction_file(c, json!({ "n": n })), out)
        }
    };
    emit(out.output.as_deref(), &io::write_graph(&file))
}

fn verify(path: &Path) -> Result<(), CliError> {
    let g = load_graph(path)?.graph;
    let report = graph::verify(&g);
    for v in &report.violations {
        let kind = match v.kind {
            ViolationKind::Interior => "interior",
            ViolationKind::Boundary => "boundary",
        };
        println!("violation {kind}: edges ({},{}) and ({},{})", v.shared, v.v, v.shared, v.w);
    }
    if report.is_valid() {
        println!("valid vertices={} edges={}", g.vertex_count(), g.edge_count());
        Ok(())
    } else {
        Err(CliError::Invariant(format!(
            "{} violations",
            report.violations.len()
        )))
    }
}

fn extremal_cmd(points: &Path, epsilon: f64, output: Option<&Path>) -> Result<(), CliError> {
    let ps = load_points(points, epsilon)?;
    let r = extremal::max_lgg(&ps).map_err(usage)?;
    println!("max_edges={}", r.max_edges);
    println!("nodes_explored={}", r.nodes_explored);
    if let Some(path) = output {
        let file = GraphFile::new(r.witness)
            .with_meta("generator", "extremal")
            .with_meta("max_edges", r.max_edges);
        emit(Some(path), &io::write_graph(&file))?;
    }
    Ok(())
}

fn indepset(path: &Path) -> Result<(), CliError> {
    let g: Graph = load_graph(path)?.graph;
    let r = independence::independent_set(&g).map_err(|e| CliError::Invariant(e.to_string()))?;
    let method = match r.method {
        independence::Method::MonotoneGreedy => "monotone",
        independence::Method::PlainGreedy => "plain",
        independence::Method::Best => "both",
    };
    let list: Vec<String> = r.vertices.iter().map(usize::to_string).collect();
    println!("size={}", r.vertices.len());
    println!("method={method}");
    println!("guarantee={}", r.guarantee);
    println!("vertices={}", list.join(","));
    Ok(())
}

fn scaling_cmd(sides: &[i64], mode: Mode, output: Option<&Path>) -> Result<(), CliError> {
    let params = sides
        .iter()
        .map(|&g| GridParams::new(g, mode.selection()).map_err(usage))
        .collect::<Result<Vec<_>, _>>()?;
    let built: Vec<usize> = params
        .par_iter()
        .map(|p| grid::build(p).map(|(g, _)| g.edge_count()))
        .collect::<Result<_, _>>()
        .map_err(|e| CliError::Invariant(e.to_string()))?;
    let samples: Vec<ScalingSample> = sides
        .iter()
        .zip(&built)
        .map(|(&g, &edges)| ScalingSample::new((g * g) as usize, edges))
        .collect();
    let mut text = String::from("g,n,edges,edges_per_n\n");
    for (g, s) in sides.iter().zip(&samples) {
        text.push_str(&format!("{g},{},{},{}\n", s.n, s.edges, s.edges_per_n));
    }
    match scaling::fit_exponent(&samples) {
        Ok(f) => text.push_str(&format!(
            "# fit slope={} intercept={} r_squared={}\n",
            f.slope, f.intercept, f.r_squared
        )),
        Err(e) => text.push_str(&format!("# fit unavailable: {e}\n")),
    }
    emit(output, &text)
}

fn emit_svg(path: &Path, disk: Option<(usize, usize)>, output: Option<&Path>) -> Result<(), CliError> {
    let g = load_graph(path)?.graph;
    let svg = io::emit_svg(&g, disk).map_err(usage)?;
    emit(output, &svg)
}

fn run(cli: Cli) -> Result<(), CliError> {
    configure_threads()?;
    match cli.command {
        Command::Construct { what } => construct(what),
        Command::Verify { graph } => verify(&graph),
        Command::Extremal {
            points,
            epsilon,
            output,
        } => extremal_cmd(&points, epsilon, output.as_deref()),
        Command::Indepset { graph } => indepset(&graph),
        Command::Scaling {
            sides,
            mode,
            output,
        } => scaling_cmd(&sides, mode, output.as_deref()),
        Command::EmitSvg {
            graph,
            disk,
            output,
        } => emit_svg(&graph, disk, output.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("lgg: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
