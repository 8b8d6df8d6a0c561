//! Command-line front end for convex-cut enumeration.
//!
//! Exit codes: 0 success, 1 usage error, 2 input parse error,
//! 3 the input lacks a required property or verification failed,
//! 4 a resource cap was hit.

use clap::{Args, Parser, Subcommand, ValueEnum};
use convexcut::alternating::{alternating_paths, arrange, AlternatingError};
use convexcut::bipartite::{bipartite_convex_cuts, BipartiteCutsError, BipartiteOptions};
use convexcut::embedding::{trace_faces, PlaneEmbedding};
use convexcut::families::{generate, Family};
use convexcut::graph::Graph;
use convexcut::io::{
    parse_graph, render_dot, render_json, render_text, serialize_graph, CutRecord, CutsReport,
};
use convexcut::oracle::{enumerate_convex_cuts, is_partial_cube, PartialCubeOutcome};
use convexcut::plane::{plane_convex_cuts, PlaneCutsError, PlaneOptions};
use serde::Serialize;
use std::fmt::Write as _;
use std::time::Instant;

#[derive(Parser)]
#[command(
    name = "convexcut",
    version,
    about = "Enumerates convex cuts of bipartite and plane graphs"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct OutputOpts {
    /// Emit the report as JSON.
    #[arg(long, conflicts_with = "dot")]
    json: bool,
    /// Emit the graph with cut annotations in Graphviz format.
    #[arg(long)]
    dot: bool,
}

#[derive(Subcommand)]
enum Cmd {
    /// Enumerate all convex cuts of a connected bipartite graph.
    Bipartite {
        /// Input file in the graph text format, or `-` for stdin.
        input: String,
        /// Verify edges in parallel.
        #[arg(long)]
        parallel: bool,
        /// Precompute the full distance table instead of per-edge searches.
        #[arg(long)]
        table: bool,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Enumerate all convex cuts of a two-connected plane graph.
    Plane {
        /// Input file with `rot` lines, or `-` for stdin.
        input: String,
        /// Re-check every emitted cut for convexity (default).
        #[arg(long, conflicts_with = "no_verify")]
        verify: bool,
        /// Skip the convexity re-check of emitted cuts.
        #[arg(long)]
        no_verify: bool,
        /// Abort when the walk frontier exceeds this many states.
        #[arg(long, default_value_t = 1_000_000)]
        max_frontier: usize,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Enumerate convex cuts by exhaustive search (at most 16 vertices).
    Oracle {
        input: String,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Decide whether a graph is a partial cube.
    PartialCube {
        input: String,
        #[arg(long)]
        json: bool,
    },
    /// Print the binary vertex labels of a partial cube.
    Label {
        input: String,
        #[arg(long)]
        json: bool,
    },
    /// List the alternating paths of a two-connected plane graph.
    Alternating {
        input: String,
        #[arg(long)]
        json: bool,
    },
    /// Decide whether a two-connected plane graph is well arranged.
    WellArranged {
        input: String,
        #[arg(long)]
        json: bool,
    },
    /// Write a named graph in the text format.
    Gen {
        #[command(subcommand)]
        family: GenCmd,
    },
    /// Time an enumeration on a generated grid.
    Bench {
        #[arg(long, value_enum)]
        alg: BenchAlg,
        #[arg(long, default_value_t = 20)]
        rows: usize,
        #[arg(long, default_value_t = 20)]
        cols: usize,
    },
}

#[derive(Subcommand)]
enum GenCmd {
    /// Cycle on n vertices.
    Cycle { n: usize },
    /// Path on n vertices.
    Path { n: usize },
    /// Rows-by-cols grid.
    Grid { rows: usize, cols: usize },
    /// Hypercube of the given dimension.
    Hypercube { dim: usize },
    /// Complete graph on n vertices.
    Complete { n: usize },
    /// Wheel with the given rim length.
    Wheel { rim: usize },
    /// Complete bipartite graph.
    CompleteBipartite { a: usize, b: usize },
    /// Random connected graph.
    Random {
        vertices: usize,
        edges: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Random two-connected plane triangulation-like graph.
    RandomPlane {
        vertices: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum BenchAlg {
    Bipartite,
    Plane,
}

/// An error paired with the process exit code it maps to.
struct CliError {
    code: i32,
    message: String,
}

impl CliError {
    fn usage(message: impl Into<String>) -> CliError {
        CliError {
            code: 1,
            message: message.into(),
        }
    }
    fn parse(message: impl Into<String>) -> CliError {
        CliError {
            code: 2,
            message: message.into(),
        }
    }
    fn verify(message: impl Into<String>) -> CliError {
        CliError {
            code: 3,
            message: message.into(),
        }
    }
    fn resource(message: impl Into<String>) -> CliError {
        CliError {
            code: 4,
            message: message.into(),
        }
    }
}

impl From<BipartiteCutsError> for CliError {
    fn from(e: BipartiteCutsError) -> CliError {
        CliError::verify(e.to_string())
    }
}

impl From<PlaneCutsError> for CliError {
    fn from(e: PlaneCutsError) -> CliError {
        match e {
            PlaneCutsError::FrontierCapExceeded { .. } => CliError::resource(e.to_string()),
            _ => CliError::verify(e.to_string()),
        }
    }
}

impl From<AlternatingError> for CliError {
    fn from(e: AlternatingError) -> CliError {
        CliError::verify(e.to_string())
    }
}

fn read_input(path: &str) -> Result<String, CliError> {
    if path == "-" {
        use std::io::Read;
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| CliError::parse(format!("reading stdin: {e}")))?;
        Ok(buf)
    } else {
        std::fs::read_to_string(path).map_err(|e| CliError::parse(format!("reading {path}: {e}")))
    }
}

fn load_graph(path: &str) -> Result<Graph, CliError> {
    let text = read_input(path)?;
    let parsed = parse_graph(&text).map_err(|e| CliError::parse(e.to_string()))?;
    Ok(parsed.graph)
}

fn load_embedded(path: &str) -> Result<(Graph, PlaneEmbedding), CliError> {
    let text = read_input(path)?;
    let parsed = parse_graph(&text).map_err(|e| CliError::parse(e.to_string()))?;
    let rotation = parsed.rotation.ok_or_else(|| {
        CliError::parse("a plane embedding is required: add `rot` lines to the input")
    })?;
    let emb = trace_faces(&parsed.graph, rotation, parsed.outer.as_deref())
        .map_err(|e| CliError::parse(e.to_string()))?;
    Ok((parsed.graph, emb))
}

fn render_report(g: &Graph, report: &CutsReport, out: &OutputOpts) -> String {
    if out.json {
        render_json(report)
    } else if out.dot {
        render_dot(g, report)
    } else {
        render_text(report)
    }
}

#[derive(Serialize)]
struct PartialCubeReport {
    partial_cube: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    classes: Option<Vec<Vec<usize>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    reason: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    odd_cycle: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<(usize, usize, usize)>,
}

#[derive(Serialize)]
struct LabelReport {
    classes: usize,
    labels: Vec<String>,
}

#[derive(Serialize)]
struct PathRecord {
    edges: Vec<usize>,
    closed: bool,
    multiplicity: u8,
}

#[derive(Serialize)]
struct AlternatingReport {
    path_count: usize,
    paths: Vec<PathRecord>,
    coverage_ok: bool,
}

#[derive(Serialize)]
struct ArrangeReport {
    well_arranged: bool,
    instances: usize,
    crossings: Vec<(usize, usize, u32)>,
    self_crossings: Vec<(usize, u32)>,
}

fn run(cli: Cli) -> Result<String, CliError> {
    match cli.cmd {
        Cmd::Bipartite {
            input,
            parallel,
            table,
            out,
        } => {
            let g = load_graph(&input)?;
            let cuts = bipartite_convex_cuts(
                &g,
                BipartiteOptions {
                    parallel,
                    use_distance_table: table,
                },
            )?;
            let records: Vec<CutRecord> =
                cuts.cuts.iter().map(|c| CutRecord::new(c, None)).collect();
            let report = CutsReport::new(&g, records);
            Ok(render_report(&g, &report, &out))
        }
        Cmd::Plane {
            input,
            verify: _,
            no_verify,
            max_frontier,
            out,
        } => {
            let (g, emb) = load_embedded(&input)?;
            let cuts = plane_convex_cuts(
                &g,
                &emb,
                PlaneOptions {
                    strict_verify: !no_verify,
                    max_frontier,
                },
            )?;
            let records: Vec<CutRecord> = cuts
                .cuts
                .iter()
                .map(|pc| CutRecord::new(&pc.cut, Some(pc.cyclic)))
                .collect();
            let report = CutsReport::new(&g, records);
            Ok(render_report(&g, &report, &out))
        }
        Cmd::Oracle { input, out } => {
            let g = load_graph(&input)?;
            if g.vertex_count() > 16 {
                return Err(CliError::usage(
                    "oracle enumeration supports at most 16 vertices",
                ));
            }
            let cuts = enumerate_convex_cuts(&g);
            let records: Vec<CutRecord> = cuts.iter().map(|c| CutRecord::new(c, None)).collect();
            let report = CutsReport::new(&g, records);
            Ok(render_report(&g, &report, &out))
        }
        Cmd::PartialCube { input, json } => {
            let g = load_graph(&input)?;
            let report = match is_partial_cube(&g) {
                PartialCubeOutcome::PartialCube(cert) => PartialCubeReport {
                    partial_cube: true,
                    classes: Some(cert.classes.clone()),
                    reason: None,
                    odd_cycle: None,
                    witness: None,
                },
                PartialCubeOutcome::NotBipartite { odd_cycle } => PartialCubeReport {
                    partial_cube: false,
                    classes: None,
                    reason: Some("not-bipartite".to_string()),
                    odd_cycle: Some(odd_cycle),
                    witness: None,
                },
                PartialCubeOutcome::ThetaNotTransitive { e, f, h } => PartialCubeReport {
                    partial_cube: false,
                    classes: None,
                    reason: Some("theta-not-transitive".to_string()),
                    odd_cycle: None,
                    witness: Some((e, f, h)),
                },
            };
            if json {
                return Ok(render_json(&report));
            }
            let mut text = format!("partial-cube {}\n", report.partial_cube);
            if let Some(classes) = &report.classes {
                let _ = writeln!(text, "classes {}", classes.len());
                for (i, class) in classes.iter().enumerate() {
                    let _ = write!(text, "class {i} edges");
                    for e in class {
                        let _ = write!(text, " {e}");
                    }
                    text.push('\n');
                }
            }
            if let Some(reason) = &report.reason {
                let _ = writeln!(text, "reason {reason}");
            }
            if let Some(cycle) = &report.odd_cycle {
                let _ = write!(text, "odd-cycle");
                for v in cycle {
                    let _ = write!(text, " {v}");
                }
                text.push('\n');
            }
            if let Some((e, f, h)) = report.witness {
                let _ = writeln!(text, "witness {e} {f} {h}");
            }
            Ok(text)
        }
        Cmd::Label { input, json } => {
            let g = load_graph(&input)?;
            let cert = match is_partial_cube(&g) {
                PartialCubeOutcome::PartialCube(cert) => cert,
                other => {
                    return Err(CliError::verify(format!(
                        "the graph is not a partial cube: {other:?}"
                    )));
                }
            };
            let k = cert.classes.len();
            let labels: Vec<String> = (0..g.vertex_count())
                .map(|v| {
                    (0..k)
                        .map(|c| if cert.labels.get(v, c) { '1' } else { '0' })
                        .collect()
                })
                .collect();
            let report = LabelReport { classes: k, labels };
            if json {
                return Ok(render_json(&report));
            }
            let mut text = format!("labels {}\n", report.classes);
            for (v, label) in report.labels.iter().enumerate() {
                let _ = writeln!(text, "vertex {v} {label}");
            }
            Ok(text)
        }
        Cmd::Alternating { input, json } => {
            let (g, emb) = load_embedded(&input)?;
            let sys = alternating_paths(&g, &emb)?;
            let report = AlternatingReport {
                path_count: sys.paths.len(),
                paths: sys
                    .paths
                    .iter()
                    .map(|p| PathRecord {
                        edges: p.edges.clone(),
                        closed: p.closed,
                        multiplicity: p.multiplicity,
                    })
                    .collect(),
                coverage_ok: sys.coverage.iter().all(|&c| c == 2),
            };
            if json {
                return Ok(render_json(&report));
            }
            let mut text = format!("paths {}\n", report.path_count);
            for p in &report.paths {
                let mut line = String::from("path edges");
                for e in &p.edges {
                    let _ = write!(line, " {e}");
                }
                let kind = if p.closed { "closed" } else { "open" };
                let _ = writeln!(text, "{line} | {kind} | mult {}", p.multiplicity);
            }
            let _ = writeln!(text, "coverage ok");
            Ok(text)
        }
        Cmd::WellArranged { input, json } => {
            let (g, emb) = load_embedded(&input)?;
            let sys = alternating_paths(&g, &emb)?;
            let count: usize = sys.paths.iter().map(|p| p.multiplicity as usize).sum();
            let order: Vec<usize> = (0..count).collect();
            let rep = arrange(&g, &emb, &sys, &order);
            let report = ArrangeReport {
                well_arranged: rep.well_arranged,
                instances: rep.instances.len(),
                crossings: rep.crossing_pairs.clone(),
                self_crossings: rep.self_crossings.clone(),
            };
            if json {
                return Ok(render_json(&report));
            }
            let mut text = format!("well-arranged {}\n", report.well_arranged);
            let _ = writeln!(text, "instances {}", report.instances);
            let _ = writeln!(text, "crossings {}", report.crossings.len());
            for &(i, j, c) in &report.crossings {
                let _ = writeln!(text, "cross {i} {j} {c}");
            }
            let _ = writeln!(text, "self-crossings {}", report.self_crossings.len());
            for &(i, c) in &report.self_crossings {
                let _ = writeln!(text, "self {i} {c}");
            }
            Ok(text)
        }
        Cmd::Gen { family } => {
            let fam = match family {
                GenCmd::Cycle { n } => Family::Cycle(n),
                GenCmd::Path { n } => Family::Path(n),
                GenCmd::Grid { rows, cols } => Family::Grid(rows, cols),
                GenCmd::Hypercube { dim } => Family::Hypercube(dim),
                GenCmd::Complete { n } => Family::Complete(n),
                GenCmd::Wheel { rim } => Family::Wheel(rim),
                GenCmd::CompleteBipartite { a, b } => Family::CompleteBipartite(a, b),
                GenCmd::Random {
                    vertices,
                    edges,
                    seed,
                } => Family::Random {
                    vertices,
                    edges,
                    seed,
                },
                GenCmd::RandomPlane { vertices, seed } => Family::RandomPlane { vertices, seed },
            };
            let gen = generate(&fam).map_err(|e| CliError::usage(e.to_string()))?;
            let (rot, outer) = match &gen.embedding {
                Some(emb) => {
                    let mut outer_edges = emb.face(emb.outer_face()).edge_ids();
                    outer_edges.sort_unstable();
                    (Some(emb.rotation().to_vec()), Some(outer_edges))
                }
                None => (None, None),
            };
            Ok(serialize_graph(
                &gen.graph,
                rot.as_deref(),
                outer.as_deref(),
            ))
        }
        Cmd::Bench { alg, rows, cols } => {
            let gen =
                generate(&Family::Grid(rows, cols)).map_err(|e| CliError::usage(e.to_string()))?;
            let start = Instant::now();
            let (name, count) = match alg {
                BenchAlg::Bipartite => {
                    let cuts = bipartite_convex_cuts(&gen.graph, BipartiteOptions::default())?;
                    ("bipartite", cuts.cuts.len())
                }
                BenchAlg::Plane => {
                    let emb = gen.embedding.expect("grids are embedded");
                    let cuts = plane_convex_cuts(&gen.graph, &emb, PlaneOptions::default())?;
                    ("plane", cuts.cuts.len())
                }
            };
            let millis = start.elapsed().as_millis();
            Ok(format!(
                "bench {name} vertices {} edges {} cuts {count} millis {millis}\n",
                gen.graph.vertex_count(),
                gen.graph.edge_count()
            ))
        }
    }
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // clap exits with 2 for usage errors; this tool reserves 2 for
            // input parse errors and reports usage problems as 1.
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    match run(cli) {
        Ok(output) => print!("{output}"),
        Err(e) => {
            eprintln!("error: {}", e.message);
            std::process::exit(e.code);
        }
    }
}
