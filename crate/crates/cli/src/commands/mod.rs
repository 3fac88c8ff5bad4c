mod experiment;

use std::fs::File;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Args, ValueEnum};
use serde::Serialize;

use qwgsim_core::baselines::{self, BaselineResult};
use qwgsim_core::graph::io::{graph6_encode, write_edge_list};
use qwgsim_core::graph::{gen_er, gen_scale_free, gen_uniform};
use qwgsim_core::walk::run_walk_full;
use qwgsim_core::{builtin_graph, graph_similarity, Graph, PhaseMarks, SimilarityReport};

use crate::source::load_graph;
use crate::{input, output_path, ScoreOptions};

pub use experiment::{experiment, ExperimentArgs};

#[derive(Args, Debug)]
pub struct CompareArgs {
    /// File path, `builtin:NAME` or a generator spec such as `er:20:0.3:1`.
    #[arg(long)]
    pub graph_a: String,
    #[arg(long)]
    pub graph_b: String,
    /// threshold | euclid | euclid2 | matusita (full names also accepted).
    #[arg(long, default_value = "euclidean")]
    pub metric: String,
    /// Seed for the relabelled copies.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Also report a classical baseline: deltacon | mcs.
    #[arg(long)]
    pub baseline: Option<String>,
    #[command(flatten)]
    pub score: ScoreOptions,
}

#[derive(Args, Debug)]
pub struct BaselineArgs {
    #[arg(long)]
    pub graph_a: String,
    #[arg(long)]
    pub graph_b: String,
    /// deltacon | mcs
    #[arg(long)]
    pub metric: String,
}

#[derive(Args, Debug)]
pub struct WalkArgs {
    #[arg(long)]
    pub graph: String,
    /// `VERTEX:ANGLE` with the angle in radians; at most two.
    #[arg(long = "mark")]
    pub marks: Vec<String>,
    #[arg(long, default_value_t = 10)]
    pub steps: usize,
    /// Output CSV path; stdout when absent or `-`.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum GraphFormat {
    /// Edge list
    El,
    /// graph6
    G6,
}

#[derive(Args, Debug)]
pub struct GenerateArgs {
    /// er | sf | uniform | complete | empty | builtin:NAME
    #[arg(long)]
    pub model: String,
    #[arg(long)]
    pub n: Option<usize>,
    /// Edge probability (er).
    #[arg(long)]
    pub p: Option<f64>,
    /// Attachments per new vertex (sf).
    #[arg(long)]
    pub m: Option<usize>,
    /// Edge count (uniform).
    #[arg(long)]
    pub e: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Defaults to g6 for a `.g6` output path, else an edge list.
    #[arg(long, value_enum)]
    pub format: Option<GraphFormat>,
}

#[derive(Args, Debug)]
pub struct TableArgs {
    /// `SOURCE_A,SOURCE_B`; repeatable. Defaults to the 6- and 16-vertex
    /// strongly regular pairs.
    #[arg(long = "pair")]
    pub pairs: Vec<String>,
    /// Comma-separated metric names.
    #[arg(
        long,
        default_value = "threshold,euclidean,euclidean_squared,matusita",
        value_delimiter = ','
    )]
    pub metrics: Vec<String>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[command(flatten)]
    pub score: ScoreOptions,
}

pub fn load(spec: &str) -> Result<Graph> {
    load_graph(spec).map_err(input)
}

/// Writer for `path`, or stdout.
pub fn sink(path: Option<&PathBuf>) -> Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => {
            Box::new(File::create(p).with_context(|| format!("cannot create {}", p.display()))?)
        }
        None => Box::new(io::stdout().lock()),
    })
}

#[derive(Serialize)]
struct CompareOutput<'a> {
    #[serde(flatten)]
    report: &'a SimilarityReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    baseline: Option<BaselineResult>,
}

pub fn compare(args: &CompareArgs) -> Result<()> {
    let a = load(&args.graph_a)?;
    let b = load(&args.graph_b)?;
    let cfg = args.score.config(&args.metric, args.seed)?;
    let report = graph_similarity(&a, &b, &cfg).map_err(input)?;
    let baseline = match &args.baseline {
        Some(name) => Some(baselines::registry().run(name, &a, &b).map_err(input)?),
        None => None,
    };
    let out = CompareOutput {
        report: &report,
        baseline,
    };
    println!("{}", serde_json::to_string_pretty(&out)?);
    Ok(())
}

pub fn baseline(args: &BaselineArgs) -> Result<()> {
    let a = load(&args.graph_a)?;
    let b = load(&args.graph_b)?;
    let result = baselines::registry()
        .run(&args.metric, &a, &b)
        .map_err(input)?;
    println!("{}", serde_json::to_string_pretty(&result)?);
    Ok(())
}

fn parse_mark(text: &str) -> Result<(usize, f64)> {
    let (v, angle) = text
        .split_once(':')
        .with_context(|| format!("mark {text:?} is not VERTEX:ANGLE"))?;
    let v = v
        .trim()
        .parse()
        .with_context(|| format!("bad vertex in mark {text:?}"))?;
    let angle = angle
        .trim()
        .parse()
        .with_context(|| format!("bad angle in mark {text:?}"))?;
    Ok((v, angle))
}

#[derive(Serialize)]
struct WalkRow {
    t: usize,
    vertex: usize,
    probability: f64,
}

pub fn walk(args: &WalkArgs) -> Result<()> {
    let g = load(&args.graph)?;
    let marks = args
        .marks
        .iter()
        .map(|m| parse_mark(m))
        .collect::<Result<Vec<_>>>()
        .map_err(input)?;
    let marks = PhaseMarks::new(marks).map_err(input)?;
    let rows = run_walk_full(&g, &marks, args.steps).map_err(input)?;
    let mut out = csv::Writer::from_writer(sink(output_path(&args.out))?);
    for (t, probs) in rows.iter().enumerate() {
        for (vertex, &probability) in probs.iter().enumerate() {
            out.serialize(WalkRow {
                t: t + 1,
                vertex,
                probability,
            })?;
        }
    }
    out.flush()?;
    Ok(())
}

fn generated(args: &GenerateArgs) -> Result<Graph> {
    if let Some(name) = args.model.strip_prefix("builtin:") {
        return Ok(builtin_graph(name)?);
    }
    let need = |v: Option<usize>, flag: &str| {
        v.with_context(|| format!("--{flag} is required for {}", args.model))
    };
    let n = need(args.n, "n")?;
    Ok(match args.model.as_str() {
        "er" => gen_er(n, args.p.context("--p is required for er")?, args.seed)?,
        "sf" => gen_scale_free(n, need(args.m, "m")?, args.seed)?,
        "uniform" => gen_uniform(n, need(args.e, "e")?, args.seed)?,
        "complete" => Graph::complete(n),
        "empty" => Graph::empty(n),
        other => bail!("unknown model {other:?}"),
    })
}

pub fn generate(args: &GenerateArgs) -> Result<()> {
    let g = generated(args).map_err(input)?;
    let path = output_path(&args.out);
    let format = args
        .format
        .unwrap_or_else(|| match path.and_then(|p| p.extension()) {
            Some(ext) if ext.eq_ignore_ascii_case("g6") => GraphFormat::G6,
            _ => GraphFormat::El,
        });
    let text = match format {
        GraphFormat::El => write_edge_list(&g),
        GraphFormat::G6 => graph6_encode(&g).map_err(input)? + "\n",
    };
    let mut out = sink(path)?;
    out.write_all(text.as_bytes())?;
    out.flush()?;
    Ok(())
}

#[derive(Serialize)]
struct TableRow<'a> {
    graph_a: &'a str,
    graph_b: &'a str,
    metric: String,
    similarity: f64,
    nsteps: usize,
    runtime_ms: f64,
}

const DEFAULT_PAIRS: [&str; 2] = [
    "builtin:k33,builtin:octahedron",
    "builtin:shrikhande,builtin:rook4x4",
];

pub fn table(args: &TableArgs) -> Result<()> {
    let pairs: Vec<&str> = if args.pairs.is_empty() {
        DEFAULT_PAIRS.to_vec()
    } else {
        args.pairs.iter().map(String::as_str).collect()
    };
    let mut loaded = Vec::new();
    for pair in &pairs {
        let (x, y) = pair
            .split_once(',')
            .with_context(|| format!("pair {pair:?} is not A,B"))
            .map_err(input)?;
        loaded.push((x, y, load(x)?, load(y)?));
    }
    let configs = args
        .metrics
        .iter()
        .map(|m| args.score.config(m, args.seed))
        .collect::<Result<Vec<_>>>()?;

    let mut out = csv::Writer::from_writer(sink(output_path(&args.out))?);
    for (x, y, a, b) in &loaded {
        for cfg in &configs {
            let start = Instant::now();
            let report = graph_similarity(a, b, cfg).map_err(input)?;
            out.serialize(TableRow {
                graph_a: x,
                graph_b: y,
                metric: report.config.metric.clone(),
                similarity: report.sim,
                nsteps: report.config.n_steps,
                runtime_ms: start.elapsed().as_secs_f64() * 1e3,
            })?;
        }
    }
    out.flush()?;
    Ok(())
}

/// `<stem>.summary.csv` next to `path`.
pub fn summary_path(path: &Path) -> PathBuf {
    let stem = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default();
    path.with_file_name(format!("{stem}.summary.csv"))
}
