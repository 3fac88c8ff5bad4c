use std::path::PathBuf;
use std::time::Instant;

use anyhow::Result;
use clap::Args;
use log::warn;
use rayon::prelude::*;
use serde::Serialize;

use qwgsim_core::graph::remove_random_edges;
use qwgsim_core::rng::derive_seed;
use qwgsim_core::{graph_similarity, CompareConfig};

use super::{load, summary_path};
use crate::{input, ScoreOptions};

#[derive(Args, Debug)]
pub struct ExperimentArgs {
    /// Base graph: file path, `builtin:NAME` or generator spec.
    #[arg(long)]
    pub base: String,
    /// Comma-separated numbers of edges to remove.
    #[arg(long, value_delimiter = ',', default_value = "1,2,5,10,20,40")]
    pub removals: Vec<usize>,
    #[arg(long, default_value_t = 10)]
    pub trials: usize,
    /// Comma-separated metric names.
    #[arg(long, value_delimiter = ',', default_value = "euclidean,threshold")]
    pub metrics: Vec<String>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Per-trial CSV.
    #[arg(long)]
    pub out: PathBuf,
    /// Per-count means; defaults to `<out stem>.summary.csv`.
    #[arg(long)]
    pub summary: Option<PathBuf>,
    #[command(flatten)]
    pub score: ScoreOptions,
}

/// Empty numeric fields mark a skipped removal count.
#[derive(Serialize, Clone, Debug)]
struct Row {
    base_id: String,
    metric: String,
    removals: usize,
    trial: Option<usize>,
    seed: Option<u64>,
    similarity: Option<f64>,
    nsteps: Option<usize>,
    runtime_ms: Option<f64>,
}

#[derive(Serialize)]
struct SummaryRow<'a> {
    base_id: &'a str,
    metric: &'a str,
    removals: usize,
    trials: usize,
    mean_similarity: f64,
    std_similarity: f64,
}

pub fn experiment(args: &ExperimentArgs) -> Result<()> {
    if args.trials == 0 {
        return Err(input(anyhow::anyhow!("--trials must be at least 1")));
    }
    if args.metrics.is_empty() {
        return Err(input(anyhow::anyhow!("--metrics is empty")));
    }
    let base = load(&args.base)?;
    let configs: Vec<CompareConfig> = args
        .metrics
        .iter()
        .map(|m| args.score.config(m, args.seed))
        .collect::<Result<_>>()?;
    let names: Vec<String> = configs
        .iter()
        .map(|c| c.metric.build().map(|m| m.name().to_string()))
        .collect::<Result<_, _>>()
        .map_err(input)?;
    let edges = base.edge_count();
    let mut counts: Vec<usize> = Vec::new();
    for &r in &args.removals {
        if !counts.contains(&r) {
            counts.push(r);
        }
    }
    let summary = args
        .summary
        .clone()
        .unwrap_or_else(|| summary_path(&args.out));
    if summary == args.out {
        return Err(input(anyhow::anyhow!(
            "summary path equals the output path"
        )));
    }

    for &r in counts.iter().filter(|&&r| r > edges) {
        warn!("skipping {r} removals: base graph has {edges} edges");
    }
    let units: Vec<(usize, usize)> = counts
        .iter()
        .filter(|&&r| r <= edges)
        .flat_map(|&r| (0..args.trials).map(move |t| (r, t)))
        .collect();

    // One unit per (removal count, trial); every metric sees the same
    // perturbed graph. Results come back in unit order.
    let results: Vec<Vec<Row>> = units
        .par_iter()
        .map(|&(removals, trial)| -> Result<Vec<Row>> {
            let seed = derive_seed(args.seed, &[removals as u64, trial as u64]);
            let perturbed = remove_random_edges(&base, removals, seed)?;
            configs
                .iter()
                .zip(&names)
                .map(|(cfg, name)| {
                    let start = Instant::now();
                    let report = graph_similarity(&base, &perturbed, &cfg.clone().with_seed(seed))?;
                    Ok(Row {
                        base_id: args.base.clone(),
                        metric: name.clone(),
                        removals,
                        trial: Some(trial),
                        seed: Some(seed),
                        similarity: Some(report.sim),
                        nsteps: Some(report.config.n_steps),
                        runtime_ms: Some(start.elapsed().as_secs_f64() * 1e3),
                    })
                })
                .collect()
        })
        .collect::<Result<_>>()?;

    let mut rows = Vec::new();
    for (m, name) in names.iter().enumerate() {
        for &removals in &counts {
            if removals > edges {
                rows.push(Row {
                    base_id: args.base.clone(),
                    metric: name.clone(),
                    removals,
                    trial: None,
                    seed: None,
                    similarity: None,
                    nsteps: None,
                    runtime_ms: None,
                });
                continue;
            }
            for (unit, result) in units.iter().zip(&results) {
                if unit.0 == removals {
                    rows.push(result[m].clone());
                }
            }
        }
    }

    let mut out = csv::Writer::from_path(&args.out)?;
    for row in &rows {
        out.serialize(row)?;
    }
    out.flush()?;

    let mut out = csv::Writer::from_path(&summary)?;
    for name in &names {
        for &removals in &counts {
            let sims: Vec<f64> = rows
                .iter()
                .filter(|r| &r.metric == name && r.removals == removals)
                .filter_map(|r| r.similarity)
                .collect();
            if sims.is_empty() {
                continue;
            }
            let k = sims.len() as f64;
            let mean = sims.iter().sum::<f64>() / k;
            let var = if sims.len() > 1 {
                sims.iter().map(|s| (s - mean).powi(2)).sum::<f64>() / (k - 1.0)
            } else {
                0.0
            };
            out.serialize(SummaryRow {
                base_id: &args.base,
                metric: name,
                removals,
                trials: sims.len(),
                mean_similarity: mean,
                std_similarity: var.sqrt(),
            })?;
        }
    }
    out.flush()?;
    Ok(())
}
