//! Graph sources accepted on the command line.
//!
//! `builtin:NAME`, `er:N:P[:SEED]`, `sf:N:M[:SEED]`, `uniform:N:E[:SEED]`, or
//! a file path (`.g6` is read as graph6, anything else as an edge list).

use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};
use qwgsim_core::graph::io::{graph6_decode, parse_edge_list};
use qwgsim_core::graph::{gen_er, gen_scale_free, gen_uniform};
use qwgsim_core::{builtin_graph, Graph};

pub fn load_graph(spec: &str) -> Result<Graph> {
    if let Some(name) = spec.strip_prefix("builtin:") {
        return Ok(builtin_graph(name)?);
    }
    if let Some(g) = generated(spec)? {
        return Ok(g);
    }
    let path = Path::new(spec);
    let text = fs::read_to_string(path).with_context(|| format!("cannot read {spec}"))?;
    let g = if path
        .extension()
        .is_some_and(|e| e.eq_ignore_ascii_case("g6"))
    {
        graph6_decode(&text)
    } else {
        parse_edge_list(&text)
    };
    g.with_context(|| format!("cannot parse {spec}"))
}

fn generated(spec: &str) -> Result<Option<Graph>> {
    let parts: Vec<&str> = spec.split(':').collect();
    let model = parts[0];
    if !matches!(model, "er" | "sf" | "uniform") || parts.len() < 3 {
        return Ok(None);
    }
    if parts.len() > 4 {
        bail!("too many fields in generator spec {spec:?}");
    }
    let n: usize = parts[1]
        .parse()
        .with_context(|| format!("bad vertex count in {spec:?}"))?;
    let seed: u64 = match parts.get(3) {
        Some(s) => s.parse().with_context(|| format!("bad seed in {spec:?}"))?,
        None => 0,
    };
    let param = parts[2];
    let bad = || format!("bad model parameter in {spec:?}");
    let g = match model {
        "er" => gen_er(n, param.parse().with_context(bad)?, seed)?,
        "sf" => gen_scale_free(n, param.parse().with_context(bad)?, seed)?,
        _ => gen_uniform(n, param.parse().with_context(bad)?, seed)?,
    };
    Ok(Some(g))
}
