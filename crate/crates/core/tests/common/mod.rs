//! Dense reference implementations shared by the integration tests.
//!
//! Everything here is written against the textbook definitions with explicit
//! matrices and no caching, so it shares no code path with the library's
//! arc-space walker or series bank.

#![allow(dead_code)]

use std::collections::HashMap;

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use qwgsim_core::Graph;

pub fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

/// Arc list `(tail, head)`, one entry per neighbour of each vertex.
pub fn arcs(g: &Graph) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for x in 0..g.vertex_count() {
        for &y in g.neighbors(x) {
            out.push((x, y));
        }
    }
    out
}

/// `(T, C, Phase)` on the arc space.
pub fn dense_factors(g: &Graph, marks: &[(usize, f64)]) -> [DMatrix<Complex64>; 3] {
    let list = arcs(g);
    let m = list.len();
    let index: HashMap<(usize, usize), usize> =
        list.iter().enumerate().map(|(i, &a)| (a, i)).collect();

    let mut coin = DMatrix::<Complex64>::zeros(m, m);
    for (r, &(x, _)) in list.iter().enumerate() {
        let d = g.neighbors(x).len() as f64;
        for (s, &(x2, _)) in list.iter().enumerate() {
            if x2 == x {
                coin[(r, s)] = c(2.0 / d - if r == s { 1.0 } else { 0.0 });
            }
        }
    }

    let mut shift = DMatrix::<Complex64>::zeros(m, m);
    for (s, &(x, y)) in list.iter().enumerate() {
        shift[(index[&(y, x)], s)] = c(1.0);
    }

    let mut phase = DMatrix::<Complex64>::identity(m, m);
    for &(v, angle) in marks {
        for (r, &(x, _)) in list.iter().enumerate() {
            if x == v {
                phase[(r, r)] *= Complex64::from_polar(1.0, angle);
            }
        }
    }
    [shift, coin, phase]
}

pub fn dense_unitary(g: &Graph, marks: &[(usize, f64)]) -> DMatrix<Complex64> {
    let [shift, coin, phase] = dense_factors(g, marks);
    shift * coin * phase
}

pub fn dense_initial(g: &Graph) -> DVector<Complex64> {
    let list = arcs(g);
    let mut v = DVector::from_iterator(
        list.len(),
        list.iter()
            .map(|&(x, _)| c(1.0 / (g.neighbors(x).len() as f64).sqrt())),
    );
    let norm = v.norm();
    if norm > 0.0 {
        v /= c(norm);
    }
    v
}

pub fn dense_node_probabilities(g: &Graph, state: &DVector<Complex64>) -> Vec<f64> {
    let mut p = vec![0.0; g.vertex_count()];
    for (r, &(x, _)) in arcs(g).iter().enumerate() {
        p[x] += state[r].norm_sqr();
    }
    p
}

/// Node probabilities after each of `steps` steps: `out[t - 1][x]`.
pub fn dense_walk(g: &Graph, marks: &[(usize, f64)], steps: usize) -> Vec<Vec<f64>> {
    let [shift, coin, phase] = dense_factors(g, marks);
    let mut state = dense_initial(g);
    let mut out = Vec::with_capacity(steps);
    for _ in 0..steps {
        state = &shift * (&coin * (&phase * state));
        out.push(dense_node_probabilities(g, &state));
    }
    out
}

fn series(rows: &[Vec<f64>], x: usize) -> Vec<f64> {
    rows.iter().map(|r| r[x]).collect()
}

fn l2(p: &[f64], q: &[f64]) -> f64 {
    p.iter()
        .zip(q)
        .map(|(a, b)| (a - b) * (a - b))
        .sum::<f64>()
        .sqrt()
}

fn matusita(p: &[f64], q: &[f64]) -> f64 {
    p.iter()
        .zip(q)
        .map(|(a, b)| (a.max(0.0).sqrt() - b.max(0.0).sqrt()).powi(2))
        .sum::<f64>()
        .sqrt()
}

/// `D_ijkl` straight from the metric definitions, l2 accumulation.
pub fn naive_combination(
    metric: &str,
    eps: f64,
    si: &[f64],
    sk: &[f64],
    sj: &[f64],
    sl: &[f64],
) -> f64 {
    let t = si.len() as f64;
    match metric {
        "euclidean" => (l2(si, sk) + l2(sj, sl)) / t,
        "euclidean_squared" => (l2(si, sk) / t).powi(2) + (l2(sj, sl) / t).powi(2),
        "matusita" => (matusita(si, sk) + matusita(sj, sl)) / t,
        "threshold" => {
            if l2(si, sk) + l2(sj, sl) < eps {
                0.0
            } else {
                1.0
            }
        }
        other => panic!("no reference for {other}"),
    }
}

/// Comparison score by re-propagating both walks for every combination, in
/// the loop order of the reference algorithm.
#[allow(clippy::too_many_arguments)]
pub fn naive_score(
    a: &Graph,
    b: &Graph,
    theta: f64,
    phi: f64,
    steps: usize,
    metric: &str,
    eps: f64,
    symmetric: bool,
) -> f64 {
    let n = a.vertex_count();
    let mut total = 0.0;
    for i in 0..n {
        for j in 0..n {
            let keep_ij = if symmetric { i != j } else { i < j };
            if !keep_ij {
                continue;
            }
            for k in 0..n {
                for l in 0..n {
                    if symmetric && k == l {
                        continue;
                    }
                    let wa = dense_walk(a, &[(i, theta), (j, phi)], steps);
                    let wb = dense_walk(b, &[(k, theta), (l, phi)], steps);
                    total += naive_combination(
                        metric,
                        eps,
                        &series(&wa, i),
                        &series(&wb, k),
                        &series(&wa, j),
                        &series(&wb, l),
                    );
                }
            }
        }
    }
    total
}

/// Spearman rank correlation, average ranks for ties.
pub fn spearman(x: &[f64], y: &[f64]) -> f64 {
    fn ranks(v: &[f64]) -> Vec<f64> {
        let mut idx: Vec<usize> = (0..v.len()).collect();
        idx.sort_by(|&a, &b| v[a].total_cmp(&v[b]));
        let mut r = vec![0.0; v.len()];
        let mut s = 0;
        while s < idx.len() {
            let mut e = s;
            while e + 1 < idx.len() && v[idx[e + 1]] == v[idx[s]] {
                e += 1;
            }
            let avg = (s + e) as f64 / 2.0 + 1.0;
            for &k in &idx[s..=e] {
                r[k] = avg;
            }
            s = e + 1;
        }
        r
    }
    let (rx, ry) = (ranks(x), ranks(y));
    let mean = |v: &[f64]| v.iter().sum::<f64>() / v.len() as f64;
    let (mx, my) = (mean(&rx), mean(&ry));
    let cov: f64 = rx.iter().zip(&ry).map(|(a, b)| (a - mx) * (b - my)).sum();
    let vx: f64 = rx.iter().map(|a| (a - mx).powi(2)).sum();
    let vy: f64 = ry.iter().map(|b| (b - my).powi(2)).sum();
    cov / (vx * vy).sqrt()
}
