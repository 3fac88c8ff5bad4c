//! Discrete-time coined quantum walk with Grover coins on the arc basis.
//!
//! The state lives on directed arcs `x -> y`, one per direction of every edge
//! (a self-loop gives a single arc that is its own reverse). One step is
//!
//! 1. phase: arcs leaving a marked vertex pick up `exp(i * angle)`,
//! 2. coin: the Grover reflection `2/d J - I` on each vertex's arcs,
//! 3. shift: the amplitude on `x -> y` moves to `y -> x`.
//!
//! The coin is rank-one plus identity, so it is applied in `O(d)` per vertex
//! from the local amplitude sum.

mod arcs;

use std::f64::consts::TAU;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use arcs::ArcSpace;

use crate::graph::Graph;

#[derive(Debug, Error, PartialEq)]
pub enum WalkError {
    #[error("phase angle {0} outside (0, 2pi)")]
    AngleOutOfRange(f64),
    #[error("two phase marks must use different angles")]
    EqualAngles,
    #[error("at most two phase marks are supported")]
    TooManyMarks,
    #[error("vertex {vertex} out of range for graph with {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("step count must be at least 1")]
    ZeroSteps,
}

/// Phase marks on up to two reference vertices. Both marks may sit on the
/// same vertex, in which case their angles add.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct PhaseMarks(Vec<(usize, f64)>);

impl PhaseMarks {
    pub fn none() -> Self {
        PhaseMarks(Vec::new())
    }

    pub fn new(marks: Vec<(usize, f64)>) -> Result<Self, WalkError> {
        if marks.len() > 2 {
            return Err(WalkError::TooManyMarks);
        }
        for &(_, angle) in &marks {
            if !(angle > 0.0 && angle < TAU) {
                return Err(WalkError::AngleOutOfRange(angle));
            }
        }
        if marks.len() == 2 && marks[0].1 == marks[1].1 {
            return Err(WalkError::EqualAngles);
        }
        Ok(PhaseMarks(marks))
    }

    /// `theta` on `first`, `phi` on `second`.
    pub fn pair(first: usize, theta: f64, second: usize, phi: f64) -> Result<Self, WalkError> {
        Self::new(vec![(first, theta), (second, phi)])
    }

    pub fn marks(&self) -> &[(usize, f64)] {
        &self.0
    }

    /// Relabels the marked vertices through `map`.
    pub fn relabel(&self, map: impl Fn(usize) -> usize) -> Self {
        PhaseMarks(self.0.iter().map(|&(v, a)| (map(v), a)).collect())
    }

    /// Per-vertex phase factors with coincident marks merged.
    fn factors(&self) -> Vec<(usize, Complex64)> {
        let mut out: Vec<(usize, Complex64)> = Vec::with_capacity(2);
        for &(v, angle) in &self.0 {
            let f = Complex64::from_polar(1.0, angle);
            match out.iter_mut().find(|(w, _)| *w == v) {
                Some((_, g)) => *g *= f,
                None => out.push((v, f)),
            }
        }
        out
    }
}

/// Amplitudes over the arcs of an [`ArcSpace`]. An empty amplitude vector is
/// the silent state of a graph without edges.
#[derive(Clone, Debug, PartialEq)]
pub struct WalkState {
    amplitudes: Vec<Complex64>,
}

impl WalkState {
    /// Equal superposition: amplitude `1/sqrt(n d_x)` on every arc leaving
    /// `x`, then rescaled to unit norm when isolated vertices are present.
    pub fn initial(space: &ArcSpace) -> Self {
        let n = space.vertex_count() as f64;
        let mut amplitudes = Vec::with_capacity(space.arc_count());
        for x in 0..space.vertex_count() {
            let d = space.degree(x);
            let a = 1.0 / (n * d as f64).sqrt();
            amplitudes.extend(std::iter::repeat_n(Complex64::new(a, 0.0), d));
        }
        let norm = amplitudes
            .iter()
            .map(Complex64::norm_sqr)
            .sum::<f64>()
            .sqrt();
        if norm > 0.0 && space.has_isolated() {
            for a in &mut amplitudes {
                *a /= norm;
            }
        }
        WalkState { amplitudes }
    }

    pub fn from_amplitudes(amplitudes: Vec<Complex64>) -> Self {
        WalkState { amplitudes }
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn is_silent(&self) -> bool {
        self.amplitudes.is_empty()
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().map(Complex64::norm_sqr).sum()
    }

    /// Probability of finding the walker at `x`.
    #[inline]
    pub fn probability_at(&self, space: &ArcSpace, x: usize) -> f64 {
        self.amplitudes[space.node_slice(x)]
            .iter()
            .map(Complex64::norm_sqr)
            .sum()
    }

    pub fn node_probabilities(&self, space: &ArcSpace) -> Vec<f64> {
        if self.is_silent() {
            return vec![0.0; space.vertex_count()];
        }
        (0..space.vertex_count())
            .map(|x| self.probability_at(space, x))
            .collect()
    }
}

/// One walk in progress: state plus scratch over a shared read-only arc space.
pub struct Walker<'a> {
    space: &'a ArcSpace,
    state: WalkState,
    scratch: Vec<Complex64>,
    factors: Vec<(usize, Complex64)>,
}

impl<'a> Walker<'a> {
    pub fn new(space: &'a ArcSpace, marks: &PhaseMarks) -> Result<Self, WalkError> {
        let n = space.vertex_count();
        if let Some(&(vertex, _)) = marks.marks().iter().find(|(v, _)| *v >= n) {
            return Err(WalkError::VertexOutOfRange { vertex, n });
        }
        let state = WalkState::initial(space);
        Ok(Walker {
            space,
            scratch: vec![Complex64::new(0.0, 0.0); state.amplitudes.len()],
            state,
            factors: marks.factors(),
        })
    }

    pub fn state(&self) -> &WalkState {
        &self.state
    }

    pub fn step(&mut self) {
        walk_step(
            &mut self.state,
            &mut self.scratch,
            self.space,
            &self.factors,
        );
    }

    pub fn probability_at(&self, x: usize) -> f64 {
        if self.state.is_silent() {
            return 0.0;
        }
        self.state.probability_at(self.space, x)
    }
}

/// Advances `state` by one phase -> coin -> shift step; `scratch` must have
/// the same length as the state.
pub fn walk_step(
    state: &mut WalkState,
    scratch: &mut [Complex64],
    space: &ArcSpace,
    factors: &[(usize, Complex64)],
) {
    let amps = &mut state.amplitudes;
    for &(v, f) in factors {
        for a in &mut amps[space.node_slice(v)] {
            *a *= f;
        }
    }
    let reverse = space.reverse_map();
    for x in 0..space.vertex_count() {
        let range = space.node_slice(x);
        if range.is_empty() {
            continue;
        }
        let local = &amps[range.clone()];
        let mean2 = local.iter().sum::<Complex64>() * (2.0 / local.len() as f64);
        for (arc, &a) in range.zip(local) {
            scratch[reverse[arc]] = mean2 - a;
        }
    }
    amps.copy_from_slice(scratch);
}

/// Probabilities at recorded vertices after steps `1..=n_steps`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ProbabilitySeries {
    pub n_steps: usize,
    /// `(vertex, values)` per recorded vertex; `values[t - 1]` is `P_t`.
    pub series: Vec<(usize, Vec<f64>)>,
}

impl ProbabilitySeries {
    pub fn of(&self, vertex: usize) -> Option<&[f64]> {
        self.series
            .iter()
            .find(|(v, _)| *v == vertex)
            .map(|(_, s)| s.as_slice())
    }
}

/// Runs the walk on `g` and records `P_t(v)` for each `v` in `record`.
pub fn run_walk(
    g: &Graph,
    marks: &PhaseMarks,
    n_steps: usize,
    record: &[usize],
) -> Result<ProbabilitySeries, WalkError> {
    let space = ArcSpace::new(g);
    run_walk_on(&space, marks, n_steps, record)
}

pub fn run_walk_on(
    space: &ArcSpace,
    marks: &PhaseMarks,
    n_steps: usize,
    record: &[usize],
) -> Result<ProbabilitySeries, WalkError> {
    if n_steps == 0 {
        return Err(WalkError::ZeroSteps);
    }
    let n = space.vertex_count();
    if let Some(&vertex) = record.iter().find(|&&v| v >= n) {
        return Err(WalkError::VertexOutOfRange { vertex, n });
    }
    let mut series: Vec<(usize, Vec<f64>)> = record
        .iter()
        .map(|&v| (v, Vec::with_capacity(n_steps)))
        .collect();
    let mut walker = Walker::new(space, marks)?;
    for _ in 0..n_steps {
        walker.step();
        for (v, values) in &mut series {
            values.push(walker.probability_at(*v));
        }
    }
    Ok(ProbabilitySeries { n_steps, series })
}

/// Full node distribution after each step `1..=n_steps` (debug dumps).
pub fn run_walk_full(
    g: &Graph,
    marks: &PhaseMarks,
    n_steps: usize,
) -> Result<Vec<Vec<f64>>, WalkError> {
    let space = ArcSpace::new(g);
    let mut walker = Walker::new(&space, marks)?;
    let mut out = Vec::with_capacity(n_steps);
    for _ in 0..n_steps {
        walker.step();
        out.push(walker.state().node_probabilities(&space));
    }
    Ok(out)
}

#[cfg(test)]
mod tests;
