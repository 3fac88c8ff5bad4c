use super::*;
use crate::graph::{gen_er, Graph, Permutation};
use std::f64::consts::PI;

const THETA: f64 = PI / 3.0;
const PHI: f64 = 4.0 * PI / 3.0;

fn assert_close(a: f64, b: f64, tol: f64) {
    assert!((a - b).abs() <= tol, "{a} vs {b} (tol {tol})");
}

#[test]
fn initial_state_examples() {
    let k2 = ArcSpace::new(&Graph::complete(2));
    let s = WalkState::initial(&k2);
    for a in s.amplitudes() {
        assert_close(a.re, 0.5f64.sqrt(), 1e-15);
    }
    for p in s.node_probabilities(&k2) {
        assert_close(p, 0.5, 1e-15);
    }

    let star = ArcSpace::new(&Graph::star(3));
    let s = WalkState::initial(&star);
    for arc in star.node_slice(0) {
        assert_close(s.amplitudes()[arc].re, 1.0 / 12f64.sqrt(), 1e-15);
    }
    for arc in star.node_slice(1) {
        assert_close(s.amplitudes()[arc].re, 0.5, 1e-15);
    }
    for p in s.node_probabilities(&star) {
        assert_close(p, 0.25, 1e-15);
    }

    let c4 = ArcSpace::new(&Graph::cycle(4));
    let s = WalkState::initial(&c4);
    assert_eq!(s.amplitudes().len(), 8);
    for a in s.amplitudes() {
        assert_close(a.re, 8f64.sqrt().recip(), 1e-15);
    }
}

#[test]
fn isolated_vertices_renormalise_and_stay_silent() {
    let g = Graph::from_edges(5, [(0, 1), (1, 2), (2, 0)]).unwrap();
    let space = ArcSpace::new(&g);
    assert_close(WalkState::initial(&space).norm_sqr(), 1.0, 1e-15);
    let s = run_walk(
        &g,
        &PhaseMarks::pair(0, THETA, 1, PHI).unwrap(),
        20,
        &[3, 4],
    )
    .unwrap();
    assert!(s.series.iter().all(|(_, v)| v.iter().all(|&p| p == 0.0)));
}

#[test]
fn silent_graph() {
    let g = Graph::empty(4);
    let space = ArcSpace::new(&g);
    assert!(WalkState::initial(&space).is_silent());
    let s = run_walk(&g, &PhaseMarks::pair(0, THETA, 1, PHI).unwrap(), 5, &[0, 1]).unwrap();
    assert_eq!(s.of(0).unwrap(), &[0.0; 5]);
}

#[test]
fn k2_is_fixed_with_or_without_marks() {
    let g = Graph::complete(2);
    let space = ArcSpace::new(&g);
    let mut w = Walker::new(&space, &PhaseMarks::none()).unwrap();
    let before = w.state().clone();
    w.step();
    assert_eq!(w.state(), &before);

    for (theta, phi) in [(0.3, 2.0), (THETA, PHI), (6.0, 0.1)] {
        let marks = PhaseMarks::pair(0, theta, 1, phi).unwrap();
        let s = run_walk(&g, &marks, 12, &[0, 1]).unwrap();
        for (_, values) in &s.series {
            for &p in values {
                assert_close(p, 0.5, 1e-14);
            }
        }
    }
}

#[test]
fn uniform_local_vectors_are_coin_fixed_points() {
    let g = Graph::from_edges(5, [(0, 1), (0, 2), (0, 3), (3, 4), (1, 2)]).unwrap();
    let space = ArcSpace::new(&g);
    // Uniform per vertex, arbitrary across vertices.
    let mut amps = Vec::new();
    for x in 0..5 {
        let c = Complex64::new(0.1 * (x + 1) as f64, -0.05 * x as f64);
        amps.extend(std::iter::repeat_n(c, space.degree(x)));
    }
    let mut state = WalkState::from_amplitudes(amps.clone());
    let mut scratch = vec![Complex64::new(0.0, 0.0); amps.len()];
    walk_step(&mut state, &mut scratch, &space, &[]);
    // After the coin the state is unchanged; the shift then moves a -> rev(a).
    for (arc, &a) in amps.iter().enumerate() {
        let moved = state.amplitudes()[space.reverse(arc)];
        assert_close((moved - a).norm(), 0.0, 1e-15);
    }
}

#[test]
fn regular_graphs_are_stationary_without_marks() {
    for g in [Graph::cycle(4), Graph::cycle(7), Graph::complete(6)] {
        let n = g.vertex_count() as f64;
        for row in run_walk_full(&g, &PhaseMarks::none(), 60).unwrap() {
            for p in row {
                assert_close(p, 1.0 / n, 1e-12);
            }
        }
    }
}

#[test]
fn unitarity_over_many_steps() {
    let g = gen_er(12, 0.35, 4).unwrap();
    let space = ArcSpace::new(&g);
    let marks = PhaseMarks::pair(2, THETA, 7, PHI).unwrap();
    let mut w = Walker::new(&space, &marks).unwrap();
    for _ in 0..100 {
        w.step();
        assert_close(w.state().norm_sqr(), 1.0, 1e-12);
    }
}

#[test]
fn coincident_marks_compose() {
    let g = Graph::cycle(5);
    let both = PhaseMarks::pair(2, 0.4, 2, 1.1).unwrap();
    let single = PhaseMarks::new(vec![(2, 1.5)]).unwrap();
    let a = run_walk(&g, &both, 15, &[2]).unwrap();
    let b = run_walk(&g, &single, 15, &[2]).unwrap();
    for (x, y) in a.of(2).unwrap().iter().zip(b.of(2).unwrap()) {
        assert_close(*x, *y, 1e-14);
    }
}

#[test]
fn relabelling_commutes_with_the_walk() {
    let g = gen_er(10, 0.4, 8).unwrap();
    let p = Permutation::random(10, 3, 1);
    let h = g.permute(&p).unwrap();
    let marks = PhaseMarks::pair(1, THETA, 6, PHI).unwrap();
    let a = run_walk(&g, &marks, 30, &[1, 6]).unwrap();
    let b = run_walk(
        &h,
        &marks.relabel(|v| p.apply(v)),
        30,
        &[p.apply(1), p.apply(6)],
    )
    .unwrap();
    for ((_, x), (_, y)) in a.series.iter().zip(&b.series) {
        for (u, v) in x.iter().zip(y) {
            assert_close(*u, *v, 1e-12);
        }
    }
}

#[test]
fn mark_validation() {
    assert_eq!(
        PhaseMarks::pair(0, 1.0, 1, 1.0),
        Err(WalkError::EqualAngles)
    );
    assert!(matches!(
        PhaseMarks::new(vec![(0, 0.0)]),
        Err(WalkError::AngleOutOfRange(_))
    ));
    assert!(matches!(
        PhaseMarks::new(vec![(0, TAU)]),
        Err(WalkError::AngleOutOfRange(_))
    ));
    assert_eq!(
        PhaseMarks::new(vec![(0, 1.0), (1, 2.0), (2, 3.0)]),
        Err(WalkError::TooManyMarks)
    );
    let g = Graph::path(3);
    assert!(run_walk(&g, &PhaseMarks::new(vec![(3, 1.0)]).unwrap(), 2, &[0]).is_err());
    assert!(run_walk(&g, &PhaseMarks::none(), 0, &[0]).is_err());
    assert!(run_walk(&g, &PhaseMarks::none(), 2, &[5]).is_err());
}

#[test]
fn runs_are_bit_reproducible() {
    let g = gen_er(9, 0.4, 1).unwrap();
    let marks = PhaseMarks::pair(0, THETA, 3, PHI).unwrap();
    assert_eq!(
        run_walk(&g, &marks, 25, &[0, 3]).unwrap(),
        run_walk(&g, &marks, 25, &[0, 3]).unwrap()
    );
}

#[test]
fn swapping_conjugate_phases_keeps_probabilities() {
    let g = gen_er(9, 0.45, 21).unwrap();
    let (theta, phi) = (PI / 2.0, 3.0 * PI / 2.0);
    let a = run_walk(
        &g,
        &PhaseMarks::pair(2, theta, 5, phi).unwrap(),
        40,
        &[2, 5],
    )
    .unwrap();
    let b = run_walk(
        &g,
        &PhaseMarks::pair(2, phi, 5, theta).unwrap(),
        40,
        &[2, 5],
    )
    .unwrap();
    for ((_, x), (_, y)) in a.series.iter().zip(&b.series) {
        for (u, v) in x.iter().zip(y) {
            assert_close(*u, *v, 1e-13);
        }
    }

    // Without the conjugate relation the swap is visible.
    let a = run_walk(&g, &PhaseMarks::pair(2, THETA, 5, PHI).unwrap(), 40, &[2]).unwrap();
    let b = run_walk(&g, &PhaseMarks::pair(2, PHI, 5, THETA).unwrap(), 40, &[2]).unwrap();
    let gap = a
        .of(2)
        .unwrap()
        .iter()
        .zip(b.of(2).unwrap())
        .map(|(u, v)| (u - v).abs())
        .fold(0.0, f64::max);
    assert!(gap > 1e-6, "{gap}");
}
