use nearmis_core::bounds::{bound_p, bound_p1, bound_p2, bound_wp_chromatic, bounds_report};
use nearmis_core::enumerate::LabeledGraphs;
use nearmis_core::generate::{gnp, h_np};
use nearmis_core::graph::GraphBuilder;
use nearmis_core::oracle::exact_alpha;
use nearmis_core::Graph;
use proptest::prelude::*;

/// Floating-point reading of the closed form, for cross-checking.
fn p_by_float(g: &Graph) -> usize {
    let (n, m) = (g.n() as f64, g.m() as f64);
    (0.5 + (0.25 + n * n - n - 2.0 * m).sqrt()).floor() as usize
}

fn check_chain(g: &Graph) {
    let alpha = exact_alpha(g).unwrap().0;
    let r = bounds_report(g, true);
    let p2 = r.p2.unwrap();
    assert!(alpha <= p2 && p2 <= r.p1 && r.p1 <= r.p, "{g:?}: {alpha} {p2} {} {}", r.p1, r.p);
    assert_eq!(bound_p1(g), bound_wp_chromatic(&g.complement()));
}

#[test]
fn chain_on_all_graphs_up_to_five_vertices() {
    for n in 0..=5 {
        LabeledGraphs::new(n).for_each(|g| check_chain(&g));
    }
}

#[test]
fn chain_on_random_graphs() {
    for seed in 0..400u64 {
        let n = 6 + (seed as usize % 9);
        let d = 0.1 * (1 + seed % 9) as f64;
        check_chain(&gnp(n, d, seed).unwrap());
    }
}

#[test]
fn tight_family() {
    for n in 3..=14 {
        for p in 2..n {
            let g = h_np(n, p).unwrap();
            assert_eq!(exact_alpha(&g).unwrap().0, p);
            assert_eq!(bound_p2(&g), p);
            assert_eq!(bound_p1(&g), p);
            assert_eq!(bound_p(&g), p);
        }
    }
}

#[test]
fn integer_p_matches_float_formula() {
    for n in 0..=6 {
        for g in LabeledGraphs::new(n).filter(|g| g.n() > 0) {
            assert_eq!(bound_p(&g), p_by_float(&g));
        }
    }
    for n in 3..=40 {
        for p in 2..n {
            let g = h_np(n, p).unwrap();
            assert_eq!(bound_p(&g), p_by_float(&g));
        }
    }
}

proptest! {
    #[test]
    fn p_never_increases_when_adding_an_edge(n in 2usize..30, d in 0.0..1.0f64, seed: u64, a: usize, b: usize) {
        let g = gnp(n, d, seed).unwrap();
        let (u, v) = (a % n, b % n);
        prop_assume!(u != v);
        let mut builder = GraphBuilder::new(n);
        for (x, y) in g.edges() {
            builder.add_edge(x, y).unwrap();
        }
        builder.add_edge(u, v).unwrap();
        let h = builder.build();
        prop_assert!(bound_p(&h) <= bound_p(&g));
    }

    #[test]
    fn integer_p_matches_float_on_random_graphs(n in 1usize..200, d in 0.0..=1.0f64, seed: u64) {
        let g = gnp(n, d, seed).unwrap();
        prop_assert_eq!(bound_p(&g), p_by_float(&g));
    }

    #[test]
    fn welsh_powell_route(n in 0usize..40, d in 0.0..=1.0f64, seed: u64) {
        let g = gnp(n, d, seed).unwrap();
        prop_assert_eq!(bound_p1(&g), bound_wp_chromatic(&g.complement()));
        let r = bounds_report(&g, true);
        prop_assert!(r.p2.unwrap() <= r.p1 && r.p1 <= r.p);
        if n > 0 {
            prop_assert!(r.p1 >= 1 && r.p1 <= n);
        }
    }
}
