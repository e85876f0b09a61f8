use nearmis_core::enumerate::LabeledGraphs;
use nearmis_core::generate::gnp;
use nearmis_core::oracle::{
    enumerate_alpha, exact_alpha, exact_min_vc, find_augmenting_set, has_augmenting_set_upto,
    is_augmenting_set,
};

#[test]
fn branch_and_bound_matches_subset_enumeration() {
    for n in 0..=5 {
        for g in LabeledGraphs::new(n) {
            assert_eq!(exact_alpha(&g).unwrap().0, enumerate_alpha(&g).unwrap());
        }
    }
    for seed in 0..200u64 {
        let g = gnp(6 + seed as usize % 10, 0.1 * (1 + seed % 9) as f64, seed).unwrap();
        assert_eq!(exact_alpha(&g).unwrap().0, enumerate_alpha(&g).unwrap());
    }
}

#[test]
fn alpha_plus_min_vc_is_n() {
    for n in 0..=6 {
        for g in LabeledGraphs::new(n) {
            assert_eq!(exact_alpha(&g).unwrap().0 + exact_min_vc(&g).unwrap().0, n);
        }
    }
    for seed in 0..150u64 {
        let n = 5 + seed as usize % 21;
        let g = gnp(n, 0.1 * (1 + seed % 9) as f64, seed).unwrap();
        let (a, wa) = exact_alpha(&g).unwrap();
        let (c, wc) = exact_min_vc(&g).unwrap();
        assert_eq!(a + c, n);
        assert!(g.is_independent(&wa) && g.is_vertex_cover(&wc));
    }
}

#[test]
fn augmenting_sets_exist_exactly_below_alpha() {
    for seed in 0..120u64 {
        let n = 3 + seed as usize % 9;
        let g = gnp(n, 0.15 + 0.1 * (seed % 7) as f64, seed).unwrap();
        let (alpha, max_set) = exact_alpha(&g).unwrap();
        assert!(!has_augmenting_set_upto(&g, &max_set, n).unwrap());
        // greedy maximal independent sets are often smaller than alpha
        let mut greedy: Vec<usize> = Vec::new();
        for v in (0..n).rev() {
            if greedy.iter().all(|&u| !g.has_edge(u, v)) {
                greedy.push(v);
            }
        }
        greedy.sort();
        let found = find_augmenting_set(&g, &greedy, alpha).unwrap();
        assert_eq!(found.is_some(), greedy.len() < alpha);
        if let Some(s) = found {
            assert!(s.len() <= alpha);
            assert!(is_augmenting_set(&g, &greedy, &s).unwrap());
        }
        // subsets of I never augment
        assert!(!is_augmenting_set(&g, &greedy, &greedy).unwrap());
    }
}
