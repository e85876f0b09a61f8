//! Upper bounds on the independence number.
//!
//! Three bounds are computed, from coarsest to finest:
//!
//! * `p`: the largest integer `q` with `q(q − 1) ≤ 2·m(Ḡ)`, i.e.
//!   `⌊1/2 + √(1/4 + n² − n − 2m)⌋`;
//! * `p₁`: the largest `i` with `d_i ≤ n − i` over the ascending degree
//!   sequence, which is the Welsh–Powell colouring bound of the complement;
//! * `p₂`: the largest `k` such that at least `k` vertices `v` have
//!   `n_k(v) ≤ n − k`, where `n_2(v) ≤ n_3(v) ≤ …` are the sorted sizes of
//!   `N(v) ∪ N(w)` over the non-neighbours `w` of `v`.
//!
//! They satisfy `α ≤ p₂ ≤ p₁ ≤ p`.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::Result;
use crate::graph::Graph;

/// The bounds of one graph. `p2` is only filled in on request.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundsReport {
    pub p: usize,
    pub p1: usize,
    pub p2: Option<usize>,
    /// Welsh–Powell chromatic bound of the complement; equals `p1`.
    pub wp_complement: usize,
}

/// Sorted neighbourhood-union sizes of one vertex.
///
/// `values[i]` is `n_{i+2}(owner)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NeighborhoodUnionSequence {
    pub owner: usize,
    pub values: Vec<usize>,
}

impl NeighborhoodUnionSequence {
    /// `n_k(owner)` for `k ≥ 2`, if the sequence is long enough.
    pub fn get(&self, k: usize) -> Option<usize> {
        k.checked_sub(2).and_then(|i| self.values.get(i).copied())
    }
}

/// Largest `q ≥ 0` with `q(q − 1) ≤ bound`.
pub(crate) fn largest_q(bound: u128, hi: u128) -> u128 {
    let (mut lo, mut hi) = (0u128, hi);
    while lo < hi {
        let mid = lo + (hi - lo).div_ceil(2);
        if mid * (mid - 1) <= bound {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    lo
}

/// Size-based bound `p`, in exact integer arithmetic. Zero for `n = 0`.
pub fn bound_p(g: &Graph) -> usize {
    if g.n() == 0 {
        return 0;
    }
    let twice_co_edges = 2 * g.complement_edge_count() as u128;
    largest_q(twice_co_edges, g.n() as u128) as usize
}

/// Degree-sequence bound `p₁ = max{i | d_i ≤ n − i}`. Zero for `n = 0`.
pub fn bound_p1(g: &Graph) -> usize {
    let n = g.n();
    g.degree_sequence()
        .ascending
        .iter()
        .enumerate()
        .filter(|&(i, &d)| d + i < n)
        .map(|(i, _)| i + 1)
        .max()
        .unwrap_or(0)
}

/// Welsh–Powell: `χ(G) ≤ max_i min(i, d_i + 1)` with degrees descending.
pub fn bound_wp_chromatic(g: &Graph) -> usize {
    welsh_powell(&g.degree_sequence().descending())
}

fn welsh_powell(descending: &[usize]) -> usize {
    descending
        .iter()
        .enumerate()
        .map(|(i, &d)| (i + 1).min(d + 1))
        .max()
        .unwrap_or(0)
}

/// Welsh–Powell bound of `Ḡ` from the degrees of `G`, without building `Ḡ`.
pub fn bound_wp_complement(g: &Graph) -> usize {
    let n = g.n();
    // ascending degrees of G are descending degrees of Ḡ
    let co: Vec<usize> = g
        .degree_sequence()
        .ascending
        .iter()
        .map(|&d| n - 1 - d)
        .collect();
    welsh_powell(&co)
}

pub fn neighborhood_union_sequence(g: &Graph, u: usize) -> Result<NeighborhoodUnionSequence> {
    g.check_vertex(u)?;
    Ok(union_sequence(g, u))
}

fn union_sequence(g: &Graph, u: usize) -> NeighborhoodUnionSequence {
    let row_u = g.row(u);
    let mut values: Vec<usize> = (0..g.n())
        .filter(|&v| v != u && !g.has_edge(u, v))
        .map(|v| {
            row_u
                .iter()
                .zip(g.row(v))
                .map(|(a, b)| (a | b).count_ones() as usize)
                .sum()
        })
        .collect();
    values.sort_unstable();
    NeighborhoodUnionSequence { owner: u, values }
}

/// Neighbourhood-union bound `p₂`.
///
/// A vertex counts towards `k` only when `n_k(v)` exists. Every vertex
/// counts towards `k = 1`, so `p₂ ≥ 1` on non-empty graphs.
pub fn bound_p2(g: &Graph) -> usize {
    let n = g.n();
    if n == 0 {
        return 0;
    }
    // counts[k] = #vertices v with n_k(v) ≤ n − k
    let mut counts = vec![0usize; n + 1];
    for v in 0..n {
        let seq = union_sequence(g, v);
        for (i, &val) in seq.values.iter().enumerate() {
            let k = i + 2;
            if val + k <= n {
                counts[k] += 1;
            }
        }
    }
    (2..=n).rev().find(|&k| counts[k] >= k).unwrap_or(1)
}

/// All bounds of `g`; `p₂` only when `with_p2` is set.
pub fn bounds_report(g: &Graph, with_p2: bool) -> BoundsReport {
    let p = bound_p(g);
    let p1 = bound_p1(g);
    let wp_complement = bound_wp_complement(g);
    let p2 = with_p2.then(|| bound_p2(g));
    assert!(p1 <= p, "p1 = {p1} exceeds p = {p}");
    assert_eq!(p1, wp_complement, "p1 differs from the Welsh–Powell route");
    if let Some(p2) = p2 {
        assert!(p2 <= p1, "p2 = {p2} exceeds p1 = {p1}");
    }
    BoundsReport {
        p,
        p1,
        p2,
        wp_complement,
    }
}
