//! Bounded search tree for "is there a vertex cover of size at most `t`?".
//!
//! Before every branching step the instance is reduced exhaustively:
//! isolated vertices are dropped, the neighbour of a degree-one vertex is
//! taken, and any vertex of degree above the remaining budget is taken.
//! The search then branches on a maximum-degree vertex `v` (lowest id on
//! ties): either `v` joins the cover, or all of `N(v)` does.
//!
//! After reduction every vertex has degree at least two, so the two
//! children have budgets at most `t − 1` and `t − 2` and the tree has fewer
//! than `2^(t+1)` nodes. This is a base-2 search, not the `1.2738^t`
//! algorithm of Chen, Kanj and Xia.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{bit_clear, bit_set, bit_test, ones, Graph};

/// Work limit for one search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VcConfig {
    /// Maximum number of search-tree nodes before giving up with a
    /// resource error.
    pub node_limit: u64,
}

impl Default for VcConfig {
    fn default() -> Self {
        VcConfig {
            node_limit: 1 << 32,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VcOutcome {
    pub covered: bool,
    /// Sorted cover of size at most `t`, present iff `covered`.
    pub cover: Option<Vec<usize>>,
    pub nodes_explored: u64,
}

pub fn vertex_cover_decide(g: &Graph, t: i64) -> Result<VcOutcome> {
    vertex_cover_decide_with(g, t, &VcConfig::default())
}

/// Decides whether `g` has a vertex cover of size at most `t`.
///
/// Negative budgets are always answered `false` without searching.
pub fn vertex_cover_decide_with(g: &Graph, t: i64, config: &VcConfig) -> Result<VcOutcome> {
    if t < 0 {
        return Ok(VcOutcome {
            covered: false,
            cover: None,
            nodes_explored: 0,
        });
    }
    let mut search = Search {
        g,
        cover: Vec::new(),
        nodes: 0,
        limit: config.node_limit,
    };
    let mut alive = vec![0u64; g.words()];
    for v in 0..g.n() {
        bit_set(&mut alive, v);
    }
    let covered = search.run(alive, t)?;
    let cover = covered.then(|| {
        let mut c = search.cover.clone();
        c.sort_unstable();
        c
    });
    if let Some(c) = &cover {
        assert!(c.len() as i64 <= t, "cover exceeds budget");
        assert!(g.is_vertex_cover(c), "search returned a non-cover");
    }
    Ok(VcOutcome {
        covered,
        cover,
        nodes_explored: search.nodes,
    })
}

struct Search<'g> {
    g: &'g Graph,
    cover: Vec<usize>,
    nodes: u64,
    limit: u64,
}

impl Search<'_> {
    fn degree_in(&self, v: usize, alive: &[u64]) -> usize {
        self.g
            .row(v)
            .iter()
            .zip(alive)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    fn take(&mut self, v: usize, alive: &mut [u64], budget: &mut i64) {
        self.cover.push(v);
        bit_clear(alive, v);
        *budget -= 1;
    }

    /// Applies the reductions until none fires. Returns `false` when the
    /// budget runs out.
    fn reduce(&mut self, alive: &mut [u64], budget: &mut i64) -> bool {
        loop {
            let mut changed = false;
            let vertices: Vec<usize> = ones(alive).collect();
            for v in vertices {
                if !bit_test(alive, v) {
                    continue;
                }
                let d = self.degree_in(v, alive);
                if d == 0 {
                    bit_clear(alive, v);
                    changed = true;
                } else if d == 1 {
                    let u = self
                        .g
                        .row(v)
                        .iter()
                        .zip(alive.iter())
                        .enumerate()
                        .find_map(|(i, (a, b))| {
                            let w = a & b;
                            (w != 0).then(|| i * 64 + w.trailing_zeros() as usize)
                        })
                        .expect("degree one");
                    self.take(u, alive, budget);
                    changed = true;
                } else if d as i64 > *budget {
                    self.take(v, alive, budget);
                    changed = true;
                }
                if *budget < 0 {
                    return false;
                }
            }
            if !changed {
                return true;
            }
        }
    }

    fn run(&mut self, mut alive: Vec<u64>, mut budget: i64) -> Result<bool> {
        self.nodes += 1;
        if self.nodes > self.limit {
            return Err(Error::resource(format!(
                "vertex-cover search exceeded {} nodes",
                self.limit
            )));
        }
        let mark = self.cover.len();
        if !self.reduce(&mut alive, &mut budget) {
            self.cover.truncate(mark);
            return Ok(false);
        }
        let mut best: Option<(usize, usize)> = None;
        let mut twice_edges = 0;
        for v in ones(&alive) {
            let d = self.degree_in(v, &alive);
            twice_edges += d;
            if best.is_none_or(|(_, bd)| d > bd) {
                best = Some((v, d));
            }
        }
        let Some((v, d)) = best else {
            return Ok(true);
        };
        // each cover vertex removes at most d edges
        if (twice_edges / 2) as i64 > budget * d as i64 {
            self.cover.truncate(mark);
            return Ok(false);
        }

        let branch_mark = self.cover.len();
        let mut with_v = alive.clone();
        let mut b = budget;
        self.take(v, &mut with_v, &mut b);
        if self.run(with_v, b)? {
            return Ok(true);
        }
        self.cover.truncate(branch_mark);

        let neighbours: Vec<usize> = self
            .g
            .neighbors(v)
            .filter(|&u| bit_test(&alive, u))
            .collect();
        let mut b = budget;
        for u in neighbours {
            self.take(u, &mut alive, &mut b);
        }
        bit_clear(&mut alive, v);
        if b >= 0 && self.run(alive, b)? {
            return Ok(true);
        }
        self.cover.truncate(mark);
        Ok(false)
    }
}

pub fn max_independent_set_at_least(g: &Graph, s: usize) -> Result<Option<Vec<usize>>> {
    max_independent_set_at_least_with(g, s, &VcConfig::default()).map(|(set, _)| set)
}

/// Independent set of size at least `s`, found as the complement of a
/// vertex cover of size at most `n − s`. Also returns the search outcome.
pub fn max_independent_set_at_least_with(
    g: &Graph,
    s: usize,
    config: &VcConfig,
) -> Result<(Option<Vec<usize>>, VcOutcome)> {
    let t = g.n() as i64 - s as i64;
    let outcome = vertex_cover_decide_with(g, t, config)?;
    let set = outcome.cover.as_ref().map(|cover| {
        let mut in_cover = vec![0u64; g.words()];
        for &v in cover {
            bit_set(&mut in_cover, v);
        }
        (0..g.n()).filter(|&v| !bit_test(&in_cover, v)).collect::<Vec<_>>()
    });
    if let Some(set) = &set {
        assert!(set.len() >= s, "independent set below requested size");
        assert!(g.is_independent(set), "complement of a cover is not independent");
    }
    Ok((set, outcome))
}
