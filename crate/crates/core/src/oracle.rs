//! Exact reference answers for small graphs.
//!
//! Everything here works on 64-bit vertex masks built straight from
//! `has_edge` and shares no code with the bounds, kernel or vertex-cover
//! search, so it can check them. Graphs are limited to a configurable cap
//! of at most 64 vertices.

use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const DEFAULT_CAP: usize = 40;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleConfig {
    pub cap: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig { cap: DEFAULT_CAP }
    }
}

fn masks(g: &Graph, cap: usize) -> Result<Vec<u64>> {
    let cap = cap.min(64);
    if g.n() > cap {
        return Err(Error::resource(format!(
            "oracle cap is {cap} vertices, graph has {}",
            g.n()
        )));
    }
    Ok((0..g.n())
        .map(|u| {
            (0..g.n())
                .filter(|&v| g.has_edge(u, v))
                .fold(0u64, |m, v| m | 1 << v)
        })
        .collect())
}

fn mask_of(set: &[usize]) -> u64 {
    set.iter().fold(0, |m, &v| m | 1 << v)
}

fn members(mask: u64) -> Vec<usize> {
    (0..64).filter(|&v| mask >> v & 1 == 1).collect()
}

fn full(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

pub fn exact_alpha(g: &Graph) -> Result<(usize, Vec<usize>)> {
    exact_alpha_with(g, &OracleConfig::default())
}

/// Independence number with a maximum independent set as witness.
///
/// Branch and bound over candidate masks: a candidate of degree at most
/// one among the candidates is always taken, otherwise the search branches
/// on a candidate of maximum degree.
pub fn exact_alpha_with(g: &Graph, config: &OracleConfig) -> Result<(usize, Vec<usize>)> {
    let adj = masks(g, config.cap)?;
    let mut best = 0u64;
    alpha_rec(&adj, full(g.n()), 0, &mut best);
    let witness = members(best);
    assert!(g.is_independent(&witness), "oracle witness not independent");
    Ok((witness.len(), witness))
}

fn alpha_rec(adj: &[u64], mut cand: u64, mut cur: u64, best: &mut u64) {
    loop {
        if (cur | cand).count_ones() <= best.count_ones() {
            return;
        }
        if cand == 0 {
            *best = cur;
            return;
        }
        let mut pick = None;
        let mut max = (0u32, 0usize);
        let mut c = cand;
        while c != 0 {
            let v = c.trailing_zeros() as usize;
            c &= c - 1;
            let d = (adj[v] & cand).count_ones();
            if d <= 1 {
                pick = Some(v);
                break;
            }
            if d > max.0 {
                max = (d, v);
            }
        }
        match pick {
            Some(v) => {
                cur |= 1 << v;
                cand &= !(adj[v] | 1 << v);
            }
            None => {
                let v = max.1;
                alpha_rec(adj, cand & !(adj[v] | 1 << v), cur | 1 << v, best);
                cand &= !(1 << v);
            }
        }
    }
}

/// Independence number by trying every vertex subset. Only for `n ≤ 20`.
pub fn enumerate_alpha(g: &Graph) -> Result<usize> {
    if g.n() > 20 {
        return Err(Error::resource("subset enumeration is limited to 20 vertices"));
    }
    let adj = masks(g, 20)?;
    Ok((0..1u64 << g.n())
        .filter(|&s| members(s).iter().all(|&v| adj[v] & s == 0))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0))
}

pub fn exact_min_vc(g: &Graph) -> Result<(usize, Vec<usize>)> {
    exact_min_vc_with(g, &OracleConfig::default())
}

/// Minimum vertex cover with witness, by branching on an uncovered edge
/// and pruning with a greedy maximal matching.
pub fn exact_min_vc_with(g: &Graph, config: &OracleConfig) -> Result<(usize, Vec<usize>)> {
    let adj = masks(g, config.cap)?;
    let mut best = full(g.n());
    vc_rec(&adj, 0, &mut best);
    let witness = members(best);
    assert!(g.is_vertex_cover(&witness), "oracle witness is not a cover");
    Ok((witness.len(), witness))
}

fn uncovered_edge(adj: &[u64], cover: u64) -> Option<(usize, usize)> {
    (0..adj.len()).find_map(|u| {
        if cover >> u & 1 == 1 {
            return None;
        }
        let open = adj[u] & !cover;
        (open != 0).then(|| (u, open.trailing_zeros() as usize))
    })
}

fn matching_lower_bound(adj: &[u64], cover: u64) -> u32 {
    let mut used = cover;
    let mut size = 0;
    for (u, &row) in adj.iter().enumerate() {
        if used >> u & 1 == 1 {
            continue;
        }
        let open = row & !used;
        if open != 0 {
            used |= 1 << u | 1 << open.trailing_zeros();
            size += 1;
        }
    }
    size
}

fn vc_rec(adj: &[u64], cover: u64, best: &mut u64) {
    if cover.count_ones() + matching_lower_bound(adj, cover) >= best.count_ones() {
        return;
    }
    match uncovered_edge(adj, cover) {
        None => *best = cover,
        Some((u, v)) => {
            vc_rec(adj, cover | 1 << u, best);
            vc_rec(adj, cover | 1 << v, best);
        }
    }
}

fn check_independent(adj: &[u64], i_set: u64) -> Result<()> {
    if members(i_set).iter().any(|&v| adj[v] & i_set != 0) {
        return Err(Error::input("the given set I is not independent"));
    }
    Ok(())
}

fn check_ids(g: &Graph, set: &[usize]) -> Result<()> {
    set.iter().try_for_each(|&v| g.check_vertex(v))
}

/// Whether `(I ∖ N(S)) ∪ S` is independent and larger than `I`.
pub fn is_augmenting_set(g: &Graph, i_set: &[usize], s_set: &[usize]) -> Result<bool> {
    check_ids(g, i_set)?;
    check_ids(g, s_set)?;
    let adj = masks(g, 64)?;
    let i = mask_of(i_set);
    check_independent(&adj, i)?;
    Ok(augments(&adj, i, mask_of(s_set)))
}

fn augments(adj: &[u64], i: u64, s: u64) -> bool {
    let ns = members(s).iter().fold(0u64, |m, &v| m | adj[v]);
    let result = (i & !ns) | s;
    members(result).iter().all(|&v| adj[v] & result == 0) && result.count_ones() > i.count_ones()
}

/// Searches every `S ⊆ V ∖ I` with `1 ≤ |S| ≤ max_size` for an augmenting
/// set of `I`. Vertices of `I` never help an augmenting set, so they are
/// left out of the candidates.
pub fn has_augmenting_set_upto(g: &Graph, i_set: &[usize], max_size: usize) -> Result<bool> {
    Ok(find_augmenting_set(g, i_set, max_size)?.is_some())
}

pub fn find_augmenting_set(g: &Graph, i_set: &[usize], max_size: usize) -> Result<Option<Vec<usize>>> {
    check_ids(g, i_set)?;
    let adj = masks(g, 64)?;
    let i = mask_of(i_set);
    check_independent(&adj, i)?;
    let outside = members(full(g.n()) & !i);
    let mut chosen = Vec::new();
    Ok(subsets_rec(&adj, i, &outside, 0, max_size, &mut chosen).then_some(chosen))
}

fn subsets_rec(adj: &[u64], i: u64, pool: &[usize], from: usize, left: usize, chosen: &mut Vec<usize>) -> bool {
    if !chosen.is_empty() && augments(adj, i, mask_of(chosen)) {
        return true;
    }
    if left == 0 {
        return false;
    }
    for idx in from..pool.len() {
        let v = pool[idx];
        // S must stay independent to augment
        if chosen.iter().any(|&u| adj[u] >> v & 1 == 1) {
            continue;
        }
        chosen.push(v);
        if subsets_rec(adj, i, pool, idx + 1, left - 1, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}
