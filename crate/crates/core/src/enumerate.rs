//! Exhaustive enumeration of labeled graphs on a few vertices.

use alloc::vec::Vec;

use crate::graph::{Graph, GraphBuilder};

/// All `2^(n(n−1)/2)` labeled graphs on `n` vertices; bit `i` of the code
/// selects the `i`-th pair in lexicographic order. Limited to `n ≤ 11`.
#[derive(Debug, Clone)]
pub struct LabeledGraphs {
    n: usize,
    pairs: Vec<(usize, usize)>,
    next: u64,
    end: u64,
}

impl LabeledGraphs {
    pub fn new(n: usize) -> Self {
        assert!(n <= 11, "too many labeled graphs on {n} vertices");
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        let end = 1u64 << pairs.len();
        LabeledGraphs {
            n,
            pairs,
            next: 0,
            end,
        }
    }

    pub fn total(n: usize) -> u64 {
        1u64 << (n * n.saturating_sub(1) / 2)
    }

    pub fn decode(&self, code: u64) -> Graph {
        let mut b = GraphBuilder::new(self.n);
        for (i, &(u, v)) in self.pairs.iter().enumerate() {
            if code >> i & 1 == 1 {
                b.add_edge(u, v).expect("ids in range");
            }
        }
        b.build()
    }
}

impl Iterator for LabeledGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.next == self.end {
            return None;
        }
        let g = self.decode(self.next);
        self.next += 1;
        Some(g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        assert_eq!(LabeledGraphs::new(0).count(), 1);
        assert_eq!(LabeledGraphs::new(1).count(), 1);
        assert_eq!(LabeledGraphs::new(3).count(), 8);
        assert_eq!(LabeledGraphs::new(4).count(), 64);
        assert_eq!(LabeledGraphs::total(6), 32_768);
    }

    #[test]
    fn edge_totals() {
        // each of the 6 pairs is present in half of the 64 graphs on 4 vertices
        let total: usize = LabeledGraphs::new(4).map(|g| g.m()).sum();
        assert_eq!(total, 6 * 32);
    }
}
