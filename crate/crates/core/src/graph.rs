//! Immutable simple undirected graphs stored as bit-row adjacency matrices.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

pub(crate) const WORD_BITS: usize = 64;

#[inline]
pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(WORD_BITS)
}

#[inline]
pub(crate) fn bit_test(row: &[u64], v: usize) -> bool {
    row[v / WORD_BITS] >> (v % WORD_BITS) & 1 == 1
}

#[inline]
pub(crate) fn bit_set(row: &mut [u64], v: usize) {
    row[v / WORD_BITS] |= 1 << (v % WORD_BITS);
}

#[inline]
pub(crate) fn bit_clear(row: &mut [u64], v: usize) {
    row[v / WORD_BITS] &= !(1 << (v % WORD_BITS));
}

#[inline]
pub(crate) fn popcount(row: &[u64]) -> usize {
    row.iter().map(|w| w.count_ones() as usize).sum()
}

/// Iterates the indices of the set bits of a row in ascending order.
pub(crate) fn ones(row: &[u64]) -> impl Iterator<Item = usize> + '_ {
    row.iter().enumerate().flat_map(|(i, &w)| {
        let mut word = w;
        core::iter::from_fn(move || {
            if word == 0 {
                None
            } else {
                let tz = word.trailing_zeros() as usize;
                word &= word - 1;
                Some(i * WORD_BITS + tz)
            }
        })
    })
}

/// A simple undirected graph on the vertices `0..n`.
///
/// Row `v` of the adjacency matrix is a bit vector of `words_for(n)` words.
/// The matrix is symmetric with an empty diagonal and `m` caches the edge
/// count. Graphs never change after construction.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
    m: usize,
}

impl core::fmt::Debug for Graph {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("m", &self.m)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Degrees of a graph sorted non-decreasingly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeSequence {
    pub ascending: Vec<usize>,
}

impl DegreeSequence {
    pub fn len(&self) -> usize {
        self.ascending.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ascending.is_empty()
    }

    pub fn sum(&self) -> usize {
        self.ascending.iter().sum()
    }

    /// Degrees sorted non-increasingly.
    pub fn descending(&self) -> Vec<usize> {
        self.ascending.iter().rev().copied().collect()
    }
}

/// Incremental construction of a [`Graph`]. Duplicate edges collapse.
#[derive(Debug, Clone)]
pub struct GraphBuilder {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

impl GraphBuilder {
    pub fn new(n: usize) -> Self {
        let words = words_for(n);
        GraphBuilder {
            n,
            words,
            rows: vec![0; n * words],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Adds the edge `uv`; fails on a self-loop or an out-of-range endpoint.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<&mut Self> {
        if u >= self.n || v >= self.n {
            return Err(Error::input(format!(
                "edge ({u}, {v}) references a vertex outside 0..{}",
                self.n
            )));
        }
        if u == v {
            return Err(Error::input(format!("self-loop at vertex {u}")));
        }
        let w = self.words;
        bit_set(&mut self.rows[u * w..(u + 1) * w], v);
        bit_set(&mut self.rows[v * w..(v + 1) * w], u);
        Ok(self)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && bit_test(&self.rows[u * self.words..(u + 1) * self.words], v)
    }

    pub fn build(self) -> Graph {
        let m = popcount(&self.rows) / 2;
        let g = Graph {
            n: self.n,
            words: self.words,
            rows: self.rows,
            m,
        };
        g.debug_check();
        g
    }
}

impl Graph {
    /// The graph on `n` vertices without edges.
    pub fn empty(n: usize) -> Self {
        GraphBuilder::new(n).build()
    }

    /// Builds a graph from an edge list, collapsing duplicates.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut b = GraphBuilder::new(n);
        for (u, v) in edges {
            b.add_edge(u, v)?;
        }
        Ok(b.build())
    }

    pub(crate) fn from_rows(n: usize, rows: Vec<u64>) -> Self {
        let words = words_for(n);
        debug_assert_eq!(rows.len(), n * words);
        let m = popcount(&rows) / 2;
        let g = Graph { n, words, rows, m };
        g.debug_check();
        g
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    /// Number of 64-bit words per adjacency row.
    #[inline]
    pub fn words(&self) -> usize {
        self.words
    }

    /// Adjacency row of `v`. Panics if `v >= n`.
    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && bit_test(self.row(u), v)
    }

    /// Degree of `v`, or an input error when `v` is not a vertex.
    pub fn degree(&self, v: usize) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.deg(v))
    }

    #[inline]
    pub(crate) fn deg(&self, v: usize) -> usize {
        popcount(self.row(v))
    }

    /// Degrees indexed by vertex id.
    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.deg(v)).collect()
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::input(format!(
                "vertex {v} out of range for a graph on {} vertices",
                self.n
            )))
        }
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        ones(self.row(v))
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// `m(Ḡ) = n(n−1)/2 − m`.
    pub fn complement_edge_count(&self) -> usize {
        self.n * self.n.saturating_sub(1) / 2 - self.m
    }

    pub fn complement(&self) -> Graph {
        let mut rows = vec![0u64; self.rows.len()];
        for v in 0..self.n {
            let dst = &mut rows[v * self.words..(v + 1) * self.words];
            for (d, s) in dst.iter_mut().zip(self.row(v)) {
                *d = !*s;
            }
            bit_clear(dst, v);
            // clear padding bits beyond n
            let tail = self.n % WORD_BITS;
            if tail != 0 {
                dst[self.words - 1] &= (1u64 << tail) - 1;
            }
        }
        Graph::from_rows(self.n, rows)
    }

    /// Subgraph induced by `keep` together with the map new id → old id.
    ///
    /// `keep` is sorted and deduplicated first, so new ids follow the order
    /// of the old ones.
    pub fn induced_subgraph(&self, keep: &[usize]) -> Result<(Graph, Vec<usize>)> {
        let mut mapping: Vec<usize> = keep.to_vec();
        mapping.sort_unstable();
        mapping.dedup();
        if let Some(&last) = mapping.last() {
            self.check_vertex(last)?;
        }
        let n0 = mapping.len();
        let w0 = words_for(n0);
        let mut rows = vec![0u64; n0 * w0];
        for (i, &old) in mapping.iter().enumerate() {
            let src = self.row(old);
            let dst = &mut rows[i * w0..(i + 1) * w0];
            for (j, &old_j) in mapping.iter().enumerate() {
                if bit_test(src, old_j) {
                    bit_set(dst, j);
                }
            }
        }
        Ok((Graph::from_rows(n0, rows), mapping))
    }

    pub fn degree_sequence(&self) -> DegreeSequence {
        let mut ascending = self.degrees();
        ascending.sort_unstable();
        DegreeSequence { ascending }
    }

    /// True when no two vertices of `set` are adjacent. Out-of-range ids
    /// make the set invalid.
    pub fn is_independent(&self, set: &[usize]) -> bool {
        let mut mask = vec![0u64; self.words];
        for &v in set {
            if v >= self.n || bit_test(&mask, v) {
                return false;
            }
            bit_set(&mut mask, v);
        }
        set.iter()
            .all(|&v| self.row(v).iter().zip(&mask).all(|(a, b)| a & b == 0))
    }

    /// True when every edge has an endpoint in `set`.
    pub fn is_vertex_cover(&self, set: &[usize]) -> bool {
        let mut mask = vec![0u64; self.words];
        for &v in set {
            if v >= self.n {
                return false;
            }
            bit_set(&mut mask, v);
        }
        self.edges()
            .all(|(u, v)| bit_test(&mask, u) || bit_test(&mask, v))
    }

    /// Checks symmetry, the empty diagonal, clean padding and the cached
    /// edge count.
    pub fn validate(&self) -> Result<()> {
        let mut bits = 0;
        for v in 0..self.n {
            let row = self.row(v);
            if bit_test(row, v) {
                return Err(Error::input(format!("self-loop at vertex {v}")));
            }
            let tail = self.n % WORD_BITS;
            if tail != 0 && row[self.words - 1] >> tail != 0 {
                return Err(Error::input(format!("row {v} has bits beyond n")));
            }
            for u in ones(row) {
                if !bit_test(self.row(u), v) {
                    return Err(Error::input(format!("asymmetric adjacency ({v}, {u})")));
                }
            }
            bits += popcount(row);
        }
        if bits != 2 * self.m {
            return Err(Error::input(format!(
                "cached edge count {} disagrees with {} set bits",
                self.m, bits
            )));
        }
        Ok(())
    }

    #[inline]
    fn debug_check(&self) {
        #[cfg(debug_assertions)]
        if let Err(e) = self.validate() {
            panic!("graph invariant broken: {e}");
        }
    }
}
