//! Named graph families.

use alloc::boxed::Box;
use alloc::format;
use alloc::vec::Vec;

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder};

pub fn empty(n: usize) -> Graph {
    Graph::empty(n)
}

pub fn complete(n: usize) -> Graph {
    let mut b = GraphBuilder::new(n);
    for u in 0..n {
        for v in u + 1..n {
            b.add_edge(u, v).expect("ids in range");
        }
    }
    b.build()
}

/// The cycle `0 − 1 − … − (n−1) − 0`; needs `n ≥ 3`.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::parameter(format!("cycle needs n >= 3, got {n}")));
    }
    let mut b = GraphBuilder::new(n);
    for v in 0..n {
        b.add_edge(v, (v + 1) % n)?;
    }
    Ok(b.build())
}

pub fn path(n: usize) -> Graph {
    let mut b = GraphBuilder::new(n);
    for v in 1..n {
        b.add_edge(v - 1, v).expect("ids in range");
    }
    b.build()
}

/// `A ∪ B`: the vertices of `b` are shifted by `a.n()`.
pub fn disjoint_union(a: &Graph, b: &Graph) -> Graph {
    let shift = a.n();
    let mut out = GraphBuilder::new(a.n() + b.n());
    for (u, v) in a.edges() {
        out.add_edge(u, v).expect("ids in range");
    }
    for (u, v) in b.edges() {
        out.add_edge(u + shift, v + shift).expect("ids in range");
    }
    out.build()
}

/// `A + B`: the disjoint union plus every edge between the two parts.
pub fn join(a: &Graph, b: &Graph) -> Graph {
    let shift = a.n();
    let mut out = GraphBuilder::new(a.n() + b.n());
    for (u, v) in a.edges() {
        out.add_edge(u, v).expect("ids in range");
    }
    for (u, v) in b.edges() {
        out.add_edge(u + shift, v + shift).expect("ids in range");
    }
    for u in 0..a.n() {
        for v in 0..b.n() {
            out.add_edge(u, v + shift).expect("ids in range");
        }
    }
    out.build()
}

/// `H_{n,p} = K_{n−p} + pK_1`, the family on which `α = p₂ = p₁ = p`.
///
/// Vertices `0..n−p` form the clique, `n−p..n` the independent part.
pub fn h_np(n: usize, p: usize) -> Result<Graph> {
    if p < 2 || n <= p {
        return Err(Error::parameter(format!(
            "h_np needs n > p >= 2, got n = {n}, p = {p}"
        )));
    }
    Ok(join(&complete(n - p), &empty(p)))
}

/// The Petersen graph: outer 5-cycle `0..5`, inner pentagram `5..10`.
pub fn petersen() -> Graph {
    let mut b = GraphBuilder::new(10);
    for i in 0..5 {
        b.add_edge(i, (i + 1) % 5).expect("ids in range");
        b.add_edge(i, i + 5).expect("ids in range");
        b.add_edge(5 + i, 5 + (i + 2) % 5).expect("ids in range");
    }
    b.build()
}

/// Erdős–Rényi `G(n, prob)`. Pairs `(u, v)`, `u < v`, are visited in
/// lexicographic order and each is kept with probability `prob`, drawing
/// one 64-bit word from a ChaCha8 stream seeded with `seed`.
pub fn gnp(n: usize, prob: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&prob) {
        return Err(Error::parameter(format!(
            "edge probability must lie in [0, 1], got {prob}"
        )));
    }
    let mut b = GraphBuilder::new(n);
    if prob == 0.0 {
        return Ok(b.build());
    }
    let always = prob == 1.0;
    // prob < 1 here, so the product stays below 2^64
    let threshold = (prob * 18_446_744_073_709_551_616.0) as u64;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for u in 0..n {
        for v in u + 1..n {
            if always || rng.next_u64() < threshold {
                b.add_edge(u, v)?;
            }
        }
    }
    Ok(b.build())
}

/// A family description that can be turned into a graph.
#[derive(Debug, Clone, PartialEq)]
pub enum Family {
    Empty(usize),
    Complete(usize),
    Cycle(usize),
    Path(usize),
    Petersen,
    Join(Box<Family>, Box<Family>),
    DisjointUnion(Box<Family>, Box<Family>),
    Hnp(usize, usize),
    /// Erdős–Rényi with the given vertex count and edge probability; the
    /// seed is supplied at build time.
    Gnp(usize, f64),
}

impl Family {
    /// Builds the graph. Nested random members receive `seed`, `seed + 1`,
    /// ... in left-to-right order.
    pub fn build(&self, seed: u64) -> Result<Graph> {
        let mut next = seed;
        self.build_inner(&mut next)
    }

    fn build_inner(&self, seed: &mut u64) -> Result<Graph> {
        Ok(match self {
            Family::Empty(n) => empty(*n),
            Family::Complete(n) => complete(*n),
            Family::Cycle(n) => cycle(*n)?,
            Family::Path(n) => path(*n),
            Family::Petersen => petersen(),
            Family::Join(a, b) => {
                let ga = a.build_inner(seed)?;
                let gb = b.build_inner(seed)?;
                join(&ga, &gb)
            }
            Family::DisjointUnion(a, b) => {
                let ga = a.build_inner(seed)?;
                let gb = b.build_inner(seed)?;
                disjoint_union(&ga, &gb)
            }
            Family::Hnp(n, p) => h_np(*n, *p)?,
            Family::Gnp(n, prob) => {
                let g = gnp(*n, *prob, *seed)?;
                *seed = seed.wrapping_add(1);
                g
            }
        })
    }
}

/// Degrees of `h_np(n, p)` split into the two classes, for checks.
pub fn h_np_degree_classes(g: &Graph, n: usize, p: usize) -> (usize, usize) {
    let degs: Vec<usize> = g.degrees();
    let low = degs.iter().filter(|&&d| d == n - p).count();
    let high = degs.iter().filter(|&&d| d == n - 1).count();
    (low, high)
}
