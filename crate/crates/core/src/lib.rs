//! Independent sets near the size-based upper bound.
//!
//! For a simple graph on `n` vertices with `m` edges the independence number
//! satisfies `α ≤ p = ⌊1/2 + √(1/4 + n² − n − 2m)⌋`. This crate decides
//! `α ≤ p − k` by first trying two cheaper degree-based bounds, then reducing
//! to a kernel on at most `p + 2k + 1` vertices and running a bounded search
//! tree for vertex cover with budget at most `3k` on it.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]
#![deny(rust_2018_idioms)]

#[cfg(test)]
extern crate std;

extern crate alloc;

pub mod bounds;
pub mod enumerate;
pub mod error;
pub mod extremal;
pub mod generate;
pub mod graph;
pub mod kernel;
pub mod oracle;
pub mod pipeline;
pub mod vc;

pub use bounds::{bounds_report, BoundsReport};
pub use error::{Error, Result};
pub use graph::{DegreeSequence, Graph};
pub use kernel::{kernelize, KernelResult};
pub use pipeline::{decide, decide_many, Answer, Decision, Step};
