//! Certified decision of `α(G) ≤ p − k`.
//!
//! 1. compute `p` and `p₁`;
//! 2. `p₁ ≤ p − k` answers YES;
//! 3. otherwise compute `p₂`;
//! 4. `p₂ ≤ p − k` answers YES;
//! 5. otherwise kernelize and look for an independent set of size
//!    `p − k + 1` in the kernel with the vertex-cover search: one found
//!    answers NO, none found answers YES.
//!
//! Only step 5 can answer NO.

use alloc::format;
use alloc::vec::Vec;

use crate::bounds::{bound_p, bound_p1, bound_p2, bound_wp_complement, BoundsReport};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::kernel::{kernelize, KernelResult};
use crate::vc::{max_independent_set_at_least_with, VcConfig};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Answer {
    Yes,
    No,
}

/// The step that settled a decision.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    P1Bound,
    P2Bound,
    KernelTrivial,
    VcSearch,
}

impl Step {
    pub fn as_str(self) -> &'static str {
        match self {
            Step::P1Bound => "P1_BOUND",
            Step::P2Bound => "P2_BOUND",
            Step::KernelTrivial => "KERNEL_TRIVIAL",
            Step::VcSearch => "VC_SEARCH",
        }
    }
}

impl Answer {
    pub fn as_str(self) -> &'static str {
        match self {
            Answer::Yes => "YES",
            Answer::No => "NO",
        }
    }
}

/// Evidence for an answer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    /// `p₁ ≤ p − k`.
    P1 { p1: usize },
    /// `p₂ ≤ p − k`.
    P2 { p2: usize },
    /// The kernel has at most `p − k` vertices.
    KernelTooSmall { n0: usize },
    /// The kernel has no vertex cover of size `budget`.
    SearchExhausted { budget: i64, nodes_explored: u64 },
    /// Independent set of size `p − k + 1`, in ids of the input graph.
    IndependentSet(Vec<usize>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decision {
    pub k: usize,
    pub answer: Answer,
    pub resolved_at: Step,
    pub certificate: Certificate,
    pub bounds: BoundsReport,
    pub kernel: Option<KernelResult>,
}

impl Decision {
    /// `p − k`.
    pub fn threshold(&self) -> usize {
        self.bounds.p - self.k
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct DecideOptions {
    /// Go straight to the kernel, skipping the `p₁` and `p₂` tests.
    pub skip_bound_steps: bool,
    pub vc: VcConfig,
}

pub fn decide(g: &Graph, k: usize) -> Result<Decision> {
    decide_with(g, k, &DecideOptions::default())
}

pub fn decide_with(g: &Graph, k: usize, opts: &DecideOptions) -> Result<Decision> {
    let p = bound_p(g);
    if p < 2 * k + 1 {
        return Err(Error::parameter(format!(
            "deciding alpha <= p - k needs p >= 2k + 1, got p = {p}, k = {k}"
        )));
    }
    let target = p - k;
    let p1 = bound_p1(g);
    let mut bounds = BoundsReport {
        p,
        p1,
        p2: None,
        wp_complement: bound_wp_complement(g),
    };
    let decision = |answer, resolved_at, certificate, bounds, kernel| Decision {
        k,
        answer,
        resolved_at,
        certificate,
        bounds,
        kernel,
    };

    if !opts.skip_bound_steps {
        if p1 <= target {
            return Ok(decision(Answer::Yes, Step::P1Bound, Certificate::P1 { p1 }, bounds, None));
        }
        let p2 = bound_p2(g);
        bounds.p2 = Some(p2);
        if p2 <= target {
            return Ok(decision(Answer::Yes, Step::P2Bound, Certificate::P2 { p2 }, bounds, None));
        }
    }

    let kernel = kernelize(g, k)?;
    if kernel.trivially_yes {
        let cert = Certificate::KernelTooSmall { n0: kernel.n0 };
        return Ok(decision(Answer::Yes, Step::KernelTrivial, cert, bounds, Some(kernel)));
    }
    let (found, outcome) = max_independent_set_at_least_with(&kernel.kernel, target + 1, &opts.vc)?;
    match found {
        Some(set) => {
            let mut witness: Vec<usize> = set
                .into_iter()
                .take(target + 1)
                .map(|v| kernel.mapping[v])
                .collect();
            witness.sort_unstable();
            assert!(
                g.is_independent(&witness) && witness.len() == target + 1,
                "kernel witness does not lift to the input graph"
            );
            let cert = Certificate::IndependentSet(witness);
            Ok(decision(Answer::No, Step::VcSearch, cert, bounds, Some(kernel)))
        }
        None => {
            let cert = Certificate::SearchExhausted {
                budget: kernel.budget_t,
                nodes_explored: outcome.nodes_explored,
            };
            Ok(decision(Answer::Yes, Step::VcSearch, cert, bounds, Some(kernel)))
        }
    }
}

/// Decisions for every admissible `k = 0..=⌊(p−1)/2⌋`.
pub fn decide_many(g: &Graph) -> Result<Vec<(usize, Decision)>> {
    decide_many_with(g, &DecideOptions::default())
}

pub fn decide_many_with(g: &Graph, opts: &DecideOptions) -> Result<Vec<(usize, Decision)>> {
    let p = bound_p(g);
    let max_k = if p == 0 { None } else { Some((p - 1) / 2) };
    let out = max_k
        .into_iter()
        .flat_map(|mk| 0..=mk)
        .map(|k| decide_with(g, k, opts).map(|d| (k, d)))
        .collect::<Result<Vec<_>>>()?;
    // YES at k forces YES at every smaller k
    if let Some(first_no) = out.iter().position(|(_, d)| d.answer == Answer::No) {
        assert!(
            out[first_no..].iter().all(|(_, d)| d.answer == Answer::No),
            "answers are not monotone in k"
        );
    }
    Ok(out)
}

/// Re-checks a decision's certificate against `g`.
pub fn verify_certificate(g: &Graph, d: &Decision) -> bool {
    let p = bound_p(g);
    if p != d.bounds.p || p < d.k {
        return false;
    }
    let target = p - d.k;
    match (&d.certificate, d.answer) {
        (Certificate::P1 { p1 }, Answer::Yes) => *p1 == bound_p1(g) && *p1 <= target,
        (Certificate::P2 { p2 }, Answer::Yes) => {
            *p2 == bound_p2(g) && *p2 <= target && d.bounds.p1 > target
        }
        (Certificate::KernelTooSmall { n0 }, Answer::Yes) => {
            kernelize(g, d.k).is_ok_and(|kr| kr.n0 == *n0) && *n0 <= target
        }
        (Certificate::SearchExhausted { budget, .. }, Answer::Yes) => {
            kernelize(g, d.k).is_ok_and(|kr| kr.budget_t == *budget)
        }
        (Certificate::IndependentSet(set), Answer::No) => {
            set.len() == target + 1 && g.is_independent(set)
        }
        _ => false,
    }
}
