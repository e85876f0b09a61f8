//! Kernelization: delete every vertex of degree at least `n − p + k`.
//!
//! Any independent set of size `p − k + 1` avoids those vertices, so the
//! remaining induced subgraph `G_{p,k}` answers `α ≤ p − k` exactly as `G`
//! does. Counting complement edges of the survivors gives
//! `n₀ < p(p+1)/(p−k)`, hence `n₀ ≤ p + 2k + 1` once `p ≥ 2k + 1`.

use alloc::format;
use alloc::vec::Vec;

use num_rational::Ratio;

use crate::bounds::bound_p;
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelResult {
    /// `G_{p,k}`.
    pub kernel: Graph,
    /// Deleted high-degree vertices, in original ids, ascending.
    pub removed: Vec<usize>,
    /// Kernel id → original id.
    pub mapping: Vec<usize>,
    pub n0: usize,
    pub p: usize,
    pub k: usize,
    /// Vertex-cover budget `n₀ − (p − k + 1)`; negative means no independent
    /// set of size `p − k + 1` fits in the kernel.
    pub budget_t: i64,
    /// `n₀ ≤ p − k`, which forces `α(G_{p,k}) ≤ p − k`.
    pub trivially_yes: bool,
}

impl KernelResult {
    /// Degree threshold `n − p + k` at or above which vertices were removed.
    pub fn threshold(&self) -> usize {
        self.n0 + self.removed.len() + self.k - self.p
    }

    /// Target independent-set size `p − k + 1`.
    pub fn target(&self) -> usize {
        self.p - self.k + 1
    }
}

fn check_parameters(p: usize, k: usize) -> Result<()> {
    if p < 2 * k + 1 {
        return Err(Error::parameter(format!(
            "kernelization needs p >= 2k + 1, got p = {p}, k = {k}"
        )));
    }
    Ok(())
}

/// Builds `G_{p,k}` with `p = bound_p(g)`.
///
/// Degrees are taken in `g` and all deletions happen in one pass.
pub fn kernelize(g: &Graph, k: usize) -> Result<KernelResult> {
    let p = bound_p(g);
    check_parameters(p, k)?;
    let threshold = g.n() - p + k;
    let (kept, removed): (Vec<usize>, Vec<usize>) =
        (0..g.n()).partition(|&v| g.deg(v) < threshold);
    let (kernel, mapping) = g.induced_subgraph(&kept)?;
    let n0 = kernel.n();
    let budget_t = n0 as i64 - (p - k + 1) as i64;
    Ok(KernelResult {
        kernel,
        removed,
        mapping,
        n0,
        p,
        k,
        budget_t,
        trivially_yes: n0 <= p - k,
    })
}

/// `p + 2k + 1`, the kernel order bound for `p ≥ 2k + 1`.
pub fn kernel_size_bound(p: usize, k: usize) -> Result<usize> {
    check_parameters(p, k)?;
    Ok(p + 2 * k + 1)
}

/// Strict kernel order bound `p + c/(c−1)·(k+1)` for `p ≥ c·k`, `c > 1`.
pub fn kernel_size_bound_scaled(p: usize, k: usize, c: Ratio<i64>) -> Result<Ratio<i64>> {
    let one = Ratio::from_integer(1);
    if c <= one {
        return Err(Error::parameter(format!("scale c must exceed 1, got {c}")));
    }
    let p = Ratio::from_integer(p as i64);
    let k = Ratio::from_integer(k as i64);
    if p < c * k {
        return Err(Error::parameter(format!("need p >= c*k, got p = {p}, c*k = {}", c * k)));
    }
    Ok(p + c / (c - one) * (k + one))
}

/// Strict intermediate bound `p(p+1)/(p−k)` on the kernel order.
pub fn kernel_size_bound_strict(p: usize, k: usize) -> Result<Ratio<i64>> {
    if p <= k {
        return Err(Error::parameter(format!("need p > k, got p = {p}, k = {k}")));
    }
    Ok(Ratio::new((p * (p + 1)) as i64, (p - k) as i64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{complete, cycle, empty, h_np};

    #[test]
    fn kernel_of_h_10_4() {
        let g = h_np(10, 4).unwrap();
        let r = kernelize(&g, 1).unwrap();
        assert_eq!(r.threshold(), 7);
        assert_eq!(r.removed, [0, 1, 2, 3, 4, 5]);
        assert_eq!(r.mapping, [6, 7, 8, 9]);
        assert_eq!(r.kernel, empty(4));
        assert_eq!((r.n0, r.p, r.budget_t, r.trivially_yes), (4, 4, 0, false));
        assert!(r.n0 <= kernel_size_bound(4, 1).unwrap());
    }

    #[test]
    fn kernel_of_c5() {
        let c5 = cycle(5).unwrap();
        let r = kernelize(&c5, 1).unwrap();
        assert_eq!(r.threshold(), 3);
        assert!(r.removed.is_empty());
        assert_eq!(r.kernel, c5);
        assert_eq!((r.n0, r.budget_t), (5, 2));
        assert!(r.budget_t <= 3);
    }

    #[test]
    fn kernel_of_empty_graph() {
        let r = kernelize(&empty(5), 1).unwrap();
        assert_eq!((r.p, r.threshold(), r.n0, r.budget_t), (5, 1, 5, 0));
        assert!(r.removed.is_empty());
    }

    #[test]
    fn k_zero_is_always_trivial() {
        let r = kernelize(&cycle(7).unwrap(), 0).unwrap();
        assert!(r.trivially_yes);
        assert!(r.budget_t < 0);
    }

    #[test]
    fn refuses_small_p() {
        assert!(matches!(kernelize(&complete(9), 1), Err(Error::Parameter(_))));
        assert!(kernelize(&complete(9), 0).is_ok());
        assert!(matches!(kernelize(&empty(0), 0), Err(Error::Parameter(_))));
    }

    #[test]
    fn size_bounds() {
        assert_eq!(kernel_size_bound(4, 1).unwrap(), 7);
        assert_eq!(kernel_size_bound(1, 0).unwrap(), 2);
        assert_eq!(kernel_size_bound(15, 3).unwrap(), 22);
        assert!(kernel_size_bound(6, 3).is_err());
    }

    #[test]
    fn scaled_size_bounds() {
        let r = |n, d| Ratio::new(n, d);
        assert_eq!(kernel_size_bound_scaled(10, 2, r(3, 1)).unwrap(), r(29, 2));
        assert_eq!(kernel_size_bound_scaled(10, 0, r(2, 1)).unwrap(), r(12, 1));
        assert_eq!(kernel_size_bound_scaled(20, 4, r(5, 1)).unwrap(), r(105, 4));
        assert!(kernel_size_bound_scaled(10, 2, r(1, 1)).is_err());
        assert!(kernel_size_bound_scaled(10, 4, r(3, 1)).is_err());
        assert!(kernel_size_bound_scaled(10, 4, r(5, 2)).is_ok());
    }
}
