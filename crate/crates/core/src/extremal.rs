//! Structure of kernels with `α(G_{p,k}) = p − k + 1` for `k ≤ 3`.
//!
//! Fix a maximum independent set `I` of size `s = p − k + 1` and let
//! `R = V ∖ I`, `r = |R|`. Counted in the complement, `I` spans `C(s, 2)`
//! edges and the whole kernel spans fewer than `C(p+1, 2)`, so the set `E*`
//! of complement edges meeting `R` satisfies
//! `|E*| ≤ C(p+1, 2) − 1 − C(s, 2)`. When every vertex of `R` has at least
//! `p − k` non-neighbours, handshaking gives
//! `|E*| ≥ max{r(p−k) − C(r, 2), r(p−k)/2}`. For `p ≥ 3, 8, 15` (k = 1, 2, 3)
//! these two bounds leave only `0 ≤ r ≤ k`, and each `(k, r)` admits a short
//! list of sandwich families `L ⊆ G_{p,k} ⊆ sK₁ + K_r`.

use alloc::format;
use alloc::vec::Vec;
use core::fmt;
use core::ops::RangeInclusive;

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bounds::bound_p;
use crate::enumerate::LabeledGraphs;
use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder};
use crate::kernel::kernelize;
use crate::oracle::{exact_alpha, exact_alpha_with, OracleConfig};

/// One case of the extremal case lists, or no match.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyTag {
    K1A,
    K1B,
    K2A,
    K2B,
    K2C1,
    K2C2,
    K3A,
    K3B,
    K3C1,
    K3C2,
    K3D1,
    K3D2,
    K3D3,
    Unmatched,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Side {
    I(usize),
    R(usize),
}

use Side::{I, R};

impl FamilyTag {
    /// The thirteen cases in listed order.
    pub const ALL: [FamilyTag; 13] = [
        FamilyTag::K1A,
        FamilyTag::K1B,
        FamilyTag::K2A,
        FamilyTag::K2B,
        FamilyTag::K2C1,
        FamilyTag::K2C2,
        FamilyTag::K3A,
        FamilyTag::K3B,
        FamilyTag::K3C1,
        FamilyTag::K3C2,
        FamilyTag::K3D1,
        FamilyTag::K3D2,
        FamilyTag::K3D3,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyTag::K1A => "k1_a",
            FamilyTag::K1B => "k1_b",
            FamilyTag::K2A => "k2_a",
            FamilyTag::K2B => "k2_b",
            FamilyTag::K2C1 => "k2_c1",
            FamilyTag::K2C2 => "k2_c2",
            FamilyTag::K3A => "k3_a",
            FamilyTag::K3B => "k3_b",
            FamilyTag::K3C1 => "k3_c1",
            FamilyTag::K3C2 => "k3_c2",
            FamilyTag::K3D1 => "k3_d1",
            FamilyTag::K3D2 => "k3_d2",
            FamilyTag::K3D3 => "k3_d3",
            FamilyTag::Unmatched => "UNMATCHED",
        }
    }

    pub fn parse(name: &str) -> Option<FamilyTag> {
        FamilyTag::ALL
            .into_iter()
            .chain([FamilyTag::Unmatched])
            .find(|t| t.name().eq_ignore_ascii_case(name))
    }

    /// `(k, r)` of the case; `None` for `Unmatched`.
    pub fn case(self) -> Option<(usize, usize)> {
        Some(match self {
            FamilyTag::K1A => (1, 0),
            FamilyTag::K1B => (1, 1),
            FamilyTag::K2A => (2, 0),
            FamilyTag::K2B => (2, 1),
            FamilyTag::K2C1 | FamilyTag::K2C2 => (2, 2),
            FamilyTag::K3A => (3, 0),
            FamilyTag::K3B => (3, 1),
            FamilyTag::K3C1 | FamilyTag::K3C2 => (3, 2),
            FamilyTag::K3D1 | FamilyTag::K3D2 | FamilyTag::K3D3 => (3, 3),
            FamilyTag::Unmatched => return None,
        })
    }

    /// Edges of the lower sandwich graph beyond its isolated vertices,
    /// laid out on the designated parts `I` and `R`.
    fn lower_edges(self) -> &'static [(Side, Side)] {
        match self {
            FamilyTag::K1A | FamilyTag::K2A | FamilyTag::K3A | FamilyTag::Unmatched => &[],
            // K2
            FamilyTag::K1B | FamilyTag::K2B | FamilyTag::K3B => &[(R(0), I(0))],
            // K3
            FamilyTag::K2C1 | FamilyTag::K3C1 => &[(R(0), R(1)), (R(0), I(0)), (R(1), I(0))],
            // 2K2
            FamilyTag::K2C2 | FamilyTag::K3C2 => &[(R(0), I(0)), (R(1), I(1))],
            // K4
            FamilyTag::K3D1 => &[
                (R(0), R(1)),
                (R(0), R(2)),
                (R(1), R(2)),
                (R(0), I(0)),
                (R(1), I(0)),
                (R(2), I(0)),
            ],
            // K3 ∪ K2
            FamilyTag::K3D2 => &[(R(0), R(1)), (R(0), I(0)), (R(1), I(0)), (R(2), I(1))],
            // 3K2
            FamilyTag::K3D3 => &[(R(0), I(0)), (R(1), I(1)), (R(2), I(2))],
        }
    }
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Smallest `p` for which the case list of `k` is derived.
pub fn p_threshold(k: usize) -> Result<usize> {
    match k {
        1 => Ok(3),
        2 => Ok(8),
        3 => Ok(15),
        _ => Err(Error::parameter(format!("extremal cases exist for k = 1, 2, 3 only, got {k}"))),
    }
}

fn check_case(p: usize, k: usize) -> Result<()> {
    let t = p_threshold(k)?;
    if p < t {
        return Err(Error::parameter(format!("k = {k} needs p >= {t}, got p = {p}")));
    }
    Ok(())
}

fn choose2(x: u64) -> u64 {
    x * x.saturating_sub(1) / 2
}

/// `C(p+1, 2) − 1 − C(p−k+1, 2)`, the most complement edges that can meet `R`.
pub fn e_star_budget(p: usize, k: usize) -> Result<u64> {
    if k < 1 || p < k {
        return Err(Error::parameter(format!("need p >= k >= 1, got p = {p}, k = {k}")));
    }
    let (p, k) = (p as u64, k as u64);
    Ok(choose2(p + 1) - 1 - choose2(p - k + 1))
}

/// `⌈max{r(p−k) − C(r, 2), r(p−k)/2}⌉`, clamped at zero.
pub fn handshake_lower_bound(p: usize, k: usize, r: usize) -> u64 {
    let (r, gap) = (r as i64, p as i64 - k as i64);
    let first = r * gap - r * (r - 1) / 2;
    let second = (r * gap + 1).div_euclid(2);
    first.max(second).max(0) as u64
}

/// Admissible sizes of `R`, found by keeping every `r ≤ 3k` whose handshake
/// lower bound fits under the `E*` budget.
pub fn r_range(p: usize, k: usize) -> Result<RangeInclusive<usize>> {
    check_case(p, k)?;
    let budget = e_star_budget(p, k)?;
    let allowed: Vec<usize> = (0..=3 * k)
        .filter(|&r| handshake_lower_bound(p, k, r) <= budget)
        .collect();
    let hi = *allowed.last().expect("r = 0 always fits");
    assert_eq!(allowed.len(), hi + 1, "admissible r are not contiguous");
    assert_eq!(hi, k, "admissible r do not end at k");
    Ok(0..=hi)
}

/// Which member of a sandwich to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeChoice {
    Lower,
    Upper,
    /// Lower graph plus each remaining edge of the upper graph with
    /// probability 1/2.
    Random(u64),
}

/// A member of the family `tag` for the given `p`.
///
/// Vertices `0..s` form the designated independent set `I`
/// (`s = p − k + 1`) and `s..s + r` form `R`.
pub fn generate_extremal(tag: FamilyTag, p: usize, choice: EdgeChoice) -> Result<Graph> {
    let (k, r) = tag
        .case()
        .ok_or_else(|| Error::parameter("cannot generate the UNMATCHED family"))?;
    check_case(p, k)?;
    let s = p - k + 1;
    let id = |side: Side| match side {
        I(i) => i,
        R(j) => s + j,
    };
    let mut b = GraphBuilder::new(s + r);
    for &(x, y) in tag.lower_edges() {
        b.add_edge(id(x), id(y))?;
    }
    let mut rng = match choice {
        EdgeChoice::Random(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
        _ => None,
    };
    if choice != EdgeChoice::Lower {
        for x in s..s + r {
            for y in 0..x {
                if b.has_edge(x, y) {
                    continue;
                }
                let keep = match rng.as_mut() {
                    Some(rng) => rng.next_u64() >> 63 == 1,
                    None => true,
                };
                if keep {
                    b.add_edge(x, y)?;
                }
            }
        }
    }
    let g = b.build();
    let designated: Vec<usize> = (0..s).collect();
    assert!(contains_lower(&g, tag, &designated), "member misses the lower graph");
    assert!(g.is_independent(&designated), "member exceeds the upper graph");
    if g.n() <= OracleConfig::default().cap {
        assert_eq!(exact_alpha(&g)?.0, s, "member has the wrong independence number");
    }
    Ok(g)
}

/// Whether the lower graph of `tag` embeds in `g` with its `I` vertices in
/// `i_set` and its `R` vertices outside.
fn contains_lower(g: &Graph, tag: FamilyTag, i_set: &[usize]) -> bool {
    let edges = tag.lower_edges();
    if edges.is_empty() {
        return true;
    }
    let r_set: Vec<usize> = (0..g.n()).filter(|v| !i_set.contains(v)).collect();
    let mut pattern: Vec<Side> = Vec::new();
    for &(x, y) in edges {
        for side in [x, y] {
            if !pattern.contains(&side) {
                pattern.push(side);
            }
        }
    }
    let mut image: Vec<usize> = Vec::with_capacity(pattern.len());
    embed(g, edges, &pattern, i_set, &r_set, &mut image)
}

fn embed(
    g: &Graph,
    edges: &[(Side, Side)],
    pattern: &[Side],
    i_set: &[usize],
    r_set: &[usize],
    image: &mut Vec<usize>,
) -> bool {
    let depth = image.len();
    if depth == pattern.len() {
        return true;
    }
    let here = pattern[depth];
    let pool = match here {
        I(_) => i_set,
        R(_) => r_set,
    };
    for &cand in pool {
        if image.contains(&cand) {
            continue;
        }
        let fits = edges.iter().all(|&(x, y)| {
            let other = if x == here {
                y
            } else if y == here {
                x
            } else {
                return true;
            };
            match pattern[..depth].iter().position(|&s| s == other) {
                Some(j) => g.has_edge(cand, image[j]),
                None => true,
            }
        });
        if fits {
            image.push(cand);
            if embed(g, edges, pattern, i_set, r_set, image) {
                return true;
            }
            image.pop();
        }
    }
    false
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtremalAnalysis {
    pub p: usize,
    pub k: usize,
    /// Maximum independent set, `|I| = p − k + 1`.
    pub i_set: Vec<usize>,
    pub r_set: Vec<usize>,
    pub r: usize,
    /// Complement edges with at least one endpoint in `R`.
    pub e_star: u64,
    pub e_star_budget: u64,
    pub handshake_lower: u64,
    /// Every vertex of `R` has at least `p − k` non-neighbours, which is
    /// what the handshake lower bound assumes.
    pub handshake_applies: bool,
    pub family_tag: FamilyTag,
}

pub fn classify_extremal(g: &Graph, p: usize, k: usize) -> Result<ExtremalAnalysis> {
    classify_extremal_with(g, p, k, &OracleConfig::default())
}

/// Matches `g` against the case list of `k`; the first matching tag in
/// listed order wins.
pub fn classify_extremal_with(g: &Graph, p: usize, k: usize, oracle: &OracleConfig) -> Result<ExtremalAnalysis> {
    check_case(p, k)?;
    let s = p - k + 1;
    let (alpha, i_set) = exact_alpha_with(g, oracle)?;
    if alpha != s {
        return Err(Error::input(format!(
            "classification needs alpha = p - k + 1 = {s}, graph has alpha = {alpha}"
        )));
    }
    let r_set: Vec<usize> = (0..g.n()).filter(|v| !i_set.contains(v)).collect();
    let r = r_set.len();
    let e_star = (g.complement_edge_count() as u64) - choose2(s as u64);
    let handshake_applies = r_set
        .iter()
        .all(|&v| g.n() - 1 - g.deg(v) >= p - k);
    let family_tag = FamilyTag::ALL
        .into_iter()
        .filter(|t| t.case() == Some((k, r)))
        .find(|&t| contains_lower(g, t, &i_set))
        .unwrap_or(FamilyTag::Unmatched);
    Ok(ExtremalAnalysis {
        p,
        k,
        i_set,
        r_set,
        r,
        e_star,
        e_star_budget: e_star_budget(p, k)?,
        handshake_lower: handshake_lower_bound(p, k, r),
        handshake_applies,
        family_tag,
    })
}

/// Outcome of the exhaustive `k = 1` check for one `p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompletenessSummary {
    pub p: usize,
    pub max_n: usize,
    pub graphs_checked: u64,
    /// Graphs that are their own kernel at `k = 1` with `α = p`.
    pub admissible: u64,
    pub by_tag: Vec<(FamilyTag, u64)>,
    pub unmatched: Vec<Graph>,
}

/// Enumerates every labeled graph on `p..=max_n` vertices and classifies
/// those that could be a kernel with answer NO at `k = 1`: `bound_p = p`,
/// kernelization deletes nothing and `α = p`.
pub fn enumerate_k1(p: usize, max_n: usize) -> Result<CompletenessSummary> {
    check_case(p, 1)?;
    if max_n > 8 {
        return Err(Error::parameter(format!("enumeration is limited to 8 vertices, got {max_n}")));
    }
    let mut summary = CompletenessSummary {
        p,
        max_n,
        graphs_checked: 0,
        admissible: 0,
        by_tag: Vec::new(),
        unmatched: Vec::new(),
    };
    for n in p..=max_n {
        for g in LabeledGraphs::new(n) {
            summary.graphs_checked += 1;
            if bound_p(&g) != p || !kernelize(&g, 1)?.removed.is_empty() {
                continue;
            }
            if exact_alpha(&g)?.0 != p {
                continue;
            }
            summary.admissible += 1;
            let a = classify_extremal(&g, p, 1)?;
            match summary.by_tag.iter_mut().find(|(t, _)| *t == a.family_tag) {
                Some((_, c)) => *c += 1,
                None => summary.by_tag.push((a.family_tag, 1)),
            }
            if a.family_tag == FamilyTag::Unmatched {
                summary.unmatched.push(g);
            }
        }
    }
    summary.by_tag.sort();
    Ok(summary)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{complete, disjoint_union, empty};

    #[test]
    fn budgets() {
        assert_eq!(e_star_budget(5, 1).unwrap(), 4);
        assert_eq!(e_star_budget(5, 2).unwrap(), 8);
        assert_eq!(e_star_budget(10, 3).unwrap(), 26);
        for p in 3..40 {
            assert_eq!(e_star_budget(p, 1).unwrap(), p as u64 - 1);
            if p >= 2 {
                assert_eq!(e_star_budget(p, 2).unwrap(), 2 * p as u64 - 2);
            }
            if p >= 3 {
                assert_eq!(e_star_budget(p, 3).unwrap(), 3 * p as u64 - 4);
            }
        }
        assert!(e_star_budget(2, 3).is_err());
        assert!(e_star_budget(5, 0).is_err());
    }

    #[test]
    fn ranges() {
        assert_eq!(r_range(3, 1).unwrap(), 0..=1);
        assert_eq!(r_range(8, 2).unwrap(), 0..=2);
        assert_eq!(r_range(15, 3).unwrap(), 0..=3);
        assert_eq!(r_range(40, 3).unwrap(), 0..=3);
        assert!(r_range(2, 1).is_err());
        assert!(r_range(7, 2).is_err());
        assert!(r_range(14, 3).is_err());
        assert!(r_range(20, 4).is_err());
    }

    #[test]
    fn handshake_values() {
        // r = 2, p − k = 6: max{12 − 1, 6}
        assert_eq!(handshake_lower_bound(8, 2, 2), 11);
        // r = 1, p − k = 3: max{3, 1.5}
        assert_eq!(handshake_lower_bound(4, 1, 1), 3);
        assert_eq!(handshake_lower_bound(4, 1, 0), 0);
    }

    #[test]
    fn generated_lower_graphs() {
        let g = generate_extremal(FamilyTag::K1A, 4, EdgeChoice::Lower).unwrap();
        assert_eq!(g, empty(4));
        let g = generate_extremal(FamilyTag::K2C2, 8, EdgeChoice::Lower).unwrap();
        assert_eq!((g.n(), g.m()), (9, 2));
        let g = generate_extremal(FamilyTag::K3D3, 15, EdgeChoice::Lower).unwrap();
        assert_eq!((g.n(), g.m()), (16, 3));
        assert!(generate_extremal(FamilyTag::K3D3, 14, EdgeChoice::Lower).is_err());
        assert!(generate_extremal(FamilyTag::Unmatched, 14, EdgeChoice::Lower).is_err());
    }

    #[test]
    fn upper_graphs_are_joins() {
        let g = generate_extremal(FamilyTag::K2C1, 8, EdgeChoice::Upper).unwrap();
        // 7K1 + K2
        assert_eq!((g.n(), g.m()), (9, 7 * 2 + 1));
    }

    #[test]
    fn classification_examples() {
        let a = classify_extremal(&empty(4), 4, 1).unwrap();
        assert_eq!((a.r, a.e_star, a.family_tag), (0, 0, FamilyTag::K1A));

        let k2_3k1 = disjoint_union(&complete(2), &empty(3));
        let a = classify_extremal(&k2_3k1, 4, 1).unwrap();
        // the R vertex misses the three isolated vertices of I
        assert_eq!((a.r, a.e_star, a.family_tag), (1, 3, FamilyTag::K1B));

        let k3_6k1 = disjoint_union(&complete(3), &empty(6));
        let a = classify_extremal(&k3_6k1, 8, 2).unwrap();
        assert_eq!((a.r, a.e_star, a.family_tag), (2, 12, FamilyTag::K2C1));
        assert!(a.handshake_applies && a.e_star >= a.handshake_lower);
    }

    #[test]
    fn classification_preconditions() {
        // α(K3 ∪ 7K1) = 8 but p − k + 1 = 7
        let g = disjoint_union(&complete(3), &empty(7));
        assert!(matches!(classify_extremal(&g, 8, 2), Err(Error::Input(_))));
        assert!(matches!(classify_extremal(&empty(2), 2, 1), Err(Error::Parameter(_))));
        assert!(matches!(classify_extremal(&empty(4), 4, 4), Err(Error::Parameter(_))));
    }

    #[test]
    fn tags_round_trip_names() {
        for t in FamilyTag::ALL {
            assert_eq!(FamilyTag::parse(t.name()), Some(t));
        }
        assert_eq!(FamilyTag::parse("nope"), None);
    }
}
