//! JSON report written by every subcommand.
//!
//! Vertex ids in reports are external ids: the labels of the input file,
//! or `0..n` for generated graphs.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use nearmis_core::bounds::BoundsReport;
use nearmis_core::extremal::{CompletenessSummary, ExtremalAnalysis};
use nearmis_core::kernel::KernelResult;
use nearmis_core::pipeline::{Answer, Certificate, Decision, Step};

use crate::format::LabeledGraph;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub command: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub input: Option<InputInfo>,
    pub parameters: Parameters,
    pub result: Payload,
    pub wall_time_ms: f64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputInfo {
    pub path: String,
    pub format: String,
    pub n: usize,
    pub m: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Parameters {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cap: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub node_limit: Option<u64>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub with_p2: bool,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub skip_bound_steps: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Payload {
    Bounds(BoundsPayload),
    Kernel(KernelPayload),
    Decision(DecisionPayload),
    Oracle(OraclePayload),
    Generated(GeneratedPayload),
    Extremal(ExtremalPayload),
    Enumeration(EnumerationPayload),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsPayload {
    pub p: usize,
    pub p1: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p2: Option<usize>,
    pub wp_complement: usize,
}

impl From<&BoundsReport> for BoundsPayload {
    fn from(b: &BoundsReport) -> Self {
        BoundsPayload {
            p: b.p,
            p1: b.p1,
            p2: b.p2,
            wp_complement: b.wp_complement,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KernelPayload {
    pub p: usize,
    pub k: usize,
    pub threshold: usize,
    pub n0: usize,
    pub kernel_m: usize,
    pub size_bound: usize,
    pub budget_t: i64,
    pub trivially_yes: bool,
    pub removed: Vec<u64>,
    pub kernel_vertices: Vec<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub emitted: Option<String>,
}

impl KernelPayload {
    pub fn new(kr: &KernelResult, input: &LabeledGraph) -> Self {
        KernelPayload {
            p: kr.p,
            k: kr.k,
            threshold: kr.threshold(),
            n0: kr.n0,
            kernel_m: kr.kernel.m(),
            size_bound: kr.p + 2 * kr.k + 1,
            budget_t: kr.budget_t,
            trivially_yes: kr.trivially_yes,
            removed: input.external(&kr.removed),
            kernel_vertices: input.external(&kr.mapping),
            emitted: None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum AnswerName {
    #[serde(rename = "YES")]
    Yes,
    #[serde(rename = "NO")]
    No,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum StepName {
    P1Bound,
    P2Bound,
    KernelTrivial,
    VcSearch,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum CertificatePayload {
    P1Bound { p1: usize },
    P2Bound { p2: usize },
    KernelTooSmall { n0: usize },
    SearchExhausted { budget: i64, nodes_explored: u64 },
    IndependentSet { vertices: Vec<u64> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecisionPayload {
    pub k: usize,
    pub p: usize,
    /// `p − k`.
    pub threshold: usize,
    pub answer: AnswerName,
    pub resolved_at: StepName,
    pub certificate: CertificatePayload,
    pub bounds: BoundsPayload,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kernel: Option<KernelPayload>,
}

impl DecisionPayload {
    pub fn new(d: &Decision, input: &LabeledGraph) -> Self {
        let certificate = match &d.certificate {
            Certificate::P1 { p1 } => CertificatePayload::P1Bound { p1: *p1 },
            Certificate::P2 { p2 } => CertificatePayload::P2Bound { p2: *p2 },
            Certificate::KernelTooSmall { n0 } => CertificatePayload::KernelTooSmall { n0: *n0 },
            Certificate::SearchExhausted {
                budget,
                nodes_explored,
            } => CertificatePayload::SearchExhausted {
                budget: *budget,
                nodes_explored: *nodes_explored,
            },
            Certificate::IndependentSet(set) => CertificatePayload::IndependentSet {
                vertices: input.external(set),
            },
        };
        DecisionPayload {
            k: d.k,
            p: d.bounds.p,
            threshold: d.threshold(),
            answer: match d.answer {
                Answer::Yes => AnswerName::Yes,
                Answer::No => AnswerName::No,
            },
            resolved_at: match d.resolved_at {
                Step::P1Bound => StepName::P1Bound,
                Step::P2Bound => StepName::P2Bound,
                Step::KernelTrivial => StepName::KernelTrivial,
                Step::VcSearch => StepName::VcSearch,
            },
            certificate,
            bounds: (&d.bounds).into(),
            kernel: d.kernel.as_ref().map(|kr| KernelPayload::new(kr, input)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExactValue {
    pub value: usize,
    pub witness: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OraclePayload {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<ExactValue>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub min_vc: Option<ExactValue>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratedPayload {
    pub family: String,
    pub n: usize,
    pub m: usize,
    pub out: String,
    pub format: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtremalPayload {
    pub p: usize,
    pub k: usize,
    pub family_tag: String,
    pub r: usize,
    pub r_range: [usize; 2],
    pub e_star: u64,
    pub e_star_budget: u64,
    pub handshake_lower: u64,
    pub handshake_applies: bool,
    pub i_set: Vec<u64>,
    pub r_set: Vec<u64>,
}

impl ExtremalPayload {
    pub fn new(a: &ExtremalAnalysis, r_range: [usize; 2], input: &LabeledGraph) -> Self {
        ExtremalPayload {
            p: a.p,
            k: a.k,
            family_tag: a.family_tag.name().to_string(),
            r: a.r,
            r_range,
            e_star: a.e_star,
            e_star_budget: a.e_star_budget,
            handshake_lower: a.handshake_lower,
            handshake_applies: a.handshake_applies,
            i_set: input.external(&a.i_set),
            r_set: input.external(&a.r_set),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationEntry {
    pub p: usize,
    pub max_n: usize,
    pub graphs_checked: u64,
    pub admissible: u64,
    pub by_tag: BTreeMap<String, u64>,
    pub unmatched: u64,
}

impl From<&CompletenessSummary> for EnumerationEntry {
    fn from(s: &CompletenessSummary) -> Self {
        EnumerationEntry {
            p: s.p,
            max_n: s.max_n,
            graphs_checked: s.graphs_checked,
            admissible: s.admissible,
            by_tag: s
                .by_tag
                .iter()
                .map(|(t, c)| (t.name().to_string(), *c))
                .collect(),
            unmatched: s.unmatched.len() as u64,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationPayload {
    pub k: usize,
    pub entries: Vec<EnumerationEntry>,
}

/// Body written to standard error when a command fails.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorReport {
    pub error: ErrorBody,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorBody {
    pub kind: String,
    pub message: String,
}
