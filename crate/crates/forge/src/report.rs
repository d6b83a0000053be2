//! Machine-readable report schema and its plain-text rendering.
//!
//! Key order is fixed by struct field order; the only field that varies
//! between identical runs is `timing_ms`.

use std::fmt::Write;

use serde::Serialize;

use reduct_core::reduct::{ReductResult, TraceStep, Verdict};
use reduct_core::significance::SignificanceTable;
use reduct_core::topology::MatrixRun;
use reduct_core::{Decision, Group, InformationSystem, ObjectSet, Partition, Rational, SetFamily};

const DECIMAL_PLACES: usize = 6;

#[derive(Debug, Clone, Serialize)]
pub struct RationalJson {
    pub num: u64,
    pub den: u64,
    pub decimal: String,
}

impl From<Rational> for RationalJson {
    fn from(r: Rational) -> Self {
        RationalJson {
            num: r.numer(),
            den: r.denom(),
            decimal: r.to_decimal(DECIMAL_PLACES),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: String,
    pub args: ArgsEcho,
    pub dataset: DatasetSummary,
    pub payload: Payload,
    pub timing_ms: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct ArgsEcho {
    pub input: String,
    pub decision: String,
    pub group: String,
    pub attrs: Option<Vec<String>>,
    pub header: bool,
    pub exhaustive: bool,
    pub trace: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct DatasetSummary {
    pub source: String,
    pub objects: usize,
    pub conditional_attributes: usize,
    pub attributes: Vec<String>,
    pub object_ids: Vec<String>,
    pub decision: String,
}

impl DatasetSummary {
    pub fn new(source: &str, is: &InformationSystem) -> Self {
        DatasetSummary {
            source: source.to_owned(),
            objects: is.num_objects(),
            conditional_attributes: is.num_conditional(),
            attributes: is
                .conditional_attributes()
                .iter()
                .map(|s| s.to_string())
                .collect(),
            object_ids: is.object_ids().to_vec(),
            decision: decision_label(is.decision()),
        }
    }
}

pub fn decision_label(d: &Decision) -> String {
    match d {
        Decision::Identity => "identity".to_owned(),
        Decision::Attribute(name) => name.clone(),
    }
}

#[derive(Debug, Clone, Serialize)]
#[serde(untagged)]
pub enum Payload {
    Significance(SignificancePayload),
    Reduct(ReductPayload),
    Partition(PartitionPayload),
    Base(BasePayload),
}

fn group_label(g: Group) -> &'static str {
    match g {
        Group::Low => "low",
        Group::High => "high",
    }
}

fn sets(members: &[ObjectSet]) -> Vec<Vec<usize>> {
    members.iter().map(ObjectSet::to_vec).collect()
}

fn family_json(f: &SetFamily) -> Vec<Vec<usize>> {
    sets(f.members())
}

fn partition_json(p: &Partition) -> Vec<Vec<usize>> {
    sets(&p.blocks())
}

#[derive(Debug, Clone, Serialize)]
pub struct RankedRow {
    pub rank: usize,
    pub attribute: String,
    pub significance: RationalJson,
    pub group: &'static str,
}

#[derive(Debug, Clone, Serialize)]
pub struct SignificancePayload {
    pub ranked: Vec<RankedRow>,
    pub low: Vec<String>,
    pub high: Vec<String>,
}

impl From<&SignificanceTable> for SignificancePayload {
    fn from(t: &SignificanceTable) -> Self {
        let names = |g| t.group_members(g).map(|r| r.name.clone()).collect();
        SignificancePayload {
            ranked: t
                .ranked()
                .iter()
                .enumerate()
                .map(|(i, r)| RankedRow {
                    rank: i + 1,
                    attribute: r.name.clone(),
                    significance: r.significance.into(),
                    group: group_label(r.group),
                })
                .collect(),
            low: names(Group::Low),
            high: names(Group::High),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct TraceRow {
    pub attribute: String,
    pub significance: RationalJson,
    pub group: &'static str,
    pub verdict: &'static str,
    pub base_before: usize,
    pub base_after: usize,
}

impl From<&TraceStep> for TraceRow {
    fn from(s: &TraceStep) -> Self {
        TraceRow {
            attribute: s.attribute.clone(),
            significance: s.significance.into(),
            group: group_label(s.group),
            verdict: match s.verdict {
                Verdict::Redundant => "redundant",
                Verdict::Kept => "kept",
            },
            base_before: s.base_before,
            base_after: s.base_after,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ReductPayload {
    pub reduct: Vec<String>,
    pub removed: Vec<String>,
    pub verified_minimal: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trace: Option<Vec<TraceRow>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub all_reducts: Option<Vec<Vec<String>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub core: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub heuristic_is_minimal: Option<bool>,
}

impl ReductPayload {
    pub fn new(r: &ReductResult, with_trace: bool) -> Self {
        ReductPayload {
            reduct: r.reduct.clone(),
            removed: r.removed.clone(),
            verified_minimal: r.verified_minimal,
            trace: with_trace.then(|| r.trace.iter().map(TraceRow::from).collect()),
            all_reducts: None,
            core: None,
            heuristic_is_minimal: None,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct AttributeBlocks {
    pub attribute: String,
    pub blocks: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct PartitionPayload {
    pub attributes: Vec<String>,
    pub blocks: Vec<Vec<usize>>,
    pub per_attribute: Vec<AttributeBlocks>,
}

impl PartitionPayload {
    pub fn new(attrs: &[String], joint: &Partition, singles: &[(String, Partition)]) -> Self {
        PartitionPayload {
            attributes: attrs.to_vec(),
            blocks: partition_json(joint),
            per_attribute: singles
                .iter()
                .map(|(a, p)| AttributeBlocks {
                    attribute: a.clone(),
                    blocks: partition_json(p),
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct MatrixJson {
    pub iteration_sizes: Vec<usize>,
    pub final_iteration: Vec<Vec<usize>>,
    pub recovered: Vec<usize>,
    pub base: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct BasePayload {
    pub attributes: Vec<String>,
    pub subbase: Vec<Vec<usize>>,
    pub minimal_neighborhoods: Vec<Vec<usize>>,
    pub matrix: MatrixJson,
    pub methods_agree: bool,
}

impl BasePayload {
    pub fn new(attrs: &[String], subbase: &SetFamily, direct: &SetFamily, run: &MatrixRun) -> Self {
        BasePayload {
            attributes: attrs.to_vec(),
            subbase: family_json(subbase),
            minimal_neighborhoods: family_json(direct),
            matrix: MatrixJson {
                iteration_sizes: run.iterations.iter().map(SetFamily::len).collect(),
                final_iteration: run.iterations.last().map(family_json).unwrap_or_default(),
                recovered: run.recovered.clone(),
                base: family_json(&run.base),
            },
            methods_agree: &run.base == direct,
        }
    }
}

fn braces(items: &[usize]) -> String {
    let inner: Vec<String> = items.iter().map(usize::to_string).collect();
    format!("{{{}}}", inner.join(","))
}

fn family_line(f: &[Vec<usize>]) -> String {
    f.iter().map(|s| braces(s)).collect::<Vec<_>>().join(" ")
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let d = &self.dataset;
        let mut out = String::new();
        let _ = writeln!(
            out,
            "dataset: {} ({} objects, {} conditional attributes, decision {})",
            d.source, d.objects, d.conditional_attributes, d.decision
        );
        match &self.payload {
            Payload::Significance(p) => {
                let _ = writeln!(
                    out,
                    "{:<5} {:<12} {:<14} group",
                    "rank", "attribute", "significance"
                );
                for r in &p.ranked {
                    let _ = writeln!(
                        out,
                        "{:<5} {:<12} {:<14} {}",
                        r.rank, r.attribute, r.significance.decimal, r.group
                    );
                }
                let _ = writeln!(out, "low group:  {}", p.low.join(", "));
                let _ = writeln!(out, "high group: {}", p.high.join(", "));
            }
            Payload::Reduct(p) => {
                if let Some(trace) = &p.trace {
                    for t in trace {
                        let _ = writeln!(
                            out,
                            "test {:<10} sig {:<10} {:<5} {:<10} base {} -> {}",
                            t.attribute,
                            t.significance.decimal,
                            t.group,
                            t.verdict,
                            t.base_before,
                            t.base_after
                        );
                    }
                }
                let _ = writeln!(out, "reduct: {}", p.reduct.join(", "));
                let _ = writeln!(out, "removed: {}", p.removed.join(", "));
                let _ = writeln!(out, "verified minimal: {}", yes(p.verified_minimal));
                if let Some(all) = &p.all_reducts {
                    let _ = writeln!(out, "all reducts ({}):", all.len());
                    for r in all {
                        let _ = writeln!(out, "  {{{}}}", r.join(","));
                    }
                }
                if let Some(core) = &p.core {
                    let _ = writeln!(out, "core: {}", core.join(", "));
                }
                if let Some(m) = p.heuristic_is_minimal {
                    let _ = writeln!(out, "heuristic reduct among enumerated reducts: {}", yes(m));
                }
            }
            Payload::Partition(p) => {
                for a in &p.per_attribute {
                    let _ = writeln!(out, "U/IND({}) = {}", a.attribute, family_line(&a.blocks));
                }
                let _ = writeln!(
                    out,
                    "U/IND({}) = {}",
                    p.attributes.join(","),
                    family_line(&p.blocks)
                );
            }
            Payload::Base(p) => {
                let _ = writeln!(out, "attributes: {}", p.attributes.join(", "));
                let _ = writeln!(
                    out,
                    "sub-base ({}): {}",
                    p.subbase.len(),
                    family_line(&p.subbase)
                );
                let sizes: Vec<String> = p
                    .matrix
                    .iteration_sizes
                    .iter()
                    .map(usize::to_string)
                    .collect();
                let _ = writeln!(out, "matrix iteration sizes: {}", sizes.join(" "));
                let _ = writeln!(
                    out,
                    "final iteration: {}",
                    family_line(&p.matrix.final_iteration)
                );
                let _ = writeln!(out, "recovered objects: {}", braces(&p.matrix.recovered));
                let _ = writeln!(
                    out,
                    "base ({}): {}",
                    p.matrix.base.len(),
                    family_line(&p.matrix.base)
                );
                let _ = writeln!(
                    out,
                    "matches minimal neighborhoods: {}",
                    yes(p.methods_agree)
                );
            }
        }
        let _ = writeln!(out, "elapsed: {:.3} ms", self.timing_ms);
        out
    }
}
