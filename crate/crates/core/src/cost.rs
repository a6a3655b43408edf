//! Native-gate counts, wrapper counts and depth.
//!
//! "Wrapper" gates are every native gate outside the core layers
//! ([`LayerTag::OracleCore`], [`LayerTag::DiffusionCore`]), i.e. the
//! superposition layer plus the diffusion operator with its MCZ excluded.

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::circuit::Circuit;
use crate::gate::LayerTag;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CostError {
    #[error("baseline has no wrapper gates, reduction is undefined")]
    ZeroBaseline,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CostReport {
    pub n: usize,
    pub total: usize,
    pub depth: usize,
    pub native_total: usize,
    pub non_native_total: usize,
    pub wrapper_native_total: usize,
    /// Instruction count per mnemonic.
    pub per_kind: BTreeMap<String, usize>,
    /// Native-gate count per layer tag; untagged instructions appear under `untagged`.
    pub per_tag_native: BTreeMap<String, usize>,
}

impl CostReport {
    pub fn tag_native(&self, tag: LayerTag) -> usize {
        self.per_tag_native.get(tag_key(tag)).copied().unwrap_or(0)
    }

    /// Native gates in the diffusion operator, MCZ excluded.
    pub fn diffusion_wrapper_native(&self) -> usize {
        self.tag_native(LayerTag::DiffusionFormer)
            + self.tag_native(LayerTag::DiffusionX)
            + self.tag_native(LayerTag::DiffusionLatter)
    }
}

fn tag_key(tag: LayerTag) -> &'static str {
    tag.label().unwrap_or("untagged")
}

pub fn report(circuit: &Circuit) -> CostReport {
    let mut per_kind: BTreeMap<String, usize> = BTreeMap::new();
    let mut per_tag_native: BTreeMap<String, usize> = BTreeMap::new();
    let mut native_total = 0;
    let mut wrapper_native_total = 0;
    for op in circuit.ops() {
        *per_kind.entry(op.kind.mnemonic().to_string()).or_default() += 1;
        if op.kind.is_native() {
            native_total += 1;
            *per_tag_native
                .entry(tag_key(op.tag).to_string())
                .or_default() += 1;
            if !op.tag.is_core() {
                wrapper_native_total += 1;
            }
        }
    }
    CostReport {
        n: circuit.num_qubits(),
        total: circuit.len(),
        depth: circuit.depth(),
        native_total,
        non_native_total: circuit.len() - native_total,
        wrapper_native_total,
        per_kind,
        per_tag_native,
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ComparisonReport {
    pub baseline: CostReport,
    pub candidate: CostReport,
    /// `100 · (1 − candidate.wrapper / baseline.wrapper)`.
    pub wrapper_reduction_percent: f64,
}

pub fn compare(baseline: &Circuit, candidate: &Circuit) -> Result<ComparisonReport, CostError> {
    let baseline = report(baseline);
    let candidate = report(candidate);
    if baseline.wrapper_native_total == 0 {
        return Err(CostError::ZeroBaseline);
    }
    let ratio = candidate.wrapper_native_total as f64 / baseline.wrapper_native_total as f64;
    Ok(ComparisonReport {
        wrapper_reduction_percent: 100.0 * (1.0 - ratio),
        baseline,
        candidate,
    })
}
