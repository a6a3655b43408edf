//! Tagged Grover circuits with an MCZ phase oracle, on either superposition axis.
//!
//! Layout per iteration, in time order:
//!
//! ```text
//! oracle:    X on marked 0-bits, MCZ(all), X on marked 0-bits      @oraclecore
//! diffusion: former wrapper                                        @difformer
//!            X on all                                              @difx
//!            MCZ(all)                                              @difcore
//!            X on all                                              @difx
//!            latter wrapper                                        @diflatter
//! ```
//!
//! On the X axis every wrapper is `H`. On the Y axis the superposition and the
//! latter wrapper are `SX` and the former wrapper is `SXDG`, so the diffusion
//! is `SX · (X MCZ X) · SXDG`, a reflection about `SX^{⊗n}|0…0⟩`.

use std::f64::consts::FRAC_PI_4;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::circuit::{Circuit, Instruction};
use crate::gate::{GateKind, LayerTag};
use crate::sim::{bitstring, parse_bitstring, Distribution};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GroverError {
    #[error("Grover circuits need at least 2 qubits, got {0}")]
    TooFewQubits(usize),
    #[error("marked bitstring {marked:?} does not have {n} binary digits")]
    BadMarkedLength { marked: String, n: usize },
    #[error("at least one iteration is required")]
    NoIterations,
    #[error("the closed form covers exactly one marked state")]
    MultipleMarked,
    #[error("{0} qubits is beyond what can be simulated")]
    TooManyQubits(usize),
}

/// Bloch-sphere axis the superposition states lie on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Axis {
    /// `H` wrappers, states `|±⟩`.
    X,
    /// `SX`/`SXDG` wrappers, states `|±i⟩`.
    Y,
}

impl std::str::FromStr for Axis {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "x" | "X" => Ok(Axis::X),
            "y" | "Y" => Ok(Axis::Y),
            other => Err(format!("unknown axis {other:?}, expected x or y")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroverSpec {
    pub n: usize,
    /// Marked outcome, most significant qubit first.
    pub marked: String,
    pub iterations: usize,
    pub axis: Axis,
    pub include_measure: bool,
}

impl GroverSpec {
    pub fn new(n: usize, marked: impl Into<String>, iterations: usize, axis: Axis) -> Self {
        Self {
            n,
            marked: marked.into(),
            iterations,
            axis,
            include_measure: false,
        }
    }

    pub fn validate(&self) -> Result<(), GroverError> {
        if self.n < 2 {
            return Err(GroverError::TooFewQubits(self.n));
        }
        if self.n > crate::sim::MAX_RUN_QUBITS {
            return Err(GroverError::TooManyQubits(self.n));
        }
        if self.marked.len() != self.n || parse_bitstring(&self.marked).is_none() {
            return Err(GroverError::BadMarkedLength {
                marked: self.marked.clone(),
                n: self.n,
            });
        }
        if self.iterations == 0 {
            return Err(GroverError::NoIterations);
        }
        Ok(())
    }

    fn marked_index(&self) -> usize {
        parse_bitstring(&self.marked).expect("validated")
    }
}

/// `floor(π/4 · 2^{n/2})`, the usual single-solution iteration count.
pub fn optimal_iterations(n: usize) -> usize {
    ((FRAC_PI_4 * 2f64.powf(n as f64 / 2.0)).floor() as usize).max(1)
}

fn layer(n: usize, kind: GateKind, tag: LayerTag) -> impl Iterator<Item = Instruction> {
    (0..n).map(move |q| Instruction::single(kind, q, tag))
}

fn all_qubits(n: usize) -> Vec<usize> {
    (0..n).collect()
}

/// The superposition layer alone.
pub fn superposition(n: usize, axis: Axis) -> Vec<Instruction> {
    let kind = match axis {
        Axis::X => GateKind::H,
        Axis::Y => GateKind::Sx,
    };
    layer(n, kind, LayerTag::Superposition).collect()
}

/// Phase oracle flipping the sign of `marked` (a basis index).
pub fn phase_oracle(n: usize, marked: usize) -> Vec<Instruction> {
    let zeros: Vec<usize> = (0..n).filter(|q| (marked >> q) & 1 == 0).collect();
    let wrap = || {
        zeros
            .iter()
            .map(|&q| Instruction::single(GateKind::X, q, LayerTag::OracleCore))
    };
    let mut ops: Vec<Instruction> = wrap().collect();
    ops.push(Instruction::tagged(
        GateKind::Mcz(n),
        all_qubits(n),
        LayerTag::OracleCore,
    ));
    ops.extend(wrap());
    ops
}

/// One diffusion operator on the chosen axis.
pub fn diffusion(n: usize, axis: Axis) -> Vec<Instruction> {
    let (former, latter) = match axis {
        Axis::X => (GateKind::H, GateKind::H),
        Axis::Y => (GateKind::Sxdg, GateKind::Sx),
    };
    let mut ops: Vec<Instruction> = layer(n, former, LayerTag::DiffusionFormer).collect();
    ops.extend(layer(n, GateKind::X, LayerTag::DiffusionX));
    ops.push(Instruction::tagged(
        GateKind::Mcz(n),
        all_qubits(n),
        LayerTag::DiffusionCore,
    ));
    ops.extend(layer(n, GateKind::X, LayerTag::DiffusionX));
    ops.extend(layer(n, latter, LayerTag::DiffusionLatter));
    ops
}

pub fn build_grover(spec: &GroverSpec) -> Result<Circuit, GroverError> {
    spec.validate()?;
    let n = spec.n;
    let mut ops = superposition(n, spec.axis);
    for _ in 0..spec.iterations {
        ops.extend(phase_oracle(n, spec.marked_index()));
        ops.extend(diffusion(n, spec.axis));
    }
    let mut circuit = Circuit::from_ops(n, ops).expect("builder emits valid instructions");
    circuit.measure_all = spec.include_measure;
    Ok(circuit)
}

/// Closed-form single-solution output distribution.
///
/// `P(marked) = sin²((2k+1)θ)` with `θ = arcsin(2^{-n/2})`; the remainder is
/// shared equally by the other `2^n - 1` outcomes.
pub fn reference_distribution(spec: &GroverSpec) -> Result<Distribution, GroverError> {
    spec.validate()?;
    let n = spec.n;
    let theta = (2f64.powf(-(n as f64) / 2.0)).asin();
    let hit = ((2 * spec.iterations + 1) as f64 * theta).sin().powi(2);
    let dim = 1usize << n;
    let rest = (1.0 - hit) / (dim - 1) as f64;
    let marked = spec.marked_index();
    Ok(Distribution::new(
        n,
        (0..dim).map(|i| (bitstring(i, n), if i == marked { hit } else { rest })),
    ))
}

/// Like [`reference_distribution`] but for an explicit list of marked outcomes.
/// Only the single-solution case is supported.
pub fn reference_distribution_for(
    n: usize,
    marked: &[&str],
    iterations: usize,
) -> Result<Distribution, GroverError> {
    match marked {
        [one] => reference_distribution(&GroverSpec::new(n, *one, iterations, Axis::X)),
        _ => Err(GroverError::MultipleMarked),
    }
}
