//! Rewrite passes: H decomposition, superposition-axis substitution, X
//! expansion and adjacent-gate cancellation.
//!
//! # Sequence ordering
//!
//! A native sequence written `{RZ(a) SX RZ(b)}` is read as the matrix product
//! `RZ(a)·SX·RZ(b)`, so `RZ(b)` is applied first. With `RZ(θ) =
//! diag(e^{-iθ/2}, e^{iθ/2})`:
//!
//! * `{RZ(π/2) SX RZ(π/2)} = e^{-iπ/4} H` (symmetric, order-insensitive)
//! * `{RZ(-π/2) SX RZ(π/2)} ∝ Z·H` (superposition alternative)
//! * `{RZ(π/2) SX RZ(-π/2)} ∝ H·Z` (diffusion former)
//!
//! # Equivalence level of [`DecomposeMode::PaperFig1b`]
//!
//! The two asymmetric sequences are not phase-equivalent to `H` on their own.
//! On a single-iteration Grover circuit the stray `Z^{⊗n}` factors meet across
//! the (diagonal) oracle and cancel, so the whole circuit is equal to the
//! undecomposed one up to a global phase, and the output distribution is
//! preserved exactly. With two or more iterations the `Z^{⊗n}` introduced by
//! each later former layer is not cancelled and the distribution changes; use
//! [`DecomposeMode::SafeSymmetric`] there. The other reading of the ordering
//! breaks even the single-iteration case.

use std::f64::consts::FRAC_PI_2;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::circuit::{Circuit, Instruction};
use crate::gate::{canonical_angle, GateKind, LayerTag};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PassError {
    #[error("instruction {index} is an untagged H; axis substitution needs builder tags")]
    UntaggedH { index: usize },
    #[error("instruction {index} is an H tagged {tag:?}, which has no axis substitution")]
    UnexpectedH { index: usize, tag: LayerTag },
    #[error("unknown pass {0:?}")]
    UnknownPass(String),
}

/// Replacement policy for `H` in [`decompose_h`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DecomposeMode {
    /// Every H becomes `{RZ(π/2) SX RZ(π/2)}`. Unitary preserved up to `e^{-iπ/4}` per H.
    #[default]
    SafeSymmetric,
    /// Tag-directed sequences: the alternative sequence on superposition H,
    /// the asymmetric sequence on diffusion-former H, symmetric elsewhere.
    PaperFig1b,
}

/// Native sequences in time order.
fn symmetric() -> [GateKind; 3] {
    [
        GateKind::Rz(FRAC_PI_2),
        GateKind::Sx,
        GateKind::Rz(FRAC_PI_2),
    ]
}

/// `{RZ(-π/2) SX RZ(π/2)}`.
fn superposition_alternative() -> [GateKind; 3] {
    [
        GateKind::Rz(FRAC_PI_2),
        GateKind::Sx,
        GateKind::Rz(-FRAC_PI_2),
    ]
}

/// `{RZ(π/2) SX RZ(-π/2)}`.
fn diffusion_former() -> [GateKind; 3] {
    [
        GateKind::Rz(-FRAC_PI_2),
        GateKind::Sx,
        GateKind::Rz(FRAC_PI_2),
    ]
}

fn h_sequence(mode: DecomposeMode, tag: LayerTag) -> [GateKind; 3] {
    match (mode, tag) {
        (DecomposeMode::SafeSymmetric, _) => symmetric(),
        (DecomposeMode::PaperFig1b, LayerTag::Superposition) => superposition_alternative(),
        (DecomposeMode::PaperFig1b, LayerTag::DiffusionFormer) => diffusion_former(),
        (DecomposeMode::PaperFig1b, _) => symmetric(),
    }
}

/// Replaces every H with a three-gate native sequence on the same qubit and tag.
pub fn decompose_h(circuit: &Circuit, mode: DecomposeMode) -> Circuit {
    let mut ops = Vec::with_capacity(circuit.len() + 2 * circuit.count_kind(|k| *k == GateKind::H));
    for op in circuit.ops() {
        if op.kind == GateKind::H {
            let q = op.target();
            ops.extend(
                h_sequence(mode, op.tag)
                    .into_iter()
                    .map(|k| Instruction::single(k, q, op.tag)),
            );
        } else {
            ops.push(op.clone());
        }
    }
    circuit.with_ops(ops)
}

/// Moves superposition from the X axis to the Y axis.
///
/// Superposition and latter-diffusion H become SX, former-diffusion H become
/// SXDG. H inside the oracle or diffusion core is phase-inversion scaffolding
/// and is left alone.
pub fn substitute_axis(circuit: &Circuit) -> Result<Circuit, PassError> {
    let mut ops = Vec::with_capacity(circuit.len());
    for (index, op) in circuit.ops().iter().enumerate() {
        if op.kind != GateKind::H {
            ops.push(op.clone());
            continue;
        }
        let kind = match op.tag {
            LayerTag::Superposition | LayerTag::DiffusionLatter => GateKind::Sx,
            LayerTag::DiffusionFormer => GateKind::Sxdg,
            LayerTag::OracleCore | LayerTag::DiffusionCore => GateKind::H,
            LayerTag::Untagged => return Err(PassError::UntaggedH { index }),
            tag @ LayerTag::DiffusionX => return Err(PassError::UnexpectedH { index, tag }),
        };
        ops.push(Instruction::tagged(kind, op.qubits.clone(), op.tag));
    }
    Ok(circuit.with_ops(ops))
}

/// Replaces every X with `SX SX`. Exact, no phase.
pub fn expand_x(circuit: &Circuit) -> Circuit {
    let mut ops = Vec::with_capacity(circuit.len() + circuit.count_kind(|k| *k == GateKind::X));
    for op in circuit.ops() {
        if op.kind == GateKind::X {
            let sx = Instruction::tagged(GateKind::Sx, op.qubits.clone(), op.tag);
            ops.push(sx.clone());
            ops.push(sx);
        } else {
            ops.push(op.clone());
        }
    }
    circuit.with_ops(ops)
}

enum Fold {
    /// Both gates vanish.
    Annihilate,
    /// Both gates merge into the given kind.
    Merge(GateKind),
    Keep,
}

fn fold_pair(earlier: GateKind, later: GateKind) -> Fold {
    use GateKind::*;
    match (earlier, later) {
        (Sx, Sxdg) | (Sxdg, Sx) | (X, X) | (H, H) => Fold::Annihilate,
        (Rz(a), Rz(b)) => {
            let sum = canonical_angle(a + b);
            if sum == 0.0 {
                Fold::Annihilate
            } else {
                Fold::Merge(Rz(sum))
            }
        }
        _ => Fold::Keep,
    }
}

/// One left-to-right sweep with a per-qubit stack of surviving instructions.
/// Returns the survivors and whether anything changed.
fn cancel_sweep(circuit: &Circuit) -> (Vec<Instruction>, bool) {
    let mut slots: Vec<Option<Instruction>> = Vec::with_capacity(circuit.len());
    let mut stacks: Vec<Vec<usize>> = vec![Vec::new(); circuit.num_qubits()];
    let mut changed = false;

    for op in circuit.ops() {
        if op.kind == GateKind::I {
            changed = true;
            continue;
        }
        if op.kind.is_single_qubit() {
            let q = op.target();
            let prev = stacks[q]
                .last()
                .copied()
                .filter(|&i| slots[i].as_ref().is_some_and(|p| p.kind.is_single_qubit()));
            if let Some(i) = prev {
                let earlier = slots[i].as_ref().expect("live slot").kind;
                match fold_pair(earlier, op.kind) {
                    Fold::Annihilate => {
                        slots[i] = None;
                        stacks[q].pop();
                        changed = true;
                        continue;
                    }
                    Fold::Merge(kind) => {
                        slots[i].as_mut().expect("live slot").kind = kind;
                        changed = true;
                        continue;
                    }
                    Fold::Keep => {}
                }
            }
        }
        let idx = slots.len();
        for &q in &op.qubits {
            stacks[q].push(idx);
        }
        slots.push(Some(op.clone()));
    }
    (slots.into_iter().flatten().collect(), changed)
}

/// Adjacent-gate cancellation to a fixpoint.
///
/// Two single-qubit gates are adjacent when no instruction between them touches
/// their qubit. Rules: `SX·SXDG`, `SXDG·SX`, `X·X` and `H·H` vanish; `RZ(a)·RZ(b)`
/// merges to `RZ(a+b)` reduced into `(-π, π]` and disappears when that is 0;
/// `I` is dropped. The reduction of a merged angle can flip the sign of the
/// operator, so the unitary is preserved up to a global phase of ±1.
pub fn cancel(circuit: &Circuit) -> Circuit {
    let mut current = circuit.clone();
    loop {
        let (ops, changed) = cancel_sweep(&current);
        current = current.with_ops(ops);
        if !changed {
            return current;
        }
    }
}

/// Rewrites every MCZ as `H(target) · MCX · H(target)` with the last operand as
/// target. The H pair carries the MCZ's tag, so it stays in the core layers.
pub fn realize_mcz(circuit: &Circuit) -> Circuit {
    let mut ops = Vec::with_capacity(circuit.len());
    for op in circuit.ops() {
        if let GateKind::Mcz(k) = op.kind {
            let target = op.target();
            let h = Instruction::single(GateKind::H, target, op.tag);
            ops.push(h.clone());
            ops.push(Instruction::tagged(
                GateKind::Mcx(k),
                op.qubits.clone(),
                op.tag,
            ));
            ops.push(h);
        } else {
            ops.push(op.clone());
        }
    }
    circuit.with_ops(ops)
}

/// Named passes usable from [`pipeline`] and the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pass {
    DecomposeHSafe,
    DecomposeHPaper,
    SubstituteAxis,
    ExpandX,
    Cancel,
}

impl Pass {
    pub const ALL: [Pass; 5] = [
        Pass::DecomposeHSafe,
        Pass::DecomposeHPaper,
        Pass::SubstituteAxis,
        Pass::ExpandX,
        Pass::Cancel,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Pass::DecomposeHSafe => "decompose-h-safe",
            Pass::DecomposeHPaper => "decompose-h-paper",
            Pass::SubstituteAxis => "substitute-axis",
            Pass::ExpandX => "expand-x",
            Pass::Cancel => "cancel",
        }
    }

    pub fn apply(self, circuit: &Circuit) -> Result<Circuit, PassError> {
        Ok(match self {
            Pass::DecomposeHSafe => decompose_h(circuit, DecomposeMode::SafeSymmetric),
            Pass::DecomposeHPaper => decompose_h(circuit, DecomposeMode::PaperFig1b),
            Pass::SubstituteAxis => substitute_axis(circuit)?,
            Pass::ExpandX => expand_x(circuit),
            Pass::Cancel => cancel(circuit),
        })
    }
}

impl fmt::Display for Pass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Pass {
    type Err = PassError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Pass::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| PassError::UnknownPass(s.to_string()))
    }
}

/// Parses a comma-separated pass list such as `"substitute-axis,expand-x,cancel"`.
pub fn parse_pass_list(list: &str) -> Result<Vec<Pass>, PassError> {
    list.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(str::parse)
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PassLogEntry {
    pub pass: Pass,
    pub before: usize,
    pub after: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PassLog {
    pub entries: Vec<PassLogEntry>,
}

impl fmt::Display for PassLog {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.entries {
            writeln!(f, "{}: {} -> {}", e.pass, e.before, e.after)?;
        }
        Ok(())
    }
}

/// Applies `passes` in order, recording instruction counts around each.
pub fn pipeline(circuit: &Circuit, passes: &[Pass]) -> Result<(Circuit, PassLog), PassError> {
    let mut current = circuit.clone();
    let mut log = PassLog::default();
    for &pass in passes {
        let before = current.len();
        current = pass.apply(&current)?;
        log.entries.push(PassLogEntry {
            pass,
            before,
            after: current.len(),
        });
    }
    Ok((current, log))
}
