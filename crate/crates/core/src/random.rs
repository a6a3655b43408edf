//! Random circuit generation for property tests and benchmarks.

use std::f64::consts::PI;

use rand::Rng;

use crate::circuit::{Circuit, Instruction};
use crate::gate::{GateKind, LayerTag};

/// Circuit over `{H, X, SX, SXDG, RZ(θ), CX, Z}` with `len` instructions.
///
/// `n = 1` falls back to single-qubit kinds only.
pub fn random_circuit<R: Rng + ?Sized>(rng: &mut R, n: usize, len: usize) -> Circuit {
    let mut ops = Vec::with_capacity(len);
    for _ in 0..len {
        let pick = if n >= 2 {
            rng.random_range(0..7)
        } else {
            rng.random_range(0..6)
        };
        let q = rng.random_range(0..n);
        let op = match pick {
            0 => Instruction::new(GateKind::H, vec![q]),
            1 => Instruction::new(GateKind::X, vec![q]),
            2 => Instruction::new(GateKind::Sx, vec![q]),
            3 => Instruction::new(GateKind::Sxdg, vec![q]),
            4 => Instruction::new(GateKind::Rz(rng.random_range(-PI..PI)), vec![q]),
            5 => Instruction::new(GateKind::Z, vec![q]),
            _ => Instruction::new(GateKind::Cx, distinct(rng, n, 2)),
        };
        ops.push(op);
    }
    Circuit::from_ops(n, ops).expect("generated instructions are valid")
}

/// Like [`random_circuit`] but drawing from the whole vocabulary, with random
/// tags and a random measurement flag. `n` must be at least 3.
///
/// `angle` produces RZ angles from the generator.
pub fn random_full_circuit<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    len: usize,
    mut angle: impl FnMut(&mut R) -> f64,
) -> Circuit {
    assert!(n >= 3, "full-vocabulary circuits need 3 qubits for mcx");
    let mut ops = Vec::with_capacity(len);
    for _ in 0..len {
        let tag = LayerTag::ALL[rng.random_range(0..LayerTag::ALL.len())];
        let (kind, qubits) = match rng.random_range(0..10) {
            0 => (GateKind::I, distinct(rng, n, 1)),
            1 => (GateKind::X, distinct(rng, n, 1)),
            2 => (GateKind::Sx, distinct(rng, n, 1)),
            3 => (GateKind::Sxdg, distinct(rng, n, 1)),
            4 => (GateKind::Rz(angle(rng)), distinct(rng, n, 1)),
            5 => (GateKind::H, distinct(rng, n, 1)),
            6 => (GateKind::Z, distinct(rng, n, 1)),
            7 => (GateKind::Cx, distinct(rng, n, 2)),
            8 => {
                let k = rng.random_range(2..=n);
                (GateKind::Mcz(k), distinct(rng, n, k))
            }
            _ => {
                let k = rng.random_range(3..=n);
                (GateKind::Mcx(k), distinct(rng, n, k))
            }
        };
        ops.push(Instruction::tagged(kind, qubits, tag));
    }
    let mut c = Circuit::from_ops(n, ops).expect("generated instructions are valid");
    c.measure_all = rng.random_bool(0.5);
    c
}

/// `k` distinct qubit indices below `n`, in random order.
fn distinct<R: Rng + ?Sized>(rng: &mut R, n: usize, k: usize) -> Vec<usize> {
    let mut pool: Vec<usize> = (0..n).collect();
    for i in 0..k {
        let j = rng.random_range(i..n);
        pool.swap(i, j);
    }
    pool.truncate(k);
    pool
}
