//! Dense statevector simulation and the checks built on it.
//!
//! [`run`] applies gates by in-place index arithmetic over amplitude pairs.
//! [`unitary`] is the slow reference path: it embeds every instruction as a
//! sparse full-register operator and multiplies, without sharing any
//! application code with [`run`].
//!
//! Basis index bit `i` is qubit `i`. Outcome strings are printed most
//! significant qubit first, so `q0` is the rightmost character.

use std::collections::BTreeMap;
use std::fmt;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::circuit::Circuit;
use crate::gate::{gate_action, GateAction, GateKind, Mat2};

/// Largest register [`run`] will allocate.
pub const MAX_RUN_QUBITS: usize = 20;
/// Largest register [`unitary`] will expand.
pub const MAX_UNITARY_QUBITS: usize = 10;

const NORM_TOL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SimError {
    #[error("{n} qubits exceeds the cap of {cap}")]
    SizeCapExceeded { n: usize, cap: usize },
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("matrix has no non-zero entry")]
    AllZeroMatrix,
    #[error("distribution is empty")]
    EmptyDistribution,
    #[error("shot count must be at least 1")]
    NoShots,
    #[error("distributions over {0} and {1} qubits cannot be compared")]
    QubitCountMismatch(usize, usize),
    #[error("expected a single-qubit state, got {0} qubits")]
    NotSingleQubit(usize),
    #[error("amplitude vector length {0} is not a power of two")]
    NotPowerOfTwo(usize),
    #[error("state norm {0} is not 1")]
    NotNormalized(f64),
}

/// Formats basis index `index` as an `n`-character outcome string.
pub fn bitstring(index: usize, n: usize) -> String {
    format!("{index:0n$b}")
}

/// Parses an outcome string back into a basis index.
pub fn parse_bitstring(bits: &str) -> Option<usize> {
    if bits.is_empty() || !bits.bytes().all(|b| b == b'0' || b == b'1') {
        return None;
    }
    usize::from_str_radix(bits, 2).ok()
}

/// A normalized pure state over `n` qubits.
#[derive(Debug, Clone, PartialEq)]
pub struct Statevector {
    n: usize,
    amps: Vec<Complex64>,
}

impl Statevector {
    /// `|0…0⟩`.
    pub fn zero(n: usize) -> Result<Self, SimError> {
        Self::basis(n, 0)
    }

    pub fn basis(n: usize, index: usize) -> Result<Self, SimError> {
        if n > MAX_RUN_QUBITS {
            return Err(SimError::SizeCapExceeded {
                n,
                cap: MAX_RUN_QUBITS,
            });
        }
        let dim = 1usize << n;
        if index >= dim {
            return Err(SimError::DimensionMismatch(index, dim));
        }
        let mut amps = vec![Complex64::new(0.0, 0.0); dim];
        amps[index] = Complex64::new(1.0, 0.0);
        Ok(Self { n, amps })
    }

    pub fn from_amplitudes(amps: Vec<Complex64>) -> Result<Self, SimError> {
        let dim = amps.len();
        if dim == 0 || !dim.is_power_of_two() {
            return Err(SimError::NotPowerOfTwo(dim));
        }
        let n = dim.trailing_zeros() as usize;
        if n > MAX_RUN_QUBITS {
            return Err(SimError::SizeCapExceeded {
                n,
                cap: MAX_RUN_QUBITS,
            });
        }
        let norm = amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
        if (norm - 1.0).abs() > NORM_TOL {
            return Err(SimError::NotNormalized(norm));
        }
        Ok(Self { n, amps })
    }

    pub fn num_qubits(&self) -> usize {
        self.n
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn norm(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Multiplies every amplitude by `e^{iφ}`.
    pub fn with_global_phase(&self, phi: f64) -> Self {
        let w = Complex64::from_polar(1.0, phi);
        Self {
            n: self.n,
            amps: self.amps.iter().map(|a| a * w).collect(),
        }
    }

    fn apply_dense(&mut self, m: &Mat2, q: usize) {
        let stride = 1usize << q;
        let dim = self.amps.len();
        let mut base = 0;
        while base < dim {
            for i0 in base..base + stride {
                let i1 = i0 + stride;
                let a0 = self.amps[i0];
                let a1 = self.amps[i1];
                self.amps[i0] = m[0][0] * a0 + m[0][1] * a1;
                self.amps[i1] = m[1][0] * a0 + m[1][1] * a1;
            }
            base += stride << 1;
        }
    }

    fn apply_controlled_flip(&mut self, controls: usize, target: usize) {
        let tbit = 1usize << target;
        for i in 0..self.amps.len() {
            if i & tbit == 0 && i & controls == controls {
                self.amps.swap(i, i | tbit);
            }
        }
    }

    fn apply_phase_flip(&mut self, mask: usize) {
        for (i, a) in self.amps.iter_mut().enumerate() {
            if i & mask == mask {
                *a = -*a;
            }
        }
    }

    fn apply(&mut self, kind: GateKind, qubits: &[usize]) {
        match gate_action(kind) {
            GateAction::Dense(m) => self.apply_dense(&m, qubits[0]),
            GateAction::ControlledNot => self.apply_controlled_flip(1 << qubits[0], qubits[1]),
            GateAction::PhaseFlipAllOnes => {
                self.apply_phase_flip(qubits.iter().fold(0, |m, &q| m | (1 << q)))
            }
            GateAction::FlipTargetAllControls => {
                let (target, controls) = qubits.split_last().expect("operands");
                let mask = controls.iter().fold(0, |m, &q| m | (1 << q));
                self.apply_controlled_flip(mask, *target)
            }
        }
    }
}

/// Runs `circuit` from `|0…0⟩`.
pub fn run(circuit: &Circuit) -> Result<Statevector, SimError> {
    run_from(circuit, Statevector::zero(circuit.num_qubits())?)
}

/// Runs `circuit` from a given initial state.
pub fn run_from(circuit: &Circuit, initial: Statevector) -> Result<Statevector, SimError> {
    if circuit.num_qubits() > MAX_RUN_QUBITS {
        return Err(SimError::SizeCapExceeded {
            n: circuit.num_qubits(),
            cap: MAX_RUN_QUBITS,
        });
    }
    if initial.n != circuit.num_qubits() {
        return Err(SimError::DimensionMismatch(initial.n, circuit.num_qubits()));
    }
    let mut state = initial;
    for op in circuit.ops() {
        state.apply(op.kind, &op.qubits);
    }
    Ok(state)
}

/// Dense square complex matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix {
    dim: usize,
    data: Vec<Complex64>,
}

impl Matrix {
    pub fn identity(dim: usize) -> Self {
        let mut data = vec![Complex64::new(0.0, 0.0); dim * dim];
        for i in 0..dim {
            data[i * dim + i] = Complex64::new(1.0, 0.0);
        }
        Self { dim, data }
    }

    pub fn from_rows(rows: &[Vec<Complex64>]) -> Result<Self, SimError> {
        let dim = rows.len();
        let mut data = Vec::with_capacity(dim * dim);
        for row in rows {
            if row.len() != dim {
                return Err(SimError::DimensionMismatch(row.len(), dim));
            }
            data.extend_from_slice(row);
        }
        Ok(Self { dim, data })
    }

    pub fn from_mat2(m: &Mat2) -> Self {
        Self {
            dim: 2,
            data: m.iter().flatten().copied().collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.data[row * self.dim + col]
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.data
    }

    pub fn scale(&self, s: Complex64) -> Self {
        Self {
            dim: self.dim,
            data: self.data.iter().map(|x| x * s).collect(),
        }
    }

    pub fn adjoint(&self) -> Self {
        let d = self.dim;
        let mut data = vec![Complex64::new(0.0, 0.0); d * d];
        for r in 0..d {
            for c in 0..d {
                data[c * d + r] = self.data[r * d + c].conj();
            }
        }
        Self { dim: d, data }
    }

    /// Plain `O(d³)` product `self · rhs`.
    pub fn mul(&self, rhs: &Matrix) -> Result<Matrix, SimError> {
        if self.dim != rhs.dim {
            return Err(SimError::DimensionMismatch(self.dim, rhs.dim));
        }
        let d = self.dim;
        let mut data = vec![Complex64::new(0.0, 0.0); d * d];
        for r in 0..d {
            for k in 0..d {
                let a = self.data[r * d + k];
                if a == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for c in 0..d {
                    data[r * d + c] += a * rhs.data[k * d + c];
                }
            }
        }
        Ok(Matrix { dim: d, data })
    }

    /// Largest entrywise modulus of `self - rhs`.
    pub fn max_deviation(&self, rhs: &Matrix) -> Result<f64, SimError> {
        if self.dim != rhs.dim {
            return Err(SimError::DimensionMismatch(self.dim, rhs.dim));
        }
        Ok(self
            .data
            .iter()
            .zip(&rhs.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max))
    }
}

/// Non-zero entries `(row, col, value)` of an instruction embedded in the full register.
fn embedded_entries(kind: GateKind, qubits: &[usize], n: usize) -> Vec<(usize, usize, Complex64)> {
    let local = crate::gate::gate_matrix(kind);
    let k = qubits.len();
    let dim = 1usize << n;
    let mask: usize = qubits.iter().fold(0, |m, &q| m | (1 << q));
    let mut out = Vec::new();
    for col in 0..dim {
        let local_col = qubits
            .iter()
            .enumerate()
            .fold(0, |acc, (j, &q)| acc | (((col >> q) & 1) << j));
        for (local_row, row_entries) in local.iter().enumerate().take(1 << k) {
            let v = row_entries[local_col];
            if v == Complex64::new(0.0, 0.0) {
                continue;
            }
            let row = qubits.iter().enumerate().fold(col & !mask, |acc, (j, &q)| {
                acc | (((local_row >> j) & 1) << q)
            });
            out.push((row, col, v));
        }
    }
    out
}

/// Full `2^n × 2^n` unitary of a circuit; column `j` is the image of basis state `j`.
pub fn unitary(circuit: &Circuit) -> Result<Matrix, SimError> {
    let n = circuit.num_qubits();
    if n > MAX_UNITARY_QUBITS {
        return Err(SimError::SizeCapExceeded {
            n,
            cap: MAX_UNITARY_QUBITS,
        });
    }
    let dim = 1usize << n;
    let mut total = Matrix::identity(dim);
    for op in circuit.ops() {
        let mut next = vec![Complex64::new(0.0, 0.0); dim * dim];
        for (r, k, v) in embedded_entries(op.kind, &op.qubits, n) {
            for c in 0..dim {
                next[r * dim + c] += v * total.data[k * dim + c];
            }
        }
        total.data = next;
    }
    Ok(total)
}

/// Outcome of a global-phase equivalence check.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EquivalenceReport {
    pub equal: bool,
    /// The `φ` for which `A ≈ e^{iφ} B`.
    pub phase: f64,
    /// `max |A - e^{iφ} B|` over all entries.
    pub residual: f64,
}

/// Tests `a ≈ e^{iφ} b`, taking `φ` from the largest-magnitude entry of `b`.
pub fn equiv_global_phase(a: &Matrix, b: &Matrix, tol: f64) -> Result<EquivalenceReport, SimError> {
    if a.dim != b.dim {
        return Err(SimError::DimensionMismatch(a.dim, b.dim));
    }
    let (pos, max) = b
        .data
        .iter()
        .enumerate()
        .fold((0, 0.0f64), |(bi, bm), (i, z)| {
            let m = z.norm();
            if m > bm {
                (i, m)
            } else {
                (bi, bm)
            }
        });
    if max == 0.0 {
        return Err(SimError::AllZeroMatrix);
    }
    let phase = (a.data[pos] / b.data[pos]).arg();
    let w = Complex64::from_polar(1.0, phase);
    let residual = a
        .data
        .iter()
        .zip(&b.data)
        .map(|(x, y)| (x - w * y).norm())
        .fold(0.0, f64::max);
    Ok(EquivalenceReport {
        equal: residual <= tol,
        phase,
        residual,
    })
}

/// Probabilities keyed by outcome string. Outcomes with probability exactly
/// zero are omitted.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Distribution {
    n: usize,
    probs: BTreeMap<String, f64>,
}

impl Distribution {
    /// Builds a distribution from `(outcome, probability)` pairs. Zero entries are dropped.
    pub fn new(n: usize, entries: impl IntoIterator<Item = (String, f64)>) -> Self {
        let probs = entries.into_iter().filter(|(_, p)| *p != 0.0).collect();
        Self { n, probs }
    }

    pub fn num_qubits(&self) -> usize {
        self.n
    }

    /// Probability of an outcome; absent outcomes read as zero.
    pub fn get(&self, outcome: &str) -> f64 {
        self.probs.get(outcome).copied().unwrap_or(0.0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, f64)> {
        self.probs.iter().map(|(k, v)| (k.as_str(), *v))
    }

    pub fn len(&self) -> usize {
        self.probs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.probs.is_empty()
    }

    pub fn total(&self) -> f64 {
        self.probs.values().sum()
    }

    pub fn as_map(&self) -> &BTreeMap<String, f64> {
        &self.probs
    }
}

impl fmt::Display for Distribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, p) in &self.probs {
            writeln!(f, "{k} {p:.12}")?;
        }
        Ok(())
    }
}

pub fn probabilities(state: &Statevector) -> Distribution {
    Distribution::new(
        state.n,
        state
            .amps
            .iter()
            .enumerate()
            .map(|(i, a)| (bitstring(i, state.n), a.norm_sqr())),
    )
}

/// Draws `shots` outcomes from `dist`.
///
/// Uses ChaCha8 seeded with `seed` and inverse-CDF lookup over the outcomes in
/// lexicographic order, one uniform draw per shot.
pub fn sample(
    dist: &Distribution,
    shots: u64,
    seed: u64,
) -> Result<BTreeMap<String, u64>, SimError> {
    if shots == 0 {
        return Err(SimError::NoShots);
    }
    if dist.is_empty() {
        return Err(SimError::EmptyDistribution);
    }
    let keys: Vec<&str> = dist.probs.keys().map(String::as_str).collect();
    let mut cdf = Vec::with_capacity(keys.len());
    let mut acc = 0.0;
    for p in dist.probs.values() {
        acc += p;
        cdf.push(acc);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut counts: BTreeMap<String, u64> = BTreeMap::new();
    for _ in 0..shots {
        let u: f64 = rng.random::<f64>() * acc;
        let idx = cdf.partition_point(|&c| c <= u).min(keys.len() - 1);
        *counts.entry(keys[idx].to_string()).or_default() += 1;
    }
    Ok(counts)
}

/// Normalizes sampled counts into an empirical distribution.
pub fn empirical(n: usize, counts: &BTreeMap<String, u64>) -> Distribution {
    let total: u64 = counts.values().sum();
    Distribution::new(
        n,
        counts
            .iter()
            .map(|(k, &c)| (k.clone(), c as f64 / total as f64)),
    )
}

/// Total variation distance `½ Σ |a(x) - b(x)|`.
pub fn tvd(a: &Distribution, b: &Distribution) -> Result<f64, SimError> {
    if a.n != b.n {
        return Err(SimError::QubitCountMismatch(a.n, b.n));
    }
    let mut sum = 0.0;
    for (k, p) in &a.probs {
        sum += (p - b.get(k)).abs();
    }
    for (k, q) in &b.probs {
        if !a.probs.contains_key(k) {
            sum += q.abs();
        }
    }
    Ok(0.5 * sum)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BlochVector {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl BlochVector {
    pub fn length(&self) -> f64 {
        (self.x * self.x + self.y * self.y + self.z * self.z).sqrt()
    }
}

pub fn bloch(state: &Statevector) -> Result<BlochVector, SimError> {
    if state.n != 1 {
        return Err(SimError::NotSingleQubit(state.n));
    }
    let a = state.amps[0];
    let b = state.amps[1];
    let cross = a.conj() * b;
    Ok(BlochVector {
        x: 2.0 * cross.re,
        y: 2.0 * cross.im,
        z: a.norm_sqr() - b.norm_sqr(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuit::Instruction;
    use crate::gate::{single_qubit_matrix, LayerTag};
    use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2, FRAC_PI_4};

    fn circ(n: usize, ops: &[(GateKind, &[usize])]) -> Circuit {
        Circuit::from_ops(
            n,
            ops.iter()
                .map(|(k, q)| Instruction::tagged(*k, q.to_vec(), LayerTag::Untagged)),
        )
        .unwrap()
    }

    fn h_matrix() -> Matrix {
        Matrix::from_mat2(&single_qubit_matrix(GateKind::H).unwrap())
    }

    #[test]
    fn h_on_zero() {
        let s = run(&circ(1, &[(GateKind::H, &[0])])).unwrap();
        for a in s.amplitudes() {
            assert!((a - Complex64::new(FRAC_1_SQRT_2, 0.0)).norm() < 1e-15);
        }
    }

    #[test]
    fn sx_then_sxdg_restores_zero() {
        let s = run(&circ(1, &[(GateKind::Sx, &[0]), (GateKind::Sxdg, &[0])])).unwrap();
        assert!((s.amplitudes()[0] - 1.0).norm() < 1e-15);
        assert!(s.amplitudes()[1].norm() < 1e-15);
    }

    #[test]
    fn run_checks_initial_dimension() {
        let c = circ(2, &[]);
        let init = Statevector::zero(1).unwrap();
        assert_eq!(run_from(&c, init), Err(SimError::DimensionMismatch(1, 2)));
    }

    #[test]
    fn run_enforces_size_cap() {
        let c = Circuit::new(21).unwrap();
        assert!(matches!(run(&c), Err(SimError::SizeCapExceeded { .. })));
    }

    #[test]
    fn unitary_enforces_size_cap() {
        let c = Circuit::new(11).unwrap();
        assert!(matches!(unitary(&c), Err(SimError::SizeCapExceeded { .. })));
    }

    #[test]
    fn empty_unitary_is_identity() {
        assert_eq!(unitary(&circ(1, &[])).unwrap(), Matrix::identity(2));
    }

    #[test]
    fn x_equals_two_sx() {
        let x = unitary(&circ(1, &[(GateKind::X, &[0])])).unwrap();
        let sx2 = unitary(&circ(1, &[(GateKind::Sx, &[0]), (GateKind::Sx, &[0])])).unwrap();
        assert!(x.max_deviation(&sx2).unwrap() <= 1e-15);
    }

    #[test]
    fn cx_unitary_matches_run_columns() {
        let c = circ(
            3,
            &[
                (GateKind::H, &[2]),
                (GateKind::Cx, &[2, 0]),
                (GateKind::Mcx(3), &[0, 2, 1]),
            ],
        );
        let u = unitary(&c).unwrap();
        for col in 0..8 {
            let s = run_from(&c, Statevector::basis(3, col).unwrap()).unwrap();
            for row in 0..8 {
                assert!((u.get(row, col) - s.amplitudes()[row]).norm() < 1e-14);
            }
        }
    }

    #[test]
    fn equivalence_examples() {
        let h = h_matrix();
        let r = equiv_global_phase(&h, &h, 1e-12).unwrap();
        assert!(r.equal);
        assert_eq!(r.phase, 0.0);

        let dec = unitary(&circ(
            1,
            &[
                (GateKind::Rz(FRAC_PI_2), &[0]),
                (GateKind::Sx, &[0]),
                (GateKind::Rz(FRAC_PI_2), &[0]),
            ],
        ))
        .unwrap();
        let r = equiv_global_phase(&dec, &h, 1e-9).unwrap();
        assert!(r.equal);
        assert!((r.phase + FRAC_PI_4).abs() < 1e-12);

        let x = Matrix::from_mat2(&single_qubit_matrix(GateKind::X).unwrap());
        assert!(!equiv_global_phase(&h, &x, 1e-9).unwrap().equal);
    }

    #[test]
    fn equivalence_errors() {
        let zero = Matrix::from_rows(&vec![vec![Complex64::new(0.0, 0.0); 2]; 2]).unwrap();
        assert_eq!(
            equiv_global_phase(&h_matrix(), &zero, 1e-9),
            Err(SimError::AllZeroMatrix)
        );
        assert!(matches!(
            equiv_global_phase(&h_matrix(), &Matrix::identity(4), 1e-9),
            Err(SimError::DimensionMismatch(2, 4))
        ));
    }

    #[test]
    fn probabilities_examples() {
        let d = probabilities(&Statevector::zero(4).unwrap());
        assert_eq!(d.len(), 1);
        assert_eq!(d.get("0000"), 1.0);

        let d = probabilities(&run(&circ(2, &[(GateKind::H, &[0]), (GateKind::H, &[1])])).unwrap());
        for k in ["00", "01", "10", "11"] {
            assert!((d.get(k) - 0.25).abs() < 1e-15);
        }
    }

    #[test]
    fn bitstring_puts_q0_rightmost() {
        let s = run(&circ(3, &[(GateKind::X, &[0])])).unwrap();
        assert_eq!(probabilities(&s).get("001"), 1.0);
        assert_eq!(parse_bitstring("001"), Some(1));
        assert_eq!(parse_bitstring("0a1"), None);
    }

    #[test]
    fn sample_degenerate_and_deterministic() {
        let d = probabilities(&Statevector::zero(4).unwrap());
        let counts = sample(&d, 1024, 99).unwrap();
        assert_eq!(counts.get("0000"), Some(&1024));

        let u = probabilities(
            &run(&circ(
                3,
                &[
                    (GateKind::H, &[0]),
                    (GateKind::H, &[1]),
                    (GateKind::H, &[2]),
                ],
            ))
            .unwrap(),
        );
        let a = sample(&u, 1024, 7).unwrap();
        let b = sample(&u, 1024, 7).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.values().sum::<u64>(), 1024);
        assert_ne!(a, sample(&u, 1024, 8).unwrap());
    }

    #[test]
    fn sample_errors() {
        let empty = Distribution::new(2, []);
        assert_eq!(sample(&empty, 10, 0), Err(SimError::EmptyDistribution));
        let d = probabilities(&Statevector::zero(1).unwrap());
        assert_eq!(sample(&d, 0, 0), Err(SimError::NoShots));
    }

    #[test]
    fn tvd_examples() {
        let zero = Distribution::new(1, [("0".to_string(), 1.0)]);
        let one = Distribution::new(1, [("1".to_string(), 1.0)]);
        assert_eq!(tvd(&zero, &zero).unwrap(), 0.0);
        assert_eq!(tvd(&zero, &one).unwrap(), 1.0);
        assert_eq!(tvd(&one, &zero).unwrap(), 1.0);
        let two = Distribution::new(2, [("00".to_string(), 1.0)]);
        assert_eq!(tvd(&zero, &two), Err(SimError::QubitCountMismatch(1, 2)));
    }

    type Prep<'a> = &'a [(GateKind, &'a [usize])];

    #[test]
    fn bloch_axes() {
        let cases: [(Prep, (f64, f64, f64)); 4] = [
            (&[(GateKind::H, &[0])], (1.0, 0.0, 0.0)),
            (
                &[(GateKind::X, &[0]), (GateKind::H, &[0])],
                (-1.0, 0.0, 0.0),
            ),
            (&[(GateKind::Sx, &[0])], (0.0, -1.0, 0.0)),
            (
                &[(GateKind::X, &[0]), (GateKind::Sx, &[0])],
                (0.0, 1.0, 0.0),
            ),
        ];
        for (ops, (x, y, z)) in cases {
            let b = bloch(&run(&circ(1, ops)).unwrap()).unwrap();
            assert!(
                (b.x - x).abs() <= 1e-12 && (b.y - y).abs() <= 1e-12 && (b.z - z).abs() <= 1e-12,
                "{b:?}"
            );
            assert!((b.length() - 1.0).abs() <= 1e-12);
        }
        assert_eq!(
            bloch(&Statevector::zero(2).unwrap()),
            Err(SimError::NotSingleQubit(2))
        );
    }

    #[test]
    fn from_amplitudes_validates() {
        assert!(matches!(
            Statevector::from_amplitudes(vec![Complex64::new(1.0, 0.0); 3]),
            Err(SimError::NotPowerOfTwo(3))
        ));
        assert!(matches!(
            Statevector::from_amplitudes(vec![Complex64::new(1.0, 0.0); 2]),
            Err(SimError::NotNormalized(_))
        ));
    }
}
