//! Instruction and circuit representation.

use thiserror::Error;

use crate::gate::{GateKind, LayerTag};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CircuitError {
    #[error("qubit q{qubit} out of range for a {n}-qubit circuit")]
    OutOfRangeQubit { qubit: usize, n: usize },
    #[error("qubit q{0} appears more than once in one instruction")]
    DuplicateQubit(usize),
    #[error("{kind} expects {expected} operand(s), got {got}")]
    ArityMismatch {
        kind: String,
        expected: usize,
        got: usize,
    },
    #[error("rz angle must be finite, got {0}")]
    NonFiniteAngle(f64),
    #[error("a circuit needs at least one qubit")]
    NoQubits,
}

/// One gate application.
#[derive(Debug, Clone, PartialEq)]
pub struct Instruction {
    pub kind: GateKind,
    pub qubits: Vec<usize>,
    pub tag: LayerTag,
}

impl Instruction {
    pub fn new(kind: GateKind, qubits: impl Into<Vec<usize>>) -> Self {
        Self {
            kind,
            qubits: qubits.into(),
            tag: LayerTag::Untagged,
        }
    }

    pub fn tagged(kind: GateKind, qubits: impl Into<Vec<usize>>, tag: LayerTag) -> Self {
        Self {
            kind,
            qubits: qubits.into(),
            tag,
        }
    }

    pub fn single(kind: GateKind, qubit: usize, tag: LayerTag) -> Self {
        Self::tagged(kind, vec![qubit], tag)
    }

    /// Checks operand count, range and distinctness against an `n`-qubit register.
    pub fn validate(&self, n: usize) -> Result<(), CircuitError> {
        let got = self.qubits.len();
        let arity_ok = match self.kind {
            GateKind::Mcz(k) | GateKind::Mcx(k) => k == got && k >= self.kind.min_arity(),
            _ => got == self.kind.arity(),
        };
        if !arity_ok {
            let expected = match self.kind {
                GateKind::Mcz(k) | GateKind::Mcx(k) => k.max(self.kind.min_arity()),
                other => other.arity(),
            };
            return Err(CircuitError::ArityMismatch {
                kind: self.kind.mnemonic().to_string(),
                expected,
                got,
            });
        }
        if let GateKind::Rz(theta) = self.kind {
            if !theta.is_finite() {
                return Err(CircuitError::NonFiniteAngle(theta));
            }
        }
        for (i, &q) in self.qubits.iter().enumerate() {
            if q >= n {
                return Err(CircuitError::OutOfRangeQubit { qubit: q, n });
            }
            if self.qubits[..i].contains(&q) {
                return Err(CircuitError::DuplicateQubit(q));
            }
        }
        Ok(())
    }

    /// The only operand of a single-qubit instruction.
    pub fn target(&self) -> usize {
        *self.qubits.last().expect("instruction has operands")
    }
}

/// An ordered gate list over `n` qubits. Index 0 is applied first.
#[derive(Debug, Clone, PartialEq)]
pub struct Circuit {
    n: usize,
    ops: Vec<Instruction>,
    /// Terminal `measure all` marker. Only affects export.
    pub measure_all: bool,
}

impl Circuit {
    pub fn new(n: usize) -> Result<Self, CircuitError> {
        if n == 0 {
            return Err(CircuitError::NoQubits);
        }
        Ok(Self {
            n,
            ops: Vec::new(),
            measure_all: false,
        })
    }

    /// Builds a circuit from a list of instructions, validating each.
    pub fn from_ops(
        n: usize,
        ops: impl IntoIterator<Item = Instruction>,
    ) -> Result<Self, CircuitError> {
        let mut c = Self::new(n)?;
        for op in ops {
            c.push(op)?;
        }
        Ok(c)
    }

    pub fn num_qubits(&self) -> usize {
        self.n
    }

    pub fn ops(&self) -> &[Instruction] {
        &self.ops
    }

    pub fn len(&self) -> usize {
        self.ops.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ops.is_empty()
    }

    /// Returns a copy of this circuit with `instr` appended.
    pub fn append(&self, instr: Instruction) -> Result<Self, CircuitError> {
        let mut out = self.clone();
        out.push(instr)?;
        Ok(out)
    }

    /// Appends in place. RZ angles are stored canonicalized into `(-π, π]`.
    pub fn push(&mut self, mut instr: Instruction) -> Result<(), CircuitError> {
        instr.validate(self.n)?;
        instr.kind = instr.kind.canonical();
        self.ops.push(instr);
        Ok(())
    }

    /// Concatenation in time order: `self` runs first.
    pub fn then(&self, other: &Circuit) -> Result<Self, CircuitError> {
        let mut out = self.clone();
        for op in &other.ops {
            out.push(op.clone())?;
        }
        out.measure_all = self.measure_all || other.measure_all;
        Ok(out)
    }

    /// Same register and measurement flag, different instruction list.
    ///
    /// Used by the rewrite passes, whose outputs are valid by construction.
    pub(crate) fn with_ops(&self, ops: Vec<Instruction>) -> Self {
        debug_assert!(ops.iter().all(|op| op.validate(self.n).is_ok()));
        Self {
            n: self.n,
            ops,
            measure_all: self.measure_all,
        }
    }

    /// Layered depth: each instruction is placed one layer after the latest
    /// layer occupied on any of its operands.
    pub fn depth(&self) -> usize {
        let mut level = vec![0usize; self.n];
        let mut depth = 0;
        for op in &self.ops {
            let layer = op.qubits.iter().map(|&q| level[q]).max().unwrap_or(0) + 1;
            for &q in &op.qubits {
                level[q] = layer;
            }
            depth = depth.max(layer);
        }
        depth
    }

    pub fn count_kind(&self, pred: impl Fn(&GateKind) -> bool) -> usize {
        self.ops.iter().filter(|op| pred(&op.kind)).count()
    }
}
