//! Gate vocabulary, structural layer tags and exact gate semantics.
//!
//! The device-native set is `{I, X, SX, RZ, CX}`. Everything else in the
//! vocabulary (`SXDG`, `H`, `Z`, `MCZ`, `MCX`) is carried through the IR so the
//! rewrite passes have something to rewrite, but is reported as non-native by
//! the cost model.

use std::f64::consts::{FRAC_1_SQRT_2, PI};
use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

/// A dense 2×2 complex matrix in row-major order.
pub type Mat2 = [[Complex64; 2]; 2];

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// The closed set of gate kinds understood by the toolkit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GateKind {
    I,
    X,
    /// Principal square root of X.
    Sx,
    /// Inverse of [`GateKind::Sx`].
    Sxdg,
    /// Z rotation by an angle in radians, `diag(e^{-iθ/2}, e^{iθ/2})`.
    Rz(f64),
    H,
    Z,
    /// Controlled-NOT; operands are `(control, target)`.
    Cx,
    /// Multi-controlled Z over `arity` qubits. Symmetric in its operands.
    Mcz(usize),
    /// Multi-controlled X over `arity` qubits; the last operand is the target.
    Mcx(usize),
}

impl GateKind {
    /// Number of qubit operands this gate acts on.
    pub fn arity(&self) -> usize {
        match *self {
            GateKind::Cx => 2,
            GateKind::Mcz(k) | GateKind::Mcx(k) => k,
            _ => 1,
        }
    }

    /// Smallest arity accepted for variable-arity kinds.
    pub fn min_arity(&self) -> usize {
        match self {
            GateKind::Cx | GateKind::Mcz(_) => 2,
            GateKind::Mcx(_) => 3,
            _ => 1,
        }
    }

    pub fn is_single_qubit(&self) -> bool {
        self.arity() == 1 && !matches!(self, GateKind::Mcz(_) | GateKind::Mcx(_))
    }

    /// Membership in the device-native set `{I, X, SX, RZ, CX}`.
    pub fn is_native(&self) -> bool {
        matches!(
            self,
            GateKind::I | GateKind::X | GateKind::Sx | GateKind::Rz(_) | GateKind::Cx
        )
    }

    /// Text-format mnemonic, without the angle for `rz`.
    pub fn mnemonic(&self) -> &'static str {
        match self {
            GateKind::I => "id",
            GateKind::X => "x",
            GateKind::Sx => "sx",
            GateKind::Sxdg => "sxdg",
            GateKind::Rz(_) => "rz",
            GateKind::H => "h",
            GateKind::Z => "z",
            GateKind::Cx => "cx",
            GateKind::Mcz(_) => "mcz",
            GateKind::Mcx(_) => "mcx",
        }
    }

    /// Returns the kind with any RZ angle reduced into `(-π, π]`.
    pub fn canonical(self) -> Self {
        match self {
            GateKind::Rz(theta) => GateKind::Rz(canonical_angle(theta)),
            other => other,
        }
    }
}

impl fmt::Display for GateKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GateKind::Rz(theta) => write!(f, "rz({theta})"),
            GateKind::Mcz(k) => write!(f, "mcz[{k}]"),
            GateKind::Mcx(k) => write!(f, "mcx[{k}]"),
            other => f.write_str(other.mnemonic()),
        }
    }
}

/// Reduces an angle into `(-π, π]`.
///
/// Angles already in range are returned bit-for-bit unchanged. Reduction by a
/// multiple of 2π flips the sign of the RZ matrix, which is a global phase.
pub fn canonical_angle(theta: f64) -> f64 {
    if theta > -PI && theta <= PI {
        return theta;
    }
    let r = theta.rem_euclid(2.0 * PI);
    if r > PI {
        r - 2.0 * PI
    } else {
        r
    }
}

/// Structural role of an instruction inside a Grover circuit.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize,
)]
#[serde(rename_all = "snake_case")]
pub enum LayerTag {
    Superposition,
    OracleCore,
    DiffusionFormer,
    DiffusionX,
    DiffusionCore,
    DiffusionLatter,
    #[default]
    Untagged,
}

impl LayerTag {
    pub const ALL: [LayerTag; 7] = [
        LayerTag::Superposition,
        LayerTag::OracleCore,
        LayerTag::DiffusionFormer,
        LayerTag::DiffusionX,
        LayerTag::DiffusionCore,
        LayerTag::DiffusionLatter,
        LayerTag::Untagged,
    ];

    /// Core layers hold the MCZ and its phase-inversion scaffolding; they are
    /// excluded from wrapper counts.
    pub fn is_core(self) -> bool {
        matches!(self, LayerTag::OracleCore | LayerTag::DiffusionCore)
    }

    /// Suffix used by the text format (`@superposition`), `None` for untagged.
    pub fn label(self) -> Option<&'static str> {
        match self {
            LayerTag::Superposition => Some("superposition"),
            LayerTag::OracleCore => Some("oraclecore"),
            LayerTag::DiffusionFormer => Some("difformer"),
            LayerTag::DiffusionX => Some("difx"),
            LayerTag::DiffusionCore => Some("difcore"),
            LayerTag::DiffusionLatter => Some("diflatter"),
            LayerTag::Untagged => None,
        }
    }

    pub fn from_label(label: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|t| t.label() == Some(label))
    }
}

/// How a gate acts on the amplitudes it touches.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GateAction {
    /// A dense single-qubit unitary.
    Dense(Mat2),
    /// Swap the target of a CX.
    ControlledNot,
    /// Negate the amplitude when every operand reads 1.
    PhaseFlipAllOnes,
    /// Flip the last operand when every other operand reads 1.
    FlipTargetAllControls,
}

/// Exact semantics of a gate kind.
pub fn gate_action(kind: GateKind) -> GateAction {
    match kind {
        GateKind::Cx => GateAction::ControlledNot,
        GateKind::Mcz(_) => GateAction::PhaseFlipAllOnes,
        GateKind::Mcx(_) => GateAction::FlipTargetAllControls,
        single => GateAction::Dense(single_qubit_matrix(single).expect("single-qubit kind")),
    }
}

/// The 2×2 unitary of a single-qubit gate, `None` for multi-qubit kinds.
pub fn single_qubit_matrix(kind: GateKind) -> Option<Mat2> {
    let c = Complex64::new;
    let half_plus = c(0.5, 0.5);
    let half_minus = c(0.5, -0.5);
    let m = match kind {
        GateKind::I => [[ONE, ZERO], [ZERO, ONE]],
        GateKind::X => [[ZERO, ONE], [ONE, ZERO]],
        GateKind::Sx => [[half_plus, half_minus], [half_minus, half_plus]],
        GateKind::Sxdg => [[half_minus, half_plus], [half_plus, half_minus]],
        GateKind::Rz(theta) => [
            [Complex64::from_polar(1.0, -theta / 2.0), ZERO],
            [ZERO, Complex64::from_polar(1.0, theta / 2.0)],
        ],
        GateKind::H => {
            let s = c(FRAC_1_SQRT_2, 0.0);
            [[s, s], [s, -s]]
        }
        GateKind::Z => [[ONE, ZERO], [ZERO, -ONE]],
        GateKind::Cx | GateKind::Mcz(_) | GateKind::Mcx(_) => return None,
    };
    Some(m)
}

/// Dense matrix of a gate on its own operands, indexed with operand `j` as
/// bit `j` of the local basis index. Useful for small reference computations.
#[allow(clippy::needless_range_loop)]
pub fn gate_matrix(kind: GateKind) -> Vec<Vec<Complex64>> {
    if let Some(m) = single_qubit_matrix(kind) {
        return m.iter().map(|row| row.to_vec()).collect();
    }
    let k = kind.arity();
    let dim = 1usize << k;
    let mut out = vec![vec![ZERO; dim]; dim];
    for col in 0..dim {
        let row = match gate_action(kind) {
            GateAction::ControlledNot => {
                if col & 1 == 1 {
                    col ^ 2
                } else {
                    col
                }
            }
            GateAction::FlipTargetAllControls => {
                let controls = (1usize << (k - 1)) - 1;
                if col & controls == controls {
                    col ^ (1 << (k - 1))
                } else {
                    col
                }
            }
            _ => col,
        };
        let value = match gate_action(kind) {
            GateAction::PhaseFlipAllOnes if col == dim - 1 => -ONE,
            _ => ONE,
        };
        out[row][col] = value;
    }
    out
}

pub fn mat2_mul(a: &Mat2, b: &Mat2) -> Mat2 {
    let mut out = [[ZERO; 2]; 2];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, entry) in row.iter_mut().enumerate() {
            *entry = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    out
}

pub fn mat2_adjoint(a: &Mat2) -> Mat2 {
    [
        [a[0][0].conj(), a[1][0].conj()],
        [a[0][1].conj(), a[1][1].conj()],
    ]
}

/// Largest entrywise modulus of `a - b`.
pub fn mat2_max_deviation(a: &Mat2, b: &Mat2) -> f64 {
    a.iter()
        .flatten()
        .zip(b.iter().flatten())
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}
