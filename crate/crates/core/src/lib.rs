//! Circuit rewriting and verification for moving Grover superposition from the
//! Bloch sphere's X axis (`H`) to its Y axis (`SX`/`SXDG`).
//!
//! The crate is organised as:
//!
//! * [`gate`] and [`circuit`]: the IR and exact gate semantics,
//! * [`sim`]: dense statevector simulation, unitaries and distribution checks,
//! * [`grover`]: tagged Grover circuits and their closed-form distribution,
//! * [`passes`]: the rewrite passes and the pass pipeline,
//! * [`cost`]: native-gate and wrapper counts,
//! * [`text`]: the circuit text format.

pub mod circuit;
pub mod cost;
pub mod gate;
pub mod grover;
pub mod passes;
pub mod random;
pub mod sim;
pub mod text;

pub use circuit::{Circuit, CircuitError, Instruction};
pub use cost::{compare, report, ComparisonReport, CostError, CostReport};
pub use gate::{GateKind, LayerTag};
pub use grover::{build_grover, reference_distribution, Axis, GroverError, GroverSpec};
pub use passes::{
    cancel, decompose_h, expand_x, pipeline, realize_mcz, substitute_axis, DecomposeMode, Pass,
    PassError, PassLog,
};
pub use sim::{
    bloch, equiv_global_phase, probabilities, run, sample, tvd, unitary, BlochVector, Distribution,
    EquivalenceReport, Matrix, SimError, Statevector,
};
pub use text::{emit, parse, ParseError};
