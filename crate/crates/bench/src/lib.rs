//! Shared fixtures for the benchmarks.

use qaxis::{
    build_grover, cancel, decompose_h, expand_x, Axis, Circuit, DecomposeMode, GroverSpec,
};

/// Single-solution Grover circuit marking the all-ones outcome.
pub fn grover(n: usize, iterations: usize, axis: Axis) -> Circuit {
    build_grover(&GroverSpec::new(n, "1".repeat(n), iterations, axis)).expect("valid spec")
}

/// The X-axis circuit after H decomposition and the Y-axis circuit after
/// X expansion and cancellation.
pub fn transpiled_pair(n: usize, iterations: usize) -> (Circuit, Circuit) {
    let x = decompose_h(
        &grover(n, iterations, Axis::X),
        DecomposeMode::SafeSymmetric,
    );
    let y = cancel(&expand_x(&grover(n, iterations, Axis::Y)));
    (x, y)
}
