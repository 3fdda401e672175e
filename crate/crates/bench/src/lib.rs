//! Shared fixtures for the benchmark targets.

use energylab_core::constructors::random_regular;
use energylab_core::graph::Graph;

/// Deterministic cubic graph of the requested order.
pub fn cubic_fixture(n: usize) -> Graph {
    random_regular(n, 3, 0x5EED).expect("cubic sampling at benchmark sizes")
}
