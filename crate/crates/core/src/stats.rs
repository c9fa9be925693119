use std::time::Duration;

/// Instrumentation returned by the pruned solvers.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PruneStats<T> {
    pub cells_computed: u64,
    /// `m * n`.
    pub cells_total: u64,
    pub ub_initial: T,
    pub ub_final: T,
    pub elapsed: Duration,
}

impl<T> PruneStats<T> {
    /// Fraction of table cells that were skipped, in `[0, 1]`.
    pub fn prune_ratio(&self) -> f64 {
        if self.cells_total == 0 {
            0.0
        } else {
            1.0 - self.cells_computed as f64 / self.cells_total as f64
        }
    }
}
