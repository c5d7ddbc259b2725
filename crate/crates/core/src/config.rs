/// Default tolerance for unit, equality and realness checks.
pub const DEFAULT_TOL: f64 = 1e-9;

/// Order in which the non-pivot cycles of an arrangement are multiplied.
///
/// Only [`LeaderOrder::Ascending`] is correct. The other variant exists so the
/// verification suites can demonstrate that they catch ordering faults.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum LeaderOrder {
    #[default]
    Ascending,
    /// Exchange the first two non-pivot cycles.
    SwappedLeaders,
}

/// Tolerances and enumeration limits shared by the determinant and
/// reduction routines.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Config {
    pub tol: f64,
    /// Largest matrix order for which a permutation-sum determinant is formed.
    pub size_cap: usize,
    /// Largest number of column subsets enumerated for the reduction sum.
    pub subset_budget: u64,
    /// Largest number of simple cycles reported by cycle enumeration.
    pub cycle_budget: u64,
    pub leader_order: LeaderOrder,
}

impl Default for Config {
    fn default() -> Self {
        Self {
            tol: DEFAULT_TOL,
            size_cap: 10,
            subset_budget: 1_000_000,
            cycle_budget: 1_000_000,
            leader_order: LeaderOrder::Ascending,
        }
    }
}

impl Config {
    pub fn with_tol(mut self, tol: f64) -> Self {
        self.tol = tol;
        self
    }

    pub fn with_leader_order(mut self, order: LeaderOrder) -> Self {
        self.leader_order = order;
        self
    }
}
