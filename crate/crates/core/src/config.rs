//! Resource limits and the execution mode shared by the counting engines.

/// Execution strategy for the data-parallel inner loops.
///
/// `Parallel` runs on rayon when the `parallel` feature is enabled and
/// degrades to the sequential path otherwise. Both paths produce identical
/// results; all arithmetic is exact and reductions happen in a fixed order.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Exec {
    Sequential,
    #[default]
    Parallel,
}

impl Exec {
    /// Maps `f` over `items`, preserving order.
    pub fn map<T, R, F>(self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        match self {
            Exec::Sequential => items.iter().map(f).collect(),
            Exec::Parallel => par_map(items, f),
        }
    }

    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Exec::Parallel
    }
}

#[cfg(feature = "parallel")]
fn par_map<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    use rayon::prelude::*;
    if items.len() < 2 {
        return items.iter().map(f).collect();
    }
    items.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
fn par_map<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    items.iter().map(f).collect()
}

pub const DEFAULT_MAX_IDEALS: usize = 1 << 24;
pub const DEFAULT_NODE_BUDGET: u64 = 100_000_000;
pub const DEFAULT_MAX_CHAINS: usize = 10_000_000;

/// Caps on the exponential parts of the engines plus the execution mode.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Config {
    /// Largest ideal lattice that will be materialized.
    pub max_ideals: usize,
    /// Search-node budget for the brute-force oracles.
    pub node_budget: u64,
    /// Largest number of ideal chains that will be listed explicitly.
    pub max_chains: usize,
    pub exec: Exec,
}

impl Default for Config {
    fn default() -> Self {
        Self {
            max_ideals: DEFAULT_MAX_IDEALS,
            node_budget: DEFAULT_NODE_BUDGET,
            max_chains: DEFAULT_MAX_CHAINS,
            exec: Exec::default(),
        }
    }
}

impl Config {
    pub fn sequential() -> Self {
        Self {
            exec: Exec::Sequential,
            ..Self::default()
        }
    }

    pub fn with_exec(mut self, exec: Exec) -> Self {
        self.exec = exec;
        self
    }

    pub fn with_node_budget(mut self, budget: u64) -> Self {
        self.node_budget = budget;
        self
    }
}

/// Counts search nodes against a budget.
#[derive(Debug)]
pub(crate) struct Budget {
    used: u64,
    limit: u64,
    what: &'static str,
}

impl Budget {
    pub(crate) fn new(limit: u64, what: &'static str) -> Self {
        Self { used: 0, limit, what }
    }

    #[inline]
    pub(crate) fn tick(&mut self) -> crate::Result<()> {
        self.used += 1;
        if self.used > self.limit {
            return Err(crate::Error::SizeLimit(format!(
                "{} exceeded the node budget of {}",
                self.what, self.limit
            )));
        }
        Ok(())
    }
}
