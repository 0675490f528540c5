//! The order polynomial Ω_P(n): the number of order-preserving maps P → [n].
//!
//! [`omega`] counts multichains in the ideal lattice J(P): a map f: P → [n]
//! corresponds to the chain f⁻¹[1] ⊆ f⁻¹[1,2] ⊆ … ⊆ f⁻¹[1,n] = P. The counts
//! for n = 1..|P|+1 are interpolated exactly. [`omega_via_descents`] sums
//! binomials over linear extensions and [`count_maps_bruteforce`] enumerates
//! maps directly; both exist to cross-check the main engine.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::config::Budget;
use crate::polynomial::{interpolate, rat_from_uint, UniPoly};
use crate::poset::{ElementId, Poset, Subset};
use crate::{Config, Error, Exec, Result};

/// The ideal lattice of a poset with the adjacency needed for down-sums.
pub(crate) struct IdealLattice {
    pub(crate) ideals: Vec<Subset>,
    /// For each element in linear-extension order, the pairs `(I, I − p)` of
    /// ideal indices where `p` is maximal in `I`.
    steps: Vec<Vec<(u32, u32)>>,
}

impl IdealLattice {
    pub(crate) fn new(poset: &Poset, cfg: &Config) -> Result<IdealLattice> {
        let ideals = poset.enumerate_ideals(cfg)?;
        let index: HashMap<Subset, usize> = ideals.iter().enumerate().map(|(i, &s)| (s, i)).collect();
        let steps = poset
            .topological_order()
            .into_iter()
            .map(|p| {
                ideals
                    .iter()
                    .enumerate()
                    .filter_map(|(i, &ideal)| {
                        let smaller = ideal.remove(p);
                        if !ideal.contains(p) {
                            return None;
                        }
                        index.get(&smaller).map(|&j| (i as u32, j as u32))
                    })
                    .collect()
            })
            .collect();
        Ok(IdealLattice { ideals, steps })
    }

    /// Replaces `v(I)` by `Σ_{I' ⊆ I} v(I')`.
    ///
    /// Processing elements bottom-up in a linear extension, the update for
    /// element `p` only reads ideals without `p` and only writes ideals with
    /// `p`, so each step is a batch of independent additions.
    fn down_sum(&self, values: &mut [BigUint], exec: Exec) {
        const PAR_THRESHOLD: usize = 1 << 12;
        for step in &self.steps {
            if exec.is_parallel() && step.len() >= PAR_THRESHOLD {
                let sums = exec.map(step, |&(i, j)| &values[i as usize] + &values[j as usize]);
                for (&(i, _), s) in step.iter().zip(sums) {
                    values[i as usize] = s;
                }
            } else {
                for &(i, j) in step {
                    let add = values[j as usize].clone();
                    values[i as usize] += add;
                }
            }
        }
    }

    /// `Ω_P(n)` for `n = 1..=upto`.
    fn multichain_counts(&self, upto: usize, exec: Exec) -> Vec<BigUint> {
        let top = self.ideals.len() - 1;
        let mut values = vec![BigUint::one(); self.ideals.len()];
        let mut out = Vec::with_capacity(upto);
        for n in 1..=upto {
            if n > 1 {
                self.down_sum(&mut values, exec);
            }
            out.push(values[top].clone());
        }
        out
    }
}

/// The order polynomial of `poset`. The empty poset gives the constant 1.
pub fn omega(poset: &Poset, cfg: &Config) -> Result<UniPoly> {
    if poset.is_empty() {
        return Ok(UniPoly::one());
    }
    let lattice = IdealLattice::new(poset, cfg)?;
    let counts = lattice.multichain_counts(poset.len() + 1, cfg.exec);
    let points: Vec<_> = counts
        .iter()
        .enumerate()
        .map(|(i, c)| (i as i64 + 1, rat_from_uint(c)))
        .collect();
    let poly = interpolate(&points)?;
    debug_assert!(poly.evaluate_int(0).is_zero());
    debug_assert_eq!(poly.degree(), Some(poset.len()));
    Ok(poly)
}

/// `Ω_P(n)` for `n = 1..=upto` straight from the multichain recursion.
pub fn omega_values(poset: &Poset, upto: usize, cfg: &Config) -> Result<Vec<BigUint>> {
    if poset.is_empty() {
        return Ok(vec![BigUint::one(); upto]);
    }
    Ok(IdealLattice::new(poset, cfg)?.multichain_counts(upto, cfg.exec))
}

/// Number of order-preserving maps `P → [n]` by depth-first search.
pub fn count_maps_bruteforce(poset: &Poset, n: u64, cfg: &Config) -> Result<BigUint> {
    if poset.is_empty() {
        return Ok(BigUint::one());
    }
    if n == 0 {
        return Ok(BigUint::zero());
    }
    let order = poset.topological_order();
    let lower: Vec<Vec<ElementId>> = (0..poset.len()).map(|p| poset.lower_covers(p).collect()).collect();
    let mut values = vec![0u64; poset.len()];
    let mut budget = Budget::new(cfg.node_budget, "order-preserving map search");
    let mut total = 0u64;
    search_maps(&order, &lower, n, 0, &mut values, &mut budget, &mut total)?;
    Ok(BigUint::from(total))
}

fn search_maps(
    order: &[ElementId],
    lower: &[Vec<ElementId>],
    n: u64,
    depth: usize,
    values: &mut [u64],
    budget: &mut Budget,
    total: &mut u64,
) -> Result<()> {
    budget.tick()?;
    let p = order[depth];
    let floor = lower[p].iter().map(|&q| values[q]).max().unwrap_or(1);
    if depth + 1 == order.len() {
        *total += n + 1 - floor;
        return Ok(());
    }
    for v in floor..=n {
        values[p] = v;
        search_maps(order, lower, n, depth + 1, values, budget, total)?;
    }
    Ok(())
}

/// Order polynomial from descents of linear extensions under a natural
/// labeling: Σ_w binom(n + |P| − 1 − des(w), |P|).
///
/// `labeling[i]` is the element carrying label `i`.
pub fn omega_via_descents(poset: &Poset, labeling: &[ElementId]) -> Result<UniPoly> {
    let n = poset.len();
    let mut label_of = vec![usize::MAX; n];
    if labeling.len() != n {
        return Err(Error::NotNaturalLabeling(format!(
            "expected {n} labels, got {}",
            labeling.len()
        )));
    }
    for (label, &p) in labeling.iter().enumerate() {
        if p >= n || label_of[p] != usize::MAX {
            return Err(Error::NotNaturalLabeling(format!(
                "element {p} is labeled twice or out of range"
            )));
        }
        label_of[p] = label;
    }
    for &(lo, hi) in poset.covers() {
        if label_of[lo] > label_of[hi] {
            return Err(Error::NotNaturalLabeling(format!(
                "{} precedes {} but carries a larger label",
                poset.label(lo),
                poset.label(hi)
            )));
        }
    }
    let mut by_descents = vec![0u64; n.max(1)];
    for w in poset.linear_extensions()? {
        let des = w
            .windows(2)
            .filter(|pair| label_of[pair[0]] > label_of[pair[1]])
            .count();
        by_descents[des] += 1;
    }
    let mut total = UniPoly::zero();
    for (des, &count) in by_descents.iter().enumerate() {
        if count > 0 {
            let term = UniPoly::binomial(n as i64 - 1 - des as i64, n);
            total = &total + &term.scale(&crate::polynomial::rat(count as i64));
        }
    }
    Ok(total)
}

/// The identity labeling, natural whenever ids already form a linear extension.
pub fn topological_labeling(poset: &Poset) -> Vec<ElementId> {
    poset.topological_order()
}
