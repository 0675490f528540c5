//! Marked posets and lattice points of marked order polytopes.
//!
//! For a natural labeling `a_0, .., a_r` of the marked elements, the number of
//! integer extensions of the marking is a polynomial in the gaps
//! `t_i = λ(a_i) − λ(a_{i−1})`:
//!
//! ```text
//! Ω_{P,A}(λ) = Σ_{I_0 ⊂ … ⊂ I_r}  Π_{i=1..r} Ω_{I_i ∖ (I_{i−1} ∪ ↑a_i)}(t_i)
//! ```
//!
//! summed over strict chains of order ideals with `a_i ∈ I_i ∖ I_{i−1}`.
//! [`product_formula_polynomial`] evaluates this sum as a layered dynamic
//! program over ideals; [`product_formula_via_chains`] expands the chains one
//! by one. [`count_bruteforce`] counts the points directly and shares no code
//! with either.

use std::collections::{BTreeMap, HashMap, HashSet};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::config::Budget;
use crate::order_poly::omega;
use crate::polynomial::{rat, to_integer, MultiPoly, UniPoly};
use crate::poset::{ElementId, Poset, PosetJson, Subset};
use crate::{Config, Error, Exec, Result};

/// A poset with integer marks on a subset `A` containing all minima and maxima.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MarkedPoset {
    poset: Poset,
    marked: Subset,
    values: Vec<i64>,
}

impl MarkedPoset {
    pub fn new(poset: Poset, marks: &[(ElementId, i64)]) -> Result<MarkedPoset> {
        if poset.is_empty() {
            return Err(Error::InvalidInput("marked poset needs at least one element".into()));
        }
        let mut marked = Subset::EMPTY;
        let mut values = vec![0i64; poset.len()];
        for &(p, v) in marks {
            if p >= poset.len() {
                return Err(Error::IndexOutOfRange {
                    index: p,
                    len: poset.len(),
                });
            }
            if marked.contains(p) {
                return Err(Error::InvalidInput(format!("element {} marked twice", poset.label(p))));
            }
            marked = marked.insert(p);
            values[p] = v;
        }
        let extremal = poset.minimal_elements().union(poset.maximal_elements());
        if let Some(p) = extremal.difference(marked).iter().next() {
            return Err(Error::MissingExtremalMark(poset.label(p).to_string()));
        }
        Ok(MarkedPoset { poset, marked, values })
    }

    pub fn from_labels(poset: Poset, marks: &BTreeMap<String, i64>) -> Result<MarkedPoset> {
        let mut resolved = Vec::with_capacity(marks.len());
        for (label, &v) in marks {
            let p = poset
                .index_of(label)
                .ok_or_else(|| Error::UnknownLabel(label.clone()))?;
            resolved.push((p, v));
        }
        MarkedPoset::new(poset, &resolved)
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn marked(&self) -> Subset {
        self.marked
    }

    pub fn free(&self) -> Subset {
        self.marked.complement(self.poset.len())
    }

    pub fn mark(&self, p: ElementId) -> Option<i64> {
        self.marked.contains(p).then(|| self.values[p])
    }

    pub fn marks(&self) -> Vec<(ElementId, i64)> {
        self.marked.iter().map(|p| (p, self.values[p])).collect()
    }

    /// The same poset with every mark multiplied by `n`.
    pub fn dilate(&self, n: i64) -> MarkedPoset {
        self.map_marks(|v| v * n)
    }

    /// The same poset with every mark shifted by `c`.
    pub fn translate(&self, c: i64) -> MarkedPoset {
        self.map_marks(|v| v + c)
    }

    fn map_marks(&self, f: impl Fn(i64) -> i64) -> MarkedPoset {
        let mut out = self.clone();
        for p in self.marked.iter() {
            out.values[p] = f(self.values[p]);
        }
        out
    }

    /// Whether the marking is order preserving on `A`.
    pub fn in_order_cone(&self) -> bool {
        self.marked.iter().all(|a| {
            self.poset
                .up_set(a)
                .intersection(self.marked)
                .iter()
                .all(|b| self.values[a] <= self.values[b])
        })
    }

    pub fn to_json(&self) -> MarkedJson {
        MarkedJson {
            poset: self.poset.to_json(),
            marked: self
                .marked
                .iter()
                .map(|p| (self.poset.label(p).to_string(), self.values[p]))
                .collect(),
        }
    }

    pub fn from_json(doc: &MarkedJson) -> Result<MarkedPoset> {
        MarkedPoset::from_labels(Poset::from_json(&doc.poset)?, &doc.marked)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MarkedJson {
    #[serde(flatten)]
    pub poset: PosetJson,
    pub marked: BTreeMap<String, i64>,
}

/// An ordering `a_0, .., a_r` of the marked elements with `i < j` whenever
/// `a_i ≺ a_j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NaturalLabeling {
    order: Vec<ElementId>,
}

impl NaturalLabeling {
    pub fn new(m: &MarkedPoset, order: Vec<ElementId>) -> Result<NaturalLabeling> {
        if Subset::from_elements(order.iter().copied()) != m.marked || order.len() != m.marked.len() {
            return Err(Error::NotNaturalLabeling(
                "ordering must list every marked element exactly once".into(),
            ));
        }
        for (i, &a) in order.iter().enumerate() {
            if let Some(&b) = order[..i].iter().find(|&&b| m.poset.lt(a, b)) {
                return Err(Error::NotNaturalLabeling(format!(
                    "{} precedes {} in the poset but comes later",
                    m.poset.label(a),
                    m.poset.label(b)
                )));
            }
        }
        Ok(NaturalLabeling { order })
    }

    pub fn order(&self) -> &[ElementId] {
        &self.order
    }

    /// Number of gap variables, `r = |A| − 1`.
    pub fn nvars(&self) -> usize {
        self.order.len() - 1
    }

    pub fn values(&self, m: &MarkedPoset) -> Vec<i64> {
        self.order.iter().map(|&a| m.values[a]).collect()
    }

    /// `t_1..t_r`; may be negative when the marking is outside the region.
    pub fn gaps(&self, m: &MarkedPoset) -> Vec<i64> {
        self.values(m).windows(2).map(|w| w[1] - w[0]).collect()
    }

    /// Position of the first decreasing step, if any.
    pub fn region_violation(&self, m: &MarkedPoset) -> Option<usize> {
        self.gaps(m).iter().position(|&t| t < 0).map(|i| i + 1)
    }

    /// Human-readable region `λ(a_0) ≤ λ(a_1) ≤ …`.
    pub fn region(&self, m: &MarkedPoset) -> String {
        self.order
            .iter()
            .map(|&a| m.poset.label(a))
            .collect::<Vec<_>>()
            .join(" <= ")
    }

    /// Labels of `a_0, .., a_r`.
    pub fn labels(&self, m: &MarkedPoset) -> Vec<String> {
        self.order.iter().map(|&a| m.poset.label(a).to_string()).collect()
    }
}

/// Canonical labeling: marked elements sorted by (mark, topological index).
pub fn natural_labeling_for(m: &MarkedPoset) -> Result<NaturalLabeling> {
    if !m.in_order_cone() {
        return Err(Error::OutsideOrderCone);
    }
    let induced = m.poset.induced_subposet(m.marked);
    let mut topo_index = vec![0usize; m.poset.len()];
    for (rank, local) in induced.poset.topological_order().into_iter().enumerate() {
        topo_index[induced.parent[local]] = rank;
    }
    let mut order: Vec<ElementId> = m.marked.iter().collect();
    order.sort_by_key(|&a| (m.values[a], topo_index[a]));
    NaturalLabeling::new(m, order)
}

/// A strict chain `I_0 ⊂ … ⊂ I_r` of order ideals.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IdealChain {
    pub ideals: Vec<Subset>,
}

impl IdealChain {
    /// Checks every chain invariant against `m` and `labeling`.
    pub fn validate(&self, m: &MarkedPoset, labeling: &NaturalLabeling) -> Result<()> {
        let order = labeling.order();
        if self.ideals.len() != order.len() {
            return Err(Error::InvalidInput(format!(
                "chain has {} ideals, labeling has {} marks",
                self.ideals.len(),
                order.len()
            )));
        }
        let mut prev = Subset::EMPTY;
        for (i, (&ideal, &a)) in self.ideals.iter().zip(order).enumerate() {
            if !m.poset.is_ideal(ideal) {
                return Err(Error::InvalidInput(format!("I_{i} is not an order ideal")));
            }
            if !prev.is_subset_of(ideal) || prev == ideal {
                return Err(Error::InvalidInput(format!(
                    "I_{i} does not strictly contain I_{}",
                    i as i64 - 1
                )));
            }
            if !ideal.difference(prev).contains(a) {
                return Err(Error::InvalidInput(format!(
                    "a_{i} is not in I_{i} minus I_{}",
                    i as i64 - 1
                )));
            }
            prev = ideal;
        }
        if prev != m.poset.ground() {
            return Err(Error::InvalidInput(
                "last ideal of the chain is not the whole poset".into(),
            ));
        }
        Ok(())
    }

    /// `I_i ∖ (I_{i−1} ∪ ↑a_i)` for `i = 1..r`.
    pub fn factor_sets(&self, m: &MarkedPoset, labeling: &NaturalLabeling) -> Vec<Subset> {
        (1..self.ideals.len())
            .map(|i| factor_set(m, labeling.order()[i], self.ideals[i - 1], self.ideals[i]))
            .collect()
    }
}

#[inline]
fn factor_set(m: &MarkedPoset, a: ElementId, lower: Subset, upper: Subset) -> Subset {
    upper.difference(lower.union(m.poset.up_set(a)))
}

/// Masks `A_{≤i}` and `A_{>i}` for each level of the labeling.
fn level_masks(labeling: &NaturalLabeling) -> Vec<(Subset, Subset)> {
    let order = labeling.order();
    (0..order.len())
        .map(|i| {
            (
                Subset::from_elements(order[..=i].iter().copied()),
                Subset::from_elements(order[i + 1..].iter().copied()),
            )
        })
        .collect()
}

/// Every qualifying chain of ideals, in lexicographic order of ideal positions
/// within [`Poset::enumerate_ideals`].
pub fn enumerate_chains(m: &MarkedPoset, labeling: &NaturalLabeling, cfg: &Config) -> Result<Vec<IdealChain>> {
    let ideals = m.poset.enumerate_ideals(cfg)?;
    let levels = level_masks(labeling);
    let candidates: Vec<Vec<Subset>> = levels
        .iter()
        .map(|&(must, forbid)| {
            ideals
                .iter()
                .copied()
                .filter(|&i| must.is_subset_of(i) && i.intersection(forbid).is_empty())
                .collect()
        })
        .collect();
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(levels.len());
    extend_chains(&candidates, &mut prefix, &mut out, cfg.max_chains)?;
    for chain in &out {
        assert_eq!(
            chain.ideals.last().copied(),
            Some(m.poset.ground()),
            "a chain whose ideals contain every marked element must end at the whole poset"
        );
    }
    Ok(out)
}

fn extend_chains(
    candidates: &[Vec<Subset>],
    prefix: &mut Vec<Subset>,
    out: &mut Vec<IdealChain>,
    cap: usize,
) -> Result<()> {
    let level = prefix.len();
    if level == candidates.len() {
        if out.len() >= cap {
            return Err(Error::SizeLimit(format!("more than {cap} ideal chains")));
        }
        out.push(IdealChain { ideals: prefix.clone() });
        return Ok(());
    }
    let prev = prefix.last().copied().unwrap_or(Subset::EMPTY);
    for &ideal in &candidates[level] {
        if prev.is_subset_of(ideal) && prev != ideal {
            prefix.push(ideal);
            extend_chains(candidates, prefix, out, cap)?;
            prefix.pop();
        }
    }
    Ok(())
}

/// Call-local memo of order polynomials keyed by factor subset.
struct OmegaCache<'a> {
    poset: &'a Poset,
    cfg: Config,
    table: HashMap<Subset, UniPoly>,
}

impl<'a> OmegaCache<'a> {
    fn new(poset: &'a Poset, cfg: &Config) -> Self {
        let mut table = HashMap::new();
        table.insert(Subset::EMPTY, UniPoly::one());
        OmegaCache {
            poset,
            cfg: cfg.clone().with_exec(Exec::Sequential),
            table,
        }
    }

    /// Computes all missing entries, in parallel when `exec` allows.
    fn fill(&mut self, masks: impl IntoIterator<Item = Subset>, exec: Exec) -> Result<()> {
        let mut missing: Vec<Subset> = masks
            .into_iter()
            .filter(|s| !self.table.contains_key(s))
            .collect::<HashSet<_>>()
            .into_iter()
            .collect();
        missing.sort_unstable();
        let computed = exec.map(&missing, |&s| omega(&self.poset.induced_subposet(s).poset, &self.cfg));
        for (s, poly) in missing.into_iter().zip(computed) {
            self.table.insert(s, poly?);
        }
        Ok(())
    }

    fn get(&self, s: Subset) -> &UniPoly {
        &self.table[&s]
    }
}

/// The chain-of-ideals polynomial in `t_1..t_r` for `labeling`.
///
/// Layer `i` of the dynamic program holds, for each admissible ideal `I_i`,
/// the sum over chains ending in `I_i` of the product of the first `i`
/// factors. Since `t_i` appears only in layer `i`, each transition multiplies
/// by a univariate polynomial in a fresh variable.
pub fn product_formula_polynomial(m: &MarkedPoset, labeling: &NaturalLabeling, cfg: &Config) -> Result<MultiPoly> {
    product_formula_partial(m, labeling, &vec![None; labeling.nvars()], cfg)
}

/// [`product_formula_polynomial`] with some gaps fixed in advance.
///
/// `fixed[i − 1] = Some(v)` substitutes `t_i = v` inside the dynamic program,
/// so `t_i` does not occur in the result. Fixing a gap to 0 prunes every
/// transition with a nonempty factor.
pub fn product_formula_partial(
    m: &MarkedPoset,
    labeling: &NaturalLabeling,
    fixed: &[Option<i64>],
    cfg: &Config,
) -> Result<MultiPoly> {
    let nvars = labeling.nvars();
    if fixed.len() != nvars {
        return Err(Error::VarMismatch {
            expected: nvars,
            got: fixed.len(),
        });
    }
    let ideals = m.poset.enumerate_ideals(cfg)?;
    let levels = level_masks(labeling);
    let order = labeling.order();
    let mut cache = OmegaCache::new(&m.poset, cfg);

    let admissible = |i: usize| -> Vec<Subset> {
        let (must, forbid) = levels[i];
        ideals
            .iter()
            .copied()
            .filter(|&s| must.is_subset_of(s) && s.intersection(forbid).is_empty())
            .collect()
    };

    let mut layer: Vec<(Subset, MultiPoly)> = admissible(0).into_iter().map(|s| (s, MultiPoly::one(nvars))).collect();

    for i in 1..=nvars {
        let a = order[i];
        let targets = admissible(i);
        let masks = targets.iter().flat_map(|&upper| {
            layer
                .iter()
                .filter(move |(lower, _)| lower.is_subset_of(upper))
                .map(move |(lower, _)| factor_set(m, a, *lower, upper))
        });
        cache.fill(masks.collect::<Vec<_>>(), cfg.exec)?;

        let prev = &layer;
        let cache_ref = &cache;
        let next = cfg.exec.map(&targets, |&upper| {
            let mut grouped: BTreeMap<Subset, MultiPoly> = BTreeMap::new();
            for (lower, poly) in prev.iter().filter(|(lower, _)| lower.is_subset_of(upper)) {
                grouped
                    .entry(factor_set(m, a, *lower, upper))
                    .or_insert_with(|| MultiPoly::zero(nvars))
                    .add_assign_unchecked(poly);
            }
            let mut total = MultiPoly::zero(nvars);
            for (mask, partial) in &grouped {
                let omega = cache_ref.get(*mask);
                match fixed[i - 1] {
                    Some(v) => {
                        let c = omega.evaluate_int(v);
                        if !c.is_zero() {
                            total.add_assign_unchecked(&partial.scale(&c));
                        }
                    }
                    None => total.add_assign_unchecked(&partial.mul_fresh_var(omega, i - 1)),
                }
            }
            (upper, total)
        });
        layer = next.into_iter().filter(|(_, p)| !p.is_zero()).collect();
    }

    let ground = m.poset.ground();
    debug_assert!(layer.iter().all(|(s, _)| *s == ground));
    Ok(layer
        .into_iter()
        .find(|(s, _)| *s == ground)
        .map(|(_, p)| p)
        .unwrap_or_else(|| MultiPoly::zero(nvars)))
}

/// The same polynomial, summing explicit chain products.
pub fn product_formula_via_chains(m: &MarkedPoset, labeling: &NaturalLabeling, cfg: &Config) -> Result<MultiPoly> {
    let nvars = labeling.nvars();
    let chains = enumerate_chains(m, labeling, cfg)?;
    let mut cache = OmegaCache::new(&m.poset, cfg);
    let factors: Vec<Vec<Subset>> = chains.iter().map(|c| c.factor_sets(m, labeling)).collect();
    cache.fill(factors.iter().flatten().copied().collect::<Vec<_>>(), cfg.exec)?;
    let cache = &cache;
    let products = cfg.exec.map(&factors, |sets| {
        sets.iter()
            .enumerate()
            .fold(MultiPoly::one(nvars), |acc, (i, &s)| acc.mul_fresh_var(cache.get(s), i))
    });
    let mut total = MultiPoly::zero(nvars);
    for p in &products {
        total.add_assign_unchecked(p);
    }
    Ok(total)
}

/// `f(t_1, .., t_r)` at the gaps of the marking; must be an integer.
pub fn evaluate_marked(m: &MarkedPoset, labeling: &NaturalLabeling, f: &MultiPoly) -> Result<BigInt> {
    if let Some(pos) = labeling.region_violation(m) {
        return Err(Error::RegionViolation(pos));
    }
    to_integer(&f.evaluate_ints(&labeling.gaps(m))?)
}

/// Univariate Ehrhart polynomial `n ↦ |n·O_{P,A}(λ) ∩ Z^P|`.
pub fn ehrhart_polynomial(m: &MarkedPoset, cfg: &Config) -> Result<UniPoly> {
    let labeling = natural_labeling_for(m)?;
    let gaps = labeling.gaps(m);
    // zero gaps stay zero under dilation
    let fixed: Vec<Option<i64>> = gaps.iter().map(|&t| (t == 0).then_some(0)).collect();
    let f = product_formula_partial(m, &labeling, &fixed, cfg)?;
    let e = f.specialize_dilation(&gaps)?;
    // At n = 0 every element is pinned between marks equal to zero.
    debug_assert_eq!(e.evaluate_int(0), rat(1));
    Ok(e)
}

/// Precomputed bounds for sweeping the free elements in a linear extension.
struct Sweep {
    free: Vec<ElementId>,
    /// Largest mark below each free element and smallest mark above it.
    bounds: Vec<(i64, i64)>,
    /// Positions (in `free`) of free lower covers.
    lower: Vec<Vec<usize>>,
    /// Last position at which each free element is still needed as a lower cover.
    last_use: Vec<usize>,
}

impl Sweep {
    fn new(m: &MarkedPoset) -> Sweep {
        let poset = &m.poset;
        let free: Vec<ElementId> = poset
            .topological_order()
            .into_iter()
            .filter(|&p| !m.marked.contains(p))
            .collect();
        let mut position = vec![usize::MAX; poset.len()];
        for (k, &p) in free.iter().enumerate() {
            position[p] = k;
        }
        let bounds = free
            .iter()
            .map(|&p| {
                let lo = poset
                    .down_set(p)
                    .intersection(m.marked)
                    .iter()
                    .map(|a| m.values[a])
                    .max();
                let hi = poset.up_set(p).intersection(m.marked).iter().map(|a| m.values[a]).min();
                (
                    lo.expect("every element lies above a marked minimum"),
                    hi.expect("every element lies below a marked maximum"),
                )
            })
            .collect();
        let lower: Vec<Vec<usize>> = free
            .iter()
            .map(|&p| {
                poset
                    .lower_covers(p)
                    .filter(|&q| !m.marked.contains(q))
                    .map(|q| position[q])
                    .collect()
            })
            .collect();
        let mut last_use: Vec<usize> = (0..free.len()).collect();
        for (k, lows) in lower.iter().enumerate() {
            for &j in lows {
                last_use[j] = last_use[j].max(k);
            }
        }
        Sweep {
            free,
            bounds,
            lower,
            last_use,
        }
    }
}

/// Number of integer order-preserving extensions of the marking.
///
/// Free elements are assigned along a linear extension, each within the
/// interval left by its marked bounds and already-assigned lower covers.
/// Partial assignments are merged when they agree on every assigned element
/// that still constrains a later one.
pub fn count_bruteforce(m: &MarkedPoset, cfg: &Config) -> Result<BigUint> {
    if !m.in_order_cone() {
        return Ok(BigUint::zero());
    }
    let sweep = Sweep::new(m);
    let mut budget = Budget::new(cfg.node_budget, "lattice point search");
    // frontier: positions still needed later, with their values as the key
    let mut frontier: Vec<usize> = Vec::new();
    let mut states: HashMap<Vec<i64>, BigUint> = HashMap::new();
    states.insert(Vec::new(), BigUint::one());

    for k in 0..sweep.free.len() {
        let (lo_mark, hi) = sweep.bounds[k];
        let lower_slots: Vec<usize> = sweep.lower[k]
            .iter()
            .map(|j| {
                frontier
                    .iter()
                    .position(|f| f == j)
                    .expect("lower cover kept in frontier")
            })
            .collect();
        let keep: Vec<usize> = (0..frontier.len())
            .filter(|&s| sweep.last_use[frontier[s]] > k)
            .collect();
        let push_self = sweep.last_use[k] > k;

        let mut next: HashMap<Vec<i64>, BigUint> = HashMap::with_capacity(states.len());
        for (key, count) in &states {
            let lo = lower_slots.iter().map(|&s| key[s]).fold(lo_mark, i64::max);
            let mut base: Vec<i64> = keep.iter().map(|&s| key[s]).collect();
            if !push_self {
                budget.tick()?;
                if lo <= hi {
                    let ways = BigUint::from((hi - lo + 1) as u64) * count;
                    *next.entry(base).or_insert_with(BigUint::zero) += ways;
                }
                continue;
            }
            base.push(0);
            for v in lo..=hi {
                budget.tick()?;
                *base.last_mut().unwrap() = v;
                *next.entry(base.clone()).or_insert_with(BigUint::zero) += count;
            }
        }
        frontier = keep.iter().map(|&s| frontier[s]).collect();
        if push_self {
            frontier.push(k);
        }
        states = next;
    }
    Ok(states.into_values().sum())
}

/// Lists every integer extension of the marking, as full value vectors.
pub fn enumerate_points(m: &MarkedPoset, cfg: &Config) -> Result<Vec<Vec<i64>>> {
    let mut out = Vec::new();
    if !m.in_order_cone() {
        return Ok(out);
    }
    let sweep = Sweep::new(m);
    let mut values = m.values.clone();
    let mut budget = Budget::new(cfg.node_budget, "lattice point listing");
    list_points(&sweep, 0, &mut values, &mut budget, &mut out)?;
    Ok(out)
}

fn list_points(
    sweep: &Sweep,
    k: usize,
    values: &mut Vec<i64>,
    budget: &mut Budget,
    out: &mut Vec<Vec<i64>>,
) -> Result<()> {
    budget.tick()?;
    if k == sweep.free.len() {
        out.push(values.clone());
        return Ok(());
    }
    let (lo_mark, hi) = sweep.bounds[k];
    let lo = sweep.lower[k]
        .iter()
        .map(|&j| values[sweep.free[j]])
        .fold(lo_mark, i64::max);
    let p = sweep.free[k];
    for v in lo..=hi {
        values[p] = v;
        list_points(sweep, k + 1, values, budget, out)?;
    }
    Ok(())
}

/// Whether `point` is an integer order-preserving extension of the marking.
pub fn is_extension(m: &MarkedPoset, point: &[i64]) -> bool {
    point.len() == m.poset.len()
        && m.marked.iter().all(|a| point[a] == m.values[a])
        && m.poset.covers().iter().all(|&(lo, hi)| point[lo] <= point[hi])
}

/// Values of `g` on one factor poset `I_i ∖ (I_{i−1} ∪ ↑a_i)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LevelMap {
    pub elements: Vec<ElementId>,
    pub values: Vec<i64>,
}

/// Splits a lattice point into its level-set chain and shifted restrictions.
///
/// Needs every gap `t_i ≥ 1`.
pub fn decompose_point(
    m: &MarkedPoset,
    labeling: &NaturalLabeling,
    point: &[i64],
) -> Result<(IdealChain, Vec<LevelMap>)> {
    if let Some(i) = labeling.gaps(m).iter().position(|&t| t < 1) {
        return Err(Error::GapNotPositive(i + 1));
    }
    if !is_extension(m, point) {
        return Err(Error::NotAnExtension(format!("{point:?}")));
    }
    let levels = labeling.values(m);
    let ideals: Vec<Subset> = levels
        .iter()
        .map(|&bound| Subset::from_elements((0..point.len()).filter(|&p| point[p] <= bound)))
        .collect();
    let chain = IdealChain { ideals };
    let maps = chain
        .factor_sets(m, labeling)
        .into_iter()
        .enumerate()
        .map(|(idx, set)| {
            let offset = levels[idx] + 1;
            LevelMap {
                elements: set.iter().collect(),
                values: set.iter().map(|p| point[p] - offset).collect(),
            }
        })
        .collect();
    Ok((chain, maps))
}

/// Inverse of [`decompose_point`].
pub fn reconstruct_point(
    m: &MarkedPoset,
    labeling: &NaturalLabeling,
    chain: &IdealChain,
    maps: &[LevelMap],
) -> Result<Vec<i64>> {
    if let Some(i) = labeling.gaps(m).iter().position(|&t| t < 1) {
        return Err(Error::GapNotPositive(i + 1));
    }
    chain.validate(m, labeling)?;
    let levels = labeling.values(m);
    let order = labeling.order();
    let factors = chain.factor_sets(m, labeling);
    if maps.len() != factors.len() {
        return Err(Error::InvalidInput(format!(
            "expected {} level maps, got {}",
            factors.len(),
            maps.len()
        )));
    }
    let mut point = vec![0i64; m.poset.len()];
    for p in chain.ideals[0].iter() {
        point[p] = levels[0];
    }
    for i in 1..chain.ideals.len() {
        let factor = factors[i - 1];
        let map = &maps[i - 1];
        if Subset::from_elements(map.elements.iter().copied()) != factor || map.elements.len() != map.values.len() {
            return Err(Error::InvalidInput(format!(
                "level map {i} does not cover its factor poset"
            )));
        }
        let gap = levels[i] - levels[i - 1];
        for (&p, &g) in map.elements.iter().zip(&map.values) {
            if !(0..gap).contains(&g) {
                return Err(Error::InvalidInput(format!(
                    "level map {i} value {g} outside [0, {}]",
                    gap - 1
                )));
            }
            point[p] = g + levels[i - 1] + 1;
        }
        let top = chain.ideals[i].intersection(m.poset.up_set(order[i]));
        for p in top.iter() {
            point[p] = levels[i];
        }
    }
    if !is_extension(m, &point) {
        return Err(Error::NotAnExtension(format!("{point:?}")));
    }
    Ok(point)
}
