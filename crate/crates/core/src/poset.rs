//! Finite posets on at most 64 elements, with subsets stored as bit masks.
//!
//! Element ids are dense indices `0..n`. The order relation is stored as one
//! up-set and one down-set mask per element, so comparability, ideal and
//! filter tests are a handful of word operations.

use std::collections::{HashMap, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::{Config, Error, Result};

/// Largest ground set supported by the engines.
pub const MAX_ELEMENTS: usize = 64;

pub type ElementId = usize;

/// A subset of a poset's ground set.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subset(pub u64);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    /// The full ground set `{0, .., n-1}`.
    pub fn full(n: usize) -> Subset {
        debug_assert!(n <= MAX_ELEMENTS);
        if n == MAX_ELEMENTS {
            Subset(u64::MAX)
        } else {
            Subset((1u64 << n) - 1)
        }
    }

    pub fn singleton(p: ElementId) -> Subset {
        Subset(1u64 << p)
    }

    pub fn from_elements<I: IntoIterator<Item = ElementId>>(elements: I) -> Subset {
        Subset(elements.into_iter().fold(0u64, |m, p| m | (1u64 << p)))
    }

    #[inline]
    pub fn contains(self, p: ElementId) -> bool {
        self.0 >> p & 1 == 1
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn insert(self, p: ElementId) -> Subset {
        Subset(self.0 | (1u64 << p))
    }

    #[inline]
    pub fn remove(self, p: ElementId) -> Subset {
        Subset(self.0 & !(1u64 << p))
    }

    #[inline]
    pub fn union(self, other: Subset) -> Subset {
        Subset(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: Subset) -> Subset {
        Subset(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: Subset) -> Subset {
        Subset(self.0 & !other.0)
    }

    #[inline]
    pub fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    /// Complement within a ground set of `n` elements.
    pub fn complement(self, n: usize) -> Subset {
        Subset::full(n).difference(self)
    }

    /// Members in increasing order.
    pub fn iter(self) -> impl Iterator<Item = ElementId> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let p = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(p)
        })
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// A finite poset, normalized to its transitive reduction.
#[derive(Clone, PartialEq, Eq)]
pub struct Poset {
    labels: Vec<String>,
    covers: Vec<(ElementId, ElementId)>,
    /// `up[p]` = {q : p ⪯ q}.
    up: Vec<u64>,
    /// `down[p]` = {q : q ⪯ p}.
    down: Vec<u64>,
}

impl fmt::Debug for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Poset")
            .field("labels", &self.labels)
            .field("covers", &self.covers)
            .finish()
    }
}

impl Poset {
    /// Builds a poset from labels and (lower, upper) relation pairs.
    ///
    /// The pairs need not be covers: the transitive closure is computed and the
    /// stored cover list is its transitive reduction.
    pub fn from_covers<S: Into<String>>(
        labels: impl IntoIterator<Item = S>,
        covers: &[(ElementId, ElementId)],
    ) -> Result<Poset> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let n = labels.len();
        if n > MAX_ELEMENTS {
            return Err(Error::SizeLimit(format!(
                "{n} elements exceeds the {MAX_ELEMENTS}-element engine limit"
            )));
        }
        let mut seen = HashSet::with_capacity(n);
        for label in &labels {
            if !seen.insert(label.as_str()) {
                return Err(Error::DuplicateElement(label.clone()));
            }
        }
        let mut succ = vec![0u64; n];
        for &(lo, hi) in covers {
            for index in [lo, hi] {
                if index >= n {
                    return Err(Error::IndexOutOfRange { index, len: n });
                }
            }
            if lo == hi {
                return Err(Error::CycleDetected(lo));
            }
            succ[lo] |= 1u64 << hi;
        }

        // Kahn's algorithm; every element left over lies on or above a cycle.
        let mut indegree = vec![0usize; n];
        for &s in &succ {
            for q in Subset(s).iter() {
                indegree[q] += 1;
            }
        }
        let mut order = Vec::with_capacity(n);
        let mut ready: Vec<ElementId> = (0..n).filter(|&p| indegree[p] == 0).collect();
        while let Some(p) = ready.pop() {
            order.push(p);
            for q in Subset(succ[p]).iter() {
                indegree[q] -= 1;
                if indegree[q] == 0 {
                    ready.push(q);
                }
            }
        }
        if order.len() < n {
            let stuck = (0..n).find(|&p| indegree[p] > 0).unwrap_or(0);
            return Err(Error::CycleDetected(stuck));
        }

        let mut up = vec![0u64; n];
        for &p in order.iter().rev() {
            let mut mask = 1u64 << p;
            for q in Subset(succ[p]).iter() {
                mask |= up[q];
            }
            up[p] = mask;
        }
        Ok(Poset::from_up_sets(labels, up))
    }

    /// Builds a poset from reflexive, transitive up-set masks.
    pub(crate) fn from_up_sets(labels: Vec<String>, up: Vec<u64>) -> Poset {
        let n = labels.len();
        let mut down = vec![0u64; n];
        for (p, &mask) in up.iter().enumerate() {
            for q in Subset(mask).iter() {
                down[q] |= 1u64 << p;
            }
        }
        let mut covers = Vec::new();
        for p in 0..n {
            let strict = up[p] & !(1u64 << p);
            let mut implied = 0u64;
            for q in Subset(strict).iter() {
                implied |= up[q] & !(1u64 << q);
            }
            for q in Subset(strict & !implied).iter() {
                covers.push((p, q));
            }
        }
        Poset {
            labels,
            covers,
            up,
            down,
        }
    }

    pub fn empty() -> Poset {
        Poset::from_up_sets(Vec::new(), Vec::new())
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, p: ElementId) -> &str {
        &self.labels[p]
    }

    pub fn index_of(&self, label: &str) -> Option<ElementId> {
        self.labels.iter().position(|l| l == label)
    }

    /// Cover pairs `(lower, upper)` of the transitive reduction, sorted.
    pub fn covers(&self) -> &[(ElementId, ElementId)] {
        &self.covers
    }

    pub fn ground(&self) -> Subset {
        Subset::full(self.len())
    }

    /// `p ⪯ q`.
    #[inline]
    pub fn leq(&self, p: ElementId, q: ElementId) -> bool {
        self.up[p] >> q & 1 == 1
    }

    /// `p ≺ q`.
    #[inline]
    pub fn lt(&self, p: ElementId, q: ElementId) -> bool {
        p != q && self.leq(p, q)
    }

    pub fn comparable(&self, p: ElementId, q: ElementId) -> bool {
        self.leq(p, q) || self.leq(q, p)
    }

    /// The filter `↑p = {q : p ⪯ q}`.
    #[inline]
    pub fn up_set(&self, p: ElementId) -> Subset {
        Subset(self.up[p])
    }

    /// The principal ideal `↓p = {q : q ⪯ p}`.
    #[inline]
    pub fn down_set(&self, p: ElementId) -> Subset {
        Subset(self.down[p])
    }

    pub fn upper_covers(&self, p: ElementId) -> impl Iterator<Item = ElementId> + '_ {
        self.covers.iter().filter(move |c| c.0 == p).map(|c| c.1)
    }

    pub fn lower_covers(&self, p: ElementId) -> impl Iterator<Item = ElementId> + '_ {
        self.covers.iter().filter(move |c| c.1 == p).map(|c| c.0)
    }

    pub fn minimal_elements(&self) -> Subset {
        Subset::from_elements((0..self.len()).filter(|&p| self.down[p] == 1u64 << p))
    }

    pub fn maximal_elements(&self) -> Subset {
        Subset::from_elements((0..self.len()).filter(|&p| self.up[p] == 1u64 << p))
    }

    /// Minimal elements of `s` under the induced order.
    pub fn minimal_of(&self, s: Subset) -> Subset {
        Subset::from_elements(s.iter().filter(|&p| self.down[p] & s.0 == 1u64 << p))
    }

    pub fn is_ideal(&self, s: Subset) -> bool {
        s.iter().all(|p| Subset(self.down[p]).is_subset_of(s))
    }

    pub fn is_filter(&self, s: Subset) -> bool {
        s.iter().all(|p| Subset(self.up[p]).is_subset_of(s))
    }

    /// Smallest ideal containing `s`.
    pub fn ideal_closure(&self, s: Subset) -> Subset {
        Subset(s.iter().fold(0u64, |m, p| m | self.down[p]))
    }

    /// Smallest filter containing `s`.
    pub fn filter_closure(&self, s: Subset) -> Subset {
        Subset(s.iter().fold(0u64, |m, p| m | self.up[p]))
    }

    /// A linear extension that always takes the smallest available id.
    pub fn topological_order(&self) -> Vec<ElementId> {
        let n = self.len();
        let mut placed = 0u64;
        let mut order = Vec::with_capacity(n);
        while order.len() < n {
            let next = (0..n)
                .find(|&p| placed >> p & 1 == 0 && self.down[p] & !(1u64 << p) & !placed == 0)
                .expect("acyclic order always has an available element");
            placed |= 1u64 << next;
            order.push(next);
        }
        order
    }

    /// Every order ideal exactly once, sorted by size and then by mask value.
    pub fn enumerate_ideals(&self, cfg: &Config) -> Result<Vec<Subset>> {
        let n = self.len();
        let mut all = vec![Subset::EMPTY];
        let mut level = vec![Subset::EMPTY];
        while !level.is_empty() {
            let mut next = HashSet::new();
            for &ideal in &level {
                let rest = ideal.complement(n);
                for p in self.minimal_of(rest).iter() {
                    next.insert(ideal.insert(p));
                }
            }
            let mut next: Vec<Subset> = next.into_iter().collect();
            next.sort_unstable();
            if all.len() + next.len() > cfg.max_ideals {
                return Err(Error::SizeLimit(format!(
                    "ideal lattice exceeds the cap of {} ideals",
                    cfg.max_ideals
                )));
            }
            all.extend_from_slice(&next);
            level = next;
        }
        Ok(all)
    }

    /// The subposet on `s` with the inherited order; element `i` of the result
    /// is `s`'s `i`-th smallest id.
    pub fn induced_subposet(&self, s: Subset) -> SubPoset {
        let parent: Vec<ElementId> = s.iter().collect();
        let mut position = [usize::MAX; MAX_ELEMENTS];
        for (i, &p) in parent.iter().enumerate() {
            position[p] = i;
        }
        let up = parent
            .iter()
            .map(|&p| {
                Subset(self.up[p] & s.0)
                    .iter()
                    .fold(0u64, |m, q| m | (1u64 << position[q]))
            })
            .collect();
        let labels = parent.iter().map(|&p| self.labels[p].clone()).collect();
        SubPoset {
            poset: Poset::from_up_sets(labels, up),
            parent,
        }
    }

    /// All linear extensions in lexicographic order of element ids.
    pub fn linear_extensions(&self) -> Result<Vec<Vec<ElementId>>> {
        const LIMIT: usize = 12;
        if self.len() > LIMIT {
            return Err(Error::SizeLimit(format!(
                "linear extensions are only enumerated for at most {LIMIT} elements"
            )));
        }
        let mut out = Vec::new();
        let mut prefix = Vec::with_capacity(self.len());
        self.extend_linear(0, &mut prefix, &mut out);
        Ok(out)
    }

    fn extend_linear(&self, placed: u64, prefix: &mut Vec<ElementId>, out: &mut Vec<Vec<ElementId>>) {
        if prefix.len() == self.len() {
            out.push(prefix.clone());
            return;
        }
        for p in 0..self.len() {
            if placed >> p & 1 == 0 && self.down[p] & !(1u64 << p) & !placed == 0 {
                prefix.push(p);
                self.extend_linear(placed | (1u64 << p), prefix, out);
                prefix.pop();
            }
        }
    }

    pub fn chain(k: usize) -> Poset {
        let covers: Vec<_> = (1..k).map(|i| (i - 1, i)).collect();
        Poset::from_covers((1..=k).map(|i| format!("x{i}")), &covers).expect("chain is a valid poset")
    }

    pub fn antichain(k: usize) -> Poset {
        Poset::from_covers((1..=k).map(|i| format!("x{i}")), &[]).expect("antichain is a valid poset")
    }

    /// Product order on `[a] × [b]`, elements `(i,j)` in row-major order.
    pub fn grid(a: usize, b: usize) -> Poset {
        let id = |i: usize, j: usize| i * b + j;
        let mut covers = Vec::new();
        let mut labels = Vec::with_capacity(a * b);
        for i in 0..a {
            for j in 0..b {
                labels.push(format!("({},{})", i + 1, j + 1));
                if i + 1 < a {
                    covers.push((id(i, j), id(i + 1, j)));
                }
                if j + 1 < b {
                    covers.push((id(i, j), id(i, j + 1)));
                }
            }
        }
        Poset::from_covers(labels, &covers).expect("grid is a valid poset")
    }

    /// Cell poset of a skew shape: `(i+1,j) ≺ (i,j)` and `(i,j+1) ≺ (i,j)`.
    ///
    /// Cells are numbered row-major (row ascending, then column ascending).
    pub fn skew_shape(shape: &SkewShape) -> Result<Poset> {
        let cells = shape.cells();
        if cells.is_empty() {
            return Err(Error::EmptyShape);
        }
        let index: HashMap<(usize, usize), ElementId> = cells.iter().enumerate().map(|(k, &c)| (c, k)).collect();
        let mut covers = Vec::new();
        for (k, &(i, j)) in cells.iter().enumerate() {
            if let Some(&below) = index.get(&(i + 1, j)) {
                covers.push((below, k));
            }
            if let Some(&right) = index.get(&(i, j + 1)) {
                covers.push((right, k));
            }
        }
        let labels = cells.iter().map(|(i, j)| format!("({i},{j})"));
        Poset::from_covers(labels, &covers)
    }

    /// Reconstructs the reflexive-transitive closure from the cover list alone.
    pub fn closure_from_covers(&self) -> Vec<u64> {
        let n = self.len();
        let mut up: Vec<u64> = (0..n).map(|p| 1u64 << p).collect();
        loop {
            let mut changed = false;
            for &(lo, hi) in &self.covers {
                let merged = up[lo] | up[hi];
                if merged != up[lo] {
                    up[lo] = merged;
                    changed = true;
                }
            }
            if !changed {
                return up;
            }
        }
    }

    pub fn to_json(&self) -> PosetJson {
        PosetJson {
            elements: self.labels.clone(),
            covers: self.covers.iter().map(|&(a, b)| [a, b]).collect(),
        }
    }

    pub fn from_json(doc: &PosetJson) -> Result<Poset> {
        let covers: Vec<_> = doc.covers.iter().map(|c| (c[0], c[1])).collect();
        Poset::from_covers(doc.elements.iter().cloned(), &covers)
    }
}

/// An induced subposet together with its embedding into the parent.
#[derive(Clone, Debug)]
pub struct SubPoset {
    pub poset: Poset,
    pub parent: Vec<ElementId>,
}

/// A skew shape `λ/μ`; `mu` is padded with zeros to the length of `lambda`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewShape {
    lambda: Vec<usize>,
    mu: Vec<usize>,
}

impl SkewShape {
    pub fn new(lambda: Vec<usize>, mu: Vec<usize>) -> Result<SkewShape> {
        if mu.len() > lambda.len() {
            return Err(Error::InvalidShape(format!(
                "mu has {} parts but lambda only {}",
                mu.len(),
                lambda.len()
            )));
        }
        for (name, part) in [("lambda", &lambda), ("mu", &mu)] {
            if part.windows(2).any(|w| w[0] < w[1]) {
                return Err(Error::InvalidShape(format!("{name} is not weakly decreasing")));
            }
        }
        let mut mu = mu;
        mu.resize(lambda.len(), 0);
        if let Some(i) = (0..lambda.len()).find(|&i| mu[i] > lambda[i]) {
            return Err(Error::InvalidShape(format!(
                "mu_{} = {} exceeds lambda_{} = {}",
                i + 1,
                mu[i],
                i + 1,
                lambda[i]
            )));
        }
        Ok(SkewShape { lambda, mu })
    }

    pub fn straight(lambda: Vec<usize>) -> Result<SkewShape> {
        SkewShape::new(lambda, Vec::new())
    }

    pub fn lambda(&self) -> &[usize] {
        &self.lambda
    }

    pub fn mu(&self) -> &[usize] {
        &self.mu
    }

    pub fn rows(&self) -> usize {
        self.lambda.len()
    }

    /// Columns `(mu_i, lambda_i]` of row `i` (0-based row index).
    pub fn row_span(&self, i: usize) -> std::ops::RangeInclusive<usize> {
        self.mu[i] + 1..=self.lambda[i]
    }

    pub fn cell_count(&self) -> usize {
        self.lambda.iter().zip(&self.mu).map(|(l, m)| l - m).sum()
    }

    /// Cells `(i, j)`, 1-based, in row-major order.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        (0..self.rows())
            .flat_map(|i| self.row_span(i).map(move |j| (i + 1, j)))
            .collect()
    }

    pub fn to_json(&self) -> ShapeJson {
        let mut mu = self.mu.clone();
        while mu.last() == Some(&0) {
            mu.pop();
        }
        ShapeJson {
            lambda: self.lambda.clone(),
            mu,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetJson {
    pub elements: Vec<String>,
    pub covers: Vec<[usize; 2]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShapeJson {
    pub lambda: Vec<usize>,
    #[serde(default)]
    pub mu: Vec<usize>,
}

impl ShapeJson {
    pub fn to_shape(&self) -> Result<SkewShape> {
        SkewShape::new(self.lambda.clone(), self.mu.clone())
    }
}
