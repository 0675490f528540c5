//! Seeded instance generators.
//!
//! All generators draw from [`ChaCha8Rng`] seeded with a `u64`, so a seed
//! reproduces the same instances on every platform.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::marked::MarkedPoset;
use crate::poset::{Poset, Subset};

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random poset on `n` elements: each pair is related with probability
/// `density` along a random permutation, then the order is closed.
pub fn random_poset<R: Rng>(rng: &mut R, n: usize, density: f64) -> Poset {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let mut relations = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(density) {
                relations.push((perm[i], perm[j]));
            }
        }
    }
    Poset::from_covers((0..n).map(|i| format!("p{i}")), &relations).expect("relations along a permutation are acyclic")
}

/// Shape of randomly generated marked posets.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MarkedParams {
    pub max_elements: usize,
    pub max_marked: usize,
    pub max_mark: i64,
}

impl Default for MarkedParams {
    fn default() -> Self {
        Self {
            max_elements: 8,
            max_marked: 4,
            max_mark: 5,
        }
    }
}

/// A random marked poset whose marking lies in the order cone.
pub fn random_marked_poset<R: Rng>(rng: &mut R, params: MarkedParams) -> MarkedPoset {
    loop {
        let n = rng.gen_range(1..=params.max_elements);
        let density = rng.gen_range(0.2..0.7);
        let poset = random_poset(rng, n, density);
        let extremal = poset.minimal_elements().union(poset.maximal_elements());
        if extremal.len() > params.max_marked {
            continue;
        }
        let mut others: Vec<usize> = extremal.complement(n).iter().collect();
        others.shuffle(rng);
        let extra = rng.gen_range(0..=(params.max_marked - extremal.len()).min(others.len()));
        let marked = others[..extra].iter().fold(extremal, |s, &p| s.insert(p));
        return mark_in_cone(rng, poset, marked, params.max_mark);
    }
}

/// Marks `marked` with values in `[0, max_mark]`, raised where needed so the
/// marking is order preserving.
pub fn mark_in_cone<R: Rng>(rng: &mut R, poset: Poset, marked: Subset, max_mark: i64) -> MarkedPoset {
    let mut values = vec![0i64; poset.len()];
    for p in marked.iter() {
        values[p] = rng.gen_range(0..=max_mark);
    }
    for p in poset.topological_order() {
        if marked.contains(p) {
            let floor = poset
                .down_set(p)
                .intersection(marked)
                .iter()
                .map(|q| values[q])
                .max()
                .unwrap_or(values[p]);
            values[p] = values[p].max(floor);
        }
    }
    let marks: Vec<_> = marked.iter().map(|p| (p, values[p])).collect();
    MarkedPoset::new(poset, &marks).expect("extremal elements are marked")
}
