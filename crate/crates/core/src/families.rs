//! Pitman–Stanley and Gelfand–Tsetlin polytopes as marked posets, flagged
//! faces, and the tableau enumerators used as independent oracles.
//!
//! Both families live on elements `(i, j)` with `i ∈ [k]` (1-based rows) and
//! `j ∈ [0, m+1]`, numbered row-major. Column 0 is marked with the partial
//! sums `z̃_i` and column `m+1` with `ỹ_i`.
//!
//! The tableau side reads the shape `(ỹ_k, .., ỹ_1)/(z̃_k, .., z̃_1)`, so family
//! row `i` is stored as shape row `k − i` (0-based, top to bottom). Every
//! translation between the two indexings goes through [`shape_row`].

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::config::Budget;
use crate::marked::{
    natural_labeling_for, product_formula_partial, product_formula_polynomial, MarkedPoset, NaturalLabeling,
};
use crate::polynomial::MultiPoly;
use crate::poset::{ElementId, Poset, SkewShape};
use crate::{Config, Error, Result};

/// Parameters `k, m, y, z` shared by both polytope families.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FamilySpec {
    pub k: usize,
    pub m: usize,
    pub y: Vec<i64>,
    pub z: Vec<i64>,
}

pub type PsSpec = FamilySpec;
pub type GtSpec = FamilySpec;

impl FamilySpec {
    pub fn new(k: usize, m: usize, y: Vec<i64>, z: Vec<i64>) -> Result<FamilySpec> {
        let spec = FamilySpec { k, m, y, z };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        if self.k == 0 || self.m == 0 {
            return Err(Error::InvalidInput("k and m must be at least 1".into()));
        }
        if self.y.len() != self.k || self.z.len() != self.k {
            return Err(Error::InvalidInput(format!("y and z must have length k = {}", self.k)));
        }
        if self.y.iter().chain(&self.z).any(|&v| v < 0) {
            return Err(Error::InvalidInput("y and z must be nonnegative".into()));
        }
        if self.k * (self.m + 2) > crate::poset::MAX_ELEMENTS {
            return Err(Error::SizeLimit(format!(
                "k(m+2) = {} exceeds the element limit",
                self.k * (self.m + 2)
            )));
        }
        Ok(())
    }

    /// `ỹ_i = y_1 + … + y_i`.
    pub fn y_partial(&self) -> Vec<i64> {
        partial_sums(&self.y)
    }

    /// `z̃_i = z_1 + … + z_i`.
    pub fn z_partial(&self) -> Vec<i64> {
        partial_sums(&self.z)
    }

    pub fn dilate(&self, n: i64) -> FamilySpec {
        FamilySpec {
            k: self.k,
            m: self.m,
            y: self.y.iter().map(|v| v * n).collect(),
            z: self.z.iter().map(|v| v * n).collect(),
        }
    }

    /// The skew shape `(ỹ_k, .., ỹ_1)/(z̃_k, .., z̃_1)`, or `None` when some row
    /// has `z̃_i > ỹ_i` and the polytope is empty.
    pub fn tableau_shape(&self) -> Option<SkewShape> {
        let yt = self.y_partial();
        let zt = self.z_partial();
        if yt.iter().zip(&zt).any(|(y, z)| z > y) {
            return None;
        }
        let lambda = yt.iter().rev().map(|&v| v as usize).collect();
        let mu = zt.iter().rev().map(|&v| v as usize).collect();
        Some(SkewShape::new(lambda, mu).expect("partial sums of nonnegative vectors form a skew shape"))
    }

    fn element(&self, i: usize, j: usize) -> ElementId {
        (i - 1) * (self.m + 2) + j
    }

    fn labels(&self) -> Vec<String> {
        (1..=self.k)
            .flat_map(|i| (0..=self.m + 1).map(move |j| format!("({i},{j})")))
            .collect()
    }

    fn boundary_marks(&self) -> Vec<(ElementId, i64)> {
        let yt = self.y_partial();
        let zt = self.z_partial();
        (1..=self.k)
            .flat_map(|i| {
                [
                    (self.element(i, 0), zt[i - 1]),
                    (self.element(i, self.m + 1), yt[i - 1]),
                ]
            })
            .collect()
    }
}

fn partial_sums(v: &[i64]) -> Vec<i64> {
    v.iter()
        .scan(0i64, |acc, &x| {
            *acc += x;
            Some(*acc)
        })
        .collect()
}

/// Shape row (0-based, top to bottom) holding family row `i` (1-based).
pub fn shape_row(k: usize, i: usize) -> usize {
    k - i
}

/// The `m`-generalized Pitman–Stanley polytope on the grid `[k] × [0, m+1]`.
pub fn pitman_stanley_marked(spec: &PsSpec) -> Result<MarkedPoset> {
    spec.validate()?;
    let mut covers = Vec::new();
    for i in 1..=spec.k {
        for j in 0..=spec.m + 1 {
            if j <= spec.m {
                covers.push((spec.element(i, j), spec.element(i, j + 1)));
            }
            if i < spec.k {
                covers.push((spec.element(i, j), spec.element(i + 1, j)));
            }
        }
    }
    let poset = Poset::from_covers(spec.labels(), &covers)?;
    MarkedPoset::new(poset, &spec.boundary_marks())
}

fn gt_covers(spec: &GtSpec) -> Vec<(ElementId, ElementId)> {
    let mut covers = Vec::new();
    for i in 1..=spec.k {
        for j in 0..=spec.m {
            covers.push((spec.element(i, j), spec.element(i, j + 1)));
            if i < spec.k {
                covers.push((spec.element(i, j + 1), spec.element(i + 1, j)));
            }
        }
    }
    covers
}

/// The skew Gelfand–Tsetlin polytope: `(i,j) ≺ (i,j+1) ≺ (i+1,j)`.
pub fn gelfand_tsetlin_marked(spec: &GtSpec) -> Result<MarkedPoset> {
    spec.validate()?;
    let poset = Poset::from_covers(spec.labels(), &gt_covers(spec))?;
    MarkedPoset::new(poset, &spec.boundary_marks())
}

/// Row flags: row `i` of the tableau uses entries in `[a_i + 1, b_i]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FlagSpec {
    pub a: Vec<i64>,
    pub b: Vec<i64>,
}

impl FlagSpec {
    pub fn full(k: usize, m: usize) -> FlagSpec {
        FlagSpec {
            a: vec![0; k],
            b: vec![m as i64 + 1; k],
        }
    }

    pub fn validate(&self, k: usize, m: usize) -> Result<()> {
        if self.a.len() != k || self.b.len() != k {
            return Err(Error::InvalidInput(format!("flags must have length k = {k}")));
        }
        for (name, v) in [("a", &self.a), ("b", &self.b)] {
            if v.windows(2).any(|w| w[0] > w[1]) {
                return Err(Error::InvalidInput(format!(
                    "flag vector {name} is not weakly increasing"
                )));
            }
        }
        if let Some(i) = (0..k).find(|&i| !(0 <= self.a[i] && self.a[i] < self.b[i] && self.b[i] <= m as i64 + 1)) {
            return Err(Error::InvalidInput(format!(
                "flags need 0 <= a_i < b_i <= m+1, row {} has a = {}, b = {}",
                i + 1,
                self.a[i],
                self.b[i]
            )));
        }
        Ok(())
    }
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// The face of the Gelfand–Tsetlin polytope cut out by `x_{i,j} = x_{i,j−1}`
/// for `j ∉ [a_i + 1, b_i]`, realized on the quotient poset.
pub fn flagged_face_marked(spec: &GtSpec, flags: &FlagSpec) -> Result<MarkedPoset> {
    spec.validate()?;
    flags.validate(spec.k, spec.m)?;
    let n = spec.k * (spec.m + 2);
    let mut parent: Vec<usize> = (0..n).collect();
    for i in 1..=spec.k {
        let (lo, hi) = (flags.a[i - 1] + 1, flags.b[i - 1]);
        for j in 1..=spec.m + 1 {
            if !(lo..=hi).contains(&(j as i64)) {
                let x = find(&mut parent, spec.element(i, j));
                let y = find(&mut parent, spec.element(i, j - 1));
                parent[x.max(y)] = x.min(y);
            }
        }
    }

    // Classes are numbered by their smallest member.
    let roots: Vec<usize> = (0..n).map(|p| find(&mut parent, p)).collect();
    let mut class_of = vec![usize::MAX; n];
    let mut members: Vec<Vec<usize>> = Vec::new();
    for p in 0..n {
        let r = roots[p];
        if class_of[r] == usize::MAX {
            class_of[r] = members.len();
            members.push(Vec::new());
        }
        class_of[p] = class_of[r];
        members[class_of[p]].push(p);
    }

    let labels = spec.labels();
    let class_labels: Vec<String> = members
        .iter()
        .map(|ms| ms.iter().map(|&p| labels[p].as_str()).collect::<Vec<_>>().join("="))
        .collect();
    let mut covers = Vec::new();
    for (lo, hi) in gt_covers(spec) {
        let (cl, ch) = (class_of[lo], class_of[hi]);
        if cl != ch {
            covers.push((cl, ch));
        }
    }
    let poset = match Poset::from_covers(class_labels, &covers) {
        Ok(p) => p,
        Err(Error::CycleDetected(_)) => return Err(Error::QuotientCycle),
        Err(e) => return Err(e),
    };

    let mut marks: HashMap<usize, i64> = HashMap::new();
    for (p, v) in spec.boundary_marks() {
        match marks.get(&class_of[p]) {
            Some(&w) if w != v => return Err(Error::ContradictoryMarks(w, v)),
            _ => {
                marks.insert(class_of[p], v);
            }
        }
    }
    let mut marks: Vec<(usize, i64)> = marks.into_iter().collect();
    marks.sort_unstable();
    MarkedPoset::new(poset, &marks)
}

/// Row-by-row transfer count of fillings of `shape` with entries in
/// `[1, max_entry]`, where row `r` is further restricted to `row_bounds[r]`.
///
/// `row_ok(prev, row)` says whether `row` may sit directly under `prev`; rows
/// are aligned by absolute column.
fn count_fillings(
    shape: &SkewShape,
    row_bounds: &[(u32, u32)],
    cfg: &Config,
    weakly_increasing: bool,
    column_ok: fn(above: u32, below: u32) -> bool,
) -> Result<BigUint> {
    let mut budget = Budget::new(cfg.node_budget, "tableau enumeration");
    // state: contents of the previous row, indexed by absolute column - 1
    let mut states: HashMap<Vec<u32>, BigUint> = HashMap::new();
    states.insert(Vec::new(), BigUint::one());
    let mut prev_start = 0usize;
    for (r, &(lo, hi)) in row_bounds.iter().enumerate().take(shape.rows()) {
        let span = shape.row_span(r);
        let start = *span.start();
        let len = span.count();
        let mut next: HashMap<Vec<u32>, BigUint> = HashMap::new();
        for (prev, count) in &states {
            let mut row = vec![0u32; len];
            let ctx = RowCtx {
                prev,
                prev_start,
                start,
                lo,
                hi,
                weakly_increasing,
                column_ok,
            };
            fill_row(&ctx, 0, &mut row, &mut budget, &mut |row| {
                *next.entry(row.to_vec()).or_insert_with(BigUint::zero) += count;
            })?;
        }
        states = next;
        prev_start = start;
    }
    Ok(states.into_values().sum())
}

struct RowCtx<'a> {
    prev: &'a [u32],
    prev_start: usize,
    start: usize,
    lo: u32,
    hi: u32,
    weakly_increasing: bool,
    column_ok: fn(u32, u32) -> bool,
}

fn fill_row(
    ctx: &RowCtx<'_>,
    c: usize,
    row: &mut [u32],
    budget: &mut Budget,
    emit: &mut dyn FnMut(&[u32]),
) -> Result<()> {
    if c == row.len() {
        emit(row);
        return Ok(());
    }
    budget.tick()?;
    let column = ctx.start + c;
    let above = column
        .checked_sub(ctx.prev_start)
        .and_then(|offset| ctx.prev.get(offset))
        .copied();
    for v in ctx.lo..=ctx.hi {
        if c > 0 {
            let left = row[c - 1];
            let ok = if ctx.weakly_increasing { left <= v } else { left >= v };
            if !ok {
                continue;
            }
        }
        if let Some(a) = above {
            if !(ctx.column_ok)(a, v) {
                continue;
            }
        }
        row[c] = v;
        fill_row(ctx, c + 1, row, budget, emit)?;
    }
    Ok(())
}

/// Fillings weakly decreasing along rows and down columns, entries in `[1, max_entry]`.
pub fn count_plane_partitions(shape: &SkewShape, max_entry: u32, cfg: &Config) -> Result<BigUint> {
    if max_entry == 0 {
        return Err(Error::InvalidInput("max_entry must be at least 1".into()));
    }
    let bounds = vec![(1, max_entry); shape.rows()];
    count_fillings(shape, &bounds, cfg, false, |above, below| above >= below)
}

/// Semistandard fillings: rows weakly increasing, columns strictly increasing.
pub fn count_ssyt(shape: &SkewShape, max_entry: u32, cfg: &Config) -> Result<BigUint> {
    if max_entry == 0 {
        return Err(Error::InvalidInput("max_entry must be at least 1".into()));
    }
    let bounds = vec![(1, max_entry); shape.rows()];
    count_ssyt_bounded(shape, &bounds, cfg)
}

/// Semistandard fillings with shape row `r` confined to `row_bounds[r]`.
pub fn count_ssyt_bounded(shape: &SkewShape, row_bounds: &[(u32, u32)], cfg: &Config) -> Result<BigUint> {
    if row_bounds.len() != shape.rows() {
        return Err(Error::InvalidInput("one entry range per row is required".into()));
    }
    count_fillings(shape, row_bounds, cfg, true, |above, below| above < below)
}

/// Plane partitions counted for a PS spec (0 for an empty polytope).
pub fn plane_partition_count(spec: &PsSpec, cfg: &Config) -> Result<BigUint> {
    match spec.tableau_shape() {
        Some(shape) => count_plane_partitions(&shape, spec.m as u32 + 1, cfg),
        None => Ok(BigUint::zero()),
    }
}

/// Semistandard tableaux counted for a GT spec (0 for an empty polytope).
pub fn ssyt_count(spec: &GtSpec, cfg: &Config) -> Result<BigUint> {
    match spec.tableau_shape() {
        Some(shape) => count_ssyt(&shape, spec.m as u32 + 1, cfg),
        None => Ok(BigUint::zero()),
    }
}

/// Flagged tableaux: family row `i` takes entries in `[a_i + 1, b_i]`.
pub fn flagged_ssyt_count(spec: &GtSpec, flags: &FlagSpec, cfg: &Config) -> Result<BigUint> {
    flags.validate(spec.k, spec.m)?;
    let Some(shape) = spec.tableau_shape() else {
        return Ok(BigUint::zero());
    };
    let mut bounds = vec![(0u32, 0u32); spec.k];
    for i in 1..=spec.k {
        bounds[shape_row(spec.k, i)] = (flags.a[i - 1] as u32 + 1, flags.b[i - 1] as u32);
    }
    count_ssyt_bounded(&shape, &bounds, cfg)
}

/// Maps a lattice point of the PS polytope to its plane partition.
///
/// Family row `i` has `x_{i,j} − z̃_i` entries from `{m+2−j, .., m+1}`, the
/// complement of the count of entries from `[j]` in the order-reversed
/// (weakly increasing) filling. Returns rows top to bottom.
pub fn ps_point_to_plane_partition(spec: &PsSpec, point: &[i64]) -> Result<Vec<Vec<u32>>> {
    let shape = spec
        .tableau_shape()
        .ok_or_else(|| Error::InvalidInput("empty polytope has no points".into()))?;
    let zt = spec.z_partial();
    let mut rows = vec![Vec::new(); spec.k];
    for i in 1..=spec.k {
        let r = shape_row(spec.k, i);
        let span = shape.row_span(r);
        let filled: Vec<u32> = span
            .map(|column| {
                let column = column as i64;
                // smallest j with x_{i,j} >= column, or m+1 if none
                let j = (1..=spec.m)
                    .find(|&j| point[spec.element(i, j)] >= column)
                    .unwrap_or(spec.m + 1);
                (spec.m + 2 - j) as u32
            })
            .collect();
        debug_assert!(zt[i - 1] as usize == shape.mu()[r]);
        rows[r] = filled;
    }
    Ok(rows)
}

/// Inverse of [`ps_point_to_plane_partition`].
pub fn plane_partition_to_ps_point(spec: &PsSpec, rows: &[Vec<u32>]) -> Result<Vec<i64>> {
    let marked = pitman_stanley_marked(spec)?;
    let zt = spec.z_partial();
    let yt = spec.y_partial();
    let mut point = vec![0i64; spec.k * (spec.m + 2)];
    for i in 1..=spec.k {
        let row = rows
            .get(shape_row(spec.k, i))
            .ok_or_else(|| Error::InvalidInput("missing row".into()))?;
        point[spec.element(i, 0)] = zt[i - 1];
        point[spec.element(i, spec.m + 1)] = yt[i - 1];
        for j in 1..=spec.m {
            let threshold = (spec.m + 2 - j) as u32;
            point[spec.element(i, j)] = zt[i - 1] + row.iter().filter(|&&e| e >= threshold).count() as i64;
        }
    }
    if !crate::marked::is_extension(&marked, &point) {
        return Err(Error::NotAnExtension(format!("{point:?}")));
    }
    Ok(point)
}

/// Whether `rows` is a plane partition of `shape` with entries in `[1, max_entry]`.
pub fn is_plane_partition(shape: &SkewShape, rows: &[Vec<u32>], max_entry: u32) -> bool {
    if rows.len() != shape.rows() {
        return false;
    }
    let cell = |r: usize, c: usize| -> Option<u32> {
        let span = shape.row_span(r);
        span.contains(&c).then(|| rows[r][c - span.start()])
    };
    (0..shape.rows()).all(|r| {
        rows[r].len() == shape.row_span(r).count()
            && rows[r].iter().all(|&e| (1..=max_entry).contains(&e))
            && rows[r].windows(2).all(|w| w[0] >= w[1])
            && (r == 0
                || shape
                    .row_span(r)
                    .all(|c| cell(r - 1, c).is_none_or(|above| above >= cell(r, c).unwrap())))
    })
}

/// The PS lattice-point count with `z = 0` as a polynomial in `y_1..y_k`.
///
/// Uses the structural labeling `(1,0), .., (k,0), (1,m+1), .., (k,m+1)`,
/// valid for every `y` because `z̃ = 0 ≤ ỹ_1 ≤ … ≤ ỹ_k`. The first `k − 1`
/// gaps vanish and gap `k − 1 + i` equals `y_i`.
pub fn ps_polynomial_in_y(k: usize, m: usize, cfg: &Config) -> Result<MultiPoly> {
    let spec = FamilySpec::new(k, m, vec![1; k], vec![0; k])?;
    let marked = pitman_stanley_marked(&spec)?;
    let order = (1..=k)
        .map(|i| spec.element(i, 0))
        .chain((1..=k).map(|i| spec.element(i, m + 1)))
        .collect();
    let labeling = NaturalLabeling::new(&marked, order)?;
    let fixed: Vec<Option<i64>> = (1..2 * k).map(|v| (v < k).then_some(0)).collect();
    let f = product_formula_partial(&marked, &labeling, &fixed, cfg)?;
    let mapping: Vec<Option<usize>> = (1..2 * k).map(|v| (v >= k).then(|| v - k)).collect();
    f.substitute_vars(&mapping, k)
}

/// Multivariate polynomial for a family instance under its canonical labeling.
pub fn family_polynomial(marked: &MarkedPoset, cfg: &Config) -> Result<(NaturalLabeling, MultiPoly)> {
    let labeling = natural_labeling_for(marked)?;
    let f = product_formula_polynomial(marked, &labeling, cfg)?;
    Ok((labeling, f))
}

/// Family instance document.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyJson {
    pub family: String,
    pub k: usize,
    pub m: usize,
    pub y: Vec<i64>,
    pub z: Vec<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b: Option<Vec<i64>>,
}

/// A parsed family instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    PitmanStanley(PsSpec),
    GelfandTsetlin(GtSpec),
    Flagged(GtSpec, FlagSpec),
}

impl Family {
    pub fn from_json(doc: &FamilyJson) -> Result<Family> {
        let spec = FamilySpec::new(doc.k, doc.m, doc.y.clone(), doc.z.clone())?;
        match doc.family.as_str() {
            "ps" => Ok(Family::PitmanStanley(spec)),
            "gt" => Ok(Family::GelfandTsetlin(spec)),
            "gt-flagged" => {
                let (Some(a), Some(b)) = (&doc.a, &doc.b) else {
                    return Err(Error::InvalidInput("gt-flagged needs flag vectors a and b".into()));
                };
                let flags = FlagSpec {
                    a: a.clone(),
                    b: b.clone(),
                };
                flags.validate(spec.k, spec.m)?;
                Ok(Family::Flagged(spec, flags))
            }
            other => Err(Error::InvalidInput(format!("unknown family {other:?}"))),
        }
    }

    pub fn to_json(&self) -> FamilyJson {
        let (name, spec, flags) = match self {
            Family::PitmanStanley(s) => ("ps", s, None),
            Family::GelfandTsetlin(s) => ("gt", s, None),
            Family::Flagged(s, f) => ("gt-flagged", s, Some(f)),
        };
        FamilyJson {
            family: name.into(),
            k: spec.k,
            m: spec.m,
            y: spec.y.clone(),
            z: spec.z.clone(),
            a: flags.map(|f| f.a.clone()),
            b: flags.map(|f| f.b.clone()),
        }
    }

    pub fn marked_poset(&self) -> Result<MarkedPoset> {
        match self {
            Family::PitmanStanley(s) => pitman_stanley_marked(s),
            Family::GelfandTsetlin(s) => gelfand_tsetlin_marked(s),
            Family::Flagged(s, f) => flagged_face_marked(s, f),
        }
    }

    /// Count from the family's tableau enumerator.
    pub fn tableau_count(&self, cfg: &Config) -> Result<BigUint> {
        match self {
            Family::PitmanStanley(s) => plane_partition_count(s, cfg),
            Family::GelfandTsetlin(s) => ssyt_count(s, cfg),
            Family::Flagged(s, f) => flagged_ssyt_count(s, f, cfg),
        }
    }
}
