//! Formula-versus-oracle checks shared by the test suites and the CLI.

use std::collections::HashSet;

use num_bigint::{BigInt, BigUint};
use num_traits::Signed;

use crate::families::Family;
use crate::marked::{
    count_bruteforce, decompose_point, ehrhart_polynomial, enumerate_points, evaluate_marked, natural_labeling_for,
    product_formula_polynomial, reconstruct_point, MarkedPoset,
};
use crate::polynomial::{to_integer, MultiPoly, UniPoly};
use crate::random::{random_marked_poset, rng_from_seed, MarkedParams};
use crate::{Config, Exec, Result};

/// Formula value against the direct count for one marked poset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleOutcome {
    pub formula: BigInt,
    pub bruteforce: BigUint,
}

impl OracleOutcome {
    pub fn agrees(&self) -> bool {
        !self.formula.is_negative() && self.formula.magnitude() == &self.bruteforce
    }
}

pub fn oracle_equality(m: &MarkedPoset, cfg: &Config) -> Result<OracleOutcome> {
    let labeling = natural_labeling_for(m)?;
    let f = product_formula_polynomial(m, &labeling, cfg)?;
    Ok(OracleOutcome {
        formula: evaluate_marked(m, &labeling, &f)?,
        bruteforce: count_bruteforce(m, cfg)?,
    })
}

/// `trials` seeded random marked posets, checked in parallel.
///
/// Instances are drawn sequentially from the seed before any checking starts,
/// so the outcome list is identical across thread counts.
pub fn random_oracle_trials(
    seed: u64,
    trials: usize,
    params: MarkedParams,
    cfg: &Config,
) -> Result<Vec<(MarkedPoset, OracleOutcome)>> {
    let mut rng = rng_from_seed(seed);
    let instances: Vec<MarkedPoset> = (0..trials).map(|_| random_marked_poset(&mut rng, params)).collect();
    let inner = cfg.clone().with_exec(Exec::Sequential);
    let outcomes = cfg.exec.map(&instances, |m| oracle_equality(m, &inner));
    instances
        .into_iter()
        .zip(outcomes)
        .map(|(m, o)| o.map(|o| (m, o)))
        .collect()
}

/// `(n, E(n), direct count of the n-th dilate)` for each requested `n`.
pub fn ehrhart_consistency(
    m: &MarkedPoset,
    ehrhart: &UniPoly,
    dilations: &[i64],
    cfg: &Config,
) -> Result<Vec<(i64, BigInt, BigUint)>> {
    dilations
        .iter()
        .map(|&n| {
            let predicted = to_integer(&ehrhart.evaluate_int(n))?;
            Ok((n, predicted, count_bruteforce(&m.dilate(n), cfg)?))
        })
        .collect()
}

/// Everything checked for a family instance.
#[derive(Clone, Debug)]
pub struct FamilyReport {
    pub bruteforce: BigUint,
    pub tableaux: BigUint,
    pub formula: BigInt,
    pub polynomial: MultiPoly,
    pub ehrhart: UniPoly,
    pub dilations: Vec<(i64, BigInt, BigUint)>,
}

impl FamilyReport {
    pub fn counts_agree(&self) -> bool {
        self.bruteforce == self.tableaux && BigInt::from(self.bruteforce.clone()) == self.formula
    }

    pub fn dilations_agree(&self) -> bool {
        self.dilations
            .iter()
            .all(|(_, predicted, counted)| *predicted == BigInt::from(counted.clone()))
    }

    pub fn positive(&self) -> bool {
        self.polynomial.is_coefficient_nonnegative() && self.ehrhart.is_coefficient_nonnegative()
    }
}

pub fn family_report(family: &Family, dilations: &[i64], cfg: &Config) -> Result<FamilyReport> {
    let m = family.marked_poset()?;
    let labeling = natural_labeling_for(&m)?;
    let polynomial = product_formula_polynomial(&m, &labeling, cfg)?;
    let ehrhart = ehrhart_polynomial(&m, cfg)?;
    Ok(FamilyReport {
        bruteforce: count_bruteforce(&m, cfg)?,
        tableaux: family.tableau_count(cfg)?,
        formula: evaluate_marked(&m, &labeling, &polynomial)?,
        dilations: ehrhart_consistency(&m, &ehrhart, dilations, cfg)?,
        polynomial,
        ehrhart,
    })
}

/// Round-trips every lattice point through the level-set decomposition.
///
/// Returns the number of points; fails if any round trip differs or two
/// points decompose identically.
pub fn bijection_round_trip(m: &MarkedPoset, cfg: &Config) -> Result<Result<usize, String>> {
    let labeling = natural_labeling_for(m)?;
    let points = enumerate_points(m, cfg)?;
    let mut images = HashSet::with_capacity(points.len());
    for x in &points {
        let (chain, maps) = decompose_point(m, &labeling, x)?;
        let back = reconstruct_point(m, &labeling, &chain, &maps)?;
        if &back != x {
            return Ok(Err(format!("round trip changed {x:?} into {back:?}")));
        }
        if !images.insert((chain, maps)) {
            return Ok(Err(format!("decomposition of {x:?} collides with another point")));
        }
    }
    Ok(Ok(points.len()))
}
