//! Acceptance run: one PASS/FAIL line per criterion, exit status 1 on any failure.

mod oracles;

use std::collections::HashSet;
use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use num_bigint::{BigInt, BigUint};
use rand::Rng;

use marked_order::families::{
    flagged_face_marked, flagged_ssyt_count, gelfand_tsetlin_marked, pitman_stanley_marked, plane_partition_count,
    ps_polynomial_in_y, shape_row, ssyt_count, FamilySpec, FlagSpec,
};
use marked_order::marked::{
    count_bruteforce, decompose_point, ehrhart_polynomial, evaluate_marked, natural_labeling_for,
    product_formula_polynomial, reconstruct_point, MarkedPoset,
};
use marked_order::order_poly::{count_maps_bruteforce, omega, omega_via_descents};
use marked_order::polynomial::{rat, to_integer, UniPoly};
use marked_order::random::{random_marked_poset, random_poset, rng_from_seed, MarkedParams};
use marked_order::verify::random_oracle_trials;
use marked_order::{Config, Poset, SkewShape};

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn cfg() -> Config {
    Config::default()
}

fn formula_value(m: &MarkedPoset) -> BigInt {
    let l = natural_labeling_for(m).unwrap();
    let f = product_formula_polynomial(m, &l, &cfg()).unwrap();
    evaluate_marked(m, &l, &f).unwrap()
}

fn c1_random_oracle() -> Check {
    let params = MarkedParams::default();
    let trials = random_oracle_trials(2024, 100, params, &cfg()).map_err(|e| e.to_string())?;
    ensure(trials.len() == 100, || "wrong trial count".into())?;
    for (i, (m, outcome)) in trials.iter().enumerate() {
        let p = m.poset();
        ensure(
            p.len() <= params.max_elements && m.marked().len() <= params.max_marked,
            || format!("trial {i} out of size range"),
        )?;
        ensure(
            m.marks().iter().all(|&(_, v)| (0..=params.max_mark).contains(&v)) && m.in_order_cone(),
            || format!("trial {i} has marks outside [0,5] or the order cone"),
        )?;
        let naive = BigUint::from(oracles::extensions(m));
        ensure(outcome.agrees() && outcome.bruteforce == naive, || {
            format!(
                "trial {i}: formula {} count {} naive {naive}",
                outcome.formula, outcome.bruteforce
            )
        })?;
    }
    Ok("100/100 random marked posets agree with two independent counts".into())
}

fn c2_skew_fixture() -> Check {
    let shape = SkewShape::new(vec![6, 5, 3, 3], vec![2, 1, 1]).unwrap();
    let p = Poset::skew_shape(&shape).unwrap();
    ensure(p.len() == 13, || format!("expected 13 cells, got {}", p.len()))?;
    let w = omega(&p, &cfg()).map_err(|e| e.to_string())?;
    ensure(w.degree() == Some(13), || format!("degree {:?}", w.degree()))?;
    ensure(w.evaluate_int(1) == rat(1), || "value at 1 is not 1".into())?;
    let ideals = oracles::ideals(&p);
    ensure(w.evaluate_int(2) == rat(ideals as i64), || {
        format!("value at 2 is not {ideals}")
    })?;
    for n in 1..=3 {
        let naive = oracles::maps(&p, n);
        let dfs = count_maps_bruteforce(&p, n as u64, &cfg()).unwrap();
        ensure(
            w.evaluate_int(n) == rat(naive as i64) && dfs == BigUint::from(naive),
            || format!("n={n}: polynomial {} naive {naive} dfs {dfs}", w.evaluate_int(n)),
        )?;
    }
    ensure(w.is_coefficient_nonnegative(), || {
        format!("negative terms {:?}", w.negative_terms())
    })?;
    Ok(format!(
        "6533/211: degree 13, {ideals} ideals, values 1..3 match, coefficients >= 0"
    ))
}

fn c3_ps_fixture() -> Check {
    let spec = FamilySpec::new(5, 3, vec![2, 2, 0, 3, 0], vec![0, 1, 1, 2, 1]).unwrap();
    let m = pitman_stanley_marked(&spec).unwrap();
    let marked_count = count_bruteforce(&m, &cfg()).unwrap();
    let pp = plane_partition_count(&spec, &cfg()).unwrap();
    let naive_pp = oracles::plane_partitions(&spec.tableau_shape().unwrap(), spec.m as u32 + 1);
    let formula = formula_value(&m);
    ensure(
        marked_count == pp && pp == BigUint::from(naive_pp) && BigInt::from(pp.clone()) == formula,
        || format!("marked {marked_count} pp {pp} naive {naive_pp} formula {formula}"),
    )?;
    let e = ehrhart_polynomial(&m, &cfg()).unwrap();
    ensure(e.is_coefficient_nonnegative(), || {
        format!("negative Ehrhart terms {:?}", e.negative_terms())
    })?;
    for n in 1..=3 {
        let dilated = pitman_stanley_marked(&spec.dilate(n)).unwrap();
        ensure(dilated == m.dilate(n), || {
            format!("PS(ny,nz) differs from the {n}-th dilate")
        })?;
        let direct = count_bruteforce(&dilated, &cfg()).unwrap();
        let tableaux = plane_partition_count(&spec.dilate(n), &cfg()).unwrap();
        let predicted = to_integer(&e.evaluate_int(n)).unwrap();
        ensure(direct == tableaux && BigInt::from(direct.clone()) == predicted, || {
            format!("n={n}: direct {direct} tableaux {tableaux} ehrhart {predicted}")
        })?;
    }
    Ok(format!(
        "count {marked_count} from all three routes; Ehrhart degree {} nonnegative, n=1..3 match",
        e.degree().unwrap_or(0)
    ))
}

fn c4_gt_fixture() -> Check {
    let spec = FamilySpec::new(4, 2, vec![1, 0, 1, 2], vec![0, 0, 1, 0]).unwrap();
    let m = gelfand_tsetlin_marked(&spec).unwrap();
    let marked_count = count_bruteforce(&m, &cfg()).unwrap();
    let tableaux = ssyt_count(&spec, &cfg()).unwrap();
    let shape = spec.tableau_shape().unwrap();
    let naive = oracles::ssyt(&shape, &vec![(1, spec.m as u32 + 1); shape.rows()]);
    let formula = formula_value(&m);
    ensure(
        marked_count == tableaux && tableaux == BigUint::from(naive) && BigInt::from(tableaux.clone()) == formula,
        || format!("marked {marked_count} ssyt {tableaux} naive {naive} formula {formula}"),
    )?;
    let e = ehrhart_polynomial(&m, &cfg()).unwrap();
    ensure(e.is_coefficient_nonnegative(), || {
        format!("negative Ehrhart terms {:?}", e.negative_terms())
    })?;
    for n in 1..=3 {
        let direct = count_bruteforce(&m.dilate(n), &cfg()).unwrap();
        ensure(
            BigInt::from(direct.clone()) == to_integer(&e.evaluate_int(n)).unwrap(),
            || format!("n={n}: Ehrhart disagrees with count {direct}"),
        )?;
    }
    Ok(format!(
        "count {marked_count} from all three routes; Ehrhart {} nonnegative",
        e.render("n")
    ))
}

fn c5_ps_in_y() -> Check {
    for k in 1..=3 {
        for m in 1..=3 {
            let f = ps_polynomial_in_y(k, m, &cfg()).map_err(|e| e.to_string())?;
            ensure(f.is_coefficient_nonnegative(), || {
                format!("k={k} m={m}: {:?}", f.negative_terms())
            })?;
            let spec = FamilySpec::new(k, m, vec![1; k], vec![0; k]).unwrap();
            let marked = pitman_stanley_marked(&spec).unwrap();
            let value = to_integer(&f.evaluate_ints(&vec![1; k]).unwrap()).unwrap();
            let naive = oracles::extensions(&marked);
            ensure(
                value == BigInt::from(naive) && count_bruteforce(&marked, &cfg()).unwrap() == BigUint::from(naive),
                || format!("k={k} m={m}: polynomial {value} brute force {naive}"),
            )?;
        }
    }
    Ok("9 polynomials nonnegative; value at all-ones matches brute force".into())
}

fn c6_bijection() -> Check {
    let mut rng = rng_from_seed(606);
    let params = MarkedParams {
        max_elements: 7,
        max_marked: 4,
        max_mark: 12,
    };
    let mut instances = 0;
    let mut points_seen = 0;
    while instances < 20 {
        let m = random_marked_poset(&mut rng, params);
        let l = natural_labeling_for(&m).unwrap();
        let gaps = l.gaps(&m);
        if gaps.iter().any(|&t| t < 1) || m.free().len() < 2 {
            continue;
        }
        instances += 1;
        let points = oracles::extension_points(&m);
        let mut images = HashSet::new();
        for x in &points {
            let (chain, maps) = decompose_point(&m, &l, x).map_err(|e| e.to_string())?;
            for (i, g) in maps.iter().enumerate() {
                let t = gaps[i];
                ensure(g.values.iter().all(|&v| (0..t).contains(&v)), || {
                    format!("level map {i} of {x:?} leaves [0, {t})")
                })?;
            }
            let back = reconstruct_point(&m, &l, &chain, &maps).map_err(|e| e.to_string())?;
            ensure(&back == x, || format!("round trip sent {x:?} to {back:?}"))?;
            ensure(images.insert((chain, maps)), || {
                format!("decomposition of {x:?} repeats")
            })?;
        }
        points_seen += points.len();
    }
    Ok(format!(
        "20 instances, {points_seen} lattice points round-trip injectively"
    ))
}

fn c7_closed_forms() -> Check {
    for k in 0..=6 {
        let chain = omega(&Poset::chain(k), &cfg()).unwrap();
        ensure(chain == UniPoly::binomial(k as i64 - 1, k), || {
            format!("chain({k}): {chain}")
        })?;
        let anti = omega(&Poset::antichain(k), &cfg()).unwrap();
        let mut power = UniPoly::one();
        for _ in 0..k {
            power = &power * &UniPoly::x();
        }
        ensure(anti == power, || format!("antichain({k}): {anti}"))?;
    }
    let mut rng = rng_from_seed(77);
    let mut seen = HashSet::new();
    let mut tries = 0;
    while seen.len() < 60 {
        tries += 1;
        ensure(tries < 10_000, || "could not draw 60 distinct posets".into())?;
        let n = rng.gen_range(1..=6);
        let density = rng.gen_range(0.1..0.8);
        let p = random_poset(&mut rng, n, density);
        if !seen.insert((p.len(), p.covers().to_vec())) {
            continue;
        }
        let labeling = p.topological_order();
        let a = omega(&p, &cfg()).unwrap();
        let b = omega_via_descents(&p, &labeling).unwrap();
        ensure(a == b, || format!("covers {:?}: {a} vs {b}", p.covers()))?;
    }
    Ok(format!(
        "closed forms for k <= 6; {} distinct posets agree with the descent sum",
        seen.len()
    ))
}

fn c8_flags() -> Check {
    let mut rng = rng_from_seed(808);
    let mut specs = 0;
    while specs < 10 {
        let k = rng.gen_range(1..=3);
        let m = rng.gen_range(1..=3);
        let y: Vec<i64> = (0..k).map(|_| rng.gen_range(0..=2)).collect();
        let z: Vec<i64> = (0..k).map(|_| rng.gen_range(0..=1)).collect();
        let spec = FamilySpec::new(k, m, y, z).unwrap();
        if spec.tableau_shape().is_none() {
            continue;
        }
        specs += 1;
        let gt = count_bruteforce(&gelfand_tsetlin_marked(&spec).unwrap(), &cfg()).unwrap();
        let face = flagged_face_marked(&spec, &FlagSpec::full(k, m)).unwrap();
        let full = count_bruteforce(&face, &cfg()).unwrap();
        let tableaux = ssyt_count(&spec, &cfg()).unwrap();
        ensure(gt == full && full == tableaux, || {
            format!("{spec:?}: gt {gt} full flags {full} tableaux {tableaux}")
        })?;
    }
    let spec = FamilySpec::new(3, 3, vec![1, 1, 2], vec![0, 0, 1]).unwrap();
    let flags = FlagSpec {
        a: vec![0, 0, 1],
        b: vec![3, 4, 4],
    };
    let face = flagged_face_marked(&spec, &flags).unwrap();
    let shape = spec.tableau_shape().unwrap();
    let mut bounds = vec![(0, 0); spec.k];
    for i in 1..=spec.k {
        bounds[shape_row(spec.k, i)] = (flags.a[i - 1] as u32 + 1, flags.b[i - 1] as u32);
    }
    let naive = oracles::ssyt(&shape, &bounds);
    let direct = count_bruteforce(&face, &cfg()).unwrap();
    let library = flagged_ssyt_count(&spec, &flags, &cfg()).unwrap();
    let unflagged = ssyt_count(&spec, &cfg()).unwrap();
    let formula = formula_value(&face);
    ensure(
        direct == BigUint::from(naive) && library == direct && BigInt::from(direct.clone()) == formula,
        || format!("face {direct} naive {naive} library {library} formula {formula}"),
    )?;
    ensure(direct < unflagged, || "flag spec does not cut anything".into())?;
    Ok(format!(
        "10 random specs; flagged face count {direct} (of {unflagged}) matches flagged tableaux"
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("random oracle equality", c1_random_oracle),
        ("skew-shape order polynomial", c2_skew_fixture),
        ("Pitman-Stanley fixture", c3_ps_fixture),
        ("Gelfand-Tsetlin fixture", c4_gt_fixture),
        ("PS polynomial in y", c5_ps_in_y),
        ("bijection round trip", c6_bijection),
        ("closed forms and descents", c7_closed_forms),
        ("flagged faces", c8_flags),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = panic::catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("PASS criterion {} ({name}) [{secs:.2}s]: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {} ({name}) [{secs:.2}s]: {detail}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
