//! Exact univariate and sparse multivariate polynomials over the rationals.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt::{self, Write as _};
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn rat_frac(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

pub fn rat_from_uint(n: &BigUint) -> Rat {
    Rat::from_integer(BigInt::from(n.clone()))
}

fn write_rat(out: &mut String, r: &Rat) {
    if r.denom().is_one() {
        write!(out, "{}", r.numer()).unwrap();
    } else {
        write!(out, "{}/{}", r.numer(), r.denom()).unwrap();
    }
}

/// Writes `coef*monomial` with sign handling shared by both polynomial kinds.
fn write_term(out: &mut String, coef: &Rat, monomial: &str, first: bool) {
    let negative = coef.is_negative();
    match (first, negative) {
        (true, true) => out.push('-'),
        (true, false) => {}
        (false, true) => out.push_str(" - "),
        (false, false) => out.push_str(" + "),
    }
    let magnitude = coef.abs();
    if monomial.is_empty() {
        write_rat(out, &magnitude);
    } else {
        if !magnitude.is_one() {
            write_rat(out, &magnitude);
            out.push('*');
        }
        out.push_str(monomial);
    }
}

/// Dense univariate polynomial; `coeffs[d]` multiplies `x^d`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct UniPoly {
    coeffs: Vec<Rat>,
}

impl UniPoly {
    pub fn zero() -> UniPoly {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> UniPoly {
        UniPoly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> UniPoly {
        UniPoly::from_coeffs(vec![c])
    }

    /// The polynomial `x`.
    pub fn x() -> UniPoly {
        UniPoly::from_coeffs(vec![Rat::zero(), Rat::one()])
    }

    pub fn from_coeffs(mut coeffs: Vec<Rat>) -> UniPoly {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> UniPoly {
        UniPoly::from_coeffs(coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, d: usize) -> Rat {
        self.coeffs.get(d).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Rat {
        self.coeffs.last().cloned().unwrap_or_else(Rat::zero)
    }

    pub fn evaluate(&self, x: &Rat) -> Rat {
        self.coeffs.iter().rev().fold(Rat::zero(), |acc, c| acc * x + c)
    }

    pub fn evaluate_int(&self, x: i64) -> Rat {
        self.evaluate(&rat(x))
    }

    pub fn scale(&self, c: &Rat) -> UniPoly {
        UniPoly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// `binom(x + shift, k)` as a polynomial in `x`.
    pub fn binomial(shift: i64, k: usize) -> UniPoly {
        let mut p = UniPoly::one();
        let mut factorial = BigInt::one();
        for i in 0..k {
            p = &p * &UniPoly::from_ints(&[shift - i as i64, 1]);
            factorial *= BigInt::from(i + 1);
        }
        p.scale(&Rat::new(BigInt::one(), factorial))
    }

    /// Coefficients that are strictly negative, as `(degree, coefficient)`.
    pub fn negative_terms(&self) -> Vec<(usize, Rat)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| c.is_negative())
            .map(|(d, c)| (d, c.clone()))
            .collect()
    }

    pub fn is_coefficient_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Canonical text form in the variable `var`, highest degree first.
    pub fn render(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (d, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let monomial = match d {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{d}"),
            };
            let first = out.is_empty();
            write_term(&mut out, c, &monomial, first);
        }
        out
    }

    pub fn to_multi(&self, var: usize, nvars: usize) -> Result<MultiPoly> {
        MultiPoly::embed(self, var, nvars)
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("n"))
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::from_coeffs((0..len).map(|d| self.coeff(d) + rhs.coeff(d)).collect())
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::from_coeffs((0..len).map(|d| self.coeff(d) - rhs.coeff(d)).collect())
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::from_coeffs(out)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($ty:ty, $($tr:ident $m:ident),*) => {$(
        impl $tr for $ty {
            type Output = $ty;
            fn $m(self, rhs: $ty) -> $ty {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(UniPoly, Add add, Sub sub, Mul mul);

/// Exact Lagrange interpolation through integer nodes.
pub fn interpolate(points: &[(i64, Rat)]) -> Result<UniPoly> {
    if points.is_empty() {
        return Err(Error::NoNodes);
    }
    for (i, (x, _)) in points.iter().enumerate() {
        if points[..i].iter().any(|(other, _)| other == x) {
            return Err(Error::DuplicateNode(*x));
        }
    }
    let mut result = UniPoly::zero();
    for (i, (xi, yi)) in points.iter().enumerate() {
        if yi.is_zero() {
            continue;
        }
        let mut basis = UniPoly::one();
        let mut denom = BigInt::one();
        for (j, (xj, _)) in points.iter().enumerate() {
            if i != j {
                basis = &basis * &UniPoly::from_ints(&[-xj, 1]);
                denom *= BigInt::from(xi - xj);
            }
        }
        result = &result + &basis.scale(&(yi / Rat::from_integer(denom)));
    }
    Ok(result)
}

/// Exponent vector ordered graded-lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial in `t_1..t_nvars` (stored 0-based).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, Rat>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> MultiPoly {
        MultiPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rat) -> MultiPoly {
        let mut p = MultiPoly::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn one(nvars: usize) -> MultiPoly {
        MultiPoly::constant(nvars, Rat::one())
    }

    /// The variable `t_{var+1}`.
    pub fn var(var: usize, nvars: usize) -> Result<MultiPoly> {
        MultiPoly::embed(&UniPoly::x(), var, nvars)
    }

    pub fn from_terms<I>(nvars: usize, terms: I) -> Result<MultiPoly>
    where
        I: IntoIterator<Item = (Vec<u32>, Rat)>,
    {
        let mut p = MultiPoly::zero(nvars);
        for (exp, c) in terms {
            if exp.len() != nvars {
                return Err(Error::VarMismatch {
                    expected: nvars,
                    got: exp.len(),
                });
            }
            p.add_term(exp, c);
        }
        Ok(p)
    }

    /// `u(t_var)` as a polynomial in `nvars` variables.
    pub fn embed(u: &UniPoly, var: usize, nvars: usize) -> Result<MultiPoly> {
        if var >= nvars {
            return Err(Error::VarMismatch {
                expected: nvars,
                got: var + 1,
            });
        }
        let mut p = MultiPoly::zero(nvars);
        for (d, c) in u.coeffs().iter().enumerate() {
            let mut exp = vec![0; nvars];
            exp[var] = d as u32;
            p.add_term(exp, c.clone());
        }
        Ok(p)
    }

    fn add_term(&mut self, exp: Vec<u32>, c: Rat) {
        if c.is_zero() {
            return;
        }
        let key = Monomial(exp);
        match self.terms.get_mut(&key) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in descending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &Rat)> {
        self.terms.iter().rev().map(|(m, c)| (m.0.as_slice(), c))
    }

    pub fn coeff(&self, exp: &[u32]) -> Rat {
        self.terms
            .get(&Monomial(exp.to_vec()))
            .cloned()
            .unwrap_or_else(Rat::zero)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    fn check_vars(&self, other: &MultiPoly) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::VarMismatch {
                expected: self.nvars,
                got: other.nvars,
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_vars(other)?;
        let mut out = self.clone();
        out.add_assign_unchecked(other);
        Ok(out)
    }

    pub fn try_sub(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.0.clone(), -c);
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_vars(other)?;
        let mut out = MultiPoly::zero(self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let exp = ma.0.iter().zip(&mb.0).map(|(a, b)| a + b).collect();
                out.add_term(exp, ca * cb);
            }
        }
        Ok(out)
    }

    pub(crate) fn add_assign_unchecked(&mut self, other: &MultiPoly) {
        for (m, c) in &other.terms {
            self.add_term(m.0.clone(), c.clone());
        }
    }

    /// Multiplies by `u(t_var)`, assuming `t_var` does not occur in `self`.
    pub(crate) fn mul_fresh_var(&self, u: &UniPoly, var: usize) -> MultiPoly {
        debug_assert!(self.terms.keys().all(|m| m.0[var] == 0));
        let mut out = MultiPoly::zero(self.nvars);
        for (d, cu) in u.coeffs().iter().enumerate() {
            if cu.is_zero() {
                continue;
            }
            for (m, c) in &self.terms {
                let mut exp = m.0.clone();
                exp[var] = d as u32;
                out.terms.insert(Monomial(exp), c * cu);
            }
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> MultiPoly {
        let mut out = MultiPoly::zero(self.nvars);
        for (m, a) in &self.terms {
            out.add_term(m.0.clone(), a * c);
        }
        out
    }

    pub fn evaluate(&self, point: &[Rat]) -> Result<Rat> {
        if point.len() != self.nvars {
            return Err(Error::VarMismatch {
                expected: self.nvars,
                got: point.len(),
            });
        }
        let mut total = Rat::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (x, &e) in point.iter().zip(&m.0) {
                if e > 0 {
                    term *= num_traits::pow(x.clone(), e as usize);
                }
            }
            total += term;
        }
        Ok(total)
    }

    pub fn evaluate_ints(&self, point: &[i64]) -> Result<Rat> {
        let point: Vec<Rat> = point.iter().map(|&x| rat(x)).collect();
        self.evaluate(&point)
    }

    /// `g(n) = f(c_1 n, .., c_r n)`.
    pub fn specialize_dilation(&self, c: &[i64]) -> Result<UniPoly> {
        if c.len() != self.nvars {
            return Err(Error::VarMismatch {
                expected: self.nvars,
                got: c.len(),
            });
        }
        if let Some(i) = c.iter().position(|&ci| ci < 0) {
            return Err(Error::NegativeDilationVector(i));
        }
        let degree = self.total_degree().unwrap_or(0) as usize;
        let mut coeffs = vec![Rat::zero(); degree + 1];
        for (m, coef) in &self.terms {
            let mut weight = BigInt::one();
            for (&ci, &e) in c.iter().zip(&m.0) {
                if e > 0 {
                    weight *= num_traits::pow(BigInt::from(ci), e as usize);
                }
            }
            coeffs[m.degree() as usize] += coef * Rat::from_integer(weight);
        }
        Ok(UniPoly::from_coeffs(coeffs))
    }

    /// Renames variables: `mapping[v] = Some(w)` sends `t_v` to `s_w`, `None`
    /// sets `t_v = 0`. The result lives in `nvars` variables.
    pub fn substitute_vars(&self, mapping: &[Option<usize>], nvars: usize) -> Result<MultiPoly> {
        if mapping.len() != self.nvars {
            return Err(Error::VarMismatch {
                expected: self.nvars,
                got: mapping.len(),
            });
        }
        if let Some(&w) = mapping.iter().flatten().find(|&&w| w >= nvars) {
            return Err(Error::VarMismatch {
                expected: nvars,
                got: w + 1,
            });
        }
        let mut out = MultiPoly::zero(nvars);
        'terms: for (m, c) in &self.terms {
            let mut exp = vec![0u32; nvars];
            for (v, &e) in m.0.iter().enumerate() {
                match mapping[v] {
                    Some(w) => exp[w] += e,
                    None if e > 0 => continue 'terms,
                    None => {}
                }
            }
            out.add_term(exp, c.clone());
        }
        Ok(out)
    }

    pub fn negative_terms(&self) -> Vec<(Vec<u32>, Rat)> {
        self.terms()
            .filter(|(_, c)| c.is_negative())
            .map(|(m, c)| (m.to_vec(), c.clone()))
            .collect()
    }

    pub fn is_coefficient_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Canonical text form with variables `{prefix}1 .. {prefix}r`.
    pub fn render(&self, prefix: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (exp, c) in self.terms() {
            let monomial = exp
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(v, &e)| {
                    if e == 1 {
                        format!("{prefix}{}", v + 1)
                    } else {
                        format!("{prefix}{}^{e}", v + 1)
                    }
                })
                .collect::<Vec<_>>()
                .join("*");
            let first = out.is_empty();
            write_term(&mut out, c, &monomial, first);
        }
        out
    }

    pub fn to_json(&self) -> MultiPolyJson {
        MultiPolyJson {
            nvars: self.nvars,
            terms: self
                .terms()
                .map(|(exp, c)| TermJson {
                    exp: exp.to_vec(),
                    num: c.numer().to_string(),
                    den: c.denom().to_string(),
                })
                .collect(),
        }
    }

    pub fn from_json(doc: &MultiPolyJson) -> Result<MultiPoly> {
        let parse = |s: &str| {
            s.parse::<BigInt>()
                .map_err(|e| Error::InvalidInput(format!("bad integer {s:?}: {e}")))
        };
        let mut terms = Vec::with_capacity(doc.terms.len());
        for t in &doc.terms {
            let den = parse(&t.den)?;
            if den.is_zero() {
                return Err(Error::InvalidInput("zero denominator".into()));
            }
            terms.push((t.exp.clone(), Rat::new(parse(&t.num)?, den)));
        }
        MultiPoly::from_terms(doc.nvars, terms)
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("t"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub exp: Vec<u32>,
    pub num: String,
    pub den: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultiPolyJson {
    pub nvars: usize,
    pub terms: Vec<TermJson>,
}

/// The exact integer value of `r`, or an error if it has a denominator.
pub fn to_integer(r: &Rat) -> Result<BigInt> {
    if r.denom().is_one() {
        Ok(r.numer().clone())
    } else {
        Err(Error::NonIntegral(format!("{}/{}", r.numer(), r.denom())))
    }
}

/// Small-integer convenience for tests and diagnostics.
pub fn to_i64(r: &Rat) -> Option<i64> {
    if r.denom().is_one() {
        r.numer().to_i64()
    } else {
        None
    }
}

#[cfg(test)]
pub(crate) fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

#[cfg(test)]
pub(crate) fn gcd_is_one(r: &Rat) -> bool {
    use num_integer::Integer;
    r.numer().gcd(r.denom()).is_one() || r.numer().is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn difference_of_squares() {
        let p = UniPoly::from_ints(&[1, 1]) * UniPoly::from_ints(&[-1, 1]);
        assert_eq!(p, UniPoly::from_ints(&[-1, 0, 1]));
        assert_eq!(p.render("t"), "t^2 - 1");
        assert_eq!(p.evaluate_int(3), rat(8));
    }

    #[test]
    fn embedding_and_tensor_product() {
        let e = MultiPoly::embed(&UniPoly::from_ints(&[0, 0, 1]), 1, 3).unwrap();
        assert_eq!(e.render("t"), "t2^2");
        assert_eq!(e.coeff(&[0, 2, 0]), rat(1));
        let a = MultiPoly::embed(&UniPoly::x(), 0, 2).unwrap();
        let b = MultiPoly::embed(&UniPoly::from_ints(&[1, 1]), 1, 2).unwrap();
        let prod = a.try_mul(&b).unwrap();
        assert_eq!(prod.render("t"), "t1*t2 + t1");
        assert_eq!(a.mul_fresh_var(&UniPoly::from_ints(&[1, 1]), 1), prod);
    }

    #[test]
    fn var_mismatch() {
        let a = MultiPoly::one(2);
        let b = MultiPoly::one(3);
        assert!(matches!(a.try_add(&b), Err(Error::VarMismatch { .. })));
        assert!(matches!(a.try_mul(&b), Err(Error::VarMismatch { .. })));
        assert!(matches!(
            MultiPoly::embed(&UniPoly::x(), 2, 2),
            Err(Error::VarMismatch { .. })
        ));
        assert!(a.evaluate_ints(&[1]).is_err());
    }

    #[test]
    fn interpolation_examples() {
        let pts = |v: &[(i64, i64)]| v.iter().map(|&(x, y)| (x, rat(y))).collect::<Vec<_>>();
        assert_eq!(interpolate(&pts(&[(1, 1), (2, 2), (3, 3)])).unwrap(), UniPoly::x());
        assert_eq!(
            interpolate(&pts(&[(0, 0), (1, 1), (2, 4)])).unwrap(),
            UniPoly::from_ints(&[0, 0, 1])
        );
        let tri = interpolate(&pts(&[(1, 1), (2, 3), (3, 6), (4, 10)])).unwrap();
        assert_eq!(tri, UniPoly::from_coeffs(vec![rat(0), rat_frac(1, 2), rat_frac(1, 2)]));
        assert_eq!(tri.render("t"), "1/2*t^2 + 1/2*t");
        for x in 1..=10 {
            assert_eq!(tri.evaluate_int(x), rat(x * (x + 1) / 2));
        }
        assert_eq!(
            interpolate(&pts(&[(1, 1), (1, 2)])).unwrap_err(),
            Error::DuplicateNode(1)
        );
        assert_eq!(interpolate(&[]).unwrap_err(), Error::NoNodes);
    }

    #[test]
    fn evaluation() {
        let t1t2 = MultiPoly::from_terms(2, [(vec![1, 1], rat(1))]).unwrap();
        assert_eq!(t1t2.evaluate_ints(&[2, 5]).unwrap(), rat(10));
        assert_eq!(MultiPoly::zero(3).evaluate_ints(&[4, 5, 6]).unwrap(), rat(0));
        assert_eq!(UniPoly::zero().evaluate_int(17), rat(0));
    }

    #[test]
    fn dilation_specialization() {
        let f = MultiPoly::from_terms(1, [(vec![1], rat(1)), (vec![0], rat(1))]).unwrap();
        assert_eq!(f.specialize_dilation(&[2]).unwrap(), UniPoly::from_ints(&[1, 2]));
        let g = MultiPoly::from_terms(2, [(vec![1, 1], rat(1))]).unwrap();
        assert_eq!(g.specialize_dilation(&[1, 1]).unwrap(), UniPoly::from_ints(&[0, 0, 1]));
        let h = MultiPoly::from_terms(2, [(vec![1, 0], rat(1)), (vec![0, 1], rat(1))]).unwrap();
        assert_eq!(h.specialize_dilation(&[0, 3]).unwrap(), UniPoly::from_ints(&[0, 3]));
        assert_eq!(
            h.specialize_dilation(&[1, -1]).unwrap_err(),
            Error::NegativeDilationVector(1)
        );
        assert!(h.specialize_dilation(&[1]).is_err());
    }

    #[test]
    fn nonnegativity() {
        assert!(UniPoly::from_ints(&[1, 0, 1]).is_coefficient_nonnegative());
        let p = UniPoly::from_ints(&[0, -1, 1]);
        assert!(!p.is_coefficient_nonnegative());
        assert_eq!(p.negative_terms(), vec![(1, rat(-1))]);
        assert!(UniPoly::zero().is_coefficient_nonnegative());
        assert!(MultiPoly::zero(2).is_coefficient_nonnegative());
    }

    #[test]
    fn rendering() {
        let p = MultiPoly::from_terms(
            2,
            [
                (vec![0, 0], rat(-3)),
                (vec![2, 0], rat_frac(1, 2)),
                (vec![1, 1], rat(-1)),
                (vec![0, 1], rat_frac(2, 3)),
            ],
        )
        .unwrap();
        assert_eq!(p.render("t"), "1/2*t1^2 - t1*t2 + 2/3*t2 - 3");
        assert_eq!(MultiPoly::zero(2).to_string(), "0");
        assert_eq!(UniPoly::from_ints(&[-2]).to_string(), "-2");
        assert_eq!(UniPoly::from_ints(&[0, -1]).to_string(), "-n");
    }

    #[test]
    fn substitution() {
        // t1 + t2*t3 with t1 -> 0, t2 -> y2, t3 -> y1
        let p = MultiPoly::from_terms(3, [(vec![1, 0, 0], rat(1)), (vec![0, 1, 1], rat(2))]).unwrap();
        let q = p.substitute_vars(&[None, Some(1), Some(0)], 2).unwrap();
        assert_eq!(q.render("y"), "2*y1*y2");
    }

    #[test]
    fn binomial_polynomials() {
        // binom(n+2, 3) at n = 4 is binom(6,3) = 20
        assert_eq!(UniPoly::binomial(2, 3).evaluate_int(4), rat(20));
        assert_eq!(UniPoly::binomial(-1, 2).evaluate_int(1), rat(0));
        assert_eq!(UniPoly::binomial(5, 0), UniPoly::one());
    }

    #[test]
    fn json_round_trip() {
        let p = MultiPoly::from_terms(2, [(vec![1, 2], rat_frac(-7, 3)), (vec![0, 0], rat(4))]).unwrap();
        let text = serde_json::to_string(&p.to_json()).unwrap();
        let back: MultiPolyJson = serde_json::from_str(&text).unwrap();
        assert_eq!(MultiPoly::from_json(&back).unwrap(), p);
    }

    fn small_uni() -> impl Strategy<Value = UniPoly> {
        prop::collection::vec((-5i64..=5, 1i64..=3), 0..5)
            .prop_map(|cs| UniPoly::from_coeffs(cs.into_iter().map(|(n, d)| rat_frac(n, d)).collect()))
    }

    fn small_multi() -> impl Strategy<Value = MultiPoly> {
        prop::collection::vec((prop::collection::vec(0u32..3, 3), -4i64..=4), 0..6)
            .prop_map(|ts| MultiPoly::from_terms(3, ts.into_iter().map(|(e, c)| (e, rat(c)))).unwrap())
    }

    proptest! {
        #[test]
        fn uni_ring_axioms(a in small_uni(), b in small_uni(), c in small_uni()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&(&a + &b) - &b, a.clone());
            prop_assert!(a.coeffs().iter().all(gcd_is_one));
        }

        #[test]
        fn multi_ring_axioms(a in small_multi(), b in small_multi(), c in small_multi()) {
            let ab = a.try_mul(&b).unwrap();
            prop_assert_eq!(ab.try_mul(&c).unwrap(), a.try_mul(&b.try_mul(&c).unwrap()).unwrap());
            prop_assert_eq!(&ab, &b.try_mul(&a).unwrap());
            prop_assert_eq!(
                a.try_mul(&b.try_add(&c).unwrap()).unwrap(),
                ab.try_add(&a.try_mul(&c).unwrap()).unwrap()
            );
            prop_assert!(a.try_sub(&a).unwrap().is_zero());
        }

        #[test]
        fn interpolation_inverts_evaluation(p in small_uni()) {
            let nodes: Vec<(i64, Rat)> = (0..=p.degree().unwrap_or(0) as i64 + 1)
                .map(|x| (x - 1, p.evaluate_int(x - 1)))
                .collect();
            prop_assert_eq!(interpolate(&nodes).unwrap(), p);
        }

        #[test]
        fn dilation_matches_pointwise(f in small_multi(), c in prop::collection::vec(0i64..4, 3)) {
            let g = f.specialize_dilation(&c).unwrap();
            for n in 0..=5i64 {
                let point: Vec<i64> = c.iter().map(|ci| ci * n).collect();
                prop_assert_eq!(g.evaluate_int(n), f.evaluate_ints(&point).unwrap());
            }
        }
    }
}
