//! Exact rational scalars and sparse multivariate power series truncated at a
//! total-degree cap.
//!
//! A [`TruncPoly`] is an element of `Q[t1..tn] / (t1..tn)^(cap+1)`. The cap is
//! part of the value: binary operations reject operands with different caps or
//! variable counts instead of coercing them. Terms are kept in graded
//! lexicographic order (degree first, then `t1 > t2 > ...`), which fixes both
//! iteration and rendering order.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact scalars. `BigRational` keeps values reduced with a positive denominator.
pub type Rational = num_rational::BigRational;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Renders a rational as `p/q`, or `p` when the denominator is one.
pub fn fmt_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Exponent vector over the ambient variables, with the total degree cached.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Box<[u32]>,
    degree: u32,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        let degree = exps.iter().sum();
        Monomial {
            exps: exps.into_boxed_slice(),
            degree,
        }
    }

    pub fn one(num_vars: usize) -> Self {
        Monomial::new(vec![0; num_vars])
    }

    pub fn var(num_vars: usize, index: usize) -> Self {
        let mut exps = vec![0; num_vars];
        exps[index] = 1;
        Monomial::new(exps)
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn exp(&self, index: usize) -> u32 {
        self.exps[index]
    }

    pub fn num_vars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    /// Smallest variable index with a positive exponent.
    pub fn min_var(&self) -> Option<usize> {
        self.exps.iter().position(|&e| e > 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let exps = self
            .exps
            .iter()
            .zip(other.exps.iter())
            .map(|(a, b)| a + b)
            .collect();
        Monomial {
            exps,
            degree: self.degree + other.degree,
        }
    }

    pub fn mul_var(&self, index: usize) -> Monomial {
        let mut exps = self.exps.clone();
        exps[index] += 1;
        Monomial {
            exps,
            degree: self.degree + 1,
        }
    }

    /// Divides by `t_index` once; `None` if the variable does not occur.
    pub fn div_var(&self, index: usize) -> Option<Monomial> {
        if self.exps[index] == 0 {
            return None;
        }
        let mut exps = self.exps.clone();
        exps[index] -= 1;
        Some(Monomial {
            exps,
            degree: self.degree - 1,
        })
    }

    fn render(&self, names: &[String]) -> String {
        let mut parts = Vec::new();
        for (i, &e) in self.exps.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(names[i].clone()),
                _ => parts.push(format!("{}^{}", names[i], e)),
            }
        }
        parts.join("*")
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree
            .cmp(&other.degree)
            .then_with(|| other.exps.cmp(&self.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exps)
    }
}

/// Sparse exact-rational power series in `num_vars` variables, truncated above
/// total degree `cap`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TruncPoly {
    num_vars: usize,
    cap: u32,
    terms: BTreeMap<Monomial, Rational>,
}

impl TruncPoly {
    pub fn zero(num_vars: usize, cap: u32) -> Self {
        TruncPoly {
            num_vars,
            cap,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(num_vars: usize, cap: u32) -> Self {
        Self::constant(num_vars, cap, Rational::one())
    }

    pub fn constant(num_vars: usize, cap: u32, c: Rational) -> Self {
        let mut p = Self::zero(num_vars, cap);
        p.add_term(Monomial::one(num_vars), c);
        p
    }

    /// The variable `t_{index+1}`.
    pub fn var(num_vars: usize, cap: u32, index: usize) -> Self {
        let mut p = Self::zero(num_vars, cap);
        p.add_term(Monomial::var(num_vars, index), Rational::one());
        p
    }

    /// The linear form `sum coeffs[i] * t_{i+1}`.
    pub fn linear_form(cap: u32, coeffs: &[Rational]) -> Self {
        let n = coeffs.len();
        let mut p = Self::zero(n, cap);
        for (i, c) in coeffs.iter().enumerate() {
            p.add_term(Monomial::var(n, i), c.clone());
        }
        p
    }

    /// Builds a series from `(exponents, coefficient)` pairs, summing repeats
    /// and dropping anything above the cap.
    pub fn from_terms<I>(num_vars: usize, cap: u32, terms: I) -> Self
    where
        I: IntoIterator<Item = (Vec<u32>, Rational)>,
    {
        let mut p = Self::zero(num_vars, cap);
        for (exps, c) in terms {
            assert_eq!(exps.len(), num_vars, "exponent vector length");
            p.add_term(Monomial::new(exps), c);
        }
        p
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn cap(&self) -> u32 {
        self.cap
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

    /// Terms in graded lexicographic order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Coefficient of the monomial with the given exponent vector.
    pub fn coeff_of(&self, exps: &[u32]) -> Rational {
        self.coeff(&Monomial::new(exps.to_vec()))
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(&Monomial::one(self.num_vars))
    }

    /// Highest degree carrying a nonzero coefficient.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    /// Lowest degree carrying a nonzero coefficient.
    pub fn order(&self) -> Option<u32> {
        self.terms.keys().next().map(Monomial::degree)
    }

    /// Adds `c * m` in place; terms above the cap are discarded.
    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        debug_assert_eq!(m.num_vars(), self.num_vars);
        if c.is_zero() || m.degree() > self.cap {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_compatible(&self, other: &TruncPoly) -> Result<()> {
        if self.num_vars != other.num_vars || self.cap != other.cap {
            return Err(Error::Dimension(format!(
                "series over {} vars with cap {} vs {} vars with cap {}",
                self.num_vars, self.cap, other.num_vars, other.cap
            )));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &TruncPoly) -> Result<TruncPoly> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &TruncPoly) -> Result<TruncPoly> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &TruncPoly) -> Result<TruncPoly> {
        self.check_compatible(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn mul_unchecked(&self, other: &TruncPoly) -> TruncPoly {
        let mut out = TruncPoly::zero(self.num_vars, self.cap);
        // both maps iterate by ascending degree, so the inner loop can stop early
        for (ma, ca) in &self.terms {
            let room = self.cap - ma.degree();
            for (mb, cb) in &other.terms {
                if mb.degree() > room {
                    break;
                }
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> TruncPoly {
        if c.is_zero() {
            return TruncPoly::zero(self.num_vars, self.cap);
        }
        TruncPoly {
            num_vars: self.num_vars,
            cap: self.cap,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    /// Multiplies by the single variable `t_{index+1}`.
    pub fn mul_var(&self, index: usize) -> TruncPoly {
        let mut out = TruncPoly::zero(self.num_vars, self.cap);
        for (m, c) in &self.terms {
            out.add_term(m.mul_var(index), c.clone());
        }
        out
    }

    pub fn pow(&self, k: u32) -> TruncPoly {
        let mut acc = TruncPoly::one(self.num_vars, self.cap);
        for _ in 0..k {
            acc = acc.mul_unchecked(self);
        }
        acc
    }

    /// Same terms under a different cap; terms above the new cap are dropped.
    ///
    /// Raising the cap treats the missing higher terms as zero, so callers only
    /// do that for values known to be exact polynomials.
    pub fn with_cap(&self, cap: u32) -> TruncPoly {
        TruncPoly {
            num_vars: self.num_vars,
            cap,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() <= cap)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// The homogeneous component of degree `d`.
    pub fn homogeneous(&self, d: u32) -> TruncPoly {
        TruncPoly {
            num_vars: self.num_vars,
            cap: self.cap,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Inverse of a series with nonzero constant term, solved degree by degree.
    pub fn unit_inverse(&self) -> Result<TruncPoly> {
        let a0 = self.constant_term();
        if a0.is_zero() {
            return Err(Error::NonUnit);
        }
        let inv0 = a0.recip();
        let parts: Vec<TruncPoly> = (0..=self.cap).map(|d| self.homogeneous(d)).collect();
        let mut inv_parts = vec![TruncPoly::constant(self.num_vars, self.cap, inv0.clone())];
        for d in 1..=self.cap as usize {
            let mut acc = TruncPoly::zero(self.num_vars, self.cap);
            for k in 1..=d {
                if parts[k].is_zero() || inv_parts[d - k].is_zero() {
                    continue;
                }
                acc = &acc + &parts[k].mul_unchecked(&inv_parts[d - k]);
            }
            inv_parts.push(acc.scale(&-inv0.clone()));
        }
        Ok(inv_parts
            .iter()
            .fold(TruncPoly::zero(self.num_vars, self.cap), |s, p| &s + p))
    }

    fn require_no_constant(&self, what: &str) -> Result<()> {
        if !self.constant_term().is_zero() {
            return Err(Error::Domain(format!(
                "{what} requires a series without constant term"
            )));
        }
        Ok(())
    }

    /// `sum_k f^k * weights(k)` for `k = 0..=cap`, for `f` without constant term.
    fn power_series(&self, weight: impl Fn(u32) -> Rational) -> TruncPoly {
        let mut acc = TruncPoly::zero(self.num_vars, self.cap);
        let mut power = TruncPoly::one(self.num_vars, self.cap);
        for k in 0..=self.cap {
            if power.is_zero() {
                break;
            }
            acc = &acc + &power.scale(&weight(k));
            power = power.mul_unchecked(self);
        }
        acc
    }

    /// `exp(f) = sum f^k / k!`.
    pub fn exp(&self) -> Result<TruncPoly> {
        self.require_no_constant("exp")?;
        Ok(self.power_series(|k| factorial(k).recip()))
    }

    /// `h(f) = (exp(f) - 1) / f = sum f^k / (k+1)!`.
    pub fn h_series(&self) -> Result<TruncPoly> {
        self.require_no_constant("h")?;
        Ok(self.power_series(|k| factorial(k + 1).recip()))
    }

    /// Exact quotient by a nonzero homogeneous linear form, by graded long
    /// division with a zero-remainder check in every retained degree.
    ///
    /// The quotient carries `cap - 1`.
    pub fn div_linear(&self, linear: &TruncPoly) -> Result<TruncPoly> {
        if linear.num_vars != self.num_vars {
            return Err(Error::Dimension(format!(
                "divisor over {} vars, dividend over {}",
                linear.num_vars, self.num_vars
            )));
        }
        if linear.is_zero() || linear.terms.keys().any(|m| m.degree() != 1) {
            return Err(Error::Domain(
                "divisor must be a nonzero homogeneous linear form".into(),
            ));
        }
        if self.cap == 0 {
            return Err(Error::Domain("cannot divide a series with cap 0".into()));
        }
        // lex-leading variable of the divisor
        let (lead_mono, lead_coeff) = linear.terms.iter().next().unwrap();
        let lead = lead_mono.min_var().unwrap();
        let lead_inv = lead_coeff.recip();
        let mut quotient = TruncPoly::zero(self.num_vars, self.cap - 1);
        let mut rem = self.clone();
        while let Some((m, c)) = rem.leading_in_lowest_degree() {
            let Some(qm) = m.div_var(lead) else {
                return Err(Error::NotDivisible(format!(
                    "remainder term of degree {} survives",
                    m.degree()
                )));
            };
            let qc = &c * &lead_inv;
            for (lm, lc) in &linear.terms {
                rem.add_term(qm.mul(lm), -(&qc * lc));
            }
            quotient.add_term(qm, qc);
        }
        Ok(quotient)
    }

    /// Lex-largest term within the lowest nonzero degree.
    fn leading_in_lowest_degree(&self) -> Option<(Monomial, Rational)> {
        // within a degree the map order is lex-descending, so the first entry leads
        self.terms.iter().next().map(|(m, c)| (m.clone(), c.clone()))
    }

    /// Drops every term involving `t_{index+1}` (substitutes zero for it).
    pub fn subst_zero(&self, index: usize) -> Result<TruncPoly> {
        if index >= self.num_vars {
            return Err(Error::VarIndex {
                index,
                num_vars: self.num_vars,
            });
        }
        Ok(TruncPoly {
            num_vars: self.num_vars,
            cap: self.cap,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.exp(index) == 0)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        })
    }

    pub fn depends_on(&self, index: usize) -> bool {
        self.terms.keys().any(|m| m.exp(index) > 0)
    }

    /// Substitutes each variable `t_{i+1}` by `images[i]`. The images must have
    /// no constant term; the result lives in their ring and cap.
    pub fn substitute(&self, images: &[TruncPoly]) -> Result<TruncPoly> {
        if images.len() != self.num_vars {
            return Err(Error::Dimension(format!(
                "{} images for {} variables",
                images.len(),
                self.num_vars
            )));
        }
        let first = images
            .first()
            .ok_or_else(|| Error::Dimension("no images".into()))?;
        let (n, cap) = (first.num_vars, first.cap);
        for img in images {
            if img.num_vars != n || img.cap != cap {
                return Err(Error::Dimension("substitution images disagree".into()));
            }
            img.require_no_constant("substitution")?;
        }
        let max_exp = self.degree().unwrap_or(0) as usize;
        let powers: Vec<Vec<TruncPoly>> = images
            .iter()
            .map(|img| {
                let mut ps = vec![TruncPoly::one(n, cap)];
                for k in 1..=max_exp {
                    let next = ps[k - 1].mul_unchecked(img);
                    ps.push(next);
                }
                ps
            })
            .collect();
        let mut out = TruncPoly::zero(n, cap);
        for (m, c) in &self.terms {
            if m.degree() > cap {
                continue;
            }
            let mut term = TruncPoly::constant(n, cap, c.clone());
            for (i, &e) in m.exps().iter().enumerate() {
                if e > 0 {
                    term = term.mul_unchecked(&powers[i][e as usize]);
                }
            }
            out = &out + &term;
        }
        Ok(out)
    }

    /// Splits `f = t_{index+1}^2 * p + t_{index+1} * q + r` with `q`, `r`
    /// independent of that variable.
    pub fn split_square(&self, index: usize) -> (TruncPoly, TruncPoly, TruncPoly) {
        let mut p = TruncPoly::zero(self.num_vars, self.cap);
        let mut q = TruncPoly::zero(self.num_vars, self.cap);
        let mut r = TruncPoly::zero(self.num_vars, self.cap);
        for (m, c) in &self.terms {
            match m.exp(index) {
                0 => r.add_term(m.clone(), c.clone()),
                1 => q.add_term(m.div_var(index).unwrap(), c.clone()),
                _ => p.add_term(
                    m.div_var(index).unwrap().div_var(index).unwrap(),
                    c.clone(),
                ),
            }
        }
        (p, q, r)
    }

    /// Renders with caller-supplied variable names.
    pub fn render_with(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if m.is_one() {
                out.push_str(&fmt_rational(&abs));
            } else if abs.is_one() {
                out.push_str(&m.render(names));
            } else {
                out.push_str(&fmt_rational(&abs));
                out.push('*');
                out.push_str(&m.render(names));
            }
        }
        out
    }

    /// Default variable names `t1..tn`.
    pub fn var_names(num_vars: usize) -> Vec<String> {
        (1..=num_vars).map(|i| format!("t{i}")).collect()
    }
}

pub fn factorial(k: u32) -> Rational {
    let mut acc = BigInt::one();
    for i in 2..=k {
        acc *= i;
    }
    Rational::from_integer(acc)
}

impl fmt::Display for TruncPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_with(&TruncPoly::var_names(self.num_vars)))
    }
}

impl fmt::Debug for TruncPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruncPoly[n={}, cap={}]({})", self.num_vars, self.cap, self)
    }
}

// Operator forms panic on mismatched rings; the `try_*` methods report it.

impl Add for &TruncPoly {
    type Output = TruncPoly;
    fn add(self, rhs: &TruncPoly) -> TruncPoly {
        self.try_add(rhs).expect("TruncPoly addition")
    }
}

impl Sub for &TruncPoly {
    type Output = TruncPoly;
    fn sub(self, rhs: &TruncPoly) -> TruncPoly {
        self.try_sub(rhs).expect("TruncPoly subtraction")
    }
}

impl Mul for &TruncPoly {
    type Output = TruncPoly;
    fn mul(self, rhs: &TruncPoly) -> TruncPoly {
        self.try_mul(rhs).expect("TruncPoly multiplication")
    }
}

impl Neg for &TruncPoly {
    type Output = TruncPoly;
    fn neg(self) -> TruncPoly {
        self.scale(&-Rational::one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p2(cap: u32, terms: &[([u32; 2], Rational)]) -> TruncPoly {
        TruncPoly::from_terms(2, cap, terms.iter().map(|(e, c)| (e.to_vec(), c.clone())))
    }

    #[test]
    fn add_cancels_and_identity() {
        let a = p2(2, &[([0, 0], int(1)), ([1, 0], int(1))]);
        let b = p2(2, &[([0, 0], int(-1)), ([0, 1], int(1))]);
        assert_eq!(&a + &b, p2(2, &[([1, 0], int(1)), ([0, 1], int(1))]));
        assert_eq!(&a + &TruncPoly::zero(2, 2), a);
        let sq = p2(2, &[([2, 0], int(1))]);
        assert!((&sq + &-&sq).is_zero());
    }

    #[test]
    fn mismatched_caps_are_rejected() {
        let a = TruncPoly::one(2, 2);
        let b = TruncPoly::one(2, 3);
        assert!(matches!(a.try_add(&b), Err(Error::Dimension(_))));
        assert!(matches!(a.try_mul(&TruncPoly::one(3, 2)), Err(Error::Dimension(_))));
    }

    #[test]
    fn mul_truncates() {
        let a = p2(2, &[([0, 0], int(1)), ([1, 0], int(1))]);
        let b = p2(2, &[([0, 0], int(1)), ([1, 0], int(-1))]);
        assert_eq!(&a * &b, p2(2, &[([0, 0], int(1)), ([2, 0], int(-1))]));
        let t1 = TruncPoly::var(2, 1, 0);
        let t2 = TruncPoly::var(2, 1, 1);
        assert!((&t1 * &t2).is_zero());
    }

    #[test]
    fn square_of_linear_trinomial() {
        let a = p2(2, &[([0, 0], int(1)), ([1, 0], int(1)), ([0, 1], int(1))]);
        let expected = p2(
            2,
            &[
                ([0, 0], int(1)),
                ([1, 0], int(2)),
                ([0, 1], int(2)),
                ([2, 0], int(1)),
                ([1, 1], int(2)),
                ([0, 2], int(1)),
            ],
        );
        assert_eq!(&a * &a, expected);
    }

    #[test]
    fn unit_inverse_examples() {
        let a = p2(2, &[([0, 0], int(1)), ([1, 0], int(1))]);
        assert_eq!(
            a.unit_inverse().unwrap(),
            p2(2, &[([0, 0], int(1)), ([1, 0], int(-1)), ([2, 0], int(1))])
        );
        let two = TruncPoly::constant(1, 3, int(2));
        assert_eq!(two.unit_inverse().unwrap(), TruncPoly::constant(1, 3, rat(1, 2)));
        assert_eq!(TruncPoly::var(2, 2, 0).unit_inverse(), Err(Error::NonUnit));

        // 1/h(x) = x/(e^x - 1) = 1 - x/2 + x^2/12
        let s = p2(2, &[([1, 0], int(1)), ([0, 1], int(1))]);
        let inv = s.h_series().unwrap().unit_inverse().unwrap();
        let expected = &(&TruncPoly::one(2, 2) - &s.scale(&rat(1, 2))) + &(&s * &s).scale(&rat(1, 12));
        assert_eq!(inv, expected);
    }

    #[test]
    fn exp_and_h_examples() {
        let t1 = TruncPoly::var(1, 3, 0);
        assert_eq!(TruncPoly::zero(1, 3).exp().unwrap(), TruncPoly::one(1, 3));
        assert_eq!(
            t1.exp().unwrap(),
            TruncPoly::from_terms(
                1,
                3,
                vec![(vec![0], int(1)), (vec![1], int(1)), (vec![2], rat(1, 2)), (vec![3], rat(1, 6))]
            )
        );
        assert_eq!(
            t1.h_series().unwrap(),
            TruncPoly::from_terms(
                1,
                3,
                vec![(vec![0], int(1)), (vec![1], rat(1, 2)), (vec![2], rat(1, 6)), (vec![3], rat(1, 24))]
            )
        );
        let s = p2(1, &[([1, 0], int(1)), ([0, 1], int(1))]);
        assert_eq!(
            s.h_series().unwrap(),
            p2(1, &[([0, 0], int(1)), ([1, 0], rat(1, 2)), ([0, 1], rat(1, 2))])
        );
        let s2 = s.with_cap(2);
        assert_eq!(
            s2.exp().unwrap(),
            p2(
                2,
                &[
                    ([0, 0], int(1)),
                    ([1, 0], int(1)),
                    ([0, 1], int(1)),
                    ([2, 0], rat(1, 2)),
                    ([1, 1], int(1)),
                    ([0, 2], rat(1, 2)),
                ]
            )
        );
        assert!(matches!(TruncPoly::one(1, 2).exp(), Err(Error::Domain(_))));
        assert!(matches!(TruncPoly::one(1, 2).h_series(), Err(Error::Domain(_))));
    }

    #[test]
    fn div_linear_examples() {
        let diff = p2(3, &[([2, 0], int(1)), ([0, 2], int(-1))]);
        let lin = p2(1, &[([1, 0], int(1)), ([0, 1], int(1))]);
        assert_eq!(
            diff.div_linear(&lin).unwrap(),
            p2(2, &[([1, 0], int(1)), ([0, 1], int(-1))])
        );
        assert!(TruncPoly::zero(2, 3).div_linear(&lin).unwrap().is_zero());
        let bad = p2(3, &[([2, 0], int(1)), ([0, 2], int(1))]);
        assert!(matches!(bad.div_linear(&lin), Err(Error::NotDivisible(_))));
        assert!(matches!(TruncPoly::one(2, 3).div_linear(&lin), Err(Error::NotDivisible(_))));
    }

    #[test]
    fn subst_zero_and_dependence() {
        let a = p2(2, &[([1, 0], int(1)), ([0, 1], int(1))]);
        assert_eq!(a.subst_zero(0).unwrap(), p2(2, &[([0, 1], int(1))]));
        let b = p2(2, &[([1, 1], int(1))]);
        assert!(b.subst_zero(1).unwrap().is_zero());
        assert!(matches!(a.subst_zero(2), Err(Error::VarIndex { .. })));
        assert!(a.depends_on(0));
        assert_eq!(a.depends_on(0), a.subst_zero(0).unwrap() != a);
    }

    #[test]
    fn split_square_reassembles() {
        // t1^2 t2 + t1 t3 + t2 t3
        let f = TruncPoly::from_terms(
            3,
            3,
            vec![(vec![2, 1, 0], int(1)), (vec![1, 0, 1], int(1)), (vec![0, 1, 1], int(1))],
        );
        let (p, q, r) = f.split_square(0);
        assert_eq!(p, TruncPoly::var(3, 3, 1));
        assert_eq!(q, TruncPoly::var(3, 3, 2));
        assert_eq!(r, TruncPoly::from_terms(3, 3, vec![(vec![0, 1, 1], int(1))]));
        let t1 = TruncPoly::var(3, 3, 0);
        assert_eq!(&(&(&(&t1 * &t1) * &p) + &(&t1 * &q)) + &r, f);
    }

    #[test]
    fn rendering_is_graded_lex() {
        let p = p2(
            2,
            &[
                ([1, 1], rat(-1, 24)),
                ([0, 1], rat(1, 12)),
                ([1, 0], rat(-1, 12)),
                ([0, 0], rat(1, 2)),
            ],
        );
        assert_eq!(p.to_string(), "1/2 - 1/12*t1 + 1/12*t2 - 1/24*t1*t2");
        assert_eq!(TruncPoly::zero(2, 2).to_string(), "0");
        assert_eq!(p2(2, &[([2, 0], int(-1)), ([0, 1], int(1))]).to_string(), "t2 - t1^2");
    }
}
