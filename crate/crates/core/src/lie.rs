//! Elements of the free metabelian nilpotent Lie algebra `L(m,c)` in normal
//! form.
//!
//! Every element is `sum b_r y_r + sum_{p>q} [y_p,y_q] h_pq(ad y_q, ..., ad y_m)`
//! where `h_pq` is a polynomial in the commuting variables `t_q..t_m` of degree
//! at most `c - 2`. A monomial `t^a` attached to the head `(p,q)` stands for the
//! left-normed basis commutator `[y_p, y_q, y_i3, ..., y_ik]` with
//! `q <= i3 <= ... <= ik`. Normal form is restored eagerly by every operation,
//! so structural equality is equality in the algebra.
//!
//! Indices are zero-based in the API: generator `y1` is index 0 and the
//! variable `t1` is index 0.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::{fmt_rational, Monomial, Rational, TruncPoly};

/// Rank `m` and nilpotency class `c` of `L(m,c)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct AlgebraConfig {
    rank: usize,
    class: u32,
}

impl AlgebraConfig {
    pub fn new(rank: usize, class: u32) -> Result<Self> {
        if rank < 2 {
            return Err(Error::InvalidConfig(format!("rank must be at least 2, got {rank}")));
        }
        if class < 2 {
            return Err(Error::InvalidConfig(format!("class must be at least 2, got {class}")));
        }
        Ok(AlgebraConfig { rank, class })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn class(&self) -> u32 {
        self.class
    }

    /// Degree cap of the `h_pq` polynomials.
    pub fn quad_cap(&self) -> u32 {
        self.class - 2
    }

    /// Degree cap of partial derivatives and Jacobian entries.
    pub fn deriv_cap(&self) -> u32 {
        self.class - 1
    }

    pub(crate) fn check_same(&self, other: &AlgebraConfig) -> Result<()> {
        if self != other {
            return Err(Error::ConfigMismatch(self.rank, self.class, other.rank, other.class));
        }
        Ok(())
    }
}

/// Head `(p, q)` of a basis commutator, `p > q`. Ordered by `(q, p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct HeadPair {
    pub p: usize,
    pub q: usize,
}

impl HeadPair {
    pub fn new(p: usize, q: usize) -> Self {
        assert!(p > q, "head pair requires p > q");
        HeadPair { p, q }
    }
}

impl Ord for HeadPair {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.q, self.p).cmp(&(other.q, other.p))
    }
}

impl PartialOrd for HeadPair {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A single left-normed basis commutator `[y_p, y_q, y_i3, ..., y_ik]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisCommutator {
    pub head: HeadPair,
    /// Non-decreasing tail indices, each `>= head.q`.
    pub tail: Vec<usize>,
}

impl BasisCommutator {
    pub fn from_monomial(head: HeadPair, m: &Monomial) -> Self {
        let mut tail = Vec::with_capacity(m.degree() as usize);
        for (i, &e) in m.exps().iter().enumerate() {
            tail.extend(std::iter::repeat_n(i, e as usize));
        }
        debug_assert!(tail.iter().all(|&i| i >= head.q));
        BasisCommutator { head, tail }
    }

    pub fn len(&self) -> usize {
        2 + self.tail.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

impl fmt::Display for BasisCommutator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[y{},y{}", self.head.p + 1, self.head.q + 1)?;
        for i in &self.tail {
            write!(f, ",y{}", i + 1)?;
        }
        f.write_str("]")
    }
}

/// An element of `L(m,c)` in normal form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LieElement {
    config: AlgebraConfig,
    linear: Vec<Rational>,
    quad: BTreeMap<HeadPair, TruncPoly>,
}

impl LieElement {
    pub fn zero(config: AlgebraConfig) -> Self {
        LieElement {
            config,
            linear: vec![Rational::zero(); config.rank],
            quad: BTreeMap::new(),
        }
    }

    /// The generator `y_{index+1}`.
    pub fn generator(config: AlgebraConfig, index: usize) -> Self {
        let mut u = Self::zero(config);
        u.linear[index] = Rational::one();
        u
    }

    pub fn from_linear(config: AlgebraConfig, coeffs: Vec<Rational>) -> Result<Self> {
        if coeffs.len() != config.rank {
            return Err(Error::Dimension(format!(
                "{} linear coefficients for rank {}",
                coeffs.len(),
                config.rank
            )));
        }
        Ok(LieElement {
            config,
            linear: coeffs,
            quad: BTreeMap::new(),
        })
    }

    /// `[y_p, y_q] * poly(ad y_1, ..., ad y_m)` for any `p != q`, straightened.
    /// `poly` may involve any variable and any cap; it is truncated to `c - 2`.
    pub fn commutator_times(config: AlgebraConfig, p: usize, q: usize, poly: &TruncPoly) -> Result<Self> {
        check_poly_vars(&config, poly)?;
        let mut u = Self::zero(config);
        let (head, sign) = match p.cmp(&q) {
            Ordering::Equal => return Ok(u),
            Ordering::Greater => (HeadPair::new(p, q), Rational::one()),
            Ordering::Less => (HeadPair::new(q, p), -Rational::one()),
        };
        for (m, c) in poly.terms() {
            u.add_basis_term(head, m, &(c * &sign));
        }
        Ok(u)
    }

    /// The plain commutator `[y_p, y_q]`.
    pub fn commutator(config: AlgebraConfig, p: usize, q: usize) -> Self {
        Self::commutator_times(config, p, q, &TruncPoly::one(config.rank, config.quad_cap()))
            .expect("constant polynomial")
    }

    /// Builds an element from a linear part and arbitrary `h_pq` data keyed by
    /// `(p, q)` with `p > q`; monomials outside `t_q..t_m` are straightened.
    pub fn from_parts<I>(config: AlgebraConfig, linear: Vec<Rational>, quad: I) -> Result<Self>
    where
        I: IntoIterator<Item = ((usize, usize), TruncPoly)>,
    {
        let mut u = Self::from_linear(config, linear)?;
        for ((p, q), h) in quad {
            if p >= config.rank || q >= config.rank || p <= q {
                return Err(Error::Dimension(format!("invalid head pair ({p}, {q})")));
            }
            let v = Self::commutator_times(config, p, q, &h)?;
            u = u.try_add(&v)?;
        }
        Ok(u)
    }

    pub fn config(&self) -> AlgebraConfig {
        self.config
    }

    /// Coefficients `b_r` of the generators.
    pub fn linear(&self) -> &[Rational] {
        &self.linear
    }

    /// The `h_pq` polynomials in `(q, p)` order.
    pub fn quad(&self) -> &BTreeMap<HeadPair, TruncPoly> {
        &self.quad
    }

    /// `h_pq`, or zero.
    pub fn h(&self, p: usize, q: usize) -> TruncPoly {
        self.quad
            .get(&HeadPair::new(p, q))
            .cloned()
            .unwrap_or_else(|| TruncPoly::zero(self.config.rank, self.config.quad_cap()))
    }

    pub fn is_zero(&self) -> bool {
        self.quad.is_empty() && self.linear.iter().all(Zero::is_zero)
    }

    /// True when the linear part vanishes, i.e. the element lies in the
    /// commutator ideal.
    pub fn in_commutator_ideal(&self) -> bool {
        self.linear.iter().all(Zero::is_zero)
    }

    pub fn linear_part(&self) -> LieElement {
        LieElement {
            config: self.config,
            linear: self.linear.clone(),
            quad: BTreeMap::new(),
        }
    }

    pub fn commutator_part(&self) -> LieElement {
        LieElement {
            config: self.config,
            linear: vec![Rational::zero(); self.config.rank],
            quad: self.quad.clone(),
        }
    }

    /// `sum b_r t_r` with the given cap; `ad` of the linear part acts on the
    /// commutator ideal as multiplication by this form.
    pub fn linear_form(&self, cap: u32) -> TruncPoly {
        TruncPoly::linear_form(cap, &self.linear)
    }

    /// Basis commutators with their coefficients, in canonical order.
    pub fn basis_terms(&self) -> impl Iterator<Item = (BasisCommutator, &Rational)> {
        self.quad.iter().flat_map(|(head, h)| {
            h.terms()
                .map(move |(m, c)| (BasisCommutator::from_monomial(*head, m), c))
        })
    }

    fn add_basis_term(&mut self, head: HeadPair, m: &Monomial, c: &Rational) {
        let quad_cap = self.config.quad_cap();
        if c.is_zero() || m.degree() > quad_cap {
            return;
        }
        match m.min_var() {
            Some(j) if j < head.q => {
                // [y_p,y_q] ad y_j = [y_p,y_j] ad y_q - [y_q,y_j] ad y_p;
                // j is the minimum variable, so both results are already normal
                let rest = m.div_var(j).unwrap();
                self.push_raw(HeadPair::new(head.p, j), rest.mul_var(head.q), c.clone());
                self.push_raw(HeadPair::new(head.q, j), rest.mul_var(head.p), -c.clone());
            }
            _ => self.push_raw(head, m.clone(), c.clone()),
        }
    }

    fn push_raw(&mut self, head: HeadPair, m: Monomial, c: Rational) {
        let (rank, cap) = (self.config.rank, self.config.quad_cap());
        let entry = self
            .quad
            .entry(head)
            .or_insert_with(|| TruncPoly::zero(rank, cap));
        entry.add_term(m, c);
        if entry.is_zero() {
            self.quad.remove(&head);
        }
    }

    pub fn try_add(&self, other: &LieElement) -> Result<LieElement> {
        self.config.check_same(&other.config)?;
        let mut out = self.clone();
        for (a, b) in out.linear.iter_mut().zip(&other.linear) {
            *a += b;
        }
        for (head, h) in &other.quad {
            for (m, c) in h.terms() {
                out.push_raw(*head, m.clone(), c.clone());
            }
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &LieElement) -> Result<LieElement> {
        self.try_add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> LieElement {
        if c.is_zero() {
            return LieElement::zero(self.config);
        }
        LieElement {
            config: self.config,
            linear: self.linear.iter().map(|b| b * c).collect(),
            quad: self.quad.iter().map(|(k, h)| (*k, h.scale(c))).collect(),
        }
    }

    pub fn neg(&self) -> LieElement {
        self.scale(&-Rational::one())
    }

    /// Acts on a commutator-ideal element by `g(ad y_1, ..., ad y_m)`.
    pub fn apply_ad_poly(&self, g: &TruncPoly) -> Result<LieElement> {
        if !self.in_commutator_ideal() {
            return Err(Error::Domain(
                "polynomials in ad act only on the commutator ideal".into(),
            ));
        }
        check_poly_vars(&self.config, g)?;
        let g = g.with_cap(self.config.quad_cap());
        let mut out = LieElement::zero(self.config);
        for (head, h) in &self.quad {
            let prod = h * &g;
            for (m, c) in prod.terms() {
                out.add_basis_term(*head, m, c);
            }
        }
        Ok(out)
    }

    /// The Lie bracket `[self, other]`, by the metabelian expansion
    /// `[u, v] = [ū, v̄] + [u0, v̄] - [v0, ū]`.
    pub fn bracket(&self, other: &LieElement) -> Result<LieElement> {
        self.config.check_same(&other.config)?;
        let cfg = self.config;
        let mut out = LieElement::zero(cfg);
        let one = Monomial::one(cfg.rank);
        for p in 0..cfg.rank {
            for q in 0..p {
                let c = &self.linear[p] * &other.linear[q] - &self.linear[q] * &other.linear[p];
                out.add_basis_term(HeadPair::new(p, q), &one, &c);
            }
        }
        let lin_u = self.linear_form(cfg.quad_cap());
        let lin_v = other.linear_form(cfg.quad_cap());
        let a = self.commutator_part().apply_ad_poly(&lin_v)?;
        let b = other.commutator_part().apply_ad_poly(&lin_u)?;
        out.try_add(&a)?.try_sub(&b)
    }

    /// Normal form of `[y_p, y_q] ad y_j`.
    pub fn straighten(config: AlgebraConfig, head: HeadPair, j: usize) -> LieElement {
        let mut out = LieElement::zero(config);
        out.add_basis_term(head, &Monomial::var(config.rank, j), &Rational::one());
        out
    }

    /// Image under the projection `L(m,c) -> L(m,class)` for `class <= c`.
    pub fn project(&self, class: u32) -> Result<LieElement> {
        let target = AlgebraConfig::new(self.config.rank, class)?;
        if class > self.config.class {
            return Err(Error::Domain(format!(
                "cannot project class {} onto larger class {class}",
                self.config.class
            )));
        }
        let mut out = LieElement::from_linear(target, self.linear.clone())?;
        for (head, h) in &self.quad {
            let h = h.with_cap(target.quad_cap());
            if !h.is_zero() {
                out.quad.insert(*head, h);
            }
        }
        Ok(out)
    }

    /// Checks the structural normal-form invariants.
    pub fn is_normal(&self) -> bool {
        self.linear.len() == self.config.rank
            && self.quad.iter().all(|(head, h)| {
                head.p > head.q
                    && head.p < self.config.rank
                    && !h.is_zero()
                    && h.cap() == self.config.quad_cap()
                    && h.num_vars() == self.config.rank
                    && (0..head.q).all(|v| !h.depends_on(v))
            })
    }

    /// Canonical text form: linear part, then basis commutators ordered by
    /// head `(q, p)` and graded-lex tail.
    pub fn render(&self) -> String {
        let mut out = String::new();
        let mut push = |coeff: &Rational, atom: &str| {
            let neg = coeff.is_negative();
            let abs = coeff.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if !abs.is_one() {
                out.push_str(&fmt_rational(&abs));
                out.push('*');
            }
            out.push_str(atom);
        };
        for (r, b) in self.linear.iter().enumerate() {
            if !b.is_zero() {
                push(b, &format!("y{}", r + 1));
            }
        }
        for (bc, c) in self.basis_terms() {
            push(c, &bc.to_string());
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

fn check_poly_vars(config: &AlgebraConfig, poly: &TruncPoly) -> Result<()> {
    if poly.num_vars() != config.rank {
        return Err(Error::Dimension(format!(
            "polynomial over {} variables used in rank {}",
            poly.num_vars(),
            config.rank
        )));
    }
    Ok(())
}

impl fmt::Display for LieElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for LieElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L({},{})[{}]", self.config.rank, self.config.class, self.render())
    }
}
