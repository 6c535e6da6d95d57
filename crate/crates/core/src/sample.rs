//! Random elements for experiments and randomized checks.
//!
//! Coefficients are small rationals and polynomials are sparse, which keeps
//! exact arithmetic cheap while still touching every degree up to the cap.

use rand::Rng;

use crate::aut::IAEndomorphism;
use crate::lie::{AlgebraConfig, LieElement};
use crate::poly::{Monomial, Rational, TruncPoly};

/// Nonzero rational with numerator in `-4..=4` and denominator in `1..=3`.
pub fn rational<R: Rng + ?Sized>(rng: &mut R) -> Rational {
    let den = rng.gen_range(1..=3i64);
    let mut num = rng.gen_range(-4..=3i64);
    if num >= 0 {
        num += 1;
    }
    crate::poly::rat(num, den)
}

/// Random monomial in variables `min_var..num_vars` of degree `<= max_degree`.
pub fn monomial<R: Rng + ?Sized>(rng: &mut R, num_vars: usize, min_var: usize, max_degree: u32) -> Monomial {
    let degree = rng.gen_range(0..=max_degree);
    let mut exps = vec![0u32; num_vars];
    for _ in 0..degree {
        exps[rng.gen_range(min_var..num_vars)] += 1;
    }
    Monomial::new(exps)
}

/// Sparse random polynomial with up to `max_terms` terms in `t_{min_var+1}..`.
pub fn poly<R: Rng + ?Sized>(
    rng: &mut R,
    num_vars: usize,
    cap: u32,
    min_var: usize,
    max_terms: usize,
) -> TruncPoly {
    let mut p = TruncPoly::zero(num_vars, cap);
    for _ in 0..rng.gen_range(1..=max_terms) {
        p.add_term(monomial(rng, num_vars, min_var, cap), rational(rng));
    }
    p
}

/// Random element of the commutator ideal.
pub fn commutator_element<R: Rng + ?Sized>(rng: &mut R, config: AlgebraConfig) -> LieElement {
    let m = config.rank();
    let mut quad = Vec::new();
    for p in 0..m {
        for q in 0..p {
            if rng.gen_bool(0.6) {
                quad.push(((p, q), poly(rng, m, config.quad_cap(), q, 3)));
            }
        }
    }
    LieElement::from_parts(config, vec![Rational::default(); m], quad).expect("valid heads")
}

/// Random element with a (possibly partly zero) linear part.
pub fn lie_element<R: Rng + ?Sized>(rng: &mut R, config: AlgebraConfig) -> LieElement {
    let linear = (0..config.rank())
        .map(|_| {
            if rng.gen_bool(0.7) {
                rational(rng)
            } else {
                Rational::default()
            }
        })
        .collect();
    let linear = LieElement::from_linear(config, linear).expect("rank-sized");
    linear
        .try_add(&commutator_element(rng, config))
        .expect("same configuration")
}

/// Random IA-endomorphism; every one of them is an automorphism of `L(m,c)`.
pub fn ia_endomorphism<R: Rng + ?Sized>(rng: &mut R, config: AlgebraConfig) -> IAEndomorphism {
    let deltas = (0..config.rank())
        .map(|_| commutator_element(rng, config))
        .collect();
    IAEndomorphism::from_deltas(config, deltas).expect("increments lie in the ideal")
}
