//! Canonical representatives of the cosets `Inn · theta` in the group of
//! IA-automorphisms, and the reduction that finds them.
//!
//! A representative `theta` has `J(theta) = I + S` where
//!
//! * `S[1][1] = s` does not involve `t1`;
//! * `S[i][1] = t1 q_i + r_i` for `i >= 2`, with `q_i` free of `t1..t_{i-1}`
//!   and `r_i` free of `t1`;
//! * `s + sum t_i q_i = 0`, `sum t_i r_i = 0`, and every other column passes
//!   the membership test;
//! * `S[1][2]` has no `t2` summand;
//! * `s`, `q_i`, `r_i` have no constant term.
//!
//! The reduction multiplies on the left by `exp(ad u_0)` (linear `u_0`, fixes
//! the linear terms), then `exp(ad u_1)` (removes the `t1^2` parts of the
//! first column), then `exp(ad u_s)` for `s = 2..m-1` (strips `t_s` from the
//! tails `q_i`, `i > s`).

use num_traits::Zero;

use crate::aut::{exp_ad, IAEndomorphism};
use crate::bch::bch_compose;
use crate::error::{Error, Result};
use crate::lie::LieElement;
use crate::poly::{Rational, TruncPoly};
use crate::wreath::{weighted_sum, JacobianMatrix};

/// `f = t1^2 p + t1 q + r` with `q`, `r` free of `t1`.
pub fn t1_split(f: &TruncPoly) -> (TruncPoly, TruncPoly, TruncPoly) {
    f.split_square(0)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalForm {
    pub theta: IAEndomorphism,
    pub jacobian: JacobianMatrix,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionTrace {
    pub input: IAEndomorphism,
    /// `u_0, ..., u_{m-1}`; `theta = exp(ad u_{m-1}) ∘ ... ∘ exp(ad u_0) ∘ input`.
    pub inner_generators: Vec<LieElement>,
    /// `v` with `input = exp(ad v) ∘ theta`.
    pub combined_inner: LieElement,
    pub canonical: CanonicalForm,
}

impl ReductionTrace {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "inner_generators": self
                .inner_generators
                .iter()
                .map(LieElement::render)
                .collect::<Vec<_>>(),
            "combined_inner": self.combined_inner.render(),
            "theta": self.canonical.theta.to_json(),
        })
    }
}

/// Whether a Jacobian matrix has the canonical shape.
pub fn jacobian_shape_check(j: &JacobianMatrix) -> bool {
    let cfg = j.config();
    let m = cfg.rank();
    let s = j.s_part();
    if s.rows().iter().flatten().any(|e| !e.constant_term().is_zero()) {
        return false;
    }
    let s11 = s.entry(0, 0);
    if s11.depends_on(0) {
        return false;
    }
    let mut qs = Vec::with_capacity(m);
    let mut rs = Vec::with_capacity(m);
    qs.push(s11.clone());
    rs.push(TruncPoly::zero(m, cfg.deriv_cap()));
    for i in 1..m {
        let (p, q, r) = t1_split(s.entry(i, 0));
        if !p.is_zero() || !q.constant_term().is_zero() || (0..i).any(|v| q.depends_on(v)) {
            return false;
        }
        qs.push(q);
        rs.push(r);
    }
    // s + sum t_i q_i and sum t_i r_i, both at cap c
    if !first_sum_vanishes(&qs) {
        return false;
    }
    if !weighted_sum(&rs).is_zero() {
        return false;
    }
    if (1..m).any(|col| !weighted_sum(&s.column(col)).is_zero()) {
        return false;
    }
    s.entry(0, 1).coeff(&crate::poly::Monomial::var(m, 1)).is_zero()
}

/// `s + sum_{i>=2} t_i q_i = 0`, where `qs[0]` holds `s`.
fn first_sum_vanishes(qs: &[TruncPoly]) -> bool {
    let cap = qs[0].cap() + 1;
    let mut acc = qs[0].with_cap(cap);
    for (i, q) in qs.iter().enumerate().skip(1) {
        acc = &acc + &q.with_cap(cap).mul_var(i);
    }
    acc.is_zero()
}

pub fn shape_check(phi: &IAEndomorphism) -> bool {
    jacobian_shape_check(&phi.jacobian())
}

fn constant(p: &TruncPoly) -> Rational {
    p.constant_term()
}

/// Runs the reduction and records every inner factor.
pub fn reduce(psi: &IAEndomorphism) -> Result<ReductionTrace> {
    let cfg = psi.config();
    let m = cfg.rank();
    let mut generators = Vec::with_capacity(m);

    // step 0: linear part from the constant terms of h_{k1} in psi(y1) and h_{21} in psi(y2)
    let mut coeffs = vec![Rational::zero(); m];
    coeffs[0] = -constant(&psi.deltas()[1].h(1, 0));
    for (k, c) in coeffs.iter_mut().enumerate().skip(1) {
        *c = constant(&psi.deltas()[0].h(k, 0));
    }
    let u0 = LieElement::from_linear(cfg, coeffs)?;
    let mut current = exp_ad(&u0).expansion.compose(psi)?;
    generators.push(u0);

    // step 1: u_1 = sum_{i>=2} [y_i, y_1] p_i
    let jac = current.jacobian().s_part();
    let mut u1 = LieElement::zero(cfg);
    for i in 1..m {
        let (p, _, _) = t1_split(jac.entry(i, 0));
        u1 = u1.try_add(&LieElement::commutator_times(cfg, i, 0, &p)?)?;
    }
    current = exp_ad(&u1).expansion.compose(&current)?;
    generators.push(u1);
    let jac = current.jacobian().s_part();
    for i in 1..m {
        if !t1_split(jac.entry(i, 0)).0.is_zero() {
            return Err(Error::Internal(format!(
                "t1^2 part survives in row {} after the second step",
                i + 1
            )));
        }
    }

    // steps s = 2..m-1: q_i = t_s q_i' + q_i'' for i > s
    for s in 1..m.saturating_sub(1) {
        let jac = current.jacobian().s_part();
        let mut us = LieElement::zero(cfg);
        for i in s + 1..m {
            let (_, q, _) = t1_split(jac.entry(i, 0));
            let with_ts = &q - &q.subst_zero(s)?;
            let mut q_prime = TruncPoly::zero(m, q.cap());
            for (mono, c) in with_ts.terms() {
                q_prime.add_term(mono.div_var(s).unwrap(), c.clone());
            }
            us = us.try_add(&LieElement::commutator_times(cfg, i, s, &q_prime)?)?;
        }
        current = exp_ad(&us).expansion.compose(&current)?;
        generators.push(us);
        let jac = current.jacobian().s_part();
        for i in s + 1..m {
            if t1_split(jac.entry(i, 0)).1.depends_on(s) {
                return Err(Error::Internal(format!(
                    "t{} survives in q_{} after step {}",
                    s + 1,
                    i + 1,
                    s + 1
                )));
            }
        }
    }

    let jacobian = current.jacobian();
    if !jacobian_shape_check(&jacobian) {
        return Err(Error::Internal("reduced automorphism fails the shape check".into()));
    }

    // input = exp(-u_0) ∘ ... ∘ exp(-u_{m-1}) ∘ theta, and
    // exp(ad bch(a, b)) = exp(ad b) ∘ exp(ad a), so fold from the right
    let mut combined = LieElement::zero(cfg);
    for g in &generators {
        combined = bch_compose(&g.neg(), &combined)?;
    }

    Ok(ReductionTrace {
        input: psi.clone(),
        inner_generators: generators,
        combined_inner: combined,
        canonical: CanonicalForm {
            theta: current,
            jacobian,
        },
    })
}

pub fn same_coset(a: &IAEndomorphism, b: &IAEndomorphism) -> Result<bool> {
    a.config().check_same(&b.config())?;
    Ok(reduce(a)?.canonical.theta == reduce(b)?.canonical.theta)
}

/// Some `v` with `exp(ad v) = psi` when `psi` is inner.
pub fn is_inner(psi: &IAEndomorphism) -> Result<Option<LieElement>> {
    let trace = reduce(psi)?;
    Ok(trace
        .canonical
        .theta
        .is_identity()
        .then_some(trace.combined_inner))
}
