//! Closed-form metabelian Baker-Campbell-Hausdorff series and the induced
//! multiplication of inner automorphisms.
//!
//! In a metabelian algebra the solution of `e^z = e^x e^y` is
//! `z = x + y + [x,y] c(ad x, ad y)` with
//! `c(t,u) = (e^u h(t) - h(u)) / (e^{t+u} - 1)` and `h(v) = (e^v - 1)/v`.
//! Numerator and denominator share the factor `t + u`; after cancelling it the
//! denominator `h(t + u)` is a unit.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::lie::LieElement;
use crate::poly::{Rational, TruncPoly};

/// `c(t, u)` as a two-variable series (`t1 = t`, `t2 = u`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BchSeries {
    pub cap: u32,
    pub series: TruncPoly,
}

impl BchSeries {
    /// Coefficient `c_ab` of `t^a u^b`.
    pub fn coeff(&self, a: u32, b: u32) -> Rational {
        self.series.coeff_of(&[a, b])
    }
}

fn compute_gerritzen(cap: u32) -> Result<BchSeries> {
    let wide = cap + 1;
    let t = TruncPoly::var(2, wide, 0);
    let u = TruncPoly::var(2, wide, 1);
    let numerator = &(&u.exp()? * &t.h_series()?) - &u.h_series()?;
    let sum = &t + &u;
    let reduced = numerator.div_linear(&sum.with_cap(1)).map_err(|e| {
        Error::Internal(format!("numerator of c(t,u) not divisible by t+u: {e}"))
    })?;
    let denominator = sum.with_cap(cap).h_series()?;
    let series = &reduced * &denominator.unit_inverse()?;
    Ok(BchSeries { cap, series })
}

/// `c(t, u)` truncated at total degree `cap`. Results are memoized per cap.
pub fn gerritzen_c(cap: u32) -> Result<BchSeries> {
    static CACHE: OnceLock<Mutex<HashMap<u32, BchSeries>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(hit) = cache.lock().unwrap().get(&cap) {
        return Ok(hit.clone());
    }
    let computed = compute_gerritzen(cap)?;
    cache.lock().unwrap().insert(cap, computed.clone());
    Ok(computed)
}

/// The element `w` with `e^w = e^u e^v`.
///
/// Since `ad x` acts on the right (`y -> [y, x]`), `ad` reverses products and
/// as maps `exp(ad w) = exp(ad v) ∘ exp(ad u)`: apply `exp(ad u)` first.
///
/// `w = ū + v̄ + [ū,v̄] c + u0 (1 + (ad v̄) c) + v0 (1 - (ad ū) c)`
/// where `c = c(ad ū, ad v̄)`. On the commutator ideal `ad ū` and `ad v̄` are
/// multiplication by the linear forms of `ū` and `v̄`, so the operator
/// substitution is a polynomial substitution.
pub fn bch_compose(u: &LieElement, v: &LieElement) -> Result<LieElement> {
    let cfg = u.config();
    cfg.check_same(&v.config())?;
    let cap = cfg.quad_cap();
    let lu = u.linear_form(cap);
    let lv = v.linear_form(cap);
    let c = gerritzen_c(cap)?.series.substitute(&[lu.clone(), lv.clone()])?;
    let (ubar, vbar) = (u.linear_part(), v.linear_part());
    let (u0, v0) = (u.commutator_part(), v.commutator_part());

    let h_part = ubar
        .try_add(&vbar)?
        .try_add(&ubar.bracket(&vbar)?.apply_ad_poly(&c)?)?;
    let u_part = u0.try_add(&u0.apply_ad_poly(&(&lv * &c))?)?;
    let v_part = v0.try_sub(&v0.apply_ad_poly(&(&lu * &c))?)?;
    h_part.try_add(&u_part)?.try_add(&v_part)
}
