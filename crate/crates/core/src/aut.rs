//! IA-endomorphisms of `L(m,c)`, inner automorphisms `exp(ad u)`, and their
//! Jacobian matrices.
//!
//! Composition follows `(phi psi)(x) = phi(psi(x))`, for which
//! `J(phi psi) = J(phi) J(psi)`.

use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::lie::{AlgebraConfig, LieElement};
use crate::poly::TruncPoly;
use crate::wreath::{self, JacobianMatrix};

/// `y_j -> y_j + w_j` with every `w_j` in the commutator ideal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IAEndomorphism {
    config: AlgebraConfig,
    deltas: Vec<LieElement>,
}

impl IAEndomorphism {
    pub fn identity(config: AlgebraConfig) -> Self {
        IAEndomorphism {
            config,
            deltas: vec![LieElement::zero(config); config.rank()],
        }
    }

    pub fn from_deltas(config: AlgebraConfig, deltas: Vec<LieElement>) -> Result<Self> {
        if deltas.len() != config.rank() {
            return Err(Error::Dimension(format!(
                "{} generator images for rank {}",
                deltas.len(),
                config.rank()
            )));
        }
        for (j, w) in deltas.iter().enumerate() {
            config.check_same(&w.config())?;
            if !w.in_commutator_ideal() {
                return Err(Error::Domain(format!(
                    "increment of y{} must lie in the commutator ideal",
                    j + 1
                )));
            }
        }
        Ok(IAEndomorphism { config, deltas })
    }

    /// From full generator images; image `j` must be `y_j` modulo the
    /// commutator ideal.
    pub fn from_images(config: AlgebraConfig, images: Vec<LieElement>) -> Result<Self> {
        let deltas = images
            .into_iter()
            .enumerate()
            .map(|(j, img)| img.try_sub(&LieElement::generator(config, j)))
            .collect::<Result<Vec<_>>>()?;
        Self::from_deltas(config, deltas)
    }

    pub fn config(&self) -> AlgebraConfig {
        self.config
    }

    pub fn deltas(&self) -> &[LieElement] {
        &self.deltas
    }

    /// `phi(y_j)`.
    pub fn image(&self, j: usize) -> LieElement {
        LieElement::generator(self.config, j)
            .try_add(&self.deltas[j])
            .expect("same configuration")
    }

    pub fn images(&self) -> Vec<LieElement> {
        (0..self.config.rank()).map(|j| self.image(j)).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.deltas.iter().all(LieElement::is_zero)
    }

    /// `phi(u)`: substitutes `y_j -> y_j + w_j`. On the commutator ideal the
    /// operators `ad phi(y_k)` and `ad y_k` agree, so only the head brackets
    /// change.
    pub fn apply(&self, u: &LieElement) -> Result<LieElement> {
        self.config.check_same(&u.config())?;
        let mut out = u.linear_part();
        for (w, b) in self.deltas.iter().zip(u.linear()) {
            if !b.is_zero() {
                out = out.try_add(&w.scale(b))?;
            }
        }
        for (head, h) in u.quad() {
            let top = self.image(head.p).bracket(&self.image(head.q))?;
            out = out.try_add(&top.apply_ad_poly(h)?)?;
        }
        Ok(out)
    }

    /// `self ∘ other`: `other` acts first.
    pub fn compose(&self, other: &IAEndomorphism) -> Result<IAEndomorphism> {
        self.config.check_same(&other.config)?;
        let images = other
            .images()
            .iter()
            .map(|img| self.apply(img))
            .collect::<Result<Vec<_>>>()?;
        Self::from_images(self.config, images)
    }

    pub fn jacobian(&self) -> JacobianMatrix {
        wreath::jacobian(self)
    }

    /// The unique IA-endomorphism with the given Jacobian matrix.
    pub fn from_jacobian(matrix: &JacobianMatrix) -> Result<IAEndomorphism> {
        let cfg = matrix.config();
        let s = matrix.s_part();
        let mut deltas = Vec::with_capacity(cfg.rank());
        for j in 0..cfg.rank() {
            let col = s.column(j);
            if col.iter().any(|e| !e.constant_term().is_zero()) || !wreath::membership(&col) {
                return Err(Error::NotInS(format!("column {} fails the membership test", j + 1)));
            }
            let zero = vec![Zero::zero(); cfg.rank()];
            deltas.push(wreath::lift(cfg, &zero, &col).map_err(|e| Error::NotInS(e.to_string()))?);
        }
        Self::from_deltas(cfg, deltas)
    }

    /// Inverse through the Jacobian: `from_jacobian(J^-1)`.
    pub fn inverse(&self) -> Result<IAEndomorphism> {
        Self::from_jacobian(&self.jacobian().inverse()?)
    }

    /// Restriction to a smaller class.
    pub fn project(&self, class: u32) -> Result<IAEndomorphism> {
        let cfg = AlgebraConfig::new(self.config.rank(), class)?;
        let deltas = self
            .deltas
            .iter()
            .map(|w| w.project(class))
            .collect::<Result<Vec<_>>>()?;
        Self::from_deltas(cfg, deltas)
    }

    /// JSON object mapping `y1..ym` to canonical image strings.
    pub fn to_json(&self) -> serde_json::Value {
        let map = (0..self.config.rank())
            .map(|j| (format!("y{}", j + 1), serde_json::Value::String(self.image(j).render())))
            .collect();
        serde_json::Value::Object(map)
    }
}

impl fmt::Debug for IAEndomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_json())
    }
}

/// `exp(ad u)` together with its generator.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct InnerAutomorphism {
    pub generator: LieElement,
    pub expansion: IAEndomorphism,
}

/// `exp(ad u)(y_j) = y_j + [y_j, u] * h(ad ū)` with `h(x) = (e^x - 1)/x`;
/// `ad u0` is zero on the commutator ideal and `ad^c = 0` truncates the series.
pub fn exp_ad(u: &LieElement) -> InnerAutomorphism {
    let cfg = u.config();
    let t = u.linear_form(cfg.quad_cap());
    let weight = t.h_series().expect("linear form has no constant term");
    let deltas = (0..cfg.rank())
        .map(|j| {
            LieElement::generator(cfg, j)
                .bracket(u)
                .and_then(|b| b.apply_ad_poly(&weight))
                .expect("same configuration")
        })
        .collect();
    InnerAutomorphism {
        generator: u.clone(),
        expansion: IAEndomorphism::from_deltas(cfg, deltas).expect("brackets lie in the ideal"),
    }
}

/// Closed-form Jacobian `I + (D̄ + D0) T` of `exp(ad u)`, built directly from
/// the coefficients `c_r` and `h_pq` of `u`.
pub fn inner_jacobian(u: &LieElement) -> JacobianMatrix {
    let cfg = u.config();
    let (m, cap) = (cfg.rank(), cfg.deriv_cap());
    let c = u.linear();
    let var = |k: usize| TruncPoly::var(m, cap, k);
    let t = u.linear_form(cap);
    let series = t.h_series().expect("linear form has no constant term");
    // f_i = sum_{q<i} t_q h_iq - sum_{p>i} t_p h_pi
    let f: Vec<TruncPoly> = (0..m)
        .map(|i| {
            let mut acc = TruncPoly::zero(m, cap);
            for q in 0..i {
                acc = &acc + &u.h(i, q).with_cap(cap).mul_var(q);
            }
            for p in i + 1..m {
                acc = &acc - &u.h(p, i).with_cap(cap).mul_var(p);
            }
            acc
        })
        .collect();
    let entries = (0..m)
        .map(|i| {
            (0..m)
                .map(|j| {
                    let d_bar = if i == j {
                        (0..m)
                            .filter(|&r| r != j)
                            .fold(TruncPoly::zero(m, cap), |acc, r| &acc + &var(r).scale(&c[r]))
                    } else {
                        var(j).scale(&-c[i].clone())
                    };
                    let d0 = -&f[i].mul_var(j);
                    let mut e = &(&d_bar + &d0) * &series;
                    if i == j {
                        e = &e + &TruncPoly::one(m, cap);
                    }
                    e
                })
                .collect()
        })
        .collect();
    JacobianMatrix::new(cfg, entries).expect("entries have the derivative cap")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::HeadPair;
    use crate::poly::{int, rat};

    fn cfg(m: usize, c: u32) -> AlgebraConfig {
        AlgebraConfig::new(m, c).unwrap()
    }

    fn poly(c: AlgebraConfig, terms: &[(&[u32], crate::poly::Rational)]) -> TruncPoly {
        TruncPoly::from_terms(
            c.rank(),
            c.deriv_cap(),
            terms.iter().map(|(e, k)| (e.to_vec(), k.clone())),
        )
    }

    /// y1 -> y1 + [y2,y1], y2 -> y2
    fn phi_example(c: AlgebraConfig) -> IAEndomorphism {
        IAEndomorphism::from_deltas(c, vec![LieElement::commutator(c, 1, 0), LieElement::zero(c)]).unwrap()
    }

    #[test]
    fn apply_examples() {
        let c = cfg(2, 3);
        let u = LieElement::generator(c, 0).try_add(&LieElement::commutator(c, 1, 0)).unwrap();
        assert_eq!(IAEndomorphism::identity(c).apply(&u).unwrap(), u);
        let phi = phi_example(c);
        let got = phi.apply(&LieElement::commutator(c, 1, 0)).unwrap();
        let expected = LieElement::commutator(c, 1, 0)
            .try_sub(&LieElement::straighten(c, HeadPair::new(1, 0), 1))
            .unwrap();
        assert_eq!(got, expected);
        assert_eq!(phi.apply(&LieElement::generator(c, 0)).unwrap(), phi.image(0));
    }

    #[test]
    fn jacobian_example() {
        let c = cfg(2, 3);
        let j = phi_example(c).jacobian();
        assert_eq!(j.entry(0, 0), &poly(c, &[(&[0, 0], int(1)), (&[0, 1], int(-1))]));
        assert_eq!(j.entry(0, 1), &TruncPoly::zero(2, 2));
        assert_eq!(j.entry(1, 0), &poly(c, &[(&[1, 0], int(1))]));
        assert_eq!(j.entry(1, 1), &TruncPoly::one(2, 2));
        assert!(j.in_i_plus_s());
        assert_eq!(IAEndomorphism::from_jacobian(&j).unwrap(), phi_example(c));
    }

    #[test]
    fn compose_example_matches_matrix_product() {
        let c = cfg(2, 3);
        let phi = phi_example(c);
        let psi =
            IAEndomorphism::from_deltas(c, vec![LieElement::zero(c), LieElement::commutator(c, 1, 0)]).unwrap();
        let comp = phi.compose(&psi).unwrap();
        let j = comp.jacobian();
        // [[1 - t2, -t2(1 - t2)], [t1, 1 + t1(1 - t2)]]
        assert_eq!(j.entry(0, 0), &poly(c, &[(&[0, 0], int(1)), (&[0, 1], int(-1))]));
        assert_eq!(j.entry(0, 1), &poly(c, &[(&[0, 1], int(-1)), (&[0, 2], int(1))]));
        assert_eq!(j.entry(1, 0), &poly(c, &[(&[1, 0], int(1))]));
        assert_eq!(
            j.entry(1, 1),
            &poly(c, &[(&[0, 0], int(1)), (&[1, 0], int(1)), (&[1, 1], int(-1))])
        );
        assert_eq!(j, phi.jacobian().try_mul(&psi.jacobian()).unwrap());
        assert_eq!(phi.compose(&IAEndomorphism::identity(c)).unwrap(), phi);
        assert!(phi.compose(&phi.inverse().unwrap()).unwrap().is_identity());
    }

    #[test]
    fn exp_ad_examples() {
        let c = cfg(2, 3);
        assert!(exp_ad(&LieElement::zero(c)).expansion.is_identity());
        let e = exp_ad(&LieElement::generator(c, 0)).expansion;
        assert!(e.deltas()[0].is_zero());
        assert_eq!(
            e.deltas()[1].h(1, 0),
            TruncPoly::from_terms(2, 1, vec![(vec![0, 0], int(1)), (vec![1, 0], rat(1, 2))])
        );
    }

    #[test]
    fn inner_jacobian_example() {
        let c = cfg(2, 3);
        let y1 = LieElement::generator(c, 0);
        let j = inner_jacobian(&y1);
        // [[1, -t2(1 + t1/2)], [0, 1 + t1(1 + t1/2)]] truncated at degree 2
        assert_eq!(j.entry(0, 0), &TruncPoly::one(2, 2));
        assert_eq!(j.entry(0, 1), &poly(c, &[(&[0, 1], int(-1)), (&[1, 1], rat(-1, 2))]));
        assert_eq!(j.entry(1, 0), &TruncPoly::zero(2, 2));
        assert_eq!(
            j.entry(1, 1),
            &poly(c, &[(&[0, 0], int(1)), (&[1, 0], int(1)), (&[2, 0], rat(1, 2))])
        );
        assert_eq!(j, exp_ad(&y1).expansion.jacobian());
        assert_eq!(inner_jacobian(&LieElement::zero(c)), JacobianMatrix::identity(c));
    }

    #[test]
    fn from_jacobian_rejects_outside_s() {
        let c = cfg(2, 3);
        let mut rows = JacobianMatrix::identity(c).rows().to_vec();
        rows[0][0] = poly(c, &[(&[0, 0], int(1)), (&[1, 0], int(1))]);
        let m = JacobianMatrix::new(c, rows).unwrap();
        assert!(matches!(IAEndomorphism::from_jacobian(&m), Err(Error::NotInS(_))));
    }

    #[test]
    fn increments_must_lie_in_ideal() {
        let c = cfg(2, 3);
        let bad = IAEndomorphism::from_deltas(c, vec![LieElement::generator(c, 1), LieElement::zero(c)]);
        assert!(matches!(bad, Err(Error::Domain(_))));
    }
}
