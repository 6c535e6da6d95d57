//! Independent BCH oracle in the triangular associative envelope of the
//! wreath product.
//!
//! An element is represented by the `2 x 2` matrix `[[0, a], [0, d]]` where
//! `a` is the row of module coordinates and `d = sum b_i t_i`. Its powers are
//! `[[0, a d^{k-1}], [0, d^k]]`, so `exp` has the closed form
//! `[[1, a h(d)], [0, e^d]]`, and `e^Z = e^X e^Y` is solved without any
//! series for the logarithm.

use crate::error::{Error, Result};
use crate::lie::{AlgebraConfig, LieElement};
use crate::poly::TruncPoly;
use crate::wreath::{embed, lift};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangularRep {
    pub config: AlgebraConfig,
    pub a_row: Vec<TruncPoly>,
    pub diag: TruncPoly,
}

impl TriangularRep {
    /// Commutator `XY - YX`; the product of two strictly upper parts is zero.
    pub fn bracket(&self, other: &TriangularRep) -> Result<TriangularRep> {
        self.config.check_same(&other.config)?;
        let a_row = self
            .a_row
            .iter()
            .zip(&other.a_row)
            .map(|(x, y)| &(x * &other.diag) - &(y * &self.diag))
            .collect();
        Ok(TriangularRep {
            config: self.config,
            a_row,
            diag: TruncPoly::zero(self.config.rank(), self.config.deriv_cap()),
        })
    }
}

/// `exp` of a representative: the upper-right row and the lower-right entry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangularExp {
    pub module_row: Vec<TruncPoly>,
    pub diag_exp: TruncPoly,
}

pub fn rep_of(u: &LieElement) -> TriangularRep {
    let cfg = u.config();
    TriangularRep {
        config: cfg,
        a_row: embed(u).into_a_coords(),
        diag: u.linear_form(cfg.deriv_cap()),
    }
}

pub fn rep_exp(x: &TriangularRep) -> TriangularExp {
    let h = x.diag.h_series().expect("diagonal is a linear form");
    TriangularExp {
        module_row: x.a_row.iter().map(|a| a * &h).collect(),
        diag_exp: x.diag.exp().expect("diagonal is a linear form"),
    }
}

/// Multiplies two exponentials in the envelope.
pub fn exp_product(x: &TriangularExp, y: &TriangularExp) -> TriangularExp {
    // [[1, A], [0, E]] [[1, B], [0, F]] = [[1, B + A F], [0, E F]]
    TriangularExp {
        module_row: x
            .module_row
            .iter()
            .zip(&y.module_row)
            .map(|(a, b)| b + &(a * &y.diag_exp))
            .collect(),
        diag_exp: &x.diag_exp * &y.diag_exp,
    }
}

/// Solves `e^Z = e^{rep(u)} e^{rep(v)}` in the envelope and pulls `Z` back to
/// the Lie algebra.
pub fn rep_bch(u: &LieElement, v: &LieElement) -> Result<LieElement> {
    let cfg = u.config();
    cfg.check_same(&v.config())?;
    let product = exp_product(&rep_exp(&rep_of(u)), &rep_exp(&rep_of(v)));
    let linear: Vec<_> = u
        .linear()
        .iter()
        .zip(v.linear())
        .map(|(a, b)| a + b)
        .collect();
    let diag = TruncPoly::linear_form(cfg.deriv_cap(), &linear);
    let inv_h = diag.h_series()?.unit_inverse()?;
    let a_row: Vec<TruncPoly> = product.module_row.iter().map(|b| b * &inv_h).collect();
    lift(cfg, &linear, &a_row)
        .map_err(|e| Error::Internal(format!("envelope logarithm left the image: {e}")))
}
