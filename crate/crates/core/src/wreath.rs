//! The embedding `y_i -> a_i + b_i` of `L(m,c)` into the abelian wreath
//! product, partial derivatives, Jacobian matrices, and the inverse of the
//! embedding on its image.
//!
//! The module coordinates `a_i` are polynomials in `t_1..t_m` with cap `c - 1`;
//! a bracket `[a_i f, b_j]` is `a_i f t_j`. Membership of a module element in
//! the image of the commutator ideal is the single condition
//! `sum t_i f_i = 0`, evaluated at cap `c`.

use std::fmt;

use num_traits::Zero;

use crate::aut::IAEndomorphism;
use crate::error::{Error, Result};
use crate::lie::{AlgebraConfig, LieElement};
use crate::poly::{Rational, TruncPoly};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WreathElement {
    config: AlgebraConfig,
    b_coords: Vec<Rational>,
    a_coords: Vec<TruncPoly>,
}

impl WreathElement {
    pub fn new(config: AlgebraConfig, b_coords: Vec<Rational>, a_coords: Vec<TruncPoly>) -> Result<Self> {
        check_coords(&config, &b_coords, &a_coords)?;
        Ok(WreathElement {
            config,
            b_coords,
            a_coords,
        })
    }

    pub fn zero(config: AlgebraConfig) -> Self {
        WreathElement {
            config,
            b_coords: vec![Rational::zero(); config.rank()],
            a_coords: vec![TruncPoly::zero(config.rank(), config.deriv_cap()); config.rank()],
        }
    }

    pub fn config(&self) -> AlgebraConfig {
        self.config
    }

    pub fn b_coords(&self) -> &[Rational] {
        &self.b_coords
    }

    pub fn a_coords(&self) -> &[TruncPoly] {
        &self.a_coords
    }

    pub fn into_a_coords(self) -> Vec<TruncPoly> {
        self.a_coords
    }

    pub fn is_zero(&self) -> bool {
        self.b_coords.iter().all(Zero::is_zero) && self.a_coords.iter().all(TruncPoly::is_zero)
    }

    pub fn try_add(&self, other: &WreathElement) -> Result<WreathElement> {
        self.config.check_same(&other.config)?;
        Ok(WreathElement {
            config: self.config,
            b_coords: self
                .b_coords
                .iter()
                .zip(&other.b_coords)
                .map(|(x, y)| x + y)
                .collect(),
            a_coords: self
                .a_coords
                .iter()
                .zip(&other.a_coords)
                .map(|(x, y)| x + y)
                .collect(),
        })
    }

    /// `sum beta_j t_j` for the `b` part.
    fn b_form(&self) -> TruncPoly {
        TruncPoly::linear_form(self.config.deriv_cap(), &self.b_coords)
    }

    /// Bracket in the wreath product; the result lies in the module part.
    pub fn bracket(&self, other: &WreathElement) -> Result<WreathElement> {
        self.config.check_same(&other.config)?;
        let (bx, by) = (self.b_form(), other.b_form());
        let a_coords = self
            .a_coords
            .iter()
            .zip(&other.a_coords)
            .map(|(ax, ay)| &(ax * &by) - &(ay * &bx))
            .collect();
        Ok(WreathElement {
            config: self.config,
            b_coords: vec![Rational::zero(); self.config.rank()],
            a_coords,
        })
    }
}

fn check_coords(config: &AlgebraConfig, b: &[Rational], a: &[TruncPoly]) -> Result<()> {
    let m = config.rank();
    if b.len() != m || a.len() != m {
        return Err(Error::Dimension(format!(
            "expected {m} coordinates, got {} b and {} a",
            b.len(),
            a.len()
        )));
    }
    for f in a {
        if f.num_vars() != m || f.cap() != config.deriv_cap() {
            return Err(Error::Dimension(format!(
                "module coordinate must be over {m} vars with cap {}",
                config.deriv_cap()
            )));
        }
    }
    Ok(())
}

/// Image of `u` in the wreath product.
pub fn embed(u: &LieElement) -> WreathElement {
    let cfg = u.config();
    let (m, cap) = (cfg.rank(), cfg.deriv_cap());
    let mut a: Vec<TruncPoly> = u
        .linear()
        .iter()
        .map(|b| TruncPoly::constant(m, cap, b.clone()))
        .collect();
    for (head, h) in u.quad() {
        // (a_p t_q - a_q t_p) h
        let h = h.with_cap(cap);
        a[head.p] = &a[head.p] + &h.mul_var(head.q);
        a[head.q] = &a[head.q] - &h.mul_var(head.p);
    }
    WreathElement {
        config: cfg,
        b_coords: u.linear().to_vec(),
        a_coords: a,
    }
}

/// Partial derivatives `du/dy_i`, i.e. the module coordinates of the embedding.
pub fn partials(u: &LieElement) -> Vec<TruncPoly> {
    embed(u).a_coords
}

/// `sum t_i f_i` computed one degree above the coordinates' cap.
pub fn weighted_sum(coords: &[TruncPoly]) -> TruncPoly {
    let Some(first) = coords.first() else {
        return TruncPoly::zero(0, 0);
    };
    let cap = first.cap() + 1;
    coords
        .iter()
        .enumerate()
        .fold(TruncPoly::zero(first.num_vars(), cap), |acc, (i, f)| {
            &acc + &f.with_cap(cap).mul_var(i)
        })
}

/// True iff `sum a_i f_i` lies in the image of the commutator ideal.
pub fn membership(coords: &[TruncPoly]) -> bool {
    weighted_sum(coords).is_zero()
}

/// Recovers the unique normal-form element whose embedding has the given
/// coordinates.
///
/// Rows are peeled from `i = m` down to `1`: once every `h_pi` with `p > i` is
/// known, `f_i + sum_{p>i} t_p h_pi = sum_{q<i} t_q h_iq(t_q..t_m)` and each
/// monomial is assigned to the head `(i, q)` with `q` its smallest variable.
/// Anything left over means the data is outside the image.
pub fn lift(config: AlgebraConfig, b_coords: &[Rational], a_coords: &[TruncPoly]) -> Result<LieElement> {
    check_coords(&config, b_coords, a_coords)?;
    let m = config.rank();
    let cap = config.deriv_cap();
    let f: Vec<TruncPoly> = a_coords
        .iter()
        .zip(b_coords)
        .map(|(a, b)| a - &TruncPoly::constant(m, cap, b.clone()))
        .collect();
    // h[p][q] for p > q, at the derivative cap until the end
    let mut h: Vec<Vec<TruncPoly>> = vec![vec![TruncPoly::zero(m, cap); m]; m];
    for i in (0..m).rev() {
        let mut g = f[i].clone();
        for (p, row) in h.iter().enumerate().skip(i + 1) {
            g = &g + &row[i].mul_var(p);
        }
        for (mono, c) in g.terms() {
            match mono.min_var() {
                Some(q) if q < i => {
                    h[i][q].add_term(mono.div_var(q).unwrap(), c.clone());
                }
                _ => {
                    return Err(Error::NotInImage(format!(
                        "coordinate {} leaves a residue of degree {}",
                        i + 1,
                        mono.degree()
                    )))
                }
            }
        }
    }
    let quad = h.into_iter().enumerate().flat_map(|(p, row)| {
        row.into_iter()
            .enumerate()
            .take(p)
            .filter(|(_, poly)| !poly.is_zero())
            .map(move |(q, poly)| ((p, q), poly.with_cap(config.quad_cap())))
    });
    LieElement::from_parts(config, b_coords.to_vec(), quad.collect::<Vec<_>>())
}

/// Inverse of [`embed`] on its image.
pub fn lift_element(w: &WreathElement) -> Result<LieElement> {
    lift(w.config, &w.b_coords, &w.a_coords)
}

/// `m x m` matrix over truncated series. Row `i` is the differentiation
/// variable, column `j` the generator image.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct JacobianMatrix {
    config: AlgebraConfig,
    entries: Vec<Vec<TruncPoly>>,
}

impl JacobianMatrix {
    pub fn new(config: AlgebraConfig, entries: Vec<Vec<TruncPoly>>) -> Result<Self> {
        let m = config.rank();
        if entries.len() != m || entries.iter().any(|row| row.len() != m) {
            return Err(Error::Dimension(format!("Jacobian must be {m} x {m}")));
        }
        for e in entries.iter().flatten() {
            if e.num_vars() != m || e.cap() != config.deriv_cap() {
                return Err(Error::Dimension(format!(
                    "Jacobian entries must be over {m} vars with cap {}",
                    config.deriv_cap()
                )));
            }
        }
        Ok(JacobianMatrix { config, entries })
    }

    /// Builds the matrix from its columns.
    pub fn from_columns(config: AlgebraConfig, columns: Vec<Vec<TruncPoly>>) -> Result<Self> {
        let m = config.rank();
        let entries = (0..m)
            .map(|i| columns.iter().map(|col| col[i].clone()).collect())
            .collect();
        Self::new(config, entries)
    }

    pub fn identity(config: AlgebraConfig) -> Self {
        let m = config.rank();
        let cap = config.deriv_cap();
        let entries = (0..m)
            .map(|i| {
                (0..m)
                    .map(|j| {
                        if i == j {
                            TruncPoly::one(m, cap)
                        } else {
                            TruncPoly::zero(m, cap)
                        }
                    })
                    .collect()
            })
            .collect();
        JacobianMatrix { config, entries }
    }

    pub fn config(&self) -> AlgebraConfig {
        self.config
    }

    pub fn entry(&self, i: usize, j: usize) -> &TruncPoly {
        &self.entries[i][j]
    }

    pub fn rows(&self) -> &[Vec<TruncPoly>] {
        &self.entries
    }

    pub fn column(&self, j: usize) -> Vec<TruncPoly> {
        self.entries.iter().map(|row| row[j].clone()).collect()
    }

    pub fn try_mul(&self, other: &JacobianMatrix) -> Result<JacobianMatrix> {
        self.config.check_same(&other.config)?;
        let m = self.config.rank();
        let cap = self.config.deriv_cap();
        let entries = (0..m)
            .map(|i| {
                (0..m)
                    .map(|j| {
                        (0..m).fold(TruncPoly::zero(m, cap), |acc, k| {
                            let (x, y) = (&self.entries[i][k], &other.entries[k][j]);
                            if x.is_zero() || y.is_zero() {
                                acc
                            } else {
                                &acc + &(x * y)
                            }
                        })
                    })
                    .collect()
            })
            .collect();
        Ok(JacobianMatrix {
            config: self.config,
            entries,
        })
    }

    pub fn try_add(&self, other: &JacobianMatrix) -> Result<JacobianMatrix> {
        self.zip_with(other, |x, y| x + y)
    }

    pub fn try_sub(&self, other: &JacobianMatrix) -> Result<JacobianMatrix> {
        self.zip_with(other, |x, y| x - y)
    }

    fn zip_with(
        &self,
        other: &JacobianMatrix,
        op: impl Fn(&TruncPoly, &TruncPoly) -> TruncPoly,
    ) -> Result<JacobianMatrix> {
        self.config.check_same(&other.config)?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(r, s)| r.iter().zip(s).map(|(x, y)| op(x, y)).collect())
            .collect();
        Ok(JacobianMatrix {
            config: self.config,
            entries,
        })
    }

    /// `M - I`.
    pub fn s_part(&self) -> JacobianMatrix {
        self.try_sub(&JacobianMatrix::identity(self.config))
            .expect("same configuration")
    }

    /// Whether the matrix lies in `I + S`: no constant terms off the identity
    /// and every column of `M - I` passes the membership test.
    pub fn in_i_plus_s(&self) -> bool {
        let s = self.s_part();
        let m = self.config.rank();
        s.entries
            .iter()
            .flatten()
            .all(|e| e.constant_term().is_zero())
            && (0..m).all(|j| membership(&s.column(j)))
    }

    /// Inverse of `I + S` by the finite Neumann series `sum_k (I - M)^k`.
    pub fn inverse(&self) -> Result<JacobianMatrix> {
        let id = JacobianMatrix::identity(self.config);
        let n = id.try_sub(self)?;
        if n.entries.iter().flatten().any(|e| !e.constant_term().is_zero()) {
            return Err(Error::NotInS("constant terms off the identity".into()));
        }
        let mut acc = id.clone();
        let mut power = id;
        // entries of N^k have order >= k, so k <= cap suffices
        for _ in 0..self.config.deriv_cap() {
            power = power.try_mul(&n)?;
            if power.entries.iter().flatten().all(TruncPoly::is_zero) {
                break;
            }
            acc = acc.try_add(&power)?;
        }
        Ok(acc)
    }

    /// JSON array of rows, each entry the canonical polynomial string.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.entries
                .iter()
                .map(|row| {
                    serde_json::Value::Array(
                        row.iter()
                            .map(|e| serde_json::Value::String(e.to_string()))
                            .collect(),
                    )
                })
                .collect(),
        )
    }
}

impl fmt::Debug for JacobianMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_json())
    }
}

impl fmt::Display for JacobianMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.entries {
            let cells: Vec<String> = row.iter().map(|e| e.to_string()).collect();
            writeln!(f, "[ {} ]", cells.join(" | "))?;
        }
        Ok(())
    }
}

/// Jacobian matrix of an IA-endomorphism: column `j` holds the partial
/// derivatives of `phi(y_j)`.
pub fn jacobian(phi: &IAEndomorphism) -> JacobianMatrix {
    let cfg = phi.config();
    let columns = (0..cfg.rank()).map(|j| partials(&phi.image(j))).collect();
    JacobianMatrix::from_columns(cfg, columns).expect("partials have the derivative cap")
}
