//! Automorphisms of the free metabelian nilpotent Lie algebra `L(m, c)` over
//! the rationals.
//!
//! Elements are kept in a normal form `sum a_i y_i + sum_{p>q} [y_p, y_q] h_pq`
//! with truncated polynomial tails, embedded in an abelian wreath product, and
//! IA-automorphisms are handled through their Jacobian matrices. On top of
//! that sit a closed-form Baker–Campbell–Hausdorff product for inner
//! automorphisms and a reduction to canonical coset representatives modulo
//! the inner ones.
//!
//! Indices in the API are 0-based (`y1` is generator `0`); rendered output is
//! 1-based.

pub mod aut;
pub mod bch;
pub mod canonical;
pub mod cli;
pub mod envelope;
pub mod error;
pub mod expr;
pub mod lie;
pub mod poly;
pub mod sample;
pub mod wreath;

pub use aut::{exp_ad, inner_jacobian, IAEndomorphism, InnerAutomorphism};
pub use bch::{bch_compose, gerritzen_c, BchSeries};
pub use canonical::{is_inner, reduce, same_coset, shape_check, CanonicalForm, ReductionTrace};
pub use envelope::rep_bch;
pub use error::{Error, Result};
pub use expr::{parse_endomorphism, parse_jacobian, parse_lie, parse_poly};
pub use lie::{AlgebraConfig, LieElement};
pub use poly::{Monomial, Rational, TruncPoly};
pub use wreath::{embed, jacobian, lift, partials, JacobianMatrix, WreathElement};
