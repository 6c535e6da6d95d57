//! Multiplying inner automorphisms with the closed-form metabelian BCH series,
//! cross-checked against the triangular envelope.

use metabelian::{bch_compose, exp_ad, gerritzen_c, parse_lie, rep_bch, AlgebraConfig};

fn main() -> metabelian::Result<()> {
    let c = gerritzen_c(3)?;
    println!("c(t,u) = {}", c.series.render_with(&["t".into(), "u".into()]));

    let cfg = AlgebraConfig::new(2, 5)?;
    let u = parse_lie("y1 + [y2,y1]", cfg)?;
    let v = parse_lie("2*y2 - [y2,y1,y1]", cfg)?;
    let w = bch_compose(&u, &v)?;
    println!("bch(u, v) = {w}");
    println!("envelope agrees: {}", rep_bch(&u, &v)? == w);
    // ad acts on the right, so exp(ad u) is applied first
    let product = exp_ad(&v).expansion.compose(&exp_ad(&u).expansion)?;
    println!("exp(ad w) = exp(ad v) ∘ exp(ad u): {}", exp_ad(&w).expansion == product);
    Ok(())
}
