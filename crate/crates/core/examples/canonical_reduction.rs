//! Reducing an IA-automorphism to its canonical coset representative modulo
//! inner automorphisms, and deciding innerness.

use metabelian::canonical::shape_check;
use metabelian::{exp_ad, is_inner, parse_endomorphism, parse_lie, reduce, same_coset, AlgebraConfig};

fn main() -> metabelian::Result<()> {
    let cfg = AlgebraConfig::new(3, 4)?;
    let psi = parse_endomorphism(
        r#"{"y1":"y1 + [y2,y1] - [y3,y1,y2]","y2":"y2 + 2*[y3,y1]","y3":"y3 + [y3,y2,y2]"}"#,
        cfg,
    )?;
    let trace = reduce(&psi)?;
    println!("{}", serde_json::to_string_pretty(&trace.to_json()).unwrap());
    println!("canonical shape: {}", shape_check(&trace.canonical.theta));

    let u = parse_lie("y2 - y3 + [y3,y1]", cfg)?;
    let moved = exp_ad(&u).expansion.compose(&psi)?;
    println!("same coset after an inner factor: {}", same_coset(&moved, &psi)?);
    println!("psi inner: {:?}", is_inner(&psi)?.map(|v| v.render()));
    println!("exp(ad u) inner: {:?}", is_inner(&exp_ad(&u).expansion)?.map(|v| v.render()));
    Ok(())
}
