//! `exp(ad u)` and its Jacobian in closed form, compared with the expansion.

use metabelian::{exp_ad, inner_jacobian, parse_lie, AlgebraConfig};

fn main() -> metabelian::Result<()> {
    let cfg = AlgebraConfig::new(3, 4)?;
    let u = parse_lie("y1 - 2*y3 + [y3,y2] + 1/2*[y2,y1,y1]", cfg)?;
    let e = exp_ad(&u);
    println!("exp(ad u) = {}", e.expansion.to_json());
    let closed = inner_jacobian(&u);
    println!("J(exp(ad u)) =\n{closed}");
    println!("matches the Jacobian of the expansion: {}", closed == e.expansion.jacobian());
    Ok(())
}
