//! Wreath-product embedding, partial derivatives, the membership criterion
//! and the Jacobian matrix of an IA-endomorphism.

use metabelian::wreath::{lift_element, membership};
use metabelian::{embed, parse_endomorphism, parse_lie, partials, AlgebraConfig, IAEndomorphism};

fn main() -> metabelian::Result<()> {
    let cfg = AlgebraConfig::new(2, 3)?;
    let u = parse_lie("y1 + [y2,y1] + 1/2*[y2,y1,y2]", cfg)?;
    let w = embed(&u);
    println!("embed({u}): b = {:?}", w.b_coords().iter().map(|r| r.to_string()).collect::<Vec<_>>());
    for (i, a) in w.a_coords().iter().enumerate() {
        println!("  a{} = {a}", i + 1);
    }
    println!("lift(embed(u)) = {}", lift_element(&w)?);
    println!("ideal part in image: {}", membership(&partials(&u.commutator_part())));
    println!("u itself passes:     {}", membership(&partials(&u)));

    let phi = parse_endomorphism(r#"{"y1":"y1 + [y2,y1]"}"#, cfg)?;
    let psi = parse_endomorphism(r#"{"y2":"y2 + [y2,y1]"}"#, cfg)?;
    let composed = phi.compose(&psi)?;
    println!("J(phi ∘ psi) =\n{}", composed.jacobian());
    println!("J(phi) J(psi) equal: {}", composed.jacobian() == phi.jacobian().try_mul(&psi.jacobian())?);
    let back = IAEndomorphism::from_jacobian(&composed.jacobian())?;
    println!("recovered from Jacobian: {}", back.to_json());
    println!("inverse: {}", composed.inverse()?.to_json());
    Ok(())
}
