//! Exact truncated power series: the building block for every tail `h_pq`.

use metabelian::poly::{rat, TruncPoly};
use metabelian::parse_poly;

fn main() -> metabelian::Result<()> {
    let x = TruncPoly::var(2, 5, 0);
    let t = &x + &TruncPoly::var(2, 5, 1);
    println!("e^(t1+t2)        = {}", t.exp()?);
    println!("h(t1+t2)         = {}", t.h_series()?);
    println!("1/h(t1+t2)       = {}", t.h_series()?.unit_inverse()?);

    let f = parse_poly("t1^2*t2 + t1*t3 + t2*t3", 3, 4)?;
    let (p, q, r) = f.split_square(0);
    println!("split of {f}: p = {p}, q = {q}, r = {r}");

    let g = &x * &TruncPoly::constant(2, 5, rat(3, 4));
    println!("(3/4 t1)^3       = {}", g.pow(3));
    Ok(())
}
