//! Normal form in L(m, c): linear part plus `[y_p, y_q] h_pq(ad y_q, ..., ad y_m)`.

use metabelian::{parse_lie, AlgebraConfig};

fn main() -> metabelian::Result<()> {
    let cfg = AlgebraConfig::new(3, 4)?;
    for src in ["[y1,y2]", "[y3,y2,y1]", "[y2,y1,y3] - [y3,y1,y2]", "[[y2,y1],[y3,y1]]", "[y2,y1,y1,y1,y1]"] {
        println!("{src:<28} => {}", parse_lie(src, cfg)?);
    }

    let u = parse_lie("y1 + 2*y3 + [y2,y1]", cfg)?;
    let v = parse_lie("y2 - 1/3*[y3,y2]", cfg)?;
    println!("[u, v] = {}", u.bracket(&v)?);
    for (b, c) in u.bracket(&v)?.basis_terms() {
        println!("  {c} * {b}");
    }
    Ok(())
}
