//! Text formats: Lie expressions, polynomials in `t1..tm`, and endomorphisms
//! given as JSON.
//!
//! ```text
//! elem := ['-'] term (('+' | '-') term)*
//! term := [rational '*'] atom
//! atom := 'y' INT | '[' elem (',' elem)+ ']'      (left-normed)
//! ```
//!
//! A bare `0` is accepted as the zero element. Endomorphisms are either the
//! keyword `identity`, a JSON object mapping `y1..ym` to expressions (missing
//! generators are fixed), or a JSON array of rows giving the Jacobian matrix.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::aut::IAEndomorphism;
use crate::error::{Error, Result};
use crate::lie::{AlgebraConfig, LieElement};
use crate::poly::{Monomial, Rational, TruncPoly};
use crate::wreath::JacobianMatrix;

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        Cursor {
            src: src.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected '{}'", c as char)))
        }
    }

    fn error(&self, msg: impl Into<String>) -> Error {
        Error::parse(self.pos, msg)
    }

    fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(digits.parse().unwrap())
    }

    fn small_integer(&mut self) -> Result<usize> {
        let start = self.pos;
        let n = self.integer()?;
        n.to_string()
            .parse()
            .map_err(|_| Error::parse(start, "index too large"))
    }

    fn rational(&mut self) -> Result<Rational> {
        let num = self.integer()?;
        if self.eat(b'/') {
            let at = self.pos;
            let den = self.integer()?;
            if den.is_zero() {
                return Err(Error::parse(at, "zero denominator"));
            }
            Ok(Rational::new(num, den))
        } else {
            Ok(Rational::from_integer(num))
        }
    }

    fn starts_number(&mut self) -> bool {
        matches!(self.peek(), Some(c) if c.is_ascii_digit())
    }
}

/// Parses a Lie expression into normal form.
pub fn parse_lie(src: &str, config: AlgebraConfig) -> Result<LieElement> {
    let mut cur = Cursor::new(src);
    let u = lie_elem(&mut cur, config)?;
    if !cur.at_end() {
        return Err(cur.error("unexpected trailing input"));
    }
    Ok(u)
}

fn lie_elem(cur: &mut Cursor, cfg: AlgebraConfig) -> Result<LieElement> {
    let mut sign = if cur.eat(b'-') { -Rational::one() } else { Rational::one() };
    let mut acc = LieElement::zero(cfg);
    loop {
        let term = lie_term(cur, cfg)?;
        acc = acc.try_add(&term.scale(&sign))?;
        if cur.eat(b'+') {
            sign = Rational::one();
        } else if cur.eat(b'-') {
            sign = -Rational::one();
        } else {
            return Ok(acc);
        }
    }
}

fn lie_term(cur: &mut Cursor, cfg: AlgebraConfig) -> Result<LieElement> {
    if cur.starts_number() {
        let at = cur.pos;
        let c = cur.rational()?;
        if cur.eat(b'*') {
            return Ok(lie_atom(cur, cfg)?.scale(&c));
        }
        if c.is_zero() {
            return Ok(LieElement::zero(cfg));
        }
        return Err(Error::parse(at, "a nonzero scalar needs a generator or bracket"));
    }
    lie_atom(cur, cfg)
}

fn lie_atom(cur: &mut Cursor, cfg: AlgebraConfig) -> Result<LieElement> {
    match cur.peek() {
        Some(b'y') => {
            cur.pos += 1;
            let at = cur.pos;
            let i = cur.small_integer()?;
            if i == 0 || i > cfg.rank() {
                return Err(Error::parse(
                    at,
                    format!("generator y{i} out of range for rank {}", cfg.rank()),
                ));
            }
            Ok(LieElement::generator(cfg, i - 1))
        }
        Some(b'[') => {
            cur.pos += 1;
            let mut acc = lie_elem(cur, cfg)?;
            cur.expect(b',')?;
            loop {
                let next = lie_elem(cur, cfg)?;
                acc = acc.bracket(&next)?;
                if !cur.eat(b',') {
                    break;
                }
            }
            cur.expect(b']')?;
            Ok(acc)
        }
        _ => Err(cur.error("expected 'y<index>' or '['")),
    }
}

/// Parses a polynomial such as `1 - 1/12*t1 + t1^2*t2` in `num_vars`
/// variables, truncated at `cap`.
pub fn parse_poly(src: &str, num_vars: usize, cap: u32) -> Result<TruncPoly> {
    let mut cur = Cursor::new(src);
    let mut sign = if cur.eat(b'-') { -Rational::one() } else { Rational::one() };
    let mut acc = TruncPoly::zero(num_vars, cap);
    loop {
        let (m, c) = poly_term(&mut cur, num_vars)?;
        acc.add_term(m, c * &sign);
        if cur.eat(b'+') {
            sign = Rational::one();
        } else if cur.eat(b'-') {
            sign = -Rational::one();
        } else {
            break;
        }
    }
    if !cur.at_end() {
        return Err(cur.error("unexpected trailing input"));
    }
    Ok(acc)
}

fn poly_term(cur: &mut Cursor, n: usize) -> Result<(Monomial, Rational)> {
    let mut exps = vec![0u32; n];
    let mut coeff = Rational::one();
    let mut need_factor = true;
    if cur.starts_number() {
        coeff = cur.rational()?;
        if !cur.eat(b'*') {
            return Ok((Monomial::one(n), coeff));
        }
    }
    while need_factor {
        if cur.peek() != Some(b't') {
            return Err(cur.error("expected 't<index>'"));
        }
        cur.pos += 1;
        let at = cur.pos;
        let i = cur.small_integer()?;
        if i == 0 || i > n {
            return Err(Error::parse(at, format!("variable t{i} out of range for {n} variables")));
        }
        let e = if cur.eat(b'^') { cur.small_integer()? as u32 } else { 1 };
        exps[i - 1] += e;
        need_factor = cur.eat(b'*');
    }
    Ok((Monomial::new(exps), coeff))
}

/// Parses an endomorphism: `identity`, a JSON object of generator images, or a
/// JSON Jacobian matrix.
pub fn parse_endomorphism(src: &str, config: AlgebraConfig) -> Result<IAEndomorphism> {
    if src.trim() == "identity" {
        return Ok(IAEndomorphism::identity(config));
    }
    let value: serde_json::Value = serde_json::from_str(src)
        .map_err(|e| Error::parse(e.column().saturating_sub(1), format!("invalid JSON: {e}")))?;
    match value {
        serde_json::Value::Object(map) => {
            let mut images: Vec<LieElement> =
                (0..config.rank()).map(|j| LieElement::generator(config, j)).collect();
            for (key, val) in map {
                let idx = key
                    .strip_prefix('y')
                    .and_then(|s| s.parse::<usize>().ok())
                    .filter(|&i| i >= 1 && i <= config.rank())
                    .ok_or_else(|| Error::parse(0, format!("unknown generator key '{key}'")))?;
                let text = val
                    .as_str()
                    .ok_or_else(|| Error::parse(0, format!("image of {key} must be a string")))?;
                images[idx - 1] = parse_lie(text, config)?;
            }
            IAEndomorphism::from_images(config, images)
        }
        serde_json::Value::Array(rows) => {
            let matrix = parse_matrix_rows(&rows, config)?;
            IAEndomorphism::from_jacobian(&matrix)
        }
        _ => Err(Error::parse(0, "expected 'identity', a JSON object or a JSON matrix")),
    }
}

fn parse_matrix_rows(rows: &[serde_json::Value], config: AlgebraConfig) -> Result<JacobianMatrix> {
    let m = config.rank();
    let mut entries = Vec::with_capacity(m);
    for row in rows {
        let cells = row
            .as_array()
            .ok_or_else(|| Error::parse(0, "matrix rows must be arrays"))?;
        let mut parsed = Vec::with_capacity(cells.len());
        for cell in cells {
            let text = cell
                .as_str()
                .ok_or_else(|| Error::parse(0, "matrix entries must be strings"))?;
            parsed.push(parse_poly(text, m, config.deriv_cap())?);
        }
        entries.push(parsed);
    }
    JacobianMatrix::new(config, entries).map_err(|e| Error::parse(0, e.to_string()))
}

/// Parses a JSON array-of-arrays of polynomial strings.
pub fn parse_jacobian(src: &str, config: AlgebraConfig) -> Result<JacobianMatrix> {
    let value: serde_json::Value = serde_json::from_str(src)
        .map_err(|e| Error::parse(e.column().saturating_sub(1), format!("invalid JSON: {e}")))?;
    match value {
        serde_json::Value::Array(rows) => parse_matrix_rows(&rows, config),
        _ => Err(Error::parse(0, "expected a JSON array of rows")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{int, rat};

    fn cfg(m: usize, c: u32) -> AlgebraConfig {
        AlgebraConfig::new(m, c).unwrap()
    }

    #[test]
    fn parse_examples() {
        let c = cfg(2, 3);
        let u = parse_lie("y1 + 1/2*[y2,y1]", c).unwrap();
        assert_eq!(u.linear(), &[int(1), int(0)]);
        assert_eq!(u.h(1, 0), TruncPoly::constant(2, 1, rat(1, 2)));
        assert_eq!(parse_lie("[y1,y2]", c).unwrap(), LieElement::commutator(c, 1, 0).neg());
        assert!(parse_lie("[y2,y1,y1,y1]", c).unwrap().is_zero());
        assert!(parse_lie("0", c).unwrap().is_zero());
        assert_eq!(parse_lie("-y2 - y1", c).unwrap().linear(), &[int(-1), int(-1)]);
    }

    #[test]
    fn parse_errors() {
        let c = cfg(2, 3);
        assert!(matches!(parse_lie("y3", c), Err(Error::Parse { pos: 1, .. })));
        assert!(matches!(parse_lie("[y1]", c), Err(Error::Parse { .. })));
        assert!(matches!(parse_lie("y1 +", c), Err(Error::Parse { .. })));
        assert!(matches!(parse_lie("2", c), Err(Error::Parse { .. })));
        assert!(matches!(parse_lie("y1 y2", c), Err(Error::Parse { pos: 3, .. })));
    }

    #[test]
    fn polynomials() {
        let p = parse_poly("1/2 - 1/12*t1 + 1/12*t2 - 1/24*t1*t2", 2, 2).unwrap();
        assert_eq!(p.to_string(), "1/2 - 1/12*t1 + 1/12*t2 - 1/24*t1*t2");
        assert_eq!(parse_poly("t1^2*t2", 2, 2).unwrap(), TruncPoly::zero(2, 2));
        assert!(parse_poly("t3", 2, 2).is_err());
    }

    #[test]
    fn endomorphisms() {
        let c = cfg(2, 3);
        assert!(parse_endomorphism("identity", c).unwrap().is_identity());
        let phi = parse_endomorphism(r#"{"y1": "y1 + [y2,y1]"}"#, c).unwrap();
        assert_eq!(phi.deltas()[0], LieElement::commutator(c, 1, 0));
        let back = parse_endomorphism(&phi.jacobian().to_json().to_string(), c).unwrap();
        assert_eq!(back, phi);
        assert!(matches!(
            parse_endomorphism(r#"{"y1": "y2"}"#, c),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            parse_endomorphism(r#"[["1 + t1", "0"], ["0", "1"]]"#, c),
            Err(Error::NotInS(_))
        ));
    }
}
