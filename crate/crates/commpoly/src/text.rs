//! Text front end: a recursive-descent parser for polynomial expressions
//! and the canonical pretty printer.
//!
//! Grammar:
//!
//! ```text
//! expr     := ("+"|"-")? term (("+"|"-") term)*
//! term     := factor ("*" factor)*
//! factor   := base ("^" nat)?
//! base     := rational | "i" | variable | "(" expr ")"
//! rational := int ("/" int)?
//! variable := "x" nat        (bare "x" means "x1")
//! ```
//!
//! Implicit multiplication is not supported: `2x1` is a syntax error.
//! Constant arithmetic is folded during parsing, so `(1/2 + 1/2)*x1`
//! produces the term `x1`.
//!
//! Printing is canonical: graded-lex descending term order, explicit `^`,
//! integer coefficients bare, other coefficients parenthesized. The law
//! `parse(format(Q)) = Q` holds for every exact polynomial.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::poly::{MultiIndex, MultiPoly};
use crate::scalar::{GaussRat, Scalar};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub pos: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at position {}: {}", self.pos, self.message)
    }
}

impl std::error::Error for ParseError {}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
    arity: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str, arity: usize) -> Self {
        Parser { bytes: text.as_bytes(), pos: 0, arity }
    }

    fn err<T>(&self, pos: usize, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError { pos, message: message.into() })
    }

    fn skip_ws(&mut self) {
        while self.bytes.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn integer(&mut self) -> Result<BigInt, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.bytes.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if self.pos == start {
            return self.err(start, "expected an integer");
        }
        let s = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
        Ok(s.parse().unwrap())
    }

    fn nat_u32(&mut self) -> Result<u32, ParseError> {
        let start = self.pos;
        let n = self.integer()?;
        u32::try_from(n).map_err(|_| ParseError {
            pos: start,
            message: "exponent too large".into(),
        })
    }

    fn expr(&mut self) -> Result<MultiPoly, ParseError> {
        let mut negate = false;
        if self.eat(b'-') {
            negate = true;
        } else {
            self.eat(b'+');
        }
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg();
        }
        loop {
            if self.eat(b'+') {
                let t = self.term()?;
                acc = acc.add(&t).expect("uniform arity");
            } else if self.eat(b'-') {
                let t = self.term()?;
                acc = acc.sub(&t).expect("uniform arity");
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<MultiPoly, ParseError> {
        let mut acc = self.factor()?;
        while self.eat(b'*') {
            let f = self.factor()?;
            acc = acc.mul(&f).expect("uniform arity");
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<MultiPoly, ParseError> {
        let base = self.base()?;
        if self.eat(b'^') {
            let e = self.nat_u32()?;
            Ok(base.pow_nat(e))
        } else {
            Ok(base)
        }
    }

    fn base(&mut self) -> Result<MultiPoly, ParseError> {
        let pos = self.pos;
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return self.err(self.pos, "expected ')'");
                }
                Ok(inner)
            }
            Some(b'i') => {
                self.pos += 1;
                Ok(MultiPoly::constant(self.arity, Scalar::i()))
            }
            Some(b'x') => {
                self.pos += 1;
                let var = if self.bytes.get(self.pos).is_some_and(u8::is_ascii_digit) {
                    let idx_pos = self.pos;
                    let n = self.integer()?;
                    let n = u64::try_from(n).unwrap_or(u64::MAX);
                    if n == 0 {
                        return self.err(idx_pos, "variable indices start at x1");
                    }
                    if n > self.arity as u64 {
                        return self.err(
                            idx_pos,
                            format!("variable x{n} exceeds arity {}", self.arity),
                        );
                    }
                    (n - 1) as usize
                } else {
                    // bare "x" is shorthand for x1
                    0
                };
                Ok(MultiPoly::var(self.arity, var))
            }
            Some(b) if b.is_ascii_digit() => {
                let num = self.integer()?;
                let mut value = BigRational::from_integer(num);
                if self.eat(b'/') {
                    let den_pos = self.pos;
                    let den = self.integer()?;
                    if den.is_zero() {
                        return self.err(den_pos, "division by zero in coefficient");
                    }
                    value /= BigRational::from_integer(den);
                }
                Ok(MultiPoly::constant(
                    self.arity,
                    Scalar::from_parts(value, BigRational::zero()),
                ))
            }
            Some(b) => self.err(pos, format!("unexpected character '{}'", b as char)),
            None => self.err(self.bytes.len(), "unexpected end of input"),
        }
    }
}

/// Parse an expression into a canonical exact-backend polynomial.
pub fn parse_poly(text: &str, arity: usize) -> Result<MultiPoly, ParseError> {
    assert!(arity >= 1, "arity must be at least 1");
    let mut p = Parser::new(text, arity);
    let poly = p.expr()?;
    p.skip_ws();
    if p.pos != p.bytes.len() {
        return Err(ParseError {
            pos: p.pos,
            message: format!("unexpected trailing input '{}'", &text[p.pos..]),
        });
    }
    Ok(poly)
}

fn rat_str(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Render a positive-leading exact coefficient; `None` means "omit" (the
/// coefficient is 1 and the monomial carries the term).
fn gauss_prefix(g: &GaussRat) -> Option<String> {
    if g.im.is_zero() {
        if g.re.is_one() {
            return None;
        }
        if g.re.denom().is_one() {
            return Some(g.re.numer().to_string());
        }
        return Some(format!("({})", rat_str(&g.re)));
    }
    if g.re.is_zero() {
        if g.im.is_one() {
            return Some("i".to_string());
        }
        return Some(format!("({}*i)", rat_str(&g.im)));
    }
    let im_part = if g.im.abs().is_one() {
        "i".to_string()
    } else {
        format!("{}*i", rat_str(&g.im.abs()))
    };
    Some(format!(
        "({}{}{})",
        rat_str(&g.re),
        if g.im.is_negative() { "-" } else { "+" },
        im_part
    ))
}

fn coeff_prefix(s: &Scalar) -> Option<String> {
    match s {
        Scalar::Exact(g) => gauss_prefix(g),
        Scalar::Float(_) => {
            if s.is_one() {
                None
            } else {
                Some(format!("({s})"))
            }
        }
    }
}

fn monomial_str(idx: &MultiIndex) -> String {
    let mut parts = Vec::new();
    for (var, &e) in idx.exponents().iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(format!("x{}", var + 1)),
            _ => parts.push(format!("x{}^{}", var + 1, e)),
        }
    }
    parts.join("*")
}

/// Canonical text form: graded-lex descending, `parse(format(q)) = q`.
pub fn format_poly(q: &MultiPoly) -> String {
    if q.is_zero() {
        return "0".to_string();
    }
    let terms: Vec<(&MultiIndex, &Scalar)> = q.terms().collect();
    let mut out = String::new();
    for (pos, (idx, coeff)) in terms.iter().rev().enumerate() {
        let negative = coeff.leads_negative();
        let magnitude = if negative { coeff.neg() } else { (*coeff).clone() };
        if pos == 0 {
            if negative {
                out.push('-');
            }
        } else if negative {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        if idx.is_constant() {
            out.push_str(&coeff_prefix(&magnitude).unwrap_or_else(|| "1".to_string()));
        } else {
            match coeff_prefix(&magnitude) {
                None => out.push_str(&monomial_str(idx)),
                Some(c) => {
                    out.push_str(&c);
                    out.push('*');
                    out.push_str(&monomial_str(idx));
                }
            }
        }
    }
    out
}

/// Scalar rendering used in reports: the canonical form of the constant
/// polynomial with that value.
pub fn format_scalar(s: &Scalar) -> String {
    format_poly(&MultiPoly::constant(1, s.clone()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::UniPoly;

    #[test]
    fn parse_term_list() {
        let q = parse_poly("x1*x2 + x1 + x2", 2).unwrap();
        let expect = MultiPoly::monomial(2, &[1, 1], Scalar::one())
            .add(&MultiPoly::var(2, 0))
            .unwrap()
            .add(&MultiPoly::var(2, 1))
            .unwrap();
        assert_eq!(q, expect);
    }

    #[test]
    fn parse_expansion_identity() {
        let q = parse_poly("(x1+1)^2 - 1", 1).unwrap();
        let expect = parse_poly("x1^2 + 2*x1", 1).unwrap();
        assert_eq!(q, expect);
    }

    #[test]
    fn parse_literal_coefficients() {
        let q = parse_poly("3/2*x1^2*x2 + i*x2", 2).unwrap();
        assert_eq!(q.term_count(), 2);
        assert_eq!(
            q.coeff(&MultiIndex::new(vec![2, 1])),
            Some(&Scalar::from_ratio(3, 2))
        );
        assert_eq!(q.coeff(&MultiIndex::new(vec![0, 1])), Some(&Scalar::i()));
    }

    #[test]
    fn bare_x_means_x1() {
        assert_eq!(
            parse_poly("x^2+2*x", 1).unwrap(),
            parse_poly("x1^2+2*x1", 1).unwrap()
        );
        let p = UniPoly::from_multi(parse_poly("x^2", 1).unwrap()).unwrap();
        assert_eq!(p, UniPoly::power(2));
    }

    #[test]
    fn syntax_errors_carry_position() {
        let e = parse_poly("x1 + ", 2).unwrap_err();
        assert_eq!(e.pos, 5);
        let e2 = parse_poly("2x1", 2).unwrap_err();
        assert!(e2.message.contains("trailing"));
        let e3 = parse_poly("x3", 2).unwrap_err();
        assert!(e3.message.contains("exceeds arity"));
        let e4 = parse_poly("1/0", 1).unwrap_err();
        assert!(e4.message.contains("division by zero"));
    }

    #[test]
    fn format_examples() {
        let q = parse_poly("x2 + x1 + x1*x2", 2).unwrap();
        assert_eq!(format_poly(&q), "x1*x2 + x1 + x2");
        assert_eq!(format_poly(&MultiPoly::zero(3)), "0");
        assert_eq!(
            format_poly(&MultiPoly::monomial(1, &[2], Scalar::i())),
            "i*x1^2"
        );
        assert_eq!(
            format_poly(&MultiPoly::monomial(2, &[1, 1], Scalar::from_int(-2))),
            "-2*x1*x2"
        );
    }

    #[test]
    fn format_fractional_and_complex() {
        let q = parse_poly("3/2*x1 - i*x2 + (1/2+3/4*i)", 2).unwrap();
        let s = format_poly(&q);
        assert_eq!(parse_poly(&s, 2).unwrap(), q);
        assert_eq!(format_scalar(&Scalar::from_ratio(-3, 2)), "-(3/2)");
        assert_eq!(format_scalar(&Scalar::i().neg()), "-i");
        assert_eq!(format_scalar(&Scalar::one()), "1");
    }

    #[test]
    fn roundtrip_on_handpicked_polys() {
        for (text, arity) in [
            ("x1^3*x2 - 5*x3 + 7", 3),
            ("1/3 + x1*x2*x3*x4", 4),
            ("i", 1),
            ("0", 2),
            ("(2+i)*x1^2 - (2-i)*x2^2", 2),
        ] {
            let q = parse_poly(text, arity).unwrap();
            assert_eq!(parse_poly(&format_poly(&q), arity).unwrap(), q);
        }
    }
}
