//! Text syntax for monomials and polynomials.
//!
//! ```text
//! poly   := sign? term (sign term)*      sign := '+' | '-'
//! term   := factor ('*' factor)*
//! factor := integer ('/' integer)? | name ('^' integer)?
//! ```
//! Whitespace is allowed between tokens. Juxtaposition (`2x`, `x y`) is
//! rejected.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::ParseError;
use crate::monomials::{Monomial, VariableContext};

pub(crate) type RawTerm = (BigRational, Monomial);

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        Cursor { text, pos: 0 }
    }

    fn column(&self) -> usize {
        self.text[..self.pos].chars().count() + 1
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError::new(1, self.column(), message)
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos == self.text.len()
    }

    fn take_while(&mut self, pred: impl Fn(char) -> bool) -> &'a str {
        let start = self.pos;
        while let Some(c) = self.peek() {
            if pred(c) {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
        &self.text[start..self.pos]
    }

    fn integer(&mut self) -> Result<BigInt, ParseError> {
        self.skip_ws();
        let digits = self.take_while(|c| c.is_ascii_digit());
        if digits.is_empty() {
            return Err(self.error("expected an integer"));
        }
        Ok(digits.parse().expect("ascii digits"))
    }

    fn exponent(&mut self) -> Result<u32, ParseError> {
        self.skip_ws();
        let col = self.column();
        let digits = self.take_while(|c| c.is_ascii_digit());
        if digits.is_empty() {
            return Err(self.error("expected an exponent"));
        }
        digits
            .parse()
            .map_err(|_| ParseError::new(1, col, format!("exponent `{digits}` is too large")))
    }
}

fn parse_term(cur: &mut Cursor<'_>, ctx: &VariableContext) -> Result<RawTerm, ParseError> {
    let mut coeff = BigRational::one();
    let mut exps = vec![0u32; ctx.len()];
    loop {
        cur.skip_ws();
        let col = cur.column();
        match cur.peek() {
            Some(c) if c.is_ascii_digit() => {
                let numer = cur.integer()?;
                let value = if cur.eat('/') {
                    let denom_col = cur.column();
                    let denom = cur.integer()?;
                    if denom.is_zero() {
                        return Err(ParseError::new(1, denom_col, "zero denominator"));
                    }
                    BigRational::new(numer, denom)
                } else {
                    BigRational::from_integer(numer)
                };
                coeff *= value;
            }
            Some(c) if c.is_ascii_alphabetic() || c == '_' => {
                let name = cur.take_while(|c| c.is_ascii_alphanumeric() || c == '_');
                let index = ctx
                    .index_of(name)
                    .ok_or_else(|| ParseError::new(1, col, format!("unknown variable `{name}`")))?;
                let e = if cur.eat('^') { cur.exponent()? } else { 1 };
                exps[index] = exps[index]
                    .checked_add(e)
                    .ok_or_else(|| ParseError::new(1, col, "exponent overflow"))?;
            }
            Some(c) => return Err(cur.error(format!("unexpected `{c}`"))),
            None => return Err(cur.error("unexpected end of input")),
        }
        if !cur.eat('*') {
            break;
        }
    }
    if exps.iter().try_fold(0u32, |acc, &e| acc.checked_add(e)).is_none() {
        return Err(cur.error("total degree overflow"));
    }
    Ok((coeff, Monomial::from_exponents(exps)))
}

/// Parses a polynomial into raw (unsorted, uncombined) terms.
pub(crate) fn parse_terms(text: &str, ctx: &VariableContext) -> Result<Vec<RawTerm>, ParseError> {
    let mut cur = Cursor::new(text);
    if cur.at_end() {
        return Err(cur.error("empty polynomial"));
    }
    let mut terms = Vec::new();
    let mut negative = if cur.eat('-') {
        true
    } else {
        cur.eat('+');
        false
    };
    loop {
        let (c, m) = parse_term(&mut cur, ctx)?;
        terms.push((if negative { -c } else { c }, m));
        if cur.at_end() {
            break;
        }
        negative = if cur.eat('+') {
            false
        } else if cur.eat('-') {
            true
        } else {
            let c = cur.peek().unwrap_or(' ');
            return Err(cur.error(format!("expected `+`, `-` or `*`, found `{c}`")));
        };
    }
    Ok(terms)
}

pub(crate) fn parse_monomial(text: &str, ctx: &VariableContext) -> Result<Monomial, ParseError> {
    let mut cur = Cursor::new(text);
    if cur.at_end() {
        return Err(cur.error("empty monomial"));
    }
    let (c, m) = parse_term(&mut cur, ctx)?;
    if !cur.at_end() {
        let c = cur.peek().unwrap_or(' ');
        return Err(cur.error(format!("unexpected `{c}` after monomial")));
    }
    if !c.is_one() {
        return Err(ParseError::new(1, 1, "a monomial may not carry a coefficient"));
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx() -> VariableContext {
        VariableContext::new(["x", "y", "z"]).unwrap()
    }

    #[test]
    fn monomials() {
        let c = ctx();
        assert_eq!(parse_monomial("x^2*y", &c).unwrap().exponents(), &[2, 1, 0]);
        assert_eq!(parse_monomial(" x * x * z ", &c).unwrap().exponents(), &[2, 0, 1]);
        assert_eq!(parse_monomial("1", &c).unwrap().exponents(), &[0, 0, 0]);
        assert!(parse_monomial("2*x", &c).is_err());
        assert!(parse_monomial("", &c).is_err());
    }

    #[test]
    fn errors_carry_columns() {
        let c = ctx();
        let e = parse_terms("x + w", &c).unwrap_err();
        assert_eq!((e.line, e.column), (1, 5));
        assert!(e.message.contains("unknown variable"));
        let e = parse_terms("2x", &c).unwrap_err();
        assert_eq!(e.column, 2);
        let e = parse_terms("x y", &c).unwrap_err();
        assert_eq!(e.column, 3);
        assert!(parse_terms("x^", &c).is_err());
        assert!(parse_terms("1/0*x", &c).is_err());
        assert!(parse_terms("x^99999999999", &c).is_err());
        assert!(parse_terms("x +", &c).is_err());
    }

    #[test]
    fn rational_coefficients() {
        let c = ctx();
        let t = parse_terms("-3/2*x*y + 4*2 - z", &c).unwrap();
        assert_eq!(t.len(), 3);
        assert_eq!(t[0].0, BigRational::new((-3).into(), 2.into()));
        assert_eq!(t[1].0, BigRational::from_integer(8.into()));
        assert_eq!(t[2].0, BigRational::from_integer((-1).into()));
    }
}
