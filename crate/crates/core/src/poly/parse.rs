//! Recursive-descent parser for the polynomial text grammar:
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor ('*' factor | factor)*
//! factor := base ('^' nat)?
//! base   := nat | var | '(' expr ')'
//! var    := 'x' | 'y' | 'z' | 'w'
//! nat    := [0-9]+
//! ```
//!
//! Juxtaposition is only accepted after a numeric literal (`2x`, `3(x+y)`);
//! two variables must be joined by `*`.

use alloc::string::String;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::{MultiPoly, VAR_NAMES};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseError {
    Syntax { offset: usize, message: String },
    UnknownVariable { offset: usize, name: char },
    NegativeExponent { offset: usize },
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseError::Syntax { offset, message } => write!(f, "syntax error at byte {offset}: {message}"),
            ParseError::UnknownVariable { offset, name } => {
                write!(f, "unknown variable '{name}' at byte {offset}")
            }
            ParseError::NegativeExponent { offset } => write!(f, "negative exponent at byte {offset}"),
        }
    }
}

/// Parses `text` into a canonical polynomial over the first `nvars` of
/// `x, y, z, w`.
pub fn parse_poly(text: &str, nvars: usize) -> Result<MultiPoly, ParseError> {
    assert!((1..=super::MAX_VARS).contains(&nvars));
    let mut parser = Parser {
        src: text.as_bytes(),
        pos: 0,
        nvars,
    };
    let p = parser.expr()?;
    parser.skip_ws();
    if parser.pos < parser.src.len() {
        return Err(parser.syntax("unexpected trailing input"));
    }
    Ok(p)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    nvars: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn syntax(&self, message: &str) -> ParseError {
        ParseError::Syntax {
            offset: self.pos,
            message: String::from(message),
        }
    }

    fn expr(&mut self) -> Result<MultiPoly, ParseError> {
        let mut acc = MultiPoly::zero(self.nvars);
        let mut sign = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                -1
            }
            Some(b'+') => {
                self.pos += 1;
                1
            }
            _ => 1,
        };
        loop {
            let t = self.term()?;
            acc = if sign < 0 { acc - t } else { acc + t };
            match self.peek() {
                Some(b'+') => sign = 1,
                Some(b'-') => sign = -1,
                _ => return Ok(acc),
            }
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<MultiPoly, ParseError> {
        let (mut acc, mut numeric) = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    let (f, _) = self.factor()?;
                    acc = &acc * &f;
                    numeric = false;
                }
                Some(c) if c == b'(' || c.is_ascii_alphabetic() => {
                    if !numeric {
                        return Err(self.syntax("expected '*' between factors"));
                    }
                    let (f, _) = self.factor()?;
                    acc = &acc * &f;
                    numeric = false;
                }
                Some(c) if c.is_ascii_digit() => {
                    return Err(self.syntax("expected operator before number"));
                }
                _ => return Ok(acc),
            }
        }
    }

    /// Returns the factor and whether it was a bare numeric literal.
    fn factor(&mut self) -> Result<(MultiPoly, bool), ParseError> {
        let (base, numeric) = self.base()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            if self.peek() == Some(b'-') {
                return Err(ParseError::NegativeExponent { offset: self.pos });
            }
            let e = self.nat()?;
            let e = u32::try_from(e).map_err(|_| self.syntax("exponent too large"))?;
            return Ok((base.pow(e), false));
        }
        Ok((base, numeric))
    }

    fn base(&mut self) -> Result<(MultiPoly, bool), ParseError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.syntax("expected ')'"));
                }
                self.pos += 1;
                Ok((inner, false))
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.nat_big()?;
                Ok((MultiPoly::constant(self.nvars, BigRational::from_integer(n)), true))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let offset = self.pos;
                self.pos += 1;
                let name = c as char;
                match VAR_NAMES.iter().position(|&v| v == name) {
                    Some(i) if i < self.nvars => Ok((MultiPoly::var(self.nvars, i), false)),
                    _ => Err(ParseError::UnknownVariable { offset, name }),
                }
            }
            Some(_) => Err(self.syntax("expected number, variable or '('")),
            None => Err(self.syntax("unexpected end of input")),
        }
    }

    fn nat_big(&mut self) -> Result<BigInt, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.syntax("expected a natural number"));
        }
        let digits = core::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(digits.parse().expect("digits parse"))
    }

    fn nat(&mut self) -> Result<u64, ParseError> {
        let n = self.nat_big()?;
        u64::try_from(n).map_err(|_| self.syntax("number too large"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Monomial;

    #[test]
    fn parses_example_polynomials() {
        let f = parse_poly("z^3+y^3*z+x^2*y^2", 3).unwrap();
        assert_eq!(f.len(), 3);
        assert!(f.coeff(&Monomial::new(&[0, 3, 1])) == BigRational::from_integer(1.into()));
        assert!(parse_poly("0", 3).unwrap().is_zero());
        let g = parse_poly("(z+x)*(z^2-y^5)", 3).unwrap();
        let h = parse_poly("z^3+x*z^2-y^5*z-x*y^5", 3).unwrap();
        assert_eq!(g, h);
    }

    #[test]
    fn implicit_multiplication_after_numbers_only() {
        assert_eq!(parse_poly("2x", 3).unwrap(), parse_poly("2*x", 3).unwrap());
        assert_eq!(parse_poly("3(x+y)", 3).unwrap(), parse_poly("3*x+3*y", 3).unwrap());
        assert!(matches!(parse_poly("x y", 3), Err(ParseError::Syntax { .. })));
        assert!(matches!(parse_poly("xy", 3), Err(ParseError::Syntax { offset: 1, .. })));
    }

    #[test]
    fn caret_binds_tighter_than_product() {
        assert_eq!(parse_poly("2*x^2", 3).unwrap(), parse_poly("2*x*x", 3).unwrap());
        assert_eq!(parse_poly("(2*x)^2", 3).unwrap(), parse_poly("4*x^2", 3).unwrap());
    }

    #[test]
    fn reports_errors_with_offsets() {
        assert_eq!(
            parse_poly("x+w", 3),
            Err(ParseError::UnknownVariable { offset: 2, name: 'w' })
        );
        assert!(parse_poly("x+w", 4).is_ok());
        assert_eq!(parse_poly("x^-2", 3), Err(ParseError::NegativeExponent { offset: 2 }));
        assert!(matches!(parse_poly("x+", 3), Err(ParseError::Syntax { offset: 2, .. })));
        assert!(matches!(parse_poly("(x+1", 3), Err(ParseError::Syntax { .. })));
        assert!(matches!(parse_poly("q", 3), Err(ParseError::UnknownVariable { name: 'q', .. })));
    }

    #[test]
    fn leading_sign_accepted() {
        assert_eq!(parse_poly("-x+y", 3).unwrap(), parse_poly("y-x", 3).unwrap());
    }
}
