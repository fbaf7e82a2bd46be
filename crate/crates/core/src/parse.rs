//! Recursive-descent parser for generating-function expressions.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := ('+' | '-') unary | factor
//! factor := base ('^' ['+' | '-'] integer)?
//! base   := number | 'x' | '(' expr ')'
//! number := digits ('.' digits)?
//! ```
//!
//! `−` (U+2212) is accepted as a minus sign. Expressions are evaluated over
//! the field of rational functions and the result must reduce to
//! `N(x) / (c (1-x)^a (1+x)^b)`.

use alloc::format;
use alloc::string::{String, ToString};

use num_bigint::BigInt;
use num_traits::{One, Pow, Zero};

use crate::error::{Error, Result};
use crate::genfunc::RationalGF;
use crate::poly::Polynomial;
use crate::rational::{sign_pow, Rational};

const MAX_EXPONENT: u32 = 4096;

/// A quotient of polynomials, not necessarily reduced.
#[derive(Clone, Debug)]
struct Fraction {
    num: Polynomial,
    den: Polynomial,
}

impl Fraction {
    fn poly(p: Polynomial) -> Self {
        Fraction {
            num: p,
            den: Polynomial::one(),
        }
    }

    fn add(&self, rhs: &Self, negate: bool) -> Self {
        let left = &self.num * &rhs.den;
        let right = &rhs.num * &self.den;
        let num = if negate {
            &left - &right
        } else {
            &left + &right
        };
        Fraction {
            num,
            den: &self.den * &rhs.den,
        }
        .reduced()
    }

    fn mul(&self, rhs: &Self) -> Self {
        Fraction {
            num: &self.num * &rhs.num,
            den: &self.den * &rhs.den,
        }
        .reduced()
    }

    fn recip(&self) -> Option<Self> {
        if self.num.is_zero() {
            return None;
        }
        Some(Fraction {
            num: self.den.clone(),
            den: self.num.clone(),
        })
    }

    fn reduced(self) -> Self {
        if self.num.is_zero() {
            return Fraction::poly(Polynomial::zero());
        }
        let g = self.num.gcd(&self.den);
        if g.degree() == Some(0) {
            return self;
        }
        let (num, _) = self.num.div_rem(&g).expect("nonzero gcd");
        let (den, _) = self.den.div_rem(&g).expect("nonzero gcd");
        Fraction { num, den }
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

#[derive(Clone, Copy, Debug, PartialEq)]
enum Tok {
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    X,
    Number,
    End,
    Other(char),
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while let Some(c) = self.src[self.pos..].chars().next() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    /// Next token and its byte length, without consuming it.
    fn peek(&mut self) -> (Tok, usize) {
        self.skip_ws();
        let Some(c) = self.src[self.pos..].chars().next() else {
            return (Tok::End, 0);
        };
        let tok = match c {
            '+' => Tok::Plus,
            '-' | '\u{2212}' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            'x' => Tok::X,
            '0'..='9' => Tok::Number,
            other => Tok::Other(other),
        };
        (tok, c.len_utf8())
    }

    fn bump(&mut self, len: usize) {
        self.pos += len;
    }

    fn error(&self, offset: usize, message: impl Into<String>) -> Error {
        Error::Syntax {
            offset,
            message: message.into(),
        }
    }

    fn unexpected(&mut self, wanted: &str) -> Error {
        let (tok, _) = self.peek();
        let found = match tok {
            Tok::End => "end of input".to_string(),
            _ => format!("'{}'", self.src[self.pos..].chars().next().unwrap_or(' ')),
        };
        self.error(self.pos, format!("expected {wanted}, found {found}"))
    }

    fn expr(&mut self) -> Result<Fraction> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                (Tok::Plus, n) => {
                    self.bump(n);
                    acc = acc.add(&self.term()?, false);
                }
                (Tok::Minus, n) => {
                    self.bump(n);
                    acc = acc.add(&self.term()?, true);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Fraction> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                (Tok::Star, n) => {
                    self.bump(n);
                    acc = acc.mul(&self.unary()?);
                }
                (Tok::Slash, n) => {
                    let at = self.pos;
                    self.bump(n);
                    let rhs = self.unary()?;
                    let inv = rhs
                        .recip()
                        .ok_or_else(|| self.error(at, "division by zero"))?;
                    acc = acc.mul(&inv);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<Fraction> {
        match self.peek() {
            (Tok::Minus, n) => {
                self.bump(n);
                let inner = self.unary()?;
                Ok(Fraction {
                    num: -inner.num,
                    den: inner.den,
                })
            }
            (Tok::Plus, n) => {
                self.bump(n);
                self.unary()
            }
            _ => self.factor(),
        }
    }

    fn factor(&mut self) -> Result<Fraction> {
        let base_at = self.pos;
        let base = self.base()?;
        let (Tok::Caret, n) = self.peek() else {
            return Ok(base);
        };
        self.bump(n);
        let mut negative = false;
        match self.peek() {
            (Tok::Minus, n) => {
                negative = true;
                self.bump(n);
            }
            (Tok::Plus, n) => self.bump(n),
            _ => {}
        }
        let (Tok::Number, _) = self.peek() else {
            return Err(self.unexpected("an integer exponent"));
        };
        let exp_at = self.pos;
        let digits = self.digits();
        let e: u32 = digits
            .parse()
            .ok()
            .filter(|&e| e <= MAX_EXPONENT)
            .ok_or_else(|| {
                self.error(
                    exp_at,
                    format!("exponent must be an integer up to {MAX_EXPONENT}"),
                )
            })?;
        if let (Tok::Number, _) | (Tok::Other('.'), _) = self.peek() {
            return Err(self.error(self.pos, "exponent must be an integer"));
        }
        let powered = Fraction {
            num: base.num.pow(e),
            den: base.den.pow(e),
        };
        if negative {
            powered
                .recip()
                .ok_or_else(|| self.error(base_at, "zero raised to a negative power"))
        } else {
            Ok(powered)
        }
    }

    fn digits(&mut self) -> &'a str {
        let start = self.pos;
        let len = self.src[start..]
            .bytes()
            .take_while(u8::is_ascii_digit)
            .count();
        self.pos += len;
        &self.src[start..start + len]
    }

    fn base(&mut self) -> Result<Fraction> {
        match self.peek() {
            (Tok::Number, _) => {
                let whole = self.digits();
                let mut value = Rational::from_integer(whole.parse::<BigInt>().expect("digits"));
                if self.src[self.pos..].starts_with('.') {
                    let dot = self.pos;
                    self.pos += 1;
                    let frac = self.digits();
                    if frac.is_empty() {
                        return Err(self.error(dot, "expected digits after '.'"));
                    }
                    let scale = Pow::pow(BigInt::from(10u32), frac.len() as u32);
                    let f = Rational::new(frac.parse::<BigInt>().expect("digits"), scale);
                    value += f;
                }
                Ok(Fraction::poly(Polynomial::constant(value)))
            }
            (Tok::X, n) => {
                self.bump(n);
                Ok(Fraction::poly(Polynomial::x()))
            }
            (Tok::LParen, n) => {
                let open = self.pos;
                self.bump(n);
                let inner = self.expr()?;
                match self.peek() {
                    (Tok::RParen, n) => {
                        self.bump(n);
                        Ok(inner)
                    }
                    (Tok::End, _) => Err(self.error(open, "unclosed '('")),
                    _ => Err(self.unexpected("')'")),
                }
            }
            _ => Err(self.unexpected("a number, 'x' or '('")),
        }
    }
}

/// Parses an expression and reduces it to a canonical [`RationalGF`].
pub fn parse_genfunc(text: &str) -> Result<RationalGF> {
    let mut p = Parser { src: text, pos: 0 };
    let value = p.expr()?;
    if p.peek().0 != Tok::End {
        return Err(p.unexpected("an operator or end of input"));
    }
    into_genfunc(value.reduced())
}

fn into_genfunc(f: Fraction) -> Result<RationalGF> {
    if f.num.is_zero() {
        return Ok(RationalGF::new(Polynomial::zero(), 0, 0));
    }
    let mut den = f.den;
    let mut a = 0u32;
    let mut b = 0u32;
    loop {
        let (q, r) = den.divide_by_root(&Rational::one());
        if !r.is_zero() || den.degree() == Some(0) {
            break;
        }
        den = q;
        a += 1;
    }
    loop {
        let (q, r) = den.divide_by_root(&-Rational::one());
        if !r.is_zero() || den.degree() == Some(0) {
            break;
        }
        den = q;
        b += 1;
    }
    if den.degree() != Some(0) {
        return Err(Error::UnsupportedDenominator(den.to_string()));
    }
    // den_original = c (x-1)^a (x+1)^b = c (-1)^a (1-x)^a (1+x)^b
    let c = den.coeff(0) * sign_pow(i64::from(a));
    if c.is_zero() {
        return Err(Error::UnsupportedDenominator(den.to_string()));
    }
    Ok(RationalGF::new(f.num.scale(&c.recip()), a, b))
}
