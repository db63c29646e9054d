//! Sparse multivariate polynomials over the rationals in x, y, z.
//!
//! A [`Poly`] stores a finite map from monomials to nonzero coefficients, so
//! structural equality is semantic equality. Terms iterate in ascending
//! grevlex order; the leading term is the largest.
//!
//! The module also provides the plain-text grammar used by every printer and
//! parser in the crate: signed sums of terms `c*x^a*y^b*z^c`, with `^1` and
//! a coefficient of 1 elided. Printing a polynomial and parsing the result
//! returns the identical polynomial.
//!
//! ```
//! use lrlab::poly::Poly;
//!
//! let p: Poly = "x^2 + y^3 + z^2".parse().unwrap();
//! let q: Poly = "-1/4*x*y^2".parse().unwrap();
//! let product = p.mul(&q);
//! assert_eq!(product.to_string().parse::<Poly>().unwrap(), product);
//! ```

use crate::monomial::{Monomial, Var};
use crate::rational::{rational_string, Rational};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

/// A sparse polynomial in x, y, z with rational coefficients.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, Rational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Poly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Poly::term(Monomial::ONE, c)
    }

    pub fn constant_int(c: i64) -> Self {
        Poly::constant(Rational::from_integer(BigInt::from(c)))
    }

    /// The single-term polynomial `c * mono`.
    pub fn term(mono: Monomial, c: Rational) -> Self {
        let mut p = Poly::default();
        p.add_term(mono, c);
        p
    }

    pub fn var(v: Var) -> Self {
        Poly::var_pow(v, 1)
    }

    pub fn var_pow(v: Var, e: u32) -> Self {
        Poly::term(Monomial::var_pow(v, e), Rational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of stored terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending grevlex order.
    pub fn iter(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    /// The grevlex-largest term, if any.
    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn coeff(&self, mono: &Monomial) -> Rational {
        self.terms.get(mono).cloned().unwrap_or_else(Rational::zero)
    }

    /// Adds `c * mono` in place, dropping the term if it cancels.
    pub fn add_term(&mut self, mono: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in other.iter() {
            out.add_term(*m, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in other.iter() {
            out.add_term(*m, -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Poly {
        let mut out = Poly::default();
        for (m, c) in self.iter() {
            out.terms.insert(*m, -c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut out = Poly::default();
        for (m, k) in self.iter() {
            out.terms.insert(*m, k * c);
        }
        out
    }

    /// Multiplies by the single term `c * mono`.
    pub fn mul_term(&self, mono: &Monomial, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut out = Poly::default();
        for (m, k) in self.iter() {
            out.terms.insert(m.mul(mono), k * c);
        }
        out
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::default();
        for (m1, c1) in self.iter() {
            for (m2, c2) in other.iter() {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut out = Poly::one();
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Total degree; zero polynomial reports 0.
    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    /// Largest z-exponent across terms; zero polynomial reports 0.
    pub fn z_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::z).max().unwrap_or(0)
    }

    /// Formal partial derivative. Satisfies additivity and the Leibniz rule.
    pub fn partial(&self, v: Var) -> Poly {
        let mut out = Poly::default();
        for (m, c) in self.iter() {
            let e = m.exp(v);
            if e == 0 {
                continue;
            }
            let mut exps = [m.x(), m.y(), m.z()];
            exps[v.index()] = e - 1;
            out.add_term(
                Monomial::new(exps[0], exps[1], exps[2]),
                c * Rational::from_integer(BigInt::from(e)),
            );
        }
        out
    }

    /// Splits into quasi-homogeneous parts keyed by weight under
    /// wt(x) = 2n, wt(y) = 2m, wt(z) = mn.
    pub fn weight_parts(&self, m: u32, n: u32) -> BTreeMap<i64, Poly> {
        let mut parts: BTreeMap<i64, Poly> = BTreeMap::new();
        for (mono, c) in self.iter() {
            parts
                .entry(mono.weight(m, n))
                .or_default()
                .add_term(*mono, c.clone());
        }
        parts
    }

    /// Whether every term has the given weight.
    pub fn is_weight_homogeneous(&self, m: u32, n: u32, w: i64) -> bool {
        self.terms.keys().all(|mono| mono.weight(m, n) == w)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_poly(self, f)
    }
}

fn write_poly(p: &Poly, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if p.is_zero() {
        return write!(f, "0");
    }
    // Leading term first.
    for (idx, (mono, c)) in p.terms.iter().rev().enumerate() {
        let negative = c.is_negative();
        let abs = c.abs();
        if idx == 0 {
            if negative {
                write!(f, "-")?;
            }
        } else if negative {
            write!(f, " - ")?;
        } else {
            write!(f, " + ")?;
        }
        if *mono == Monomial::ONE {
            write!(f, "{}", rational_string(&abs))?;
        } else if abs.is_one() {
            write!(f, "{}", mono)?;
        } else {
            write!(f, "{}*{}", rational_string(&abs), mono)?;
        }
    }
    Ok(())
}

/// Error from parsing the polynomial text grammar.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("unexpected character {0:?} at byte {1}")]
    UnexpectedChar(char, usize),
    #[error("unexpected end of input")]
    UnexpectedEnd,
    #[error("malformed term near byte {0}")]
    MalformedTerm(usize),
    #[error("zero denominator at byte {0}")]
    ZeroDenominator(usize),
    #[error("exponent too large at byte {0}")]
    ExponentTooLarge(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Number(BigInt),
    Variable(Var),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
}

fn lex(input: &str) -> Result<Vec<(Token, usize)>, ParseError> {
    let mut tokens = Vec::new();
    let bytes = input.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '+' => {
                tokens.push((Token::Plus, i));
                i += 1;
            }
            '-' => {
                tokens.push((Token::Minus, i));
                i += 1;
            }
            '*' => {
                tokens.push((Token::Star, i));
                i += 1;
            }
            '/' => {
                tokens.push((Token::Slash, i));
                i += 1;
            }
            '^' => {
                tokens.push((Token::Caret, i));
                i += 1;
            }
            'x' => {
                tokens.push((Token::Variable(Var::X), i));
                i += 1;
            }
            'y' => {
                tokens.push((Token::Variable(Var::Y), i));
                i += 1;
            }
            'z' => {
                tokens.push((Token::Variable(Var::Z), i));
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let digits = &input[start..i];
                let value = BigInt::parse_bytes(digits.as_bytes(), 10)
                    .ok_or(ParseError::MalformedTerm(start))?;
                tokens.push((Token::Number(value), start));
            }
            other => return Err(ParseError::UnexpectedChar(other, i)),
        }
    }
    Ok(tokens)
}

struct Parser {
    tokens: Vec<(Token, usize)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(t, _)| t)
    }

    fn here(&self) -> usize {
        self.tokens.get(self.pos).map(|&(_, p)| p).unwrap_or(usize::MAX)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).map(|(t, _)| t.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn parse_poly(&mut self) -> Result<Poly, ParseError> {
        let mut out = Poly::zero();
        let mut sign = Rational::one();
        // Optional leading sign.
        match self.peek() {
            Some(Token::Minus) => {
                self.bump();
                sign = -sign;
            }
            Some(Token::Plus) => {
                self.bump();
            }
            None => return Err(ParseError::UnexpectedEnd),
            _ => {}
        }
        loop {
            let term = self.parse_term()?;
            out = out.add(&term.scale(&sign));
            match self.bump() {
                None => return Ok(out),
                Some(Token::Plus) => sign = Rational::one(),
                Some(Token::Minus) => sign = -Rational::one(),
                Some(_) => return Err(ParseError::MalformedTerm(self.here())),
            }
        }
    }

    /// term := factor ('*' factor)*
    fn parse_term(&mut self) -> Result<Poly, ParseError> {
        let mut acc = self.parse_factor()?;
        while matches!(self.peek(), Some(Token::Star)) {
            self.bump();
            let rhs = self.parse_factor()?;
            acc = acc.mul(&rhs);
        }
        Ok(acc)
    }

    /// factor := number ('/' number)? | variable ('^' number)?
    fn parse_factor(&mut self) -> Result<Poly, ParseError> {
        let at = self.here();
        match self.bump() {
            Some(Token::Number(numer)) => {
                if matches!(self.peek(), Some(Token::Slash)) {
                    self.bump();
                    let dat = self.here();
                    match self.bump() {
                        Some(Token::Number(denom)) => {
                            if denom.is_zero() {
                                return Err(ParseError::ZeroDenominator(dat));
                            }
                            Ok(Poly::constant(Rational::new(numer, denom)))
                        }
                        _ => Err(ParseError::MalformedTerm(dat)),
                    }
                } else {
                    Ok(Poly::constant(Rational::from_integer(numer)))
                }
            }
            Some(Token::Variable(v)) => {
                if matches!(self.peek(), Some(Token::Caret)) {
                    self.bump();
                    let eat = self.here();
                    match self.bump() {
                        Some(Token::Number(e)) => {
                            let e: u32 = e
                                .try_into()
                                .map_err(|_| ParseError::ExponentTooLarge(eat))?;
                            if e > 1_000_000 {
                                return Err(ParseError::ExponentTooLarge(eat));
                            }
                            Ok(Poly::var_pow(v, e))
                        }
                        _ => Err(ParseError::MalformedTerm(eat)),
                    }
                } else {
                    Ok(Poly::var(v))
                }
            }
            _ => Err(ParseError::MalformedTerm(at)),
        }
    }
}

impl FromStr for Poly {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.trim() == "0" {
            return Ok(Poly::zero());
        }
        let tokens = lex(s)?;
        let mut parser = Parser { tokens, pos: 0 };
        parser.parse_poly()
    }
}
