//! Expression parser for catalog entries and canonical coefficient text.
//!
//! Grammar (`*` is the noncommutative algebra product, evaluated in the
//! written order):
//!
//! ```text
//! expr   := term (("+" | "-") term)*
//! term   := unary (("*" | "/") unary)*
//! unary  := ("-" | "+") unary | power
//! power  := atom ("^" "-"? integer)?
//! atom   := integer | name | "(" expr ")"
//! ```
//!
//! Division is only defined by invertible monomials and nonzero scalars.

use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

use crate::field::{ParamSymbol, RatFunc};
use crate::weyl::{Scalar, VarSet, WeylElement, WeylError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("unexpected character {ch:?} at byte {pos}")]
    UnexpectedChar { pos: usize, ch: char },
    #[error("unexpected {found} at byte {pos}")]
    UnexpectedToken { pos: usize, found: String },
    #[error("unexpected end of input")]
    UnexpectedEnd,
    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),
    #[error("variable `{0}` does not belong to this expression's variable set")]
    WrongVariableSet(String),
    #[error("expression is not a scalar")]
    NotScalar,
    #[error("algebra error: {0}")]
    Algebra(#[from] WeylError),
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Name(String),
    Op(char),
}

fn tokenize(src: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let mut out = Vec::new();
    let chars: Vec<(usize, char)> = src.char_indices().collect();
    let mut i = 0;
    while i < chars.len() {
        let (pos, c) = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].1.is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().map(|x| x.1).collect();
            out.push((pos, Tok::Int(s.parse().expect("digits"))));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && (chars[i].1.is_ascii_alphanumeric() || chars[i].1 == '_') {
                i += 1;
            }
            let s: String = chars[start..i].iter().map(|x| x.1).collect();
            out.push((pos, Tok::Name(s)));
        } else if "+-*/^()".contains(c) {
            out.push((pos, Tok::Op(c)));
            i += 1;
        } else {
            return Err(ParseError::UnexpectedChar { pos, ch: c });
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
    vars: Option<VarSet>,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|t| &t.1)
    }

    fn peek_op(&self, c: char) -> bool {
        matches!(self.peek(), Some(Tok::Op(o)) if *o == c)
    }

    fn unexpected(&self) -> ParseError {
        match self.toks.get(self.at) {
            Some((pos, t)) => ParseError::UnexpectedToken {
                pos: *pos,
                found: format!("{t:?}"),
            },
            None => ParseError::UnexpectedEnd,
        }
    }

    fn expr(&mut self) -> Result<WeylElement, ParseError> {
        let mut acc = self.term()?;
        loop {
            if self.peek_op('+') {
                self.at += 1;
                acc = acc.add(&self.term()?);
            } else if self.peek_op('-') {
                self.at += 1;
                acc = acc.sub(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<WeylElement, ParseError> {
        let mut acc = self.unary()?;
        loop {
            if self.peek_op('*') {
                self.at += 1;
                let rhs = self.unary()?;
                acc = acc.mul(&rhs)?;
            } else if self.peek_op('/') {
                self.at += 1;
                let rhs = self.unary()?;
                acc = acc.mul(&rhs.inverse()?)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<WeylElement, ParseError> {
        if self.peek_op('-') {
            self.at += 1;
            return Ok(self.unary()?.neg());
        }
        if self.peek_op('+') {
            self.at += 1;
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<WeylElement, ParseError> {
        let base = self.atom()?;
        if !self.peek_op('^') {
            return Ok(base);
        }
        self.at += 1;
        let negative = if self.peek_op('-') {
            self.at += 1;
            true
        } else {
            false
        };
        let n = match self.peek() {
            Some(Tok::Int(n)) => {
                let n: i32 = n.try_into().map_err(|_| self.unexpected())?;
                self.at += 1;
                n
            }
            _ => return Err(self.unexpected()),
        };
        Ok(base.power(if negative { -n } else { n })?)
    }

    fn atom(&mut self) -> Result<WeylElement, ParseError> {
        let tok = self.peek().cloned().ok_or(ParseError::UnexpectedEnd)?;
        match tok {
            Tok::Int(n) => {
                self.at += 1;
                Ok(WeylElement::scalar(RatFunc::from_rational(BigRational::from_integer(n))))
            }
            Tok::Name(name) => {
                self.at += 1;
                self.name(&name)
            }
            Tok::Op('(') => {
                self.at += 1;
                let e = self.expr()?;
                if !self.peek_op(')') {
                    return Err(self.unexpected());
                }
                self.at += 1;
                Ok(e)
            }
            _ => Err(self.unexpected()),
        }
    }

    fn name(&self, name: &str) -> Result<WeylElement, ParseError> {
        if let Some(p) = ParamSymbol::from_name(name) {
            return Ok(WeylElement::scalar(RatFunc::var(p)));
        }
        for set in [VarSet::Old, VarSet::New] {
            if let Some(slot) = set.lookup(name) {
                return if self.vars == Some(set) {
                    Ok(WeylElement::generator(slot))
                } else {
                    Err(ParseError::WrongVariableSet(name.to_string()))
                };
            }
        }
        Err(ParseError::UnknownSymbol(name.to_string()))
    }
}

/// Parses an algebra element in the given variable set.
pub fn parse_element(src: &str, vars: VarSet) -> Result<WeylElement, ParseError> {
    parse_with(src, Some(vars))
}

fn parse_with(src: &str, vars: Option<VarSet>) -> Result<WeylElement, ParseError> {
    let mut p = Parser {
        toks: tokenize(src)?,
        at: 0,
        vars,
    };
    let e = p.expr()?;
    if p.at != p.toks.len() {
        return Err(p.unexpected());
    }
    Ok(e)
}

/// Parses a parameter expression (no canonical variables).
pub fn parse_ratfunc(src: &str) -> Result<RatFunc, ParseError> {
    let e = parse_with(src, None)?;
    match e.as_scalar() {
        Some(Scalar::Rat(r)) => Ok(r),
        _ => Err(ParseError::NotScalar),
    }
}
