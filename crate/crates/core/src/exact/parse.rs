//! Recursive-descent parser for the expression grammar shared by scalars and
//! noncommutative polynomials: integers, names, `+ - * / ^ ( )`.
//!
//! Names are resolved by the caller, so the same grammar serves `q`, `h`,
//! `mu` as well as generator letters such as `n_1^2`. Known names are matched
//! longest-first, which lets a `^` belong to a generator name.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::gauss::Gauss;
use super::poly::Var;
use super::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    /// Byte offset into the input.
    pub pos: usize,
    pub msg: String,
}

impl ParseError {
    pub fn new(pos: usize, msg: impl Into<String>) -> Self {
        ParseError { pos, msg: msg.into() }
    }

    /// 1-based line and column of the error within `src`.
    pub fn line_col(&self, src: &str) -> (usize, usize) {
        let upto = &src[..self.pos.min(src.len())];
        let line = upto.matches('\n').count() + 1;
        let col = upto.rsplit('\n').next().map(|s| s.chars().count()).unwrap_or(0) + 1;
        (line, col)
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at offset {}: {}", self.pos, self.msg)
    }
}

impl std::error::Error for ParseError {}

/// Operations an expression value must support.
pub trait ExprValue: Clone {
    fn from_scalar(s: Scalar) -> Self;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn div(&self, o: &Self) -> Result<Self, String>;
    fn pow(&self, e: i64) -> Result<Self, String>;
}

impl ExprValue for Scalar {
    fn from_scalar(s: Scalar) -> Self {
        s
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div(&self, o: &Self) -> Result<Self, String> {
        if o.is_zero() {
            Err("division by zero".into())
        } else {
            Ok(self / o)
        }
    }
    fn pow(&self, e: i64) -> Result<Self, String> {
        if e < 0 && self.is_zero() {
            return Err("negative power of zero".into());
        }
        i32::try_from(e).map(|e| Scalar::pow(self, e)).map_err(|_| "exponent too large".to_string())
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Name(String),
    Op(char),
}

fn lex(src: &str, known: &[String]) -> Result<Vec<(usize, Tok)>, ParseError> {
    let mut out = Vec::new();
    let bytes = src.as_bytes();
    let mut pos = 0;
    while pos < src.len() {
        let rest = &src[pos..];
        let c = rest.chars().next().expect("nonempty");
        if c.is_whitespace() {
            pos += c.len_utf8();
            continue;
        }
        if let Some(name) = known
            .iter()
            .filter(|n| rest.starts_with(n.as_str()))
            .filter(|n| {
                // a known name must not be a prefix of a longer identifier
                let after = rest[n.len()..].chars().next();
                !matches!(after, Some(a) if a.is_alphanumeric() || a == '_')
                    || n.chars().last().map(|l| !l.is_alphanumeric() && l != '_').unwrap_or(false)
            })
            .max_by_key(|n| n.len())
        {
            out.push((pos, Tok::Name(name.clone())));
            pos += name.len();
            continue;
        }
        if c.is_ascii_digit() {
            let start = pos;
            while pos < src.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            let n: BigInt = src[start..pos].parse().expect("digits");
            out.push((start, Tok::Int(n)));
            continue;
        }
        if c.is_alphabetic() || c == '_' {
            let start = pos;
            let mut end = pos;
            for (k, ch) in rest.char_indices() {
                if ch.is_alphanumeric() || ch == '_' {
                    end = pos + k + ch.len_utf8();
                } else {
                    break;
                }
            }
            out.push((start, Tok::Name(src[start..end].to_string())));
            pos = end;
            continue;
        }
        if "+-*/^()".contains(c) {
            out.push((pos, Tok::Op(c)));
            pos += 1;
            continue;
        }
        return Err(ParseError::new(pos, format!("unexpected character '{}'", c)));
    }
    Ok(out)
}

struct Parser<'a, T, F> {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
    resolve: &'a F,
    _p: std::marker::PhantomData<T>,
}

impl<'a, T: ExprValue, F: Fn(&str) -> Option<T>> Parser<'a, T, F> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|t| &t.1)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map(|t| t.0).unwrap_or(self.end)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Op(c)) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<T, ParseError> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                let r = self.term()?;
                acc = acc.add(&r);
            } else if self.eat('-') {
                let r = self.term()?;
                acc = acc.sub(&r);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<T, ParseError> {
        let mut acc = self.unary()?;
        loop {
            let pos = self.pos();
            if self.eat('*') {
                let r = self.unary()?;
                acc = acc.mul(&r);
            } else if self.eat('/') {
                let r = self.unary()?;
                acc = acc.div(&r).map_err(|m| ParseError::new(pos, m))?;
            } else if matches!(self.peek(), Some(Tok::Int(_)) | Some(Tok::Name(_)) | Some(Tok::Op('('))) {
                // juxtaposition is multiplication: `2q`, `2(q+1)`
                let r = self.power()?;
                acc = acc.mul(&r);
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<T, ParseError> {
        if self.eat('-') {
            Ok(self.unary()?.neg())
        } else if self.eat('+') {
            self.unary()
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<T, ParseError> {
        let base = self.atom()?;
        let pos = self.pos();
        if self.eat('^') {
            let e = self.exponent()?;
            return base.pow(e).map_err(|m| ParseError::new(pos, m));
        }
        Ok(base)
    }

    fn exponent(&mut self) -> Result<i64, ParseError> {
        let pos = self.pos();
        let neg = self.eat('-');
        let paren = !neg && self.eat('(');
        let inner_neg = paren && self.eat('-');
        let v = match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.at += 1;
                i64::try_from(n).map_err(|_| ParseError::new(pos, "exponent too large"))?
            }
            _ => return Err(ParseError::new(pos, "expected integer exponent")),
        };
        if paren && !self.eat(')') {
            return Err(ParseError::new(self.pos(), "expected ')'"));
        }
        Ok(if neg || inner_neg { -v } else { v })
    }

    fn atom(&mut self) -> Result<T, ParseError> {
        let pos = self.pos();
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.at += 1;
                let g = Gauss::from_rational(BigRational::from_integer(n));
                Ok(T::from_scalar(Scalar::from_gauss(g)))
            }
            Some(Tok::Name(name)) => {
                self.at += 1;
                (self.resolve)(&name).ok_or_else(|| ParseError::new(pos, format!("unknown name '{}'", name)))
            }
            Some(Tok::Op('(')) => {
                self.at += 1;
                let v = self.expr()?;
                if !self.eat(')') {
                    return Err(ParseError::new(self.pos(), "expected ')'"));
                }
                Ok(v)
            }
            Some(Tok::Op(c)) => Err(ParseError::new(pos, format!("unexpected '{}'", c))),
            None => Err(ParseError::new(pos, "unexpected end of input")),
        }
    }
}

/// Parse `src` with names resolved by `resolve`; `known` lists names that may
/// contain operator characters and take priority in lexing.
pub fn parse_expr<T, F>(src: &str, known: &[String], resolve: &F) -> Result<T, ParseError>
where
    T: ExprValue,
    F: Fn(&str) -> Option<T>,
{
    let toks = lex(src, known)?;
    if toks.is_empty() {
        return Err(ParseError::new(0, "empty expression"));
    }
    let mut p = Parser { toks, at: 0, end: src.len(), resolve, _p: std::marker::PhantomData };
    let v = p.expr()?;
    if p.at != p.toks.len() {
        return Err(ParseError::new(p.pos(), "trailing input"));
    }
    Ok(v)
}

/// Parse a scalar over the given variables; `i` is always available.
pub fn parse_scalar_in(src: &str, vars: &[Var]) -> Result<Scalar, ParseError> {
    let resolve = |name: &str| -> Option<Scalar> {
        if name == "i" {
            return Some(Scalar::i());
        }
        Var::from_name(name).filter(|v| vars.contains(v)).map(Scalar::var)
    };
    parse_expr(src, &[], &resolve)
}

/// Parse a scalar over every known variable.
pub fn parse_scalar(src: &str) -> Result<Scalar, ParseError> {
    parse_scalar_in(src, &Var::ALL)
}
