use super::{Alphabet, NCPoly};
use crate::exact::parse::{parse_expr, ExprValue, ParseError};
use crate::exact::{Scalar, Var};

impl ExprValue for NCPoly {
    fn from_scalar(s: Scalar) -> Self {
        NCPoly::scalar(s)
    }
    fn add(&self, o: &Self) -> Self {
        NCPoly::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        NCPoly::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        NCPoly::mul(self, o)
    }
    fn neg(&self) -> Self {
        NCPoly::neg(self)
    }
    fn div(&self, o: &Self) -> Result<Self, String> {
        match o.as_scalar() {
            Some(s) if !s.is_zero() => Ok(self.scale(&s.inv())),
            Some(_) => Err("division by zero".into()),
            None => Err("division by a noncommutative element".into()),
        }
    }
    fn pow(&self, e: i64) -> Result<Self, String> {
        if e >= 0 {
            return Ok(NCPoly::pow(self, e as u32));
        }
        match self.as_scalar() {
            Some(s) if !s.is_zero() => Ok(NCPoly::scalar(s.pow(e as i32))),
            _ => Err("negative power of a noncommutative element".into()),
        }
    }
}

/// Parse a free-algebra expression. Generator names take priority, then
/// `macros`, then `i` and the scalar variables in `vars`.
pub fn parse_nc(
    src: &str,
    alphabet: &Alphabet,
    vars: &[Var],
    macros: &[(String, NCPoly)],
) -> Result<NCPoly, ParseError> {
    let mut known: Vec<String> = alphabet.names().to_vec();
    known.extend(macros.iter().map(|(n, _)| n.clone()));
    let resolve = |name: &str| -> Option<NCPoly> {
        if let Some(l) = alphabet.letter(name) {
            return Some(NCPoly::letter(l));
        }
        if let Some((_, v)) = macros.iter().find(|(n, _)| n == name) {
            return Some(v.clone());
        }
        if name == "i" {
            return Some(NCPoly::scalar(Scalar::i()));
        }
        Var::from_name(name).filter(|v| vars.contains(v)).map(|v| NCPoly::scalar(Scalar::var(v)))
    };
    parse_expr(src, &known, &resolve)
}
