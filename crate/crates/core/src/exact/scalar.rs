//! Elements of ℚ(i)(q, h, t, μ, ...) as reduced fractions of [`Poly`].

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use super::gauss::Gauss;
use super::poly::{Poly, Var};

/// A reduced rational function. The denominator is monic and `None` stands
/// for `1`, so equality of canonical forms is equality of values.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Scalar {
    num: Poly,
    den: Option<Poly>,
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar { num: Poly::zero(), den: None }
    }

    pub fn one() -> Self {
        Scalar { num: Poly::one(), den: None }
    }

    pub fn i() -> Self {
        Scalar::from_gauss(Gauss::i())
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::from_gauss(Gauss::from_int(n))
    }

    pub fn from_ratio(n: i64, d: i64) -> Self {
        Scalar::from_gauss(Gauss::from_ratio(n, d))
    }

    pub fn from_gauss(g: Gauss) -> Self {
        Scalar { num: Poly::constant(g), den: None }
    }

    pub fn var(v: Var) -> Self {
        Scalar { num: Poly::var(v), den: None }
    }

    pub fn q() -> Self {
        Scalar::var(Var::Q)
    }

    pub fn h() -> Self {
        Scalar::var(Var::H)
    }

    pub fn from_poly(p: Poly) -> Self {
        Scalar { num: p, den: None }
    }

    /// `num / den`, reduced. Panics if `den` is zero.
    pub fn from_fraction(num: Poly, den: Poly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return Scalar::zero();
        }
        if den.is_constant() {
            let c = den.leading_coeff().inv();
            return Scalar { num: num.scale(&c), den: None };
        }
        let g = num.gcd(&den);
        let (n, d) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g).expect("gcd divides"), den.div_exact(&g).expect("gcd divides"))
        };
        Scalar::normalized(n, d)
    }

    /// Assemble from coprime parts, making the denominator monic.
    fn normalized(num: Poly, den: Poly) -> Self {
        if den.is_constant() {
            let c = den.leading_coeff().inv();
            return Scalar { num: num.scale(&c), den: None };
        }
        let lc = den.leading_coeff();
        if lc.is_one() {
            Scalar { num, den: Some(den) }
        } else {
            let inv = lc.inv();
            Scalar { num: num.scale(&inv), den: Some(den.scale(&inv)) }
        }
    }

    pub fn numer(&self) -> &Poly {
        &self.num
    }

    pub fn denom(&self) -> Poly {
        self.den.clone().unwrap_or_else(Poly::one)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_none() && self.num.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_none()
    }

    pub fn is_constant(&self) -> bool {
        self.den.is_none() && self.num.is_constant()
    }

    /// The value as a Gaussian rational, if it has no variables.
    pub fn as_gauss(&self) -> Option<Gauss> {
        if self.den.is_none() {
            self.num.constant_value()
        } else {
            None
        }
    }

    pub fn contains_var(&self, v: Var) -> bool {
        self.num.contains_var(v) || self.den.as_ref().map(|d| d.contains_var(v)).unwrap_or(false)
    }

    pub fn inv(&self) -> Scalar {
        assert!(!self.is_zero(), "inverse of zero scalar");
        let d = self.denom();
        Scalar::normalized(d, self.num.clone())
    }

    pub fn pow(&self, e: i32) -> Scalar {
        if e < 0 {
            return self.inv().pow(-e);
        }
        let e = e as u32;
        if let Some(g) = self.as_gauss() {
            return Scalar::from_gauss(g.pow(e));
        }
        // coprime parts stay coprime under powers
        let num = self.num.pow(e);
        match &self.den {
            None => Scalar { num, den: None },
            Some(d) => Scalar { num, den: Some(d.pow(e)) },
        }
    }

    pub fn scale_gauss(&self, c: &Gauss) -> Scalar {
        if c.is_zero() {
            return Scalar::zero();
        }
        Scalar { num: self.num.scale(c), den: self.den.clone() }
    }

    /// Complex conjugation of the coefficients (variables are treated as real).
    pub fn conj(&self) -> Scalar {
        let num = self.num.conj();
        match &self.den {
            None => Scalar { num, den: None },
            Some(d) => Scalar::normalized(num, d.conj()),
        }
    }

    pub fn derivative(&self, v: Var) -> Scalar {
        match &self.den {
            None => Scalar::from_poly(self.num.derivative(v)),
            Some(d) => {
                let n = self.num.derivative(v).mul(d).sub(&self.num.mul(&d.derivative(v)));
                Scalar::from_fraction(n, d.mul(d))
            }
        }
    }

    /// Substitute the variable `v` by a scalar value.
    pub fn subs(&self, v: Var, value: &Scalar) -> Scalar {
        if !self.contains_var(v) {
            return self.clone();
        }
        let n = subs_poly(&self.num, v, value);
        match &self.den {
            None => n,
            Some(d) => &n / &subs_poly(d, v, value),
        }
    }

    /// Simultaneous substitution of several variables.
    pub fn subs_all(&self, map: &[(Var, Scalar)]) -> Scalar {
        let n = subs_poly_all(&self.num, map);
        match &self.den {
            None => n,
            Some(d) => &n / &subs_poly_all(d, map),
        }
    }

    fn add_impl(&self, o: &Scalar, negate: bool) -> Scalar {
        if o.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return if negate { -o } else { o.clone() };
        }
        let on = if negate { o.num.neg() } else { o.num.clone() };
        match (&self.den, &o.den) {
            (None, None) => Scalar { num: self.num.add(&on), den: None },
            (Some(a), None) => Scalar { num: self.num.add(&on.mul(a)), den: Some(a.clone()) },
            (None, Some(b)) => Scalar { num: self.num.mul(b).add(&on), den: Some(b.clone()) },
            (Some(a), Some(b)) => {
                if a == b {
                    let n = self.num.add(&on);
                    return Scalar::from_fraction(n, a.clone());
                }
                let g = a.gcd(b);
                if g.is_one() {
                    let n = self.num.mul(b).add(&on.mul(a));
                    // a, b coprime and monic: the sum is already reduced
                    return Scalar::normalized(n, a.mul(b));
                }
                let a1 = a.div_exact(&g).expect("gcd divides");
                let b1 = b.div_exact(&g).expect("gcd divides");
                let n = self.num.mul(&b1).add(&on.mul(&a1));
                let d = a1.mul(b);
                let g2 = n.gcd(&g);
                if g2.is_one() {
                    Scalar::normalized(n, d)
                } else {
                    Scalar::normalized(
                        n.div_exact(&g2).expect("gcd divides"),
                        d.div_exact(&g2).expect("gcd divides"),
                    )
                }
            }
        }
    }

    fn mul_impl(&self, o: &Scalar) -> Scalar {
        if self.is_zero() || o.is_zero() {
            return Scalar::zero();
        }
        if let Some(c) = o.as_gauss() {
            return self.scale_gauss(&c);
        }
        if let Some(c) = self.as_gauss() {
            return o.scale_gauss(&c);
        }
        match (&self.den, &o.den) {
            (None, None) => Scalar { num: self.num.mul(&o.num), den: None },
            _ => {
                let one = Poly::one();
                let da = self.den.as_ref().unwrap_or(&one);
                let db = o.den.as_ref().unwrap_or(&one);
                let g1 = self.num.gcd(db);
                let g2 = o.num.gcd(da);
                let n1 = self.num.div_exact(&g1).expect("gcd divides");
                let d2 = db.div_exact(&g1).expect("gcd divides");
                let n2 = o.num.div_exact(&g2).expect("gcd divides");
                let d1 = da.div_exact(&g2).expect("gcd divides");
                Scalar::normalized(n1.mul(&n2), d1.mul(&d2))
            }
        }
    }
}

fn subs_poly(p: &Poly, v: Var, value: &Scalar) -> Scalar {
    let coeffs = p.coeffs_in(v);
    let mut acc = Scalar::zero();
    for c in coeffs.iter().rev() {
        acc = &(&acc * value) + &Scalar::from_poly(c.clone());
    }
    acc
}

fn subs_poly_all(p: &Poly, map: &[(Var, Scalar)]) -> Scalar {
    let mut acc = Scalar::zero();
    for (m, c) in p.terms() {
        let mut term = Scalar::from_gauss(c.clone());
        let mut rest = super::poly::ONE_MONO;
        for (k, e) in m.iter().enumerate() {
            if *e == 0 {
                continue;
            }
            match map.iter().find(|(v, _)| v.index() == k) {
                Some((_, val)) => term = &term * &val.pow(*e as i32),
                None => rest[k] = *e,
            }
        }
        term = &term * &Scalar::from_poly(Poly::monomial(rest, Gauss::one()));
        acc = &acc + &term;
    }
    acc
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, o: &Scalar) -> Scalar {
        self.add_impl(o, false)
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, o: &Scalar) -> Scalar {
        self.add_impl(o, true)
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, o: &Scalar) -> Scalar {
        self.mul_impl(o)
    }
}

impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn div(self, o: &Scalar) -> Scalar {
        self.mul_impl(&o.inv())
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, o: Scalar) -> Scalar {
        self.add_impl(&o, false)
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, o: Scalar) -> Scalar {
        self.add_impl(&o, true)
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, o: Scalar) -> Scalar {
        self.mul_impl(&o)
    }
}

impl Div for Scalar {
    type Output = Scalar;
    fn div(self, o: Scalar) -> Scalar {
        self.mul_impl(&o.inv())
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { num: self.num.neg(), den: self.den }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { num: self.num.neg(), den: self.den.clone() }
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl From<Gauss> for Scalar {
    fn from(g: Gauss) -> Self {
        Scalar::from_gauss(g)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.den {
            None => write!(f, "{}", self.num),
            Some(d) => write!(f, "({})/({})", self.num, d),
        }
    }
}
