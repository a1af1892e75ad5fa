//! Sparse multivariate polynomials over the Gaussian rationals.
//!
//! Terms are kept sorted in strictly decreasing lexicographic monomial order
//! (variable `q` highest, then `h`, `t`, `mu`, ...), with no zero coefficients.
//! That makes structural equality the mathematical one.

use std::collections::BTreeMap;
use std::fmt;

use super::gauss::Gauss;

/// Number of symbolic variables known to the engine.
pub const NVARS: usize = 11;

/// The transcendental variables a [`Poly`] may contain, in lexicographic
/// priority order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    Q = 0,
    H = 1,
    T = 2,
    Mu = 3,
    R = 4,
    Rg = 5,
    X = 6,
    Y = 7,
    Z = 8,
    Rhat = 9,
    Hs = 10,
}

impl Var {
    pub const ALL: [Var; NVARS] = [
        Var::Q,
        Var::H,
        Var::T,
        Var::Mu,
        Var::R,
        Var::Rg,
        Var::X,
        Var::Y,
        Var::Z,
        Var::Rhat,
        Var::Hs,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Var::Q => "q",
            Var::H => "h",
            Var::T => "t",
            Var::Mu => "mu",
            Var::R => "r",
            Var::Rg => "rg",
            Var::X => "x",
            Var::Y => "y",
            Var::Z => "z",
            Var::Rhat => "rhat",
            Var::Hs => "hs",
        }
    }

    pub fn from_name(s: &str) -> Option<Var> {
        Var::ALL.iter().copied().find(|v| v.name() == s)
    }

    pub fn index(self) -> usize {
        self as usize
    }
}

pub type Mono = [u16; NVARS];

pub const ONE_MONO: Mono = [0; NVARS];

fn mono_mul(a: &Mono, b: &Mono) -> Mono {
    let mut m = *a;
    for (x, y) in m.iter_mut().zip(b.iter()) {
        *x += *y;
    }
    m
}

fn mono_divides(a: &Mono, b: &Mono) -> bool {
    a.iter().zip(b.iter()).all(|(x, y)| x <= y)
}

fn mono_div(b: &Mono, a: &Mono) -> Mono {
    let mut m = *b;
    for (x, y) in m.iter_mut().zip(a.iter()) {
        *x -= *y;
    }
    m
}

#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Poly {
    terms: Vec<(Mono, Gauss)>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Gauss::one())
    }

    pub fn constant(c: Gauss) -> Self {
        if c.is_zero() {
            Poly::zero()
        } else {
            Poly { terms: vec![(ONE_MONO, c)] }
        }
    }

    pub fn var(v: Var) -> Self {
        let mut m = ONE_MONO;
        m[v.index()] = 1;
        Poly { terms: vec![(m, Gauss::one())] }
    }

    pub fn monomial(m: Mono, c: Gauss) -> Self {
        if c.is_zero() {
            Poly::zero()
        } else {
            Poly { terms: vec![(m, c)] }
        }
    }

    /// Build from unsorted, possibly repeated terms.
    pub fn from_terms<I: IntoIterator<Item = (Mono, Gauss)>>(it: I) -> Self {
        let mut map: BTreeMap<Mono, Gauss> = BTreeMap::new();
        for (m, c) in it {
            match map.get_mut(&m) {
                Some(e) => e.add_assign_ref(&c),
                None => {
                    map.insert(m, c);
                }
            }
        }
        let mut terms: Vec<(Mono, Gauss)> = map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.reverse();
        Poly { terms }
    }

    pub fn terms(&self) -> &[(Mono, Gauss)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == ONE_MONO && self.terms[0].1.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0 == ONE_MONO)
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn constant_value(&self) -> Option<Gauss> {
        if self.terms.is_empty() {
            Some(Gauss::zero())
        } else if self.is_constant() {
            Some(self.terms[0].1.clone())
        } else {
            None
        }
    }

    /// Coefficient of the monomial `1`.
    pub fn constant_term(&self) -> Gauss {
        match self.terms.last() {
            Some((m, c)) if *m == ONE_MONO => c.clone(),
            _ => Gauss::zero(),
        }
    }

    pub fn leading(&self) -> Option<&(Mono, Gauss)> {
        self.terms.first()
    }

    pub fn leading_coeff(&self) -> Gauss {
        self.terms.first().map(|t| t.1.clone()).unwrap_or_else(Gauss::zero)
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.iter().map(|(m, _)| m[v.index()] as u32).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .iter()
            .map(|(m, _)| m.iter().map(|&e| e as u32).sum::<u32>())
            .max()
            .unwrap_or(0)
    }

    pub fn contains_var(&self, v: Var) -> bool {
        self.terms.iter().any(|(m, _)| m[v.index()] > 0)
    }

    pub fn vars(&self) -> Vec<Var> {
        Var::ALL.iter().copied().filter(|v| self.contains_var(*v)).collect()
    }

    pub fn neg(&self) -> Poly {
        Poly { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }

    pub fn scale(&self, c: &Gauss) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        if c.is_one() {
            return self.clone();
        }
        Poly { terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect() }
    }

    pub fn conj(&self) -> Poly {
        Poly { terms: self.terms.iter().map(|(m, c)| (*m, c.conj())).collect() }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        self.merge(other, false)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.merge(other, true)
    }

    fn merge(&self, other: &Poly, negate: bool) -> Poly {
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return if negate { other.neg() } else { other.clone() };
        }
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let a = &self.terms;
        let b = &other.terms;
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0, c));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        for t in &b[j..] {
            let c = if negate { -&t.1 } else { t.1.clone() };
            out.push((t.0, c));
        }
        Poly { terms: out }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        if other.is_monomial() {
            let (m, c) = &other.terms[0];
            // monomial multiplication preserves the order
            return Poly {
                terms: self.terms.iter().map(|(a, x)| (mono_mul(a, m), x * c)).collect(),
            };
        }
        if self.is_monomial() {
            return other.mul(self);
        }
        let mut map: BTreeMap<Mono, Gauss> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = mono_mul(ma, mb);
                let c = ca * cb;
                match map.get_mut(&m) {
                    Some(e) => e.add_assign_ref(&c),
                    None => {
                        map.insert(m, c);
                    }
                }
            }
        }
        let mut terms: Vec<(Mono, Gauss)> = map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.reverse();
        Poly { terms }
    }

    pub fn pow(&self, mut e: u32) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Scale so that the leading coefficient is 1.
    pub fn monic(&self) -> Poly {
        match self.terms.first() {
            None => Poly::zero(),
            Some((_, c)) if c.is_one() => self.clone(),
            Some((_, c)) => self.scale(&c.inv()),
        }
    }

    /// Exact division; `None` when `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &Poly) -> Option<Poly> {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(Poly::zero());
        }
        if divisor.is_constant() {
            return Some(self.scale(&divisor.terms[0].1.inv()));
        }
        let (lm, lc) = divisor.terms[0].clone();
        let lc_inv = lc.inv();
        if divisor.is_monomial() {
            let mut out = Vec::with_capacity(self.terms.len());
            for (m, c) in &self.terms {
                if !mono_divides(&lm, m) {
                    return None;
                }
                out.push((mono_div(m, &lm), c * &lc_inv));
            }
            return Some(Poly { terms: out });
        }
        let mut rem = self.clone();
        let mut quot: Vec<(Mono, Gauss)> = Vec::new();
        while let Some((m, c)) = rem.terms.first().cloned() {
            if !mono_divides(&lm, &m) {
                return None;
            }
            let qm = mono_div(&m, &lm);
            let qc = &c * &lc_inv;
            rem = rem.sub(&divisor.mul(&Poly::monomial(qm, qc.clone())));
            quot.push((qm, qc));
        }
        Some(Poly::from_terms(quot))
    }

    /// Coefficients as a polynomial in `v`: entry `k` multiplies `v^k`.
    pub fn coeffs_in(&self, v: Var) -> Vec<Poly> {
        let deg = self.degree_in(v) as usize;
        let mut buckets: Vec<Vec<(Mono, Gauss)>> = vec![Vec::new(); deg + 1];
        for (m, c) in &self.terms {
            let k = m[v.index()] as usize;
            let mut mm = *m;
            mm[v.index()] = 0;
            buckets[k].push((mm, c.clone()));
        }
        buckets.into_iter().map(Poly::from_terms).collect()
    }

    pub fn from_coeffs_in(v: Var, coeffs: &[Poly]) -> Poly {
        let mut terms = Vec::new();
        for (k, p) in coeffs.iter().enumerate() {
            for (m, c) in &p.terms {
                let mut mm = *m;
                mm[v.index()] += k as u16;
                terms.push((mm, c.clone()));
            }
        }
        Poly::from_terms(terms)
    }

    pub fn derivative(&self, v: Var) -> Poly {
        let idx = v.index();
        Poly::from_terms(self.terms.iter().filter(|(m, _)| m[idx] > 0).map(|(m, c)| {
            let mut mm = *m;
            let e = mm[idx];
            mm[idx] -= 1;
            (mm, c * &Gauss::from_int(e as i64))
        }))
    }

    /// Substitute `v ↦ value`.
    pub fn subs(&self, v: Var, value: &Poly) -> Poly {
        if !self.contains_var(v) {
            return self.clone();
        }
        let coeffs = self.coeffs_in(v);
        // Horner
        let mut acc = Poly::zero();
        for c in coeffs.iter().rev() {
            acc = acc.mul(value).add(c);
        }
        acc
    }

    /// Smallest exponent of each variable over all terms.
    fn min_mono(&self) -> Mono {
        let mut m = [u16::MAX; NVARS];
        for (t, _) in &self.terms {
            for k in 0..NVARS {
                m[k] = m[k].min(t[k]);
            }
        }
        if self.terms.is_empty() {
            ONE_MONO
        } else {
            m
        }
    }

    /// Greatest common divisor, normalised to be monic (leading coefficient 1).
    pub fn gcd(&self, other: &Poly) -> Poly {
        if self.is_zero() {
            return other.monic();
        }
        if other.is_zero() {
            return self.monic();
        }
        if self.is_constant() || other.is_constant() {
            return Poly::one();
        }
        if self == other {
            return self.monic();
        }
        if self.is_monomial() || other.is_monomial() {
            let a = self.min_mono();
            let b = other.min_mono();
            let mut m = ONE_MONO;
            for k in 0..NVARS {
                m[k] = a[k].min(b[k]);
            }
            return Poly::monomial(m, Gauss::one());
        }
        // pull out common monomial factors first
        let ma = self.min_mono();
        let mb = other.min_mono();
        if ma != ONE_MONO || mb != ONE_MONO {
            let mut m = ONE_MONO;
            for k in 0..NVARS {
                m[k] = ma[k].min(mb[k]);
            }
            let a = self.div_exact(&Poly::monomial(ma, Gauss::one())).expect("monomial content");
            let b = other.div_exact(&Poly::monomial(mb, Gauss::one())).expect("monomial content");
            return a.gcd(&b).mul(&Poly::monomial(m, Gauss::one()));
        }
        if let Some(q) = self.div_exact_cheap(other) {
            let _ = q;
            return other.monic();
        }
        if let Some(q) = other.div_exact_cheap(self) {
            let _ = q;
            return self.monic();
        }
        let va = self.vars();
        let vb = other.vars();
        let v = *va.iter().chain(vb.iter()).min().expect("non-constant");
        let in_a = va.contains(&v);
        let in_b = vb.contains(&v);
        if !in_a {
            return self.gcd(&other.content_in(v));
        }
        if !in_b {
            return self.content_in(v).gcd(other);
        }
        let ca = self.content_in(v);
        let cb = other.content_in(v);
        let pa = self.div_exact(&ca).expect("content divides");
        let pb = other.div_exact(&cb).expect("content divides");
        let c = ca.gcd(&cb);
        let g = primitive_prs(pa, pb, v);
        c.mul(&g).monic()
    }

    /// Exact division attempted only when the leading monomials make it plausible.
    fn div_exact_cheap(&self, divisor: &Poly) -> Option<Poly> {
        if divisor.terms.len() > self.terms.len() {
            return None;
        }
        let lm = &divisor.terms[0].0;
        if !mono_divides(lm, &self.terms[0].0) {
            return None;
        }
        let tm = &divisor.terms[divisor.terms.len() - 1].0;
        if !mono_divides(tm, &self.terms[self.terms.len() - 1].0) {
            return None;
        }
        self.div_exact(divisor)
    }

    /// Gcd of the coefficients when viewed as a polynomial in `v`.
    pub fn content_in(&self, v: Var) -> Poly {
        let coeffs = self.coeffs_in(v);
        let mut g = Poly::zero();
        for c in coeffs.iter().filter(|c| !c.is_zero()) {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub fn lcm(&self, other: &Poly) -> Poly {
        let g = self.gcd(other);
        self.mul(&other.div_exact(&g).expect("gcd divides")).monic()
    }
}

/// Primitive polynomial remainder sequence in `v`; inputs are primitive in `v`.
fn primitive_prs(a: Poly, b: Poly, v: Var) -> Poly {
    let (mut a, mut b) = if a.degree_in(v) >= b.degree_in(v) { (a, b) } else { (b, a) };
    loop {
        let r = pseudo_rem(&a, &b, v);
        if r.is_zero() {
            return primitive_part(&b, v);
        }
        if r.degree_in(v) == 0 {
            return Poly::one();
        }
        a = b;
        b = primitive_part(&r, v);
    }
}

fn primitive_part(p: &Poly, v: Var) -> Poly {
    let c = p.content_in(v);
    p.div_exact(&c).expect("content divides").monic()
}

/// Pseudo-remainder of `a` by `b` with respect to `v`.
fn pseudo_rem(a: &Poly, b: &Poly, v: Var) -> Poly {
    let db = b.degree_in(v) as usize;
    let bc = b.coeffs_in(v);
    let lb = bc[db].clone();
    let mut rc = a.coeffs_in(v);
    while rc.len() > db && !rc.is_empty() {
        let dr = rc.len() - 1;
        if rc[dr].is_zero() {
            rc.pop();
            continue;
        }
        let lr = rc[dr].clone();
        let shift = dr - db;
        for c in rc.iter_mut() {
            *c = c.mul(&lb);
        }
        for (k, bk) in bc.iter().enumerate() {
            if bk.is_zero() {
                continue;
            }
            rc[k + shift] = rc[k + shift].sub(&bk.mul(&lr));
        }
        debug_assert!(rc[dr].is_zero());
        rc.pop();
    }
    while rc.last().map(|c| c.is_zero()).unwrap_or(false) {
        rc.pop();
    }
    Poly::from_coeffs_in(v, &rc)
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let is_one_mono = *m == ONE_MONO;
            let negative = c.is_negative_real() || (num_traits::Zero::is_zero(&c.re) && num_traits::Signed::is_negative(&c.im));
            let (neg, mag) = if negative { (true, -c) } else { (false, c.clone()) };
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut first = true;
            if is_one_mono || !mag.is_one() {
                write!(f, "{}", mag)?;
                first = false;
            }
            for v in Var::ALL {
                let e = m[v.index()];
                if e == 0 {
                    continue;
                }
                if !first {
                    write!(f, "*")?;
                }
                first = false;
                if e == 1 {
                    write!(f, "{}", v.name())?;
                } else {
                    write!(f, "{}^{}", v.name(), e)?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Poly {
        Poly::var(Var::Q)
    }
    fn h() -> Poly {
        Poly::var(Var::H)
    }
    fn c(n: i64) -> Poly {
        Poly::constant(Gauss::from_int(n))
    }

    #[test]
    fn gcd_univariate() {
        // (q+1)(q-2) and (q+1)(q+3)
        let a = q().add(&c(1)).mul(&q().sub(&c(2)));
        let b = q().add(&c(1)).mul(&q().add(&c(3)));
        assert_eq!(a.gcd(&b), q().add(&c(1)));
    }

    #[test]
    fn gcd_bivariate() {
        let f = q().mul(&h()).add(&c(1));
        let a = f.mul(&q().sub(&h()));
        let b = f.mul(&q().add(&h())).mul(&h().add(&c(2)));
        assert_eq!(a.gcd(&b), f);
    }

    #[test]
    fn exact_division() {
        let a = q().pow(3).sub(&h().pow(3));
        let b = q().sub(&h());
        let quo = a.div_exact(&b).unwrap();
        assert_eq!(quo.mul(&b), a);
        assert!(a.div_exact(&q().add(&c(7))).is_none());
    }

    #[test]
    fn display_basic() {
        let p = q().pow(2).sub(&h().scale(&Gauss::from_ratio(1, 2))).add(&c(3));
        assert_eq!(p.to_string(), "q^2 - 1/2*h + 3");
    }
}
