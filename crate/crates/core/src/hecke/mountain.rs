//! Mountain and reciprocity properties of Poincaré–Hilbert numerators, and
//! factorization into `(1+t)` and `(1+ct+t²)` over ℚ.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::exact::{Gauss, Scalar, UniPoly, UniVar};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MountainResult {
    Pass,
    /// Index of the first coefficient that breaks the pattern.
    Fail(usize),
}

fn rational(c: &Scalar) -> Option<BigRational> {
    c.as_gauss().filter(|g| g.is_real()).map(|g| g.re)
}

/// Strict increase up to the middle and strict decrease after it.
pub fn mountain_check(p: &UniPoly) -> MountainResult {
    let n = p.degree();
    let cs: Vec<Option<BigRational>> = (0..=n).map(|k| rational(&p.coeff(k))).collect();
    if let Some(k) = cs.iter().position(|c| c.is_none()) {
        return MountainResult::Fail(k);
    }
    let cs: Vec<BigRational> = cs.into_iter().map(|c| c.expect("checked")).collect();
    for i in 0..n {
        if i + 1 <= n / 2 && cs[i] >= cs[i + 1] {
            return MountainResult::Fail(i + 1);
        }
        if i >= n.div_ceil(2) && cs[i] <= cs[i + 1] {
            return MountainResult::Fail(i + 1);
        }
    }
    MountainResult::Pass
}

fn is_reciprocal(p: &UniPoly) -> bool {
    let n = p.degree();
    (0..=n).all(|k| p.coeff(k) == p.coeff(n - k))
}

/// `N(t)` and `D(−t)` both reciprocal.
pub fn reciprocal_check(n: &UniPoly, d: &UniPoly) -> bool {
    is_reciprocal(n) && is_reciprocal(&d.negate_var())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    /// `(1+t)` factors first, then `(1+ct+t²)` by increasing `c`.
    pub factors: Vec<UniPoly>,
    /// Part that does not split into such factors over ℚ; `None` if trivial.
    pub remainder: Option<UniPoly>,
}

impl Factorization {
    pub fn product(&self) -> UniPoly {
        let mut acc = self.remainder.clone().unwrap_or_else(|| UniPoly::one(UniVar::T));
        for f in &self.factors {
            acc = acc.mul(f);
        }
        acc
    }
}

/// Greedy extraction of `(1+t)` factors, then of `(1+ct+t²)` with rational
/// `c ≥ 2` via the substitution `u = t + 1/t` on the reciprocal remainder.
pub fn factor_mountain(p: &UniPoly) -> Factorization {
    let one_plus_t = UniPoly::from_ints(UniVar::T, &[1, 1]);
    let mut rest = p.clone();
    let mut factors = Vec::new();
    while rest.degree() >= 1 && rest.eval(&Scalar::from_int(-1)).is_zero() {
        rest = rest.div_rem(&one_plus_t).0;
        factors.push(one_plus_t.clone());
    }
    let done = |rest: UniPoly, factors: Vec<UniPoly>| {
        let remainder = if rest.degree() == 0 && rest.coeff(0).is_one() { None } else { Some(rest) };
        Factorization { factors, remainder }
    };
    if rest.degree() % 2 == 1 || !is_reciprocal(&rest) || rest.degree() == 0 {
        return done(rest, factors);
    }
    let Some(g) = to_u_poly(&rest) else {
        return done(rest, factors);
    };
    let mut g = g;
    let mut cs: Vec<BigRational> = Vec::new();
    for root in rational_roots(&g) {
        let c = -root.clone();
        if c < BigRational::from_integer(2.into()) {
            continue;
        }
        loop {
            let (quo, rem) = div_linear(&g, &root);
            if !rem.is_zero() {
                break;
            }
            g = quo;
            cs.push(c.clone());
        }
    }
    cs.sort();
    for c in &cs {
        factors.push(UniPoly::new(
            UniVar::T,
            vec![Scalar::one(), Scalar::from_gauss(Gauss::from_rational(c.clone())), Scalar::one()],
        ));
    }
    done(from_u_poly(&g), factors)
}

/// For reciprocal `p` of degree `2m`, the `g` with `p(t) = t^m g(t + 1/t)`,
/// lowest coefficient first. `None` if a coefficient is not rational.
fn to_u_poly(p: &UniPoly) -> Option<Vec<BigRational>> {
    let m = p.degree() / 2;
    let c: Vec<BigRational> = (0..=2 * m).map(|k| rational(&p.coeff(k))).collect::<Option<_>>()?;
    // Dickson polynomials D_j(u) = t^j + t^{-j}
    let mut dickson: Vec<Vec<BigRational>> = vec![vec![BigRational::from_integer(2.into())]];
    if m >= 1 {
        dickson.push(vec![BigRational::zero(), BigRational::one()]);
    }
    for j in 2..=m {
        let mut next = vec![BigRational::zero(); j + 1];
        for (k, x) in dickson[j - 1].iter().enumerate() {
            next[k + 1] += x;
        }
        for (k, x) in dickson[j - 2].iter().enumerate() {
            next[k] -= x;
        }
        dickson.push(next);
    }
    let mut g = vec![BigRational::zero(); m + 1];
    g[0] += &c[m];
    for j in 1..=m {
        for (k, x) in dickson[j].iter().enumerate() {
            g[k] += &c[m + j] * x;
        }
    }
    Some(g)
}

fn from_u_poly(g: &[BigRational]) -> UniPoly {
    // t^m g(t + 1/t) expanded; (t² + 1)^k t^{m−k}
    let m = g.len() - 1;
    let mut out = vec![BigRational::zero(); 2 * m + 1];
    for (k, gk) in g.iter().enumerate() {
        if gk.is_zero() {
            continue;
        }
        for j in 0..=k {
            let binom = binomial(k, j);
            out[m - k + 2 * j] += gk * BigRational::from_integer(binom);
        }
    }
    UniPoly::new(UniVar::T, out.into_iter().map(|x| Scalar::from_gauss(Gauss::from_rational(x))).collect())
}

fn binomial(n: usize, k: usize) -> BigInt {
    let mut acc = BigInt::one();
    for j in 0..k {
        acc = acc * BigInt::from(n - j) / BigInt::from(j + 1);
    }
    acc
}

fn div_linear(g: &[BigRational], root: &BigRational) -> (Vec<BigRational>, BigRational) {
    // synthetic division by (u − root)
    let n = g.len() - 1;
    if n == 0 {
        return (g.to_vec(), g[0].clone());
    }
    let mut quo = vec![BigRational::zero(); n];
    let mut carry = BigRational::zero();
    for k in (0..=n).rev() {
        let v = &g[k] + &carry * root;
        if k == 0 {
            return (quo, v);
        }
        quo[k - 1] = v.clone();
        carry = v;
    }
    unreachable!()
}

/// Candidate rational roots via the rational root theorem; skipped for
/// coefficients too large to factor by trial division.
fn rational_roots(g: &[BigRational]) -> Vec<BigRational> {
    let lcm = g.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = g.iter().map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer()).collect();
    let Some(lead) = ints.iter().rev().find(|c| !c.is_zero()).cloned() else {
        return Vec::new();
    };
    let Some(low) = ints.iter().find(|c| !c.is_zero()).cloned() else {
        return Vec::new();
    };
    let (Some(a0), Some(an)) = (low.abs().to_u64(), lead.abs().to_u64()) else {
        return Vec::new();
    };
    if a0 > 1_000_000_000_000 || an > 1_000_000_000_000 {
        return Vec::new();
    }
    let mut out: Vec<BigRational> = Vec::new();
    for p in divisors(a0) {
        for q in divisors(an) {
            for s in [1i64, -1] {
                let cand = BigRational::new(BigInt::from(p) * s, BigInt::from(q));
                if out.contains(&cand) {
                    continue;
                }
                let (_, rem) = div_linear(g, &cand);
                if rem.is_zero() {
                    out.push(cand);
                }
            }
        }
    }
    out.sort();
    out
}

fn divisors(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut k = 1;
    while k * k <= n {
        if n % k == 0 {
            out.push(k);
            if k * k != n {
                out.push(n / k);
            }
        }
        k += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(c: &[i64]) -> UniPoly {
        UniPoly::from_ints(UniVar::T, c)
    }

    #[test]
    fn mountain_examples() {
        assert_eq!(mountain_check(&t(&[1, 10, 12, 10, 1])), MountainResult::Pass);
        assert_eq!(mountain_check(&t(&[1, 5, 8, 5, 1])), MountainResult::Pass);
        assert_eq!(mountain_check(&t(&[1, 3, 2, 3, 1])), MountainResult::Fail(2));
        assert_eq!(mountain_check(&t(&[1, 3, 3, 1])), MountainResult::Pass);
    }

    #[test]
    fn reciprocity() {
        assert!(reciprocal_check(&t(&[1, 2, 1]), &t(&[1])));
        assert!(!reciprocal_check(&t(&[1, 2]), &t(&[1])));
        assert!(reciprocal_check(&t(&[1, 1]), &t(&[1, -1])));
    }

    #[test]
    fn factorization() {
        let f = factor_mountain(&t(&[1, 3, 3, 1]));
        assert_eq!(f.factors, vec![t(&[1, 1]); 3]);
        assert!(f.remainder.is_none());
        let f = factor_mountain(&t(&[1, 5, 8, 5, 1]));
        assert_eq!(f.factors, vec![t(&[1, 1]), t(&[1, 1]), t(&[1, 3, 1])]);
        let f = factor_mountain(&t(&[1, 10, 12, 10, 1]));
        assert!(f.factors.is_empty());
        assert_eq!(f.remainder, Some(t(&[1, 10, 12, 10, 1])));
        let f = factor_mountain(&t(&[1, 7, 14, 7, 1]));
        assert_eq!(f.factors, vec![t(&[1, 3, 1]), t(&[1, 4, 1])]);
    }
}
