//! Univariate polynomials with [`Scalar`] coefficients and rational
//! reconstruction of power series.

use std::fmt;

use super::matrix::ScalarMatrix;
use super::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum UniVar {
    T,
    Mu,
    Lambda,
}

impl UniVar {
    pub fn name(self) -> &'static str {
        match self {
            UniVar::T => "t",
            UniVar::Mu => "mu",
            UniVar::Lambda => "lambda",
        }
    }
}

/// Coefficients are stored lowest degree first with no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UniPoly {
    var: UniVar,
    coeffs: Vec<Scalar>,
}

impl UniPoly {
    pub fn new(var: UniVar, mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
            coeffs.pop();
        }
        UniPoly { var, coeffs }
    }

    pub fn from_ints(var: UniVar, c: &[i64]) -> Self {
        UniPoly::new(var, c.iter().map(|&x| Scalar::from_int(x)).collect())
    }

    pub fn zero(var: UniVar) -> Self {
        UniPoly { var, coeffs: Vec::new() }
    }

    pub fn one(var: UniVar) -> Self {
        UniPoly { var, coeffs: vec![Scalar::one()] }
    }

    pub fn var(&self) -> UniVar {
        self.var
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Scalar {
        self.coeffs.get(k).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; zero for the zero polynomial.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn leading(&self) -> Scalar {
        self.coeffs.last().cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn add(&self, o: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        UniPoly::new(self.var, (0..n).map(|k| &self.coeff(k) + &o.coeff(k)).collect())
    }

    pub fn sub(&self, o: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        UniPoly::new(self.var, (0..n).map(|k| &self.coeff(k) - &o.coeff(k)).collect())
    }

    pub fn scale(&self, s: &Scalar) -> UniPoly {
        UniPoly::new(self.var, self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn mul(&self, o: &UniPoly) -> UniPoly {
        if self.is_zero() || o.is_zero() {
            return UniPoly::zero(self.var);
        }
        let mut out = vec![Scalar::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        UniPoly::new(self.var, out)
    }

    pub fn pow(&self, e: u32) -> UniPoly {
        let mut acc = UniPoly::one(self.var);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        let mut acc = Scalar::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    /// `p(−t)`.
    pub fn negate_var(&self) -> UniPoly {
        UniPoly::new(
            self.var,
            self.coeffs.iter().enumerate().map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() }).collect(),
        )
    }

    /// Quotient and remainder of division by a nonzero polynomial.
    pub fn div_rem(&self, d: &UniPoly) -> (UniPoly, UniPoly) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let mut r = self.coeffs.clone();
        let dd = d.degree();
        let lc_inv = d.leading().inv();
        if r.len() < d.coeffs.len() {
            return (UniPoly::zero(self.var), self.clone());
        }
        let mut q = vec![Scalar::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = &r[k + dd] * &lc_inv;
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    r[k + j] = &r[k + j] - &(&c * dc);
                }
            }
            q[k] = c;
        }
        r.truncate(dd);
        (UniPoly::new(self.var, q), UniPoly::new(self.var, r))
    }

    /// Monic gcd over the coefficient field.
    pub fn gcd(&self, o: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            let inv = a.leading().inv();
            a.scale(&inv)
        }
    }

    /// First `n` coefficients of the power series `self / den`; needs `den(0) ≠ 0`.
    pub fn series_div(&self, den: &UniPoly, n: usize) -> Vec<Scalar> {
        let d0 = den.coeff(0);
        assert!(!d0.is_zero(), "series denominator vanishes at 0");
        let inv = d0.inv();
        let mut s: Vec<Scalar> = Vec::with_capacity(n);
        for k in 0..n {
            let mut acc = self.coeff(k);
            for j in 1..=k.min(den.degree()) {
                acc = &acc - &(&den.coeff(j) * &s[k - j]);
            }
            s.push(&acc * &inv);
        }
        s
    }
}

/// Find coprime `N, D` with `deg N ≤ m`, `deg D ≤ n`, `D(0) = 1` whose
/// expansion matches every given term. Smallest total degree wins.
pub fn reconstruct_rational(
    var: UniVar,
    series: &[Scalar],
    bounds: (usize, usize),
) -> Option<(UniPoly, UniPoly)> {
    let (m, n) = bounds;
    let len = series.len();
    let mut candidates: Vec<(usize, usize)> =
        (0..=m).flat_map(|a| (0..=n).map(move |b| (a, b))).filter(|(a, b)| a + b < len).collect();
    candidates.sort_by_key(|&(a, b)| (a + b, b));
    for (mm, nn) in candidates {
        if let Some(found) = pade(var, series, mm, nn) {
            return Some(found);
        }
    }
    None
}

fn pade(var: UniVar, s: &[Scalar], m: usize, n: usize) -> Option<(UniPoly, UniPoly)> {
    let len = s.len();
    let at = |k: isize| -> Scalar { if k < 0 { Scalar::zero() } else { s[k as usize].clone() } };
    // unknowns d_1..d_n; equations for k = m+1..len-1
    let eqs: Vec<usize> = (m + 1..len).collect();
    let d = if n == 0 {
        vec![Scalar::one()]
    } else {
        let a = ScalarMatrix::from_fn(eqs.len(), n, |r, j| at(eqs[r] as isize - (j as isize + 1)));
        let b = ScalarMatrix::from_fn(eqs.len(), 1, |r, _| -at(eqs[r] as isize));
        if eqs.is_empty() {
            return None;
        }
        let x = a.solve(&b)?;
        std::iter::once(Scalar::one()).chain((0..n).map(|j| x.get(j, 0).clone())).collect()
    };
    let num: Vec<Scalar> = (0..=m)
        .map(|k| {
            let mut acc = Scalar::zero();
            for (j, dj) in d.iter().enumerate() {
                acc = &acc + &(dj * &at(k as isize - j as isize));
            }
            acc
        })
        .collect();
    let np = UniPoly::new(var, num);
    let dp = UniPoly::new(var, d);
    if n == 0 && eqs.iter().any(|&k| !s[k].is_zero()) {
        return None;
    }
    let g = np.gcd(&dp);
    let (np, dp) = if g.degree() > 0 { (np.div_rem(&g).0, dp.div_rem(&g).0) } else { (np, dp) };
    let d0 = dp.coeff(0);
    if d0.is_zero() {
        return None;
    }
    let inv = d0.inv();
    let (np, dp) = (np.scale(&inv), dp.scale(&inv));
    if np.series_div(&dp, len) != s {
        return None;
    }
    Some((np, dp))
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let v = self.var.name();
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.as_gauss().map(|g| g.is_negative_real()).unwrap_or(false);
            let mag = if neg { -c } else { c.clone() };
            match (first, neg) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            let cs = mag.to_string();
            let cs = if mag.is_constant() && !cs.contains(['+', '-']) { cs } else { format!("({})", cs) };
            match k {
                0 => write!(f, "{}", cs)?,
                _ => {
                    let pw = if k == 1 { v.to_string() } else { format!("{}^{}", v, k) };
                    if mag.is_one() {
                        write!(f, "{}", pw)?
                    } else {
                        write!(f, "{}*{}", cs, pw)?
                    }
                }
            }
        }
        Ok(())
    }
}
