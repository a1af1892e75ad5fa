//! Invariant operators on isotypic elements `f(t, μ)·bᵏ`.
//!
//! Moving an operator past `t` shifts `t`, and past a function of `Cas` it
//! applies that function to `Φ` (or `Π`). The spectral decomposition turns
//! this into shifts of `μ`, so every invariant operator acts on `f` as a
//! difference operator.

use std::fmt;
use std::str::FromStr;

use num_rational::Rational64;
use serde::Serialize;

use super::spectral::{t_shift, SpectralMatrices, PHI_SHIFTS, PI_SHIFTS};
use crate::exact::{parse_scalar_in, ParseError, Scalar, ScalarMatrix, Var};

fn h() -> Scalar {
    Scalar::h()
}

fn rat(r: Rational64) -> Scalar {
    Scalar::from_ratio(*r.numer(), *r.denom())
}

/// `f(t, μ)·bᵏ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsotypicElement {
    pub f: Scalar,
    pub k: u32,
}

impl IsotypicElement {
    pub fn new(f: Scalar, k: u32) -> Self {
        IsotypicElement { f, k }
    }
}

impl fmt::Display for IsotypicElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} : k={}", self.f, self.k)
    }
}

/// `"f"` or `"f : k=n"`, with `f` in `t`, `mu` and `h`.
impl FromStr for IsotypicElement {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (fs, k) = match s.split_once(':') {
            None => (s, 0),
            Some((fs, ks)) => {
                let ks = ks.trim();
                let num = ks.strip_prefix("k").map(|x| x.trim_start()).and_then(|x| x.strip_prefix('='));
                let k = num
                    .and_then(|x| x.trim().parse::<u32>().ok())
                    .ok_or_else(|| ParseError::new(fs.len() + 1, format!("expected 'k=<n>', found '{ks}'")))?;
                (fs, k)
            }
        };
        let f = parse_scalar_in(fs, &[Var::T, Var::Mu, Var::H])?;
        Ok(IsotypicElement { f, k })
    }
}

/// How the constant in `∂_t = ∂̃_t − 2/ℏ` is applied to `f·bᵏ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DtReading {
    /// Subtract `(2/ℏ)·f`: the operator identity.
    Scaled,
    /// Subtract the constant `2/ℏ`.
    Literal,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum InvariantOp {
    Identity,
    /// `∂_t`.
    Dt,
    /// `∂̃_t`.
    DtTilde,
    Q,
    /// `Δ₀ = ∂̃_t²`, `Δ₁ = Δ`, `Δ₂ = Q∂̃_t`, `Δ₃ = Q²`.
    Delta(u8),
}

impl InvariantOp {
    pub const ALL: [InvariantOp; 8] = [
        InvariantOp::Identity,
        InvariantOp::Dt,
        InvariantOp::DtTilde,
        InvariantOp::Q,
        InvariantOp::Delta(0),
        InvariantOp::Delta(1),
        InvariantOp::Delta(2),
        InvariantOp::Delta(3),
    ];

    pub fn name(self) -> String {
        match self {
            InvariantOp::Identity => "1".into(),
            InvariantOp::Dt => "d_t".into(),
            InvariantOp::DtTilde => "Dt".into(),
            InvariantOp::Q => "Q".into(),
            InvariantOp::Delta(i) => format!("Delta{i}"),
        }
    }

    pub fn is_second_order(self) -> bool {
        matches!(self, InvariantOp::Delta(_))
    }
}

impl fmt::Display for InvariantOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl FromStr for InvariantOp {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.trim() {
            "Delta" => return Ok(InvariantOp::Delta(1)),
            "1" | "I" => return Ok(InvariantOp::Identity),
            _ => {}
        }
        InvariantOp::ALL
            .into_iter()
            .find(|o| o.name() == s.trim())
            .ok_or_else(|| format!("unknown invariant operator '{s}'"))
    }
}

/// `Σ cⱼ(t, μ)·opⱼ`, coefficients multiplying after the operator acts.
pub type OpCombination = Vec<(Scalar, InvariantOp)>;

/// `coeff(t, μ)·f(t + dt·ℏ, μ + dmu·ℏ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftTerm {
    pub coeff: Scalar,
    pub dt: Rational64,
    pub dmu: Rational64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShiftRecord {
    pub coeff: String,
    pub dt: String,
    pub dmu: String,
}

/// The action of an invariant operator on the component `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DifferenceOperator {
    pub k: u32,
    /// Distinct shifts, sorted.
    pub terms: Vec<ShiftTerm>,
}

pub fn shifted(f: &Scalar, dt: Rational64, dmu: Rational64) -> Scalar {
    let t = &Scalar::var(Var::T) + &(&rat(dt) * &h());
    let mu = &Scalar::var(Var::Mu) + &(&rat(dmu) * &h());
    f.subs_all(&[(Var::T, t), (Var::Mu, mu)])
}

impl DifferenceOperator {
    pub fn new(k: u32) -> Self {
        DifferenceOperator { k, terms: Vec::new() }
    }

    pub fn add_term(&mut self, coeff: Scalar, dt: Rational64, dmu: Rational64) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.binary_search_by(|x| (x.dt, x.dmu).cmp(&(dt, dmu))) {
            Ok(p) => {
                let c = &self.terms[p].coeff + &coeff;
                if c.is_zero() {
                    self.terms.remove(p);
                } else {
                    self.terms[p].coeff = c;
                }
            }
            Err(p) => self.terms.insert(p, ShiftTerm { coeff, dt, dmu }),
        }
    }

    pub fn apply(&self, f: &Scalar) -> Scalar {
        self.terms.iter().fold(Scalar::zero(), |acc, x| &acc + &(&x.coeff * &shifted(f, x.dt, x.dmu)))
    }

    pub fn coeff_at(&self, dt: Rational64, dmu: Rational64) -> Scalar {
        self.terms.iter().find(|x| x.dt == dt && x.dmu == dmu).map(|x| x.coeff.clone()).unwrap_or_else(Scalar::zero)
    }

    pub fn records(&self) -> Vec<ShiftRecord> {
        self.terms
            .iter()
            .map(|x| ShiftRecord { coeff: x.coeff.to_string(), dt: x.dt.to_string(), dmu: x.dmu.to_string() })
            .collect()
    }
}

impl fmt::Display for DifferenceOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (n, x) in self.terms.iter().enumerate() {
            if n > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({})*f(t + {}*h, mu + {}*h)", x.coeff, x.dt, x.dmu)?;
        }
        Ok(())
    }
}

impl SpectralMatrices {
    fn initial_vector(second: bool, k: u32) -> Vec<Scalar> {
        let k = Scalar::from_int(k as i64);
        if second {
            vec![&Scalar::from_int(4) / &(&h() * &h()), Scalar::zero(), &(&k * &Scalar::from_int(2)) / &h(), &k * &k]
        } else {
            vec![&Scalar::from_int(2) / &h(), k]
        }
    }

    fn parts(&self, second: bool) -> (&[ScalarMatrix], Vec<Rational64>) {
        if second {
            (&self.pi_proj, PI_SHIFTS.iter().map(|&s| Rational64::from_integer(s)).collect())
        } else {
            (&self.phi_proj, PHI_SHIFTS.iter().map(|&s| Rational64::from_integer(s)).collect())
        }
    }

    /// `(op₀, op₁, …)(f·bᵏ) = f(t+s, M)·v·bᵏ` with `f(M)` from the
    /// projectors.
    fn vector_action(&self, second: bool, e: &IsotypicElement) -> Vec<Scalar> {
        let (proj, shifts) = self.parts(second);
        let n = proj[0].rows();
        let dt = t_shift(second);
        let mut fm = ScalarMatrix::zeros(n, n);
        for (p, &s) in proj.iter().zip(&shifts) {
            fm = fm.add(&p.scale(&shifted(&e.f, dt, s)));
        }
        let v = ScalarMatrix::from_fn(n, 1, |i, _| Self::initial_vector(second, e.k)[i].clone());
        let out = fm.mul(&v);
        (0..n).map(|i| out.get(i, 0).clone()).collect()
    }

    /// Closed-form action of an invariant operator on `f·bᵏ`.
    pub fn act(&self, op: InvariantOp, e: &IsotypicElement, reading: DtReading) -> IsotypicElement {
        let f = match op {
            InvariantOp::Identity => e.f.clone(),
            InvariantOp::DtTilde => self.vector_action(false, e).swap_remove(0),
            InvariantOp::Q => self.vector_action(false, e).swap_remove(1),
            InvariantOp::Delta(i) => self.vector_action(true, e).swap_remove(i as usize),
            InvariantOp::Dt => {
                let g = self.vector_action(false, e).swap_remove(0);
                let sub = match reading {
                    DtReading::Scaled => e.f.clone(),
                    DtReading::Literal => Scalar::one(),
                };
                &g - &(&(&Scalar::from_int(2) / &h()) * &sub)
            }
        };
        IsotypicElement { f, k: e.k }
    }

    pub fn act_combination(&self, combo: &OpCombination, e: &IsotypicElement) -> IsotypicElement {
        let f = combo
            .iter()
            .fold(Scalar::zero(), |acc, (c, op)| &acc + &(c * &self.act(*op, e, DtReading::Scaled).f));
        IsotypicElement { f, k: e.k }
    }

    /// The combination as an explicit difference operator on component `k`.
    pub fn difference_form(&self, combo: &OpCombination, k: u32) -> DifferenceOperator {
        let mut out = DifferenceOperator::new(k);
        let zero = Rational64::from_integer(0);
        for (c, op) in combo {
            let (second, row) = match *op {
                InvariantOp::Identity => {
                    out.add_term(c.clone(), zero, zero);
                    continue;
                }
                InvariantOp::Dt => {
                    out.add_term(&-c * &(&Scalar::from_int(2) / &h()), zero, zero);
                    (false, 0)
                }
                InvariantOp::DtTilde => (false, 0),
                InvariantOp::Q => (false, 1),
                InvariantOp::Delta(i) => (true, i as usize),
            };
            let (proj, shifts) = self.parts(second);
            let v = Self::initial_vector(second, k);
            for (p, &s) in proj.iter().zip(&shifts) {
                let entry = (0..v.len()).fold(Scalar::zero(), |acc, j| &acc + &(p.get(row, j) * &v[j]));
                out.add_term(c * &entry, t_shift(second), s);
            }
        }
        out
    }
}

/// The classical operator on `f(t, r)·u` with `u` harmonic of degree `k`.
/// `None` for `∂̃_t`, `Δ₀` and `Δ₂`, which have no classical counterpart.
pub fn classical_action(op: InvariantOp, f: &Scalar, k: u32) -> Option<Scalar> {
    let r = Scalar::var(Var::R);
    let kk = Scalar::from_int(k as i64);
    let q = |g: &Scalar| &(&r * &g.derivative(Var::R)) + &(&kk * g);
    Some(match op {
        InvariantOp::Identity => f.clone(),
        InvariantOp::Dt => f.derivative(Var::T),
        InvariantOp::Q => q(f),
        InvariantOp::Delta(1) => {
            let fr = f.derivative(Var::R);
            &fr.derivative(Var::R) + &(&(&Scalar::from_int(2 * (k as i64 + 1)) / &r) * &fr)
        }
        InvariantOp::Delta(3) => q(&q(f)),
        _ => return None,
    })
}
