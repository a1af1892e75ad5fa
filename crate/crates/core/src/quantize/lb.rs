//! Laplace–Beltrami operators of the metrics
//! `φ(r) dt² − φ(r)⁻¹ dr² − r² dΩ²`.

use std::str::FromStr;

use super::{InvariantBasis, InvariantOperator, QuantizeError, QuantumRadiusFrame};
use crate::exact::{parse_scalar_in, ParseError, Scalar, Var};
use crate::u2::{classical_action, InvariantOp};

/// The metric function `φ(r)`, possibly depending on `r_g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MetricProfile {
    phi: Scalar,
}

impl MetricProfile {
    pub fn new(phi: Scalar) -> Result<Self, QuantizeError> {
        if phi.is_zero() {
            return Err(QuantizeError::DegenerateMetric);
        }
        if [Var::T, Var::X, Var::Y, Var::Z, Var::Mu].iter().any(|&v| phi.contains_var(v)) {
            return Err(QuantizeError::NotPolynomial(format!("phi must depend on r only: {phi}")));
        }
        Ok(MetricProfile { phi })
    }

    pub fn flat() -> Self {
        MetricProfile { phi: Scalar::one() }
    }

    /// `φ = 1 − r_g/r`.
    pub fn schwarzschild() -> Self {
        MetricProfile { phi: &Scalar::one() - &(&Scalar::var(Var::Rg) / &Scalar::var(Var::R)) }
    }

    pub fn phi(&self) -> &Scalar {
        &self.phi
    }

    pub fn dphi(&self) -> Scalar {
        self.phi.derivative(Var::R)
    }
}

/// A rational expression in `r` and `rg`; `"schwarzschild"` and `"flat"`
/// are accepted as names.
impl FromStr for MetricProfile {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        match s.trim() {
            "schwarzschild" => return Ok(MetricProfile::schwarzschild()),
            "flat" => return Ok(MetricProfile::flat()),
            _ => {}
        }
        let phi = parse_scalar_in(s, &[Var::R, Var::Rg])?;
        MetricProfile::new(phi).map_err(|e| ParseError::new(0, e.to_string()))
    }
}

/// `φ⁻¹∂_t² − ((φ−1)/r²)Q² − (1/r)((φ−1)/r + φ′)Q − Δ`.
pub fn lb_classical(m: &MetricProfile) -> InvariantOperator {
    let r = Scalar::var(Var::R);
    let pm1 = &m.phi - &Scalar::one();
    let a = &pm1 / &(&r * &r);
    let mut op = InvariantOperator::default();
    op.add_term(InvariantBasis::Dt2, m.phi.inv());
    op.add_term(InvariantBasis::Q2, -&a);
    op.add_term(InvariantBasis::Q, -(&a + &(&m.dphi() / &r)));
    op.add_term(InvariantBasis::Delta, -Scalar::one());
    op
}

/// The quantum Laplace–Beltrami operator with `r̂ = μ/(2i)`:
/// `φ(r̂)⁻¹∂̂_t² − A·Q̂² − (A + φ′(r̂)/r̂)Q̂ + (ℏ/2)A·Q̂∂̂_t − (1 + (ℏ²/12)A)Δ̂`
/// where `A = (φ(r̂)−1)/r̂²`.
pub fn lb_quantum(m: &MetricProfile) -> InvariantOperator {
    let rhat = QuantumRadiusFrame::rhat();
    let at = |s: &Scalar| s.subs(Var::R, &rhat);
    let h = Scalar::h();
    let phi = at(&m.phi);
    let a = &(&phi - &Scalar::one()) / &(&rhat * &rhat);
    let mut op = InvariantOperator::default();
    op.add_term(InvariantBasis::Dt2, phi.inv());
    op.add_term(InvariantBasis::Q2, -&a);
    op.add_term(InvariantBasis::Q, -(&a + &(&at(&m.dphi()) / &rhat)));
    op.add_term(InvariantBasis::QDt, &(&h * &Scalar::from_ratio(1, 2)) * &a);
    let c = &(&(&h * &h) * &Scalar::from_ratio(1, 12)) * &a;
    op.add_term(InvariantBasis::Delta, -(&Scalar::one() + &c));
    op
}

/// The original form of the classical operator,
/// `φ⁻¹∂_t² − φ∂_r² − r⁻²(X² + Y² + Z²) − r⁻²∂_r(φr²)∂_r`, applied to
/// `g(t, r)·u` with `u` harmonic of degree `k`. Returns the coefficient of `u`.
pub fn lb_eq54_isotypic(m: &MetricProfile, g: &Scalar, k: u32) -> Scalar {
    // u = r^k·Y with Y on the sphere, and the angular part acts by −k(k+1).
    let r = Scalar::var(Var::R);
    let rk = r.pow(k as i32);
    let f = g * &rk;
    let dr = |s: &Scalar| s.derivative(Var::R);
    let r2 = &r * &r;
    let kk = Scalar::from_int(k as i64 * (k as i64 + 1));
    let radial = &(&(&f.derivative(Var::T).derivative(Var::T) / &m.phi) - &(&m.phi * &dr(&dr(&f))))
        - &(&(&dr(&(&m.phi * &r2)) * &dr(&f)) / &r2);
    &(&radial / &rk) + &(&(&kk * g) / &r2)
}

/// A classical invariant operator applied to `g(t, r)·u`, `u` harmonic of
/// degree `k`, through the closed forms of `∂_t`, `Q`, `Q²` and `Δ`.
pub fn classical_isotypic(op: &InvariantOperator, g: &Scalar, k: u32) -> Scalar {
    let act = |o: InvariantOp, f: &Scalar| classical_action(o, f, k).expect("supported classical action");
    let mut out = Scalar::zero();
    for (b, c) in &op.terms {
        let v = match b {
            InvariantBasis::Identity => g.clone(),
            InvariantBasis::Dt => act(InvariantOp::Dt, g),
            InvariantBasis::Dt2 => act(InvariantOp::Dt, &act(InvariantOp::Dt, g)),
            InvariantBasis::Q => act(InvariantOp::Q, g),
            InvariantBasis::Q2 => act(InvariantOp::Delta(3), g),
            InvariantBasis::QDt => act(InvariantOp::Q, &act(InvariantOp::Dt, g)),
            InvariantBasis::Delta => act(InvariantOp::Delta(1), g),
        };
        out = &out + &(c * &v);
    }
    out
}
