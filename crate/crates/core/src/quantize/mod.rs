//! Quantization of functions and differential operators on Sym(u(2)).
//!
//! Classical functions `f(t, r)·u` with `u` harmonic of degree `k` go to
//! `f(t̂, r̂)·û`, where `r̂ = μ/(2i)` is the quantum radius and `û` is the
//! symmetrization of `u`. Operators are quantized coefficientwise with the
//! derivatives kept to the right.

mod fields;
mod lb;
mod operator;

pub use fields::{dalembert, dirac_operator, dirac_residual, gamma_matrices, maxwell, OperatorMatrix};
pub use lb::{classical_isotypic, lb_classical, lb_eq54_isotypic, lb_quantum, MetricProfile};
pub use operator::{
    alpha_invariant, alpha_operator, alpha_q2_check, decompose_invariant, AlphaQ2Check, ClassicalOperator,
    InvariantBasis, InvariantOperator,
};

use crate::exact::{Poly, Scalar, ScalarMatrix, Var};
use crate::nc::{Letter, NCPoly, Reducer, Word};
use crate::u2::{IsotypicElement, U2Calculus, T, X, Y, Z};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum QuantizeError {
    #[error("coefficient is not a polynomial in t, x, y, z: {0}")]
    NotPolynomial(String),
    #[error("odd power of r in {0}")]
    OddRadius(String),
    #[error("operator is outside the span of the invariant operators")]
    OutsideInvariantSpan,
    #[error("degenerate metric: phi is zero")]
    DegenerateMetric,
}

/// The value of `r̂²` used when quantizing polynomial coefficients.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RadiusConvention {
    /// `r̂² = Cas − ℏ²/4`, the square of `μ/(2i)`.
    MinusQuarter,
    /// `r̂² = Cas + ℏ²/4`.
    PlusQuarter,
}

impl RadiusConvention {
    pub const ALL: [RadiusConvention; 2] = [RadiusConvention::MinusQuarter, RadiusConvention::PlusQuarter];

    pub fn name(self) -> &'static str {
        match self {
            RadiusConvention::MinusQuarter => "rhat^2 = Cas - h^2/4",
            RadiusConvention::PlusQuarter => "rhat^2 = Cas + h^2/4",
        }
    }

    /// `r̂²` as an element of U(u(2)_ℏ).
    pub fn rhat_squared(self, u2: &U2Calculus) -> NCPoly {
        let q = &(&Scalar::h() * &Scalar::h()) * &Scalar::from_ratio(1, 4);
        let q = match self {
            RadiusConvention::MinusQuarter => -q,
            RadiusConvention::PlusQuarter => q,
        };
        u2.cas().add(&NCPoly::scalar(q))
    }
}

/// Translation between the internal `(μ, ℏ)` and the displayed `(r̂, h)`
/// with `r̂ = μ/(2i)` and `ℏ = 2ih`.
pub struct QuantumRadiusFrame;

impl QuantumRadiusFrame {
    fn two_i() -> Scalar {
        &Scalar::from_int(2) * &Scalar::i()
    }

    /// `r̂ = μ/(2i)` in terms of `μ`.
    pub fn rhat() -> Scalar {
        &Scalar::var(Var::Mu) / &Self::two_i()
    }

    pub fn to_display(s: &Scalar) -> Scalar {
        let two_i = Self::two_i();
        s.subs_all(&[(Var::Mu, &two_i * &Scalar::var(Var::Rhat)), (Var::H, &two_i * &Scalar::var(Var::Hs))])
    }

    /// Only `μ → 2i·r̂`, keeping `ℏ`.
    pub fn in_rhat(s: &Scalar) -> Scalar {
        s.subs(Var::Mu, &(&Self::two_i() * &Scalar::var(Var::Rhat)))
    }

    pub fn from_display(s: &Scalar) -> Scalar {
        let two_i = Self::two_i();
        s.subs_all(&[(Var::Rhat, &Scalar::var(Var::Mu) / &two_i), (Var::Hs, &Scalar::var(Var::H) / &two_i)])
    }

    /// `x̂² + ŷ² + ẑ² + h² − r̂² = 0` in U(u(2)_ℏ).
    pub fn relation_holds(u2: &U2Calculus) -> bool {
        let rhat2 = Self::from_display(&Scalar::var(Var::Rhat).pow(2));
        let hs2 = Self::from_display(&Scalar::var(Var::Hs).pow(2));
        let Some(rhat2) = u2.central_to_u2(&rhat2) else { return false };
        u2.cas().add(&NCPoly::scalar(hs2)).sub(&rhat2).is_zero()
    }
}

/// `α(f(t, r)·bᵏ) = f(t̂, r̂)·b̂ᵏ` on isotypic data.
pub fn alpha(f: &Scalar, k: u32) -> IsotypicElement {
    IsotypicElement::new(f.subs(Var::R, &QuantumRadiusFrame::rhat()), k)
}

fn laplacian(p: &Scalar) -> Scalar {
    [Var::X, Var::Y, Var::Z]
        .iter()
        .fold(Scalar::zero(), |acc, &v| &acc + &p.derivative(v).derivative(v))
}

fn space_degree(m: &crate::exact::poly::Mono) -> u32 {
    (m[Var::X.index()] + m[Var::Y.index()] + m[Var::Z.index()]) as u32
}

fn double_factorial(n: i64) -> i64 {
    if n <= 1 {
        1
    } else {
        n * double_factorial(n - 2)
    }
}

/// Write a polynomial in `x, y, z` as `Σⱼ r^{2j}·hⱼ` with each `hⱼ`
/// harmonic. Returns `(j, hⱼ)` pairs with nonzero `hⱼ`.
pub fn harmonic_decomposition(p: &Poly) -> Vec<(u32, Poly)> {
    let mut by_degree: std::collections::BTreeMap<u32, Vec<_>> = Default::default();
    for (m, c) in p.terms() {
        by_degree.entry(space_degree(m)).or_default().push((*m, c.clone()));
    }
    let r2 = Poly::var(Var::X).pow(2).add(&Poly::var(Var::Y).pow(2)).add(&Poly::var(Var::Z).pow(2));
    let mut out: Vec<(u32, Poly)> = Vec::new();
    for (d, terms) in by_degree {
        let mut rest = Poly::from_terms(terms);
        let mut j = 0;
        let mut deg = d as i64;
        while !rest.is_zero() {
            // H(p) = Σᵢ (−1)ⁱ (2d−2i−1)!! / ((2i)!! (2d−1)!!) r^{2i} Δⁱ p
            let mut harm = Scalar::zero();
            let mut lap = Scalar::from_poly(rest.clone());
            let mut r2i = Scalar::one();
            for i in 0..=deg / 2 {
                let num = double_factorial(2 * deg - 2 * i - 1) * if i % 2 == 0 { 1 } else { -1 };
                let den = double_factorial(2 * i) * double_factorial(2 * deg - 1);
                harm = &harm + &(&(&Scalar::from_ratio(num, den) * &r2i) * &lap);
                lap = laplacian(&lap);
                r2i = &r2i * &Scalar::from_poly(r2.clone());
            }
            assert!(laplacian(&harm).is_zero(), "harmonic projection failed");
            let hp = harm.numer().clone();
            if !hp.is_zero() {
                out.push((j, hp.clone()));
            }
            rest = rest.sub(&hp).div_exact(&r2).expect("remainder divisible by r^2");
            j += 1;
            deg -= 2;
        }
    }
    out
}

/// Average of all orderings of a monomial `x^a y^b z^c`.
fn symmetrize_monomial(a: u16, b: u16, c: u16) -> NCPoly {
    fn rec(counts: &mut [u16; 3], word: &mut Vec<Letter>, out: &mut Vec<Vec<Letter>>) {
        if counts.iter().all(|&c| c == 0) {
            out.push(word.clone());
            return;
        }
        for g in 0..3 {
            if counts[g] > 0 {
                counts[g] -= 1;
                word.push([X, Y, Z][g]);
                rec(counts, word, out);
                word.pop();
                counts[g] += 1;
            }
        }
    }
    let mut words = Vec::new();
    rec(&mut [a, b, c], &mut Vec::new(), &mut words);
    let w = Scalar::from_ratio(1, words.len() as i64);
    NCPoly::from_terms(words.into_iter().map(|x| (Word(x), w.clone())))
}

/// Symmetrization of a polynomial in `x, y, z` (coefficients may contain
/// other variables, which stay scalar).
pub fn symmetrize(p: &Poly) -> NCPoly {
    let mut out = NCPoly::zero();
    for (m, c) in p.terms() {
        let mut cm = *m;
        let (a, b, d) = (m[Var::X.index()], m[Var::Y.index()], m[Var::Z.index()]);
        cm[Var::X.index()] = 0;
        cm[Var::Y.index()] = 0;
        cm[Var::Z.index()] = 0;
        let coeff = Scalar::from_poly(Poly::monomial(cm, c.clone()));
        out.add_scaled(&symmetrize_monomial(a, b, d), &coeff);
    }
    out
}

/// `α` on a classical polynomial coefficient in `t, x, y, z` and even
/// powers of `r`, with `r̂²` from the given convention.
pub fn alpha_element(u2: &U2Calculus, a: &Scalar, conv: RadiusConvention) -> Result<NCPoly, QuantizeError> {
    let den = a.denom();
    if [Var::T, Var::X, Var::Y, Var::Z, Var::R].iter().any(|&v| den.contains_var(v)) {
        return Err(QuantizeError::NotPolynomial(a.to_string()));
    }
    let inv_den = Scalar::from_poly(den).inv();
    let rhat2 = conv.rhat_squared(u2);
    let mut red = Reducer::new(u2.coordinate_system());
    let mut out = NCPoly::zero();
    for (e_r, pr) in a.numer().coeffs_in(Var::R).iter().enumerate() {
        if pr.is_zero() {
            continue;
        }
        if e_r % 2 == 1 {
            return Err(QuantizeError::OddRadius(a.to_string()));
        }
        for (e_t, pt) in pr.coeffs_in(Var::T).iter().enumerate() {
            for (j, hj) in harmonic_decomposition(pt) {
                let radial = rhat2.pow(j + e_r as u32 / 2);
                let term = NCPoly::letter(T).pow(e_t as u32).mul(&radial).mul(&symmetrize(&hj));
                out.add_scaled(&term, &inv_den);
            }
        }
    }
    Ok(red.nf(&out))
}

/// Rank of `α` on `{tᵃ casᵖ bᵏ : a + 2p + k ≤ max_deg}`, and the size of
/// that set.
pub fn alpha_injectivity(u2: &U2Calculus, max_deg: u32, conv: RadiusConvention) -> (usize, usize) {
    let r = |v| Scalar::var(v);
    let b = &(&-Scalar::i() * &r(Var::X)) - &r(Var::Y);
    let cas = &(&(&r(Var::X) * &r(Var::X)) + &(&r(Var::Y) * &r(Var::Y))) + &(&r(Var::Z) * &r(Var::Z));
    let mut images = Vec::new();
    for a in 0..=max_deg {
        for p in 0..=(max_deg - a) / 2 {
            for k in 0..=max_deg - a - 2 * p {
                let f = &(&r(Var::T).pow(a as i32) * &cas.pow(p as i32)) * &b.pow(k as i32);
                images.push(alpha_element(u2, &f, conv).expect("polynomial input"));
            }
        }
    }
    let mut words: Vec<Word> = images.iter().flat_map(|p| p.terms().map(|(w, _)| w.clone())).collect();
    words.sort();
    words.dedup();
    let m = ScalarMatrix::from_fn(images.len(), words.len(), |i, j| images[i].coeff(&words[j]));
    (m.rank(), images.len())
}
