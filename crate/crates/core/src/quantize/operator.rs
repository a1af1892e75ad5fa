//! Classical differential operators, their quantization, and the span of
//! the invariant operators.

use std::collections::BTreeMap;
use std::fmt;

use super::{alpha_element, QuantizeError, QuantumRadiusFrame, RadiusConvention};
use crate::exact::{Scalar, ScalarMatrix, Var};
use crate::nc::{NCPoly, Word};
use crate::u2::{InvariantOp, OpCombination, U2Calculus, DT, DX, DY, DZ};

/// Exponents of `∂_t, ∂_x, ∂_y, ∂_z`.
pub type MultiIndex = [u32; 4];

const COORDS: [Var; 4] = [Var::T, Var::X, Var::Y, Var::Z];

fn binomial(n: u32, k: u32) -> i64 {
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i + 1) as i64)
}

/// `Σ a_β ∂^β` on Sym(u(2)) with coefficients in `t, x, y, z` (and
/// parameters), derivatives on the right.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ClassicalOperator {
    pub terms: BTreeMap<MultiIndex, Scalar>,
}

impl ClassicalOperator {
    pub fn zero() -> Self {
        ClassicalOperator::default()
    }

    pub fn multiplication(a: Scalar) -> Self {
        let mut o = ClassicalOperator::zero();
        o.add_term([0; 4], a);
        o
    }

    /// `∂_t`, `∂_x`, `∂_y`, `∂_z` for `i = 0..4`.
    pub fn partial(i: usize) -> Self {
        let mut beta = [0; 4];
        beta[i] = 1;
        let mut o = ClassicalOperator::zero();
        o.add_term(beta, Scalar::one());
        o
    }

    pub fn add_term(&mut self, beta: MultiIndex, a: Scalar) {
        let e = self.terms.entry(beta).or_insert_with(Scalar::zero);
        *e = &*e + &a;
        if e.is_zero() {
            self.terms.remove(&beta);
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (b, a) in &o.terms {
            out.add_term(*b, a.clone());
        }
        out
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        let mut out = ClassicalOperator::zero();
        for (b, a) in &self.terms {
            out.add_term(*b, a * s);
        }
        out
    }

    /// `self ∘ o`, reordered with the Leibniz rule.
    pub fn compose(&self, o: &Self) -> Self {
        let mut out = ClassicalOperator::zero();
        for (beta, a) in &self.terms {
            for (gamma, c) in &o.terms {
                for d0 in 0..=beta[0] {
                    for d1 in 0..=beta[1] {
                        for d2 in 0..=beta[2] {
                            for d3 in 0..=beta[3] {
                                let delta = [d0, d1, d2, d3];
                                let mut dc = c.clone();
                                let mut mult = 1i64;
                                for i in 0..4 {
                                    for _ in 0..delta[i] {
                                        dc = dc.derivative(COORDS[i]);
                                    }
                                    mult *= binomial(beta[i], delta[i]);
                                }
                                if dc.is_zero() {
                                    continue;
                                }
                                let idx = std::array::from_fn(|i| beta[i] - delta[i] + gamma[i]);
                                out.add_term(idx, &(a * &dc) * &Scalar::from_int(mult));
                            }
                        }
                    }
                }
            }
        }
        out
    }

    /// Act on a function of `t, x, y, z`.
    pub fn apply(&self, f: &Scalar) -> Scalar {
        let mut out = Scalar::zero();
        for (beta, a) in &self.terms {
            let mut g = f.clone();
            for i in 0..4 {
                for _ in 0..beta[i] {
                    g = g.derivative(COORDS[i]);
                }
            }
            out = &out + &(a * &g);
        }
        out
    }

    pub fn q() -> Self {
        (1..4).fold(ClassicalOperator::zero(), |acc, i| {
            acc.add(&ClassicalOperator::multiplication(Scalar::var(COORDS[i])).compose(&ClassicalOperator::partial(i)))
        })
    }

    pub fn laplacian() -> Self {
        (1..4).fold(ClassicalOperator::zero(), |acc, i| {
            acc.add(&ClassicalOperator::partial(i).compose(&ClassicalOperator::partial(i)))
        })
    }
}

/// Rotation-invariant operators out of which the Laplace–Beltrami
/// operators are assembled. Classical and quantum versions share names.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum InvariantBasis {
    Identity,
    Dt,
    Dt2,
    Q,
    Q2,
    QDt,
    Delta,
}

impl InvariantBasis {
    pub const ALL: [InvariantBasis; 7] = [
        InvariantBasis::Identity,
        InvariantBasis::Dt,
        InvariantBasis::Dt2,
        InvariantBasis::Q,
        InvariantBasis::Q2,
        InvariantBasis::QDt,
        InvariantBasis::Delta,
    ];

    pub fn name(self) -> &'static str {
        match self {
            InvariantBasis::Identity => "1",
            InvariantBasis::Dt => "d_t",
            InvariantBasis::Dt2 => "d_t^2",
            InvariantBasis::Q => "Q",
            InvariantBasis::Q2 => "Q^2",
            InvariantBasis::QDt => "Q*d_t",
            InvariantBasis::Delta => "Delta",
        }
    }

    pub fn classical(self) -> ClassicalOperator {
        let dt = ClassicalOperator::partial(0);
        let q = ClassicalOperator::q();
        match self {
            InvariantBasis::Identity => ClassicalOperator::multiplication(Scalar::one()),
            InvariantBasis::Dt => dt,
            InvariantBasis::Dt2 => dt.compose(&dt),
            InvariantBasis::Q => q,
            InvariantBasis::Q2 => q.compose(&q),
            InvariantBasis::QDt => q.compose(&dt),
            InvariantBasis::Delta => ClassicalOperator::laplacian(),
        }
    }

    /// The quantum operator in the Weyl algebra of U(u(2)_ℏ).
    pub fn quantum(self, u2: &U2Calculus) -> NCPoly {
        let dt = u2.dt();
        let q = u2.q();
        match self {
            InvariantBasis::Identity => NCPoly::one(),
            InvariantBasis::Dt => dt,
            InvariantBasis::Dt2 => dt.mul(&dt),
            InvariantBasis::Q => q,
            InvariantBasis::Q2 => q.mul(&q),
            InvariantBasis::QDt => q.mul(&dt),
            InvariantBasis::Delta => u2.laplacian(),
        }
    }

    /// Expansion over `1, ∂̃_t, Q, Δ₀, …, Δ₃`.
    pub fn combination(self) -> OpCombination {
        let two_h = &Scalar::from_int(2) / &Scalar::h();
        let one = Scalar::one;
        match self {
            InvariantBasis::Identity => vec![(one(), InvariantOp::Identity)],
            InvariantBasis::Dt => vec![(one(), InvariantOp::DtTilde), (-&two_h, InvariantOp::Identity)],
            InvariantBasis::Dt2 => vec![
                (one(), InvariantOp::Delta(0)),
                (&-&two_h * &Scalar::from_int(2), InvariantOp::DtTilde),
                (&two_h * &two_h, InvariantOp::Identity),
            ],
            InvariantBasis::Q => vec![(one(), InvariantOp::Q)],
            InvariantBasis::Q2 => vec![(one(), InvariantOp::Delta(3))],
            InvariantBasis::QDt => vec![(one(), InvariantOp::Delta(2)), (-two_h, InvariantOp::Q)],
            InvariantBasis::Delta => vec![(one(), InvariantOp::Delta(1))],
        }
    }
}

/// `Σ cⱼ·opⱼ` over [`InvariantBasis`]. Classical coefficients are
/// functions of `t, r`; quantum ones of `t, μ`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct InvariantOperator {
    pub terms: BTreeMap<InvariantBasis, Scalar>,
}

impl InvariantOperator {
    pub fn add_term(&mut self, b: InvariantBasis, c: Scalar) {
        let e = self.terms.entry(b).or_insert_with(Scalar::zero);
        *e = &*e + &c;
        if e.is_zero() {
            self.terms.remove(&b);
        }
    }

    pub fn coeff(&self, b: InvariantBasis) -> Scalar {
        self.terms.get(&b).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Expansion over `1, ∂̃_t, Q, Δ₀, …, Δ₃`, for the difference form.
    pub fn combination(&self) -> OpCombination {
        let mut merged: BTreeMap<InvariantOp, Scalar> = BTreeMap::new();
        for (b, c) in &self.terms {
            for (s, op) in b.combination() {
                let e = merged.entry(op).or_insert_with(Scalar::zero);
                *e = &*e + &(c * &s);
            }
        }
        merged.into_iter().filter(|(_, c)| !c.is_zero()).map(|(op, c)| (c, op)).collect()
    }

    pub fn map_coeffs(&self, f: impl Fn(&Scalar) -> Scalar) -> Self {
        let mut out = InvariantOperator::default();
        for (b, c) in &self.terms {
            out.add_term(*b, f(c));
        }
        out
    }

    /// Coefficients rewritten in `r̂` and `h`.
    pub fn display_form(&self) -> Self {
        self.map_coeffs(QuantumRadiusFrame::to_display)
    }
}

impl fmt::Display for InvariantOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (n, (b, c)) in self.terms.iter().enumerate() {
            if n > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c})*{}", b.name())?;
        }
        Ok(())
    }
}

fn hat_partial(u2: &U2Calculus, i: usize) -> NCPoly {
    match i {
        0 => u2.dt(),
        _ => NCPoly::letter([DT, DX, DY, DZ][i]),
    }
}

/// `α(Σ a_β ∂^β) = Σ α(a_β)·∂̂^β`.
pub fn alpha_operator(u2: &U2Calculus, op: &ClassicalOperator, conv: RadiusConvention) -> Result<NCPoly, QuantizeError> {
    let mut red = u2.reducer();
    let mut out = NCPoly::zero();
    for (beta, a) in &op.terms {
        let mut d = NCPoly::one();
        for (i, &e) in beta.iter().enumerate() {
            d = d.mul(&hat_partial(u2, i).pow(e));
        }
        out.add_assign(&alpha_element(u2, a, conv)?.mul(&d));
    }
    Ok(red.nf(&out))
}

/// Coefficients of an element of the Weyl algebra over the quantum
/// [`InvariantBasis`], when it lies in their span over scalars.
pub fn decompose_invariant(u2: &U2Calculus, p: &NCPoly) -> Result<InvariantOperator, QuantizeError> {
    let mut red = u2.reducer();
    let basis: Vec<NCPoly> = InvariantBasis::ALL.iter().map(|b| red.nf(&b.quantum(u2))).collect();
    let target = red.nf(p);
    let mut words: Vec<Word> = basis.iter().chain([&target]).flat_map(|x| x.terms().map(|(w, _)| w.clone())).collect();
    words.sort();
    words.dedup();
    let a = ScalarMatrix::from_fn(words.len(), basis.len(), |i, j| basis[j].coeff(&words[i]));
    let b = ScalarMatrix::from_fn(words.len(), 1, |i, _| target.coeff(&words[i]));
    let x = a.solve(&b).ok_or(QuantizeError::OutsideInvariantSpan)?;
    let mut out = InvariantOperator::default();
    for (j, &bj) in InvariantBasis::ALL.iter().enumerate() {
        out.add_term(bj, x.get(j, 0).clone());
    }
    Ok(out)
}

/// Quantize a classical invariant operator. Coefficients `c(t, r)` become
/// `c(t, r̂)` with `r̂ = μ/(2i)`; each basis operator is quantized through
/// [`alpha_operator`] and re-expanded over the quantum basis.
pub fn alpha_invariant(
    u2: &U2Calculus,
    op: &InvariantOperator,
    conv: RadiusConvention,
) -> Result<InvariantOperator, QuantizeError> {
    let mut out = InvariantOperator::default();
    for (b, c) in &op.terms {
        let cq = c.subs(Var::R, &QuantumRadiusFrame::rhat());
        let image = decompose_invariant(u2, &alpha_operator(u2, &b.classical(), conv)?)?;
        for (bq, s) in image.terms {
            out.add_term(bq, &cq * &s);
        }
    }
    Ok(out)
}

/// Outcome of testing `α(Q²) = Q̂² + (ℏ²/12)Δ̂ − (ℏ/2)Q̂∂̂_t` under one
/// convention.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlphaQ2Check {
    pub convention: RadiusConvention,
    /// Equality in the Weyl algebra.
    pub as_element: bool,
    /// Equality of the actions on all PBW monomials up to the degree bound.
    pub on_oracle: bool,
    /// `α(Q²)` over the quantum invariant basis.
    pub image: InvariantOperator,
}

impl AlphaQ2Check {
    pub fn holds(&self) -> bool {
        self.as_element && self.on_oracle
    }
}

pub fn alpha_q2_check(u2: &U2Calculus, conv: RadiusConvention, max_deg: usize) -> Result<AlphaQ2Check, QuantizeError> {
    let q = ClassicalOperator::q();
    let lhs = alpha_operator(u2, &q.compose(&q), conv)?;
    let h = Scalar::h();
    let rhs = u2
        .q()
        .pow(2)
        .add(&u2.laplacian().scale(&(&(&h * &h) * &Scalar::from_ratio(1, 12))))
        .sub(&u2.q().mul(&u2.dt()).scale(&(&h * &Scalar::from_ratio(1, 2))));
    let mut red = u2.reducer();
    let rhs = red.nf(&rhs);
    let on_oracle =
        u2.pbw_monomials(max_deg).iter().all(|m| u2.act_with(&mut red, &lhs, m) == u2.act_with(&mut red, &rhs, m));
    Ok(AlphaQ2Check { convention: conv, as_element: lhs == rhs, on_oracle, image: decompose_invariant(u2, &lhs)? })
}
