//! Braidings on `V⊗V`: Yang–Baxter and Hecke checks, the skew-inverse `Ψ`
//! with its traces `B`, `C`, and the extension to `V ⊕ V*`.
//!
//! A braiding is stored as a `d²×d²` matrix with
//! `R[(k,l),(i,j)] = R^{kl}_{ij}`, i.e. `R(x_i⊗x_j) = x_k⊗x_l R^{kl}_{ij}`.
//! The pair `(a,b)` is the row/column index `a·d + b`.

mod mountain;
mod symmetrizer;

pub use mountain::{factor_mountain, mountain_check, reciprocal_check, Factorization, MountainResult};
pub use symmetrizer::{ph_series, q_number, symmetrizer, PHReport, Sign};

use crate::exact::{Scalar, ScalarMatrix};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HeckeError {
    #[error("matrix must be {expected}x{expected}, got {rows}x{cols}")]
    Shape { expected: usize, rows: usize, cols: usize },
    #[error("braiding matrix is not invertible")]
    Singular,
    #[error("Hecke parameter must be nonzero")]
    ZeroQ,
    #[error("q-number ({0})_q vanishes")]
    DegenerateQ(usize),
    #[error("braiding has no Hecke parameter")]
    NoHeckeParameter,
    #[error("braiding is not skew-invertible")]
    NotSkewInvertible,
    #[error("rational reconstruction failed for dimensions {0:?}")]
    Reconstruction(Vec<usize>),
    #[error("symmetrizer order must be at least 1")]
    Order,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Braiding {
    dim: usize,
    matrix: ScalarMatrix,
    hecke_q: Option<Scalar>,
}

impl Braiding {
    pub fn new(dim: usize, matrix: ScalarMatrix, hecke_q: Option<Scalar>) -> Result<Self, HeckeError> {
        let n = dim * dim;
        if matrix.rows() != n || matrix.cols() != n {
            return Err(HeckeError::Shape { expected: n, rows: matrix.rows(), cols: matrix.cols() });
        }
        if matrix.rank() != n {
            return Err(HeckeError::Singular);
        }
        if let Some(q) = &hecke_q {
            if q.is_zero() {
                return Err(HeckeError::ZeroQ);
            }
        }
        Ok(Braiding { dim, matrix, hecke_q })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn matrix(&self) -> &ScalarMatrix {
        &self.matrix
    }

    pub fn hecke_q(&self) -> Option<&Scalar> {
        self.hecke_q.as_ref()
    }

    /// Entry `R^{kl}_{ij}`.
    pub fn entry(&self, k: usize, l: usize, i: usize, j: usize) -> &Scalar {
        let d = self.dim;
        self.matrix.get(k * d + l, i * d + j)
    }

    /// The flip `P(x_i⊗x_j) = x_j⊗x_i`, Hecke with `q = 1`.
    pub fn flip(d: usize) -> Self {
        Braiding { dim: d, matrix: flip_matrix(d), hecke_q: Some(Scalar::one()) }
    }

    /// Super-flip on `V_{m|n}`: the last `n` basis vectors are odd.
    pub fn super_flip(m: usize, n: usize) -> Self {
        let d = m + n;
        let odd = |i: usize| i >= m;
        let matrix = ScalarMatrix::from_fn(d * d, d * d, |r, c| {
            let (k, l) = (r / d, r % d);
            let (i, j) = (c / d, c % d);
            if k == j && l == i {
                if odd(i) && odd(j) {
                    Scalar::from_int(-1)
                } else {
                    Scalar::one()
                }
            } else {
                Scalar::zero()
            }
        });
        Braiding { dim: d, matrix, hecke_q: Some(Scalar::one()) }
    }

    /// Standard Drinfeld–Jimbo braiding of `GL_q(d)` with symbolic `q`:
    /// `x_i⊗x_i ↦ q x_i⊗x_i`, and for `i < j`:
    /// `x_i⊗x_j ↦ x_j⊗x_i`, `x_j⊗x_i ↦ x_i⊗x_j + (q−q⁻¹) x_j⊗x_i`.
    pub fn standard(d: usize) -> Self {
        Braiding::standard_at(d, &Scalar::q())
    }

    /// Standard braiding with `q` replaced by a given value.
    pub fn standard_at(d: usize, q: &Scalar) -> Self {
        let kappa = q - &q.inv();
        let mut m = ScalarMatrix::zeros(d * d, d * d);
        for i in 0..d {
            m.set(i * d + i, i * d + i, q.clone());
            for j in i + 1..d {
                m.set(j * d + i, i * d + j, Scalar::one());
                m.set(i * d + j, j * d + i, Scalar::one());
                m.set(j * d + i, j * d + i, kappa.clone());
            }
        }
        Braiding { dim: d, matrix: m, hecke_q: Some(q.clone()) }
    }

    /// `R = I`: a Hecke symmetry at `q = 1` that is not skew-invertible.
    pub fn identity(d: usize) -> Self {
        Braiding { dim: d, matrix: ScalarMatrix::identity(d * d), hecke_q: Some(Scalar::one()) }
    }

    pub fn with_hecke_q(mut self, q: Option<Scalar>) -> Self {
        self.hecke_q = q;
        self
    }

    pub fn inverse(&self) -> ScalarMatrix {
        self.matrix.inverse().expect("braiding is invertible")
    }

    /// Whether `R² = I`.
    pub fn is_involutive(&self) -> bool {
        self.matrix.mul(&self.matrix) == ScalarMatrix::identity(self.dim * self.dim)
    }
}

pub fn flip_matrix(d: usize) -> ScalarMatrix {
    ScalarMatrix::from_fn(d * d, d * d, |r, c| {
        if r / d == c % d && r % d == c / d {
            Scalar::one()
        } else {
            Scalar::zero()
        }
    })
}

/// `I_{d^pos} ⊗ op ⊗ I_{d^rest}` on `V^{⊗k}`, with `op` acting on `span` factors.
pub fn embed(op: &ScalarMatrix, d: usize, k: usize, pos: usize, span: usize) -> ScalarMatrix {
    assert!(pos + span <= k);
    let left = ScalarMatrix::identity(d.pow(pos as u32));
    let right = ScalarMatrix::identity(d.pow((k - pos - span) as u32));
    left.kron(op).kron(&right)
}

/// `R₁₂R₂₃R₁₂ − R₂₃R₁₂R₂₃` on `V⊗³`.
pub fn check_qybe(r: &Braiding) -> ScalarMatrix {
    qybe_residual(r.matrix(), r.dim())
}

pub fn qybe_residual(r: &ScalarMatrix, d: usize) -> ScalarMatrix {
    let r12 = embed(r, d, 3, 0, 2);
    let r23 = embed(r, d, 3, 1, 2);
    r12.mul(&r23).mul(&r12).sub(&r23.mul(&r12).mul(&r23))
}

/// `(R − qI)(R + q⁻¹I)`.
pub fn check_hecke(r: &Braiding, q: &Scalar) -> Result<ScalarMatrix, HeckeError> {
    if q.is_zero() {
        return Err(HeckeError::ZeroQ);
    }
    let n = r.dim() * r.dim();
    let a = r.matrix().sub(&ScalarMatrix::scalar_identity(n, q));
    let b = r.matrix().add(&ScalarMatrix::scalar_identity(n, &q.inv()));
    Ok(a.mul(&b))
}

/// `Ψ` together with `B = Tr₍₁₎Ψ` and `C = Tr₍₂₎Ψ`.
///
/// `B` and `C` are stored with `B[j][i] = B_i^j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewData {
    pub psi: ScalarMatrix,
    pub b_op: ScalarMatrix,
    pub c_op: ScalarMatrix,
}

/// Solve `Tr₍₂₎R₁₂Ψ₂₃ = P₁₃ = Tr₍₂₎Ψ₁₂R₂₃` for `Ψ`.
pub fn skew_inverse(r: &Braiding) -> Result<SkewData, HeckeError> {
    skew_inverse_of(r.matrix(), r.dim())
}

pub fn skew_inverse_of(r: &ScalarMatrix, d: usize) -> Result<SkewData, HeckeError> {
    let (a, rhs) = skew_system(r, d);
    let x = a.solve(&rhs).ok_or(HeckeError::NotSkewInvertible)?;
    let psi = ScalarMatrix::from_fn(d * d, d * d, |row, col| x.get(row * d * d + col, 0).clone());
    Ok(skew_data_from_psi(psi, d))
}

pub fn skew_data_from_psi(psi: ScalarMatrix, d: usize) -> SkewData {
    let b_op = ScalarMatrix::from_fn(d, d, |j, i| {
        let mut acc = Scalar::zero();
        for k in 0..d {
            acc = &acc + psi.get(k * d + j, k * d + i);
        }
        acc
    });
    let c_op = ScalarMatrix::from_fn(d, d, |j, i| {
        let mut acc = Scalar::zero();
        for k in 0..d {
            acc = &acc + psi.get(j * d + k, i * d + k);
        }
        acc
    });
    SkewData { psi, b_op, c_op }
}

/// Linear system for the entries of `Ψ`, unknown `Ψ[(y,c),(b,c')]` at
/// position `((y·d+c)·d² + b·d+c')`. Rows: both equalities for every
/// `(a, c, a', c')`.
fn skew_system(r: &ScalarMatrix, d: usize) -> (ScalarMatrix, ScalarMatrix) {
    let n2 = d * d;
    let unknowns = n2 * n2;
    let eqs = 2 * n2 * n2;
    let mut a = ScalarMatrix::zeros(eqs, unknowns);
    let mut rhs = ScalarMatrix::zeros(eqs, 1);
    let var = |row: usize, col: usize| row * n2 + col;
    let mut e = 0;
    for aa in 0..d {
        for c in 0..d {
            for ap in 0..d {
                for cp in 0..d {
                    let target = if aa == cp && c == ap { Scalar::one() } else { Scalar::zero() };
                    // Σ_{b,y} R[(a,b),(a',y)] Ψ[(y,c),(b,c')]
                    for b in 0..d {
                        for y in 0..d {
                            let coef = r.get(aa * d + b, ap * d + y);
                            if !coef.is_zero() {
                                let v = var(y * d + c, b * d + cp);
                                let cur = a.get(e, v) + coef;
                                a.set(e, v, cur);
                            }
                        }
                    }
                    rhs.set(e, 0, target.clone());
                    e += 1;
                    // Σ_{b,y} Ψ[(a,b),(a',y)] R[(y,c),(b,c')]
                    for b in 0..d {
                        for y in 0..d {
                            let coef = r.get(y * d + c, b * d + cp);
                            if !coef.is_zero() {
                                let v = var(aa * d + b, ap * d + y);
                                let cur = a.get(e, v) + coef;
                                a.set(e, v, cur);
                            }
                        }
                    }
                    rhs.set(e, 0, target);
                    e += 1;
                }
            }
        }
    }
    (a, rhs)
}

/// Residuals of both skew-inverse equalities for a given `Ψ`.
pub fn skew_residuals(r: &ScalarMatrix, psi: &ScalarMatrix, d: usize) -> (ScalarMatrix, ScalarMatrix) {
    let r12 = embed(r, d, 3, 0, 2);
    let r23 = embed(r, d, 3, 1, 2);
    let p12 = embed(psi, d, 3, 0, 2);
    let p23 = embed(psi, d, 3, 1, 2);
    let p13 = ScalarMatrix::from_fn(d * d, d * d, |row, col| {
        // P₁₃ contracted to the outer factors: (a,c) ← (a',c') with a=c', c=a'
        let (a, c) = (row / d, row % d);
        let (ap, cp) = (col / d, col % d);
        if a == cp && c == ap {
            Scalar::one()
        } else {
            Scalar::zero()
        }
    });
    let lhs1 = partial_trace_middle(&r12.mul(&p23), d);
    let lhs2 = partial_trace_middle(&p12.mul(&r23), d);
    (lhs1.sub(&p13), lhs2.sub(&p13))
}

/// Trace over the second factor of an operator on `V⊗³`.
pub fn partial_trace_middle(m: &ScalarMatrix, d: usize) -> ScalarMatrix {
    ScalarMatrix::from_fn(d * d, d * d, |row, col| {
        let (a, c) = (row / d, row % d);
        let (ap, cp) = (col / d, col % d);
        let mut acc = Scalar::zero();
        for b in 0..d {
            acc = &acc + m.get((a * d + b) * d + c, (ap * d + b) * d + cp);
        }
        acc
    })
}

/// The extension of a skew-invertible braiding to `V ⊕ V*`. Basis vectors
/// `0..d` are `x_i`, `d..2d` are the dual `x^i`.
pub fn extend_braiding(r: &Braiding, s: &SkewData) -> Braiding {
    let d = r.dim();
    let e = 2 * d;
    let rinv = r.inverse();
    let rm = r.matrix();
    let mut m = ScalarMatrix::zeros(e * e, e * e);
    let idx = |a: usize, b: usize| a * e + b;
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                for l in 0..d {
                    // x_i⊗x_j ↦ x_k⊗x_l R^{kl}_{ij}
                    m.set(idx(k, l), idx(i, j), rm.get(k * d + l, i * d + j).clone());
                    // x^i⊗x^j ↦ x^k⊗x^l R^{ji}_{lk}
                    m.set(idx(d + k, d + l), idx(d + i, d + j), rm.get(j * d + i, l * d + k).clone());
                    // x_i⊗x^j ↦ x^k⊗x_l (R⁻¹)^{lj}_{ki}
                    m.set(idx(d + k, l), idx(i, d + j), rinv.get(l * d + j, k * d + i).clone());
                    // x^j⊗x_i ↦ x_k⊗x^l Ψ^{kj}_{li}
                    m.set(idx(k, d + l), idx(d + j, i), s.psi.get(k * d + j, l * d + i).clone());
                }
            }
        }
    }
    Braiding { dim: e, matrix: m, hecke_q: r.hecke_q.clone() }
}

/// Check that `1 ↦ Σ x^i⊗x_i` is invariant under the extended braiding:
/// moving it past any basis vector `w` on either side is trivial.
pub fn pairing_invariance(ext: &Braiding) -> bool {
    let e = ext.dim();
    let d = e / 2;
    let m = ext.matrix();
    let r12 = embed(m, e, 3, 0, 2);
    let r23 = embed(m, e, 3, 1, 2);
    let coupling = |w: usize, left: bool| -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); e * e * e];
        for i in 0..d {
            let pos = if left { (w * e + d + i) * e + i } else { ((d + i) * e + i) * e + w };
            v[pos] = Scalar::one();
        }
        v
    };
    let apply = |op: &ScalarMatrix, v: &[Scalar]| -> Vec<Scalar> {
        (0..op.rows())
            .map(|r| {
                let mut acc = Scalar::zero();
                for (c, x) in v.iter().enumerate() {
                    if !x.is_zero() {
                        let a = op.get(r, c);
                        if !a.is_zero() {
                            acc = &acc + &(a * x);
                        }
                    }
                }
                acc
            })
            .collect()
    };
    let right_to_left = r12.mul(&r23);
    let left_to_right = r23.mul(&r12);
    (0..e).all(|w| {
        apply(&right_to_left, &coupling(w, false)) == coupling(w, true)
            && apply(&left_to_right, &coupling(w, true)) == coupling(w, false)
    })
}

/// Check `Ψ_{R⁻¹} = Ψ + (q−q⁻¹)q^{2(m−n)} C₁B₂` solves the skew-inverse
/// equations for `R⁻¹`, and `B, C` rescale by `q^{2(m−n)}`.
pub fn psi_inverse_check(r: &Braiding, s: &SkewData, birank: (usize, usize)) -> Result<bool, HeckeError> {
    let q = r.hecke_q().ok_or(HeckeError::NoHeckeParameter)?;
    let d = r.dim();
    let kappa = q - &q.inv();
    let factor = q.pow(2 * (birank.0 as i32 - birank.1 as i32));
    let rinv = r.inverse();
    let psi_inv = s.psi.add(&s.c_op.kron(&s.b_op).scale(&(&kappa * &factor)));
    let (e1, e2) = skew_residuals(&rinv, &psi_inv, d);
    if !e1.is_zero() || !e2.is_zero() {
        return Ok(false);
    }
    let data = skew_data_from_psi(psi_inv, d);
    Ok(data.b_op == s.b_op.scale(&factor) && data.c_op == s.c_op.scale(&factor))
}
