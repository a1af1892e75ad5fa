//! Reflection equation, modified reflection equation and braided Weyl
//! algebras built from a skew-invertible Hecke symmetry.
//!
//! Matrix equations are written with the lower index as the row: the
//! generating matrix is `L[i][j] = l_i^j` and the braiding enters as
//! `R[(i,j),(k,l)] = R_{ij}^{kl}`, the transpose of [`Braiding::matrix`].

mod chain;
pub mod leibniz;
mod opmatrix;

pub use chain::{exchange_identities, nbar, r_at, RChain};
pub use opmatrix::OpMatrix;

use std::collections::HashMap;
use std::sync::Arc;

use crate::exact::{Scalar, ScalarMatrix, Var};
use crate::hecke::{skew_inverse, Braiding, HeckeError, SkewData};
use crate::nc::{
    counit, Alphabet, ConfluenceResult, Letter, LetterKind, NCPoly, NcError, Reducer, RewriteSystem,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ReError {
    #[error(transparent)]
    Hecke(#[from] HeckeError),
    #[error(transparent)]
    Nc(#[from] NcError),
    #[error("rewriting system is not confluent at {word}: {difference}")]
    NotConfluent { word: String, difference: String },
    #[error("the closed-form Leibniz rule needs an involutive braiding")]
    NotInvolutive,
    #[error("braided trace of the identity vanishes; the traceless part is undefined")]
    ZeroTrace,
}

/// The braiding as it appears in matrix equations.
pub fn equation_matrix(r: &Braiding) -> ScalarMatrix {
    r.matrix().transpose()
}

/// `C` as a matrix with `C[i][j] = C_i^j`.
pub fn c_matrix(s: &SkewData) -> ScalarMatrix {
    s.c_op.transpose()
}

/// Position of the entry `(i,j)` among the `m²` generators of one matrix:
/// diagonal entries first, then the off-diagonal ones row by row. With
/// this order the standard reflection equation relations have a PBW basis.
pub fn entry_index(m: usize, i: usize, j: usize) -> usize {
    if i == j {
        i
    } else {
        m + i * (m - 1) + if j < i { j } else { j - 1 }
    }
}

/// Inverse of [`entry_index`].
pub fn entry_at(m: usize, k: usize) -> (usize, usize) {
    if k < m {
        return (k, k);
    }
    let (i, r) = ((k - m) / (m - 1), (k - m) % (m - 1));
    (i, if r < i { r } else { r + 1 })
}

/// Generating matrix whose entry `(i,j)` is the letter `offset + entry_index(i,j)`.
pub fn generator_matrix(m: usize, offset: usize) -> OpMatrix {
    OpMatrix::from_fn(m, |i, j| NCPoly::letter((offset + entry_index(m, i, j)) as Letter))
}

fn generator_names(symbol: &str, m: usize, kind: LetterKind) -> Vec<(String, LetterKind)> {
    (0..m * m)
        .map(|k| {
            let (i, j) = entry_at(m, k);
            (format!("{symbol}_{}^{}", i + 1, j + 1), kind)
        })
        .collect()
}

fn entries(m: &OpMatrix) -> Vec<NCPoly> {
    m.entries().filter(|(_, _, p)| !p.is_zero()).map(|(_, _, p)| p.clone()).collect()
}

/// `A L₁ A L₁ − L₁ A L₁ A`.
fn re_matrix(a: &ScalarMatrix, l1: &OpMatrix) -> OpMatrix {
    let left = OpMatrix::scalar_mul(a, l1).mul_scalar(a).mul(l1);
    let right = l1.mul_scalar(a).mul(l1).mul_scalar(a);
    left.sub(&right)
}

/// `R L₁ R L₁ − L₁ R L₁ R − ℏ(R L₁ − L₁ R)`.
fn mre_matrix(a: &ScalarMatrix, l1: &OpMatrix) -> OpMatrix {
    let lin = OpMatrix::scalar_mul(a, l1).sub(&l1.mul_scalar(a));
    re_matrix(a, l1).sub(&lin.scale(&Scalar::h()))
}

fn certify(rs: &RewriteSystem) -> Result<(), ReError> {
    match rs.certify_confluence() {
        ConfluenceResult::Pass => Ok(()),
        ConfluenceResult::Fail { word, difference } => Err(ReError::NotConfluent { word, difference }),
    }
}

/// Which quadratic algebra on a single generating matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReKind {
    /// `RL₁RL₁ = L₁RL₁R`.
    Plain,
    /// `RL₁RL₁ − L₁RL₁R = ℏ(RL₁ − L₁R)`.
    Modified,
}

#[derive(Clone, Debug)]
pub struct REPresentation {
    pub braiding: Braiding,
    pub skew: SkewData,
    pub kind: ReKind,
    pub alphabet: Arc<Alphabet>,
    /// Expanded matrix equation, one entry per nonzero relation.
    pub relations: Vec<NCPoly>,
    pub system: RewriteSystem,
}

/// Reflection equation algebra with generators `l_i^j`.
pub fn build_re(r: &Braiding) -> Result<REPresentation, ReError> {
    build_single(r, ReKind::Plain, "l")
}

/// Modified reflection equation algebra with generators `n_i^j`.
pub fn build_mre(r: &Braiding) -> Result<REPresentation, ReError> {
    build_single(r, ReKind::Modified, "n")
}

fn build_single(r: &Braiding, kind: ReKind, symbol: &str) -> Result<REPresentation, ReError> {
    let skew = skew_inverse(r)?;
    let m = r.dim();
    let alphabet = Arc::new(Alphabet::new(generator_names(symbol, m, LetterKind::Coordinate)));
    let a = equation_matrix(r);
    let l1 = generator_matrix(m, 0).kron_identity(m);
    let rel = match kind {
        ReKind::Plain => re_matrix(&a, &l1),
        ReKind::Modified => mre_matrix(&a, &l1),
    };
    let relations = entries(&rel);
    let system = RewriteSystem::from_relations(alphabet.clone(), &relations)?;
    Ok(REPresentation { braiding: r.clone(), skew, kind, alphabet, relations, system })
}

impl REPresentation {
    pub fn dim(&self) -> usize {
        self.braiding.dim()
    }

    pub fn generators(&self) -> OpMatrix {
        generator_matrix(self.dim(), 0)
    }

    /// Number of independent relations.
    pub fn rank(&self) -> usize {
        self.system.rules().len()
    }

    pub fn certify(&self) -> Result<(), ReError> {
        self.system.check_complete()?;
        certify(&self.system)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ShiftSign {
    /// `L = ℏI − (q−q⁻¹)L̃`.
    Minus,
    /// `L = ℏI + (q−q⁻¹)L̃`.
    Plus,
}

/// Substitute the shift into the reflection equation and compare, in the
/// free algebra, with `(q−q⁻¹)²` times the modified relation in `L̃`.
pub fn modified_re_shift_check(re: &REPresentation, sign: ShiftSign) -> bool {
    let Some(q) = re.braiding.hecke_q() else {
        return false;
    };
    let kappa = q - &q.inv();
    let m = re.dim();
    let a = equation_matrix(&re.braiding);
    let lt1 = generator_matrix(m, 0).kron_identity(m);
    let coef = match sign {
        ShiftSign::Minus => -&kappa,
        ShiftSign::Plus => kappa.clone(),
    };
    let l1 = OpMatrix::from_scalar(&ScalarMatrix::scalar_identity(m * m, &Scalar::h())).add(&lt1.scale(&coef));
    let lhs = re_matrix(&a, &l1);
    let rhs = mre_matrix(&a, &lt1).scale(&(&kappa * &kappa));
    lhs == rhs
}

/// Whether the span of the modified relations equals the span of
/// `[n_i^j, n_k^l] − ℏ(δ_k^j n_i^l − δ_i^l n_k^j)`.
pub fn matches_ugl(re: &REPresentation) -> bool {
    let m = re.dim();
    let ugl = RewriteSystem::from_relations(re.alphabet.clone(), &ugl_relations(m));
    match ugl {
        Ok(u) => u.rules() == re.system.rules(),
        Err(_) => false,
    }
}

/// Defining relations of `U(gl(m)_ℏ)` on the letters of [`generator_matrix`].
pub fn ugl_relations(m: usize) -> Vec<NCPoly> {
    let n = |i: usize, j: usize| NCPoly::letter(entry_index(m, i, j) as Letter);
    let h = Scalar::h();
    let mut out = Vec::new();
    for i in 0..m {
        for j in 0..m {
            for k in 0..m {
                for l in 0..m {
                    let mut rel = n(i, j).commutator(&n(k, l));
                    if k == j {
                        rel = rel.sub(&n(i, l).scale(&h));
                    }
                    if i == l {
                        rel = rel.add(&n(k, j).scale(&h));
                    }
                    if !rel.is_zero() {
                        out.push(rel);
                    }
                }
            }
        }
    }
    out
}

/// `U(gl(m)_ℏ)` as a rewriting system on letters `n_i^j`.
pub fn ugl(m: usize) -> Result<RewriteSystem, ReError> {
    let alphabet = Arc::new(Alphabet::new(generator_names("n", m, LetterKind::Coordinate)));
    let rs = RewriteSystem::from_relations(alphabet, &ugl_relations(m))?;
    rs.check_complete()?;
    Ok(rs)
}

/// Braided Weyl algebra on letters `n_i^j` (coordinates) followed by
/// `d_i^j` (derivatives), with `ε(d_i^j) = 0`.
#[derive(Clone, Debug)]
pub struct WeylPresentation {
    pub braiding: Braiding,
    pub skew: SkewData,
    pub alphabet: Arc<Alphabet>,
    /// Coordinate relations, derivative relations, permutation relations.
    pub relations: [Vec<NCPoly>; 3],
    pub system: RewriteSystem,
}

pub fn build_weyl(r: &Braiding) -> Result<WeylPresentation, ReError> {
    let skew = skew_inverse(r)?;
    let m = r.dim();
    let mut names = generator_names("n", m, LetterKind::Coordinate);
    names.extend(generator_names("d", m, LetterKind::Derivative));
    let alphabet = Arc::new(Alphabet::new(names));
    let a = equation_matrix(r);
    let a_inv = a.inverse().expect("braiding is invertible");
    let n1 = generator_matrix(m, 0).kron_identity(m);
    let d1 = generator_matrix(m, m * m).kron_identity(m);

    let coord = entries(&mre_matrix(&a, &n1));
    let deriv = entries(&re_matrix(&a_inv, &d1));
    let rnr = OpMatrix::scalar_mul(&a, &n1).mul_scalar(&a);
    let rnri = OpMatrix::scalar_mul(&a, &n1).mul_scalar(&a_inv);
    let perm = d1
        .mul(&rnr)
        .sub(&rnri.mul(&d1))
        .sub(&OpMatrix::from_scalar(&a))
        .sub(&d1.mul_scalar(&a).scale(&Scalar::h()));
    let perm = entries(&perm);

    let mut all = coord.clone();
    all.extend(deriv.iter().cloned());
    all.extend(perm.iter().cloned());
    let system = RewriteSystem::from_relations(alphabet.clone(), &all)?;
    system.check_complete()?;
    certify(&system)?;
    Ok(WeylPresentation { braiding: r.clone(), skew, alphabet, relations: [coord, deriv, perm], system })
}

impl WeylPresentation {
    pub fn dim(&self) -> usize {
        self.braiding.dim()
    }

    pub fn n_letter(&self, i: usize, j: usize) -> Letter {
        entry_index(self.dim(), i, j) as Letter
    }

    pub fn d_letter(&self, i: usize, j: usize) -> Letter {
        let m = self.dim();
        (m * m + entry_index(m, i, j)) as Letter
    }

    pub fn n_matrix(&self) -> OpMatrix {
        generator_matrix(self.dim(), 0)
    }

    pub fn d_matrix(&self) -> OpMatrix {
        let m = self.dim();
        generator_matrix(m, m * m)
    }

    /// `D̃ = ℏ⁻¹I + D`.
    pub fn d_tilde(&self) -> OpMatrix {
        let m = self.dim();
        OpMatrix::from_scalar(&ScalarMatrix::scalar_identity(m, &Scalar::h().inv())).add(&self.d_matrix())
    }

    pub fn reducer(&self) -> Reducer<'_> {
        Reducer::new(&self.system)
    }

    /// `dpoly ▷ npoly` using an existing reducer.
    pub fn act_with(&self, red: &mut Reducer<'_>, dpoly: &NCPoly, npoly: &NCPoly) -> NCPoly {
        let nf = red.nf(&dpoly.mul(npoly));
        counit(&self.alphabet, &nf, &HashMap::new())
    }
}

/// Ground-truth action: normal-order `dword · npoly` and apply the counit.
pub fn act_weyl_oracle(w: &WeylPresentation, dword: &NCPoly, npoly: &NCPoly) -> NCPoly {
    w.act_with(&mut w.reducer(), dword, npoly)
}

/// `D̃₁N_k̄ − N_k̄D̃₁ − ℏD̃₁𝓡₁ₖ` on `V^{⊗k}` is zero in normal form, for
/// every `2 ≤ k ≤ kmax`.
pub fn d_tilde_exchange_check(w: &WeylPresentation, kmax: usize) -> bool {
    let m = w.dim();
    let a = equation_matrix(&w.braiding);
    let mut red = w.reducer();
    (2..=kmax).all(|k| {
        let dt = w.d_tilde().kron_identity(m.pow(k as u32 - 1));
        let nb = nbar(&a, &w.n_matrix(), m, k, k);
        let chain = RChain::new(&a, m, 1, k, k);
        let lhs = dt.mul(&nb);
        let rhs = nb.mul(&dt).add(&dt.mul_scalar(&chain.op).scale(&Scalar::h()));
        lhs.sub(&rhs).normal_form(&mut red).is_zero()
    })
}

/// `Tr(C·Mᵏ)`.
pub fn braided_trace(s: &SkewData, m: &OpMatrix, k: u32) -> NCPoly {
    OpMatrix::scalar_mul(&c_matrix(s), &m.pow(k)).trace()
}

/// `M − (Tr_R M / Tr_R I)·I`.
pub fn traceless_part(s: &SkewData, m: &OpMatrix) -> Result<OpMatrix, ReError> {
    let tr_i = c_matrix(s).trace();
    if tr_i.is_zero() {
        return Err(ReError::ZeroTrace);
    }
    let t = braided_trace(s, m, 1).scale(&tr_i.inv());
    let n = m.size();
    let shift = OpMatrix::from_fn(n, |i, j| if i == j { t.clone() } else { NCPoly::zero() });
    Ok(m.sub(&shift))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CentralityResult {
    Pass,
    /// A generator and the normal form of its commutator with the element.
    Fail { generator: String, commutator: String },
}

impl CentralityResult {
    pub fn passed(&self) -> bool {
        matches!(self, CentralityResult::Pass)
    }
}

/// Commutators of `element` with every generator, in normal form.
pub fn centrality_check(rs: &RewriteSystem, element: &NCPoly) -> CentralityResult {
    let mut red = Reducer::new(rs);
    let e = red.nf(element);
    for g in rs.alphabet().letters() {
        let x = NCPoly::letter(g);
        let c = red.nf(&x.mul(&e)).sub(&red.nf(&e.mul(&x)));
        if !c.is_zero() {
            return CentralityResult::Fail {
                generator: rs.alphabet().name(g).to_string(),
                commutator: c.display(rs.alphabet()).to_string(),
            };
        }
    }
    CentralityResult::Pass
}

/// Experiment: apply `Tr_R D^k` to `Tr_R N^j` and test whether the result
/// is central in the coordinate subalgebra.
pub fn laplace_center_experiment(w: &WeylPresentation, k: u32, j: u32) -> CentralityResult {
    let lap = braided_trace(&w.skew, &w.d_matrix(), k);
    let z = braided_trace(&w.skew, &w.n_matrix(), j);
    let mut red = w.reducer();
    let image = w.act_with(&mut red, &lap, &z);
    centrality_check(&coordinate_system(w), &image)
}

/// The coordinate subalgebra as its own rewriting system.
pub fn coordinate_system(w: &WeylPresentation) -> RewriteSystem {
    let m = w.dim();
    let alphabet = Arc::new(Alphabet::new(generator_names("n", m, LetterKind::Coordinate)));
    RewriteSystem::from_relations(alphabet, &w.relations[0]).expect("coordinate relations are quadratic-linear")
}

/// `ℏ = 0` specialization of a polynomial.
pub fn classical_limit(p: &NCPoly) -> NCPoly {
    p.subs(Var::H, &Scalar::zero())
}
