use super::OpMatrix;
use crate::exact::ScalarMatrix;
use crate::hecke::embed;

/// `R_j` acting on factors `j, j+1` (1-based) of `V^{⊗total}`.
pub fn r_at(a: &ScalarMatrix, d: usize, j: usize, total: usize) -> ScalarMatrix {
    embed(a, d, total, j - 1, 2)
}

/// The chain `𝓡ₖₚ = R_{p−1}⋯R_{k+1}R_kR_{k+1}⋯R_{p−1}` on `V^{⊗total}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RChain {
    pub k: usize,
    pub p: usize,
    pub op: ScalarMatrix,
}

impl RChain {
    /// Indices may be given in either order.
    pub fn new(a: &ScalarMatrix, d: usize, k: usize, p: usize, total: usize) -> Self {
        let (k, p) = (k.min(p), k.max(p));
        assert!(k >= 1 && k < p && p <= total);
        let mut op = r_at(a, d, k, total);
        for j in k + 1..p {
            let rj = r_at(a, d, j, total);
            op = rj.mul(&op).mul(&rj);
        }
        RChain { k, p, op }
    }

    /// The second form `R_k⋯R_{p−2}R_{p−1}R_{p−2}⋯R_k`.
    pub fn alternative(a: &ScalarMatrix, d: usize, k: usize, p: usize, total: usize) -> ScalarMatrix {
        let (k, p) = (k.min(p), k.max(p));
        let mut op = r_at(a, d, p - 1, total);
        for j in (k..p - 1).rev() {
            let rj = r_at(a, d, j, total);
            op = rj.mul(&op).mul(&rj);
        }
        op
    }

    pub fn definitions_agree(a: &ScalarMatrix, d: usize, k: usize, p: usize, total: usize) -> bool {
        RChain::new(a, d, k, p, total).op == RChain::alternative(a, d, k, p, total)
    }
}

/// `N_k̄ = R_{k−1}⋯R_1 N_1 R_1⁻¹⋯R_{k−1}⁻¹` on `V^{⊗total}`.
pub fn nbar(a: &ScalarMatrix, n: &OpMatrix, d: usize, k: usize, total: usize) -> OpMatrix {
    let a_inv = a.inverse().expect("braiding is invertible");
    let mut out = n.kron_identity(d.pow(total as u32 - 1));
    for j in 1..k {
        out = OpMatrix::scalar_mul(&r_at(a, d, j, total), &out).mul_scalar(&r_at(&a_inv, d, j, total));
    }
    out
}

/// The exchange relations between chains and `N_k̄` for all indices up to
/// `total`, together with the index exchange rules among chains.
pub fn exchange_identities(a: &ScalarMatrix, n: &OpMatrix, d: usize, total: usize) -> bool {
    let nb: Vec<OpMatrix> = (1..=total).map(|k| nbar(a, n, d, k, total)).collect();
    let chain = |i: usize, j: usize| RChain::new(a, d, i, j, total).op;
    for p in 1..=total {
        for k in 1..=total {
            if p == k {
                continue;
            }
            let r = chain(p, k);
            if OpMatrix::scalar_mul(&r, &nb[k - 1]) != nb[p - 1].mul_scalar(&r) {
                return false;
            }
            for s in (1..=total).filter(|&s| s != p && s != k) {
                if OpMatrix::scalar_mul(&r, &nb[s - 1]) != nb[s - 1].mul_scalar(&r) {
                    return false;
                }
                let (rij, rik, rjk) = (chain(p, k), chain(p, s), chain(k, s));
                let lhs = rij.mul(&rik);
                if lhs != rjk.mul(&rij) || lhs != rik.mul(&rjk) {
                    return false;
                }
            }
        }
    }
    true
}
