//! Action of derivatives on coordinate monomials for involutive braidings.
//!
//! Four evaluators of `d_i^j ▷ n_{i_1}^{j_1}⋯n_{i_p}^{j_p}` at `R = P`:
//! the normal-ordering oracle, the cycle-operator closed form, the
//! step-by-step `∘`-product form and the coproduct recursion. Monomials are
//! lists of 0-based index pairs.

use super::{entry_index, equation_matrix, nbar, OpMatrix, ReError, RChain, WeylPresentation};
use crate::exact::{Scalar, ScalarMatrix, Var};
use crate::exec::{self, ExecMode};
use crate::nc::{Letter, NCPoly, Reducer, Word};

pub type Index = (usize, usize);
pub type Monomial = Vec<Index>;

fn n_letter(m: usize, (i, j): Index) -> Letter {
    entry_index(m, i, j) as Letter
}

pub fn monomial_poly(m: usize, mono: &[Index]) -> NCPoly {
    NCPoly::word(Word(mono.iter().map(|&x| n_letter(m, x)).collect()))
}

fn delta(a: usize, b: usize) -> bool {
    a == b
}

/// `d_i^j ▷ n_k^l = δ_i^l δ_k^j`.
fn pairing((i, j): Index, (k, l): Index) -> bool {
    delta(i, l) && delta(k, j)
}

/// Oracle value, via the Weyl presentation.
pub fn oracle_action(w: &WeylPresentation, red: &mut Reducer<'_>, d: Index, mono: &[Index]) -> NCPoly {
    let dp = NCPoly::letter(w.d_letter(d.0, d.1));
    w.act_with(red, &dp, &monomial_poly(w.dim(), mono))
}

/// Entry of the cycle-operator formula
/// `Σ_s ℏ^{s−1} Σ_{k_1<⋯<k_s} (N_2⋯N_p without N_{k_r}) 𝓡_{1k_1}𝓡_{k_1k_2}⋯`
/// for `R = P`, read off on the index tuples `(i, i_2, …)`, `(j, j_2, …)`.
/// Returned in the free algebra.
pub fn closed_form_action(m: usize, (i, j): Index, mono: &[Index]) -> NCPoly {
    let p = mono.len() + 1;
    let upper: Vec<usize> = std::iter::once(j).chain(mono.iter().map(|x| x.1)).collect();
    let lower: Vec<usize> = std::iter::once(i).chain(mono.iter().map(|x| x.0)).collect();
    let mut out = NCPoly::zero();
    for mask in 1u32..(1 << (p - 1)) {
        let ks: Vec<usize> = (1..p).filter(|t| mask & (1 << (t - 1)) != 0).collect();
        // A = σ⁻¹(J): undo the transpositions (1 k_1), (k_1 k_2), … in reverse
        let mut a = upper.clone();
        let mut prev: Vec<usize> = std::iter::once(0).chain(ks.iter().copied()).collect();
        while prev.len() >= 2 {
            let y = prev.pop().unwrap();
            let x = *prev.last().unwrap();
            a.swap(x, y);
        }
        if a[0] != lower[0] || ks.iter().any(|&t| a[t] != lower[t]) {
            continue;
        }
        let word: Vec<Letter> =
            (1..p).filter(|t| !ks.contains(t)).map(|t| n_letter(m, (lower[t], a[t]))).collect();
        out.add_term(Word(word), &Scalar::h().pow(ks.len() as i32 - 1));
    }
    out
}

/// `n_i^j ∘ n_k^l = ℏ δ_k^j n_i^l`, on single generators.
pub fn circ(a: Index, b: Index) -> Option<(Index, u32)> {
    delta(b.0, a.1).then_some(((a.0, b.1), 1))
}

/// Step-by-step evaluator: for each nonempty ordered selection of factors,
/// fold them with `∘`, pair the result with `d_i^j` and keep the remaining
/// factors in place.
pub fn circ_action(m: usize, d: Index, mono: &[Index]) -> NCPoly {
    let p = mono.len();
    let mut out = NCPoly::zero();
    for mask in 1u32..(1 << p) {
        let sel: Vec<usize> = (0..p).filter(|t| mask & (1 << t) != 0).collect();
        let mut acc = Some((mono[sel[0]], 0u32));
        for &t in &sel[1..] {
            acc = acc.and_then(|(x, e)| circ(x, mono[t]).map(|(y, f)| (y, e + f)));
        }
        let Some((x, e)) = acc else { continue };
        if !pairing(d, x) {
            continue;
        }
        let word: Vec<Letter> = (0..p).filter(|t| !sel.contains(t)).map(|t| n_letter(m, mono[t])).collect();
        out.add_term(Word(word), &Scalar::h().pow(e as i32));
    }
    out
}

/// Recursion on `Δ(d_i^j) = d_i^j⊗1 + 1⊗d_i^j + ℏ d_k^j⊗d_i^k`.
pub fn coproduct_action(m: usize, (i, j): Index, mono: &[Index]) -> NCPoly {
    let Some((&first, rest)) = mono.split_first() else {
        return NCPoly::zero();
    };
    let mut out = NCPoly::zero();
    if pairing((i, j), first) {
        out.add_assign(&monomial_poly(m, rest));
    }
    let head = monomial_poly(m, &[first]);
    out.add_assign(&head.mul(&coproduct_action(m, (i, j), rest)));
    for k in 0..m {
        if pairing((k, j), first) {
            out.add_scaled(&coproduct_action(m, (i, k), rest), &Scalar::h());
        }
    }
    out
}

/// `∂/∂n_j^i` on the commutative image, with sorted words.
pub fn classical_action(m: usize, (i, j): Index, mono: &[Index]) -> NCPoly {
    let mut out = NCPoly::zero();
    for (t, &x) in mono.iter().enumerate() {
        if x == (j, i) {
            let mut w: Vec<Letter> = mono.iter().enumerate().filter(|&(s, _)| s != t).map(|(_, &y)| n_letter(m, y)).collect();
            w.sort();
            out.add_term(Word(w), &Scalar::one());
        }
    }
    out
}

/// Outcome of comparing the evaluators on one derivative and monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comparison {
    pub derivative: Index,
    pub monomial: Monomial,
    pub closed_form: bool,
    pub circ: bool,
    pub coproduct: bool,
    pub classical: bool,
}

impl Comparison {
    pub fn all(&self) -> bool {
        self.closed_form && self.circ && self.coproduct && self.classical
    }
}

pub fn compare(w: &WeylPresentation, red: &mut Reducer<'_>, d: Index, mono: &[Index]) -> Comparison {
    let m = w.dim();
    let oracle = oracle_action(w, red, d, mono);
    let closed = red.nf(&closed_form_action(m, d, mono));
    let circ = red.nf(&circ_action(m, d, mono));
    let cop = red.nf(&coproduct_action(m, d, mono));
    let classical = oracle.subs(Var::H, &Scalar::zero()) == classical_action(m, d, mono);
    Comparison {
        derivative: d,
        monomial: mono.to_vec(),
        closed_form: closed == oracle,
        circ: circ == oracle,
        coproduct: cop == oracle,
        classical,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepReport {
    pub checked: usize,
    pub failures: Vec<Comparison>,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Compare all evaluators for every derivative on every monomial.
pub fn sweep(w: &WeylPresentation, monomials: &[Monomial], mode: ExecMode) -> Result<SweepReport, ReError> {
    if !w.braiding.is_involutive() {
        return Err(ReError::NotInvolutive);
    }
    let m = w.dim();
    let ders: Vec<Index> = (0..m).flat_map(|i| (0..m).map(move |j| (i, j))).collect();
    let per = exec::map_with(mode, monomials, || w.reducer(), |red, mono| {
        ders.iter().map(|&d| compare(w, red, d, mono)).filter(|c| !c.all()).collect::<Vec<_>>()
    });
    Ok(SweepReport { checked: monomials.len() * ders.len(), failures: per.into_iter().flatten().collect() })
}

/// All monomials of degree `deg` in `m²` generators.
pub fn all_monomials(m: usize, deg: usize) -> Vec<Monomial> {
    let gens: Vec<Index> = (0..m).flat_map(|i| (0..m).map(move |j| (i, j))).collect();
    let mut out = vec![Vec::new()];
    for _ in 0..deg {
        out = out.into_iter().flat_map(|w| gens.iter().map(move |&g| {
            let mut v = w.clone();
            v.push(g);
            v
        })).collect();
    }
    out
}

/// Discrepancy of the operator identity on `V^{⊗p}`: `D₁ ▷ N_2̄⋯N_p̄`
/// (oracle, entrywise) minus the cycle-operator sum, in normal form.
pub fn leibniz_closed_form(w: &WeylPresentation, p: usize) -> Result<OpMatrix, ReError> {
    if !w.braiding.is_involutive() {
        return Err(ReError::NotInvolutive);
    }
    assert!(p >= 2);
    let m = w.dim();
    let a = equation_matrix(&w.braiding);
    let n = w.n_matrix();
    let nb: Vec<OpMatrix> = (2..=p).map(|k| nbar(&a, &n, m, k, p)).collect();
    let d1 = w.d_matrix().kron_identity(m.pow(p as u32 - 1));
    let prod = nb.iter().fold(OpMatrix::identity(m.pow(p as u32)), |acc, x| acc.mul(x));
    let mut red = w.reducer();
    let lhs = d1.mul(&prod).map(|e| w.act_with(&mut red, &NCPoly::one(), e));

    let mut rhs = OpMatrix::zeros(m.pow(p as u32));
    for mask in 1u32..(1 << (p - 1)) {
        let ks: Vec<usize> = (2..=p).filter(|t| mask & (1 << (t - 2)) != 0).collect();
        let rest = (2..=p)
            .filter(|t| !ks.contains(t))
            .fold(OpMatrix::identity(m.pow(p as u32)), |acc, t| acc.mul(&nb[t - 2]));
        let mut cyc = ScalarMatrix::identity(m.pow(p as u32));
        let mut prev = 1;
        for &k in &ks {
            cyc = cyc.mul(&RChain::new(&a, m, prev, k, p).op);
            prev = k;
        }
        rhs = rhs.add(&rest.mul_scalar(&cyc).scale(&Scalar::h().pow(ks.len() as i32 - 1)));
    }
    Ok(lhs.sub(&rhs.normal_form(&mut red)))
}
