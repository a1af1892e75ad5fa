//! q-symmetrizers on `V^{⊗k}` and Poincaré–Hilbert series.

use serde::Serialize;

use super::{embed, skew_inverse, Braiding, HeckeError};
use crate::exact::{reconstruct_rational, Scalar, ScalarMatrix, UniPoly, UniVar};
use crate::exec::{self, ExecMode};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Sign {
    Plus,
    Minus,
}

/// `n_q = q^{n−1} + q^{n−3} + … + q^{1−n}`; equals `n` at `q = 1`.
pub fn q_number(n: usize, q: &Scalar) -> Scalar {
    let mut acc = Scalar::zero();
    for j in 0..n {
        acc = &acc + &q.pow(n as i32 - 1 - 2 * j as i32);
    }
    acc
}

/// `P^{(k)}_±` by the left-iterated Hecke recursion
/// `P^{(k)} = (1/k_q) P^{(k−1)} (q^{∓(k−1)} I ± (k−1)_q R_{k−1,k}) P^{(k−1)}`.
pub fn symmetrizer(r: &Braiding, k: usize, sign: Sign) -> Result<ScalarMatrix, HeckeError> {
    let q = r.hecke_q().ok_or(HeckeError::NoHeckeParameter)?.clone();
    symmetrizer_with_q(r, &q, k, sign)
}

fn symmetrizer_with_q(r: &Braiding, q: &Scalar, k: usize, sign: Sign) -> Result<ScalarMatrix, HeckeError> {
    if k == 0 {
        return Err(HeckeError::Order);
    }
    let d = r.dim();
    let mut p = ScalarMatrix::identity(d);
    for j in 2..=k {
        let jq = q_number(j, q);
        if jq.is_zero() {
            return Err(HeckeError::DegenerateQ(j));
        }
        let prev = p.kron(&ScalarMatrix::identity(d));
        let n = d.pow(j as u32);
        let rj = embed(r.matrix(), d, j, j - 2, 2);
        let (qpow, coef) = match sign {
            Sign::Plus => (q.pow(-(j as i32 - 1)), q_number(j - 1, q)),
            Sign::Minus => (q.pow(j as i32 - 1), -q_number(j - 1, q)),
        };
        let mid = ScalarMatrix::scalar_identity(n, &qpow).add(&rj.scale(&coef));
        p = prev.mul(&mid).mul(&prev).scale(&jq.inv());
    }
    Ok(p)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PHReport {
    pub dims_plus: Vec<usize>,
    pub dims_minus: Vec<usize>,
    pub p_minus: (UniPoly, UniPoly),
    pub bi_rank: (usize, usize),
    /// `Σ dims_plus tᵏ · Σ dims_minus (−t)ᵏ ≡ 1` through order `kmax`.
    pub series_product_is_one: bool,
}

/// Dimensions of the symmetrizer images for `k ≤ kmax` as ranks over the
/// coefficient field, and the rational form of `𝒫₋(t)`.
pub fn ph_series(r: &Braiding, kmax: usize, mode: ExecMode) -> Result<PHReport, HeckeError> {
    let q = r.hecke_q().ok_or(HeckeError::NoHeckeParameter)?.clone();
    skew_inverse(r)?;
    let jobs: Vec<(usize, Sign)> =
        (2..=kmax).flat_map(|k| [(k, Sign::Plus), (k, Sign::Minus)]).collect();
    let ranks = exec::map(mode, &jobs, |&(k, s)| symmetrizer_with_q(r, &q, k, s).map(|p| p.rank()));
    let mut dims_plus = vec![1, r.dim()];
    let mut dims_minus = vec![1, r.dim()];
    for (job, rank) in jobs.iter().zip(ranks) {
        let rank = rank?;
        match job.1 {
            Sign::Plus => dims_plus.push(rank),
            Sign::Minus => dims_minus.push(rank),
        }
    }
    dims_plus.truncate(kmax + 1);
    dims_minus.truncate(kmax + 1);
    let series_product_is_one = (0..=kmax).all(|n| {
        let s: i64 = (0..=n)
            .map(|j| {
                let sign = if (n - j) % 2 == 0 { 1 } else { -1 };
                dims_plus[j] as i64 * dims_minus[n - j] as i64 * sign
            })
            .sum();
        s == if n == 0 { 1 } else { 0 }
    });
    let series: Vec<Scalar> = dims_minus.iter().map(|&x| Scalar::from_int(x as i64)).collect();
    let len = series.len();
    let bound = len.saturating_sub(2);
    let (n, d) = reconstruct_rational(UniVar::T, &series, (bound, bound))
        .filter(|(n, d)| n.degree() + d.degree() + 2 <= len)
        .ok_or_else(|| HeckeError::Reconstruction(dims_minus.clone()))?;
    let bi_rank = (n.degree(), d.degree());
    Ok(PHReport { dims_plus, dims_minus, p_minus: (n, d), bi_rank, series_product_is_one })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classical_symmetrizer() {
        let p = Braiding::flip(2);
        let s = symmetrizer(&p, 2, Sign::Plus).unwrap();
        let want = ScalarMatrix::identity(4).add(p.matrix()).scale(&Scalar::from_ratio(1, 2));
        assert_eq!(s, want);
        assert_eq!(symmetrizer(&p, 2, Sign::Minus).unwrap().rank(), 1);
        assert_eq!(symmetrizer(&p, 3, Sign::Minus).unwrap().rank(), 0);
    }

    #[test]
    fn q_numbers() {
        assert_eq!(q_number(3, &Scalar::one()), Scalar::from_int(3));
        assert_eq!(q_number(2, &Scalar::i()), Scalar::zero());
    }
}
