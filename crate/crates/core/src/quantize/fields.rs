//! Quantum d'Alembert, Dirac and Maxwell operators on U(u(2)_ℏ).

use crate::exact::{Scalar, ScalarMatrix};
use crate::nc::NCPoly;
use crate::u2::{U2Calculus, DX, DY, DZ};

/// `∂̂_t, ∂̂_x, ∂̂_y, ∂̂_z`.
fn partials(u2: &U2Calculus) -> [NCPoly; 4] {
    [u2.dt(), NCPoly::letter(DX), NCPoly::letter(DY), NCPoly::letter(DZ)]
}

/// Minkowski signs `diag(1, −1, −1, −1)`.
const METRIC: [i64; 4] = [1, -1, -1, -1];

/// `□̂ = ∂̂_t² − ∂̂_x² − ∂̂_y² − ∂̂_z²`, in normal form.
pub fn dalembert(u2: &U2Calculus) -> NCPoly {
    let mut out = NCPoly::zero();
    for (d, s) in partials(u2).iter().zip(METRIC) {
        out.add_scaled(&d.mul(d), &Scalar::from_int(s));
    }
    u2.reducer().nf(&out)
}

/// Dirac representation: `γ⁰ = diag(I, −I)`, `γᵏ = [[0, σₖ], [−σₖ, 0]]`.
pub fn gamma_matrices() -> [ScalarMatrix; 4] {
    let (o, z, i) = (Scalar::one(), Scalar::zero(), Scalar::i());
    let sigma = [
        ScalarMatrix::from_rows(vec![vec![z.clone(), o.clone()], vec![o.clone(), z.clone()]]),
        ScalarMatrix::from_rows(vec![vec![z.clone(), -&i], vec![i.clone(), z.clone()]]),
        ScalarMatrix::from_rows(vec![vec![o.clone(), z.clone()], vec![z.clone(), -&o]]),
    ];
    let block = |a: &ScalarMatrix, b: &ScalarMatrix, c: &ScalarMatrix, d: &ScalarMatrix| {
        ScalarMatrix::from_fn(4, 4, |r, s| {
            let m = match (r < 2, s < 2) {
                (true, true) => a,
                (true, false) => b,
                (false, true) => c,
                (false, false) => d,
            };
            m.get(r % 2, s % 2).clone()
        })
    };
    let id = ScalarMatrix::identity(2);
    let zero = ScalarMatrix::zeros(2, 2);
    let g0 = block(&id, &zero, &zero, &id.scale(&-&o));
    let gk = |s: &ScalarMatrix| block(&zero, s, &s.scale(&-&o), &zero);
    [g0, gk(&sigma[0]), gk(&sigma[1]), gk(&sigma[2])]
}

/// A 4×4 matrix with entries in the Weyl algebra.
pub type OperatorMatrix = Vec<Vec<NCPoly>>;

/// `D̂ = γ⁰∂̂_t − γ¹∂̂_x − γ²∂̂_y − γ³∂̂_z`.
pub fn dirac_operator(u2: &U2Calculus) -> OperatorMatrix {
    let gammas = gamma_matrices();
    let ds = partials(u2);
    let mut out = vec![vec![NCPoly::zero(); 4]; 4];
    for mu in 0..4 {
        let sign = Scalar::from_int(METRIC[mu]);
        for (r, row) in out.iter_mut().enumerate() {
            for (s, e) in row.iter_mut().enumerate() {
                let g = gammas[mu].get(r, s);
                if !g.is_zero() {
                    e.add_scaled(&ds[mu], &(g * &sign));
                }
            }
        }
    }
    out
}

/// `D̂² − □̂·I`, entrywise in normal form.
pub fn dirac_residual(u2: &U2Calculus) -> OperatorMatrix {
    let d = dirac_operator(u2);
    let boxed = dalembert(u2);
    let mut red = u2.reducer();
    (0..4)
        .map(|r| {
            (0..4)
                .map(|s| {
                    let mut e = NCPoly::zero();
                    for m in 0..4 {
                        e.add_assign(&d[r][m].mul(&d[m][s]));
                    }
                    if r == s {
                        e = e.sub(&boxed);
                    }
                    red.nf(&e)
                })
                .collect()
        })
        .collect()
}

/// `Mw(v)_μ = □̂v_μ − ∂̂_μ(∂̂_t v₀ − ∂̂_x v₁ − ∂̂_y v₂ − ∂̂_z v₃)` on a
/// 4-vector of elements of U(u(2)_ℏ).
pub fn maxwell(u2: &U2Calculus, v: &[NCPoly; 4]) -> [NCPoly; 4] {
    let mut red = u2.reducer();
    let boxed = dalembert(u2);
    let ds = partials(u2);
    let mut div = NCPoly::zero();
    for mu in 0..4 {
        div.add_scaled(&u2.act_with(&mut red, &ds[mu], &v[mu]), &Scalar::from_int(METRIC[mu]));
    }
    std::array::from_fn(|mu| u2.act_with(&mut red, &boxed, &v[mu]).sub(&u2.act_with(&mut red, &ds[mu], &div)))
}
