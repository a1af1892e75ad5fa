//! Differential calculus on U(u(2)_ℏ).
//!
//! Generators `t < x < y < z` with `[x,y] = ℏz`, `[y,z] = ℏx`, `[z,x] = ℏy`
//! and `t` central, followed by the commuting derivatives
//! `∂̃_t < ∂_x < ∂_y < ∂_z`, where `∂̃_t = ∂_t + 2/ℏ`. A derivative acts on
//! an element by normal ordering and applying the counit `ε(∂̃_t) = 2/ℏ`,
//! `ε(∂_x) = ε(∂_y) = ε(∂_z) = 0`.

mod isotypic;
mod spectral;

pub use isotypic::{
    classical_action, shifted, DifferenceOperator, DtReading, InvariantOp, IsotypicElement, OpCombination, ShiftRecord,
    ShiftTerm,
};
pub use spectral::{cas_at, SpectralMatrices, PHI_SHIFTS, PI_SHIFTS};

use std::collections::HashMap;
use std::sync::Arc;

use crate::exact::{Scalar, Var};
use crate::exec::{self, ExecMode};
use crate::nc::{counit, Alphabet, ConfluenceResult, Letter, LetterKind, NCPoly, Reducer, RewriteSystem, Word};
use crate::re_weyl::{OpMatrix, ReError};

pub const T: Letter = 0;
pub const X: Letter = 1;
pub const Y: Letter = 2;
pub const Z: Letter = 3;
pub const DT: Letter = 4;
pub const DX: Letter = 5;
pub const DY: Letter = 6;
pub const DZ: Letter = 7;

pub const NAMES: [&str; 8] = ["t", "x", "y", "z", "Dt", "Dx", "Dy", "Dz"];

/// `D·c − c·D = (ℏ/2)·sign·D'`, indexed by derivative then coordinate.
const TABLE: [[(i64, Letter); 4]; 4] = [
    [(1, DT), (-1, DX), (-1, DY), (-1, DZ)],
    [(1, DX), (1, DT), (1, DZ), (-1, DY)],
    [(1, DY), (-1, DZ), (1, DT), (1, DX)],
    [(1, DZ), (1, DY), (-1, DX), (1, DT)],
];

fn h() -> Scalar {
    Scalar::h()
}

fn l(x: Letter) -> NCPoly {
    NCPoly::letter(x)
}

fn c(s: Scalar) -> NCPoly {
    NCPoly::scalar(s)
}

/// The coordinate relations `yx − xy + ℏz`, `zy − yz + ℏx`, `zx − xz − ℏy`
/// and `t` central.
pub fn coordinate_relations() -> Vec<NCPoly> {
    let mut rels = vec![
        l(Y).mul(&l(X)).sub(&l(X).mul(&l(Y))).add(&l(Z).scale(&h())),
        l(Z).mul(&l(Y)).sub(&l(Y).mul(&l(Z))).add(&l(X).scale(&h())),
        l(Z).mul(&l(X)).sub(&l(X).mul(&l(Z))).sub(&l(Y).scale(&h())),
    ];
    for g in [X, Y, Z] {
        rels.push(l(g).mul(&l(T)).sub(&l(T).mul(&l(g))));
    }
    rels
}

/// Commutation of derivatives and the sixteen permutation relations.
pub fn derivative_relations() -> Vec<NCPoly> {
    let mut rels = Vec::new();
    for a in DT..=DZ {
        for b in a + 1..=DZ {
            rels.push(l(b).mul(&l(a)).sub(&l(a).mul(&l(b))));
        }
    }
    let half_h = &h() * &Scalar::from_ratio(1, 2);
    for (d, row) in TABLE.iter().enumerate() {
        let dl = DT + d as Letter;
        for (co, &(sign, target)) in row.iter().enumerate() {
            let cl = co as Letter;
            let rel = l(dl).mul(&l(cl)).sub(&l(cl).mul(&l(dl))).sub(&l(target).scale(&(&half_h * &Scalar::from_int(sign))));
            rels.push(rel);
        }
    }
    rels
}

/// The Weyl algebra of U(u(2)_ℏ) with its reducer data.
pub struct U2Calculus {
    alphabet: Arc<Alphabet>,
    system: RewriteSystem,
    coords: RewriteSystem,
    eps: HashMap<Letter, Scalar>,
}

impl U2Calculus {
    /// Build and certify the rewriting systems.
    pub fn new() -> Result<Self, ReError> {
        let letters = NAMES
            .iter()
            .enumerate()
            .map(|(k, n)| (n.to_string(), if k < 4 { LetterKind::Coordinate } else { LetterKind::Derivative }))
            .collect();
        let alphabet = Arc::new(Alphabet::new(letters));
        let mut rels = coordinate_relations();
        rels.extend(derivative_relations());
        let system = RewriteSystem::from_relations(alphabet.clone(), &rels)?;
        system.check_complete()?;
        if let ConfluenceResult::Fail { word, difference } = system.certify_confluence() {
            return Err(ReError::NotConfluent { word, difference });
        }
        let calpha = Arc::new(Alphabet::new(
            NAMES[..4].iter().map(|n| (n.to_string(), LetterKind::Coordinate)).collect(),
        ));
        let coords = RewriteSystem::from_relations(calpha, &coordinate_relations())?;
        let eps = HashMap::from([(DT, &Scalar::from_int(2) / &h())]);
        Ok(U2Calculus { alphabet, system, coords, eps })
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn system(&self) -> &RewriteSystem {
        &self.system
    }

    /// The presentation of U(u(2)_ℏ) alone.
    pub fn coordinate_system(&self) -> &RewriteSystem {
        &self.coords
    }

    pub fn reducer(&self) -> Reducer<'_> {
        Reducer::new(&self.system)
    }

    pub fn render(&self, p: &NCPoly) -> String {
        self.alphabet.render(p)
    }

    /// `op ▷ u`.
    pub fn act_with(&self, red: &mut Reducer<'_>, op: &NCPoly, u: &NCPoly) -> NCPoly {
        let nf = red.nf(&op.mul(u));
        counit(&self.alphabet, &nf, &self.eps)
    }

    pub fn act(&self, op: &NCPoly, u: &NCPoly) -> NCPoly {
        self.act_with(&mut self.reducer(), op, u)
    }

    /// `∂_t = ∂̃_t − 2/ℏ`.
    pub fn dt(&self) -> NCPoly {
        l(DT).sub(&c(&Scalar::from_int(2) / &h()))
    }

    pub fn q(&self) -> NCPoly {
        l(X).mul(&l(DX)).add(&l(Y).mul(&l(DY))).add(&l(Z).mul(&l(DZ)))
    }

    /// `∂_x² + ∂_y² + ∂_z²`.
    pub fn laplacian(&self) -> NCPoly {
        l(DX).pow(2).add(&l(DY).pow(2)).add(&l(DZ).pow(2))
    }

    pub fn operator(&self, op: InvariantOp) -> NCPoly {
        match op {
            InvariantOp::Identity => NCPoly::one(),
            InvariantOp::Dt => self.dt(),
            InvariantOp::DtTilde => l(DT),
            InvariantOp::Q => self.q(),
            InvariantOp::Delta(0) => l(DT).pow(2),
            InvariantOp::Delta(1) => self.laplacian(),
            InvariantOp::Delta(2) => self.q().mul(&l(DT)),
            InvariantOp::Delta(3) => self.q().pow(2),
            InvariantOp::Delta(i) => panic!("no operator Δ{i}"),
        }
    }

    /// `x² + y² + z²`.
    pub fn cas(&self) -> NCPoly {
        l(X).pow(2).add(&l(Y).pow(2)).add(&l(Z).pow(2))
    }

    /// `b = −ix − y`.
    pub fn b(&self) -> NCPoly {
        l(X).scale(&-Scalar::i()).sub(&l(Y))
    }

    /// `bᵏ` in normal form.
    pub fn b_pow(&self, k: u32) -> NCPoly {
        Reducer::new(&self.coords).nf(&self.b().pow(k))
    }

    /// The generating matrix `N = [[t − iz, −ix − y], [−ix + y, t + iz]]`.
    pub fn n_matrix(&self) -> OpMatrix {
        let iz = l(Z).scale(&Scalar::i());
        let ix = l(X).scale(&Scalar::i());
        OpMatrix::from_fn(2, |i, j| match (i, j) {
            (0, 0) => l(T).sub(&iz),
            (0, 1) => ix.neg().sub(&l(Y)),
            (1, 0) => ix.neg().add(&l(Y)),
            _ => l(T).add(&iz),
        })
    }

    /// `N² − s₁N + s₀I` in normal form.
    pub fn cayley_hamilton_residual(&self, s1: &NCPoly, s0: &NCPoly) -> OpMatrix {
        let n = self.n_matrix();
        let id = OpMatrix::identity(2);
        let diag = |p: &NCPoly| OpMatrix::from_fn(2, |i, j| if i == j { p.clone() } else { NCPoly::zero() });
        let res = n.mul(&n).sub(&diag(s1).mul(&n)).add(&diag(s0).mul(&id));
        res.normal_form(&mut Reducer::new(&self.coords))
    }

    /// `N² − (2t+ℏ)N + (t² + Cas + ℏt)I = 0`.
    pub fn cayley_hamilton_check(&self) -> bool {
        let s1 = l(T).scale(&Scalar::from_int(2)).add(&c(h()));
        let s0 = l(T).pow(2).add(&self.cas()).add(&l(T).scale(&h()));
        self.cayley_hamilton_residual(&s1, &s0).is_zero()
    }

    /// `op·tᵏ = (t+s)ᵏ·op` in the Weyl algebra, with `s = ℏ/2` for first
    /// order operators and `s = ℏ` for `Δᵢ`.
    pub fn t_shift(&self, op: InvariantOp, k: u32) -> bool {
        let s = match op {
            InvariantOp::DtTilde | InvariantOp::Q => &h() * &Scalar::from_ratio(1, 2),
            InvariantOp::Delta(_) => h(),
            _ => return false,
        };
        let o = self.operator(op);
        let mut red = self.reducer();
        let lhs = red.nf(&o.mul(&l(T).pow(k)));
        let rhs = red.nf(&l(T).add(&c(s)).pow(k).mul(&o));
        lhs == rhs
    }

    /// Normal-ordered coordinate monomials `t^a x^b y^c z^d` of degree at
    /// most `max_deg`.
    pub fn pbw_monomials(&self, max_deg: usize) -> Vec<NCPoly> {
        let mut out = Vec::new();
        for deg in 0..=max_deg {
            let mut words = vec![Vec::<Letter>::new()];
            for _ in 0..deg {
                words = words
                    .into_iter()
                    .flat_map(|w| {
                        let start = w.last().copied().unwrap_or(T);
                        (start..=Z).map(move |g| {
                            let mut v = w.clone();
                            v.push(g);
                            v
                        })
                    })
                    .collect();
            }
            out.extend(words.into_iter().map(|w| NCPoly::word(Word(w))));
        }
        out
    }

    /// First element of `elements` on which two derivative letters fail to
    /// commute as operators.
    pub fn derivatives_commute(&self, elements: &[NCPoly], mode: ExecMode) -> Option<(Letter, Letter, NCPoly)> {
        let res = exec::map_with(mode, elements, || self.reducer(), |red, u| {
            for a in DT..=DZ {
                for b in a + 1..=DZ {
                    let bu = self.act_with(red, &l(b), u);
                    let au = self.act_with(red, &l(a), u);
                    let ab = self.act_with(red, &l(a), &bu);
                    let ba = self.act_with(red, &l(b), &au);
                    if ab != ba {
                        return Some((a, b, u.clone()));
                    }
                }
            }
            None
        });
        res.into_iter().flatten().next()
    }

    /// `opᵢ ▷ (Cas·u) = Σⱼ Mᵢⱼ(Cas)·(opⱼ ▷ u)` for every `u` in `elements`,
    /// with `M = Φ` on `(∂̃_t, Q)` or `M = Π` on `(Δ₀, …, Δ₃)`. Returns the
    /// first failing element.
    pub fn cas_exchange(&self, spec: &SpectralMatrices, second: bool, elements: &[NCPoly], mode: ExecMode) -> Option<NCPoly> {
        let (ops, m): (Vec<InvariantOp>, _) = if second {
            ((0..4).map(InvariantOp::Delta).collect(), &spec.pi)
        } else {
            (vec![InvariantOp::DtTilde, InvariantOp::Q], &spec.phi)
        };
        let n = ops.len();
        let coeffs: Vec<NCPoly> = (0..n * n)
            .map(|k| self.central_to_u2(m.get(k / n, k % n)).expect("matrix entries are central"))
            .collect();
        let ops: Vec<NCPoly> = ops.into_iter().map(|o| self.operator(o)).collect();
        let cas = self.cas();
        let res = exec::map_with(mode, elements, || self.reducer(), |red, u| {
            let cu = red.nf(&cas.mul(u));
            let acts: Vec<NCPoly> = ops.iter().map(|o| self.act_with(red, o, u)).collect();
            for i in 0..n {
                let lhs = self.act_with(red, &ops[i], &cu);
                let mut rhs = NCPoly::zero();
                for j in 0..n {
                    rhs.add_assign(&coeffs[i * n + j].mul(&acts[j]));
                }
                if lhs != red.nf(&rhs) {
                    return Some(u.clone());
                }
            }
            None
        });
        res.into_iter().flatten().next()
    }

    /// `∂̃_t`, `Δ` and `∂_t` kill `bᵏ`, `Re bᵏ` and `Im bᵏ`.
    pub fn harmonicity_check(&self, k: u32) -> bool {
        let bk = self.b_pow(k);
        let conj = bk.map_coeffs(|s| s.conj());
        let re = bk.add(&conj).scale(&Scalar::from_ratio(1, 2));
        let im = bk.sub(&conj).scale(&(&Scalar::i() * &Scalar::from_ratio(-1, 2)));
        let mut red = self.reducer();
        let two_over_h = &Scalar::from_int(2) / &h();
        [bk, re, im].iter().all(|u| {
            self.act_with(&mut red, &self.laplacian(), u).is_zero()
                && self.act_with(&mut red, &self.dt(), u).is_zero()
                && self.act_with(&mut red, &l(DT), u) == u.scale(&two_over_h)
        })
    }

    /// A central element `f(t, μ)` as an element of U(u(2)_ℏ), using
    /// `μ² = ℏ² − 4Cas`. `None` if `f` is not a polynomial in `t` and `μ²`.
    pub fn central_to_u2(&self, f: &Scalar) -> Option<NCPoly> {
        let den = f.denom();
        if den.contains_var(Var::T) || den.contains_var(Var::Mu) {
            return None;
        }
        let inv_den = Scalar::from_poly(den).inv();
        let mu2 = c(&h() * &h()).sub(&self.cas().scale(&Scalar::from_int(4)));
        let mut red = Reducer::new(&self.coords);
        let mut out = NCPoly::zero();
        for (j, cj) in f.numer().coeffs_in(Var::Mu).iter().enumerate() {
            if cj.is_zero() {
                continue;
            }
            if j % 2 == 1 {
                return None;
            }
            let mu_part = red.nf(&mu2.pow(j as u32 / 2));
            for (a, ca) in cj.coeffs_in(Var::T).iter().enumerate() {
                if ca.is_zero() {
                    continue;
                }
                let coef = &Scalar::from_poly(ca.clone()) * &inv_den;
                out.add_scaled(&l(T).pow(a as u32).mul(&mu_part), &coef);
            }
        }
        Some(red.nf(&out))
    }

    /// `f(t, μ)·bᵏ` as an element, when `f` is central.
    pub fn isotypic_to_u2(&self, e: &IsotypicElement) -> Option<NCPoly> {
        let f = self.central_to_u2(&e.f)?;
        Some(Reducer::new(&self.coords).nf(&f.mul(&self.b_pow(e.k))))
    }

    /// Compare the closed-form action with the oracle on `f·bᵏ`. Returns
    /// the closed-form and oracle values on mismatch.
    pub fn oracle_crosscheck(
        &self,
        spec: &SpectralMatrices,
        op: InvariantOp,
        e: &IsotypicElement,
        reading: DtReading,
    ) -> Result<(), (NCPoly, NCPoly)> {
        let closed = spec.act(op, e, reading);
        let u = self.isotypic_to_u2(e).expect("oracle comparison needs f polynomial in t and μ²");
        let oracle = self.act(&self.operator(op), &u);
        let closed = self.isotypic_to_u2(&closed).unwrap_or_else(|| NCPoly::scalar(closed.f.clone()));
        if closed == oracle {
            Ok(())
        } else {
            Err((closed, oracle))
        }
    }
}
