//! The matrices `Φ` and `Π` describing how the invariant operators pass
//! through `Cas`, and their spectral projectors, as functions of `μ`.

use num_rational::Rational64;

use crate::exact::{Scalar, ScalarMatrix, Var};

fn h() -> Scalar {
    Scalar::h()
}

fn mu() -> Scalar {
    Scalar::var(Var::Mu)
}

fn r(n: i64, d: i64) -> Scalar {
    Scalar::from_ratio(n, d)
}

/// `Cas = (ℏ² − μ²)/4`, evaluated at `μ + sℏ`.
pub fn cas_at(s: i64) -> Scalar {
    let m = &mu() + &(&h() * &Scalar::from_int(s));
    &(&(&h() * &h()) - &(&m * &m)) * &r(1, 4)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectralMatrices {
    /// `(∂̃_t, Q)ᵗ·Cas = Φ·(∂̃_t, Q)ᵗ`.
    pub phi: ScalarMatrix,
    /// `(Δ₀, …, Δ₃)ᵗ·Cas = Π·(Δ₀, …, Δ₃)ᵗ`.
    pub pi: ScalarMatrix,
    /// `λ₁, λ₂`.
    pub phi_eigen: [Scalar; 2],
    /// `λ₀, λ₊, λ₋`.
    pub pi_eigen: [Scalar; 3],
    /// `P₁(Φ), P₂(Φ)`.
    pub phi_proj: [ScalarMatrix; 2],
    /// `P₀(Π), P₊(Π), P₋(Π)`.
    pub pi_proj: [ScalarMatrix; 3],
}

/// `μ`-shift (in units of ℏ) attached to each eigenvalue: `λ = Cas(μ + sℏ)`.
pub const PHI_SHIFTS: [i64; 2] = [-1, 1];
pub const PI_SHIFTS: [i64; 3] = [0, 2, -2];

/// `t`-shifts (in units of ℏ) of first and second order operators.
pub fn t_shift(second: bool) -> Rational64 {
    if second {
        Rational64::from_integer(1)
    } else {
        Rational64::new(1, 2)
    }
}

fn lagrange(m: &ScalarMatrix, eigen: &[Scalar], a: usize) -> ScalarMatrix {
    let n = m.rows();
    let mut p = ScalarMatrix::identity(n);
    for (b, lb) in eigen.iter().enumerate() {
        if b != a {
            let factor = m.sub(&ScalarMatrix::scalar_identity(n, lb)).scale(&(&eigen[a] - lb).inv());
            p = p.mul(&factor);
        }
    }
    p
}

impl SpectralMatrices {
    pub fn new() -> Self {
        let cas = cas_at(0);
        let h2 = &h() * &h();
        let phi = ScalarMatrix::from_rows(vec![
            vec![&cas - &(&h2 * &r(3, 4)), -h()],
            vec![&h() * &cas, &cas + &(&h2 * &r(1, 4))],
        ]);
        let z = Scalar::zero;
        let pi = ScalarMatrix::from_rows(vec![
            vec![&cas - &(&h2 * &r(3, 2)), &h2 * &r(1, 2), &h() * &Scalar::from_int(-2), z()],
            vec![&h2 * &r(3, 2), &cas - &(&h2 * &r(1, 2)), &h() * &Scalar::from_int(2), z()],
            vec![&h() * &cas, z(), &cas - &(&h2 * &r(1, 2)), -h()],
            vec![&h2 * &cas, &(&h2 * &cas) * &r(-1, 2), &h() * &(&(&cas * &Scalar::from_int(2)) + &(&h2 * &r(1, 4))), &cas + &(&h2 * &r(1, 2))],
        ]);
        let phi_eigen = PHI_SHIFTS.map(cas_at);
        let pi_eigen = PI_SHIFTS.map(cas_at);
        let phi_proj = [0, 1].map(|a| lagrange(&phi, &phi_eigen, a));
        let pi_proj = [0, 1, 2].map(|a| lagrange(&pi, &pi_eigen, a));
        let s = SpectralMatrices { phi, pi, phi_eigen, pi_eigen, phi_proj, pi_proj };
        assert!(s.certify(), "spectral decomposition failed");
        s
    }

    /// Orthogonality, completeness and reconstruction of both
    /// decompositions, and the eigenvalues as roots of the characteristic
    /// polynomials.
    pub fn certify(&self) -> bool {
        fn check(m: &ScalarMatrix, eigen: &[Scalar], proj: &[ScalarMatrix]) -> bool {
            let n = m.rows();
            let mut sum = ScalarMatrix::zeros(n, n);
            let mut recon = ScalarMatrix::zeros(n, n);
            for (a, pa) in proj.iter().enumerate() {
                for (b, pb) in proj.iter().enumerate() {
                    let want = if a == b { pa.clone() } else { ScalarMatrix::zeros(n, n) };
                    if pa.mul(pb) != want {
                        return false;
                    }
                }
                sum = sum.add(pa);
                recon = recon.add(&pa.scale(&eigen[a]));
            }
            let Ok(cp) = m.charpoly() else { return false };
            sum == ScalarMatrix::identity(n) && recon == *m && eigen.iter().all(|e| cp.eval(e).is_zero())
        }
        check(&self.phi, &self.phi_eigen, &self.phi_proj) && check(&self.pi, &self.pi_eigen, &self.pi_proj)
    }

    /// `Φᵖ` or `Πᵖ` from the spectral decomposition.
    pub fn spectral_power(&self, second: bool, p: u32) -> ScalarMatrix {
        let (eigen, proj): (&[Scalar], &[ScalarMatrix]) =
            if second { (&self.pi_eigen, &self.pi_proj) } else { (&self.phi_eigen, &self.phi_proj) };
        let n = proj[0].rows();
        eigen.iter().zip(proj).fold(ScalarMatrix::zeros(n, n), |acc, (e, pm)| acc.add(&pm.scale(&e.pow(p as i32))))
    }
}

impl Default for SpectralMatrices {
    fn default() -> Self {
        SpectralMatrices::new()
    }
}
