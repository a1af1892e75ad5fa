//! Square matrices with [`NCPoly`] entries, multiplied in order.
//!
//! Index convention: the lower index is the row, `M[i][j] = m_i^j`. Scalar
//! operators are given in the same convention.

use crate::exact::{Scalar, ScalarMatrix};
use crate::nc::{NCPoly, Reducer};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OpMatrix {
    n: usize,
    data: Vec<NCPoly>,
}

impl OpMatrix {
    pub fn zeros(n: usize) -> Self {
        OpMatrix { n, data: vec![NCPoly::zero(); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        OpMatrix::from_scalar(&ScalarMatrix::identity(n))
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> NCPoly) -> Self {
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(f(i, j));
            }
        }
        OpMatrix { n, data }
    }

    pub fn from_scalar(m: &ScalarMatrix) -> Self {
        assert!(m.is_square());
        OpMatrix::from_fn(m.rows(), |i, j| NCPoly::scalar(m.get(i, j).clone()))
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &NCPoly {
        &self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: NCPoly) {
        self.data[i * self.n + j] = v;
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &NCPoly)> {
        self.data.iter().enumerate().map(move |(k, p)| (k / self.n, k % self.n, p))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|p| p.is_zero())
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!(self.n, o.n);
        OpMatrix { n: self.n, data: self.data.iter().zip(&o.data).map(|(a, b)| a.add(b)).collect() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        assert_eq!(self.n, o.n);
        OpMatrix { n: self.n, data: self.data.iter().zip(&o.data).map(|(a, b)| a.sub(b)).collect() }
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        OpMatrix { n: self.n, data: self.data.iter().map(|p| p.scale(s)).collect() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.n, o.n);
        let n = self.n;
        let mut out = OpMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = o.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let prod = a.mul(b);
                    out.data[i * n + j].add_assign(&prod);
                }
            }
        }
        out
    }

    /// `self · m` for a scalar operator `m`.
    pub fn mul_scalar(&self, m: &ScalarMatrix) -> Self {
        let n = self.n;
        let mut out = OpMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let s = m.get(k, j);
                    if !s.is_zero() {
                        out.data[i * n + j].add_scaled(a, s);
                    }
                }
            }
        }
        out
    }

    /// `m · self` for a scalar operator `m`.
    pub fn scalar_mul(m: &ScalarMatrix, o: &Self) -> Self {
        let n = o.n;
        let mut out = OpMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let s = m.get(i, k);
                if s.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = o.get(k, j);
                    if !b.is_zero() {
                        out.data[i * n + j].add_scaled(b, s);
                    }
                }
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = OpMatrix::identity(self.n);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// `self ⊗ I_r`: acts on the first factor of a tensor product.
    pub fn kron_identity(&self, r: usize) -> Self {
        let n = self.n * r;
        OpMatrix::from_fn(n, |a, b| {
            if a % r == b % r {
                self.get(a / r, b / r).clone()
            } else {
                NCPoly::zero()
            }
        })
    }

    pub fn trace(&self) -> NCPoly {
        let mut acc = NCPoly::zero();
        for k in 0..self.n {
            acc.add_assign(self.get(k, k));
        }
        acc
    }

    pub fn map(&self, mut f: impl FnMut(&NCPoly) -> NCPoly) -> Self {
        OpMatrix { n: self.n, data: self.data.iter().map(|p| f(p)).collect() }
    }

    pub fn normal_form(&self, red: &mut Reducer<'_>) -> Self {
        self.map(|p| red.nf(p))
    }
}
