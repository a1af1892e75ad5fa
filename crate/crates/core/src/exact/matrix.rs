//! Dense matrices over [`Scalar`] with exact elimination.

use std::fmt;

use super::poly::Poly;
use super::scalar::Scalar;
use super::unipoly::{UniPoly, UniVar};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ScalarMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl ScalarMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ScalarMatrix { rows, cols, data: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = ScalarMatrix::zeros(n, n);
        for k in 0..n {
            m.set(k, k, Scalar::one());
        }
        m
    }

    pub fn scalar_identity(n: usize, s: &Scalar) -> Self {
        let mut m = ScalarMatrix::zeros(n, n);
        for k in 0..n {
            m.set(k, k, s.clone());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        ScalarMatrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map(|x| x.len()).unwrap_or(0);
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        ScalarMatrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    /// Positions and values of the nonzero entries.
    pub fn nonzero_entries(&self) -> Vec<(usize, usize, Scalar)> {
        let mut out = Vec::new();
        for i in 0..self.rows {
            for j in 0..self.cols {
                let v = self.get(i, j);
                if !v.is_zero() {
                    out.push((i, j, v.clone()));
                }
            }
        }
        out
    }

    pub fn map(&self, f: impl Fn(&Scalar) -> Scalar) -> Self {
        ScalarMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn transpose(&self) -> Self {
        ScalarMatrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols), "shape mismatch");
        ScalarMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols), "shape mismatch");
        ScalarMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        self.map(|x| x * s)
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.cols, o.rows, "shape mismatch");
        let mut out = ScalarMatrix::zeros(self.rows, o.cols);
        // row-sparse accumulation skips the many zeros of braiding matrices
        let o_rows: Vec<Vec<(usize, &Scalar)>> = (0..o.rows)
            .map(|k| (0..o.cols).filter_map(|j| Some((j, o.get(k, j))).filter(|x| !x.1.is_zero())).collect())
            .collect();
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for (j, b) in &o_rows[k] {
                    let idx = i * out.cols + j;
                    let t = a * *b;
                    out.data[idx] = &out.data[idx] + &t;
                }
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        assert!(self.is_square());
        let mut acc = ScalarMatrix::identity(self.rows);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Kronecker product `self ⊗ o`.
    pub fn kron(&self, o: &Self) -> Self {
        let mut out = ScalarMatrix::zeros(self.rows * o.rows, self.cols * o.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..o.rows {
                    for l in 0..o.cols {
                        let b = o.get(k, l);
                        if !b.is_zero() {
                            out.set(i * o.rows + k, j * o.cols + l, a * b);
                        }
                    }
                }
            }
        }
        out
    }

    pub fn trace(&self) -> Scalar {
        assert!(self.is_square());
        let mut acc = Scalar::zero();
        for k in 0..self.rows {
            acc = &acc + self.get(k, k);
        }
        acc
    }

    /// Apply `f` to every entry, e.g. a substitution.
    pub fn subs(&self, v: super::poly::Var, value: &Scalar) -> Self {
        self.map(|x| x.subs(v, value))
    }

    /// Exact rank by fraction-free (Bareiss) elimination on polynomial rows.
    pub fn rank(&self) -> usize {
        let mut m: Vec<Vec<Poly>> = (0..self.rows).map(|i| clear_denominators(self.row(i))).collect();
        let mut rank = 0;
        let mut prev = Poly::one();
        let mut col = 0;
        while rank < m.len() && col < self.cols {
            let pivot = (rank..m.len()).find(|&r| !m[r][col].is_zero());
            let Some(p) = pivot else {
                col += 1;
                continue;
            };
            m.swap(rank, p);
            let piv = m[rank][col].clone();
            for r in rank + 1..m.len() {
                let f = m[r][col].clone();
                for c in col..self.cols {
                    let v = m[r][c].mul(&piv).sub(&m[rank][c].mul(&f));
                    m[r][c] = v.div_exact(&prev).expect("Bareiss division is exact");
                }
            }
            prev = piv;
            rank += 1;
            col += 1;
        }
        rank
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self) -> (ScalarMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.get(r, c).inv();
            for j in c..m.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r || m.get(i, c).is_zero() {
                    continue;
                }
                let f = m.get(i, c).clone();
                for j in c..m.cols {
                    let b = m.get(r, j);
                    if b.is_zero() {
                        continue;
                    }
                    let v = m.get(i, j) - &(&f * b);
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Basis of the right nullspace, one column vector per element.
    pub fn nullspace(&self) -> Vec<Vec<Scalar>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![Scalar::zero(); self.cols];
                v[f] = Scalar::one();
                for (row, &pc) in pivots.iter().enumerate() {
                    v[pc] = -r.get(row, f);
                }
                v
            })
            .collect()
    }

    /// Solve `A X = B`; `None` when the system is inconsistent.
    pub fn solve(&self, b: &ScalarMatrix) -> Option<ScalarMatrix> {
        assert_eq!(self.rows, b.rows, "shape mismatch");
        let aug = ScalarMatrix::from_fn(self.rows, self.cols + b.cols, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                b.get(i, j - self.cols).clone()
            }
        });
        let (r, pivots) = aug.rref();
        if pivots.iter().any(|&p| p >= self.cols) {
            return None;
        }
        let mut x = ScalarMatrix::zeros(self.cols, b.cols);
        for (row, &pc) in pivots.iter().enumerate() {
            for j in 0..b.cols {
                x.set(pc, j, r.get(row, self.cols + j).clone());
            }
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<ScalarMatrix> {
        assert!(self.is_square());
        let x = self.solve(&ScalarMatrix::identity(self.rows))?;
        if self.mul(&x) == ScalarMatrix::identity(self.rows) {
            Some(x)
        } else {
            None
        }
    }

    /// Monic characteristic polynomial `det(λI − A)` by Faddeev–LeVerrier.
    pub fn charpoly(&self) -> Result<UniPoly, MatrixError> {
        if !self.is_square() {
            return Err(MatrixError::NotSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        let mut coeffs = vec![Scalar::zero(); n + 1];
        coeffs[n] = Scalar::one();
        let mut m = ScalarMatrix::zeros(n, n);
        let mut c_prev = Scalar::one();
        for k in 1..=n {
            m = self.mul(&m).add(&ScalarMatrix::scalar_identity(n, &c_prev));
            let am = self.mul(&m);
            let ck = -(&am.trace() / &Scalar::from_int(k as i64));
            coeffs[n - k] = ck.clone();
            c_prev = ck;
        }
        Ok(UniPoly::new(UniVar::Lambda, coeffs))
    }

    /// Evaluate a polynomial at this matrix (Horner).
    pub fn eval_poly(&self, p: &UniPoly) -> ScalarMatrix {
        let n = self.rows;
        let mut acc = ScalarMatrix::zeros(n, n);
        for c in p.coeffs().iter().rev() {
            acc = acc.mul(self).add(&ScalarMatrix::scalar_identity(n, c));
        }
        acc
    }
}

/// Multiply a row by the lcm of its denominators.
fn clear_denominators(row: &[Scalar]) -> Vec<Poly> {
    let mut l = Poly::one();
    for x in row {
        if !x.is_polynomial() {
            l = l.lcm(&x.denom());
        }
    }
    row.iter()
        .map(|x| {
            if x.is_polynomial() {
                x.numer().mul(&l)
            } else {
                x.numer().mul(&l.div_exact(&x.denom()).expect("lcm divisible"))
            }
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MatrixError {
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
}

impl fmt::Display for ScalarMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    #[test]
    fn rank_basics() {
        assert_eq!(ScalarMatrix::identity(3).rank(), 3);
        assert_eq!(ScalarMatrix::zeros(2, 5).rank(), 0);
        let m = ScalarMatrix::from_rows(vec![vec![s(1), s(2)], vec![s(2), s(4)]]);
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn inconsistent_system() {
        let a = ScalarMatrix::from_rows(vec![vec![s(1), s(1)], vec![s(1), s(1)]]);
        let b = ScalarMatrix::from_rows(vec![vec![s(1)], vec![s(2)]]);
        assert!(a.solve(&b).is_none());
        let b = ScalarMatrix::from_rows(vec![vec![s(3)], vec![s(5)]]);
        assert_eq!(ScalarMatrix::identity(2).solve(&b).unwrap(), b);
    }

    #[test]
    fn charpoly_identity() {
        let p = ScalarMatrix::identity(2).charpoly().unwrap();
        assert_eq!(p.coeffs(), &[s(1), s(-2), s(1)]);
        assert!(ScalarMatrix::zeros(2, 3).charpoly().is_err());
    }
}
