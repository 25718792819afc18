use std::fmt;

use crate::arith::{Field, Ring};

/// Dense row-major matrix over a ring.
#[derive(Clone, PartialEq)]
pub struct Matrix<R> {
    rows: usize,
    cols: usize,
    data: Vec<R>,
}

impl<R: Ring> Matrix<R> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![R::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = R::one();
        }
        m
    }

    pub fn scalar(n: usize, c: &R) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = c.clone();
        }
        m
    }

    /// Builds from rows; all rows must have length `cols`.
    pub fn from_rows(rows: Vec<Vec<R>>, cols: usize) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged matrix rows");
            data.extend(r);
        }
        Self { rows: n, cols, data }
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

    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: R) {
        self.data[i * self.cols + j] = v;
    }

    pub fn get_mut(&mut self, i: usize, j: usize) -> &mut R {
        &mut self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[R] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vec(&self, i: usize) -> Vec<R> {
        self.row(i).to_vec()
    }

    pub fn column(&self, j: usize) -> Vec<R> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn row_vectors(&self) -> Vec<Vec<R>> {
        (0..self.rows).map(|i| self.row_vec(i)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(R::is_zero)
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &R)> {
        let c = self.cols;
        self.data.iter().enumerate().map(move |(k, v)| (k / c, k % c, v))
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for (i, j, v) in self.entries() {
            t.set(j, i, v.clone());
        }
        t
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in product");
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let t = a.mul_ref(b);
                    *out.get_mut(i, j) += &t;
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a.add_ref(b)).collect();
        Self { rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a.sub_ref(b)).collect();
        Self { rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, c: &R) -> Self {
        Self { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a.mul_ref(c)).collect() }
    }

    /// Row vector times matrix.
    pub fn left_apply(&self, v: &[R]) -> Vec<R> {
        assert_eq!(v.len(), self.rows);
        let mut out = vec![R::zero(); self.cols];
        for (i, a) in v.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in self.row(i).iter().enumerate() {
                if !b.is_zero() {
                    out[j] += &a.mul_ref(b);
                }
            }
        }
        out
    }

    /// Kronecker product; index (i, k) of the result is `i * rhs.rows + k`.
    pub fn kron(&self, rhs: &Self) -> Self {
        let mut out = Self::zeros(self.rows * rhs.rows, self.cols * rhs.cols);
        for (i, j, a) in self.entries() {
            if a.is_zero() {
                continue;
            }
            for (k, l, b) in rhs.entries() {
                if !b.is_zero() {
                    out.set(i * rhs.rows + k, j * rhs.cols + l, a.mul_ref(b));
                }
            }
        }
        out
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Matrix<S> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn try_map<S: Ring, E>(&self, f: impl Fn(&R) -> Result<S, E>) -> Result<Matrix<S>, E> {
        let data = self.data.iter().map(f).collect::<Result<Vec<_>, E>>()?;
        Ok(Matrix { rows: self.rows, cols: self.cols, data })
    }

    /// Rows and columns selected by index lists.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut out = Self::zeros(rows.len(), cols.len());
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                out.set(a, b, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn stack(blocks: &[&Self]) -> Self {
        let cols = blocks.first().map_or(0, |b| b.cols);
        let mut data = Vec::new();
        let mut rows = 0;
        for b in blocks {
            assert_eq!(b.cols, cols);
            data.extend(b.data.iter().cloned());
            rows += b.rows;
        }
        Self { rows, cols, data }
    }
}

impl<F: Field> Matrix<F> {
    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let best = (r..m.rows).filter(|&i| !m.get(i, c).is_zero()).min_by_key(|&i| m.get(i, c).weight());
            let Some(p) = best else { continue };
            m.swap_rows(r, p);
            let inv = m.get(r, c).inv().expect("nonzero pivot");
            for j in c..m.cols {
                let v = m.get(r, j).mul_ref(&inv);
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r || m.get(i, c).is_zero() {
                    continue;
                }
                let factor = m.get(i, c).clone();
                for j in c..m.cols {
                    let pv = m.get(r, j);
                    if pv.is_zero() {
                        continue;
                    }
                    let t = factor.mul_ref(pv);
                    *m.get_mut(i, j) -= &t;
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

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of {x : M x = 0}, returned as vectors.
    pub fn nullspace(&self) -> Vec<Vec<F>> {
        let (m, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut x = vec![F::zero(); self.cols];
                x[f] = F::one();
                for (r, &p) in pivots.iter().enumerate() {
                    x[p] = -m.get(r, f).clone();
                }
                x
            })
            .collect()
    }

    /// Basis of {y : y M = 0}.
    pub fn left_nullspace(&self) -> Vec<Vec<F>> {
        self.transpose().nullspace()
    }

    pub fn inverse(&self) -> Option<Self> {
        assert!(self.is_square());
        let n = self.rows;
        let mut aug = Self::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, F::one());
        }
        let (red, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let cols: Vec<usize> = (n..2 * n).collect();
        let rows: Vec<usize> = (0..n).collect();
        Some(red.submatrix(&rows, &cols))
    }
}

impl<R: fmt::Debug> fmt::Debug for Matrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{}x{}]", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| format!("{:?}", self.data[i * self.cols + j])).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn q(rows: &[&[i64]]) -> Matrix<BigRational> {
        let cols = rows[0].len();
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| BigRational::from_i64(x)).collect()).collect(), cols)
    }

    #[test]
    fn inverse_and_rank() {
        let a = q(&[&[2, 1], &[1, 1]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), Matrix::identity(2));
        let s = q(&[&[1, 2], &[2, 4]]);
        assert!(s.inverse().is_none());
        assert_eq!(s.rank(), 1);
        let ns = s.nullspace();
        assert_eq!(ns.len(), 1);
        let col = Matrix::from_rows(vec![ns[0].clone()], 2).transpose();
        assert!(s.mul(&col).is_zero());
    }

    #[test]
    fn kronecker_indexing() {
        let a = q(&[&[1, 2], &[3, 4]]);
        let b = q(&[&[0, 1], &[1, 0]]);
        let k = a.kron(&b);
        assert_eq!(*k.get(2 * 1 + 0, 2 * 0 + 1), BigRational::from_i64(3));
        assert_eq!(k.rows(), 4);
    }
}
