use crate::arith::Field;

/// Incrementally built subspace in semi-echelon form.
///
/// Rows are kept in insertion order with a unit pivot that is zero in every
/// later row, so reduction can sweep the rows once.
#[derive(Clone, Debug)]
pub struct EchelonSpan<F> {
    len: usize,
    rows: Vec<(usize, Vec<F>)>,
}

impl<F: Field> EchelonSpan<F> {
    pub fn new(len: usize) -> Self {
        Self { len, rows: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient_len(&self) -> usize {
        self.len
    }

    pub fn reduce(&self, v: &mut [F]) {
        for (p, row) in &self.rows {
            if v[*p].is_zero() {
                continue;
            }
            let f = v[*p].clone();
            for (x, r) in v.iter_mut().zip(row).skip(*p) {
                if !r.is_zero() {
                    *x -= &f.mul_ref(r);
                }
            }
        }
    }

    /// Adds `v`; returns false if it was already in the span.
    pub fn insert(&mut self, mut v: Vec<F>) -> bool {
        assert_eq!(v.len(), self.len);
        self.reduce(&mut v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[p].inv().expect("nonzero pivot");
        for x in v.iter_mut().skip(p) {
            *x *= &inv;
        }
        self.rows.push((p, v));
        true
    }

    pub fn contains(&self, v: &[F]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(F::is_zero)
    }

    pub fn basis(&self) -> impl Iterator<Item = &[F]> {
        self.rows.iter().map(|(_, r)| r.as_slice())
    }

    /// Basis of the vectors `x` with `row . x = 0` for every stored row.
    pub fn annihilator(&self) -> Vec<Vec<F>> {
        let rows: Vec<Vec<F>> = self.rows.iter().map(|(_, r)| r.clone()).collect();
        if rows.is_empty() {
            return (0..self.len)
                .map(|i| {
                    let mut e = vec![F::zero(); self.len];
                    e[i] = F::one();
                    e
                })
                .collect();
        }
        super::Matrix::from_rows(rows, self.len).nullspace()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{Fp, Ring, PRIME_SMALL};

    type F = Fp<PRIME_SMALL>;

    fn v(x: &[i64]) -> Vec<F> {
        x.iter().map(|&a| F::from_i64(a)).collect()
    }

    #[test]
    fn span_membership() {
        let mut s = EchelonSpan::new(3);
        assert!(s.insert(v(&[1, 2, 3])));
        assert!(s.insert(v(&[0, 1, 1])));
        assert!(!s.insert(v(&[2, 5, 7])));
        assert!(s.contains(&v(&[1, 3, 4])));
        assert!(!s.contains(&v(&[0, 0, 1])));
        assert_eq!(s.annihilator().len(), 1);
    }
}
