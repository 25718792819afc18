//! Finite-dimensional representations given by generator matrices, in the
//! row-vector convention: `v . g` is `g.left_apply(v)`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{EchelonSpan, LinalgError, Matrix};
use crate::arith::Field;

#[derive(Clone, Debug)]
pub struct Rep<F> {
    dim: usize,
    gens: Vec<Matrix<F>>,
}

/// Vectors reached from a start vector by generator words, with their parents.
#[derive(Clone, Debug)]
pub struct Spin<F> {
    pub vectors: Vec<Vec<F>>,
    /// `words[l] = Some((parent, generator))`, `None` for the start vector.
    pub words: Vec<Option<(usize, usize)>>,
}

/// A basis of Hom(N, V), each map as a `dim N x dim V` matrix.
#[derive(Clone, Debug)]
pub struct HomSpace<F> {
    pub maps: Vec<Matrix<F>>,
}

impl<F> HomSpace<F> {
    pub fn dim(&self) -> usize {
        self.maps.len()
    }
}

impl<F: Field> Rep<F> {
    pub fn new(dim: usize, gens: Vec<Matrix<F>>) -> Self {
        for g in &gens {
            assert!(g.rows() == dim && g.cols() == dim, "generator size mismatch");
        }
        Self { dim, gens }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn gens(&self) -> &[Matrix<F>] {
        &self.gens
    }

    /// The representation restricted to the first `k` generators.
    pub fn truncate_gens(&self, k: usize) -> Self {
        Self { dim: self.dim, gens: self.gens[..k].to_vec() }
    }

    pub fn spin(&self, start: &[F]) -> Spin<F> {
        let mut span = EchelonSpan::new(self.dim);
        let mut spin = Spin { vectors: Vec::new(), words: Vec::new() };
        if !span.insert(start.to_vec()) {
            return spin;
        }
        spin.vectors.push(start.to_vec());
        spin.words.push(None);
        let mut next = 0;
        while next < spin.vectors.len() {
            for (g, m) in self.gens.iter().enumerate() {
                let w = m.left_apply(&spin.vectors[next]);
                if span.insert(w.clone()) {
                    spin.vectors.push(w);
                    spin.words.push(Some((next, g)));
                }
            }
            next += 1;
        }
        spin
    }

    /// Candidate start vectors: unit vectors, then seeded pseudo-random combinations.
    fn candidates(&self) -> impl Iterator<Item = Vec<F>> + '_ {
        let n = self.dim;
        let units = (0..n).map(move |i| {
            let mut e = vec![F::zero(); n];
            e[i] = F::one();
            e
        });
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        let randoms = (0..8).map(move |_| (0..n).map(|_| F::from_i64(rng.gen_range(-9..=9))).collect());
        units.chain(randoms)
    }

    pub fn find_cyclic(&self) -> Option<Spin<F>> {
        if self.dim == 0 {
            return None;
        }
        self.candidates().map(|v| self.spin(&v)).find(|s| s.vectors.len() == self.dim)
    }

    /// Matrices of the generator words recorded in `spin`, acting on `self`.
    fn word_matrices(&self, spin: &Spin<F>) -> Vec<Matrix<F>> {
        let mut out: Vec<Matrix<F>> = Vec::with_capacity(spin.words.len());
        for w in &spin.words {
            let m = match w {
                None => Matrix::identity(self.dim),
                Some((parent, g)) => out[*parent].mul(&self.gens[*g]),
            };
            out.push(m);
        }
        out
    }

    /// Hom(source, self) using a cyclic spin of `source`.
    pub fn hom_from_spin(&self, source: &Rep<F>, spin: &Spin<F>) -> Result<HomSpace<F>, LinalgError> {
        if source.gens.len() != self.gens.len() {
            return Err(LinalgError::DimensionMismatch);
        }
        let k = source.dim;
        if spin.vectors.len() != k {
            return Err(LinalgError::NotCyclic);
        }
        let basis = Matrix::from_rows(spin.vectors.clone(), k);
        let binv = basis.inverse().ok_or(LinalgError::Singular)?;
        let words = self.word_matrices(spin);
        let n = self.dim;
        let mut constraints = EchelonSpan::new(n);
        for (l, nl) in spin.vectors.iter().enumerate() {
            for (g, gm) in source.gens.iter().enumerate() {
                let image = gm.left_apply(nl);
                let coords = binv.left_apply(&image);
                let mut rel = words[l].mul(&self.gens[g]);
                for (m, c) in coords.iter().enumerate() {
                    if !c.is_zero() {
                        rel = rel.sub(&words[m].scale(c));
                    }
                }
                for j in 0..n {
                    let col = rel.column(j);
                    if col.iter().any(|x| !x.is_zero()) {
                        constraints.insert(col);
                    }
                }
            }
        }
        let maps = constraints
            .annihilator()
            .into_iter()
            .map(|y| {
                let images: Vec<Vec<F>> = words.iter().map(|w| w.left_apply(&y)).collect();
                binv.mul(&Matrix::from_rows(images, n))
            })
            .collect();
        Ok(HomSpace { maps })
    }

    /// Hom(source, self) for a cyclic `source` (e.g. an irreducible).
    pub fn hom_from(&self, source: &Rep<F>) -> Result<HomSpace<F>, LinalgError> {
        let spin = source.find_cyclic().ok_or(LinalgError::NotCyclic)?;
        self.hom_from_spin(source, &spin)
    }

    /// Dimension of the commutant {X : X g = g X for all generators}.
    pub fn commutant_dim(&self) -> usize {
        match self.find_cyclic() {
            Some(spin) => self.hom_from_spin(self, &spin).expect("cyclic spin").dim(),
            None => self.commutant_basis_direct().len(),
        }
    }

    /// Basis of the commutant algebra as matrices.
    pub fn commutant_basis(&self) -> Vec<Matrix<F>> {
        match self.find_cyclic() {
            Some(spin) => self.hom_from_spin(self, &spin).expect("cyclic spin").maps,
            None => self.commutant_basis_direct(),
        }
    }

    /// Solves X g = g X with dim^2 unknowns; fallback for non-cyclic modules.
    fn commutant_basis_direct(&self) -> Vec<Matrix<F>> {
        let n = self.dim;
        let mut eqs = EchelonSpan::new(n * n);
        for g in &self.gens {
            for i in 0..n {
                for j in 0..n {
                    // (X g)_{ij} - (g X)_{ij} = sum_k X_{ik} g_{kj} - g_{ik} X_{kj}
                    let mut row = vec![F::zero(); n * n];
                    for k in 0..n {
                        row[i * n + k] += g.get(k, j);
                        row[k * n + j] -= g.get(i, k);
                    }
                    if row.iter().any(|x| !x.is_zero()) {
                        eqs.insert(row);
                    }
                }
            }
        }
        eqs.annihilator()
            .into_iter()
            .map(|x| Matrix::from_rows(x.chunks(n).map(<[F]>::to_vec).collect(), n))
            .collect()
    }

    /// The representation on an invariant subspace given by independent rows.
    pub fn restrict_to(&self, basis: &Matrix<F>) -> Result<Rep<F>, LinalgError> {
        let k = basis.rows();
        let (_, pivots) = basis.rref();
        if pivots.len() != k {
            return Err(LinalgError::Singular);
        }
        let rows: Vec<usize> = (0..k).collect();
        let square_inv = basis.submatrix(&rows, &pivots).inverse().ok_or(LinalgError::Singular)?;
        let mut gens = Vec::with_capacity(self.gens.len());
        for g in &self.gens {
            let image = basis.mul(g);
            let t = image.submatrix(&rows, &pivots).mul(&square_inv);
            if t.mul(basis) != image {
                return Err(LinalgError::NotInvariant);
            }
            gens.push(t);
        }
        Ok(Rep::new(k, gens))
    }

    /// Checks that the row space of `basis` is stable under every generator.
    pub fn is_invariant(&self, basis: &Matrix<F>) -> bool {
        let mut span = EchelonSpan::new(self.dim);
        for r in basis.row_vectors() {
            span.insert(r);
        }
        basis.row_vectors().iter().all(|v| self.gens.iter().all(|g| span.contains(&g.left_apply(v))))
    }

    /// Dimension of the unital algebra generated by the generators.
    pub fn algebra_dim(&self, bound: usize) -> Result<usize, LinalgError> {
        let n = self.dim;
        let flat = |m: &Matrix<F>| (0..n).flat_map(|i| m.row_vec(i)).collect::<Vec<F>>();
        let mut span = EchelonSpan::new(n * n);
        let mut elems = vec![Matrix::identity(n)];
        span.insert(flat(&elems[0]));
        let mut next = 0;
        while next < elems.len() {
            for g in &self.gens {
                let m = elems[next].mul(g);
                if span.insert(flat(&m)) {
                    elems.push(m);
                    if elems.len() > bound {
                        return Err(LinalgError::NoConvergence(bound));
                    }
                }
            }
            next += 1;
        }
        Ok(elems.len())
    }
}

/// Dimension of the unital algebra generated by the block-diagonal generators
/// of a direct sum; all summands must have the same number of generators.
pub fn direct_sum_algebra_dim<F: Field>(reps: &[Rep<F>], bound: usize) -> Result<usize, LinalgError> {
    let k = reps.first().map_or(0, |r| r.gens.len());
    if reps.iter().any(|r| r.gens.len() != k) {
        return Err(LinalgError::DimensionMismatch);
    }
    let len: usize = reps.iter().map(|r| r.dim * r.dim).sum();
    let flat = |blocks: &[Matrix<F>]| blocks.iter().flat_map(|m| (0..m.rows()).flat_map(move |i| m.row_vec(i))).collect::<Vec<F>>();
    let mut span = EchelonSpan::new(len);
    let mut elems: Vec<Vec<Matrix<F>>> = vec![reps.iter().map(|r| Matrix::identity(r.dim)).collect()];
    span.insert(flat(&elems[0]));
    let mut next = 0;
    while next < elems.len() {
        for g in 0..k {
            let m: Vec<Matrix<F>> = elems[next].iter().zip(reps).map(|(e, r)| e.mul(&r.gens[g])).collect();
            if span.insert(flat(&m)) {
                elems.push(m);
                if elems.len() > bound {
                    return Err(LinalgError::NoConvergence(bound));
                }
            }
        }
        next += 1;
    }
    Ok(elems.len())
}

/// Image of a homomorphism given as a matrix: its row space.
pub fn image_basis<F: Field>(map: &Matrix<F>) -> Matrix<F> {
    let mut span = EchelonSpan::new(map.cols());
    let mut rows = Vec::new();
    for r in map.row_vectors() {
        if span.insert(r.clone()) {
            rows.push(r);
        }
    }
    Matrix::from_rows(rows, map.cols())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Ring;
    use num_rational::BigRational;

    fn q(rows: &[&[i64]]) -> Matrix<BigRational> {
        let cols = rows[0].len();
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| BigRational::from_i64(x)).collect()).collect(), cols)
    }

    #[test]
    fn permutation_module_commutant() {
        // S_3 acting on Q^3 by the transpositions (12), (23): trivial + standard.
        let s1 = q(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 1]]);
        let s2 = q(&[&[1, 0, 0], &[0, 0, 1], &[0, 1, 0]]);
        let rep = Rep::new(3, vec![s1.clone(), s2.clone()]);
        assert_eq!(rep.commutant_dim(), 2);
        assert_eq!(rep.commutant_basis_direct().len(), 2);
        assert_eq!(rep.algebra_dim(100).unwrap(), 1 + 4);
        assert_eq!(direct_sum_algebra_dim(&[rep.clone(), rep.clone()], 100).unwrap(), 5);
        let trivial = Rep::new(1, vec![q(&[&[1]]), q(&[&[1]])]);
        let hom = rep.hom_from(&trivial).unwrap();
        assert_eq!(hom.dim(), 1);
        let phi = &hom.maps[0];
        assert_eq!(phi.mul(&s1), phi.clone());
        let sign = Rep::new(1, vec![q(&[&[-1]]), q(&[&[-1]])]);
        assert_eq!(rep.hom_from(&sign).unwrap().dim(), 0);
    }

    #[test]
    fn restriction_to_invariant_subspace() {
        let s1 = q(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 1]]);
        let rep = Rep::new(3, vec![s1]);
        let sum_zero = q(&[&[1, -1, 0], &[0, 1, -1]]);
        let sub = rep.restrict_to(&sum_zero).unwrap();
        assert_eq!(sub.dim(), 2);
        assert!(rep.restrict_to(&q(&[&[1, 0, 0]])).is_err());
    }
}
