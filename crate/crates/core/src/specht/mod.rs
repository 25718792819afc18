//! Specht modules M_λ realized on right cells of S_r, with both canonical
//! bases, the lower-to-upper transition matrix, and projected bases for the
//! restriction to H_{r-1}.

mod projector;
mod transition;

pub use projector::{
    check_projected_lemma, check_restriction_isomorphism, check_restriction_order, lattice_membership_agrees, restricted_rep,
    restriction_cells, restriction_less, Projectors,
};
pub use transition::Transition;

use std::collections::HashMap;

use thiserror::Error;

use crate::arith::{quantum_int, ArithError, LaurentPoly, RationalFn};
use crate::combinatorics::{rsk_inverse, syt_enumerate, Convention, Partition, Permutation, Tableau};
use crate::hecke::{kl_table, Basis, HeckeError};
use crate::linalg::{LinalgError, Matrix, Rep};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpechtError {
    #[error(transparent)]
    Hecke(#[from] HeckeError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error("{0} is not a tableau of shape {1}")]
    WrongShape(String, String),
    #[error("expected a one-dimensional Hom space, got {0}")]
    HomDimension(usize),
    #[error("precondition violated: {0}")]
    Precondition(String),
}

/// M_λ with its lower and upper canonical bases labeled by SYT(λ).
#[derive(Clone, Debug)]
pub struct SpechtModule {
    shape: Partition,
    tableaux: Vec<Tableau>,
    index: HashMap<Tableau, usize>,
    /// C'_s on the lower basis, s = 1..r-1.
    lower: Vec<Matrix<LaurentPoly>>,
    /// C_s on the upper basis.
    upper: Vec<Matrix<LaurentPoly>>,
    mu_lower: Vec<Vec<i64>>,
    mu_upper: Vec<Vec<i64>>,
}

impl SpechtModule {
    /// Realizes M_λ on the cells with insertion tableau the first SYT in
    /// canonical order (transposed for the lower basis).
    pub fn new(shape: &Partition) -> Result<Self, SpechtError> {
        let p = syt_enumerate(shape).into_iter().next().expect("every shape has a tableau");
        Self::from_cell(shape, &p)
    }

    /// Realization on the right cells Γ_P and Γ'_P for a chosen P of shape λ.
    pub fn from_cell(shape: &Partition, p: &Tableau) -> Result<Self, SpechtError> {
        if &p.shape() != shape || !p.is_standard() {
            return Err(SpechtError::WrongShape(p.to_string(), shape.to_string()));
        }
        let r = shape.size();
        let tableaux = syt_enumerate(shape);
        let index: HashMap<Tableau, usize> = tableaux.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect();
        let n = tableaux.len();
        if r <= 1 {
            let unit = vec![vec![0]];
            return Ok(Self { shape: shape.clone(), tableaux, index, lower: vec![], upper: vec![], mu_lower: unit.clone(), mu_upper: unit });
        }
        let table = kl_table(r)?;
        let g = table.group();
        let upper_cell: Vec<Permutation> = tableaux.iter().map(|q| rsk_inverse(p, q)).collect::<Result<_, _>>().expect("same shapes");
        let pt = p.transpose();
        let lower_cell: Vec<Permutation> =
            tableaux.iter().map(|q| rsk_inverse(&pt, &q.transpose())).collect::<Result<_, _>>().expect("same shapes");
        let mut lower = Vec::with_capacity(r - 1);
        let mut upper = Vec::with_capacity(r - 1);
        for s in 1..r {
            for (cell, basis, out) in [(&lower_cell, Basis::Lower, &mut lower), (&upper_cell, Basis::Upper, &mut upper)] {
                let pos: HashMap<&Permutation, usize> = cell.iter().enumerate().map(|(i, w)| (w, i)).collect();
                let mut m = Matrix::zeros(n, n);
                for (i, w) in cell.iter().enumerate() {
                    for (x, c) in table.right_multiply_canonical(w, s, basis)?.coords() {
                        if let Some(&j) = pos.get(x) {
                            m.set(i, j, c.clone());
                        }
                    }
                }
                out.push(m);
            }
        }
        let mu_of = |cell: &[Permutation]| -> Vec<Vec<i64>> {
            let idx: Vec<usize> = cell.iter().map(|w| g.index_of(w).unwrap()).collect();
            idx.iter().map(|&a| idx.iter().map(|&b| table.mu_index(a, b)).collect()).collect()
        };
        let mu_lower = mu_of(&lower_cell);
        let mu_upper = mu_of(&upper_cell);
        Ok(Self { shape: shape.clone(), tableaux, index, lower, upper, mu_lower, mu_upper })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rank(&self) -> usize {
        self.shape.size()
    }

    pub fn dim(&self) -> usize {
        self.tableaux.len()
    }

    pub fn tableaux(&self) -> &[Tableau] {
        &self.tableaux
    }

    pub fn index_of(&self, t: &Tableau) -> Option<usize> {
        self.index.get(t).copied()
    }

    /// μ(Q', Q) as read from the cell realizing the given basis.
    pub fn mu(&self, side: Convention, a: usize, b: usize) -> i64 {
        match side {
            Convention::Lower => self.mu_lower[a][b],
            Convention::Upper => self.mu_upper[a][b],
        }
    }

    /// C'_s on the lower basis (row i is the image of C'_{Q_i}) or C_s on the upper basis.
    pub fn action(&self, side: Convention, s: usize) -> &Matrix<LaurentPoly> {
        match side {
            Convention::Lower => &self.lower[s - 1],
            Convention::Upper => &self.upper[s - 1],
        }
    }

    pub fn actions(&self, side: Convention) -> &[Matrix<LaurentPoly>] {
        match side {
            Convention::Lower => &self.lower,
            Convention::Upper => &self.upper,
        }
    }

    /// The same action built from tableau descent sets and the μ table.
    pub fn action_from_formula(&self, side: Convention, s: usize) -> Matrix<LaurentPoly> {
        let n = self.dim();
        let two = quantum_int(2);
        let diag = if side == Convention::Lower { two } else { -two };
        let mut m = Matrix::zeros(n, n);
        for (i, q) in self.tableaux.iter().enumerate() {
            if q.has_descent(s, side) {
                m.set(i, i, diag.clone());
                continue;
            }
            for (j, q2) in self.tableaux.iter().enumerate() {
                let mu = self.mu(side, j, i);
                if mu != 0 && q2.has_descent(s, side) {
                    m.set(i, j, LaurentPoly::constant(mu));
                }
            }
        }
        m
    }

    /// T_s in the given basis: C'_s - u^-1 on the lower basis, C_s + u on the upper one.
    pub fn standard_action(&self, side: Convention, s: usize) -> Matrix<LaurentPoly> {
        let n = self.dim();
        let shift = match side {
            Convention::Lower => -LaurentPoly::u_inv(),
            Convention::Upper => LaurentPoly::u(),
        };
        self.action(side, s).add(&Matrix::scalar(n, &shift))
    }

    /// C'_s acting on the upper basis, i.e. C_s + [2].
    pub fn lower_generator_on_upper(&self, s: usize) -> Matrix<LaurentPoly> {
        self.upper[s - 1].add(&Matrix::scalar(self.dim(), &quantum_int(2)))
    }

    /// C_s acting on the lower basis, i.e. C'_s - [2].
    pub fn upper_generator_on_lower(&self, s: usize) -> Matrix<LaurentPoly> {
        self.lower[s - 1].sub(&Matrix::scalar(self.dim(), &quantum_int(2)))
    }

    /// Image of a coordinate vector under the generator of the given basis.
    pub fn act(&self, v: &[LaurentPoly], s: usize, side: Convention) -> Vec<LaurentPoly> {
        self.action(side, s).left_apply(v)
    }

    pub fn rep(&self, side: Convention) -> Rep<RationalFn> {
        Rep::new(self.dim(), self.actions(side).iter().map(to_k).collect())
    }

    /// Quadratic and braid relations of the T_s matrices in the given basis.
    pub fn satisfies_hecke_relations(&self, side: Convention) -> bool {
        let r = self.rank();
        let n = self.dim();
        let t: Vec<Matrix<LaurentPoly>> = (1..r).map(|s| self.standard_action(side, s)).collect();
        let quad_ok = t.iter().all(|m| {
            let a = m.sub(&Matrix::scalar(n, &LaurentPoly::u()));
            let b = m.add(&Matrix::scalar(n, &LaurentPoly::u_inv()));
            a.mul(&b).is_zero()
        });
        let braid_ok = (0..t.len()).all(|i| {
            (i + 1..t.len()).all(|j| {
                if j == i + 1 {
                    t[i].mul(&t[j]).mul(&t[i]) == t[j].mul(&t[i]).mul(&t[j])
                } else {
                    t[i].mul(&t[j]) == t[j].mul(&t[i])
                }
            })
        });
        quad_ok && braid_ok
    }
}

pub(crate) fn to_k(m: &Matrix<LaurentPoly>) -> Matrix<RationalFn> {
    m.map(|p| RationalFn::from_poly(p.clone()))
}

#[cfg(test)]
mod tests;
