//! The nonstandard Hecke algebra generated by P_s = C'_s⊗C'_s + C_s⊗C_s
//! acting on tensor products of two-row Specht modules, and its
//! irreducibles through the Temperley-Lieb quotient.
//!
//! For two-row shapes the Specht action matrices already factor through
//! H_{r,2}, so the matrices of [`SpechtModule`] are reused unchanged.

mod action;
mod dimension;
mod irreducible;
mod label;
mod restriction;

pub use action::{antipode_check, AntipodeReport};
pub use dimension::{dimension_formula, dimension_oracle, DimensionFormula};
pub use irreducible::{build_irreducible, certify, decompose_tensor, distinct_irreducibles, eps_minus, NsSubmodule};
pub use label::NsIrredLabel;
pub use restriction::{predict_restriction, restriction_case, restriction_decompose};

use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::{quantum_int, ArithError, LaurentPoly, RationalFn};
use crate::combinatorics::{Convention, Partition};
use crate::hecke::HeckeError;
use crate::linalg::{LinalgError, Matrix};
use crate::specht::{SpechtError, SpechtModule, Transition};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NsError {
    #[error(transparent)]
    Specht(#[from] SpechtError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error(transparent)]
    Hecke(#[from] HeckeError),
    #[error("invalid label: {0}")]
    BadLabel(String),
    #[error("{0} is not a two-row partition")]
    NotTwoRow(String),
    #[error("no case formula for the {0:?} basis pair")]
    UnsupportedPair(BasisPair),
    #[error("specialization at u = {0} hits a pole or degenerates")]
    Pole(String),
    #[error("{0}")]
    Check(String),
}

/// Which canonical basis each tensor factor is written in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BasisPair {
    /// C'_T ⊗ C'_U
    LowerLower,
    /// C_T ⊗ C'_U
    UpperLower,
    /// C_T ⊗ C_U
    UpperUpper,
    /// C'_T ⊗ C_U, the coordinates of the trace map.
    LowerUpper,
}

impl BasisPair {
    pub const ALL: [BasisPair; 4] = [BasisPair::LowerLower, BasisPair::UpperLower, BasisPair::UpperUpper, BasisPair::LowerUpper];

    pub fn sides(self) -> (Convention, Convention) {
        match self {
            BasisPair::LowerLower => (Convention::Lower, Convention::Lower),
            BasisPair::UpperLower => (Convention::Upper, Convention::Lower),
            BasisPair::UpperUpper => (Convention::Upper, Convention::Upper),
            BasisPair::LowerUpper => (Convention::Lower, Convention::Upper),
        }
    }
}

/// M_λ ⊗ M_μ with coordinates indexed by SYT(λ) × SYT(μ), pair (a, b) at a·|SYT(μ)| + b.
#[derive(Clone, Debug)]
pub struct TensorModule {
    left: SpechtModule,
    right: SpechtModule,
    left_t: Transition,
    right_t: Transition,
}

impl TensorModule {
    pub fn new(lambda: &Partition, mu: &Partition) -> Result<Self, NsError> {
        for p in [lambda, mu] {
            if !p.is_two_row() {
                return Err(NsError::NotTwoRow(p.to_string()));
            }
        }
        if lambda.size() != mu.size() {
            return Err(NsError::BadLabel(format!("{lambda} and {mu} have different sizes")));
        }
        let left = SpechtModule::new(lambda)?;
        let right = SpechtModule::new(mu)?;
        let left_t = Transition::new(&left)?;
        let right_t = Transition::new(&right)?;
        Ok(Self { left, right, left_t, right_t })
    }

    pub fn rank(&self) -> usize {
        self.left.rank()
    }

    pub fn shapes(&self) -> (&Partition, &Partition) {
        (self.left.shape(), self.right.shape())
    }

    pub fn factors(&self) -> (&SpechtModule, &SpechtModule) {
        (&self.left, &self.right)
    }

    pub fn transitions(&self) -> (&Transition, &Transition) {
        (&self.left_t, &self.right_t)
    }

    pub fn dim(&self) -> usize {
        self.left.dim() * self.right.dim()
    }

    pub fn index(&self, a: usize, b: usize) -> usize {
        a * self.right.dim() + b
    }

    pub fn split(&self, i: usize) -> (usize, usize) {
        (i / self.right.dim(), i % self.right.dim())
    }

    pub fn is_square(&self) -> bool {
        self.left.shape() == self.right.shape()
    }

    /// The flip a⊗b -> b⊗a, defined when λ = μ.
    pub fn flip(&self) -> Option<Matrix<LaurentPoly>> {
        if !self.is_square() {
            return None;
        }
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for a in 0..self.left.dim() {
            for b in 0..self.right.dim() {
                m.set(self.index(a, b), self.index(b, a), LaurentPoly::one());
            }
        }
        Some(m)
    }

    /// (C'_s, C_s) on one factor written in the given basis.
    fn factor_generators(m: &SpechtModule, side: Convention, s: usize) -> (Matrix<LaurentPoly>, Matrix<LaurentPoly>) {
        match side {
            Convention::Lower => (m.action(side, s).clone(), m.upper_generator_on_lower(s)),
            Convention::Upper => (m.lower_generator_on_upper(s), m.action(side, s).clone()),
        }
    }

    /// P_s = C'_s⊗C'_s + C_s⊗C_s built from the factor matrices.
    pub fn p_matrix(&self, s: usize, pair: BasisPair) -> Matrix<LaurentPoly> {
        let (sl, sr) = pair.sides();
        let (lp, lc) = Self::factor_generators(&self.left, sl, s);
        let (rp, rc) = Self::factor_generators(&self.right, sr, s);
        lp.kron(&rp).add(&lc.kron(&rc))
    }

    /// Q_s = [2]² - P_s = -C'_s⊗C_s - C_s⊗C'_s.
    pub fn q_matrix(&self, s: usize, pair: BasisPair) -> Matrix<LaurentPoly> {
        let two = quantum_int(2);
        Matrix::scalar(self.dim(), &(&two * &two)).sub(&self.p_matrix(s, pair))
    }

    /// Q_s from its own definition, without going through P_s.
    pub fn q_matrix_direct(&self, s: usize, pair: BasisPair) -> Matrix<LaurentPoly> {
        let (sl, sr) = pair.sides();
        let (lp, lc) = Self::factor_generators(&self.left, sl, s);
        let (rp, rc) = Self::factor_generators(&self.right, sr, s);
        lp.kron(&rc).add(&lc.kron(&rp)).scale(&LaurentPoly::constant(-1))
    }

    pub fn p_matrices(&self, pair: BasisPair) -> Vec<Matrix<LaurentPoly>> {
        (1..self.rank()).map(|s| self.p_matrix(s, pair)).collect()
    }

    /// Row change of coordinates from lower⊗lower to the given pair.
    pub fn from_lower_lower(&self, pair: BasisPair) -> Matrix<RationalFn> {
        let (sl, sr) = pair.sides();
        let conv = |t: &Transition, side: Convention, n: usize| match side {
            Convention::Lower => Matrix::identity(n),
            Convention::Upper => t.lower_to_upper(),
        };
        conv(&self.left_t, sl, self.left.dim()).kron(&conv(&self.right_t, sr, self.right.dim()))
    }

    /// Row change of coordinates from the given pair to lower⊗lower.
    pub fn to_lower_lower(&self, pair: BasisPair) -> Matrix<RationalFn> {
        let (sl, sr) = pair.sides();
        let conv = |t: &Transition, side: Convention, n: usize| match side {
            Convention::Lower => Matrix::identity(n),
            Convention::Upper => t.upper_to_lower(),
        };
        conv(&self.left_t, sl, self.left.dim()).kron(&conv(&self.right_t, sr, self.right.dim()))
    }
}

/// Specialization points tried in order: 7/3, then 11/5 and 13/7.
pub fn default_points() -> Vec<BigRational> {
    [(7, 3), (11, 5), (13, 7)].iter().map(|&(a, b)| BigRational::new(a.into(), b.into())).collect()
}

pub(crate) fn to_k(m: &Matrix<LaurentPoly>) -> Matrix<RationalFn> {
    m.map(|p| RationalFn::from_poly(p.clone()))
}

#[cfg(test)]
mod tests;
