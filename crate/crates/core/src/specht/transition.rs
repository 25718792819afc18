use num_rational::BigRational;
use num_traits::One;

use super::{to_k, SpechtError, SpechtModule};
use crate::arith::RationalFn;
use crate::combinatorics::{Convention, Tableau};
use crate::linalg::{Matrix, Rep};

/// X with C'_Q = sum_{Q'} X_{Q',Q} C_{Q'}.
#[derive(Clone, Debug)]
pub struct Transition {
    pub x: Matrix<RationalFn>,
}

impl Transition {
    /// The unique module isomorphism from the lower realization to the upper
    /// one, scaled so that the superstandard tableau maps with coefficient 1.
    pub fn new(m: &SpechtModule) -> Result<Self, SpechtError> {
        let n = m.dim();
        if n == 1 {
            return Ok(Self { x: Matrix::identity(1) });
        }
        let source = m.rep(Convention::Lower);
        let target = Rep::new(n, (1..m.rank()).map(|s| to_k(&m.lower_generator_on_upper(s))).collect());
        let hom = target.hom_from(&source)?;
        if hom.dim() != 1 {
            return Err(SpechtError::HomDimension(hom.dim()));
        }
        let y = &hom.maps[0];
        let z = m.index_of(&Tableau::superstandard(m.shape())).expect("superstandard is standard");
        let scale = y.get(z, z).inv().ok_or_else(|| SpechtError::Precondition("zero diagonal entry".into()))?;
        Ok(Self { x: y.scale(&scale).transpose() })
    }

    /// Row Q holds C'_Q in upper coordinates; maps lower coordinate rows to upper ones.
    pub fn lower_to_upper(&self) -> Matrix<RationalFn> {
        self.x.transpose()
    }

    pub fn upper_to_lower(&self) -> Matrix<RationalFn> {
        self.lower_to_upper().inverse().expect("transition matrix is invertible")
    }

    pub fn at_zero(&self) -> Result<Matrix<BigRational>, SpechtError> {
        Ok(self.x.try_map(RationalFn::at_zero)?)
    }

    pub fn at_infinity(&self) -> Result<Matrix<BigRational>, SpechtError> {
        Ok(self.x.try_map(RationalFn::at_infinity)?)
    }

    /// Entries in K0 and K_inf, identity at both ends, and off-diagonal
    /// entries vanishing to order at least 1 at both ends.
    pub fn satisfies_theorem(&self) -> bool {
        self.x.entries().all(|(i, j, e)| {
            if i == j {
                e.in_k0() && e.in_kinf() && e.at_zero().is_ok_and(|v| v.is_one()) && e.at_infinity().is_ok_and(|v| v.is_one())
            } else {
                e.vanishes_at_both_ends()
            }
        })
    }
}
