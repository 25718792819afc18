use num_rational::BigRational;
use serde::Serialize;

use super::{to_k, BasisPair, NsError, TensorModule};
use crate::arith::Specialize;
use crate::combinatorics::Partition;
use crate::linalg::{direct_sum_algebra_dim, Rep};

fn binom(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// The closed form for dim K n̂H_{r,2} next to the sum of squared
/// irreducible dimensions it comes from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DimensionFormula {
    pub r: usize,
    pub catalan: u128,
    pub value: u128,
    /// Σ (f_λ f_μ)² over two-row λ ▷ μ.
    pub pair_squares: u128,
    /// Σ (C(f_λ+1,2) - 1)² + C(f_λ,2)² over two-row λ that are not a row or column.
    pub sym_squares: u128,
    pub sum_of_squares: u128,
}

pub fn dimension_formula(r: usize) -> DimensionFormula {
    let n = r as u128;
    let catalan = binom(2 * n, n) / (n + 1);
    let h = n / 2;
    let value = binom(catalan, 2) + h + 2 - binom(n, h);
    let f: Vec<u128> = Partition::two_row_of_size(r).iter().map(Partition::num_syt).collect();
    let mut pair_squares = 0;
    for (i, a) in f.iter().enumerate() {
        for b in &f[i + 1..] {
            pair_squares += (a * b) * (a * b);
        }
    }
    let sym_squares = f.iter().filter(|&&x| x > 1).map(|&x| (binom(x + 1, 2) - 1).pow(2) + binom(x, 2).pow(2)).sum();
    DimensionFormula { r, catalan, value, pair_squares, sym_squares, sum_of_squares: pair_squares + sym_squares + 1 }
}

/// Dimension of the algebra generated by P_1..P_{r-1} specialized at u0 on
/// the faithful module ⊕ M_λ⊗M_μ over unordered two-row pairs. Specializing
/// can only lower the dimension, so this is a lower bound for the generic value.
pub fn dimension_oracle<F: Specialize>(r: usize, u0: &BigRational, bound: usize) -> Result<usize, NsError> {
    let shapes = Partition::two_row_of_size(r);
    let mut reps: Vec<Rep<F>> = Vec::new();
    for (i, a) in shapes.iter().enumerate() {
        for b in &shapes[i..] {
            let tm = TensorModule::new(a, b)?;
            let gens = tm
                .p_matrices(BasisPair::LowerLower)
                .iter()
                .map(|g| to_k(g).try_map(|e| F::specialize(e, u0).ok_or_else(|| NsError::Pole(u0.to_string()))))
                .collect::<Result<Vec<_>, _>>()?;
            reps.push(Rep::new(tm.dim(), gens));
        }
    }
    Ok(direct_sum_algebra_dim(&reps, bound)?)
}
