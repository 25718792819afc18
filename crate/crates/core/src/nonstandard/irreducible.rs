use num_rational::BigRational;

use super::{to_k, BasisPair, NsError, NsIrredLabel, TensorModule};
use crate::arith::{RationalFn, Ring, Specialize};
use crate::combinatorics::{de_distance, Partition};
use crate::linalg::{Matrix, Rep};

impl TensorModule {
    fn diagonal_pattern(&self) -> Result<Vec<RationalFn>, NsError> {
        if !self.is_square() {
            return Err(NsError::Check(format!("{}⊗{} is not a tensor square", self.shapes().0, self.shapes().1)));
        }
        let mut v = vec![RationalFn::zero(); self.dim()];
        for q in 0..self.factors().0.dim() {
            v[self.index(q, q)] = RationalFn::one();
        }
        Ok(v)
    }

    /// Σ_Q C'_Q ⊗ C_Q in lower⊗lower coordinates.
    pub fn eps_plus(&self) -> Result<Vec<RationalFn>, NsError> {
        Ok(self.to_lower_lower(BasisPair::LowerUpper).left_apply(&self.diagonal_pattern()?))
    }

    /// Σ_Q C_Q ⊗ C'_Q in lower⊗lower coordinates.
    pub fn eps_plus_upper_lower(&self) -> Result<Vec<RationalFn>, NsError> {
        Ok(self.to_lower_lower(BasisPair::UpperLower).left_apply(&self.diagonal_pattern()?))
    }

    /// Σ a^{TU} C'_T⊗C_U ↦ (1/f) Σ_U a^{UU}, for x in lower⊗lower coordinates.
    pub fn trace(&self, x: &[RationalFn]) -> Result<RationalFn, NsError> {
        let f = self.factors().0.dim();
        let lu = self.from_lower_lower(BasisPair::LowerUpper).left_apply(x);
        let mut sum = RationalFn::zero();
        for q in 0..f {
            sum += &lu[self.index(q, q)];
        }
        sum *= &RationalFn::from_int(f as i64).inv().expect("nonzero");
        Ok(sum)
    }

    /// The module over K with the P_s acting on lower⊗lower coordinates.
    pub fn rep(&self) -> Rep<RationalFn> {
        Rep::new(self.dim(), self.p_matrices(BasisPair::LowerLower).iter().map(to_k).collect())
    }
}

/// Σ_Q (-1)^{ℓ(Q)} C'_{Qᵗ} ⊗ C'_Q in M_{λ'} ⊗ M_λ, ℓ the DE distance to Z*.
pub fn eps_minus(lambda: &Partition) -> Result<(TensorModule, Vec<RationalFn>), NsError> {
    let tm = TensorModule::new(&lambda.conjugate(), lambda)?;
    let (left, right) = tm.factors();
    let mut v = vec![RationalFn::zero(); tm.dim()];
    for (b, q) in right.tableaux().iter().enumerate() {
        let a = left.index_of(&q.transpose()).expect("transpose is standard");
        let sign = if de_distance(q) % 2 == 0 { 1 } else { -1 };
        v[tm.index(a, b)] = RationalFn::from_int(sign);
    }
    Ok((tm, v))
}

/// A P-stable subspace of a tensor module carrying one irreducible.
#[derive(Clone, Debug)]
pub struct NsSubmodule {
    pub label: NsIrredLabel,
    pub ambient: TensorModule,
    /// Basis vectors as rows, in lower⊗lower coordinates.
    pub basis: Matrix<RationalFn>,
}

impl NsSubmodule {
    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn rank(&self) -> usize {
        self.ambient.rank()
    }

    pub fn is_closed(&self) -> bool {
        self.ambient.rep().is_invariant(&self.basis)
    }

    pub fn rep(&self) -> Result<Rep<RationalFn>, NsError> {
        Ok(self.ambient.rep().restrict_to(&self.basis)?)
    }

    /// The action on this submodule specialized at u = u0.
    pub fn specialize<F: Specialize>(&self, u0: &BigRational) -> Result<Rep<F>, NsError> {
        let pole = || NsError::Pole(u0.to_string());
        let spec = |m: &Matrix<RationalFn>| m.try_map(|e| F::specialize(e, u0).ok_or_else(pole));
        let gens = self.ambient.p_matrices(BasisPair::LowerLower).iter().map(|g| spec(&to_k(g))).collect::<Result<Vec<_>, _>>()?;
        let ambient = Rep::new(self.ambient.dim(), gens);
        let basis = spec(&self.basis)?;
        ambient.restrict_to(&basis).map_err(|_| pole())
    }
}

fn unit(n: usize, i: usize) -> Vec<RationalFn> {
    let mut e = vec![RationalFn::zero(); n];
    e[i] = RationalFn::one();
    e
}

/// The submodule realizing `label` at rank r.
pub fn build_irreducible(label: &NsIrredLabel, r: usize) -> Result<NsSubmodule, NsError> {
    label.validate(r)?;
    let half = RationalFn::from_int(2).inv().expect("nonzero");
    let (ambient, rows) = match label {
        NsIrredLabel::Pair(a, b) => {
            let tm = TensorModule::new(a, b)?;
            let n = tm.dim();
            (tm, (0..n).map(|i| unit(n, i)).collect::<Vec<_>>())
        }
        NsIrredLabel::Plus(a) => {
            let tm = TensorModule::new(a, a)?;
            let f = tm.factors().0.dim();
            let eps = tm.eps_plus()?;
            let mut rows = Vec::new();
            for x in 0..f {
                for y in x..f {
                    // The canonical-order minimum is the excluded diagonal tableau.
                    if x == 0 && y == 0 {
                        continue;
                    }
                    let mut v = vec![RationalFn::zero(); tm.dim()];
                    v[tm.index(x, y)] += &half;
                    v[tm.index(y, x)] += &half;
                    let t = tm.trace(&v)?;
                    for (vi, ei) in v.iter_mut().zip(&eps) {
                        *vi -= &t.mul_ref(ei);
                    }
                    rows.push(v);
                }
            }
            (tm, rows)
        }
        NsIrredLabel::Minus(a) => {
            let tm = TensorModule::new(a, a)?;
            let f = tm.factors().0.dim();
            let mut rows = Vec::new();
            for x in 0..f {
                for y in x + 1..f {
                    let mut v = vec![RationalFn::zero(); tm.dim()];
                    v[tm.index(x, y)] = RationalFn::one();
                    v[tm.index(y, x)] = -RationalFn::one();
                    rows.push(v);
                }
            }
            (tm, rows)
        }
        NsIrredLabel::EpsPlus => {
            let row = Partition::row(r);
            let tm = TensorModule::new(&row, &row)?;
            let eps = tm.eps_plus()?;
            (tm, vec![eps])
        }
    };
    let n = ambient.dim();
    Ok(NsSubmodule { label: label.clone(), basis: Matrix::from_rows(rows, n), ambient })
}

/// Commutant dimension of the specialized action at u0, over Q.
pub fn certify(m: &NsSubmodule, u0: &BigRational) -> Result<usize, NsError> {
    Ok(m.specialize::<BigRational>(u0)?.commutant_dim())
}

/// The summands of M_λ ⊗ M_μ: the module itself when λ ≠ μ, otherwise
/// S' ⊕ Λ² ⊕ ε₊ with zero summands dropped.
pub fn decompose_tensor(lambda: &Partition, mu: &Partition) -> Result<Vec<NsSubmodule>, NsError> {
    let r = lambda.size();
    if lambda != mu {
        return Ok(vec![build_irreducible(&NsIrredLabel::pair(lambda.clone(), mu.clone()), r)?]);
    }
    let tm = TensorModule::new(lambda, mu)?;
    let mut out = Vec::new();
    if lambda.num_syt() > 1 {
        out.push(build_irreducible(&NsIrredLabel::Plus(lambda.clone()), r)?);
        out.push(build_irreducible(&NsIrredLabel::Minus(lambda.clone()), r)?);
    }
    let n = tm.dim();
    out.push(NsSubmodule { label: NsIrredLabel::EpsPlus, basis: Matrix::from_rows(vec![tm.eps_plus()?], n), ambient: tm });
    Ok(out)
}

/// All irreducibles at rank r.
pub fn distinct_irreducibles(r: usize) -> Result<Vec<NsSubmodule>, NsError> {
    NsIrredLabel::all(r).iter().map(|l| build_irreducible(l, r)).collect()
}

impl NsSubmodule {
    /// Hom(self, other) at u0 over Q.
    pub fn hom_dim_to(&self, other: &NsSubmodule, u0: &BigRational) -> Result<usize, NsError> {
        let source = self.specialize::<BigRational>(u0)?;
        let target = other.specialize::<BigRational>(u0)?;
        Ok(target.hom_from(&source)?.dim())
    }
}
