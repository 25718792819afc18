use num_rational::BigRational;

use super::{to_k, SpechtError, SpechtModule, Transition};
use crate::arith::RationalFn;
use crate::combinatorics::{Convention, Partition, Tableau};
use crate::hecke::{cells, CellPartition};
use crate::linalg::{image_basis, Matrix, Rep};

/// Res_{H_{r-1}} of M_λ in the given basis: generators s = 1..r-2.
pub fn restricted_rep(m: &SpechtModule, side: Convention) -> Rep<RationalFn> {
    let k = m.rank().saturating_sub(2);
    Rep::new(m.dim(), m.actions(side)[..k].iter().map(to_k).collect())
}

/// Isotypic projectors of Res_{H_{r-1}} M_λ, one per corner of λ (west to
/// east), in one canonical basis.
#[derive(Clone, Debug)]
pub struct Projectors {
    pub side: Convention,
    pub shapes: Vec<Partition>,
    pub matrices: Vec<Matrix<RationalFn>>,
}

impl Projectors {
    /// Each isotypic component is the image of Hom(M_μ, Res M_λ); the
    /// projector onto it is taken along the sum of the others.
    pub fn new(m: &SpechtModule, side: Convention) -> Result<Self, SpechtError> {
        let lambda = m.shape();
        let n = m.dim();
        let shapes: Vec<Partition> = (0..lambda.corners().len()).map(|i| lambda.remove_corner(i)).collect();
        if shapes.len() == 1 {
            return Ok(Self { side, shapes, matrices: vec![Matrix::identity(n)] });
        }
        let target = restricted_rep(m, side);
        let mut blocks: Vec<Matrix<RationalFn>> = Vec::with_capacity(shapes.len());
        for mu in &shapes {
            let source = SpechtModule::new(mu)?.rep(side);
            let hom = target.hom_from(&source)?;
            if hom.dim() != 1 {
                return Err(SpechtError::HomDimension(hom.dim()));
            }
            blocks.push(image_basis(&hom.maps[0]));
        }
        let all = Matrix::stack(&blocks.iter().collect::<Vec<_>>());
        let inv = all.inverse().ok_or(crate::linalg::LinalgError::Singular)?;
        let mut matrices = Vec::with_capacity(blocks.len());
        let mut start = 0;
        for b in &blocks {
            let mut d = Matrix::zeros(n, n);
            for i in start..start + b.rows() {
                d.set(i, i, RationalFn::one());
            }
            matrices.push(inv.mul(&d).mul(&all));
            start += b.rows();
        }
        Ok(Self { side, shapes, matrices })
    }

    /// Projector onto the M_μ-isotypic component; zero when μ is not λ minus a corner.
    pub fn projector(&self, mu: &Partition) -> Matrix<RationalFn> {
        match self.shapes.iter().position(|s| s == mu) {
            Some(i) => self.matrices[i].clone(),
            None => {
                let n = self.matrices[0].rows();
                Matrix::zeros(n, n)
            }
        }
    }

    /// Rows are the projected canonical basis vectors p_{M_μ}(C_Q) with
    /// μ = sh(Q|_{[r-1]}), in coordinates of the same basis.
    pub fn projected_basis(&self, m: &SpechtModule) -> Matrix<RationalFn> {
        let n = m.dim();
        let r = m.rank();
        let rows = m
            .tableaux()
            .iter()
            .enumerate()
            .map(|(i, q)| {
                let mu = q.restrict(r.saturating_sub(1)).shape();
                self.projector(&mu).row_vec(i)
            })
            .collect();
        Matrix::from_rows(rows, n)
    }

    /// Reduces p_{M_μ}(x) modulo u L: coordinates on the projected basis vectors
    /// with restriction shape μ, evaluated at u = 0. All coordinates of x must lie in K0.
    pub fn lattice_reduce(&self, m: &SpechtModule, x: &[RationalFn], mu: &Partition) -> Result<Vec<(Tableau, BigRational)>, SpechtError> {
        if let Some(bad) = x.iter().find(|c| !c.in_k0()) {
            return Err(SpechtError::Precondition(format!("coordinate {bad} is not in K0")));
        }
        let y = self.projector(mu).left_apply(x);
        let r = m.rank();
        let mut out = Vec::new();
        for (i, q) in m.tableaux().iter().enumerate() {
            if &q.restrict(r.saturating_sub(1)).shape() == mu {
                out.push((q.clone(), y[i].at_zero()?));
            }
        }
        Ok(out)
    }
}

/// Q' ◁_r Q: the restriction shape of Q' strictly dominates that of Q.
pub fn restriction_less(a: &Tableau, b: &Tableau) -> bool {
    let r = a.size();
    a.restrict(r - 1).shape().strictly_dominates(&b.restrict(r - 1).shape())
}

/// Checks the projected-basis lemma: unitriangular with respect to ◁_r
/// (Q' ◁_r Q for the lower basis, Q' ▷_r Q for the upper one) and
/// off-diagonal entries in u K0 ∩ u^-1 K_inf.
pub fn check_projected_lemma(m: &SpechtModule, projected: &Matrix<RationalFn>, side: Convention) -> Result<(), String> {
    let t = m.tableaux();
    for (q, row) in projected.row_vectors().iter().enumerate() {
        for (qp, e) in row.iter().enumerate() {
            if qp == q {
                if !e.is_one() {
                    return Err(format!("diagonal entry at {} is {e}", t[q]));
                }
                continue;
            }
            if e.is_zero() {
                continue;
            }
            let ordered = match side {
                Convention::Lower => restriction_less(&t[qp], &t[q]),
                Convention::Upper => restriction_less(&t[q], &t[qp]),
            };
            if !ordered {
                return Err(format!("entry ({}, {}) = {e} violates triangularity", t[qp], t[q]));
            }
            if !e.vanishes_at_both_ends() {
                return Err(format!("entry ({}, {}) = {e} does not vanish at both ends", t[qp], t[q]));
            }
        }
    }
    Ok(())
}

/// Cells of Res_{H_{r-1}} M_λ in a canonical basis.
pub fn restriction_cells(m: &SpechtModule, side: Convention) -> CellPartition {
    let k = m.rank().saturating_sub(2);
    cells(m.dim(), &m.actions(side)[..k])
}

/// The restriction cells are the classes {Q : sh(Q|_{[r-1]}) = λ - a_i}, and
/// their order is total: i <= j for the lower basis, i >= j for the upper one.
pub fn check_restriction_order(m: &SpechtModule, side: Convention) -> Result<(), String> {
    let c = restriction_cells(m, side);
    let r = m.rank();
    let lambda = m.shape();
    let corners = lambda.corners().len();
    if c.num_blocks() != corners {
        return Err(format!("{} cells for {corners} corners", c.num_blocks()));
    }
    let mut corner_of_block = Vec::with_capacity(corners);
    for b in &c.blocks {
        let mu = m.tableaux()[b[0]].restrict(r - 1).shape();
        if b.iter().any(|&q| m.tableaux()[q].restrict(r - 1).shape() != mu) {
            return Err(format!("cell {b:?} mixes restriction shapes"));
        }
        let i = lambda.corner_index_of(&mu).ok_or("not a corner")?;
        corner_of_block.push(i);
    }
    for (a, &i) in corner_of_block.iter().enumerate() {
        for (b, &j) in corner_of_block.iter().enumerate() {
            let expected = match side {
                Convention::Lower => i <= j,
                Convention::Upper => i >= j,
            };
            if c.leq(a, b) != expected {
                return Err(format!("order between corners {i} and {j} is wrong"));
            }
        }
    }
    Ok(())
}

/// Each restriction cell, relabeled by Q -> Q|_{[r-1]}, carries exactly the
/// action matrices of M_{λ - a_i}.
pub fn check_restriction_isomorphism(m: &SpechtModule, side: Convention) -> Result<(), SpechtError> {
    let r = m.rank();
    if r < 2 {
        return Ok(());
    }
    for i in 0..m.shape().corners().len() {
        let mu = m.shape().remove_corner(i);
        let small = SpechtModule::new(&mu)?;
        let rows: Vec<usize> = small
            .tableaux()
            .iter()
            .map(|t| m.tableaux().iter().position(|q| q.restrict(r - 1) == *t).expect("restriction exists"))
            .collect();
        for s in 1..r - 1 {
            if m.action(side, s).submatrix(&rows, &rows) != *small.action(side, s) {
                return Err(SpechtError::Precondition(format!("restriction cell {mu} differs at s{s}")));
            }
        }
    }
    Ok(())
}

/// Lower coordinates lie in K0 exactly when upper coordinates do.
pub fn lattice_membership_agrees(t: &Transition, x: &[RationalFn]) -> bool {
    let upper = t.lower_to_upper().left_apply(x);
    x.iter().all(RationalFn::in_k0) == upper.iter().all(RationalFn::in_k0)
}
