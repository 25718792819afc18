use std::fmt::Display;

use super::SeminormalError;
use crate::arith::Field;
use crate::linalg::{image_basis, Matrix, Rep};

/// A one-dimensional piece at the bottom of the chain, its labels level r first.
#[derive(Clone, Debug)]
pub struct Leaf<L, F> {
    pub chain: Vec<L>,
    pub vector: Vec<F>,
}

/// Splits each top piece (label, basis rows in ambient coordinates) along
/// the chain of subalgebras generated by the first k-1 generators, k = r..2.
/// `irreps(k)` lists the rank-k irreducibles; every restriction must be
/// multiplicity free, which makes each split canonical.
pub fn chain_split<L, F, I>(gens: &[Matrix<F>], top: Vec<(L, Matrix<F>)>, r: usize, irreps: I) -> Result<Vec<Leaf<L, F>>, SeminormalError>
where
    L: Clone + Display,
    F: Field,
    I: Fn(usize) -> Result<Vec<(L, Rep<F>)>, SeminormalError>,
{
    let n = gens.first().map(Matrix::cols).unwrap_or(1);
    let mut pieces: Vec<(Vec<L>, Matrix<F>)> = top.into_iter().map(|(l, b)| (vec![l], b)).collect();
    for k in (3..=r).rev() {
        let ambient = Rep::new(n, gens[..k - 2].to_vec());
        let below = irreps(k - 1)?;
        let mut next = Vec::new();
        for (chain, basis) in pieces {
            let res = ambient.restrict_to(&basis)?;
            let mut covered = 0;
            for (label, irrep) in &below {
                let hom = res.hom_from(irrep)?;
                match hom.dim() {
                    0 => {}
                    1 => {
                        let child = image_basis(&hom.maps[0]).mul(&basis);
                        covered += child.rows();
                        let mut c = chain.clone();
                        c.push(label.clone());
                        next.push((c, child));
                    }
                    mult => return Err(SeminormalError::NotMultiplicityFree { label: label.to_string(), mult }),
                }
            }
            if covered != basis.rows() {
                let names: Vec<String> = chain.iter().map(ToString::to_string).collect();
                return Err(SeminormalError::Check(format!("restriction of {} covers {covered} of {} dimensions", names.join(" > "), basis.rows())));
            }
        }
        pieces = next;
    }
    pieces
        .into_iter()
        .map(|(chain, basis)| {
            if basis.rows() != 1 {
                return Err(SeminormalError::Check(format!("leaf of dimension {}", basis.rows())));
            }
            Ok(Leaf { chain, vector: basis.row_vec(0) })
        })
        .collect()
}
