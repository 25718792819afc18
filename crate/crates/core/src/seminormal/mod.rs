//! Seminormal bases of tensor products of two-row Specht modules along the
//! chain of nonstandard subalgebras generated by P_1, ..., P_{k-1}, and the
//! bijection α from pairs of tableaux to their chain labels.

mod chain;

pub use chain::{chain_split, Leaf};

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;
use thiserror::Error;

use crate::arith::Field;
use crate::combinatorics::{syt_enumerate, CombError, Partition, Tableau};
use crate::linalg::{EchelonSpan, LinalgError, Matrix, Rep};
use crate::nonstandard::{build_irreducible, decompose_tensor, NsError, NsIrredLabel, NsSubmodule, TensorModule};
use crate::specht::{SpechtError, SpechtModule};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeminormalError {
    #[error(transparent)]
    Ns(#[from] NsError),
    #[error(transparent)]
    Specht(#[from] SpechtError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Comb(#[from] CombError),
    #[error("{0} is not a two-row partition")]
    NotTwoRow(String),
    #[error("{label} occurs {mult} times in a restriction")]
    NotMultiplicityFree { label: String, mult: usize },
    #[error("{0}")]
    Check(String),
}

/// Labels of the irreducibles containing a basis vector, level r first and level 2 last.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ChainLabel(pub Vec<NsIrredLabel>);

impl ChainLabel {
    /// The label at level k, 2 <= k <= r.
    pub fn at_level(&self, k: usize) -> Option<&NsIrredLabel> {
        let r = self.0.len() + 1;
        (2..=r).contains(&k).then(|| &self.0[r - k])
    }
}

impl fmt::Display for ChainLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join(" > "))
    }
}

impl fmt::Debug for ChainLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Y_λ: entries 2c-1, 2c down column c for each column of height 2, then
/// the remaining entries along the first row.
pub fn y_tableau(lambda: &Partition) -> Result<Tableau, SeminormalError> {
    if !lambda.is_two_row() {
        return Err(SeminormalError::NotTwoRow(lambda.to_string()));
    }
    let h = lambda.part(1);
    let mut top: Vec<usize> = (0..h).map(|c| 2 * c + 1).collect();
    let bottom: Vec<usize> = (0..h).map(|c| 2 * c + 2).collect();
    top.extend(2 * h + 1..=lambda.size());
    let rows = if h == 0 { vec![top] } else { vec![top, bottom] };
    Ok(Tableau::standard(rows)?)
}

/// Index, west to east, of the corner holding the largest entry.
fn corner_of_max(t: &Tableau) -> usize {
    let pos = t.position(t.size()).expect("nonempty tableau");
    t.shape().corners().iter().position(|&c| c == pos).expect("largest entry sits in a corner")
}

/// α_{λ,μ}(T, U) as its chain of labels, computed recursively on T|_{[r-1]}, U|_{[r-1]}.
pub fn alpha(t: &Tableau, u: &Tableau) -> Result<ChainLabel, SeminormalError> {
    let (lambda, mu) = (t.shape(), u.shape());
    for p in [&lambda, &mu] {
        if !p.is_two_row() {
            return Err(SeminormalError::NotTwoRow(p.to_string()));
        }
    }
    let r = lambda.size();
    if mu.size() != r {
        return Err(SeminormalError::Check(format!("{t} and {u} have different sizes")));
    }
    if r < 2 {
        return Ok(ChainLabel(vec![]));
    }
    let below = if r > 2 { alpha(&t.restrict(r - 1), &u.restrict(r - 1))?.0 } else { vec![] };
    let top = if lambda != mu {
        NsIrredLabel::pair(lambda, mu)
    } else if *t == y_tableau(&lambda)? && *u == y_tableau(&mu)? {
        NsIrredLabel::EpsPlus
    } else {
        let (i, j) = (corner_of_max(t), corner_of_max(u));
        match i.cmp(&j) {
            std::cmp::Ordering::Less => NsIrredLabel::Plus(lambda),
            std::cmp::Ordering::Greater => NsIrredLabel::Minus(lambda),
            std::cmp::Ordering::Equal => match below.first() {
                Some(NsIrredLabel::Minus(_)) => NsIrredLabel::Minus(lambda),
                _ => NsIrredLabel::Plus(lambda),
            },
        }
    };
    let mut chain = vec![top];
    chain.extend(below);
    Ok(ChainLabel(chain))
}

/// Grid of level-k labels of α over SYT(λ) × SYT(μ) in canonical order.
pub fn seminormal_table(lambda: &Partition, mu: &Partition, level: usize) -> Result<Vec<Vec<NsIrredLabel>>, SeminormalError> {
    let (ts, us) = (syt_enumerate(lambda), syt_enumerate(mu));
    ts.iter()
        .map(|t| {
            us.iter()
                .map(|u| {
                    let chain = alpha(t, u)?;
                    chain.at_level(level).cloned().ok_or_else(|| SeminormalError::Check(format!("no level {level} for rank {}", lambda.size())))
                })
                .collect()
        })
        .collect()
}

/// A seminormal basis at a specialization, vectors in lower⊗lower coordinates.
#[derive(Clone, Debug)]
pub struct SeminormalBasis {
    pub ambient: TensorModule,
    pub u0: BigRational,
    pub vectors: Vec<Vec<BigRational>>,
    pub chains: Vec<ChainLabel>,
}

impl SeminormalBasis {
    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn vector_for(&self, chain: &ChainLabel) -> Option<&[BigRational]> {
        self.chains.iter().position(|c| c == chain).map(|i| self.vectors[i].as_slice())
    }

    /// Leaves grouped by their level-r label.
    pub fn counts_by_top(&self) -> BTreeMap<NsIrredLabel, usize> {
        let mut out = BTreeMap::new();
        for c in &self.chains {
            if let Some(top) = c.0.first() {
                *out.entry(top.clone()).or_insert(0) += 1;
            }
        }
        out
    }
}

fn specialize(m: &Matrix<crate::arith::RationalFn>, u0: &BigRational) -> Result<Matrix<BigRational>, NsError> {
    Ok(m.try_map(|e| e.specialize(u0).map_err(|_| NsError::Pole(u0.to_string())))?)
}

fn ambient_gens(tm: &TensorModule, u0: &BigRational) -> Result<Vec<Matrix<BigRational>>, SeminormalError> {
    Ok(tm.rep().gens().iter().map(|g| specialize(g, u0)).collect::<Result<_, _>>()?)
}

/// The rank-k irreducibles specialized at u0.
fn ns_irreps(k: usize, u0: &BigRational) -> Result<Vec<(NsIrredLabel, Rep<BigRational>)>, SeminormalError> {
    NsIrredLabel::all(k)
        .into_iter()
        .map(|l| {
            let rep = build_irreducible(&l, k)?.specialize::<BigRational>(u0)?;
            Ok((l, rep))
        })
        .collect()
}

fn finish(ambient: TensorModule, u0: &BigRational, leaves: Vec<Leaf<NsIrredLabel, BigRational>>) -> SeminormalBasis {
    let mut pairs: Vec<(ChainLabel, Vec<BigRational>)> = leaves.into_iter().map(|l| (ChainLabel(l.chain), normalize(l.vector))).collect();
    pairs.sort_by(|a, b| a.0.cmp(&b.0));
    let (chains, vectors) = pairs.into_iter().unzip();
    SeminormalBasis { ambient, u0: u0.clone(), vectors, chains }
}

/// Scales so that the first nonzero coordinate is 1.
pub fn normalize<F: Field>(mut v: Vec<F>) -> Vec<F> {
    if let Some(p) = v.iter().find(|x| !x.is_zero()) {
        let inv = p.inv().expect("nonzero");
        for x in v.iter_mut() {
            *x *= &inv;
        }
    }
    v
}

/// Seminormal basis of M_λ ⊗ M_μ: the union of those of its irreducible summands.
pub fn seminormal_basis(lambda: &Partition, mu: &Partition, u0: &BigRational) -> Result<SeminormalBasis, SeminormalError> {
    let parts = decompose_tensor(lambda, mu)?;
    let ambient = parts[0].ambient.clone();
    let top = parts.iter().map(|p| Ok((p.label.clone(), specialize(&p.basis, u0)?))).collect::<Result<Vec<_>, SeminormalError>>()?;
    let gens = ambient_gens(&ambient, u0)?;
    let leaves = chain_split(&gens, top, lambda.size(), |k| ns_irreps(k, u0))?;
    Ok(finish(ambient, u0, leaves))
}

/// Seminormal basis of one irreducible.
pub fn seminormal_basis_of(m: &NsSubmodule, u0: &BigRational) -> Result<SeminormalBasis, SeminormalError> {
    let gens = ambient_gens(&m.ambient, u0)?;
    let top = vec![(m.label.clone(), specialize(&m.basis, u0)?)];
    let leaves = chain_split(&gens, top, m.rank(), |k| ns_irreps(k, u0))?;
    Ok(finish(m.ambient.clone(), u0, leaves))
}

/// Span of the L-isotypic component of the whole ambient module restricted
/// to the level-k subalgebra: the images of every map in Hom(N_L, Res).
fn isotypic_span(gens: &[Matrix<BigRational>], n: usize, k: usize, irrep: &Rep<BigRational>) -> Result<EchelonSpan<BigRational>, SeminormalError> {
    let res = Rep::new(n, gens[..k - 1].to_vec());
    let mut span = EchelonSpan::new(n);
    for map in res.hom_from(irrep)?.maps {
        for row in map.row_vectors() {
            span.insert(row);
        }
    }
    Ok(span)
}

/// Checks that every vector lies in the isotypic component named by its chain
/// at every level, computed afresh on the whole ambient module.
pub fn check_chain_membership(b: &SeminormalBasis) -> Result<(), SeminormalError> {
    let gens = ambient_gens(&b.ambient, &b.u0)?;
    let n = b.ambient.dim();
    let r = b.ambient.rank();
    let mut cache: BTreeMap<(usize, NsIrredLabel), EchelonSpan<BigRational>> = BTreeMap::new();
    for (v, chain) in b.vectors.iter().zip(&b.chains) {
        for k in 2..=r {
            let label = chain.at_level(k).expect("full chain");
            let key = (k, label.clone());
            if !cache.contains_key(&key) {
                let irrep = build_irreducible(label, k)?.specialize::<BigRational>(&b.u0)?;
                cache.insert(key.clone(), isotypic_span(&gens, n, k, &irrep)?);
            }
            if !cache[&key].contains(v) {
                return Err(SeminormalError::Check(format!("vector for {chain} is outside the {label} component at level {k}")));
            }
        }
    }
    Ok(())
}

/// α is a bijection onto the chains of the computed basis.
pub fn check_alpha_bijection(b: &SeminormalBasis) -> Result<(), SeminormalError> {
    let (lambda, mu) = b.ambient.shapes();
    let mut images = BTreeSet::new();
    for t in syt_enumerate(lambda) {
        for u in syt_enumerate(mu) {
            if !images.insert(alpha(&t, &u)?) {
                return Err(SeminormalError::Check(format!("α is not injective at ({t}, {u})")));
            }
        }
    }
    let leaves: BTreeSet<ChainLabel> = b.chains.iter().cloned().collect();
    if leaves.len() != b.len() || images != leaves {
        return Err(SeminormalError::Check("α images differ from the seminormal leaves".into()));
    }
    Ok(())
}

/// Young seminormal vectors of M_λ along H_1 ⊆ ... ⊆ H_r at u0, indexed by
/// the tableau read off each chain of shapes.
pub fn specht_seminormal(lambda: &Partition, u0: &BigRational) -> Result<Vec<(Tableau, Vec<BigRational>)>, SeminormalError> {
    let m = SpechtModule::new(lambda)?;
    let r = lambda.size();
    let gens: Vec<Matrix<BigRational>> = m.rep(crate::combinatorics::Convention::Lower).gens().iter().map(|g| specialize(g, u0)).collect::<Result<_, _>>()?;
    let irreps = |k: usize| -> Result<Vec<(Partition, Rep<BigRational>)>, SeminormalError> {
        Partition::two_row_of_size(k)
            .into_iter()
            .map(|p| {
                let rep = SpechtModule::new(&p)?.rep(crate::combinatorics::Convention::Lower);
                let gens = rep.gens().iter().map(|g| specialize(g, u0)).collect::<Result<Vec<_>, _>>()?;
                Ok((p.clone(), Rep::new(rep.dim(), gens)))
            })
            .collect()
    };
    let top = vec![(lambda.clone(), Matrix::identity(m.dim()))];
    let leaves = chain_split(&gens, top, r, irreps)?;
    leaves
        .into_iter()
        .map(|l| {
            // Shapes λ = sh_r ⊃ sh_{r-1} ⊃ ... ⊃ sh_2 determine the tableau.
            let mut shapes = l.chain.clone();
            shapes.push(Partition::row(1));
            let mut rows: Vec<Vec<usize>> = vec![vec![1]];
            for k in (0..shapes.len() - 1).rev() {
                let (big, small) = (&shapes[k], &shapes[k + 1]);
                let row = (0..big.len()).find(|&i| big.part(i) != small.part(i)).expect("shapes differ by a box");
                if rows.len() <= row {
                    rows.push(vec![]);
                }
                rows[row].push(r - k);
            }
            Ok((Tableau::standard(rows)?, normalize(l.vector)))
        })
        .collect()
}

/// Comparison of the nonstandard seminormal basis of M_λ ⊗ M_μ with the
/// product basis v_T ⊗ v_U from the chain H_k ⊗ H_k.
#[derive(Clone, Debug, Serialize)]
pub struct TensorChainComparison {
    /// Pairs (T, U) whose nonstandard vector α(T, U) is parallel to v_T ⊗ v_U.
    pub parallel: usize,
    /// Pairs whose product vector is parallel to some nonstandard leaf.
    pub parallel_any: usize,
    pub total: usize,
    /// The first pair, in canonical order, where the two lines differ.
    pub first_difference: Option<(String, String)>,
}

pub fn compare_with_tensor_chain(lambda: &Partition, mu: &Partition, u0: &BigRational) -> Result<TensorChainComparison, SeminormalError> {
    let b = seminormal_basis(lambda, mu, u0)?;
    let left = specht_seminormal(lambda, u0)?;
    let right = specht_seminormal(mu, u0)?;
    let find = |list: &[(Tableau, Vec<BigRational>)], t: &Tableau| list.iter().find(|(s, _)| s == t).map(|(_, v)| v.clone()).expect("every tableau has a vector");
    let mut parallel = 0;
    let mut parallel_any = 0;
    let mut first_difference = None;
    let (ts, us) = (syt_enumerate(lambda), syt_enumerate(mu));
    for t in &ts {
        for u in &us {
            let (vt, vu) = (find(&left, t), find(&right, u));
            let product: Vec<BigRational> = vt.iter().flat_map(|a| vu.iter().map(move |c| a * c)).collect();
            let product = normalize(product);
            if b.vectors.contains(&product) {
                parallel_any += 1;
            }
            let ns = b.vector_for(&alpha(t, u)?).expect("α lands on a leaf");
            if product == ns {
                parallel += 1;
            } else if first_difference.is_none() {
                first_difference = Some((t.to_string(), u.to_string()));
            }
        }
    }
    Ok(TensorChainComparison { parallel, parallel_any, total: ts.len() * us.len(), first_difference })
}

/// Whether a vector is zero; used by callers checking leaves.
pub fn is_zero_vector(v: &[BigRational]) -> bool {
    v.iter().all(Zero::is_zero)
}

#[cfg(test)]
mod tests;
