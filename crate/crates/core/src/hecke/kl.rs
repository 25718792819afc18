use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use super::{HeckeError, SymmetricGroup};
use crate::arith::LaurentPoly;
use crate::combinatorics::Permutation;

/// Sparse column: (group index, coefficient), sorted by index.
pub type Sparse = Vec<(usize, LaurentPoly)>;

/// Both Kazhdan-Lusztig bases of H_r in terms of the standard basis, plus
/// the mu-coefficients.
pub struct KlTable {
    group: SymmetricGroup,
    lower: Vec<Sparse>,
    upper: Vec<Sparse>,
    mu: Vec<i64>,
    mu_lists: Vec<Vec<(usize, i64)>>,
    bar_t: OnceLock<Vec<Sparse>>,
}

pub(crate) fn add_scaled(acc: &mut [LaurentPoly], c: &LaurentPoly, col: &Sparse) {
    for (x, p) in col {
        let t = c * p;
        acc[*x] += &t;
    }
}

pub(crate) fn to_sparse(dense: Vec<LaurentPoly>) -> Sparse {
    dense.into_iter().enumerate().filter(|(_, p)| !p.is_zero()).collect()
}

impl KlTable {
    /// Runs the recursion C'_w = C'_v C'_s - sum_{z < v, zs < z} mu(z, v) C'_z
    /// over increasing length, with w = vs and s the first right descent of w.
    pub fn new(r: usize) -> Self {
        let group = SymmetricGroup::new(r);
        let n = group.order();
        let mut lower: Vec<Sparse> = Vec::with_capacity(n);
        for w in 0..n {
            let Some(s) = group.first_right_descent(w) else {
                lower.push(vec![(w, LaurentPoly::one())]);
                continue;
            };
            let v = group.right_mul(w, s);
            let mut acc = vec![LaurentPoly::zero(); n];
            for (x, p) in &lower[v] {
                let xs = group.right_mul(*x, s);
                acc[xs] += p;
                let shift = if group.length(xs) > group.length(*x) { -1 } else { 1 };
                acc[*x] += &p.shift(shift);
            }
            for (z, p) in &lower[v] {
                if *z == v || !group.has_right_descent(*z, s) {
                    continue;
                }
                let m = p.coeff(-1);
                if m != 0.into() {
                    add_scaled(&mut acc, &LaurentPoly::constant(-m), &lower[*z]);
                }
            }
            lower.push(to_sparse(acc));
        }
        Self::from_lower(group, lower)
    }

    fn from_lower(group: SymmetricGroup, lower: Vec<Sparse>) -> Self {
        let n = group.order();
        let mut mu = vec![0i64; n * n];
        for (w, col) in lower.iter().enumerate() {
            for (x, p) in col {
                if *x != w {
                    let m = i64::try_from(p.coeff(-1)).expect("mu fits in i64");
                    mu[x * n + w] = m;
                    mu[w * n + x] = m;
                }
            }
        }
        let mu_lists = (0..n).map(|w| (0..n).filter_map(|x| (mu[x * n + w] != 0).then(|| (x, mu[x * n + w]))).collect()).collect();
        // C_w = sum_x (-1)^{l(w)+l(x)} bar(P'_{x,w}) T_x, i.e. (-1)^{l(w)} theta(C'_w).
        let upper = lower
            .iter()
            .enumerate()
            .map(|(w, col)| {
                col.iter()
                    .map(|(x, p)| {
                        let b = p.bar();
                        (*x, if (group.length(w) + group.length(*x)) % 2 == 1 { -b } else { b })
                    })
                    .collect()
            })
            .collect();
        Self { group, lower, upper, mu, mu_lists, bar_t: OnceLock::new() }
    }

    pub fn group(&self) -> &SymmetricGroup {
        &self.group
    }

    pub fn rank(&self) -> usize {
        self.group.rank()
    }

    pub fn lower_column(&self, w: usize) -> &Sparse {
        &self.lower[w]
    }

    pub fn upper_column(&self, w: usize) -> &Sparse {
        &self.upper[w]
    }

    /// P'_{x,w}, the coefficient of T_x in C'_w.
    pub fn p_prime(&self, x: usize, w: usize) -> LaurentPoly {
        self.lower[w].iter().find(|(y, _)| *y == x).map(|(_, p)| p.clone()).unwrap_or_default()
    }

    pub fn mu_index(&self, x: usize, w: usize) -> i64 {
        self.mu[x * self.group.order() + w]
    }

    pub fn mu(&self, x: &Permutation, w: &Permutation) -> Result<i64, HeckeError> {
        Ok(self.mu_index(self.index(x)?, self.index(w)?))
    }

    /// Nonzero mu(x, w) for fixed w.
    pub fn mu_neighbors(&self, w: usize) -> &[(usize, i64)] {
        &self.mu_lists[w]
    }

    pub fn index(&self, w: &Permutation) -> Result<usize, HeckeError> {
        self.group.index_of(w).ok_or(HeckeError::WrongRank { expected: self.rank(), got: w.size() })
    }

    /// bar(T_w) = T_{w^-1}^{-1} in the standard basis, from
    /// bar(T_{ys}) = bar(T_y)(T_s + u^-1 - u).
    pub fn bar_standard(&self, w: usize) -> &Sparse {
        &self.bar_t.get_or_init(|| {
            let n = self.group.order();
            let mut out: Vec<Sparse> = Vec::with_capacity(n);
            for w in 0..n {
                let Some(s) = self.group.first_right_descent(w) else {
                    out.push(vec![(w, LaurentPoly::one())]);
                    continue;
                };
                let y = self.group.right_mul(w, s);
                let mut dense = vec![LaurentPoly::zero(); n];
                for (x, p) in &out[y] {
                    dense[*x] += p;
                }
                let mut next = self.right_mul_t(&dense, s);
                let c = LaurentPoly::u_inv() - LaurentPoly::u();
                for (x, p) in &out[y] {
                    next[*x] += &(p * &c);
                }
                out.push(to_sparse(next));
            }
            out
        })[w]
    }

    /// Dense standard-basis vector times T_s.
    pub fn right_mul_t(&self, v: &[LaurentPoly], s: usize) -> Vec<LaurentPoly> {
        let g = &self.group;
        let mut out = vec![LaurentPoly::zero(); v.len()];
        let q = LaurentPoly::u() - LaurentPoly::u_inv();
        for (x, p) in v.iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            let xs = g.right_mul(x, s);
            out[xs] += p;
            if g.length(xs) < g.length(x) {
                out[x] += &(p * &q);
            }
        }
        out
    }

    /// T_s times a dense standard-basis vector.
    pub fn left_mul_t(&self, v: &[LaurentPoly], s: usize) -> Vec<LaurentPoly> {
        let g = &self.group;
        let mut out = vec![LaurentPoly::zero(); v.len()];
        let q = LaurentPoly::u() - LaurentPoly::u_inv();
        for (x, p) in v.iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            let sx = g.left_mul(x, s);
            out[sx] += p;
            if g.length(sx) < g.length(x) {
                out[x] += &(p * &q);
            }
        }
        out
    }

    pub fn to_cache(&self) -> KlCache {
        KlCache {
            version: KlCache::VERSION,
            r: self.rank(),
            lower: self.lower.iter().map(|col| col.iter().map(|(x, p)| (*x, p.to_string())).collect()).collect(),
        }
    }

    pub fn from_cache(cache: &KlCache) -> Result<Self, HeckeError> {
        if cache.version != KlCache::VERSION {
            return Err(HeckeError::Cache(format!("version {} (expected {})", cache.version, KlCache::VERSION)));
        }
        let group = SymmetricGroup::new(cache.r);
        if cache.lower.len() != group.order() {
            return Err(HeckeError::Cache("wrong number of columns".into()));
        }
        let mut lower = Vec::with_capacity(group.order());
        for (w, col) in cache.lower.iter().enumerate() {
            let mut parsed: Sparse = Vec::with_capacity(col.len());
            for (x, s) in col {
                let p: LaurentPoly = s.parse().map_err(|e| HeckeError::Cache(format!("{e}")))?;
                parsed.push((*x, p));
            }
            let diagonal_ok = parsed.last().is_some_and(|(x, p)| *x == w && p.is_one());
            let tail_ok = parsed.iter().all(|(x, p)| *x == w || p.max_exp().is_some_and(|e| e < 0));
            if !diagonal_ok || !tail_ok {
                return Err(HeckeError::Cache(format!("column {w} is not unitriangular")));
            }
            lower.push(parsed);
        }
        Ok(Self::from_lower(group, lower))
    }
}

/// On-disk form of a KL table.
#[derive(Serialize, Deserialize)]
pub struct KlCache {
    pub version: u32,
    pub r: usize,
    pub lower: Vec<Vec<(usize, String)>>,
}

impl KlCache {
    pub const VERSION: u32 = 1;
}
