use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::kl::{add_scaled, to_sparse, KlTable};
use super::HeckeError;
use crate::arith::{quantum_int, LaurentPoly};
use crate::combinatorics::Permutation;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    /// T_w
    Standard,
    /// C'_w
    Lower,
    /// C_w
    Upper,
}

/// Element of H_r as sparse coordinates in one of the three bases.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeckeElement {
    r: usize,
    basis: Basis,
    coords: BTreeMap<Permutation, LaurentPoly>,
}

impl HeckeElement {
    pub fn zero(r: usize, basis: Basis) -> Self {
        Self { r, basis, coords: BTreeMap::new() }
    }

    pub fn basis_element(w: Permutation, basis: Basis) -> Self {
        let mut e = Self::zero(w.size(), basis);
        e.coords.insert(w, LaurentPoly::one());
        e
    }

    pub fn identity(r: usize) -> Self {
        Self::basis_element(Permutation::identity(r), Basis::Standard)
    }

    pub fn from_terms(r: usize, basis: Basis, terms: impl IntoIterator<Item = (Permutation, LaurentPoly)>) -> Self {
        let mut e = Self::zero(r, basis);
        for (w, c) in terms {
            assert_eq!(w.size(), r, "permutation of the wrong size");
            e.add_term(w, &c);
        }
        e
    }

    pub fn rank(&self) -> usize {
        self.r
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn coords(&self) -> &BTreeMap<Permutation, LaurentPoly> {
        &self.coords
    }

    pub fn coeff(&self, w: &Permutation) -> LaurentPoly {
        self.coords.get(w).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn add_term(&mut self, w: Permutation, c: &LaurentPoly) {
        let entry = self.coords.entry(w.clone()).or_default();
        *entry += c;
        if entry.is_zero() {
            self.coords.remove(&w);
        }
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        Self::from_terms(self.r, self.basis, self.coords.iter().map(|(w, p)| (w.clone(), p * c)))
    }

    pub fn add(&self, other: &Self) -> Result<Self, HeckeError> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (w, c) in &other.coords {
            out.add_term(w.clone(), c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, HeckeError> {
        self.add(&other.scale(&LaurentPoly::constant(-1)))
    }

    fn check_compatible(&self, other: &Self) -> Result<(), HeckeError> {
        if self.r != other.r {
            return Err(HeckeError::WrongRank { expected: self.r, got: other.r });
        }
        if self.basis != other.basis {
            return Err(HeckeError::BasisMismatch);
        }
        Ok(())
    }
}

impl KlTable {
    fn check(&self, a: &HeckeElement) -> Result<(), HeckeError> {
        if a.rank() != self.rank() {
            return Err(HeckeError::WrongRank { expected: self.rank(), got: a.rank() });
        }
        Ok(())
    }

    /// Standard-basis coordinates as a dense vector over the group index.
    pub fn to_dense(&self, a: &HeckeElement) -> Result<Vec<LaurentPoly>, HeckeError> {
        self.check(a)?;
        let n = self.group().order();
        let mut out = vec![LaurentPoly::zero(); n];
        for (w, c) in a.coords() {
            let w = self.index(w)?;
            match a.basis() {
                Basis::Standard => out[w] += c,
                Basis::Lower => add_scaled(&mut out, c, self.lower_column(w)),
                Basis::Upper => add_scaled(&mut out, c, self.upper_column(w)),
            }
        }
        Ok(out)
    }

    /// Expresses a dense standard-basis vector in `basis` by a triangular solve.
    pub fn from_dense(&self, dense: Vec<LaurentPoly>, basis: Basis) -> HeckeElement {
        let g = self.group();
        let r = self.rank();
        if basis == Basis::Standard {
            return HeckeElement::from_terms(r, basis, to_sparse(dense).into_iter().map(|(x, p)| (g.element(x).clone(), p)));
        }
        let mut rest = dense;
        let mut out = HeckeElement::zero(r, basis);
        for x in (0..g.order()).rev() {
            if rest[x].is_zero() {
                continue;
            }
            let c = std::mem::take(&mut rest[x]);
            let col = if basis == Basis::Lower { self.lower_column(x) } else { self.upper_column(x) };
            add_scaled(&mut rest, &-&c, col);
            rest[x] = LaurentPoly::zero();
            out.add_term(g.element(x).clone(), &c);
        }
        out
    }

    pub fn convert(&self, a: &HeckeElement, basis: Basis) -> Result<HeckeElement, HeckeError> {
        if a.basis() == basis {
            self.check(a)?;
            return Ok(a.clone());
        }
        Ok(self.from_dense(self.to_dense(a)?, basis))
    }

    pub fn kl_lower(&self, w: &Permutation) -> Result<HeckeElement, HeckeError> {
        self.convert(&HeckeElement::basis_element(w.clone(), Basis::Lower), Basis::Standard)
    }

    pub fn kl_upper(&self, w: &Permutation) -> Result<HeckeElement, HeckeError> {
        self.convert(&HeckeElement::basis_element(w.clone(), Basis::Upper), Basis::Standard)
    }

    /// Product in the standard basis.
    pub fn multiply(&self, a: &HeckeElement, b: &HeckeElement) -> Result<HeckeElement, HeckeError> {
        let da = self.to_dense(a)?;
        let db = self.to_dense(b)?;
        let g = self.group();
        let mut out = vec![LaurentPoly::zero(); g.order()];
        for (y, c) in db.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mut v = da.clone();
            for s in g.element(y).reduced_word() {
                v = self.right_mul_t(&v, s);
            }
            for (x, p) in v.iter().enumerate() {
                if !p.is_zero() {
                    out[x] += &(p * c);
                }
            }
        }
        Ok(self.from_dense(out, Basis::Standard))
    }

    /// Semilinear bar involution: coefficients barred, bar(T_w) = T_{w^-1}^{-1}.
    pub fn bar_element(&self, a: &HeckeElement) -> Result<HeckeElement, HeckeError> {
        let d = self.to_dense(a)?;
        let mut out = vec![LaurentPoly::zero(); d.len()];
        for (x, c) in d.iter().enumerate() {
            if !c.is_zero() {
                add_scaled(&mut out, &c.bar(), self.bar_standard(x));
            }
        }
        Ok(self.from_dense(out, Basis::Standard))
    }

    /// The A-linear involution with theta(T_s) = -T_s^{-1}; theta(T_x) = (-1)^{l(x)} bar(T_x).
    pub fn theta(&self, a: &HeckeElement) -> Result<HeckeElement, HeckeError> {
        let d = self.to_dense(a)?;
        let mut out = vec![LaurentPoly::zero(); d.len()];
        for (x, c) in d.iter().enumerate() {
            if !c.is_zero() {
                let c = if self.group().length(x) % 2 == 1 { -c } else { c.clone() };
                add_scaled(&mut out, &c, self.bar_standard(x));
            }
        }
        Ok(self.from_dense(out, Basis::Standard))
    }

    /// The anti-automorphism T_w -> T_{w^-1}.
    pub fn one_op(&self, a: &HeckeElement) -> Result<HeckeElement, HeckeError> {
        let d = self.to_dense(a)?;
        let mut out = vec![LaurentPoly::zero(); d.len()];
        for (x, c) in d.into_iter().enumerate() {
            out[self.group().inverse(x)] = c;
        }
        Ok(self.from_dense(out, Basis::Standard))
    }

    pub fn theta_op(&self, a: &HeckeElement) -> Result<HeckeElement, HeckeError> {
        self.theta(&self.one_op(a)?)
    }

    /// C'_s or C_s as an element.
    pub fn generator(&self, s: usize, basis: Basis) -> Result<HeckeElement, HeckeError> {
        if s == 0 || s >= self.rank() {
            return Err(HeckeError::BadGenerator(s, self.rank()));
        }
        Ok(HeckeElement::basis_element(Permutation::generator(self.rank(), s), basis))
    }

    /// C'_w C'_s (lower) or C_w C_s (upper) from the descent/mu formula.
    pub fn right_multiply_canonical(&self, w: &Permutation, s: usize, basis: Basis) -> Result<HeckeElement, HeckeError> {
        if s == 0 || s >= self.rank() {
            return Err(HeckeError::BadGenerator(s, self.rank()));
        }
        let g = self.group();
        let wi = self.index(w)?;
        let r = self.rank();
        match basis {
            Basis::Standard => Err(HeckeError::BasisMismatch),
            Basis::Lower | Basis::Upper => {
                if g.has_right_descent(wi, s) {
                    let two = quantum_int(2);
                    let c = if basis == Basis::Lower { two } else { -two };
                    return Ok(HeckeElement::from_terms(r, basis, [(w.clone(), c)]));
                }
                let terms = self
                    .mu_neighbors(wi)
                    .iter()
                    .filter(|(x, _)| g.has_right_descent(*x, s))
                    .map(|(x, m)| (g.element(*x).clone(), LaurentPoly::constant(*m)));
                Ok(HeckeElement::from_terms(r, basis, terms))
            }
        }
    }

    /// Right action of a canonical generator on a canonical basis element,
    /// computed by multiplying in the standard basis and converting back.
    pub fn right_multiply_by_product(&self, w: &Permutation, s: usize, basis: Basis) -> Result<HeckeElement, HeckeError> {
        let a = HeckeElement::basis_element(w.clone(), basis);
        let prod = self.multiply(&a, &self.generator(s, basis)?)?;
        self.convert(&prod, basis)
    }
}
