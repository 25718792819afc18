use std::collections::BTreeMap;

use super::element::{Basis, HeckeElement};
use super::kl::KlTable;
use super::HeckeError;
use crate::arith::LaurentPoly;
use crate::combinatorics::{rsk_perm, Permutation};

/// The quotient H_{r,d} of H_r by the span of the C_w with more than d rows
/// in sh(P(w)). Elements are stored in the upper canonical basis.
pub struct TemperleyLieb<'a> {
    table: &'a KlTable,
    d: usize,
    survives: Vec<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TlElement {
    pub d: usize,
    pub coords: BTreeMap<Permutation, LaurentPoly>,
}

impl<'a> TemperleyLieb<'a> {
    pub fn new(table: &'a KlTable, d: usize) -> Self {
        let survives = table.group().elements().iter().map(|w| rsk_perm(w).0.shape().len() <= d).collect();
        Self { table, d, survives }
    }

    pub fn dim(&self) -> usize {
        self.survives.iter().filter(|&&s| s).count()
    }

    pub fn survives(&self, w: &Permutation) -> Result<bool, HeckeError> {
        Ok(self.survives[self.table.index(w)?])
    }

    pub fn surviving(&self) -> Vec<Permutation> {
        let g = self.table.group();
        (0..g.order()).filter(|&w| self.survives[w]).map(|w| g.element(w).clone()).collect()
    }

    /// Image of `a` in the quotient.
    pub fn project(&self, a: &HeckeElement) -> Result<TlElement, HeckeError> {
        let up = self.table.convert(a, Basis::Upper)?;
        let mut coords = BTreeMap::new();
        for (w, c) in up.coords() {
            if self.survives(w)? {
                coords.insert(w.clone(), c.clone());
            }
        }
        Ok(TlElement { d: self.d, coords })
    }

    pub fn lift(&self, x: &TlElement) -> HeckeElement {
        HeckeElement::from_terms(self.table.rank(), Basis::Upper, x.coords.iter().map(|(w, c)| (w.clone(), c.clone())))
    }

    pub fn multiply(&self, x: &TlElement, y: &TlElement) -> Result<TlElement, HeckeError> {
        let prod = self.table.multiply(&self.lift(x), &self.lift(y))?;
        self.project(&prod)
    }

    /// Checks that the killed span is stable under left and right
    /// multiplication by every T_s, which makes it a two-sided ideal.
    pub fn killed_span_is_ideal(&self) -> bool {
        let t = self.table;
        let g = t.group();
        for z in (0..g.order()).filter(|&z| !self.survives[z]) {
            let dense = t.to_dense(&HeckeElement::basis_element(g.element(z).clone(), Basis::Upper)).expect("rank matches");
            for s in 1..t.rank() {
                for v in [t.right_mul_t(&dense, s), t.left_mul_t(&dense, s)] {
                    let up = t.from_dense(v, Basis::Upper);
                    if up.coords().keys().any(|w| self.survives(w).unwrap_or(true)) {
                        return false;
                    }
                }
            }
        }
        true
    }
}
