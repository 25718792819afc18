use std::collections::HashMap;

use crate::combinatorics::Permutation;

/// S_r with elements indexed by position in (length, one-line) order, so that
/// Bruhat-smaller elements always come first.
#[derive(Clone, Debug)]
pub struct SymmetricGroup {
    r: usize,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
    lengths: Vec<usize>,
    /// right[w][i - 1] = index of w s_i.
    right: Vec<Vec<usize>>,
    /// left[w][i - 1] = index of s_i w.
    left: Vec<Vec<usize>>,
    inverse: Vec<usize>,
}

impl SymmetricGroup {
    pub fn new(r: usize) -> Self {
        let elements = Permutation::all(r);
        let index: HashMap<Permutation, usize> = elements.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let lengths = elements.iter().map(Permutation::length).collect();
        let gens = r.saturating_sub(1);
        let right = elements.iter().map(|w| (1..=gens).map(|i| index[&w.mul_s_right(i)]).collect()).collect();
        let left = elements.iter().map(|w| (1..=gens).map(|i| index[&w.mul_s_left(i)]).collect()).collect();
        let inverse = elements.iter().map(|w| index[&w.inverse()]).collect();
        Self { r, elements, index, lengths, right, left, inverse }
    }

    pub fn rank(&self) -> usize {
        self.r
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn num_gens(&self) -> usize {
        self.r.saturating_sub(1)
    }

    pub fn element(&self, w: usize) -> &Permutation {
        &self.elements[w]
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn index_of(&self, w: &Permutation) -> Option<usize> {
        self.index.get(w).copied()
    }

    pub fn length(&self, w: usize) -> usize {
        self.lengths[w]
    }

    /// Index of w s_i (generators are 1-based).
    pub fn right_mul(&self, w: usize, i: usize) -> usize {
        self.right[w][i - 1]
    }

    pub fn left_mul(&self, w: usize, i: usize) -> usize {
        self.left[w][i - 1]
    }

    pub fn inverse(&self, w: usize) -> usize {
        self.inverse[w]
    }

    pub fn has_right_descent(&self, w: usize, i: usize) -> bool {
        self.lengths[self.right_mul(w, i)] < self.lengths[w]
    }

    pub fn first_right_descent(&self, w: usize) -> Option<usize> {
        (1..=self.num_gens()).find(|&i| self.has_right_descent(w, i))
    }

    pub fn identity(&self) -> usize {
        0
    }
}
