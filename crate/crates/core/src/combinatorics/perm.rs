use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::CombError;

/// Permutation of 1..r in one-line notation. Products compose right to left:
/// `(v w)(i) = v(w(i))`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u8>", into = "Vec<u8>")]
pub struct Permutation(Vec<u8>);

impl Permutation {
    pub fn new(one_line: Vec<u8>) -> Result<Self, CombError> {
        let r = one_line.len();
        let mut seen = vec![false; r + 1];
        for &v in &one_line {
            let v = v as usize;
            if v == 0 || v > r || seen[v] {
                return Err(CombError::InvalidPermutation(format!("{one_line:?}")));
            }
            seen[v] = true;
        }
        Ok(Self(one_line))
    }

    pub fn identity(r: usize) -> Self {
        Self((1..=r as u8).collect())
    }

    /// Simple transposition s_i swapping i and i+1 (1-based).
    pub fn generator(r: usize, i: usize) -> Self {
        Self::identity(r).mul_s_right(i)
    }

    pub fn longest(r: usize) -> Self {
        Self((1..=r as u8).rev().collect())
    }

    pub fn size(&self) -> usize {
        self.0.len()
    }

    pub fn one_line(&self) -> &[u8] {
        &self.0
    }

    /// w(i) for 1-based i.
    pub fn apply(&self, i: usize) -> usize {
        self.0[i - 1] as usize
    }

    pub fn length(&self) -> usize {
        let w = &self.0;
        (0..w.len()).map(|i| (i + 1..w.len()).filter(|&j| w[i] > w[j]).count()).sum()
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &v)| v as usize == i + 1)
    }

    pub fn compose(&self, rhs: &Self) -> Result<Self, CombError> {
        if self.size() != rhs.size() {
            return Err(CombError::SizeMismatch(self.size(), rhs.size()));
        }
        Ok(Self(rhs.0.iter().map(|&j| self.0[j as usize - 1]).collect()))
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u8; self.size()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v as usize - 1] = i as u8 + 1;
        }
        Self(inv)
    }

    /// s_i is a right descent iff w(i) > w(i+1).
    pub fn has_right_descent(&self, i: usize) -> bool {
        self.0[i - 1] > self.0[i]
    }

    pub fn right_descents(&self) -> Vec<usize> {
        (1..self.size()).filter(|&i| self.has_right_descent(i)).collect()
    }

    pub fn left_descents(&self) -> Vec<usize> {
        self.inverse().right_descents()
    }

    /// w s_i: swaps positions i and i+1.
    pub fn mul_s_right(&self, i: usize) -> Self {
        let mut v = self.0.clone();
        v.swap(i - 1, i);
        Self(v)
    }

    /// s_i w: swaps the values i and i+1.
    pub fn mul_s_left(&self, i: usize) -> Self {
        Self(
            self.0
                .iter()
                .map(|&v| match v as usize {
                    x if x == i => v + 1,
                    x if x == i + 1 => v - 1,
                    _ => v,
                })
                .collect(),
        )
    }

    /// All of S_r, ordered by length and then one-line notation.
    pub fn all(r: usize) -> Vec<Self> {
        let mut out = Vec::new();
        let mut current: Vec<u8> = (1..=r as u8).collect();
        permutations(&mut current, 0, &mut out);
        out.sort_by_key(|p| (p.length(), p.0.clone()));
        out
    }

    /// Reduced word read off by repeatedly stripping the first right descent.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.clone();
        let mut word = Vec::new();
        while let Some(&i) = w.right_descents().first() {
            word.push(i);
            w = w.mul_s_right(i);
        }
        word.reverse();
        word
    }
}

fn permutations(v: &mut Vec<u8>, k: usize, out: &mut Vec<Permutation>) {
    if k == v.len() {
        out.push(Permutation(v.clone()));
        return;
    }
    for i in k..v.len() {
        v.swap(k, i);
        permutations(v, k + 1, out);
        v.swap(k, i);
    }
}

/// Bruhat comparison `x <= w`.
///
/// Walks the reduced word of `w` obtained by stripping right descents. With
/// s a right descent of w, x <= w iff min(x, xs) <= ws (lifting property), so
/// one pass of at most l(w) steps decides the subword criterion.
pub fn bruhat_leq(x: &Permutation, w: &Permutation) -> Result<bool, CombError> {
    if x.size() != w.size() {
        return Err(CombError::SizeMismatch(x.size(), w.size()));
    }
    let mut x = x.clone();
    let mut w = w.clone();
    loop {
        let Some(&s) = w.right_descents().first() else {
            return Ok(x.is_identity());
        };
        if x.has_right_descent(s) {
            x = x.mul_s_right(s);
        }
        w = w.mul_s_right(s);
        if x.length() > w.length() {
            return Ok(false);
        }
    }
}

impl TryFrom<Vec<u8>> for Permutation {
    type Error = CombError;
    fn try_from(v: Vec<u8>) -> Result<Self, CombError> {
        Self::new(v)
    }
}

impl From<Permutation> for Vec<u8> {
    fn from(p: Permutation) -> Vec<u8> {
        p.0
    }
}

/// Digits run together when r < 10 ("312"), comma separated otherwise.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u8::to_string).collect();
        if self.size() < 10 {
            write!(f, "{}", parts.concat())
        } else {
            write!(f, "{}", parts.join(","))
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Permutation {
    type Err = CombError;

    fn from_str(s: &str) -> Result<Self, CombError> {
        let bad = || CombError::Parse(s.to_string());
        let s = s.trim();
        let values: Vec<u8> = if s.contains(',') || s.contains(' ') {
            s.split([',', ' ']).filter(|t| !t.is_empty()).map(|t| t.parse().map_err(|_| bad())).collect::<Result<_, _>>()?
        } else {
            s.chars().map(|c| c.to_digit(10).map(|d| d as u8).ok_or_else(bad)).collect::<Result<_, _>>()?
        };
        Self::new(values)
    }
}
