use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use super::NsError;
use crate::combinatorics::Partition;

/// An irreducible of the nonstandard Temperley-Lieb algebra.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum NsIrredLabel {
    /// M_λ ⊗ M_μ for distinct two-row shapes, more dominant shape first.
    Pair(Partition, Partition),
    /// S'M_λ: the symmetric square minus the trivial summand.
    Plus(Partition),
    /// Λ²M_λ.
    Minus(Partition),
    EpsPlus,
}

fn binom2(n: u128) -> u128 {
    n * n.saturating_sub(1) / 2
}

impl NsIrredLabel {
    /// A pair label with the shapes put in dominance order.
    pub fn pair(a: Partition, b: Partition) -> Self {
        if b.strictly_dominates(&a) {
            Self::Pair(b, a)
        } else {
            Self::Pair(a, b)
        }
    }

    /// The size r, or None for ε₊ which exists at every rank.
    pub fn rank(&self) -> Option<usize> {
        match self {
            Self::Pair(a, _) | Self::Plus(a) | Self::Minus(a) => Some(a.size()),
            Self::EpsPlus => None,
        }
    }

    pub fn dim(&self) -> u128 {
        match self {
            Self::Pair(a, b) => a.num_syt() * b.num_syt(),
            Self::Plus(a) => binom2(a.num_syt() + 1) - 1,
            Self::Minus(a) => binom2(a.num_syt()),
            Self::EpsPlus => 1,
        }
    }

    /// Membership in the index set of irreducibles at rank r.
    pub fn validate(&self, r: usize) -> Result<(), NsError> {
        let shape_ok = |p: &Partition| p.size() == r && p.is_two_row();
        let ok = match self {
            Self::Pair(a, b) => shape_ok(a) && shape_ok(b) && a != b && !b.strictly_dominates(a),
            Self::Plus(a) | Self::Minus(a) => shape_ok(a) && a.num_syt() > 1,
            Self::EpsPlus => true,
        };
        if ok {
            Ok(())
        } else {
            Err(NsError::BadLabel(format!("{self} is not an irreducible label for r = {r}")))
        }
    }

    /// All labels at rank r: pairs, then ± for shapes that are neither a
    /// row nor a column, then ε₊.
    pub fn all(r: usize) -> Vec<Self> {
        let shapes = Partition::two_row_of_size(r);
        let mut out = Vec::new();
        for (i, a) in shapes.iter().enumerate() {
            for b in &shapes[i + 1..] {
                out.push(Self::Pair(a.clone(), b.clone()));
            }
        }
        for a in shapes.iter().filter(|a| a.num_syt() > 1) {
            out.push(Self::Plus(a.clone()));
            out.push(Self::Minus(a.clone()));
        }
        out.push(Self::EpsPlus);
        out
    }
}

impl fmt::Display for NsIrredLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Pair(a, b) => write!(f, "{a}|{b}"),
            Self::Plus(a) => write!(f, "+{a}"),
            Self::Minus(a) => write!(f, "-{a}"),
            Self::EpsPlus => write!(f, "eps+"),
        }
    }
}

impl fmt::Debug for NsIrredLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for NsIrredLabel {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl FromStr for NsIrredLabel {
    type Err = NsError;

    fn from_str(s: &str) -> Result<Self, NsError> {
        let s = s.trim();
        let shape = |t: &str| t.parse::<Partition>().map_err(|_| NsError::BadLabel(s.to_string()));
        if s == "eps+" || s == "ε+" || s == "ε₊" {
            return Ok(Self::EpsPlus);
        }
        if let Some((a, b)) = s.split_once('|') {
            let (a, b) = (shape(a)?, shape(b)?);
            if a == b {
                return Err(NsError::BadLabel(format!("{s}: a pair needs two distinct shapes")));
            }
            return Ok(Self::pair(a, b));
        }
        if let Some(rest) = s.strip_prefix('+') {
            return Ok(Self::Plus(shape(rest)?));
        }
        if let Some(rest) = s.strip_prefix('-') {
            return Ok(Self::Minus(shape(rest)?));
        }
        Err(NsError::BadLabel(s.to_string()))
    }
}
