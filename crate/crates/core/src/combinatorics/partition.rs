use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::CombError;

/// Integer partition with weakly decreasing positive parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self, CombError> {
        if parts.iter().any(|&p| p == 0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(CombError::InvalidPartition(format!("{parts:?}")));
        }
        Ok(Self(parts))
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn row(r: usize) -> Self {
        Self(vec![r])
    }

    pub fn column(r: usize) -> Self {
        Self(vec![1; r])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of rows.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Self {
        let width = self.part(0);
        Self((0..width).map(|c| self.0.iter().filter(|&&p| p > c).count()).collect())
    }

    /// Removable boxes as (row, column), 0-based, ordered west to east.
    pub fn corners(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> =
            (0..self.len()).filter(|&i| self.part(i) > self.part(i + 1)).map(|i| (i, self.0[i] - 1)).collect();
        out.sort_by_key(|&(_, c)| c);
        out
    }

    /// Partition with corner `i` (0-based index into [`corners`](Self::corners)) removed.
    pub fn remove_corner(&self, i: usize) -> Self {
        let (row, _) = self.corners()[i];
        self.remove_box_in_row(row)
    }

    pub(crate) fn remove_box_in_row(&self, row: usize) -> Self {
        let mut parts = self.0.clone();
        parts[row] -= 1;
        if parts[row] == 0 {
            parts.pop();
        }
        Self(parts)
    }

    /// Index of the corner whose removal gives `mu`, if any.
    pub fn corner_index_of(&self, mu: &Partition) -> Option<usize> {
        (0..self.corners().len()).find(|&i| self.remove_corner(i) == *mu)
    }

    /// Dominance order `self ⊵ other` (same size).
    pub fn dominates(&self, other: &Partition) -> bool {
        let n = self.len().max(other.len());
        let (mut a, mut b) = (0, 0);
        (0..n).all(|i| {
            a += self.part(i);
            b += other.part(i);
            a >= b
        }) && self.size() == other.size()
    }

    pub fn strictly_dominates(&self, other: &Partition) -> bool {
        self != other && self.dominates(other)
    }

    pub fn is_two_row(&self) -> bool {
        self.len() <= 2
    }

    /// All partitions of `r`, in reverse lexicographic order.
    pub fn all_of_size(r: usize) -> Vec<Self> {
        fn rec(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=rem.min(max)).rev() {
                cur.push(p);
                rec(rem - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(r, r, &mut Vec::new(), &mut out);
        out
    }

    /// Partitions of `r` with at most two rows, most dominant first.
    pub fn two_row_of_size(r: usize) -> Vec<Self> {
        (0..=r / 2).map(|k| if k == 0 { Self(vec![r]) } else { Self(vec![r - k, k]) }).collect()
    }

    /// Number of standard Young tableaux (hook length formula).
    pub fn num_syt(&self) -> u128 {
        let conj = self.conjugate();
        let mut num: u128 = (1..=self.size() as u128).product();
        let mut den: u128 = 1;
        for (i, &p) in self.0.iter().enumerate() {
            for j in 0..p {
                den *= ((p - j - 1) + (conj.0[j] - i - 1) + 1) as u128;
                let g = gcd(num, den);
                num /= g;
                den /= g;
            }
        }
        num / den
    }
}

fn gcd(a: u128, b: u128) -> u128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = CombError;
    fn try_from(v: Vec<usize>) -> Result<Self, CombError> {
        Self::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Vec<usize> {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = CombError;

    fn from_str(s: &str) -> Result<Self, CombError> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts = s
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| CombError::Parse(s.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(parts)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn corners_run_west_to_east() {
        assert_eq!(p("3,2").corners(), vec![(1, 1), (0, 2)]);
        assert_eq!(p("3,2").remove_corner(0), p("3,1"));
        assert_eq!(p("3,2").remove_corner(1), p("2,2"));
        assert_eq!(p("2,2").corners(), vec![(1, 1)]);
        assert_eq!(p("3,2,2,1").corners(), vec![(3, 0), (2, 1), (0, 2)]);
    }

    #[test]
    fn conjugation_and_dominance() {
        for r in 1..=7 {
            for l in Partition::all_of_size(r) {
                assert_eq!(l.conjugate().conjugate(), l);
            }
        }
        assert!(p("3,1").strictly_dominates(&p("2,2")));
        assert!(!p("2,2").dominates(&p("3,1")));
        assert!(!p("3,1,1,1").dominates(&p("2,2,2")));
    }

    #[test]
    fn parsing_rejects_garbage() {
        assert!("2,3".parse::<Partition>().is_err());
        assert!("a".parse::<Partition>().is_err());
        assert_eq!(p("3,2").to_string(), "3,2");
    }

    #[test]
    fn hook_lengths() {
        assert_eq!(p("3,2").num_syt(), 5);
        assert_eq!(p("3,2,1").num_syt(), 16);
        let total: u128 = Partition::all_of_size(6).iter().map(|l| l.num_syt() * l.num_syt()).sum();
        assert_eq!(total, 720);
    }
}
