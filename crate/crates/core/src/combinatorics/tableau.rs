use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{CombError, Partition};

/// Which canonical basis a descent set refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Convention {
    /// R(C'_Q): i+1 strictly east of i.
    Lower,
    /// R(C_Q): i+1 strictly south of i.
    Upper,
}

/// A filling of a Young diagram, rows listed top to bottom (English notation).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tableau {
    rows: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct TableauJson {
    shape: Vec<usize>,
    rows: Vec<Vec<usize>>,
}

impl Serialize for Tableau {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        TableauJson { shape: self.shape().into(), rows: self.rows.clone() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Tableau {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let j = TableauJson::deserialize(d)?;
        let t = Tableau::new(j.rows).map_err(serde::de::Error::custom)?;
        if Vec::<usize>::from(t.shape()) != j.shape {
            return Err(serde::de::Error::custom("shape does not match rows"));
        }
        Ok(t)
    }
}

impl Tableau {
    /// Any filling whose row lengths form a partition.
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self, CombError> {
        let lens: Vec<usize> = rows.iter().map(Vec::len).collect();
        Partition::new(lens).map_err(|_| CombError::InvalidTableau(format!("{rows:?}")))?;
        Ok(Self { rows })
    }

    /// A standard tableau; errors unless rows and columns increase and entries are 1..r.
    pub fn standard(rows: Vec<Vec<usize>>) -> Result<Self, CombError> {
        let t = Self::new(rows)?;
        if !t.is_standard() {
            return Err(CombError::InvalidTableau(t.to_string()));
        }
        Ok(t)
    }

    pub fn empty() -> Self {
        Self { rows: Vec::new() }
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(Vec::len).collect()).expect("validated shape")
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_standard(&self) -> bool {
        let r = self.size();
        let mut seen = vec![false; r + 1];
        for row in &self.rows {
            for &v in row {
                if v == 0 || v > r || seen[v] {
                    return false;
                }
                seen[v] = true;
            }
            if row.windows(2).any(|w| w[0] >= w[1]) {
                return false;
            }
        }
        self.rows.windows(2).all(|w| w[1].iter().zip(&w[0]).all(|(lo, hi)| lo > hi))
    }

    /// (row, column) of entry `k`, 0-based.
    pub fn position(&self, k: usize) -> Option<(usize, usize)> {
        self.rows.iter().enumerate().find_map(|(i, row)| row.iter().position(|&v| v == k).map(|j| (i, j)))
    }

    pub fn entry(&self, row: usize, col: usize) -> Option<usize> {
        self.rows.get(row).and_then(|r| r.get(col)).copied()
    }

    /// T restricted to the entries 1..k.
    pub fn restrict(&self, k: usize) -> Self {
        let rows: Vec<Vec<usize>> = self
            .rows
            .iter()
            .map(|row| row.iter().copied().filter(|&v| v <= k).collect::<Vec<_>>())
            .filter(|row| !row.is_empty())
            .collect();
        Self { rows }
    }

    pub fn transpose(&self) -> Self {
        let width = self.rows.first().map_or(0, Vec::len);
        let rows = (0..width).map(|c| self.rows.iter().filter_map(|row| row.get(c).copied()).collect()).collect();
        Self { rows }
    }

    /// Descent indices i (meaning s_i) of a standard tableau.
    pub fn descent_set(&self, convention: Convention) -> Vec<usize> {
        (1..self.size()).filter(|&i| self.has_descent(i, convention)).collect()
    }

    pub fn has_descent(&self, i: usize, convention: Convention) -> bool {
        let (ri, ci) = self.position(i).expect("entry present");
        let (rj, cj) = self.position(i + 1).expect("entry present");
        match convention {
            Convention::Lower => cj > ci,
            Convention::Upper => rj > ri,
        }
    }

    /// Tableau with entries `a` and `b` exchanged.
    pub fn swap_entries(&self, a: usize, b: usize) -> Self {
        let rows = self
            .rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|&v| match v {
                        x if x == a => b,
                        x if x == b => a,
                        x => x,
                    })
                    .collect()
            })
            .collect();
        Self { rows }
    }

    /// Column reading word taken east to west, each column top to bottom.
    /// Lexicographic order on this word is the canonical SYT order.
    pub fn column_word(&self) -> Vec<usize> {
        let width = self.rows.first().map_or(0, Vec::len);
        (0..width).rev().flat_map(|c| self.rows.iter().filter_map(move |row| row.get(c).copied())).collect()
    }

    /// Row superstandard tableau Z*: 1..λ1 in the first row, and so on.
    pub fn superstandard(shape: &Partition) -> Self {
        let mut next = 1;
        let rows = shape
            .parts()
            .iter()
            .map(|&p| {
                let row: Vec<usize> = (next..next + p).collect();
                next += p;
                row
            })
            .collect();
        Self { rows }
    }
}

/// Canonical order on SYT of a fixed shape.
pub fn canonical_cmp(a: &Tableau, b: &Tableau) -> Ordering {
    a.column_word().cmp(&b.column_word())
}

impl PartialOrd for Tableau {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Tableau {
    fn cmp(&self, other: &Self) -> Ordering {
        self.shape().cmp(&other.shape()).then_with(|| canonical_cmp(self, other))
    }
}

/// All standard Young tableaux of shape `shape`, in canonical order.
pub fn syt_enumerate(shape: &Partition) -> Vec<Tableau> {
    fn rec(shape: &Partition, out: &mut Vec<Vec<Vec<usize>>>) {
        let r = shape.size();
        if r == 0 {
            out.push(Vec::new());
            return;
        }
        for (row, _) in shape.corners() {
            let smaller = shape.remove_box_in_row(row);
            let mut sub = Vec::new();
            rec(&smaller, &mut sub);
            for mut rows in sub {
                if rows.len() <= row {
                    rows.push(Vec::new());
                }
                rows[row].push(r);
                out.push(rows);
            }
        }
    }
    let mut raw = Vec::new();
    rec(shape, &mut raw);
    let mut out: Vec<Tableau> = raw.into_iter().map(|rows| Tableau { rows }).collect();
    out.sort_by(canonical_cmp);
    out
}

/// Rows separated by '/', entries run together when all are single digits.
impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let compact = self.size() < 10;
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|row| {
                let parts: Vec<String> = row.iter().map(usize::to_string).collect();
                if compact {
                    parts.concat()
                } else {
                    parts.join(",")
                }
            })
            .collect();
        write!(f, "{}", rows.join("/"))
    }
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Tableau {
    type Err = CombError;

    fn from_str(s: &str) -> Result<Self, CombError> {
        let bad = || CombError::Parse(s.to_string());
        let s = s.trim();
        if s.is_empty() {
            return Ok(Self::empty());
        }
        let rows = s
            .split('/')
            .map(|row| {
                if row.contains(',') {
                    row.split(',').map(|t| t.trim().parse().map_err(|_| bad())).collect::<Result<Vec<_>, _>>()
                } else {
                    row.trim().chars().map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(bad)).collect()
                }
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> Tableau {
        s.parse().unwrap()
    }

    #[test]
    fn descent_sets_match_figure() {
        let q = t("123/45");
        assert_eq!(q.descent_set(Convention::Lower), vec![1, 2, 4]);
        assert_eq!(q.descent_set(Convention::Upper), vec![3]);
        let row = t("1234");
        assert_eq!(row.descent_set(Convention::Lower), vec![1, 2, 3]);
        assert!(row.descent_set(Convention::Upper).is_empty());
    }

    #[test]
    fn enumeration_counts_and_order() {
        let shape: Partition = "3,2".parse().unwrap();
        let all = syt_enumerate(&shape);
        let names: Vec<String> = all.iter().map(Tableau::to_string).collect();
        assert_eq!(names, ["123/45", "124/35", "134/25", "125/34", "135/24"]);
        for r in 1..=7 {
            for l in Partition::all_of_size(r) {
                let syt = syt_enumerate(&l);
                assert_eq!(syt.len() as u128, l.num_syt());
                assert!(syt.iter().all(Tableau::is_standard));
                assert!(syt.windows(2).all(|w| canonical_cmp(&w[0], &w[1]) == Ordering::Less));
            }
        }
        let two_row_total: usize =
            Partition::all_of_size(4).iter().filter(|l| l.len() <= 2).map(|l| syt_enumerate(l).len()).sum();
        assert_eq!(two_row_total, 6);
    }

    #[test]
    fn json_shape() {
        let json = serde_json::to_string(&t("123/45")).unwrap();
        assert_eq!(json, r#"{"shape":[3,2],"rows":[[1,2,3],[4,5]]}"#);
        let back: Tableau = serde_json::from_str(&json).unwrap();
        assert_eq!(back, t("123/45"));
    }

    #[test]
    fn restriction_and_transpose() {
        let q = t("135/24");
        assert_eq!(q.restrict(4), t("13/24"));
        assert_eq!(q.transpose(), t("12/34/5"));
        assert!(!t("21/3").is_standard());
    }
}
