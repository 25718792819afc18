use std::collections::{BTreeSet, VecDeque};

use serde::Serialize;

use super::{syt_enumerate, Convention, Partition, Tableau};

/// A DKT_i edge between vertices `a < b` (indices into the canonical SYT list).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct DeEdge {
    pub a: usize,
    pub b: usize,
    pub label: usize,
}

/// Dual equivalence graph on SYT(λ).
#[derive(Clone, Debug, Serialize)]
pub struct DeGraph {
    pub shape: Partition,
    pub vertices: Vec<Tableau>,
    pub edges: Vec<DeEdge>,
}

/// Exactly one of s_{i-1}, s_i is a lower descent of `t`.
fn one_descent_near(t: &Tableau, i: usize) -> bool {
    let d = t.descent_set(Convention::Lower);
    [i - 1, i].iter().filter(|s| d.contains(s)).count() == 1
}

/// All DKT_i edges, 2 <= i <= r-1.
pub fn dkt_edges(shape: &Partition) -> DeGraph {
    let vertices = syt_enumerate(shape);
    let r = shape.size();
    let index = |t: &Tableau| vertices.iter().position(|v| v == t);
    let mut edges = BTreeSet::new();
    for (a, t) in vertices.iter().enumerate() {
        for i in 2..r {
            if !one_descent_near(t, i) {
                continue;
            }
            for (x, y) in [(i, i + 1), (i - 1, i)] {
                let swapped = t.swap_entries(x, y);
                if !swapped.is_standard() || !one_descent_near(&swapped, i) {
                    continue;
                }
                let b = index(&swapped).expect("same shape");
                edges.insert(DeEdge { a: a.min(b), b: a.max(b), label: i });
            }
        }
    }
    DeGraph { shape: shape.clone(), vertices, edges: edges.into_iter().collect() }
}

impl DeGraph {
    pub fn index_of(&self, t: &Tableau) -> Option<usize> {
        self.vertices.iter().position(|v| v == t)
    }

    /// Neighbors of vertex `v` (with multiplicity removed).
    pub fn neighbors(&self, v: usize) -> BTreeSet<usize> {
        self.edges
            .iter()
            .filter_map(|e| match (e.a == v, e.b == v) {
                (true, _) => Some(e.b),
                (_, true) => Some(e.a),
                _ => None,
            })
            .collect()
    }

    /// Breadth-first distances from `source`; `None` for unreachable vertices.
    pub fn distances_from(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.vertices.len()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(v) = queue.pop_front() {
            for w in self.neighbors(v) {
                if dist[w].is_none() {
                    dist[w] = Some(dist[v].unwrap() + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.vertices.is_empty() || self.distances_from(0).iter().all(Option::is_some)
    }

    /// Distance of every vertex from the superstandard tableau Z*.
    pub fn distances_from_superstandard(&self) -> Vec<usize> {
        let z = self.index_of(&Tableau::superstandard(&self.shape)).expect("Z* is standard");
        self.distances_from(z).into_iter().map(|d| d.expect("DE graphs are connected")).collect()
    }
}

/// Distance from Z* in the DE graph of the shape of `q`.
pub fn de_distance(q: &Tableau) -> usize {
    let g = dkt_edges(&q.shape());
    let i = g.index_of(q).expect("standard tableau");
    g.distances_from_superstandard()[i]
}
