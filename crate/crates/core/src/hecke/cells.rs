use petgraph::algo::tarjan_scc;
use petgraph::graph::DiGraph;
use serde::Serialize;

use super::{Basis, HeckeError, KlTable};
use crate::arith::Ring;
use crate::linalg::Matrix;

/// Right cells of a module with basis, with the induced partial order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CellPartition {
    /// Each block lists basis indices in increasing order; blocks are sorted
    /// by their smallest element.
    pub blocks: Vec<Vec<usize>>,
    /// below[i][j] is true when block j <= block i, i.e. block j is reachable
    /// from block i through the action.
    pub below: Vec<Vec<bool>>,
}

impl CellPartition {
    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    pub fn block_of(&self, x: usize) -> Option<usize> {
        self.blocks.iter().position(|b| b.contains(&x))
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.below[b][a]
    }

    /// Blocks of the partition as a minimal (cover) relation.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let k = self.blocks.len();
        let mut out = Vec::new();
        for hi in 0..k {
            for lo in 0..k {
                if lo == hi || !self.below[hi][lo] {
                    continue;
                }
                let between = (0..k).any(|m| m != lo && m != hi && self.below[hi][m] && self.below[m][lo]);
                if !between {
                    out.push((lo, hi));
                }
            }
        }
        out
    }
}

/// Right cells of the regular representation in the lower or upper canonical
/// basis, vertices indexed as in `t.group()`.
pub fn right_cells(t: &KlTable, basis: Basis) -> Result<CellPartition, HeckeError> {
    let g = t.group();
    let mut edges = Vec::new();
    for w in 0..g.order() {
        for s in 1..t.rank() {
            let img = t.right_multiply_canonical(g.element(w), s, basis)?;
            edges.extend(img.coords().keys().filter_map(|x| g.index_of(x)).map(|x| (w, x)));
        }
    }
    Ok(cells_from_edges(g.order(), edges))
}

/// Cells from an explicit edge list: an edge (g, d) means d appears with
/// nonzero coefficient in g acted on by some generator.
pub fn cells_from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> CellPartition {
    let mut graph = DiGraph::<(), ()>::with_capacity(n, 0);
    let nodes: Vec<_> = (0..n).map(|_| graph.add_node(())).collect();
    for (g, d) in edges {
        if g != d {
            graph.update_edge(nodes[g], nodes[d], ());
        }
    }
    let mut blocks: Vec<Vec<usize>> = tarjan_scc(&graph)
        .into_iter()
        .map(|c| {
            let mut b: Vec<usize> = c.into_iter().map(|x| x.index()).collect();
            b.sort_unstable();
            b
        })
        .collect();
    blocks.sort();
    let mut block_of = vec![0; n];
    for (i, b) in blocks.iter().enumerate() {
        for &x in b {
            block_of[x] = i;
        }
    }
    let k = blocks.len();
    let mut below = vec![vec![false; k]; k];
    for (i, b) in blocks.iter().enumerate() {
        let mut stack = b.clone();
        let mut seen = vec![false; n];
        for &x in b {
            seen[x] = true;
        }
        while let Some(x) = stack.pop() {
            below[i][block_of[x]] = true;
            for y in graph.neighbors(nodes[x]) {
                let y = y.index();
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
    }
    CellPartition { blocks, below }
}

/// Cells of a module given by generator matrices in the row-vector
/// convention (row g of an action matrix is the image of basis element g).
pub fn cells<R: Ring>(n: usize, actions: &[Matrix<R>]) -> CellPartition {
    let edges = actions.iter().flat_map(|m| m.entries().filter(|(_, _, c)| !c.is_zero()).map(|(g, d, _)| (g, d)));
    cells_from_edges(n, edges.collect::<Vec<_>>())
}
