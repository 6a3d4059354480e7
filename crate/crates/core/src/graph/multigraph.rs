//! Finite multigraphs (loops and parallel edges allowed) and their
//! non-backtracking edge matrices.
//!
//! Undirected edge `e = (u, v)` yields the oriented arcs `2e: u → v` and
//! `2e + 1: v → u`; the reverse of arc `a` is `a ^ 1`. A loop contributes 2
//! to the degree of its vertex and to the diagonal of the adjacency matrix.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Result, ZetaError};

/// Largest vertex count accepted.
pub const MAX_VERTICES: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultiGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl MultiGraph {
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        if n == 0 {
            return Err(ZetaError::InvalidInput("graph needs at least one vertex".into()));
        }
        if n > MAX_VERTICES {
            return Err(ZetaError::Budget(format!("{n} vertices exceeds the cap of {MAX_VERTICES}")));
        }
        if let Some(&(u, v)) = edges.iter().find(|&&(u, v)| u >= n || v >= n) {
            return Err(ZetaError::InvalidInput(format!("edge ({u}, {v}) references a vertex >= {n}")));
        }
        Ok(Self { n, edges })
    }

    /// Skips the vertex cap; used for derived graphs of capped inputs.
    pub(crate) fn new_unchecked(n: usize, edges: Vec<(usize, usize)>) -> Self {
        Self { n, edges }
    }

    /// A connected `(q_g + 1)`-regular graph, as required for the determinant formula.
    pub fn regular(n: usize, q_g: u32, edges: Vec<(usize, usize)>) -> Result<Self> {
        let g = Self::new(n, edges)?;
        if q_g < 1 {
            return Err(ZetaError::InvalidInput("q_g must be at least 1".into()));
        }
        match g.regularity() {
            Some(k) if k == q_g => {}
            _ => {
                return Err(ZetaError::InvalidInput(format!(
                    "graph is not {}-regular (degrees {:?})",
                    q_g + 1,
                    (0..n).map(|v| g.degree(v)).collect::<Vec<_>>()
                )))
            }
        }
        if !g.is_connected() {
            return Err(ZetaError::InvalidInput("graph is not connected".into()));
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().map(|&(a, b)| (a == v) as usize + (b == v) as usize).sum()
    }

    /// `Some(q_g)` if every vertex has degree `q_g + 1 >= 1`.
    pub fn regularity(&self) -> Option<u32> {
        let d = self.degree(0);
        (d >= 1 && (1..self.n).all(|v| self.degree(v) == d)).then(|| d as u32 - 1)
    }

    pub fn adjacency(&self) -> Vec<Vec<i64>> {
        let mut a = vec![vec![0i64; self.n]; self.n];
        for &(u, v) in &self.edges {
            a[u][v] += 1;
            a[v][u] += 1;
        }
        a
    }

    pub fn arc_count(&self) -> usize {
        2 * self.edges.len()
    }

    pub fn tail(&self, arc: usize) -> usize {
        let (u, v) = self.edges[arc / 2];
        if arc % 2 == 0 {
            u
        } else {
            v
        }
    }

    pub fn head(&self, arc: usize) -> usize {
        let (u, v) = self.edges[arc / 2];
        if arc % 2 == 0 {
            v
        } else {
            u
        }
    }

    pub fn is_connected(&self) -> bool {
        self.components() == 1
    }

    pub fn components(&self) -> usize {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut seen = vec![false; self.n];
        let mut count = 0;
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            count += 1;
            seen[start] = true;
            let mut queue = VecDeque::from([start]);
            while let Some(x) = queue.pop_front() {
                for &y in &adj[x] {
                    if !seen[y] {
                        seen[y] = true;
                        queue.push_back(y);
                    }
                }
            }
        }
        count
    }

    pub fn is_bipartite(&self) -> bool {
        let mut color = vec![usize::MAX; self.n];
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for start in 0..self.n {
            if color[start] != usize::MAX {
                continue;
            }
            color[start] = 0;
            let mut queue = VecDeque::from([start]);
            while let Some(x) = queue.pop_front() {
                for &y in &adj[x] {
                    if color[y] == usize::MAX {
                        color[y] = 1 - color[x];
                        queue.push_back(y);
                    } else if color[y] == color[x] {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn edge_matrix(&self) -> EdgeMatrix {
        let arcs = self.arc_count();
        let mut by_tail = vec![Vec::new(); self.n];
        for a in 0..arcs {
            by_tail[self.tail(a)].push(a);
        }
        let succ = (0..arcs).map(|e| by_tail[self.head(e)].iter().copied().filter(|&f| f != e ^ 1).collect()).collect();
        EdgeMatrix { succ }
    }
}

/// `T[e → f] = 1` iff `head(e) = tail(f)` and `f ≠ ē`, stored as successor lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeMatrix {
    succ: Vec<Vec<usize>>,
}

impl EdgeMatrix {
    pub fn size(&self) -> usize {
        self.succ.len()
    }

    pub fn successors(&self, e: usize) -> &[usize] {
        &self.succ[e]
    }

    pub fn dense(&self) -> Vec<Vec<i64>> {
        let n = self.size();
        let mut t = vec![vec![0i64; n]; n];
        for (e, fs) in self.succ.iter().enumerate() {
            for &f in fs {
                t[e][f] += 1;
            }
        }
        t
    }

    pub fn row_sums(&self) -> Vec<usize> {
        self.succ.iter().map(|s| s.len()).collect()
    }

    /// `tr T^k` for `k = 1..=k_max`.
    pub fn traces(&self, k_max: usize) -> Vec<i128> {
        let n = self.size();
        // Rows of T^k, advanced one step at a time.
        let mut power: Vec<Vec<i128>> = (0..n)
            .map(|e| {
                let mut row = vec![0i128; n];
                row[e] = 1;
                row
            })
            .collect();
        let mut out = Vec::with_capacity(k_max);
        for _ in 0..k_max {
            let next: Vec<Vec<i128>> = power
                .iter()
                .map(|row| {
                    let mut r = vec![0i128; n];
                    for (g, &c) in row.iter().enumerate() {
                        if c != 0 {
                            for &f in &self.succ[g] {
                                r[f] += c;
                            }
                        }
                    }
                    r
                })
                .collect();
            power = next;
            out.push((0..n).map(|e| power[e][e]).sum());
        }
        out
    }
}

/// The complete graph on four vertices.
pub fn k4() -> MultiGraph {
    MultiGraph::regular(4, 2, vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).expect("K4")
}

/// The 3-cube.
pub fn cube() -> MultiGraph {
    let mut edges = Vec::new();
    for v in 0..8usize {
        for bit in [1, 2, 4] {
            if v & bit == 0 {
                edges.push((v, v | bit));
            }
        }
    }
    MultiGraph::regular(8, 2, edges).expect("cube")
}

/// The Petersen graph.
pub fn petersen() -> MultiGraph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((i + 5, (i + 2) % 5 + 5));
    }
    MultiGraph::regular(10, 2, edges).expect("Petersen")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_graphs() {
        for (g, n, m) in [(k4(), 4, 6), (cube(), 8, 12), (petersen(), 10, 15)] {
            assert_eq!((g.n(), g.m()), (n, m));
            assert_eq!(g.regularity(), Some(2));
            assert!(g.edge_matrix().row_sums().iter().all(|&r| r == 2));
        }
        assert!(cube().is_bipartite());
        assert!(!k4().is_bipartite());
        assert!(!petersen().is_bipartite());
    }

    #[test]
    fn loops_and_parallel_edges() {
        // One vertex with a loop and ... a bouquet of two loops is 4-regular.
        let g = MultiGraph::regular(1, 3, vec![(0, 0), (0, 0)]).unwrap();
        assert_eq!(g.adjacency(), vec![vec![4]]);
        let t = g.edge_matrix();
        assert!(t.row_sums().iter().all(|&r| r == 3));
        // Two vertices joined by three parallel edges: 3-regular, bipartite.
        let theta = MultiGraph::regular(2, 2, vec![(0, 1), (0, 1), (0, 1)]).unwrap();
        assert!(theta.is_bipartite());
        assert_eq!(theta.edge_matrix().traces(2), vec![0, 12]);
    }

    #[test]
    fn rejects_bad_graphs() {
        assert!(MultiGraph::regular(4, 2, vec![(0, 1), (1, 2), (2, 3)]).is_err());
        assert!(MultiGraph::new(2, vec![(0, 2)]).is_err());
        assert!(matches!(MultiGraph::new(65, vec![]), Err(ZetaError::Budget(_))));
        // Two disjoint triangles: regular but disconnected.
        let e = vec![(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)];
        assert!(MultiGraph::regular(6, 1, e).is_err());
    }

    #[test]
    fn k4_triangle_count() {
        let t = k4().edge_matrix();
        let tr = t.traces(4);
        assert_eq!(tr[0], 0);
        assert_eq!(tr[1], 0);
        assert_eq!(tr[2], 24);
    }
}
