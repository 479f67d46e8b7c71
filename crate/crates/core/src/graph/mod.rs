//! Weighted undirected simple graphs.
//!
//! Vertices are `0..n`. Every stored edge is kept in canonical orientation
//! `u < v` with a strictly positive finite weight, and the edge list is
//! sorted by `(u, v)`, so two graphs with the same edge set compare equal.

mod family;
mod partition;

pub use family::{gnp_unit, splitmix64, Family};
pub use partition::{contract_partition, cut_weight, intra_weight, Classes, CutPartition};

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub w: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
}

/// Uncanonicalized edge as read from input: `(u, v, optional weight)`.
pub type RawEdge = (usize, usize, Option<f64>);

impl Graph {
    /// Validates and canonicalizes `raw_edges`. Missing weights default to 1.
    pub fn build(n: usize, raw_edges: &[RawEdge]) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyVertexSet);
        }
        let mut edges = Vec::with_capacity(raw_edges.len());
        for &(a, b, w) in raw_edges {
            if a >= n || b >= n {
                return Err(Error::VertexOutOfRange { u: a, v: b, n });
            }
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            let w = w.unwrap_or(1.0);
            if !(w.is_finite() && w > 0.0) {
                return Err(Error::InvalidWeight { u: a, v: b, w });
            }
            edges.push(Edge { u: a.min(b), v: a.max(b), w });
        }
        edges.sort_by_key(|x| (x.u, x.v));
        if let Some(pair) = edges.windows(2).find(|p| (p[0].u, p[0].v) == (p[1].u, p[1].v)) {
            return Err(Error::DuplicateEdge(pair[0].u, pair[0].v));
        }
        Ok(Graph { n, edges })
    }

    /// Unit-weight graph from index pairs.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let raw: Vec<RawEdge> = pairs.iter().map(|&(u, v)| (u, v, None)).collect();
        Self::build(n, &raw)
    }

    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        Self::build(n, &[])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Sum of all edge weights (the edge count `m` for unit weights).
    pub fn total_weight(&self) -> f64 {
        self.edges.iter().map(|e| e.w).sum()
    }

    /// True when every weight is an integer, so cut weights are exact.
    pub fn has_integer_weights(&self) -> bool {
        self.edges.iter().all(|e| e.w.fract() == 0.0 && e.w < 2f64.powi(52))
    }

    /// True when every weight equals 1.
    pub fn is_unweighted(&self) -> bool {
        self.edges.iter().all(|e| e.w == 1.0)
    }

    /// Inverse of [`Graph::build`]: the canonical raw edge list.
    pub fn decompose(&self) -> (usize, Vec<RawEdge>) {
        (self.n, self.edges.iter().map(|e| (e.u, e.v, Some(e.w))).collect())
    }

    pub fn weighted_degrees(&self) -> Vec<f64> {
        let mut deg = vec![0.0; self.n];
        for e in &self.edges {
            deg[e.u] += e.w;
            deg[e.v] += e.w;
        }
        deg
    }

    /// Unweighted degree (number of incident edges) per vertex.
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for e in &self.edges {
            deg[e.u] += 1;
            deg[e.v] += 1;
        }
        deg
    }

    /// Neighbor lists with weights, sorted by neighbor index.
    pub fn adjacency_lists(&self) -> Vec<Vec<(usize, f64)>> {
        let mut adj = vec![Vec::new(); self.n];
        for e in &self.edges {
            adj[e.u].push((e.v, e.w));
            adj[e.v].push((e.u, e.w));
        }
        for list in &mut adj {
            list.sort_by_key(|&(v, _)| v);
        }
        adj
    }

    /// Dense adjacency matrix, row-major.
    pub fn adjacency_matrix(&self) -> Vec<Vec<f64>> {
        let mut a = vec![vec![0.0; self.n]; self.n];
        for e in &self.edges {
            a[e.u][e.v] = e.w;
            a[e.v][e.u] = e.w;
        }
        a
    }

    /// Dense Laplacian `D - A`.
    pub fn laplacian_matrix(&self) -> Vec<Vec<f64>> {
        let mut l = self.adjacency_matrix();
        for row in l.iter_mut() {
            for x in row.iter_mut() {
                *x = -*x;
            }
        }
        for (i, d) in self.weighted_degrees().into_iter().enumerate() {
            l[i][i] = d;
        }
        l
    }

    /// Dense boolean adjacency.
    pub fn adjacency_bits(&self) -> Vec<Vec<bool>> {
        let mut a = vec![vec![false; self.n]; self.n];
        for e in &self.edges {
            a[e.u][e.v] = true;
            a[e.v][e.u] = true;
        }
        a
    }

    /// Subgraph on the same vertex set keeping the edges that satisfy `keep`.
    pub fn filter_edges(&self, mut keep: impl FnMut(&Edge) -> bool) -> Graph {
        Graph { n: self.n, edges: self.edges.iter().copied().filter(|e| keep(e)).collect() }
    }

    /// Returns `Some(t)` if every vertex has exactly `t` incident edges.
    pub fn regularity(&self) -> Option<usize> {
        let deg = self.degrees();
        let t = deg[0];
        deg.iter().all(|&d| d == t).then_some(t)
    }

    /// Edge-list text: header `n m`, then one `u v w` line per edge.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.edges.len());
        for e in &self.edges {
            if e.w == 1.0 {
                out.push_str(&format!("{} {}\n", e.u, e.v));
            } else {
                out.push_str(&format!("{} {} {:?}\n", e.u, e.v, e.w));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle() {
        let g = Graph::from_pairs(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.total_weight(), 3.0);
    }

    #[test]
    fn weighted_single_edge() {
        let g = Graph::build(2, &[(0, 1, Some(2.5))]).unwrap();
        assert_eq!(g.total_weight(), 2.5);
        assert!(!g.has_integer_weights());
    }

    #[test]
    fn canonical_orientation() {
        let g = Graph::from_pairs(3, &[(2, 0), (1, 0)]).unwrap();
        let pairs: Vec<_> = g.edges().iter().map(|e| (e.u, e.v)).collect();
        assert_eq!(pairs, vec![(0, 1), (0, 2)]);
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(Graph::from_pairs(2, &[(0, 0)]), Err(Error::SelfLoop(0)));
        assert!(matches!(Graph::from_pairs(2, &[(0, 2)]), Err(Error::VertexOutOfRange { .. })));
        assert_eq!(Graph::from_pairs(3, &[(0, 1), (1, 0)]), Err(Error::DuplicateEdge(0, 1)));
        assert!(matches!(Graph::build(2, &[(0, 1, Some(0.0))]), Err(Error::InvalidWeight { .. })));
        assert!(matches!(Graph::build(2, &[(0, 1, Some(-1.0))]), Err(Error::InvalidWeight { .. })));
        assert!(matches!(Graph::build(2, &[(0, 1, Some(f64::NAN))]), Err(Error::InvalidWeight { .. })));
        assert_eq!(Graph::empty(0), Err(Error::EmptyVertexSet));
    }

    #[test]
    fn edgeless_is_legal() {
        let g = Graph::empty(5).unwrap();
        assert_eq!(g.total_weight(), 0.0);
        assert_eq!(g.regularity(), Some(0));
    }

    #[test]
    fn laplacian_rows_sum_to_zero() {
        let g = Graph::build(3, &[(0, 1, Some(2.0)), (1, 2, Some(0.5))]).unwrap();
        for row in g.laplacian_matrix() {
            assert!(row.iter().sum::<f64>().abs() < 1e-15);
        }
    }
}
