use super::{Graph, RawEdge};
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// Assignment of vertices to `k` classes together with its cut weight.
/// Empty classes are allowed.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CutPartition {
    k: usize,
    assignment: Vec<usize>,
    cut_weight: f64,
}

impl CutPartition {
    pub fn new(g: &Graph, k: usize, assignment: Vec<usize>) -> Result<Self> {
        let cut_weight = cut_weight(g, k, &assignment)?;
        Ok(CutPartition { k, assignment, cut_weight })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    pub fn cut_weight(&self) -> f64 {
        self.cut_weight
    }

    pub fn into_assignment(self) -> Vec<usize> {
        self.assignment
    }

    /// Class sizes `|V_0|, ..., |V_{k-1}|`.
    pub fn class_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.k];
        for &c in &self.assignment {
            sizes[c] += 1;
        }
        sizes
    }

    /// The k-partite subgraph of `g` formed by the cut edges.
    pub fn cut_subgraph(&self, g: &Graph) -> Graph {
        g.filter_edges(|e| self.assignment[e.u] != self.assignment[e.v])
    }
}

fn check_assignment(g: &Graph, k: usize, assignment: &[usize]) -> Result<()> {
    if assignment.len() != g.n() {
        return Err(Error::AssignmentLength { expected: g.n(), got: assignment.len() });
    }
    if let Some((vertex, &class)) = assignment.iter().enumerate().find(|(_, &c)| c >= k) {
        return Err(Error::ClassOutOfRange { vertex, class, k });
    }
    Ok(())
}

/// Total weight of edges whose endpoints get different classes.
pub fn cut_weight(g: &Graph, k: usize, assignment: &[usize]) -> Result<f64> {
    check_assignment(g, k, assignment)?;
    Ok(g.edges().iter().filter(|e| assignment[e.u] != assignment[e.v]).map(|e| e.w).sum())
}

/// Total weight of edges inside a class.
pub fn intra_weight(g: &Graph, k: usize, assignment: &[usize]) -> Result<f64> {
    check_assignment(g, k, assignment)?;
    Ok(g.edges().iter().filter(|e| assignment[e.u] == assignment[e.v]).map(|e| e.w).sum())
}

/// A partition of `0..n` into `r` nonempty classes, stored as labels.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classes {
    labels: Vec<usize>,
    r: usize,
}

impl Classes {
    /// Labels must use every value in `0..r` where `r = max + 1`.
    pub fn from_labels(labels: Vec<usize>) -> Result<Self> {
        if labels.is_empty() {
            return Err(Error::InvalidPartition("no vertices".into()));
        }
        let r = labels.iter().max().map_or(0, |m| m + 1);
        let mut seen = vec![false; r];
        for &c in &labels {
            seen[c] = true;
        }
        if let Some(c) = seen.iter().position(|s| !s) {
            return Err(Error::InvalidPartition(format!("class {c} is empty")));
        }
        Ok(Classes { labels, r })
    }

    /// Builds from explicit vertex sets; they must cover `0..n` disjointly.
    pub fn from_sets(n: usize, sets: &[Vec<usize>]) -> Result<Self> {
        let mut labels = vec![usize::MAX; n];
        for (c, set) in sets.iter().enumerate() {
            if set.is_empty() {
                return Err(Error::InvalidPartition(format!("class {c} is empty")));
            }
            for &v in set {
                if v >= n {
                    return Err(Error::InvalidPartition(format!("vertex {v} is out of range")));
                }
                if labels[v] != usize::MAX {
                    return Err(Error::InvalidPartition(format!("vertex {v} is in two classes")));
                }
                labels[v] = c;
            }
        }
        if let Some(v) = labels.iter().position(|&c| c == usize::MAX) {
            return Err(Error::InvalidPartition(format!("vertex {v} is not covered")));
        }
        Self::from_labels(labels)
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    /// Checks the length against `g` and that no edge lies inside a class.
    pub fn check_rpartite(&self, g: &Graph) -> Result<()> {
        if self.labels.len() != g.n() {
            return Err(Error::AssignmentLength { expected: g.n(), got: self.labels.len() });
        }
        let intra = intra_weight(g, self.r, &self.labels)?;
        if intra != 0.0 {
            return Err(Error::IntraClassWeight(intra));
        }
        Ok(())
    }
}

/// Weighted complete graph on the classes: the weight between classes `i`
/// and `j` is the total weight of `g`-edges crossing them. Zero-weight pairs
/// are omitted. Fails if any edge lies inside a class.
pub fn contract_partition(g: &Graph, classes: &Classes) -> Result<Graph> {
    classes.check_rpartite(g)?;
    let r = classes.r();
    let labels = classes.labels();
    let mut w = vec![vec![0.0; r]; r];
    for e in g.edges() {
        let (a, b) = (labels[e.u].min(labels[e.v]), labels[e.u].max(labels[e.v]));
        w[a][b] += e.w;
    }
    let mut raw: Vec<RawEdge> = Vec::new();
    for (a, row) in w.iter().enumerate() {
        for (b, &x) in row.iter().enumerate().skip(a + 1) {
            if x > 0.0 {
                raw.push((a, b, Some(x)));
            }
        }
    }
    Graph::build(r, &raw)
}
