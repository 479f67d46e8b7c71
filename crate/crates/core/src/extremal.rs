//! Graphs attaining the smallest-eigenvalue bound with equality.
//!
//! For `chi >= k >= 2` with `k | chi` and a `t`-regular graph `H` with
//! `omega(H) >= chi` and `|mu_min(H)| < t/(chi - 1)`, the graph with adjacency
//! `(J_chi - I_chi) (x) A(H)` has `mu_min = -t`, and grouping its `chi` vertex
//! blocks evenly into `k` classes cuts exactly the bound.

use crate::bounds::{lower_bound_ratio, slack, upper_bound_eigmin};
use crate::error::{Error, Result};
use crate::graph::{Classes, Family, Graph};
use crate::solvers::{exact_max_kcut, rpartite_ratio_cut, MAX_RATIO_CLASSES};
use crate::spectra::spectral_summary;
use serde::{Deserialize, Serialize};

/// Default branch-node cap for [`clique_number`].
pub const DEFAULT_CLIQUE_CAP: u64 = 10_000_000;

/// Eigenvalue condition guard band.
pub const GUARD_BAND: f64 = 1e-8;

struct CliqueSearch<'a> {
    adj: &'a [Vec<bool>],
    best: Vec<usize>,
    nodes: u64,
    cap: u64,
    exceeded: bool,
}

impl CliqueSearch<'_> {
    /// Greedy sequential coloring of `p` in its given order. Returns the
    /// vertices sorted by color together with their color numbers (from 1).
    fn color_sort(&self, p: &[usize]) -> (Vec<usize>, Vec<usize>) {
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for &v in p {
            match classes.iter_mut().find(|cls| cls.iter().all(|&u| !self.adj[v][u])) {
                Some(cls) => cls.push(v),
                None => classes.push(vec![v]),
            }
        }
        let mut order = Vec::with_capacity(p.len());
        let mut colors = Vec::with_capacity(p.len());
        for (c, cls) in classes.into_iter().enumerate() {
            colors.extend(std::iter::repeat_n(c + 1, cls.len()));
            order.extend(cls);
        }
        (order, colors)
    }

    fn expand(&mut self, r: &mut Vec<usize>, p: Vec<usize>) {
        self.nodes += 1;
        if self.nodes > self.cap {
            self.exceeded = true;
            return;
        }
        let (order, colors) = self.color_sort(&p);
        for i in (0..order.len()).rev() {
            if self.exceeded || r.len() + colors[i] <= self.best.len() {
                return;
            }
            let v = order[i];
            r.push(v);
            let next: Vec<usize> = order[..i].iter().copied().filter(|&u| self.adj[v][u]).collect();
            if next.is_empty() {
                if r.len() > self.best.len() {
                    self.best = r.clone();
                }
            } else {
                self.expand(r, next);
            }
            r.pop();
        }
    }
}

/// A maximum clique, by branch and bound with greedy-coloring bounds.
/// Vertices are seeded in decreasing degree order (ties by index), so the
/// result is deterministic. Refuses after `cap` branch nodes.
pub fn max_clique(g: &Graph, cap: u64) -> Result<Vec<usize>> {
    let adj = g.adjacency_bits();
    let deg = g.degrees();
    let mut p: Vec<usize> = (0..g.n()).collect();
    p.sort_by(|&a, &b| deg[b].cmp(&deg[a]).then(a.cmp(&b)));
    let mut search = CliqueSearch { adj: &adj, best: Vec::new(), nodes: 0, cap, exceeded: false };
    search.expand(&mut Vec::new(), p);
    if search.exceeded {
        return Err(Error::CliqueCapExceeded { cap });
    }
    let mut best = search.best;
    best.sort_unstable();
    Ok(best)
}

pub fn clique_number(g: &Graph, cap: u64) -> Result<usize> {
    Ok(max_clique(g, cap)?.len())
}

/// The default `H`: the complete graph `K_n`, which satisfies every side
/// condition exactly when `n > chi`.
pub fn complete_h(n: usize) -> Result<Graph> {
    Family::Complete(n).generate()
}

/// Checks every side condition and returns `t`, the regularity of `h`.
pub fn check_equality_conditions(chi: usize, k: usize, h: &Graph, clique_cap: u64) -> Result<usize> {
    if k < 2 || chi < k {
        return Err(Error::ChiBelowK { chi, k });
    }
    if !chi.is_multiple_of(k) {
        return Err(Error::NotDivisible { chi, k });
    }
    if !h.is_unweighted() {
        return Err(Error::IrregularH("H must have unit edge weights".into()));
    }
    let t = match h.regularity() {
        Some(0) => return Err(Error::IrregularH("H is edgeless (t = 0)".into())),
        Some(t) => t,
        None => {
            let deg = h.degrees();
            let (lo, hi) = (deg.iter().min().unwrap(), deg.iter().max().unwrap());
            return Err(Error::IrregularH(format!("degrees range from {lo} to {hi}")));
        }
    };
    let omega = clique_number(h, clique_cap)?;
    if omega < chi {
        return Err(Error::CliqueDeficit { omega, chi });
    }
    let abs_mu_min = spectral_summary(h)?.mu_min.abs();
    let limit = t as f64 / (chi - 1) as f64;
    if abs_mu_min >= limit + GUARD_BAND {
        return Err(Error::EigenConditionViolated { abs_mu_min, limit });
    }
    if abs_mu_min > limit - GUARD_BAND {
        return Err(Error::EigenGuardBand { abs_mu_min, limit });
    }
    Ok(t)
}

/// Builds `(J_chi - I_chi) (x) A(H)`: vertex `a * n_H + u` is copy `a` of
/// `u`, and `(a, u) ~ (b, v)` iff `a != b` and `u ~ v` in `H`.
pub fn kronecker_pattern(chi: usize, h: &Graph) -> Result<Graph> {
    let nh = h.n();
    let mut pairs = Vec::with_capacity(chi * chi.saturating_sub(1) * h.edge_count());
    for a in 0..chi {
        for b in a + 1..chi {
            for e in h.edges() {
                pairs.push((a * nh + e.u, b * nh + e.v));
                pairs.push((a * nh + e.v, b * nh + e.u));
            }
        }
    }
    Graph::from_pairs(chi * nh, &pairs)
}

/// Validates the side conditions and builds the equality graph.
pub fn construct_equality_graph(chi: usize, k: usize, h: &Graph) -> Result<Graph> {
    construct_with_cap(chi, k, h, DEFAULT_CLIQUE_CAP).map(|(g, _)| g)
}

fn construct_with_cap(chi: usize, k: usize, h: &Graph, clique_cap: u64) -> Result<(Graph, usize)> {
    let t = check_equality_conditions(chi, k, h, clique_cap)?;
    let g = kronecker_pattern(chi, h)?;
    assert_eq!(g.regularity(), Some((chi - 1) * t), "construction must be (chi-1)t-regular");
    Ok((g, t))
}

/// Vertex blocks of the construction: vertex `a * n_H + u` is in class `a`.
pub fn natural_classes(chi: usize, n_h: usize) -> Result<Classes> {
    Classes::from_labels((0..chi * n_h).map(|v| v / n_h).collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CertificationPath {
    /// Lifted balanced cut through the blocks equals the upper bound.
    Pinch,
    /// Exhaustive optimum equals the upper bound.
    Exact,
    None,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EqualityReport {
    pub chi: usize,
    pub k: usize,
    pub t: usize,
    pub n_h: usize,
    pub n_g: usize,
    pub m_g: f64,
    pub mu_min_g: f64,
    /// Smallest-eigenvalue upper bound for `G`.
    pub bound: f64,
    /// `t_k(chi) m / C(chi, 2)` through the `chi` blocks.
    pub lower_ratio: f64,
    /// Weight of the lifted balanced cut, when `chi` is within the grouping cap.
    pub pinch_cut: Option<f64>,
    pub pinch_holds: bool,
    pub exact: Option<f64>,
    pub exact_reason: Option<String>,
    pub clique_g: Option<usize>,
    pub clique_reason: Option<String>,
    pub certified: bool,
    pub path: CertificationPath,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyOptions {
    /// Enumeration budget for the exact solver; 0 skips it.
    pub budget: u128,
    pub clique_cap: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { budget: crate::solvers::DEFAULT_BUDGET, clique_cap: DEFAULT_CLIQUE_CAP }
    }
}

/// Builds the equality graph and certifies that it attains the bound.
///
/// The pinch is preferred: the block-grouping cut is a lower bound on the
/// optimum, so if it reaches the upper bound both are the optimum. The
/// exhaustive solver runs as a cross-check when the budget allows, and the
/// clique number of `G` is confirmed to be `chi` when the search fits the cap.
pub fn verify_equality(chi: usize, k: usize, h: &Graph, options: &VerifyOptions) -> Result<EqualityReport> {
    let (g, t) = construct_with_cap(chi, k, h, options.clique_cap)?;
    let n_g = g.n();
    let m_g = g.total_weight();
    let tol = slack(m_g);

    let summary = spectral_summary(&g)?;
    if (summary.mu_min + t as f64).abs() > 1e-8 {
        return Err(Error::CertificationFailed(format!(
            "mu_min(G) = {} differs from -t = -{t}",
            summary.mu_min
        )));
    }
    let bound = upper_bound_eigmin(m_g, n_g, k, summary.mu_min)?;
    let lower_ratio = lower_bound_ratio(chi, k, m_g)?;

    let pinch_cut = if chi <= MAX_RATIO_CLASSES {
        let classes = natural_classes(chi, h.n())?;
        Some(rpartite_ratio_cut(&g, &classes, k)?.cut_weight())
    } else {
        None
    };
    let pinch_value = pinch_cut.unwrap_or(lower_ratio);
    let pinch_holds = (pinch_value - bound).abs() <= tol && (lower_ratio - bound).abs() <= tol;

    let (exact, exact_reason) = if options.budget == 0 {
        (None, Some("exact solver disabled".to_string()))
    } else {
        match exact_max_kcut(&g, k, options.budget) {
            Ok(p) => (Some(p.cut_weight()), None),
            Err(e) if e.is_budget() => (None, Some(e.to_string())),
            Err(e) => return Err(e),
        }
    };

    let (clique_g, clique_reason) = match clique_number(&g, options.clique_cap) {
        Ok(w) => {
            if w != chi {
                return Err(Error::CertificationFailed(format!("omega(G) = {w}, expected chi = {chi}")));
            }
            (Some(w), None)
        }
        Err(e) if e.is_budget() => (None, Some(e.to_string())),
        Err(e) => return Err(e),
    };

    let exact_matches = exact.map(|x| (bound - x).abs() <= tol);
    let certified = match exact_matches {
        Some(ok) => ok,
        None => pinch_holds,
    };
    let path = if !certified {
        CertificationPath::None
    } else if pinch_holds {
        CertificationPath::Pinch
    } else {
        CertificationPath::Exact
    };

    Ok(EqualityReport {
        chi,
        k,
        t,
        n_h: h.n(),
        n_g,
        m_g,
        mu_min_g: summary.mu_min,
        bound,
        lower_ratio,
        pinch_cut,
        pinch_holds,
        exact,
        exact_reason,
        clique_g,
        clique_reason,
        certified,
        path,
    })
}
