//! Max k-cut solvers: exhaustive enumeration over restricted-growth strings,
//! the greedy conditional-expectation cut, first-improvement local search,
//! the balanced class-grouping cut for r-partite graphs, and the quadratic
//! form identity that underlies the smallest-eigenvalue bound.

use crate::bounds::{lower_bound_ratio, lower_bound_trivial, slack};
use crate::error::{Error, Result};
use crate::graph::{contract_partition, Classes, CutPartition, Graph};
use crate::spectra::spectral_summary;
use serde::{Deserialize, Serialize};

/// Default enumeration budget, in assignments.
pub const DEFAULT_BUDGET: u128 = 100_000_000;

/// Largest class count accepted by [`rpartite_ratio_cut`].
pub const MAX_RATIO_CLASSES: usize = 14;

/// Upper bound `k^(n-1)` on the number of restricted-growth strings of
/// length `n` over `k` symbols, saturating.
pub fn enumeration_estimate(n: usize, k: usize) -> u128 {
    let mut est: u128 = 1;
    for _ in 1..n {
        est = est.saturating_mul(k as u128);
    }
    est
}

struct Enumerator<'a> {
    k: usize,
    /// Edges to earlier vertices: `back[v] = [(u, w)]` with `u < v`.
    back: &'a [Vec<(usize, f64)>],
    /// Weight of all edges whose larger endpoint is `>= v`.
    remaining: &'a [f64],
    eps: f64,
    assign: Vec<usize>,
    class_weight: Vec<f64>,
    best: f64,
    best_assign: Vec<usize>,
}

impl Enumerator<'_> {
    fn dfs(&mut self, v: usize, used: usize, current: f64) {
        let n = self.assign.len();
        if v == n {
            if current > self.best {
                self.best = current;
                self.best_assign.clone_from(&self.assign);
            }
            return;
        }
        if current + self.remaining[v] + self.eps < self.best {
            return;
        }
        let mut to_class = std::mem::take(&mut self.class_weight);
        to_class.iter_mut().for_each(|x| *x = 0.0);
        let mut back_total = 0.0;
        for &(u, w) in &self.back[v] {
            to_class[self.assign[u]] += w;
            back_total += w;
        }
        let gains: Vec<f64> = (0..(used + 1).min(self.k)).map(|c| back_total - to_class[c]).collect();
        self.class_weight = to_class;
        for (c, gain) in gains.into_iter().enumerate() {
            self.assign[v] = c;
            self.dfs(v + 1, used.max(c + 1), current + gain);
        }
        self.assign[v] = 0;
    }
}

/// Globally optimal k-cut.
///
/// Vertex 0 is fixed in class 0 and class `j + 1` is opened only after class
/// `j`, so each unlabeled partition is visited once. Strings are visited in
/// lexicographic order and the incumbent is replaced only on strict
/// improvement, so the returned assignment is the lexicographically smallest
/// optimal restricted-growth string. Refuses when `k^(n-1)` exceeds `budget`.
pub fn exact_max_kcut(g: &Graph, k: usize, budget: u128) -> Result<CutPartition> {
    if k == 0 {
        return Err(Error::InvalidParameter("k must be at least 1".into()));
    }
    let n = g.n();
    let estimate = enumeration_estimate(n, k);
    if estimate > budget {
        return Err(Error::BudgetExceeded { estimate, budget });
    }
    let mut back = vec![Vec::new(); n];
    for e in g.edges() {
        back[e.v].push((e.u, e.w));
    }
    let mut remaining = vec![0.0; n + 1];
    for v in (0..n).rev() {
        remaining[v] = remaining[v + 1] + back[v].iter().map(|&(_, w)| w).sum::<f64>();
    }
    let mut en = Enumerator {
        k,
        back: &back,
        remaining: &remaining,
        eps: 1e-12 * g.total_weight().max(1.0),
        assign: vec![0; n],
        class_weight: vec![0.0; k],
        best: -1.0,
        best_assign: vec![0; n],
    };
    // vertex 0 has no earlier neighbors and sits in class 0
    en.dfs(1.min(n), 1, 0.0);
    CutPartition::new(g, k, en.best_assign)
}

fn check_order(n: usize, order: &[usize]) -> Result<()> {
    if order.len() != n {
        return Err(Error::InvalidOrder(format!("length {} for {n} vertices", order.len())));
    }
    let mut seen = vec![false; n];
    for &v in order {
        if v >= n {
            return Err(Error::InvalidOrder(format!("vertex {v} out of range")));
        }
        if std::mem::replace(&mut seen[v], true) {
            return Err(Error::InvalidOrder(format!("vertex {v} repeated")));
        }
    }
    Ok(())
}

/// Places vertices one at a time in the class holding the least weight of
/// already-placed neighbors (lowest class on ties). Each step cuts at least a
/// `(k-1)/k` share of the newly decided weight, so the result is at least
/// `(1 - 1/k) m`.
pub fn greedy_kcut(g: &Graph, k: usize, order: &[usize]) -> Result<CutPartition> {
    if k < 2 {
        return Err(Error::InvalidParameter(format!("k = {k}, need k >= 2")));
    }
    let n = g.n();
    check_order(n, order)?;
    let adj = g.adjacency_lists();
    let mut assign = vec![usize::MAX; n];
    let mut to_class = vec![0.0; k];
    for &v in order {
        to_class.iter_mut().for_each(|x| *x = 0.0);
        for &(u, w) in &adj[v] {
            if assign[u] != usize::MAX {
                to_class[assign[u]] += w;
            }
        }
        let mut best = 0;
        for c in 1..k {
            if to_class[c] < to_class[best] {
                best = c;
            }
        }
        assign[v] = best;
    }
    let p = CutPartition::new(g, k, assign)?;
    let m = g.total_weight();
    let guarantee = lower_bound_trivial(k, m)?;
    assert!(
        p.cut_weight() >= guarantee - slack(m),
        "greedy cut {} below (1 - 1/k) m = {guarantee}",
        p.cut_weight()
    );
    Ok(p)
}

/// Greedy cut in the natural vertex order.
pub fn greedy_kcut_natural(g: &Graph, k: usize) -> Result<CutPartition> {
    let order: Vec<usize> = (0..g.n()).collect();
    greedy_kcut(g, k, &order)
}

/// First-improvement single-vertex moves. Each pass scans vertices in index
/// order; a vertex moves to the first class (in index order) that strictly
/// increases the cut. Passes repeat until one makes no move.
pub fn local_search_refine(g: &Graph, start: &CutPartition) -> Result<CutPartition> {
    let k = start.k();
    let mut assign = start.assignment().to_vec();
    // revalidates the start against g
    CutPartition::new(g, k, assign.clone())?;
    let adj = g.adjacency_lists();
    let eps = 1e-12 * g.total_weight().max(1.0);
    let mut to_class = vec![0.0; k];
    loop {
        let mut moved = false;
        for v in 0..g.n() {
            to_class.iter_mut().for_each(|x| *x = 0.0);
            for &(u, w) in &adj[v] {
                to_class[assign[u]] += w;
            }
            let here = to_class[assign[v]];
            if let Some(c) = (0..k).find(|&c| here - to_class[c] > eps) {
                assign[v] = c;
                moved = true;
            }
        }
        if !moved {
            break;
        }
    }
    CutPartition::new(g, k, assign)
}

/// All groupings of `r` items into exactly `k` unlabeled groups whose sizes
/// are `floor(r/k)` or `ceil(r/k)`, as restricted-growth strings in
/// lexicographic order. These are exactly the edge-maximal k-partite
/// subgraphs of `K_r`.
pub fn balanced_groupings(r: usize, k: usize) -> Vec<Vec<usize>> {
    struct Walk {
        r: usize,
        k: usize,
        q: usize,
        s: usize,
        sizes: Vec<usize>,
        cur: Vec<usize>,
        out: Vec<Vec<usize>>,
    }
    impl Walk {
        fn rec(&mut self, pos: usize) {
            if pos == self.r {
                if self.sizes.len() == self.k {
                    self.out.push(self.cur.clone());
                }
                return;
            }
            let open = self.sizes.len();
            let full = self.sizes.iter().filter(|&&x| x > self.q).count();
            for c in 0..(open + 1).min(self.k) {
                // every group still unopened needs at least one item
                if c == open && self.r - pos < self.k - open {
                    continue;
                }
                let size = self.sizes.get(c).copied().unwrap_or(0);
                let fits = if self.s == 0 {
                    size < self.q
                } else {
                    size < self.q || (size == self.q && full < self.s)
                };
                if !fits {
                    continue;
                }
                if c == open {
                    self.sizes.push(0);
                }
                self.sizes[c] += 1;
                self.cur.push(c);
                self.rec(pos + 1);
                self.cur.pop();
                self.sizes[c] -= 1;
                if c == open {
                    self.sizes.pop();
                }
            }
        }
    }
    if k == 0 || k > r {
        return Vec::new();
    }
    let mut walk = Walk { r, k, q: r / k, s: r % k, sizes: Vec::new(), cur: Vec::new(), out: Vec::new() };
    walk.rec(0);
    walk.out
}

/// Lower-bound cut for an r-partite graph: contract the classes to a
/// weighted `K_r`, take the heaviest balanced grouping of the classes into
/// `k` groups, and lift it back. Since the heaviest grouping weighs at least
/// the mean over all balanced groupings, the cut is at least
/// `t_k(r) m / C(r, 2)`.
pub fn rpartite_ratio_cut(g: &Graph, classes: &Classes, k: usize) -> Result<CutPartition> {
    let r = classes.r();
    if k < 2 || r < k {
        return Err(Error::InvalidParameter(format!("need r >= k >= 2, got r = {r}, k = {k}")));
    }
    if r > MAX_RATIO_CLASSES {
        return Err(Error::InvalidParameter(format!(
            "r = {r} exceeds the enumeration cap of {MAX_RATIO_CLASSES} classes"
        )));
    }
    let contracted = contract_partition(g, classes)?;
    let mut best: Option<(f64, Vec<usize>)> = None;
    for grouping in balanced_groupings(r, k) {
        let w = crate::graph::cut_weight(&contracted, k, &grouping)?;
        if best.as_ref().is_none_or(|(b, _)| w > *b) {
            best = Some((w, grouping));
        }
    }
    let (_, grouping) = best.expect("r >= k admits a balanced grouping");
    let lifted: Vec<usize> = classes.labels().iter().map(|&c| grouping[c]).collect();
    let p = CutPartition::new(g, k, lifted)?;
    let m = g.total_weight();
    let bound = lower_bound_ratio(r, k, m)?;
    assert!(
        p.cut_weight() >= bound - slack(m),
        "ratio cut {} below t_k(r) m / C(r,2) = {bound}",
        p.cut_weight()
    );
    Ok(p)
}

/// Residuals of the two identities behind the smallest-eigenvalue bound,
/// evaluated on an arbitrary partition.
///
/// For each class `i` the test vector `y_i` has `1 - k` on class `i` and `1`
/// elsewhere. Then `sum ||y_i||^2 = (k^2 - k) n` and
/// `sum <A y_i, y_i> = 2k(k-1) m - 2k^2 c` where `c` is the cut weight.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct IdentityResiduals {
    pub norm_sum: f64,
    pub norm_expected: f64,
    pub form_sum: f64,
    pub form_expected: f64,
    pub norm_residual: f64,
    pub form_residual: f64,
    /// `1e-9 * max(1, k^2 m)`.
    pub tolerance: f64,
    /// Smallest `<A y_i, y_i> - mu_min ||y_i||^2` over the classes.
    pub rayleigh_min_slack: f64,
    pub rayleigh_holds: bool,
}

impl IdentityResiduals {
    pub fn holds(&self) -> bool {
        self.norm_residual <= self.tolerance && self.form_residual <= self.tolerance && self.rayleigh_holds
    }
}

pub fn quadratic_form_identity_check(g: &Graph, partition: &CutPartition) -> Result<IdentityResiduals> {
    let summary = spectral_summary(g)?;
    quadratic_form_identity_check_with(g, partition, summary.mu_min, summary.tol)
}

/// As [`quadratic_form_identity_check`] with a known `mu_min` accurate to
/// `mu_tol`.
pub fn quadratic_form_identity_check_with(
    g: &Graph,
    partition: &CutPartition,
    mu_min: f64,
    mu_tol: f64,
) -> Result<IdentityResiduals> {
    let k = partition.k();
    if k < 2 {
        return Err(Error::InvalidParameter(format!("k = {k}, need k >= 2")));
    }
    let assign = partition.assignment();
    let c = crate::graph::cut_weight(g, k, assign)?;
    let n = g.n();
    let m = g.total_weight();
    let kf = k as f64;

    let mut norm_sum = 0.0;
    let mut form_sum = 0.0;
    let mut rayleigh_min_slack = f64::INFINITY;
    let mut rayleigh_holds = true;
    for i in 0..k {
        let y: Vec<f64> = assign.iter().map(|&a| if a == i { 1.0 - kf } else { 1.0 }).collect();
        let norm: f64 = y.iter().map(|x| x * x).sum();
        let form: f64 = g.edges().iter().map(|e| 2.0 * e.w * y[e.u] * y[e.v]).sum();
        norm_sum += norm;
        form_sum += form;
        let s = form - mu_min * norm;
        rayleigh_min_slack = rayleigh_min_slack.min(s);
        if (mu_min - mu_tol) * norm > form + 1e-8 {
            rayleigh_holds = false;
        }
    }
    let norm_expected = (kf * kf - kf) * n as f64;
    let form_expected = 2.0 * kf * (kf - 1.0) * m - 2.0 * kf * kf * c;
    Ok(IdentityResiduals {
        norm_sum,
        norm_expected,
        form_sum,
        form_expected,
        norm_residual: (norm_sum - norm_expected).abs(),
        form_residual: (form_sum - form_expected).abs(),
        tolerance: 1e-9 * (kf * kf * m).max(1.0),
        rayleigh_min_slack,
        rayleigh_holds,
    })
}
