//! Closed-form bounds on the maximum k-cut and the quantities around them.
//!
//! Every bound takes the total weight `m` in place of the edge count, so
//! weighted graphs are handled uniformly.

use crate::error::{Error, Result};
use crate::graph::{Classes, Graph};
use crate::solvers::{self, DEFAULT_BUDGET};
use crate::spectra::{spectral_summary, SpectralSummary};
use serde::{Deserialize, Serialize};

/// Absolute slack for comparing bounds on a graph of total weight `m`.
pub fn slack(m: f64) -> f64 {
    1e-9 * m.max(1.0)
}

/// Maximum number of edges in a k-partite graph on `n` vertices.
///
/// With `n = qk + s`, `0 <= s < k`, this is `(k-1) q (qk + 2s) / 2 + C(s, 2)`,
/// which equals `((k-1)/(2k))(n^2 - s^2) + C(s, 2)` and is evaluated without
/// division rounding.
pub fn turan_number(n: u64, k: u64) -> Result<u64> {
    if k == 0 {
        return Err(Error::InvalidParameter("Turán number needs k >= 1".into()));
    }
    let (n, k) = (n as u128, k as u128);
    let (q, s) = (n / k, n % k);
    let t = (k - 1) * q * (q * k + 2 * s) / 2 + s * s.saturating_sub(1) / 2;
    u64::try_from(t).map_err(|_| Error::InvalidParameter("Turán number overflows u64".into()))
}

fn binom2(n: u64) -> u64 {
    n * n.saturating_sub(1) / 2
}

/// Where `t_k(n)` sits between `((k-1)/2k) n^2 - k/8` and `((k-1)/2k) n^2`.
/// All comparisons are exact: both sides are scaled by `8k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TuranSandwich {
    pub t: u64,
    pub lower_holds: bool,
    pub upper_holds: bool,
    pub lower_tight: bool,
    pub upper_tight: bool,
}

pub fn turan_sandwich(n: u64, k: u64) -> Result<TuranSandwich> {
    let t = turan_number(n, k)?;
    let (n128, k128) = (n as i128, k as i128);
    let scaled_t = 8 * k128 * t as i128;
    let upper = 4 * (k128 - 1) * n128 * n128;
    let lower = upper - k128 * k128;
    Ok(TuranSandwich {
        t,
        lower_holds: lower <= scaled_t,
        upper_holds: scaled_t <= upper,
        lower_tight: lower == scaled_t,
        upper_tight: scaled_t == upper,
    })
}

fn check_k(k: usize) -> Result<()> {
    if k < 2 {
        return Err(Error::InvalidParameter(format!("k = {k}, need k >= 2")));
    }
    Ok(())
}

/// `((k-1)/k) (m - mu_min n / 2)`.
pub fn upper_bound_eigmin(m: f64, n: usize, k: usize, mu_min: f64) -> Result<f64> {
    check_k(k)?;
    if n == 0 {
        return Err(Error::EmptyVertexSet);
    }
    let kf = k as f64;
    Ok((kf - 1.0) / kf * (m - mu_min * n as f64 / 2.0))
}

/// `(n(k-1)/(2k)) lambda_max`.
pub fn upper_bound_laplacian(n: usize, k: usize, lambda_max: f64) -> Result<f64> {
    check_k(k)?;
    let kf = k as f64;
    Ok(n as f64 * (kf - 1.0) / (2.0 * kf) * lambda_max)
}

/// `(1 - 1/k) m`, guaranteed by [`solvers::greedy_kcut`].
pub fn lower_bound_trivial(k: usize, m: f64) -> Result<f64> {
    check_k(k)?;
    Ok((1.0 - 1.0 / k as f64) * m)
}

/// `t_k(r) m / C(r, 2)` for an r-partite graph of total weight `m`.
pub fn lower_bound_ratio(r: usize, k: usize, m: f64) -> Result<f64> {
    check_k(k)?;
    if r < k {
        return Err(Error::InvalidParameter(format!("r = {r} < k = {k}")));
    }
    let t = turan_number(r as u64, k as u64)?;
    Ok(t as f64 * m / binom2(r as u64) as f64)
}

/// `1 + 2m / (n lambda_max - 2m)`. An edgeless graph (`m = 0`, `lambda_max = 0`)
/// yields 1.
pub fn chromatic_lower_bound(m: f64, n: usize, lambda_max: f64) -> Result<f64> {
    let denom = n as f64 * lambda_max - 2.0 * m;
    if denom <= 1e-12 {
        if m == 0.0 {
            return Ok(1.0);
        }
        return Err(Error::DegenerateBound(format!("n * lambda_max - 2m = {denom} is not positive")));
    }
    Ok(1.0 + 2.0 * m / denom)
}

/// Integer chromatic bound: the ceiling of [`chromatic_lower_bound`] with a
/// small guard so exact integers are not pushed up by rounding.
pub fn chromatic_lower_bound_ceil(value: f64) -> u64 {
    (value - 1e-9).ceil().max(1.0) as u64
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct KPartiteCheck {
    /// Largest adjacency eigenvalue of H.
    pub lhs: f64,
    /// `((k-1)/k)` times the largest Laplacian eigenvalue of H.
    pub rhs: f64,
    pub holds: bool,
    pub slack: f64,
}

/// Checks `mu_max(H) <= ((k-1)/k) lambda_max(H)` for a k-partite `h`. When a
/// witness labeling is supplied it must have no intra-class weight.
pub fn kpartite_eigen_inequality_check(
    h: &Graph,
    k: usize,
    summary: &SpectralSummary,
    witness: Option<&[usize]>,
) -> Result<KPartiteCheck> {
    check_k(k)?;
    if let Some(labels) = witness {
        let intra = crate::graph::intra_weight(h, k, labels)?;
        if intra > 0.0 {
            return Err(Error::IntraClassWeight(intra));
        }
    }
    let lhs = summary.mu_max;
    let rhs = (k as f64 - 1.0) / k as f64 * summary.lambda_max;
    Ok(KPartiteCheck { lhs, rhs, holds: lhs <= rhs + 1e-9, slack: rhs - lhs })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundOptions {
    pub r_partition: Option<Classes>,
    pub compute_exact: bool,
    /// Maximum assignments the exact solver may enumerate.
    pub budget: u128,
}

impl Default for BoundOptions {
    fn default() -> Self {
        BoundOptions { r_partition: None, compute_exact: false, budget: DEFAULT_BUDGET }
    }
}

/// Integer floors of the upper bounds; present only for integer weights.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Floors {
    pub upper_eigmin: i64,
    pub upper_laplacian: i64,
    pub upper_trivial: i64,
}

/// Distances from the exact optimum to each bound.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Gaps {
    pub upper_eigmin: f64,
    pub upper_laplacian: f64,
    pub best_upper: f64,
    pub lower_trivial: f64,
    pub lower_ratio: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundReport {
    pub k: usize,
    pub n: usize,
    pub m: f64,
    pub spectral: SpectralSummary,
    pub upper_eigmin: f64,
    pub upper_laplacian: f64,
    pub upper_trivial: f64,
    pub lower_trivial: f64,
    pub lower_ratio: Option<f64>,
    pub r: Option<usize>,
    pub exact: Option<f64>,
    pub exact_assignment: Option<Vec<usize>>,
    /// Why `exact` is absent when it was requested.
    pub exact_reason: Option<String>,
    pub chromatic_lb: f64,
    pub chromatic_lb_ceil: u64,
    pub floors: Option<Floors>,
    pub gaps: Option<Gaps>,
}

impl BoundReport {
    pub fn best_upper(&self) -> f64 {
        self.upper_eigmin.min(self.upper_laplacian).min(self.upper_trivial)
    }
}

pub fn bound_report(g: &Graph, k: usize, options: &BoundOptions) -> Result<BoundReport> {
    check_k(k)?;
    let summary = spectral_summary(g)?;
    bound_report_with(g, k, options, summary)
}

/// [`bound_report`] with a precomputed spectral summary.
pub fn bound_report_with(
    g: &Graph,
    k: usize,
    options: &BoundOptions,
    spectral: SpectralSummary,
) -> Result<BoundReport> {
    check_k(k)?;
    let n = g.n();
    let m = g.total_weight();
    let upper_eigmin = upper_bound_eigmin(m, n, k, spectral.mu_min)?;
    let upper_laplacian = upper_bound_laplacian(n, k, spectral.lambda_max)?;
    let lower_trivial = lower_bound_trivial(k, m)?;

    let (lower_ratio, r) = match &options.r_partition {
        Some(classes) => {
            classes.check_rpartite(g)?;
            (Some(lower_bound_ratio(classes.r(), k, m)?), Some(classes.r()))
        }
        None => (None, None),
    };

    let (mut exact, mut exact_assignment, mut exact_reason) = (None, None, None);
    if options.compute_exact {
        match solvers::exact_max_kcut(g, k, options.budget) {
            Ok(p) => {
                exact = Some(p.cut_weight());
                exact_assignment = Some(p.into_assignment());
            }
            Err(e) if e.is_budget() => exact_reason = Some(e.to_string()),
            Err(e) => return Err(e),
        }
    }

    let chromatic_lb = chromatic_lower_bound(m, n, spectral.lambda_max)?;
    let guard = slack(m);
    let floors = g.has_integer_weights().then(|| Floors {
        upper_eigmin: (upper_eigmin + guard).floor() as i64,
        upper_laplacian: (upper_laplacian + guard).floor() as i64,
        upper_trivial: (m + guard).floor() as i64,
    });
    let best_upper = upper_eigmin.min(upper_laplacian).min(m);
    let gaps = exact.map(|x| Gaps {
        upper_eigmin: upper_eigmin - x,
        upper_laplacian: upper_laplacian - x,
        best_upper: best_upper - x,
        lower_trivial: x - lower_trivial,
        lower_ratio: lower_ratio.map(|l| x - l),
    });

    Ok(BoundReport {
        k,
        n,
        m,
        spectral,
        upper_eigmin,
        upper_laplacian,
        upper_trivial: m,
        lower_trivial,
        lower_ratio,
        r,
        exact,
        exact_assignment,
        exact_reason,
        chromatic_lb,
        chromatic_lb_ceil: chromatic_lower_bound_ceil(chromatic_lb),
        floors,
        gaps,
    })
}
