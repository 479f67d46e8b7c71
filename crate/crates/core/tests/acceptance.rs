//! Acceptance criteria. Runs every criterion, prints one PASS/FAIL line
//! each, and exits non-zero if any fails.

mod common;

use common::{is_rgs, naive_max_kcut, random_weighted, sweep_instances, Stream};
use maxkcut::bounds::{
    self, chromatic_lower_bound, chromatic_lower_bound_ceil, kpartite_eigen_inequality_check, slack,
    turan_number, turan_sandwich, upper_bound_eigmin, upper_bound_laplacian, BoundOptions,
};
use maxkcut::extremal::{complete_h, verify_equality, CertificationPath, VerifyOptions};
use maxkcut::graph::{CutPartition, Family, Graph};
use maxkcut::solvers::{self, DEFAULT_BUDGET};
use maxkcut::spectra::{spectra, spectral_summary, symmetric_eigenvalues};
use std::time::{Duration, Instant};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn fam(f: Family) -> Graph {
    f.generate().unwrap()
}

/// 1. Equality family.
fn equality_family() -> Outcome {
    let cases = [(2, 2, 3), (2, 2, 4), (3, 3, 4), (4, 2, 5)];
    let mut notes = Vec::new();
    for (chi, k, hn) in cases {
        let h = complete_h(hn).unwrap();
        let start = Instant::now();
        let r = verify_equality(chi, k, &h, &VerifyOptions::default()).map_err(|e| e.to_string())?;
        let elapsed = start.elapsed();
        let label = format!("(chi={chi}, k={k}, K_{hn})");
        ensure(elapsed < Duration::from_secs(60), || format!("{label} took {elapsed:?}"))?;
        ensure(r.certified, || format!("{label} not certified: {r:?}"))?;
        if r.n_g <= 12 {
            let exact = r.exact.ok_or_else(|| format!("{label}: exact missing"))?;
            ensure(r.bound.round() == exact && (r.bound - exact).abs() <= slack(r.m_g), || {
                format!("{label}: bound {} vs exact {exact}", r.bound)
            })?;
        } else {
            let pinch = r.pinch_cut.ok_or_else(|| format!("{label}: pinch cut missing"))?;
            ensure(r.path == CertificationPath::Pinch && (pinch - r.bound).abs() <= slack(r.m_g), || {
                format!("{label}: pinch {pinch} vs bound {}", r.bound)
            })?;
        }
        notes.push(format!("{label} bound {} in {:.0?}", r.bound, elapsed));
    }
    Ok(notes.join("; "))
}

/// 2. Complete-graph tightness.
fn complete_graph_tightness() -> Outcome {
    let mut checked = 0;
    for k in 2..=4usize {
        for n in (k..=12).step_by(k) {
            let g = fam(Family::Complete(n));
            let s = spectral_summary(&g).unwrap();
            let m = g.total_weight();
            let ub = upper_bound_eigmin(m, n, k, s.mu_min).unwrap();
            let floor = (ub + slack(m)).floor() as u64;
            let t = turan_number(n as u64, k as u64).unwrap();
            let exact = solvers::exact_max_kcut(&g, k, DEFAULT_BUDGET).unwrap().cut_weight() as u64;
            ensure(floor == t && t == exact && (ub - t as f64).abs() <= slack(m), || {
                format!("K_{n}, k={k}: bound {ub}, t_k(n) {t}, exact {exact}")
            })?;
            checked += 1;
        }
    }
    Ok(format!("{checked} (n, k) pairs"))
}

/// 3. Petersen spot check.
fn petersen_spot_check() -> Outcome {
    let g = fam(Family::Petersen);
    let opts = BoundOptions { compute_exact: true, ..Default::default() };
    let r = bounds::bound_report(&g, 2, &opts).map_err(|e| e.to_string())?;
    ensure((r.upper_eigmin - 12.5).abs() <= 1e-9, || format!("upper_eigmin {}", r.upper_eigmin))?;
    ensure((r.upper_laplacian - 12.5).abs() <= 1e-9, || format!("upper_laplacian {}", r.upper_laplacian))?;
    ensure(r.floors.map(|f| f.upper_eigmin) == Some(12), || format!("floors {:?}", r.floors))?;
    ensure(r.exact == Some(12.0), || format!("exact {:?}", r.exact))?;
    Ok("upper_eigmin 12.5, floor 12, exact 12, upper_laplacian 12.5".into())
}

/// Per-instance data shared by criteria 4, 6 and 8.
struct SweepRecord {
    label: String,
    k: usize,
    g: Graph,
    exact: CutPartition,
    lower_trivial: f64,
    greedy: f64,
    upper_eigmin: f64,
    upper_laplacian: f64,
    lambda_g: f64,
    laplacian_min: f64,
}

fn run_sweep() -> Vec<SweepRecord> {
    let mut out = Vec::new();
    for (n, p, seed, g) in sweep_instances() {
        let s = spectra(&g).unwrap();
        for k in [2, 3] {
            let m = g.total_weight();
            out.push(SweepRecord {
                label: format!("gnp(n={n}, p={p}, seed={seed}), k={k}"),
                k,
                exact: solvers::exact_max_kcut(&g, k, DEFAULT_BUDGET).unwrap(),
                lower_trivial: bounds::lower_bound_trivial(k, m).unwrap(),
                greedy: solvers::greedy_kcut_natural(&g, k).unwrap().cut_weight(),
                upper_eigmin: upper_bound_eigmin(m, n, k, s.summary.mu_min).unwrap(),
                upper_laplacian: upper_bound_laplacian(n, k, s.summary.lambda_max).unwrap(),
                lambda_g: s.summary.lambda_max,
                laplacian_min: s.laplacian[0],
                g: g.clone(),
            });
        }
    }
    out
}

/// 4. Soundness sweep.
fn soundness_sweep(sweep: &[SweepRecord]) -> Outcome {
    let mut violations = Vec::new();
    let (mut eig_wins, mut lap_wins) = (0, 0);
    for r in sweep {
        let m = r.g.total_weight();
        let tol = slack(m);
        let exact = r.exact.cut_weight();
        let upper = r.upper_eigmin.min(r.upper_laplacian);
        if !(r.lower_trivial <= r.greedy + tol && r.greedy <= exact + tol && exact <= upper + tol) {
            violations
                .push(format!("{}: {} <= {} <= {} <= {upper}", r.label, r.lower_trivial, r.greedy, exact));
        }
        // the two upper bounds are incomparable in general; count both directions
        if r.upper_eigmin < r.upper_laplacian - tol {
            eig_wins += 1;
        } else if r.upper_laplacian < r.upper_eigmin - tol {
            lap_wins += 1;
        }
    }
    ensure(violations.is_empty(), || format!("{} violations, first: {}", violations.len(), violations[0]))?;
    Ok(format!(
        "{} (graph, k) cases, 0 violations; eigmin bound tighter in {eig_wins}, laplacian tighter in {lap_wins}",
        sweep.len()
    ))
}

/// 5. Proof-identity suite.
fn proof_identity_suite() -> Outcome {
    let k4 = fam(Family::Complete(4));
    let p = CutPartition::new(&k4, 2, vec![0, 0, 1, 1]).unwrap();
    let r = solvers::quadratic_form_identity_check(&k4, &p).unwrap();
    ensure(r.form_sum == -8.0 && r.holds(), || format!("K_4 worked value: {r:?}"))?;

    let mut s = Stream(0x5eed);
    let mut worst: f64 = 0.0;
    for trial in 0..1000 {
        let n = 2 + s.below(11);
        let k = 2 + s.below(3);
        let g = random_weighted(n, 0.2 + 0.7 * s.unit(), trial % 2 == 1, &mut s);
        let labels: Vec<usize> = (0..n).map(|_| s.below(k)).collect();
        let p = CutPartition::new(&g, k, labels).unwrap();
        let r = solvers::quadratic_form_identity_check(&g, &p).unwrap();
        let tol = 1e-9 * (k * k) as f64 * g.total_weight().max(1.0);
        ensure(r.norm_residual <= tol && r.form_residual <= tol && r.rayleigh_holds, || {
            format!("trial {trial}: {r:?}")
        })?;
        worst = worst.max(r.norm_residual.max(r.form_residual) / tol);
    }
    Ok(format!("1000 triples + K_4 value -8; worst residual {worst:.2e} of tolerance"))
}

/// 6. Spectral accuracy.
fn spectral_accuracy(sweep: &[SweepRecord]) -> Outcome {
    let mut worst: f64 = 0.0;
    for n in 1..=12 {
        let vals = symmetric_eigenvalues(&fam(Family::Complete(n)).adjacency_matrix()).unwrap();
        let mut expect = vec![-1.0; n - 1];
        expect.push(n as f64 - 1.0);
        for (a, b) in vals.iter().zip(&expect) {
            worst = worst.max((a - b).abs());
        }
    }
    for n in 3..=16 {
        let vals = symmetric_eigenvalues(&fam(Family::Cycle(n)).adjacency_matrix()).unwrap();
        let mut expect: Vec<f64> =
            (0..n).map(|j| 2.0 * (2.0 * std::f64::consts::PI * j as f64 / n as f64).cos()).collect();
        expect.sort_by(f64::total_cmp);
        for (a, b) in vals.iter().zip(&expect) {
            worst = worst.max((a - b).abs());
        }
    }
    ensure(worst <= 1e-8, || format!("closed-form error {worst:e}"))?;
    let min_lap = sweep.iter().map(|r| r.laplacian_min).fold(f64::INFINITY, f64::min);
    ensure(min_lap >= -1e-9, || format!("Laplacian eigenvalue {min_lap:e}"))?;
    Ok(format!("max closed-form error {worst:.1e}; min Laplacian eigenvalue over sweep {min_lap:.1e}"))
}

/// 7. Chromatic bound.
fn chromatic_bound() -> Outcome {
    for n in 2..=12 {
        let g = fam(Family::Complete(n));
        let s = spectral_summary(&g).unwrap();
        let x = chromatic_lower_bound(g.total_weight(), n, s.lambda_max).unwrap();
        ensure((x - n as f64).abs() <= 1e-9 && chromatic_lower_bound_ceil(x) == n as u64, || {
            format!("K_{n}: {x}")
        })?;
    }
    let k33 = fam(Family::CompleteMultipartite(vec![3, 3]));
    let x = chromatic_lower_bound(9.0, 6, spectral_summary(&k33).unwrap().lambda_max).unwrap();
    ensure((x - 2.0).abs() <= 1e-9, || format!("K_3,3: {x}"))?;
    let c5 = fam(Family::Cycle(5));
    let y = chromatic_lower_bound(5.0, 5, spectral_summary(&c5).unwrap().lambda_max).unwrap();
    ensure(y > 2.23 && y < 2.24, || format!("C_5: {y}"))?;
    Ok(format!("K_n -> n for n in 2..=12; K_3,3 -> {x:.12}; C_5 -> {y:.6}"))
}

/// 8. Inequality (min) on optimal-cut subgraphs, and its tight cases.
fn kpartite_inequality(sweep: &[SweepRecord]) -> Outcome {
    let mut min_slack = f64::INFINITY;
    for r in sweep {
        let h = r.exact.cut_subgraph(&r.g);
        let hs = spectral_summary(&h).unwrap();
        let check = kpartite_eigen_inequality_check(&h, r.k, &hs, Some(r.exact.assignment()))
            .map_err(|e| format!("{}: {e}", r.label))?;
        ensure(check.slack >= -1e-9, || format!("{}: {check:?}", r.label))?;
        min_slack = min_slack.min(check.slack);
        // the chain 2 mc_k / n <= mu(H) <= ((k-1)/k) lambda(H) <= ((k-1)/k) lambda(G)
        let n = r.g.n() as f64;
        let kk = (r.k as f64 - 1.0) / r.k as f64;
        let chain = [2.0 * r.exact.cut_weight() / n, check.lhs, check.rhs, kk * r.lambda_g];
        ensure(chain.windows(2).all(|w| w[0] <= w[1] + 1e-9), || format!("{}: chain {chain:?}", r.label))?;
    }
    let k33 = fam(Family::CompleteMultipartite(vec![3, 3]));
    let c = kpartite_eigen_inequality_check(&k33, 2, &spectral_summary(&k33).unwrap(), None).unwrap();
    ensure(c.holds && c.slack.abs() <= 1e-8, || format!("K_3,3: {c:?}"))?;
    for n in 2..=12 {
        let kn = fam(Family::Complete(n));
        let c = kpartite_eigen_inequality_check(&kn, n, &spectral_summary(&kn).unwrap(), None).unwrap();
        ensure(c.holds && c.slack.abs() <= 1e-8, || format!("K_{n}: {c:?}"))?;
    }
    Ok(format!("{} optimal-cut subgraphs, min slack {min_slack:.3e}; tight on K_3,3 and K_n", sweep.len()))
}

/// 9. Turán sandwich and its equality characterization.
fn turan_sandwich_exhaustive() -> Outcome {
    let mut count = 0;
    for n in 1..=60u64 {
        for k in 1..=n {
            let s = turan_sandwich(n, k).unwrap();
            let label = format!("n={n}, k={k}");
            ensure(s.lower_holds && s.upper_holds, || format!("{label}: sandwich fails"))?;
            ensure(s.upper_tight == (n % k == 0), || format!("{label}: right equality"))?;
            ensure(s.lower_tight == (k % 2 == 0 && n % k == k / 2), || format!("{label}: left equality"))?;
            count += 1;
        }
    }
    Ok(format!("{count} (n, k) pairs"))
}

/// 10. Oracle equivalence with the naive k^n enumeration.
fn oracle_equivalence() -> Outcome {
    let mut s = Stream(0x0a11_ce5e);
    let mut problems = 0;
    for i in 0..50 {
        let n = 1 + s.below(7);
        let g = random_weighted(n, 0.3 + 0.6 * s.unit(), i % 3 == 2, &mut s);
        for k in [2, 3] {
            let p = solvers::exact_max_kcut(&g, k, DEFAULT_BUDGET).unwrap();
            let naive = naive_max_kcut(&g, k);
            ensure(
                (p.cut_weight() - naive).abs() <= slack(g.total_weight()) && is_rgs(p.assignment()),
                || format!("graph {i}, k={k}: {} vs naive {naive}", p.cut_weight()),
            )?;
            problems += 1;
        }
    }
    Ok(format!("{problems} problems over 50 graphs"))
}

fn main() {
    let sweep = run_sweep();
    let criteria: Vec<(&str, Box<dyn Fn() -> Outcome + '_>)> = vec![
        ("equality family", Box::new(equality_family)),
        ("complete-graph tightness", Box::new(complete_graph_tightness)),
        ("Petersen spot check", Box::new(petersen_spot_check)),
        ("soundness sweep", Box::new(|| soundness_sweep(&sweep))),
        ("proof-identity suite", Box::new(proof_identity_suite)),
        ("spectral accuracy", Box::new(|| spectral_accuracy(&sweep))),
        ("chromatic bound", Box::new(chromatic_bound)),
        ("k-partite eigenvalue inequality", Box::new(|| kpartite_inequality(&sweep))),
        ("Turán sandwich", Box::new(turan_sandwich_exhaustive)),
        ("oracle equivalence", Box::new(oracle_equivalence)),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("AC{:<2} PASS  {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("AC{:<2} FAIL  {name}: {why}", i + 1);
            }
        }
    }
    println!("{} of {} acceptance criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
