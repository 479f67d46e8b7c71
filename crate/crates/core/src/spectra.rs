//! Dense symmetric eigenvalues by cyclic Jacobi rotations, and the three
//! extreme eigenvalues the cut bounds consume.
//!
//! Each sweep visits the pairs `(p, q)`, `p < q`, in row-major order and
//! annihilates `a[p][q]` with a plane rotation. Iteration stops once the
//! off-diagonal Frobenius norm drops to `1e-12 * max(1, ||M||_F)`. By Weyl's
//! inequality every returned eigenvalue is then within that residual of an
//! exact one, which is what [`SpectralSummary::tol`] reports.

use crate::error::{Error, Result};
use crate::graph::Graph;
use serde::{Deserialize, Serialize};

/// Relative off-diagonal stopping threshold.
pub const JACOBI_REL_TOL: f64 = 1e-12;
const MAX_SWEEPS: usize = 100;

/// Output of the Jacobi solver.
#[derive(Debug, Clone, PartialEq)]
pub struct Eigen {
    /// Ascending.
    pub values: Vec<f64>,
    /// Off-diagonal Frobenius norm at termination.
    pub off_norm: f64,
    pub sweeps: usize,
}

fn frobenius(m: &[Vec<f64>]) -> f64 {
    m.iter().flatten().map(|x| x * x).sum::<f64>().sqrt()
}

fn off_diagonal_norm(a: &[Vec<f64>]) -> f64 {
    let mut s = 0.0;
    for (p, row) in a.iter().enumerate() {
        for &x in &row[p + 1..] {
            s += x * x;
        }
    }
    (2.0 * s).sqrt()
}

fn validate(m: &[Vec<f64>]) -> Result<()> {
    let n = m.len();
    for (i, row) in m.iter().enumerate() {
        if row.len() != n {
            return Err(Error::NotSquare { rows: n, row: i, cols: row.len() });
        }
        if let Some(j) = row.iter().position(|x| !x.is_finite()) {
            return Err(Error::NonFinite(i, j));
        }
    }
    let scale = frobenius(m).max(1.0);
    for i in 0..n {
        for j in i + 1..n {
            if (m[i][j] - m[j][i]).abs() > JACOBI_REL_TOL * scale {
                return Err(Error::NotSymmetric(i, j));
            }
        }
    }
    Ok(())
}

/// Rotates `a` in place so that `a[p][q] = a[q][p] = 0`.
/// When `v` is given its columns accumulate the rotation.
fn rotate(a: &mut [Vec<f64>], v: Option<&mut [Vec<f64>]>, p: usize, q: usize) {
    let apq = a[p][q];
    if apq == 0.0 {
        return;
    }
    let theta = (a[q][q] - a[p][p]) / (2.0 * apq);
    let t = if theta.abs() > 1e150 {
        0.5 / theta
    } else {
        theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
    };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;
    a[p][p] -= t * apq;
    a[q][q] += t * apq;
    a[p][q] = 0.0;
    a[q][p] = 0.0;
    for r in 0..a.len() {
        if r == p || r == q {
            continue;
        }
        let arp = a[r][p];
        let arq = a[r][q];
        let np = c * arp - s * arq;
        let nq = s * arp + c * arq;
        a[r][p] = np;
        a[p][r] = np;
        a[r][q] = nq;
        a[q][r] = nq;
    }
    if let Some(v) = v {
        for row in v.iter_mut() {
            let vp = row[p];
            let vq = row[q];
            row[p] = c * vp - s * vq;
            row[q] = s * vp + c * vq;
        }
    }
}

/// Runs the sweeps on a copy of `m`. Returns the diagonal (unsorted), the
/// final off-diagonal norm, the sweep count and, when requested, the
/// accumulated rotation whose columns are the eigenvectors.
fn jacobi(m: &[Vec<f64>], with_vectors: bool) -> Result<(Vec<f64>, f64, usize, Option<Vec<Vec<f64>>>)> {
    validate(m)?;
    let n = m.len();
    let mut a: Vec<Vec<f64>> = m.to_vec();
    // symmetrize exactly so rotations see one value per pair
    for i in 0..n {
        for j in i + 1..n {
            let x = 0.5 * (a[i][j] + a[j][i]);
            a[i][j] = x;
            a[j][i] = x;
        }
    }
    let mut vectors = with_vectors.then(|| {
        (0..n)
            .map(|i| (0..n).map(|j| if i == j { 1.0 } else { 0.0 }).collect::<Vec<f64>>())
            .collect::<Vec<_>>()
    });
    let threshold = JACOBI_REL_TOL * frobenius(&a).max(1.0);
    let mut sweeps = 0;
    let mut off = off_diagonal_norm(&a);
    while off > threshold {
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence { sweeps, off });
        }
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut a, vectors.as_deref_mut(), p, q);
            }
        }
        sweeps += 1;
        off = off_diagonal_norm(&a);
    }
    Ok(((0..n).map(|i| a[i][i]).collect(), off, sweeps, vectors))
}

/// Full spectrum of a dense symmetric matrix, ascending.
pub fn symmetric_eigenvalues(m: &[Vec<f64>]) -> Result<Vec<f64>> {
    Ok(symmetric_eigen(m)?.values)
}

/// Like [`symmetric_eigenvalues`] but also reports the final residual.
pub fn symmetric_eigen(m: &[Vec<f64>]) -> Result<Eigen> {
    let (mut values, off_norm, sweeps, _) = jacobi(m, false)?;
    values.sort_by(f64::total_cmp);
    Ok(Eigen { values, off_norm, sweeps })
}

/// Eigenvalues (diagonal order, unsorted) with eigenvectors as the columns
/// of the returned matrix, for residual checks.
#[cfg(test)]
fn symmetric_eigenpairs(m: &[Vec<f64>]) -> Result<(Vec<f64>, Vec<Vec<f64>>)> {
    let (values, _, _, vectors) = jacobi(m, true)?;
    Ok((values, vectors.unwrap_or_default()))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpectralSummary {
    /// Smallest adjacency eigenvalue.
    pub mu_min: f64,
    /// Largest adjacency eigenvalue.
    pub mu_max: f64,
    /// Largest Laplacian eigenvalue.
    pub lambda_max: f64,
    /// Residual bound on each of the three values.
    pub tol: f64,
}

/// Adjacency and Laplacian spectra of one graph.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Spectra {
    pub adjacency: Vec<f64>,
    pub laplacian: Vec<f64>,
    pub summary: SpectralSummary,
}

pub fn spectra(g: &Graph) -> Result<Spectra> {
    let a = symmetric_eigen(&g.adjacency_matrix())?;
    let l = symmetric_eigen(&g.laplacian_matrix())?;
    let n = g.n();
    let summary = SpectralSummary {
        mu_min: a.values[0],
        mu_max: a.values[n - 1],
        lambda_max: l.values[n - 1],
        tol: a.off_norm.max(l.off_norm),
    };
    Ok(Spectra { adjacency: a.values, laplacian: l.values, summary })
}

pub fn spectral_summary(g: &Graph) -> Result<SpectralSummary> {
    Ok(spectra(g)?.summary)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;
    use std::f64::consts::PI;

    fn close(a: &[f64], b: &[f64], tol: f64) -> bool {
        a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() <= tol)
    }

    #[test]
    fn small_closed_forms() {
        let k3 = Family::Complete(3).generate().unwrap().adjacency_matrix();
        assert!(close(&symmetric_eigenvalues(&k3).unwrap(), &[-1.0, -1.0, 2.0], 1e-12));
        let c4 = Family::Cycle(4).generate().unwrap().adjacency_matrix();
        assert!(close(&symmetric_eigenvalues(&c4).unwrap(), &[-2.0, 0.0, 0.0, 2.0], 1e-12));
        let d = vec![vec![5.0, 0.0, 0.0], vec![0.0, -3.0, 0.0], vec![0.0, 0.0, 0.0]];
        assert_eq!(symmetric_eigenvalues(&d).unwrap(), vec![-3.0, 0.0, 5.0]);
    }

    #[test]
    fn cycle_spectra() {
        for n in 3..=16 {
            let a = Family::Cycle(n).generate().unwrap().adjacency_matrix();
            let mut expect: Vec<f64> = (0..n).map(|j| 2.0 * (2.0 * PI * j as f64 / n as f64).cos()).collect();
            expect.sort_by(f64::total_cmp);
            assert!(close(&symmetric_eigenvalues(&a).unwrap(), &expect, 1e-8), "C_{n}");
        }
    }

    #[test]
    fn input_errors() {
        assert!(matches!(symmetric_eigenvalues(&[vec![1.0, 2.0], vec![3.0]]), Err(Error::NotSquare { .. })));
        assert_eq!(symmetric_eigenvalues(&[vec![1.0, 2.0], vec![2.5, 1.0]]), Err(Error::NotSymmetric(0, 1)));
        assert_eq!(
            symmetric_eigenvalues(&[vec![f64::NAN, 0.0], vec![0.0, 1.0]]),
            Err(Error::NonFinite(0, 0))
        );
    }

    #[test]
    fn summaries() {
        let k4 = spectral_summary(&Family::Complete(4).generate().unwrap()).unwrap();
        assert!((k4.mu_min + 1.0).abs() < 1e-12);
        assert!((k4.mu_max - 3.0).abs() < 1e-12);
        assert!((k4.lambda_max - 4.0).abs() < 1e-12);

        let e = spectral_summary(&Graph::empty(5).unwrap()).unwrap();
        assert_eq!((e.mu_min, e.mu_max, e.lambda_max), (0.0, 0.0, 0.0));
    }

    #[test]
    fn petersen_against_minimal_polynomial() {
        // (A - 3I)(A - I)(A + 2I) = 0 holds in exact integer arithmetic, so the
        // spectrum lies in {3, 1, -2}; the multiplicities (1, 5, 4) follow from
        // tr A = 0 and tr A^2 = 2m = 30.
        let g = Family::Petersen.generate().unwrap();
        let a: Vec<Vec<i64>> =
            g.adjacency_bits().iter().map(|r| r.iter().map(|&b| b as i64).collect()).collect();
        let shift = |m: &Vec<Vec<i64>>, c: i64| -> Vec<Vec<i64>> {
            let mut s = m.clone();
            for (i, row) in s.iter_mut().enumerate() {
                row[i] -= c;
            }
            s
        };
        let mul = |x: &Vec<Vec<i64>>, y: &Vec<Vec<i64>>| -> Vec<Vec<i64>> {
            (0..10).map(|i| (0..10).map(|j| (0..10).map(|l| x[i][l] * y[l][j]).sum()).collect()).collect()
        };
        let p = mul(&mul(&shift(&a, 3), &shift(&a, 1)), &shift(&a, -2));
        assert!(p.iter().flatten().all(|&x| x == 0));

        let mut expect = vec![-2.0; 4];
        expect.extend([1.0; 5]);
        expect.push(3.0);
        let got = symmetric_eigenvalues(&g.adjacency_matrix()).unwrap();
        assert!(close(&got, &expect, 1e-8));

        let s = spectral_summary(&g).unwrap();
        assert!((s.mu_min + 2.0).abs() < 1e-8);
        assert!((s.mu_max - 3.0).abs() < 1e-8);
        assert!((s.lambda_max - 5.0).abs() < 1e-8);
    }

    #[test]
    fn eigenpair_residuals() {
        let g = Family::Gnp { n: 9, p: 0.5, seed: 3 }.generate().unwrap();
        let a = g.adjacency_matrix();
        let (vals, vecs) = symmetric_eigenpairs(&a).unwrap();
        for (j, &lam) in vals.iter().enumerate() {
            let res: f64 = (0..9)
                .map(|i| {
                    let av: f64 = (0..9).map(|l| a[i][l] * vecs[l][j]).sum();
                    (av - lam * vecs[i][j]).powi(2)
                })
                .sum::<f64>()
                .sqrt();
            assert!(res <= 1e-8);
        }
    }
}
