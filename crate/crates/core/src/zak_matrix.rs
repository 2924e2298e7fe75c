//! The matrix-valued Zak symbols Z_f(j, theta) in C^{q x p} (stacked to
//! C^{qL x p} for multi-window systems), their numerical rank, and the
//! structural identities they satisfy.

use std::f64::consts::TAU;

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::arithmetic::GaborParams;
use crate::error::Result;
use crate::periodic_set::{kappa_projection, kappa_set, PeriodicSet};
use crate::zak::{zak_eval, FiniteSignal, ThetaGrid};

/// Z_f(j, theta), with entry (r, k) = z_{pM} f(j + kM - rN, theta).
#[derive(Debug, Clone, PartialEq)]
pub struct ZakMatrix {
    pub entries: DMatrix<Complex64>,
    pub j: i64,
    pub theta: f64,
}

impl ZakMatrix {
    pub fn rows(&self) -> usize {
        self.entries.nrows()
    }

    pub fn cols(&self) -> usize {
        self.entries.ncols()
    }
}

/// The q x p matrix for a single window.
pub fn build_single(f: &FiniteSignal, params: &GaborParams, j: i64, theta: f64) -> ZakMatrix {
    let period = params.zak_period();
    let entries = DMatrix::from_fn(params.q as usize, params.p as usize, |r, k| {
        let offset = j + k as i64 * params.modulation_count - r as i64 * params.translation_step;
        zak_eval(f, period, offset, theta)
    });
    ZakMatrix { entries, j, theta }
}

/// The qL x p vertical stack of the single-window matrices.
pub fn build_stacked(
    windows: &[FiniteSignal],
    params: &GaborParams,
    j: i64,
    theta: f64,
) -> ZakMatrix {
    let (q, p) = (params.q as usize, params.p as usize);
    let mut entries = DMatrix::zeros(q * windows.len(), p);
    for (l, g) in windows.iter().enumerate() {
        let block = build_single(g, params, j, theta);
        entries.view_mut((l * q, 0), (q, p)).copy_from(&block.entries);
    }
    ZakMatrix { entries, j, theta }
}

/// Number of singular values above `rel_tol` times the largest one.
pub fn numerical_rank(z: &ZakMatrix, rel_tol: f64) -> usize {
    rank_of(&z.entries, rel_tol)
}

pub(crate) fn rank_of(m: &DMatrix<Complex64>, rel_tol: f64) -> usize {
    assert!(rel_tol > 0.0 && rel_tol < 1.0);
    let svd = m.clone().svd(false, false);
    let max = svd.singular_values.iter().cloned().fold(0.0f64, f64::max);
    if max == 0.0 {
        return 0;
    }
    svd.singular_values.iter().filter(|&&s| s > rel_tol * max).count()
}

/// Max Frobenius deviation of Z_f(j, theta) K(j) = Z_f(j, theta) over the grid.
pub fn check_support_identity(
    f: &FiniteSignal,
    set: &PeriodicSet,
    params: &GaborParams,
    j: i64,
    grid: ThetaGrid,
) -> Result<f64> {
    f.check_supported_in(set)?;
    let proj = kappa_projection(&kappa_set(set, params, j), params.p);
    let mut worst = 0.0f64;
    for theta in grid.nodes() {
        let z = build_single(f, params, j, theta);
        let mut masked = z.entries.clone();
        for (k, &d) in proj.diagonal.iter().enumerate() {
            if d == 0 {
                masked.column_mut(k).fill(Complex64::ZERO);
            }
        }
        worst = worst.max((masked - z.entries).norm());
    }
    Ok(worst)
}

/// True iff rank(Z_g(j, theta)) = rank(Z_g(j + k'M + r'N, theta)) at every
/// grid node.
pub fn rank_shift_invariance(
    windows: &[FiniteSignal],
    params: &GaborParams,
    j: i64,
    kprime: i64,
    rprime: i64,
    grid: ThetaGrid,
    rel_tol: f64,
) -> bool {
    let shifted = j + kprime * params.modulation_count + rprime * params.translation_step;
    grid.nodes().all(|theta| {
        numerical_rank(&build_stacked(windows, params, j, theta), rel_tol)
            == numerical_rank(&build_stacked(windows, params, shifted, theta), rel_tol)
    })
}

/// Inverse of `build_single` on a theta-grid: recover the signal whose Zak
/// matrices were sampled, assuming its support lies within `max_periods`
/// pM-periods of each lattice offset. Fourier inversion is exact for
/// trigonometric polynomials of degree < T/2.
pub fn reconstruct(
    matrices: &[Vec<ZakMatrix>],
    params: &GaborParams,
    grid: ThetaGrid,
    max_periods: i64,
) -> FiniteSignal {
    assert!(grid.samples as i64 >= 2 * max_periods + 2);
    let period = params.zak_period();
    let t = grid.samples;
    let mut pairs = Vec::new();
    for (j, per_theta) in matrices.iter().enumerate() {
        assert_eq!(per_theta.len(), t);
        for r in 0..params.q as usize {
            for k in 0..params.p as usize {
                let base = j as i64 + k as i64 * params.modulation_count
                    - r as i64 * params.translation_step;
                for ell in -max_periods..=max_periods {
                    let mut coeff = Complex64::ZERO;
                    for (ti, zm) in per_theta.iter().enumerate() {
                        let theta = ti as f64 / t as f64;
                        coeff += zm.entries[(r, k)] * Complex64::cis(-TAU * ell as f64 * theta);
                    }
                    coeff /= t as f64;
                    if coeff.norm() > 1e-13 {
                        pairs.push((base + ell * period, coeff));
                    }
                }
            }
        }
    }
    FiniteSignal::from_pairs(pairs)
}
