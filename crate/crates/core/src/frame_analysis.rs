//! Completeness and frame characterization in the Zak domain: rank tests
//! against card(K_j) and optimal frame bounds from the restricted Hermitian
//! eigenvalues of sum_l Z_{g_l}^* Z_{g_l}.

use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arithmetic::GaborParams;
use crate::error::{Error, Result};
use crate::periodic_set::{kappa_set, PeriodicSet};
use crate::zak::{FiniteSignal, ThetaGrid};
use crate::zak_matrix::{build_stacked, numerical_rank};

/// Tolerances and grid used by the analysis pipeline.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct AnalysisOptions {
    pub grid: ThetaGrid,
    pub rank_tol: f64,
    pub frame_tol: f64,
    pub parseval_tol: f64,
}

impl Default for AnalysisOptions {
    fn default() -> Self {
        Self {
            grid: ThetaGrid::default(),
            rank_tol: 1e-10,
            frame_tol: 1e-8,
            parseval_tol: 1e-9,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RankRow {
    pub j: i64,
    pub kappa_card: usize,
    pub min_rank: usize,
    pub max_rank: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct EigenRow {
    pub j: i64,
    pub min_eigenvalue: f64,
    pub max_eigenvalue: f64,
}

/// Full classification of a multi-window Gabor system.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FrameVerdict {
    pub complete: bool,
    pub is_frame: bool,
    pub lower_bound: f64,
    pub upper_bound: f64,
    pub is_parseval: bool,
    pub is_riesz: bool,
    pub is_onb: bool,
    pub rank_table: Vec<RankRow>,
    pub eigen_range: Vec<EigenRow>,
}

/// True iff rank(Z_g(j, theta)) = card(K_j) for every j in N_{M/q} and every
/// grid node.
pub fn completeness_test(
    windows: &[FiniteSignal],
    set: &PeriodicSet,
    params: &GaborParams,
    grid: ThetaGrid,
    rel_tol: f64,
) -> Result<(bool, Vec<RankRow>)> {
    for g in windows {
        g.check_supported_in(set)?;
    }
    let table: Vec<RankRow> = (0..params.m_over_q)
        .map(|j| {
            let card = kappa_set(set, params, j).card();
            let thetas: Vec<f64> = grid.nodes().collect();
            let (min_rank, max_rank) = thetas
                .par_iter()
                .map(|&theta| {
                    let r = numerical_rank(&build_stacked(windows, params, j, theta), rel_tol);
                    (r, r)
                })
                .reduce(|| (usize::MAX, 0), |a, b| (a.0.min(b.0), a.1.max(b.1)));
            RankRow { j, kappa_card: card, min_rank, max_rank }
        })
        .collect();
    let complete = table
        .iter()
        .all(|row| row.min_rank == row.kappa_card && row.max_rank == row.kappa_card);
    Ok((complete, table))
}

fn restricted_matrix(h: &DMatrix<Complex64>, members: &[i64]) -> DMatrix<Complex64> {
    DMatrix::from_fn(members.len(), members.len(), |a, b| {
        h[(members[a] as usize, members[b] as usize)]
    })
}

/// Optimal frame bounds: A = M * min, B = M * max of the eigenvalues of
/// sum_l Z_{g_l}^*(j, theta) Z_{g_l}(j, theta) restricted to the coordinates
/// in K_j, over all j in N_{M/q} and all grid nodes.
pub fn frame_bounds(
    windows: &[FiniteSignal],
    set: &PeriodicSet,
    params: &GaborParams,
    grid: ThetaGrid,
) -> Result<(f64, f64, Vec<EigenRow>)> {
    if windows.is_empty() {
        return Err(Error::EmptySystem);
    }
    for g in windows {
        g.check_supported_in(set)?;
    }
    let m = params.modulation_count as f64;
    let mut eigen_range = Vec::new();
    for j in 0..params.m_over_q {
        let members = kappa_set(set, params, j).members;
        if members.is_empty() {
            continue;
        }
        let thetas: Vec<f64> = grid.nodes().collect();
        let (lo, hi) = thetas
            .par_iter()
            .map(|&theta| {
                let z = build_stacked(windows, params, j, theta);
                let h = z.entries.adjoint() * &z.entries;
                let restricted = restricted_matrix(&h, &members);
                let eigen = SymmetricEigen::new(restricted);
                eigen
                    .eigenvalues
                    .iter()
                    .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &e| {
                        (lo.min(e), hi.max(e))
                    })
            })
            .reduce(
                || (f64::INFINITY, f64::NEG_INFINITY),
                |a, b| (a.0.min(b.0), a.1.max(b.1)),
            );
        eigen_range.push(EigenRow { j, min_eigenvalue: lo, max_eigenvalue: hi });
    }
    if eigen_range.is_empty() {
        return Err(Error::EmptySystem);
    }
    let a = m * eigen_range.iter().map(|r| r.min_eigenvalue).fold(f64::INFINITY, f64::min);
    let b = m * eigen_range.iter().map(|r| r.max_eigenvalue).fold(f64::NEG_INFINITY, f64::max);
    // eigenvalues of PSD matrices; clamp the rounding noise
    Ok((a.max(0.0), b.max(0.0), eigen_range))
}

/// True iff card(S_N) <= L*M, a necessary condition for any frame.
pub fn necessary_density_check(set: &PeriodicSet, params: &GaborParams) -> bool {
    set.section_card(params.translation_step) as i64
        <= params.window_count * params.modulation_count
}

/// Combine completeness, bounds, and the Riesz/Parseval/ONB criteria into a
/// verdict.
pub fn classify(
    windows: &[FiniteSignal],
    set: &PeriodicSet,
    params: &GaborParams,
    opts: &AnalysisOptions,
) -> Result<FrameVerdict> {
    let (complete, rank_table) = completeness_test(windows, set, params, opts.grid, opts.rank_tol)?;
    let (a, b, eigen_range) = frame_bounds(windows, set, params, opts.grid)?;
    let is_frame = a > opts.frame_tol;
    let card_sn = set.section_card(params.translation_step) as i64;
    let is_riesz = is_frame && card_sn == params.window_count * params.modulation_count;
    let is_parseval =
        is_frame && (a - 1.0).abs().max((b - 1.0).abs()) < opts.parseval_tol;
    // Lemma on Parseval frames: Riesz <=> ONB <=> unit-norm atoms; the atom
    // norms equal the window norms, so cross-check those.
    let unit_norms = windows
        .iter()
        .all(|g| (g.norm_sqr() - 1.0).abs() < 1e-8);
    let is_onb = is_parseval && is_riesz && unit_norms;
    Ok(FrameVerdict {
        complete,
        is_frame,
        lower_bound: a,
        upper_bound: b,
        is_parseval,
        is_riesz,
        is_onb,
        rank_table,
        eigen_range,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arithmetic::derive_params;

    fn paper_system() -> (Vec<FiniteSignal>, PeriodicSet, GaborParams) {
        let windows = vec![
            FiniteSignal::indicator(&[-1, 0, 1]),
            FiniteSignal::indicator(&[-4, 4, 12]),
        ];
        let s = PeriodicSet::new(5, &[0, 1, 2, 4]).unwrap();
        (windows, s, derive_params(2, 3, 5))
    }

    #[test]
    fn paper_example_is_complete() {
        let (windows, s, params) = paper_system();
        let (complete, table) =
            completeness_test(&windows, &s, &params, ThetaGrid::new(32), 1e-10).unwrap();
        assert!(complete);
        assert_eq!(table.len(), 1);
        assert_eq!(table[0].kappa_card, 4);
        assert_eq!(table[0].min_rank, 4);
    }

    #[test]
    fn zero_window_not_complete() {
        let (_, s, params) = paper_system();
        let (complete, _) =
            completeness_test(&[FiniteSignal::zero()], &s, &params, ThetaGrid::new(8), 1e-10)
                .unwrap();
        assert!(!complete);
    }

    #[test]
    fn single_window_cannot_be_complete_here() {
        let (windows, s, params) = paper_system();
        // rank of a 3x5 matrix is at most 3 < card(K_0) = 4
        let (complete, table) =
            completeness_test(&windows[..1], &s, &params, ThetaGrid::new(16), 1e-10).unwrap();
        assert!(!complete);
        assert!(table[0].max_rank <= 3);
    }

    #[test]
    fn paper_example_bounds() {
        let (windows, s, params) = paper_system();
        let (a, b, _) = frame_bounds(&windows, &s, &params, ThetaGrid::new(64)).unwrap();
        assert!((a - 3.0).abs() < 1e-9, "A = {a}");
        assert!((b - 6.0).abs() < 1e-9, "B = {b}");
    }

    #[test]
    fn zero_windows_give_zero_bounds() {
        let (_, s, params) = paper_system();
        let (a, b, _) =
            frame_bounds(&[FiniteSignal::zero()], &s, &params, ThetaGrid::new(8)).unwrap();
        assert_eq!((a, b), (0.0, 0.0));
    }

    #[test]
    fn no_windows_is_an_error() {
        let (_, s, params) = paper_system();
        assert!(matches!(
            frame_bounds(&[], &s, &params, ThetaGrid::new(8)),
            Err(Error::EmptySystem)
        ));
    }

    #[test]
    fn scaling_covariance() {
        let (windows, s, params) = paper_system();
        let grid = ThetaGrid::new(32);
        let (a, b, _) = frame_bounds(&windows, &s, &params, grid).unwrap();
        let scaled: Vec<FiniteSignal> =
            windows.iter().map(|g| g.scaled(Complex64::new(2.0, 0.0))).collect();
        let (a4, b4, _) = frame_bounds(&scaled, &s, &params, grid).unwrap();
        assert!((a4 - 4.0 * a).abs() < 1e-12);
        assert!((b4 - 4.0 * b).abs() < 1e-12);
    }

    #[test]
    fn adding_a_window_never_decreases_lower_bound() {
        let (windows, s, params) = paper_system();
        let grid = ThetaGrid::new(32);
        let (a1, _, _) = frame_bounds(&windows[..1], &s, &params, grid).unwrap();
        let (a2, _, _) = frame_bounds(&windows, &s, &params, grid).unwrap();
        assert!(a2 >= a1 - 1e-12);
    }

    #[test]
    fn classify_paper_example() {
        let (windows, s, params) = paper_system();
        let verdict = classify(&windows, &s, &params, &AnalysisOptions::default()).unwrap();
        assert!(verdict.complete);
        assert!(verdict.is_frame);
        assert!(!verdict.is_riesz); // card(S_N) = 4 != L*M = 6
        assert!(!verdict.is_parseval);
        assert!(!verdict.is_onb);
    }

    #[test]
    fn impulse_basis_is_onb() {
        let s = PeriodicSet::integers();
        let params = derive_params(1, 1, 1);
        let verdict = classify(
            &[FiniteSignal::impulse(0)],
            &s,
            &params,
            &AnalysisOptions::default(),
        )
        .unwrap();
        assert!(verdict.is_frame && verdict.is_parseval && verdict.is_riesz && verdict.is_onb);
        assert!((verdict.lower_bound - 1.0).abs() < 1e-12);
        assert!((verdict.upper_bound - 1.0).abs() < 1e-12);
    }

    #[test]
    fn tight_but_unnormalized_is_not_parseval() {
        let s = PeriodicSet::integers();
        let params = derive_params(1, 1, 1);
        let g = FiniteSignal::impulse(0).scaled(Complex64::new(2.0, 0.0));
        let verdict = classify(&[g], &s, &params, &AnalysisOptions::default()).unwrap();
        assert!(verdict.is_frame);
        assert!((verdict.lower_bound - 4.0).abs() < 1e-12);
        assert!((verdict.upper_bound - 4.0).abs() < 1e-12);
        assert!(!verdict.is_parseval);
    }

    #[test]
    fn necessary_density_examples() {
        let (_, s, params) = paper_system();
        assert!(necessary_density_check(&s, &params)); // 4 <= 6
        let z = PeriodicSet::integers();
        assert!(!necessary_density_check(&z, &derive_params(1, 1, 2))); // 2 > 1
        assert!(necessary_density_check(&z, &derive_params(5, 1, 2)));
    }

    #[test]
    fn bounds_invariant_under_m_over_q_shift() {
        let params = derive_params(2, 6, 10);
        let s = PeriodicSet::new(10, &[0, 1, 3, 4, 7]).unwrap();
        let windows = vec![
            FiniteSignal::indicator(&[0, 1, 3]),
            FiniteSignal::indicator(&[4, 7, 10]),
        ];
        let grid = ThetaGrid::new(32);
        // restricted eigenvalue spectra agree between j and j + M/q
        for j in 0..params.m_over_q {
            for theta in grid.nodes() {
                let spectrum = |jj: i64| {
                    let members = kappa_set(&s, &params, jj).members;
                    let z = crate::zak_matrix::build_stacked(&windows, &params, jj, theta);
                    let h = z.entries.adjoint() * &z.entries;
                    let mut eig: Vec<f64> = SymmetricEigen::new(restricted_matrix(&h, &members))
                        .eigenvalues
                        .iter()
                        .copied()
                        .collect();
                    eig.sort_by(f64::total_cmp);
                    eig
                };
                let base = spectrum(j);
                let shifted = spectrum(j + params.m_over_q);
                assert_eq!(base.len(), shifted.len());
                for (x, y) in base.iter().zip(&shifted) {
                    assert!((x - y).abs() < 1e-10, "{x} vs {y}");
                }
            }
        }
    }
}
