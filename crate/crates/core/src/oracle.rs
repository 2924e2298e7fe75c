//! Brute-force cross-check of the Zak-domain verdicts: materialize the Gabor
//! atoms as explicit vectors, assemble the truncated frame operator on a
//! finite window of S, and read bounds and completeness off its spectrum.
//!
//! Test vectors live on the interior window W_inner while atoms are drawn
//! from a window twice as wide, so every atom overlapping W_inner is present
//! and the estimates are the compression of the exact frame operator.

use std::collections::BTreeMap;
use std::f64::consts::TAU;

use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64;

use crate::arithmetic::GaborParams;
use crate::error::{Error, Result};
use crate::periodic_set::PeriodicSet;
use crate::zak::FiniteSignal;
use crate::zak_matrix::rank_of;

/// E_{m/M} T_{nN} g: x -> e^{2 pi i (m/M) x} g(x - nN).
pub fn materialize_atom(
    g: &FiniteSignal,
    m: i64,
    n: i64,
    modulation_count: i64,
    translation_step: i64,
) -> FiniteSignal {
    FiniteSignal::from_pairs(g.iter().map(|(idx, v)| {
        let x = idx + n * translation_step;
        (x, v * Complex64::cis(TAU * m as f64 * x as f64 / modulation_count as f64))
    }))
}

fn window_radius(windows: &[FiniteSignal]) -> i64 {
    windows
        .iter()
        .flat_map(|g| g.support())
        .map(i64::abs)
        .max()
        .unwrap_or(0)
}

/// Coordinates of S inside W_inner = [-(n_max/2) N, (n_max/2) N].
fn inner_coords(set: &PeriodicSet, params: &GaborParams, n_max: usize) -> Vec<i64> {
    let half = (n_max as i64 / 2) * params.translation_step;
    (-half..=half).filter(|&x| set.contains(x)).collect()
}

fn all_atoms(
    windows: &[FiniteSignal],
    params: &GaborParams,
    n_max: usize,
) -> Vec<FiniteSignal> {
    let mut atoms = Vec::new();
    for g in windows {
        for n in -(n_max as i64)..=(n_max as i64) {
            for m in 0..params.modulation_count {
                atoms.push(materialize_atom(
                    g,
                    m,
                    n,
                    params.modulation_count,
                    params.translation_step,
                ));
            }
        }
    }
    atoms
}

/// Min/max eigenvalues of the truncated frame operator compressed to test
/// vectors supported on S inside W_inner. Converges to the true (A, B) as
/// n_max grows.
pub fn truncated_frame_bounds(
    windows: &[FiniteSignal],
    set: &PeriodicSet,
    params: &GaborParams,
    n_max: usize,
) -> Result<(f64, f64)> {
    if n_max < 4 {
        return Err(Error::TruncationTooSmall(n_max));
    }
    for g in windows {
        g.check_supported_in(set)?;
    }
    let coords = inner_coords(set, params, n_max);
    let index: BTreeMap<i64, usize> =
        coords.iter().enumerate().map(|(i, &x)| (x, i)).collect();
    let dim = coords.len();
    if dim == 0 || windows.iter().all(FiniteSignal::is_zero) {
        return Ok((0.0, 0.0));
    }
    let radius = window_radius(windows);
    debug_assert!(
        (n_max as i64 - n_max as i64 / 2) * params.translation_step >= radius,
        "atom range does not cover the inner window"
    );

    // frame operator entry G[x, y] = sum_atoms a(x) conj(a(y)); accumulate
    // only over each atom's (small) support
    let mut gram = DMatrix::<Complex64>::zeros(dim, dim);
    for atom in all_atoms(windows, params, n_max) {
        let on_coords: Vec<(usize, Complex64)> = atom
            .iter()
            .filter_map(|(idx, v)| index.get(&idx).map(|&i| (i, v)))
            .collect();
        for &(i, vi) in &on_coords {
            for &(j, vj) in &on_coords {
                gram[(i, j)] += vi * vj.conj();
            }
        }
    }
    let eigen = SymmetricEigen::new(gram);
    let lo = eigen.eigenvalues.iter().cloned().fold(f64::INFINITY, f64::min);
    let hi = eigen.eigenvalues.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    Ok((lo.max(0.0), hi.max(0.0)))
}

/// True iff the atoms' restrictions span all of S inside W_inner: the
/// numerical rank of the atom matrix equals the number of coordinates.
pub fn truncated_completeness(
    windows: &[FiniteSignal],
    set: &PeriodicSet,
    params: &GaborParams,
    n_max: usize,
) -> Result<bool> {
    if n_max < 4 {
        return Err(Error::TruncationTooSmall(n_max));
    }
    for g in windows {
        g.check_supported_in(set)?;
    }
    let coords = inner_coords(set, params, n_max);
    let index: BTreeMap<i64, usize> =
        coords.iter().enumerate().map(|(i, &x)| (x, i)).collect();
    let atoms = all_atoms(windows, params, n_max);
    let mut matrix = DMatrix::<Complex64>::zeros(coords.len(), atoms.len());
    for (col, atom) in atoms.iter().enumerate() {
        for (idx, v) in atom.iter() {
            if let Some(&row) = index.get(&idx) {
                matrix[(row, col)] = v;
            }
        }
    }
    Ok(rank_of(&matrix, 1e-10) == coords.len())
}
