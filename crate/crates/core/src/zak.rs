//! Finitely supported signals and the discrete Zak transform.
//!
//! For a finitely supported `f`, every Zak value is a finite trigonometric
//! polynomial in theta, so uniform theta-grids integrate the relevant
//! quantities exactly once the grid is fine enough.

use std::collections::BTreeMap;
use std::f64::consts::TAU;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::arithmetic::GaborParams;
use crate::error::{Error, Result};
use crate::periodic_set::PeriodicSet;

/// A finitely supported complex sequence on Z. Zero values are pruned.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct FiniteSignal {
    entries: BTreeMap<i64, Complex64>,
}

impl FiniteSignal {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (i64, Complex64)>) -> Self {
        let mut entries = BTreeMap::new();
        for (idx, v) in pairs {
            if v != Complex64::ZERO {
                let slot = entries.entry(idx).or_insert(Complex64::ZERO);
                *slot += v;
                if *slot == Complex64::ZERO {
                    entries.remove(&idx);
                }
            }
        }
        Self { entries }
    }

    /// Characteristic function of a finite set.
    pub fn indicator(support: &[i64]) -> Self {
        Self::from_pairs(support.iter().map(|&i| (i, Complex64::ONE)))
    }

    pub fn impulse(at: i64) -> Self {
        Self::indicator(&[at])
    }

    pub fn value(&self, idx: i64) -> Complex64 {
        self.entries.get(&idx).copied().unwrap_or(Complex64::ZERO)
    }

    pub fn support(&self) -> impl Iterator<Item = i64> + '_ {
        self.entries.keys().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, Complex64)> + '_ {
        self.entries.iter().map(|(&i, &v)| (i, v))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// max - min + 1 over the support, 0 for the zero signal.
    pub fn support_width(&self) -> i64 {
        match (self.entries.keys().next(), self.entries.keys().next_back()) {
            (Some(lo), Some(hi)) => hi - lo + 1,
            _ => 0,
        }
    }

    pub fn scaled(&self, c: Complex64) -> Self {
        Self::from_pairs(self.iter().map(|(i, v)| (i, c * v)))
    }

    pub fn norm_sqr(&self) -> f64 {
        self.entries.values().map(|v| v.norm_sqr()).sum()
    }

    pub fn is_supported_in(&self, set: &PeriodicSet) -> bool {
        self.support().all(|i| set.contains(i))
    }

    /// First support index outside S, if any.
    pub fn check_supported_in(&self, set: &PeriodicSet) -> Result<()> {
        match self.support().find(|&i| !set.contains(i)) {
            Some(index) => Err(Error::WindowOffSupport { index }),
            None => Ok(()),
        }
    }
}

/// Uniform sampling of [0, 1) with T nodes theta_t = t/T.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThetaGrid {
    pub samples: usize,
}

impl ThetaGrid {
    pub fn new(samples: usize) -> Self {
        assert!(samples >= 1);
        Self { samples }
    }

    pub fn nodes(&self) -> impl Iterator<Item = f64> + '_ {
        let t = self.samples;
        (0..t).map(move |i| i as f64 / t as f64)
    }
}

impl Default for ThetaGrid {
    fn default() -> Self {
        Self { samples: 256 }
    }
}

/// z_K f(j, theta) = sum_k f(j + kK) e^{2 pi i k theta}.
pub fn zak_eval(f: &FiniteSignal, period: i64, j: i64, theta: f64) -> Complex64 {
    assert!(period >= 1);
    let mut acc = Complex64::ZERO;
    for (idx, v) in f.iter() {
        let d = idx - j;
        if d.rem_euclid(period) == 0 {
            let k = d.div_euclid(period);
            acc += v * Complex64::cis(TAU * k as f64 * theta);
        }
    }
    acc
}

/// Max deviation of the quasi-periodicity identity
/// z_K f(j + kK, theta + l) = e^{-2 pi i k theta} z_K f(j, theta)
/// over the given samples.
pub fn check_quasi_periodicity(
    f: &FiniteSignal,
    period: i64,
    samples: &[(i64, i64, i64, f64)],
) -> f64 {
    samples
        .iter()
        .map(|&(j, k, l, theta)| {
            let lhs = zak_eval(f, period, j + k * period, theta + l as f64);
            let rhs = Complex64::cis(-TAU * k as f64 * theta) * zak_eval(f, period, j, theta);
            (lhs - rhs).norm()
        })
        .fold(0.0, f64::max)
}

/// | ||f||^2 - sum_{j in S_{pM}} (1/T) sum_t |z_{pM} f(j, theta_t)|^2 |.
///
/// The rectangle rule is exact for trigonometric polynomials of degree < T;
/// |z f|^2 has degree bounded by twice the number of pM-periods the support
/// spans, hence the Nyquist precondition.
pub fn parseval_defect(
    f: &FiniteSignal,
    set: &PeriodicSet,
    params: &GaborParams,
    grid: ThetaGrid,
) -> Result<f64> {
    f.check_supported_in(set)?;
    let period = params.zak_period();
    let required = ((2 * f.support_width() + period - 1) / period) as usize + 2;
    if grid.samples < required {
        return Err(Error::GridBelowNyquist { required, got: grid.samples });
    }
    let mut energy = 0.0;
    for j in 0..period {
        if !set.contains(j) {
            continue;
        }
        for theta in grid.nodes() {
            energy += zak_eval(f, period, j, theta).norm_sqr();
        }
    }
    energy /= grid.samples as f64;
    Ok((f.norm_sqr() - energy).abs())
}
