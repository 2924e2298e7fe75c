//! Lattice parameter derivation and the index decompositions that drive the
//! Zak-domain bookkeeping.
//!
//! Everything here is exact integer arithmetic. All of `p*M` and `q*N` are
//! assumed to fit in an `i64`.

use crate::error::{Error, Result};

/// Derived parameters of an L-window Gabor system with modulation count `M`
/// and translation step `N`. `p/q` is `N/M` in lowest terms; `p*M = q*N` is
/// the common Zak period.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GaborParams {
    pub window_count: i64,
    pub modulation_count: i64,
    pub translation_step: i64,
    pub p: i64,
    pub q: i64,
    pub m_over_q: i64,
}

impl GaborParams {
    /// The common Zak period `p*M = q*N`.
    pub fn zak_period(&self) -> i64 {
        self.p * self.modulation_count
    }
}

pub fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Extended gcd: returns (g, x, y) with a*x + b*y = g.
fn egcd(a: i64, b: i64) -> (i64, i64, i64) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = egcd(b, a % b);
        (g, y, x - (a / b) * y)
    }
}

/// Inverse of `a` modulo `m` (requires gcd(a, m) = 1, m >= 1).
fn mod_inverse(a: i64, m: i64) -> i64 {
    if m == 1 {
        return 0;
    }
    let (_, x, _) = egcd(a.rem_euclid(m), m);
    x.rem_euclid(m)
}

/// Derive (p, q, M/q) from (L, M, N).
pub fn derive_params(window_count: i64, modulation_count: i64, translation_step: i64) -> GaborParams {
    assert!(window_count >= 1 && modulation_count >= 1 && translation_step >= 1);
    let g = gcd(modulation_count, translation_step);
    GaborParams {
        window_count,
        modulation_count,
        translation_step,
        p: translation_step / g,
        q: modulation_count / g,
        m_over_q: modulation_count / (modulation_count / g),
    }
}

/// Unique decomposition s = k0*q + (m0*q + r0)*p with k0 in N_p, r0 in N_q,
/// m0 in Z (for coprime p, q).
pub fn decompose_k_l(s: i64, p: i64, q: i64) -> Result<(i64, i64, i64)> {
    if gcd(p, q) != 1 {
        return Err(Error::NotCoprime { p, q });
    }
    let k0 = (s.rem_euclid(p) * mod_inverse(q, p)).rem_euclid(p);
    let l0 = (s - k0 * q) / p;
    let r0 = l0.rem_euclid(q);
    let m0 = (l0 - r0) / q;
    Ok((k0, m0, r0))
}

/// Unique decomposition m = j + k*M - r*N + ell*q*N with j in N_{M/q},
/// r in N_q, k in N_p.
pub fn decompose_time_freq(m: i64, params: &GaborParams) -> (i64, i64, i64, i64) {
    let (p, q, s) = (params.p, params.q, params.m_over_q);
    // M = s*q, N = s*p, so m - j is divisible by s and
    // (m - j)/s = k*q - r*p + ell*p*q.
    let j = m.rem_euclid(s);
    let t = (m - j) / s;
    let k = (t.rem_euclid(p) * mod_inverse(q, p)).rem_euclid(p);
    let r = ((-t).rem_euclid(q) * mod_inverse(p, q)).rem_euclid(q);
    let ell = (t - k * q + r * p) / (p * q);
    debug_assert_eq!(
        m,
        j + k * params.modulation_count - r * params.translation_step
            + ell * q * params.translation_step
    );
    (j, r, k, ell)
}

/// The set Delta = { j + k*M - r*N : j in N_{M/q}, k in N_p, r in N_q },
/// qN-congruent to N_{pM}.
pub fn delta_set(params: &GaborParams) -> Vec<i64> {
    let mut out = Vec::with_capacity((params.p * params.modulation_count) as usize);
    for j in 0..params.m_over_q {
        for k in 0..params.p {
            for r in 0..params.q {
                out.push(j + k * params.modulation_count - r * params.translation_step);
            }
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}
