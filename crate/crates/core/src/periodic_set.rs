//! NZ-periodic subsets of Z, their sections, and the index sets K_j with the
//! associated diagonal projections.

use serde::Serialize;

use crate::arithmetic::GaborParams;
use crate::error::{Error, Result};

/// An NZ-periodic subset of Z stored as (period, canonical residue list).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PeriodicSet {
    period: i64,
    residues: Vec<i64>,
}

impl PeriodicSet {
    /// Canonicalize: reduce mod period, sort, deduplicate. Rejects an empty
    /// residue list.
    pub fn new(period: i64, residues: &[i64]) -> Result<Self> {
        assert!(period >= 1);
        let mut reduced: Vec<i64> = residues.iter().map(|r| r.rem_euclid(period)).collect();
        reduced.sort_unstable();
        reduced.dedup();
        if reduced.is_empty() {
            return Err(Error::EmptyPeriodicSet);
        }
        Ok(Self { period, residues: reduced })
    }

    /// The full set Z.
    pub fn integers() -> Self {
        Self { period: 1, residues: vec![0] }
    }

    pub fn period(&self) -> i64 {
        self.period
    }

    pub fn residues(&self) -> &[i64] {
        &self.residues
    }

    pub fn contains(&self, j: i64) -> bool {
        self.residues.binary_search(&j.rem_euclid(self.period)).is_ok()
    }

    /// Same set represented with period `period * factor`.
    pub fn rescale_period(&self, factor: i64) -> Self {
        assert!(factor >= 1);
        let mut residues = Vec::with_capacity(self.residues.len() * factor as usize);
        for rep in 0..factor {
            for &r in &self.residues {
                residues.push(r + rep * self.period);
            }
        }
        residues.sort_unstable();
        Self { period: self.period * factor, residues }
    }

    /// card(S intersected with N_K).
    pub fn section_card(&self, k: i64) -> usize {
        assert!(k >= 1);
        (0..k).filter(|&j| self.contains(j)).count()
    }

    /// Members of S in N_K, ascending.
    pub fn section(&self, k: i64) -> Vec<i64> {
        (0..k).filter(|&j| self.contains(j)).collect()
    }
}

/// K_j = { k in N_p : j + k*M in S }.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KappaSet {
    pub j: i64,
    pub members: Vec<i64>,
}

impl KappaSet {
    pub fn card(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, k: i64) -> bool {
        self.members.binary_search(&k).is_ok()
    }
}

pub fn kappa_set(set: &PeriodicSet, params: &GaborParams, j: i64) -> KappaSet {
    let members = (0..params.p)
        .filter(|&k| set.contains(j + k * params.modulation_count))
        .collect();
    KappaSet { j, members }
}

/// The diagonal 0/1 projection K(j) on C^p.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KappaProjection {
    pub diagonal: Vec<u8>,
}

pub fn kappa_projection(ks: &KappaSet, p: i64) -> KappaProjection {
    let diagonal = (0..p).map(|k| u8::from(ks.contains(k))).collect();
    KappaProjection { diagonal }
}

/// True iff the residues of E mod M are pairwise distinct, i.e. E is
/// MZ-congruent to a subset of N_M.
pub fn is_congruent_to_subset(e: &[i64], modulus: i64) -> bool {
    assert!(modulus >= 1);
    let mut residues: Vec<i64> = e.iter().map(|x| x.rem_euclid(modulus)).collect();
    residues.sort_unstable();
    let before = residues.len();
    residues.dedup();
    residues.len() == before
}
