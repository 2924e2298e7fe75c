//! Constructive Parseval windows: partition each K_j into q-sized chunks,
//! assign distinct translation offsets within a chunk, and collect the
//! resulting disjoint sets E_l. The characteristic functions chi_{E_l}
//! generate a tight frame with bound M; scaled by 1/sqrt(M) they are Parseval.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::admissibility::admits_frame;
use crate::arithmetic::GaborParams;
use crate::error::{Error, Result};
use crate::periodic_set::{is_congruent_to_subset, kappa_set, PeriodicSet};
use crate::zak::FiniteSignal;

/// Where each constructed element came from: window l, base j, position i in
/// the chunk, and the chosen (k, r) lattice offsets.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct ProvenanceRecord {
    pub l: usize,
    pub j: i64,
    pub i: usize,
    pub k: i64,
    pub r: i64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct WindowConstruction {
    pub e_sets: Vec<Vec<i64>>,
    pub union_card: usize,
    pub provenance: Vec<ProvenanceRecord>,
}

/// The chunk-and-offset recipe. Chunks take the ascending elements of K_j in
/// groups of q, with the remainder as the final nonempty group; within a
/// chunk, element i gets offset r = i.
pub fn construct_windows(set: &PeriodicSet, params: &GaborParams) -> Result<WindowConstruction> {
    let limit = (params.q * params.window_count) as usize;
    for j in 0..params.m_over_q {
        let card = kappa_set(set, params, j).card();
        if card > limit {
            return Err(Error::Inadmissible { j, card, limit });
        }
    }
    debug_assert!(admits_frame(set, params));

    let l_count = params.window_count as usize;
    let mut e_sets: Vec<Vec<i64>> = vec![Vec::new(); l_count];
    let mut provenance = Vec::new();
    for j in 0..params.m_over_q {
        let members = kappa_set(set, params, j).members;
        for (l, chunk) in members.chunks(params.q as usize).enumerate() {
            for (i, &k) in chunk.iter().enumerate() {
                let r = i as i64;
                let element = j + k * params.modulation_count - r * params.translation_step;
                e_sets[l].push(element);
                provenance.push(ProvenanceRecord { l, j, i, k, r });
            }
        }
    }
    for e in &mut e_sets {
        e.sort_unstable();
    }
    let union_card = e_sets.iter().map(Vec::len).sum();
    Ok(WindowConstruction { e_sets, union_card, provenance })
}

/// g_l = (1/sqrt(M)) chi_{E_l}.
pub fn make_parseval_windows(wc: &WindowConstruction, modulation_count: i64) -> Vec<FiniteSignal> {
    let scale = Complex64::new(1.0 / (modulation_count as f64).sqrt(), 0.0);
    wc.e_sets
        .iter()
        .map(|e| FiniteSignal::indicator(e).scaled(scale))
        .collect()
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct ConstructionChecklist {
    pub disjoint: bool,
    pub m_congruent: bool,
    pub n_congruent_to_section: bool,
    pub cardinality_matches: bool,
    pub inside_set: bool,
}

impl ConstructionChecklist {
    pub fn all_ok(&self) -> bool {
        self.disjoint
            && self.m_congruent
            && self.n_congruent_to_section
            && self.cardinality_matches
            && self.inside_set
    }
}

/// Exact integer verification of the construction invariants.
pub fn verify_construction(
    wc: &WindowConstruction,
    set: &PeriodicSet,
    params: &GaborParams,
) -> ConstructionChecklist {
    let mut union: Vec<i64> = wc.e_sets.iter().flatten().copied().collect();
    let total = union.len();
    union.sort_unstable();
    union.dedup();
    let disjoint = union.len() == total;

    let m_congruent = wc
        .e_sets
        .iter()
        .all(|e| is_congruent_to_subset(e, params.modulation_count));

    // union NZ-congruent to S_N: residues mod N pairwise distinct and exactly
    // the residues of S_N
    let n = params.translation_step;
    let mut residues: Vec<i64> = union.iter().map(|x| x.rem_euclid(n)).collect();
    residues.sort_unstable();
    let distinct = {
        let mut d = residues.clone();
        d.dedup();
        d.len() == residues.len()
    };
    let n_congruent_to_section = distinct && residues == set.section(n);

    let cardinality_matches = total == set.section_card(n);
    let inside_set = union.iter().all(|&x| set.contains(x));

    ConstructionChecklist {
        disjoint,
        m_congruent,
        n_congruent_to_section,
        cardinality_matches,
        inside_set,
    }
}
