//! Existence of complete systems, frames, and (orthonormal) bases from
//! (S, L, M, N) alone, via the cardinalities of the K_j.

use serde::{Deserialize, Serialize};

use crate::arithmetic::GaborParams;
use crate::periodic_set::{kappa_set, PeriodicSet};

/// True iff card(K_j) <= qL for all j in N_{M/q}: some L-window system is
/// complete (equivalently, some L-window frame / Parseval frame exists).
pub fn admits_complete(set: &PeriodicSet, params: &GaborParams) -> bool {
    let limit = (params.q * params.window_count) as usize;
    (0..params.m_over_q).all(|j| kappa_set(set, params, j).card() <= limit)
}

/// Identical condition to `admits_complete`: completeness, frames, and
/// Parseval frames are admitted under exactly the same cardinality bound.
pub fn admits_frame(set: &PeriodicSet, params: &GaborParams) -> bool {
    admits_complete(set, params)
}

/// True iff card(K_j) = qL for all j in N_{M/q}: a Riesz basis (equivalently,
/// an orthonormal basis) exists.
pub fn admits_riesz_onb(set: &PeriodicSet, params: &GaborParams) -> bool {
    let target = (params.q * params.window_count) as usize;
    (0..params.m_over_q).all(|j| kappa_set(set, params, j).card() == target)
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct CardinalityRelations {
    pub kappa_card_sum: usize,
    pub bound_holds: bool,
    pub equality_holds: bool,
}

/// sum_j card(K_j) = card(S_N), with the bound card(S_N) <= LM and its
/// equality case.
pub fn cardinality_relations(set: &PeriodicSet, params: &GaborParams) -> CardinalityRelations {
    let sum: usize = (0..params.m_over_q)
        .map(|j| kappa_set(set, params, j).card())
        .sum();
    debug_assert_eq!(sum, set.section_card(params.translation_step));
    let lm = (params.window_count * params.modulation_count) as usize;
    CardinalityRelations {
        kappa_card_sum: sum,
        bound_holds: sum <= lm,
        equality_holds: sum == lm,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arithmetic::derive_params;

    fn paper_set() -> PeriodicSet {
        PeriodicSet::new(5, &[0, 1, 2, 4]).unwrap()
    }

    #[test]
    fn admits_complete_examples() {
        assert!(!admits_complete(&paper_set(), &derive_params(1, 3, 5))); // 4 > 3
        assert!(admits_complete(&paper_set(), &derive_params(2, 3, 5))); // 4 <= 6

        // S = Z: condition is p <= Lq, i.e. N <= LM
        let z = PeriodicSet::integers();
        assert!(admits_complete(&z, &derive_params(2, 3, 5))); // 5 <= 6
        assert!(!admits_complete(&z, &derive_params(1, 3, 5))); // 5 > 3
        // boundary case N = LM
        assert!(admits_complete(&z, &derive_params(1, 4, 4)));
    }

    #[test]
    fn admits_frame_matches_admits_complete() {
        let sets = [paper_set(), PeriodicSet::integers(), PeriodicSet::new(6, &[0, 2]).unwrap()];
        for set in &sets {
            for (l, m, n) in [(1, 3, 5), (2, 3, 5), (1, 4, 6), (3, 6, 4)] {
                let params = derive_params(l, m, n);
                assert_eq!(admits_complete(set, &params), admits_frame(set, &params));
            }
        }
    }

    #[test]
    fn admits_riesz_onb_examples() {
        // S = Z with N = LM: card(K_j) = p = Lq
        let z = PeriodicSet::integers();
        assert!(admits_riesz_onb(&z, &derive_params(2, 3, 6)));
        assert!(!admits_riesz_onb(&paper_set(), &derive_params(2, 3, 5))); // 4 != 6
        // one violated j
        let s = PeriodicSet::new(4, &[0, 1, 2]).unwrap();
        let params = derive_params(1, 2, 4); // p=2, q=1, M/q=2
        assert!(!admits_riesz_onb(&s, &params));
    }

    #[test]
    fn riesz_implies_frame() {
        for (period, residues, l, m, n) in [
            (1i64, vec![0i64], 2i64, 3i64, 6i64),
            (5, vec![0, 1, 2, 4], 2, 3, 5),
            (6, vec![0, 3], 1, 3, 6),
        ] {
            let set = PeriodicSet::new(period, &residues).unwrap();
            let params = derive_params(l, m, n);
            if admits_riesz_onb(&set, &params) {
                assert!(admits_frame(&set, &params));
            }
        }
    }

    #[test]
    fn cardinality_relations_examples() {
        let rel = cardinality_relations(&paper_set(), &derive_params(2, 3, 5));
        assert_eq!(rel.kappa_card_sum, 4);
        assert!(rel.bound_holds);
        assert!(!rel.equality_holds);

        let z = PeriodicSet::integers();
        let rel = cardinality_relations(&z, &derive_params(2, 3, 6));
        assert!(rel.equality_holds);
    }

    #[test]
    fn kappa_sum_equals_section_card_fuzz() {
        for period in 1..10i64 {
            for mask in 1..(1i64 << period.min(8)) {
                let residues: Vec<i64> =
                    (0..period).filter(|&r| mask >> r & 1 == 1).collect();
                if residues.is_empty() {
                    continue;
                }
                let set = PeriodicSet::new(period, &residues).unwrap();
                // pick params with N = period
                let n = period;
                for m in 1..8i64 {
                    let params = derive_params(2, m, n);
                    let rel = cardinality_relations(&set, &params);
                    assert_eq!(rel.kappa_card_sum, set.section_card(n));
                }
            }
        }
    }
}
