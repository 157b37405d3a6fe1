//! Odd-K4 and odd-K3² subgraphs. A graph containing neither maps to its
//! shortest odd cycle, so a failed homomorphism to that cycle must be
//! explained by one of the two witnesses.

mod k32;
mod k4;
mod paths;

pub use k32::{find_odd_k32, find_odd_k32_within, OddK32Witness};
pub use k4::{find_odd_k4, find_odd_k4_within, OddK4Witness};

use serde::Serialize;

use crate::budget::Budget;
use crate::constructions::cycle;
use crate::error::{Error, Result};
use crate::graph::{odd_girth, Graph};
use crate::hom::HomTarget;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DichotomyBranch {
    /// The graph maps to its shortest odd cycle; nothing to explain.
    MapsToShortestOddCycle,
    OddK4,
    OddK32,
    /// No homomorphism and no witness: the implication failed.
    Violated,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DichotomyReport {
    pub odd_girth: usize,
    pub branch: DichotomyBranch,
    pub odd_k4: Option<OddK4Witness>,
    pub odd_k32: Option<OddK32Witness>,
}

impl DichotomyReport {
    pub fn holds(&self) -> bool {
        self.branch != DichotomyBranch::Violated
    }
}

pub fn gerards_dichotomy_check(g: &Graph) -> Result<DichotomyReport> {
    gerards_dichotomy_check_within(g, &mut Budget::unlimited())
}

/// Checks the implication "no homomorphism to the shortest odd cycle
/// implies an odd-K4 or an odd-K3² subgraph". Running out of budget is an
/// error, never a silent answer.
pub fn gerards_dichotomy_check_within(g: &Graph, budget: &mut Budget) -> Result<DichotomyReport> {
    let og = odd_girth(g).finite().ok_or(Error::Bipartite)?;
    let mut report = DichotomyReport {
        odd_girth: og,
        branch: DichotomyBranch::MapsToShortestOddCycle,
        odd_k4: None,
        odd_k32: None,
    };
    let target = HomTarget::declared(&cycle(og)?, true);
    if target.find_within(g, budget)?.is_some() {
        return Ok(report);
    }
    report.odd_k4 = find_odd_k4_within(g, budget)?;
    if report.odd_k4.is_some() {
        report.branch = DichotomyBranch::OddK4;
        return Ok(report);
    }
    report.odd_k32 = find_odd_k32_within(g, budget)?;
    report.branch = if report.odd_k32.is_some() {
        DichotomyBranch::OddK32
    } else {
        DichotomyBranch::Violated
    };
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{
        complete, fixture, generalized_mycielski, odd_k32, odd_k4, OddK32Spec, OddK4Spec,
    };

    #[test]
    fn odd_k4_examples() {
        let k = odd_k4(OddK4Spec::new(1, 2, 2)).unwrap();
        let w = find_odd_k4(&k).unwrap();
        assert!(w.verify(&k));
        assert_eq!(w.face_lengths, [5, 5, 5, 5]);
        assert!(find_odd_k4(&cycle(9).unwrap()).is_none());
        let grotzsch = generalized_mycielski(2).unwrap();
        let w = find_odd_k4(&grotzsch).unwrap();
        assert!(w.verify(&grotzsch));
        assert!(find_odd_k4(&complete(4).unwrap()).unwrap().verify(&complete(4).unwrap()));
    }

    #[test]
    fn even_subdivisions_are_not_odd() {
        // K4 with every edge subdivided once: all faces have length 6.
        let g = Graph::from_edges(
            10,
            &[
                (0, 4), (4, 1), (1, 5), (5, 2), (0, 6), (6, 2),
                (2, 7), (7, 3), (0, 8), (8, 3), (1, 9), (9, 3),
            ],
        )
        .unwrap();
        assert!(find_odd_k4(&g).is_none());
    }

    #[test]
    fn equal_faces_force_equal_opposite_threads() {
        for (a, b, c) in [(1, 2, 2), (2, 2, 3), (1, 3, 3), (3, 3, 3), (2, 3, 4)] {
            let g = odd_k4(OddK4Spec::new(a, b, c)).unwrap();
            let w = find_odd_k4(&g).unwrap();
            assert!(w.verify(&g));
            let l = w.face_lengths[0];
            assert!(w.face_lengths.iter().all(|&f| f == l));
            let [a, b, c, a2, b2, c2] = w.lengths;
            assert_eq!((a, b, c), (a2, b2, c2));
        }
    }

    #[test]
    fn tampered_witnesses_fail_verification() {
        let g = odd_k4(OddK4Spec::new(2, 2, 3)).unwrap();
        let w = find_odd_k4(&g).unwrap();
        let mut bad = w.clone();
        bad.face_lengths[0] += 2;
        assert!(!bad.verify(&g));
        let mut bad = w.clone();
        bad.threads[0].reverse();
        assert!(!bad.verify(&g));
    }

    #[test]
    fn odd_k32_examples() {
        let g = odd_k32(OddK32Spec::new([3, 3, 3], [1, 1, 1])).unwrap();
        let w = find_odd_k32(&g).unwrap();
        assert!(w.verify(&g));
        let g = odd_k32(OddK32Spec::new([3, 5, 3], [0, 2, 0])).unwrap();
        assert!(find_odd_k32(&g).unwrap().verify(&g));
        assert!(find_odd_k32(&cycle(8).unwrap()).is_none());
        assert!(find_odd_k32(&fixture("fig2a").unwrap()).is_none());
        // Three triangles through one vertex have no distinct attachments.
        let bowtie3 = Graph::from_edges(
            7,
            &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0), (0, 5), (5, 6), (6, 0)],
        )
        .unwrap();
        assert!(find_odd_k32(&bowtie3).is_none());
    }

    #[test]
    fn dichotomy_examples() {
        let c7 = cycle(7).unwrap();
        let r = gerards_dichotomy_check(&c7).unwrap();
        assert_eq!(r.branch, DichotomyBranch::MapsToShortestOddCycle);
        let k = odd_k4(OddK4Spec::new(2, 2, 3)).unwrap();
        let r = gerards_dichotomy_check(&k).unwrap();
        assert_eq!(r.branch, DichotomyBranch::OddK4);
        assert!(r.odd_k4.unwrap().verify(&k));
        for name in ["fig2a", "fig2b", "fig2c"] {
            assert!(gerards_dichotomy_check(&fixture(name).unwrap()).unwrap().holds());
        }
        assert_eq!(gerards_dichotomy_check(&cycle(6).unwrap()), Err(Error::Bipartite));
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        let g = generalized_mycielski(3).unwrap();
        let mut b = Budget::with_ticks(3);
        assert_eq!(find_odd_k4_within(&g, &mut b), Err(Error::BudgetExceeded));
    }

    #[test]
    fn witnesses_serialize() {
        let k = odd_k4(OddK4Spec::new(1, 2, 2)).unwrap();
        let json = serde_json::to_value(find_odd_k4(&k).unwrap()).unwrap();
        assert_eq!(json["branch"].as_array().unwrap().len(), 4);
        assert_eq!(json["threads"].as_array().unwrap().len(), 6);
    }
}
