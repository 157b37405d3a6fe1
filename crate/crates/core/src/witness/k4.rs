use serde::Serialize;

use super::paths::{reachable, PathFinder};
use crate::budget::Budget;
use crate::error::Result;
use crate::graph::{bit, Graph};

/// Thread order: `tu uv tv vw tw uw`, i.e. lengths `a b c a' b' c'`.
pub(crate) const PAIRS: [(usize, usize); 6] = [(0, 1), (1, 2), (0, 2), (2, 3), (0, 3), (1, 3)];

/// Faces as indices into the thread list: `tuv tuw tvw uvw`.
const FACES: [[usize; 3]; 4] = [[0, 1, 2], [0, 5, 4], [2, 3, 4], [1, 3, 5]];

/// An odd subdivision of K4 found in a graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OddK4Witness {
    /// Branch vertices `t u v w`.
    pub branch: [usize; 4],
    /// Thread vertex lists in the order `tu uv tv vw tw uw`, each from the
    /// first named endpoint to the second.
    pub threads: Vec<Vec<usize>>,
    /// `a b c a' b' c'`.
    pub lengths: [usize; 6],
    /// Lengths of the faces `tuv tuw tvw uvw`.
    pub face_lengths: [usize; 4],
}

impl OddK4Witness {
    fn from_threads(branch: [usize; 4], threads: Vec<Vec<usize>>) -> OddK4Witness {
        let mut lengths = [0; 6];
        for (l, t) in lengths.iter_mut().zip(&threads) {
            *l = t.len() - 1;
        }
        let face_lengths = FACES.map(|f| f.iter().map(|&i| lengths[i]).sum());
        OddK4Witness {
            branch,
            threads,
            lengths,
            face_lengths,
        }
    }

    /// Re-checks the witness against `g` edge by edge.
    pub fn verify(&self, g: &Graph) -> bool {
        if self.threads.len() != 6 || self.branch.iter().any(|&b| b >= g.order()) {
            return false;
        }
        let branch_mask = self.branch.iter().fold(0u64, |m, &b| m | bit(b));
        if branch_mask.count_ones() != 4 {
            return false;
        }
        let mut interior = 0u64;
        for (t, &(i, j)) in self.threads.iter().zip(&PAIRS) {
            if t.len() < 2 || t[0] != self.branch[i] || t[t.len() - 1] != self.branch[j] {
                return false;
            }
            if t.windows(2).any(|w| w[0] >= g.order() || w[1] >= g.order() || !g.has_edge(w[0], w[1])) {
                return false;
            }
            for &x in &t[1..t.len() - 1] {
                if (interior | branch_mask) & bit(x) != 0 {
                    return false;
                }
                interior |= bit(x);
            }
        }
        let recomputed = OddK4Witness::from_threads(self.branch, self.threads.clone());
        recomputed == *self && self.face_lengths.iter().all(|l| l % 2 == 1)
    }
}

pub fn find_odd_k4(g: &Graph) -> Option<OddK4Witness> {
    find_odd_k4_within(g, &mut Budget::unlimited()).expect("unlimited budget")
}

/// Tries every 4-set of vertices of degree at least 3 as branch vertices
/// and backtracks over internally disjoint threads, fixing the parity of
/// the thread that closes each face.
pub fn find_odd_k4_within(g: &Graph, budget: &mut Budget) -> Result<Option<OddK4Witness>> {
    let hubs: Vec<usize> = (0..g.order()).filter(|&v| g.degree(v) >= 3).collect();
    let h = hubs.len();
    for i in 0..h {
        for j in i + 1..h {
            for k in j + 1..h {
                for l in k + 1..h {
                    let branch = [hubs[i], hubs[j], hubs[k], hubs[l]];
                    let mask = branch.iter().fold(0u64, |m, &b| m | bit(b));
                    if g.component_of(branch[0]) & mask != mask {
                        continue;
                    }
                    let mut search = K4Search {
                        g,
                        branch,
                        threads: Vec::with_capacity(6),
                    };
                    if search.extend(g.vertex_mask() & !mask, budget)? {
                        return Ok(Some(OddK4Witness::from_threads(branch, search.threads)));
                    }
                }
            }
        }
    }
    Ok(None)
}

struct K4Search<'a> {
    g: &'a Graph,
    branch: [usize; 4],
    threads: Vec<Vec<usize>>,
}

impl K4Search<'_> {
    /// Parity the next thread must have, if it closes a face.
    fn required_parity(&self) -> Option<usize> {
        let next = self.threads.len();
        FACES.iter().find_map(|face| {
            if !face.contains(&next) || face.iter().any(|&i| i > next) {
                return None;
            }
            let others: usize = face
                .iter()
                .filter(|&&i| i != next)
                .map(|&i| self.threads[i].len() - 1)
                .sum();
            Some((1 + others) % 2)
        })
    }

    fn extend(&mut self, free: u64, budget: &mut Budget) -> Result<bool> {
        let next = self.threads.len();
        if next == 6 {
            return Ok(true);
        }
        // Every remaining pair must still be joinable.
        for &(i, j) in &PAIRS[next..] {
            if !reachable(self.g, self.branch[i], self.branch[j], free) {
                return Ok(false);
            }
        }
        let (i, j) = PAIRS[next];
        let parity = self.required_parity();
        let (a, b) = (self.branch[i], self.branch[j]);
        let g = self.g;
        PathFinder::new(g, bit(a), bit(b), free).for_each(parity, budget, &mut |path, budget| {
            let interior = path[1..path.len() - 1].iter().fold(0u64, |m, &x| m | bit(x));
            self.threads.push(path.to_vec());
            if self.extend(free & !interior, budget)? {
                return Ok(true);
            }
            self.threads.pop();
            Ok(false)
        })
    }
}
