use serde::Serialize;

use super::paths::PathFinder;
use crate::budget::Budget;
use crate::error::Result;
use crate::graph::{bit, odd_girth, Bits, Graph};

/// Three odd cycles joined pairwise by disjoint paths. `paths[i]` joins
/// `cycles[i]` to `cycles[(i + 1) % 3]`; a path with a single vertex means
/// the two cycles share that vertex. Each cycle meets its two paths at two
/// distinct vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OddK32Witness {
    pub cycles: Vec<Vec<usize>>,
    pub paths: Vec<Vec<usize>>,
}

fn mask_of(vs: &[usize]) -> u64 {
    vs.iter().fold(0, |m, &v| m | bit(v))
}

impl OddK32Witness {
    /// Re-checks the witness against `g` edge by edge.
    pub fn verify(&self, g: &Graph) -> bool {
        let n = g.order();
        if self.cycles.len() != 3 || self.paths.len() != 3 {
            return false;
        }
        let all_in_range = self.cycles.iter().chain(&self.paths).flatten().all(|&v| v < n);
        if !all_in_range {
            return false;
        }
        let mut masks = [0u64; 3];
        for (i, c) in self.cycles.iter().enumerate() {
            masks[i] = mask_of(c);
            let closed = (0..c.len()).all(|j| g.has_edge(c[j], c[(j + 1) % c.len()]));
            if c.len() < 3 || c.len() % 2 == 0 || masks[i].count_ones() as usize != c.len() || !closed {
                return false;
            }
        }
        let mut attachments = [0u64; 3];
        let mut interiors = 0u64;
        for (i, p) in self.paths.iter().enumerate() {
            let j = (i + 1) % 3;
            let (Some(&first), Some(&last)) = (p.first(), p.last()) else {
                return false;
            };
            if masks[i] & bit(first) == 0 || masks[j] & bit(last) == 0 {
                return false;
            }
            if p.windows(2).any(|w| !g.has_edge(w[0], w[1])) {
                return false;
            }
            if mask_of(p).count_ones() as usize != p.len() {
                return false;
            }
            if p.len() > 2 {
                let interior = mask_of(&p[1..p.len() - 1]);
                if interior & (interiors | masks[0] | masks[1] | masks[2]) != 0 {
                    return false;
                }
                interiors |= interior;
            }
            if attachments[i] & bit(first) != 0 || attachments[j] & bit(last) != 0 {
                return false;
            }
            attachments[i] |= bit(first);
            attachments[j] |= bit(last);
        }
        // Cycles meet only where a single-vertex path says so.
        for i in 0..3 {
            let j = (i + 1) % 3;
            let shared = masks[i] & masks[j];
            let expected = if self.paths[i].len() == 1 { bit(self.paths[i][0]) } else { 0 };
            if shared != expected {
                return false;
            }
        }
        true
    }
}

/// Every odd cycle, each once, as a vertex list starting at its smallest
/// vertex.
fn odd_cycles(g: &Graph, budget: &mut Budget) -> Result<Vec<(u64, Vec<usize>)>> {
    fn grow(
        g: &Graph,
        path: &mut Vec<usize>,
        used: u64,
        allowed: u64,
        out: &mut Vec<(u64, Vec<usize>)>,
        budget: &mut Budget,
    ) -> Result<()> {
        budget.tick()?;
        let s = path[0];
        let cur = *path.last().expect("non-empty");
        if path.len() >= 3 && path.len() % 2 == 1 && g.has_edge(cur, s) && path[1] < cur {
            out.push((used, path.clone()));
        }
        for w in Bits(g.neighbours(cur) & allowed & !used) {
            path.push(w);
            grow(g, path, used | bit(w), allowed, out, budget)?;
            path.pop();
        }
        Ok(())
    }
    let mut out = Vec::new();
    for s in 0..g.order() {
        let allowed = g.vertex_mask() & !((bit(s) << 1) - 1);
        grow(g, &mut vec![s], bit(s), allowed, &mut out, budget)?;
    }
    out.sort_by_key(|(_, c)| c.len());
    Ok(out)
}

pub fn find_odd_k32(g: &Graph) -> Option<OddK32Witness> {
    find_odd_k32_within(g, &mut Budget::unlimited()).expect("unlimited budget")
}

/// Tries triples of odd cycles, shortest first, that pairwise share at
/// most one vertex, then backtracks over the connecting paths.
pub fn find_odd_k32_within(g: &Graph, budget: &mut Budget) -> Result<Option<OddK32Witness>> {
    // Three cycles of length at least the odd-girth share at most three
    // vertices.
    let Some(og) = odd_girth(g).finite() else {
        return Ok(None);
    };
    if 3 * og - 3 > g.order() {
        return Ok(None);
    }
    let cycles = odd_cycles(g, budget)?;
    let m = cycles.len();
    let n = g.order() as u32;
    for i in 0..m {
        for j in i + 1..m {
            let (mi, mj) = (cycles[i].0, cycles[j].0);
            if (mi & mj).count_ones() > 1 || (mi | mj).count_ones() > n {
                continue;
            }
            for k in j + 1..m {
                budget.tick()?;
                let mk = cycles[k].0;
                if (mi & mk).count_ones() > 1
                    || (mj & mk).count_ones() > 1
                    || (mi | mj | mk).count_ones() > n
                {
                    continue;
                }
                let triple = [i, j, k].map(|x| &cycles[x]);
                if let Some(paths) = connect(g, triple.map(|c| c.0), budget)? {
                    return Ok(Some(OddK32Witness {
                        cycles: triple.iter().map(|c| c.1.clone()).collect(),
                        paths,
                    }));
                }
            }
        }
    }
    Ok(None)
}

/// Finds the three connecting paths for fixed cycles, if possible.
fn connect(g: &Graph, masks: [u64; 3], budget: &mut Budget) -> Result<Option<Vec<Vec<usize>>>> {
    let mut paths: Vec<Vec<usize>> = vec![Vec::new(); 3];
    let mut attached = [0u64; 3];
    for i in 0..3 {
        let j = (i + 1) % 3;
        let shared = masks[i] & masks[j];
        if shared != 0 {
            let x = shared.trailing_zeros() as usize;
            if attached[i] & bit(x) != 0 || attached[j] & bit(x) != 0 {
                return Ok(None);
            }
            attached[i] |= bit(x);
            attached[j] |= bit(x);
            paths[i] = vec![x];
        }
    }
    let free = g.vertex_mask() & !(masks[0] | masks[1] | masks[2]);
    let open: Vec<usize> = (0..3).filter(|&i| paths[i].is_empty()).collect();
    if fill(g, &masks, &open, free, &mut attached, &mut paths, budget)? {
        Ok(Some(paths))
    } else {
        Ok(None)
    }
}

fn fill(
    g: &Graph,
    masks: &[u64; 3],
    open: &[usize],
    free: u64,
    attached: &mut [u64; 3],
    paths: &mut Vec<Vec<usize>>,
    budget: &mut Budget,
) -> Result<bool> {
    let Some((&i, rest)) = open.split_first() else {
        return Ok(true);
    };
    let j = (i + 1) % 3;
    // A cycle's second attachment must differ from its first.
    let starts = masks[i] & !attached[i];
    let ends = masks[j] & !attached[j];
    PathFinder::new(g, starts, ends, free).for_each(None, budget, &mut |path, budget| {
        let (first, last) = (path[0], path[path.len() - 1]);
        let interior = mask_of(&path[1..path.len() - 1]);
        attached[i] |= bit(first);
        attached[j] |= bit(last);
        paths[i] = path.to_vec();
        if fill(g, masks, rest, free & !interior, attached, paths, budget)? {
            return Ok(true);
        }
        attached[i] &= !bit(first);
        attached[j] &= !bit(last);
        paths[i].clear();
        Ok(false)
    })
}
