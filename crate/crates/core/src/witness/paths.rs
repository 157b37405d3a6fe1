use crate::budget::Budget;
use crate::error::Result;
use crate::graph::{bit, Bits, Graph};

/// Whether `b` can be reached from `a` through vertices of `free`.
pub(crate) fn reachable(g: &Graph, a: usize, b: usize, free: u64) -> bool {
    let mut seen = bit(a);
    let mut frontier = bit(a);
    while frontier != 0 {
        let mut next = 0u64;
        for u in Bits(frontier) {
            next |= g.neighbours(u);
        }
        if next & bit(b) != 0 {
            return true;
        }
        next &= free & !seen;
        seen |= next;
        frontier = next;
    }
    false
}

/// Enumerates paths that start in `starts`, end in `ends` and have all
/// interior vertices in `free`. Neighbours closer to `ends` are tried
/// first, so short paths tend to come out early.
pub(crate) struct PathFinder<'a> {
    g: &'a Graph,
    starts: u64,
    ends: u64,
    free: u64,
    /// BFS distance to `ends` through `free`; `usize::MAX` if unreachable.
    dist: Vec<usize>,
}

type Visit<'c> = dyn FnMut(&[usize], &mut Budget) -> Result<bool> + 'c;

impl<'a> PathFinder<'a> {
    pub(crate) fn new(g: &'a Graph, starts: u64, ends: u64, free: u64) -> PathFinder<'a> {
        let free = free & !starts & !ends;
        let mut dist = vec![usize::MAX; g.order()];
        let mut frontier = ends;
        for v in Bits(ends) {
            dist[v] = 0;
        }
        let mut d = 0;
        let mut seen = ends;
        while frontier != 0 {
            d += 1;
            let mut next = 0u64;
            for u in Bits(frontier) {
                next |= g.neighbours(u);
            }
            // Start vertices get a distance but are not expanded through.
            let starts_hit = next & starts & !seen;
            next &= free & !seen;
            for v in Bits(next | starts_hit) {
                dist[v] = d;
            }
            seen |= next | starts_hit;
            frontier = next;
        }
        PathFinder {
            g,
            starts,
            ends,
            free,
            dist,
        }
    }

    /// Calls `visit` on each path (vertex list) until it returns `true`.
    /// With `parity = Some(p)` only paths of length `p (mod 2)` are
    /// reported. Returns whether some visit returned `true`.
    pub(crate) fn for_each(
        &self,
        parity: Option<usize>,
        budget: &mut Budget,
        visit: &mut Visit<'_>,
    ) -> Result<bool> {
        let mut starts: Vec<usize> = Bits(self.starts).filter(|&s| self.dist[s] != usize::MAX).collect();
        starts.sort_by_key(|&s| self.dist[s]);
        let mut path = Vec::with_capacity(self.g.order());
        for s in starts {
            path.clear();
            path.push(s);
            if self.walk(&mut path, bit(s), parity, budget, visit)? {
                return Ok(true);
            }
        }
        Ok(false)
    }

    fn walk(
        &self,
        path: &mut Vec<usize>,
        used: u64,
        parity: Option<usize>,
        budget: &mut Budget,
        visit: &mut Visit<'_>,
    ) -> Result<bool> {
        budget.tick()?;
        let cur = *path.last().expect("non-empty path");
        let len = path.len() - 1;
        let nbrs = self.g.neighbours(cur);
        for e in Bits(nbrs & self.ends) {
            if parity.is_none_or(|p| (len + 1) % 2 == p) {
                path.push(e);
                let stop = visit(path, budget)?;
                path.pop();
                if stop {
                    return Ok(true);
                }
            }
        }
        let mut next: Vec<usize> = Bits(nbrs & self.free & !used)
            .filter(|&w| self.dist[w] != usize::MAX)
            .collect();
        next.sort_by_key(|&w| self.dist[w]);
        for w in next {
            path.push(w);
            let stop = self.walk(path, used | bit(w), parity, budget, visit)?;
            path.pop();
            if stop {
                return Ok(true);
            }
        }
        Ok(false)
    }
}
