use std::fmt;

use serde::{Serialize, Serializer};

use super::{bit, Bits, Graph};
use crate::error::Result;

/// Length of a shortest cycle of some kind; `Infinite` when there is none.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CycleLength {
    Finite(usize),
    Infinite,
}

impl CycleLength {
    pub fn finite(self) -> Option<usize> {
        match self {
            CycleLength::Finite(l) => Some(l),
            CycleLength::Infinite => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        self == CycleLength::Infinite
    }
}

impl fmt::Display for CycleLength {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CycleLength::Finite(l) => write!(f, "{l}"),
            CycleLength::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for CycleLength {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            CycleLength::Finite(l) => s.serialize_u64(*l as u64),
            CycleLength::Infinite => s.serialize_none(),
        }
    }
}

/// Shortest walk lengths from `source` of each parity: `[even, odd]`,
/// `None` where no walk of that parity exists.
pub fn parity_distances(g: &Graph, source: usize) -> [Vec<Option<usize>>; 2] {
    let n = g.order();
    let mut dist = [vec![None; n], vec![None; n]];
    let mut seen = [bit(source), 0u64];
    dist[0][source] = Some(0);
    let mut frontier = bit(source);
    let mut parity = 0;
    let mut len = 0;
    while frontier != 0 {
        let mut next = 0u64;
        for u in Bits(frontier) {
            next |= g.rows()[u];
        }
        parity ^= 1;
        len += 1;
        next &= !seen[parity];
        seen[parity] |= next;
        for v in Bits(next) {
            dist[parity][v] = Some(len);
        }
        frontier = next;
    }
    dist
}

/// Length of a shortest odd closed walk through `source` (equivalently of a
/// shortest odd cycle meeting it), or `None` if its component is bipartite.
fn shortest_odd_closed_walk(g: &Graph, source: usize, cap: usize) -> Option<usize> {
    let mut seen = [bit(source), 0u64];
    let mut frontier = bit(source);
    let mut parity = 0;
    let mut len = 0;
    while frontier != 0 && len < cap {
        let mut next = 0u64;
        for u in Bits(frontier) {
            next |= g.rows()[u];
        }
        parity ^= 1;
        len += 1;
        next &= !seen[parity];
        if parity == 1 && next & bit(source) != 0 {
            return Some(len);
        }
        seen[parity] |= next;
        frontier = next;
    }
    None
}

/// Length of a shortest odd cycle, by parity-labelled BFS from every vertex.
pub fn odd_girth(g: &Graph) -> CycleLength {
    let mut best = usize::MAX;
    for s in 0..g.order() {
        if let Some(l) = shortest_odd_closed_walk(g, s, best) {
            best = best.min(l);
        }
    }
    if best == usize::MAX {
        CycleLength::Infinite
    } else {
        CycleLength::Finite(best)
    }
}

/// Length of a shortest cycle.
pub fn girth(g: &Graph) -> CycleLength {
    let n = g.order();
    let mut best = usize::MAX;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    for s in 0..n {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[s] = 0;
        parent[s] = usize::MAX;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            if 2 * dist[u] + 1 >= best {
                break;
            }
            for w in Bits(g.rows()[u]) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    best = best.min(dist[u] + dist[w] + 1);
                }
            }
        }
    }
    if best == usize::MAX {
        CycleLength::Infinite
    } else {
        CycleLength::Finite(best)
    }
}

/// BFS distances from `source`; `None` for unreachable vertices.
pub fn distances_from(g: &Graph, source: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; g.order()];
    dist[source] = Some(0);
    let mut seen = bit(source);
    let mut frontier = seen;
    let mut d = 0;
    while frontier != 0 {
        let mut next = 0u64;
        for u in Bits(frontier) {
            next |= g.rows()[u];
        }
        next &= !seen;
        d += 1;
        for v in Bits(next) {
            dist[v] = Some(d);
        }
        seen |= next;
        frontier = next;
    }
    dist
}

/// The vertex set split by distance from `center`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DistancePartition {
    pub center: usize,
    pub n1: u64,
    pub n2: u64,
    /// Distance 3 or more, including vertices in other components.
    pub n3plus: u64,
}

pub fn distance_partition(g: &Graph, center: usize) -> Result<DistancePartition> {
    g.check_vertex(center)?;
    let n1 = g.neighbours(center);
    let mut reach2 = 0u64;
    for u in Bits(n1) {
        reach2 |= g.neighbours(u);
    }
    let n2 = reach2 & !n1 & !bit(center);
    let n3plus = g.vertex_mask() & !(n1 | n2 | bit(center));
    Ok(DistancePartition {
        center,
        n1,
        n2,
        n3plus,
    })
}

/// Vertices at distance exactly two from `v`.
pub fn second_neighbourhood(g: &Graph, v: usize) -> u64 {
    let n1 = g.neighbours(v);
    let mut reach = 0u64;
    for u in Bits(n1) {
        reach |= g.neighbours(u);
    }
    reach & !n1 & !bit(v)
}

/// Whether some walk with exactly `length` edges joins `u` to `v`.
pub fn has_walk_of_length(g: &Graph, u: usize, v: usize, length: usize) -> Result<bool> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    let mut layer = bit(u);
    for _ in 0..length {
        let mut next = 0u64;
        for w in Bits(layer) {
            next |= g.neighbours(w);
        }
        if next == 0 {
            return Ok(false);
        }
        layer = next;
    }
    Ok(layer & bit(v) != 0)
}

/// A maximal path whose internal vertices have degree two. A closed thread
/// starts and ends at the same vertex; a cycle component is one closed
/// thread whose length is the cycle length.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Thread {
    pub vertices: Vec<usize>,
    pub closed: bool,
}

impl Thread {
    pub fn length(&self) -> usize {
        self.vertices.len() - 1
    }
}

pub fn list_threads(g: &Graph) -> Vec<Thread> {
    let n = g.order();
    let mut used = vec![0u64; n];
    let mut out = Vec::new();
    let walk = |start: usize, first: usize, used: &mut Vec<u64>| -> Thread {
        let mut vertices = vec![start, first];
        used[start] |= bit(first);
        used[first] |= bit(start);
        let (mut prev, mut cur) = (start, first);
        while g.degree(cur) == 2 && cur != start {
            let next = (g.neighbours(cur) & !bit(prev)).trailing_zeros() as usize;
            used[cur] |= bit(next);
            used[next] |= bit(cur);
            vertices.push(next);
            prev = cur;
            cur = next;
        }
        let closed = vertices.first() == vertices.last();
        Thread { vertices, closed }
    };
    for s in 0..n {
        if g.degree(s) == 2 {
            continue;
        }
        for w in Bits(g.neighbours(s)) {
            if used[s] & bit(w) == 0 {
                out.push(walk(s, w, &mut used));
            }
        }
    }
    // Whatever is left lies on cycle components.
    for s in 0..n {
        let left = g.neighbours(s) & !used[s];
        if left != 0 {
            out.push(walk(s, left.trailing_zeros() as usize, &mut used));
        }
    }
    out
}

pub fn max_thread_length(g: &Graph) -> usize {
    list_threads(g).iter().map(Thread::length).max().unwrap_or(0)
}
