use super::{bit, Bits, Graph};
use crate::error::{Error, Result};

/// Identifies the non-adjacent vertices `u` and `v`; returns the quotient
/// together with the quotient map (old vertex -> new vertex). The merged
/// vertex takes index `min(u, v)`; parallel edges collapse.
pub fn identify_vertices_with_map(g: &Graph, u: usize, v: usize) -> Result<(Graph, Vec<usize>)> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if u == v {
        return Err(Error::SameVertex(u));
    }
    if g.has_edge(u, v) {
        return Err(Error::AdjacentPair(u, v));
    }
    if g.order() == 1 {
        return Err(Error::OrderOutOfRange(0));
    }
    let (keep, drop) = (u.min(v), u.max(v));
    let map: Vec<usize> = (0..g.order())
        .map(|x| match x {
            x if x == drop => keep,
            x if x > drop => x - 1,
            x => x,
        })
        .collect();
    let mut rows = vec![0u64; g.order() - 1];
    for (a, b) in g.edges() {
        let (ma, mb) = (map[a], map[b]);
        rows[ma] |= bit(mb);
        rows[mb] |= bit(ma);
    }
    Ok((Graph::from_rows_unchecked(rows), map))
}

pub fn identify_vertices(g: &Graph, u: usize, v: usize) -> Result<Graph> {
    identify_vertices_with_map(g, u, v).map(|(q, _)| q)
}

/// Folds an odd cycle `v0 v1 ... v_{m-1}` (m >= 5) by identifying `v0` with
/// `v2` and then `v1` with `v3`. The image of an odd-girth-(2k+3) graph along
/// one of its shortest odd cycles has odd-girth 2k+1.
pub fn fold_cycle(g: &Graph, cycle: &[usize]) -> Result<Graph> {
    check_cycle(g, cycle)?;
    if cycle.len() < 5 || cycle.len() % 2 == 0 {
        return Err(Error::NotACycle(format!(
            "need an odd cycle of length at least 5, got length {}",
            cycle.len()
        )));
    }
    let (first, map) = identify_vertices_with_map(g, cycle[0], cycle[2])?;
    identify_vertices(&first, map[cycle[1]], map[cycle[3]])
}

fn check_cycle(g: &Graph, cycle: &[usize]) -> Result<()> {
    let mut seen = 0u64;
    for &v in cycle {
        g.check_vertex(v)?;
        if seen & bit(v) != 0 {
            return Err(Error::NotACycle(format!("vertex {v} repeats")));
        }
        seen |= bit(v);
    }
    for (i, &v) in cycle.iter().enumerate() {
        let w = cycle[(i + 1) % cycle.len()];
        if !g.has_edge(v, w) {
            return Err(Error::NotACycle(format!("{v}-{w} is not an edge")));
        }
    }
    Ok(())
}

/// A shortest odd cycle as an ordered vertex list, if the graph has one.
pub fn shortest_odd_cycle(g: &Graph) -> Option<Vec<usize>> {
    // BFS over (vertex, parity) with parent pointers; the first return to
    // (s, odd) closes a shortest odd closed walk through s, which for a
    // globally shortest one is a cycle.
    let target = super::odd_girth(g).finite()?;
    for s in 0..g.order() {
        let n = g.order();
        let mut parent = vec![[usize::MAX; 2]; n];
        let mut seen = [bit(s), 0u64];
        let mut frontier: Vec<(usize, usize)> = vec![(s, 0)];
        let mut len = 0;
        while !frontier.is_empty() && len < target {
            len += 1;
            let mut next = Vec::new();
            for &(u, p) in &frontier {
                for w in Bits(g.neighbours(u)) {
                    let q = p ^ 1;
                    if seen[q] & bit(w) == 0 {
                        seen[q] |= bit(w);
                        parent[w][q] = u;
                        next.push((w, q));
                    }
                }
            }
            frontier = next;
        }
        if len == target && seen[1] & bit(s) != 0 {
            let mut walk = vec![s];
            let (mut v, mut p) = (s, 1);
            for _ in 0..target {
                let u = parent[v][p];
                walk.push(u);
                v = u;
                p ^= 1;
            }
            walk.pop();
            walk.reverse();
            let distinct = walk.iter().fold(0u64, |acc, &x| acc | bit(x));
            if distinct.count_ones() as usize == target {
                return Some(walk);
            }
        }
    }
    None
}
