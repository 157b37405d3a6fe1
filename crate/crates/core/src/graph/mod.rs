//! Simple undirected graphs on at most 64 vertices, one `u64` adjacency row
//! per vertex.

mod canon;
mod graph6;
mod metrics;
mod transform;

pub use canon::{are_isomorphic, canonical_form, CanonicalForm, Canonizer};
pub use graph6::{from_graph6, read_graph6_lines, to_graph6};
pub use metrics::{
    distance_partition, distances_from, girth, has_walk_of_length, list_threads,
    max_thread_length, odd_girth, parity_distances, second_neighbourhood, CycleLength,
    DistancePartition, Thread,
};
pub use transform::{
    fold_cycle, identify_vertices, identify_vertices_with_map, shortest_odd_cycle,
};

use std::fmt;

use crate::error::{Error, Result};

pub const MAX_ORDER: usize = 64;

#[inline]
pub(crate) const fn bit(v: usize) -> u64 {
    1u64 << v
}

#[inline]
pub(crate) const fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterator over the set bits of a word, lowest first.
#[derive(Clone, Copy)]
pub struct Bits(pub u64);

impl Iterator for Bits {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for Bits {}

/// A loop-free undirected graph. Row `v` holds the neighbours of `v`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    order: usize,
    rows: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `order` vertices.
    pub fn empty(order: usize) -> Result<Graph> {
        if order == 0 || order > MAX_ORDER {
            return Err(Error::OrderOutOfRange(order));
        }
        Ok(Graph {
            order,
            rows: vec![0; order],
        })
    }

    pub fn from_edges(order: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::empty(order)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from adjacency rows, checking symmetry and loops.
    pub fn from_rows(rows: Vec<u64>) -> Result<Graph> {
        let order = rows.len();
        if order == 0 || order > MAX_ORDER {
            return Err(Error::OrderOutOfRange(order));
        }
        let mask = low_mask(order);
        for (v, &row) in rows.iter().enumerate() {
            if row & !mask != 0 {
                return Err(Error::InvalidVertex {
                    vertex: 63 - (row & !mask).leading_zeros() as usize,
                    order,
                });
            }
            if row & bit(v) != 0 {
                return Err(Error::Loop(v));
            }
            for u in Bits(row) {
                if rows[u] & bit(v) == 0 {
                    return Err(Error::InvalidParameters(format!(
                        "adjacency is not symmetric at {v}-{u}"
                    )));
                }
            }
        }
        Ok(Graph { order, rows })
    }

    /// Rows are trusted; used on hot paths where symmetry is guaranteed by
    /// construction.
    pub(crate) fn from_rows_unchecked(rows: Vec<u64>) -> Graph {
        debug_assert!(Graph::from_rows(rows.clone()).is_ok());
        Graph {
            order: rows.len(),
            rows,
        }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    #[inline]
    pub fn vertex_mask(&self) -> u64 {
        low_mask(self.order)
    }

    #[inline]
    pub fn neighbours(&self, v: usize) -> u64 {
        self.rows[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order && v < self.order && self.rows[u] & bit(v) != 0
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.order {
            Ok(())
        } else {
            Err(Error::InvalidVertex {
                vertex: v,
                order: self.order,
            })
        }
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::Loop(u));
        }
        self.rows[u] |= bit(v);
        self.rows[v] |= bit(u);
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        self.rows[u] &= !bit(v);
        self.rows[v] &= !bit(u);
        Ok(())
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(u, &row)| Bits(row & !low_mask(u + 1)).map(move |v| (u, v)))
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.order).map(|v| self.degree(v)).collect()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.order).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.order).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// Vertices reachable from `v` (including `v`).
    pub fn component_of(&self, v: usize) -> u64 {
        component_within(&self.rows, self.vertex_mask(), v)
    }

    pub fn is_connected(&self) -> bool {
        self.component_of(0) == self.vertex_mask()
    }

    /// Connected components as vertex masks, ordered by smallest vertex.
    pub fn components(&self) -> Vec<u64> {
        let mut left = self.vertex_mask();
        let mut out = Vec::new();
        while left != 0 {
            let c = self.component_of(left.trailing_zeros() as usize);
            out.push(c);
            left &= !c;
        }
        out
    }

    /// Vertices whose removal disconnects the graph (articulation points).
    pub fn cut_vertices(&self) -> u64 {
        cut_vertices(&self.rows, self.vertex_mask())
    }

    /// Subgraph induced by `mask`; vertices keep their relative order. The
    /// returned vector maps new indices to old ones.
    pub fn induced_subgraph(&self, mask: u64) -> Result<(Graph, Vec<usize>)> {
        let mask = mask & self.vertex_mask();
        let keep: Vec<usize> = Bits(mask).collect();
        if keep.is_empty() {
            return Err(Error::OrderOutOfRange(0));
        }
        let mut index = [usize::MAX; MAX_ORDER];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let rows = keep
            .iter()
            .map(|&v| {
                Bits(self.rows[v] & mask).fold(0u64, |acc, u| acc | bit(index[u]))
            })
            .collect();
        Ok((Graph::from_rows_unchecked(rows), keep))
    }

    /// The graph with vertex `v` deleted, later vertices shifted down by one.
    pub fn delete_vertex(&self, v: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        Ok(self.induced_subgraph(self.vertex_mask() & !bit(v))?.0)
    }

    /// Adds a new vertex (index `order`) adjacent to `neighbours`.
    pub fn with_vertex(&self, neighbours: u64) -> Result<Graph> {
        if self.order >= MAX_ORDER {
            return Err(Error::OrderOutOfRange(self.order + 1));
        }
        if neighbours & !self.vertex_mask() != 0 {
            return Err(Error::InvalidVertex {
                vertex: 63 - neighbours.leading_zeros() as usize,
                order: self.order,
            });
        }
        let n = self.order;
        let mut rows = self.rows.clone();
        for u in Bits(neighbours) {
            rows[u] |= bit(n);
        }
        rows.push(neighbours);
        Ok(Graph { order: n + 1, rows })
    }

    /// Relabels vertices: vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.order {
            return Err(Error::InvalidParameters(format!(
                "permutation of length {} for order {}",
                perm.len(),
                self.order
            )));
        }
        let mut seen = 0u64;
        for &p in perm {
            self.check_vertex(p)?;
            seen |= bit(p);
        }
        if seen != self.vertex_mask() {
            return Err(Error::InvalidParameters("not a permutation".into()));
        }
        let mut rows = vec![0u64; self.order];
        for (u, v) in self.edges() {
            rows[perm[u]] |= bit(perm[v]);
            rows[perm[v]] |= bit(perm[u]);
        }
        Ok(Graph::from_rows_unchecked(rows))
    }

    /// Disjoint union; the vertices of `other` follow those of `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.order + other.order;
        if n > MAX_ORDER {
            return Err(Error::OrderOutOfRange(n));
        }
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().map(|r| r << self.order));
        Ok(Graph::from_rows_unchecked(rows))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({}; ", self.order)?;
        let mut first = true;
        for (u, v) in self.edges() {
            if !first {
                write!(f, " ")?;
            }
            first = false;
            write!(f, "{u}-{v}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&to_graph6(self))
    }
}

pub(crate) fn component_within(rows: &[u64], within: u64, v: usize) -> u64 {
    let mut seen = bit(v) & within;
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0u64;
        for u in Bits(frontier) {
            next |= rows[u];
        }
        next &= within & !seen;
        seen |= next;
        frontier = next;
    }
    seen
}

/// Articulation points of the subgraph induced by `within`, by iterative
/// Hopcroft-Tarjan low-link.
pub(crate) fn cut_vertices(rows: &[u64], within: u64) -> u64 {
    let mut disc = [0u8; MAX_ORDER];
    let mut low = [0u8; MAX_ORDER];
    let mut parent = [usize::MAX; MAX_ORDER];
    let mut pending = [0u64; MAX_ORDER];
    let mut cut = 0u64;
    let mut time = 0u8;
    let mut left = within;
    while left != 0 {
        let root = left.trailing_zeros() as usize;
        let mut stack: Vec<usize> = vec![root];
        time += 1;
        disc[root] = time;
        low[root] = time;
        pending[root] = rows[root] & within;
        let mut root_children = 0;
        while let Some(&v) = stack.last() {
            if pending[v] != 0 {
                let w = pending[v].trailing_zeros() as usize;
                pending[v] &= pending[v] - 1;
                if disc[w] == 0 {
                    parent[w] = v;
                    time += 1;
                    disc[w] = time;
                    low[w] = time;
                    pending[w] = rows[w] & within;
                    if v == root {
                        root_children += 1;
                    }
                    stack.push(w);
                } else if w != parent[v] {
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                let p = parent[v];
                if p != usize::MAX {
                    low[p] = low[p].min(low[v]);
                    if p != root && low[v] >= disc[p] {
                        cut |= bit(p);
                    }
                }
            }
        }
        if root_children > 1 {
            cut |= bit(root);
        }
        let mut comp = 0u64;
        for v in Bits(within) {
            if disc[v] != 0 {
                comp |= bit(v);
            }
        }
        left &= !comp;
    }
    cut
}
