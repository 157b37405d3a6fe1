//! Canonical labelling by equitable-partition refinement and
//! individualisation, with automorphism pruning.
//!
//! Leaves of the search tree are compared as relabelled adjacency rows and the
//! largest one wins. A child of a node is skipped when an automorphism found
//! so far fixes the node's individualised vertices pointwise and maps an
//! already explored sibling onto it. Transpositions of twin vertices are
//! seeded as automorphisms before the search starts, so stars, complete
//! bipartite graphs and similar do not blow up.

use super::{bit, graph6, Bits, Graph, MAX_ORDER};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CanonicalForm {
    /// graph6 encoding of the canonically relabelled graph.
    pub canonical_bytes: Vec<u8>,
    /// `relabeling[v]` is the canonical index of input vertex `v`.
    pub relabeling: Vec<usize>,
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let result = Canonizer::new().run(g.rows());
    let canon = Graph::from_rows_unchecked(result.rows);
    CanonicalForm {
        canonical_bytes: graph6::to_graph6(&canon).into_bytes(),
        relabeling: result.position,
    }
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.order() != h.order() || g.edge_count() != h.edge_count() {
        return false;
    }
    let mut dg = g.degrees();
    let mut dh = h.degrees();
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return false;
    }
    let mut c = Canonizer::new();
    c.run(g.rows()).rows == c.run(h.rows()).rows
}

/// Output of one canonical labelling run.
#[derive(Debug, Clone)]
pub struct Labelling {
    /// Adjacency rows of the canonical graph.
    pub rows: Vec<u64>,
    /// `position[v]`: canonical index of vertex `v`.
    pub position: Vec<usize>,
    /// Smallest vertex of each vertex's orbit under the automorphisms found.
    /// Vertices sharing a representative are in the same orbit; the converse
    /// need not hold.
    pub orbit: Vec<usize>,
}

/// Reusable canonical labeller.
#[derive(Default)]
pub struct Canonizer {
    rows: Vec<u64>,
    n: usize,
    generators: Vec<Vec<u8>>,
    best: Option<(Vec<u64>, Vec<u8>)>,
    first: Option<(Vec<u64>, Vec<u8>)>,
}

impl Canonizer {
    pub fn new() -> Canonizer {
        Canonizer::default()
    }

    pub fn run(&mut self, rows: &[u64]) -> Labelling {
        let n = rows.len();
        assert!((1..=MAX_ORDER).contains(&n));
        self.rows.clear();
        self.rows.extend_from_slice(rows);
        self.n = n;
        self.generators.clear();
        self.best = None;
        self.first = None;
        self.seed_twins();

        let mut cells = vec![super::low_mask(n)];
        let queue = cells.clone();
        self.refine(&mut cells, queue);
        let mut prefix = Vec::with_capacity(n);
        self.search(cells, &mut prefix);

        let (best_rows, best_lab) = self.best.take().expect("search reaches a leaf");
        let mut position = vec![0usize; n];
        for (i, &v) in best_lab.iter().enumerate() {
            position[v as usize] = i;
        }
        let orbit = self.orbits_fixing(&[]);
        Labelling {
            rows: best_rows,
            position,
            orbit,
        }
    }

    /// Transpositions of vertices with equal open or closed neighbourhoods.
    fn seed_twins(&mut self) {
        let n = self.n;
        let mut open: Vec<(u64, usize)> = (0..n).map(|v| (self.rows[v], v)).collect();
        let mut closed: Vec<(u64, usize)> =
            (0..n).map(|v| (self.rows[v] | bit(v), v)).collect();
        for list in [&mut open, &mut closed] {
            list.sort_unstable();
            for w in list.windows(2) {
                if w[0].0 == w[1].0 {
                    let mut perm: Vec<u8> = (0..n as u8).collect();
                    perm.swap(w[0].1, w[1].1);
                    self.generators.push(perm);
                }
            }
        }
    }

    /// Refines `cells` to the coarsest equitable partition finer than it,
    /// splitting against the cells in `queue` first.
    fn refine(&self, cells: &mut Vec<u64>, queue: Vec<u64>) {
        let mut queue = std::collections::VecDeque::from(queue);
        let mut buckets = [0u64; MAX_ORDER + 1];
        while let Some(splitter) = queue.pop_front() {
            let mut i = 0;
            while i < cells.len() {
                let cell = cells[i];
                if cell & (cell - 1) == 0 {
                    i += 1;
                    continue;
                }
                let mut used: u128 = 0;
                for v in Bits(cell) {
                    let c = (self.rows[v] & splitter).count_ones() as usize;
                    buckets[c] |= bit(v);
                    used |= 1u128 << c;
                }
                if used & (used - 1) == 0 {
                    buckets[used.trailing_zeros() as usize] = 0;
                    i += 1;
                    continue;
                }
                let mut parts = Vec::with_capacity(used.count_ones() as usize);
                while used != 0 {
                    let c = used.trailing_zeros() as usize;
                    used &= used - 1;
                    parts.push(buckets[c]);
                    buckets[c] = 0;
                }
                let k = parts.len();
                queue.extend(parts.iter().copied());
                cells.splice(i..=i, parts);
                i += k;
            }
        }
    }

    fn search(&mut self, cells: Vec<u64>, prefix: &mut Vec<usize>) {
        if cells.len() == self.n {
            self.leaf(&cells);
            return;
        }
        let target_index = cells
            .iter()
            .position(|c| c.count_ones() > 1)
            .expect("non-discrete partition has a non-singleton cell");
        let target = cells[target_index];
        let mut explored = 0u64;
        let mut orbit_gens = usize::MAX;
        let mut orbit = Vec::new();
        for v in Bits(target) {
            if explored != 0 {
                if orbit_gens != self.generators.len() {
                    orbit = self.orbits_fixing(prefix);
                    orbit_gens = self.generators.len();
                }
                if Bits(explored).any(|u| orbit[u] == orbit[v]) {
                    continue;
                }
            }
            explored |= bit(v);
            let mut child = cells.clone();
            child.splice(target_index..=target_index, [bit(v), target & !bit(v)]);
            self.refine(&mut child, vec![bit(v)]);
            prefix.push(v);
            self.search(child, prefix);
            prefix.pop();
        }
    }

    fn leaf(&mut self, cells: &[u64]) {
        let n = self.n;
        let lab: Vec<u8> = cells.iter().map(|c| c.trailing_zeros() as u8).collect();
        let mut pos = [0u8; MAX_ORDER];
        for (i, &v) in lab.iter().enumerate() {
            pos[v as usize] = i as u8;
        }
        let rows: Vec<u64> = lab
            .iter()
            .map(|&v| {
                Bits(self.rows[v as usize]).fold(0u64, |acc, u| acc | bit(pos[u] as usize))
            })
            .collect();
        for reference in [&self.first, &self.best].into_iter().flatten() {
            if reference.0 == rows {
                // lab[i] and reference lab[i] play the same role.
                let mut perm = vec![0u8; n];
                for i in 0..n {
                    perm[lab[i] as usize] = reference.1[i];
                }
                if perm.iter().enumerate().any(|(i, &p)| i != p as usize) {
                    self.generators.push(perm);
                }
                return;
            }
        }
        if self.first.is_none() {
            self.first = Some((rows.clone(), lab.clone()));
        }
        match &self.best {
            Some((best, _)) if *best >= rows => {}
            _ => self.best = Some((rows, lab)),
        }
    }

    /// Orbit representatives under the generators that fix `prefix`
    /// pointwise.
    fn orbits_fixing(&self, prefix: &[usize]) -> Vec<usize> {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for g in &self.generators {
            if prefix.iter().any(|&p| g[p] as usize != p) {
                continue;
            }
            for (x, &y) in g.iter().enumerate() {
                let (a, b) = (find(&mut parent, x), find(&mut parent, y as usize));
                if a != b {
                    let (lo, hi) = (a.min(b), a.max(b));
                    parent[hi] = lo;
                }
            }
        }
        (0..self.n).map(|x| find(&mut parent, x)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{complete, cycle, generalized_mycielski, odd_k4, OddK4Spec};
    use rand::seq::SliceRandom;
    use rand::SeedableRng;

    fn shuffled(g: &Graph, rng: &mut rand_chacha::ChaCha8Rng) -> Graph {
        let mut perm: Vec<usize> = (0..g.order()).collect();
        perm.shuffle(rng);
        g.permuted(&perm).unwrap()
    }

    #[test]
    fn relabelled_copies_share_a_form() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let samples = [
            cycle(5).unwrap(),
            complete(5).unwrap(),
            generalized_mycielski(2).unwrap(),
            odd_k4(OddK4Spec::new(2, 2, 3)).unwrap(),
            Graph::from_edges(6, &[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5)]).unwrap(),
        ];
        for g in &samples {
            let f = canonical_form(g);
            for _ in 0..100 {
                assert_eq!(canonical_form(&shuffled(g, &mut rng)).canonical_bytes, f.canonical_bytes);
            }
        }
    }

    #[test]
    fn relabeling_produces_canonical_graph() {
        let g = odd_k4(OddK4Spec::new(1, 2, 2)).unwrap();
        let f = canonical_form(&g);
        let relabelled = g.permuted(&f.relabeling).unwrap();
        assert_eq!(crate::graph::to_graph6(&relabelled).into_bytes(), f.canonical_bytes);
    }

    #[test]
    fn isomorphism_examples() {
        let a = odd_k4(OddK4Spec::new(1, 2, 2)).unwrap();
        let b = odd_k4(OddK4Spec::new(2, 1, 2)).unwrap();
        assert!(are_isomorphic(&a, &b));
        let c7 = cycle(7).unwrap();
        let c5_plus_path = cycle(5)
            .unwrap()
            .disjoint_union(&Graph::from_edges(2, &[(0, 1)]).unwrap())
            .unwrap();
        assert!(!are_isomorphic(&c7, &c5_plus_path));
        // Same degree sequence, different graphs: C6 vs two triangles.
        let two_triangles = cycle(3).unwrap().disjoint_union(&cycle(3).unwrap()).unwrap();
        assert!(!are_isomorphic(&cycle(6).unwrap(), &two_triangles));
    }

    #[test]
    fn orbits_of_vertex_transitive_graphs() {
        let mut c = Canonizer::new();
        let l = c.run(cycle(9).unwrap().rows());
        assert!(l.orbit.iter().all(|&o| o == 0));
        let star = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        let l = c.run(star.rows());
        assert_eq!(l.orbit, vec![0, 1, 1, 1, 1]);
    }
}
