//! Isomorph-free growth by canonical augmentation: a child adds one vertex
//! adjacent to a set `S` of existing vertices, and is kept only when the
//! new vertex is the child's canonical deletion vertex up to isomorphism.

use std::collections::HashSet;

use super::rules::{degree_rule_holds, has_path_of_length, threads_can_be_cut};
use super::{PruneRule, SearchClass, SearchConfig};
use crate::constructions::cycle;
use crate::graph::{bit, odd_girth, Bits, Canonizer, CycleLength, Graph};

pub(crate) struct Grower {
    odd_girth: usize,
    class: SearchClass,
    n_max: usize,
    degree_cap: Option<usize>,
    degree_rule: bool,
    no4: bool,
    no6: bool,
    threads: bool,
    min_degree: bool,
}

impl Grower {
    pub(crate) fn new(cfg: &SearchConfig) -> Grower {
        let has = |r| cfg.prune_rules.contains(&r);
        let degree_rule = has(PruneRule::MaxDegree3Secondnbhd);
        Grower {
            odd_girth: 2 * cfg.k + 1,
            class: cfg.class,
            n_max: cfg.n_max,
            degree_cap: degree_rule.then_some(3),
            degree_rule,
            no4: has(PruneRule::No4Cycle),
            no6: has(PruneRule::No6Cycle),
            threads: has(PruneRule::NoThreadGe4),
            min_degree: has(PruneRule::MinDegree2),
        }
    }

    pub(crate) fn root(&self) -> Graph {
        let g = match self.class {
            SearchClass::OddGirthAtLeast => Graph::empty(1).expect("order 1"),
            SearchClass::OddGirthExactly => cycle(self.odd_girth).expect("valid cycle"),
        };
        canonical(&mut Canonizer::new(), &g)
    }

    /// Whether `g` can still grow into a graph passing the final rules with
    /// at most `n_max` vertices.
    fn viable(&self, g: &Graph) -> bool {
        if self.degree_rule && !degree_rule_holds(g) {
            return false;
        }
        let remaining = self.n_max - g.order();
        let cap = self.degree_cap.unwrap_or(self.n_max - 1);
        if self.threads && !threads_can_be_cut(g, remaining, cap) {
            return false;
        }
        if self.min_degree {
            let pendant = (0..g.order()).filter(|&v| g.degree(v) < 2).count();
            if pendant > remaining * cap {
                return false;
            }
        }
        true
    }

    /// The canonical children of the canonical graph `parent`, in a
    /// deterministic order.
    pub(crate) fn children(&self, parent: &Graph, canon: &mut Canonizer) -> Vec<Graph> {
        let n = parent.order();
        if n >= self.n_max {
            return Vec::new();
        }
        let cap = self.degree_cap.unwrap_or(n);
        let allowed = Bits(parent.vertex_mask())
            .filter(|&a| parent.degree(a) < cap)
            .fold(0u64, |acc, a| acc | bit(a));
        let compatible: Vec<u64> = (0..n)
            .map(|a| allowed & !bit(a) & !self.forbidden_partners(parent, a))
            .collect();

        let mut seen = HashSet::new();
        let mut out = Vec::new();
        let mut visit = |s: u64| {
            let child = parent.with_vertex(s).expect("order below 64");
            if !self.viable(&child) {
                return;
            }
            if let Some(rows) = self.accept(parent, &child, canon) {
                if seen.insert(rows.clone()) {
                    out.push(Graph::from_rows(rows).expect("canonical rows are valid"));
                }
            }
        };
        subsets(&compatible, allowed, 0, cap, &mut visit);
        out
    }

    /// Vertices `b` that may not share the new vertex with `a`.
    fn forbidden_partners(&self, g: &Graph, a: usize) -> u64 {
        let mut out = 0u64;
        // Odd walks a..b of length at most og - 4 would close an odd cycle
        // shorter than og through the new vertex.
        if self.odd_girth >= 5 {
            let mut seen = [bit(a), 0u64];
            let mut frontier = bit(a);
            for len in 1..=self.odd_girth - 4 {
                let p = len % 2;
                let next = Bits(frontier).fold(0, |acc, u| acc | g.neighbours(u)) & !seen[p];
                seen[p] |= next;
                frontier = next;
            }
            out |= seen[1];
        }
        if self.no4 {
            out |= Bits(g.neighbours(a)).fold(0, |acc, u| acc | g.neighbours(u));
        }
        if self.no6 {
            for b in Bits(g.vertex_mask() & !bit(a) & !out) {
                if has_path_of_length(g, a, b, 4, 0) {
                    out |= bit(b);
                }
            }
        }
        out & !bit(a)
    }

    fn eligible(&self, g: &Graph, u: usize) -> bool {
        match self.class {
            SearchClass::OddGirthAtLeast => true,
            SearchClass::OddGirthExactly => {
                let h = g.delete_vertex(u).expect("valid vertex");
                odd_girth(&h) == CycleLength::Finite(self.odd_girth)
            }
        }
    }

    /// Canonical rows of `child` if its last vertex is a canonical
    /// deletion vertex.
    fn accept(&self, parent: &Graph, child: &Graph, canon: &mut Canonizer) -> Option<Vec<u64>> {
        let m = child.order();
        let v = m - 1;
        let invariant = |u: usize| {
            let s: usize = Bits(child.neighbours(u)).map(|w| child.degree(w)).sum();
            (child.degree(u), s)
        };
        let mine = invariant(v);
        let non_cut = child.vertex_mask() & !child.cut_vertices() & !bit(v);
        let mut ties = bit(v);
        for u in Bits(non_cut) {
            let inv = invariant(u);
            if inv > mine {
                continue;
            }
            if !self.eligible(child, u) {
                continue;
            }
            if inv < mine {
                return None;
            }
            ties |= bit(u);
        }
        let labelling = canon.run(child.rows());
        if ties != bit(v) {
            let w = Bits(ties)
                .max_by_key(|&u| labelling.position[u])
                .expect("ties is non-empty");
            if w != v && labelling.orbit[w] != labelling.orbit[v] {
                let reduced = child.delete_vertex(w).expect("valid vertex");
                if canon.run(reduced.rows()).rows != parent.rows() {
                    return None;
                }
            }
        }
        Some(labelling.rows)
    }
}

pub(crate) fn canonical(canon: &mut Canonizer, g: &Graph) -> Graph {
    Graph::from_rows(canon.run(g.rows()).rows).expect("canonical rows are valid")
}

/// Calls `visit` on every non-empty clique of the compatibility graph with
/// at most `cap` members, drawn from `candidates`.
fn subsets(compatible: &[u64], candidates: u64, chosen: u64, cap: usize, visit: &mut impl FnMut(u64)) {
    for a in Bits(candidates) {
        let s = chosen | bit(a);
        visit(s);
        if (s.count_ones() as usize) < cap {
            let rest = candidates & compatible[a] & !((bit(a) << 1) - 1);
            subsets(compatible, rest, s, cap, visit);
        }
    }
}
