//! Backtracking homomorphism search over bitmask domains with arc
//! consistency after every assignment.

use super::VertexMap;
use crate::budget::Budget;
use crate::error::Result;
use crate::graph::{Bits, Canonizer, Graph};

/// How the next variable is chosen.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum VariableOrder {
    /// Descending degree, ties broken by BFS order from a vertex of
    /// maximum degree.
    #[default]
    Static,
    /// Smallest remaining domain first, ties broken by the static order.
    SmallestDomain,
}

/// A target graph prepared for repeated homomorphism queries.
#[derive(Debug, Clone)]
pub struct HomTarget {
    h: Graph,
    vertex_transitive: bool,
    order: VariableOrder,
}

impl HomTarget {
    /// Detects vertex-transitivity from the automorphisms found while
    /// canonically labelling `h`.
    pub fn new(h: &Graph) -> HomTarget {
        let orbit = Canonizer::new().run(h.rows()).orbit;
        HomTarget {
            h: h.clone(),
            vertex_transitive: orbit.iter().all(|&o| o == 0),
            order: VariableOrder::Static,
        }
    }

    /// Trusts the caller's claim about vertex-transitivity. A false claim
    /// makes the search incomplete.
    pub fn declared(h: &Graph, vertex_transitive: bool) -> HomTarget {
        HomTarget {
            h: h.clone(),
            vertex_transitive,
            order: VariableOrder::Static,
        }
    }

    pub fn with_order(mut self, order: VariableOrder) -> HomTarget {
        self.order = order;
        self
    }

    pub fn graph(&self) -> &Graph {
        &self.h
    }

    pub fn is_vertex_transitive(&self) -> bool {
        self.vertex_transitive
    }

    pub fn find(&self, g: &Graph) -> Option<VertexMap> {
        self.find_within(g, &mut Budget::unlimited())
            .expect("unlimited budget")
    }

    /// Like [`HomTarget::find`], ticking `budget` once per search node.
    pub fn find_within(&self, g: &Graph, budget: &mut Budget) -> Result<Option<VertexMap>> {
        let mut s = Search::new(g, self);
        let found = s.run(budget)?;
        Ok(found.map(|image| VertexMap::new(self.h.order(), image).expect("images in range")))
    }
}

pub fn find_homomorphism(g: &Graph, h: &Graph) -> Option<VertexMap> {
    HomTarget::new(h).find(g)
}

struct Search<'a> {
    g: &'a Graph,
    h: &'a Graph,
    target: &'a HomTarget,
    /// Variables in static order.
    order: Vec<usize>,
    rank: Vec<usize>,
    /// Component mask of each variable.
    component: Vec<u64>,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph, target: &'a HomTarget) -> Search<'a> {
        let order = static_order(g);
        let mut rank = vec![0; g.order()];
        for (i, &v) in order.iter().enumerate() {
            rank[v] = i;
        }
        Search {
            g,
            h: &target.h,
            target,
            order,
            rank,
            component: (0..g.order()).map(|v| g.component_of(v)).collect(),
        }
    }

    fn support(&self, domain: u64) -> u64 {
        Bits(domain).fold(0, |acc, a| acc | self.h.rows()[a])
    }

    /// Arc consistency from the variables in `queue`; false on a wipe-out.
    fn propagate(&self, domains: &mut [u64], mut queue: u64) -> bool {
        while queue != 0 {
            let x = queue.trailing_zeros() as usize;
            queue &= queue - 1;
            let supp = self.support(domains[x]);
            for y in Bits(self.g.neighbours(x)) {
                let d = domains[y] & supp;
                if d != domains[y] {
                    if d == 0 {
                        return false;
                    }
                    domains[y] = d;
                    queue |= 1 << y;
                }
            }
        }
        true
    }

    fn run(&mut self, budget: &mut Budget) -> Result<Option<Vec<usize>>> {
        let n = self.g.order();
        let m = self.h.order();
        let full = if m == 64 { u64::MAX } else { (1u64 << m) - 1 };
        let mut domains = vec![full; n];
        // Vertices with an edge need a target vertex with an edge.
        let non_isolated = (0..m).fold(0u64, |acc, a| {
            if self.h.rows()[a] != 0 {
                acc | 1 << a
            } else {
                acc
            }
        });
        for v in 0..n {
            if self.g.degree(v) > 0 {
                domains[v] &= non_isolated;
                if domains[v] == 0 {
                    return Ok(None);
                }
            }
        }
        if !self.propagate(&mut domains, self.g.vertex_mask()) {
            return Ok(None);
        }
        let mut assigned = 0u64;
        if self.descend(&mut domains, &mut assigned, budget)? {
            Ok(Some(domains.iter().map(|d| d.trailing_zeros() as usize).collect()))
        } else {
            Ok(None)
        }
    }

    fn pick(&self, domains: &[u64], assigned: u64) -> Option<usize> {
        match self.target.order {
            VariableOrder::Static => self.order.iter().copied().find(|&v| assigned & (1 << v) == 0),
            VariableOrder::SmallestDomain => self
                .order
                .iter()
                .copied()
                .filter(|&v| assigned & (1 << v) == 0)
                .min_by_key(|&v| (domains[v].count_ones(), self.rank[v])),
        }
    }

    fn descend(&self, domains: &mut Vec<u64>, assigned: &mut u64, budget: &mut Budget) -> Result<bool> {
        budget.tick()?;
        let Some(x) = self.pick(domains, *assigned) else {
            return Ok(true);
        };
        *assigned |= 1 << x;
        let mut values = domains[x];
        // The first variable assigned in a component still has an
        // automorphism-invariant domain, so one value stands for all.
        if self.target.vertex_transitive && *assigned & self.component[x] == 1 << x {
            values &= values.wrapping_neg();
        }
        let saved = domains.clone();
        for a in Bits(values) {
            domains[x] = 1 << a;
            if self.propagate(domains, 1 << x) && self.descend(domains, assigned, budget)? {
                return Ok(true);
            }
            domains.copy_from_slice(&saved);
        }
        *assigned &= !(1 << x);
        Ok(false)
    }
}

/// Descending degree; ties by BFS order from a maximum-degree vertex, with
/// later components ordered from their own maximum-degree vertex.
fn static_order(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut bfs_rank = vec![usize::MAX; n];
    let mut next = 0;
    let mut by_degree: Vec<usize> = (0..n).collect();
    by_degree.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    for &root in &by_degree {
        if bfs_rank[root] != usize::MAX {
            continue;
        }
        bfs_rank[root] = next;
        next += 1;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for w in Bits(g.neighbours(u)) {
                if bfs_rank[w] == usize::MAX {
                    bfs_rank[w] = next;
                    next += 1;
                    queue.push_back(w);
                }
            }
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), bfs_rank[v]));
    order
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{
        circular_clique, complete, cycle, generalized_mycielski, odd_k4, CircularCliqueSpec,
        OddK4Spec,
    };
    use crate::hom::verify_mapping;

    fn check(g: &Graph, h: &Graph) -> bool {
        let found = find_homomorphism(g, h);
        if let Some(m) = &found {
            assert!(verify_mapping(g, h, m).unwrap());
        }
        found.is_some()
    }

    #[test]
    fn examples() {
        let c125 = circular_clique(CircularCliqueSpec::new(12, 5).unwrap()).unwrap();
        assert!(check(&c125, &cycle(5).unwrap()));
        let k = odd_k4(OddK4Spec::new(2, 2, 3)).unwrap();
        assert!(!check(&k, &cycle(7).unwrap()));
        assert!(check(&k, &cycle(5).unwrap()));
        assert!(!check(&generalized_mycielski(2).unwrap(), &complete(3).unwrap()));
    }

    #[test]
    fn edge_cases() {
        let single = Graph::empty(1).unwrap();
        let k2 = complete(2).unwrap();
        assert!(check(&single, &single));
        assert!(!check(&k2, &single));
        assert!(!check(&k2, &Graph::empty(3).unwrap()));
        // Isolated vertices may go anywhere, even to an isolated target vertex.
        let h = complete(2).unwrap().disjoint_union(&single).unwrap();
        let g = Graph::empty(2).unwrap().disjoint_union(&cycle(4).unwrap()).unwrap();
        assert!(check(&g, &h));
    }

    #[test]
    fn disconnected_source_with_pinning() {
        let g = cycle(7).unwrap().disjoint_union(&cycle(5).unwrap()).unwrap();
        assert!(check(&g, &cycle(5).unwrap()));
        assert!(!check(&g, &cycle(7).unwrap()));
    }

    #[test]
    fn both_orders_agree() {
        let targets = [cycle(5).unwrap(), cycle(7).unwrap(), complete(3).unwrap()];
        let sources = [
            generalized_mycielski(2).unwrap(),
            generalized_mycielski(3).unwrap(),
            odd_k4(OddK4Spec::new(1, 2, 2)).unwrap(),
            odd_k4(OddK4Spec::new(3, 3, 3)).unwrap(),
        ];
        for h in &targets {
            let fixed = HomTarget::new(h);
            let dynamic = HomTarget::new(h).with_order(VariableOrder::SmallestDomain);
            for g in &sources {
                assert_eq!(fixed.find(g).is_some(), dynamic.find(g).is_some());
            }
        }
    }

    #[test]
    fn detects_transitive_targets() {
        assert!(HomTarget::new(&cycle(9).unwrap()).is_vertex_transitive());
        assert!(HomTarget::new(&complete(5).unwrap()).is_vertex_transitive());
        let path = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(!HomTarget::new(&path).is_vertex_transitive());
    }

    #[test]
    fn budget_is_respected() {
        let g = generalized_mycielski(3).unwrap();
        let t = HomTarget::new(&complete(3).unwrap());
        let mut b = Budget::with_ticks(5);
        assert!(t.find_within(&g, &mut b).is_err());
    }

    #[test]
    fn static_order_puts_hubs_first() {
        let g = odd_k4(OddK4Spec::new(2, 3, 4)).unwrap();
        let order = static_order(&g);
        let mut head = order[..4].to_vec();
        head.sort_unstable();
        assert_eq!(head, vec![0, 1, 2, 3]);
    }
}
