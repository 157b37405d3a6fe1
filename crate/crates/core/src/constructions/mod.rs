//! Builders for the graph families used throughout the crate.

mod fixtures;

pub use fixtures::{
    fixture, fixture_corpus, fixture_expectation, fixture_labelling, FixtureExpectation,
    FIXTURE_NAMES,
};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};

fn invalid(msg: String) -> Error {
    Error::InvalidParameters(msg)
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(invalid(format!("cycle needs at least 3 vertices, got {n}")));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edges(n, &edges)
}

pub fn complete(n: usize) -> Result<Graph> {
    let mut g = Graph::empty(n)?;
    for j in 1..n {
        for i in 0..j {
            g.add_edge(i, j)?;
        }
    }
    Ok(g)
}

/// Parameters of the circular clique `C(p, q)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CircularCliqueSpec {
    pub p: usize,
    pub q: usize,
}

impl CircularCliqueSpec {
    pub fn new(p: usize, q: usize) -> Result<CircularCliqueSpec> {
        let spec = CircularCliqueSpec { p, q };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        let CircularCliqueSpec { p, q } = *self;
        if q == 0 || p < 2 * q || gcd(p, q) != 1 {
            return Err(invalid(format!(
                "circular clique needs q >= 1, p >= 2q and gcd(p, q) = 1, got ({p}, {q})"
            )));
        }
        if p > MAX_ORDER {
            return Err(Error::OrderOutOfRange(p));
        }
        Ok(())
    }
}

/// Vertices `0..p`, with `i ~ j` iff `q <= |i - j| <= p - q`.
pub fn circular_clique(spec: CircularCliqueSpec) -> Result<Graph> {
    spec.validate()?;
    let CircularCliqueSpec { p, q } = spec;
    let mut g = Graph::empty(p)?;
    for j in 1..p {
        for i in 0..j {
            if q <= j - i && j - i <= p - q {
                g.add_edge(i, j)?;
            }
        }
    }
    Ok(g)
}

/// Thread lengths of an odd-K4 whose opposite threads are equal: the
/// triangle `t u v` has threads `tu = a`, `uv = b`, `tv = c`, and the
/// remaining threads are `vw = a`, `tw = b`, `uw = c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OddK4Spec {
    pub a: usize,
    pub b: usize,
    pub c: usize,
}

impl OddK4Spec {
    pub fn new(a: usize, b: usize, c: usize) -> OddK4Spec {
        OddK4Spec { a, b, c }
    }

    pub fn order(&self) -> usize {
        2 * (self.a + self.b + self.c) - 2
    }
}

/// Subdivided K4 on branch vertices `0..4` (`t u v w`); the internal
/// vertices of each thread follow in the order `tu uv tv vw tw uw`, each
/// listed from the first endpoint to the second. Every face has length
/// `a + b + c`.
pub fn odd_k4(spec: OddK4Spec) -> Result<Graph> {
    let OddK4Spec { a, b, c } = spec;
    if a == 0 || b == 0 || c == 0 {
        return Err(invalid(format!("odd-K4 threads must be positive, got ({a}, {b}, {c})")));
    }
    if (a + b + c) % 2 == 0 {
        return Err(invalid(format!("odd-K4 needs a + b + c odd, got ({a}, {b}, {c})")));
    }
    let n = spec.order();
    if n > MAX_ORDER {
        return Err(Error::OrderOutOfRange(n));
    }
    let mut g = Graph::empty(n)?;
    let mut next = 4;
    for (from, to, len) in [(0, 1, a), (1, 2, b), (0, 2, c), (2, 3, a), (0, 3, b), (1, 3, c)] {
        let mut prev = from;
        for _ in 1..len {
            g.add_edge(prev, next)?;
            prev = next;
            next += 1;
        }
        g.add_edge(prev, to)?;
    }
    Ok(g)
}

/// Three odd cycles joined pairwise by paths. `path_lengths[i]` runs from
/// vertex `len / 2` of cycle `i` to vertex 0 of cycle `i + 1 (mod 3)`, so
/// each cycle uses two distinct attachment vertices. A path of length 0
/// makes its two ends coincide.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OddK32Spec {
    pub cycle_lengths: [usize; 3],
    pub path_lengths: [usize; 3],
}

impl OddK32Spec {
    pub fn new(cycle_lengths: [usize; 3], path_lengths: [usize; 3]) -> OddK32Spec {
        OddK32Spec {
            cycle_lengths,
            path_lengths,
        }
    }

    pub fn order(&self) -> usize {
        let cycles: usize = self.cycle_lengths.iter().sum();
        let internal: usize = self.path_lengths.iter().map(|&t| t.saturating_sub(1)).sum();
        let shared = self.path_lengths.iter().filter(|&&t| t == 0).count();
        cycles + internal - shared
    }
}

pub fn odd_k32(spec: OddK32Spec) -> Result<Graph> {
    let OddK32Spec {
        cycle_lengths,
        path_lengths,
    } = spec;
    if let Some(&l) = cycle_lengths.iter().find(|&&l| l < 3 || l % 2 == 0) {
        return Err(invalid(format!("odd-K3^2 cycles must be odd and at least 3, got {l}")));
    }
    let n = spec.order();
    if n > MAX_ORDER {
        return Err(Error::OrderOutOfRange(n));
    }
    let mut start = [0usize; 3];
    for i in 1..3 {
        start[i] = start[i - 1] + cycle_lengths[i - 1];
    }
    let cycle_vertices = start[2] + cycle_lengths[2];
    // Each cycle vertex is renamed to the smallest vertex it is glued to;
    // the ends of an empty path are never glued to anything else.
    let mut name: Vec<usize> = (0..cycle_vertices).collect();
    let ends: Vec<(usize, usize)> = (0..3)
        .map(|i| (start[i] + cycle_lengths[i] / 2, start[(i + 1) % 3]))
        .collect();
    for (i, &(from, to)) in ends.iter().enumerate() {
        if path_lengths[i] == 0 {
            name[from.max(to)] = from.min(to);
        }
    }
    let mut compact = vec![0usize; cycle_vertices];
    let mut next = 0;
    for v in 0..cycle_vertices {
        if name[v] == v {
            compact[v] = next;
            next += 1;
        }
    }
    let id = |v: usize| compact[name[v]];
    let mut g = Graph::empty(n)?;
    for i in 0..3 {
        let l = cycle_lengths[i];
        for j in 0..l {
            g.add_edge(id(start[i] + j), id(start[i] + (j + 1) % l))?;
        }
    }
    for (i, &(from, to)) in ends.iter().enumerate() {
        if path_lengths[i] == 0 {
            continue;
        }
        let mut prev = id(from);
        for _ in 1..path_lengths[i] {
            g.add_edge(prev, next)?;
            prev = next;
            next += 1;
        }
        g.add_edge(prev, id(to))?;
    }
    Ok(g)
}

/// The `k`-level generalised Mycielski graph of `C_{2k+1}`. Vertex
/// `i * (2k + 1) + j` is `u^{i+1}_j`; the apex comes last.
pub fn generalized_mycielski(k: usize) -> Result<Graph> {
    if k == 0 {
        return Err(invalid("Mycielski level count must be at least 1".into()));
    }
    let m = 2 * k + 1;
    let n = k * m + 1;
    if n > MAX_ORDER {
        return Err(Error::OrderOutOfRange(n));
    }
    let mut g = Graph::empty(n)?;
    for j in 0..m {
        g.add_edge(j, (j + 1) % m)?;
    }
    for i in 1..k {
        for j in 0..m {
            g.add_edge(i * m + j, (i - 1) * m + (j + 1) % m)?;
            g.add_edge(i * m + j, (i - 1) * m + (j + m - 1) % m)?;
        }
    }
    for j in 0..m {
        g.add_edge(n - 1, (k - 1) * m + j)?;
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{are_isomorphic, odd_girth, CycleLength};

    #[test]
    fn circular_cliques() {
        let c52 = circular_clique(CircularCliqueSpec::new(5, 2).unwrap()).unwrap();
        assert!(are_isomorphic(&c52, &cycle(5).unwrap()));
        let c41 = circular_clique(CircularCliqueSpec::new(4, 1).unwrap()).unwrap();
        assert!(are_isomorphic(&c41, &complete(4).unwrap()));
        let c125 = circular_clique(CircularCliqueSpec::new(12, 5).unwrap()).unwrap();
        assert_eq!(c125.order(), 12);
        assert!(c125.degrees().iter().all(|&d| d == 3));
        assert!(CircularCliqueSpec::new(6, 2).is_err());
        assert!(CircularCliqueSpec::new(5, 3).is_err());
        assert!(CircularCliqueSpec::new(3, 0).is_err());
    }

    #[test]
    fn circular_cliques_are_rotation_invariant() {
        for (p, q) in [(5, 2), (7, 3), (12, 5), (11, 4), (9, 2)] {
            let g = circular_clique(CircularCliqueSpec::new(p, q).unwrap()).unwrap();
            let rotation: Vec<usize> = (0..p).map(|i| (i + 1) % p).collect();
            assert_eq!(g.permuted(&rotation).unwrap(), g);
        }
    }

    #[test]
    fn odd_k4_shapes() {
        let k = odd_k4(OddK4Spec::new(1, 2, 2)).unwrap();
        assert_eq!((k.order(), odd_girth(&k)), (8, CycleLength::Finite(5)));
        assert_eq!(odd_k4(OddK4Spec::new(3, 3, 3)).unwrap().order(), 16);
        assert_eq!(odd_k4(OddK4Spec::new(1, 1, 1)).unwrap(), complete(4).unwrap());
        assert!(odd_k4(OddK4Spec::new(1, 1, 2)).is_err());
        assert!(odd_k4(OddK4Spec::new(0, 1, 2)).is_err());
        for (a, b, c) in [(1, 1, 3), (2, 2, 3), (2, 3, 4), (1, 5, 5), (4, 4, 5)] {
            let g = odd_k4(OddK4Spec::new(a, b, c)).unwrap();
            assert_eq!(g.order(), 2 * (a + b + c) - 2);
            assert_eq!(g.edge_count(), 2 * (a + b + c));
            assert_eq!(odd_girth(&g), CycleLength::Finite(a + b + c));
            assert_eq!(g.degrees().iter().filter(|&&d| d == 3).count(), 4);
        }
    }

    #[test]
    fn odd_k32_shapes() {
        let g = odd_k32(OddK32Spec::new([3, 3, 3], [1, 1, 1])).unwrap();
        assert_eq!((g.order(), g.edge_count()), (9, 12));
        let g = odd_k32(OddK32Spec::new([7, 7, 7], [0, 0, 0])).unwrap();
        assert_eq!(g.order(), 18);
        assert_eq!(g.edge_count(), 21);
        assert_eq!(g.degrees().iter().filter(|&&d| d == 4).count(), 3);
        let g = odd_k32(OddK32Spec::new([7, 7, 7], [2, 2, 2])).unwrap();
        assert_eq!(g.order(), 24);
        assert_eq!(odd_girth(&g), CycleLength::Finite(7));
        assert!(g.is_connected());
        let g = odd_k32(OddK32Spec::new([3, 5, 7], [0, 3, 1])).unwrap();
        assert_eq!(g.order(), OddK32Spec::new([3, 5, 7], [0, 3, 1]).order());
        assert_eq!(g.edge_count(), 15 + 4);
        assert!(odd_k32(OddK32Spec::new([3, 4, 3], [1, 1, 1])).is_err());
        assert!(odd_k32(OddK32Spec::new([1, 3, 3], [1, 1, 1])).is_err());
    }

    #[test]
    fn mycielski_shapes() {
        assert!(are_isomorphic(&generalized_mycielski(1).unwrap(), &complete(4).unwrap()));
        for k in 1..=5 {
            let g = generalized_mycielski(k).unwrap();
            assert_eq!(g.order(), 2 * k * k + k + 1);
            assert_eq!(odd_girth(&g), CycleLength::Finite(2 * k + 1));
        }
        let grotzsch = generalized_mycielski(2).unwrap();
        assert_eq!(grotzsch.edge_count(), 20);
        assert!(generalized_mycielski(0).is_err());
    }
}
