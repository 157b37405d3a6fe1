use std::fmt;

use serde::Serialize;

use super::solver::{HomTarget, VariableOrder};
use crate::constructions::{circular_clique, complete, CircularCliqueSpec};
use crate::error::{Error, Result};
use crate::graph::{odd_girth, Graph};

/// True iff `g` has no homomorphism to a proper subgraph. A map to a proper
/// subgraph misses some vertex, so it suffices to try each `g - v`.
pub fn is_core(g: &Graph) -> bool {
    if g.order() == 1 {
        return true;
    }
    (0..g.order()).all(|v| {
        let h = g.delete_vertex(v).expect("order at least 2");
        HomTarget::declared(&h, false).find(g).is_none()
    })
}

/// Deletes vertices, highest index first, while `g` still maps to what is
/// left. The result is a core of `g`, unique up to isomorphism.
pub fn compute_core(g: &Graph) -> Graph {
    let mut current = g.clone();
    let mut v = current.order();
    while v > 0 && current.order() > 1 {
        v -= 1;
        let h = current.delete_vertex(v).expect("order at least 2");
        if HomTarget::declared(&h, false).find(&current).is_some() {
            current = h;
        }
    }
    current
}

pub fn chromatic_number(g: &Graph) -> usize {
    if g.edge_count() == 0 {
        return 1;
    }
    if odd_girth(g).is_infinite() {
        return 2;
    }
    let mut k = 3;
    loop {
        let target = HomTarget::declared(&complete(k).expect("k <= order"), true)
            .with_order(VariableOrder::SmallestDomain);
        if target.find(g).is_some() {
            return k;
        }
        k += 1;
    }
}

/// A reduced fraction `p/q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fraction {
    pub p: usize,
    pub q: usize,
}

impl Fraction {
    fn less_eq(self, other: Fraction) -> bool {
        self.p * other.q <= other.p * self.q
    }
}

impl PartialOrd for Fraction {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Fraction {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.p * other.q).cmp(&(other.p * self.q))
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.p, self.q)
    }
}

impl Serialize for Fraction {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn maps_to_circular_clique(g: &Graph, f: Fraction) -> bool {
    let h = circular_clique(CircularCliqueSpec { p: f.p, q: f.q }).expect("valid fraction");
    HomTarget::declared(&h, true).find(g).is_some()
}

/// Reduced fractions `p/q >= 2` with `p <= max_p`, in increasing order.
pub(crate) fn candidate_fractions(max_p: usize) -> Vec<Fraction> {
    let mut out = Vec::new();
    for p in 2..=max_p {
        for q in 1..=p / 2 {
            if gcd(p, q) == 1 {
                out.push(Fraction { p, q });
            }
        }
    }
    out.sort();
    out
}

/// Smallest `p/q` such that `g` maps to `C(p, q)`. The optimum has
/// `p <= order(g)`, and mapping to `C(p, q)` is monotone in `p/q`, so a
/// binary search over the candidate fractions suffices.
pub fn circular_chromatic_number(g: &Graph) -> Result<Fraction> {
    if g.edge_count() == 0 {
        return Err(Error::Edgeless);
    }
    let candidates = candidate_fractions(g.order());
    let (mut lo, mut hi) = (0, candidates.len() - 1);
    // Invariant: candidates[hi] works; everything below lo fails.
    while lo < hi {
        let mid = (lo + hi) / 2;
        if maps_to_circular_clique(g, candidates[mid]) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    Ok(candidates[hi])
}

/// Runs the solver on `C(p, q) -> C(r, s)` and reports whether its answer
/// agrees with the comparison `p/q <= r/s`.
pub fn circular_clique_hom_criterion_check(p: usize, q: usize, r: usize, s: usize) -> Result<bool> {
    let src = circular_clique(CircularCliqueSpec::new(p, q)?)?;
    let dst = circular_clique(CircularCliqueSpec::new(r, s)?)?;
    let expected = Fraction { p, q }.less_eq(Fraction { p: r, q: s });
    let found = HomTarget::declared(&dst, true).find(&src).is_some();
    Ok(found == expected)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{cycle, generalized_mycielski, odd_k4, OddK4Spec};
    use crate::graph::are_isomorphic;

    #[test]
    fn cores() {
        assert!(is_core(&cycle(5).unwrap()));
        assert!(is_core(&generalized_mycielski(2).unwrap()));
        assert!(!is_core(&cycle(6).unwrap()));
        let mut tail = cycle(5).unwrap().with_vertex(1).unwrap();
        tail = tail.with_vertex(1 << 5).unwrap();
        assert!(!is_core(&tail));
        let core = compute_core(&tail);
        assert!(are_isomorphic(&core, &cycle(5).unwrap()));
        assert!(are_isomorphic(&compute_core(&core), &core));
        assert_eq!(compute_core(&cycle(8).unwrap()).order(), 2);
    }

    #[test]
    fn chromatic_numbers() {
        assert_eq!(chromatic_number(&generalized_mycielski(2).unwrap()), 4);
        assert_eq!(chromatic_number(&generalized_mycielski(3).unwrap()), 4);
        assert_eq!(chromatic_number(&cycle(6).unwrap()), 2);
        assert_eq!(chromatic_number(&cycle(7).unwrap()), 3);
        assert_eq!(chromatic_number(&complete(6).unwrap()), 6);
        assert_eq!(chromatic_number(&Graph::empty(3).unwrap()), 1);
    }

    #[test]
    fn circular_values() {
        for l in 1..=6 {
            let f = circular_chromatic_number(&cycle(2 * l + 1).unwrap()).unwrap();
            assert_eq!(f, Fraction { p: 2 * l + 1, q: l });
        }
        for p in 2..=6 {
            let f = circular_chromatic_number(&complete(p).unwrap()).unwrap();
            assert_eq!(f, Fraction { p, q: 1 });
        }
        assert_eq!(circular_chromatic_number(&cycle(8).unwrap()).unwrap(), Fraction { p: 2, q: 1 });
        assert_eq!(circular_chromatic_number(&Graph::empty(4).unwrap()), Err(Error::Edgeless));
        // Pinned regression value; it lies in (5/2, 3].
        let k = odd_k4(OddK4Spec::new(1, 2, 2)).unwrap();
        let f = circular_chromatic_number(&k).unwrap();
        assert!(Fraction { p: 5, q: 2 } < f && f <= Fraction { p: 3, q: 1 });
        assert_eq!(f, Fraction { p: 8, q: 3 });
    }

    #[test]
    fn criterion_examples() {
        assert!(circular_clique_hom_criterion_check(12, 5, 5, 2).unwrap());
        assert!(circular_clique_hom_criterion_check(5, 2, 12, 5).unwrap());
        assert!(circular_clique_hom_criterion_check(7, 3, 7, 3).unwrap());
        assert!(circular_clique_hom_criterion_check(6, 2, 5, 2).is_err());
    }

    #[test]
    fn fraction_order() {
        let fs = candidate_fractions(7);
        assert_eq!(fs.first(), Some(&Fraction { p: 2, q: 1 }));
        assert_eq!(fs.last(), Some(&Fraction { p: 7, q: 1 }));
        assert!(fs.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(Fraction { p: 12, q: 5 }.to_string(), "12/5");
    }
}
