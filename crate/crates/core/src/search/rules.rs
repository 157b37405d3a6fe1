use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{bit, has_walk_of_length, max_thread_length, second_neighbourhood, Bits, Graph};
use crate::hom::is_core;

/// Structural properties of a smallest graph of odd-girth at least 7 with
/// no homomorphism to `C_5`. Apart from `Connected`, they are only valid
/// under that minimality assumption.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum PruneRule {
    Connected,
    MinDegree2,
    /// Maximum degree 3, and every degree-3 vertex has at most four
    /// vertices at distance 2.
    MaxDegree3Secondnbhd,
    /// No thread of length 4 or more.
    NoThreadGe4,
    No4Cycle,
    No6Cycle,
    CoreOnly,
    /// Every two distinct vertices are joined by a walk of length 5.
    FiveWalk,
    /// No vertex has its neighbourhood inside another vertex's.
    NoNestedNeighbourhoods,
}

impl PruneRule {
    pub const ALL: [PruneRule; 9] = [
        PruneRule::Connected,
        PruneRule::MinDegree2,
        PruneRule::MaxDegree3Secondnbhd,
        PruneRule::NoThreadGe4,
        PruneRule::No4Cycle,
        PruneRule::No6Cycle,
        PruneRule::CoreOnly,
        PruneRule::FiveWalk,
        PruneRule::NoNestedNeighbourhoods,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PruneRule::Connected => "CONNECTED",
            PruneRule::MinDegree2 => "MIN_DEGREE_2",
            PruneRule::MaxDegree3Secondnbhd => "MAX_DEGREE_3_SECONDNBHD",
            PruneRule::NoThreadGe4 => "NO_THREAD_GE_4",
            PruneRule::No4Cycle => "NO_4_CYCLE",
            PruneRule::No6Cycle => "NO_6_CYCLE",
            PruneRule::CoreOnly => "CORE_ONLY",
            PruneRule::FiveWalk => "FIVE_WALK",
            PruneRule::NoNestedNeighbourhoods => "NO_NESTED_NEIGHBOURHOODS",
        }
    }

    /// Whether every connected induced subgraph of a graph satisfying the
    /// rule satisfies it too, so that it can prune during growth.
    pub fn is_hereditary(self) -> bool {
        matches!(
            self,
            PruneRule::Connected
                | PruneRule::MaxDegree3Secondnbhd
                | PruneRule::No4Cycle
                | PruneRule::No6Cycle
        )
    }

    /// Rules that hold for a smallest counterexample of any order. The
    /// others also use that it has at most 14 vertices.
    pub fn is_order_independent(self) -> bool {
        !matches!(
            self,
            PruneRule::MaxDegree3Secondnbhd | PruneRule::No4Cycle | PruneRule::No6Cycle
        )
    }
}

impl fmt::Display for PruneRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl From<PruneRule> for String {
    fn from(r: PruneRule) -> String {
        r.name().to_string()
    }
}

impl TryFrom<String> for PruneRule {
    type Error = Error;

    fn try_from(s: String) -> Result<PruneRule> {
        s.parse()
    }
}

impl FromStr for PruneRule {
    type Err = Error;

    fn from_str(s: &str) -> Result<PruneRule> {
        let wanted = s.trim().to_ascii_uppercase().replace('-', "_");
        PruneRule::ALL
            .into_iter()
            .find(|r| r.name() == wanted)
            .ok_or_else(|| Error::UnknownRule(s.to_string()))
    }
}

/// Whether `g` satisfies `rule`.
pub fn claim_filter(g: &Graph, rule: PruneRule) -> bool {
    match rule {
        PruneRule::Connected => g.is_connected(),
        PruneRule::MinDegree2 => g.min_degree() >= 2,
        PruneRule::MaxDegree3Secondnbhd => degree_rule_holds(g),
        PruneRule::NoThreadGe4 => max_thread_length(g) < 4,
        PruneRule::No4Cycle => !has_4_cycle(g),
        PruneRule::No6Cycle => !has_6_cycle(g),
        PruneRule::CoreOnly => is_core(g),
        PruneRule::FiveWalk => five_walks(g),
        PruneRule::NoNestedNeighbourhoods => !nested_neighbourhoods(g),
    }
}

/// Parses a rule name; the error names the unknown rule.
pub fn claim_filter_by_name(g: &Graph, rule: &str) -> Result<bool> {
    Ok(claim_filter(g, rule.parse()?))
}

pub(crate) fn degree_rule_holds(g: &Graph) -> bool {
    (0..g.order()).all(|v| match g.degree(v) {
        0..=2 => true,
        3 => second_neighbourhood(g, v).count_ones() <= 4,
        _ => false,
    })
}

pub(crate) fn has_4_cycle(g: &Graph) -> bool {
    let n = g.order();
    (0..n).any(|u| (u + 1..n).any(|v| (g.neighbours(u) & g.neighbours(v)).count_ones() >= 2))
}

/// Whether some simple path with exactly `len` edges joins `a` and `b`,
/// avoiding the vertices in `avoid`.
pub(crate) fn has_path_of_length(g: &Graph, a: usize, b: usize, len: usize, avoid: u64) -> bool {
    fn go(g: &Graph, cur: usize, b: usize, left: usize, used: u64) -> bool {
        if left == 1 {
            return g.has_edge(cur, b);
        }
        Bits(g.neighbours(cur) & !used & !bit(b)).any(|w| go(g, w, b, left - 1, used | bit(w)))
    }
    a != b && go(g, a, b, len, avoid | bit(a))
}

pub(crate) fn has_6_cycle(g: &Graph) -> bool {
    // A 6-cycle through its smallest vertex s: s - a ... b - s with a
    // 4-edge path from a to b above s.
    (0..g.order()).any(|s| {
        let below = (bit(s) << 1) - 1;
        let nbrs: Vec<usize> = Bits(g.neighbours(s) & !below).collect();
        nbrs.iter().enumerate().any(|(i, &a)| {
            nbrs[i + 1..]
                .iter()
                .any(|&b| has_path_of_length(g, a, b, 4, below))
        })
    })
}

fn five_walks(g: &Graph) -> bool {
    let n = g.order();
    (0..n).all(|u| {
        let mut layer = bit(u);
        for _ in 0..5 {
            layer = Bits(layer).fold(0, |acc, w| acc | g.neighbours(w));
        }
        layer | bit(u) == g.vertex_mask()
    })
}

fn nested_neighbourhoods(g: &Graph) -> bool {
    let n = g.order();
    (0..n).any(|u| {
        (0..n).any(|v| u != v && g.neighbours(u) & !g.neighbours(v) == 0)
    })
}

/// Whether the threads of `g` could still all be cut below length 4 by
/// attaching `remaining` more vertices of degree at most `cap`. A run of
/// `m` consecutive degree-2 vertices inside a thread needs `floor(m/3)`
/// of them to receive new neighbours, and a cycle component of length `m`
/// needs `ceil(m/3)`.
pub(crate) fn threads_can_be_cut(g: &Graph, remaining: usize, cap: usize) -> bool {
    let needed: usize = crate::graph::list_threads(g)
        .iter()
        .map(|t| {
            let m = t.length() - 1;
            let is_cycle_component = t.closed && g.degree(t.vertices[0]) == 2;
            if is_cycle_component {
                t.length().div_ceil(3)
            } else {
                m / 3
            }
        })
        .sum();
    needed <= remaining * cap
}

#[allow(dead_code)]
fn walks_agree(g: &Graph) -> bool {
    (0..g.order()).all(|u| {
        (0..g.order()).all(|v| has_walk_of_length(g, u, v, 5).unwrap_or(false) || u == v)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{cycle, fixture, odd_k4, OddK4Spec};

    #[test]
    fn rule_names_round_trip() {
        for r in PruneRule::ALL {
            assert_eq!(r.name().parse::<PruneRule>().unwrap(), r);
            assert_eq!(serde_json::to_string(&r).unwrap(), format!("\"{}\"", r.name()));
        }
        assert_eq!("no-4-cycle".parse::<PruneRule>().unwrap(), PruneRule::No4Cycle);
        assert_eq!("BOGUS".parse::<PruneRule>(), Err(Error::UnknownRule("BOGUS".into())));
    }

    #[test]
    fn examples() {
        let fig2a = fixture("fig2a").unwrap();
        assert!(claim_filter(&fig2a, PruneRule::NoThreadGe4));
        let k = odd_k4(OddK4Spec::new(1, 1, 5)).unwrap();
        assert!(!claim_filter(&k, PruneRule::No4Cycle));
        assert!(claim_filter(&cycle(7).unwrap(), PruneRule::FiveWalk));
        assert!(!claim_filter(&cycle(9).unwrap(), PruneRule::FiveWalk));
        assert!(claim_filter(&cycle(7).unwrap(), PruneRule::No6Cycle));
        assert!(!claim_filter(&cycle(6).unwrap(), PruneRule::No6Cycle));
        assert!(!claim_filter(&cycle(8).unwrap(), PruneRule::NoThreadGe4));
        assert!(claim_filter_by_name(&cycle(5).unwrap(), "nope").is_err());
    }

    #[test]
    fn figure_two_satisfies_the_order_free_claims() {
        for name in ["fig2a", "fig2b", "fig2c"] {
            let g = fixture(name).unwrap();
            for r in PruneRule::ALL.into_iter().filter(|r| r.is_order_independent()) {
                assert!(claim_filter(&g, r), "{name} {r}");
            }
        }
        // fig2a has a 4-cycle u0 u1 v1 v0, so the rules for at most 14
        // vertices reject it.
        assert!(!claim_filter(&fixture("fig2a").unwrap(), PruneRule::No4Cycle));
    }

    #[test]
    fn six_cycles_match_brute_force() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..300 {
            let n = rng.gen_range(6..=9);
            let mut g = Graph::empty(n).unwrap();
            for j in 1..n {
                for i in 0..j {
                    if rng.gen_bool(0.3) {
                        g.add_edge(i, j).unwrap();
                    }
                }
            }
            // Brute force over ordered 6-tuples.
            let mut brute = false;
            let mut stack = vec![vec![0usize]];
            'outer: for s in 0..n {
                stack.clear();
                stack.push(vec![s]);
                while let Some(p) = stack.pop() {
                    let last = *p.last().unwrap();
                    if p.len() == 6 {
                        if g.has_edge(last, s) {
                            brute = true;
                            break 'outer;
                        }
                        continue;
                    }
                    for w in Bits(g.neighbours(last)) {
                        if !p.contains(&w) {
                            let mut q = p.clone();
                            q.push(w);
                            stack.push(q);
                        }
                    }
                }
            }
            assert_eq!(has_6_cycle(&g), brute, "{g:?}");
            assert!(walks_agree(&g) == five_walks(&g));
        }
    }

    #[test]
    fn thread_cut_bound() {
        // C7 needs three cuts.
        let c7 = cycle(7).unwrap();
        assert!(threads_can_be_cut(&c7, 1, 3));
        assert!(!threads_can_be_cut(&c7, 1, 2));
        // A (1,1,5)-odd-K4 has two threads of length 5: four interior
        // vertices each, one cut apiece.
        let k = odd_k4(OddK4Spec::new(1, 1, 5)).unwrap();
        assert!(threads_can_be_cut(&k, 1, 2));
        assert!(!threads_can_be_cut(&k, 0, 3));
        assert!(threads_can_be_cut(&odd_k4(OddK4Spec::new(2, 2, 3)).unwrap(), 0, 3));
    }
}
