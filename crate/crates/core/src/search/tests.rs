use std::collections::BTreeSet;

use super::*;
use crate::constructions::{fixture, generalized_mycielski};

/// Canonical code by brute force: the lexicographically smallest edge list
/// over all relabellings that sort vertices by degree.
fn brute_code(g: &Graph) -> Vec<(usize, usize)> {
    let n = g.order();
    let mut by_degree: Vec<usize> = (0..n).collect();
    by_degree.sort_by_key(|&v| g.degree(v));
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for &v in &by_degree {
        match classes.last_mut() {
            Some(c) if g.degree(c[0]) == g.degree(v) => c.push(v),
            _ => classes.push(vec![v]),
        }
    }
    let mut best: Option<Vec<(usize, usize)>> = None;
    let mut order = Vec::with_capacity(n);
    fn rec(
        g: &Graph,
        classes: &mut [Vec<usize>],
        ci: usize,
        order: &mut Vec<usize>,
        best: &mut Option<Vec<(usize, usize)>>,
    ) {
        if ci == classes.len() {
            let mut pos = vec![0; order.len()];
            for (i, &v) in order.iter().enumerate() {
                pos[v] = i;
            }
            let mut e: Vec<(usize, usize)> = g
                .edges()
                .map(|(a, b)| (pos[a].min(pos[b]), pos[a].max(pos[b])))
                .collect();
            e.sort_unstable();
            if best.as_ref().is_none_or(|b| e < *b) {
                *best = Some(e);
            }
            return;
        }
        let k = classes[ci].len();
        permute(g, classes, ci, 0, k, order, best);
    }
    fn permute(
        g: &Graph,
        classes: &mut [Vec<usize>],
        ci: usize,
        i: usize,
        k: usize,
        order: &mut Vec<usize>,
        best: &mut Option<Vec<(usize, usize)>>,
    ) {
        if i == k {
            let base = order.len();
            order.extend(classes[ci].iter().copied());
            rec(g, classes, ci + 1, order, best);
            order.truncate(base);
            return;
        }
        for j in i..k {
            classes[ci].swap(i, j);
            permute(g, classes, ci, i + 1, k, order, best);
            classes[ci].swap(i, j);
        }
    }
    rec(g, &mut classes, 0, &mut order, &mut best);
    best.unwrap()
}

/// Connected graphs accepted by `keep`, level by level: every connected
/// graph has a vertex whose removal leaves it connected, so adding a
/// vertex in every possible way to the previous level reaches them all.
fn brute_levels(n_max: usize, keep: impl Fn(&Graph) -> bool) -> Vec<BTreeSet<Vec<(usize, usize)>>> {
    let mut levels = vec![BTreeSet::new(); n_max + 1];
    let mut current = vec![Graph::empty(1).unwrap()];
    levels[1].insert(brute_code(&current[0]));
    for n in 2..=n_max {
        let mut next = Vec::new();
        for g in &current {
            for s in 1..(1u64 << (n - 1)) {
                let h = g.with_vertex(s).unwrap();
                if keep(&h) && levels[n].insert(brute_code(&h)) {
                    next.push(h);
                }
            }
        }
        current = next;
    }
    levels
}

fn engine_levels(cfg: &SearchConfig) -> Vec<BTreeSet<Vec<(usize, usize)>>> {
    let mut levels = vec![BTreeSet::new(); cfg.n_max + 1];
    let mut visits = 0;
    enumerate(cfg, |g| {
        visits += 1;
        levels[g.order()].insert(brute_code(g));
        true
    })
    .unwrap();
    assert_eq!(visits, levels.iter().map(|l| l.len()).sum::<usize>(), "duplicates");
    levels
}

fn odd_girth_at_least(g: &Graph, og: usize) -> bool {
    odd_girth(g).finite().is_none_or(|o| o >= og)
}

#[test]
fn connected_graph_counts() {
    let cfg = SearchConfig::new(1, 1, 7).with_class(SearchClass::OddGirthAtLeast);
    assert_eq!(count_by_order(&cfg).unwrap(), vec![0, 1, 1, 2, 6, 21, 112, 853]);
    let brute = brute_levels(7, |_| true);
    assert_eq!(engine_levels(&cfg), brute);
}

#[test]
fn triangle_free_and_odd_girth_classes() {
    for k in [2usize, 3] {
        let og = 2 * k + 1;
        let cfg = SearchConfig::new(k, 1, 8).with_class(SearchClass::OddGirthAtLeast);
        let brute = brute_levels(8, |g| odd_girth_at_least(g, og));
        assert_eq!(engine_levels(&cfg), brute, "k = {k}");
        let exact = SearchConfig::new(k, 1, 9);
        let levels = engine_levels(&exact);
        let brute = brute_levels(9, |g| odd_girth_at_least(g, og));
        for n in 1..=9 {
            let want: BTreeSet<_> = brute[n]
                .iter()
                .filter(|code| {
                    let g = Graph::from_edges(n, code).unwrap();
                    odd_girth(&g) == CycleLength::Finite(og)
                })
                .cloned()
                .collect();
            assert_eq!(levels[n], want, "k = {k}, n = {n}");
        }
    }
    let counts = count_by_order(
        &SearchConfig::new(2, 1, 8).with_class(SearchClass::OddGirthAtLeast),
    )
    .unwrap();
    assert_eq!(counts, vec![0, 1, 1, 1, 3, 6, 19, 59, 267]);
}

#[test]
fn hereditary_rules_match_filtering() {
    let rules = [
        PruneRule::MaxDegree3Secondnbhd,
        PruneRule::No4Cycle,
        PruneRule::No6Cycle,
    ];
    let cfg = SearchConfig::new(2, 1, 10).with_rules(rules).assuming_minimal();
    let levels = engine_levels(&cfg);
    let all = engine_levels(&SearchConfig::new(2, 1, 10));
    for n in 1..=10 {
        let want: BTreeSet<_> = all[n]
            .iter()
            .filter(|code| {
                let g = Graph::from_edges(n, code).unwrap();
                rules.iter().all(|&r| claim_filter(&g, r))
            })
            .cloned()
            .collect();
        assert_eq!(levels[n], want, "n = {n}");
    }
}

#[test]
fn relaxed_final_rules_match_filtering() {
    let rules = [PruneRule::NoThreadGe4, PruneRule::MinDegree2];
    let cfg = SearchConfig::new(2, 1, 10)
        .with_rules(rules)
        .with_rules([PruneRule::MaxDegree3Secondnbhd])
        .assuming_minimal();
    let levels = engine_levels(&cfg);
    let all = engine_levels(
        &SearchConfig::new(2, 1, 10)
            .with_rules([PruneRule::MaxDegree3Secondnbhd])
            .assuming_minimal(),
    );
    for n in 1..=10 {
        let want: BTreeSet<_> = all[n]
            .iter()
            .filter(|code| {
                let g = Graph::from_edges(n, code).unwrap();
                rules.iter().all(|&r| claim_filter(&g, r))
            })
            .cloned()
            .collect();
        assert_eq!(levels[n], want, "n = {n}");
    }
}

#[test]
fn config_validation() {
    assert!(SearchConfig::new(0, 1, 8).validate().is_err());
    assert!(SearchConfig::new(2, 1, 2).validate().is_err());
    assert!(SearchConfig::new(2, 1, 65).validate().is_err());
    let claims = SearchConfig::new(3, 2, 14).with_rules([PruneRule::CoreOnly]);
    assert!(matches!(claims.validate(), Err(Error::InvalidParameters(_))));
    assert!(claims.assuming_minimal().validate().is_ok());
    let mut no_conn = SearchConfig::new(3, 2, 10);
    no_conn.prune_rules.clear();
    assert!(no_conn.validate().is_err());
}

#[test]
fn smallest_odd_girth_5_graphs_beyond_c5() {
    // Odd-girth 5 graphs with no homomorphism to C5 start at 8 vertices.
    let r = eta_search(&SearchConfig::new(2, 2, 8), &SearchOptions::default()).unwrap();
    assert!(r.complete);
    assert_eq!(r.smallest_witness_order, Some(8));
    assert!(r.witnesses.iter().all(|w| from_graph6_ok(w).order() == 8));
    let r = eta_search(&SearchConfig::new(2, 2, 7), &SearchOptions::default()).unwrap();
    assert_eq!(r.eta_lower_bound_established, Some(8));
    assert_eq!(r.assumption, None);
}

#[test]
fn witness_order_does_not_increase_with_l() {
    let orders: Vec<_> = [(1, 11), (2, 8), (3, 5)]
        .into_iter()
        .map(|(l, n)| {
            eta_search(&SearchConfig::new(2, l, n), &SearchOptions::default())
                .unwrap()
                .smallest_witness_order
                .unwrap()
        })
        .collect();
    assert_eq!(orders, vec![11, 8, 5]);
}

fn from_graph6_ok(s: &str) -> Graph {
    crate::graph::from_graph6(s).unwrap()
}

#[test]
fn parallel_and_checkpointed_runs_agree() {
    let cfg = SearchConfig::new(2, 2, 9);
    let base = eta_search(&cfg, &SearchOptions::default()).unwrap();
    for (depth, jobs) in [(0, 1), (1, 2), (5, 3)] {
        let opts = SearchOptions {
            jobs,
            ..SearchOptions::default()
        };
        let other = eta_search(&cfg.clone().with_parallel_width(depth), &opts).unwrap();
        assert_eq!(base.orders, other.orders);
        assert_eq!(base.witnesses, other.witnesses);
    }

    let dir = std::env::temp_dir().join(format!("oddcol-ckpt-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("run.ckpt");
    let _ = std::fs::remove_file(&path);
    // A tiny tick budget stops the run part way.
    let opts = SearchOptions {
        budget: Budget::with_ticks(400),
        checkpoint: Some(path.clone()),
        ..SearchOptions::default()
    };
    let first = eta_search(&cfg, &opts).unwrap();
    assert!(!first.complete);
    assert_eq!(first.eta_lower_bound_established, None);
    let opts = SearchOptions {
        budget: Budget::unlimited(),
        ..opts
    };
    let resumed = eta_search(&cfg, &opts).unwrap();
    assert!(resumed.complete);
    assert_eq!(resumed.orders, base.orders);
    assert_eq!(resumed.witnesses, base.witnesses);
    // Another search refuses the file.
    let other = SearchConfig::new(2, 2, 8);
    assert!(matches!(eta_search(&other, &opts), Err(Error::Checkpoint(_))));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn claim_report_is_labelled() {
    let cfg = SearchConfig::new(3, 2, 10)
        .with_rules(claim_rules_up_to_14())
        .assuming_minimal();
    let r = eta_search(&cfg, &SearchOptions::default()).unwrap();
    assert!(r.assumption.unwrap().starts_with("conditional"));
    assert_eq!(r.eta_lower_bound_established, Some(11));
}

#[test]
fn order15_rules_keep_figure_two() {
    let rules = order_independent_rules();
    assert!(!rules.contains(&PruneRule::No4Cycle));
    for name in ["fig2a", "fig2b", "fig2c"] {
        let g = fixture(name).unwrap();
        assert!(rules.iter().all(|&r| claim_filter(&g, r)));
        assert!(verify_witness(&g, 3, 2).unwrap());
    }
    let r = rediscover_order15(
        &SearchOptions {
            budget: Budget::with_ticks(2000),
            ..SearchOptions::default()
        },
    )
    .unwrap();
    assert!(!r.complete);
}

#[test]
fn mycielski_witness_is_verified() {
    let g = generalized_mycielski(2).unwrap();
    assert!(verify_witness(&g, 2, 1).unwrap());
    assert!(!verify_witness(&crate::constructions::cycle(5).unwrap(), 2, 1).unwrap());
}

/// The odd-girth-7 graphs on 15 vertices with no homomorphism to `C_5`,
/// as found by the unfiltered search below.
const ORDER15: &str = include_str!("../../fixtures/order15.g6");

#[test]
fn order15_witnesses_are_distinct_and_include_figure_two() {
    let graphs: Vec<Graph> = ORDER15.lines().map(from_graph6_ok).collect();
    assert_eq!(graphs.len(), 11);
    let forms: BTreeSet<_> = graphs
        .iter()
        .map(|g| crate::graph::canonical_form(g).canonical_bytes)
        .collect();
    assert_eq!(forms.len(), 11);
    for g in &graphs {
        assert_eq!(g.order(), 15);
        assert!(g.is_connected());
        assert!(verify_witness(g, 3, 2).unwrap());
        // Each is a smallest counterexample, so the order-free claims hold.
        for r in order_independent_rules() {
            assert!(claim_filter(g, r), "{} fails {r}", to_graph6(g));
        }
    }
    for name in ["fig2a", "fig2b", "fig2c"] {
        let f = crate::graph::canonical_form(&fixture(name).unwrap()).canonical_bytes;
        assert!(forms.contains(&f), "{name}");
    }
}

/// About eight minutes on one core.
#[test]
#[ignore]
fn order15_full_search() {
    let r = eta_search(&SearchConfig::new(3, 2, 15), &SearchOptions::default()).unwrap();
    assert_eq!(r.smallest_witness_order, Some(15));
    assert_eq!(r.orders.last().unwrap().enumerated, 14_051_826);
    let mut want: Vec<String> = ORDER15.lines().map(str::to_string).collect();
    want.sort();
    assert_eq!(r.witnesses, want);
}
