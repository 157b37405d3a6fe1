//! Exhaustive search for small graphs of odd-girth `2k+1` with no
//! homomorphism to `C_{2l+1}`.
//!
//! Graphs are grown one vertex at a time by canonical augmentation, so each
//! isomorphism class of connected graphs in the class is produced exactly
//! once. Prune rules that are closed under taking connected induced
//! subgraphs cut the growth; the rest only filter finished candidates.

mod checkpoint;
mod grow;
mod rules;

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::budget::Budget;
use crate::constructions::cycle;
use crate::error::{Error, Result};
use crate::graph::{odd_girth, to_graph6, Canonizer, CycleLength, Graph};
use crate::hom::{HomTarget, VariableOrder};

pub use rules::{claim_filter, claim_filter_by_name, PruneRule};

use checkpoint::Checkpoint;
use grow::Grower;

/// Which graphs the enumerator walks through.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchClass {
    /// Connected graphs of odd-girth at least `2k+1`, bipartite ones
    /// included, grown from a single vertex.
    OddGirthAtLeast,
    /// Connected graphs of odd-girth exactly `2k+1`, grown from `C_{2k+1}`.
    OddGirthExactly,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchConfig {
    pub k: usize,
    pub l: usize,
    pub n_max: usize,
    pub prune_rules: BTreeSet<PruneRule>,
    /// Depth below the root at which the growth tree is cut into
    /// independent subtrees for the workers and the checkpoint.
    pub parallel_width: usize,
    pub class: SearchClass,
    /// Set when the caller accepts that the claim rules are only valid for
    /// a smallest counterexample.
    pub assume_minimal: bool,
}

impl SearchConfig {
    pub fn new(k: usize, l: usize, n_max: usize) -> SearchConfig {
        SearchConfig {
            k,
            l,
            n_max,
            prune_rules: BTreeSet::from([PruneRule::Connected]),
            parallel_width: 3,
            class: SearchClass::OddGirthExactly,
            assume_minimal: false,
        }
    }

    pub fn with_rules(mut self, rules: impl IntoIterator<Item = PruneRule>) -> SearchConfig {
        self.prune_rules.extend(rules);
        self
    }

    pub fn with_class(mut self, class: SearchClass) -> SearchConfig {
        self.class = class;
        self
    }

    pub fn with_parallel_width(mut self, depth: usize) -> SearchConfig {
        self.parallel_width = depth;
        self
    }

    pub fn assuming_minimal(mut self) -> SearchConfig {
        self.assume_minimal = true;
        self
    }

    /// The rules besides connectivity.
    pub fn claim_rules(&self) -> Vec<PruneRule> {
        self.prune_rules
            .iter()
            .copied()
            .filter(|&r| r != PruneRule::Connected)
            .collect()
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidParameters(m));
        if self.k < 1 || self.l < 1 {
            return bad(format!("k = {} and l = {} must be at least 1", self.k, self.l));
        }
        if !(3..=64).contains(&self.n_max) {
            return bad(format!("n_max = {} outside 3..=64", self.n_max));
        }
        if !self.prune_rules.contains(&PruneRule::Connected) {
            return bad("the enumerator only produces connected graphs; CONNECTED is required".into());
        }
        if !self.claim_rules().is_empty() && !self.assume_minimal {
            return bad(format!(
                "rules {:?} hold only for a smallest counterexample; set assume_minimal",
                self.claim_rules().iter().map(|r| r.name()).collect::<Vec<_>>()
            ));
        }
        Ok(())
    }

    fn final_rules(&self) -> Vec<PruneRule> {
        self.prune_rules
            .iter()
            .copied()
            .filter(|r| !r.is_hereditary())
            .collect()
    }

    fn passes_final_rules(&self, g: &Graph) -> bool {
        self.final_rules().into_iter().all(|r| claim_filter(g, r))
    }
}

/// Visits every graph in the configured class with at most `n_max`
/// vertices that passes all rules, one per isomorphism class, as its
/// canonical form. Growth stops early when `visit` returns `false`.
pub fn enumerate(cfg: &SearchConfig, mut visit: impl FnMut(&Graph) -> bool) -> Result<()> {
    cfg.validate()?;
    let grower = Grower::new(cfg);
    let mut canon = Canonizer::new();
    let mut stack = vec![grower.root()];
    while let Some(g) = stack.pop() {
        if cfg.passes_final_rules(&g) && !visit(&g) {
            return Ok(());
        }
        let mut kids = grower.children(&g, &mut canon);
        kids.reverse();
        stack.extend(kids);
    }
    Ok(())
}

/// Number of graphs `enumerate` visits at each order, indexed by order.
pub fn count_by_order(cfg: &SearchConfig) -> Result<Vec<u64>> {
    let mut counts = vec![0u64; cfg.n_max + 1];
    enumerate(cfg, |g| {
        counts[g.order()] += 1;
        true
    })?;
    Ok(counts)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderStats {
    pub order: usize,
    /// Graphs of this order in the class that survived the growth rules.
    pub enumerated: u64,
    /// Of those, graphs passing every rule with no homomorphism to the
    /// target cycle.
    pub witnesses: u64,
}

/// Counts for one subtree of the search; what a checkpoint stores.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub(crate) struct Partial {
    pub enumerated: Vec<u64>,
    pub witnesses: Vec<u64>,
    pub witness_graph6: Vec<String>,
}

impl Partial {
    fn new(n_max: usize) -> Partial {
        Partial {
            enumerated: vec![0; n_max + 1],
            witnesses: vec![0; n_max + 1],
            witness_graph6: Vec::new(),
        }
    }

    fn merge(&mut self, other: &Partial) {
        for (a, b) in self.enumerated.iter_mut().zip(&other.enumerated) {
            *a += b;
        }
        for (a, b) in self.witnesses.iter_mut().zip(&other.witnesses) {
            *a += b;
        }
        self.witness_graph6.extend(other.witness_graph6.iter().cloned());
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchReport {
    pub k: usize,
    pub l: usize,
    pub n_max: usize,
    pub class: SearchClass,
    pub prune_rules: Vec<PruneRule>,
    /// Non-empty when the result only holds for a smallest counterexample.
    pub assumption: Option<String>,
    pub orders: Vec<OrderStats>,
    /// graph6 of every witness found (at most `MAX_LISTED_WITNESSES`), sorted
    /// by order and then text. Each was re-checked by a separate solver.
    pub witnesses: Vec<String>,
    pub smallest_witness_order: Option<usize>,
    /// `Some(n_max + 1)` when the whole range was searched without a
    /// witness, so that no witness has fewer than that many vertices.
    pub eta_lower_bound_established: Option<usize>,
    /// `false` when the budget ran out; counts then cover only the finished
    /// part of the search.
    pub complete: bool,
    pub subtrees_total: usize,
    pub subtrees_done: usize,
    pub wall_seconds: f64,
}

pub const MAX_LISTED_WITNESSES: usize = 1000;



/// Run-time options that do not change the result.
#[derive(Debug, Clone)]
pub struct SearchOptions {
    pub budget: Budget,
    /// Worker threads.
    pub jobs: usize,
    /// Resume from and record progress in this file.
    pub checkpoint: Option<PathBuf>,
    /// Called with a line of JSON whenever a subtree finishes.
    pub progress: Option<fn(&str)>,
}

impl Default for SearchOptions {
    fn default() -> SearchOptions {
        SearchOptions {
            budget: Budget::unlimited(),
            jobs: 1,
            checkpoint: None,
            progress: None,
        }
    }
}

struct Judge {
    cfg: SearchConfig,
    target: HomTarget,
}

impl Judge {
    fn new(cfg: &SearchConfig) -> Result<Judge> {
        let c = cycle(2 * cfg.l + 1)?;
        Ok(Judge {
            cfg: cfg.clone(),
            target: HomTarget::declared(&c, true),
        })
    }

    fn visit(&self, g: &Graph, acc: &mut Partial, budget: &mut Budget) -> Result<()> {
        budget.tick()?;
        let n = g.order();
        acc.enumerated[n] += 1;
        // Growth from the shortest odd cycle keeps the odd-girth exact.
        if self.cfg.class == SearchClass::OddGirthAtLeast
            && odd_girth(g) != CycleLength::Finite(2 * self.cfg.k + 1)
        {
            return Ok(());
        }
        if self.target.find_within(g, &mut budget.clock_only())?.is_some() {
            return Ok(());
        }
        if !self.cfg.passes_final_rules(g) {
            return Ok(());
        }
        acc.witnesses[n] += 1;
        if acc.witness_graph6.len() < MAX_LISTED_WITNESSES {
            acc.witness_graph6.push(to_graph6(g));
        }
        Ok(())
    }

    fn subtree(&self, grower: &Grower, root: &Graph, budget: &mut Budget) -> Result<Partial> {
        let mut acc = Partial::new(self.cfg.n_max);
        let mut canon = Canonizer::new();
        let mut stack = vec![root.clone()];
        while let Some(g) = stack.pop() {
            self.visit(&g, &mut acc, budget)?;
            stack.extend(grower.children(&g, &mut canon));
        }
        Ok(acc)
    }
}

/// Re-checks a reported witness with a fresh solver using a different
/// variable order.
pub fn verify_witness(g: &Graph, k: usize, l: usize) -> Result<bool> {
    let target = HomTarget::new(&cycle(2 * l + 1)?).with_order(VariableOrder::SmallestDomain);
    Ok(odd_girth(g) == CycleLength::Finite(2 * k + 1) && target.find(g).is_none())
}

/// Searches every graph of the configured class with at most `n_max`
/// vertices for one with no homomorphism to `C_{2l+1}`.
pub fn eta_search(cfg: &SearchConfig, opts: &SearchOptions) -> Result<SearchReport> {
    cfg.validate()?;
    let start = Instant::now();
    let grower = Grower::new(cfg);
    let judge = Judge::new(cfg)?;
    let mut budget = opts.budget.fork();

    // Expand the top of the tree down to the split depth.
    let mut top = Partial::new(cfg.n_max);
    let mut canon = Canonizer::new();
    let mut frontier = vec![grower.root()];
    let mut top_complete = true;
    for _ in 0..cfg.parallel_width {
        if frontier.is_empty() || frontier[0].order() >= cfg.n_max {
            break;
        }
        let mut next = Vec::new();
        for g in &frontier {
            match judge.visit(g, &mut top, &mut budget) {
                Ok(()) => next.extend(grower.children(g, &mut canon)),
                Err(Error::BudgetExceeded) => {
                    top_complete = false;
                    break;
                }
                Err(e) => return Err(e),
            }
        }
        if !top_complete {
            next.clear();
        }
        frontier = next;
    }
    frontier.sort_by_key(to_graph6);

    let keys: Vec<String> = frontier.iter().map(to_graph6).collect();
    let mut ckpt = match &opts.checkpoint {
        Some(path) => Checkpoint::open(path, cfg, &keys)?,
        None => Checkpoint::in_memory(&keys),
    };
    let pending: Vec<usize> = (0..frontier.len()).filter(|&i| !ckpt.is_done(i)).collect();
    let ckpt_lock = Mutex::new(&mut ckpt);
    let spent = AtomicU64::new(budget.ticks());
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.jobs.max(1))
        .build()
        .map_err(|e| Error::InvalidParameters(e.to_string()))?;
    let outcome: Result<()> = pool.install(|| {
        pending.par_iter().try_for_each(|&i| {
            let before = spent.load(Ordering::Relaxed);
            let mut b = budget.fork_after(before);
            if b.check_clock().is_err() {
                return Ok(());
            }
            let result = judge.subtree(&grower, &frontier[i], &mut b);
            spent.fetch_add(b.ticks() - before, Ordering::Relaxed);
            match result {
                Ok(partial) => {
                    let mut c = ckpt_lock.lock().expect("checkpoint lock");
                    c.finish(i, partial)?;
                    if let Some(progress) = opts.progress {
                        progress(&c.progress_line());
                    }
                    Ok(())
                }
                Err(Error::BudgetExceeded) => Ok(()),
                Err(e) => Err(e),
            }
        })
    });
    outcome?;

    let mut total = top;
    for p in ckpt.results().iter().flatten() {
        total.merge(p);
    }
    let subtrees_done = ckpt.results().iter().filter(|r| r.is_some()).count();
    let complete = top_complete && subtrees_done == frontier.len();
    report(cfg, total, complete, frontier.len(), subtrees_done, start)
}

fn report(
    cfg: &SearchConfig,
    mut total: Partial,
    complete: bool,
    subtrees_total: usize,
    subtrees_done: usize,
    start: Instant,
) -> Result<SearchReport> {
    let mut witnesses = Vec::new();
    for s in &total.witness_graph6 {
        let g = crate::graph::from_graph6(s)?;
        if !verify_witness(&g, cfg.k, cfg.l)? {
            return Err(Error::InvalidParameters(format!(
                "witness {s} failed independent re-verification"
            )));
        }
        witnesses.push((g.order(), s.clone()));
    }
    witnesses.sort();
    total.witness_graph6.clear();
    let orders: Vec<OrderStats> = (1..=cfg.n_max)
        .map(|n| OrderStats {
            order: n,
            enumerated: total.enumerated[n],
            witnesses: total.witnesses[n],
        })
        .filter(|s| s.enumerated > 0)
        .collect();
    let smallest = orders.iter().find(|s| s.witnesses > 0).map(|s| s.order);
    let claim_rules = cfg.claim_rules();
    Ok(SearchReport {
        k: cfg.k,
        l: cfg.l,
        n_max: cfg.n_max,
        class: cfg.class,
        prune_rules: cfg.prune_rules.iter().copied().collect(),
        assumption: (!claim_rules.is_empty()).then(|| {
            format!(
                "conditional: rules {} hold only for a smallest counterexample",
                claim_rules.iter().map(|r| r.name()).collect::<Vec<_>>().join(",")
            )
        }),
        orders,
        witnesses: witnesses
            .into_iter()
            .take(MAX_LISTED_WITNESSES)
            .map(|(_, s)| s)
            .collect(),
        smallest_witness_order: smallest,
        eta_lower_bound_established: (complete && smallest.is_none()).then_some(cfg.n_max + 1),
        complete,
        subtrees_total,
        subtrees_done,
        wall_seconds: start.elapsed().as_secs_f64(),
    })
}

/// The rules that hold for a smallest odd-girth-7 graph with no
/// homomorphism to `C_5` whatever its order.
pub fn order_independent_rules() -> Vec<PruneRule> {
    PruneRule::ALL
        .into_iter()
        .filter(|r| r.is_order_independent())
        .collect()
}

/// The rules that hold for such a graph with at most 14 vertices.
pub fn claim_rules_up_to_14() -> Vec<PruneRule> {
    PruneRule::ALL.to_vec()
}

/// Searches for the odd-girth-7 graphs on 15 vertices with no
/// homomorphism to `C_5`, pruning only with the order-independent rules.
/// The space is large: the report says whether the budget sufficed.
pub fn rediscover_order15(opts: &SearchOptions) -> Result<SearchReport> {
    let cfg = SearchConfig::new(3, 2, 15)
        .with_rules(order_independent_rules())
        .assuming_minimal();
    eta_search(&cfg, opts)
}

#[cfg(test)]
mod tests;
