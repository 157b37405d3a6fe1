//! Browser bindings: build a graph, describe it, and colour it with an odd
//! cycle. Every function takes and returns strings so the page needs no
//! glue beyond what wasm-bindgen generates.

use oddcol::constructions::{
    circular_clique, cycle, fixture, generalized_mycielski, odd_k4, CircularCliqueSpec, OddK4Spec,
};
use oddcol::graph::{from_graph6, girth, odd_girth, to_graph6};
use oddcol::hom::{chromatic_number, circular_chromatic_number, compute_core, HomTarget};
use oddcol::{Budget, Error, Graph};
use serde_json::json;
use wasm_bindgen::prelude::wasm_bindgen;

/// Circular chromatic numbers are only computed up to this order.
const CHI_C_MAX_ORDER: usize = 24;

/// Hom searches stop after this many solver nodes.
const HOM_TICKS: u64 = 5_000_000;

fn parse(g6: &str) -> Result<Graph, String> {
    from_graph6(g6.trim()).map_err(|e| e.to_string())
}

fn param(params: &[usize], i: usize) -> Result<usize, String> {
    params.get(i).copied().ok_or_else(|| format!("missing parameter {}", i + 1))
}

/// graph6 of a named family member. `params` is a space or comma separated
/// list of integers; `fixture` takes a name instead.
#[wasm_bindgen]
pub fn build(family: &str, params: &str) -> Result<String, String> {
    if family == "fixture" {
        return fixture(params.trim()).map(|g| to_graph6(&g)).map_err(|e| e.to_string());
    }
    let nums = params
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<usize>().map_err(|_| format!("not a number: {s:?}")))
        .collect::<Result<Vec<_>, _>>()?;
    let p = |i| param(&nums, i);
    let g = match family {
        "cycle" => cycle(p(0)?),
        "mycielski" => generalized_mycielski(p(0)?),
        "odd-k4" => odd_k4(OddK4Spec::new(p(0)?, p(1)?, p(2)?)),
        "circular-clique" => CircularCliqueSpec::new(p(0)?, p(1)?).and_then(circular_clique),
        other => Err(Error::InvalidParameters(format!("unknown family {other:?}"))),
    };
    g.map(|g| to_graph6(&g)).map_err(|e| e.to_string())
}

/// JSON summary of a graph: order, size, girths, chromatic numbers and the
/// order of its core.
#[wasm_bindgen]
pub fn describe(g6: &str) -> Result<String, String> {
    let g = parse(g6)?;
    let chi_c = if g.order() <= CHI_C_MAX_ORDER {
        circular_chromatic_number(&g).ok().map(|f| f.to_string())
    } else {
        None
    };
    Ok(json!({
        "order": g.order(),
        "edges": g.edge_count(),
        "girth": girth(&g).to_string(),
        "odd_girth": odd_girth(&g).to_string(),
        "chromatic_number": chromatic_number(&g),
        "circular_chromatic_number": chi_c,
        "core_order": compute_core(&g).order(),
        "edge_list": g.edges().collect::<Vec<_>>(),
    })
    .to_string())
}

/// JSON array giving a homomorphism to `C_{2l+1}`, or `null` when there is
/// none.
#[wasm_bindgen]
pub fn colour_with_cycle(g6: &str, l: usize) -> Result<String, String> {
    let g = parse(g6)?;
    if l == 0 {
        return Err("l must be at least 1".into());
    }
    let target = HomTarget::declared(&cycle(2 * l + 1).map_err(|e| e.to_string())?, true);
    let mut budget = Budget::with_ticks(HOM_TICKS);
    match target.find_within(&g, &mut budget) {
        Ok(found) => Ok(serde_json::to_string(&found).expect("maps serialize")),
        Err(Error::BudgetExceeded) => Err("search too large for the demo".into()),
        Err(e) => Err(e.to_string()),
    }
}
