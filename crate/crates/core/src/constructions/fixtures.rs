//! Hand-transcribed fixture graphs. Vertices are numbered in the order
//! their names are listed.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{odd_girth, to_graph6, CycleLength, Graph};
use crate::hom::VertexMap;

struct Spec {
    name: &'static str,
    vertices: &'static str,
    /// Space separated chains `a-b-c`.
    edges: &'static str,
    /// Drawn `C_5` colour of each vertex, where the drawing has one.
    labels: Option<&'static [usize]>,
}

const SPECS: &[Spec] = &[
    // Order 15, odd-girth 7, not C5-colourable.
    Spec {
        name: "fig2a",
        vertices: "u0 u1 u2 u3 u4 u5 v0 v1 v2 v3 v4 v5 w0 w1 w2",
        edges: "u0-u1-u2-u3-u4-u5-u0-v0-v1-w1-v4-v5-w0-v2-v3-w2-v0 \
                u1-v1 u2-v2 u3-v3 u4-v4 u5-v5",
        labels: None,
    },
    Spec {
        name: "fig2b",
        vertices: "u0 u1 u2 u3 u4 u5 u6 u7 v0 v1 v2 v3 v4 v5 v6",
        edges: "u0-u1-u2-u3-u4-u5-u6-u7-u0-v0-v1-u1 u3-v2-v3-u4 u5-v4-v6-v5-u7 \
                u6-v6 v0-v3 v1-v4 v2-v5",
        labels: None,
    },
    Spec {
        name: "fig2c",
        vertices: "u0 u1 u2 u3 u4 u5 u6 v0 v2 v4 v5 v6 w0 w1 w3",
        edges: "u0-u1-u2-u3-u4-u5-u6-u0 u2-v2-w1-w0-w3-v2 u4-v4-v5-u5 u6-v6-v0-u0 \
                v0-w0 w1-v6 v5-w3 v4-w0",
        labels: None,
    },
    // Odd-K4s on branch vertices x y z t, some with extra attached vertices.
    Spec {
        name: "case1a",
        vertices: "x y z t a1 ap1 b1 bp1 c1 c2 cp1 cp2 d1 d2",
        edges: "x-ap1-y z-a1-t x-b1-z t-bp1-y x-c1-c2-t z-cp1-cp2-y c1-d1-d2-cp2",
        labels: Some(&[2, 0, 2, 0, 1, 1, 3, 1, 3, 4, 3, 4, 4, 3]),
    },
    Spec {
        name: "case1b",
        vertices: "x y z t b1 b2 bp1 bp2 c1 c2 cp1 cp2 d1 d2",
        edges: "x-y z-t x-b1-b2-z t-bp1-bp2-y x-c1-c2-t z-cp1-cp2-y c2-d1-d2-cp2",
        labels: Some(&[0, 4, 2, 3, 4, 3, 2, 3, 1, 2, 1, 0, 3, 4]),
    },
    Spec {
        name: "case2a",
        vertices: "x y z t a1 a2 ap1 b1 b2 bp1 c1 c2 cp1",
        edges: "x-ap1-y z-a1-a2-t x-b1-b2-z t-bp1-y x-c1-c2-t z-cp1-y",
        labels: Some(&[0, 3, 1, 3, 0, 4, 4, 1, 0, 2, 1, 2, 2]),
    },
    Spec {
        name: "case2b",
        vertices: "x y z t a1 b1 b2 bp1 c1 c2 c3 cp1 cp2 d",
        edges: "x-y z-a1-t x-b1-b2-z t-bp1-y x-c1-c2-c3-t z-cp1-cp2-y c2-d-cp1",
        labels: Some(&[1, 0, 2, 0, 1, 2, 1, 1, 2, 3, 4, 3, 4, 2]),
    },
    Spec {
        name: "case3a",
        vertices: "x y z t a1 a2 b1 b2 b3 bp1 c1 c2 c3 cp1",
        edges: "x-y z-a1-a2-t x-b1-b2-b3-z t-bp1-y x-c1-c2-c3-t z-cp1-y",
        labels: Some(&[0, 1, 1, 4, 2, 3, 4, 3, 2, 0, 1, 2, 3, 0]),
    },
    Spec {
        name: "case3b_1",
        vertices: "x y z t b1 b2 bp1 bp2 c1 c2 cp1 cp2 cp3 cp4",
        edges: "x-y z-t x-b1-b2-z t-bp1-bp2-y x-c1-c2-t z-cp1-cp2-cp3-cp4-y",
        labels: Some(&[1, 2, 4, 0, 2, 3, 4, 3, 0, 1, 0, 1, 0, 1]),
    },
    Spec {
        name: "case3b_2",
        vertices: "x y z t b1 b2 b3 bp1 bp2 bp3 c1 cp1 cp2 cp3",
        edges: "x-y z-t x-b1-b2-b3-z t-bp1-bp2-bp3-y x-c1-t z-cp1-cp2-cp3-y",
        labels: Some(&[2, 3, 0, 4, 1, 0, 1, 0, 1, 2, 3, 4, 0, 4]),
    },
    Spec {
        name: "case3b_3",
        vertices: "x y z t a1 ap1 b1 bp1 c1 c2 cp1 cp2 cp3 cp4",
        edges: "x-ap1-y z-a1-t x-b1-z t-bp1-y x-c1-c2-t z-cp1-cp2-cp3-cp4-y",
        labels: Some(&[0, 3, 3, 1, 2, 4, 4, 2, 1, 0, 4, 0, 1, 2]),
    },
    Spec {
        name: "case3b_4",
        vertices: "x y z t a1 ap1 b1 b2 bp1 bp2 c1 cp1 cp2 cp3",
        edges: "x-ap1-y z-a1-t x-b1-b2-z t-bp1-bp2-y x-c1-t z-cp1-cp2-cp3-y",
        labels: Some(&[0, 2, 1, 3, 2, 1, 1, 0, 4, 3, 4, 0, 4, 3]),
    },
    Spec {
        name: "case3b_5",
        vertices: "x y z t a1 a2 ap1 ap2 b1 b2 bp1 bp2 cp1 cp2",
        edges: "x-ap1-ap2-y z-a1-a2-t x-b1-b2-z t-bp1-bp2-y x-t z-cp1-cp2-y",
        labels: Some(&[4, 3, 1, 0, 0, 1, 0, 4, 3, 2, 1, 2, 0, 4]),
    },
];

pub const FIXTURE_NAMES: &[&str] = &[
    "fig2a", "fig2b", "fig2c", "case1a", "case1b", "case2a", "case2b", "case3a", "case3b_1",
    "case3b_2", "case3b_3", "case3b_4", "case3b_5",
];

/// What each fixture is known to satisfy.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FixtureExpectation {
    pub order: usize,
    pub odd_girth: CycleLength,
    pub c5_colourable: bool,
}

fn spec(name: &str) -> Result<&'static Spec> {
    SPECS
        .iter()
        .find(|s| s.name == name)
        .ok_or_else(|| Error::UnknownFixture(name.to_string()))
}

fn build(spec: &Spec) -> Graph {
    let names: Vec<&str> = spec.vertices.split_whitespace().collect();
    let index = |v: &str| {
        names
            .iter()
            .position(|&n| n == v)
            .unwrap_or_else(|| panic!("fixture {} has no vertex {v}", spec.name))
    };
    let mut g = Graph::empty(names.len()).expect("fixture order in range");
    for chain in spec.edges.split_whitespace() {
        let path: Vec<usize> = chain.split('-').map(index).collect();
        for w in path.windows(2) {
            if !g.has_edge(w[0], w[1]) {
                g.add_edge(w[0], w[1]).expect("valid fixture edge");
            }
        }
    }
    g
}

pub fn fixture_expectation(name: &str) -> Result<FixtureExpectation> {
    let s = spec(name)?;
    Ok(FixtureExpectation {
        order: s.vertices.split_whitespace().count(),
        odd_girth: CycleLength::Finite(7),
        c5_colourable: s.labels.is_some(),
    })
}

/// The named fixture. In debug builds its order and odd-girth are checked
/// against [`fixture_expectation`], so a transcription slip fails loudly.
pub fn fixture(name: &str) -> Result<Graph> {
    let s = spec(name)?;
    let g = build(s);
    if cfg!(debug_assertions) {
        let want = fixture_expectation(name)?;
        assert_eq!(g.order(), want.order, "fixture {name}: order");
        assert_eq!(odd_girth(&g), want.odd_girth, "fixture {name}: odd-girth");
        assert!(g.is_connected(), "fixture {name}: connected");
    }
    Ok(g)
}

/// The `C_5` colouring drawn next to a case fixture.
pub fn fixture_labelling(name: &str) -> Result<Option<VertexMap>> {
    let s = spec(name)?;
    Ok(s.labels.map(|l| VertexMap::new(5, l.to_vec()).expect("labels below 5")))
}

/// All fixtures as graph6 lines, together with a JSON manifest mapping each
/// name to its 1-based line number.
pub fn fixture_corpus() -> Result<(String, String)> {
    let mut lines = String::new();
    let mut manifest = BTreeMap::new();
    for (i, name) in FIXTURE_NAMES.iter().enumerate() {
        lines.push_str(&to_graph6(&fixture(name)?));
        lines.push('\n');
        manifest.insert(*name, i + 1);
    }
    let manifest = serde_json::to_string_pretty(&manifest).expect("manifest serializes") + "\n";
    Ok((lines, manifest))
}
