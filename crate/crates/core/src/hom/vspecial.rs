//! v-special colourings: proper 3-colourings of the graph induced by the
//! vertices at distance at least 3 from `v`, where class `c3` is used only
//! on isolated vertices and no vertex at distance 2 sees both `c1` and
//! `c2`. On graphs of odd-girth at least 7 such a colouring extends to a
//! homomorphism to `C_5`.

use std::collections::BTreeMap;

use serde::Serialize;

use super::{verify_mapping, VertexMap};
use crate::constructions::cycle;
use crate::error::{Error, Result};
use crate::graph::{bit, distance_partition, Bits, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum VClass {
    C1,
    C2,
    C3,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VSpecialColouring {
    pub center: usize,
    /// Class of every vertex at distance 3 or more from the center.
    pub class_of: BTreeMap<usize, VClass>,
}

/// Finds a v-special colouring if one exists.
///
/// Isolated vertices of `G[N3+]` can always take `c3`, which never hurts
/// condition (ii). Every other component must be bipartite and coloured
/// with `c1`/`c2`, so only the side swap per component is free; condition
/// (ii) forces all `N3+` neighbours of an `N2` vertex into one class, which
/// is a system of parity constraints between component swaps.
pub fn exists_v_special(g: &Graph, v: usize) -> Result<Option<VSpecialColouring>> {
    let part = distance_partition(g, v)?;
    let far = part.n3plus;
    let rows: Vec<u64> = g.rows().iter().map(|r| r & far).collect();

    // side[x]: 2-colouring of x's component; comp[x]: its root.
    let n = g.order();
    let mut side = vec![0u8; n];
    let mut comp = vec![usize::MAX; n];
    for root in Bits(far) {
        if comp[root] != usize::MAX || rows[root] == 0 {
            continue;
        }
        comp[root] = root;
        let mut stack = vec![root];
        while let Some(x) = stack.pop() {
            for y in Bits(rows[x]) {
                if comp[y] == usize::MAX {
                    comp[y] = root;
                    side[y] = side[x] ^ 1;
                    stack.push(y);
                } else if side[y] == side[x] {
                    return Ok(None);
                }
            }
        }
    }

    // Union-find with parity over component roots: flip[a] ^ flip[b] = p.
    let mut parent: Vec<usize> = (0..n).collect();
    let mut parity = vec![0u8; n];
    fn find(parent: &mut [usize], parity: &mut [u8], x: usize) -> (usize, u8) {
        let mut path = Vec::new();
        let mut r = x;
        while parent[r] != r {
            path.push(r);
            r = parent[r];
        }
        // Compress: recompute parities from the root down.
        for &y in path.iter().rev() {
            let p = parent[y];
            if p != r {
                parity[y] ^= parity[p];
            }
            parent[y] = r;
        }
        (r, if x == r { 0 } else { parity[x] })
    }
    for x in Bits(part.n2) {
        let coloured: Vec<usize> = Bits(g.neighbours(x) & far).filter(|&y| rows[y] != 0).collect();
        for w in coloured.windows(2) {
            let (a, b) = (w[0], w[1]);
            let want = side[a] ^ side[b];
            let (ra, pa) = find(&mut parent, &mut parity, comp[a]);
            let (rb, pb) = find(&mut parent, &mut parity, comp[b]);
            if ra == rb {
                if pa ^ pb != want {
                    return Ok(None);
                }
            } else {
                parent[rb] = ra;
                parity[rb] = pa ^ pb ^ want;
            }
        }
    }

    let mut class_of = BTreeMap::new();
    for x in Bits(far) {
        let class = if rows[x] == 0 {
            VClass::C3
        } else {
            let (_, flip) = find(&mut parent, &mut parity, comp[x]);
            if side[x] ^ flip == 0 {
                VClass::C1
            } else {
                VClass::C2
            }
        };
        class_of.insert(x, class);
    }
    Ok(Some(VSpecialColouring { center: v, class_of }))
}

/// Checks conditions (i) and (ii) and that exactly the far vertices are
/// coloured.
fn validate(g: &Graph, col: &VSpecialColouring) -> Result<(u64, u64, u64)> {
    let part = distance_partition(g, col.center)?;
    let bad = |msg: String| Err(Error::InvalidColouring(msg));
    let coloured = col.class_of.keys().try_fold(0u64, |acc, &x| {
        g.check_vertex(x).map(|_| acc | bit(x))
    })?;
    if coloured != part.n3plus {
        return bad("coloured vertices differ from the vertices at distance >= 3".into());
    }
    let class = |x: usize| col.class_of[&x];
    for x in Bits(part.n3plus) {
        let inner = g.neighbours(x) & part.n3plus;
        if class(x) == VClass::C3 && inner != 0 {
            return bad(format!("c3 vertex {x} is not isolated"));
        }
        if let Some(y) = Bits(inner).find(|&y| class(y) == class(x)) {
            return bad(format!("adjacent vertices {x} and {y} share a class"));
        }
    }
    let mut c1 = 0u64;
    let mut c2 = 0u64;
    for (&x, &c) in &col.class_of {
        match c {
            VClass::C1 => c1 |= bit(x),
            VClass::C2 => c2 |= bit(x),
            VClass::C3 => {}
        }
    }
    for x in Bits(part.n2) {
        if g.neighbours(x) & c1 != 0 && g.neighbours(x) & c2 != 0 {
            return bad(format!("vertex {x} at distance 2 sees both c1 and c2"));
        }
    }
    Ok((part.n1, part.n2, c1))
}

/// The explicit map to `C_5`: `c1 -> 0`, `c2 -> 1`, `c3 -> 3`; a vertex at
/// distance 2 goes to 4 if it has a `c1` neighbour and to 2 otherwise;
/// neighbours of the center go to 3 and the center to 2.
pub fn extend_v_special(g: &Graph, col: &VSpecialColouring) -> Result<VertexMap> {
    let (n1, n2, c1) = validate(g, col)?;
    let mut image = vec![0usize; g.order()];
    image[col.center] = 2;
    for x in Bits(n1) {
        image[x] = 3;
    }
    for x in Bits(n2) {
        image[x] = if g.neighbours(x) & c1 != 0 { 4 } else { 2 };
    }
    for (&x, &c) in &col.class_of {
        image[x] = match c {
            VClass::C1 => 0,
            VClass::C2 => 1,
            VClass::C3 => 3,
        };
    }
    let m = VertexMap::new(5, image)?;
    let c5 = cycle(5)?;
    if !verify_mapping(g, &c5, &m)? {
        let (u, v) = g
            .edges()
            .find(|&(u, v)| !c5.has_edge(m.get(u), m.get(v)))
            .expect("a violated edge exists");
        return Err(Error::ExtensionFailed(u, v));
    }
    Ok(m)
}
