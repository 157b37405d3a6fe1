//! Homomorphisms: the decision solver, cores, chromatic numbers and the
//! v-special colouring extension to `C_5`.

mod chromatic;
mod solver;
mod vspecial;

pub use chromatic::{
    chromatic_number, circular_chromatic_number, circular_clique_hom_criterion_check,
    compute_core, is_core, Fraction,
};
pub use solver::{find_homomorphism, HomTarget, VariableOrder};
pub use vspecial::{exists_v_special, extend_v_special, VClass, VSpecialColouring};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A total map from the vertices of a source graph to those of a target.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VertexMap {
    target_order: usize,
    image: Vec<usize>,
}

impl VertexMap {
    pub fn new(target_order: usize, image: Vec<usize>) -> Result<VertexMap> {
        if let Some(&bad) = image.iter().find(|&&x| x >= target_order) {
            return Err(Error::InvalidVertex {
                vertex: bad,
                order: target_order,
            });
        }
        Ok(VertexMap {
            target_order,
            image,
        })
    }

    pub fn source_order(&self) -> usize {
        self.image.len()
    }

    pub fn target_order(&self) -> usize {
        self.target_order
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn get(&self, v: usize) -> usize {
        self.image[v]
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &VertexMap) -> Result<VertexMap> {
        if other.source_order() != self.target_order {
            return Err(Error::DimensionMismatch {
                source_order: other.source_order(),
                target_order: other.target_order,
                g_order: self.target_order,
                h_order: other.target_order,
            });
        }
        VertexMap::new(
            other.target_order,
            self.image.iter().map(|&x| other.image[x]).collect(),
        )
    }
}

/// Serialized as the bare image array.
impl Serialize for VertexMap {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.image.serialize(s)
    }
}

/// Reads a bare image array; the target order is taken as one more than
/// the largest image.
impl<'de> Deserialize<'de> for VertexMap {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let image = Vec::<usize>::deserialize(d)?;
        let target_order = image.iter().max().map_or(0, |m| m + 1);
        Ok(VertexMap {
            target_order,
            image,
        })
    }
}

/// Whether `m` sends every edge of `g` to an edge of `h`.
pub fn verify_mapping(g: &Graph, h: &Graph, m: &VertexMap) -> Result<bool> {
    if m.source_order() != g.order() || m.target_order() != h.order() {
        return Err(Error::DimensionMismatch {
            source_order: m.source_order(),
            target_order: m.target_order(),
            g_order: g.order(),
            h_order: h.order(),
        });
    }
    Ok(g.edges().all(|(u, v)| h.has_edge(m.image[u], m.image[v])))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{complete, cycle};

    #[test]
    fn identity_and_constant() {
        let c5 = cycle(5).unwrap();
        let id = VertexMap::new(5, (0..5).collect()).unwrap();
        assert!(verify_mapping(&c5, &c5, &id).unwrap());
        let k2 = complete(2).unwrap();
        let constant = VertexMap::new(2, vec![0, 0]).unwrap();
        assert!(!verify_mapping(&k2, &k2, &constant).unwrap());
    }

    #[test]
    fn dimension_checks() {
        let c5 = cycle(5).unwrap();
        let short = VertexMap::new(5, vec![0, 1, 2]).unwrap();
        assert!(matches!(
            verify_mapping(&c5, &c5, &short),
            Err(Error::DimensionMismatch { .. })
        ));
        assert!(VertexMap::new(3, vec![0, 3]).is_err());
    }

    #[test]
    fn json_is_a_bare_array() {
        let m = VertexMap::new(5, vec![0, 1, 2, 3, 4]).unwrap();
        let text = serde_json::to_string(&m).unwrap();
        assert_eq!(text, "[0,1,2,3,4]");
        let back: VertexMap = serde_json::from_str(&text).unwrap();
        assert_eq!(back, m);
    }

    #[test]
    fn composition() {
        let a = VertexMap::new(3, vec![0, 1, 2, 1]).unwrap();
        let b = VertexMap::new(2, vec![1, 0, 1]).unwrap();
        assert_eq!(a.then(&b).unwrap().image(), &[1, 0, 1, 0]);
        assert!(b.then(&a).is_err());
    }
}
