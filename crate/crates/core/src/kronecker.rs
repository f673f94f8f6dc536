//! Kronecker (tensor) product `G₁ ⊗ G₂`.
//!
//! Product vertices are encoded row-major in the first factor:
//! `(a, b) ↦ a · n₂ + b`. Two product vertices are adjacent iff both
//! coordinates are adjacent in their factors, so a product vertex carries a
//! loop iff both of its coordinates do.

use crate::walk::{is_bipartite, is_connected};
use crate::{Error, Graph, Result, VertexId};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProductVertex {
    pub first: VertexId,
    pub second: VertexId,
}

impl ProductVertex {
    pub fn encode(self, second_order: usize) -> VertexId {
        self.first * second_order + self.second
    }

    pub fn decode(encoded: VertexId, second_order: usize) -> Self {
        Self {
            first: encoded / second_order,
            second: encoded % second_order,
        }
    }
}

pub fn kronecker_product(g1: &Graph, g2: &Graph) -> Graph {
    let n2 = g2.order();
    let mut adjacency = Vec::with_capacity(g1.order() * n2);
    for a in g1.vertices() {
        for b in g2.vertices() {
            // Ascending in `a'` then `b'`, so already sorted.
            let list = g1
                .neighbors(a)
                .iter()
                .flat_map(|&a2| g2.neighbors(b).iter().map(move |&b2| a2 * n2 + b2))
                .collect();
            adjacency.push(list);
        }
    }
    Graph::from_adjacency_unchecked(adjacency)
}

/// For connected factors, the product is connected iff some factor has an
/// odd cycle.
pub fn product_is_connected(g1: &Graph, g2: &Graph) -> Result<bool> {
    if !is_connected(g1) || !is_connected(g2) {
        return Err(Error::Disconnected);
    }
    Ok(!is_bipartite(g1) || !is_bipartite(g2))
}

/// Maps a vertex of `G₁ ⊗ G₂` to the corresponding vertex of `G₂ ⊗ G₁`.
pub fn swap_coordinates(encoded: VertexId, first_order: usize, second_order: usize) -> VertexId {
    let v = ProductVertex::decode(encoded, second_order);
    ProductVertex {
        first: v.second,
        second: v.first,
    }
    .encode(first_order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, cycle, path};
    use crate::length::Finite;
    use crate::walk::diameter;

    #[test]
    fn encoding_is_bijective() {
        let (n1, n2) = (3, 4);
        let mut seen = vec![false; n1 * n2];
        for first in 0..n1 {
            for second in 0..n2 {
                let v = ProductVertex { first, second };
                let code = v.encode(n2);
                assert!(!seen[code]);
                seen[code] = true;
                assert_eq!(ProductVertex::decode(code, n2), v);
            }
        }
    }

    #[test]
    fn k2_squared_is_two_disjoint_edges() {
        let k2 = complete(2, false).unwrap();
        let p = kronecker_product(&k2, &k2);
        assert_eq!(p, Graph::from_edges(4, [(0, 3), (1, 2)]).unwrap());
        assert!(!product_is_connected(&k2, &k2).unwrap());
    }

    #[test]
    fn triangle_times_k2_is_hexagon() {
        let p = kronecker_product(&cycle(3).unwrap(), &complete(2, false).unwrap());
        assert_eq!((p.order(), p.edge_count()), (6, 6));
        assert_eq!(crate::families::cycle_length(&p), Some(6));
        assert_eq!(diameter(&p), Finite(3));
    }

    #[test]
    fn loops_pair_with_edges() {
        // Loop {0,0} with edge {0,1} gives the single edge {(0,0),(0,1)}.
        let looped = complete(1, true).unwrap();
        let k2 = complete(2, false).unwrap();
        let p = kronecker_product(&looped, &k2);
        assert_eq!(p, k2);
        let both = kronecker_product(&looped, &looped);
        assert!(both.has_loop(0));
    }

    #[test]
    fn order_one_without_loop_gives_edgeless() {
        let k1 = path(1).unwrap();
        let p = kronecker_product(&cycle(5).unwrap(), &k1);
        assert_eq!((p.order(), p.edge_count()), (5, 0));
    }

    #[test]
    fn connectivity_criterion() {
        let c3 = cycle(3).unwrap();
        let k2 = complete(2, false).unwrap();
        assert!(product_is_connected(&c3, &k2).unwrap());
        assert!(!product_is_connected(&k2, &path(3).unwrap()).unwrap());
        assert!(product_is_connected(&cycle(5).unwrap(), &cycle(4).unwrap()).unwrap());
        let split = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(product_is_connected(&split, &c3), Err(Error::Disconnected));
    }
}
