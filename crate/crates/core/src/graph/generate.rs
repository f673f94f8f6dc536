//! Seeded random graphs and exhaustive enumeration of labeled graphs.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Graph, VertexId};
use crate::{Error, Result};

/// Default order limit for loopless enumeration.
pub const LOOPLESS_CAP: usize = 5;
/// Default order limit for enumeration with loops.
pub const LOOPED_CAP: usize = 4;

/// Erdős–Rényi style graph: every unordered pair of distinct vertices is an
/// edge with probability `edge_prob`, every vertex carries a loop with
/// probability `loop_prob`. Deterministic for a fixed seed.
pub fn random_graph(n: usize, edge_prob: f64, loop_prob: f64, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    for (name, p) in [("edge_prob", edge_prob), ("loop_prob", loop_prob)] {
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::InvalidParameter(format!("{name} must lie in [0, 1], got {p}")));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(edge_prob) {
                edges.push((u, v));
            }
        }
    }
    for v in 0..n {
        if rng.random_bool(loop_prob) {
            edges.push((v, v));
        }
    }
    Graph::from_edges(n, edges)
}

/// Every labeled graph on `n` vertices, each exactly once, within the
/// default caps.
pub fn enumerate_graphs(n: usize, allow_loops: bool) -> Result<GraphEnumeration> {
    let cap = if allow_loops { LOOPED_CAP } else { LOOPLESS_CAP };
    enumerate_graphs_capped(n, allow_loops, cap)
}

/// As [`enumerate_graphs`] with an explicit order cap.
pub fn enumerate_graphs_capped(n: usize, allow_loops: bool, cap: usize) -> Result<GraphEnumeration> {
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if n > cap {
        return Err(Error::InvalidParameter(format!(
            "enumeration order {n} exceeds cap {cap}"
        )));
    }
    let mut slots: Vec<(VertexId, VertexId)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    if allow_loops {
        slots.extend((0..n).map(|v| (v, v)));
    }
    if slots.len() >= 64 {
        return Err(Error::InvalidParameter(format!(
            "{} edge slots do not fit a 64-bit mask",
            slots.len()
        )));
    }
    Ok(GraphEnumeration {
        n,
        total: 1 << slots.len(),
        slots,
        next: 0,
    })
}

/// Iterator over all subsets of the edge slots, in mask order.
#[derive(Clone, Debug)]
pub struct GraphEnumeration {
    n: usize,
    slots: Vec<(VertexId, VertexId)>,
    next: u64,
    total: u64,
}

impl GraphEnumeration {
    pub fn total(&self) -> u64 {
        self.total
    }
}

impl Iterator for GraphEnumeration {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.next >= self.total {
            return None;
        }
        let mask = self.next;
        self.next += 1;
        let edges = self
            .slots
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e);
        Some(Graph::from_edges(self.n, edges).expect("slots are distinct and in range"))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.total - self.next) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for GraphEnumeration {}

#[cfg(test)]
mod tests {
    use std::collections::HashSet;

    use super::*;
    use crate::families;

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_graphs(2, false).unwrap().count(), 2);
        assert_eq!(enumerate_graphs(3, false).unwrap().count(), 8);
        assert_eq!(enumerate_graphs(3, true).unwrap().count(), 64);
        assert_eq!(enumerate_graphs(5, false).unwrap().count(), 1024);
    }

    #[test]
    fn enumeration_yields_distinct_graphs() {
        let all: HashSet<Graph> = enumerate_graphs(4, true).unwrap().collect();
        assert_eq!(all.len(), 1 << 10);
    }

    #[test]
    fn enumeration_respects_caps() {
        assert!(enumerate_graphs(6, false).is_err());
        assert!(enumerate_graphs(5, true).is_err());
        assert!(enumerate_graphs_capped(5, true, 5).is_ok());
        assert!(enumerate_graphs(0, false).is_err());
    }

    #[test]
    fn random_extremes() {
        let empty = random_graph(5, 0.0, 0.0, 9).unwrap();
        assert_eq!(empty.edge_count(), 0);
        let full = random_graph(5, 1.0, 1.0, 9).unwrap();
        assert_eq!(full, families::complete(5, true).unwrap());
        assert!(random_graph(5, 1.5, 0.0, 0).is_err());
        assert!(random_graph(5, 0.5, -0.1, 0).is_err());
        assert!(random_graph(0, 0.5, 0.5, 0).is_err());
    }

    #[test]
    fn random_is_deterministic_per_seed() {
        let a = random_graph(8, 0.5, 0.25, 42).unwrap();
        let b = random_graph(8, 0.5, 0.25, 42).unwrap();
        assert_eq!(a, b);
        let others: HashSet<Graph> = (0..20).map(|s| random_graph(8, 0.5, 0.25, s).unwrap()).collect();
        assert!(others.len() > 1);
    }
}
