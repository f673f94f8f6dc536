//! Undirected graphs with optional loops and no parallel edges.
//!
//! Vertices are dense indices `0..order`. A loop at `v` is stored as `v`
//! appearing once in its own neighbor list; it counts as one edge and adds
//! two to the degree of `v`.

pub mod edgelist;
pub mod families;
pub mod generate;

use std::collections::BTreeSet;

use crate::{Error, Result};

pub type VertexId = usize;

/// An immutable undirected graph. Neighbor lists are sorted and duplicate free.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    adjacency: Vec<Vec<VertexId>>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph from an edge list. `(u, u)` is a loop; `(u, v)` and
    /// `(v, u)` denote the same edge, so listing both is a duplicate.
    pub fn from_edges<I>(order: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        if order == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut adjacency = vec![Vec::new(); order];
        let mut seen = BTreeSet::new();
        for (u, v) in edges {
            for vertex in [u, v] {
                if vertex >= order {
                    return Err(Error::VertexOutOfRange { vertex, order });
                }
            }
            let key = (u.min(v), u.max(v));
            if !seen.insert(key) {
                return Err(Error::DuplicateEdge { u: key.0, v: key.1 });
            }
            adjacency[u].push(v);
            if u != v {
                adjacency[v].push(u);
            }
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(Self {
            adjacency,
            edge_count: seen.len(),
        })
    }

    pub fn edgeless(order: usize) -> Result<Self> {
        Self::from_edges(order, [])
    }

    /// Wraps sorted, symmetric, duplicate-free neighbor lists.
    pub(crate) fn from_adjacency_unchecked(adjacency: Vec<Vec<VertexId>>) -> Self {
        debug_assert!(!adjacency.is_empty());
        let mut twice = 0;
        let mut loops = 0;
        for (v, list) in adjacency.iter().enumerate() {
            for &w in list {
                if w == v {
                    loops += 1;
                } else {
                    twice += 1;
                }
            }
        }
        let g = Self {
            adjacency,
            edge_count: twice / 2 + loops,
        };
        debug_assert!(g.validate().is_ok());
        g
    }

    pub fn order(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adjacency[v]
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    pub fn has_loop(&self, v: VertexId) -> bool {
        self.has_edge(v, v)
    }

    pub fn loop_count(&self) -> usize {
        (0..self.order()).filter(|&v| self.has_loop(v)).count()
    }

    /// Degree with a loop counted twice.
    pub fn degree(&self, v: VertexId) -> usize {
        self.adjacency[v].len() + usize::from(self.has_loop(v))
    }

    pub fn vertices(&self) -> std::ops::Range<VertexId> {
        0..self.order()
    }

    /// Every edge once as `(u, v)` with `u <= v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v >= u).map(move |&v| (u, v)))
    }

    /// `Kₙ⁺`: every vertex carries a loop and every pair is adjacent.
    pub fn is_complete_with_loops(&self) -> bool {
        let n = self.order();
        self.adjacency.iter().all(|list| list.len() == n)
    }

    /// Checks the structural invariants: sorted duplicate-free neighbor
    /// lists, indices in range, and symmetry.
    pub fn validate(&self) -> Result<()> {
        let order = self.order();
        if order == 0 {
            return Err(Error::EmptyGraph);
        }
        for (u, list) in self.adjacency.iter().enumerate() {
            if list.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::InvalidParameter(format!(
                    "neighbor list of {u} not strictly sorted"
                )));
            }
            for &v in list {
                if v >= order {
                    return Err(Error::VertexOutOfRange { vertex: v, order });
                }
                if !self.has_edge(v, u) {
                    return Err(Error::InvalidParameter(format!("edge {u}->{v} has no reverse")));
                }
            }
        }
        Ok(())
    }

    /// Removes `v` and relabels the vertices above it down by one.
    /// Returns `None` for a single-vertex graph.
    pub fn without_vertex(&self, v: VertexId) -> Option<Graph> {
        if self.order() <= 1 {
            return None;
        }
        let shift = |w: VertexId| if w > v { w - 1 } else { w };
        let adjacency = self
            .adjacency
            .iter()
            .enumerate()
            .filter(|&(u, _)| u != v)
            .map(|(_, list)| list.iter().filter(|&&w| w != v).map(|&w| shift(w)).collect())
            .collect();
        Some(Self::from_adjacency_unchecked(adjacency))
    }

    /// Returns a copy without the edge `{u, v}` (a no-op if absent).
    pub fn without_edge(&self, u: VertexId, v: VertexId) -> Graph {
        let mut adjacency = self.adjacency.clone();
        adjacency[u].retain(|&w| w != v);
        adjacency[v].retain(|&w| w != u);
        Self::from_adjacency_unchecked(adjacency)
    }

    /// Adds a loop to every vertex that lacks one.
    pub fn with_all_loops(&self) -> Graph {
        let mut adjacency = self.adjacency.clone();
        for (v, list) in adjacency.iter_mut().enumerate() {
            if let Err(pos) = list.binary_search(&v) {
                list.insert(pos, v);
            }
        }
        Self::from_adjacency_unchecked(adjacency)
    }

    /// Applies `perm` (old index -> new index) to the labels.
    pub fn relabeled(&self, perm: &[VertexId]) -> Result<Graph> {
        Graph::from_edges(self.order(), self.edges().map(|(u, v)| (perm[u], perm[v])))
    }
}
