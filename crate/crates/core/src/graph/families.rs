//! Constructors for the named graph families, plus structural recognizers.
//!
//! Labeling: path vertices come first in index order, followed by the vertices
//! of the attached clique or cycle.

use serde::{Deserialize, Serialize};

use super::{Graph, VertexId};
use crate::{Error, Result};

/// `Pₙ` on vertices `0..n`. `path(1)` is `K₁` without a loop.
pub fn path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParameter("path needs at least one vertex".into()));
    }
    Graph::from_edges(n, (1..n).map(|v| (v - 1, v)))
}

/// `Cₙ`, `n >= 3`.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("cycle needs n >= 3, got {n}")));
    }
    Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n)))
}

/// `Kₙ`, or `Kₙ⁺` (a loop on every vertex) when `with_loops` is set.
pub fn complete(n: usize, with_loops: bool) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParameter(
            "complete graph needs at least one vertex".into(),
        ));
    }
    let edges = (0..n).flat_map(|u| (u..n).map(move |v| (u, v)));
    Graph::from_edges(n, edges.filter(|&(u, v)| with_loops || u != v))
}

/// Complete multipartite graph; parts are consecutive index blocks.
pub fn complete_multipartite(part_sizes: &[usize]) -> Result<Graph> {
    if part_sizes.len() < 2 {
        return Err(Error::InvalidParameter(
            "complete multipartite graph needs at least 2 parts".into(),
        ));
    }
    if part_sizes.contains(&0) {
        return Err(Error::InvalidParameter("parts must be non-empty".into()));
    }
    let part_of: Vec<usize> = part_sizes
        .iter()
        .enumerate()
        .flat_map(|(i, &size)| std::iter::repeat_n(i, size))
        .collect();
    let n = part_of.len();
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    Graph::from_edges(n, edges.filter(|&(u, v)| part_of[u] != part_of[v]))
}

/// Which end-cap is attached to the path.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FamilyKind {
    /// Path joined to a complete graph `K_p`.
    H,
    /// Path joined to a cycle `C_p`.
    F,
}

/// A member of the path-plus-clique (`H`) or path-plus-cycle (`F`) family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Family {
    pub kind: FamilyKind,
    pub n: usize,
    pub p: usize,
}

impl Family {
    pub fn build(self) -> Result<Graph> {
        match self.kind {
            FamilyKind::H => h_family(self.n, self.p),
            FamilyKind::F => f_family(self.n, self.p),
        }
    }

    /// `H(n,p)`, `p >= 3`, or `F(n,p)`, `p` odd: the member has odd cycles.
    pub fn has_odd_cycles(self) -> bool {
        match self.kind {
            FamilyKind::H => self.p >= 3,
            FamilyKind::F => self.p % 2 == 1,
        }
    }
}

fn path_with_cap(n: usize, p: usize, cap: impl Iterator<Item = (VertexId, VertexId)>) -> Result<Graph> {
    let tail = n - p;
    let path_edges = (1..tail).map(|v| (v - 1, v));
    let bridge = std::iter::once((tail - 1, tail));
    Graph::from_edges(
        n,
        path_edges.chain(bridge).chain(cap.map(|(a, b)| (a + tail, b + tail))),
    )
}

/// `H(n,p)`: path `x₁…x_{n−p}` on `0..n−p`, then `K_p` on `n−p..n`, with the
/// bridge `{n−p−1, n−p}`.
pub fn h_family(n: usize, p: usize) -> Result<Graph> {
    if p == 0 || n <= p {
        return Err(Error::InvalidParameter(format!(
            "H family needs n > p >= 1, got n={n}, p={p}"
        )));
    }
    path_with_cap(n, p, (0..p).flat_map(|u| (u + 1..p).map(move |v| (u, v))))
}

/// `F(n,p)`: path `x₁…x_{n−p}` on `0..n−p`, then `C_p` on `n−p..n`, with the
/// bridge `{n−p−1, n−p}`.
pub fn f_family(n: usize, p: usize) -> Result<Graph> {
    if p < 3 || n <= p {
        return Err(Error::InvalidParameter(format!(
            "F family needs n > p >= 3, got n={n}, p={p}"
        )));
    }
    path_with_cap(n, p, (0..p).map(|v| (v, (v + 1) % p)))
}

/// Length of `g` if it is a cycle (connected, loopless, 2-regular).
pub fn cycle_length(g: &Graph) -> Option<usize> {
    let n = g.order();
    if n < 3 || g.edge_count() != n || g.vertices().any(|v| g.has_loop(v) || g.degree(v) != 2) {
        return None;
    }
    // 2-regular with n edges is a disjoint union of cycles; walk one of them.
    let (mut prev, mut cur, mut steps) = (0, g.neighbors(0)[0], 1);
    while cur != 0 {
        let next = g.neighbors(cur).iter().copied().find(|&w| w != prev)?;
        prev = cur;
        cur = next;
        steps += 1;
    }
    (steps == n).then_some(n)
}

/// Part sizes if `g` is loopless complete multipartite with at least two
/// parts, in order of each part's smallest vertex.
pub fn multipartite_parts(g: &Graph) -> Option<Vec<usize>> {
    let n = g.order();
    if g.vertices().any(|v| g.has_loop(v)) {
        return None;
    }
    // Non-adjacency must be an equivalence relation.
    let mut part = vec![usize::MAX; n];
    let mut sizes = Vec::new();
    for v in 0..n {
        if part[v] != usize::MAX {
            continue;
        }
        let id = sizes.len();
        let members: Vec<_> = (v..n).filter(|&w| w == v || !g.has_edge(v, w)).collect();
        for &w in &members {
            if part[w] != usize::MAX {
                return None;
            }
            part[w] = id;
        }
        sizes.push(members.len());
    }
    let complete_between = (0..n).all(|u| (u + 1..n).all(|v| (part[u] == part[v]) != g.has_edge(u, v)));
    (complete_between && sizes.len() >= 2).then_some(sizes)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_counts() {
        for n in 1..8 {
            assert_eq!(path(n).unwrap().edge_count(), n - 1);
            assert_eq!(complete(n, false).unwrap().edge_count(), n * (n - 1) / 2);
            assert_eq!(complete(n, true).unwrap().edge_count(), n * (n - 1) / 2 + n);
        }
        for n in 3..8 {
            assert_eq!(cycle(n).unwrap().edge_count(), n);
        }
    }

    #[test]
    fn degenerate_members() {
        let k1 = path(1).unwrap();
        assert_eq!((k1.order(), k1.edge_count(), k1.has_loop(0)), (1, 0, false));
        assert_eq!(path(2).unwrap(), complete(2, false).unwrap());
        let k1_plus = complete(1, true).unwrap();
        assert!(k1_plus.has_loop(0) && k1_plus.is_complete_with_loops());
    }

    #[test]
    fn rejects_invalid_parameters() {
        assert!(path(0).is_err());
        assert!(cycle(2).is_err());
        assert!(complete(0, true).is_err());
        assert!(complete_multipartite(&[3]).is_err());
        assert!(complete_multipartite(&[2, 0, 1]).is_err());
        assert!(h_family(3, 3).is_err());
        assert!(h_family(3, 0).is_err());
        assert!(f_family(4, 2).is_err());
        assert!(f_family(5, 5).is_err());
    }

    #[test]
    fn multipartite_examples() {
        assert_eq!(complete_multipartite(&[1, 1, 1]).unwrap(), complete(3, false).unwrap());
        let k22 = complete_multipartite(&[2, 2]).unwrap();
        assert_eq!(cycle_length(&k22), Some(4));
        let k211 = complete_multipartite(&[2, 1, 1]).unwrap();
        assert_eq!((k211.order(), k211.edge_count()), (4, 5));
        assert_eq!(multipartite_parts(&k211), Some(vec![2, 1, 1]));
        assert_eq!(multipartite_parts(&path(4).unwrap()), None);
        assert_eq!(multipartite_parts(&complete(4, false).unwrap()), Some(vec![1; 4]));
    }

    #[test]
    fn family_layout() {
        let h = h_family(5, 3).unwrap();
        let expected = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (2, 4), (3, 4)]).unwrap();
        assert_eq!(h, expected);
        // F(5,3) has the same shape as H(5,3) since C₃ = K₃.
        assert_eq!(f_family(5, 3).unwrap(), expected);
        let h43 = h_family(4, 3).unwrap();
        assert_eq!(h43.degree(0), 1);
        assert_eq!(h43.edge_count(), 4);
        let f85 = f_family(8, 5).unwrap();
        assert_eq!((f85.order(), f85.edge_count()), (8, 8));
        assert_eq!(cycle_length(&f85), None);
        assert_eq!(cycle_length(&cycle(7).unwrap()), Some(7));
    }

    #[test]
    fn cycle_recognizer_rejects_unions() {
        let two_triangles = Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert_eq!(cycle_length(&two_triangles), None);
    }
}
