//! Odd cycles and the cycle-based upper bound on the primitive exponent.
//!
//! For an odd cycle `C`, `dᵒ(C)` is the largest distance from a vertex off
//! `C` to `C` (zero when every vertex lies on `C`). The bound is
//! `lᵒ(G) = min over odd cycles C of 2·dᵒ(C) + |C| − 1`, infinite for
//! bipartite graphs. A loop is an odd cycle of length 1.

use std::collections::VecDeque;

use serde::Serialize;

use crate::length::{ExtLen, Finite, Infinite};
use crate::walk::is_connected;
use crate::{Error, Graph, Result, VertexId};

pub const DEFAULT_CYCLE_CAP: usize = 100_000;

/// Cyclically ordered distinct vertices; odd length, 1 for a loop.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct OddCycle {
    vertices: Vec<VertexId>,
}

impl OddCycle {
    pub fn new(g: &Graph, vertices: Vec<VertexId>) -> Result<Self> {
        let len = vertices.len();
        if len.is_multiple_of(2) {
            return Err(Error::InvalidCycle(format!("length {len} is even")));
        }
        if let Some(&v) = vertices.iter().find(|&&v| v >= g.order()) {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                order: g.order(),
            });
        }
        let mut sorted = vertices.clone();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidCycle("repeated vertex".into()));
        }
        for i in 0..len {
            let (u, v) = (vertices[i], vertices[(i + 1) % len]);
            if !g.has_edge(u, v) {
                return Err(Error::InvalidCycle(format!("{u} and {v} are not adjacent")));
            }
        }
        Ok(Self { vertices })
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

/// `dᵒ(C)`: the largest distance from a vertex outside `C` to `C`.
pub fn eccentricity_to_cycle(g: &Graph, cycle: &OddCycle) -> Result<usize> {
    let c = OddCycle::new(g, cycle.vertices.clone())?;
    let mut dist = vec![usize::MAX; g.order()];
    let mut queue = VecDeque::new();
    for &v in c.vertices() {
        dist[v] = 0;
        queue.push_back(v);
    }
    while let Some(v) = queue.pop_front() {
        for &w in g.neighbors(v) {
            if dist[w] == usize::MAX {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    if dist.contains(&usize::MAX) {
        return Err(Error::Disconnected);
    }
    Ok(dist.into_iter().max().unwrap_or(0))
}

/// DFS enumeration of simple odd cycles, each once up to rotation and
/// reflection.
///
/// Every cycle is found from its least vertex (the anchor) by extending
/// paths through larger vertices only; a path with an odd number of vertices
/// whose last vertex is adjacent to the anchor closes a cycle. Requiring the
/// second vertex to be smaller than the last drops the mirrored copy. Loops
/// come out as length-1 cycles when their anchor is reached.
pub struct OddCycles<'g> {
    g: &'g Graph,
    cap: usize,
    emitted: usize,
    truncated: Option<bool>,
    anchor: VertexId,
    path: Vec<VertexId>,
    cursor: Vec<usize>,
    on_path: Vec<bool>,
}

pub fn enumerate_odd_cycles(g: &Graph, cap: usize) -> OddCycles<'_> {
    OddCycles {
        g,
        cap,
        emitted: 0,
        truncated: None,
        anchor: 0,
        path: Vec::new(),
        cursor: Vec::new(),
        on_path: vec![false; g.order()],
    }
}

impl OddCycles<'_> {
    /// Whether enumeration stopped at the cap with cycles left over. Only
    /// meaningful once the iterator is exhausted.
    pub fn truncated(&self) -> bool {
        self.truncated.unwrap_or(false)
    }

    fn advance(&mut self) -> Option<OddCycle> {
        let g = self.g;
        loop {
            if self.path.is_empty() {
                if self.anchor >= g.order() {
                    return None;
                }
                let a = self.anchor;
                self.path.push(a);
                self.cursor.push(0);
                self.on_path[a] = true;
                if g.has_loop(a) {
                    return Some(OddCycle { vertices: vec![a] });
                }
                continue;
            }
            let depth = self.path.len() - 1;
            let v = self.path[depth];
            if let Some(&w) = g.neighbors(v).get(self.cursor[depth]) {
                self.cursor[depth] += 1;
                if w <= self.anchor || self.on_path[w] {
                    continue;
                }
                self.path.push(w);
                self.cursor.push(0);
                self.on_path[w] = true;
                let len = self.path.len();
                if len >= 3 && len % 2 == 1 && self.path[1] < w && g.has_edge(w, self.anchor) {
                    return Some(OddCycle {
                        vertices: self.path.clone(),
                    });
                }
            } else {
                self.on_path[v] = false;
                self.path.pop();
                self.cursor.pop();
                if self.path.is_empty() {
                    self.anchor += 1;
                }
            }
        }
    }
}

impl Iterator for OddCycles<'_> {
    type Item = OddCycle;

    fn next(&mut self) -> Option<OddCycle> {
        if self.emitted >= self.cap {
            if self.truncated.is_none() {
                self.truncated = Some(self.advance().is_some());
            }
            return None;
        }
        let found = self.advance();
        match found {
            Some(_) => self.emitted += 1,
            None => self.truncated = Some(false),
        }
        found
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CycleBoundReport {
    pub l_o: ExtLen,
    pub best_cycle: Option<OddCycle>,
    /// False when the enumeration hit its cap; `l_o` is then still an upper
    /// bound on the exponent, just not necessarily the minimum.
    pub exact: bool,
}

pub fn l_o_bound(g: &Graph, cap: usize) -> Result<CycleBoundReport> {
    if !is_connected(g) {
        return Err(Error::Disconnected);
    }
    let mut cycles = enumerate_odd_cycles(g, cap);
    let mut best: Option<(usize, OddCycle)> = None;
    for c in cycles.by_ref() {
        let value = 2 * eccentricity_to_cycle(g, &c)? + c.len() - 1;
        if best.as_ref().is_none_or(|(b, _)| value < *b) {
            best = Some((value, c));
        }
    }
    let exact = !cycles.truncated();
    Ok(match best {
        Some((value, c)) => CycleBoundReport {
            l_o: Finite(value),
            best_cycle: Some(c),
            exact,
        },
        None => CycleBoundReport {
            l_o: Infinite,
            best_cycle: None,
            exact,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, cycle, f_family, h_family};

    #[test]
    fn enumeration_examples() {
        assert_eq!(enumerate_odd_cycles(&cycle(4).unwrap(), 10).count(), 0);
        assert_eq!(enumerate_odd_cycles(&complete(4, false).unwrap(), 10).count(), 4);
        let c5: Vec<_> = enumerate_odd_cycles(&cycle(5).unwrap(), 10).collect();
        assert_eq!(c5.len(), 1);
        assert_eq!(c5[0].len(), 5);
        let looped = enumerate_odd_cycles(&complete(2, true).unwrap(), 10).count();
        assert_eq!(looped, 2);
    }

    #[test]
    fn truncation_is_flagged() {
        let k5 = complete(5, false).unwrap();
        let mut it = enumerate_odd_cycles(&k5, 3);
        assert_eq!(it.by_ref().count(), 3);
        assert!(it.truncated());
        // K₅: 10 triangles and 12 five-cycles.
        let mut it = enumerate_odd_cycles(&k5, 22);
        assert_eq!(it.by_ref().count(), 22);
        assert!(!it.truncated());
    }

    #[test]
    fn eccentricities() {
        let c5 = cycle(5).unwrap();
        let whole = OddCycle::new(&c5, vec![0, 1, 2, 3, 4]).unwrap();
        assert_eq!(eccentricity_to_cycle(&c5, &whole).unwrap(), 0);

        let f = f_family(5, 3).unwrap();
        let tri = OddCycle::new(&f, vec![2, 3, 4]).unwrap();
        assert_eq!(eccentricity_to_cycle(&f, &tri).unwrap(), 2);

        let h = h_family(6, 3).unwrap();
        let tri = OddCycle::new(&h, vec![3, 4, 5]).unwrap();
        assert_eq!(eccentricity_to_cycle(&h, &tri).unwrap(), 3);
    }

    #[test]
    fn invalid_cycles_are_rejected() {
        let c5 = cycle(5).unwrap();
        assert!(OddCycle::new(&c5, vec![0, 1, 2]).is_err());
        assert!(OddCycle::new(&c5, vec![0, 1, 2, 3]).is_err());
        assert!(OddCycle::new(&c5, vec![0]).is_err());
        assert!(OddCycle::new(&c5, vec![0, 1, 0]).is_err());
        assert!(OddCycle::new(&c5, vec![0, 1, 9]).is_err());
    }

    #[test]
    fn bound_examples() {
        let r = l_o_bound(&cycle(5).unwrap(), DEFAULT_CYCLE_CAP).unwrap();
        assert_eq!((r.l_o, r.exact), (Finite(4), true));
        let r = l_o_bound(&f_family(5, 3).unwrap(), DEFAULT_CYCLE_CAP).unwrap();
        assert_eq!(r.l_o, Finite(6));
        let r = l_o_bound(&cycle(6).unwrap(), DEFAULT_CYCLE_CAP).unwrap();
        assert_eq!((r.l_o, r.best_cycle), (Infinite, None));
        let split = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(l_o_bound(&split, 10), Err(Error::Disconnected));
    }

    #[test]
    fn loop_contributes_twice_its_eccentricity() {
        // Path 0-1-2 with a loop at 0: 2·ecc(0) = 4.
        let g = Graph::from_edges(3, [(0, 0), (0, 1), (1, 2)]).unwrap();
        let r = l_o_bound(&g, 10).unwrap();
        assert_eq!(r.l_o, Finite(4));
        assert_eq!(r.best_cycle.unwrap().vertices(), &[0]);
    }
}
