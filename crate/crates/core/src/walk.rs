//! Parity-aware shortest walks, distances and primitive exponents.
//!
//! Shortest odd and even walks come from breadth-first search on the
//! bipartite double cover: each vertex `v` is split into an even state and an
//! odd state, and an edge `{u, v}` joins the even state of one endpoint to the
//! odd state of the other.

use crate::bitset::BitSet;
use crate::length::{ExtLen, Finite, Infinite};
use crate::{Graph, VertexId};

/// Row-major `n × n` table of lengths.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LenMatrix {
    order: usize,
    data: Vec<ExtLen>,
}

impl LenMatrix {
    fn filled(order: usize, value: ExtLen) -> Self {
        Self {
            order,
            data: vec![value; order * order],
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn get(&self, u: VertexId, v: VertexId) -> ExtLen {
        self.data[u * self.order + v]
    }

    #[inline]
    fn set(&mut self, u: VertexId, v: VertexId, value: ExtLen) {
        self.data[u * self.order + v] = value;
    }

    pub fn row(&self, u: VertexId) -> &[ExtLen] {
        &self.data[u * self.order..(u + 1) * self.order]
    }

    pub fn max(&self) -> ExtLen {
        self.data.iter().copied().max().unwrap_or(Finite(0))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(k: usize) -> Parity {
        if k.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn flip(self) -> Parity {
        match self {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
        }
    }
}

/// Shortest odd and shortest positive even walk lengths for every ordered
/// pair. The empty walk is not counted, so `even(v, v)` is 2 when `v` has any
/// incident edge and infinite otherwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParityDistances {
    odd: LenMatrix,
    even: LenMatrix,
}

impl ParityDistances {
    pub fn order(&self) -> usize {
        self.odd.order
    }

    pub fn odd(&self, u: VertexId, v: VertexId) -> ExtLen {
        self.odd.get(u, v)
    }

    pub fn even(&self, u: VertexId, v: VertexId) -> ExtLen {
        self.even.get(u, v)
    }

    pub fn get(&self, parity: Parity, u: VertexId, v: VertexId) -> ExtLen {
        match parity {
            Parity::Odd => self.odd(u, v),
            Parity::Even => self.even(u, v),
        }
    }

    pub fn odd_matrix(&self) -> &LenMatrix {
        &self.odd
    }

    pub fn even_matrix(&self) -> &LenMatrix {
        &self.even
    }
}

pub(crate) fn neighbor_masks(g: &Graph) -> Vec<BitSet> {
    g.vertices()
        .map(|v| {
            let mut mask = BitSet::new(g.order());
            g.neighbors(v).iter().for_each(|&w| mask.insert(w));
            mask
        })
        .collect()
}

pub fn parity_distances(g: &Graph) -> ParityDistances {
    let n = g.order();
    let masks = neighbor_masks(g);
    let mut odd = LenMatrix::filled(n, Infinite);
    let mut even = LenMatrix::filled(n, Infinite);

    let mut seen = [BitSet::new(n), BitSet::new(n)];
    let mut frontier = [BitSet::new(n), BitSet::new(n)];
    let mut next = [BitSet::new(n), BitSet::new(n)];
    for source in 0..n {
        // index 0: even state, index 1: odd state
        for set in seen.iter_mut().chain(frontier.iter_mut()) {
            set.clear();
        }
        seen[0].insert(source);
        frontier[0].insert(source);
        let mut depth = 0;
        while !(frontier[0].is_empty() && frontier[1].is_empty()) {
            depth += 1;
            for state in 0..2 {
                next[1 - state].clear();
                for v in frontier[state].iter() {
                    next[1 - state].union_with(&masks[v]);
                }
            }
            for state in 0..2 {
                next[state].difference_with(&seen[state]);
                seen[state].union_with(&next[state]);
                let table = if state == 0 { &mut even } else { &mut odd };
                for v in next[state].iter() {
                    table.set(source, v, Finite(depth));
                }
            }
            std::mem::swap(&mut frontier, &mut next);
        }
        let closed = if g.neighbors(source).is_empty() {
            Infinite
        } else {
            Finite(2)
        };
        even.set(source, source, closed);
    }
    ParityDistances { odd, even }
}

/// Single-source BFS distances using neighbor bitsets.
fn bfs_row(masks: &[BitSet], source: VertexId, row: &mut [ExtLen]) {
    let n = masks.len();
    row.iter_mut().for_each(|d| *d = Infinite);
    let mut seen = BitSet::new(n);
    let mut frontier = BitSet::new(n);
    let mut next = BitSet::new(n);
    seen.insert(source);
    frontier.insert(source);
    row[source] = Finite(0);
    let mut depth = 0;
    while !frontier.is_empty() {
        depth += 1;
        next.clear();
        for v in frontier.iter() {
            next.union_with(&masks[v]);
        }
        next.difference_with(&seen);
        seen.union_with(&next);
        for v in next.iter() {
            row[v] = Finite(depth);
        }
        std::mem::swap(&mut frontier, &mut next);
    }
}

/// All-pairs graph distances, `d(v, v) = 0`.
pub fn distance_matrix(g: &Graph) -> LenMatrix {
    let n = g.order();
    let masks = neighbor_masks(g);
    let mut dist = LenMatrix::filled(n, Infinite);
    for source in 0..n {
        bfs_row(&masks, source, &mut dist.data[source * n..(source + 1) * n]);
    }
    dist
}

/// Largest pairwise distance; infinite iff `g` is disconnected. `d(K₁) = 0`.
pub fn diameter(g: &Graph) -> ExtLen {
    let n = g.order();
    let masks = neighbor_masks(g);
    let mut row = vec![Infinite; n];
    let mut best = Finite(0);
    for source in 0..n {
        bfs_row(&masks, source, &mut row);
        for &d in &row {
            if d == Infinite {
                return Infinite;
            }
            best = best.max(d);
        }
    }
    best
}

/// Distances from `source` only.
pub fn distances_from(g: &Graph, source: VertexId) -> Vec<ExtLen> {
    let mut row = vec![Infinite; g.order()];
    bfs_row(&neighbor_masks(g), source, &mut row);
    row
}

pub fn is_connected(g: &Graph) -> bool {
    distances_from(g, 0).iter().all(|d| d.is_finite())
}

/// Two-coloring check; a loop makes a graph non-bipartite.
pub fn is_bipartite(g: &Graph) -> bool {
    let mut color: Vec<Option<bool>> = vec![None; g.order()];
    let mut stack = Vec::new();
    for root in g.vertices() {
        if color[root].is_some() {
            continue;
        }
        color[root] = Some(false);
        stack.push(root);
        while let Some(v) = stack.pop() {
            let side = color[v].unwrap();
            for &w in g.neighbors(v) {
                match color[w] {
                    None => {
                        color[w] = Some(!side);
                        stack.push(w);
                    }
                    Some(c) if c == side => return false,
                    Some(_) => {}
                }
            }
        }
    }
    true
}

/// Length of a shortest odd cycle (a loop has length 1); infinite for
/// bipartite graphs. A shortest odd closed walk is always an odd cycle.
pub fn odd_girth(g: &Graph) -> ExtLen {
    odd_girth_from(&parity_distances(g))
}

pub fn odd_girth_from(pd: &ParityDistances) -> ExtLen {
    (0..pd.order()).map(|v| pd.odd(v, v)).min().unwrap_or(Infinite)
}

/// Connected and contains an odd cycle.
pub fn is_primitive(g: &Graph) -> bool {
    is_connected(g) && !is_bipartite(g)
}

/// Least `k` such that `(u, v)`-walks of every length `>= k` exist.
///
/// Walks of a fixed parity exist at every length from the shortest one
/// upward (repeat any edge back and forth), so with odd minimum `o` and even
/// minimum `e` the answer is `max(o, e) - 1`: the length just below the
/// larger minimum has the other parity and is covered, the one below that is
/// not.
pub fn local_exponent(pd: &ParityDistances, u: VertexId, v: VertexId) -> ExtLen {
    match (pd.odd(u, v), pd.even(u, v)) {
        (Finite(o), Finite(e)) => Finite(o.max(e) - 1),
        _ => Infinite,
    }
}

/// Primitive exponent together with the per-pair table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExponentReport {
    pub gamma: ExtLen,
    /// First pair in row-major order attaining `gamma`, when finite.
    pub witness_pair: Option<(VertexId, VertexId)>,
    pub local: LenMatrix,
}

pub fn exponent(g: &Graph) -> ExponentReport {
    exponent_from(&parity_distances(g))
}

pub fn exponent_from(pd: &ParityDistances) -> ExponentReport {
    let n = pd.order();
    let mut local = LenMatrix::filled(n, Infinite);
    let mut gamma = Finite(0);
    let mut witness_pair = None;
    for u in 0..n {
        for v in 0..n {
            let value = local_exponent(pd, u, v);
            local.set(u, v, value);
            if value > gamma || witness_pair.is_none() {
                gamma = value;
                witness_pair = Some((u, v));
            }
        }
    }
    if gamma == Infinite {
        witness_pair = None;
    }
    ExponentReport {
        gamma,
        witness_pair,
        local,
    }
}
