use crate::Graph;

/// Graph isomorphism by backtracking with degree and loop pruning. Intended
/// for the small graphs the harness deals with.
pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.order() != b.order() || a.edge_count() != b.edge_count() || a.loop_count() != b.loop_count() {
        return false;
    }
    let signature = |g: &Graph, v| (g.degree(v), g.has_loop(v));
    let mut sa: Vec<_> = a.vertices().map(|v| signature(a, v)).collect();
    let mut sb: Vec<_> = b.vertices().map(|v| signature(b, v)).collect();
    sa.sort_unstable();
    sb.sort_unstable();
    if sa != sb {
        return false;
    }
    let mut map = vec![usize::MAX; a.order()];
    let mut used = vec![false; b.order()];
    extend(a, b, 0, &mut map, &mut used)
}

fn extend(a: &Graph, b: &Graph, u: usize, map: &mut [usize], used: &mut [bool]) -> bool {
    if u == a.order() {
        return true;
    }
    for w in b.vertices() {
        if used[w] || a.degree(u) != b.degree(w) || a.has_loop(u) != b.has_loop(w) {
            continue;
        }
        if (0..u).any(|x| a.has_edge(u, x) != b.has_edge(w, map[x])) {
            continue;
        }
        map[u] = w;
        used[w] = true;
        if extend(a, b, u + 1, map, used) {
            return true;
        }
        used[w] = false;
    }
    map[u] = usize::MAX;
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn relabeled_graphs_are_isomorphic() {
        let g = families::h_family(6, 3).unwrap();
        let h = g.relabeled(&[5, 3, 1, 0, 2, 4]).unwrap();
        assert!(is_isomorphic(&g, &h));
    }

    #[test]
    fn distinguishes_same_degree_sequences() {
        let c6 = families::cycle(6).unwrap();
        let two_triangles = Graph::from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert!(!is_isomorphic(&c6, &two_triangles));
        assert!(is_isomorphic(&c6, &c6));
    }

    #[test]
    fn loops_matter() {
        let a = Graph::from_edges(2, [(0, 1), (0, 0)]).unwrap();
        let b = Graph::from_edges(2, [(0, 1), (1, 1)]).unwrap();
        let c = Graph::from_edges(2, [(0, 1)]).unwrap();
        assert!(is_isomorphic(&a, &b));
        assert!(!is_isomorphic(&a, &c));
    }
}
