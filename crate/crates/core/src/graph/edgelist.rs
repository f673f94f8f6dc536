//! Plain-text edge lists.
//!
//! ```text
//! # comment
//! n 3
//! 0 1
//! 1 2
//! 2 2
//! ```
//!
//! The header `n <order>` is the first non-blank, non-comment line. Each
//! following line is one undirected edge `u v`; `u u` is a loop. Listing an
//! edge twice (in either orientation) is an error.

use std::fmt::Write;

use super::Graph;
use crate::{Error, Result};

fn parse_index(token: &str, line: usize) -> Result<usize> {
    token.parse().map_err(|_| Error::Parse {
        line,
        message: format!("expected a vertex index, got `{token}`"),
    })
}

pub fn parse(text: &str) -> Result<Graph> {
    let mut order = None;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.trim();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = content.split_whitespace().collect();
        match (order, tokens.as_slice()) {
            (None, ["n", k]) => {
                let k = parse_index(k, line)?;
                if k == 0 {
                    return Err(Error::Parse {
                        line,
                        message: "order must be positive".into(),
                    });
                }
                order = Some(k);
            }
            (None, _) => {
                return Err(Error::Parse {
                    line,
                    message: "expected header `n <order>`".into(),
                });
            }
            (Some(n), [u, v]) => {
                let (u, v) = (parse_index(u, line)?, parse_index(v, line)?);
                if u >= n || v >= n {
                    return Err(Error::Parse {
                        line,
                        message: format!("vertex out of range for order {n}"),
                    });
                }
                edges.push((line, u, v));
            }
            (Some(_), _) => {
                return Err(Error::Parse {
                    line,
                    message: "expected `u v`".into(),
                });
            }
        }
    }
    let n = order.ok_or(Error::Parse {
        line: 0,
        message: "missing header `n <order>`".into(),
    })?;
    let mut seen = std::collections::HashSet::new();
    for &(line, u, v) in &edges {
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(Error::Parse {
                line,
                message: format!("duplicate edge {u} {v}"),
            });
        }
    }
    Graph::from_edges(n, edges.into_iter().map(|(_, u, v)| (u, v)))
}

/// Header plus one `u v` line per edge with `u <= v`, in sorted order.
pub fn write(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.order());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_comments_and_loops() {
        let g = parse("# triangle with a loop\n\nn 3\n0 1\n1 2\n# mid\n2 0\n1 1\n").unwrap();
        assert_eq!(g.order(), 3);
        assert_eq!(g.edge_count(), 4);
        assert!(g.has_loop(1));
        assert_eq!(write(&g), "n 3\n0 1\n0 2\n1 1\n1 2\n");
    }

    #[test]
    fn reports_errors_with_lines() {
        assert!(matches!(parse("0 1\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse("n 2\n0 1\n1 0\n"), Err(Error::Parse { line: 3, .. })));
        assert!(matches!(parse("n 2\n0 2\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse("n 2\n0 x\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse("n 2\n0 1 1\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse("n 0\n"), Err(Error::Parse { line: 1, .. })));
        assert!(parse("# nothing\n").is_err());
    }

    proptest! {
        #[test]
        fn round_trips(n in 1usize..8, bits in proptest::collection::vec(any::<bool>(), 36)) {
            let pairs = (0..n).flat_map(|u| (u..n).map(move |v| (u, v)));
            let edges: Vec<_> = pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e).collect();
            let g = Graph::from_edges(n, edges).unwrap();
            prop_assert_eq!(parse(&write(&g)).unwrap(), g);
        }
    }
}
