use std::path::Path;

use anyhow::{bail, Context, Result};
use kronecker_diameter::families::{self, Family, FamilyKind};
use kronecker_diameter::{edgelist, Graph};

/// A resolved graph argument. Family members keep their parameters.
pub struct GraphArg {
    pub graph: Graph,
    pub family: Option<Family>,
}

fn numbers(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .with_context(|| format!("invalid number {t:?}"))
        })
        .collect()
}

fn one(name: &str, args: &[usize]) -> Result<usize> {
    match args {
        [n] => Ok(*n),
        _ => bail!("{name} takes exactly one parameter"),
    }
}

fn two(name: &str, args: &[usize]) -> Result<(usize, usize)> {
    match args {
        [n, p] => Ok((*n, *p)),
        _ => bail!("{name} takes two parameters n,p"),
    }
}

/// Parses a family expression such as `cycle:5` or `H:6,3`. Anything else
/// is read as an edge-list file.
pub fn resolve(arg: &str) -> Result<GraphArg> {
    if let Some((name, params)) = arg.split_once(':') {
        let family_graph = |g: kronecker_diameter::Result<Graph>| g.with_context(|| format!("invalid graph {arg:?}"));
        let plain = |graph| GraphArg { graph, family: None };
        let args = || numbers(params).with_context(|| format!("invalid graph {arg:?}"));
        match name {
            "path" => return Ok(plain(family_graph(families::path(one(name, &args()?)?))?)),
            "cycle" => return Ok(plain(family_graph(families::cycle(one(name, &args()?)?))?)),
            "complete" => return Ok(plain(family_graph(families::complete(one(name, &args()?)?, false))?)),
            "complete+" => return Ok(plain(family_graph(families::complete(one(name, &args()?)?, true))?)),
            "multipartite" => return Ok(plain(family_graph(families::complete_multipartite(&args()?))?)),
            "H" | "F" => {
                let (n, p) = two(name, &args()?)?;
                let kind = if name == "H" { FamilyKind::H } else { FamilyKind::F };
                let family = Family { kind, n, p };
                let graph = family_graph(family.build())?;
                return Ok(GraphArg {
                    graph,
                    family: Some(family),
                });
            }
            _ if !Path::new(arg).exists() => bail!("unknown graph family {name:?} and no such file {arg:?}"),
            _ => {}
        }
    }
    let text = std::fs::read_to_string(arg).with_context(|| format!("cannot read graph file {arg:?}"))?;
    let graph = edgelist::parse(&text).with_context(|| format!("invalid edge list in {arg:?}"))?;
    Ok(GraphArg { graph, family: None })
}
