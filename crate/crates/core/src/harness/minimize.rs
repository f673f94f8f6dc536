use super::claims::{checker, Checker};
use super::{Analyzed, Counterexample, Verdict};
use crate::cycles::DEFAULT_CYCLE_CAP;
use crate::Graph;

/// Shrinks a counterexample of a registered claim.
pub fn minimize_counterexample(cx: &Counterexample) -> Counterexample {
    match checker(&cx.claim_id) {
        Some(check) => minimize_with(cx, check, DEFAULT_CYCLE_CAP),
        None => cx.clone(),
    }
}

/// Greedy shrinking: repeatedly delete a vertex, then an edge, from any
/// factor while `check` still fails. Shrunk factors lose their family tags.
/// An input on which `check` does not fail is returned unchanged.
pub fn minimize_with(cx: &Counterexample, check: Checker, cycle_cap: usize) -> Counterexample {
    let run = |factors: &[Graph]| {
        let analyzed: Vec<Analyzed> = factors
            .iter()
            .map(|g| Analyzed::new(g.clone(), None, cycle_cap))
            .collect();
        let refs: Vec<&Analyzed> = analyzed.iter().collect();
        match check(&refs) {
            Verdict::Fail(f) => Some(f),
            _ => None,
        }
    };
    let mut factors = cx.factors.clone();
    let Some(mut failure) = run(&factors) else {
        return cx.clone();
    };
    while let Some((next, f)) = shrink_once(&factors, &run) {
        factors = next;
        failure = f;
    }
    Counterexample::new(&cx.claim_id, factors, failure)
}

fn shrink_once<F, T>(factors: &[Graph], run: &F) -> Option<(Vec<Graph>, T)>
where
    F: Fn(&[Graph]) -> Option<T>,
{
    let mut candidates: Vec<Vec<Graph>> = Vec::new();
    for (i, g) in factors.iter().enumerate() {
        for v in g.vertices() {
            if let Some(smaller) = g.without_vertex(v) {
                let mut next = factors.to_vec();
                next[i] = smaller;
                candidates.push(next);
            }
        }
    }
    for (i, g) in factors.iter().enumerate() {
        for (u, v) in g.edges() {
            let mut next = factors.to_vec();
            next[i] = g.without_edge(u, v);
            candidates.push(next);
        }
    }
    candidates.into_iter().find_map(|c| run(&c).map(|f| (c, f)))
}
