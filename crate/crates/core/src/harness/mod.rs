//! Brute-force campaigns over graph ensembles.
//!
//! Each claim binds a closed-form statement to a checker that compares it
//! with ground truth computed on the explicitly constructed graphs (BFS,
//! double-cover BFS or boolean matrix powers). A campaign runs a list of
//! claims over one ensemble; the first failing instance of each claim is
//! reported together with a greedily minimized copy.

mod claims;
mod iso;
mod minimize;

use std::cell::OnceCell;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Serialize, Serializer};

use crate::cycles::{l_o_bound, CycleBoundReport, DEFAULT_CYCLE_CAP};
use crate::families::Family;
use crate::generate::{enumerate_graphs_capped, random_graph};
use crate::predict::{summarize_with, FactorSummary};
use crate::walk::{parity_distances, ParityDistances};
use crate::{edgelist, Error, Graph, Result};

pub use claims::{checker, claim_ids, describe_claim, Checker};
pub use iso::is_isomorphic;
pub use minimize::{minimize_counterexample, minimize_with};

/// All labeled graphs of order `min_order..=max_order`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExhaustiveSpec {
    pub min_order: usize,
    pub max_order: usize,
    pub loops: bool,
}

/// `count` seeded random graphs with orders drawn uniformly from
/// `min_order..=max_order`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RandomSpec {
    pub count: usize,
    pub min_order: usize,
    pub max_order: usize,
    pub loops: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EnsembleSpec {
    pub exhaustive: Option<ExhaustiveSpec>,
    pub random: Option<RandomSpec>,
    pub cycle_cap: usize,
}

/// Order limit for exhaustive ensembles (loopless order 6 already has 2^15
/// graphs per order).
pub const EXHAUSTIVE_ORDER_LIMIT: usize = 6;
pub const RANDOM_ORDER_LIMIT: usize = 10;
pub const DEFAULT_RANDOM_COUNT: usize = 500;
pub const DEFAULT_SEED: u64 = 20_241_014;

impl Default for EnsembleSpec {
    fn default() -> Self {
        Self {
            exhaustive: Some(ExhaustiveSpec {
                min_order: 1,
                max_order: 4,
                loops: true,
            }),
            random: None,
            cycle_cap: DEFAULT_CYCLE_CAP,
        }
    }
}

impl EnsembleSpec {
    pub fn exhaustive(max_order: usize, loops: bool) -> Self {
        Self {
            exhaustive: Some(ExhaustiveSpec {
                min_order: 1,
                max_order,
                loops,
            }),
            random: None,
            cycle_cap: DEFAULT_CYCLE_CAP,
        }
    }

    pub fn random(count: usize, max_order: usize, loops: bool) -> Self {
        Self {
            exhaustive: None,
            random: Some(RandomSpec {
                count,
                min_order: 1,
                max_order,
                loops,
            }),
            cycle_cap: DEFAULT_CYCLE_CAP,
        }
    }

    pub fn with_random(mut self, random: RandomSpec) -> Self {
        self.random = Some(random);
        self
    }

    fn validate(&self) -> Result<()> {
        if let Some(ex) = &self.exhaustive {
            if ex.min_order == 0 || ex.min_order > ex.max_order || ex.max_order > EXHAUSTIVE_ORDER_LIMIT {
                return Err(Error::InvalidParameter(format!(
                    "exhaustive orders must satisfy 1 <= min <= max <= {EXHAUSTIVE_ORDER_LIMIT}"
                )));
            }
            if ex.loops && ex.max_order > 5 {
                return Err(Error::InvalidParameter(
                    "exhaustive ensembles with loops stop at order 5".into(),
                ));
            }
        }
        if let Some(r) = &self.random {
            if r.min_order == 0 || r.min_order > r.max_order || r.max_order > RANDOM_ORDER_LIMIT {
                return Err(Error::InvalidParameter(format!(
                    "random orders must satisfy 1 <= min <= max <= {RANDOM_ORDER_LIMIT}"
                )));
            }
        }
        if self.cycle_cap == 0 {
            return Err(Error::InvalidParameter("cycle cap must be positive".into()));
        }
        Ok(())
    }
}

/// A graph with the metrics every checker needs, computed once.
pub struct Analyzed {
    pub graph: Graph,
    pub parity: ParityDistances,
    pub summary: FactorSummary,
    /// Family parameters, when the graph was built as a family member.
    pub family: Option<Family>,
    cycle_cap: usize,
    cycle_bound: OnceCell<Option<CycleBoundReport>>,
}

impl Analyzed {
    pub fn new(graph: Graph, family: Option<Family>, cycle_cap: usize) -> Self {
        let parity = parity_distances(&graph);
        let summary = summarize_with(&graph, &parity);
        Self {
            graph,
            parity,
            summary,
            family,
            cycle_cap,
            cycle_bound: OnceCell::new(),
        }
    }

    /// Cycle bound, or `None` for a disconnected graph.
    pub fn cycle_bound(&self) -> Option<&CycleBoundReport> {
        self.cycle_bound
            .get_or_init(|| l_o_bound(&self.graph, self.cycle_cap).ok())
            .as_ref()
    }
}

/// Materialized ensemble.
pub struct Ensemble {
    pub graphs: Vec<Analyzed>,
    cycle_cap: usize,
}

impl Ensemble {
    pub fn build(spec: &EnsembleSpec, seed: u64) -> Result<Self> {
        spec.validate()?;
        let mut graphs = Vec::new();
        if let Some(ex) = &spec.exhaustive {
            for n in ex.min_order..=ex.max_order {
                for g in enumerate_graphs_capped(n, ex.loops, EXHAUSTIVE_ORDER_LIMIT)? {
                    graphs.push(Analyzed::new(g, None, spec.cycle_cap));
                }
            }
        }
        if let Some(r) = &spec.random {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..r.count {
                let n = rng.random_range(r.min_order..=r.max_order);
                let edge_prob = rng.random_range(0.25..0.85);
                let loop_prob = if r.loops { rng.random_range(0.0..0.5) } else { 0.0 };
                let g = random_graph(n, edge_prob, loop_prob, rng.random())?;
                graphs.push(Analyzed::new(g, None, spec.cycle_cap));
            }
        }
        Ok(Self {
            graphs,
            cycle_cap: spec.cycle_cap,
        })
    }

    pub fn len(&self) -> usize {
        self.graphs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.graphs.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub expected: String,
    pub actual: String,
    pub detail: String,
}

/// Result of checking one instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// The instance falls outside the claim's hypotheses.
    Skip,
    Pass,
    Fail(Failure),
}

fn serialize_graphs<S: Serializer>(graphs: &[Graph], serializer: S) -> std::result::Result<S::Ok, S::Error> {
    serializer.collect_seq(graphs.iter().map(edgelist::write))
}

/// A failing instance. Factors serialize as edge-list text.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub claim_id: String,
    #[serde(serialize_with = "serialize_graphs")]
    pub factors: Vec<Graph>,
    pub expected: String,
    pub actual: String,
    pub detail: String,
}

impl Counterexample {
    fn new(claim_id: &str, factors: Vec<Graph>, failure: Failure) -> Self {
        Self {
            claim_id: claim_id.to_string(),
            factors,
            expected: failure.expected,
            actual: failure.actual,
            detail: failure.detail,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckOutcome {
    pub claim_id: String,
    pub instances_checked: usize,
    pub pass: bool,
    pub counterexample: Option<Counterexample>,
    pub minimized: Option<Counterexample>,
    #[serde(skip)]
    pub elapsed: Duration,
}

/// JSON campaign report. Timing is deliberately excluded so re-runs are
/// byte-identical.
#[derive(Clone, Debug, Serialize)]
pub struct CampaignReport {
    pub seed: u64,
    pub ensemble: EnsembleSpec,
    pub graphs: usize,
    pub pass: bool,
    pub claims: Vec<CheckOutcome>,
}

/// Expands `"all"` and rejects unknown ids.
pub fn resolve_claims<S: AsRef<str>>(ids: &[S]) -> Result<Vec<&'static str>> {
    let mut out = Vec::new();
    for id in ids {
        let id = id.as_ref();
        if id == "all" {
            out.extend(claim_ids());
        } else {
            let known = claim_ids()
                .find(|c| *c == id)
                .ok_or_else(|| Error::UnknownClaim(id.to_string()))?;
            out.push(known);
        }
    }
    let mut seen = std::collections::HashSet::new();
    out.retain(|id| seen.insert(*id));
    Ok(out)
}

/// Runs every claim over the ensemble. Deterministic for a fixed seed.
pub fn run_campaign<S: AsRef<str>>(claim_list: &[S], spec: &EnsembleSpec, seed: u64) -> Result<Vec<CheckOutcome>> {
    let ids = resolve_claims(claim_list)?;
    let ensemble = Ensemble::build(spec, seed)?;
    Ok(ids.into_iter().map(|id| run_claim(id, &ensemble)).collect())
}

pub fn campaign_report<S: AsRef<str>>(claim_list: &[S], spec: &EnsembleSpec, seed: u64) -> Result<CampaignReport> {
    let ids = resolve_claims(claim_list)?;
    let ensemble = Ensemble::build(spec, seed)?;
    let claims: Vec<_> = ids.into_iter().map(|id| run_claim(id, &ensemble)).collect();
    Ok(CampaignReport {
        seed,
        ensemble: spec.clone(),
        graphs: ensemble.len(),
        pass: claims.iter().all(|c| c.pass),
        claims,
    })
}

/// Runs a single known claim over a prebuilt ensemble.
pub fn run_claim(id: &str, ensemble: &Ensemble) -> CheckOutcome {
    let start = Instant::now();
    let claim = claims::lookup(id).expect("claim ids are resolved before running");
    let mut pool = claims::Pool::new(&ensemble.graphs, ensemble.cycle_cap);
    let plan = (claim.select)(&mut pool);
    let mut checked = 0;
    let mut failure = None;
    plan.for_each(|instance| {
        let factors: Vec<&Analyzed> = instance.iter().map(|&i| pool.get(i)).collect();
        match (claim.check)(&factors) {
            Verdict::Skip => true,
            Verdict::Pass => {
                checked += 1;
                true
            }
            Verdict::Fail(f) => {
                checked += 1;
                failure = Some(Counterexample::new(
                    id,
                    factors.iter().map(|a| a.graph.clone()).collect(),
                    f,
                ));
                false
            }
        }
    });
    let minimized = failure
        .as_ref()
        .map(|cx| minimize_with(cx, claim.check, ensemble.cycle_cap));
    CheckOutcome {
        claim_id: id.to_string(),
        instances_checked: checked,
        pass: failure.is_none(),
        counterexample: failure,
        minimized,
        elapsed: start.elapsed(),
    }
}
