//! Acceptance suite. Prints one line per criterion and exits non-zero if
//! any criterion fails. Every comparison is exact.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use kronecker_diameter::families::{cycle, f_family, h_family, path};
use kronecker_diameter::harness::{
    checker, run_claim, Analyzed, Ensemble, EnsembleSpec, ExhaustiveSpec, RandomSpec, Verdict, DEFAULT_SEED,
};
use kronecker_diameter::kronecker::kronecker_product;
use kronecker_diameter::length::{ExtLen, Finite};
use kronecker_diameter::matrix::{adjacency, BoolMatrix};
use kronecker_diameter::walk::{diameter, exponent};
use kronecker_diameter::{generate, Graph};

type Criterion = (&'static str, fn() -> Outcome, u64);

struct Outcome {
    pass: bool,
    summary: String,
}

fn main_ensemble() -> Ensemble {
    let spec = EnsembleSpec::exhaustive(4, false).with_random(RandomSpec {
        count: 500,
        min_order: 1,
        max_order: 6,
        loops: true,
    });
    Ensemble::build(&spec, DEFAULT_SEED).expect("valid ensemble")
}

fn claim(id: &str, ensemble: &Ensemble) -> Outcome {
    let o = run_claim(id, ensemble);
    let summary = match &o.minimized {
        None => format!("{} instances, zero violations", o.instances_checked),
        Some(cx) => format!("counterexample {}", serde_json::to_string(cx).unwrap()),
    };
    Outcome {
        pass: o.pass && o.instances_checked > 0,
        summary,
    }
}

fn exact(rows: Vec<(String, ExtLen, ExtLen)>) -> Outcome {
    let total = rows.len();
    match rows.into_iter().find(|(_, want, got)| want != got) {
        None => Outcome {
            pass: true,
            summary: format!("{total} exact matches"),
        },
        Some((what, want, got)) => Outcome {
            pass: false,
            summary: format!("{what}: expected {want}, measured {got}"),
        },
    }
}

fn criterion_1() -> Outcome {
    claim("Thm3.3", &main_ensemble())
}

fn criterion_2() -> Outcome {
    claim("ExpOracle", &main_ensemble())
}

fn criterion_3() -> Outcome {
    let mut rows = Vec::new();
    for p in [3, 5] {
        for n in p + 1..=p + 4 {
            rows.push((
                format!("F({n},{p})"),
                Finite(2 * n - p - 1),
                exponent(&f_family(n, p).unwrap()).gamma,
            ));
        }
    }
    for p in [3, 4, 5] {
        for n in p + 1..=p + 4 {
            rows.push((
                format!("H({n},{p})"),
                Finite(2 * n - 2 * p + 2),
                exponent(&h_family(n, p).unwrap()).gamma,
            ));
        }
    }
    exact(rows)
}

fn criterion_4() -> Outcome {
    let d = |a: &Graph, b: &Graph| diameter(&kronecker_product(a, b));
    let mut rows = Vec::new();
    for m in [3, 5, 7] {
        for n in [3, 5, 7] {
            let want = match m.cmp(&n) {
                std::cmp::Ordering::Equal => m - 1,
                std::cmp::Ordering::Greater => n.max((m - 1) / 2),
                std::cmp::Ordering::Less => m.max((n - 1) / 2),
            };
            rows.push((
                format!("C{m} x C{n}"),
                Finite(want),
                d(&cycle(m).unwrap(), &cycle(n).unwrap()),
            ));
        }
        for n in [4, 6] {
            rows.push((
                format!("C{m} x C{n}"),
                Finite(m.max(n / 2)),
                d(&cycle(m).unwrap(), &cycle(n).unwrap()),
            ));
        }
        for n in 2..=7 {
            rows.push((
                format!("C{m} x P{n}"),
                Finite(m.max(n - 1)),
                d(&cycle(m).unwrap(), &path(n).unwrap()),
            ));
        }
    }
    exact(rows)
}

fn criterion_5() -> Outcome {
    let spec = EnsembleSpec {
        exhaustive: Some(ExhaustiveSpec {
            min_order: 1,
            max_order: 5,
            loops: false,
        }),
        random: Some(RandomSpec {
            count: 300,
            min_order: 1,
            max_order: 8,
            loops: true,
        }),
        cycle_cap: usize::MAX,
    };
    let ensemble = Ensemble::build(&spec, DEFAULT_SEED).expect("valid ensemble");
    let mut outcome = claim("Thm3.1", &ensemble);
    outcome.summary.push_str(" (order-1 graphs excluded)");
    if let Some(a) = ensemble
        .graphs
        .iter()
        .find(|a| a.cycle_bound().is_some_and(|b| !b.exact))
    {
        outcome.pass = false;
        outcome.summary = format!("cycle enumeration truncated on an order-{} graph", a.graph.order());
    }
    outcome
}

fn criterion_6() -> Outcome {
    let spec = EnsembleSpec::exhaustive(3, true);
    claim("Thm3.4", &Ensemble::build(&spec, DEFAULT_SEED).expect("valid ensemble"))
}

fn criterion_7() -> Outcome {
    claim("CorK2", &main_ensemble())
}

/// Naive dense reference used only by the matrix criterion.
fn dense(m: &BoolMatrix) -> Vec<Vec<bool>> {
    (0..m.dim())
        .map(|i| (0..m.dim()).map(|j| m.get(i, j)).collect())
        .collect()
}

fn dense_mul(a: &[Vec<bool>], b: &[Vec<bool>]) -> Vec<Vec<bool>> {
    let n = a.len();
    (0..n)
        .map(|i| (0..n).map(|j| (0..n).any(|k| a[i][k] && b[k][j])).collect())
        .collect()
}

fn dense_pow(a: &[Vec<bool>], k: usize) -> Vec<Vec<bool>> {
    let mut p = a.to_vec();
    for _ in 1..k {
        p = dense_mul(&p, a);
    }
    p
}

fn dense_kron(a: &[Vec<bool>], b: &[Vec<bool>]) -> Vec<Vec<bool>> {
    let (n, m) = (a.len(), b.len());
    (0..n * m)
        .map(|r| (0..n * m).map(|c| a[r / m][c / m] && b[r % m][c % m]).collect())
        .collect()
}

fn criterion_8() -> Outcome {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
    let graph = |rng: &mut rand_chacha::ChaCha8Rng| {
        let n = rng.random_range(1..=5);
        generate::random_graph(n, rng.random_range(0.2..0.9), rng.random_range(0.0..0.6), rng.random()).unwrap()
    };
    for pair in 0..100 {
        let (g1, g2) = (graph(&mut rng), graph(&mut rng));
        let (a1, a2) = (dense(&adjacency(&g1)), dense(&adjacency(&g2)));
        let product = kronecker_product(&g1, &g2);
        let a = dense_kron(&a1, &a2);
        if dense(&adjacency(&product)) != a {
            return Outcome {
                pass: false,
                summary: format!("pair {pair}: adjacency(product) != kron"),
            };
        }
        for k in 1..=6 {
            if dense_pow(&a, k) != dense_kron(&dense_pow(&a1, k), &dense_pow(&a2, k)) {
                return Outcome {
                    pass: false,
                    summary: format!("pair {pair}: power identity fails at k = {k}"),
                };
            }
        }
        let analyzed = [Analyzed::new(g1, None, 1), Analyzed::new(g2, None, 1)];
        let check = checker("KronIdentity").unwrap();
        if check(&[&analyzed[0], &analyzed[1]]) != Verdict::Pass {
            return Outcome {
                pass: false,
                summary: format!("pair {pair}: library matrix identity check failed"),
            };
        }
    }
    Outcome {
        pass: true,
        summary: "100 pairs, k = 1..=6, bit-for-bit".into(),
    }
}

fn criterion_9() -> Outcome {
    let spec = EnsembleSpec::exhaustive(5, true);
    claim("Lem2.6", &Ensemble::build(&spec, DEFAULT_SEED).expect("valid ensemble"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("main diameter formula vs product BFS", criterion_1, 60),
        ("exponent equals matrix-power exponent", criterion_2, 30),
        ("F and H family exponents", criterion_3, 5),
        ("cycle and path product table", criterion_4, 10),
        ("exponent <= odd-cycle bound", criterion_5, 60),
        ("diameter 1 iff both factors K_n^+", criterion_6, 30),
        ("exponent = d(G x K2) - 1", criterion_7, 20),
        ("Kronecker matrix power identity", criterion_8, 10),
        ("parity-extremal pairs exist", criterion_9, 30),
    ];
    let mut failed = 0;
    for (i, (name, run, budget)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let tag = if outcome.pass { "PASS" } else { "FAIL" };
        let slow = if elapsed > Duration::from_secs(budget) {
            format!(" [over {budget} s budget]")
        } else {
            String::new()
        };
        println!(
            "[{tag}] criterion {}: {name}: {} ({:.2} s){slow}",
            i + 1,
            outcome.summary,
            elapsed.as_secs_f64()
        );
        failed += usize::from(!outcome.pass);
    }
    if failed == 0 {
        println!("acceptance: all 9 criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} criteria failed");
        ExitCode::FAILURE
    }
}
