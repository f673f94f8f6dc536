//! Claim registry. Every checker derives its ground truth from the
//! constructed graphs, never from the formula under test.

use std::collections::HashSet;
use std::fmt::Display;

use super::iso::is_isomorphic;
use super::{Analyzed, Failure, Verdict};
use crate::families::{self, cycle_length, Family, FamilyKind};
use crate::kronecker::{kronecker_product, product_is_connected};
use crate::length::{ExtLen, Finite};
use crate::matrix::{adjacency, bool_pow, default_exponent_cap, kron_matrix, oracle_exponent};
use crate::predict::{diameter_bounds, predict_diameter, predict_special, SpecialCase};
use crate::walk::{self, diameter, distance_matrix, is_connected, local_exponent, odd_girth_from, Parity};
use crate::Graph;

pub type Checker = fn(&[&Analyzed]) -> Verdict;

pub(crate) struct Claim {
    pub id: &'static str,
    pub description: &'static str,
    pub select: fn(&mut Pool<'_>) -> Plan,
    pub check: Checker,
}

/// Ensemble graphs followed by claim-specific extras.
pub(crate) struct Pool<'a> {
    base: &'a [Analyzed],
    extra: Vec<Analyzed>,
    cycle_cap: usize,
}

impl<'a> Pool<'a> {
    pub fn new(base: &'a [Analyzed], cycle_cap: usize) -> Self {
        Self {
            base,
            extra: Vec::new(),
            cycle_cap,
        }
    }

    pub fn get(&self, i: usize) -> &Analyzed {
        if i < self.base.len() {
            &self.base[i]
        } else {
            &self.extra[i - self.base.len()]
        }
    }

    fn all_base(&self) -> Vec<usize> {
        (0..self.base.len()).collect()
    }

    fn push(&mut self, g: Graph, family: Option<Family>) -> usize {
        self.extra.push(Analyzed::new(g, family, self.cycle_cap));
        self.base.len() + self.extra.len() - 1
    }
}

pub(crate) enum Plan {
    Singles(Vec<usize>),
    Cross(Vec<usize>, Vec<usize>),
}

impl Plan {
    /// Visits instances in a fixed order until `f` returns false.
    pub fn for_each(&self, mut f: impl FnMut(&[usize]) -> bool) {
        match self {
            Plan::Singles(items) => {
                for &i in items {
                    if !f(&[i]) {
                        return;
                    }
                }
            }
            Plan::Cross(left, right) => {
                for &i in left {
                    for &j in right {
                        if !f(&[i, j]) {
                            return;
                        }
                    }
                }
            }
        }
    }
}

/// Keeps at most `max` items, evenly spaced.
fn sample_evenly(items: Vec<usize>, max: usize) -> Vec<usize> {
    if items.len() <= max {
        return items;
    }
    (0..max).map(|k| items[k * items.len() / max]).collect()
}

fn verdict(ok: bool, expected: impl Display, actual: impl Display, detail: impl Into<String>) -> Verdict {
    if ok {
        Verdict::Pass
    } else {
        Verdict::Fail(Failure {
            expected: expected.to_string(),
            actual: actual.to_string(),
            detail: detail.into(),
        })
    }
}

fn fail(expected: impl Display, actual: impl Display, detail: impl Into<String>) -> Verdict {
    verdict(false, expected, actual, detail)
}

fn nontrivial_connected(a: &Analyzed) -> bool {
    a.summary.connected && a.summary.order >= 2
}

fn product_diameter(a: &Analyzed, b: &Analyzed) -> ExtLen {
    diameter(&kronecker_product(&a.graph, &b.graph))
}

// ---- selections ----------------------------------------------------------

fn singles(pool: &mut Pool<'_>) -> Plan {
    Plan::Singles(pool.all_base())
}

fn all_pairs(pool: &mut Pool<'_>) -> Plan {
    Plan::Cross(pool.all_base(), pool.all_base())
}

fn sampled_pairs(pool: &mut Pool<'_>) -> Plan {
    let items = sample_evenly(pool.all_base(), 10);
    Plan::Cross(items.clone(), items)
}

fn with_f_family(pool: &mut Pool<'_>) -> Plan {
    let mut items = pool.all_base();
    for p in [3, 5] {
        for n in p + 1..=p + 4 {
            let family = Family {
                kind: FamilyKind::F,
                n,
                p,
            };
            items.push(pool.push(family.build().unwrap(), Some(family)));
        }
    }
    Plan::Singles(items)
}

fn h_family_sweep(pool: &mut Pool<'_>) -> Plan {
    let mut items = Vec::new();
    for p in 3..=5 {
        for n in p + 1..=p + 4 {
            let family = Family {
                kind: FamilyKind::H,
                n,
                p,
            };
            items.push(pool.push(family.build().unwrap(), Some(family)));
        }
    }
    Plan::Singles(items)
}

fn k_plus_left(pool: &mut Pool<'_>) -> Plan {
    let left = (2..=4)
        .map(|m| pool.push(families::complete(m, true).unwrap(), None))
        .collect();
    Plan::Cross(left, pool.all_base())
}

fn multipartite_right(pool: &mut Pool<'_>) -> Plan {
    let parts: [&[usize]; 7] = [
        &[1, 1, 1],
        &[2, 1, 1],
        &[2, 2, 1],
        &[3, 1, 1],
        &[2, 2, 2],
        &[1, 1, 1, 1],
        &[2, 1, 1, 1],
    ];
    let right = parts
        .iter()
        .map(|p| pool.push(families::complete_multipartite(p).unwrap(), None))
        .collect();
    Plan::Cross(pool.all_base(), right)
}

fn all_looped_pairs(pool: &mut Pool<'_>) -> Plan {
    let mut seen = HashSet::new();
    let looped: Vec<Graph> = pool
        .all_base()
        .into_iter()
        .filter(|&i| nontrivial_connected(pool.get(i)))
        .map(|i| pool.get(i).graph.with_all_loops())
        .filter(|g| seen.insert(g.clone()))
        .collect();
    let items: Vec<usize> = looped.into_iter().map(|g| pool.push(g, None)).collect();
    let items = sample_evenly(items, 120);
    Plan::Cross(items.clone(), items)
}

fn hf_pairs(pool: &mut Pool<'_>) -> Plan {
    let mut fams = Vec::new();
    for (kind, ps) in [(FamilyKind::H, [3, 4]), (FamilyKind::F, [3, 5])] {
        for p in ps {
            for n in p + 1..=p + 3 {
                let family = Family { kind, n, p };
                fams.push(pool.push(family.build().unwrap(), Some(family)));
            }
        }
    }
    let mut right = pool.all_base();
    right.extend(&fams);
    Plan::Cross(fams, right)
}

fn cycle_pairs(pool: &mut Pool<'_>) -> Plan {
    let odd: Vec<usize> = [3, 5, 7]
        .iter()
        .map(|&m| pool.push(families::cycle(m).unwrap(), None))
        .collect();
    let mut right = pool.all_base();
    right.extend(&odd);
    for n in [4, 6] {
        right.push(pool.push(families::cycle(n).unwrap(), None));
    }
    for n in 2..=7 {
        right.push(pool.push(families::path(n).unwrap(), None));
    }
    Plan::Cross(odd, right)
}

// ---- single-graph checks -------------------------------------------------

fn check_primitivity(f: &[&Analyzed]) -> Verdict {
    let a = f[0];
    let oracle = oracle_exponent(&a.graph, default_exponent_cap(a.graph.order()));
    let primitive = walk::is_primitive(&a.graph);
    verdict(
        primitive == oracle.is_finite(),
        primitive,
        oracle,
        "connected and non-bipartite iff some power of A is all-ones",
    )
}

/// Reachability by exact walk length, by direct propagation.
fn reach_by_length(g: &Graph, source: usize, max_len: usize) -> Vec<Vec<bool>> {
    let mut levels = vec![vec![false; g.order()]];
    levels[0][source] = true;
    for k in 1..=max_len {
        let mut next = vec![false; g.order()];
        for v in g.vertices().filter(|&v| levels[k - 1][v]) {
            for &w in g.neighbors(v) {
                next[w] = true;
            }
        }
        levels.push(next);
    }
    levels
}

fn check_local_exponent(f: &[&Analyzed]) -> Verdict {
    let a = f[0];
    let g = &a.graph;
    let horizon = 2 * g.order() + 3;
    for u in g.vertices() {
        let reach = reach_by_length(g, u, horizon);
        for v in g.vertices() {
            let Finite(k) = local_exponent(&a.parity, u, v) else {
                continue;
            };
            if k + 1 >= horizon {
                return fail(
                    format!("< {horizon}"),
                    k,
                    format!("local exponent of ({u},{v}) beyond walk horizon"),
                );
            }
            if k >= 2 && reach[k - 1][v] {
                return fail(
                    format!("no walk of length {}", k - 1),
                    "walk found",
                    format!("pair ({u},{v})"),
                );
            }
            if let Some(len) = (k..=horizon).find(|&len| !reach[len][v]) {
                return fail(
                    format!("walks of every length >= {k}"),
                    format!("none of length {len}"),
                    format!("pair ({u},{v})"),
                );
            }
        }
    }
    Verdict::Pass
}

fn check_exponent_vs_twice_diameter(f: &[&Analyzed]) -> Verdict {
    let s = &f[0].summary;
    if !s.is_primitive() || s.order < 2 {
        return Verdict::Skip;
    }
    verdict(
        s.exponent <= s.diameter.times(2),
        format!("<= {}", s.diameter.times(2)),
        s.exponent,
        "exponent at most twice the diameter",
    )
}

fn check_looped_exponent(f: &[&Analyzed]) -> Verdict {
    if f[0].graph.loop_count() == 0 {
        return Verdict::Skip;
    }
    check_exponent_vs_twice_diameter(f)
}

fn check_parity_extremes(f: &[&Analyzed]) -> Verdict {
    let a = f[0];
    let s = &a.summary;
    if !s.is_primitive() || s.order < 2 {
        return Verdict::Skip;
    }
    let Finite(gamma) = s.exponent else {
        return fail("finite exponent", "inf", "primitive graph");
    };
    let n = s.order;
    let pairs = || (0..n).flat_map(|u| (0..n).map(move |v| (u, v)));
    let (first, second) = match Parity::of(gamma) {
        Parity::Odd => (Parity::Odd, Parity::Even),
        Parity::Even => (Parity::Even, Parity::Odd),
    };
    // The pair realizing the even length must be two different vertices.
    let found = |parity: Parity, len: usize| {
        pairs().any(|(u, v)| (parity == Parity::Odd || u != v) && a.parity.get(parity, u, v) == Finite(len))
    };
    if !found(first, gamma) {
        return fail(
            format!("a shortest {first:?} walk of length {gamma}"),
            "none",
            format!("gamma = {gamma}"),
        );
    }
    if !found(second, gamma + 1) {
        return fail(
            format!("a shortest {second:?} walk of length {}", gamma + 1),
            "none",
            format!("gamma = {gamma}"),
        );
    }
    Verdict::Pass
}

/// K1+ is excluded: its loop gives l_o = 0 while its exponent is 1.
fn check_cycle_bound(f: &[&Analyzed]) -> Verdict {
    let a = f[0];
    if a.summary.order < 2 {
        return Verdict::Skip;
    }
    let Some(bound) = a.cycle_bound() else {
        return Verdict::Skip;
    };
    let detail = if bound.exact {
        "exact enumeration"
    } else {
        "capped enumeration"
    };
    verdict(
        a.summary.exponent <= bound.l_o,
        format!("<= {}", bound.l_o),
        a.summary.exponent,
        detail,
    )
}

fn check_odd_girth_bound(f: &[&Analyzed]) -> Verdict {
    let a = f[0];
    let s = &a.summary;
    let n = s.order;
    if let Some(family) = a.family {
        let expected = 2 * family.n - family.p - 1;
        return verdict(
            s.exponent == Finite(expected),
            expected,
            s.exponent,
            format!("{family:?}"),
        );
    }
    if !s.is_primitive() {
        return Verdict::Skip;
    }
    let Finite(p) = odd_girth_from(&a.parity) else {
        return Verdict::Skip;
    };
    if p < 3 {
        return Verdict::Skip;
    }
    let bound = 2 * n - p - 1;
    if s.exponent > Finite(bound) {
        return fail(format!("<= {bound}"), s.exponent, format!("odd girth {p}"));
    }
    let extremal = if p == n {
        cycle_length(&a.graph) == Some(n)
    } else {
        a.graph.edge_count() == n && is_isomorphic(&a.graph, &families::f_family(n, p).unwrap())
    };
    let attained = s.exponent == Finite(bound);
    verdict(
        attained == extremal,
        format!("equality iff extremal ({extremal})"),
        format!("equality {attained}"),
        format!("n = {n}, odd girth {p}"),
    )
}

fn check_h_family(f: &[&Analyzed]) -> Verdict {
    let a = f[0];
    let Some(
        family @ Family {
            kind: FamilyKind::H,
            n,
            p,
        },
    ) = a.family
    else {
        return Verdict::Skip;
    };
    if p < 3 {
        return Verdict::Skip;
    }
    let expected = 2 * n - 2 * p + 2;
    verdict(
        a.summary.exponent == Finite(expected),
        expected,
        a.summary.exponent,
        format!("{family:?}"),
    )
}

fn check_exponent_via_k2(f: &[&Analyzed]) -> Verdict {
    let a = f[0];
    if !a.summary.is_primitive() || a.summary.order < 2 {
        return Verdict::Skip;
    }
    let k2 = families::complete(2, false).unwrap();
    let d = diameter(&kronecker_product(&a.graph, &k2));
    verdict(
        a.summary.exponent == d.minus_one(),
        a.summary.exponent,
        d.minus_one(),
        "exponent = d(G x K2) - 1",
    )
}

fn check_oracle_exponent(f: &[&Analyzed]) -> Verdict {
    let a = f[0];
    let oracle = oracle_exponent(&a.graph, default_exponent_cap(a.graph.order()));
    verdict(
        oracle == a.summary.exponent,
        oracle,
        a.summary.exponent,
        "matrix powers vs double-cover BFS",
    )
}

// ---- pair checks ---------------------------------------------------------

fn check_product_exponent(f: &[&Analyzed]) -> Verdict {
    let (a, b) = (f[0], f[1]);
    if !a.summary.is_primitive() || !b.summary.is_primitive() {
        return Verdict::Skip;
    }
    let expected = a.summary.exponent.max(b.summary.exponent);
    let actual = walk::exponent(&kronecker_product(&a.graph, &b.graph)).gamma;
    verdict(
        actual == expected,
        expected,
        actual,
        "exponent of product = max of factor exponents",
    )
}

fn check_connectivity(f: &[&Analyzed]) -> Verdict {
    let (a, b) = (f[0], f[1]);
    // A lone vertex without a loop has no edges and no odd cycle, yet K1 x K1 is connected.
    if a.graph.edge_count() == 0 || b.graph.edge_count() == 0 {
        return Verdict::Skip;
    }
    let Ok(predicted) = product_is_connected(&a.graph, &b.graph) else {
        return Verdict::Skip;
    };
    let actual = is_connected(&kronecker_product(&a.graph, &b.graph));
    verdict(
        predicted == actual,
        predicted,
        actual,
        "product connected iff a factor has an odd cycle",
    )
}

fn check_same_parity_walks(f: &[&Analyzed]) -> Verdict {
    let (a, b) = (f[0], f[1]);
    let n2 = b.graph.order();
    let pd = walk::parity_distances(&kronecker_product(&a.graph, &b.graph));
    for x1 in a.graph.vertices() {
        for y1 in a.graph.vertices() {
            for x2 in b.graph.vertices() {
                for y2 in b.graph.vertices() {
                    for parity in [Parity::Odd, Parity::Even] {
                        let bound = a.parity.get(parity, x1, y1).max(b.parity.get(parity, x2, y2));
                        let got = pd.get(parity, x1 * n2 + x2, y1 * n2 + y2);
                        if got > bound {
                            return fail(
                                format!("<= {bound}"),
                                got,
                                format!("{parity:?} walk ({x1}{x2}) -> ({y1}{y2})"),
                            );
                        }
                    }
                }
            }
        }
    }
    Verdict::Pass
}

fn check_mixed_parity_lower_bound(f: &[&Analyzed]) -> Verdict {
    let (a, b) = (f[0], f[1]);
    let n2 = b.graph.order();
    let dist = distance_matrix(&kronecker_product(&a.graph, &b.graph));
    for x1 in a.graph.vertices() {
        for y1 in a.graph.vertices() {
            for x2 in b.graph.vertices() {
                for y2 in b.graph.vertices() {
                    let (x, y) = (x1 * n2 + x2, y1 * n2 + y2);
                    if x == y {
                        continue;
                    }
                    let d = dist.get(x, y);
                    let lower = (a.parity.odd(x1, y1).min(b.parity.even(x2, y2)))
                        .max(a.parity.even(x1, y1).min(b.parity.odd(x2, y2)));
                    if d < lower {
                        return fail(format!(">= {lower}"), d, format!("distance ({x1}{x2}) -> ({y1}{y2})"));
                    }
                }
            }
        }
    }
    Verdict::Pass
}

fn main_pair<'a>(f: &[&'a Analyzed]) -> Option<(&'a Analyzed, &'a Analyzed)> {
    let (a, b) = (f[0], f[1]);
    (nontrivial_connected(a) && nontrivial_connected(b)).then_some((a, b))
}

fn check_bounds(f: &[&Analyzed]) -> Verdict {
    let Some((a, b)) = main_pair(f) else {
        return Verdict::Skip;
    };
    let Ok(bounds) = diameter_bounds(&a.summary, &b.summary) else {
        return Verdict::Skip;
    };
    let d = product_diameter(a, b);
    if d < bounds.from_diameters {
        return fail(
            format!(">= {}", bounds.from_diameters),
            d,
            "part (1): max of factor diameters",
        );
    }
    if let Some(lower) = bounds.from_exponents {
        if d < lower {
            return fail(format!(">= {lower}"), d, "part (2): exponent lower bound");
        }
    }
    if d > bounds.exponent_ceiling {
        return fail(format!("<= {}", bounds.exponent_ceiling), d, "part (3): max exponent");
    }
    if d > bounds.mixed_ceiling {
        return fail(format!("<= {}", bounds.mixed_ceiling), d, "part (4): mixed ceiling");
    }
    if bounds.mixed_is_exact && d != bounds.mixed_ceiling {
        return fail(bounds.mixed_ceiling, d, "part (4): equality with a bipartite factor");
    }
    Verdict::Pass
}

fn check_main_formula(f: &[&Analyzed]) -> Verdict {
    let Some((a, b)) = main_pair(f) else {
        return Verdict::Skip;
    };
    let prediction = match predict_diameter(&a.summary, &b.summary) {
        Ok(p) => p,
        Err(e) => return fail("a prediction", e, "hypotheses hold"),
    };
    let d = product_diameter(a, b);
    verdict(
        prediction.value == d,
        prediction.value,
        d,
        format!("{:?}", prediction.case_tag),
    )
}

fn check_unit_diameter(f: &[&Analyzed]) -> Verdict {
    let Some((a, b)) = main_pair(f) else {
        return Verdict::Skip;
    };
    let both = a.summary.is_k_plus && b.summary.is_k_plus;
    let d = product_diameter(a, b);
    if both {
        if let Err(e) = predict_special(SpecialCase::BothComplete(&a.graph, &b.graph)) {
            return fail("closed form", e, "both factors K_n^+");
        }
    }
    verdict(
        (d == Finite(1)) == both,
        format!("diameter 1 iff both K_n^+ ({both})"),
        d,
        "",
    )
}

/// Compares a special-case prediction with brute force and with the general
/// formula; instances outside the special hypotheses are skipped.
fn special_against_truth(case: SpecialCase<'_>, a: &Analyzed, b: &Analyzed) -> Verdict {
    let Ok(special) = predict_special(case) else {
        return Verdict::Skip;
    };
    let d = product_diameter(a, b);
    if special.value != d {
        return fail(special.value, d, format!("{:?} vs product BFS", special.case_tag));
    }
    match predict_diameter(&a.summary, &b.summary) {
        Ok(general) if general.value == special.value => Verdict::Pass,
        Ok(general) => fail(special.value, general.value, "closed form vs general formula"),
        Err(e) => fail(special.value, e, "general formula rejected the instance"),
    }
}

fn check_k_plus_factor(f: &[&Analyzed]) -> Verdict {
    let (a, b) = (f[0], f[1]);
    special_against_truth(
        SpecialCase::KPlusFactor {
            k_plus: &a.graph,
            other: &b.graph,
        },
        a,
        b,
    )
}

fn check_multipartite(f: &[&Analyzed]) -> Verdict {
    let (a, b) = (f[0], f[1]);
    special_against_truth(
        SpecialCase::MultipartiteFactor {
            other: &a.graph,
            multipartite: &b.graph,
        },
        a,
        b,
    )
}

fn check_all_loops(f: &[&Analyzed]) -> Verdict {
    let (a, b) = (f[0], f[1]);
    special_against_truth(SpecialCase::AllLoops(&a.graph, &b.graph), a, b)
}

fn check_hf(f: &[&Analyzed]) -> Verdict {
    let (a, b) = (f[0], f[1]);
    let Some(family) = a.family else { return Verdict::Skip };
    special_against_truth(
        SpecialCase::HfFamilies {
            family,
            other: &b.graph,
            other_family: b.family,
        },
        a,
        b,
    )
}

fn check_cycles(f: &[&Analyzed]) -> Verdict {
    let (a, b) = (f[0], f[1]);
    special_against_truth(
        SpecialCase::CycleFamilies {
            odd_cycle: &a.graph,
            other: &b.graph,
        },
        a,
        b,
    )
}

fn check_cycle_bound_product(f: &[&Analyzed]) -> Verdict {
    let Some((a, b)) = main_pair(f) else {
        return Verdict::Skip;
    };
    let (Some(l1), Some(l2)) = (a.cycle_bound(), b.cycle_bound()) else {
        return Verdict::Skip;
    };
    let (d1, d2) = (a.summary.diameter, b.summary.diameter);
    let bound = l1.l_o.plus(1).max(d2).min(l2.l_o.plus(1).max(d1));
    let d = product_diameter(a, b);
    verdict(d <= bound, format!("<= {bound}"), d, "cycle-bound ceiling")
}

fn check_twice_diameter_product(f: &[&Analyzed]) -> Verdict {
    let Some((a, b)) = main_pair(f) else {
        return Verdict::Skip;
    };
    if a.summary.bipartite {
        return Verdict::Skip;
    }
    let bound = a.summary.diameter.times(2).plus(1).max(b.summary.diameter);
    let d = product_diameter(a, b);
    verdict(d <= bound, format!("<= {bound}"), d, "max(2 d1 + 1, d2) ceiling")
}

fn check_kron_identity(f: &[&Analyzed]) -> Verdict {
    let (a, b) = (f[0], f[1]);
    let (ma, mb) = (adjacency(&a.graph), adjacency(&b.graph));
    let direct = adjacency(&kronecker_product(&a.graph, &b.graph));
    let kron = kron_matrix(&ma, &mb);
    if direct != kron {
        return fail("adjacency(product) = kron(adjacencies)", "mismatch", "");
    }
    for k in 1..=6 {
        let lhs = bool_pow(&kron, k).unwrap();
        let rhs = kron_matrix(&bool_pow(&ma, k).unwrap(), &bool_pow(&mb, k).unwrap());
        if lhs != rhs {
            return fail("(A1 x A2)^k = A1^k x A2^k", "mismatch", format!("k = {k}"));
        }
    }
    Verdict::Pass
}

static CLAIMS: &[Claim] = &[
    Claim {
        id: "Prop1.1",
        description: "primitive factors: exponent of the product is the larger factor exponent",
        select: all_pairs,
        check: check_product_exponent,
    },
    Claim {
        id: "Lem2.1",
        description: "primitive iff connected with an odd cycle (against matrix powers)",
        select: singles,
        check: check_primitivity,
    },
    Claim {
        id: "Lem2.2",
        description: "local exponent is max(shortest odd, shortest even) - 1, tight",
        select: singles,
        check: check_local_exponent,
    },
    Claim {
        id: "Lem2.3",
        description: "primitive graphs of order >= 2: exponent <= 2 * diameter",
        select: singles,
        check: check_exponent_vs_twice_diameter,
    },
    Claim {
        id: "Lem2.4",
        description: "connected factors: product connected iff some factor has an odd cycle",
        select: all_pairs,
        check: check_connectivity,
    },
    Claim {
        id: "Lem2.5",
        description: "same-parity factor walks lift to a product walk of the longer length",
        select: all_pairs,
        check: check_same_parity_walks,
    },
    Claim {
        id: "Lem2.6",
        description: "parity-extremal pairs of lengths gamma and gamma + 1 exist",
        select: singles,
        check: check_parity_extremes,
    },
    Claim {
        id: "Lem2.7",
        description: "product distance >= min(shortest odd in one factor, shortest even in the other)",
        select: all_pairs,
        check: check_mixed_parity_lower_bound,
    },
    Claim {
        id: "Thm3.1",
        description: "graphs of order >= 2: exponent <= odd-cycle bound l_o",
        select: singles,
        check: check_cycle_bound,
    },
    Claim {
        id: "Cor2.10",
        description: "connected graphs with a loop: exponent <= 2 * diameter",
        select: singles,
        check: check_looped_exponent,
    },
    Claim {
        id: "Cor3.1",
        description: "odd girth p: exponent <= 2n - p - 1, equality exactly for path-plus-cycle graphs",
        select: with_f_family,
        check: check_odd_girth_bound,
    },
    Claim {
        id: "Cor3.2",
        description: "path-plus-clique graphs: exponent = 2n - 2p + 2",
        select: h_family_sweep,
        check: check_h_family,
    },
    Claim {
        id: "Thm3.2",
        description: "product diameter lies within the diameter/exponent bounds",
        select: all_pairs,
        check: check_bounds,
    },
    Claim {
        id: "Thm3.3",
        description: "product diameter equals the exponent/diameter formula",
        select: all_pairs,
        check: check_main_formula,
    },
    Claim {
        id: "Thm3.4",
        description: "product diameter 1 iff both factors are K_n^+",
        select: all_pairs,
        check: check_unit_diameter,
    },
    Claim {
        id: "Thm3.5",
        description: "K_m^+ times G: 2 if d(G) = 1, else d(G)",
        select: k_plus_left,
        check: check_k_plus_factor,
    },
    Claim {
        id: "ThmMultipartite",
        description: "G times a complete t-partite graph, t >= 3",
        select: multipartite_right,
        check: check_multipartite,
    },
    Claim {
        id: "CorAllLoops",
        description: "factors looped everywhere: product diameter = max(d1, d2)",
        select: all_looped_pairs,
        check: check_all_loops,
    },
    Claim {
        id: "CorK2",
        description: "primitive G: exponent = d(G x K2) - 1",
        select: singles,
        check: check_exponent_via_k2,
    },
    Claim {
        id: "CorLo",
        description: "product diameter <= min(max(l1 + 1, d2), max(l2 + 1, d1))",
        select: all_pairs,
        check: check_cycle_bound_product,
    },
    Claim {
        id: "Cor2d",
        description: "G1 with an odd cycle: product diameter <= max(2 d1 + 1, d2)",
        select: all_pairs,
        check: check_twice_diameter_product,
    },
    Claim {
        id: "CorHF",
        description: "path-plus-clique/cycle factor times bipartite or family factor",
        select: hf_pairs,
        check: check_hf,
    },
    Claim {
        id: "CorCycles",
        description: "odd cycle times bipartite graph or odd cycle",
        select: cycle_pairs,
        check: check_cycles,
    },
    Claim {
        id: "ExpOracle",
        description: "double-cover exponent equals matrix-power exponent",
        select: singles,
        check: check_oracle_exponent,
    },
    Claim {
        id: "KronIdentity",
        description: "(A1 x A2)^k = A1^k x A2^k and adjacency of product = kron",
        select: sampled_pairs,
        check: check_kron_identity,
    },
];

pub(crate) fn lookup(id: &str) -> Option<&'static Claim> {
    CLAIMS.iter().find(|c| c.id == id)
}

pub fn claim_ids() -> impl Iterator<Item = &'static str> {
    CLAIMS.iter().map(|c| c.id)
}

pub fn describe_claim(id: &str) -> Option<&'static str> {
    lookup(id).map(|c| c.description)
}

/// The checker bound to `id`.
pub fn checker(id: &str) -> Option<Checker> {
    lookup(id).map(|c| c.check)
}
