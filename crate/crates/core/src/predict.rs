//! Closed-form diameter of `G₁ ⊗ G₂` from factor diameters and exponents.
//!
//! For connected factors of order at least 2, at least one with an odd
//! cycle:
//!
//! ```text
//! d(G₁ ⊗ G₂) = γ₁                 if γ₁ = γ₂
//!              max(γ₂ + 1, d₁)     if γ₁ > γ₂
//!              max(γ₁ + 1, d₂)     if γ₁ < γ₂
//! ```
//!
//! A bipartite factor has infinite exponent and the comparison is taken
//! with infinity above every finite value, which gives `max(γ₁ + 1, d₂)` for
//! a bipartite second factor. When both factors are bipartite, or either is
//! disconnected, the product is disconnected.

use serde::Serialize;

use crate::families::{cycle_length, multipartite_parts, Family};
use crate::length::{ExtLen, Finite, Infinite};
use crate::walk::{self, diameter, is_bipartite, is_connected, ParityDistances};
use crate::{Error, Graph, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FactorSummary {
    pub order: usize,
    pub diameter: ExtLen,
    pub exponent: ExtLen,
    pub bipartite: bool,
    pub connected: bool,
    pub is_k_plus: bool,
}

impl FactorSummary {
    pub fn is_primitive(&self) -> bool {
        self.connected && !self.bipartite
    }
}

pub fn summarize(g: &Graph) -> FactorSummary {
    summarize_with(g, &walk::parity_distances(g))
}

/// As [`summarize`], reusing precomputed parity distances of `g`.
pub fn summarize_with(g: &Graph, pd: &ParityDistances) -> FactorSummary {
    FactorSummary {
        order: g.order(),
        diameter: diameter(g),
        exponent: walk::exponent_from(pd).gamma,
        bipartite: is_bipartite(g),
        connected: is_connected(g),
        is_k_plus: g.is_complete_with_loops(),
    }
}

/// Families with a dedicated closed form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum SpecialKind {
    /// Both factors `Kₙ⁺`: diameter 1.
    BothComplete,
    /// `K_m⁺ ⊗ G`: 2 if `d(G) = 1`, else `d(G)`.
    KPlusFactor,
    /// `G ⊗ H`, `H` complete `t`-partite with `t >= 3`.
    MultipartiteFactor,
    /// `G` a path-plus-clique or path-plus-cycle graph with odd cycles.
    HfFamilies,
    /// `C_m ⊗ H`, `m` odd, `H` bipartite or an odd cycle.
    CycleFamilies,
    /// Both factors looped at every vertex: `max(d₁, d₂)`.
    AllLoops,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum CaseTag {
    EqualExponents,
    FirstExponentGreater,
    SecondExponentGreater,
    Disconnected,
    OrderOneFactor,
    ClosedForm(SpecialKind),
}

/// Lower and upper bounds on the product diameter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DiameterBounds {
    /// `max(d₁, d₂)`.
    pub from_diameters: ExtLen,
    /// `γ₁` if the exponents agree, else `min(γ₁, γ₂) + 1`; only when both
    /// factors have odd cycles.
    pub from_exponents: Option<ExtLen>,
    /// `max(γ₁, γ₂)`.
    pub exponent_ceiling: ExtLen,
    /// `min(max(γ₁ + 1, d₂), max(γ₂ + 1, d₁))`, attained when a factor is
    /// bipartite.
    pub mixed_ceiling: ExtLen,
    pub lower: ExtLen,
    pub upper: ExtLen,
    /// The mixed ceiling is the exact diameter (one factor is bipartite).
    pub mixed_is_exact: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PredictionInputs {
    pub gamma1: ExtLen,
    pub gamma2: ExtLen,
    pub d1: ExtLen,
    pub d2: ExtLen,
}

impl PredictionInputs {
    fn of(s1: &FactorSummary, s2: &FactorSummary) -> Self {
        Self {
            gamma1: s1.exponent,
            gamma2: s2.exponent,
            d1: s1.diameter,
            d2: s2.diameter,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DiameterPrediction {
    pub value: ExtLen,
    pub case_tag: CaseTag,
    pub bounds: Option<DiameterBounds>,
    pub inputs: PredictionInputs,
}

fn check_main_hypotheses(s1: &FactorSummary, s2: &FactorSummary) -> Result<()> {
    if s1.order < 2 || s2.order < 2 {
        return Err(Error::OrderOneFactor);
    }
    if !s1.connected || !s2.connected {
        return Err(Error::Hypothesis("both factors must be connected".into()));
    }
    if s1.bipartite && s2.bipartite {
        return Err(Error::Hypothesis(
            "at least one factor must contain an odd cycle".into(),
        ));
    }
    Ok(())
}

pub fn diameter_bounds(s1: &FactorSummary, s2: &FactorSummary) -> Result<DiameterBounds> {
    check_main_hypotheses(s1, s2)?;
    let (g1, g2, d1, d2) = (s1.exponent, s2.exponent, s1.diameter, s2.diameter);
    let from_diameters = d1.max(d2);
    let from_exponents =
        (s1.is_primitive() && s2.is_primitive()).then(|| if g1 == g2 { g1 } else { g1.min(g2).plus(1) });
    let exponent_ceiling = g1.max(g2);
    let mixed_ceiling = g1.plus(1).max(d2).min(g2.plus(1).max(d1));
    Ok(DiameterBounds {
        from_diameters,
        from_exponents,
        exponent_ceiling,
        mixed_ceiling,
        lower: from_exponents.map_or(from_diameters, |b| b.max(from_diameters)),
        upper: exponent_ceiling.min(mixed_ceiling),
        mixed_is_exact: s1.bipartite || s2.bipartite,
    })
}

pub fn predict_diameter(s1: &FactorSummary, s2: &FactorSummary) -> Result<DiameterPrediction> {
    let inputs = PredictionInputs::of(s1, s2);
    if s1.order < 2 || s2.order < 2 {
        return Err(Error::OrderOneFactor);
    }
    if !s1.connected || !s2.connected || (s1.bipartite && s2.bipartite) {
        return Ok(DiameterPrediction {
            value: Infinite,
            case_tag: CaseTag::Disconnected,
            bounds: None,
            inputs,
        });
    }
    let (g1, g2) = (s1.exponent, s2.exponent);
    let (value, case_tag) = match g1.cmp(&g2) {
        std::cmp::Ordering::Equal => (g1, CaseTag::EqualExponents),
        std::cmp::Ordering::Greater => (g2.plus(1).max(s1.diameter), CaseTag::FirstExponentGreater),
        std::cmp::Ordering::Less => (g1.plus(1).max(s2.diameter), CaseTag::SecondExponentGreater),
    };
    let bounds = Some(diameter_bounds(s1, s2)?);
    Ok(DiameterPrediction {
        value,
        case_tag,
        bounds,
        inputs,
    })
}

/// Product with an order-1 factor: `K₁⁺ ⊗ G ≅ G`, while `K₁ ⊗ G` is edgeless.
pub fn predict_with_trivial_factor(big: &FactorSummary, small: &Graph) -> Result<DiameterPrediction> {
    if small.order() != 1 {
        return Err(Error::InvalidParameter("trivial factor must have order 1".into()));
    }
    let small_summary = summarize(small);
    let inputs = PredictionInputs::of(big, &small_summary);
    let (value, case_tag) = if small.has_loop(0) {
        (big.diameter, CaseTag::OrderOneFactor)
    } else if big.order >= 2 {
        (Infinite, CaseTag::Disconnected)
    } else {
        (Finite(0), CaseTag::OrderOneFactor)
    };
    Ok(DiameterPrediction {
        value,
        case_tag,
        bounds: None,
        inputs,
    })
}

/// Dispatches on factor orders and predicts `d(g1 ⊗ g2)`.
pub fn predict(g1: &Graph, g2: &Graph) -> Result<DiameterPrediction> {
    if g2.order() == 1 {
        predict_with_trivial_factor(&summarize(g1), g2)
    } else if g1.order() == 1 {
        predict_with_trivial_factor(&summarize(g2), g1)
    } else {
        predict_diameter(&summarize(g1), &summarize(g2))
    }
}

/// Inputs for [`predict_special`].
#[derive(Clone, Copy, Debug)]
pub enum SpecialCase<'a> {
    BothComplete(&'a Graph, &'a Graph),
    KPlusFactor {
        k_plus: &'a Graph,
        other: &'a Graph,
    },
    MultipartiteFactor {
        other: &'a Graph,
        multipartite: &'a Graph,
    },
    /// `other_family` names `other` when it is itself a family member.
    HfFamilies {
        family: Family,
        other: &'a Graph,
        other_family: Option<Family>,
    },
    CycleFamilies {
        odd_cycle: &'a Graph,
        other: &'a Graph,
    },
    AllLoops(&'a Graph, &'a Graph),
}

fn hypothesis(msg: impl Into<String>) -> Error {
    Error::Hypothesis(msg.into())
}

fn connected_nontrivial(g: &Graph, name: &str) -> Result<FactorSummary> {
    let s = summarize(g);
    if s.order < 2 {
        return Err(hypothesis(format!("{name} must have order >= 2")));
    }
    if !s.connected {
        return Err(hypothesis(format!("{name} must be connected")));
    }
    Ok(s)
}

fn finite(len: ExtLen) -> usize {
    len.finite().expect("connected factor has finite diameter")
}

/// Evaluates the family-specific closed forms after validating each
/// family's hypotheses.
pub fn predict_special(case: SpecialCase<'_>) -> Result<DiameterPrediction> {
    let (kind, value, s1, s2) = match case {
        SpecialCase::BothComplete(g1, g2) => {
            let s1 = connected_nontrivial(g1, "first factor")?;
            let s2 = connected_nontrivial(g2, "second factor")?;
            if !s1.is_k_plus || !s2.is_k_plus {
                return Err(hypothesis("both factors must be complete with a loop at every vertex"));
            }
            (SpecialKind::BothComplete, Finite(1), s1, s2)
        }
        SpecialCase::KPlusFactor { k_plus, other } => {
            let s1 = connected_nontrivial(k_plus, "K_m^+ factor")?;
            if !s1.is_k_plus {
                return Err(hypothesis("first factor must be K_m^+"));
            }
            let s2 = connected_nontrivial(other, "other factor")?;
            if s2.is_k_plus {
                return Err(hypothesis("other factor must not be K_n^+"));
            }
            let value = if s2.diameter == Finite(1) {
                Finite(2)
            } else {
                s2.diameter
            };
            (SpecialKind::KPlusFactor, value, s1, s2)
        }
        SpecialCase::MultipartiteFactor { other, multipartite } => {
            let parts = multipartite_parts(multipartite)
                .ok_or_else(|| hypothesis("second factor must be complete multipartite"))?;
            if parts.len() < 3 {
                return Err(hypothesis("multipartite factor needs at least 3 parts"));
            }
            let s1 = connected_nontrivial(other, "other factor")?;
            let d = finite(s1.diameter);
            let value = if d >= 3 {
                d
            } else if s1.exponent <= Finite(2) {
                2
            } else {
                3
            };
            (
                SpecialKind::MultipartiteFactor,
                Finite(value),
                s1,
                summarize(multipartite),
            )
        }
        SpecialCase::HfFamilies {
            family,
            other,
            other_family,
        } => {
            if !family.has_odd_cycles() {
                return Err(hypothesis("family member must contain odd cycles"));
            }
            let g = family.build()?;
            let s1 = connected_nontrivial(&g, "family factor")?;
            let s2 = connected_nontrivial(other, "other factor")?;
            let (d1, d2) = (finite(s1.diameter), finite(s2.diameter));
            let value = if s2.bipartite {
                (2 * d1 + 1).max(d2)
            } else {
                let named =
                    other_family.ok_or_else(|| hypothesis("non-bipartite other factor must be a family member"))?;
                if named.build()? != *other || !named.has_odd_cycles() {
                    return Err(hypothesis("other factor does not match its family parameters"));
                }
                match d1.cmp(&d2) {
                    std::cmp::Ordering::Equal => 2 * d1,
                    std::cmp::Ordering::Greater => d1.max(2 * d2 + 1),
                    std::cmp::Ordering::Less => d2.max(2 * d1 + 1),
                }
            };
            (SpecialKind::HfFamilies, Finite(value), s1, s2)
        }
        SpecialCase::CycleFamilies { odd_cycle, other } => {
            let m = cycle_length(odd_cycle)
                .filter(|m| m % 2 == 1)
                .ok_or_else(|| hypothesis("first factor must be an odd cycle"))?;
            let s1 = summarize(odd_cycle);
            let s2 = connected_nontrivial(other, "other factor")?;
            let value = if s2.bipartite {
                m.max(finite(s2.diameter))
            } else {
                let n = cycle_length(other)
                    .filter(|n| n % 2 == 1)
                    .ok_or_else(|| hypothesis("non-bipartite other factor must be an odd cycle"))?;
                match m.cmp(&n) {
                    std::cmp::Ordering::Equal => m - 1,
                    std::cmp::Ordering::Greater => n.max((m - 1) / 2),
                    std::cmp::Ordering::Less => m.max((n - 1) / 2),
                }
            };
            (SpecialKind::CycleFamilies, Finite(value), s1, s2)
        }
        SpecialCase::AllLoops(g1, g2) => {
            let s1 = connected_nontrivial(g1, "first factor")?;
            let s2 = connected_nontrivial(g2, "second factor")?;
            if g1.loop_count() != g1.order() || g2.loop_count() != g2.order() {
                return Err(hypothesis("every vertex of both factors must carry a loop"));
            }
            (SpecialKind::AllLoops, s1.diameter.max(s2.diameter), s1, s2)
        }
    };
    Ok(DiameterPrediction {
        value,
        case_tag: CaseTag::ClosedForm(kind),
        bounds: diameter_bounds(&s1, &s2).ok(),
        inputs: PredictionInputs::of(&s1, &s2),
    })
}
