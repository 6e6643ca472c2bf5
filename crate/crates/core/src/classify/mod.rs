//! Morley rank and degree classification of every fiber of the six
//! families, with tri-valued propagation of undecidable congruences.
//!
//! A stratum test produces the set of strata the point could lie in; the
//! stratum is known when that set is a singleton, and the degree is known
//! when all candidates share one degree.

mod count;
mod strata;

use serde::Serialize;

use crate::catalog::{citation, Citation, EquationId, FamilyId};
use crate::exactnum::{in_even_integers, in_integers, ParamValue, TriBool};

pub use count::Count;
pub use strata::{stratum, HalfIntegerSpecial, Stratum, StratumLabel};

/// A claim together with the source fragment supporting it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CitedClaim {
    pub claim: &'static str,
    #[serde(flatten)]
    pub source: Citation,
}

impl CitedClaim {
    pub fn new(claim: &'static str, id: &str) -> Self {
        CitedClaim {
            claim,
            source: *citation(id),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Component {
    pub name: String,
    pub order: u8,
    pub morley_degree: u32,
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassificationReport {
    pub equation: EquationId,
    pub rank: u32,
    pub degree: Count,
    pub strongly_minimal: TriBool,
    pub stratum: Stratum,
    /// Empty when the degree is unknown.
    pub components: Vec<Component>,
    pub algebraic_solutions: Count,
    pub geometrically_trivial: TriBool,
    pub citations: Vec<CitedClaim>,
    pub notes: Vec<String>,
    pub ambiguities: Vec<String>,
}

pub const PV_W_READING: &str = "stratum W of the fifth family uses pairs i < j; the displayed \
range 1 ≤ i ≤ j ≤ 4 would make W the whole hyperplane";
pub const PVI_L_AMBIGUITY: &str = "two degree statements are given for L ∖ D of the sixth family \
(Morley degree three and Morley degree four); degree three is returned";
pub const PVI_SPECIAL_AFTER_TRANSFORMATION: &str = "the condition v1 - v2 ∈ 1/2 + ℤ, v3 - v4 ∈ ℤ \
holds only after a signed permutation of the parameters";

fn degree_citation(family: FamilyId, label: StratumLabel) -> Option<&'static str> {
    use StratumLabel::*;
    Some(match (family, label) {
        (FamilyId::PI, Generic) => "generic-sm",
        (FamilyId::PII, Generic) => "p2-generic",
        (FamilyId::PII, HalfInteger) => "p2-degree",
        (FamilyId::PIII, Generic) => "p3-generic",
        (FamilyId::PIII, W1) => "p3-w1",
        (FamilyId::PIII, D1) => "p3-d1",
        (FamilyId::PIV, Generic) => "p4-generic",
        (FamilyId::PIV, W) => "p4-w",
        (FamilyId::PIV, D) => "p4-d",
        (FamilyId::PV, Generic) => "p5-generic",
        (FamilyId::PV, W) => "p5-w",
        (FamilyId::PV, S1 | S2 | S1AndS2) => "p5-s",
        (FamilyId::PV, D) => "p5-d",
        (FamilyId::PVI, Generic) => "p6-generic",
        (FamilyId::PVI, M) => "p6-m",
        (FamilyId::PVI, P) => "p6-p",
        (FamilyId::PVI, L) => "p6-l",
        (FamilyId::PVI, D) => "p6-d",
        _ => return None,
    })
}

/// Possible degrees of a stratum label; two for the sixth family's `M`
/// while the half-integer condition is undecided.
fn label_degrees(family: FamilyId, label: StratumLabel, special: TriBool) -> Vec<u32> {
    use StratumLabel::*;
    match (family, label) {
        (_, Generic) => vec![1],
        (FamilyId::PII, HalfInteger) => vec![2],
        (FamilyId::PIII, W1) | (FamilyId::PIV, W) | (FamilyId::PV, W) => vec![2],
        (FamilyId::PIII, D1) | (FamilyId::PIV, D) => vec![3],
        (FamilyId::PV, S1 | S2 | S1AndS2) => vec![3],
        (FamilyId::PV, D) => vec![4],
        (FamilyId::PVI, M) => match special {
            TriBool::Yes => vec![4],
            TriBool::No => vec![2],
            TriBool::Unknown => vec![2, 4],
        },
        (FamilyId::PVI, P | L) => vec![3],
        (FamilyId::PVI, D) => vec![5],
        _ => unreachable!("label {label:?} does not belong to {family}"),
    }
}

fn components(family: FamilyId, label: StratumLabel, degree: u32, alpha: Option<&ParamValue>) -> Vec<Component> {
    let mut out = vec![Component {
        name: "generic".into(),
        order: 2,
        morley_degree: 1,
    }];
    if family == FamilyId::PII && label == StratumLabel::HalfInteger {
        let a = alpha.expect("PII has one parameter");
        out.push(Component {
            name: format!("riccati R({a})"),
            order: 1,
            morley_degree: 1,
        });
        return out;
    }
    for i in 1..degree {
        out.push(Component {
            name: format!("exceptional order-one subvariety {i}"),
            order: 1,
            morley_degree: 1,
        });
    }
    out
}

/// Murata's count for the third family: 4 when both `v₂ − v₁ − 1` and
/// `v₂ + v₁ + 1` lie in 2ℤ, 2 when exactly one does, 0 when neither.
pub fn algebraic_solution_count_p3(v1: &ParamValue, v2: &ParamValue) -> Count {
    let one = ParamValue::int(1);
    let c1 = in_even_integers(&(&(v2 - v1) - &one));
    let c2 = in_even_integers(&(&(v2 + v1) + &one));
    match (c1, c2) {
        (TriBool::Yes, TriBool::Yes) => Count::Known(4),
        (TriBool::Yes, TriBool::No) | (TriBool::No, TriBool::Yes) => Count::Known(2),
        (TriBool::No, TriBool::No) => Count::Known(0),
        _ => Count::Unknown,
    }
}

fn merge_counts(counts: impl IntoIterator<Item = Count>) -> Count {
    let mut it = counts.into_iter();
    let first = it.next().unwrap_or(Count::Unknown);
    if it.all(|c| c == first) {
        first
    } else {
        Count::Unknown
    }
}

fn algebraic_solutions(eq: &EquationId, st: &Stratum, cites: &mut Vec<CitedClaim>) -> Count {
    let v = eq.params();
    match eq.family() {
        FamilyId::PI => {
            cites.push(CitedClaim::new("no algebraic solutions for generic parameters", "generic-sm"));
            Count::Known(0)
        }
        FamilyId::PII => {
            cites.push(CitedClaim::new("algebraic solution iff α ∈ ℤ, and then unique", "p2-murata"));
            match in_integers(&v[0]) {
                TriBool::Yes => Count::Known(1),
                TriBool::No => Count::Known(0),
                TriBool::Unknown => Count::Unknown,
            }
        }
        FamilyId::PIII => {
            cites.push(CitedClaim::new("algebraic solution count", "p3-murata"));
            algebraic_solution_count_p3(&v[0], &v[1])
        }
        FamilyId::PV => {
            let per_label = st.candidates.iter().map(|l| match l {
                StratumLabel::S2 => Count::Known(1),
                StratumLabel::D => Count::Known(2),
                _ => Count::Unknown,
            });
            let c = merge_counts(per_label);
            match c {
                Count::Known(1) => cites.push(CitedClaim::new("one algebraic solution on S2 ∖ D", "p5-alg1")),
                Count::Known(2) => cites.push(CitedClaim::new("two algebraic solutions on D", "p5-alg2")),
                _ => {}
            }
            c
        }
        FamilyId::PIV | FamilyId::PVI => Count::Unknown,
    }
}

fn geometric_triviality(eq: &EquationId, cites: &mut Vec<CitedClaim>) -> TriBool {
    match eq.family() {
        FamilyId::PII => {
            cites.push(CitedClaim::new("geometric triviality for every α", "p2-trivial"));
            TriBool::Yes
        }
        _ if eq.is_generic() => {
            cites.push(CitedClaim::new("geometric triviality for generic parameters", "generic-trivial"));
            TriBool::Yes
        }
        FamilyId::PVI => {
            cites.push(CitedClaim::new("some non-generic fibers are not geometrically trivial", "p6-manin"));
            TriBool::Unknown
        }
        _ => TriBool::Unknown,
    }
}

pub fn classify(eq: &EquationId) -> ClassificationReport {
    let family = eq.family();
    let st = stratum(eq);
    let special = st
        .half_integer_special
        .as_ref()
        .map(|h| h.holds)
        .unwrap_or(TriBool::No);
    let mut citations = vec![CitedClaim::new("Morley rank 1", "rank-one")];
    let mut notes = Vec::new();
    let mut ambiguities = Vec::new();

    let mut degrees: Vec<u32> = st
        .candidates
        .iter()
        .flat_map(|l| label_degrees(family, *l, special))
        .collect();
    degrees.sort_unstable();
    degrees.dedup();
    let degree = match degrees.as_slice() {
        [d] => Count::Known(*d),
        _ => Count::Unknown,
    };
    let strongly_minimal = if degrees.iter().all(|d| *d == 1) {
        TriBool::Yes
    } else if degrees.iter().all(|d| *d != 1) {
        TriBool::No
    } else {
        TriBool::Unknown
    };

    for l in &st.candidates {
        if let Some(id) = degree_citation(family, *l) {
            let claim = if *l == StratumLabel::Generic {
                "strongly minimal off the exceptional strata"
            } else {
                "Morley degree of the stratum"
            };
            let c = CitedClaim::new(claim, id);
            if !citations.contains(&c) {
                citations.push(c);
            }
        }
    }
    if family == FamilyId::PVI && st.candidates.contains(&StratumLabel::L) {
        citations.push(CitedClaim::new("conflicting degree statement for L ∖ D", "p6-l-alt"));
        ambiguities.push(PVI_L_AMBIGUITY.to_string());
    }
    if family == FamilyId::PV {
        notes.push(PV_W_READING.to_string());
    }
    if let Some(h) = &st.half_integer_special {
        if h.after_transformation && st.candidates.contains(&StratumLabel::M) {
            notes.push(PVI_SPECIAL_AFTER_TRANSFORMATION.to_string());
        }
    }
    if family == FamilyId::PI {
        notes.push("the first family has no parameters; its equation is the literature-standard form".to_string());
    }

    // Candidates sharing a degree share a component structure.
    let components = match (degree, st.candidates.first()) {
        (Count::Known(d), Some(label)) => components(family, *label, d, eq.params().first()),
        _ => Vec::new(),
    };
    let algebraic_solutions = algebraic_solutions(eq, &st, &mut citations);
    if algebraic_solutions == Count::Unknown {
        notes.push(match family {
            FamilyId::PIV | FamilyId::PVI => {
                "no algebraic-solution criterion for this family is available".to_string()
            }
            _ => "algebraic-solution count is not determined for these parameters".to_string(),
        });
    }
    let geometrically_trivial = geometric_triviality(eq, &mut citations);

    ClassificationReport {
        equation: eq.clone(),
        rank: 1,
        degree,
        strongly_minimal,
        stratum: st,
        components,
        algebraic_solutions,
        geometrically_trivial,
        citations,
        notes,
        ambiguities,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn eq(f: FamilyId, s: &str) -> EquationId {
        EquationId::parse(f, s).unwrap()
    }

    #[test]
    fn half_integer_pii() {
        let r = classify(&eq(FamilyId::PII, "1/2"));
        assert_eq!(r.degree, Count::Known(2));
        assert_eq!(r.components.len(), 2);
        assert_eq!(r.components[1].name, "riccati R(1/2)");
        assert_eq!(r.algebraic_solutions, Count::Known(0));
        assert_eq!(r.strongly_minimal, TriBool::No);
    }

    #[test]
    fn murata_p3() {
        let p = |s: &str| crate::exactnum::parse_param(s).unwrap();
        assert_eq!(algebraic_solution_count_p3(&p("1"), &p("0")), Count::Known(4));
        assert_eq!(algebraic_solution_count_p3(&p("0"), &p("0")), Count::Known(0));
        assert_eq!(algebraic_solution_count_p3(&p("tau1"), &p("tau2")), Count::Known(0));
        assert_eq!(algebraic_solution_count_p3(&p("1/2"), &p("1/2")), Count::Known(2));
        assert_eq!(algebraic_solution_count_p3(&p("tau1"), &p("tau1")), Count::Known(0));
        assert_eq!(algebraic_solution_count_p3(&p("alg1"), &p("alg2")), Count::Unknown);
    }

    #[test]
    fn unknown_propagates() {
        let r = classify(&eq(FamilyId::PII, "alg1 + alg2"));
        assert_eq!(r.stratum.label, StratumLabel::Unknown);
        assert_eq!(r.degree, Count::Unknown);
        assert_eq!(r.strongly_minimal, TriBool::Unknown);
        assert_eq!(r.algebraic_solutions, Count::Unknown);
        assert!(r.components.is_empty());
    }

    #[test]
    fn components_sum_to_degree() {
        for (f, s) in [
            (FamilyId::PIV, "0,0,0"),
            (FamilyId::PV, "0,0,0,0"),
            (FamilyId::PVI, "0,0,0,0"),
            (FamilyId::PIII, "tau1, tau2"),
        ] {
            let r = classify(&eq(f, s));
            let Count::Known(d) = r.degree else { panic!() };
            assert_eq!(r.components.iter().map(|c| c.morley_degree).sum::<u32>(), d);
        }
    }
}
