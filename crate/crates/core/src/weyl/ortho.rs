use serde::Serialize;

use crate::catalog::{citation, Citation, EquationId, FamilyId};
use crate::classify::CitedClaim;
use crate::exactnum::{in_half_integers, transcendence_degree, TriBool};

use super::orbit::{orbit_decide, HypothesisStatus, OrbitVerdict};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Orthogonality {
    Orthogonal,
    Nonorthogonal,
    Open,
}

#[derive(Debug, Clone, Serialize)]
pub struct OrthoVerdict {
    pub left: EquationId,
    pub right: EquationId,
    pub verdict: Orthogonality,
    /// Present exactly when the verdict is decided.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub citation: Option<CitedClaim>,
    /// The hypothesis clause that matched, or why none did.
    pub applicability: String,
    /// Questions left open for this pair.
    pub open_questions: Vec<Citation>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub orbit: Option<OrbitVerdict>,
}

struct Decision {
    verdict: Orthogonality,
    citation: Option<CitedClaim>,
    applicability: String,
    open_questions: Vec<&'static str>,
}

fn decided(verdict: Orthogonality, claim: &'static str, id: &'static str, applicability: impl Into<String>) -> Decision {
    Decision {
        verdict,
        citation: Some(CitedClaim::new(claim, id)),
        applicability: applicability.into(),
        open_questions: Vec::new(),
    }
}

fn open(applicability: impl Into<String>, questions: &[&'static str]) -> Decision {
    Decision {
        verdict: Orthogonality::Open,
        citation: None,
        applicability: applicability.into(),
        open_questions: questions.to_vec(),
    }
}

fn td(e: &EquationId) -> usize {
    transcendence_degree(e.params())
}

/// The clause for the second family's Riccati locus `α ∈ ½ + ℤ`.
fn riccati_clause(alpha: &EquationId) -> &'static str {
    match in_half_integers(&alpha.params()[0]) {
        TriBool::No => "α ∉ ½ + ℤ: the whole solution set",
        TriBool::Yes => "α ∈ ½ + ℤ: the solution set with the Riccati subvariety R(α) removed",
        TriBool::Unknown => "α ∈ ½ + ℤ undecided: the whole set if α ∉ ½ + ℤ, otherwise the set minus R(α)",
    }
}

fn cross(a: &EquationId, b: &EquationId) -> Decision {
    use FamilyId::*;
    use Orthogonality::Orthogonal;
    let (fa, fb) = (a.family(), b.family());
    if fa == PII && fb == PIV && a.params()[0].has_transcendental() && b.is_generic() {
        return decided(Orthogonal, "orthogonal", "naggy1", "α transcendental and v̄ generic");
    }
    if fa == PIII && fb == PV && a.is_generic() && b.is_generic() {
        return decided(Orthogonal, "orthogonal", "naggy2", "(α, β) independent transcendentals and v̄ generic");
    }
    if a.is_generic() && b.is_generic() {
        return decided(Orthogonal, "orthogonal", "naggy", "distinct families with generic parameters");
    }
    if fa == PII && fb == PIII {
        if td(b) == 2 {
            let clause = format!("(β, γ) independent transcendentals; {}", riccati_clause(a));
            return decided(Orthogonal, "orthogonal", "orthofam3", clause);
        }
        if td(b) == 1 && a.params()[0].is_algebraic() {
            let clause = format!("td(β, γ) = 1 and α algebraic; {}", riccati_clause(a));
            return decided(Orthogonal, "orthogonal", "orthofam3-td1", clause);
        }
        return open("no clause covers these parameters", &["nongen3orth", "np2"]);
    }
    open("distinct families outside the genericity clauses", &["np2"])
}

fn backlund_citation(family: FamilyId) -> &'static str {
    match family {
        FamilyId::PII => "backlund",
        FamilyId::PIII => "p3-backlund",
        FamilyId::PIV => "p4-backlund",
        FamilyId::PV => "p5-backlund",
        _ => "p6-backlund",
    }
}

fn family_questions(family: FamilyId) -> &'static [&'static str] {
    match family {
        FamilyId::PII => &["ortho2", "np1"],
        FamilyId::PV => &["ques5", "np1"],
        FamilyId::PVI => &["p6-question", "np1"],
        _ => &["np1"],
    }
}

fn same(a: &EquationId, b: &EquationId) -> (Decision, Option<OrbitVerdict>) {
    use Orthogonality::*;
    let f = a.family();
    if f == FamilyId::PI {
        let d = decided(Nonorthogonal, "a strongly minimal set is nonorthogonal to itself", "generic-sm", "the first family has a single equation");
        return (d, None);
    }
    if f == FamilyId::PII {
        let (x, y) = (&a.params()[0], &b.params()[0]);
        if (x.is_algebraic() && y.has_transcendental()) || (y.is_algebraic() && x.has_transcendental()) {
            let d = decided(Orthogonal, "orthogonal", "kernel1", "one parameter algebraic, the other transcendental");
            return (d, None);
        }
    }
    let orbit = orbit_decide(f, a.params(), b.params()).expect("validated equations");
    let prop = orbit.citation.source.id;
    let d = match (orbit.related, orbit.hypothesis_status) {
        (TriBool::Yes, HypothesisStatus::Proved) => {
            decided(Nonorthogonal, "nonorthogonal", prop, "criterion holds under the genericity hypotheses")
        }
        (TriBool::Yes, HypothesisStatus::SufficientOnly) => decided(
            Nonorthogonal,
            "nonorthogonal",
            backlund_citation(f),
            "related by the transformation group",
        ),
        (TriBool::No, HypothesisStatus::Proved) => {
            decided(Orthogonal, "orthogonal", prop, "criterion fails under the genericity hypotheses")
        }
        (TriBool::Yes, _) => open("criterion holds but no group element relates the pair", family_questions(f)),
        (TriBool::No, _) => open("criterion fails outside the genericity hypotheses", family_questions(f)),
        (TriBool::Unknown, _) => open("criterion undecided", family_questions(f)),
    };
    (d, Some(orbit))
}

/// Orthogonality of two equations from the clauses of the stated results.
pub fn cross_family_verdict(eq1: &EquationId, eq2: &EquationId) -> OrthoVerdict {
    let (d, orbit) = if eq1.family() == eq2.family() {
        same(eq1, eq2)
    } else if eq1.family() < eq2.family() {
        (cross(eq1, eq2), None)
    } else {
        (cross(eq2, eq1), None)
    };
    OrthoVerdict {
        left: eq1.clone(),
        right: eq2.clone(),
        verdict: d.verdict,
        citation: d.citation,
        applicability: d.applicability,
        open_questions: d.open_questions.into_iter().map(|q| *citation(q)).collect(),
        orbit,
    }
}
