//! Source fragments backing every verdict.
//!
//! Each entry carries a stable id, a location label and a short verbatim
//! mathematical fragment (LaTeX markup rendered as Unicode).

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Citation {
    pub id: &'static str,
    pub location: &'static str,
    pub quote: &'static str,
}

macro_rules! citations {
    ($($id:literal, $loc:literal, $quote:literal;)*) => {
        const TABLE: &[Citation] = &[$(Citation { id: $id, location: $loc, quote: $quote }),*];
    };
}

citations! {
    "rank-one", "abstract",
        "any equation in any of the Painlevé families has Morley rank one";
    "generic-sm", "introduction",
        "Painlevé equations with generic parameters are strongly minimal with no algebraic solutions";
    "generic-trivial", "introduction",
        "the types of solutions to Painlevé equations with generic parameters are geometrically trivial";
    "p2-degree", "second family, rank and degree",
        "Morley rank one and Morley degree two";
    "p2-generic", "second family, rank and degree",
        "for generic coefficient α, P_II(α) is strongly minimal";
    "p2-murata", "second family, algebraic solutions",
        "has a solution in ℂ(t)^alg if and only if α ∈ ℤ; in this case, there is a unique element";
    "p2-trivial", "abstract",
        "the type of the generic solution of any equation in the second Painlevé family is geometrically trivial";
    "p2-riccati", "second family, rank and degree",
        "y_1' = y_1^2 + ½ t";
    "p3-generic", "third family, rank and degree",
        "for v̄ not in W_1 or D_1, X_III(v̄) is strongly minimal";
    "p3-w1", "third family, rank and degree",
        "For v̄ ∈ W_1, … X_III(v̄) has Morley rank one and Morley degree two";
    "p3-d1", "third family, rank and degree",
        "For v̄ ∈ D_1, … X_III(v̄) has Morley rank one and Morley degree three";
    "p3-murata", "Theorem Murata3",
        "There are four algebraic solutions precisely when both v_2 − v_1 − 1 ∈ 2ℤ and v_2 + v_1 + 1 ∈ 2ℤ";
    "p4-generic", "fourth family, rank and degree",
        "satisfies Condition J (has no differential subvarieties except for finite sets of points)";
    "p4-w", "fourth family, rank and degree",
        "has one irreducible order one differential subvariety, and so X_IV(v̄) has Morley rank one and Morley degree two";
    "p4-d", "fourth family, rank and degree",
        "has two irreducible order one differential subvarieties";
    "p5-generic", "fifth family, rank and degree",
        "for v̄ ∉ W, S(v̄) is strongly minimal";
    "p5-w", "fifth family, rank and degree",
        "for v̄ such that v̄ ∈ W, but v̄ ∉ S_1 ∪ S_2, the set X_V(v̄) is of Morley rank one and Morley degree two";
    "p5-s", "fifth family, rank and degree",
        "X_V(v̄) has Morley rank one and Morley degree three";
    "p5-d", "fifth family, rank and degree",
        "for v̄ ∈ D, X_V(v̄) has Morley rank one and Morley degree four";
    "p5-alg1", "fifth family, algebraic solutions",
        "for v̄ ∈ S_2 ∖ D, X_V(v̄) has one algebraic solution";
    "p5-alg2", "fifth family, algebraic solutions",
        "If v̄ ∈ D, X_V(v̄) has two algebraic solutions";
    "p6-generic", "sixth family, rank and degree",
        "for v̄ ∉ M, the solution set of the sixth Painlevé equation … is strongly minimal";
    "p6-m", "sixth family, rank and degree",
        "Morley degree two unless v_1 − v_2 ∈ ½ + ℤ and v_3 − v_4 ∈ ℤ, in which case X_VI(v̄) has Morley degree four";
    "p6-p", "sixth family, rank and degree",
        "for v̄ ∈ P ∖ L, X_VI(v̄) is Morley rank one and Morley degree three";
    "p6-l", "sixth family, rank and degree",
        "for v̄ ∈ L ∖ D, X_VI(v̄) is Morley rank one and Morley degree three";
    "p6-l-alt", "sixth family, rank and degree",
        "for v̄ ∈ L ∖ D, X_VI(v̄) is Morley rank one and Morley degree four";
    "p6-d", "sixth family, rank and degree",
        "for v̄ ∈ D, X_VI(v̄) is Morley rank one and Morley degree five";
    "p6-manin", "introduction, footnote",
        "An infinite collection of the fibers of P_VI are nonorthogonal to Manin kernels of elliptic curves";
    "genone", "Prop. genone",
        "X_II(α) is nonorthogonal to X_II(β) if and only if β − α ∈ ℤ or β + α ∈ ℤ";
    "p3orth", "Prop. P3orth",
        "nonorthogonal to X_III(w_1, w_2) if and only if the sets {π(v_2−v_1), π(v_1−v_2)} and {π(w_2−w_1), π(w_1−w_2)} are identical";
    "p4orth", "Prop. P4orth",
        "nonorthogonal to X_IV(w̄) if and only if there is a permutation σ of {1,2,3} such that for i=1,2,3, v_i − w_σ(i) ∈ ℤ";
    "p5orth", "fifth family, orthogonality",
        "X_V(v̄) is orthogonal to X_V(w̄) unless there is σ ∈ S_4 and a ∈ ℤ such that a/4 (1,1,1) + (v_σ(1), v_σ(2), v_σ(3)) − (w_1,w_2,w_3) ∈ ℤ^3";
    "p5-backlund", "fifth family, transformation group",
        "are nonorthogonal (there is a ℚ-definable bijection between the sets)";
    "p6-backlund", "sixth family, transformation group",
        "we have X_VI(v̄) is nonorthogonal to X_VI(w̄)";
    "backlund", "second family, transformations",
        "birational bijections between X_II(α) and X_II(−1 − α)";
    "naggy", "Theorem Naggy",
        "Any two Painlevé equations which have generic parameters and come from distinct families (I-VI) are orthogonal";
    "naggy1", "Prop. Naggy1",
        "Let α be transcendental, and let v̄ ∈ V be generic. Then X_II(α) is orthogonal to X_IV(v̄)";
    "naggy2", "Prop. Naggy2",
        "Let α,β be transcendental and independent, and let v̄ ∈ V be generic. Then X_III(α, β) is orthogonal to X_V(v̄)";
    "kernel1", "Prop. kernel1",
        "Let a ∈ ℚ^alg and let α be transcendental. Then X_II(a) is orthogonal to X_II(α)";
    "orthofam3", "Prop. orthofam3",
        "For any α ∈ ℂ ∖ (½ + ℤ), and any β, γ ∈ ℂ which are independent and transcendental over ℚ, X_II(α) is orthogonal to X_III(β, γ). For any α ∈ ½ + ℤ, X_II(α) ∖ R(α) is orthogonal to X_III(β, γ)";
    "orthofam3-td1", "third family, orthogonality to the second family",
        "Suppose that the transcendence degree of (β, γ) is one and α ∈ ℚ^alg. If α ∉ ½ + ℤ, then X_II(α) is orthogonal to X_III(β, γ). If α ∈ ½ + ℤ, X_II(α) ∖ R(α) is orthogonal to X_III(β, γ)";
    "p3-backlund", "third family, rank and degree",
        "the fibers of the family related by an affine transformation in the group generated by";
    "p4-backlund", "fourth family, transformation group",
        "For parameters v̄, w̄ which are in the same orbit under H, the sets X_IV(v̄) and X_IV(w̄) are isomorphic";
    "np1", "Question np1",
        "do the groups of affine transformations (Backlünd transformations) give all instances of nonorthogonality of between fibers of the family of equations?";
    "np2", "Question np2",
        "Are generic solutions to equations from distinct Painlevé families orthogonal?";
    "ortho2", "Question ortho2",
        "X_II(α) is nonorthogonal to X_II(β) … β − α ∈ ℤ or β + α ∈ ℤ. Are the two conditions equivalent?";
    "nongen3orth", "Question nongen3orth",
        "For any complex parameters, α, β, γ, are the generic types of X_II(α) and X_III(β, γ) orthogonal?";
    "ques5", "Question ques5",
        "then are X_V(v̄) and X_V(w̄) orthogonal?";
    "p6-question", "sixth family, orthogonality",
        "For v̄, w̄ such that there is no g ∈ W such that g v̄ = w̄, is X_VI(v̄) orthogonal to X_VI(w̄)?";
    "pv-change", "fifth family, change of variables",
        "Setting q = Q/(Q−1) and p = −(Q−1)^2 P + (v_3−v_1)(Q−1)";
    "p4-s0", "fourth family, transformation group",
        "Direct calculations allow one to verify that s_0(v_1, v_2, v_3) = (v_1, v_3+1, v_2−1)";
    "p5-composite", "fifth family, transformation group",
        "t_-^{-1} s_3 s_1 s_2 s_1 s_3 t_- (v_1, v_2, v_3, v_4) = (v_1, v_4+1, v_3, v_2−1)";
}

/// Looks up a citation by id.
///
/// # Panics
///
/// Panics on an unknown id; ids are compile-time constants of this crate.
pub fn citation(id: &str) -> &'static Citation {
    TABLE
        .iter()
        .find(|c| c.id == id)
        .unwrap_or_else(|| panic!("unknown citation id {id:?}"))
}

pub fn all_citations() -> &'static [Citation] {
    TABLE
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_unique() {
        for (i, a) in TABLE.iter().enumerate() {
            assert!(TABLE[i + 1..].iter().all(|b| b.id != a.id), "{}", a.id);
        }
    }
}
