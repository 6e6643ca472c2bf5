use serde::Serialize;

use crate::catalog::{
    even_signed_permutations, inner_product, root_system, EquationId, FamilyId, SignedPermutation,
};
use crate::exactnum::{in_half_integers, in_integers, integer_rank, ParamValue, TriBool};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum StratumLabel {
    #[serde(rename = "generic")]
    Generic,
    #[serde(rename = "half-integer")]
    HalfInteger,
    W1,
    D1,
    W,
    S1,
    S2,
    #[serde(rename = "S1-and-S2")]
    S1AndS2,
    D,
    M,
    P,
    L,
    #[serde(rename = "unknown")]
    Unknown,
}

/// The sixth family's half-integer condition `v₁ − v₂ ∈ ½ + ℤ`,
/// `v₃ − v₄ ∈ ℤ`, tested over the 192 even signed permutations.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HalfIntegerSpecial {
    pub holds: TriBool,
    /// Holds for some image but not for `v` itself.
    pub after_transformation: bool,
    /// A signed permutation `g` with the condition provable for `g·v`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<SignedPermutation>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Stratum {
    pub family: FamilyId,
    /// `Unknown` unless exactly one candidate remains.
    pub label: StratumLabel,
    /// Strata the point may lie in, deepest first.
    pub candidates: Vec<StratumLabel>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub half_integer_special: Option<HalfIntegerSpecial>,
    /// Sixth family: rank of the span of roots pairing integrally, as
    /// (provable, possible).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub root_rank: Option<(usize, usize)>,
}

struct Cond {
    label: StratumLabel,
    test: TriBool,
    /// Strata that contain this one.
    supersets: &'static [StratumLabel],
}

/// Deepest-first resolution: a Yes ends the scan, an Unknown keeps the
/// label as a candidate and continues. Labels whose superset conditions
/// decide No are discarded.
fn resolve(conds: &[Cond]) -> Vec<StratumLabel> {
    let test_of = |l: StratumLabel| conds.iter().find(|c| c.label == l).map(|c| c.test);
    let mut out = Vec::new();
    for c in conds {
        if c.test.is_no() || c.supersets.iter().any(|s| test_of(*s) == Some(TriBool::No)) {
            continue;
        }
        out.push(c.label);
        if c.test.is_yes() {
            return out;
        }
    }
    out.push(StratumLabel::Generic);
    out
}

fn diff_in_z(v: &[ParamValue], i: usize, j: usize) -> TriBool {
    in_integers(&(&v[i] - &v[j]))
}

fn conditions(family: FamilyId, v: &[ParamValue]) -> Vec<Cond> {
    use StratumLabel::*;
    match family {
        FamilyId::PI | FamilyId::PVI => Vec::new(),
        FamilyId::PII => vec![Cond {
            label: HalfInteger,
            test: in_half_integers(&v[0]),
            supersets: &[],
        }],
        FamilyId::PIII => {
            let d1 = in_integers(&v[0])
                .and(in_integers(&v[1]))
                .and(crate::exactnum::in_even_integers(&(&v[0] + &v[1])));
            let w1 = crate::exactnum::in_even_integers(&(&v[0] - &v[1]));
            vec![
                Cond { label: D1, test: d1, supersets: &[W1] },
                Cond { label: W1, test: w1, supersets: &[] },
            ]
        }
        FamilyId::PIV => {
            let ds = [diff_in_z(v, 0, 1), diff_in_z(v, 2, 1), diff_in_z(v, 0, 2)];
            vec![
                Cond { label: D, test: TriBool::all(ds), supersets: &[W] },
                Cond { label: W, test: TriBool::any(ds), supersets: &[] },
            ]
        }
        FamilyId::PV => {
            let c = |i, j| diff_in_z(v, i, j);
            let pairs = [c(0, 1), c(0, 2), c(0, 3), c(1, 2), c(1, 3), c(2, 3)];
            let d = TriBool::all(pairs);
            let s1 = TriBool::any([
                c(0, 1).and(c(2, 3)),
                c(0, 2).and(c(1, 3)),
                c(0, 3).and(c(1, 2)),
            ]);
            let s2 = TriBool::any([
                c(0, 1).and(c(1, 2)),
                c(0, 1).and(c(1, 3)),
                c(0, 2).and(c(2, 3)),
                c(1, 2).and(c(2, 3)),
            ]);
            let w = TriBool::any(pairs);
            vec![
                Cond { label: D, test: d, supersets: &[S1AndS2, S1, S2, W] },
                Cond { label: S1AndS2, test: s1.and(s2), supersets: &[S1, S2, W] },
                Cond { label: S1, test: s1, supersets: &[W] },
                Cond { label: S2, test: s2, supersets: &[W] },
                Cond { label: W, test: w, supersets: &[] },
            ]
        }
    }
}

fn apply_signed(g: &SignedPermutation, v: &[ParamValue]) -> Vec<ParamValue> {
    let (perm, signs) = g;
    (0..4)
        .map(|i| {
            let x = &v[perm[i]];
            if signs[i] < 0 {
                -x
            } else {
                x.clone()
            }
        })
        .collect()
}

pub fn half_integer_condition(v: &[ParamValue]) -> TriBool {
    in_half_integers(&(&v[0] - &v[1])).and(in_integers(&(&v[2] - &v[3])))
}

fn half_integer_special(v: &[ParamValue]) -> HalfIntegerSpecial {
    let direct = half_integer_condition(v);
    let mut holds = TriBool::No;
    let mut witness = None;
    for g in even_signed_permutations() {
        let t = half_integer_condition(&apply_signed(g, v));
        if t.is_yes() {
            witness = Some(*g);
            holds = TriBool::Yes;
            break;
        }
        holds = holds.or(t);
    }
    HalfIntegerSpecial {
        holds,
        after_transformation: holds.is_yes() && !direct.is_yes(),
        witness,
    }
}

/// Ranks of the spans of the roots with `⟨v, α⟩ ∈ ℤ` provable, and provable
/// or undecided.
pub fn pvi_root_ranks(v: &[ParamValue]) -> (usize, usize) {
    let mut yes = Vec::new();
    let mut maybe = Vec::new();
    for a in root_system().roots() {
        match in_integers(&inner_product(v, a)) {
            TriBool::Yes => {
                yes.push(a.to_vec());
                maybe.push(a.to_vec());
            }
            TriBool::Unknown => maybe.push(a.to_vec()),
            TriBool::No => {}
        }
    }
    (integer_rank(&yes), integer_rank(&maybe))
}

fn pvi_label(rank: usize) -> StratumLabel {
    use StratumLabel::*;
    [Generic, M, P, L, D][rank]
}

pub fn stratum(eq: &EquationId) -> Stratum {
    let family = eq.family();
    let v = eq.params();
    let (candidates, special, root_rank) = if family == FamilyId::PVI {
        let (lo, hi) = pvi_root_ranks(v);
        let cands: Vec<StratumLabel> = (lo..=hi).rev().map(pvi_label).collect();
        let special = cands
            .contains(&StratumLabel::M)
            .then(|| half_integer_special(v));
        (cands, special, Some((lo, hi)))
    } else {
        (resolve(&conditions(family, v)), None, None)
    };
    let label = match candidates.as_slice() {
        [l] => *l,
        _ => StratumLabel::Unknown,
    };
    Stratum {
        family,
        label,
        candidates,
        half_integer_special: special,
        root_rank,
    }
}
