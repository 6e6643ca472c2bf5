use num_bigint::BigInt;
use serde::Serialize;

use crate::catalog::{permutations4, EquationId, FamilyId};
use crate::classify::CitedClaim;
use crate::exactnum::{
    as_integer, in_even_integers, in_integers, rat, transcendence_degree, ParamValue, Rational, TriBool,
};

use super::synth::{synthesize, WordSearch};
use super::word::Word;
use super::{WeylError, DEFAULT_WORD_BOUND};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum HypothesisStatus {
    /// The proposition's genericity clauses hold; the criterion decides
    /// nonorthogonality in both directions.
    Proved,
    /// The pair is related by the transformation group, which certifies
    /// nonorthogonality.
    SufficientOnly,
    Open,
}

/// The data that makes the criterion hold.
///
/// `translation` is the integer vector `n` of the matching condition:
/// - PII, PIV, PVI: `nᵢ = vᵢ − (−1)^{eᵢ} w_{σ(i)}`;
/// - PIII: `n = (v₁ − v₂) − (−1)^e (w₁ − w₂)`, even;
/// - PV: `nᵢ = (a/4)cᵢ + v_{σ(i)} − wᵢ` with `c = (1, 1, 1, −3)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    /// One-based images `σ(1), …, σ(n)`.
    pub permutation: Vec<usize>,
    /// Sign exponents `eᵢ`; the sign is `(−1)^{eᵢ}`.
    pub signs: Vec<u8>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub a: Option<u8>,
    #[serde(serialize_with = "ser_ints")]
    pub translation: Vec<BigInt>,
}

fn ser_ints<S: serde::Serializer>(xs: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(xs.iter().map(|x| x.to_string()))
}

#[derive(Debug, Clone, Serialize)]
pub struct OrbitVerdict {
    pub family: FamilyId,
    pub v: Vec<ParamValue>,
    pub w: Vec<ParamValue>,
    pub related: TriBool,
    pub criterion: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub word: Option<Word>,
    pub word_search: WordSearch,
    pub hypothesis_status: HypothesisStatus,
    pub citation: CitedClaim,
    pub notes: Vec<String>,
}

pub const PIII_SUM_NOTE: &str = "the criterion holds but no element of ⟨s1, s2, s3, s4⟩ maps v to w: \
the generators fix v1 + v2 modulo 2ℤ up to sign";

fn sign(e: u8, x: &ParamValue) -> ParamValue {
    if e == 1 {
        -x
    } else {
        x.clone()
    }
}

fn criterion_text(family: FamilyId) -> &'static str {
    match family {
        FamilyId::PI => "",
        FamilyId::PII => "w − v ∈ ℤ or w + v ∈ ℤ",
        FamilyId::PIII => "{±(v1 − v2)} = {±(w1 − w2)} modulo 2ℤ",
        FamilyId::PIV => "some permutation σ has vi − wσ(i) ∈ ℤ for i = 1, 2, 3",
        FamilyId::PV => "some σ ∈ S4 and a ∈ {0, 1, 2, 3} have a/4·(1, 1, 1) + (vσ(1), vσ(2), vσ(3)) − (w1, w2, w3) ∈ ℤ³",
        FamilyId::PVI => {
            "some σ ∈ S4 and signs of even weight have v − ((−1)^i wσ(1), …, (−1)^l wσ(4)) ∈ ℤ⁴ with coordinate sum in 2ℤ"
        }
    }
}

fn citation_id(family: FamilyId) -> &'static str {
    match family {
        FamilyId::PI => "generic-sm",
        FamilyId::PII => "genone",
        FamilyId::PIII => "p3orth",
        FamilyId::PIV => "p4orth",
        FamilyId::PV => "p5orth",
        FamilyId::PVI => "p6-backlund",
    }
}

struct Candidate {
    permutation: Vec<usize>,
    signs: Vec<u8>,
    a: Option<u8>,
    diffs: Vec<ParamValue>,
    test: TriBool,
}

fn candidates(family: FamilyId, v: &[ParamValue], w: &[ParamValue]) -> Vec<Candidate> {
    let mut out = Vec::new();
    match family {
        FamilyId::PI => {}
        FamilyId::PII => {
            for e in 0..2u8 {
                let d = &v[0] - &sign(e, &w[0]);
                out.push(Candidate {
                    permutation: vec![1],
                    signs: vec![e],
                    a: None,
                    test: in_integers(&d),
                    diffs: vec![d],
                });
            }
        }
        FamilyId::PIII => {
            let dv = &v[0] - &v[1];
            let dw = &w[0] - &w[1];
            for e in 0..2u8 {
                let d = &dv - &sign(e, &dw);
                out.push(Candidate {
                    permutation: vec![1, 2],
                    signs: vec![e],
                    a: None,
                    test: in_even_integers(&d),
                    diffs: vec![d],
                });
            }
        }
        FamilyId::PIV => {
            let perms = permutations4().into_iter().filter(|p| p[3] == 3);
            for p in perms {
                let diffs: Vec<ParamValue> = (0..3).map(|i| &v[i] - &w[p[i]]).collect();
                out.push(Candidate {
                    permutation: p[..3].iter().map(|x| x + 1).collect(),
                    signs: vec![0; 3],
                    a: None,
                    test: TriBool::all(diffs.iter().map(in_integers)),
                    diffs,
                });
            }
        }
        FamilyId::PV => {
            let c = [1, 1, 1, -3];
            for p in permutations4() {
                for a in 0..4u8 {
                    let diffs: Vec<ParamValue> = (0..4)
                        .map(|i| (&v[p[i]] - &w[i]).add_rational(&rat(i64::from(a) * c[i], 4)))
                        .collect();
                    out.push(Candidate {
                        permutation: p.iter().map(|x| x + 1).collect(),
                        signs: vec![0; 4],
                        a: Some(a),
                        test: TriBool::all(diffs[..3].iter().map(in_integers)),
                        diffs,
                    });
                }
            }
        }
        FamilyId::PVI => {
            for p in permutations4() {
                for mask in (0u8..16).filter(|m| m.count_ones() % 2 == 0) {
                    let signs: Vec<u8> = (0..4).map(|i| mask >> i & 1).collect();
                    let diffs: Vec<ParamValue> = (0..4).map(|i| &v[i] - &sign(signs[i], &w[p[i]])).collect();
                    let sum = diffs.iter().fold(ParamValue::zero(), |acc, d| &acc + d);
                    out.push(Candidate {
                        permutation: p.iter().map(|x| x + 1).collect(),
                        signs,
                        a: None,
                        test: TriBool::all(diffs.iter().map(in_integers)).and(in_even_integers(&sum)),
                        diffs,
                    });
                }
            }
        }
    }
    out
}

/// Evaluates the family's criterion; the witness is the first candidate, in
/// lexicographic order of (σ, signs, a), that provably matches.
/// The relation is symmetric while the coordinate tests are not, so an
/// undecided forward test defers to a decided reverse one. A reverse Yes
/// forces a forward Yes, since exact witnesses invert.
pub fn criterion(family: FamilyId, v: &[ParamValue], w: &[ParamValue]) -> (TriBool, Option<Witness>) {
    match one_way(family, v, w) {
        (TriBool::Unknown, _) if one_way(family, w, v).0.is_no() => (TriBool::No, None),
        forward => forward,
    }
}

fn one_way(family: FamilyId, v: &[ParamValue], w: &[ParamValue]) -> (TriBool, Option<Witness>) {
    let mut related = TriBool::No;
    for c in candidates(family, v, w) {
        if c.test.is_yes() {
            let translation = c
                .diffs
                .iter()
                .map(|d| as_integer(d).expect("decided integral"))
                .collect();
            let witness = Witness {
                permutation: c.permutation,
                signs: c.signs,
                a: c.a,
                translation,
            };
            return (TriBool::Yes, Some(witness));
        }
        related = related.or(c.test);
    }
    (related, None)
}

impl Witness {
    /// Exact re-check that the recorded data reproduces `w` from `v`.
    pub fn verify(&self, family: FamilyId, v: &[ParamValue], w: &[ParamValue]) -> bool {
        let n: Vec<ParamValue> = self
            .translation
            .iter()
            .map(|x| ParamValue::rational(Rational::from_integer(x.clone())))
            .collect();
        let sigma: Vec<usize> = self.permutation.iter().map(|x| x - 1).collect();
        let even = |x: &BigInt| x % 2 == BigInt::from(0);
        match family {
            FamilyId::PI => false,
            FamilyId::PII => sign(self.signs[0], &(&v[0] - &n[0])) == w[0],
            FamilyId::PIII => {
                even(&self.translation[0])
                    && sign(self.signs[0], &(&(&v[0] - &v[1]) - &n[0])) == &w[0] - &w[1]
            }
            FamilyId::PIV => (0..3).all(|i| &v[i] - &n[i] == w[sigma[i]]),
            FamilyId::PV => {
                let a = i64::from(self.a.unwrap_or(0));
                let c = [1, 1, 1, -3];
                (0..4).all(|i| (&v[sigma[i]] - &n[i]).add_rational(&rat(a * c[i], 4)) == w[i])
            }
            FamilyId::PVI => {
                let weight: u32 = self.signs.iter().map(|&e| u32::from(e)).sum();
                let total = self.translation.iter().fold(BigInt::from(0), |acc, x| acc + x);
                weight.is_multiple_of(2)
                    && even(&total)
                    && (0..4).all(|i| sign(self.signs[i], &(&v[i] - &n[i])) == w[sigma[i]])
            }
        }
    }
}

/// Whether the genericity clauses of the family's nonorthogonality
/// proposition hold for the pair.
pub fn hypotheses_hold(family: FamilyId, v: &[ParamValue], w: &[ParamValue]) -> bool {
    let td = transcendence_degree;
    match family {
        FamilyId::PI | FamilyId::PVI => false,
        FamilyId::PII => v[0].has_transcendental() || w[0].has_transcendental(),
        FamilyId::PIII => td(v) == 2 && td(w) == 2,
        FamilyId::PIV => td(v) == 2 || td(w) == 2,
        FamilyId::PV => td(v) == 3 || td(w) == 3,
    }
}

pub fn orbit_decide(family: FamilyId, v: &[ParamValue], w: &[ParamValue]) -> Result<OrbitVerdict, WeylError> {
    orbit_decide_with_bound(family, v, w, DEFAULT_WORD_BOUND)
}

pub fn orbit_decide_with_bound(
    family: FamilyId,
    v: &[ParamValue],
    w: &[ParamValue],
    bound: usize,
) -> Result<OrbitVerdict, WeylError> {
    if family == FamilyId::PI {
        return Err(WeylError::NoGenerators(family));
    }
    EquationId::new(family, v.to_vec())?;
    EquationId::new(family, w.to_vec())?;
    let (related, witness) = criterion(family, v, w);
    let (word, word_search) = if related.is_yes() {
        synthesize(family, v, w, bound)?
    } else {
        (None, WordSearch::NotAttempted)
    };
    let mut notes = Vec::new();
    let hypothesis_status = if hypotheses_hold(family, v, w) && !related.is_unknown() {
        HypothesisStatus::Proved
    } else if related.is_yes() && (word.is_some() || family != FamilyId::PIII) {
        HypothesisStatus::SufficientOnly
    } else {
        HypothesisStatus::Open
    };
    if related.is_yes() && family == FamilyId::PIII && word.is_none() {
        notes.push(PIII_SUM_NOTE.to_string());
    }
    if family == FamilyId::PVI && related.is_no() {
        notes.push("whether unrelated sixth-family parameters give orthogonal equations is open".into());
    }
    Ok(OrbitVerdict {
        family,
        v: v.to_vec(),
        w: w.to_vec(),
        related,
        criterion: criterion_text(family),
        witness,
        word,
        word_search,
        hypothesis_status,
        citation: CitedClaim::new("orbit criterion", citation_id(family)),
        notes,
    })
}
