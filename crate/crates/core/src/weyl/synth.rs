use std::collections::{HashMap, VecDeque};
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::catalog::FamilyId;
use crate::exactnum::{common_denominator, integer_solve, ParamValue, Rational};

use super::generators::{compose_word, generator_catalog, is_involution, GeneratorRole};
use super::orbit::criterion;
use super::word::{Factor, Word};
use super::{AffineMap, WeylError};

/// States kept per side of the bidirectional search.
const SEARCH_NODE_CAP: usize = 4096;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SynthesisMethod {
    /// Solved in closed form from the witness.
    Direct,
    /// Bounded bidirectional search.
    Search,
    /// Coset representative of the linear part times a lattice translation.
    Structured,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum NoWordReason {
    /// Search and structured synthesis were both inconclusive; not a proof
    /// of non-existence.
    BoundExhausted,
    /// Proved: no group element maps `v` to `w`.
    InvariantObstruction,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum WordSearch {
    NotAttempted,
    Found { method: SynthesisMethod },
    NoWordFound { reason: NoWordReason },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WordResult {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub word: Option<Word>,
    pub search: WordSearch,
}

/// Coset representatives of the linear parts and generators of the
/// translation subgroup.
struct GroupData {
    reps: Vec<(AffineMap, Word)>,
    /// Translation vectors scaled by `denom` to integers, with their words.
    lattice: Vec<(Vec<BigInt>, Word)>,
    denom: BigInt,
}

fn letters(family: FamilyId) -> Vec<(Word, AffineMap)> {
    generator_catalog(family)
        .expect("family has generators")
        .iter()
        .filter(|g| g.role == GeneratorRole::Generating)
        .flat_map(|g| {
            let mut out = vec![(Word::letter(g.name), g.map.clone())];
            if !g.is_involution() {
                out.push((Word::letter(g.name).pow(-1), g.map.inverse().expect("invertible")));
            }
            out
        })
        .collect()
}

fn simplify(family: FamilyId, w: &Word) -> Word {
    w.simplify(&|n| is_involution(family, n))
}

fn build(family: FamilyId) -> GroupData {
    let gens = letters(family);
    let n = family.arity();
    let mut index: HashMap<Vec<Vec<Rational>>, usize> = HashMap::new();
    let mut reps: Vec<(AffineMap, Word)> = vec![(AffineMap::identity(family, n), Word::empty())];
    index.insert(reps[0].0.linear().to_vec(), 0);
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for (gw, g) in &gens {
            let m = g.compose(&reps[i].0);
            if !index.contains_key(m.linear()) {
                index.insert(m.linear().to_vec(), reps.len());
                queue.push_back(reps.len());
                reps.push((m, gw.then_after(&reps[i].1)));
            }
        }
    }
    // Schreier generators rep(g·u)⁻¹ · g · u.
    let mut translations: Vec<(Vec<Rational>, Word)> = Vec::new();
    for (u, uw) in &reps {
        for (gw, g) in &gens {
            let m = g.compose(u);
            let (r, rw) = &reps[index[m.linear()]];
            let t = r.inverse().expect("invertible").compose(&m);
            let tv = t.translation().to_vec();
            if tv.iter().all(Zero::is_zero) || translations.iter().any(|(x, _)| *x == tv) {
                continue;
            }
            let word = simplify(family, &rw.inverse().then_after(gw).then_after(uw));
            translations.push((tv, word));
        }
    }
    translations.sort_by_key(|(_, w)| w.len());
    let denom = common_denominator(translations.iter().flat_map(|(t, _)| t.iter()));
    let scale = |t: &[Rational]| -> Vec<BigInt> {
        t.iter()
            .map(|x| (x * Rational::from_integer(denom.clone())).to_integer())
            .collect()
    };
    let mut lattice: Vec<(Vec<BigInt>, Word)> = Vec::new();
    for (t, w) in &translations {
        let col = scale(t);
        if solve(&lattice, n, &col).is_none() {
            lattice.push((col, w.clone()));
        }
    }
    GroupData { reps, lattice, denom }
}

fn solve(lattice: &[(Vec<BigInt>, Word)], n: usize, b: &[BigInt]) -> Option<Vec<BigInt>> {
    let a: Vec<Vec<BigInt>> = (0..n)
        .map(|i| lattice.iter().map(|(c, _)| c[i].clone()).collect())
        .collect();
    integer_solve(&a, b)
}

fn group_data(family: FamilyId) -> &'static GroupData {
    static DATA: OnceLock<Vec<GroupData>> = OnceLock::new();
    let all = DATA.get_or_init(|| {
        FamilyId::ALL
            .iter()
            .map(|&f| {
                if f == FamilyId::PI {
                    GroupData {
                        reps: Vec::new(),
                        lattice: Vec::new(),
                        denom: BigInt::from(1),
                    }
                } else {
                    build(f)
                }
            })
            .collect()
    });
    &all[FamilyId::ALL.iter().position(|&f| f == family).expect("listed")]
}

/// The number of distinct linear parts of the family's group.
pub fn linear_group_order(family: FamilyId) -> usize {
    group_data(family).reps.len()
}

/// A value that cannot be rational: a transcendental atom survives, or a
/// single algebraic-irrational atom does.
fn provably_irrational(x: &ParamValue) -> bool {
    x.has_transcendental() || x.coeffs().len() == 1
}

enum Structured {
    Found(Word),
    Impossible,
    Inconclusive,
}

/// Exact decision of group-orbit membership: every element is a lattice
/// translation composed with a coset representative.
fn structured(family: FamilyId, v: &[ParamValue], w: &[ParamValue]) -> Structured {
    let data = group_data(family);
    let n = family.arity();
    let mut best: Option<Word> = None;
    let mut inconclusive = false;
    for (u, uw) in &data.reps {
        let delta: Vec<ParamValue> = u.apply(v).iter().zip(w).map(|(x, y)| y - x).collect();
        if delta.iter().any(provably_irrational) {
            continue;
        }
        let Some(q) = delta.iter().map(ParamValue::as_rational).collect::<Option<Vec<_>>>() else {
            inconclusive = true;
            continue;
        };
        let scaled: Vec<Rational> = q.iter().map(|x| *x * Rational::from_integer(data.denom.clone())).collect();
        if !scaled.iter().all(Rational::is_integer) {
            continue;
        }
        let b: Vec<BigInt> = scaled.iter().map(Rational::to_integer).collect();
        let Some(x) = solve(&data.lattice, n, &b) else {
            continue;
        };
        let factors: Vec<Factor> = data
            .lattice
            .iter()
            .zip(&x)
            .filter(|(_, k)| !k.is_zero())
            .flat_map(|((_, tw), k)| {
                let k: i64 = k.try_into().expect("translation coefficient fits in i64");
                tw.pow(k).factors().to_vec()
            })
            .collect();
        let word = simplify(family, &Word::from_factors(factors).then_after(uw));
        if best.as_ref().is_none_or(|b| word.len() < b.len()) {
            best = Some(word);
        }
    }
    match best {
        Some(w) => Structured::Found(w),
        None if inconclusive => Structured::Inconclusive,
        None => Structured::Impossible,
    }
}

/// Meet-in-the-middle search over words of length at most `bound`.
fn bidirectional(family: FamilyId, v: &[ParamValue], w: &[ParamValue], bound: usize) -> Option<Word> {
    type Side = HashMap<Vec<ParamValue>, Word>;
    if v == w {
        return Some(Word::empty());
    }
    let gens = letters(family);
    let inverses: Vec<AffineMap> = gens.iter().map(|(_, g)| g.inverse().expect("invertible")).collect();
    // fwd: x = word(v); bwd: y with word(y) = w.
    let mut fwd: Side = HashMap::from([(v.to_vec(), Word::empty())]);
    let mut bwd: Side = HashMap::from([(w.to_vec(), Word::empty())]);
    let mut fwd_frontier = vec![v.to_vec()];
    let mut bwd_frontier = vec![w.to_vec()];
    let mut depth = 0;
    while depth < bound && (!fwd_frontier.is_empty() || !bwd_frontier.is_empty()) {
        let forward = fwd_frontier.len() <= bwd_frontier.len() && !fwd_frontier.is_empty()
            || bwd_frontier.is_empty();
        let mut next = Vec::new();
        if forward {
            for x in &fwd_frontier {
                let xw = fwd[x].clone();
                for (gw, g) in &gens {
                    let y = g.apply(x);
                    if fwd.contains_key(&y) || fwd.len() >= SEARCH_NODE_CAP {
                        continue;
                    }
                    let word = gw.then_after(&xw);
                    if let Some(bw) = bwd.get(&y) {
                        return Some(simplify(family, &bw.then_after(&word)));
                    }
                    fwd.insert(y.clone(), word);
                    next.push(y);
                }
            }
            fwd_frontier = next;
        } else {
            for y in &bwd_frontier {
                let yw = bwd[y].clone();
                for ((gw, _), ginv) in gens.iter().zip(&inverses) {
                    let z = ginv.apply(y);
                    if bwd.contains_key(&z) || bwd.len() >= SEARCH_NODE_CAP {
                        continue;
                    }
                    let word = yw.then_after(gw);
                    if let Some(fw) = fwd.get(&z) {
                        return Some(simplify(family, &word.then_after(fw)));
                    }
                    bwd.insert(z.clone(), word);
                    next.push(z);
                }
            }
            bwd_frontier = next;
        }
        depth += 1;
    }
    None
}

fn checked(family: FamilyId, word: Word, v: &[ParamValue], w: &[ParamValue]) -> Option<Word> {
    let map = compose_word(family, &word).ok()?;
    (map.apply(v) == w).then_some(word)
}

/// Word synthesis without the criterion precondition.
pub(crate) fn synthesize(
    family: FamilyId,
    v: &[ParamValue],
    w: &[ParamValue],
    bound: usize,
) -> Result<(Option<Word>, WordSearch), WeylError> {
    if family == FamilyId::PI {
        return Err(WeylError::NoGenerators(family));
    }
    let searched = matches!(family, FamilyId::PIII | FamilyId::PVI);
    if searched {
        if let Some(word) = bidirectional(family, v, w, bound).and_then(|x| checked(family, x, v, w)) {
            return Ok((Some(word), WordSearch::Found { method: SynthesisMethod::Search }));
        }
    }
    let method = if family == FamilyId::PII {
        SynthesisMethod::Direct
    } else {
        SynthesisMethod::Structured
    };
    Ok(match structured(family, v, w) {
        Structured::Found(word) => match checked(family, word, v, w) {
            Some(word) => (Some(word), WordSearch::Found { method }),
            None => (None, WordSearch::NoWordFound { reason: NoWordReason::BoundExhausted }),
        },
        Structured::Impossible => (None, WordSearch::NoWordFound { reason: NoWordReason::InvariantObstruction }),
        Structured::Inconclusive => (None, WordSearch::NoWordFound { reason: NoWordReason::BoundExhausted }),
    })
}

/// A word in the family's group mapping `v` to `w`; requires the family's
/// criterion to hold.
pub fn generator_word(
    family: FamilyId,
    v: &[ParamValue],
    w: &[ParamValue],
    bound: usize,
) -> Result<WordResult, WeylError> {
    crate::catalog::EquationId::new(family, v.to_vec())?;
    crate::catalog::EquationId::new(family, w.to_vec())?;
    if !criterion(family, v, w).0.is_yes() {
        return Err(WeylError::PreconditionViolated(
            "generator_word requires the orbit criterion to hold".into(),
        ));
    }
    let (word, search) = synthesize(family, v, w, bound)?;
    Ok(WordResult { word, search })
}
