#![allow(dead_code)]

use painleve_core::catalog::FamilyId;
use painleve_core::exactnum::{rat, Atom, ParamValue, Rational};
use painleve_core::weyl::{generator_catalog, Factor, Word};
use proptest::prelude::*;

pub const FAMILIES: [FamilyId; 5] = [FamilyId::PII, FamilyId::PIII, FamilyId::PIV, FamilyId::PV, FamilyId::PVI];

pub fn small_rational() -> impl Strategy<Value = Rational> {
    (-24i64..=24, 1i64..=6).prop_map(|(n, d)| rat(n, d))
}

fn atom() -> impl Strategy<Value = Atom> {
    prop_oneof![(1u32..=3).prop_map(Atom::tau), (1u32..=2).prop_map(Atom::alg)]
}

/// A rational constant plus up to two atom terms with small coefficients.
pub fn param_value() -> impl Strategy<Value = ParamValue> {
    (
        small_rational(),
        prop::collection::vec((atom(), (-3i64..=3, 1i64..=3)), 0..=2),
    )
        .prop_map(|(c, terms)| {
            terms.into_iter().fold(ParamValue::rational(c), |acc, (a, (n, d))| {
                acc + &ParamValue::atom(a) * &rat(n, d)
            })
        })
}

/// Mostly-rational values, so special strata are hit often.
pub fn mixed_value() -> impl Strategy<Value = ParamValue> {
    prop_oneof![
        3 => small_rational().prop_map(ParamValue::rational),
        1 => param_value(),
    ]
}

/// A point of the family's parameter space; the last coordinate absorbs
/// the constraint `Σvᵢ = 0` for PIV and PV.
pub fn point(family: FamilyId, values: impl Strategy<Value = ParamValue> + Clone + 'static) -> BoxedStrategy<Vec<ParamValue>> {
    let arity = family.arity();
    let constrained = matches!(family, FamilyId::PIV | FamilyId::PV);
    let free = if constrained { arity - 1 } else { arity };
    prop::collection::vec(values, free)
        .prop_map(move |mut v| {
            if constrained {
                let s = v.iter().fold(ParamValue::zero(), |acc, x| &acc + x);
                v.push(-s);
            }
            v
        })
        .boxed()
}

pub fn family() -> impl Strategy<Value = FamilyId> {
    prop::sample::select(FAMILIES.to_vec())
}

/// In-group letters of a family.
pub fn letters(family: FamilyId) -> Vec<String> {
    generator_catalog(family)
        .expect("family has generators")
        .iter()
        .filter(|g| g.in_group())
        .map(|g| g.name.to_string())
        .collect()
}

/// Random words of length at most `max_len` over the in-group letters and
/// their inverses.
pub fn word(family: FamilyId, max_len: usize) -> BoxedStrategy<Word> {
    let names = letters(family);
    prop::collection::vec((prop::sample::select(names), prop::bool::ANY), 0..=max_len)
        .prop_map(|ls| {
            Word::from_factors(
                ls.into_iter()
                    .map(|(name, inv)| Factor::Letter {
                        name,
                        power: if inv { -1 } else { 1 },
                    })
                    .collect(),
            )
        })
        .boxed()
}

/// A family together with a point and a word of length at most 12.
pub fn family_point_word(values: fn() -> BoxedStrategy<ParamValue>) -> BoxedStrategy<(FamilyId, Vec<ParamValue>, Word)> {
    family()
        .prop_flat_map(move |f| (Just(f), point(f, values()), word(f, 12)))
        .boxed()
}

pub fn boxed_param_value() -> BoxedStrategy<ParamValue> {
    param_value().boxed()
}

pub fn boxed_mixed_value() -> BoxedStrategy<ParamValue> {
    mixed_value().boxed()
}
