use std::sync::OnceLock;

use crate::catalog::FamilyId;
use crate::exactnum::{int, rat, Rational};

use super::word::{Factor, Word};
use super::{AffineMap, WeylError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GeneratorRole {
    /// Generates the family's transformation group.
    Generating,
    /// A named group element outside the generating set.
    Derived,
    /// Used to define derived elements; outside the group.
    Auxiliary,
}

#[derive(Debug, Clone)]
pub struct Generator {
    pub name: &'static str,
    pub map: AffineMap,
    pub role: GeneratorRole,
    /// The defining word, for maps given as composites.
    pub definition: Option<&'static str>,
}

impl Generator {
    pub fn in_group(&self) -> bool {
        self.role != GeneratorRole::Auxiliary
    }

    pub fn is_involution(&self) -> bool {
        self.map.compose(&self.map) == AffineMap::identity(self.map.family, self.map.dim())
    }
}

fn perm(
    family: FamilyId,
    name: &'static str,
    p: &[usize],
    signs: &[i64],
    shift: &[i64],
) -> Generator {
    Generator {
        name,
        map: AffineMap::signed_permutation(family, p, signs, shift.iter().map(|&s| int(s)).collect(), name),
        role: GeneratorRole::Generating,
        definition: None,
    }
}

fn shift(family: FamilyId, name: &'static str, by: Vec<Rational>, role: GeneratorRole) -> Generator {
    Generator {
        name,
        map: AffineMap::translation_by(family, by, name),
        role,
        definition: None,
    }
}

fn derived(
    family: FamilyId,
    name: &'static str,
    definition: &'static str,
    base: &[Generator],
) -> Generator {
    let word: Word = definition.parse().expect("static word");
    let mut map = compose_with(family, &word, base).expect("static word over base letters");
    map.provenance = name.to_string();
    Generator {
        name,
        map,
        role: GeneratorRole::Derived,
        definition: Some(definition),
    }
}

fn build(family: FamilyId) -> Vec<Generator> {
    use FamilyId::*;
    use GeneratorRole::*;
    let f = family;
    match family {
        PI => Vec::new(),
        PII => vec![
            perm(f, "s", &[0], &[-1], &[-1]),
            shift(f, "t+", vec![int(1)], Generating),
            shift(f, "t-", vec![int(-1)], Generating),
        ],
        PIII => vec![
            perm(f, "s1", &[1, 0], &[1, 1], &[0, 0]),
            perm(f, "s2", &[1, 0], &[-1, -1], &[0, 0]),
            perm(f, "s3", &[1, 0], &[1, 1], &[1, -1]),
            perm(f, "s4", &[1, 0], &[-1, -1], &[1, 1]),
        ],
        PIV => {
            let mut g = vec![
                perm(f, "s1", &[1, 0, 2], &[1, 1, 1], &[0, 0, 0]),
                perm(f, "s2", &[2, 1, 0], &[1, 1, 1], &[0, 0, 0]),
                shift(f, "t-", vec![rat(-1, 3), rat(-1, 3), rat(2, 3)], Auxiliary),
            ];
            let mut s0 = derived(f, "s0", "t-^-1 s1 s2 s1 t-", &g);
            s0.role = Generating;
            g.push(s0);
            g
        }
        PV => {
            let q = |a: i64, b: i64, c: i64, d: i64| vec![rat(a, 4), rat(b, 4), rat(c, 4), rat(d, 4)];
            vec![
                perm(f, "s1", &[1, 0, 2, 3], &[1; 4], &[0; 4]),
                perm(f, "s2", &[2, 1, 0, 3], &[1; 4], &[0; 4]),
                perm(f, "s3", &[0, 1, 3, 2], &[1; 4], &[0; 4]),
                shift(f, "t-", q(-1, -1, -1, 3), Generating),
                shift(f, "a1", q(1, 1, 1, -3), Derived),
                shift(f, "a2", q(0, 0, -4, 4), Derived),
                shift(f, "a3", q(0, -4, 0, 4), Derived),
                shift(f, "a4", q(-4, 0, 0, 4), Derived),
            ]
        }
        PVI => vec![
            perm(f, "s1", &[1, 0, 2, 3], &[1; 4], &[0; 4]),
            perm(f, "s2", &[0, 2, 1, 3], &[1; 4], &[0; 4]),
            perm(f, "s3", &[0, 1, 3, 2], &[1; 4], &[0; 4]),
            perm(f, "s4", &[0, 1, 3, 2], &[1, 1, -1, -1], &[0; 4]),
            perm(f, "s5", &[1, 0, 2, 3], &[-1, -1, 1, 1], &[1, 1, 0, 0]),
        ],
    }
}

/// The named maps of a family, including derived and auxiliary ones.
pub fn generator_catalog(family: FamilyId) -> Result<&'static [Generator], WeylError> {
    static CATALOG: OnceLock<Vec<Vec<Generator>>> = OnceLock::new();
    let all = CATALOG.get_or_init(|| FamilyId::ALL.iter().map(|&f| build(f)).collect());
    let g = &all[FamilyId::ALL.iter().position(|&f| f == family).expect("listed")];
    if g.is_empty() {
        Err(WeylError::NoGenerators(family))
    } else {
        Ok(g)
    }
}

/// The family's named parameter maps with provenance labels.
pub fn generators(family: FamilyId) -> Result<Vec<AffineMap>, WeylError> {
    Ok(generator_catalog(family)?.iter().map(|g| g.map.clone()).collect())
}

fn compose_with(family: FamilyId, word: &Word, letters: &[Generator]) -> Result<AffineMap, WeylError> {
    let n = family.arity();
    let mut acc = AffineMap::identity(family, n);
    for factor in word.factors() {
        let (base, power) = match factor {
            Factor::Letter { name, power } => {
                let g = letters
                    .iter()
                    .find(|g| g.name == name)
                    .ok_or_else(|| WeylError::UnknownLetter {
                        family,
                        letter: name.clone(),
                    })?;
                (g.map.clone(), *power)
            }
            Factor::Group { word, power } => (compose_with(family, word, letters)?, *power),
        };
        let base = if power < 0 { base.inverse().expect("invertible") } else { base };
        for _ in 0..power.unsigned_abs() {
            acc = acc.compose(&base);
        }
    }
    acc.provenance = if word.is_empty() { "id".into() } else { word.to_string() };
    Ok(acc)
}

/// The map of a word; the rightmost letter acts first.
pub fn compose_word(family: FamilyId, word: &Word) -> Result<AffineMap, WeylError> {
    compose_with(family, word, generator_catalog(family)?)
}

/// Exact equality of the composed word and `expected`.
pub fn verify_group_relation(family: FamilyId, word: &Word, expected: &AffineMap) -> Result<bool, WeylError> {
    Ok(compose_word(family, word)? == *expected)
}

pub(crate) fn is_involution(family: FamilyId, name: &str) -> bool {
    generator_catalog(family)
        .ok()
        .and_then(|c| c.iter().find(|g| g.name == name))
        .is_some_and(Generator::is_involution)
}
