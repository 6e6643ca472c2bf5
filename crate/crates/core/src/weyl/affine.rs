use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::catalog::FamilyId;
use crate::exactnum::{parse_param, ParamValue, ParseError, Rational};

/// `v ↦ L·v + t` over ℚ.
#[derive(Debug, Clone)]
pub struct AffineMap {
    pub family: FamilyId,
    linear: Vec<Vec<Rational>>,
    translation: Vec<Rational>,
    /// Generator word or `composite`.
    pub provenance: String,
}

impl AffineMap {
    pub fn new(
        family: FamilyId,
        linear: Vec<Vec<Rational>>,
        translation: Vec<Rational>,
        provenance: impl Into<String>,
    ) -> Self {
        let n = translation.len();
        assert!(linear.len() == n && linear.iter().all(|r| r.len() == n), "shape");
        AffineMap {
            family,
            linear,
            translation,
            provenance: provenance.into(),
        }
    }

    pub fn identity(family: FamilyId, n: usize) -> Self {
        let linear = (0..n)
            .map(|i| (0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect())
            .collect();
        AffineMap::new(family, linear, vec![Rational::zero(); n], "id")
    }

    /// `(g·v)ᵢ = signᵢ · v_{perm[i]} + shiftᵢ`.
    pub fn signed_permutation(
        family: FamilyId,
        perm: &[usize],
        signs: &[i64],
        shift: Vec<Rational>,
        provenance: impl Into<String>,
    ) -> Self {
        let n = perm.len();
        let linear = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if perm[i] == j { Rational::from_integer(signs[i].into()) } else { Rational::zero() })
                    .collect()
            })
            .collect();
        AffineMap::new(family, linear, shift, provenance)
    }

    pub fn translation_by(family: FamilyId, shift: Vec<Rational>, provenance: impl Into<String>) -> Self {
        let n = shift.len();
        let mut m = AffineMap::identity(family, n);
        m.translation = shift;
        m.provenance = provenance.into();
        m
    }

    /// Parses an image tuple such as `(v1, v3+1, v2-1)` in the symbols
    /// `v1..vn`.
    pub fn parse_image(family: FamilyId, n: usize, text: &str) -> Result<Self, ParseError> {
        let inner = text.trim().trim_start_matches('(').trim_end_matches(')');
        let parts: Vec<&str> = inner.split(',').collect();
        if parts.len() != n {
            return Err(ParseError::Syntax {
                position: 0,
                message: format!("expected {n} components, found {}", parts.len()),
            });
        }
        let mut linear = Vec::with_capacity(n);
        let mut translation = Vec::with_capacity(n);
        for part in parts {
            // vK is read as the transcendental atom tauK to reuse the parameter grammar.
            let p = parse_param(&part.replace('v', "tau"))?;
            let row = (1..=n)
                .map(|k| p.coeff(&crate::exactnum::Atom::tau(k as u32)))
                .collect();
            if p.coeffs().keys().any(|a| !a.is_transcendental() || a.id as usize > n || a.id == 0) {
                return Err(ParseError::Syntax {
                    position: 0,
                    message: format!("unknown symbol in {part:?}"),
                });
            }
            linear.push(row);
            translation.push(p.constant().clone());
        }
        Ok(AffineMap::new(family, linear, translation, "expected"))
    }

    pub fn dim(&self) -> usize {
        self.translation.len()
    }

    pub fn linear(&self) -> &[Vec<Rational>] {
        &self.linear
    }

    pub fn translation(&self) -> &[Rational] {
        &self.translation
    }

    pub fn is_translation(&self) -> bool {
        *self == AffineMap::translation_by(self.family, self.translation.clone(), "")
    }

    pub fn apply(&self, v: &[ParamValue]) -> Vec<ParamValue> {
        assert_eq!(v.len(), self.dim(), "dimension mismatch");
        self.linear
            .iter()
            .zip(&self.translation)
            .map(|(row, t)| {
                row.iter()
                    .zip(v)
                    .filter(|(c, _)| !c.is_zero())
                    .fold(ParamValue::rational(t.clone()), |acc, (c, x)| &acc + &(x * c))
            })
            .collect()
    }

    pub fn apply_rational(&self, v: &[Rational]) -> Vec<Rational> {
        self.linear
            .iter()
            .zip(&self.translation)
            .map(|(row, t)| row.iter().zip(v).fold(t.clone(), |acc, (c, x)| acc + c * x))
            .collect()
    }

    /// `self ∘ other`: `other` is applied first.
    pub fn compose(&self, other: &AffineMap) -> AffineMap {
        let n = self.dim();
        assert_eq!(n, other.dim(), "dimension mismatch");
        let linear = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| (0..n).fold(Rational::zero(), |acc, k| acc + &self.linear[i][k] * &other.linear[k][j]))
                    .collect()
            })
            .collect();
        let translation = self
            .linear
            .iter()
            .zip(&self.translation)
            .map(|(row, t)| row.iter().zip(&other.translation).fold(t.clone(), |acc, (c, x)| acc + c * x))
            .collect();
        AffineMap::new(self.family, linear, translation, "composite")
    }

    /// Inverse by Gauss–Jordan elimination; `None` when `L` is singular.
    pub fn inverse(&self) -> Option<AffineMap> {
        let n = self.dim();
        let mut a: Vec<Vec<Rational>> = self
            .linear
            .iter()
            .enumerate()
            .map(|(i, row)| {
                let mut r = row.clone();
                r.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
                r
            })
            .collect();
        for col in 0..n {
            let p = (col..n).find(|&r| !a[r][col].is_zero())?;
            a.swap(col, p);
            let pivot = a[col][col].clone();
            for x in a[col].iter_mut() {
                *x = &*x / &pivot;
            }
            for r in 0..n {
                if r != col && !a[r][col].is_zero() {
                    let f = a[r][col].clone();
                    for c in 0..2 * n {
                        let delta = &f * &a[col][c];
                        a[r][c] -= delta;
                    }
                }
            }
        }
        let inv: Vec<Vec<Rational>> = a.into_iter().map(|r| r[n..].to_vec()).collect();
        let translation = inv
            .iter()
            .map(|row| -row.iter().zip(&self.translation).fold(Rational::zero(), |acc, (c, x)| acc + c * x))
            .collect();
        Some(AffineMap::new(self.family, inv, translation, "composite"))
    }

    /// The map as an image tuple in `v1..vn`.
    pub fn image_string(&self) -> String {
        let symbols: Vec<ParamValue> = (1..=self.dim()).map(|k| ParamValue::tau(k as u32)).collect();
        let parts: Vec<String> = self
            .apply(&symbols)
            .iter()
            .map(|p| p.to_string().replace("tau", "v"))
            .collect();
        format!("({})", parts.join(", "))
    }
}

impl PartialEq for AffineMap {
    /// Equality of the maps; provenance is ignored.
    fn eq(&self, other: &Self) -> bool {
        self.linear == other.linear && self.translation == other.translation
    }
}

impl Eq for AffineMap {}

impl fmt::Display for AffineMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v ↦ {}", self.image_string())
    }
}

impl Serialize for AffineMap {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("AffineMap", 3)?;
        st.serialize_field("family", &self.family)?;
        st.serialize_field("image", &self.image_string())?;
        st.serialize_field("provenance", &self.provenance)?;
        st.end()
    }
}
