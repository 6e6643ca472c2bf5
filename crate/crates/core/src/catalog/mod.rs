//! Static data for the six Painlevé families: parameter spaces, validated
//! equation identifiers, the displayed ODE systems and the root system used
//! for the sixth family.

mod citations;
mod roots;
mod systems;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exactnum::{parse_param_list, transcendence_degree, ParamValue, ParseError};

pub use citations::{all_citations, citation, Citation};
pub use roots::{
    even_signed_permutations, inner_product, permutations4, root_system, Root, RootSystem,
    SignedPermutation,
};
pub use systems::{
    ode_system, ode_systems, piv_scalar_params, riccati_relation, riccati_rule, OdeSystem,
    SystemKind,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("unknown family {0:?}; expected one of I, II, III, IV, V, VI")]
    UnknownFamily(String),
    #[error("family {family} takes {expected} parameter(s), got {got}")]
    Arity {
        family: FamilyId,
        expected: usize,
        got: usize,
    },
    #[error("family {family} requires the parameters to sum to 0, but they sum to {sum}")]
    SumNotZero { family: FamilyId, sum: ParamValue },
    #[error("family {0} has no ODE system in the catalog")]
    UnsupportedFamily(FamilyId),
    #[error("family {family} has no system variant {variant:?}")]
    UnknownVariant { family: FamilyId, variant: String },
    #[error(transparent)]
    Parse(#[from] ParseError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum FamilyId {
    #[serde(rename = "I")]
    PI,
    #[serde(rename = "II")]
    PII,
    #[serde(rename = "III")]
    PIII,
    #[serde(rename = "IV")]
    PIV,
    #[serde(rename = "V")]
    PV,
    #[serde(rename = "VI")]
    PVI,
}

impl FamilyId {
    pub const ALL: [FamilyId; 6] = [
        FamilyId::PI,
        FamilyId::PII,
        FamilyId::PIII,
        FamilyId::PIV,
        FamilyId::PV,
        FamilyId::PVI,
    ];

    pub fn roman(self) -> &'static str {
        match self {
            FamilyId::PI => "I",
            FamilyId::PII => "II",
            FamilyId::PIII => "III",
            FamilyId::PIV => "IV",
            FamilyId::PV => "V",
            FamilyId::PVI => "VI",
        }
    }

    pub fn arity(self) -> usize {
        family_space(self).arity
    }

    /// Dimension of the parameter space after linear constraints.
    pub fn dimension(self) -> usize {
        let s = family_space(self);
        s.arity - usize::from(s.sum_zero)
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "P{}", self.roman())
    }
}

impl FromStr for FamilyId {
    type Err = CatalogError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let t = t
            .strip_prefix("P_")
            .or_else(|| t.strip_prefix('P'))
            .unwrap_or(t);
        FamilyId::ALL
            .into_iter()
            .find(|f| f.roman().eq_ignore_ascii_case(t))
            .ok_or_else(|| CatalogError::UnknownFamily(s.to_string()))
    }
}

/// Arity and linear constraints of a family's parameter space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ParamSpace {
    pub family: FamilyId,
    pub arity: usize,
    /// Σ vᵢ = 0 is imposed.
    pub sum_zero: bool,
    pub names: &'static [&'static str],
}

pub fn family_space(family: FamilyId) -> ParamSpace {
    let (arity, sum_zero, names): (usize, bool, &'static [&'static str]) = match family {
        FamilyId::PI => (0, false, &[]),
        FamilyId::PII => (1, false, &["alpha"]),
        FamilyId::PIII => (2, false, &["v1", "v2"]),
        FamilyId::PIV => (3, true, &["v1", "v2", "v3"]),
        FamilyId::PV => (4, true, &["v1", "v2", "v3", "v4"]),
        FamilyId::PVI => (4, false, &["v1", "v2", "v3", "v4"]),
    };
    ParamSpace {
        family,
        arity,
        sum_zero,
        names,
    }
}

/// A family together with a parameter vector satisfying its constraints.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct EquationId {
    family: FamilyId,
    params: Vec<ParamValue>,
}

impl EquationId {
    pub fn new(family: FamilyId, params: Vec<ParamValue>) -> Result<Self, CatalogError> {
        let space = family_space(family);
        if params.len() != space.arity {
            return Err(CatalogError::Arity {
                family,
                expected: space.arity,
                got: params.len(),
            });
        }
        if space.sum_zero {
            let sum = params.iter().fold(ParamValue::zero(), |acc, p| &acc + p);
            if !sum.is_zero() {
                return Err(CatalogError::SumNotZero { family, sum });
            }
        }
        Ok(EquationId { family, params })
    }

    /// Parses comma-separated parameters.
    pub fn parse(family: FamilyId, text: &str) -> Result<Self, CatalogError> {
        EquationId::new(family, parse_param_list(text)?)
    }

    pub fn family(&self) -> FamilyId {
        self.family
    }

    pub fn params(&self) -> &[ParamValue] {
        &self.params
    }

    /// Parameters algebraically independent transcendentals spanning the
    /// family's parameter space; vacuously true for PI.
    pub fn is_generic(&self) -> bool {
        transcendence_degree(&self.params) == self.family.dimension()
    }
}

impl fmt::Display for EquationId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(", self.family)?;
        for (i, p) in self.params.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}
