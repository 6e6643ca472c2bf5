//! Fixed-step RK4 integration of the cataloged systems.
//!
//! Trajectories stop at the first state whose magnitude exceeds
//! [`BLOWUP_THRESHOLD`]; intervals for the `t·x′` systems must avoid `t = 0`.

mod field;
mod residual;
mod trajectory;

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::catalog::{CatalogError, EquationId, FamilyId};
use crate::exactnum::{parse_param, Atom, ParseError};

pub use field::VectorField;
pub use residual::{residual_norm, residual_norm_field, ResidualNorm, STENCIL_ORDER};
pub use trajectory::{integrate, integrate_field, Sample, Trajectory, TrajectoryStatus};

pub const BLOWUP_THRESHOLD: f64 = 1e8;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum NumIntError {
    #[error("family {0} has no integrable system")]
    UnsupportedFamily(FamilyId),
    #[error("the interval [{t0}, {t1}] touches the singular time t = 0")]
    SingularT { t0: f64, t1: f64 },
    #[error("step must be positive and finite, got {0}")]
    BadStep(f64),
    #[error("atom {0} has no numeric value")]
    UnassignedAtom(String),
    #[error("state has {got} component(s), expected {expected}")]
    StateDimension { expected: usize, got: usize },
    #[error("variable {0} has no numeric slot")]
    UnboundVariable(String),
    #[error("trajectory belongs to {trajectory}, not {equation}")]
    FamilyMismatch { trajectory: String, equation: String },
    #[error("malformed assignment {0:?}")]
    BadAssignment(String),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

/// Numeric instances of symbolic atoms, plus direct values for system
/// parameter symbols.
#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct NumericAssignment {
    atoms: BTreeMap<Atom, f64>,
    /// Overrides for parameter symbols such as `alpha`.
    params: BTreeMap<String, f64>,
}

impl NumericAssignment {
    pub fn new() -> Self {
        NumericAssignment::default()
    }

    pub fn with_atom(mut self, atom: Atom, value: f64) -> Self {
        self.atoms.insert(atom, value);
        self
    }

    pub fn with_param(mut self, symbol: impl Into<String>, value: f64) -> Self {
        self.params.insert(symbol.into(), value);
        self
    }

    /// Parses `tau1=0.3, alg1=1.4142`.
    pub fn parse(text: &str) -> Result<Self, NumIntError> {
        let mut out = NumericAssignment::new();
        for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (name, value) = item
                .split_once('=')
                .ok_or_else(|| NumIntError::BadAssignment(item.to_string()))?;
            let value: f64 = value
                .trim()
                .parse()
                .map_err(|_| NumIntError::BadAssignment(item.to_string()))?;
            let atom = single_atom(name.trim()).ok_or_else(|| NumIntError::BadAssignment(item.to_string()))?;
            out.atoms.insert(atom, value);
        }
        Ok(out)
    }

    pub fn atoms(&self) -> &BTreeMap<Atom, f64> {
        &self.atoms
    }

    pub fn params(&self) -> &BTreeMap<String, f64> {
        &self.params
    }

    pub fn atom(&self, a: &Atom) -> Option<f64> {
        self.atoms.get(a).copied()
    }

    /// Numeric parameter vector of an equation.
    pub fn evaluate(&self, eq: &EquationId) -> Result<Vec<f64>, NumIntError> {
        eq.params()
            .iter()
            .map(|p| {
                p.eval_f64(|a| self.atom(a)).ok_or_else(|| {
                    let missing = p.atoms().find(|a| self.atom(a).is_none()).expect("some atom unassigned");
                    NumIntError::UnassignedAtom(missing.to_string())
                })
            })
            .collect()
    }
}

fn single_atom(name: &str) -> Option<Atom> {
    let p = parse_param(name).ok()?;
    let (a, c) = p.coeffs().iter().next()?;
    (p.coeffs().len() == 1 && p.constant().is_zero() && c.is_one()).then_some(*a)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn assignment_parsing() {
        let a = NumericAssignment::parse("tau1 = 0.5, alg2=1.25").unwrap();
        assert_eq!(a.atom(&Atom::tau(1)), Some(0.5));
        assert_eq!(a.atom(&Atom::alg(2)), Some(1.25));
        assert!(NumericAssignment::parse("tau1").is_err());
        assert!(NumericAssignment::parse("2*tau1=3").is_err());
        let eq = EquationId::parse(FamilyId::PIII, "tau1 + 1/2, alg2").unwrap();
        assert_eq!(a.evaluate(&eq).unwrap(), vec![1.0, 1.25]);
        let eq = EquationId::parse(FamilyId::PII, "tau3").unwrap();
        assert!(matches!(a.evaluate(&eq), Err(NumIntError::UnassignedAtom(s)) if s == "tau3"));
    }
}
