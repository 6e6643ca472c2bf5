//! Exact number kernel: ℚ-affine parameter values over symbolic atoms,
//! three-valued congruence decisions, transcendence degree and integer
//! linear algebra.
//!
//! Every parameter value handled by this crate is `c + Σ qᵢ·aᵢ` with
//! rational `c, qᵢ` and atoms `aᵢ`. Transcendental atoms (`tau1`, `tau2`,
//! ...) stand for algebraically independent transcendental numbers;
//! algebraic-irrational atoms (`alg1`, ...) stand for algebraic numbers known
//! only to lie outside ℚ.

mod linalg;
mod param;
mod tribool;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use thiserror::Error;

pub use linalg::{integer_rank, integer_solve, mat_vec, rational_rank};
pub use param::{parse_param, parse_param_list, Atom, AtomKind, ParamValue};
pub(crate) use param::rational_to_f64;
pub use tribool::TriBool;

pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("zero denominator at position {position}")]
    ZeroDenominator { position: usize },
}

impl ParseError {
    pub fn position(&self) -> usize {
        match self {
            ParseError::Syntax { position, .. } | ParseError::ZeroDenominator { position } => {
                *position
            }
        }
    }

    pub(crate) fn shifted(self, by: usize) -> ParseError {
        match self {
            ParseError::Syntax { position, message } => ParseError::Syntax {
                position: position + by,
                message,
            },
            ParseError::ZeroDenominator { position } => ParseError::ZeroDenominator {
                position: position + by,
            },
        }
    }
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Serializes a rational as its `p/q` string.
pub fn ser_rational<S: serde::Serializer>(q: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(q)
}

/// Decides `x − offset ∈ modulus·ℤ`.
///
/// Atom-free values are decided by rational arithmetic. A surviving
/// transcendental atom, or exactly one surviving algebraic-irrational atom,
/// makes membership impossible. Two or more unrelated algebraic atoms leave
/// the question open.
///
/// # Panics
///
/// Panics if `modulus` is not positive.
pub fn decide_coset(x: &ParamValue, offset: &Rational, modulus: &Rational) -> TriBool {
    assert!(modulus.is_positive(), "coset modulus must be positive");
    if x.has_transcendental() {
        return TriBool::No;
    }
    match x.coeffs().len() {
        0 => {
            let y = (x.constant() - offset) / modulus;
            TriBool::from(y.is_integer())
        }
        1 => TriBool::No,
        _ => TriBool::Unknown,
    }
}

/// `x ∈ ℤ`.
pub fn in_integers(x: &ParamValue) -> TriBool {
    decide_coset(x, &Rational::zero(), &int(1))
}

/// `x ∈ 2ℤ`.
pub fn in_even_integers(x: &ParamValue) -> TriBool {
    decide_coset(x, &Rational::zero(), &int(2))
}

/// `x ∈ ½ + ℤ`.
pub fn in_half_integers(x: &ParamValue) -> TriBool {
    decide_coset(x, &rat(1, 2), &int(1))
}

/// The exact integer value of an atom-free integral `x`.
pub fn as_integer(x: &ParamValue) -> Option<BigInt> {
    let q = x.as_rational()?;
    q.is_integer().then(|| q.to_integer())
}

/// Rank over ℚ of the transcendental-atom coefficient vectors.
pub fn transcendence_degree(values: &[ParamValue]) -> usize {
    let mut atoms: Vec<Atom> = values
        .iter()
        .flat_map(|v| v.atoms().copied())
        .filter(Atom::is_transcendental)
        .collect();
    atoms.sort();
    atoms.dedup();
    if atoms.is_empty() {
        return 0;
    }
    let rows: Vec<Vec<Rational>> = values
        .iter()
        .map(|v| atoms.iter().map(|a| v.coeff(a)).collect())
        .collect();
    rational_rank(&rows)
}

/// Least common multiple of the denominators of `qs` (1 for an empty slice).
pub fn common_denominator<'a, I: IntoIterator<Item = &'a Rational>>(qs: I) -> BigInt {
    qs.into_iter()
        .fold(BigInt::from(1), |acc, q| acc.lcm(q.denom()))
}

/// The sorted set of atoms appearing in `values`.
pub fn atom_environment(values: &[ParamValue]) -> Vec<Atom> {
    let mut atoms: Vec<Atom> = values.iter().flat_map(|v| v.atoms().copied()).collect();
    atoms.sort();
    atoms.dedup();
    atoms
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> ParamValue {
        parse_param(s).unwrap()
    }

    #[test]
    fn coset_examples() {
        assert_eq!(decide_coset(&p("7/2"), &rat(1, 2), &int(1)), TriBool::Yes);
        assert_eq!(decide_coset(&p("tau1 + 1/2"), &int(0), &int(1)), TriBool::No);
        assert_eq!(decide_coset(&p("alg1 + alg2"), &int(0), &int(1)), TriBool::Unknown);
        assert_eq!(
            decide_coset(&p("2*alg1 - 2*alg1 + 4"), &int(0), &int(2)),
            TriBool::Yes
        );
        assert_eq!(decide_coset(&p("alg1 + 3"), &int(0), &int(1)), TriBool::No);
        assert_eq!(decide_coset(&p("alg1 + alg2 + tau1"), &int(0), &int(1)), TriBool::No);
        assert_eq!(decide_coset(&p("3"), &int(1), &int(2)), TriBool::Yes);
        assert_eq!(decide_coset(&p("4"), &int(1), &int(2)), TriBool::No);
        assert_eq!(decide_coset(&p("1/3"), &int(0), &rat(1, 3)), TriBool::Yes);
    }

    #[test]
    #[should_panic]
    fn nonpositive_modulus_panics() {
        decide_coset(&p("1"), &int(0), &int(0));
    }

    #[test]
    fn transcendence_degree_examples() {
        assert_eq!(transcendence_degree(&[p("tau1"), p("tau1+3"), p("2*tau1")]), 1);
        assert_eq!(transcendence_degree(&[p("1/2"), p("3"), p("alg1")]), 0);
        assert_eq!(transcendence_degree(&[p("tau1"), p("tau2"), p("tau1+tau2")]), 2);
        assert_eq!(transcendence_degree(&[]), 0);
        assert_eq!(transcendence_degree(&[p("tau1 + alg1"), p("tau1")]), 1);
    }

    #[test]
    fn integer_extraction() {
        assert_eq!(as_integer(&p("6/3")), Some(BigInt::from(2)));
        assert_eq!(as_integer(&p("1/2")), None);
        assert_eq!(as_integer(&p("tau1")), None);
    }
}
