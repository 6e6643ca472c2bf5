use std::collections::BTreeSet;
use std::fmt;

use num_traits::{One, Zero};

use super::poly::{Poly, Var};
use super::DiffPolyError;
use crate::exactnum::Rational;

/// A quotient of two differential polynomials.
///
/// No gcd normalization is performed; equality is decided by
/// cross-multiplication.
#[derive(Debug, Clone)]
pub struct DiffExpr {
    num: Poly,
    den: Poly,
}

impl DiffExpr {
    pub fn new(num: Poly, den: Poly) -> Result<Self, DiffPolyError> {
        if den.is_zero() {
            return Err(DiffPolyError::ZeroDenominator);
        }
        Ok(DiffExpr { num, den }.normalized())
    }

    pub fn poly(p: Poly) -> Self {
        DiffExpr {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn zero() -> Self {
        DiffExpr::poly(Poly::zero())
    }

    pub fn one() -> Self {
        DiffExpr::poly(Poly::one())
    }

    pub fn constant(c: Rational) -> Self {
        DiffExpr::poly(Poly::constant(c))
    }

    pub fn int(n: i64) -> Self {
        DiffExpr::poly(Poly::int(n))
    }

    pub fn var(v: Var) -> Self {
        DiffExpr::poly(Poly::var(v))
    }

    pub fn t() -> Self {
        DiffExpr::var(Var::T)
    }

    pub fn param(name: &'static str) -> Self {
        DiffExpr::var(Var::Param(name))
    }

    pub fn jet(name: &'static str, order: u8) -> Self {
        DiffExpr::var(Var::Jet(name, order))
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator(&self) -> &Poly {
        &self.den
    }

    fn normalized(self) -> Self {
        if self.num.is_zero() {
            return DiffExpr::zero();
        }
        if let Some(c) = self.den.as_constant() {
            if !c.is_one() {
                let inv = Rational::one() / c;
                return DiffExpr {
                    num: self.num.scale(&inv),
                    den: Poly::one(),
                };
            }
        }
        if self.num == self.den {
            return DiffExpr::one();
        }
        self
    }

    pub fn add(&self, other: &DiffExpr) -> DiffExpr {
        if self.den == other.den {
            return DiffExpr {
                num: self.num.add(&other.num),
                den: self.den.clone(),
            }
            .normalized();
        }
        DiffExpr {
            num: self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            den: self.den.mul(&other.den),
        }
        .normalized()
    }

    pub fn sub(&self, other: &DiffExpr) -> DiffExpr {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> DiffExpr {
        DiffExpr {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &DiffExpr) -> DiffExpr {
        DiffExpr {
            num: self.num.mul(&other.num),
            den: self.den.mul(&other.den),
        }
        .normalized()
    }

    pub fn scale(&self, k: &Rational) -> DiffExpr {
        DiffExpr {
            num: self.num.scale(k),
            den: self.den.clone(),
        }
        .normalized()
    }

    pub fn div(&self, other: &DiffExpr) -> Result<DiffExpr, DiffPolyError> {
        if other.num.is_zero() {
            return Err(DiffPolyError::ZeroDenominator);
        }
        Ok(DiffExpr {
            num: self.num.mul(&other.den),
            den: self.den.mul(&other.num),
        }
        .normalized())
    }

    pub fn pow(&self, n: u32) -> DiffExpr {
        DiffExpr {
            num: self.num.pow(n),
            den: self.den.pow(n),
        }
        .normalized()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn as_constant(&self) -> Option<Rational> {
        let n = self.num.as_constant()?;
        let d = self.den.as_constant()?;
        Some(n / d)
    }

    /// Cross-multiplication equality.
    pub fn equals(&self, other: &DiffExpr) -> bool {
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }

    pub fn vars(&self) -> BTreeSet<Var> {
        let mut vs = self.num.vars();
        vs.extend(self.den.vars());
        vs
    }

    /// Formal total derivative, with no relation substitution.
    pub fn total_derivative(&self) -> DiffExpr {
        let dn = self.num.total_derivative();
        if let Some(c) = self.den.as_constant() {
            return DiffExpr {
                num: dn,
                den: Poly::constant(c),
            }
            .normalized();
        }
        let dd = self.den.total_derivative();
        DiffExpr {
            num: dn.mul(&self.den).sub(&self.num.mul(&dd)),
            den: self.den.mul(&self.den),
        }
        .normalized()
    }

    /// Substitutes `v := value`.
    pub fn substitute(&self, v: Var, value: &DiffExpr) -> Result<DiffExpr, DiffPolyError> {
        let (nn, kn) = self.num.substitute_fraction(v, &value.num, &value.den);
        let (nd, kd) = self.den.substitute_fraction(v, &value.num, &value.den);
        if nd.is_zero() {
            return Err(DiffPolyError::ZeroDenominator);
        }
        let (num, den) = if kd >= kn {
            (nn.mul(&value.den.pow(kd - kn)), nd)
        } else {
            (nn, nd.mul(&value.den.pow(kn - kd)))
        };
        Ok(DiffExpr { num, den }.normalized())
    }

    /// Exact evaluation at a point; `None` if a variable is unassigned,
    /// `Err` if the denominator vanishes there.
    pub fn eval<F: Fn(Var) -> Option<Rational>>(
        &self,
        assign: &F,
    ) -> Option<Result<Rational, DiffPolyError>> {
        let n = self.num.eval(assign)?;
        let d = self.den.eval(assign)?;
        if d.is_zero() {
            return Some(Err(DiffPolyError::ZeroDenominator));
        }
        Some(Ok(n / d))
    }
}

impl PartialEq for DiffExpr {
    fn eq(&self, other: &Self) -> bool {
        self.equals(other)
    }
}

impl serde::Serialize for DiffExpr {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl fmt::Display for DiffExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.as_constant().is_some_and(|c| c.is_one()) {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

/// Shorthand for an expression built from a polynomial in jets and `t`.
pub fn sum(terms: &[DiffExpr]) -> DiffExpr {
    terms.iter().fold(DiffExpr::zero(), |acc, t| acc.add(t))
}
