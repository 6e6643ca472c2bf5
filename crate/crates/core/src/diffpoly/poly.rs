use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::exactnum::Rational;

/// A variable of the differential polynomial ring.
///
/// `Jet(x, k)` is the k-th formal derivative of the state variable `x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    T,
    Param(&'static str),
    Jet(&'static str, u8),
}

impl Var {
    pub const fn state(name: &'static str) -> Var {
        Var::Jet(name, 0)
    }

    /// Image under the total derivative, when it is again a variable.
    pub fn derivative(self) -> Option<Var> {
        match self {
            Var::Jet(x, k) => Some(Var::Jet(x, k + 1)),
            _ => None,
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::T => f.write_str("t"),
            Var::Param(p) => f.write_str(p),
            Var::Jet(x, 0) => f.write_str(x),
            Var::Jet(x, k) if *k <= 3 => write!(f, "{x}{}", "'".repeat(*k as usize)),
            Var::Jet(x, k) => write!(f, "{x}^({k})"),
        }
    }
}

/// Monomial as a sorted list of `(variable, exponent)` with positive exponents.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial(Vec<(Var, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: Var) -> Self {
        Monomial(vec![(v, 1)])
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn factors(&self) -> &[(Var, u32)] {
        &self.0
    }

    pub fn exponent(&self, v: Var) -> u32 {
        self.0.iter().find(|(w, _)| *w == v).map(|(_, e)| *e).unwrap_or(0)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|(_, e)| e).sum()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            let (a, ea) = self.0[i];
            let (b, eb) = other.0[j];
            match a.cmp(&b) {
                std::cmp::Ordering::Less => {
                    out.push((a, ea));
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push((b, eb));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push((a, ea + eb));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        Monomial(out)
    }

    /// Removes `v` entirely, returning the remaining monomial and the exponent.
    fn split(&self, v: Var) -> (Monomial, u32) {
        let mut e = 0;
        let rest = self
            .0
            .iter()
            .filter(|(w, ew)| {
                if *w == v {
                    e = *ew;
                    false
                } else {
                    true
                }
            })
            .copied()
            .collect();
        (Monomial(rest), e)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (v, e)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Sparse multivariate polynomial with rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, Rational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Poly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = Poly::zero();
        p.add_term(Monomial::one(), c);
        p
    }

    pub fn int(n: i64) -> Self {
        Poly::constant(Rational::from_integer(n.into()))
    }

    pub fn var(v: Var) -> Self {
        let mut p = Poly::zero();
        p.add_term(Monomial::var(v), Rational::one());
        p
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn vars(&self) -> BTreeSet<Var> {
        self.terms
            .keys()
            .flat_map(|m| m.0.iter().map(|(v, _)| *v))
            .collect()
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.keys().map(|m| m.exponent(v)).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }

    pub fn neg(&self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, k: &Rational) -> Poly {
        if k.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * k)).collect(),
        }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> Poly {
        let mut acc = Poly::one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Partial derivative with respect to `v`.
    pub fn partial(&self, v: Var) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let (rest, e) = m.split(v);
            if e == 0 {
                continue;
            }
            let mut factors = rest.0;
            if e > 1 {
                factors.push((v, e - 1));
                factors.sort();
            }
            out.add_term(Monomial(factors), c * Rational::from_integer(BigInt::from(e)));
        }
        out
    }

    /// Total derivative: `D t = 1`, `D param = 0`, `D x⁽ᵏ⁾ = x⁽ᵏ⁺¹⁾`.
    pub fn total_derivative(&self) -> Poly {
        let mut out = Poly::zero();
        for v in self.vars() {
            let d = match v {
                Var::T => Poly::one(),
                Var::Param(_) => continue,
                Var::Jet(..) => Poly::var(v.derivative().expect("jet")),
            };
            out = out.add(&self.partial(v).mul(&d));
        }
        out
    }

    /// Substitutes `v := num/den`, returning `(N, k)` with
    /// `self(v = num/den) = N / den^k` and `k = deg_v(self)`.
    pub fn substitute_fraction(&self, v: Var, num: &Poly, den: &Poly) -> (Poly, u32) {
        let k = self.degree_in(v);
        if k == 0 {
            return (self.clone(), 0);
        }
        let num_pows = powers(num, k);
        let den_pows = powers(den, k);
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let (rest, e) = m.split(v);
            let mut piece = Poly::zero();
            piece.add_term(rest, c.clone());
            let factor = num_pows[e as usize].mul(&den_pows[(k - e) as usize]);
            out = out.add(&piece.mul(&factor));
        }
        (out, k)
    }

    /// Substitutes `v := value` for a polynomial value.
    pub fn substitute(&self, v: Var, value: &Poly) -> Poly {
        self.substitute_fraction(v, value, &Poly::one()).0
    }

    /// Exact evaluation; `None` when some variable is unassigned.
    pub fn eval<F: Fn(Var) -> Option<Rational>>(&self, assign: &F) -> Option<Rational> {
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (v, e) in &m.0 {
                let x = assign(*v)?;
                term *= num_traits::pow(x, *e as usize);
            }
            acc += term;
        }
        Some(acc)
    }

    /// Scales so that the coefficients are coprime integers with a positive
    /// leading coefficient.
    pub fn primitive(&self) -> Poly {
        use num_integer::Integer;
        if self.is_zero() {
            return Poly::zero();
        }
        let lcm = self
            .terms
            .values()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let scaled: Vec<BigInt> = self
            .terms
            .values()
            .map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer())
            .collect();
        let g = scaled.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        let lead_negative = self.terms.values().next_back().map(|c| c.is_negative()).unwrap_or(false);
        let mut factor = BigRational::new(lcm, g);
        if lead_negative {
            factor = -factor;
        }
        self.scale(&factor)
    }
}

fn powers(p: &Poly, k: u32) -> Vec<Poly> {
    let mut out = Vec::with_capacity(k as usize + 1);
    out.push(Poly::one());
    for i in 1..=k as usize {
        out.push(out[i - 1].mul(p));
    }
    out
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        // Highest monomials first for readability.
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if negative {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if negative { " - " } else { " + " })?;
            }
            if m.is_one() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}
