use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use super::ParseError;

/// Kind of a symbolic atom.
///
/// Transcendental atoms are algebraically independent over ℚ. An
/// algebraic-irrational atom is only known not to be rational.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum AtomKind {
    Transcendental,
    AlgebraicIrrational,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Atom {
    pub kind: AtomKind,
    pub id: u32,
}

impl Atom {
    pub const fn tau(id: u32) -> Atom {
        Atom {
            kind: AtomKind::Transcendental,
            id,
        }
    }

    pub const fn alg(id: u32) -> Atom {
        Atom {
            kind: AtomKind::AlgebraicIrrational,
            id,
        }
    }

    pub fn is_transcendental(&self) -> bool {
        self.kind == AtomKind::Transcendental
    }

    pub fn name(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            AtomKind::Transcendental => write!(f, "tau{}", self.id),
            AtomKind::AlgebraicIrrational => write!(f, "alg{}", self.id),
        }
    }
}

impl Serialize for Atom {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// A ℚ-affine combination `constant + Σ coeff·atom`.
///
/// Zero coefficients are never stored, so structural equality is value
/// equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ParamValue {
    constant: BigRational,
    coeffs: BTreeMap<Atom, BigRational>,
}

impl ParamValue {
    pub fn zero() -> Self {
        ParamValue {
            constant: BigRational::zero(),
            coeffs: BTreeMap::new(),
        }
    }

    pub fn rational(q: BigRational) -> Self {
        ParamValue {
            constant: q,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn int(n: i64) -> Self {
        Self::rational(BigRational::from_integer(n.into()))
    }

    pub fn frac(n: i64, d: i64) -> Self {
        Self::rational(BigRational::new(n.into(), d.into()))
    }

    pub fn atom(a: Atom) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(a, BigRational::one());
        ParamValue {
            constant: BigRational::zero(),
            coeffs,
        }
    }

    pub fn tau(id: u32) -> Self {
        Self::atom(Atom::tau(id))
    }

    pub fn alg(id: u32) -> Self {
        Self::atom(Atom::alg(id))
    }

    /// Builds a value from raw parts, dropping zero coefficients.
    pub fn from_parts<I>(constant: BigRational, coeffs: I) -> Self
    where
        I: IntoIterator<Item = (Atom, BigRational)>,
    {
        let mut v = ParamValue::rational(constant);
        for (a, c) in coeffs {
            v.add_term(a, &c);
        }
        v
    }

    fn add_term(&mut self, a: Atom, c: &BigRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(a).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&a);
        }
    }

    pub fn constant(&self) -> &BigRational {
        &self.constant
    }

    pub fn coeffs(&self) -> &BTreeMap<Atom, BigRational> {
        &self.coeffs
    }

    pub fn coeff(&self, a: &Atom) -> BigRational {
        self.coeffs.get(a).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn atoms(&self) -> impl Iterator<Item = &Atom> {
        self.coeffs.keys()
    }

    /// The rational value when no atom survives.
    pub fn as_rational(&self) -> Option<&BigRational> {
        self.coeffs.is_empty().then_some(&self.constant)
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty() && self.constant.is_zero()
    }

    pub fn has_transcendental(&self) -> bool {
        self.coeffs.keys().any(Atom::is_transcendental)
    }

    /// Algebraic over ℚ: no transcendental atom survives.
    pub fn is_algebraic(&self) -> bool {
        !self.has_transcendental()
    }

    pub fn scale(&self, k: &BigRational) -> ParamValue {
        if k.is_zero() {
            return ParamValue::zero();
        }
        ParamValue {
            constant: &self.constant * k,
            coeffs: self.coeffs.iter().map(|(a, c)| (*a, c * k)).collect(),
        }
    }

    pub fn add_rational(&self, q: &BigRational) -> ParamValue {
        let mut out = self.clone();
        out.constant += q;
        out
    }

    /// Numeric value given an assignment for every atom.
    pub fn eval_f64<F: Fn(&Atom) -> Option<f64>>(&self, assign: F) -> Option<f64> {
        let mut acc = rational_to_f64(&self.constant);
        for (a, c) in &self.coeffs {
            acc += rational_to_f64(c) * assign(a)?;
        }
        Some(acc)
    }
}

pub(crate) fn rational_to_f64(q: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    q.to_f64().unwrap_or(f64::NAN)
}

impl Default for ParamValue {
    fn default() -> Self {
        ParamValue::zero()
    }
}

impl From<BigRational> for ParamValue {
    fn from(q: BigRational) -> Self {
        ParamValue::rational(q)
    }
}

impl From<i64> for ParamValue {
    fn from(n: i64) -> Self {
        ParamValue::int(n)
    }
}

impl From<Atom> for ParamValue {
    fn from(a: Atom) -> Self {
        ParamValue::atom(a)
    }
}

impl Add<&ParamValue> for &ParamValue {
    type Output = ParamValue;

    fn add(self, rhs: &ParamValue) -> ParamValue {
        let mut out = self.clone();
        out.constant += &rhs.constant;
        for (a, c) in &rhs.coeffs {
            out.add_term(*a, c);
        }
        out
    }
}

impl Sub<&ParamValue> for &ParamValue {
    type Output = ParamValue;

    fn sub(self, rhs: &ParamValue) -> ParamValue {
        let mut out = self.clone();
        out.constant -= &rhs.constant;
        for (a, c) in &rhs.coeffs {
            out.add_term(*a, &-c);
        }
        out
    }
}

impl Neg for &ParamValue {
    type Output = ParamValue;

    fn neg(self) -> ParamValue {
        ParamValue {
            constant: -&self.constant,
            coeffs: self.coeffs.iter().map(|(a, c)| (*a, -c)).collect(),
        }
    }
}

impl Mul<&BigRational> for &ParamValue {
    type Output = ParamValue;

    fn mul(self, rhs: &BigRational) -> ParamValue {
        self.scale(rhs)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<ParamValue> for ParamValue {
            type Output = ParamValue;
            fn $m(self, rhs: ParamValue) -> ParamValue {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&ParamValue> for ParamValue {
            type Output = ParamValue;
            fn $m(self, rhs: &ParamValue) -> ParamValue {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);

impl Neg for ParamValue {
    type Output = ParamValue;
    fn neg(self) -> ParamValue {
        -&self
    }
}

impl fmt::Display for ParamValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (a, c) in &self.coeffs {
            let negative = c.is_negative();
            let mag = c.abs();
            if first {
                if mag.is_one() {
                    if negative {
                        write!(f, "-{a}")?;
                    } else {
                        write!(f, "{a}")?;
                    }
                } else {
                    write!(f, "{c}*{a}")?;
                }
            } else {
                f.write_str(if negative { " - " } else { " + " })?;
                if mag.is_one() {
                    write!(f, "{a}")?;
                } else {
                    write!(f, "{mag}*{a}")?;
                }
            }
            first = false;
        }
        if first {
            write!(f, "{}", self.constant)
        } else if !self.constant.is_zero() {
            let sign = if self.constant.is_negative() { "-" } else { "+" };
            write!(f, " {sign} {}", self.constant.abs())
        } else {
            Ok(())
        }
    }
}

impl Serialize for ParamValue {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl FromStr for ParamValue {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_param(s)
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Slash,
    Star,
    Plus,
    Minus,
    Atom(Atom),
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        match c {
            b' ' | b'\t' | b'\n' | b'\r' => i += 1,
            b'/' => {
                out.push((i, Tok::Slash));
                i += 1;
            }
            b'*' => {
                out.push((i, Tok::Star));
                i += 1;
            }
            b'+' => {
                out.push((i, Tok::Plus));
                i += 1;
            }
            b'-' => {
                out.push((i, Tok::Minus));
                i += 1;
            }
            b'0'..=b'9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = text[start..i].parse().expect("ascii digits");
                out.push((start, Tok::Num(n)));
            }
            b'a'..=b'z' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_lowercase() {
                    i += 1;
                }
                let word = &text[start..i];
                let kind = match word {
                    "tau" => AtomKind::Transcendental,
                    "alg" => AtomKind::AlgebraicIrrational,
                    _ => {
                        return Err(ParseError::Syntax {
                            position: start,
                            message: format!("unknown atom prefix `{word}` (expected `tau` or `alg`)"),
                        })
                    }
                };
                let dstart = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                if dstart == i {
                    return Err(ParseError::Syntax {
                        position: dstart,
                        message: format!("atom `{word}` needs a numeric id"),
                    });
                }
                let id: u32 = text[dstart..i].parse().map_err(|_| ParseError::Syntax {
                    position: dstart,
                    message: "atom id out of range".into(),
                })?;
                out.push((start, Tok::Atom(Atom { kind, id })));
            }
            _ => {
                let ch = text[i..].chars().next().unwrap_or('?');
                return Err(ParseError::Syntax {
                    position: i,
                    message: format!("unexpected character `{ch}`"),
                });
            }
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map(|(p, _)| *p).unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError::Syntax {
            position: self.offset(),
            message: message.into(),
        })
    }

    /// term := ["-"] (rational ["*" atom] | atom)
    fn term(&mut self, acc: &mut ParamValue, outer_sign: bool) -> Result<(), ParseError> {
        let mut negative = !outer_sign;
        if self.peek() == Some(&Tok::Minus) {
            self.bump();
            negative = !negative;
        }
        match self.bump() {
            Some(Tok::Num(n)) => {
                let mut q = BigRational::from_integer(n);
                if self.peek() == Some(&Tok::Slash) {
                    self.bump();
                    let at = self.offset();
                    match self.bump() {
                        Some(Tok::Num(d)) => {
                            if d.is_zero() {
                                return Err(ParseError::ZeroDenominator { position: at });
                            }
                            q /= BigRational::from_integer(d);
                        }
                        _ => {
                            self.pos -= 1;
                            return self.err("expected denominator digits after `/`");
                        }
                    }
                }
                if negative {
                    q = -q;
                }
                if self.peek() == Some(&Tok::Star) {
                    self.bump();
                    match self.bump() {
                        Some(Tok::Atom(a)) => acc.add_term(a, &q),
                        _ => {
                            self.pos -= 1;
                            return self.err("expected an atom after `*`");
                        }
                    }
                } else {
                    acc.constant += q;
                }
                Ok(())
            }
            Some(Tok::Atom(a)) => {
                let c = if negative {
                    -BigRational::one()
                } else {
                    BigRational::one()
                };
                acc.add_term(a, &c);
                Ok(())
            }
            Some(_) => {
                self.pos -= 1;
                self.err("expected a rational or an atom")
            }
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parses `expr := term (("+"|"-") term)*` into canonical form.
pub fn parse_param(text: &str) -> Result<ParamValue, ParseError> {
    let toks = tokenize(text)?;
    let mut p = Parser {
        toks,
        pos: 0,
        end: text.len(),
    };
    if p.peek().is_none() {
        return p.err("empty parameter");
    }
    let mut acc = ParamValue::zero();
    p.term(&mut acc, true)?;
    while let Some(t) = p.peek() {
        let sign = match t {
            Tok::Plus => true,
            Tok::Minus => false,
            _ => return p.err("expected `+` or `-` between terms"),
        };
        p.bump();
        p.term(&mut acc, sign)?;
    }
    Ok(acc)
}

/// Parses a comma-separated parameter list. An empty or blank string is
/// the empty list.
pub fn parse_param_list(text: &str) -> Result<Vec<ParamValue>, ParseError> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut base = 0;
    for piece in text.split(',') {
        let v = parse_param(piece).map_err(|e| e.shifted(base))?;
        out.push(v);
        base += piece.len() + 1;
    }
    Ok(out)
}
