use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::WeylError;

/// One factor of a word: a generator or a parenthesized subword, raised to
/// a nonzero integer power.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Factor {
    Letter { name: String, power: i64 },
    Group { word: Word, power: i64 },
}

/// A product of factors; the rightmost factor acts first.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Word {
    factors: Vec<Factor>,
}

impl Word {
    pub fn empty() -> Self {
        Word::default()
    }

    pub fn letter(name: impl Into<String>) -> Self {
        Word {
            factors: vec![Factor::Letter { name: name.into(), power: 1 }],
        }
    }

    pub fn from_factors(factors: Vec<Factor>) -> Self {
        Word {
            factors: factors.into_iter().filter(|f| f.power() != 0).collect(),
        }
    }

    /// Letters in application order reversed (leftmost first).
    pub fn from_letters<S: AsRef<str>>(names: &[S]) -> Self {
        Word::from_factors(
            names
                .iter()
                .map(|n| Factor::Letter { name: n.as_ref().to_string(), power: 1 })
                .collect(),
        )
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Number of generator applications.
    pub fn len(&self) -> u64 {
        self.factors.iter().map(Factor::len).sum()
    }

    /// `self ∘ other`.
    pub fn then_after(&self, other: &Word) -> Word {
        let mut factors = self.factors.clone();
        factors.extend(other.factors.iter().cloned());
        Word { factors }
    }

    pub fn pow(&self, power: i64) -> Word {
        match (self.factors.as_slice(), power) {
            (_, 0) | ([], _) => Word::empty(),
            (_, 1) => self.clone(),
            ([Factor::Letter { name, power: p }], _) => Word {
                factors: vec![Factor::Letter { name: name.clone(), power: p * power }],
            },
            _ => Word {
                factors: vec![Factor::Group { word: self.clone(), power }],
            },
        }
    }

    /// Formal inverse: factors reversed with negated powers.
    pub fn inverse(&self) -> Word {
        Word {
            factors: self
                .factors
                .iter()
                .rev()
                .map(|f| match f {
                    Factor::Letter { name, power } => Factor::Letter { name: name.clone(), power: -power },
                    Factor::Group { word, power } => Factor::Group { word: word.clone(), power: -power },
                })
                .collect(),
        }
    }

    /// Reduces letter powers modulo 2 for the given involutions and merges
    /// adjacent equal letters.
    pub fn simplify(&self, is_involution: &dyn Fn(&str) -> bool) -> Word {
        let mut out: Vec<Factor> = Vec::new();
        for f in &self.factors {
            let f = match f {
                Factor::Group { word, power } => {
                    let inner = word.simplify(is_involution);
                    match inner.factors.len() {
                        0 => continue,
                        1 if *power == 1 => inner.factors[0].clone(),
                        _ => Factor::Group { word: inner, power: *power },
                    }
                }
                l => l.clone(),
            };
            let merged = match (out.last_mut(), &f) {
                (Some(Factor::Letter { name: a, power: p }), Factor::Letter { name: b, power: q }) if a == b => {
                    *p += q;
                    true
                }
                _ => false,
            };
            if !merged {
                out.push(f);
            }
            if let Some(Factor::Letter { name, power }) = out.last_mut() {
                if is_involution(name) {
                    *power = power.rem_euclid(2);
                }
                if *power == 0 {
                    out.pop();
                }
            }
        }
        Word { factors: out }
    }

    /// Letters with multiplicity, leftmost first; groups are expanded.
    pub fn expand(&self) -> Vec<(String, bool)> {
        let mut out = Vec::new();
        for f in &self.factors {
            match f {
                Factor::Letter { name, power } => {
                    out.extend((0..power.unsigned_abs()).map(|_| (name.clone(), *power < 0)));
                }
                Factor::Group { word, power } => {
                    let inner = if *power < 0 { word.inverse() } else { word.clone() };
                    for _ in 0..power.unsigned_abs() {
                        out.extend(inner.expand());
                    }
                }
            }
        }
        out
    }
}

impl Factor {
    pub fn power(&self) -> i64 {
        match self {
            Factor::Letter { power, .. } | Factor::Group { power, .. } => *power,
        }
    }

    fn len(&self) -> u64 {
        match self {
            Factor::Letter { power, .. } => power.unsigned_abs(),
            Factor::Group { word, power } => word.len() * power.unsigned_abs(),
        }
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let power = self.power();
        match self {
            Factor::Letter { name, .. } => f.write_str(name)?,
            Factor::Group { word, .. } => write!(f, "({word})")?,
        }
        if power != 1 {
            write!(f, "^{power}")?;
        }
        Ok(())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("id");
        }
        for (i, x) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

impl Serialize for Word {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Maps subscript digits, `₋`, `₊`, `α` and `⁻¹` to their ASCII spellings.
fn normalize(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    for c in text.replace("⁻¹", "^-1").chars() {
        match c {
            '₀'..='₉' => out.push(char::from(b'0' + (c as u32 - '₀' as u32) as u8)),
            '₋' => out.push('-'),
            '₊' => out.push('+'),
            'α' => out.push('a'),
            '∘' | '·' | '*' => out.push(' '),
            _ => out.push(c),
        }
    }
    out
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    text: &'a str,
}

impl Parser<'_> {
    fn err(&self, message: impl Into<String>) -> WeylError {
        WeylError::WordSyntax {
            word: self.text.to_string(),
            message: format!("{} at position {}", message.into(), self.pos),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn word(&mut self, nested: bool) -> Result<Word, WeylError> {
        let mut factors = Vec::new();
        loop {
            self.skip_ws();
            match self.peek() {
                None if nested => return Err(self.err("unclosed parenthesis")),
                None => break,
                Some(')') if nested => {
                    self.pos += 1;
                    break;
                }
                Some(')') => return Err(self.err("unbalanced ')'")),
                Some('(') => {
                    self.pos += 1;
                    let inner = self.word(true)?;
                    let power = self.power()?;
                    factors.push(Factor::Group { word: inner, power });
                }
                Some(c) if c.is_ascii_alphanumeric() => {
                    let start = self.pos;
                    while let Some(c) = self.peek() {
                        if c.is_ascii_alphanumeric() || ((c == '-' || c == '+') && self.pos > start) {
                            self.pos += 1;
                            if c == '-' || c == '+' {
                                break;
                            }
                        } else {
                            break;
                        }
                    }
                    let name: String = self.chars[start..self.pos].iter().collect();
                    let power = self.power()?;
                    factors.push(Factor::Letter { name, power });
                }
                Some(c) => return Err(self.err(format!("unexpected character {c:?}"))),
            }
        }
        Ok(Word::from_factors(factors))
    }

    fn power(&mut self) -> Result<i64, WeylError> {
        if self.peek() != Some('^') {
            return Ok(1);
        }
        self.pos += 1;
        let start = self.pos;
        if self.peek() == Some('-') {
            self.pos += 1;
        }
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse().map_err(|_| self.err("malformed exponent"))
    }
}

impl FromStr for Word {
    type Err = WeylError;

    /// Accepts whitespace-, `*`- or `∘`-separated letters with optional
    /// `^k` powers, parenthesized groups, and `id` for the empty word.
    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let norm = normalize(text);
        if norm.trim() == "id" || norm.trim().is_empty() {
            return Ok(Word::empty());
        }
        let mut p = Parser {
            chars: norm.chars().collect(),
            pos: 0,
            text,
        };
        p.word(false)
    }
}
