use super::expr::DiffExpr;
use super::poly::{Poly, Var};
use crate::exactnum::rational_to_f64;

type Term = (f64, Vec<(usize, i32)>);

/// A [`DiffExpr`] lowered to `f64` arithmetic over a fixed slot order.
#[derive(Debug, Clone)]
pub struct CompiledExpr {
    num: Vec<Term>,
    den: Vec<Term>,
}

fn lower(p: &Poly, slots: &[Var]) -> Result<Vec<Term>, Var> {
    p.terms()
        .map(|(m, c)| {
            let factors = m
                .factors()
                .iter()
                .map(|(v, e)| {
                    let i = slots.iter().position(|s| s == v).ok_or(*v)?;
                    Ok((i, *e as i32))
                })
                .collect::<Result<Vec<_>, Var>>()?;
            Ok((rational_to_f64(c), factors))
        })
        .collect()
}

fn eval_terms(terms: &[Term], x: &[f64]) -> f64 {
    terms
        .iter()
        .map(|(c, fs)| fs.iter().fold(*c, |acc, (i, e)| acc * x[*i].powi(*e)))
        .sum()
}

impl CompiledExpr {
    /// Fails with the first variable of `e` that has no slot.
    pub fn new(e: &DiffExpr, slots: &[Var]) -> Result<Self, Var> {
        Ok(CompiledExpr {
            num: lower(e.numerator(), slots)?,
            den: lower(e.denominator(), slots)?,
        })
    }

    pub fn eval(&self, x: &[f64]) -> f64 {
        eval_terms(&self.num, x) / eval_terms(&self.den, x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matches_exact_evaluation() {
        let e = DiffExpr::jet("q", 0)
            .pow(2)
            .add(&DiffExpr::t())
            .div(&DiffExpr::t())
            .unwrap();
        let c = CompiledExpr::new(&e, &[Var::T, Var::Jet("q", 0)]).unwrap();
        assert!((c.eval(&[2.0, 3.0]) - 5.5).abs() < 1e-15);
        assert!(CompiledExpr::new(&e, &[Var::T]).is_err());
    }
}
