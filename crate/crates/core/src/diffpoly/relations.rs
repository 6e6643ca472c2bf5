use std::collections::BTreeMap;

use super::expr::DiffExpr;
use super::poly::Var;
use super::DiffPolyError;

/// Rewrite rules `x⁽ᵏ⁾ → rhs`, at most one per state variable.
///
/// Invariant: no right-hand side mentions `y⁽ʲ⁾` with `j` at or above the
/// order of `y`'s own rule, so repeated substitution terminates. Higher
/// jets are handled by prolongation: the rule for `x⁽ʲ⁾` with `j > k` is
/// the reduced total derivative of the rule for `x⁽ʲ⁻¹⁾`.
#[derive(Debug, Clone, Default)]
pub struct RelationSet {
    rules: BTreeMap<&'static str, (u8, DiffExpr)>,
}

impl RelationSet {
    pub fn new() -> Self {
        RelationSet::default()
    }

    /// Builds a set from `(head, rhs)` pairs and checks triangularity.
    pub fn from_rules<I>(rules: I) -> Result<Self, DiffPolyError>
    where
        I: IntoIterator<Item = (Var, DiffExpr)>,
    {
        let mut set = RelationSet::new();
        for (head, rhs) in rules {
            let Var::Jet(name, order) = head else {
                return Err(DiffPolyError::BadRuleHead(head.to_string()));
            };
            if order == 0 {
                return Err(DiffPolyError::BadRuleHead(head.to_string()));
            }
            if set.rules.insert(name, (order, rhs)).is_some() {
                return Err(DiffPolyError::DuplicateRule(name.to_string()));
            }
        }
        set.check_triangular()?;
        Ok(set)
    }

    fn check_triangular(&self) -> Result<(), DiffPolyError> {
        for (head, (order, rhs)) in &self.rules {
            for v in rhs.vars() {
                if self.is_reducible(v) {
                    return Err(DiffPolyError::NotTriangular(
                        Var::Jet(head, *order).to_string(),
                    ));
                }
            }
        }
        Ok(())
    }

    pub fn rules(&self) -> impl Iterator<Item = (Var, &DiffExpr)> {
        self.rules
            .iter()
            .map(|(name, (order, rhs))| (Var::Jet(name, *order), rhs))
    }

    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }

    fn is_reducible(&self, v: Var) -> bool {
        match v {
            Var::Jet(name, j) => self.rules.get(name).is_some_and(|(k, _)| j >= *k),
            _ => false,
        }
    }

    /// The reduced right-hand side for a reducible jet `v`.
    fn rule_for(&self, v: Var) -> Result<DiffExpr, DiffPolyError> {
        let Var::Jet(name, j) = v else {
            unreachable!("only jets are reducible")
        };
        let (k, rhs) = &self.rules[name];
        if j == *k {
            return Ok(rhs.clone());
        }
        let lower = self.rule_for(Var::Jet(name, j - 1))?;
        self.reduce(&lower.total_derivative())
    }

    /// Substitutes rules until no reducible jet remains.
    pub fn reduce(&self, e: &DiffExpr) -> Result<DiffExpr, DiffPolyError> {
        let mut cur = e.clone();
        loop {
            let target = cur
                .vars()
                .into_iter()
                .filter(|v| self.is_reducible(*v))
                .max_by_key(|v| match v {
                    Var::Jet(_, j) => *j,
                    _ => 0,
                });
            let Some(v) = target else {
                return Ok(cur);
            };
            let value = self.rule_for(v)?;
            cur = cur.substitute(v, &value)?;
        }
    }
}
