use std::collections::BTreeMap;

use crate::catalog::{FamilyId, OdeSystem};
use crate::diffpoly::{CompiledExpr, DiffExpr, Var};

use super::NumIntError;

/// A first-order vector field `x′ = f(t, x)` over the jets of a system.
///
/// State layout: for each state variable its jets `x, x′, …, x⁽ᵒʳᵈᵉʳ⁻¹⁾`,
/// variable-major.
#[derive(Debug, Clone)]
pub struct VectorField {
    pub family: Option<FamilyId>,
    pub label: String,
    pub state_names: Vec<String>,
    pub order: u8,
    pub params: BTreeMap<String, f64>,
    pub singular_at_t0: bool,
    variables: usize,
    rhs: Vec<CompiledExpr>,
    /// Numeric slot values after `t` and the state.
    param_values: Vec<f64>,
}

fn jet_name(name: &str, k: u8) -> String {
    match k {
        0 => name.to_string(),
        1 => format!("{name}'"),
        _ => format!("{name}^({k})"),
    }
}

impl VectorField {
    /// Compiles `x⁽ᵒʳᵈᵉʳ⁾ = rhsᵢ` with parameter symbols bound to `params`.
    pub fn from_exprs(
        label: impl Into<String>,
        state: &[&'static str],
        order: u8,
        rhs: &[DiffExpr],
        params: &[(&'static str, f64)],
    ) -> Result<Self, NumIntError> {
        assert!(order >= 1, "order must be positive");
        assert_eq!(state.len(), rhs.len(), "one right-hand side per state variable");
        let mut slots = vec![Var::T];
        for s in state {
            slots.extend((0..order).map(|k| Var::Jet(s, k)));
        }
        slots.extend(params.iter().map(|(p, _)| Var::Param(p)));
        let rhs = rhs
            .iter()
            .map(|e| CompiledExpr::new(e, &slots).map_err(|v| NumIntError::UnboundVariable(v.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(VectorField {
            family: None,
            label: label.into(),
            state_names: state
                .iter()
                .flat_map(|s| (0..order).map(move |k| jet_name(s, k)))
                .collect(),
            order,
            params: params.iter().map(|(p, x)| (p.to_string(), *x)).collect(),
            singular_at_t0: false,
            variables: state.len(),
            rhs,
            param_values: params.iter().map(|(_, x)| *x).collect(),
        })
    }

    /// A catalog system with numeric values for its parameter symbols.
    pub fn from_system(system: &OdeSystem, values: &[f64]) -> Result<Self, NumIntError> {
        assert_eq!(values.len(), system.param_symbols.len(), "parameter count");
        let params: Vec<(&'static str, f64)> = system.param_symbols.iter().copied().zip(values.iter().copied()).collect();
        let mut f = VectorField::from_exprs(
            format!("{}/{}", system.family, system.kind.label()),
            &system.state,
            system.order,
            &system.rhs,
            &params,
        )?;
        f.family = Some(system.family);
        f.singular_at_t0 = system.singular_at_t0;
        Ok(f)
    }

    pub fn dimension(&self) -> usize {
        self.variables * usize::from(self.order)
    }

    /// `f(t, x)`; non-finite entries signal a singular point.
    pub fn eval(&self, t: f64, x: &[f64], out: &mut [f64]) {
        let order = usize::from(self.order);
        let mut slots = Vec::with_capacity(1 + x.len() + self.param_values.len());
        slots.push(t);
        slots.extend_from_slice(x);
        slots.extend_from_slice(&self.param_values);
        for v in 0..self.variables {
            let base = v * order;
            for k in 0..order - 1 {
                out[base + k] = x[base + k + 1];
            }
            out[base + order - 1] = self.rhs[v].eval(&slots);
        }
    }
}
