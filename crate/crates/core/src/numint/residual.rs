use serde::Serialize;

use crate::catalog::{ode_system, EquationId};

use super::{NumIntError, Trajectory, VectorField};

/// Order of the finite-difference derivative used by [`residual_norm`].
pub const STENCIL_ORDER: u32 = 4;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ResidualNorm {
    /// `max |D x − f(t, x)|` over interior samples; 0 when none qualify.
    pub value: f64,
    pub discretization_order: u32,
    pub samples_used: usize,
    /// Set when no sample had a full uniform stencil.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub warning: Option<String>,
}

/// Residual against an explicit field, using the five-point central
/// difference `(x₋₂ − 8x₋₁ + 8x₁ − x₂) / 12h` on uniformly spaced samples.
pub fn residual_norm_field(traj: &Trajectory, field: &VectorField) -> ResidualNorm {
    let s = &traj.samples;
    let n = field.dimension();
    let mut f = vec![0.0; n];
    let mut value: f64 = 0.0;
    let mut used = 0;
    for i in 2..s.len().saturating_sub(2) {
        let h = s[i + 1].t - s[i].t;
        let uniform = (-2..2).all(|k: isize| {
            let j = (i as isize + k) as usize;
            ((s[j + 1].t - s[j].t) - h).abs() <= 1e-9 * h.abs()
        });
        if !uniform {
            continue;
        }
        field.eval(s[i].t, &s[i].state, &mut f);
        for c in 0..n {
            let d = (s[i - 2].state[c] - 8.0 * s[i - 1].state[c] + 8.0 * s[i + 1].state[c] - s[i + 2].state[c]) / (12.0 * h);
            value = value.max((d - f[c]).abs());
        }
        used += 1;
    }
    ResidualNorm {
        value,
        discretization_order: STENCIL_ORDER,
        samples_used: used,
        warning: (used == 0).then(|| "no sample has a full uniform stencil; residual is vacuous".to_string()),
    }
}

/// Residual of a trajectory against its family's cataloged system.
pub fn residual_norm(traj: &Trajectory, eq: &EquationId) -> Result<ResidualNorm, NumIntError> {
    if traj.family != Some(eq.family()) {
        return Err(NumIntError::FamilyMismatch {
            trajectory: traj.system.clone(),
            equation: eq.to_string(),
        });
    }
    let variant = traj.system.rsplit('/').next();
    let system = ode_system(eq.family(), variant)?;
    let values: Vec<f64> = system
        .param_symbols
        .iter()
        .map(|p| traj.params.get(*p).copied().unwrap_or(f64::NAN))
        .collect();
    let field = VectorField::from_system(&system, &values)?;
    Ok(residual_norm_field(traj, &field))
}
