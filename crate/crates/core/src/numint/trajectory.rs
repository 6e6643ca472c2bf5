use std::collections::BTreeMap;
use std::io::Write;

use serde::Serialize;

use crate::catalog::{ode_system, EquationId, FamilyId};

use super::{NumIntError, NumericAssignment, VectorField, BLOWUP_THRESHOLD};

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum TrajectoryStatus {
    Completed,
    /// The state magnitude left the threshold during the step ending at `t`.
    Blowup { t: f64 },
    /// The vector field became non-finite during the step ending at `t`.
    SingularT { t: f64 },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Sample {
    pub t: f64,
    pub state: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Trajectory {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub family: Option<FamilyId>,
    pub system: String,
    pub state_names: Vec<String>,
    pub params: BTreeMap<String, f64>,
    pub step: f64,
    pub samples: Vec<Sample>,
    pub status: TrajectoryStatus,
}

impl Trajectory {
    /// CSV with header `t` followed by the state names.
    pub fn write_csv<W: Write>(&self, out: W) -> Result<(), csv::Error> {
        let mut w = csv::Writer::from_writer(out);
        let mut header = vec!["t".to_string()];
        header.extend(self.state_names.iter().cloned());
        w.write_record(&header)?;
        for s in &self.samples {
            let mut row = vec![s.t.to_string()];
            row.extend(s.state.iter().map(f64::to_string));
            w.write_record(&row)?;
        }
        w.flush()?;
        Ok(())
    }

    pub fn last(&self) -> Option<&Sample> {
        self.samples.last()
    }

    /// Linear interpolation of the state at `t` inside the sampled range.
    pub fn state_at(&self, t: f64) -> Option<Vec<f64>> {
        let i = self.samples.windows(2).position(|w| {
            let (a, b) = (w[0].t, w[1].t);
            (a <= t && t <= b) || (b <= t && t <= a)
        })?;
        let (a, b) = (&self.samples[i], &self.samples[i + 1]);
        let s = (t - a.t) / (b.t - a.t);
        Some(a.state.iter().zip(&b.state).map(|(x, y)| x + s * (y - x)).collect())
    }
}

fn rk4_step(f: &VectorField, t: f64, x: &[f64], h: f64) -> Vec<f64> {
    let n = x.len();
    let mut k1 = vec![0.0; n];
    let mut k2 = vec![0.0; n];
    let mut k3 = vec![0.0; n];
    let mut k4 = vec![0.0; n];
    let shifted = |k: &[f64], c: f64| -> Vec<f64> { x.iter().zip(k).map(|(a, b)| a + c * b).collect() };
    f.eval(t, x, &mut k1);
    f.eval(t + h / 2.0, &shifted(&k1, h / 2.0), &mut k2);
    f.eval(t + h / 2.0, &shifted(&k2, h / 2.0), &mut k3);
    f.eval(t + h, &shifted(&k3, h), &mut k4);
    (0..n)
        .map(|i| x[i] + h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]))
        .collect()
}

/// Classical RK4 from `t0` towards `t1` (either direction); the final step
/// is shortened to land on `t1`.
pub fn integrate_field(
    field: &VectorField,
    initial: &[f64],
    t0: f64,
    t1: f64,
    step: f64,
) -> Result<Trajectory, NumIntError> {
    if !(step.is_finite() && step > 0.0) {
        return Err(NumIntError::BadStep(step));
    }
    if initial.len() != field.dimension() {
        return Err(NumIntError::StateDimension {
            expected: field.dimension(),
            got: initial.len(),
        });
    }
    if field.singular_at_t0 && t0.min(t1) <= 0.0 && 0.0 <= t0.max(t1) {
        return Err(NumIntError::SingularT { t0, t1 });
    }
    let span = (t1 - t0).abs();
    let dir = if t1 >= t0 { 1.0 } else { -1.0 };
    let steps = (span / step - 1e-9).ceil().max(0.0) as usize;
    let mut samples = vec![Sample { t: t0, state: initial.to_vec() }];
    let mut status = TrajectoryStatus::Completed;
    let mut x = initial.to_vec();
    for i in 0..steps {
        let t = t0 + dir * step * i as f64;
        let t_next = if i + 1 == steps { t1 } else { t0 + dir * step * (i + 1) as f64 };
        let next = rk4_step(field, t, &x, t_next - t);
        if next.iter().any(|v| !v.is_finite()) {
            status = if next.iter().any(|v| v.is_nan()) {
                TrajectoryStatus::SingularT { t: t_next }
            } else {
                TrajectoryStatus::Blowup { t: t_next }
            };
            break;
        }
        if next.iter().any(|v| v.abs() > BLOWUP_THRESHOLD) {
            status = TrajectoryStatus::Blowup { t: t_next };
            break;
        }
        x = next;
        samples.push(Sample { t: t_next, state: x.clone() });
    }
    Ok(Trajectory {
        family: field.family,
        system: field.label.clone(),
        state_names: field.state_names.clone(),
        params: field.params.clone(),
        step,
        samples,
        status,
    })
}

/// Integrates the cataloged system `variant` (default: the first listed)
/// of `eq`'s family.
pub fn integrate(
    eq: &EquationId,
    assign: &NumericAssignment,
    variant: Option<&str>,
    initial: &[f64],
    t0: f64,
    t1: f64,
    step: f64,
) -> Result<Trajectory, NumIntError> {
    if eq.family() == FamilyId::PVI {
        return Err(NumIntError::UnsupportedFamily(FamilyId::PVI));
    }
    let system = ode_system(eq.family(), variant)?;
    let values = system.numeric_params(&assign.evaluate(eq)?);
    let values: Vec<f64> = system
        .param_symbols
        .iter()
        .zip(values)
        .map(|(s, x)| assign.params().get(*s).copied().unwrap_or(x))
        .collect();
    let field = VectorField::from_system(&system, &values)?;
    integrate_field(&field, initial, t0, t1, step)
}
