use serde::Serialize;

use super::{CatalogError, FamilyId};
use crate::diffpoly::{sum, DiffExpr, DiffPolyError, RelationSet, Var};
use crate::exactnum::{int, rat, Rational};

/// Which displayed form of a family an [`OdeSystem`] encodes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SystemKind {
    /// A single second-order equation in `y`.
    Scalar,
    /// A first-order system in `(q, p)`.
    Qp,
    /// The first-order system in `(Q, P)` of the fifth family.
    CapQp,
}

impl SystemKind {
    pub fn label(self) -> &'static str {
        match self {
            SystemKind::Scalar => "scalar",
            SystemKind::Qp => "qp",
            SystemKind::CapQp => "QP",
        }
    }
}

/// How the system's parameter symbols are obtained from an equation's
/// parameter vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
enum ParamMap {
    Identity,
    /// `α = 3v₃ + 1`, `β = −2(v₂ − v₁)²`.
    PivScalar,
}

/// An explicit ODE, stored as rewrite rules `x⁽ᵒʳᵈᵉʳ⁾ = rhs`.
///
/// Systems written with `t·x′` on the left carry the denominator `t` in
/// their right-hand sides and have `singular_at_t0` set.
#[derive(Debug, Clone)]
pub struct OdeSystem {
    pub family: FamilyId,
    pub kind: SystemKind,
    pub state: Vec<&'static str>,
    pub order: u8,
    pub param_symbols: Vec<&'static str>,
    pub rhs: Vec<DiffExpr>,
    pub singular_at_t0: bool,
    /// The displayed form this system transcribes.
    pub display: &'static str,
    pub notes: Vec<&'static str>,
    param_map: ParamMap,
}

impl OdeSystem {
    pub fn head(&self, i: usize) -> Var {
        Var::Jet(self.state[i], self.order)
    }

    pub fn relations(&self) -> RelationSet {
        RelationSet::from_rules((0..self.state.len()).map(|i| (self.head(i), self.rhs[i].clone())))
            .expect("catalog systems are triangular")
    }

    /// `x⁽ᵒʳᵈᵉʳ⁾ − rhs` for each state variable.
    pub fn residuals(&self) -> Vec<DiffExpr> {
        (0..self.state.len())
            .map(|i| DiffExpr::var(self.head(i)).sub(&self.rhs[i]))
            .collect()
    }

    /// Values of `param_symbols` for an equation parameter vector.
    pub fn exact_params(&self, v: &[Rational]) -> Vec<Rational> {
        match self.param_map {
            ParamMap::Identity => v.to_vec(),
            ParamMap::PivScalar => {
                let (a, b) = piv_scalar_params(v);
                vec![a, b]
            }
        }
    }

    pub fn numeric_params(&self, v: &[f64]) -> Vec<f64> {
        match self.param_map {
            ParamMap::Identity => v.to_vec(),
            ParamMap::PivScalar => vec![3.0 * v[2] + 1.0, -2.0 * (v[1] - v[0]).powi(2)],
        }
    }

    /// Right-hand sides with parameter symbols replaced by exact values.
    pub fn specialize(&self, values: &[Rational]) -> Result<Vec<DiffExpr>, DiffPolyError> {
        assert_eq!(values.len(), self.param_symbols.len(), "parameter count");
        self.rhs
            .iter()
            .map(|e| {
                self.param_symbols
                    .iter()
                    .zip(values)
                    .try_fold(e.clone(), |acc, (s, x)| {
                        acc.substitute(Var::Param(s), &DiffExpr::constant(x.clone()))
                    })
            })
            .collect()
    }
}

/// `α = 3v₃ + 1`, `β = −2(v₂ − v₁)²`, matching the fourth family's scalar
/// equation to its system.
pub fn piv_scalar_params(v: &[Rational]) -> (Rational, Rational) {
    assert_eq!(v.len(), 3, "PIV has three parameters");
    let alpha = int(3) * &v[2] + int(1);
    let d = &v[1] - &v[0];
    (alpha, int(-2) * &d * &d)
}

fn y(k: u8) -> DiffExpr {
    DiffExpr::jet("y", k)
}

fn q() -> DiffExpr {
    DiffExpr::jet("q", 0)
}

fn p() -> DiffExpr {
    DiffExpr::jet("p", 0)
}

fn cq() -> DiffExpr {
    DiffExpr::jet("Q", 0)
}

fn cp() -> DiffExpr {
    DiffExpr::jet("P", 0)
}

fn t() -> DiffExpr {
    DiffExpr::t()
}

fn v(i: usize) -> DiffExpr {
    DiffExpr::param(["v1", "v2", "v3", "v4"][i - 1])
}

fn c(n: i64) -> DiffExpr {
    DiffExpr::int(n)
}

fn k(n: i64, d: i64) -> DiffExpr {
    DiffExpr::constant(rat(n, d))
}

fn prod(fs: &[DiffExpr]) -> DiffExpr {
    fs.iter().fold(DiffExpr::one(), |acc, f| acc.mul(f))
}

fn over_t(e: DiffExpr) -> DiffExpr {
    e.div(&t()).expect("t is nonzero")
}

/// `y′ − s·(y² + ½t)`.
pub fn riccati_relation(sign: i8) -> DiffExpr {
    let (head, rhs) = riccati_rule(sign);
    DiffExpr::var(head).sub(&rhs)
}

/// The rule `y′ → s·(y² + ½t)`.
///
/// # Panics
///
/// Panics unless `sign` is `1` or `-1`.
pub fn riccati_rule(sign: i8) -> (Var, DiffExpr) {
    assert!(sign == 1 || sign == -1, "sign must be ±1");
    let rhs = y(0).pow(2).add(&t().scale(&rat(1, 2)));
    (Var::Jet("y", 1), rhs.scale(&int(sign.into())))
}

fn scalar(
    family: FamilyId,
    params: Vec<&'static str>,
    rhs: DiffExpr,
    display: &'static str,
    notes: Vec<&'static str>,
    param_map: ParamMap,
) -> OdeSystem {
    OdeSystem {
        family,
        kind: SystemKind::Scalar,
        state: vec!["y"],
        order: 2,
        param_symbols: params,
        rhs: vec![rhs],
        singular_at_t0: false,
        display,
        notes,
        param_map,
    }
}

fn first_order(
    family: FamilyId,
    kind: SystemKind,
    state: [&'static str; 2],
    params: Vec<&'static str>,
    rhs: [DiffExpr; 2],
    singular_at_t0: bool,
    display: &'static str,
) -> OdeSystem {
    OdeSystem {
        family,
        kind,
        state: state.to_vec(),
        order: 1,
        param_symbols: params,
        rhs: rhs.to_vec(),
        singular_at_t0,
        display,
        notes: Vec::new(),
        param_map: ParamMap::Identity,
    }
}

fn pi() -> OdeSystem {
    scalar(
        FamilyId::PI,
        vec![],
        sum(&[c(6).mul(&y(0).pow(2)), t()]),
        "y'' = 6y^2 + t",
        vec!["literature-standard form of the first family; no citation displays it"],
        ParamMap::Identity,
    )
}

fn pii() -> OdeSystem {
    scalar(
        FamilyId::PII,
        vec!["alpha"],
        sum(&[
            c(2).mul(&y(0).pow(3)),
            t().mul(&y(0)),
            DiffExpr::param("alpha"),
        ]),
        "y'' = 2y^3 + ty + \\alpha",
        vec![],
        ParamMap::Identity,
    )
}

fn piii() -> OdeSystem {
    let dq = sum(&[
        prod(&[c(2), q().pow(2), p()]),
        q().pow(2).neg(),
        v(1).mul(&q()).neg(),
        t(),
    ]);
    let dp = sum(&[
        prod(&[c(-2), q(), p().pow(2)]),
        prod(&[c(2), q(), p()]),
        v(1).mul(&p()).neg(),
        k(1, 2).mul(&v(1).add(&v(2))),
    ]);
    first_order(
        FamilyId::PIII,
        SystemKind::Qp,
        ["q", "p"],
        vec!["v1", "v2"],
        [over_t(dq), over_t(dp)],
        true,
        "t q' = 2 q^2 p - q^2 - v_1 q + t; t p' = -2 qp^2 + 2 qp - v_1 p + \\frac{1}{2} (v_1 + v_2)",
    )
}

fn piv_system() -> OdeSystem {
    let dq = sum(&[
        prod(&[c(2), p(), q()]),
        q().pow(2).neg(),
        prod(&[c(-2), t(), q()]),
        c(2).mul(&v(1).sub(&v(2))),
    ]);
    let dp = sum(&[
        prod(&[c(2), p(), q()]),
        p().pow(2).neg(),
        prod(&[c(2), t(), p()]),
        c(2).mul(&v(1).sub(&v(3))),
    ]);
    first_order(
        FamilyId::PIV,
        SystemKind::Qp,
        ["q", "p"],
        vec!["v1", "v2", "v3"],
        [dq, dp],
        false,
        "q' = 2pq - q^2 - 2tq + 2 (v_1 - v_2); p' = 2pq - p^2 + 2tp + 2(v_1 - v_3)",
    )
}

fn piv_scalar() -> OdeSystem {
    let alpha = DiffExpr::param("alpha");
    let beta = DiffExpr::param("beta");
    let yinv = |e: DiffExpr| e.div(&y(0)).expect("y is nonzero");
    let rhs = sum(&[
        yinv(y(1).pow(2).scale(&rat(1, 2))),
        k(3, 2).mul(&y(0).pow(3)),
        prod(&[c(4), t(), y(0).pow(2)]),
        prod(&[c(2), t().pow(2).sub(&alpha), y(0)]),
        yinv(beta),
    ]);
    scalar(
        FamilyId::PIV,
        vec!["alpha", "beta"],
        rhs,
        "y'' = \\frac{1}{2y}(y')^2 + \\frac{3}{2}y^3 + 4tq^2 + 2 (t^2 - \\alpha) y + \\frac{\\beta }{y}",
        vec![
            "the displayed term 4tq^2 is read as 4ty^2",
            "parameters are matched to the system by alpha = 3 v_3 + 1, beta = -2 (v_2 - v_1)^2",
        ],
        ParamMap::PivScalar,
    )
}

fn pv_cap() -> OdeSystem {
    let m = v(1).scale(&int(3)).add(&v(2));
    let n = t().add(&v(1).scale(&int(4)));
    let dq = sum(&[
        prod(&[c(2), cq(), cq().sub(&c(1)).pow(2), cp()]),
        m.mul(&cq().pow(2)),
        n.mul(&cq()).neg(),
        v(1).sub(&v(2)),
    ]);
    let dp = sum(&[
        sum(&[c(-3).mul(&cq().pow(2)), c(4).mul(&cq()), c(-1)]).mul(&cp().pow(2)),
        prod(&[c(-2), m.clone(), cq(), cp()]),
        n.mul(&cp()),
        v(3).sub(&v(1)).mul(&v(4).sub(&v(1))).neg(),
    ]);
    first_order(
        FamilyId::PV,
        SystemKind::CapQp,
        ["Q", "P"],
        vec!["v1", "v2", "v3", "v4"],
        [over_t(dq), over_t(dp)],
        true,
        "t Q' = 2 Q (Q-1)^2 P + (3v_1+ v_2 ) Q^2 -(t+4v_1)Q + v_1 -v_2; tP' = (-3Q^2 +4Q -1) P^2 -2(3v_1 +v_2 ) Q P + (t+4v_1) P - (v_3-v_1)(v_4-v_1)",
    )
}

fn pv_small() -> OdeSystem {
    let m = sum(&[v(1), v(2).neg(), v(3).neg(), v(4)]);
    let dq = sum(&[
        prod(&[c(2), q().pow(2), p()]),
        prod(&[c(-2), q(), p()]),
        t().mul(&q().pow(2)),
        t().mul(&q()).neg(),
        m.mul(&q()),
        v(2).sub(&v(1)),
    ]);
    let dp = sum(&[
        prod(&[c(-2), q(), p().pow(2)]),
        p().pow(2),
        prod(&[c(-2), t(), p(), q()]),
        t().mul(&p()),
        m.mul(&p()).neg(),
        v(3).sub(&v(1)).mul(&t()),
    ]);
    first_order(
        FamilyId::PV,
        SystemKind::Qp,
        ["q", "p"],
        vec!["v1", "v2", "v3", "v4"],
        [over_t(dq), over_t(dp)],
        true,
        "t q' = 2 q^2 p - 2 qp + t q^2 -tq + ( v_1-v_2-v_3+v_4) q + v_2 -v_1; t p' = -2 qp^2 + p^2 -2tpq +tp -(v_1-v_2-v_3+v_4) p + (v_3-v_1)t",
    )
}

/// All cataloged systems of a family; the first is the one used by default.
pub fn ode_systems(family: FamilyId) -> Result<Vec<OdeSystem>, CatalogError> {
    Ok(match family {
        FamilyId::PI => vec![pi()],
        FamilyId::PII => vec![pii()],
        FamilyId::PIII => vec![piii()],
        FamilyId::PIV => vec![piv_system(), piv_scalar()],
        FamilyId::PV => vec![pv_small(), pv_cap()],
        FamilyId::PVI => return Err(CatalogError::UnsupportedFamily(family)),
    })
}

/// The default system of a family, or the variant with the given label
/// (`scalar`, `qp`, `QP`).
pub fn ode_system(family: FamilyId, variant: Option<&str>) -> Result<OdeSystem, CatalogError> {
    let systems = ode_systems(family)?;
    match variant {
        None => Ok(systems.into_iter().next().expect("nonempty")),
        Some(label) => systems
            .into_iter()
            .find(|s| s.kind.label() == label)
            .ok_or_else(|| CatalogError::UnknownVariant {
                family,
                variant: label.to_string(),
            }),
    }
}
