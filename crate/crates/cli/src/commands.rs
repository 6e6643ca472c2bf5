use std::fs::File;
use std::io::BufWriter;
use std::path::Path;

use painleve_core::catalog::{EquationId, FamilyId};
use painleve_core::classify::{classify, CitedClaim, ClassificationReport, Count};
use painleve_core::diffpoly::verify::{verify_pv_change_of_variables, verify_riccati, RICCATI_SIGN_NOTE};
use painleve_core::exactnum::{atom_environment, parse_param_list, ParamValue, TriBool};
use painleve_core::numint::{integrate, residual_norm, NumericAssignment};
use painleve_core::weyl::{
    cross_family_verdict, orbit_decide_with_bound, verify_group_relation, AffineMap, Orthogonality, Word,
};
use serde_json::json;

use crate::args::{
    AtomsArgs, ClassifyArgs, Command, IntegrateArgs, OrbitArgs, OrthogonalArgs, TrajectoryFormat, VerifyArgs,
    VerifyTarget,
};
use crate::error::CliError;
use crate::response::{to_value, Response, Verdict};

/// Whether the primary verdict of a successful query was determined.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Determination {
    Determined,
    Undetermined,
}

pub fn execute(cmd: &Command, resp: &mut Response) -> Result<Determination, CliError> {
    match cmd {
        Command::Classify(a) => classify_cmd(a, resp),
        Command::Orbit(a) => orbit_cmd(a, resp),
        Command::Orthogonal(a) => orthogonal_cmd(a, resp),
        Command::Verify(a) => verify_cmd(a, resp),
        Command::Integrate(a) => integrate_cmd(a, resp),
        Command::Atoms(a) => atoms_cmd(a, resp),
    }
}

fn family(flag: &'static str, text: &str) -> Result<FamilyId, CliError> {
    text.parse().map_err(|source| CliError::Family { flag, source })
}

fn params(flag: &'static str, text: &str) -> Result<Vec<ParamValue>, CliError> {
    parse_param_list(text).map_err(|source| CliError::Param {
        flag,
        text: text.to_string(),
        source,
    })
}

fn equation(family_flag: &'static str, f: &str, params_flag: &'static str, p: &str) -> Result<EquationId, CliError> {
    let fam = family(family_flag, f)?;
    let values = params(params_flag, p)?;
    EquationId::new(fam, values.clone()).map_err(|source| CliError::Equation {
        flag: params_flag,
        hint: sum_zero_hint(fam, &values),
        source: Box::new(source),
    })
}

/// A corrected last coordinate when only the Σ = 0 constraint fails.
fn sum_zero_hint(fam: FamilyId, values: &[ParamValue]) -> Option<String> {
    if !matches!(fam, FamilyId::PIV | FamilyId::PV) || values.len() != fam.arity() {
        return None;
    }
    let total = values.iter().fold(ParamValue::zero(), |acc, x| &acc + x);
    if total.is_zero() {
        return None;
    }
    let last = values.last().expect("arity is positive");
    Some(format!("set the last parameter to {} to satisfy the constraint", last - &total))
}

fn find(r: &ClassificationReport, pred: impl Fn(&CitedClaim) -> bool) -> Option<&CitedClaim> {
    r.citations.iter().find(|c| pred(c))
}

fn degree_source(r: &ClassificationReport) -> Option<&CitedClaim> {
    find(r, |c| c.claim == "Morley degree of the stratum")
        .or_else(|| find(r, |c| c.claim == "strongly minimal off the exceptional strata"))
}

fn classify_cmd(a: &ClassifyArgs, resp: &mut Response) -> Result<Determination, CliError> {
    let eq = equation("--family", &a.family, "--params", &a.params)?;
    let r = classify(&eq);

    resp.verdicts.push(Verdict::cited_id("morley_rank", r.rank, "rank-one"));
    let degree = match (r.degree, degree_source(&r)) {
        (Count::Known(_), Some(c)) => Verdict::cited("morley_degree", r.degree, c.source),
        _ => Verdict::open("morley_degree", r.degree, Vec::new()),
    };
    resp.verdicts.push(degree);
    let sm = match (r.strongly_minimal, degree_source(&r)) {
        (TriBool::Unknown, _) | (_, None) => Verdict::open("strongly_minimal", r.strongly_minimal, Vec::new()),
        (_, Some(c)) => Verdict::cited("strongly_minimal", r.strongly_minimal, c.source),
    };
    resp.verdicts.push(sm);
    let alg = match (r.algebraic_solutions, find(&r, |c| c.claim.contains("algebraic solution"))) {
        (Count::Known(_), Some(c)) => Verdict::cited("algebraic_solutions", r.algebraic_solutions, c.source),
        _ => Verdict::open("algebraic_solutions", r.algebraic_solutions, Vec::new()),
    };
    resp.verdicts.push(alg);
    let triv = match (r.geometrically_trivial, find(&r, |c| c.claim.starts_with("geometric triviality"))) {
        (TriBool::Yes, Some(c)) => Verdict::cited("geometrically_trivial", r.geometrically_trivial, c.source),
        _ => Verdict::open("geometrically_trivial", r.geometrically_trivial, Vec::new()),
    };
    resp.verdicts.push(triv);

    resp.citations = r.citations.clone();
    resp.notes = r.notes.clone();
    resp.ambiguities = r.ambiguities.clone();
    resp.result = Some(to_value(&r));
    Ok(match r.degree {
        Count::Known(_) => Determination::Determined,
        Count::Unknown => Determination::Undetermined,
    })
}

fn orbit_cmd(a: &OrbitArgs, resp: &mut Response) -> Result<Determination, CliError> {
    let fam = family("--family", &a.family)?;
    let v = params("--v", &a.v)?;
    let w = params("--w", &a.w)?;
    for (flag, p) in [("--v", &v), ("--w", &w)] {
        EquationId::new(fam, p.clone()).map_err(|source| CliError::Equation {
            flag,
            hint: sum_zero_hint(fam, p),
            source: Box::new(source),
        })?;
    }
    let r = orbit_decide_with_bound(fam, &v, &w, a.bound)?;
    let verdict = match r.related {
        TriBool::Unknown => Verdict::open("related", r.related, Vec::new()),
        _ => Verdict::cited("related", r.related, r.citation.source),
    };
    resp.verdicts.push(verdict);
    resp.citations.push(r.citation.clone());
    resp.notes = r.notes.clone();
    resp.result = Some(to_value(&r));
    Ok(match r.related {
        TriBool::Unknown => Determination::Undetermined,
        _ => Determination::Determined,
    })
}

fn orthogonal_cmd(a: &OrthogonalArgs, resp: &mut Response) -> Result<Determination, CliError> {
    let left = equation("--left-family", &a.left_family, "--left-params", &a.left_params)?;
    let right = equation("--right-family", &a.right_family, "--right-params", &a.right_params)?;
    let r = cross_family_verdict(&left, &right);
    let verdict = match &r.citation {
        Some(c) => Verdict::cited("orthogonality", r.verdict, c.source),
        None => Verdict::open("orthogonality", r.verdict, r.open_questions.clone()),
    };
    resp.verdicts.push(verdict);
    resp.citations.extend(r.citation.clone());
    resp.notes.push(r.applicability.clone());
    if let Some(orbit) = &r.orbit {
        resp.notes.extend(orbit.notes.iter().cloned());
    }
    resp.result = Some(to_value(&r));
    Ok(match r.verdict {
        Orthogonality::Open => Determination::Undetermined,
        _ => Determination::Determined,
    })
}

fn verify_cmd(a: &VerifyArgs, resp: &mut Response) -> Result<Determination, CliError> {
    match a.target {
        VerifyTarget::Riccati => {
            let signs: Vec<i8> = match a.sign.as_deref() {
                Some("-1") => vec![-1],
                Some(_) => vec![1],
                None => vec![1, -1],
            };
            let mut reports = Vec::new();
            for s in signs {
                let r = verify_riccati(s)?;
                let subject = format!("alpha for which y' = {}(y^2 + t/2) solves the second family", sign_str(s));
                resp.verdicts.push(Verdict::cited_id(&subject, r.alpha.to_string(), "p2-riccati"));
                reports.push(r);
            }
            resp.citations.push(CitedClaim::new("Riccati subvariety of the second family", "p2-riccati"));
            resp.ambiguities.push(RICCATI_SIGN_NOTE.to_string());
            resp.result = Some(json!({ "reports": reports }));
        }
        VerifyTarget::PvChange => {
            let r = verify_pv_change_of_variables()?;
            resp.verdicts.push(Verdict::cited_id("first transformed equation holds", r.identity1, "pv-change"));
            resp.verdicts.push(Verdict::cited_id("second transformed equation holds", r.identity2, "pv-change"));
            resp.citations.push(CitedClaim::new("change of variables for the fifth family", "pv-change"));
            resp.notes.push(format!("identities are checked on the hyperplane {}", r.hyperplane));
            resp.notes.extend(r.excluded_loci.iter().map(|l| format!("excluded locus: {l}")));
            resp.result = Some(to_value(&r));
        }
        VerifyTarget::GroupRelations => {
            let cases = [
                (FamilyId::PIV, "t-^-1 s1 s2 s1 t-", "(v1, v3 + 1, v2 - 1)", "p4-s0"),
                (FamilyId::PV, "t-^-1 s3 s1 s2 s1 s3 t-", "(v1, v4 + 1, v3, v2 - 1)", "p5-composite"),
            ];
            let mut relations = Vec::new();
            for (fam, word, image, id) in cases {
                let word: Word = word.parse()?;
                let target = AffineMap::parse_image(fam, fam.arity(), image)?;
                let holds = verify_group_relation(fam, &word, &target)?;
                let subject = format!("{fam}: {word} acts as v ↦ {image}");
                resp.verdicts.push(Verdict::cited_id(&subject, holds, id));
                resp.citations.push(CitedClaim::new("composite transformation", id));
                relations.push(json!({ "family": fam, "word": word, "image": image, "holds": holds }));
            }
            resp.result = Some(json!({ "relations": relations }));
        }
    }
    Ok(Determination::Determined)
}

fn sign_str(s: i8) -> &'static str {
    if s > 0 {
        "+"
    } else {
        "-"
    }
}

fn floats(flag: &'static str, text: &str) -> Result<Vec<f64>, CliError> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<f64>().map_err(|_| CliError::Usage(format!("{flag}: {s:?} is not a number")))
        })
        .collect()
}

fn integrate_cmd(a: &IntegrateArgs, resp: &mut Response) -> Result<Determination, CliError> {
    let eq = equation("--family", &a.family, "--params", &a.params)?;
    let assign = NumericAssignment::parse(&a.assign)?;
    let initial = floats("--initial", &a.initial)?;
    let traj = integrate(&eq, &assign, a.variant.as_deref(), &initial, a.t0, a.t1, a.step)?;
    let residual = residual_norm(&traj, &eq)?;
    if let Some(w) = &residual.warning {
        resp.notes.push(w.clone());
    }
    let mut result = json!({
        "system": traj.system,
        "state_names": traj.state_names,
        "status": traj.status,
        "samples": traj.samples.len(),
        "final": traj.last(),
        "residual": residual,
    });
    match &a.output {
        Some(path) => {
            write_trajectory(path, a.format, &traj)?;
            result["output"] = json!({ "path": path, "format": a.format });
        }
        None => result["trajectory"] = to_value(&traj),
    }
    resp.result = Some(result);
    Ok(Determination::Determined)
}

fn write_trajectory(
    path: &Path,
    format: TrajectoryFormat,
    traj: &painleve_core::numint::Trajectory,
) -> Result<(), CliError> {
    let io = |source| CliError::Io {
        path: path.to_path_buf(),
        source,
    };
    let file = BufWriter::new(File::create(path).map_err(io)?);
    match format {
        TrajectoryFormat::Csv => traj.write_csv(file).map_err(|e| io(e.into())),
        TrajectoryFormat::Json => serde_json::to_writer_pretty(file, traj).map_err(|e| io(e.into())),
    }
}

fn atoms_cmd(a: &AtomsArgs, resp: &mut Response) -> Result<Determination, CliError> {
    let mut values = Vec::new();
    for p in &a.params {
        values.extend(params("--params", p)?);
    }
    let atoms: Vec<_> = atom_environment(&values)
        .into_iter()
        .map(|atom| json!({ "name": atom.name(), "kind": atom.kind }))
        .collect();
    resp.result = Some(json!({
        "atoms": atoms,
        "values": values,
        "transcendence_degree": painleve_core::exactnum::transcendence_degree(&values),
    }));
    Ok(Determination::Determined)
}
