use qgrass::bijection::{alpha_beta_bijection, alpha_set};
use qgrass::cluster::{
    cc_map_a11, cc_k_map, cluster_var_a11, cluster_var_a21, in_cluster, s_n, u_n_geometric,
    u_n_recurrence, z_n_geometric, z_n_recurrence, CCInput,
};
use qgrass::fq::{count_points, FqMatrixRep};
use qgrass::hom::{cell_dimension, cell_dimension_recursive};
use qgrass::invariants::{
    dimension, euler_char, euler_char_sum, poincare, poincare_regular, stratum_euler_exact,
    strata, GrassId,
};
use qgrass::kron::{k_invariant, tangent_dim};
use qgrass::quiver::{enumerate_fixed_points, quotient_quiver};
use qgrass::{DimVector, GradedPoly, Indecomposable, Kind, LaurentPoly, RepDescriptor};
use serde_json::{json, Map, Value};

use crate::report::{graded_json, joined, laurent_json, Report, Verdict};
use crate::{Algebra, Cli, ClusterChoice, ClusterCommand, Command, Target};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] qgrass::Error),
    #[error("n = {n} exceeds --max-rank {max}")]
    RankBound { n: usize, max: usize },
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::RankBound { .. } => 3,
            CliError::Usage(_) => 2,
            CliError::Core(e) => match e {
                qgrass::Error::ResourceBound(_) | qgrass::Error::IndexBound { .. } => 3,
                qgrass::Error::InexactDivision(_) => 1,
                _ => 2,
            },
        }
    }
}

type Outcome = Result<Report, CliError>;

fn check_rank(cli: &Cli, n: usize) -> Result<(), CliError> {
    if n > cli.max_rank {
        Err(CliError::RankBound { n, max: cli.max_rank })
    } else {
        Ok(())
    }
}

fn indecomposable(kind: Kind, n: usize) -> Result<Indecomposable, CliError> {
    Ok(Indecomposable::new(kind, n)?)
}

fn target_params(t: &Target) -> Map<String, Value> {
    let mut p = Map::new();
    p.insert("type".into(), json!(t.kind.letter().to_string()));
    p.insert("n".into(), json!(t.n));
    p.insert("e".into(), json!([t.e.d1, t.e.d2]));
    p
}

fn regular_params(n: usize, e: DimVector) -> Map<String, Value> {
    let mut p = Map::new();
    p.insert("n".into(), json!(n));
    p.insert("e".into(), json!([e.d1, e.d2]));
    p
}

pub fn dispatch(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Poincare(t) => cmd_poincare(cli, t),
        Command::Euler { kind, n, e, rep } => cmd_euler(cli, *kind, *n, *e, rep.as_ref()),
        Command::Cells(t) => cmd_cells(cli, t.n, t.e),
        Command::FixedPoints(t) => cmd_fixed_points(cli, t),
        Command::Strata(t) => cmd_strata(cli, t.n, t.e),
        Command::CountFq { target, q } => cmd_count_fq(cli, target, *q),
        Command::Cluster(c) => cmd_cluster(cli, c),
        Command::Selftest => cmd_selftest(),
    }
}

fn cmd_poincare(cli: &Cli, t: &Target) -> Outcome {
    check_rank(cli, t.n)?;
    let m = indecomposable(t.kind, t.n)?;
    let p = poincare(&GrassId::new(m, t.e));
    let mut r = Report::new("poincare", target_params(t));
    let chi = p.eval_one();
    let dim = p.degree();
    let mut result = graded_json(&p);
    result["euler_characteristic"] = json!(chi);
    result["dimension"] = json!(dim);
    r.result = result;
    r.line(format!("Gr_{}({m})", t.e));
    r.line(format!("P = {p}"));
    r.line(format!("coefficients = {:?}", p.coeffs()));
    r.line(format!("euler characteristic = {chi}"));
    match dim {
        Some(d) => r.line(format!("dimension = {d}")),
        None => r.line("empty variety"),
    }
    r.table(
        &["degree", "betti"],
        p.coeffs().iter().enumerate().map(|(i, c)| vec![(2 * i).to_string(), c.to_string()]).collect(),
    );
    Ok(r)
}

fn cmd_euler(
    cli: &Cli,
    kind: Option<Kind>,
    n: Option<usize>,
    e: DimVector,
    rep: Option<&RepDescriptor>,
) -> Outcome {
    let mut params = Map::new();
    let (label, chi, checks) = match (rep, kind, n) {
        (Some(rep), _, _) => {
            for s in rep.summands() {
                check_rank(cli, s.rank())?;
            }
            params.insert("rep".into(), json!(rep.to_string()));
            (rep.to_string(), euler_char_sum(rep, e), None)
        }
        (None, Some(kind), Some(n)) => {
            check_rank(cli, n)?;
            let m = indecomposable(kind, n)?;
            params.insert("type".into(), json!(kind.letter().to_string()));
            params.insert("n".into(), json!(n));
            let id = GrassId::new(m, e);
            let fixed = enumerate_fixed_points(m, e).len() as u64;
            let at_one = poincare(&id).eval_one();
            (m.to_string(), euler_char(&id), Some((fixed, at_one)))
        }
        _ => return Err(CliError::Usage("give either --rep or both -t and -n".into())),
    };
    params.insert("e".into(), json!([e.d1, e.d2]));
    let mut r = Report::new("euler", params);
    r.line(format!("chi(Gr_{e}({label})) = {chi}"));
    let mut result = json!({ "euler_characteristic": chi });
    if let Some((fixed, at_one)) = checks {
        result["fixed_points"] = json!(fixed);
        result["poincare_at_one"] = json!(at_one);
        r.line(format!("fixed points = {fixed}, P(1) = {at_one}"));
        if fixed != chi || at_one != chi {
            r.verdict = Verdict::Violated;
            r.line("MISMATCH");
        }
    }
    r.result = result;
    Ok(r)
}

fn cmd_cells(cli: &Cli, n: usize, e: DimVector) -> Outcome {
    check_rank(cli, n)?;
    let m = Indecomposable::new(Kind::Regular, n)?;
    let fps = enumerate_fixed_points(m, e);
    let mut rows = Vec::new();
    let mut json_rows = Vec::new();
    let mut hom_dims = Vec::new();
    let mut agree = true;
    for fp in &fps {
        let via_hom = cell_dimension(m, fp)?;
        let via_rec = cell_dimension_recursive(n, &fp.summands)?;
        agree &= via_hom == via_rec;
        hom_dims.push(via_hom);
        let summands: Vec<String> = fp.summands.iter().map(|s| s.to_string()).collect();
        rows.push(vec![
            joined(&fp.s1),
            joined(&fp.s2),
            summands.join(" + "),
            via_hom.to_string(),
            via_rec.to_string(),
        ]);
        json_rows.push(json!({
            "s1": fp.s1,
            "s2": fp.s2,
            "summands": summands,
            "dim_hom_plus": via_hom,
            "dim_recursive": via_rec,
        }));
    }
    let assembled = GradedPoly::from_cells(hom_dims);
    let closed = poincare_regular(n, e);
    let matches = assembled == closed;
    let mut r = Report::new("cells", regular_params(n, e));
    r.line(format!("fixed points of Gr_{e}(R_{n}): {}", fps.len()));
    r.line(format!("{:<14} {:<14} {:<24} {:>6} {:>6}", "S1", "S2", "summands", "Hom+", "rec"));
    for row in &rows {
        r.line(format!("{:<14} {:<14} {:<24} {:>6} {:>6}", row[0], row[1], row[2], row[3], row[4]));
    }
    r.line(format!("assembled P = {assembled}"));
    r.line(format!("closed form = {closed}"));
    r.line(if agree && matches { "AGREE" } else { "MISMATCH" });
    if !(agree && matches) {
        r.verdict = Verdict::Violated;
    }
    r.result = json!({
        "cells": json_rows,
        "assembled": graded_json(&assembled),
        "closed_form": graded_json(&closed),
        "dimensions_agree": agree,
        "matches_closed_form": matches,
    });
    r.table(&["s1", "s2", "summands", "dim_hom_plus", "dim_recursive"], rows);
    Ok(r)
}

fn cmd_fixed_points(cli: &Cli, t: &Target) -> Outcome {
    check_rank(cli, t.n)?;
    let m = indecomposable(t.kind, t.n)?;
    let fps = enumerate_fixed_points(m, t.e);
    let regular = t.kind == Kind::Regular;
    let mut rows = Vec::new();
    let mut json_rows = Vec::new();
    for fp in &fps {
        let quotient = quotient_quiver(m, fp)?.descriptor()?;
        let mut row = vec![
            joined(&fp.s1),
            joined(&fp.s2),
            fp.descriptor().to_string(),
            quotient.to_string(),
        ];
        let mut entry = json!({
            "s1": fp.s1,
            "s2": fp.s2,
            "sub": fp.descriptor().to_string(),
            "quotient": quotient.to_string(),
        });
        if regular {
            let k = k_invariant(&fp.descriptor(), &quotient)?;
            let tangent = tangent_dim(t.n, t.e, k)?;
            row.push(k.to_string());
            row.push(tangent.to_string());
            entry["k_invariant"] = json!(k);
            entry["tangent_dim"] = json!(tangent);
        }
        rows.push(row);
        json_rows.push(entry);
    }
    let mut r = Report::new("fixed-points", target_params(t));
    r.line(format!("fixed points of Gr_{}({m}): {}", t.e, fps.len()));
    for row in &rows {
        r.line(row.join(" | "));
    }
    r.result = json!({ "count": fps.len(), "fixed_points": json_rows });
    let mut header = vec!["s1", "s2", "sub", "quotient"];
    if regular {
        header.extend(["k_invariant", "tangent_dim"]);
    }
    r.table(&header, rows);
    Ok(r)
}

fn cmd_strata(cli: &Cli, n: usize, e: DimVector) -> Outcome {
    check_rank(cli, n)?;
    let mut rows = Vec::new();
    let mut json_rows = Vec::new();
    let strata = strata(n, e);
    for s in &strata {
        let exact = stratum_euler_exact(n, e, s.k);
        let p = s.poincare();
        rows.push(vec![
            s.k.to_string(),
            s.n.to_string(),
            format!("{},{}", s.e.d1, s.e.d2),
            s.euler_char().to_string(),
            exact.to_string(),
            p.to_string(),
        ]);
        json_rows.push(json!({
            "k": s.k,
            "n": s.n,
            "e": [s.e.d1, s.e.d2],
            "euler_characteristic": s.euler_char(),
            "exact_euler_characteristic": exact,
            "poincare": graded_json(&p),
        }));
    }
    let mut r = Report::new("strata", regular_params(n, e));
    match dimension(n, e) {
        Ok(d) => r.line(format!("Gr_{e}(R_{n}) has dimension {d} and {} strata", strata.len())),
        Err(_) => r.line(format!("Gr_{e}(R_{n}) is empty")),
    }
    for row in &rows {
        r.line(format!(
            "X_{} = Gr_({})(R_{}): chi = {}, chi(X_k \\ X_(k+1)) = {}, P = {}",
            row[0], row[2], row[1], row[3], row[4], row[5]
        ));
    }
    r.result = json!({ "strata": json_rows });
    r.table(&["k", "n", "e", "euler_characteristic", "exact_euler_characteristic", "poincare"], rows);
    Ok(r)
}

fn cmd_count_fq(cli: &Cli, t: &Target, q: u32) -> Outcome {
    check_rank(cli, t.n)?;
    let m = indecomposable(t.kind, t.n)?;
    let rep = FqMatrixRep::from_indecomposable(m, q)?;
    let count = count_points(&rep, t.e)?;
    let expected = poincare(&GrassId::new(m, t.e)).eval(q as u64);
    let matches = count == expected;
    let mut params = target_params(t);
    params.insert("q".into(), json!(q));
    let mut r = Report::new("count-fq", params);
    let verdict = if matches { "MATCH" } else { "MISMATCH" };
    r.line(format!("#Gr_{}({m})(F_{q}) = {count}", t.e));
    r.line(format!("P({q}) = {expected}"));
    r.line(verdict);
    if !matches {
        r.verdict = Verdict::Violated;
    }
    r.result = json!({
        "count": count.to_string(),
        "poincare_at_q": expected.to_string(),
        "verdict": verdict,
    });
    Ok(r)
}

fn rewrite(p: &LaurentPoly, choice: &ClusterChoice, r: &mut Report, result: &mut Value) -> Result<(), CliError> {
    if let Some(k) = choice.cluster {
        let q = in_cluster(p, k)?;
        r.line(format!("in the cluster starting at x_{k}: {q}"));
        r.line(format!("nonnegative: {}", q.is_nonnegative()));
        result["in_cluster"] = json!({
            "start": k,
            "value": laurent_json(&q),
            "nonnegative": q.is_nonnegative(),
        });
    }
    Ok(())
}

fn compare(
    name: &str,
    n: usize,
    recurrence: LaurentPoly,
    geometric: LaurentPoly,
    choice: &ClusterChoice,
) -> Outcome {
    let mut params = Map::new();
    params.insert("n".into(), json!(n));
    if let Some(k) = choice.cluster {
        params.insert("cluster".into(), json!(k));
    }
    let mut r = Report::new(&format!("cluster {name}"), params);
    let equal = recurrence == geometric;
    let verdict = if equal { "EQUAL" } else { "DIFFERENT" };
    r.line(recurrence.to_string());
    r.line(format!("recurrence {verdict} geometric"));
    if !equal {
        r.line(format!("geometric: {geometric}"));
        r.verdict = Verdict::Violated;
    }
    let mut result = json!({
        "recurrence": laurent_json(&recurrence),
        "geometric": laurent_json(&geometric),
        "verdict": verdict,
    });
    rewrite(&recurrence, choice, &mut r, &mut result)?;
    r.result = result;
    Ok(r)
}

fn cmd_cluster(cli: &Cli, c: &ClusterCommand) -> Outcome {
    match c {
        ClusterCommand::Var { k, algebra, choice } => {
            let p = match algebra {
                Algebra::Kronecker => cluster_var_a11(*k)?,
                Algebra::AffineA2 => cluster_var_a21(*k)?,
            };
            let mut params = Map::new();
            params.insert("k".into(), json!(k));
            params.insert(
                "algebra".into(),
                json!(match algebra {
                    Algebra::Kronecker => "kronecker",
                    Algebra::AffineA2 => "affine-a2",
                }),
            );
            let mut r = Report::new("cluster var", params);
            r.line(p.to_string());
            let mut result = laurent_json(&p);
            rewrite(&p, choice, &mut r, &mut result)?;
            r.result = result;
            Ok(r)
        }
        ClusterCommand::Z { n, choice } => {
            check_rank(cli, *n)?;
            compare("z", *n, z_n_recurrence(*n)?, z_n_geometric(*n)?, choice)
        }
        ClusterCommand::U { n, choice } => {
            check_rank(cli, *n)?;
            compare("u", *n, u_n_recurrence(*n)?, u_n_geometric(*n)?, choice)
        }
        ClusterCommand::S { n, choice } => {
            check_rank(cli, *n)?;
            let p = s_n(*n as i64);
            let mut params = Map::new();
            params.insert("n".into(), json!(n));
            let mut r = Report::new("cluster s", params);
            r.line(p.to_string());
            let mut result = laurent_json(&p);
            rewrite(&p, choice, &mut r, &mut result)?;
            r.result = result;
            Ok(r)
        }
        ClusterCommand::Cc { kind, n, rep, stratum } => cmd_cc(cli, *kind, *n, rep.as_ref(), *stratum),
    }
}

fn cmd_cc(
    cli: &Cli,
    kind: Option<Kind>,
    n: Option<usize>,
    rep: Option<&RepDescriptor>,
    stratum: Option<usize>,
) -> Outcome {
    let m: RepDescriptor = match (rep, kind, n) {
        (Some(rep), _, _) => rep.clone(),
        (None, Some(kind), Some(n)) => indecomposable(kind, n)?.into(),
        _ => return Err(CliError::Usage("give either --rep or both -t and -n".into())),
    };
    for s in m.summands() {
        check_rank(cli, s.rank())?;
    }
    let mut params = Map::new();
    params.insert("rep".into(), json!(m.to_string()));
    let p = match stratum {
        None => cc_map_a11(&CCInput::from_rep(&m))?,
        Some(k) => {
            params.insert("stratum".into(), json!(k));
            match m.summands() {
                [s] if s.kind() == Kind::Regular => cc_k_map(s.rank(), k)?,
                _ => {
                    return Err(CliError::Usage(
                        "--stratum needs a single regular indecomposable".into(),
                    ))
                }
            }
        }
    };
    let mut r = Report::new("cluster cc", params);
    r.line(p.to_string());
    let mut result = laurent_json(&p);
    let matching =
        (-qgrass::cluster::INDEX_BOUND..=qgrass::cluster::INDEX_BOUND).find(|&k| cluster_var_a11(k).ok().as_ref() == Some(&p));
    if let Some(k) = matching {
        r.line(format!("equals the cluster variable x_{k}"));
    }
    result["cluster_variable"] = json!(matching);
    r.result = result;
    Ok(r)
}

fn cmd_selftest() -> Outcome {
    let mut checks: Vec<(&str, bool)> = Vec::new();
    let master = (1..=5).all(|n| {
        DimVector::delta(n).sub_vectors().filter(|e| e.d1 <= e.d2).all(|e| {
            let m = Indecomposable::regular(n);
            let cells: Vec<usize> = enumerate_fixed_points(m, e)
                .iter()
                .map(|fp| cell_dimension(m, fp).unwrap_or(usize::MAX))
                .collect();
            GradedPoly::from_cells(cells) == poincare_regular(n, e)
        })
    });
    checks.push(("cell dimensions reproduce Poincare polynomials, n <= 5", master));
    let lefschetz = (0..=2).all(|n| {
        let mut ms = vec![Indecomposable::preprojective(n), Indecomposable::preinjective(n)];
        if n > 0 {
            ms.push(Indecomposable::regular(n));
        }
        ms.into_iter().all(|m| {
            let rep = FqMatrixRep::from_indecomposable(m, 2).expect("q = 2 is supported");
            m.dim().sub_vectors().all(|e| {
                count_points(&rep, e).ok() == Some(poincare(&GrassId::new(m, e)).eval(2))
            })
        })
    });
    checks.push(("F_2 point counts equal P(2), n <= 2", lefschetz));
    let z = (1..=3).all(|n| z_n_recurrence(n).ok() == z_n_geometric(n).ok());
    checks.push(("z_n recurrence = geometric, n <= 3", z));
    let u = (1..=2).all(|n| u_n_recurrence(n).ok() == u_n_geometric(n).ok());
    checks.push(("u_n recurrence = geometric, n <= 2", u));
    let cc = (0..=2).all(|n| {
        let p = cc_map_a11(&CCInput::from_rep(&Indecomposable::preprojective(n).into())).ok();
        let i = cc_map_a11(&CCInput::from_rep(&Indecomposable::preinjective(n).into())).ok();
        p == cluster_var_a11(-(n as i64)).ok() && i == cluster_var_a11(n as i64 + 3).ok()
    });
    checks.push(("CC(P_n) = x_(-n), CC(I_n) = x_(n+3), n <= 2", cc));
    let bijection = (1..=4).all(|n| {
        DimVector::delta(n).sub_vectors().filter(|e| e.d1 < e.d2).all(|e| {
            alpha_set(n, e).map_or(false, |alphas| {
                alphas.iter().all(|a| {
                    alpha_beta_bijection(n, e, a).is_ok_and(|b| {
                        b.validate(n, e).is_ok() && b.cell_dimension(n) == a.cell_dimension(n)
                    })
                })
            })
        })
    });
    checks.push(("alpha -> beta map preserves cell dimensions, n <= 4", bijection));

    let mut r = Report::new("selftest", Map::new());
    let mut rows = Vec::new();
    let mut json_rows = Vec::new();
    for (name, ok) in &checks {
        let verdict = if *ok { "PASS" } else { "FAIL" };
        r.line(format!("{verdict} {name}"));
        rows.push(vec![name.to_string(), verdict.to_string()]);
        json_rows.push(json!({ "check": name, "passed": ok }));
    }
    if checks.iter().any(|(_, ok)| !ok) {
        r.verdict = Verdict::Violated;
    }
    r.result = json!({ "checks": json_rows });
    r.table(&["check", "verdict"], rows);
    Ok(r)
}
