use std::fs;
use std::path::Path;

use modan_core::checks::{run_checks, Status};
use modan_core::complex::ComplexReport;
use modan_core::derham::{curvature_witness, derham_cohomology, homotopy_check, DerKappa, FormContext};
use modan_core::derivation::{self, connection_from_potential, derivation_algebra, ConnectionSection};
use modan_core::error::Error;
use modan_core::exactlin::{format_scalar, Matrix, Scalar, Subspace};
use modan_core::gauge::make_automorphism;
use modan_core::hochschild::{hochschild_cohomology, CochainContext};
use modan_core::io::{
    matrix_from_json, matrix_to_json, pair_from_json, pair_to_json, parse_workspace, potential_from_json, subspace_to_json, vector_from_json, vector_to_json,
    WorkspaceFile,
};
use modan_core::module::ModuleOverAlgebra;
use modan_core::multiplier::{self, adjoint_embedding, multiplier_algebra, unital_iso_e_star};
use modan_core::operators::{Carrier, PairOperator};
use modan_core::oracle::run_oracle;
use serde_json::{json, Value};

use crate::report::{Outcome, Report};
use crate::{Global, On, Target};

type Cmd = Result<Report, Outcome>;

fn usage(msg: impl Into<String>) -> Outcome {
    Outcome::Usage(msg.into())
}

/// Parse errors are usage errors; everything else is a failed report.
fn core(err: Error) -> Outcome {
    match err {
        Error::Parse(msg) => usage(format!("parse error: {msg}")),
        other => {
            let mut r = Report::new(json!({"ok": false, "error": other.to_string()}));
            r.row("error", &other);
            Outcome::Done(r.failed())
        }
    }
}

fn done(cmd: Cmd) -> Outcome {
    cmd.map_or_else(|o| o, Outcome::Done)
}

fn read(path: &Path) -> Result<String, Outcome> {
    fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))
}

fn read_json(path: &Path) -> Result<Value, Outcome> {
    serde_json::from_str(&read(path)?).map_err(|e| usage(format!("parse error in {}: {e}", path.display())))
}

fn load(path: &Path) -> Result<WorkspaceFile, Outcome> {
    parse_workspace(&read(path)?).map_err(core)
}

fn need_module(ws: &WorkspaceFile) -> Result<&ModuleOverAlgebra, Outcome> {
    ws.module.as_ref().ok_or_else(|| usage("this command needs a workspace with a module"))
}

fn carrier(ws: &WorkspaceFile, on: Option<On>) -> Result<Carrier, Outcome> {
    match (on, &ws.module) {
        (Some(On::Algebra), _) | (None, None) => Ok(Carrier::Algebra(ws.algebra.clone())),
        (_, Some(m)) => Ok(Carrier::Module(m.clone())),
        (Some(On::Module), None) => Err(usage("--on module needs a workspace with a module")),
    }
}

fn show_vec(v: &[Scalar]) -> String {
    format!("[{}]", v.iter().map(format_scalar).collect::<Vec<_>>().join(", "))
}

fn show_matrix(m: &Matrix) -> String {
    format!("[{}]", m.row_vecs().iter().map(|r| show_vec(r)).collect::<Vec<_>>().join(", "))
}

fn show_pair(p: &PairOperator) -> String {
    format!("({}, {})", show_matrix(&p.module_op), show_matrix(&p.algebra_op))
}

fn basis_rows(r: &mut Report, label: &str, s: &Subspace) {
    r.row(format!("dim {label}"), s.dim());
    for (i, b) in s.basis().iter().enumerate() {
        r.row(format!("  {i}"), show_vec(b));
    }
}

fn pair_at(v: &[Scalar], m: usize, n: usize) -> PairOperator {
    PairOperator::new(Matrix::from_flat(m, m, v[..m * m].to_vec()).unwrap(), Matrix::from_flat(n, n, v[m * m..].to_vec()).unwrap())
}

fn image_dim(space: &Subspace, m: usize) -> usize {
    Subspace::from_rows(space.ambient_dim() - m * m, space.basis().iter().map(|b| b[m * m..].to_vec())).dim()
}

fn complex_rows(r: &mut Report, c: &ComplexReport) -> Value {
    r.text(format!("{:>3} {:>6} {:>6} {:>6}", "q", "dim", "rank", "H"));
    for row in &c.rows {
        r.text(format!("{:>3} {:>6} {:>6} {:>6}", row.q, row.dim, row.rank, row.h));
    }
    json!(c.rows.iter().map(|row| json!({"q": row.q, "dim": row.dim, "rank": row.rank, "h": row.h})).collect::<Vec<_>>())
}

fn complex_ok(c: &ComplexReport) -> bool {
    c.closed.iter().all(|&b| b) && c.squares_to_zero.iter().all(|&b| b)
}

pub fn validate(_g: &Global, file: &Path) -> Outcome {
    done((|| {
        let text = read(file)?;
        let ws = match parse_workspace(&text) {
            Ok(ws) => ws,
            Err(err) => return Err(validate_failure(&text, err)),
        };
        let a = &ws.algebra;
        let mut r = Report::new(json!({
            "ok": true,
            "algebra": {"name": a.name(), "dim": a.dim(), "unital": a.is_unital()},
            "module": ws.module.as_ref().map(|m| json!({"name": m.name(), "dim": m.dim(), "free_rank": m.free_rank()})),
        }));
        r.row("algebra", format!("{} (dim {})", a.name(), a.dim()));
        r.row("unital", a.is_unital());
        if let Some(m) = &ws.module {
            r.row("module", format!("{} (dim {})", m.name(), m.dim()));
            r.row("free rank", m.free_rank().map_or("-".into(), |k| k.to_string()));
        }
        r.row("valid", true);
        Ok(r)
    })())
}

/// The offending basis elements of a failed axiom.
fn validation_witness(err: &Error, names: &[String]) -> Option<Vec<String>> {
    let n = |i: &usize| names.get(*i).cloned().unwrap_or_else(|| i.to_string());
    match err {
        Error::NotCommutative { i, j } => Some(vec![n(i), n(j)]),
        Error::NotAssociative { i, j, k } | Error::NotAModule { i, j, k } => Some(vec![n(i), n(j), n(k)]),
        _ => None,
    }
}

fn validate_failure(text: &str, err: Error) -> Outcome {
    let v: Value = serde_json::from_str(text).unwrap_or(Value::Null);
    let key = if matches!(err, Error::NotAModule { .. }) { "module" } else { "algebra" };
    let names: Vec<String> = v[key]["basis"].as_array().map(|a| a.iter().filter_map(|s| s.as_str().map(str::to_string)).collect()).unwrap_or_default();
    let Some(witness) = validation_witness(&err, &names) else {
        return core(err);
    };
    let mut r = Report::new(json!({"ok": false, "error": err.to_string(), "witness": witness}));
    r.row("valid", false);
    r.row("error", &err);
    r.row("witness", format!("({})", witness.join(", ")));
    Outcome::Done(r.failed())
}

pub fn multipliers(_g: &Global, file: &Path) -> Outcome {
    done((|| {
        let ws = load(file)?;
        let a = &ws.algebra;
        let space = multiplier_algebra(a);
        let unit = a.find_unit();
        let mut r = Report::new(json!({
            "algebra": a.name(),
            "multipliers": subspace_to_json(&space),
            "annihilator": subspace_to_json(&a.annihilator()),
            "unit": unit.as_ref().map(|e| vector_to_json(e)),
        }));
        r.heading(format!("multipliers of {}", a.name()));
        basis_rows(&mut r, "M(A)", &space);
        r.row("dim ann A", a.annihilator().dim());
        if let Some(e) = &unit {
            r.row("unit", show_vec(e));
            let iso = unital_iso_e_star(a).map_err(core)?;
            for (i, b) in space.basis().iter().enumerate() {
                let m = Matrix::from_flat(a.dim(), a.dim(), b.clone()).unwrap();
                r.row(format!("e*(R{i})"), show_vec(&iso.apply(&m)));
            }
        }
        Ok(r)
    })())
}

pub fn module_multipliers(_g: &Global, file: &Path) -> Outcome {
    done((|| {
        let ws = load(file)?;
        let m = need_module(&ws)?;
        let space = multiplier::module_multipliers(m);
        let hom = m.hom_into_annihilator();
        let kernel = adjoint_embedding(m).kernel();
        let image = image_dim(&space, m.dim());
        let mut r = Report::new(json!({
            "module": m.name(),
            "module_multipliers": subspace_to_json(&space),
            "hom_into_annihilator": subspace_to_json(&hom),
            "adjoint_kernel": subspace_to_json(&kernel),
            "projection_image_dim": image,
        }));
        r.heading(format!("module multipliers of {}", m.name()));
        basis_rows(&mut r, "M(M)", &space);
        r.row("dim Im pi", image);
        basis_rows(&mut r, "Hom_A(M; ann)", &hom);
        r.row("dim Ker ad", kernel.dim());
        Ok(r)
    })())
}

pub fn derivations(_g: &Global, file: &Path) -> Outcome {
    done((|| {
        let ws = load(file)?;
        let a = &ws.algebra;
        let space = derivation_algebra(a);
        let mut r = Report::new(json!({"algebra": a.name(), "derivations": subspace_to_json(&space)}));
        r.heading(format!("derivations of {}", a.name()));
        basis_rows(&mut r, "D(A)", &space);
        Ok(r)
    })())
}

pub fn module_derivations(_g: &Global, file: &Path) -> Outcome {
    done((|| {
        let ws = load(file)?;
        let m = need_module(&ws)?;
        let space = derivation::module_derivations(m);
        let end = m.endomorphisms();
        let image = image_dim(&space, m.dim());
        let mut r = Report::new(json!({
            "module": m.name(),
            "module_derivations": subspace_to_json(&space),
            "endomorphisms": subspace_to_json(&end),
            "projection_image_dim": image,
        }));
        r.heading(format!("module derivations of {}", m.name()));
        basis_rows(&mut r, "D(M)", &space);
        r.row("dim Im Pi", image);
        basis_rows(&mut r, "End_A(M)", &end);
        Ok(r)
    })())
}

fn connection_for(ws: &WorkspaceFile, m: &ModuleOverAlgebra, potential: Option<&Path>) -> Result<ConnectionSection, Outcome> {
    let value = match potential {
        Some(p) => Some(read_json(p)?),
        None => ws.potential.clone(),
    };
    match value {
        Some(v) => {
            let count = derivation_algebra(m.base()).dim();
            let values = potential_from_json(&v, count, m.dim()).map_err(core)?;
            connection_from_potential(m, &values).map_err(core)
        }
        None => ConnectionSection::free_lift(m).map_err(core),
    }
}

pub fn connection(_g: &Global, file: &Path, potential: Option<&Path>) -> Outcome {
    done((|| {
        let ws = load(file)?;
        let m = need_module(&ws)?;
        let conn = connection_for(&ws, m, potential)?;
        let flags = conn.flags().map_err(core)?;
        let basis = conn.basis_derivations();
        let mut r = Report::new(Value::Null);
        r.heading(format!("connection on {}", m.name()));
        let mut values = Vec::new();
        for (i, x) in basis.iter().enumerate() {
            let p = conn.pair(x).map_err(core)?;
            r.row(format!("nabla_X{i}"), show_matrix(&p.module_op));
            values.push(json!({"index": i, "derivation": matrix_to_json(x), "nabla": matrix_to_json(&p.module_op)}));
        }
        let mut curvature = Vec::new();
        for i in 0..basis.len() {
            for j in i + 1..basis.len() {
                let f = conn.curvature(&basis[i], &basis[j]).map_err(core)?;
                if !f.is_zero() {
                    r.row(format!("F(X{i}, X{j})"), show_matrix(&f));
                    curvature.push(json!({"i": i, "j": j, "matrix": matrix_to_json(&f)}));
                }
            }
        }
        r.row("linear", flags.linear);
        r.row("algebra-linear", flags.a_linear);
        r.row("flat", flags.lie);
        r.row("algebra-linear and flat", flags.a_lie);
        r.set_json(json!({
            "module": m.name(),
            "values": values,
            "curvature": curvature,
            "flags": {"linear": flags.linear, "a_linear": flags.a_linear, "flat": flags.lie, "a_linear_flat": flags.a_lie},
        }));
        Ok(r)
    })())
}

fn automorphism_matrix(ws: &WorkspaceFile, m: &ModuleOverAlgebra, g: Option<&Path>) -> Result<Matrix, Outcome> {
    let v = match g {
        Some(p) => read_json(p)?,
        None => match &ws.g {
            Some(mat) => return Ok(mat.clone()),
            None => return Err(usage("no automorphism given: pass --g or add a \"g\" block")),
        },
    };
    match v.get("element") {
        Some(e) => {
            let f = vector_from_json(e).map_err(core)?;
            if f.len() != m.base().dim() {
                return Err(usage(format!("element must have {} coordinates", m.base().dim())));
            }
            Ok(m.action_of(&f))
        }
        None => matrix_from_json(&v).map_err(core),
    }
}

pub fn gauge(_g: &Global, file: &Path, g: Option<&Path>, target: Target, input: Option<&Path>) -> Outcome {
    done((|| {
        let ws = load(file)?;
        let m = need_module(&ws)?;
        let (md, n) = (m.dim(), m.base().dim());
        let gm = automorphism_matrix(&ws, m, g)?;
        if gm.rows() != md || gm.cols() != md {
            return Err(usage(format!("g must be {md} x {md}")));
        }
        let auto = make_automorphism(m, gm).map_err(core)?;
        let space = match target {
            Target::Multiplier => multiplier::module_multipliers(m),
            Target::Derivation => derivation::module_derivations(m),
        };
        let inputs = match input {
            Some(p) => vec![pair_from_json(&read_json(p)?).map_err(core)?],
            None => match &ws.pair {
                Some(p) => vec![p.clone()],
                None => space.basis().iter().map(|b| pair_at(b, md, n)).collect(),
            },
        };
        let kind = match target {
            Target::Multiplier => "multiplier",
            Target::Derivation => "derivation",
        };
        let mut r = Report::new(Value::Null);
        r.heading(format!("ad_G on module {kind}s of {}", m.name()));
        r.row("G", show_matrix(auto.g()));
        let mut results = Vec::new();
        let mut ok = true;
        for (i, p) in inputs.iter().enumerate() {
            if p.module_op.rows() != md || p.algebra_op.rows() != n {
                return Err(usage(format!("pair must be ({md} x {md}, {n} x {n})")));
            }
            let member = space.contains(&p.to_coords()).is_ok_and(|b| b);
            let out = auto.act(p);
            let out_member = space.contains(&out.to_coords()).is_ok_and(|b| b);
            let base_kept = out.algebra_op == p.algebra_op;
            ok &= member && out_member && base_kept;
            let diff = &out.module_op - &p.module_op;
            r.row(format!("input {i}"), show_pair(p));
            r.row(format!("ad_G {i}"), show_pair(&out));
            r.row(format!("difference {i}"), show_matrix(&diff));
            if !member {
                r.row(format!("warning {i}"), format!("input is not a module {kind}"));
            }
            results.push(json!({
                "input": pair_to_json(p),
                "output": pair_to_json(&out),
                "difference": matrix_to_json(&diff),
                "input_in_space": member,
                "output_in_space": out_member,
                "base_preserved": base_kept,
            }));
        }
        r.set_json(json!({"module": m.name(), "target": kind, "g": matrix_to_json(auto.g()), "results": results}));
        r.ok = ok;
        Ok(r)
    })())
}

pub fn hochschild(g: &Global, file: &Path, kappa: &str, on: Option<On>) -> Outcome {
    done((|| {
        let ws = load(file)?;
        let c = carrier(&ws, on)?;
        let k = match kappa {
            "id" => None,
            path => Some(matrix_from_json(&read_json(Path::new(path))?).map_err(core)?),
        };
        if let Some(k) = &k {
            CochainContext::new(c.clone(), c.clone()).map_err(core)?.validate_kappa(k).map_err(core)?;
        }
        let report = hochschild_cohomology(&c, &c, k.as_ref(), g.qmax).map_err(core)?;
        let mut r = Report::new(Value::Null);
        r.heading(format!("Hochschild complex of {} (qmax {})", c.name(), g.qmax));
        let rows = complex_rows(&mut r, &report);
        let ok = complex_ok(&report);
        r.row("delta delta = 0", report.squares_to_zero.iter().all(|&b| b));
        r.set_json(json!({"carrier": c.name(), "qmax": g.qmax, "rows": rows, "h": report.h(), "squares_to_zero": ok}));
        r.ok = ok;
        Ok(r)
    })())
}

fn derham_kappa(ws: &WorkspaceFile, kappa: &str, on: Option<On>) -> Result<(Carrier, Carrier, DerKappa), Outcome> {
    let alg = Carrier::Algebra(ws.algebra.clone());
    if kappa == "id" {
        let c = carrier(ws, on)?;
        let k = DerKappa::identity(&c);
        return Ok((c.clone(), c, k));
    }
    let m = need_module(ws)?;
    let v = Carrier::Module(m.clone());
    if kappa == "lift" {
        return Ok((alg, v, DerKappa::lift(m).map_err(core)?));
    }
    if let Some(path) = kappa.strip_prefix("potential:") {
        let conn = connection_for(ws, m, Some(Path::new(path)))?;
        return Ok((alg, v, DerKappa::from_connection(&conn).map_err(core)?));
    }
    let matrix = matrix_from_json(&read_json(Path::new(kappa))?).map_err(core)?;
    Ok((alg, v, DerKappa { matrix }))
}

pub fn derham(g: &Global, file: &Path, kappa: &str, on: Option<On>) -> Outcome {
    done((|| {
        let ws = load(file)?;
        let (u, v, k) = derham_kappa(&ws, kappa, on)?;
        if let Some((i, j)) = curvature_witness(&u, &v, &k).map_err(core)? {
            return Err(core(Error::NonzeroCurvature { i, j }));
        }
        let report = derham_cohomology(&u, &v, &k, g.qmax).map_err(core)?;
        let mut r = Report::new(Value::Null);
        r.heading(format!("de Rham complex of ({}, {}) (qmax {})", u.name(), v.name(), g.qmax));
        let rows = complex_rows(&mut r, &report);
        let ok = complex_ok(&report);
        r.row("d d = 0", report.squares_to_zero.iter().all(|&b| b));
        r.set_json(json!({"u": u.name(), "v": v.name(), "qmax": g.qmax, "rows": rows, "h": report.h(), "squares_to_zero": ok}));
        r.ok = ok;
        Ok(r)
    })())
}

pub fn check_magic(g: &Global, file: &Path, on: Option<On>) -> Outcome {
    done((|| {
        let ws = load(file)?;
        let c = carrier(&ws, on)?;
        let ctx = FormContext::new(c.clone(), c.clone(), &DerKappa::identity(&c)).map_err(core)?;
        let d = ctx.u_space().dim();
        let mut r = Report::new(Value::Null);
        r.heading(format!("L = d i + i d on {} (qmax {})", c.name(), g.qmax));
        let mut rows = Vec::new();
        let mut ok = true;
        for q in 0..=g.qmax {
            let forms = ctx.basis_forms(q);
            let mut holds = true;
            for w in &forms {
                for k in 0..d {
                    let xi = modan_core::exactlin::unit_vec(d, k);
                    let mut rhs = ctx.interior(&xi, &ctx.d(w));
                    if q > 0 {
                        rhs = rhs.add(&ctx.d(&ctx.interior(&xi, w)));
                    }
                    holds &= ctx.lie(&xi, w) == rhs;
                }
            }
            ok &= holds;
            r.row(format!("q = {q}"), format!("{} forms x {d} vectors: {}", forms.len(), if holds { "holds" } else { "FAILS" }));
            rows.push(json!({"q": q, "forms": forms.len(), "vectors": d, "holds": holds}));
        }
        r.set_json(json!({"carrier": c.name(), "rows": rows, "holds": ok}));
        r.ok = ok;
        Ok(r)
    })())
}

pub fn homotopy(g: &Global, file: &Path) -> Outcome {
    done((|| {
        let ws = load(file)?;
        let m = need_module(&ws)?;
        let rows = homotopy_check(m, g.qmax).map_err(core)?;
        let mut r = Report::new(Value::Null);
        r.heading(format!("id = i_E d + d i_E on {} (qmax {})", m.name(), g.qmax));
        for row in &rows {
            r.row(format!("q = {}", row.q), format!("{} forms: {}", row.forms, if row.holds { "holds" } else { "FAILS" }));
        }
        let ok = rows.iter().all(|row| row.holds);
        r.set_json(json!({"module": m.name(), "rows": rows, "holds": ok}));
        r.ok = ok;
        Ok(r)
    })())
}

pub fn check(g: &Global, file: &Path) -> Outcome {
    done((|| {
        let ws = load(file)?;
        let report = run_checks(&ws.algebra, ws.module.as_ref(), g.qmax, g.seed);
        let mut r = Report::new(Value::Null);
        let label = ws.module.as_ref().map_or(ws.algebra.name().to_string(), |m| format!("{} over {}", m.name(), ws.algebra.name()));
        r.heading(format!("checks on {label} (qmax {}, seed {})", g.qmax, g.seed));
        for e in &report.entries {
            let s = match e.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
                Status::Skipped => "skipped",
            };
            r.row(&e.tag, format!("{s:<7}  {}", e.detail));
        }
        let (p, f, s) = count(&report.entries.iter().map(|e| e.status).collect::<Vec<_>>());
        r.text(format!("{p} passed, {f} failed, {s} skipped"));
        r.set_json(serde_json::to_value(&report).expect("serializable"));
        r.ok = report.passed();
        Ok(r)
    })())
}

fn count(statuses: &[Status]) -> (usize, usize, usize) {
    let c = |s: Status| statuses.iter().filter(|&&x| x == s).count();
    (c(Status::Pass), c(Status::Fail), c(Status::Skipped))
}

pub fn oracle(g: &Global, file: &Path, cap: usize) -> Outcome {
    done((|| {
        let ws = load(file)?;
        let report = run_oracle(&ws.algebra, ws.module.as_ref(), g.qmax, cap).map_err(core)?;
        let mut r = Report::new(Value::Null);
        r.heading(format!("oracle cross-check (qmax {}, cap {cap})", g.qmax));
        r.text(format!("{:<40} {:>7} {:>7}", "statement", "primary", "oracle"));
        for row in &report.rows {
            let mark = if row.agrees() { "" } else { "  MISMATCH" };
            r.text(format!("{:<40} {:>7} {:>7}{mark}", row.statement, row.primary, row.oracle));
        }
        let ok = report.all_agree();
        let rows: Vec<Value> =
            report.rows.iter().map(|row| json!({"statement": row.statement, "primary": row.primary, "oracle": row.oracle, "agrees": row.agrees()})).collect();
        r.set_json(json!({"qmax": g.qmax, "cap": cap, "rows": rows, "agree": ok}));
        r.ok = ok;
        if let Err(e) = report.check() {
            r.text(format!("error: {e}"));
        }
        Ok(r)
    })())
}
