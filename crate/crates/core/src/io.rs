//! JSON reading and writing. Rationals are strings `"p/q"` or `"p"`; plain
//! JSON integers are accepted on input.

use serde_json::{json, Map, Value};

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::exactlin::{format_scalar, parse_scalar, Matrix, Scalar, Subspace};
use crate::module::ModuleOverAlgebra;
use crate::operators::PairOperator;

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

pub fn scalar_from_json(v: &Value) -> Result<Scalar> {
    match v {
        Value::String(s) => parse_scalar(s),
        Value::Number(n) => n.as_i64().map(crate::exactlin::int).ok_or_else(|| parse_err(format!("non-integer number {n}; write rationals as \"p/q\""))),
        other => Err(parse_err(format!("expected a rational, found {other}"))),
    }
}

pub fn scalar_to_json(x: &Scalar) -> Value {
    Value::String(format_scalar(x))
}

fn array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| parse_err(format!("{what}: expected an array")))
}

pub fn vector_from_json(v: &Value) -> Result<Vec<Scalar>> {
    array(v, "vector")?.iter().map(scalar_from_json).collect()
}

pub fn vector_to_json(v: &[Scalar]) -> Value {
    Value::Array(v.iter().map(scalar_to_json).collect())
}

fn tensor_from_json(v: &Value, what: &str) -> Result<Vec<Vec<Vec<Scalar>>>> {
    array(v, what)?.iter().map(|block| array(block, what)?.iter().map(vector_from_json).collect()).collect()
}

fn tensor_to_json(t: &[Vec<Vec<Scalar>>]) -> Value {
    Value::Array(t.iter().map(|block| Value::Array(block.iter().map(|v| vector_to_json(v)).collect())).collect())
}

fn names_from_json(v: &Value) -> Result<Vec<String>> {
    array(v, "basis")?.iter().map(|s| s.as_str().map(str::to_string).ok_or_else(|| parse_err("basis names must be strings"))).collect()
}

fn field<'a>(obj: &'a Value, key: &str) -> Result<&'a Value> {
    obj.get(key).ok_or_else(|| parse_err(format!("missing field \"{key}\"")))
}

/// Matrix as a list of rows, or `{"matrix": rows}`.
pub fn matrix_from_json(v: &Value) -> Result<Matrix> {
    let rows = match v {
        Value::Object(o) => o.get("matrix").ok_or_else(|| parse_err("missing field \"matrix\""))?,
        other => other,
    };
    let rows: Vec<Vec<Scalar>> = array(rows, "matrix")?.iter().map(vector_from_json).collect::<Result<_>>()?;
    let cols = rows.first().map_or(0, Vec::len);
    Matrix::from_rows(cols, rows).map_err(|_| parse_err("matrix rows have different lengths"))
}

pub fn matrix_to_json(m: &Matrix) -> Value {
    Value::Array(m.row_vecs().iter().map(|r| vector_to_json(r)).collect())
}

pub fn algebra_from_json(v: &Value) -> Result<Algebra> {
    let name = field(v, "name")?.as_str().unwrap_or("").to_string();
    let basis = names_from_json(field(v, "basis")?)?;
    let products = tensor_from_json(field(v, "products")?, "products")?;
    Algebra::new(name, basis, products)
}

pub fn algebra_to_json(a: &Algebra) -> Value {
    json!({"name": a.name(), "basis": a.basis_names(), "products": tensor_to_json(a.structure())})
}

pub fn module_from_json(base: &Algebra, v: &Value) -> Result<ModuleOverAlgebra> {
    let name = field(v, "name")?.as_str().unwrap_or("").to_string();
    let basis = names_from_json(field(v, "basis")?)?;
    let action = tensor_from_json(field(v, "action")?, "action")?;
    ModuleOverAlgebra::new(base.clone(), name, basis, action)
}

pub fn module_to_json(m: &ModuleOverAlgebra) -> Value {
    json!({"name": m.name(), "basis": m.basis_names(), "action": tensor_to_json(m.action())})
}

pub fn subspace_to_json(s: &Subspace) -> Value {
    json!({
        "ambient_dim": s.ambient_dim(),
        "dim": s.dim(),
        "basis": s.basis().iter().map(|b| vector_to_json(b)).collect::<Vec<_>>(),
    })
}

pub fn subspace_from_json(v: &Value) -> Result<Subspace> {
    let ambient = field(v, "ambient_dim")?.as_u64().ok_or_else(|| parse_err("ambient_dim must be a count"))? as usize;
    let rows: Vec<Vec<Scalar>> = array(field(v, "basis")?, "basis")?.iter().map(vector_from_json).collect::<Result<_>>()?;
    if rows.iter().any(|r| r.len() != ambient) {
        return Err(parse_err("basis row length differs from ambient_dim"));
    }
    Ok(Subspace::from_rows(ambient, rows))
}

pub fn pair_from_json(v: &Value) -> Result<PairOperator> {
    Ok(PairOperator::new(matrix_from_json(field(v, "module_op")?)?, matrix_from_json(field(v, "algebra_op")?)?))
}

pub fn pair_to_json(p: &PairOperator) -> Value {
    json!({"module_op": matrix_to_json(&p.module_op), "algebra_op": matrix_to_json(&p.algebra_op)})
}

/// Potential values on the derivation basis: either a list of matrices, or a
/// list of `{"index": i, "matrix": rows}` entries (missing indices are zero).
pub fn potential_from_json(v: &Value, count: usize, m: usize) -> Result<Vec<Matrix>> {
    let v = match v {
        Value::Object(o) if o.contains_key("potential") => &o["potential"],
        other => other,
    };
    let entries = array(v, "potential")?;
    let mut out = vec![Matrix::zeros(m, m); count];
    for (pos, entry) in entries.iter().enumerate() {
        let (index, mat) = match entry {
            Value::Object(o) if o.contains_key("index") => {
                let i = o["index"].as_u64().ok_or_else(|| parse_err("index must be a count"))? as usize;
                (i, matrix_from_json(field(entry, "matrix")?)?)
            }
            other => (pos, matrix_from_json(other)?),
        };
        if index >= count {
            return Err(parse_err(format!("potential index {index} out of range (derivation space has dim {count})")));
        }
        if mat.rows() != m || mat.cols() != m {
            return Err(parse_err(format!("potential values must be {m} x {m}")));
        }
        out[index] = mat;
    }
    Ok(out)
}

/// How `κ` is chosen for a complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KappaSpec {
    Identity,
    Lift,
    Potential(Value),
    Matrix(Matrix),
}

pub fn kappa_from_json(v: &Value) -> Result<KappaSpec> {
    match v {
        Value::String(s) if s == "id" => Ok(KappaSpec::Identity),
        Value::String(s) if s == "lift" => Ok(KappaSpec::Lift),
        Value::Object(o) if o.contains_key("potential") => Ok(KappaSpec::Potential(o["potential"].clone())),
        other => Ok(KappaSpec::Matrix(matrix_from_json(other)?)),
    }
}

/// Contents of one workspace file.
#[derive(Clone, Debug)]
pub struct WorkspaceFile {
    pub algebra: Algebra,
    pub module: Option<ModuleOverAlgebra>,
    pub kappa: Option<KappaSpec>,
    pub potential: Option<Value>,
    pub g: Option<Matrix>,
    pub pair: Option<PairOperator>,
}

pub fn parse_workspace(text: &str) -> Result<WorkspaceFile> {
    let v: Value = serde_json::from_str(text).map_err(|e| parse_err(e.to_string()))?;
    let algebra = algebra_from_json(field(&v, "algebra")?)?;
    let module = v.get("module").map(|m| module_from_json(&algebra, m)).transpose()?;
    let kappa = v.get("kappa").map(kappa_from_json).transpose()?;
    let potential = v.get("potential").cloned();
    let g = v.get("g").map(matrix_from_json).transpose()?;
    let pair = v.get("pair").map(pair_from_json).transpose()?;
    Ok(WorkspaceFile { algebra, module, kappa, potential, g, pair })
}

pub fn workspace_to_json(algebra: &Algebra, module: Option<&ModuleOverAlgebra>) -> Value {
    let mut obj = Map::new();
    obj.insert("algebra".into(), algebra_to_json(algebra));
    if let Some(m) = module {
        obj.insert("module".into(), module_to_json(m));
    }
    Value::Object(obj)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::{frac, int};
    use crate::fixtures;

    #[test]
    fn scalars_round_trip() {
        for x in [int(0), int(-3), frac(-3, 2), frac(7, 5)] {
            assert_eq!(scalar_from_json(&scalar_to_json(&x)).unwrap(), x);
        }
        assert_eq!(scalar_from_json(&json!(4)).unwrap(), int(4));
        assert!(scalar_from_json(&json!("1/0")).is_err());
        assert!(scalar_from_json(&json!(0.5)).is_err());
    }

    #[test]
    fn workspaces_round_trip() {
        for name in fixtures::NAMES {
            let (a, m) = fixtures::by_name(name).unwrap();
            let text = workspace_to_json(&a, m.as_ref()).to_string();
            let back = parse_workspace(&text).unwrap();
            assert_eq!(back.algebra, a);
            assert_eq!(back.module, m);
        }
    }

    #[test]
    fn subspaces_round_trip() {
        let s = crate::multiplier::module_multipliers(&fixtures::ad3());
        assert_eq!(subspace_from_json(&subspace_to_json(&s)).unwrap(), s);
    }

    #[test]
    fn potentials() {
        let v = json!([{"index": 1, "matrix": [["1", "0"], ["0", "1"]]}]);
        let p = potential_from_json(&v, 2, 2).unwrap();
        assert!(p[0].is_zero() && p[1].is_identity());
        assert!(potential_from_json(&v, 1, 2).is_err());
        let bare = json!([[["0", "0"], ["1", "0"]]]);
        assert_eq!(potential_from_json(&bare, 1, 2).unwrap()[0], Matrix::from_ints(&[&[0, 0], &[1, 0]]));
    }

    #[test]
    fn kappa_specs() {
        assert_eq!(kappa_from_json(&json!("id")).unwrap(), KappaSpec::Identity);
        assert_eq!(kappa_from_json(&json!("lift")).unwrap(), KappaSpec::Lift);
        assert_eq!(kappa_from_json(&json!([["2"]])).unwrap(), KappaSpec::Matrix(Matrix::from_ints(&[&[2]])));
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(parse_workspace("{"), Err(Error::Parse(_))));
        assert!(matches!(parse_workspace("{}"), Err(Error::Parse(_))));
    }
}
