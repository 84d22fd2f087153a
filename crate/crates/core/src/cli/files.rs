//! Algebra and module files.
//!
//! A module file is a JSON object
//! `{"algebra": <path or inline spec>, "opposite": bool, "dim": n, "action": {gen: rows}}`.
//! `algebra` may be omitted when the caller supplies one; `opposite` marks a
//! right module, i.e. a module over the opposite algebra.

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::Arc;

use serde_json::{json, Map, Value};

use crate::algdef::{same_algebra, spec_from_value, Algebra};
use crate::error::{Error, Result};
use crate::exactla::Mat;
use crate::modrep::{make_module_with_dim, Module};

const MODULE_KEYS: [&str; 4] = ["algebra", "opposite", "dim", "action"];

fn json_error(source_name: &str, e: serde_json::Error) -> Error {
    Error::Parse { source_name: source_name.to_string(), line: e.line(), column: e.column(), message: e.to_string() }
}

fn invalid(source_name: &str, message: impl Into<String>) -> Error {
    Error::Parse { source_name: source_name.to_string(), line: 1, column: 1, message: message.into() }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::io(path.display().to_string(), e))
}

pub fn load_algebra(path: &Path) -> Result<Arc<Algebra>> {
    Algebra::load(path)
}

/// Load a module file. `expected`, when given, must agree with the file's own
/// algebra; relative algebra paths resolve against the module file's directory.
pub fn load_module(path: &Path, expected: Option<&Arc<Algebra>>) -> Result<Module> {
    let text = read(path)?;
    let base = path.parent().unwrap_or(Path::new("."));
    parse_module(&text, &path.display().to_string(), base, expected)
}

pub fn parse_module(text: &str, source_name: &str, base: &Path, expected: Option<&Arc<Algebra>>) -> Result<Module> {
    let value: Value = serde_json::from_str(text).map_err(|e| json_error(source_name, e))?;
    let obj = value.as_object().ok_or_else(|| invalid(source_name, "module file must be a JSON object"))?;
    if let Some(k) = obj.keys().find(|k| !MODULE_KEYS.contains(&k.as_str())) {
        return Err(invalid(source_name, format!("unknown key {k:?}")));
    }
    let opposite = match obj.get("opposite") {
        None => false,
        Some(v) => v.as_bool().ok_or_else(|| invalid(source_name, "\"opposite\" must be a boolean"))?,
    };
    let own = match obj.get("algebra") {
        None => None,
        Some(Value::String(p)) => Some(load_algebra(&base.join(p))?),
        Some(v @ Value::Object(_)) => Some(Algebra::from_spec(&spec_from_value(v, source_name)?)?),
        Some(_) => return Err(invalid(source_name, "\"algebra\" must be a path or an inline spec")),
    };
    let alg = match (own, expected) {
        (Some(a), Some(e)) if !same_algebra(&a, e) => {
            return Err(invalid(source_name, "module algebra differs from --algebra"))
        }
        (_, Some(e)) => Arc::clone(e),
        (Some(a), None) => a,
        (None, None) => return Err(invalid(source_name, "no algebra given in the file or on the command line")),
    };
    let alg = if opposite { alg.opposite() } else { alg };
    let dim = obj
        .get("dim")
        .and_then(Value::as_u64)
        .ok_or_else(|| invalid(source_name, "\"dim\" must be a nonnegative integer"))? as usize;
    let empty = Map::new();
    let action = match obj.get("action") {
        None => &empty,
        Some(v) => v.as_object().ok_or_else(|| invalid(source_name, "\"action\" must be an object"))?,
    };
    if let Some(k) = action.keys().find(|k| alg.generator_index(k).is_none()) {
        return Err(invalid(source_name, format!("unknown generator {k:?}")));
    }
    let mut mats = Vec::with_capacity(alg.generators().len());
    for g in alg.generators() {
        let m = match action.get(&g.name) {
            Some(rows) => parse_matrix(rows, dim, alg.p(), source_name, &g.name)?,
            // A lone idempotent is the identity; everything else must be given.
            None if dim == 0 => Mat::zeros(alg.p(), 0, 0),
            None if alg.num_simples() == 1 && g.element == alg.unit() => Mat::identity(alg.p(), dim),
            None => return Err(invalid(source_name, format!("missing action of generator {:?}", g.name))),
        };
        mats.push(m);
    }
    make_module_with_dim(&alg, dim, mats).map_err(|e| invalid(source_name, e.to_string()))
}

fn parse_matrix(v: &Value, dim: usize, p: u32, source_name: &str, gen: &str) -> Result<Mat> {
    let bad = || invalid(source_name, format!("action of {gen:?} must be a {dim}×{dim} integer matrix"));
    let rows = v.as_array().ok_or_else(bad)?;
    if rows.len() != dim {
        return Err(bad());
    }
    let mut out = Vec::with_capacity(dim);
    for r in rows {
        let r = r.as_array().ok_or_else(bad)?;
        if r.len() != dim {
            return Err(bad());
        }
        out.push(r.iter().map(Value::as_i64).collect::<Option<Vec<i64>>>().ok_or_else(bad)?);
    }
    Ok(Mat::from_rows_i64(p, dim, &out))
}

/// Self-contained JSON for a module, with the algebra spec inlined.
pub fn module_to_value(m: &Module) -> Value {
    let alg = m.algebra();
    let action: BTreeMap<String, Vec<Vec<u32>>> = m.generator_rows().into_iter().collect();
    let mut v = json!({
        "algebra": alg.spec().to_value(),
        "dim": m.dim(),
        "action": action,
    });
    if alg.is_opposite_of_spec() {
        v["opposite"] = Value::Bool(true);
    }
    v
}

/// Write `m` to `dir/<content hash>.json` unless it already exists.
pub fn write_witness(dir: &Path, m: &Module) -> Result<std::path::PathBuf> {
    let path = dir.join(format!("{}.json", m.content_hash()));
    if !path.exists() {
        std::fs::create_dir_all(dir).map_err(|e| Error::io(dir.display().to_string(), e))?;
        let text = serde_json::to_string_pretty(&module_to_value(m)).expect("module json");
        std::fs::write(&path, text + "\n").map_err(|e| Error::io(path.display().to_string(), e))?;
    }
    Ok(path)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algdef::AlgebraSpec;

    fn plane() -> Arc<Algebra> {
        Algebra::local_radical_square_zero(2, 2).unwrap()
    }

    #[test]
    fn round_trip_preserves_hash() {
        let b = plane();
        let m = Module::regular(&b).direct_sum(&Module::simple(&b, 0)).unwrap();
        let text = module_to_value(&m).to_string();
        let back = parse_module(&text, "inline", Path::new("."), None).unwrap();
        assert_eq!(back.content_hash(), m.content_hash());
    }

    #[test]
    fn opposite_modules_round_trip() {
        let q = Algebra::from_spec(&AlgebraSpec::quiver(2, 2, &[("a", 1, 2)], &[])).unwrap();
        let m = Module::regular(&q.opposite());
        let v = module_to_value(&m);
        assert_eq!(v["opposite"], Value::Bool(true));
        let back = parse_module(&v.to_string(), "inline", Path::new("."), None).unwrap();
        assert_eq!(back.content_hash(), m.content_hash());
    }

    #[test]
    fn entries_reduce_and_identity_defaults() {
        let a = Algebra::truncated_polynomial(3, 2).unwrap();
        let m =
            parse_module(r#"{"dim": 2, "action": {"x": [[0, 0], [-2, 0]]}}"#, "m", Path::new("."), Some(&a)).unwrap();
        assert_eq!(m.generator_rows().last().unwrap().1, vec![vec![0, 0], vec![1, 0]]);
    }

    #[test]
    fn diagnostics_carry_positions() {
        let a = plane();
        let e = parse_module("{\"dim\": 1,\n \"action\": [}", "bad.json", Path::new("."), Some(&a)).unwrap_err();
        assert!(matches!(e, Error::Parse { line: 2, .. }), "{e}");
        let e = parse_module(r#"{"dim": 1, "colour": 3}"#, "bad.json", Path::new("."), Some(&a)).unwrap_err();
        assert!(e.to_string().contains("colour"));
        let e =
            parse_module(r#"{"dim": 1, "action": {"x1": [[1]]}}"#, "bad.json", Path::new("."), Some(&a)).unwrap_err();
        assert!(e.to_string().contains("relations") || e.to_string().contains("missing"), "{e}");
    }
}
