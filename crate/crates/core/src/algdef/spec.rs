//! The JSON algebra description format.
//!
//! ```json
//! {"kind": "commutative_quotient", "field": {"p": 2},
//!  "variables": ["x", "y"], "relations": ["x*x", "x*y", "y*y"]}
//! ```
//!
//! Three kinds are accepted: `quiver`, `commutative_quotient` and
//! `structure_constants`. Unknown keys are rejected.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::poly::{parse_expression, Term};
use crate::error::{Error, Result};
use crate::exactla::check_modulus;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FieldSpec {
    pub p: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArrowSpec {
    pub name: String,
    /// 1-based source vertex.
    pub from: usize,
    /// 1-based target vertex.
    pub to: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuiverSpec {
    pub kind: String,
    pub field: FieldSpec,
    pub vertices: usize,
    pub arrows: Vec<ArrowSpec>,
    #[serde(default)]
    pub relations: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nilpotency_degree: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CommutativeSpec {
    pub kind: String,
    pub field: FieldSpec,
    pub variables: Vec<String>,
    #[serde(default)]
    pub relations: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nilpotency_degree: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StructureConstantsSpec {
    pub kind: String,
    pub field: FieldSpec,
    pub dim: usize,
    /// `table[i][j]` holds the coordinates of `b_i * b_j`.
    pub table: Vec<Vec<Vec<i64>>>,
    pub unit: Vec<i64>,
    pub radical_basis: Vec<Vec<i64>>,
    pub idempotents: Vec<Vec<i64>>,
}

/// A validated algebra description.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgebraSpec {
    Quiver(QuiverSpec),
    CommutativeQuotient(CommutativeSpec),
    StructureConstants(StructureConstantsSpec),
}

impl AlgebraSpec {
    pub fn p(&self) -> u64 {
        match self {
            AlgebraSpec::Quiver(s) => s.field.p,
            AlgebraSpec::CommutativeQuotient(s) => s.field.p,
            AlgebraSpec::StructureConstants(s) => s.field.p,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            AlgebraSpec::Quiver(_) => "quiver",
            AlgebraSpec::CommutativeQuotient(_) => "commutative_quotient",
            AlgebraSpec::StructureConstants(_) => "structure_constants",
        }
    }

    pub fn to_value(&self) -> Value {
        let v = match self {
            AlgebraSpec::Quiver(s) => serde_json::to_value(s),
            AlgebraSpec::CommutativeQuotient(s) => serde_json::to_value(s),
            AlgebraSpec::StructureConstants(s) => serde_json::to_value(s),
        };
        v.expect("spec serialisation cannot fail")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_value()).expect("spec serialisation cannot fail")
    }

    /// Convenience constructor for `F_p[vars]/(relations)`.
    pub fn commutative(p: u64, variables: &[&str], relations: &[&str]) -> Self {
        AlgebraSpec::CommutativeQuotient(CommutativeSpec {
            kind: "commutative_quotient".into(),
            field: FieldSpec { p },
            variables: variables.iter().map(|s| s.to_string()).collect(),
            relations: relations.iter().map(|s| s.to_string()).collect(),
            nilpotency_degree: None,
        })
    }

    /// Convenience constructor for a bound quiver; arrows are `(name, from, to)`
    /// with 1-based vertices.
    pub fn quiver(p: u64, vertices: usize, arrows: &[(&str, usize, usize)], relations: &[&str]) -> Self {
        AlgebraSpec::Quiver(QuiverSpec {
            kind: "quiver".into(),
            field: FieldSpec { p },
            vertices,
            arrows: arrows.iter().map(|&(n, f, t)| ArrowSpec { name: n.to_string(), from: f, to: t }).collect(),
            relations: relations.iter().map(|s| s.to_string()).collect(),
            nilpotency_degree: None,
        })
    }
}

/// Locate the 1-based line/column of a byte offset.
fn line_col(text: &str, offset: usize) -> (usize, usize) {
    let before = &text[..offset.min(text.len())];
    let line = before.matches('\n').count() + 1;
    let col = before.rfind('\n').map_or(before.len(), |i| before.len() - i - 1) + 1;
    (line, col)
}

fn json_err(source_name: &str, e: serde_json::Error) -> Error {
    Error::Parse { source_name: source_name.to_string(), line: e.line(), column: e.column(), message: e.to_string() }
}

/// Parse and validate an algebra description document.
pub fn parse_spec(text: &str) -> Result<AlgebraSpec> {
    parse_spec_named(text, "<algebra>")
}

pub fn parse_spec_named(text: &str, source_name: &str) -> Result<AlgebraSpec> {
    let value: Value = serde_json::from_str(text).map_err(|e| json_err(source_name, e))?;
    let spec = spec_from_value_inner(&value, Some(text), source_name)?;
    validate(&spec, text, source_name)?;
    Ok(spec)
}

/// Validate an already-decoded JSON value (used for inline specs).
pub fn spec_from_value(value: &Value, source_name: &str) -> Result<AlgebraSpec> {
    let spec = spec_from_value_inner(value, None, source_name)?;
    validate(&spec, "", source_name)?;
    Ok(spec)
}

fn spec_from_value_inner(value: &Value, text: Option<&str>, source_name: &str) -> Result<AlgebraSpec> {
    let kind = value.get("kind").and_then(Value::as_str).ok_or_else(|| Error::Parse {
        source_name: source_name.to_string(),
        line: 1,
        column: 1,
        message: "missing string key \"kind\"".into(),
    })?;
    // Re-decode from the original text when available so serde reports positions.
    macro_rules! decode {
        ($t:ty) => {
            match text {
                Some(t) => serde_json::from_str::<$t>(t).map_err(|e| json_err(source_name, e))?,
                None => serde_json::from_value::<$t>(value.clone()).map_err(|e| Error::Parse {
                    source_name: source_name.to_string(),
                    line: 1,
                    column: 1,
                    message: e.to_string(),
                })?,
            }
        };
    }
    let spec = match kind {
        "quiver" => AlgebraSpec::Quiver(decode!(QuiverSpec)),
        "commutative_quotient" => AlgebraSpec::CommutativeQuotient(decode!(CommutativeSpec)),
        "structure_constants" => AlgebraSpec::StructureConstants(decode!(StructureConstantsSpec)),
        other => {
            return Err(Error::Parse {
                source_name: source_name.to_string(),
                line: 1,
                column: 1,
                message: format!("unknown algebra kind \"{other}\""),
            })
        }
    };
    Ok(spec)
}

fn position_of(text: &str, needle: &str) -> (usize, usize) {
    match text.find(needle) {
        Some(off) => line_col(text, off),
        None => (1, 1),
    }
}

fn spec_err(text: &str, source_name: &str, anchor: &str, message: String) -> Error {
    let (line, column) = position_of(text, anchor);
    Error::Parse { source_name: source_name.to_string(), line, column, message }
}

/// Parse one relation string, checking identifiers and the absence of a
/// constant term.
pub(crate) fn parse_relation(
    rel: &str,
    idx: usize,
    known: &HashSet<&str>,
    text: &str,
    source_name: &str,
) -> Result<Vec<Term>> {
    let label = format!("{source_name}: relations[{idx}]");
    let terms = parse_expression(rel, &label).map_err(|e| match e {
        Error::Parse { message, column, .. } => {
            let (line, col) = position_of(text, rel);
            Error::Parse { source_name: label.clone(), line, column: col + column, message }
        }
        other => other,
    })?;
    for t in &terms {
        for f in &t.factors {
            if !known.contains(f.as_str()) {
                return Err(spec_err(text, &label, rel, format!("unknown identifier \"{f}\" in relation \"{rel}\"")));
            }
        }
    }
    let constant: i64 = terms.iter().filter(|t| t.factors.is_empty()).map(|t| t.coeff).sum();
    if constant != 0 {
        return Err(spec_err(
            text,
            &label,
            rel,
            format!("relation \"{rel}\" has a constant term (relations must lie in the augmentation ideal)"),
        ));
    }
    Ok(terms)
}

fn check_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

fn validate(spec: &AlgebraSpec, text: &str, source_name: &str) -> Result<()> {
    let p = spec.p();
    check_modulus(p).map_err(|e| spec_err(text, source_name, "\"field\"", e.to_string()))?;
    match spec {
        AlgebraSpec::Quiver(q) => {
            if q.vertices == 0 {
                return Err(spec_err(text, source_name, "\"vertices\"", "a quiver needs at least one vertex".into()));
            }
            let mut names: HashSet<&str> = HashSet::new();
            for a in &q.arrows {
                if !check_identifier(&a.name) {
                    return Err(spec_err(text, source_name, &a.name, format!("invalid arrow name \"{}\"", a.name)));
                }
                if !names.insert(a.name.as_str()) {
                    return Err(spec_err(text, source_name, &a.name, format!("duplicate arrow name \"{}\"", a.name)));
                }
                for v in [a.from, a.to] {
                    if v == 0 || v > q.vertices {
                        return Err(spec_err(
                            text,
                            source_name,
                            &a.name,
                            format!("arrow \"{}\" references vertex {v} outside 1..={}", a.name, q.vertices),
                        ));
                    }
                }
            }
            for (i, r) in q.relations.iter().enumerate() {
                let terms = parse_relation(r, i, &names, text, source_name)?;
                if let Some(t) = terms.iter().find(|t| t.factors.len() < 2 && t.coeff % p as i64 != 0) {
                    return Err(spec_err(
                        text,
                        source_name,
                        r,
                        format!(
                            "relation \"{r}\" has a term of length {} (relations must lie in the square of the arrow ideal)",
                            t.factors.len()
                        ),
                    ));
                }
            }
            if let Some(n) = q.nilpotency_degree {
                if n == 0 {
                    return Err(spec_err(
                        text,
                        source_name,
                        "nilpotency_degree",
                        "nilpotency_degree must be positive".into(),
                    ));
                }
            }
        }
        AlgebraSpec::CommutativeQuotient(c) => {
            let mut names: HashSet<&str> = HashSet::new();
            for v in &c.variables {
                if !check_identifier(v) {
                    return Err(spec_err(text, source_name, v, format!("invalid variable name \"{v}\"")));
                }
                if !names.insert(v.as_str()) {
                    return Err(spec_err(text, source_name, v, format!("duplicate variable \"{v}\"")));
                }
            }
            for (i, r) in c.relations.iter().enumerate() {
                parse_relation(r, i, &names, text, source_name)?;
            }
            if let Some(n) = c.nilpotency_degree {
                if n == 0 {
                    return Err(spec_err(
                        text,
                        source_name,
                        "nilpotency_degree",
                        "nilpotency_degree must be positive".into(),
                    ));
                }
            }
        }
        AlgebraSpec::StructureConstants(s) => {
            let n = s.dim;
            let bad = |what: &str| spec_err(text, source_name, "\"table\"", format!("structure constants: {what}"));
            if n == 0 {
                return Err(bad("dim must be positive"));
            }
            if s.table.len() != n || s.table.iter().any(|row| row.len() != n || row.iter().any(|c| c.len() != n)) {
                return Err(bad("table must be dim x dim arrays of length-dim coefficient vectors"));
            }
            if s.unit.len() != n {
                return Err(bad("unit must have length dim"));
            }
            if s.radical_basis.iter().chain(&s.idempotents).any(|v| v.len() != n) {
                return Err(bad("radical_basis and idempotents entries must have length dim"));
            }
            if s.idempotents.is_empty() {
                return Err(bad("at least one idempotent is required"));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_commutative_quotient() {
        let doc = r#"{"kind":"commutative_quotient","field":{"p":2},
            "variables":["x","y"],"relations":["x*x","x*y","y*y"]}"#;
        let spec = parse_spec(doc).unwrap();
        match spec {
            AlgebraSpec::CommutativeQuotient(c) => assert_eq!(c.variables.len(), 2),
            other => panic!("wrong kind {other:?}"),
        }
    }

    #[test]
    fn rejects_constant_term() {
        let doc = r#"{"kind":"commutative_quotient","field":{"p":2},
            "variables":["x"],"relations":["x + 1"]}"#;
        let e = parse_spec(doc).unwrap_err();
        assert!(e.to_string().contains("constant term"), "{e}");
    }

    #[test]
    fn rejects_composite_modulus() {
        let doc = r#"{"kind":"commutative_quotient","field":{"p":4},"variables":["x"],"relations":["x*x"]}"#;
        let e = parse_spec(doc).unwrap_err();
        assert!(e.to_string().contains("not prime"), "{e}");
    }

    #[test]
    fn rejects_missing_modulus() {
        let doc = r#"{"kind":"commutative_quotient","variables":["x"],"relations":["x*x"]}"#;
        assert!(matches!(parse_spec(doc), Err(Error::Parse { .. })));
    }

    #[test]
    fn rejects_unknown_identifier_and_keys() {
        let doc = r#"{"kind":"commutative_quotient","field":{"p":2},"variables":["x"],"relations":["x*z"]}"#;
        assert!(parse_spec(doc).unwrap_err().to_string().contains("unknown identifier"));
        let doc = r#"{"kind":"commutative_quotient","field":{"p":2},"variables":["x"],"bogus":1}"#;
        match parse_spec(doc) {
            Err(Error::Parse { line, message, .. }) => {
                assert_eq!(line, 1);
                assert!(message.contains("bogus"));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn syntax_error_has_position() {
        let doc = "{\"kind\": \"quiver\",\n \"field\": {\"p\": 2},,}";
        match parse_spec(doc) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn quiver_relations_must_be_in_arrow_ideal_square() {
        let doc = r#"{"kind":"quiver","field":{"p":2},"vertices":2,
            "arrows":[{"name":"a","from":1,"to":2}],"relations":["a"]}"#;
        assert!(parse_spec(doc).is_err());
    }

    #[test]
    fn roundtrip_through_json() {
        let spec = AlgebraSpec::quiver(3, 2, &[("a", 1, 2)], &[]);
        let again = parse_spec(&spec.to_json()).unwrap();
        assert_eq!(spec, again);
    }
}
