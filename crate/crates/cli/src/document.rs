//! The JSON document format: one proto-twilled structure plus named linear maps.
//!
//! ```json
//! {
//!   "schema": 1,
//!   "name": "dim2-dim1-semidirect",
//!   "field": {"kind": "prime", "p": 5},
//!   "dim_g": 2,
//!   "dim_h": 1,
//!   "maps": {"bracket_g": [[["0", "1"], ["0", "0"]], [["0", "0"], ["0", "0"]]]},
//!   "linear_maps": {"r0": [["0", "0"]]}
//! }
//! ```
//!
//! A bilinear component `X⊗Y→Z` is nested as `[x][y] -> [z]`; a linear map `𝔥 → 𝔤`
//! lists the image of each basis vector of `𝔥`. Components left out are zero.

use std::collections::BTreeMap;
use std::path::Path;

use deformap::multimap::MultiIndex;
use deformap::prototwilled::{OmegaMaps, OmegaStructure, COMPONENTS};
use deformap::zoo::fixtures::Fixture;
use deformap::{Field, MultiMap, Part, SplitSpace};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{CliError, CliResult};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum FieldSpec {
    Rational,
    Prime { p: u64 },
}

impl FieldSpec {
    pub fn to_field(self) -> CliResult<Field> {
        match self {
            FieldSpec::Rational => Ok(Field::Rational),
            FieldSpec::Prime { p } => {
                Field::prime(p).map_err(|e| CliError::parse("field.p", e.to_string()))
            }
        }
    }

    pub fn of(field: Field) -> Self {
        match field {
            Field::Rational => FieldSpec::Rational,
            Field::Prime(p) => FieldSpec::Prime { p },
        }
    }
}

/// `Q`, `rational`, `F5`, `f5` or a bare prime `5`.
pub fn parse_field(text: &str) -> CliResult<Field> {
    let t = text.trim();
    if t.eq_ignore_ascii_case("q") || t.eq_ignore_ascii_case("rational") {
        return Ok(Field::Rational);
    }
    let digits = t.strip_prefix(['F', 'f']).unwrap_or(t);
    let p: u64 = digits
        .parse()
        .map_err(|_| CliError::Usage(format!("unknown field {text:?}; use Q or F<p>")))?;
    Field::prime(p).map_err(|e| CliError::Usage(e.to_string()))
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDocument {
    schema: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    kind: Option<String>,
    field: FieldSpec,
    dim_g: usize,
    dim_h: usize,
    #[serde(default)]
    maps: BTreeMap<String, Value>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    linear_maps: BTreeMap<String, Value>,
}

#[derive(Clone, Debug)]
pub struct AlgebraDocument {
    pub name: Option<String>,
    /// Free-form hint, usually an example kind.
    pub kind: Option<String>,
    pub structure: OmegaStructure,
    pub linear_maps: BTreeMap<String, MultiMap>,
}

fn dims_of(space: &SplitSpace, parts: &[Part]) -> Vec<usize> {
    parts.iter().map(|p| space.dim_of(*p)).collect()
}

fn scalar_from(value: &Value, field: Field, path: &str) -> CliResult<deformap::Scalar> {
    match value {
        Value::String(s) => field
            .parse(s)
            .map_err(|e| CliError::parse(path, e.to_string())),
        Value::Number(n) if n.is_i64() || n.is_u64() => field
            .parse(&n.to_string())
            .map_err(|e| CliError::parse(path, e.to_string())),
        other => Err(CliError::parse(
            path,
            format!("expected a scalar string such as \"2/3\", found {other}"),
        )),
    }
}

/// Reads nested arrays `[i₁]…[i_n] -> [out]` into a map with the given shape.
pub fn tensor_from_json(
    value: &Value,
    field: Field,
    inputs: &[usize],
    output: usize,
    path: &str,
) -> CliResult<MultiMap> {
    let mut map = MultiMap::zeros(field, inputs, output)?;
    fn walk(
        value: &Value,
        field: Field,
        dims: &[usize],
        prefix: &mut Vec<usize>,
        path: String,
        map: &mut MultiMap,
    ) -> CliResult<()> {
        let depth = prefix.len();
        let expected = dims[depth];
        let items = value.as_array().ok_or_else(|| {
            CliError::parse(
                path.clone(),
                format!("expected an array of length {expected}"),
            )
        })?;
        if items.len() != expected {
            return Err(CliError::shape(
                path,
                format!("expected {expected} entries, found {}", items.len()),
            ));
        }
        for (i, item) in items.iter().enumerate() {
            let child = format!("{path}[{i}]");
            if depth + 1 == dims.len() {
                let idx = &prefix[..];
                let s = scalar_from(item, field, &child)?;
                map.set(idx, i, s);
            } else {
                prefix.push(i);
                walk(item, field, dims, prefix, child, map)?;
                prefix.pop();
            }
        }
        Ok(())
    }
    let mut dims = inputs.to_vec();
    dims.push(output);
    walk(
        value,
        field,
        &dims,
        &mut Vec::new(),
        path.to_string(),
        &mut map,
    )?;
    Ok(map)
}

/// Nested arrays of scalar strings, the inverse of [`tensor_from_json`].
pub fn tensor_to_json(map: &MultiMap) -> Value {
    fn build(map: &MultiMap, prefix: &mut Vec<usize>) -> Value {
        if prefix.len() == map.arity() {
            return Value::Array(
                map.row(prefix)
                    .iter()
                    .map(|c| Value::String(c.to_string()))
                    .collect(),
            );
        }
        let n = map.inputs()[prefix.len()];
        let mut items = Vec::with_capacity(n);
        for i in 0..n {
            prefix.push(i);
            items.push(build(map, prefix));
            prefix.pop();
        }
        Value::Array(items)
    }
    build(map, &mut Vec::new())
}

/// Nonzero coefficients as `{"index": [...], "output": j, "value": "c"}`, in index order.
pub fn sparse_to_json(map: &MultiMap) -> Value {
    let mut out = Vec::new();
    for idx in MultiIndex::new(map.inputs()) {
        for (j, c) in map.row(&idx).iter().enumerate() {
            if !c.is_zero() {
                out.push(serde_json::json!({"index": idx, "output": j, "value": c.to_string()}));
            }
        }
    }
    Value::Array(out)
}

impl AlgebraDocument {
    /// Parses a document; `field` overrides the declared field when given.
    pub fn from_json_str(text: &str, field: Option<Field>) -> CliResult<Self> {
        let raw: RawDocument =
            serde_json::from_str(text).map_err(|e| CliError::parse("$", e.to_string()))?;
        if raw.schema != SCHEMA_VERSION {
            return Err(CliError::parse(
                "schema",
                format!(
                    "unsupported schema {}, expected {SCHEMA_VERSION}",
                    raw.schema
                ),
            ));
        }
        let field = match field {
            Some(f) => f,
            None => raw.field.to_field()?,
        };
        let space = SplitSpace::new(field, raw.dim_g, raw.dim_h)
            .map_err(|e| CliError::shape("dim_g", e.to_string()))?;
        let mut maps = OmegaMaps::zero(&space);
        if let Some(unknown) = raw.maps.keys().find(|k| maps.get(k).is_none()) {
            return Err(CliError::parse(
                format!("maps.{unknown}"),
                "unknown component; expected one of bracket_g, bracket_h, rho_l, rho_r, psi_l, psi_r, theta, eta",
            ));
        }
        for (name, pattern, out) in COMPONENTS {
            if let Some(v) = raw.maps.get(name) {
                let m = tensor_from_json(
                    v,
                    field,
                    &dims_of(&space, &pattern),
                    space.dim_of(out),
                    &format!("maps.{name}"),
                )?;
                *maps.get_mut(name).expect("known component") = m;
            }
        }
        let structure = OmegaStructure::assemble(space, maps)?;
        let mut linear_maps = BTreeMap::new();
        for (name, v) in &raw.linear_maps {
            let m = tensor_from_json(
                v,
                field,
                &[raw.dim_h],
                raw.dim_g,
                &format!("linear_maps.{name}"),
            )?;
            linear_maps.insert(name.clone(), m);
        }
        Ok(AlgebraDocument {
            name: raw.name,
            kind: raw.kind,
            structure,
            linear_maps,
        })
    }

    pub fn load(path: &Path, field: Option<Field>) -> CliResult<Self> {
        let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
            path: path.display().to_string(),
            source,
        })?;
        Self::from_json_str(&text, field)
    }

    pub fn to_json_value(&self) -> Value {
        let s = &self.structure;
        let raw = RawDocument {
            schema: SCHEMA_VERSION,
            name: self.name.clone(),
            kind: self.kind.clone(),
            field: FieldSpec::of(s.field()),
            dim_g: s.space().dim_g(),
            dim_h: s.space().dim_h(),
            maps: COMPONENTS
                .iter()
                .map(|(name, _, _)| {
                    (
                        name.to_string(),
                        tensor_to_json(s.maps().get(name).expect("known")),
                    )
                })
                .collect(),
            linear_maps: self
                .linear_maps
                .iter()
                .map(|(k, m)| (k.clone(), tensor_to_json(m)))
                .collect(),
        };
        serde_json::to_value(raw).expect("documents serialize")
    }

    /// Pretty JSON with a trailing newline.
    pub fn to_json_string(&self) -> String {
        let mut s =
            serde_json::to_string_pretty(&self.to_json_value()).expect("documents serialize");
        s.push('\n');
        s
    }

    pub fn write(&self, path: &Path) -> CliResult<()> {
        std::fs::write(path, self.to_json_string()).map_err(|source| CliError::Io {
            path: path.display().to_string(),
            source,
        })
    }

    pub fn map(&self, name: &str) -> CliResult<&MultiMap> {
        self.linear_maps.get(name).ok_or_else(|| {
            let known: Vec<&str> = self.linear_maps.keys().map(String::as_str).collect();
            CliError::Usage(format!(
                "no linear map named {name:?}; the document has {known:?}"
            ))
        })
    }

    pub fn from_fixture(fx: &Fixture) -> Self {
        AlgebraDocument {
            name: Some(fx.name.to_string()),
            kind: fx.kind.map(|k| k.name().to_string()),
            structure: fx.structure.clone(),
            linear_maps: fx.maps.iter().cloned().collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_names() {
        assert_eq!(parse_field("Q").unwrap(), Field::Rational);
        assert_eq!(parse_field("rational").unwrap(), Field::Rational);
        assert_eq!(parse_field("F5").unwrap(), Field::Prime(5));
        assert_eq!(parse_field("f2").unwrap(), Field::Prime(2));
        assert_eq!(parse_field("7").unwrap(), Field::Prime(7));
        for bad in ["F4", "F1", "R", "", "F"] {
            assert!(matches!(parse_field(bad), Err(CliError::Usage(_))), "{bad}");
        }
    }

    #[test]
    fn tensors_nest_output_innermost() {
        let f = Field::Prime(5);
        let mut m = MultiMap::zeros(f, &[2, 1], 3).unwrap();
        m.set(&[1, 0], 2, f.from_i64(4));
        let v = tensor_to_json(&m);
        assert_eq!(v, serde_json::json!([[["0", "0", "0"]], [["0", "0", "4"]]]));
        assert_eq!(tensor_from_json(&v, f, &[2, 1], 3, "t").unwrap(), m);
        let sparse = sparse_to_json(&m);
        assert_eq!(
            sparse,
            serde_json::json!([{"index": [1, 0], "output": 2, "value": "4"}])
        );
    }

    #[test]
    fn integers_are_accepted_as_scalars() {
        let f = Field::Rational;
        let m = tensor_from_json(&serde_json::json!([[-2, "3/4"]]), f, &[1], 2, "t").unwrap();
        assert_eq!(m.row(&[0]), &[f.from_i64(-2), f.ratio(3, 4).unwrap()]);
    }
}
