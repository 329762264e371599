//! The JSON interchange format.
//!
//! ```json
//! {
//!   "schema": "hombax/1",
//!   "kind": "hom-quasigroup",
//!   "n": 2,
//!   "op": [
//!     [0, 1],
//!     [0, 1]
//!   ],
//!   "alpha": [0, 0]
//! }
//! ```
//!
//! Kinds and their fields:
//!
//! | kind            | fields                      |
//! |-----------------|-----------------------------|
//! | `quadratic`     | `lam`, `rho`                |
//! | `hom-quadratic` | `lam`, `rho`, `alpha`       |
//! | `quasigroup`    | `op`                        |
//! | `hom-quasigroup`| `op`, `alpha`               |
//! | `linear-spec`   | `linear` (`m`, `d`, `phi`, `psi`, `alpha`) |
//!
//! `lam[x][y] = λ_x(y)`, `rho[y][x] = ρ_y(x)`, `op[x][y] = x·y`. Every kind
//! may carry `meta` with an optional `name` and `provenance`. Output is
//! canonical: fixed key order, one table row per line, so equal structures
//! serialize to equal bytes.

use std::fmt::Write as _;

use serde::Deserialize;

use crate::constructions::{LinearSpec, linear_structure};
use crate::error::{Error, Result};
use crate::finite::{FiniteMap, SquareTable};
use crate::quadset::{HomQuadraticSet, QuadraticSet};
use crate::quasigroup::{HomQuasigroup, LeftQuasigroup};

pub const SCHEMA: &str = "hombax/1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Kind {
    Quadratic,
    HomQuadratic,
    Quasigroup,
    HomQuasigroup,
    LinearSpec,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::Quadratic => "quadratic",
            Kind::HomQuadratic => "hom-quadratic",
            Kind::Quasigroup => "quasigroup",
            Kind::HomQuasigroup => "hom-quasigroup",
            Kind::LinearSpec => "linear-spec",
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Meta {
    pub name: Option<String>,
    pub provenance: Option<String>,
}

impl Meta {
    pub fn named(name: &str, provenance: &str) -> Self {
        Meta {
            name: Some(name.to_string()),
            provenance: Some(provenance.to_string()),
        }
    }

    fn is_empty(&self) -> bool {
        self.name.is_none() && self.provenance.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Structure {
    Quadratic(QuadraticSet),
    HomQuadratic(HomQuadraticSet),
    Quasigroup(LeftQuasigroup),
    HomQuasigroup(HomQuasigroup),
    Linear(LinearSpec),
}

impl Structure {
    pub fn kind(&self) -> Kind {
        match self {
            Structure::Quadratic(_) => Kind::Quadratic,
            Structure::HomQuadratic(_) => Kind::HomQuadratic,
            Structure::Quasigroup(_) => Kind::Quasigroup,
            Structure::HomQuasigroup(_) => Kind::HomQuasigroup,
            Structure::Linear(_) => Kind::LinearSpec,
        }
    }

    /// The solution side, with `α = id` for plain quadratic sets.
    pub fn as_hom_quadratic(&self) -> Option<HomQuadraticSet> {
        match self {
            Structure::Quadratic(q) => Some(HomQuadraticSet::plain(q.clone())),
            Structure::HomQuadratic(h) => Some(h.clone()),
            _ => None,
        }
    }

    /// The quasigroup side, with `α = id` for plain quasigroups and the
    /// materialized table for linear specs.
    pub fn as_hom_quasigroup(&self) -> Result<Option<HomQuasigroup>> {
        Ok(match self {
            Structure::Quasigroup(q) => Some(HomQuasigroup::plain(q.clone())),
            Structure::HomQuasigroup(h) => Some(h.clone()),
            Structure::Linear(spec) => Some(linear_structure(spec)?.0),
            _ => None,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureDocument {
    pub structure: Structure,
    pub meta: Meta,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDocument {
    schema: String,
    kind: Kind,
    n: Option<usize>,
    lam: Option<Vec<Vec<usize>>>,
    rho: Option<Vec<Vec<usize>>>,
    op: Option<Vec<Vec<usize>>>,
    alpha: Option<Vec<usize>>,
    linear: Option<LinearSpec>,
    #[serde(default)]
    meta: Meta,
}

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

fn require<T>(field: Option<T>, name: &str, kind: Kind) -> Result<T> {
    field.ok_or_else(|| parse_err(format!("kind \"{}\" requires field \"{name}\"", kind.name())))
}

fn forbid<T>(field: &Option<T>, name: &str, kind: Kind) -> Result<()> {
    match field {
        Some(_) => Err(parse_err(format!(
            "field \"{name}\" is not allowed for kind \"{}\"",
            kind.name()
        ))),
        None => Ok(()),
    }
}

fn table(rows: Vec<Vec<usize>>, name: &str, n: usize) -> Result<SquareTable> {
    if rows.len() != n {
        return Err(parse_err(format!("{name} has {} rows, expected n = {n}", rows.len())));
    }
    for (i, row) in rows.iter().enumerate() {
        if row.len() != n {
            return Err(parse_err(format!(
                "{name}[{i}] has {} entries, expected n = {n}",
                row.len()
            )));
        }
        if let Some((j, v)) = row.iter().enumerate().find(|&(_, &v)| v >= n) {
            return Err(parse_err(format!("{name}[{i}][{j}] = {v} is out of range for n = {n}")));
        }
    }
    SquareTable::new(rows)
}

fn alpha_map(values: Vec<usize>, n: usize) -> Result<FiniteMap> {
    if values.len() != n {
        return Err(parse_err(format!(
            "alpha has {} entries, expected n = {n}",
            values.len()
        )));
    }
    if let Some((i, v)) = values.iter().enumerate().find(|&(_, &v)| v >= n) {
        return Err(parse_err(format!("alpha[{i}] = {v} is out of range for n = {n}")));
    }
    FiniteMap::new(values)
}

impl StructureDocument {
    pub fn new(structure: Structure) -> Self {
        StructureDocument {
            structure,
            meta: Meta::default(),
        }
    }

    pub fn with_meta(mut self, meta: Meta) -> Self {
        self.meta = meta;
        self
    }

    /// Parses and validates a document. Syntax and type errors carry the
    /// line and column; range errors name the offending field and index.
    pub fn parse(text: &str) -> Result<Self> {
        let raw: RawDocument = serde_json::from_str(text).map_err(|e| parse_err(e.to_string()))?;
        if raw.schema != SCHEMA {
            return Err(parse_err(format!(
                "unsupported schema \"{}\", expected \"{SCHEMA}\"",
                raw.schema
            )));
        }
        let kind = raw.kind;
        if kind == Kind::LinearSpec {
            for (f, name) in [(&raw.lam, "lam"), (&raw.rho, "rho"), (&raw.op, "op")] {
                forbid(f, name, kind)?;
            }
            forbid(&raw.alpha, "alpha", kind)?;
            let spec = require(raw.linear, "linear", kind)?;
            spec.validate().map_err(|e| parse_err(format!("linear: {e}")))?;
            let size = spec.carrier_size()?;
            if let Some(n) = raw.n.filter(|&n| n != size) {
                return Err(parse_err(format!("n = {n} but linear.m^linear.d = {size}")));
            }
            return Ok(StructureDocument {
                structure: Structure::Linear(spec),
                meta: raw.meta,
            });
        }
        forbid(&raw.linear, "linear", kind)?;
        let n = require(raw.n, "n", kind)?;
        if n == 0 {
            return Err(parse_err("n must be positive"));
        }
        let hom = matches!(kind, Kind::HomQuadratic | Kind::HomQuasigroup);
        let alpha = if hom {
            Some(alpha_map(require(raw.alpha, "alpha", kind)?, n)?)
        } else {
            forbid(&raw.alpha, "alpha", kind)?;
            None
        };
        let structure = match kind {
            Kind::Quadratic | Kind::HomQuadratic => {
                forbid(&raw.op, "op", kind)?;
                let lam = table(require(raw.lam, "lam", kind)?, "lam", n)?;
                let rho = table(require(raw.rho, "rho", kind)?, "rho", n)?;
                let q = QuadraticSet::new(lam, rho)?;
                match alpha {
                    Some(a) => Structure::HomQuadratic(HomQuadraticSet::new(q, a)?),
                    None => Structure::Quadratic(q),
                }
            }
            Kind::Quasigroup | Kind::HomQuasigroup => {
                forbid(&raw.lam, "lam", kind)?;
                forbid(&raw.rho, "rho", kind)?;
                let op = table(require(raw.op, "op", kind)?, "op", n)?;
                let q = LeftQuasigroup::new(op).map_err(|e| match e {
                    Error::DegenerateRow { row, y1, y2, image } => parse_err(format!(
                        "op[{row}] is not a permutation: op[{row}][{y1}] = op[{row}][{y2}] = {image}"
                    )),
                    other => other,
                })?;
                match alpha {
                    Some(a) => Structure::HomQuasigroup(HomQuasigroup::new_unchecked(q, a)),
                    None => Structure::Quasigroup(q),
                }
            }
            Kind::LinearSpec => unreachable!("handled above"),
        };
        Ok(StructureDocument {
            structure,
            meta: raw.meta,
        })
    }

    /// Canonical serialization, ending in a newline.
    pub fn to_json(&self) -> String {
        let mut out = String::new();
        self.write_json(&mut out, 0);
        out.push('\n');
        out
    }

    pub(crate) fn write_json(&self, out: &mut String, indent: usize) {
        let pad = " ".repeat(indent);
        let inner = " ".repeat(indent + 2);
        let mut fields: Vec<String> = vec![
            format!("\"schema\": {}", json_str(SCHEMA)),
            format!("\"kind\": {}", json_str(self.structure.kind().name())),
        ];
        let matrix = |rows: Vec<Vec<String>>, depth: usize| write_rows(rows, indent + depth);
        let quadratic = match &self.structure {
            Structure::Quadratic(q) => Some(q),
            Structure::HomQuadratic(h) => Some(h.base()),
            _ => None,
        };
        let quasigroup = match &self.structure {
            Structure::Quasigroup(q) => Some(q),
            Structure::HomQuasigroup(h) => Some(h.base()),
            _ => None,
        };
        if let Some(q) = quadratic {
            fields.push(format!("\"n\": {}", q.n()));
            fields.push(format!("\"lam\": {}", matrix(stringify(&q.lam_table().to_rows()), 2)));
            fields.push(format!("\"rho\": {}", matrix(stringify(&q.rho_table().to_rows()), 2)));
        }
        if let Some(q) = quasigroup {
            fields.push(format!("\"n\": {}", q.n()));
            fields.push(format!("\"op\": {}", matrix(stringify(&q.table().to_rows()), 2)));
        }
        if let Structure::Linear(spec) = &self.structure {
            let deeper = " ".repeat(indent + 4);
            let mat = |m: &Vec<Vec<i64>>| {
                write_rows(
                    m.iter().map(|r| r.iter().map(i64::to_string).collect()).collect(),
                    indent + 4,
                )
            };
            fields.push(format!(
                    "\"linear\": {{\n{deeper}\"m\": {},\n{deeper}\"d\": {},\n{deeper}\"phi\": {},\n{deeper}\"psi\": {},\n{deeper}\"alpha\": {}\n{inner}}}",
                    spec.m,
                    spec.d,
                    mat(&spec.phi),
                    mat(&spec.psi),
                    mat(&spec.alpha)
                ));
        }
        let alpha = match &self.structure {
            Structure::HomQuadratic(h) => Some(h.alpha()),
            Structure::HomQuasigroup(h) => Some(h.alpha()),
            _ => None,
        };
        if let Some(a) = alpha {
            fields.push(format!(
                "\"alpha\": {}",
                inline(a.as_slice().iter().map(usize::to_string))
            ));
        }
        if !self.meta.is_empty() {
            let deeper = " ".repeat(indent + 4);
            let mut m = Vec::new();
            if let Some(name) = &self.meta.name {
                m.push(format!("{deeper}\"name\": {}", json_str(name)));
            }
            if let Some(p) = &self.meta.provenance {
                m.push(format!("{deeper}\"provenance\": {}", json_str(p)));
            }
            fields.push(format!("\"meta\": {{\n{}\n{inner}}}", m.join(",\n")));
        }
        let _ = write!(out, "{pad}{{\n{inner}{}\n{pad}}}", fields.join(&format!(",\n{inner}")));
    }
}

/// Serializes several documents as one JSON array.
pub fn documents_to_json(docs: &[StructureDocument]) -> String {
    let mut out = String::from("[\n");
    for (i, d) in docs.iter().enumerate() {
        d.write_json(&mut out, 2);
        out.push_str(if i + 1 < docs.len() { ",\n" } else { "\n" });
    }
    out.push_str("]\n");
    out
}

fn json_str(s: &str) -> String {
    serde_json::to_string(s).expect("strings serialize")
}

fn stringify(rows: &[Vec<usize>]) -> Vec<Vec<String>> {
    rows.iter().map(|r| r.iter().map(usize::to_string).collect()).collect()
}

fn inline(items: impl Iterator<Item = String>) -> String {
    format!("[{}]", items.collect::<Vec<_>>().join(", "))
}

/// `[` then one row per line at `indent + 2`, then `]` at `indent`.
fn write_rows(rows: Vec<Vec<String>>, indent: usize) -> String {
    let pad = " ".repeat(indent);
    let inner = " ".repeat(indent + 2);
    let body: Vec<String> = rows
        .into_iter()
        .map(|r| format!("{inner}{}", inline(r.into_iter())))
        .collect();
    format!("[\n{}\n{pad}]", body.join(",\n"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{example_4order, matrix_spec, trivial_solution};

    fn round_trip(doc: &StructureDocument) {
        let text = doc.to_json();
        let back = StructureDocument::parse(&text).unwrap();
        assert_eq!(&back, doc);
        assert_eq!(back.to_json(), text);
        let generic: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(generic["schema"], SCHEMA);
    }

    #[test]
    fn every_kind_round_trips() {
        let four = example_4order();
        let t = trivial_solution(2, &FiniteMap::new(vec![1, 0]).unwrap()).unwrap();
        let docs = [
            StructureDocument::new(Structure::HomQuasigroup(four.clone())),
            StructureDocument::new(Structure::Quasigroup(four.base().clone())).with_meta(Meta::named("x \"y\"", "z")),
            StructureDocument::new(Structure::HomQuadratic(t.clone())),
            StructureDocument::new(Structure::Quadratic(t.base().clone())),
            StructureDocument::new(Structure::Linear(matrix_spec(3).unwrap())),
        ];
        for d in &docs {
            round_trip(d);
        }
        let arr: serde_json::Value = serde_json::from_str(&documents_to_json(&docs)).unwrap();
        assert_eq!(arr.as_array().unwrap().len(), 5);
    }

    #[test]
    fn canonical_layout() {
        let doc = StructureDocument::new(Structure::HomQuasigroup(
            HomQuasigroup::new(
                LeftQuasigroup::right_zero(2).unwrap(),
                FiniteMap::constant(2, 0).unwrap(),
            )
            .unwrap(),
        ))
        .with_meta(Meta {
            name: Some("rz".into()),
            provenance: None,
        });
        let expected = "{\n  \"schema\": \"hombax/1\",\n  \"kind\": \"hom-quasigroup\",\n  \"n\": 2,\n  \"op\": [\n    [0, 1],\n    [0, 1]\n  ],\n  \"alpha\": [0, 0],\n  \"meta\": {\n    \"name\": \"rz\"\n  }\n}\n";
        assert_eq!(doc.to_json(), expected);
    }

    fn parse_error(text: &str) -> String {
        match StructureDocument::parse(text) {
            Err(Error::Parse(m)) => m,
            other => panic!("expected a parse error, got {other:?}"),
        }
    }

    #[test]
    fn errors_name_the_field() {
        let base =
            r#"{"schema": "hombax/1", "kind": "hom-quasigroup", "n": 2, "op": [[0, 1], [0, 1]], "alpha": [0, 0]}"#;
        assert!(StructureDocument::parse(base).is_ok());
        assert!(parse_error(&base.replace("[[0, 1], [0, 1]]", "[[0, 1], [0, 2]]")).contains("op[1][1] = 2"));
        assert!(
            parse_error(&base.replace("[[0, 1], [0, 1]]", "[[0, 0], [0, 1]]")).contains("op[0] is not a permutation")
        );
        assert!(parse_error(&base.replace("\"alpha\": [0, 0]", "\"alpha\": [0]")).contains("alpha has 1 entries"));
        assert!(parse_error(&base.replace("\"alpha\": [0, 0]", "\"alpha\": [0, 5]")).contains("alpha[1] = 5"));
        assert!(parse_error(&base.replace("hombax/1", "hombax/2")).contains("unsupported schema"));
        assert!(parse_error(&base.replace("\"n\": 2", "\"n\": 2, \"extra\": 1")).contains("unknown field"));
        assert!(parse_error(&base.replace("\"alpha\": [0, 0]", "\"alpha\": [0, -1]")).contains("line 1"));
        assert!(parse_error(&base.replace("\"alpha\": [0, 0]", "\"alpha\": [0, 0.5]")).contains("line 1"));
        assert!(parse_error(&base.replace(", \"alpha\": [0, 0]", "")).contains("requires field \"alpha\""));
        assert!(parse_error(&base.replace("hom-quasigroup", "quasigroup")).contains("not allowed"));
        assert!(parse_error("{\n  \"schema\": \"hombax/1\",\n  oops\n}").contains("line 3"));
        assert!(parse_error("").contains("line 1"));
    }

    #[test]
    fn linear_spec_size_is_checked() {
        let text = r#"{"schema": "hombax/1", "kind": "linear-spec", "n": 4, "linear": {"m": 3, "d": 1, "phi": [[0]], "psi": [[1]], "alpha": [[1]]}}"#;
        assert!(parse_error(text).contains("m^linear.d = 3"));
        let ok = text.replace("\"n\": 4, ", "");
        let doc = StructureDocument::parse(&ok).unwrap();
        assert_eq!(doc.structure.as_hom_quasigroup().unwrap().unwrap().n(), 3);
    }
}
