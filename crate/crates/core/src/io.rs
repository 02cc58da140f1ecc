//! Reading and writing complexes: a sparse JSON chain format and plain facet
//! lists, plus DOT output for graphs.
//!
//! The JSON format is
//!
//! ```json
//! {"dims": 1,
//!  "cells": {"0": ["a", "b"], "1": ["ab"]},
//!  "boundary": {"1": [[0, 0, -1], [1, 0, 1]]},
//!  "augmented": true}
//! ```
//!
//! with `[row, col, value]` triples; values may be JSON numbers or decimal
//! strings. The augmentation `∂_0` is implied by `augmented` (default true).

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::Deserialize;
use serde_json::{json, Value};

use crate::complex::{Chain, ChainComplex};
use crate::error::{Error, Result};
use crate::linalg::IntMatrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    JsonChain,
    SimplicialFacets,
}

#[derive(Clone, Debug)]
pub struct ComplexFile {
    pub format: Format,
    pub path: String,
    pub complex: ChainComplex,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum Entry {
    Int(i64),
    Text(String),
}

impl Entry {
    fn value(&self) -> Result<BigInt> {
        match self {
            Entry::Int(v) => Ok(BigInt::from(*v)),
            Entry::Text(s) => s
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("boundary entry {s:?} is not an integer"))),
        }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawComplex {
    dims: usize,
    cells: BTreeMap<String, Vec<String>>,
    #[serde(default)]
    boundary: BTreeMap<String, Vec<(usize, usize, Entry)>>,
    #[serde(default = "default_augmented")]
    augmented: bool,
}

fn default_augmented() -> bool {
    true
}

fn dim_key(key: &str, what: &str, max: usize) -> Result<usize> {
    let d: usize = key
        .parse()
        .map_err(|_| Error::Parse(format!("{what} key {key:?} is not a dimension")))?;
    if d > max {
        return Err(Error::Parse(format!("{what} key {d} exceeds dims = {max}")));
    }
    Ok(d)
}

pub fn parse_json(text: &str) -> Result<ChainComplex> {
    let raw: RawComplex = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let mut cells = vec![None; raw.dims + 1];
    for (key, labels) in raw.cells {
        cells[dim_key(&key, "cells", raw.dims)?] = Some(labels);
    }
    let cells: Vec<Vec<String>> = cells
        .into_iter()
        .enumerate()
        .map(|(d, c)| c.ok_or_else(|| Error::Parse(format!("missing cells for dimension {d}"))))
        .collect::<Result<_>>()?;
    let mut boundaries: Vec<IntMatrix> = (1..=raw.dims)
        .map(|d| IntMatrix::zeros(cells[d - 1].len(), cells[d].len()))
        .collect();
    for (key, triples) in raw.boundary {
        let d = dim_key(&key, "boundary", raw.dims)?;
        if d == 0 {
            return Err(Error::Parse(
                "∂_0 is implied by \"augmented\" and cannot be given".into(),
            ));
        }
        let m = &mut boundaries[d - 1];
        let mut seen = std::collections::BTreeSet::new();
        for (r, c, v) in triples {
            if r >= m.rows() || c >= m.cols() {
                return Err(Error::Parse(format!(
                    "entry ({r}, {c}) of ∂_{d} is outside its {}x{} shape",
                    m.rows(),
                    m.cols()
                )));
            }
            if !seen.insert((r, c)) {
                return Err(Error::Parse(format!("entry ({r}, {c}) of ∂_{d} given twice")));
            }
            m.set(r, c, v.value()?);
        }
    }
    ChainComplex::new(cells, boundaries, raw.augmented)
}

/// One facet per line, vertex names separated by whitespace or commas;
/// `#` starts a comment.
pub fn parse_facets(text: &str) -> Result<ChainComplex> {
    let facets: Vec<Vec<&str>> = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or(""))
        .map(|l| {
            l.split(|c: char| c.is_whitespace() || c == ',')
                .filter(|s| !s.is_empty())
                .collect::<Vec<_>>()
        })
        .filter(|f| !f.is_empty())
        .collect();
    if facets.is_empty() {
        return Err(Error::Parse("no facets found".into()));
    }
    ChainComplex::from_simplicial(&facets)
}

pub fn parse(text: &str, format: Format) -> Result<ChainComplex> {
    match format {
        Format::JsonChain => parse_json(text),
        Format::SimplicialFacets => parse_facets(text),
    }
}

/// JSON for `.json` files or content starting with `{`, facets otherwise.
pub fn detect_format(path: &Path, text: &str) -> Format {
    let json_ext = path.extension().is_some_and(|e| e.eq_ignore_ascii_case("json"));
    if json_ext || text.trim_start().starts_with('{') {
        Format::JsonChain
    } else {
        Format::SimplicialFacets
    }
}

pub fn load(path: impl AsRef<Path>) -> Result<ComplexFile> {
    let path = path.as_ref();
    let text =
        std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
    let format = detect_format(path, &text);
    Ok(ComplexFile {
        format,
        path: path.display().to_string(),
        complex: parse(&text, format)?,
    })
}

fn entry_json(v: &BigInt) -> Value {
    match v.to_i64() {
        Some(x) => json!(x),
        None => json!(v.to_string()),
    }
}

/// Canonical JSON value: sorted keys, triples in row-major order.
pub fn to_json_value(x: &ChainComplex) -> Value {
    let mut cells = serde_json::Map::new();
    let mut boundary = serde_json::Map::new();
    for d in 0..=x.top_dim() {
        cells.insert(d.to_string(), json!(x.cells(d)));
        if d > 0 {
            let b = x.boundary(d as isize);
            let triples: Vec<Value> = b.triples().map(|(r, c, v)| json!([r, c, entry_json(v)])).collect();
            boundary.insert(d.to_string(), Value::Array(triples));
        }
    }
    json!({
        "dims": x.top_dim(),
        "cells": cells,
        "boundary": boundary,
        "augmented": x.is_augmented(),
    })
}

pub fn to_json(x: &ChainComplex) -> String {
    serde_json::to_string_pretty(&to_json_value(x)).expect("json values serialize")
}

/// Coefficients separated by commas or whitespace.
pub fn parse_chain(text: &str, dim: usize) -> Result<Chain> {
    let coeffs = text
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<BigInt>()
                .map_err(|_| Error::Parse(format!("coefficient {s:?} is not an integer")))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Chain::new(dim, coeffs))
}

/// DOT digraph of a 1-dimensional complex, edges labeled with the
/// coefficients of `weights` when given.
pub fn to_dot(x: &ChainComplex, weights: Option<&Chain>) -> Result<String> {
    if x.top_dim() != 1 {
        return Err(Error::ShapeMismatch(format!(
            "DOT output needs a graph, got top dimension {}",
            x.top_dim()
        )));
    }
    let d = x.boundary(1);
    let mut out = String::from("digraph G {\n");
    for v in x.cells(0) {
        let _ = writeln!(out, "  {v:?};");
    }
    for (e, name) in x.cells(1).iter().enumerate() {
        let col = d.column(e);
        let tail = col.iter().position(|c| *c < BigInt::zero());
        let head = col.iter().position(|c| *c > BigInt::zero());
        let label = match weights {
            Some(w) => w.coeffs[e].to_string(),
            None => name.clone(),
        };
        match (tail, head) {
            (Some(u), Some(v)) => {
                let _ = writeln!(out, "  {:?} -> {:?} [label={:?}];", x.cells(0)[u], x.cells(0)[v], label);
            }
            // loops and other non-incidence columns are drawn as free nodes
            _ => {
                let _ = writeln!(out, "  {:?} [shape=box, label={:?}];", format!("edge:{name}"), label);
            }
        }
    }
    out.push_str("}\n");
    Ok(out)
}
