//! R-matrix files: JSON with `dim`, optional `q`, and sparse `entries`.
//!
//! ```json
//! { "dim": 2, "q": "q",
//!   "entries": [ { "k": 1, "l": 2, "i": 2, "j": 1, "value": "1" } ] }
//! ```
//!
//! Indices are 1-based and `value` is `R^{kl}_{ij}`; omitted entries are zero.

use std::collections::HashSet;

use braided_core::exact::parse_scalar;
use braided_core::{Scalar, ScalarMatrix};
use serde::Deserialize;

use crate::InputError;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RFile {
    dim: usize,
    #[serde(default)]
    q: Option<String>,
    entries: Vec<Entry>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct Entry {
    k: usize,
    l: usize,
    i: usize,
    j: usize,
    value: String,
}

/// The matrix and the declared Hecke parameter.
pub struct Loaded {
    pub dim: usize,
    pub matrix: ScalarMatrix,
    pub q: Option<Scalar>,
}

fn value_error(what: String, e: braided_core::exact::ParseError) -> InputError {
    InputError::Parse { context: what, line: None, column: Some(e.pos + 1), message: e.msg }
}

pub fn parse(text: &str) -> Result<Loaded, InputError> {
    let file: RFile = serde_json::from_str(text).map_err(|e| InputError::Parse {
        context: "R-matrix file".into(),
        line: Some(e.line()),
        column: Some(e.column()),
        message: e.to_string(),
    })?;
    let d = file.dim;
    if d == 0 {
        return Err(InputError::Invalid("dim must be positive".into()));
    }
    let q = file.q.as_deref().map(parse_scalar).transpose().map_err(|e| value_error("q".into(), e))?;
    let mut matrix = ScalarMatrix::zeros(d * d, d * d);
    let mut seen = HashSet::new();
    for (n, e) in file.entries.iter().enumerate() {
        let idx = [e.k, e.l, e.i, e.j];
        if idx.iter().any(|&x| x == 0 || x > d) {
            return Err(InputError::Invalid(format!("entries[{n}]: index out of range 1..={d}: {idx:?}")));
        }
        if !seen.insert(idx) {
            return Err(InputError::Invalid(format!("entries[{n}]: duplicate entry {idx:?}")));
        }
        let v = parse_scalar(&e.value).map_err(|err| value_error(format!("entries[{n}].value"), err))?;
        matrix.set((e.k - 1) * d + e.l - 1, (e.i - 1) * d + e.j - 1, v);
    }
    Ok(Loaded { dim: d, matrix, q })
}
