//! JSON file formats for algebras and subspaces.
//!
//! Algebra files list only nonzero products:
//!
//! ```json
//! {
//!   "format_version": "1",
//!   "dim": 3,
//!   "basis": ["e", "h", "f"],
//!   "table": [[0, 1, [[0, "-2"]]], [0, 2, [[1, "1"]]]]
//! }
//! ```
//!
//! meaning `e h = -2 e` and `e f = h`. Subspace files reuse the envelope with a
//! `rows` matrix of rational strings.

use std::collections::BTreeSet;
use std::fs;
use std::path::Path;

use leibniz_core::exactlin::{format_scalar, parse_scalar};
use leibniz_core::{LeibnizAlgebra, StructureTable, Subspace, Vector};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

pub const FORMAT_VERSION: &str = "1";

/// `[i, j, [[k, "p/q"], ...]]`: `b_i b_j = sum (p/q) b_k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableEntry(pub usize, pub usize, pub Vec<(usize, String)>);

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub format_version: String,
    pub dim: usize,
    pub basis: Vec<String>,
    pub table: Vec<TableEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SubspaceFile {
    pub format_version: String,
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub basis: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

fn check_version(v: &str) -> Result<(), CliError> {
    if v != FORMAT_VERSION {
        return Err(CliError::Format(format!("unsupported format_version `{v}`")));
    }
    Ok(())
}

fn scalar(s: &str) -> Result<leibniz_core::Scalar, CliError> {
    parse_scalar(s).ok_or_else(|| CliError::Format(format!("`{s}` is not a rational p/q")))
}

impl AlgebraFile {
    pub fn from_algebra(a: &LeibnizAlgebra) -> Self {
        let n = a.dim();
        let mut table = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let terms: Vec<(usize, String)> = a
                    .table()
                    .basis_product(i, j)
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !num_traits::Zero::is_zero(*c))
                    .map(|(k, c)| (k, format_scalar(c)))
                    .collect();
                if !terms.is_empty() {
                    table.push(TableEntry(i, j, terms));
                }
            }
        }
        AlgebraFile {
            format_version: FORMAT_VERSION.into(),
            dim: n,
            basis: a.labels().to_vec(),
            table,
        }
    }

    /// Structure table with shape checks only; the Leibniz identity is not enforced here.
    pub fn to_algebra_unchecked(&self) -> Result<LeibnizAlgebra, CliError> {
        check_version(&self.format_version)?;
        let n = self.dim;
        if self.basis.len() != n {
            return Err(CliError::Format(format!(
                "basis has {} labels but dim is {n}",
                self.basis.len()
            )));
        }
        let mut table = StructureTable::zeros(n);
        let mut seen = BTreeSet::new();
        for TableEntry(i, j, terms) in &self.table {
            if *i >= n || *j >= n {
                return Err(CliError::Format(format!("product ({i}, {j}) out of range")));
            }
            if !seen.insert((*i, *j)) {
                return Err(CliError::Format(format!("product ({i}, {j}) listed twice")));
            }
            let mut ks = BTreeSet::new();
            for (k, c) in terms {
                if *k >= n {
                    return Err(CliError::Format(format!("coordinate {k} out of range")));
                }
                if !ks.insert(*k) {
                    return Err(CliError::Format(format!("coordinate {k} repeated in ({i}, {j})")));
                }
                table.set(*i, *j, *k, scalar(c)?);
            }
        }
        Ok(LeibnizAlgebra::new_unchecked(self.basis.clone(), table)?)
    }
}

impl SubspaceFile {
    pub fn from_subspace(s: &Subspace, labels: &[String]) -> Self {
        SubspaceFile {
            format_version: FORMAT_VERSION.into(),
            dim: s.ambient_dim(),
            basis: labels.to_vec(),
            rows: rows_as_strings(s),
        }
    }

    /// Canonicalized span of the listed rows.
    pub fn to_subspace(&self) -> Result<Subspace, CliError> {
        check_version(&self.format_version)?;
        let rows = self
            .rows
            .iter()
            .map(|r| {
                if r.len() != self.dim {
                    return Err(CliError::Format(format!(
                        "row has {} entries but dim is {}",
                        r.len(),
                        self.dim
                    )));
                }
                r.iter().map(|s| scalar(s)).collect::<Result<Vector, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Subspace::span(self.dim, &rows))
    }
}

pub fn vector_as_strings(v: &[leibniz_core::Scalar]) -> Vec<String> {
    v.iter().map(format_scalar).collect()
}

pub fn rows_as_strings(s: &Subspace) -> Vec<Vec<String>> {
    s.basis_vectors().map(vector_as_strings).collect()
}

fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Io(path.display().to_string(), e))?;
    serde_json::from_str(&text).map_err(|e| CliError::Json(path.display().to_string(), e))
}

pub fn read_algebra_file(path: &Path) -> Result<AlgebraFile, CliError> {
    read_json(path)
}

pub fn read_subspace(path: &Path) -> Result<Subspace, CliError> {
    read_json::<SubspaceFile>(path)?.to_subspace()
}

pub fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<(), CliError> {
    let mut text = serde_json::to_string_pretty(value).expect("serializable");
    text.push('\n');
    fs::write(path, text).map_err(|e| CliError::Io(path.display().to_string(), e))
}
