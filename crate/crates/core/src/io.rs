//! The JSON algebra file format.
//!
//! ```json
//! {
//!   "name": "sl2",
//!   "dim": 3,
//!   "basis": ["h", "e", "f"],
//!   "bracket": { "0,1": [[1, "2"]], "1,2": [[0, "1"]] },
//!   "phi": [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]],
//!   "H": [0]
//! }
//! ```
//!
//! `"i,j": [[k, c], ...]` means `[e_i, e_j] = sum c e_k`; missing keys are
//! zero. `phi` is optional (identity) and acts on column vectors, so its
//! column `j` is `phi(e_j)`. `H` lists basis indices or explicit vectors of
//! rational strings.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::algebra::HomAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{format_scalar, parse_scalar, unit_vector, zero_vector, Matrix, Scalar, Vector};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub name: String,
    pub dim: usize,
    pub basis: Vec<String>,
    #[serde(default)]
    pub bracket: BTreeMap<String, Vec<(usize, String)>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub phi: Option<Vec<Vec<String>>>,
    #[serde(rename = "H", default)]
    pub h: HSpec,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum HSpec {
    Indices(Vec<usize>),
    Vectors(Vec<Vec<String>>),
}

impl Default for HSpec {
    fn default() -> Self {
        HSpec::Indices(Vec::new())
    }
}

fn json_error(origin: &str, e: &serde_json::Error) -> Error {
    Error::Parse {
        location: format!("{origin}: line {}, column {}", e.line(), e.column()),
        message: e.to_string(),
    }
}

fn scalar(field: &str, text: &str) -> Result<Scalar> {
    parse_scalar(text).ok_or_else(|| Error::NonRational {
        field: field.into(),
        value: text.into(),
    })
}

fn in_range(field: &str, index: usize, bound: usize) -> Result<usize> {
    if index < bound {
        Ok(index)
    } else {
        Err(Error::IndexOutOfRange {
            field: field.into(),
            index,
            bound,
        })
    }
}

fn parse_key(key: &str) -> Result<(usize, usize)> {
    let bad = || Error::Parse {
        location: format!("bracket[{key:?}]"),
        message: "keys must have the form \"i,j\"".into(),
    };
    let (i, j) = key.split_once(',').ok_or_else(bad)?;
    let i = i.trim().parse().map_err(|_| bad())?;
    let j = j.trim().parse().map_err(|_| bad())?;
    Ok((i, j))
}

/// A square matrix of rational strings.
pub fn matrix_from_strings(field: &str, rows: &[Vec<String>], n: Option<usize>) -> Result<Matrix> {
    let size = n.unwrap_or(rows.len());
    if rows.len() != size {
        return Err(Error::Parse {
            location: field.into(),
            message: format!("expected {size} rows, found {}", rows.len()),
        });
    }
    let mut out = Vec::with_capacity(size);
    for (r, row) in rows.iter().enumerate() {
        if row.len() != size {
            return Err(Error::Parse {
                location: format!("{field}[{r}]"),
                message: format!("expected {size} entries, found {}", row.len()),
            });
        }
        out.push(
            row.iter()
                .enumerate()
                .map(|(c, s)| scalar(&format!("{field}[{r}][{c}]"), s))
                .collect::<Result<Vector>>()?,
        );
    }
    if size == 0 {
        return Ok(Matrix::zeros(0, 0));
    }
    Matrix::from_rows(out)
}

pub fn matrix_to_strings(m: &Matrix) -> Vec<Vec<String>> {
    m.to_rows()
        .iter()
        .map(|row| row.iter().map(format_scalar).collect())
        .collect()
}

impl AlgebraFile {
    pub fn from_json(text: &str, origin: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| json_error(origin, &e))
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("algebra files always serialize");
        s.push('\n');
        s
    }

    /// Validates and converts to an algebra plus its `H` basis.
    pub fn build(&self) -> Result<(HomAlgebra, Vec<Vector>)> {
        let n = self.dim;
        if self.basis.len() != n {
            return Err(Error::Parse {
                location: "basis".into(),
                message: format!("dim is {n} but {} labels are given", self.basis.len()),
            });
        }
        let mut bracket = vec![zero_vector(n); n * n];
        for (key, terms) in &self.bracket {
            let (i, j) = parse_key(key)?;
            let field = format!("bracket[{key:?}]");
            in_range(&field, i, n)?;
            in_range(&field, j, n)?;
            for (k, c) in terms {
                in_range(&field, *k, n)?;
                bracket[i * n + j][*k] += scalar(&field, c)?;
            }
        }
        let phi = match &self.phi {
            Some(rows) => matrix_from_strings("phi", rows, Some(n))?,
            None => Matrix::identity(n),
        };
        let h = match &self.h {
            HSpec::Indices(idx) => idx
                .iter()
                .map(|&i| in_range("H", i, n).map(|i| unit_vector(n, i)))
                .collect::<Result<Vec<_>>>()?,
            HSpec::Vectors(vs) => vs
                .iter()
                .enumerate()
                .map(|(r, v)| {
                    if v.len() != n {
                        return Err(Error::Parse {
                            location: format!("H[{r}]"),
                            message: format!("expected {n} entries, found {}", v.len()),
                        });
                    }
                    v.iter()
                        .enumerate()
                        .map(|(c, s)| scalar(&format!("H[{r}][{c}]"), s))
                        .collect()
                })
                .collect::<Result<Vec<_>>>()?,
        };
        let algebra = HomAlgebra::new(self.name.clone(), self.basis.clone(), bracket, phi)?;
        Ok((algebra, h))
    }

    /// The file form of an algebra. `H` is written by index when every
    /// vector is a basis vector.
    pub fn from_algebra(a: &HomAlgebra, h: &[Vector]) -> Self {
        let n = a.dim();
        let mut bracket = BTreeMap::new();
        for i in 0..n {
            for j in 0..n {
                let terms: Vec<(usize, String)> = a
                    .basis_bracket(i, j)
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !num_traits::Zero::is_zero(*c))
                    .map(|(k, c)| (k, format_scalar(c)))
                    .collect();
                if !terms.is_empty() {
                    bracket.insert(format!("{i},{j}"), terms);
                }
            }
        }
        let phi = if *a.phi() == Matrix::identity(n) {
            None
        } else {
            Some(matrix_to_strings(a.phi()))
        };
        let indices: Option<Vec<usize>> = h
            .iter()
            .map(|v| (0..n).find(|&i| *v == unit_vector(n, i)))
            .collect();
        let h = match indices {
            Some(idx) => HSpec::Indices(idx),
            None => HSpec::Vectors(h.iter().map(|v| v.iter().map(format_scalar).collect()).collect()),
        };
        AlgebraFile {
            name: a.name().to_string(),
            dim: n,
            basis: a.labels().to_vec(),
            bracket,
            phi,
            h,
        }
    }
}

pub fn parse_algebra_str(text: &str, origin: &str) -> Result<(HomAlgebra, Vec<Vector>)> {
    AlgebraFile::from_json(text, origin)?.build()
}

pub fn read_text(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

pub fn write_text(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

pub fn parse_algebra(path: &Path) -> Result<(HomAlgebra, Vec<Vector>)> {
    parse_algebra_str(&read_text(path)?, &path.display().to_string())
}

pub fn write_algebra(a: &HomAlgebra, h: &[Vector]) -> String {
    AlgebraFile::from_algebra(a, h).to_json()
}

#[derive(Deserialize)]
#[serde(untagged)]
enum MatrixFile {
    Bare(Vec<Vec<String>>),
    Wrapped { psi: Vec<Vec<String>> },
}

/// A square matrix given either bare or as `{"psi": [...]}`.
pub fn parse_matrix_str(text: &str, origin: &str) -> Result<Matrix> {
    let parsed: MatrixFile = serde_json::from_str(text).map_err(|e| json_error(origin, &e))?;
    let rows = match parsed {
        MatrixFile::Bare(r) | MatrixFile::Wrapped { psi: r } => r,
    };
    matrix_from_strings("psi", &rows, None)
}
