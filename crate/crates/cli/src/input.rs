//! Loading matroids and matrices from the catalog or from text files.

use std::fs;
use std::path::Path;

use pfmatroid::bits::Set;
use pfmatroid::matroid::{catalog, catalog_entry, Matroid};
use pfmatroid::pfield::PartialFieldId;
use pfmatroid::pmatrix::LabeledMatrix;
use pfmatroid::reptheory::{SearchSpace, DEFAULT_BOUND};
use pfmatroid::{Error, Result};

/// What a `--catalog` or `--file` argument resolved to.
pub enum Object {
    Matroid(String, Matroid),
    Matrix(String, LabeledMatrix),
}

pub fn load(catalog_name: Option<&str>, file: Option<&Path>) -> Result<Object> {
    match (catalog_name, file) {
        (Some(name), None) => {
            let e = catalog_entry(name)?;
            Ok(Object::Matroid(e.name, e.matroid))
        }
        (None, Some(path)) => {
            let text = fs::read_to_string(path)
                .map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
            parse(&text)
        }
        (Some(_), Some(_)) => Err(usage("give either --catalog or --file, not both")),
        (None, None) => Err(usage("an input is required: --catalog <name> or --file <path>")),
    }
}

fn usage(msg: impl Into<String>) -> Error {
    Error::Precondition(msg.into())
}

/// Dispatches on the header keyword of a text file.
pub fn parse(text: &str) -> Result<Object> {
    let first = text.lines().map(str::trim).find(|l| !l.is_empty() && !l.starts_with('#'));
    match first.and_then(|l| l.split_whitespace().next()) {
        Some("pmatrix") => LabeledMatrix::parse_text(text).map(|(n, a)| Object::Matrix(n, a)),
        Some("matroid") => Matroid::parse_text(text).map(|(n, m)| Object::Matroid(n, m)),
        _ => Err(Error::Parse {
            line: 1,
            col: 1,
            msg: "expected a `pmatrix` or `matroid` header".into(),
        }),
    }
}

pub fn matroid(catalog_name: Option<&str>, file: Option<&Path>) -> Result<(String, Matroid)> {
    Ok(match load(catalog_name, file)? {
        Object::Matroid(n, m) => (n, m),
        Object::Matrix(n, a) => (n, Matroid::from_pmatrix(&a)?),
    })
}

pub fn matrix(catalog_name: Option<&str>, file: Option<&Path>) -> Result<(String, LabeledMatrix)> {
    if let (Some(name), None) = (catalog_name, file) {
        let e = catalog_entry(name)?;
        let a = e
            .matrix
            .ok_or_else(|| usage(format!("{} has no stored matrix", e.name)))?;
        return Ok((e.name, a));
    }
    match load(catalog_name, file)? {
        Object::Matrix(n, a) => Ok((n, a)),
        Object::Matroid(..) => Err(usage("this command needs a matrix, not a matroid")),
    }
}

/// Resolves a minor name from the catalog.
pub fn minor(name: &str) -> Result<Matroid> {
    catalog(name)
}

/// A set given either as a word of single-character labels or as a comma
/// separated list.
pub fn set(m: &Matroid, s: &str) -> Result<Set> {
    if s.contains(',') {
        let parts: Vec<&str> = s.split(',').map(str::trim).filter(|p| !p.is_empty()).collect();
        m.set(&parts)
    } else {
        m.set_from_word(s.trim())
    }
}

pub fn field(s: Option<&str>) -> Result<PartialFieldId> {
    PartialFieldId::parse(s.ok_or_else(|| usage("--field is required"))?)
}

pub fn space(field: PartialFieldId, bound: Option<u32>) -> SearchSpace {
    if field.has_finite_units() {
        SearchSpace::finite(field)
    } else {
        SearchSpace::bounded(field, bound.unwrap_or(DEFAULT_BOUND))
    }
}
