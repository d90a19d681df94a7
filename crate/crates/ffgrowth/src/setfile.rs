//! The on-disk set format: one TOML document carrying the field descriptor
//! (p, k, modulus with coefficients low-degree first) and the element
//! indices. Files are order-independent on ingestion; canonical output
//! writes the elements sorted, so identical sets produce identical bytes.
//!
//! ```text
//! p = 2
//! k = 4
//! modulus = [1, 1, 0, 0, 1]
//! elements = [0, 3, 5, 10]
//! ```

use std::path::Path;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::field::{self, Field};
use crate::set::FSet;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SetDoc {
    p: u64,
    k: u32,
    modulus: Option<Vec<u64>>,
    elements: Vec<u64>,
}

/// Parse a set document, building (and validating) its embedded field.
pub fn parse_set(text: &str) -> Result<FSet> {
    let doc: SetDoc =
        toml::from_str(text).map_err(|e| Error::BadSetFile(e.message().to_string()))?;
    let field = field::build(doc.p, doc.k, doc.modulus.as_deref())?;
    let mut set = FSet::empty(&field);
    for &idx in &doc.elements {
        set.insert(field.elem(idx)?);
    }
    Ok(set)
}

pub fn read_set(path: &Path) -> Result<FSet> {
    parse_set(&std::fs::read_to_string(path)?)
}

/// Canonical text form: fixed key order, sorted elements.
pub fn render_set(set: &FSet) -> String {
    let spec = set.field().spec();
    let list = |values: &mut dyn Iterator<Item = String>| -> String {
        let joined: Vec<String> = values.collect();
        format!("[{}]", joined.join(", "))
    };
    let modulus = list(&mut spec.modulus.iter().map(|c| c.to_string()));
    let elements = list(&mut set.iter().map(|e| e.to_string()));
    format!(
        "p = {}\nk = {}\nmodulus = {}\nelements = {}\n",
        spec.p, spec.k, modulus, elements
    )
}

pub fn write_set(set: &FSet, path: &Path) -> Result<()> {
    Ok(std::fs::write(path, render_set(set))?)
}

/// Reject a file whose embedded descriptor contradicts explicitly given
/// --p/--k flags; flags never override the file.
pub fn check_descriptor(set: &FSet, p: Option<u64>, k: Option<u32>) -> Result<()> {
    let spec = set.field().spec();
    if let Some(p) = p {
        if p != spec.p {
            return Err(Error::BadSetFile(format!(
                "file is over p = {}, but --p {} was given",
                spec.p, p
            )));
        }
    }
    if let Some(k) = k {
        if k != spec.k {
            return Err(Error::BadSetFile(format!(
                "file is over k = {}, but --k {} was given",
                spec.k, k
            )));
        }
    }
    Ok(())
}

/// The field a parsed set lives in.
pub fn field_of(set: &FSet) -> &Field {
    set.field()
}
