//! JSONL catalog of semiring isomorphism classes.

use std::collections::{BTreeMap, HashSet};
use std::fs;
use std::io::Write;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::classify::classify;
use crate::congruence::is_congruence_simple;
use crate::error::{Error, Result};
use crate::iso::{canonical_form, CanonicalForm};
use crate::semiring::{FiniteSemiring, Properties, SpecialElements};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Provenance {
    Enumerated,
    Constructed {
        family: String,
        parameters: BTreeMap<String, String>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CatalogClassification {
    pub case: String,
    pub parameters: BTreeMap<String, usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CatalogEntry {
    pub canonical_form: String,
    pub order: usize,
    pub properties: Properties,
    pub special_elements: SpecialElements,
    pub simple: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub classification: Option<CatalogClassification>,
    pub provenance: Provenance,
}

impl CatalogEntry {
    /// Describes the isomorphism class of `s`. Needs an exact canonical form,
    /// so the order is limited to [`crate::iso::CANONICAL_MAX_ORDER`].
    pub fn from_semiring(s: &FiniteSemiring, provenance: Provenance) -> Result<Self> {
        let cf = canonical_form(s);
        if !cf.exact {
            return Err(Error::Capacity(format!(
                "catalog entries need an exact canonical form; order {} is too large",
                s.order()
            )));
        }
        let rep = cf.to_semiring()?;
        let simple = is_congruence_simple(&rep).simple;
        let classification = if simple {
            let r = classify(&rep)?;
            Some(CatalogClassification {
                case: r.case.label().to_string(),
                parameters: r
                    .case
                    .parameters()
                    .into_iter()
                    .map(|(k, v)| (k.to_string(), v))
                    .collect(),
            })
        } else {
            None
        };
        Ok(Self {
            canonical_form: cf.hex(),
            order: s.order(),
            properties: rep.properties(),
            special_elements: rep.special_elements(),
            simple,
            classification,
            provenance,
        })
    }

    /// The canonical representative.
    pub fn semiring(&self) -> Result<FiniteSemiring> {
        let bytes = hex::decode(&self.canonical_form)
            .map_err(|e| Error::Input(format!("canonical_form: {e}")))?;
        CanonicalForm {
            order: self.order,
            bytes,
            exact: true,
        }
        .to_semiring()
    }

    /// Looks up a boolean flag by name, `None` for unknown names.
    pub fn flag(&self, name: &str) -> Option<bool> {
        let p = &self.properties;
        let sp = &self.special_elements;
        Some(match name {
            "simple" => self.simple,
            "additively_idempotent" => p.additively_idempotent,
            "zero_multiplication" => p.zero_multiplication,
            "is_ring" => p.is_ring,
            "trivial_addition" => p.trivial_addition,
            "multiplicatively_commutative" => p.multiplicatively_commutative,
            "has_zero" => sp.zero.is_some(),
            "has_infinity" => sp.infinity.is_some(),
            "has_additive_identity" => sp.additive_identity.is_some(),
            "has_multiplicative_identity" => sp.multiplicative_identity.is_some(),
            _ => return None,
        })
    }
}

pub const FLAG_NAMES: [&str; 10] = [
    "simple",
    "additively_idempotent",
    "zero_multiplication",
    "is_ring",
    "trivial_addition",
    "multiplicatively_commutative",
    "has_zero",
    "has_infinity",
    "has_additive_identity",
    "has_multiplicative_identity",
];

/// Serializes entries as sorted JSONL. Fails on duplicate canonical forms.
pub fn catalog_to_string(entries: &[CatalogEntry]) -> Result<String> {
    let mut sorted: Vec<&CatalogEntry> = entries.iter().collect();
    sorted.sort_by(|a, b| (a.order, &a.canonical_form).cmp(&(b.order, &b.canonical_form)));
    for pair in sorted.windows(2) {
        if pair[0].canonical_form == pair[1].canonical_form {
            return Err(Error::Input(format!(
                "duplicate canonical form {}",
                pair[0].canonical_form
            )));
        }
    }
    let mut out = String::new();
    for e in sorted {
        out.push_str(&serde_json::to_string(e)?);
        out.push('\n');
    }
    Ok(out)
}

/// Writes the catalog atomically (temporary file, then rename).
pub fn catalog_write(path: &Path, entries: &[CatalogEntry]) -> Result<()> {
    let text = catalog_to_string(entries)?;
    let file_name = path
        .file_name()
        .ok_or_else(|| Error::Input(format!("{} is not a file path", path.display())))?;
    let tmp = path.with_file_name(format!(".{}.tmp", file_name.to_string_lossy()));
    {
        let mut f = fs::File::create(&tmp)?;
        f.write_all(text.as_bytes())?;
        f.sync_all()?;
    }
    fs::rename(&tmp, path)?;
    Ok(())
}

/// Parses catalog text, re-validating every entry.
pub fn catalog_from_str(text: &str) -> Result<Vec<CatalogEntry>> {
    let mut seen = HashSet::new();
    let mut entries = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line_no = i + 1;
        if line.trim().is_empty() {
            continue;
        }
        let fail = |reason: String| Error::Catalog {
            line: line_no,
            reason,
        };
        let entry: CatalogEntry = serde_json::from_str(line).map_err(|e| fail(e.to_string()))?;
        let rebuilt = entry.semiring().map_err(|e| fail(e.to_string()))?;
        if canonical_form(&rebuilt).hex() != entry.canonical_form {
            return Err(fail("canonical_form is not in canonical labelling".into()));
        }
        if !seen.insert(entry.canonical_form.clone()) {
            return Err(fail(format!(
                "duplicate canonical form {}",
                entry.canonical_form
            )));
        }
        entries.push(entry);
    }
    Ok(entries)
}

pub fn catalog_read(path: &Path) -> Result<Vec<CatalogEntry>> {
    catalog_from_str(&fs::read_to_string(path)?)
}
