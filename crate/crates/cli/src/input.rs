//! Resolving `FILE|KEY` arguments into groups.

use std::path::Path;
use std::sync::Arc;

use anyhow::{bail, Context, Result};
use fgx_core::group::{build_catalogue, parse_reference, CatalogueGroup, CatalogueKey};
use fgx_core::GroupTable;

pub struct Input {
    pub name: String,
    pub table: Arc<GroupTable>,
    pub catalogue: Option<CatalogueGroup>,
}

impl Input {
    /// Element by catalogue generator name or by table label.
    pub fn element(&self, name: &str) -> Result<usize> {
        if let Some(x) = self.catalogue.as_ref().and_then(|c| c.element(name)) {
            return Ok(x);
        }
        if let Some(x) = self.table.find_label(name) {
            return Ok(x);
        }
        match name.parse::<usize>() {
            Ok(i) if i < self.table.order() => Ok(i),
            _ => bail!("{}: no element named {name:?}", self.name),
        }
    }
}

pub fn read_table(path: &Path) -> Result<GroupTable> {
    let text = std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    GroupTable::from_json_str(&text).with_context(|| format!("{} is not a valid Cayley table", path.display()))
}

/// A path to a Cayley JSON file, a catalogue key or a reference group name.
pub fn resolve(arg: &str) -> Result<Input> {
    let path = Path::new(arg);
    if path.is_file() {
        return Ok(Input {
            name: arg.to_string(),
            table: Arc::new(read_table(path)?),
            catalogue: None,
        });
    }
    if let Ok(key) = arg.parse::<CatalogueKey>() {
        let c = build_catalogue(key).with_context(|| format!("building {key}"))?;
        return Ok(Input {
            name: key.to_string(),
            table: c.table.clone(),
            catalogue: Some(c),
        });
    }
    match parse_reference(arg) {
        Ok(g) => Ok(Input {
            name: arg.to_string(),
            table: Arc::new(g),
            catalogue: None,
        }),
        Err(_) => bail!("{arg:?} is neither a readable file, a catalogue key nor a reference group name"),
    }
}
