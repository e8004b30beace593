//! Resumable progress files for the long searches.

use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use serde_json::{json, Value};

pub const CHECKPOINT_SCHEMA: &str = "powtrip.checkpoint/1";

/// A JSON progress file. `key` identifies the run; a file whose key differs
/// is refused rather than silently mixed into a different search.
#[derive(Debug, Clone)]
pub struct Checkpoint {
    path: PathBuf,
    key: Value,
}

impl Checkpoint {
    pub fn new(path: impl Into<PathBuf>, key: Value) -> Self {
        Checkpoint { path: path.into(), key }
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    /// The saved state, or `None` when no file exists yet.
    pub fn load(&self) -> Result<Option<Value>> {
        let text = match fs::read_to_string(&self.path) {
            Ok(text) => text,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
            Err(e) => return Err(e).with_context(|| format!("reading checkpoint {}", self.path.display())),
        };
        let doc: Value = serde_json::from_str(&text)
            .with_context(|| format!("checkpoint {} is not valid JSON", self.path.display()))?;
        if doc.get("schema").and_then(Value::as_str) != Some(CHECKPOINT_SCHEMA) {
            bail!("checkpoint {} has an unknown schema", self.path.display());
        }
        if doc.get("key") != Some(&self.key) {
            bail!("checkpoint {} belongs to a different run: {}", self.path.display(), doc["key"]);
        }
        Ok(Some(doc["state"].clone()))
    }

    /// Writes through a sibling temporary file and a rename, so an
    /// interrupted write leaves the previous checkpoint intact.
    pub fn save(&self, state: Value) -> Result<()> {
        let doc = json!({ "schema": CHECKPOINT_SCHEMA, "key": self.key, "state": state });
        let mut tmp = self.path.clone().into_os_string();
        tmp.push(".tmp");
        let tmp = PathBuf::from(tmp);
        fs::write(&tmp, serde_json::to_string_pretty(&doc)?)
            .with_context(|| format!("writing checkpoint {}", tmp.display()))?;
        fs::rename(&tmp, &self.path).with_context(|| format!("replacing checkpoint {}", self.path.display()))?;
        Ok(())
    }
}
