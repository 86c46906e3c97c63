use std::collections::HashMap;
use std::fs::{self, OpenOptions};
use std::io::Write;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use super::record::MultiplicityRecord;
use crate::error::Result;
use crate::polyring::TieBreak;

/// A cache line is the record plus the tie-break it was computed under.
#[derive(Serialize, Deserialize)]
struct CacheLine {
    #[serde(flatten)]
    record: MultiplicityRecord,
    order: String,
}

/// Append-only JSON-lines store of computed records keyed by `(n, w, order)`.
///
/// Unparseable lines (e.g. a line cut short by an interrupted run) are
/// skipped on load.
pub struct RecordCache {
    path: PathBuf,
    entries: HashMap<(usize, String, String), MultiplicityRecord>,
}

impl RecordCache {
    pub fn open(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref().to_path_buf();
        let mut entries = HashMap::new();
        if path.exists() {
            for line in fs::read_to_string(&path)?.lines() {
                if let Ok(CacheLine { record, order }) = serde_json::from_str::<CacheLine>(line) {
                    if record.w.n() == record.n {
                        entries.insert((record.n, record.w.to_string(), order), record);
                    }
                }
            }
        }
        Ok(RecordCache { path, entries })
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, n: usize, word: &str, order: TieBreak) -> Option<&MultiplicityRecord> {
        self.entries.get(&(n, word.to_string(), order.name().to_string()))
    }

    pub fn append(&mut self, records: &[MultiplicityRecord], order: TieBreak) -> Result<()> {
        if records.is_empty() {
            return Ok(());
        }
        if let Some(parent) = self.path.parent() {
            if !parent.as_os_str().is_empty() {
                fs::create_dir_all(parent)?;
            }
        }
        let mut out = String::new();
        for r in records {
            let line = CacheLine {
                record: r.clone(),
                order: order.name().to_string(),
            };
            out.push_str(&serde_json::to_string(&line).expect("cache lines serialize"));
            out.push('\n');
            self.entries
                .insert((r.n, r.w.to_string(), order.name().to_string()), r.clone());
        }
        let mut file = OpenOptions::new().create(true).append(true).open(&self.path)?;
        file.write_all(out.as_bytes())?;
        Ok(())
    }
}
