//! Append-only JSONL store of regularity values keyed by
//! `(canonical graph, s, kind, characteristic)`.

use std::collections::HashMap;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;
use std::sync::Mutex;

use serde::{Deserialize, Serialize};

use super::checks::PowerKind;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
struct CacheKey {
    graph: String,
    s: u32,
    kind: PowerKind,
    field_char: u32,
}

#[derive(Serialize, Deserialize)]
struct CacheLine {
    #[serde(flatten)]
    key: CacheKey,
    reg: u32,
}

fn io_error(path: &Path, e: impl std::fmt::Display) -> Error {
    Error::parse(0, format!("{}: {e}", path.display()))
}

/// `reg` of `I(G)^s` or `I(G)^(s)`, shared across workers.
#[derive(Default)]
pub struct RegCache {
    map: Mutex<HashMap<CacheKey, u32>>,
    file: Option<Mutex<BufWriter<File>>>,
}

impl RegCache {
    pub fn in_memory() -> Self {
        RegCache::default()
    }

    /// Loads any existing entries and appends new ones to `path`.
    pub fn open(path: &Path) -> Result<Self> {
        let mut map = HashMap::new();
        if path.exists() {
            let reader = BufReader::new(File::open(path).map_err(|e| io_error(path, e))?);
            for (i, line) in reader.lines().enumerate() {
                let line = line.map_err(|e| io_error(path, e))?;
                if line.trim().is_empty() {
                    continue;
                }
                let entry: CacheLine =
                    serde_json::from_str(&line).map_err(|e| Error::parse(i + 1, format!("cache entry: {e}")))?;
                map.insert(entry.key, entry.reg);
            }
        }
        let file = OpenOptions::new().create(true).append(true).open(path).map_err(|e| io_error(path, e))?;
        Ok(RegCache { map: Mutex::new(map), file: Some(Mutex::new(BufWriter::new(file))) })
    }

    pub fn len(&self) -> usize {
        self.map.lock().expect("cache lock").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn get(&self, graph: &str, s: u32, kind: PowerKind, field_char: u32) -> Option<u32> {
        let key = CacheKey { graph: graph.to_string(), s, kind, field_char };
        self.map.lock().expect("cache lock").get(&key).copied()
    }

    pub fn insert(&self, graph: &str, s: u32, kind: PowerKind, field_char: u32, reg: u32) -> Result<()> {
        let key = CacheKey { graph: graph.to_string(), s, kind, field_char };
        let fresh = self.map.lock().expect("cache lock").insert(key.clone(), reg).is_none();
        if let (true, Some(file)) = (fresh, &self.file) {
            let line = serde_json::to_string(&CacheLine { key, reg }).expect("serializable");
            let mut w = file.lock().expect("cache file lock");
            writeln!(w, "{line}").and_then(|_| w.flush()).map_err(|e| Error::parse(0, format!("cache write: {e}")))?;
        }
        Ok(())
    }
}
