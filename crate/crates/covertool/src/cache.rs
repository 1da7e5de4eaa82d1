//! Append-only JSON-lines result cache. Records are immutable once
//! written; on read, the first record for a key wins, so concurrent
//! appenders can only duplicate work, never corrupt results.

use std::collections::HashMap;
use std::fs::OpenOptions;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Mutex;
use std::time::{SystemTime, UNIX_EPOCH};

use anyhow::{Context, Result};
use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CacheKey {
    pub graph: String,
    pub kind: String,
    pub k: u64,
    pub field: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CacheRecord {
    pub key: CacheKey,
    pub value: Value,
    pub created_at: u64,
}

pub struct Cache {
    path: PathBuf,
    inner: Mutex<HashMap<CacheKey, Value>>,
    /// One message per unreadable line, with its line number.
    pub warnings: Vec<String>,
}

impl Cache {
    /// Loads an existing cache file (or starts empty). Corrupt lines are
    /// collected as warnings and skipped.
    pub fn open(path: &Path) -> Result<Cache> {
        let mut map = HashMap::new();
        let mut warnings = Vec::new();
        if path.exists() {
            let text = std::fs::read_to_string(path)
                .with_context(|| format!("reading cache {}", path.display()))?;
            for (idx, line) in text.lines().enumerate() {
                if line.trim().is_empty() {
                    continue;
                }
                match serde_json::from_str::<CacheRecord>(line) {
                    Ok(record) => {
                        map.entry(record.key).or_insert(record.value);
                    }
                    Err(e) => warnings.push(format!(
                        "cache {}: skipping corrupt line {}: {e}",
                        path.display(),
                        idx + 1
                    )),
                }
            }
        }
        Ok(Cache { path: path.to_path_buf(), inner: Mutex::new(map), warnings })
    }

    /// Returns the cached value for `key`, or computes, appends, and
    /// returns it.
    pub fn get_or_compute(
        &self,
        key: &CacheKey,
        compute: impl FnOnce() -> Result<Value>,
    ) -> Result<Value> {
        if let Some(v) = self.inner.lock().unwrap().get(key) {
            return Ok(v.clone());
        }
        let value = compute()?;
        let record = CacheRecord {
            key: key.clone(),
            value: value.clone(),
            created_at: SystemTime::now()
                .duration_since(UNIX_EPOCH)
                .map(|d| d.as_secs())
                .unwrap_or(0),
        };
        let mut line = serde_json::to_string(&record)?;
        line.push('\n');
        {
            let mut guard = self.inner.lock().unwrap();
            let mut file = OpenOptions::new()
                .create(true)
                .append(true)
                .open(&self.path)
                .with_context(|| format!("appending to cache {}", self.path.display()))?;
            file.write_all(line.as_bytes())?;
            guard.insert(key.clone(), value.clone());
        }
        Ok(value)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::atomic::{AtomicUsize, Ordering};

    fn key(tag: &str) -> CacheKey {
        CacheKey {
            graph: "x1,x2;x1-x2".into(),
            kind: tag.into(),
            k: 2,
            field: "q".into(),
        }
    }

    #[test]
    fn miss_then_hit_computes_once() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("cache.jsonl");
        let cache = Cache::open(&path).unwrap();
        let calls = AtomicUsize::new(0);
        let compute = || {
            calls.fetch_add(1, Ordering::SeqCst);
            Ok(serde_json::json!({"answer": 42}))
        };
        let a = cache.get_or_compute(&key("t"), compute).unwrap();
        let b = cache
            .get_or_compute(&key("t"), || panic!("must not recompute"))
            .unwrap();
        assert_eq!(a, b);
        assert_eq!(calls.load(Ordering::SeqCst), 1);

        // a fresh handle reads the persisted record
        let reopened = Cache::open(&path).unwrap();
        let c = reopened
            .get_or_compute(&key("t"), || panic!("must hit the file"))
            .unwrap();
        assert_eq!(c, a);
    }

    #[test]
    fn corrupt_lines_warn_and_skip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("cache.jsonl");
        std::fs::write(&path, "not json\n").unwrap();
        let cache = Cache::open(&path).unwrap();
        assert_eq!(cache.warnings.len(), 1);
        assert!(cache.warnings[0].contains("line 1"));
        let v = cache
            .get_or_compute(&key("t"), || Ok(serde_json::json!(1)))
            .unwrap();
        assert_eq!(v, serde_json::json!(1));
    }

    #[test]
    fn first_record_wins_on_duplicate_keys() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("cache.jsonl");
        // simulate two processes having appended records for the same key
        let r1 = CacheRecord { key: key("t"), value: serde_json::json!("first"), created_at: 1 };
        let r2 = CacheRecord { key: key("t"), value: serde_json::json!("second"), created_at: 2 };
        let mut text = serde_json::to_string(&r1).unwrap();
        text.push('\n');
        text.push_str(&serde_json::to_string(&r2).unwrap());
        text.push('\n');
        std::fs::write(&path, text).unwrap();

        let cache = Cache::open(&path).unwrap();
        let v = cache.get_or_compute(&key("t"), || panic!("cached")).unwrap();
        assert_eq!(v, serde_json::json!("first"));
        // both records are still physically present
        let raw = std::fs::read_to_string(&path).unwrap();
        assert_eq!(raw.lines().count(), 2);
    }

    #[test]
    fn concurrent_appends_within_a_process() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("cache.jsonl");
        let cache = std::sync::Arc::new(Cache::open(&path).unwrap());
        let mut handles = Vec::new();
        for t in 0..8 {
            let cache = cache.clone();
            handles.push(std::thread::spawn(move || {
                let k = key(&format!("job{}", t % 4));
                cache.get_or_compute(&k, || Ok(serde_json::json!(t))).unwrap()
            }));
        }
        for h in handles {
            h.join().unwrap();
        }
        // every line parses and keys are consistent on reload
        let reopened = Cache::open(&path).unwrap();
        assert!(reopened.warnings.is_empty());
    }
}
