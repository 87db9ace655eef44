//! On-disk cache of orbit tables.
//!
//! Entries live in `<dir>/<key>.json`, where the key is the SHA-256 of the
//! canonical ring DSL, `n` and [`MATH_VERSION`]. Writers take an exclusive lock
//! on `<dir>/.lock` and publish entries by renaming a finished temporary file;
//! readers take a shared lock.

use std::fs::{self, File, OpenOptions};
use std::io::Write;
use std::path::{Path, PathBuf};

use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use umrow::vdk::OrbitTable;
use umrow::RingDescriptor;

use crate::output::Failure;

/// Bumped whenever table contents could change for the same input.
pub const MATH_VERSION: &str = "1";

pub struct Cache {
    dir: PathBuf,
}

pub fn key(desc: &RingDescriptor, n: usize) -> String {
    let mut h = Sha256::new();
    h.update(desc.to_dsl().as_bytes());
    h.update(format!("\n{n}\n{MATH_VERSION}").as_bytes());
    hex::encode(h.finalize())
}

fn default_dir() -> PathBuf {
    if let Some(x) = std::env::var_os("XDG_CACHE_HOME").filter(|x| !x.is_empty()) {
        return PathBuf::from(x).join("umrow");
    }
    if let Some(h) = std::env::var_os("HOME").filter(|x| !x.is_empty()) {
        return PathBuf::from(h).join(".cache").join("umrow");
    }
    PathBuf::from(".umrow-cache")
}

impl Cache {
    pub fn new(dir: Option<PathBuf>) -> Cache {
        Cache { dir: dir.unwrap_or_else(default_dir) }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn lock_file(&self, create: bool) -> Result<Option<File>, Failure> {
        let path = self.dir.join(".lock");
        if create {
            fs::create_dir_all(&self.dir).map_err(|e| Failure::io(&self.dir, e))?;
        } else if !self.dir.is_dir() {
            return Ok(None);
        }
        OpenOptions::new()
            .create(true)
            .truncate(false)
            .write(true)
            .open(&path)
            .map(Some)
            .map_err(|e| Failure::io(&path, e))
    }

    fn entry_path(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{key}.json"))
    }

    /// A cached table, replayed and checked. Unreadable entries count as misses.
    pub fn load(&self, desc: &RingDescriptor, n: usize) -> Result<Option<OrbitTable>, Failure> {
        let Some(lock) = self.lock_file(false)? else { return Ok(None) };
        lock.lock_shared().map_err(|e| Failure::io(&self.dir, e))?;
        let path = self.entry_path(&key(desc, n));
        let Ok(text) = fs::read_to_string(&path) else { return Ok(None) };
        let parsed: Option<Value> = serde_json::from_str(&text).ok();
        Ok(parsed.and_then(|v| OrbitTable::from_json(&v["table"]).ok()))
    }

    pub fn store(&self, desc: &RingDescriptor, n: usize, table: &OrbitTable) -> Result<String, Failure> {
        let lock = self.lock_file(true)?.expect("directory was created");
        lock.lock().map_err(|e| Failure::io(&self.dir, e))?;
        let key = key(desc, n);
        let entry = json!({
            "key": key,
            "ring": desc.to_json(),
            "n": n,
            "math_version": MATH_VERSION,
            "table": table.to_json(),
        });
        let path = self.entry_path(&key);
        let mut tmp = tempfile::NamedTempFile::new_in(&self.dir).map_err(|e| Failure::io(&self.dir, e))?;
        tmp.write_all(serde_json::to_string(&entry).expect("JSON values serialize").as_bytes())
            .map_err(|e| Failure::io(tmp.path(), e))?;
        tmp.persist(&path).map_err(|e| Failure::io(&path, e.error))?;
        Ok(key)
    }

    fn entries(&self) -> Result<Vec<PathBuf>, Failure> {
        let mut out: Vec<PathBuf> = fs::read_dir(&self.dir)
            .map_err(|e| Failure::io(&self.dir, e))?
            .filter_map(|e| e.ok().map(|e| e.path()))
            .filter(|p| p.extension().is_some_and(|x| x == "json"))
            .collect();
        out.sort();
        Ok(out)
    }

    /// One summary per entry, ordered by key.
    pub fn list(&self) -> Result<Value, Failure> {
        let Some(lock) = self.lock_file(false)? else { return Ok(json!([])) };
        lock.lock_shared().map_err(|e| Failure::io(&self.dir, e))?;
        let mut out = Vec::new();
        for path in self.entries()? {
            let text = fs::read_to_string(&path).map_err(|e| Failure::io(&path, e))?;
            let v: Value = serde_json::from_str(&text)
                .map_err(|e| Failure::io(&path, std::io::Error::new(std::io::ErrorKind::InvalidData, e)))?;
            out.push(json!({
                "key": v["key"],
                "ring": v["ring"],
                "n": v["n"],
                "math_version": v["math_version"],
                "class_count": v["table"]["class_count"],
            }));
        }
        Ok(Value::Array(out))
    }

    /// Removes every entry and returns how many there were.
    pub fn clear(&self) -> Result<usize, Failure> {
        let Some(lock) = self.lock_file(false)? else { return Ok(0) };
        lock.lock().map_err(|e| Failure::io(&self.dir, e))?;
        let entries = self.entries()?;
        for path in &entries {
            fs::remove_file(path).map_err(|e| Failure::io(path, e))?;
        }
        Ok(entries.len())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn aliases_share_keys() {
        let a = RingDescriptor::parse("Z/6").unwrap();
        let b = RingDescriptor::parse(r#"{"kind":"IntegersMod","n":6}"#).unwrap();
        assert_eq!(key(&a, 3), key(&b, 3));
        assert_ne!(key(&a, 3), key(&a, 4));
        assert_eq!(key(&a, 3).len(), 64);
    }

    #[test]
    fn round_trip_through_disk() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::new(Some(dir.path().join("c")));
        let ring = umrow::Ring::zmod(4).unwrap();
        assert_eq!(cache.list().unwrap(), json!([]));
        assert!(cache.load(ring.descriptor(), 3).unwrap().is_none());
        let table = umrow::vdk::build_group_table(&ring, 3, &Default::default()).unwrap();
        cache.store(ring.descriptor(), 3, &table).unwrap();
        let back = cache.load(ring.descriptor(), 3).unwrap().unwrap();
        assert_eq!(back.to_json(), table.to_json());
        assert_eq!(cache.list().unwrap().as_array().unwrap().len(), 1);
        assert_eq!(cache.clear().unwrap(), 1);
        assert_eq!(cache.list().unwrap(), json!([]));
    }
}
