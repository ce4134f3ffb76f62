//! Polynomial cache keyed by representation and braid hash.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::arith::{emit_canonical, parse_poly, LaurentPoly};
use crate::braid::BraidWord;
use crate::error::{Error, Result};

/// Overrides the cache location.
pub const CACHE_ENV: &str = "SL3INV_CACHE";

#[derive(Debug, Default, Serialize, Deserialize)]
struct CacheFile {
    version: u32,
    entries: BTreeMap<String, String>,
}

#[derive(Debug, Default)]
pub struct Cache {
    path: Option<PathBuf>,
    entries: BTreeMap<String, String>,
    dirty: bool,
}

pub fn cache_key(rep: &str, b: &BraidWord) -> String {
    let letters: Vec<String> = b.letters.iter().map(|l| l.to_string()).collect();
    let digest = Sha256::digest(format!("{}:{}", b.strands, letters.join(",")).as_bytes());
    let hex: String = digest.iter().map(|x| format!("{x:02x}")).collect();
    format!("{rep}:{hex}")
}

impl Cache {
    pub fn in_memory() -> Self {
        Cache::default()
    }

    /// Opens the cache at `path`, creating an empty one if the file is missing.
    pub fn open(path: &Path) -> Result<Self> {
        let entries = match std::fs::read_to_string(path) {
            Ok(text) => {
                let file: CacheFile = serde_json::from_str(&text)?;
                if file.version != 1 {
                    return Err(Error::Invalid(format!("unsupported cache version {}", file.version)));
                }
                file.entries
            }
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => BTreeMap::new(),
            Err(e) => return Err(e.into()),
        };
        Ok(Cache { path: Some(path.to_path_buf()), entries, dirty: false })
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, rep: &str, b: &BraidWord) -> Option<Result<LaurentPoly>> {
        self.entries.get(&cache_key(rep, b)).map(|s| parse_poly(s))
    }

    pub fn insert(&mut self, rep: &str, b: &BraidWord, value: &LaurentPoly) {
        self.entries.insert(cache_key(rep, b), emit_canonical(value));
        self.dirty = true;
    }

    /// Writes through a temporary file; no-op for in-memory caches.
    pub fn save(&mut self) -> Result<()> {
        let Some(path) = &self.path else { return Ok(()) };
        if !self.dirty {
            return Ok(());
        }
        let file = CacheFile { version: 1, entries: self.entries.clone() };
        let tmp = path.with_extension("json.tmp");
        std::fs::write(&tmp, serde_json::to_string_pretty(&file)?)?;
        std::fs::rename(&tmp, path)?;
        self.dirty = false;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::parse_braid;

    #[test]
    fn keys_depend_on_rep_and_word() {
        let a = parse_braid("1 1 1", 2).unwrap();
        let b = parse_braid("1 1 1", 3).unwrap();
        assert_ne!(cache_key("sl3", &a), cache_key("sl3", &b));
        assert_ne!(cache_key("sl3", &a), cache_key("sl2", &a));
        assert!(cache_key("sl3", &a).starts_with("sl3:"));
        assert_eq!(cache_key("sl3", &a).len(), 4 + 64);
    }

    #[test]
    fn persists() {
        let dir = std::env::temp_dir().join(format!("sl3inv-cache-test-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("cache.json");
        let _ = std::fs::remove_file(&path);
        let b = parse_braid("1 1 1", 2).unwrap();
        let p = parse_poly("t1^2 - 1 + t1^-2").unwrap();
        let mut c = Cache::open(&path).unwrap();
        assert!(c.get("sl2", &b).is_none());
        c.insert("sl2", &b, &p);
        c.save().unwrap();
        let c = Cache::open(&path).unwrap();
        assert_eq!(c.get("sl2", &b).unwrap().unwrap(), p);
        let raw: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
        assert_eq!(raw["version"], 1);
        std::fs::remove_dir_all(&dir).unwrap();
    }
}
