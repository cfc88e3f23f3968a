//! Content-addressed result cache: one JSON file per query, keyed by the
//! SHA-256 of the canonical query.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use serde_json::Value;
use sha2::{Digest, Sha256};

use super::JobSpec;

pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Cache { dir: dir.into() }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn key(spec: &JobSpec) -> String {
        let mut h = Sha256::new();
        h.update(b"genexp-cache\n");
        h.update(env!("CARGO_PKG_VERSION").as_bytes());
        h.update(b"\n");
        h.update(serde_json::to_vec(spec).expect("job specs serialize"));
        hex::encode(h.finalize())
    }

    pub fn path(&self, spec: &JobSpec) -> PathBuf {
        self.dir.join(format!("{}.json", Cache::key(spec)))
    }

    /// A cached document, if present and readable. Corrupt entries count as misses.
    pub fn get(&self, spec: &JobSpec) -> Option<Value> {
        let text = fs::read_to_string(self.path(spec)).ok()?;
        serde_json::from_str(&text).ok()
    }

    /// Writes to a temporary file in the cache directory, then renames it into place.
    pub fn put(&self, spec: &JobSpec, doc: &Value) -> io::Result<()> {
        fs::create_dir_all(&self.dir)?;
        let target = self.path(spec);
        let tmp = self.dir.join(format!(
            ".{}.{}.tmp",
            Cache::key(spec),
            std::process::id()
        ));
        let mut f = fs::File::create(&tmp)?;
        f.write_all(serde_json::to_string(doc)?.as_bytes())?;
        f.sync_all()?;
        drop(f);
        fs::rename(&tmp, &target).inspect_err(|_| {
            let _ = fs::remove_file(&tmp);
        })
    }
}
