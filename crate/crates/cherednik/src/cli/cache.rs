//! On-disk result cache: one JSON file per (group, command, params, seed).

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use sha2::{Digest, Sha256};

pub const ENV: &str = "CHEREDNIK_CACHE";

pub fn sha256_hex(data: &[u8]) -> String {
    format!("{:x}", Sha256::digest(data))
}

#[derive(Clone, Debug)]
pub struct Cache {
    root: PathBuf,
}

impl Cache {
    pub fn new(root: impl Into<PathBuf>) -> Cache {
        Cache { root: root.into() }
    }

    /// The cache named by `CHEREDNIK_CACHE`, if set.
    pub fn from_env() -> Option<Cache> {
        std::env::var_os(ENV)
            .filter(|v| !v.is_empty())
            .map(Cache::new)
    }

    pub fn root(&self) -> &Path {
        &self.root
    }

    fn path(&self, key: &str) -> PathBuf {
        self.root.join(format!("{key}.json"))
    }

    pub fn get(&self, key: &str) -> Option<String> {
        fs::read_to_string(self.path(key)).ok()
    }

    /// Writes to a temporary file in the same directory, then renames.
    pub fn put(&self, key: &str, text: &str) -> std::io::Result<()> {
        fs::create_dir_all(&self.root)?;
        let tmp = self
            .root
            .join(format!(".{key}.{}.tmp", std::process::id()));
        {
            let mut f = fs::File::create(&tmp)?;
            f.write_all(text.as_bytes())?;
            f.sync_all()?;
        }
        fs::rename(&tmp, self.path(key)).inspect_err(|_| {
            let _ = fs::remove_file(&tmp);
        })
    }
}
