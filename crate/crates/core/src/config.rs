//! Run settings and the on-disk automorphism cache.

use std::fs;
use std::path::{Path, PathBuf};

use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::group::{automorphism_group, Automorphism, Group};
use crate::nonabelian::DEFAULT_BUDGET;

pub const CACHE_ENV: &str = "EXTKIT_CACHE";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Config {
    pub max_order: usize,
    pub budget: usize,
    pub seed: u64,
    pub cache_dir: Option<PathBuf>,
}

impl Default for Config {
    fn default() -> Self {
        Config { max_order: 64, budget: DEFAULT_BUDGET, seed: 0, cache_dir: None }
    }
}

impl Config {
    /// EXTKIT_CACHE, when set and non-empty, wins over the given directory.
    pub fn resolve_cache_dir(flag: Option<PathBuf>) -> Option<PathBuf> {
        match std::env::var_os(CACHE_ENV) {
            Some(v) if !v.is_empty() => Some(PathBuf::from(v)),
            _ => flag,
        }
    }

    pub fn cache(&self) -> AutCache {
        AutCache { dir: self.cache_dir.clone(), max_order: self.max_order }
    }
}

/// Hex sha256 of the flattened Cayley table.
pub fn table_hash(g: &Group) -> String {
    let mut h = Sha256::new();
    h.update((g.order() as u64).to_le_bytes());
    for &x in g.flat_table() {
        h.update((x as u64).to_le_bytes());
    }
    hex::encode(h.finalize())
}

/// Aut(G) enumerations stored as one line of images per automorphism.
#[derive(Clone, Debug)]
pub struct AutCache {
    dir: Option<PathBuf>,
    max_order: usize,
}

impl AutCache {
    pub fn uncached(max_order: usize) -> Self {
        AutCache { dir: None, max_order }
    }

    pub fn dir(&self) -> Option<&Path> {
        self.dir.as_deref()
    }

    pub fn path_for(&self, g: &Group) -> Option<PathBuf> {
        self.dir.as_ref().map(|d| d.join(format!("aut-{}.txt", table_hash(g))))
    }

    /// A damaged cache entry is recomputed and overwritten.
    pub fn automorphisms(&self, g: &Group) -> Result<Vec<Automorphism>> {
        if let Some(path) = self.path_for(g) {
            if let Ok(text) = fs::read_to_string(&path) {
                if let Some(auts) = parse_entry(g, &text) {
                    return Ok(auts);
                }
            }
            let auts = automorphism_group(g, self.max_order)?;
            fs::create_dir_all(path.parent().expect("cache files live in a directory"))?;
            let body: String = auts
                .iter()
                .map(|a| a.forward().iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ") + "\n")
                .collect();
            fs::write(&path, body).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
            return Ok(auts);
        }
        automorphism_group(g, self.max_order)
    }
}

fn parse_entry(g: &Group, text: &str) -> Option<Vec<Automorphism>> {
    let mut out = Vec::new();
    for line in text.lines().filter(|l| !l.trim().is_empty()) {
        let images: Vec<usize> = line.split_whitespace().map(|t| t.parse().ok()).collect::<Option<_>>()?;
        if images.len() != g.order() {
            return None;
        }
        out.push(Automorphism::from_images(g, images).ok()?);
    }
    (!out.is_empty() && out[0].is_identity()).then_some(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::named;

    #[test]
    fn cache_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let cache = AutCache { dir: Some(dir.path().to_path_buf()), max_order: 64 };
        let q8 = named("Q8").unwrap();
        let first = cache.automorphisms(&q8).unwrap();
        assert!(cache.path_for(&q8).unwrap().exists());
        assert_eq!(cache.automorphisms(&q8).unwrap(), first);
        assert_eq!(first.len(), 24);
        fs::write(cache.path_for(&q8).unwrap(), "garbage\n").unwrap();
        assert_eq!(cache.automorphisms(&q8).unwrap(), first);
    }
}
