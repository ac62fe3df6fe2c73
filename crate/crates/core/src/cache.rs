//! On-disk cache of character tables, one JSON file per group.

use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::chartab::CharacterTable;
use crate::cyclo::Cyclotomic;
use crate::error::{Error, Result};
use crate::perm::PermGroup;

/// Environment variable consulted when no cache directory is passed.
pub const CACHE_DIR_ENV: &str = "GCHAR_CACHE_DIR";

/// Hash of the degree and the sorted generator images. Two inputs that
/// enumerate the same permutation group with the same generators collide
/// on purpose, whatever text they were read from.
pub fn group_hash(g: &PermGroup) -> String {
    let mut h = Sha256::new();
    h.update((g.degree() as u64).to_le_bytes());
    for images in g.canonical_generator_images() {
        h.update((images.len() as u64).to_le_bytes());
        for p in images {
            h.update(p.to_le_bytes());
        }
    }
    hex::encode(h.finalize())
}

#[derive(Serialize, Deserialize)]
struct Entry {
    group_hash: String,
    seed: u64,
    classes: Vec<String>,
    values: Vec<Vec<Cyclotomic>>,
}

#[derive(Clone, Debug)]
pub struct TableCache {
    dir: PathBuf,
}

impl TableCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Self { dir: dir.into() }
    }

    /// The explicit directory if given, else the environment variable.
    pub fn from_option(dir: Option<&Path>) -> Option<Self> {
        dir.map(Path::to_path_buf)
            .or_else(|| std::env::var_os(CACHE_DIR_ENV).map(PathBuf::from))
            .map(Self::new)
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn path(&self, hash: &str, seed: u64) -> PathBuf {
        self.dir.join(format!("{hash}-{seed:x}.json"))
    }

    /// Loads a stored table. A missing file is `Ok(None)`; a file whose
    /// contents do not belong to this group is an error.
    pub fn load(&self, group: &Arc<PermGroup>, seed: u64) -> Result<Option<CharacterTable>> {
        let hash = group_hash(group);
        let path = self.path(&hash, seed);
        let text = match fs::read_to_string(&path) {
            Ok(s) => s,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
            Err(e) => return Err(e.into()),
        };
        let entry: Entry = serde_json::from_str(&text)?;
        if entry.group_hash != hash || entry.seed != seed {
            return Err(Error::CacheMismatch(format!(
                "{} holds another group",
                path.display()
            )));
        }
        let t = CharacterTable::from_parts(Arc::clone(group), entry.values, seed)?;
        if t.classes().names != entry.classes {
            return Err(Error::CacheMismatch(format!(
                "{} has different class names",
                path.display()
            )));
        }
        Ok(Some(t))
    }

    pub fn store(&self, t: &CharacterTable) -> Result<()> {
        fs::create_dir_all(&self.dir)?;
        let hash = group_hash(t.group());
        let entry = Entry {
            group_hash: hash.clone(),
            seed: t.seed(),
            classes: t.classes().names.clone(),
            values: t.values().to_vec(),
        };
        let path = self.path(&hash, t.seed());
        // Write then rename, so a concurrent reader never sees half a file.
        let tmp = path.with_extension(format!("tmp{}", std::process::id()));
        fs::write(&tmp, serde_json::to_string(&entry)?)?;
        fs::rename(&tmp, &path)?;
        Ok(())
    }

    /// Returns the cached table, computing and storing it on a miss. A stale
    /// or corrupt file is treated as a miss and overwritten.
    pub fn load_or_compute(
        &self,
        group: impl Into<Arc<PermGroup>>,
        seed: u64,
    ) -> Result<CharacterTable> {
        let group = group.into();
        if let Ok(Some(t)) = self.load(&group, seed) {
            return Ok(t);
        }
        let t = CharacterTable::compute_seeded(group, seed);
        self.store(&t)?;
        Ok(t)
    }
}

/// Computes a table, going through the cache when one is configured.
pub fn table(
    group: impl Into<Arc<PermGroup>>,
    seed: u64,
    cache: Option<&TableCache>,
) -> Result<CharacterTable> {
    match cache {
        Some(c) => c.load_or_compute(group, seed),
        None => Ok(CharacterTable::compute_seeded(group, seed)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog;

    #[test]
    fn hash_ignores_generator_order() {
        let a = PermGroup::from_image_lists(3, &[vec![1, 0, 2], vec![1, 2, 0]]).unwrap();
        let b = PermGroup::from_image_lists(3, &[vec![1, 2, 0], vec![1, 0, 2]]).unwrap();
        assert_eq!(group_hash(&a), group_hash(&b));
        let c = catalog("cyclic:3").unwrap();
        assert_ne!(group_hash(&a), group_hash(&c));
    }

    #[test]
    fn hit_equals_cold() {
        let dir = tempfile::tempdir().unwrap();
        let cache = TableCache::new(dir.path());
        let g = Arc::new(catalog("HolC5").unwrap());
        let cold = cache.load_or_compute(Arc::clone(&g), 3).unwrap();
        let hot = cache.load(&g, 3).unwrap().expect("stored");
        assert_eq!(cold.values(), hot.values());
        assert_eq!(cold.classes().names, hot.classes().names);
    }

    #[test]
    fn corrupt_file_is_recomputed() {
        let dir = tempfile::tempdir().unwrap();
        let cache = TableCache::new(dir.path());
        let g = Arc::new(catalog("symmetric:3").unwrap());
        fs::write(cache.path(&group_hash(&g), 1), "{ not json").unwrap();
        assert!(cache.load(&g, 1).is_err());
        let t = cache.load_or_compute(Arc::clone(&g), 1).unwrap();
        assert_eq!(t.len(), 3);
        assert!(cache.load(&g, 1).unwrap().is_some());
    }
}
