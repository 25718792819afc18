use std::collections::HashMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::{Arc, Mutex, OnceLock};

use super::{HeckeError, KlCache, KlTable};

static TABLES: OnceLock<Mutex<HashMap<usize, Arc<KlTable>>>> = OnceLock::new();
static CACHE_DIR: OnceLock<Mutex<Option<PathBuf>>> = OnceLock::new();

fn tables() -> &'static Mutex<HashMap<usize, Arc<KlTable>>> {
    TABLES.get_or_init(Default::default)
}

/// Enables the on-disk cache. Tables are written as `kl-r{r}.json`.
pub fn set_cache_dir(dir: Option<PathBuf>) {
    *CACHE_DIR.get_or_init(Default::default).lock().unwrap() = dir;
}

fn cache_dir() -> Option<PathBuf> {
    CACHE_DIR.get_or_init(Default::default).lock().unwrap().clone()
}

fn cache_path(dir: &Path, r: usize) -> PathBuf {
    dir.join(format!("kl-r{r}.json"))
}

fn load(dir: &Path, r: usize) -> Result<Option<KlTable>, HeckeError> {
    let path = cache_path(dir, r);
    let Ok(text) = fs::read_to_string(&path) else {
        return Ok(None);
    };
    let cache: KlCache = serde_json::from_str(&text).map_err(|e| HeckeError::Cache(format!("{}: {e}", path.display())))?;
    if cache.r != r {
        return Err(HeckeError::Cache(format!("{} holds r = {}", path.display(), cache.r)));
    }
    KlTable::from_cache(&cache).map(Some)
}

/// Shared KL table for S_r, computed once per process (or read from the
/// cache directory when one is set).
pub fn kl_table(r: usize) -> Result<Arc<KlTable>, HeckeError> {
    if let Some(t) = tables().lock().unwrap().get(&r) {
        return Ok(t.clone());
    }
    let dir = cache_dir();
    let table = match dir.as_deref().map(|d| load(d, r)).transpose()?.flatten() {
        Some(t) => t,
        None => {
            let t = KlTable::new(r);
            if let Some(d) = &dir {
                let json = serde_json::to_string(&t.to_cache()).map_err(|e| HeckeError::Cache(e.to_string()))?;
                fs::create_dir_all(d).and_then(|_| fs::write(cache_path(d, r), json)).map_err(|e| HeckeError::Cache(e.to_string()))?;
            }
            t
        }
    };
    let table = Arc::new(table);
    tables().lock().unwrap().entry(r).or_insert_with(|| table.clone());
    Ok(table)
}
