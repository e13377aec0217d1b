//! On-disk universe cache under `ACTKIT_CACHE_DIR`.
//!
//! Each universe is stored as an ACT/1 document (the monoid followed by the
//! representatives in enumeration order) named by the SHA-256 of the bound
//! and the monoid's canonical text.

use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use actkit::{Document, Monoid, RightAct, Universe};
use sha2::{Digest, Sha256};

pub const CACHE_ENV: &str = "ACTKIT_CACHE_DIR";

pub fn key(monoid: &Arc<Monoid>, bound: usize) -> String {
    let mut hasher = Sha256::new();
    hasher.update(format!("universe bound {bound}\n"));
    hasher.update(Document::new(monoid.clone()).to_text());
    hex::encode(hasher.finalize())
}

fn path_in(dir: &Path, monoid: &Arc<Monoid>, bound: usize) -> PathBuf {
    dir.join(format!("{}.act", key(monoid, bound)))
}

fn load(path: &Path, monoid: &Arc<Monoid>, bound: usize) -> Option<Universe> {
    let text = fs::read_to_string(path).ok()?;
    let doc = Document::parse_text(&text).ok()?;
    if *doc.monoid != **monoid {
        return None;
    }
    let reps = doc
        .acts
        .iter()
        .map(|a| RightAct::new(monoid.clone(), a.rows()))
        .collect::<Result<Vec<_>, _>>()
        .ok()?;
    if reps.iter().any(|a| a.size() > bound) {
        return None;
    }
    Some(Universe::from_parts(monoid.clone(), bound, reps))
}

/// Makes the universe of `monoid` at `bound` available to the library,
/// reading it from the cache directory when present and writing it there
/// otherwise. Without `ACTKIT_CACHE_DIR` this does nothing.
pub fn warm(monoid: &Arc<Monoid>, bound: usize) {
    let Some(dir) = std::env::var_os(CACHE_ENV) else {
        return;
    };
    let dir = PathBuf::from(dir);
    let path = path_in(&dir, monoid, bound);
    if let Some(u) = load(&path, monoid, bound) {
        Universe::install(u);
        return;
    }
    let u = Universe::cached(monoid.clone(), bound);
    let mut doc = Document::new(monoid.clone());
    for a in u.representatives() {
        doc.push_act(a.clone());
    }
    let written = fs::create_dir_all(&dir).and_then(|_| fs::write(&path, doc.to_text()));
    if let Err(e) = written {
        eprintln!(
            "warning: cannot write universe cache {}: {e}",
            path.display()
        );
    }
}
