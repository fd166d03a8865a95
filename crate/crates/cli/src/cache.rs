//! On-disk character cache: one directory per group spec, one file per
//! highest weight, each entry carrying a checksum over its canonical JSON.
//!
//! Writers stage a temp file and rename it into place, so a concurrent
//! reader only ever sees a missing or a complete entry.  Anything
//! unreadable, unparsable, or checksum-mismatched counts as missing and is
//! recomputed.  An unwritable cache root downgrades to plain computation
//! with a single warning on stderr.

use lierep::character::FormalCharacter;
use lierep::roots::{RootSystem, Weight};
use sha2::{Digest, Sha256};
use std::cell::Cell;
use std::path::{Path, PathBuf};
use std::sync::Arc;

/// Environment variable overriding the cache root.
pub const CACHE_ENV: &str = "LIEREP_CACHE_DIR";

pub struct CharacterCache {
    root: Option<PathBuf>,
    warned: Cell<bool>,
}

impl CharacterCache {
    /// Root resolution order: explicit directory flag, then the
    /// `LIEREP_CACHE_DIR` environment variable, then the per-user data
    /// directory.  `no_cache` disables the cache entirely.
    pub fn new(no_cache: bool, flag: Option<PathBuf>) -> CharacterCache {
        let root = if no_cache { None } else { flag.or_else(default_root) };
        CharacterCache { root, warned: Cell::new(false) }
    }

    /// Irreducible character with the given highest weight, read from the
    /// cache when a valid entry exists and written back after a miss.
    pub fn character(
        &self,
        rs: &Arc<RootSystem>,
        hw: &Weight,
    ) -> lierep::Result<FormalCharacter> {
        rs.check_dominant(hw)?;
        let Some(root) = &self.root else {
            return FormalCharacter::irreducible(rs, hw);
        };
        let path = entry_path(root, rs, hw);
        if let Some(ch) = read_entry(&path, rs) {
            return Ok(ch);
        }
        let ch = FormalCharacter::irreducible(rs, hw)?;
        if let Err(e) = write_entry(&path, &ch) {
            if !self.warned.replace(true) {
                eprintln!("warning: cache write to {} failed ({e}); continuing without cache", path.display());
            }
        }
        Ok(ch)
    }
}

fn default_root() -> Option<PathBuf> {
    if let Some(dir) = std::env::var_os(CACHE_ENV) {
        return Some(PathBuf::from(dir));
    }
    if let Some(data) = std::env::var_os("XDG_DATA_HOME") {
        return Some(Path::new(&data).join("lierep").join("characters"));
    }
    std::env::var_os("HOME").map(|h| Path::new(&h).join(".local/share/lierep/characters"))
}

fn entry_path(root: &Path, rs: &RootSystem, hw: &Weight) -> PathBuf {
    let coords: Vec<String> = hw.0.iter().map(|c| c.to_string()).collect();
    root.join(rs.spec().to_string()).join(format!("w{}.json", coords.join("_")))
}

fn checksum(payload: &str) -> String {
    let mut h = Sha256::new();
    h.update(payload.as_bytes());
    format!("{:x}", h.finalize())
}

/// None on any miss: absent file, bad JSON, checksum mismatch, or an entry
/// for a different root system.
fn read_entry(path: &Path, rs: &Arc<RootSystem>) -> Option<FormalCharacter> {
    let text = std::fs::read_to_string(path).ok()?;
    let v: serde_json::Value = serde_json::from_str(&text).ok()?;
    let character = v.get("character")?;
    let payload = serde_json::to_string(character).ok()?;
    if v.get("checksum")?.as_str()? != checksum(&payload) {
        return None;
    }
    let ch = FormalCharacter::from_json_value(character).ok()?;
    (ch.root_system().spec() == rs.spec()).then_some(ch)
}

fn write_entry(path: &Path, ch: &FormalCharacter) -> std::io::Result<()> {
    let dir = path.parent().expect("entry paths always have a parent");
    std::fs::create_dir_all(dir)?;
    let character = ch.to_json_value();
    let payload = serde_json::to_string(&character).expect("character serializes");
    let entry = serde_json::json!({ "character": character, "checksum": checksum(&payload) });
    let name = path.file_name().expect("entry paths have a file name");
    let tmp = dir.join(format!(
        ".{}.{}.tmp",
        name.to_string_lossy(),
        std::process::id()
    ));
    std::fs::write(&tmp, serde_json::to_string(&entry).expect("entry serializes"))?;
    std::fs::rename(&tmp, path)
}
