//! Optional on-disk cache for symmetric-group character tables, keyed by
//! `n` and a code-version hash so stale entries are never reused across
//! releases.

use std::collections::hash_map::DefaultHasher;
use std::fs;
use std::hash::{Hash, Hasher};
use std::path::{Path, PathBuf};

use charbasis::symmetric::CharacterTable;
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

fn version_hash() -> String {
    let mut h = DefaultHasher::new();
    env!("CARGO_PKG_VERSION").hash(&mut h);
    charbasis::SCHEMA_VERSION.hash(&mut h);
    format!("{:016x}", h.finish())
}

fn table_path(dir: &Path, n: usize) -> PathBuf {
    dir.join(format!("sn-table-n{n}-{}.json", version_hash()))
}

#[derive(Serialize, Deserialize)]
struct CachedTable {
    n: usize,
    values: Vec<Vec<i64>>,
}

pub fn load_table(dir: &Path, n: usize) -> Option<CharacterTable> {
    let text = fs::read_to_string(table_path(dir, n)).ok()?;
    let cached: CachedTable = serde_json::from_str(&text).ok()?;
    if cached.n != n {
        return None;
    }
    let rows: Vec<Vec<BigInt>> = cached
        .values
        .into_iter()
        .map(|r| r.into_iter().map(BigInt::from).collect())
        .collect();
    CharacterTable::from_values(n, rows).ok()
}

pub fn store_table(dir: &Path, table: &CharacterTable) {
    let n = table.n();
    let n_classes = table.classes().len();
    let values: Option<Vec<Vec<i64>>> = (0..table.partitions().len())
        .map(|r| {
            (0..n_classes)
                .map(|c| i64::try_from(table.value_at(r, c)).ok())
                .collect()
        })
        .collect();
    let Some(values) = values else { return };
    let cached = CachedTable { n, values };
    if fs::create_dir_all(dir).is_err() {
        return;
    }
    // Cache writes are best-effort; a failed write only costs a recompute.
    let _ = fs::write(
        table_path(dir, n),
        serde_json::to_string(&cached).expect("cache serializes"),
    );
}
