//! Persistent JSON-lines catalog of classification results, keyed by
//! `(p, s, n, a)`.

use std::collections::BTreeMap;
use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use serde::{Deserialize, Serialize};

use crate::codes::{count_selfdual, count_selfdual_negacyclic, enumerate_selfdual};
use crate::cyclo::factor_xn_minus_a;
use crate::error::{Error, Result};
use crate::gf::{make_field, Field};
use crate::oracle;
use crate::poly::Shift;

/// Environment variable naming the default catalog file.
pub const CATALOG_ENV: &str = "SELFDUAL_CATALOG";

/// Generator lists longer than this are omitted from records.
pub const GENERATOR_LIMIT: u128 = 1024;

pub const ENGINE_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CatalogKey {
    pub a: i64,
    pub n: u64,
    pub p: u64,
    pub s: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairingSummary {
    /// Self-reciprocal factors.
    pub s: usize,
    /// Reciprocal pairs.
    pub t: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogResult {
    pub count: u128,
    pub exists: bool,
    pub generators: Vec<String>,
    /// False when the list was omitted because it exceeds [`GENERATOR_LIMIT`].
    pub generators_complete: bool,
    pub pairing: PairingSummary,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    pub engine_version: String,
    pub oracle_checked: bool,
    /// Unix seconds.
    pub timestamp: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogRecord {
    pub key: CatalogKey,
    pub provenance: Provenance,
    pub result: CatalogResult,
}

impl CatalogRecord {
    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("records serialize")
    }
}

/// Classifies self-dual codes of length `n` in `F[x]/(x^n - a)`.
pub fn classify(field: &Field, n: usize, shift: Shift) -> Result<CatalogResult> {
    if n == 0 {
        return Err(Error::InvalidInput("length must be positive".into()));
    }
    let fz = factor_xn_minus_a(field, n as u64, shift)?;
    let count = match shift {
        Shift::Negacyclic => count_selfdual_negacyclic(field, n)?,
        Shift::Cyclic => count_selfdual(field, n, shift)?,
    };
    let complete = count <= GENERATOR_LIMIT;
    let generators = if complete {
        enumerate_selfdual(field, n, shift)?.iter().map(ToString::to_string).collect()
    } else {
        Vec::new()
    };
    Ok(CatalogResult {
        count,
        exists: count > 0,
        generators,
        generators_complete: complete,
        pairing: PairingSummary { s: fz.self_reciprocal_count(), t: fz.pair_count() },
    })
}

/// Compares a classification with the brute-force oracle.
pub fn oracle_check(field: &Field, n: usize, shift: Shift, result: &CatalogResult) -> Result<()> {
    let found = oracle::oracle_selfdual_search(field, n, shift)?;
    let mismatch = |what: &str| {
        Err(Error::InvariantViolation(format!(
            "engine and oracle disagree on {what} for n = {n} over {field}"
        )))
    };
    if found.len() as u128 != result.count {
        return mismatch("the count");
    }
    if result.generators_complete {
        let mut engine = result.generators.clone();
        let mut brute: Vec<String> = found.iter().map(ToString::to_string).collect();
        engine.sort();
        brute.sort();
        if engine != brute {
            return mismatch("the generator list");
        }
    }
    Ok(())
}

pub fn unix_now() -> u64 {
    SystemTime::now().duration_since(UNIX_EPOCH).map_or(0, |d| d.as_secs())
}

pub fn build_record(key: CatalogKey, verify: bool) -> Result<CatalogRecord> {
    let shift = Shift::from_constant(key.a)?;
    if key.p == 2 && shift == Shift::Negacyclic {
        return Err(Error::NegacyclicTrivialInCharTwo);
    }
    let field = make_field(key.p, key.s)?;
    let n = usize::try_from(key.n).map_err(|_| Error::InvalidInput("length too large".into()))?;
    let result = classify(&field, n, shift)?;
    if verify {
        oracle_check(&field, n, shift, &result)?;
    }
    Ok(CatalogRecord {
        key,
        provenance: Provenance {
            engine_version: ENGINE_VERSION.to_string(),
            oracle_checked: verify,
            timestamp: unix_now(),
        },
        result,
    })
}

/// A catalog file held in memory; existing lines are preserved verbatim.
#[derive(Debug)]
pub struct Catalog {
    path: PathBuf,
    lines: Vec<String>,
    index: BTreeMap<CatalogKey, usize>,
    dirty: bool,
}

impl Catalog {
    /// Loads `path`, treating a missing file as empty.
    pub fn open(path: &Path) -> Result<Catalog> {
        let mut catalog = Catalog { path: path.to_path_buf(), lines: Vec::new(), index: BTreeMap::new(), dirty: false };
        let text = match fs::read(path) {
            Ok(bytes) => String::from_utf8(bytes)
                .map_err(|e| Error::CorruptCatalog { line: 0, message: format!("not UTF-8: {e}") })?,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(catalog),
            Err(e) => return Err(e.into()),
        };
        for (i, line) in text.lines().enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let record: CatalogRecord = serde_json::from_str(line)
                .map_err(|e| Error::CorruptCatalog { line: i + 1, message: e.to_string() })?;
            if catalog.index.contains_key(&record.key) {
                return Err(Error::CorruptCatalog { line: i + 1, message: "duplicate key".into() });
            }
            catalog.index.insert(record.key, catalog.lines.len());
            catalog.lines.push(line.to_string());
        }
        Ok(catalog)
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    pub fn len(&self) -> usize {
        self.lines.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lines.is_empty()
    }

    pub fn get(&self, key: &CatalogKey) -> Option<CatalogRecord> {
        self.index.get(key).map(|&i| serde_json::from_str(&self.lines[i]).expect("validated on load"))
    }

    /// Whether `key` needs (re)computing: absent, or unchecked when an
    /// oracle-checked record is wanted.
    pub fn needs(&self, key: &CatalogKey, verify: bool) -> bool {
        match self.get(key) {
            None => true,
            Some(r) => verify && !r.provenance.oracle_checked,
        }
    }

    /// Inserts a new record or replaces an existing one in place.
    pub fn upsert(&mut self, record: &CatalogRecord) {
        let line = record.to_json_line();
        match self.index.get(&record.key) {
            Some(&i) => self.lines[i] = line,
            None => {
                self.index.insert(record.key, self.lines.len());
                self.lines.push(line);
            }
        }
        self.dirty = true;
    }

    /// Writes the catalog through a temporary file in the same directory.
    pub fn save(&mut self) -> Result<()> {
        if !self.dirty {
            return Ok(());
        }
        let dir = match self.path.parent() {
            Some(d) if !d.as_os_str().is_empty() => d.to_path_buf(),
            _ => PathBuf::from("."),
        };
        let name = self.path.file_name().map_or_else(|| "catalog".into(), |n| n.to_string_lossy().into_owned());
        let tmp = dir.join(format!(".{name}.tmp"));
        {
            let mut f = fs::File::create(&tmp)?;
            for line in &self.lines {
                f.write_all(line.as_bytes())?;
                f.write_all(b"\n")?;
            }
            f.sync_all()?;
        }
        fs::rename(&tmp, &self.path)?;
        self.dirty = false;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classify_examples() {
        let f5 = make_field(5, 1).unwrap();
        let r = classify(&f5, 10, Shift::Negacyclic).unwrap();
        assert_eq!((r.count, r.exists, r.generators.len()), (6, true, 6));
        assert_eq!(r.pairing, PairingSummary { s: 0, t: 1 });
        oracle_check(&f5, 10, Shift::Negacyclic, &r).unwrap();

        let f3 = make_field(3, 1).unwrap();
        let r = classify(&f3, 6, Shift::Negacyclic).unwrap();
        assert_eq!((r.count, r.exists, r.pairing.s), (0, false, 1));

        let f2 = make_field(2, 1).unwrap();
        let r = classify(&f2, 6, Shift::Cyclic).unwrap();
        assert_eq!(r.generators, vec!["1 + 1*x^3".to_string()]);
    }

    #[test]
    fn record_round_trip() {
        let key = CatalogKey { a: -1, n: 10, p: 5, s: 1 };
        let rec = build_record(key, true).unwrap();
        assert!(rec.provenance.oracle_checked);
        let line = rec.to_json_line();
        assert!(line.starts_with("{\"key\":{\"a\":-1,\"n\":10,\"p\":5,\"s\":1},\"provenance\""));
        let back: CatalogRecord = serde_json::from_str(&line).unwrap();
        assert_eq!(back, rec);
        let value: serde_json::Value = serde_json::from_str(&line).unwrap();
        assert_eq!(serde_json::to_string(&value).unwrap(), line);
        assert_eq!(
            build_record(CatalogKey { a: -1, n: 6, p: 2, s: 1 }, false).unwrap_err(),
            Error::NegacyclicTrivialInCharTwo
        );
    }

    #[test]
    fn catalog_dedupes_and_reports_corruption() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("cat.jsonl");
        let mut cat = Catalog::open(&path).unwrap();
        assert!(cat.is_empty());
        let key = CatalogKey { a: -1, n: 6, p: 3, s: 1 };
        let rec = build_record(key, false).unwrap();
        cat.upsert(&rec);
        cat.upsert(&rec);
        cat.save().unwrap();
        let cat = Catalog::open(&path).unwrap();
        assert_eq!(cat.len(), 1);
        assert!(!cat.needs(&key, false));
        assert!(cat.needs(&key, true));

        let mut text = fs::read_to_string(&path).unwrap();
        text.push_str("{not json\n");
        fs::write(&path, text).unwrap();
        assert!(matches!(Catalog::open(&path), Err(Error::CorruptCatalog { line: 2, .. })));
    }
}
