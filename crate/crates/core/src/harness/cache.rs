//! Plain-text prefix cache.
//!
//! ```text
//! ptmpow v1 <family> <m> <count> <crc32 of body, 8 hex digits>
//! <value 0>
//! <value 1>
//! ...
//! ```
//!
//! The body is every value in decimal followed by `\n`.

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::bm::BmSeq;
use crate::error::{Error, Result};
use crate::tm::TmSeq;

const MAGIC: &str = "ptmpow";
const VERSION: &str = "v1";

/// Which sequence a cache file holds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    /// `t_m(n)`.
    T,
    /// `b_m(n)`.
    B,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::T => "t",
            Family::B => "b",
        })
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "t" => Ok(Family::T),
            "b" => Ok(Family::B),
            other => Err(Error::InvalidArgument(format!("unknown family {other:?}"))),
        }
    }
}

/// A prefix `s(0..count)` of one sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CachedPrefix {
    pub family: Family,
    pub m: u64,
    pub values: Vec<BigInt>,
}

impl CachedPrefix {
    /// Computes `count` values from the recurrences.
    pub fn compute(family: Family, m: u64, count: u64) -> Result<Self> {
        if count == 0 {
            return Ok(Self {
                family,
                m,
                values: Vec::new(),
            });
        }
        let values = match family {
            Family::T => TmSeq::with_max(m, count - 1)?.values().to_vec(),
            Family::B => BmSeq::with_max(m, count - 1)?.values().to_vec(),
        };
        Ok(Self { family, m, values })
    }

    pub fn encode(&self) -> String {
        let mut body = String::new();
        for v in &self.values {
            body.push_str(&v.to_string());
            body.push('\n');
        }
        let crc = crc32fast::hash(body.as_bytes());
        format!(
            "{MAGIC} {VERSION} {} {} {} {crc:08x}\n{body}",
            self.family,
            self.m,
            self.values.len()
        )
    }

    pub fn decode(text: &str) -> Result<Self> {
        let bad = |msg: String| Error::Cache(msg);
        let (header, body) = text
            .split_once('\n')
            .ok_or_else(|| bad("missing header".into()))?;
        let fields: Vec<&str> = header.split(' ').collect();
        let [magic, version, family, m, count, crc] = fields[..] else {
            return Err(bad(format!("malformed header {header:?}")));
        };
        if magic != MAGIC {
            return Err(bad(format!("not a cache file (starts with {magic:?})")));
        }
        if version != VERSION {
            return Err(bad(format!("unsupported version {version}")));
        }
        let family: Family = family.parse()?;
        let m: u64 = m.parse().map_err(|_| bad(format!("bad m {m:?}")))?;
        let count: usize = count
            .parse()
            .map_err(|_| bad(format!("bad count {count:?}")))?;
        let crc = u32::from_str_radix(crc, 16).map_err(|_| bad(format!("bad checksum {crc:?}")))?;
        let actual = crc32fast::hash(body.as_bytes());
        if actual != crc {
            return Err(bad(format!(
                "checksum mismatch: header {crc:08x}, body {actual:08x}"
            )));
        }
        let values = body
            .lines()
            .map(|l| {
                l.parse::<BigInt>()
                    .map_err(|_| bad(format!("bad value {l:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        if values.len() != count {
            return Err(bad(format!(
                "header says {count} values, body has {}",
                values.len()
            )));
        }
        Ok(Self { family, m, values })
    }
}

/// Conventional file name inside a cache directory, e.g. `t3.txt`.
pub fn cache_path(dir: &Path, family: Family, m: u64) -> PathBuf {
    dir.join(format!("{family}{m}.txt"))
}

pub fn cache_store(prefix: &CachedPrefix, path: &Path) -> Result<()> {
    if let Some(parent) = path.parent() {
        if !parent.as_os_str().is_empty() {
            fs::create_dir_all(parent)?;
        }
    }
    fs::write(path, prefix.encode())?;
    Ok(())
}

pub fn cache_load(path: &Path) -> Result<CachedPrefix> {
    CachedPrefix::decode(&fs::read_to_string(path)?)
}

/// Loads the cached prefix for `(family, m)` from `dir` if it holds at
/// least `count` values; otherwise computes it and rewrites the file.
pub fn load_or_compute(dir: &Path, family: Family, m: u64, count: u64) -> Result<CachedPrefix> {
    let path = cache_path(dir, family, m);
    if path.exists() {
        let cached = cache_load(&path)?;
        if cached.family == family && cached.m == m && cached.values.len() as u64 >= count {
            return Ok(cached);
        }
    }
    let fresh = CachedPrefix::compute(family, m, count)?;
    cache_store(&fresh, &path)?;
    Ok(fresh)
}
