//! On-disk cache of quotient bases and the run configuration.
//!
//! A cache file is plain text:
//!
//! ```text
//! # hitwork <version> sha256=<hex digest of everything below this line>
//! <k> <d> <dim>
//! <one representative monomial per line>
//! classes <monomial count>
//! <class of each monomial as space-separated hex words>
//! ```
//!
//! A version or checksum mismatch makes the entry stale and it is recomputed.
//! Writes go to a temporary file that is renamed into place.

use std::fmt::Write as _;
use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::hit::QuotientBasis;
use crate::linalg::BitVector;
use crate::poly::Monomial;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

pub const DEFAULT_MAX_DEGREE: u32 = 128;
pub const DEFAULT_SEED: u64 = 0x5eed;

/// Settings shared by every command.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    /// `None` disables the cache.
    pub cache_dir: Option<PathBuf>,
    pub max_degree: u32,
    pub threads: usize,
    pub seed: u64,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            cache_dir: default_cache_dir(),
            max_degree: DEFAULT_MAX_DEGREE,
            threads: std::thread::available_parallelism().map_or(1, |n| n.get()),
            seed: DEFAULT_SEED,
        }
    }
}

/// `$HITWORK_CACHE`, else `$HOME/.cache/hitwork`.
pub fn default_cache_dir() -> Option<PathBuf> {
    if let Some(dir) = std::env::var_os("HITWORK_CACHE") {
        return Some(PathBuf::from(dir));
    }
    std::env::var_os("HOME").map(|h| PathBuf::from(h).join(".cache").join("hitwork"))
}

impl RunConfig {
    pub fn check_degree(&self, d: u32) -> Result<()> {
        if d > self.max_degree {
            return Err(Error::DegreeCap { requested: d, cap: self.max_degree });
        }
        Ok(())
    }

    /// `Q_k(d)` from the cache if present and valid, otherwise computed and
    /// stored. Cache write failures are not fatal.
    pub fn quotient(&self, k: usize, d: u32) -> Result<QuotientBasis> {
        self.check_degree(d)?;
        let Some(dir) = &self.cache_dir else {
            return QuotientBasis::compute_with_threads(k, d, self.threads);
        };
        let cache = Cache::new(dir);
        if let Some(qb) = cache.load(k, d)? {
            return Ok(qb);
        }
        let qb = QuotientBasis::compute_with_threads(k, d, self.threads)?;
        let _ = cache.save(&qb);
        Ok(qb)
    }
}

pub fn serialize(qb: &QuotientBasis) -> String {
    let mut body = String::new();
    let _ = writeln!(body, "{} {} {}", qb.k(), qb.degree(), qb.dim());
    for m in qb.reps() {
        let _ = writeln!(body, "{m}");
    }
    let _ = writeln!(body, "classes {}", qb.classes().len());
    for c in qb.classes() {
        let words: Vec<String> = c.words().iter().map(|w| format!("{w:x}")).collect();
        let _ = writeln!(body, "{}", words.join(" "));
    }
    format!("# hitwork {VERSION} sha256={}\n{body}", digest(&body))
}

fn digest(body: &str) -> String {
    Sha256::digest(body.as_bytes()).iter().fold(String::with_capacity(64), |mut s, b| {
        let _ = write!(s, "{b:02x}");
        s
    })
}

fn bad(msg: impl Into<String>) -> Error {
    Error::Cache(msg.into())
}

/// Parses a cache file, checking version, checksum and internal consistency.
pub fn deserialize(text: &str) -> Result<QuotientBasis> {
    let (header, body) = text.split_once('\n').ok_or_else(|| bad("missing header"))?;
    let mut h = header.split_whitespace();
    if (h.next(), h.next()) != (Some("#"), Some("hitwork")) {
        return Err(bad("not a hitwork cache file"));
    }
    let version = h.next().ok_or_else(|| bad("missing version"))?;
    if version != VERSION {
        return Err(bad(format!("version {version}, expected {VERSION}")));
    }
    let sum = h.next().and_then(|s| s.strip_prefix("sha256=")).ok_or_else(|| bad("missing checksum"))?;
    if sum != digest(body) {
        return Err(bad("checksum mismatch"));
    }

    let mut lines = body.lines();
    let mut next = || lines.next().ok_or_else(|| bad("truncated"));
    let dims: Vec<u64> = next()?
        .split_whitespace()
        .map(|t| t.parse().map_err(|_| bad("bad size line")))
        .collect::<Result<_>>()?;
    let [k, d, q] = dims[..] else {
        return Err(bad("bad size line"));
    };
    let (k, d, q) = (k as usize, d as u32, q as usize);
    let mut reps = Vec::with_capacity(q);
    for _ in 0..q {
        reps.push(next()?.parse::<Monomial>().map_err(|e| bad(e.to_string()))?);
    }
    let n: usize = next()?
        .strip_prefix("classes ")
        .and_then(|t| t.trim().parse().ok())
        .ok_or_else(|| bad("bad classes line"))?;
    let mut classes = Vec::with_capacity(n);
    for _ in 0..n {
        let words = next()?
            .split_whitespace()
            .map(|w| u64::from_str_radix(w, 16).map_err(|_| bad("bad hex word")))
            .collect::<Result<Vec<_>>>()?;
        classes.push(BitVector::from_words(q, words)?);
    }
    let ctx = crate::hit::DegreeContext::new(k, d)?;
    let rep_columns = reps
        .iter()
        .map(|m| ctx.index_of(m).ok_or_else(|| bad(format!("{m} is not a degree-{d} monomial"))))
        .collect::<Result<Vec<_>>>()?;
    QuotientBasis::from_classes(k, d, rep_columns, classes)
}

/// A directory of cache files, one per `(k, d)`.
#[derive(Clone, Debug)]
pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn new(dir: impl AsRef<Path>) -> Self {
        Self { dir: dir.as_ref().to_path_buf() }
    }

    pub fn path(&self, k: usize, d: u32) -> PathBuf {
        self.dir.join(format!("q_k{k}_d{d}.txt"))
    }

    /// `Ok(None)` when the entry is missing or stale.
    pub fn load(&self, k: usize, d: u32) -> Result<Option<QuotientBasis>> {
        let text = match fs::read_to_string(self.path(k, d)) {
            Ok(t) => t,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
            Err(e) => return Err(e.into()),
        };
        match deserialize(&text) {
            Ok(qb) if qb.k() == k && qb.degree() == d => Ok(Some(qb)),
            _ => Ok(None),
        }
    }

    pub fn save(&self, qb: &QuotientBasis) -> Result<PathBuf> {
        fs::create_dir_all(&self.dir)?;
        let path = self.path(qb.k(), qb.degree());
        let tmp = self.dir.join(format!(".q_k{}_d{}.{}.tmp", qb.k(), qb.degree(), std::process::id()));
        let mut f = fs::File::create(&tmp)?;
        f.write_all(serialize(qb).as_bytes())?;
        f.sync_all()?;
        drop(f);
        fs::rename(&tmp, &path)?;
        Ok(path)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hit::quotient_basis;

    #[test]
    fn text_round_trip() {
        let q = quotient_basis(3, 7).unwrap();
        let back = deserialize(&serialize(&q)).unwrap();
        assert_eq!(back.reps(), q.reps());
        assert_eq!(back.hit(), q.hit());
    }

    #[test]
    fn tampering_is_detected() {
        let text = serialize(&quotient_basis(2, 3).unwrap());
        let flipped = text.replacen("(2,1)", "(1,2)", 1);
        assert!(matches!(deserialize(&flipped), Err(Error::Cache(_))));
        let old = text.replacen(VERSION, "0.0.0-old", 1);
        assert!(matches!(deserialize(&old), Err(Error::Cache(m)) if m.contains("version")));
        assert!(deserialize("").is_err());
    }

    #[test]
    fn degree_cap() {
        let cfg = RunConfig { cache_dir: None, max_degree: 10, threads: 1, seed: 0 };
        assert!(matches!(cfg.quotient(2, 11), Err(Error::DegreeCap { requested: 11, cap: 10 })));
        assert_eq!(cfg.quotient(1, 7).unwrap().dim(), 1);
    }
}
