//! Vendored reference sequences for the [4,5]-pair families, the b-file
//! format, and a persistent sequence cache.

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};

use num_bigint::BigUint;
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::perm::PatternSet;
use crate::wilf::encoding_terms;

/// A [4,5]-pair with locally stored reference terms and its OEIS number.
pub struct ReferencePair {
    pub anchor: &'static str,
    pub pattern: &'static str,
    pub oeis: &'static str,
    data: &'static str,
}

impl ReferencePair {
    pub fn id(&self) -> String {
        format!("[{},{}]", self.anchor, self.pattern)
    }

    pub fn pattern_set(&self) -> PatternSet {
        PatternSet::new(vec![
            self.anchor.parse().unwrap(),
            self.pattern.parse().unwrap(),
        ])
    }

    /// Reference terms as (n, value) pairs.
    pub fn terms(&self) -> Vec<(usize, BigUint)> {
        parse_bfile(self.data).expect("vendored data parses")
    }
}

/// The ten pairs with stored references, one per known catalogued sequence.
pub static REFERENCE_PAIRS: &[ReferencePair] = &[
    ReferencePair {
        anchor: "1342",
        pattern: "12345",
        oeis: "A028387",
        data: include_str!("../data/refs/1342_12345.txt"),
    },
    ReferencePair {
        anchor: "1342",
        pattern: "12435",
        oeis: "A050407",
        data: include_str!("../data/refs/1342_12435.txt"),
    },
    ReferencePair {
        anchor: "1342",
        pattern: "12354",
        oeis: "A016789",
        data: include_str!("../data/refs/1342_12354.txt"),
    },
    ReferencePair {
        anchor: "1324",
        pattern: "12453",
        oeis: "A027927",
        data: include_str!("../data/refs/1324_12453.txt"),
    },
    ReferencePair {
        anchor: "1324",
        pattern: "15234",
        oeis: "A000129",
        data: include_str!("../data/refs/1324_15234.txt"),
    },
    ReferencePair {
        anchor: "1324",
        pattern: "12345",
        oeis: "A210673",
        data: include_str!("../data/refs/1324_12345.txt"),
    },
    ReferencePair {
        anchor: "1324",
        pattern: "12354",
        oeis: "A116717",
        data: include_str!("../data/refs/1324_12354.txt"),
    },
    ReferencePair {
        anchor: "1324",
        pattern: "12534",
        oeis: "A000325",
        data: include_str!("../data/refs/1324_12534.txt"),
    },
    ReferencePair {
        anchor: "1432",
        pattern: "12435",
        oeis: "A116721",
        data: include_str!("../data/refs/1432_12435.txt"),
    },
    ReferencePair {
        anchor: "1432",
        pattern: "15234",
        oeis: "A017401",
        data: include_str!("../data/refs/1432_15234.txt"),
    },
];

/// Looks a reference pair up by its two patterns.
pub fn find_reference(anchor: &str, pattern: &str) -> Option<&'static ReferencePair> {
    REFERENCE_PAIRS
        .iter()
        .find(|r| r.anchor == anchor && r.pattern == pattern)
}

/// Outcome of comparing a computed sequence against stored reference terms.
#[derive(Clone, Debug)]
pub struct CheckReport {
    pub pair: String,
    pub oeis: String,
    pub checked_to: usize,
    pub first_mismatch: Option<(usize, BigUint, BigUint)>,
}

impl CheckReport {
    pub fn ok(&self) -> bool {
        self.first_mismatch.is_none()
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.first_mismatch {
            None => write!(
                f,
                "{} vs {}: agree through n={}",
                self.pair, self.oeis, self.checked_to
            ),
            Some((n, want, got)) => write!(
                f,
                "{} vs {}: MISMATCH at n={n}: reference {want}, computed {got}",
                self.pair, self.oeis
            ),
        }
    }
}

/// Compares the encoding-route sequence for a reference pair against its
/// stored terms, up to min(n_max, stored length).
pub fn check_reference(pair: &ReferencePair, n_max: usize) -> Result<CheckReport> {
    let reference = pair.terms();
    let last = reference.last().map(|(n, _)| *n).unwrap_or(0);
    let to = n_max.min(last);
    let computed = encoding_terms(&pair.pattern_set(), to)?;
    let mut first_mismatch = None;
    for (n, want) in reference.iter().take_while(|(n, _)| *n <= to) {
        let got = &computed[*n - 1];
        if got != want {
            first_mismatch = Some((*n, want.clone(), got.clone()));
            break;
        }
    }
    Ok(CheckReport {
        pair: pair.id(),
        oeis: pair.oeis.to_string(),
        checked_to: to,
        first_mismatch,
    })
}

/// Parses b-file text: `n value` per line, `#` comments ignored.
pub fn parse_bfile(s: &str) -> Result<Vec<(usize, BigUint)>> {
    let mut out = Vec::new();
    for line in s.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut it = line.split_whitespace();
        let n: usize = it
            .next()
            .ok_or_else(|| Error::Parse("missing index".into()))?
            .parse()
            .map_err(|_| Error::Parse(format!("bad index in `{line}`")))?;
        let v: BigUint = it
            .next()
            .ok_or_else(|| Error::Parse("missing value".into()))?
            .parse()
            .map_err(|_| Error::Parse(format!("bad value in `{line}`")))?;
        out.push((n, v));
    }
    Ok(out)
}

/// Renders terms (indexed from n = 1) in b-file format.
pub fn format_bfile(terms: &[BigUint]) -> String {
    let mut s = String::new();
    for (i, v) in terms.iter().enumerate() {
        s.push_str(&format!("{} {}\n", i + 1, v));
    }
    s
}

/// Content-addressed on-disk cache of avoidance sequences, one b-file per
/// normalized pattern set.
pub struct SequenceCache {
    dir: PathBuf,
}

impl SequenceCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        SequenceCache { dir: dir.into() }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn path_for(&self, ps: &PatternSet) -> PathBuf {
        let mut hasher = Sha256::new();
        hasher.update(ps.key().as_bytes());
        let hex: String = hasher
            .finalize()
            .iter()
            .map(|b| format!("{b:02x}"))
            .collect();
        self.dir.join(format!("{}.bfile", &hex[..32]))
    }

    /// Cached terms from n = 1, if present.
    pub fn load(&self, ps: &PatternSet) -> Option<Vec<BigUint>> {
        let text = fs::read_to_string(self.path_for(ps)).ok()?;
        let pairs = parse_bfile(&text).ok()?;
        let mut terms = Vec::new();
        for (i, (n, v)) in pairs.into_iter().enumerate() {
            if n != i + 1 {
                return None;
            }
            terms.push(v);
        }
        Some(terms)
    }

    /// Stores terms, keeping whichever of the existing and new runs is
    /// longer. The write lands via a temp file and an atomic rename.
    pub fn store(&self, ps: &PatternSet, terms: &[BigUint]) -> Result<()> {
        if let Some(old) = self.load(ps) {
            if old.len() >= terms.len() {
                return Ok(());
            }
        }
        fs::create_dir_all(&self.dir)?;
        let path = self.path_for(ps);
        let tmp = path.with_extension(format!("tmp.{}", std::process::id()));
        let mut body = format!("# pattern set: {}\n", ps.key());
        body.push_str(&format_bfile(terms));
        fs::write(&tmp, body)?;
        fs::rename(&tmp, &path)?;
        Ok(())
    }
}
