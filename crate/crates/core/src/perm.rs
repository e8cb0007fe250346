//! Linear and circular permutations, rotation-based containment, trivial
//! symmetries, cyclic descents, and the exhaustive avoidance oracle that
//! every encoding in this crate is tested against.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// One-line permutation of {1, ..., n}.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinearPermutation {
    word: Vec<u32>,
}

impl LinearPermutation {
    pub fn new(word: Vec<u32>) -> Result<Self> {
        let n = word.len();
        if n == 0 {
            return Err(Error::NotAPermutation("empty word".into()));
        }
        let mut seen = vec![false; n + 1];
        for &v in &word {
            if v == 0 || v as usize > n || seen[v as usize] {
                return Err(Error::NotAPermutation(format!("{word:?}")));
            }
            seen[v as usize] = true;
        }
        Ok(LinearPermutation { word })
    }

    pub fn identity(n: usize) -> Self {
        LinearPermutation {
            word: (1..=n as u32).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn values(&self) -> &[u32] {
        &self.word
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u32; self.word.len()];
        for (i, &v) in self.word.iter().enumerate() {
            inv[v as usize - 1] = i as u32 + 1;
        }
        LinearPermutation { word: inv }
    }

    /// Descent positions: 1-based `i` with `w[i] > w[i+1]`.
    pub fn descents(&self) -> Vec<usize> {
        self.word
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] > w[1])
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// True iff some subsequence of `self` is order-isomorphic to `pattern`.
    pub fn contains(&self, pattern: &LinearPermutation) -> bool {
        contains_word(&self.word, &pattern.word)
    }
}

/// Subsequence order-isomorphism on raw value slices. Backtracking with
/// value-interval pruning; `pattern` values must be distinct.
pub(crate) fn contains_word(hay: &[u32], pattern: &[u32]) -> bool {
    if pattern.is_empty() {
        return true;
    }
    if pattern.len() > hay.len() {
        return false;
    }
    let mut chosen: Vec<u32> = Vec::with_capacity(pattern.len());
    fn go(hay: &[u32], pat: &[u32], start: usize, chosen: &mut Vec<u32>) -> bool {
        let j = chosen.len();
        if j == pat.len() {
            return true;
        }
        let remaining = pat.len() - j;
        // bounds implied by the already-matched prefix
        let mut lo = 0u32;
        let mut hi = u32::MAX;
        for (i, &c) in chosen.iter().enumerate() {
            if pat[i] < pat[j] {
                lo = lo.max(c);
            } else {
                hi = hi.min(c);
            }
        }
        for pos in start..=hay.len() - remaining {
            let v = hay[pos];
            if v > lo && v < hi {
                chosen.push(v);
                if go(hay, pat, pos + 1, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    go(hay, pattern, 0, &mut chosen)
}

impl fmt::Display for LinearPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.len() <= 9 {
            for v in &self.word {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.word.iter().map(|v| v.to_string()).collect();
            write!(f, "{}", parts.join(" "))
        }
    }
}

impl fmt::Debug for LinearPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for LinearPermutation {
    type Err = Error;

    /// Accepts `23145` (single digits) or `2 3 1 4 5` / `2,3,1,4,5`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('[').trim_end_matches(']');
        if s.is_empty() {
            return Err(Error::Parse("empty permutation".into()));
        }
        let vals: Vec<u32> = if s.contains(' ') || s.contains(',') {
            s.split([' ', ','])
                .filter(|t| !t.is_empty())
                .map(|t| t.parse().map_err(|_| Error::Parse(format!("bad value `{t}`"))))
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .filter(|&d| d > 0)
                        .ok_or_else(|| Error::Parse(format!("bad digit `{c}`")))
                })
                .collect::<Result<_>>()?
        };
        LinearPermutation::new(vals)
    }
}

/// Rotation class of a permutation, stored as the rotation starting with 1.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CircularPermutation {
    word: LinearPermutation,
}

impl CircularPermutation {
    /// Rotates an arbitrary permutation word to its canonical form.
    pub fn canonicalize(word: &[u32]) -> Result<Self> {
        let lp = LinearPermutation::new(word.to_vec())?;
        Ok(Self::from_linear(&lp))
    }

    pub fn from_linear(p: &LinearPermutation) -> Self {
        let pos = p.values().iter().position(|&v| v == 1).unwrap();
        let mut word = Vec::with_capacity(p.len());
        word.extend_from_slice(&p.values()[pos..]);
        word.extend_from_slice(&p.values()[..pos]);
        CircularPermutation {
            word: LinearPermutation { word },
        }
    }

    pub fn identity(n: usize) -> Self {
        CircularPermutation {
            word: LinearPermutation::identity(n),
        }
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn canonical(&self) -> &LinearPermutation {
        &self.word
    }

    /// All rotations as linear words.
    pub fn rotations(&self) -> Vec<Vec<u32>> {
        let w = self.word.values();
        let n = w.len();
        (0..n)
            .map(|s| {
                let mut r = Vec::with_capacity(n);
                r.extend_from_slice(&w[s..]);
                r.extend_from_slice(&w[..s]);
                r
            })
            .collect()
    }

    /// The rotation whose last value is n.
    pub fn rotation_ending_with_max(&self) -> LinearPermutation {
        let w = self.word.values();
        let n = w.len();
        let pos = w.iter().position(|&v| v as usize == n).unwrap();
        let mut r = Vec::with_capacity(n);
        r.extend_from_slice(&w[pos + 1..]);
        r.extend_from_slice(&w[..=pos]);
        LinearPermutation { word: r }
    }

    /// Circular containment: some rotation linearly contains the pattern.
    pub fn contains(&self, pattern: &CircularPermutation) -> bool {
        if pattern.len() > self.len() {
            return false;
        }
        self.rotations()
            .iter()
            .any(|r| contains_word(r, pattern.word.values()))
    }

    /// True iff the class contains the increasing pattern of size k, i.e.
    /// some rotation has an increasing subsequence of length k.
    pub fn contains_identity(&self, k: usize) -> bool {
        if k == 0 {
            return true;
        }
        if k > self.len() {
            return false;
        }
        self.rotations().iter().any(|r| {
            // longest increasing subsequence, O(n^2) is plenty here
            let n = r.len();
            let mut best = vec![1usize; n];
            let mut max = 1;
            for i in 1..n {
                for j in 0..i {
                    if r[j] < r[i] && best[j] + 1 > best[i] {
                        best[i] = best[j] + 1;
                    }
                }
                max = max.max(best[i]);
            }
            max >= k
        })
    }

    pub fn reverse(&self) -> Self {
        let mut w = self.word.values().to_vec();
        w.reverse();
        Self::canonicalize(&w).unwrap()
    }

    pub fn complement(&self) -> Self {
        let n = self.len() as u32;
        let w: Vec<u32> = self.word.values().iter().map(|&v| n + 1 - v).collect();
        Self::canonicalize(&w).unwrap()
    }

    pub fn reverse_complement(&self) -> Self {
        self.reverse().complement()
    }

    /// Cyclic descent positions of the canonical word: 1-based `i` with
    /// `w[i] > w[i+1]`, indices mod n. For n = 1 this is empty by convention
    /// (the class of the single letter has no descent to count).
    pub fn cyclic_descent_set(&self) -> Vec<usize> {
        let w = self.word.values();
        let n = w.len();
        if n < 2 {
            return Vec::new();
        }
        let mut out = Vec::new();
        for i in 0..n {
            if w[i] > w[(i + 1) % n] {
                out.push(i + 1);
            }
        }
        out
    }

    pub fn cdes(&self) -> usize {
        self.cyclic_descent_set().len()
    }
}

impl fmt::Display for CircularPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.word)
    }
}

impl fmt::Debug for CircularPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for CircularPermutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lp: LinearPermutation = s.parse()?;
        Ok(Self::from_linear(&lp))
    }
}

fn next_permutation(v: &mut [u32]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// All (n-1)! circular permutations of [n] in lexicographic order of their
/// canonical words.
pub fn all_circular(n: usize) -> impl Iterator<Item = CircularPermutation> {
    assert!(n >= 1);
    let mut rest: Vec<u32> = (2..=n as u32).collect();
    let mut done = false;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let mut word = Vec::with_capacity(rest.len() + 1);
        word.push(1);
        word.extend_from_slice(&rest);
        if !next_permutation(&mut rest) {
            done = true;
        }
        Some(CircularPermutation {
            word: LinearPermutation { word },
        })
    })
}

/// A reduced set of circular patterns: no member circularly contains another
/// and duplicates are removed.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PatternSet {
    patterns: Vec<CircularPermutation>,
}

impl PatternSet {
    pub fn new(mut patterns: Vec<CircularPermutation>) -> Self {
        patterns.sort();
        patterns.dedup();
        // drop any pattern that contains another member
        let keep: Vec<CircularPermutation> = patterns
            .iter()
            .filter(|p| {
                !patterns
                    .iter()
                    .any(|q| q != *p && p.contains(q))
            })
            .cloned()
            .collect();
        PatternSet { patterns: keep }
    }

    pub fn empty() -> Self {
        PatternSet { patterns: Vec::new() }
    }

    pub fn patterns(&self) -> &[CircularPermutation] {
        &self.patterns
    }

    pub fn is_empty(&self) -> bool {
        self.patterns.is_empty()
    }

    /// Canonical text key, e.g. `1324+12534`.
    pub fn key(&self) -> String {
        self.patterns
            .iter()
            .map(|p| p.canonical().to_string())
            .collect::<Vec<_>>()
            .join("+")
    }
}

impl fmt::Display for PatternSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.patterns.iter().map(|p| p.to_string()).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// Avoiders of `ps` among circular permutations of [n], by exhaustive scan.
pub fn avoiders(n: usize, ps: &PatternSet) -> Vec<CircularPermutation> {
    all_circular(n)
        .filter(|c| ps.patterns.iter().all(|p| !c.contains(p)))
        .collect()
}

/// Exhaustive-scan count of avoiders; the ground truth for every encoding.
pub fn count_avoiders(n: usize, ps: &PatternSet) -> u64 {
    all_circular(n)
        .filter(|c| ps.patterns.iter().all(|p| !c.contains(p)))
        .count() as u64
}

/// Coefficient vector of the cyclic descent polynomial over the avoidance
/// class: entry j counts avoiders with cdes = j.
pub fn descent_polynomial(n: usize, ps: &PatternSet) -> Vec<u64> {
    let mut coeffs = vec![0u64; n.max(1)];
    for c in all_circular(n) {
        if ps.patterns.iter().all(|p| !c.contains(p)) {
            coeffs[c.cdes()] += 1;
        }
    }
    coeffs
}
