//! Binary words with run structure, subsequence containment, and
//! subsequence-automaton counting.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// A finite sequence over {0,1}. `false` is 0 and `true` is 1.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinaryWord {
    bits: Vec<bool>,
}

impl BinaryWord {
    pub fn new(bits: Vec<bool>) -> Self {
        BinaryWord { bits }
    }

    pub fn empty() -> Self {
        BinaryWord { bits: Vec::new() }
    }

    pub fn zeros(n: usize) -> Self {
        BinaryWord { bits: vec![false; n] }
    }

    pub fn ones(n: usize) -> Self {
        BinaryWord { bits: vec![true; n] }
    }

    /// `0^a 1^b`.
    pub fn zeros_ones(a: usize, b: usize) -> Self {
        let mut bits = vec![false; a];
        bits.extend(std::iter::repeat_n(true, b));
        BinaryWord { bits }
    }

    /// `1^a 0^b`.
    pub fn ones_zeros(a: usize, b: usize) -> Self {
        let mut bits = vec![true; a];
        bits.extend(std::iter::repeat_n(false, b));
        BinaryWord { bits }
    }

    /// Builds the word with the given run sizes, starting with `first` and
    /// alternating. Zero-length runs are rejected.
    pub fn from_run_sizes(first: bool, sizes: &[usize]) -> Result<Self> {
        let mut bits = Vec::new();
        let mut bit = first;
        for &s in sizes {
            if s == 0 {
                return Err(Error::InvalidWord("zero-length run".into()));
            }
            bits.extend(std::iter::repeat_n(bit, s));
            bit = !bit;
        }
        Ok(BinaryWord { bits })
    }

    /// `B(n_1, n_2, ...)` = `0^{n_1} 1^{n_2} 0^{n_3} ...`
    pub fn b(sizes: &[usize]) -> Result<Self> {
        Self::from_run_sizes(false, sizes)
    }

    /// Alternating word `0101...` of the given length.
    pub fn alternating(len: usize) -> Self {
        BinaryWord {
            bits: (0..len).map(|i| i % 2 == 1).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn bit(&self, i: usize) -> bool {
        self.bits[i]
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn complement(&self) -> Self {
        BinaryWord {
            bits: self.bits.iter().map(|&b| !b).collect(),
        }
    }

    pub fn reversed(&self) -> Self {
        let mut bits = self.bits.clone();
        bits.reverse();
        BinaryWord { bits }
    }

    /// Maximal constant blocks as (bit, length) pairs, in order.
    pub fn runs(&self) -> Vec<(bool, usize)> {
        let mut out = Vec::new();
        for &b in &self.bits {
            match out.last_mut() {
                Some((bit, len)) if *bit == b => *len += 1,
                _ => out.push((b, 1)),
            }
        }
        out
    }

    pub fn run_count(&self) -> usize {
        self.runs().len()
    }

    pub fn run_sizes(&self) -> Vec<usize> {
        self.runs().into_iter().map(|(_, l)| l).collect()
    }

    pub fn is_alternating(&self) -> bool {
        self.bits.windows(2).all(|w| w[0] != w[1])
    }

    pub fn count_ones(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    /// True when `pattern` occurs in `self` as a (not necessarily
    /// contiguous) subsequence. Greedy matching is exact here.
    pub fn contains_subsequence(&self, pattern: &BinaryWord) -> bool {
        let mut it = pattern.bits.iter();
        let mut need = it.next();
        for &b in &self.bits {
            match need {
                Some(&p) if p == b => need = it.next(),
                Some(_) => {}
                None => break,
            }
        }
        need.is_none()
    }

    /// Run-length notation such as `0^3 1 0 1^2`. The empty word prints as `e`.
    pub fn run_notation(&self) -> String {
        if self.bits.is_empty() {
            return "e".to_string();
        }
        self.runs()
            .into_iter()
            .map(|(b, l)| {
                let c = if b { '1' } else { '0' };
                if l == 1 {
                    c.to_string()
                } else {
                    format!("{}^{}", c, l)
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            write!(f, "{}", if b { '1' } else { '0' })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryWord({})", self)
    }
}

impl FromStr for BinaryWord {
    type Err = Error;

    /// Accepts plain bit strings (`010011`) and run notation (`0^2 1^3 0`).
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "e" {
            return Ok(BinaryWord::empty());
        }
        if s.chars().all(|c| c == '0' || c == '1') {
            return Ok(BinaryWord {
                bits: s.chars().map(|c| c == '1').collect(),
            });
        }
        let mut bits = Vec::new();
        for tok in s.split_whitespace() {
            let (head, exp) = match tok.split_once('^') {
                Some((h, e)) => {
                    let exp: usize = e
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad exponent in `{tok}`")))?;
                    (h, exp)
                }
                None => (tok, 1),
            };
            let bit = match head {
                "0" => false,
                "1" => true,
                _ => return Err(Error::Parse(format!("bad run token `{tok}`"))),
            };
            bits.extend(std::iter::repeat_n(bit, exp));
        }
        Ok(BinaryWord { bits })
    }
}

/// How many runs a counted word must have.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RunFilter {
    Any,
    /// Exactly 3 or 4 runs.
    ThreeOrFour,
    /// At least 5 runs.
    AtLeastFive,
}

impl RunFilter {
    fn accepts(self, runs_clamped: u8) -> bool {
        match self {
            RunFilter::Any => true,
            RunFilter::ThreeOrFour => runs_clamped == 3 || runs_clamped == 4,
            RunFilter::AtLeastFive => runs_clamped >= 5,
        }
    }
}

/// Number of binary words of length `len` containing none of `patterns` as a
/// subsequence. Product subsequence automaton over pattern-prefix progress.
pub fn count_words_avoiding(len: usize, patterns: &[BinaryWord]) -> BigUint {
    count_words_avoiding_filtered(len, patterns, None, RunFilter::Any)
}

/// As [`count_words_avoiding`], restricted to words with a forced first bit
/// and/or a run-count class. Run counts are tracked clamped at 5.
pub fn count_words_avoiding_filtered(
    len: usize,
    patterns: &[BinaryWord],
    first_bit: Option<bool>,
    filter: RunFilter,
) -> BigUint {
    if patterns.iter().any(|p| p.is_empty()) {
        return BigUint::zero();
    }
    // state: (progress per pattern, last bit, clamped run count)
    type State = (Vec<u8>, bool, u8);
    let mut dp: std::collections::HashMap<State, BigUint> = std::collections::HashMap::new();
    let start = vec![0u8; patterns.len()];

    if len == 0 {
        return if filter.accepts(0) { BigUint::one() } else { BigUint::zero() };
    }

    // first position
    for bit in [false, true] {
        if let Some(fb) = first_bit {
            if bit != fb {
                continue;
            }
        }
        if let Some(st) = advance(&start, patterns, bit) {
            *dp.entry((st, bit, 1)).or_default() += BigUint::one();
        }
    }

    for _ in 1..len {
        let mut next: std::collections::HashMap<State, BigUint> = std::collections::HashMap::new();
        for ((prog, last, runs), cnt) in dp {
            for bit in [false, true] {
                if let Some(st) = advance(&prog, patterns, bit) {
                    let runs2 = if bit == last { runs } else { (runs + 1).min(5) };
                    *next.entry((st, bit, runs2)).or_default() += &cnt;
                }
            }
        }
        dp = next;
    }

    dp.into_iter()
        .filter(|((_, _, runs), _)| filter.accepts(*runs))
        .map(|(_, c)| c)
        .sum()
}

/// Advances every pattern's greedy prefix pointer by one input bit.
/// Returns `None` when some pattern becomes fully matched.
fn advance(progress: &[u8], patterns: &[BinaryWord], bit: bool) -> Option<Vec<u8>> {
    let mut next = progress.to_vec();
    for (i, p) in patterns.iter().enumerate() {
        let at = next[i] as usize;
        if at < p.len() && p.bit(at) == bit {
            next[i] += 1;
            if next[i] as usize == p.len() {
                return None;
            }
        }
    }
    Some(next)
}
