//! Binary-word encoding of circular permutations avoiding [1342].
//!
//! Words of length n-1 code the avoiders of size n via min/max insertion.
//! Exactly the words `0^{a+1} 1^b` and `1^{b+1} 0^a` code the same class, so
//! canonical representatives are the words with more than two runs plus the
//! 0-leading words with at most two (the "exceptional" ones). Containment of
//! classes is subsequence containment of words, up to that twin pairing.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::binword::{count_words_avoiding, BinaryWord};
use crate::error::{Error, Result};
use crate::num_util::binomial;
use crate::perm::{CircularPermutation, LinearPermutation};
use crate::series::TruncatedSeries;

/// Canonical word representative of an avoider of [1342].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct CanonicalWord(BinaryWord);

impl CanonicalWord {
    pub fn new(w: BinaryWord) -> Result<Self> {
        if is_canonical(&w) {
            Ok(CanonicalWord(w))
        } else {
            Err(Error::InvalidWord(format!(
                "{w} is the 1-leading twin; use the 0-leading form"
            )))
        }
    }

    pub fn word(&self) -> &BinaryWord {
        &self.0
    }

    pub fn into_word(self) -> BinaryWord {
        self.0
    }

    pub fn is_exceptional(&self) -> bool {
        is_exceptional(&self.0)
    }

    /// Size of the coded permutation.
    pub fn perm_size(&self) -> usize {
        self.0.len() + 1
    }

    pub fn to_perm(&self) -> CircularPermutation {
        CircularPermutation::from_linear(&word_to_perm(&self.0))
    }
}

impl std::fmt::Display for CanonicalWord {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// At most two runs and 0-leading: the words whose class has two codings.
pub fn is_exceptional(w: &BinaryWord) -> bool {
    !w.is_empty() && w.run_count() <= 2 && !w.bit(0)
}

/// Canonical representatives: more than two runs, or exceptional, or empty.
pub fn is_canonical(w: &BinaryWord) -> bool {
    w.is_empty() || w.run_count() > 2 || !w.bit(0)
}

/// The min/max insertion permutation of size |w|+1: a 0 places the smallest
/// unused value, a 1 the largest, and the final slot takes the leftover.
/// The empty word maps to the permutation 1.
pub fn word_to_perm(w: &BinaryWord) -> LinearPermutation {
    let n = w.len() + 1;
    let mut lo = 1u32;
    let mut hi = n as u32;
    let mut out = Vec::with_capacity(n);
    for i in 0..w.len() {
        if w.bit(i) {
            out.push(hi);
            hi -= 1;
        } else {
            out.push(lo);
            lo += 1;
        }
    }
    out.push(lo);
    LinearPermutation::new(out).unwrap()
}

/// Reads the insertion word back off a linear permutation, or `None` when
/// the permutation is not of insertion shape.
fn read_word(linear: &[u32]) -> Option<BinaryWord> {
    let n = linear.len();
    let mut lo = 1u32;
    let mut hi = n as u32;
    let mut bits = Vec::with_capacity(n.saturating_sub(1));
    for &v in &linear[..n - 1] {
        if v == lo {
            bits.push(false);
            lo += 1;
        } else if v == hi {
            bits.push(true);
            hi -= 1;
        } else {
            return None;
        }
    }
    Some(BinaryWord::new(bits))
}

/// Inverse of the coding: the unique canonical word for an avoider of
/// [1342]. Errors when the class contains [1342].
pub fn perm_to_word(p: &CircularPermutation) -> Result<CanonicalWord> {
    let n = p.len();
    if n == 1 {
        return Ok(CanonicalWord(BinaryWord::empty()));
    }
    // the coding permutation starts with 1 or with n
    if let Some(w) = read_word(p.canonical().values()) {
        return Ok(CanonicalWord(w));
    }
    let vals = p.canonical().values();
    let pos = vals.iter().position(|&v| v as usize == n).unwrap();
    let mut rot = Vec::with_capacity(n);
    rot.extend_from_slice(&vals[pos..]);
    rot.extend_from_slice(&vals[..pos]);
    if let Some(w) = read_word(&rot) {
        // a 1-leading word with <= 2 runs would have had a readable 0-leading
        // twin, so this one is non-exceptional
        debug_assert!(w.run_count() > 2);
        return Ok(CanonicalWord(w));
    }
    Err(Error::ContainsAnchor { anchor: "1342" })
}

/// The subsequence patterns whose avoidance defines avoidance of `p`'s
/// class: `p` itself when it has more than two runs, otherwise the twin pair
/// `{0^{a+1} 1^b, 1^{b+1} 0^a}`.
pub fn forbidden_patterns(p: &BinaryWord) -> Vec<BinaryWord> {
    if p.is_empty() {
        return vec![BinaryWord::empty()];
    }
    if p.run_count() > 2 {
        return vec![p.clone()];
    }
    let (a, b) = if !p.bit(0) {
        let zeros = p.bits().iter().filter(|&&b| !b).count();
        (zeros - 1, p.len() - zeros)
    } else {
        let ones = p.count_ones();
        (p.len() - ones, ones - 1)
    };
    vec![
        BinaryWord::zeros_ones(a + 1, b),
        BinaryWord::ones_zeros(b + 1, a),
    ]
}

/// Class containment: subsequence containment, with either twin accepted
/// when the pattern has at most two runs.
pub fn word_contains(w: &BinaryWord, p: &BinaryWord) -> bool {
    forbidden_patterns(p).iter().any(|f| w.contains_subsequence(f))
}

/// All canonical words of length n-1; there are 2^{n-1} - (n-1) of them.
pub fn enumerate(n: usize) -> Vec<CanonicalWord> {
    assert!(n >= 2);
    let m = n - 1;
    let mut out = Vec::new();
    for mask in 0u64..(1 << m) {
        let w = BinaryWord::new((0..m).map(|i| mask >> (m - 1 - i) & 1 == 1).collect());
        if is_canonical(&w) {
            out.push(CanonicalWord(w));
        }
    }
    out.sort();
    out
}

/// Exceptional words of length m avoiding every pattern in `forbidden`.
fn exceptional_avoider_count(m: usize, forbidden: &[BinaryWord]) -> BigUint {
    let mut count = 0u64;
    for x in 1..=m {
        let w = BinaryWord::zeros_ones(x, m - x);
        if forbidden.iter().all(|f| !w.contains_subsequence(f)) {
            count += 1;
        }
    }
    BigUint::from(count)
}

/// #Av_n[1342, class of p]: words of length n-1 avoiding p's forbidden set,
/// minus the exceptional avoiders (which each code a class twice).
pub fn count_pair(n: usize, p: &BinaryWord) -> BigUint {
    count_pair_set(n, std::slice::from_ref(p))
}

/// Joint avoidance of several coded classes. The twin symmetry keeps the
/// exceptional correction valid for any forbidden set.
pub fn count_pair_set(n: usize, pats: &[BinaryWord]) -> BigUint {
    assert!(n >= 1);
    let m = n - 1;
    let mut forbidden = Vec::new();
    for p in pats {
        forbidden.extend(forbidden_patterns(p));
    }
    forbidden.sort();
    forbidden.dedup();
    let all = count_words_avoiding(m, &forbidden);
    all - exceptional_avoider_count(m, &forbidden)
}

/// #Av_n[1342, increasing pattern of size k+1] in closed form for n-1 >= k;
/// DP fallback below the regime.
pub fn closed_iota(n: usize, k: usize) -> BigUint {
    assert!(k >= 1 && n >= 1);
    if n < k + 1 {
        return count_pair(n, &BinaryWord::zeros(k));
    }
    let mut acc = BigInt::from(binomial(n - 2, k as isize - 2));
    acc -= BigInt::from(k - 1);
    for i in 0..=k as isize - 2 {
        acc += BigInt::from(binomial(n - 1, i));
    }
    acc.to_biguint().expect("count is nonnegative")
}

/// #Av_n[1342, class of any non-exceptional word of length k] in closed form
/// for n-1 >= k; DP fallback below the regime.
pub fn closed_nonexceptional(n: usize, k: usize) -> BigUint {
    assert!(k >= 3 && n >= 1);
    if n < k + 1 {
        let mut sizes = vec![1usize, 1];
        sizes.push(k - 2);
        let w = BinaryWord::b(&sizes).unwrap(); // 010^{k-2}
        return count_pair(n, &w);
    }
    let mut acc = BigUint::one();
    for i in 2..=k as isize - 1 {
        acc += binomial(n - 1, i);
    }
    acc
}

/// #Av_{n+1}(213, 231, coded pattern of length k) for linear avoidance:
/// the number of binary words of length n avoiding a fixed length-k
/// subsequence pattern, which depends only on k.
pub fn linear_triple_count(n: usize, p: &BinaryWord) -> BigUint {
    let k = p.len();
    let mut acc = BigUint::zero();
    for i in 0..k as isize {
        acc += binomial(n, i);
    }
    acc
}

/// cdes of the class coded by `w`: one wraparound descent plus the 1s after
/// the first position.
pub fn cdes_of_word(w: &BinaryWord) -> usize {
    if w.is_empty() {
        return 0;
    }
    1 + w.bits()[1..].iter().filter(|&&b| b).count()
}

/// Cyclic descent polynomial of Av_n[1342]: coefficient j counts avoiders
/// with cdes = j, from the closed form 2q(1+q)^{n-2} - (q + ... + q^{n-1}).
pub fn descent_polynomial(n: usize) -> Vec<BigUint> {
    assert!(n >= 2);
    let mut out = vec![BigUint::zero(); n];
    for (j, entry) in out.iter_mut().enumerate().skip(1) {
        let c = BigInt::from(2u32) * BigInt::from(binomial(n - 2, j as isize - 1)) - BigInt::one();
        *entry = c.to_biguint().expect("coefficient is nonnegative");
    }
    out
}

/// Polynomial sum_{x=0}^{max_sum} (#ways to write x as `parts` nonnegative
/// integers) t^x. Zero when max_sum < 0; with zero parts only x = 0 counts.
fn bounded_composition_poly(order: usize, parts: usize, max_sum: isize) -> TruncatedSeries {
    let mut s = TruncatedSeries::zero(order);
    if max_sum < 0 {
        return s;
    }
    let max = (max_sum as usize).min(order);
    for x in 0..=max {
        let ways = if parts == 0 {
            if x == 0 {
                BigUint::one()
            } else {
                BigUint::zero()
            }
        } else {
            binomial(x + parts - 1, (parts - 1) as isize)
        };
        s = &s + &TruncatedSeries::from_coeffs(
            order,
            {
                let mut v = vec![BigInt::zero(); x + 1];
                v[x] = BigInt::from(ways);
                v
            },
        );
    }
    s
}

/// Generating function of (#Av_n[1342, class of 0^{a+1} 1^b])_n up to the
/// given order.
///
/// Words avoiding both twins are grouped by their number s of 1s. With at
/// most b ones a word can only violate via `0^{a+1} 1^b`; with s = b + k
/// ones (k >= 1) the run of zero-gaps before the (k+1)-th one is capped at a
/// and the zero-gaps after the (b+1)-th one at a-1, with the two gap regions
/// disjoint for k <= b and overlapping for k > b. The final term removes the
/// exceptional words counted twice by the word count.
pub fn gf_exceptional(a: usize, b: usize, order: usize) -> TruncatedSeries {
    let one_minus_t_inv = TruncatedSeries::geometric(order, 1);

    // words with at most b ones
    let mut g1 = TruncatedSeries::zero(order);
    for s in 0..b {
        g1 = &g1 + &one_minus_t_inv.pow(s + 1).shift(s);
    }
    let exact_b = {
        // (1 - t^{a+1}) t^b / (1-t)^{b+1}
        let poly = &TruncatedSeries::one(order) - &TruncatedSeries::monomial(order, a + 1, 1);
        (&poly * &one_minus_t_inv.pow(b + 1)).shift(b)
    };
    g1 = &g1 + &exact_b;

    // words with b + k ones, 1 <= k <= b
    let mut g2 = TruncatedSeries::zero(order);
    for k in 1..=b {
        if b + k > order {
            break;
        }
        let before = bounded_composition_poly(order, k + 1, a as isize);
        let middle = one_minus_t_inv.pow(b - k);
        let after = bounded_composition_poly(order, k, a as isize - 1);
        g2 = &g2 + &(&(&before * &middle) * &after).shift(b + k);
    }

    // words with b + k ones, k > b; the overlap of the two gap regions has
    // sum j, and summing over all k > b gives a geometric factor
    let mut g3 = TruncatedSeries::zero(order);
    for j in 0..a {
        if 2 * b + 1 + j > order {
            break;
        }
        let geo = one_minus_t_inv.pow(j + 1);
        let before = bounded_composition_poly(order, b + 1, a as isize - j as isize);
        let after = bounded_composition_poly(order, b, a as isize - j as isize - 1);
        g3 = &g3 + &(&(&geo * &before) * &after).shift(2 * b + 1 + j);
    }

    let words = &(&g1 + &g2) + &g3;
    let shifted = words.shift(1);

    // exceptional corrections: min(n-1, a+b) classes double-coded at size n
    let mut exc = TruncatedSeries::zero(order);
    let mut coeffs = vec![BigInt::zero(); order + 1];
    for (n, c) in coeffs.iter_mut().enumerate().skip(1) {
        *c = BigInt::from((n - 1).min(a + b));
    }
    exc = &exc + &TruncatedSeries::from_coeffs(order, coeffs);

    &shifted - &exc
}

/// Generating function of (#Av_n[1342, class of w])_n for any
/// non-exceptional w of length k:
/// t/(1-2t) - t^2/(1-t)^2 - (t/(1-t))^k (t/(1-2t)).
pub fn gf_nonexceptional(k: usize, order: usize) -> TruncatedSeries {
    assert!(k >= 3);
    let t_over_1m2t = TruncatedSeries::geometric(order, 2).shift(1);
    let t_over_1mt = TruncatedSeries::t_over_one_minus_t(order);
    let sq = &t_over_1mt * &t_over_1mt;
    &(&t_over_1m2t - &sq) - &(&t_over_1mt.pow(k) * &t_over_1m2t)
}
