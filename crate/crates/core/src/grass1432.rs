//! Grassmannian-code encoding of circular permutations avoiding [1432].
//!
//! Written to end with n, an avoider is Grassmannian (at most one descent)
//! or inverse Grassmannian. Both kinds are coded by 0-leading binary words
//! of length n: bit i is 0 exactly when the value n-i+1 sits after the
//! descent. Words with at most two runs code the identity; words with 3 or
//! 4 runs code permutations that are both Grassmannian and inverse
//! Grassmannian (one permutation, two words, related by swapping the middle
//! run sizes); words with 5 or more runs code disjoint G-only and IG-only
//! permutations.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::binword::{count_words_avoiding_filtered, BinaryWord, RunFilter};
use crate::error::{Error, Result};
use crate::num_util::binomial;
use crate::perm::{CircularPermutation, LinearPermutation};
use crate::series::TruncatedSeries;

/// The four mutually disjoint kinds of avoiders of [1432].
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Flavor {
    Identity,
    /// Both Grassmannian and inverse Grassmannian (word has 3 or 4 runs).
    E,
    /// Grassmannian only (word has at least 5 runs).
    G,
    /// Inverse Grassmannian only (word has at least 5 runs).
    Ig,
}

/// Canonical handle on an avoider of [1432]: a 0-leading word plus flavor.
/// E-codes always store the Grassmannian-side word.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GrassCode {
    word: BinaryWord,
    flavor: Flavor,
}

/// The Grassmannian permutation of a 0-leading word: values whose bit is 1
/// come before the descent, in increasing order, then the rest. At most two
/// runs yield the identity.
pub fn grassmannian_perm(w: &BinaryWord) -> Result<LinearPermutation> {
    if w.is_empty() || w.bit(0) {
        return Err(Error::InvalidWord(format!("{w}: code words start with 0")));
    }
    let n = w.len();
    let mut before: Vec<u32> = Vec::new();
    let mut after: Vec<u32> = Vec::new();
    for v in 1..=n {
        // value v corresponds to position n - v + 1, i.e. index n - v
        if w.bit(n - v) {
            before.push(v as u32);
        } else {
            after.push(v as u32);
        }
    }
    before.extend_from_slice(&after);
    LinearPermutation::new(before)
}

/// The inverse Grassmannian permutation of a word: the functional inverse
/// of the Grassmannian one.
pub fn inverse_grassmannian_perm(w: &BinaryWord) -> Result<LinearPermutation> {
    Ok(grassmannian_perm(w)?.inverse())
}

/// Swaps the two middle run sizes of a 3- or 4-run word: the word pairing
/// that identifies the Grassmannian and inverse-Grassmannian codes of the
/// same permutation.
pub fn e_swap(w: &BinaryWord) -> BinaryWord {
    let mut sizes = w.run_sizes();
    debug_assert!(sizes.len() == 3 || sizes.len() == 4);
    sizes.swap(1, 2);
    BinaryWord::b(&sizes).unwrap()
}

impl GrassCode {
    /// Code from a Grassmannian-side word.
    pub fn new_g(word: BinaryWord) -> Result<Self> {
        if word.is_empty() || word.bit(0) {
            return Err(Error::InvalidCode(format!("{word}: code words start with 0")));
        }
        let n = word.len();
        Ok(match word.run_count() {
            0..=2 => GrassCode { word: BinaryWord::zeros(n), flavor: Flavor::Identity },
            3 | 4 => GrassCode { word, flavor: Flavor::E },
            _ => GrassCode { word, flavor: Flavor::G },
        })
    }

    /// Code from an inverse-Grassmannian-side word; 3- and 4-run words are
    /// converted to their Grassmannian form.
    pub fn new_ig(word: BinaryWord) -> Result<Self> {
        if word.is_empty() || word.bit(0) {
            return Err(Error::InvalidCode(format!("{word}: code words start with 0")));
        }
        let n = word.len();
        Ok(match word.run_count() {
            0..=2 => GrassCode { word: BinaryWord::zeros(n), flavor: Flavor::Identity },
            3 | 4 => GrassCode { word: e_swap(&word), flavor: Flavor::E },
            _ => GrassCode { word, flavor: Flavor::Ig },
        })
    }

    pub fn identity(n: usize) -> Self {
        GrassCode { word: BinaryWord::zeros(n), flavor: Flavor::Identity }
    }

    pub fn word(&self) -> &BinaryWord {
        &self.word
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    /// Size of the coded permutation.
    pub fn size(&self) -> usize {
        self.word.len()
    }

    /// The inverse-Grassmannian-side word, when the code has one.
    pub fn ig_word(&self) -> Option<BinaryWord> {
        match self.flavor {
            Flavor::Identity => Some(self.word.clone()),
            Flavor::E => Some(e_swap(&self.word)),
            Flavor::G => None,
            Flavor::Ig => Some(self.word.clone()),
        }
    }

    pub fn to_perm(&self) -> CircularPermutation {
        let linear = match self.flavor {
            Flavor::Identity => LinearPermutation::identity(self.word.len()),
            Flavor::E | Flavor::G => grassmannian_perm(&self.word).unwrap(),
            Flavor::Ig => inverse_grassmannian_perm(&self.word).unwrap(),
        };
        CircularPermutation::from_linear(&linear)
    }
}

/// Reads the code word off a Grassmannian permutation ending with n.
/// Returns `None` when there is more than one descent.
fn read_g_word(p: &LinearPermutation) -> Option<BinaryWord> {
    let descents = p.descents();
    if descents.len() != 1 {
        return None;
    }
    let d = descents[0];
    let n = p.len();
    let before: std::collections::HashSet<u32> = p.values()[..d].iter().copied().collect();
    let bits: Vec<bool> = (0..n).map(|i| before.contains(&((n - i) as u32))).collect();
    Some(BinaryWord::new(bits))
}

/// Classifies an avoider of [1432] into its canonical code. Errors when the
/// class contains [1432].
pub fn classify(p: &CircularPermutation) -> Result<GrassCode> {
    let n = p.len();
    let rot = p.rotation_ending_with_max();
    if rot == LinearPermutation::identity(n) {
        return Ok(GrassCode::identity(n));
    }
    let g = read_g_word(&rot);
    let ig = read_g_word(&rot.inverse());
    match (g, ig) {
        (Some(w), Some(w2)) => {
            debug_assert!(w.run_count() == 3 || w.run_count() == 4);
            debug_assert_eq!(e_swap(&w), w2);
            Ok(GrassCode { word: w, flavor: Flavor::E })
        }
        (Some(w), None) => {
            debug_assert!(w.run_count() >= 5);
            Ok(GrassCode { word: w, flavor: Flavor::G })
        }
        (None, Some(w)) => {
            debug_assert!(w.run_count() >= 5);
            Ok(GrassCode { word: w, flavor: Flavor::Ig })
        }
        (None, None) => Err(Error::ContainsAnchor { anchor: "1432" }),
    }
}

/// Containment among Grassmannian-coded classes: the patterns of [G(w1)]
/// are the [G(w2)] with w2 or its complement a subsequence of w1.
pub fn g_word_contains(w1: &BinaryWord, w2: &BinaryWord) -> bool {
    w1.contains_subsequence(w2) || w1.contains_subsequence(&w2.complement())
}

/// The subsequence patterns whose joint avoidance characterizes avoidance
/// of [IG(w2)] inside inverse-Grassmannian hosts: rotate i of the trailing
/// zeros to the front as ones, for each i.
pub fn ig_forbidden_patterns(w2: &BinaryWord) -> Vec<BinaryWord> {
    let bits = w2.bits();
    let m = bits.iter().rev().take_while(|&&b| !b).count();
    let m = if m == bits.len() { bits.len() } else { m };
    let stem = &bits[..bits.len() - m];
    (0..=m)
        .map(|i| {
            let mut v = vec![true; i];
            v.extend_from_slice(stem);
            v.extend(std::iter::repeat_n(false, m - i));
            BinaryWord::new(v)
        })
        .collect()
}

/// Containment among inverse-Grassmannian-coded classes.
pub fn ig_word_contains(w1: &BinaryWord, w2: &BinaryWord) -> bool {
    ig_forbidden_patterns(w2)
        .iter()
        .any(|p| w1.contains_subsequence(p))
}

/// Circular containment decided entirely through the codes: identity
/// patterns reduce to an increasing-subsequence check, Grassmannian-only
/// patterns occur only in Grassmannian hosts, inverse-Grassmannian-only
/// patterns only in inverse-Grassmannian hosts.
pub fn contains(host: &GrassCode, pattern: &GrassCode) -> bool {
    if pattern.size() > host.size() {
        return false;
    }
    match (host.flavor, pattern.flavor) {
        (_, Flavor::Identity) => host.to_perm().contains_identity(pattern.size()),
        (Flavor::Identity, _) => false,
        (Flavor::E | Flavor::G, Flavor::E) => g_word_contains(&host.word, &pattern.word),
        (Flavor::G, Flavor::G) => g_word_contains(&host.word, &pattern.word),
        (Flavor::E, Flavor::G) => false,
        (Flavor::E | Flavor::G, Flavor::Ig) => false,
        (Flavor::Ig, Flavor::E) => ig_word_contains(&host.word, &e_swap(&pattern.word)),
        (Flavor::Ig, Flavor::Ig) => ig_word_contains(&host.word, &pattern.word),
        (Flavor::Ig, Flavor::G) => false,
    }
}

/// All codes of size n: the identity, one E-code per 3-4-run word, and a G
/// and an IG code per word with at least 5 runs.
pub fn enumerate(n: usize) -> Vec<GrassCode> {
    assert!(n >= 1);
    let mut out = vec![GrassCode::identity(n)];
    for mask in 0u64..(1 << (n - 1)) {
        let bits: Vec<bool> = std::iter::once(false)
            .chain((0..n - 1).map(|i| mask >> (n - 2 - i) & 1 == 1))
            .collect();
        let w = BinaryWord::new(bits);
        match w.run_count() {
            3 | 4 => out.push(GrassCode { word: w, flavor: Flavor::E }),
            rc if rc >= 5 => {
                out.push(GrassCode { word: w.clone(), flavor: Flavor::G });
                out.push(GrassCode { word: w, flavor: Flavor::Ig });
            }
            _ => {}
        }
    }
    out
}

/// #avoiders of size n of flavor E: C(n-1,2) + C(n-1,3).
pub fn e_type_total(n: usize) -> BigUint {
    if n == 0 {
        return BigUint::zero();
    }
    binomial(n - 1, 2) + binomial(n - 1, 3)
}

/// #avoiders of size n of flavor G (equally IG): 0-leading words with at
/// least 5 runs.
pub fn g_type_total(n: usize) -> BigUint {
    if n == 0 {
        return BigUint::zero();
    }
    let mut acc = BigUint::zero();
    for i in 4..n {
        acc += binomial(n - 1, i as isize);
    }
    acc
}

/// #Av_n[1432] = 2^n + 1 - 2n - C(n,3).
pub fn av_total(n: usize) -> BigUint {
    BigUint::one() + e_type_total(n) + BigUint::from(2u32) * g_type_total(n)
}

/// #Av_n[1432, class of p] for non-identity p, summed over the four host
/// types with a subsequence-automaton count per type.
pub fn count_pair(n: usize, p: &GrassCode) -> Result<BigUint> {
    if p.flavor == Flavor::Identity {
        return Err(Error::Unsupported(
            "identity patterns are counted by count_identity_pair".into(),
        ));
    }
    let mut acc = BigUint::one(); // the identity host always avoids
    match p.flavor {
        Flavor::Identity => unreachable!(),
        Flavor::E => {
            let forbid = vec![p.word.clone(), p.word.complement()];
            acc += count_words_avoiding_filtered(n, &forbid, Some(false), RunFilter::ThreeOrFour);
            acc += count_words_avoiding_filtered(n, &forbid, Some(false), RunFilter::AtLeastFive);
            let ig_forbid = ig_forbidden_patterns(&e_swap(&p.word));
            acc += count_words_avoiding_filtered(n, &ig_forbid, Some(false), RunFilter::AtLeastFive);
        }
        Flavor::G => {
            acc += e_type_total(n);
            let forbid = vec![p.word.clone(), p.word.complement()];
            acc += count_words_avoiding_filtered(n, &forbid, Some(false), RunFilter::AtLeastFive);
            acc += g_type_total(n);
        }
        Flavor::Ig => {
            acc += e_type_total(n);
            acc += g_type_total(n);
            let ig_forbid = ig_forbidden_patterns(&p.word);
            acc += count_words_avoiding_filtered(n, &ig_forbid, Some(false), RunFilter::AtLeastFive);
        }
    }
    Ok(acc)
}

/// Avoider counts for n = 1..=n_max.
pub fn count_pair_upto(n_max: usize, p: &GrassCode) -> Result<Vec<BigUint>> {
    (1..=n_max).map(|n| count_pair(n, p)).collect()
}

/// #Av_n[1432, identity of size k]: zero from n = 2k-2 on; enumerated below.
pub fn count_identity_pair(n: usize, k: usize) -> BigUint {
    if k <= 1 {
        return BigUint::zero();
    }
    if n >= 2 * k - 2 {
        return BigUint::zero();
    }
    assert!(n <= 30, "enumeration guard");
    enumerate(n)
        .iter()
        .filter(|c| !c.to_perm().contains_identity(k))
        .count()
        .into()
}

/// 2^{n-1} - (n-1) + sum_{i=4}^{k-2} C(n-1, i): the count for the
/// alternating code of length k (and every IG-code of length k ending in 1).
pub fn alternating_pair_count(n: usize, k: usize) -> BigUint {
    assert!(n >= 1 && k >= 5);
    let mut acc = BigUint::from(2u32).pow(n as u32 - 1) - BigUint::from(n - 1);
    for i in 4..=k as isize - 2 {
        acc += binomial(n - 1, i);
    }
    acc
}

impl GrassCode {
    /// Wilf-equivalent canonical representative: 3-run words ordered with
    /// the longer outer run first; alternating words (and IG-codes ending
    /// in 1) become the alternating Grassmannian code of the same length;
    /// otherwise leading size-1 runs rotate to the back and the run tuple
    /// takes the lexicographically larger orientation.
    pub fn normal_form(&self) -> GrassCode {
        match self.flavor {
            Flavor::Identity => self.clone(),
            Flavor::Ig => {
                if self.word.is_alternating() || *self.word.bits().last().unwrap() {
                    return GrassCode::new_g(BinaryWord::alternating(self.word.len())).unwrap();
                }
                let sizes = self.word.run_sizes();
                let (stem, m) = sizes.split_at(sizes.len() - 1);
                let mut stem = stem.to_vec();
                let mut rev = stem.clone();
                rev.reverse();
                if rev > stem {
                    stem = rev;
                }
                stem.push(m[0]);
                GrassCode::new_ig(BinaryWord::b(&stem).unwrap()).unwrap()
            }
            Flavor::E | Flavor::G => {
                if self.word.is_alternating() {
                    return GrassCode::new_g(self.word.clone()).unwrap();
                }
                let sizes = self.word.run_sizes();
                if sizes.len() == 3 {
                    let (a, b, c) = (sizes[0], sizes[1], sizes[2]);
                    let w = if a >= c {
                        self.word.clone()
                    } else {
                        BinaryWord::b(&[c, b, a]).unwrap()
                    };
                    return GrassCode::new_g(w).unwrap();
                }
                let mut core = sizes;
                let mut r = 0usize;
                while core.last() == Some(&1) {
                    core.pop();
                    r += 1;
                }
                while core.first() == Some(&1) {
                    core.remove(0);
                    r += 1;
                }
                debug_assert!(!core.is_empty());
                let mut rev = core.clone();
                rev.reverse();
                if rev > core {
                    core = rev;
                }
                core.extend(std::iter::repeat_n(1, r));
                GrassCode::new_g(BinaryWord::b(&core).unwrap()).unwrap()
            }
        }
    }

    /// Machine check of the four canonical shapes.
    pub fn is_normal_shape(&self) -> bool {
        match self.flavor {
            Flavor::Identity => true,
            Flavor::E | Flavor::G => {
                let sizes = self.word.run_sizes();
                if sizes.len() == 3 {
                    return sizes[0] >= sizes[2];
                }
                if self.word.is_alternating() && sizes.len() >= 4 {
                    return true;
                }
                if sizes.len() < 4 {
                    return false;
                }
                let mut core = sizes;
                while core.last() == Some(&1) {
                    core.pop();
                }
                if core.is_empty() || core.first() == Some(&1) {
                    return false;
                }
                let mut rev = core.clone();
                rev.reverse();
                rev <= core
            }
            Flavor::Ig => {
                let sizes = self.word.run_sizes();
                if sizes.len() < 5 || self.word.is_alternating() {
                    return false;
                }
                if *self.word.bits().last().unwrap() {
                    return false;
                }
                let stem = &sizes[..sizes.len() - 1];
                let mut rev = stem.to_vec();
                rev.reverse();
                rev.as_slice() <= stem
            }
        }
    }
}

/// Shared polynomial: nonempty words with one forced leading letter, at
/// most m-1 copies of it in total and at most m-1 of the other letter:
/// sum_{i=0}^{m-2} sum_{j=0}^{m-1} C(i+j, i) x^{i+j+1}.
fn bounded_tail_poly(order: usize, m: usize) -> TruncatedSeries {
    let mut s = TruncatedSeries::zero(order);
    for i in 0..=m.saturating_sub(2) {
        if m < 2 {
            break;
        }
        for j in 0..m {
            if i + j + 1 > order {
                continue;
            }
            let mut coeffs = vec![BigInt::zero(); i + j + 2];
            coeffs[i + j + 1] = BigInt::from(binomial(i + j, i as isize));
            s = &s + &TruncatedSeries::from_coeffs(order, coeffs);
        }
    }
    s
}

/// The generating-function families for counting avoiders against specific
/// Grassmannian patterns.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GfSelector {
    /// Pattern G(B(1,...,1,m)) with k ones then m >= 2; k + 1 >= 5 parts.
    OnesThenBlock { k: usize, m: usize },
    /// Pattern G(0101^m), m >= 2 (three size-1 runs and one of size m).
    AltThenOnes { m: usize },
    /// Pattern G(010^m), m >= 2.
    ZeroOneZeros { m: usize },
}

impl GfSelector {
    /// The coded pattern the series counts against.
    pub fn pattern(&self) -> GrassCode {
        let word = match *self {
            GfSelector::OnesThenBlock { k, m } => {
                let mut sizes = vec![1usize; k];
                sizes.push(m);
                BinaryWord::b(&sizes).unwrap()
            }
            GfSelector::AltThenOnes { m } => BinaryWord::b(&[1, 1, 1, m]).unwrap(),
            GfSelector::ZeroOneZeros { m } => BinaryWord::b(&[1, 1, m]).unwrap(),
        };
        GrassCode::new_g(word).unwrap()
    }
}

/// Exact series of (#Av_n[1432, pattern])_n for the selector's family.
pub fn gf_family(sel: GfSelector, order: usize) -> Result<TruncatedSeries> {
    let x_1mx = TruncatedSeries::t_over_one_minus_t(order);
    match sel {
        GfSelector::OnesThenBlock { k, m } => {
            if k < 4 || m < 2 {
                return Err(Error::Unsupported(
                    "need at least five parts and a block of at least 2".into(),
                ));
            }
            // identity + E + IG hosts: (x - 3x^2 + 3x^3)/((1-2x)(1-x)^2)
            let num = TruncatedSeries::polynomial(order, &[0, 1, -3, 3]);
            let den = &TruncatedSeries::polynomial(order, &[1, -2])
                * &TruncatedSeries::polynomial(order, &[1, -2, 1]);
            let mut f = num.div(&den);
            // G hosts with k runs followed by a bounded tail
            f = &f + &(&x_1mx.pow(k) * &bounded_tail_poly(order, m));
            // G hosts with 5..=k runs avoid outright
            for i in 5..=k {
                f = &f + &x_1mx.pow(i);
            }
            Ok(f)
        }
        GfSelector::AltThenOnes { m } => {
            if m < 2 {
                return Err(Error::Unsupported("need a block of at least 2".into()));
            }
            let mut inner = TruncatedSeries::one(order);
            for j in 0..=m - 2 {
                inner = &(&inner + &x_1mx.pow(j + 1)) - &TruncatedSeries::monomial(order, j + 1, 1);
            }
            inner = &inner + &bounded_tail_poly(order, m);
            Ok(&x_1mx + &(&x_1mx.pow(3) * &inner))
        }
        GfSelector::ZeroOneZeros { m } => {
            if m < 2 {
                return Err(Error::Unsupported("need a block of at least 2".into()));
            }
            let geo = TruncatedSeries::geometric(order, 1); // 1/(1-x)
            let mut a = TruncatedSeries::one(order);
            for i in 0..=m - 2 {
                // x^{m+i} ((1/(1-x))^{m-i-1} - 1)
                let t1 = &(&geo.pow(m - i - 1) - &TruncatedSeries::one(order)).shift(m + i);
                a = &a + t1;
                a = &(&a + &x_1mx.pow(i + 1)) - &TruncatedSeries::monomial(order, i + 1, 1);
            }
            // B = x(x^m - 1)(1 - x^{m-1})/(1-x)^2 + tail
            let xm = TruncatedSeries::monomial(order, m, 1);
            let xm1 = TruncatedSeries::monomial(order, m - 1, 1);
            let one = TruncatedSeries::one(order);
            let b_head = &(&(&xm - &one) * &(&one - &xm1)).shift(1) * &geo.pow(2);
            let b = &b_head + &bounded_tail_poly(order, m);
            Ok(&(&x_1mx * &a) + &(&x_1mx.pow(2) * &b))
        }
    }
}

/// The seven avoidance sequences for {[1432], size-5 pattern} pairs.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Size5Pair1432 {
    /// [1432,12345]: zero from n = 8.
    P12345,
    /// [1432,13524] and [1432,14253]: 2^{n-1} - (n-1).
    P13524,
    /// [1432,13425] class: 1 + C(n,3) + C(n-3,2).
    P13425,
    /// [1432,15234]: 11n - 43.
    P15234,
    /// [1432,12534] and [1432,14523]: 8n - 31 + C(n-2,2).
    P12534,
    /// [1432,12453]: 10n - 39 + C(n-3,2).
    P12453,
    /// [1432,12354] and [1432,13452]: 9n - 34 + C(n-4,2) + C(n-3,2).
    P12354,
}

impl Size5Pair1432 {
    pub fn pattern(&self) -> CircularPermutation {
        let s = match self {
            Size5Pair1432::P12345 => "12345",
            Size5Pair1432::P13524 => "13524",
            Size5Pair1432::P13425 => "13425",
            Size5Pair1432::P15234 => "15234",
            Size5Pair1432::P12534 => "12534",
            Size5Pair1432::P12453 => "12453",
            Size5Pair1432::P12354 => "12354",
        };
        s.parse().unwrap()
    }
}

/// Evaluates the named closed form, falling back to the code count below
/// each regime.
pub fn size5_count(n: usize, which: Size5Pair1432) -> BigUint {
    assert!(n >= 1);
    let linear = |a: i64, b: i64| -> BigInt { BigInt::from(a) * BigInt::from(n) + BigInt::from(b) };
    let below = |regime: usize, which: Size5Pair1432| -> Option<BigUint> {
        if n >= regime {
            return None;
        }
        let code = classify(&which.pattern()).unwrap();
        Some(count_pair(n, &code).unwrap())
    };
    match which {
        Size5Pair1432::P12345 => count_identity_pair(n, 5),
        Size5Pair1432::P13524 => BigUint::from(2u32).pow(n as u32 - 1) - BigUint::from(n - 1),
        Size5Pair1432::P13425 => {
            if n < 4 {
                return av_total(n);
            }
            BigUint::one() + binomial(n, 3) + binomial(n - 3, 2)
        }
        Size5Pair1432::P15234 => below(6, which).unwrap_or_else(|| {
            linear(11, -43).to_biguint().unwrap()
        }),
        Size5Pair1432::P12534 => below(6, which).unwrap_or_else(|| {
            (linear(8, -31) + BigInt::from(binomial(n - 2, 2))).to_biguint().unwrap()
        }),
        Size5Pair1432::P12453 => below(6, which).unwrap_or_else(|| {
            (linear(10, -39) + BigInt::from(binomial(n - 3, 2))).to_biguint().unwrap()
        }),
        Size5Pair1432::P12354 => below(6, which).unwrap_or_else(|| {
            (linear(9, -34) + BigInt::from(binomial(n - 4, 2)) + BigInt::from(binomial(n - 3, 2)))
                .to_biguint()
                .unwrap()
        }),
    }
}

/// Cyclic descent polynomial of Av_n[1432]:
/// q + (2^{n-1} - n) q^2 + sum_{j>=3} C(n, 2j-1) q^j.
pub fn descent_polynomial(n: usize) -> Vec<BigUint> {
    assert!(n >= 2);
    let mut out = vec![BigUint::zero(); n];
    out[1] = BigUint::one();
    if n >= 3 {
        out[2] = BigUint::from(2u32).pow(n as u32 - 1) - BigUint::from(n);
    }
    for (j, entry) in out.iter_mut().enumerate().skip(3) {
        *entry = binomial(n, 2 * j as isize - 1);
    }
    out
}

impl fmt::Display for GrassCode {
    /// `I:5`, `G:0^2 1^2 0 1^3`, or `IG:0^2 1 0^2 1^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.flavor {
            Flavor::Identity => write!(f, "I:{}", self.word.len()),
            Flavor::E | Flavor::G => write!(f, "G:{}", self.word.run_notation()),
            Flavor::Ig => write!(f, "IG:{}", self.word.run_notation()),
        }
    }
}

impl fmt::Debug for GrassCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for GrassCode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix("I:") {
            let n: usize = rest
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad identity size `{rest}`")))?;
            if n == 0 {
                return Err(Error::Parse("identity size must be positive".into()));
            }
            return Ok(GrassCode::identity(n));
        }
        if let Some(rest) = s.strip_prefix("IG:") {
            return GrassCode::new_ig(rest.trim().parse()?);
        }
        if let Some(rest) = s.strip_prefix("G:") {
            return GrassCode::new_g(rest.trim().parse()?);
        }
        Err(Error::Parse(format!("code must start with I:, G:, or IG: — got `{s}`")))
    }
}
