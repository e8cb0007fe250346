//! Circled-composition encoding of circular permutations avoiding [1324].
//!
//! An avoider of size n, written to end with n, splits as `rho 1 tau n` with
//! `tau` increasing and every run of `rho` mapping onto an interval of
//! values. Reading values bottom-up yields a composition of n whose first
//! and last parts are circled 1s: circled parts are the members of the
//! increasing tail, uncircled parts are the run lengths of `rho`. Pattern
//! containment becomes a domination order on circled compositions.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::num_util::{binomial, fibonacci};
use crate::perm::{CircularPermutation, LinearPermutation};
use crate::series::TruncatedSeries;

/// One part of a circled composition.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Part {
    pub value: u32,
    pub circled: bool,
}

impl Part {
    pub fn circled() -> Self {
        Part { value: 1, circled: true }
    }

    pub fn uncircled(value: u32) -> Self {
        Part { value, circled: false }
    }
}

/// Composition of n >= 2 whose first and last parts are circled, and whose
/// circled parts all have value 1.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CircledComposition {
    parts: Vec<Part>,
}

impl CircledComposition {
    pub fn new(parts: Vec<Part>) -> Result<Self> {
        if parts.len() < 2 {
            return Err(Error::InvalidComposition(
                "need at least two parts (total at least 2)".into(),
            ));
        }
        if !parts.first().unwrap().circled || !parts.last().unwrap().circled {
            return Err(Error::InvalidComposition(
                "first and last parts must be circled".into(),
            ));
        }
        for p in &parts {
            if p.circled && p.value != 1 {
                return Err(Error::InvalidComposition("circled parts must be 1".into()));
            }
            if p.value == 0 {
                return Err(Error::InvalidComposition("zero part".into()));
            }
        }
        Ok(CircledComposition { parts })
    }

    pub fn parts(&self) -> &[Part] {
        &self.parts
    }

    pub fn total(&self) -> usize {
        self.parts.iter().map(|p| p.value as usize).sum()
    }

    pub fn uncircled_count(&self) -> usize {
        self.parts.iter().filter(|p| !p.circled).count()
    }

    pub fn is_all_circled(&self) -> bool {
        self.uncircled_count() == 0
    }

    pub fn reversed(&self) -> Self {
        let mut parts = self.parts.clone();
        parts.reverse();
        CircledComposition { parts }
    }

    /// The coded permutation written as `rho 1 tau n`.
    pub fn to_linear(&self) -> LinearPermutation {
        let mut tail: Vec<u32> = Vec::new();
        let mut blocks: Vec<Vec<u32>> = Vec::new();
        let mut v = 1u32;
        for p in &self.parts {
            if p.circled {
                tail.push(v);
                v += 1;
            } else {
                blocks.push((v..v + p.value).collect());
                v += p.value;
            }
        }
        let mut word = Vec::with_capacity((v - 1) as usize);
        for b in blocks.iter().rev() {
            word.extend_from_slice(b);
        }
        word.extend_from_slice(&tail);
        LinearPermutation::new(word).unwrap()
    }

    pub fn to_perm(&self) -> CircularPermutation {
        CircularPermutation::from_linear(&self.to_linear())
    }
}

/// The unique all-runs-contiguous permutation of a plain composition: the
/// i-th part assigns the next block of values, blocks are laid out right to
/// left.
pub fn contiguous_runs_perm(comp: &[u32]) -> Result<LinearPermutation> {
    if comp.is_empty() || comp.contains(&0) {
        return Err(Error::InvalidComposition("empty or zero part".into()));
    }
    let mut blocks: Vec<Vec<u32>> = Vec::new();
    let mut v = 1u32;
    for &c in comp {
        blocks.push((v..v + c).collect());
        v += c;
    }
    let mut word = Vec::new();
    for b in blocks.iter().rev() {
        word.extend_from_slice(b);
    }
    LinearPermutation::new(word)
}

/// Inverse of the coding. Errors when the class contains [1324] or n = 1.
pub fn from_perm(c: &CircularPermutation) -> Result<CircledComposition> {
    let n = c.len();
    if n < 2 {
        return Err(Error::InvalidComposition(
            "size-1 classes have no circled composition".into(),
        ));
    }
    let rot = c.rotation_ending_with_max();
    let vals = rot.values();
    let pos1 = vals.iter().position(|&v| v == 1).unwrap();
    let rho = &vals[..pos1];
    let tail = &vals[pos1..];
    if tail.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::ContainsAnchor { anchor: "1324" });
    }
    // maximal increasing runs of rho must map onto value intervals
    let mut run_start: HashMap<u32, u32> = HashMap::new(); // min value -> length
    let mut i = 0;
    while i < rho.len() {
        let mut j = i;
        while j + 1 < rho.len() && rho[j] < rho[j + 1] {
            j += 1;
        }
        let run = &rho[i..=j];
        let len = run.len() as u32;
        if run[len as usize - 1] - run[0] + 1 != len {
            return Err(Error::ContainsAnchor { anchor: "1324" });
        }
        run_start.insert(run[0], len);
        i = j + 1;
    }
    let in_tail: std::collections::HashSet<u32> = tail.iter().copied().collect();
    let mut parts = Vec::new();
    let mut v = 1u32;
    while v <= n as u32 {
        if in_tail.contains(&v) {
            parts.push(Part::circled());
            v += 1;
        } else if let Some(&len) = run_start.get(&v) {
            parts.push(Part::uncircled(len));
            v += len;
        } else {
            return Err(Error::ContainsAnchor { anchor: "1324" });
        }
    }
    CircledComposition::new(parts)
}

impl CircledComposition {
    /// Domination: `other` is obtainable from `self` by selecting a
    /// subsequence, shrinking uncircled values, and expanding a boundary
    /// uncircled value k into k circled 1s. A shrunk value stays uncircled;
    /// boundary expansion uses the post-shrink value.
    pub fn dominates(&self, other: &CircledComposition) -> bool {
        let x = &self.parts;
        let y = &other.parts;
        let m = y.len();
        // length of the target's initial circled run
        let f = y.iter().take_while(|p| p.circled).count();
        let mut memo: Vec<Vec<Option<bool>>> = vec![vec![None; m + 1]; x.len() + 1];

        // rest(i, j): can x[i..] produce y[j..], the first selected part
        // having already been consumed (only interior and terminal rules)?
        fn rest(
            x: &[Part],
            y: &[Part],
            i: usize,
            j: usize,
            memo: &mut Vec<Vec<Option<bool>>>,
        ) -> bool {
            if let Some(v) = memo[i][j] {
                return v;
            }
            let m = y.len();
            let ans = (|| {
                if i == x.len() {
                    return false;
                }
                // skip x[i]
                if rest(x, y, i + 1, j, memo) {
                    return true;
                }
                let xp = x[i];
                if xp.circled {
                    if y[j].circled && (j == m - 1 || rest(x, y, i + 1, j + 1, memo)) {
                        return true;
                    }
                } else {
                    // interior shrink (the target stays uncircled)
                    if !y[j].circled
                        && y[j].value <= xp.value
                        && j < m - 1
                        && rest(x, y, i + 1, j + 1, memo)
                    {
                        return true;
                    }
                    // terminal expansion: remaining targets all circled
                    let e = m - j;
                    if e <= xp.value as usize && y[j..].iter().all(|p| p.circled) {
                        return true;
                    }
                }
                false
            })();
            memo[i][j] = Some(ans);
            ans
        }

        if other.total() > self.total() {
            return false;
        }
        for i in 0..x.len() {
            let xp = x[i];
            if xp.circled {
                // first selected is circled and matches y[0]
                if m == 1 || rest(x, y, i + 1, 1, &mut memo) {
                    return true;
                }
            } else {
                // first selected expands into j circled parts
                let jmax = (xp.value as usize).min(f);
                for j in 1..=jmax {
                    if j == m || rest(x, y, i + 1, j, &mut memo) {
                        return true;
                    }
                }
            }
        }
        false
    }
}

/// All circled compositions of n, in a fixed recursive order.
pub fn enumerate(n: usize) -> Vec<CircledComposition> {
    assert!(n >= 2);
    fn gen(remaining: usize, parts: &mut Vec<Part>, out: &mut Vec<CircledComposition>) {
        parts.push(Part::circled());
        if remaining == 1 {
            out.push(CircledComposition { parts: parts.clone() });
        } else {
            gen(remaining - 1, parts, out);
        }
        parts.pop();
        for v in 1..remaining {
            parts.push(Part::uncircled(v as u32));
            gen(remaining - v, parts, out);
            parts.pop();
        }
    }
    let mut out = Vec::new();
    let mut parts = vec![Part::circled()];
    gen(n - 1, &mut parts, &mut out);
    out
}

/// Decomposition used by the rewriting rules: outer circled blocks, the
/// uncircled multiset, and the count of interior circled parts.
struct SortedParts {
    lead: usize,
    trail: usize,
    uncircled: Vec<u32>, // kept descending
    interior: usize,
}

impl SortedParts {
    fn of(x: &CircledComposition) -> Option<SortedParts> {
        let first = x.parts.iter().position(|p| !p.circled)?;
        let last = x.parts.iter().rposition(|p| !p.circled).unwrap();
        let lead = first;
        let trail = x.parts.len() - 1 - last;
        let mut uncircled: Vec<u32> = x.parts[first..=last]
            .iter()
            .filter(|p| !p.circled)
            .map(|p| p.value)
            .collect();
        let interior = x.parts[first..=last].iter().filter(|p| p.circled).count();
        uncircled.sort_unstable_by(|a, b| b.cmp(a));
        Some(SortedParts {
            lead: lead.max(trail),
            trail: lead.min(trail),
            uncircled,
            interior,
        })
    }

    fn rebalance(&mut self) {
        let l = self.lead.max(self.trail);
        let t = self.lead.min(self.trail);
        self.lead = l;
        self.trail = t;
    }

    fn build(&self) -> CircledComposition {
        let mut parts = Vec::new();
        parts.extend(std::iter::repeat_n(Part::circled(), self.lead));
        let m = self.uncircled.len();
        for (i, &u) in self.uncircled.iter().enumerate() {
            if i == m - 1 && self.interior > 0 {
                parts.extend(std::iter::repeat_n(Part::circled(), self.interior));
            }
            parts.push(Part::uncircled(u));
        }
        parts.extend(std::iter::repeat_n(Part::circled(), self.trail));
        CircledComposition { parts }
    }
}

impl CircledComposition {
    /// The sorting-and-consolidation step alone: uncircled parts in
    /// decreasing order, interior circled 1s combined into one block placed
    /// before the last uncircled part, longer outer block first.
    pub fn sorted_form(&self) -> CircledComposition {
        match SortedParts::of(self) {
            None => self.clone(),
            Some(sp) => sp.build(),
        }
    }

    /// Wilf-equivalent normal form: sorts, rewrites a 2 into `1 (1)`
    /// whenever another uncircled part exists, shortens outer circled
    /// blocks of length exactly 2, and repeats until one of the three
    /// terminal shapes is reached.
    pub fn normal_form(&self) -> CircledComposition {
        let Some(mut sp) = SortedParts::of(self) else {
            return self.clone();
        };
        loop {
            // a lone uncircled part leaves no interior positions
            if sp.uncircled.len() == 1 && sp.interior > 0 {
                sp.lead += sp.interior;
                sp.interior = 0;
                sp.rebalance();
            }
            if sp.uncircled.len() >= 2 {
                if let Some(pos) = sp.uncircled.iter().position(|&u| u == 2) {
                    sp.uncircled.remove(pos);
                    sp.uncircled.push(1);
                    sp.uncircled.sort_unstable_by(|a, b| b.cmp(a));
                    sp.interior += 1;
                    continue;
                }
            }
            if !sp.uncircled.is_empty() && sp.lead == 2 {
                sp.lead = 1;
                sp.uncircled.push(1);
                sp.uncircled.sort_unstable_by(|a, b| b.cmp(a));
                sp.rebalance();
                continue;
            }
            if !sp.uncircled.is_empty() && sp.trail == 2 {
                sp.trail = 1;
                sp.uncircled.push(1);
                sp.uncircled.sort_unstable_by(|a, b| b.cmp(a));
                continue;
            }
            break;
        }
        sp.build()
    }

    /// Machine check of the three terminal shapes.
    pub fn is_normal_shape(&self) -> bool {
        let Some(first) = self.parts.iter().position(|p| !p.circled) else {
            return true; // all circled
        };
        let last = self.parts.iter().rposition(|p| !p.circled).unwrap();
        let lead = first;
        let trail = self.parts.len() - 1 - last;
        if lead < trail || lead == 2 || trail == 2 {
            return false;
        }
        let middle = &self.parts[first..=last];
        let values: Vec<u32> = middle.iter().filter(|p| !p.circled).map(|p| p.value).collect();
        if values.windows(2).any(|w| w[0] < w[1]) {
            return false;
        }
        let circled_positions: Vec<usize> = middle
            .iter()
            .enumerate()
            .filter(|(_, p)| p.circled)
            .map(|(i, _)| i)
            .collect();
        if circled_positions.is_empty() {
            // shape without an interior block: with two or more uncircled
            // parts none may be 2
            values.len() < 2 || values.iter().all(|&v| v != 2)
        } else {
            // one circled block directly before the last uncircled part, no
            // part equal to 2 anywhere
            let block_ok = circled_positions.windows(2).all(|w| w[1] == w[0] + 1)
                && *circled_positions.last().unwrap() == middle.len() - 2;
            block_ok && values.iter().all(|&v| v != 2)
        }
    }

    /// Brute-force dominator count among circled compositions of n.
    pub fn count_dominators_brute(&self, n: usize) -> u64 {
        if n < 2 {
            return 0;
        }
        enumerate(n).iter().filter(|z| z.dominates(self)).count() as u64
    }
}

/// Junk-block series: sequences of uncircled parts with values in 1..=cap,
/// (1-t)/(1-2t+t^{cap+1}). A cap of 0 permits only the empty block.
fn block_gf(order: usize, cap: usize) -> TruncatedSeries {
    if cap == 0 {
        return TruncatedSeries::one(order);
    }
    let num = TruncatedSeries::polynomial(order, &[1, -1]);
    let mut den = vec![0i64; order + 2];
    den[0] = 1;
    den[1] = -2;
    if cap < order {
        den[cap + 1] += 1;
    }
    num.div(&TruncatedSeries::polynomial(order, &den[..=order]))
}

/// Series for the chunk of a dominator that produces the leading block of r
/// circled 1s: either m <= r circled parts with bounded uncircled junk in
/// between (reaching exactly r needs a junk value at its cap when m < r),
/// or m < r circled parts followed by an uncircled value of at least r.
fn leading_chunk_gf(order: usize, r: usize) -> TruncatedSeries {
    let mut f = TruncatedSeries::zero(order);
    if r <= order {
        let mut prod = TruncatedSeries::one(order);
        for i in 1..r {
            prod = &prod * &block_gf(order, i);
        }
        f = &f + &prod.shift(r);
    }
    for m in 1..r {
        if m > order {
            break;
        }
        let mut all = TruncatedSeries::one(order);
        let mut below = TruncatedSeries::one(order);
        for i in 1..m {
            all = &all * &block_gf(order, r - m + i);
            below = &below * &block_gf(order, r - m + i - 1);
        }
        f = &f + &(&all - &below).shift(m);
    }
    let final_part = TruncatedSeries::geometric(order, 1).shift(r);
    for m in 1..r {
        if m + r > order {
            break;
        }
        let mut prod = TruncatedSeries::one(order);
        for i in 1..=m {
            prod = &prod * &block_gf(order, r - 1 - m + i);
        }
        f = &f + &(&prod.shift(m) * &final_part);
    }
    f
}

/// Series for the chunk that produces the trailing block of s circled 1s:
/// all circled-terminated sequences minus those that cannot reach s, i.e.
/// with fewer than s circled parts and every uncircled value short of s.
fn trailing_chunk_gf(order: usize, s: usize) -> TruncatedSeries {
    let num = TruncatedSeries::polynomial(order, &[0, 1, -1]);
    let den = TruncatedSeries::polynomial(order, &[1, -3, 1]);
    let mut f = num.div(&den);
    for m in 1..s {
        if m > order {
            break;
        }
        let mut prod = TruncatedSeries::one(order);
        for i in 0..m {
            prod = &prod * &block_gf(order, s - 1 - i);
        }
        f = &f - &prod.shift(m);
    }
    f
}

impl CircledComposition {
    /// Generating function counting the circled compositions of n that
    /// dominate `self`, via the unique leftmost factorization of a
    /// dominator into chunks. Rejects all-circled compositions, whose
    /// dominators lack this product structure.
    pub fn dominator_gf(&self, order: usize) -> Result<TruncatedSeries> {
        let first = self.parts.iter().position(|p| !p.circled).ok_or_else(|| {
            Error::Unsupported(
                "dominators of all-circled compositions are counted by DP, not a product series"
                    .into(),
            )
        })?;
        let last = self.parts.iter().rposition(|p| !p.circled).unwrap();
        let r = first;
        let s = self.parts.len() - 1 - last;
        let mut f = leading_chunk_gf(order, r);
        for p in &self.parts[first..=last] {
            let factor = if p.circled {
                // t(1-t)/(1-2t)
                TruncatedSeries::polynomial(order, &[0, 1, -1])
                    .div(&TruncatedSeries::polynomial(order, &[1, -2]))
            } else {
                // t^k / (1 - 3t + t^2 + t^k): bounded junk then a part >= k
                let k = p.value as usize;
                let mut den = vec![0i64; order + 1];
                den[0] = 1;
                if 1 <= order {
                    den[1] += -3;
                }
                if 2 <= order {
                    den[2] += 1;
                }
                if k <= order {
                    den[k] += 1;
                }
                TruncatedSeries::monomial(order, k, 1)
                    .div(&TruncatedSeries::polynomial(order, &den))
            };
            f = &f * &factor;
        }
        Ok(&f * &trailing_chunk_gf(order, s))
    }
}

/// #Av_n[1324, identity of size k]: circled compositions of n whose maximal
/// producible run of circled 1s stays below k. DP over (circled total, best
/// uncircled value plus the circled parts after it).
pub fn count_identity_avoiders(n: usize, k: usize) -> BigUint {
    if n == 1 {
        return if k >= 2 { BigUint::one() } else { BigUint::zero() };
    }
    if k <= 1 {
        return BigUint::zero();
    }
    type State = (usize, Option<usize>, bool);
    let mut layers: Vec<HashMap<State, BigUint>> = vec![HashMap::new(); n + 1];
    layers[1].insert((1, None, true), BigUint::one());
    for total in 1..n {
        let layer = layers[total].clone();
        for ((c, e, _), cnt) in layer {
            let c2 = c + 1;
            let e2 = e.map(|x| x + 1);
            if c2 < k && e2.is_none_or(|x| x < k) {
                *layers[total + 1].entry((c2, e2, true)).or_default() += &cnt;
            }
            for v in 1..k {
                if total + v > n {
                    break;
                }
                if c + v >= k || e.is_some_and(|x| x + v >= k) {
                    continue;
                }
                let e2 = Some(e.map_or(v, |x| x.max(v)));
                *layers[total + v].entry((c, e2, false)).or_default() += &cnt;
            }
        }
    }
    layers[n]
        .iter()
        .filter(|((_, _, last), _)| *last)
        .map(|(_, c)| c.clone())
        .sum()
}

/// Avoider counts for n = 1..=n_max against the class coded by `x`.
pub fn count_avoiders_upto(n_max: usize, x: &CircledComposition) -> Vec<BigUint> {
    if x.is_all_circled() {
        let k = x.total();
        return (1..=n_max).map(|n| count_identity_avoiders(n, k)).collect();
    }
    let gf = x.dominator_gf(n_max).expect("has an uncircled part");
    (1..=n_max)
        .map(|n| {
            if n == 1 {
                BigUint::one()
            } else {
                fibonacci(2 * n - 4) - gf.coeff_count(n)
            }
        })
        .collect()
}

/// #Av_n[1324, class coded by x].
pub fn count_avoiders(n: usize, x: &CircledComposition) -> BigUint {
    count_avoiders_upto(n, x).pop().unwrap()
}

/// #Av_n[1324, decreasing pattern of size k+2] = sum_i C(n-2+i, 2i).
pub fn delta_pair_count(n: usize, k: usize) -> BigUint {
    assert!(k >= 1);
    if n == 1 {
        return BigUint::one();
    }
    let mut acc = BigUint::zero();
    for i in 0..k {
        acc += binomial(n - 2 + i, 2 * i as isize);
    }
    acc
}

/// #Av_n[1324, class of (1) k (1)] via the recurrence
/// a(n) = a(n-1) + sum_{i=1}^{k-1} a(n-i), seeded with full avoider counts.
pub fn block_pair_count(n: usize, k: usize) -> BigUint {
    assert!(k >= 1);
    if n == 1 {
        return BigUint::one();
    }
    let seed_to = k.max(2);
    let top = n.max(seed_to);
    let mut a: Vec<BigUint> = vec![BigUint::zero(); top + 1];
    for (m, entry) in a.iter_mut().enumerate().take(seed_to + 1).skip(2) {
        *entry = fibonacci(2 * m - 4);
    }
    for m in seed_to + 1..=top {
        let mut acc = a[m - 1].clone();
        for i in 1..k {
            acc += a[m - i].clone();
        }
        a[m] = acc;
    }
    a[n].clone()
}

/// The five avoidance sequences for {[1324], size-5 pattern} pairs.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Size5Pair1324 {
    /// [1324,15432] class: 1 + C(n-1,2) + C(n,4).
    P15432,
    /// [1324,15234]: Pell recurrence a(n) = 2a(n-1) + a(n-2).
    P15234,
    /// [1324,12345]: F_{n+1} - 4 + sum (n-3-i) F_i.
    P12345,
    /// [1324,12354] class: F_{n+3} - 1 - C(n+2,2).
    P12354,
    /// [1324,13542] class: 2^{n-1} - (n-1).
    P13542,
}

pub fn size5_count(n: usize, which: Size5Pair1324) -> BigUint {
    assert!(n >= 1);
    match which {
        Size5Pair1324::P15432 => {
            if n == 1 {
                return BigUint::one();
            }
            BigUint::one() + binomial(n - 1, 2) + binomial(n, 4)
        }
        Size5Pair1324::P15234 => block_pair_count(n, 3),
        Size5Pair1324::P12345 => {
            if n == 1 {
                return BigUint::one();
            }
            if n < 4 {
                return fibonacci(2 * n - 4);
            }
            let mut acc = BigInt::from(fibonacci(n + 1));
            acc -= 4;
            for i in 0..=n - 4 {
                acc += BigInt::from(n - 3 - i) * BigInt::from(fibonacci(i));
            }
            acc.to_biguint().expect("count is nonnegative")
        }
        Size5Pair1324::P12354 => {
            if n == 1 {
                return BigUint::one();
            }
            let acc =
                BigInt::from(fibonacci(n + 3)) - BigInt::one() - BigInt::from(binomial(n + 2, 2));
            acc.to_biguint().expect("count is nonnegative")
        }
        Size5Pair1324::P13542 => BigUint::from(2u32).pow(n as u32 - 1) - BigUint::from(n - 1),
    }
}

/// Cyclic descent polynomial of Av_n[1324]: the coefficient of q^i is
/// C(n+i-3, n-i-1), counting circled compositions with i-1 uncircled parts.
pub fn descent_polynomial(n: usize) -> Vec<BigUint> {
    assert!(n >= 2);
    let mut out = vec![BigUint::zero(); n];
    for (i, entry) in out.iter_mut().enumerate().skip(1) {
        *entry = binomial(n + i - 3, (n as isize) - (i as isize) - 1);
    }
    out
}

impl fmt::Display for CircledComposition {
    /// Compact text form, e.g. `(1)^2 6 1 2 (1)^3 3 1 (1)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut toks: Vec<String> = Vec::new();
        let mut i = 0;
        while i < self.parts.len() {
            let p = self.parts[i];
            if p.circled {
                let mut j = i;
                while j + 1 < self.parts.len() && self.parts[j + 1].circled {
                    j += 1;
                }
                let run = j - i + 1;
                if run == 1 {
                    toks.push("(1)".to_string());
                } else {
                    toks.push(format!("(1)^{run}"));
                }
                i = j + 1;
            } else {
                toks.push(p.value.to_string());
                i += 1;
            }
        }
        write!(f, "{}", toks.join(" "))
    }
}

impl fmt::Debug for CircledComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for CircledComposition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut parts = Vec::new();
        for tok in s.split_whitespace() {
            let (head, exp) = match tok.split_once('^') {
                Some((h, e)) => (
                    h,
                    e.parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad exponent in `{tok}`")))?,
                ),
                None => (tok, 1),
            };
            if head == "(1)" {
                parts.extend(std::iter::repeat_n(Part::circled(), exp));
            } else {
                let v: u32 = head
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad part `{tok}`")))?;
                parts.extend(std::iter::repeat_n(Part::uncircled(v), exp));
            }
        }
        CircledComposition::new(parts)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::{avoiders, count_avoiders as oracle_count, PatternSet};

    fn cc(s: &str) -> CircledComposition {
        s.parse().unwrap()
    }

    fn cp(s: &str) -> CircularPermutation {
        s.parse().unwrap()
    }

    #[test]
    fn contiguous_runs_examples() {
        assert_eq!(
            contiguous_runs_perm(&[3, 1, 3, 2]).unwrap().values(),
            &[8, 9, 5, 6, 7, 4, 1, 2, 3]
        );
        assert_eq!(contiguous_runs_perm(&[6]).unwrap(), LinearPermutation::identity(6));
        assert_eq!(contiguous_runs_perm(&[1, 1, 1, 1]).unwrap().values(), &[4, 3, 2, 1]);
    }

    #[test]
    fn comp_to_perm_examples() {
        let x = cc("(1)^2 2 1 (1)^2 3 (1)");
        assert_eq!(x.to_linear().values(), &[8, 9, 10, 5, 3, 4, 1, 2, 6, 7, 11]);
        assert_eq!(
            x.to_perm(),
            CircularPermutation::canonicalize(&[8, 9, 10, 5, 3, 4, 1, 2, 6, 7, 11]).unwrap()
        );
        assert_eq!(cc("(1)^4").to_perm(), CircularPermutation::identity(4));
        assert_eq!(cc("(1) 1 (1)").to_perm(), cp("132"));
    }

    #[test]
    fn from_perm_examples() {
        let p = CircularPermutation::canonicalize(&[8, 9, 10, 5, 3, 4, 1, 2, 6, 7, 11]).unwrap();
        assert_eq!(from_perm(&p).unwrap(), cc("(1)^2 2 1 (1)^2 3 (1)"));
        assert_eq!(from_perm(&CircularPermutation::identity(5)).unwrap(), cc("(1)^5"));
        assert!(from_perm(&cp("1324")).is_err());
        assert!(from_perm(&cp("1")).is_err());
    }

    #[test]
    fn round_trip_all_avoiders() {
        for n in 2..=8usize {
            let avs = avoiders(n, &PatternSet::new(vec![cp("1324")]));
            assert_eq!(BigUint::from(avs.len()), fibonacci(2 * n - 4));
            for a in avs {
                let x = from_perm(&a).unwrap();
                assert_eq!(x.to_perm(), a);
                assert_eq!(x.total(), n);
            }
        }
        for n in 2..=9usize {
            for x in enumerate(n) {
                assert_eq!(from_perm(&x.to_perm()).unwrap(), x);
            }
        }
    }

    #[test]
    fn serialization_round_trip() {
        for s in ["(1)^2 6 1 2 (1)^3 3 1 (1)", "(1)^2", "(1) 5 (1)^2"] {
            let x = cc(s);
            assert_eq!(x.to_string(), s);
            let y: CircledComposition = x.to_string().parse().unwrap();
            assert_eq!(x, y);
        }
    }

    #[test]
    fn enumerate_counts() {
        assert_eq!(enumerate(2), vec![cc("(1)^2")]);
        assert_eq!(enumerate(4).len(), 5);
        assert_eq!(enumerate(7).len(), 89);
        for n in 2..=10 {
            assert_eq!(BigUint::from(enumerate(n).len()), fibonacci(2 * n - 4), "n={n}");
        }
    }

    #[test]
    fn domination_worked_example() {
        let x = cc("(1)^2 5 (1) 1 (1)^2 3 1 (1)^3 2 1 (1)^3");
        let y = cc("(1)^8 2 (1)^2 1 (1)");
        assert!(x.dominates(&y));
        assert!(x.dominates(&x));
        assert!(!cc("(1) 1 (1)").dominates(&cc("(1) 2 (1)")));
    }

    #[test]
    fn domination_matches_oracle() {
        let mut patterns: Vec<CircledComposition> = Vec::new();
        for t in 2..=5 {
            patterns.extend(enumerate(t));
        }
        for t in 2..=7usize {
            for x in enumerate(t) {
                let xp = x.to_perm();
                for y in &patterns {
                    assert_eq!(x.dominates(y), xp.contains(&y.to_perm()), "x={x} y={y}");
                }
            }
        }
    }

    #[test]
    fn domination_reflexive_transitive() {
        let mut all: Vec<CircledComposition> = Vec::new();
        for t in 2..=6 {
            all.extend(enumerate(t));
        }
        for x in &all {
            assert!(x.dominates(x));
        }
        for x in &all {
            for y in &all {
                if !x.dominates(y) {
                    continue;
                }
                for z in &all {
                    if y.dominates(z) {
                        assert!(x.dominates(z), "x={x} y={y} z={z}");
                    }
                }
            }
        }
    }

    #[test]
    fn domination_respects_reversal() {
        for t in 2..=6usize {
            for x in enumerate(t) {
                for y in enumerate(4) {
                    assert_eq!(
                        x.dominates(&y),
                        x.reversed().dominates(&y.reversed()),
                        "x={x} y={y}"
                    );
                }
            }
        }
    }

    #[test]
    fn sorted_form_worked_example() {
        let x = cc("(1)^2 5 (1) 1 (1)^2 3 1 (1)^6 2 1 (1)^3");
        assert_eq!(x.sorted_form(), cc("(1)^3 5 3 2 1 1 (1)^9 1 (1)^2"));
    }

    #[test]
    fn normal_form_shapes_and_counts() {
        let x = cc("(1)^2 5 (1) 1 (1)^2 3 1 (1)^6 2 1 (1)^3");
        assert_eq!(x.normal_form(), cc("(1)^3 5 3 1 1 1 1 (1)^10 1 (1)"));
        assert_eq!(cc("(1)^4").normal_form(), cc("(1)^4"));
        for t in 2..=8usize {
            for x in enumerate(t) {
                let nf = x.normal_form();
                assert!(nf.is_normal_shape(), "x={x} nf={nf}");
                assert_eq!(nf.total(), t);
                assert_eq!(nf.normal_form(), nf, "normal form must be stable: {x}");
            }
        }
        for t in 2..=7usize {
            for x in enumerate(t) {
                let nf = x.normal_form();
                for n in 2..=9 {
                    assert_eq!(
                        x.count_dominators_brute(n),
                        nf.count_dominators_brute(n),
                        "x={x} nf={nf} n={n}"
                    );
                }
            }
        }
    }

    #[test]
    fn dominator_gf_matches_brute_force() {
        let order = 10;
        for t in 2..=6usize {
            for x in enumerate(t) {
                if x.is_all_circled() {
                    assert!(x.dominator_gf(order).is_err());
                    continue;
                }
                let gf = x.dominator_gf(order).unwrap();
                for n in 2..=order {
                    assert_eq!(
                        gf.coeff_count(n),
                        BigUint::from(x.count_dominators_brute(n)),
                        "x={x} n={n}"
                    );
                }
                for m in 0..t {
                    assert!(gf.coeff(m).is_zero(), "x={x} m={m}");
                }
            }
        }
    }

    #[test]
    fn count_avoiders_examples() {
        let x = cc("(1) 1 (1) 1 (1)");
        for n in 1..=12usize {
            assert_eq!(
                count_avoiders(n, &x),
                BigUint::from(2u32).pow(n as u32 - 1) - BigUint::from(n - 1)
            );
        }
        for t in 2..=5usize {
            for p in enumerate(t) {
                let ps = PatternSet::new(vec![cp("1324"), p.to_perm()]);
                for n in 1..=8usize {
                    assert_eq!(
                        count_avoiders(n, &p),
                        BigUint::from(oracle_count(n, &ps)),
                        "p={p} n={n}"
                    );
                }
            }
        }
    }

    #[test]
    fn identity_avoider_dp() {
        assert_eq!(count_identity_avoiders(4, 5), BigUint::from(5u32));
        assert_eq!(count_identity_avoiders(5, 5), BigUint::from(12u32));
        assert_eq!(count_identity_avoiders(6, 5), BigUint::from(24u32));
        for n in 6..=20usize {
            let expect = count_identity_avoiders(n - 1, 5)
                + count_identity_avoiders(n - 2, 5)
                + BigUint::from(n + 1);
            assert_eq!(count_identity_avoiders(n, 5), expect, "n={n}");
        }
        for k in 2..=6usize {
            let pat = CircledComposition::new(vec![Part::circled(); k]).unwrap();
            for n in 2..=9usize {
                let brute = enumerate(n).iter().filter(|z| !z.dominates(&pat)).count();
                assert_eq!(count_identity_avoiders(n, k), BigUint::from(brute), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn delta_and_block_closed_forms() {
        assert_eq!(delta_pair_count(5, 2), BigUint::from(7u32));
        assert_eq!(delta_pair_count(2, 7), BigUint::one());
        for n in 3..=12usize {
            for k in 1..=5usize {
                let mut rhs = delta_pair_count(n - 1, k);
                if k >= 2 {
                    for i in 1..=n - 2 {
                        rhs += delta_pair_count(n - i, k - 1);
                    }
                }
                assert_eq!(delta_pair_count(n, k), rhs, "n={n} k={k}");
            }
        }
        for k in 1..=4usize {
            let mut parts = vec![Part::circled()];
            parts.extend(std::iter::repeat_n(Part::uncircled(1), k));
            parts.push(Part::circled());
            let x = CircledComposition::new(parts).unwrap();
            for n in 2..=9usize {
                assert_eq!(delta_pair_count(n, k), count_avoiders(n, &x), "n={n} k={k}");
            }
        }
        assert_eq!(block_pair_count(4, 3), BigUint::from(5u32));
        assert_eq!(block_pair_count(5, 3), BigUint::from(12u32));
        assert_eq!(block_pair_count(6, 3), BigUint::from(29u32));
        for k in 1..=5usize {
            let x = CircledComposition::new(vec![
                Part::circled(),
                Part::uncircled(k as u32),
                Part::circled(),
            ])
            .unwrap();
            for n in 2..=9usize {
                assert_eq!(block_pair_count(n, k), count_avoiders(n, &x), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn size5_formulas_match_oracle() {
        let cases: [(Size5Pair1324, &str); 5] = [
            (Size5Pair1324::P15432, "15432"),
            (Size5Pair1324::P15234, "15234"),
            (Size5Pair1324::P12345, "12345"),
            (Size5Pair1324::P12354, "12354"),
            (Size5Pair1324::P13542, "13542"),
        ];
        for (sel, pat) in cases {
            let ps = PatternSet::new(vec![cp("1324"), cp(pat)]);
            for n in 1..=8usize {
                assert_eq!(
                    size5_count(n, sel),
                    BigUint::from(oracle_count(n, &ps)),
                    "{pat} n={n}"
                );
            }
        }
        assert_eq!(size5_count(6, Size5Pair1324::P12345), BigUint::from(24u32));
        assert_eq!(size5_count(5, Size5Pair1324::P12354), BigUint::from(12u32));
        assert_eq!(size5_count(4, Size5Pair1324::P15432), BigUint::from(5u32));
        for n in 3..=20usize {
            let expect = size5_count(n - 1, Size5Pair1324::P12354) + fibonacci(n + 1)
                - BigUint::from(n + 1);
            assert_eq!(size5_count(n, Size5Pair1324::P12354), expect);
        }
    }

    #[test]
    fn descent_polynomial_matches_oracle() {
        let ps = PatternSet::new(vec![cp("1324")]);
        for n in 2..=8usize {
            let formula = descent_polynomial(n);
            let oracle: Vec<BigUint> = crate::perm::descent_polynomial(n, &ps)
                .into_iter()
                .map(BigUint::from)
                .collect();
            assert_eq!(formula, oracle, "n={n}");
            let total: BigUint = formula.iter().sum();
            assert_eq!(total, fibonacci(2 * n - 4));
        }
        assert_eq!(descent_polynomial(2), vec![BigUint::zero(), BigUint::one()]);
    }

    #[test]
    fn uncircled_part_statistic() {
        for n in 2..=9usize {
            let mut byi: HashMap<usize, u64> = HashMap::new();
            for x in enumerate(n) {
                *byi.entry(x.uncircled_count()).or_default() += 1;
            }
            for (i, cnt) in byi {
                assert_eq!(
                    BigUint::from(cnt),
                    binomial(n + i - 2, 2 * i as isize),
                    "n={n} i={i}"
                );
            }
        }
    }
}
