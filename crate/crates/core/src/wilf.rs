//! Avoidance sequences with method selection, trivial-symmetry orbits, and
//! Wilf-equivalence classification of {size-4, size-k} pattern pairs.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::One;

use crate::circled1324;
use crate::error::{Error, Result};
use crate::grass1432;
use crate::num_util::{factorial, fibonacci};
use crate::perm::{all_circular, count_avoiders, CircularPermutation, PatternSet};
use crate::words1342;

/// The three size-4 representatives; every other size-4 class is trivially
/// equivalent to one of them.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Anchor {
    P1342,
    P1324,
    P1432,
}

impl Anchor {
    pub fn all() -> [Anchor; 3] {
        [Anchor::P1342, Anchor::P1324, Anchor::P1432]
    }

    pub fn pattern(&self) -> CircularPermutation {
        self.as_str().parse().unwrap()
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Anchor::P1342 => "1342",
            Anchor::P1324 => "1324",
            Anchor::P1432 => "1432",
        }
    }

    pub fn parse(s: &str) -> Result<Anchor> {
        match s.trim().trim_start_matches('[').trim_end_matches(']') {
            "1342" => Ok(Anchor::P1342),
            "1324" => Ok(Anchor::P1324),
            "1432" => Ok(Anchor::P1432),
            other => Err(Error::Parse(format!("unknown anchor `{other}`"))),
        }
    }

    /// Members of Av_k[anchor] through the encoding enumerations.
    pub fn avoider_perms(&self, k: usize) -> Vec<CircularPermutation> {
        let mut v: Vec<CircularPermutation> = match self {
            Anchor::P1342 => words1342::enumerate(k).iter().map(|w| w.to_perm()).collect(),
            Anchor::P1324 => circled1324::enumerate(k).iter().map(|x| x.to_perm()).collect(),
            Anchor::P1432 => grass1432::enumerate(k).iter().map(|c| c.to_perm()).collect(),
        };
        v.sort();
        v
    }

    /// The coded description of an avoider, for reports.
    pub fn encode_label(&self, p: &CircularPermutation) -> Result<String> {
        Ok(match self {
            Anchor::P1342 => format!("w={}", words1342::perm_to_word(p)?),
            Anchor::P1324 => circled1324::from_perm(p)?.to_string(),
            Anchor::P1432 => grass1432::classify(p)?.to_string(),
        })
    }
}

impl fmt::Display for Anchor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.as_str())
    }
}

/// How a sequence is computed.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Method {
    /// Exhaustive scan over all (n-1)! rotations. Exact but exponential.
    Oracle,
    /// Encoding-specific dynamic programs; needs a supported pattern set.
    Encoding,
    /// Encoding terms, cross-checked against the oracle up to the cap.
    Both { oracle_cap: usize },
}

/// An avoidance counting result, terms indexed from n = 1.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AvoidanceSequence {
    pub patterns: PatternSet,
    pub terms: Vec<BigUint>,
    pub method: &'static str,
}

/// Encoding-route terms for n = 1..=n_max, or an explicit unsupported
/// error when no anchor encoding covers the set.
pub fn encoding_terms(ps: &PatternSet, n_max: usize) -> Result<Vec<BigUint>> {
    let pats = ps.patterns();
    if pats.is_empty() {
        return Ok((1..=n_max).map(|n| factorial(n - 1)).collect());
    }
    let mut last_err = None;
    for anchor in Anchor::all() {
        let a = anchor.pattern();
        if !pats.contains(&a) {
            continue;
        }
        let extras: Vec<&CircularPermutation> = pats.iter().filter(|p| **p != a).collect();
        match anchored_terms(anchor, &extras, n_max) {
            Ok(t) => return Ok(t),
            Err(e) => last_err = Some(e),
        }
    }
    Err(last_err.unwrap_or_else(|| {
        Error::Unsupported(format!(
            "{ps} has no size-4 anchor among [1342], [1324], [1432]"
        ))
    }))
}

fn anchored_terms(
    anchor: Anchor,
    extras: &[&CircularPermutation],
    n_max: usize,
) -> Result<Vec<BigUint>> {
    match anchor {
        Anchor::P1342 => {
            let words: Vec<_> = extras
                .iter()
                .map(|p| words1342::perm_to_word(p).map(|c| c.into_word()))
                .collect::<Result<_>>()?;
            Ok((1..=n_max)
                .map(|n| words1342::count_pair_set(n, &words))
                .collect())
        }
        Anchor::P1324 => match extras {
            [] => Ok((1..=n_max)
                .map(|n| {
                    if n == 1 {
                        BigUint::one()
                    } else {
                        fibonacci(2 * n - 4)
                    }
                })
                .collect()),
            [p] => {
                let x = circled1324::from_perm(p)?;
                Ok(circled1324::count_avoiders_upto(n_max, &x))
            }
            _ => Err(Error::Unsupported(
                "the circled-composition counter handles one extra pattern".into(),
            )),
        },
        Anchor::P1432 => match extras {
            [] => Ok((1..=n_max).map(grass1432::av_total).collect()),
            [p] => {
                let code = grass1432::classify(p)?;
                if code.flavor() == grass1432::Flavor::Identity {
                    Ok((1..=n_max)
                        .map(|n| grass1432::count_identity_pair(n, code.size()))
                        .collect())
                } else {
                    grass1432::count_pair_upto(n_max, &code)
                }
            }
            _ => Err(Error::Unsupported(
                "the code counter handles one extra pattern".into(),
            )),
        },
    }
}

/// Oracle-route terms for n = 1..=n_max.
pub fn oracle_terms(ps: &PatternSet, n_max: usize) -> Vec<BigUint> {
    (1..=n_max).map(|n| BigUint::from(count_avoiders(n, ps))).collect()
}

/// Computes an avoidance sequence; `Both` fails loudly on any disagreement.
pub fn avoidance_sequence(
    ps: &PatternSet,
    n_max: usize,
    method: Method,
) -> Result<AvoidanceSequence> {
    let (terms, name) = match method {
        Method::Oracle => (oracle_terms(ps, n_max), "oracle"),
        Method::Encoding => (encoding_terms(ps, n_max)?, "encoding"),
        Method::Both { oracle_cap } => {
            let enc = encoding_terms(ps, n_max)?;
            let cap = oracle_cap.min(n_max);
            let orc = oracle_terms(ps, cap);
            for n in 1..=cap {
                if enc[n - 1] != orc[n - 1] {
                    return Err(Error::MethodMismatch {
                        n,
                        left: "encoding".into(),
                        left_value: enc[n - 1].to_string(),
                        right: "oracle".into(),
                        right_value: orc[n - 1].to_string(),
                    });
                }
            }
            (enc, "encoding+oracle")
        }
    };
    Ok(AvoidanceSequence {
        patterns: ps.clone(),
        terms,
        method: name,
    })
}

/// Orbits of the size-k circular permutations under identity, reversal,
/// complement, and reverse-complement.
pub fn trivial_orbits(k: usize) -> Vec<Vec<CircularPermutation>> {
    let mut seen: std::collections::HashSet<CircularPermutation> = Default::default();
    let mut orbits = Vec::new();
    for p in all_circular(k) {
        if seen.contains(&p) {
            continue;
        }
        let mut orbit = vec![p.clone(), p.reverse(), p.complement(), p.reverse_complement()];
        orbit.sort();
        orbit.dedup();
        for q in &orbit {
            seen.insert(q.clone());
        }
        orbits.push(orbit);
    }
    orbits
}

/// One Wilf class: members share the avoidance sequence on the horizon.
#[derive(Clone, Debug)]
pub struct WilfClass {
    pub members: Vec<CircularPermutation>,
    pub sequence: Vec<BigUint>,
}

/// Classification of the pairs {anchor, sigma} over all sigma in
/// Av_k[anchor], grouped by avoidance sequence up to the horizon.
#[derive(Clone, Debug)]
pub struct WilfClassification {
    pub family: String,
    pub evidence_horizon: usize,
    pub classes: Vec<WilfClass>,
    /// Set when a theorem pins the exact class count for the family (the
    /// [1342] anchor); other anchors report horizon evidence only.
    pub proved_class_count: Option<usize>,
    /// (class index, class index, first separating n).
    pub witnesses: Vec<(usize, usize, usize)>,
}

impl WilfClassification {
    pub fn is_proved_exact(&self) -> bool {
        self.proved_class_count == Some(self.classes.len())
    }
}

fn group_by_sequence<M: Clone>(
    items: Vec<(M, Vec<BigUint>)>,
) -> Vec<(Vec<M>, Vec<BigUint>)> {
    let mut groups: BTreeMap<Vec<BigUint>, Vec<M>> = BTreeMap::new();
    for (m, seq) in items {
        groups.entry(seq).or_default().push(m);
    }
    groups.into_iter().map(|(seq, ms)| (ms, seq)).collect()
}

fn separation_witnesses(classes: &[WilfClass]) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for i in 0..classes.len() {
        for j in i + 1..classes.len() {
            let n = classes[i]
                .sequence
                .iter()
                .zip(&classes[j].sequence)
                .position(|(a, b)| a != b)
                .map(|p| p + 1)
                .expect("distinct classes must separate within the horizon");
            out.push((i, j, n));
        }
    }
    out
}

/// Groups every pair {anchor, sigma}, sigma in Av_k[anchor], by its
/// sequence up to n_max.
pub fn classify_pairs(anchor: Anchor, k: usize, n_max: usize) -> Result<WilfClassification> {
    let members = anchor.avoider_perms(k);
    let mut items = Vec::new();
    for m in members {
        let ps = PatternSet::new(vec![anchor.pattern(), m.clone()]);
        let seq = encoding_terms(&ps, n_max)?;
        items.push((m, seq));
    }
    let classes: Vec<WilfClass> = group_by_sequence(items)
        .into_iter()
        .map(|(members, sequence)| WilfClass { members, sequence })
        .collect();
    let witnesses = separation_witnesses(&classes);
    // For the [1342] anchor the classes are fully determined: one class of
    // non-exceptional patterns plus one per unordered twin-parameter pair,
    // giving floor(k/2) + 1.
    let proved_class_count = match anchor {
        Anchor::P1342 if k >= 4 => Some(k / 2 + 1),
        _ => None,
    };
    Ok(WilfClassification {
        family: format!("[{},{k}]-pairs", anchor.as_str()),
        evidence_horizon: n_max,
        classes,
        proved_class_count,
        witnesses,
    })
}

/// A {size-4, size-5} pair.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Pair45 {
    pub anchor: Anchor,
    pub pattern: CircularPermutation,
}

impl fmt::Display for Pair45 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.anchor.as_str(), self.pattern.canonical())
    }
}

/// One class of [4,5]-pairs.
#[derive(Clone, Debug)]
pub struct Class45 {
    pub members: Vec<Pair45>,
    pub sequence: Vec<BigUint>,
}

impl Class45 {
    pub fn anchors(&self) -> Vec<Anchor> {
        let mut a: Vec<Anchor> = self.members.iter().map(|p| p.anchor).collect();
        a.sort();
        a.dedup();
        a
    }
}

/// Classification of all [4,5]-pairs across the three anchors.
#[derive(Clone, Debug)]
pub struct Classification45 {
    pub evidence_horizon: usize,
    pub classes: Vec<Class45>,
    /// Indices of classes whose members span more than one anchor.
    pub cross_anchor_classes: Vec<usize>,
    pub witnesses: Vec<(usize, usize, usize)>,
}

/// Groups all 38 [4,5]-pairs by their sequences up to n_max.
pub fn classify_45_pairs(n_max: usize) -> Result<Classification45> {
    let mut items = Vec::new();
    for anchor in Anchor::all() {
        for pattern in anchor.avoider_perms(5) {
            let ps = PatternSet::new(vec![anchor.pattern(), pattern.clone()]);
            let seq = encoding_terms(&ps, n_max)?;
            items.push((Pair45 { anchor, pattern }, seq));
        }
    }
    let classes: Vec<Class45> = group_by_sequence(items)
        .into_iter()
        .map(|(mut members, sequence)| {
            members.sort();
            Class45 { members, sequence }
        })
        .collect();
    let cross = classes
        .iter()
        .enumerate()
        .filter(|(_, c)| c.anchors().len() > 1)
        .map(|(i, _)| i)
        .collect();
    let witnesses = {
        let as_wilf: Vec<WilfClass> = classes
            .iter()
            .map(|c| WilfClass {
                members: c.members.iter().map(|p| p.pattern.clone()).collect(),
                sequence: c.sequence.clone(),
            })
            .collect();
        separation_witnesses(&as_wilf)
    };
    Ok(Classification45 {
        evidence_horizon: n_max,
        classes,
        cross_anchor_classes: cross,
        witnesses,
    })
}
