//! Orbits of `b[m,p]` under `μ` and their 0-1-sequences.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{require_torus, torus_gen, EpsPowers};
use crate::augment::Augmentation;
use crate::dga::CmTables;
use crate::error::{Error, Result};
use crate::z2poly::Gf2;

/// A homology class on an orbit, named by the expression representing it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum OrbitElement {
    Crossing { m: u32, n: u32 },
    C { i: u32, j: u32 },
    M { i: u32, j: u32 },
}

impl fmt::Display for OrbitElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            OrbitElement::Crossing { m, n } => write!(f, "b[{m},{n}]"),
            OrbitElement::C { i, j } => write!(f, "C[{i},{j}]"),
            OrbitElement::M { i, j } => write!(f, "M[{i},{j}]"),
        }
    }
}

impl FromStr for OrbitElement {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::UnknownGenerator(s.to_string());
        let (head, rest) = s.split_once('[').ok_or_else(bad)?;
        let (a, b) = rest
            .strip_suffix(']')
            .and_then(|r| r.split_once(','))
            .ok_or_else(bad)?;
        let a: u32 = a.trim().parse().map_err(|_| bad())?;
        let b: u32 = b.trim().parse().map_err(|_| bad())?;
        match head {
            "b" => Ok(OrbitElement::Crossing { m: a, n: b }),
            "C" => Ok(OrbitElement::C { i: a, j: b }),
            "M" => Ok(OrbitElement::M { i: a, j: b }),
            _ => Err(bad()),
        }
    }
}

impl From<OrbitElement> for String {
    fn from(e: OrbitElement) -> String {
        e.to_string()
    }
}

impl TryFrom<String> for OrbitElement {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl OrbitElement {
    fn eval(&self, q: u32, x: &Augmentation, t: &CmTables<Gf2>) -> Gf2 {
        match *self {
            OrbitElement::Crossing { m, n } => x.eps(torus_gen(q, m, n)),
            OrbitElement::C { i, j } => *t.c(i as usize, j as usize),
            OrbitElement::M { i, j } => *t.m(i as usize, j as usize),
        }
    }
}

/// `μᵏ(b[m,p])` for `k = 0..p+q−1`: the b-, C- and M-sequences.
pub fn orbit_descriptors(p: u32, q: u32, m: u32) -> Vec<OrbitElement> {
    let mut out = Vec::with_capacity((p + q) as usize);
    out.extend((1..=p).rev().map(|n| OrbitElement::Crossing { m, n }));
    out.extend((0..m).map(|t| OrbitElement::C { i: q - t, j: m - t }));
    out.extend((0..q - m).map(|s| OrbitElement::M {
        i: q - m - s,
        j: q - s,
    }));
    out
}

/// Smallest `d ≥ 1` such that rotating `s` by `d` gives `s` back.
pub fn minimal_period(s: &[u8]) -> usize {
    let n = s.len();
    (1..=n)
        .find(|&d| (0..n).all(|k| s[k] == s[(k + d) % n]))
        .unwrap_or(n)
}

/// The orbit whose 0-1-sequence separates `p + q` from its proper divisors:
/// `m = p` when `q > p`, `m = p mod q` when `q < p`. None when one of `p`, `q`
/// divides the other.
pub fn designated_m(p: u32, q: u32) -> Option<u32> {
    if q > p && q % p != 0 {
        Some(p)
    } else if q < p && p % q != 0 {
        Some(p % q)
    } else {
        None
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PatternCase {
    /// `2p < q`
    OneSmall,
    /// `p < q < 2p`
    TwoLarge,
    /// `q < p`, `2r₀ < q`
    ThreeSmallRemainder,
    /// `q < p`, `2r₀ ≥ q`
    FourLargeRemainder,
}

impl PatternCase {
    pub fn number(&self) -> u8 {
        match self {
            PatternCase::OneSmall => 1,
            PatternCase::TwoLarge => 2,
            PatternCase::ThreeSmallRemainder => 3,
            PatternCase::FourLargeRemainder => 4,
        }
    }
}

/// The predicted 0-1-sequence of the designated orbit, split into its b-, C-
/// and M-parts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpectedPattern {
    pub case: PatternCase,
    pub m: u32,
    pub b_part: Vec<u8>,
    pub c_part: Vec<u8>,
    pub m_part: Vec<u8>,
}

impl ExpectedPattern {
    pub fn sequence(&self) -> Vec<u8> {
        [&self.b_part[..], &self.c_part, &self.m_part].concat()
    }
}

fn run(bit: u8, len: u32) -> impl Iterator<Item = u8> {
    std::iter::repeat(bit).take(len as usize)
}

pub fn expected_pattern(p: u32, q: u32) -> Option<ExpectedPattern> {
    let m = designated_m(p, q)?;
    let (case, b_part, m_part): (_, Vec<u8>, Vec<u8>) = if q > p {
        if 2 * p <= q {
            (PatternCase::OneSmall, run(1, p).collect(), run(0, p).chain(run(1, q - 2 * p)).collect())
        } else {
            (
                PatternCase::TwoLarge,
                run(0, 2 * p - q).chain(run(1, q - p)).collect(),
                run(0, q - p).collect(),
            )
        }
    } else if 2 * m < q {
        (
            PatternCase::ThreeSmallRemainder,
            run(0, p - m).chain(run(1, m)).collect(),
            run(1, q - 2 * m).chain(run(0, m)).collect(),
        )
    } else {
        (
            PatternCase::FourLargeRemainder,
            run(0, p - q + m).chain(run(1, q - m)).collect(),
            run(0, q - m).collect(),
        )
    };
    Some(ExpectedPattern {
        case,
        m,
        b_part,
        c_part: run(1, m).collect(),
        m_part,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", content = "reason", rename_all = "snake_case")]
pub enum PatternStatus {
    Match,
    /// Differs from the prediction only in a way already understood.
    Flagged(String),
    Mismatch(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitReport {
    pub p: u32,
    pub q: u32,
    pub m: u32,
    pub base: OrbitElement,
    pub elements: Vec<OrbitElement>,
    /// `ε` of each descriptor.
    pub sequence: Vec<u8>,
    /// `ε(μᵏ(b[m,p]))` from iterating `ε∘μ` on crossings, `k = 0..=p+q`.
    pub iterated: Vec<u8>,
    pub minimal_period: usize,
    pub expected: Option<ExpectedPattern>,
    pub status: Option<PatternStatus>,
}

impl OrbitReport {
    /// Descriptor and iteration routes agree, and the orbit closes at `p + q`.
    pub fn consistent(&self) -> bool {
        let n = self.sequence.len();
        self.iterated.len() == n + 1
            && self.iterated[..n] == self.sequence[..]
            && self.iterated[n] == self.iterated[0]
    }

    pub fn zeros(&self) -> usize {
        self.sequence.iter().filter(|&&b| b == 0).count()
    }

    pub fn ones(&self) -> usize {
        self.sequence.len() - self.zeros()
    }
}

fn compare(p: u32, q: u32, m: u32, s: &[u8], e: &ExpectedPattern) -> PatternStatus {
    if e.m != m {
        return PatternStatus::Mismatch(format!("orbit m = {m}, prediction is for m = {}", e.m));
    }
    let (b, rest) = s.split_at(p as usize);
    let (c, mm) = rest.split_at(m as usize);
    if b == e.b_part && c == e.c_part && mm == e.m_part {
        return PatternStatus::Match;
    }
    let show = |v: &[u8]| v.iter().map(u8::to_string).collect::<String>();
    let detail = format!("got {}, predicted {}", show(s), show(&e.sequence()));
    if q == 2 && b == e.b_part && c == e.c_part {
        // for q = 2 the single M-entry is M[1,2] = B[1,2], and 1 → 2 is an
        // edge of the augmented graph, so ε gives 1
        PatternStatus::Flagged(format!("q = 2 M-part: {detail}"))
    } else {
        PatternStatus::Mismatch(detail)
    }
}

/// The orbit of `b[m,p]` with its 0-1-sequence under the canonical augmentation.
pub fn orbit(p: u32, q: u32, m: u32) -> Result<OrbitReport> {
    let b = require_torus(p, q)?;
    if m < 1 || m >= q {
        return Err(Error::Precondition(format!("orbit index m = {m} outside 1..{q}")));
    }
    let x = Augmentation::construct(&b)?;
    let tables = x.scalar_tables(&b);
    let elements = orbit_descriptors(p, q, m);
    let sequence: Vec<u8> = elements.iter().map(|e| e.eval(q, &x, &tables).bit()).collect();
    let iterated = EpsPowers::new(p, q, &x, (p + q) as usize)?.sequence_of(m);
    let expected = expected_pattern(p, q).filter(|e| e.m == m);
    let status = expected.as_ref().map(|e| compare(p, q, m, &sequence, e));
    Ok(OrbitReport {
        p,
        q,
        m,
        base: OrbitElement::Crossing { m, n: p },
        minimal_period: minimal_period(&sequence),
        elements,
        sequence,
        iterated,
        expected,
        status,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn periods() {
        assert_eq!(minimal_period(&[0, 0, 1, 1, 1]), 5);
        assert_eq!(minimal_period(&[1, 1, 1, 1]), 1);
        assert_eq!(minimal_period(&[0, 1, 0, 1]), 2);
        assert_eq!(minimal_period(&[1, 0, 0, 1, 0, 0]), 3);
    }

    #[test]
    fn descriptors_for_34() {
        let names: Vec<String> = orbit_descriptors(3, 4, 3).iter().map(|e| e.to_string()).collect();
        assert_eq!(
            names,
            ["b[3,3]", "b[3,2]", "b[3,1]", "C[4,3]", "C[3,2]", "C[2,1]", "M[1,4]"]
        );
    }

    #[test]
    fn known_sequences() {
        let r = orbit(3, 4, 3).unwrap();
        assert_eq!(r.sequence, vec![0, 0, 1, 1, 1, 1, 0]);
        assert_eq!(r.minimal_period, 7);
        assert_eq!(r.status, Some(PatternStatus::Match));
        assert!(r.consistent());

        let r = orbit(2, 5, 2).unwrap();
        assert_eq!(r.sequence, vec![1, 1, 1, 1, 0, 0, 1]);
        assert_eq!(r.status, Some(PatternStatus::Match));
        assert!(r.consistent());

        let r = orbit(3, 2, 1).unwrap();
        assert_eq!(r.sequence, vec![0, 0, 1, 1, 1]);
        assert_eq!(r.minimal_period, 5);
        assert!(matches!(r.status, Some(PatternStatus::Flagged(_))));
        assert!(r.consistent());
    }

    #[test]
    fn small_remainder_m_part_is_reordered() {
        let r = orbit(7, 5, 2).unwrap();
        assert_eq!(r.sequence, vec![0, 0, 0, 0, 0, 1, 1, 1, 1, 0, 0, 1]);
        assert_eq!(r.minimal_period, 12);
        assert!(matches!(r.status, Some(PatternStatus::Mismatch(_))));
        let r = orbit(4, 3, 1).unwrap();
        assert_eq!(r.sequence, vec![0, 0, 0, 1, 1, 1, 1]);
        assert_eq!(r.minimal_period, 7);
    }

    #[test]
    fn predicted_cases() {
        assert_eq!(expected_pattern(2, 5).unwrap().case, PatternCase::OneSmall);
        assert_eq!(expected_pattern(3, 4).unwrap().sequence(), vec![0, 0, 1, 1, 1, 1, 0]);
        let e = expected_pattern(5, 3).unwrap();
        assert_eq!((e.case, e.m), (PatternCase::FourLargeRemainder, 2));
        assert_eq!(e.sequence(), vec![0, 0, 0, 0, 1, 1, 1, 0]);
        assert_eq!(expected_pattern(7, 3).unwrap().case, PatternCase::ThreeSmallRemainder);
        assert!(expected_pattern(2, 4).is_none());
        assert!(expected_pattern(6, 3).is_none());
    }

    #[test]
    fn element_names_round_trip() {
        for e in orbit_descriptors(4, 7, 4) {
            assert_eq!(e.to_string().parse::<OrbitElement>().unwrap(), e);
        }
        assert!("Z[1,2]".parse::<OrbitElement>().is_err());
        let json = serde_json::to_string(&orbit(3, 4, 3).unwrap()).unwrap();
        let back: OrbitReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, orbit(3, 4, 3).unwrap());
    }
}
