//! Block structure of the torus-link augmentation versus the Euclidean
//! algorithm on `(p, q)`.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use super::Augmentation;
use crate::braid::{BraidWord, TorusCoord};
use crate::error::{Error, Result};

/// Quotients and residues of `p = k₋₁q + r₀`, `q = k₀r₀ + r₁`,
/// `r₀ = k₁r₁ + r₂`, … down to remainder 0.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EuclidChain {
    /// `k₋₁, k₀, k₁, …, k_l`.
    pub quotients: Vec<u32>,
    /// `r₀, r₁, …, r_l`; the last one is `gcd(p, q)`.
    pub residues: Vec<u32>,
}

impl EuclidChain {
    pub fn new(p: u32, q: u32) -> Self {
        let mut quotients = vec![p / q];
        let mut residues = Vec::new();
        let (mut a, mut b) = (q, p % q);
        while b != 0 {
            residues.push(b);
            quotients.push(a / b);
            (a, b) = (b, a % b);
        }
        EuclidChain {
            quotients,
            residues,
        }
    }

    /// Block multiset predicted from the chain, as `size → count`:
    /// `k₀ − 1` blocks of size `r₀`, then `k_s` blocks of size `r_s`.
    pub fn predicted_blocks(&self) -> BTreeMap<u32, u32> {
        let mut out = BTreeMap::new();
        for (s, &r) in self.residues.iter().enumerate() {
            let k = self.quotients[s + 1];
            let count = if s == 0 { k - 1 } else { k };
            if count > 0 {
                *out.entry(r).or_insert(0) += count;
            }
        }
        out
    }
}

/// Maximal runs `c, c + step, c + 2·step, …` among the given coordinates, as
/// `size → count`.
fn runs(coords: &BTreeSet<TorusCoord>, dm: u32, dn: u32) -> BTreeMap<u32, u32> {
    let mut out = BTreeMap::new();
    for c in coords {
        if c.m > dm && c.n > dn && coords.contains(&TorusCoord { m: c.m - dm, n: c.n - dn }) {
            continue;
        }
        let mut len = 1;
        while coords.contains(&TorusCoord {
            m: c.m + len * dm,
            n: c.n + len * dn,
        }) {
            len += 1;
        }
        *out.entry(len).or_insert(0) += 1;
    }
    out
}

/// Runs of one crossing row through consecutive periods, `(m, n) ~ (m, n+1)`.
/// In the usual drawing of the torus braid these are the square diagonals.
pub fn period_runs(coords: &BTreeSet<TorusCoord>) -> BTreeMap<u32, u32> {
    runs(coords, 0, 1)
}

/// Runs under `(m, n) ~ (m+1, n+1)`.
pub fn diagonal_runs(coords: &BTreeSet<TorusCoord>) -> BTreeMap<u32, u32> {
    runs(coords, 1, 1)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EuclidBlocks {
    pub p: u32,
    pub q: u32,
    pub chain: EuclidChain,
    pub predicted: BTreeMap<u32, u32>,
    /// Blocks under [`period_runs`].
    pub actual: BTreeMap<u32, u32>,
    /// Blocks under [`diagonal_runs`], kept for comparison.
    pub diagonal: BTreeMap<u32, u32>,
    pub selected: Vec<TorusCoord>,
}

impl EuclidBlocks {
    pub fn matches(&self) -> bool {
        self.predicted == self.actual
    }

    pub fn predicted_total(&self) -> u32 {
        self.predicted.iter().map(|(s, c)| s * c).sum()
    }
}

pub fn euclid_blocks(p: u32, q: u32) -> Result<EuclidBlocks> {
    if p < 2 || q < 2 {
        return Err(Error::Precondition(format!("need p, q >= 2, got ({p}, {q})")));
    }
    let braid = BraidWord::torus(p, q)?;
    let x = Augmentation::construct(&braid)?;
    let table = braid.crossings();
    let selected: BTreeSet<TorusCoord> = x
        .crossings()
        .iter()
        .filter_map(|&id| table.by_id(id).and_then(|c| c.torus))
        .collect();
    let chain = EuclidChain::new(p, q);
    Ok(EuclidBlocks {
        p,
        q,
        predicted: chain.predicted_blocks(),
        actual: period_runs(&selected),
        diagonal: diagonal_runs(&selected),
        chain,
        selected: selected.into_iter().collect(),
    })
}
