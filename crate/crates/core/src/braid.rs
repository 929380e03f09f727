//! Positive braid words, their permutations and crossing labels.
//!
//! Strands are numbered by row, 1 at the top. Letter `m` is a positive
//! half-twist of the strands in rows `m` and `m + 1`; the strand entering
//! in row `m` passes over.
//!
//! Every crossing carries a stable [`GenId`] that travels with it when the
//! word is conjugated, so polynomials built for one conjugate can be read
//! in another.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::z2poly::GenId;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: u32,
    letters: Vec<u32>,
    ids: Vec<GenId>,
}

impl BraidWord {
    pub fn new(strands: u32, letters: Vec<u32>) -> Result<Self> {
        Self::validate(strands as i64, letters.iter().map(|&l| l as i64))?;
        let ids = (0..letters.len() as u32).map(GenId).collect();
        Ok(BraidWord {
            strands,
            letters,
            ids,
        })
    }

    fn validate(strands: i64, letters: impl Iterator<Item = i64>) -> Result<()> {
        if strands < 1 {
            return Err(Error::InvalidStrands(strands));
        }
        for (k, letter) in letters.enumerate() {
            if letter < 1 || letter > strands - 1 {
                return Err(Error::LetterOutOfRange {
                    position: k + 1,
                    letter,
                    max: strands - 1,
                });
            }
        }
        Ok(())
    }

    /// Parses a comma separated word such as `"1,2,1"`; the empty string is
    /// the trivial braid.
    pub fn parse(strands: i64, word: &str) -> Result<Self> {
        let word = word.trim();
        let letters: Vec<i64> = if word.is_empty() {
            Vec::new()
        } else {
            word.split(|c: char| c == ',' || c.is_whitespace())
                .filter(|s| !s.is_empty())
                .map(|s| {
                    s.parse::<i64>()
                        .map_err(|_| Error::BraidSyntax(format!("`{s}` is not an integer")))
                })
                .collect::<Result<_>>()?
        };
        Self::validate(strands, letters.iter().copied())?;
        BraidWord::new(strands as u32, letters.into_iter().map(|l| l as u32).collect())
    }

    /// The standard word `(1 2 … q−1)^p` whose closure is the `(p, q)` torus link.
    pub fn torus(p: u32, q: u32) -> Result<Self> {
        if p < 1 || q < 2 {
            return Err(Error::Precondition(format!(
                "torus braid needs p >= 1 and q >= 2, got ({p}, {q})"
            )));
        }
        let letters = (0..p).flat_map(|_| 1..q).collect();
        BraidWord::new(q, letters)
    }

    pub fn strands(&self) -> u32 {
        self.strands
    }

    pub fn letters(&self) -> &[u32] {
        &self.letters
    }

    /// Stable identities of the crossings, in word order.
    pub fn ids(&self) -> &[GenId] {
        &self.ids
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// 1-based word position of the crossing with identity `id`.
    pub fn position_of(&self, id: GenId) -> Option<usize> {
        self.ids.iter().position(|&g| g == id).map(|k| k + 1)
    }

    pub fn permutation(&self) -> Permutation {
        let rows = self.final_rows();
        let mut images = vec![0; self.strands as usize];
        for (row, &left) in rows.iter().enumerate() {
            images[left as usize - 1] = row as u32 + 1;
        }
        Permutation { images }
    }

    /// Left labels of the strands occupying each row at the right end.
    fn final_rows(&self) -> Vec<u32> {
        let mut rows: Vec<u32> = (1..=self.strands).collect();
        for &m in &self.letters {
            rows.swap(m as usize - 1, m as usize);
        }
        rows
    }

    pub fn is_pure(&self) -> bool {
        self.permutation().is_identity()
    }

    /// `(p, q)` when the word is literally `(1 2 … q−1)^p`.
    pub fn torus_shape(&self) -> Option<(u32, u32)> {
        let q = self.strands;
        if q < 2 || self.letters.is_empty() || self.letters.len() % (q as usize - 1) != 0 {
            return None;
        }
        let period = q as usize - 1;
        self.letters
            .iter()
            .enumerate()
            .all(|(k, &l)| l as usize == k % period + 1)
            .then_some(((self.letters.len() / period) as u32, q))
    }

    /// Labels every crossing by walking the word left to right.
    pub fn crossings(&self) -> CrossingTable {
        let sigma = self.permutation();
        let torus = self.torus_shape();
        let mut rows: Vec<u32> = (1..=self.strands).collect();
        let mut seen: HashMap<(u32, u32), u32> = HashMap::new();
        let mut crossings = Vec::with_capacity(self.letters.len());
        for (k, (&m, &id)) in self.letters.iter().zip(&self.ids).enumerate() {
            let over = rows[m as usize - 1];
            let under = rows[m as usize];
            let (i, j) = (over, sigma.apply(under));
            let t = seen.entry((i, j)).or_insert(0);
            *t += 1;
            let torus_coords = torus.map(|(_, q)| TorusCoord {
                m: (k % (q as usize - 1)) as u32 + 1,
                n: (k / (q as usize - 1)) as u32 + 1,
            });
            crossings.push(Crossing {
                id,
                position: k + 1,
                row: m,
                label: Label { i, j, t: *t },
                torus: torus_coords,
            });
            rows.swap(m as usize - 1, m as usize);
        }
        CrossingTable::new(crossings, self.strands)
    }

    pub fn closure_invariants(&self) -> ClosureInvariants {
        let components = self.permutation().cycles().len();
        ClosureInvariants {
            tb: self.letters.len() as i64 - self.strands as i64,
            rotation: 0,
            components,
            maslov: vec![0; components],
        }
    }

    /// Moves the first letter to the end; identities travel with their letters.
    pub fn conjugate_shift(&self) -> Result<BraidWord> {
        if self.letters.is_empty() {
            return Err(Error::EmptyWord);
        }
        let mut letters = self.letters.clone();
        let mut ids = self.ids.clone();
        letters.rotate_left(1);
        ids.rotate_left(1);
        Ok(BraidWord {
            strands: self.strands,
            letters,
            ids,
        })
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let word: Vec<String> = self.letters.iter().map(u32::to_string).collect();
        write!(f, "q={} [{}]", self.strands, word.join(","))
    }
}

/// A permutation of `1..=q`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(q: u32) -> Self {
        Permutation {
            images: (1..=q).collect(),
        }
    }

    /// `images[k]` is the image of `k + 1`.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let q = images.len();
        let mut hit = vec![false; q];
        for &v in &images {
            if v < 1 || v as usize > q || std::mem::replace(&mut hit[v as usize - 1], true) {
                return Err(Error::Precondition(format!(
                    "{images:?} is not a permutation of 1..={q}"
                )));
            }
        }
        Ok(Permutation { images })
    }

    /// `i ↦ ((i − p − 1) mod q) + 1`, the permutation of the `(p, q)` torus braid.
    pub fn torus(p: u32, q: u32) -> Self {
        let (p, q) = (p as i64, q as i64);
        Permutation {
            images: (1..=q)
                .map(|i| ((i - p - 1).rem_euclid(q) + 1) as u32)
                .collect(),
        }
    }

    pub fn size(&self) -> u32 {
        self.images.len() as u32
    }

    pub fn apply(&self, i: u32) -> u32 {
        self.images[i as usize - 1]
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.images.len()];
        for (k, &v) in self.images.iter().enumerate() {
            inv[v as usize - 1] = k as u32 + 1;
        }
        Permutation { images: inv }
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(k, &v)| v as usize == k + 1)
    }

    /// Cycles in σ-order, each starting at its smallest element, sorted by
    /// that element.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.images.len()];
        let mut out = Vec::new();
        for start in 1..=self.size() {
            if seen[start as usize - 1] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut v = start;
            while !seen[v as usize - 1] {
                seen[v as usize - 1] = true;
                cycle.push(v);
                v = self.apply(v);
            }
            out.push(cycle);
        }
        out
    }

    /// Maps each element to the index of its cycle in [`Permutation::cycles`].
    pub fn cycle_index(&self) -> Vec<usize> {
        let mut idx = vec![0; self.images.len()];
        for (c, cycle) in self.cycles().iter().enumerate() {
            for &v in cycle {
                idx[v as usize - 1] = c;
            }
        }
        idx
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for cycle in self.cycles() {
            let parts: Vec<String> = cycle.iter().map(u32::to_string).collect();
            write!(f, "({})", parts.join(" "))?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Label {
    pub i: u32,
    pub j: u32,
    pub t: u32,
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.i, self.j, self.t)
    }
}

/// Position `m` from the top inside period `n` of a standard torus word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct TorusCoord {
    pub m: u32,
    pub n: u32,
}

impl fmt::Display for TorusCoord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "b[{},{}]", self.m, self.n)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Crossing {
    pub id: GenId,
    /// 1-based position in the word.
    pub position: usize,
    /// The letter: rows `row` and `row + 1` cross.
    pub row: u32,
    pub label: Label,
    pub torus: Option<TorusCoord>,
}

/// Labelled crossings of one braid word, indexed by position and identity.
#[derive(Debug, Clone)]
pub struct CrossingTable {
    crossings: Vec<Crossing>,
    by_id: BTreeMap<GenId, usize>,
    by_label: HashMap<Label, usize>,
    strands: u32,
}

impl CrossingTable {
    fn new(crossings: Vec<Crossing>, strands: u32) -> Self {
        let by_id = crossings.iter().enumerate().map(|(k, c)| (c.id, k)).collect();
        let by_label = crossings
            .iter()
            .enumerate()
            .map(|(k, c)| (c.label, k))
            .collect();
        CrossingTable {
            crossings,
            by_id,
            by_label,
            strands,
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = &Crossing> {
        self.crossings.iter()
    }

    pub fn len(&self) -> usize {
        self.crossings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.crossings.is_empty()
    }

    pub fn strands(&self) -> u32 {
        self.strands
    }

    /// Crossing at 1-based `position`.
    pub fn at(&self, position: usize) -> Option<&Crossing> {
        position.checked_sub(1).and_then(|k| self.crossings.get(k))
    }

    pub fn by_id(&self, id: GenId) -> Option<&Crossing> {
        self.by_id.get(&id).map(|&k| &self.crossings[k])
    }

    pub fn by_label(&self, label: Label) -> Option<&Crossing> {
        self.by_label.get(&label).map(|&k| &self.crossings[k])
    }

    pub fn by_torus(&self, coord: TorusCoord) -> Option<&Crossing> {
        self.crossings.iter().find(|c| c.torus == Some(coord))
    }

    /// All crossings whose first two labels are `(i, j)`, in word order.
    pub fn with_labels(&self, i: u32, j: u32) -> impl Iterator<Item = &Crossing> {
        self.crossings
            .iter()
            .filter(move |c| c.label.i == i && c.label.j == j)
    }

    pub fn ids(&self) -> impl Iterator<Item = GenId> + '_ {
        self.crossings.iter().map(|c| c.id)
    }

    /// The `(i,j,t)` string form of a crossing generator.
    pub fn name(&self, id: GenId) -> Option<String> {
        self.by_id(id).map(|c| c.label.to_string())
    }

    /// Accepts `(i,j,t)`, and `b[m,n]` when the word is a torus word.
    pub fn resolve(&self, name: &str) -> Option<GenId> {
        let name: String = name.chars().filter(|c| !c.is_whitespace()).collect();
        if let Some(inner) = name.strip_prefix('(').and_then(|s| s.strip_suffix(')')) {
            let parts: Vec<u32> = inner.split(',').map(str::parse).collect::<Result<_, _>>().ok()?;
            if let [i, j, t] = parts[..] {
                return self.by_label(Label { i, j, t }).map(|c| c.id);
            }
            return None;
        }
        if let Some(inner) = name.strip_prefix("b[").and_then(|s| s.strip_suffix(']')) {
            let parts: Vec<u32> = inner.split(',').map(str::parse).collect::<Result<_, _>>().ok()?;
            if let [m, n] = parts[..] {
                return self.by_torus(TorusCoord { m, n }).map(|c| c.id);
            }
        }
        None
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosureInvariants {
    pub tb: i64,
    pub rotation: i64,
    pub components: usize,
    pub maslov: Vec<i64>,
}
