//! Generator identifiers and hash-consed monomials.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, OnceLock};

use dashmap::DashMap;

/// Opaque identifier of one free generator.
///
/// The integer is only meaningful relative to the alphabet or braid that
/// handed it out; ordering is used for canonical term order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GenId(pub u32);

impl GenId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for GenId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x{}", self.0 + 1)
    }
}

fn interner() -> &'static DashMap<Arc<[GenId]>, ()> {
    static TABLE: OnceLock<DashMap<Arc<[GenId]>, ()>> = OnceLock::new();
    TABLE.get_or_init(DashMap::new)
}

fn intern(letters: &[GenId]) -> Arc<[GenId]> {
    let table = interner();
    if let Some(entry) = table.get(letters) {
        return entry.key().clone();
    }
    table
        .entry(Arc::from(letters))
        .or_insert(())
        .key()
        .clone()
}

/// A monomial: a finite product of generators, in order.
///
/// Words are interned in a process-wide append-only table, so two words with
/// the same letters share one allocation; equality and hashing only look at
/// the pointer.
#[derive(Clone)]
pub struct Word(Arc<[GenId]>);

impl Word {
    pub fn new(letters: &[GenId]) -> Self {
        Word(intern(letters))
    }

    /// The empty word, i.e. the monomial 1.
    pub fn unit() -> Self {
        static UNIT: OnceLock<Word> = OnceLock::new();
        UNIT.get_or_init(|| Word::new(&[])).clone()
    }

    pub fn single(g: GenId) -> Self {
        Word::new(&[g])
    }

    pub fn letters(&self) -> &[GenId] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_unit(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        if self.is_unit() {
            return other.clone();
        }
        if other.is_unit() {
            return self.clone();
        }
        let mut buf = Vec::with_capacity(self.len() + other.len());
        buf.extend_from_slice(&self.0);
        buf.extend_from_slice(&other.0);
        Word::new(&buf)
    }

    pub fn contains(&self, g: GenId) -> bool {
        self.0.contains(&g)
    }
}

impl PartialEq for Word {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
    }
}

impl Eq for Word {}

impl Hash for Word {
    fn hash<H: Hasher>(&self, state: &mut H) {
        (Arc::as_ptr(&self.0) as *const GenId as usize).hash(state);
    }
}

/// Canonical order: shorter words first, then lexicographic on `GenId`.
impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        if self == other {
            return Ordering::Equal;
        }
        self.len()
            .cmp(&other.len())
            .then_with(|| self.0.iter().cmp(other.0.iter()))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return f.write_str("1");
        }
        for g in self.0.iter() {
            write!(f, "{g}")?;
        }
        Ok(())
    }
}
