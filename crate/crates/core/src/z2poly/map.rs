use std::collections::BTreeMap;

use super::poly::Poly;
use super::word::GenId;
use crate::error::{Error, Result};

/// An algebra morphism given by the images of generators.
///
/// Applying it to a polynomial means substituting every generator by its
/// image; generators outside the domain are an error.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GeneratorMap {
    images: BTreeMap<GenId, Poly>,
}

impl GeneratorMap {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn identity<I: IntoIterator<Item = GenId>>(gens: I) -> Self {
        gens.into_iter().map(|g| (g, Poly::gen(g))).collect()
    }

    /// Sends each `g` to the generator `rename(g)`.
    pub fn renaming<I, F>(gens: I, rename: F) -> Self
    where
        I: IntoIterator<Item = GenId>,
        F: Fn(GenId) -> GenId,
    {
        gens.into_iter().map(|g| (g, Poly::gen(rename(g)))).collect()
    }

    pub fn insert(&mut self, g: GenId, image: Poly) -> Option<Poly> {
        self.images.insert(g, image)
    }

    pub fn get(&self, g: GenId) -> Option<&Poly> {
        self.images.get(&g)
    }

    pub fn image(&self, g: GenId) -> Result<&Poly> {
        self.images.get(&g).ok_or(Error::MissingGenerator(g))
    }

    pub fn domain(&self) -> impl Iterator<Item = GenId> + '_ {
        self.images.keys().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (GenId, &Poly)> {
        self.images.iter().map(|(g, p)| (*g, p))
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn apply(&self, p: &Poly) -> Result<Poly> {
        p.substitute_ref(|g| self.images.get(&g))
    }

    /// `self` followed by `next`: `g ↦ next(self(g))`.
    pub fn then(&self, next: &GeneratorMap) -> Result<GeneratorMap> {
        self.images
            .iter()
            .map(|(g, p)| Ok((*g, next.apply(p)?)))
            .collect()
    }

    /// True if every generator is sent to itself.
    pub fn is_identity(&self) -> bool {
        self.images.iter().all(|(g, p)| *p == Poly::gen(*g))
    }
}

impl FromIterator<(GenId, Poly)> for GeneratorMap {
    fn from_iter<T: IntoIterator<Item = (GenId, Poly)>>(iter: T) -> Self {
        GeneratorMap {
            images: iter.into_iter().collect(),
        }
    }
}
