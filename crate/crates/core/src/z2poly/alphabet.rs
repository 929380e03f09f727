use std::collections::HashMap;

use super::word::GenId;

/// A name table for generators of an abstract presentation.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Alphabet {
    names: Vec<String>,
    index: HashMap<String, GenId>,
}

impl Alphabet {
    pub fn new() -> Self {
        Self::default()
    }

    /// Returns the id of `name`, registering it on first use.
    pub fn intern(&mut self, name: &str) -> GenId {
        if let Some(&g) = self.index.get(name) {
            return g;
        }
        let g = GenId(self.names.len() as u32);
        self.names.push(name.to_string());
        self.index.insert(name.to_string(), g);
        g
    }

    pub fn resolve(&self, name: &str) -> Option<GenId> {
        self.index.get(name).copied()
    }

    pub fn name(&self, g: GenId) -> Option<&str> {
        self.names.get(g.index()).map(String::as_str)
    }

    /// Name for display; unknown ids fall back to the default `x<n>` form.
    pub fn display(&self, g: GenId) -> String {
        self.name(g).map_or_else(|| g.to_string(), str::to_string)
    }

    pub fn gens(&self) -> impl Iterator<Item = GenId> + '_ {
        (0..self.names.len() as u32).map(GenId)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }
}
