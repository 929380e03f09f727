//! Degree-0 presentation of the Chekanov–Eliashberg algebra of a positive
//! braid closure.
//!
//! Generators are the braid crossings (index 0) and one index-1 generator
//! `a_m` per strand, with `∂(a_m) = 1 + C(m,m)` and `∂ = 0` on crossings.

mod admissible;
mod cm;
pub mod oracle;
mod paths;

use std::collections::BTreeMap;

use serde_json::{json, Map, Value};

pub use admissible::{count_d, enumerate_d, is_admissible, DEFAULT_MAX_ENUMERATION};
pub use cm::{c_last_row, m_entry, CmTables};
pub use paths::{enumerate_paths_oracle, path_matrix, path_polys, Matrix, DEFAULT_MAX_ORACLE_WORD};

use crate::braid::{BraidWord, CrossingTable};
use crate::error::{Error, Result};
use crate::z2poly::{poly_to_json, GenId, Poly};

#[derive(Debug, Clone)]
pub struct DgaPresentation {
    braid: BraidWord,
    crossings: CrossingTable,
    index_one: Vec<GenId>,
    differential: BTreeMap<GenId, Poly>,
    tables: CmTables<Poly>,
}

/// Builds the full presentation of `b`.
pub fn differential(b: &BraidWord) -> DgaPresentation {
    let tables = CmTables::symbolic(b);
    let crossings = b.crossings();
    let w = b.len() as u32;
    let index_one: Vec<GenId> = (0..b.strands()).map(|m| GenId(w + m)).collect();
    let mut differential = BTreeMap::new();
    for id in crossings.ids() {
        differential.insert(id, Poly::zero());
    }
    for (m, &a) in index_one.iter().enumerate() {
        differential.insert(a, tables.boundary(m + 1));
    }
    DgaPresentation {
        braid: b.clone(),
        crossings,
        index_one,
        differential,
        tables,
    }
}

impl DgaPresentation {
    pub fn braid(&self) -> &BraidWord {
        &self.braid
    }

    pub fn crossings(&self) -> &CrossingTable {
        &self.crossings
    }

    pub fn tables(&self) -> &CmTables<Poly> {
        &self.tables
    }

    /// Generator `a_m`, `m` 1-based.
    pub fn a(&self, m: usize) -> GenId {
        self.index_one[m - 1]
    }

    pub fn index_one(&self) -> &[GenId] {
        &self.index_one
    }

    pub fn grading(&self, g: GenId) -> Option<i64> {
        if self.index_one.contains(&g) {
            Some(1)
        } else if self.crossings.by_id(g).is_some() {
            Some(0)
        } else {
            None
        }
    }

    pub fn boundary(&self, g: GenId) -> Result<&Poly> {
        self.differential.get(&g).ok_or(Error::MissingGenerator(g))
    }

    /// `∂(a_m)`.
    pub fn boundary_of_a(&self, m: usize) -> &Poly {
        &self.differential[&self.a(m)]
    }

    pub fn generators(&self) -> impl Iterator<Item = GenId> + '_ {
        self.index_one.iter().copied().chain(self.crossings.ids())
    }

    /// Extends `∂` to any polynomial by the Leibniz rule.
    pub fn apply(&self, p: &Poly) -> Result<Poly> {
        p.derivation_with(|g| self.differential.get(&g).cloned())
    }

    /// Checks `∂∘∂ = 0` on every generator.
    pub fn d_squared_vanishes(&self) -> Result<bool> {
        for p in self.differential.values() {
            if !self.apply(p)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn name(&self, g: GenId) -> String {
        if let Some(m) = self.index_one.iter().position(|&a| a == g) {
            return format!("a{}", m + 1);
        }
        self.crossings.name(g).unwrap_or_else(|| g.to_string())
    }

    pub fn resolve(&self, name: &str) -> Option<GenId> {
        if let Some(m) = name.strip_prefix('a').and_then(|s| s.parse::<usize>().ok()) {
            return self.index_one.get(m.checked_sub(1)?).copied();
        }
        self.crossings.resolve(name)
    }

    pub fn render(&self, p: &Poly) -> String {
        p.render_with(|g| self.name(g))
    }

    /// `{generators, gradings, differential}` with polynomials in the
    /// `{"terms": …}` form.
    pub fn to_json(&self) -> Value {
        let generators: Vec<String> = self.generators().map(|g| self.name(g)).collect();
        let mut gradings = Map::new();
        let mut diff = Map::new();
        for g in self.generators() {
            gradings.insert(self.name(g), json!(self.grading(g)));
            diff.insert(self.name(g), poly_to_json(&self.differential[&g], |h| self.name(h)));
        }
        json!({
            "strands": self.braid.strands(),
            "word": self.braid.letters(),
            "generators": generators,
            "gradings": gradings,
            "differential": diff,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::z2poly::poly_from_json;

    #[test]
    fn trefoil_differential_matches_known_values() {
        let d = differential(&BraidWord::torus(3, 2).unwrap());
        assert_eq!(d.render(d.boundary_of_a(1)), "1 + (1,1,1) + (1,1,2) + (1,1,1)*(2,2,1)*(1,1,2)");
        assert_eq!(
            d.render(d.boundary_of_a(2)),
            "(2,2,1) + (1,1,1)*(2,2,1) + (2,2,1)*(1,1,2) + (2,2,1)*(1,1,2)*(1,1,1)*(2,2,1)"
        );
        assert!(d.d_squared_vanishes().unwrap());
        assert_eq!(d.grading(d.a(2)), Some(1));
        assert_eq!(d.grading(GenId(0)), Some(0));
    }

    #[test]
    fn unknot_has_zero_differential() {
        let d = differential(&BraidWord::parse(1, "").unwrap());
        assert!(d.boundary_of_a(1).is_zero());
    }

    #[test]
    fn crossings_are_cycles() {
        let d = differential(&BraidWord::parse(3, "1,2,1,1").unwrap());
        for id in d.crossings().ids() {
            assert!(d.boundary(id).unwrap().is_zero());
        }
    }

    #[test]
    fn json_round_trips_differentials() {
        let d = differential(&BraidWord::torus(2, 3).unwrap());
        let v = d.to_json();
        for m in 1..=3 {
            let name = format!("a{m}");
            let parsed = poly_from_json(&v["differential"][&name], |s| d.resolve(s)).unwrap();
            assert_eq!(&parsed, d.boundary_of_a(m));
        }
        assert_eq!(v["gradings"]["a1"], 1);
        let first = d.name(d.crossings().at(1).unwrap().id);
        assert_eq!(first, "(1,3,1)");
        assert_eq!(v["gradings"][&first], 0);
    }
}
