//! `{"terms": [[gen, ...], ...]}` encoding of polynomials.
//!
//! The empty inner list is the constant 1; a missing or empty `terms` array
//! is 0. Terms are written in canonical order.

use serde::{Deserialize, Serialize};

use super::poly::Poly;
use super::word::{GenId, Word};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize, Default)]
pub struct PolyJson {
    #[serde(default)]
    pub terms: Vec<Vec<String>>,
}

impl PolyJson {
    pub fn from_poly<F: Fn(GenId) -> String>(p: &Poly, name: F) -> Self {
        PolyJson {
            terms: p
                .terms()
                .iter()
                .map(|w| w.letters().iter().map(|&g| name(g)).collect())
                .collect(),
        }
    }

    pub fn to_poly<F: Fn(&str) -> Option<GenId>>(&self, resolve: F) -> Result<Poly> {
        let mut words = Vec::with_capacity(self.terms.len());
        for term in &self.terms {
            let letters = term
                .iter()
                .map(|s| resolve(s).ok_or_else(|| Error::UnknownGenerator(s.clone())))
                .collect::<Result<Vec<_>>>()?;
            words.push(Word::new(&letters));
        }
        Ok(Poly::from_words(words))
    }
}

pub fn poly_to_json<F: Fn(GenId) -> String>(p: &Poly, name: F) -> serde_json::Value {
    serde_json::to_value(PolyJson::from_poly(p, name)).expect("plain struct serializes")
}

pub fn poly_from_json<F: Fn(&str) -> Option<GenId>>(
    value: &serde_json::Value,
    resolve: F,
) -> Result<Poly> {
    let parsed: PolyJson =
        serde_json::from_value(value.clone()).map_err(|e| Error::Json(e.to_string()))?;
    parsed.to_poly(resolve)
}
