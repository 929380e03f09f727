use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;
use std::sync::Arc;

use super::ring::{Gf2, Ring};
use super::word::{GenId, Word};
use crate::error::{Error, Result};

/// A polynomial over GF(2) in non-commuting generators.
///
/// Stored as the sorted set of words with coefficient 1. Values are
/// immutable; every operation returns a fresh polynomial.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    terms: Arc<[Word]>,
}

/// Accumulates words with mod-2 cancellation.
#[derive(Default)]
struct Toggle(HashSet<Word>);

impl Toggle {
    fn flip(&mut self, w: Word) {
        if !self.0.insert(w.clone()) {
            self.0.remove(&w);
        }
    }

    fn finish(self) -> Poly {
        let mut terms: Vec<Word> = self.0.into_iter().collect();
        terms.sort_unstable();
        Poly {
            terms: terms.into(),
        }
    }
}

impl Poly {
    pub fn zero() -> Self {
        Poly {
            terms: Arc::from(Vec::new()),
        }
    }

    pub fn one() -> Self {
        Poly::from_word(Word::unit())
    }

    pub fn gen(g: GenId) -> Self {
        Poly::from_word(Word::single(g))
    }

    pub fn from_word(w: Word) -> Self {
        Poly {
            terms: Arc::from(vec![w]),
        }
    }

    /// Builds the mod-2 sum of the given words; repeated words cancel in pairs.
    pub fn from_words<I: IntoIterator<Item = Word>>(words: I) -> Self {
        let mut acc = Toggle::default();
        for w in words {
            acc.flip(w);
        }
        acc.finish()
    }

    /// Convenience constructor from letter slices.
    pub fn from_letters<'a, I: IntoIterator<Item = &'a [GenId]>>(terms: I) -> Self {
        Poly::from_words(terms.into_iter().map(Word::new))
    }

    pub fn terms(&self) -> &[Word] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].is_unit()
    }

    /// Coefficient of the empty word.
    pub fn constant_term(&self) -> Gf2 {
        // canonical order puts the unit word first
        Gf2(self.terms.first().is_some_and(Word::is_unit))
    }

    pub fn contains_word(&self, w: &Word) -> bool {
        self.terms.binary_search(w).is_ok()
    }

    pub fn degree(&self) -> Option<usize> {
        self.terms.last().map(Word::len)
    }

    pub fn generators(&self) -> BTreeSet<GenId> {
        self.terms
            .iter()
            .flat_map(|w| w.letters().iter().copied())
            .collect()
    }

    pub fn mentions(&self, g: GenId) -> bool {
        self.terms.iter().any(|w| w.contains(g))
    }

    pub fn add(&self, other: &Poly) -> Poly {
        // merge of two sorted term lists, dropping common words
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[j].clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Poly { terms: out.into() }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        if self.is_one() {
            return other.clone();
        }
        if other.is_one() {
            return self.clone();
        }
        let mut acc = Toggle::default();
        for u in self.terms.iter() {
            for v in other.terms.iter() {
                acc.flip(u.concat(v));
            }
        }
        acc.finish()
    }

    /// Applies the unital algebra morphism determined by `phi` on generators.
    pub fn substitute_with<F>(&self, phi: F) -> Result<Poly>
    where
        F: Fn(GenId) -> Option<Poly>,
    {
        let images: BTreeMap<GenId, Poly> = self
            .generators()
            .into_iter()
            .map(|g| phi(g).map(|p| (g, p)).ok_or(Error::MissingGenerator(g)))
            .collect::<Result<_>>()?;
        self.substitute_ref(|g| images.get(&g))
    }

    /// As [`Poly::substitute_with`], borrowing the images.
    pub fn substitute_ref<'a, F>(&self, phi: F) -> Result<Poly>
    where
        F: Fn(GenId) -> Option<&'a Poly>,
    {
        let mut acc = Toggle::default();
        for w in self.terms.iter() {
            let mut partial = vec![Word::unit()];
            for &g in w.letters() {
                let image = phi(g).ok_or(Error::MissingGenerator(g))?;
                if image.is_zero() {
                    partial.clear();
                    break;
                }
                partial = if image.len() == 1 {
                    let tail = &image.terms[0];
                    partial.iter().map(|u| u.concat(tail)).collect()
                } else {
                    let mut next = Toggle::default();
                    for u in &partial {
                        for v in image.terms.iter() {
                            next.flip(u.concat(v));
                        }
                    }
                    next.0.into_iter().collect()
                };
            }
            for u in partial {
                acc.flip(u);
            }
        }
        Ok(acc.finish())
    }

    /// Extends `d` from generators by the Leibniz rule (no signs mod 2):
    /// `d(uv) = d(u)v + u d(v)`.
    pub fn derivation_with<F>(&self, d: F) -> Result<Poly>
    where
        F: Fn(GenId) -> Option<Poly>,
    {
        let mut acc = Toggle::default();
        for w in self.terms.iter() {
            let letters = w.letters();
            for (k, &g) in letters.iter().enumerate() {
                let dg = d(g).ok_or(Error::MissingGenerator(g))?;
                if dg.is_zero() {
                    continue;
                }
                let prefix = Word::new(&letters[..k]);
                let suffix = Word::new(&letters[k + 1..]);
                for mid in dg.terms.iter() {
                    acc.flip(prefix.concat(mid).concat(&suffix));
                }
            }
        }
        Ok(acc.finish())
    }

    /// Evaluates in any coefficient ring, given values on the generators.
    pub fn eval_in<R, F>(&self, value: F) -> Result<R>
    where
        R: Ring,
        F: Fn(GenId) -> Option<R>,
    {
        let mut sum = R::zero();
        for w in self.terms.iter() {
            let mut prod = R::one();
            for &g in w.letters() {
                prod = prod.mul(&value(g).ok_or(Error::MissingGenerator(g))?);
            }
            sum = sum.add(&prod);
        }
        Ok(sum)
    }

    /// GF(2) value under the ring map sending each generator to `eps(g)`.
    pub fn evaluate<F>(&self, eps: F) -> Result<Gf2>
    where
        F: Fn(GenId) -> Option<Gf2>,
    {
        let mut parity = false;
        for w in self.terms.iter() {
            let mut all_one = true;
            for &g in w.letters() {
                if !eps(g).ok_or(Error::MissingGenerator(g))?.0 {
                    all_one = false;
                }
            }
            parity ^= all_one;
        }
        Ok(Gf2(parity))
    }

    /// Renders with caller-supplied generator names, e.g. `1 + x1*x2`.
    pub fn render_with<F: Fn(GenId) -> String>(&self, name: F) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.terms
            .iter()
            .map(|w| {
                if w.is_unit() {
                    "1".to_string()
                } else {
                    w.letters()
                        .iter()
                        .map(|&g| name(g))
                        .collect::<Vec<_>>()
                        .join("*")
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }

    /// Inverse of [`Poly::render_with`]: terms separated by `+`, factors by `*`.
    pub fn parse_with<F: Fn(&str) -> Option<GenId>>(text: &str, resolve: F) -> Result<Poly> {
        let text = text.trim();
        if text == "0" || text.is_empty() {
            return Ok(Poly::zero());
        }
        let mut words = Vec::new();
        for term in split_top_level(text, '+') {
            let term = term.trim();
            if term == "1" {
                words.push(Word::unit());
                continue;
            }
            let mut letters = Vec::new();
            for factor in split_top_level(term, '*') {
                let factor = factor.trim();
                let g = resolve(factor).ok_or_else(|| Error::UnknownGenerator(factor.to_string()))?;
                letters.push(g);
            }
            words.push(Word::new(&letters));
        }
        Ok(Poly::from_words(words))
    }
}

/// Splits on `sep` outside parentheses and brackets, so names like
/// `(1,2,1)` or `b[1,2]` survive.
fn split_top_level(s: &str, sep: char) -> Vec<&str> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            c if c == sep && depth == 0 => {
                parts.push(&s[start..i]);
                start = i + c.len_utf8();
            }
            _ => {}
        }
    }
    parts.push(&s[start..]);
    parts
}

impl Ring for Poly {
    fn zero() -> Self {
        Poly::zero()
    }
    fn one() -> Self {
        Poly::one()
    }
    fn add(&self, other: &Self) -> Self {
        Poly::add(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        Poly::mul(self, other)
    }
    fn is_zero(&self) -> bool {
        Poly::is_zero(self)
    }
}

impl Default for Poly {
    fn default() -> Self {
        Poly::zero()
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_with(|g| g.to_string()))
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_with(|g| g.to_string()))
    }
}

impl std::ops::Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        Poly::add(self, rhs)
    }
}

impl std::ops::Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        Poly::mul(self, rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(n: u32) -> GenId {
        GenId(n - 1)
    }

    fn p(text: &str) -> Poly {
        Poly::parse_with(text, |s| s.strip_prefix('x')?.parse::<u32>().ok().map(x)).unwrap()
    }

    #[test]
    fn add_cancels_mod_two() {
        assert_eq!(&p("x1 + x2") + &p("x2 + x3"), p("x1 + x3"));
        assert_eq!(&p("x1 + x2") + &Poly::zero(), p("x1 + x2"));
        assert!((&p("1 + x1*x2") + &p("1 + x1*x2")).is_zero());
    }

    #[test]
    fn mul_expands_without_commuting() {
        assert_eq!(&p("1 + x1") * &p("x2"), p("x2 + x1*x2"));
        let ab = &p("x1") * &p("x2");
        let ba = &p("x2") * &p("x1");
        assert_ne!(ab, ba);
        assert_eq!(ab.len(), 1);
        assert_eq!(
            &p("1 + x2*x3") * &p("1 + x1*x2"),
            p("1 + x1*x2 + x2*x3 + x2*x3*x1*x2")
        );
    }

    #[test]
    fn substitute_examples() {
        let phi = |g: GenId| match g.0 {
            0 => Some(p("x2*x3")),
            1 => Some(Poly::one()),
            _ => None,
        };
        assert_eq!(p("x1*x2").substitute_with(phi).unwrap(), p("x2*x3"));
        assert_eq!(Poly::one().substitute_with(|_| None).unwrap(), Poly::one());
        let trefoil = |g: GenId| match g.0 {
            0 => Some(Poly::one()),
            _ => Some(Poly::zero()),
        };
        assert!(p("1 + x1 + x3 + x1*x2*x3")
            .substitute_with(trefoil)
            .unwrap()
            .is_zero());
    }

    #[test]
    fn substitute_reports_missing_generator() {
        let err = p("x1*x4").substitute_with(|g| (g.0 == 0).then(Poly::one));
        assert!(matches!(err, Err(Error::MissingGenerator(GenId(3)))));
    }

    #[test]
    fn evaluate_examples() {
        let eps = |g: GenId| Some(Gf2(g.0 == 0));
        assert_eq!(p("1 + x1*x2").evaluate(eps).unwrap(), Gf2::ONE);
        assert_eq!(Poly::zero().evaluate(|_| None).unwrap(), Gf2::ZERO);
        assert_eq!(
            p("x2 + x1*x2 + x2*x3 + x2*x3*x1*x2").evaluate(eps).unwrap(),
            Gf2::ZERO
        );
        assert!(p("x5").evaluate(eps.clone()).is_ok());
        assert!(p("x5").evaluate(|g| (g.0 == 0).then_some(Gf2::ONE)).is_err());
    }

    #[test]
    fn constant_term_and_degree() {
        assert_eq!(p("1 + x1").constant_term(), Gf2::ONE);
        assert_eq!(p("x1 + x1*x2").constant_term(), Gf2::ZERO);
        assert_eq!(p("x1 + x1*x2*x2").degree(), Some(3));
        assert_eq!(Poly::zero().degree(), None);
    }

    #[test]
    fn render_parse_round_trip() {
        let q = p("1 + x3 + x2*x1 + x1*x1*x2");
        let text = q.render_with(|g| format!("x{}", g.0 + 1));
        assert_eq!(text, "1 + x3 + x2*x1 + x1*x1*x2");
        assert_eq!(p(&text), q);
    }

    #[test]
    fn parse_keeps_bracketed_names() {
        let names = ["(1,1,1)", "b[1,2]"];
        let q = Poly::parse_with("(1,1,1)*b[1,2] + 1", |s| {
            names.iter().position(|n| *n == s).map(|i| GenId(i as u32))
        })
        .unwrap();
        assert_eq!(q, Poly::from_letters([&[][..], &[GenId(0), GenId(1)][..]]));
    }
}
