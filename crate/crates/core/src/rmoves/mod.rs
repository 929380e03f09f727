//! Chain maps of the Legendrian Reidemeister moves on abstract DGA
//! presentations over GF(2).
//!
//! Each map is returned as the images of generators; it acts on polynomials
//! as an algebra morphism. Generators untouched by a move travel through a
//! caller-supplied [`Renaming`] `x ↦ x'`.

mod toy;

use std::collections::{BTreeMap, BTreeSet};

pub use toy::{all_toys, demo, toy_ii, toy_ii_inverse, toy_iii_a, toy_iii_b, MoveDemo, MovePair};

use crate::error::{Error, Result};
use crate::z2poly::{Alphabet, GenId, GeneratorMap, Gf2, Poly, Word};

/// A free DGA: named generators, optional gradings, and `∂` on generators.
#[derive(Debug, Clone, Default)]
pub struct AbstractDGA {
    alphabet: Alphabet,
    gradings: BTreeMap<GenId, i64>,
    /// Gradings are read modulo this when set (`ℤ_{2r}`).
    modulus: Option<i64>,
    differential: BTreeMap<GenId, Poly>,
}

impl AbstractDGA {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_modulus(mut self, modulus: i64) -> Self {
        self.modulus = (modulus > 0).then_some(modulus);
        self
    }

    /// Builds a presentation from `(name, grading, boundary)` triples; every
    /// name used in a boundary must be declared.
    pub fn from_spec(spec: &[(&str, i64, &str)]) -> Result<Self> {
        let mut d = AbstractDGA::new();
        for (name, grading, _) in spec {
            d.add_generator(name, Some(*grading));
        }
        for (name, _, boundary) in spec {
            d.set_boundary_str(name, boundary)?;
        }
        Ok(d)
    }

    pub fn add_generator(&mut self, name: &str, grading: Option<i64>) -> GenId {
        let g = self.alphabet.intern(name);
        if let Some(k) = grading {
            self.gradings.insert(g, k);
        }
        self.differential.entry(g).or_insert_with(Poly::zero);
        g
    }

    pub fn set_boundary(&mut self, g: GenId, p: Poly) -> Result<()> {
        if let Some(h) = p.generators().into_iter().find(|h| !self.contains(*h)) {
            return Err(Error::MissingGenerator(h));
        }
        let slot = self.differential.get_mut(&g).ok_or(Error::MissingGenerator(g))?;
        *slot = p;
        Ok(())
    }

    pub fn set_boundary_str(&mut self, name: &str, text: &str) -> Result<()> {
        let g = self.require(name)?;
        let p = self.parse(text)?;
        self.set_boundary(g, p)
    }

    pub fn parse(&self, text: &str) -> Result<Poly> {
        Poly::parse_with(text, |s| self.alphabet.resolve(s))
    }

    pub fn require(&self, name: &str) -> Result<GenId> {
        self.alphabet
            .resolve(name)
            .ok_or_else(|| Error::UnknownGenerator(name.to_string()))
    }

    pub fn contains(&self, g: GenId) -> bool {
        self.differential.contains_key(&g)
    }

    pub fn generators(&self) -> impl Iterator<Item = GenId> + '_ {
        self.differential.keys().copied()
    }

    pub fn name(&self, g: GenId) -> String {
        self.alphabet.display(g)
    }

    pub fn render(&self, p: &Poly) -> String {
        p.render_with(|g| self.name(g))
    }

    pub fn grading(&self, g: GenId) -> Option<i64> {
        self.gradings.get(&g).map(|&k| self.reduce(k))
    }

    fn reduce(&self, k: i64) -> i64 {
        match self.modulus {
            Some(r) => k.rem_euclid(r),
            None => k,
        }
    }

    pub fn boundary(&self, g: GenId) -> Result<&Poly> {
        self.differential.get(&g).ok_or(Error::MissingGenerator(g))
    }

    /// `∂` extended by the Leibniz rule.
    pub fn apply(&self, p: &Poly) -> Result<Poly> {
        p.derivation_with(|g| self.differential.get(&g).cloned())
    }

    pub fn d_squared_vanishes(&self) -> Result<bool> {
        for p in self.differential.values() {
            if !self.apply(p)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Checks that `∂` lowers the grading by one on every graded monomial.
    pub fn check_gradings(&self) -> Result<()> {
        for (&g, p) in &self.differential {
            let Some(k) = self.grading(g) else { continue };
            for w in p.terms() {
                let degrees: Option<i64> = w.letters().iter().map(|h| self.gradings.get(h)).sum();
                let Some(deg) = degrees else { continue };
                if self.reduce(deg) != self.reduce(k - 1) {
                    return Err(Error::Precondition(format!(
                        "∂{} has a term of degree {deg}, expected {}",
                        self.name(g),
                        k - 1
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Source generator ↦ target generator.
pub type Renaming = BTreeMap<GenId, GenId>;

/// Pairs every source generator outside `skip` with the target generator
/// named `name'`.
pub fn prime_renaming(source: &AbstractDGA, target: &AbstractDGA, skip: &[GenId]) -> Result<Renaming> {
    source
        .generators()
        .filter(|g| !skip.contains(g))
        .map(|g| Ok((g, target.require(&format!("{}'", source.name(g)))?)))
        .collect()
}

/// Checks that `renaming` is injective with domain exactly `from`.
fn check_bijective(renaming: &Renaming, from: &BTreeSet<GenId>) -> Result<()> {
    let domain: BTreeSet<GenId> = renaming.keys().copied().collect();
    if &domain != from {
        return Err(Error::NotBijective(format!(
            "renaming covers {} of {} generators",
            domain.intersection(from).count(),
            from.len()
        )));
    }
    let image: BTreeSet<GenId> = renaming.values().copied().collect();
    if image.len() != renaming.len() {
        return Err(Error::NotBijective("two generators share an image".into()));
    }
    Ok(())
}

fn all_but(d: &AbstractDGA, skip: &[GenId]) -> BTreeSet<GenId> {
    d.generators().filter(|g| !skip.contains(g)).collect()
}

fn renamed(renaming: &Renaming) -> GeneratorMap {
    renaming.iter().map(|(&g, &h)| (g, Poly::gen(h))).collect()
}

/// Move III_a: every generator is renamed.
pub fn map_iii_a(d: &AbstractDGA, renaming: &Renaming) -> Result<GeneratorMap> {
    check_bijective(renaming, &all_but(d, &[]))?;
    Ok(renamed(renaming))
}

/// Move III_b: `a ↦ a' + c'b'`, every other generator renamed.
pub fn map_iii_b(d: &AbstractDGA, a: GenId, b: GenId, c: GenId, renaming: &Renaming) -> Result<GeneratorMap> {
    if a == b || b == c || a == c {
        return Err(Error::CoincidentGenerators(format!(
            "{}, {}, {}",
            d.name(a),
            d.name(b),
            d.name(c)
        )));
    }
    check_bijective(renaming, &all_but(d, &[]))?;
    let mut map = renamed(renaming);
    let image = &Poly::gen(renaming[&a]) + &(&Poly::gen(renaming[&c]) * &Poly::gen(renaming[&b]));
    map.insert(a, image);
    Ok(map)
}

/// Splits `∂(a) = b + v`, checking that `v` involves neither `a` nor `b`.
pub fn vanishing_remainder(d: &AbstractDGA, a: GenId, b: GenId) -> Result<Poly> {
    if a == b {
        return Err(Error::CoincidentGenerators(d.name(a)));
    }
    let da = d.boundary(a)?;
    let single = Word::single(b);
    if !da.contains_word(&single) {
        return Err(Error::MissingMonomial(d.name(b)));
    }
    let v = da + &Poly::gen(b);
    if v.mentions(a) || v.mentions(b) {
        return Err(Error::VanishingPairInRemainder(d.render(&v)));
    }
    Ok(v)
}

/// Move II⁻¹: `a ↦ 0`, `b ↦ v'` where `∂(a) = b + v`, others renamed.
pub fn map_ii_inverse(d: &AbstractDGA, a: GenId, b: GenId, renaming: &Renaming) -> Result<GeneratorMap> {
    let v = vanishing_remainder(d, a, b)?;
    check_bijective(renaming, &all_but(d, &[a, b]))?;
    let mut map = renamed(renaming);
    map.insert(a, Poly::zero());
    map.insert(b, renamed(renaming).apply(&v)?);
    Ok(map)
}

/// The data of a Move II: the new pair `(a, b)` with `∂(a) = b + v`, the
/// crossings above `a` in increasing height and those below `b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MoveIIContext {
    pub a: GenId,
    pub b: GenId,
    pub v: Poly,
    /// `a_1, …, a_l` with `h(a_1) ≤ … ≤ h(a_l)`.
    pub above: Vec<GenId>,
    pub below: Vec<GenId>,
}

impl MoveIIContext {
    pub fn new(d: &AbstractDGA, a: GenId, b: GenId, above: Vec<GenId>, below: Vec<GenId>) -> Result<Self> {
        let v = vanishing_remainder(d, a, b)?;
        let mut seen = BTreeSet::from([a, b]);
        for &g in above.iter().chain(&below) {
            if !d.contains(g) {
                return Err(Error::MissingGenerator(g));
            }
            if !seen.insert(g) {
                return Err(Error::CoincidentGenerators(d.name(g)));
            }
        }
        Ok(MoveIIContext { a, b, v, above, below })
    }
}

/// One monomial `B₁ b B₂ b … B_k b A` of `∂(a_i)`.
struct Decomposition<'w> {
    blocks: Vec<&'w [GenId]>,
    tail: &'w [GenId],
}

/// `A` starts right after the last `b` preceding the first `a` (after the
/// last `b` when `a` does not occur).
fn decompose<'w>(w: &'w [GenId], a: GenId, b: GenId) -> Decomposition<'w> {
    let first_a = w.iter().position(|&g| g == a).unwrap_or(w.len());
    let Some(last_b) = w[..first_a].iter().rposition(|&g| g == b) else {
        return Decomposition {
            blocks: Vec::new(),
            tail: w,
        };
    };
    Decomposition {
        blocks: w[..last_b].split(|&g| g == b).collect(),
        tail: &w[last_b + 1..],
    }
}

/// Move II: `φ(x') = x` below the pair, and for `a_i` above it
///
/// ```text
/// φ(a_i') = a_i + Σ_t B̄₁ v B̄₂ v … B̄_t a B_{t+1} b … B_k b A
/// ```
///
/// summed over the monomials of `∂(a_i)`, where `B̄` substitutes the already
/// computed `φ(a_j')`, `j < i`. `renaming` pairs source generators other than
/// `a`, `b` with the target ones; the returned map is keyed by the latter.
pub fn map_ii(d: &AbstractDGA, ctx: &MoveIIContext, renaming: &Renaming) -> Result<GeneratorMap> {
    let (a, b) = (ctx.a, ctx.b);
    check_bijective(renaming, &all_but(d, &[a, b]))?;
    // images of processed a_j in the source algebra
    let mut bar = GeneratorMap::new();
    let mut allowed: BTreeSet<GenId> = ctx.below.iter().copied().collect();
    for (&g, _) in renaming.iter().filter(|(g, _)| !ctx.above.contains(g)) {
        bar.insert(g, Poly::gen(g));
    }
    for &ai in &ctx.above {
        let mut image = Poly::gen(ai);
        for w in d.boundary(ai)?.terms() {
            let dec = decompose(w.letters(), a, b);
            if let Some(bad) = dec.blocks.iter().flat_map(|blk| blk.iter()).find(|g| !allowed.contains(g)) {
                return Err(Error::MalformedMonomial(format!(
                    "{} in ∂{}: {} is neither below the pair nor an earlier a_j",
                    d.render(&Poly::from_word(w.clone())),
                    d.name(ai),
                    d.name(*bad)
                )));
            }
            let plain: Vec<Poly> = dec.blocks.iter().map(|blk| Poly::from_letters([*blk])).collect();
            let barred: Vec<Poly> = plain.iter().map(|p| bar.apply(p)).collect::<Result<_>>()?;
            let tail = Poly::from_letters([dec.tail]);
            let k = plain.len();
            for t in 0..k {
                let mut term = Poly::one();
                for s in 0..k {
                    let (factor, sep) = match s.cmp(&t) {
                        std::cmp::Ordering::Less => (&barred[s], &ctx.v),
                        std::cmp::Ordering::Equal => (&barred[s], &Poly::gen(a)),
                        std::cmp::Ordering::Greater => (&plain[s], &Poly::gen(b)),
                    };
                    term = &(&term * factor) * sep;
                }
                image = &image + &(&term * &tail);
            }
        }
        bar.insert(ai, image);
        allowed.insert(ai);
    }
    renaming
        .iter()
        .map(|(&g, &h)| Ok((h, bar.image(g)?.clone())))
        .collect()
}

/// Checks `∂_target ∘ φ = φ ∘ ∂_source` on every generator of `source`.
pub fn is_chain_map(phi: &GeneratorMap, source: &AbstractDGA, target: &AbstractDGA) -> Result<bool> {
    for g in source.generators() {
        let lhs = target.apply(phi.image(g)?)?;
        let rhs = phi.apply(source.boundary(g)?)?;
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `ε ∘ φ` on the generators of `phi`'s domain.
pub fn pull_back<F: Fn(GenId) -> Gf2>(phi: &GeneratorMap, eps: F) -> Result<BTreeMap<GenId, Gf2>> {
    phi.iter()
        .map(|(g, p)| Ok((g, p.evaluate(|h| Some(eps(h)))?)))
        .collect()
}

/// Whether `ε` (given on generators, 0 elsewhere) kills every `∂g`.
pub fn is_augmentation(d: &AbstractDGA, eps: &BTreeMap<GenId, Gf2>) -> Result<bool> {
    for g in d.generators() {
        if d.boundary(g)?.evaluate(|h| Some(eps.get(&h).copied().unwrap_or(Gf2::ZERO)))?.0 {
            return Ok(false);
        }
    }
    Ok(true)
}
