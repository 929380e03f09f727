//! Small presentations on which each move map can be checked by hand.

use std::collections::BTreeMap;

use serde::Serialize;

use super::{
    is_augmentation, is_chain_map, map_ii, map_ii_inverse, map_iii_a, map_iii_b, prime_renaming, pull_back,
    AbstractDGA, MoveIIContext,
};
use crate::error::Result;
use crate::z2poly::{GenId, GeneratorMap, Gf2};

/// A move map `domain → codomain` with an augmentation of the codomain.
#[derive(Debug, Clone)]
pub struct MovePair {
    pub name: &'static str,
    pub domain: AbstractDGA,
    pub codomain: AbstractDGA,
    pub map: GeneratorMap,
    pub augmentation: BTreeMap<GenId, Gf2>,
}

impl MovePair {
    pub fn is_chain_map(&self) -> Result<bool> {
        is_chain_map(&self.map, &self.domain, &self.codomain)
    }

    pub fn pulled_back(&self) -> Result<BTreeMap<GenId, Gf2>> {
        pull_back(&self.map, |g| self.augmentation.get(&g).copied().unwrap_or(Gf2::ZERO))
    }

    /// Every grading-0 generator goes to its renamed copy.
    pub fn fixes_degree_zero(&self) -> Result<bool> {
        let bare = |s: String| s.trim_end_matches('\'').to_string();
        for g in self.domain.generators().filter(|&g| self.domain.grading(g) == Some(0)) {
            let image = self.map.image(g)?;
            let same = image.len() == 1
                && image.terms()[0].len() == 1
                && bare(self.codomain.name(image.terms()[0].letters()[0])) == bare(self.domain.name(g));
            if !same {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn images(&self) -> Vec<(String, String)> {
        self.map
            .iter()
            .map(|(g, p)| (self.domain.name(g), self.codomain.render(p)))
            .collect()
    }
}

fn eps_of(d: &AbstractDGA, ones: &[&str]) -> Result<BTreeMap<GenId, Gf2>> {
    let mut eps: BTreeMap<GenId, Gf2> = d.generators().map(|g| (g, Gf2::ZERO)).collect();
    for name in ones {
        eps.insert(d.require(name)?, Gf2::ONE);
    }
    Ok(eps)
}

/// A triangle `a, b, c` slides past `e` with `∂e = 1 + ab + c`.
pub fn toy_iii_a() -> Result<MovePair> {
    let domain = AbstractDGA::from_spec(&[("a", 0, "0"), ("b", 0, "0"), ("c", 0, "0"), ("e", 1, "1 + a*b + c")])?;
    let codomain = AbstractDGA::from_spec(&[
        ("a'", 0, "0"),
        ("b'", 0, "0"),
        ("c'", 0, "0"),
        ("e'", 1, "1 + a'*b' + c'"),
    ])?;
    let r = prime_renaming(&domain, &codomain, &[])?;
    let map = map_iii_a(&domain, &r)?;
    let augmentation = eps_of(&codomain, &["c'"])?;
    Ok(MovePair {
        name: "III_a",
        domain,
        codomain,
        map,
        augmentation,
    })
}

/// `∂e = a + 1` becomes `∂e' = a' + c'b' + 1`.
pub fn toy_iii_b() -> Result<MovePair> {
    let domain = AbstractDGA::from_spec(&[("a", 0, "0"), ("b", 0, "0"), ("c", 0, "0"), ("e", 1, "a + 1")])?;
    let codomain = AbstractDGA::from_spec(&[
        ("a'", 0, "0"),
        ("b'", 0, "0"),
        ("c'", 0, "0"),
        ("e'", 1, "a' + c'*b' + 1"),
    ])?;
    let r = prime_renaming(&domain, &codomain, &[])?;
    let [a, b, c] = ["a", "b", "c"].map(|n| domain.require(n));
    let map = map_iii_b(&domain, a?, b?, c?, &r)?;
    let augmentation = eps_of(&codomain, &["a'"])?;
    Ok(MovePair {
        name: "III_b",
        domain,
        codomain,
        map,
        augmentation,
    })
}

/// `∂a = b + x1x2` cancels; `∂e = 1 + b + x1` becomes `1 + x1'x2' + x1'`.
pub fn toy_ii_inverse() -> Result<MovePair> {
    let domain = AbstractDGA::from_spec(&[
        ("a", 1, "b + x1*x2"),
        ("b", 0, "0"),
        ("x1", 0, "0"),
        ("x2", 0, "0"),
        ("e", 1, "1 + b + x1"),
    ])?;
    let codomain = AbstractDGA::from_spec(&[("x1'", 0, "0"), ("x2'", 0, "0"), ("e'", 1, "1 + x1'*x2' + x1'")])?;
    let (a, b) = (domain.require("a")?, domain.require("b")?);
    let r = prime_renaming(&domain, &codomain, &[a, b])?;
    let map = map_ii_inverse(&domain, a, b, &r)?;
    let augmentation = eps_of(&codomain, &["x1'"])?;
    Ok(MovePair {
        name: "II^-1",
        domain,
        codomain,
        map,
        augmentation,
    })
}

/// The pair `∂a = b + x` is created under `a1` with `∂a1 = 1 + bx`; the map
/// runs from the presentation without the pair, `∂a1' = 1 + x'x'`.
pub fn toy_ii() -> Result<MovePair> {
    let with_pair = AbstractDGA::from_spec(&[("a", 1, "b + x"), ("b", 0, "0"), ("x", 0, "0"), ("a1", 1, "1 + b*x")])?;
    let without = AbstractDGA::from_spec(&[("x'", 0, "0"), ("a1'", 1, "1 + x'*x'")])?;
    let [a, b, x, a1] = ["a", "b", "x", "a1"].map(|n| with_pair.require(n).expect("declared above"));
    let r = prime_renaming(&with_pair, &without, &[a, b])?;
    let ctx = MoveIIContext::new(&with_pair, a, b, vec![a1], vec![x])?;
    let map = map_ii(&with_pair, &ctx, &r)?;
    let augmentation = eps_of(&with_pair, &["b", "x"])?;
    Ok(MovePair {
        name: "II",
        domain: without,
        codomain: with_pair,
        map,
        augmentation,
    })
}

pub fn all_toys() -> Result<[MovePair; 4]> {
    Ok([toy_iii_a()?, toy_iii_b()?, toy_ii_inverse()?, toy_ii()?])
}

#[derive(Debug, Clone, Serialize)]
pub struct MoveDemo {
    pub name: &'static str,
    pub images: Vec<(String, String)>,
    pub chain_map: bool,
    pub codomain_augmentation: bool,
    pub pullback_is_augmentation: bool,
    pub fixes_degree_zero: bool,
}

/// Runs every toy move: chain-map check and augmentation pullback.
pub fn demo() -> Result<Vec<MoveDemo>> {
    all_toys()?
        .into_iter()
        .map(|pair| {
            Ok(MoveDemo {
                name: pair.name,
                images: pair.images(),
                chain_map: pair.is_chain_map()?,
                codomain_augmentation: is_augmentation(&pair.codomain, &pair.augmentation)?,
                pullback_is_augmentation: is_augmentation(&pair.domain, &pair.pulled_back()?)?,
                fixes_degree_zero: pair.fixes_degree_zero()?,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn toys_are_chain_maps() {
        for pair in all_toys().unwrap() {
            assert!(pair.domain.d_squared_vanishes().unwrap(), "{}", pair.name);
            assert!(pair.codomain.d_squared_vanishes().unwrap(), "{}", pair.name);
            pair.domain.check_gradings().unwrap();
            pair.codomain.check_gradings().unwrap();
            assert!(pair.is_chain_map().unwrap(), "{}", pair.name);
        }
    }

    #[test]
    fn ii_image_of_a1() {
        let pair = toy_ii().unwrap();
        let a1 = pair.domain.require("a1'").unwrap();
        assert_eq!(pair.codomain.render(pair.map.image(a1).unwrap()), "a1 + a*x");
        assert!(pair.fixes_degree_zero().unwrap());
    }

    #[test]
    fn ii_inverse_images() {
        let pair = toy_ii_inverse().unwrap();
        let img = |n: &str| pair.codomain.render(pair.map.image(pair.domain.require(n).unwrap()).unwrap());
        assert_eq!(img("a"), "0");
        assert_eq!(img("b"), "x1'*x2'");
        assert_eq!(img("e"), "e'");
        assert!(!pair.fixes_degree_zero().unwrap());
    }

    #[test]
    fn augmentations_pull_back() {
        for d in demo().unwrap() {
            assert!(d.chain_map && d.codomain_augmentation && d.pullback_is_augmentation, "{d:?}");
        }
    }

    #[test]
    fn ii_then_ii_inverse_is_identity_when_v_vanishes() {
        let with_pair = AbstractDGA::from_spec(&[
            ("a", 1, "b"),
            ("b", 0, "0"),
            ("x", 0, "0"),
            ("y", 0, "0"),
            ("a1", 1, "1 + b*b"),
            ("a2", 2, "b*a1 + a1*b"),
            ("a3", 1, "1 + x*b*y"),
        ])
        .unwrap();
        let [a, b, x, y, a1, a2, a3] =
            ["a", "b", "x", "y", "a1", "a2", "a3"].map(|n| with_pair.require(n).unwrap());
        // without the pair every term through b is gone
        let without = AbstractDGA::from_spec(&[
            ("x'", 0, "0"),
            ("y'", 0, "0"),
            ("a1'", 1, "1"),
            ("a2'", 2, "0"),
            ("a3'", 1, "1"),
        ])
        .unwrap();
        let r = prime_renaming(&with_pair, &without, &[a, b]).unwrap();
        let ctx = MoveIIContext::new(&with_pair, a, b, vec![a1, a2, a3], vec![x, y]).unwrap();
        let phi = map_ii(&with_pair, &ctx, &r).unwrap();
        assert!(is_chain_map(&phi, &without, &with_pair).unwrap());
        let psi = map_ii_inverse(&with_pair, a, b, &r).unwrap();
        assert!(is_chain_map(&psi, &with_pair, &without).unwrap());
        assert!(phi.then(&psi).unwrap().is_identity());
        let a1p = without.require("a1'").unwrap();
        assert_eq!(with_pair.render(phi.image(a1p).unwrap()), "a1 + a*b");
    }
}
