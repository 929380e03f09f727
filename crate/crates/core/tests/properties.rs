use legch_core::braid::BraidWord;
use legch_core::corpus::random_positive_braid;
use legch_core::dga::differential;
use legch_core::rmoves::{
    is_chain_map, map_ii, map_ii_inverse, map_iii_a, map_iii_b, prime_renaming, AbstractDGA, MoveIIContext,
};
use legch_core::z2poly::{poly_from_json, poly_to_json, GenId, GeneratorMap, Gf2, Poly, Ring, Word};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn poly_over(gens: Vec<u32>, max_terms: usize, max_len: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec(prop::collection::vec(prop::sample::select(gens), 0..=max_len), 0..=max_terms).prop_map(
        |terms| {
            Poly::from_words(
                terms
                    .into_iter()
                    .map(|t| Word::new(&t.into_iter().map(GenId).collect::<Vec<_>>())),
            )
        },
    )
}

fn poly() -> impl Strategy<Value = Poly> {
    poly_over(vec![0, 1, 2, 3], 5, 4)
}

fn gen_map() -> impl Strategy<Value = GeneratorMap> {
    prop::collection::vec(poly_over(vec![0, 1, 2, 3], 3, 2), 4)
        .prop_map(|images| images.into_iter().enumerate().map(|(k, p)| (GenId(k as u32), p)).collect())
}

fn name(g: GenId) -> String {
    format!("x{}", g.0)
}

fn resolve(s: &str) -> Option<GenId> {
    s.strip_prefix('x')?.parse().ok().map(GenId)
}

proptest! {
    #[test]
    fn additive_group(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert!((&a + &a).is_zero());
        prop_assert_eq!(&a + &Poly::zero(), a.clone());
    }

    #[test]
    fn multiplicative_monoid(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &Poly::one(), a.clone());
        prop_assert_eq!(&Poly::one() * &a, a.clone());
        prop_assert!((&a * &Poly::zero()).is_zero());
    }

    #[test]
    fn distributive(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
    }

    #[test]
    fn substitution_is_a_unital_morphism(phi in gen_map(), a in poly(), b in poly()) {
        prop_assert_eq!(phi.apply(&(&a + &b)).unwrap(), &phi.apply(&a).unwrap() + &phi.apply(&b).unwrap());
        prop_assert_eq!(phi.apply(&(&a * &b)).unwrap(), &phi.apply(&a).unwrap() * &phi.apply(&b).unwrap());
        prop_assert!(phi.apply(&Poly::one()).unwrap().is_one());
    }

    #[test]
    fn composition_applies_in_order(phi in gen_map(), psi in gen_map(), a in poly()) {
        let composed = phi.then(&psi).unwrap();
        prop_assert_eq!(composed.apply(&a).unwrap(), psi.apply(&phi.apply(&a).unwrap()).unwrap());
    }

    #[test]
    fn evaluation_is_substitution_by_constants(a in poly(), values in prop::collection::vec(any::<bool>(), 4)) {
        let by_eval = a.evaluate(|g| Some(Gf2(values[g.index()]))).unwrap();
        let constants: GeneratorMap = values
            .iter()
            .enumerate()
            .map(|(k, &v)| (GenId(k as u32), if v { Poly::one() } else { Poly::zero() }))
            .collect();
        let by_subst = constants.apply(&a).unwrap();
        prop_assert!(by_subst.degree().unwrap_or(0) == 0);
        prop_assert_eq!(by_subst.constant_term(), by_eval);
        let generic: Gf2 = a.eval_in(|g| Some(Gf2(values[g.index()]))).unwrap();
        prop_assert_eq!(generic, by_eval);
    }

    #[test]
    fn derivations_obey_leibniz(d in gen_map(), a in poly(), b in poly()) {
        let der = |p: &Poly| p.derivation_with(|g| d.get(g).cloned()).unwrap();
        prop_assert_eq!(der(&(&a * &b)), &(&der(&a) * &b) + &(&a * &der(&b)));
        prop_assert_eq!(der(&(&a + &b)), &der(&a) + &der(&b));
    }

    #[test]
    fn json_and_text_round_trip(a in poly()) {
        let value = poly_to_json(&a, name);
        prop_assert_eq!(poly_from_json(&value, resolve).unwrap(), a.clone());
        let text = a.render_with(name);
        prop_assert_eq!(Poly::parse_with(&text, resolve).unwrap(), a);
    }

    #[test]
    fn braid_invariants(seed in any::<u64>(), q in 1u32..=6, len in 0usize..=14) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let b = random_positive_braid(&mut rng, q, len);
        let len = b.len();
        let inv = b.closure_invariants();
        prop_assert_eq!(inv.tb, len as i64 - q as i64);
        prop_assert_eq!(inv.rotation, 0);
        prop_assert_eq!(inv.maslov.len(), inv.components);
        prop_assert!(inv.maslov.iter().all(|&m| m == 0));
        prop_assert_eq!(b.crossings().len(), len);
        let sigma = b.permutation();
        prop_assert_eq!(sigma.inverse().inverse(), sigma.clone());
        prop_assert_eq!(sigma.cycles().iter().map(Vec::len).sum::<usize>(), q as usize);
        // symbolic tables grow quickly with strands
        if q <= 4 && len <= 6 {
            prop_assert!(differential(&b).d_squared_vanishes().unwrap());
        }
        if !b.is_empty() {
            let shifted = b.conjugate_shift().unwrap();
            prop_assert_eq!(shifted.len(), b.len());
            prop_assert_eq!(shifted.permutation().cycles().len(), sigma.cycles().len());
        }
        let parsed = BraidWord::parse(q as i64, &b.letters().iter().map(u32::to_string).collect::<Vec<_>>().join(",")).unwrap();
        prop_assert_eq!(parsed.letters(), b.letters());
    }

    #[test]
    fn torus_shape_round_trips(p in 1u32..=8, q in 2u32..=8) {
        let b = BraidWord::torus(p, q).unwrap();
        prop_assert_eq!(b.torus_shape(), Some((p, q)));
        prop_assert_eq!(b.len() as u32, p * (q - 1));
    }

    #[test]
    fn renaming_moves_are_morphisms(boundary in poly_over(vec![0, 1, 2, 3], 4, 3), a in poly_over(vec![0, 1, 2, 3, 4], 4, 3), b in poly_over(vec![0, 1, 2, 3, 4], 4, 3)) {
        let mut source = AbstractDGA::from_spec(&[("a", 0, "0"), ("b", 0, "0"), ("c", 0, "0"), ("x", 0, "0"), ("e", 1, "0")]).unwrap();
        source.set_boundary(GenId(4), boundary).unwrap();
        let target = AbstractDGA::from_spec(&[("a'", 0, "0"), ("b'", 0, "0"), ("c'", 0, "0"), ("x'", 0, "0"), ("e'", 1, "0")]).unwrap();
        let r = prime_renaming(&source, &target, &[]).unwrap();
        for phi in [map_iii_a(&source, &r).unwrap(), map_iii_b(&source, GenId(0), GenId(1), GenId(2), &r).unwrap()] {
            prop_assert_eq!(phi.apply(&(&a * &b)).unwrap(), &phi.apply(&a).unwrap() * &phi.apply(&b).unwrap());
            prop_assert_eq!(phi.apply(&(&a + &b)).unwrap(), &phi.apply(&a).unwrap() + &phi.apply(&b).unwrap());
            // pushing ∂ forward makes the move a chain map
            let mut pushed = target.clone();
            let e = pushed.require("e'").unwrap();
            pushed.set_boundary(e, phi.apply(source.boundary(GenId(4)).unwrap()).unwrap()).unwrap();
            prop_assert!(is_chain_map(&phi, &source, &pushed).unwrap());
        }
    }

    // ids: a=0, b=1, x1=2, x2=3, a1=4, a2=5, a3=6
    #[test]
    fn move_ii_pair_on_degree_zero_boundaries(
        v in poly_over(vec![2, 3], 3, 3),
        boundaries in prop::collection::vec(poly_over(vec![1, 2, 3], 4, 4), 3),
    ) {
        let mut with_pair = AbstractDGA::from_spec(&[
            ("a", 1, "0"), ("b", 0, "0"), ("x1", 0, "0"), ("x2", 0, "0"),
            ("a1", 1, "0"), ("a2", 1, "0"), ("a3", 1, "0"),
        ]).unwrap();
        with_pair.set_boundary(GenId(0), &Poly::gen(GenId(1)) + &v).unwrap();
        for (k, p) in boundaries.iter().enumerate() {
            with_pair.set_boundary(GenId(4 + k as u32), p.clone()).unwrap();
        }
        let mut without = AbstractDGA::from_spec(&[
            ("x1'", 0, "0"), ("x2'", 0, "0"), ("a1'", 1, "0"), ("a2'", 1, "0"), ("a3'", 1, "0"),
        ]).unwrap();
        let (a, b) = (GenId(0), GenId(1));
        let r = prime_renaming(&with_pair, &without, &[a, b]).unwrap();
        let psi = map_ii_inverse(&with_pair, a, b, &r).unwrap();
        for k in 0..3u32 {
            let image = psi.apply(with_pair.boundary(GenId(4 + k)).unwrap()).unwrap();
            without.set_boundary(r[&GenId(4 + k)], image).unwrap();
        }
        let ctx = MoveIIContext::new(&with_pair, a, b, vec![GenId(4), GenId(5), GenId(6)], vec![GenId(2), GenId(3)]).unwrap();
        let phi = map_ii(&with_pair, &ctx, &r).unwrap();
        prop_assert!(is_chain_map(&phi, &without, &with_pair).unwrap());
        prop_assert!(is_chain_map(&psi, &with_pair, &without).unwrap());
        prop_assert!(phi.then(&psi).unwrap().is_identity());
        for g in [GenId(2), GenId(3)] {
            prop_assert_eq!(phi.image(r[&g]).unwrap(), &Poly::gen(g));
        }
        let x = Poly::gen(GenId(2));
        prop_assert_eq!(phi.apply(&(&x * &x)).unwrap(), &phi.apply(&x).unwrap() * &phi.apply(&x).unwrap());
    }
}

#[test]
fn gf2_is_a_field() {
    for a in [Gf2::ZERO, Gf2::ONE] {
        assert_eq!(a.add(&a), Gf2::ZERO);
        assert_eq!(a.mul(&Gf2::ONE), a);
        for b in [Gf2::ZERO, Gf2::ONE] {
            assert_eq!(a.mul(&b), b.mul(&a));
        }
    }
}
