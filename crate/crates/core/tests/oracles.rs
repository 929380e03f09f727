//! Recurrences against brute force on seeded corpora.

use legch_core::augment::{
    admissible_loop_oracle, augmented_graph, edge_reversal_oracle, realized_graph, Augmentation,
};
use legch_core::corpus::{augmentation_corpus, cm_oracle_corpus, permutations_up_to, random_braids};
use legch_core::dga::oracle::{direct_c, direct_m};
use legch_core::dga::{enumerate_paths_oracle, path_polys, CmTables};

const SEED: u64 = 20;

#[test]
fn paths_match_explicit_walks() {
    for b in random_braids(SEED, 40, 1, 5, 12) {
        let m = path_polys(&b);
        let q = b.strands();
        for i in 1..=q {
            for j in 1..=q {
                let walked = enumerate_paths_oracle(&b, i, j, 14).unwrap();
                assert_eq!(m.get(i as usize, j as usize), &walked, "{b} B[{i},{j}]");
            }
        }
    }
}

#[test]
fn recurrences_match_direct_sums() {
    for b in cm_oracle_corpus(SEED, 20) {
        let t = CmTables::symbolic(&b);
        let q = b.strands();
        for i in 1..=q {
            for j in 1..=q {
                let m = direct_m(t.paths(), i, j, 6).unwrap();
                assert_eq!(t.m(i as usize, j as usize), &m, "{b} M[{i},{j}]");
                if i >= j {
                    let c = direct_c(t.paths(), i, j, 6).unwrap();
                    assert_eq!(t.c(i as usize, j as usize), &c, "{b} C[{i},{j}]");
                }
            }
        }
    }
}

#[test]
fn constructed_augmentations_realize_the_graph() {
    for b in augmentation_corpus(SEED, 40, 6, 16) {
        let x = Augmentation::construct(&b).unwrap();
        assert!(x.verify(&b).is_augmentation(), "{b}");
        let sigma = b.permutation();
        assert_eq!(realized_graph(&b, x.crossings()), augmented_graph(&sigma).edges(), "{b}");
        assert_eq!(x.len(), b.strands() as usize - sigma.cycles().len(), "{b}");
    }
}

#[test]
fn graph_lemmas_on_small_permutations() {
    for sigma in permutations_up_to(5) {
        let g = augmented_graph(&sigma);
        for p in 1..=sigma.size() {
            assert_eq!(admissible_loop_oracle(&g, p).unwrap().count, 1, "{sigma:?} at {p}");
        }
        for r in 1..=sigma.size() {
            let p = sigma.apply(r);
            if p < r {
                let expected = usize::from(g.second_largest_on_loop(r).unwrap() == Some(p));
                assert_eq!(edge_reversal_oracle(&g, p, r).unwrap(), expected, "{sigma:?} {r}->{p}");
            }
        }
    }
}
