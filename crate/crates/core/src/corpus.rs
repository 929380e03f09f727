//! Seeded braid and permutation corpora for the oracle sweeps.

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::braid::{BraidWord, Permutation};
use crate::z2poly::{GenId, Poly, Word};

/// Uniform positive word on `q` strands with `len` letters.
pub fn random_positive_braid<R: Rng>(rng: &mut R, q: u32, len: usize) -> BraidWord {
    let letters = if q < 2 {
        Vec::new()
    } else {
        (0..len).map(|_| rng.gen_range(1..q)).collect()
    };
    BraidWord::new(q, letters).expect("letters are drawn in range")
}

/// `count` words with strands in `min_q..=max_q` and length at most `max_len`.
pub fn random_braids(seed: u64, count: usize, min_q: u32, max_q: u32, max_len: usize) -> Vec<BraidWord> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let q = rng.gen_range(min_q..=max_q);
            let len = rng.gen_range(0..=max_len);
            random_positive_braid(&mut rng, q, len)
        })
        .collect()
}

/// `w · reverse(w)` is pure: its permutation is a product and its inverse.
pub fn random_pure_braids(seed: u64, count: usize, max_q: u32, max_len: usize) -> Vec<BraidWord> {
    random_braids(seed, count, 2, max_q, max_len / 2)
        .into_iter()
        .map(|b| {
            let mut letters = b.letters().to_vec();
            letters.extend(b.letters().iter().rev());
            BraidWord::new(b.strands(), letters).expect("same strands")
        })
        .collect()
}

/// Torus words for `1 ≤ p ≤ max_p`, `2 ≤ q ≤ max_q`, knots and links alike.
pub fn torus_words(max_p: u32, max_q: u32) -> Vec<BraidWord> {
    (1..=max_p)
        .cartesian_product(2..=max_q)
        .map(|(p, q)| BraidWord::torus(p, q).expect("p >= 1, q >= 2"))
        .collect()
}

/// `count` polynomials in `gens` with at most `max_terms` words of length
/// at most `max_len`.
pub fn random_polys(seed: u64, gens: &[GenId], count: usize, max_terms: usize, max_len: usize) -> Vec<Poly> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let terms = rng.gen_range(0..=max_terms);
            Poly::from_words((0..terms).map(|_| {
                let len = rng.gen_range(0..=max_len);
                let letters: Vec<GenId> = (0..len).map(|_| gens[rng.gen_range(0..gens.len())]).collect();
                Word::new(&letters)
            }))
        })
        .collect()
}

/// Every permutation of `1..=q`.
pub fn all_permutations(q: u32) -> Vec<Permutation> {
    (1..=q)
        .permutations(q as usize)
        .map(|images| Permutation::from_images(images).expect("itertools yields permutations"))
        .collect()
}

/// Every permutation of `1..=q` for `1 ≤ q ≤ max_q`.
pub fn permutations_up_to(max_q: u32) -> Vec<Permutation> {
    (1..=max_q).flat_map(all_permutations).collect()
}

/// Braids for the `C`/`M` recurrence oracle: torus words with `p, q ≤ 4`
/// and `random` words with `q ≤ 4`, length at most 10.
pub fn cm_oracle_corpus(seed: u64, random: usize) -> Vec<BraidWord> {
    let mut out = torus_words(4, 4);
    out.extend(random_braids(seed, random, 2, 4, 10));
    out
}

/// Braids for the augmentation sweep: `q ≤ max_q`, length at most `max_len`,
/// with torus links, pure braids and random words.
pub fn augmentation_corpus(seed: u64, random: usize, max_q: u32, max_len: usize) -> Vec<BraidWord> {
    let mut out: Vec<BraidWord> = torus_words(max_len as u32, max_q)
        .into_iter()
        .filter(|b| b.len() <= max_len)
        .collect();
    out.push(BraidWord::new(1, Vec::new()).expect("unknot"));
    out.extend(random_pure_braids(seed ^ 0x5eed, random / 4, max_q, max_len));
    out.extend(random_braids(seed, random, 1, max_q, max_len));
    out
}
