//! Checks behind `legch certify` and the acceptance tests.

use std::collections::BTreeSet;

use legch_core::augment::{
    admissible_loop_oracle, augmented_graph, edge_reversal_oracle, euclid_blocks, realized_graph, Augmentation,
};
use legch_core::braid::BraidWord;
use legch_core::corpus::{augmentation_corpus, cm_oracle_corpus, permutations_up_to, random_polys};
use legch_core::dga::oracle::{direct_c, direct_m};
use legch_core::dga::{count_d, differential, enumerate_d, is_admissible, CmTables, Matrix};
use legch_core::monodromy::{
    certify_order, closed_form_mu, period_agreement_at_random_points, period_composition, verify_prop62_with, IdentityLevel, PatternStatus,
};
use num_integer::Integer;
use legch_core::rmoves::{all_toys, demo};
use legch_core::z2poly::{GenId, Poly};
use rayon::prelude::*;

use crate::config::Config;
use crate::report::{Check, Status};

pub fn coprime_pairs(lo: u32, hi: u32) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    for p in lo..=hi {
        for q in lo..=hi {
            if p.gcd(&q) == 1 {
                out.push((p, q));
            }
        }
    }
    out
}

fn pair(p: u32, q: u32) -> String {
    format!("({p},{q})")
}

fn with_failures(head: String, bad: &[String]) -> String {
    if bad.is_empty() {
        head
    } else {
        format!("{head}; failing: {}", bad.join("; "))
    }
}

fn bits(s: &[u8]) -> String {
    s.iter().map(u8::to_string).collect()
}

/// Is `s` a rotation of `0^zeros 1^ones`?
fn cyclic_block(s: &[u8], zeros: usize, ones: usize) -> bool {
    let target: Vec<u8> = std::iter::repeat_n(0, zeros).chain(std::iter::repeat_n(1, ones)).collect();
    s.len() == target.len() && (0..s.len()).any(|r| s[r..].iter().chain(&s[..r]).eq(target.iter()))
}

/// Renders with crossings named `b1, b2, …` by word position.
fn positional(b: &BraidWord, p: &Poly) -> String {
    let table = b.crossings();
    p.render_with(|g| format!("b{}", table.by_id(g).map_or(0, |c| c.position)))
}

fn parse_positional(b: &BraidWord, text: &str) -> Poly {
    let table = b.crossings();
    Poly::parse_with(text, |s| {
        let k: usize = s.strip_prefix('b')?.parse().ok()?;
        table.at(k).map(|c| c.id)
    })
    .expect("fixed expressions parse")
}

pub fn trefoil_golden() -> Vec<Check> {
    let b = BraidWord::torus(3, 2).expect("torus word");
    let d = differential(&b);
    let expected = [
        (1, "1 + b1 + b3 + b1*b2*b3"),
        (2, "b2 + b2*b3 + b1*b2 + b2*b3*b1*b2"),
    ];
    expected
        .iter()
        .map(|&(m, text)| {
            let got = d.boundary_of_a(m);
            Check::of(
                "trefoil-differential",
                format!("a{m}"),
                got == &parse_positional(&b, text),
                format!("got {}", positional(&b, got)),
            )
        })
        .collect()
}

pub fn admissible_sequences(cfg: &Config) -> Vec<Check> {
    let mut out = Vec::new();
    let d3 = enumerate_d(3, cfg.guards.max_enumeration).expect("n = 3 is within any guard");
    let listed: Vec<Vec<u32>> = vec![vec![], vec![1], vec![2], vec![1, 2], vec![2, 1], vec![1, 2, 1]];
    out.push(Check::of("admissible-d3", "D_3", d3 == listed, format!("{d3:?}")));

    let mut recurrence = true;
    for n in 2..=6 {
        let (prev, cur) = (count_d(n - 1).unwrap(), count_d(n).unwrap());
        recurrence &= cur == prev * prev + prev;
    }
    out.push(Check::of(
        "admissible-count-recurrence",
        "n <= 6",
        recurrence && count_d(5) == Some(1806),
        format!("|D_5| = {:?}, |D_6| = {:?}", count_d(5), count_d(6)),
    ));

    for n in 1..=5u32.min(cfg.guards.max_enumeration) {
        let listed = enumerate_d(n, cfg.guards.max_enumeration).expect("within guard");
        let distinct: BTreeSet<&Vec<u32>> = listed.iter().collect();
        let ok = listed.len() as u128 == count_d(n).unwrap()
            && distinct.len() == listed.len()
            && listed.iter().all(|s| is_admissible(s));
        out.push(Check::of("admissible-enumeration", format!("D_{n}"), ok, format!("{} sequences", listed.len())));
    }

    // every word over 1..n-1 up to the longest admissible length
    for n in 1..=4u32 {
        let max_len = (1usize << (n - 1)) - 1;
        let mut found = 0u128;
        let mut word: Vec<u32> = Vec::new();
        brute_force(n, max_len, &mut word, &mut found);
        out.push(Check::of(
            "admissible-brute-force",
            format!("D_{n}"),
            Some(found) == count_d(n),
            format!("{found} admissible words"),
        ));
    }
    out
}

fn brute_force(n: u32, max_len: usize, word: &mut Vec<u32>, found: &mut u128) {
    if !is_admissible(word) {
        return;
    }
    *found += 1;
    if word.len() == max_len {
        return;
    }
    for s in 1..n {
        word.push(s);
        brute_force(n, max_len, word, found);
        word.pop();
    }
}

/// `C(3,1)` with free generators in place of the `B` entries.
fn free_c31() -> bool {
    let b = |i: usize, j: usize| Poly::gen(GenId((10 * i + j) as u32));
    let t = CmTables::from_paths(Matrix::from_fn(3, b));
    let displayed = &(&b(3, 1) + &(&b(3, 2) * &b(2, 1))) + &(&(&b(3, 1) * &b(1, 2)) * &b(2, 1));
    t.c(3, 1) == &displayed
        && t.c(1, 1) == &b(1, 1)
        && t.c(2, 1) == &b(2, 1)
        && (1..=3).all(|j| t.m(1, j) == &b(1, j) && t.m(j, 1) == &b(j, 1))
}

pub fn cm_oracle(cfg: &Config) -> Vec<Check> {
    let max_n = cfg.guards.max_enumeration;
    let mut out = vec![Check::of("cm-displayed-c31", "free B", free_c31(), "C[3,1] = B31 + B32 B21 + B31 B12 B21")];
    let corpus = cm_oracle_corpus(cfg.seed, cfg.corpus.cm_random);
    out.par_extend(corpus.par_iter().map(|b| {
        let t = CmTables::symbolic(b);
        let q = b.strands();
        let mut bad = Vec::new();
        for i in 1..=q {
            for j in 1..=q {
                if t.m(i as usize, j as usize) != &direct_m(t.paths(), i, j, max_n).expect("q <= 4") {
                    bad.push(format!("M[{i},{j}]"));
                }
                if i >= j && t.c(i as usize, j as usize) != &direct_c(t.paths(), i, j, max_n).expect("q <= 4") {
                    bad.push(format!("C[{i},{j}]"));
                }
            }
        }
        Check::of("cm-recurrence-oracle", b.to_string(), bad.is_empty(), bad.join(" "))
    }));
    out
}

pub fn augmentation_validity(cfg: &Config) -> Vec<Check> {
    let c = &cfg.corpus;
    let corpus = augmentation_corpus(cfg.seed, c.augmentation_random, c.augmentation_max_strands, c.augmentation_max_len);
    corpus
        .par_iter()
        .map(|b| {
            let x = match Augmentation::construct(b) {
                Ok(x) => x,
                Err(e) => return Check::of("augmentation", b.to_string(), false, e.to_string()),
            };
            let sigma = b.permutation();
            let valid = x.verify(b).is_augmentation();
            let realized = realized_graph(b, x.crossings()) == augmented_graph(&sigma).edges();
            let size = x.len() == b.strands() as usize - sigma.cycles().len();
            Check::of(
                "augmentation",
                b.to_string(),
                valid && realized && size,
                format!("|X| = {}, eps(d a) = 0: {valid}, graph realized: {realized}", x.len()),
            )
        })
        .collect()
}

pub fn graph_lemmas(cfg: &Config) -> Vec<Check> {
    permutations_up_to(cfg.corpus.permutation_max_strands)
        .par_iter()
        .map(|sigma| {
            let g = augmented_graph(sigma);
            let mut bad = Vec::new();
            for p in 1..=sigma.size() {
                let count = admissible_loop_oracle(&g, p).expect("vertex in range").count;
                if count != 1 {
                    bad.push(format!("{count} loops at {p}"));
                }
            }
            for r in 1..=sigma.size() {
                let p = sigma.apply(r);
                if p < r {
                    let expected = usize::from(g.second_largest_on_loop(r).expect("vertex in range") == Some(p));
                    let found = edge_reversal_oracle(&g, p, r).expect("cycle edge");
                    if found != expected {
                        bad.push(format!("edge {r}->{p}: {found} paths"));
                    }
                }
            }
            Check::of("graph-lemmas", format!("{:?}", sigma.images()), bad.is_empty(), bad.join("; "))
        })
        .collect()
}

pub fn monodromy_chain(p: u32, q: u32, cfg: &Config) -> Vec<Check> {
    let crossings = (p * (q - 1)) as usize;
    let expand = cfg.guards.max_expanded_crossings;
    let mut out = Vec::new();
    let randomized = period_agreement_at_random_points(p, q, 2, cfg.seed);
    out.push(match &randomized {
        Ok(r) => Check::of(
            "monodromy-period-random-points",
            pair(p, q),
            r.agree,
            format!("{} points, degree <= {}, false agreement < {:.0e}", r.trials, r.degree_bound, r.error_bound()),
        ),
        Err(e) => Check::of("monodromy-period-random-points", pair(p, q), false, e.to_string()),
    });
    out.push(if crossings > expand {
        let evidence = match &randomized {
            Ok(r) if r.agree => format!("; the maps agree at random matrix points (false agreement < {:.0e})", r.error_bound()),
            _ => String::new(),
        };
        Check::of(
            "monodromy-period",
            pair(p, q),
            false,
            format!("not compared exactly: {crossings} crossings exceed max_expanded_crossings = {expand}{evidence}"),
        )
    } else {
        match period_composition(p, q).and_then(|c| Ok(c == closed_form_mu(p, q)?)) {
            Ok(ok) => Check::of("monodromy-period", pair(p, q), ok, "q - 1 holonomies vs closed form"),
            Err(e) => Check::of("monodromy-period", pair(p, q), false, e.to_string()),
        }
    });
    out.push(match verify_prop62_with(p, q, cfg.guards.max_symbolic_crossings) {
        Ok(r) => {
            let rows = r.count(IdentityLevel::Chain);
            let bad: Vec<String> = r
                .failures()
                .filter(|row| row.level == IdentityLevel::Chain)
                .map(|row| format!("{} = {}", row.lhs, row.rhs))
                .collect();
            let skipped = r.chain_skipped.as_ref().map_or(String::new(), |why| format!("; skipped: {why}"));
            Check::of(
                "monodromy-b-chain",
                pair(p, q),
                bad.is_empty() && rows > 0 && r.chain_skipped.is_none(),
                with_failures(format!("{rows} rows{skipped}"), &bad),
            )
        }
        Err(e) => Check::of("monodromy-b-chain", pair(p, q), false, e.to_string()),
    });
    out
}

pub fn monodromy_eps(p: u32, q: u32) -> Check {
    match verify_prop62_with(p, q, 0) {
        Ok(r) => {
            let bad: Vec<String> = r.failures().map(|row| format!("{} = {}", row.lhs, row.rhs)).collect();
            Check::of(
                "monodromy-eps-identities",
                pair(p, q),
                bad.is_empty(),
                with_failures(format!("{} rows", r.count(IdentityLevel::Augmented)), &bad),
            )
        }
        Err(e) => Check::of("monodromy-eps-identities", pair(p, q), false, e.to_string()),
    }
}

/// Order certificate, then the designated orbit's pattern as its own check.
pub fn order_checks(p: u32, q: u32) -> Vec<Check> {
    let cert = match certify_order(p, q, 0) {
        Ok(c) => c,
        Err(e) => return vec![Check::of("order", pair(p, q), false, e.to_string())],
    };
    let n = (p + q) as usize;
    let orbit = &cert.orbit;
    let order_ok = cert.certified() && cert.eps_stable && cert.eps_first_return == Some(n) && orbit.minimal_period == n;
    let mut out = vec![Check::of(
        "order",
        pair(p, q),
        order_ok,
        format!(
            "order {:?}, first return {:?}, orbit of {} has period {}",
            cert.order, cert.eps_first_return, orbit.base, orbit.minimal_period
        ),
    )];
    let seq = bits(&orbit.sequence);
    let pattern = if q == 2 {
        let derived = cyclic_block(&orbit.sequence, p as usize - 1, 3);
        let status = if derived { Status::Flagged } else { Status::Fail };
        let reason = match &orbit.status {
            Some(PatternStatus::Flagged(r) | PatternStatus::Mismatch(r)) => r.clone(),
            _ => String::new(),
        };
        Check::new("orbit-pattern", pair(p, q), status, format!("{seq} is 0^(p-1)1^3 cyclically: {derived}; {reason}"))
    } else {
        let block = cyclic_block(&orbit.sequence, p as usize, q as usize);
        let case = orbit.expected.as_ref().map_or(0, |e| e.case.number());
        let detail = match &orbit.status {
            Some(PatternStatus::Match) => format!("{seq} matches case ({case})"),
            Some(PatternStatus::Mismatch(r) | PatternStatus::Flagged(r)) => format!("case ({case}): {r}"),
            None => format!("{seq}, no prediction"),
        };
        Check::of("orbit-pattern", pair(p, q), block && orbit.status == Some(PatternStatus::Match), detail)
    };
    out.push(pattern);
    out
}

pub fn euclid(pairs: &[(u32, u32)]) -> Vec<Check> {
    pairs
        .iter()
        .map(|&(p, q)| match euclid_blocks(p, q) {
            Ok(e) => {
                let knot = p.gcd(&q) == 1;
                let total = !knot || (e.selected.len() as u32 == q - 1 && e.predicted_total() == q - 1);
                Check::of(
                    "euclid-blocks",
                    pair(p, q),
                    e.matches() && total,
                    format!("predicted {:?}, runs {:?}, {} selected", e.predicted, e.actual, e.selected.len()),
                )
            }
            Err(err) => Check::of("euclid-blocks", pair(p, q), false, err.to_string()),
        })
        .collect()
}

pub fn classical_invariants(max: u32) -> Vec<Check> {
    let mut out = Vec::new();
    let unknot = BraidWord::new(1, Vec::new()).expect("unknot").closure_invariants();
    out.push(Check::of(
        "classical-invariants",
        "unknot",
        unknot.tb == -1 && unknot.rotation == 0 && unknot.maslov.iter().all(|&m| m == 0),
        format!("tb {}", unknot.tb),
    ));
    let mut bad = Vec::new();
    for p in 2..=max {
        for q in 2..=max {
            let inv = BraidWord::torus(p, q).expect("torus word").closure_invariants();
            let tb = (p * q) as i64 - p as i64 - q as i64;
            if inv.tb != tb || inv.rotation != 0 || inv.maslov.iter().any(|&m| m != 0) {
                bad.push(pair(p, q));
            }
        }
    }
    out.push(Check::of("classical-invariants", format!("torus 2..={max}"), bad.is_empty(), bad.join(" ")));
    out
}

pub fn move_calculus(seed: u64) -> Vec<Check> {
    let mut out = Vec::new();
    let toys = all_toys().expect("toy presentations are well formed");
    for (k, pair) in toys.iter().enumerate() {
        let gens: Vec<GenId> = pair.domain.generators().collect();
        let polys = random_polys(seed.wrapping_add(k as u64), &gens, 40, 4, 4);
        let phi = |x: &Poly| pair.map.apply(x).expect("map covers the domain");
        let laws = phi(&Poly::one()).is_one()
            && polys.windows(2).all(|w| {
                phi(&(&w[0] * &w[1])) == &phi(&w[0]) * &phi(&w[1]) && phi(&(&w[0] + &w[1])) == &phi(&w[0]) + &phi(&w[1])
            });
        out.push(Check::of("move-morphism-laws", pair.name, laws, "40 random polynomials"));
    }
    for d in demo().expect("toy presentations are well formed") {
        out.push(Check::of(
            "move-chain-map",
            d.name,
            d.chain_map && d.codomain_augmentation && d.pullback_is_augmentation,
            format!("{:?}", d.images),
        ));
    }
    let image = |name: &str, g: &str| {
        let pair = toys.iter().find(|t| t.name == name).expect("bundled toy");
        pair.codomain.render(pair.map.image(pair.domain.require(g).expect("bundled generator")).expect("in domain"))
    };
    out.push(Check::of("move-iii-b-image", "III_b", image("III_b", "a") == "a' + c'*b'", image("III_b", "a")));
    let (a, b) = (image("II^-1", "a"), image("II^-1", "b"));
    out.push(Check::of("move-ii-inverse-image", "II^-1", a == "0" && b == "x1'*x2'", format!("a -> {a}, b -> {b}")));
    let ii = toys.iter().find(|t| t.name == "II").expect("bundled toy");
    out.push(Check::of(
        "move-ii-degree-zero",
        "II",
        ii.fixes_degree_zero().expect("map covers the domain"),
        image("II", "a1'"),
    ));
    out
}

/// Every check, with the ranges and corpus sizes of `cfg`.
pub fn full_suite(cfg: &Config) -> Vec<Check> {
    let mut out = trefoil_golden();
    out.extend(admissible_sequences(cfg));
    out.extend(cm_oracle(cfg));
    out.extend(augmentation_validity(cfg));
    out.extend(graph_lemmas(cfg));
    out.extend(torus_checks(&coprime_pairs(2, cfg.certify.torus_range), cfg));
    out.extend(euclid(&EUCLID_PAIRS));
    out.extend(classical_invariants(12));
    out.extend(move_calculus(cfg.seed));
    out
}

pub const EUCLID_PAIRS: [(u32, u32); 5] = [(2, 5), (3, 4), (5, 3), (11, 26), (26, 11)];

/// Order and ε-level checks for every pair, chain-level ones up to
/// `certify.chain_range`.
pub fn torus_checks(pairs: &[(u32, u32)], cfg: &Config) -> Vec<Check> {
    pairs
        .par_iter()
        .flat_map_iter(|&(p, q)| {
            let mut out = order_checks(p, q);
            out.push(monodromy_eps(p, q));
            if p.max(q) <= cfg.certify.chain_range {
                out.extend(monodromy_chain(p, q, cfg));
            }
            out
        })
        .collect()
}
