//! Monodromy of the loop of Legendrian `(p, q)` torus links on the degree-0
//! generators.
//!
//! One period of the torus braid is moved from the left end to the right end
//! by `q − 1` conjugations. Each conjugation sends its moved crossing to
//! `M'_{m+1,m}` of the shifted braid and fixes every other crossing; after the
//! period the crossings are renamed by position. The result agrees with the
//! closed form `b[m,n] ↦ b[m,n−1]`, `b[m,1] ↦ C_{q,m}`.

mod certify;
mod orbit;
mod prop62;

pub use certify::{certify_order, OrderCertificate};
pub use orbit::{
    designated_m, expected_pattern, minimal_period, orbit, orbit_descriptors, ExpectedPattern,
    OrbitElement, OrbitReport, PatternCase, PatternStatus,
};
pub use prop62::{verify_prop62, verify_prop62_with, IdentityLevel, IdentityRow, Prop62Report};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::augment::Augmentation;
use crate::braid::BraidWord;
use crate::dga::{c_last_row, m_entry, path_matrix, path_polys, CmTables};
use crate::error::{Error, Result};
use crate::z2poly::{DegreeBound, GenId, GeneratorMap, Gf2, MatrixPoint, Poly, Ring, MATRIX_POINT_DIM};

/// Largest torus word for which symbolic `C`/`M` tables are built by default.
pub const DEFAULT_MAX_SYMBOLIC_CROSSINGS: usize = 16;

/// The generator `b[m,n]` of the standard `(p, q)` torus word.
pub fn torus_gen(q: u32, m: u32, n: u32) -> GenId {
    GenId((n - 1) * (q - 1) + m - 1)
}

fn require_torus(p: u32, q: u32) -> Result<BraidWord> {
    if p < 1 || q < 2 {
        return Err(Error::NotTorus(format!("(p, q) = ({p}, {q}) needs p >= 1, q >= 2")));
    }
    BraidWord::torus(p, q)
}

fn check_symbolic_size(b: &BraidWord, limit: usize) -> Result<()> {
    if b.len() > limit {
        return Err(Error::GuardExceeded {
            what: "symbolic crossings",
            limit,
            got: b.len(),
        });
    }
    Ok(())
}

/// `μ` on the crossings of a torus word, read off its `(p, q)` shape.
pub fn closed_form_mu_of(b: &BraidWord) -> Result<GeneratorMap> {
    let (p, q) = b
        .torus_shape()
        .ok_or_else(|| Error::NotTorus(b.to_string()))?;
    let first = c_last_row(path_polys(b));
    let mut mu = GeneratorMap::new();
    for n in 1..=p {
        for m in 1..q {
            let image = if n >= 2 {
                Poly::gen(torus_gen(q, m, n - 1))
            } else {
                first[m as usize - 1].clone()
            };
            mu.insert(torus_gen(q, m, n), image);
        }
    }
    Ok(mu)
}

pub fn closed_form_mu(p: u32, q: u32) -> Result<GeneratorMap> {
    closed_form_mu_of(&require_torus(p, q)?)
}

/// Holonomy of moving the first letter of `b` to the end.
///
/// Returns the map on `b`'s crossings (by stable identity) and the shifted
/// braid in whose generators the images are written.
pub fn conjugation_holonomy(b: &BraidWord) -> Result<(GeneratorMap, BraidWord)> {
    let shifted = b.conjugate_shift()?;
    let moved = b.ids()[0];
    let m = b.letters()[0] as usize;
    let mut map = GeneratorMap::identity(b.ids().iter().copied());
    map.insert(moved, m_entry(&path_polys(&shifted), m + 1, m));
    Ok((map, shifted))
}

/// One conjugation step: the crossing moved to the end, its row, and the
/// braid after the move.
struct Shift {
    moved: GenId,
    row: usize,
    after: BraidWord,
}

/// The `q − 1` shifts of one period, and the final braid.
fn period_shifts(p: u32, q: u32) -> Result<(Vec<Shift>, BraidWord)> {
    let mut current = require_torus(p, q)?;
    let mut steps = Vec::new();
    for _ in 1..q {
        let after = current.conjugate_shift()?;
        steps.push(Shift {
            moved: current.ids()[0],
            row: current.letters()[0] as usize,
            after: after.clone(),
        });
        current = after;
    }
    Ok((steps, current))
}

/// `q − 1` holonomies followed by renaming each crossing after its new position.
pub fn period_composition(p: u32, q: u32) -> Result<GeneratorMap> {
    let (steps, last) = period_shifts(p, q)?;
    let mut total: GeneratorMap = last
        .ids()
        .iter()
        .enumerate()
        .map(|(k, &id)| (id, Poly::gen(GenId(k as u32))))
        .collect();
    // composed from the right: each holonomy moves a single generator
    for s in steps.iter().rev() {
        let image = total.apply(&m_entry(&path_polys(&s.after), s.row + 1, s.row))?;
        total.insert(s.moved, image);
    }
    Ok(total)
}

/// `μ` from the closed form and from the holonomies, both evaluated at
/// `values[g]` for every crossing `g`; the two maps agree iff these agree at
/// generic points.
fn evaluate_both<R: Ring>(p: u32, q: u32, values: &[R]) -> Result<(Vec<R>, Vec<R>)> {
    let b = require_torus(p, q)?;
    let first = c_last_row(path_matrix(&b, |g| values[g.index()].clone()));
    let mut closed = vec![R::zero(); b.len()];
    for n in 1..=p {
        for m in 1..q {
            closed[torus_gen(q, m, n).index()] = if n >= 2 {
                values[torus_gen(q, m, n - 1).index()].clone()
            } else {
                first[m as usize - 1].clone()
            };
        }
    }
    let (steps, last) = period_shifts(p, q)?;
    let mut held = vec![R::zero(); b.len()];
    for (k, id) in last.ids().iter().enumerate() {
        held[id.index()] = values[k].clone();
    }
    for s in steps.iter().rev() {
        let image = m_entry(&path_matrix(&s.after, |g| held[g.index()].clone()), s.row + 1, s.row);
        held[s.moved.index()] = image;
    }
    Ok((closed, held))
}

/// Randomized comparison of [`closed_form_mu`] and [`period_composition`]
/// for words too large to expand.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RandomizedAgreement {
    pub trials: usize,
    /// Upper bound on the degree of every image.
    pub degree_bound: usize,
    pub agree: bool,
}

impl RandomizedAgreement {
    /// Chance that two different maps agree on every trial.
    pub fn error_bound(&self) -> f64 {
        (self.degree_bound as f64 / 2f64.powi(64)).powi(self.trials as i32)
    }
}

pub fn period_agreement_at_random_points(p: u32, q: u32, trials: usize, seed: u64) -> Result<RandomizedAgreement> {
    let w = require_torus(p, q)?.len();
    let (closed, held) = evaluate_both(p, q, &vec![DegreeBound(Some(1)); w])?;
    let degree_bound = closed.iter().chain(&held).filter_map(|d| d.0).max().unwrap_or(0);
    if degree_bound >= 2 * MATRIX_POINT_DIM {
        return Err(Error::Precondition(format!(
            "degree bound {degree_bound} needs matrices larger than {MATRIX_POINT_DIM}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut agree = true;
    for _ in 0..trials {
        let point: Vec<MatrixPoint> = (0..w).map(|_| MatrixPoint::random(&mut rng)).collect();
        let (closed, held) = evaluate_both(p, q, &point)?;
        agree &= closed == held;
    }
    Ok(RandomizedAgreement { trials, degree_bound, agree })
}

/// `ε∘μᵏ` on crossings for `k = 0..=k_max`, computed by scalar recurrences.
///
/// `powers[k][g]` is `ε(μᵏ(g))`; every step only needs `ε∘μᵏ⁻¹` on crossings.
#[derive(Debug, Clone)]
pub struct EpsPowers {
    p: u32,
    q: u32,
    powers: Vec<Vec<Gf2>>,
}

impl EpsPowers {
    pub fn new(p: u32, q: u32, x: &Augmentation, k_max: usize) -> Result<Self> {
        let b = require_torus(p, q)?;
        let w = b.len();
        let mut powers = vec![(0..w as u32).map(|g| x.eps(GenId(g))).collect::<Vec<_>>()];
        for _ in 0..k_max {
            let prev = powers.last().unwrap();
            let tables = CmTables::evaluated(&b, |g| prev[g.0 as usize]);
            let mut next = vec![Gf2::ZERO; w];
            for n in 1..=p {
                for m in 1..q {
                    let g = torus_gen(q, m, n).0 as usize;
                    next[g] = if n >= 2 {
                        prev[torus_gen(q, m, n - 1).0 as usize]
                    } else {
                        *tables.c(q as usize, m as usize)
                    };
                }
            }
            powers.push(next);
        }
        Ok(EpsPowers { p, q, powers })
    }

    pub fn get(&self, k: usize, g: GenId) -> Gf2 {
        self.powers[k][g.0 as usize]
    }

    pub fn at(&self, k: usize) -> &[Gf2] {
        &self.powers[k]
    }

    pub fn max_power(&self) -> usize {
        self.powers.len() - 1
    }

    /// `ε(μᵏ(b[m,p]))` for `k = 0..=max_power`.
    pub fn sequence_of(&self, m: u32) -> Vec<u8> {
        let g = torus_gen(self.q, m, self.p);
        (0..self.powers.len()).map(|k| self.get(k, g).bit()).collect()
    }

    /// Smallest `k ≥ 1` with `ε∘μᵏ = ε` on every crossing.
    pub fn first_return(&self) -> Option<usize> {
        (1..self.powers.len()).find(|&k| self.powers[k] == self.powers[0])
    }
}
