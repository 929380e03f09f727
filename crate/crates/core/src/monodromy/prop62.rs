//! The images of `B`, `C` and `M` under `μ`.
//!
//! These identities hold in homology. Rows of the `B` identity with `i ≥ 2`
//! only involve relabelling and are compared as polynomials; every row is
//! also compared after applying `ε`, which is well defined on homology.

use serde::{Deserialize, Serialize};

use super::{check_symbolic_size, closed_form_mu_of, require_torus, torus_gen, EpsPowers, DEFAULT_MAX_SYMBOLIC_CROSSINGS};
use crate::augment::Augmentation;
use crate::dga::{path_polys, CmTables};
use crate::error::{Error, Result};
use crate::z2poly::{GenId, GeneratorMap, Gf2, Poly, Ring};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum IdentityLevel {
    Chain,
    Augmented,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityRow {
    /// 2 for `B`, 3 for `C`, 4 for `M`.
    pub equation: u8,
    pub lhs: String,
    pub rhs: String,
    pub level: IdentityLevel,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Prop62Report {
    pub p: u32,
    pub q: u32,
    pub rows: Vec<IdentityRow>,
    /// Why polynomial rows were left out, if they were.
    pub chain_skipped: Option<String>,
}

impl Prop62Report {
    pub fn all_hold(&self) -> bool {
        self.rows.iter().all(|r| r.holds)
    }

    pub fn count(&self, level: IdentityLevel) -> usize {
        self.rows.iter().filter(|r| r.level == level).count()
    }

    pub fn failures(&self) -> impl Iterator<Item = &IdentityRow> {
        self.rows.iter().filter(|r| !r.holds)
    }
}

/// Right-hand side of one identity, over any ring.
enum Rhs {
    B(u32, u32),
    BTimesCrossing(u32, u32, u32, u32),
    Crossing(u32),
    C(u32, u32),
    M(u32, u32),
}

impl Rhs {
    fn render(&self, p: u32) -> String {
        match *self {
            Rhs::B(i, j) => format!("B[{i},{j}]"),
            Rhs::BTimesCrossing(i, j, i2, m) => format!("B[{i},{j}] + B[{i2},q]*b[{m},{p}]"),
            Rhs::Crossing(m) => format!("b[{m},{p}]"),
            Rhs::C(i, j) => format!("C[{i},{j}]"),
            Rhs::M(i, j) => format!("M[{i},{j}]"),
        }
    }

    fn eval<R: Ring>(&self, t: &CmTables<R>, crossing: impl Fn(u32) -> R) -> R {
        let u = |x: u32| x as usize;
        match *self {
            Rhs::B(i, j) => t.b(u(i), u(j)).clone(),
            Rhs::BTimesCrossing(i, j, i2, m) => {
                let q = t.strands();
                t.b(u(i), u(j)).add(&t.b(u(i2), q).mul(&crossing(m)))
            }
            Rhs::Crossing(m) => crossing(m),
            Rhs::C(i, j) => t.c(u(i), u(j)).clone(),
            Rhs::M(i, j) => t.m(u(i), u(j)).clone(),
        }
    }
}

enum Lhs {
    B(u32, u32),
    C(u32, u32),
    M(u32, u32),
}

impl Lhs {
    fn equation(&self) -> u8 {
        match self {
            Lhs::B(..) => 2,
            Lhs::C(..) => 3,
            Lhs::M(..) => 4,
        }
    }

    fn render(&self) -> String {
        match *self {
            Lhs::B(i, j) => format!("mu(B[{i},{j}])"),
            Lhs::C(i, j) => format!("mu(C[{i},{j}])"),
            Lhs::M(i, j) => format!("mu(M[{i},{j}])"),
        }
    }

    fn eval<R: Ring>(&self, t: &CmTables<R>) -> R {
        let u = |x: u32| x as usize;
        match *self {
            Lhs::B(i, j) => t.b(u(i), u(j)).clone(),
            Lhs::C(i, j) => t.c(u(i), u(j)).clone(),
            Lhs::M(i, j) => t.m(u(i), u(j)).clone(),
        }
    }
}

fn identities(q: u32) -> Vec<(Lhs, Rhs)> {
    let mut out = Vec::new();
    for i in 1..=q {
        for j in 1..=q {
            let rhs = match (i, j) {
                (1, 1) => continue,
                (1, j) => Rhs::Crossing(j - 1),
                (i, 1) => Rhs::B(i - 1, q),
                (i, j) => Rhs::BTimesCrossing(i - 1, j - 1, i - 1, j - 1),
            };
            out.push((Lhs::B(i, j), rhs));
        }
    }
    for i in 2..=q {
        for j in 1..i {
            let rhs = if j >= 2 { Rhs::C(i - 1, j - 1) } else { Rhs::M(i - 1, q) };
            out.push((Lhs::C(i, j), rhs));
        }
    }
    for i in 2..=q {
        for j in 2..=q {
            if i != j {
                out.push((Lhs::M(i, j), Rhs::M(i - 1, j - 1)));
            }
        }
    }
    out
}

pub fn verify_prop62(p: u32, q: u32) -> Result<Prop62Report> {
    verify_prop62_with(p, q, DEFAULT_MAX_SYMBOLIC_CROSSINGS)
}

/// Checks every identity under `ε`, and the `B` rows with `i ≥ 2` as
/// polynomials when the word has at most `max_symbolic` crossings.
pub fn verify_prop62_with(p: u32, q: u32, max_symbolic: usize) -> Result<Prop62Report> {
    let b = require_torus(p, q)?;
    let x = Augmentation::construct(&b)?;
    let powers = EpsPowers::new(p, q, &x, 1)?;
    let before = x.scalar_tables(&b);
    let after = CmTables::evaluated(&b, |g| powers.get(1, g));
    let eps_crossing = |m: u32| x.eps(torus_gen(q, m, p));

    let mut rows = Vec::new();
    let ids = identities(q);
    for (lhs, rhs) in &ids {
        let l: Gf2 = lhs.eval(&after);
        let r: Gf2 = rhs.eval(&before, eps_crossing);
        rows.push(IdentityRow {
            equation: lhs.equation(),
            lhs: lhs.render(),
            rhs: rhs.render(p),
            level: IdentityLevel::Augmented,
            holds: l == r,
        });
    }

    let chain_skipped = match check_symbolic_size(&b, max_symbolic) {
        Err(Error::GuardExceeded { limit, got, .. }) => {
            Some(format!("{got} crossings exceed the symbolic limit of {limit}"))
        }
        Err(e) => return Err(e),
        Ok(()) => {
            // these rows only read B, so the full symbolic tables are not built
            let paths = path_polys(&b);
            let bq = |i: u32, j: u32| paths.get(i as usize, j as usize).clone();
            // rows i >= 2 of B never meet the first period, whose images
            // C(q,m) are by far the largest part of μ
            let first: Vec<GenId> = (1..q).map(|m| torus_gen(q, m, 1)).collect();
            let meets_first = (2..=q).any(|i| (1..=q).any(|j| first.iter().any(|&g| bq(i, j).generators().contains(&g))));
            let mu = if meets_first {
                closed_form_mu_of(&b)?
            } else {
                let mut shift = GeneratorMap::new();
                for n in 2..=p {
                    for m in 1..q {
                        shift.insert(torus_gen(q, m, n), Poly::gen(torus_gen(q, m, n - 1)));
                    }
                }
                shift
            };
            let gen = |m: u32| Poly::gen(torus_gen(q, m, p));
            for (lhs, rhs) in &ids {
                let Lhs::B(i, j) = *lhs else { continue };
                if i < 2 {
                    continue;
                }
                let l = mu.apply(&bq(i, j))?;
                let r = match *rhs {
                    Rhs::B(i, j) => bq(i, j),
                    Rhs::BTimesCrossing(i, j, i2, m) => &bq(i, j) + &(&bq(i2, q) * &gen(m)),
                    Rhs::Crossing(m) => gen(m),
                    Rhs::C(..) | Rhs::M(..) => unreachable!("B rows have B or crossing right-hand sides"),
                };
                rows.push(IdentityRow {
                    equation: 2,
                    lhs: lhs.render(),
                    rhs: rhs.render(p),
                    level: IdentityLevel::Chain,
                    holds: l == r,
                });
            }
            None
        }
    };
    Ok(Prop62Report {
        p,
        q,
        rows,
        chain_skipped,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monodromy::closed_form_mu;

    #[test]
    fn torus_34_rows() {
        let r = verify_prop62(3, 4).unwrap();
        assert!(r.chain_skipped.is_none());
        assert!(r.all_hold(), "{:?}", r.failures().collect::<Vec<_>>());
        assert_eq!(r.count(IdentityLevel::Chain), 12);
    }

    #[test]
    fn b32_is_exact() {
        let b = require_torus(3, 4).unwrap();
        let mu = closed_form_mu(3, 4).unwrap();
        let t = CmTables::symbolic(&b);
        let expected = t.b(2, 1) + &(t.b(2, 4) * &Poly::gen(torus_gen(4, 1, 3)));
        assert_eq!(mu.apply(t.b(3, 2)).unwrap(), expected);
    }

    #[test]
    fn guard_leaves_augmented_rows() {
        let r = verify_prop62_with(4, 5, 4).unwrap();
        assert!(r.chain_skipped.is_some());
        assert_eq!(r.count(IdentityLevel::Chain), 0);
        assert!(r.all_hold());
    }

    #[test]
    fn several_shapes_hold() {
        for (p, q) in [(2, 3), (3, 2), (2, 5), (5, 3), (4, 7), (7, 4)] {
            let r = verify_prop62_with(p, q, 12).unwrap();
            assert!(r.all_hold(), "({p},{q}) {:?}", r.failures().collect::<Vec<_>>());
        }
    }
}
