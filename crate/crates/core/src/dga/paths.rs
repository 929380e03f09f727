//! Path polynomials `B_{i,j}` as entries of a product of transfer matrices.

use std::fmt;

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::z2poly::{GenId, Poly, Ring, Word};

/// Word length above which the explicit path walk refuses to run.
pub const DEFAULT_MAX_ORACLE_WORD: usize = 14;

/// Dense square matrix with 1-based accessors.
#[derive(Clone, PartialEq)]
pub struct Matrix<R> {
    size: usize,
    data: Vec<R>,
}

impl<R: Ring> Matrix<R> {
    pub fn identity(size: usize) -> Self {
        let mut data = vec![R::zero(); size * size];
        for k in 0..size {
            data[k * size + k] = R::one();
        }
        Matrix { size, data }
    }

    pub fn from_fn<F: FnMut(usize, usize) -> R>(size: usize, mut f: F) -> Self {
        let mut data = Vec::with_capacity(size * size);
        for i in 1..=size {
            for j in 1..=size {
                data.push(f(i, j));
            }
        }
        Matrix { size, data }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.data[(i - 1) * self.size + (j - 1)]
    }

    pub fn set(&mut self, i: usize, j: usize, value: R) {
        self.data[(i - 1) * self.size + (j - 1)] = value;
    }

    pub fn map<S: Ring, F: Fn(&R) -> S>(&self, f: F) -> Matrix<S> {
        Matrix {
            size: self.size,
            data: self.data.iter().map(f).collect(),
        }
    }

    /// Right-multiplies by the transfer matrix of a letter on rows
    /// `(m, m+1)`: identity except the block `[[x, 1], [1, 0]]`.
    fn apply_letter(&mut self, m: usize, x: &R) {
        for i in 1..=self.size {
            let col_m = self.get(i, m).clone();
            let col_next = self.get(i, m + 1).clone();
            self.set(i, m, col_m.mul(x).add(&col_next));
            self.set(i, m + 1, col_m);
        }
    }
}

impl<R: fmt::Debug> fmt::Debug for Matrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<&[R]> = self.data.chunks(self.size.max(1)).collect();
        f.debug_list().entries(rows).finish()
    }
}

/// `B` evaluated in any ring: crossing `g` contributes `value(g)`.
pub fn path_matrix<R, F>(b: &BraidWord, value: F) -> Matrix<R>
where
    R: Ring,
    F: Fn(GenId) -> R,
{
    let mut acc = Matrix::identity(b.strands() as usize);
    for (&m, &id) in b.letters().iter().zip(b.ids()) {
        acc.apply_letter(m as usize, &value(id));
    }
    acc
}

/// All `B_{i,j}` as polynomials in the crossing generators.
pub fn path_polys(b: &BraidWord) -> Matrix<Poly> {
    path_matrix(b, Poly::gen)
}

/// `B_{i,j}` by walking every path explicitly.
///
/// From row `m` at a letter on rows `(m, m+1)` a path either turns, staying
/// in row `m` and recording the crossing, or follows its strand down; from
/// row `m + 1` it can only follow its strand up.
pub fn enumerate_paths_oracle(b: &BraidWord, i: u32, j: u32, max_len: usize) -> Result<Poly> {
    if b.len() > max_len {
        return Err(Error::GuardExceeded {
            what: "word length for path enumeration",
            limit: max_len,
            got: b.len(),
        });
    }
    if i < 1 || j < 1 || i > b.strands() || j > b.strands() {
        return Err(Error::Precondition(format!(
            "endpoints ({i}, {j}) outside 1..={}",
            b.strands()
        )));
    }
    let mut found = Vec::new();
    let mut turned = Vec::new();
    walk(b, 0, i, j, &mut turned, &mut found);
    Ok(Poly::from_words(found))
}

fn walk(b: &BraidWord, k: usize, row: u32, target: u32, turned: &mut Vec<GenId>, out: &mut Vec<Word>) {
    if k == b.len() {
        if row == target {
            out.push(Word::new(turned));
        }
        return;
    }
    let m = b.letters()[k];
    if row == m {
        turned.push(b.ids()[k]);
        walk(b, k + 1, m, target, turned, out);
        turned.pop();
        walk(b, k + 1, m + 1, target, turned, out);
    } else if row == m + 1 {
        walk(b, k + 1, m, target, turned, out);
    } else {
        walk(b, k + 1, row, target, turned, out);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::z2poly::Gf2;

    fn x(n: u32) -> Poly {
        Poly::gen(GenId(n - 1))
    }

    #[test]
    fn trefoil_path_polys() {
        let b = BraidWord::torus(3, 2).unwrap();
        let bm = path_polys(&b);
        let x1x2 = &x(1) * &x(2);
        assert_eq!(*bm.get(1, 1), &(&x(1) + &x(3)) + &(&x1x2 * &x(3)));
        assert_eq!(*bm.get(2, 2), x(2));
        assert_eq!(*bm.get(1, 2), &Poly::one() + &x1x2);
        assert_eq!(*bm.get(2, 1), &Poly::one() + &(&x(2) * &x(3)));
    }

    #[test]
    fn trivial_braid_is_identity() {
        let b = BraidWord::parse(1, "").unwrap();
        assert!(path_polys(&b).get(1, 1).is_one());
        assert!(enumerate_paths_oracle(&b, 1, 1, 14).unwrap().is_one());
    }

    #[test]
    fn oracle_matches_transfer_product() {
        for b in [
            BraidWord::torus(3, 2).unwrap(),
            BraidWord::torus(2, 5).unwrap(),
            BraidWord::parse(4, "1,3,2,2,1,3,2").unwrap(),
        ] {
            let bm = path_polys(&b);
            for i in 1..=b.strands() {
                for j in 1..=b.strands() {
                    let oracle = enumerate_paths_oracle(&b, i, j, 14).unwrap();
                    assert_eq!(&oracle, bm.get(i as usize, j as usize), "{b} ({i},{j})");
                }
            }
        }
    }

    #[test]
    fn oracle_guard() {
        let b = BraidWord::torus(8, 3).unwrap();
        assert!(matches!(
            enumerate_paths_oracle(&b, 1, 1, 14),
            Err(Error::GuardExceeded { got: 16, .. })
        ));
    }

    #[test]
    fn scalar_path_matches_symbolic_evaluation() {
        let b = BraidWord::torus(3, 4).unwrap();
        let eps = |g: GenId| Gf2(matches!(g.0, 2 | 4 | 6));
        let scalar = path_matrix(&b, eps);
        let symbolic = path_polys(&b);
        for i in 1..=4 {
            for j in 1..=4 {
                let v = symbolic.get(i, j).evaluate(|g| Some(eps(g))).unwrap();
                assert_eq!(*scalar.get(i, j), v);
            }
        }
    }
}
