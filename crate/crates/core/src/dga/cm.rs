//! The sums `C_{i,j}`, `C_{m,m}` and `M_{i,j}` of products of path
//! polynomials indexed by admissible sequences.
//!
//! Summing over `D_n` directly is hopeless beyond tiny `n`, so everything
//! goes through the partial sums
//!
//! ```text
//! N⁽ⁿ⁾(i,j) = Σ_{s ∈ D_n} B(i,s₁)·B(s₁,s₂)···B(s_last,j)
//! N⁽¹⁾ = B,   N⁽ⁿ⁾(i,j) = N⁽ⁿ⁻¹⁾(i,j) + N⁽ⁿ⁻¹⁾(i,n−1)·N⁽ⁿ⁻¹⁾(n−1,j)
//! ```
//!
//! splitting `D_n` by the at most one occurrence of `n − 1`. Then
//! `M(i,j) = N⁽ᵐⁱⁿ⁽ⁱ'ʲ⁾⁾(i,j)` and `C(m,m) = N⁽ᵐ⁾(m,m)`. For `i > j` the
//! sequences must end in `j`:
//!
//! ```text
//! Ĉ⁽ʲ⁺¹⁾(x,j) = N⁽ʲ⁾(x,j),   Ĉ⁽ⁿ⁺¹⁾(x,j) = Ĉ⁽ⁿ⁾(x,j) + N⁽ⁿ⁾(x,n)·Ĉ⁽ⁿ⁾(n,j)
//! C(i,j) = Ĉ⁽ⁱ⁾(i,j)
//! ```
//!
//! The recurrences only add and multiply, so they run unchanged on GF(2)
//! scalars.

use super::paths::{path_matrix, Matrix};
use crate::braid::BraidWord;
use crate::z2poly::{GenId, Poly, Ring};

/// Immutable `N`, `C` and `M` tables for one braid.
#[derive(Debug, Clone)]
pub struct CmTables<R> {
    /// `levels[n - 1]` is `N⁽ⁿ⁾`, for `n = 1..=q`.
    levels: Vec<Matrix<R>>,
    /// `C(i,j)` for `i > j`; other entries unused.
    c_below: Matrix<R>,
}

impl<R: Ring> CmTables<R> {
    pub fn from_paths(b: Matrix<R>) -> Self {
        let q = b.size();
        let levels = levels(b, q);
        let c_below = c_below(&levels, q);
        CmTables { levels, c_below }
    }

    pub fn strands(&self) -> usize {
        self.levels[0].size()
    }

    pub fn b(&self, i: usize, j: usize) -> &R {
        self.levels[0].get(i, j)
    }

    pub fn paths(&self) -> &Matrix<R> {
        &self.levels[0]
    }

    /// `N⁽ⁿ⁾(i,j)`, stored only for `min(i, j) >= n`.
    pub fn n(&self, level: usize, i: usize, j: usize) -> &R {
        assert!(i.min(j) >= level, "N^({level})({i},{j}) is not stored");
        self.levels[level - 1].get(i, j)
    }

    pub fn m(&self, i: usize, j: usize) -> &R {
        self.n(i.min(j), i, j)
    }

    /// `C(i,j)` for `i >= j`; the diagonal is `C(m,m)`.
    pub fn c(&self, i: usize, j: usize) -> &R {
        assert!(i >= j, "C(i,j) is only defined for i >= j, got ({i},{j})");
        if i == j {
            self.n(i, i, i)
        } else {
            self.c_below.get(i, j)
        }
    }

    /// `1 + C(m,m)`, the differential of the `m`-th index-1 generator.
    pub fn boundary(&self, m: usize) -> R {
        R::one().add(self.c(m, m))
    }
}

/// `N⁽¹⁾ ..= N⁽ᵗᵒᵖ⁾`.
fn levels<R: Ring>(b: Matrix<R>, top: usize) -> Vec<Matrix<R>> {
    let q = b.size();
    let mut levels = Vec::with_capacity(top.max(1));
    levels.push(b);
    for n in 2..=top {
        let prev = levels.last().unwrap();
        let pivot = n - 1;
        // only entries with min(i, j) >= n are ever read, and they only
        // depend on entries of the same kind one level down
        let next = Matrix::from_fn(q, |i, j| {
            if i.min(j) < n {
                return R::zero();
            }
            let through = prev.get(i, pivot).mul(prev.get(pivot, j));
            prev.get(i, j).add(&through)
        });
        levels.push(next);
    }
    levels
}

/// `C(i,j)` for `i > j`; reads `levels` up to `N⁽q⁻¹⁾`.
fn c_below<R: Ring>(levels: &[Matrix<R>], q: usize) -> Matrix<R> {
    let mut c_below = Matrix::from_fn(q, |_, _| R::zero());
    for j in 1..q {
        // hat[x] holds Ĉ⁽ⁿ⁾(x, j); only rows x >= n are ever read
        let mut hat: Vec<R> = (0..=q)
            .map(|x| {
                if x > j {
                    levels[j - 1].get(x, j).clone()
                } else {
                    R::zero()
                }
            })
            .collect();
        c_below.set(j + 1, j, hat[j + 1].clone());
        for n in (j + 1)..q {
            let pivot = hat[n].clone();
            let level = &levels[n - 1];
            for x in (n + 1)..=q {
                let through = level.get(x, n).mul(&pivot);
                hat[x] = hat[x].add(&through);
            }
            c_below.set(n + 1, j, hat[n + 1].clone());
        }
    }
    c_below
}

/// `C(q,j)` for `j = 1..q`, skipping `N⁽q⁾`, whose only new entry
/// `C(q,q)` is by far the largest.
pub fn c_last_row<R: Ring>(b: Matrix<R>) -> Vec<R> {
    let q = b.size();
    let below = c_below(&levels(b, q.saturating_sub(1).max(1)), q);
    (1..q).map(|j| below.get(q, j).clone()).collect()
}

/// `M(i,j)` alone. `N⁽ⁿ⁾` restricted to indices `<= k` only reads `B` on
/// the same block, so the rest of the tables is never built.
pub fn m_entry<R: Ring>(b: &Matrix<R>, i: usize, j: usize) -> R {
    let k = i.max(j);
    let mut level = Matrix::from_fn(k, |x, y| b.get(x, y).clone());
    for n in 2..=i.min(j) {
        let pivot = n - 1;
        level = Matrix::from_fn(k, |x, y| {
            if x.min(y) < n {
                return R::zero();
            }
            let through = level.get(x, pivot).mul(level.get(pivot, y));
            level.get(x, y).add(&through)
        });
    }
    level.get(i, j).clone()
}

impl CmTables<Poly> {
    pub fn symbolic(b: &BraidWord) -> Self {
        CmTables::from_paths(path_matrix(b, Poly::gen))
    }
}

impl<R: Ring> CmTables<R> {
    /// Tables with every crossing replaced by `value(crossing)`.
    pub fn evaluated<F: Fn(GenId) -> R>(b: &BraidWord, value: F) -> Self {
        CmTables::from_paths(path_matrix(b, value))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(n: u32) -> Poly {
        Poly::gen(GenId(n - 1))
    }

    #[test]
    fn c31_matches_displayed_expansion() {
        let b = BraidWord::parse(3, "1,2,1,2,2").unwrap();
        let t = CmTables::symbolic(&b);
        let expected = &(t.b(3, 1) + &(t.b(3, 2) * t.b(2, 1))) + &(&(t.b(3, 1) * t.b(1, 2)) * t.b(2, 1));
        assert_eq!(*t.c(3, 1), expected);
    }

    #[test]
    fn last_row_agrees_with_full_tables() {
        for (q, word) in [(4, "1,2,3,1,2,3,1,2,3"), (3, "2,1,1,2"), (2, "1,1,1")] {
            let b = BraidWord::parse(q, word).unwrap();
            let t = CmTables::symbolic(&b);
            let row = c_last_row(t.paths().clone());
            let q = q as usize;
            assert_eq!(row, (1..q).map(|j| t.c(q, j).clone()).collect::<Vec<_>>(), "{word}");
        }
    }

    #[test]
    fn single_entries_agree_with_full_tables() {
        for word in ["1,2,3,1,2,3,1,2,3", "2,3,1,3,2,2,1", "3,1,2,3,3,1"] {
            let b = BraidWord::parse(4, word).unwrap();
            let t = CmTables::symbolic(&b);
            for i in 1..=4 {
                for j in 1..=4 {
                    assert_eq!(m_entry(t.paths(), i, j), *t.m(i, j), "{word} M({i},{j})");
                }
            }
        }
    }

    #[test]
    fn trefoil_tables() {
        let t = CmTables::symbolic(&BraidWord::torus(3, 2).unwrap());
        let one = Poly::one();
        let b21 = &one + &(&x(2) * &x(3));
        let b12 = &one + &(&x(1) * &x(2));
        assert_eq!(*t.c(2, 1), b21);
        assert_eq!(*t.c(2, 2), &x(2) + &(&b21 * &b12));
        assert_eq!(t.boundary(1), &(&(&one + &x(1)) + &x(3)) + &(&(&x(1) * &x(2)) * &x(3)));
    }

    #[test]
    fn definitional_identities() {
        let b = BraidWord::parse(4, "1,2,3,1,2,2,3,1").unwrap();
        let t = CmTables::symbolic(&b);
        for k in 1..=4 {
            assert_eq!(t.m(1, k), t.b(1, k));
            assert_eq!(t.m(k, 1), t.b(k, 1));
            assert_eq!(t.m(k, k), t.c(k, k));
            if k >= 2 {
                assert_eq!(t.m(k, k - 1), t.c(k, k - 1));
            }
        }
    }

    #[test]
    fn unknot_boundary_vanishes() {
        let t = CmTables::symbolic(&BraidWord::parse(1, "").unwrap());
        assert!(t.boundary(1).is_zero());
    }
}
