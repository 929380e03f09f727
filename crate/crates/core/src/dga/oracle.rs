//! Direct summation of `C` and `M` over enumerated admissible sequences.
//!
//! Independent of the recurrences in [`super::cm`]; only practical for a
//! handful of strands.

use super::admissible::enumerate_d;
use super::paths::Matrix;
use crate::error::Result;
use crate::z2poly::Ring;

fn chain_product<R: Ring>(b: &Matrix<R>, chain: &[u32]) -> R {
    chain
        .windows(2)
        .fold(R::one(), |acc, w| acc.mul(b.get(w[0] as usize, w[1] as usize)))
}

/// `Σ_{s ∈ D_n} B(i,s₁)···B(s_last,j)`.
pub fn direct_n<R: Ring>(b: &Matrix<R>, n: u32, i: u32, j: u32, max_n: u32) -> Result<R> {
    let mut sum = R::zero();
    for s in enumerate_d(n, max_n)? {
        let mut chain = Vec::with_capacity(s.len() + 2);
        chain.push(i);
        chain.extend_from_slice(&s);
        chain.push(j);
        sum = sum.add(&chain_product(b, &chain));
    }
    Ok(sum)
}

pub fn direct_m<R: Ring>(b: &Matrix<R>, i: u32, j: u32, max_n: u32) -> Result<R> {
    direct_n(b, i.min(j), i, j, max_n)
}

/// `C(i,j)`: for `i > j` the sum runs over sequences of `D_i` ending in `j`;
/// on the diagonal it is `C(m,m)`.
pub fn direct_c<R: Ring>(b: &Matrix<R>, i: u32, j: u32, max_n: u32) -> Result<R> {
    if i == j {
        return direct_n(b, i, i, i, max_n);
    }
    let mut sum = R::zero();
    for s in enumerate_d(i, max_n)? {
        if s.last() != Some(&j) {
            continue;
        }
        let mut chain = Vec::with_capacity(s.len() + 1);
        chain.push(i);
        chain.extend_from_slice(&s);
        sum = sum.add(&chain_product(b, &chain));
    }
    Ok(sum)
}
