//! Exhaustive searches for directed walks with admissible vertex sequences.

use super::graph::AugmentedGraph;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WalkCount {
    pub count: usize,
    /// Intermediate vertex sequences of every walk found.
    pub witnesses: Vec<Vec<u32>>,
}

/// Would appending `v` to the admissible `seq` keep it admissible?
fn extends_admissibly(seq: &[u32], v: u32) -> bool {
    match seq.iter().rposition(|&x| x == v) {
        None => true,
        Some(k) => seq[k + 1..].iter().any(|&x| x > v),
    }
}

/// Walks from `from` to `to` whose intermediate vertices are `< bound` and
/// form an admissible sequence.
fn admissible_walks(g: &AugmentedGraph, from: u32, to: u32, bound: u32) -> WalkCount {
    let mut witnesses = Vec::new();
    let mut seq = Vec::new();
    dfs(g, from, to, bound, &mut seq, &mut witnesses);
    WalkCount {
        count: witnesses.len(),
        witnesses,
    }
}

fn dfs(g: &AugmentedGraph, at: u32, to: u32, bound: u32, seq: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    for next in g.successors(at) {
        if next == to {
            out.push(seq.clone());
        }
        if next < bound && extends_admissibly(seq, next) {
            seq.push(next);
            dfs(g, next, to, bound, seq, out);
            seq.pop();
        }
    }
}

/// Directed loops at `p` whose intermediate vertex sequence lies in `D_p`.
pub fn admissible_loop_oracle(g: &AugmentedGraph, p: u32) -> Result<WalkCount> {
    if p < 1 || p > g.size() {
        return Err(Error::Precondition(format!("vertex {p} outside 1..={}", g.size())));
    }
    Ok(admissible_walks(g, p, p, p))
}

/// Paths `p → r` with intermediates in `D_p`, for a cycle edge `r → p`
/// with `p < r`.
pub fn edge_reversal_oracle(g: &AugmentedGraph, p: u32, r: u32) -> Result<usize> {
    if r < 1 || r > g.size() || g.sigma().apply(r) != p || p >= r {
        return Err(Error::Precondition(format!(
            "edge reversal needs σ(r) = p < r, got p = {p}, r = {r}"
        )));
    }
    Ok(admissible_walks(g, p, r, p).count)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::augment::graph::augmented_graph;
    use crate::braid::Permutation;

    #[test]
    fn unique_admissible_loops() {
        let g = augmented_graph(&Permutation::torus(3, 4));
        let found = admissible_loop_oracle(&g, 3).unwrap();
        assert_eq!(found.count, 1);
        assert_eq!(found.witnesses, vec![vec![1, 2]]);

        let g = augmented_graph(&Permutation::from_images(vec![2, 1]).unwrap());
        let found = admissible_loop_oracle(&g, 1).unwrap();
        assert_eq!(found.witnesses, vec![Vec::<u32>::new()]);

        let g = augmented_graph(&Permutation::torus(2, 5));
        let found = admissible_loop_oracle(&g, 5).unwrap();
        assert_eq!(found.witnesses, vec![vec![3, 1, 4, 2]]);
    }

    #[test]
    fn edge_reversals() {
        let g = augmented_graph(&Permutation::torus(3, 4));
        assert_eq!(edge_reversal_oracle(&g, 1, 4).unwrap(), 0);
        let g = augmented_graph(&Permutation::torus(2, 5));
        assert_eq!(edge_reversal_oracle(&g, 1, 3).unwrap(), 1);
        assert_eq!(edge_reversal_oracle(&g, 3, 5).unwrap(), 0);
        assert!(edge_reversal_oracle(&g, 4, 1).is_err());
        assert!(edge_reversal_oracle(&g, 2, 3).is_err());
    }

    #[test]
    fn incremental_admissibility() {
        assert!(extends_admissibly(&[1, 2], 1));
        assert!(!extends_admissibly(&[2, 1], 2));
        assert!(!extends_admissibly(&[1], 1));
    }
}
