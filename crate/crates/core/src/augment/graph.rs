use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::braid::Permutation;
use crate::error::{Error, Result};

/// Chord labelled `label` from `plus` to `minus`; a loop edge when both
/// ends equal the label.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Chord {
    pub label: u32,
    pub plus: u32,
    pub minus: u32,
}

impl Chord {
    pub fn is_loop(&self) -> bool {
        self.plus == self.minus
    }
}

/// Directed edge set on vertices `1..=q`.
pub type EdgeSet = BTreeSet<(u32, u32)>;

/// The augmented graph of a permutation: cycle edges `s → σ(s)` plus one
/// chord per non-maximal element of each cycle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AugmentedGraph {
    sigma: Permutation,
    chords: Vec<Chord>,
}

pub fn augmented_graph(sigma: &Permutation) -> AugmentedGraph {
    let inverse = sigma.inverse();
    let mut chords = Vec::new();
    for cycle in sigma.cycles() {
        let top = *cycle.iter().max().unwrap();
        for &p in &cycle {
            if p == top {
                continue;
            }
            let plus = last_before_exceeding(p, |v| sigma.apply(v));
            let minus = last_before_exceeding(p, |v| inverse.apply(v));
            chords.push(Chord {
                label: p,
                plus,
                minus,
            });
        }
    }
    chords.sort_by_key(|c| c.label);
    AugmentedGraph {
        sigma: sigma.clone(),
        chords,
    }
}

/// Steps from `p` until the next element exceeds `p`; returns the element
/// just before it.
fn last_before_exceeding(p: u32, step: impl Fn(u32) -> u32) -> u32 {
    let mut v = p;
    loop {
        let next = step(v);
        if next > p {
            return v;
        }
        v = next;
    }
}

impl AugmentedGraph {
    pub fn size(&self) -> u32 {
        self.sigma.size()
    }

    pub fn sigma(&self) -> &Permutation {
        &self.sigma
    }

    pub fn chords(&self) -> &[Chord] {
        &self.chords
    }

    pub fn chord(&self, label: u32) -> Option<&Chord> {
        self.chords.iter().find(|c| c.label == label)
    }

    pub fn cycle_edges(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        (1..=self.size()).map(|s| (s, self.sigma.apply(s)))
    }

    pub fn edges(&self) -> EdgeSet {
        self.cycle_edges()
            .chain(self.chords.iter().map(|c| (c.plus, c.minus)))
            .collect()
    }

    /// Out-neighbours of `v`, cycle edge first.
    pub fn successors(&self, v: u32) -> Vec<u32> {
        let mut out = vec![self.sigma.apply(v)];
        out.extend(self.chords.iter().filter(|c| c.plus == v).map(|c| c.minus));
        out
    }

    pub fn is_cycle_max(&self, p: u32) -> bool {
        let idx = self.sigma.cycle_index();
        let c = idx[p as usize - 1];
        (1..=self.size())
            .filter(|&v| idx[v as usize - 1] == c)
            .all(|v| v <= p)
    }

    /// The loop of `p` as the vertex sequence starting at `p` (the closing
    /// return to `p` is implicit).
    pub fn loop_of(&self, p: u32) -> Result<Vec<u32>> {
        if p < 1 || p > self.size() {
            return Err(Error::Precondition(format!("vertex {p} outside 1..={}", self.size())));
        }
        let mut seq = vec![p];
        let Some(chord) = self.chord(p) else {
            let mut v = self.sigma.apply(p);
            while v != p {
                seq.push(v);
                v = self.sigma.apply(v);
            }
            return Ok(seq);
        };
        let mut v = p;
        while v != chord.plus {
            v = self.sigma.apply(v);
            seq.push(v);
        }
        v = chord.minus;
        while v != p {
            seq.push(v);
            v = self.sigma.apply(v);
        }
        Ok(seq)
    }

    /// Largest vertex of the loop of `r` other than `r` itself.
    pub fn second_largest_on_loop(&self, r: u32) -> Result<Option<u32>> {
        Ok(self.loop_of(r)?.into_iter().filter(|&v| v != r).max())
    }

    /// DOT rendering: cycle edges solid, chords dashed with their label.
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "digraph {name} {{");
        for v in 1..=self.size() {
            let _ = writeln!(out, "  {v};");
        }
        for (s, t) in self.cycle_edges() {
            let _ = writeln!(out, "  {s} -> {t} [style=solid];");
        }
        for c in &self.chords {
            let _ = writeln!(
                out,
                "  {} -> {} [style=dashed, label=\"{}\"];",
                c.plus, c.minus, c.label
            );
        }
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chords(g: &AugmentedGraph) -> Vec<(u32, u32, u32)> {
        g.chords().iter().map(|c| (c.plus, c.minus, c.label)).collect()
    }

    #[test]
    fn transposition_has_one_loop_edge() {
        let g = augmented_graph(&Permutation::from_images(vec![2, 1]).unwrap());
        assert_eq!(chords(&g), vec![(1, 1, 1)]);
        assert_eq!(g.edges(), EdgeSet::from([(1, 2), (2, 1), (1, 1)]));
    }

    #[test]
    fn torus_25_and_34_chords() {
        let g = augmented_graph(&Permutation::torus(2, 5));
        assert_eq!(chords(&g), vec![(1, 1, 1), (2, 2, 2), (1, 3, 3), (2, 3, 4)]);
        let g = augmented_graph(&Permutation::torus(3, 4));
        assert_eq!(chords(&g), vec![(1, 1, 1), (2, 1, 2), (3, 1, 3)]);
    }

    #[test]
    fn loops() {
        let g = augmented_graph(&Permutation::from_images(vec![2, 1]).unwrap());
        assert_eq!(g.loop_of(2).unwrap(), vec![2, 1]);
        assert_eq!(g.loop_of(1).unwrap(), vec![1]);
        let g = augmented_graph(&Permutation::torus(3, 4));
        assert_eq!(g.loop_of(3).unwrap(), vec![3, 1, 2]);
        let g = augmented_graph(&Permutation::torus(2, 5));
        assert_eq!(g.loop_of(3).unwrap(), vec![3, 1]);
        assert_eq!(g.loop_of(5).unwrap(), vec![5, 3, 1, 4, 2]);
    }

    #[test]
    fn dot_marks_chords_dashed() {
        let g = augmented_graph(&Permutation::torus(3, 4));
        let dot = g.to_dot("gamma");
        assert!(dot.contains("2 -> 1 [style=dashed, label=\"2\"]"));
        assert!(dot.contains("4 -> 1 [style=solid]"));
    }
}
