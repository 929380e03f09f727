//! The canonical augmentation of a positive braid closure.
//!
//! For every chord `p₊ → p₋` of the augmented graph of the underlying
//! permutation, the crossing labelled `(p₊, p₋, 1)` is selected. The graph
//! realized by the selection (edge `i → j` iff `ε(B_{i,j}) = 1`) then equals
//! the augmented graph, which forces `ε(∂a_m) = 0` for every `m`.

mod euclid;
mod graph;
mod oracle;

use std::collections::BTreeSet;

pub use euclid::{diagonal_runs, euclid_blocks, period_runs, EuclidBlocks, EuclidChain};
pub use graph::{augmented_graph, AugmentedGraph, Chord, EdgeSet};
pub use oracle::{admissible_loop_oracle, edge_reversal_oracle, WalkCount};

use crate::braid::{BraidWord, Crossing, Label};
use crate::dga::{path_matrix, CmTables};
use crate::error::{Error, Result};
use crate::z2poly::{GenId, Gf2, Poly};

/// Which of several crossings with the same first two labels realizes a chord.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ThirdLabel {
    /// Third label 1, the canonical choice.
    #[default]
    First,
    Last,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Augmentation {
    crossings: BTreeSet<GenId>,
}

impl Augmentation {
    pub fn new<I: IntoIterator<Item = GenId>>(crossings: I) -> Self {
        Augmentation {
            crossings: crossings.into_iter().collect(),
        }
    }

    pub fn empty() -> Self {
        Augmentation::new([])
    }

    /// The canonical set `X`.
    pub fn construct(b: &BraidWord) -> Result<Self> {
        Self::construct_with(b, ThirdLabel::First)
    }

    pub fn construct_with(b: &BraidWord, choice: ThirdLabel) -> Result<Self> {
        Self::construct_by(b, |candidates| match choice {
            ThirdLabel::First => candidates.first().copied(),
            ThirdLabel::Last => candidates.last().copied(),
        })
    }

    /// Lets `pick` choose among all crossings labelled `(p₊, p₋, ·)`,
    /// given in order of increasing third label.
    pub fn construct_by<F>(b: &BraidWord, pick: F) -> Result<Self>
    where
        F: for<'a> Fn(&'a [&'a Crossing]) -> Option<&'a Crossing>,
    {
        let table = b.crossings();
        let graph = augmented_graph(&b.permutation());
        let mut chosen = BTreeSet::new();
        for chord in graph.chords() {
            let candidates: Vec<&Crossing> = table.with_labels(chord.plus, chord.minus).collect();
            let c = pick(&candidates).ok_or(Error::MissingCrossing {
                i: chord.plus,
                j: chord.minus,
                t: 1,
                chord: chord.label,
            })?;
            chosen.insert(c.id);
        }
        Ok(Augmentation { crossings: chosen })
    }

    pub fn crossings(&self) -> &BTreeSet<GenId> {
        &self.crossings
    }

    pub fn len(&self) -> usize {
        self.crossings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.crossings.is_empty()
    }

    pub fn contains(&self, g: GenId) -> bool {
        self.crossings.contains(&g)
    }

    /// `ε_X` on a single generator: 1 on `X`, 0 elsewhere.
    pub fn eps(&self, g: GenId) -> Gf2 {
        Gf2(self.crossings.contains(&g))
    }

    pub fn eps_evaluate(&self, p: &Poly) -> Gf2 {
        p.evaluate(|g| Some(self.eps(g)))
            .expect("ε is total on generators")
    }

    /// `ε` applied to every `B`, `C` and `M` of `b` without building polynomials.
    pub fn scalar_tables(&self, b: &BraidWord) -> CmTables<Gf2> {
        CmTables::evaluated(b, |g| self.eps(g))
    }

    pub fn labels(&self, b: &BraidWord) -> Vec<Label> {
        let table = b.crossings();
        self.crossings
            .iter()
            .filter_map(|&g| table.by_id(g).map(|c| c.label))
            .collect()
    }

    /// Checks that `X` is made of proper crossings and that `ε(∂a_m) = 0`.
    pub fn verify(&self, b: &BraidWord) -> AugmentationCheck {
        let sigma = b.permutation();
        let cycle = sigma.cycle_index();
        let table = b.crossings();
        let improper: Vec<GenId> = self
            .crossings
            .iter()
            .copied()
            .filter(|&g| match table.by_id(g) {
                Some(c) => cycle[c.label.i as usize - 1] != cycle[c.label.j as usize - 1],
                None => true,
            })
            .collect();
        let tables = self.scalar_tables(b);
        let boundaries: Vec<Gf2> = (1..=b.strands() as usize).map(|m| tables.boundary(m)).collect();
        AugmentationCheck {
            improper,
            boundaries,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AugmentationCheck {
    /// Selected generators that are not self-crossings of one component.
    pub improper: Vec<GenId>,
    /// `ε(∂a_m)` for `m = 1..=q`.
    pub boundaries: Vec<Gf2>,
}

impl AugmentationCheck {
    pub fn is_augmentation(&self) -> bool {
        self.improper.is_empty() && self.boundaries.iter().all(|v| !v.0)
    }
}

pub fn construct_augmentation(b: &BraidWord) -> Result<Augmentation> {
    Augmentation::construct(b)
}

/// Edges `i → j` with `B_{i,j} = 1` after sending `y` to 1 and every other
/// crossing to 0.
pub fn realized_graph(b: &BraidWord, y: &BTreeSet<GenId>) -> EdgeSet {
    let bm = path_matrix(b, |g| Gf2(y.contains(&g)));
    let q = b.strands();
    let mut edges = EdgeSet::new();
    for i in 1..=q {
        for j in 1..=q {
            if bm.get(i as usize, j as usize).0 {
                edges.insert((i, j));
            }
        }
    }
    edges
}
