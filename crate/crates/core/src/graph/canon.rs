//! Canonical labeling by individualization-refinement.
//!
//! Refinement splits every cell by the number of neighbors each vertex has in
//! every current cell, ordering sub-cells by that count vector, until the
//! partition is equitable. The search individualizes each vertex of the first
//! smallest non-singleton cell in turn; every discrete leaf yields a
//! relabeling, and the lexicographically least graph6 string over all leaves
//! is the canonical form. Every step depends only on the cell structure, never
//! on vertex names, so isomorphic graphs produce identical forms.

use std::fmt;

use super::graph6::{encode_edges, from_graph6, Graph6Error};
use super::Graph;

/// graph6 string of the canonically relabeled graph. Equal forms ⇔ isomorphic graphs.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm(String);

impl CanonicalForm {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn as_bytes(&self) -> &[u8] {
        self.0.as_bytes()
    }

    /// The canonical representative graph.
    pub fn to_graph(&self) -> Result<Graph, Graph6Error> {
        from_graph6(&self.0)
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

type Partition = Vec<Vec<usize>>;

fn refine(g: &Graph, mut cells: Partition) -> Partition {
    let n = g.n();
    let mut cell_of = vec![0usize; n];
    loop {
        for (i, cell) in cells.iter().enumerate() {
            for &v in cell {
                cell_of[v] = i;
            }
        }
        let k = cells.len();
        let mut next: Partition = Vec::with_capacity(n);
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u32>, usize)> = cell
                .iter()
                .map(|&v| {
                    let mut counts = vec![0u32; k];
                    for &w in g.neighbors(v) {
                        counts[cell_of[w]] += 1;
                    }
                    (counts, v)
                })
                .collect();
            keyed.sort_unstable();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|(_, v)| *v).collect());
                    start = i;
                }
            }
        }
        if next.len() == cells.len() {
            return next;
        }
        cells = next;
    }
}

struct Search<'a> {
    g: &'a Graph,
    best: Option<(String, Vec<usize>)>,
}

impl Search<'_> {
    fn leaf(&mut self, cells: &Partition) {
        // vertex -> new label
        let mut label = vec![0usize; self.g.n()];
        for (pos, cell) in cells.iter().enumerate() {
            label[cell[0]] = pos;
        }
        let cert = encode_edges(self.g.n(), self.g.edges().map(|e| (label[e.x], label[e.y])));
        let better = match &self.best {
            None => true,
            Some((b, _)) => cert < *b,
        };
        if better {
            self.best = Some((cert, label));
        }
    }

    fn descend(&mut self, cells: Partition) {
        let cells = refine(self.g, cells);
        let target = cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.len() > 1)
            .min_by_key(|(i, c)| (c.len(), *i))
            .map(|(i, _)| i);
        let Some(t) = target else {
            self.leaf(&cells);
            return;
        };
        for &v in &cells[t] {
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..t]);
            child.push(vec![v]);
            child.push(cells[t].iter().copied().filter(|&w| w != v).collect());
            child.extend_from_slice(&cells[t + 1..]);
            self.descend(child);
        }
    }
}

fn search(g: &Graph) -> (String, Vec<usize>) {
    let mut s = Search { g, best: None };
    s.descend(vec![(0..g.n()).collect()]);
    s.best.expect("search visits at least one leaf")
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    CanonicalForm(search(g).0)
}

/// Permutation `label` with `g.relabel(&label)` equal to the canonical graph.
pub fn canonical_labeling(g: &Graph) -> Vec<usize> {
    search(g).1
}
