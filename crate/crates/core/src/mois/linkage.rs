//! Which components `V_(j)` the non-`pℤ` generators connect.

use std::collections::{BTreeSet, VecDeque};
use std::fmt::Write as _;

use serde::Serialize;

use super::fmatrix::FMatrix;
use crate::algebra::GapParam;

/// `from → to` through `L_n`, `n ≡ s (mod p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct LinkEdge {
    pub from: usize,
    pub to: usize,
    pub s: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LinkageGraph {
    pub p: GapParam,
    pub nodes: BTreeSet<usize>,
    pub edges: BTreeSet<LinkEdge>,
    pub strongly_connected: bool,
}

/// Nodes are the components of the module (`o(F)`, or `{0}` when `F = 0`);
/// there is an edge `j → j+s` exactly when `f[s][j] ≠ 0`.
pub fn linkage_graph(f: &FMatrix) -> LinkageGraph {
    let p = f.p();
    let n = p.as_usize();
    let nodes = f.components();
    let mut edges = BTreeSet::new();
    for s in 1..n {
        for j in 0..n {
            if !f.get(s, j).is_zero() {
                edges.insert(LinkEdge { from: j, to: (j + s) % n, s });
            }
        }
    }
    let mut g = LinkageGraph { p, nodes, edges, strongly_connected: false };
    g.strongly_connected = g.compute_strongly_connected();
    g
}

impl LinkageGraph {
    pub fn successors(&self, j: usize) -> impl Iterator<Item = usize> + '_ {
        self.edges.iter().filter(move |e| e.from == j).map(|e| e.to)
    }

    pub fn predecessors(&self, j: usize) -> impl Iterator<Item = usize> + '_ {
        self.edges.iter().filter(move |e| e.to == j).map(|e| e.from)
    }

    pub fn has_edge(&self, from: usize, to: usize) -> bool {
        self.edges.iter().any(|e| e.from == from && e.to == to)
    }

    fn search(&self, start: usize, forward: bool) -> BTreeSet<usize> {
        let mut seen = BTreeSet::from([start]);
        let mut queue = VecDeque::from([start]);
        while let Some(j) = queue.pop_front() {
            let next: Vec<usize> = if forward { self.successors(j).collect() } else { self.predecessors(j).collect() };
            for t in next {
                if seen.insert(t) {
                    queue.push_back(t);
                }
            }
        }
        seen
    }

    /// Components reachable from `start`, including `start`.
    pub fn reachable_from(&self, start: usize) -> BTreeSet<usize> {
        self.search(start, true)
    }

    fn compute_strongly_connected(&self) -> bool {
        let Some(&root) = self.nodes.first() else {
            return true;
        };
        self.search(root, true) == self.nodes && self.search(root, false) == self.nodes
    }

    /// A nonempty proper set of nodes with no edge leaving it, if one exists.
    /// The smallest such forward-closed set found from ascending start nodes.
    pub fn closed_proper_subset(&self) -> Option<BTreeSet<usize>> {
        self.nodes
            .iter()
            .map(|&j| self.reachable_from(j))
            .filter(|r| r.len() < self.nodes.len())
            .min_by_key(|r| (r.len(), r.iter().next().copied()))
    }

    /// Graphviz rendering: nodes in ascending residue order, edges sorted by
    /// `(from, to)` and labelled by the linking residue.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph linkage {\n");
        for j in &self.nodes {
            let _ = writeln!(out, "  {j} [label=\"{j}\"];");
        }
        for e in &self.edges {
            let _ = writeln!(out, "  {} -> {} [label=\"{}\"];", e.from, e.to, e.s);
        }
        out.push_str("}\n");
        out
    }
}
