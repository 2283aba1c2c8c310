//! Clique trees of chordal graphs and the two label rewrites used in the
//! contractibility arguments: deleting a vertex set from every label, and
//! merging the endpoints of a contracted edge.

use std::fmt::Write as _;

use serde::Serialize;

use crate::chordal::{is_chordal, Chordality};
use crate::error::{Error, Result};
use crate::graph::{ContractionResult, Edge, Graph, VertexSet};

/// Read access shared by clique trees and their relabeled variants.
pub trait TreeDecomposition {
    fn labels(&self) -> &[VertexSet];
    fn tree_edges(&self) -> &[(usize, usize)];
    /// Vertex count of the graph the labels refer to.
    fn vertex_count(&self) -> usize;

    /// `l(x) ∩ l(y)` for tree edge `i`.
    fn edge_label(&self, i: usize) -> VertexSet {
        let (x, y) = self.tree_edges()[i];
        self.labels()[x]
            .intersection(&self.labels()[y])
            .copied()
            .collect()
    }
}

/// A tree decomposition whose labels are exactly the maximal cliques of a
/// connected chordal graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CliqueTree {
    labels: Vec<VertexSet>,
    edges: Vec<(usize, usize)>,
    vertex_count: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Relabeling {
    MinusSeparator,
    Contracted,
}

/// A clique tree after a label rewrite. Same nodes and edges as the source;
/// labels need not be maximal cliques and may be comparable or empty.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RelabeledTree {
    labels: Vec<VertexSet>,
    edges: Vec<(usize, usize)>,
    vertex_count: usize,
    pub relabeling: Relabeling,
}

impl TreeDecomposition for CliqueTree {
    fn labels(&self) -> &[VertexSet] {
        &self.labels
    }
    fn tree_edges(&self) -> &[(usize, usize)] {
        &self.edges
    }
    fn vertex_count(&self) -> usize {
        self.vertex_count
    }
}

impl TreeDecomposition for RelabeledTree {
    fn labels(&self) -> &[VertexSet] {
        &self.labels
    }
    fn tree_edges(&self) -> &[(usize, usize)] {
        &self.edges
    }
    fn vertex_count(&self) -> usize {
        self.vertex_count
    }
}

impl RelabeledTree {
    /// Builds a decomposition from raw parts, e.g. to test the validator.
    pub fn from_parts(
        labels: Vec<VertexSet>,
        edges: Vec<(usize, usize)>,
        vertex_count: usize,
        relabeling: Relabeling,
    ) -> Self {
        RelabeledTree {
            labels,
            edges,
            vertex_count,
            relabeling,
        }
    }

    /// Renames label vertices through `map`, dropping unmapped ones. Used to
    /// move `T \ S` into the compacted id space of `G - S`.
    pub fn remap(&self, map: &[Option<usize>], vertex_count: usize) -> RelabeledTree {
        RelabeledTree {
            labels: self
                .labels
                .iter()
                .map(|l| l.iter().filter_map(|&v| map[v]).collect())
                .collect(),
            edges: self.edges.clone(),
            vertex_count,
            relabeling: self.relabeling,
        }
    }
}

/// Pairs of maximal cliques with a non-empty intersection, as
/// `(i, j, |C_i ∩ C_j|)` with `i < j`.
fn intersection_graph(cliques: &[VertexSet]) -> Vec<(usize, usize, usize)> {
    let mut pairs = Vec::new();
    for i in 0..cliques.len() {
        for j in i + 1..cliques.len() {
            let w = cliques[i].intersection(&cliques[j]).count();
            if w > 0 {
                pairs.push((i, j, w));
            }
        }
    }
    pairs
}

#[derive(Clone)]
struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }
    fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.0[root] != root {
            root = self.0[root];
        }
        let mut cur = x;
        while self.0[cur] != root {
            cur = std::mem::replace(&mut self.0[cur], root);
        }
        root
    }
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.0[ra.max(rb)] = ra.min(rb);
        true
    }
}

fn sorted_by_weight(mut pairs: Vec<(usize, usize, usize)>) -> Vec<(usize, usize, usize)> {
    pairs.sort_by(|a, b| b.2.cmp(&a.2).then((a.0, a.1).cmp(&(b.0, b.1))));
    pairs
}

fn chordal_cliques(g: &Graph) -> Result<Vec<VertexSet>> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    match is_chordal(g) {
        Chordality::Chordal { peo } => crate::chordal::maximal_cliques(g, &peo),
        Chordality::NotChordal { .. } => Err(Error::NotChordal),
    }
}

/// Maximum-weight spanning tree of the clique intersection graph (Kruskal,
/// ties broken by the smallest node-index pair). Nodes are the maximal
/// cliques in lexicographic order.
pub fn build_clique_tree(g: &Graph) -> Result<CliqueTree> {
    let cliques = chordal_cliques(g)?;
    let mut uf = UnionFind::new(cliques.len());
    let mut edges: Vec<(usize, usize)> = sorted_by_weight(intersection_graph(&cliques))
        .into_iter()
        .filter(|&(i, j, _)| uf.union(i, j))
        .map(|(i, j, _)| (i, j))
        .collect();
    edges.sort_unstable();
    Ok(CliqueTree {
        labels: cliques,
        edges,
        vertex_count: g.vertex_count(),
    })
}

/// Every clique tree of `g`, i.e. every maximum-weight spanning tree of the
/// clique intersection graph, up to `limit` of them.
pub fn all_clique_trees(g: &Graph, limit: usize) -> Result<Vec<CliqueTree>> {
    let reference = build_clique_tree(g)?;
    let target: usize = (0..reference.edges.len())
        .map(|i| reference.edge_label(i).len())
        .sum();
    let pairs = sorted_by_weight(intersection_graph(&reference.labels));
    let needed = reference.labels.len().saturating_sub(1);

    struct Search<'a> {
        pairs: &'a [(usize, usize, usize)],
        needed: usize,
        target: usize,
        limit: usize,
        found: Vec<Vec<(usize, usize)>>,
    }

    impl Search<'_> {
        fn go(
            &mut self,
            next: usize,
            chosen: &mut Vec<(usize, usize)>,
            weight: usize,
            uf: &UnionFind,
        ) {
            if self.found.len() >= self.limit {
                return;
            }
            if chosen.len() == self.needed {
                if weight == self.target {
                    let mut tree = chosen.clone();
                    tree.sort_unstable();
                    self.found.push(tree);
                }
                return;
            }
            let missing = self.needed - chosen.len();
            if next + missing > self.pairs.len() {
                return;
            }
            // Pairs are sorted by weight, so the next `missing` are the best still available.
            let bound: usize = self.pairs[next..next + missing].iter().map(|p| p.2).sum();
            if weight + bound < self.target {
                return;
            }
            let (i, j, w) = self.pairs[next];
            let mut with = uf.clone();
            if with.union(i, j) {
                chosen.push((i, j));
                self.go(next + 1, chosen, weight + w, &with);
                chosen.pop();
            }
            self.go(next + 1, chosen, weight, uf);
        }
    }

    let mut search = Search {
        pairs: &pairs,
        needed,
        target,
        limit,
        found: Vec::new(),
    };
    search.go(
        0,
        &mut Vec::new(),
        0,
        &UnionFind::new(reference.labels.len()),
    );
    Ok(search
        .found
        .into_iter()
        .map(|edges| CliqueTree {
            labels: reference.labels.clone(),
            edges,
            vertex_count: reference.vertex_count,
        })
        .collect())
}

/// Outcome of checking the three tree-decomposition conditions, plus the
/// shape of the underlying tree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DecompositionCheck {
    pub is_tree: bool,
    pub vertices_covered: bool,
    pub edges_covered: bool,
    pub connectivity: bool,
}

impl DecompositionCheck {
    pub fn is_valid(&self) -> bool {
        self.is_tree && self.vertices_covered && self.edges_covered && self.connectivity
    }

    pub fn violations(&self) -> Vec<&'static str> {
        [
            (self.is_tree, "node/edge structure is not a tree"),
            (self.vertices_covered, "not all vertices are covered"),
            (self.edges_covered, "not all edges are covered"),
            (self.connectivity, "connectivity condition fails"),
        ]
        .into_iter()
        .filter(|(ok, _)| !ok)
        .map(|(_, msg)| msg)
        .collect()
    }
}

fn is_tree(nodes: usize, edges: &[(usize, usize)]) -> bool {
    if nodes == 0 {
        return edges.is_empty();
    }
    let mut uf = UnionFind::new(nodes);
    edges.len() == nodes - 1
        && edges
            .iter()
            .all(|&(x, y)| x < nodes && y < nodes && uf.union(x, y))
}

/// Nodes containing `v` induce a connected subtree.
fn occurrences_connected(t: &impl TreeDecomposition, v: usize) -> bool {
    let holders: Vec<usize> = (0..t.labels().len())
        .filter(|&x| t.labels()[x].contains(&v))
        .collect();
    if holders.len() <= 1 {
        return true;
    }
    let inner = t
        .tree_edges()
        .iter()
        .filter(|(x, y)| t.labels()[*x].contains(&v) && t.labels()[*y].contains(&v))
        .count();
    // A forest on k nodes is a single tree iff it has k - 1 edges.
    inner == holders.len() - 1
}

pub fn validate_tree_decomposition(t: &impl TreeDecomposition, g: &Graph) -> DecompositionCheck {
    let n = g.vertex_count();
    let labels = t.labels();
    let mut covered = vec![false; n];
    let mut in_range = true;
    for &v in labels.iter().flatten() {
        match covered.get_mut(v) {
            Some(slot) => *slot = true,
            None => in_range = false,
        }
    }
    DecompositionCheck {
        is_tree: is_tree(labels.len(), t.tree_edges()),
        vertices_covered: in_range && covered.iter().all(|&c| c),
        edges_covered: g
            .edges()
            .iter()
            .all(|e| labels.iter().any(|l| l.contains(&e.u) && l.contains(&e.v))),
        connectivity: (0..n).all(|v| occurrences_connected(t, v)),
    }
}

/// `T \ S`: removes `s` from every label. Vertex ids are kept.
pub fn tree_minus_separator(t: &CliqueTree, s: &VertexSet) -> RelabeledTree {
    RelabeledTree {
        labels: t
            .labels
            .iter()
            .map(|l| l.difference(s).copied().collect())
            .collect(),
        edges: t.edges.clone(),
        vertex_count: t.vertex_count,
        relabeling: Relabeling::MinusSeparator,
    }
}

/// `T.e`: every label meeting `{u, v}` loses both endpoints and gains the
/// merged vertex, then all ids go through the contraction's vertex map.
pub fn tree_contract(
    t: &CliqueTree,
    e: Edge,
    contraction: &ContractionResult,
) -> Result<RelabeledTree> {
    if !t
        .labels
        .iter()
        .any(|l| l.contains(&e.u) && l.contains(&e.v))
    {
        return Err(Error::Inconsistent(format!(
            "edge {e} is not covered by any label"
        )));
    }
    let map = &contraction.vertex_map;
    if map.len() != t.vertex_count {
        return Err(Error::Inconsistent(format!(
            "vertex map covers {} vertices, tree has {}",
            map.len(),
            t.vertex_count
        )));
    }
    let labels = t
        .labels
        .iter()
        .map(|l| l.iter().map(|&x| map[x]).collect::<VertexSet>())
        .collect();
    Ok(RelabeledTree {
        labels,
        edges: t.edges.clone(),
        vertex_count: contraction.graph.vertex_count(),
        relabeling: Relabeling::Contracted,
    })
}

/// True iff every tree edge has a non-empty label intersection. For a clique
/// tree this is equivalent to the graph being connected; for any tree
/// decomposition of a connected graph it holds.
pub fn tree_connected_check(t: &impl TreeDecomposition) -> bool {
    (0..t.tree_edges().len()).all(|i| {
        let (x, y) = t.tree_edges()[i];
        !t.labels()[x].is_disjoint(&t.labels()[y])
    })
}

pub(crate) fn set_notation(s: &VertexSet) -> String {
    let items: Vec<String> = s.iter().map(usize::to_string).collect();
    format!("{{{}}}", items.join(","))
}

/// Graphviz rendering: node labels are the cliques, edge labels the
/// intersections.
pub fn to_dot(t: &impl TreeDecomposition) -> String {
    let mut out = String::from("graph clique_tree {\n");
    for (i, l) in t.labels().iter().enumerate() {
        let _ = writeln!(out, "  n{i} [label=\"{}\"];", set_notation(l));
    }
    for (i, &(x, y)) in t.tree_edges().iter().enumerate() {
        let _ = writeln!(
            out,
            "  n{x} -- n{y} [label=\"{}\"];",
            set_notation(&t.edge_label(i))
        );
    }
    out.push_str("}\n");
    out
}
