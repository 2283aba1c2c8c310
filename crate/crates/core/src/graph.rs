//! Simple undirected graphs over dense `0..n` vertex ids.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A set of vertex ids, iterated in ascending order.
pub type VertexSet = BTreeSet<usize>;

/// Builds a [`VertexSet`] from anything yielding vertex ids.
pub fn vset<I: IntoIterator<Item = usize>>(items: I) -> VertexSet {
    items.into_iter().collect()
}

/// An undirected edge, normalized so that `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
}

impl Edge {
    pub fn new(a: usize, b: usize) -> Result<Edge> {
        if a == b {
            return Err(Error::SelfLoop { vertex: a });
        }
        Ok(Edge {
            u: a.min(b),
            v: a.max(b),
        })
    }

    pub fn contains(&self, x: usize) -> bool {
        self.u == x || self.v == x
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.u, self.v)
    }
}

/// Simple undirected graph stored as sorted adjacency lists.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
}

/// The outcome of contracting one edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContractionResult {
    pub graph: Graph,
    /// Id of the merged vertex in the contracted graph.
    pub merged_vertex: usize,
    /// Old id to new id; both endpoints map to `merged_vertex`.
    pub vertex_map: Vec<usize>,
}

impl Graph {
    /// `n` isolated vertices.
    pub fn empty(n: usize) -> Graph {
        Graph {
            adjacency: vec![Vec::new(); n],
        }
    }

    /// Builds a graph from an edge list. Duplicate edges are merged.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n);
        for (a, b) in edges {
            g.add_edge(a, b)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Graph {
        let adjacency = (0..n)
            .map(|v| (0..n).filter(|&w| w != v).collect())
            .collect();
        Graph { adjacency }
    }

    pub fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|v| (v - 1, v))).expect("path edges are valid")
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "a cycle needs at least three vertices");
        Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n))).expect("cycle edges are valid")
    }

    /// Star with centre 0 and `leaves` leaves.
    pub fn star(leaves: usize) -> Graph {
        Graph::from_edges(leaves + 1, (1..=leaves).map(|v| (0, v))).expect("star edges are valid")
    }

    pub(crate) fn add_edge(&mut self, a: usize, b: usize) -> Result<()> {
        let n = self.vertex_count();
        for x in [a, b] {
            if x >= n {
                return Err(Error::Range {
                    vertex: x,
                    vertex_count: n,
                });
            }
        }
        if a == b {
            return Err(Error::SelfLoop { vertex: a });
        }
        if let Err(pos) = self.adjacency[a].binary_search(&b) {
            self.adjacency[a].insert(pos, b);
            let pos = self.adjacency[b].binary_search(&a).unwrap_err();
            self.adjacency[b].insert(pos, a);
        }
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    /// Sorted neighbors of `v`. Panics if `v` is out of range.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.vertex_count() && self.adjacency[a].binary_search(&b).is_ok()
    }

    /// All edges in lexicographic order.
    pub fn edges(&self) -> Vec<Edge> {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| {
                ns.iter()
                    .filter(move |&&v| v > u)
                    .map(move |&v| Edge { u, v })
            })
            .collect()
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.vertex_count() {
            return Err(Error::Range {
                vertex: v,
                vertex_count: self.vertex_count(),
            });
        }
        Ok(())
    }

    /// Open neighborhood of `v`.
    pub fn neighborhood(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(self.adjacency[v].iter().copied().collect())
    }

    /// True iff the given vertices are pairwise adjacent.
    pub fn is_clique<'a, I>(&self, vertices: I) -> bool
    where
        I: IntoIterator<Item = &'a usize>,
        I::IntoIter: Clone,
    {
        let it = vertices.into_iter();
        let rest = it.clone();
        it.enumerate().all(|(i, &a)| {
            rest.clone()
                .skip(i + 1)
                .all(|&b| a != b && self.has_edge(a, b))
        })
    }

    pub fn is_complete(&self) -> bool {
        let n = self.vertex_count();
        self.adjacency.iter().all(|ns| ns.len() + 1 == n)
    }

    pub fn is_simplicial(&self, v: usize) -> Result<bool> {
        self.check_vertex(v)?;
        Ok(self.is_clique(self.adjacency[v].iter()))
    }

    /// True iff every vertex has the same degree.
    pub fn is_regular(&self) -> bool {
        self.adjacency.windows(2).all(|w| w[0].len() == w[1].len())
    }

    /// Breadth-first partition of the vertex set. Each component is sorted,
    /// and components are ordered by their smallest vertex.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut components = Vec::new();
        let mut queue = VecDeque::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            queue.push_back(start);
            let mut component = Vec::new();
            while let Some(x) = queue.pop_front() {
                component.push(x);
                for &y in &self.adjacency[x] {
                    if !seen[y] {
                        seen[y] = true;
                        queue.push_back(y);
                    }
                }
            }
            component.sort_unstable();
            components.push(component);
        }
        components
    }

    /// Connected with at least one vertex.
    pub fn is_connected(&self) -> bool {
        self.vertex_count() > 0 && self.connected_components().len() == 1
    }

    /// Contracts `e`: the larger endpoint is deleted, the smaller endpoint's
    /// slot becomes the merged vertex, and higher ids shift down by one.
    pub fn contract_edge(&self, e: Edge) -> Result<ContractionResult> {
        if !self.has_edge(e.u, e.v) {
            return Err(Error::InvalidEdge { u: e.u, v: e.v });
        }
        let n = self.vertex_count();
        let vertex_map: Vec<usize> = (0..n)
            .map(|x| match x {
                x if x == e.v => e.u,
                x if x > e.v => x - 1,
                x => x,
            })
            .collect();
        let mut graph = Graph::empty(n - 1);
        for edge in self.edges() {
            let (a, b) = (vertex_map[edge.u], vertex_map[edge.v]);
            if a != b {
                graph.add_edge(a, b)?;
            }
        }
        Ok(ContractionResult {
            graph,
            merged_vertex: e.u,
            vertex_map,
        })
    }

    /// The induced subgraph on `V \ s`, with compacted ids and the old-to-new map.
    pub fn induced_delete(&self, s: &VertexSet) -> Result<(Graph, Vec<Option<usize>>)> {
        if let Some(&bad) = s.iter().find(|&&x| x >= self.vertex_count()) {
            return Err(Error::Range {
                vertex: bad,
                vertex_count: self.vertex_count(),
            });
        }
        let mut next = 0;
        let vertex_map: Vec<Option<usize>> = (0..self.vertex_count())
            .map(|x| {
                if s.contains(&x) {
                    None
                } else {
                    next += 1;
                    Some(next - 1)
                }
            })
            .collect();
        let mut graph = Graph::empty(next);
        for edge in self.edges() {
            if let (Some(a), Some(b)) = (vertex_map[edge.u], vertex_map[edge.v]) {
                graph.add_edge(a, b)?;
            }
        }
        Ok((graph, vertex_map))
    }

    /// Adjacency as bitmasks; only valid for graphs with at most 64 vertices.
    pub(crate) fn masks(&self) -> Vec<u64> {
        assert!(
            self.vertex_count() <= 64,
            "bitmask view needs at most 64 vertices"
        );
        self.adjacency
            .iter()
            .map(|ns| ns.iter().fold(0u64, |m, &w| m | 1 << w))
            .collect()
    }
}
