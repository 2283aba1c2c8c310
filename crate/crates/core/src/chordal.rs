//! Chordality recognition via maximum cardinality search, with witnesses
//! in both directions, and maximal-clique extraction from a perfect
//! elimination order.

use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// A permutation of the vertex ids; `order[i]` is eliminated at time `i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct EliminationOrder {
    order: Vec<usize>,
}

impl EliminationOrder {
    pub fn new(order: Vec<usize>) -> Result<EliminationOrder> {
        let mut seen = vec![false; order.len()];
        for &v in &order {
            if v >= order.len() || std::mem::replace(&mut seen[v], true) {
                return Err(Error::Domain(format!(
                    "{order:?} is not a permutation of 0..{}",
                    order.len()
                )));
            }
        }
        Ok(EliminationOrder { order })
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.order
    }

    /// Inverse permutation: elimination time of each vertex.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.order.len()];
        for (i, &v) in self.order.iter().enumerate() {
            pos[v] = i;
        }
        pos
    }

    /// Neighbors of `v` eliminated after `v`, in elimination order.
    fn later_neighbors(&self, g: &Graph, pos: &[usize], v: usize) -> Vec<usize> {
        let mut later: Vec<usize> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| pos[w] > pos[v])
            .collect();
        later.sort_unstable_by_key(|&w| pos[w]);
        later
    }
}

/// Maximum cardinality search, ties broken towards the smallest id. The
/// returned order is the reverse of the visiting order, so it is a perfect
/// elimination order exactly when `g` is chordal.
pub fn mcs_order(g: &Graph) -> EliminationOrder {
    let n = g.vertex_count();
    let mut weight = vec![0usize; n];
    let mut visited = vec![false; n];
    let mut visit = Vec::with_capacity(n);
    for _ in 0..n {
        let next = (0..n)
            .filter(|&v| !visited[v])
            .max_by(|&a, &b| weight[a].cmp(&weight[b]).then(b.cmp(&a)))
            .expect("an unvisited vertex remains");
        visited[next] = true;
        visit.push(next);
        for &w in g.neighbors(next) {
            if !visited[w] {
                weight[w] += 1;
            }
        }
    }
    visit.reverse();
    EliminationOrder { order: visit }
}

/// The first vertex whose later neighbors do not form a clique, if any.
pub fn peo_violation(g: &Graph, order: &EliminationOrder) -> Option<usize> {
    let pos = order.positions();
    order.as_slice().iter().copied().find(|&v| {
        let later = order.later_neighbors(g, &pos, v);
        match later.split_first() {
            None => false,
            Some((&parent, rest)) => rest.iter().any(|&w| !g.has_edge(parent, w)),
        }
    })
}

pub fn is_perfect_elimination_order(g: &Graph, order: &EliminationOrder) -> bool {
    order.as_slice().len() == g.vertex_count() && peo_violation(g, order).is_none()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Chordality {
    Chordal {
        peo: EliminationOrder,
    },
    NotChordal {
        /// Vertex at which the MCS order stops being a perfect elimination order.
        violating_vertex: usize,
        /// A chordless cycle of length at least four, in cyclic order.
        cycle: Vec<usize>,
    },
}

impl Chordality {
    pub fn is_chordal(&self) -> bool {
        matches!(self, Chordality::Chordal { .. })
    }
}

pub fn is_chordal(g: &Graph) -> Chordality {
    let order = mcs_order(g);
    match peo_violation(g, &order) {
        None => Chordality::Chordal { peo: order },
        Some(v) => {
            let cycle = std::iter::once(v)
                .chain(0..g.vertex_count())
                .find_map(|c| chordless_cycle_through(g, c))
                .expect("a graph without a perfect elimination order has a chordless cycle");
            Chordality::NotChordal {
                violating_vertex: v,
                cycle,
            }
        }
    }
}

/// Looks for a chordless cycle `c, a, ..., b` where `a` and `b` are
/// non-adjacent neighbors of `c` joined by a path avoiding the rest of `N[c]`.
fn chordless_cycle_through(g: &Graph, c: usize) -> Option<Vec<usize>> {
    let ns = g.neighbors(c);
    for (i, &a) in ns.iter().enumerate() {
        for &b in &ns[i + 1..] {
            if g.has_edge(a, b) {
                continue;
            }
            let blocked = |x: usize| x == c || (x != b && g.has_edge(c, x));
            if let Some(path) = shortest_path(g, a, b, blocked) {
                let mut cycle = vec![c];
                cycle.extend(path);
                return Some(cycle);
            }
        }
    }
    None
}

fn shortest_path(
    g: &Graph,
    from: usize,
    to: usize,
    blocked: impl Fn(usize) -> bool,
) -> Option<Vec<usize>> {
    let mut parent = vec![usize::MAX; g.vertex_count()];
    parent[from] = from;
    let mut queue = VecDeque::from([from]);
    while let Some(x) = queue.pop_front() {
        if x == to {
            let mut path = vec![to];
            let mut cur = to;
            while cur != from {
                cur = parent[cur];
                path.push(cur);
            }
            path.reverse();
            return Some(path);
        }
        for &y in g.neighbors(x) {
            if parent[y] == usize::MAX && !blocked(y) {
                parent[y] = x;
                queue.push_back(y);
            }
        }
    }
    None
}

/// Maximal cliques of a chordal graph, each sorted, the list sorted
/// lexicographically. Candidates are `{v} ∪ later(v)`; the non-maximal
/// ones are discarded.
pub fn maximal_cliques(g: &Graph, peo: &EliminationOrder) -> Result<Vec<VertexSet>> {
    if !is_perfect_elimination_order(g, peo) {
        return Err(Error::NotChordal);
    }
    let pos = peo.positions();
    let mut candidates: Vec<VertexSet> = peo
        .as_slice()
        .iter()
        .map(|&v| {
            let mut c: VertexSet = peo.later_neighbors(g, &pos, v).into_iter().collect();
            c.insert(v);
            c
        })
        .collect();
    candidates.sort_by(|a, b| b.len().cmp(&a.len()).then(a.cmp(b)));
    candidates.dedup();
    let mut cliques: Vec<VertexSet> = Vec::new();
    for c in candidates {
        if !cliques.iter().any(|k| c.is_subset(k)) {
            cliques.push(c);
        }
    }
    cliques.sort();
    Ok(cliques)
}
