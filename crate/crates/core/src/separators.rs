//! Minimal vertex separators from clique-tree edge labels, vertex
//! connectivity, minimum cut sets, and the brute-force oracles that check
//! them.

use std::collections::{BTreeSet, VecDeque};

use serde::Serialize;

use crate::bits;
use crate::clique_tree::{CliqueTree, TreeDecomposition};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Default vertex bound for the subset-enumeration oracles.
pub const DEFAULT_ORACLE_BOUND: usize = 16;

/// Largest graph for which [`vertex_connectivity`] enumerates subsets rather
/// than running max-flow.
pub const ENUMERATION_CONNECTIVITY_LIMIT: usize = 12;

fn check_bound(g: &Graph, bound: usize) -> Result<()> {
    let limit = bound.min(64);
    if g.vertex_count() > limit {
        return Err(Error::Resource {
            vertex_count: g.vertex_count(),
            bound: limit,
        });
    }
    Ok(())
}

fn to_set(mask: u64) -> VertexSet {
    bits::ones(mask).collect()
}

/// `M'`: one label intersection per tree edge, in tree-edge order.
pub fn edge_labels(t: &CliqueTree) -> Result<Vec<VertexSet>> {
    (0..t.tree_edges().len())
        .map(|i| {
            let label = t.edge_label(i);
            if label.is_empty() {
                let (x, y) = t.tree_edges()[i];
                Err(Error::Inconsistent(format!(
                    "tree edge ({x},{y}) has an empty label"
                )))
            } else {
                Ok(label)
            }
        })
        .collect()
}

/// `M''`: distinct members of `m_prime` that properly contain no other member.
pub fn minimal_filter(m_prime: &[VertexSet]) -> BTreeSet<VertexSet> {
    let distinct: BTreeSet<VertexSet> = m_prime.iter().cloned().collect();
    distinct
        .iter()
        .filter(|y| !distinct.iter().any(|z| z != *y && z.is_subset(y)))
        .cloned()
        .collect()
}

/// Every `S` such that `G - S` has at least two full components, i.e.
/// components adjacent to every vertex of `S`.
pub fn brute_force_minimal_separators(g: &Graph, bound: usize) -> Result<BTreeSet<VertexSet>> {
    check_bound(g, bound)?;
    let n = g.vertex_count();
    let adj = g.masks();
    let all = bits::full(n);
    let mut out = BTreeSet::new();
    for s in 0..=all {
        let rest = all & !s;
        if !bits::is_split_by(&adj, rest) {
            continue;
        }
        let full_components = bits::components(&adj, rest)
            .into_iter()
            .filter(|&c| bits::ones(s).all(|x| adj[x] & c != 0))
            .count();
        if full_components >= 2 {
            out.insert(to_set(s));
        }
    }
    Ok(out)
}

/// Subset enumeration in increasing size; the first size that splits the
/// graph is κ. Complete graphs on `n` vertices give `n - 1`.
pub fn vertex_connectivity_by_enumeration(g: &Graph, bound: usize) -> Result<usize> {
    check_bound(g, bound)?;
    Ok(connectivity_masks(&g.masks(), g.vertex_count()))
}

pub(crate) fn connectivity_masks(adj: &[u64], n: usize) -> usize {
    let all = bits::full(n);
    let complete = (0..n).all(|v| adj[v] == all & !(1 << v));
    if complete {
        return n.saturating_sub(1);
    }
    (0..n)
        .find(|&k| bits::subsets_of_size(n, k).any(|s| bits::is_split_by(adj, all & !s)))
        .expect("a non-complete graph is split by deleting all but two non-adjacent vertices")
}

/// Minimum over non-adjacent pairs of the number of internally disjoint
/// paths, each computed as a unit-capacity max-flow on the split graph
/// (`v_in -> v_out` with capacity one).
pub fn vertex_connectivity_by_flow(g: &Graph) -> usize {
    let n = g.vertex_count();
    if g.is_complete() {
        return n.saturating_sub(1);
    }
    let mut best = n;
    for s in 0..n {
        for t in s + 1..n {
            if !g.has_edge(s, t) {
                best = best.min(local_connectivity(g, s, t, best));
                if best == 0 {
                    return 0;
                }
            }
        }
    }
    best
}

struct FlowNetwork {
    head: Vec<usize>,
    cap: Vec<i32>,
    adj: Vec<Vec<usize>>,
}

impl FlowNetwork {
    fn new(nodes: usize) -> Self {
        FlowNetwork {
            head: Vec::new(),
            cap: Vec::new(),
            adj: vec![Vec::new(); nodes],
        }
    }

    fn arc(&mut self, from: usize, to: usize, cap: i32) {
        self.adj[from].push(self.head.len());
        self.head.push(to);
        self.cap.push(cap);
        self.adj[to].push(self.head.len());
        self.head.push(from);
        self.cap.push(0);
    }

    fn augment(&mut self, source: usize, sink: usize) -> bool {
        let mut via = vec![usize::MAX; self.adj.len()];
        let mut queue = VecDeque::from([source]);
        let mut seen = vec![false; self.adj.len()];
        seen[source] = true;
        while let Some(x) = queue.pop_front() {
            for &a in &self.adj[x] {
                let y = self.head[a];
                if self.cap[a] > 0 && !seen[y] {
                    seen[y] = true;
                    via[y] = a;
                    if y == sink {
                        let mut cur = sink;
                        while cur != source {
                            let arc = via[cur];
                            self.cap[arc] -= 1;
                            self.cap[arc ^ 1] += 1;
                            cur = self.head[arc ^ 1];
                        }
                        return true;
                    }
                    queue.push_back(y);
                }
            }
        }
        false
    }
}

/// Internally disjoint `s`–`t` paths, stopping once `cap` is reached.
fn local_connectivity(g: &Graph, s: usize, t: usize, cap: usize) -> usize {
    let n = g.vertex_count();
    let big = n as i32;
    let (vin, vout) = (|v: usize| 2 * v, |v: usize| 2 * v + 1);
    let mut net = FlowNetwork::new(2 * n);
    for v in 0..n {
        net.arc(vin(v), vout(v), if v == s || v == t { big } else { 1 });
    }
    for e in g.edges() {
        net.arc(vout(e.u), vin(e.v), big);
        net.arc(vout(e.v), vin(e.u), big);
    }
    let mut flow = 0;
    while flow < cap && net.augment(vout(s), vin(t)) {
        flow += 1;
    }
    flow
}

/// κ(G): enumeration up to [`ENUMERATION_CONNECTIVITY_LIMIT`] vertices,
/// max-flow above.
pub fn vertex_connectivity(g: &Graph) -> usize {
    if g.vertex_count() <= ENUMERATION_CONNECTIVITY_LIMIT {
        connectivity_masks(&g.masks(), g.vertex_count())
    } else {
        vertex_connectivity_by_flow(g)
    }
}

/// κ(G) together with γ_G, all separating sets of size κ.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MinCutFamily {
    pub kappa: usize,
    pub cutsets: BTreeSet<VertexSet>,
}

/// γ_G by enumerating all κ-subsets. Complete graphs yield `n - 1` with no
/// cut sets.
pub fn minimum_cutsets(g: &Graph, bound: usize) -> Result<MinCutFamily> {
    check_bound(g, bound)?;
    let n = g.vertex_count();
    let adj = g.masks();
    let kappa = connectivity_masks(&adj, n);
    let all = bits::full(n);
    let cutsets = if g.is_complete() {
        BTreeSet::new()
    } else {
        bits::subsets_of_size(n, kappa)
            .filter(|&s| bits::is_split_by(&adj, all & !s))
            .map(to_set)
            .collect()
    };
    Ok(MinCutFamily { kappa, cutsets })
}

/// `M'`, `M''` and the oracle separator set for one graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SeparatorFamily {
    pub m_prime: Vec<VertexSet>,
    pub m_double_prime: BTreeSet<VertexSet>,
    pub oracle_minimal_separators: Option<BTreeSet<VertexSet>>,
}

impl SeparatorFamily {
    pub fn from_tree(t: &CliqueTree) -> Result<SeparatorFamily> {
        let m_prime = edge_labels(t)?;
        let m_double_prime = minimal_filter(&m_prime);
        Ok(SeparatorFamily {
            m_prime,
            m_double_prime,
            oracle_minimal_separators: None,
        })
    }

    pub fn distinct_m_prime(&self) -> BTreeSet<VertexSet> {
        self.m_prime.iter().cloned().collect()
    }
}

/// Side-by-side comparison of the clique-tree separators with the oracle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SeparatorReport {
    pub graph_hash: String,
    pub kappa: usize,
    pub m_prime: Vec<VertexSet>,
    pub m_double_prime: BTreeSet<VertexSet>,
    pub oracle: BTreeSet<VertexSet>,
    /// Oracle separators that the `M''` filter dropped.
    pub missing_from_m2: BTreeSet<VertexSet>,
    /// `M''` members the oracle does not recognise.
    pub extra_in_m2: BTreeSet<VertexSet>,
    pub m_prime_matches_oracle: bool,
}

impl SeparatorReport {
    pub fn m_double_prime_matches_oracle(&self) -> bool {
        self.missing_from_m2.is_empty() && self.extra_in_m2.is_empty()
    }
}

pub fn compare_separator_sources(
    g: &Graph,
    t: &CliqueTree,
    bound: usize,
) -> Result<(SeparatorFamily, SeparatorReport)> {
    let oracle = brute_force_minimal_separators(g, bound)?;
    let mut family = SeparatorFamily::from_tree(t)?;
    family.oracle_minimal_separators = Some(oracle.clone());
    let report = SeparatorReport {
        graph_hash: crate::graph_hash(g),
        kappa: vertex_connectivity(g),
        m_prime: family.m_prime.clone(),
        m_double_prime: family.m_double_prime.clone(),
        missing_from_m2: oracle.difference(&family.m_double_prime).cloned().collect(),
        extra_in_m2: family.m_double_prime.difference(&oracle).cloned().collect(),
        m_prime_matches_oracle: family.distinct_m_prime() == oracle,
        oracle,
    };
    Ok((family, report))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clique_tree::build_clique_tree;
    use crate::graph::fixtures::*;
    use crate::graph::vset;

    fn sets<const N: usize>(items: [&[usize]; N]) -> BTreeSet<VertexSet> {
        items.iter().map(|s| vset(s.iter().copied())).collect()
    }

    #[test]
    fn edge_label_examples() {
        let p3 = build_clique_tree(&Graph::path(3)).unwrap();
        assert_eq!(edge_labels(&p3).unwrap(), vec![vset([1])]);
        let two = build_clique_tree(&two_k4s()).unwrap();
        assert_eq!(edge_labels(&two).unwrap(), vec![vset([2, 3, 4])]);
        let mut nest = edge_labels(&build_clique_tree(&g_nest()).unwrap()).unwrap();
        nest.sort();
        assert_eq!(nest, vec![vset([0]), vset([0, 1])]);
    }

    #[test]
    fn minimal_filter_examples() {
        assert_eq!(minimal_filter(&[vset([1])]), sets([&[1]]));
        assert_eq!(minimal_filter(&[vset([0, 1]), vset([0])]), sets([&[0]]));
        assert_eq!(
            minimal_filter(&[vset([2, 3]), vset([4, 5])]),
            sets([&[2, 3], &[4, 5]])
        );
        assert_eq!(minimal_filter(&[vset([2]), vset([2])]), sets([&[2]]));
    }

    #[test]
    fn oracle_separator_examples() {
        let b = DEFAULT_ORACLE_BOUND;
        assert_eq!(
            brute_force_minimal_separators(&Graph::path(3), b).unwrap(),
            sets([&[1]])
        );
        assert_eq!(
            brute_force_minimal_separators(&two_k4s(), b).unwrap(),
            sets([&[2, 3, 4]])
        );
        assert_eq!(
            brute_force_minimal_separators(&g_nest(), b).unwrap(),
            sets([&[0], &[0, 1]])
        );
        assert!(brute_force_minimal_separators(&Graph::complete(4), b)
            .unwrap()
            .is_empty());
        assert!(matches!(
            brute_force_minimal_separators(&Graph::path(17), b),
            Err(Error::Resource {
                vertex_count: 17,
                bound: 16
            })
        ));
    }

    #[test]
    fn connectivity_examples() {
        for g in [
            Graph::complete(4),
            Graph::path(3),
            two_k4s(),
            g_nest(),
            Graph::cycle(5),
            Graph::empty(2),
            Graph::empty(1),
        ] {
            let by_enum = vertex_connectivity_by_enumeration(&g, 16).unwrap();
            assert_eq!(by_enum, vertex_connectivity_by_flow(&g));
            assert_eq!(by_enum, vertex_connectivity(&g));
        }
        assert_eq!(vertex_connectivity(&Graph::complete(4)), 3);
        assert_eq!(vertex_connectivity(&Graph::path(3)), 1);
        assert_eq!(vertex_connectivity(&two_k4s()), 3);
        assert_eq!(vertex_connectivity(&Graph::cycle(5)), 2);
        assert_eq!(vertex_connectivity(&Graph::empty(2)), 0);
        assert_eq!(vertex_connectivity(&Graph::empty(1)), 0);
        assert_eq!(vertex_connectivity(&Graph::complete(20)), 19);
        assert_eq!(vertex_connectivity(&Graph::cycle(20)), 2);
    }

    #[test]
    fn minimum_cutset_examples() {
        let b = DEFAULT_ORACLE_BOUND;
        assert_eq!(
            minimum_cutsets(&Graph::path(3), b).unwrap(),
            MinCutFamily {
                kappa: 1,
                cutsets: sets([&[1]])
            }
        );
        assert_eq!(
            minimum_cutsets(&two_k4s(), b).unwrap(),
            MinCutFamily {
                kappa: 3,
                cutsets: sets([&[2, 3, 4]])
            }
        );
        assert_eq!(
            minimum_cutsets(&g_nest(), b).unwrap(),
            MinCutFamily {
                kappa: 1,
                cutsets: sets([&[0]])
            }
        );
        assert_eq!(
            minimum_cutsets(&Graph::complete(5), b).unwrap(),
            MinCutFamily {
                kappa: 4,
                cutsets: BTreeSet::new()
            }
        );
    }

    #[test]
    fn separator_comparison_examples() {
        let b = DEFAULT_ORACLE_BOUND;
        let p3 = Graph::path(3);
        let (family, report) =
            compare_separator_sources(&p3, &build_clique_tree(&p3).unwrap(), b).unwrap();
        assert_eq!(family.m_prime, vec![vset([1])]);
        assert!(report.m_prime_matches_oracle && report.m_double_prime_matches_oracle());

        let g = two_k4s();
        let (_, report) =
            compare_separator_sources(&g, &build_clique_tree(&g).unwrap(), b).unwrap();
        assert_eq!(report.oracle, sets([&[2, 3, 4]]));
        assert_eq!(report.m_double_prime, sets([&[2, 3, 4]]));
        assert!(report.m_prime_matches_oracle && report.m_double_prime_matches_oracle());

        let g = g_nest();
        let (family, report) =
            compare_separator_sources(&g, &build_clique_tree(&g).unwrap(), b).unwrap();
        assert_eq!(family.distinct_m_prime(), sets([&[0], &[0, 1]]));
        assert_eq!(report.m_double_prime, sets([&[0]]));
        assert!(report.m_prime_matches_oracle);
        assert_eq!(report.missing_from_m2, sets([&[0, 1]]));
        assert!(report.extra_in_m2.is_empty());
        assert_eq!(report.kappa, 1);
    }
}
