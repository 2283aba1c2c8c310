//! Contractible edges in k-connected chordal graphs.
//!
//! Three independent routes decide whether contracting `e` keeps κ:
//!
//! * the definition: recompute κ on the contracted graph;
//! * minimum cut sets: `e` is non-contractible iff some member of γ_G holds
//!   both endpoints (valid for any graph);
//! * clique-tree labels: `e` is contractible iff no tree-edge label contains
//!   `e`, or every label that does has more than κ vertices.
//!
//! The last one is the fast path for chordal graphs; the first two are
//! oracles used to check it.

use rayon::prelude::*;
use serde::Serialize;

use crate::bits;
use crate::clique_tree::{build_clique_tree, CliqueTree, TreeDecomposition};
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, VertexSet};
use crate::separators::{self, MinCutFamily, DEFAULT_ORACLE_BOUND};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Contractible,
    NonContractible,
}

impl Verdict {
    pub fn from_contractible(contractible: bool) -> Verdict {
        if contractible {
            Verdict::Contractible
        } else {
            Verdict::NonContractible
        }
    }

    pub fn is_contractible(self) -> bool {
        self == Verdict::Contractible
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Reason {
    /// No tree-edge label contains the edge.
    UniqueMaximalClique,
    /// Every tree-edge label containing the edge has more than κ vertices.
    AllCoveringSeparatorsExceedK,
    /// Some tree-edge label containing the edge has at most κ vertices.
    CoveringSeparatorOfSizeK,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TheoremVerdict {
    pub verdict: Verdict,
    pub reason: Reason,
}

/// Per-edge result. Fields are `None` when that method was not run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EdgeVerdict {
    #[serde(flatten)]
    pub edge: Edge,
    pub theorem: Option<Verdict>,
    pub reason: Option<Reason>,
    pub oracle: Option<Verdict>,
    pub agree: Option<bool>,
}

impl EdgeVerdict {
    fn new(edge: Edge, theorem: Option<TheoremVerdict>, oracle: Option<Verdict>) -> EdgeVerdict {
        let agree = match (theorem, oracle) {
            (Some(t), Some(o)) => Some(t.verdict == o),
            _ => None,
        };
        EdgeVerdict {
            edge,
            theorem: theorem.map(|t| t.verdict),
            reason: theorem.map(|t| t.reason),
            oracle,
            agree,
        }
    }
}

fn require_edge(g: &Graph, e: Edge) -> Result<()> {
    if g.has_edge(e.u, e.v) {
        Ok(())
    } else {
        Err(Error::InvalidEdge { u: e.u, v: e.v })
    }
}

/// Definition-level oracle: contractible iff κ(G.e) ≥ κ(G).
pub fn is_contractible_oracle(g: &Graph, e: Edge) -> Result<bool> {
    require_edge(g, e)?;
    let kappa = separators::vertex_connectivity(g);
    Ok(contracted_connectivity(g, e)? >= kappa)
}

/// κ(G.e), via bitmasks when the graph is small enough for enumeration.
pub(crate) fn contracted_connectivity(g: &Graph, e: Edge) -> Result<usize> {
    if g.vertex_count() <= separators::ENUMERATION_CONNECTIVITY_LIMIT + 1 {
        require_edge(g, e)?;
        let adj = bits::contract(&g.masks(), e.u, e.v);
        Ok(separators::connectivity_masks(&adj, g.vertex_count() - 1))
    } else {
        Ok(separators::vertex_connectivity(&g.contract_edge(e)?.graph))
    }
}

/// True iff some minimum cut set contains both endpoints of `e`.
pub fn cutsets_contain_edge(family: &MinCutFamily, e: Edge) -> bool {
    family
        .cutsets
        .iter()
        .any(|s| s.contains(&e.u) && s.contains(&e.v))
}

/// Cut-set route: true iff some member of γ_G contains both endpoints.
/// Complete graphs have an empty γ_G and so always answer `false`.
pub fn non_contractible_via_cutsets(g: &Graph, e: Edge, bound: usize) -> Result<bool> {
    require_edge(g, e)?;
    Ok(cutsets_contain_edge(
        &separators::minimum_cutsets(g, bound)?,
        e,
    ))
}

/// Tree-edge labels containing both endpoints of `e`, in tree-edge order.
pub fn covering_tree_edges(t: &impl TreeDecomposition, e: Edge) -> Result<Vec<VertexSet>> {
    if !t
        .labels()
        .iter()
        .any(|l| l.contains(&e.u) && l.contains(&e.v))
    {
        return Err(Error::Inconsistent(format!(
            "edge {e} is not covered by any label"
        )));
    }
    Ok((0..t.tree_edges().len())
        .map(|i| t.edge_label(i))
        .filter(|l| l.contains(&e.u) && l.contains(&e.v))
        .collect())
}

/// Clique-tree classification for a chordal graph with connectivity `kappa`
/// and at least `kappa + 2` vertices.
pub fn classify_edge_theorem(
    g: &Graph,
    t: &CliqueTree,
    e: Edge,
    kappa: usize,
) -> Result<TheoremVerdict> {
    require_edge(g, e)?;
    if g.vertex_count() < kappa + 2 {
        return Err(Error::Domain(format!(
            "needs at least κ + 2 = {} vertices, graph has {}",
            kappa + 2,
            g.vertex_count()
        )));
    }
    let covering = covering_tree_edges(t, e)?;
    Ok(if covering.is_empty() {
        TheoremVerdict {
            verdict: Verdict::Contractible,
            reason: Reason::UniqueMaximalClique,
        }
    } else if covering.iter().all(|l| l.len() > kappa) {
        TheoremVerdict {
            verdict: Verdict::Contractible,
            reason: Reason::AllCoveringSeparatorsExceedK,
        }
    } else {
        TheoremVerdict {
            verdict: Verdict::NonContractible,
            reason: Reason::CoveringSeparatorOfSizeK,
        }
    })
}

/// The alternative reading of the size condition, quantified over every tree
/// edge rather than only the covering ones. Kept for comparison only.
pub fn classify_edge_all_tree_edges(t: &CliqueTree, e: Edge, kappa: usize) -> Result<Verdict> {
    let covering = covering_tree_edges(t, e)?;
    let all_large = (0..t.tree_edges().len()).all(|i| t.edge_label(i).len() > kappa);
    Ok(Verdict::from_contractible(covering.is_empty() || all_large))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Theorem,
    Oracle,
    Both,
}

impl std::str::FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "theorem" => Ok(Method::Theorem),
            "oracle" => Ok(Method::Oracle),
            "both" => Ok(Method::Both),
            other => Err(format!("unknown method '{other}'")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReportOptions {
    pub method: Method,
    /// Above this many vertices the oracle is skipped.
    pub oracle_bound: usize,
}

impl Default for ReportOptions {
    fn default() -> Self {
        ReportOptions {
            method: Method::Both,
            oracle_bound: DEFAULT_ORACLE_BOUND,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Corollaries {
    /// `None` when the `n ≥ κ + 2` hypothesis fails or no oracle ran.
    pub simplicial: Option<bool>,
    pub two_k_bound: Option<bool>,
    pub split: Option<SplitReport>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ContractibilityReport {
    pub kappa: usize,
    pub n: usize,
    pub m: usize,
    pub edges: Vec<EdgeVerdict>,
    /// Oracle-contractible edges, or theorem-contractible ones when the
    /// oracle did not run.
    pub contractible_count: usize,
    pub discrepancies: Vec<Edge>,
    pub corollaries: Corollaries,
}

impl ContractibilityReport {
    pub fn hypothesis_holds(&self) -> bool {
        self.n >= self.kappa + 2
    }

    fn oracle_evaluated(&self) -> bool {
        self.edges.iter().all(|v| v.oracle.is_some())
    }
}

/// Both classifications for every edge of a connected chordal graph, plus
/// the corollary checks.
pub fn full_report(g: &Graph, opts: ReportOptions) -> Result<ContractibilityReport> {
    let tree = build_clique_tree(g)?;
    let kappa = separators::vertex_connectivity(g);
    let n = g.vertex_count();
    let run_theorem = opts.method != Method::Oracle && n >= kappa + 2;
    let run_oracle = opts.method != Method::Theorem && n <= opts.oracle_bound;

    let edges = g.edges();
    let verdicts: Vec<EdgeVerdict> = edges
        .par_iter()
        .map(|&e| {
            let theorem = if run_theorem {
                Some(classify_edge_theorem(g, &tree, e, kappa)?)
            } else {
                None
            };
            let oracle = if run_oracle {
                Some(Verdict::from_contractible(
                    contracted_connectivity(g, e)? >= kappa,
                ))
            } else {
                None
            };
            Ok(EdgeVerdict::new(e, theorem, oracle))
        })
        .collect::<Result<_>>()?;

    let contractible_count = verdicts
        .iter()
        .filter(|v| v.oracle.or(v.theorem).is_some_and(Verdict::is_contractible))
        .count();
    let discrepancies = verdicts
        .iter()
        .filter(|v| v.agree == Some(false))
        .map(|v| v.edge)
        .collect();
    let mut report = ContractibilityReport {
        kappa,
        n,
        m: edges.len(),
        edges: verdicts,
        contractible_count,
        discrepancies,
        corollaries: Corollaries {
            simplicial: None,
            two_k_bound: None,
            split: None,
        },
    };
    report.corollaries.simplicial = check_simplicial_corollary(g, &report);
    report.corollaries.two_k_bound = check_2k_bound(&report);
    if run_oracle && report.hypothesis_holds() {
        if let Some(p) = split_partition(g, opts.oracle_bound)? {
            report.corollaries.split = split_contractibility_report(g, &p, &report);
        }
    }
    Ok(report)
}

/// Every edge with a simplicial endpoint is oracle-contractible. `None` when
/// the hypothesis `n ≥ κ + 2` fails or the oracle did not run.
pub fn check_simplicial_corollary(g: &Graph, report: &ContractibilityReport) -> Option<bool> {
    if !report.hypothesis_holds() || !report.oracle_evaluated() {
        return None;
    }
    let simplicial: Vec<bool> = (0..g.vertex_count())
        .map(|v| g.is_simplicial(v).unwrap_or(false))
        .collect();
    Some(
        report
            .edges
            .iter()
            .filter(|v| simplicial[v.edge.u] || simplicial[v.edge.v])
            .all(|v| v.oracle == Some(Verdict::Contractible)),
    )
}

/// At least 2κ contractible edges. Same gating as the simplicial check.
pub fn check_2k_bound(report: &ContractibilityReport) -> Option<bool> {
    if !report.hypothesis_holds() || !report.oracle_evaluated() {
        return None;
    }
    Some(report.contractible_count >= 2 * report.kappa)
}

/// A clique `K` and a stable set `I` partitioning the vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SplitPartition {
    pub clique_part: VertexSet,
    pub stable_part: VertexSet,
}

/// Brute-force split partition: the largest possible `K`, ties going to the
/// lexicographically smallest vertex list.
pub fn split_partition(g: &Graph, bound: usize) -> Result<Option<SplitPartition>> {
    let limit = bound.min(64);
    let n = g.vertex_count();
    if n > limit {
        return Err(Error::Resource {
            vertex_count: n,
            bound: limit,
        });
    }
    let adj = g.masks();
    let all = bits::full(n);
    let stable = |s: u64| bits::ones(s).all(|v| adj[v] & s == 0);
    for size in (0..=n).rev() {
        let best = bits::subsets_of_size(n, size)
            .filter(|&k| bits::is_clique(&adj, k) && stable(all & !k))
            .map(|k| bits::ones(k).collect::<Vec<usize>>())
            .min();
        if let Some(k) = best {
            let clique_part: VertexSet = k.into_iter().collect();
            let stable_part = (0..n).filter(|v| !clique_part.contains(v)).collect();
            return Ok(Some(SplitPartition {
                clique_part,
                stable_part,
            }));
        }
    }
    Ok(None)
}

/// Oracle findings for a split graph next to the regular-case prediction
/// (a regular split graph is contraction critical).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SplitReport {
    pub clique_part: VertexSet,
    pub stable_part: VertexSet,
    pub k_i_edges_contractible: bool,
    pub regular: bool,
    pub contraction_critical: bool,
    pub predicted_contraction_critical: bool,
    pub prediction_agrees: bool,
}

/// `None` when the hypothesis `n ≥ κ + 2` fails or the oracle did not run.
pub fn split_contractibility_report(
    g: &Graph,
    p: &SplitPartition,
    report: &ContractibilityReport,
) -> Option<SplitReport> {
    if !report.hypothesis_holds() || !report.oracle_evaluated() {
        return None;
    }
    let crosses = |e: Edge| p.clique_part.contains(&e.u) != p.clique_part.contains(&e.v);
    let k_i_edges_contractible = report
        .edges
        .iter()
        .filter(|v| crosses(v.edge))
        .all(|v| v.oracle == Some(Verdict::Contractible));
    let contraction_critical = report
        .edges
        .iter()
        .all(|v| v.oracle == Some(Verdict::NonContractible));
    let regular = g.is_regular();
    Some(SplitReport {
        clique_part: p.clique_part.clone(),
        stable_part: p.stable_part.clone(),
        k_i_edges_contractible,
        regular,
        contraction_critical,
        predicted_contraction_critical: regular,
        prediction_agrees: !regular || contraction_critical,
    })
}
