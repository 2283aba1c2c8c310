//! The verification harness: runs every structural property over exhaustive
//! and seeded graph populations and collects counterexamples.
//!
//! Properties come in two kinds. Assertions must hold on every instance; a
//! failure is a counterexample and fails the run. Report-only observations
//! track statements that are known to disagree with the oracles on some
//! inputs (the `M''` inclusion filter, the all-tree-edges reading of the
//! size condition, criticality of regular split graphs); they are counted
//! and printed but never fail the run.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use crate::clique_tree::{
    build_clique_tree, set_notation, tree_connected_check, tree_contract, tree_minus_separator,
    validate_tree_decomposition, TreeDecomposition,
};
use crate::contractibility::{
    self, classify_edge_all_tree_edges, cutsets_contain_edge, full_report, Method, ReportOptions,
    Verdict,
};
use crate::error::{Error, Result};
use crate::generators::{self, SplitMix64, MAX_ENUMERATION_N};
use crate::graph::{Graph, VertexSet};
use crate::io::{serialize_graph, Format};
use crate::separators::{self, compare_separator_sources, DEFAULT_ORACLE_BOUND};

/// Counterexamples kept per property; the failure count is always exact.
pub const MAX_EXAMPLES: usize = 5;

const CHUNK: usize = 8192;

pub const CUTSET_EQUIVALENCE: &str = "cutset_contraction_equivalence";
pub const CLIQUE_TREE_VALID: &str = "clique_tree_valid";
pub const SEPARATORS_MATCH_ORACLE: &str = "separators_match_oracle";
pub const TREE_LABEL_CONNECTIVITY: &str = "tree_label_connectivity";
pub const CONTRACTED_TREE_DECOMPOSITION: &str = "contracted_tree_decomposition";
pub const KTREE_CONNECTIVITY: &str = "ktree_connectivity";
pub const COVERING_LABEL_CLASSIFICATION: &str = "covering_label_classification";
pub const SIMPLICIAL_EDGES_CONTRACTIBLE: &str = "simplicial_edges_contractible";
pub const TWO_K_CONTRACTIBLE_EDGES: &str = "two_k_contractible_edges";
pub const COMPLETE_GRAPHS_NON_CONTRACTIBLE: &str = "complete_graphs_non_contractible";
pub const SPLIT_K_I_EDGES_CONTRACTIBLE: &str = "split_k_i_edges_contractible";

pub const INCLUSION_MINIMAL_FILTER: &str = "inclusion_minimal_filter";
pub const INCLUSION_MINIMAL_WITNESS: &str = "inclusion_minimal_filter_witness";
pub const ALL_TREE_EDGES_READING: &str = "all_tree_edges_reading";
pub const REGULAR_SPLIT_CONTRACTION_CRITICAL: &str = "regular_split_contraction_critical";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Kind {
    Assertion,
    ReportOnly,
}

const REGISTRY: &[(&str, Kind, &str)] = &[
    (CUTSET_EQUIVALENCE, Kind::Assertion, "kappa(G.e) < kappa(G) iff a minimum cut set holds both endpoints"),
    (CLIQUE_TREE_VALID, Kind::Assertion, "clique tree is a tree decomposition whose labels are cliques"),
    (SEPARATORS_MATCH_ORACLE, Kind::Assertion, "distinct tree-edge labels equal the brute-force minimal separators"),
    (TREE_LABEL_CONNECTIVITY, Kind::Assertion, "tree labels meet on every tree edge; deleting any minimal separator breaks that and disconnects G"),
    (CONTRACTED_TREE_DECOMPOSITION, Kind::Assertion, "T.e is a tree decomposition of G.e with meeting labels when G.e is connected"),
    (KTREE_CONNECTIVITY, Kind::Assertion, "random k-trees with n >= k+2 have connectivity exactly k"),
    (COVERING_LABEL_CLASSIFICATION, Kind::Assertion, "covering-label classification agrees with the contraction oracle on every edge"),
    (SIMPLICIAL_EDGES_CONTRACTIBLE, Kind::Assertion, "edges at simplicial vertices are contractible"),
    (TWO_K_CONTRACTIBLE_EDGES, Kind::Assertion, "at least 2k contractible edges"),
    (COMPLETE_GRAPHS_NON_CONTRACTIBLE, Kind::Assertion, "no edge of K_n is contractible"),
    (SPLIT_K_I_EDGES_CONTRACTIBLE, Kind::Assertion, "in non-regular split graphs every clique-stable edge is contractible"),
    (INCLUSION_MINIMAL_FILTER, Kind::ReportOnly, "inclusion-minimal tree-edge labels equal the minimal separators"),
    (INCLUSION_MINIMAL_WITNESS, Kind::ReportOnly, "inclusion-minimal filter on the nested-separator witness"),
    (ALL_TREE_EDGES_READING, Kind::ReportOnly, "size condition quantified over all tree edges agrees with the oracle"),
    (REGULAR_SPLIT_CONTRACTION_CRITICAL, Kind::ReportOnly, "regular split graphs with n >= k+2 are contraction critical"),
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct VerifyConfig {
    /// Exhaustive bound for connected chordal graphs; general graphs are
    /// enumerated up to `max_n - 1`.
    pub max_n: usize,
    /// Size of each seeded population.
    pub samples: usize,
    pub max_oracle_n: usize,
    pub seed: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            max_n: 7,
            samples: 2000,
            max_oracle_n: DEFAULT_ORACLE_BOUND,
            seed: 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    /// Edge-list serialization of the offending graph.
    pub graph: String,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropertyOutcome {
    pub name: &'static str,
    pub kind: Kind,
    pub description: &'static str,
    pub instances: usize,
    pub checks: usize,
    pub failures: usize,
    pub examples: Vec<Counterexample>,
}

impl PropertyOutcome {
    pub fn holds(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Populations {
    pub general_exhaustive: usize,
    pub general_random: usize,
    pub chordal_exhaustive: usize,
    pub chordal_random_ktree: usize,
    pub chordal_random_insertion: usize,
    pub complete: usize,
    pub split_non_regular: usize,
    pub split_regular: usize,
    pub witness: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub config: VerifyConfig,
    pub populations: Populations,
    pub properties: Vec<PropertyOutcome>,
    pub observations: Vec<PropertyOutcome>,
    pub counterexamples: usize,
    pub passed: bool,
}

impl VerifyReport {
    pub fn property(&self, name: &str) -> Option<&PropertyOutcome> {
        self.properties
            .iter()
            .chain(&self.observations)
            .find(|p| p.name == name)
    }

    /// 0 when no assertion failed, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.passed {
            0
        } else {
            1
        }
    }

    /// Deterministic JSON with sorted keys.
    pub fn to_json(&self) -> String {
        let value = serde_json::to_value(self).expect("report serializes");
        let mut out = serde_json::to_string_pretty(&value).expect("value serializes");
        out.push('\n');
        out
    }

    pub fn summary(&self) -> String {
        let mut out = String::new();
        let p = &self.populations;
        let _ = writeln!(
            out,
            "populations: general {}+{} random, chordal {}+{} k-trees+{} insertion, complete {}, split {} non-regular/{} regular, witness {}",
            p.general_exhaustive,
            p.general_random,
            p.chordal_exhaustive,
            p.chordal_random_ktree,
            p.chordal_random_insertion,
            p.complete,
            p.split_non_regular,
            p.split_regular,
            p.witness
        );
        for prop in &self.properties {
            let _ = writeln!(
                out,
                "{} {}: {} instances, {} checks, {} failures",
                if prop.holds() { "PASS" } else { "FAIL" },
                prop.name,
                prop.instances,
                prop.checks,
                prop.failures
            );
            for ex in &prop.examples {
                let _ = writeln!(out, "  counterexample: {}", ex.detail);
                for line in ex.graph.lines() {
                    let _ = writeln!(out, "    {line}");
                }
            }
        }
        for obs in &self.observations {
            let _ = writeln!(
                out,
                "NOTE {} (report-only): {} mismatches over {} instances",
                obs.name, obs.failures, obs.instances
            );
            for ex in obs.examples.iter().take(2) {
                let _ = writeln!(out, "  e.g. {}", ex.detail);
            }
        }
        let _ = writeln!(
            out,
            "{}: {} counterexamples",
            if self.passed {
                "verify passed"
            } else {
                "verify FAILED"
            },
            self.counterexamples
        );
        out
    }
}

/// Result of one property on one graph.
struct Finding {
    name: &'static str,
    checks: usize,
    failures: Vec<String>,
}

impl Finding {
    fn new(name: &'static str) -> Self {
        Finding {
            name,
            checks: 0,
            failures: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(detail());
        }
    }

    fn single(name: &'static str, ok: bool, detail: impl FnOnce() -> String) -> Self {
        let mut f = Finding::new(name);
        f.check(ok, detail);
        f
    }
}

trait Instance: Send + Sync {
    fn graph(&self) -> &Graph;
}

impl Instance for Graph {
    fn graph(&self) -> &Graph {
        self
    }
}

/// A k-tree sample with its width.
impl Instance for (Graph, usize) {
    fn graph(&self) -> &Graph {
        &self.0
    }
}

struct Ledger {
    entries: Vec<PropertyOutcome>,
}

impl Ledger {
    fn new() -> Self {
        Ledger {
            entries: REGISTRY
                .iter()
                .map(|&(name, kind, description)| PropertyOutcome {
                    name,
                    kind,
                    description,
                    instances: 0,
                    checks: 0,
                    failures: 0,
                    examples: Vec::new(),
                })
                .collect(),
        }
    }

    fn absorb(&mut self, g: &Graph, findings: Vec<Finding>) {
        for f in findings {
            let entry = self
                .entries
                .iter_mut()
                .find(|e| e.name == f.name)
                .expect("every finding names a registered property");
            entry.instances += 1;
            entry.checks += f.checks;
            entry.failures += f.failures.len();
            for detail in f.failures {
                if entry.examples.len() < MAX_EXAMPLES {
                    entry.examples.push(Counterexample {
                        graph: serialize_graph(g, Format::EdgeList),
                        detail,
                    });
                }
            }
        }
    }

    /// Evaluates `eval` over `instances` in parallel and absorbs the findings
    /// in input order.
    fn run<T, I, F>(&mut self, instances: I, eval: F) -> usize
    where
        T: Instance,
        I: Iterator<Item = T>,
        F: Fn(&T) -> Vec<Finding> + Sync,
    {
        let mut instances = instances.peekable();
        let mut count = 0;
        while instances.peek().is_some() {
            let chunk: Vec<T> = instances.by_ref().take(CHUNK).collect();
            let findings: Vec<Vec<Finding>> = chunk.par_iter().map(&eval).collect();
            count += chunk.len();
            for (item, f) in chunk.iter().zip(findings) {
                self.absorb(item.graph(), f);
            }
        }
        count
    }

    fn finish(self, config: VerifyConfig, populations: Populations) -> VerifyReport {
        let (properties, observations): (Vec<_>, Vec<_>) = self
            .entries
            .into_iter()
            .partition(|e| e.kind == Kind::Assertion);
        let counterexamples = properties.iter().map(|p| p.failures).sum();
        VerifyReport {
            config,
            populations,
            properties,
            observations,
            counterexamples,
            passed: counterexamples == 0,
        }
    }
}

fn family_notation(sets: &BTreeSet<VertexSet>) -> String {
    let items: Vec<String> = sets.iter().map(set_notation).collect();
    format!("{{{}}}", items.join(","))
}

/// Cut-set route against the contraction oracle on a connected non-complete graph.
fn general_findings(g: &Graph, bound: usize) -> Vec<Finding> {
    let mut f = Finding::new(CUTSET_EQUIVALENCE);
    let family = match separators::minimum_cutsets(g, bound) {
        Ok(family) => family,
        Err(err) => {
            f.check(false, || format!("minimum cut sets failed: {err}"));
            return vec![f];
        }
    };
    for e in g.edges() {
        let drops = match contractibility::contracted_connectivity(g, e) {
            Ok(k) => k < family.kappa,
            Err(err) => {
                f.check(false, || format!("contraction of {e} failed: {err}"));
                continue;
            }
        };
        let in_cutset = cutsets_contain_edge(&family, e);
        f.check(drops == in_cutset, || {
            format!(
                "edge {e}: kappa drop {drops}, in minimum cut set {in_cutset} (kappa {}, cut sets {})",
                family.kappa,
                family_notation(&family.cutsets)
            )
        });
    }
    vec![f]
}

/// Every clique-tree, separator and contractibility property of one
/// connected chordal graph. `ktree_width` is set for k-tree samples.
fn chordal_findings(g: &Graph, bound: usize, ktree_width: Option<usize>) -> Vec<Finding> {
    let tree = match build_clique_tree(g) {
        Ok(t) => t,
        Err(err) => {
            return vec![Finding::single(CLIQUE_TREE_VALID, false, || {
                format!("clique tree construction failed: {err}")
            })]
        }
    };
    let mut out = Vec::new();
    let check = validate_tree_decomposition(&tree, g);
    let cliques = tree.labels().iter().all(|l| g.is_clique(l.iter()));
    out.push(Finding::single(
        CLIQUE_TREE_VALID,
        check.is_valid() && cliques && tree.labels().len() <= g.vertex_count(),
        || {
            format!(
                "violations {:?}, labels are cliques {cliques}",
                check.violations()
            )
        },
    ));

    let (_, report) = match compare_separator_sources(g, &tree, bound) {
        Ok(r) => r,
        Err(err) => {
            out.push(Finding::single(SEPARATORS_MATCH_ORACLE, false, || {
                format!("separator comparison failed: {err}")
            }));
            return out;
        }
    };
    out.push(Finding::single(
        SEPARATORS_MATCH_ORACLE,
        report.m_prime_matches_oracle,
        || {
            format!(
                "tree-edge labels {:?}, oracle {}",
                report.m_prime.iter().map(set_notation).collect::<Vec<_>>(),
                family_notation(&report.oracle)
            )
        },
    ));
    out.push(Finding::single(
        INCLUSION_MINIMAL_FILTER,
        report.m_double_prime_matches_oracle(),
        || {
            format!(
                "M'' = {}, oracle = {}, missing {}, extra {}",
                family_notation(&report.m_double_prime),
                family_notation(&report.oracle),
                family_notation(&report.missing_from_m2),
                family_notation(&report.extra_in_m2)
            )
        },
    ));

    let mut label_check = Finding::new(TREE_LABEL_CONNECTIVITY);
    label_check.check(tree_connected_check(&tree), || {
        "connected graph has a tree edge with disjoint labels".into()
    });
    for s in &report.oracle {
        let minus = tree_minus_separator(&tree, s);
        let parts = g
            .induced_delete(s)
            .map(|(rest, _)| rest.connected_components().len())
            .unwrap_or(0);
        label_check.check(!tree_connected_check(&minus) && parts >= 2, || {
            format!(
                "separator {}: T\\S passes the check or G-S has {parts} components",
                set_notation(s)
            )
        });
    }
    out.push(label_check);

    let kappa = report.kappa;
    if let Some(k) = ktree_width {
        if g.vertex_count() >= k + 2 {
            out.push(Finding::single(KTREE_CONNECTIVITY, kappa == k, || {
                format!("{k}-tree has connectivity {kappa}")
            }));
        }
    }

    let mut contracted = Finding::new(CONTRACTED_TREE_DECOMPOSITION);
    for e in g.edges() {
        let outcome = g
            .contract_edge(e)
            .and_then(|r| tree_contract(&tree, e, &r).map(|t| (r, t)));
        match outcome {
            Ok((r, te)) => {
                let valid = validate_tree_decomposition(&te, &r.graph);
                let meets = !r.graph.is_connected() || tree_connected_check(&te);
                contracted.check(valid.is_valid() && meets, || {
                    format!(
                        "edge {e}: violations {:?}, labels meet {meets}",
                        valid.violations()
                    )
                });
            }
            Err(err) => contracted.check(false, || format!("edge {e}: {err}")),
        }
    }
    out.push(contracted);

    if g.vertex_count() >= kappa + 2 {
        let opts = ReportOptions {
            method: Method::Both,
            oracle_bound: bound,
        };
        match full_report(g, opts) {
            Ok(r) => {
                let mut theorem = Finding::new(COVERING_LABEL_CLASSIFICATION);
                let mut reading = Finding::new(ALL_TREE_EDGES_READING);
                let mut diverging = Vec::new();
                for v in &r.edges {
                    theorem.check(v.agree == Some(true), || {
                        format!(
                            "edge {}: theorem {:?} ({:?}), oracle {:?}",
                            v.edge, v.theorem, v.reason, v.oracle
                        )
                    });
                    if let (Ok(alt), Some(oracle)) =
                        (classify_edge_all_tree_edges(&tree, v.edge, kappa), v.oracle)
                    {
                        if alt != oracle {
                            diverging.push(v.edge.to_string());
                        }
                    }
                }
                reading.check(diverging.is_empty(), || {
                    format!(
                        "kappa {kappa}: all-tree-edges reading misclassifies {}",
                        diverging.join(" ")
                    )
                });
                out.push(theorem);
                out.push(reading);
                out.push(Finding::single(
                    SIMPLICIAL_EDGES_CONTRACTIBLE,
                    r.corollaries.simplicial == Some(true),
                    || format!("simplicial corollary result {:?}", r.corollaries.simplicial),
                ));
                out.push(Finding::single(
                    TWO_K_CONTRACTIBLE_EDGES,
                    r.corollaries.two_k_bound == Some(true),
                    || {
                        format!(
                            "{} contractible edges, kappa {}",
                            r.contractible_count, r.kappa
                        )
                    },
                ));
            }
            Err(err) => out.push(Finding::single(
                COVERING_LABEL_CLASSIFICATION,
                false,
                || format!("report failed: {err}"),
            )),
        }
    }
    out
}

fn complete_findings(g: &Graph, bound: usize) -> Vec<Finding> {
    let opts = ReportOptions {
        method: Method::Both,
        oracle_bound: bound,
    };
    let ok = full_report(g, opts).map(|r| {
        (
            r.contractible_count,
            r.edges
                .iter()
                .all(|v| v.oracle == Some(Verdict::NonContractible)),
        )
    });
    vec![Finding::single(
        COMPLETE_GRAPHS_NON_CONTRACTIBLE,
        matches!(ok, Ok((0, true))),
        || format!("K_{}: {ok:?}", g.vertex_count()),
    )]
}

fn split_findings(g: &Graph, bound: usize) -> Vec<Finding> {
    let opts = ReportOptions {
        method: Method::Both,
        oracle_bound: bound,
    };
    let report = match full_report(g, opts) {
        Ok(r) => r,
        Err(err) => {
            return vec![Finding::single(SPLIT_K_I_EDGES_CONTRACTIBLE, false, || {
                format!("report failed: {err}")
            })]
        }
    };
    if !report.hypothesis_holds() {
        return Vec::new();
    }
    let split = report.corollaries.split.as_ref();
    if g.is_regular() {
        return vec![Finding::single(
            REGULAR_SPLIT_CONTRACTION_CRITICAL,
            split.is_some_and(|s| s.prediction_agrees),
            || format!("regular split graph: {split:?}"),
        )];
    }
    vec![Finding::single(
        SPLIT_K_I_EDGES_CONTRACTIBLE,
        split.is_some_and(|s| s.k_i_edges_contractible),
        || format!("split report {split:?}"),
    )]
}

/// The nested-separator witness: maximal cliques {0,1,2}, {0,1,3}, {0,4}.
pub fn nested_separator_witness() -> Graph {
    Graph::from_edges(5, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (0, 4)])
        .expect("witness edges are valid")
}

fn witness_findings(g: &Graph, bound: usize) -> Vec<Finding> {
    let mut out = Vec::new();
    let tree = match build_clique_tree(g) {
        Ok(t) => t,
        Err(err) => {
            return vec![Finding::single(SEPARATORS_MATCH_ORACLE, false, || {
                err.to_string()
            })]
        }
    };
    match compare_separator_sources(g, &tree, bound) {
        Ok((_, r)) => {
            out.push(Finding::single(
                SEPARATORS_MATCH_ORACLE,
                r.m_prime_matches_oracle,
                || format!("witness: oracle {}", family_notation(&r.oracle)),
            ));
            out.push(Finding::single(INCLUSION_MINIMAL_WITNESS, r.m_double_prime_matches_oracle(), || {
                format!(
                    "M'' = {} but the minimal separators are {}: missing {}; distinct M' matches the oracle: {}",
                    family_notation(&r.m_double_prime),
                    family_notation(&r.oracle),
                    family_notation(&r.missing_from_m2),
                    r.m_prime_matches_oracle
                )
            }));
        }
        Err(err) => out.push(Finding::single(SEPARATORS_MATCH_ORACLE, false, || {
            err.to_string()
        })),
    }
    out
}

fn salted(seed: u64, salt: u64) -> SplitMix64 {
    SplitMix64::new(seed ^ salt)
}

/// Runs every property over every population.
pub fn run(config: &VerifyConfig) -> Result<VerifyReport> {
    if config.max_n > MAX_ENUMERATION_N {
        return Err(Error::Resource {
            vertex_count: config.max_n,
            bound: MAX_ENUMERATION_N,
        });
    }
    let bound = config.max_oracle_n.min(64);
    let mut ledger = Ledger::new();
    let mut pop = Populations {
        witness: ledger.run(std::iter::once(nested_separator_witness()), |g| {
            witness_findings(g, bound)
        }),
        ..Populations::default()
    };

    let general_max = config.max_n.saturating_sub(1).min(bound);
    for n in 1..=general_max {
        let graphs = generators::enumerate_connected(n)?.filter(|g| !g.is_complete());
        pop.general_exhaustive += ledger.run(graphs, |g| general_findings(g, bound));
    }
    let (lo, hi) = (7, 9.min(bound));
    if lo <= hi {
        let mut rng = salted(config.seed, 0x6c65_6d6d_6131);
        let graphs: Vec<Graph> = (0..config.samples)
            .map(|_| loop {
                let n = rng.range(lo, hi);
                let density = 0.25 + 0.6 * rng.unit();
                let g = generators::random_connected(n, density, rng.next_u64());
                if !g.is_complete() {
                    break g;
                }
            })
            .collect();
        pop.general_random = ledger.run(graphs.into_iter(), |g| general_findings(g, bound));
    }

    for n in 1..=config.max_n.min(bound) {
        pop.chordal_exhaustive += ledger.run(generators::enumerate_small_chordal(n)?, |g| {
            chordal_findings(g, bound, None)
        });
    }
    let chordal_hi = 12.min(bound);
    let mut rng = salted(config.seed, 0x6b74_7265_6573);
    let ktrees: Vec<(Graph, usize)> = (0..config.samples)
        .filter_map(|_| {
            let k = rng.range(2, 4);
            if k + 2 > chordal_hi {
                return None;
            }
            let n = rng.range(k + 2, chordal_hi);
            generators::random_ktree(n, k, rng.next_u64())
                .ok()
                .map(|g| (g, k))
        })
        .collect();
    pop.chordal_random_ktree = ledger.run(ktrees.into_iter(), |(g, k)| {
        chordal_findings(g, bound, Some(*k))
    });
    if chordal_hi >= 2 {
        let mut rng = salted(config.seed, 0x696e_7365_7274);
        let graphs: Vec<Graph> = (0..config.samples)
            .map(|_| {
                let n = rng.range(2, chordal_hi);
                let density = 0.1 + 0.8 * rng.unit();
                generators::random_chordal(n, density, rng.next_u64())
            })
            .collect();
        pop.chordal_random_insertion =
            ledger.run(graphs.into_iter(), |g| chordal_findings(g, bound, None));
    }

    pop.complete = ledger.run((3..=8.min(bound)).map(Graph::complete), |g| {
        complete_findings(g, bound)
    });

    let split_hi = 12.min(bound);
    if split_hi >= 2 {
        let mut rng = salted(config.seed, 0x0073_706c_6974);
        let mut graphs = Vec::new();
        let mut non_regular = 0;
        let mut attempts = 0;
        while non_regular < config.samples && attempts < 20 * config.samples.max(1) {
            attempts += 1;
            let n_clique = rng.range(1, (split_hi - 1).min(8));
            let n_stable = rng.range(1, split_hi - n_clique);
            let p = 0.2 + 0.7 * rng.unit();
            let g = generators::random_split(n_clique, n_stable, p, true, rng.next_u64());
            if g.is_regular() {
                pop.split_regular += 1;
            } else {
                non_regular += 1;
            }
            graphs.push(g);
        }
        pop.split_non_regular = non_regular;
        ledger.run(graphs.into_iter(), |g| split_findings(g, bound));
    }

    Ok(ledger.finish(*config, pop))
}
