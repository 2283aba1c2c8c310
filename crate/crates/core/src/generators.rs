//! Seeded graph families for the verification harness and exhaustive
//! enumeration of small labeled graphs.
//!
//! All randomness comes from [`SplitMix64`]; a choice among `k` options is
//! `next_u64() % k`. The modulo bias is at most `k / 2^64` and keeps every
//! draw a single PRNG step, so corpora are reproducible from the seed alone.

use serde::Serialize;

use crate::bits;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest `n` accepted by the exhaustive enumerators.
pub const MAX_ENUMERATION_N: usize = 7;

#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform-ish index in `0..k`; `k` must be positive.
    pub fn below(&mut self, k: usize) -> usize {
        (self.next_u64() % k as u64) as usize
    }

    /// Uniform in `[lo, hi]`.
    pub fn range(&mut self, lo: usize, hi: usize) -> usize {
        lo + self.below(hi - lo + 1)
    }

    /// 53-bit float in `[0, 1)`.
    pub fn unit(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 / (1u64 << 53) as f64
    }

    pub fn chance(&mut self, p: f64) -> bool {
        self.unit() < p
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Chordal,
    Ktree,
    Split,
    AllGraphs,
}

impl std::str::FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "chordal" => Ok(Family::Chordal),
            "ktree" | "k-tree" => Ok(Family::Ktree),
            "split" => Ok(Family::Split),
            "all-graphs" | "all" => Ok(Family::AllGraphs),
            other => Err(format!("unknown family '{other}'")),
        }
    }
}

/// Everything needed to regenerate one graph.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GenSpec {
    pub family: Family,
    pub n: usize,
    /// k-tree width, or clique size for split graphs.
    pub k: usize,
    pub density: f64,
    pub seed: u64,
}

impl GenSpec {
    pub fn generate(&self) -> Result<Graph> {
        if self.n == 0 {
            return Err(Error::Domain("n must be at least 1".into()));
        }
        if !(0.0..=1.0).contains(&self.density) {
            return Err(Error::Domain(format!(
                "density {} is outside [0, 1]",
                self.density
            )));
        }
        match self.family {
            Family::Chordal => Ok(random_chordal(self.n, self.density, self.seed)),
            Family::Ktree => random_ktree(self.n, self.k, self.seed),
            Family::Split => {
                if self.k == 0 || self.k > self.n {
                    return Err(Error::Domain(format!(
                        "clique size {} must be in 1..={}",
                        self.k, self.n
                    )));
                }
                Ok(random_split(
                    self.k,
                    self.n - self.k,
                    self.density,
                    true,
                    self.seed,
                ))
            }
            Family::AllGraphs => Ok(random_connected(self.n, self.density, self.seed)),
        }
    }

    /// One-line description for a header comment.
    pub fn describe(&self) -> String {
        format!(
            "family={} n={} k={} density={} seed={}",
            serde_json::to_value(self.family)
                .ok()
                .and_then(|v| v.as_str().map(String::from))
                .unwrap_or_default(),
            self.n,
            self.k,
            self.density,
            self.seed
        )
    }
}

/// Connected chordal graph grown one vertex at a time: each new vertex picks
/// a maximal clique uniformly and joins a non-empty subset of it, each member
/// kept with probability `density`.
pub fn random_chordal(n: usize, density: f64, seed: u64) -> Graph {
    let mut rng = SplitMix64::new(seed);
    let mut g = Graph::empty(n);
    let mut cliques: Vec<Vec<usize>> = vec![vec![0]];
    for v in 1..n {
        let ci = rng.below(cliques.len());
        let clique = cliques[ci].clone();
        let mut back: Vec<usize> = clique
            .iter()
            .copied()
            .filter(|_| rng.chance(density))
            .collect();
        if back.is_empty() {
            back.push(clique[rng.below(clique.len())]);
        }
        for &w in &back {
            g.add_edge(v, w).expect("fresh vertex ids are in range");
        }
        if back.len() == clique.len() {
            cliques[ci].push(v);
        } else {
            back.push(v);
            cliques.push(back);
        }
    }
    g
}

/// Random k-tree: `K_{k+1}`, then each new vertex joins a uniformly chosen
/// existing k-clique.
pub fn random_ktree(n: usize, k: usize, seed: u64) -> Result<Graph> {
    if n <= k {
        return Err(Error::Domain(format!(
            "a {k}-tree needs more than {k} vertices, got {n}"
        )));
    }
    let mut rng = SplitMix64::new(seed);
    let mut g = Graph::empty(n);
    for a in 0..=k {
        for b in a + 1..=k {
            g.add_edge(a, b)?;
        }
    }
    let mut k_cliques: Vec<Vec<usize>> = (0..=k)
        .map(|skip| (0..=k).filter(|&x| x != skip).collect())
        .collect();
    for v in k + 1..n {
        let base = k_cliques[rng.below(k_cliques.len())].clone();
        for &w in &base {
            g.add_edge(v, w)?;
        }
        for skip in 0..base.len() {
            let mut c: Vec<usize> = base
                .iter()
                .copied()
                .enumerate()
                .filter(|&(i, _)| i != skip)
                .map(|(_, x)| x)
                .collect();
            c.push(v);
            k_cliques.push(c);
        }
    }
    Ok(g)
}

/// Clique on `0..n_clique`, stable set after it, each clique/stable pair
/// joined with probability `p`. With `connected`, stable vertices left
/// isolated are dropped and the ids compacted.
pub fn random_split(n_clique: usize, n_stable: usize, p: f64, connected: bool, seed: u64) -> Graph {
    let mut rng = SplitMix64::new(seed);
    let mut edges = Vec::new();
    for a in 0..n_clique {
        for b in a + 1..n_clique {
            edges.push((a, b));
        }
    }
    let mut next = n_clique;
    for _ in 0..n_stable {
        let joined: Vec<usize> = (0..n_clique).filter(|_| rng.chance(p)).collect();
        if connected && joined.is_empty() {
            continue;
        }
        edges.extend(joined.into_iter().map(|w| (next, w)));
        next += 1;
    }
    Graph::from_edges(next, edges).expect("generated ids are in range")
}

/// `G(n, density)` redrawn until connected. After 64 failed draws a random
/// spanning tree is added to the last draw.
pub fn random_connected(n: usize, density: f64, seed: u64) -> Graph {
    let mut rng = SplitMix64::new(seed);
    let mut g = Graph::empty(n);
    for _ in 0..64 {
        g = Graph::empty(n);
        for a in 0..n {
            for b in a + 1..n {
                if rng.chance(density) {
                    g.add_edge(a, b).expect("ids are in range");
                }
            }
        }
        if g.is_connected() {
            return g;
        }
    }
    for v in 1..n {
        let w = rng.below(v);
        g.add_edge(v, w).expect("ids are in range");
    }
    g
}

fn check_enumeration_bound(n: usize) -> Result<()> {
    if n > MAX_ENUMERATION_N {
        return Err(Error::Resource {
            vertex_count: n,
            bound: MAX_ENUMERATION_N,
        });
    }
    Ok(())
}

/// Vertex pairs of `K_n` in lexicographic order; bit `i` of an edge mask
/// selects `pairs[i]`.
fn vertex_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .collect()
}

/// Every labeled graph on `n` vertices accepted by `keep`, in edge-mask order.
fn enumerate_filtered(n: usize, keep: impl Fn(&[u64]) -> bool) -> impl Iterator<Item = Graph> {
    let pairs = vertex_pairs(n);
    let total: u64 = 1 << pairs.len();
    (0..total).filter_map(move |mask| {
        let mut adj = vec![0u64; n];
        for (i, &(a, b)) in pairs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                adj[a] |= 1 << b;
                adj[b] |= 1 << a;
            }
        }
        if !keep(&adj) {
            return None;
        }
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|&(i, _)| mask >> i & 1 == 1)
            .map(|(_, &p)| p);
        Some(Graph::from_edges(n, edges).expect("pairs are valid edges"))
    })
}

fn connected_masks(adj: &[u64], n: usize) -> bool {
    n > 0 && bits::reach(adj, 1, bits::full(n)) == bits::full(n)
}

/// Every connected labeled graph on `n` vertices.
pub fn enumerate_connected(n: usize) -> Result<impl Iterator<Item = Graph>> {
    check_enumeration_bound(n)?;
    Ok(enumerate_filtered(n, move |adj| connected_masks(adj, n)))
}

/// Every connected chordal labeled graph on `n` vertices, exactly once.
pub fn enumerate_small_chordal(n: usize) -> Result<impl Iterator<Item = Graph>> {
    check_enumeration_bound(n)?;
    Ok(enumerate_filtered(n, move |adj| {
        connected_masks(adj, n) && bits::is_chordal(adj, n)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chordal::is_chordal;
    use crate::separators::vertex_connectivity;

    #[test]
    fn splitmix_reference_values() {
        // First outputs for seed 1234567, as published with the reference implementation.
        let mut rng = SplitMix64::new(1234567);
        let got: Vec<u64> = (0..3).map(|_| rng.next_u64()).collect();
        assert_eq!(
            got,
            vec![
                6457827717110365317,
                3203168211198807973,
                9817491932198370423
            ]
        );
    }

    #[test]
    fn chordal_boundaries() {
        assert_eq!(random_chordal(1, 0.5, 9), Graph::empty(1));
        for seed in 0..5 {
            assert_eq!(random_chordal(5, 1.0, seed), Graph::complete(5));
        }
        assert_eq!(random_chordal(12, 0.4, 77), random_chordal(12, 0.4, 77));
    }

    #[test]
    fn chordal_outputs_are_connected_and_chordal() {
        for seed in 0..200 {
            let g = random_chordal(2 + (seed as usize % 14), (seed % 10) as f64 / 10.0, seed);
            assert!(g.is_connected());
            assert!(is_chordal(&g).is_chordal(), "seed {seed}");
        }
    }

    #[test]
    fn ktree_examples() {
        assert_eq!(random_ktree(4, 3, 5).unwrap(), Graph::complete(4));
        assert!(random_ktree(3, 3, 5).is_err());
        // Every 3-tree on 5 vertices is two K4s sharing a triangle.
        for seed in 0..10 {
            let g = random_ktree(5, 3, seed).unwrap();
            let mut degrees: Vec<usize> = (0..5).map(|v| g.degree(v)).collect();
            degrees.sort_unstable();
            assert_eq!(degrees, vec![3, 3, 4, 4, 4]);
            assert_eq!(g.edge_count(), 9);
        }
    }

    #[test]
    fn ktrees_are_k_connected_chordal() {
        for seed in 0..60u64 {
            let k = 1 + seed as usize % 4;
            let n = k + 2 + seed as usize % 7;
            let g = random_ktree(n, k, seed).unwrap();
            assert!(is_chordal(&g).is_chordal());
            assert_eq!(vertex_connectivity(&g), k, "n={n} k={k} seed={seed}");
            assert_eq!(g.edge_count(), k * (k + 1) / 2 + (n - k - 1) * k);
        }
    }

    #[test]
    fn split_examples() {
        assert_eq!(random_split(3, 0, 0.3, true, 1), Graph::complete(3));
        assert_eq!(random_split(1, 3, 1.0, true, 1), Graph::star(3));
        let g = random_split(2, 4, 0.0, false, 1);
        assert_eq!(g.vertex_count(), 6);
        assert_eq!(g.edge_count(), 1);
        assert_eq!(random_split(2, 4, 0.0, true, 1), Graph::complete(2));
    }

    #[test]
    fn connected_generator() {
        for seed in 0..50 {
            let g = random_connected(8, 0.3, seed);
            assert!(g.is_connected());
            assert_eq!(g, random_connected(8, 0.3, seed));
        }
        assert!(random_connected(6, 0.0, 3).is_connected());
    }

    #[test]
    fn small_chordal_counts() {
        assert_eq!(enumerate_small_chordal(1).unwrap().count(), 1);
        assert_eq!(enumerate_small_chordal(2).unwrap().count(), 1);
        // Three labeled paths plus the triangle.
        assert_eq!(enumerate_small_chordal(3).unwrap().count(), 4);
        assert!(enumerate_small_chordal(8).is_err());
    }

    #[test]
    fn gen_spec_dispatch() {
        let spec = GenSpec {
            family: Family::Ktree,
            n: 6,
            k: 2,
            density: 0.5,
            seed: 3,
        };
        assert_eq!(spec.generate().unwrap(), random_ktree(6, 2, 3).unwrap());
        assert_eq!(spec.describe(), "family=ktree n=6 k=2 density=0.5 seed=3");
        let bad = GenSpec {
            density: 1.5,
            ..spec
        };
        assert!(bad.generate().is_err());
        let split = GenSpec {
            family: Family::Split,
            k: 7,
            ..spec
        };
        assert!(split.generate().is_err());
    }
}
