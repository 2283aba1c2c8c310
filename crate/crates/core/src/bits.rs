//! Bitmask kernels for the enumeration oracles. Vertex `v` is bit `1 << v`,
//! so everything here is limited to 64 vertices.

pub(crate) fn full(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterates the set bits of a mask in ascending order.
pub(crate) fn ones(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

/// The component of `allowed` reachable from the lowest bit of `start`.
pub(crate) fn reach(adj: &[u64], start: u64, allowed: u64) -> u64 {
    let mut reached = start & allowed;
    let mut frontier = reached;
    while frontier != 0 {
        let next = ones(frontier).fold(0, |m, v| m | adj[v]) & allowed & !reached;
        reached |= next;
        frontier = next;
    }
    reached
}

/// Connected components of the subgraph induced by `allowed`.
pub(crate) fn components(adj: &[u64], allowed: u64) -> Vec<u64> {
    let mut left = allowed;
    let mut out = Vec::new();
    while left != 0 {
        let c = reach(adj, left & left.wrapping_neg(), left);
        out.push(c);
        left &= !c;
    }
    out
}

/// True iff the subgraph induced by `allowed` has at least two components.
pub(crate) fn is_split_by(adj: &[u64], allowed: u64) -> bool {
    allowed != 0 && reach(adj, allowed & allowed.wrapping_neg(), allowed) != allowed
}

/// All `k`-subsets of `0..n` in increasing numeric order (Gosper's hack).
pub(crate) fn subsets_of_size(n: usize, k: usize) -> impl Iterator<Item = u64> {
    let limit = full(n);
    let mut next = if k > n {
        None
    } else if k == 0 {
        Some(0)
    } else {
        Some(full(k))
    };
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 {
            None
        } else {
            let c = cur & cur.wrapping_neg();
            let r = cur.wrapping_add(c);
            if r == 0 {
                None
            } else {
                let succ = (((r ^ cur) >> 2) / c) | r;
                (succ & !limit == 0).then_some(succ)
            }
        };
        Some(cur)
    })
}

pub(crate) fn is_clique(adj: &[u64], set: u64) -> bool {
    ones(set).all(|v| set & !(1 << v) & !adj[v] == 0)
}

/// Chordality by repeated simplicial-vertex elimination.
pub(crate) fn is_chordal(adj: &[u64], n: usize) -> bool {
    let mut left = full(n);
    while left != 0 {
        match ones(left).find(|&v| is_clique(adj, adj[v] & left)) {
            Some(v) => left &= !(1 << v),
            None => return false,
        }
    }
    true
}

/// Adjacency of the graph obtained by contracting edge `{u, v}` (`u < v`):
/// `v` disappears, `u` becomes the merged vertex, and ids above `v` shift down.
pub(crate) fn contract(adj: &[u64], u: usize, v: usize) -> Vec<u64> {
    debug_assert!(u < v);
    let low = (1u64 << v) - 1;
    let remap = |m: u64| (m & low) | ((m >> 1) & !low) | if m >> v & 1 == 1 { 1 << u } else { 0 };
    adj.iter()
        .enumerate()
        .filter(|&(x, _)| x != v)
        .map(|(x, &m)| {
            if x == u {
                remap(m | adj[v]) & !(1 << u)
            } else {
                remap(m)
            }
        })
        .collect()
}
