//! Reference implementations used as oracles by the integration tests. They
//! deliberately share no code with the library beyond the `Graph` type.
#![allow(dead_code)]

use clique_spectra::Graph;
use nalgebra::DMatrix;
use rand::Rng;

/// Largest adjacency eigenvalue from a dense symmetric eigensolver.
pub fn dense_spectral_radius(g: &Graph) -> f64 {
    let n = g.n();
    if n == 0 {
        return 0.0;
    }
    let a = DMatrix::from_fn(n, n, |i, j| if g.has_edge(i, j) { 1.0 } else { 0.0 });
    a.symmetric_eigen().eigenvalues.iter().cloned().fold(f64::NEG_INFINITY, f64::max)
}

/// All `size`-subsets of `0..n` as bitmasks.
pub fn subsets(n: usize, size: usize) -> Vec<u64> {
    (0u64..1 << n).filter(|m| m.count_ones() as usize == size).collect()
}

pub fn is_clique(g: &Graph, set: u64) -> bool {
    let vs: Vec<usize> = (0..g.n()).filter(|&v| set >> v & 1 == 1).collect();
    vs.iter().enumerate().all(|(a, &u)| vs[a + 1..].iter().all(|&v| g.has_edge(u, v)))
}

/// Number of t-vertex subsets that are cliques.
pub fn brute_clique_count(g: &Graph, t: usize) -> u64 {
    subsets(g.n(), t).into_iter().filter(|&s| is_clique(g, s)).count() as u64
}

/// Tries to place `k` pairwise disjoint `(r+1)`-cliques, subset by subset.
pub fn brute_has_packing(g: &Graph, k: usize, r: usize) -> bool {
    fn place(cands: &[u64], used: u64, need: usize) -> bool {
        need == 0
            || cands
                .iter()
                .enumerate()
                .any(|(i, &c)| c & used == 0 && place(&cands[i + 1..], used | c, need - 1))
    }
    let cands: Vec<u64> = subsets(g.n(), r + 1).into_iter().filter(|&s| is_clique(g, s)).collect();
    place(&cands, 0, k)
}

/// Connected components of the graph on vertices whose arcs are "share a t-clique",
/// computed by plain BFS over brute-force cliques. Returns (covers all, connected).
pub fn brute_clique_connected(g: &Graph, t: usize) -> bool {
    let cliques: Vec<u64> = subsets(g.n(), t).into_iter().filter(|&s| is_clique(g, s)).collect();
    let covered = cliques.iter().fold(0u64, |a, &c| a | c);
    let all = if g.n() == 64 { !0 } else { (1u64 << g.n()) - 1 };
    if covered != all || cliques.is_empty() {
        return g.n() == 0;
    }
    let mut seen = cliques[0];
    loop {
        let grown = cliques.iter().filter(|&&c| c & seen != 0).fold(seen, |a, &c| a | c);
        if grown == seen {
            return seen == all;
        }
        seen = grown;
    }
}

pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for v in 1..n {
        for u in 0..v {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}
