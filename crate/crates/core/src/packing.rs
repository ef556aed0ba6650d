//! Detection of `kK_{r+1}`: k pairwise vertex-disjoint (r+1)-cliques.

use crate::cliques::{enumerate_cliques, CliqueSet};
use crate::error::{Error, Result};
use crate::graph::{bits, Graph};
use serde::Serialize;

/// Forbidden pattern `kK_{r+1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct FreenessQuery {
    pub k: usize,
    pub r: usize,
}

impl FreenessQuery {
    pub fn new(k: usize, r: usize) -> Result<Self> {
        if k < 1 || r < 1 {
            return Err(Error::arg(format!("need k >= 1 and r >= 1 (got k={k}, r={r})")));
        }
        Ok(FreenessQuery { k, r })
    }

    pub fn clique_order(&self) -> usize {
        self.r + 1
    }
}

/// k pairwise disjoint (r+1)-cliques, each as a vertex bitset.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Packing {
    pub cliques: Vec<u64>,
}

impl Packing {
    pub fn vertex_lists(&self) -> Vec<Vec<usize>> {
        self.cliques.iter().map(|&c| bits(c).collect()).collect()
    }
}

fn search(cliques: &[u64], from: usize, used: u64, need: usize, size: u32, chosen: &mut Vec<u64>) -> bool {
    if need == 0 {
        return true;
    }
    // The cliques still selectable must cover enough free vertices.
    let mut cover = 0u64;
    for &c in &cliques[from..] {
        if c & used == 0 {
            cover |= c;
        }
    }
    if cover.count_ones() < need as u32 * size {
        return false;
    }
    for i in from..cliques.len() {
        let c = cliques[i];
        if c & used != 0 {
            continue;
        }
        chosen.push(c);
        if search(cliques, i + 1, used | c, need - 1, size, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

/// Packing search over an already enumerated `(r+1)`-clique list.
pub fn find_packing_in(cliques: &CliqueSet, k: usize) -> Option<Packing> {
    let list: Vec<u64> = cliques.cliques().iter().map(|c| c.0).collect();
    if list.len() < k {
        return None;
    }
    let mut chosen = Vec::with_capacity(k);
    search(&list, 0, 0, k, cliques.t() as u32, &mut chosen).then_some(Packing { cliques: chosen })
}

/// The lexicographically first packing of `k` disjoint `K_{r+1}`, if any.
pub fn find_disjoint_packing(g: &Graph, q: FreenessQuery) -> Option<Packing> {
    if g.n() < q.k * q.clique_order() {
        return None;
    }
    let cliques = enumerate_cliques(g, q.clique_order()).expect("r + 1 >= 2");
    find_packing_in(&cliques, q.k)
}

/// True iff `G` has no `kK_{r+1}`.
pub fn is_free(g: &Graph, q: FreenessQuery) -> bool {
    find_disjoint_packing(g, q).is_none()
}
