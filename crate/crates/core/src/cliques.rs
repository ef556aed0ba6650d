//! Fixed-size clique enumeration and the t-clique hypergraph built from it.

use crate::error::{Error, Result};
use crate::graph::{bits, full_mask, turan_part_sizes, Graph};

/// A t-clique, stored as its vertex bitset.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Clique(pub u64);

impl Clique {
    pub fn vertices(self) -> impl Iterator<Item = usize> {
        bits(self.0)
    }

    pub fn contains(self, v: usize) -> bool {
        self.0 >> v & 1 == 1
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }
}

/// All t-cliques of a graph in lexicographic order of their sorted vertex
/// tuples, with a per-vertex index of the cliques through each vertex.
///
/// This is the t-clique hypergraph, and it is all the solver needs of the
/// t-clique tensor: every permutation of a clique carries weight 1/(t-1)!,
/// so a tensor contraction reduces to a sum over hyperedges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueSet {
    n: usize,
    t: usize,
    cliques: Vec<Clique>,
    incidence: Vec<Vec<u32>>,
}

impl CliqueSet {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn cliques(&self) -> &[Clique] {
        &self.cliques
    }

    pub fn len(&self) -> usize {
        self.cliques.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cliques.is_empty()
    }

    /// Indices into [`cliques`](Self::cliques) of the cliques containing `v`.
    pub fn incident(&self, v: usize) -> &[u32] {
        &self.incidence[v]
    }

    /// Number of cliques through each vertex.
    pub fn degrees(&self) -> Vec<usize> {
        self.incidence.iter().map(Vec::len).collect()
    }

    /// Vertices lying in at least one clique.
    pub fn covered(&self) -> u64 {
        self.cliques.iter().fold(0, |m, c| m | c.0)
    }

    /// Cliques whose vertices all lie in `mask`.
    pub fn restricted(&self, mask: u64) -> CliqueSet {
        let cliques: Vec<Clique> = self
            .cliques
            .iter()
            .copied()
            .filter(|c| c.0 & !mask == 0)
            .collect();
        CliqueSet::from_parts(self.n, self.t, cliques)
    }

    fn from_parts(n: usize, t: usize, cliques: Vec<Clique>) -> CliqueSet {
        let mut incidence = vec![Vec::new(); n];
        for (i, c) in cliques.iter().enumerate() {
            for v in c.vertices() {
                incidence[v].push(i as u32);
            }
        }
        CliqueSet {
            n,
            t,
            cliques,
            incidence,
        }
    }
}

fn extend(g: &Graph, current: u64, candidates: u64, need: usize, out: &mut Vec<Clique>) {
    if need == 0 {
        out.push(Clique(current));
        return;
    }
    if (candidates.count_ones() as usize) < need {
        return;
    }
    for v in bits(candidates) {
        // Only higher-numbered common neighbours keep the order lexicographic.
        let next = candidates & g.neighbors(v) & !full_mask(v + 1);
        extend(g, current | 1 << v, next, need - 1, out);
    }
}

/// Enumerates every `t`-subset inducing `K_t`, in lexicographic order.
pub fn enumerate_cliques(g: &Graph, t: usize) -> Result<CliqueSet> {
    if t < 1 {
        return Err(Error::arg("clique order t must be >= 1"));
    }
    let mut cliques = Vec::new();
    if t <= g.n() {
        extend(g, 0, g.vertex_mask(), t, &mut cliques);
    }
    Ok(CliqueSet::from_parts(g.n(), t, cliques))
}

fn count_rec(g: &Graph, candidates: u64, need: usize) -> u64 {
    match need {
        0 => 1,
        1 => candidates.count_ones() as u64,
        _ => bits(candidates)
            .map(|v| count_rec(g, candidates & g.neighbors(v) & !full_mask(v + 1), need - 1))
            .sum(),
    }
}

/// `c_t(G)` without materialising the cliques.
pub fn count_cliques(g: &Graph, t: usize) -> u64 {
    if t > g.n() {
        return 0;
    }
    count_rec(g, g.vertex_mask(), t)
}

/// Whether `G` contains a `K_t` inside the vertex set `within`.
pub fn has_clique_within(g: &Graph, within: u64, t: usize) -> bool {
    fn rec(g: &Graph, cand: u64, need: usize) -> bool {
        if need == 0 {
            return true;
        }
        if (cand.count_ones() as usize) < need {
            return false;
        }
        bits(cand).any(|v| rec(g, cand & g.neighbors(v) & !full_mask(v + 1), need - 1))
    }
    rec(g, within & g.vertex_mask(), t)
}

/// Largest number of t-cliques through a single vertex.
pub fn max_clique_degree(g: &Graph, t: usize) -> u64 {
    if t == 0 || t > g.n() {
        return 0;
    }
    (0..g.n())
        .map(|v| count_rec(g, g.neighbors(v), t - 1))
        .max()
        .unwrap_or(0)
}

fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) / (i + 1))
}

/// Elementary symmetric polynomials `e_0..=e_max` of `values`.
pub fn elementary_symmetric(values: &[u128], max: usize) -> Vec<u128> {
    let mut e = vec![0u128; max + 1];
    e[0] = 1;
    for &x in values {
        for s in (1..=max).rev() {
            e[s] += e[s - 1] * x;
        }
    }
    e
}

/// Exact `c_t(K_{k-1} ∨ T_r(n-k+1))`:
/// `Σ_j C(k-1, j) · e_{t-j}(m_1, ..., m_r)` with `m_i` the Turán part sizes.
pub fn count_join_turan_cliques(n: usize, k: usize, r: usize, t: usize) -> Result<u128> {
    if k < 1 {
        return Err(Error::arg("k must be >= 1"));
    }
    if n + 1 < k {
        return Err(Error::arg(format!("n={n} is smaller than the apex size k-1={}", k - 1)));
    }
    if t < 1 {
        return Err(Error::arg("t must be >= 1"));
    }
    let apex = (k - 1) as u128;
    let parts: Vec<u128> = turan_part_sizes(n + 1 - k, r)?
        .into_iter()
        .map(|s| s as u128)
        .collect();
    let e = elementary_symmetric(&parts, t);
    Ok((0..=t.min(k - 1))
        .map(|j| binomial(apex, j as u128) * e[t - j])
        .sum())
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Vertex classes joined by t-clique walks, plus the vertices in no t-clique.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueComponents {
    /// Ordered by smallest vertex.
    pub components: Vec<u64>,
    pub uncovered: u64,
}

pub fn clique_components_of(cs: &CliqueSet) -> CliqueComponents {
    let n = cs.n();
    let mut uf = UnionFind::new(n);
    for c in cs.cliques() {
        let mut vs = c.vertices();
        if let Some(first) = vs.next() {
            for v in vs {
                uf.union(first, v);
            }
        }
    }
    let covered = cs.covered();
    let mut by_root = vec![0u64; n];
    for v in bits(covered) {
        let root = uf.find(v);
        by_root[root] |= 1 << v;
    }
    CliqueComponents {
        components: by_root.into_iter().filter(|&m| m != 0).collect(),
        uncovered: full_mask(n) & !covered,
    }
}

pub fn clique_components(g: &Graph, t: usize) -> Result<CliqueComponents> {
    Ok(clique_components_of(&enumerate_cliques(g, t)?))
}

/// Every vertex lies in some t-clique and the clique intersection graph is connected.
pub fn clique_connected(g: &Graph, t: usize) -> bool {
    if g.n() == 0 || t == 0 {
        return g.n() == 0;
    }
    let cs = enumerate_cliques(g, t).expect("t >= 1");
    let comps = clique_components_of(&cs);
    comps.uncovered == 0 && comps.components.len() == 1
}

/// Every vertex lies in the same number of t-cliques.
pub fn is_clique_regular(g: &Graph, t: usize) -> bool {
    if t == 0 {
        return true;
    }
    let degrees = enumerate_cliques(g, t).expect("t >= 1").degrees();
    degrees.windows(2).all(|w| w[0] == w[1])
}
