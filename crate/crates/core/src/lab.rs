//! Exhaustive scans for the ρ_t-maximiser among `kK_{r+1}`-free graphs, and
//! numerical checks of the structural steps behind the extremal result.

use crate::cliques::{
    count_cliques, count_join_turan_cliques, enumerate_cliques, has_clique_within,
    is_clique_regular, max_clique_degree, clique_connected,
};
use crate::error::{Error, Result};
use crate::graph::{
    are_isomorphic, complete_graph, graph_from_graph6, graph_to_graph6, join, turan_graph, Graph,
    PartitionSpec,
};
use crate::json::f64_17;
use crate::packing::{find_packing_in, FreenessQuery};
use crate::tensor::{spectral_radius_of, SolverOptions};
use rayon::prelude::*;
use serde::Serialize;

/// Largest n for built-in labelled enumeration (2^21 graphs).
pub const MAX_ENUMERATION_N: usize = 7;

/// `K_{k-1} ∨ T_r(n-k+1)`.
pub fn conjectured_extremal(n: usize, k: usize, r: usize) -> Result<Graph> {
    if k < 1 || r < 1 {
        return Err(Error::arg(format!("need k >= 1 and r >= 1 (got k={k}, r={r})")));
    }
    if n < k - 1 + r {
        return Err(Error::arg(format!(
            "n={n} too small for K_{{k-1}} ∨ T_r(n-k+1) with k={k}, r={r} (need n >= {})",
            k - 1 + r
        )));
    }
    join(&complete_graph(k - 1)?, &turan_graph(n - k + 1, r)?)
}

/// Vertex pairs in graph6 column order: (0,1), (0,2), (1,2), (0,3), ...
pub fn edge_pairs(n: usize) -> Vec<(usize, usize)> {
    (1..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect()
}

/// Graph whose edge `i` (in [`edge_pairs`] order) is present iff bit `i` of `mask` is set.
pub fn graph_from_edge_mask(n: usize, pairs: &[(usize, usize)], mask: u64) -> Graph {
    let mut rows = vec![0u64; n];
    for (i, &(u, v)) in pairs.iter().enumerate() {
        if mask >> i & 1 == 1 {
            rows[u] |= 1 << v;
            rows[v] |= 1 << u;
        }
    }
    Graph::from_adjacency(rows).expect("edge mask yields a simple graph")
}

/// Every labelled graph on `n` vertices, in increasing edge-mask order.
#[derive(Debug, Clone)]
pub struct LabeledGraphs {
    n: usize,
    pairs: Vec<(usize, usize)>,
    next: u64,
    end: u64,
}

impl Iterator for LabeledGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.next >= self.end {
            return None;
        }
        let g = graph_from_edge_mask(self.n, &self.pairs, self.next);
        self.next += 1;
        Some(g)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.end - self.next) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for LabeledGraphs {}

pub fn enumerate_graphs(n: usize) -> Result<LabeledGraphs> {
    if n > MAX_ENUMERATION_N {
        return Err(Error::Capacity {
            what: "labelled enumeration vertex count",
            requested: n,
            limit: MAX_ENUMERATION_N,
        });
    }
    let pairs = edge_pairs(n);
    Ok(LabeledGraphs {
        n,
        end: 1u64 << pairs.len(),
        pairs,
        next: 0,
    })
}

/// Sound upper bound on `ρ_t(G)`: the largest tensor row sum (t-cliques through
/// one vertex) and, for t = 2, Hong's `√(2e - n' + 1)` with `n'` non-isolated vertices.
pub fn rho_upper_bound(g: &Graph, t: usize) -> f64 {
    let row_sum = max_clique_degree(g, t) as f64;
    if t == 2 {
        let active = g.non_isolated().count_ones() as f64;
        let hong = (2.0 * g.edge_count() as f64 - active + 1.0).max(0.0).sqrt();
        row_sum.min(hong)
    } else {
        row_sum
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ScanParams {
    pub n: usize,
    pub k: usize,
    pub r: usize,
    pub t: usize,
}

impl ScanParams {
    pub fn validate(&self) -> Result<()> {
        FreenessQuery::new(self.k, self.r)?;
        if self.t < 2 {
            return Err(Error::arg("scan needs t >= 2"));
        }
        Ok(())
    }

    fn query(&self) -> FreenessQuery {
        FreenessQuery {
            k: self.k,
            r: self.r,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScanOptions {
    pub solver: SolverOptions,
    /// Graphs within this of the best ρ count as tied maximisers.
    pub tie_tol: f64,
    /// Skip the power iteration when [`rho_upper_bound`] rules a graph out.
    pub prune: bool,
    pub threads: usize,
}

impl Default for ScanOptions {
    fn default() -> Self {
        ScanOptions {
            solver: SolverOptions::default(),
            tie_tol: 1e-9,
            prune: true,
            threads: 1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    /// Every tied maximiser is isomorphic to the conjectured graph.
    UniqueConjectured,
    ConjecturedAmongTies,
    ConjectureBeaten,
    /// The conjectured graph itself contains `kK_{r+1}`; indicates a bug.
    ConjecturedNotFree,
    /// No free graph with the right vertex count was scanned.
    EmptyPopulation,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RecordParams {
    pub n: usize,
    pub k: usize,
    pub r: usize,
    pub t: usize,
    #[serde(serialize_with = "f64_17")]
    pub tol: f64,
    pub max_iters: usize,
    #[serde(serialize_with = "f64_17")]
    pub shift: f64,
    #[serde(serialize_with = "f64_17")]
    pub tie_tol: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Population {
    pub source: String,
    /// Graphs read, including skipped ones.
    pub scanned: u64,
    /// Graphs whose vertex count differed from `n`.
    pub skipped: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConjecturedSummary {
    pub graph6: String,
    #[serde(serialize_with = "f64_17")]
    pub rho: f64,
    pub edges: u64,
    pub cliques: u64,
    pub free: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScanRecord {
    pub params: RecordParams,
    pub population: Population,
    pub free_count: u64,
    #[serde(serialize_with = "f64_17")]
    pub best_rho: f64,
    /// graph6 of every free graph with `ρ_t >= best_rho - tie_tol`, in population order.
    pub maximizers: Vec<String>,
    pub maximizers_unconverged: u64,
    pub conjectured: ConjecturedSummary,
    pub max_edges_free: u64,
    pub max_cliques_free: u64,
    pub conjectured_attains_max_edges: bool,
    pub conjectured_attains_max_cliques: bool,
    pub verdict: Verdict,
}

impl ScanRecord {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("record serialises")
    }

    pub const CSV_HEADER: &'static str = "n,k,r,t,source,scanned,free_count,best_rho,maximizer_count,conjectured_rho,max_edges_free,max_cliques_free,verdict";

    pub fn csv_row(&self) -> String {
        let verdict = serde_json::to_value(self.verdict).expect("verdict serialises");
        format!(
            "{},{},{},{},{},{},{},{:.16e},{},{:.16e},{},{},{}",
            self.params.n,
            self.params.k,
            self.params.r,
            self.params.t,
            self.population.source.replace(',', ";"),
            self.population.scanned,
            self.free_count,
            self.best_rho,
            self.maximizers.len(),
            self.conjectured.rho,
            self.max_edges_free,
            self.max_cliques_free,
            verdict.as_str().unwrap_or_default(),
        )
    }

    pub fn maximizer_graphs(&self) -> Result<Vec<Graph>> {
        self.maximizers.iter().map(|s| graph_from_graph6(s)).collect()
    }
}

/// Work counters; not part of the record because they depend on pruning and threading.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ScanStats {
    pub solved: u64,
    pub pruned: u64,
    pub unconverged: u64,
}

#[derive(Debug, Clone)]
struct Candidate {
    rho: f64,
    graph: Graph,
    converged: bool,
}

#[derive(Debug, Clone)]
struct ScanState {
    scanned: u64,
    skipped: u64,
    free_count: u64,
    max_edges: u64,
    max_cliques: u64,
    best: f64,
    band: Vec<Candidate>,
    stats: ScanStats,
}

impl ScanState {
    fn new() -> Self {
        ScanState {
            scanned: 0,
            skipped: 0,
            free_count: 0,
            max_edges: 0,
            max_cliques: 0,
            best: f64::NEG_INFINITY,
            band: Vec::new(),
            stats: ScanStats::default(),
        }
    }

    fn absorb(&mut self, g: Graph, p: &ScanParams, opts: &ScanOptions) -> Result<()> {
        self.scanned += 1;
        if g.n() != p.n {
            self.skipped += 1;
            return Ok(());
        }
        if !is_free_fast(&g, p.query()) {
            return Ok(());
        }
        self.free_count += 1;
        self.max_edges = self.max_edges.max(g.edge_count() as u64);
        self.max_cliques = self.max_cliques.max(count_cliques(&g, p.t));

        let floor = self.best - opts.tie_tol;
        if opts.prune && rho_upper_bound(&g, p.t) < floor {
            self.stats.pruned += 1;
            return Ok(());
        }
        let cliques = enumerate_cliques(&g, p.t)?;
        let res = spectral_radius_of(&cliques, &opts.solver)?;
        self.stats.solved += 1;
        if !res.converged {
            self.stats.unconverged += 1;
        }
        self.offer(
            Candidate {
                rho: res.rho,
                graph: g,
                converged: res.converged,
            },
            opts.tie_tol,
        );
        Ok(())
    }

    fn offer(&mut self, c: Candidate, tie_tol: f64) {
        if c.rho > self.best {
            self.best = c.rho;
            let floor = self.best - tie_tol;
            self.band.retain(|m| m.rho >= floor);
        }
        if c.rho >= self.best - tie_tol {
            self.band.push(c);
        }
    }

    /// Appends the state of a later stretch of the population.
    fn merge(mut self, other: ScanState, tie_tol: f64) -> ScanState {
        self.scanned += other.scanned;
        self.skipped += other.skipped;
        self.free_count += other.free_count;
        self.max_edges = self.max_edges.max(other.max_edges);
        self.max_cliques = self.max_cliques.max(other.max_cliques);
        self.stats.solved += other.stats.solved;
        self.stats.pruned += other.stats.pruned;
        self.stats.unconverged += other.stats.unconverged;
        self.best = self.best.max(other.best);
        let floor = self.best - tie_tol;
        self.band.retain(|m| m.rho >= floor);
        self.band.extend(other.band.into_iter().filter(|m| m.rho >= floor));
        self
    }
}

fn is_free_fast(g: &Graph, q: FreenessQuery) -> bool {
    let order = q.clique_order();
    if q.k == 1 {
        return !has_clique_within(g, g.vertex_mask(), order);
    }
    if g.n() < q.k * order {
        return true;
    }
    let cliques = enumerate_cliques(g, order).expect("order >= 2");
    find_packing_in(&cliques, q.k).is_none()
}

fn finish(
    state: ScanState,
    source: String,
    p: &ScanParams,
    opts: &ScanOptions,
) -> Result<(ScanRecord, ScanStats)> {
    let conj = conjectured_extremal(p.n, p.k, p.r)?;
    let conj_free = is_free_fast(&conj, p.query());
    let conj_cliques = enumerate_cliques(&conj, p.t)?;
    let conj_rho = spectral_radius_of(&conj_cliques, &opts.solver)?.rho;
    let conjectured = ConjecturedSummary {
        graph6: graph_to_graph6(&conj),
        rho: conj_rho,
        edges: conj.edge_count() as u64,
        cliques: conj_cliques.len() as u64,
        free: conj_free,
    };

    let verdict = if !conj_free {
        Verdict::ConjecturedNotFree
    } else if state.band.is_empty() {
        Verdict::EmptyPopulation
    } else {
        let mut matches = 0usize;
        for m in &state.band {
            if are_isomorphic(&m.graph, &conj)? {
                matches += 1;
            }
        }
        if matches == state.band.len() {
            Verdict::UniqueConjectured
        } else if matches > 0 {
            Verdict::ConjecturedAmongTies
        } else {
            Verdict::ConjectureBeaten
        }
    };

    let record = ScanRecord {
        params: RecordParams {
            n: p.n,
            k: p.k,
            r: p.r,
            t: p.t,
            tol: opts.solver.tol,
            max_iters: opts.solver.max_iters,
            shift: opts.solver.shift,
            tie_tol: opts.tie_tol,
        },
        population: Population {
            source,
            scanned: state.scanned,
            skipped: state.skipped,
        },
        free_count: state.free_count,
        best_rho: if state.band.is_empty() { 0.0 } else { state.best },
        maximizers: state.band.iter().map(|m| graph_to_graph6(&m.graph)).collect(),
        maximizers_unconverged: state.band.iter().filter(|m| !m.converged).count() as u64,
        max_edges_free: state.max_edges,
        max_cliques_free: state.max_cliques,
        conjectured_attains_max_edges: conj_free && conjectured.edges == state.max_edges,
        conjectured_attains_max_cliques: conj_free && conjectured.cliques == state.max_cliques,
        conjectured,
        verdict,
    };
    Ok((record, state.stats))
}

fn validate(p: &ScanParams, opts: &ScanOptions) -> Result<()> {
    p.validate()?;
    opts.solver.validate()?;
    if !(opts.tie_tol >= 0.0) {
        return Err(Error::arg("tie_tol must be >= 0"));
    }
    if opts.threads == 0 {
        return Err(Error::arg("threads must be >= 1"));
    }
    Ok(())
}

fn pool(threads: usize) -> Result<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Error::arg(format!("cannot start thread pool: {e}")))
}

const BATCH: usize = 1 << 14;

/// Scans an arbitrary population, e.g. a graph6 stream.
///
/// With `threads > 1` the stream is cut into batches whose pieces are scanned
/// in parallel and merged in population order, so the record equals the
/// sequential one.
pub fn scan<I>(population: I, source: &str, p: ScanParams, opts: &ScanOptions) -> Result<(ScanRecord, ScanStats)>
where
    I: IntoIterator<Item = Graph>,
{
    validate(&p, opts)?;
    let mut state = ScanState::new();
    if opts.threads == 1 {
        for g in population {
            state.absorb(g, &p, opts)?;
        }
    } else {
        let pool = pool(opts.threads)?;
        let mut it = population.into_iter().peekable();
        let piece = BATCH.div_ceil(opts.threads * 4).max(1);
        while it.peek().is_some() {
            let batch: Vec<Graph> = it.by_ref().take(BATCH).collect();
            let parts: Vec<Result<ScanState>> = pool.install(|| {
                batch
                    .par_chunks(piece)
                    .map(|chunk| {
                        let mut s = ScanState::new();
                        s.best = state.best;
                        for g in chunk {
                            s.absorb(g.clone(), &p, opts)?;
                        }
                        s.best = s.band.iter().map(|c| c.rho).fold(f64::NEG_INFINITY, f64::max);
                        Ok(s)
                    })
                    .collect()
            });
            for part in parts {
                state = state.merge(part?, opts.tie_tol);
            }
        }
    }
    finish(state, source.to_string(), &p, opts)
}

/// Scans every labelled graph on `p.n` vertices (n ≤ 7).
pub fn scan_all(p: ScanParams, opts: &ScanOptions) -> Result<(ScanRecord, ScanStats)> {
    validate(&p, opts)?;
    let all = enumerate_graphs(p.n)?;
    let source = format!("all labelled graphs on {} vertices", p.n);
    if opts.threads == 1 {
        return scan(all, &source, p, opts);
    }
    let total = all.end;
    let pairs = all.pairs;
    let pieces = (opts.threads as u64 * 16).min(total);
    let bounds: Vec<(u64, u64)> = (0..pieces)
        .map(|i| (total * i / pieces, total * (i + 1) / pieces))
        .collect();
    let parts: Vec<Result<ScanState>> = pool(opts.threads)?.install(|| {
        bounds
            .par_iter()
            .map(|&(lo, hi)| {
                let mut s = ScanState::new();
                for mask in lo..hi {
                    s.absorb(graph_from_edge_mask(p.n, &pairs, mask), &p, opts)?;
                }
                Ok(s)
            })
            .collect()
    });
    let mut state = ScanState::new();
    for part in parts {
        state = state.merge(part?, opts.tie_tol);
    }
    finish(state, source, &p, opts)
}

/// True iff every maximiser in the record is t-clique connected.
pub fn maximizer_connectivity_check(record: &ScanRecord, t: usize) -> Result<bool> {
    Ok(record
        .maximizer_graphs()?
        .iter()
        .all(|g| clique_connected(g, t)))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LowerBoundReport {
    pub n: usize,
    pub k: usize,
    pub r: usize,
    pub t: usize,
    #[serde(serialize_with = "f64_17")]
    pub rho: f64,
    pub cliques: u128,
    /// `(t/n) · c_t`.
    #[serde(serialize_with = "f64_17")]
    pub bound: f64,
    pub holds: bool,
    pub clique_regular: bool,
    /// `|ρ - bound| <= 1e-8`.
    pub equality: bool,
}

/// `ρ_t(K_{k-1} ∨ T_r(n-k+1)) >= (t/n) c_t(K_{k-1} ∨ T_r(n-k+1))`.
pub fn check_lower_bound(n: usize, k: usize, r: usize, t: usize, opts: &SolverOptions) -> Result<LowerBoundReport> {
    let g = conjectured_extremal(n, k, r)?;
    let cliques = count_join_turan_cliques(n, k, r, t)?;
    let rho = spectral_radius_of(&enumerate_cliques(&g, t)?, opts)?.rho;
    let bound = t as f64 / n as f64 * cliques as f64;
    Ok(LowerBoundReport {
        n,
        k,
        r,
        t,
        rho,
        cliques,
        bound,
        holds: rho >= bound - 1e-9,
        clique_regular: is_clique_regular(&g, t),
        equality: (rho - bound).abs() <= 1e-8,
    })
}

/// Minimum gain for a balancing move to count as a strict increase.
pub const BALANCING_MARGIN: f64 = 1e-8;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BalancingReport {
    pub apex: usize,
    pub parts_before: Vec<usize>,
    pub parts_after: Vec<usize>,
    #[serde(serialize_with = "f64_17")]
    pub rho_before: f64,
    #[serde(serialize_with = "f64_17")]
    pub rho_after: f64,
    #[serde(serialize_with = "f64_17")]
    pub margin: f64,
    pub increased: bool,
}

/// Moves one vertex from part `i` to part `j` of `K_{k-1} ∨ K_r(parts)`, where
/// `parts[i] - parts[j] >= 2`, and compares `ρ_t` before and after.
pub fn verify_balancing(
    k: usize,
    t: usize,
    parts: &[usize],
    i: usize,
    j: usize,
    opts: &SolverOptions,
) -> Result<BalancingReport> {
    if k < 1 {
        return Err(Error::arg("k must be >= 1"));
    }
    if i >= parts.len() || j >= parts.len() || i == j {
        return Err(Error::arg(format!("part indices ({i},{j}) invalid for {} parts", parts.len())));
    }
    if parts[i] < parts[j] + 2 {
        return Err(Error::arg(format!(
            "balancing needs s_i - s_j >= 2 (got s_{i}={}, s_{j}={})",
            parts[i], parts[j]
        )));
    }
    let mut moved = parts.to_vec();
    moved[i] -= 1;
    moved[j] += 1;
    let before = PartitionSpec::new(k - 1, parts.to_vec())?;
    let after = PartitionSpec::new(k - 1, moved)?;
    let rho_of = |spec: &PartitionSpec| -> Result<f64> {
        Ok(spectral_radius_of(&enumerate_cliques(&spec.graph()?, t)?, opts)?.rho)
    };
    let rho_before = rho_of(&before)?;
    let rho_after = rho_of(&after)?;
    let margin = rho_after - rho_before;
    Ok(BalancingReport {
        apex: k - 1,
        parts_before: before.parts().to_vec(),
        parts_after: after.parts().to_vec(),
        rho_before,
        rho_after,
        margin,
        increased: margin > BALANCING_MARGIN,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MonotonicityReport {
    pub edge: (usize, usize),
    pub applicable: bool,
    /// Why the hypotheses fail, when they do.
    pub reason: Option<String>,
    pub cliques_before: u64,
    pub cliques_after: u64,
    pub rho_before: Option<f64>,
    pub rho_after: Option<f64>,
    pub strict: bool,
}

/// Adds `uv` to `G` and checks `ρ_t` grows strictly, provided `G + uv` is
/// t-clique connected and gains a t-clique.
pub fn verify_monotonicity(
    g: &Graph,
    edge: (usize, usize),
    t: usize,
    opts: &SolverOptions,
) -> Result<MonotonicityReport> {
    let (u, v) = edge;
    if u >= g.n() || v >= g.n() || u == v {
        return Err(Error::arg(format!("({u},{v}) is not a vertex pair of G")));
    }
    if g.has_edge(u, v) {
        return Err(Error::arg(format!("({u},{v}) is already an edge")));
    }
    if t < 2 {
        return Err(Error::arg("t must be >= 2"));
    }
    let h = g.with_edge(u, v);
    let before = enumerate_cliques(g, t)?;
    let after = enumerate_cliques(&h, t)?;
    let mut report = MonotonicityReport {
        edge,
        applicable: false,
        reason: None,
        cliques_before: before.len() as u64,
        cliques_after: after.len() as u64,
        rho_before: None,
        rho_after: None,
        strict: false,
    };
    if after.len() == before.len() {
        report.reason = Some("no new t-clique".into());
        return Ok(report);
    }
    if !clique_connected(&h, t) {
        report.reason = Some("G + uv is not t-clique connected".into());
        return Ok(report);
    }
    let rb = spectral_radius_of(&before, opts)?.rho;
    let ra = spectral_radius_of(&after, opts)?.rho;
    report.applicable = true;
    report.rho_before = Some(rb);
    report.rho_after = Some(ra);
    report.strict = ra > rb + 1e-10;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cliques::count_join_turan_cliques;
    use crate::graph::{complete_multipartite, disjoint_union};

    fn opts() -> SolverOptions {
        SolverOptions::default()
    }

    #[test]
    fn conjectured_examples() {
        let g = conjectured_extremal(7, 2, 2).unwrap();
        assert_eq!(g.edge_count(), 15);
        let k1 = complete_graph(1).unwrap();
        let expect = join(&k1, &complete_multipartite(&[3, 3]).unwrap()).unwrap();
        assert!(are_isomorphic(&g, &expect).unwrap());
        for n in 3..10 {
            assert_eq!(conjectured_extremal(n, 1, 3).unwrap(), turan_graph(n, 3).unwrap());
        }
        let g = conjectured_extremal(8, 2, 3).unwrap();
        assert_eq!(
            enumerate_cliques(&g, 3).unwrap().len() as u128,
            count_join_turan_cliques(8, 2, 3, 3).unwrap()
        );
        assert!(conjectured_extremal(2, 2, 2).is_err());
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_graphs(3).unwrap().count(), 8);
        assert_eq!(enumerate_graphs(4).unwrap().count(), 64);
        assert_eq!(enumerate_graphs(5).unwrap().len(), 1024);
        assert!(enumerate_graphs(8).is_err());
        let first: Vec<_> = enumerate_graphs(3).unwrap().take(3).collect();
        assert_eq!(first[0].edge_count(), 0);
        assert!(first[1].has_edge(0, 1));
        assert!(first[2].has_edge(0, 2));
    }

    #[test]
    fn edge_mask_matches_graph6_order() {
        let pairs = edge_pairs(5);
        let g = graph_from_edge_mask(5, &pairs, 0b11_1111_1111);
        assert_eq!(g, complete_graph(5).unwrap());
    }

    #[test]
    fn scan_n5_control() {
        let p = ScanParams { n: 5, k: 2, r: 2, t: 2 };
        let (rec, _) = scan_all(p, &ScanOptions::default()).unwrap();
        assert_eq!(rec.population.scanned, 1024);
        assert_eq!(rec.free_count, 1024);
        assert_eq!(rec.maximizers, vec![graph_to_graph6(&complete_graph(5).unwrap())]);
        assert!((rec.best_rho - 4.0).abs() < 1e-9);
        assert_eq!(rec.verdict, Verdict::ConjectureBeaten);
        assert!(maximizer_connectivity_check(&rec, 2).unwrap());
    }

    #[test]
    fn vertex_mismatch_is_skipped() {
        let pop = vec![complete_graph(4).unwrap(), complete_graph(5).unwrap()];
        let p = ScanParams { n: 4, k: 1, r: 3, t: 2 };
        let (rec, _) = scan(pop, "test", p, &ScanOptions::default()).unwrap();
        assert_eq!(rec.population.skipped, 1);
        assert_eq!(rec.free_count, 0);
        assert_eq!(rec.verdict, Verdict::EmptyPopulation);
    }

    #[test]
    fn lower_bound_examples() {
        let r = check_lower_bound(6, 1, 3, 3, &opts()).unwrap();
        assert!(r.holds && r.equality && r.clique_regular);
        assert!((r.rho - 4.0).abs() < 1e-9);
        let r = check_lower_bound(7, 2, 2, 2, &opts()).unwrap();
        assert!(r.holds);
        assert!((r.bound - 30.0 / 7.0).abs() < 1e-12);
        let r = check_lower_bound(7, 2, 2, 3, &opts()).unwrap();
        assert!(r.holds);
        assert!((r.bound - 27.0 / 7.0).abs() < 1e-12);
    }

    #[test]
    fn balancing_examples() {
        let r = verify_balancing(2, 2, &[4, 2, 2], 0, 1, &opts()).unwrap();
        assert_eq!(r.parts_after, vec![3, 3, 2]);
        assert!(r.increased);
        let r = verify_balancing(1, 2, &[3, 1], 0, 1, &opts()).unwrap();
        assert!((r.rho_before - 3f64.sqrt()).abs() < 1e-9);
        assert!((r.rho_after - 2.0).abs() < 1e-9);
        assert!(r.increased);
        assert!(verify_balancing(2, 3, &[4, 2, 2], 0, 2, &opts()).unwrap().increased);
        assert!(verify_balancing(2, 2, &[3, 2], 0, 1, &opts()).is_err());
    }

    #[test]
    fn monotonicity_examples() {
        let mut k4m = complete_graph(4).unwrap();
        k4m.remove_edge(0, 1);
        let r = verify_monotonicity(&k4m, (0, 1), 3, &opts()).unwrap();
        assert!(r.applicable && r.strict);
        assert_eq!((r.cliques_before, r.cliques_after), (2, 4));
        assert!((r.rho_after.unwrap() - 3.0).abs() < 1e-9);

        let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        for (u, v) in [(0, 2), (0, 3), (1, 3), (1, 4), (2, 4)] {
            let r = verify_monotonicity(&c5, (u, v), 2, &opts()).unwrap();
            assert!(r.applicable && r.strict);
        }

        let k3 = complete_graph(3).unwrap();
        let two = disjoint_union(&k3, &k3).unwrap();
        let r = verify_monotonicity(&two, (2, 3), 3, &opts()).unwrap();
        assert!(!r.applicable);
        assert!(verify_monotonicity(&two, (0, 1), 3, &opts()).is_err());
    }

    #[test]
    fn upper_bound_is_sound_on_small_graphs() {
        for n in 1..=6 {
            for g in enumerate_graphs(n).unwrap() {
                for t in 2..=n.min(4) {
                    let rho = spectral_radius_of(&enumerate_cliques(&g, t).unwrap(), &opts())
                        .unwrap()
                        .rho;
                    assert!(rho <= rho_upper_bound(&g, t) + 1e-9, "{g:?} t={t}");
                }
            }
        }
    }
}
