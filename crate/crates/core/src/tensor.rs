//! Spectral radius of the t-clique tensor.
//!
//! The tensor is never stored: with weight `1/(t-1)!` on every permutation of
//! a clique, `(A x^{t-1})_j` collapses to `Σ_{e ∋ j} Π_{v ∈ e \ j} x_v`, so a
//! contraction is one pass over the clique list.
//!
//! The solver splits the vertex set into t-clique components, since the
//! tensor of a symmetric reducible tensor is block diagonal and the spectral
//! radius is attained on one of the blocks. Each block is weakly irreducible
//! and runs a shifted power iteration
//! `y = (A x^{t-1} + s·x^{[t-1]})^{[1/(t-1)]}` from the uniform vector. The
//! Collatz–Wielandt quotients `(A x^{t-1})_j / x_j^{t-1}` bracket the spectral
//! radius at every step, which gives the stopping rule and a certified result.

use crate::cliques::{clique_components_of, enumerate_cliques, has_clique_within, CliqueSet};
use crate::error::{Error, Result};
use crate::graph::{bits, Graph};
use crate::json::{f64_17, vec_f64_17};
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolverOptions {
    /// Stop once `λ_max - λ_min` is at most this.
    pub tol: f64,
    pub max_iters: usize,
    /// Diagonal shift added to the tensor; makes weakly irreducible blocks primitive.
    pub shift: f64,
}

impl Default for SolverOptions {
    fn default() -> Self {
        SolverOptions {
            tol: 1e-10,
            max_iters: 100_000,
            shift: 1.0,
        }
    }
}

impl SolverOptions {
    pub fn validate(&self) -> Result<()> {
        if !(self.tol > 0.0) {
            return Err(Error::arg(format!("tol must be > 0 (got {})", self.tol)));
        }
        if !(self.shift >= 0.0) || !self.shift.is_finite() {
            return Err(Error::arg(format!("shift must be >= 0 (got {})", self.shift)));
        }
        if self.max_iters == 0 {
            return Err(Error::arg("max_iters must be >= 1"));
        }
        Ok(())
    }
}

/// Perron data for one t-clique component.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ComponentSpectrum {
    /// Component vertices in increasing order.
    pub vertices: Vec<usize>,
    #[serde(serialize_with = "f64_17")]
    pub rho: f64,
    /// Entries for `vertices`, in the same order, with unit ℓ_t norm.
    #[serde(serialize_with = "vec_f64_17")]
    pub vector: Vec<f64>,
    pub iterations: usize,
    #[serde(serialize_with = "f64_17")]
    pub lambda_min: f64,
    #[serde(serialize_with = "f64_17")]
    pub lambda_max: f64,
    #[serde(serialize_with = "f64_17")]
    pub gap: f64,
    pub converged: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectralResult {
    pub n: usize,
    pub t: usize,
    #[serde(serialize_with = "f64_17")]
    pub rho: f64,
    /// Index into `components` of the block attaining `rho`.
    pub winner: Option<usize>,
    /// `max_j |(A x^{t-1})_j - ρ x_j^{t-1}|` on the winning block.
    #[serde(serialize_with = "f64_17")]
    pub residual: f64,
    pub converged: bool,
    pub components: Vec<ComponentSpectrum>,
}

impl SpectralResult {
    /// Perron vector of the winning block embedded in a length-`n` vector.
    pub fn perron_vector(&self) -> Vec<f64> {
        let mut x = vec![0.0; self.n];
        if let Some(w) = self.winner {
            let c = &self.components[w];
            for (&v, &xv) in c.vertices.iter().zip(&c.vector) {
                x[v] = xv;
            }
        }
        x
    }
}

/// Rescales `x` so its largest entry is 1.
pub fn max_normalized(x: &[f64]) -> Vec<f64> {
    let m = x.iter().cloned().fold(0.0f64, f64::max);
    if m > 0.0 {
        x.iter().map(|v| v / m).collect()
    } else {
        x.to_vec()
    }
}

pub fn lt_norm(x: &[f64], t: usize) -> f64 {
    x.iter().map(|v| v.abs().powi(t as i32)).sum::<f64>().powf(1.0 / t as f64)
}

/// `A x^{t-1}` for the t-clique tensor described by `cliques`.
pub fn apply_tensor(cliques: &CliqueSet, x: &[f64]) -> Result<Vec<f64>> {
    if x.len() != cliques.n() {
        return Err(Error::arg(format!(
            "vector length {} does not match n={}",
            x.len(),
            cliques.n()
        )));
    }
    let mut out = vec![0.0; x.len()];
    let mut verts = Vec::with_capacity(cliques.t());
    for c in cliques.cliques() {
        verts.clear();
        verts.extend(c.vertices());
        for &j in &verts {
            let prod: f64 = verts.iter().filter(|&&v| v != j).map(|&v| x[v]).product();
            out[j] += prod;
        }
    }
    Ok(out)
}

/// `t · Σ_{e ∈ C_t} Π_{v ∈ e} x_v` for a nonnegative `x` with unit ℓ_t norm.
pub fn rayleigh(cliques: &CliqueSet, x: &[f64]) -> Result<f64> {
    let t = cliques.t();
    if x.len() != cliques.n() {
        return Err(Error::arg(format!(
            "vector length {} does not match n={}",
            x.len(),
            cliques.n()
        )));
    }
    if x.iter().any(|&v| !(v >= 0.0)) {
        return Err(Error::arg("vector must be nonnegative"));
    }
    let norm = lt_norm(x, t);
    if (norm - 1.0).abs() > 1e-9 {
        return Err(Error::arg(format!("vector has l_{t} norm {norm}, expected 1")));
    }
    let sum: f64 = cliques
        .cliques()
        .iter()
        .map(|c| c.vertices().map(|v| x[v]).product::<f64>())
        .sum();
    Ok(t as f64 * sum)
}

/// `max_j |(A x^{t-1})_j - λ x_j^{t-1}|`.
pub fn eigen_residual(cliques: &CliqueSet, lambda: f64, x: &[f64]) -> Result<f64> {
    let ax = apply_tensor(cliques, x)?;
    let t = cliques.t() as i32;
    Ok(ax
        .iter()
        .zip(x)
        .map(|(a, &xv)| (a - lambda * xv.powi(t - 1)).abs())
        .fold(0.0, f64::max))
}

/// Clique list of one block, re-indexed to `0..m`.
struct BlockTensor {
    t: usize,
    m: usize,
    flat: Vec<u8>,
}

impl BlockTensor {
    fn new(cliques: &CliqueSet, mask: u64) -> (Self, Vec<usize>) {
        let vertices: Vec<usize> = bits(mask).collect();
        let mut local = [u8::MAX; 64];
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i as u8;
        }
        let mut flat = Vec::new();
        for c in cliques.cliques().iter().filter(|c| c.0 & !mask == 0) {
            flat.extend(c.vertices().map(|v| local[v]));
        }
        let block = BlockTensor {
            t: cliques.t(),
            m: vertices.len(),
            flat,
        };
        (block, vertices)
    }

    fn apply(&self, x: &[f64], out: &mut [f64]) {
        out.iter_mut().for_each(|o| *o = 0.0);
        if self.t == 2 {
            for e in self.flat.chunks_exact(2) {
                let (a, b) = (e[0] as usize, e[1] as usize);
                out[a] += x[b];
                out[b] += x[a];
            }
            return;
        }
        for e in self.flat.chunks_exact(self.t) {
            for (k, &j) in e.iter().enumerate() {
                let mut prod = 1.0;
                for (l, &v) in e.iter().enumerate() {
                    if l != k {
                        prod *= x[v as usize];
                    }
                }
                out[j as usize] += prod;
            }
        }
    }
}

struct BlockRun {
    rho: f64,
    vector: Vec<f64>,
    iterations: usize,
    lambda_min: f64,
    lambda_max: f64,
    converged: bool,
}

fn power_iteration(block: &BlockTensor, opts: &SolverOptions, start: Option<&[f64]>) -> BlockRun {
    let t = block.t;
    let m = block.m;
    let p = (t - 1) as i32;
    let root = 1.0 / (t - 1) as f64;
    let mut x: Vec<f64> = match start {
        Some(s) => s.to_vec(),
        None => vec![1.0; m],
    };
    let norm = lt_norm(&x, t);
    x.iter_mut().for_each(|v| *v /= norm);

    let mut ax = vec![0.0; m];
    let mut best_lo = 0.0f64;
    let mut best_hi = f64::INFINITY;
    for it in 1..=opts.max_iters {
        block.apply(&x, &mut ax);
        let mut lo = f64::INFINITY;
        let mut hi = 0.0f64;
        for j in 0..m {
            let q = ax[j] / x[j].powi(p);
            lo = lo.min(q);
            hi = hi.max(q);
        }
        best_lo = best_lo.max(lo);
        best_hi = best_hi.min(hi);
        if hi - lo <= opts.tol {
            return BlockRun {
                rho: 0.5 * (lo + hi),
                vector: x,
                iterations: it,
                lambda_min: lo,
                lambda_max: hi,
                converged: true,
            };
        }
        if it == opts.max_iters {
            break;
        }
        for j in 0..m {
            let y = ax[j] + opts.shift * x[j].powi(p);
            x[j] = if t == 2 { y } else { y.powf(root) };
        }
        let norm = lt_norm(&x, t);
        x.iter_mut().for_each(|v| *v /= norm);
    }
    BlockRun {
        rho: 0.5 * (best_lo + best_hi),
        vector: x,
        iterations: opts.max_iters,
        lambda_min: best_lo,
        lambda_max: best_hi,
        converged: false,
    }
}

/// Spectral radius from a precomputed clique set.
pub fn spectral_radius_of(cliques: &CliqueSet, opts: &SolverOptions) -> Result<SpectralResult> {
    spectral_radius_from(cliques, opts, None)
}

/// Like [`spectral_radius_of`] but starting each block from the matching
/// entries of `start` (all must be positive on covered vertices).
pub fn spectral_radius_from(
    cliques: &CliqueSet,
    opts: &SolverOptions,
    start: Option<&[f64]>,
) -> Result<SpectralResult> {
    opts.validate()?;
    let t = cliques.t();
    if t < 2 {
        return Err(Error::arg("spectral radius needs t >= 2"));
    }
    if let Some(s) = start {
        if s.len() != cliques.n() {
            return Err(Error::arg("start vector length does not match n"));
        }
    }
    let comps = clique_components_of(cliques);
    let mut components = Vec::with_capacity(comps.components.len());
    for &mask in &comps.components {
        let (block, vertices) = BlockTensor::new(cliques, mask);
        let local_start: Option<Vec<f64>> = start.map(|s| vertices.iter().map(|&v| s[v]).collect());
        if let Some(ls) = &local_start {
            if ls.iter().any(|&v| !(v > 0.0)) {
                return Err(Error::arg("start vector must be positive on covered vertices"));
            }
        }
        let run = power_iteration(&block, opts, local_start.as_deref());
        components.push(ComponentSpectrum {
            vertices,
            rho: run.rho,
            vector: run.vector,
            iterations: run.iterations,
            lambda_min: run.lambda_min,
            lambda_max: run.lambda_max,
            gap: run.lambda_max - run.lambda_min,
            converged: run.converged,
        });
    }

    let mut winner: Option<usize> = None;
    for (i, c) in components.iter().enumerate() {
        if winner.is_none_or(|w| c.rho > components[w].rho) {
            winner = Some(i);
        }
    }
    let mut result = SpectralResult {
        n: cliques.n(),
        t,
        rho: winner.map_or(0.0, |w| components[w].rho),
        winner,
        residual: 0.0,
        converged: components.iter().all(|c| c.converged),
        components,
    };
    if winner.is_some() {
        let x = result.perron_vector();
        result.residual = eigen_residual(cliques, result.rho, &x)?;
    }
    Ok(result)
}

/// `ρ_t(G)` with per-block Perron data. Graphs without a t-clique give `rho = 0`.
pub fn spectral_radius(g: &Graph, t: usize, opts: &SolverOptions) -> Result<SpectralResult> {
    if t < 2 {
        return Err(Error::arg("spectral radius needs t >= 2"));
    }
    let cliques = enumerate_cliques(g, t)?;
    spectral_radius_of(&cliques, opts)
}

/// Weak irreducibility read off the tensor support.
///
/// Arc `i → j` exists iff some nonzero entry `a_{i i_2 … i_t}` has `j` among
/// the trailing indices, i.e. `i ~ j` and `N(i) ∩ N(j)` holds a `K_{t-2}`.
/// The tensor is weakly irreducible iff this digraph is strongly connected.
pub fn weakly_irreducible(g: &Graph, t: usize) -> Result<bool> {
    let n = g.n();
    if t < 2 || t > n {
        return Err(Error::arg(format!("weak irreducibility needs 2 <= t <= n (t={t}, n={n})")));
    }
    let mut out_arcs = vec![0u64; n];
    let mut in_arcs = vec![0u64; n];
    for i in 0..n {
        for j in bits(g.neighbors(i)) {
            let common = g.neighbors(i) & g.neighbors(j);
            if has_clique_within(g, common, t - 2) {
                out_arcs[i] |= 1 << j;
                in_arcs[j] |= 1 << i;
            }
        }
    }
    let reach = |arcs: &[u64]| {
        let mut seen = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let mut next = 0;
            for v in bits(frontier) {
                next |= arcs[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen
    };
    let all = g.vertex_mask();
    Ok(reach(&out_arcs) == all && reach(&in_arcs) == all)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, disjoint_union, turan_graph};

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn apply_examples() {
        let k3 = enumerate_cliques(&complete_graph(3).unwrap(), 3).unwrap();
        assert_eq!(apply_tensor(&k3, &[1.0, 1.0, 1.0]).unwrap(), vec![1.0; 3]);
        let k4 = enumerate_cliques(&complete_graph(4).unwrap(), 3).unwrap();
        assert_eq!(apply_tensor(&k4, &[1.0; 4]).unwrap(), vec![3.0; 4]);
        let k3e = enumerate_cliques(&complete_graph(3).unwrap(), 2).unwrap();
        assert_eq!(apply_tensor(&k3e, &[1.0, 2.0, 3.0]).unwrap(), vec![5.0, 4.0, 3.0]);
        assert!(apply_tensor(&k3e, &[1.0, 2.0]).is_err());
    }

    #[test]
    fn rayleigh_examples() {
        let k2 = enumerate_cliques(&complete_graph(2).unwrap(), 2).unwrap();
        let h = 0.5f64.sqrt();
        assert!(close(rayleigh(&k2, &[h, h]).unwrap(), 1.0, 1e-15));
        let k3 = enumerate_cliques(&complete_graph(3).unwrap(), 3).unwrap();
        let u = 3f64.powf(-1.0 / 3.0);
        assert!(close(rayleigh(&k3, &[u; 3]).unwrap(), 1.0, 1e-14));
        let k4 = enumerate_cliques(&complete_graph(4).unwrap(), 3).unwrap();
        let u = 4f64.powf(-1.0 / 3.0);
        assert!(close(rayleigh(&k4, &[u; 4]).unwrap(), 3.0, 1e-14));
        assert!(rayleigh(&k4, &[1.0; 4]).is_err());
        assert!(rayleigh(&k2, &[-h, h]).is_err());
    }

    #[test]
    fn residual_examples() {
        let k3 = enumerate_cliques(&complete_graph(3).unwrap(), 3).unwrap();
        assert_eq!(eigen_residual(&k3, 1.0, &[1.0; 3]).unwrap(), 0.0);
        let k4 = enumerate_cliques(&complete_graph(4).unwrap(), 3).unwrap();
        let u = 4f64.powf(-1.0 / 3.0);
        assert!(eigen_residual(&k4, 3.0, &[u; 4]).unwrap() < 1e-15);
        let k3e = enumerate_cliques(&complete_graph(3).unwrap(), 2).unwrap();
        assert_eq!(eigen_residual(&k3e, 1.0, &[1.0; 3]).unwrap(), 1.0);
    }

    #[test]
    fn radius_examples() {
        let opts = SolverOptions::default();
        let r = spectral_radius(&complete_graph(2).unwrap(), 2, &opts).unwrap();
        assert!(close(r.rho, 1.0, 1e-9));
        assert!(close(spectral_radius(&complete_graph(4).unwrap(), 3, &opts).unwrap().rho, 3.0, 1e-9));
        assert!(close(spectral_radius(&complete_graph(5).unwrap(), 3, &opts).unwrap().rho, 6.0, 1e-9));
        assert!(close(spectral_radius(&turan_graph(6, 3).unwrap(), 3, &opts).unwrap().rho, 4.0, 1e-9));
        let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let r = spectral_radius(&c5, 3, &opts).unwrap();
        assert_eq!(r.rho, 0.0);
        assert!(r.components.is_empty());
        assert_eq!(r.winner, None);
        assert!(spectral_radius(&c5, 1, &opts).is_err());
    }

    #[test]
    fn bipartite_needs_shift() {
        // K_{1,3}: ρ = √3; the unshifted iteration oscillates on bipartite support.
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let r = spectral_radius(&star, 2, &SolverOptions::default()).unwrap();
        assert!(r.converged);
        assert!(close(r.rho, 3f64.sqrt(), 1e-9));
        let no_shift = SolverOptions {
            shift: 0.0,
            max_iters: 500,
            ..SolverOptions::default()
        };
        let r = spectral_radius(&star, 2, &no_shift).unwrap();
        assert!(!r.converged);
        assert!(r.components[0].lambda_min <= 3f64.sqrt() + 1e-12);
        assert!(r.components[0].lambda_max >= 3f64.sqrt() - 1e-12);
    }

    #[test]
    fn reducible_graph_uses_best_block() {
        let g = disjoint_union(&complete_graph(3).unwrap(), &complete_graph(5).unwrap()).unwrap();
        let r = spectral_radius(&g, 3, &SolverOptions::default()).unwrap();
        assert_eq!(r.components.len(), 2);
        assert_eq!(r.winner, Some(1));
        assert!(close(r.rho, 6.0, 1e-9));
        let x = r.perron_vector();
        assert!(x[..3].iter().all(|&v| v == 0.0));
        assert!(close(lt_norm(&x, 3), 1.0, 1e-12));
        assert!(r.residual <= 1e-10);
    }

    #[test]
    fn non_convergence_is_flagged() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        let opts = SolverOptions {
            max_iters: 2,
            ..SolverOptions::default()
        };
        let r = spectral_radius(&g, 2, &opts).unwrap();
        assert!(!r.converged);
        assert!(r.components[0].lambda_min <= 3f64.sqrt() && 3f64.sqrt() <= r.components[0].lambda_max);
    }

    #[test]
    fn option_validation() {
        let g = complete_graph(3).unwrap();
        for bad in [
            SolverOptions { tol: 0.0, ..Default::default() },
            SolverOptions { shift: -1.0, ..Default::default() },
            SolverOptions { max_iters: 0, ..Default::default() },
        ] {
            assert!(spectral_radius(&g, 2, &bad).is_err());
        }
    }

    #[test]
    fn irreducibility_examples() {
        assert!(weakly_irreducible(&complete_graph(4).unwrap(), 3).unwrap());
        let k4_k1 = disjoint_union(&complete_graph(4).unwrap(), &complete_graph(1).unwrap()).unwrap();
        assert!(!weakly_irreducible(&k4_k1, 3).unwrap());
        let k3 = complete_graph(3).unwrap();
        let two = disjoint_union(&k3, &k3).unwrap();
        assert!(!weakly_irreducible(&two, 3).unwrap());
        assert!(weakly_irreducible(&k3, 4).is_err());
    }

    #[test]
    fn max_normalization() {
        assert_eq!(max_normalized(&[0.5, 0.25, 0.0]), vec![1.0, 0.5, 0.0]);
        assert_eq!(max_normalized(&[0.0, 0.0]), vec![0.0, 0.0]);
    }
}
