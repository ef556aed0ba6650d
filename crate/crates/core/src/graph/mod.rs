//! Simple undirected graphs on at most 64 vertices.
//!
//! Every adjacency row is a single `u64`, so neighbourhood intersections,
//! clique extension and packing checks are single-word bit operations.

mod construct;
mod graph6;
mod iso;
mod params;

pub use construct::{
    complete_graph, complete_multipartite, disjoint_union, join, turan_graph, turan_part_sizes,
    PartitionSpec,
};
pub use graph6::{graph_from_graph6, graph_to_graph6};
pub use iso::{are_isomorphic, MAX_ISO_VERTICES};
pub use params::{chvatal_hanson_bound, matching_number};

use crate::error::{Error, Result};
use std::fmt;

/// Largest vertex count the bitset representation supports.
pub const MAX_VERTICES: usize = 64;

/// Bitset with the lowest `n` bits set.
#[inline]
pub const fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterates the set bits of `mask` in increasing order.
#[inline]
pub fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
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

/// A simple undirected graph; `adj[v]` is the neighbourhood bitset of `v`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::Capacity {
                what: "vertex count",
                requested: n,
                limit: MAX_VERTICES,
            });
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::arg(format!("edge ({u},{v}) out of range for n={n}")));
            }
            if u == v {
                return Err(Error::arg(format!("loop at vertex {u}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from raw adjacency rows, checking symmetry, loops and range.
    pub fn from_adjacency(rows: Vec<u64>) -> Result<Self> {
        let n = rows.len();
        Graph::empty(n)?;
        let g = Graph { n, adj: rows };
        let mask = full_mask(n);
        for v in 0..n {
            let row = g.adj[v];
            if row & !mask != 0 {
                return Err(Error::arg(format!("row {v} has bits beyond n={n}")));
            }
            if row >> v & 1 == 1 {
                return Err(Error::arg(format!("loop at vertex {v}")));
            }
            for u in bits(row) {
                if g.adj[u] >> v & 1 == 0 {
                    return Err(Error::arg(format!("asymmetric adjacency at ({v},{u})")));
                }
            }
        }
        Ok(g)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn adjacency(&self) -> &[u64] {
        &self.adj
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    #[inline]
    pub fn vertex_mask(&self) -> u64 {
        full_mask(self.n)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    /// Adds the edge `uv`.
    ///
    /// # Panics
    /// If `u == v` or either endpoint is out of range.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n, "edge ({u},{v}) out of range");
        assert_ne!(u, v, "loops are not allowed");
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n, "edge ({u},{v}) out of range");
        self.adj[u] &= !(1 << v);
        self.adj[v] &= !(1 << u);
    }

    /// Copy of `self` with the edge `uv` added.
    pub fn with_edge(&self, u: usize, v: usize) -> Graph {
        let mut g = self.clone();
        g.add_edge(u, v);
        g
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).max().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, ordered by `v` then `u` (graph6 column order).
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (1..self.n).flat_map(move |v| bits(self.adj[v] & full_mask(v)).map(move |u| (u, v)))
    }

    /// Vertices with at least one neighbour.
    pub fn non_isolated(&self) -> u64 {
        self.adj
            .iter()
            .enumerate()
            .filter(|(_, r)| **r != 0)
            .fold(0, |m, (v, _)| m | 1 << v)
    }

    pub fn complement(&self) -> Graph {
        let mask = self.vertex_mask();
        let adj = (0..self.n).map(|v| !self.adj[v] & mask & !(1 << v)).collect();
        Graph { n: self.n, adj }
    }

    /// Subgraph induced by `keep`, relabelled in increasing vertex order.
    pub fn induced(&self, keep: u64) -> Graph {
        let verts: Vec<usize> = bits(keep & self.vertex_mask()).collect();
        let mut g = Graph {
            n: verts.len(),
            adj: vec![0; verts.len()],
        };
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({}: {})", self.n, graph_to_graph6(self))
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&graph_to_graph6(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_counts() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(g.edge_count(), 4);
        assert_eq!(g.max_degree(), 2);
        assert!(g.has_edge(3, 0));
        assert!(!g.has_edge(0, 2));
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2), (0, 3), (2, 3)]);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(Graph::empty(65).is_err());
        assert!(Graph::from_edges(3, &[(0, 3)]).is_err());
        assert!(Graph::from_edges(3, &[(1, 1)]).is_err());
        assert!(Graph::from_adjacency(vec![0b10, 0]).is_err());
        assert!(Graph::from_adjacency(vec![0b1, 0]).is_err());
        assert!(Graph::from_adjacency(vec![0b10, 0b01]).is_ok());
    }

    #[test]
    fn complement_and_induced() {
        let g = Graph::from_edges(4, &[(0, 1)]).unwrap();
        let c = g.complement();
        assert_eq!(c.edge_count(), 5);
        assert!(!c.has_edge(0, 1));
        let h = c.induced(0b1110);
        assert_eq!(h.n(), 3);
        assert_eq!(h.edge_count(), 3);
        assert_eq!(g.non_isolated(), 0b11);
    }

    #[test]
    fn full_sixty_four() {
        let g = complete_graph(64).unwrap();
        assert_eq!(g.edge_count(), 64 * 63 / 2);
        assert_eq!(g.vertex_mask(), u64::MAX);
    }
}
