use super::{full_mask, Graph, MAX_VERTICES};
use crate::error::{Error, Result};

fn capacity(n: usize) -> Error {
    Error::Capacity {
        what: "vertex count",
        requested: n,
        limit: MAX_VERTICES,
    }
}

pub fn complete_graph(n: usize) -> Result<Graph> {
    if n > MAX_VERTICES {
        return Err(capacity(n));
    }
    let mask = full_mask(n);
    Graph::from_adjacency((0..n).map(|v| mask & !(1u64 << v)).collect())
}

/// Part sizes of `T_r(n)`, larger parts first.
pub fn turan_part_sizes(n: usize, r: usize) -> Result<Vec<usize>> {
    if r == 0 {
        return Err(Error::arg("Turán graph needs r >= 1"));
    }
    let (q, rem) = (n / r, n % r);
    Ok((0..r).map(|i| q + usize::from(i < rem)).collect())
}

/// The Turán graph `T_r(n)`. Empty parts (when `r > n`) contribute nothing.
pub fn turan_graph(n: usize, r: usize) -> Result<Graph> {
    let sizes = turan_part_sizes(n, r)?;
    multipartite_from_parts(sizes.iter().copied().filter(|&s| s > 0))
}

/// `K_r(s_1, ..., s_r)`: vertices numbered part by part in the given order.
pub fn complete_multipartite(sizes: &[usize]) -> Result<Graph> {
    if sizes.is_empty() {
        return Err(Error::arg("complete multipartite graph needs at least one part"));
    }
    if let Some(i) = sizes.iter().position(|&s| s == 0) {
        return Err(Error::arg(format!("part {i} has size 0")));
    }
    multipartite_from_parts(sizes.iter().copied())
}

fn multipartite_from_parts(sizes: impl Iterator<Item = usize>) -> Result<Graph> {
    let sizes: Vec<usize> = sizes.collect();
    let n: usize = sizes.iter().sum();
    if n > MAX_VERTICES {
        return Err(capacity(n));
    }
    let all = full_mask(n);
    let mut rows = Vec::with_capacity(n);
    let mut start = 0;
    for s in sizes {
        let part = full_mask(start + s) & !full_mask(start);
        rows.extend(std::iter::repeat_n(all & !part, s));
        start += s;
    }
    Graph::from_adjacency(rows)
}

/// `G1 ∨ G2`; the vertices of `g1` come first.
pub fn join(g1: &Graph, g2: &Graph) -> Result<Graph> {
    let n1 = g1.n();
    let n = n1 + g2.n();
    if n > MAX_VERTICES {
        return Err(capacity(n));
    }
    let first = full_mask(n1);
    let second = full_mask(n) & !first;
    let mut rows = Vec::with_capacity(n);
    rows.extend(g1.adjacency().iter().map(|&r| r | second));
    rows.extend(g2.adjacency().iter().map(|&r| (r << n1) | first));
    Graph::from_adjacency(rows)
}

/// `G1 ∪ G2` with no cross edges; the vertices of `g1` come first.
pub fn disjoint_union(g1: &Graph, g2: &Graph) -> Result<Graph> {
    let n1 = g1.n();
    let n = n1 + g2.n();
    if n > MAX_VERTICES {
        return Err(capacity(n));
    }
    let mut rows = g1.adjacency().to_vec();
    rows.extend(g2.adjacency().iter().map(|&r| r << n1));
    Graph::from_adjacency(rows)
}

/// `K_apex ∨ K_r(parts)` with parts kept in non-increasing order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PartitionSpec {
    apex: usize,
    parts: Vec<usize>,
}

impl PartitionSpec {
    /// Sorts `parts` into non-increasing order.
    pub fn new(apex: usize, mut parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::arg("partition needs at least one part"));
        }
        if parts.contains(&0) {
            return Err(Error::arg("part sizes must be >= 1"));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let spec = PartitionSpec { apex, parts };
        if spec.n() > MAX_VERTICES {
            return Err(capacity(spec.n()));
        }
        Ok(spec)
    }

    pub fn apex(&self) -> usize {
        self.apex
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.apex + self.parts.iter().sum::<usize>()
    }

    pub fn graph(&self) -> Result<Graph> {
        join(&complete_graph(self.apex)?, &complete_multipartite(&self.parts)?)
    }

    /// Moves one vertex from part `i` to part `j` (indices into the current sorted order).
    pub fn moved(&self, i: usize, j: usize) -> Result<Self> {
        let r = self.parts.len();
        if i >= r || j >= r || i == j {
            return Err(Error::arg(format!("part indices ({i},{j}) invalid for {r} parts")));
        }
        if self.parts[i] < 2 {
            return Err(Error::arg(format!("part {i} would become empty")));
        }
        let mut parts = self.parts.clone();
        parts[i] -= 1;
        parts[j] += 1;
        PartitionSpec::new(self.apex, parts)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::are_isomorphic;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn turan_examples() {
        let t = turan_graph(4, 2).unwrap();
        assert_eq!(t.edge_count(), 4);
        assert!(are_isomorphic(&t, &cycle(4)).unwrap());
        assert_eq!(turan_graph(6, 3).unwrap().edge_count(), 12);
        let t72 = turan_graph(7, 2).unwrap();
        assert_eq!(t72.edge_count(), 12);
        assert_eq!(turan_part_sizes(7, 2).unwrap(), vec![4, 3]);
        assert!(turan_graph(5, 0).is_err());
    }

    #[test]
    fn turan_with_more_parts_than_vertices_is_complete() {
        assert_eq!(turan_graph(3, 5).unwrap(), complete_graph(3).unwrap());
        assert_eq!(turan_graph(0, 2).unwrap().n(), 0);
    }

    #[test]
    fn multipartite_examples() {
        assert_eq!(complete_multipartite(&[3, 3]).unwrap().edge_count(), 9);
        assert_eq!(
            complete_multipartite(&[1, 1, 1, 1]).unwrap(),
            complete_graph(4).unwrap()
        );
        assert_eq!(
            complete_multipartite(&[2, 2, 2]).unwrap(),
            turan_graph(6, 3).unwrap()
        );
        assert!(complete_multipartite(&[]).is_err());
        assert!(complete_multipartite(&[2, 0]).is_err());
    }

    #[test]
    fn join_examples() {
        let k1 = complete_graph(1).unwrap();
        let k33 = complete_multipartite(&[3, 3]).unwrap();
        let j = join(&k1, &k33).unwrap();
        assert_eq!(j.n(), 7);
        assert_eq!(j.edge_count(), 15);
        assert_eq!(j.degree(0), 6);

        let k0 = complete_graph(0).unwrap();
        assert_eq!(join(&k0, &k33).unwrap(), k33);

        let big = complete_graph(40).unwrap();
        assert!(matches!(join(&big, &big), Err(Error::Capacity { .. })));
    }

    #[test]
    fn complete_examples() {
        assert_eq!(complete_graph(0).unwrap().n(), 0);
        assert_eq!(complete_graph(2).unwrap().edge_count(), 1);
        assert_eq!(complete_graph(5).unwrap().edge_count(), 10);
        assert!(complete_graph(65).is_err());
    }

    #[test]
    fn partition_spec_sorts_and_moves() {
        let p = PartitionSpec::new(1, vec![2, 4, 2]).unwrap();
        assert_eq!(p.parts(), &[4, 2, 2]);
        assert_eq!(p.n(), 9);
        let q = p.moved(0, 2).unwrap();
        assert_eq!(q.parts(), &[3, 3, 2]);
        assert_eq!(q.graph().unwrap().n(), 9);
        assert!(PartitionSpec::new(0, vec![]).is_err());
        assert!(PartitionSpec::new(0, vec![1]).unwrap().moved(0, 0).is_err());
    }

    #[test]
    fn disjoint_union_counts() {
        let k3 = complete_graph(3).unwrap();
        let two = disjoint_union(&k3, &k3).unwrap();
        assert_eq!(two.n(), 6);
        assert_eq!(two.edge_count(), 6);
        assert!(!two.has_edge(0, 3));
    }
}
