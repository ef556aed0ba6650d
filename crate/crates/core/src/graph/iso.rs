//! Isomorphism for small graphs: colour refinement followed by backtracking.

use super::{bits, Graph};
use crate::error::{Error, Result};
use std::collections::BTreeMap;

pub const MAX_ISO_VERTICES: usize = 16;

/// Refines degree colours on both graphs at once so colour ids are comparable.
fn refine(g1: &Graph, g2: &Graph) -> (Vec<u32>, Vec<u32>) {
    let n = g1.n();
    let graphs = [g1, g2];
    let mut colors: Vec<Vec<u32>> = graphs
        .iter()
        .map(|g| (0..n).map(|v| g.degree(v) as u32).collect())
        .collect();
    let mut classes = 0usize;
    loop {
        let mut palette: BTreeMap<(u32, Vec<u32>), u32> = BTreeMap::new();
        let sigs: Vec<Vec<(u32, Vec<u32>)>> = graphs
            .iter()
            .zip(&colors)
            .map(|(g, col)| {
                (0..n)
                    .map(|v| {
                        let mut nb: Vec<u32> = bits(g.neighbors(v)).map(|u| col[u]).collect();
                        nb.sort_unstable();
                        (col[v], nb)
                    })
                    .collect()
            })
            .collect();
        for s in sigs.iter().flatten() {
            let next = palette.len() as u32;
            palette.entry(s.clone()).or_insert(next);
        }
        // Ids follow the BTreeMap order so both graphs see the same numbering.
        for (i, id) in palette.values_mut().enumerate() {
            *id = i as u32;
        }
        colors = sigs
            .iter()
            .map(|row| row.iter().map(|s| palette[s]).collect())
            .collect();
        if palette.len() == classes {
            break;
        }
        classes = palette.len();
    }
    let c2 = colors.pop().unwrap();
    let c1 = colors.pop().unwrap();
    (c1, c2)
}

/// True iff an adjacency-preserving bijection exists. Both graphs need n ≤ 16.
pub fn are_isomorphic(g1: &Graph, g2: &Graph) -> Result<bool> {
    for g in [g1, g2] {
        if g.n() > MAX_ISO_VERTICES {
            return Err(Error::Capacity {
                what: "isomorphism vertex count",
                requested: g.n(),
                limit: MAX_ISO_VERTICES,
            });
        }
    }
    if g1.n() != g2.n() || g1.edge_count() != g2.edge_count() {
        return Ok(false);
    }
    let n = g1.n();
    let (c1, c2) = refine(g1, g2);
    let mut h1 = c1.clone();
    let mut h2 = c2.clone();
    h1.sort_unstable();
    h2.sort_unstable();
    if h1 != h2 {
        return Ok(false);
    }

    // Map vertices of g1 from the rarest colour class outward.
    let mut class_size = BTreeMap::new();
    for &c in &c1 {
        *class_size.entry(c).or_insert(0usize) += 1;
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (class_size[&c1[v]], c1[v], v));

    let mut map = vec![usize::MAX; n];
    let mut search = Search {
        g1,
        g2,
        c1: &c1,
        c2: &c2,
        order: &order,
        map: &mut map,
    };
    Ok(search.extend(0, 0))
}

struct Search<'a> {
    g1: &'a Graph,
    g2: &'a Graph,
    c1: &'a [u32],
    c2: &'a [u32],
    order: &'a [usize],
    map: &'a mut [usize],
}

impl Search<'_> {
    fn extend(&mut self, depth: usize, used: u64) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let v = self.order[depth];
        'cand: for w in 0..self.g2.n() {
            if used >> w & 1 == 1 || self.c1[v] != self.c2[w] {
                continue;
            }
            for &u in &self.order[..depth] {
                if self.g1.has_edge(u, v) != self.g2.has_edge(self.map[u], w) {
                    continue 'cand;
                }
            }
            self.map[v] = w;
            if self.extend(depth + 1, used | 1 << w) {
                return true;
            }
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, complete_multipartite, join, turan_graph};

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn examples() {
        assert!(are_isomorphic(&turan_graph(4, 2).unwrap(), &cycle(4)).unwrap());
        let k33 = complete_multipartite(&[3, 3]).unwrap();
        assert!(!are_isomorphic(&k33, &cycle(6)).unwrap());
        let k1 = complete_graph(1).unwrap();
        let a = join(&k1, &complete_multipartite(&[2, 3]).unwrap()).unwrap();
        let b = join(&k1, &complete_multipartite(&[3, 2]).unwrap()).unwrap();
        assert!(are_isomorphic(&a, &b).unwrap());
    }

    #[test]
    fn regular_non_isomorphic() {
        // C6 versus two triangles: same degree sequence, refinement cannot split them.
        let two_triangles =
            Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert!(!are_isomorphic(&cycle(6), &two_triangles).unwrap());
        // Prism versus K_{3,3}: both 3-regular on 6 vertices.
        let prism = Graph::from_edges(
            6,
            &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)],
        )
        .unwrap();
        let k33 = complete_multipartite(&[3, 3]).unwrap();
        assert!(!are_isomorphic(&prism, &k33).unwrap());
        assert!(are_isomorphic(&prism.complement(), &cycle(6)).unwrap());
    }

    #[test]
    fn capacity() {
        let g = complete_graph(17).unwrap();
        assert!(matches!(are_isomorphic(&g, &g), Err(Error::Capacity { .. })));
        let h = complete_graph(16).unwrap();
        assert!(are_isomorphic(&h, &h).unwrap());
    }
}
