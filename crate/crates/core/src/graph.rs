//! Simple undirected graphs on `0..n`, the named families the theory talks
//! about, and the structural edits (induced subgraphs, pair contraction).

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::vset::{word_count, VertexSet};

/// Simple undirected graph with bitset adjacency rows.
///
/// Rows are stored back to back, `stride` words each; for `n <= 64` every row
/// is a single `u64`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    stride: usize,
    bits: Vec<u64>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        let stride = word_count(n);
        Graph { n, stride, bits: vec![0; n * stride] }
    }

    pub(crate) fn from_raw(n: usize, stride: usize, bits: Vec<u64>) -> Self {
        debug_assert_eq!(bits.len(), n * stride);
        Graph { n, stride, bits }
    }

    /// Builds a graph from an edge list. Duplicate pairs collapse.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Graph::empty(n);
        if n >= 3 {
            for i in 0..n {
                g.add_edge(i, (i + 1) % n);
            }
        }
        g
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum::<usize>() / 2
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, order: self.n })
        }
    }

    #[inline]
    pub(crate) fn stride(&self) -> usize {
        self.stride
    }

    /// Adjacency row of `v` as raw words.
    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.bits[v * self.stride..(v + 1) * self.stride]
    }

    /// Adjacency row of `v` as a single word; only meaningful for `n <= 64`.
    #[inline]
    pub fn row64(&self, v: usize) -> u64 {
        debug_assert!(self.n <= 64);
        self.bits[v]
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet::from_words(self.row(v))
    }

    pub fn neighbor_iter(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let row = self.row(v);
        row.iter().enumerate().flat_map(|(i, &w)| BitIter(w).map(move |b| i * 64 + b))
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.bits[u * self.stride + (v >> 6)] >> (v & 63) & 1 == 1
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.bits[u * self.stride + (v >> 6)] |= 1u64 << (v & 63);
        self.bits[v * self.stride + (u >> 6)] |= 1u64 << (u & 63);
    }

    pub(crate) fn remove_edge(&mut self, u: usize, v: usize) {
        self.bits[u * self.stride + (v >> 6)] &= !(1u64 << (v & 63));
        self.bits[v * self.stride + (u >> 6)] &= !(1u64 << (u & 63));
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for u in 0..self.n {
            for v in self.neighbor_iter(u) {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn is_complete(&self) -> bool {
        self.size() == self.n * self.n.saturating_sub(1) / 2
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Shortest-path length between `u` and `v`, `None` when disconnected.
    pub fn distance(&self, u: usize, v: usize) -> Result<Option<usize>> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        let mut dist = vec![usize::MAX; self.n];
        let mut queue = VecDeque::from([u]);
        dist[u] = 0;
        while let Some(x) = queue.pop_front() {
            if x == v {
                return Ok(Some(dist[x]));
            }
            for y in self.neighbor_iter(x) {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        Ok(None)
    }

    /// Connected components of the subgraph induced by `alive`, ordered by
    /// their smallest vertex.
    pub fn components_within(&self, alive: &VertexSet) -> Vec<VertexSet> {
        if self.stride == 1 {
            return components64(|v| self.bits[v], alive.words()[0])
                .into_iter()
                .map(|m| VertexSet::from_words(&[m]))
                .collect();
        }
        let mut rest = alive.clone();
        let mut out = Vec::new();
        while let Some(start) = rest.first() {
            let mut comp = VertexSet::new(self.n);
            comp.insert(start);
            rest.remove(start);
            let mut stack = vec![start];
            while let Some(x) = stack.pop() {
                let mut fresh = self.neighbors(x);
                fresh.intersect_with(&rest);
                for y in fresh.iter() {
                    rest.remove(y);
                    comp.insert(y);
                    stack.push(y);
                }
            }
            out.push(comp);
        }
        out
    }

    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(&self.vertex_set())
    }

    /// True when the subgraph induced by `alive` is connected (and nonempty).
    pub fn is_connected_within(&self, alive: &VertexSet) -> bool {
        if self.stride == 1 {
            let m = alive.words()[0];
            return m != 0 && reach64(|v| self.bits[v], m) == m;
        }
        let comps = self.components_within(alive);
        comps.len() == 1
    }

    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.is_connected_within(&self.vertex_set())
    }

    /// Induced subgraph `G[keep]`, vertices renumbered in increasing order.
    /// The map sends old indices to new ones.
    pub fn subgraph(&self, keep: &VertexSet) -> (Graph, Vec<Option<usize>>) {
        let mut map = vec![None; self.n];
        let kept: Vec<usize> = keep.iter().filter(|&v| v < self.n).collect();
        for (new, &old) in kept.iter().enumerate() {
            map[old] = Some(new);
        }
        let mut h = Graph::empty(kept.len());
        for (new_u, &old_u) in kept.iter().enumerate() {
            for old_v in self.neighbor_iter(old_u) {
                if let Some(new_v) = map[old_v] {
                    if new_v > new_u {
                        h.add_edge(new_u, new_v);
                    }
                }
            }
        }
        (h, map)
    }

    /// `G - drop`.
    pub fn delete(&self, drop: &VertexSet) -> (Graph, Vec<Option<usize>>) {
        let keep = self.vertex_set().difference(drop);
        self.subgraph(&keep)
    }

    /// Identifies `u` and `v` (adjacent or not) into a single vertex adjacent
    /// to `N(u) ∪ N(v) \ {u, v}`. Survivors keep their relative order and the
    /// merged vertex gets the last index, `n - 2`.
    pub fn contract_pair(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SameVertex(u));
        }
        let mut drop = VertexSet::new(self.n);
        drop.insert(u);
        drop.insert(v);
        let (mut h, map) = self.delete(&drop);
        let z = self.n - 2;
        let mut grown = Graph::empty(self.n - 1);
        for (a, b) in h.edges() {
            grown.add_edge(a, b);
        }
        let merged = self.neighbors(u).union(&self.neighbors(v)).difference(&drop);
        for w in merged.iter() {
            grown.add_edge(map[w].expect("survivor"), z);
        }
        h = grown;
        Ok(h)
    }

    /// Relabels so that old vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut h = Graph::empty(self.n);
        for (u, v) in self.edges() {
            h.add_edge(perm[u], perm[v]);
        }
        h
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    /// 2-connected: at least three vertices, connected, no cut vertex.
    pub fn is_biconnected(&self) -> bool {
        if self.n < 3 || !self.is_connected() {
            return false;
        }
        let all = self.vertex_set();
        (0..self.n).all(|v| {
            let mut rest = all.clone();
            rest.remove(v);
            self.is_connected_within(&rest)
        })
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

pub(crate) struct BitIter(pub u64);

impl Iterator for BitIter {
    type Item = usize;
    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let b = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(b)
        }
    }
}

/// Vertices reachable from the lowest vertex of `alive` inside `alive`.
#[inline]
pub(crate) fn reach64(row: impl Fn(usize) -> u64, alive: u64) -> u64 {
    if alive == 0 {
        return 0;
    }
    let mut seen = alive & alive.wrapping_neg();
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0;
        for v in BitIter(frontier) {
            next |= row(v);
        }
        next &= alive & !seen;
        seen |= next;
        frontier = next;
    }
    seen
}

pub(crate) fn components64(row: impl Fn(usize) -> u64, alive: u64) -> Vec<u64> {
    let mut rest = alive;
    let mut out = Vec::new();
    while rest != 0 {
        let c = reach64(&row, rest);
        out.push(c);
        rest &= !c;
    }
    out
}

/// The named families used by the classification theorems.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum NamedFamily {
    Complete(usize),
    CompleteMinusEdge(usize),
    Wheel(usize),
    SemiWheel(usize),
    SemiPrism,
}

/// Vertex names of the semi-prism as built by [`make_named`]: the triangle
/// `x, y, z` is `0, 1, 2` and the pendants `x', y', z'` are `3, 4, 5`.
pub const SEMI_PRISM_BOUNDARY: [usize; 3] = [3, 4, 5];

pub fn make_named(family: NamedFamily) -> Result<Graph> {
    match family {
        NamedFamily::Complete(n) => Ok(Graph::complete(n)),
        NamedFamily::CompleteMinusEdge(n) => {
            if n < 2 {
                return Err(Error::InvalidFamily(format!("K_{n}^- needs n >= 2")));
            }
            let mut g = Graph::complete(n);
            g.remove_edge(0, 1);
            Ok(g)
        }
        NamedFamily::Wheel(n) => {
            if n < 4 {
                return Err(Error::InvalidFamily(format!("W_{n} needs n >= 4")));
            }
            let mut g = Graph::empty(n);
            for i in 1..n {
                g.add_edge(0, i);
                g.add_edge(i, if i + 1 < n { i + 1 } else { 1 });
            }
            Ok(g)
        }
        NamedFamily::SemiWheel(n) => {
            if n < 4 {
                return Err(Error::InvalidFamily(format!("SW_{n} needs n >= 4")));
            }
            let mut g = Graph::empty(n);
            for i in 1..n - 1 {
                g.add_edge(i, i + 1);
            }
            for i in 2..n - 1 {
                g.add_edge(0, i);
            }
            Ok(g)
        }
        NamedFamily::SemiPrism => Graph::from_edges(6, &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 4), (2, 5)]),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(n: usize, vs: &[usize]) -> VertexSet {
        VertexSet::from_iter_with(n, vs.iter().copied())
    }

    #[test]
    fn from_edges_basic_cases() {
        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(k4, Graph::complete(4));
        let e3 = Graph::from_edges(3, &[]).unwrap();
        assert!((0..3).all(|v| e3.degree(v) == 0));
        let g = Graph::from_edges(5, &[(0, 1), (0, 1), (1, 2)]).unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn from_edges_rejects_bad_input() {
        assert_eq!(Graph::from_edges(3, &[(0, 3)]), Err(Error::VertexOutOfRange { vertex: 3, order: 3 }));
        assert_eq!(Graph::from_edges(3, &[(1, 1)]), Err(Error::SelfLoop(1)));
    }

    #[test]
    fn named_families() {
        let sw5 = make_named(NamedFamily::SemiWheel(5)).unwrap();
        assert_eq!(sw5.edges(), vec![(0, 2), (0, 3), (1, 2), (2, 3), (3, 4)]);
        let sw4 = make_named(NamedFamily::SemiWheel(4)).unwrap();
        assert_eq!(sw4.edges(), vec![(0, 2), (1, 2), (2, 3)]);
        let w5 = make_named(NamedFamily::Wheel(5)).unwrap();
        assert_eq!(w5.size(), 8);
        assert_eq!(w5.degree(0), 4);
        let km = make_named(NamedFamily::CompleteMinusEdge(5)).unwrap();
        assert!(!km.has_edge(0, 1));
        assert_eq!(km.size(), 9);
        let spr = make_named(NamedFamily::SemiPrism).unwrap();
        assert_eq!(spr.size(), 6);
        assert!(make_named(NamedFamily::Wheel(3)).is_err());
        assert!(make_named(NamedFamily::SemiWheel(3)).is_err());
        assert!(make_named(NamedFamily::CompleteMinusEdge(1)).is_err());
    }

    #[test]
    fn contraction_examples() {
        let km = make_named(NamedFamily::CompleteMinusEdge(5)).unwrap();
        assert_eq!(km.contract_pair(0, 1).unwrap(), Graph::complete(4));

        let c4 = Graph::cycle(4);
        assert_eq!(c4.contract_pair(0, 2).unwrap(), Graph::from_edges(3, &[(0, 2), (1, 2)]).unwrap());

        // W_5 rim non-edge {1,3}: survivors 0,2,4 -> 0,1,2 and z = 3.
        let w5 = make_named(NamedFamily::Wheel(5)).unwrap();
        let h = w5.contract_pair(1, 3).unwrap();
        assert_eq!(h.order(), 4);
        assert_eq!(h.neighbors(3).to_vec(), vec![0, 1, 2]);
        assert!(h.has_edge(0, 1) && h.has_edge(0, 2) && !h.has_edge(1, 2));

        assert_eq!(c4.contract_pair(1, 1), Err(Error::SameVertex(1)));
        assert!(c4.contract_pair(0, 9).is_err());
    }

    #[test]
    fn subgraph_and_delete() {
        let k5 = Graph::complete(5);
        assert_eq!(k5.subgraph(&set(5, &[])).0.order(), 0);
        assert_eq!(k5.subgraph(&set(5, &[0, 1, 2])).0, Graph::complete(3));
        let w6 = make_named(NamedFamily::Wheel(6)).unwrap();
        let (rim, map) = w6.delete(&set(6, &[0]));
        assert_eq!(rim, Graph::cycle(5));
        assert_eq!(map[0], None);
        assert_eq!(map[3], Some(2));
    }

    #[test]
    fn traversal_helpers() {
        let w6 = make_named(NamedFamily::Wheel(6)).unwrap();
        assert_eq!(w6.distance(1, 3).unwrap(), Some(2));
        assert_eq!(w6.distance(0, 3).unwrap(), Some(1));
        let two = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(two.distance(0, 3).unwrap(), None);
        assert_eq!(two.components().len(), 2);
        assert!(w6.is_biconnected());
        assert!(!Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap().is_biconnected());
    }

    #[test]
    fn wide_graph_uses_multiword_rows() {
        let c = Graph::cycle(130);
        assert!(c.is_connected());
        assert_eq!(c.size(), 130);
        let (p, _) = c.delete(&set(130, &[0, 65]));
        assert_eq!(p.components().len(), 2);
        let z = c.contract_pair(0, 65).unwrap();
        assert_eq!(z.degree(128), 4);
    }
}
