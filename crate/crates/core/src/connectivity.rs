//! Vertex connectivity, smallest cuts and fragments.

use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};

use serde::ser::{Serialize, SerializeSeq, Serializer};
use serde::Serialize as DeriveSerialize;

use crate::error::{Error, Result};
use crate::flow::{vin, vout, Network};
use crate::graph::{reach64, Graph};
use crate::vset::VertexSet;

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.len()))?;
        for v in self.iter() {
            seq.serialize_element(&v)?;
        }
        seq.end()
    }
}

/// Number of internally vertex-disjoint `s`-`t` paths, capped at `limit`.
/// `s` and `t` must be distinct and non-adjacent.
fn local_connectivity(net: &mut Network, s: usize, t: usize, limit: usize) -> usize {
    net.reset();
    net.max_flow(vout(s), vin(t), limit as i32) as usize
}

/// Even's scheme: a minimum separator misses one of the first `bound + 1`
/// vertices, so only pairs anchored there need a flow computation. Returns
/// `min(κ, cap)`.
fn connectivity_capped(g: &Graph, cap: usize) -> usize {
    let n = g.order();
    if g.is_complete() {
        return (n - 1).min(cap);
    }
    if !g.is_connected() {
        return 0;
    }
    let mut best = g.min_degree().min(cap);
    let mut net = Network::split(g, |_| 0);
    let mut i = 0;
    while i <= best && i < n {
        for j in i + 1..n {
            if g.has_edge(i, j) {
                continue;
            }
            let k = local_connectivity(&mut net, i, j, best);
            if k < best {
                best = k;
            }
        }
        i += 1;
    }
    best
}

/// Vertex connectivity κ(G); `K_n` gives `n - 1`.
pub fn vertex_connectivity(g: &Graph) -> Result<usize> {
    if g.order() == 0 {
        return Err(Error::EmptyGraph);
    }
    Ok(connectivity_capped(g, usize::MAX))
}

/// κ(G) >= k, with the flow computations stopping as soon as k paths exist.
pub fn is_k_connected(g: &Graph, k: usize) -> bool {
    if g.order() == 0 {
        return k == 0;
    }
    connectivity_capped(g, k) >= k
}

/// A smallest cut together with the components it leaves behind.
#[derive(Debug, Clone, PartialEq, Eq, DeriveSerialize)]
pub struct CutRecord {
    pub cut: VertexSet,
    pub components: Vec<VertexSet>,
}

impl CutRecord {
    pub fn cut_vertices(&self) -> Vec<usize> {
        self.cut.to_vec()
    }
}

/// Every `k`-subset (lexicographic) whose removal disconnects `g`.
pub(crate) fn separating_sets(g: &Graph, k: usize) -> Vec<VertexSet> {
    let n = g.order();
    let mut out = Vec::new();
    if k + 2 > n {
        return out;
    }
    if n <= 64 {
        let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        for_each_combination(n, k, |idx| {
            let t = idx.iter().fold(0u64, |m, &v| m | 1 << v);
            let alive = full & !t;
            if reach64(|v| g.row64(v), alive) != alive {
                out.push(VertexSet::from_words(&[t]));
            }
        });
    } else {
        let all = g.vertex_set();
        for_each_combination(n, k, |idx| {
            let t = VertexSet::from_iter_with(n, idx.iter().copied());
            if !g.is_connected_within(&all.difference(&t)) {
                out.push(t);
            }
        });
    }
    out
}

pub(crate) fn for_each_combination(n: usize, k: usize, mut f: impl FnMut(&[usize])) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        f(&idx);
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if idx[i] < n - k + i {
                break;
            }
            if i == 0 {
                return;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// 𝒯(G): every separating set of size κ(G), in ascending lexicographic
/// order, each with its components ordered by smallest vertex.
pub fn smallest_cuts(g: &Graph) -> Result<Vec<CutRecord>> {
    if g.order() == 0 {
        return Err(Error::EmptyGraph);
    }
    if g.is_complete() {
        return Err(Error::Complete);
    }
    let kappa = vertex_connectivity(g)?;
    Ok(cuts_of_size(g, kappa))
}

pub(crate) fn cuts_of_size(g: &Graph, k: usize) -> Vec<CutRecord> {
    let all = g.vertex_set();
    separating_sets(g, k)
        .into_iter()
        .map(|cut| {
            let components = g.components_within(&all.difference(&cut));
            CutRecord { cut, components }
        })
        .collect()
}

pub(crate) fn graph_fingerprint(g: &Graph) -> u64 {
    let mut h = DefaultHasher::new();
    g.hash(&mut h);
    h.finish()
}

/// A T-fragment: a union of some but not all components of `G - T`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fragment {
    pub vertices: VertexSet,
    pub complement: VertexSet,
    pub cut: VertexSet,
    graph: u64,
}

impl Fragment {
    /// The complementary fragment `F̄ = V - (F ∪ T)` as a fragment of the same cut.
    pub fn complementary(&self) -> Fragment {
        Fragment {
            vertices: self.complement.clone(),
            complement: self.vertices.clone(),
            cut: self.cut.clone(),
            graph: self.graph,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum FragmentMode {
    /// Each single component, paired with the union of the others.
    #[default]
    Components,
    /// All `2^c - 2` unions of a nonempty proper subset of the components.
    Exhaustive,
}

pub fn fragments_of(g: &Graph, t: &CutRecord, mode: FragmentMode) -> Vec<Fragment> {
    let id = graph_fingerprint(g);
    let n = g.order();
    let rest = g.vertex_set().difference(&t.cut);
    let make = |vertices: VertexSet| Fragment {
        complement: rest.difference(&vertices),
        vertices,
        cut: t.cut.clone(),
        graph: id,
    };
    let c = t.components.len();
    match mode {
        FragmentMode::Components => t.components.iter().cloned().map(make).collect(),
        FragmentMode::Exhaustive => {
            assert!(c < 64, "too many components for exhaustive fragments");
            (1u64..(1 << c) - 1)
                .map(|mask| {
                    let mut f = VertexSet::new(n);
                    for (i, comp) in t.components.iter().enumerate() {
                        if mask >> i & 1 == 1 {
                            f.union_with(comp);
                        }
                    }
                    make(f)
                })
                .collect()
        }
    }
}

/// `F ∩ F' = ∅` or `|F ∩ T'| >= |F̄' ∩ T|`, for fragments of smallest cuts
/// of the same graph.
pub fn lemma5_check(f: &Fragment, fp: &Fragment) -> Result<bool> {
    if f.graph != fp.graph {
        return Err(Error::ForeignFragment);
    }
    if f.vertices.is_disjoint(&fp.vertices) {
        return Ok(true);
    }
    Ok(f.vertices.intersection_len(&fp.cut) >= fp.complement.intersection_len(&f.cut))
}
