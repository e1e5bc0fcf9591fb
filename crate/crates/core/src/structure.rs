//! Minimum-order 3-fans into a 3-cut, the semi-wheel / semi-prism shapes they
//! reduce to, and recognizers for the named families.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::connectivity::{for_each_combination, is_k_connected};
use crate::error::{Error, Result};
use crate::flow::{vin, vout, Network};
use crate::graph::{make_named, Graph, NamedFamily};
use crate::vset::VertexSet;

/// Three paths from `apex` to distinct cut vertices, sharing only the apex.
/// `paths[i]` runs from the apex to `targets[i]`, both ends included, and
/// targets are ascending.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Fan {
    pub apex: usize,
    pub targets: [usize; 3],
    pub paths: [Vec<usize>; 3],
}

impl Fan {
    /// |V(F)|.
    pub fn order(&self) -> usize {
        1 + self.paths.iter().map(|p| p.len() - 1).sum::<usize>()
    }

    pub fn edge_count(&self) -> usize {
        self.paths.iter().map(|p| p.len() - 1).sum()
    }

    pub fn vertices(&self, n: usize) -> VertexSet {
        VertexSet::from_iter_with(n, self.paths.iter().flatten().copied())
    }
}

fn three(s: &VertexSet) -> Result<[usize; 3]> {
    let v = s.to_vec();
    v.try_into().map_err(|v: Vec<usize>| Error::InvalidFamily(format!("cut must have 3 vertices, got {}", v.len())))
}

/// Fan network for apex `c`: only vertices of `inside` may be interior, each
/// costing 1; cut vertices are terminals wired to a single sink.
fn fan_network(g: &Graph, c: usize, s: &[usize; 3], inside: &VertexSet) -> (Network, usize) {
    let mut net = Network::with_nodes(2 * g.order());
    let sink = net.add_node();
    for w in inside.iter() {
        if w != c {
            net.add_arc(vin(w), vout(w), 1, 1);
        }
    }
    for &t in s {
        net.add_arc(vin(t), sink, 1, 0);
    }
    for x in inside.iter() {
        for y in g.neighbor_iter(x) {
            if y != c && (inside.contains(y) || s.contains(&y)) {
                net.add_arc(vout(x), vin(y), 1, 0);
            }
        }
    }
    (net, sink)
}

fn check_fan_input(g: &Graph, c: usize, s: &VertexSet, comp: &VertexSet) -> Result<[usize; 3]> {
    g.check_vertex(c)?;
    let st = three(s)?;
    for &t in &st {
        g.check_vertex(t)?;
    }
    if !comp.contains(c) || !comp.is_disjoint(s) {
        return Err(Error::NoFan { apex: c });
    }
    Ok(st)
}

/// Minimum number of interior vertices over all 3-fans from `c` to `s` whose
/// interior lies in `comp`, via unit-capacity min-cost flow.
pub fn min_fan_interior(g: &Graph, c: usize, s: &VertexSet, comp: &VertexSet) -> Result<usize> {
    let st = check_fan_input(g, c, s, comp)?;
    let (mut net, sink) = fan_network(g, c, &st, comp);
    net.min_cost_flow(vout(c), sink, 3).map(|cost| cost as usize).ok_or(Error::NoFan { apex: c })
}

/// A 3-fan of minimum order from `c` to the 3-cut `s` inside `G[comp ∪ s]`.
/// Ties go to the lexicographically smallest vertex set, then to the
/// lexicographically smallest path triple.
pub fn min_fan_from(g: &Graph, c: usize, s: &VertexSet, comp: &VertexSet) -> Result<Fan> {
    let st = check_fan_input(g, c, s, comp)?;
    let interior = min_fan_interior(g, c, s, comp)?;
    let pool: Vec<usize> = comp.iter().filter(|&w| w != c).collect();
    let mut chosen = None;
    let mut stop = false;
    for_each_combination(pool.len(), interior, |idx| {
        if stop {
            return;
        }
        let mut inside = VertexSet::new(g.order());
        inside.insert(c);
        for &i in idx {
            inside.insert(pool[i]);
        }
        let (mut net, sink) = fan_network(g, c, &st, &inside);
        if net.max_flow(vout(c), sink, 3) == 3 {
            chosen = Some(inside);
            stop = true;
        }
    });
    let inside = chosen.ok_or(Error::NoFan { apex: c })?;
    let mut search =
        PathSearch { g, inside: &inside, targets: st, used: VertexSet::new(g.order()), paths: Default::default() };
    search.used.insert(c);
    if !search.extend(0, c) {
        return Err(Error::NoFan { apex: c });
    }
    Ok(Fan { apex: c, targets: st, paths: search.paths })
}

/// Depth-first search over path triples in lexicographic order, requiring
/// every vertex of `inside` to be used.
struct PathSearch<'a> {
    g: &'a Graph,
    inside: &'a VertexSet,
    targets: [usize; 3],
    used: VertexSet,
    paths: [Vec<usize>; 3],
}

impl PathSearch<'_> {
    fn extend(&mut self, which: usize, apex: usize) -> bool {
        if which == 3 {
            return self.inside.is_subset(&self.used);
        }
        self.paths[which] = vec![apex];
        self.walk(which, apex)
    }

    fn walk(&mut self, which: usize, at: usize) -> bool {
        let target = self.targets[which];
        let apex = self.paths[which][0];
        let next: Vec<usize> = self.g.neighbor_iter(at).collect();
        for y in next {
            if y == target {
                self.paths[which].push(y);
                if self.extend(which + 1, apex) {
                    return true;
                }
                self.paths[which].pop();
            } else if self.inside.contains(y) && !self.used.contains(y) {
                self.used.insert(y);
                self.paths[which].push(y);
                if self.walk(which, y) {
                    return true;
                }
                self.paths[which].pop();
                self.used.remove(y);
            }
        }
        false
    }
}

/// The minimum-order fan over every apex in `comp`; ties go to the smallest apex.
pub fn minimum_fan(g: &Graph, s: &VertexSet, comp: &VertexSet) -> Result<(Fan, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for c in comp.iter() {
        let k = min_fan_interior(g, c, s, comp)?;
        if best.is_none_or(|(b, _)| k < b) {
            best = Some((k, c));
        }
    }
    let (_, apex) = best.ok_or(Error::NoFan { apex: usize::MAX })?;
    Ok((min_fan_from(g, apex, s, comp)?, apex))
}

/// Order of a minimum fan into `s` from `comp`, without tie-breaking work.
pub fn minimum_fan_order(g: &Graph, s: &VertexSet, comp: &VertexSet) -> Result<usize> {
    let mut best = usize::MAX;
    for c in comp.iter() {
        best = best.min(min_fan_interior(g, c, s, comp)?);
    }
    if best == usize::MAX {
        return Err(Error::NoFan { apex: usize::MAX });
    }
    Ok(4 + best)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "camelCase")]
pub enum StructureKind {
    /// `path` lists `x_1, ..., x_{k-1}`; `center` is `x_0`.
    #[serde(rename_all = "camelCase")]
    SemiWheel {
        order: usize,
        center: usize,
        path: Vec<usize>,
    },
    /// `(triangle vertex, boundary vertex)` pairs, by boundary vertex.
    SemiPrism {
        mapping: [(usize, usize); 3],
    },
    None,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StructureReport {
    #[serde(flatten)]
    pub kind: StructureKind,
    pub boundary: VertexSet,
}

/// `F' = G[V(F)]` minus the edges inside `s`, recognized as a semi-wheel or
/// a semi-prism with boundary `s`. The fan must span its component and `s`.
pub fn reduced_structure(g: &Graph, fan: &Fan, s: &VertexSet) -> Result<StructureReport> {
    let st = three(s)?;
    let n = g.order();
    let rest = g.vertex_set().difference(s);
    let comp = g.components_within(&rest).into_iter().find(|c| c.contains(fan.apex)).ok_or(Error::FanNotSpanning)?;
    let verts = fan.vertices(n);
    if verts != comp.union(s) {
        return Err(Error::FanNotSpanning);
    }
    Ok(StructureReport { kind: recognize_reduced(g, &comp, &st), boundary: s.clone() })
}

/// Shape of `G[comp ∪ s] - E(G[s])`.
pub fn recognize_reduced(g: &Graph, comp: &VertexSet, s: &[usize; 3]) -> StructureKind {
    let reduced = ReducedView { g, comp, s };
    if let Some(k) = reduced.semi_wheel() {
        return k;
    }
    if let Some(k) = reduced.semi_prism() {
        return k;
    }
    if comp.len() + 3 <= 6 {
        return reduced.by_isomorphism();
    }
    StructureKind::None
}

struct ReducedView<'a> {
    g: &'a Graph,
    comp: &'a VertexSet,
    s: &'a [usize; 3],
}

impl ReducedView<'_> {
    fn adjacent(&self, a: usize, b: usize) -> bool {
        !(self.s.contains(&a) && self.s.contains(&b)) && self.g.has_edge(a, b)
    }

    fn verts(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.comp.iter().chain(self.s.iter().copied()).collect();
        v.sort_unstable();
        v
    }

    fn inner_neighbors(&self, x: usize) -> Vec<usize> {
        self.g.neighbor_iter(x).filter(|&y| self.comp.contains(y)).collect()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        let vs = self.verts();
        let mut out = Vec::new();
        for (i, &a) in vs.iter().enumerate() {
            for &b in &vs[i + 1..] {
                if self.adjacent(a, b) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// True when the reduced graph equals `model` under `map` (model vertex -> host vertex).
    fn matches(&self, model: &Graph, map: &[usize]) -> bool {
        let mut expect: Vec<(usize, usize)> =
            model.edges().into_iter().map(|(a, b)| (map[a].min(map[b]), map[a].max(map[b]))).collect();
        expect.sort_unstable();
        expect == self.edges()
    }

    fn semi_wheel(&self) -> Option<StructureKind> {
        let inner: Vec<usize> = self.comp.to_vec();
        let m = inner.len();
        let k = m + 3;
        for &center in self.s {
            let ends: Vec<usize> = self.s.iter().copied().filter(|&t| t != center).collect();
            let (p, q) = (ends[0], ends[1]);
            let (np, nq) = (self.inner_neighbors(p), self.inner_neighbors(q));
            if np.len() != 1 || nq.len() != 1 {
                continue;
            }
            let Some(mid) = self.hamiltonian_path(np[0], nq[0]) else {
                continue;
            };
            let mut path = vec![p];
            path.extend(mid);
            path.push(q);
            let mut map = vec![center];
            map.extend(path.iter().copied());
            if self.matches(&make_named(NamedFamily::SemiWheel(k)).ok()?, &map) {
                return Some(StructureKind::SemiWheel { order: k, center, path });
            }
        }
        None
    }

    /// Walk the path `G[comp]` must be, from `a` to `b`.
    fn hamiltonian_path(&self, a: usize, b: usize) -> Option<Vec<usize>> {
        let m = self.comp.len();
        let mut path = vec![a];
        let mut seen = VertexSet::new(self.g.order());
        seen.insert(a);
        while path.len() < m {
            let at = *path.last()?;
            let next: Vec<usize> = self.inner_neighbors(at).into_iter().filter(|&y| !seen.contains(y)).collect();
            if next.len() != 1 {
                return None;
            }
            seen.insert(next[0]);
            path.push(next[0]);
        }
        (*path.last()? == b).then_some(path)
    }

    fn semi_prism(&self) -> Option<StructureKind> {
        if self.comp.len() != 3 {
            return None;
        }
        let mut mapping = [(0, 0); 3];
        for (i, &t) in self.s.iter().enumerate() {
            let nb = self.inner_neighbors(t);
            if nb.len() != 1 {
                return None;
            }
            mapping[i] = (nb[0], t);
        }
        let map = [mapping[0].0, mapping[1].0, mapping[2].0, mapping[0].1, mapping[1].1, mapping[2].1];
        let model = make_named(NamedFamily::SemiPrism).ok()?;
        self.matches(&model, &map).then_some(StructureKind::SemiPrism { mapping })
    }

    /// Exhaustive boundary-respecting isomorphism search, for tiny orders.
    fn by_isomorphism(&self) -> StructureKind {
        let vs = self.verts();
        let k = vs.len();
        let inner: Vec<usize> = self.comp.to_vec();
        let mut candidates = Vec::new();
        if k >= 4 {
            candidates.push((true, make_named(NamedFamily::SemiWheel(k)).expect("k >= 4"), vec![0, 1, k - 1]));
        }
        if k == 6 {
            candidates.push((false, make_named(NamedFamily::SemiPrism).expect("fixed"), vec![3, 4, 5]));
        }
        for (wheel, model, boundary) in candidates {
            let interior: Vec<usize> = (0..k).filter(|i| !boundary.contains(i)).collect();
            let mut found = None;
            permutations(3, &mut |bp| {
                permutations(inner.len(), &mut |ip| {
                    let mut map = vec![0; k];
                    for (j, &b) in boundary.iter().enumerate() {
                        map[b] = self.s[bp[j]];
                    }
                    for (j, &x) in interior.iter().enumerate() {
                        map[x] = inner[ip[j]];
                    }
                    if found.is_none() && self.matches(&model, &map) {
                        found = Some(map);
                    }
                });
            });
            if let Some(map) = found {
                return if wheel {
                    StructureKind::SemiWheel { order: k, center: map[0], path: map[1..].to_vec() }
                } else {
                    StructureKind::SemiPrism { mapping: [(map[0], map[3]), (map[1], map[4]), (map[2], map[5])] }
                };
            }
        }
        StructureKind::None
    }
}

fn permutations(n: usize, f: &mut impl FnMut(&[usize])) {
    fn rec(p: &mut Vec<usize>, used: &mut Vec<bool>, n: usize, f: &mut impl FnMut(&[usize])) {
        if p.len() == n {
            f(p);
            return;
        }
        for i in 0..n {
            if !used[i] {
                used[i] = true;
                p.push(i);
                rec(p, used, n, f);
                p.pop();
                used[i] = false;
            }
        }
    }
    rec(&mut Vec::new(), &mut vec![false; n], n, f);
}

/// `G[h]` is 2-connected and `u`, `v` fall in different components of `G - h`.
/// When true, `{u, v}` is a contractible non-edge of any 3-connected `G`.
pub fn lemma1_witness(g: &Graph, h: &VertexSet, u: usize, v: usize) -> Result<bool> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    for x in [u, v] {
        if h.contains(x) {
            return Err(Error::VertexInSubgraph(x));
        }
    }
    let (sub, _) = g.subgraph(h);
    if !sub.is_biconnected() {
        return Ok(false);
    }
    let rest = g.vertex_set().difference(h);
    let comps = g.components_within(&rest);
    Ok(comps.iter().any(|c| c.contains(u) != c.contains(v)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyTag {
    Complete,
    CompleteMinusEdge,
    Wheel(usize),
    FourConnected,
    Other,
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyTag::Complete => write!(f, "complete"),
            FamilyTag::CompleteMinusEdge => write!(f, "complete-minus-edge"),
            FamilyTag::Wheel(n) => write!(f, "wheel({n})"),
            FamilyTag::FourConnected => write!(f, "four-connected"),
            FamilyTag::Other => write!(f, "other"),
        }
    }
}

impl Serialize for FamilyTag {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Wheels `W_n` for `n >= 5`: a unique vertex of degree `n - 1` whose removal
/// leaves a cycle. (`W_4` is `K_4` and is reported as complete.)
pub fn is_wheel(g: &Graph) -> bool {
    let n = g.order();
    if n < 5 {
        return false;
    }
    let hubs: Vec<usize> = (0..n).filter(|&v| g.degree(v) == n - 1).collect();
    if hubs.len() != 1 {
        return false;
    }
    let mut drop = VertexSet::new(n);
    drop.insert(hubs[0]);
    let (rim, _) = g.delete(&drop);
    rim.is_connected() && (0..rim.order()).all(|v| rim.degree(v) == 2)
}

pub fn is_complete_minus_edge(g: &Graph) -> bool {
    let n = g.order();
    if n < 2 || g.size() + 1 != n * (n - 1) / 2 {
        return false;
    }
    let deficient: Vec<usize> = (0..n).filter(|&v| g.degree(v) == n - 2).collect();
    deficient.len() == 2 && !g.has_edge(deficient[0], deficient[1])
}

pub fn recognize_family(g: &Graph) -> Vec<FamilyTag> {
    let mut tags = Vec::new();
    if g.order() > 0 && g.is_complete() {
        tags.push(FamilyTag::Complete);
    }
    if is_complete_minus_edge(g) {
        tags.push(FamilyTag::CompleteMinusEdge);
    }
    if is_wheel(g) {
        tags.push(FamilyTag::Wheel(g.order()));
    }
    if is_k_connected(g, 4) {
        tags.push(FamilyTag::FourConnected);
    }
    tags
}

/// Whether `G[V(F)]` spans `comp ∪ s`, i.e. a minimum fan uses every vertex.
pub fn is_spanning(order: usize, comp: &VertexSet) -> bool {
    order == comp.len() + 3
}
