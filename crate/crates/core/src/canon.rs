//! Canonical labeling by individualization and refinement.
//!
//! Ordered partitions of the vertex set are refined to equitable ones; the
//! search tree individualizes vertices of the first smallest non-singleton
//! cell. Each discrete leaf yields a relabeled adjacency matrix and the
//! largest one is the canonical form. Leaves equal to the first or best leaf
//! give automorphisms, which prune sibling subtrees (orbits of the
//! automorphisms fixing the current path) and, for the first leaf, let the
//! search jump straight back to the divergence point.

use std::collections::VecDeque;

use crate::graph::{BitIter, Graph};
use crate::graph6::emit_graph6;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalLabel {
    /// graph6 of the canonically relabeled graph.
    pub bytes: Vec<u8>,
    /// Automorphism orbits, each sorted, ordered by smallest vertex.
    pub orbits: Vec<Vec<usize>>,
}

/// Result of a canonical search: `lab[i]` is the original vertex placed at
/// canonical position `i`.
#[derive(Debug, Clone)]
pub struct Labeling {
    pub lab: Vec<usize>,
    pub graph: Graph,
    pub automorphisms: Vec<Vec<usize>>,
}

impl Labeling {
    /// Canonical position of every original vertex.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.lab.len()];
        for (i, &v) in self.lab.iter().enumerate() {
            pos[v] = i;
        }
        pos
    }

    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let n = self.lab.len();
        let mut uf = UnionFind::new(n);
        for a in &self.automorphisms {
            for (v, &w) in a.iter().enumerate() {
                uf.union(v, w);
            }
        }
        let mut groups: Vec<Vec<usize>> = vec![Vec::new(); n];
        for v in 0..n {
            groups[uf.find(v)].push(v);
        }
        let mut out: Vec<Vec<usize>> = groups.into_iter().filter(|g| !g.is_empty()).collect();
        out.sort();
        out
    }
}

pub fn canonical_form(g: &Graph) -> CanonicalLabel {
    let l = canonical_labeling(g);
    CanonicalLabel { bytes: emit_graph6(&l.graph), orbits: l.orbits() }
}

/// The canonically relabeled copy of `g`.
pub fn canonical_graph(g: &Graph) -> Graph {
    canonical_labeling(g).graph
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.order() != h.order() || g.size() != h.size() || g.degree_sequence() != h.degree_sequence() {
        return false;
    }
    canonical_graph(g) == canonical_graph(h)
}

pub fn canonical_labeling(g: &Graph) -> Labeling {
    let n = g.order();
    let stride = g.stride();
    let mut search = Search { g, n, stride, first: None, best: None, autos: Vec::new(), splitter: vec![0; stride] };
    let mut root = Partition::unit(n);
    if n > 0 {
        search.refine(&mut root, vec![0]);
    }
    let mut path = Vec::new();
    search.descend(root, &mut path);
    let (lab, cert) = match search.best {
        Some(Leaf { lab, cert, .. }) => (lab, cert),
        None => (Vec::new(), Vec::new()),
    };
    Labeling { lab, graph: Graph::from_raw(n, stride, cert), automorphisms: search.autos }
}

#[derive(Clone)]
struct Partition {
    lab: Vec<usize>,
    /// Cell length at each cell start; zero elsewhere.
    len: Vec<usize>,
    cells: usize,
}

impl Partition {
    fn unit(n: usize) -> Self {
        let mut len = vec![0; n];
        if n > 0 {
            len[0] = n;
        }
        Partition { lab: (0..n).collect(), len, cells: n.min(1) }
    }

    fn is_discrete(&self) -> bool {
        self.cells == self.lab.len()
    }

    /// First smallest non-singleton cell.
    fn target_cell(&self) -> Option<usize> {
        let mut best: Option<(usize, usize)> = None;
        let mut c = 0;
        while c < self.lab.len() {
            let l = self.len[c];
            if l > 1 && best.is_none_or(|(_, bl)| l < bl) {
                best = Some((c, l));
            }
            c += l;
        }
        best.map(|(c, _)| c)
    }
}

struct Leaf {
    lab: Vec<usize>,
    cert: Vec<u64>,
    path: Vec<usize>,
}

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    stride: usize,
    first: Option<Leaf>,
    best: Option<Leaf>,
    autos: Vec<Vec<usize>>,
    splitter: Vec<u64>,
}

impl Search<'_> {
    #[inline]
    fn count_into(&self, v: usize) -> usize {
        let row = self.g.row(v);
        row.iter().zip(&self.splitter).map(|(a, b)| (a & b).count_ones() as usize).sum()
    }

    /// Refines `p` to the coarsest equitable partition finer than it, using
    /// the cells starting at `active` as initial splitters.
    fn refine(&mut self, p: &mut Partition, active: Vec<usize>) {
        let n = self.n;
        let mut queued = vec![false; n];
        let mut queue = VecDeque::with_capacity(n);
        for c in active {
            queued[c] = true;
            queue.push_back(c);
        }
        let mut keyed: Vec<(usize, usize)> = Vec::with_capacity(n);
        while let Some(w) = queue.pop_front() {
            if p.is_discrete() {
                break;
            }
            queued[w] = false;
            self.splitter.iter_mut().for_each(|x| *x = 0);
            for &v in &p.lab[w..w + p.len[w]] {
                self.splitter[v >> 6] |= 1u64 << (v & 63);
            }
            let mut c = 0;
            while c < n {
                let l = p.len[c];
                if l > 1 {
                    keyed.clear();
                    keyed.extend(p.lab[c..c + l].iter().map(|&v| (self.count_into(v), v)));
                    let k0 = keyed[0].0;
                    if keyed.iter().any(|&(k, _)| k != k0) {
                        keyed.sort_by_key(|&(k, _)| k);
                        let mut starts = vec![c];
                        for i in 0..l {
                            p.lab[c + i] = keyed[i].1;
                            if i > 0 && keyed[i].0 != keyed[i - 1].0 {
                                starts.push(c + i);
                            }
                        }
                        starts.push(c + l);
                        let mut largest = 0;
                        for i in 0..starts.len() - 1 {
                            let (s, e) = (starts[i], starts[i + 1]);
                            p.len[s] = e - s;
                            if e - s > starts[largest + 1] - starts[largest] {
                                largest = i;
                            }
                        }
                        p.cells += starts.len() - 2;
                        let skip = if queued[c] { usize::MAX } else { largest };
                        for (i, &s) in starts[..starts.len() - 1].iter().enumerate() {
                            if i != skip && !queued[s] {
                                queued[s] = true;
                                queue.push_back(s);
                            }
                        }
                    }
                }
                c += l;
            }
        }
    }

    fn certificate(&self, lab: &[usize]) -> Vec<u64> {
        let (n, stride) = (self.n, self.stride);
        let mut pos = vec![0; n];
        for (i, &v) in lab.iter().enumerate() {
            pos[v] = i;
        }
        let mut cert = vec![0u64; n * stride];
        for (i, &v) in lab.iter().enumerate() {
            let out = &mut cert[i * stride..(i + 1) * stride];
            for (k, &word) in self.g.row(v).iter().enumerate() {
                for b in BitIter(word) {
                    let j = pos[k * 64 + b];
                    out[j >> 6] |= 1u64 << (j & 63);
                }
            }
        }
        cert
    }

    fn pruned(&self, v: usize, explored: &[usize], path: &[usize]) -> bool {
        if explored.is_empty() || self.autos.is_empty() {
            return false;
        }
        let mut uf = UnionFind::new(self.n);
        let mut any = false;
        for a in &self.autos {
            if path.iter().all(|&x| a[x] == x) {
                any = true;
                for (x, &y) in a.iter().enumerate() {
                    uf.union(x, y);
                }
            }
        }
        any && explored.iter().any(|&e| uf.find(e) == uf.find(v))
    }

    /// Returns `Some(depth)` to unwind the search to the node at that depth.
    fn descend(&mut self, p: Partition, path: &mut Vec<usize>) -> Option<usize> {
        if p.is_discrete() {
            return self.leaf(p.lab, path);
        }
        let c = p.target_cell().expect("non-discrete partition has a non-singleton cell");
        let mut cell: Vec<usize> = p.lab[c..c + p.len[c]].to_vec();
        cell.sort_unstable();
        let depth = path.len();
        let mut explored = Vec::with_capacity(cell.len());
        for v in cell {
            if self.pruned(v, &explored, path) {
                continue;
            }
            explored.push(v);
            let mut child = p.clone();
            let at = child.lab[c..c + child.len[c]].iter().position(|&x| x == v).expect("v in cell") + c;
            child.lab.swap(c, at);
            let l = child.len[c];
            child.len[c] = 1;
            child.len[c + 1] = l - 1;
            child.cells += 1;
            self.refine(&mut child, vec![c]);
            path.push(v);
            let jump = self.descend(child, path);
            path.pop();
            if let Some(level) = jump {
                if level < depth {
                    return Some(level);
                }
            }
        }
        None
    }

    fn leaf(&mut self, lab: Vec<usize>, path: &[usize]) -> Option<usize> {
        let cert = self.certificate(&lab);
        let Some(first) = &self.first else {
            self.first = Some(Leaf { lab: lab.clone(), cert: cert.clone(), path: path.to_vec() });
            self.best = Some(Leaf { lab, cert, path: path.to_vec() });
            return None;
        };
        if cert == first.cert {
            let auto = mapping(&first.lab, &lab);
            let common = first.path.iter().zip(path).take_while(|(a, b)| a == b).count();
            self.autos.push(auto);
            return Some(common);
        }
        let best = self.best.as_ref().expect("set with first");
        match cert.cmp(&best.cert) {
            std::cmp::Ordering::Greater => {
                self.best = Some(Leaf { lab, cert, path: path.to_vec() });
            }
            std::cmp::Ordering::Equal => {
                let auto = mapping(&best.lab, &lab);
                self.autos.push(auto);
            }
            std::cmp::Ordering::Less => {}
        }
        None
    }
}

/// Permutation sending `from[i]` to `to[i]`.
fn mapping(from: &[usize], to: &[usize]) -> Vec<usize> {
    let mut a = vec![0; from.len()];
    for (&x, &y) in from.iter().zip(to) {
        a[x] = y;
    }
    a
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
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
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }
}
