//! Orderly generation of 3-connected graphs by canonical vertex augmentation.
//!
//! Graphs are grown one vertex at a time. For a target order `n` the levels
//! below are restricted to classes that are closed under deleting the
//! canonical vertex: any graph up to `n - 3` vertices, connected graphs at
//! `n - 2`, 2-connected graphs at `n - 1`, 3-connected graphs at `n`.
//!
//! The canonical deletion vertex of a graph is the vertex of largest
//! `(degree, multiset of neighbor degrees)` key that comes first in the
//! canonical labeling. A child built from parent `P` by adding `v` is kept
//! iff `G - m ≅ P` for its canonical deletion vertex `m`, so every
//! isomorphism class has exactly one parent class; duplicates from the same
//! parent are removed by canonical form.

use std::collections::HashSet;

use rayon::prelude::*;
use rayon::ThreadPoolBuilder;

use crate::canon::{canonical_graph, canonical_labeling};
use crate::error::{Error, Result};
use crate::graph::{reach64, BitIter, Graph};
use crate::vset::VertexSet;

pub const MIN_ORDER: usize = 4;
pub const MAX_ORDER: usize = 12;

/// Minimum parents per work unit of the parallel final level.
const CHUNK: usize = 32;
const MAX_PARTIALS: usize = 4096;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Class {
    Any,
    Connected,
    Biconnected,
    Triconnected,
}

impl Class {
    fn at_level(k: usize, target: usize) -> Class {
        match target - k {
            0 => Class::Triconnected,
            1 => Class::Biconnected,
            2 => Class::Connected,
            _ => Class::Any,
        }
    }

    fn min_degree(self) -> u32 {
        match self {
            Class::Any => 0,
            Class::Connected => 1,
            Class::Biconnected => 2,
            Class::Triconnected => 3,
        }
    }
}

/// Generator for the 3-connected graphs of one order.
#[derive(Debug, Clone)]
pub struct Generator {
    n: usize,
    threads: Option<usize>,
}

impl Generator {
    pub fn new(n: usize) -> Result<Self> {
        if !(MIN_ORDER..=MAX_ORDER).contains(&n) {
            return Err(Error::OrderOutOfRange { n, min: MIN_ORDER, max: MAX_ORDER });
        }
        Ok(Generator { n, threads: None })
    }

    /// Worker count; `None` uses rayon's global pool.
    pub fn threads(mut self, threads: Option<usize>) -> Self {
        self.threads = threads.filter(|&t| t > 0);
        self
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// The 2-connected graphs on `n - 1` vertices, canonical, in generation order.
    fn parents(&self) -> Vec<Graph> {
        let mut level = vec![Graph::empty(1)];
        for k in 2..self.n {
            let class = Class::at_level(k, self.n);
            let next: Vec<Vec<Graph>> = level.par_iter().map(|p| children(p, class)).collect();
            level = next.into_iter().flatten().collect();
        }
        level
    }

    /// Lazily yields every 3-connected graph on `n` vertices once, in
    /// canonical form, sequentially.
    pub fn iter(&self) -> impl Iterator<Item = Graph> {
        let parents = self.in_pool(|| self.parents());
        parents.into_iter().flat_map(|p| children(&p, Class::Triconnected))
    }

    /// Parallel fold over every generated graph. Work is split into fixed
    /// chunks of parents and the partial results are merged in chunk order,
    /// so the outcome does not depend on the number of threads.
    pub fn fold<A, I, S, M>(&self, init: I, step: S, mut merge: M) -> A
    where
        A: Send,
        I: Fn() -> A + Sync + Send,
        S: Fn(&mut A, Graph) + Sync + Send,
        M: FnMut(&mut A, A),
    {
        let partials: Vec<A> = self.in_pool(|| {
            let parents = self.parents();
            // Fixed by the parent count alone, so partials never depend on the pool.
            let chunk = (parents.len() / MAX_PARTIALS).max(CHUNK);
            parents
                .par_chunks(chunk)
                .map(|chunk| {
                    let mut acc = init();
                    for p in chunk {
                        for g in children(p, Class::Triconnected) {
                            step(&mut acc, g);
                        }
                    }
                    acc
                })
                .collect()
        });
        let mut total = init();
        for part in partials {
            merge(&mut total, part);
        }
        total
    }

    pub fn count(&self) -> usize {
        self.fold(|| 0usize, |c, _| *c += 1, |a, b| *a += b)
    }

    pub fn collect(&self) -> Vec<Graph> {
        self.fold(Vec::new, |v, g| v.push(g), |a, mut b| a.append(&mut b))
    }

    fn in_pool<R: Send>(&self, f: impl FnOnce() -> R + Send) -> R {
        match self.threads {
            Some(t) => match ThreadPoolBuilder::new().num_threads(t).build() {
                Ok(pool) => pool.install(f),
                Err(_) => f(),
            },
            None => f(),
        }
    }
}

/// Every 3-connected graph on `n` vertices up to isomorphism, canonical.
pub fn generate_3connected(n: usize) -> Result<Vec<Graph>> {
    Ok(Generator::new(n)?.collect())
}

/// Per-vertex deletion key: degree, then the multiset of neighbor degrees
/// packed as 4-bit counters.
fn keys(rows: &[u64], deg: &[u32]) -> Vec<u128> {
    rows.iter()
        .zip(deg)
        .map(|(&r, &d)| {
            let spread: u64 = BitIter(r).map(|u| 1u64 << (4 * deg[u])).sum();
            (u128::from(d) << 64) | u128::from(spread)
        })
        .collect()
}

fn in_class(rows: &[u64], class: Class) -> bool {
    let n = rows.len();
    let full = (1u64 << n) - 1;
    let row = |v: usize| rows[v];
    match class {
        Class::Any => true,
        Class::Connected => reach64(row, full) == full,
        Class::Biconnected => {
            n >= 3
                && (0..n).all(|a| {
                    let alive = full & !(1 << a);
                    reach64(row, alive) == alive
                })
        }
        Class::Triconnected => {
            n >= 4
                && (0..n).all(|a| {
                    (a + 1..n).all(|b| {
                        let alive = full & !(1 << a) & !(1 << b);
                        reach64(row, alive) == alive
                    })
                })
        }
    }
}

/// Accepted one-vertex extensions of the canonical graph `parent` lying in
/// `class`, each once, canonical.
fn children(parent: &Graph, class: Class) -> Vec<Graph> {
    let k = parent.order();
    let n = k + 1;
    let need = class.min_degree();
    let prows: Vec<u64> = (0..k).map(|v| parent.row64(v)).collect();
    let pdeg: Vec<u32> = prows.iter().map(|r| r.count_ones()).collect();
    if pdeg.iter().any(|&d| d + 1 < need) {
        return Vec::new();
    }
    let forced = (0..k).filter(|&w| pdeg[w] < need).fold(0u64, |m, w| m | 1 << w);

    let mut decided: HashSet<Graph> = HashSet::new();
    let mut out = Vec::new();
    let mut rows = vec![0u64; n];
    let mut deg = vec![0u32; n];
    for x in 0u64..(1u64 << k) {
        if x & forced != forced {
            continue;
        }
        let size = x.count_ones();
        if size < need {
            continue;
        }
        // The new vertex must reach the maximum degree.
        if (0..k).any(|w| pdeg[w] + (x >> w & 1) as u32 > size) {
            continue;
        }
        for w in 0..k {
            rows[w] = prows[w] | (x >> w & 1) << k;
            deg[w] = pdeg[w] + (x >> w & 1) as u32;
        }
        rows[k] = x;
        deg[k] = size;
        let key = keys(&rows, &deg);
        let top = key[k];
        if key.iter().any(|&q| q > top) {
            continue;
        }
        if !in_class(&rows, class) {
            continue;
        }
        let ties = key.iter().filter(|&&q| q == top).count();
        let g = Graph::from_raw(n, 1, rows.clone());
        let labeling = canonical_labeling(&g);
        if decided.contains(&labeling.graph) {
            continue;
        }
        let accept = ties == 1 || {
            let m = *labeling.lab.iter().find(|&&w| key[w] == top).expect("a maximal vertex");
            m == k || labeling.orbits().iter().any(|o| o.contains(&m) && o.contains(&k)) || {
                let drop = VertexSet::from_iter_with(n, [m]);
                canonical_graph(&g.delete(&drop).0) == *parent
            }
        };
        decided.insert(labeling.graph.clone());
        if accept {
            out.push(labeling.graph);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::connectivity::is_k_connected;

    #[test]
    fn known_counts() {
        let counts: Vec<usize> = (4..=7).map(|n| Generator::new(n).unwrap().count()).collect();
        assert_eq!(counts, vec![1, 3, 17, 136]);
    }

    #[test]
    fn order_limits() {
        assert!(matches!(Generator::new(3), Err(Error::OrderOutOfRange { .. })));
        assert!(Generator::new(13).is_err());
        assert!(generate_3connected(4).unwrap()[0].is_complete());
    }

    #[test]
    fn output_is_canonical_and_three_connected() {
        for g in generate_3connected(6).unwrap() {
            assert!(is_k_connected(&g, 3));
            assert!(g.min_degree() >= 3);
            assert_eq!(canonical_graph(&g), g);
        }
    }

    #[test]
    fn thread_count_does_not_change_order() {
        let one = Generator::new(7).unwrap().threads(Some(1)).collect();
        let two = Generator::new(7).unwrap().threads(Some(2)).collect();
        assert_eq!(one, two);
        assert_eq!(Generator::new(7).unwrap().iter().collect::<Vec<_>>(), one);
    }
}
