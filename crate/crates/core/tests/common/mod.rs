//! Slow, independent reference implementations used as test oracles. None of
//! these call into the library beyond building `Graph` values.

#![allow(dead_code)]

use contracta::Graph;
use rand::seq::SliceRandom;
use rand::Rng;

/// Adjacency rows as bitmasks, read edge by edge.
pub fn rows(g: &Graph) -> Vec<u64> {
    let mut r = vec![0u64; g.order()];
    for (u, v) in g.edges() {
        r[u] |= 1 << v;
        r[v] |= 1 << u;
    }
    r
}

/// Whether the vertices in `alive` induce a connected graph (empty counts as connected).
pub fn connected_within(rows: &[u64], alive: u64) -> bool {
    if alive == 0 {
        return true;
    }
    let start = alive.trailing_zeros() as usize;
    let mut seen = 1u64 << start;
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        let mut fresh = rows[v] & alive & !seen;
        seen |= fresh;
        while fresh != 0 {
            let w = fresh.trailing_zeros() as usize;
            fresh &= fresh - 1;
            stack.push(w);
        }
    }
    seen == alive
}

fn subsets_of_size(n: usize, k: usize) -> impl Iterator<Item = u64> {
    (0u64..1 << n).filter(move |m| m.count_ones() as usize == k)
}

/// κ by trying every vertex subset in order of size.
pub fn brute_kappa_rows(rows: &[u64]) -> usize {
    let n = rows.len();
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    for k in 0..n.saturating_sub(1) {
        if subsets_of_size(n, k).any(|s| !connected_within(rows, full & !s)) {
            return k;
        }
    }
    n.saturating_sub(1)
}

pub fn brute_kappa(g: &Graph) -> usize {
    brute_kappa_rows(&rows(g))
}

/// `G` stays connected after removing any `k - 1` vertices and has more than `k` vertices.
pub fn brute_k_connected_rows(rows: &[u64], k: usize) -> bool {
    let n = rows.len();
    if n <= k {
        return false;
    }
    let full = (1u64 << n) - 1;
    (0..k).all(|j| subsets_of_size(n, j).all(|s| connected_within(rows, full & !s)))
}

/// Merges `u` and `v` by hand and applies the 3-connectivity definition.
pub fn brute_contractible(g: &Graph, u: usize, v: usize) -> bool {
    let n = g.order();
    let keep: Vec<usize> = (0..n).filter(|&w| w != u && w != v).collect();
    let merged = keep.len();
    let index = |w: usize| {
        if w == u || w == v {
            merged
        } else {
            keep.iter().position(|&x| x == w).unwrap()
        }
    };
    let mut edges = Vec::new();
    for (a, b) in g.edges() {
        let (x, y) = (index(a), index(b));
        if x != y {
            edges.push((x, y));
        }
    }
    let h = Graph::from_edges(n - 1, &edges).unwrap();
    brute_k_connected_rows(&rows(&h), 3)
}

/// Every permutation of `0..n`, in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    loop {
        out.push(p.clone());
        let Some(i) = (1..n).rev().find(|&i| p[i - 1] < p[i]) else {
            break;
        };
        let j = (i..n).rev().find(|&j| p[j] > p[i - 1]).unwrap();
        p.swap(i - 1, j);
        p[i..].reverse();
    }
    out
}

fn maps_onto(a: &[u64], b: &[u64], perm: &[usize]) -> bool {
    a.iter().enumerate().all(|(u, &row)| {
        let mut img = 0u64;
        let mut r = row;
        while r != 0 {
            let w = r.trailing_zeros() as usize;
            r &= r - 1;
            img |= 1 << perm[w];
        }
        img == b[perm[u]]
    })
}

/// Isomorphism by trying every bijection.
pub fn brute_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.order() != h.order() || g.size() != h.size() {
        return false;
    }
    let (a, b) = (rows(g), rows(h));
    permutations(g.order()).iter().any(|p| maps_onto(&a, &b, p))
}

pub fn automorphism_count(g: &Graph) -> usize {
    let a = rows(g);
    permutations(g.order()).iter().filter(|p| maps_onto(&a, &a, p)).count()
}

/// Lexicographically smallest adjacency string over all relabelings.
pub fn brute_certificate(g: &Graph, perms: &[Vec<usize>]) -> Vec<u64> {
    let a = rows(g);
    let n = g.order();
    perms
        .iter()
        .map(|p| {
            let mut r = vec![0u64; n];
            for (u, &row) in a.iter().enumerate() {
                let mut bits = row;
                while bits != 0 {
                    let w = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    r[p[u]] |= 1 << p[w];
                }
            }
            r
        })
        .min()
        .unwrap()
}

/// One representative per isomorphism class of 3-connected graphs on `n`
/// vertices: scan every labeled edge set, and on meeting an unseen
/// 3-connected one, mark all of its relabelings as seen.
pub fn three_connected_classes(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let index = |u: usize, v: usize| pairs.iter().position(|&p| p == (u.min(v), u.max(v))).unwrap();
    let perms = permutations(n);
    // Edge slot `i` moves to slot `moved[p][i]` under permutation `p`.
    let moved: Vec<Vec<usize>> =
        perms.iter().map(|p| pairs.iter().map(|&(u, v)| index(p[u], p[v])).collect()).collect();
    let mut seen = vec![false; 1 << pairs.len()];
    let mut out = Vec::new();
    let mut r = vec![0u64; n];
    for mask in 0usize..1 << pairs.len() {
        if seen[mask] {
            continue;
        }
        r.iter_mut().for_each(|x| *x = 0);
        for (i, &(u, v)) in pairs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                r[u] |= 1 << v;
                r[v] |= 1 << u;
            }
        }
        if r.iter().any(|x| x.count_ones() < 3) || !brute_k_connected_rows(&r, 3) {
            continue;
        }
        for m in &moved {
            let image = (0..pairs.len()).filter(|&i| mask >> i & 1 == 1).fold(0usize, |acc, i| acc | 1 << m[i]);
            seen[image] = true;
        }
        out.push(graph_from_rows(&r));
    }
    out
}

pub fn graph_from_rows(rows: &[u64]) -> Graph {
    let n = rows.len();
    let edges: Vec<(usize, usize)> =
        (0..n).flat_map(|u| (u + 1..n).filter(move |&v| rows[u] >> v & 1 == 1).map(move |v| (u, v))).collect();
    Graph::from_edges(n, &edges).unwrap()
}

/// Fewest vertices of a 3-fan from `apex` to three distinct members of
/// `cut`, with interior in `comp`, by exhaustive path search.
pub fn brute_min_fan_order(g: &Graph, apex: usize, cut: &[usize], comp: &[usize]) -> Option<usize> {
    let r = rows(g);
    let comp_mask = comp.iter().fold(0u64, |m, &v| m | 1 << v);
    let mut targets = cut.to_vec();
    targets.sort_unstable();
    let mut best = None;
    let mut used = 1u64 << apex;
    fan_search(&r, apex, &targets, comp_mask, 0, apex, &mut used, 1, &mut best);
    best
}

#[allow(clippy::too_many_arguments)]
fn fan_search(
    r: &[u64],
    apex: usize,
    targets: &[usize],
    inside: u64,
    which: usize,
    at: usize,
    used: &mut u64,
    count: usize,
    best: &mut Option<usize>,
) {
    if which == 3 {
        if best.is_none_or(|b| count < b) {
            *best = Some(count);
        }
        return;
    }
    let t = targets[which];
    if r[at] >> t & 1 == 1 {
        fan_search(r, apex, targets, inside, which + 1, apex, used, count + 1, best);
    }
    let mut next = r[at] & inside & !*used;
    while next != 0 {
        let w = next.trailing_zeros() as usize;
        next &= next - 1;
        *used |= 1 << w;
        fan_search(r, apex, targets, inside, which, w, used, count + 1, best);
        *used &= !(1 << w);
    }
}

pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

pub fn random_permutation(rng: &mut impl Rng, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

/// Reference sparse6 encoder following the published format description.
pub fn encode_sparse6(g: &Graph) -> Vec<u8> {
    let n = g.order();
    let mut k = 1;
    while 1usize << k < n {
        k += 1;
    }
    let mut bits: Vec<u8> = Vec::new();
    let push = |bits: &mut Vec<u8>, x: usize| bits.extend((0..k).map(|i| (x >> (k - 1 - i) & 1) as u8));
    let mut edges: Vec<(usize, usize)> = g.edges().into_iter().map(|(u, v)| (u.max(v), u.min(v))).collect();
    edges.sort_unstable();
    let mut cur = 0;
    for (v, u) in edges {
        if v == cur {
            bits.push(0);
            push(&mut bits, u);
        } else if v == cur + 1 {
            cur = v;
            bits.push(1);
            push(&mut bits, u);
        } else {
            cur = v;
            bits.push(1);
            push(&mut bits, v);
            bits.push(0);
            push(&mut bits, u);
        }
    }
    let pad = (6 - bits.len() % 6) % 6;
    if k < 6 && n == 1 << k && pad >= k && cur + 1 < n {
        bits.push(0);
    }
    while !bits.len().is_multiple_of(6) {
        bits.push(1);
    }
    let mut out = vec![b':'];
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.extend([126, (n >> 12) as u8 + 63, (n >> 6 & 63) as u8 + 63, (n & 63) as u8 + 63]);
    } else {
        out.extend([126, 126]);
        out.extend((0..6).rev().map(|i| (n >> (6 * i) & 63) as u8 + 63));
    }
    out.extend(bits.chunks(6).map(|c| c.iter().fold(0u8, |a, &b| a << 1 | b) + 63));
    out
}
