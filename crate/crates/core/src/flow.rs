//! Residual networks over the split digraph of a graph.
//!
//! Every vertex `v` becomes `in(v) = 2v` and `out(v) = 2v + 1` joined by a
//! unit arc; every edge `uv` becomes `out(u) -> in(v)` and `out(v) -> in(u)`.
//! Vertex-disjoint paths in the graph are then unit flows in the network.

use std::collections::VecDeque;

use crate::graph::Graph;

#[inline]
pub(crate) fn vin(v: usize) -> usize {
    2 * v
}

#[inline]
pub(crate) fn vout(v: usize) -> usize {
    2 * v + 1
}

#[derive(Debug, Clone)]
pub(crate) struct Network {
    adj: Vec<Vec<usize>>,
    to: Vec<usize>,
    cap: Vec<i32>,
    base_cap: Vec<i32>,
    cost: Vec<i64>,
}

impl Network {
    pub(crate) fn with_nodes(nodes: usize) -> Self {
        Network {
            adj: vec![Vec::new(); nodes],
            to: Vec::new(),
            cap: Vec::new(),
            base_cap: Vec::new(),
            cost: Vec::new(),
        }
    }

    pub(crate) fn add_node(&mut self) -> usize {
        self.adj.push(Vec::new());
        self.adj.len() - 1
    }

    pub(crate) fn add_arc(&mut self, from: usize, to: usize, cap: i32, cost: i64) -> usize {
        let e = self.to.len();
        self.to.extend([to, from]);
        self.cap.extend([cap, 0]);
        self.base_cap.extend([cap, 0]);
        self.cost.extend([cost, -cost]);
        self.adj[from].push(e);
        self.adj[to].push(e + 1);
        e
    }

    /// Split digraph of `g`; `vertex_cost(v)` prices the `in(v) -> out(v)` arc.
    pub(crate) fn split(g: &Graph, vertex_cost: impl Fn(usize) -> i64) -> Self {
        let n = g.order();
        let mut net = Network::with_nodes(2 * n);
        for v in 0..n {
            net.add_arc(vin(v), vout(v), 1, vertex_cost(v));
        }
        for (u, v) in g.edges() {
            net.add_arc(vout(u), vin(v), 1, 0);
            net.add_arc(vout(v), vin(u), 1, 0);
        }
        net
    }

    pub(crate) fn reset(&mut self) {
        self.cap.copy_from_slice(&self.base_cap);
    }

    /// Breadth-first augmenting paths, stopping once `limit` units flow.
    pub(crate) fn max_flow(&mut self, s: usize, t: usize, limit: i32) -> i32 {
        let mut flow = 0;
        let mut pred = vec![usize::MAX; self.adj.len()];
        while flow < limit {
            pred.iter_mut().for_each(|p| *p = usize::MAX);
            let mut queue = VecDeque::from([s]);
            let mut found = false;
            'bfs: while let Some(x) = queue.pop_front() {
                for &e in &self.adj[x] {
                    let y = self.to[e];
                    if self.cap[e] > 0 && y != s && pred[y] == usize::MAX {
                        pred[y] = e;
                        if y == t {
                            found = true;
                            break 'bfs;
                        }
                        queue.push_back(y);
                    }
                }
            }
            if !found {
                break;
            }
            let mut y = t;
            while y != s {
                let e = pred[y];
                self.cap[e] -= 1;
                self.cap[e ^ 1] += 1;
                y = self.to[e ^ 1];
            }
            flow += 1;
        }
        flow
    }

    /// Successive shortest paths (Bellman-Ford on the residual network) for
    /// `amount` unit augmentations. Returns the total cost, or `None` if fewer
    /// than `amount` units can be routed.
    pub(crate) fn min_cost_flow(&mut self, s: usize, t: usize, amount: i32) -> Option<i64> {
        let nodes = self.adj.len();
        let mut total = 0;
        for _ in 0..amount {
            let mut dist = vec![i64::MAX; nodes];
            let mut pred = vec![usize::MAX; nodes];
            let mut in_queue = vec![false; nodes];
            dist[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(x) = queue.pop_front() {
                in_queue[x] = false;
                for &e in &self.adj[x] {
                    if self.cap[e] <= 0 {
                        continue;
                    }
                    let y = self.to[e];
                    let d = dist[x] + self.cost[e];
                    if d < dist[y] {
                        dist[y] = d;
                        pred[y] = e;
                        if !in_queue[y] {
                            in_queue[y] = true;
                            queue.push_back(y);
                        }
                    }
                }
            }
            if dist[t] == i64::MAX {
                return None;
            }
            let mut y = t;
            while y != s {
                let e = pred[y];
                self.cap[e] -= 1;
                self.cap[e ^ 1] += 1;
                y = self.to[e ^ 1];
            }
            total += dist[t];
        }
        Some(total)
    }
}
