//! Integral max-flow (Edmonds-Karp) on small graphs.
//!
//! Augmenting paths are found by BFS scanning each node's edges in insertion
//! order, so results are fully determined by the order edges are added.

use std::collections::VecDeque;

#[derive(Debug, Clone)]
struct Edge {
    to: usize,
    cap: u64,
    rev: usize,
}

#[derive(Debug, Clone)]
pub(crate) struct FlowNetwork {
    adj: Vec<Vec<Edge>>,
}

/// Handle to a forward edge, for reading its flow afterwards.
#[derive(Debug, Clone, Copy)]
pub(crate) struct EdgeId {
    from: usize,
    idx: usize,
    cap: u64,
}

impl FlowNetwork {
    pub(crate) fn new(nodes: usize) -> Self {
        FlowNetwork {
            adj: vec![Vec::new(); nodes],
        }
    }

    pub(crate) fn add_edge(&mut self, from: usize, to: usize, cap: u64) -> EdgeId {
        let idx = self.adj[from].len();
        let rev = self.adj[to].len() + usize::from(from == to);
        self.adj[from].push(Edge { to, cap, rev });
        self.adj[to].push(Edge {
            to: from,
            cap: 0,
            rev: idx,
        });
        EdgeId { from, idx, cap }
    }

    pub(crate) fn flow_on(&self, e: EdgeId) -> u64 {
        e.cap - self.adj[e.from][e.idx].cap
    }

    pub(crate) fn max_flow(&mut self, source: usize, sink: usize) -> u64 {
        let mut total = 0u64;
        loop {
            let mut parent: Vec<Option<(usize, usize)>> = vec![None; self.adj.len()];
            let mut visited = vec![false; self.adj.len()];
            visited[source] = true;
            let mut queue = VecDeque::from([source]);
            while let Some(u) = queue.pop_front() {
                if u == sink {
                    break;
                }
                for (i, e) in self.adj[u].iter().enumerate() {
                    if e.cap > 0 && !visited[e.to] {
                        visited[e.to] = true;
                        parent[e.to] = Some((u, i));
                        queue.push_back(e.to);
                    }
                }
            }
            if !visited[sink] {
                return total;
            }
            let mut bottleneck = u64::MAX;
            let mut v = sink;
            while let Some((u, i)) = parent[v] {
                bottleneck = bottleneck.min(self.adj[u][i].cap);
                v = u;
            }
            let mut v = sink;
            while let Some((u, i)) = parent[v] {
                let rev = self.adj[u][i].rev;
                self.adj[u][i].cap -= bottleneck;
                self.adj[v][rev].cap += bottleneck;
                v = u;
            }
            total += bottleneck;
        }
    }

    /// Nodes reachable from `source` in the residual graph (source side of
    /// a minimum cut once `max_flow` has run).
    pub(crate) fn residual_reachable(&self, source: usize) -> Vec<bool> {
        let mut seen = vec![false; self.adj.len()];
        seen[source] = true;
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            for e in &self.adj[u] {
                if e.cap > 0 && !seen[e.to] {
                    seen[e.to] = true;
                    queue.push_back(e.to);
                }
            }
        }
        seen
    }
}
