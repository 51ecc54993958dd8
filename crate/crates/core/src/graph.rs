//! Simple undirected graphs as sorted adjacency lists. Shared by the
//! transposition-graph and Cayley-graph modules and by the automorphism
//! search; immutable after construction.

/// Vertices are `0..vertex_count`; `adj[v]` is sorted ascending.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<u32>>,
}

impl Graph {
    /// Builds a graph from an undirected edge list. Loops and duplicate
    /// edges are programmer errors.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Graph {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            assert!(u < n && v < n, "edge ({u},{v}) out of range for {n} vertices");
            assert!(u != v, "loop at vertex {u}");
            adj[u].push(v as u32);
            adj[v].push(u as u32);
        }
        for (v, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            assert!(
                list.windows(2).all(|w| w[0] != w[1]),
                "duplicate edge at vertex {v}"
            );
        }
        Graph { adj }
    }

    /// Wraps prebuilt adjacency lists; each must be sorted, loop-free, and
    /// symmetric with its partners.
    pub fn from_adjacency(adj: Vec<Vec<u32>>) -> Graph {
        let n = adj.len();
        for (v, list) in adj.iter().enumerate() {
            assert!(
                list.windows(2).all(|w| w[0] < w[1]),
                "adjacency of {v} not sorted/strict"
            );
            for &w in list {
                assert!((w as usize) < n, "neighbor {w} out of range");
                assert!(w as usize != v, "loop at vertex {v}");
                assert!(
                    adj[w as usize].binary_search(&(v as u32)).is_ok(),
                    "edge ({v},{w}) not symmetric"
                );
            }
        }
        Graph { adj }
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|l| l.len()).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[u32] {
        &self.adj[v]
    }

    pub fn degree_of(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&(v as u32)).is_ok()
    }

    /// Edges with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, list)| {
            list.iter()
                .filter(move |&&v| u < v as usize)
                .map(move |&v| (u, v as usize))
        })
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &v in &self.adj[u] {
                let v = v as usize;
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    stack.push(v);
                }
            }
        }
        count == n
    }

    /// Length of the shortest cycle, or `None` for a forest. BFS from every
    /// vertex; a non-tree edge (u,v) seen from root r witnesses a closed walk
    /// of length `d[u] + d[v] + 1`, and the minimum over all roots is exact.
    pub fn girth(&self) -> Option<usize> {
        let n = self.vertex_count();
        let mut best: Option<usize> = None;
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        for root in 0..n {
            dist.fill(usize::MAX);
            parent.fill(usize::MAX);
            dist[root] = 0;
            let mut queue = std::collections::VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                for &v in &self.adj[u] {
                    let v = v as usize;
                    if dist[v] == usize::MAX {
                        dist[v] = dist[u] + 1;
                        parent[v] = u;
                        queue.push_back(v);
                    } else if v != parent[u] {
                        let cand = dist[u] + dist[v] + 1;
                        if best.is_none_or(|b| cand < b) {
                            best = Some(cand);
                        }
                    }
                }
            }
        }
        best
    }

    /// BFS distances from `root`; `usize::MAX` marks unreachable vertices.
    pub fn bfs_distances(&self, root: usize) -> Vec<usize> {
        let n = self.vertex_count();
        let mut dist = vec![usize::MAX; n];
        dist[root] = 0;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                let v = v as usize;
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        dist
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, m={})", self.vertex_count(), self.edge_count())
    }
}
