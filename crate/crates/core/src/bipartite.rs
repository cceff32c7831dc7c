//! Bipartite graphs between a row side and a column side.
//!
//! Vertices are numbered `0..left` for the left side and `left..left+right`
//! for the right side. All traversals visit neighbours in increasing order, so
//! forests and paths are canonical.

use std::collections::VecDeque;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartiteGraph {
    left: Vec<String>,
    right: Vec<String>,
    adj: Vec<Vec<usize>>,
}

impl BipartiteGraph {
    /// Builds the graph from `(left index, right index)` edges.
    pub fn new(left: Vec<String>, right: Vec<String>, edges: &[(usize, usize)]) -> Self {
        let n = left.len() + right.len();
        let mut adj = vec![Vec::new(); n];
        for &(i, j) in edges {
            let v = left.len() + j;
            adj[i].push(v);
            adj[v].push(i);
        }
        for a in &mut adj {
            a.sort_unstable();
            a.dedup();
        }
        BipartiteGraph { left, right, adj }
    }

    pub fn left(&self) -> &[String] {
        &self.left
    }

    pub fn right(&self) -> &[String] {
        &self.right
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn label(&self, v: usize) -> &str {
        if v < self.left.len() {
            &self.left[v]
        } else {
            &self.right[v - self.left.len()]
        }
    }

    pub fn vertex(&self, label: &str) -> Option<usize> {
        (0..self.vertex_count()).find(|&v| self.label(v) == label)
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.adj[i].binary_search(&(self.left.len() + j)).is_ok()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    /// Edges as `(left, right)` index pairs, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.left.len() {
            for &v in &self.adj[i] {
                out.push((i, v - self.left.len()));
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj[..self.left.len()].iter().map(Vec::len).sum()
    }

    /// Component index of every vertex, numbered in order of first vertex.
    pub fn components(&self) -> Vec<usize> {
        let mut comp = vec![usize::MAX; self.vertex_count()];
        let mut next = 0;
        for s in 0..self.vertex_count() {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = next;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if comp[w] == usize::MAX {
                        comp[w] = next;
                        queue.push_back(w);
                    }
                }
            }
            next += 1;
        }
        comp
    }

    pub fn component_count(&self) -> usize {
        self.components().into_iter().max().map_or(0, |c| c + 1)
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    /// The breadth-first spanning forest rooted at the least vertex of each
    /// component, as `(left, right)` index pairs in discovery order.
    pub fn spanning_forest(&self) -> Vec<(usize, usize)> {
        self.spanning_forest_avoiding_leaves(&[])
    }

    /// Like [`spanning_forest`](Self::spanning_forest), but vertices in `leaves`
    /// are never expanded, so they end up as leaves whenever they are not the
    /// root of their component.
    pub fn spanning_forest_avoiding_leaves(&self, leaves: &[usize]) -> Vec<(usize, usize)> {
        let nl = self.left.len();
        let mut seen = vec![false; self.vertex_count()];
        let mut out = Vec::new();
        let order: Vec<usize> = (0..self.vertex_count())
            .filter(|v| !leaves.contains(v))
            .chain(leaves.iter().copied())
            .collect();
        for s in order {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                if u != s && leaves.contains(&u) {
                    continue;
                }
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        out.push(if u < nl { (u, w - nl) } else { (w, u - nl) });
                        queue.push_back(w);
                    }
                }
            }
        }
        out
    }

    /// Whether `forest` is a maximal spanning forest: its edges are graph edges,
    /// it is acyclic and it has one edge fewer than vertices per component.
    pub fn is_maximal_spanning_forest(&self, forest: &[(usize, usize)]) -> bool {
        let nl = self.left.len();
        let mut parent: Vec<usize> = (0..self.vertex_count()).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let nx = p[y];
                p[y] = r;
                y = nx;
            }
            r
        }
        for &(i, j) in forest {
            if i >= nl || j >= self.right.len() || !self.has_edge(i, j) {
                return false;
            }
            let (a, b) = (find(&mut parent, i), find(&mut parent, nl + j));
            if a == b {
                return false;
            }
            parent[a] = b;
        }
        forest.len() + self.component_count() == self.vertex_count()
    }

    /// A shortest path from `from` to any vertex of `targets`, as a vertex list
    /// starting at `from`. Ties go to the lexicographically least path.
    pub fn shortest_path(&self, from: usize, targets: &[usize]) -> Option<Vec<usize>> {
        let n = self.vertex_count();
        // Distances to the target set, then a greedy least-neighbour walk.
        let mut dist = vec![usize::MAX; n];
        let mut queue = VecDeque::new();
        for &t in targets {
            dist[t] = 0;
            queue.push_back(t);
        }
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        if dist[from] == usize::MAX {
            return None;
        }
        let mut path = vec![from];
        let mut cur = from;
        while dist[cur] > 0 {
            cur = *self.adj[cur]
                .iter()
                .find(|&&w| dist[w] + 1 == dist[cur])
                .expect("distance labels are consistent");
            path.push(cur);
        }
        Some(path)
    }

    /// Graph distance between a vertex and a vertex set.
    pub fn distance(&self, from: usize, targets: &[usize]) -> Option<usize> {
        self.shortest_path(from, targets).map(|p| p.len() - 1)
    }
}
