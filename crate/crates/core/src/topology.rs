//! Device connectivity graphs, Steiner-tree routing structure, and the
//! builtin topology catalog.
//!
//! # Overview
//!
//! A [`Topology`] is a simple undirected graph over qubit registers. Two-qubit
//! gates may only act along its edges. Synthesis consumes the graph one
//! vertex at a time, so each vertex carries a liveness flag: removed vertices
//! stay in the index space but drop out of the *active subgraph* that all
//! graph queries operate on. Removal is restricted to non-cutting vertices,
//! which keeps the active subgraph connected throughout a synthesis run.
//!
//! Long-range interactions are routed along approximate Steiner trees: given
//! a root and a terminal set, [`Topology::steiner_tree`] grows the tree
//! Prim-style, repeatedly attaching the nearest remaining terminal via its
//! whole shortest path (a classic 2-approximation). Distances and paths come
//! from Floyd–Warshall with a deterministic next-hop table: all ties prefer
//! the lowest vertex index, so identical inputs always produce identical
//! trees.
//!
//! # Example
//!
//! ```
//! use parityroute::topology::Topology;
//!
//! let grid = Topology::grid(2, 3);
//! assert_eq!(grid.edge_count(), 7);
//! let tree = grid.steiner_tree(1, &[1, 3, 4, 5]).unwrap();
//! assert_eq!(tree.weight(), 3);
//! ```

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};

/// A simple undirected connectivity graph with vertex liveness flags.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Topology {
    n: usize,
    adj: Vec<bool>,
    active: Vec<bool>,
}

impl Topology {
    /// Builds a graph on `n` vertices from unordered edge pairs.
    ///
    /// Self-loops and out-of-range endpoints are rejected; duplicate edges
    /// collapse (the graph is simple).
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut t = Topology {
            n,
            adj: vec![false; n * n],
            active: vec![true; n],
        };
        for (u, v) in edges {
            t.add_edge(u, v)?;
        }
        Ok(t)
    }

    fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n {
            return Err(Error::IndexOutOfRange { index: u, n: self.n });
        }
        if v >= self.n {
            return Err(Error::IndexOutOfRange { index: v, n: self.n });
        }
        if u == v {
            return Err(Error::EqualIndices { index: u });
        }
        self.adj[u * self.n + v] = true;
        self.adj[v * self.n + u] = true;
        Ok(())
    }

    /// A path graph `0 – 1 – … – n-1`.
    pub fn line(n: usize) -> Self {
        Topology::new(n, (1..n).map(|v| (v - 1, v))).expect("line edges are valid")
    }

    /// A `rows × cols` rectangular grid, vertices numbered row-major.
    pub fn grid(rows: usize, cols: usize) -> Self {
        let mut edges = Vec::new();
        for r in 0..rows {
            for c in 0..cols {
                let v = r * cols + c;
                if c + 1 < cols {
                    edges.push((v, v + 1));
                }
                if r + 1 < rows {
                    edges.push((v, v + cols));
                }
            }
        }
        Topology::new(rows * cols, edges).expect("grid edges are valid")
    }

    /// The complete graph on `n` vertices.
    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Topology::new(n, edges).expect("complete-graph edges are valid")
    }

    /// Total vertex count, including removed vertices.
    pub fn n(&self) -> usize {
        self.n
    }

    /// True if `v` has not been removed.
    pub fn is_active(&self, v: usize) -> bool {
        v < self.n && self.active[v]
    }

    /// Number of active vertices.
    pub fn active_count(&self) -> usize {
        self.active.iter().filter(|&&a| a).count()
    }

    /// Active vertices in ascending order.
    pub fn active_vertices(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.active[v]).collect()
    }

    /// True if the edge `{u, v}` exists, regardless of liveness.
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u * self.n + v]
    }

    /// Neighbors of `v` within the active subgraph, ascending.
    pub fn active_neighbors(&self, v: usize) -> Vec<usize> {
        (0..self.n)
            .filter(|&u| self.active[u] && self.adj[v * self.n + u])
            .collect()
    }

    /// Edges of the active subgraph as `(u, v)` with `u < v`, lexicographic.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            if !self.active[u] {
                continue;
            }
            for v in u + 1..self.n {
                if self.active[v] && self.adj[u * self.n + v] {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Number of active edges.
    pub fn edge_count(&self) -> usize {
        self.edges().len()
    }

    /// Degree of `v` within the active subgraph.
    pub fn degree(&self, v: usize) -> usize {
        self.active_neighbors(v).len()
    }

    /// True if the active subgraph is connected (vacuously true when empty).
    pub fn is_connected(&self) -> bool {
        let verts = self.active_vertices();
        let Some(&start) = verts.first() else {
            return true;
        };
        let mut seen = vec![false; self.n];
        let mut stack = vec![start];
        seen[start] = true;
        let mut count = 0;
        while let Some(v) = stack.pop() {
            count += 1;
            for u in self.active_neighbors(v) {
                if !seen[u] {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        count == verts.len()
    }

    /// Active vertices whose removal keeps the active subgraph connected.
    ///
    /// These are the complement of the articulation points, computed with
    /// Tarjan's low-link DFS. A single-vertex graph returns that vertex.
    ///
    /// # Errors
    ///
    /// [`Error::Disconnected`] if the active subgraph is empty or already
    /// disconnected.
    pub fn non_cutting_vertices(&self) -> Result<Vec<usize>> {
        let verts = self.active_vertices();
        if verts.is_empty() || !self.is_connected() {
            return Err(Error::Disconnected);
        }
        if verts.len() == 1 {
            return Ok(verts);
        }
        let mut disc = vec![usize::MAX; self.n];
        let mut low = vec![0; self.n];
        let mut cutting = vec![false; self.n];
        let mut clock = 0;
        self.articulation_dfs(verts[0], usize::MAX, &mut disc, &mut low, &mut cutting, &mut clock);
        Ok(verts.into_iter().filter(|&v| !cutting[v]).collect())
    }

    fn articulation_dfs(
        &self,
        v: usize,
        dfs_parent: usize,
        disc: &mut [usize],
        low: &mut [usize],
        cutting: &mut [bool],
        clock: &mut usize,
    ) {
        disc[v] = *clock;
        low[v] = *clock;
        *clock += 1;
        let mut children = 0;
        for u in self.active_neighbors(v) {
            if disc[u] == usize::MAX {
                children += 1;
                self.articulation_dfs(u, v, disc, low, cutting, clock);
                low[v] = low[v].min(low[u]);
                if dfs_parent != usize::MAX && low[u] >= disc[v] {
                    cutting[v] = true;
                }
            } else if u != dfs_parent {
                low[v] = low[v].min(disc[u]);
            }
        }
        if dfs_parent == usize::MAX && children > 1 {
            cutting[v] = true;
        }
    }

    /// All-pairs shortest paths over the active subgraph (Floyd–Warshall).
    ///
    /// Ties between equal-length paths resolve toward the lowest intermediate
    /// vertex index, making path reconstruction deterministic.
    pub fn all_pairs_shortest_paths(&self) -> ShortestPaths {
        const INF: usize = usize::MAX;
        let n = self.n;
        let mut dist = vec![INF; n * n];
        let mut next = vec![usize::MAX; n * n];
        let verts = self.active_vertices();
        for &v in &verts {
            dist[v * n + v] = 0;
            next[v * n + v] = v;
        }
        for (u, v) in self.edges() {
            dist[u * n + v] = 1;
            dist[v * n + u] = 1;
            next[u * n + v] = v;
            next[v * n + u] = u;
        }
        for &k in &verts {
            for &i in &verts {
                let d_ik = dist[i * n + k];
                if d_ik == INF {
                    continue;
                }
                for &j in &verts {
                    let d_kj = dist[k * n + j];
                    if d_kj == INF {
                        continue;
                    }
                    if d_ik + d_kj < dist[i * n + j] {
                        dist[i * n + j] = d_ik + d_kj;
                        next[i * n + j] = next[i * n + k];
                    }
                }
            }
        }
        ShortestPaths { n, dist, next }
    }

    /// Grows an approximate Steiner tree rooted at `root` spanning
    /// `terminals`.
    ///
    /// Prim's scheme on the shortest-path metric: repeatedly pick the
    /// remaining terminal closest to the tree (ties: lower terminal, then
    /// lower attachment vertex) and splice in its entire shortest path.
    /// Vertices added for connectivity but not in `terminals` become Steiner
    /// nodes. The result is within 2× of the optimal tree weight.
    ///
    /// # Errors
    ///
    /// [`Error::InactiveVertex`] if the root or any terminal has been
    /// removed; [`Error::Disconnected`] if some terminal is unreachable.
    pub fn steiner_tree(&self, root: usize, terminals: &[usize]) -> Result<SteinerTree> {
        if root >= self.n {
            return Err(Error::IndexOutOfRange { index: root, n: self.n });
        }
        if !self.active[root] {
            return Err(Error::InactiveVertex { vertex: root });
        }
        for &t in terminals {
            if t >= self.n {
                return Err(Error::IndexOutOfRange { index: t, n: self.n });
            }
            if !self.active[t] {
                return Err(Error::InactiveVertex { vertex: t });
            }
        }
        let sp = self.all_pairs_shortest_paths();
        let mut in_tree = BTreeSet::from([root]);
        let mut parent = BTreeMap::new();
        let mut remaining: BTreeSet<usize> =
            terminals.iter().copied().filter(|&t| t != root).collect();
        while !remaining.is_empty() {
            let mut best: Option<(usize, usize, usize)> = None;
            for &t in &remaining {
                for &v in &in_tree {
                    let d = sp.dist(v, t).ok_or(Error::Disconnected)?;
                    if best.is_none_or(|b| (d, t, v) < b) {
                        best = Some((d, t, v));
                    }
                }
            }
            let (_, t, v) = best.expect("remaining is non-empty");
            let mut cur = v;
            while cur != t {
                let hop = sp.next_hop(cur, t).expect("distance was finite");
                if in_tree.insert(hop) {
                    parent.insert(hop, cur);
                }
                cur = hop;
            }
            remaining.remove(&t);
        }
        Ok(SteinerTree {
            root,
            parent,
            terminals: terminals.iter().copied().collect(),
        })
    }

    /// Deactivates `v` and its incident edges.
    ///
    /// # Errors
    ///
    /// [`Error::InactiveVertex`] if `v` is already removed;
    /// [`Error::CuttingVertex`] if removal would disconnect the active
    /// subgraph.
    pub fn remove_vertex(&mut self, v: usize) -> Result<()> {
        if v >= self.n {
            return Err(Error::IndexOutOfRange { index: v, n: self.n });
        }
        if !self.active[v] {
            return Err(Error::InactiveVertex { vertex: v });
        }
        if !self.non_cutting_vertices()?.contains(&v) {
            return Err(Error::CuttingVertex { vertex: v });
        }
        self.active[v] = false;
        Ok(())
    }

    /// Mean shortest-path distance over all ordered active vertex pairs,
    /// including the zero diagonal: `Σ d(u, v) / n²`.
    ///
    /// # Errors
    ///
    /// [`Error::Disconnected`] if any pair is unreachable.
    pub fn mean_distance(&self) -> Result<f64> {
        let verts = self.active_vertices();
        if verts.is_empty() {
            return Err(Error::Disconnected);
        }
        let sp = self.all_pairs_shortest_paths();
        let mut sum = 0usize;
        for &u in &verts {
            for &v in &verts {
                sum += sp.dist(u, v).ok_or(Error::Disconnected)?;
            }
        }
        Ok(sum as f64 / (verts.len() * verts.len()) as f64)
    }

    /// Mean vertex degree of the active subgraph: `2E / n`.
    pub fn average_degree(&self) -> f64 {
        let n = self.active_count();
        if n == 0 {
            return 0.0;
        }
        2.0 * self.edge_count() as f64 / n as f64
    }
}

/// Distance and next-hop tables from [`Topology::all_pairs_shortest_paths`].
#[derive(Debug, Clone)]
pub struct ShortestPaths {
    n: usize,
    dist: Vec<usize>,
    next: Vec<usize>,
}

impl ShortestPaths {
    /// Shortest-path length from `u` to `v`, or `None` if unreachable.
    pub fn dist(&self, u: usize, v: usize) -> Option<usize> {
        match self.dist[u * self.n + v] {
            usize::MAX => None,
            d => Some(d),
        }
    }

    /// The first step of the reconstructed shortest path from `u` to `v`.
    pub fn next_hop(&self, u: usize, v: usize) -> Option<usize> {
        match self.next[u * self.n + v] {
            usize::MAX => None,
            h => Some(h),
        }
    }

    /// The full vertex path from `u` to `v`, inclusive, or `None` if
    /// unreachable.
    pub fn path(&self, u: usize, v: usize) -> Option<Vec<usize>> {
        self.dist(u, v)?;
        let mut path = vec![u];
        let mut cur = u;
        while cur != v {
            cur = self.next_hop(cur, v)?;
            path.push(cur);
        }
        Some(path)
    }
}

/// A rooted tree spanning a terminal set inside some topology.
///
/// Stored as child → parent links. Traversal order is fixed: depth-first
/// from the root, visiting each vertex's children in ascending index order.
/// Tree vertices that are not terminals are *Steiner nodes* — recruited for
/// connectivity only, a distinction the row-elimination pass depends on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SteinerTree {
    root: usize,
    parent: BTreeMap<usize, usize>,
    terminals: BTreeSet<usize>,
}

impl SteinerTree {
    /// Reconstructs a tree from its root, terminal set, and undirected edge
    /// list, orienting edges away from the root.
    ///
    /// # Errors
    ///
    /// [`Error::InvalidTree`] if the edges do not form a tree containing the
    /// root and every terminal.
    pub fn from_edges(
        root: usize,
        terminals: impl IntoIterator<Item = usize>,
        edges: &[(usize, usize)],
    ) -> Result<Self> {
        let mut adjacency: BTreeMap<usize, BTreeSet<usize>> = BTreeMap::new();
        adjacency.entry(root).or_default();
        for &(u, v) in edges {
            if u == v {
                return Err(Error::tree(format!("self-loop at vertex {u}")));
            }
            adjacency.entry(u).or_default().insert(v);
            adjacency.entry(v).or_default().insert(u);
        }
        if adjacency.len() != edges.len() + 1 {
            return Err(Error::tree(format!(
                "{} edges over {} vertices is not a tree",
                edges.len(),
                adjacency.len()
            )));
        }
        let mut parent = BTreeMap::new();
        let mut seen = BTreeSet::from([root]);
        let mut queue = vec![root];
        while let Some(v) = queue.pop() {
            for &u in &adjacency[&v] {
                if seen.insert(u) {
                    parent.insert(u, v);
                    queue.push(u);
                }
            }
        }
        if seen.len() != adjacency.len() {
            return Err(Error::tree("edges are not connected to the root"));
        }
        let terminals: BTreeSet<usize> = terminals.into_iter().collect();
        if let Some(&t) = terminals.iter().find(|t| !seen.contains(t)) {
            return Err(Error::tree(format!("terminal {t} is not a tree vertex")));
        }
        Ok(SteinerTree {
            root,
            parent,
            terminals,
        })
    }

    /// The root vertex.
    pub fn root(&self) -> usize {
        self.root
    }

    /// All tree vertices, ascending.
    pub fn vertices(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.parent.keys().copied().collect();
        v.push(self.root);
        v.sort_unstable();
        v
    }

    /// Number of tree vertices.
    pub fn len(&self) -> usize {
        self.parent.len() + 1
    }

    /// True if the tree is the bare root.
    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    /// Number of edges; with unit weights, also the tree weight.
    pub fn weight(&self) -> usize {
        self.parent.len()
    }

    /// True if `v` is a tree vertex.
    pub fn contains(&self, v: usize) -> bool {
        v == self.root || self.parent.contains_key(&v)
    }

    /// The parent of `v`, or `None` for the root or non-vertices.
    pub fn parent_of(&self, v: usize) -> Option<usize> {
        self.parent.get(&v).copied()
    }

    /// Children of `v` in ascending order.
    pub fn children_of(&self, v: usize) -> Vec<usize> {
        self.parent
            .iter()
            .filter(|&(_, &p)| p == v)
            .map(|(&c, _)| c)
            .collect()
    }

    /// The terminal set, ascending.
    pub fn terminals(&self) -> Vec<usize> {
        self.terminals.iter().copied().collect()
    }

    /// True if `v` is a tree vertex recruited only for connectivity.
    pub fn is_steiner(&self, v: usize) -> bool {
        self.contains(v) && !self.terminals.contains(&v)
    }

    /// Tree edges `(parent, child)` in depth-first preorder: each edge is
    /// listed before the edges of the child's subtree.
    pub fn preorder_edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.weight());
        self.walk(self.root, &mut |edge, out: &mut Vec<_>| out.push(edge), &mut out, true);
        out
    }

    /// Tree edges `(parent, child)` in depth-first postorder: the edges of
    /// the child's subtree come before the edge itself.
    pub fn postorder_edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.weight());
        self.walk(self.root, &mut |edge, out: &mut Vec<_>| out.push(edge), &mut out, false);
        out
    }

    fn walk<F>(&self, v: usize, emit: &mut F, out: &mut Vec<(usize, usize)>, pre: bool)
    where
        F: FnMut((usize, usize), &mut Vec<(usize, usize)>),
    {
        for c in self.children_of(v) {
            if pre {
                emit((v, c), out);
            }
            self.walk(c, emit, out, pre);
            if !pre {
                emit((v, c), out);
            }
        }
    }
}

/// Names accepted by [`builtin_topology`], in catalog order.
pub fn builtin_names() -> &'static [&'static str] {
    &[
        "square9",
        "square16",
        "grid2x3",
        "line3",
        "line5",
        "complete5",
        "complete9",
        "complete16",
        "complete20",
        "ibm_qx2",
        "ibm_qx4",
        "ibm_qx5",
        "ibm_tokyo",
        "rigetti_aspen",
    ]
}

/// Looks up a device topology by catalog name.
///
/// # Errors
///
/// [`Error::UnknownTopology`] (listing the catalog) for unknown names.
pub fn builtin_topology(name: &str) -> Result<Topology> {
    let t = match name {
        "square9" => Topology::grid(3, 3),
        "square16" => Topology::grid(4, 4),
        "grid2x3" => Topology::grid(2, 3),
        "line3" => Topology::line(3),
        "line5" => Topology::line(5),
        "complete5" => Topology::complete(5),
        "complete9" => Topology::complete(9),
        "complete16" => Topology::complete(16),
        "complete20" => Topology::complete(20),
        // QX2 and QX4 share one undirected coupling graph.
        "ibm_qx2" | "ibm_qx4" => {
            Topology::new(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])?
        }
        // 16-qubit ladder.
        "ibm_qx5" => Topology::new(
            16,
            [
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 5),
                (5, 6),
                (6, 7),
                (7, 8),
                (8, 9),
                (9, 10),
                (10, 11),
                (11, 12),
                (12, 13),
                (13, 14),
                (14, 15),
                (0, 15),
                (2, 15),
                (3, 14),
                (4, 13),
                (5, 12),
                (6, 11),
                (7, 10),
            ],
        )?,
        // 4×5 lattice with diagonal couplings.
        "ibm_tokyo" => {
            let mut edges = Vec::new();
            for r in 0..4 {
                for c in 0..5 {
                    let v = r * 5 + c;
                    if c + 1 < 5 {
                        edges.push((v, v + 1));
                    }
                    if r + 1 < 4 {
                        edges.push((v, v + 5));
                    }
                }
            }
            edges.extend([
                (1, 7),
                (2, 6),
                (3, 9),
                (4, 8),
                (5, 11),
                (6, 10),
                (7, 13),
                (8, 12),
                (11, 17),
                (12, 16),
                (13, 19),
                (14, 18),
            ]);
            Topology::new(20, edges)?
        }
        // Two rings of eight with a two-edge bridge.
        "rigetti_aspen" => {
            let mut edges: Vec<(usize, usize)> = (0..8).map(|v| (v, (v + 1) % 8)).collect();
            edges.extend((0..8).map(|v| (8 + v, 8 + (v + 1) % 8)));
            edges.extend([(0, 15), (1, 14)]);
            Topology::new(16, edges)?
        }
        _ => {
            return Err(Error::UnknownTopology {
                name: name.to_string(),
                catalog: builtin_names().join(", "),
            })
        }
    };
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid2x3_has_expected_edges() {
        let g = Topology::grid(2, 3);
        assert_eq!(
            g.edges(),
            vec![(0, 1), (0, 3), (1, 2), (1, 4), (2, 5), (3, 4), (4, 5)]
        );
    }

    #[test]
    fn square9_distances() {
        let g = builtin_topology("square9").unwrap();
        assert_eq!(g.edge_count(), 12);
        let sp = g.all_pairs_shortest_paths();
        assert_eq!(sp.dist(0, 8), Some(4));
        for v in 0..9 {
            assert_eq!(sp.dist(v, v), Some(0));
        }
        let mean = g.mean_distance().unwrap();
        assert!((mean - 16.0 / 9.0).abs() < 1e-12, "mean was {mean}");
    }

    #[test]
    fn path_reconstruction_is_deterministic() {
        let g = Topology::grid(2, 3);
        let sp = g.all_pairs_shortest_paths();
        // Both 0–1–2 and detours exist; ties resolve to the lowest index.
        assert_eq!(sp.path(0, 2), Some(vec![0, 1, 2]));
        assert_eq!(sp.path(3, 2), Some(vec![3, 0, 1, 2]));
    }

    #[test]
    fn non_cutting_on_path_graph() {
        let g = Topology::line(3);
        assert_eq!(g.non_cutting_vertices().unwrap(), vec![0, 2]);
    }

    #[test]
    fn non_cutting_on_grid2x3() {
        let mut g = Topology::grid(2, 3);
        assert_eq!(g.non_cutting_vertices().unwrap(), vec![0, 1, 2, 3, 4, 5]);
        g.remove_vertex(0).unwrap();
        assert_eq!(g.non_cutting_vertices().unwrap(), vec![1, 2, 3, 5]);
    }

    #[test]
    fn non_cutting_on_single_vertex() {
        let g = Topology::new(1, []).unwrap();
        assert_eq!(g.non_cutting_vertices().unwrap(), vec![0]);
    }

    #[test]
    fn remove_vertex_drops_incident_edges() {
        let mut g = Topology::grid(2, 3);
        g.remove_vertex(0).unwrap();
        assert!(!g.is_active(0));
        assert_eq!(g.edges(), vec![(1, 2), (1, 4), (2, 5), (3, 4), (4, 5)]);
        assert!(g.is_connected());
    }

    #[test]
    fn remove_vertex_rejects_cutting() {
        let mut g = Topology::line(3);
        assert!(matches!(
            g.remove_vertex(1),
            Err(Error::CuttingVertex { vertex: 1 })
        ));
        g.remove_vertex(0).unwrap();
        // After dropping an endpoint the middle vertex becomes removable.
        g.remove_vertex(1).unwrap();
        g.remove_vertex(2).unwrap();
        assert_eq!(g.active_count(), 0);
    }

    #[test]
    fn remove_vertex_rejects_inactive() {
        let mut g = Topology::complete(3);
        g.remove_vertex(2).unwrap();
        assert!(matches!(
            g.remove_vertex(2),
            Err(Error::InactiveVertex { vertex: 2 })
        ));
    }

    #[test]
    fn triangle_stays_connected_after_removal() {
        let mut g = Topology::complete(3);
        g.remove_vertex(1).unwrap();
        assert!(g.is_connected());
        assert_eq!(g.edges(), vec![(0, 2)]);
    }

    #[test]
    fn steiner_tree_on_grid2x3() {
        let g = Topology::grid(2, 3);
        let tree = g.steiner_tree(1, &[1, 3, 4, 5]).unwrap();
        assert_eq!(tree.root(), 1);
        assert_eq!(tree.vertices(), vec![1, 3, 4, 5]);
        assert_eq!(tree.parent_of(4), Some(1));
        assert_eq!(tree.parent_of(3), Some(4));
        assert_eq!(tree.parent_of(5), Some(4));
        assert_eq!(tree.weight(), 3);
        assert!(!tree.is_steiner(4));
    }

    #[test]
    fn steiner_tree_single_terminal() {
        let g = Topology::grid(2, 3);
        let tree = g.steiner_tree(2, &[2]).unwrap();
        assert!(tree.is_empty());
        assert_eq!(tree.vertices(), vec![2]);
    }

    #[test]
    fn steiner_tree_recruits_steiner_nodes() {
        // Root 4 with terminal 2 on the 2×3 grid with 0, 1, 3 removed:
        // the only route is 4 – 5 – 2, recruiting 5.
        let mut g = Topology::grid(2, 3);
        for v in [0, 1, 3] {
            g.remove_vertex(v).unwrap();
        }
        let tree = g.steiner_tree(4, &[2, 4]).unwrap();
        assert_eq!(tree.vertices(), vec![2, 4, 5]);
        assert_eq!(tree.parent_of(5), Some(4));
        assert_eq!(tree.parent_of(2), Some(5));
        assert!(tree.is_steiner(5));
        assert!(!tree.is_steiner(2));
    }

    #[test]
    fn steiner_tree_weight_on_larger_grid() {
        // 4×3 grid, terminals in three corners plus one mid-edge vertex:
        // the best tree has weight 6 and three Steiner nodes.
        let g = Topology::grid(4, 3);
        let tree = g.steiner_tree(0, &[0, 5, 6, 10]).unwrap();
        assert_eq!(tree.weight(), 6);
        let steiner: Vec<usize> = tree
            .vertices()
            .into_iter()
            .filter(|&v| tree.is_steiner(v))
            .collect();
        assert_eq!(steiner, vec![3, 4, 7]);
    }

    #[test]
    fn steiner_tree_rejects_inactive_terminal() {
        let mut g = Topology::grid(2, 3);
        g.remove_vertex(0).unwrap();
        assert!(matches!(
            g.steiner_tree(1, &[0, 1]),
            Err(Error::InactiveVertex { vertex: 0 })
        ));
    }

    #[test]
    fn tree_traversal_orders() {
        let tree =
            SteinerTree::from_edges(1, [1, 3, 4, 5], &[(1, 4), (4, 3), (4, 5)]).unwrap();
        assert_eq!(tree.preorder_edges(), vec![(1, 4), (4, 3), (4, 5)]);
        assert_eq!(tree.postorder_edges(), vec![(4, 3), (4, 5), (1, 4)]);
        assert_eq!(tree.children_of(4), vec![3, 5]);
    }

    #[test]
    fn tree_from_edges_validation() {
        assert!(SteinerTree::from_edges(0, [0], &[(1, 2)]).is_err(), "detached edge");
        assert!(
            SteinerTree::from_edges(0, [0], &[(0, 1), (1, 2), (2, 0)]).is_err(),
            "cycle"
        );
        assert!(
            SteinerTree::from_edges(0, [0, 9], &[(0, 1)]).is_err(),
            "terminal outside tree"
        );
        assert!(SteinerTree::from_edges(0, [0], &[(1, 1)]).is_err(), "self-loop");
    }

    #[test]
    fn catalog_lookup() {
        for &name in builtin_names() {
            let t = builtin_topology(name).expect(name);
            assert!(t.is_connected(), "{name} must be connected");
        }
        assert_eq!(builtin_topology("complete5").unwrap().edge_count(), 10);
        assert_eq!(builtin_topology("ibm_qx2").unwrap().edge_count(), 6);
        assert_eq!(builtin_topology("ibm_tokyo").unwrap().n(), 20);
        assert!(matches!(
            builtin_topology("banana"),
            Err(Error::UnknownTopology { .. })
        ));
    }

    #[test]
    fn catalog_statistics() {
        let square16 = builtin_topology("square16").unwrap();
        assert_eq!(square16.mean_distance().unwrap(), 2.5);

        let aspen = builtin_topology("rigetti_aspen").unwrap();
        assert_eq!(aspen.mean_distance().unwrap(), 3.25);
        assert_eq!(aspen.average_degree(), 2.25);

        let qx5 = builtin_topology("ibm_qx5").unwrap();
        assert_eq!(qx5.mean_distance().unwrap(), 3.125);
        assert_eq!(qx5.average_degree(), 2.75);
    }

    #[test]
    fn brute_force_non_cutting_agreement() {
        // Cross-check Tarjan against remove-and-BFS on a few fixed graphs.
        let graphs = [
            Topology::grid(3, 3),
            Topology::line(5),
            Topology::complete(5),
            builtin_topology("ibm_qx5").unwrap(),
            builtin_topology("rigetti_aspen").unwrap(),
        ];
        for g in graphs {
            let fast = g.non_cutting_vertices().unwrap();
            let slow: Vec<usize> = g
                .active_vertices()
                .into_iter()
                .filter(|&v| {
                    let mut h = g.clone();
                    h.active[v] = false;
                    h.is_connected()
                })
                .collect();
            assert_eq!(fast, slow);
        }
    }
}
