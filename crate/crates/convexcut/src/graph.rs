//! Connected undirected multigraphs with stable edge ids, BFS distances,
//! and the midpoint subdivision used by the cut-enumeration algorithms.

use serde::Serialize;
use std::collections::VecDeque;
use thiserror::Error;

/// Sentinel for "unreached" in distance arrays.
pub const UNREACHED: u32 = u32::MAX;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph must have at least one vertex")]
    Empty,
    #[error("edge {edge} endpoint {vertex} out of range (vertex count {vertex_count})")]
    VertexOutOfRange {
        edge: usize,
        vertex: usize,
        vertex_count: usize,
    },
    #[error("edge {edge} is a self-loop at vertex {vertex}")]
    SelfLoop { edge: usize, vertex: usize },
    #[error("graph is disconnected: no path between vertices {a} and {b}")]
    Disconnected { a: usize, b: usize },
}

/// A connected undirected multigraph. Vertices are `0..vertex_count`,
/// edges carry dense stable ids `0..edge_count` in insertion order.
/// Parallel edges are allowed, self-loops are not, and connectivity is
/// enforced at construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<(usize, usize)>>, // per vertex: (edge id, other endpoint)
}

impl Graph {
    /// Builds a graph, validating endpoint ranges, absence of self-loops,
    /// and connectivity (the error names one vertex from each side).
    pub fn new(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        if vertex_count == 0 {
            return Err(GraphError::Empty);
        }
        let mut adj = vec![Vec::new(); vertex_count];
        for (id, &(u, v)) in edges.iter().enumerate() {
            for &w in &[u, v] {
                if w >= vertex_count {
                    return Err(GraphError::VertexOutOfRange {
                        edge: id,
                        vertex: w,
                        vertex_count,
                    });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop {
                    edge: id,
                    vertex: u,
                });
            }
            adj[u].push((id, v));
            adj[v].push((id, u));
        }
        let g = Graph {
            vertex_count,
            edges: edges.to_vec(),
            adj,
        };
        let dist = g.bfs_distances(0);
        if let Some(b) = (0..vertex_count).find(|&v| dist[v] == UNREACHED) {
            return Err(GraphError::Disconnected { a: 0, b });
        }
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Endpoints of edge `e` in stored order.
    pub fn endpoints(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    /// All edges as (u, v) pairs in id order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Incident (edge id, neighbor) pairs of `v` in insertion order.
    pub fn incident(&self, v: usize) -> &[(usize, usize)] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// The endpoint of `e` other than `v`.
    pub fn other_endpoint(&self, e: usize, v: usize) -> usize {
        let (a, b) = self.edges[e];
        if v == a {
            b
        } else {
            debug_assert_eq!(v, b);
            a
        }
    }

    /// BFS distances from `src`; every entry is finite for a valid graph.
    pub fn bfs_distances(&self, src: usize) -> Vec<u32> {
        let mut dist = vec![UNREACHED; self.vertex_count];
        let mut queue = VecDeque::new();
        dist[src] = 0;
        queue.push_back(src);
        while let Some(u) = queue.pop_front() {
            for &(_, w) in &self.adj[u] {
                if dist[w] == UNREACHED {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Dense all-pairs distance matrix via one BFS per source.
    pub fn distance_table(&self) -> DistanceTable {
        let n = self.vertex_count;
        let mut d = Vec::with_capacity(n * n);
        for s in 0..n {
            d.extend_from_slice(&self.bfs_distances(s));
        }
        DistanceTable { n, d }
    }

    /// Proper 2-coloring if one exists, else an odd cycle as a vertex list
    /// (closed walk of odd length witnessing non-bipartiteness).
    pub fn two_coloring(&self) -> Result<Vec<u8>, Vec<usize>> {
        let n = self.vertex_count;
        let mut color = vec![u8::MAX; n];
        let mut parent: Vec<Option<usize>> = vec![None; n];
        let mut queue = VecDeque::new();
        color[0] = 0;
        queue.push_back(0);
        while let Some(u) = queue.pop_front() {
            for &(_, w) in &self.adj[u] {
                if color[w] == u8::MAX {
                    color[w] = 1 - color[u];
                    parent[w] = Some(u);
                    queue.push_back(w);
                } else if color[w] == color[u] {
                    return Err(odd_cycle_witness(&parent, u, w));
                }
            }
        }
        Ok(color)
    }

    pub fn is_bipartite(&self) -> bool {
        self.two_coloring().is_ok()
    }

    /// Cut vertices (articulation points), ascending.
    pub fn articulation_points(&self) -> Vec<usize> {
        let n = self.vertex_count;
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![usize::MAX; n];
        let mut is_cut = vec![false; n];
        // Iterative DFS; frame: (vertex, parent edge, next incidence index).
        let mut stack: Vec<(usize, Option<usize>, usize)> = vec![(0, None, 0)];
        let mut root_children = 0usize;
        let mut timer = 1usize;
        disc[0] = 0;
        low[0] = 0;
        while !stack.is_empty() {
            let (u, pe, idx) = *stack.last().unwrap();
            if idx < self.adj[u].len() {
                stack.last_mut().unwrap().2 += 1;
                let (eid, w) = self.adj[u][idx];
                if Some(eid) == pe {
                    continue;
                }
                if disc[w] == usize::MAX {
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    if u == 0 {
                        root_children += 1;
                    }
                    stack.push((w, Some(eid), 0));
                } else {
                    low[u] = low[u].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _, _)) = stack.last() {
                    low[p] = low[p].min(low[u]);
                    if p != 0 && low[u] >= disc[p] {
                        is_cut[p] = true;
                    }
                }
            }
        }
        if root_children > 1 {
            is_cut[0] = true;
        }
        (0..n).filter(|&v| is_cut[v]).collect()
    }

    /// True when the graph cannot be disconnected by removing one vertex:
    /// no articulation point for three or more vertices, at least two
    /// parallel edges for exactly two vertices.
    pub fn is_two_connected(&self) -> bool {
        if self.vertex_count < 3 {
            return self.vertex_count == 2 && self.edges.len() >= 2;
        }
        self.articulation_points().is_empty()
    }

    /// Midpoint subdivision: every edge is split in two at a fresh vertex.
    pub fn subdivide(&self) -> Subdivision {
        self.subdivide_with(ChildOrder::LowFirst)
    }

    /// Subdivision with an explicit child-ordering convention.
    pub fn subdivide_with(&self, order: ChildOrder) -> Subdivision {
        let n = self.vertex_count;
        let mut edges = Vec::with_capacity(2 * self.edge_count());
        for (id, &(u, v)) in self.edges.iter().enumerate() {
            let mid = n + id;
            let (first, second) = match order {
                ChildOrder::LowFirst => (u.min(v), u.max(v)),
                ChildOrder::HighFirst => (u.max(v), u.min(v)),
            };
            edges.push((first, mid));
            edges.push((mid, second));
        }
        let graph = Graph::new(n + self.edge_count(), &edges)
            .expect("subdivision of a valid graph is valid");
        Subdivision {
            graph,
            original_vertex_count: n,
            order,
        }
    }
}

fn odd_cycle_witness(parent: &[Option<usize>], u: usize, w: usize) -> Vec<usize> {
    // Walk both BFS ancestries to the root, splice at the first common vertex.
    let path_to_root = |mut v: usize| {
        let mut p = vec![v];
        while let Some(q) = parent[v] {
            p.push(q);
            v = q;
        }
        p
    };
    let pu = path_to_root(u);
    let pw = path_to_root(w);
    let mut k = 0;
    while k < pu.len() && k < pw.len() && pu[pu.len() - 1 - k] == pw[pw.len() - 1 - k] {
        k += 1;
    }
    let meet = pu.len() - k; // index of deepest common ancestor in pu
    let mut cycle: Vec<usize> = pu[..=meet].to_vec();
    let wlen = pw.len() - k;
    for i in (0..wlen).rev() {
        cycle.push(pw[i]);
    }
    cycle
}

/// Dense all-pairs shortest-path distances.
#[derive(Debug, Clone)]
pub struct DistanceTable {
    n: usize,
    d: Vec<u32>,
}

impl DistanceTable {
    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.d[u * self.n + v]
    }

    /// All distances from `u` as a slice indexed by target vertex.
    pub fn row(&self, u: usize) -> &[u32] {
        &self.d[u * self.n..(u + 1) * self.n]
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }
}

/// Which half of a subdivided edge gets the even child id.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ChildOrder {
    /// Child `2e` is the half incident to the smaller-numbered endpoint.
    LowFirst,
    /// Child `2e` is the half incident to the larger-numbered endpoint.
    HighFirst,
}

/// Midpoint subdivision of a graph. Original vertices keep their ids;
/// the midpoint of edge `e` is vertex `n + e`; the two halves of edge `e`
/// are edges `2e` and `2e + 1` of the subdivided graph.
#[derive(Debug, Clone)]
pub struct Subdivision {
    graph: Graph,
    original_vertex_count: usize,
    order: ChildOrder,
}

impl Subdivision {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn order(&self) -> ChildOrder {
        self.order
    }

    /// Midpoint vertex of original edge `e`.
    pub fn midpoint_of(&self, e: usize) -> usize {
        self.original_vertex_count + e
    }

    /// The two child edge ids of original edge `e`.
    pub fn children_of(&self, e: usize) -> (usize, usize) {
        (2 * e, 2 * e + 1)
    }

    /// The original edge a child edge id belongs to.
    pub fn parent_of(&self, child: usize) -> usize {
        child / 2
    }

    pub fn original_vertex_count(&self) -> usize {
        self.original_vertex_count
    }
}
