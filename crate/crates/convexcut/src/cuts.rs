//! Cut representation and vertex-partition utilities shared by the
//! enumeration algorithms and the oracle.

use crate::graph::Graph;

/// A bipartition of the vertices, stored so that the side containing
/// vertex 0 is `true`, together with the ascending cut-set edge ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cut {
    side: Vec<bool>,
    edges: Vec<usize>,
}

impl Cut {
    /// Builds a cut from a membership mask (either polarity).
    pub fn from_side(g: &Graph, side: &[bool]) -> Cut {
        debug_assert_eq!(side.len(), g.vertex_count());
        let side: Vec<bool> = if side[0] {
            side.to_vec()
        } else {
            side.iter().map(|&s| !s).collect()
        };
        let edges = cut_edges(g, &side);
        Cut { side, edges }
    }

    /// Membership mask; `true` is the side containing vertex 0.
    pub fn side(&self) -> &[bool] {
        &self.side
    }

    /// Cut-set edge ids, ascending.
    pub fn edges(&self) -> &[usize] {
        &self.edges
    }

    pub fn side_vertices(&self, which: bool) -> Vec<usize> {
        (0..self.side.len())
            .filter(|&v| self.side[v] == which)
            .collect()
    }

    /// Sort key: cut-set size, then lexicographic edge ids.
    pub fn sort_key(&self) -> (usize, &[usize]) {
        (self.edges.len(), &self.edges)
    }
}

/// Edge ids with one endpoint on each side, ascending.
pub fn cut_edges(g: &Graph, side: &[bool]) -> Vec<usize> {
    (0..g.edge_count())
        .filter(|&e| {
            let (u, v) = g.endpoints(e);
            side[u] != side[v]
        })
        .collect()
}

/// Component index per vertex after deleting the listed edges.
pub fn components_after_removal(g: &Graph, removed: &[usize]) -> Vec<usize> {
    let mut gone = vec![false; g.edge_count()];
    for &e in removed {
        gone[e] = true;
    }
    let n = g.vertex_count();
    let mut comp = vec![usize::MAX; n];
    let mut count = 0;
    for start in 0..n {
        if comp[start] != usize::MAX {
            continue;
        }
        comp[start] = count;
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for &(e, w) in g.incident(v) {
                if !gone[e] && comp[w] == usize::MAX {
                    comp[w] = count;
                    stack.push(w);
                }
            }
        }
        count += 1;
    }
    comp
}

/// If deleting the listed edges splits the graph into exactly two
/// components, returns the membership mask of vertex 0's component.
pub fn side_from_edge_removal(g: &Graph, removed: &[usize]) -> Option<Vec<bool>> {
    let comp = components_after_removal(g, removed);
    let count = comp.iter().max().map_or(0, |&c| c + 1);
    if count != 2 {
        return None;
    }
    Some(comp.iter().map(|&c| c == comp[0]).collect())
}
