//! Brute-force reference implementations: convexity checking straight from
//! the definition, exhaustive convex-cut enumeration for small graphs, and
//! partial-cube recognition with certificates.
//!
//! Everything here favors transparency over speed and serves as the ground
//! truth the polynomial algorithms are verified against.

use crate::cuts::Cut;
use crate::graph::{DistanceTable, Graph};
use crate::relations::{theta_cut_by_rows, theta_matrix, BitMatrix};

/// Proof that a side is not convex: `u` and `v` lie in the side, `w` does
/// not, and `w` lies on a shortest `u`-`v` path.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NonConvexWitness {
    pub u: usize,
    pub v: usize,
    pub w: usize,
    /// Which side of the mask failed (`true` = the side of vertex 0).
    pub side_one: bool,
}

/// Result of checking a vertex bipartition for convexity on both sides.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CutVerdict {
    Convex,
    /// The mask does not describe a cut: one side is empty.
    SideEmpty {
        side_one: bool,
    },
    NotConvex(NonConvexWitness),
}

impl CutVerdict {
    pub fn is_convex(&self) -> bool {
        matches!(self, CutVerdict::Convex)
    }
}

/// Checks both sides of the bipartition for convexity by the definition:
/// a side fails exactly when some outside vertex lies on a shortest path
/// between two inside vertices.
pub fn is_convex_cut(g: &Graph, side: &[bool]) -> CutVerdict {
    is_convex_cut_with(g, &g.distance_table(), side)
}

/// As [`is_convex_cut`], reusing a precomputed distance table.
pub fn is_convex_cut_with(g: &Graph, table: &DistanceTable, side: &[bool]) -> CutVerdict {
    debug_assert_eq!(side.len(), g.vertex_count());
    let side_one = side[0];
    for which in [true, false] {
        if !side.contains(&which) {
            return CutVerdict::SideEmpty {
                side_one: which == side_one,
            };
        }
        if let Some((u, v, w)) = side_witness(table, side, which) {
            return CutVerdict::NotConvex(NonConvexWitness {
                u,
                v,
                w,
                side_one: which == side_one,
            });
        }
    }
    CutVerdict::Convex
}

fn side_witness(
    table: &DistanceTable,
    side: &[bool],
    which: bool,
) -> Option<(usize, usize, usize)> {
    let n = side.len();
    let members: Vec<usize> = (0..n).filter(|&v| side[v] == which).collect();
    let outside: Vec<usize> = (0..n).filter(|&v| side[v] != which).collect();
    for (i, &u) in members.iter().enumerate() {
        for &v in &members[i + 1..] {
            let d = table.get(u, v);
            for &w in &outside {
                if table.get(u, w) + table.get(w, v) == d {
                    return Some((u, v, w));
                }
            }
        }
    }
    None
}

/// Independent convexity check by explicit shortest-path enumeration:
/// walks every shortest path between every same-side pair and verifies it
/// stays inside. Exponential; intended for graphs with at most ~10 vertices.
pub fn convex_by_path_enumeration(g: &Graph, side: &[bool]) -> bool {
    let table = g.distance_table();
    let n = g.vertex_count();
    if !(side.iter().any(|&s| s) && side.iter().any(|&s| !s)) {
        return false;
    }
    for u in 0..n {
        for v in u + 1..n {
            if side[u] != side[v] {
                continue;
            }
            // Depth-first over the shortest-path lattice from u to v; each
            // entry carries whether its path prefix left the side.
            let mut stack: Vec<(usize, bool)> = vec![(u, false)];
            while let Some((x, left_side)) = stack.pop() {
                if x == v {
                    if left_side {
                        return false;
                    }
                    continue;
                }
                for &(_, y) in g.incident(x) {
                    if table.get(y, v) + 1 == table.get(x, v) {
                        stack.push((y, left_side || side[y] != side[u]));
                    }
                }
            }
        }
    }
    true
}

/// All convex cuts of `g` by exhaustive search over connected vertex
/// subsets containing vertex 0, sorted by cut-set size then edge ids.
/// Exponential; capped at 16 vertices.
pub fn enumerate_convex_cuts(g: &Graph) -> Vec<Cut> {
    let n = g.vertex_count();
    assert!(
        n <= 16,
        "exhaustive enumeration is capped at 16 vertices, got {n}"
    );
    let table = g.distance_table();
    let full: u32 = (1 << n) - 1;
    let neighbor_mask: Vec<u32> = (0..n)
        .map(|v| g.incident(v).iter().fold(0u32, |acc, &(_, w)| acc | 1 << w))
        .collect();
    let mut out: Vec<Cut> = Vec::new();
    // Enumerate connected subsets containing vertex 0 exactly once each:
    // at every level, each boundary vertex is either added (recursing) or
    // permanently forbidden for the rest of this branch.
    let mut stack: Vec<(u32, u32)> = vec![(1, 1)]; // (subset, subset | forbidden)
    while let Some((subset, blocked)) = stack.pop() {
        if subset != full {
            let side: Vec<bool> = (0..n).map(|v| subset >> v & 1 == 1).collect();
            if is_convex_cut_with(g, &table, &side).is_convex() {
                out.push(Cut::from_side(g, &side));
            }
        }
        let mut boundary = (0..n).fold(0u32, |acc, v| {
            if subset >> v & 1 == 1 {
                acc | neighbor_mask[v]
            } else {
                acc
            }
        }) & !blocked;
        let mut blocked_here = blocked;
        while boundary != 0 {
            let c = boundary.trailing_zeros();
            boundary &= boundary - 1;
            blocked_here |= 1 << c;
            stack.push((subset | 1 << c, blocked_here));
        }
    }
    out.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
    out
}

/// Why a graph fails to be a partial cube, or the certificate when it is.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PartialCubeOutcome {
    PartialCube(PartialCubeCertificate),
    /// Closed odd walk (distinct vertices, consecutive ones adjacent).
    NotBipartite {
        odd_cycle: Vec<usize>,
    },
    /// Edges with `e` theta `f`, `f` theta `h`, but not `e` theta `h`.
    ThetaNotTransitive {
        e: usize,
        f: usize,
        h: usize,
    },
}

/// Certificate for a partial cube: the theta classes (each one a convex
/// cut-set) and a binary labeling under which label distance equals graph
/// distance. Vertex 0 carries the all-zero label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialCubeCertificate {
    /// Theta classes as ascending edge-id lists, ordered by smallest edge.
    pub classes: Vec<Vec<usize>>,
    /// One row of `classes.len()` bits per vertex.
    pub labels: BitMatrix,
}

impl PartialCubeCertificate {
    /// Hamming distance between the labels of `u` and `v`.
    pub fn label_distance(&self, u: usize, v: usize) -> u32 {
        self.labels.rows_hamming(u, v)
    }
}

/// Recognizes partial cubes: bipartite graphs whose theta relation is
/// transitive. Returns a labeling certificate or a concrete obstruction.
pub fn is_partial_cube(g: &Graph) -> PartialCubeOutcome {
    if let Err(odd_cycle) = g.two_coloring() {
        return PartialCubeOutcome::NotBipartite { odd_cycle };
    }
    let m = g.edge_count();
    let table = g.distance_table();
    let mat = theta_matrix(g, &table);
    for e in 0..m {
        for f in mat.row_ones(e) {
            if f <= e {
                continue;
            }
            if !mat.rows_equal(e, f) {
                let h = (0..m)
                    .find(|&h| mat.get(e, h) != mat.get(f, h))
                    .expect("differing rows differ somewhere");
                return if mat.get(f, h) {
                    PartialCubeOutcome::ThetaNotTransitive { e, f, h }
                } else {
                    PartialCubeOutcome::ThetaNotTransitive { e: h, f: e, h: f }
                };
            }
        }
    }
    // Transitive: classes are exactly the rows of related edges.
    let mut class_of = vec![usize::MAX; m];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for e in 0..m {
        if class_of[e] != usize::MAX {
            continue;
        }
        let members = mat.row_ones(e);
        for &f in &members {
            class_of[f] = classes.len();
        }
        classes.push(members);
    }
    let mut labels = BitMatrix::new(g.vertex_count(), classes.len());
    for (i, class) in classes.iter().enumerate() {
        let (a, b) = g.endpoints(class[0]);
        let dist_a = g.bfs_distances(a);
        let dist_b = g.bfs_distances(b);
        let cut = theta_cut_by_rows(g, class[0], &dist_a, &dist_b);
        assert!(
            cut.is_bipartition(),
            "bipartite graphs admit no endpoint-distance ties"
        );
        let far = if cut.side_a[0] {
            &cut.side_b
        } else {
            &cut.side_a
        };
        for (v, &on_far_side) in far.iter().enumerate() {
            if on_far_side {
                labels.set(v, i, true);
            }
        }
    }
    PartialCubeOutcome::PartialCube(PartialCubeCertificate { classes, labels })
}
