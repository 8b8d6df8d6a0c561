//! Edge relations used by the cut-enumeration algorithms.
//!
//! For an edge e = {a, b}, the relation theta links e to every edge with one
//! endpoint strictly nearer a and the other strictly nearer b. The relation
//! tau links two edges when all four endpoint-to-endpoint distances agree.
//! Both are computed on the input graph; the subdivision variant of theta
//! (on half-edges of the midpoint subdivision) drives the plane algorithm.

use crate::graph::{ChildOrder, DistanceTable, Graph, Subdivision};

/// Dense row-major bit matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    width: usize, // words per row
    bits: Vec<u64>,
}

impl BitMatrix {
    pub fn new(rows: usize, cols: usize) -> Self {
        let width = cols.div_ceil(64);
        BitMatrix {
            rows,
            cols,
            width,
            bits: vec![0; rows * width],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        debug_assert!(r < self.rows && c < self.cols);
        self.bits[r * self.width + c / 64] >> (c % 64) & 1 == 1
    }

    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        debug_assert!(r < self.rows && c < self.cols);
        let w = &mut self.bits[r * self.width + c / 64];
        if value {
            *w |= 1 << (c % 64);
        } else {
            *w &= !(1 << (c % 64));
        }
    }

    pub fn rows_equal(&self, r1: usize, r2: usize) -> bool {
        self.bits[r1 * self.width..(r1 + 1) * self.width]
            == self.bits[r2 * self.width..(r2 + 1) * self.width]
    }

    /// Column indices set in row `r`, ascending.
    pub fn row_ones(&self, r: usize) -> Vec<usize> {
        let mut out = Vec::new();
        for w in 0..self.width {
            let mut word = self.bits[r * self.width + w];
            while word != 0 {
                let bit = word.trailing_zeros() as usize;
                out.push(w * 64 + bit);
                word &= word - 1;
            }
        }
        out
    }

    /// Number of positions where two rows differ.
    pub fn rows_hamming(&self, r1: usize, r2: usize) -> u32 {
        let a = &self.bits[r1 * self.width..(r1 + 1) * self.width];
        let b = &self.bits[r2 * self.width..(r2 + 1) * self.width];
        a.iter().zip(b).map(|(&x, &y)| (x ^ y).count_ones()).sum()
    }

    pub fn is_symmetric(&self) -> bool {
        debug_assert_eq!(self.rows, self.cols);
        for r in 0..self.rows {
            for c in r + 1..self.cols {
                if self.get(r, c) != self.get(c, r) {
                    return false;
                }
            }
        }
        true
    }
}

/// Vertices strictly nearer to the tail of `dist_a` than to that of
/// `dist_b`, as a membership mask.
pub fn nearer_side(dist_a: &[u32], dist_b: &[u32]) -> Vec<bool> {
    dist_a
        .iter()
        .zip(dist_b)
        .map(|(&da, &db)| da < db)
        .collect()
}

/// Theta between edge `e = {a, b}` (given by the distance rows of `a` and
/// `b`) and edge `f`: one endpoint of `f` strictly nearer `a`, the other
/// strictly nearer `b`.
pub fn theta_related_by_rows(dist_a: &[u32], dist_b: &[u32], f: (usize, usize)) -> bool {
    let (u, v) = f;
    (dist_a[u] < dist_b[u] && dist_b[v] < dist_a[v])
        || (dist_a[v] < dist_b[v] && dist_b[u] < dist_a[u])
}

/// Theta via an all-pairs distance table.
pub fn theta_related(table: &DistanceTable, e: (usize, usize), f: (usize, usize)) -> bool {
    let (a, b) = e;
    let (u, v) = f;
    (table.get(a, u) < table.get(b, u) && table.get(b, v) < table.get(a, v))
        || (table.get(a, v) < table.get(b, v) && table.get(b, u) < table.get(a, u))
}

/// Tau: all four endpoint distances between `e` and `f` agree. Always false
/// for equal or touching edges.
pub fn tau_related(table: &DistanceTable, e: (usize, usize), f: (usize, usize)) -> bool {
    let (a, b) = e;
    let (u, v) = f;
    let d = table.get(a, u);
    table.get(a, v) == d && table.get(b, u) == d && table.get(b, v) == d
}

/// The full theta cut of edge `e`: related edges plus the two nearer-side
/// masks, computed with two breadth-first searches (no distance table).
#[derive(Debug, Clone)]
pub struct ThetaCut {
    pub edge: usize,
    /// Edges related to `e`, ascending (always contains `e` itself).
    pub edges: Vec<usize>,
    /// Vertices strictly nearer the first endpoint of `e`.
    pub side_a: Vec<bool>,
    /// Vertices strictly nearer the second endpoint of `e`.
    pub side_b: Vec<bool>,
}

impl ThetaCut {
    /// True when the two sides partition all vertices (no ties).
    pub fn is_bipartition(&self) -> bool {
        self.side_a.iter().zip(&self.side_b).all(|(&a, &b)| a != b)
    }
}

pub fn theta_cut(g: &Graph, e: usize) -> ThetaCut {
    let (a, b) = g.endpoints(e);
    let dist_a = g.bfs_distances(a);
    let dist_b = g.bfs_distances(b);
    theta_cut_by_rows(g, e, &dist_a, &dist_b)
}

/// As [`theta_cut`], reusing precomputed distance rows for both endpoints.
pub fn theta_cut_by_rows(g: &Graph, e: usize, dist_a: &[u32], dist_b: &[u32]) -> ThetaCut {
    let edges = (0..g.edge_count())
        .filter(|&f| theta_related_by_rows(dist_a, dist_b, g.endpoints(f)))
        .collect();
    ThetaCut {
        edge: e,
        edges,
        side_a: nearer_side(dist_a, dist_b),
        side_b: nearer_side(dist_b, dist_a),
    }
}

/// Dense m-by-m theta matrix (reflexive and symmetric by construction).
pub fn theta_matrix(g: &Graph, table: &DistanceTable) -> BitMatrix {
    let m = g.edge_count();
    let mut mat = BitMatrix::new(m, m);
    for e in 0..m {
        mat.set(e, e, true);
        for f in e + 1..m {
            if theta_related(table, g.endpoints(e), g.endpoints(f)) {
                mat.set(e, f, true);
                mat.set(f, e, true);
            }
        }
    }
    mat
}

/// Dense m-by-m tau matrix (irreflexive, symmetric).
pub fn tau_matrix(g: &Graph, table: &DistanceTable) -> BitMatrix {
    let m = g.edge_count();
    let mut mat = BitMatrix::new(m, m);
    for e in 0..m {
        for f in e + 1..m {
            if tau_related(table, g.endpoints(e), g.endpoints(f)) {
                mat.set(e, f, true);
                mat.set(f, e, true);
            }
        }
    }
    mat
}

/// The pairwise relations the plane algorithm consults: tau on the input
/// edges and theta on the half-edges of the midpoint subdivision.
#[derive(Debug, Clone)]
pub struct EdgeCompatibility {
    /// m x m: tau on input edges.
    pub tau: BitMatrix,
    /// 2m x 2m: theta on subdivision half-edges; half-edge ids follow the
    /// subdivision convention (edge e splits into 2e and 2e+1).
    pub child_theta: BitMatrix,
}

impl EdgeCompatibility {
    pub fn compute(g: &Graph) -> Self {
        Self::compute_with(g, ChildOrder::LowFirst)
    }

    pub fn compute_with(g: &Graph, order: ChildOrder) -> Self {
        let table = g.distance_table();
        let tau = tau_matrix(g, &table);
        let sub = g.subdivide_with(order);
        let child_theta = subdivision_theta_matrix(&sub);
        let result = EdgeCompatibility { tau, child_theta };
        debug_assert!(
            result.exclusivity_violation(g.edge_count()).is_none(),
            "tau and half-edge theta can never hold together"
        );
        result
    }

    /// True when some half-edge of `e` is theta-related to some half-edge
    /// of `f` in the subdivision. Meaningful for distinct edges.
    pub fn has_child_theta_pair(&self, e: usize, f: usize) -> bool {
        self.child_theta.get(2 * e, 2 * f)
            || self.child_theta.get(2 * e, 2 * f + 1)
            || self.child_theta.get(2 * e + 1, 2 * f)
            || self.child_theta.get(2 * e + 1, 2 * f + 1)
    }

    /// Two distinct edges may share a convex cut-set exactly when they are
    /// tau-related or have a theta-related half-edge pair.
    pub fn compatible(&self, e: usize, f: usize) -> bool {
        self.tau.get(e, f) || self.has_child_theta_pair(e, f)
    }

    /// A pair satisfying both relations, if one exists (there should be
    /// none; used as a self-check).
    pub fn exclusivity_violation(&self, edge_count: usize) -> Option<(usize, usize)> {
        for e in 0..edge_count {
            for f in e + 1..edge_count {
                if self.tau.get(e, f) && self.has_child_theta_pair(e, f) {
                    return Some((e, f));
                }
            }
        }
        None
    }
}

/// Theta matrix of a subdivision, indexed by half-edge ids.
pub fn subdivision_theta_matrix(sub: &Subdivision) -> BitMatrix {
    let table = sub.graph().distance_table();
    theta_matrix(sub.graph(), &table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{generate, Family};

    fn graph_of(f: Family) -> Graph {
        generate(&f).unwrap().graph
    }

    #[test]
    fn bit_matrix_basics() {
        let mut m = BitMatrix::new(3, 130);
        m.set(0, 0, true);
        m.set(1, 64, true);
        m.set(1, 129, true);
        m.set(2, 64, true);
        m.set(2, 129, true);
        assert!(m.get(1, 64) && m.get(1, 129));
        assert!(!m.get(0, 64));
        assert!(m.rows_equal(1, 2));
        assert!(!m.rows_equal(0, 1));
        assert_eq!(m.row_ones(1), vec![64, 129]);
        m.set(1, 64, false);
        assert!(!m.get(1, 64));
    }

    #[test]
    fn theta_cut_on_even_cycle() {
        let c6 = graph_of(Family::Cycle(6));
        let cut = theta_cut(&c6, 0);
        assert_eq!(cut.edges, vec![0, 3]);
        assert!(cut.is_bipartition());
        let side_a: Vec<usize> = (0..6).filter(|&v| cut.side_a[v]).collect();
        let side_b: Vec<usize> = (0..6).filter(|&v| cut.side_b[v]).collect();
        assert_eq!(side_a, vec![0, 4, 5]);
        assert_eq!(side_b, vec![1, 2, 3]);
    }

    #[test]
    fn equal_endpoint_distances_do_not_imply_theta() {
        // In the 6-cycle, edges 0 = {0,1} and 1 = {1,2} satisfy
        // d(0,1) = d(1,2) = 1, yet they are not theta-related: the relation
        // requires the matching distance pattern in both orientations.
        let c6 = graph_of(Family::Cycle(6));
        let t = c6.distance_table();
        assert_eq!(t.get(0, 1), t.get(1, 2));
        assert!(!theta_related(&t, (0, 1), (1, 2)));
        // Both orientations match for the antipodal edge {3,4}.
        assert_eq!(t.get(0, 4), t.get(1, 3));
        assert_eq!(t.get(0, 3), t.get(1, 4));
        assert!(theta_related(&t, (0, 1), (3, 4)));
    }

    #[test]
    fn theta_on_odd_cycle_has_no_bipartition() {
        let c5 = graph_of(Family::Cycle(5));
        let cut = theta_cut(&c5, 0);
        // Edge {0,1}: vertex 3 is tied between the endpoints, so it joins
        // neither side, and strictness leaves the edge related only to
        // itself: on odd cycles theta does not recover the convex cuts.
        assert_eq!(cut.edges, vec![0]);
        assert!(!cut.is_bipartition());
        assert!(!cut.side_a[3] && !cut.side_b[3]);
        let side_a: Vec<usize> = (0..5).filter(|&v| cut.side_a[v]).collect();
        let side_b: Vec<usize> = (0..5).filter(|&v| cut.side_b[v]).collect();
        assert_eq!(side_a, vec![0, 4]);
        assert_eq!(side_b, vec![1, 2]);
    }

    #[test]
    fn theta_matrix_matches_pairwise_and_is_symmetric() {
        for fam in [Family::Cycle(6), Family::Complete(4), Family::Grid(2, 3)] {
            let g = graph_of(fam);
            let t = g.distance_table();
            let mat = theta_matrix(&g, &t);
            assert!(mat.is_symmetric());
            for e in 0..g.edge_count() {
                assert!(mat.get(e, e));
                let row = mat.row_ones(e);
                let direct = theta_cut(&g, e).edges;
                assert_eq!(row, direct);
            }
        }
    }

    #[test]
    fn tau_holds_for_balanced_disjoint_pairs_only() {
        let k4 = graph_of(Family::Complete(4));
        let t = k4.distance_table();
        // Disjoint K4 edges: all four endpoint distances are 1.
        assert!(tau_related(&t, (0, 1), (2, 3)));
        // Touching edges never qualify.
        assert!(!tau_related(&t, (0, 1), (1, 2)));
        // An edge against itself never qualifies.
        assert!(!tau_related(&t, (0, 1), (0, 1)));

        let c4 = graph_of(Family::Cycle(4));
        let t4 = c4.distance_table();
        // Opposite 4-cycle edges are theta-related, not tau-related.
        assert!(!tau_related(&t4, (0, 1), (2, 3)));
        assert!(theta_related(&t4, (0, 1), (2, 3)));
    }

    #[test]
    fn subdivision_theta_on_cycle_is_antipodal() {
        let c4 = graph_of(Family::Cycle(4));
        let sub = c4.subdivide();
        let mat = subdivision_theta_matrix(&sub);
        // The subdivision is an 8-cycle: every half-edge relates to itself
        // and to exactly one partner, a half of the opposite original edge.
        for e in 0..4 {
            for child in [2 * e, 2 * e + 1] {
                let row = mat.row_ones(child);
                assert_eq!(row.len(), 2);
                let partner = row.into_iter().find(|&c| c != child).unwrap();
                assert_eq!(sub.parent_of(partner), (e + 2) % 4);
            }
        }
    }

    #[test]
    fn compatibility_exclusivity_and_xor_on_known_cuts() {
        // tau and half-edge theta never hold together; on known convex
        // cut-sets every pair satisfies exactly one of the two.
        for fam in [
            Family::Cycle(5),
            Family::Cycle(6),
            Family::Complete(4),
            Family::Grid(3, 3),
            Family::Wheel(5),
        ] {
            let g = graph_of(fam.clone());
            let comp = EdgeCompatibility::compute(&g);
            assert_eq!(comp.exclusivity_violation(g.edge_count()), None, "{fam:?}");
        }

        let c6 = graph_of(Family::Cycle(6));
        let comp = EdgeCompatibility::compute(&c6);
        // Convex cut-set {0, 3}: compatible via a half-edge theta pair.
        assert!(comp.compatible(0, 3));
        assert!(comp.has_child_theta_pair(0, 3));
        assert!(!comp.tau.get(0, 3));
        // {0, 2} separates the cycle into two arcs but is not convex:
        // neither relation holds for the pair.
        assert!(!comp.compatible(0, 2));

        let k4 = graph_of(Family::Complete(4));
        let comp = EdgeCompatibility::compute(&k4);
        // Edges 0 = {0,1} and 5 = {2,3} belong to the two-against-two
        // convex cut; their compatibility comes from tau alone.
        assert!(comp.tau.get(0, 5));
        assert!(!comp.has_child_theta_pair(0, 5));
        assert!(comp.compatible(0, 5));
    }

    #[test]
    fn child_theta_existence_is_convention_independent() {
        for fam in [Family::Cycle(5), Family::Complete(4), Family::Grid(2, 3)] {
            let g = graph_of(fam);
            let low = EdgeCompatibility::compute_with(&g, ChildOrder::LowFirst);
            let high = EdgeCompatibility::compute_with(&g, ChildOrder::HighFirst);
            for e in 0..g.edge_count() {
                for f in 0..g.edge_count() {
                    if e != f {
                        assert_eq!(
                            low.has_child_theta_pair(e, f),
                            high.has_child_theta_pair(e, f)
                        );
                        assert_eq!(low.tau.get(e, f), high.tau.get(e, f));
                    }
                }
            }
        }
    }
}
