//! Convex-cut enumeration for bipartite graphs.
//!
//! In a bipartite graph the theta relation has no distance ties, so every
//! edge e = {a, b} splits the vertices into the two strict nearer sides.
//! The cut along e is convex exactly when the theta cut-set of every member
//! edge coincides with that of e; this module verifies that with a
//! streaming membership check, never materializing more than one cut-set
//! at a time. Each verified cut-set claims all of its members, so every
//! class is checked once, from its smallest edge.

use crate::cuts::Cut;
use crate::graph::Graph;
use crate::relations::{theta_cut_by_rows, theta_related_by_rows};
use rayon::prelude::*;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BipartiteCutsError {
    #[error("graph is not bipartite (odd cycle of length {})", odd_cycle.len())]
    NotBipartite { odd_cycle: Vec<usize> },
}

/// Tuning knobs; the defaults favor low memory and a single thread.
#[derive(Debug, Clone, Copy, Default)]
pub struct BipartiteOptions {
    /// Verify edges in parallel with per-worker scratch buffers. The output
    /// is identical to the sequential run.
    pub parallel: bool,
    /// Precompute the all-pairs distance table (quadratic memory) instead
    /// of running two searches per examined edge.
    pub use_distance_table: bool,
}

/// Enumeration result: the convex cuts and a per-edge verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteCuts {
    /// All convex cuts, deduplicated, sorted by cut-set size then edge ids.
    pub cuts: Vec<Cut>,
    /// `convex_edge[e]` holds when e's theta cut-set is a convex cut.
    pub convex_edge: Vec<bool>,
}

/// Enumerates every convex cut of a connected bipartite graph.
pub fn bipartite_convex_cuts(
    g: &Graph,
    opts: BipartiteOptions,
) -> Result<BipartiteCuts, BipartiteCutsError> {
    if let Err(odd_cycle) = g.two_coloring() {
        return Err(BipartiteCutsError::NotBipartite { odd_cycle });
    }
    let m = g.edge_count();
    let table = if opts.use_distance_table {
        Some(g.distance_table())
    } else {
        None
    };
    let distance_rows = |v: usize| -> std::borrow::Cow<'_, [u32]> {
        match &table {
            Some(t) => std::borrow::Cow::Borrowed(t.row(v)),
            None => std::borrow::Cow::Owned(g.bfs_distances(v)),
        }
    };

    // Members of a successfully verified cut-set share that cut-set, so
    // they are claimed and skipped. Claims are advisory: a worker that
    // misses one only repeats work, the emitted cuts are identical because
    // each cut is emitted solely at its smallest member.
    let claimed: Vec<std::sync::atomic::AtomicBool> = (0..m)
        .map(|_| std::sync::atomic::AtomicBool::new(false))
        .collect();
    let relaxed = std::sync::atomic::Ordering::Relaxed;

    // Verifies edge `e`: marks its cut-set, then streams the cut-set of
    // every member and demands set equality, aborting on the first miss.
    let verify_edge = |mark: &mut Vec<bool>, e: usize| -> (bool, Option<Cut>) {
        if claimed[e].load(relaxed) {
            return (true, None);
        }
        let (a, b) = g.endpoints(e);
        let dist_a = distance_rows(a);
        let dist_b = distance_rows(b);
        let cut = theta_cut_by_rows(g, e, &dist_a, &dist_b);
        debug_assert!(cut.is_bipartition(), "bipartite graphs have no ties");
        debug_assert!(cut.edges.binary_search(&e).is_ok());
        for &f in &cut.edges {
            mark[f] = true;
        }
        let mut convex = true;
        'members: for &f in &cut.edges {
            if f == e {
                continue;
            }
            let (u, v) = g.endpoints(f);
            let dist_u = distance_rows(u);
            let dist_v = distance_rows(v);
            let mut count = 0usize;
            for (h, &marked) in mark.iter().enumerate() {
                if theta_related_by_rows(&dist_u, &dist_v, g.endpoints(h)) {
                    if !marked {
                        convex = false;
                        break 'members;
                    }
                    count += 1;
                }
            }
            if count != cut.edges.len() {
                convex = false;
                break;
            }
        }
        for &f in &cut.edges {
            mark[f] = false;
        }
        if convex {
            for &f in &cut.edges {
                claimed[f].store(true, relaxed);
            }
        }
        // Emit each convex cut once, at its smallest member edge.
        let record = if convex && cut.edges[0] == e {
            Some(Cut::from_side(g, &cut.side_a))
        } else {
            None
        };
        (convex, record)
    };

    let results: Vec<(bool, Option<Cut>)> = if opts.parallel {
        (0..m)
            .into_par_iter()
            .map_init(|| vec![false; m], |mark, e| verify_edge(mark, e))
            .collect()
    } else {
        let mut mark = vec![false; m];
        (0..m).map(|e| verify_edge(&mut mark, e)).collect()
    };

    let convex_edge: Vec<bool> = results.iter().map(|r| r.0).collect();
    let mut cuts: Vec<Cut> = results.into_iter().filter_map(|r| r.1).collect();
    cuts.sort_by(|x, y| x.sort_key().cmp(&y.sort_key()));
    for c in &cuts {
        debug_assert!(c.edges().iter().all(|&e| convex_edge[e]));
    }
    Ok(BipartiteCuts { cuts, convex_edge })
}
