//! Convex-cut enumeration for two-connected plane graphs.
//!
//! The cut-set of a convex cut crosses each face boundary in zero or two
//! edges, so it traces either a path of edges from the outer face back to
//! the outer face (a non-cyclic cut) or a closed ring of interior edges
//! (a cyclic cut). The enumeration walks exactly those face-to-face
//! sequences: consecutive edges must share a face and carry a theta-related
//! half-edge pair in the midpoint subdivision, and every pair of edges in a
//! sequence must be compatible (tau-related or theta-related via
//! half-edges). Each discovered cut is re-verified against the convexity
//! definition unless strict verification is switched off.

use crate::cuts::{side_from_edge_removal, Cut};
use crate::embedding::PlaneEmbedding;
use crate::graph::Graph;
use crate::oracle::is_convex_cut_with;
use crate::relations::EdgeCompatibility;
use std::collections::VecDeque;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PlaneCutsError {
    #[error("plane enumeration requires a two-connected graph")]
    NotTwoConnected,
    #[error("search frontier exceeded the cap of {cap} states")]
    FrontierCapExceeded { cap: usize },
    #[error("emitted cut-set {edges:?} does not split the graph into two components")]
    RemovalNotTwoComponents { edges: Vec<usize> },
    #[error("emitted cut-set {edges:?} failed convexity re-verification")]
    EmittedCutNotConvex { edges: Vec<usize> },
}

#[derive(Debug, Clone, Copy)]
pub struct PlaneOptions {
    /// Re-verify every emitted cut against the convexity definition.
    pub strict_verify: bool,
    /// Hard cap on the breadth-first frontier per start edge.
    pub max_frontier: usize,
}

impl Default for PlaneOptions {
    fn default() -> Self {
        PlaneOptions {
            strict_verify: true,
            max_frontier: 1_000_000,
        }
    }
}

/// A convex cut of a plane graph, tagged with its shape.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneCut {
    pub cut: Cut,
    /// True when the cut-set forms a closed ring of interior edges.
    pub cyclic: bool,
}

/// Enumeration result, sorted by cut-set size then edge ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneCuts {
    pub cuts: Vec<PlaneCut>,
}

struct WalkState {
    seq: Vec<usize>,
    /// Face the last edge was entered from; the walk continues on the
    /// other side.
    entry_face: usize,
    /// Bit per face: shared faces already used by consecutive pairs.
    consumed: Vec<u64>,
}

fn bit_get(words: &[u64], i: usize) -> bool {
    words[i / 64] >> (i % 64) & 1 == 1
}

fn bit_set(words: &mut [u64], i: usize) {
    words[i / 64] |= 1 << (i % 64);
}

/// Enumerates every convex cut of a connected two-connected plane graph.
pub fn plane_convex_cuts(
    g: &Graph,
    emb: &PlaneEmbedding,
    opts: PlaneOptions,
) -> Result<PlaneCuts, PlaneCutsError> {
    if !g.is_two_connected() {
        return Err(PlaneCutsError::NotTwoConnected);
    }
    let m = g.edge_count();
    let comp = EdgeCompatibility::compute(g);
    let outer = emb.outer_face();
    let is_outer_edge: Vec<bool> = (0..m).map(|e| emb.is_outer_edge(e)).collect();
    let face_words = emb.face_count().div_ceil(64);
    let table = if opts.strict_verify {
        Some(g.distance_table())
    } else {
        None
    };

    let mut tabu = vec![false; m];
    let mut found: Vec<(Vec<usize>, bool)> = Vec::new();

    for cyclic_mode in [false, true] {
        for start in 0..m {
            if tabu[start] || is_outer_edge[start] != !cyclic_mode {
                continue;
            }
            let entry_face = if cyclic_mode {
                // Fix the direction: step into the smaller-indexed face
                // first, so each ring is discovered in one rotation only.
                let (fa, fb) = emb.edge_faces(start);
                fa.max(fb)
            } else {
                outer
            };
            let mut queue = VecDeque::new();
            queue.push_back(WalkState {
                seq: vec![start],
                entry_face,
                consumed: vec![0; face_words],
            });
            let mut emitted: u64 = 0;
            let emission_bound = (m as u64).pow(4).max(16);
            while let Some(state) = queue.pop_front() {
                let last = *state.seq.last().expect("sequences are never empty");
                let ahead = emb.other_face(last, state.entry_face);
                debug_assert_ne!(ahead, outer, "walks stop before re-entering the outer face");
                if bit_get(&state.consumed, ahead) {
                    continue;
                }
                'candidates: for dart in &emb.face(ahead).boundary {
                    let f = dart.edge;
                    if f == last || tabu[f] {
                        continue;
                    }
                    let closes = cyclic_mode && f == state.seq[0] && state.seq.len() >= 2;
                    if !closes && state.seq.contains(&f) {
                        continue;
                    }
                    if !comp.has_child_theta_pair(last, f) {
                        continue;
                    }
                    if !closes {
                        for &e in &state.seq[..state.seq.len() - 1] {
                            if !comp.compatible(e, f) {
                                continue 'candidates;
                            }
                        }
                    }
                    if cyclic_mode {
                        if closes {
                            emitted += 1;
                            assert!(emitted <= emission_bound, "emission bound exceeded");
                            found.push((sorted(&state.seq), true));
                            continue;
                        }
                        if is_outer_edge[f] {
                            continue;
                        }
                    } else if is_outer_edge[f] {
                        let mut edges = state.seq.clone();
                        edges.push(f);
                        emitted += 1;
                        assert!(emitted <= emission_bound, "emission bound exceeded");
                        found.push((sorted(&edges), false));
                        continue;
                    }
                    let mut seq = state.seq.clone();
                    seq.push(f);
                    let mut consumed = state.consumed.clone();
                    bit_set(&mut consumed, ahead);
                    queue.push_back(WalkState {
                        seq,
                        entry_face: ahead,
                        consumed,
                    });
                    if queue.len() > opts.max_frontier {
                        return Err(PlaneCutsError::FrontierCapExceeded {
                            cap: opts.max_frontier,
                        });
                    }
                }
            }
            tabu[start] = true;
        }
    }

    found.sort();
    found.dedup();
    let mut cuts = Vec::with_capacity(found.len());
    for (edges, cyclic) in found {
        let side = side_from_edge_removal(g, &edges).ok_or_else(|| {
            PlaneCutsError::RemovalNotTwoComponents {
                edges: edges.clone(),
            }
        })?;
        if let Some(t) = &table {
            if !is_convex_cut_with(g, t, &side).is_convex() {
                return Err(PlaneCutsError::EmittedCutNotConvex { edges });
            }
        }
        let cut = Cut::from_side(g, &side);
        debug_assert_eq!(cut.edges(), edges.as_slice());
        cuts.push(PlaneCut { cut, cyclic });
    }
    cuts.sort_by(|a, b| a.cut.sort_key().cmp(&b.cut.sort_key()));
    Ok(PlaneCuts { cuts })
}

fn sorted(edges: &[usize]) -> Vec<usize> {
    let mut v = edges.to_vec();
    v.sort_unstable();
    v
}
