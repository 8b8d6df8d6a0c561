//! Alternating paths of a plane graph and their arrangement.
//!
//! Crossing a bounded face from an edge continues at the opposite edge: the
//! unique one on even faces, and on odd faces the left or right one, taken
//! alternately (the first odd face branches both ways, after which the turn
//! direction is forced to alternate). Walks started on every outer edge
//! trace the open alternating paths; edges still uncovered afterwards lie
//! on closed alternating paths, found by tracing until a state repeats.
//! Every edge is passed exactly twice in total, counting paths without
//! turns twice.
//!
//! Seating the path instances into per-edge slots (one slot when both sides
//! are bounded odd faces, otherwise one near each endpoint) and counting
//! chord crossings inside faces yields the arrangement verdict: a graph is
//! well arranged when no instance crosses itself and no two instances cross
//! more than once.

use crate::cuts::{side_from_edge_removal, Cut};
use crate::embedding::{Opposite, PlaneEmbedding};
use crate::graph::Graph;
use std::collections::HashMap;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AlternatingError {
    #[error("edge {edge} is passed {coverage} times by alternating paths instead of 2")]
    CoverageViolation { edge: usize, coverage: u32 },
    #[error("open alternating path {edges:?} does not split the graph into two components")]
    PathNotACut { edges: Vec<usize> },
}

/// One alternating path: its edges in walk order and the step faces between
/// consecutive edges (for closed paths the face list wraps around).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlternatingPath {
    pub edges: Vec<usize>,
    /// `faces[i]` is crossed between `edges[i]` and the next edge.
    pub faces: Vec<usize>,
    pub closed: bool,
    /// 2 when the path never turns (crosses only even faces), else 1.
    pub multiplicity: u8,
}

/// The complete alternating-path system of an embedded graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlternatingSystem {
    pub paths: Vec<AlternatingPath>,
    /// Passages per edge, weighted by multiplicity; always exactly 2.
    pub coverage: Vec<u32>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum Turn {
    Left,
    Right,
}

impl Turn {
    fn flip(self) -> Turn {
        match self {
            Turn::Left => Turn::Right,
            Turn::Right => Turn::Left,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
struct WalkState {
    edge: usize,
    entry_face: usize,
    pending: Option<Turn>,
}

/// Advances one step; `None` when the walk exits to the outer face.
fn step(emb: &PlaneEmbedding, s: WalkState) -> Option<Vec<(WalkState, usize)>> {
    let ahead = emb.other_face(s.edge, s.entry_face);
    if ahead == emb.outer_face() {
        return None;
    }
    let next = |edge: usize, pending: Option<Turn>| {
        (
            WalkState {
                edge,
                entry_face: ahead,
                pending,
            },
            ahead,
        )
    };
    Some(
        match emb
            .opposite_edges(ahead, s.edge)
            .expect("walk edges lie on their step faces")
        {
            Opposite::Unique(f) => vec![next(f, s.pending)],
            Opposite::Pair { left, right } => match s.pending {
                None => vec![next(left, Some(Turn::Right)), next(right, Some(Turn::Left))],
                Some(Turn::Left) => vec![next(left, Some(Turn::Right))],
                Some(Turn::Right) => vec![next(right, Some(Turn::Left))],
            },
        },
    )
}

/// Computes the full alternating-path system. Open paths are generated from
/// every outer edge (each appears once from either end and is deduplicated);
/// closed paths are traced from any edges the open paths leave uncovered.
pub fn alternating_paths(
    g: &Graph,
    emb: &PlaneEmbedding,
) -> Result<AlternatingSystem, AlternatingError> {
    let m = g.edge_count();
    let outer = emb.outer_face();

    // Open walks: since the turn direction is pending only until the first
    // odd face, each start yields at most two walks.
    let mut directed: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
    for start in 0..m {
        if !emb.is_outer_edge(start) {
            continue;
        }
        let init = WalkState {
            edge: start,
            entry_face: outer,
            pending: None,
        };
        let mut active = vec![(init, vec![start], Vec::new())];
        while let Some((state, edges, faces)) = active.pop() {
            match step(emb, state) {
                None => directed.push((edges, faces)),
                Some(nexts) => {
                    for (ns, face) in nexts {
                        let mut e2 = edges.clone();
                        let mut f2 = faces.clone();
                        e2.push(ns.edge);
                        f2.push(face);
                        assert!(
                            e2.len() <= 4 * m,
                            "open walk exceeded its length bound; embedding inconsistent"
                        );
                        active.push((ns, e2, f2));
                    }
                }
            }
        }
    }
    let mut open_groups: HashMap<(Vec<usize>, Vec<usize>), u32> = HashMap::new();
    for (edges, faces) in directed {
        let mut rev_e = edges.clone();
        rev_e.reverse();
        let mut rev_f = faces.clone();
        rev_f.reverse();
        let key = (edges, faces).min((rev_e, rev_f));
        *open_groups.entry(key).or_insert(0) += 1;
    }
    let mut paths: Vec<AlternatingPath> = Vec::new();
    for ((edges, faces), count) in open_groups {
        assert_eq!(
            count, 2,
            "every open alternating path arises once from each end"
        );
        let multiplicity = if faces.iter().all(|&f| emb.face(f).len().is_multiple_of(2)) {
            2
        } else {
            1
        };
        paths.push(AlternatingPath {
            edges,
            faces,
            closed: false,
            multiplicity,
        });
    }

    // Closed walks from uncovered edges.
    let mut coverage = vec![0u32; m];
    let cover = |coverage: &mut Vec<u32>, p: &AlternatingPath| {
        for &e in &p.edges {
            coverage[e] += u32::from(p.multiplicity);
        }
    };
    for p in &paths {
        cover(&mut coverage, p);
    }
    let mut seen_closed: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
    for seed_edge in 0..m {
        if coverage[seed_edge] >= 2 {
            continue;
        }
        let (fa, fb) = emb.edge_faces(seed_edge);
        for entry in [fa, fb] {
            if entry == outer {
                continue;
            }
            let init = WalkState {
                edge: seed_edge,
                entry_face: entry,
                pending: None,
            };
            let mut active = vec![(init, vec![init])];
            while let Some((state, trail)) = active.pop() {
                let Some(nexts) = step(emb, state) else {
                    continue; // leads to the outer face: not on a closed path
                };
                for (ns, _) in nexts {
                    if let Some(at) = trail.iter().position(|&t| t == ns) {
                        let cycle = &trail[at..];
                        let edges: Vec<usize> = cycle.iter().map(|t| t.edge).collect();
                        // The face crossed after cycle[i] is the entry face
                        // of cycle[i+1], wrapping to the repeated state.
                        let faces: Vec<usize> = (0..cycle.len())
                            .map(|i| cycle[(i + 1) % cycle.len()].entry_face)
                            .collect();
                        let canon = closed_canonical(&edges, &faces);
                        if !seen_closed.contains(&canon) {
                            seen_closed.push(canon.clone());
                            let multiplicity =
                                if canon.1.iter().all(|&f| emb.face(f).len().is_multiple_of(2)) {
                                    2
                                } else {
                                    1
                                };
                            let p = AlternatingPath {
                                edges: canon.0,
                                faces: canon.1,
                                closed: true,
                                multiplicity,
                            };
                            cover(&mut coverage, &p);
                            paths.push(p);
                        }
                    } else {
                        let mut t2 = trail.clone();
                        t2.push(ns);
                        assert!(t2.len() <= 6 * m + 6, "closed trace exceeded state bound");
                        active.push((ns, t2));
                    }
                }
            }
        }
    }

    if let Some(edge) = (0..m).find(|&e| coverage[e] != 2) {
        return Err(AlternatingError::CoverageViolation {
            edge,
            coverage: coverage[edge],
        });
    }
    paths.sort_by(|a, b| (a.closed, &a.edges).cmp(&(b.closed, &b.edges)));
    Ok(AlternatingSystem { paths, coverage })
}

/// Canonical rotation/direction of a closed walk: lexicographically smallest
/// edge sequence over all rotations of both directions.
fn closed_canonical(edges: &[usize], faces: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let k = edges.len();
    let mut best: Option<(Vec<usize>, Vec<usize>)> = None;
    for dir in 0..2 {
        let (e, f): (Vec<usize>, Vec<usize>) = if dir == 0 {
            (edges.to_vec(), faces.to_vec())
        } else {
            // Reversed traversal: edge i becomes edge k-1-i; the face after
            // new edge i is the face before the corresponding old edge.
            let e: Vec<usize> = edges.iter().rev().copied().collect();
            let f: Vec<usize> = (0..k).map(|i| faces[(2 * k - i - 2) % k]).collect();
            (e, f)
        };
        for r in 0..k {
            let cand = ([&e[r..], &e[..r]].concat(), [&f[r..], &f[..r]].concat());
            if best.as_ref().is_none_or(|b| cand < *b) {
                best = Some(cand);
            }
        }
    }
    best.expect("closed walks are nonempty")
}

/// The cut induced by an open alternating path: removing its edges must
/// split the graph into exactly two components.
pub fn eap_cut(g: &Graph, path: &AlternatingPath) -> Result<Cut, AlternatingError> {
    assert!(!path.closed, "closed paths do not induce cuts");
    let side =
        side_from_edge_removal(g, &path.edges).ok_or_else(|| AlternatingError::PathNotACut {
            edges: path.edges.clone(),
        })?;
    Ok(Cut::from_side(g, &side))
}

/// Where a path instance sits on one edge it passes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Seat {
    /// The single shared slot of an edge whose two faces are bounded and odd.
    Single,
    /// The slot near the stored endpoint with this index (0 or 1).
    Near(usize),
}

/// Crossing counts for a fixed seating of all path instances.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArrangementReport {
    pub well_arranged: bool,
    /// One entry per instance: (path index, copy index).
    pub instances: Vec<(usize, usize)>,
    /// Instances crossing themselves: (instance, count). Empty when well
    /// arranged.
    pub self_crossings: Vec<(usize, u32)>,
    /// Distinct instance pairs that cross: (i, j, count) with i < j.
    pub crossing_pairs: Vec<(usize, usize, u32)>,
}

/// Seats every path instance (each path once per multiplicity) in the given
/// processing order and counts crossings. The verdict does not depend on
/// the order.
pub fn arrange(
    g: &Graph,
    emb: &PlaneEmbedding,
    system: &AlternatingSystem,
    order: &[usize],
) -> ArrangementReport {
    let m = g.edge_count();
    let outer = emb.outer_face();
    let single_slot: Vec<bool> = (0..m)
        .map(|e| {
            let (fa, fb) = emb.edge_faces(e);
            fa != outer && fb != outer && emb.face(fa).len() % 2 == 1 && emb.face(fb).len() % 2 == 1
        })
        .collect();

    let mut instances: Vec<(usize, usize)> = Vec::new();
    for (pi, p) in system.paths.iter().enumerate() {
        for copy in 0..p.multiplicity {
            instances.push((pi, copy as usize));
        }
    }
    assert_eq!(
        order.len(),
        instances.len(),
        "order must list every instance"
    );

    // First turn direction along the stored orientation, if any.
    let initial_turn = |p: &AlternatingPath| -> Option<Turn> {
        for (i, &f) in p.faces.iter().enumerate() {
            if emb.face(f).len() % 2 == 1 {
                let to = p.edges[(i + 1) % p.edges.len()];
                return match emb.opposite_edges(f, p.edges[i]).expect("step face") {
                    Opposite::Pair { left, .. } if left == to => Some(Turn::Left),
                    Opposite::Pair { .. } => Some(Turn::Right),
                    Opposite::Unique(_) => unreachable!("odd faces have a pair"),
                };
            }
        }
        None
    };

    // The slot near the head of e's dart in the perspective face is the
    // left one.
    let left_endpoint_index = |e: usize, perspective: usize| -> usize {
        let d = emb
            .dart_in_face(perspective, e)
            .expect("edge lies on its perspective face");
        usize::from(d.head(g) == g.endpoints(e).1)
    };

    let mut occupied: Vec<[u8; 2]> = vec![[0; 2]; m]; // per two-slot edge
    let mut seats: HashMap<usize, Vec<Seat>> = HashMap::new(); // instance -> per-step
    let mut passages: Vec<Vec<usize>> = vec![Vec::new(); m]; // single-slot users

    for &inst in order {
        let (pi, _) = instances[inst];
        let p = &system.paths[pi];
        let k = p.edges.len();
        let mut a = initial_turn(p);
        let mut prev_left: Option<bool> = None;
        let mut chosen: Vec<Seat> = Vec::with_capacity(k);
        for i in 0..k {
            let e = p.edges[i];
            if single_slot[e] {
                passages[e].push(inst);
                a = a.map(Turn::flip);
                chosen.push(Seat::Single);
                prev_left = None;
                continue;
            }
            let perspective = if i + 1 < k || p.closed {
                p.faces[i.min(p.faces.len() - 1)]
            } else {
                outer
            };
            let left_idx = left_endpoint_index(e, perspective);
            let right_idx = 1 - left_idx;
            let take = |want_left: bool, occupied: &Vec<[u8; 2]>| -> bool {
                let idx = if want_left { left_idx } else { right_idx };
                if occupied[e][idx] == 0 {
                    want_left
                } else {
                    !want_left
                }
            };
            // Sitting opposite the planned turn (the wanted slot was taken)
            // reverses the side the next turn starts from.
            let went_left = match a {
                Some(Turn::Left) => {
                    let got = take(true, &occupied);
                    if !got {
                        a = Some(Turn::Right);
                    }
                    got
                }
                Some(Turn::Right) => {
                    let got = take(false, &occupied);
                    if got {
                        a = Some(Turn::Left);
                    }
                    got
                }
                None => {
                    let want_left = prev_left.unwrap_or(true);
                    take(want_left, &occupied)
                }
            };
            let idx = if went_left { left_idx } else { right_idx };
            occupied[e][idx] += 1;
            debug_assert!(occupied[e][idx] <= 2, "slot overflow; coverage was checked");
            chosen.push(Seat::Near(idx));
            prev_left = Some(went_left);
        }
        seats.insert(inst, chosen);
    }

    // Chords per bounded face: (instance, rank at first edge, rank at second).
    let rank_of = |face: usize, e: usize, seat: Seat| -> usize {
        let pos = emb
            .position_in_face(face, e)
            .expect("chord edges lie on the face");
        match seat {
            Seat::Single => 2 * pos,
            Seat::Near(idx) => {
                let d = emb.face(face).boundary[pos];
                let tail_idx = usize::from(!d.forward);
                2 * pos + usize::from(idx != tail_idx)
            }
        }
    };
    let mut chords: HashMap<usize, Vec<(usize, usize, usize)>> = HashMap::new();
    for (&inst, seat_list) in &seats {
        let (pi, _) = instances[inst];
        let p = &system.paths[pi];
        let steps = if p.closed {
            p.edges.len()
        } else {
            p.edges.len() - 1
        };
        for i in 0..steps {
            let j = (i + 1) % p.edges.len();
            let face = p.faces[i];
            let r1 = rank_of(face, p.edges[i], seat_list[i]);
            let r2 = rank_of(face, p.edges[j], seat_list[j]);
            chords.entry(face).or_default().push((inst, r1, r2));
        }
    }

    let mut pair_counts: HashMap<(usize, usize), u32> = HashMap::new();
    let mut self_counts: HashMap<usize, u32> = HashMap::new();
    for list in chords.values() {
        for (x, &(i1, a1, a2)) in list.iter().enumerate() {
            for &(i2, b1, b2) in &list[x + 1..] {
                if a1 == b1 || a1 == b2 || a2 == b1 || a2 == b2 {
                    continue; // shared slot point: no transversal crossing
                }
                let (lo, hi) = (a1.min(a2), a1.max(a2));
                let inside = usize::from(lo < b1 && b1 < hi) + usize::from(lo < b2 && b2 < hi);
                if inside == 1 {
                    if i1 == i2 {
                        *self_counts.entry(i1).or_insert(0) += 1;
                    } else {
                        *pair_counts.entry((i1.min(i2), i1.max(i2))).or_insert(0) += 1;
                    }
                }
            }
        }
    }
    // A shared single slot forces one crossing at that edge.
    for (e, users) in passages.iter().enumerate() {
        debug_assert!(users.len() <= 2, "single slot of edge {e} is over capacity");
        if let [i1, i2] = users[..] {
            if i1 == i2 {
                *self_counts.entry(i1).or_insert(0) += 1;
            } else {
                *pair_counts.entry((i1.min(i2), i1.max(i2))).or_insert(0) += 1;
            }
        }
    }

    let mut self_crossings: Vec<(usize, u32)> =
        self_counts.into_iter().filter(|&(_, c)| c > 0).collect();
    self_crossings.sort_unstable();
    let mut crossing_pairs: Vec<(usize, usize, u32)> = pair_counts
        .into_iter()
        .filter(|&(_, c)| c > 0)
        .map(|((i, j), c)| (i, j, c))
        .collect();
    crossing_pairs.sort_unstable();
    let well_arranged = self_crossings.is_empty() && crossing_pairs.iter().all(|&(_, _, c)| c < 2);
    ArrangementReport {
        well_arranged,
        instances,
        self_crossings,
        crossing_pairs,
    }
}

/// Convenience wrapper: the alternating system plus its arrangement under
/// the natural instance order.
pub fn well_arranged(
    g: &Graph,
    emb: &PlaneEmbedding,
) -> Result<(AlternatingSystem, ArrangementReport), AlternatingError> {
    let system = alternating_paths(g, emb)?;
    let count: usize = system.paths.iter().map(|p| p.multiplicity as usize).sum();
    let order: Vec<usize> = (0..count).collect();
    let report = arrange(g, emb, &system, &order);
    Ok((system, report))
}
