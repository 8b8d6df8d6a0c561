//! Combinatorial plane embeddings: rotation systems, face tracing with the
//! Euler check, and the opposite-edge rule on face boundaries.
//!
//! A rotation system lists, for each vertex, its incident edges in clockwise
//! drawing order. Face tracing assigns each half-edge (dart) to exactly one
//! face boundary: the successor rule leaves a vertex on the edge that follows
//! the arriving edge in rotation order, so every face lies to the left of its
//! boundary darts and bounded faces trace counterclockwise as drawn. The
//! stored boundary order is the reference for every "left" and "right" in
//! this crate; all verdicts are invariant under reflecting the embedding.

use crate::graph::Graph;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EmbedError {
    #[error("embeddings require at least one edge")]
    NoEdges,
    #[error("rotation system lists {got} vertices, graph has {expected}")]
    RotationLengthMismatch { expected: usize, got: usize },
    #[error("rotation at vertex {vertex} is not a permutation of its incident edges")]
    RotationInvalid { vertex: usize },
    #[error(
        "face tracing violates Euler's formula: {vertices} - {edges} + {faces} != 2 \
         (rotation system is not a plane embedding)"
    )]
    EulerCheckFailed {
        vertices: usize,
        edges: usize,
        faces: usize,
    },
    #[error("edge {edge} is a bridge (same face on both sides); bridgeless input required")]
    BridgeDetected { edge: usize },
    #[error("no traced face matches the requested outer boundary")]
    OuterFaceNotFound,
    #[error("face {face} is the outer face; opposite edges are defined on bounded faces")]
    FaceIsOuter { face: usize },
    #[error("edge {edge} is not on the boundary of face {face}")]
    EdgeNotOnFace { edge: usize, face: usize },
}

/// A directed half-edge: edge `edge` traversed from its first stored
/// endpoint to the second when `forward` holds, else the reverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Dart {
    pub edge: usize,
    pub forward: bool,
}

impl Dart {
    pub fn id(&self) -> usize {
        2 * self.edge + usize::from(!self.forward)
    }

    pub fn tail(&self, g: &Graph) -> usize {
        let (u, v) = g.endpoints(self.edge);
        if self.forward {
            u
        } else {
            v
        }
    }

    pub fn head(&self, g: &Graph) -> usize {
        let (u, v) = g.endpoints(self.edge);
        if self.forward {
            v
        } else {
            u
        }
    }
}

/// One face of the embedding; the boundary lists darts in traced order.
#[derive(Debug, Clone)]
pub struct Face {
    pub boundary: Vec<Dart>,
}

impl Face {
    pub fn len(&self) -> usize {
        self.boundary.len()
    }

    pub fn is_empty(&self) -> bool {
        self.boundary.is_empty()
    }

    pub fn edge_ids(&self) -> Vec<usize> {
        self.boundary.iter().map(|d| d.edge).collect()
    }
}

/// Opposite edge(s) of an edge on a bounded face boundary: a unique one on
/// even faces, a left/right pair on odd faces.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Opposite {
    Unique(usize),
    Pair { left: usize, right: usize },
}

/// A validated plane embedding of a graph.
#[derive(Debug, Clone)]
pub struct PlaneEmbedding {
    vertex_count: usize,
    edge_count: usize,
    rotation: Vec<Vec<usize>>,
    faces: Vec<Face>,
    outer_face: usize,
    /// (face index, position in boundary) per dart id.
    dart_location: Vec<(usize, usize)>,
    outer_chosen_by_default: bool,
}

/// Traces the faces induced by a rotation system, validates planarity via
/// Euler's formula, and rejects bridges. `outer_hint`, when given, names the
/// outer face by its boundary edge ids (any order); otherwise the face with
/// the longest boundary is chosen (lowest index on ties) and
/// [`PlaneEmbedding::outer_chosen_by_default`] reports the fallback.
pub fn trace_faces(
    g: &Graph,
    rotation: Vec<Vec<usize>>,
    outer_hint: Option<&[usize]>,
) -> Result<PlaneEmbedding, EmbedError> {
    let n = g.vertex_count();
    let m = g.edge_count();
    if m == 0 {
        return Err(EmbedError::NoEdges);
    }
    if rotation.len() != n {
        return Err(EmbedError::RotationLengthMismatch {
            expected: n,
            got: rotation.len(),
        });
    }
    // Each incident edge id must appear exactly once in the vertex's rotation.
    for (v, row) in rotation.iter().enumerate() {
        let mut expect: Vec<usize> = g.incident(v).iter().map(|&(e, _)| e).collect();
        let mut got = row.clone();
        expect.sort_unstable();
        got.sort_unstable();
        if expect != got {
            return Err(EmbedError::RotationInvalid { vertex: v });
        }
    }
    // Position of each edge within each endpoint's rotation.
    let mut pos = vec![[usize::MAX; 2]; m];
    for v in 0..n {
        for (i, &e) in rotation[v].iter().enumerate() {
            let (a, _) = g.endpoints(e);
            pos[e][usize::from(v != a)] = i;
        }
    }
    let next_dart = |d: Dart| -> Dart {
        let head = d.head(g);
        let p = pos[d.edge][usize::from(head != g.endpoints(d.edge).0)];
        let e2 = rotation[head][(p + 1) % rotation[head].len()];
        Dart {
            edge: e2,
            forward: head == g.endpoints(e2).0,
        }
    };
    let mut dart_location = vec![(usize::MAX, usize::MAX); 2 * m];
    let mut faces = Vec::new();
    for start_id in 0..2 * m {
        if dart_location[start_id].0 != usize::MAX {
            continue;
        }
        let start = Dart {
            edge: start_id / 2,
            forward: start_id % 2 == 0,
        };
        let face_idx = faces.len();
        let mut boundary = Vec::new();
        let mut d = start;
        loop {
            dart_location[d.id()] = (face_idx, boundary.len());
            boundary.push(d);
            d = next_dart(d);
            if d == start {
                break;
            }
        }
        faces.push(Face { boundary });
    }
    if n + faces.len() != m + 2 {
        return Err(EmbedError::EulerCheckFailed {
            vertices: n,
            edges: m,
            faces: faces.len(),
        });
    }
    for e in 0..m {
        if dart_location[2 * e].0 == dart_location[2 * e + 1].0 {
            return Err(EmbedError::BridgeDetected { edge: e });
        }
    }
    let (outer_face, outer_chosen_by_default) = match outer_hint {
        Some(hint) => {
            let mut want: Vec<usize> = hint.to_vec();
            want.sort_unstable();
            want.dedup();
            let found = faces.iter().position(|f| {
                let mut ids = f.edge_ids();
                ids.sort_unstable();
                ids.dedup();
                ids == want
            });
            (found.ok_or(EmbedError::OuterFaceNotFound)?, false)
        }
        None => {
            let best = (0..faces.len())
                .max_by(|&a, &b| faces[a].len().cmp(&faces[b].len()).then(b.cmp(&a)))
                .expect("at least one face");
            (best, true)
        }
    };
    Ok(PlaneEmbedding {
        vertex_count: n,
        edge_count: m,
        rotation,
        faces,
        outer_face,
        dart_location,
        outer_chosen_by_default,
    })
}

impl PlaneEmbedding {
    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn face(&self, i: usize) -> &Face {
        &self.faces[i]
    }

    pub fn outer_face(&self) -> usize {
        self.outer_face
    }

    /// True when no outer hint was given and the longest boundary was used.
    pub fn outer_chosen_by_default(&self) -> bool {
        self.outer_chosen_by_default
    }

    pub fn rotation(&self) -> &[Vec<usize>] {
        &self.rotation
    }

    pub fn is_bounded(&self, face: usize) -> bool {
        face != self.outer_face
    }

    /// The two faces on either side of `e` (forward dart's face first).
    pub fn edge_faces(&self, e: usize) -> (usize, usize) {
        (self.dart_location[2 * e].0, self.dart_location[2 * e + 1].0)
    }

    /// The face on the other side of `e` from `face`.
    pub fn other_face(&self, e: usize, face: usize) -> usize {
        let (a, b) = self.edge_faces(e);
        if face == a {
            b
        } else {
            debug_assert_eq!(face, b);
            a
        }
    }

    pub fn is_outer_edge(&self, e: usize) -> bool {
        let (a, b) = self.edge_faces(e);
        a == self.outer_face || b == self.outer_face
    }

    /// Position of `e` in the boundary of `face`, if it lies on it.
    pub fn position_in_face(&self, face: usize, e: usize) -> Option<usize> {
        for d in [2 * e, 2 * e + 1] {
            let (f, p) = self.dart_location[d];
            if f == face {
                return Some(p);
            }
        }
        None
    }

    /// The dart of `e` appearing in the boundary of `face`.
    pub fn dart_in_face(&self, face: usize, e: usize) -> Option<Dart> {
        self.position_in_face(face, e)
            .map(|p| self.faces[face].boundary[p])
    }

    /// Opposite edge(s) of `e` on the bounded face `face`: the boundary
    /// minus `e` and the opposite splits into two paths whose edge counts
    /// differ by at most one. On odd faces the left opposite is the one
    /// reached first when the shorter path follows `e` in stored
    /// (clockwise) order.
    pub fn opposite_edges(&self, face: usize, e: usize) -> Result<Opposite, EmbedError> {
        if face == self.outer_face {
            return Err(EmbedError::FaceIsOuter { face });
        }
        let p = self
            .position_in_face(face, e)
            .ok_or(EmbedError::EdgeNotOnFace { edge: e, face })?;
        let b = &self.faces[face].boundary;
        let len = b.len();
        if len.is_multiple_of(2) {
            Ok(Opposite::Unique(b[(p + len / 2) % len].edge))
        } else {
            Ok(Opposite::Pair {
                left: b[(p + (len - 1) / 2) % len].edge,
                right: b[(p + len.div_ceil(2)) % len].edge,
            })
        }
    }

    /// The mirror embedding: every rotation reversed, outer face preserved.
    pub fn reflected(&self, g: &Graph) -> PlaneEmbedding {
        let reversed: Vec<Vec<usize>> = self
            .rotation
            .iter()
            .map(|r| r.iter().rev().copied().collect())
            .collect();
        let outer_ids = self.faces[self.outer_face].edge_ids();
        trace_faces(g, reversed, Some(&outer_ids))
            .expect("reflection of a valid embedding is valid")
    }
}
