//! Named graph families with deterministic edge ids and, where the family
//! has a standard drawing, a ready-made plane embedding.
//!
//! Every generator is deterministic: the same parameters (including seeds)
//! produce byte-identical edge lists and rotations.

use crate::embedding::{trace_faces, PlaneEmbedding};
use crate::graph::Graph;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FamilyError {
    #[error("{family} needs at least {min} vertices, got {got}")]
    TooFewVertices {
        family: &'static str,
        min: usize,
        got: usize,
    },
    #[error("hypercube dimension {got} exceeds the supported maximum {max}")]
    DimensionTooLarge { max: usize, got: usize },
    #[error("edge count {got} outside [{min}, {max}] for the requested vertex count")]
    EdgeCountOutOfRange { min: usize, max: usize, got: usize },
}

/// A parameterized graph family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    /// Cycle on `n >= 3` vertices.
    Cycle(usize),
    /// Path on `n >= 1` vertices.
    Path(usize),
    /// Grid with `rows x cols` vertices.
    Grid(usize, usize),
    /// Hypercube of dimension `d <= 12`.
    Hypercube(usize),
    /// Complete graph on `n >= 1` vertices.
    Complete(usize),
    /// Cycle on `n >= 3` rim vertices plus a hub joined to every rim vertex.
    Wheel(usize),
    /// Complete bipartite graph with part sizes `a, b >= 1`.
    CompleteBipartite(usize, usize),
    /// Connected random graph: a random spanning tree plus random extra
    /// edges, simple, no embedding.
    Random {
        vertices: usize,
        edges: usize,
        seed: u64,
    },
    /// Random two-connected plane graph: a convex polygon triangulated by
    /// random splits, with each internal chord kept with probability 1/2.
    RandomPlane { vertices: usize, seed: u64 },
}

/// A generated graph together with its embedding when the family has one.
#[derive(Debug, Clone)]
pub struct Generated {
    pub graph: Graph,
    pub embedding: Option<PlaneEmbedding>,
}

pub fn generate(family: &Family) -> Result<Generated, FamilyError> {
    match *family {
        Family::Cycle(n) => cycle(n),
        Family::Path(n) => path(n),
        Family::Grid(r, c) => grid(r, c),
        Family::Hypercube(d) => hypercube(d),
        Family::Complete(n) => complete(n),
        Family::Wheel(n) => wheel(n),
        Family::CompleteBipartite(a, b) => complete_bipartite(a, b),
        Family::Random {
            vertices,
            edges,
            seed,
        } => random_connected(vertices, edges, seed),
        Family::RandomPlane { vertices, seed } => random_plane(vertices, seed),
    }
}

fn need(family: &'static str, min: usize, got: usize) -> Result<(), FamilyError> {
    if got < min {
        Err(FamilyError::TooFewVertices { family, min, got })
    } else {
        Ok(())
    }
}

fn build(vertex_count: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::new(vertex_count, edges).expect("family generator produced an invalid graph")
}

fn embed(g: &Graph, rotation: Vec<Vec<usize>>, outer: &[usize]) -> PlaneEmbedding {
    trace_faces(g, rotation, Some(outer)).expect("family embedding must validate")
}

/// Edge id joining `u` and `v` in a simple graph.
fn edge_between(g: &Graph, u: usize, v: usize) -> usize {
    g.incident(u)
        .iter()
        .find(|&&(_, w)| w == v)
        .expect("requested edge exists")
        .0
}

fn cycle(n: usize) -> Result<Generated, FamilyError> {
    need("cycle", 3, n)?;
    let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    let g = build(n, &edges);
    let rotation = (0..n).map(|v| vec![v, (v + n - 1) % n]).collect();
    let all: Vec<usize> = (0..n).collect();
    let emb = embed(&g, rotation, &all);
    Ok(Generated {
        graph: g,
        embedding: Some(emb),
    })
}

fn path(n: usize) -> Result<Generated, FamilyError> {
    need("path", 1, n)?;
    let edges: Vec<(usize, usize)> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
    Ok(Generated {
        graph: build(n, &edges),
        embedding: None,
    })
}

fn grid(rows: usize, cols: usize) -> Result<Generated, FamilyError> {
    need("grid", 1, rows.min(cols))?;
    let at = |i: usize, j: usize| i * cols + j;
    let mut edges = Vec::new();
    for i in 0..rows {
        for j in 0..cols {
            if j + 1 < cols {
                edges.push((at(i, j), at(i, j + 1)));
            }
            if i + 1 < rows {
                edges.push((at(i, j), at(i + 1, j)));
            }
        }
    }
    let g = build(rows * cols, &edges);
    if rows < 2 || cols < 2 {
        return Ok(Generated {
            graph: g,
            embedding: None,
        });
    }
    // Clockwise as drawn with row 0 on top: up, right, down, left.
    let mut rotation = Vec::with_capacity(rows * cols);
    for i in 0..rows {
        for j in 0..cols {
            let mut rot = Vec::new();
            if i > 0 {
                rot.push(edge_between(&g, at(i, j), at(i - 1, j)));
            }
            if j + 1 < cols {
                rot.push(edge_between(&g, at(i, j), at(i, j + 1)));
            }
            if i + 1 < rows {
                rot.push(edge_between(&g, at(i, j), at(i + 1, j)));
            }
            if j > 0 {
                rot.push(edge_between(&g, at(i, j), at(i, j - 1)));
            }
            rotation.push(rot);
        }
    }
    let outer: Vec<usize> = (0..g.edge_count())
        .filter(|&e| {
            let (u, v) = g.endpoints(e);
            if v == u + 1 {
                let i = u / cols;
                i == 0 || i == rows - 1
            } else {
                let j = u % cols;
                j == 0 || j == cols - 1
            }
        })
        .collect();
    let emb = embed(&g, rotation, &outer);
    Ok(Generated {
        graph: g,
        embedding: Some(emb),
    })
}

fn hypercube(d: usize) -> Result<Generated, FamilyError> {
    if d > 12 {
        return Err(FamilyError::DimensionTooLarge { max: 12, got: d });
    }
    let n = 1usize << d;
    let mut edges = Vec::new();
    for v in 0..n {
        for b in 0..d {
            if v & (1 << b) == 0 {
                edges.push((v, v | (1 << b)));
            }
        }
    }
    let g = build(n, &edges);
    let embedding = match d {
        2 => {
            // The 4-cycle 0-1-3-2.
            let rotation = vec![vec![0, 1], vec![0, 2], vec![1, 3], vec![2, 3]];
            Some(embed(&g, rotation, &[0, 1, 2, 3]))
        }
        3 => {
            // Outer square 0-1-3-2 drawn clockwise, inner square 4-5-7-6,
            // spokes v to v+4. Rotations are the clockwise bearing order of
            // that drawing; edge ids follow the ascending generation order.
            let rotation = vec![
                vec![0, 2, 1],
                vec![3, 4, 0],
                vec![1, 6, 5],
                vec![3, 5, 7],
                vec![8, 9, 2],
                vec![4, 10, 8],
                vec![9, 11, 6],
                vec![10, 7, 11],
            ];
            Some(embed(&g, rotation, &[0, 3, 5, 1]))
        }
        _ => None,
    };
    Ok(Generated {
        graph: g,
        embedding,
    })
}

fn complete(n: usize) -> Result<Generated, FamilyError> {
    need("complete", 1, n)?;
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            edges.push((i, j));
        }
    }
    let g = build(n, &edges);
    let embedding = match n {
        3 => {
            let rotation = vec![vec![0, 1], vec![0, 2], vec![1, 2]];
            Some(embed(&g, rotation, &[0, 1, 2]))
        }
        4 => {
            // Triangle 0-1-2 drawn clockwise with vertex 3 in the center.
            let rotation = vec![vec![0, 2, 1], vec![3, 4, 0], vec![1, 5, 3], vec![2, 4, 5]];
            Some(embed(&g, rotation, &[0, 3, 1]))
        }
        _ => None,
    };
    Ok(Generated {
        graph: g,
        embedding,
    })
}

fn wheel(n: usize) -> Result<Generated, FamilyError> {
    need("wheel", 3, n)?;
    let hub = n;
    let mut edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    edges.extend((0..n).map(|i| (i, hub)));
    let g = build(n + 1, &edges);
    // Rim drawn clockwise with the hub inside: at rim vertex i the clockwise
    // order is next rim edge, spoke, previous rim edge.
    let mut rotation: Vec<Vec<usize>> = (0..n).map(|i| vec![i, n + i, (i + n - 1) % n]).collect();
    rotation.push((n..2 * n).collect());
    let outer: Vec<usize> = (0..n).collect();
    let emb = embed(&g, rotation, &outer);
    Ok(Generated {
        graph: g,
        embedding: Some(emb),
    })
}

fn complete_bipartite(a: usize, b: usize) -> Result<Generated, FamilyError> {
    need("complete bipartite", 1, a.min(b))?;
    let mut edges = Vec::new();
    for i in 0..a {
        for j in 0..b {
            edges.push((i, a + j));
        }
    }
    let g = build(a + b, &edges);
    let embedding = if a == 2 && b >= 2 {
        // Left part vertex 0 to the west, vertex 1 to the east, right part
        // stacked north to south between them.
        let mut rotation: Vec<Vec<usize>> = Vec::new();
        rotation.push((0..b).collect());
        rotation.push((b..2 * b).rev().collect());
        for j in 0..b {
            rotation.push(vec![j, b + j]);
        }
        let outer = [0, b, b - 1, 2 * b - 1];
        Some(embed(&g, rotation, &outer))
    } else if b == 2 && a >= 2 {
        // Mirror roles: the two right-part vertices flank the left part.
        let mut rotation: Vec<Vec<usize>> = Vec::new();
        for i in 0..a {
            rotation.push(vec![2 * i, 2 * i + 1]);
        }
        rotation.push((0..a).map(|i| 2 * i).collect());
        rotation.push((0..a).rev().map(|i| 2 * i + 1).collect());
        let outer = [0, 1, 2 * (a - 1), 2 * a - 1];
        Some(embed(&g, rotation, &outer))
    } else {
        None
    };
    Ok(Generated {
        graph: g,
        embedding,
    })
}

fn random_connected(n: usize, m: usize, seed: u64) -> Result<Generated, FamilyError> {
    need("random", 1, n)?;
    let max = n * (n - 1) / 2;
    if m < n - 1 || m > max {
        return Err(FamilyError::EdgeCountOutOfRange {
            min: n - 1,
            max,
            got: m,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut rng);
    let mut edges = Vec::with_capacity(m);
    let mut in_tree = vec![false; n * n];
    for k in 1..n {
        let j = rng.gen_range(0..k);
        let (u, v) = (order[j], order[k]);
        edges.push((u, v));
        in_tree[u * n + v] = true;
        in_tree[v * n + u] = true;
    }
    let mut extras: Vec<(usize, usize)> = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if !in_tree[u * n + v] {
                extras.push((u, v));
            }
        }
    }
    extras.shuffle(&mut rng);
    edges.extend(extras.into_iter().take(m - (n - 1)));
    Ok(Generated {
        graph: build(n, &edges),
        embedding: None,
    })
}

fn random_plane(n: usize, seed: u64) -> Result<Generated, FamilyError> {
    need("random plane", 3, n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    // Hull of a convex polygon with vertices 0..n placed clockwise, then a
    // random triangulation of the interior; each chord survives a coin flip.
    let mut edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    let mut stack = vec![(0usize, n - 1)];
    while let Some((lo, hi)) = stack.pop() {
        if hi - lo < 2 {
            continue;
        }
        let k = rng.gen_range(lo + 1..hi);
        for (x, y) in [(lo, k), (k, hi)] {
            if y - x >= 2 && rng.gen_bool(0.5) {
                edges.push((x, y));
            }
        }
        stack.push((lo, k));
        stack.push((k, hi));
    }
    let g = build(n, &edges);
    // From v the chord bearing rotates clockwise as the target advances
    // clockwise around the hull, so sorting neighbors by hull offset gives
    // the rotation.
    let rotation: Vec<Vec<usize>> = (0..n)
        .map(|v| {
            let mut inc: Vec<(usize, usize)> = g
                .incident(v)
                .iter()
                .map(|&(e, w)| ((w + n - v) % n, e))
                .collect();
            inc.sort_unstable();
            inc.into_iter().map(|(_, e)| e).collect()
        })
        .collect();
    let outer: Vec<usize> = (0..n).collect();
    let emb = embed(&g, rotation, &outer);
    Ok(Generated {
        graph: g,
        embedding: Some(emb),
    })
}
