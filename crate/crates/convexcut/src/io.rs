//! Text format for graphs and rendering of cut reports.
//!
//! A graph file looks like:
//!
//! ```text
//! graph 6 6
//! edge 0 0 1
//! edge 1 1 2
//! edge 2 2 3
//! edge 3 3 4
//! edge 4 4 5
//! edge 5 5 0
//! rot 0 0 5
//! rot 1 1 0
//! rot 2 2 1
//! rot 3 3 2
//! rot 4 4 3
//! rot 5 5 4
//! outer 0 1 2 3 4 5
//! ```
//!
//! The header gives the vertex and edge counts; `edge` lines must appear in
//! id order. The `rot` lines (one per vertex, listing the incident edges in
//! embedding order) and the `outer` line (the edge set of the outer face)
//! are optional, but `rot` lines must cover every vertex when present.
//! Blank lines and lines starting with `#` are ignored.

use crate::cuts::Cut;
use crate::graph::{Graph, GraphError};
use serde::Serialize;
use std::fmt::Write as _;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: expected `graph <vertices> <edges>`")]
    Header { line: usize },
    #[error("missing `graph <vertices> <edges>` header")]
    MissingHeader,
    #[error("line {line}: expected {what}, found `{found}`")]
    Expected {
        line: usize,
        what: &'static str,
        found: String,
    },
    #[error("line {line}: `{token}` is not a valid number")]
    Integer { line: usize, token: String },
    #[error("line {line}: edge id {found} out of order, expected {expected}")]
    EdgeId {
        line: usize,
        expected: usize,
        found: usize,
    },
    #[error("line {line}: vertex {vertex} out of range for {count} vertices")]
    VertexRange {
        line: usize,
        vertex: usize,
        count: usize,
    },
    #[error("line {line}: edge {edge} out of range for {count} edges")]
    EdgeRange {
        line: usize,
        edge: usize,
        count: usize,
    },
    #[error("line {line}: edge joins vertex {vertex} to itself")]
    SelfLoop { line: usize, vertex: usize },
    #[error("line {line}: rotation for vertex {vertex} given twice")]
    DuplicateRotation { line: usize, vertex: usize },
    #[error("line {line}: outer face given twice")]
    DuplicateOuter { line: usize },
    #[error("rotation lines are incomplete: vertex {vertex} is missing")]
    MissingRotation { vertex: usize },
    #[error("expected {expected} edge lines, found {found}")]
    TooFewEdges { expected: usize, found: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A parsed graph file: the graph plus its optional embedding data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsedGraph {
    pub graph: Graph,
    pub rotation: Option<Vec<Vec<usize>>>,
    pub outer: Option<Vec<usize>>,
}

fn parse_number(line: usize, token: &str) -> Result<usize, ParseError> {
    token.parse().map_err(|_| ParseError::Integer {
        line,
        token: token.to_string(),
    })
}

/// Parses the text format; errors carry 1-based line numbers.
pub fn parse_graph(text: &str) -> Result<ParsedGraph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = lines.next().ok_or(ParseError::MissingHeader)?;
    let mut toks = header.split_whitespace();
    if toks.next() != Some("graph") {
        return Err(ParseError::Header { line: header_line });
    }
    let n = parse_number(
        header_line,
        toks.next()
            .ok_or(ParseError::Header { line: header_line })?,
    )?;
    let m = parse_number(
        header_line,
        toks.next()
            .ok_or(ParseError::Header { line: header_line })?,
    )?;
    if toks.next().is_some() {
        return Err(ParseError::Header { line: header_line });
    }

    let mut edges: Vec<(usize, usize)> = Vec::with_capacity(m);
    let mut rotation: Vec<Option<Vec<usize>>> = vec![None; n];
    let mut any_rotation = false;
    let mut outer: Option<Vec<usize>> = None;
    let mut outer_line = 0usize;

    for (line, text) in lines {
        let mut toks = text.split_whitespace();
        let keyword = toks.next().expect("blank lines were filtered");
        let rest: Vec<&str> = toks.collect();
        match keyword {
            "edge" => {
                if rest.len() != 3 {
                    return Err(ParseError::Expected {
                        line,
                        what: "`edge <id> <u> <v>`",
                        found: text.to_string(),
                    });
                }
                let id = parse_number(line, rest[0])?;
                if id != edges.len() {
                    return Err(ParseError::EdgeId {
                        line,
                        expected: edges.len(),
                        found: id,
                    });
                }
                let u = parse_number(line, rest[1])?;
                let v = parse_number(line, rest[2])?;
                for w in [u, v] {
                    if w >= n {
                        return Err(ParseError::VertexRange {
                            line,
                            vertex: w,
                            count: n,
                        });
                    }
                }
                if u == v {
                    return Err(ParseError::SelfLoop { line, vertex: u });
                }
                edges.push((u, v));
            }
            "rot" => {
                if rest.is_empty() {
                    return Err(ParseError::Expected {
                        line,
                        what: "`rot <vertex> <edges...>`",
                        found: text.to_string(),
                    });
                }
                let v = parse_number(line, rest[0])?;
                if v >= n {
                    return Err(ParseError::VertexRange {
                        line,
                        vertex: v,
                        count: n,
                    });
                }
                if rotation[v].is_some() {
                    return Err(ParseError::DuplicateRotation { line, vertex: v });
                }
                let mut order = Vec::with_capacity(rest.len() - 1);
                for tok in &rest[1..] {
                    let e = parse_number(line, tok)?;
                    if e >= m {
                        return Err(ParseError::EdgeRange {
                            line,
                            edge: e,
                            count: m,
                        });
                    }
                    order.push(e);
                }
                rotation[v] = Some(order);
                any_rotation = true;
            }
            "outer" => {
                if outer.is_some() {
                    return Err(ParseError::DuplicateOuter { line });
                }
                let mut face = Vec::with_capacity(rest.len());
                for tok in &rest {
                    let e = parse_number(line, tok)?;
                    if e >= m {
                        return Err(ParseError::EdgeRange {
                            line,
                            edge: e,
                            count: m,
                        });
                    }
                    face.push(e);
                }
                outer = Some(face);
                outer_line = line;
            }
            _ => {
                return Err(ParseError::Expected {
                    line,
                    what: "`edge`, `rot`, or `outer`",
                    found: text.to_string(),
                });
            }
        }
    }

    if edges.len() != m {
        return Err(ParseError::TooFewEdges {
            expected: m,
            found: edges.len(),
        });
    }
    let _ = outer_line;
    let rotation = if any_rotation {
        let mut rows = Vec::with_capacity(n);
        for (v, row) in rotation.into_iter().enumerate() {
            rows.push(row.ok_or(ParseError::MissingRotation { vertex: v })?);
        }
        Some(rows)
    } else {
        None
    };
    let graph = Graph::new(n, &edges)?;
    Ok(ParsedGraph {
        graph,
        rotation,
        outer,
    })
}

/// Writes the canonical text form: header, edges in id order, then rotation
/// lines per vertex and the outer edge set when given.
pub fn serialize_graph(
    g: &Graph,
    rotation: Option<&[Vec<usize>]>,
    outer: Option<&[usize]>,
) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "graph {} {}", g.vertex_count(), g.edge_count());
    for (id, &(u, v)) in g.edges().iter().enumerate() {
        let _ = writeln!(out, "edge {id} {u} {v}");
    }
    if let Some(rot) = rotation {
        for (v, row) in rot.iter().enumerate() {
            let _ = write!(out, "rot {v}");
            for e in row {
                let _ = write!(out, " {e}");
            }
            out.push('\n');
        }
    }
    if let Some(face) = outer {
        let _ = write!(out, "outer");
        for e in face {
            let _ = write!(out, " {e}");
        }
        out.push('\n');
    }
    out
}

/// One cut in a report: its edge set and the two vertex sides (side_a holds
/// vertex 0).
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct CutRecord {
    pub edges: Vec<usize>,
    pub side_a: Vec<usize>,
    pub side_b: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cyclic: Option<bool>,
}

impl CutRecord {
    pub fn new(cut: &Cut, cyclic: Option<bool>) -> CutRecord {
        CutRecord {
            edges: cut.edges().to_vec(),
            side_a: cut.side_vertices(true),
            side_b: cut.side_vertices(false),
            cyclic,
        }
    }
}

/// A full enumeration report.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct CutsReport {
    pub vertex_count: usize,
    pub edge_count: usize,
    pub cut_count: usize,
    pub cuts: Vec<CutRecord>,
}

impl CutsReport {
    pub fn new(g: &Graph, cuts: Vec<CutRecord>) -> CutsReport {
        CutsReport {
            vertex_count: g.vertex_count(),
            edge_count: g.edge_count(),
            cut_count: cuts.len(),
            cuts,
        }
    }
}

fn write_list(out: &mut String, items: &[usize]) {
    for x in items {
        let _ = write!(out, " {x}");
    }
}

/// Plain-text rendering: one `cut` line per record, already sorted by
/// (size, edges).
pub fn render_text(report: &CutsReport) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "graph vertices {} edges {}",
        report.vertex_count, report.edge_count
    );
    let _ = writeln!(out, "cuts {}", report.cut_count);
    for r in &report.cuts {
        let mut line = String::from("cut edges");
        write_list(&mut line, &r.edges);
        line.push_str(" | side");
        write_list(&mut line, &r.side_a);
        line.push_str(" | other");
        write_list(&mut line, &r.side_b);
        if r.cyclic == Some(true) {
            line.push_str(" | cyclic");
        }
        let _ = writeln!(out, "{line}");
    }
    out
}

/// Pretty JSON rendering with a trailing newline.
pub fn render_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

/// Graphviz rendering: the graph with every edge labelled by its id and the
/// indices of the cuts it belongs to.
pub fn render_dot(g: &Graph, report: &CutsReport) -> String {
    let mut membership: Vec<Vec<usize>> = vec![Vec::new(); g.edge_count()];
    for (i, r) in report.cuts.iter().enumerate() {
        for &e in &r.edges {
            membership[e].push(i);
        }
    }
    let mut out = String::from("graph convexcut {\n");
    let _ = writeln!(out, "  node [shape=circle];");
    for v in 0..g.vertex_count() {
        let _ = writeln!(out, "  v{v};");
    }
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        let mut label = format!("{e}");
        if !membership[e].is_empty() {
            label.push_str(" cuts");
            for c in &membership[e] {
                let _ = write!(label, " {c}");
            }
        }
        let style = if membership[e].is_empty() {
            ""
        } else {
            ", style=dashed"
        };
        let _ = writeln!(out, "  v{u} -- v{v} [label=\"{label}\"{style}];");
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embedding::trace_faces;
    use crate::families::{generate, Family};

    #[test]
    fn serialize_then_parse_round_trips_families() {
        for fam in [
            Family::Cycle(6),
            Family::Grid(3, 4),
            Family::Wheel(5),
            Family::Complete(4),
            Family::Hypercube(3),
            Family::Path(5),
            Family::CompleteBipartite(2, 3),
        ] {
            let gen = generate(&fam).unwrap();
            let (rot, outer) = match &gen.embedding {
                Some(emb) => {
                    let mut outer_edges = emb.face(emb.outer_face()).edge_ids();
                    outer_edges.sort_unstable();
                    (Some(emb.rotation().to_vec()), Some(outer_edges))
                }
                None => (None, None),
            };
            let text = serialize_graph(&gen.graph, rot.as_deref(), outer.as_deref());
            let parsed = parse_graph(&text).unwrap();
            assert_eq!(parsed.graph.edges(), gen.graph.edges(), "{fam:?}");
            assert_eq!(parsed.graph.vertex_count(), gen.graph.vertex_count());
            assert_eq!(parsed.rotation, rot, "{fam:?}");
            assert_eq!(parsed.outer, outer, "{fam:?}");
            let again = serialize_graph(
                &parsed.graph,
                parsed.rotation.as_deref(),
                parsed.outer.as_deref(),
            );
            assert_eq!(text, again, "{fam:?}");

            if let (Some(rot), Some(outer)) = (&parsed.rotation, &parsed.outer) {
                let emb = trace_faces(&parsed.graph, rot.clone(), Some(outer)).unwrap();
                let original = gen.embedding.as_ref().unwrap();
                assert_eq!(emb.face_count(), original.face_count());
                assert_eq!(emb.outer_face(), original.outer_face());
            }
        }
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        assert_eq!(parse_graph(""), Err(ParseError::MissingHeader));
        assert_eq!(parse_graph("grap 3 2"), Err(ParseError::Header { line: 1 }));
        assert_eq!(
            parse_graph("graph 3 2\nedge 1 0 1\n"),
            Err(ParseError::EdgeId {
                line: 2,
                expected: 0,
                found: 1,
            })
        );
        assert_eq!(
            parse_graph("graph 3 2\nedge 0 0 3\n"),
            Err(ParseError::VertexRange {
                line: 2,
                vertex: 3,
                count: 3,
            })
        );
        assert_eq!(
            parse_graph("graph 2 1\nedge 0 0 0\n"),
            Err(ParseError::SelfLoop { line: 2, vertex: 0 })
        );
        assert_eq!(
            parse_graph("graph 2 1\nedge 0 0 1\nbogus 1 2\n"),
            Err(ParseError::Expected {
                line: 3,
                what: "`edge`, `rot`, or `outer`",
                found: "bogus 1 2".to_string(),
            })
        );
        assert_eq!(
            parse_graph("graph 2 1\nedge 0 0 x\n"),
            Err(ParseError::Integer {
                line: 2,
                token: "x".to_string(),
            })
        );
        assert_eq!(
            parse_graph("graph 2 2\nedge 0 0 1\n"),
            Err(ParseError::TooFewEdges {
                expected: 2,
                found: 1,
            })
        );
        assert_eq!(
            parse_graph("graph 3 3\nedge 0 0 1\nedge 1 1 2\nedge 2 2 0\nrot 0 0 2\n"),
            Err(ParseError::MissingRotation { vertex: 1 })
        );
    }

    #[test]
    fn comments_and_blank_lines_are_ignored() {
        let text = "# a triangle\n\ngraph 3 3\nedge 0 0 1\n# middle\nedge 1 1 2\nedge 2 2 0\n\n";
        let parsed = parse_graph(text).unwrap();
        assert_eq!(parsed.graph.edge_count(), 3);
        assert_eq!(parsed.rotation, None);
        assert_eq!(parsed.outer, None);
    }

    #[test]
    fn disconnected_input_is_rejected_via_graph_validation() {
        let text = "graph 4 2\nedge 0 0 1\nedge 1 2 3\n";
        assert!(matches!(
            parse_graph(text),
            Err(ParseError::Graph(GraphError::Disconnected { .. }))
        ));
    }

    #[test]
    fn report_renderings_are_deterministic() {
        let gen = generate(&Family::Cycle(6)).unwrap();
        let cuts = crate::bipartite::bipartite_convex_cuts(
            &gen.graph,
            crate::bipartite::BipartiteOptions::default(),
        )
        .unwrap();
        let records: Vec<CutRecord> = cuts.cuts.iter().map(|c| CutRecord::new(c, None)).collect();
        let report = CutsReport::new(&gen.graph, records);
        let text = render_text(&report);
        assert!(text.starts_with("graph vertices 6 edges 6\ncuts 3\n"));
        assert!(text.contains("cut edges 0 3 | side 0 4 5 | other 1 2 3"));
        let json = render_json(&report);
        assert!(json.contains("\"cut_count\": 3"));
        assert!(json.ends_with('\n'));
        let dot = render_dot(&gen.graph, &report);
        assert!(dot.starts_with("graph convexcut {"));
        assert!(dot.contains("v0 -- v1 [label=\"0 cuts 0\", style=dashed];"));
        assert_eq!(render_text(&report), text);
    }
}
