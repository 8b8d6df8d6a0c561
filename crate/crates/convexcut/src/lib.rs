//! Exact enumeration of convex cuts for bipartite and plane graphs.
//!
//! A cut of a connected graph is convex when both sides are convex: every
//! shortest path between two vertices of a side stays inside that side.
//! This crate enumerates all convex cuts in polynomial time for two input
//! classes (bipartite graphs and plane graphs), provides a brute-force
//! oracle for independent verification, recognizes partial cubes, and ships
//! the supporting machinery: plane embeddings with face tracing, edge
//! relations, and the alternating-path layer for plane graphs.

pub mod alternating;
pub mod bipartite;
pub mod corpus;
pub mod cuts;
pub mod embedding;
pub mod families;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod plane;
pub mod relations;
