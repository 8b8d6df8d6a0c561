//! Graph collections for verification suites: exhaustive enumerations of
//! small graphs and seeded random constructions.

use crate::graph::Graph;
use rand::seq::SliceRandom;
use rand::Rng;

/// All connected bipartite simple graphs on labeled vertices `0..n`.
/// Exhaustive over all edge subsets, so `n` is capped at 6.
pub fn labeled_connected_bipartite(n: usize) -> Vec<Graph> {
    assert!(
        (1..=6).contains(&n),
        "exhaustive enumeration supports 1..=6 vertices, got {n}"
    );
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    let mut out = Vec::new();
    for mask in 0u32..1 << pairs.len() {
        let mut adj = vec![0u8; n]; // neighbor bitmask per vertex
        for (k, &(i, j)) in pairs.iter().enumerate() {
            if mask >> k & 1 == 1 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
        }
        // Connectivity by bitmask closure from vertex 0.
        let mut reach: u8 = 1;
        loop {
            let mut next = reach;
            for (v, &a) in adj.iter().enumerate() {
                if reach >> v & 1 == 1 {
                    next |= a;
                }
            }
            if next == reach {
                break;
            }
            reach = next;
        }
        if reach != (1 << n) - 1 {
            continue;
        }
        // Two-colorability.
        let mut color = [u8::MAX; 6];
        color[0] = 0;
        let mut stack = vec![0usize];
        let mut ok = true;
        while let Some(v) = stack.pop() {
            for w in 0..n {
                if adj[v] >> w & 1 == 1 {
                    if color[w] == u8::MAX {
                        color[w] = 1 - color[v];
                        stack.push(w);
                    } else if color[w] == color[v] {
                        ok = false;
                    }
                }
            }
            if !ok {
                break;
            }
        }
        if !ok {
            continue;
        }
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|&(k, _)| mask >> k & 1 == 1)
            .map(|(_, &p)| p)
            .collect();
        out.push(Graph::new(n, &edges).expect("enumerated graph is valid"));
    }
    out
}

/// All free (unlabeled) trees on `n` vertices, one representative each,
/// built by leaf extension with canonical-form deduplication.
pub fn free_trees(n: usize) -> Vec<Graph> {
    assert!(n >= 1, "trees need at least one vertex");
    let mut current: Vec<Vec<(usize, usize)>> = vec![Vec::new()]; // n = 1
    for k in 2..=n {
        let mut seen = std::collections::HashSet::new();
        let mut next = Vec::new();
        for tree in &current {
            for attach in 0..k - 1 {
                let mut edges = tree.clone();
                edges.push((attach, k - 1));
                let canon = tree_canonical_form(k, &edges);
                if seen.insert(canon) {
                    next.push(edges);
                }
            }
        }
        current = next;
    }
    current
        .into_iter()
        .map(|edges| Graph::new(n, &edges).expect("tree is valid"))
        .collect()
}

/// Canonical string of a tree, invariant under vertex relabeling: subtree
/// shapes are serialized bottom-up from the tree's center.
fn tree_canonical_form(n: usize, edges: &[(usize, usize)]) -> String {
    if n == 1 {
        return "()".to_string();
    }
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    // Peel leaves until one or two center vertices remain.
    let mut degree: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut removed = vec![false; n];
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        let mut next = Vec::new();
        for &v in &layer {
            removed[v] = true;
            remaining -= 1;
            for &w in &adj[v] {
                if !removed[w] {
                    degree[w] -= 1;
                    if degree[w] == 1 {
                        next.push(w);
                    }
                }
            }
        }
        layer = next;
    }
    let centers: Vec<usize> = (0..n).filter(|&v| !removed[v]).collect();
    fn encode(v: usize, parent: usize, adj: &[Vec<usize>]) -> String {
        let mut parts: Vec<String> = adj[v]
            .iter()
            .filter(|&&w| w != parent)
            .map(|&w| encode(w, v, adj))
            .collect();
        parts.sort();
        format!("({})", parts.concat())
    }
    match centers[..] {
        [c] => encode(c, usize::MAX, &adj),
        [c1, c2] => {
            let mut pair = [encode(c1, c2, &adj), encode(c2, c1, &adj)];
            pair.sort();
            format!("[{}{}]", pair[0], pair[1])
        }
        _ => unreachable!("a tree has one or two centers"),
    }
}

/// A random connected bipartite simple graph on `n >= 2` vertices: a random
/// proper two-sided split, a spanning tree respecting it, and a random
/// number of extra cross edges.
pub fn random_connected_bipartite(n: usize, rng: &mut impl Rng) -> Graph {
    assert!(n >= 2);
    let left_size = rng.gen_range(1..n);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let side: Vec<bool> = {
        let mut s = vec![false; n];
        for &v in order.iter().take(left_size) {
            s[v] = true;
        }
        s
    };
    // Spanning tree: seed with one cross edge, then attach each remaining
    // vertex to a random connected vertex on the opposite side.
    let first_left = order[0];
    let first_right = order[left_size];
    let mut connected = vec![first_left, first_right];
    let mut edges = vec![(first_left, first_right)];
    let mut rest: Vec<usize> = order
        .iter()
        .copied()
        .filter(|&v| v != first_left && v != first_right)
        .collect();
    rest.shuffle(rng);
    for v in rest {
        let opposite: Vec<usize> = connected
            .iter()
            .copied()
            .filter(|&w| side[w] != side[v])
            .collect();
        let w = opposite[rng.gen_range(0..opposite.len())];
        edges.push((v, w));
        connected.push(v);
    }
    let mut spare: Vec<(usize, usize)> = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if side[u] != side[v]
                && !edges
                    .iter()
                    .any(|&(a, b)| (a, b) == (u, v) || (a, b) == (v, u))
            {
                spare.push((u, v));
            }
        }
    }
    spare.shuffle(rng);
    let extra = rng.gen_range(0..=spare.len());
    edges.extend(spare.into_iter().take(extra));
    Graph::new(n, &edges).expect("constructed graph is valid")
}

/// A random bipartition of the vertices with both sides nonempty and
/// connected, or `None` if sampling fails repeatedly (e.g. on trees with
/// few such splits). The returned mask holds `true` on side one.
pub fn random_two_sided_partition(g: &Graph, rng: &mut impl Rng) -> Option<Vec<bool>> {
    let n = g.vertex_count();
    if n < 2 {
        return None;
    }
    for _ in 0..64 {
        let target = rng.gen_range(1..n);
        let start = rng.gen_range(0..n);
        let mut side = vec![false; n];
        side[start] = true;
        let mut frontier = vec![start];
        let mut size = 1;
        while size < target && !frontier.is_empty() {
            let i = rng.gen_range(0..frontier.len());
            let v = frontier.swap_remove(i);
            let mut candidates: Vec<usize> = g
                .incident(v)
                .iter()
                .map(|&(_, w)| w)
                .filter(|&w| !side[w])
                .collect();
            candidates.dedup();
            if candidates.is_empty() {
                continue;
            }
            let w = candidates[rng.gen_range(0..candidates.len())];
            side[w] = true;
            size += 1;
            frontier.push(v);
            frontier.push(w);
        }
        if size == 0 || size == n {
            continue;
        }
        if side_is_connected(g, &side, true) && side_is_connected(g, &side, false) {
            return Some(side);
        }
    }
    None
}

fn side_is_connected(g: &Graph, side: &[bool], which: bool) -> bool {
    let n = g.vertex_count();
    let members: Vec<usize> = (0..n).filter(|&v| side[v] == which).collect();
    if members.is_empty() {
        return false;
    }
    let mut seen = vec![false; n];
    let mut stack = vec![members[0]];
    seen[members[0]] = true;
    let mut count = 1;
    while let Some(v) = stack.pop() {
        for &(_, w) in g.incident(v) {
            if side[w] == which && !seen[w] {
                seen[w] = true;
                count += 1;
                stack.push(w);
            }
        }
    }
    count == members.len()
}
