//! Graphs up to isomorphism by vertex augmentation.
//!
//! Every connected graph on `n` vertices has a vertex whose removal leaves
//! it connected, so attaching a new vertex to every nonempty neighbor set of
//! every connected graph on `n - 1` vertices reaches all of them. Duplicates
//! are removed by canonical graph6 string, which also fixes the output order.

use std::collections::BTreeSet;

use crate::error::Result;
use crate::graph::SimpleGraph;
use crate::graph6;

fn augment(level: &[SimpleGraph], connected_only: bool) -> Result<Vec<SimpleGraph>> {
    let mut seen = BTreeSet::new();
    for g in level {
        let n = g.n() + 1;
        let base = g.edges();
        let first = if connected_only && n > 1 { 1 } else { 0 };
        for nbrs in first..1u32 << g.n() {
            let mut edges = base.clone();
            edges.extend((0..g.n()).filter(|&v| nbrs >> v & 1 == 1).map(|v| (v + 1, n)));
            seen.insert(SimpleGraph::new(n, &edges)?.canonical_graph6());
        }
    }
    seen.iter().map(|code| graph6::decode(code)).collect()
}

/// `levels[k]` holds the graphs on `k` vertices, for `k = 0..=max_n`, sorted
/// by canonical graph6 string.
pub fn enumerate_levels(max_n: usize, connected_only: bool) -> Result<Vec<Vec<SimpleGraph>>> {
    let mut levels = vec![vec![SimpleGraph::empty(0)?]];
    for _ in 0..max_n {
        let next = augment(levels.last().expect("nonempty"), connected_only)?;
        levels.push(next);
    }
    Ok(levels)
}

/// Graphs with at least one edge on `2..=max_n` vertices in census order:
/// by vertex count, then canonical graph6 string.
pub fn census_graphs(max_n: usize, connected_only: bool) -> Result<Vec<SimpleGraph>> {
    Ok(enumerate_levels(max_n, connected_only)?
        .into_iter()
        .flatten()
        .filter(|g| g.edge_count() > 0)
        .collect())
}
