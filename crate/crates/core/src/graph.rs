//! Simple graphs on `[n]`, their edge ideals and the clique/cycle ideals
//! `J1` (triangles), `J2` (4-cliques and 5-cycles), `J3` (5-cliques).

use std::fmt;

use crate::error::{Error, Result};
use crate::ideal::{bits, check_ambient, full_set, Monomial, MonomialIdeal, VarSet};

/// Undirected simple graph with 1-based vertices, stored as adjacency masks.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    n: usize,
    adj: Vec<VarSet>,
}

impl SimpleGraph {
    pub fn empty(n: usize) -> Result<Self> {
        check_ambient(n)?;
        Ok(SimpleGraph { n, adj: vec![0; n] })
    }

    /// Builds a graph from 1-based edges, rejecting loops, duplicates and
    /// out-of-range endpoints.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = SimpleGraph::empty(n)?;
        for (line, &(u, v)) in edges.iter().enumerate() {
            g.add_edge(u, v).map_err(|e| match e {
                Error::Parse { msg, .. } => Error::parse(line + 1, msg),
                other => other,
            })?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        for w in [u, v] {
            if w == 0 || w > self.n {
                return Err(Error::VertexOutOfRange { vertex: w, n: self.n });
            }
        }
        if u == v {
            return Err(Error::parse(0, format!("loop at vertex {u}")));
        }
        if self.has_edge(u, v) {
            return Err(Error::parse(0, format!("duplicate edge {u} {v}")));
        }
        self.adj[u - 1] |= 1 << (v - 1);
        self.adj[v - 1] |= 1 << (u - 1);
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u - 1] >> (v - 1) & 1 == 1
    }

    /// Open neighborhood mask of the 1-based vertex `v`.
    pub fn neighbors(&self, v: usize) -> VarSet {
        self.adj[v - 1]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v - 1].count_ones() as usize
    }

    /// Edges `(u, v)` with `u < v`, lexicographic.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 1..=self.n {
            for v in bits(self.adj[u - 1] >> u) {
                out.push((u, u + v + 1));
            }
        }
        out
    }

    pub fn edge_ideal(&self) -> MonomialIdeal {
        let gens = self.edges().into_iter().map(|(u, v)| Monomial::from_set(self.n, edge_set(u, v)));
        MonomialIdeal::from_generators(self.n, gens).expect("same ambient")
    }

    /// `N(U)` or `N[U]`.
    pub fn neighborhood(&self, set: VarSet, closed: bool) -> VarSet {
        let open = bits(set).fold(0, |acc, i| acc | self.adj[i]);
        if closed {
            open | set
        } else {
            open
        }
    }

    /// Vertex sets of size `k` inducing complete subgraphs.
    pub fn cliques(&self, k: usize) -> Vec<VarSet> {
        let mut out = Vec::new();
        self.extend_cliques(0, full_set(self.n), k, &mut out);
        out.sort_unstable();
        out
    }

    fn extend_cliques(&self, current: VarSet, candidates: VarSet, k: usize, out: &mut Vec<VarSet>) {
        if current.count_ones() as usize == k {
            out.push(current);
            return;
        }
        for v in bits(candidates) {
            // only larger vertices, so each clique is built once
            let higher = candidates & !((2u32 << v) - 1);
            self.extend_cliques(current | (1 << v), higher & self.adj[v], k, out);
        }
    }

    /// Every 5-cycle once, as `[v0, v1, v2, v3, v4]` (1-based) with `v0`
    /// minimal and `v1 < v4`.
    pub fn five_cycles(&self) -> Vec<[usize; 5]> {
        let mut out = Vec::new();
        for v0 in 0..self.n {
            let higher = full_set(self.n) & !((2u32 << v0) - 1);
            for v1 in bits(self.adj[v0] & higher) {
                for v2 in bits(self.adj[v1] & higher & !(1 << v1)) {
                    for v3 in bits(self.adj[v2] & higher & !(1 << v1 | 1 << v2)) {
                        let used = 1 << v1 | 1 << v2 | 1 << v3;
                        for v4 in bits(self.adj[v3] & self.adj[v0] & higher & !used) {
                            if v1 < v4 {
                                out.push([v0 + 1, v1 + 1, v2 + 1, v3 + 1, v4 + 1]);
                            }
                        }
                    }
                }
            }
        }
        out
    }

    /// `(J1, J2, J3)`.
    pub fn aux_ideals(&self) -> (MonomialIdeal, MonomialIdeal, MonomialIdeal) {
        let n = self.n;
        let squarefree = |sets: Vec<VarSet>| {
            MonomialIdeal::from_generators(n, sets.into_iter().map(|s| Monomial::from_set(n, s)))
                .expect("same ambient")
        };
        let j1 = squarefree(self.cliques(3));
        let mut j2_sets = self.cliques(4);
        j2_sets.extend(
            self.five_cycles().iter().map(|c| c.iter().fold(0, |acc, &v| acc | 1 << (v - 1))),
        );
        let j2 = squarefree(j2_sets);
        let j3 = squarefree(self.cliques(5));
        (j1, j2, j3)
    }

    /// Inclusion-minimal vertex covers.
    pub fn minimal_vertex_covers(&self) -> Result<Vec<VarSet>> {
        let edges: Vec<VarSet> = self.edges().into_iter().map(|(u, v)| edge_set(u, v)).collect();
        if edges.is_empty() {
            return Err(Error::EdgelessGraph);
        }
        Ok(minimal_transversals(&edges))
    }

    pub fn is_bipartite(&self) -> bool {
        let mut color = vec![u8::MAX; self.n];
        for start in 0..self.n {
            if color[start] != u8::MAX {
                continue;
            }
            color[start] = 0;
            let mut stack = vec![start];
            while let Some(u) = stack.pop() {
                for v in bits(self.adj[u]) {
                    if color[v] == u8::MAX {
                        color[v] = 1 - color[u];
                        stack.push(v);
                    } else if color[v] == color[u] {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen: VarSet = 1;
        let mut frontier: VarSet = 1;
        while frontier != 0 {
            let next = self.neighborhood(frontier, false) & !seen;
            seen |= next;
            frontier = next;
        }
        seen == full_set(self.n)
    }

    /// `(matching number, induced matching number μ(G))`.
    pub fn matching_stats(&self) -> (usize, usize) {
        let edges = self.edges();
        (self.max_matching(full_set(self.n)), max_induced_matching(self, &edges, 0, 0))
    }

    fn max_matching(&self, available: VarSet) -> usize {
        // lowest unmatched vertex with an available neighbor is either left
        // out or matched to one of them
        let Some(v) = bits(available).find(|&v| self.adj[v] & available != 0) else {
            return 0;
        };
        let rest = available & !(1 << v);
        let mut best = self.max_matching(rest);
        for u in bits(self.adj[v] & rest) {
            best = best.max(1 + self.max_matching(rest & !(1 << u)));
        }
        best
    }

    /// `G[U]`, keeping the original vertex labels; vertices outside `U` become
    /// isolated.
    pub fn induced_subgraph(&self, set: VarSet) -> SimpleGraph {
        let adj = (0..self.n)
            .map(|v| if set >> v & 1 == 1 { self.adj[v] & set } else { 0 })
            .collect();
        SimpleGraph { n: self.n, adj }
    }

    /// Vertices with at least one neighbor.
    pub fn non_isolated(&self) -> VarSet {
        (0..self.n).filter(|&v| self.adj[v] != 0).fold(0, |acc, v| acc | 1 << v)
    }

    /// Relabels: vertex `order[k]` (0-based) becomes vertex `k + 1`.
    pub fn permuted(&self, order: &[usize]) -> SimpleGraph {
        let mut pos = vec![0usize; self.n];
        for (k, &v) in order.iter().enumerate() {
            pos[v] = k;
        }
        let mut adj = vec![0; self.n];
        for (u, &nbrs) in self.adj.iter().enumerate() {
            adj[pos[u]] = bits(nbrs).fold(0, |acc, v| acc | 1 << pos[v]);
        }
        SimpleGraph { n: self.n, adj }
    }

    /// Canonical relabeling: the labeling whose graph6 bit string is
    /// smallest among orderings that list vertices by a refined degree key.
    pub fn canonical_form(&self) -> SimpleGraph {
        let order = self.canonical_order();
        self.permuted(&order)
    }

    pub fn canonical_graph6(&self) -> String {
        crate::graph6::encode(&self.canonical_form())
    }

    fn canonical_order(&self) -> Vec<usize> {
        let n = self.n;
        if n <= 1 {
            return (0..n).collect();
        }
        let key = |v: usize| {
            let mut nd: Vec<usize> = bits(self.adj[v]).map(|u| self.adj[u].count_ones() as usize).collect();
            nd.sort_unstable();
            (std::cmp::Reverse(self.adj[v].count_ones()), std::cmp::Reverse(nd))
        };
        let mut vertices: Vec<usize> = (0..n).collect();
        vertices.sort_by_key(|&v| key(v));
        let mut class = vec![0usize; n];
        for k in 1..n {
            class[k] = if key(vertices[k]) == key(vertices[k - 1]) { class[k - 1] } else { k };
        }
        // class[k]: first position of the block containing position k
        let mut search = CanonSearch {
            graph: self,
            vertices,
            class,
            order: Vec::with_capacity(n),
            used: 0,
            best: None,
            best_code: u128::MAX,
        };
        search.run(0, 0, false);
        search.best.expect("at least one ordering")
    }

    pub fn to_edge_list_text(&self) -> String {
        let edges = self.edges();
        let mut out = format!("{} {}\n", self.n, edges.len());
        for (u, v) in edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

struct CanonSearch<'a> {
    graph: &'a SimpleGraph,
    vertices: Vec<usize>,
    class: Vec<usize>,
    order: Vec<usize>,
    used: VarSet,
    best: Option<Vec<usize>>,
    best_code: u128,
}

impl CanonSearch<'_> {
    /// `prefix` holds the code bits of `order`; `below` is set once the
    /// prefix is already strictly smaller than the best code's prefix.
    fn run(&mut self, depth: usize, prefix: u128, below: bool) {
        let n = self.graph.n;
        if depth == n {
            if prefix < self.best_code {
                self.best_code = prefix;
                self.best = Some(self.order.clone());
            }
            return;
        }
        let total_bits = n * (n - 1) / 2;
        let start = self.class[depth];
        let end = (start..n).take_while(|&k| self.class[k] == start).count() + start;
        for slot in start..end {
            let v = self.vertices[slot];
            if self.used >> v & 1 == 1 {
                continue;
            }
            let mut code = prefix;
            for &u in &self.order {
                code = code << 1 | (self.graph.adj[u] >> v & 1) as u128;
            }
            let mut now_below = below;
            if !below && self.best.is_some() {
                let len = (depth + 1) * depth / 2;
                let best_prefix = if len == 0 { 0 } else { self.best_code >> (total_bits - len) };
                if code > best_prefix {
                    continue;
                }
                now_below = code < best_prefix;
            }
            self.order.push(v);
            self.used |= 1 << v;
            self.run(depth + 1, code, now_below);
            self.used &= !(1 << v);
            self.order.pop();
        }
    }
}

pub(crate) fn edge_set(u: usize, v: usize) -> VarSet {
    (1 << (u - 1)) | (1 << (v - 1))
}

fn max_induced_matching(g: &SimpleGraph, edges: &[(usize, usize)], from: usize, blocked: VarSet) -> usize {
    let mut best = 0;
    for (k, &(u, v)) in edges.iter().enumerate().skip(from) {
        let e = edge_set(u, v);
        if e & blocked != 0 {
            continue;
        }
        let block = g.neighborhood(e, true);
        best = best.max(1 + max_induced_matching(g, edges, k + 1, blocked | block));
    }
    best
}

/// Inclusion-minimal sets meeting every set in `family` (minimal primes of a
/// squarefree monomial ideal with these supports).
pub fn minimal_transversals(family: &[VarSet]) -> Vec<VarSet> {
    let hits = |t: VarSet| family.iter().all(|&e| e & t != 0);
    let universe = family.iter().fold(0, |a, &e| a | e);
    let mut out = Vec::new();
    let mut t = universe;
    loop {
        if hits(t) && bits(t).all(|i| !hits(t & !(1 << i))) {
            out.push(t);
        }
        if t == 0 {
            break;
        }
        t = (t - 1) & universe;
    }
    out.sort_unstable_by_key(|&t| (t.count_ones(), t));
    out
}

impl fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SimpleGraph(n={}, edges={:?})", self.n, self.edges())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::vertices_to_set;

    fn cycle(n: usize) -> SimpleGraph {
        let edges: Vec<_> = (1..=n).map(|i| (i, i % n + 1)).collect();
        SimpleGraph::new(n, &edges).unwrap()
    }

    fn complete(n: usize) -> SimpleGraph {
        let mut edges = Vec::new();
        for u in 1..=n {
            for v in u + 1..=n {
                edges.push((u, v));
            }
        }
        SimpleGraph::new(n, &edges).unwrap()
    }

    fn path(n: usize) -> SimpleGraph {
        let edges: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
        SimpleGraph::new(n, &edges).unwrap()
    }

    fn set(n: usize, v: &[usize]) -> VarSet {
        vertices_to_set(n, v).unwrap()
    }

    fn sq(n: usize, sets: &[&[usize]]) -> MonomialIdeal {
        MonomialIdeal::from_generators(n, sets.iter().map(|s| Monomial::from_set(n, set(n, s))))
            .unwrap()
    }

    #[test]
    fn construction_errors() {
        assert!(matches!(SimpleGraph::new(2, &[(1, 1)]), Err(Error::Parse { .. })));
        assert!(matches!(SimpleGraph::new(3, &[(1, 2), (2, 1)]), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(SimpleGraph::new(3, &[(1, 4)]), Err(Error::VertexOutOfRange { .. })));
    }

    #[test]
    fn edge_ideal_examples() {
        assert_eq!(cycle(3).edge_ideal(), sq(3, &[&[1, 2], &[1, 3], &[2, 3]]));
        assert!(SimpleGraph::empty(4).unwrap().edge_ideal().is_empty());
        assert_eq!(path(3).edge_ideal(), sq(3, &[&[1, 2], &[2, 3]]));
    }

    #[test]
    fn neighborhood_examples() {
        let c5 = cycle(5);
        assert_eq!(c5.neighborhood(set(5, &[1]), false), set(5, &[2, 5]));
        assert_eq!(c5.neighborhood(0, true), 0);
        assert_eq!(cycle(3).neighborhood(set(3, &[1, 2]), true), set(3, &[1, 2, 3]));
    }

    #[test]
    fn clique_examples() {
        assert!(cycle(5).cliques(3).is_empty());
        assert_eq!(complete(4).cliques(4), vec![0b1111]);
        // brute force over all triples of K4
        let brute: Vec<VarSet> = (0u32..16).filter(|s| s.count_ones() == 3).collect();
        assert_eq!(complete(4).cliques(3), brute);
    }

    #[test]
    fn five_cycle_examples() {
        assert_eq!(cycle(5).five_cycles(), vec![[1, 2, 3, 4, 5]]);
        assert!(cycle(4).five_cycles().is_empty());
        assert_eq!(complete(5).five_cycles().len(), 12);
    }

    #[test]
    fn aux_ideal_examples() {
        let (j1, j2, j3) = cycle(3).aux_ideals();
        assert_eq!(j1, sq(3, &[&[1, 2, 3]]));
        assert!(j2.is_empty() && j3.is_empty());
        let (j1, j2, j3) = cycle(5).aux_ideals();
        assert!(j1.is_empty() && j3.is_empty());
        assert_eq!(j2, sq(5, &[&[1, 2, 3, 4, 5]]));
        let (_, _, j3) = complete(5).aux_ideals();
        assert_eq!(j3, sq(5, &[&[1, 2, 3, 4, 5]]));
    }

    #[test]
    fn vertex_cover_examples() {
        let edge = SimpleGraph::new(2, &[(1, 2)]).unwrap();
        assert_eq!(edge.minimal_vertex_covers().unwrap(), vec![0b01, 0b10]);
        assert_eq!(cycle(3).minimal_vertex_covers().unwrap(), vec![0b011, 0b101, 0b110]);
        let covers = cycle(5).minimal_vertex_covers().unwrap();
        assert_eq!(covers.len(), 5);
        assert!(covers.iter().all(|c| c.count_ones() == 3));
        assert_eq!(SimpleGraph::empty(3).unwrap().minimal_vertex_covers(), Err(Error::EdgelessGraph));
    }

    #[test]
    fn bipartite_examples() {
        assert!(cycle(4).is_bipartite());
        assert!(!cycle(5).is_bipartite());
        assert!(!complete(4).is_bipartite());
    }

    #[test]
    fn matching_examples() {
        assert_eq!(cycle(5).matching_stats(), (2, 1));
        assert_eq!(SimpleGraph::new(2, &[(1, 2)]).unwrap().matching_stats(), (1, 1));
        assert_eq!(path(4).matching_stats(), (2, 1));
        assert_eq!(path(5).matching_stats(), (2, 2));
        assert_eq!(complete(6).matching_stats(), (3, 1));
    }

    #[test]
    fn induced_subgraph_examples() {
        let c5 = cycle(5);
        let p = c5.induced_subgraph(set(5, &[1, 2, 3]));
        assert_eq!(p.edges(), vec![(1, 2), (2, 3)]);
        assert_eq!(c5.induced_subgraph(full_set(5)), c5);
        assert_eq!(complete(4).induced_subgraph(set(4, &[1, 2])).edges(), vec![(1, 2)]);
        for u in 0..32 {
            assert_eq!(c5.edge_ideal().restrict(u), c5.induced_subgraph(u).edge_ideal());
        }
    }

    #[test]
    fn canonical_form_is_label_invariant() {
        let g = SimpleGraph::new(6, &[(1, 2), (2, 3), (3, 1), (3, 4), (4, 5), (5, 6)]).unwrap();
        let canon = g.canonical_form();
        let orders: [[usize; 6]; 3] = [[5, 4, 3, 2, 1, 0], [1, 3, 5, 0, 2, 4], [2, 0, 1, 5, 3, 4]];
        for order in orders {
            assert_eq!(g.permuted(&order).canonical_form(), canon);
        }
        assert_ne!(cycle(6).canonical_form(), path(6).canonical_form());
        assert_eq!(cycle(6).canonical_form().edge_count(), 6);
    }
}
