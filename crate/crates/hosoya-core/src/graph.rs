//! Undirected simple connected graphs, BFS distances, the brute-force Hosoya
//! oracle, and partial Hosoya polynomials.
//!
//! Connectivity is enforced when a [`Graph`] is built (parser or
//! [`Graph::from_edges`]), so every downstream operation may assume it.

use std::collections::VecDeque;
use std::fmt::Write as _;

use num_bigint::BigInt;
use thiserror::Error;

use crate::poly::Polynomial;

/// Errors from graph construction and parsing.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    /// Malformed edge-list line.
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    /// Self-loop; only simple graphs are supported. `line` is the 1-based
    /// input line for parsed graphs, or the 1-based edge position for graphs
    /// built in code.
    #[error("line {line}: loop edge at vertex {id}")]
    LoopEdge { line: usize, id: u64 },
    /// The edge list describes a disconnected graph.
    #[error("graph is disconnected")]
    Disconnected,
    /// A graph must have at least one vertex.
    #[error("graph has no vertices")]
    Empty,
    /// Vertex id out of range.
    #[error("vertex {id} out of range for graph on {n} vertices")]
    VertexOutOfRange { id: u32, n: usize },
}

/// Undirected simple connected graph over vertex ids `0..n`, adjacency lists
/// sorted. Optional per-vertex labels are carried for debugging output and
/// never affect computation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<u32>>,
    labels: Option<Vec<String>>,
}

/// BFS distances from one source vertex; `dist[v]` is the hop count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceRow {
    pub source: u32,
    pub dist: Vec<u32>,
}

impl Graph {
    /// Builds a graph on `n` vertices from an edge list. Duplicate edges are
    /// collapsed; loops and disconnected inputs are rejected.
    pub fn from_edges(n: usize, edges: &[(u32, u32)]) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        let mut adj = vec![Vec::new(); n];
        for (pos, &(u, v)) in edges.iter().enumerate() {
            if u == v {
                return Err(GraphError::LoopEdge {
                    line: pos + 1,
                    id: u as u64,
                });
            }
            for id in [u, v] {
                if id as usize >= n {
                    return Err(GraphError::VertexOutOfRange { id, n });
                }
            }
            adj[u as usize].push(v);
            adj[v as usize].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        let g = Graph { adj, labels: None };
        if !g.is_connected() {
            return Err(GraphError::Disconnected);
        }
        Ok(g)
    }

    /// The one-vertex graph K1.
    pub fn single_vertex() -> Self {
        Graph {
            adj: vec![Vec::new()],
            labels: None,
        }
    }

    /// Complete graph on `q >= 1` vertices.
    pub fn complete(q: usize) -> Self {
        assert!(q >= 1);
        let adj = (0..q)
            .map(|u| (0..q as u32).filter(|&v| v != u as u32).collect())
            .collect();
        Graph { adj, labels: None }
    }

    /// Cycle on `q >= 3` vertices.
    pub fn cycle(q: usize) -> Self {
        assert!(q >= 3);
        let edges: Vec<(u32, u32)> = (0..q).map(|i| (i as u32, ((i + 1) % q) as u32)).collect();
        Graph::from_edges(q, &edges).expect("cycle is simple and connected")
    }

    /// Path on `q >= 1` vertices (q - 1 edges).
    pub fn path(q: usize) -> Self {
        assert!(q >= 1);
        let edges: Vec<(u32, u32)> = (1..q).map(|i| (i as u32 - 1, i as u32)).collect();
        Graph::from_edges(q, &edges).expect("path is simple and connected")
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges.
    pub fn m(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, u: u32) -> &[u32] {
        &self.adj[u as usize]
    }

    pub fn degree(&self, u: u32) -> usize {
        self.adj[u as usize].len()
    }

    /// Edges as (u, v) with u < v, lexicographically sorted.
    pub fn edges(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::with_capacity(self.m());
        for (u, list) in self.adj.iter().enumerate() {
            for &v in list {
                if (u as u32) < v {
                    out.push((u as u32, v));
                }
            }
        }
        out
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Attaches per-vertex labels; panics if the length does not match.
    pub fn set_labels(&mut self, labels: Vec<String>) {
        assert_eq!(labels.len(), self.n());
        self.labels = Some(labels);
    }

    pub fn clear_labels(&mut self) {
        self.labels = None;
    }

    fn is_connected(&self) -> bool {
        let mut dist = vec![u32::MAX; self.n()];
        let mut queue = VecDeque::new();
        bfs_into(&self.adj, 0, &mut dist, &mut queue);
        dist.iter().all(|&d| d != u32::MAX)
    }

    /// Checks vertex id validity.
    pub fn check_vertex(&self, id: u32) -> Result<(), GraphError> {
        if (id as usize) < self.n() {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { id, n: self.n() })
        }
    }

    /// Eccentricity-free diameter via BFS from every vertex.
    pub fn diameter(&self) -> u32 {
        (0..self.n() as u32)
            .map(|u| *self.bfs_distances(u).dist.iter().max().unwrap())
            .max()
            .unwrap_or(0)
    }

    /// Exact unweighted shortest-path distances from `source`.
    pub fn bfs_distances(&self, source: u32) -> DistanceRow {
        assert!((source as usize) < self.n(), "source out of range");
        let mut dist = vec![u32::MAX; self.n()];
        let mut queue = VecDeque::new();
        bfs_into(&self.adj, source, &mut dist, &mut queue);
        DistanceRow { source, dist }
    }

    /// Writes the edge list: one `u v` per line, sorted.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for (u, v) in self.edges() {
            writeln!(out, "{u} {v}").unwrap();
        }
        out
    }
}

fn bfs_into(adj: &[Vec<u32>], source: u32, dist: &mut [u32], queue: &mut VecDeque<u32>) {
    dist.fill(u32::MAX);
    dist[source as usize] = 0;
    queue.clear();
    queue.push_back(source);
    while let Some(u) = queue.pop_front() {
        let du = dist[u as usize];
        for &v in &adj[u as usize] {
            if dist[v as usize] == u32::MAX {
                dist[v as usize] = du + 1;
                queue.push_back(v);
            }
        }
    }
}

/// Parses the edge-list text format: one edge per line as two
/// whitespace-separated nonnegative integer ids, `#` starts a comment, blank
/// lines are ignored. Vertex ids are compacted to `0..n` preserving
/// first-appearance order; original ids are kept as labels when they differ.
pub fn parse_graph(text: &str) -> Result<Graph, GraphError> {
    let mut order: Vec<u64> = Vec::new();
    let mut index: std::collections::HashMap<u64, u32> = std::collections::HashMap::new();
    let mut edges: Vec<(u32, u32)> = Vec::new();

    for (lineno, raw) in text.lines().enumerate() {
        let line = lineno + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let mut it = content.split_ascii_whitespace();
        let a = it.next().expect("nonempty");
        let b = it.next().ok_or_else(|| GraphError::Parse {
            line,
            msg: format!("expected two vertex ids, got {content:?}"),
        })?;
        if it.next().is_some() {
            return Err(GraphError::Parse {
                line,
                msg: format!("expected two vertex ids, got {content:?}"),
            });
        }
        let parse_id = |tok: &str| -> Result<u64, GraphError> {
            tok.parse().map_err(|_| GraphError::Parse {
                line,
                msg: format!("invalid vertex id {tok:?}"),
            })
        };
        let (u, v) = (parse_id(a)?, parse_id(b)?);
        if u == v {
            return Err(GraphError::LoopEdge { line, id: u });
        }
        let mut intern = |id: u64| -> u32 {
            *index.entry(id).or_insert_with(|| {
                order.push(id);
                (order.len() - 1) as u32
            })
        };
        edges.push((intern(u), intern(v)));
    }

    if order.is_empty() {
        return Err(GraphError::Empty);
    }
    // loops and range errors were rejected per line above; only
    // connectivity can fail here
    let mut g = Graph::from_edges(order.len(), &edges)?;
    if order.iter().enumerate().any(|(i, &id)| i as u64 != id) {
        g.set_labels(order.iter().map(u64::to_string).collect());
    }
    Ok(g)
}

/// Brute-force Hosoya polynomial: BFS from every vertex, counting unordered
/// vertex pairs by distance. The coefficient of `t^k` is the number of pairs
/// at distance k; the degree is the diameter. This is the oracle every other
/// computation path is checked against.
pub fn hosoya_bruteforce(g: &Graph) -> Polynomial {
    let n = g.n();
    let mut hist = vec![0u64; n];
    let mut dist = vec![u32::MAX; n];
    let mut queue = VecDeque::new();
    for src in 0..n as u32 {
        bfs_into(&g.adj, src, &mut dist, &mut queue);
        for v in (src as usize + 1)..n {
            hist[dist[v] as usize] += 1;
        }
    }
    hist[0] = 0;
    Polynomial::from_coeffs(hist.into_iter().map(BigInt::from).collect())
}

/// Partial Hosoya polynomial with respect to `u`: the distance profile
/// `Σ_{v ≠ u} t^{d(u,v)}`. Coefficient sum is n - 1.
pub fn partial_hosoya(g: &Graph, u: u32) -> Polynomial {
    assert!((u as usize) < g.n(), "vertex out of range");
    let row = g.bfs_distances(u);
    let mut hist = vec![0u64; g.n()];
    for (v, &d) in row.dist.iter().enumerate() {
        if v as u32 != u {
            hist[d as usize] += 1;
        }
    }
    Polynomial::from_coeffs(hist.into_iter().map(BigInt::from).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Polynomial;

    fn p(coeffs: &[i64]) -> Polynomial {
        Polynomial::from_ints(coeffs)
    }

    #[test]
    fn parse_path_and_cycle() {
        let p3 = parse_graph("0 1\n1 2").unwrap();
        assert_eq!(p3.n(), 3);
        assert_eq!(p3.edges(), vec![(0, 1), (1, 2)]);

        let c3 = parse_graph("0 1\n1 2\n2 0").unwrap();
        assert_eq!(c3.n(), 3);
        assert_eq!(c3.m(), 3);
    }

    #[test]
    fn parse_rejects_disconnected() {
        assert_eq!(parse_graph("0 1\n2 3"), Err(GraphError::Disconnected));
    }

    #[test]
    fn parse_rejects_loops_and_garbage() {
        assert_eq!(
            parse_graph("0 1\n2 2"),
            Err(GraphError::LoopEdge { line: 2, id: 2 })
        );
        assert!(matches!(
            parse_graph("0 1\nx y"),
            Err(GraphError::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_graph("0 1 2"),
            Err(GraphError::Parse { line: 1, .. })
        ));
        assert_eq!(parse_graph("# nothing\n\n"), Err(GraphError::Empty));
    }

    #[test]
    fn parse_compacts_ids_in_first_appearance_order() {
        let g = parse_graph("# comment line\n10 20\n20 5 # trailing\n\n5 10").unwrap();
        assert_eq!(g.n(), 3);
        // 10 -> 0, 20 -> 1, 5 -> 2: a triangle
        assert_eq!(g.edges(), vec![(0, 1), (0, 2), (1, 2)]);
        assert_eq!(
            g.labels().unwrap(),
            &["10".to_string(), "20".to_string(), "5".to_string()]
        );
    }

    #[test]
    fn parse_collapses_duplicate_edges() {
        let g = parse_graph("0 1\n1 0\n0 1").unwrap();
        assert_eq!(g.m(), 1);
    }

    #[test]
    fn writer_emits_sorted_edges() {
        let g = parse_graph("2 1\n1 0\n0 2").unwrap();
        // ids compacted: 2->0, 1->1, 0->2
        assert_eq!(g.to_edge_list(), "0 1\n0 2\n1 2\n");
    }

    #[test]
    fn bfs_examples() {
        let c6 = Graph::cycle(6);
        let mut d = c6.bfs_distances(0).dist;
        d.sort_unstable();
        assert_eq!(d, vec![0, 1, 1, 2, 2, 3]);

        let k2 = Graph::complete(2);
        assert_eq!(k2.bfs_distances(0).dist, vec![0, 1]);

        let p3 = Graph::path(3);
        assert_eq!(p3.bfs_distances(0).dist, vec![0, 1, 2]);
    }

    #[test]
    fn bfs_triangle_inequality_on_edges() {
        let g = Graph::cycle(7);
        for u in 0..7u32 {
            let row = g.bfs_distances(u);
            for (w, list) in (0..7u32).map(|w| (w, g.neighbors(w))) {
                for &w2 in list {
                    let (a, b) = (row.dist[w as usize], row.dist[w2 as usize]);
                    assert!(a <= b + 1 && b <= a + 1);
                }
            }
        }
    }

    #[test]
    fn hosoya_bruteforce_examples() {
        assert_eq!(hosoya_bruteforce(&Graph::cycle(6)), p(&[0, 6, 6, 3]));
        assert!(hosoya_bruteforce(&Graph::single_vertex()).is_zero());
        for q in 2..=6usize {
            let expect = Polynomial::term((q * (q - 1) / 2) as i64, 1);
            assert_eq!(hosoya_bruteforce(&Graph::complete(q)), expect, "K_{q}");
        }
    }

    #[test]
    fn partial_hosoya_examples() {
        for u in 0..6 {
            assert_eq!(partial_hosoya(&Graph::cycle(6), u), p(&[0, 2, 2, 1]));
        }
        for q in 2..=6usize {
            assert_eq!(
                partial_hosoya(&Graph::complete(q), 0),
                Polynomial::term(q as i64 - 1, 1)
            );
        }
        assert!(partial_hosoya(&Graph::single_vertex(), 0).is_zero());
    }

    #[test]
    fn partials_sum_to_twice_hosoya() {
        for g in [Graph::cycle(5), Graph::complete(4), Graph::path(6)] {
            let mut total = Polynomial::zero();
            for u in 0..g.n() as u32 {
                total = &total + &partial_hosoya(&g, u);
            }
            assert_eq!(total, hosoya_bruteforce(&g).scale(2));
        }
    }

    #[test]
    fn hosoya_coefficient_sum_is_pairs_and_degree_is_diameter() {
        for g in [
            Graph::cycle(8),
            Graph::path(9),
            Graph::complete(5),
            parse_graph("0 1\n1 2\n2 0\n2 3").unwrap(),
        ] {
            let h = hosoya_bruteforce(&g);
            let n = g.n();
            assert_eq!(h.coeff_sum(), BigInt::from(n * (n - 1) / 2));
            if n > 1 {
                assert_eq!(h.degree(), Some(g.diameter() as usize));
            }
        }
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        prop_compose! {
            /// Random connected graph: a random spanning tree plus extras.
            fn connected_graph()(n in 1usize..9)(
                n in Just(n),
                parents in proptest::collection::vec(0u32..8, n.saturating_sub(1)),
                extras in proptest::collection::vec((0u32..8, 0u32..8), 0..6),
            ) -> Graph {
                let mut edges = Vec::new();
                for (i, &p) in parents.iter().enumerate() {
                    let child = (i + 1) as u32;
                    edges.push((p % child, child));
                }
                for &(a, b) in &extras {
                    let (a, b) = (a % n as u32, b % n as u32);
                    if a != b {
                        edges.push((a, b));
                    }
                }
                Graph::from_edges(n, &edges).expect("spanning tree keeps it connected")
            }
        }

        proptest! {
            #[test]
            fn partial_sum_identity(g in connected_graph()) {
                let mut total = Polynomial::zero();
                for u in 0..g.n() as u32 {
                    total = &total + &partial_hosoya(&g, u);
                }
                prop_assert_eq!(total, hosoya_bruteforce(&g).scale(2));
            }

            #[test]
            fn pair_count_and_diameter(g in connected_graph()) {
                let h = hosoya_bruteforce(&g);
                let n = g.n();
                prop_assert_eq!(h.coeff_sum(), BigInt::from(n * (n - 1) / 2));
                if n > 1 {
                    prop_assert_eq!(h.degree(), Some(g.diameter() as usize));
                }
                prop_assert!(h.coeff(0).bits() == 0);
            }
        }
    }
}
