//! Simple undirected graphs on `1..=n` backed by one `u64` adjacency word per
//! vertex.
//!
//! Vertices are 1-indexed in every public signature and 0-indexed in the bit
//! layout (bit `v - 1` stands for vertex `v`).

use std::fmt;
use std::str::FromStr;

use crate::error::GraphError;

/// Largest supported vertex count.
pub const MAX_VERTICES: usize = 64;

/// 1-indexed vertex label.
pub type Vertex = usize;

/// Subset of `[n]` stored as a bit mask. The derived order compares masks;
/// use [`VertexSet::lex_cmp`] for lexicographic order on members.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    /// `{1, ..., n}`.
    pub fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: Vertex) -> Self {
        debug_assert!((1..=MAX_VERTICES).contains(&v));
        VertexSet(1u64 << (v - 1))
    }

    pub fn from_vertices<I: IntoIterator<Item = Vertex>>(vs: I) -> Self {
        vs.into_iter().fold(VertexSet::EMPTY, |acc, v| acc.with(v))
    }

    pub fn contains(self, v: Vertex) -> bool {
        (1..=MAX_VERTICES).contains(&v) && self.0 >> (v - 1) & 1 == 1
    }

    pub fn insert(&mut self, v: Vertex) {
        self.0 |= 1u64 << (v - 1);
    }

    pub fn remove(&mut self, v: Vertex) {
        self.0 &= !(1u64 << (v - 1));
    }

    #[must_use]
    pub fn with(self, v: Vertex) -> Self {
        VertexSet(self.0 | 1u64 << (v - 1))
    }

    #[must_use]
    pub fn without(self, v: Vertex) -> Self {
        VertexSet(self.0 & !(1u64 << (v - 1)))
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Smallest member.
    pub fn first(self) -> Option<Vertex> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize + 1)
    }

    /// Largest member.
    pub fn last(self) -> Option<Vertex> {
        (self.0 != 0).then(|| 64 - self.0.leading_zeros() as usize)
    }

    /// Members in increasing order.
    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }

    pub fn to_vec(self) -> Vec<Vertex> {
        self.iter().collect()
    }

    /// Lexicographic comparison of the sorted member lists. This is the
    /// tie-breaking order used for reproducible witnesses.
    pub fn lex_cmp(self, other: Self) -> std::cmp::Ordering {
        self.iter().cmp(other.iter())
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, v) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        VertexSet::from_vertices(iter)
    }
}

impl IntoIterator for VertexSet {
    type Item = Vertex;
    type IntoIter = VertexIter;

    fn into_iter(self) -> VertexIter {
        self.iter()
    }
}

pub struct VertexIter(u64);

impl Iterator for VertexIter {
    type Item = Vertex;

    fn next(&mut self) -> Option<Vertex> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize + 1;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for VertexIter {}

/// Finite simple graph on `[n]`. Immutable once built.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
    edges: Vec<(Vertex, Vertex)>,
}

/// Result of [`Graph::induced_subgraph`]: the subgraph on `1..=k` plus the
/// original label of every new vertex.
#[derive(Clone, Debug)]
pub struct InducedSubgraph {
    pub graph: Graph,
    /// `labels[new - 1]` is the original vertex that became `new`.
    pub labels: Vec<Vertex>,
}

impl InducedSubgraph {
    /// New label of an original vertex, if it was kept.
    pub fn new_label(&self, old: Vertex) -> Option<Vertex> {
        self.labels.iter().position(|&v| v == old).map(|p| p + 1)
    }
}

impl Graph {
    /// Builds a graph from an edge list. Edges are normalized to `u < v` and
    /// deduplicated.
    pub fn new(n: usize, edge_list: &[(Vertex, Vertex)]) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::NoVertices);
        }
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices { n });
        }
        let mut adj = vec![0u64; n];
        for &(u, v) in edge_list {
            for w in [u, v] {
                if w == 0 || w > n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::Loop { vertex: u });
            }
            adj[u - 1] |= 1u64 << (v - 1);
            adj[v - 1] |= 1u64 << (u - 1);
        }
        Ok(Self::from_adjacency(adj))
    }

    fn from_adjacency(adj: Vec<u64>) -> Self {
        let n = adj.len();
        let mut edges = Vec::new();
        for u in 1..=n {
            for v in VertexSet(adj[u - 1]).iter().filter(|&v| v > u) {
                edges.push((u, v));
            }
        }
        Graph { n, adj, edges }
    }

    pub fn empty(n: usize) -> Result<Self, GraphError> {
        Self::new(n, &[])
    }

    pub fn complete(n: usize) -> Result<Self, GraphError> {
        let edges: Vec<_> = (1..=n)
            .flat_map(|u| (u + 1..=n).map(move |v| (u, v)))
            .collect();
        Self::new(n, &edges)
    }

    pub fn path(n: usize) -> Result<Self, GraphError> {
        let edges: Vec<_> = (1..n).map(|u| (u, u + 1)).collect();
        Self::new(n, &edges)
    }

    pub fn cycle(n: usize) -> Result<Self, GraphError> {
        let mut edges: Vec<_> = (1..n).map(|u| (u, u + 1)).collect();
        if n >= 3 {
            edges.push((1, n));
        }
        Self::new(n, &edges)
    }

    /// Star with center `1` and `leaves` further vertices.
    pub fn star(leaves: usize) -> Result<Self, GraphError> {
        let edges: Vec<_> = (2..=leaves + 1).map(|v| (1, v)).collect();
        Self::new(leaves + 1, &edges)
    }

    /// Complete multipartite graph; parts are consecutive label blocks.
    pub fn complete_multipartite(parts: &[usize]) -> Result<Self, GraphError> {
        let n: usize = parts.iter().sum();
        let mut block = Vec::with_capacity(n);
        for (p, &size) in parts.iter().enumerate() {
            block.extend(std::iter::repeat_n(p, size));
        }
        let mut edges = Vec::new();
        for u in 1..=n {
            for v in u + 1..=n {
                if block[u - 1] != block[v - 1] {
                    edges.push((u, v));
                }
            }
        }
        Self::new(n, &edges)
    }

    /// Builds a graph from an upper-triangle bit mask (pair order `(1,2), (1,3), ..., (n-1,n)`).
    pub fn from_pair_mask(n: usize, mask: u64) -> Result<Self, GraphError> {
        let mut edges = Vec::new();
        let mut bit = 0;
        for u in 1..=n {
            for v in u + 1..=n {
                if mask >> bit & 1 == 1 {
                    edges.push((u, v));
                }
                bit += 1;
            }
        }
        Self::new(n, &edges)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u != v && u >= 1 && u <= self.n && self.adj[u - 1] >> (v - 1) & 1 == 1
    }

    pub fn neighbors(&self, v: Vertex) -> VertexSet {
        VertexSet(self.adj[v - 1])
    }

    pub fn closed_neighbors(&self, v: Vertex) -> VertexSet {
        self.neighbors(v).with(v)
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v - 1].count_ones() as usize
    }

    pub fn max_degree(&self) -> usize {
        (1..=self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Non-adjacent pairs `(i, j)`, `i < j`.
    pub fn non_edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::new();
        for i in 1..=self.n {
            for j in i + 1..=self.n {
                if !self.has_edge(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn is_complete(&self) -> bool {
        self.edges.len() == self.n * (self.n - 1) / 2
    }

    /// Union of the neighborhoods of the members of `s`.
    pub fn neighborhood(&self, s: VertexSet) -> VertexSet {
        s.iter()
            .fold(VertexSet::EMPTY, |acc, v| acc.union(self.neighbors(v)))
    }

    /// Vertices of `within` reachable from `start` inside `within`.
    pub fn reach_within(&self, start: Vertex, within: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let next = self.neighborhood(frontier).intersection(within).difference(seen);
            seen = seen.union(next);
            frontier = next;
        }
        seen
    }

    /// Connected components of the subgraph induced on `within`, ordered by
    /// smallest member.
    pub fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut rest = within;
        let mut out = Vec::new();
        while let Some(v) = rest.first() {
            let comp = self.reach_within(v, within);
            rest = rest.difference(comp);
            out.push(comp);
        }
        out
    }

    pub fn connected_components(&self) -> Vec<VertexSet> {
        self.components_within(self.vertices())
    }

    pub fn is_connected(&self) -> bool {
        self.reach_within(1, self.vertices()) == self.vertices()
    }

    /// Whether `s` induces a connected subgraph. The empty set does not.
    pub fn induces_connected(&self, s: VertexSet) -> bool {
        match s.first() {
            None => false,
            Some(v) => self.reach_within(v, s) == s,
        }
    }

    /// Subgraph induced on `s`, relabeled to `1..=|s|` preserving order.
    ///
    /// An empty `s` yields an empty vertex list; since a [`Graph`] needs at
    /// least one vertex this returns `None` in that case.
    pub fn induced_subgraph(&self, s: VertexSet) -> Option<InducedSubgraph> {
        let labels = s.to_vec();
        if labels.is_empty() {
            return None;
        }
        let mut pos = [0usize; MAX_VERTICES + 1];
        for (k, &v) in labels.iter().enumerate() {
            pos[v] = k + 1;
        }
        let mut edges = Vec::new();
        for &(u, v) in &self.edges {
            if s.contains(u) && s.contains(v) {
                edges.push((pos[u], pos[v]));
            }
        }
        let graph = Graph::new(labels.len(), &edges).expect("relabeled subgraph is valid");
        Some(InducedSubgraph { graph, labels })
    }

    /// Whether removing `v` strictly increases the number of components.
    pub fn is_cut_point(&self, v: Vertex) -> bool {
        self.is_cut_point_within(v, self.vertices())
    }

    /// Cut-point test for `v` in the subgraph induced on `within` (`v ∈ within`).
    pub fn is_cut_point_within(&self, v: Vertex, within: VertexSet) -> bool {
        let before = self.components_within(within).len();
        let after = self.components_within(within.without(v)).len();
        after > before
    }

    /// All simple paths from `i` to `j` as full vertex sequences, in
    /// lexicographic order.
    pub fn simple_paths_between(&self, i: Vertex, j: Vertex) -> Vec<Vec<Vertex>> {
        let mut out = Vec::new();
        let mut path = vec![i];
        self.extend_paths(j, VertexSet::singleton(i), &mut path, &mut out);
        out
    }

    fn extend_paths(
        &self,
        target: Vertex,
        on_path: VertexSet,
        path: &mut Vec<Vertex>,
        out: &mut Vec<Vec<Vertex>>,
    ) {
        let last = *path.last().unwrap();
        for w in self.neighbors(last).difference(on_path) {
            path.push(w);
            if w == target {
                out.push(path.clone());
            } else {
                self.extend_paths(target, on_path.with(w), path, out);
            }
            path.pop();
        }
    }

    pub fn complement(&self) -> Graph {
        let full = self.vertices().bits();
        let adj = (0..self.n)
            .map(|k| full & !self.adj[k] & !(1u64 << k))
            .collect();
        Graph::from_adjacency(adj)
    }

    /// Graph with `g` edge `{u, v}` mapped to `{perm[u-1], perm[v-1]}`.
    pub fn relabel(&self, perm: &[Vertex]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let edges: Vec<_> = self
            .edges
            .iter()
            .map(|&(u, v)| (perm[u - 1], perm[v - 1]))
            .collect();
        Graph::new(self.n, &edges).expect("permutation keeps the graph valid")
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let shift = self.n;
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|&(u, v)| (u + shift, v + shift)));
        Graph::new(self.n + other.n, &edges)
    }

    /// Returns a copy with one more edge.
    pub fn with_edge(&self, u: Vertex, v: Vertex) -> Result<Graph, GraphError> {
        let mut edges = self.edges.clone();
        edges.push((u, v));
        Graph::new(self.n, &edges)
    }

    /// Renders the text format accepted by [`Graph::from_str`].
    pub fn to_text(&self) -> String {
        let mut s = format!("{} {}\n", self.n, self.edges.len());
        for (u, v) in &self.edges {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

/// Parses `n m` followed by `m` lines `u v`. `#` starts a comment.
impl FromStr for Graph {
    type Err = GraphError;

    fn from_str(text: &str) -> Result<Self, GraphError> {
        let mut header: Option<(usize, usize, usize)> = None;
        let mut edges = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields.len() != 2 {
                return Err(GraphError::Parse {
                    line: line_no,
                    message: format!("expected two integers, found {:?}", line),
                });
            }
            let parse = |s: &str| {
                s.parse::<usize>().map_err(|_| GraphError::Parse {
                    line: line_no,
                    message: format!("not a non-negative integer: {s:?}"),
                })
            };
            let (a, b) = (parse(fields[0])?, parse(fields[1])?);
            match header {
                None => header = Some((a, b, line_no)),
                Some((n, _, _)) => {
                    for w in [a, b] {
                        if w == 0 || w > n {
                            return Err(GraphError::Parse {
                                line: line_no,
                                message: format!("vertex {w} outside 1..={n}"),
                            });
                        }
                    }
                    if a == b {
                        return Err(GraphError::Parse {
                            line: line_no,
                            message: format!("loop at vertex {a}"),
                        });
                    }
                    edges.push((a, b));
                }
            }
        }
        let (n, m, line) = header.ok_or(GraphError::Parse {
            line: 0,
            message: "missing `n m` header".into(),
        })?;
        if edges.len() != m {
            return Err(GraphError::Parse {
                line,
                message: format!("header announces {m} edges, found {}", edges.len()),
            });
        }
        Graph::new(n, &edges)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::HashSet;

    fn tree_ten() -> Graph {
        crate::catalog::tree_ten()
    }

    #[test]
    fn build_cycle_and_normalize() {
        let c5 = Graph::new(5, &[(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)]).unwrap();
        assert_eq!(c5.edge_count(), 5);
        let g = Graph::new(5, &[(2, 1), (1, 2)]).unwrap();
        assert_eq!(g.edges(), &[(1, 2)]);
        assert_eq!(tree_ten().edge_count(), 9);
    }

    #[test]
    fn build_rejects_bad_input() {
        assert!(matches!(
            Graph::new(3, &[(1, 4)]),
            Err(GraphError::VertexOutOfRange { vertex: 4, n: 3 })
        ));
        assert!(matches!(Graph::new(3, &[(2, 2)]), Err(GraphError::Loop { vertex: 2 })));
        assert!(matches!(Graph::new(65, &[]), Err(GraphError::TooManyVertices { .. })));
    }

    #[test]
    fn components() {
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(c5.connected_components(), vec![VertexSet::full(5)]);
        let e3 = Graph::empty(3).unwrap();
        assert_eq!(
            e3.connected_components(),
            vec![
                VertexSet::singleton(1),
                VertexSet::singleton(2),
                VertexSet::singleton(3)
            ]
        );
        let p2p3 = Graph::new(5, &[(1, 2), (3, 4), (4, 5)]).unwrap();
        assert_eq!(p2p3.connected_components().len(), 2);
    }

    #[test]
    fn induced_subgraphs() {
        let c5 = Graph::cycle(5).unwrap();
        let sub = c5.induced_subgraph(VertexSet::from_vertices([1, 2, 3])).unwrap();
        assert_eq!(sub.graph, Graph::path(3).unwrap());
        assert_eq!(sub.labels, vec![1, 2, 3]);
        let k4 = Graph::complete(4).unwrap();
        let sub = k4.induced_subgraph(VertexSet::from_vertices([1, 4])).unwrap();
        assert_eq!(sub.graph.edges(), &[(1, 2)]);
        assert_eq!(sub.new_label(4), Some(2));
        let t = tree_ten();
        let sub = t.induced_subgraph(t.vertices().without(4)).unwrap();
        assert_eq!(sub.graph.connected_components().len(), 4);
    }

    #[test]
    fn cut_points() {
        assert!(Graph::path(3).unwrap().is_cut_point(2));
        let c5 = Graph::cycle(5).unwrap();
        assert!((1..=5).all(|v| !c5.is_cut_point(v)));
        assert!(tree_ten().is_cut_point(4));
    }

    #[test]
    fn neighborhoods() {
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(c5.neighborhood(VertexSet::singleton(1)), VertexSet::from_vertices([2, 5]));
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(k4.neighborhood(VertexSet::singleton(1)), VertexSet::from_vertices([2, 3, 4]));
        assert_eq!(k4.neighborhood(VertexSet::EMPTY), VertexSet::EMPTY);
    }

    #[test]
    fn paths() {
        assert_eq!(Graph::path(3).unwrap().simple_paths_between(1, 3), vec![vec![1, 2, 3]]);
        assert_eq!(
            Graph::cycle(4).unwrap().simple_paths_between(1, 3),
            vec![vec![1, 2, 3], vec![1, 4, 3]]
        );
        assert_eq!(Graph::complete(4).unwrap().simple_paths_between(1, 2).len(), 5);
        let two = Graph::new(4, &[(1, 2), (3, 4)]).unwrap();
        assert!(two.simple_paths_between(1, 4).is_empty());
    }

    #[test]
    fn text_format() {
        let g: Graph = "# a path\n3 2\n1 2 # first\n\n2 3\n".parse().unwrap();
        assert_eq!(g, Graph::path(3).unwrap());
        assert_eq!(g.to_text().parse::<Graph>().unwrap(), g);
        match "3 2\n1 2\n2 x\n".parse::<Graph>() {
            Err(GraphError::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!("3 1\n1 5\n".parse::<Graph>(), Err(GraphError::Parse { line: 2, .. })));
        assert!(matches!("3 2\n1 2\n".parse::<Graph>(), Err(GraphError::Parse { .. })));
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (1..=max_n).prop_flat_map(|n| {
            let pairs = n * (n - 1) / 2;
            proptest::bits::u64::between(0, pairs.max(1))
                .prop_map(move |mask| Graph::from_pair_mask(n, mask).unwrap())
        })
    }

    proptest! {
        #[test]
        fn cut_point_matches_component_count(g in arb_graph(8)) {
            let before = g.connected_components().len();
            for v in 1..=g.n() {
                let after = match g.induced_subgraph(g.vertices().without(v)) {
                    Some(sub) => sub.graph.connected_components().len(),
                    None => 0,
                };
                prop_assert_eq!(g.is_cut_point(v), after > before);
            }
        }

        #[test]
        fn neighborhood_is_additive(g in arb_graph(10), a in any::<u64>(), b in any::<u64>()) {
            let full = g.vertices().bits();
            let (a, b) = (VertexSet::from_bits(a & full), VertexSet::from_bits(b & full));
            prop_assert_eq!(
                g.neighborhood(a.union(b)),
                g.neighborhood(a).union(g.neighborhood(b))
            );
        }

        #[test]
        fn simple_paths_are_distinct_and_simple(g in arb_graph(7)) {
            for i in 1..=g.n() {
                for j in i + 1..=g.n() {
                    let paths = g.simple_paths_between(i, j);
                    let unique: HashSet<_> = paths.iter().collect();
                    prop_assert_eq!(unique.len(), paths.len());
                    let mut sorted = paths.clone();
                    sorted.sort();
                    prop_assert_eq!(&sorted, &paths);
                    for p in &paths {
                        let vs: HashSet<_> = p.iter().collect();
                        prop_assert_eq!(vs.len(), p.len());
                        prop_assert!(p.windows(2).all(|w| g.has_edge(w[0], w[1])));
                    }
                }
            }
        }
    }
}
