//! Closed (unit-interval) labelings and the combinatorial invariants that
//! bound v-numbers of closed graphs: clique cover number, induced matching
//! number, longest induced path, the initial bipartite graph and minimal
//! vertex covers of clutters.

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};

/// Squarefree sets over a ground set of at most 128 elements, as bit masks.
pub type VarSet = u128;

/// Family of pairwise incomparable nonempty subsets of `0..ground`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Clutter {
    ground: usize,
    edges: Vec<VarSet>,
}

impl Clutter {
    /// Keeps the inclusion-minimal members of `sets`, sorted by `(size,
    /// members)`. Fails on an empty member or an element outside the ground
    /// set.
    pub fn new(ground: usize, sets: impl IntoIterator<Item = VarSet>) -> Result<Self> {
        if ground > 128 {
            return Err(Error::UnsupportedSize(format!("clutter ground set {ground} > 128")));
        }
        let limit = if ground == 128 { u128::MAX } else { (1u128 << ground) - 1 };
        let mut all: Vec<VarSet> = Vec::new();
        for s in sets {
            if s == 0 {
                return Err(Error::domain("clutter edges must be nonempty"));
            }
            if s & !limit != 0 {
                return Err(Error::domain("clutter edge leaves the ground set"));
            }
            all.push(s);
        }
        Ok(Clutter {
            ground,
            edges: minimalize(all),
        })
    }

    /// Clutter of a graph's edges on ground set `0..n`.
    pub fn of_graph(g: &Graph) -> Self {
        let edges = g
            .edges()
            .iter()
            .map(|&(u, v)| 1u128 << (u - 1) | 1u128 << (v - 1));
        Clutter::new(g.n(), edges).expect("graph edges form a clutter")
    }

    pub fn ground(&self) -> usize {
        self.ground
    }

    pub fn edges(&self) -> &[VarSet] {
        &self.edges
    }
}

/// Inclusion-minimal members, deduplicated, in `(size, members)` order.
pub fn minimalize(mut sets: Vec<VarSet>) -> Vec<VarSet> {
    sets.sort_by(|a, b| set_order(*a, *b));
    sets.dedup();
    let mut out: Vec<VarSet> = Vec::with_capacity(sets.len());
    for s in sets {
        if !out.iter().any(|&m| m & !s == 0) {
            out.push(s);
        }
    }
    out
}

/// `(size, sorted members)` order on bit sets.
pub fn set_order(a: VarSet, b: VarSet) -> std::cmp::Ordering {
    a.count_ones()
        .cmp(&b.count_ones())
        .then_with(|| members(a).cmp(members(b)))
}

fn members(s: VarSet) -> impl Iterator<Item = usize> {
    let mut rest = s;
    std::iter::from_fn(move || {
        if rest == 0 {
            return None;
        }
        let b = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        Some(b)
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClosednessWitness {
    /// `i < j < k` with `{i,k}` an edge but `{i,j}` or `{j,k}` missing.
    ViolatingTriple(Vertex, Vertex, Vertex),
    /// `labeling[v - 1]` is the new label of `v`; relabeling this way makes
    /// the graph closed.
    Labeling(Vec<Vertex>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosednessCertificate {
    pub closed: bool,
    pub witness: Option<ClosednessWitness>,
}

/// Checks the interval condition under the given labeling: for every edge
/// `{i, k}`, `i < k`, each `j` strictly between is adjacent to both.
pub fn is_closed_labeling(g: &Graph) -> ClosednessCertificate {
    let mut violations = Vec::new();
    for i in 1..=g.n() {
        for k in g.neighbors(i).iter().filter(|&k| k > i) {
            if let Some(j) = (i + 1..k).find(|&j| !(g.has_edge(i, j) && g.has_edge(j, k))) {
                violations.push((i, j, k));
                break;
            }
        }
    }
    match violations.into_iter().min() {
        None => ClosednessCertificate { closed: true, witness: None },
        Some((i, j, k)) => ClosednessCertificate {
            closed: false,
            witness: Some(ClosednessWitness::ViolatingTriple(i, j, k)),
        },
    }
}

/// Largest graph accepted by [`find_closed_labeling`].
pub const MAX_RELABEL_SEARCH: usize = 10;

/// Searches all vertex orders for one satisfying the interval condition.
pub fn find_closed_labeling(g: &Graph) -> Result<ClosednessCertificate> {
    let n = g.n();
    if n > MAX_RELABEL_SEARCH {
        return Err(Error::UnsupportedSize(format!(
            "closed-labeling search supports n <= {MAX_RELABEL_SEARCH}, got {n}"
        )));
    }
    let mut order = Vec::with_capacity(n);
    if place_next(g, &mut order, VertexSet::EMPTY) {
        let mut labeling = vec![0; n];
        for (pos, &v) in order.iter().enumerate() {
            labeling[v - 1] = pos + 1;
        }
        Ok(ClosednessCertificate {
            closed: true,
            witness: Some(ClosednessWitness::Labeling(labeling)),
        })
    } else {
        Ok(ClosednessCertificate { closed: false, witness: None })
    }
}

/// Extends a partial order (vertices listed by new label). Appending `v`
/// only creates triples whose largest element is `v`, so those are the only
/// ones checked.
fn place_next(g: &Graph, order: &mut Vec<Vertex>, used: VertexSet) -> bool {
    if order.len() == g.n() {
        return true;
    }
    for v in g.vertices().difference(used) {
        let ok = order.iter().enumerate().all(|(pi, &a)| {
            !g.has_edge(a, v)
                || order[pi + 1..]
                    .iter()
                    .all(|&b| g.has_edge(a, b) && g.has_edge(b, v))
        });
        if ok {
            order.push(v);
            if place_next(g, order, used.with(v)) {
                return true;
            }
            order.pop();
        }
    }
    false
}

/// Exact clique cover number with a witness cover, computed as a minimum
/// coloring of the complement by DSATUR branch and bound.
pub fn theta_clique_cover(g: &Graph) -> (usize, Vec<VertexSet>) {
    let comp = g.complement();
    let n = g.n();
    // greedy DSATUR gives the initial upper bound
    let mut search = Coloring {
        g: &comp,
        colors: vec![usize::MAX; n + 1],
        best: n + 1,
        best_colors: Vec::new(),
    };
    search.branch(0, 0);
    let mut classes = vec![VertexSet::EMPTY; search.best];
    for v in 1..=n {
        classes[search.best_colors[v]].insert(v);
    }
    classes.sort_by(|a, b| a.lex_cmp(*b));
    (search.best, classes)
}

struct Coloring<'a> {
    g: &'a Graph,
    colors: Vec<usize>,
    best: usize,
    best_colors: Vec<usize>,
}

impl Coloring<'_> {
    fn saturation(&self, v: Vertex) -> usize {
        let mut seen = 0u64;
        for w in self.g.neighbors(v) {
            if self.colors[w] != usize::MAX {
                seen |= 1 << self.colors[w];
            }
        }
        seen.count_ones() as usize
    }

    fn branch(&mut self, colored: usize, used: usize) {
        let n = self.g.n();
        if used >= self.best {
            return;
        }
        if colored == n {
            self.best = used;
            self.best_colors = self.colors.clone();
            return;
        }
        // DSATUR: max saturation, then max degree, then smallest index
        let v = (1..=n)
            .filter(|&v| self.colors[v] == usize::MAX)
            .max_by(|&a, &b| {
                (self.saturation(a), self.g.degree(a))
                    .cmp(&(self.saturation(b), self.g.degree(b)))
                    .then(b.cmp(&a))
            })
            .unwrap();
        let forbidden: u64 = self
            .g
            .neighbors(v)
            .iter()
            .filter(|&w| self.colors[w] != usize::MAX)
            .fold(0, |acc, w| acc | 1 << self.colors[w]);
        for c in 0..=used.min(63) {
            if forbidden >> c & 1 == 1 {
                continue;
            }
            let next_used = if c == used { used + 1 } else { used };
            if next_used >= self.best {
                continue;
            }
            self.colors[v] = c;
            self.branch(colored + 1, next_used);
            self.colors[v] = usize::MAX;
        }
    }
}

/// Largest induced matching, by branching on edges in order.
pub fn induced_matching_number(g: &Graph) -> usize {
    let edges = g.edges().to_vec();
    let mut best = 0;
    induced_matching_branch(g, &edges, 0, VertexSet::EMPTY, 0, &mut best);
    best
}

fn induced_matching_branch(
    g: &Graph,
    edges: &[(Vertex, Vertex)],
    start: usize,
    blocked: VertexSet,
    size: usize,
    best: &mut usize,
) {
    *best = (*best).max(size);
    let free: Vec<usize> = (start..edges.len())
        .filter(|&k| !blocked.contains(edges[k].0) && !blocked.contains(edges[k].1))
        .collect();
    // every further edge blocks at least its own two vertices
    let room = g.vertices().difference(blocked).len() / 2;
    if size + free.len().min(room) <= *best {
        return;
    }
    for (idx, &k) in free.iter().enumerate() {
        if size + (free.len() - idx).min(room) <= *best {
            return;
        }
        let (u, v) = edges[k];
        let block = blocked
            .union(g.closed_neighbors(u))
            .union(g.closed_neighbors(v));
        induced_matching_branch(g, edges, k + 1, block, size + 1, best);
    }
}

/// Length, counted in edges, of a longest induced path.
pub fn longest_induced_path(g: &Graph) -> usize {
    let mut best = 0;
    for start in 1..=g.n() {
        extend_induced_path(g, start, VertexSet::singleton(start), 0, &mut best);
    }
    best
}

fn extend_induced_path(g: &Graph, last: Vertex, on_path: VertexSet, len: usize, best: &mut usize) {
    *best = (*best).max(len);
    let before_last = on_path.without(last);
    for w in g.neighbors(last).difference(on_path) {
        // w may only touch the current endpoint
        if g.neighbors(w).is_disjoint(before_last) {
            extend_induced_path(g, w, on_path.with(w), len + 1, best);
        }
    }
}

/// Bipartite graph on `2n` vertices with an edge `{i, n + j}` (standing for
/// `{x_i, y_j}`) for every edge `{i, j}`, `i < j`, of a closed graph.
pub fn initial_graph(g: &Graph) -> Result<Graph> {
    if !is_closed_labeling(g).closed {
        return Err(Error::domain("the initial graph needs a closed labeling"));
    }
    let n = g.n();
    if 2 * n > crate::graph::MAX_VERTICES {
        return Err(Error::UnsupportedSize(format!("initial graph on {} vertices", 2 * n)));
    }
    let edges: Vec<_> = g.edges().iter().map(|&(i, j)| (i, n + j)).collect();
    Ok(Graph::new(2 * n, &edges)?)
}

/// All minimal vertex covers, in `(size, members)` order.
pub fn minimal_vertex_covers(c: &Clutter) -> Vec<VarSet> {
    let mut found = Vec::new();
    cover_branch(c.edges(), 0, &mut found);
    let mut out: Vec<VarSet> = minimalize(found)
        .into_iter()
        .filter(|&w| is_minimal_cover(c.edges(), w))
        .collect();
    out.sort_by(|a, b| set_order(*a, *b));
    out
}

fn cover_branch(edges: &[VarSet], chosen: VarSet, out: &mut Vec<VarSet>) {
    match edges.iter().find(|&&e| e & chosen == 0) {
        None => out.push(chosen),
        Some(&e) => {
            for b in members(e) {
                let next = chosen | 1 << b;
                // a superset of a recorded cover cannot be minimal
                if out.iter().any(|&w| w & !next == 0) {
                    continue;
                }
                cover_branch(edges, next, out);
            }
        }
    }
}

fn is_minimal_cover(edges: &[VarSet], w: VarSet) -> bool {
    let covers = |c: VarSet| edges.iter().all(|&e| e & c != 0);
    covers(w) && members(w).all(|b| !covers(w & !(1 << b)))
}

/// v-number of the edge ideal of `g` through stable sets: the least `|A|`
/// over stable sets `A` whose neighborhood is a (necessarily minimal) vertex
/// cover.
pub fn v_edge_ideal_combinatorial(g: &Graph) -> Result<usize> {
    if g.edge_count() == 0 {
        return Err(Error::domain("the edge ideal of an edgeless graph is prime"));
    }
    let active: VertexSet = g.edges().iter().flat_map(|&(u, v)| [u, v]).collect();
    let covers = |w: VertexSet| g.edges().iter().all(|&(u, v)| w.contains(u) || w.contains(v));
    let mut best = None;
    stable_branch(g, &active.to_vec(), 0, VertexSet::EMPTY, &covers, &mut best);
    Ok(best.expect("a maximal stable set always qualifies"))
}

fn stable_branch<F: Fn(VertexSet) -> bool>(
    g: &Graph,
    pool: &[Vertex],
    start: usize,
    a: VertexSet,
    covers: &F,
    best: &mut Option<usize>,
) {
    if !a.is_empty() && covers(g.neighborhood(a)) {
        *best = Some(best.map_or(a.len(), |b| b.min(a.len())));
        return;
    }
    if best.is_some_and(|b| a.len() + 1 >= b) {
        return;
    }
    for k in start..pool.len() {
        let v = pool[k];
        if g.neighbors(v).is_disjoint(a) {
            stable_branch(g, pool, k + 1, a.with(v), covers, best);
        }
    }
}

/// Regularity of `S/J_G` for a connected closed graph: the longest induced
/// path length `ℓ` (in edges), so that `reg(J_G) = ℓ + 1`.
pub fn reg_closed(g: &Graph) -> Result<usize> {
    if !g.is_connected() {
        return Err(Error::domain("reg_closed needs a connected graph"));
    }
    if !is_closed_labeling(g).closed {
        return Err(Error::domain("reg_closed needs a closed labeling"));
    }
    Ok(longest_induced_path(g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::enumerate::{connected_classes, connected_graphs, graph_classes};
    use crate::oracle;

    #[test]
    fn closed_labeling_examples() {
        assert!(is_closed_labeling(&catalog::closed_six()).closed);
        let c4 = is_closed_labeling(&Graph::cycle(4).unwrap());
        assert!(!c4.closed);
        assert_eq!(c4.witness, Some(ClosednessWitness::ViolatingTriple(1, 2, 4)));
        assert!(is_closed_labeling(&Graph::complete(6).unwrap()).closed);
    }

    #[test]
    fn relabeling_search() {
        let p4 = Graph::new(4, &[(1, 3), (3, 2), (2, 4)]).unwrap();
        let cert = find_closed_labeling(&p4).unwrap();
        match cert.witness {
            Some(ClosednessWitness::Labeling(l)) => assert!(is_closed_labeling(&p4.relabel(&l)).closed),
            other => panic!("expected labeling, got {other:?}"),
        }
        assert!(!find_closed_labeling(&Graph::cycle(4).unwrap()).unwrap().closed);
        assert!(!find_closed_labeling(&Graph::star(3).unwrap()).unwrap().closed);
        assert!(find_closed_labeling(&Graph::path(11).unwrap()).is_err());
    }

    #[test]
    fn relabeling_search_agrees_with_permutation_brute_force() {
        for n in 1..=6 {
            for g in connected_classes(n) {
                let mut any = false;
                let mut perm: Vec<Vertex> = (1..=n).collect();
                permute_all(&mut perm, 0, &mut |p| {
                    any |= oracle::closed_by_triples(&g.relabel(p));
                });
                assert_eq!(find_closed_labeling(&g).unwrap().closed, any, "{g:?}");
            }
        }
    }

    fn permute_all(p: &mut Vec<Vertex>, k: usize, f: &mut dyn FnMut(&[Vertex])) {
        if k == p.len() {
            f(p);
            return;
        }
        for i in k..p.len() {
            p.swap(k, i);
            permute_all(p, k + 1, f);
            p.swap(k, i);
        }
    }

    #[test]
    fn theta_examples() {
        assert_eq!(theta_clique_cover(&Graph::complete(5).unwrap()).0, 1);
        // {1,2,3}, {4,5}, {6,7,8}
        let (t, cover) = theta_clique_cover(&catalog::closed_eight());
        assert_eq!(t, 3);
        assert_eq!(cover[0], VertexSet::from_vertices([1, 2, 3]));
        let (t, cover) = theta_clique_cover(&catalog::tree_ten());
        assert_eq!(t, 5);
        assert_eq!(cover.len(), 5);
    }

    #[test]
    fn theta_matches_dp_and_is_a_cover() {
        for n in 1..=7 {
            for g in graph_classes(n.min(6)).into_iter().chain(connected_classes(n)) {
                let (t, cover) = theta_clique_cover(&g);
                assert_eq!(t, oracle::clique_cover_number(&g), "{g:?}");
                let union = cover.iter().fold(VertexSet::EMPTY, |a, &c| a.union(c));
                assert_eq!(union, g.vertices());
                for c in &cover {
                    for u in c.iter() {
                        assert!(c.iter().all(|v| v == u || g.has_edge(u, v)));
                    }
                }
                // n / ω sanity bound
                let omega = cover.iter().map(|c| c.len()).max().unwrap().max(1);
                let omega = omega.max(max_clique(&g));
                assert!(t * omega >= g.n());
            }
        }
    }

    fn max_clique(g: &Graph) -> usize {
        (1u64..1 << g.n())
            .map(VertexSet::from_bits)
            .filter(|s| s.iter().all(|u| s.iter().all(|v| u == v || g.has_edge(u, v))))
            .map(VertexSet::len)
            .max()
            .unwrap()
    }

    #[test]
    fn induced_matching_examples() {
        assert_eq!(induced_matching_number(&Graph::path(2).unwrap()), 1);
        let h = initial_graph(&catalog::closed_six()).unwrap();
        assert_eq!(induced_matching_number(&h), 3);
        assert_eq!(induced_matching_number(&Graph::cycle(6).unwrap()), 2);
    }

    #[test]
    fn longest_induced_path_examples() {
        assert_eq!(longest_induced_path(&Graph::path(4).unwrap()), 3);
        assert_eq!(longest_induced_path(&catalog::closed_six()), 3);
        assert_eq!(longest_induced_path(&catalog::tree_ten()), 5);
    }

    #[test]
    fn search_invariants_match_brute_force() {
        for n in 1..=7 {
            for g in connected_classes(n) {
                assert_eq!(longest_induced_path(&g), oracle::longest_induced_path(&g), "{g:?}");
                if g.edge_count() <= 20 {
                    assert_eq!(
                        induced_matching_number(&g),
                        oracle::induced_matching_number(&g),
                        "{g:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn initial_graph_examples() {
        let h = initial_graph(&catalog::closed_six()).unwrap();
        assert_eq!(h.edge_count(), 7);
        // x1y2, x2y3, x3y4, x4y5, x5y6, x1y3, x4y6
        for (i, j) in [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (1, 3), (4, 6)] {
            assert!(h.has_edge(i, 6 + j));
        }
        assert_eq!(initial_graph(&Graph::complete(2).unwrap()).unwrap().edges(), &[(1, 4)]);
        assert_eq!(initial_graph(&Graph::path(3).unwrap()).unwrap().edges(), &[(1, 5), (2, 6)]);
        assert!(initial_graph(&Graph::cycle(4).unwrap()).is_err());
    }

    #[test]
    fn closed_graphs_have_im_of_initial_graph_equal_ell() {
        for n in 1..=7 {
            for g in connected_graphs(n.min(5)).chain(connected_classes(n)) {
                if !is_closed_labeling(&g).closed {
                    continue;
                }
                let h = initial_graph(&g).unwrap();
                assert_eq!(induced_matching_number(&h), longest_induced_path(&g), "{g:?}");
            }
        }
    }

    #[test]
    fn vertex_cover_examples() {
        let edge = Clutter::of_graph(&Graph::path(2).unwrap());
        assert_eq!(minimal_vertex_covers(&edge), vec![0b01, 0b10]);
        let p3 = Clutter::of_graph(&Graph::path(3).unwrap());
        assert_eq!(minimal_vertex_covers(&p3), vec![0b010, 0b101]);
        let c5 = minimal_vertex_covers(&Clutter::of_graph(&Graph::cycle(5).unwrap()));
        assert_eq!(c5.len(), 5);
        assert!(c5.iter().all(|w| w.count_ones() == 3));
    }

    #[test]
    fn vertex_covers_match_brute_force() {
        for n in 1..=6 {
            for g in graph_classes(n) {
                let c = Clutter::of_graph(&g);
                let covers = minimal_vertex_covers(&c);
                assert_eq!(covers, oracle::minimal_vertex_covers(n, c.edges()), "{g:?}");
                for &w in &covers {
                    assert!(is_minimal_cover(c.edges(), w));
                }
            }
        }
    }

    #[test]
    fn clutter_rejects_bad_sets() {
        assert!(Clutter::new(3, [0]).is_err());
        assert!(Clutter::new(3, [0b1000]).is_err());
        let c = Clutter::new(3, [0b011, 0b111, 0b011]).unwrap();
        assert_eq!(c.edges(), &[0b011]);
    }

    #[test]
    fn edge_ideal_stable_set_examples() {
        assert_eq!(v_edge_ideal_combinatorial(&Graph::path(2).unwrap()).unwrap(), 1);
        assert_eq!(v_edge_ideal_combinatorial(&Graph::cycle(5).unwrap()).unwrap(), 2);
        let h = initial_graph(&catalog::closed_six()).unwrap();
        assert_eq!(v_edge_ideal_combinatorial(&h).unwrap(), 3);
        assert!(v_edge_ideal_combinatorial(&Graph::empty(3).unwrap()).is_err());
    }

    #[test]
    fn reg_closed_examples() {
        assert_eq!(reg_closed(&Graph::complete(5).unwrap()).unwrap(), 1);
        assert_eq!(reg_closed(&catalog::closed_eight()).unwrap(), 5);
        assert_eq!(reg_closed(&catalog::closed_six()).unwrap(), 3);
        assert!(reg_closed(&Graph::cycle(5).unwrap()).is_err());
    }
}
