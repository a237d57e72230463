//! Connected dominating sets, the path-closure family used for the
//! complete-graph localization, and maximum-leaf spanning trees.

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DominationResult {
    pub gamma_c: usize,
    /// Lexicographically smallest minimum connected dominating set.
    pub witness: VertexSet,
    pub lf_max: usize,
    /// Edges of a spanning tree with `lf_max` leaves.
    pub tree_witness: Vec<(Vertex, Vertex)>,
}

fn require_connected(g: &Graph) -> Result<()> {
    if g.is_connected() {
        Ok(())
    } else {
        Err(Error::domain("graph is not connected"))
    }
}

/// `b` is nonempty, induces a connected subgraph and dominates every vertex.
pub fn is_connected_dominating(g: &Graph, b: VertexSet) -> Result<bool> {
    require_connected(g)?;
    Ok(is_cds(g, b))
}

fn is_cds(g: &Graph, b: VertexSet) -> bool {
    !b.is_empty() && g.induces_connected(b) && b.union(g.neighborhood(b)) == g.vertices()
}

/// Membership in the family of sets `B` such that every non-edge `{i, j}` is
/// joined by a path whose internal vertices all lie in `B`.
pub fn dc_membership(g: &Graph, b: VertexSet) -> Result<bool> {
    require_connected(g)?;
    Ok(g.non_edges()
        .into_iter()
        .all(|(i, j)| joined_through(g, i, j, b)))
}

/// Is there a path `i, i_1, ..., i_s, j` with all `i_k ∈ inner`?
fn joined_through(g: &Graph, i: Vertex, j: Vertex, inner: VertexSet) -> bool {
    if g.has_edge(i, j) {
        return true;
    }
    let allowed = inner.without(i).without(j);
    let mut seen = g.neighbors(i).intersection(allowed);
    let mut frontier = seen;
    while !frontier.is_empty() {
        if frontier.intersection(g.neighbors(j)) != VertexSet::EMPTY {
            return true;
        }
        let next = g.neighborhood(frontier).intersection(allowed).difference(seen);
        seen = seen.union(next);
        frontier = next;
    }
    false
}

/// Exact connected domination number with a lexicographically smallest
/// witness and a matching maximum-leaf spanning tree.
///
/// `γ_c(K_n) = 1` here, including `K_1`; see [`dc_min`] for the variant that
/// is `0` on complete graphs.
pub fn gamma_c(g: &Graph) -> Result<DominationResult> {
    require_connected(g)?;
    let witness = min_cds(g);
    let tree_witness = spanning_tree_from_cds(g, witness);
    let lf_max = leaf_count(g.n(), &tree_witness);
    Ok(DominationResult {
        gamma_c: witness.len(),
        witness,
        lf_max,
        tree_witness,
    })
}

fn min_cds(g: &Graph) -> VertexSet {
    let n = g.n();
    let delta = g.max_degree();
    // k vertices dominate at most k * (Δ + 1) vertices.
    let mut k = 1;
    while k * (delta + 1) < n {
        k += 1;
    }
    loop {
        let mut search = CdsSearch { g, delta, best: None };
        search.extend(VertexSet::EMPTY, 1, k);
        if let Some(found) = search.best {
            return found;
        }
        k += 1;
        assert!(k <= n, "the whole vertex set of a connected graph is a CDS");
    }
}

struct CdsSearch<'a> {
    g: &'a Graph,
    delta: usize,
    best: Option<VertexSet>,
}

impl CdsSearch<'_> {
    /// Chooses the remaining `left` members from `next..=n` in increasing
    /// order, so the first success is lexicographically smallest.
    fn extend(&mut self, chosen: VertexSet, next: Vertex, left: usize) {
        if self.best.is_some() {
            return;
        }
        let g = self.g;
        let n = g.n();
        let undominated = g.vertices().difference(chosen.union(g.neighborhood(chosen)));
        if left == 0 {
            if undominated.is_empty() && g.induces_connected(chosen) {
                self.best = Some(chosen);
            }
            return;
        }
        if undominated.len() > left * (self.delta + 1) || next + left - 1 > n {
            return;
        }
        let tail = VertexSet::full(n).difference(VertexSet::full(next - 1));
        if undominated
            .iter()
            .any(|u| g.closed_neighbors(u).is_disjoint(tail))
        {
            return;
        }
        for v in next..=n + 1 - left {
            self.extend(chosen.with(v), v + 1, left - 1);
            if self.best.is_some() {
                return;
            }
        }
    }
}

fn spanning_tree_from_cds(g: &Graph, b: VertexSet) -> Vec<(Vertex, Vertex)> {
    let mut edges = Vec::new();
    let root = b.first().expect("nonempty witness");
    let mut seen = VertexSet::singleton(root);
    let mut queue = std::collections::VecDeque::from([root]);
    while let Some(u) = queue.pop_front() {
        for w in g.neighbors(u).intersection(b).difference(seen) {
            seen.insert(w);
            edges.push((u.min(w), u.max(w)));
            queue.push_back(w);
        }
    }
    for v in g.vertices().difference(b) {
        let parent = g.neighbors(v).intersection(b).first().expect("b dominates v");
        edges.push((v.min(parent), v.max(parent)));
    }
    edges.sort_unstable();
    edges
}

fn leaf_count(n: usize, tree: &[(Vertex, Vertex)]) -> usize {
    let mut deg = vec![0usize; n + 1];
    for &(u, v) in tree {
        deg[u] += 1;
        deg[v] += 1;
    }
    deg.iter().filter(|&&d| d == 1).count()
}

/// Minimum size of a member of the path-closure family, found by direct
/// enumeration with [`dc_membership`]. It is `0` exactly for complete graphs.
pub fn dc_min(g: &Graph) -> Result<usize> {
    dc_min_witness(g).map(|b| b.len())
}

/// Lexicographically smallest minimum member of the path-closure family.
pub fn dc_min_witness(g: &Graph) -> Result<VertexSet> {
    require_connected(g)?;
    let non_edges = g.non_edges();
    let member = |b: VertexSet| non_edges.iter().all(|&(i, j)| joined_through(g, i, j, b));
    for k in 0..=g.n() {
        if let Some(b) = k_subsets(g.n(), k).find(|&b| member(b)) {
            return Ok(b);
        }
    }
    unreachable!("the full vertex set joins every non-edge of a connected graph")
}

/// All inclusion-minimal members of the path-closure family.
pub fn dc_minimal_members(g: &Graph) -> Result<Vec<VertexSet>> {
    require_connected(g)?;
    let non_edges = g.non_edges();
    let member = |b: VertexSet| non_edges.iter().all(|&(i, j)| joined_through(g, i, j, b));
    let mut minimal: Vec<VertexSet> = Vec::new();
    for k in 0..=g.n() {
        for b in k_subsets(g.n(), k) {
            if minimal.iter().any(|m| m.is_subset(b)) {
                continue;
            }
            if member(b) {
                minimal.push(b);
            }
        }
    }
    Ok(minimal)
}

/// A spanning tree with the maximum number of leaves, built from a minimum
/// connected dominating set: a BFS tree inside the set plus every other
/// vertex hung on its smallest neighbor in the set.
pub fn max_leaf_spanning_tree(g: &Graph) -> Result<(Vec<(Vertex, Vertex)>, usize)> {
    if g.n() < 2 {
        return Err(Error::domain("a maximum-leaf spanning tree needs n >= 2"));
    }
    let res = gamma_c(g)?;
    Ok((res.tree_witness, res.lf_max))
}

/// `k`-element subsets of `[n]` in lexicographic order of member lists.
pub fn k_subsets(n: usize, k: usize) -> impl Iterator<Item = VertexSet> {
    let mut idx: Option<Vec<usize>> = (k <= n).then(|| (1..=k).collect());
    std::iter::from_fn(move || {
        let cur = idx.as_mut()?;
        let out = VertexSet::from_vertices(cur.iter().copied());
        // advance
        let mut p = k;
        loop {
            if p == 0 {
                idx = None;
                break;
            }
            p -= 1;
            if cur[p] < n - (k - 1 - p) {
                cur[p] += 1;
                for q in p + 1..k {
                    cur[q] = cur[q - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::enumerate::connected_graphs;
    use crate::oracle;

    #[test]
    fn subsets_in_lex_order() {
        let all: Vec<_> = k_subsets(4, 2).map(|s| s.to_vec()).collect();
        assert_eq!(
            all,
            vec![vec![1, 2], vec![1, 3], vec![1, 4], vec![2, 3], vec![2, 4], vec![3, 4]]
        );
        assert_eq!(k_subsets(3, 0).count(), 1);
        assert_eq!(k_subsets(3, 4).count(), 0);
    }

    #[test]
    fn cds_examples() {
        let star = Graph::star(4).unwrap();
        assert!(is_connected_dominating(&star, VertexSet::singleton(1)).unwrap());
        let c5 = Graph::cycle(5).unwrap();
        assert!(!is_connected_dominating(&c5, VertexSet::from_vertices([1, 2])).unwrap());
        let tree = catalog::tree_ten();
        let b = VertexSet::from_vertices([2, 3, 4, 5, 7, 9]);
        assert!(is_connected_dominating(&tree, b).unwrap());
        let disconnected = Graph::new(3, &[(1, 2)]).unwrap();
        assert!(matches!(
            is_connected_dominating(&disconnected, VertexSet::singleton(1)),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn dc_membership_examples() {
        assert!(dc_membership(&Graph::complete(5).unwrap(), VertexSet::EMPTY).unwrap());
        let c5 = Graph::cycle(5).unwrap();
        assert!(dc_membership(&c5, VertexSet::from_vertices([2, 3, 4])).unwrap());
        assert!(!dc_membership(&c5, VertexSet::from_vertices([2, 3])).unwrap());
    }

    #[test]
    fn gamma_c_examples() {
        assert_eq!(gamma_c(&Graph::complete(5).unwrap()).unwrap().gamma_c, 1);
        assert_eq!(gamma_c(&Graph::cycle(6).unwrap()).unwrap().gamma_c, 4);
        let tree = gamma_c(&catalog::tree_ten()).unwrap();
        assert_eq!(tree.gamma_c, 6);
        assert_eq!(tree.witness, VertexSet::from_vertices([2, 3, 4, 5, 7, 9]));
        let k1 = gamma_c(&Graph::complete(1).unwrap()).unwrap();
        assert_eq!((k1.gamma_c, k1.lf_max), (1, 0));
    }

    #[test]
    fn dc_min_examples() {
        assert_eq!(dc_min(&Graph::complete(4).unwrap()).unwrap(), 0);
        assert_eq!(dc_min(&Graph::cycle(6).unwrap()).unwrap(), 4);
        assert_eq!(dc_min(&Graph::path(3).unwrap()).unwrap(), 1);
    }

    #[test]
    fn max_leaf_examples() {
        let (_, lf) = max_leaf_spanning_tree(&Graph::star(4).unwrap()).unwrap();
        assert_eq!(lf, 4);
        let (_, lf) = max_leaf_spanning_tree(&Graph::cycle(6).unwrap()).unwrap();
        assert_eq!(lf, 2);
        let tree = catalog::tree_ten();
        let (edges, lf) = max_leaf_spanning_tree(&tree).unwrap();
        assert_eq!(lf, 4);
        assert_eq!(edges, tree.edges());
        assert!(max_leaf_spanning_tree(&Graph::complete(1).unwrap()).is_err());
    }

    #[test]
    fn witness_is_lexicographically_smallest() {
        for g in connected_graphs(5) {
            let res = gamma_c(&g).unwrap();
            let first = k_subsets(g.n(), res.gamma_c)
                .find(|&b| is_cds(&g, b))
                .unwrap();
            assert_eq!(res.witness, first, "{g:?}");
        }
    }

    #[test]
    fn dc_min_matches_gamma_c_on_small_graphs() {
        for n in 1..=7 {
            for g in crate::enumerate::connected_classes(n) {
                let gc = gamma_c(&g).unwrap();
                assert_eq!(gc.gamma_c, oracle::brute_force_gamma_c(&g), "{g:?}");
                let dm = dc_min(&g).unwrap();
                if g.is_complete() {
                    assert_eq!(dm, 0);
                } else {
                    assert_eq!(dm, gc.gamma_c, "{g:?}");
                }
            }
        }
    }

    #[test]
    fn dc_membership_is_cds_for_nonempty_sets() {
        for n in 1..=6 {
            for g in crate::enumerate::connected_classes(n) {
                for bits in 0..1u64 << n {
                    let b = VertexSet::from_bits(bits);
                    let dc = dc_membership(&g, b).unwrap();
                    if b.is_empty() {
                        assert_eq!(dc, g.is_complete());
                    } else {
                        assert_eq!(dc, is_connected_dominating(&g, b).unwrap(), "{g:?} {b}");
                    }
                }
            }
        }
    }

    #[test]
    fn duality_against_exhaustive_spanning_trees() {
        for n in 3..=6 {
            for g in crate::enumerate::connected_classes(n) {
                let res = gamma_c(&g).unwrap();
                assert_eq!(res.gamma_c, n - oracle::max_leaf_number(&g), "{g:?}");
                assert_eq!(res.lf_max, n - res.gamma_c);
                assert_eq!(res.tree_witness.len(), n - 1);
            }
        }
        // K_2: both vertices of the only spanning tree are leaves.
        let k2 = gamma_c(&Graph::complete(2).unwrap()).unwrap();
        assert_eq!((k2.gamma_c, k2.lf_max), (1, 2));
    }

    #[test]
    fn adding_an_edge_never_increases_gamma_c() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let n = rng.gen_range(3..=9);
            let g = crate::enumerate::random_connected(n, 0.35, &mut rng);
            let non_edges = g.non_edges();
            if non_edges.is_empty() {
                continue;
            }
            let (u, v) = non_edges[rng.gen_range(0..non_edges.len())];
            let h = g.with_edge(u, v).unwrap();
            assert!(gamma_c(&h).unwrap().gamma_c <= gamma_c(&g).unwrap().gamma_c);
        }
    }
}
