//! Brute-force reference computations. Each one enumerates directly from a
//! definition and shares no search code with the exact algorithms it is used
//! to check.

use crate::graph::{Graph, Vertex, VertexSet};

fn connected_on(g: &Graph, s: VertexSet) -> bool {
    let vs = s.to_vec();
    if vs.is_empty() {
        return false;
    }
    let mut seen = vec![vs[0]];
    let mut stack = vec![vs[0]];
    while let Some(u) = stack.pop() {
        for &w in &vs {
            if g.has_edge(u, w) && !seen.contains(&w) {
                seen.push(w);
                stack.push(w);
            }
        }
    }
    seen.len() == vs.len()
}

/// Minimum connected dominating set size over all vertex subsets.
pub fn brute_force_gamma_c(g: &Graph) -> usize {
    let n = g.n();
    (1u64..1 << n)
        .map(VertexSet::from_bits)
        .filter(|&b| {
            connected_on(g, b)
                && (1..=n).all(|v| b.contains(v) || b.iter().any(|w| g.has_edge(v, w)))
        })
        .map(VertexSet::len)
        .min()
        .expect("connected graph")
}

/// Maximum number of leaves over all spanning trees, by enumerating every
/// `(n-1)`-edge subset.
pub fn max_leaf_number(g: &Graph) -> usize {
    let n = g.n();
    let edges = g.edges();
    let mut best = 0;
    let mut chosen = Vec::with_capacity(n - 1);
    choose_trees(edges, 0, n, &mut chosen, &mut best);
    best
}

fn choose_trees(
    edges: &[(Vertex, Vertex)],
    start: usize,
    n: usize,
    chosen: &mut Vec<(Vertex, Vertex)>,
    best: &mut usize,
) {
    if chosen.len() == n - 1 {
        if is_spanning_tree(n, chosen) {
            let mut deg = vec![0; n + 1];
            for &(u, v) in chosen.iter() {
                deg[u] += 1;
                deg[v] += 1;
            }
            *best = (*best).max(deg.iter().filter(|&&d| d == 1).count());
        }
        return;
    }
    for k in start..edges.len() {
        if edges.len() - k < n - 1 - chosen.len() {
            break;
        }
        chosen.push(edges[k]);
        choose_trees(edges, k + 1, n, chosen, best);
        chosen.pop();
    }
}

fn is_spanning_tree(n: usize, edges: &[(Vertex, Vertex)]) -> bool {
    let mut parent: Vec<usize> = (0..=n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    for &(u, v) in edges {
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        if a == b {
            return false;
        }
        parent[a] = b;
    }
    true
}

fn is_clique(g: &Graph, s: VertexSet) -> bool {
    let vs = s.to_vec();
    vs.iter()
        .enumerate()
        .all(|(k, &u)| vs[k + 1..].iter().all(|&v| g.has_edge(u, v)))
}

/// Clique cover number by dynamic programming over vertex subsets (`n ≤ 16`).
pub fn clique_cover_number(g: &Graph) -> usize {
    let n = g.n();
    assert!(n <= 16);
    let full = (1usize << n) - 1;
    let clique: Vec<bool> = (0..=full)
        .map(|m| m != 0 && is_clique(g, VertexSet::from_bits(m as u64)))
        .collect();
    let mut dp = vec![usize::MAX; full + 1];
    dp[0] = 0;
    for m in 1..=full {
        let low = m & m.wrapping_neg();
        // cliques containing the lowest uncovered vertex
        let mut sub = m;
        while sub != 0 {
            if sub & low != 0 && clique[sub] && dp[m ^ sub] != usize::MAX {
                dp[m] = dp[m].min(dp[m ^ sub] + 1);
            }
            sub = (sub - 1) & m;
        }
    }
    dp[full]
}

/// Largest induced matching over all edge subsets (`m ≤ 20`).
pub fn induced_matching_number(g: &Graph) -> usize {
    let edges = g.edges();
    assert!(edges.len() <= 20);
    let mut best = 0;
    for mask in 0u32..1 << edges.len() {
        let picked: Vec<_> = (0..edges.len())
            .filter(|&k| mask >> k & 1 == 1)
            .map(|k| edges[k])
            .collect();
        if picked.len() <= best {
            continue;
        }
        let span: VertexSet = picked.iter().flat_map(|&(u, v)| [u, v]).collect();
        let inside = edges
            .iter()
            .filter(|&&(u, v)| span.contains(u) && span.contains(v))
            .count();
        if span.len() == 2 * picked.len() && inside == picked.len() {
            best = picked.len();
        }
    }
    best
}

/// Longest induced path (edge count) over all vertex subsets.
pub fn longest_induced_path(g: &Graph) -> usize {
    let n = g.n();
    let mut best = 0;
    for bits in 1u64..1 << n {
        let s = VertexSet::from_bits(bits);
        if s.len() <= best + 1 || !connected_on(g, s) {
            continue;
        }
        let vs = s.to_vec();
        let degs: Vec<usize> = vs
            .iter()
            .map(|&u| vs.iter().filter(|&&v| g.has_edge(u, v)).count())
            .collect();
        let edges: usize = degs.iter().sum::<usize>() / 2;
        if edges == vs.len() - 1 && degs.iter().all(|&d| d <= 2) {
            best = vs.len() - 1;
        }
    }
    best
}

/// Condition `(b)` of closed labelings checked over every triple.
pub fn closed_by_triples(g: &Graph) -> bool {
    let n = g.n();
    for i in 1..=n {
        for j in i + 1..=n {
            for k in j + 1..=n {
                if g.has_edge(i, k) && !(g.has_edge(i, j) && g.has_edge(j, k)) {
                    return false;
                }
            }
        }
    }
    true
}

/// All minimal vertex covers of a clutter, from all subsets of the ground
/// set (`ground ≤ 20`).
pub fn minimal_vertex_covers(ground: usize, edges: &[u128]) -> Vec<u128> {
    assert!(ground <= 20);
    let covers = |c: u128| edges.iter().all(|&e| e & c != 0);
    let mut out: Vec<u128> = (0u128..1 << ground)
        .filter(|&c| covers(c) && (0..ground).all(|b| c >> b & 1 == 0 || !covers(c & !(1 << b))))
        .collect();
    out.sort_by_key(|&c| (c.count_ones(), (0..ground).filter(|&b| c >> b & 1 == 1).collect::<Vec<_>>()));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn references_on_known_graphs() {
        let c6 = Graph::cycle(6).unwrap();
        assert_eq!(brute_force_gamma_c(&c6), 4);
        assert_eq!(max_leaf_number(&c6), 2);
        assert_eq!(clique_cover_number(&c6), 3);
        assert_eq!(induced_matching_number(&c6), 2);
        assert_eq!(longest_induced_path(&c6), 4);
        assert!(closed_by_triples(&Graph::path(4).unwrap()));
        assert!(!closed_by_triples(&Graph::cycle(4).unwrap()));
        assert_eq!(minimal_vertex_covers(3, &[0b011, 0b110]), vec![0b010, 0b101]);
    }
}
