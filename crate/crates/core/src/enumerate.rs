//! Small-graph corpora: every labeled graph, isomorphism-class
//! representatives, and seeded random connected graphs.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::{Graph, Vertex};

/// Every labeled graph on `[n]` (`n ≤ 8`).
pub fn labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    assert!((1..=8).contains(&n), "labeled enumeration is limited to n <= 8");
    let pairs = n * (n - 1) / 2;
    (0..1u64 << pairs).map(move |mask| Graph::from_pair_mask(n, mask).unwrap())
}

/// Every labeled connected graph on `[n]`.
pub fn connected_graphs(n: usize) -> impl Iterator<Item = Graph> {
    labeled_graphs(n).filter(Graph::is_connected)
}

fn pair_mask(g: &Graph, perm: &[Vertex]) -> u64 {
    let n = g.n();
    let index = |u: usize, v: usize| {
        let (u, v) = (u.min(v), u.max(v));
        // position of (u, v) in (1,2), (1,3), ..., (n-1,n)
        (u - 1) * (2 * n - u) / 2 + (v - u - 1)
    };
    g.edges()
        .iter()
        .fold(0u64, |acc, &(u, v)| acc | 1u64 << index(perm[u - 1], perm[v - 1]))
}

/// Canonical pair mask: the smallest mask over relabelings that respect a
/// degree-based vertex partition. Two graphs are isomorphic iff their
/// canonical masks agree.
pub fn canonical_mask(g: &Graph) -> u64 {
    let n = g.n();
    // vertex invariant: degree and sorted neighbor degrees
    let inv: Vec<(usize, Vec<usize>)> = (1..=n)
        .map(|v| {
            let mut nd: Vec<usize> = g.neighbors(v).iter().map(|w| g.degree(w)).collect();
            nd.sort_unstable();
            (g.degree(v), nd)
        })
        .collect();
    let mut order: Vec<Vertex> = (1..=n).collect();
    order.sort_by(|&a, &b| inv[a - 1].cmp(&inv[b - 1]));
    // cells of equal invariant occupy consecutive target labels
    let mut cells: Vec<Vec<Vertex>> = Vec::new();
    for &v in &order {
        match cells.last_mut() {
            Some(cell) if inv[cell[0] - 1] == inv[v - 1] => cell.push(v),
            _ => cells.push(vec![v]),
        }
    }
    let mut best = u64::MAX;
    let mut perm = vec![0; n];
    permute_cells(g, &cells, 0, 1, &mut perm, &mut best);
    best
}

fn permute_cells(
    g: &Graph,
    cells: &[Vec<Vertex>],
    cell: usize,
    first_label: usize,
    perm: &mut Vec<Vertex>,
    best: &mut u64,
) {
    if cell == cells.len() {
        *best = (*best).min(pair_mask(g, perm));
        return;
    }
    let mut members = cells[cell].clone();
    let k = members.len();
    heap_permutations(&mut members, k, &mut |arr| {
        for (offset, &v) in arr.iter().enumerate() {
            perm[v - 1] = first_label + offset;
        }
        permute_cells(g, cells, cell + 1, first_label + k, perm, best);
    });
}

fn heap_permutations<F: FnMut(&[Vertex])>(arr: &mut Vec<Vertex>, k: usize, f: &mut F) {
    if k <= 1 {
        f(arr);
        return;
    }
    for i in 0..k {
        heap_permutations(arr, k - 1, f);
        if k.is_multiple_of(2) {
            arr.swap(i, k - 1);
        } else {
            arr.swap(0, k - 1);
        }
    }
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n() && a.edge_count() == b.edge_count() && canonical_mask(a) == canonical_mask(b)
}

/// One representative (the canonical labeling) per isomorphism class of
/// graphs on `n` vertices, ordered by canonical mask.
pub fn graph_classes(n: usize) -> Vec<Graph> {
    assert!((1..=8).contains(&n));
    let mut masks = BTreeSet::new();
    if n == 1 {
        masks.insert(0u64);
    } else {
        // extend each class on n - 1 vertices by a new vertex n
        for base in graph_classes(n - 1) {
            for nb in 0..1u64 << (n - 1) {
                let mut edges = base.edges().to_vec();
                edges.extend((1..n).filter(|&u| nb >> (u - 1) & 1 == 1).map(|u| (u, n)));
                let g = Graph::new(n, &edges).unwrap();
                masks.insert(canonical_mask(&g));
            }
        }
    }
    masks
        .into_iter()
        .map(|m| Graph::from_pair_mask(n, m).unwrap())
        .collect()
}

/// Representatives of the connected isomorphism classes on `n` vertices.
pub fn connected_classes(n: usize) -> Vec<Graph> {
    graph_classes(n).into_iter().filter(Graph::is_connected).collect()
}

/// Random connected graph: a random spanning tree plus every other pair with
/// probability `p`, under a random labeling.
pub fn random_connected<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for v in 2..=n {
        edges.push((rng.gen_range(1..v), v));
    }
    for u in 1..=n {
        for v in u + 1..=n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    let mut perm: Vec<Vertex> = (1..=n).collect();
    perm.shuffle(rng);
    Graph::new(n, &edges).unwrap().relabel(&perm)
}
