//! Named example graphs with known invariants.

use crate::graph::Graph;

fn build(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::new(n, edges).expect("catalog graphs are valid")
}

/// Closed graph on six vertices: a path 1..6 with chords 13 and 46.
pub fn closed_six() -> Graph {
    build(6, &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (1, 3), (4, 6)])
}

/// Tree on ten vertices with `γ_c = 6` and `v = 3`.
pub fn tree_ten() -> Graph {
    build(
        10,
        &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (7, 8), (4, 7), (4, 9), (9, 10)],
    )
}

/// Closed graph on eight vertices where the v-number is strictly below the
/// clique-cover and regularity bounds.
pub fn closed_eight() -> Graph {
    build(
        8,
        &[
            (1, 2), (1, 3), (2, 3), (2, 4), (3, 4), (4, 5), (5, 6),
            (5, 7), (6, 7), (6, 8), (7, 8),
        ],
    )
}

/// Non-closed graph on six vertices: the 5-cycle 1..5 plus a vertex adjacent
/// to 2 and 5.
pub fn non_closed_six() -> Graph {
    build(6, &[(1, 2), (2, 3), (3, 4), (4, 5), (1, 5), (2, 6), (5, 6)])
}

/// A connected graph on five vertices together with its tabulated
/// `(v, v_init, reg)`, the last being the regularity of the quotient ring.
#[derive(Clone, Debug)]
pub struct SmallGraphEntry {
    pub index: usize,
    pub graph: Graph,
    pub v: usize,
    pub v_init: usize,
    pub reg: usize,
    /// Set when the drawn vertex labels are ambiguous; `alternatives` then
    /// lists every consistent reading.
    pub ambiguous: bool,
    pub alternatives: Vec<Graph>,
}

type TableRow = ((usize, usize, usize), &'static [(usize, usize)]);

const FIVE_VERTEX_TABLE: &[TableRow] = &[
    ((0, 1, 1), &[(1, 2), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5), (3, 4), (3, 5), (4, 5)]),
    ((3, 3, 3), &[(1, 2), (1, 5), (2, 3), (3, 4), (4, 5)]),
    ((1, 1, 2), &[(1, 2), (1, 3), (1, 4), (1, 5), (2, 3), (2, 5), (3, 4), (4, 5)]),
    ((2, 2, 2), &[(1, 3), (1, 5), (2, 3), (2, 5), (3, 4), (4, 5)]),
    ((1, 1, 2), &[(1, 2), (1, 5), (2, 3), (2, 4), (2, 5), (3, 5), (4, 5)]),
    ((1, 2, 2), &[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (2, 5), (3, 4), (3, 5), (4, 5)]),
    ((1, 1, 2), &[(1, 2), (1, 3), (1, 4), (1, 5)]),
    ((1, 2, 2), &[(1, 2), (2, 3), (2, 4), (2, 5), (3, 4), (3, 5), (4, 5)]),
    ((1, 2, 2), &[(1, 2), (1, 3), (2, 3), (2, 4), (2, 5), (3, 4), (3, 5), (4, 5)]),
    ((2, 2, 3), &[(1, 2), (1, 3), (1, 5), (4, 5)]),
    ((1, 2, 2), &[(1, 2), (1, 3), (2, 3), (3, 4), (3, 5), (4, 5)]),
    ((1, 2, 3), &[]),
    ((1, 1, 2), &[(1, 5), (2, 5), (3, 4), (3, 5), (4, 5)]),
    ((2, 3, 3), &[(1, 3), (2, 4), (3, 4), (3, 5), (4, 5)]),
    ((2, 3, 3), &[(1, 2), (1, 3), (2, 3), (2, 4), (3, 4), (4, 5)]),
    ((1, 1, 2), &[(1, 5), (2, 3), (2, 5), (3, 4), (3, 5), (4, 5)]),
    ((2, 4, 4), &[(1, 2), (2, 3), (3, 4), (4, 5)]),
    ((2, 3, 3), &[(1, 2), (2, 3), (3, 4), (3, 5), (4, 5)]),
    ((2, 2, 2), &[(1, 2), (1, 3), (1, 5), (2, 3), (2, 5), (3, 4), (4, 5)]),
    ((2, 2, 3), &[(1, 2), (1, 3), (2, 3), (2, 4), (3, 5), (4, 5)]),
    ((2, 2, 3), &[(1, 3), (2, 3), (2, 5), (3, 4), (4, 5)]),
];

/// Drawn edges of the ambiguous entry, on drawing positions 1..5 whose labels
/// read 1, 3, 4, 4, 2: one of positions 3 and 4 is really vertex 5.
const AMBIGUOUS_DRAWN_EDGES: &[(usize, usize)] =
    &[(1, 2), (1, 5), (2, 3), (2, 4), (2, 5), (3, 4), (4, 5)];

fn ambiguous_readings() -> Vec<Graph> {
    [[1, 3, 4, 5, 2], [1, 3, 5, 4, 2]]
        .iter()
        .map(|labels| {
            let edges: Vec<_> = AMBIGUOUS_DRAWN_EDGES
                .iter()
                .map(|&(a, b)| (labels[a - 1], labels[b - 1]))
                .collect();
            build(5, &edges)
        })
        .collect()
}

/// The tabulated connected graphs on five vertices, the complete graph first.
pub fn five_vertex_table() -> Vec<SmallGraphEntry> {
    FIVE_VERTEX_TABLE
        .iter()
        .enumerate()
        .map(|(index, &((v, v_init, reg), edges))| {
            let (graph, ambiguous, alternatives) = if edges.is_empty() {
                let alts = ambiguous_readings();
                (alts[0].clone(), true, alts)
            } else {
                (build(5, edges), false, Vec::new())
            };
            SmallGraphEntry { index, graph, v, v_init, reg, ambiguous, alternatives }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::are_isomorphic;
    use crate::structure::{find_closed_labeling, longest_induced_path};

    #[test]
    fn catalog_graphs_are_connected() {
        for g in [closed_six(), tree_ten(), closed_eight(), non_closed_six()] {
            assert!(g.is_connected());
        }
        assert_eq!(tree_ten().edge_count(), 9);
    }

    #[test]
    fn table_entries_are_distinct_connected_graphs() {
        let table = five_vertex_table();
        assert_eq!(table.len(), 21);
        for e in &table {
            for g in std::iter::once(&e.graph).chain(&e.alternatives) {
                assert!(g.is_connected(), "entry {}", e.index);
                // regularity is only known combinatorially for closed graphs
                if find_closed_labeling(g).unwrap().closed {
                    assert_eq!(longest_induced_path(g), e.reg, "entry {}", e.index);
                }
            }
        }
        for (i, a) in table.iter().enumerate() {
            for b in &table[i + 1..] {
                if !a.ambiguous && !b.ambiguous {
                    assert!(!are_isomorphic(&a.graph, &b.graph), "{} ~ {}", a.index, b.index);
                }
            }
        }
    }
}
