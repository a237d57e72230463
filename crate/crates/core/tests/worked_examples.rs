use bei_core::bei::{
    chain_check_closed, colon_formula_check, colon_single_edge_check, initial_ideal, v_initial, v_local_at_kn,
    v_multipartite, v_number, v_number_direct, Mode,
};
use bei_core::catalog;
use bei_core::domination::{gamma_c, max_leaf_spanning_tree};
use bei_core::monomial::{v_edge_ideal_both_routes, v_monomial};
use bei_core::report::invariants;
use bei_core::structure::{initial_graph, induced_matching_number, is_closed_labeling, theta_clique_cover, ClosednessWitness};
use bei_core::{Error, Graph};

#[test]
fn cycles() {
    let c6 = Graph::cycle(6).unwrap();
    assert_eq!(v_number(&c6).unwrap().v, 4);
    assert_eq!(v_monomial(&initial_ideal(&c6).unwrap()).unwrap(), 4);
    assert_eq!(v_local_at_kn(&c6, Mode::Both).unwrap(), 4);
    let c5 = Graph::cycle(5).unwrap();
    assert_eq!((v_number(&c5).unwrap().v, v_initial(&c5).unwrap()), (3, 3));
}

#[test]
fn initial_graph_example() {
    let g = catalog::closed_six();
    assert!(is_closed_labeling(&g).closed);
    let h = initial_graph(&g).unwrap();
    assert_eq!(h.edge_count(), 7);
    assert_eq!(induced_matching_number(&h), 3);
    let c = chain_check_closed(&g).unwrap();
    assert_eq!(c.ell, 3);
    assert_eq!(v_edge_ideal_both_routes(&h).unwrap(), c.v_init);
}

#[test]
fn cyclic_square_is_not_closed() {
    let cert = is_closed_labeling(&Graph::cycle(4).unwrap());
    assert!(!cert.closed);
    assert!(matches!(cert.witness, Some(ClosednessWitness::ViolatingTriple(1, 2, 4))));
}

#[test]
fn tree_example() {
    let g = catalog::tree_ten();
    let d = gamma_c(&g).unwrap();
    assert_eq!((d.gamma_c, d.lf_max), (6, 4));
    assert_eq!(max_leaf_spanning_tree(&g).unwrap().1, 4);
    assert_eq!(theta_clique_cover(&g).0, 5);
    let r = v_number(&g).unwrap();
    assert_eq!((r.v, r.v_at_kn), (3, Some(6)));
    assert!(!r.achieving_prime.s.is_empty());
}

#[test]
fn closed_eight_vertex_example() {
    let r = invariants(&catalog::closed_eight()).unwrap();
    assert_eq!((r.v, r.v_at_kn, r.v_init, r.ell), (3, Some(4), 5, 5));
    // the minimum clique cover is {1,2,3}, {4,5}, {6,7,8}
    assert_eq!(r.theta, 3);
}

#[test]
fn non_closed_six_vertex_example() {
    let g = catalog::non_closed_six();
    assert_eq!(v_number(&g).unwrap().v, 2);
    assert_eq!(v_number_direct(&g).unwrap(), 2);
    // no two adjacent vertices dominate the graph
    assert_eq!(gamma_c(&g).unwrap().gamma_c, 3);
    assert_eq!(v_local_at_kn(&g, Mode::Both).unwrap(), 3);
}

#[test]
fn colon_checks_on_small_graphs() {
    for g in [Graph::path(3).unwrap(), Graph::cycle(4).unwrap(), Graph::cycle(5).unwrap()] {
        assert!(colon_formula_check(&g).unwrap());
    }
    assert!(colon_single_edge_check(&Graph::path(3).unwrap(), 1, 3).unwrap());
    assert!(colon_single_edge_check(&Graph::cycle(4).unwrap(), 1, 3).unwrap());
    assert!(colon_single_edge_check(&Graph::cycle(5).unwrap(), 1, 3).unwrap());
    assert!(matches!(colon_formula_check(&Graph::complete(4).unwrap()), Err(Error::Domain(_))));
}

#[test]
fn complete_and_multipartite() {
    let k5 = Graph::complete(5).unwrap();
    assert_eq!((v_number(&k5).unwrap().v, v_initial(&k5).unwrap()), (0, 1));
    let k4 = chain_check_closed(&Graph::complete(4).unwrap()).unwrap();
    assert_eq!((k4.v, k4.theta, k4.v_init, k4.ell), (0, 1, 1, 1));
    for parts in [vec![1, 3], vec![2, 2], vec![2, 3], vec![1, 2, 3]] {
        let g = Graph::complete_multipartite(&parts).unwrap();
        assert_eq!(v_multipartite(&parts).unwrap(), v_number(&g).unwrap().v, "{parts:?}");
    }
}

#[test]
fn disconnected_graphs() {
    let g = Graph::cycle(4).unwrap().disjoint_union(&Graph::path(3).unwrap()).unwrap();
    assert_eq!(v_number(&g).unwrap().v, 2 + 1);
    assert!(matches!(v_local_at_kn(&g, Mode::Combinatorial), Err(Error::Domain(_))));
    assert!(gamma_c(&g).is_err());
}
