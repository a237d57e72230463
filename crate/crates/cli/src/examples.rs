use bei_core::catalog;
use bei_core::report::{invariants, InvariantReport};
use bei_core::Graph;
use rayon::prelude::*;

use crate::{mismatch, CmdResult, Failure};

/// Name, graph and reference `(field, value)` pairs.
type Example = (&'static str, Graph, Vec<(&'static str, usize)>);

/// Worked examples with their reference values.
fn expectations() -> Vec<Example> {
    let g = |r: Result<Graph, _>| r.expect("fixed example graphs are valid");
    vec![
        ("cycle-6", g(Graph::cycle(6)), vec![("v", 4), ("v_init", 4), ("v_at_Kn", 4)]),
        ("cycle-7", g(Graph::cycle(7)), vec![("v", 5), ("v_init", 5), ("v_at_Kn", 5)]),
        ("initial-graph-example", catalog::closed_six(), vec![("ell", 3), ("im_initial", 3)]),
        (
            "tree",
            catalog::tree_ten(),
            vec![("v", 3), ("v_at_Kn", 6), ("gamma_c", 6), ("theta", 5), ("ell", 5), ("v_init", 6), ("lf_max", 4)],
        ),
        (
            "closed-8",
            catalog::closed_eight(),
            vec![("v", 3), ("v_at_Kn", 4), ("theta", 5), ("v_init", 5), ("ell", 5)],
        ),
        ("non-closed-6", catalog::non_closed_six(), vec![("v", 2), ("v_at_Kn", 2), ("v_init", 2)]),
        ("complete-5", g(Graph::complete(5)), vec![("v", 0), ("v_init", 1)]),
        ("multipartite-1-3", g(Graph::complete_multipartite(&[1, 3])), vec![("v", 1)]),
        ("multipartite-2-2", g(Graph::complete_multipartite(&[2, 2])), vec![("v", 2)]),
        ("multipartite-2-3", g(Graph::complete_multipartite(&[2, 3])), vec![("v", 2)]),
        ("multipartite-1-2-3", g(Graph::complete_multipartite(&[1, 2, 3])), vec![("v", 1)]),
    ]
}

fn field(r: &InvariantReport, name: &str) -> Option<usize> {
    match name {
        "v" => Some(r.v),
        "v_at_Kn" => r.v_at_kn,
        "gamma_c" => r.gamma_c,
        "theta" => Some(r.theta),
        "ell" => Some(r.ell),
        "im_initial" => r.im_initial,
        "v_init" => Some(r.v_init),
        "lf_max" => r.lf_max,
        _ => unreachable!("unknown report field {name}"),
    }
}

pub fn run() -> CmdResult {
    let cases = expectations();
    let reports = cases
        .par_iter()
        .map(|(_, g, _)| invariants(g))
        .collect::<Result<Vec<_>, _>>()
        .map_err(Failure::from)?;
    let mut mismatches = 0;
    for ((name, _, expected), report) in cases.iter().zip(&reports) {
        for &(key, want) in expected {
            let got = field(report, key);
            let status = if got == Some(want) { "ok" } else { "MISMATCH" };
            if got != Some(want) {
                mismatches += 1;
            }
            let shown = got.map_or_else(|| "-".to_string(), |v| v.to_string());
            println!("{name:<22} {key:<11} reference {want:<3} computed {shown:<3} {status}");
        }
    }
    if mismatches > 0 {
        return Err(mismatch(format!("{mismatches} values differ from the reference ones")));
    }
    Ok(())
}
