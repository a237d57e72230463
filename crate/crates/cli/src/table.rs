use bei_core::bei::{v_initial, v_number};
use bei_core::catalog::{five_vertex_table, SmallGraphEntry};
use bei_core::structure::{find_closed_labeling, longest_induced_path};
use bei_core::{Graph, Result};
use rayon::prelude::*;
use serde::Serialize;

use crate::{mismatch, CmdResult, Failure};

#[derive(Serialize)]
struct Expected {
    v: usize,
    v_init: usize,
    reg: usize,
}

#[derive(Serialize)]
struct Reading {
    edges: Vec<[usize; 2]>,
    v: usize,
    v_init: usize,
    /// Regularity from the longest induced path, when some relabeling is
    /// closed.
    reg: Option<usize>,
}

#[derive(Serialize)]
struct Row {
    index: usize,
    ambiguous: bool,
    readings: Vec<Reading>,
    expected: Expected,
    matches: bool,
}

fn reading(g: &Graph) -> Result<Reading> {
    let closable = find_closed_labeling(g)?.closed;
    Ok(Reading {
        edges: g.edges().iter().map(|&(a, b)| [a, b]).collect(),
        v: v_number(g)?.v,
        v_init: v_initial(g)?,
        reg: closable.then(|| longest_induced_path(g)),
    })
}

fn row(e: &SmallGraphEntry) -> Result<Row> {
    let graphs: Vec<&Graph> = if e.ambiguous { e.alternatives.iter().collect() } else { vec![&e.graph] };
    let readings = graphs.into_iter().map(reading).collect::<Result<Vec<_>>>()?;
    let matches = readings.iter().all(|r| (r.v, r.v_init) == (e.v, e.v_init));
    Ok(Row { index: e.index, ambiguous: e.ambiguous, readings, expected: Expected { v: e.v, v_init: e.v_init, reg: e.reg }, matches })
}

fn triple(r: &Reading) -> String {
    match r.reg {
        Some(reg) => format!("({}, {}, {reg})", r.v, r.v_init),
        None => format!("({}, {})", r.v, r.v_init),
    }
}

pub fn run(json: bool) -> CmdResult {
    let rows = five_vertex_table().par_iter().map(row).collect::<Result<Vec<_>>>().map_err(Failure::from)?;
    if json {
        println!("{}", serde_json::to_string_pretty(&rows).expect("rows serialize"));
    } else {
        println!("{:>3}  {:<40} {:<12} {:<12} status", "#", "edges", "computed", "reference");
        for r in &rows {
            for (k, reading) in r.readings.iter().enumerate() {
                let edges: Vec<String> = reading.edges.iter().map(|[a, b]| format!("{a}{b}")).collect();
                let reference = format!("({}, {}, {})", r.expected.v, r.expected.v_init, r.expected.reg);
                let status = match (r.matches, r.ambiguous) {
                    (false, _) => "MISMATCH",
                    (true, true) => "ok (ambiguous entry, all readings)",
                    (true, false) => "ok",
                };
                let index = if k == 0 { r.index.to_string() } else { String::new() };
                println!("{index:>3}  {:<40} {:<12} {reference:<12} {status}", edges.join(" "), triple(reading));
            }
        }
    }
    let bad: Vec<String> = rows.iter().filter(|r| !r.matches).map(|r| r.index.to_string()).collect();
    if !bad.is_empty() {
        return Err(mismatch(format!("table rows differ from the reference values: {}", bad.join(", "))));
    }
    Ok(())
}
