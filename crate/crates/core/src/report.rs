//! The per-graph invariant report and its JSON and text renderings.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::bei::{v_initial, v_number};
use crate::domination::gamma_c;
use crate::error::Result;
use crate::graph::{Graph, Vertex, VertexSet};
use crate::structure::{initial_graph, induced_matching_number, is_closed_labeling, longest_induced_path, theta_clique_cover};

/// Minimal prime at which the v-number is attained, as a cut set and the
/// components left after removing it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AchievingPrime {
    #[serde(rename = "S")]
    pub s: Vec<Vertex>,
    pub components: Vec<Vec<Vertex>>,
}

/// Field order is part of the output format.
///
/// `gamma_c`, `v_at_Kn` and `lf_max` are `null` for disconnected graphs
/// (`lf_max` also for a single vertex); `im_initial` is `null` unless the
/// graph is closed under its given labeling.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub n: usize,
    pub edges: Vec<[Vertex; 2]>,
    pub connected: bool,
    pub closed: bool,
    pub v: usize,
    #[serde(rename = "v_at_Kn")]
    pub v_at_kn: Option<usize>,
    pub gamma_c: Option<usize>,
    pub theta: usize,
    pub ell: usize,
    pub im_initial: Option<usize>,
    pub v_init: usize,
    pub lf_max: Option<usize>,
    pub achieving_prime: AchievingPrime,
}

fn members(s: VertexSet) -> Vec<Vertex> {
    s.iter().collect()
}

pub fn invariants(g: &Graph) -> Result<InvariantReport> {
    let vn = v_number(g)?;
    let connected = g.is_connected();
    let closed = is_closed_labeling(g).closed;
    let dom = if connected { Some(gamma_c(g)?) } else { None };
    let im_initial = if closed && g.edge_count() > 0 {
        Some(induced_matching_number(&initial_graph(g)?))
    } else if closed {
        Some(0)
    } else {
        None
    };
    Ok(InvariantReport {
        n: g.n(),
        edges: g.edges().iter().map(|&(a, b)| [a, b]).collect(),
        connected,
        closed,
        v: vn.v,
        v_at_kn: vn.v_at_kn,
        gamma_c: dom.as_ref().map(|d| d.gamma_c),
        theta: theta_clique_cover(g).0,
        ell: longest_induced_path(g),
        im_initial,
        v_init: v_initial(g)?,
        lf_max: dom.as_ref().filter(|_| g.n() >= 2).map(|d| d.lf_max),
        achieving_prime: AchievingPrime {
            s: members(vn.achieving_prime.s),
            components: vn.achieving_prime.components.iter().map(|&c| members(c)).collect(),
        },
    })
}

fn set_text(s: &[Vertex]) -> String {
    let inner: Vec<String> = s.iter().map(|v| v.to_string()).collect();
    format!("{{{}}}", inner.join(","))
}

impl InvariantReport {
    /// Aligned `key: value` lines; absent values print as `-`.
    pub fn to_text(&self) -> String {
        let opt = |x: Option<usize>| x.map_or_else(|| "-".to_string(), |v| v.to_string());
        let edges: Vec<String> = self.edges.iter().map(|[a, b]| format!("{a}-{b}")).collect();
        let comps: Vec<String> = self.achieving_prime.components.iter().map(|c| set_text(c)).collect();
        let mut out = String::new();
        let rows = [
            ("n", self.n.to_string()),
            ("edges", edges.join(" ")),
            ("connected", self.connected.to_string()),
            ("closed", self.closed.to_string()),
            ("v", self.v.to_string()),
            ("v_at_Kn", opt(self.v_at_kn)),
            ("gamma_c", opt(self.gamma_c)),
            ("theta", self.theta.to_string()),
            ("ell", self.ell.to_string()),
            ("im_initial", opt(self.im_initial)),
            ("v_init", self.v_init.to_string()),
            ("lf_max", opt(self.lf_max)),
            (
                "achieving_prime",
                format!("S = {}, components {}", set_text(&self.achieving_prime.s), comps.join(" ")),
            ),
        ];
        for (k, v) in rows {
            let _ = writeln!(out, "{k:<16}{v}");
        }
        out
    }
}
