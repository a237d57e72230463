//! Named property checks over generated graph corpora: exhaustive isomorphism
//! classes (or labeled graphs) up to a bound, plus seeded random samples.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::bei::{
    binomial_edge_ideal, chain_check_closed, colon_formula_outcome, colon_single_edge_check, minimal_primes,
    v_local_at_kn, v_multipartite, v_number, v_number_direct, Mode,
};
use crate::domination::gamma_c;
use crate::enumerate::{connected_classes, connected_graphs, random_connected};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::monomial::v_edge_ideal_both_routes;
use crate::oracle::{brute_force_gamma_c, max_leaf_number};
use crate::polyring::{ideal_intersection, is_groebner};
use crate::structure::{find_closed_labeling, is_closed_labeling, ClosednessWitness};

/// Checks run by default, in order.
pub const DEFAULT_CHECKS: &[&str] = &[
    "main-theorem",
    "colon-single-edge",
    "colon-formula",
    "decomposition",
    "closed-gb",
    "initial-squarefree",
    "duality",
    "edge-ideal-routes",
    "corollary",
    "additivity",
    "multipartite",
];

/// Checks that only run when named explicitly.
pub const EXTRA_CHECKS: &[&str] = &["chain-closed"];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyConfig {
    /// Exhaustive bound on the vertex count; each check has its own default.
    pub n: Option<usize>,
    pub seed: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { n: None, seed: 1 }
    }
}

#[derive(Clone, Debug)]
pub struct Failure {
    pub graph: Graph,
    pub detail: String,
}

#[derive(Clone, Debug)]
pub struct CheckOutcome {
    pub name: String,
    pub graphs: usize,
    pub failures: Vec<Failure>,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// `Ok(None)` passes, `Ok(Some(detail))` fails; errors count as failures.
type Probe = fn(&Graph) -> Result<Option<String>>;

fn run(name: &str, corpus: Vec<Graph>, probe: Probe) -> CheckOutcome {
    let failures: Vec<Failure> = corpus
        .par_iter()
        .filter_map(|g| {
            let detail = match probe(g) {
                Ok(None) => return None,
                Ok(Some(d)) => d,
                Err(e) => e.to_string(),
            };
            Some(Failure { graph: g.clone(), detail })
        })
        .collect();
    CheckOutcome { name: name.to_string(), graphs: corpus.len(), failures }
}

fn classes_up_to(n: usize) -> Vec<Graph> {
    (1..=n).flat_map(connected_classes).collect()
}

fn labeled_up_to(n: usize) -> Vec<Graph> {
    (1..=n).flat_map(connected_graphs).collect()
}

fn random_sample(n: usize, count: usize, rng: &mut ChaCha8Rng) -> Vec<Graph> {
    (0..count).map(|_| random_connected(n, 0.5, rng)).collect()
}

/// Random relabelings of each graph.
fn relabelings(graphs: &[Graph], per_graph: usize, rng: &mut ChaCha8Rng) -> Vec<Graph> {
    let mut out = Vec::new();
    for g in graphs {
        let mut perm: Vec<usize> = (1..=g.n()).collect();
        for _ in 0..per_graph {
            perm.shuffle(rng);
            out.push(g.relabel(&perm));
        }
    }
    out
}

fn mismatch(what: &str, a: usize, b: usize) -> Option<String> {
    (a != b).then(|| format!("{what}: {a} vs {b}"))
}

fn main_theorem(g: &Graph) -> Result<Option<String>> {
    match v_local_at_kn(g, Mode::Both) {
        Ok(_) => Ok(None),
        Err(Error::TheoremViolation(d)) => Ok(Some(d)),
        Err(e) => Err(e),
    }
}

fn colon_single_edge(g: &Graph) -> Result<Option<String>> {
    for (i, j) in g.non_edges() {
        if !colon_single_edge_check(g, i, j)? {
            return Ok(Some(format!("colon by f_{{{i},{j}}} differs from the formula")));
        }
    }
    Ok(None)
}

fn colon_formula(g: &Graph) -> Result<Option<String>> {
    if g.is_complete() {
        return Ok(None);
    }
    let o = colon_formula_outcome(g)?;
    Ok(if !o.equal {
        Some("colon by J_{K_n} differs from the connected-domination formula".into())
    } else if !o.union_is_groebner {
        Some("basis of J_G with the split monomials is not a Gröbner basis".into())
    } else {
        None
    })
}

fn decomposition(g: &Graph) -> Result<Option<String>> {
    let primes = minimal_primes(g)?;
    let meet = primes[1..]
        .iter()
        .fold(primes[0].ideal.clone(), |acc, p| ideal_intersection(&acc, &p.ideal));
    Ok((!meet.equals(&binomial_edge_ideal(g))).then(|| "intersection of minimal primes differs from J_G".into()))
}

fn closed_gb(g: &Graph) -> Result<Option<String>> {
    let closed = is_closed_labeling(g).closed;
    let quadratic = is_groebner(binomial_edge_ideal(g).gens());
    Ok((closed != quadratic).then(|| format!("closed labeling {closed}, quadratic Gröbner basis {quadratic}")))
}

fn initial_squarefree(g: &Graph) -> Result<Option<String>> {
    let j = binomial_edge_ideal(g);
    Ok(j.gb()
        .iter()
        .filter_map(|p| p.lead_monomial())
        .find(|m| !m.is_squarefree())
        .map(|m| format!("leading monomial {m:?} is not squarefree")))
}

/// `γ_c = n - lf_max` against exhaustive oracles. `K_1` and `K_2` are
/// skipped: their only spanning trees have no internal vertex while a
/// connected dominating set needs one vertex.
fn duality(g: &Graph) -> Result<Option<String>> {
    if g.n() <= 2 {
        return Ok(None);
    }
    let d = gamma_c(g)?;
    let brute = brute_force_gamma_c(g);
    let leaves = max_leaf_number(g);
    Ok(mismatch("gamma_c vs exhaustive", d.gamma_c, brute)
        .or_else(|| mismatch("lf_max vs spanning-tree enumeration", d.lf_max, leaves))
        .or_else(|| mismatch("gamma_c vs n - lf_max", d.gamma_c, g.n() - leaves)))
}

fn edge_ideal_routes(g: &Graph) -> Result<Option<String>> {
    if g.edge_count() == 0 {
        return Ok(None);
    }
    match v_edge_ideal_both_routes(g) {
        Ok(_) => Ok(None),
        Err(Error::TheoremViolation(d)) => Ok(Some(d)),
        Err(e) => Err(e),
    }
}

/// `v(J_G) ≤ γ_c(G)`, with `v` swept over all minimal primes without the
/// connected-domination shortcut and `0` as the complete-graph value.
fn corollary(g: &Graph) -> Result<Option<String>> {
    let v = v_number_direct(g)?;
    let bound = if g.is_complete() { 0 } else { gamma_c(g)?.gamma_c };
    Ok((v > bound).then(|| format!("v = {v} exceeds gamma_c = {bound}")))
}

fn additivity(g: &Graph) -> Result<Option<String>> {
    let by_components: usize = g
        .connected_components()
        .into_iter()
        .map(|c| v_number(&g.induced_subgraph(c).expect("nonempty").graph).map(|r| r.v))
        .sum::<Result<usize>>()?;
    Ok(mismatch("whole-graph sweep vs sum over components", v_number_direct(g)?, by_components))
}

fn multipartite(g: &Graph) -> Result<Option<String>> {
    let parts = multipartite_parts(g).expect("corpus holds complete multipartite graphs");
    Ok(mismatch("formula vs algebraic", v_multipartite(&parts)?, v_number_direct(g)?))
}

/// Part sizes in vertex order, when consecutive blocks form the parts.
fn multipartite_parts(g: &Graph) -> Option<Vec<usize>> {
    let mut parts = Vec::new();
    let mut v = 1;
    while v <= g.n() {
        let block = g.vertices().difference(g.neighbors(v));
        let size = block.len();
        if block.first() != Some(v) || block.last() != Some(v + size - 1) {
            return None;
        }
        parts.push(size);
        v += size;
    }
    (Graph::complete_multipartite(&parts).ok()? == *g).then_some(parts)
}

fn compositions(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    (1..=n)
        .flat_map(|first| {
            compositions(n - first).into_iter().map(move |mut rest| {
                rest.insert(0, first);
                rest
            })
        })
        .collect()
}

fn chain_closed(g: &Graph) -> Result<Option<String>> {
    let c = chain_check_closed(g)?;
    Ok((!c.holds).then(|| {
        format!("v = {}, theta = {}, v_init = {}, ell = {}: v < theta <= v_init <= ell fails", c.v, c.theta, c.v_init, c.ell)
    }))
}

/// Closed, non-complete connected classes, relabeled to a closed labeling.
fn closed_classes_up_to(n: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for g in classes_up_to(n) {
        if g.edge_count() == 0 || g.is_complete() {
            continue;
        }
        if let Some(ClosednessWitness::Labeling(p)) = find_closed_labeling(&g)?.witness {
            out.push(g.relabel(&p));
        }
    }
    Ok(out)
}

/// Runs one named check. `Err` only for an unknown name or a corpus that
/// cannot be built.
pub fn run_check(name: &str, cfg: VerifyConfig) -> Result<CheckOutcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let bound = |default: usize| cfg.n.unwrap_or(default);
    let outcome = match name {
        "main-theorem" => {
            let n = bound(6);
            let classes = classes_up_to(n);
            let mut corpus = relabelings(&classes, 2, &mut rng);
            corpus.extend(classes);
            corpus.extend(random_sample(n + 1, 50, &mut rng));
            run(name, corpus, main_theorem)
        }
        "colon-single-edge" | "colon-formula" => {
            let n = bound(5);
            let mut corpus: Vec<Graph> = labeled_up_to(n).into_iter().filter(|g| !g.is_complete()).collect();
            corpus.extend(
                std::iter::repeat_with(|| random_connected(n + 1, 0.5, &mut rng))
                    .filter(|g| !g.is_complete())
                    .take(50),
            );
            let probe: Probe = if name == "colon-formula" { colon_formula } else { colon_single_edge };
            run(name, corpus, probe)
        }
        "decomposition" => run(name, classes_up_to(bound(5)), decomposition),
        "closed-gb" => run(name, labeled_up_to(bound(5)), closed_gb),
        "initial-squarefree" => {
            let n = bound(5);
            let mut corpus = labeled_up_to(n);
            corpus.extend(random_sample(n + 1, 25, &mut rng));
            run(name, corpus, initial_squarefree)
        }
        "duality" => run(name, classes_up_to(bound(7)), duality),
        "edge-ideal-routes" => run(name, classes_up_to(bound(7)), edge_ideal_routes),
        "corollary" => run(name, classes_up_to(bound(7)), corollary),
        "additivity" => {
            let total = bound(8).max(2);
            let corpus = (0..20)
                .map(|_| {
                    let a = (total / 2).max(1);
                    let g1 = random_connected(a, 0.5, &mut rng);
                    let g2 = random_connected(total - a, 0.5, &mut rng);
                    g1.disjoint_union(&g2).map_err(Error::from)
                })
                .collect::<Result<Vec<_>>>()?;
            run(name, corpus, additivity)
        }
        "multipartite" => {
            let n = bound(6);
            let mut corpus = Vec::new();
            for total in 2..=n {
                for parts in compositions(total).into_iter().filter(|p| p.len() >= 2) {
                    // part order only relabels; keep non-increasing compositions
                    if parts.windows(2).all(|w| w[0] >= w[1]) {
                        corpus.push(Graph::complete_multipartite(&parts)?);
                    }
                }
            }
            run(name, corpus, multipartite)
        }
        "chain-closed" => run(name, closed_classes_up_to(bound(6))?, chain_closed),
        _ => return Err(Error::domain(format!("unknown check {name:?}"))),
    };
    Ok(outcome)
}

/// Every default check, in order.
pub fn run_default(cfg: VerifyConfig) -> Vec<CheckOutcome> {
    DEFAULT_CHECKS
        .iter()
        .map(|name| run_check(name, cfg).expect("default checks have valid names"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small(n: usize) -> VerifyConfig {
        VerifyConfig { n: Some(n), seed: 7 }
    }

    #[test]
    fn cheap_checks_pass_on_small_corpora() {
        for name in ["main-theorem", "colon-single-edge", "colon-formula", "decomposition", "closed-gb", "duality", "corollary"] {
            let o = run_check(name, small(3)).unwrap();
            assert!(o.passed(), "{name}: {:?}", o.failures);
            assert!(o.graphs > 0);
        }
        assert!(run_check("multipartite", small(5)).unwrap().passed());
        assert!(run_check("additivity", small(5)).unwrap().passed());
    }

    #[test]
    fn unknown_check_is_an_error() {
        assert!(run_check("nonsense", VerifyConfig::default()).is_err());
    }

    #[test]
    fn chain_check_reports_the_path_counterexample() {
        let o = run_check("chain-closed", small(4)).unwrap();
        assert!(o.failures.iter().any(|f| f.graph == Graph::path(4).unwrap()));
    }

    #[test]
    fn multipartite_parts_are_recognised() {
        let g = Graph::complete_multipartite(&[3, 2, 1]).unwrap();
        assert_eq!(multipartite_parts(&g), Some(vec![3, 2, 1]));
        assert_eq!(multipartite_parts(&Graph::path(4).unwrap()), None);
        assert_eq!(compositions(3).len(), 4);
    }

    #[test]
    fn seeded_corpora_are_reproducible() {
        let a = run_check("main-theorem", small(3)).unwrap();
        let b = run_check("main-theorem", small(3)).unwrap();
        assert_eq!(a.graphs, b.graphs);
    }
}
