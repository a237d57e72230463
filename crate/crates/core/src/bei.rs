//! Binomial edge ideals: construction, minimal primes, local and global
//! v-numbers, the initial ideal, and executable checks of the colon and
//! inequality theorems.

use std::fmt;

use rayon::prelude::*;

use crate::domination::{dc_min, dc_minimal_members};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::monomial::{v_monomial, SquarefreeMonomialIdeal};
use crate::polyring::sweep::{Grading, LinearSweep};
use crate::polyring::{
    alpha_quotient, colon_by_ideal, colon_by_poly, ideal_intersection, is_groebner, IdealHandle, Monomial, Poly,
    Ring,
};
use crate::structure::{
    initial_graph, is_closed_labeling, longest_induced_path, theta_clique_cover, v_edge_ideal_combinatorial,
    Clutter, VarSet,
};

/// Largest connected component for which minimal primes are enumerated.
pub const MAX_COMPONENT_FOR_PRIMES: usize = 20;

pub fn ring_of(g: &Graph) -> Ring {
    Ring::new(g.n())
}

/// `J_G`, one generator `x_i y_j - x_j y_i` per edge in edge order.
pub fn binomial_edge_ideal(g: &Graph) -> IdealHandle {
    let r = ring_of(g);
    IdealHandle::new(r.nvars(), g.edges().iter().map(|&(i, j)| r.f(i, j)))
}

/// `J` of the complete graph on the vertices of `block`.
fn complete_on(r: &Ring, block: VertexSet) -> impl Iterator<Item = Poly> + '_ {
    let vs = block.to_vec();
    (0..vs.len()).flat_map(move |a| {
        let vs = vs.clone();
        (a + 1..vs.len()).map(move |b| r.f(vs[a], vs[b]))
    })
}

/// The prime `P_S(G)`: the variables of `S` plus the 2-minors of each
/// component of `G` minus `S`, completed.
#[derive(Clone)]
pub struct PrimeSpec {
    pub s: VertexSet,
    pub components: Vec<VertexSet>,
    pub ideal: IdealHandle,
}

impl PrimeSpec {
    /// Same cut set and components, without the ideal.
    pub fn key(&self) -> (VertexSet, Vec<VertexSet>) {
        (self.s, self.components.clone())
    }
}

impl fmt::Debug for PrimeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "P_{}{:?}", self.s, self.components)
    }
}

impl PartialEq for PrimeSpec {
    fn eq(&self, other: &Self) -> bool {
        self.key() == other.key()
    }
}

pub fn prime_ps(g: &Graph, s: VertexSet) -> PrimeSpec {
    let r = ring_of(g);
    let rest = g.vertices().difference(s);
    let components = g.components_within(rest);
    let mut gens: Vec<Poly> = Vec::new();
    for i in s.iter() {
        gens.push(r.x(i));
        gens.push(r.y(i));
    }
    for &c in &components {
        gens.extend(complete_on(&r, c));
    }
    PrimeSpec { s, components, ideal: IdealHandle::new(r.nvars(), gens) }
}

/// Every `i ∈ S` is a cut point of `G` restricted to `([n] ∖ S) ∪ {i}`.
pub fn is_minimal_cut_set(g: &Graph, s: VertexSet) -> bool {
    let rest = g.vertices().difference(s);
    let base = g.components_within(rest).len();
    s.iter().all(|i| g.components_within(rest.with(i)).len() < base)
}

/// Minimal primes of `J_G`: per connected component the cut sets with the
/// cut-point property in `(size, lex)` order, combined as a product across
/// components, first component varying slowest.
pub fn minimal_primes(g: &Graph) -> Result<Vec<PrimeSpec>> {
    let mut per_component: Vec<Vec<VertexSet>> = Vec::new();
    for comp in g.connected_components() {
        if comp.len() > MAX_COMPONENT_FOR_PRIMES {
            return Err(Error::UnsupportedSize(format!(
                "minimal primes enumerate components of at most {MAX_COMPONENT_FOR_PRIMES} vertices, got {}",
                comp.len()
            )));
        }
        per_component.push(component_cut_sets(g, comp));
    }
    let mut combos: Vec<VertexSet> = vec![VertexSet::EMPTY];
    for sets in &per_component {
        combos = combos
            .iter()
            .flat_map(|&acc| sets.iter().map(move |&s| acc.union(s)))
            .collect();
    }
    Ok(combos.into_iter().map(|s| prime_ps(g, s)).collect())
}

fn component_cut_sets(g: &Graph, comp: VertexSet) -> Vec<VertexSet> {
    let members = comp.to_vec();
    let mut out = Vec::new();
    // cut sets never contain non-cut vertices of the whole component
    let candidates: Vec<Vertex> = members
        .iter()
        .copied()
        .filter(|&v| comp.len() > 2 && g.degree(v) > 1)
        .collect();
    for mask in 0u64..1 << candidates.len() {
        let s: VertexSet = (0..candidates.len())
            .filter(|&k| mask >> k & 1 == 1)
            .map(|k| candidates[k])
            .collect();
        if is_minimal_cut_set_in(g, comp, s) {
            out.push(s);
        }
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then(a.lex_cmp(*b)));
    out
}

fn is_minimal_cut_set_in(g: &Graph, comp: VertexSet, s: VertexSet) -> bool {
    let rest = comp.difference(s);
    let base = g.components_within(rest).len();
    s.iter().all(|i| g.components_within(rest.with(i)).len() < base)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Algebraic,
    Combinatorial,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    LinearSweep,
    ColonOracle,
    CombinatorialShortcut,
}

/// Local v-number `v_P(J_G)` at a minimal prime, by degree sweep, falling
/// back to colon and α when the sweep finds nothing up to `2n`.
pub fn v_local(g: &Graph, p: &PrimeSpec) -> Result<usize> {
    v_local_with(g, p, 2 * g.n(), Method::LinearSweep).map(|(v, _)| v)
}

/// As [`v_local`], choosing the engine; returns the witness `f` with
/// `(J_G : f) = P` when the sweep produced one.
pub fn v_local_with(g: &Graph, p: &PrimeSpec, max_degree: usize, method: Method) -> Result<(usize, Option<Poly>)> {
    if !is_minimal_cut_set(g, p.s) || prime_ps(g, p.s) != *p {
        return Err(Error::domain(format!("{p:?} is not a minimal prime of J_G")));
    }
    let j = binomial_edge_ideal(g);
    if j.is_zero() {
        return Ok((0, None));
    }
    if method == Method::LinearSweep {
        let sweep = LinearSweep::new(&j, Grading::Vertex { n: g.n() });
        if let Some((d, f)) = sweep.local_v(&p.ideal, max_degree) {
            return Ok((d, Some(f)));
        }
    }
    Ok((alpha_quotient(&colon_by_ideal(&j, &p.ideal), &j)?, None))
}

/// `v_{J_{K_n}}(J_G)` for connected `G`.
pub fn v_local_at_kn(g: &Graph, mode: Mode) -> Result<usize> {
    if !g.is_connected() {
        return Err(Error::domain("the local v-number at J_{K_n} needs a connected graph"));
    }
    let combinatorial = || if g.is_complete() { Ok(0) } else { dc_min(g) };
    let algebraic = || v_local(g, &prime_ps(g, VertexSet::EMPTY));
    match mode {
        Mode::Combinatorial => combinatorial(),
        Mode::Algebraic => algebraic(),
        Mode::Both => {
            let (a, c) = (algebraic()?, combinatorial()?);
            if a != c {
                return Err(Error::TheoremViolation(format!(
                    "v at J_{{K_n}} is {a} but the connected domination bound gives {c}"
                )));
            }
            Ok(a)
        }
    }
}

#[derive(Clone, Debug)]
pub struct VNumberReport {
    pub v: usize,
    /// Exactly known local values: `(cut set, components, v_P)`.
    pub local: Vec<(PrimeSpec, usize)>,
    /// `v_{J_{K_n}}(J_G)`, for connected graphs.
    pub v_at_kn: Option<usize>,
    pub achieving_prime: PrimeSpec,
    pub method: Method,
}

/// `(v, achieving cut set, known local values, method)` of one component.
type ComponentValue = (usize, VertexSet, Vec<(VertexSet, usize)>, Method);

/// Minimum over minimal primes of one connected component, labeled
/// `1..k`; the `P_∅` value comes from connected domination.
fn component_v(h: &Graph, max_degree: Option<usize>) -> Result<ComponentValue> {
    if h.edge_count() == 0 {
        return Ok((0, VertexSet::EMPTY, vec![(VertexSet::EMPTY, 0)], Method::CombinatorialShortcut));
    }
    let at_kn = if h.is_complete() { 0 } else { dc_min(h)? };
    let mut known = vec![(VertexSet::EMPTY, at_kn)];
    let primes = minimal_primes(h)?;
    let j = binomial_edge_ideal(h);
    let sweep = LinearSweep::new(&j, Grading::Vertex { n: h.n() });
    let cap = max_degree.map_or(at_kn, |m| at_kn.min(m + 1));
    let others: Vec<&PrimeSpec> = primes.iter().filter(|p| !p.s.is_empty()).collect();
    for d in 0..cap {
        let hit = others
            .par_iter()
            .map(|p| sweep.witness_at_degree(&p.ideal, d).is_some())
            .collect::<Vec<bool>>()
            .iter()
            .position(|&b| b);
        if let Some(k) = hit {
            known.push((others[k].s, d));
            return Ok((d, others[k].s, known, Method::LinearSweep));
        }
    }
    Ok((at_kn, VertexSet::EMPTY, known, Method::CombinatorialShortcut))
}

/// `v(J_G)` as the sum over connected components of the least local value.
pub fn v_number(g: &Graph) -> Result<VNumberReport> {
    v_number_capped(g, None)
}

/// As [`v_number`]; with `max_degree`, non-`P_∅` primes are swept only up
/// to that degree.
pub fn v_number_capped(g: &Graph, max_degree: Option<usize>) -> Result<VNumberReport> {
    let mut total = 0;
    let mut s_all = VertexSet::EMPTY;
    let mut local = Vec::new();
    let mut method = Method::CombinatorialShortcut;
    for comp in g.connected_components() {
        let sub = g.induced_subgraph(comp).expect("components are nonempty");
        let (v, s, known, m) = component_v(&sub.graph, max_degree)?;
        total += v;
        let back = |set: VertexSet| set.iter().map(|k| sub.labels[k - 1]).collect::<VertexSet>();
        s_all = s_all.union(back(s));
        if g.connected_components().len() == 1 {
            local = known.into_iter().map(|(s, v)| (prime_ps(g, back(s)), v)).collect();
        }
        if m == Method::LinearSweep {
            method = m;
        }
    }
    let v_at_kn = if g.is_connected() {
        Some(if g.is_complete() { 0 } else { dc_min(g)? })
    } else {
        None
    };
    Ok(VNumberReport { v: total, local, v_at_kn, achieving_prime: prime_ps(g, s_all), method })
}

/// `v(J_G)` from all minimal primes of the whole graph by plain degree
/// sweep: no component splitting, no connected-domination shortcut.
pub fn v_number_direct(g: &Graph) -> Result<usize> {
    v_number_direct_up_to(g, 2 * g.n())?
        .ok_or_else(|| Error::TheoremViolation("no local v-number up to degree 2n".into()))
}

/// As [`v_number_direct`], giving up after `max_degree`.
pub fn v_number_direct_up_to(g: &Graph, max_degree: usize) -> Result<Option<usize>> {
    let j = binomial_edge_ideal(g);
    if j.is_zero() {
        return Ok(Some(0));
    }
    let primes = minimal_primes(g)?;
    let sweep = LinearSweep::new(&j, Grading::Vertex { n: g.n() });
    for d in 0..=max_degree {
        if primes.par_iter().any(|p| sweep.witness_at_degree(&p.ideal, d).is_some()) {
            return Ok(Some(d));
        }
    }
    Ok(None)
}

/// `v(J_G)` of the complete multipartite graph with the given part sizes.
pub fn v_multipartite(parts: &[usize]) -> Result<usize> {
    if parts.len() < 2 || parts.contains(&0) {
        return Err(Error::domain("a complete multipartite graph needs at least two nonempty parts"));
    }
    Ok(if parts.iter().all(|&a| a == 1) {
        // complete graph: J_G is prime
        0
    } else if parts.contains(&1) {
        1
    } else {
        2
    })
}

/// Minimal primes of a complete multipartite graph: `J_{K_n}` and, for each
/// part `V_l` with at least two vertices, `(x_v, y_v : v ∉ V_l)`.
pub fn multipartite_primes(parts: &[usize]) -> Result<Vec<PrimeSpec>> {
    let g = Graph::complete_multipartite(parts)?;
    let mut out = vec![prime_ps(&g, VertexSet::EMPTY)];
    let mut start = 1;
    for &a in parts {
        let block = VertexSet::from_vertices(start..start + a);
        if a >= 2 {
            out.push(prime_ps(&g, g.vertices().difference(block)));
        }
        start += a;
    }
    Ok(out)
}

/// Leading monomials of the reduced lex Gröbner basis of `J_G`, as a
/// clutter over the `2n` variables.
pub fn initial_ideal(g: &Graph) -> Result<SquarefreeMonomialIdeal> {
    let r = ring_of(g);
    if r.nvars() > 128 {
        return Err(Error::UnsupportedSize(format!("{} variables", r.nvars())));
    }
    let j = binomial_edge_ideal(g);
    let leads: Vec<VarSet> = j
        .gb()
        .iter()
        .map(|p| {
            let m = p.lead_monomial().unwrap();
            assert!(m.is_squarefree(), "non-squarefree leading monomial {m:?}");
            m.support().fold(0u128, |acc, b| acc | 1 << b)
        })
        .collect();
    let names = (0..r.nvars()).map(|k| r.var_name(k)).collect();
    SquarefreeMonomialIdeal::new(Clutter::new(r.nvars(), leads)?, names)
}

/// `v(in(J_G))`; 0 for an edgeless graph.
pub fn v_initial(g: &Graph) -> Result<usize> {
    if g.edge_count() == 0 {
        return Ok(0);
    }
    v_monomial(&initial_ideal(g)?)
}

/// `G` plus every pair inside `N(i)` and every pair inside `N(j)`.
pub fn build_ge(g: &Graph, i: Vertex, j: Vertex) -> Result<Graph> {
    if i == j || g.has_edge(i, j) {
        return Err(Error::domain(format!("{{{i},{j}}} is not a non-edge")));
    }
    let mut edges = g.edges().to_vec();
    for nb in [g.neighbors(i), g.neighbors(j)] {
        let vs = nb.to_vec();
        for a in 0..vs.len() {
            for b in a + 1..vs.len() {
                edges.push((vs[a], vs[b]));
            }
        }
    }
    Ok(Graph::new(g.n(), &edges)?)
}

/// `J_{G_e} + (g_{P,t})` over simple paths `P: i, i_1, …, i_s, j` and
/// `0 ≤ t ≤ s`, where `g_{P,t} = y_{i_1}⋯y_{i_t} x_{i_{t+1}}⋯x_{i_s}`.
pub fn single_edge_colon_formula(g: &Graph, i: Vertex, j: Vertex) -> Result<IdealHandle> {
    let (i, j) = (i.min(j), i.max(j));
    let r = ring_of(g);
    let ge = build_ge(g, i, j)?;
    let mut gens: Vec<Poly> = binomial_edge_ideal(&ge).gens().to_vec();
    let one = crate::polyring::Coeff::from_integer(1.into());
    for path in g.simple_paths_between(i, j) {
        let inner = &path[1..path.len() - 1];
        for t in 0..=inner.len() {
            let m = r.xy_monomial(inner[t..].iter().copied(), inner[..t].iter().copied());
            gens.push(Poly::monomial(m, one.clone()));
        }
    }
    Ok(IdealHandle::new(r.nvars(), gens))
}

/// Compares `(J_G : f_e)` computed by elimination with the path formula.
pub fn colon_single_edge_check(g: &Graph, i: Vertex, j: Vertex) -> Result<bool> {
    let rhs = single_edge_colon_formula(g, i, j)?;
    let r = ring_of(g);
    let lhs = colon_by_poly(&binomial_edge_ideal(g), &r.f(i.min(j), i.max(j)));
    Ok(lhs.equals(&rhs))
}

/// `g_{C,D} = ∏_{k∈C} x_k ∏_{k∈D} y_k` for every split of every given set.
fn split_monomials(r: &Ring, sets: &[VertexSet]) -> Vec<Monomial> {
    let mut out = Vec::new();
    for b in sets {
        let vs = b.to_vec();
        for mask in 0u64..1 << vs.len() {
            let xs = (0..vs.len()).filter(|&k| mask >> k & 1 == 1).map(|k| vs[k]);
            let ys = (0..vs.len()).filter(|&k| mask >> k & 1 == 0).map(|k| vs[k]);
            out.push(r.xy_monomial(xs, ys));
        }
    }
    out
}

fn monomial_polys(ms: Vec<Monomial>) -> impl Iterator<Item = Poly> {
    let one = crate::polyring::Coeff::from_integer(1.into());
    ms.into_iter().map(move |m| Poly::monomial(m, one.clone()))
}

/// `J_G + (g_{C,D} : C ⊔ D = B)` over the given sets `B`.
pub fn dc_colon_formula(g: &Graph, sets: &[VertexSet]) -> IdealHandle {
    let r = ring_of(g);
    let j = binomial_edge_ideal(g);
    IdealHandle::new(r.nvars(), j.gens().iter().cloned().chain(monomial_polys(split_monomials(&r, sets))))
}

/// `(J_G : J_{K_n}) = ⋂_e (J_G : f_e)` over non-edges `e`, by elimination.
pub fn colon_at_complete(g: &Graph) -> IdealHandle {
    let r = ring_of(g);
    let j = binomial_edge_ideal(g);
    let mut acc: Option<IdealHandle> = None;
    for (a, b) in g.non_edges() {
        let c = colon_by_poly(&j, &r.f(a, b));
        acc = Some(match acc {
            None => c,
            Some(prev) => ideal_intersection(&prev, &c),
        });
    }
    acc.unwrap_or_else(|| IdealHandle::unit(r.nvars()))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColonFormulaOutcome {
    /// The elimination colon equals the formula built from minimal members.
    pub equal: bool,
    /// The reduced basis of `J_G` together with the `g_{C,D}` is a Gröbner
    /// basis.
    pub union_is_groebner: bool,
}

impl ColonFormulaOutcome {
    pub fn holds(&self) -> bool {
        self.equal && self.union_is_groebner
    }
}

pub fn colon_formula_outcome(g: &Graph) -> Result<ColonFormulaOutcome> {
    if g.is_complete() {
        return Err(Error::domain("the colon formula needs a non-complete graph"));
    }
    let minimal = dc_minimal_members(g)?;
    let rhs = dc_colon_formula(g, &minimal);
    let lhs = colon_at_complete(g);
    let r = ring_of(g);
    let mut union: Vec<Poly> = binomial_edge_ideal(g).gb().to_vec();
    union.extend(monomial_polys(split_monomials(&r, &minimal)));
    Ok(ColonFormulaOutcome { equal: lhs.equals(&rhs), union_is_groebner: is_groebner(&union) })
}

pub fn colon_formula_check(g: &Graph) -> Result<bool> {
    colon_formula_outcome(g).map(|o| o.holds())
}

/// Values in the inequality chain for closed graphs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainValues {
    pub v: usize,
    pub theta: usize,
    pub v_init: usize,
    pub ell: usize,
    pub holds: bool,
}

/// Computes `v < θ ≤ v(in(J_G)) ≤ ℓ` for a connected graph closed under its
/// labeling. `v(in(J_G))` is cross-checked against the stable-set formula on
/// the initial graph.
pub fn chain_check_closed(g: &Graph) -> Result<ChainValues> {
    if g.edge_count() == 0 || !g.is_connected() {
        return Err(Error::domain("the chain check needs a connected graph with an edge"));
    }
    if !is_closed_labeling(g).closed {
        return Err(Error::domain("the chain check needs a closed labeling"));
    }
    let v = v_number(g)?.v;
    let theta = theta_clique_cover(g).0;
    let v_init = v_initial(g)?;
    let h = initial_graph(g)?;
    let stable = v_edge_ideal_combinatorial(&h)?;
    if stable != v_init {
        return Err(Error::TheoremViolation(format!(
            "initial ideal v-number {v_init} differs from the stable-set value {stable}"
        )));
    }
    let ell = longest_induced_path(g);
    let holds = v < theta && theta <= v_init && v_init <= ell;
    Ok(ChainValues { v, theta, v_init, ell, holds })
}
