//! v-numbers of squarefree monomial ideals through monomial colon and
//! intersection arithmetic, with minimal vertex covers as the associated
//! primes.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::structure::{minimal_vertex_covers, minimalize, v_edge_ideal_combinatorial, Clutter, VarSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquarefreeMonomialIdeal {
    clutter: Clutter,
    names: Vec<String>,
}

impl SquarefreeMonomialIdeal {
    pub fn new(clutter: Clutter, names: Vec<String>) -> Result<Self> {
        if names.len() != clutter.ground() {
            return Err(Error::domain("one variable name per ground element"));
        }
        Ok(SquarefreeMonomialIdeal { clutter, names })
    }

    /// Edge ideal of a graph in variables `t1..tn`.
    pub fn edge_ideal(g: &Graph) -> Self {
        let names = (1..=g.n()).map(|i| format!("t{i}")).collect();
        SquarefreeMonomialIdeal { clutter: Clutter::of_graph(g), names }
    }

    pub fn clutter(&self) -> &Clutter {
        &self.clutter
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn generators(&self) -> &[VarSet] {
        self.clutter.edges()
    }

    pub fn contains(&self, m: VarSet) -> bool {
        self.generators().iter().any(|&e| e & !m == 0)
    }

    pub fn render(&self, m: VarSet) -> String {
        if m == 0 {
            return "1".into();
        }
        (0..self.clutter.ground())
            .filter(|&b| m >> b & 1 == 1)
            .map(|b| self.names[b].as_str())
            .collect::<Vec<_>>()
            .join("*")
    }
}

/// Local v-number at the prime of a minimal vertex cover, with a witness
/// monomial `f` such that `(I : f)` is that prime.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialWitness {
    pub v: usize,
    pub cover: VarSet,
    pub monomial: VarSet,
}

/// Generators of `(I : p_W)` that lie outside `I`; `(I : p_W)` is these
/// plus `I`. Colons and intersections of monomial ideals commute with adding
/// `I`, so generators inside `I` are dropped at every stage.
fn colon_outside(i: &SquarefreeMonomialIdeal, cover: VarSet) -> Vec<VarSet> {
    let gens = i.generators();
    let mut acc: Option<Vec<VarSet>> = None;
    let mut rest = cover;
    while rest != 0 {
        let w = rest.trailing_zeros();
        rest &= rest - 1;
        let colon: Vec<VarSet> = minimalize(gens.iter().map(|&e| e & !(1u128 << w)).collect())
            .into_iter()
            .filter(|&m| !i.contains(m))
            .collect();
        acc = Some(match acc {
            None => colon,
            Some(prev) => {
                let meet = prev.iter().flat_map(|&a| colon.iter().map(move |&b| a | b));
                minimalize(meet.filter(|&m| !i.contains(m)).collect())
            }
        });
    }
    acc.unwrap_or_default()
}

pub fn v_monomial_witness(i: &SquarefreeMonomialIdeal) -> Result<MonomialWitness> {
    if i.generators().is_empty() {
        return Err(Error::domain("the zero ideal has no v-number"));
    }
    let covers = minimal_vertex_covers(i.clutter());
    covers
        .par_iter()
        .map(|&w| {
            let best = colon_outside(i, w)
                .into_iter()
                .min_by(|a, b| crate::structure::set_order(*a, *b))
                .expect("the colon by an associated prime strictly contains I");
            MonomialWitness { v: best.count_ones() as usize, cover: w, monomial: best }
        })
        .collect::<Vec<_>>()
        .into_iter()
        .min_by_key(|w| w.v)
        .ok_or_else(|| Error::domain("no minimal vertex covers"))
}

/// `v(I) = min α((I : p) / I)` over the associated primes.
pub fn v_monomial(i: &SquarefreeMonomialIdeal) -> Result<usize> {
    v_monomial_witness(i).map(|w| w.v)
}

/// v-number of the edge ideal of `h` via monomial colons and via stable
/// sets; fails with a theorem violation when they differ.
pub fn v_edge_ideal_both_routes(h: &Graph) -> Result<usize> {
    let algebraic = v_monomial(&SquarefreeMonomialIdeal::edge_ideal(h))?;
    let combinatorial = v_edge_ideal_combinatorial(h)?;
    if algebraic != combinatorial {
        return Err(Error::TheoremViolation(format!(
            "edge ideal v-number: colon route {algebraic}, stable-set route {combinatorial} on {}",
            h.to_text().trim_end().replace('\n', "; ")
        )));
    }
    Ok(algebraic)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::graph_classes;
    use crate::polyring::{alpha_quotient, colon_by_ideal, IdealHandle, Poly};
    use proptest::prelude::*;

    #[test]
    fn examples() {
        assert_eq!(v_edge_ideal_both_routes(&Graph::path(2).unwrap()).unwrap(), 1);
        assert_eq!(v_edge_ideal_both_routes(&Graph::cycle(5).unwrap()).unwrap(), 2);
        let w = v_monomial_witness(&SquarefreeMonomialIdeal::edge_ideal(&Graph::path(2).unwrap())).unwrap();
        assert_eq!((w.cover, w.monomial), (0b01, 0b10));
        let single_var = Clutter::new(2, [0b01]).unwrap();
        let i = SquarefreeMonomialIdeal::new(single_var, vec!["a".into(), "b".into()]).unwrap();
        assert_eq!(v_monomial(&i).unwrap(), 0);
        let empty = SquarefreeMonomialIdeal::edge_ideal(&Graph::empty(3).unwrap());
        assert!(v_monomial(&empty).is_err());
    }

    #[test]
    fn routes_agree_on_all_small_graphs() {
        // including disconnected graphs and isolated vertices
        for n in 2..=7 {
            for g in graph_classes(n) {
                if g.edge_count() > 0 {
                    v_edge_ideal_both_routes(&g).unwrap();
                }
            }
        }
    }

    #[test]
    fn covers_are_primes_over_the_ideal() {
        let i = SquarefreeMonomialIdeal::edge_ideal(&Graph::cycle(6).unwrap());
        for w in minimal_vertex_covers(i.clutter()) {
            assert!(i.generators().iter().all(|&e| e & w != 0));
        }
    }

    #[test]
    fn non_prime_ideals_of_degree_two_have_positive_v() {
        for g in graph_classes(5) {
            if g.edge_count() > 0 {
                assert!(v_monomial(&SquarefreeMonomialIdeal::edge_ideal(&g)).unwrap() >= 1);
            }
        }
    }

    fn as_ideal(ground: usize, sets: &[VarSet]) -> IdealHandle {
        let gens = sets.iter().map(|&s| {
            let e = (0..ground).map(|b| (s >> b & 1) as u16).collect();
            Poly::monomial(crate::polyring::Monomial::from_exponents(e), crate::polyring::Coeff::from_integer(1.into()))
        });
        IdealHandle::new(ground, gens)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]
        #[test]
        fn local_values_match_groebner_colons(sets in prop::collection::vec(1u128..32, 1..5)) {
            let c = Clutter::new(5, sets).unwrap();
            let i = SquarefreeMonomialIdeal::new(c.clone(), (1..=5).map(|k| format!("t{k}")).collect()).unwrap();
            let ideal = as_ideal(5, c.edges());
            for w in minimal_vertex_covers(&c) {
                let outside = colon_outside(&i, w);
                let mono = outside.iter().map(|m| m.count_ones() as usize).min().unwrap();
                let p = as_ideal(5, &(0..5).filter(|b| w >> b & 1 == 1).map(|b| 1u128 << b).collect::<Vec<_>>());
                let alpha = alpha_quotient(&colon_by_ideal(&ideal, &p), &ideal).unwrap();
                prop_assert_eq!(mono, alpha);
            }
        }
    }
}
