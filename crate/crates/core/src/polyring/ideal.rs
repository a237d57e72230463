use std::sync::OnceLock;

use crate::error::{Error, Result};

use super::groebner::{buchberger, normal_form};
use super::poly::Poly;

/// Generators plus a lazily computed reduced Gröbner basis. The basis is
/// computed at most once even under concurrent first access.
#[derive(Clone, Debug)]
pub struct IdealHandle {
    nvars: usize,
    gens: Vec<Poly>,
    gb: OnceLock<Vec<Poly>>,
}

impl IdealHandle {
    pub fn new(nvars: usize, gens: impl IntoIterator<Item = Poly>) -> Self {
        let gens: Vec<Poly> = gens
            .into_iter()
            .inspect(|g| assert_eq!(g.nvars(), nvars, "generator from another ring"))
            .filter(|g| !g.is_zero())
            .collect();
        IdealHandle { nvars, gens, gb: OnceLock::new() }
    }

    /// Wraps a basis already known to be the reduced Gröbner basis.
    pub(crate) fn from_reduced_basis(nvars: usize, gb: Vec<Poly>) -> Self {
        let cell = OnceLock::new();
        let _ = cell.set(gb.clone());
        IdealHandle { nvars, gens: gb, gb: cell }
    }

    pub fn zero(nvars: usize) -> Self {
        IdealHandle::from_reduced_basis(nvars, Vec::new())
    }

    pub fn unit(nvars: usize) -> Self {
        IdealHandle::from_reduced_basis(nvars, vec![Poly::one(nvars)])
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn gens(&self) -> &[Poly] {
        &self.gens
    }

    pub fn gb(&self) -> &[Poly] {
        self.gb.get_or_init(|| buchberger(&self.gens))
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gb().first().is_some_and(Poly::is_constant)
    }

    pub fn contains(&self, f: &Poly) -> bool {
        normal_form(f, self.gb()).is_zero()
    }

    /// `other ⊆ self`.
    pub fn contains_ideal(&self, other: &IdealHandle) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    /// Equality through reduced Gröbner bases.
    pub fn equals(&self, other: &IdealHandle) -> bool {
        self.nvars == other.nvars && self.gb() == other.gb()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(Poly::is_homogeneous)
    }

    /// `self + other`.
    pub fn sum(&self, other: &IdealHandle) -> IdealHandle {
        IdealHandle::new(self.nvars, self.gens.iter().chain(&other.gens).cloned())
    }
}

/// `I ∩ J`: eliminate `t` from `t·I + (1 - t)·J`, with `t` the greatest
/// variable. The result carries its reduced Gröbner basis.
pub fn ideal_intersection(i: &IdealHandle, j: &IdealHandle) -> IdealHandle {
    assert_eq!(i.nvars, j.nvars, "ideals from different rings");
    let nvars = i.nvars;
    if i.is_zero() || j.is_zero() {
        return IdealHandle::zero(nvars);
    }
    let t = Poly::var(nvars + 1, 0);
    let one_minus_t = Poly::one(nvars + 1).sub(&t);
    let mut gens: Vec<Poly> = i.gb().iter().map(|g| g.prepend_var(0).mul(&t)).collect();
    gens.extend(j.gb().iter().map(|g| g.prepend_var(0).mul(&one_minus_t)));
    let gb = buchberger(&gens);
    let kept: Vec<Poly> = gb
        .into_iter()
        .filter(|g| g.terms().iter().all(|(m, _)| m.exponents()[0] == 0))
        .map(|g| g.drop_first_var())
        .collect();
    IdealHandle::from_reduced_basis(nvars, kept)
}

/// `(I : f) = (I ∩ (f)) / f`.
///
/// Panics if a generator of `I ∩ (f)` is not divisible by `f`, which would
/// mean the intersection is wrong.
pub fn colon_by_poly(i: &IdealHandle, f: &Poly) -> IdealHandle {
    assert!(!f.is_zero(), "colon by the zero polynomial");
    if f.is_constant() {
        return i.clone();
    }
    let principal = IdealHandle::new(i.nvars, [f.clone()]);
    let meet = ideal_intersection(i, &principal);
    let quotients: Vec<Poly> = meet
        .gb()
        .iter()
        .map(|g| {
            g.div_exact(f)
                .unwrap_or_else(|| panic!("inexact division in colon: {g:?} by {f:?}"))
        })
        .collect();
    IdealHandle::new(i.nvars, quotients)
}

/// `(I : P) = ⋂_k (I : p_k)` over the generators of `P`.
pub fn colon_by_ideal(i: &IdealHandle, p: &IdealHandle) -> IdealHandle {
    let mut acc: Option<IdealHandle> = None;
    for g in p.gens() {
        let c = colon_by_poly(i, g);
        acc = Some(match acc {
            None => c,
            Some(a) => ideal_intersection(&a, &c),
        });
    }
    acc.unwrap_or_else(|| IdealHandle::unit(i.nvars))
}

/// `α(J / I)`: least degree of a generator of `J` outside `I`, or 0 when
/// `J = I`. Both ideals must be homogeneous and `I ⊆ J`.
pub fn alpha_quotient(j: &IdealHandle, i: &IdealHandle) -> Result<usize> {
    if !i.is_homogeneous() || !j.is_homogeneous() {
        return Err(Error::domain("alpha of a quotient needs homogeneous ideals"));
    }
    if !j.contains_ideal(i) {
        return Err(Error::domain("alpha of J/I needs I inside J"));
    }
    Ok(j.gens()
        .iter()
        .filter(|g| !i.contains(g))
        .map(Poly::degree)
        .min()
        .unwrap_or(0))
}
