//! Degree-by-degree search for the least degree of an `f ∉ I` with
//! `f · P ⊆ I`.
//!
//! For radical `I` and a minimal prime `P`, any such `f` has `(I : f) = P`,
//! so the first hit is the local v-number `v_P(I)`. Candidates are linear
//! combinations of standard monomials (monomials outside the initial ideal),
//! so every nonzero candidate is automatically outside `I`. The conditions
//! `NF(f · g) = 0` are linear in the coefficients; a candidate exists exactly
//! when the rows `NF(m · g)` of the standard monomials `m` are linearly
//! dependent. When `I` and `P` are homogeneous for the fine grading by
//! vertex (`deg x_i = deg y_i = e_i`) and `x`-degree, each graded piece is
//! solved separately.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, RwLock};

use num_traits::{One, Zero};
use rustc_hash::FxHashMap;

use super::groebner::normal_form;
use super::ideal::IdealHandle;
use super::poly::{merge_scaled, Coeff, Monomial, Poly};

/// Grading used to split each degree into independent pieces.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Grading {
    /// Total degree only.
    Total,
    /// Per-vertex degree `deg x_i + deg y_i` plus the total `x`-degree, over
    /// `2n` variables.
    Vertex { n: usize },
}

impl Grading {
    fn key(self, m: &Monomial) -> Vec<u16> {
        match self {
            Grading::Total => vec![m.degree() as u16],
            Grading::Vertex { n } => {
                let e = m.exponents();
                let mut k: Vec<u16> = (0..n).map(|i| e[i] + e[n + i]).collect();
                k.push(e[..n].iter().sum());
                k
            }
        }
    }

    fn homogeneous(self, p: &Poly) -> bool {
        p.is_homogeneous_by(|m| self.key(m))
    }

    /// Finest grading for which all the given polynomials are homogeneous.
    pub fn detect<'a>(nvars: usize, polys: impl IntoIterator<Item = &'a Poly> + Clone) -> Grading {
        let fine = Grading::Vertex { n: nvars / 2 };
        if nvars.is_multiple_of(2) && polys.clone().into_iter().all(|p| fine.homogeneous(p)) {
            fine
        } else {
            Grading::Total
        }
    }
}

type Row = Vec<(usize, Coeff)>;

/// Normal forms of monomials modulo a fixed ideal, memoized, plus the
/// standard monomials of each degree grouped by graded piece. Safe to share
/// across threads.
pub struct LinearSweep<'a> {
    ideal: &'a IdealHandle,
    grading: Grading,
    leads: Vec<Monomial>,
    cache: RwLock<FxHashMap<Monomial, Arc<Poly>>>,
    standard: Mutex<HashMap<usize, Arc<Vec<Vec<Monomial>>>>>,
}

impl<'a> LinearSweep<'a> {
    pub fn new(ideal: &'a IdealHandle, grading: Grading) -> Self {
        let leads = ideal
            .gb()
            .iter()
            .map(|g| g.lead_monomial().unwrap().clone())
            .collect();
        LinearSweep {
            ideal,
            grading,
            leads,
            cache: RwLock::new(FxHashMap::default()),
            standard: Mutex::new(HashMap::new()),
        }
    }

    pub fn ideal(&self) -> &IdealHandle {
        self.ideal
    }

    pub fn grading(&self) -> Grading {
        self.grading
    }

    fn is_standard(&self, m: &Monomial) -> bool {
        !self.leads.iter().any(|l| l.divides(m))
    }

    /// Normal form of a monomial modulo the ideal.
    pub fn nf_monomial(&self, m: &Monomial) -> Arc<Poly> {
        if let Some(p) = self.cache.read().unwrap().get(m) {
            return p.clone();
        }
        let gb = self.ideal.gb();
        let nvars = m.nvars();
        let nf = match gb.iter().find(|g| g.lead_monomial().unwrap().divides(m)) {
            None => Poly::monomial(m.clone(), Coeff::one()),
            Some(g) => {
                // m ≡ m - (m / lm(g)) · g, whose terms are all smaller than m
                let q = m.div(g.lead_monomial().unwrap()).unwrap();
                let lc = g.lead_coeff().unwrap();
                let mut acc: Vec<(Monomial, Coeff)> = Vec::new();
                for (t, c) in &g.terms()[1..] {
                    let sub = self.nf_monomial(&t.mul(&q));
                    acc = merge_scaled(&acc, sub.terms(), &-(c / lc), None);
                }
                Poly::from_sorted(nvars, acc)
            }
        };
        let nf = Arc::new(nf);
        self.cache.write().unwrap().insert(m.clone(), nf.clone());
        nf
    }

    /// Normal form of `m · p`.
    pub fn nf_times(&self, m: &Monomial, p: &Poly) -> Vec<(Monomial, Coeff)> {
        let mut acc = Vec::new();
        for (t, c) in p.terms() {
            let sub = self.nf_monomial(&t.mul(m));
            acc = merge_scaled(&acc, sub.terms(), c, None);
        }
        acc
    }

    /// Standard monomials of degree `d`, one list per graded piece, pieces in
    /// key order and monomials descending within each piece.
    pub fn standard_pieces(&self, d: usize) -> Arc<Vec<Vec<Monomial>>> {
        if let Some(p) = self.standard.lock().unwrap().get(&d) {
            return p.clone();
        }
        let nvars = self.ideal.nvars();
        let mut pieces: BTreeMap<Vec<u16>, Vec<Monomial>> = BTreeMap::new();
        let mut exps = vec![0u16; nvars];
        enumerate_degree(&mut exps, 0, d, &mut |e| {
            let m = Monomial::from_exponents(e.to_vec());
            if self.is_standard(&m) {
                pieces.entry(self.grading.key(&m)).or_default().push(m);
            }
        });
        let mut out: Vec<Vec<Monomial>> = pieces.into_values().collect();
        for piece in &mut out {
            piece.sort_by(|a, b| b.cmp(a));
        }
        let out = Arc::new(out);
        self.standard.lock().unwrap().insert(d, out.clone());
        out
    }

    /// A nonzero combination `f` of standard monomials of degree `d` with
    /// `f · g ∈ I` for every generator `g` of `p`, if one exists.
    pub fn witness_at_degree(&self, p: &IdealHandle, d: usize) -> Option<Poly> {
        let nvars = self.ideal.nvars();
        for piece in self.standard_pieces(d).iter() {
            let mut columns: HashMap<(usize, Monomial), usize> = HashMap::new();
            let mut pivots: HashMap<usize, usize> = HashMap::new();
            let mut rows: Vec<(Row, Row)> = Vec::new();
            for (mi, m) in piece.iter().enumerate() {
                let mut row: Row = Vec::new();
                for (gi, g) in p.gens().iter().enumerate() {
                    for (t, c) in self.nf_times(m, g) {
                        let next = columns.len();
                        let col = *columns.entry((gi, t)).or_insert(next);
                        row.push((col, c));
                    }
                }
                row.sort_by_key(|e| e.0);
                let mut combo: Row = vec![(mi, Coeff::one())];
                loop {
                    let Some((col, c)) = row.first().cloned() else {
                        let terms = combo.into_iter().map(|(k, c)| (piece[k].clone(), c));
                        return Some(Poly::from_terms(nvars, terms));
                    };
                    match pivots.get(&col) {
                        Some(&r) => {
                            let (prow, pcombo) = &rows[r];
                            let factor = -c;
                            row = add_rows(&row, prow, &factor);
                            combo = add_rows(&combo, pcombo, &factor);
                        }
                        None => {
                            let inv = c.recip();
                            let row: Row = row.into_iter().map(|(k, v)| (k, v * &inv)).collect();
                            let combo: Row = combo.into_iter().map(|(k, v)| (k, v * &inv)).collect();
                            pivots.insert(col, rows.len());
                            rows.push((row, combo));
                            break;
                        }
                    }
                }
            }
        }
        None
    }

    /// Least `d ≤ max_degree` with a witness, and the witness.
    pub fn local_v(&self, p: &IdealHandle, max_degree: usize) -> Option<(usize, Poly)> {
        (0..=max_degree).find_map(|d| self.witness_at_degree(p, d).map(|f| (d, f)))
    }
}

/// Sparse `a + factor · b` over sorted column lists.
fn add_rows(a: &Row, b: &Row, factor: &Coeff) -> Row {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            out.push((b[j].0, &b[j].1 * factor));
            j += 1;
        } else {
            let v = &a[i].1 + &b[j].1 * factor;
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

fn enumerate_degree(exps: &mut Vec<u16>, var: usize, left: usize, f: &mut dyn FnMut(&[u16])) {
    if var + 1 == exps.len() {
        exps[var] = left as u16;
        f(exps);
        exps[var] = 0;
        return;
    }
    for e in (0..=left).rev() {
        exps[var] = e as u16;
        enumerate_degree(exps, var + 1, left - e, f);
    }
    exps[var] = 0;
}

/// Local v-number of a radical homogeneous `i` at the prime `p`, by degree
/// sweep up to `max_degree`; `None` if no witness exists up to that degree.
pub fn v_local_linear(i: &IdealHandle, p: &IdealHandle, max_degree: usize) -> Option<usize> {
    v_local_linear_witness(i, p, max_degree).map(|(d, _)| d)
}

/// As [`v_local_linear`], also returning a witness `f` with `(I : f) = P`.
pub fn v_local_linear_witness(i: &IdealHandle, p: &IdealHandle, max_degree: usize) -> Option<(usize, Poly)> {
    if i.nvars() == 0 {
        return Some((0, Poly::one(0)));
    }
    let grading = Grading::detect(i.nvars(), i.gens().iter().chain(p.gens()));
    LinearSweep::new(i, grading).local_v(p, max_degree)
}

/// Checks that `f ∉ I` and `f · P ⊆ I`.
pub fn is_witness(i: &IdealHandle, p: &IdealHandle, f: &Poly) -> bool {
    !i.contains(f) && p.gens().iter().all(|g| normal_form(&f.mul(g), i.gb()).is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{alpha_quotient, colon_by_ideal, Ring};

    fn ideal(r: &Ring, gens: Vec<Poly>) -> IdealHandle {
        IdealHandle::new(r.nvars(), gens)
    }

    fn complete(r: &Ring) -> IdealHandle {
        let n = r.n();
        ideal(r, (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))).map(|(i, j)| r.f(i, j)).collect())
    }

    #[test]
    fn path_on_three_vertices() {
        let r = Ring::new(3);
        let jp3 = ideal(&r, vec![r.f(1, 2), r.f(2, 3)]);
        let m2 = ideal(&r, vec![r.x(2), r.y(2)]);
        let (d, f) = v_local_linear_witness(&jp3, &m2, 4).unwrap();
        assert_eq!(d, 2);
        assert!(is_witness(&jp3, &m2, &f));
        assert_eq!(alpha_quotient(&colon_by_ideal(&jp3, &m2), &jp3).unwrap(), 2);
        // f_13 up to scalar and modulo J_{P_3}
        assert!(ideal(&r, vec![r.f(1, 3)]).sum(&jp3).contains(&f));
    }

    #[test]
    fn prime_ideal_has_v_zero() {
        let r = Ring::new(2);
        let k2 = ideal(&r, vec![r.f(1, 2)]);
        assert_eq!(v_local_linear(&k2, &k2, 4), Some(0));
    }

    #[test]
    fn six_cycle_at_the_complete_graph_prime() {
        let r = Ring::new(6);
        let c6 = ideal(&r, (1..=6).map(|i| r.f(i.min(i % 6 + 1), i.max(i % 6 + 1))).collect());
        let (d, f) = v_local_linear_witness(&c6, &complete(&r), 6).unwrap();
        assert_eq!(d, 4);
        assert!(is_witness(&c6, &complete(&r), &f));
    }

    #[test]
    fn none_below_the_true_degree() {
        let r = Ring::new(3);
        let jp3 = ideal(&r, vec![r.f(1, 2), r.f(2, 3)]);
        let m2 = ideal(&r, vec![r.x(2), r.y(2)]);
        assert_eq!(v_local_linear(&jp3, &m2, 1), None);
    }

    #[test]
    fn grading_detection() {
        let r = Ring::new(3);
        assert_eq!(Grading::detect(6, &[r.f(1, 2)]), Grading::Vertex { n: 3 });
        let mixed = r.x(1).add(&r.x(2));
        assert_eq!(Grading::detect(6, &[mixed]), Grading::Total);
    }

    #[test]
    fn monomial_normal_forms_match_division() {
        let r = Ring::new(4);
        let jc4 = ideal(&r, vec![r.f(1, 2), r.f(2, 3), r.f(3, 4), r.f(1, 4)]);
        let sweep = LinearSweep::new(&jc4, Grading::Vertex { n: 4 });
        let mut e = vec![0u16; 8];
        enumerate_degree(&mut e, 0, 3, &mut |ex| {
            let m = Monomial::from_exponents(ex.to_vec());
            let direct = normal_form(&Poly::monomial(m.clone(), Coeff::one()), jc4.gb());
            assert_eq!(*sweep.nf_monomial(&m), direct);
        });
    }
}
