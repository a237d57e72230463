use std::collections::{BTreeSet, HashSet};

use num_traits::One;

use super::poly::{merge_scaled, Monomial, Poly};

/// Remainder of multivariate division of `f` by `basis`. The greatest
/// reducible term is always reduced first, against the first basis element
/// whose leading monomial divides it.
pub fn normal_form(f: &Poly, basis: &[Poly]) -> Poly {
    let nvars = f.nvars();
    let leads: Vec<(&Monomial, &Poly)> = basis
        .iter()
        .filter_map(|g| g.lead_monomial().map(|m| (m, g)))
        .collect();
    let mut rest = f.terms().to_vec();
    let mut remainder = Vec::new();
    let mut start = 0;
    while start < rest.len() {
        let (m, c) = &rest[start];
        match leads.iter().find(|(lm, _)| lm.divides(m)) {
            None => {
                remainder.push(rest[start].clone());
                start += 1;
            }
            Some((lm, g)) => {
                let q = m.div(lm).expect("divisor checked");
                let factor = -(c / g.lead_coeff().expect("nonzero basis element"));
                rest = merge_scaled(&rest[start..], g.terms(), &factor, Some(&q));
                start = 0;
            }
        }
    }
    Poly::from_sorted(nvars, remainder)
}

pub fn s_polynomial(f: &Poly, g: &Poly) -> Poly {
    let (fm, gm) = (f.lead_monomial().unwrap(), g.lead_monomial().unwrap());
    let l = fm.lcm(gm);
    let a = f.mul_term(&l.div(fm).unwrap(), &f.lead_coeff().unwrap().recip());
    a.add_scaled(g, &-g.lead_coeff().unwrap().recip(), Some(&l.div(gm).unwrap()))
}

/// Reduced, monic lex Gröbner basis sorted by descending leading monomial.
pub fn buchberger(gens: &[Poly]) -> Vec<Poly> {
    let mut basis: Vec<Poly> = gens.iter().filter(|g| !g.is_zero()).map(Poly::monic).collect();
    if basis.is_empty() {
        return basis;
    }
    if let Some(c) = basis.iter().find(|g| g.is_constant()) {
        return vec![c.monic()];
    }
    // (lcm degree, lcm, i, j): normal selection strategy
    let mut queue: BTreeSet<(usize, Monomial, usize, usize)> = BTreeSet::new();
    let mut pending: HashSet<(usize, usize)> = HashSet::new();
    let lead = |b: &Vec<Poly>, i: usize| b[i].lead_monomial().unwrap().clone();
    for j in 0..basis.len() {
        for i in 0..j {
            let l = lead(&basis, i).lcm(&lead(&basis, j));
            queue.insert((l.degree(), l, i, j));
            pending.insert((i, j));
        }
    }
    while let Some((_, l, i, j)) = queue.pop_first() {
        pending.remove(&(i, j));
        let (li, lj) = (lead(&basis, i), lead(&basis, j));
        if li.is_coprime(&lj) {
            continue;
        }
        let key = |a: usize, b: usize| (a.min(b), a.max(b));
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].lead_monomial().unwrap().divides(&l)
                && !pending.contains(&key(i, k))
                && !pending.contains(&key(j, k))
        });
        if chain {
            continue;
        }
        let r = normal_form(&s_polynomial(&basis[i], &basis[j]), &basis);
        if r.is_zero() {
            continue;
        }
        if r.is_constant() {
            return vec![r.monic()];
        }
        let r = r.monic();
        let rl = r.lead_monomial().unwrap().clone();
        let new = basis.len();
        basis.push(r);
        for k in 0..new {
            let l = lead(&basis, k).lcm(&rl);
            queue.insert((l.degree(), l, k, new));
            pending.insert((k, new));
        }
    }
    reduce_basis(basis)
}

/// Turns a Gröbner basis into the reduced one.
pub fn reduce_basis(basis: Vec<Poly>) -> Vec<Poly> {
    let mut basis: Vec<Poly> = basis.into_iter().filter(|g| !g.is_zero()).collect();
    basis.sort_by(|a, b| a.lead_monomial().cmp(&b.lead_monomial()));
    let mut minimal: Vec<Poly> = Vec::new();
    for g in basis {
        let gl = g.lead_monomial().unwrap();
        if !minimal.iter().any(|h| h.lead_monomial().unwrap().divides(gl)) {
            minimal.push(g);
        }
    }
    let mut reduced: Vec<Poly> = (0..minimal.len())
        .map(|k| {
            let others: Vec<Poly> = minimal
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != k)
                .map(|(_, h)| h.clone())
                .collect();
            normal_form(&minimal[k], &others).monic()
        })
        .collect();
    reduced.sort_by(super::poly::cmp_by_lead_desc);
    reduced
}

/// Buchberger's criterion: every S-polynomial reduces to zero.
pub fn is_groebner(gens: &[Poly]) -> bool {
    let g: Vec<&Poly> = gens.iter().filter(|p| !p.is_zero()).collect();
    let owned: Vec<Poly> = g.iter().map(|p| (*p).clone()).collect();
    for j in 0..g.len() {
        for i in 0..j {
            if g[i].lead_monomial().unwrap().is_coprime(g[j].lead_monomial().unwrap()) {
                continue;
            }
            if !normal_form(&s_polynomial(g[i], g[j]), &owned).is_zero() {
                return false;
            }
        }
    }
    true
}

/// True when no leading monomial divides another and no term of any element
/// is divisible by another element's leading monomial.
pub fn is_reduced(basis: &[Poly]) -> bool {
    basis.iter().enumerate().all(|(k, g)| {
        g.lead_coeff().is_some_and(One::is_one)
            && basis.iter().enumerate().all(|(i, h)| {
                i == k
                    || g.terms()
                        .iter()
                        .all(|(m, _)| !h.lead_monomial().unwrap().divides(m))
            })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::Ring;

    #[test]
    fn normal_form_examples() {
        let r = Ring::new(2);
        let f12 = r.f(1, 2);
        assert!(normal_form(&f12, std::slice::from_ref(&f12)).is_zero());
        let x1y2 = r.x(1).mul(&r.y(2));
        let x2y1 = r.x(2).mul(&r.y(1));
        assert_eq!(normal_form(&x1y2, std::slice::from_ref(&f12)), x2y1);
        assert_eq!(normal_form(&x2y1, std::slice::from_ref(&f12)), x2y1);
        assert_eq!(normal_form(&x2y1, &[]), x2y1);
    }

    #[test]
    fn buchberger_examples() {
        let r = Ring::new(4);
        let k2 = buchberger(&[r.f(1, 2)]);
        assert_eq!(k2, vec![r.f(1, 2)]);
        let p3 = buchberger(&[r.f(1, 2), r.f(2, 3)]);
        assert_eq!(p3.len(), 2);
        assert!(is_groebner(&[r.f(1, 2), r.f(2, 3)]));
        let c4 = [r.f(1, 2), r.f(2, 3), r.f(3, 4), r.f(1, 4)];
        assert!(!is_groebner(&c4));
        let gb = buchberger(&c4);
        assert!(gb.len() > 4);
        assert!(is_groebner(&gb));
        assert!(is_reduced(&gb));
        for g in &c4 {
            assert!(normal_form(g, &gb).is_zero());
        }
        assert!(buchberger(&[]).is_empty());
        assert!(is_groebner(&[r.f(1, 2)]));
    }

    #[test]
    fn unit_ideal_collapses() {
        let r = Ring::new(1);
        let gb = buchberger(&[r.x(1), r.x(1).add(&Poly::one(2))]);
        assert_eq!(gb, vec![Poly::one(2)]);
    }
}
