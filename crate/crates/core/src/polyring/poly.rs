use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Coeff = BigRational;

/// Exponent vector. The derived ordering is lexicographic with variable 0
/// greatest, which is the only monomial order used.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Box<[u16]>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars].into_boxed_slice())
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        let mut e = vec![0; nvars];
        e[index] = 1;
        Monomial(e.into_boxed_slice())
    }

    pub fn from_exponents(exps: Vec<u16>) -> Self {
        Monomial(exps.into_boxed_slice())
    }

    pub fn exponents(&self) -> &[u16] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(|&e| e as usize).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.0.iter().all(|&e| e <= 1)
    }

    /// Indices of the variables that occur.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(other.0.iter()).map(|(a, b)| a + b).collect())
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        self.0
            .iter()
            .zip(other.0.iter())
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Box<[u16]>>>()
            .map(Monomial)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(other.0.iter()).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Same monomial with a new variable of exponent `e` in front.
    pub fn prepend(&self, e: u16) -> Monomial {
        Monomial(std::iter::once(e).chain(self.0.iter().copied()).collect())
    }

    /// Drops the first variable.
    pub fn drop_first(&self) -> Monomial {
        Monomial(self.0[1..].into())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// Sparse polynomial: nonzero terms in strictly descending monomial order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    nvars: usize,
    terms: Vec<(Monomial, Coeff)>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly { nvars, terms: Vec::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Poly::monomial(Monomial::one(nvars), Coeff::one())
    }

    pub fn monomial(m: Monomial, c: Coeff) -> Self {
        let nvars = m.nvars();
        if c.is_zero() {
            return Poly::zero(nvars);
        }
        Poly { nvars, terms: vec![(m, c)] }
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        Poly::monomial(Monomial::var(nvars, index), Coeff::one())
    }

    /// Collects terms in any order, merging equal monomials.
    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, Coeff)>) -> Self {
        let mut v: Vec<(Monomial, Coeff)> = terms.into_iter().collect();
        v.sort_by(|a, b| b.0.cmp(&a.0));
        let mut out: Vec<(Monomial, Coeff)> = Vec::with_capacity(v.len());
        for (m, c) in v {
            debug_assert_eq!(m.nvars(), nvars);
            match out.last_mut() {
                Some(last) if last.0 == m => last.1 += c,
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        Poly { nvars, terms: out }
    }

    /// Takes terms already sorted descending with nonzero coefficients.
    pub(crate) fn from_sorted(nvars: usize, terms: Vec<(Monomial, Coeff)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0 > w[1].0));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        Poly { nvars, terms }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &[(Monomial, Coeff)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, Coeff)> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one()
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn lead_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn lead_coeff(&self) -> Option<&Coeff> {
        self.terms.first().map(|t| &t.1)
    }

    /// Largest total degree of a term; 0 for the zero polynomial.
    pub fn degree(&self) -> usize {
        self.terms.iter().map(|(m, _)| m.degree()).max().unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_homogeneous_by(|m| m.degree())
    }

    pub fn is_homogeneous_by<K: PartialEq>(&self, key: impl Fn(&Monomial) -> K) -> bool {
        match self.terms.first() {
            None => true,
            Some((m0, _)) => {
                let k0 = key(m0);
                self.terms.iter().all(|(m, _)| key(m) == k0)
            }
        }
    }

    pub fn scale(&self, c: &Coeff) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.nvars);
        }
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &Coeff) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.nvars);
        }
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(t, a)| (t.mul(m), a * c)).collect(),
        }
    }

    pub fn monic(&self) -> Poly {
        match self.lead_coeff() {
            None => self.clone(),
            Some(c) if c.is_one() => self.clone(),
            Some(c) => self.scale(&c.recip()),
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        self.add_scaled(other, &Coeff::one(), None)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add_scaled(other, &-Coeff::one(), None)
    }

    pub fn neg(&self) -> Poly {
        self.scale(&-Coeff::one())
    }

    /// `self + c · m · other`, with `m = 1` when absent.
    pub fn add_scaled(&self, other: &Poly, c: &Coeff, m: Option<&Monomial>) -> Poly {
        Poly {
            nvars: self.nvars,
            terms: merge_scaled(&self.terms, &other.terms, c, m),
        }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut acc = Poly::zero(self.nvars);
        for (m, c) in &other.terms {
            acc = acc.add_scaled(self, c, Some(m));
        }
        acc
    }

    /// Exact quotient `self / f`, or `None` when `f` does not divide `self`.
    pub fn div_exact(&self, f: &Poly) -> Option<Poly> {
        let (flm, flc) = (f.lead_monomial()?, f.lead_coeff()?);
        let mut rem = self.clone();
        let mut quotient = Vec::new();
        while let Some((m, c)) = rem.terms.first() {
            let q = m.div(flm)?;
            let qc = c / flc;
            rem = rem.add_scaled(f, &-qc.clone(), Some(&q));
            quotient.push((q, qc));
        }
        Some(Poly::from_sorted(self.nvars, quotient))
    }

    /// Embeds into a ring with one more variable, placed first, at exponent
    /// `e` in every term.
    pub fn prepend_var(&self, e: u16) -> Poly {
        Poly {
            nvars: self.nvars + 1,
            terms: self.terms.iter().map(|(m, c)| (m.prepend(e), c.clone())).collect(),
        }
    }

    /// Drops the first variable, which must not occur.
    pub fn drop_first_var(&self) -> Poly {
        debug_assert!(self.terms.iter().all(|(m, _)| m.exponents()[0] == 0));
        Poly {
            nvars: self.nvars - 1,
            terms: self.terms.iter().map(|(m, c)| (m.drop_first(), c.clone())).collect(),
        }
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", render_with(self, |i| format!("v{i}")))
    }
}

/// Descending merge of `a + c · m · b`.
pub(crate) fn merge_scaled(
    a: &[(Monomial, Coeff)],
    b: &[(Monomial, Coeff)],
    c: &Coeff,
    m: Option<&Monomial>,
) -> Vec<(Monomial, Coeff)> {
    if c.is_zero() {
        return a.to_vec();
    }
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut i = 0;
    let mut bi = b.iter().map(|(t, d)| {
        let t = match m {
            Some(m) => t.mul(m),
            None => t.clone(),
        };
        (t, d * c)
    });
    let mut next_b = bi.next();
    while let Some((tb, db)) = next_b.take() {
        while i < a.len() && a[i].0 > tb {
            out.push(a[i].clone());
            i += 1;
        }
        if i < a.len() && a[i].0 == tb {
            let s = &a[i].1 + db;
            if !s.is_zero() {
                out.push((tb, s));
            }
            i += 1;
        } else {
            out.push((tb, db));
        }
        next_b = bi.next();
    }
    out.extend_from_slice(&a[i..]);
    out
}

/// Renders terms in descending order with variable names from `name`, and
/// coefficients as exact fractions.
pub fn render_with(p: &Poly, name: impl Fn(usize) -> String) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, (m, c)) in p.terms().iter().enumerate() {
        let negative = c.is_negative();
        let abs = c.abs();
        if k == 0 {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let vars: Vec<String> = m
            .exponents()
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| if e == 1 { name(i) } else { format!("{}^{e}", name(i)) })
            .collect();
        let coeff = if abs.is_integer() {
            abs.numer().to_string()
        } else {
            format!("{}/{}", abs.numer(), abs.denom())
        };
        if vars.is_empty() {
            out.push_str(&coeff);
        } else {
            if !abs.is_one() {
                out.push_str(&coeff);
                out.push('*');
            }
            out.push_str(&vars.join("*"));
        }
    }
    out
}

pub fn coeff(n: i64) -> Coeff {
    Coeff::from_integer(BigInt::from(n))
}

pub fn coeff_ratio(n: i64, d: i64) -> Coeff {
    Coeff::new(BigInt::from(n), BigInt::from(d))
}

/// Descending monomial order on polynomials by leading monomial; zero last.
pub fn cmp_by_lead_desc(a: &Poly, b: &Poly) -> Ordering {
    match (a.lead_monomial(), b.lead_monomial()) {
        (Some(x), Some(y)) => y.cmp(x),
        (Some(_), None) => Ordering::Less,
        (None, Some(_)) => Ordering::Greater,
        (None, None) => Ordering::Equal,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(e: &[u16]) -> Monomial {
        Monomial::from_exponents(e.to_vec())
    }

    #[test]
    fn lex_order_puts_first_variable_highest() {
        assert!(mono(&[1, 0, 0]) > mono(&[0, 5, 5]));
        assert!(mono(&[1, 1, 0]) > mono(&[1, 0, 3]));
        assert!(mono(&[0, 0, 1]) > mono(&[0, 0, 0]));
    }

    #[test]
    fn monomial_arithmetic() {
        let a = mono(&[1, 2, 0]);
        let b = mono(&[0, 1, 1]);
        assert_eq!(a.mul(&b), mono(&[1, 3, 1]));
        assert_eq!(a.lcm(&b), mono(&[1, 2, 1]));
        assert_eq!(a.div(&mono(&[1, 1, 0])), Some(mono(&[0, 1, 0])));
        assert_eq!(a.div(&b), None);
        assert!(!a.is_coprime(&b));
        assert!(mono(&[1, 0, 0]).is_coprime(&b));
    }

    #[test]
    fn arithmetic_cancels_and_orders() {
        let x = Poly::var(2, 0);
        let y = Poly::var(2, 1);
        let s = x.add(&y);
        let d = x.sub(&y);
        let prod = s.mul(&d);
        // x^2 - y^2
        assert_eq!(prod.len(), 2);
        assert_eq!(render_with(&prod, |i| ["x", "y"][i].to_string()), "x^2 - y^2");
        assert!(prod.sub(&prod).is_zero());
        assert_eq!(prod.div_exact(&s), Some(d.clone()));
        assert_eq!(prod.div_exact(&Poly::var(2, 0)), None);
    }

    #[test]
    fn rendering_uses_fractions() {
        let p = Poly::from_terms(
            2,
            [(mono(&[1, 0]), coeff_ratio(-1, 2)), (mono(&[0, 0]), coeff(3))],
        );
        assert_eq!(render_with(&p, |i| format!("z{i}")), "-1/2*z0 + 3");
        assert_eq!(render_with(&Poly::zero(2), |i| format!("z{i}")), "0");
    }

    #[test]
    fn homogeneity() {
        let p = Poly::from_terms(2, [(mono(&[1, 1]), coeff(1)), (mono(&[2, 0]), coeff(1))]);
        assert!(p.is_homogeneous());
        assert!(!p.add(&Poly::var(2, 0)).is_homogeneous());
        assert!(Poly::zero(2).is_homogeneous());
    }
}
