//! Exact polynomial arithmetic over the rationals in `x_1..x_n, y_1..y_n`
//! under lex order `x_1 > … > x_n > y_1 > … > y_n`, with Gröbner bases,
//! intersections, colons and a linear-algebra v-number engine.

pub mod groebner;
pub mod ideal;
pub mod poly;
pub mod sweep;

pub use groebner::{buchberger, is_groebner, normal_form};
pub use ideal::{alpha_quotient, colon_by_ideal, colon_by_poly, ideal_intersection, IdealHandle};
pub use poly::{Coeff, Monomial, Poly};
pub use sweep::{v_local_linear, LinearSweep};

use crate::graph::Vertex;

/// The ring `ℚ[x_1..x_n, y_1..y_n]`; `x_i` is variable `i - 1` and `y_i` is
/// variable `n + i - 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Ring {
    n: usize,
}

impl Ring {
    pub fn new(n: usize) -> Self {
        Ring { n }
    }

    /// Number of graph vertices.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn nvars(&self) -> usize {
        2 * self.n
    }

    pub fn x_index(&self, i: Vertex) -> usize {
        debug_assert!((1..=self.n).contains(&i));
        i - 1
    }

    pub fn y_index(&self, i: Vertex) -> usize {
        debug_assert!((1..=self.n).contains(&i));
        self.n + i - 1
    }

    pub fn x(&self, i: Vertex) -> Poly {
        Poly::var(self.nvars(), self.x_index(i))
    }

    pub fn y(&self, i: Vertex) -> Poly {
        Poly::var(self.nvars(), self.y_index(i))
    }

    /// `x_i y_j - x_j y_i`.
    pub fn f(&self, i: Vertex, j: Vertex) -> Poly {
        self.x(i).mul(&self.y(j)).sub(&self.x(j).mul(&self.y(i)))
    }

    /// Product of `x_k` over `xs` and `y_k` over `ys`.
    pub fn xy_monomial(&self, xs: impl IntoIterator<Item = Vertex>, ys: impl IntoIterator<Item = Vertex>) -> Monomial {
        let mut e = vec![0u16; self.nvars()];
        for k in xs {
            e[self.x_index(k)] += 1;
        }
        for k in ys {
            e[self.y_index(k)] += 1;
        }
        Monomial::from_exponents(e)
    }

    pub fn var_name(&self, index: usize) -> String {
        if index < self.n {
            format!("x{}", index + 1)
        } else {
            format!("y{}", index - self.n + 1)
        }
    }

    /// Descending terms, variables `x1..xn, y1..yn`, coefficients `p/q`.
    pub fn render(&self, p: &Poly) -> String {
        assert_eq!(p.nvars(), self.nvars(), "polynomial from another ring");
        poly::render_with(p, |i| self.var_name(i))
    }

    pub fn render_monomial(&self, m: &Monomial) -> String {
        self.render(&Poly::monomial(m.clone(), Coeff::from_integer(1.into())))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn variable_layout_and_rendering() {
        let r = Ring::new(3);
        assert_eq!(r.render(&r.f(1, 2)), "x1*y2 - x2*y1");
        assert_eq!(r.render(&r.f(2, 3).scale(&poly::coeff_ratio(1, 3))), "1/3*x2*y3 - 1/3*x3*y2");
        assert_eq!(r.render_monomial(&r.xy_monomial([1, 1], [3])), "x1^2*y3");
        // lex: x3 > y1
        assert!(r.x(3).lead_monomial() > r.y(1).lead_monomial());
    }
}
