//! Sylvester resultants of ternary forms.

use crate::error::{Error, Result};
use crate::form::{Exponent, TernaryForm, Var};
use crate::matrix::Matrix;
use crate::poly::UniPoly;
use crate::rational::Rational;

/// The two variables left after eliminating `var`, in `(x, y, z)` order.
pub fn remaining_vars(var: Var) -> (Var, Var) {
    match var {
        Var::X => (Var::Y, Var::Z),
        Var::Y => (Var::X, Var::Z),
        Var::Z => (Var::X, Var::Y),
    }
}

fn exponent_of(var: Var, e_var: u32, first: Var, e_first: u32, e_second: u32) -> Exponent {
    let mut e = [0u32; 3];
    e[var.index()] = e_var;
    e[first.index()] = e_first;
    let (_, second) = remaining_vars(var);
    e[second.index()] = e_second;
    (e[0], e[1], e[2])
}

/// Coefficients of `f` as a polynomial in `var`, each dehomogenized by
/// setting the second remaining variable to 1. Entry `i` multiplies `var^i`.
fn coefficients_in(f: &TernaryForm, var: Var) -> Vec<UniPoly> {
    let (first, _) = remaining_vars(var);
    let d = f.degree() as usize;
    let mut raw = vec![vec![Rational::zero(); d + 1]; d + 1];
    for (e, c) in f.terms() {
        let ev = [e.0, e.1, e.2];
        raw[ev[var.index()] as usize][ev[first.index()] as usize] = c.clone();
    }
    raw.into_iter().map(UniPoly::new).collect()
}

/// Determinant over Q[t] by evaluation at `0, 1, ..., bound` and
/// interpolation, where `bound` is the sum of the row degrees.
fn poly_determinant(a: Vec<Vec<UniPoly>>) -> UniPoly {
    if a.is_empty() {
        return UniPoly::constant(Rational::one());
    }
    let bound: usize = a
        .iter()
        .map(|row| row.iter().filter_map(UniPoly::degree).max().unwrap_or(0))
        .sum();
    let samples: Vec<(Rational, Rational)> = (0..=bound as i64)
        .map(|t| {
            let t = Rational::from(t);
            let rows: Vec<Vec<Rational>> = a.iter().map(|row| row.iter().map(|p| p.eval(&t)).collect()).collect();
            let det = Matrix::from_rows(&rows).determinant().expect("square");
            (t, det)
        })
        .collect();
    UniPoly::interpolate(&samples)
}

/// Sylvester resultant of `f` and `g` with respect to `var`.
///
/// Both forms are read as polynomials in `var` of formal degree equal to
/// their total degree. The result is a form of degree `deg f * deg g` in
/// the two remaining variables; it vanishes at `(a : b)` exactly when
/// `f` and `g` have a common zero on the line through that point and the
/// coordinate vertex of `var`.
pub fn resultant_eliminate(f: &TernaryForm, g: &TernaryForm, var: Var) -> Result<TernaryForm> {
    let (m, n) = (f.degree() as usize, g.degree() as usize);
    let fc = coefficients_in(f, var);
    let gc = coefficients_in(g, var);
    if fc[m].is_zero() && gc[n].is_zero() && !(f.is_zero() || g.is_zero()) {
        return Err(Error::LeadingCoefficientCollapse);
    }
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for shift in 0..n {
        let mut row = vec![UniPoly::zero(); size];
        for i in 0..=m {
            row[shift + i] = fc[m - i].clone();
        }
        rows.push(row);
    }
    for shift in 0..m {
        let mut row = vec![UniPoly::zero(); size];
        for i in 0..=n {
            row[shift + i] = gc[n - i].clone();
        }
        rows.push(row);
    }
    let det = poly_determinant(rows);
    let out_degree = (m * n) as u32;
    let (first, _) = remaining_vars(var);
    let terms = det
        .coeffs()
        .iter()
        .enumerate()
        .map(|(k, c)| (exponent_of(var, 0, first, k as u32, out_degree - k as u32), c.clone()));
    TernaryForm::from_terms(out_degree, terms)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: i64) -> Rational {
        Rational::from(v)
    }

    #[test]
    fn two_lines() {
        // x - a z and x - b z
        let (a, b) = (q(3), q(-2));
        let f = TernaryForm::from_terms(1, [((1, 0, 0), q(1)), ((0, 0, 1), -&a)]).unwrap();
        let g = TernaryForm::from_terms(1, [((1, 0, 0), q(1)), ((0, 0, 1), -&b)]).unwrap();
        let r = resultant_eliminate(&f, &g, Var::X).unwrap();
        let expected = TernaryForm::monomial((0, 0, 1), &a - &b);
        assert!(r.proportional(&expected));
    }

    #[test]
    fn common_factor_gives_zero() {
        let x = TernaryForm::var(Var::X);
        let f = x.mul(&TernaryForm::var(Var::Y));
        let g = x.mul(&TernaryForm::var(Var::Z)).add(&x.mul(&x)).unwrap();
        let r = resultant_eliminate(&f, &g, Var::X).unwrap();
        assert!(r.is_zero());
        assert_eq!(r.degree(), 4);
    }

    #[test]
    fn collapse_reported() {
        let f = TernaryForm::var(Var::Y);
        let g = TernaryForm::var(Var::Z);
        assert_eq!(resultant_eliminate(&f, &g, Var::X), Err(Error::LeadingCoefficientCollapse));
    }
}
