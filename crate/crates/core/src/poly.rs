//! Univariate polynomials and binary forms over the rationals.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::modp::PolyFp;
use crate::rational::{make_primitive, Rational};

/// Dense univariate polynomial, little-endian, with no trailing zeros.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        UniPoly::new(vec![c])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn eval(&self, t: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| &(&acc * t) + c)
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        UniPoly::new((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        UniPoly::new((0..n).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        UniPoly::new(out)
    }

    pub fn scale(&self, s: &Rational) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    /// Euclidean division. Panics if `divisor` is zero.
    pub fn div_rem(&self, divisor: &UniPoly) -> (UniPoly, UniPoly) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (UniPoly::zero(), self.clone());
        }
        let lead_inv = divisor.coeffs[dd].recip();
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for top in (dd..rem.len()).rev() {
            let f = &rem[top] * &lead_inv;
            if f.is_zero() {
                continue;
            }
            for (k, g) in divisor.coeffs.iter().enumerate() {
                let d = &f * g;
                rem[top - dd + k] -= &d;
            }
            quot[top - dd] = f;
        }
        rem.truncate(dd);
        (UniPoly::new(quot), UniPoly::new(rem))
    }

    pub fn div_exact(&self, divisor: &UniPoly) -> Result<UniPoly> {
        let (q, r) = self.div_rem(divisor);
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::InexactDivision)
        }
    }

    /// Primitive integer multiple with positive leading coefficient.
    pub fn primitive(&self) -> UniPoly {
        let mut c = self.coeffs.clone();
        c.reverse();
        make_primitive(&mut c);
        c.reverse();
        UniPoly::new(c)
    }

    /// Greatest common divisor, normalized to a primitive integer polynomial.
    /// Remainders are kept primitive to limit coefficient growth.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (self.primitive(), other.primitive());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r.primitive();
        }
        a.primitive()
    }

    /// The polynomial of degree below `points.len()` through the given
    /// values, by Newton's divided differences. Nodes must be distinct.
    pub fn interpolate(points: &[(Rational, Rational)]) -> UniPoly {
        let n = points.len();
        let mut dd: Vec<Rational> = points.iter().map(|(_, y)| y.clone()).collect();
        for level in 1..n {
            for i in (level..n).rev() {
                let dx = &points[i].0 - &points[i - level].0;
                dd[i] = &(&dd[i] - &dd[i - 1]) / &dx;
            }
        }
        let mut out = UniPoly::zero();
        for i in (0..n).rev() {
            let shift = UniPoly::new(vec![-points[i].0.clone(), Rational::one()]);
            out = out.mul(&shift).add(&UniPoly::constant(dd[i].clone()));
        }
        out
    }

    pub fn derivative(&self) -> UniPoly {
        UniPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * &Rational::from(i as i64))
                .collect(),
        )
    }

    /// Reduction modulo `p`; `None` when a denominator vanishes mod `p`.
    pub fn mod_p(&self, p: u64) -> Option<PolyFp> {
        let c: Option<Vec<u64>> = self.coeffs.iter().map(|c| c.mod_p(p)).collect();
        Some(PolyFp::new(p, c?))
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| format!("({c})t^{i}"))
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

/// Homogeneous form in two variables `(u, v)`: `coeffs[i]` multiplies
/// `u^(d-i) v^i`.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BinaryForm {
    degree: u32,
    coeffs: Vec<Rational>,
}

impl BinaryForm {
    pub fn new(degree: u32, coeffs: Vec<Rational>) -> Result<Self> {
        if coeffs.len() != degree as usize + 1 {
            return Err(Error::Dimension(format!(
                "{} coefficients for a binary form of degree {degree}",
                coeffs.len()
            )));
        }
        Ok(BinaryForm { degree, coeffs })
    }

    pub fn zero(degree: u32) -> Self {
        BinaryForm {
            degree,
            coeffs: vec![Rational::zero(); degree as usize + 1],
        }
    }

    /// The linear form `a u + b v`.
    pub fn linear(a: Rational, b: Rational) -> Self {
        BinaryForm {
            degree: 1,
            coeffs: vec![a, b],
        }
    }

    /// The linear form vanishing at `(u0 : v0)`, namely `v0 u - u0 v`.
    pub fn vanishing_at(u0: &Rational, v0: &Rational) -> Self {
        BinaryForm::linear(v0.clone(), -u0)
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    pub fn eval(&self, u: &Rational, v: &Rational) -> Rational {
        let d = self.degree;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| c * &u.pow(d - i as u32) * v.pow(i as u32))
            .sum()
    }

    pub fn add(&self, other: &BinaryForm) -> Result<BinaryForm> {
        if self.degree != other.degree {
            return Err(Error::WrongDegree {
                expected: self.degree,
                found: other.degree,
            });
        }
        Ok(BinaryForm {
            degree: self.degree,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn scale(&self, s: &Rational) -> BinaryForm {
        BinaryForm {
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    pub fn mul(&self, other: &BinaryForm) -> BinaryForm {
        let mut out = vec![Rational::zero(); (self.degree + other.degree) as usize + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        BinaryForm {
            degree: self.degree + other.degree,
            coeffs: out,
        }
    }

    pub fn pow(&self, e: u32) -> BinaryForm {
        let mut acc = BinaryForm {
            degree: 0,
            coeffs: vec![Rational::one()],
        };
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Dehomogenization at `u = 1`, as a polynomial in `v`.
    pub fn dehomogenize(&self) -> UniPoly {
        UniPoly::new(self.coeffs.clone())
    }

    /// Homogenizes `p` to degree `degree`. Fails if `p` is too large.
    pub fn homogenize(p: &UniPoly, degree: u32) -> Result<BinaryForm> {
        if p.degree().unwrap_or(0) > degree as usize {
            return Err(Error::Dimension("polynomial exceeds form degree".into()));
        }
        Ok(BinaryForm {
            degree,
            coeffs: (0..=degree as usize).map(|i| p.coeff(i)).collect(),
        })
    }

    /// Exact quotient `self / divisor`.
    pub fn div_exact(&self, divisor: &BinaryForm) -> Result<BinaryForm> {
        if divisor.is_zero() || divisor.degree > self.degree {
            return Err(Error::InexactDivision);
        }
        let q = self.dehomogenize().div_exact(&divisor.dehomogenize())?;
        BinaryForm::homogenize(&q, self.degree - divisor.degree).map_err(|_| Error::InexactDivision)
    }

    /// Order of vanishing at `(u0 : v0)`, counted by repeated exact division.
    /// The zero form returns `None`.
    pub fn order_at(&self, u0: &Rational, v0: &Rational) -> Option<u32> {
        if self.is_zero() {
            return None;
        }
        let lin = BinaryForm::vanishing_at(u0, v0);
        let mut f = self.clone();
        let mut k = 0;
        while f.degree > 0 && f.eval(u0, v0).is_zero() {
            f = f.div_exact(&lin).ok()?;
            k += 1;
        }
        Some(k)
    }

    /// Discriminant `b^2 - 4ac` of a quadric `a u^2 + b uv + c v^2`.
    pub fn discriminant(&self) -> Option<Rational> {
        if self.degree != 2 {
            return None;
        }
        let (a, b, c) = (&self.coeffs[0], &self.coeffs[1], &self.coeffs[2]);
        Some(b * b - Rational::from(4) * a * c)
    }

    /// True iff the two forms span a space of dimension at most one.
    pub fn proportional(&self, other: &BinaryForm) -> bool {
        self.degree == other.degree
            && (0..self.coeffs.len()).all(|i| {
                (i + 1..self.coeffs.len()).all(|j| {
                    &self.coeffs[i] * &other.coeffs[j] == &self.coeffs[j] * &other.coeffs[i]
                })
            })
    }

    /// Homogeneous gcd, primitive with positive leading coefficient in `v`.
    pub fn gcd(&self, other: &BinaryForm) -> BinaryForm {
        // Powers of u are invisible after setting u = 1; count them separately.
        let u_order = |f: &BinaryForm| {
            f.degree as usize - f.dehomogenize().degree().unwrap_or(0)
        };
        let k = u_order(self).min(u_order(other));
        let g = self.dehomogenize().gcd(&other.dehomogenize());
        let gdeg = g.degree().unwrap_or(0) as u32;
        let core = BinaryForm::homogenize(&g, gdeg).expect("degree fits");
        core.mul(&BinaryForm::linear(Rational::one(), Rational::zero()).pow(k as u32))
    }
}

impl fmt::Debug for BinaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| format!("({c})u^{}v^{i}", self.degree as usize - i))
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}
