//! Homogeneous polynomials in three variables.

use std::collections::BTreeMap;
use std::fmt;

use serde::de::{self, Deserializer};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::poly::BinaryForm;
use crate::rational::{make_primitive, Rational};

/// Exponent triple `(i, j, k)` of `x^i y^j z^k`.
pub type Exponent = (u32, u32, u32);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Var {
    X,
    Y,
    Z,
}

impl Var {
    pub const ALL: [Var; 3] = [Var::X, Var::Y, Var::Z];

    pub fn index(self) -> usize {
        match self {
            Var::X => 0,
            Var::Y => 1,
            Var::Z => 2,
        }
    }
}

fn exp_get(e: Exponent, v: Var) -> u32 {
    match v {
        Var::X => e.0,
        Var::Y => e.1,
        Var::Z => e.2,
    }
}

/// All exponent triples of total degree `d`, in the canonical order:
/// descending lexicographic, so `x^d` comes first and `z^d` last.
pub fn monomials(d: u32) -> Vec<Exponent> {
    let mut out = Vec::with_capacity(((d + 1) * (d + 2) / 2) as usize);
    for i in (0..=d).rev() {
        for j in (0..=d - i).rev() {
            out.push((i, j, d - i - j));
        }
    }
    out
}

/// A homogeneous ternary form. Only nonzero coefficients are stored.
#[derive(Clone, PartialEq, Eq)]
pub struct TernaryForm {
    degree: u32,
    terms: BTreeMap<Exponent, Rational>,
}

impl TernaryForm {
    pub fn zero(degree: u32) -> Self {
        TernaryForm {
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: Rational) -> Self {
        let mut f = TernaryForm::zero(0);
        f.add_term((0, 0, 0), c);
        f
    }

    pub fn var(v: Var) -> Self {
        let e = match v {
            Var::X => (1, 0, 0),
            Var::Y => (0, 1, 0),
            Var::Z => (0, 0, 1),
        };
        TernaryForm::monomial(e, Rational::one())
    }

    pub fn monomial(e: Exponent, c: Rational) -> Self {
        let mut f = TernaryForm::zero(e.0 + e.1 + e.2);
        f.add_term(e, c);
        f
    }

    /// The linear form `a x + b y + c z`.
    pub fn linear(coeffs: &[Rational; 3]) -> Self {
        let mut f = TernaryForm::zero(1);
        f.add_term((1, 0, 0), coeffs[0].clone());
        f.add_term((0, 1, 0), coeffs[1].clone());
        f.add_term((0, 0, 1), coeffs[2].clone());
        f
    }

    pub fn from_terms(degree: u32, terms: impl IntoIterator<Item = (Exponent, Rational)>) -> Result<Self> {
        let mut f = TernaryForm::zero(degree);
        for (e, c) in terms {
            if e.0 + e.1 + e.2 != degree {
                return Err(Error::WrongDegree {
                    expected: degree,
                    found: e.0 + e.1 + e.2,
                });
            }
            f.add_term(e, c);
        }
        Ok(f)
    }

    /// Form with coefficient vector `coeffs` against `monomials(degree)`.
    pub fn from_coefficients(degree: u32, coeffs: &[Rational]) -> Self {
        let mons = monomials(degree);
        assert_eq!(mons.len(), coeffs.len());
        let mut f = TernaryForm::zero(degree);
        for (e, c) in mons.into_iter().zip(coeffs) {
            f.add_term(e, c.clone());
        }
        f
    }

    /// Coefficient vector against `monomials(self.degree())`.
    pub fn coefficients(&self) -> Vec<Rational> {
        monomials(self.degree).into_iter().map(|e| self.coeff(e)).collect()
    }

    fn add_term(&mut self, e: Exponent, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e).or_insert_with(Rational::zero);
        *entry += &c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: Exponent) -> Rational {
        self.terms.get(&e).cloned().unwrap_or_else(Rational::zero)
    }

    /// Nonzero terms in canonical (descending lexicographic) order.
    pub fn terms(&self) -> impl Iterator<Item = (Exponent, &Rational)> {
        self.terms.iter().rev().map(|(e, c)| (*e, c))
    }

    pub fn eval(&self, p: &[Rational; 3]) -> Rational {
        let pow = |b: &Rational, n: u32| b.pow(n);
        self.terms
            .iter()
            .map(|(&(i, j, k), c)| c * &pow(&p[0], i) * pow(&p[1], j) * pow(&p[2], k))
            .sum()
    }

    pub fn partial(&self, v: Var) -> TernaryForm {
        let mut out = TernaryForm::zero(self.degree.saturating_sub(1));
        for (&e, c) in &self.terms {
            let n = exp_get(e, v);
            if n == 0 {
                continue;
            }
            let lowered = match v {
                Var::X => (e.0 - 1, e.1, e.2),
                Var::Y => (e.0, e.1 - 1, e.2),
                Var::Z => (e.0, e.1, e.2 - 1),
            };
            out.add_term(lowered, c * &Rational::from(n as i64));
        }
        out
    }

    pub fn gradient(&self) -> [TernaryForm; 3] {
        [self.partial(Var::X), self.partial(Var::Y), self.partial(Var::Z)]
    }

    pub fn mul(&self, other: &TernaryForm) -> TernaryForm {
        let mut out = TernaryForm::zero(self.degree + other.degree);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_term((a.0 + b.0, a.1 + b.1, a.2 + b.2), ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> TernaryForm {
        let mut acc = TernaryForm::constant(Rational::one());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn add(&self, other: &TernaryForm) -> Result<TernaryForm> {
        if self.degree != other.degree {
            return Err(Error::WrongDegree {
                expected: self.degree,
                found: other.degree,
            });
        }
        let mut out = self.clone();
        for (&e, c) in &other.terms {
            out.add_term(e, c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &TernaryForm) -> Result<TernaryForm> {
        self.add(&other.scale(&Rational::from(-1)))
    }

    pub fn scale(&self, s: &Rational) -> TernaryForm {
        if s.is_zero() {
            return TernaryForm::zero(self.degree);
        }
        TernaryForm {
            degree: self.degree,
            terms: self.terms.iter().map(|(e, c)| (*e, c * s)).collect(),
        }
    }

    /// Linear combination `sum c_i f_i` of forms of equal degree.
    pub fn combination(coeffs: &[Rational], forms: &[TernaryForm]) -> Result<TernaryForm> {
        let degree = forms.first().map_or(0, |f| f.degree);
        let mut out = TernaryForm::zero(degree);
        for (c, f) in coeffs.iter().zip(forms) {
            out = out.add(&f.scale(c))?;
        }
        Ok(out)
    }

    /// Pullback `f(A v)` under the linear substitution `v -> A v`.
    pub fn transform(&self, a: &Matrix) -> TernaryForm {
        assert!(a.rows() == 3 && a.cols() == 3, "substitution must be 3x3");
        let images: Vec<TernaryForm> = (0..3)
            .map(|r| TernaryForm::linear(&[a[(r, 0)].clone(), a[(r, 1)].clone(), a[(r, 2)].clone()]))
            .collect();
        self.substitute(&images)
    }

    /// Substitutes forms of a common degree for `x`, `y`, `z`.
    pub fn substitute(&self, images: &[TernaryForm]) -> TernaryForm {
        let d = images[0].degree;
        let powers: Vec<Vec<TernaryForm>> = images
            .iter()
            .map(|g| {
                let mut p = vec![TernaryForm::constant(Rational::one())];
                for k in 0..self.degree as usize {
                    let next = p[k].mul(g);
                    p.push(next);
                }
                p
            })
            .collect();
        let mut out = TernaryForm::zero(self.degree * d);
        for (&(i, j, k), c) in &self.terms {
            let m = powers[0][i as usize]
                .mul(&powers[1][j as usize])
                .mul(&powers[2][k as usize]);
            out = out.add(&m.scale(c)).expect("degrees agree");
        }
        out
    }

    /// Restriction along a parametrized curve `(u:v) -> (p0 : p1 : p2)`.
    pub fn restrict(&self, param: &[BinaryForm; 3]) -> BinaryForm {
        restrict_all(std::slice::from_ref(self), param).remove(0)
    }

    /// Scaled so the first nonzero coefficient in canonical order is 1.
    pub fn canonical(&self) -> TernaryForm {
        match self.terms().next() {
            None => self.clone(),
            Some((_, lead)) => self.scale(&lead.recip()),
        }
    }

    /// Scaled to coprime integer coefficients, first one positive.
    pub fn primitive(&self) -> TernaryForm {
        let mut c = self.coefficients();
        make_primitive(&mut c);
        TernaryForm::from_coefficients(self.degree, &c)
    }

    /// True iff the two forms agree up to a nonzero scalar (or both vanish).
    pub fn proportional(&self, other: &TernaryForm) -> bool {
        self.degree == other.degree && self.canonical() == other.canonical()
    }

    /// Homogeneous pieces of `f(x, y, 1)`, indexed by degree in `(x, y)`.
    /// Piece `m` is a binary form in `(x, y)`.
    pub fn affine_pieces(&self) -> Vec<BinaryForm> {
        let mut pieces: Vec<BinaryForm> = (0..=self.degree).map(BinaryForm::zero).collect();
        for (&(i, j, _), c) in &self.terms {
            let m = (i + j) as usize;
            let mut coeffs = pieces[m].coeffs().to_vec();
            coeffs[j as usize] += c;
            pieces[m] = BinaryForm::new(m as u32, coeffs).expect("length matches");
        }
        pieces
    }

    /// Record form `[[i, j, k, "p/q"], ...]` in canonical order.
    pub fn to_records(&self) -> Vec<FormRecord> {
        self.terms().map(|(e, c)| FormRecord(e.0, e.1, e.2, c.clone())).collect()
    }

    /// Inverse of [`TernaryForm::to_records`]. The degree is taken from the
    /// records, or from `degree_hint` when the list is empty.
    pub fn from_records(records: &[FormRecord], degree_hint: Option<u32>) -> Result<Self> {
        let degree = match (records.first(), degree_hint) {
            (Some(r), _) => r.0 + r.1 + r.2,
            (None, Some(d)) => d,
            (None, None) => 0,
        };
        TernaryForm::from_terms(degree, records.iter().map(|r| ((r.0, r.1, r.2), r.3.clone())))
    }
}

/// Restrictions of several forms of one degree along the same parametrization.
/// Monomial images are computed once and shared.
pub fn restrict_all(forms: &[TernaryForm], param: &[BinaryForm; 3]) -> Vec<BinaryForm> {
    let Some(degree) = forms.first().map(TernaryForm::degree) else {
        return Vec::new();
    };
    assert!(forms.iter().all(|f| f.degree == degree), "forms of mixed degree");
    let powers: Vec<Vec<BinaryForm>> = param
        .iter()
        .map(|g| {
            let mut p = vec![g.pow(0)];
            for k in 0..degree as usize {
                let next = p[k].mul(g);
                p.push(next);
            }
            p
        })
        .collect();
    let mut images: BTreeMap<(u32, u32, u32), BinaryForm> = BTreeMap::new();
    let out_degree = degree * param[0].degree();
    forms
        .iter()
        .map(|f| {
            let mut coeffs = vec![Rational::zero(); out_degree as usize + 1];
            for (&(i, j, k), c) in &f.terms {
                let m = images.entry((i, j, k)).or_insert_with(|| {
                    powers[0][i as usize]
                        .mul(&powers[1][j as usize])
                        .mul(&powers[2][k as usize])
                });
                for (slot, a) in coeffs.iter_mut().zip(m.coeffs()) {
                    if !a.is_zero() {
                        *slot += &(a * c);
                    }
                }
            }
            BinaryForm::new(out_degree, coeffs).expect("length matches degree")
        })
        .collect()
}

/// One `[i, j, k, "p/q"]` coefficient record.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormRecord(pub u32, pub u32, pub u32, pub Rational);

impl Serialize for TernaryForm {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for r in self.to_records() {
            seq.serialize_element(&r)?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for TernaryForm {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let records = Vec::<FormRecord>::deserialize(deserializer)?;
        TernaryForm::from_records(&records, None).map_err(de::Error::custom)
    }
}

impl fmt::Debug for TernaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for TernaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for ((i, j, k), c) in self.terms() {
            let mut mono = String::new();
            for (name, e) in [("x", i), ("y", j), ("z", k)] {
                match e {
                    0 => {}
                    1 => mono.push_str(name),
                    _ => mono.push_str(&format!("{name}^{e}")),
                }
            }
            let (sign, mag) = if c.is_negative() { ("-", c.abs()) } else { ("+", c.clone()) };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            if mono.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{mag}*{mono}")?;
            }
        }
        Ok(())
    }
}
