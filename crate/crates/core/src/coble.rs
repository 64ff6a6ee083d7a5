//! Bracket invariants of six points: the Coble generators `x0..x5`, their
//! quartic relation, the action of S6 and the sign of `x5` under
//! association.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::double_six::second_model;
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::perm::Perm;
use crate::plane::{det3, Config6, Vec3};
use crate::random::{random_config, rng_for};
use crate::rational::Rational;

/// `D_I`: determinant of the representatives indexed by `i < j < k`.
pub fn bracket(c: &Config6, idx: [usize; 3]) -> Result<Rational> {
    let [i, j, k] = idx;
    if !(1 <= i && i < j && j < k && k <= 6) {
        return Err(Error::BadBracketIndex(idx.to_vec()));
    }
    Ok(det3(c.rep(i), c.rep(j), c.rep(k)))
}

fn d(c: &Config6, i: usize, j: usize, k: usize) -> Rational {
    bracket(c, [i, j, k]).expect("valid literal index")
}

/// The generators evaluated on the stored representatives.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CobleVector {
    pub x: [Rational; 6],
    pub representatives: [Vec3; 6],
}

impl CobleVector {
    pub fn linear_part(&self) -> [Rational; 5] {
        std::array::from_fn(|j| self.x[j].clone())
    }

    /// `lambda` with `other = lambda . self` in weights `(1,1,1,1,1,2)`.
    pub fn weighted_scale_to(&self, other: &CobleVector) -> Option<Rational> {
        weighted_scale(&self.x, &other.x)
    }
}

/// `lambda` with `b_j = lambda a_j` for `j <= 4` and `b_5 = lambda^2 a_5`.
pub fn weighted_scale(a: &[Rational; 6], b: &[Rational; 6]) -> Option<Rational> {
    let j = (0..5).find(|&j| !a[j].is_zero())?;
    let lambda = &b[j] / &a[j];
    let linear = (0..5).all(|j| b[j] == &lambda * &a[j]);
    (linear && b[5] == &lambda * &lambda * &a[5] && !lambda.is_zero()).then_some(lambda)
}

pub fn coble_vector(c: &Config6) -> CobleVector {
    let x = [
        d(c, 1, 2, 3) * d(c, 4, 5, 6),
        d(c, 1, 2, 4) * d(c, 3, 5, 6),
        d(c, 1, 2, 5) * d(c, 3, 4, 6),
        d(c, 1, 3, 4) * d(c, 2, 5, 6),
        d(c, 1, 3, 5) * d(c, 2, 4, 6),
        d(c, 1, 2, 3) * d(c, 1, 4, 5) * d(c, 2, 4, 6) * d(c, 3, 5, 6)
            - d(c, 1, 2, 4) * d(c, 1, 3, 5) * d(c, 2, 3, 6) * d(c, 4, 5, 6),
    ];
    CobleVector {
        x,
        representatives: c.representatives().clone(),
    }
}

/// `y = (x0, x1, x4, -x0 - x2, -x0 - x3, x5)`.
pub fn y_coordinates(x: &[Rational; 6]) -> [Rational; 6] {
    [
        x[0].clone(),
        x[1].clone(),
        x[4].clone(),
        -&x[0] - &x[2],
        -&x[0] - &x[3],
        x[5].clone(),
    ]
}

/// The two readings of the `y0` term in the quartic relation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RelationVariant {
    Plus,
    Minus,
}

impl RelationVariant {
    pub const BOTH: [RelationVariant; 2] = [RelationVariant::Plus, RelationVariant::Minus];

    fn y0_sign(self) -> i64 {
        match self {
            RelationVariant::Plus => 1,
            RelationVariant::Minus => -1,
        }
    }
}

/// `y5^2 - (y0y1 + y0y2 + y1y2 - y3y4)^2 + 4 y0y1y2 (+-y0 + y1 + y2 + y3 + y4)`.
pub fn relation_residual(v: &CobleVector, variant: RelationVariant) -> Rational {
    let y = y_coordinates(&v.x);
    let sq = &y[0] * &y[1] + &y[0] * &y[2] + &y[1] * &y[2] - &y[3] * &y[4];
    let lin = Rational::from(variant.y0_sign()) * &y[0] + &y[1] + &y[2] + &y[3] + &y[4];
    &y[5] * &y[5] - &sq * &sq + Rational::from(4) * &y[0] * &y[1] * &y[2] * lin
}

/// `sigma` acting on `(x0..x4)` by `matrix` and on `x5` by `sign`, in the
/// sense `x(sigma . p) = matrix . x(p)` for the relabelling of
/// [`Config6::relabel`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ActionRecord {
    pub perm: Perm,
    pub matrix: Matrix,
    pub sign: i32,
}

const ACTION_SEED: u64 = 0xc0b1e;
const ACTION_SAMPLES: usize = 9;

/// Sample configurations shared by every action computation.
#[derive(Clone, Debug)]
pub struct ActionSampler {
    samples: Vec<(Config6, CobleVector)>,
    /// Indices of five samples with independent linear parts.
    basis: [usize; 5],
    basis_inverse: Matrix,
}

impl ActionSampler {
    pub fn new() -> Result<Self> {
        let samples: Vec<(Config6, CobleVector)> = (0..ACTION_SAMPLES)
            .map(|k| {
                let c = random_config(&mut rng_for(ACTION_SEED, k as u64));
                let v = coble_vector(&c);
                (c, v)
            })
            .collect();
        let mut chosen: Vec<usize> = Vec::new();
        for k in 0..samples.len() {
            let mut rows: Vec<Vec<Rational>> = chosen.iter().map(|&i| samples[i].1.linear_part().to_vec()).collect();
            rows.push(samples[k].1.linear_part().to_vec());
            if Matrix::from_rows(&rows).rank() == rows.len() {
                chosen.push(k);
            }
            if chosen.len() == 5 {
                break;
            }
        }
        let basis: [usize; 5] = chosen
            .try_into()
            .map_err(|_| Error::InconsistentAction("sample invariants span less than 5 dimensions".into()))?;
        // Columns are the sampled linear parts.
        let cols = Matrix::from_rows(&basis.map(|i| samples[i].1.linear_part().to_vec())).transpose();
        Ok(ActionSampler {
            basis_inverse: cols.inverse()?,
            samples,
            basis,
        })
    }

    /// Interpolates the action of `sigma` on five samples and verifies it on
    /// the remaining ones.
    pub fn record(&self, sigma: &Perm) -> Result<ActionRecord> {
        let moved: Vec<CobleVector> = self.samples.iter().map(|(c, _)| coble_vector(&c.relabel(sigma))).collect();
        let images = Matrix::from_rows(&self.basis.map(|i| moved[i].linear_part().to_vec())).transpose();
        let matrix = &images * &self.basis_inverse;
        let mut sign = 0;
        for ((_, before), after) in self.samples.iter().zip(&moved) {
            if matrix.mul_vec(&before.linear_part()) != after.linear_part() {
                return Err(Error::InconsistentAction(format!("{sigma}: linear part fails on a sample")));
            }
            if before.x[5].is_zero() {
                continue;
            }
            let s = &after.x[5] / &before.x[5];
            let this = if s.is_one() {
                1
            } else if (-&s).is_one() {
                -1
            } else {
                return Err(Error::InconsistentAction(format!("{sigma}: x5 ratio {s}")));
            };
            if sign != 0 && sign != this {
                return Err(Error::InconsistentAction(format!("{sigma}: x5 sign varies")));
            }
            sign = this;
        }
        if sign == 0 {
            return Err(Error::InconsistentAction(format!("{sigma}: x5 vanishes on every sample")));
        }
        Ok(ActionRecord {
            perm: *sigma,
            matrix,
            sign,
        })
    }
}

/// Action record of one permutation. Builds a fresh sampler; use
/// [`ActionSampler`] directly for many permutations.
pub fn s6_action(sigma: &Perm) -> Result<ActionRecord> {
    ActionSampler::new()?.record(sigma)
}

/// Reference action of one representative per nontrivial conjugacy class
/// on `(x0, ..., x4)`. Row `j` lists the coefficients of the new `x_j`.
pub const REFERENCE_ACTION_ROWS: [(&str, [[i64; 5]; 5]); 10] = [
    ("(12)", [[-1, 0, 0, 0, 0], [0, -1, 0, 0, 0], [0, 0, -1, 0, 0], [1, -1, 0, 1, 0], [-1, 0, -1, 0, 1]]),
    ("(12)(34)", [[0, -1, 0, 0, 0], [-1, 0, 0, 0, 0], [0, 0, 1, 0, 0], [-1, 1, 0, -1, 0], [-1, 0, 0, -1, 1]]),
    ("(12)(34)(56)", [[0, 1, 0, 0, 0], [1, 0, 0, 0, 0], [1, -1, 1, 0, 0], [1, -1, 0, 1, 0], [0, 0, 0, 0, 1]]),
    ("(123)", [[1, 0, 0, 0, 0], [1, -1, 0, 1, 0], [-1, 0, -1, 0, 1], [0, -1, 0, 0, 0], [0, 0, -1, 0, 0]]),
    ("(1234)", [[1, -1, 0, 1, 0], [1, 0, 0, 0, 0], [1, 0, 1, 0, -1], [0, 1, 0, 0, 0], [1, 0, 0, 1, -1]]),
    ("(1234)(56)", [[-1, 1, 0, -1, 0], [-1, 0, 0, 0, 0], [1, -1, 1, 1, -1], [0, -1, 0, 0, 0], [0, 0, 0, 0, -1]]),
    ("(12345)", [[-1, 1, 0, -1, 0], [1, 0, 1, 0, -1], [1, 0, 0, 0, 0], [1, 0, 0, 1, -1], [0, 1, 0, 0, 0]]),
    ("(123)(45)", [[-1, 0, 0, 0, 0], [-1, 0, -1, 0, 1], [1, -1, 0, 1, 0], [0, 0, -1, 0, 0], [0, -1, 0, 0, 0]]),
    ("(123456)", [[1, -1, 0, 1, 0], [-1, 0, -1, 0, 1], [-1, 1, -1, -1, 1], [-1, 0, 0, -1, 1], [0, 0, 0, 0, 1]]),
    ("(123)(456)", [[1, 0, 0, 0, 0], [1, 0, 1, 0, -1], [1, -1, 1, 1, -1], [0, 0, 1, 0, 0], [1, -1, 1, 0, 0]]),
];

pub fn reference_matrix(rows: &[[i64; 5]; 5]) -> Matrix {
    let rows: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
    Matrix::from_i64_rows(&rows)
}

/// One representative per conjugacy class, identity first.
pub const CLASS_REPRESENTATIVES: [&str; 11] = [
    "()",
    "(12)",
    "(12)(34)",
    "(12)(34)(56)",
    "(123)",
    "(123)(45)",
    "(123)(456)",
    "(1234)",
    "(1234)(56)",
    "(12345)",
    "(123456)",
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassCharacter {
    pub representative: Perm,
    pub size: usize,
    pub trace: Rational,
    /// Character of the standard representation: fixed points minus one.
    pub standard: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CharacterReport {
    pub classes: Vec<ClassCharacter>,
    /// `(1/720) sum |class| chi^2`.
    pub inner_product: Rational,
    pub differs_from_standard: bool,
}

pub fn character_report() -> Result<CharacterReport> {
    let sampler = ActionSampler::new()?;
    let all = Perm::all();
    let mut classes = Vec::with_capacity(11);
    for s in CLASS_REPRESENTATIVES {
        let rep: Perm = s.parse()?;
        let size = all.iter().filter(|p| p.cycle_type() == rep.cycle_type()).count();
        let m = sampler.record(&rep)?.matrix;
        let trace = (0..5).map(|i| m[(i, i)].clone()).sum();
        classes.push(ClassCharacter {
            representative: rep,
            size,
            trace,
            standard: rep.fixed_points() as i64 - 1,
        });
    }
    let inner_product = classes
        .iter()
        .map(|c| Rational::from(c.size as i64) * &c.trace * &c.trace)
        .sum::<Rational>()
        / Rational::from(720);
    let differs_from_standard = classes.iter().any(|c| c.trace != Rational::from(c.standard));
    Ok(CharacterReport {
        classes,
        inner_product,
        differs_from_standard,
    })
}

/// Sparse polynomial in `y0..y4`, just enough for the invariance check.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Poly5(BTreeMap<[u32; 5], Rational>);

impl Poly5 {
    pub fn var(i: usize) -> Self {
        let mut e = [0; 5];
        e[i] = 1;
        Poly5(BTreeMap::from([(e, Rational::one())]))
    }

    pub fn constant(c: Rational) -> Self {
        let mut m = BTreeMap::new();
        if !c.is_zero() {
            m.insert([0; 5], c);
        }
        Poly5(m)
    }

    pub fn terms(&self) -> &BTreeMap<[u32; 5], Rational> {
        &self.0
    }

    pub fn add(&self, o: &Poly5) -> Poly5 {
        let mut m = self.0.clone();
        for (e, c) in &o.0 {
            let v = m.remove(e).unwrap_or_else(Rational::zero) + c;
            if !v.is_zero() {
                m.insert(*e, v);
            }
        }
        Poly5(m)
    }

    pub fn scale(&self, s: &Rational) -> Poly5 {
        if s.is_zero() {
            return Poly5::default();
        }
        Poly5(self.0.iter().map(|(e, c)| (*e, c * s)).collect())
    }

    pub fn mul(&self, o: &Poly5) -> Poly5 {
        let mut out = Poly5::default();
        for (ea, ca) in &self.0 {
            for (eb, cb) in &o.0 {
                let e = std::array::from_fn(|k| ea[k] + eb[k]);
                out = out.add(&Poly5(BTreeMap::from([(e, ca * cb)])));
            }
        }
        out
    }

    /// `p(A y)`.
    pub fn substitute(&self, a: &Matrix) -> Poly5 {
        let images: Vec<Poly5> = (0..5)
            .map(|i| (0..5).fold(Poly5::default(), |acc, j| acc.add(&Poly5::var(j).scale(&a[(i, j)]))))
            .collect();
        let mut out = Poly5::default();
        for (e, c) in &self.0 {
            let mut term = Poly5::constant(c.clone());
            for (i, &k) in e.iter().enumerate() {
                for _ in 0..k {
                    term = term.mul(&images[i]);
                }
            }
            out = out.add(&term);
        }
        out
    }
}

/// Right-hand side of `y5^2 = Q(y)` for the given variant.
pub fn relation_quartic(variant: RelationVariant) -> Poly5 {
    let y: Vec<Poly5> = (0..5).map(Poly5::var).collect();
    let sq = y[0]
        .mul(&y[1])
        .add(&y[0].mul(&y[2]))
        .add(&y[1].mul(&y[2]))
        .add(&y[3].mul(&y[4]).scale(&Rational::from(-1)));
    let lin = y[0]
        .scale(&Rational::from(variant.y0_sign()))
        .add(&y[1])
        .add(&y[2])
        .add(&y[3])
        .add(&y[4]);
    sq.mul(&sq)
        .add(&y[0].mul(&y[1]).mul(&y[2]).mul(&lin).scale(&Rational::from(-4)))
}

/// `T` with `y = T x` on the linear generators.
pub fn y_basis_matrix() -> Matrix {
    Matrix::from_i64_rows(&[
        &[1, 0, 0, 0, 0],
        &[0, 1, 0, 0, 0],
        &[0, 0, 0, 0, 1],
        &[-1, 0, -1, 0, 0],
        &[-1, 0, 0, -1, 0],
    ])
}

/// Whether the quartic is unchanged by the substitution induced by `record`.
pub fn quartic_invariant_under(q: &Poly5, record: &ActionRecord) -> Result<bool> {
    let t = y_basis_matrix();
    let on_y = &(&t * &record.matrix) * &t.inverse()?;
    Ok(&q.substitute(&on_y) == q)
}

/// Comparison of the Coble vectors of a configuration and its associate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SignCheck {
    pub x: [Rational; 6],
    pub associated_x: [Rational; 6],
    /// `x'_j = lambda x_j` for `j <= 4`.
    pub lambda: Rational,
    /// `x'_5 = -lambda^2 x_5`.
    pub accepted: bool,
}

pub fn schlaefli_sign_check(c: &Config6) -> Result<SignCheck> {
    let x = coble_vector(c).x;
    let assoc = second_model(c)?.associated;
    let xa = coble_vector(&assoc).x;
    let j = (0..5).find(|&j| !x[j].is_zero()).ok_or(Error::DegenerateCobleVector)?;
    let lambda = &xa[j] / &x[j];
    let linear = (0..5).all(|j| xa[j] == &lambda * &x[j]);
    let accepted = linear && !lambda.is_zero() && xa[5] == -(&lambda * &lambda * &x[5]);
    Ok(SignCheck {
        x,
        associated_x: xa,
        lambda,
        accepted,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::plane::ref6;

    #[test]
    fn bracket_of_standard_frame() {
        let c = Config6::from_i64([[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1], [1, 2, 3], [2, -1, 5]]).unwrap();
        assert_eq!(bracket(&c, [1, 2, 3]).unwrap(), Rational::one());
        assert!(bracket(&c, [2, 1, 3]).is_err());
        assert!(bracket(&c, [1, 1, 3]).is_err());
        assert!(bracket(&c, [0, 1, 3]).is_err());
    }

    #[test]
    fn collinear_triple_kills_x0() {
        let c = Config6::from_i64([[1, 0, 0], [0, 1, 0], [1, 1, 0], [1, 1, 1], [1, 2, 3], [2, -1, 5]]).unwrap();
        assert!(coble_vector(&c).x[0].is_zero());
    }

    #[test]
    fn zero_vector_satisfies_both_variants() {
        let v = CobleVector {
            x: std::array::from_fn(|_| Rational::zero()),
            representatives: ref6().representatives().clone(),
        };
        for variant in RelationVariant::BOTH {
            assert!(relation_residual(&v, variant).is_zero());
        }
    }

    #[test]
    fn identity_acts_trivially() {
        let r = s6_action(&Perm::identity()).unwrap();
        assert_eq!(r.matrix, Matrix::identity(5));
        assert_eq!(r.sign, 1);
    }

    #[test]
    fn transposition_matches_reference_row() {
        let r = s6_action(&"(12)".parse().unwrap()).unwrap();
        assert_eq!(r.matrix, reference_matrix(&REFERENCE_ACTION_ROWS[0].1));
        assert_eq!(r.sign, -1);
    }

    #[test]
    fn quartic_substitution_identity() {
        let q = relation_quartic(RelationVariant::Plus);
        assert_eq!(q.substitute(&Matrix::identity(5)), q);
    }
}
