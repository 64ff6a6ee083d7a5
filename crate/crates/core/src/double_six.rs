//! The double six of a concrete configuration: the six conics through five
//! of the points, the quintic model that contracts them, and the
//! associated configuration.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::form::TernaryForm;
use crate::matrix::Matrix;
use crate::perm::Perm;
use crate::plane::{
    apply3, conic_through, cross, dot, matching_projectivity, quintic_system, same_point, Config6, Vec3,
};
use crate::poly::BinaryForm;
use crate::rational::{make_primitive, Rational};

/// `f_i`: the conic through every point except `x_i`, canonically scaled.
pub fn exceptional_conics(c: &Config6) -> Result<[TernaryForm; 6]> {
    let mut out = Vec::with_capacity(6);
    for i in 1..=6 {
        let five: Vec<Vec3> = (1..=6).filter(|&j| j != i).map(|j| c.rep(j).clone()).collect();
        out.push(conic_through(&five)?);
    }
    Ok(out.try_into().expect("six conics"))
}

/// Symmetric matrix `S` of a conic, `q(v) = v^T S v`.
pub fn conic_matrix(q: &TernaryForm) -> Matrix {
    let half = Rational::new(1, 2);
    let mut s = Matrix::zeros(3, 3);
    s[(0, 0)] = q.coeff((2, 0, 0));
    s[(1, 1)] = q.coeff((0, 2, 0));
    s[(2, 2)] = q.coeff((0, 0, 2));
    s[(0, 1)] = q.coeff((1, 1, 0)) * &half;
    s[(1, 0)] = s[(0, 1)].clone();
    s[(0, 2)] = q.coeff((1, 0, 1)) * &half;
    s[(2, 0)] = s[(0, 2)].clone();
    s[(1, 2)] = q.coeff((0, 1, 1)) * &half;
    s[(2, 1)] = s[(1, 2)].clone();
    s
}

/// Rational parametrization of a smooth conic by projection from one of
/// its rational points.
///
/// With `R(s, t) = s U + t V` running over a line that misses `base`, the
/// second intersection of the line `base R` with the conic is
/// `q(R) base - 2 B(base, R) R`, quadratic in `(s, t)`.
#[derive(Clone, Debug)]
pub struct ConicParam {
    pub conic: TernaryForm,
    pub base: Vec3,
    u: Vec3,
    v: Vec3,
    /// The three coordinates as binary quadrics in `(s, t)`.
    pub coords: [BinaryForm; 3],
}

impl ConicParam {
    pub fn new(conic: &TernaryForm, base: &Vec3) -> Result<Self> {
        if !conic.eval(base).is_zero() {
            return Err(Error::Dimension("parametrization base is not on the conic".into()));
        }
        let s = conic_matrix(conic);
        if s.determinant()?.is_zero() {
            return Err(Error::Singular);
        }
        let bil = |a: &Vec3, b: &Vec3| dot(a, &apply3(&s, b));
        // U, V: the standard vectors off the base point's leading coordinate
        let lead = base.iter().position(|c| !c.is_zero()).ok_or(Error::ZeroPoint)?;
        let unit = |k: usize| -> Vec3 { std::array::from_fn(|r| if r == k { Rational::one() } else { Rational::zero() }) };
        let others: Vec<usize> = (0..3).filter(|&k| k != lead).collect();
        let (u, v) = (unit(others[0]), unit(others[1]));
        let two = Rational::from(2);
        let q_r = BinaryForm::new(2, vec![bil(&u, &u), &two * &bil(&u, &v), bil(&v, &v)])?;
        let b_r = BinaryForm::linear(bil(base, &u), bil(base, &v));
        let coords = std::array::from_fn(|k| {
            let r_k = BinaryForm::linear(u[k].clone(), v[k].clone());
            q_r.scale(&base[k])
                .add(&b_r.mul(&r_k).scale(&Rational::from(-2)))
                .expect("both quadrics")
        });
        Ok(ConicParam {
            conic: conic.clone(),
            base: base.clone(),
            u,
            v,
            coords,
        })
    }

    pub fn point(&self, s: &Rational, t: &Rational) -> Vec3 {
        std::array::from_fn(|k| self.coords[k].eval(s, t))
    }

    /// Parameter `(s : t)` of a point `x` on the conic.
    pub fn parameter_of(&self, x: &Vec3) -> (Rational, Rational) {
        // For the base point the relevant line is the tangent there.
        let line = if same_point(x, &self.base) {
            apply3(&conic_matrix(&self.conic), &self.base)
        } else {
            cross(&self.base, x)
        };
        (dot(&line, &self.v), -dot(&line, &self.u))
    }

    /// Restriction of `f` to the conic, as a binary form in `(s, t)`.
    pub fn restrict(&self, f: &TernaryForm) -> BinaryForm {
        f.restrict(&self.coords)
    }
}

/// Parametrization of `f_i` from the lowest-labelled configuration point on it.
pub fn parametrize_exceptional(c: &Config6, conics: &[TernaryForm; 6], i: usize) -> Result<ConicParam> {
    let base = if i == 1 { 2 } else { 1 };
    ConicParam::new(&conics[i - 1], c.rep(base))
}

/// The double six of a configuration made concrete.
#[derive(Clone, Debug, Serialize)]
pub struct DoubleSixRealization {
    pub config: Config6,
    pub conics: [TernaryForm; 6],
    pub quintic_basis: Vec<TernaryForm>,
    /// `associated` point `i` is the image of the conic `f_i`.
    pub associated: Config6,
}

/// The quintic map `p -> (q0(p) : q1(p) : q2(p))`.
pub fn quintic_image(basis: &[TernaryForm], p: &Vec3) -> Vec3 {
    std::array::from_fn(|k| basis[k].eval(p))
}

/// Contracts the six conics with the quintics singular at the six points.
/// Each conic is sampled at rational points `(1 : k)` of its
/// parametrization; two samples with a nonzero image must agree.
pub fn second_model(c: &Config6) -> Result<DoubleSixRealization> {
    let system = quintic_system(c);
    if system.dimension() != 3 {
        return Err(Error::QuinticBasisSize(system.dimension()));
    }
    let conics = exceptional_conics(c)?;
    let mut images: Vec<Vec3> = Vec::with_capacity(6);
    for i in 1..=6 {
        let param = parametrize_exceptional(c, &conics, i)?;
        let mut found: Vec<Vec3> = Vec::new();
        for k in 1..=40i64 {
            let p = param.point(&Rational::one(), &Rational::from(k));
            let img = quintic_image(&system.basis, &p);
            if img.iter().all(Rational::is_zero) {
                continue;
            }
            found.push(img);
            if found.len() == 2 {
                break;
            }
        }
        if found.len() < 2 {
            return Err(Error::QuinticBaseCurve(i));
        }
        if !same_point(&found[0], &found[1]) {
            return Err(Error::ConicImagesDisagree(i));
        }
        let mut v = found.swap_remove(0).to_vec();
        make_primitive(&mut v);
        images.push([v[0].clone(), v[1].clone(), v[2].clone()]);
    }
    let associated = Config6::new(images.try_into().expect("six images"))?;
    Ok(DoubleSixRealization {
        config: c.clone(),
        conics,
        quintic_basis: system.basis,
        associated,
    })
}

/// A projectivity `g` and permutation `s` with `g x_i ~ y_{s(i)}`. With
/// `respect_labels` only the identity permutation is tried; otherwise the
/// first match in lexicographic permutation order is returned.
pub fn projective_equivalence(x: &Config6, y: &Config6, respect_labels: bool) -> Option<(Matrix, Perm)> {
    if respect_labels {
        let id = Perm::identity();
        return matching_projectivity(x, y, &id).map(|g| (g, id));
    }
    Perm::all()
        .into_iter()
        .find_map(|s| matching_projectivity(x, y, &s).map(|g| (g, s)))
}
