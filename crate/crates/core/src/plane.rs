//! Six-point configurations in the projective plane and the linear systems
//! of curves they support.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::form::{monomials, Exponent, TernaryForm};
use crate::matrix::Matrix;
use crate::perm::Perm;
use crate::poly::BinaryForm;
use crate::rational::Rational;

/// A vector with three rational coordinates.
pub type Vec3 = [Rational; 3];

pub fn cross(a: &Vec3, b: &Vec3) -> Vec3 {
    [
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ]
}

pub fn dot(a: &Vec3, b: &Vec3) -> Rational {
    &a[0] * &b[0] + &a[1] * &b[1] + &a[2] * &b[2]
}

pub fn det3(a: &Vec3, b: &Vec3, c: &Vec3) -> Rational {
    dot(a, &cross(b, c))
}

pub fn is_zero3(v: &Vec3) -> bool {
    v.iter().all(Rational::is_zero)
}

/// Two nonzero vectors span the same line.
pub fn same_point(a: &Vec3, b: &Vec3) -> bool {
    is_zero3(&cross(a, b))
}

pub fn apply3(m: &Matrix, v: &Vec3) -> Vec3 {
    let w = m.mul_vec(v);
    [w[0].clone(), w[1].clone(), w[2].clone()]
}

/// A point of the projective plane, normalized so that its first nonzero
/// coordinate is 1.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PointP2 {
    coords: Vec3,
}

impl PointP2 {
    pub fn new(v: Vec3) -> Result<Self> {
        let lead = v.iter().find(|c| !c.is_zero()).ok_or(Error::ZeroPoint)?.recip();
        Ok(PointP2 {
            coords: [&v[0] * &lead, &v[1] * &lead, &v[2] * &lead],
        })
    }

    pub fn from_i64(a: i64, b: i64, c: i64) -> Result<Self> {
        PointP2::new([a.into(), b.into(), c.into()])
    }

    pub fn coords(&self) -> &Vec3 {
        &self.coords
    }

    pub fn transform(&self, m: &Matrix) -> Result<PointP2> {
        PointP2::new(apply3(m, &self.coords))
    }
}

impl fmt::Debug for PointP2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}:{}:{})", self.coords[0], self.coords[1], self.coords[2])
    }
}

impl Serialize for PointP2 {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.coords.serialize(s)
    }
}

/// Six labeled points, carried by a fixed matrix of representative vectors.
///
/// Projective statements use the canonical points; bracket identities use
/// the stored representatives verbatim.
#[derive(Clone, PartialEq, Eq, Serialize)]
pub struct Config6 {
    points: [Vec3; 6],
}

#[derive(Deserialize)]
struct Config6Json {
    points: Vec<Vec<Rational>>,
}

impl<'de> Deserialize<'de> for Config6 {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = Config6Json::deserialize(d)?;
        if raw.points.len() != 6 || raw.points.iter().any(|p| p.len() != 3) {
            return Err(D::Error::custom("expected six points with three coordinates each"));
        }
        let reps: Vec<Vec3> = raw
            .points
            .into_iter()
            .map(|p| {
                let mut it = p.into_iter();
                [it.next().unwrap(), it.next().unwrap(), it.next().unwrap()]
            })
            .collect();
        Config6::new(reps.try_into().expect("six points")).map_err(D::Error::custom)
    }
}

impl Config6 {
    /// Rejects zero vectors and repeated points.
    pub fn new(points: [Vec3; 6]) -> Result<Self> {
        for (i, p) in points.iter().enumerate() {
            if is_zero3(p) {
                return Err(Error::ZeroPoint);
            }
            for (j, q) in points.iter().enumerate().skip(i + 1) {
                if same_point(p, q) {
                    return Err(Error::RepeatedPoint(format!("{:?}", PointP2::new(p.clone())?), i + 1, j + 1));
                }
            }
        }
        Ok(Config6 { points })
    }

    pub fn from_i64(points: [[i64; 3]; 6]) -> Result<Self> {
        Config6::new(points.map(|p| p.map(Rational::from)))
    }

    /// Representative vectors, row `i` for label `i + 1`.
    pub fn representatives(&self) -> &[Vec3; 6] {
        &self.points
    }

    pub fn rep(&self, label: usize) -> &Vec3 {
        &self.points[label - 1]
    }

    pub fn point(&self, label: usize) -> PointP2 {
        PointP2::new(self.points[label - 1].clone()).expect("nonzero by construction")
    }

    pub fn points(&self) -> Vec<PointP2> {
        (1..=6).map(|i| self.point(i)).collect()
    }

    /// `(s . c)_i = c_{s(i)}`, keeping each representative vector.
    pub fn relabel(&self, s: &Perm) -> Config6 {
        Config6 {
            points: std::array::from_fn(|i| self.points[s.apply(i + 1) - 1].clone()),
        }
    }

    /// Applies `g` to every representative. `g` must be invertible.
    pub fn transform(&self, g: &Matrix) -> Config6 {
        Config6 {
            points: std::array::from_fn(|i| apply3(g, &self.points[i])),
        }
    }

    /// Rescales representative `i` by `factors[i]` (all nonzero).
    pub fn rescale(&self, factors: &[Rational; 6]) -> Config6 {
        Config6 {
            points: std::array::from_fn(|i| self.points[i].clone().map(|c| c * &factors[i])),
        }
    }

    /// Replaces every representative by its primitive integer multiple.
    pub fn primitive(&self) -> Config6 {
        Config6 {
            points: std::array::from_fn(|i| {
                let mut v = self.points[i].to_vec();
                crate::rational::make_primitive(&mut v);
                [v[0].clone(), v[1].clone(), v[2].clone()]
            }),
        }
    }
}

impl fmt::Debug for Config6 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pts: Vec<String> = self.points().iter().map(|p| format!("{p:?}")).collect();
        write!(f, "Config6[{}]", pts.join(", "))
    }
}

/// The reference configuration used throughout the tests and the CLI default.
pub fn ref6() -> Config6 {
    Config6::from_i64([[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1], [1, 2, 3], [2, 5, 1]])
        .expect("distinct points")
}

/// Outcome of the general-position test.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Position {
    General,
    /// Labels of the first collinear triple found.
    Collinear { triple: [usize; 3] },
    /// A conic through all six points.
    OnConic { conic: TernaryForm },
}

impl Position {
    pub fn is_general(&self) -> bool {
        matches!(self, Position::General)
    }
}

/// Row of degree-`d` monomials evaluated at `p`.
pub fn veronese_row(d: u32, p: &Vec3) -> Vec<Rational> {
    monomials(d)
        .into_iter()
        .map(|(i, j, k)| p[0].pow(i) * p[1].pow(j) * p[2].pow(k))
        .collect()
}

/// No three collinear and no conic through all six.
pub fn is_general_position(c: &Config6) -> Position {
    for i in 1..=6 {
        for j in i + 1..=6 {
            for k in j + 1..=6 {
                if det3(c.rep(i), c.rep(j), c.rep(k)).is_zero() {
                    return Position::Collinear { triple: [i, j, k] };
                }
            }
        }
    }
    let rows: Vec<Vec<Rational>> = c.representatives().iter().map(|p| veronese_row(2, p)).collect();
    let ker = Matrix::from_rows(&rows).kernel_basis();
    match ker.first() {
        None => Position::General,
        Some(v) => Position::OnConic {
            conic: TernaryForm::from_coefficients(2, v).canonical(),
        },
    }
}

/// The unique conic through five points imposing independent conditions.
pub fn conic_through(points: &[Vec3]) -> Result<TernaryForm> {
    if points.len() != 5 {
        return Err(Error::Dimension(format!("{} points given, five needed", points.len())));
    }
    let rows: Vec<Vec<Rational>> = points.iter().map(|p| veronese_row(2, p)).collect();
    let m = Matrix::from_rows(&rows);
    let ker = m.kernel_basis();
    if ker.len() != 1 {
        return Err(Error::DegenerateFiveTuple(m.rank()));
    }
    Ok(TernaryForm::from_coefficients(2, &ker[0]).canonical())
}

/// Value at `p` of the partial derivative `d^a/dx^a d^b/dy^b d^c/dz^c`
/// applied to the monomial `e`.
fn monomial_derivative_at(e: Exponent, order: Exponent, p: &Vec3) -> Rational {
    let falling = |n: u32, k: u32| -> i64 { (0..k).map(|t| (n - t) as i64).product() };
    if order.0 > e.0 || order.1 > e.1 || order.2 > e.2 {
        return Rational::zero();
    }
    let coeff = falling(e.0, order.0) * falling(e.1, order.1) * falling(e.2, order.2);
    Rational::from(coeff)
        * p[0].pow(e.0 - order.0)
        * p[1].pow(e.1 - order.1)
        * p[2].pow(e.2 - order.2)
}

/// Linear conditions, one row per partial derivative of order `m - 1`, on
/// the coefficients of degree-`d` forms (against `monomials(d)`) that make
/// the form vanish to order `m` at `p`. By Euler's relation the lower-order
/// partials then vanish as well, so these `m(m+1)/2` rows suffice.
pub fn multiplicity_conditions(d: u32, p: &Vec3, m: u32) -> Vec<Vec<Rational>> {
    if m == 0 {
        return Vec::new();
    }
    if m > d {
        // only the zero form vanishes to order > d
        return (0..monomials(d).len())
            .map(|k| {
                let mut row = vec![Rational::zero(); monomials(d).len()];
                row[k] = Rational::one();
                row
            })
            .collect();
    }
    let mons = monomials(d);
    monomials(m - 1)
        .into_iter()
        .map(|order| mons.iter().map(|&e| monomial_derivative_at(e, order, p)).collect())
        .collect()
}

/// A linear system of plane curves with assigned base points.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CurveSystem {
    pub degree: u32,
    pub conditions: Vec<(PointP2, u32)>,
    pub basis: Vec<TernaryForm>,
}

impl CurveSystem {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    /// Coefficient vectors of the basis forms against `monomials(degree)`.
    pub fn coefficient_rows(&self) -> Vec<Vec<Rational>> {
        self.basis.iter().map(TernaryForm::coefficients).collect()
    }
}

/// Degree-`d` forms vanishing to the assigned multiplicity at each point.
/// Basis forms are primitive integer forms.
pub fn linear_system(d: u32, conditions: &[(PointP2, u32)]) -> CurveSystem {
    let n = monomials(d).len();
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for (p, m) in conditions {
        rows.extend(multiplicity_conditions(d, p.coords(), *m));
    }
    let basis = if rows.is_empty() {
        (0..n)
            .map(|k| {
                let mut v = vec![Rational::zero(); n];
                v[k] = Rational::one();
                TernaryForm::from_coefficients(d, &v)
            })
            .collect()
    } else {
        Matrix::from_rows(&rows)
            .kernel_basis()
            .into_iter()
            .map(|v| TernaryForm::from_coefficients(d, &v).primitive())
            .collect()
    };
    CurveSystem {
        degree: d,
        conditions: conditions.to_vec(),
        basis,
    }
}

/// Every point of `c` with the same multiplicity.
pub fn uniform_conditions(c: &Config6, m: u32) -> Vec<(PointP2, u32)> {
    c.points().into_iter().map(|p| (p, m)).collect()
}

/// The sextics singular at all six points.
pub fn nodal_sextic_system(c: &Config6) -> CurveSystem {
    linear_system(6, &uniform_conditions(c, 2))
}

/// The quintics singular at all six points.
pub fn quintic_system(c: &Config6) -> CurveSystem {
    linear_system(5, &uniform_conditions(c, 2))
}

/// Coordinate change `A` with `A (0,0,1)^T = p`: the third column is `p`,
/// the others are the two standard vectors not at `p`'s leading coordinate.
pub fn chart_at(p: &PointP2) -> Matrix {
    let lead = p.coords().iter().position(|c| !c.is_zero()).expect("nonzero point");
    let others: Vec<usize> = (0..3).filter(|&k| k != lead).collect();
    let mut a = Matrix::zeros(3, 3);
    a[(others[0], 0)] = Rational::one();
    a[(others[1], 1)] = Rational::one();
    for r in 0..3 {
        a[(r, 2)] = p.coords()[r].clone();
    }
    a
}

/// Local expansion of `f` at `p`: homogeneous pieces of `f(A(x, y, 1))`
/// with `A = chart_at(p)`, indexed by degree.
pub fn local_pieces(f: &TernaryForm, p: &PointP2) -> Vec<BinaryForm> {
    f.transform(&chart_at(p)).affine_pieces()
}

/// Piece `m` of [`local_pieces`] alone, from the order-`m` partials of `f`
/// at `p` along the two chart directions. No substitution is performed.
pub fn local_piece(f: &TernaryForm, p: &PointP2, m: u32) -> BinaryForm {
    let lead = p.coords().iter().position(|c| !c.is_zero()).expect("nonzero point");
    let others: Vec<usize> = (0..3).filter(|&k| k != lead).collect();
    let factorial = |n: u32| -> Rational { Rational::from((1..=n as i64).product::<i64>()) };
    let coeffs = (0..=m)
        .map(|b| {
            let a = m - b;
            let mut order = [0u32; 3];
            order[others[0]] = a;
            order[others[1]] = b;
            let order = (order[0], order[1], order[2]);
            let sum: Rational = f
                .terms()
                .map(|(e, c)| c * &monomial_derivative_at(e, order, p.coords()))
                .sum();
            sum / (factorial(a) * factorial(b))
        })
        .collect();
    BinaryForm::new(m, coeffs).expect("m + 1 coefficients")
}

/// Lowest-order data of a curve at a point.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TangentCone {
    pub multiplicity: u32,
    /// Lowest-degree part in the chart coordinates; absent at multiplicity 0
    /// or for the zero form.
    pub cone: Option<BinaryForm>,
    /// For multiplicity 2: whether the cone has two distinct lines.
    pub ordinary_node: Option<bool>,
}

pub fn tangent_cone(f: &TernaryForm, p: &PointP2) -> TangentCone {
    if f.is_zero() {
        return TangentCone {
            multiplicity: u32::MAX,
            cone: None,
            ordinary_node: None,
        };
    }
    if !f.eval(p.coords()).is_zero() {
        return TangentCone {
            multiplicity: 0,
            cone: None,
            ordinary_node: None,
        };
    }
    let (m, cone) = (1..=f.degree())
        .map(|m| (m as usize, local_piece(f, p, m)))
        .find(|(_, piece)| !piece.is_zero())
        .expect("nonzero form has a nonzero piece");
    let ordinary_node = (m == 2).then(|| !cone.discriminant().expect("quadric").is_zero());
    TangentCone {
        multiplicity: m as u32,
        cone: Some(cone),
        ordinary_node,
    }
}

/// Projectivity sending the frame `src` to the frame `dst` (four points,
/// no three collinear, in each). Normalized so its first nonzero entry is 1.
pub fn frame_map(src: &[Vec3; 4], dst: &[Vec3; 4]) -> Result<Matrix> {
    fn scaled_basis(f: &[Vec3; 4]) -> Result<Matrix> {
        let m = Matrix::from_rows(&[f[0].to_vec(), f[1].to_vec(), f[2].to_vec()]).transpose();
        let lambda = m.solve(&f[3])?;
        if lambda.iter().any(Rational::is_zero) {
            return Err(Error::Singular);
        }
        let mut out = m.clone();
        for c in 0..3 {
            for r in 0..3 {
                out[(r, c)] = &m[(r, c)] * &lambda[c];
            }
        }
        Ok(out)
    }
    let g = &scaled_basis(dst)? * &scaled_basis(src)?.inverse()?;
    Ok(normalize_projectivity(&g))
}

/// Scales a matrix so its first nonzero entry (row-major) is 1.
pub fn normalize_projectivity(g: &Matrix) -> Matrix {
    match g.entries().iter().find(|e| !e.is_zero()) {
        None => g.clone(),
        Some(lead) => g.scale(&lead.recip()),
    }
}

/// A symmetry of a configuration: `g x_i = x_{perm(i)}` projectively.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Symmetry {
    pub perm: Perm,
    pub matrix: Matrix,
}

/// The projectivity `g` with `g x_i ~ y_{s(i)}` for all `i`, if one exists.
pub fn matching_projectivity(x: &Config6, y: &Config6, s: &Perm) -> Option<Matrix> {
    let src: [Vec3; 4] = std::array::from_fn(|i| x.rep(i + 1).clone());
    let dst: [Vec3; 4] = std::array::from_fn(|i| y.rep(s.apply(i + 1)).clone());
    let g = frame_map(&src, &dst).ok()?;
    (5..=6)
        .all(|i| same_point(&apply3(&g, x.rep(i)), y.rep(s.apply(i))))
        .then_some(g)
}

/// All pairs `(s, g)` with `g x_i ~ x_{s(i)}`, by exhaustive search over
/// the 720 permutations. Every four of the points must be a projective
/// frame, so only collinear triples are rejected; six points on a conic are
/// allowed (configurations with an involutive symmetry always are).
pub fn projective_stabilizer(c: &Config6) -> Result<Vec<Symmetry>> {
    if let Position::Collinear { triple } = is_general_position(c) {
        return Err(Error::NotGeneralPosition(format!("collinear triple {triple:?}")));
    }
    Ok(Perm::all()
        .into_iter()
        .filter_map(|s| matching_projectivity(c, c, &s).map(|g| Symmetry { perm: s, matrix: g }))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: i64) -> Rational {
        Rational::from(v)
    }

    #[test]
    fn local_piece_matches_substitution() {
        let f = nodal_sextic_system(&ref6()).basis[3].clone();
        for p in [PointP2::from_i64(2, 5, 1).unwrap(), PointP2::from_i64(0, 3, -2).unwrap()] {
            let pieces = local_pieces(&f, &p);
            for m in 0..=6 {
                assert_eq!(local_piece(&f, &p, m), pieces[m as usize], "piece {m}");
            }
        }
    }

    #[test]
    fn collinear_witness() {
        let c = Config6::from_i64([[1, 0, 0], [0, 1, 0], [1, 1, 0], [0, 0, 1], [1, 2, 3], [2, 5, 1]]).unwrap();
        assert_eq!(is_general_position(&c), Position::Collinear { triple: [1, 2, 3] });
    }

    #[test]
    fn six_points_on_a_conic() {
        let pts: [[i64; 3]; 6] = std::array::from_fn(|t| [1, t as i64, (t * t) as i64]);
        let c = Config6::from_i64(pts).unwrap();
        // xz - y^2, canonical with leading xz coefficient 1
        let expected = TernaryForm::from_terms(2, [((1, 0, 1), q(1)), ((0, 2, 0), q(-1))]).unwrap();
        assert_eq!(is_general_position(&c), Position::OnConic { conic: expected });
    }

    #[test]
    fn repeated_point_rejected() {
        let err = Config6::from_i64([[1, 0, 0], [2, 0, 0], [0, 0, 1], [1, 1, 1], [1, 2, 3], [2, 5, 1]]);
        assert!(matches!(err, Err(Error::RepeatedPoint(_, 1, 2))));
    }

    #[test]
    fn conic_example() {
        let pts = [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1], [1, 2, 4]].map(|p| p.map(Rational::from));
        let f = conic_through(&pts).unwrap();
        let expected = TernaryForm::from_terms(2, [((1, 1, 0), q(2)), ((1, 0, 1), q(-3)), ((0, 1, 1), q(1))]).unwrap();
        assert!(f.proportional(&expected));
        for p in &pts {
            assert!(f.eval(p).is_zero());
        }
    }

    #[test]
    fn conic_with_repeated_point_fails() {
        let pts = [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1], [2, 2, 2]].map(|p| p.map(Rational::from));
        assert!(matches!(conic_through(&pts), Err(Error::DegenerateFiveTuple(4))));
    }

    #[test]
    fn unconstrained_sextics() {
        assert_eq!(linear_system(6, &[]).dimension(), 28);
    }

    #[test]
    fn node_and_cusp() {
        let origin = PointP2::from_i64(0, 0, 1).unwrap();
        let xy = TernaryForm::monomial((1, 1, 0), q(1));
        let tc = tangent_cone(&xy, &origin);
        assert_eq!(tc.multiplicity, 2);
        assert_eq!(tc.ordinary_node, Some(true));
        assert!(tc.cone.unwrap().proportional(&BinaryForm::new(2, vec![q(0), q(1), q(0)]).unwrap()));

        let cusp = TernaryForm::from_terms(3, [((0, 2, 1), q(1)), ((3, 0, 0), q(-1))]).unwrap();
        let tc = tangent_cone(&cusp, &origin);
        assert_eq!(tc.multiplicity, 2);
        assert_eq!(tc.ordinary_node, Some(false));
        assert!(tc.cone.unwrap().proportional(&BinaryForm::new(2, vec![q(0), q(0), q(1)]).unwrap()));
    }

    #[test]
    fn off_curve_point_has_multiplicity_zero() {
        let f = TernaryForm::monomial((1, 1, 0), q(1));
        let tc = tangent_cone(&f, &PointP2::from_i64(1, 1, 1).unwrap());
        assert_eq!(tc.multiplicity, 0);
        assert!(tc.cone.is_none());
    }

    #[test]
    fn frame_map_hits_targets() {
        let src = [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1]].map(|p| p.map(Rational::from));
        let dst = [[1, 2, 3], [0, 1, 4], [5, 6, 0], [1, -1, 1]].map(|p| p.map(Rational::from));
        let g = frame_map(&src, &dst).unwrap();
        for i in 0..4 {
            assert!(same_point(&apply3(&g, &src[i]), &dst[i]));
        }
    }
}
