//! Nodal sextics through a six-point configuration and the pencil test for
//! 3-torsion of `eta_C = O_C(-K - L)`.
//!
//! For a sextic `C` with ordinary nodes at the six points, `eta_C` is a
//! nontrivial 3-torsion class exactly when the node data of `C` moves in a
//! pencil of nodal sextics. Two equivalent incarnations are computed:
//!
//! * side E: sextics of the nodal system whose tangent cone at every node
//!   is proportional to that of `C`;
//! * side F: sextics whose residual intersection with every conic `f_i`
//!   (after removing the forced double zeros at the five points on it) is
//!   proportional to that of `C`.
//!
//! Both are kernels of linear conditions on the 10-dimensional nodal
//! system; dimension 2 signals torsion, dimension 1 is the generic case.

use std::fmt;

use rand::Rng;
use serde::Serialize;

use crate::double_six::{exceptional_conics, parametrize_exceptional};
use crate::error::{Error, Result};
use crate::form::{restrict_all, TernaryForm, Var};
use crate::matrix::Matrix;
use crate::modp::SCREEN_PRIMES;
use crate::plane::{
    apply3, is_general_position, local_piece, nodal_sextic_system, same_point, tangent_cone, Config6, CurveSystem,
    PointP2, Position, Vec3,
};
use crate::poly::BinaryForm;
use crate::random::{random_projectivity, rng_for};
use crate::rational::{make_primitive, Rational};
use crate::resultant::resultant_eliminate;

/// Why a sextic fails to have six ordinary nodes at the configuration.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum NodeDiagnosis {
    WrongDegree { degree: u32 },
    ZeroForm,
    /// The form does not vanish at `x_label`.
    NotOnCurve { label: usize },
    /// The curve passes through `x_label` but is smooth there.
    Smooth { label: usize },
    HigherMultiplicity { label: usize, multiplicity: u32 },
    /// Double point with a degenerate tangent cone (a cusp or worse).
    NotOrdinary { label: usize },
}

impl fmt::Display for NodeDiagnosis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NodeDiagnosis::WrongDegree { degree } => write!(f, "form has degree {degree}, not 6"),
            NodeDiagnosis::ZeroForm => write!(f, "zero form"),
            NodeDiagnosis::NotOnCurve { label } => write!(f, "x{label} is not on the curve"),
            NodeDiagnosis::Smooth { label } => write!(f, "smooth point at x{label}"),
            NodeDiagnosis::HigherMultiplicity { label, multiplicity } => {
                write!(f, "multiplicity {multiplicity} at x{label}")
            }
            NodeDiagnosis::NotOrdinary { label } => write!(f, "degenerate tangent cone (cusp) at x{label}"),
        }
    }
}

/// A sextic with an ordinary node at each configuration point.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NodalSextic {
    pub config: Config6,
    pub form: TernaryForm,
    /// Tangent cone at `x_i` in the chart of [`crate::plane::chart_at`].
    pub cones: [BinaryForm; 6],
}

/// Checks for six ordinary nodes, reporting the first failure.
pub fn node_profile(c: &Config6, f: &TernaryForm) -> std::result::Result<NodalSextic, NodeDiagnosis> {
    if f.degree() != 6 {
        return Err(NodeDiagnosis::WrongDegree { degree: f.degree() });
    }
    if f.is_zero() {
        return Err(NodeDiagnosis::ZeroForm);
    }
    let mut cones = Vec::with_capacity(6);
    for label in 1..=6 {
        let tc = tangent_cone(f, &c.point(label));
        match tc.multiplicity {
            0 => return Err(NodeDiagnosis::NotOnCurve { label }),
            1 => return Err(NodeDiagnosis::Smooth { label }),
            2 => {}
            m => return Err(NodeDiagnosis::HigherMultiplicity { label, multiplicity: m }),
        }
        if tc.ordinary_node != Some(true) {
            return Err(NodeDiagnosis::NotOrdinary { label });
        }
        cones.push(tc.cone.expect("multiplicity 2 has a cone"));
    }
    Ok(NodalSextic {
        config: c.clone(),
        form: f.clone(),
        cones: cones.try_into().expect("six cones"),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Side {
    /// Tangent cones at the nodes (the exceptional curves `E_i`).
    E,
    /// Residual intersections with the conics (the curves `F_i`).
    F,
}

/// The sextics matching `C` on one side of the double six.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MatchingSpace {
    pub side: Side,
    pub dimension: usize,
    pub basis: Vec<TernaryForm>,
}

/// Rows expressing `sum_k c_k w_k` proportional to `target`, where all
/// vectors have three entries: one row per 2x2 minor.
fn proportionality_rows(target: &[Rational], images: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let n = target.len();
    let mut rows = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            rows.push(
                images
                    .iter()
                    .map(|w| &w[a] * &target[b] - &w[b] * &target[a])
                    .collect(),
            );
        }
    }
    rows
}

fn cone_coefficients(f: &TernaryForm, p: &PointP2) -> Vec<Rational> {
    local_piece(f, p, 2).coeffs().to_vec()
}

/// Residual quadric of `f` on conic `i`: the restriction divided by the
/// squares of the linear forms vanishing at the five configuration points.
pub fn residual_on_conic(c: &Config6, conics: &[TernaryForm; 6], i: usize, f: &TernaryForm) -> Result<BinaryForm> {
    Ok(residuals_on_conic(c, conics, i, std::slice::from_ref(f))?.remove(0))
}

fn residuals_on_conic(c: &Config6, conics: &[TernaryForm; 6], i: usize, forms: &[TernaryForm]) -> Result<Vec<BinaryForm>> {
    let param = parametrize_exceptional(c, conics, i)?;
    let forced = (1..=6)
        .filter(|&j| j != i)
        .map(|j| {
            let (s, t) = param.parameter_of(c.rep(j));
            BinaryForm::vanishing_at(&s, &t).pow(2)
        })
        .fold(BinaryForm::new(0, vec![Rational::one()])?, |acc, l| acc.mul(&l));
    restrict_all(forms, &param.coords)
        .iter()
        .map(|r| r.div_exact(&forced))
        .collect()
}

fn matching_space(
    s: &NodalSextic,
    side: Side,
    system: &CurveSystem,
    conics: Option<&[TernaryForm; 6]>,
) -> Result<MatchingSpace> {
    let mut rows = Vec::new();
    match side {
        Side::E => {
            for (i, cone) in s.cones.iter().enumerate() {
                let p = s.config.point(i + 1);
                let images: Vec<Vec<Rational>> = system.basis.iter().map(|g| cone_coefficients(g, &p)).collect();
                rows.extend(proportionality_rows(cone.coeffs(), &images));
            }
        }
        Side::F => {
            let owned;
            let conics = match conics {
                Some(c) => c,
                None => {
                    owned = exceptional_conics(&s.config)?;
                    &owned
                }
            };
            let mut forms = vec![s.form.clone()];
            forms.extend(system.basis.iter().cloned());
            for i in 1..=6 {
                let residuals = residuals_on_conic(&s.config, conics, i, &forms)?;
                let images: Vec<Vec<Rational>> = residuals[1..].iter().map(|r| r.coeffs().to_vec()).collect();
                rows.extend(proportionality_rows(residuals[0].coeffs(), &images));
            }
        }
    }
    for row in rows.iter_mut() {
        make_primitive(row);
    }
    let kernel = Matrix::from_rows(&rows).kernel_basis();
    let basis = kernel
        .iter()
        .map(|v| TernaryForm::combination(v, &system.basis).map(|f| f.primitive()))
        .collect::<Result<Vec<_>>>()?;
    Ok(MatchingSpace {
        side,
        dimension: basis.len(),
        basis,
    })
}

/// Dimension and basis of the matching space on `side`.
pub fn torsion_rank(s: &NodalSextic, side: Side) -> Result<MatchingSpace> {
    matching_space(s, side, &nodal_sextic_system(&s.config), None)
}

/// Pencil of sextics spanned by two independent forms.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Pencil {
    pub generators: [TernaryForm; 2],
}

impl Pencil {
    pub fn new(g0: TernaryForm, g1: TernaryForm) -> Result<Self> {
        let m = Matrix::from_rows(&[g0.coefficients(), g1.coefficients()]);
        if g0.degree() != g1.degree() || m.rank() != 2 {
            return Err(Error::Dimension("pencil generators are dependent".into()));
        }
        Ok(Pencil { generators: [g0, g1] })
    }

    /// `lambda * g0 + mu * g1`.
    pub fn member(&self, lambda: &Rational, mu: &Rational) -> TernaryForm {
        self.generators[0]
            .scale(lambda)
            .add(&self.generators[1].scale(mu))
            .expect("equal degrees")
    }

    /// First member `g0 + k g1`, `k = 1, 2, ...`, with six ordinary nodes.
    pub fn first_nodal_member(&self, c: &Config6) -> Option<(i64, NodalSextic)> {
        (1..=64).find_map(|k| {
            node_profile(c, &self.member(&Rational::one(), &Rational::from(k)))
                .ok()
                .map(|s| (k, s))
        })
    }
}

/// The pencil spanned by `f4 f5 f6` and `f1 f2 f3`.
pub fn conic_product_pencil(c: &Config6) -> Result<Pencil> {
    if let Position::Collinear { .. } | Position::OnConic { .. } = is_general_position(c) {
        return Err(Error::NotGeneralPosition("the conic-product pencil needs general position".into()));
    }
    let f = exceptional_conics(c)?;
    let g0 = f[3].mul(&f[4]).mul(&f[5]).primitive();
    let g1 = f[0].mul(&f[1]).mul(&f[2]).primitive();
    Pencil::new(g0, g1)
}

/// A random member of the nodal system with six ordinary nodes.
pub fn random_nodal_sextic(c: &Config6, rng: &mut impl Rng) -> NodalSextic {
    let system = nodal_sextic_system(c);
    loop {
        let coeffs: Vec<Rational> = (0..system.dimension())
            .map(|_| Rational::from(rng.gen_range(-9i64..=9)))
            .collect();
        let f = TernaryForm::combination(&coeffs, &system.basis).expect("equal degrees");
        if let Ok(s) = node_profile(c, &f) {
            return s;
        }
    }
}

/// Outcome of the search for singular points other than the nodes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum SmoothVerdict {
    /// The singular locus is exactly the given nodes. `coprimality_prime`
    /// records the prime whose gcd certified the final coprimality step,
    /// or `None` when that step ran over the rationals.
    Certified {
        attempt: usize,
        coordinate_change: Matrix,
        coprimality_prime: Option<u64>,
    },
    NotCertified { reason: String },
}

impl SmoothVerdict {
    pub fn is_certified(&self) -> bool {
        matches!(self, SmoothVerdict::Certified { .. })
    }
}

const SMOOTH_SEED: u64 = 0x5e71c;
const SMOOTH_ATTEMPTS: usize = 6;

enum ChartOutcome {
    Certified(Option<u64>),
    Retry(String),
}

fn to_binary(r: &TernaryForm) -> BinaryForm {
    let d = r.degree();
    let coeffs = (0..=d).map(|k| r.coeff((0, d - k, k))).collect();
    BinaryForm::new(d, coeffs).expect("length matches")
}

/// Binary forms without a common root in P^1. Tries the screening primes
/// first when `prime_screen` is set; a prime that preserves both degrees
/// and gives a constant gcd proves coprimality over Q.
fn coprime(a: &BinaryForm, b: &BinaryForm, prime_screen: bool) -> (bool, Option<u64>) {
    let (pa, pb) = (a.dehomogenize(), b.dehomogenize());
    let root_at_u0 = pa.degree() < Some(a.degree() as usize) && pb.degree() < Some(b.degree() as usize);
    if root_at_u0 {
        return (false, None);
    }
    if prime_screen {
        for &p in &SCREEN_PRIMES {
            let (Some(ra), Some(rb)) = (pa.mod_p(p), pb.mod_p(p)) else { continue };
            if ra.degree() != pa.degree() || rb.degree() != pb.degree() {
                continue;
            }
            if ra.gcd(&rb).degree() == Some(0) {
                return (true, Some(p));
            }
        }
    }
    (a.gcd(b).degree() == 0, None)
}

fn try_chart(f: &TernaryForm, nodes: &[PointP2], a: &Matrix, prime_screen: bool) -> Result<ChartOutcome> {
    let d = f.degree();
    let g = f.transform(a).primitive();
    if g.coeff((d, 0, 0)).is_zero() {
        return Ok(ChartOutcome::Retry("projection centre lies on the curve".into()));
    }
    let a_inv = a.inverse()?;
    let moved: Vec<Vec3> = nodes.iter().map(|p| apply3(&a_inv, p.coords())).collect();
    let proj: Vec<Vec3> = moved
        .iter()
        .map(|p| [Rational::zero(), p[1].clone(), p[2].clone()])
        .collect();
    for i in 0..proj.len() {
        for j in i + 1..proj.len() {
            if same_point(&proj[i], &proj[j]) {
                return Ok(ChartOutcome::Retry("two nodes share a projection fibre".into()));
            }
        }
    }
    let [gx, gy, gz] = g.gradient().map(|h| h.primitive());
    let r1 = to_binary(&resultant_eliminate(&gx, &gy, Var::X)?);
    let r2 = to_binary(&resultant_eliminate(&gx, &gz, Var::X)?);
    let node_product = proj.iter().fold(BinaryForm::new(0, vec![Rational::one()])?, |acc, p| {
        acc.mul(&BinaryForm::vanishing_at(&p[1], &p[2]))
    });
    let q1 = r1.div_exact(&node_product)?;
    let q2 = r2.div_exact(&node_product)?;
    if proj.iter().any(|p| q1.eval(&p[1], &p[2]).is_zero()) {
        return Ok(ChartOutcome::Retry("a node fibre carries another critical point".into()));
    }
    match coprime(&q1, &q2, prime_screen) {
        (true, prime) => Ok(ChartOutcome::Certified(prime)),
        (false, _) => Ok(ChartOutcome::Retry("partials share zeros off the nodes".into())),
    }
}

/// Certifies that the only singular points of `f` are `nodes`.
///
/// After a coordinate change putting the projection centre `(1:0:0)` off
/// the curve, `R1 = Res_x(f_x, f_y)` and `R2 = Res_x(f_x, f_z)` vanish at
/// the projection of every singular point. Writing `R_k = N Q_k` with `N`
/// the product of the node projections, the certificate is: no `Q1`
/// vanishes at a node projection (each node fibre holds one simple common
/// zero) and `Q1`, `Q2` are coprime (no other singular point anywhere).
pub fn certify_smooth_elsewhere(f: &TernaryForm, nodes: &[PointP2], prime_screen: bool) -> SmoothVerdict {
    let mut reason = String::from("no attempt made");
    for attempt in 0..SMOOTH_ATTEMPTS {
        let a = random_projectivity(&mut rng_for(SMOOTH_SEED, attempt as u64), 3);
        match try_chart(f, nodes, &a, prime_screen) {
            Ok(ChartOutcome::Certified(prime)) => {
                return SmoothVerdict::Certified {
                    attempt,
                    coordinate_change: a,
                    coprimality_prime: prime,
                }
            }
            Ok(ChartOutcome::Retry(r)) => reason = r,
            Err(e) => reason = e.to_string(),
        }
    }
    SmoothVerdict::NotCertified {
        reason: format!("{reason} (after {SMOOTH_ATTEMPTS} coordinate changes)"),
    }
}

#[derive(Clone, Copy, Debug)]
pub struct CertifyOptions {
    pub prime_screen: bool,
}

impl Default for CertifyOptions {
    fn default() -> Self {
        CertifyOptions { prime_screen: true }
    }
}

/// Evidence that `(C, eta_C)` is a smooth genus-4 curve with a nontrivial
/// 3-torsion bundle.
#[derive(Clone, Debug, Serialize)]
pub struct TorsionCertificate {
    pub config: Config6,
    pub form: TernaryForm,
    pub position: Position,
    /// Nontriviality of `eta_C` follows from no conic through the six points.
    pub eta_nontrivial: bool,
    pub cones: Option<[BinaryForm; 6]>,
    pub node_diagnosis: Option<NodeDiagnosis>,
    pub rank_e: Option<usize>,
    pub rank_f: Option<usize>,
    pub pencil: Option<Pencil>,
    pub smooth_elsewhere: Option<SmoothVerdict>,
    pub accepted: bool,
    pub diagnosis: Vec<String>,
}

/// Runs every check on the sextic `f` through `c`.
pub fn certify(c: &Config6, f: &TernaryForm, opts: CertifyOptions) -> Result<TorsionCertificate> {
    let position = is_general_position(c);
    let general = position.is_general();
    let mut cert = TorsionCertificate {
        config: c.clone(),
        form: f.clone(),
        position,
        eta_nontrivial: general,
        cones: None,
        node_diagnosis: None,
        rank_e: None,
        rank_f: None,
        pencil: None,
        smooth_elsewhere: None,
        accepted: false,
        diagnosis: Vec::new(),
    };
    if !general {
        cert.diagnosis.push("configuration is not in general position".into());
    }
    let sextic = match node_profile(c, f) {
        Ok(s) => s,
        Err(d) => {
            cert.diagnosis.push(format!("node profile: {d}"));
            cert.node_diagnosis = Some(d);
            return Ok(cert);
        }
    };
    cert.cones = Some(sextic.cones.clone());
    let system = nodal_sextic_system(c);
    let e_side = matching_space(&sextic, Side::E, &system, None)?;
    cert.rank_e = Some(e_side.dimension);
    if e_side.dimension == 2 {
        cert.pencil = Some(Pencil::new(e_side.basis[0].clone(), e_side.basis[1].clone())?);
    } else {
        cert.diagnosis.push(format!(
            "rank_E = {}: the node data does not move in a pencil, eta_C is not 3-torsion",
            e_side.dimension
        ));
    }
    if general {
        let conics = exceptional_conics(c)?;
        let f_side = matching_space(&sextic, Side::F, &system, Some(&conics))?;
        cert.rank_f = Some(f_side.dimension);
        if f_side.dimension != e_side.dimension {
            cert.diagnosis.push(format!(
                "rank_F = {} differs from rank_E = {}",
                f_side.dimension, e_side.dimension
            ));
        }
        let verdict = certify_smooth_elsewhere(f, &c.points(), opts.prime_screen);
        if let SmoothVerdict::NotCertified { reason } = &verdict {
            cert.diagnosis.push(format!("smoothness away from the nodes not certified: {reason}"));
        }
        cert.smooth_elsewhere = Some(verdict);
    }
    cert.accepted = general
        && cert.rank_e == Some(2)
        && cert.smooth_elsewhere.as_ref().is_some_and(SmoothVerdict::is_certified);
    Ok(cert)
}
