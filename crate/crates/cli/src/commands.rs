//! One function per subcommand. Commands never fail: every problem becomes
//! a failed or skipped check in the returned report.

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};
use sextic_core::coble::{
    character_report, coble_vector, quartic_invariant_under, reference_matrix, relation_quartic, relation_residual,
    schlaefli_sign_check, y_coordinates, ActionSampler, RelationVariant, CLASS_REPRESENTATIVES,
    REFERENCE_ACTION_ROWS,
};
use sextic_core::double_six::{conic_matrix, exceptional_conics, projective_equivalence, second_model};
use sextic_core::lattice::{double_sixes, lines_27, DoubleSix, PicClass};
use sextic_core::plane::{is_general_position, nodal_sextic_system, projective_stabilizer, quintic_system, Position};
use sextic_core::random::{random_config, random_nonzero, random_perm, random_projectivity, rng_for, Rng64};
use sextic_core::torsion::{
    certify, conic_product_pencil, node_profile, random_nodal_sextic, torsion_rank, CertifyOptions, Side,
    SmoothVerdict,
};
use sextic_core::{Config6, Perm, Rational, TernaryForm};

use crate::report::{Check, Report};

/// Everything a command needs besides its own options.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub config: Config6,
    /// Where the configuration came from, echoed in the report.
    pub source: String,
    pub seed: u64,
    pub trials: usize,
    pub prime_screen: bool,
}

impl RunConfig {
    fn inputs(&self) -> Value {
        json!({
            "source": self.source,
            "config": self.config,
            "seed": self.seed,
            "trials": self.trials,
            "prime_screen": self.prime_screen,
        })
    }
}

/// Independent random streams for the different trial families.
#[derive(Clone, Copy)]
enum Family {
    Dimensions = 1,
    Association = 2,
    Sign = 3,
    Relation = 4,
    Homomorphism = 5,
    Torsion = 6,
    Nodal = 7,
    Covariance = 8,
}

fn trial_rng(seed: u64, family: Family, trial: usize) -> Rng64 {
    rng_for(seed, ((family as u64) << 32) | trial as u64)
}

fn trial_config(seed: u64, family: Family, trial: usize) -> Config6 {
    random_config(&mut trial_rng(seed, family, trial))
}

type Outcome = std::result::Result<(), String>;

/// Runs `f` on every trial index; results come back in index order.
fn run_trials<F>(n: usize, f: F) -> Vec<Outcome>
where
    F: Fn(usize) -> Outcome + Sync + Send,
{
    (0..n).into_par_iter().map(f).collect()
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

#[derive(Serialize)]
struct TrialFailure {
    trial: usize,
    reason: String,
}

fn trial_check(name: &str, anchor: &str, what: &str, results: Vec<Outcome>) -> Check {
    let n = results.len();
    let failures: Vec<TrialFailure> = results
        .into_iter()
        .enumerate()
        .filter_map(|(trial, r)| r.err().map(|reason| TrialFailure { trial, reason }))
        .collect();
    match failures.first() {
        None => Check::new(name, anchor, true, format!("{n}/{n} {what}")),
        Some(first) => {
            let reason = format!(
                "{} of {n} {what} failed; first at trial {}: {}",
                failures.len(),
                first.trial,
                first.reason
            );
            Check::new(name, anchor, false, reason).with_detail(&failures)
        }
    }
}

const ANCHOR_GENERAL: &str = "six points are general: no three collinear and no conic through all six";
const ANCHOR_SEXTICS: &str = "h^0(-2K_S) = 10: sextics double at the six points form a 10-dimensional space";
const ANCHOR_QUINTICS: &str = "the second plane model |5L - 2E| is a net of quintics";
const ANCHOR_LINES: &str = "the cubic surface carries 27 lines";
const ANCHOR_DOUBLE_SIXES: &str = "the 72 plane models come in 36 pairs (double sixes)";
const ANCHOR_ASSOCIATION: &str = "contracting the six conics gives the associated six points; association is an involution";
const ANCHOR_PENCIL: &str = "eta_C is nontrivial 3-torsion iff the node data n_C is the base locus of a pencil of nodal sextics";
const ANCHOR_SIDES: &str = "the pencil conditions on E (tangent cones) and on F (conic residuals) are equivalent";
const ANCHOR_SMOOTH: &str = "the general member of the conic-product pencil is smooth away from the six nodes";
const ANCHOR_NONTRIVIAL: &str = "eta_C is nontrivial because no conic contains the six points";
const ANCHOR_RELATION: &str =
    "the Coble generators satisfy y5^2 = (y0y1 + y0y2 + y1y2 - y3y4)^2 - 4y0y1y2(y0 + y1 + y2 + y3 + y4)";
const ANCHOR_TABLE: &str = "published action of conjugacy class representatives on (x0, ..., x4)";
const ANCHOR_SIGN: &str = "x5 transforms by the sign representation of S6";
const ANCHOR_CHARACTER: &str = "(x0, ..., x4) spans the irreducible U5, the outer twist of the standard representation";
const ANCHOR_INVARIANT: &str = "the quartic relation is S6-invariant";
const ANCHOR_SCHLAEFLI: &str = "association fixes x0, ..., x4 and sends x5 to -x5";
const ANCHOR_COVARIANCE: &str = "Coble generators are SL3 invariants of weights (1,1,1,1,1,2)";
const ANCHOR_PARAMETERS: &str = "4 (six points mod PGL3) + 4 (classes in P^4) + 1 (member of P^1) = 9 = dim R_{4,3}";

const PENCIL_NOTE: &str = "the extension class in P(H^1(O_S(-E))) is represented by the pencil it determines; \
    no cohomology group is computed";

fn position_reason(p: &Position) -> String {
    match p {
        Position::General => "general position".into(),
        Position::Collinear { triple } => {
            format!("x{}, x{}, x{} are collinear", triple[0], triple[1], triple[2])
        }
        Position::OnConic { conic } => format!("all six points lie on the conic {conic}"),
    }
}

fn position_check(c: &Config6) -> (Check, bool) {
    let pos = is_general_position(c);
    let general = pos.is_general();
    let check = Check::new("general_position", ANCHOR_GENERAL, general, position_reason(&pos)).with_detail(&pos);
    (check, general)
}

pub fn check_position(run: &RunConfig) -> Report {
    let mut report = Report::new("check-position", run.inputs());
    report.push(position_check(&run.config).0);
    report
}

pub fn conics(run: &RunConfig) -> Report {
    let mut report = Report::new("conics", run.inputs());
    let (check, general) = position_check(&run.config);
    report.push(check);
    if !general {
        report.push(Check::skip("conic_incidence", ANCHOR_DOUBLE_SIXES, "needs general position"));
        return report;
    }
    let c = &run.config;
    let conics = match exceptional_conics(c) {
        Ok(q) => q,
        Err(e) => {
            report.push(Check::new("conic_incidence", ANCHOR_DOUBLE_SIXES, false, e.to_string()));
            return report;
        }
    };
    let incidence = (1..=6).all(|i| (1..=6).all(|j| conics[i - 1].eval(c.rep(j)).is_zero() == (i != j)));
    report.push(Check::new(
        "conic_incidence",
        ANCHOR_DOUBLE_SIXES,
        incidence,
        "f_i vanishes at x_j exactly when j != i",
    ));
    let smooth = conics
        .iter()
        .all(|q| conic_matrix(q).determinant().map(|d| !d.is_zero()).unwrap_or(false));
    report.push(Check::new(
        "conics_smooth",
        ANCHOR_DOUBLE_SIXES,
        smooth,
        "every f_i has a nonsingular symmetric matrix",
    ));
    report.payload = json!({ "conics": conics });
    report
}

pub fn second_model_cmd(run: &RunConfig) -> Report {
    let mut report = Report::new("second-model", run.inputs());
    let (check, general) = position_check(&run.config);
    report.push(check);
    if !general {
        report.push(Check::skip("associated_configuration", ANCHOR_ASSOCIATION, "needs general position"));
        return report;
    }
    let c = &run.config;
    report.push({
        let dim = quintic_system(c).dimension();
        Check::new("quintic_net", ANCHOR_QUINTICS, dim == 3, format!("dimension {dim}"))
    });
    let realization = match second_model(c) {
        Ok(r) => r,
        Err(e) => {
            report.push(Check::new("associated_configuration", ANCHOR_ASSOCIATION, false, e.to_string()));
            return report;
        }
    };
    let assoc = &realization.associated;
    let assoc_pos = is_general_position(assoc);
    report.push(Check::new(
        "associated_general",
        ANCHOR_ASSOCIATION,
        assoc_pos.is_general(),
        position_reason(&assoc_pos),
    ));
    let back = second_model(assoc).map(|r| r.associated);
    let involution = back
        .as_ref()
        .map(|b| projective_equivalence(c, b, true).is_some())
        .unwrap_or(false);
    report.push(Check::new(
        "association_involution",
        ANCHOR_ASSOCIATION,
        involution,
        match &back {
            Ok(_) if involution => "associating twice returns the input up to a projectivity, labels kept".to_string(),
            Ok(_) => "associating twice does not return the input".to_string(),
            Err(e) => e.to_string(),
        },
    ));
    report.payload = json!({
        "associated": assoc,
        "quintic_basis": realization.quintic_basis,
        "projectively_equivalent_to_input": projective_equivalence(c, assoc, false).is_some(),
    });
    report
}

pub fn lattice() -> Report {
    let mut report = Report::new("lattice", Value::Null);
    let lines = lines_27();
    report.push(Check::new("lines", ANCHOR_LINES, lines.len() == 27, format!("{} classes with D^2 = K.D = -1", lines.len())));
    let ds = double_sixes();
    let standard = ds.contains(&DoubleSix::standard());
    report.push(Check::new(
        "double_sixes",
        ANCHOR_DOUBLE_SIXES,
        ds.len() == 36 && standard && ds.iter().all(DoubleSix::is_valid),
        format!("{} double sixes, standard (E; F) {}", ds.len(), if standard { "present" } else { "missing" }),
    ));
    let k = PicClass::canonical();
    report.push(Check::new("canonical_square", "K_S^2 = 3", k.square() == 3, format!("K^2 = {}", k.square())));
    report.payload = json!({
        "lines": lines.iter().map(|l| json!({"name": l.line_name(), "class": l})).collect::<Vec<_>>(),
    });
    report
}

/// Which sextic the torsion command certifies.
#[derive(Clone, Debug)]
pub enum TorsionMode {
    /// First member `f4f5f6 + k f1f2f3` with six ordinary nodes.
    Pencil,
    /// `lambda f4f5f6 + mu f1f2f3`.
    Member(Rational, Rational),
    Form(TernaryForm),
    /// Seeded random member of the full nodal system.
    RandomNodal,
}

pub fn torsion(run: &RunConfig, mode: &TorsionMode) -> Report {
    let mut report = Report::new("torsion", run.inputs());
    report.notes.push(PENCIL_NOTE.into());
    let c = &run.config;
    let form = match mode {
        TorsionMode::Pencil | TorsionMode::Member(..) => {
            let pencil = match conic_product_pencil(c) {
                Ok(p) => p,
                Err(e) => {
                    report.push(Check::new("conic_product_pencil", ANCHOR_PENCIL, false, e.to_string()));
                    return report;
                }
            };
            match mode {
                TorsionMode::Member(l, m) => pencil.member(l, m),
                _ => match pencil.first_nodal_member(c) {
                    Some((k, s)) => {
                        report.notes.push(format!("member f4f5f6 + {k} f1f2f3"));
                        s.form
                    }
                    None => {
                        report.push(Check::new("conic_product_pencil", ANCHOR_PENCIL, false, "no member with six ordinary nodes"));
                        return report;
                    }
                },
            }
        }
        TorsionMode::Form(f) => f.clone(),
        TorsionMode::RandomNodal => random_nodal_sextic(c, &mut rng_for(run.seed, 0)).form,
    };
    let cert = match certify(c, &form, CertifyOptions { prime_screen: run.prime_screen }) {
        Ok(cert) => cert,
        Err(e) => {
            report.push(Check::new("certificate", ANCHOR_PENCIL, false, e.to_string()));
            return report;
        }
    };
    let (general_check, _) = position_check(c);
    report.push(general_check);
    report.push(match &cert.node_diagnosis {
        None => Check::new("ordinary_nodes", ANCHOR_PENCIL, true, "six ordinary nodes at the configuration"),
        Some(d) => Check::new("ordinary_nodes", ANCHOR_PENCIL, false, d.to_string()).with_detail(d),
    });
    report.push(match cert.rank_e {
        Some(r) => Check::new("rank_e", ANCHOR_PENCIL, r == 2, match r {
            2 => "matching space on E is a pencil".to_string(),
            _ => format!("rank_E = {r}: eta_C is not 3-torsion"),
        }),
        None => Check::skip("rank_e", ANCHOR_PENCIL, "no node profile"),
    });
    report.push(match (cert.rank_e, cert.rank_f) {
        (Some(e), Some(f)) => Check::new("rank_f", ANCHOR_SIDES, e == f, format!("rank_F = {f}, rank_E = {e}")),
        _ => Check::skip("rank_f", ANCHOR_SIDES, "needs six ordinary nodes and general position"),
    });
    report.push(match &cert.smooth_elsewhere {
        Some(SmoothVerdict::Certified { attempt, coprimality_prime, .. }) => Check::new(
            "smooth_elsewhere",
            ANCHOR_SMOOTH,
            true,
            match coprimality_prime {
                Some(p) => format!("certified in chart {attempt}, coprimality confirmed modulo {p}"),
                None => format!("certified in chart {attempt} over Q"),
            },
        ),
        Some(SmoothVerdict::NotCertified { reason }) => Check::new("smooth_elsewhere", ANCHOR_SMOOTH, false, reason.clone()),
        None => Check::skip("smooth_elsewhere", ANCHOR_SMOOTH, "needs six ordinary nodes and general position"),
    });
    report.push(Check::new(
        "eta_nontrivial",
        ANCHOR_NONTRIVIAL,
        cert.eta_nontrivial,
        if cert.eta_nontrivial { "no conic through the six points" } else { "configuration is special" },
    ));
    report.push(parameter_count_check());
    report.push(Check::new(
        "certificate",
        ANCHOR_PENCIL,
        cert.accepted,
        if cert.accepted { "accepted".to_string() } else { format!("rejected: {}", cert.diagnosis.join("; ")) },
    ));
    report.payload = serde_json::to_value(&cert).expect("certificate serializes");
    report
}

fn parameter_count_check() -> Check {
    let configurations = 2 * 6 - 8;
    let classes = 4;
    let members = 1;
    let genus = 4;
    let total = configurations + classes + members;
    Check::new(
        "parameter_count",
        ANCHOR_PARAMETERS,
        total == 3 * genus - 3,
        format!("{configurations} + {classes} + {members} = {total}"),
    )
}

pub fn coble(run: &RunConfig) -> Report {
    let mut report = Report::new("coble", run.inputs());
    let v = coble_vector(&run.config);
    let zero: Vec<String> = (0..5).filter(|&j| v.x[j].is_zero()).map(|j| format!("x{j} = 0")).collect();
    report.push(Check::new(
        "nondegenerate",
        ANCHOR_COVARIANCE,
        zero.is_empty(),
        if zero.is_empty() {
            "x0, ..., x4 all nonzero".to_string()
        } else {
            format!("degenerate configuration: {}", zero.join(", "))
        },
    ));
    let plus = relation_residual(&v, RelationVariant::Plus);
    let minus = relation_residual(&v, RelationVariant::Minus);
    report.push(Check::new("relation", ANCHOR_RELATION, plus.is_zero(), format!("residual {plus}")));
    report.payload = json!({
        "x": v.x,
        "y": y_coordinates(&v.x),
        "representatives": v.representatives,
        "residual_plus": plus,
        "residual_minus": minus,
    });
    report
}

fn table_checks(sampler: &ActionSampler, report: &mut Report) {
    for (name, rows) in REFERENCE_ACTION_ROWS {
        let perm: Perm = name.parse().expect("literal permutation");
        report.push(match sampler.record(&perm) {
            Ok(r) => {
                let ok = r.matrix == reference_matrix(&rows) && r.sign == perm.sign();
                Check::new(&format!("table {name}"), ANCHOR_TABLE, ok, if ok {
                    "matrix reproduced entry for entry; x5 sign matches".to_string()
                } else {
                    format!("computed {:?}, sign {}", r.matrix, r.sign)
                })
            }
            Err(e) => Check::new(&format!("table {name}"), ANCHOR_TABLE, false, e.to_string()),
        });
    }
}

fn sign_check(sampler: &ActionSampler) -> Check {
    let bad: Vec<String> = Perm::all()
        .par_iter()
        .filter_map(|p| match sampler.record(p) {
            Ok(r) if r.sign == p.sign() => None,
            Ok(r) => Some(format!("{p}: sign {}", r.sign)),
            Err(e) => Some(e.to_string()),
        })
        .collect();
    Check::new(
        "x5_sign",
        ANCHOR_SIGN,
        bad.is_empty(),
        if bad.is_empty() { "x5 -> sgn(s) x5 for all 720 permutations".to_string() } else { bad.join("; ") },
    )
}

fn homomorphism_check(sampler: &ActionSampler, seed: u64, pairs: usize) -> Check {
    let results = run_trials(pairs, |i| {
        let mut rng = trial_rng(seed, Family::Homomorphism, i);
        let (s, t) = (random_perm(&mut rng), random_perm(&mut rng));
        let rec = |p: &Perm| sampler.record(p).map_err(|e| e.to_string());
        let (ms, mt, mst) = (rec(&s)?, rec(&t)?, rec(&s.then(&t))?);
        ensure(mst.matrix == &ms.matrix * &mt.matrix && mst.sign == ms.sign * mt.sign, || {
            format!("M({s} then {t}) != M({s}) M({t})")
        })
    });
    trial_check("homomorphism", ANCHOR_TABLE, "permutation pairs", results)
}

fn character_checks(report: &mut Report) {
    match character_report() {
        Ok(ch) => {
            report.push(Check::new(
                "character_irreducible",
                ANCHOR_CHARACTER,
                ch.inner_product.is_one(),
                format!("<chi, chi> = {}", ch.inner_product),
            ));
            report.push(Check::new(
                "character_outer_twist",
                ANCHOR_CHARACTER,
                ch.differs_from_standard,
                "character differs from fixed points minus one",
            ).with_detail(&ch.classes));
        }
        Err(e) => report.push(Check::new("character_irreducible", ANCHOR_CHARACTER, false, e.to_string())),
    }
}

fn invariance_check(sampler: &ActionSampler) -> Check {
    let q = relation_quartic(RelationVariant::Plus);
    let bad: Vec<&str> = REFERENCE_ACTION_ROWS
        .iter()
        .filter(|(name, _)| {
            let r = sampler.record(&name.parse().expect("literal permutation"));
            !r.and_then(|r| quartic_invariant_under(&q, &r)).unwrap_or(false)
        })
        .map(|(name, _)| *name)
        .collect();
    Check::new(
        "quartic_invariant",
        ANCHOR_INVARIANT,
        bad.is_empty(),
        if bad.is_empty() {
            "fixed by all ten class representatives (which generate S6)".to_string()
        } else {
            format!("not fixed by {}", bad.join(", "))
        },
    )
}

pub fn action_table(run: &RunConfig) -> Report {
    let mut report = Report::new("action-table", run.inputs());
    let sampler = match ActionSampler::new() {
        Ok(s) => s,
        Err(e) => {
            report.push(Check::new("action_sampler", ANCHOR_TABLE, false, e.to_string()));
            return report;
        }
    };
    table_checks(&sampler, &mut report);
    report.push(sign_check(&sampler));
    report.push(homomorphism_check(&sampler, run.seed, run.trials));
    character_checks(&mut report);
    report.push(invariance_check(&sampler));
    let records: Vec<_> = CLASS_REPRESENTATIVES
        .iter()
        .filter_map(|s| sampler.record(&s.parse().ok()?).ok())
        .collect();
    report.payload = json!({ "records": records });
    report
}

/// Relation oracle over the input and `n` random configurations.
fn relation_oracle(run: &RunConfig, n: usize, report: &mut Report) {
    let mut configs = vec![run.config.clone()];
    configs.extend((0..n).map(|i| trial_config(run.seed, Family::Relation, i)));
    let residuals: Vec<[bool; 2]> = configs
        .par_iter()
        .map(|c| {
            let v = coble_vector(c);
            RelationVariant::BOTH.map(|variant| relation_residual(&v, variant).is_zero())
        })
        .collect();
    let total = configs.len();
    let zeros: Vec<usize> = (0..2).map(|k| residuals.iter().filter(|r| r[k]).count()).collect();
    let certified: Vec<RelationVariant> = (0..2)
        .filter(|&k| zeros[k] == total)
        .map(|k| RelationVariant::BOTH[k])
        .collect();
    let decisive = certified.len() == 1;
    report.certified_relation = decisive.then(|| certified[0]);
    report.push(
        Check::new(
            "relation_oracle",
            ANCHOR_RELATION,
            decisive && certified[0] == RelationVariant::Plus,
            format!(
                "residual zero on {}/{total} configurations for +y0, {}/{total} for -y0",
                zeros[0], zeros[1]
            ),
        )
        .with_detail(json!({ "plus_zero": zeros[0], "minus_zero": zeros[1], "configurations": total })),
    );
}

fn torsion_trial(c: &Config6, prime_screen: bool) -> Outcome {
    let pencil = conic_product_pencil(c).map_err(|e| e.to_string())?;
    let (_, s) = pencil.first_nodal_member(c).ok_or("no nodal member")?;
    let cert = certify(c, &s.form, CertifyOptions { prime_screen }).map_err(|e| e.to_string())?;
    ensure(cert.accepted && cert.rank_e == Some(2) && cert.rank_f == Some(2), || cert.diagnosis.join("; "))
}

fn covariance_trial(seed: u64, i: usize) -> Outcome {
    let mut rng = trial_rng(seed, Family::Covariance, i);
    let c = random_config(&mut rng);
    let g = random_projectivity(&mut rng, 4);
    let moved = c.transform(&g);
    let det = g.determinant().map_err(|e| e.to_string())?;
    let (before, after) = (coble_vector(&c).x, coble_vector(&moved).x);
    let d2 = &det * &det;
    ensure((0..5).all(|j| after[j] == &d2 * &before[j]) && after[5] == &d2 * &d2 * &before[5], || {
        "GL3 covariance".into()
    })?;
    let factors: [Rational; 6] = std::array::from_fn(|_| random_nonzero(&mut rng, 7));
    let prod: Rational = factors.iter().cloned().product();
    let scaled = coble_vector(&c.rescale(&factors)).x;
    ensure((0..5).all(|j| scaled[j] == &prod * &before[j]) && scaled[5] == &prod * &prod * &before[5], || {
        "rescaling covariance".into()
    })?;
    ensure(
        nodal_sextic_system(&moved).dimension() == 10 && quintic_system(&moved).dimension() == 3,
        || "system dimensions moved".into(),
    )?;
    let s = random_nodal_sextic(&c, &mut rng);
    let g_inv = g.inverse().map_err(|e| e.to_string())?;
    let t = node_profile(&moved, &s.form.transform(&g_inv)).map_err(|d| d.to_string())?;
    let (r0, r1) = (
        torsion_rank(&s, Side::E).map_err(|e| e.to_string())?.dimension,
        torsion_rank(&t, Side::E).map_err(|e| e.to_string())?.dimension,
    );
    ensure(r0 == r1, || format!("rank_E {r0} became {r1}"))
}

/// The full suite. `trials` scales every batch of random configurations.
pub fn verify_paper(run: &RunConfig) -> Report {
    let mut report = Report::new("verify-paper", run.inputs());
    report.notes.push(PENCIL_NOTE.into());
    let (seed, n) = (run.seed, run.trials);
    let c = &run.config;

    let (check, general) = position_check(c);
    report.push(check);
    report.push(match projective_stabilizer(c) {
        Ok(stab) => Check::new(
            "trivial_stabilizer",
            ANCHOR_GENERAL,
            stab.len() == 1,
            format!("{} projective symmetries", stab.len()),
        ),
        Err(e) => Check::new("trivial_stabilizer", ANCHOR_GENERAL, false, e.to_string()),
    });

    let dims = run_trials(n, |i| {
        let c = trial_config(seed, Family::Dimensions, i);
        let (d6, d5) = (nodal_sextic_system(&c).dimension(), quintic_system(&c).dimension());
        ensure(d6 == 10 && d5 == 3, || format!("dimensions {d6} and {d5}"))
    });
    report.push(trial_check("system_dimensions", ANCHOR_SEXTICS, "configurations with dimensions 10 and 3", dims));

    let lat = lattice();
    report.checks.extend(lat.checks);

    let assoc = run_trials(n, |i| {
        let c = trial_config(seed, Family::Association, i);
        let once = second_model(&c).map_err(|e| e.to_string())?.associated;
        let twice = second_model(&once).map_err(|e| e.to_string())?.associated;
        ensure(projective_equivalence(&c, &twice, true).is_some(), || "not an involution".into())
    });
    report.push(trial_check("association_involution", ANCHOR_ASSOCIATION, "configurations", assoc));

    relation_oracle(run, 5 * n, &mut report);

    match ActionSampler::new() {
        Ok(sampler) => {
            table_checks(&sampler, &mut report);
            report.push(sign_check(&sampler));
            report.push(homomorphism_check(&sampler, seed, n));
            report.push(invariance_check(&sampler));
        }
        Err(e) => report.push(Check::new("action_sampler", ANCHOR_TABLE, false, e.to_string())),
    }
    character_checks(&mut report);

    let mut sign_configs = vec![c.clone()];
    sign_configs.extend((0..n).map(|i| trial_config(seed, Family::Sign, i)));
    let signs = run_trials(sign_configs.len(), |i| {
        let check = schlaefli_sign_check(&sign_configs[i]).map_err(|e| e.to_string())?;
        ensure(check.accepted, || format!("lambda = {}, x5 not negated", check.lambda))
    });
    report.push(trial_check("schlaefli_sign", ANCHOR_SCHLAEFLI, "configurations (input first)", signs));

    if general {
        report.push(match torsion_trial(c, run.prime_screen) {
            Ok(()) => Check::new("torsion_input", ANCHOR_PENCIL, true, "conic-product pencil member accepted, rank_E = rank_F = 2"),
            Err(e) => Check::new("torsion_input", ANCHOR_PENCIL, false, e),
        });
    } else {
        report.push(Check::skip("torsion_input", ANCHOR_PENCIL, "input is not in general position"));
    }
    let pencils = run_trials(n, |i| torsion_trial(&trial_config(seed, Family::Torsion, i), run.prime_screen));
    report.push(trial_check("torsion_pencils", ANCHOR_PENCIL, "conic-product pencil members accepted", pencils));
    let nodal = run_trials(n, |i| {
        let mut rng = trial_rng(seed, Family::Nodal, i);
        let c = random_config(&mut rng);
        let s = random_nodal_sextic(&c, &mut rng);
        let r = torsion_rank(&s, Side::E).map_err(|e| e.to_string())?.dimension;
        ensure(r == 1, || format!("rank_E = {r}"))
    });
    report.push(trial_check("torsion_generic", ANCHOR_PENCIL, "random nodal sextics with rank_E = 1", nodal));

    let cov = run_trials(n, |i| covariance_trial(seed, i));
    report.push(trial_check("covariance", ANCHOR_COVARIANCE, "random transports", cov));
    report.push(parameter_count_check());
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Verdict;

    #[test]
    fn trial_check_reports_the_first_failure() {
        let ok = trial_check("t", "claim", "cases", vec![Ok(()), Ok(())]);
        assert_eq!((ok.verdict, ok.reason.as_str()), (Verdict::Pass, "2/2 cases"));
        let bad = trial_check("t", "claim", "cases", vec![Ok(()), Err("x".into()), Err("y".into())]);
        assert_eq!(bad.verdict, Verdict::Fail);
        assert_eq!(bad.reason, "2 of 3 cases failed; first at trial 1: x");
    }

    #[test]
    fn parameter_count_is_nine() {
        let c = parameter_count_check();
        assert_eq!(c.verdict, Verdict::Pass);
        assert_eq!(c.reason, "4 + 4 + 1 = 9");
    }

    #[test]
    fn trial_streams_are_seeded() {
        assert_eq!(trial_config(7, Family::Torsion, 3), trial_config(7, Family::Torsion, 3));
        assert_ne!(trial_config(7, Family::Torsion, 3), trial_config(7, Family::Nodal, 3));
    }
}
