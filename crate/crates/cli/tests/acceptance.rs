//! Acceptance suite. Runs without the libtest harness so that each criterion
//! prints exactly one PASS/FAIL line; exits nonzero if any criterion fails.
//!
//! Equalities are exact. Time limits are the stated runtime targets.

use std::process::Command;
use std::time::{Duration, Instant};

use sextic_core::coble::{
    character_report, coble_vector, reference_matrix, relation_residual, schlaefli_sign_check, ActionSampler,
    RelationVariant, REFERENCE_ACTION_ROWS,
};
use sextic_core::double_six::{projective_equivalence, second_model};
use sextic_core::lattice::{double_sixes, lines_27, DoubleSix};
use sextic_core::plane::{nodal_sextic_system, quintic_system, ref6};
use sextic_core::random::{random_config, random_nonzero, random_perm, random_projectivity, rng_for, Rng64};
use sextic_core::torsion::{
    certify, conic_product_pencil, node_profile, random_nodal_sextic, torsion_rank, CertifyOptions, Side,
};
use sextic_core::{Config6, Perm, Rational};

const SEED: u64 = 20_260_101;

fn rng(family: u64, i: usize) -> Rng64 {
    rng_for(SEED, (family << 32) | i as u64)
}

fn config(family: u64, i: usize) -> Config6 {
    random_config(&mut rng(family, i))
}

type Outcome = Result<String, String>;

struct Criterion {
    id: u32,
    name: &'static str,
    limit: Option<Duration>,
    run: fn() -> Outcome,
}

fn dimensions() -> Outcome {
    for i in 0..20 {
        let c = config(1, i);
        let (d6, d5) = (nodal_sextic_system(&c).dimension(), quintic_system(&c).dimension());
        if (d6, d5) != (10, 3) {
            return Err(format!("configuration {i}: dimensions {d6} and {d5}"));
        }
    }
    Ok("20/20 configurations: sextics 10, quintics 3".into())
}

fn lattice() -> Outcome {
    let (lines, ds) = (lines_27(), double_sixes());
    let standard = ds.contains(&DoubleSix::standard());
    if lines.len() == 27 && ds.len() == 36 && standard {
        Ok("27 lines, 36 double sixes including (E; F)".into())
    } else {
        Err(format!("{} lines, {} double sixes, standard present: {standard}", lines.len(), ds.len()))
    }
}

const TORSION_LIMIT: Duration = Duration::from_secs(60);

fn torsion() -> Outcome {
    let mut slowest = Duration::ZERO;
    let mut configs = vec![ref6()];
    configs.extend((0..10).map(|i| config(3, i)));
    for (i, c) in configs.iter().enumerate() {
        let start = Instant::now();
        let pencil = conic_product_pencil(c).map_err(|e| format!("configuration {i}: {e}"))?;
        let (_, s) = pencil
            .first_nodal_member(c)
            .ok_or(format!("configuration {i}: no member with six ordinary nodes"))?;
        let cert = certify(c, &s.form, CertifyOptions::default()).map_err(|e| e.to_string())?;
        if !(cert.accepted && cert.rank_e == Some(2) && cert.rank_f == Some(2)) {
            return Err(format!("configuration {i}: {}", cert.diagnosis.join("; ")));
        }
        let elapsed = start.elapsed();
        if elapsed > TORSION_LIMIT {
            return Err(format!("configuration {i} took {elapsed:.1?}"));
        }
        slowest = slowest.max(elapsed);
    }
    for i in 0..10 {
        let mut r = rng(4, i);
        let c = random_config(&mut r);
        let s = random_nodal_sextic(&c, &mut r);
        let rank = torsion_rank(&s, Side::E).map_err(|e| e.to_string())?.dimension;
        if rank != 1 {
            return Err(format!("random nodal sextic {i}: rank_E = {rank}"));
        }
    }
    Ok(format!(
        "REF6 + 10 pencils accepted with rank_E = rank_F = 2 (slowest {slowest:.2?}); 10/10 random nodal sextics rank_E = 1"
    ))
}

fn relation() -> Outcome {
    let mut zero = [0usize; 2];
    for i in 0..100 {
        let v = coble_vector(&config(5, i));
        for (k, variant) in RelationVariant::BOTH.iter().enumerate() {
            zero[k] += relation_residual(&v, *variant).is_zero() as usize;
        }
    }
    let certified: Vec<_> = (0..2).filter(|&k| zero[k] == 100).collect();
    match certified.as_slice() {
        [k] => Ok(format!(
            "certified variant {:?}: 100/100 zero residuals; other variant {}/100",
            RelationVariant::BOTH[*k],
            zero[1 - k]
        )),
        _ => Err(format!("zero residuals: plus {}/100, minus {}/100", zero[0], zero[1])),
    }
}

fn action_table() -> Outcome {
    let sampler = ActionSampler::new().map_err(|e| e.to_string())?;
    for (name, rows) in REFERENCE_ACTION_ROWS {
        let perm: Perm = name.parse().map_err(|e| format!("{e}"))?;
        let r = sampler.record(&perm).map_err(|e| e.to_string())?;
        if r.matrix != reference_matrix(&rows) {
            return Err(format!("row {name} differs: {:?}", r.matrix));
        }
    }
    for i in 0..50 {
        let mut r = rng(6, i);
        let (s, t) = (random_perm(&mut r), random_perm(&mut r));
        let rec = |p: &Perm| sampler.record(p).map_err(|e| e.to_string());
        let (ms, mt, mst) = (rec(&s)?, rec(&t)?, rec(&s.then(&t))?);
        if mst.matrix != &ms.matrix * &mt.matrix {
            return Err(format!("homomorphism fails for {s}, {t}"));
        }
    }
    for p in Perm::all() {
        let r = sampler.record(&p).map_err(|e| e.to_string())?;
        if r.sign != p.sign() {
            return Err(format!("x5 sign wrong for {p}"));
        }
    }
    let ch = character_report().map_err(|e| e.to_string())?;
    if !ch.inner_product.is_one() {
        return Err(format!("<chi, chi> = {}", ch.inner_product));
    }
    Ok("10/10 rows, 50/50 homomorphism pairs, 720/720 signs, <chi, chi> = 1".into())
}

fn association() -> Outcome {
    for i in 0..20 {
        let c = config(7, i);
        let once = second_model(&c).map_err(|e| e.to_string())?.associated;
        let twice = second_model(&once).map_err(|e| e.to_string())?.associated;
        if projective_equivalence(&c, &twice, true).is_none() {
            return Err(format!("configuration {i}: association is not an involution"));
        }
    }
    for i in 0..50 {
        let check = schlaefli_sign_check(&config(8, i)).map_err(|e| e.to_string())?;
        if !check.accepted {
            return Err(format!("configuration {i}: x5 not negated (lambda = {})", check.lambda));
        }
    }
    Ok("20/20 involutions, 50/50 sign checks".into())
}

fn covariance() -> Outcome {
    for i in 0..20 {
        let mut r = rng(9, i);
        let c = random_config(&mut r);
        let g = random_projectivity(&mut r, 4);
        let moved = c.transform(&g);
        let det = g.determinant().map_err(|e| e.to_string())?;
        let d2 = &det * &det;
        let (x, y) = (coble_vector(&c).x, coble_vector(&moved).x);
        if (0..5).any(|j| y[j] != &d2 * &x[j]) || y[5] != &d2 * &d2 * &x[5] {
            return Err(format!("transport {i}: GL3 covariance fails"));
        }
        let factors: [Rational; 6] = std::array::from_fn(|_| random_nonzero(&mut r, 7));
        let prod: Rational = factors.iter().cloned().product();
        let z = coble_vector(&c.rescale(&factors)).x;
        if (0..5).any(|j| z[j] != &prod * &x[j]) || z[5] != &prod * &prod * &x[5] {
            return Err(format!("transport {i}: rescaling covariance fails"));
        }
        if nodal_sextic_system(&moved).dimension() != 10 || quintic_system(&moved).dimension() != 3 {
            return Err(format!("transport {i}: dimensions changed"));
        }
        let s = random_nodal_sextic(&c, &mut r);
        let g_inv = g.inverse().map_err(|e| e.to_string())?;
        let t = node_profile(&moved, &s.form.transform(&g_inv)).map_err(|d| d.to_string())?;
        let r0 = torsion_rank(&s, Side::E).map_err(|e| e.to_string())?.dimension;
        let r1 = torsion_rank(&t, Side::E).map_err(|e| e.to_string())?.dimension;
        if r0 != r1 {
            return Err(format!("transport {i}: rank_E {r0} became {r1}"));
        }
    }
    Ok("20/20 transports: GL3, rescaling, dimensions, rank_E".into())
}

fn verify_paper_json() -> Result<(Vec<u8>, i32), String> {
    let out = Command::new(env!("CARGO_BIN_EXE_sextic"))
        .args(["verify-paper", "--trials", "20", "--seed", "7", "--json"])
        .output()
        .map_err(|e| e.to_string())?;
    Ok((out.stdout, out.status.code().unwrap_or(-1)))
}

fn determinism() -> Outcome {
    let (a, code) = verify_paper_json()?;
    let (b, _) = verify_paper_json()?;
    if a != b {
        return Err("two runs with seed 7 differ".into());
    }
    let report: serde_json::Value = serde_json::from_slice(&a).map_err(|e| e.to_string())?;
    if code != 0 {
        return Err(format!("verify-paper exited with {code}"));
    }
    let relation = &report["certified_relation"];
    if relation.is_null() {
        return Err("report lists no certified relation".into());
    }
    Ok(format!("{} identical bytes, exit 0, certified relation {relation}", a.len()))
}

fn main() {
    let criteria = [
        Criterion { id: 1, name: "dimension counts", limit: Some(Duration::from_secs(5)), run: dimensions },
        Criterion { id: 2, name: "lattice catalog", limit: Some(Duration::from_secs(1)), run: lattice },
        // the per-configuration limit is enforced inside
        Criterion { id: 3, name: "torsion flagship", limit: None, run: torsion },
        Criterion { id: 4, name: "relation oracle", limit: Some(Duration::from_secs(5)), run: relation },
        Criterion { id: 5, name: "S6 table", limit: Some(Duration::from_secs(30)), run: action_table },
        Criterion { id: 6, name: "association", limit: Some(Duration::from_secs(30)), run: association },
        Criterion { id: 7, name: "covariance suite", limit: Some(Duration::from_secs(10)), run: covariance },
        Criterion { id: 8, name: "determinism", limit: None, run: determinism },
    ];
    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let outcome = match (outcome, c.limit) {
            (Ok(msg), Some(limit)) if elapsed > limit => Err(format!("{msg}; over the {limit:?} limit")),
            (o, _) => o,
        };
        let limit = c.limit.map_or(String::new(), |l| format!(" / {l:?}"));
        match outcome {
            Ok(msg) => println!("PASS [{}] {}: {msg} ({elapsed:.2?}{limit})", c.id, c.name),
            Err(msg) => {
                failed += 1;
                println!("FAIL [{}] {}: {msg} ({elapsed:.2?}{limit})", c.id, c.name);
            }
        }
    }
    println!("acceptance: {}/{} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
