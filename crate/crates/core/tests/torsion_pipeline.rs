mod common;

use sextic_core::double_six::exceptional_conics;
use sextic_core::form::Var;
use sextic_core::plane::{linear_system, local_pieces, ref6, tangent_cone, uniform_conditions, PointP2};
use sextic_core::random::{random_config, random_projectivity, rng_for};
use sextic_core::resultant::resultant_eliminate;
use sextic_core::torsion::*;
use sextic_core::{Matrix, Rational, TernaryForm};

fn in_span(f: &TernaryForm, basis: &[TernaryForm]) -> bool {
    let mut rows: Vec<Vec<Rational>> = basis.iter().map(TernaryForm::coefficients).collect();
    let before = Matrix::from_rows(&rows).rank();
    rows.push(f.coefficients());
    Matrix::from_rows(&rows).rank() == before
}

#[test]
fn conic_pencil_member_on_ref6() {
    let c = ref6();
    let pencil = conic_product_pencil(&c).unwrap();
    let (_, s) = pencil.first_nodal_member(&c).unwrap();
    let e = torsion_rank(&s, Side::E).unwrap();
    let f = torsion_rank(&s, Side::F).unwrap();
    assert_eq!((e.dimension, f.dimension), (2, 2));
    for g in &pencil.generators {
        assert!(in_span(g, &e.basis));
        assert!(in_span(g, &f.basis));
    }
    // every member of the matching space has the same cones
    for g in &e.basis {
        for (i, cone) in s.cones.iter().enumerate() {
            // a zero quadratic piece satisfies the minor conditions too
            let q = local_pieces(g, &c.point(i + 1))[2].clone();
            assert!(q.is_zero() || q.proportional(cone));
        }
    }
    let cert = certify(&c, &s.form, CertifyOptions::default()).unwrap();
    assert!(cert.accepted, "{:?}", cert.diagnosis);
    assert!(cert.eta_nontrivial);
}

#[test]
fn pencil_cones_are_products_of_tangent_lines() {
    let c = ref6();
    let conics = exceptional_conics(&c).unwrap();
    let pencil = conic_product_pencil(&c).unwrap();
    let tangent = |q: &TernaryForm, i: usize| local_pieces(q, &c.point(i))[1].clone();
    for k in 1..=3 {
        let member = pencil.member(&Rational::one(), &Rational::from(k));
        for i in 1..=6usize {
            // the triple containing i contributes the cone; its other two conics pass through x_i
            let triple: [usize; 3] = if i <= 3 { [1, 2, 3] } else { [4, 5, 6] };
            let lines: Vec<usize> = triple.into_iter().filter(|&j| j != i).collect();
            let expected = tangent(&conics[lines[0] - 1], i).mul(&tangent(&conics[lines[1] - 1], i));
            let tc = tangent_cone(&member, &c.point(i));
            assert_eq!(tc.multiplicity, 2);
            assert!(tc.cone.unwrap().proportional(&expected), "x{i}, k = {k}");
        }
    }
}

#[test]
fn pencil_base_locus_lies_on_the_conics() {
    // move x1 away from the elimination centre (1:0:0)
    let a = Matrix::from_i64_rows(&[&[1, 2, 3], &[-1, 1, 4], &[2, -3, 1]]);
    let c = ref6().transform(&a);
    let conics = exceptional_conics(&c).unwrap();
    let pencil = conic_product_pencil(&c).unwrap();
    let [g0, g1] = &pencil.generators;
    let r = resultant_eliminate(g0, g1, Var::X).unwrap();
    let mut expected = TernaryForm::constant(Rational::one());
    for i in 3..6 {
        for j in 0..3 {
            expected = expected.mul(&resultant_eliminate(&conics[i], &conics[j], Var::X).unwrap());
        }
    }
    assert!(!r.is_zero());
    assert!(r.proportional(&expected));
}

#[test]
fn degenerate_member_is_rejected() {
    let c = ref6();
    let pencil = conic_product_pencil(&c).unwrap();
    let f = pencil.member(&Rational::zero(), &Rational::one());
    let cert = certify(&c, &f, CertifyOptions::default()).unwrap();
    assert!(!cert.accepted);
    assert_eq!(
        cert.node_diagnosis,
        Some(NodeDiagnosis::HigherMultiplicity { label: 4, multiplicity: 3 })
    );
    assert_eq!(cert.diagnosis, vec!["node profile: multiplicity 3 at x4".to_string()]);
}

#[test]
fn random_nodal_sextics_have_rank_one() {
    for k in 0..3 {
        let mut rng = rng_for(31, k);
        let c = if k == 0 { ref6() } else { random_config(&mut rng) };
        let s = random_nodal_sextic(&c, &mut rng);
        assert_eq!(torsion_rank(&s, Side::E).unwrap().dimension, 1);
        assert_eq!(torsion_rank(&s, Side::F).unwrap().dimension, 1);
    }
    let c = ref6();
    let s = random_nodal_sextic(&c, &mut rng_for(31, 9));
    let cert = certify(&c, &s.form, CertifyOptions::default()).unwrap();
    assert!(!cert.accepted);
    assert_eq!(cert.rank_e, Some(1));
    assert!(cert.smooth_elsewhere.unwrap().is_certified());
    assert!(cert.diagnosis[0].contains("not 3-torsion"));
}

#[test]
fn torsion_rank_is_projectively_invariant() {
    let mut rng = rng_for(32, 0);
    let c = random_config(&mut rng);
    let pencil = conic_product_pencil(&c).unwrap();
    let (_, s) = pencil.first_nodal_member(&c).unwrap();
    let g = random_projectivity(&mut rng, 3);
    let moved_c = c.transform(&g);
    let moved_f = s.form.transform(&g.inverse().unwrap());
    let moved = node_profile(&moved_c, &moved_f).unwrap();
    assert_eq!(torsion_rank(&moved, Side::E).unwrap().dimension, 2);
    let r = random_nodal_sextic(&c, &mut rng);
    let moved = node_profile(&moved_c, &r.form.transform(&g.inverse().unwrap())).unwrap();
    assert_eq!(torsion_rank(&moved, Side::E).unwrap().dimension, 1);
}

#[test]
fn seventh_node_blocks_smoothness_certificate() {
    let c = ref6();
    let extra = PointP2::from_i64(3, -1, 2).unwrap();
    let mut conditions = uniform_conditions(&c, 2);
    conditions.push((extra.clone(), 2));
    let system = linear_system(6, &conditions);
    assert_eq!(system.dimension(), 7);
    let coeffs: Vec<Rational> = (0..7).map(|k| Rational::from(2 * k as i64 - 5)).collect();
    let f = TernaryForm::combination(&coeffs, &system.basis).unwrap();
    node_profile(&c, &f).expect("six ordinary nodes at the configuration");
    assert_eq!(tangent_cone(&f, &extra).multiplicity, 2);
    let verdict = certify_smooth_elsewhere(&f, &c.points(), true);
    assert!(!verdict.is_certified());
    let cert = certify(&c, &f, CertifyOptions::default()).unwrap();
    assert!(!cert.accepted);
}

#[test]
fn prime_screen_does_not_change_the_verdict() {
    let c = ref6();
    let (_, s) = conic_product_pencil(&c).unwrap().first_nodal_member(&c).unwrap();
    let with = certify_smooth_elsewhere(&s.form, &c.points(), true);
    let without = certify_smooth_elsewhere(&s.form, &c.points(), false);
    assert!(with.is_certified() && without.is_certified());
    if let SmoothVerdict::Certified { coprimality_prime, .. } = without {
        assert_eq!(coprimality_prime, None);
    }
}

#[test]
fn certificate_serializes() {
    let c = ref6();
    let f = conic_product_pencil(&c).unwrap().member(&Rational::one(), &Rational::from(1));
    let cert = certify(&c, &f, CertifyOptions::default()).unwrap();
    let json = serde_json::to_value(&cert).unwrap();
    assert_eq!(json["accepted"], serde_json::Value::Bool(true));
    assert_eq!(json["rank_e"], 2);
    assert_eq!(json["smooth_elsewhere"]["verdict"], "certified");
}
